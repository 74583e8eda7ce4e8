use num_integer::Integer;
use proptest::prelude::*;
use tight_sfs::classifier::{classify_with, ClassifyOptions};
use tight_sfs::convex::{solid_torus_count, toric_annulus_count};
use tight_sfs::legendrian::{closed_form_count, enumerate_stein_structures, realizations};
use tight_sfs::seifert::{normalized_boundary_slope, pullback_boundary_slope, section_change};
use tight_sfs::surgery::{
    h1_order, h1_order_closed_form, h1_order_rational, integral_diagram, pipeline,
    presentation_matrix, rolfsen_twist, seifert_to_diagram, slam_dunk_expand,
};
use tight_sfs::{
    act, convergents, euler_number, eval_cf, farey_neighbors, fiber_data, neg_cf, CfMode, Error,
    Rational, SeifertInvariants, Slope, UnimodularMap,
};

fn fiber(max_p: i64) -> impl Strategy<Value = (i64, i64)> {
    (2..=max_p)
        .prop_flat_map(|p| (Just(p), 1..=2 * p))
        .prop_filter("coprime", |(p, q)| p.gcd(q) == 1)
}

fn invariants(max_p: i64) -> impl Strategy<Value = SeifertInvariants> {
    [fiber(max_p), fiber(max_p), fiber(max_p), fiber(max_p)]
        .prop_map(|pairs| SeifertInvariants::new(pairs).unwrap())
}

/// Words in `T^k = (1 k; 0 1)` and `S = (0 -1; 1 0)`, so det is always 1.
fn sl2z() -> impl Strategy<Value = UnimodularMap> {
    prop::collection::vec((-3i64..=3, any::<bool>()), 0..5).prop_map(|word| {
        word.into_iter().fold(UnimodularMap::IDENTITY, |m, (k, s)| {
            let t = UnimodularMap::new(1, k, 0, 1).unwrap();
            let g = if s {
                t.compose(&UnimodularMap::new(0, -1, 1, 0).unwrap())
            } else {
                t
            };
            m.compose(&g)
        })
    })
}

fn slope() -> impl Strategy<Value = Slope> {
    (-12i64..=12, 0i64..=12)
        .prop_filter("primitive", |(y, x)| y.gcd(x) == 1)
        .prop_map(|(y, x)| Slope::new(y, x).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn cf_round_trip(a in 1i64..=1_000_000, b in 1i64..=1_000_000) {
        let r = -Rational::new(a, b);
        let cf = neg_cf(r, CfMode::Relaxed).unwrap();
        prop_assert_eq!(eval_cf(&cf), r);
        prop_assert!(cf.a0() <= -1);
        prop_assert!(cf.tail().iter().all(|&x| x <= -2));
        if r < Rational::from_integer(-1) {
            let strict = neg_cf(r, CfMode::Strict).unwrap();
            prop_assert!(strict.coeffs().iter().all(|&x| x <= -2));
            prop_assert_eq!(eval_cf(&strict), r);
        } else {
            prop_assert!(matches!(neg_cf(r, CfMode::Strict), Err(Error::StrictModeImpossible(_))));
        }
    }

    #[test]
    fn act_is_an_action(m in sl2z(), n in sl2z(), s in slope(), t in slope()) {
        prop_assert_eq!(act(&m.compose(&n), s), act(&m, act(&n, s)));
        prop_assert_eq!(act(&m.inverse(), act(&m, s)), s);
        prop_assert_eq!(act(&UnimodularMap::IDENTITY, s), s);
        prop_assert_eq!(farey_neighbors(act(&m, s), act(&m, t)), farey_neighbors(s, t));
    }

    #[test]
    fn convergents_evaluate_prefixes((p, q) in fiber(50)) {
        let fd = fiber_data(p, q).unwrap();
        let c = convergents(&fd.cf);
        let coeffs = fd.cf.coeffs();
        for j in 0..coeffs.len() {
            let prefix = tight_sfs::NegContinuedFraction::new(coeffs[..=j].to_vec()).unwrap();
            prop_assert_eq!(Rational::new(-c.q[j], c.p[j]), eval_cf(&prefix));
            let (pm, qm) = if j == 0 { (0, 1) } else { (c.p[j - 1], c.q[j - 1]) };
            prop_assert_eq!(c.p[j] * qm - pm * c.q[j], 1);
        }
        prop_assert_eq!((c.p[coeffs.len() - 1], c.q[coeffs.len() - 1]), (p, q));
        prop_assert_eq!(p * fd.v - q * fd.u, 1);
    }

    #[test]
    fn boundary_slope_is_pullback((p, q) in fiber(50)) {
        let fd = fiber_data(p, q).unwrap();
        let s = normalized_boundary_slope(&fd);
        prop_assert_eq!(s, pullback_boundary_slope(&fd));
        // Pushing it forward lands on the integer floor(q/p).
        prop_assert_eq!(act(&fd.attaching_map, s), Slope::integer(Integer::div_floor(&q, &p)));
        prop_assert!(solid_torus_count(s).is_ok());
    }

    #[test]
    fn euler_number_permutation_invariant(inv in invariants(20), perm in Just([0usize, 1, 2, 3]).prop_shuffle()) {
        let f = inv.fibers;
        let permuted = SeifertInvariants { fibers: perm.map(|i| f[i]) };
        prop_assert_eq!(euler_number(&permuted), euler_number(&inv));
        // Independent route: -sum ceil(q/p).
        let e0: i64 = f.iter().map(|x| -Integer::div_ceil(&x.q, &x.p)).sum();
        prop_assert_eq!(euler_number(&inv), e0);
    }

    #[test]
    fn section_change_preserves_sum(slopes in [-9i64..9, -9i64..9, -9i64..9, -9i64..9], a in -5i64..5, b in -5i64..5, c in -5i64..5) {
        let shifts = [a, b, c, -a - b - c];
        let out = section_change(slopes, shifts).unwrap();
        prop_assert_eq!(out.iter().sum::<i64>(), slopes.iter().sum::<i64>());
        prop_assert!(matches!(section_change(slopes, [a, b, c, 1 - a - b - c]), Err(Error::BadShift(_))));
    }

    #[test]
    fn h1_invariant_under_moves(inv in invariants(12), twists in prop::collection::vec((1usize..=4, -3i64..=3), 1..6)) {
        let expected = h1_order_closed_form(&inv);
        let mut d = seifert_to_diagram(&inv);
        prop_assert_eq!(h1_order(&d), expected);
        for (id, k) in twists {
            match rolfsen_twist(&d, id, k) {
                Ok(next) => d = next,
                Err(Error::ZeroTwist | Error::NotRational(_)) => continue,
                Err(e) => return Err(TestCaseError::fail(e.to_string())),
            }
            prop_assert_eq!(h1_order(&d), expected);
            prop_assert_eq!(h1_order_rational(&d), expected);
        }
        for id in 1..=4 {
            let r = d.coefficient(id).unwrap();
            if !r.is_integer() && r < Rational::from_integer(-1) {
                d = slam_dunk_expand(&d, id).unwrap();
                prop_assert_eq!(h1_order(&d), expected);
            }
        }
        let pl = pipeline(&inv).unwrap();
        prop_assert!(pl.h1_trace().into_iter().all(|h| h == expected));
        let m = presentation_matrix(pl.last()).unwrap();
        for (i, row) in m.iter().enumerate() {
            prop_assert!(row.iter().enumerate().all(|(j, &x)| x == m[j][i]));
        }
    }

    #[test]
    fn realizations_symmetric(f in -40i64..=-2) {
        let r = realizations(f).unwrap();
        prop_assert_eq!(r.len() as i64, -f - 1);
        let mut neg: Vec<i64> = r.iter().map(|x| -x).collect();
        neg.reverse();
        prop_assert_eq!(neg, r);
    }

    #[test]
    fn solid_torus_twist_invariant(y in -30i64..=-2, x in 1i64..=30, k in -3i64..=3) {
        prop_assume!(y.gcd(&x) == 1);
        // Meridian twist (x, y) -> (x + k y, y) keeps the count while the slope stays negative.
        let x2 = x + k * y;
        prop_assume!(x2 > 0);
        let a = solid_torus_count(Slope::new(y, x).unwrap()).unwrap();
        let b = solid_torus_count(Slope::new(y, x2).unwrap()).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn toric_annulus_sl2z_invariant(s0 in slope(), s1 in slope(), m in sl2z()) {
        let shortcut = |a: Slope, b: Slope| a == Slope::integer(0) && b.x() == 1 && b.y() >= 0;
        let (t0, t1) = (act(&m, s0), act(&m, s1));
        prop_assume!(!shortcut(s0, s1) && !shortcut(t0, t1));
        prop_assert_eq!(toric_annulus_count(s0, s1).unwrap(), toric_annulus_count(t0, t1).unwrap());
    }

    #[test]
    fn report_permutation_invariant(inv in invariants(7), perm in Just([0usize, 1, 2, 3]).prop_shuffle()) {
        let opts = ClassifyOptions::default();
        let f = inv.fibers;
        let permuted = SeifertInvariants { fibers: perm.map(|i| f[i]) };
        let a = classify_with(&inv, opts).unwrap();
        let b = classify_with(&permuted, opts).unwrap();
        prop_assert_eq!(a.count_zero_torsion, b.count_zero_torsion);
        prop_assert_eq!(a.e0, b.e0);
        prop_assert_eq!(a.upper_bound_breakdown.shirt, b.upper_bound_breakdown.shirt);
        let st = a.upper_bound_breakdown.solid_torus_counts;
        prop_assert_eq!(perm.map(|i| st[i]), b.upper_bound_breakdown.solid_torus_counts);
    }

    #[test]
    fn json_round_trip(inv in invariants(6), explain in any::<bool>()) {
        let r = classify_with(&inv, ClassifyOptions { enumerate: true, explain }).unwrap();
        let text = serde_json::to_string(&r).unwrap();
        let back: tight_sfs::ClassificationReport = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, r);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn enumeration_matches_closed_form(inv in invariants(9)) {
        let d = integral_diagram(&inv).unwrap();
        let vectors = enumerate_stein_structures(&d).unwrap();
        // Oracle: a framing f component has -f - 1 realizations.
        let product: u128 = d.components.iter().map(|c| (-c.coefficient.to_integer() - 1) as u128).product();
        prop_assert_eq!(vectors.len() as u128, product);
        prop_assert_eq!(product, closed_form_count(&inv).unwrap());
        let mut rots: Vec<&Vec<i64>> = vectors.iter().map(|v| &v.rots).collect();
        rots.sort();
        rots.dedup();
        prop_assert_eq!(rots.len(), vectors.len());
    }
}

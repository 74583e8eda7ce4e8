//! Smith normal form over the integers, with the transforming matrices.

/// Dense integer matrix, row major.
pub type Matrix = Vec<Vec<i128>>;

/// `d = u * m * v` with `u`, `v` unimodular and `d` diagonal, every diagonal
/// entry nonnegative and dividing the next.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Snf {
    pub d: Matrix,
    pub u: Matrix,
    pub v: Matrix,
}

impl Snf {
    /// Diagonal of `d`.
    pub fn invariant_factors(&self) -> Vec<i128> {
        (0..self.d.len().min(self.d.first().map_or(0, Vec::len)))
            .map(|i| self.d[i][i])
            .collect()
    }
}

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| i128::from(i == j)).collect())
        .collect()
}

pub fn mul(a: &Matrix, b: &Matrix) -> Matrix {
    let (n, k, m) = (a.len(), b.len(), b.first().map_or(0, Vec::len));
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| (0..k).map(|t| a[i][t] * b[t][j]).sum())
                .collect()
        })
        .collect()
}

/// Determinant by fraction-free Bareiss elimination.
pub fn det(m: &Matrix) -> i128 {
    let n = m.len();
    let mut a = m.clone();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    if n == 0 {
        1
    } else {
        sign * a[n - 1][n - 1]
    }
}

pub fn smith_normal_form(m: &Matrix) -> Snf {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut d = m.clone();
    let mut u = identity(rows);
    let mut v = identity(cols);

    for t in 0..rows.min(cols) {
        // Pivot: smallest nonzero entry of the remaining block.
        let Some((pi, pj)) = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| d[i][j] != 0)
            .min_by_key(|&(i, j)| d[i][j].abs())
        else {
            break;
        };
        swap_rows(&mut d, &mut u, t, pi);
        swap_cols(&mut d, &mut v, t, pj);

        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                let q = d[i][t].div_euclid(d[t][t]);
                if q != 0 {
                    add_row(&mut d, &mut u, i, t, -q);
                }
                if d[i][t] != 0 {
                    swap_rows(&mut d, &mut u, t, i);
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                let q = d[t][j].div_euclid(d[t][t]);
                if q != 0 {
                    add_col(&mut d, &mut v, j, t, -q);
                }
                if d[t][j] != 0 {
                    swap_cols(&mut d, &mut v, t, j);
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // Divisibility: fold any offending row into the pivot row.
            let bad = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| d[i][j] % d[t][t] != 0);
            match bad {
                Some((i, _)) => add_row(&mut d, &mut u, t, i, 1),
                None => break,
            }
        }
        if d[t][t] < 0 {
            for x in d[t].iter_mut() {
                *x = -*x;
            }
            for x in u[t].iter_mut() {
                *x = -*x;
            }
        }
    }
    Snf { d, u, v }
}

/// Invariant factors alone, without the transforming matrices. Runs in
/// `i64` with checked arithmetic and redoes the work in `i128` on overflow.
pub fn invariant_factors(m: &Matrix) -> Vec<i128> {
    let small: Option<Vec<Vec<i64>>> = m
        .iter()
        .map(|r| r.iter().map(|&x| i64::try_from(x).ok()).collect())
        .collect();
    if let Some(f) = small.and_then(|mut a| diagonalize_i64(&mut a)) {
        return f.into_iter().map(i128::from).collect();
    }
    smith_normal_form(m).invariant_factors()
}

fn diagonalize_i64(d: &mut [Vec<i64>]) -> Option<Vec<i64>> {
    let rows = d.len();
    let cols = d.first().map_or(0, Vec::len);
    let n = rows.min(cols);
    for t in 0..n {
        // Smallest nonzero entry, stopping early at a unit.
        let mut best: Option<(usize, usize)> = None;
        'scan: for i in t..rows {
            for j in t..cols {
                let x = d[i][j].unsigned_abs();
                if x != 0 && best.is_none_or(|(a, b)| x < d[a][b].unsigned_abs()) {
                    best = Some((i, j));
                    if x == 1 {
                        break 'scan;
                    }
                }
            }
        }
        let Some((pi, pj)) = best else {
            return Some((0..n).map(|i| d[i][i]).collect());
        };
        d.swap(t, pi);
        for row in d.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                let q = d[i][t].div_euclid(d[t][t]);
                if q != 0 {
                    let (top, bottom) = d.split_at_mut(i);
                    for (x, &y) in bottom[0][t..].iter_mut().zip(&top[t][t..]) {
                        *x = x.checked_sub(q.checked_mul(y)?)?;
                    }
                }
                if d[i][t] != 0 {
                    d.swap(t, i);
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                let q = d[t][j].div_euclid(d[t][t]);
                if q != 0 {
                    for row in d.iter_mut().skip(t) {
                        row[j] = row[j].checked_sub(q.checked_mul(row[t])?)?;
                    }
                }
                if d[t][j] != 0 {
                    for row in d.iter_mut() {
                        row.swap(t, j);
                    }
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            if d[t][t].unsigned_abs() == 1 {
                break;
            }
            let bad = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| d[i][j] % d[t][t] != 0);
            match bad {
                Some((i, _)) => {
                    let (top, bottom) = d.split_at_mut(i);
                    for (x, &y) in top[t][t..].iter_mut().zip(&bottom[0][t..]) {
                        *x = x.checked_add(y)?;
                    }
                }
                None => break,
            }
        }
        d[t][t] = d[t][t].checked_abs()?;
    }
    Some((0..n).map(|i| d[i][i]).collect())
}

fn swap_rows(d: &mut Matrix, u: &mut Matrix, a: usize, b: usize) {
    d.swap(a, b);
    u.swap(a, b);
}

fn swap_cols(d: &mut Matrix, v: &mut Matrix, a: usize, b: usize) {
    for row in d.iter_mut() {
        row.swap(a, b);
    }
    for row in v.iter_mut() {
        row.swap(a, b);
    }
}

/// `row[dst] += k * row[src]`.
fn add_row(d: &mut Matrix, u: &mut Matrix, dst: usize, src: usize, k: i128) {
    for m in [d, u] {
        let s = m[src].clone();
        for (x, y) in m[dst].iter_mut().zip(s) {
            *x += k * y;
        }
    }
}

/// `col[dst] += k * col[src]`.
fn add_col(d: &mut Matrix, v: &mut Matrix, dst: usize, src: usize, k: i128) {
    for m in [d, v] {
        for row in m.iter_mut() {
            row[dst] += k * row[src];
        }
    }
}

//! Smith normal form and abelian invariants.

use super::presentation::Presentation;

pub type Matrix = Vec<Vec<i128>>;

/// `u * a * v = d` with `u`, `v` unimodular and `d` diagonal with a divisibility chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub u: Matrix,
    pub v: Matrix,
    pub d: Matrix,
}

fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| (i == j) as i128).collect())
        .collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix, inner: usize) -> Matrix {
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).map(|k| row[k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

/// Determinant by fraction-free Gaussian elimination (Bareiss).
pub fn determinant(m: &Matrix) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a = m.clone();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
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
    sign * a[n - 1][n - 1]
}

/// Smith normal form of an `rows x cols` integer matrix.
pub fn smith_normal_form(a: &[Vec<i64>], cols: usize) -> SmithForm {
    let rows = a.len();
    let mut d: Matrix = a
        .iter()
        .map(|r| {
            assert_eq!(r.len(), cols, "ragged matrix");
            r.iter().map(|&x| x as i128).collect()
        })
        .collect();
    let mut u = identity(rows);
    let mut v = identity(cols);

    for t in 0..rows.min(cols) {
        loop {
            let Some((pi, pj)) = min_nonzero(&d, t) else {
                return finish(a, cols, u, v, d);
            };
            d.swap(t, pi);
            u.swap(t, pi);
            swap_cols(&mut d, t, pj);
            swap_cols(&mut v, t, pj);

            let p = d[t][t];
            let mut clean = true;
            for i in t + 1..rows {
                let q = d[i][t].div_euclid(p);
                if q != 0 {
                    add_row(&mut d, i, t, -q);
                    add_row(&mut u, i, t, -q);
                }
                clean &= d[i][t] == 0;
            }
            for j in t + 1..cols {
                let q = d[t][j].div_euclid(p);
                if q != 0 {
                    add_col(&mut d, j, t, -q);
                    add_col(&mut v, j, t, -q);
                }
                clean &= d[t][j] == 0;
            }
            if !clean {
                continue;
            }
            // pivot must divide the remaining block
            let bad = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| d[i][j] % p != 0);
            match bad {
                Some((i, _)) => {
                    add_row(&mut d, t, i, 1);
                    add_row(&mut u, t, i, 1);
                }
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
    finish(a, cols, u, v, d)
}

fn finish(a: &[Vec<i64>], cols: usize, u: Matrix, v: Matrix, d: Matrix) -> SmithForm {
    let sf = SmithForm { u, v, d };
    verify(a, cols, &sf);
    sf
}

/// Panics unless `sf` is a valid Smith form of `a`.
fn verify(a: &[Vec<i64>], cols: usize, sf: &SmithForm) {
    let rows = a.len();
    let a: Matrix = a
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let ua = mat_mul(&sf.u, &a, rows);
    let uav = if rows == 0 {
        Vec::new()
    } else {
        mat_mul(&ua, &sf.v, cols)
    };
    assert_eq!(uav, sf.d, "Smith form does not reproduce U A V = D");
    assert_eq!(determinant(&sf.u).abs(), 1, "U is not unimodular");
    assert_eq!(determinant(&sf.v).abs(), 1, "V is not unimodular");
    let diag: Vec<i128> = (0..rows.min(cols)).map(|i| sf.d[i][i]).collect();
    for i in 0..rows {
        for j in 0..cols {
            if i != j {
                assert_eq!(sf.d[i][j], 0, "Smith form is not diagonal");
            }
        }
    }
    for w in diag.windows(2) {
        assert!(w[0] >= 0 && w[1] >= 0);
        if w[0] == 0 {
            assert_eq!(w[1], 0, "divisibility chain broken");
        } else {
            assert_eq!(w[1] % w[0], 0, "divisibility chain broken");
        }
    }
}

fn min_nonzero(d: &Matrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in d.iter().enumerate().skip(t) {
        for (j, &x) in row.iter().enumerate().skip(t) {
            if x != 0 && best.map_or(true, |(bi, bj)| x.abs() < d[bi][bj].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

fn swap_cols(m: &mut Matrix, a: usize, b: usize) {
    if a != b {
        for row in m.iter_mut() {
            row.swap(a, b);
        }
    }
}

/// row[i] += k * row[j]
fn add_row(m: &mut Matrix, i: usize, j: usize, k: i128) {
    let src = m[j].clone();
    for (x, s) in m[i].iter_mut().zip(src) {
        *x += k * s;
    }
}

/// col[i] += k * col[j]
fn add_col(m: &mut Matrix, i: usize, j: usize, k: i128) {
    for row in m.iter_mut() {
        row[i] += k * row[j];
    }
}

/// Invariant factors of the abelianization: `d1 | d2 | ...`, `0` for each free factor.
/// The trivial group gives an empty list.
pub fn abelian_invariants(pres: &Presentation) -> Vec<u64> {
    let cols = pres.generators() as usize;
    let m = pres.exponent_matrix();
    let sf = smith_normal_form(&m, cols);
    let rank = m.len().min(cols);
    let mut out: Vec<u64> = (0..rank)
        .map(|i| sf.d[i][i] as u64)
        .filter(|&x| x != 1)
        .collect();
    out.extend(std::iter::repeat(0).take(cols - rank));
    out
}

/// Order of the abelianization, `None` when infinite.
pub fn abelianization_order(invariants: &[u64]) -> Option<u64> {
    invariants
        .iter()
        .try_fold(1u64, |acc, &d| if d == 0 { None } else { Some(acc * d) })
}

/// Prime-power decomposition of invariant factors, free factors first, then
/// ascending prime powers.
pub fn elementary_divisors(invariants: &[u64]) -> Vec<u64> {
    let mut zeros = Vec::new();
    let mut out = Vec::new();
    for &d in invariants {
        if d == 0 {
            zeros.push(0);
            continue;
        }
        let mut n = d;
        let mut p = 2;
        while p * p <= n {
            if n % p == 0 {
                let mut q = 1;
                while n % p == 0 {
                    n /= p;
                    q *= p;
                }
                out.push(q);
            }
            p += 1;
        }
        if n > 1 {
            out.push(n);
        }
    }
    out.sort_unstable();
    zeros.extend(out);
    zeros
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn snf_small() {
        let a = vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]];
        let sf = smith_normal_form(&a, 3);
        assert_eq!(sf.d[0][0], 2);
        assert_eq!(sf.d[1][1], 6);
        assert_eq!(sf.d[2][2], 12);
    }

    #[test]
    fn invariants_of_simple_groups() {
        let free: Presentation = "2\n".parse().unwrap();
        assert_eq!(abelian_invariants(&free), vec![0, 0]);
        let c6: Presentation = "2\na1^2\na2^3\na1 a2 a1^-1 a2^-1\n".parse().unwrap();
        assert_eq!(abelian_invariants(&c6), vec![6]);
        assert_eq!(elementary_divisors(&[6]), vec![2, 3]);
        let trivial: Presentation = "1\na1\n".parse().unwrap();
        assert!(abelian_invariants(&trivial).is_empty());
    }

    #[test]
    fn elementary_divisor_ordering() {
        assert_eq!(elementary_divisors(&[15]), vec![3, 5]);
        assert_eq!(elementary_divisors(&[2, 12, 0]), vec![0, 2, 3, 4]);
    }
}

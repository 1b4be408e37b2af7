//! Small dense integer matrices and Smith normal form with transforms.

/// Row-major integer matrix.
pub type IntMat = Vec<Vec<i64>>;

pub fn identity(n: usize) -> IntMat {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

pub fn mat_mul(a: &IntMat, b: &IntMat) -> IntMat {
    let n = a.len();
    let k = b.len();
    let m = if k == 0 { 0 } else { b[0].len() };
    let mut c = vec![vec![0i64; m]; n];
    for i in 0..n {
        for l in 0..k {
            let x = a[i][l];
            if x == 0 {
                continue;
            }
            for j in 0..m {
                c[i][j] += x * b[l][j];
            }
        }
    }
    c
}

pub fn mat_vec(a: &IntMat, v: &[i64]) -> Vec<i64> {
    a.iter()
        .map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum())
        .collect()
}

pub fn mat_pow(a: &IntMat, e: u32) -> IntMat {
    let mut r = identity(a.len());
    for _ in 0..e {
        r = mat_mul(&r, a);
    }
    r
}

pub fn mat_sub(a: &IntMat, b: &IntMat) -> IntMat {
    a.iter()
        .zip(b)
        .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x - y).collect())
        .collect()
}

/// Rank over ℚ by fraction-free elimination.
pub fn rank_q(a: &IntMat) -> usize {
    let mut m: Vec<Vec<i128>> = a
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(rank, p);
        for i in 0..rows {
            if i != rank && m[i][c] != 0 {
                let (a0, b0) = (m[rank][c], m[i][c]);
                for j in 0..cols {
                    m[i][j] = m[i][j] * a0 - m[rank][j] * b0;
                }
                let g = m[i].iter().fold(0i128, |g, &x| gcd128(g, x));
                if g > 1 {
                    for x in m[i].iter_mut() {
                        *x /= g;
                    }
                }
            }
        }
        rank += 1;
    }
    rank
}

fn gcd128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// `u · a · v = d` with `u`, `v` unimodular and `d` diagonal, each diagonal
/// entry non-negative and dividing the next. `u_inv` is the inverse of `u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Snf {
    pub u: IntMat,
    pub u_inv: IntMat,
    pub d: IntMat,
    pub v: IntMat,
}

impl Snf {
    pub fn diagonal(&self) -> Vec<i64> {
        let k = self.d.len().min(self.d.first().map_or(0, |r| r.len()));
        (0..k).map(|i| self.d[i][i]).collect()
    }
}

/// Smith normal form with deterministic pivoting: at each stage the pivot
/// is the entry of least absolute value in the remaining block, first in
/// row-major order.
pub fn smith(a: &IntMat) -> Snf {
    let m = a.len();
    let n = if m == 0 { 0 } else { a[0].len() };
    let mut d = a.clone();
    let mut u = identity(m);
    let mut u_inv = identity(m);
    let mut v = identity(n);

    for t in 0..m.min(n) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..m {
                for j in t..n {
                    if d[i][j] != 0 && best.map_or(true, |(bi, bj)| d[i][j].abs() < d[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else { break };
            if pi != t {
                d.swap(pi, t);
                u.swap(pi, t);
                for row in u_inv.iter_mut() {
                    row.swap(pi, t);
                }
            }
            if pj != t {
                for row in d.iter_mut() {
                    row.swap(pj, t);
                }
                for row in v.iter_mut() {
                    row.swap(pj, t);
                }
            }
            let p = d[t][t];
            let mut clean = true;
            for i in t + 1..m {
                let q = d[i][t] / p;
                if q != 0 {
                    add_row(&mut d, i, t, -q);
                    add_row(&mut u, i, t, -q);
                    add_col(&mut u_inv, t, i, q);
                }
                if d[i][t] != 0 {
                    clean = false;
                }
            }
            for j in t + 1..n {
                let q = d[t][j] / p;
                if q != 0 {
                    add_col(&mut d, j, t, -q);
                    add_col(&mut v, j, t, -q);
                }
                if d[t][j] != 0 {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| d[i][j] % p != 0));
            if let Some(i) = bad {
                add_row(&mut d, t, i, 1);
                add_row(&mut u, t, i, 1);
                add_col(&mut u_inv, i, t, -1);
                continue;
            }
            break;
        }
        if d[t][t] < 0 {
            for x in d[t].iter_mut() {
                *x = -*x;
            }
            for x in u[t].iter_mut() {
                *x = -*x;
            }
            for row in u_inv.iter_mut() {
                row[t] = -row[t];
            }
        }
    }
    Snf { u, u_inv, d, v }
}

/// row[i] += c·row[j]
fn add_row(a: &mut IntMat, i: usize, j: usize, c: i64) {
    let rj = a[j].clone();
    for (x, y) in a[i].iter_mut().zip(rj) {
        *x += c * y;
    }
}

/// col[i] += c·col[j]
fn add_col(a: &mut IntMat, i: usize, j: usize, c: i64) {
    for row in a.iter_mut() {
        row[i] += c * row[j];
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn check(a: &IntMat) -> Snf {
        let s = smith(a);
        assert_eq!(mat_mul(&mat_mul(&s.u, a), &s.v), s.d);
        assert_eq!(mat_mul(&s.u, &s.u_inv), identity(a.len()));
        let diag = s.diagonal();
        for i in 0..s.d.len() {
            for j in 0..s.d[0].len() {
                if i != j {
                    assert_eq!(s.d[i][j], 0);
                }
            }
        }
        for w in diag.windows(2) {
            assert!(w[0] >= 0);
            if w[0] != 0 {
                assert_eq!(w[1] % w[0], 0);
            } else {
                assert_eq!(w[1], 0);
            }
        }
        s
    }

    #[test]
    fn known_example() {
        let a = vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]];
        assert_eq!(check(&a).diagonal(), vec![2, 6, 12]);
    }

    #[test]
    fn rank_q_basic() {
        assert_eq!(rank_q(&vec![vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rank_q(&identity(5)), 5);
    }

    proptest! {
        #[test]
        fn smith_invariants(entries in proptest::collection::vec(-9i64..10, 16)) {
            let a: IntMat = entries.chunks(4).map(|c| c.to_vec()).collect();
            let s = check(&a);
            let nonzero = s.diagonal().iter().filter(|&&x| x != 0).count();
            prop_assert_eq!(nonzero, rank_q(&a));
        }
    }
}

//! Exact sparse linear algebra over ℚ(ω).

use std::collections::BTreeMap;

use crate::cyclo::Cyc;

/// Sparse vector: column index → nonzero coefficient.
pub type SparseVec = BTreeMap<usize, Cyc>;

/// `v += c·w`, dropping entries that cancel.
pub fn axpy(v: &mut SparseVec, c: &Cyc, w: &SparseVec) {
    if c.is_zero() {
        return;
    }
    for (k, x) in w {
        let t = c.mul_ref(x);
        let e = v.entry(*k).or_insert_with(Cyc::zero);
        *e += &t;
        if e.is_zero() {
            v.remove(k);
        }
    }
}

pub fn scale(v: &SparseVec, c: &Cyc) -> SparseVec {
    if c.is_zero() {
        return SparseVec::new();
    }
    v.iter().map(|(k, x)| (*k, c.mul_ref(x))).collect()
}

/// Row echelon form built by incremental insertion. Pivot rows are
/// normalized to have leading coefficient 1.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the current pivots (forward reduction only).
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        let mut from = 0usize;
        loop {
            let next = v
                .range(from..)
                .map(|(k, _)| *k)
                .find(|k| self.rows.contains_key(k));
            let Some(c) = next else { break };
            let coeff = v[&c].clone();
            axpy(&mut v, &(-coeff), &self.rows[&c]);
            from = c + 1;
        }
        v
    }

    /// Insert `v`; returns true when it increased the rank.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let r = self.reduce(v);
        let Some((&lead, lc)) = r.iter().next() else {
            return false;
        };
        let inv = lc.inv().expect("nonzero leading coefficient");
        self.rows.insert(lead, scale(&r, &inv));
        true
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v.clone()).is_empty()
    }

    /// Pivot columns in increasing order.
    pub fn pivots(&self) -> Vec<usize> {
        self.rows.keys().copied().collect()
    }

    /// Fully reduced rows (each pivot column is zero in every other row).
    pub fn rref(&self) -> BTreeMap<usize, SparseVec> {
        let mut rows = self.rows.clone();
        let pivots: Vec<usize> = rows.keys().copied().collect();
        for &p in pivots.iter().rev() {
            let prow = rows[&p].clone();
            for &q in pivots.iter() {
                if q >= p {
                    break;
                }
                let c = rows[&q].get(&p).cloned();
                if let Some(c) = c {
                    let row = rows.get_mut(&q).unwrap();
                    axpy(row, &(-c), &prow);
                }
            }
        }
        rows
    }
}

/// Rank of a list of sparse vectors.
pub fn rank(vectors: &[SparseVec]) -> usize {
    let mut e = Echelon::new();
    for v in vectors {
        e.insert(v.clone());
    }
    e.rank()
}

/// Basis of `{x : A x = 0}` where `A` is given by its rows and has `ncols`
/// columns.
pub fn kernel(rows: &[SparseVec], ncols: usize) -> Vec<SparseVec> {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r.clone());
    }
    let rref = e.rref();
    let mut basis = Vec::new();
    for free in 0..ncols {
        if rref.contains_key(&free) {
            continue;
        }
        let mut x = SparseVec::new();
        x.insert(free, Cyc::one());
        for (p, row) in &rref {
            if let Some(c) = row.get(&free) {
                x.insert(*p, -c.clone());
            }
        }
        basis.push(x);
    }
    basis
}

/// Outcome of solving `A x = b`.
#[derive(Clone, Debug, PartialEq)]
pub enum Solution {
    None,
    Unique(SparseVec),
    /// A particular solution plus the dimension of the solution space.
    Many(SparseVec, usize),
}

/// Solve `A x = b` with `A` given by rows over `ncols` unknowns.
pub fn solve(rows: &[SparseVec], rhs: &[Cyc], ncols: usize) -> Solution {
    assert_eq!(rows.len(), rhs.len());
    let mut e = Echelon::new();
    for (r, b) in rows.iter().zip(rhs) {
        let mut aug = r.clone();
        if !b.is_zero() {
            aug.insert(ncols, b.clone());
        }
        e.insert(aug);
    }
    if e.rows.contains_key(&ncols) {
        return Solution::None;
    }
    let rref = e.rref();
    let mut x = SparseVec::new();
    for (p, row) in &rref {
        if let Some(c) = row.get(&ncols) {
            x.insert(*p, c.clone());
        }
    }
    let free = ncols - rref.len();
    if free == 0 {
        Solution::Unique(x)
    } else {
        Solution::Many(x, free)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(entries: &[(usize, i64)]) -> SparseVec {
        entries.iter().map(|&(k, a)| (k, Cyc::from_ints(a, 0))).collect()
    }

    #[test]
    fn rank_and_kernel() {
        let rows = vec![v(&[(0, 1), (1, 2)]), v(&[(0, 2), (1, 4)]), v(&[(2, 1)])];
        assert_eq!(rank(&rows), 2);
        let k = kernel(&rows, 3);
        assert_eq!(k.len(), 1);
        for r in &rows {
            let dot = k[0]
                .iter()
                .filter_map(|(c, x)| r.get(c).map(|y| x.mul_ref(y)))
                .fold(Cyc::zero(), |a, b| a + b);
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn solve_cases() {
        let rows = vec![v(&[(0, 1), (1, 1)]), v(&[(0, 1), (1, -1)])];
        let rhs = vec![Cyc::from_ints(3, 0), Cyc::from_ints(1, 0)];
        assert_eq!(solve(&rows, &rhs, 2), Solution::Unique(v(&[(0, 2), (1, 1)])));
        let rows = vec![v(&[(0, 1)]), v(&[(0, 1)])];
        let rhs = vec![Cyc::from_ints(1, 0), Cyc::from_ints(2, 0)];
        assert_eq!(solve(&rows, &rhs, 1), Solution::None);
        let rows = vec![v(&[(0, 1)])];
        match solve(&rows, &[Cyc::one()], 2) {
            Solution::Many(_, d) => assert_eq!(d, 1),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn omega_entries() {
        // rows (1, ω) and (ω², 1) are dependent: ω²·(1, ω) = (ω², 1).
        let mut a = SparseVec::new();
        a.insert(0, Cyc::one());
        a.insert(1, Cyc::omega());
        let mut b = SparseVec::new();
        b.insert(0, Cyc::omega_pow(2));
        b.insert(1, Cyc::one());
        assert_eq!(rank(&[a, b]), 1);
    }
}

//! Sp₄(𝔽₃) and the proportion of its elements with eigenvalue 1.

use std::collections::{HashMap, HashSet, VecDeque};

use num_rational::Ratio;
use rayon::prelude::*;
use serde::Serialize;

pub type Mat = [[u8; 4]; 4];

pub const ORDER: usize = 51840;

const J: Mat = [[0, 0, 1, 0], [0, 0, 0, 1], [2, 0, 0, 0], [0, 2, 0, 0]];

pub fn identity() -> Mat {
    let mut m = [[0; 4]; 4];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    m
}

pub fn mul(a: &Mat, b: &Mat) -> Mat {
    let mut c = [[0u8; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            c[i][j] = ((0..4).map(|k| a[i][k] as u32 * b[k][j] as u32).sum::<u32>() % 3) as u8;
        }
    }
    c
}

pub fn transpose(a: &Mat) -> Mat {
    let mut t = [[0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            t[i][j] = a[j][i];
        }
    }
    t
}

pub fn is_symplectic(m: &Mat) -> bool {
    mul(&mul(m, &J), &transpose(m)) == J
}

/// M⁻¹ = J⁻¹MᵀJ for symplectic M.
pub fn inverse(m: &Mat) -> Mat {
    let jinv = mul(&mul(&J, &J), &J);
    mul(&mul(&jinv, &transpose(m)), &J)
}

pub fn det(m: &Mat) -> u8 {
    let mut a = *m;
    let mut d = 1u32;
    for c in 0..4 {
        let Some(p) = (c..4).find(|&r| a[r][c] != 0) else {
            return 0;
        };
        if p != c {
            a.swap(p, c);
            d = d * 2 % 3;
        }
        d = d * a[c][c] as u32 % 3;
        let inv = a[c][c]; // 1⁻¹ = 1, 2⁻¹ = 2
        for r in c + 1..4 {
            let f = a[r][c] as u32 * inv as u32 % 3;
            for k in c..4 {
                a[r][k] = ((a[r][k] as u32 + 3 * 3 - f * a[c][k] as u32) % 3) as u8;
            }
        }
    }
    d as u8
}

pub fn has_eigenvalue_one(m: &Mat) -> bool {
    let mut t = *m;
    for (i, row) in t.iter_mut().enumerate() {
        row[i] = (row[i] + 2) % 3;
    }
    det(&t) == 0
}

pub fn encode(m: &Mat) -> u32 {
    m.iter().flatten().fold(0, |acc, &x| acc * 3 + x as u32)
}

pub fn decode(mut code: u32) -> Mat {
    let mut m = [[0; 4]; 4];
    for i in (0..16).rev() {
        m[i / 4][i % 4] = (code % 3) as u8;
        code /= 3;
    }
    m
}

fn omega(x: &[u8; 4], y: &[u8; 4]) -> u8 {
    ((x[0] as u32 * y[2] as u32 + x[1] as u32 * y[3] as u32 + 2 * x[2] as u32 * y[0] as u32 + 2 * x[3] as u32 * y[1] as u32) % 3) as u8
}

fn vector(code: u32) -> [u8; 4] {
    [(code / 27 % 3) as u8, (code / 9 % 3) as u8, (code / 3 % 3) as u8, (code % 3) as u8]
}

/// Strategy 1: every 4×4 matrix over 𝔽₃ with MJMᵀ = J, filtered row by row
/// (row i of M pairs with row j to J_ij).
pub fn enumerate_direct() -> Vec<Mat> {
    let vecs: Vec<[u8; 4]> = (0..81).map(vector).collect();
    let mut out: Vec<Mat> = (0..81usize)
        .into_par_iter()
        .flat_map_iter(|i0| {
            let vecs = &vecs;
            let mut local = Vec::new();
            let r0 = vecs[i0];
            for r1 in vecs.iter().filter(|r1| omega(&r0, r1) == J[0][1]) {
                for r2 in vecs.iter().filter(|r2| omega(&r0, r2) == J[0][2] && omega(r1, r2) == J[1][2]) {
                    for r3 in vecs
                        .iter()
                        .filter(|r3| omega(&r0, r3) == J[0][3] && omega(r1, r3) == J[1][3] && omega(r2, r3) == J[2][3])
                    {
                        let m = [r0, *r1, *r2, *r3];
                        if is_symplectic(&m) {
                            local.push(m);
                        }
                    }
                }
            }
            local
        })
        .collect();
    out.sort_by_key(encode);
    out
}

/// Transvections x ↦ x + ω(x, v)v for every nonzero v.
pub fn transvections() -> Vec<Mat> {
    (1..81)
        .map(|c| {
            let v = vector(c);
            let jv: Vec<u8> = (0..4).map(|i| ((0..4).map(|k| J[i][k] as u32 * v[k] as u32).sum::<u32>() % 3) as u8).collect();
            let mut t = identity();
            for i in 0..4 {
                for j in 0..4 {
                    t[i][j] = ((t[i][j] as u32 + jv[i] as u32 * v[j] as u32) % 3) as u8;
                }
            }
            t
        })
        .collect()
}

/// Strategy 2: closure of the transvections, split into conjugacy classes.
pub fn conjugacy_classes() -> (usize, Vec<(Mat, usize)>) {
    let gens = transvections();
    let mut seen: HashSet<u32> = HashSet::new();
    let mut queue = VecDeque::from([identity()]);
    seen.insert(encode(&identity()));
    let mut elems = Vec::new();
    while let Some(g) = queue.pop_front() {
        for h in &gens {
            let gh = mul(&g, h);
            if seen.insert(encode(&gh)) {
                queue.push_back(gh);
            }
        }
        elems.push(g);
    }
    let order = elems.len();
    let gen_inv: Vec<(Mat, Mat)> = gens.iter().map(|h| (*h, inverse(h))).collect();
    let mut class_of: HashMap<u32, usize> = HashMap::new();
    let mut classes = Vec::new();
    for g in &elems {
        if class_of.contains_key(&encode(g)) {
            continue;
        }
        let id = classes.len();
        let mut size = 0;
        let mut queue = VecDeque::from([*g]);
        class_of.insert(encode(g), id);
        while let Some(x) = queue.pop_front() {
            size += 1;
            for (h, hi) in &gen_inv {
                let y = mul(&mul(hi, &x), h);
                if let std::collections::hash_map::Entry::Vacant(e) = class_of.entry(encode(&y)) {
                    e.insert(id);
                    queue.push_back(y);
                }
            }
        }
        classes.push((*g, size));
    }
    (order, classes)
}

#[derive(Clone, Debug, Serialize)]
pub struct Sp4Report {
    pub order_direct: usize,
    pub order_generated: usize,
    pub same_elements: bool,
    pub classes: usize,
    pub eigen_one_direct: usize,
    pub eigen_one_classes: usize,
    pub density: String,
    pub identity_in_c: bool,
    pub pass: bool,
}

pub fn sp4_eigenvalue_density() -> Ratio<u64> {
    let all = enumerate_direct();
    let c = all.iter().filter(|m| has_eigenvalue_one(m)).count();
    assert!(c < all.len(), "C is a proper subset");
    Ratio::new(c as u64, all.len() as u64)
}

pub fn verify_sp4() -> Sp4Report {
    let direct = enumerate_direct();
    let eigen_one_direct = direct.iter().filter(|m| has_eigenvalue_one(m)).count();
    let (order_generated, classes) = conjugacy_classes();
    let eigen_one_classes: usize = classes.iter().filter(|(g, _)| has_eigenvalue_one(g)).map(|(_, s)| s).sum();
    let same_elements = {
        let gens = transvections();
        let from_gens: HashSet<u32> = closure(&gens);
        from_gens.len() == direct.len() && direct.iter().all(|m| from_gens.contains(&encode(m)))
    };
    let density = Ratio::new(eigen_one_direct as u64, direct.len().max(1) as u64);
    let identity_in_c = has_eigenvalue_one(&identity());
    let pass = direct.len() == ORDER
        && order_generated == ORDER
        && same_elements
        && eigen_one_direct == eigen_one_classes
        && eigen_one_direct > 0
        && eigen_one_direct < ORDER
        && identity_in_c;
    Sp4Report {
        order_direct: direct.len(),
        order_generated,
        same_elements,
        classes: classes.len(),
        eigen_one_direct,
        eigen_one_classes,
        density: format!("{}/{}", density.numer(), density.denom()),
        identity_in_c,
        pass,
    }
}

fn closure(gens: &[Mat]) -> HashSet<u32> {
    let mut seen = HashSet::from([encode(&identity())]);
    let mut stack = vec![identity()];
    while let Some(g) = stack.pop() {
        for h in gens {
            let gh = mul(&g, h);
            if seen.insert(encode(&gh)) {
                stack.push(gh);
            }
        }
    }
    seen
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_formula() {
        // q⁴(q² − 1)(q⁴ − 1) at q = 3
        assert_eq!(81 * 8 * 80, ORDER);
    }

    #[test]
    fn generators_are_symplectic() {
        for t in transvections() {
            assert!(is_symplectic(&t));
            assert_eq!(mul(&t, &inverse(&t)), identity());
            assert_eq!(det(&t), 1);
        }
    }

    #[test]
    fn encode_roundtrip() {
        for t in transvections() {
            assert_eq!(decode(encode(&t)), t);
        }
    }

    #[test]
    fn det_small_cases() {
        assert_eq!(det(&identity()), 1);
        let mut m = identity();
        m[0][0] = 2;
        assert_eq!(det(&m), 2);
        m[1] = m[0];
        assert_eq!(det(&m), 0);
    }

    #[test]
    fn two_strategies_agree() {
        let r = verify_sp4();
        assert!(r.pass, "{r:?}");
        let d = sp4_eigenvalue_density();
        assert_eq!(format!("{}/{}", d.numer(), d.denom()), r.density);
    }
}

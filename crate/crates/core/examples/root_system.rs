//! The 240 roots, the order-3 elliptic element w = c¹⁰ and the
//! coinvariant pairing on Λ/(w − 1)Λ.

use std::collections::BTreeMap;

use e8g3::rootsys::{build_root_system, elliptic_order3, rank_f3, sum_rule_failures, weyl_negative_exceptions};
use e8g3::vinberg::verify_s0_basis;

fn main() {
    let rs = build_root_system();
    println!("{} roots", rs.len());
    let s0: Vec<String> = rs.s0.iter().map(|&i| rs.root(i).to_string()).collect();
    println!("S0 = {}", s0.join(" "));

    let s = verify_s0_basis(&rs);
    println!("x-value 1 exactly on S0: {}, E8 Cartan: {}, no zero values: {}", s.matches_s0, s.is_e8_cartan, s.all_nonzero);

    let mut hist = BTreeMap::new();
    for j in 0..rs.len() {
        *hist.entry(rs.pair(0, j)).or_insert(0) += 1;
    }
    println!("pairings of {} with all roots: {hist:?}", rs.root(0));
    println!("sum-rule failures: {}", sum_rule_failures(&rs).len());

    let ell = elliptic_order3(&rs).expect("w = c^10 has order 3");
    println!("w - 1 elementary divisors {:?}", ell.snf.diagonal());
    println!("{} orbits of <w> on roots", ell.orbit_reps.len());
    for &r in ell.orbit_reps.iter().take(4) {
        let o = ell.orbit_of(r).map(|i| rs.root(i).to_string());
        println!("  {} -> class {}", o.join(", "), ell.root_class[r]);
    }
    println!("pairing Gram over F3 {:?}, rank {}", ell.gram, rank_f3(&ell.gram));
    let (checked, bad) = weyl_negative_exceptions(&rs, &ell);
    println!("sign rule on {checked} pairs with a root sum: {} exceptions", bad.len());
}

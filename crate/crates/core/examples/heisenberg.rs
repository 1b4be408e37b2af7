//! The Heisenberg group of order 243 on Λ/(w − 1)Λ and its 9-dimensional
//! representation.

use e8g3::heis::{Heis, HeisElement};
use e8g3::rootsys::{build_root_system, elliptic_order3};

fn main() {
    let rs = build_root_system();
    let ell = elliptic_order3(&rs).expect("elliptic element");
    let h = Heis::new(&ell).expect("nondegenerate pairing");
    let b = &h.basis;
    println!("symplectic basis e = [{}, {}], f = [{}, {}]", b.e[0], b.e[1], b.f[0], b.f[1]);

    let els = h.elements();
    println!("{} elements", els.len());
    let g = HeisElement { k: 0, cls: b.e[0] };
    let k = HeisElement { k: 0, cls: b.f[0] };
    println!("[e1, f1] = {:?}", h.commutator(&g, &k));

    let m = h.svn_rep(&g);
    println!("rho(e1) trace {}", m.trace());
    println!("group law failures {}", h.group_law_failures());
    println!("rho(gh) = rho(g)rho(h) failures over all pairs: {}", h.homomorphism_failures());
    println!("commutant dimension {}", h.commutant_dimension());
}

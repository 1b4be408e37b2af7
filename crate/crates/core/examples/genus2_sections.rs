//! The recorded section fixture: 240 sections of y² = x³ + f(t) over 𝔽_q,
//! their pairings and the 3-torsion classes they give on the Jacobian of
//! y² = f(x).
//!
//!     cargo run --release --example genus2_sections -- [fixture.json]

use e8g3::genus2::jacobian::{check_group_order, f7_fixture_curves};
use e8g3::genus2::sections::{verify_fixture, SectionFixture, Surface};

fn main() {
    let fx = match std::env::args().nth(1) {
        Some(p) => SectionFixture::parse(&std::fs::read_to_string(p).expect("readable")).expect("valid fixture"),
        None => SectionFixture::embedded(),
    };
    let surf = Surface::new(fx.poly());
    let secs = surf.find_sections();
    println!("q = {}, f = {}, {} sections", fx.q, fx.poly(), secs.len());
    let s = &secs[0];
    println!("first section a = {:?}, b = {:?}", s.a, s.b);
    let curve = surf.curve();
    let d = surf.divisor(s);
    println!("its divisor u = {}, r = {}; 3D = 0: {}", d.u, d.r, curve.mul(&d, 3) == curve.zero());

    let r = verify_fixture(&fx).expect("well formed");
    println!("histogram {:?}", r.histogram);
    println!("gram rank {}, classes {}, fibers {:?}, #J = {}", r.gram_rank, r.classes, r.fiber_sizes, r.jacobian_order);
    println!("pass {}", r.pass);

    for c in f7_fixture_curves() {
        let g = check_group_order(&c, 500, 0);
        println!("over F7, {}: {} divisors, zeta gives {}", g.f, g.enumerated, g.zeta.order);
    }
}

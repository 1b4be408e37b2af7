//! Minimal quintics x⁵ + c₁₂x³ + c₁₈x² + c₂₄x + c₃₀ of nonzero discriminant
//! with height below a.
//!
//!     cargo run --release --example enumerate_quintics -- [a]

use e8g3::genus2::{discriminant, enumerate_min};

fn main() {
    let a: u32 = std::env::args().nth(1).map_or(10_000, |s| s.parse().expect("a is a positive integer"));
    for b in [1, 2, 10, 100, 1000, 10_000].into_iter().filter(|&b| b <= a) {
        println!("Ht < {b}: {}", enumerate_min(&b.into()).len());
    }
    for f in enumerate_min(&a.into()).iter().take(5) {
        println!("  {f}  disc {}", discriminant(f));
    }
}

//! Searches small primes q ≡ 1 mod 3 for a quintic whose elliptic surface
//! y² = x³ + f(t) has all 240 sections defined over 𝔽_q, and writes the
//! result as the section fixture.
//!
//!     cargo run --release --example find_section_fixture -- [out.json] [seed]

use std::time::Instant;

use e8g3::genus2::fp::is_prime;
use e8g3::genus2::sections::{search_fixture, verify_fixture};

fn main() {
    let mut args = std::env::args().skip(1);
    let out = args.next().unwrap_or_else(|| "crates/core/fixtures/sections.json".into());
    let seed: u64 = args.next().map_or(0, |s| s.parse().expect("seed is an integer"));
    let primes: Vec<u64> = (7..=200).filter(|&q| q % 3 == 1 && is_prime(q)).collect();

    let t = Instant::now();
    let Some(fx) = search_fixture(&primes, 20_000, seed) else {
        eprintln!("no fixture found below q = 200");
        std::process::exit(1);
    };
    println!(
        "q = {}, f = {}, trial {} ({} section scans) in {:.1?}",
        fx.q,
        fx.poly(),
        fx.search.trial,
        fx.search.candidates_scanned,
        t.elapsed()
    );
    let rep = verify_fixture(&fx).expect("fixture is well formed");
    println!("sections {}, classes {}, histogram {:?}, pass {}", rep.count, rep.classes, rep.histogram, rep.pass);
    std::fs::write(&out, fx.to_pretty()).expect("write fixture");
    println!("wrote {out}");
}

//! Run one suite in-process and print the JSON report.
//!
//!     cargo run --release --example verify_report -- [suite]

use e8g3::report::{run, Fixtures, Suite};

fn main() {
    let suite: Suite = std::env::args().nth(1).as_deref().unwrap_or("rootsys").parse().unwrap_or_else(|e| {
        eprintln!("{e}");
        std::process::exit(2);
    });
    let r = run(suite, &Fixtures::default(), 0);
    print!("{}", r.to_json());
}

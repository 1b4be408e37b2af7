//! The normal sl2-triple through 𝔥(1), in the Heisenberg realization and in
//! the ∧³ model, and the degrees it predicts for the invariants.

use e8g3::gradedlie::GradedLie;
use e8g3::vinberg::kostant::{compare_realizations, kostant_triple, x_on_coroots};
use e8g3::vinberg::wedge::WedgeModel;

fn main() {
    let lie = GradedLie::build();
    let t = kostant_triple(&lie).expect("triple exists and is unique");
    for (k, c) in x_on_coroots(&t) {
        println!("X coefficient on coroot {k}: {c}");
    }
    let cmp = compare_realizations(&lie, &WedgeModel::new(), 4, 0).expect("both realizations solve");
    for r in [&cmp.heisenberg, &cmp.wedge] {
        println!(
            "{}: relations exact {}, dim ker ad E {}, dim z(F) in degree 1 {}, degrees {:?}",
            r.realization, r.relations_exact, r.ker_ad_e, r.zf_in_degree1, r.degrees
        );
    }
    println!("agree {}, degree sum {}, pass {}", cmp.agree, cmp.degrees_sum, cmp.pass);
}

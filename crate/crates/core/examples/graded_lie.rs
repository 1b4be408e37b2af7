//! Build the 248-dimensional algebra, check the Jacobi identity and the
//! grading, and compare ρ′ with the Heisenberg action.

use std::time::Instant;

use e8g3::gradedlie::GradedLie;

fn main() {
    let t = Instant::now();
    let g = GradedLie::build();
    println!("structure table built in {:.2?}", t.elapsed());
    println!("structure digest {}", g.structure_digest());

    let t = Instant::now();
    let j = g.verify_jacobi();
    println!(
        "jacobi: {} triples, {} pairs, {} violations ({:.2?})",
        j.triples_checked,
        j.pairs_checked,
        j.violations.len(),
        t.elapsed()
    );
    if let Some(v) = j.violations.first() {
        println!("  first violation at {:?}: {:?}", v.triple, v.residual);
    }

    println!("theta order {}", g.theta_order());
    println!("theta automorphism failures {}", g.theta_automorphism_failures());
    let d = g.graded_decomposition();
    println!("graded dims {:?}, total rank {}", d.dims(), d.total_rank());
    println!(
        "grading failures [1,1]->2: {}, [1,2]->0: {}",
        g.grading_failures(&d, 1, 1),
        g.grading_failures(&d, 1, 2)
    );

    let (rank, traceless) = g.rho_prime_image();
    println!("rho' image rank {rank}, traceless {traceless}");
    println!("rho' homomorphism failures {}", g.rho_prime_failures().len());
    println!("heisenberg action mismatches {}", g.heis_action_mismatches().len());
    println!("twist automorphism failures {}", g.twist_automorphism_failures());

    let k = g.killing_gram();
    let integral = k.iter().flatten().all(|c| c.b == 0);
    println!(
        "killing form: rank {}, integer entries {integral}, theta failures {}",
        GradedLie::gram_rank(&k),
        g.killing_theta_failures(&k)
    );
    println!("K(b0,b0) = {}, K(X_0, X_-0) = {}", k[0][0], k[8][8 + g.rs.neg_index(0)]);
}

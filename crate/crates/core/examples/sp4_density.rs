//! Sp4(F3) two ways, and the share of its elements with eigenvalue 1.

use e8g3::genus2::sp4::{sp4_eigenvalue_density, verify_sp4};

fn main() {
    let r = verify_sp4();
    println!("direct filter: {} matrices, transvection closure: {}", r.order_direct, r.order_generated);
    println!("{} conjugacy classes", r.classes);
    println!("eigenvalue 1: {} counted directly, {} by classes", r.eigen_one_direct, r.eigen_one_classes);
    let d = sp4_eigenvalue_density();
    println!("density {} = {:.6}", d, *d.numer() as f64 / *d.denom() as f64);
}

//! n-matrices: shape and content classes, sums, and vector products.

use neutromaps::dynamics::StateVector;
use neutromaps::neutro::NeutroValue;
use neutromaps::nmatrix::{DecimalValue, NMatrix};

fn main() {
    let a: NMatrix = "0 1 -1\n1 0 I\n0 1 0\n---\n0 I\n1 0\n".parse().unwrap();
    let b: NMatrix = "0 1 0\n0 0 1\n1 0 0\n---\n0 1\n-1 0\n".parse().unwrap();
    println!("A =\n{a}classified as {}\n", a.classify());

    let sum = a.try_add(&b).unwrap();
    println!("A + B =\n{sum}");
    println!("2I * B =\n{}", b.scalar_mul(NeutroValue::new(0, 2)));
    println!("A^T =\n{}", a.transpose());

    let x = StateVector::from_bits(&[&[1, 0, 1], &[0, 1]]);
    println!("x = {x}");
    println!("x A = {}", a.vec_mul(&x.to_nvector()).unwrap());

    // Decimal entries are kept exactly and only used for classification.
    let fuzzy: NMatrix<DecimalValue> = ".3 .2I 0\n1 .5 .9\n---\n.1 0\n0 .4I\n.7 1\n".parse().unwrap();
    println!("\n{fuzzy}classified as {}", fuzzy.classify());

    match a.try_add(&"1 0\n0 1\n".parse::<NMatrix>().unwrap()) {
        Ok(_) => unreachable!(),
        Err(e) => println!("\nmismatched sum: {e}"),
    }
}

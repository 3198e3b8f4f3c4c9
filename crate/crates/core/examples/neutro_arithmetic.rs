//! Exact arithmetic over `a + bI` with `I * I = I`, and thresholding.

use neutromaps::neutro::{NeutroValue, NodeState, ThresholdMode, ThresholdPolicy};

fn main() {
    let a: NeutroValue = "2+I".parse().unwrap();
    let b = NeutroValue::new(-1, 3);
    println!("({a}) + ({b}) = {}", a + b);
    println!("({a}) * ({b}) = {}", a * b);
    println!("I * I = {}", NeutroValue::I * NeutroValue::I);
    println!("-({b}) = {}", -b);

    // Overflow is reported rather than wrapped.
    let big = NeutroValue::real(i64::MAX);
    println!("checked {} + 1: {:?}", big, big.checked_add(NeutroValue::ONE).is_err());

    let real = ThresholdPolicy::default();
    let indet = ThresholdPolicy::new(1, ThresholdMode::IndetDominant).unwrap();
    println!("\nvalue    real-dominant  indet-dominant");
    for s in ["0", "1", "I", "2I", "1+2I", "2+I", "-1+I", "-3"] {
        let v: NeutroValue = s.parse().unwrap();
        println!("{s:<8} {:<14} {}", real.apply(v).to_string(), indet.apply(v));
    }

    let states: Vec<NodeState> = ["1", "0", "I"].iter().map(|s| s.parse().unwrap()).collect();
    let values: Vec<String> = states.iter().map(|s| s.value().to_string()).collect();
    println!("\nstates {states:?} carry values {values:?}");
}

//! A three-component cognitive map built in code rather than from a file.

use neutromaps::cognitive::CognitiveMap;
use neutromaps::dynamics::StateVector;
use neutromaps::mapfile;
use neutromaps::neutro::ThresholdPolicy;

const MAP: &str = include_str!("../fixtures/fctm.nmap");

fn main() {
    let doc = mapfile::parse(MAP).unwrap();
    let map = doc.to_cognitive_map().unwrap();
    println!("connection trimatrix ({}):\n{}", map.matrix().classify(), map.matrix());

    let start = StateVector::from_bits(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1]]);
    let p = ThresholdPolicy::default();
    let mut x = start.clone();
    for i in 1..=3 {
        x = map.step(&x, p, &start).unwrap();
        println!("after step {i}: {x}");
    }
    let hp = map.hidden_pattern(&start, p).unwrap();
    println!("hidden pattern after {} iterations: {}", hp.iterations, hp.cycle()[0]);

    // Each component is also a map on its own.
    let single: CognitiveMap = map.component_map(2);
    let alone = single
        .hidden_pattern(&StateVector(vec![start.0[2].clone()]), p)
        .unwrap();
    println!("third component alone: {}", alone.verdicts[0]);
}

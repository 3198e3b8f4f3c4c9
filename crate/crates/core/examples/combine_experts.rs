//! Several experts over the same concepts, summed into one map.

use neutromaps::cognitive::CognitiveMap;
use neutromaps::dynamics::StateVector;
use neutromaps::neutro::ThresholdPolicy;
use neutromaps::nmatrix::NMatrix;

fn expert(text: &str) -> CognitiveMap {
    let labels = vec![["A", "B", "C", "D"].map(String::from).to_vec()];
    CognitiveMap::new(text.parse::<NMatrix>().unwrap(), labels).unwrap()
}

fn main() {
    let experts = [
        expert("0 1 0 0\n0 0 1 0\n0 0 0 1\n1 0 0 0\n"),
        expert("0 1 I 0\n0 0 0 -1\n0 0 0 1\n0 0 0 0\n"),
        expert("0 0 0 0\n0 0 1 0\n-1 0 0 1\n1 I 0 0\n"),
    ];
    let combined = CognitiveMap::combine(&experts).unwrap();
    println!("combined matrix:\n{}", combined.matrix());

    let start = StateVector::from_bits(&[&[1, 0, 0, 0]]);
    for k in 1..=3 {
        let p = ThresholdPolicy::default().with_k(k).unwrap();
        let hp = combined.hidden_pattern(&start, p).unwrap();
        println!("k={k}: {}", hp.verdicts[0]);
    }

    let other = CognitiveMap::new("0 1\n1 0\n".parse().unwrap(), vec![vec!["A".into(), "B".into()]]).unwrap();
    match CognitiveMap::combine(&[experts[0].clone(), other]) {
        Ok(_) => unreachable!(),
        Err(e) => println!("\nmisaligned: {e}"),
    }
}

//! Neutrosophic relational maps under both threshold modes.

use neutromaps::mapfile::{self, InitialState, ScenarioSpec};
use neutromaps::neutro::ThresholdMode;

const NRM: &str = include_str!("../fixtures/nrm.nmap");
const NRBM: &str = include_str!("../fixtures/nrbm.nmap");

fn main() {
    for text in [NRM, NRBM] {
        let doc = mapfile::parse(text).unwrap();
        let map = doc.to_relational_map().unwrap();
        let name = doc.scenarios[0].name.clone();
        let InitialState::Relational(start) = doc.initial_state(&ScenarioSpec::Named(name.clone())).unwrap() else {
            unreachable!()
        };
        for mode in [ThresholdMode::RealDominant, ThresholdMode::IndetDominant] {
            let p = doc.policy.with_mode(mode);
            let hp = map.hidden_pattern(&start, p).unwrap();
            println!(
                "scenario {name:?}, k={} mode={mode}: {} iterations",
                p.k(),
                hp.iterations
            );
            for c in 0..map.k() {
                println!("  domain {}  range {}", hp.domain[c], hp.range[c]);
            }
        }
        println!();
    }
}

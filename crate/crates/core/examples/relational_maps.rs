//! Relational maps pass a state from domain to range and back until a
//! (domain, range) round repeats.

use neutromaps::mapfile::{self, InitialState, ScenarioSpec};
use neutromaps::relational::RelationalState;

const BIMAP: &str = include_str!("../fixtures/frbm.nmap");
const TRIMAP: &str = include_str!("../fixtures/frtm.nmap");

fn run(text: &str) {
    let doc = mapfile::parse(text).unwrap();
    let map = doc.to_relational_map().unwrap();
    println!("domains {:?}, ranges {:?}", map.domain_sizes(), map.range_sizes());
    let scenario = &doc.scenarios[0];
    let InitialState::Relational(start) = doc.initial_state(&ScenarioSpec::Named(scenario.name.clone())).unwrap()
    else {
        unreachable!()
    };
    let p = doc.policy;

    // One half-step each way, by hand.
    let y = map.step_forward(&start, p, None).unwrap();
    let z: RelationalState = map.step_backward(&y, p, Some(&start.state)).unwrap();
    println!("start {:?}: {}", start.side, start.state);
    println!("  forward  {}", y.state);
    println!("  backward {}", z.state);

    let hp = map.hidden_pattern(&start, p).unwrap();
    for (i, (d, r)) in hp.rounds.iter().enumerate() {
        println!("  round {i}: D {d} | R {r}");
    }
    for c in 0..map.k() {
        println!("  component {}: domain {}; range {}", c + 1, hp.domain[c], hp.range[c]);
    }
    println!();
}

fn main() {
    run(BIMAP);
    run(TRIMAP);
}

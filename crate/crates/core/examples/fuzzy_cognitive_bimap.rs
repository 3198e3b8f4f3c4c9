//! Two experts' cognitive maps run side by side until the joint state
//! repeats.

use neutromaps::cli::verdict_line;
use neutromaps::mapfile::{self, InitialState, ScenarioSpec};

const MAP: &str = include_str!("../fixtures/fcbm.nmap");

fn main() {
    let doc = mapfile::parse(MAP).unwrap();
    let map = doc.to_cognitive_map().unwrap();
    println!("{} components, orders {:?}\n", map.k(), map.orders());

    for scenario in &doc.scenarios {
        let InitialState::Cognitive(init) = doc.initial_state(&ScenarioSpec::Named(scenario.name.clone())).unwrap()
        else {
            unreachable!()
        };
        let hp = map.hidden_pattern(&init, doc.policy).unwrap();
        println!("scenario {:?}", scenario.name);
        for (i, s) in hp.trace.iter().enumerate() {
            println!("  step {i}: {s}");
        }
        for (c, v) in hp.verdicts.iter().enumerate() {
            println!("  {}", verdict_line(c, v));
        }
        println!();
    }

    // Labels can also be switched on directly; `2:E7` names E7 in the
    // second component only.
    let spec = ScenarioSpec::Labels(vec!["C2".into(), "2:E7".into()]);
    let InitialState::Cognitive(init) = doc.initial_state(&spec).unwrap() else {
        unreachable!()
    };
    let hp = map.hidden_pattern(&init, doc.policy).unwrap();
    println!("on C2, E7: {} iterations", hp.iterations);
    for (c, v) in hp.verdicts.iter().enumerate() {
        println!("  {}", verdict_line(c, v));
    }
}

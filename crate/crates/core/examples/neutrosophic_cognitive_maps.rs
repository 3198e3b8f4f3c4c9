//! Cognitive maps with indeterminate edges: states may settle on `I`.

use neutromaps::mapfile::{self, InitialState, ScenarioSpec};

const BIMAP: &str = include_str!("../fixtures/ncbm.nmap");
const TRIMAP: &str = include_str!("../fixtures/nctm.nmap");

fn main() {
    for text in [BIMAP, TRIMAP] {
        let doc = mapfile::parse(text).unwrap();
        let map = doc.to_cognitive_map().unwrap();
        println!(
            "{}-component map, content {}",
            doc.components.len(),
            map.matrix().content()
        );
        let InitialState::Cognitive(init) = doc
            .initial_state(&ScenarioSpec::Named(doc.scenarios[0].name.clone()))
            .unwrap()
        else {
            unreachable!()
        };
        let hp = map.hidden_pattern(&init, doc.policy).unwrap();
        for (i, s) in hp.trace.iter().enumerate().take(4) {
            let raw = map.matrix().vec_mul(&s.to_nvector()).unwrap();
            println!("  step {i}: {s}\n     raw {raw}");
        }
        for v in &hp.verdicts {
            println!("  {v}");
        }
        println!();
    }
}

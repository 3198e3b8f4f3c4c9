//! The `.nmap` text format: parsing, diagnostics, canonical output and
//! JSON.

use neutromaps::mapfile::{self, MapDocument};

const SOURCE: &str = r#"
kind cognitive
scenario "start"   # switch on B

[component "expert one"]
nodes C B A
A -> B
B -> C : I
C -> A : -1
on "start" B
"#;

const BROKEN: &str = "kind cognitive\n[component \"x\"]\nnodes A B\nA -> Q\nA -- B\n";

fn main() {
    let doc = mapfile::parse(SOURCE).unwrap();
    let canonical = mapfile::serialize(&doc);
    println!("canonical form:\n{canonical}");
    assert_eq!(mapfile::parse(&canonical).unwrap(), doc);

    let json = doc.to_json();
    println!("as JSON:\n{json}\n");
    assert_eq!(MapDocument::from_json(&json).unwrap(), doc);

    println!("matrix:\n{}", doc.primary_matrix().unwrap());

    match mapfile::parse(BROKEN) {
        Ok(_) => unreachable!(),
        Err(diags) => {
            println!("diagnostics:");
            for d in &diags.0 {
                println!("  {d}");
            }
        }
    }
}

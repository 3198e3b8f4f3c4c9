//! Gluing, order, biregularity and the neutrosophic classes of n-graphs.

use neutromaps::ngraph::{Edge, Graph, NGraph};

fn cycle(labels: &[&str]) -> Vec<Edge> {
    labels
        .iter()
        .zip(labels.iter().cycle().skip(1))
        .map(|(a, b)| Edge::undirected(*a, *b))
        .collect()
}

fn describe(name: &str, g: &NGraph) {
    println!("{name}:");
    if g.k() == 2 {
        let glue = g.gluing_classify().unwrap();
        println!(
            "  gluing        {} (shared vertices {:?})",
            glue.verdict, glue.shared.vertices
        );
        println!("  order         {}", g.order().unwrap());
        match g.is_biregular() {
            Ok(Some((k1, k2))) => println!("  biregular     ({k1}, {k2})"),
            Ok(None) => println!("  biregular     no"),
            Err(e) => println!("  biregular     n/a: {e}"),
        }
    }
    println!("  neutrosophic  {}", g.neutrosophic_classify());
    let b = g.bipartite_structure();
    println!(
        "  bipartite     {} (strongly biconnected: {})",
        b.is_bipartite_ngraph, b.is_strongly_biconnected
    );
}

fn main() {
    let square = Graph::new(["u1", "u2", "u3", "u4"], cycle(&["u1", "u2", "u3", "u4"])).unwrap();
    let mut k4 = Vec::new();
    let w = ["u2", "w2", "w3", "w4"];
    for i in 0..4 {
        for j in i + 1..4 {
            k4.push(Edge::undirected(w[i], w[j]));
        }
    }
    let k4 = Graph::new(w, k4).unwrap();
    let glued = NGraph::new(vec![square.clone(), k4]).unwrap();
    describe("4-cycle and K4 glued at u2", &glued);
    println!("  bidegree(u2)  {}", glued.bidegree("u2").unwrap());
    println!("  u2 separates  {}", glued.separates_union("u2"));

    let hexagon = Graph::new(
        ["u1", "u2", "u3", "u4", "u5", "u6"],
        cycle(&["u1", "u2", "u3", "u4", "u5", "u6"]),
    )
    .unwrap();
    let fuzzy = Graph::new(
        ["u1", "u2", "u3", "x"],
        vec![
            Edge::undirected("u1", "u2"),
            Edge::undirected("u2", "u3").indeterminate(),
            Edge::undirected("u3", "x"),
        ],
    )
    .unwrap();
    describe(
        "hexagon and a path sharing two edges",
        &NGraph::new(vec![hexagon.clone(), fuzzy.clone()]).unwrap(),
    );

    let tri = NGraph::new(vec![square, hexagon, fuzzy]).unwrap();
    describe("trigraph with one indeterminate component", &tri);

    let a = Graph::new(["a", "b"], vec![Edge::undirected("a", "b")]).unwrap();
    println!(
        "\nidentical components: {}",
        NGraph::new(vec![a.clone(), a]).unwrap_err()
    );
}

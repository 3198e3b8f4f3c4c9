//! Adjacency, incidence, weighted and Kirchhoff matrices of graph files.

use neutromaps::mapfile;

const BIGRAPH: &str = include_str!("../fixtures/weighted_bigraph.nmap");
const DIGRAPH: &str = include_str!("../fixtures/kirchhoff_digraph.nmap");

fn main() {
    let g = mapfile::parse(BIGRAPH).unwrap().to_ngraph().unwrap();
    println!("adjacency bimatrix:\n{}", g.adjacency_nmatrix());
    println!(
        "weighted bimatrix (∞ where not adjacent):\n{}",
        g.weighted_nmatrix().unwrap()
    );

    let first = g.component(0);
    let inc = first.incidence();
    println!("incidence of the first component is {}x{}", inc.rows(), inc.cols());

    let d = mapfile::parse(DIGRAPH).unwrap().to_ngraph().unwrap();
    println!(
        "\nKirchhoff matrix (diagonal = column sums):\n{}",
        d.kirchhoff_nmatrix().unwrap()
    );
    println!("DOT:\n{}", d.to_dot());

    match g.kirchhoff_nmatrix() {
        Ok(_) => unreachable!(),
        Err(e) => println!("Kirchhoff of an undirected graph: {e}"),
    }
}

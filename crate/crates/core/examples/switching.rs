//! Switching, additive graphs and canonical class representatives.

use switchsep::{VertexLabeling, WeightedGraph};

fn main() -> switchsep::Result<()> {
    let g = WeightedGraph::new(3, 4, &[(0, 1, 1), (0, 2, 2), (0, 3, 1), (1, 3, 1), (2, 3, 2)])?;
    println!("G edges: {:?}", g.edges());

    let lab = VertexLabeling::new(3, vec![1, 0, 2, 2])?;
    let h = g.switch(&lab)?;
    println!("switched by {:?}: {:?}", lab.labels(), h.edges());

    let back = g.switching_equivalent(&h)?.expect("same class");
    println!("recovered labeling: {:?}", back.labels());

    let (iso, used) = g.isolate(0)?;
    println!("vertex 0 isolated with {:?}: {:?}", used.labels(), iso.edges());
    println!("canonical rep: {:?}", g.canonical_rep().edges());

    let additive = WeightedGraph::additive(&lab);
    match additive.is_additive() {
        Some(l) => println!("additive graph regenerated by {:?}", l.labels()),
        None => println!("not additive?"),
    }
    println!("G additive: {}", g.is_additive().is_some());
    Ok(())
}

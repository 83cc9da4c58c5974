//! Samples one graph from each family and prints its size and shape.

use mixlab::generators::{
    classic_graph, dlp_giant, erdos_renyi, kesten_iic, random_regular, regular_tree,
    uniform_labelled_tree, ClassicFamily, DlpParams,
};
use mixlab::{Graph, RngSeed};

fn describe(name: &str, g: &Graph) {
    let (radius, diameter) = g.radius_diameter().unwrap();
    let max_deg = g.degrees().into_iter().max().unwrap_or(0);
    println!(
        "{name:<22} n={:<6} m={:<6} radius={radius:<4} diameter={diameter:<4} max_degree={max_deg}",
        g.n(),
        g.m()
    );
}

fn main() -> mixlab::Result<()> {
    let mut rng = RngSeed(7).rng();

    describe("path(10)", &classic_graph(ClassicFamily::Path(10))?);
    describe("cycle(10)", &classic_graph(ClassicFamily::Cycle(10))?);
    describe("hypercube(5)", &classic_graph(ClassicFamily::Hypercube(5))?);
    describe("lollipop(6, 6)", &classic_graph(ClassicFamily::Lollipop { clique: 6, handle: 6 })?);
    describe("3-ary tree, depth 5", &regular_tree(3, 5)?);
    describe("uniform tree(500)", &uniform_labelled_tree(500, &mut rng)?);
    describe("kesten tree, depth 20", &kesten_iic(20, &mut rng)?);
    describe("random 3-regular(200)", &random_regular(200, 3, 1000, &mut rng)?);

    let (giant, _) = erdos_renyi(4000, 1.0 / 4000.0, &mut rng)?.giant_component()?;
    describe("G(4000, 1/N) giant", &giant);

    let sample = dlp_giant(&DlpParams::new(20_000, 0.1)?, &mut rng)?;
    describe("2-core model, eps=0.1", &sample.graph);
    println!(
        "  kernel vertices={} subdivided kernel vertices={}",
        sample.kernel_size(),
        sample.k_vertices
    );
    Ok(())
}

//! Hitting and commute times for the vertex walk, the edge walk and a single
//! card, with the tree formula as a cross-check.

use mixlab::bounds::{commute_time, hitting_times, tree_hitting_srw, Walk};
use mixlab::generators::{regular_tree, uniform_labelled_tree};
use mixlab::RngSeed;

fn main() -> mixlab::Result<()> {
    let t = regular_tree(3, 4)?;
    let leaf = t.n() - 1;
    for walk in [Walk::Srw, Walk::EdgeWalk, Walk::CardWalk] {
        let h = hitting_times(&t, 0, walk)?;
        println!("3-ary tree depth 4, leaf -> root, {walk:?}: {:.1}", h[leaf]);
    }
    println!("tree formula for the simple walk: {:.1}", tree_hitting_srw(&t, leaf, 0)?);

    let mut rng = RngSeed(11).rng();
    let u = uniform_labelled_tree(400, &mut rng)?;
    let linear = hitting_times(&u, 0, Walk::Srw)?[399];
    println!("uniform tree n=400: solver {:.3} formula {:.3}", linear, tree_hitting_srw(&u, 399, 0)?);
    println!("card commute time 0 <-> 399: {:.1}", commute_time(&u, 0, 399, Walk::CardWalk)?);
    Ok(())
}

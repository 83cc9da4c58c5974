//! Tree families. Rooted samplers put the root at vertex 0 and label
//! vertices in breadth-first order.

use std::collections::VecDeque;

use rand::Rng as _;

use super::offspring::{poisson, OffspringDistribution};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng::Rng;

struct TreeBuilder {
    edges: Vec<(usize, usize)>,
    depth: Vec<usize>,
    size_cap: usize,
}

impl TreeBuilder {
    fn new(size_cap: usize) -> Self {
        TreeBuilder {
            edges: Vec::new(),
            depth: vec![0],
            size_cap,
        }
    }

    fn len(&self) -> usize {
        self.depth.len()
    }

    fn add_child(&mut self, parent: usize) -> Result<usize> {
        if self.len() >= self.size_cap {
            return Err(Error::SizeCapExceeded(self.size_cap));
        }
        let v = self.len();
        self.depth.push(self.depth[parent] + 1);
        self.edges.push((parent, v));
        Ok(v)
    }

    /// Grows an unconditioned tree below `root` down to absolute depth
    /// `depth_cap`. `first` overrides the child count of `root` itself.
    fn grow(
        &mut self,
        root: usize,
        first: Option<usize>,
        off: &OffspringDistribution,
        depth_cap: usize,
        rng: &mut Rng,
    ) -> Result<()> {
        let mut queue = VecDeque::new();
        if self.depth[root] < depth_cap {
            let c = first.unwrap_or_else(|| off.sample(rng));
            for _ in 0..c {
                queue.push_back(self.add_child(root)?);
            }
        }
        while let Some(v) = queue.pop_front() {
            if self.depth[v] >= depth_cap {
                continue;
            }
            let c = off.sample(rng);
            for _ in 0..c {
                queue.push_back(self.add_child(v)?);
            }
        }
        Ok(())
    }

    fn height(&self) -> usize {
        self.depth.iter().copied().max().unwrap_or(0)
    }

    fn finish(self) -> Graph {
        Graph::from_edge_list(self.depth.len(), &self.edges).expect("tree edges are simple")
    }
}

/// First `depth` generations of the rooted tree where the root has `r`
/// children and every other internal vertex has `r - 1`.
pub fn regular_tree(r: usize, depth: usize) -> Result<Graph> {
    if r < 3 || depth < 1 {
        return Err(Error::BadParams("regular tree needs r >= 3 and d >= 1".into()));
    }
    let mut b = TreeBuilder::new(usize::MAX);
    let mut level = vec![0];
    for g in 0..depth {
        let kids = if g == 0 { r } else { r - 1 };
        let mut next = Vec::with_capacity(level.len() * kids);
        for &v in &level {
            for _ in 0..kids {
                next.push(b.add_child(v)?);
            }
        }
        level = next;
    }
    Ok(b.finish())
}

/// Galton-Watson tree sampled breadth-first, truncated below generation
/// `depth_cap`. Fails with `SizeCapExceeded` once it would exceed `size_cap`
/// vertices.
pub fn gw_tree(
    off: &OffspringDistribution,
    depth_cap: usize,
    size_cap: usize,
    rng: &mut Rng,
) -> Result<Graph> {
    off.validate()?;
    if depth_cap == 0 || size_cap == 0 {
        return Err(Error::BadParams("caps must be positive".into()));
    }
    let mut b = TreeBuilder::new(size_cap);
    b.grow(0, None, off, depth_cap, rng)?;
    Ok(b.finish())
}

/// How to condition a Galton-Watson tree on reaching generation `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SurvivalMode {
    /// Resample until generation `k` is nonempty. Exact.
    Rejection { budget: usize },
    /// Backbone of length `k` with thinned Poisson side offspring at each
    /// backbone vertex. Approximate: backbone marks are taken uniform.
    Spine,
}

/// A tree conditioned on survival to generation `k`, truncated at `k`.
#[derive(Debug, Clone)]
pub struct ConditionedTree {
    pub tree: Graph,
    /// Samples drawn, including the accepted one (1 in spine mode).
    pub attempts: usize,
}

pub fn gw_conditioned_to_survive(
    off: &OffspringDistribution,
    k: usize,
    mode: SurvivalMode,
    size_cap: usize,
    rng: &mut Rng,
) -> Result<ConditionedTree> {
    off.validate()?;
    if k == 0 {
        return Err(Error::BadParams("k must be >= 1".into()));
    }
    match mode {
        SurvivalMode::Rejection { budget } => {
            for attempt in 1..=budget {
                let mut b = TreeBuilder::new(size_cap);
                b.grow(0, None, off, k, rng)?;
                if b.height() >= k {
                    return Ok(ConditionedTree {
                        tree: b.finish(),
                        attempts: attempt,
                    });
                }
            }
            Err(Error::RejectionBudgetExceeded(budget))
        }
        SurvivalMode::Spine => {
            let mean = off.mean();
            let mut b = TreeBuilder::new(size_cap);
            let mut spine = 0;
            for _ in 0..k {
                let next = b.add_child(spine)?;
                let mark: f64 = rng.random();
                let side = poisson(mean * (1.0 - mark), rng);
                for _ in 0..side {
                    let c = b.add_child(spine)?;
                    b.grow(c, None, off, k, rng)?;
                }
                spine = next;
            }
            Ok(ConditionedTree {
                tree: relabel_bfs(b.finish()),
                attempts: 1,
            })
        }
    }
}

/// First `d` generations of Kesten's tree for critical Poisson(1) offspring:
/// every spine vertex has `1 + Poisson(1)` children, a uniform one of which
/// continues the spine; the others root Poisson(1) trees cut at depth `d`.
pub fn kesten_iic(d: usize, rng: &mut Rng) -> Result<Graph> {
    if d == 0 {
        return Err(Error::BadParams("depth must be >= 1".into()));
    }
    let off = OffspringDistribution::Poisson { mean: 1.0 };
    let mut b = TreeBuilder::new(usize::MAX);
    let mut spine = 0;
    for _ in 0..d {
        let count = 1 + poisson(1.0, rng);
        let heir = rng.random_range(0..count);
        let mut next = 0;
        for j in 0..count {
            let c = b.add_child(spine)?;
            if j == heir {
                next = c;
            } else {
                b.grow(c, None, &off, d, rng)?;
            }
        }
        spine = next;
    }
    Ok(relabel_bfs(b.finish()))
}

/// The labelled tree on `code.len() + 2` vertices with the given Prüfer code.
pub fn prufer_decode(code: &[usize]) -> Result<Graph> {
    let n = code.len() + 2;
    let mut degree = vec![1usize; n];
    for &x in code {
        if x >= n {
            return Err(Error::OutOfRange { index: x, limit: n });
        }
        degree[x] += 1;
    }
    let mut leaves: std::collections::BinaryHeap<std::cmp::Reverse<usize>> = (0..n)
        .filter(|&v| degree[v] == 1)
        .map(std::cmp::Reverse)
        .collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &x in code {
        let std::cmp::Reverse(leaf) = leaves.pop().expect("a leaf always exists");
        edges.push((leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.push(std::cmp::Reverse(x));
        }
    }
    let std::cmp::Reverse(a) = leaves.pop().expect("two leaves remain");
    let std::cmp::Reverse(b) = leaves.pop().expect("two leaves remain");
    edges.push((a, b));
    Graph::from_edge_list(n, &edges)
}

/// Uniform labelled tree via a uniform Prüfer code.
pub fn uniform_labelled_tree(n: usize, rng: &mut Rng) -> Result<Graph> {
    if n < 2 {
        return Err(Error::BadParams("uniform tree needs n >= 2".into()));
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    prufer_decode(&code)
}

/// Relabels a rooted tree (root 0) in BFS order with children visited in
/// label order.
fn relabel_bfs(g: Graph) -> Graph {
    let n = g.n();
    let mut new = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    new[0] = 0;
    order.push(0);
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        for &w in g.neighbors(v) {
            if new[w] == usize::MAX {
                new[w] = order.len();
                order.push(w);
            }
        }
    }
    let mut edges: Vec<(usize, usize)> = g.edges().iter().map(|&(u, v)| (new[u], new[v])).collect();
    edges.sort_unstable_by_key(|&(u, v)| (u.max(v), u.min(v)));
    Graph::from_edge_list(n, &edges).expect("relabelling preserves simplicity")
}

/// Depth of each vertex below the root 0.
#[cfg(test)]
fn depths_from_root(g: &Graph) -> Vec<usize> {
    g.bfs_distances(0)
        .map(|t| t.dist.into_iter().map(|d| d.unwrap_or(usize::MAX)).collect())
        .unwrap_or_default()
}

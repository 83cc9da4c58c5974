//! Unit-resistor networks: harmonic potentials, effective resistance, and the
//! centered test vectors built from them.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::GroundedLaplacian;
use crate::spectral::{laplacian_quadratic, TestVector};

/// Potentials held fixed on two disjoint, nonempty vertex sets.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryCondition {
    pub plus: Vec<usize>,
    pub minus: Vec<usize>,
    pub plus_value: f64,
    pub minus_value: f64,
}

impl BoundaryCondition {
    /// `+1` on `plus`, `−1` on `minus`.
    pub fn new(plus: Vec<usize>, minus: Vec<usize>) -> BoundaryCondition {
        BoundaryCondition {
            plus,
            minus,
            plus_value: 1.0,
            minus_value: -1.0,
        }
    }

    pub fn with_values(mut self, plus_value: f64, minus_value: f64) -> BoundaryCondition {
        self.plus_value = plus_value;
        self.minus_value = minus_value;
        self
    }

    /// Per-vertex fixed value, or `None` on free vertices.
    pub fn fixed_values(&self, n: usize) -> Result<Vec<Option<f64>>> {
        if self.plus.is_empty() || self.minus.is_empty() {
            return Err(Error::BadBoundary("both boundary sets must be nonempty".into()));
        }
        if self.plus_value == self.minus_value {
            return Err(Error::BadBoundary("boundary potentials must differ".into()));
        }
        let mut fixed = vec![None; n];
        for (set, value) in [(&self.plus, self.plus_value), (&self.minus, self.minus_value)] {
            for &v in set {
                if v >= n {
                    return Err(Error::OutOfRange { index: v, limit: n });
                }
                match fixed[v] {
                    Some(x) if x != value => {
                        return Err(Error::BadBoundary(format!("vertex {v} is in both sets")))
                    }
                    _ => fixed[v] = Some(value),
                }
            }
        }
        Ok(fixed)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PotentialSolution {
    pub eta: TestVector,
    /// Net current leaving the `plus` set.
    pub current: f64,
    /// Net current entering the `minus` set.
    pub current_into_minus: f64,
    /// Potential difference over current.
    pub resistance: f64,
    /// Largest `|d_v η(v) − Σ_{u∼v} η(u)|` over free vertices.
    pub harmonic_residual: f64,
}

/// Solves the Dirichlet problem `Lη = 0` off the boundary.
pub fn harmonic_potential(g: &Graph, bc: &BoundaryCondition) -> Result<PotentialSolution> {
    g.require_connected()?;
    let fixed = bc.fixed_values(g.n())?;
    let is_free: Vec<bool> = fixed.iter().map(Option::is_none).collect();
    let lap = GroundedLaplacian::new(g, &is_free)?;
    let rhs: Vec<f64> = (0..g.n())
        .map(|v| {
            if fixed[v].is_some() {
                return 0.0;
            }
            g.neighbors(v).iter().filter_map(|&w| fixed[w]).sum()
        })
        .collect();
    let mut eta = lap.solve_full(&rhs);
    for (v, f) in fixed.iter().enumerate() {
        if let Some(x) = f {
            eta[v] = *x;
        }
    }

    let flux = |v: usize| -> f64 { g.neighbors(v).iter().map(|&w| eta[v] - eta[w]).sum() };
    // sum over the value map so repeated entries in a set count once
    let side = |value: f64| -> f64 { (0..g.n()).filter(|&v| fixed[v] == Some(value)).map(flux).sum() };
    let current = side(bc.plus_value);
    let current_into_minus = -side(bc.minus_value);
    let harmonic_residual = (0..g.n())
        .filter(|&v| is_free[v])
        .map(|v| flux(v).abs())
        .fold(0.0, f64::max);
    let resistance = (bc.plus_value - bc.minus_value) / current;
    Ok(PotentialSolution {
        eta: TestVector::new(eta),
        current,
        current_into_minus,
        resistance,
        harmonic_residual,
    })
}

/// Effective resistance between vertex sets `a` and `b`.
pub fn effective_resistance(g: &Graph, a: &[usize], b: &[usize]) -> Result<f64> {
    let bc = BoundaryCondition::new(a.to_vec(), b.to_vec());
    Ok(harmonic_potential(g, &bc)?.resistance)
}

/// `φ = η − η̄`, scaled to unit norm.
pub fn centered_test_vector(sol: &PotentialSolution) -> TestVector {
    let eta = sol.eta.values();
    TestVector::centered_unit(eta).unwrap_or_else(|_| TestVector::new(vec![0.0; eta.len()]))
}

/// The Dirichlet form at a zero-sum unit vector, which bounds `γ` from above.
pub fn gap_upper_bound(g: &Graph, phi: &TestVector) -> Result<f64> {
    if !phi.is_zero_sum() {
        return Err(Error::NotCentered(phi.sum()));
    }
    if !phi.is_normalized() {
        return Err(Error::BadParams(format!(
            "test vector has norm {}, expected 1",
            phi.l2_norm()
        )));
    }
    laplacian_quadratic(g, phi.values())
}

/// BFS structure of a tree hanging from `root`.
#[derive(Debug, Clone)]
pub struct RootedTree {
    pub root: usize,
    pub parent: Vec<Option<usize>>,
    pub depth: Vec<usize>,
    /// vertices in BFS order, children visited by label
    pub order: Vec<usize>,
    kids: Vec<Vec<usize>>,
}

impl RootedTree {
    pub fn new(tree: &Graph, root: usize) -> Result<RootedTree> {
        if !tree.is_tree() {
            return Err(Error::NotATree);
        }
        if root >= tree.n() {
            return Err(Error::OutOfRange {
                index: root,
                limit: tree.n(),
            });
        }
        let n = tree.n();
        let mut parent = vec![None; n];
        let mut depth = vec![0; n];
        let mut seen = vec![false; n];
        let mut order = Vec::with_capacity(n);
        let mut kids = vec![Vec::new(); n];
        let mut queue = VecDeque::from([root]);
        seen[root] = true;
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in tree.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(v);
                    kids[v].push(w);
                    depth[w] = depth[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        Ok(RootedTree {
            root,
            parent,
            depth,
            order,
            kids,
        })
    }

    pub fn children(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.kids[v].iter().copied()
    }

    pub fn level(&self, d: usize) -> Vec<usize> {
        self.order.iter().copied().filter(|&v| self.depth[v] == d).collect()
    }

    pub fn height(&self) -> usize {
        self.depth.iter().copied().max().unwrap_or(0)
    }

    /// Whether `v` lies in the subtree of `top`.
    pub fn descends_from(&self, mut v: usize, top: usize) -> bool {
        loop {
            if v == top {
                return true;
            }
            match self.parent[v] {
                Some(p) if self.depth[p] >= self.depth[top] => v = p,
                _ => return false,
            }
        }
    }
}

/// Boundary for the regular-tree construction: `+1` on the deepest leaves
/// below the root's first child, `−1` on those below its last child.
pub fn regular_tree_thirds(tree: &Graph) -> Result<BoundaryCondition> {
    let rt = RootedTree::new(tree, 0)?;
    let kids: Vec<usize> = rt.children(0).collect();
    if kids.len() < 2 {
        return Err(Error::BadBoundary("root needs at least two children".into()));
    }
    let leaves = rt.level(rt.height());
    let (first, last) = (kids[0], kids[kids.len() - 1]);
    let plus: Vec<usize> = leaves.iter().copied().filter(|&v| rt.descends_from(v, first)).collect();
    let minus: Vec<usize> = leaves.iter().copied().filter(|&v| rt.descends_from(v, last)).collect();
    if plus.is_empty() || minus.is_empty() {
        return Err(Error::BadBoundary("a side has no deepest leaves".into()));
    }
    Ok(BoundaryCondition::new(plus, minus))
}

/// The two-progeny boundary: scanning in BFS order from `root`, take the first
/// vertex `u` with at least two children whose subtrees meet `target`, pick
/// the two children whose subtrees contain the most target vertices (ties to
/// the smaller label), and split `target` between them.
pub fn two_progeny_boundary(
    tree: &Graph,
    root: usize,
    target: &[usize],
) -> Result<BoundaryCondition> {
    let rt = RootedTree::new(tree, root)?;
    let n = tree.n();
    let mut in_target = vec![false; n];
    for &v in target {
        if v >= n {
            return Err(Error::OutOfRange { index: v, limit: n });
        }
        in_target[v] = true;
    }
    let mut count: Vec<usize> = in_target.iter().map(|&b| b as usize).collect();
    for &v in rt.order.iter().rev() {
        if let Some(p) = rt.parent[v] {
            count[p] += count[v];
        }
    }
    for &u in &rt.order {
        let mut kids: Vec<usize> = rt.children(u).filter(|&c| count[c] > 0).collect();
        if kids.len() < 2 {
            continue;
        }
        kids.sort_by_key(|&c| (std::cmp::Reverse(count[c]), c));
        let (u1, u2) = (kids[0], kids[1]);
        let mut plus = Vec::with_capacity(count[u1]);
        let mut minus = Vec::with_capacity(count[u2]);
        for &v in target {
            if rt.descends_from(v, u1) {
                plus.push(v);
            } else if rt.descends_from(v, u2) {
                minus.push(v);
            }
        }
        return Ok(BoundaryCondition::new(plus, minus));
    }
    Err(Error::BadBoundary(
        "no vertex has two children whose subtrees meet the target set".into(),
    ))
}

/// Two-progeny boundary with the target set taken to be generation `level`.
pub fn level_progeny_boundary(tree: &Graph, root: usize, level: usize) -> Result<BoundaryCondition> {
    let rt = RootedTree::new(tree, root)?;
    two_progeny_boundary(tree, root, &rt.level(level))
}

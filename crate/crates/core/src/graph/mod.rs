//! Simple undirected graphs on dense vertex labels `0..n`, plus the
//! multigraph used as the kernel of the 2-core model.

mod io;

pub use io::{read_edge_list, write_edge_list};

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};

/// An immutable simple graph. Vertices are `0..n`; edges are stored with the
/// smaller endpoint first, in insertion order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, rejecting out-of-range endpoints, loops and duplicates.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut seen = HashSet::with_capacity(edges.len());
        let mut adj = vec![Vec::new(); n];
        let mut stored = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::OutOfRange { index: x, limit: n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(Error::DuplicateEdge(e.0, e.1));
            }
            adj[u].push(v);
            adj[v].push(u);
            stored.push(e);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let g = Graph { n, edges: stored, adj };
        debug_assert!(g.check_invariants());
        Ok(g)
    }

    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Graph {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Neighbors of `v` in increasing label order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Returns a copy with one more edge.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let mut edges = self.edges.clone();
        edges.push((u, v));
        Graph::from_edge_list(self.n, &edges)
    }

    /// Degree-sum identity and adjacency/edge-list consistency.
    pub fn check_invariants(&self) -> bool {
        let deg_sum: usize = self.adj.iter().map(Vec::len).sum();
        if deg_sum != 2 * self.edges.len() {
            return false;
        }
        self.edges
            .iter()
            .all(|&(u, v)| u < v && self.has_edge(u, v) && self.has_edge(v, u))
    }

    pub fn bfs_distances(&self, source: usize) -> Result<DistanceTable> {
        if source >= self.n {
            return Err(Error::OutOfRange {
                index: source,
                limit: self.n,
            });
        }
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap_or(0);
            for &w in &self.adj[v] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        Ok(DistanceTable { source, dist })
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.bfs_distances(0)
            .map(|t| t.dist.iter().all(Option::is_some))
            .unwrap_or(false)
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::EmptyGraph);
        }
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(())
    }

    /// Largest hop distance from `v`, or `None` if some vertex is unreachable.
    pub fn eccentricity(&self, v: usize) -> Result<Option<usize>> {
        let t = self.bfs_distances(v)?;
        Ok(t.dist.iter().try_fold(0, |acc, d| d.map(|d| acc.max(d))))
    }

    /// `(radius, diameter)` of a connected graph.
    pub fn radius_diameter(&self) -> Result<(usize, usize)> {
        self.require_connected()?;
        let mut radius = usize::MAX;
        let mut diameter = 0;
        for v in 0..self.n {
            let ecc = self.eccentricity(v)?.ok_or(Error::Disconnected)?;
            radius = radius.min(ecc);
            diameter = diameter.max(ecc);
        }
        Ok((radius, diameter))
    }

    /// Components as sorted vertex lists, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut head = 0;
            while head < members.len() {
                let v = members[head];
                head += 1;
                for &w in &self.adj[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Induced subgraph on `vertices` (in the given order), relabelled `0..k`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        let mut new_label = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            if v >= self.n {
                return Err(Error::OutOfRange {
                    index: v,
                    limit: self.n,
                });
            }
            new_label[v] = i;
        }
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|&&(u, v)| new_label[u] != usize::MAX && new_label[v] != usize::MAX)
            .map(|&(u, v)| (new_label[u], new_label[v]))
            .collect();
        Graph::from_edge_list(vertices.len(), &edges)
    }

    /// The largest component relabelled `0..k`, with `map[new] = old`.
    /// Ties go to the component holding the smallest original label.
    pub fn giant_component(&self) -> Result<(Graph, Vec<usize>)> {
        if self.n == 0 {
            return Err(Error::EmptyGraph);
        }
        let comps = self.connected_components();
        let mut best = &comps[0];
        for c in &comps[1..] {
            if c.len() > best.len() {
                best = c;
            }
        }
        let g = self.induced_subgraph(best)?;
        Ok((g, best.clone()))
    }

    /// A shortest path `u = w0, .., wr = v`. Each vertex's BFS parent is its
    /// smallest-labelled neighbor one level closer to `u`, so the result is
    /// reproducible.
    pub fn shortest_path(&self, u: usize, v: usize) -> Result<Vec<usize>> {
        let table = self.bfs_distances(u)?;
        if v >= self.n {
            return Err(Error::OutOfRange {
                index: v,
                limit: self.n,
            });
        }
        let mut d = table.dist[v].ok_or(Error::Unreachable { from: u, to: v })?;
        let mut path = vec![v];
        let mut cur = v;
        while d > 0 {
            // adjacency lists are sorted, so the first hit is the smallest label
            cur = *self.adj[cur]
                .iter()
                .find(|&&w| table.dist[w] == Some(d - 1))
                .expect("BFS level structure");
            path.push(cur);
            d -= 1;
        }
        path.reverse();
        Ok(path)
    }

    /// Connected with exactly `n - 1` edges.
    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.m() + 1 == self.n && self.is_connected()
    }
}

/// Hop distances from a source; `None` marks unreachable vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceTable {
    pub source: usize,
    pub dist: Vec<Option<usize>>,
}

impl DistanceTable {
    pub fn get(&self, v: usize) -> Option<usize> {
        self.dist.get(v).copied().flatten()
    }
}

/// Multigraph with loops and parallel edges. Each entry of `edges` is one
/// edge; parallel edges appear repeatedly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl MultiGraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<MultiGraph> {
        for &(u, v) in &edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::OutOfRange { index: x, limit: n });
                }
            }
        }
        let edges = edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
        Ok(MultiGraph { n, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edge count with multiplicity.
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Loops count twice.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &(u, v) in &self.edges {
            d[u] += 1;
            d[v] += 1;
        }
        d
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        let e = (u.min(v), u.max(v));
        self.edges.iter().filter(|&&x| x == e).count()
    }

    pub fn loop_count(&self) -> usize {
        self.edges.iter().filter(|(u, v)| u == v).count()
    }

    /// No loops and no parallel edges.
    pub fn is_simple(&self) -> bool {
        let mut seen = HashSet::with_capacity(self.edges.len());
        self.edges.iter().all(|&(u, v)| u != v && seen.insert((u, v)))
    }

    pub fn to_simple(&self) -> Result<Graph> {
        Graph::from_edge_list(self.n, &self.edges)
    }
}

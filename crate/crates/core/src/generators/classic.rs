use crate::error::{Error, Result};
use crate::graph::Graph;

/// Deterministic graph families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassicFamily {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Hypercube(u32),
    /// Complete graph on `clique` vertices with a path of `handle` extra
    /// vertices hanging off clique vertex `clique - 1`.
    Lollipop { clique: usize, handle: usize },
}

pub fn classic_graph(family: ClassicFamily) -> Result<Graph> {
    match family {
        ClassicFamily::Path(n) => {
            if n == 0 {
                return Err(Error::BadParams("path needs n >= 1".into()));
            }
            let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            Graph::from_edge_list(n, &e)
        }
        ClassicFamily::Cycle(n) => {
            if n < 3 {
                return Err(Error::BadParams("cycle needs n >= 3".into()));
            }
            let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Graph::from_edge_list(n, &e)
        }
        ClassicFamily::Complete(n) => {
            if n == 0 {
                return Err(Error::BadParams("complete graph needs n >= 1".into()));
            }
            Graph::from_edge_list(n, &clique_edges(n))
        }
        ClassicFamily::Hypercube(d) => hypercube(d),
        ClassicFamily::Lollipop { clique, handle } => {
            if clique < 3 || handle < 1 {
                return Err(Error::BadParams(
                    "lollipop needs clique >= 3 and handle >= 1".into(),
                ));
            }
            let mut e = clique_edges(clique);
            for i in 0..handle {
                e.push((clique - 1 + i, clique + i));
            }
            Graph::from_edge_list(clique + handle, &e)
        }
    }
}

/// The `d`-dimensional hypercube on `2^d` vertices; `u ~ v` iff their labels
/// differ in one bit.
pub fn hypercube(d: u32) -> Result<Graph> {
    if d == 0 || d > 24 {
        return Err(Error::BadParams(format!("hypercube dimension {d} not in 1..=24")));
    }
    let n = 1usize << d;
    let mut e = Vec::with_capacity(d as usize * n / 2);
    for v in 0..n {
        for b in 0..d {
            let w = v ^ (1 << b);
            if v < w {
                e.push((v, w));
            }
        }
    }
    Graph::from_edge_list(n, &e)
}

fn clique_edges(n: usize) -> Vec<(usize, usize)> {
    let mut e = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            e.push((i, j));
        }
    }
    e
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        let p = classic_graph(ClassicFamily::Path(4)).unwrap();
        assert_eq!(p.m(), 3);
        assert_eq!(p.degrees(), vec![1, 2, 2, 1]);
        let h = classic_graph(ClassicFamily::Hypercube(3)).unwrap();
        assert_eq!((h.n(), h.m()), (8, 12));
        let l = classic_graph(ClassicFamily::Lollipop { clique: 4, handle: 3 }).unwrap();
        assert_eq!((l.n(), l.m()), (7, 9));
        assert!(l.is_connected());
        assert_eq!(l.degree(6), 1);
        let c = classic_graph(ClassicFamily::Cycle(5)).unwrap();
        assert!(c.degrees().iter().all(|&d| d == 2));
    }

    #[test]
    fn bad_params() {
        assert!(classic_graph(ClassicFamily::Lollipop { clique: 2, handle: 1 }).is_err());
        assert!(classic_graph(ClassicFamily::Lollipop { clique: 3, handle: 0 }).is_err());
        assert!(classic_graph(ClassicFamily::Cycle(2)).is_err());
        assert!(hypercube(0).is_err());
    }
}

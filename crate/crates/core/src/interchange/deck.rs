use rand::Rng as _;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng::Rng;

/// Cards on vertices: `card_at[v]` is the card sitting at vertex `v`, and
/// `pos_of[c]` is the vertex holding card `c`. The two are kept inverse.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DeckState {
    card_at: Vec<usize>,
    pos_of: Vec<usize>,
}

impl DeckState {
    /// Card `v` at vertex `v`.
    pub fn identity(n: usize) -> DeckState {
        DeckState {
            card_at: (0..n).collect(),
            pos_of: (0..n).collect(),
        }
    }

    pub fn from_card_at(card_at: Vec<usize>) -> Result<DeckState> {
        let n = card_at.len();
        let mut pos_of = vec![usize::MAX; n];
        for (v, &c) in card_at.iter().enumerate() {
            if c >= n {
                return Err(Error::OutOfRange { index: c, limit: n });
            }
            if pos_of[c] != usize::MAX {
                return Err(Error::BadParams(format!("card {c} placed twice")));
            }
            pos_of[c] = v;
        }
        Ok(DeckState { card_at, pos_of })
    }

    pub fn n(&self) -> usize {
        self.card_at.len()
    }

    pub fn card_at(&self) -> &[usize] {
        &self.card_at
    }

    pub fn pos_of(&self) -> &[usize] {
        &self.pos_of
    }

    pub fn position(&self, card: usize) -> usize {
        self.pos_of[card]
    }

    /// Exchanges the cards at vertices `u` and `v`.
    pub fn swap_vertices(&mut self, u: usize, v: usize) {
        let (a, b) = (self.card_at[u], self.card_at[v]);
        self.card_at.swap(u, v);
        self.pos_of[a] = v;
        self.pos_of[b] = u;
        debug_assert!(self.is_consistent());
    }

    pub fn is_consistent(&self) -> bool {
        self.card_at.len() == self.pos_of.len()
            && self
                .card_at
                .iter()
                .enumerate()
                .all(|(v, &c)| c < self.pos_of.len() && self.pos_of[c] == v)
    }

    /// One move with the edge and coin fixed by the caller.
    pub fn apply(&mut self, g: &Graph, edge: usize, swap: bool) {
        if swap {
            let (u, v) = g.edges()[edge];
            self.swap_vertices(u, v);
        }
    }

    /// One step of the lazy interchange process: a uniform edge, then a fair
    /// coin deciding whether its two cards are exchanged.
    pub fn step(&mut self, g: &Graph, rng: &mut Rng) {
        if g.m() == 0 {
            return;
        }
        let edge = rng.random_range(0..g.m());
        let swap: bool = rng.random();
        self.apply(g, edge, swap);
    }

    pub fn run_steps(&mut self, g: &Graph, t: usize, rng: &mut Rng) {
        for _ in 0..t {
            self.step(g, rng);
        }
    }

    /// Number of cards not at their starting vertex in the identity deck.
    pub fn displaced(&self) -> usize {
        self.card_at.iter().enumerate().filter(|&(v, &c)| v != c).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::RngSeed;

    #[test]
    fn forced_moves() {
        let k2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        let mut d = DeckState::identity(2);
        d.apply(&k2, 0, false);
        assert_eq!(d.card_at(), &[0, 1]);
        d.apply(&k2, 0, true);
        assert_eq!(d.card_at(), &[1, 0]);
        d.apply(&k2, 0, true);
        assert_eq!(d, DeckState::identity(2));

        let p3 = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        let mut d = DeckState::identity(3);
        d.apply(&p3, 1, true);
        assert_eq!(d.card_at(), &[0, 2, 1]);
        assert_eq!(d.pos_of(), &[0, 2, 1]);
    }

    #[test]
    fn zero_steps_is_identity() {
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        let mut d = DeckState::identity(3);
        d.run_steps(&g, 0, &mut RngSeed(1).rng());
        assert_eq!(d, DeckState::identity(3));
        assert_eq!(DeckState::identity(1).n(), 1);
    }

    #[test]
    fn k2_swap_frequency() {
        let k2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        let mut rng = RngSeed(2).rng();
        let reps = 100_000;
        let swapped = (0..reps)
            .filter(|_| {
                let mut d = DeckState::identity(2);
                d.step(&k2, &mut rng);
                d.card_at()[0] == 1
            })
            .count();
        let f = swapped as f64 / reps as f64;
        assert!((f - 0.5).abs() < 0.005, "{f}");
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(DeckState::from_card_at(vec![0, 0]).is_err());
        assert!(DeckState::from_card_at(vec![0, 2]).is_err());
        assert!(DeckState::from_card_at(vec![1, 0]).unwrap().is_consistent());
    }
}

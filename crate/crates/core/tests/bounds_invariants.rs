mod common;

use common::{connected_graphs, random_connected};
use mixlab::bounds::{
    build_path_system, tree_hitting_srw, wilson_distinguisher_mc, wilson_plan, hitting_times, Walk,
};
use mixlab::generators::{classic_graph, uniform_labelled_tree, ClassicFamily};
use mixlab::interchange::{exact_mixing_times, factorial, index_perm, DeckState, ExactEvolution};
use mixlab::spectral::fiedler;
use mixlab::RngSeed;

#[test]
fn card_increments_are_negatively_correlated() {
    for g in (3..=5).flat_map(connected_graphs).step_by(7) {
        let n = g.n();
        let xi = fiedler(&g).unwrap().eigenvector.values().to_vec();
        let w = 1.0 / (2.0 * g.m() as f64);
        for state in 0..factorial(n) {
            let start = DeckState::from_card_at(index_perm(state, n).unwrap()).unwrap();
            // E[Δ_i Δ_j | state] over the 2m equally likely (edge, coin) moves
            let mut e = vec![0.0; n * n];
            for edge in 0..g.m() {
                let mut next = start.clone();
                next.apply(&g, edge, true);
                let delta: Vec<f64> =
                    (0..n).map(|c| xi[next.position(c)] - xi[start.position(c)]).collect();
                for i in 0..n {
                    for j in 0..n {
                        e[i * n + j] += w * delta[i] * delta[j];
                    }
                }
            }
            for i in 0..n {
                for j in (0..n).filter(|&j| j != i) {
                    assert!(e[i * n + j] <= 1e-15);
                }
            }
        }
    }
}

#[test]
fn positive_side_cards_are_negatively_correlated() {
    for g in (3..=5).flat_map(connected_graphs).step_by(7).chain([classic_graph(ClassicFamily::Path(4)).unwrap()]) {
        let n = g.n();
        let xi = fiedler(&g).unwrap().eigenvector.values().to_vec();
        let side: Vec<usize> = (0..n).filter(|&v| xi[v] > 0.0).collect();
        let pos = |c: &[usize], card: usize| c.iter().position(|&x| x == card).unwrap();
        let mut ev = ExactEvolution::new(&g).unwrap();
        for _ in 0..=30 {
            let law = ev.distribution();
            for &i in &side {
                for &j in side.iter().filter(|&&j| j != i) {
                    let joint = law.expect(|c| xi[pos(c, i)] * xi[pos(c, j)]);
                    let cov = joint - law.expect(|c| xi[pos(c, i)]) * law.expect(|c| xi[pos(c, j)]);
                    assert!(cov <= 1e-12, "cov({i},{j}) = {cov}");
                }
            }
            ev.step();
        }
    }
}

#[test]
fn wilson_bound_is_valid_on_small_graphs() {
    let graphs: Vec<_> = (3..=5).flat_map(connected_graphs).step_by(3).collect();
    for (k, g) in graphs.iter().enumerate() {
        let f = fiedler(g).unwrap();
        let gamma = f.eigenvalue / (2.0 * g.m() as f64);
        // tiny graphs can have a plan time of zero
        let Ok(plan) = wilson_plan(g, &f.eigenvector, gamma, 0.25) else { continue };
        let mut ev = ExactEvolution::new(g).unwrap();
        ev.advance_to(plan.t);
        let exact_tv = ev.tv_to_uniform();
        let d = wilson_distinguisher_mc(g, &plan, 1000, RngSeed(k as u64)).unwrap();
        assert!(d.tv_lower_bound <= exact_tv + 3.0 * d.std_error);
        if d.tv_lower_bound > 0.25 {
            assert!(exact_mixing_times(g).unwrap().tau_mix >= plan.t);
        }
    }
}

#[test]
fn canonical_paths_are_geodesics_with_bounded_reuse() {
    for g in random_connected(30, 0.12, 10, 7) {
        let ps = build_path_system(&g).unwrap();
        let diam = ps.diameter();
        for u in 0..g.n() {
            let dist = g.bfs_distances(u).unwrap();
            for v in 0..g.n() {
                if u == v {
                    continue;
                }
                let p = ps.path(u, v).unwrap();
                assert_eq!(p.len() - 1, dist.get(v).unwrap());
                assert!(p.windows(2).all(|w| g.has_edge(w[0], w[1])));
                assert!(ps.rep_length(u, v).unwrap() < 2 * diam);
                assert!(ps.edge_uses(u, v).unwrap().iter().all(|&(_, uses)| uses <= 2));
            }
        }
    }
}

#[test]
fn tree_formula_matches_linear_solve() {
    let mut rng = RngSeed(12).rng();
    for n in (2..=60).step_by(3) {
        let t = uniform_labelled_tree(n, &mut rng).unwrap();
        let h = hitting_times(&t, n / 2, Walk::Srw).unwrap();
        for (l, &solved) in h.iter().enumerate() {
            let formula = tree_hitting_srw(&t, l, n / 2).unwrap();
            assert!((solved - formula).abs() <= 1e-9 * formula.max(1.0));
        }
    }
}

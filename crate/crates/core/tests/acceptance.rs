//! Acceptance suite. Each test checks one acceptance criterion and prints a
//! single PASS or FAIL line (run with `--nocapture` to see them).

use std::collections::BTreeSet;
use std::panic::{catch_unwind, resume_unwind, AssertUnwindSafe};

use cubulate::cubecomplex::fill_cubes;
use cubulate::cubulation::{cubulate, enumerate_oracle};
use cubulate::fixtures;
use cubulate::morphism::{compose_maps, permutation_order, GroupAction};
use cubulate::random::random_corpus;
use cubulate::verify::{
    span_closure_rounds, verify_halfspace_bijection, verify_idempotence,
    verify_interval_bound, verify_interval_characterization, verify_median_graph,
    verify_metric_coincidence, verify_span, Counterexample,
};
use cubulate::wallspace::WallSpace;
use cubulate::SimpleGraph;

const CORPUS_SEED: u64 = 0x5eed;

fn criterion(number: usize, name: &str, body: impl FnOnce()) {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(()) => println!("criterion {:2} ({}): PASS", number, name),
        Err(e) => {
            println!("criterion {:2} ({}): FAIL", number, name);
            resume_unwind(e);
        }
    }
}

fn all_fixtures() -> Vec<WallSpace> {
    vec![fixtures::pt(), fixtures::two(), fixtures::p3(), fixtures::hex6()]
}

/// Fixtures plus 200 seeded random spaces, shared by criteria 2, 3, 4, 7, 8, 9.
fn corpus() -> Vec<WallSpace> {
    let mut spaces = all_fixtures();
    spaces.extend(random_corpus(CORPUS_SEED, 200, 7, 9));
    spaces
}

fn cube_graph(dim: usize) -> SimpleGraph {
    let n = 1usize << dim;
    let mut g = SimpleGraph::new(n);
    for u in 0..n {
        for b in 0..dim {
            let v = u ^ (1 << b);
            if u < v {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

#[test]
fn criterion_01_hexagon_cubulation() {
    criterion(1, "hexagon cubulation", || {
        let space = fixtures::hex6();
        let g = cubulate(&space);
        assert_eq!(g.num_vertices(), 8);
        assert_eq!(g.edges().len(), 12);
        let iso =
            cubulate::verify::graphs_isomorphic(&g.underlying_graph(), &cube_graph(3)).unwrap();
        assert!(iso.is_some(), "not isomorphic to the 3-cube graph");
        for x in 0..6 {
            g.sigma(x).unwrap();
        }
        let complex = fill_cubes(&g);
        assert_eq!(complex.f_vector(), &[8, 12, 6, 1]);
        assert_eq!(complex.euler_characteristic(), 1);
    });
}

#[test]
fn criterion_02_oracle_equivalence() {
    criterion(2, "oracle equivalence", || {
        for space in corpus() {
            let bfs: BTreeSet<String> = cubulate(&space)
                .vertices()
                .iter()
                .map(|o| space.bitstring(o))
                .collect();
            let oracle: BTreeSet<String> = enumerate_oracle(&space)
                .unwrap()
                .iter()
                .map(|o| space.bitstring(o))
                .collect();
            assert_eq!(bfs, oracle);
        }
    });
}

#[test]
fn criterion_03_median_property() {
    criterion(3, "median property", || {
        for space in corpus() {
            let g = cubulate(&space);
            if g.num_vertices() > 64 {
                continue;
            }
            let report = verify_median_graph(&g.underlying_graph()).unwrap();
            assert!(report.pass, "median check failed: {:?}", report.counterexample);
        }
    });
}

#[test]
fn criterion_04_distance_law() {
    criterion(4, "distance law", || {
        for space in corpus() {
            let g = cubulate(&space);
            let graph = g.underlying_graph();
            let dist = graph.all_pairs_distances();
            for u in 0..g.num_vertices() {
                for v in 0..g.num_vertices() {
                    assert_eq!(dist[u][v] as usize, g.graph_distance(u, v).unwrap());
                }
            }
            for x in 0..space.num_points() {
                for y in 0..space.num_points() {
                    assert_eq!(
                        space.wall_metric(x, y).unwrap(),
                        g.graph_distance(g.sigma(x).unwrap(), g.sigma(y).unwrap()).unwrap()
                    );
                }
            }
        }
    });
}

#[test]
fn criterion_05_interval_characterization() {
    criterion(5, "interval characterization", || {
        for space in all_fixtures() {
            let report = verify_interval_characterization(&cubulate(&space));
            assert!(report.pass, "{:?}", report.counterexample);
        }
    });
}

#[test]
fn criterion_06_halfspace_bijection() {
    criterion(6, "halfspace bijection", || {
        let mut checked = 0usize;
        for space in corpus() {
            let g = cubulate(&space);
            if g.num_vertices() > 16 {
                continue;
            }
            let report = verify_halfspace_bijection(&g).unwrap();
            assert!(report.pass, "{:?}", report.counterexample);
            let brute =
                cubulate::verify::graph_halfspaces_bruteforce(&g.underlying_graph()).unwrap();
            assert_eq!(brute.len(), 2 * space.num_walls());
            checked += 1;
        }
        assert!(checked > 0);
    });
}

#[test]
fn criterion_07_metric_coincidence_and_span() {
    criterion(7, "metric coincidence and span", || {
        for space in corpus() {
            let g = cubulate(&space);
            let metric = verify_metric_coincidence(&g);
            assert!(metric.pass, "{:?}", metric.counterexample);
            let span = verify_span(&g);
            assert!(span.pass, "{:?}", span.counterexample);
        }
        let g = cubulate(&fixtures::hex6());
        let rounds = span_closure_rounds(&g);
        assert_eq!(rounds.len(), 2, "closure should finish in one round");
        assert_eq!(rounds[0].len(), 6);
        assert_eq!(rounds[1].len(), 2);
        for &v in &rounds[1] {
            assert!(g.principal_point(v).is_none());
        }
    });
}

#[test]
fn criterion_08_idempotence() {
    criterion(8, "idempotence", || {
        let mut done = 0usize;
        for space in corpus() {
            let g = cubulate(&space);
            if g.num_vertices() > 64 {
                continue;
            }
            let report = verify_idempotence(&g.underlying_graph()).unwrap();
            assert!(report.pass, "{:?}", report.counterexample);
            done += 1;
            if done == 50 {
                break;
            }
        }
        assert_eq!(done, 50);
    });
}

#[test]
fn criterion_09_interval_bound() {
    criterion(9, "interval bound", || {
        for space in corpus() {
            let report = verify_interval_bound(&cubulate(&space));
            assert!(report.pass, "{:?}", report.counterexample);
        }
    });
}

#[test]
fn criterion_10_action_extension() {
    criterion(10, "action extension", || {
        let space = fixtures::hex6();
        let g = cubulate(&space);
        let rotation: Vec<usize> = (0..6).map(|x| (x + 1) % 6).collect();
        let reflection: Vec<usize> = (0..6).map(|x| (5 + 6 - x) % 6).collect();
        let action =
            GroupAction::new(space.clone(), vec![rotation.clone(), reflection.clone()]).unwrap();
        let extended = action.extend(&g).unwrap();

        let rot = &extended[0];
        assert!(rot.graph_automorphism);
        assert_eq!(permutation_order(&rot.vertex_map), 6);
        let refl = &extended[1];
        assert!(refl.graph_automorphism);
        assert_eq!(permutation_order(&refl.vertex_map), 2);

        // equivariance: σ(g·x) = g_*(σ_x)
        for (perm, map) in [(&rotation, rot), (&reflection, refl)] {
            for x in 0..6 {
                assert_eq!(g.sigma(perm[x]).unwrap(), map.apply(g.sigma(x).unwrap()));
            }
        }

        // words of length <= 3 over {rotation, reflection}
        let gens = [(&rotation, rot), (&reflection, refl)];
        let identity: Vec<usize> = (0..6).collect();
        let id_vertices: Vec<usize> = (0..g.num_vertices()).collect();
        let mut words = vec![(identity, id_vertices)];
        for _ in 0..3 {
            let mut next = Vec::new();
            for (points, vertices) in &words {
                for (gen_points, gen_map) in gens {
                    next.push((
                        compose_maps(points, gen_points),
                        compose_maps(vertices, &gen_map.vertex_map),
                    ));
                }
            }
            words.extend(next.iter().cloned());
            for (points, vertices) in next {
                let direct = GroupAction::new(space.clone(), vec![points])
                    .unwrap()
                    .extend(&g)
                    .unwrap();
                assert_eq!(direct[0].vertex_map, vertices);
            }
            words.dedup_by(|a, b| a.0 == b.0);
        }
    });
}

#[test]
fn criterion_11_negative_control() {
    criterion(11, "negative control", || {
        let mut c6 = SimpleGraph::new(6);
        for i in 0..6 {
            c6.add_edge(i, (i + 1) % 6).unwrap();
        }
        let report = verify_median_graph(&c6).unwrap();
        assert!(!report.pass);
        assert!(matches!(report.counterexample, Some(Counterexample::VertexTriple { .. })));

        // two hexagons of the hexagonal tiling sharing the edge (0, 1):
        // cycle 0..5 plus the path 1-6-7-8-9-0
        let mut patch = SimpleGraph::new(10);
        for i in 0..6 {
            patch.add_edge(i, (i + 1) % 6).unwrap();
        }
        patch.add_edge(1, 6).unwrap();
        patch.add_edge(6, 7).unwrap();
        patch.add_edge(7, 8).unwrap();
        patch.add_edge(8, 9).unwrap();
        patch.add_edge(9, 0).unwrap();
        let report = verify_median_graph(&patch).unwrap();
        assert!(!report.pass);
        assert!(matches!(report.counterexample, Some(Counterexample::VertexTriple { .. })));
    });
}

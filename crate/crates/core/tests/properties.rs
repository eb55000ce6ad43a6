//! Property tests: invariants over the fixtures and a seeded random corpus.

use proptest::prelude::*;

use cubulate::cubulation::{cubulate, enumerate_oracle};
use cubulate::fixtures;
use cubulate::io::{export_wallspace, parse_wallspace};
use cubulate::random::{random_corpus, random_wallspace};
use cubulate::verify::{verify_median_graph, verify_metric_coincidence, verify_span};
use cubulate::wallspace::WallSpace;

fn all_fixtures() -> Vec<WallSpace> {
    vec![fixtures::pt(), fixtures::two(), fixtures::p3(), fixtures::hex6()]
}

/// The pairwise-intersection test agrees with the upward-closure axiom,
/// exhaustively over every orientation.
fn upward_closed(space: &WallSpace, o: &cubulate::Orientation) -> bool {
    let w = space.num_walls();
    for i in 0..w {
        let a = space.wall(i).side(o.bit(i));
        for j in 0..w {
            for side in [false, true] {
                let b = space.wall(j).side(side);
                if a.is_subset(b) && space.wall(j).side(o.bit(j)) != b {
                    return false;
                }
            }
        }
    }
    true
}

#[test]
fn ultrafilter_definitions_agree_exhaustively() {
    let mut spaces = all_fixtures();
    spaces.extend(random_corpus(11, 30, 7, 9));
    for space in spaces {
        assert!(space.num_walls() <= 12);
        for choice in 0u64..(1 << (space.num_walls() - 1)) {
            let o = space.orientation_from_bits(choice << 1);
            assert_eq!(
                space.is_ultrafilter(&o).unwrap(),
                upward_closed(&space, &o),
                "definitions disagree on {}",
                space.bitstring(&o)
            );
        }
    }
}

#[test]
fn flip_is_involutive_on_random_spaces() {
    for space in random_corpus(23, 40, 7, 9) {
        for x in 0..space.num_points() {
            let o = space.principal(x).unwrap();
            for i in space.minimal_walls(&o).unwrap().iter() {
                let back = space.flip(&space.flip(&o, i).unwrap(), i).unwrap();
                assert_eq!(back, o);
            }
        }
    }
}

#[test]
fn boolean_median_of_ultrafilters_is_an_ultrafilter() {
    for space in all_fixtures().into_iter().chain(random_corpus(31, 20, 6, 8)) {
        let ultra = enumerate_oracle(&space).unwrap();
        for a in &ultra {
            for b in &ultra {
                for c in &ultra {
                    let m = space.boolean_median(a, b, c).unwrap();
                    assert!(space.is_ultrafilter(&m).unwrap());
                }
            }
        }
    }
}

#[test]
fn principal_symdiff_equals_wall_metric() {
    for space in random_corpus(47, 50, 7, 9) {
        for x in 0..space.num_points() {
            for y in 0..space.num_points() {
                let sd = space
                    .symdiff(&space.principal(x).unwrap(), &space.principal(y).unwrap())
                    .unwrap();
                assert_eq!(sd.len(), space.wall_metric(x, y).unwrap());
            }
        }
    }
}

#[test]
fn cubulations_are_median_and_metric_coincident() {
    for space in random_corpus(59, 60, 6, 8) {
        let g = cubulate(&space);
        assert!(verify_median_graph(&g.underlying_graph()).unwrap().pass);
        assert!(verify_metric_coincidence(&g).pass);
        assert!(verify_span(&g).pass);
    }
}

#[test]
fn halfspace_lifts_are_convex() {
    for space in all_fixtures().into_iter().chain(random_corpus(67, 20, 6, 7)) {
        let g = cubulate(&space);
        for i in 0..space.num_walls() {
            for side in [false, true] {
                let lift = g.halfspace_lift(i, side).unwrap();
                for &u in &lift {
                    for &v in &lift {
                        for w in g.interval(u, v).unwrap() {
                            assert!(lift.contains(&w));
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn median_axioms_on_cubulations() {
    for space in all_fixtures().into_iter().chain(random_corpus(71, 20, 6, 8)) {
        let g = cubulate(&space);
        if g.num_vertices() > 64 {
            continue;
        }
        let n = g.num_vertices();
        for u in 0..n {
            // [v, v] = {v}
            assert_eq!(g.interval(u, u).unwrap(), vec![u]);
            for v in 0..n {
                let uv = g.interval(u, v).unwrap();
                // z ∈ [u, v] implies [u, z] ⊆ [u, v]
                for &z in &uv {
                    for t in g.interval(u, z).unwrap() {
                        assert!(uv.contains(&t));
                    }
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn wall_metric_triangle_inequality(seed in any::<u64>()) {
        let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(seed);
        let space = random_wallspace(&mut rng, 7, 9);
        for x in 0..space.num_points() {
            for y in 0..space.num_points() {
                prop_assert_eq!(
                    space.wall_metric(x, y).unwrap(),
                    space.wall_metric(y, x).unwrap()
                );
                for z in 0..space.num_points() {
                    prop_assert!(
                        space.wall_metric(x, y).unwrap()
                            <= space.wall_metric(x, z).unwrap()
                                + space.wall_metric(z, y).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn export_parse_roundtrip(seed in any::<u64>()) {
        let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(seed);
        let space = random_wallspace(&mut rng, 7, 9);
        let exported = export_wallspace(&space);
        let (reparsed, _) = parse_wallspace(&exported).unwrap();
        prop_assert_eq!(&reparsed, &space);
        prop_assert_eq!(export_wallspace(&reparsed), exported);
    }
}

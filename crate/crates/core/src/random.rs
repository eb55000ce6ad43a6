//! Seeded random wall spaces for property testing and the randomized
//! verification corpus.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::wallspace::{PointSet, RawWall, RawWallSpace, WallSpace};

/// Sample one valid wall space with at most `max_points` points and at most
/// `max_walls - 1` nontrivial walls (the trivial wall is always added).
/// Invalid samples (unseparated pairs) are rejected and redrawn.
pub fn random_wallspace(rng: &mut impl Rng, max_points: usize, max_walls: usize) -> WallSpace {
    assert!(max_points >= 1 && max_walls >= 1);
    loop {
        let n = rng.gen_range(1..=max_points);
        let wall_count = rng.gen_range(0..max_walls);
        let full = PointSet::full(n).0;
        let walls: Vec<RawWall> = (0..wall_count)
            .map(|_| {
                // nonempty proper subsets only
                let side = if full <= 1 {
                    1
                } else {
                    rng.gen_range(1..full)
                };
                RawWall::OneSided(PointSet(side))
            })
            .collect();
        let raw = RawWallSpace {
            names: (0..n).map(|x| format!("p{x}")).collect(),
            walls,
        };
        if let Ok((space, _)) = raw.build() {
            return space;
        }
    }
}

/// A reproducible corpus of valid wall spaces.
pub fn random_corpus(seed: u64, count: usize, max_points: usize, max_walls: usize) -> Vec<WallSpace> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| random_wallspace(&mut rng, max_points, max_walls))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_reproducible() {
        let a = random_corpus(42, 10, 7, 9);
        let b = random_corpus(42, 10, 7, 9);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x, y);
        }
    }

    #[test]
    fn corpus_spaces_are_valid() {
        for space in random_corpus(7, 50, 7, 9) {
            assert!(space.num_points() <= 7);
            assert!(space.num_walls() <= 9);
            // separation: all signatures distinct
            for x in 0..space.num_points() {
                for y in (x + 1)..space.num_points() {
                    assert!(space.wall_metric(x, y).unwrap() > 0);
                }
            }
        }
    }
}

//! Cube filling over a median graph: add an n-cube whenever its (n−1)-skeleton
//! is present. The complex is purely combinatorial; no coordinates are kept.

use std::collections::{HashMap, HashSet};

use crate::cubulation::MedianGraph;
use crate::wallspace::WallSet;

/// A k-cube, recorded canonically: the base is the vertex with bit 0 on every
/// wall of the cube (the lexicographically least bitstring of its corners),
/// and the wall set is sorted by construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Cube {
    pub base: usize,
    pub walls: WallSet,
}

impl Cube {
    pub fn dim(&self) -> usize {
        self.walls.len()
    }
}

/// The combinatorial cube complex over a median graph.
#[derive(Clone, Debug)]
pub struct CubeComplex {
    /// Per dimension, the recorded cubes: dim 0 = vertices, dim 1 = edges.
    cubes: Vec<Vec<Cube>>,
    f_vector: Vec<usize>,
    /// Orientation bits per graph vertex, for containment tests.
    vertex_bits: Vec<u64>,
}

/// Fill cubes dimension by dimension over the median graph.
pub fn fill_cubes(g: &MedianGraph) -> CubeComplex {
    let space = g.space();
    let mut by_dim: Vec<HashSet<Cube>> = Vec::new();

    by_dim.push(
        (0..g.num_vertices())
            .map(|v| Cube {
                base: v,
                walls: WallSet::EMPTY,
            })
            .collect(),
    );

    // neighbor along a given wall, where defined
    let mut step: HashMap<(usize, usize), usize> = HashMap::new();
    let mut edges: HashSet<Cube> = HashSet::new();
    for e in g.edges() {
        step.insert((e.u, e.wall), e.v);
        step.insert((e.v, e.wall), e.u);
        let base = if g.vertices()[e.u].bit(e.wall) { e.v } else { e.u };
        edges.insert(Cube {
            base,
            walls: WallSet::singleton(e.wall),
        });
    }
    by_dim.push(edges);

    // Squares: two walls alternating around a 4-cycle, detected from the
    // corner with both bits zero.
    let mut squares: HashSet<Cube> = HashSet::new();
    for b in 0..g.num_vertices() {
        let nbrs = g.neighbors(b);
        for (pos, &(u, i)) in nbrs.iter().enumerate() {
            for &(v, j) in &nbrs[pos + 1..] {
                let (i, j, u, v) = if i < j { (i, j, u, v) } else { (j, i, v, u) };
                let ob = &g.vertices()[b];
                if ob.bit(i) || ob.bit(j) {
                    continue;
                }
                let opposite = space.orientation_from_bits(ob.bits() | 1 << i | 1 << j);
                if let Some(t) = g.vertex_index(&opposite) {
                    if step.get(&(u, j)) == Some(&t) && step.get(&(v, i)) == Some(&t) {
                        squares.insert(Cube {
                            base: b,
                            walls: [i, j].into_iter().collect(),
                        });
                    }
                }
            }
        }
    }
    by_dim.push(squares);

    // Higher cubes: (b, S ∪ {j}) is added iff all its base-b faces are
    // recorded and all 2^(k) corners are vertices.
    loop {
        let prev = by_dim.last().unwrap();
        if prev.is_empty() {
            by_dim.pop();
            break;
        }
        let mut next: HashSet<Cube> = HashSet::new();
        let mut candidates: HashSet<Cube> = HashSet::new();
        for cube in prev {
            let base_bits = g.vertices()[cube.base].bits();
            for j in 1..space.num_walls() {
                if cube.walls.contains(j) || base_bits >> j & 1 == 1 {
                    continue;
                }
                if step.contains_key(&(cube.base, j)) {
                    candidates.insert(Cube {
                        base: cube.base,
                        walls: cube.walls.union(WallSet::singleton(j)),
                    });
                }
            }
        }
        'cand: for cand in candidates {
            for s in cand.walls.iter() {
                let mut face = cand.walls;
                face.remove(s);
                if !prev.contains(&Cube {
                    base: cand.base,
                    walls: face,
                }) {
                    continue 'cand;
                }
            }
            let base_bits = g.vertices()[cand.base].bits();
            let walls: Vec<usize> = cand.walls.to_vec();
            for subset in 0u64..(1 << walls.len()) {
                let mut bits = base_bits;
                for (pos, &wall) in walls.iter().enumerate() {
                    if subset >> pos & 1 == 1 {
                        bits |= 1 << wall;
                    }
                }
                if g.vertex_index(&space.orientation_from_bits(bits)).is_none() {
                    continue 'cand;
                }
            }
            next.insert(cand);
        }
        if next.is_empty() {
            break;
        }
        by_dim.push(next);
    }

    let mut cubes: Vec<Vec<Cube>> = by_dim
        .into_iter()
        .map(|set| {
            let mut v: Vec<Cube> = set.into_iter().collect();
            v.sort_by_key(|c| (g.space().bitstring(&g.vertices()[c.base]), c.walls.to_vec()));
            v
        })
        .collect();
    while cubes.len() > 1 && cubes.last().is_some_and(Vec::is_empty) {
        cubes.pop();
    }
    let f_vector = cubes.iter().map(Vec::len).collect();
    CubeComplex {
        cubes,
        f_vector,
        vertex_bits: g.vertices().iter().map(|o| o.bits()).collect(),
    }
}

impl CubeComplex {
    /// (V, E, #squares, #3-cubes, ...), trimmed after the last nonzero entry.
    pub fn f_vector(&self) -> &[usize] {
        &self.f_vector
    }

    pub fn dim(&self) -> usize {
        self.cubes.len() - 1
    }

    pub fn cubes_of_dim(&self, k: usize) -> &[Cube] {
        self.cubes.get(k).map_or(&[], Vec::as_slice)
    }

    /// Alternating sum of the f-vector.
    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector
            .iter()
            .enumerate()
            .map(|(k, &count)| if k % 2 == 0 { count as i64 } else { -(count as i64) })
            .sum()
    }

    /// Cubes not contained in any recorded cube of the next dimension.
    pub fn maximal_cubes(&self) -> Vec<Cube> {
        let mut out = Vec::new();
        for k in 0..self.cubes.len() {
            let above = self.cubes_of_dim(k + 1);
            for cube in &self.cubes[k] {
                let contained = above.iter().any(|big| self.contains(big, cube));
                if !contained {
                    out.push(*cube);
                }
            }
        }
        out
    }

    /// Whether `small`'s corner set is contained in `big`'s. Only meaningful
    /// within one complex, where bases share the vertex numbering.
    fn contains(&self, big: &Cube, small: &Cube) -> bool {
        if !small.walls.is_subset(big.walls) {
            return false;
        }
        // The small base must agree with the big base outside big's walls;
        // the big base has bit 0 on all of its walls.
        let small_base = self.base_bits(small);
        let big_base = self.base_bits(big);
        small_base & !big.walls.0 == big_base
    }

    fn base_bits(&self, cube: &Cube) -> u64 {
        // bases are vertex ids into the graph; the complex stores bit images
        // alongside via the sorted dim-0 list, which is in vertex order
        self.vertex_bits[cube.base]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubulation::cubulate;
    use crate::fixtures;

    #[test]
    fn hex6_fills_one_3_cube() {
        let g = cubulate(&fixtures::hex6());
        let c = fill_cubes(&g);
        assert_eq!(c.f_vector(), &[8, 12, 6, 1]);
        assert_eq!(c.euler_characteristic(), 1);
        let maximal = c.maximal_cubes();
        assert_eq!(maximal.len(), 1);
        assert_eq!(maximal[0].dim(), 3);
    }

    #[test]
    fn p3_has_no_squares() {
        let g = cubulate(&fixtures::p3());
        let c = fill_cubes(&g);
        assert_eq!(c.f_vector(), &[3, 2]);
        assert_eq!(c.euler_characteristic(), 1);
        assert_eq!(
            c.maximal_cubes().iter().map(Cube::dim).collect::<Vec<_>>(),
            vec![1, 1]
        );
    }

    #[test]
    fn pt_is_a_point() {
        let c = fill_cubes(&cubulate(&fixtures::pt()));
        assert_eq!(c.f_vector(), &[1]);
        assert_eq!(c.euler_characteristic(), 1);
        assert_eq!(c.maximal_cubes().len(), 1);
    }

    #[test]
    fn two_has_one_maximal_edge() {
        let c = fill_cubes(&cubulate(&fixtures::two()));
        assert_eq!(c.f_vector(), &[2, 1]);
        let maximal = c.maximal_cubes();
        assert_eq!(maximal.len(), 1);
        assert_eq!(maximal[0].dim(), 1);
    }

    #[test]
    fn faces_are_closed_downward() {
        let g = cubulate(&fixtures::hex6());
        let space = g.space().clone();
        let c = fill_cubes(&g);
        for k in (1..=c.dim()).rev() {
            for cube in c.cubes_of_dim(k) {
                let base_bits = g.vertices()[cube.base].bits();
                for s in cube.walls.iter() {
                    let mut face_walls = cube.walls;
                    face_walls.remove(s);
                    // The base-side face shares the base; the far face is
                    // based at the vertex across wall s.
                    let near = Cube {
                        base: cube.base,
                        walls: face_walls,
                    };
                    assert!(c.cubes_of_dim(k - 1).contains(&near));
                    let far_base = g
                        .vertex_index(&space.orientation_from_bits(base_bits | 1 << s))
                        .unwrap();
                    let far = Cube {
                        base: far_base,
                        walls: face_walls,
                    };
                    assert!(c.cubes_of_dim(k - 1).contains(&far));
                }
            }
        }
    }
}

//! Morphisms of spaces with walls, the induced pushforward on cubulations,
//! and extension of group actions to graph automorphisms.

use std::collections::HashMap;

use crate::cubulation::MedianGraph;
use crate::error::{Error, Result};
use crate::ultrafilter::Orientation;
use crate::wallspace::{PointSet, WallSpace};

/// A validated morphism of wall spaces: a point map whose preimage of every
/// target halfspace is a source halfspace (or ∅ or X).
#[derive(Clone, Debug)]
pub struct WallMap {
    source: WallSpace,
    target: WallSpace,
    map: Vec<usize>,
    /// side bitmask → (source wall, which side), for pushforward lookups.
    side_lookup: HashMap<u64, (usize, bool)>,
}

/// Check the morphism condition, returning the offending (target wall, side)
/// on failure.
pub fn check_morphism(
    source: &WallSpace,
    target: &WallSpace,
    map: &[usize],
) -> std::result::Result<(), (usize, u8)> {
    let sides = source_sides(source);
    for (i, wall) in target.walls().iter().enumerate() {
        for (side_idx, side) in [(0u8, wall.side0), (1u8, wall.side1)] {
            let pre = preimage(source, map, side);
            let trivial = pre.is_empty() || pre == source.full_set();
            if !trivial && !sides.contains_key(&pre.0) {
                return Err((i, side_idx));
            }
        }
    }
    Ok(())
}

fn preimage(source: &WallSpace, map: &[usize], side: PointSet) -> PointSet {
    (0..source.num_points())
        .filter(|&x| side.contains(map[x]))
        .collect()
}

fn source_sides(source: &WallSpace) -> HashMap<u64, (usize, bool)> {
    let mut sides = HashMap::new();
    for (i, wall) in source.walls().iter().enumerate() {
        sides.insert(wall.side0.0, (i, false));
        sides.insert(wall.side1.0, (i, true));
    }
    sides
}

impl WallMap {
    pub fn new(source: WallSpace, target: WallSpace, map: Vec<usize>) -> Result<WallMap> {
        if map.len() != source.num_points() {
            return Err(Error::Parse(format!(
                "point map covers {} of {} source points",
                map.len(),
                source.num_points()
            )));
        }
        for &y in &map {
            target.check_point(y)?;
        }
        check_morphism(&source, &target, &map)
            .map_err(|(wall, side)| Error::InvalidMorphism { wall, side })?;
        let side_lookup = source_sides(&source);
        Ok(WallMap {
            source,
            target,
            map,
            side_lookup,
        })
    }

    pub fn source(&self) -> &WallSpace {
        &self.source
    }

    pub fn target(&self) -> &WallSpace {
        &self.target
    }

    pub fn point_map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, x: usize) -> Result<usize> {
        self.map.get(x).copied().ok_or(Error::InvalidPoint(x))
    }

    /// f_*(ω) = { A' : f⁻¹(A') ∈ ω }, one chosen side per target wall.
    pub fn pushforward(&self, o: &Orientation) -> Result<Orientation> {
        self.source.check_orientation(o)?;
        if !self.source.is_ultrafilter(o)? {
            return Err(Error::NotUltrafilter);
        }
        let mut bits = 0u64;
        for (i, wall) in self.target.walls().iter().enumerate() {
            let pre0 = preimage(&self.source, &self.map, wall.side0);
            let chosen0 = if pre0 == self.source.full_set() {
                true
            } else if pre0.is_empty() {
                false
            } else {
                let &(w, side) = self
                    .side_lookup
                    .get(&pre0.0)
                    .expect("validated morphism: preimages are sides");
                o.bit(w) == side
            };
            if !chosen0 {
                bits |= 1 << i;
            }
        }
        Ok(self.target.orientation_from_bits(bits))
    }

    /// The vertex-wise pushforward between the two cubulations.
    pub fn induced_graph_map(
        &self,
        g_src: &MedianGraph,
        g_tgt: &MedianGraph,
    ) -> Result<InducedMap> {
        if g_src.space() != &self.source || g_tgt.space() != &self.target {
            return Err(Error::SpaceMismatch);
        }
        let vertex_map: Vec<usize> = g_src
            .vertices()
            .iter()
            .map(|o| {
                let image = self.pushforward(o)?;
                Ok(g_tgt
                    .vertex_index(&image)
                    .expect("pushforward of a vertex is a vertex"))
            })
            .collect::<Result<_>>()?;

        let median_morphism = preserves_medians(&vertex_map, g_src, g_tgt);
        let graph_automorphism = is_graph_automorphism(&vertex_map, g_src, g_tgt);
        Ok(InducedMap {
            vertex_map,
            median_morphism,
            graph_automorphism,
        })
    }
}

/// An induced map between cubulations, labeled by what it verifiably is: a
/// pushforward is always a median morphism but need not preserve adjacency.
#[derive(Clone, Debug)]
pub struct InducedMap {
    pub vertex_map: Vec<usize>,
    pub median_morphism: bool,
    pub graph_automorphism: bool,
}

impl InducedMap {
    pub fn apply(&self, v: usize) -> usize {
        self.vertex_map[v]
    }
}

/// f(m(u,v,t)) = m(f(u), f(v), f(t)) over all vertex triples.
pub fn preserves_medians(map: &[usize], g_src: &MedianGraph, g_tgt: &MedianGraph) -> bool {
    let n = g_src.num_vertices();
    for u in 0..n {
        for v in u..n {
            for t in v..n {
                let m = g_src.median_vertex(u, v, t).expect("valid vertices");
                let m_img = g_tgt
                    .median_vertex(map[u], map[v], map[t])
                    .expect("valid vertices");
                if map[m] != m_img {
                    return false;
                }
            }
        }
    }
    true
}

fn is_graph_automorphism(map: &[usize], g_src: &MedianGraph, g_tgt: &MedianGraph) -> bool {
    let n = g_src.num_vertices();
    if g_tgt.num_vertices() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in map {
        if seen[v] {
            return false;
        }
        seen[v] = true;
    }
    g_src.edges().iter().all(|e| {
        g_tgt
            .neighbors(map[e.u])
            .iter()
            .any(|&(w, _)| w == map[e.v])
    })
}

/// A group acting on a wall space: finitely many generators, each a point
/// permutation that maps walls to walls.
#[derive(Clone, Debug)]
pub struct GroupAction {
    space: WallSpace,
    generators: Vec<Vec<usize>>,
}

impl GroupAction {
    pub fn new(space: WallSpace, generators: Vec<Vec<usize>>) -> Result<GroupAction> {
        let n = space.num_points();
        let sides = source_sides(&space);
        for (gi, perm) in generators.iter().enumerate() {
            if perm.len() != n {
                return Err(Error::Parse(format!(
                    "generator {gi} covers {} of {n} points",
                    perm.len()
                )));
            }
            let mut seen = vec![false; n];
            for &y in perm {
                if y >= n || seen[y] {
                    return Err(Error::Parse(format!(
                        "generator {gi} is not a permutation of the points"
                    )));
                }
                seen[y] = true;
            }
            for (wi, wall) in space.walls().iter().enumerate() {
                let image: PointSet = wall.side0.iter().map(|x| perm[x]).collect();
                if !sides.contains_key(&image.0) {
                    return Err(Error::NotWallPermuting {
                        generator: gi,
                        wall: wi,
                    });
                }
            }
        }
        Ok(GroupAction { space, generators })
    }

    pub fn space(&self) -> &WallSpace {
        &self.space
    }

    pub fn generators(&self) -> &[Vec<usize>] {
        &self.generators
    }

    /// Each generator as a validated self-map of the wall space.
    pub fn wall_maps(&self) -> Result<Vec<WallMap>> {
        self.generators
            .iter()
            .map(|perm| WallMap::new(self.space.clone(), self.space.clone(), perm.clone()))
            .collect()
    }

    /// Extend every generator to an automorphism of the cubulation.
    pub fn extend(&self, g: &MedianGraph) -> Result<Vec<InducedMap>> {
        if g.space() != &self.space {
            return Err(Error::SpaceMismatch);
        }
        self.wall_maps()?
            .iter()
            .map(|m| m.induced_graph_map(g, g))
            .collect()
    }
}

/// Order of a permutation: the lcm of its cycle lengths.
pub fn permutation_order(map: &[usize]) -> usize {
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    let n = map.len();
    let mut visited = vec![false; n];
    let mut order = 1;
    for start in 0..n {
        if visited[start] {
            continue;
        }
        let mut len = 0;
        let mut v = start;
        while !visited[v] {
            visited[v] = true;
            v = map[v];
            len += 1;
        }
        order = order / gcd(order, len) * len;
    }
    order
}

/// Compose two vertex maps: apply `first`, then `second`.
pub fn compose_maps(first: &[usize], second: &[usize]) -> Vec<usize> {
    first.iter().map(|&v| second[v]).collect()
}

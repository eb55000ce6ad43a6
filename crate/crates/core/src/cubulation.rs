//! The 1-cubulation: the median graph of almost principal ultrafilters.
//!
//! The graph is grown by breadth-first search from the principal ultrafilters,
//! expanding each vertex by flipping its minimal walls. For a finite wall
//! system this component contains every ultrafilter, which the brute-force
//! enumeration oracle pins down in tests.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::ultrafilter::Orientation;
use crate::wallspace::WallSpace;

/// An edge of the cubulation, labeled with the unique wall on which its
/// endpoints differ.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub wall: usize,
}

/// The median graph C¹(X) of a wall space, with the embedding x ↦ σ_x.
#[derive(Clone, Debug)]
pub struct MedianGraph {
    space: WallSpace,
    vertices: Vec<Orientation>,
    index: HashMap<u64, usize>,
    edges: Vec<Edge>,
    adj: Vec<Vec<(usize, usize)>>,
    sigma: Vec<usize>,
}

/// Build the 1-cubulation: BFS over ultrafilters seeded with the principal
/// ones in point order, expanding by minimal-wall flips.
pub fn cubulate(space: &WallSpace) -> MedianGraph {
    let mut vertices: Vec<Orientation> = Vec::new();
    let mut index: HashMap<u64, usize> = HashMap::new();
    let mut sigma = Vec::with_capacity(space.num_points());
    let mut queue = VecDeque::new();

    for x in 0..space.num_points() {
        let o = space.principal(x).expect("valid point index");
        let id = *index.entry(o.bits()).or_insert_with(|| {
            vertices.push(o);
            queue.push_back(vertices.len() - 1);
            vertices.len() - 1
        });
        sigma.push(id);
    }

    let mut edges = Vec::new();
    while let Some(u) = queue.pop_front() {
        let o = vertices[u];
        let minimal = space.minimal_walls(&o).expect("BFS vertices are ultrafilters");
        for i in minimal.iter() {
            let flipped = space.flip_unchecked(&o, i);
            let v = match index.get(&flipped.bits()) {
                Some(&v) => v,
                None => {
                    vertices.push(flipped);
                    let v = vertices.len() - 1;
                    index.insert(flipped.bits(), v);
                    queue.push_back(v);
                    v
                }
            };
            if u < v {
                edges.push(Edge { u, v, wall: i });
            }
        }
    }

    let mut adj = vec![Vec::new(); vertices.len()];
    for e in &edges {
        adj[e.u].push((e.v, e.wall));
        adj[e.v].push((e.u, e.wall));
    }

    MedianGraph {
        space: space.clone(),
        vertices,
        index,
        edges,
        adj,
        sigma,
    }
}

/// Exhaustively enumerate all coherent orientations. Independent of the BFS
/// construction; the test suites compare the two vertex sets.
pub fn enumerate_oracle(space: &WallSpace) -> Result<Vec<Orientation>> {
    let w = space.num_walls();
    if w > 24 {
        return Err(Error::TooManyWalls { walls: w, limit: 24 });
    }
    let mut out = Vec::new();
    for choice in 0u64..(1 << (w - 1)) {
        let o = space.orientation_from_bits(choice << 1);
        if space.is_ultrafilter(&o)? {
            out.push(o);
        }
    }
    Ok(out)
}

impl MedianGraph {
    pub fn space(&self) -> &WallSpace {
        &self.space
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[Orientation] {
        &self.vertices
    }

    pub fn vertex(&self, v: usize) -> Result<&Orientation> {
        self.vertices.get(v).ok_or(Error::InvalidVertex(v))
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    /// The vertex index of an orientation, if it is a vertex.
    pub fn vertex_index(&self, o: &Orientation) -> Option<usize> {
        self.space.check_orientation(o).ok()?;
        self.index.get(&o.bits()).copied()
    }

    /// The embedding x ↦ σ_x as a vertex index.
    pub fn sigma(&self, x: usize) -> Result<usize> {
        self.sigma.get(x).copied().ok_or(Error::InvalidPoint(x))
    }

    /// The point whose principal ultrafilter this vertex is, if any.
    pub fn principal_point(&self, v: usize) -> Option<usize> {
        self.sigma.iter().position(|&s| s == v)
    }

    /// Path-metric distance, computed from the symmetric difference.
    pub fn graph_distance(&self, u: usize, v: usize) -> Result<usize> {
        let ou = self.vertex(u)?;
        let ov = self.vertex(v)?;
        Ok(self.space.symdiff(ou, ov)?.len())
    }

    /// A deterministic geodesic: repeatedly flip the lowest-indexed wall of
    /// the remaining symmetric difference whose current chosen side is
    /// minimal among the remaining chosen sides.
    pub fn geodesic_path(&self, u: usize, v: usize) -> Result<Vec<usize>> {
        let target = *self.vertex(v)?;
        let mut cur = *self.vertex(u)?;
        let mut path = vec![u];
        let mut remaining = self.space.symdiff(&cur, &target)?;
        while !remaining.is_empty() {
            let next = remaining
                .iter()
                .find(|&i| {
                    let si = self.space.wall(i).side(cur.bit(i));
                    remaining.iter().filter(|&j| j != i).all(|j| {
                        !self
                            .space
                            .wall(j)
                            .side(cur.bit(j))
                            .is_strict_subset(si)
                    })
                })
                .expect("a finite nonempty family has a minimal element");
            cur = self.space.flip_unchecked(&cur, next);
            debug_assert!(self.space.is_ultrafilter(&cur).unwrap());
            remaining.remove(next);
            path.push(
                self.vertex_index(&cur)
                    .expect("geodesic stays inside the cubulation"),
            );
        }
        Ok(path)
    }

    /// The geodesic interval [u, v]: vertices agreeing with u and v on every
    /// wall where u and v agree.
    pub fn interval(&self, u: usize, v: usize) -> Result<Vec<usize>> {
        let ou = self.vertex(u)?;
        let ov = self.vertex(v)?;
        let agree = !(ou.bits() ^ ov.bits());
        Ok((0..self.num_vertices())
            .filter(|&w| (self.vertices[w].bits() ^ ou.bits()) & agree == 0)
            .collect())
    }

    /// The unique vertex common to the three pairwise intervals; equal to the
    /// boolean median of the three orientations.
    pub fn median_vertex(&self, u: usize, v: usize, t: usize) -> Result<usize> {
        let m = self
            .space
            .boolean_median(self.vertex(u)?, self.vertex(v)?, self.vertex(t)?)?;
        let idx = self
            .vertex_index(&m)
            .expect("the boolean median of vertices is a vertex");
        debug_assert!(self.interval(u, v)?.contains(&idx));
        debug_assert!(self.interval(v, t)?.contains(&idx));
        debug_assert!(self.interval(t, u)?.contains(&idx));
        Ok(idx)
    }

    /// H_A: all vertices whose bit at wall `i` selects the given side.
    pub fn halfspace_lift(&self, i: usize, side: bool) -> Result<Vec<usize>> {
        if i >= self.space.num_walls() {
            return Err(Error::InvalidWall(i));
        }
        Ok((0..self.num_vertices())
            .filter(|&v| self.vertices[v].bit(i) == side)
            .collect())
    }

    /// The underlying unlabeled graph, for the BFS-based verifiers.
    pub fn underlying_graph(&self) -> SimpleGraph {
        let mut g = SimpleGraph::new(self.num_vertices());
        for e in &self.edges {
            g.add_edge(e.u, e.v).expect("cubulation edges are simple");
        }
        g
    }
}

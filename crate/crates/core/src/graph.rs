//! Plain undirected graphs and the BFS machinery the verifiers run on.
//!
//! Kept deliberately independent of the cubulation internals so that the
//! verifiers cross-check rather than restate the construction.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// A finite simple undirected graph: no loops, no multiple edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    adj: Vec<Vec<usize>>,
    num_edges: usize,
}

impl SimpleGraph {
    pub fn new(n: usize) -> SimpleGraph {
        SimpleGraph {
            adj: vec![Vec::new(); n],
            num_edges: 0,
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<SimpleGraph> {
        let mut g = SimpleGraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.num_vertices();
        if u >= n {
            return Err(Error::InvalidVertex(u));
        }
        if v >= n {
            return Err(Error::InvalidVertex(v));
        }
        if u == v || self.adj[u].contains(&v) {
            return Err(Error::NonSimplicialGraph);
        }
        self.adj[u].push(v);
        self.adj[v].push(u);
        self.num_edges += 1;
        Ok(())
    }

    pub fn num_vertices(&self) -> usize {
        self.adj.len()
    }

    pub fn num_edges(&self) -> usize {
        self.num_edges
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    /// Each edge once, as (u, v) with u < v, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.num_edges);
        for (u, nbrs) in self.adj.iter().enumerate() {
            for &v in nbrs {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn is_connected(&self) -> bool {
        let n = self.num_vertices();
        if n == 0 {
            return true;
        }
        self.bfs_distances(0).iter().all(|&d| d != u32::MAX)
    }

    /// BFS distances from a source; `u32::MAX` marks unreachable vertices.
    pub fn bfs_distances(&self, src: usize) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.num_vertices()];
        dist[src] = 0;
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if dist[v] == u32::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn all_pairs_distances(&self) -> Vec<Vec<u32>> {
        (0..self.num_vertices())
            .map(|u| self.bfs_distances(u))
            .collect()
    }
}

/// A set of graph vertices backed by word-sized blocks.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct VertexSet {
    blocks: Vec<u64>,
    len: usize,
}

impl VertexSet {
    pub fn new(n: usize) -> VertexSet {
        VertexSet {
            blocks: vec![0; n.div_ceil(64)],
            len: n,
        }
    }

    pub fn capacity(&self) -> usize {
        self.len
    }

    pub fn insert(&mut self, i: usize) {
        self.blocks[i / 64] |= 1 << (i % 64);
    }

    pub fn contains(&self, i: usize) -> bool {
        self.blocks[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn intersect(&self, other: &VertexSet) -> VertexSet {
        VertexSet {
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a & b)
                .collect(),
            len: self.len,
        }
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.blocks
            .iter()
            .zip(&other.blocks)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(|&i| self.contains(i))
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let items: Vec<usize> = iter.into_iter().collect();
        let n = items.iter().copied().max().map_or(0, |m| m + 1);
        let mut s = VertexSet::new(n);
        for i in items {
            s.insert(i);
        }
        s
    }
}

/// All geodesic intervals of a graph, memoized from all-pairs BFS.
pub struct IntervalTable {
    dist: Vec<Vec<u32>>,
    n: usize,
}

impl IntervalTable {
    pub fn new(g: &SimpleGraph) -> IntervalTable {
        IntervalTable {
            dist: g.all_pairs_distances(),
            n: g.num_vertices(),
        }
    }

    pub fn distance(&self, u: usize, v: usize) -> u32 {
        self.dist[u][v]
    }

    /// Vertices on some shortest u-v path.
    pub fn interval(&self, u: usize, v: usize) -> VertexSet {
        let mut out = VertexSet::new(self.n);
        let d = self.dist[u][v];
        for x in 0..self.n {
            if self.dist[u][x] != u32::MAX
                && self.dist[u][x].saturating_add(self.dist[x][v]) == d
            {
                out.insert(x);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_multi_edges() {
        let mut g = SimpleGraph::new(3);
        g.add_edge(0, 1).unwrap();
        assert_eq!(g.add_edge(1, 1), Err(Error::NonSimplicialGraph));
        assert_eq!(g.add_edge(1, 0), Err(Error::NonSimplicialGraph));
        assert_eq!(g.add_edge(0, 5), Err(Error::InvalidVertex(5)));
    }

    #[test]
    fn bfs_on_a_path() {
        let g = SimpleGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(g.bfs_distances(0), vec![0, 1, 2, 3]);
        assert!(g.is_connected());
        let table = IntervalTable::new(&g);
        assert_eq!(table.interval(0, 2).to_vec(), vec![0, 1, 2]);
        assert_eq!(table.interval(1, 1).to_vec(), vec![1]);
    }

    #[test]
    fn intervals_in_a_cycle() {
        // C6: antipodal intervals are the whole cycle.
        let g =
            SimpleGraph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        let table = IntervalTable::new(&g);
        assert_eq!(table.interval(0, 3).count(), 6);
        assert_eq!(table.interval(0, 2).to_vec(), vec![0, 1, 2]);
    }
}

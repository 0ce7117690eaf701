use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::GraphError;

/// Finite simple undirected graph on vertices `0..vertex_count`.
///
/// Adjacency lists are sorted and symmetric; there are no loops and no
/// parallel edges. Values are immutable once built.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    names: Option<Vec<String>>,
}

impl Graph {
    pub fn empty(vertex_count: usize) -> Self {
        Self { adjacency: vec![Vec::new(); vertex_count], names: None }
    }

    /// Builds a graph from an edge list. Self-loops and out-of-range indices
    /// are errors; repeated edges (in either orientation) are collapsed and
    /// counted in the second return value.
    pub fn from_edges(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<(Self, usize), GraphError> {
        let mut adjacency = vec![Vec::new(); vertex_count];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(GraphError::VertexOutOfRange { vertex: w, vertex_count });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        let mut duplicates = 0;
        for list in &mut adjacency {
            list.sort_unstable();
            let before = list.len();
            list.dedup();
            duplicates += before - list.len();
        }
        Ok((Self { adjacency, names: None }, duplicates / 2))
    }

    /// For generators whose edge sets are valid by construction.
    pub(crate) fn from_edges_unchecked(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        Self::from_edges(vertex_count, edges).expect("generator produced an invalid edge").0
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self, GraphError> {
        if names.len() != self.vertex_count() {
            return Err(GraphError::NameCount { expected: self.vertex_count(), found: names.len() });
        }
        self.names = Some(names);
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency.get(u).is_some_and(|list| list.binary_search(&v).is_ok())
    }

    /// Each edge once, as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// `N[v]` in increasing order.
    pub fn closed_neighborhood(&self, v: usize) -> Vec<usize> {
        let mut out = self.adjacency[v].clone();
        let pos = out.binary_search(&v).unwrap_err();
        out.insert(pos, v);
        out
    }

    /// The common degree, if every vertex has the same degree.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adjacency.first().map_or(0, Vec::len);
        self.adjacency.iter().all(|l| l.len() == d).then_some(d)
    }

    /// Re-checks every structural invariant.
    pub fn is_simple(&self) -> bool {
        let n = self.vertex_count();
        self.adjacency.iter().enumerate().all(|(u, list)| {
            list.windows(2).all(|w| w[0] < w[1])
                && list.iter().all(|&v| v < n && v != u && self.adjacency[v].binary_search(&u).is_ok())
        })
    }

    /// Bitmask adjacency; `None` for more than 64 vertices.
    pub fn adjacency_masks(&self) -> Option<Vec<u64>> {
        if self.vertex_count() > 64 {
            return None;
        }
        Some(self.adjacency.iter().map(|list| list.iter().fold(0u64, |m, &v| m | (1 << v))).collect())
    }

    /// Connected components, each sorted, listed by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &w in &self.adjacency[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// A proper 2-coloring if the graph is bipartite.
    pub fn two_coloring(&self) -> Option<Vec<u8>> {
        let n = self.vertex_count();
        let mut side = vec![u8::MAX; n];
        for start in 0..n {
            if side[start] != u8::MAX {
                continue;
            }
            side[start] = 0;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &w in &self.adjacency[v] {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[v];
                        stack.push(w);
                    } else if side[w] == side[v] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    /// Subgraph induced on `vertices` (relabelled `0..len` in the given order).
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = vertices.iter().enumerate().flat_map(|(i, &v)| {
            let index = &index;
            self.adjacency[v].iter().filter_map(move |&w| (index[w] != usize::MAX && index[w] > i).then_some((i, index[w])))
        });
        Graph::from_edges_unchecked(vertices.len(), edges.collect::<Vec<_>>())
    }
}

//! Simple undirected graphs with stable vertex identities, instances and colorings.
//!
//! Every vertex has a local index `0..n` used by all algorithms and a stable
//! identity (`id`) that survives vertex deletion. Identities are strictly
//! increasing in local index order, so "lowest id" and "lowest index" agree.
//! A freshly built graph has `id(v) == v`; externally (DIMACS, JSON) vertex
//! `v` is written as `id(v) + 1`.

use std::collections::VecDeque;

use crate::error::{CertificateError, Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    ids: Vec<usize>,
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// `n` isolated vertices with ids `0..n`.
    pub fn empty(n: usize) -> Self {
        Graph { ids: (0..n).collect(), adj: vec![Vec::new(); n], m: 0 }
    }

    /// Builds a graph on local vertices `0..n` with ids `0..n`.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::with_ids((0..n).collect(), edges)
    }

    /// Builds a graph whose local vertex `v` carries identity `ids[v]`.
    /// `ids` must be strictly increasing; edges are given in local indices.
    pub fn with_ids<I>(ids: Vec<usize>, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if ids.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidGraph("vertex ids must be strictly increasing".into()));
        }
        let n = ids.len();
        let mut adj = vec![Vec::new(); n];
        let mut m = 0;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!("edge ({u}, {v}) out of range for n = {n}")));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop on vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
            m += 1;
        }
        for list in &mut adj {
            list.sort_unstable();
            let before = list.len();
            list.dedup();
            if list.len() != before {
                return Err(Error::InvalidGraph("duplicate edge".into()));
            }
        }
        Ok(Graph { ids, adj, m })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.ids.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn ids(&self) -> &[usize] {
        &self.ids
    }

    #[inline]
    pub fn id(&self, v: usize) -> usize {
        self.ids[v]
    }

    /// Local index of the vertex with identity `id`, if it is still present.
    pub fn index_of(&self, id: usize) -> Option<usize> {
        self.ids.binary_search(&id).ok()
    }

    /// Sorted neighbor list of `v`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn isolated_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n()).filter(|&v| self.adj[v].is_empty())
    }

    /// Subgraph induced by the local vertices in `keep`; identities are preserved.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut keep = keep.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut map = vec![usize::MAX; self.n()];
        for (new, &old) in keep.iter().enumerate() {
            map[old] = new;
        }
        let mut adj = vec![Vec::new(); keep.len()];
        let mut degree_sum = 0;
        for (new, &old) in keep.iter().enumerate() {
            adj[new] = self.adj[old].iter().map(|&w| map[w]).filter(|&x| x != usize::MAX).collect();
            degree_sum += adj[new].len();
        }
        Graph { ids: keep.iter().map(|&v| self.ids[v]).collect(), adj, m: degree_sum / 2 }
    }

    /// Deletes the local vertices in `remove`; the survivors keep their identities.
    pub fn remove_vertices(&self, remove: &[usize]) -> Graph {
        let mut gone = vec![false; self.n()];
        for &v in remove {
            gone[v] = true;
        }
        let keep: Vec<usize> = (0..self.n()).filter(|&v| !gone[v]).collect();
        self.induced(&keep)
    }

    /// Spanning subgraph on the same vertices (and identities) with the given local edges.
    pub fn spanning_subgraph<I>(&self, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Graph::with_ids(self.ids.clone(), edges)
    }

    /// Disjoint union; the result is renumbered with ids `0..n1+n2`, `self` first.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let offset = self.n();
        let edges = self.edges().chain(other.edges().map(|(u, v)| (u + offset, v + offset)));
        Graph::from_edges(offset + other.n(), edges.collect::<Vec<_>>()).expect("union of simple graphs is simple")
    }

    /// Renumbers identities to `0..n`.
    pub fn compact(&self) -> Graph {
        Graph { ids: (0..self.n()).collect(), adj: self.adj.clone(), m: self.m }
    }

    /// Number of edges with both endpoints in the set marked by `mask`.
    pub fn edges_within(&self, mask: &[bool]) -> usize {
        let mut twice = 0;
        for v in (0..self.n()).filter(|&v| mask[v]) {
            twice += self.adj[v].iter().filter(|&&w| mask[w]).count();
        }
        twice / 2
    }

    /// Number of edges with one endpoint in each of two disjoint sets.
    pub fn edges_between(&self, a: &[bool], b: &[bool]) -> usize {
        (0..self.n()).filter(|&v| a[v]).map(|v| self.adj[v].iter().filter(|&&w| b[w]).count()).sum()
    }

    /// Connected components ordered by their smallest vertex, each listing its
    /// vertices in increasing order together with its edge count.
    pub fn components(&self) -> Vec<Component> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut vertices = vec![s];
            let mut queue = VecDeque::from([s]);
            let mut degree_sum = 0;
            while let Some(v) = queue.pop_front() {
                degree_sum += self.adj[v].len();
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        vertices.push(w);
                        queue.push_back(w);
                    }
                }
            }
            vertices.sort_unstable();
            out.push(Component { vertices, edges: degree_sum / 2 });
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub vertices: Vec<usize>,
    pub edges: usize,
}

/// A `(G, c, k)` triple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub graph: Graph,
    pub c: usize,
    pub k: usize,
}

impl Instance {
    pub fn new(graph: Graph, c: usize, k: usize) -> Result<Self> {
        if c == 0 {
            return Err(Error::InvalidParameter("c must be at least 1".into()));
        }
        Ok(Instance { graph, c, k })
    }
}

/// Total assignment of a color in `0..c` to every local vertex of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring(Vec<usize>);

impl Coloring {
    pub fn new(colors: Vec<usize>) -> Self {
        Coloring(colors)
    }

    pub fn uniform(n: usize, color: usize) -> Self {
        Coloring(vec![color; n])
    }

    #[inline]
    pub fn color(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    /// Colors as written externally: 1-based.
    pub fn to_external(&self) -> Vec<usize> {
        self.0.iter().map(|&c| c + 1).collect()
    }

    /// Inverse of [`Coloring::to_external`]; `0` or any out-of-range value is
    /// kept so that verification can report it.
    pub fn from_external(colors: &[usize]) -> Self {
        Coloring(colors.iter().map(|&c| c.wrapping_sub(1)).collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub valid: bool,
    /// Number of edges colored `i`, for every `i < c`.
    pub counts: Vec<usize>,
}

/// Counts the monochromatic edges of every color and checks each count against `k`.
pub fn verify_coloring(inst: &Instance, col: &Coloring) -> Result<Verdict, CertificateError> {
    let g = &inst.graph;
    if col.len() != g.n() {
        return Err(CertificateError::LengthMismatch { expected: g.n(), found: col.len() });
    }
    for v in 0..g.n() {
        let color = col.color(v);
        if color == usize::MAX {
            return Err(CertificateError::Uncolored { vertex: g.id(v) + 1 });
        }
        if color >= inst.c {
            return Err(CertificateError::ColorOutOfRange { vertex: g.id(v) + 1, color: color + 1, c: inst.c });
        }
    }
    let mut counts = vec![0; inst.c];
    for (u, v) in g.edges() {
        if col.color(u) == col.color(v) {
            counts[col.color(u)] += 1;
        }
    }
    let valid = counts.iter().all(|&x| x >= inst.k);
    Ok(Verdict { valid, counts })
}

/// `true` iff `col` is a checkable coloring meeting every threshold.
pub fn is_certificate(inst: &Instance, col: &Coloring) -> bool {
    matches!(verify_coloring(inst, col), Ok(Verdict { valid: true, .. }))
}

//! Spanning star forests ("star covers") and the refinement that bounds the
//! size of their largest star.
//!
//! On a graph without isolated vertices a star cover always exists. The
//! refinement shrinks the largest stars with local moves, each of which lowers
//! the potential `sum(size^2)` over all stars:
//!
//! * **leaf rewiring**: a leaf `u` of a star with at least 3 leaves is adjacent
//!   (outside the cover) to a vertex `v` that is a leaf, or an endpoint of a
//!   single-edge star. `uv` becomes a cover edge and both old stars shrink (or
//!   `v` becomes the center of a 2-leaf star).
//! * **alternating path**: from the center of a largest star, cover edges
//!   center→leaf alternate with non-cover edges leaf→center until a center
//!   whose star is at least two leaves smaller. Swapping the path moves one
//!   leaf's worth of size from the big star to the small one.
//!
//! When neither move applies, the largest stars together with every star of
//! size one less that is reachable from them through non-cover edges form an
//! obstacle whose centers each own at least `max(3, k)` private leaves.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::reduction::Obstacle;

/// A star of the cover, in local vertex indices of the covered graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Star {
    pub center: usize,
    pub leaves: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarCover {
    /// Stars ordered by center.
    pub stars: Vec<Star>,
}

impl StarCover {
    /// Largest number of leaves of a star.
    pub fn max_size(&self) -> usize {
        self.stars.iter().map(|s| s.leaves.len()).max().unwrap_or(0)
    }

    /// `profile()[i]` is the number of stars with exactly `i` leaves.
    pub fn profile(&self) -> Vec<usize> {
        let mut out = vec![0; self.max_size() + 1];
        for s in &self.stars {
            out[s.leaves.len()] += 1;
        }
        out
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.stars.iter().flat_map(|s| s.leaves.iter().map(move |&l| (s.center.min(l), s.center.max(l))))
    }

    /// The cover as a spanning subgraph of `g`.
    pub fn to_graph(&self, g: &Graph) -> Result<Graph> {
        g.spanning_subgraph(self.edges())
    }

    /// Every star edge is a graph edge, every vertex is in exactly one star,
    /// every star has a leaf, and single-edge stars are centered at their lower end.
    pub fn check(&self, g: &Graph) -> Result<()> {
        let mut seen = vec![false; g.n()];
        let mut mark = |v: usize| -> Result<()> {
            if v >= g.n() || std::mem::replace(&mut seen[v], true) {
                return Err(Error::Internal(format!("vertex {v} is covered twice or out of range")));
            }
            Ok(())
        };
        for s in &self.stars {
            if s.leaves.is_empty() {
                return Err(Error::Internal(format!("star at {} has no leaf", s.center)));
            }
            mark(s.center)?;
            for &l in &s.leaves {
                mark(l)?;
                if !g.has_edge(s.center, l) {
                    return Err(Error::Internal(format!("star edge ({}, {l}) is not in the graph", s.center)));
                }
            }
            if s.leaves.len() == 1 && s.leaves[0] < s.center {
                return Err(Error::Internal(format!("single-edge star at {} is not centered at its lower end", s.center)));
            }
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(Error::Internal(format!("vertex {v} is not covered")));
        }
        Ok(())
    }

    /// Serializable form with external (1-based) vertex ids.
    pub fn to_json(&self, g: &Graph) -> Vec<StarJson> {
        self.stars
            .iter()
            .map(|s| StarJson { center: g.id(s.center) + 1, leaves: s.leaves.iter().map(|&l| g.id(l) + 1).collect() })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StarJson {
    pub center: usize,
    pub leaves: Vec<usize>,
}

/// Star cover from a spanning forest: every forest edge whose endpoints both
/// have forest degree at least 2 is dropped.
pub fn initial_cover(g: &Graph) -> Result<StarCover> {
    if let Some(v) = g.isolated_vertices().next() {
        return Err(Error::Precondition(format!("vertex {} is isolated; reduce the instance first", g.id(v) + 1)));
    }
    let n = g.n();
    let mut seen = vec![false; n];
    let mut forest = Vec::with_capacity(n);
    let mut degree = vec![0usize; n];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    forest.push((v, w));
                    degree[v] += 1;
                    degree[w] += 1;
                    queue.push_back(w);
                }
            }
        }
    }
    // degrees only drop, and never at a vertex of degree 1, so one pass suffices
    let mut kept = Vec::with_capacity(forest.len());
    for (u, v) in forest {
        if degree[u] >= 2 && degree[v] >= 2 {
            degree[u] -= 1;
            degree[v] -= 1;
        } else {
            kept.push((u, v));
        }
    }
    let mut state = CoverState::new(n);
    for (u, v) in kept {
        let (center, leaf) = if degree[u] >= 2 || (degree[v] == 1 && u < v) { (u, v) } else { (v, u) };
        state.center_of[center] = center;
        state.center_of[leaf] = center;
        state.leaves[center].push(leaf);
    }
    for leaves in &mut state.leaves {
        leaves.sort_unstable();
    }
    let cover = state.to_cover();
    cover.check(g)?;
    Ok(cover)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RefineOutcome {
    /// A cover whose largest star has at most `max(3, k)` leaves.
    Cover(StarCover),
    /// An obstacle with at least `c` centers, each owning at least `k` private
    /// leaves; coloring each center's star with its own color answers yes.
    Witness(Obstacle),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Refinement {
    pub outcome: RefineOutcome,
    /// Number of improving moves applied.
    pub moves: usize,
}

/// Shrinks stars until the largest has at most `max(3, k)` leaves, or extracts
/// an obstacle when no move applies.
///
/// `g` must be reduced for `(c, k)`; an extracted obstacle with fewer than `c`
/// centers is reported as [`Error::NotReduced`].
pub fn refine_cover(g: &Graph, cover: &StarCover, k: usize, c: usize) -> Result<Refinement> {
    cover.check(g)?;
    let limit = k.max(3);
    let mut state = CoverState::from_cover(g.n(), cover);
    let mut moves = 0;
    loop {
        let delta = state.max_size();
        if delta <= limit {
            return Ok(Refinement { outcome: RefineOutcome::Cover(state.to_cover()), moves });
        }
        if state.rewire_leaf(g) || state.shift_along_path(g, delta) {
            moves += 1;
            #[cfg(debug_assertions)]
            state.to_cover().check(g)?;
            continue;
        }
        let ob = state.blocking_obstacle(g, delta);
        ob.check(g, k).map_err(|e| Error::Internal(format!("extracted obstacle is invalid: {e}")))?;
        if ob.i() < c {
            return Err(Error::NotReduced { i: ob.i(), c });
        }
        return Ok(Refinement { outcome: RefineOutcome::Witness(ob), moves });
    }
}

/// Mutable cover: `center_of[v] == v` for centers, otherwise the center of
/// the star containing leaf `v`.
struct CoverState {
    center_of: Vec<usize>,
    leaves: Vec<Vec<usize>>,
}

impl CoverState {
    fn new(n: usize) -> Self {
        CoverState { center_of: vec![usize::MAX; n], leaves: vec![Vec::new(); n] }
    }

    fn from_cover(n: usize, cover: &StarCover) -> Self {
        let mut state = CoverState::new(n);
        for s in &cover.stars {
            state.center_of[s.center] = s.center;
            for &l in &s.leaves {
                state.center_of[l] = s.center;
            }
            state.leaves[s.center] = s.leaves.clone();
        }
        state
    }

    fn to_cover(&self) -> StarCover {
        let stars = (0..self.center_of.len())
            .filter(|&v| self.is_center(v))
            .map(|v| Star { center: v, leaves: self.leaves[v].clone() })
            .collect();
        StarCover { stars }
    }

    #[inline]
    fn is_center(&self, v: usize) -> bool {
        self.center_of[v] == v
    }

    #[inline]
    fn size(&self, center: usize) -> usize {
        self.leaves[center].len()
    }

    fn max_size(&self) -> usize {
        (0..self.center_of.len()).filter(|&v| self.is_center(v)).map(|v| self.size(v)).max().unwrap_or(0)
    }

    fn detach(&mut self, center: usize, leaf: usize) {
        let pos = self.leaves[center].binary_search(&leaf).expect("leaf of this star");
        self.leaves[center].remove(pos);
    }

    fn attach(&mut self, center: usize, leaf: usize) {
        let pos = self.leaves[center].binary_search(&leaf).unwrap_err();
        self.leaves[center].insert(pos, leaf);
        self.center_of[leaf] = center;
    }

    /// Re-centers a single-edge star at its lower endpoint.
    fn normalize(&mut self, center: usize) {
        if self.is_center(center) && self.size(center) == 1 && self.leaves[center][0] < center {
            let leaf = self.leaves[center].pop().expect("one leaf");
            self.center_of[leaf] = leaf;
            self.leaves[leaf] = vec![center];
            self.center_of[center] = leaf;
        }
    }

    /// Endpoint of a single-edge star: its partner.
    fn single_edge_partner(&self, v: usize) -> Option<usize> {
        let center = self.center_of[v];
        if self.size(center) != 1 {
            return None;
        }
        Some(if center == v { self.leaves[v][0] } else { center })
    }

    /// Leaf rewiring; the lexicographically smallest `(u, v)` is applied.
    fn rewire_leaf(&mut self, g: &Graph) -> bool {
        for u in 0..g.n() {
            let x = self.center_of[u];
            if x == u || self.size(x) < 3 {
                continue;
            }
            for &v in g.neighbors(u) {
                if v == x {
                    continue;
                }
                if !self.is_center(v) && self.size(self.center_of[v]) >= 2 {
                    let y = self.center_of[v];
                    self.detach(x, u);
                    self.detach(y, v);
                    let (lo, hi) = (u.min(v), u.max(v));
                    self.center_of[lo] = lo;
                    self.leaves[lo] = vec![hi];
                    self.center_of[hi] = lo;
                    self.normalize(x);
                    self.normalize(y);
                    return true;
                }
                if let Some(w) = self.single_edge_partner(v) {
                    self.detach(x, u);
                    if !self.is_center(v) {
                        // v was the upper end; it takes over as center
                        self.leaves[w].clear();
                        self.center_of[v] = v;
                        self.attach(v, w);
                    }
                    self.attach(v, u);
                    self.normalize(x);
                    return true;
                }
            }
        }
        false
    }

    /// Alternating-path move from a largest star (smallest center first, then
    /// shortest path by BFS).
    fn shift_along_path(&mut self, g: &Graph, delta: usize) -> bool {
        let n = g.n();
        for x in (0..n).filter(|&v| self.is_center(v) && self.size(v) == delta) {
            // reached center -> (previous center, leaf used)
            let mut via: Vec<Option<(usize, usize)>> = vec![None; n];
            let mut visited = vec![false; n];
            visited[x] = true;
            let mut queue = std::collections::VecDeque::from([x]);
            let mut target = None;
            'bfs: while let Some(z) = queue.pop_front() {
                for &l in &self.leaves[z] {
                    for &w in g.neighbors(l) {
                        if w == z || !self.is_center(w) || visited[w] {
                            continue;
                        }
                        visited[w] = true;
                        via[w] = Some((z, l));
                        if self.size(w) + 2 <= delta {
                            target = Some(w);
                            break 'bfs;
                        }
                        queue.push_back(w);
                    }
                }
            }
            let Some(mut y) = target else { continue };
            let mut hops = Vec::new();
            while let Some((z, l)) = via[y] {
                hops.push((z, l, y));
                y = z;
            }
            let mut touched = Vec::with_capacity(hops.len() + 1);
            for &(from, leaf, to) in hops.iter().rev() {
                self.detach(from, leaf);
                self.attach(to, leaf);
                touched.push(to);
            }
            for center in touched {
                self.normalize(center);
            }
            return true;
        }
        false
    }

    /// Largest stars plus every star of size `delta - 1` reachable from them
    /// through non-cover edges leaf→center.
    fn blocking_obstacle(&self, g: &Graph, delta: usize) -> Obstacle {
        let n = g.n();
        let mut chosen = vec![false; n];
        let mut work: Vec<usize> = (0..n).filter(|&v| self.is_center(v) && self.size(v) == delta).collect();
        for &x in &work {
            chosen[x] = true;
        }
        while let Some(z) = work.pop() {
            for &u in &self.leaves[z] {
                for &v in g.neighbors(u) {
                    if v != z && self.is_center(v) && !chosen[v] && self.size(v) + 1 == delta {
                        chosen[v] = true;
                        work.push(v);
                    }
                }
            }
        }
        let centers: Vec<usize> = (0..n).filter(|&v| chosen[v]).collect();
        let mut attached: Vec<usize> = centers.iter().flat_map(|&z| self.leaves[z].iter().map(|&l| g.id(l))).collect();
        attached.sort_unstable();
        Obstacle {
            centers: centers.iter().map(|&z| g.id(z)).collect(),
            attached,
            private: centers.iter().map(|&z| self.leaves[z].iter().map(|&l| g.id(l)).collect()).collect(),
        }
    }
}

//! Two-color certificates for reduced graphs with at least `8k` edges.
//!
//! [`color2_dense`] picks one of the constructors below depending on the
//! component structure and the maximum degree. Each constructor checks its
//! preconditions, and its output is verified before it is returned.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{verify_coloring, Coloring, Component, Graph, Instance};
use crate::reduction::is_reduced;

/// Which construction produced a two-coloring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Branch {
    TwoBigComponents,
    SmallComponents,
    ComponentAndRest,
    HighDegree,
    LowDegree,
}

fn certified(g: &Graph, k: usize, colors: Vec<usize>, what: &str) -> Result<Coloring> {
    let col = Coloring::new(colors);
    let inst = Instance { graph: g.clone(), c: 2, k };
    match verify_coloring(&inst, &col) {
        Ok(v) if v.valid => Ok(col),
        Ok(v) => Err(Error::Internal(format!("{what} produced an invalid coloring (counts {:?}, k = {k})", v.counts))),
        Err(e) => Err(Error::Internal(format!("{what} produced a malformed coloring: {e}"))),
    }
}

fn need_k(k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::Precondition("two-color constructors need k >= 1".into()));
    }
    Ok(())
}

/// Colors `second` with 1 and everything else with 0.
fn split(g: &Graph, k: usize, second: &[usize], what: &str) -> Result<Coloring> {
    let mut colors = vec![0; g.n()];
    for &v in second {
        colors[v] = 1;
    }
    certified(g, k, colors, what)
}

/// Graph with at least `3k − 2` edges whose components all have fewer than
/// `k` edges: components, largest first, go to the lighter side.
pub fn color2_small_components(g: &Graph, k: usize) -> Result<Coloring> {
    need_k(k)?;
    if g.m() + 2 < 3 * k {
        return Err(Error::Precondition(format!("{} edges, need at least 3k - 2 = {}", g.m(), 3 * k - 2)));
    }
    let mut comps = g.components();
    if let Some(big) = comps.iter().find(|s| s.edges >= k) {
        return Err(Error::Precondition(format!("component of vertex {} has {} >= k edges", g.id(big.vertices[0]) + 1, big.edges)));
    }
    comps.sort_by_key(|s| std::cmp::Reverse(s.edges));
    let mut load = [0usize; 2];
    let mut colors = vec![0; g.n()];
    for comp in comps {
        let side = usize::from(load[1] < load[0]);
        load[side] += comp.edges;
        for v in comp.vertices {
            colors[v] = side;
        }
    }
    certified(g, k, colors, "small-components coloring")
}

/// Facts about the unique component with at least `k` edges.
struct Shape {
    comps: Vec<Component>,
    big: Vec<usize>,
    /// Edges outside the first big component.
    rest_edges: usize,
}

fn shape(g: &Graph, k: usize) -> Shape {
    let comps = g.components();
    let big: Vec<usize> = (0..comps.len()).filter(|&i| comps[i].edges >= k).collect();
    let rest_edges = g.m() - big.first().map_or(0, |&i| comps[i].edges);
    Shape { comps, big, rest_edges }
}

/// Reduced graph with one component `C` of at least `k` edges, fewer than `k`
/// edges outside it, and maximum degree at least `3k − 2m'` (`m'` the outside
/// edge count).
///
/// A max-degree vertex `u` keeps `k` neighbors for color 1; color 0 gets the
/// outside edges plus non-leaf neighbors of `u`, each with a partner, until it
/// has `k` edges.
pub fn color2_high_degree(g: &Graph, k: usize) -> Result<Coloring> {
    need_k(k)?;
    let s = shape(g, k);
    if s.big.len() != 1 {
        return Err(Error::Precondition(format!("{} components with at least k edges, need exactly one", s.big.len())));
    }
    let m_rest = s.rest_edges;
    if m_rest >= k {
        return Err(Error::Precondition(format!("{m_rest} edges outside the big component, need fewer than k")));
    }
    let delta = g.max_degree();
    if delta + 2 * m_rest < 3 * k {
        return Err(Error::Precondition(format!("maximum degree {delta} is below 3k - 2m' = {}", 3 * k - 2 * m_rest)));
    }
    if !is_reduced(g, 2, k) {
        return Err(Error::Precondition("graph is not reduced for two colors".into()));
    }
    let u = (0..g.n()).find(|&v| g.degree(v) == delta).expect("graph has a vertex");
    let target = k - m_rest;
    let mut picked = vec![false; g.n()];
    let mut inside = 0;
    let mut add = |v: usize, picked: &mut Vec<bool>| {
        if !picked[v] {
            inside += g.neighbors(v).iter().filter(|&&w| picked[w]).count();
            picked[v] = true;
        }
        inside
    };
    let mut reached = target == 0;
    for &w in g.neighbors(u) {
        if reached {
            break;
        }
        if picked[w] || g.degree(w) < 2 {
            continue;
        }
        let partners = || g.neighbors(w).iter().copied().filter(|&p| p != u);
        let p = partners().find(|&p| !picked[p]).or_else(|| partners().next()).expect("non-leaf has a partner");
        add(w, &mut picked);
        reached = add(p, &mut picked) >= target;
    }
    if !reached {
        return Err(Error::Internal("non-leaf neighbors ran out before color 0 reached k edges".into()));
    }
    let used = g.neighbors(u).iter().filter(|&&w| picked[w]).count();
    if used > 2 * target || delta - used < k {
        return Err(Error::Internal(format!("{used} neighbors of the hub went to color 0, leaving fewer than k")));
    }
    let big = &s.comps[s.big[0]];
    let mut in_big = vec![false; g.n()];
    for &v in &big.vertices {
        in_big[v] = true;
    }
    let second: Vec<usize> = (0..g.n()).filter(|&v| in_big[v] && !picked[v]).collect();
    split(g, k, &second, "high-degree coloring")
}

/// Grows a vertex set from `start` by adding the lowest-id outside neighbor
/// until it spans at least `k` edges. `None` if the component of `start` has
/// fewer than `k` edges.
pub fn grow_core(g: &Graph, start: usize, k: usize) -> Option<Vec<usize>> {
    let mut in_set = vec![false; g.n()];
    in_set[start] = true;
    let mut set = vec![start];
    let mut edges = 0;
    let mut frontier = std::collections::BTreeSet::new();
    frontier.extend(g.neighbors(start).iter().copied());
    while edges < k {
        let v = frontier.pop_first()?;
        edges += g.neighbors(v).iter().filter(|&&w| in_set[w]).count();
        in_set[v] = true;
        set.push(v);
        frontier.extend(g.neighbors(v).iter().copied().filter(|&w| !in_set[w]));
    }
    set.sort_unstable();
    Some(set)
}

/// Drops vertices with at most `d = |E(A)| − k` neighbors inside the set
/// (lowest id first, `d` recomputed after each drop) until every vertex has
/// more than `d`. The set keeps at least `k` edges.
pub fn prune_core(g: &Graph, set: &[usize], k: usize) -> Vec<usize> {
    let mut in_set = vec![false; g.n()];
    for &v in set {
        in_set[v] = true;
    }
    let mut set: Vec<usize> = set.to_vec();
    set.sort_unstable();
    let inner = |v: usize, in_set: &[bool]| g.neighbors(v).iter().filter(|&&w| in_set[w]).count();
    let mut edges = set.iter().map(|&v| inner(v, &in_set)).sum::<usize>() / 2;
    while edges >= k {
        let d = edges - k;
        let Some(pos) = set.iter().position(|&v| inner(v, &in_set) <= d) else { break };
        let v = set.remove(pos);
        edges -= inner(v, &in_set);
        in_set[v] = false;
    }
    set
}

/// Graph with maximum degree below `3k` and at least `8k` edges.
pub fn color2_low_degree(g: &Graph, k: usize) -> Result<Coloring> {
    need_k(k)?;
    if g.max_degree() >= 3 * k {
        return Err(Error::Precondition(format!("maximum degree {} is not below 3k = {}", g.max_degree(), 3 * k)));
    }
    if g.m() < 8 * k {
        return Err(Error::Precondition(format!("{} edges, need at least 8k = {}", g.m(), 8 * k)));
    }
    let s = shape(g, k);
    let Some(&first_big) = s.big.first() else {
        return color2_small_components(g, k);
    };
    let start = s.comps[first_big].vertices[0];
    let grown = grow_core(g, start, k).ok_or_else(|| Error::Internal("big component did not reach k edges".into()))?;
    let a = prune_core(g, &grown, k);
    LowDegree::new(g, k, &a).run()
}

/// State of the four-way partition `A1, A2 | B1, B2`.
struct LowDegree<'a> {
    g: &'a Graph,
    k: usize,
    /// 0 = A1, 1 = A2, 2 = B1, 3 = B2.
    part: Vec<u8>,
}

const A1: u8 = 0;
const A2: u8 = 1;
const B1: u8 = 2;
const B2: u8 = 3;

impl<'a> LowDegree<'a> {
    fn new(g: &'a Graph, k: usize, a: &[usize]) -> Self {
        let mut part = vec![B1; g.n()];
        for &v in a {
            part[v] = A1;
        }
        LowDegree { g, k, part }
    }

    fn members(&self, p: u8) -> Vec<usize> {
        (0..self.g.n()).filter(|&v| self.part[v] == p).collect()
    }

    fn count(&self, p: u8) -> usize {
        self.part.iter().filter(|&&x| x == p).count()
    }

    fn deg_into(&self, v: usize, parts: &[u8]) -> usize {
        self.g.neighbors(v).iter().filter(|&&w| parts.contains(&self.part[w])).count()
    }

    /// Edges between the union of `xs` and the union of `ys` (disjoint groups).
    fn between(&self, xs: &[u8], ys: &[u8]) -> usize {
        (0..self.g.n()).filter(|&v| xs.contains(&self.part[v])).map(|v| self.deg_into(v, ys)).sum()
    }

    fn within(&self, xs: &[u8]) -> usize {
        (0..self.g.n()).filter(|&v| xs.contains(&self.part[v])).map(|v| self.deg_into(v, xs)).sum::<usize>() / 2
    }

    /// Color 1 goes to the given groups plus `extra`; everything else is 0.
    fn finish(&self, groups: &[u8], extra: Option<usize>) -> Result<Coloring> {
        let mut second: Vec<usize> = (0..self.g.n()).filter(|&v| groups.contains(&self.part[v])).collect();
        second.extend(extra);
        split(self.g, self.k, &second, "low-degree coloring")
    }

    fn run(mut self) -> Result<Coloring> {
        let k = self.k;
        if self.within(&[B1]) >= k {
            return self.finish(&[B1], None);
        }
        let y = self
            .members(A1)
            .into_iter()
            .max_by_key(|&u| (self.deg_into(u, &[B1]), std::cmp::Reverse(u)))
            .ok_or_else(|| Error::Internal("core set is empty".into()))?;
        self.part[y] = A2;

        if self.deg_into(y, &[B1]) > k {
            for v in 0..self.g.n() {
                if self.part[v] == B1 && !self.g.has_edge(y, v) {
                    self.part[v] = B2;
                }
            }
            if self.between(&[A1], &[B2]) >= k {
                return self.finish(&[A2, B1], None);
            }
            while self.deg_into(y, &[B1]) > k && self.between(&[A1], &[B1]) >= k + self.count(A1) {
                let v = self.members(B1)[0];
                self.part[v] = B2;
                if self.between(&[A2], &[B2]) >= k {
                    return self.finish(&[A2, B2], None);
                }
                if self.between(&[A1], &[B2]) >= k {
                    return self.finish(&[A2, B1], None);
                }
            }
            if self.between(&[A1], &[B1]) < k + self.count(A1) {
                return Err(Error::Internal("hub case ran out of edges from the core".into()));
            }
        }

        // every core vertex now has at most k neighbors in B1
        loop {
            let base = self.between(&[A1, A2], &[B2]);
            let Some(u) = self.members(B1).into_iter().find(|&u| base + self.deg_into(u, &[A1, A2]) < 2 * k) else { break };
            self.part[u] = B2;
        }
        while self.between(&[A1], &[B1]) >= k + self.count(A1) && self.between(&[A2], &[B1]) < k + self.count(A2) {
            let v = self.members(A1)[0];
            self.part[v] = A2;
        }
        if self.between(&[A1], &[B1]) < k + self.count(A1) {
            return Err(Error::Internal("bounded case hit the impossible branch".into()));
        }
        let u = *self.members(B1).first().ok_or_else(|| Error::Internal("no vertex left to move".into()))?;
        self.part[u] = B2;
        if self.between(&[A1], &[B2]) >= k {
            // A2 ∪ B1 keeps k edges; A1 ∪ B2 ∪ {u} gets the rest
            return self.finish(&[A2, B1], None);
        }
        if self.between(&[A2], &[B2]) >= k {
            return self.finish(&[A1, B1], None);
        }
        Err(Error::Internal("neither side of the final split reaches k edges".into()))
    }
}

/// Two-coloring of a graph that is reduced for `(2, k)` and has at least `8k` edges.
pub fn color2_dense(g: &Graph, k: usize) -> Result<(Coloring, Branch)> {
    need_k(k)?;
    if g.m() < 8 * k {
        return Err(Error::Precondition(format!("{} edges, need at least 8k = {}", g.m(), 8 * k)));
    }
    if !is_reduced(g, 2, k) {
        return Err(Error::Precondition("graph is not reduced for two colors".into()));
    }
    let s = shape(g, k);
    match s.big.len() {
        0 => return Ok((color2_small_components(g, k)?, Branch::SmallComponents)),
        1 => {}
        _ => {
            let second = &s.comps[s.big[1]].vertices;
            return Ok((split(g, k, second, "two-component coloring")?, Branch::TwoBigComponents));
        }
    }
    let big = &s.comps[s.big[0]];
    if s.rest_edges >= k {
        return Ok((split(g, k, &big.vertices, "component-and-rest coloring")?, Branch::ComponentAndRest));
    }
    if g.max_degree() + 2 * s.rest_edges >= 3 * k {
        return Ok((color2_high_degree(g, k)?, Branch::HighDegree));
    }
    Ok((color2_low_degree(g, k)?, Branch::LowDegree))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, gnm, Family};
    use crate::reduction::reduce;

    fn counts(g: &Graph, col: &Coloring) -> Vec<usize> {
        verify_coloring(&Instance { graph: g.clone(), c: 2, k: 0 }, col).unwrap().counts
    }

    fn union(parts: &[Graph]) -> Graph {
        parts.iter().skip(1).fold(parts[0].clone(), |acc, g| acc.disjoint_union(g))
    }

    fn path(n: usize) -> Graph {
        generate(&Family::Path { n }, 0).unwrap()
    }

    #[test]
    fn small_components_four_paths() {
        let g = union(&[path(3), path(3), path(3), path(3)]);
        let col = color2_small_components(&g, 3).unwrap();
        assert_eq!(counts(&g, &col), vec![4, 4]);
    }

    #[test]
    fn small_components_tight() {
        let g = union(&[path(3), path(3), path(3), path(2)]);
        assert_eq!(g.m(), 7);
        let col = color2_small_components(&g, 3).unwrap();
        let mut c = counts(&g, &col);
        c.sort_unstable();
        assert_eq!(c, vec![3, 4]);
        // components stay monochromatic
        assert!(g.edges().all(|(u, v)| col.color(u) == col.color(v)));
    }

    #[test]
    fn small_components_rejects_big_component() {
        let g = path(4);
        assert!(matches!(color2_small_components(&g, 3), Err(Error::Precondition(_))));
    }

    /// Hub `0` joined to `deg` vertices, each with one private extra neighbor.
    fn hub_gadget(deg: usize) -> Graph {
        let mut edges = Vec::new();
        for j in 0..deg {
            let w = 1 + 2 * j;
            edges.push((0, w));
            edges.push((w, w + 1));
        }
        Graph::from_edges(1 + 2 * deg, edges).unwrap()
    }

    #[test]
    fn high_degree_gadget() {
        let k = 2;
        let g = hub_gadget(3 * k);
        let col = color2_high_degree(&g, k).unwrap();
        assert!(counts(&g, &col).iter().all(|&x| x >= k));
        // k pairs in color 0
        assert_eq!(col.as_slice().iter().filter(|&&x| x == 0).count(), 2 * k);
    }

    #[test]
    fn high_degree_gadget_with_outside_edge() {
        let k = 2;
        let g = hub_gadget(3 * k).disjoint_union(&path(2));
        let col = color2_high_degree(&g, k).unwrap();
        assert!(counts(&g, &col).iter().all(|&x| x >= k));
        // one pair plus the outside edge
        assert_eq!(col.as_slice().iter().filter(|&&x| x == 0).count(), 2 * (k - 1) + 2);
    }

    #[test]
    fn high_degree_rejects_unreduced() {
        let k = 2;
        let g = generate(&Family::StarForest { sizes: vec![3 * k] }, 0).unwrap();
        assert!(matches!(color2_high_degree(&g, k), Err(Error::Precondition(_))));
    }

    #[test]
    fn pruning_gadget() {
        // triangle 0-1-2 plus a pendant path 2-3-4-5, k = 3
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
        let a = [0, 1, 2, 3, 4];
        assert_eq!(g.edges_within(&[true, true, true, true, true, false]), 5);
        // d = 2: vertex 0 has two neighbors inside and goes first, after which d = 0
        let pruned = prune_core(&g, &a, 3);
        assert_eq!(pruned, vec![1, 2, 3, 4]);
        let mask: Vec<bool> = (0..6).map(|v| pruned.contains(&v)).collect();
        assert_eq!(g.edges_within(&mask), 3);
    }

    #[test]
    fn grow_then_prune_keeps_k_edges() {
        for seed in 0..100u64 {
            let g = gnm(20, 40, seed).unwrap();
            for k in 1..6 {
                if let Some(a) = grow_core(&g, 0, k) {
                    let a = prune_core(&g, &a, k);
                    let mut mask = vec![false; g.n()];
                    for &v in &a {
                        mask[v] = true;
                    }
                    let e = g.edges_within(&mask);
                    assert!(e >= k);
                    let d = e - k;
                    assert!(a.iter().all(|&v| g.neighbors(v).iter().filter(|&&w| mask[w]).count() > d));
                    assert!(a.len() <= k + 1);
                }
            }
        }
    }

    #[test]
    fn low_degree_two_big_parts() {
        let k = 2;
        let g = union(&[generate(&Family::Clique { n: 5 }, 0).unwrap(), generate(&Family::Cycle { n: 6 }, 0).unwrap()]);
        assert!(g.m() >= 8 * k && g.max_degree() < 3 * k);
        let col = color2_low_degree(&g, k).unwrap();
        assert!(counts(&g, &col).iter().all(|&x| x >= k));
    }

    #[test]
    fn low_degree_random() {
        let mut tried = 0;
        for seed in 0..2000u64 {
            let k = 3;
            let g = generate(&Family::Gnp { n: 40, p: 0.05 + (seed % 5) as f64 * 0.02 }, seed).unwrap();
            if g.max_degree() >= 3 * k || g.m() < 8 * k {
                continue;
            }
            tried += 1;
            let col = color2_low_degree(&g, k).unwrap();
            assert!(counts(&g, &col).iter().all(|&x| x >= k));
            if tried == 200 {
                break;
            }
        }
        assert_eq!(tried, 200);
    }

    #[test]
    fn low_degree_connected_dense_core() {
        // one component only, so the partition machinery has to run
        for seed in 0..300u64 {
            let k = 2 + (seed % 4) as usize;
            let n = 4 * k;
            let g = crate::generate::connected(n, 0.35, seed).unwrap();
            if g.max_degree() >= 3 * k || g.m() < 8 * k {
                continue;
            }
            let col = color2_low_degree(&g, k).unwrap();
            assert!(counts(&g, &col).iter().all(|&x| x >= k));
        }
    }

    #[test]
    fn dispatcher_branches() {
        let k = 2;
        let two = union(&[generate(&Family::Clique { n: 5 }, 0).unwrap(), generate(&Family::Clique { n: 5 }, 0).unwrap()]);
        assert_eq!(color2_dense(&two, k).unwrap().1, Branch::TwoBigComponents);
        let small = union(&vec![path(2); 16]);
        assert_eq!(color2_dense(&small, k).unwrap().1, Branch::SmallComponents);
        // the two single edges outside K6 add up to k
        let rest = union(&[generate(&Family::Clique { n: 6 }, 0).unwrap(), path(2), path(2)]);
        assert_eq!(color2_dense(&rest, k).unwrap().1, Branch::ComponentAndRest);
        let hub = hub_gadget(16);
        assert_eq!(color2_dense(&hub, 4).unwrap().1, Branch::HighDegree);
        let cyc = generate(&Family::Cycle { n: 16 }, 0).unwrap();
        assert_eq!(color2_dense(&cyc, 2).unwrap().1, Branch::LowDegree);
    }

    #[test]
    fn dispatcher_after_reduction() {
        let mut fired = 0;
        for seed in 0..600u64 {
            let k = 2 + (seed % 3) as usize;
            let n = 6 + (seed % 25) as usize;
            let m = (8 * k + (seed as usize % 20)).min(n * (n - 1) / 2);
            let g = gnm(n, m, seed).unwrap();
            let (red, trace) = reduce(&Instance::new(g.clone(), 2, k).unwrap());
            if red.c != 2 || red.graph.m() < 8 * k {
                continue;
            }
            fired += 1;
            let (col, _) = color2_dense(&red.graph, k).unwrap();
            let lifted = trace.lift(&red.graph, &col).unwrap();
            let inst = Instance::new(g, 2, k).unwrap();
            assert!(verify_coloring(&inst, &lifted).unwrap().valid);
        }
        assert!(fired > 100, "only {fired} instances reached the dispatcher");
    }
}

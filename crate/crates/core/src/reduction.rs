//! Obstacle detection and the reduction rules that delete obstacles.
//!
//! An obstacle from `O(i,k)` is a pair of disjoint vertex sets: `i` centers,
//! and attached vertices whose whole neighborhood lies among the centers, such
//! that every center owns `k` private attached neighbors. Every edge touching
//! the obstacle has a center as an endpoint, so the obstacle can serve at most
//! `i` colors and always serves exactly `i`: deleting it and spending `i`
//! colors preserves the answer.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{verify_coloring, Coloring, Graph, Instance};
use crate::matching::hopcroft_karp;

/// Obstacle in terms of stable vertex identities.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Obstacle {
    pub centers: Vec<usize>,
    pub attached: Vec<usize>,
    /// Private attached neighbors of each center, aligned with `centers`.
    pub private: Vec<Vec<usize>>,
}

impl Obstacle {
    /// Number of colors the obstacle spends.
    pub fn i(&self) -> usize {
        self.centers.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.centers.iter().chain(&self.attached).copied()
    }

    /// Checks every defining property against the host graph.
    pub fn check(&self, g: &Graph, k: usize) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidObstacle(msg));
        if self.private.len() != self.centers.len() {
            return bad("private sets do not match the centers".into());
        }
        let mut role = vec![0u8; g.n()];
        let mut index = Vec::with_capacity(self.centers.len() + self.attached.len());
        for (id, tag) in self.centers.iter().map(|&v| (v, 1)).chain(self.attached.iter().map(|&v| (v, 2))) {
            let Some(v) = g.index_of(id) else {
                return bad(format!("vertex {} is not in the graph", id + 1));
            };
            if role[v] != 0 {
                return bad(format!("vertex {} listed twice", id + 1));
            }
            role[v] = tag;
            index.push(v);
        }
        for &v in &index[self.centers.len()..] {
            if let Some(&w) = g.neighbors(v).iter().find(|&&w| role[w] != 1) {
                return bad(format!("attached vertex {} has neighbor {} outside the centers", g.id(v) + 1, g.id(w) + 1));
            }
        }
        let mut owner = vec![usize::MAX; g.n()];
        for (j, (&u, set)) in index.iter().zip(&self.private).enumerate() {
            if set.len() < k {
                return bad(format!("center {} owns {} private vertices, needs {k}", g.id(u) + 1, set.len()));
            }
            for &id in set {
                let Some(w) = g.index_of(id) else {
                    return bad(format!("private vertex {} is not in the graph", id + 1));
                };
                if role[w] != 2 || !g.has_edge(u, w) {
                    return bad(format!("vertex {} is not an attached neighbor of center {}", id + 1, g.id(u) + 1));
                }
                if owner[w] != usize::MAX {
                    return bad(format!("vertex {} is private to two centers", id + 1));
                }
                owner[w] = j;
            }
        }
        Ok(())
    }
}

/// Lexicographically first obstacle from `O(i,k)` (centers compared as sorted
/// id lists), or `None` if `g` contains none.
///
/// For `i = 0` this is an isolated vertex. For `i >= 1` and `k = 0` every
/// `i`-set qualifies vacuously; the first one is returned with its attached set.
pub fn find_obstacle(g: &Graph, i: usize, k: usize) -> Option<Obstacle> {
    if i == 0 {
        let v = g.isolated_vertices().next()?;
        return Some(Obstacle { centers: vec![], attached: vec![g.id(v)], private: vec![] });
    }
    if i > g.n() {
        return None;
    }
    let candidates: Vec<usize> = if k == 0 {
        (0..g.n()).collect()
    } else {
        // a center needs k neighbors of degree at most i
        (0..g.n())
            .filter(|&u| g.neighbors(u).iter().filter(|&&w| g.degree(w) <= i).count() >= k)
            .collect()
    };
    if candidates.len() < i {
        return None;
    }
    let mut chosen: Vec<usize> = (0..i).collect();
    let mut in_centers = vec![false; g.n()];
    loop {
        let centers: Vec<usize> = chosen.iter().map(|&j| candidates[j]).collect();
        if let Some(ob) = try_centers(g, &centers, k, &mut in_centers) {
            return Some(ob);
        }
        // next i-combination of candidate positions
        let mut pos = i;
        while pos > 0 && chosen[pos - 1] == candidates.len() - i + pos - 1 {
            pos -= 1;
        }
        if pos == 0 {
            return None;
        }
        chosen[pos - 1] += 1;
        for j in pos..i {
            chosen[j] = chosen[j - 1] + 1;
        }
    }
}

fn try_centers(g: &Graph, centers: &[usize], k: usize, in_centers: &mut [bool]) -> Option<Obstacle> {
    for &u in centers {
        in_centers[u] = true;
    }
    let result = (|| {
        let mut attached = Vec::new();
        for &u in centers {
            for &w in g.neighbors(u) {
                if !in_centers[w] && g.degree(w) <= centers.len() && g.neighbors(w).iter().all(|&x| in_centers[x]) {
                    attached.push(w);
                }
            }
        }
        attached.sort_unstable();
        attached.dedup();
        if attached.len() < centers.len() * k {
            return None;
        }
        let mut slot = vec![usize::MAX; g.n()];
        for (r, &w) in attached.iter().enumerate() {
            slot[w] = r;
        }
        let lists: Vec<Vec<usize>> =
            centers.iter().map(|&u| g.neighbors(u).iter().filter(|&&w| slot[w] != usize::MAX).map(|&w| slot[w]).collect()).collect();
        if lists.iter().any(|l| l.len() < k) {
            return None;
        }
        // k copies of every center, each needing its own attached neighbor
        let left: Vec<Vec<usize>> = lists.iter().flat_map(|l| std::iter::repeat_n(l.clone(), k)).collect();
        let partners = hopcroft_karp(&left, attached.len());
        if partners.iter().any(Option::is_none) {
            return None;
        }
        let private = (0..centers.len())
            .map(|j| {
                let mut set: Vec<usize> = partners[j * k..(j + 1) * k].iter().map(|p| g.id(attached[p.unwrap()])).collect();
                set.sort_unstable();
                set
            })
            .collect();
        Some(Obstacle {
            centers: centers.iter().map(|&u| g.id(u)).collect(),
            attached: attached.iter().map(|&w| g.id(w)).collect(),
            private,
        })
    })();
    for &u in centers {
        in_centers[u] = false;
    }
    result
}

/// Deletes the obstacle and spends its `i` colors.
pub fn apply_rule(inst: &Instance, ob: &Obstacle) -> Result<Instance> {
    ob.check(&inst.graph, inst.k)?;
    if ob.i() >= inst.c {
        return Err(Error::Precondition(format!("obstacle spends {} colors but only {} are available", ob.i(), inst.c)));
    }
    let g = &inst.graph;
    let gone: Vec<usize> = ob.vertices().map(|id| g.index_of(id).expect("checked above")).collect();
    Ok(Instance { graph: g.remove_vertices(&gone), c: inst.c - ob.i(), k: inst.k })
}

/// First applicable rule in the fixed order `i = 0, 1, ..., c-1`. With `k = 0`
/// only isolated vertices are considered.
pub fn next_obstacle(g: &Graph, c: usize, k: usize) -> Option<Obstacle> {
    let top = if k == 0 { 1 } else { c };
    (0..top).find_map(|i| find_obstacle(g, i, k))
}

pub fn is_reduced(g: &Graph, c: usize, k: usize) -> bool {
    next_obstacle(g, c, k).is_none()
}

/// Record of the rules applied by [`reduce`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionTrace {
    /// Identities of the vertices of the input graph.
    pub original_ids: Vec<usize>,
    pub initial_c: usize,
    pub final_c: usize,
    pub k: usize,
    pub steps: Vec<Obstacle>,
}

impl ReductionTrace {
    pub fn empty(inst: &Instance) -> Self {
        ReductionTrace {
            original_ids: inst.graph.ids().to_vec(),
            initial_c: inst.c,
            final_c: inst.c,
            k: inst.k,
            steps: Vec::new(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Applies the recorded steps to `original` again, checking each obstacle.
    pub fn replay(&self, original: &Instance) -> Result<Instance> {
        if original.graph.ids() != self.original_ids.as_slice() || original.c != self.initial_c || original.k != self.k {
            return Err(Error::Precondition("trace was recorded on a different instance".into()));
        }
        let mut inst = original.clone();
        for ob in &self.steps {
            inst = apply_rule(&inst, ob)?;
        }
        Ok(inst)
    }

    /// Extends a coloring of the reduced graph to the original graph. Each
    /// obstacle center takes a fresh color together with its private
    /// vertices; the remaining deleted vertices take color 0.
    ///
    /// `col` must be valid for the reduced instance at `(final_c, k)`.
    pub fn lift(&self, reduced: &Graph, col: &Coloring) -> Result<Coloring> {
        self.lift_at(reduced, col, self.k)
    }

    /// Like [`ReductionTrace::lift`] but for a threshold `k' <= k`: obstacles
    /// recorded at `k` are obstacles at every smaller threshold too.
    pub fn lift_at(&self, reduced: &Graph, col: &Coloring, k: usize) -> Result<Coloring> {
        if k > self.k {
            return Err(Error::Precondition(format!("cannot lift at k = {k} through obstacles recorded at k = {}", self.k)));
        }
        let reduced_inst = Instance { graph: reduced.clone(), c: self.final_c, k };
        let verdict = verify_coloring(&reduced_inst, col)?;
        if !verdict.valid {
            return Err(Error::Precondition("coloring is not valid for the reduced instance".into()));
        }
        let slot = |id: usize| self.original_ids.binary_search(&id).map_err(|_| Error::Precondition(format!("vertex {} is not in the original graph", id + 1)));
        let mut colors = vec![usize::MAX; self.original_ids.len()];
        for v in 0..reduced.n() {
            colors[slot(reduced.id(v))?] = col.color(v);
        }
        let mut fresh = self.final_c;
        for ob in self.steps.iter().rev() {
            for id in &ob.attached {
                colors[slot(*id)?] = 0;
            }
            for (u, set) in ob.centers.iter().zip(&ob.private) {
                colors[slot(*u)?] = fresh;
                for id in set {
                    colors[slot(*id)?] = fresh;
                }
                fresh += 1;
            }
        }
        if fresh != self.initial_c || colors.contains(&usize::MAX) {
            return Err(Error::Internal("trace does not account for every vertex and color".into()));
        }
        Ok(Coloring::new(colors))
    }
}

/// Applies rules until none applies. After every application the search
/// restarts from `i = 0`.
pub fn reduce(inst: &Instance) -> (Instance, ReductionTrace) {
    let mut trace = ReductionTrace::empty(inst);
    let mut current = inst.clone();
    while let Some(ob) = next_obstacle(&current.graph, current.c, current.k) {
        current = apply_rule(&current, &ob).expect("found obstacles are valid and spend fewer than c colors");
        trace.steps.push(ob);
    }
    trace.final_c = current.c;
    (current, trace)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{decide_exact, ExactOutcome, DEFAULT_BUDGET};
    use crate::generate::{generate, gnm, Family};
    use crate::graph::is_certificate;

    fn star(leaves: usize) -> Graph {
        generate(&Family::StarForest { sizes: vec![leaves] }, 0).unwrap()
    }

    fn c4() -> Graph {
        generate(&Family::Cycle { n: 4 }, 0).unwrap()
    }

    /// Exhaustive oracle: every i-subset as centers, every way of giving each
    /// attached vertex to one center or to nobody.
    fn brute_force_exists(g: &Graph, i: usize, k: usize) -> bool {
        let n = g.n();
        (0u32..1 << n).filter(|s| s.count_ones() as usize == i).any(|set| {
            let centers: Vec<usize> = (0..n).filter(|&v| set >> v & 1 == 1).collect();
            let attached: Vec<usize> = (0..n)
                .filter(|&v| set >> v & 1 == 0 && g.degree(v) > 0 && g.neighbors(v).iter().all(|&w| set >> w & 1 == 1))
                .collect();
            let mut owner = vec![0usize; attached.len()];
            loop {
                let mut counts = vec![0; i];
                for (a, &o) in attached.iter().zip(&owner) {
                    if o > 0 && g.has_edge(*a, centers[o - 1]) {
                        counts[o - 1] += 1;
                    }
                }
                if counts.iter().all(|&x| x >= k) {
                    return true;
                }
                let mut p = 0;
                while p < owner.len() && owner[p] == i {
                    owner[p] = 0;
                    p += 1;
                }
                if p == owner.len() {
                    return false;
                }
                owner[p] += 1;
            }
        })
    }

    #[test]
    fn star_is_an_obstacle() {
        let ob = find_obstacle(&star(3), 1, 3).unwrap();
        assert_eq!(ob.centers, vec![0]);
        assert_eq!(ob.attached, vec![1, 2, 3]);
        assert_eq!(ob.private, vec![vec![1, 2, 3]]);
        ob.check(&star(3), 3).unwrap();
        assert!(find_obstacle(&star(3), 1, 4).is_none());
    }

    #[test]
    fn isolated_vertex_is_an_obstacle() {
        let g = c4().disjoint_union(&Graph::empty(1));
        let ob = find_obstacle(&g, 0, 5).unwrap();
        assert_eq!(ob, Obstacle { centers: vec![], attached: vec![4], private: vec![] });
        assert!(find_obstacle(&c4(), 0, 1).is_none());
    }

    #[test]
    fn cycle_has_no_single_center_obstacle() {
        assert!(find_obstacle(&c4(), 1, 2).is_none());
        assert!(find_obstacle(&c4(), 1, 1).is_none());
        // {0, 2} dominate both other vertices
        let ob = find_obstacle(&c4(), 2, 1).unwrap();
        assert_eq!(ob.centers, vec![0, 2]);
        ob.check(&c4(), 1).unwrap();
    }

    #[test]
    fn detection_matches_brute_force() {
        for seed in 0..300u64 {
            let n = 3 + (seed % 6) as usize;
            let m = (seed as usize * 3) % (n + 3);
            let g = gnm(n, m.min(n * (n - 1) / 2), seed).unwrap();
            for i in 1..=3 {
                for k in 1..=3 {
                    let found = find_obstacle(&g, i, k);
                    assert_eq!(found.is_some(), brute_force_exists(&g, i, k), "seed {seed} i {i} k {k}");
                    if let Some(ob) = found {
                        ob.check(&g, k).unwrap();
                        assert_eq!(ob.i(), i);
                    }
                }
            }
        }
    }

    #[test]
    fn detection_is_monotone_in_k() {
        for seed in 0..100u64 {
            let g = gnm(9, 9, seed).unwrap();
            for i in 1..=2 {
                for k in 1..=4 {
                    if find_obstacle(&g, i, k).is_none() {
                        assert!(find_obstacle(&g, i, k + 1).is_none());
                    }
                }
            }
        }
    }

    #[test]
    fn check_rejects_broken_obstacles() {
        let g = star(3);
        let good = find_obstacle(&g, 1, 3).unwrap();
        assert!(good.check(&g, 4).is_err());
        let mut shared = good.clone();
        shared.centers = vec![0, 1];
        shared.private = vec![vec![2, 3], vec![2]];
        assert!(shared.check(&g, 1).is_err());
        let leaky = Obstacle { centers: vec![1], attached: vec![0], private: vec![vec![0]] };
        assert!(leaky.check(&g, 1).is_err());
    }

    #[test]
    fn apply_rule_examples() {
        let g = star(3).disjoint_union(&c4());
        let inst = Instance::new(g, 2, 3).unwrap();
        let ob = find_obstacle(&inst.graph, 1, 3).unwrap();
        let reduced = apply_rule(&inst, &ob).unwrap();
        assert_eq!(reduced.c, 1);
        assert_eq!(reduced.graph.ids(), &[4, 5, 6, 7]);
        assert_eq!(reduced.graph.m(), 4);
        // the same obstacle cannot be applied twice
        assert!(apply_rule(&reduced, &ob).is_err());

        let g = c4().disjoint_union(&Graph::empty(1));
        let inst = Instance::new(g, 2, 2).unwrap();
        let ob = find_obstacle(&inst.graph, 0, 2).unwrap();
        let reduced = apply_rule(&inst, &ob).unwrap();
        assert_eq!((reduced.graph.n(), reduced.c), (4, 2));
    }

    #[test]
    fn apply_rule_needs_a_spare_color() {
        let inst = Instance::new(star(3), 1, 3).unwrap();
        let ob = find_obstacle(&inst.graph, 1, 3).unwrap();
        assert!(matches!(apply_rule(&inst, &ob), Err(Error::Precondition(_))));
    }

    #[test]
    fn reduce_examples() {
        let inst = Instance::new(star(3).disjoint_union(&c4()), 2, 3).unwrap();
        let (reduced, trace) = reduce(&inst);
        assert_eq!((reduced.graph.n(), reduced.graph.m(), reduced.c), (4, 4, 1));
        assert_eq!(trace.steps.len(), 1);
        assert_eq!(trace.steps[0].i(), 1);

        let inst = Instance::new(c4(), 2, 2).unwrap();
        let (reduced, trace) = reduce(&inst);
        assert_eq!(reduced, inst);
        assert!(trace.is_empty());

        let inst = Instance::new(Graph::empty(3), 2, 1).unwrap();
        let (reduced, trace) = reduce(&inst);
        assert_eq!((reduced.graph.n(), reduced.c), (0, 2));
        assert_eq!(trace.steps.len(), 3);
    }

    #[test]
    fn zero_threshold_only_removes_isolated_vertices() {
        let inst = Instance::new(star(3).disjoint_union(&Graph::empty(2)), 3, 0).unwrap();
        let (reduced, trace) = reduce(&inst);
        assert_eq!(reduced.graph.n(), 4);
        assert_eq!(reduced.c, 3);
        assert_eq!(trace.steps.len(), 2);
    }

    #[test]
    fn reduce_is_idempotent_and_replayable() {
        for seed in 0..60u64 {
            let g = gnm(10, 9, seed).unwrap();
            for c in 2..=3 {
                for k in 1..=3 {
                    let inst = Instance::new(g.clone(), c, k).unwrap();
                    let (reduced, trace) = reduce(&inst);
                    assert!(reduced.c >= 1);
                    let (again, second) = reduce(&reduced);
                    assert_eq!(again, reduced);
                    assert!(second.is_empty());
                    assert_eq!(trace.replay(&inst).unwrap(), reduced);
                }
            }
        }
    }

    #[test]
    fn lifting_examples() {
        let g = star(3).disjoint_union(&c4());
        let inst = Instance::new(g, 2, 3).unwrap();
        let (reduced, trace) = reduce(&inst);
        let col = Coloring::uniform(reduced.graph.n(), 0);
        let lifted = trace.lift(&reduced.graph, &col).unwrap();
        assert_eq!(lifted.as_slice(), &[1, 1, 1, 1, 0, 0, 0, 0]);
        assert!(is_certificate(&inst, &lifted));

        let inst = Instance::new(c4().disjoint_union(&Graph::empty(1)), 1, 4).unwrap();
        let (reduced, trace) = reduce(&inst);
        let lifted = trace.lift(&reduced.graph, &Coloring::uniform(4, 0)).unwrap();
        assert_eq!(lifted.color(4), 0);
        assert_eq!(verify_coloring(&inst, &lifted).unwrap().counts, vec![4]);
    }

    #[test]
    fn lift_rejects_invalid_colorings() {
        let inst = Instance::new(star(3).disjoint_union(&c4()), 2, 3).unwrap();
        let (reduced, trace) = reduce(&inst);
        let bad = Coloring::new(vec![0, 0, 0, 0]);
        let short = Instance { k: 5, ..reduced.clone() };
        assert!(!is_certificate(&short, &bad));
        assert!(trace.lift(&reduced.graph, &Coloring::new(vec![0, 0])).is_err());
    }

    #[test]
    fn planted_pendant_star_round_trip() {
        for seed in 0..30u64 {
            let base = gnm(8, 14, seed).unwrap();
            let g = generate(&Family::PadWithStars { base, count: 1, size: 4 }, seed).unwrap();
            let inst = Instance::new(g, 2, 2).unwrap();
            let (reduced, trace) = reduce(&inst);
            assert!(!trace.is_empty());
            if let ExactOutcome::Yes(col) = decide_exact(&reduced, DEFAULT_BUDGET) {
                let lifted = trace.lift(&reduced.graph, &col).unwrap();
                assert!(is_certificate(&inst, &lifted));
            }
        }
    }

    #[test]
    fn reduction_is_safe_on_small_graphs() {
        for seed in 0..200u64 {
            let n = 4 + (seed % 5) as usize;
            let g = gnm(n, ((seed as usize) % (n + 4)).min(n * (n - 1) / 2), seed).unwrap();
            for c in 2..=3 {
                for k in 0..=3 {
                    let inst = Instance::new(g.clone(), c, k).unwrap();
                    let (reduced, trace) = reduce(&inst);
                    let before = decide_exact(&inst, DEFAULT_BUDGET);
                    let after = decide_exact(&reduced, DEFAULT_BUDGET);
                    assert_eq!(matches!(before, ExactOutcome::Yes(_)), matches!(after, ExactOutcome::Yes(_)), "seed {seed} c {c} k {k}");
                    if let ExactOutcome::Yes(col) = after {
                        assert!(is_certificate(&inst, &trace.lift(&reduced.graph, &col).unwrap()));
                    }
                }
            }
        }
    }
}

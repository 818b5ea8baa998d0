//! Exponential-time exact decision, used as ground truth and as the last step on kernels.
//!
//! Each connected component is searched independently: a depth-first
//! enumeration of its colorings records the set of reachable per-color edge
//! counts, capped at `k`, keeping only vectors not dominated (up to a color
//! permutation) by another reachable vector. Colors are symmetric, so the
//! enumeration only visits canonical colorings (a vertex may open at most one
//! new color). Components are then combined by a dynamic program over capped
//! count vectors.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicU64, Ordering};

use crate::graph::{Coloring, Component, Graph, Instance};
use crate::par::{self, Execution};

/// Default limit on search-tree nodes per exact call.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExactOutcome {
    Yes(Coloring),
    No,
    BudgetExceeded,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BudgetExceeded;

impl std::fmt::Display for BudgetExceeded {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("exact search budget exceeded")
    }
}

impl std::error::Error for BudgetExceeded {}

impl From<BudgetExceeded> for crate::Error {
    fn from(_: BudgetExceeded) -> Self {
        crate::Error::BudgetExceeded
    }
}

pub fn decide_exact(inst: &Instance, budget: u64) -> ExactOutcome {
    decide_exact_with(inst, budget, Execution::default())
}

pub fn decide_exact_with(inst: &Instance, budget: u64, exec: Execution) -> ExactOutcome {
    let (g, c, k) = (&inst.graph, inst.c, inst.k);
    if k == 0 {
        return ExactOutcome::Yes(Coloring::uniform(g.n(), 0));
    }
    if g.m() < c * k {
        return ExactOutcome::No;
    }
    let comps: Vec<Component> = g.components().into_iter().filter(|comp| comp.edges > 0).collect();
    let counter = AtomicU64::new(0);
    let tables = par::map(exec, &comps, |comp| ComponentSearch::run(g, comp, c, k, budget, &counter));
    if counter.load(Ordering::Relaxed) > budget {
        return ExactOutcome::BudgetExceeded;
    }
    let Some(tables) = tables.into_iter().collect::<Option<Vec<_>>>() else {
        return ExactOutcome::BudgetExceeded;
    };
    match combine(g, &comps, &tables, c, k) {
        Some(col) => ExactOutcome::Yes(col),
        None => ExactOutcome::No,
    }
}

/// Largest `k` for which `g` admits a `c`-coloring with `k` edges of every
/// color, with a witness. Each probe of the binary search gets `budget` nodes.
pub fn max_k_exact(g: &Graph, c: usize, budget: u64) -> Result<(usize, Coloring), BudgetExceeded> {
    max_k_exact_with(g, c, budget, Execution::default())
}

pub fn max_k_exact_with(g: &Graph, c: usize, budget: u64, exec: Execution) -> Result<(usize, Coloring), BudgetExceeded> {
    assert!(c >= 1, "c must be at least 1");
    let mut lo = 0;
    let mut best = Coloring::uniform(g.n(), 0);
    let mut hi = g.m() / c;
    while lo < hi {
        let mid = (lo + hi).div_ceil(2);
        let inst = Instance { graph: g.clone(), c, k: mid };
        match decide_exact_with(&inst, budget, exec) {
            ExactOutcome::Yes(col) => {
                lo = mid;
                best = col;
            }
            ExactOutcome::No => hi = mid - 1,
            ExactOutcome::BudgetExceeded => return Err(BudgetExceeded),
        }
    }
    Ok((lo, best))
}

/// Reachable capped count vectors of one component, each with a coloring of
/// the component's vertices (in `Component::vertices` order).
type Table = Vec<(Vec<usize>, Vec<usize>)>;

const FLUSH_EVERY: u64 = 4096;
const UNSET: usize = usize::MAX;

struct ComponentSearch<'a> {
    c: usize,
    k: usize,
    budget: u64,
    counter: &'a AtomicU64,
    /// Search order (BFS from the smallest vertex), as component-local indices.
    adj: Vec<Vec<usize>>,
    color: Vec<usize>,
    cnt: Vec<usize>,
    /// Edges from a vertex of each color to a still uncolored vertex.
    pending: Vec<usize>,
    /// Edges with both endpoints uncolored.
    free: usize,
    /// Nodes not yet added to the shared counter.
    local_nodes: u64,
    aborted: bool,
    saturated: bool,
    /// Pareto set: (sorted descending vector, vector, coloring in search order).
    found: Vec<(Vec<usize>, Vec<usize>, Vec<usize>)>,
}

impl<'a> ComponentSearch<'a> {
    fn run(g: &Graph, comp: &Component, c: usize, k: usize, budget: u64, counter: &'a AtomicU64) -> Option<Table> {
        let size = comp.vertices.len();
        let mut local = vec![UNSET; g.n()];
        let mut order = Vec::with_capacity(size);
        local[comp.vertices[0]] = 0;
        order.push(comp.vertices[0]);
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for &w in g.neighbors(v) {
                if local[w] == UNSET {
                    local[w] = order.len();
                    order.push(w);
                }
            }
        }
        let adj = order.iter().map(|&v| g.neighbors(v).iter().map(|&w| local[w]).collect()).collect();
        let mut search = ComponentSearch {
            c,
            k,
            budget,
            counter,
            adj,
            color: vec![UNSET; size],
            cnt: vec![0; c],
            pending: vec![0; c],
            free: comp.edges,
            local_nodes: 0,
            aborted: false,
            saturated: false,
            found: Vec::new(),
        };
        search.dfs(0, 0);
        if search.aborted || counter.fetch_add(search.local_nodes, Ordering::Relaxed) + search.local_nodes > budget {
            return None;
        }
        // back to `comp.vertices` order
        let mut position = vec![0; size];
        for (t, &v) in order.iter().enumerate() {
            position[comp.vertices.binary_search(&v).expect("vertex of component")] = t;
        }
        Some(
            search
                .found
                .into_iter()
                .map(|(_, vector, colors)| (vector, position.iter().map(|&t| colors[t]).collect()))
                .collect(),
        )
    }

    fn assign(&mut self, v: usize, x: usize) {
        self.color[v] = x;
        for i in 0..self.adj[v].len() {
            let w = self.adj[v][i];
            match self.color[w] {
                UNSET => {
                    self.free -= 1;
                    self.pending[x] += 1;
                }
                y => {
                    self.pending[y] -= 1;
                    if y == x {
                        self.cnt[x] += 1;
                    }
                }
            }
        }
    }

    fn unassign(&mut self, v: usize) {
        let x = self.color[v];
        self.color[v] = UNSET;
        for i in 0..self.adj[v].len() {
            let w = self.adj[v][i];
            match self.color[w] {
                UNSET => {
                    self.free += 1;
                    self.pending[x] -= 1;
                }
                y => {
                    self.pending[y] += 1;
                    if y == x {
                        self.cnt[x] -= 1;
                    }
                }
            }
        }
    }

    fn dominated(&self, sorted: &[usize]) -> bool {
        self.found.iter().any(|(s, _, _)| s.iter().zip(sorted).all(|(a, b)| a >= b))
    }

    fn dfs(&mut self, t: usize, used: usize) {
        if self.aborted || self.saturated {
            return;
        }
        self.local_nodes += 1;
        if self.local_nodes == FLUSH_EVERY {
            self.local_nodes = 0;
            if self.counter.fetch_add(FLUSH_EVERY, Ordering::Relaxed) + FLUSH_EVERY > self.budget {
                self.aborted = true;
                return;
            }
        }

        let mut bound: Vec<usize> = (0..self.c).map(|x| (self.cnt[x] + self.pending[x] + self.free).min(self.k)).collect();
        bound.sort_unstable_by(|a, b| b.cmp(a));
        if self.dominated(&bound) {
            return;
        }
        if t == self.color.len() {
            let vector: Vec<usize> = self.cnt.iter().map(|&x| x.min(self.k)).collect();
            self.found.retain(|(s, _, _)| !s.iter().zip(&bound).all(|(a, b)| a <= b));
            self.saturated = bound.iter().all(|&x| x == self.k);
            self.found.push((bound, vector, self.color.clone()));
            return;
        }
        let top = (used + 1).min(self.c);
        for x in 0..top {
            self.assign(t, x);
            self.dfs(t + 1, used.max(x + 1));
            self.unassign(t);
            if self.aborted || self.saturated {
                return;
            }
        }
    }
}

fn permutations(c: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                prefix.push(x);
                go(prefix, used, out);
                prefix.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; c], &mut out);
    out
}

fn combine(g: &Graph, comps: &[Component], tables: &[Table], c: usize, k: usize) -> Option<Coloring> {
    let perms = permutations(c);
    let options: Vec<Vec<(Vec<usize>, Vec<usize>)>> = tables
        .iter()
        .map(|table| {
            let mut expanded: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
            for (vector, colors) in table {
                for pi in &perms {
                    let mut permuted = vec![0; c];
                    for x in 0..c {
                        permuted[pi[x]] = vector[x];
                    }
                    expanded.entry(permuted).or_insert_with(|| colors.iter().map(|&x| pi[x]).collect());
                }
            }
            expanded.into_iter().collect()
        })
        .collect();

    let full = vec![k; c];
    // layers[j]: states after j components, each with (predecessor index, option index)
    let mut layers: Vec<Vec<(Vec<usize>, usize, usize)>> = vec![vec![(vec![0; c], usize::MAX, usize::MAX)]];
    let mut done = None;
    for opts in &options {
        let prev = layers.last().expect("at least one layer");
        let mut next: BTreeMap<Vec<usize>, (usize, usize)> = BTreeMap::new();
        for (si, (state, _, _)) in prev.iter().enumerate() {
            for (oi, (vector, _)) in opts.iter().enumerate() {
                let sum: Vec<usize> = state.iter().zip(vector).map(|(a, b)| (a + b).min(k)).collect();
                next.entry(sum).or_insert((si, oi));
            }
        }
        let layer: Vec<_> = next.into_iter().map(|(s, (p, o))| (s, p, o)).collect();
        let hit = layer.iter().position(|(s, _, _)| *s == full);
        layers.push(layer);
        if let Some(idx) = hit {
            done = Some(idx);
            break;
        }
    }
    let mut idx = done?;

    let mut colors = vec![0; g.n()];
    for j in (1..layers.len()).rev() {
        let (_, prev, opt) = &layers[j][idx];
        let comp_colors = &options[j - 1][*opt].1;
        for (&v, &x) in comps[j - 1].vertices.iter().zip(comp_colors) {
            colors[v] = x;
        }
        idx = *prev;
    }
    Some(Coloring::new(colors))
}

//! End-to-end kernelization, decision and approximation.
//!
//! Every yes-answer carries a coloring of the input graph that has been
//! checked with [`verify_coloring`] before it is returned.

use num_rational::Ratio;
use serde::Serialize;
use serde_json::{json, Value};

use crate::bounds::{approx_ratio, general, kernel_factor, next_pow2};
use crate::dense::{color_dense_c, color_star_graph};
use crate::error::{Error, Result};
use crate::exact::{decide_exact_with, max_k_exact_with, ExactOutcome};
use crate::graph::{verify_coloring, Coloring, Graph, Instance};
use crate::matching::matching_of_size;
use crate::par::{self, Execution};
use crate::reduction::{is_reduced, reduce, Obstacle, ReductionTrace};
use crate::star_cover::{initial_cover, refine_cover, RefineOutcome};
use crate::two_color::{color2_dense, Branch};

/// Construction behind a yes-answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    /// `k = 0`: every coloring works.
    ZeroThreshold,
    /// `k = 1`: a matching with one edge per color.
    Matching,
    /// A star cover of the reduced graph with small stars.
    StarCover,
    /// The star-cover refinement stopped at an obstacle with enough centers.
    StarCoverObstacle,
    /// One color left after reduction and enough edges for it.
    SingleColor,
    TwoColor(Branch),
    /// Above the general density threshold.
    Dense,
    /// Exhaustive search on the kernel.
    Exact,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::ZeroThreshold => "zero-threshold",
            Provenance::Matching => "matching",
            Provenance::StarCover => "star-cover",
            Provenance::StarCoverObstacle => "star-cover/obstacle",
            Provenance::SingleColor => "single-color",
            Provenance::TwoColor(Branch::TwoBigComponents) => "two-color/two-big-components",
            Provenance::TwoColor(Branch::SmallComponents) => "two-color/small-components",
            Provenance::TwoColor(Branch::ComponentAndRest) => "two-color/component-and-rest",
            Provenance::TwoColor(Branch::HighDegree) => "two-color/high-degree",
            Provenance::TwoColor(Branch::LowDegree) => "two-color/low-degree",
            Provenance::Dense => "dense",
            Provenance::Exact => "exact",
        }
    }
}

impl std::fmt::Display for Provenance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Why an instance is a no-instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NoReason {
    /// `k = 1` and the graph has no matching with `c` edges.
    SmallMatching,
    /// One color left after reduction and fewer than `k` edges.
    TooFewEdges,
    /// Exhaustive search on the kernel found nothing.
    Exhausted,
}

impl NoReason {
    pub fn as_str(self) -> &'static str {
        match self {
            NoReason::SmallMatching => "small-matching",
            NoReason::TooFewEdges => "too-few-edges",
            NoReason::Exhausted => "exhausted",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Yes { coloring: Coloring, provenance: Provenance },
    No { reason: NoReason },
    Kernel { kernel: Instance, trace: ReductionTrace },
    BudgetExceeded { kernel: Instance, trace: ReductionTrace },
}

impl Outcome {
    pub fn verdict(&self) -> &'static str {
        match self {
            Outcome::Yes { .. } => "yes",
            Outcome::No { .. } => "no",
            Outcome::Kernel { .. } => "kernel",
            Outcome::BudgetExceeded { .. } => "budget",
        }
    }

    /// JSON with external (1-based) vertex ids and colors.
    pub fn to_json(&self, inst: &Instance) -> Value {
        let mut out = json!({ "verdict": self.verdict(), "k": inst.k });
        match self {
            Outcome::Yes { coloring, provenance } => {
                out["coloring"] = json!(coloring.to_external());
                out["provenance"] = json!(provenance.as_str());
            }
            Outcome::No { reason } => out["provenance"] = json!(reason.as_str()),
            Outcome::Kernel { kernel, trace } | Outcome::BudgetExceeded { kernel, trace } => {
                out["kernel"] = instance_json(kernel);
                out["trace"] = trace_json(trace);
            }
        }
        out
    }
}

/// `{"n", "ids", "edges", "c", "k"}`; `ids` and edge endpoints are external ids.
pub fn instance_json(inst: &Instance) -> Value {
    let g = &inst.graph;
    let edges: Vec<[usize; 2]> = g.edges().map(|(u, v)| [g.id(u) + 1, g.id(v) + 1]).collect();
    let ids: Vec<usize> = g.ids().iter().map(|&id| id + 1).collect();
    json!({ "graph": { "n": g.n(), "ids": ids, "edges": edges }, "c": inst.c, "k": inst.k })
}

#[derive(Serialize)]
struct ObstacleJson {
    centers: Vec<usize>,
    attached: Vec<usize>,
    private: Vec<Vec<usize>>,
}

fn external(ids: &[usize]) -> Vec<usize> {
    ids.iter().map(|&id| id + 1).collect()
}

pub fn obstacle_json(ob: &Obstacle) -> Value {
    json!(ObstacleJson {
        centers: external(&ob.centers),
        attached: external(&ob.attached),
        private: ob.private.iter().map(|p| external(p)).collect(),
    })
}

pub fn trace_json(trace: &ReductionTrace) -> Value {
    Value::Array(trace.steps.iter().map(obstacle_json).collect())
}

fn checked(inst: &Instance, col: Coloring, what: &str) -> Result<Coloring> {
    let verdict = verify_coloring(inst, &col).map_err(|e| Error::Internal(format!("{what}: {e}")))?;
    if !verdict.valid {
        return Err(Error::Internal(format!("{what} does not verify (counts {:?}, k = {})", verdict.counts, inst.k)));
    }
    Ok(col)
}

/// Coloring with color `j` on the `j`-th matching edge and 0 elsewhere.
fn matching_coloring(g: &Graph, c: usize) -> Option<Coloring> {
    let edges = matching_of_size(g, c)?;
    let mut colors = vec![0; g.n()];
    for (j, (u, v)) in edges.into_iter().enumerate() {
        colors[u] = j;
        colors[v] = j;
    }
    Some(Coloring::new(colors))
}

/// Certificate for a reduced graph without isolated vertices and with at
/// least `2ck` vertices.
fn certify_large_reduced(g: &Graph, c: usize, k: usize) -> Result<(Coloring, Provenance)> {
    if k == 1 {
        let col = matching_coloring(g, c).ok_or_else(|| Error::Internal("large reduced graph has no matching with c edges".into()))?;
        return Ok((col, Provenance::Matching));
    }
    let cover = initial_cover(g)?;
    let refined = refine_cover(g, &cover, k, c).map_err(|e| match e {
        Error::NotReduced { .. } => Error::Internal(format!("reduced graph produced {e}")),
        other => other,
    })?;
    match refined.outcome {
        RefineOutcome::Cover(stars) => Ok((color_star_graph(&stars.to_graph(g)?, c, k)?, Provenance::StarCover)),
        RefineOutcome::Witness(ob) => {
            let mut colors = vec![0; g.n()];
            for (j, (center, private)) in ob.centers.iter().zip(&ob.private).take(c).enumerate() {
                for &id in std::iter::once(center).chain(private) {
                    colors[g.index_of(id).expect("obstacle lies in the graph")] = j;
                }
            }
            Ok((Coloring::new(colors), Provenance::StarCoverObstacle))
        }
    }
}

/// Reduces the instance and either certifies it, rejects it, or returns a
/// kernel with fewer than `2c'k` vertices (`c'` the remaining colors), fewer
/// than `8k` edges when `c' = 2`, and fewer than `f(c'', k, n)` edges in
/// general (`c''` the next power of two `>= c'`).
pub fn kernelize(inst: &Instance) -> Result<Outcome> {
    let (g, c, k) = (&inst.graph, inst.c, inst.k);
    if k == 0 {
        return Ok(Outcome::Yes { coloring: Coloring::uniform(g.n(), 0), provenance: Provenance::ZeroThreshold });
    }
    if k == 1 {
        return Ok(match matching_coloring(g, c) {
            Some(col) => Outcome::Yes { coloring: checked(inst, col, "matching coloring")?, provenance: Provenance::Matching },
            None => Outcome::No { reason: NoReason::SmallMatching },
        });
    }
    let (red, trace) = reduce(inst);
    let (h, c2) = (&red.graph, red.c);
    let lifted = |col: Coloring, provenance: Provenance| -> Result<Outcome> {
        let col = trace.lift(h, &col)?;
        Ok(Outcome::Yes { coloring: checked(inst, col, provenance.as_str())?, provenance })
    };
    if h.n() >= 2 * c2 * k {
        let (col, provenance) = certify_large_reduced(h, c2, k)?;
        return lifted(col, provenance);
    }
    if c2 == 1 {
        if h.m() >= k {
            return lifted(Coloring::uniform(h.n(), 0), Provenance::SingleColor);
        }
        return Ok(Outcome::No { reason: NoReason::TooFewEdges });
    }
    if c2 == 2 && h.m() >= 8 * k {
        let (col, branch) = color2_dense(h, k)?;
        return lifted(col, Provenance::TwoColor(branch));
    }
    if (h.m() as u128) >= general(next_pow2(c2), k, h.n()) {
        return lifted(color_dense_c(h, c2, k)?, Provenance::Dense);
    }
    Ok(Outcome::Kernel { kernel: red, trace })
}

/// Kernelizes, then searches the kernel exhaustively within `budget` nodes.
pub fn decide(inst: &Instance, budget: u64) -> Result<Outcome> {
    decide_with(inst, budget, Execution::default())
}

pub fn decide_with(inst: &Instance, budget: u64, exec: Execution) -> Result<Outcome> {
    let (kernel, trace) = match kernelize(inst)? {
        Outcome::Kernel { kernel, trace } => (kernel, trace),
        other => return Ok(other),
    };
    match decide_exact_with(&kernel, budget, exec) {
        ExactOutcome::Yes(col) => {
            let col = trace.lift(&kernel.graph, &col)?;
            Ok(Outcome::Yes { coloring: checked(inst, col, "lifted exact coloring")?, provenance: Provenance::Exact })
        }
        ExactOutcome::No => Ok(Outcome::No { reason: NoReason::Exhausted }),
        ExactOutcome::BudgetExceeded => Ok(Outcome::BudgetExceeded { kernel, trace }),
    }
}

/// Decides many instances, in parallel across instances when `exec` allows.
/// Results keep the input order.
pub fn decide_batch(insts: &[Instance], budget: u64, exec: Execution) -> Vec<Result<Outcome>> {
    par::map(exec, insts, |inst| decide_with(inst, budget, Execution::Sequential))
}

/// Which step of an approximation produced its answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ApproxBranch {
    /// One color: the edge count is optimal.
    SingleColor,
    /// Few edges: optimum found by exhaustive search.
    Exact,
    /// Few vertices relative to the edges: dense coloring.
    Dense,
    /// Reduced with many vertices: star cover or matching.
    StarCover,
    /// Two colors, reduced, at least `8p` edges.
    TwoColor,
    /// Reduction left enough for the target; the certificate is lifted.
    Lifted,
    /// Reduction left too little: the reduced optimum is the optimum.
    ReducedExact,
    /// Reduction left too little, with the ratio guarantee of the reduced instance.
    ReducedRatio,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Approx {
    pub k: usize,
    pub coloring: Coloring,
    pub branch: ApproxBranch,
    /// `k` is known to be optimal.
    pub exact: bool,
    /// The reduced instance at the top level, when reduction was needed.
    pub reduced: Option<Instance>,
}

impl Approx {
    pub fn to_json(&self) -> Value {
        json!({
            "k": self.k,
            "coloring": self.coloring.to_external(),
            "branch": self.branch,
            "exact": self.exact,
        })
    }
}

/// Works on the graph without its isolated vertices, then gives them color 0.
fn without_isolated(g: &Graph, c: usize, run: impl FnOnce(&Graph) -> Result<Approx>) -> Result<Approx> {
    let isolated: Vec<usize> = g.isolated_vertices().collect();
    let core = g.remove_vertices(&isolated);
    let mut approx = run(&core)?;
    let mut colors = vec![0; g.n()];
    for v in 0..core.n() {
        colors[g.index_of(core.id(v)).expect("core is a subgraph")] = approx.coloring.color(v);
    }
    let inst = Instance { graph: g.clone(), c, k: approx.k };
    approx.coloring = checked(&inst, Coloring::new(colors), "approximate coloring")?;
    Ok(approx)
}

fn exact_approx(g: &Graph, c: usize, budget: u64) -> Result<Approx> {
    let (k, coloring) = max_k_exact_with(g, c, budget, Execution::default())?;
    Ok(Approx { k, coloring, branch: ApproxBranch::Exact, exact: true, reduced: None })
}

/// Returns `k` and a coloring with `k` edges of every color, where the
/// optimum is at most `2^(c−1)·P(c)·k`.
pub fn approx_general(g: &Graph, c: usize, budget: u64) -> Result<Approx> {
    if c == 0 {
        return Err(Error::InvalidParameter("c must be at least 1".into()));
    }
    without_isolated(g, c, |core| approx_general_core(core, c, budget))
}

fn approx_general_core(g: &Graph, c: usize, budget: u64) -> Result<Approx> {
    if c == 1 {
        return Ok(Approx { k: g.m(), coloring: Coloring::uniform(g.n(), 0), branch: ApproxBranch::SingleColor, exact: true, reduced: None });
    }
    let k = usize::try_from(g.m() as u128 / kernel_factor(c)).expect("fits");
    if k == 0 {
        return exact_approx(g, c, budget);
    }
    let done = |coloring: Coloring, branch| Approx { k, coloring, branch, exact: false, reduced: None };
    if g.n() <= 2 * c * k {
        return Ok(done(color_dense_c(g, c, k)?, ApproxBranch::Dense));
    }
    if is_reduced(g, c, k) {
        return Ok(done(certify_large_reduced(g, c, k)?.0, ApproxBranch::StarCover));
    }
    let inst = Instance { graph: g.clone(), c, k };
    let (red, trace) = reduce(&inst);
    let inner = approx_general_core(&red.graph, red.c, budget)?;
    let reduced = Some(red.clone());
    if inner.k >= k {
        let coloring = trace.lift(&red.graph, &inner.coloring)?;
        return Ok(Approx { k, coloring, branch: ApproxBranch::Lifted, exact: false, reduced });
    }
    let coloring = trace.lift_at(&red.graph, &inner.coloring, inner.k)?;
    // the reduced optimum is below k, so the obstacles also work at that optimum plus one
    let below_target = approx_ratio(red.c).and_then(|r| r.checked_mul(inner.k as u128)).is_some_and(|b| b < k as u128);
    let branch = if below_target { ApproxBranch::ReducedExact } else { ApproxBranch::ReducedRatio };
    Ok(Approx { k: inner.k, coloring, branch, exact: below_target && inner.exact, reduced })
}

/// `ceil(3 / epsilon)`.
pub fn p0(epsilon: Ratio<u64>) -> Result<usize> {
    if *epsilon.numer() == 0 {
        return Err(Error::InvalidParameter("epsilon must be positive".into()));
    }
    let q = (Ratio::from_integer(3) / epsilon).ceil().to_integer();
    usize::try_from(q).map_err(|_| Error::InvalidParameter("epsilon is too small".into()))
}

/// Two colors: returns `k` and a coloring with `k` edges of each color, where
/// the optimum is at most `(4 + epsilon)·k`.
pub fn approx_two(g: &Graph, epsilon: Ratio<u64>, budget: u64) -> Result<Approx> {
    let p0 = p0(epsilon)?;
    without_isolated(g, 2, |core| approx_two_core(core, p0, budget))
}

fn approx_two_core(g: &Graph, p0: usize, budget: u64) -> Result<Approx> {
    let p = g.m() / 8;
    if p < p0 {
        return exact_approx(g, 2, budget);
    }
    if is_reduced(g, 2, p) {
        let (coloring, _) = color2_dense(g, p)?;
        return Ok(Approx { k: p, coloring, branch: ApproxBranch::TwoColor, exact: false, reduced: None });
    }
    let (red, trace) = reduce(&Instance { graph: g.clone(), c: 2, k: p });
    let h = &red.graph;
    let reduced = Some(red.clone());
    if red.c == 2 {
        let (col, _) = color2_dense(h, p)?;
        let coloring = trace.lift(h, &col)?;
        return Ok(Approx { k: p, coloring, branch: ApproxBranch::TwoColor, exact: false, reduced });
    }
    let single = Coloring::uniform(h.n(), 0);
    if h.m() >= p {
        let coloring = trace.lift(h, &single)?;
        return Ok(Approx { k: p, coloring, branch: ApproxBranch::Lifted, exact: false, reduced });
    }
    let coloring = trace.lift_at(h, &single, h.m())?;
    Ok(Approx { k: h.m(), coloring, branch: ApproxBranch::ReducedExact, exact: true, reduced })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{decide_exact, max_k_exact, DEFAULT_BUDGET};
    use crate::generate::{generate, gnm, Family};

    fn inst(g: Graph, c: usize, k: usize) -> Instance {
        Instance::new(g, c, k).unwrap()
    }

    fn c4() -> Graph {
        generate(&Family::Cycle { n: 4 }, 0).unwrap()
    }

    #[test]
    fn matching_uses_star_cover() {
        let g = generate(&Family::Matching { q: 4 }, 0).unwrap();
        match kernelize(&inst(g, 2, 2)).unwrap() {
            Outcome::Yes { provenance, .. } => assert_eq!(provenance, Provenance::StarCover),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn two_stars_reduce_to_one_color() {
        let g = generate(&Family::StarForest { sizes: vec![3, 3] }, 0).unwrap();
        let out = kernelize(&inst(g, 2, 3)).unwrap();
        assert!(matches!(out, Outcome::Yes { provenance: Provenance::SingleColor, .. }), "{out:?}");
    }

    #[test]
    fn c4_is_its_own_kernel() {
        let i = inst(c4(), 2, 2);
        match kernelize(&i).unwrap() {
            Outcome::Kernel { kernel, trace } => {
                assert_eq!(kernel, i);
                assert!(trace.is_empty());
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(decide(&i, DEFAULT_BUDGET).unwrap(), Outcome::No { reason: NoReason::Exhausted });
        assert!(matches!(decide(&inst(c4(), 2, 1), DEFAULT_BUDGET).unwrap(), Outcome::Yes { .. }));
        assert!(matches!(decide(&inst(c4(), 3, 0), DEFAULT_BUDGET).unwrap(), Outcome::Yes { .. }));
    }

    #[test]
    fn decide_matches_exact_on_small_graphs() {
        for seed in 0..300u64 {
            let n = 4 + (seed % 6) as usize;
            let m = (seed as usize * 5) % (n * (n - 1) / 2 + 1);
            let g = gnm(n, m, seed).unwrap();
            for c in 2..=3 {
                for k in 0..=3 {
                    let i = inst(g.clone(), c, k);
                    let fast = decide(&i, DEFAULT_BUDGET).unwrap();
                    let slow = decide_exact(&i, DEFAULT_BUDGET);
                    assert_eq!(fast.verdict() == "yes", matches!(slow, ExactOutcome::Yes(_)), "seed {seed} c {c} k {k}");
                }
            }
        }
    }

    #[test]
    fn kernels_respect_size_bounds() {
        for seed in 0..300u64 {
            let n = 10 + (seed % 30) as usize;
            let g = gnm(n, (n * (1 + seed as usize % 4)).min(n * (n - 1) / 2), seed).unwrap();
            for (c, k) in [(2, 2), (2, 3), (3, 2), (3, 4)] {
                if let Outcome::Kernel { kernel, trace } = kernelize(&inst(g.clone(), c, k)).unwrap() {
                    assert!(kernel.graph.n() < 2 * kernel.c * k);
                    if kernel.c == 2 {
                        assert!(kernel.graph.m() < 8 * k);
                    }
                    assert_eq!(trace.replay(&inst(g.clone(), c, k)).unwrap(), kernel);
                }
            }
        }
    }

    #[test]
    fn batch_keeps_order() {
        let insts: Vec<Instance> = (0..20).map(|k| inst(c4(), 2, k % 3)).collect();
        let seq = decide_batch(&insts, DEFAULT_BUDGET, Execution::Sequential);
        let par = decide_batch(&insts, DEFAULT_BUDGET, Execution::Parallel);
        assert_eq!(seq, par);
        assert_eq!(seq[2].as_ref().unwrap().verdict(), "no");
    }

    #[test]
    fn outcome_json_shape() {
        let i = inst(c4(), 2, 1);
        let v = decide(&i, DEFAULT_BUDGET).unwrap().to_json(&i);
        assert_eq!(v["verdict"], "yes");
        assert_eq!(v["coloring"].as_array().unwrap().len(), 4);
        let i = inst(c4(), 2, 2);
        let v = kernelize(&i).unwrap().to_json(&i);
        assert_eq!(v["verdict"], "kernel");
        assert_eq!(v["kernel"]["graph"]["edges"].as_array().unwrap().len(), 4);
    }

    #[test]
    fn approx_general_constants() {
        let g = generate(&Family::Path { n: 5 }, 0).unwrap();
        let a = approx_general(&g, 1, DEFAULT_BUDGET).unwrap();
        assert_eq!((a.k, a.branch), (4, ApproxBranch::SingleColor));
        assert_eq!(approx_ratio(2), Some(52));
    }

    #[test]
    fn approx_general_matching() {
        let g = generate(&Family::Matching { q: 40 }, 0).unwrap();
        let a = approx_general(&g, 2, DEFAULT_BUDGET).unwrap();
        assert_eq!((a.k, a.branch), (20, ApproxBranch::Exact));
    }

    #[test]
    fn approx_general_large_instances() {
        for seed in 0..40u64 {
            let n = 60 + (seed % 40) as usize;
            let g = gnm(n, 3 * n, seed).unwrap();
            for c in 2..=3 {
                let a = approx_general(&g, c, DEFAULT_BUDGET).unwrap();
                assert!(verify_coloring(&inst(g.clone(), c, a.k), &a.coloring).unwrap().valid);
                assert!(a.k >= 1);
            }
        }
    }

    #[test]
    fn approx_general_reduced_branches() {
        // big stars force reduction, a small core stays behind
        let mut seen = std::collections::HashSet::new();
        for leaves in [60, 120, 250] {
            for extra in 0..6usize {
                let stars = generate(&Family::StarForest { sizes: vec![leaves, leaves / 2] }, 0).unwrap();
                let g = stars.disjoint_union(&generate(&Family::Path { n: 2 + extra }, 0).unwrap());
                let a = approx_general(&g, 3, DEFAULT_BUDGET).unwrap();
                assert!(verify_coloring(&inst(g.clone(), 3, a.k), &a.coloring).unwrap().valid);
                if a.exact {
                    assert_eq!(a.k, max_k_exact(&g, 3, DEFAULT_BUDGET).unwrap().0);
                }
                seen.insert(a.branch);
            }
        }
        assert!(seen.contains(&ApproxBranch::Lifted) || seen.contains(&ApproxBranch::ReducedExact), "{seen:?}");
    }

    #[test]
    fn epsilon_threshold() {
        assert_eq!(p0(Ratio::from_integer(1)).unwrap(), 3);
        assert_eq!(p0(Ratio::new(1, 2)).unwrap(), 6);
        assert_eq!(p0(Ratio::new(2, 1)).unwrap(), 2);
        assert!(p0(Ratio::new(0, 1)).is_err());
    }

    #[test]
    fn approx_two_small_is_exact() {
        let g = generate(&Family::Clique { n: 7 }, 0).unwrap();
        assert_eq!(g.m(), 21);
        let a = approx_two(&g, Ratio::from_integer(1), DEFAULT_BUDGET).unwrap();
        assert_eq!(a.branch, ApproxBranch::Exact);
        assert_eq!(a.k, max_k_exact(&g, 2, DEFAULT_BUDGET).unwrap().0);
    }

    #[test]
    fn approx_two_reduced_dense() {
        let g = generate(&Family::Cycle { n: 80 }, 0).unwrap();
        let a = approx_two(&g, Ratio::from_integer(1), DEFAULT_BUDGET).unwrap();
        assert_eq!((a.k, a.branch), (10, ApproxBranch::TwoColor));
    }

    #[test]
    fn approx_two_big_star_gadget() {
        // K_{1,40} plus a two-edge path: the star is an obstacle and two edges remain
        let star = generate(&Family::StarForest { sizes: vec![40] }, 0).unwrap();
        let g = star.disjoint_union(&generate(&Family::Path { n: 3 }, 0).unwrap());
        let a = approx_two(&g, Ratio::from_integer(1), DEFAULT_BUDGET).unwrap();
        assert_eq!((a.k, a.branch, a.exact), (2, ApproxBranch::ReducedExact, true));
        assert_eq!(max_k_exact(&g, 2, DEFAULT_BUDGET).unwrap().0, 2);
    }
}

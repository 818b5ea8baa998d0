//! Colorings for graphs that are dense enough to be yes-instances outright:
//! forests of small stars, bipartite graphs above `b`, arbitrary graphs above `f`.
//!
//! Every constructor checks its own output and reports [`Error::Internal`]
//! instead of returning an invalid coloring.

use crate::bounds::{bipartite, general, next_pow2};
use crate::error::{Error, Result};
use crate::graph::{verify_coloring, Coloring, Graph, Instance};

fn below(edges: usize, bound: u128) -> bool {
    (edges as u128) < bound
}

fn colors_for(i: u32) -> Result<usize> {
    if i > 32 {
        return Err(Error::InvalidParameter(format!("2^{i} colors is out of range")));
    }
    Ok(1 << i)
}

fn certified(g: &Graph, c: usize, k: usize, colors: Vec<usize>, what: &str) -> Result<Coloring> {
    let col = Coloring::new(colors);
    let inst = Instance { graph: g.clone(), c, k };
    match verify_coloring(&inst, &col) {
        Ok(v) if v.valid => Ok(col),
        Ok(v) => Err(Error::Internal(format!("{what} produced an invalid coloring (counts {:?}, k = {k})", v.counts))),
        Err(e) => Err(Error::Internal(format!("{what} produced a malformed coloring: {e}"))),
    }
}

/// Colors a forest of stars, each with between 1 and `2k − 1` edges, on at
/// least `2ck` vertices.
///
/// Each color takes one component with `k..2k` edges if there is one (the
/// smallest), otherwise the largest remaining components until they reach `k`
/// edges. Whatever is left joins color 0.
pub fn color_star_graph(g: &Graph, c: usize, k: usize) -> Result<Coloring> {
    if k == 0 || c == 0 {
        return Err(Error::Precondition("star-graph coloring needs c >= 1 and k >= 1".into()));
    }
    if g.n() < 2 * c * k {
        return Err(Error::Precondition(format!("{} vertices, need at least 2ck = {}", g.n(), 2 * c * k)));
    }
    let mut comps = g.components();
    for comp in &comps {
        let e = comp.edges;
        let is_star = e + 1 == comp.vertices.len() && comp.vertices.iter().any(|&v| g.degree(v) == e);
        if !is_star || e == 0 || e >= 2 * k {
            return Err(Error::Precondition(format!(
                "component of vertex {} is not a star with 1..{} edges",
                g.id(comp.vertices[0]) + 1,
                2 * k
            )));
        }
    }
    let mut colors = vec![0; g.n()];
    for color in 0..c {
        let pick: Vec<usize> = match comps.iter().enumerate().filter(|(_, s)| s.edges >= k).min_by_key(|(_, s)| s.edges) {
            Some((i, _)) => vec![i],
            None => {
                let mut order: Vec<usize> = (0..comps.len()).collect();
                order.sort_by_key(|&i| std::cmp::Reverse(comps[i].edges));
                let mut sum = 0;
                let prefix: Vec<usize> = order
                    .into_iter()
                    .take_while(|&i| {
                        let more = sum < k;
                        sum += comps[i].edges;
                        more
                    })
                    .collect();
                if prefix.iter().map(|&i| comps[i].edges).sum::<usize>() < k {
                    return Err(Error::Internal(format!("star components ran out at color {color}")));
                }
                prefix
            }
        };
        for &i in &pick {
            for &v in &comps[i].vertices {
                colors[v] = color;
            }
        }
        let mut taken = vec![false; comps.len()];
        for i in pick {
            taken[i] = true;
        }
        let mut idx = 0;
        comps.retain(|_| {
            idx += 1;
            !taken[idx - 1]
        });
    }
    certified(g, c, k, colors, "star-graph coloring")
}

/// `2^i`-coloring of a bipartite graph with sides `side_a` / its complement
/// and at least `b(2^i, k, n)` edges.
pub fn color_dense_bipartite(g: &Graph, side_a: &[bool], i: u32, k: usize) -> Result<Coloring> {
    let c = colors_for(i)?;
    if side_a.len() != g.n() {
        return Err(Error::InvalidParameter("side mask length differs from the vertex count".into()));
    }
    if let Some((u, v)) = g.edges().find(|&(u, v)| side_a[u] == side_a[v]) {
        return Err(Error::Precondition(format!("edge ({}, {}) does not cross the bipartition", g.id(u) + 1, g.id(v) + 1)));
    }
    if below(g.m(), bipartite(c, k, g.n())) {
        return Err(Error::Precondition(format!("{} edges, need b({c}, {k}, {}) = {}", g.m(), g.n(), bipartite(c, k, g.n()))));
    }
    let mut colors = vec![0; g.n()];
    if k > 0 {
        let all: Vec<usize> = (0..g.n()).collect();
        Splitter { g, side_a, k }.bipartite(&all, c, 0, &mut colors)?;
    }
    certified(g, c, k, colors, "bipartite coloring")
}

/// `2^i`-coloring of a graph with at least `f(2^i, k, n)` edges.
pub fn color_dense(g: &Graph, i: u32, k: usize) -> Result<Coloring> {
    let c = colors_for(i)?;
    if below(g.m(), general(c, k, g.n())) {
        return Err(Error::Precondition(format!("{} edges, need f({c}, {k}, {}) = {}", g.m(), g.n(), general(c, k, g.n()))));
    }
    let mut colors = vec![0; g.n()];
    if k > 0 {
        let all: Vec<usize> = (0..g.n()).collect();
        let side_a = vec![false; g.n()];
        Splitter { g, side_a: &side_a, k }.general(&all, c, 0, &mut colors)?;
    }
    certified(g, c, k, colors, "dense coloring")
}

/// `c`-coloring of a graph with at least `f(c', k, n)` edges, `c'` the next
/// power of two: color with `c'` colors and fold the surplus classes into 0.
pub fn color_dense_c(g: &Graph, c: usize, k: usize) -> Result<Coloring> {
    if c == 0 {
        return Err(Error::InvalidParameter("c must be at least 1".into()));
    }
    let wide = next_pow2(c);
    let col = color_dense(g, wide.trailing_zeros(), k)?;
    let colors = col.into_vec().into_iter().map(|x| if x >= c { 0 } else { x }).collect();
    certified(g, c, k, colors, "folded dense coloring")
}

/// Recursive splitting on subsets of one host graph. Edge counts between sets
/// only see edges from the `side_a` part to the rest, so the bipartite
/// procedure ignores same-side edges of a non-bipartite host.
struct Splitter<'a> {
    g: &'a Graph,
    side_a: &'a [bool],
    k: usize,
}

impl Splitter<'_> {
    fn mask(&self, set: &[usize]) -> Vec<bool> {
        let mut m = vec![false; self.g.n()];
        for &v in set {
            m[v] = true;
        }
        m
    }

    fn degree_into(&self, v: usize, mask: &[bool]) -> usize {
        self.g.neighbors(v).iter().filter(|&&w| mask[w]).count()
    }

    /// `verts` with its `side_a` part and at least `b(c, k, |verts|)` crossing
    /// edges; assigns colors `offset..offset + c`.
    fn bipartite(&self, verts: &[usize], c: usize, offset: usize, out: &mut [usize]) -> Result<()> {
        if c == 1 {
            for &v in verts {
                out[v] = offset;
            }
            return Ok(());
        }
        let h = c / 2;
        let k = self.k;
        let a: Vec<usize> = verts.iter().copied().filter(|&v| self.side_a[v]).collect();
        let mut b1: Vec<usize> = verts.iter().copied().filter(|&v| !self.side_a[v]).collect();
        let a_mask = self.mask(&a);

        let mut b2 = Vec::new();
        let mut e_a_b2 = 0;
        loop {
            let s = b2.len() + 1;
            let bound = bipartite(h, k, a.len() + s) + bipartite(h, k, s);
            let Some(pos) = b1.iter().position(|&u| below(e_a_b2 + self.degree_into(u, &a_mask), bound)) else { break };
            let u = b1.remove(pos);
            e_a_b2 += self.degree_into(u, &a_mask);
            b2.push(u);
        }

        let b1_mask = self.mask(&b1);
        let mut a1 = a.clone();
        let mut a2 = Vec::new();
        let mut e11: usize = a1.iter().map(|&v| self.degree_into(v, &b1_mask)).sum();
        let mut e21 = 0;
        while !a1.is_empty()
            && !below(e11, bipartite(h, k, a1.len() + b1.len()) + a1.len() as u128)
            && below(e21, bipartite(h, k, a2.len() + b1.len()) + a2.len() as u128)
        {
            let v = a1.remove(0);
            let d = self.degree_into(v, &b1_mask);
            e11 -= d;
            e21 += d;
            a2.push(v);
        }
        if below(e11, bipartite(h, k, a1.len() + b1.len()) + a1.len() as u128) {
            return Err(Error::Internal(format!("bipartite split at {c} colors hit the impossible case")));
        }
        let Some(&u) = b1.first() else {
            return Err(Error::Internal("bipartite split left no vertex to move".into()));
        };
        let mut b2u = b2.clone();
        b2u.push(u);
        let b2u_mask = self.mask(&b2u);
        let e_a2_b2u: usize = a2.iter().map(|&v| self.degree_into(v, &b2u_mask)).sum();
        let rest: Vec<usize> = b1[1..].to_vec();
        let (x, y) = if !below(e_a2_b2u, bipartite(h, k, a2.len() + b2u.len())) {
            ([a1, rest].concat(), [a2, b2u].concat())
        } else {
            ([a2, rest].concat(), [a1, b2u].concat())
        };
        for (set, off) in [(&x, offset), (&y, offset + h)] {
            let crossing = self.crossing(set);
            if below(crossing, bipartite(h, k, set.len())) {
                return Err(Error::Internal(format!("bipartite half has {crossing} edges, below b({h}, {k}, {})", set.len())));
            }
            self.bipartite(set, h, off, out)?;
        }
        Ok(())
    }

    fn crossing(&self, set: &[usize]) -> usize {
        let m = self.mask(set);
        set.iter().filter(|&&v| self.side_a[v]).map(|&v| self.g.neighbors(v).iter().filter(|&&w| m[w] && !self.side_a[w]).count()).sum()
    }

    /// `verts` spanning at least `f(c, k, |verts|)` edges; assigns colors
    /// `offset..offset + c`.
    fn general(&self, verts: &[usize], c: usize, offset: usize, out: &mut [usize]) -> Result<()> {
        if c == 1 {
            for &v in verts {
                out[v] = offset;
            }
            return Ok(());
        }
        let h = c / 2;
        let k = self.k;
        let mut in_a = vec![false; self.g.n()];
        let mut a = Vec::new();
        let mut e_a = 0;
        for &v in verts {
            if !below(e_a, general(h, k, a.len())) {
                break;
            }
            e_a += self.degree_into(v, &in_a);
            in_a[v] = true;
            a.push(v);
        }
        if below(e_a, general(h, k, a.len())) {
            return Err(Error::Internal(format!("no prefix reaches f({h}, {k}, .)")));
        }
        let b: Vec<usize> = verts.iter().copied().filter(|&v| !in_a[v]).collect();
        let e_b = self.g.edges_within(&self.mask(&b));
        if !below(e_b, general(h, k, b.len())) {
            self.general(&a, h, offset, out)?;
            return self.general(&b, h, offset + h, out);
        }
        let splitter = Splitter { g: self.g, side_a: &in_a, k };
        let crossing = splitter.crossing(verts);
        if below(crossing, bipartite(c, k, verts.len())) {
            return Err(Error::Internal(format!("general split at {c} colors hit the impossible case")));
        }
        splitter.bipartite(verts, c, offset, out)
    }
}

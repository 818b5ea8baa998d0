//! Seeded instance generators.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    /// Erdős–Rényi `G(n, p)`.
    Gnp { n: usize, p: f64 },
    /// `q` disjoint edges.
    Matching { q: usize },
    /// Disjoint stars `K_{1,s}`, one per entry.
    StarForest { sizes: Vec<usize> },
    Clique { n: usize },
    Path { n: usize },
    Cycle { n: usize },
    CompleteBipartite { a: usize, b: usize },
    /// Random bipartite graph with sides `0..a` and `a..a+b`.
    BipartiteGnp { a: usize, b: usize, p: f64 },
    /// `base` followed by `count` disjoint copies of `K_{1,size}`.
    PadWithStars { base: Graph, count: usize, size: usize },
}

fn check_p(p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!("edge probability {p} is not in [0, 1]")));
    }
    Ok(())
}

fn check_star(size: usize) -> Result<()> {
    if size == 0 {
        return Err(Error::InvalidParameter("a star needs at least one leaf".into()));
    }
    Ok(())
}

/// Deterministic graph for a fixed `(family, seed)`; only the random
/// families consume the seed.
pub fn generate(family: &Family, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let graph = match family {
        Family::Gnp { n, p } => {
            check_p(*p)?;
            let mut edges = Vec::new();
            for u in 0..*n {
                for v in u + 1..*n {
                    if rng.gen::<f64>() < *p {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(*n, edges)?
        }
        Family::Matching { q } => Graph::from_edges(2 * q, (0..*q).map(|i| (2 * i, 2 * i + 1)))?,
        Family::StarForest { sizes } => {
            let mut edges = Vec::new();
            let mut next = 0;
            for &s in sizes {
                check_star(s)?;
                edges.extend((1..=s).map(|leaf| (next, next + leaf)));
                next += s + 1;
            }
            Graph::from_edges(next, edges)?
        }
        Family::Clique { n } => Graph::from_edges(*n, (0..*n).flat_map(|u| (u + 1..*n).map(move |v| (u, v))))?,
        Family::Path { n } => Graph::from_edges(*n, (1..*n).map(|v| (v - 1, v)))?,
        Family::Cycle { n } => {
            if *n < 3 {
                return Err(Error::InvalidParameter("a cycle needs at least 3 vertices".into()));
            }
            Graph::from_edges(*n, (0..*n).map(|v| (v, (v + 1) % n)))?
        }
        Family::CompleteBipartite { a, b } => {
            Graph::from_edges(a + b, (0..*a).flat_map(|u| (*a..a + b).map(move |v| (u, v))))?
        }
        Family::BipartiteGnp { a, b, p } => {
            check_p(*p)?;
            let mut edges = Vec::new();
            for u in 0..*a {
                for v in *a..a + b {
                    if rng.gen::<f64>() < *p {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(a + b, edges)?
        }
        Family::PadWithStars { base, count, size } => {
            check_star(*size)?;
            let stars = generate(&Family::StarForest { sizes: vec![*size; *count] }, seed)?;
            base.disjoint_union(&stars)
        }
    };
    Ok(graph)
}

/// Random graph with exactly `m` edges chosen uniformly among all pairs.
pub fn gnm(n: usize, m: usize, seed: u64) -> Result<Graph> {
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    if m > pairs.len() {
        return Err(Error::InvalidParameter(format!("{m} edges do not fit on {n} vertices")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..m {
        let j = rng.gen_range(i..pairs.len());
        pairs.swap(i, j);
    }
    pairs.truncate(m);
    Graph::from_edges(n, pairs)
}

/// Random connected graph on `n` vertices: a random spanning tree plus
/// independent extra edges with probability `p`.
pub fn connected(n: usize, p: f64, seed: u64) -> Result<Graph> {
    check_p(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if !edges.contains(&(u, v)) && rng.gen::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matching_shape() {
        let g = generate(&Family::Matching { q: 4 }, 7).unwrap();
        assert_eq!((g.n(), g.m()), (8, 4));
        assert!(g.components().iter().all(|c| c.edges == 1 && c.vertices.len() == 2));
    }

    #[test]
    fn star_forest_shape() {
        let g = generate(&Family::StarForest { sizes: vec![3, 3] }, 0).unwrap();
        assert_eq!((g.n(), g.m()), (8, 6));
        assert_eq!(g.degree(0), 3);
        assert_eq!(g.degree(4), 3);
        assert_eq!(g.components().len(), 2);
    }

    #[test]
    fn seeded_determinism() {
        let f = Family::Gnp { n: 30, p: 0.3 };
        assert_eq!(generate(&f, 11).unwrap(), generate(&f, 11).unwrap());
        assert_ne!(generate(&f, 11).unwrap(), generate(&f, 12).unwrap());
        assert_eq!(gnm(20, 40, 3).unwrap(), gnm(20, 40, 3).unwrap());
        assert_eq!(gnm(20, 40, 3).unwrap().m(), 40);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(generate(&Family::Gnp { n: 3, p: 1.5 }, 0).is_err());
        assert!(generate(&Family::Gnp { n: 3, p: f64::NAN }, 0).is_err());
        assert!(generate(&Family::StarForest { sizes: vec![2, 0] }, 0).is_err());
        assert!(generate(&Family::Cycle { n: 2 }, 0).is_err());
        assert!(gnm(4, 7, 0).is_err());
    }

    #[test]
    fn padding_appends_stars() {
        let base = generate(&Family::Cycle { n: 4 }, 0).unwrap();
        let g = generate(&Family::PadWithStars { base, count: 2, size: 3 }, 0).unwrap();
        assert_eq!((g.n(), g.m()), (12, 10));
        assert_eq!(g.components().len(), 3);
    }

    #[test]
    fn connected_is_connected() {
        for seed in 0..20 {
            let g = connected(9, 0.2, seed).unwrap();
            assert_eq!(g.components().len(), 1);
        }
    }
}

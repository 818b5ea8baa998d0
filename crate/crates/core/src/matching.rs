//! Bipartite matching (Hopcroft–Karp) and a bounded matching search for
//! general graphs.

use std::collections::VecDeque;

use crate::graph::Graph;

const FREE: usize = usize::MAX;

/// Maximum matching of a bipartite graph given as adjacency lists from the
/// left side into right vertices `0..n_right`. Returns the partner of every
/// left vertex.
pub fn hopcroft_karp(left: &[Vec<usize>], n_right: usize) -> Vec<Option<usize>> {
    let n_left = left.len();
    let mut match_left = vec![FREE; n_left];
    let mut match_right = vec![FREE; n_right];
    let mut dist = vec![0usize; n_left];

    loop {
        // layered BFS from free left vertices
        let mut queue = VecDeque::new();
        for u in 0..n_left {
            if match_left[u] == FREE {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = usize::MAX;
            }
        }
        let mut found = false;
        while let Some(u) = queue.pop_front() {
            for &v in &left[u] {
                let w = match_right[v];
                if w == FREE {
                    found = true;
                } else if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        if !found {
            break;
        }
        let mut progressed = false;
        for u in 0..n_left {
            if match_left[u] == FREE && augment(u, left, &mut match_left, &mut match_right, &mut dist) {
                progressed = true;
            }
        }
        if !progressed {
            break;
        }
    }
    match_left.into_iter().map(|v| (v != FREE).then_some(v)).collect()
}

fn augment(
    u: usize,
    left: &[Vec<usize>],
    match_left: &mut [usize],
    match_right: &mut [usize],
    dist: &mut [usize],
) -> bool {
    for &v in &left[u] {
        let w = match_right[v];
        if w == FREE || (dist[w] == dist[u] + 1 && augment(w, left, match_left, match_right, dist)) {
            match_left[u] = v;
            match_right[v] = u;
            return true;
        }
    }
    dist[u] = usize::MAX;
    false
}

/// Finds `target` pairwise disjoint edges, or `None` if no matching of that size exists.
///
/// A greedy maximal matching either already suffices or its `< 2·target`
/// endpoints form a vertex cover `X`. Every matching then consists of edges
/// inside `X` plus edges between `X` and the independent rest, so we try each
/// matching inside `G[X]` and complete it with a bipartite maximum matching.
pub fn matching_of_size(g: &Graph, target: usize) -> Option<Vec<(usize, usize)>> {
    let mut used = vec![false; g.n()];
    let mut greedy = Vec::new();
    for (u, v) in g.edges() {
        if !used[u] && !used[v] {
            used[u] = true;
            used[v] = true;
            greedy.push((u, v));
        }
    }
    if greedy.len() >= target {
        greedy.truncate(target);
        return Some(greedy);
    }

    let cover: Vec<usize> = (0..g.n()).filter(|&v| used[v]).collect();
    let in_cover = used;
    let outside: Vec<usize> = (0..g.n()).filter(|&v| !in_cover[v] && g.degree(v) > 0).collect();
    let mut right_index = vec![FREE; g.n()];
    for (i, &v) in outside.iter().enumerate() {
        right_index[v] = i;
    }

    let mut inner = Vec::new();
    let mut taken = vec![false; g.n()];
    let mut search = InnerSearch { g, cover: &cover, in_cover: &in_cover, outside: &outside, right_index: &right_index, target };
    search.run(0, &mut taken, &mut inner)
}

struct InnerSearch<'a> {
    g: &'a Graph,
    cover: &'a [usize],
    in_cover: &'a [bool],
    outside: &'a [usize],
    right_index: &'a [usize],
    target: usize,
}

impl InnerSearch<'_> {
    fn run(&mut self, pos: usize, taken: &mut [bool], inner: &mut Vec<(usize, usize)>) -> Option<Vec<(usize, usize)>> {
        if pos == self.cover.len() {
            return self.complete(taken, inner);
        }
        let x = self.cover[pos];
        if !taken[x] {
            for &y in self.g.neighbors(x) {
                if y > x && self.in_cover[y] && !taken[y] {
                    taken[x] = true;
                    taken[y] = true;
                    inner.push((x, y));
                    let found = self.run(pos + 1, taken, inner);
                    inner.pop();
                    taken[x] = false;
                    taken[y] = false;
                    if found.is_some() {
                        return found;
                    }
                }
            }
        }
        self.run(pos + 1, taken, inner)
    }

    fn complete(&self, taken: &[bool], inner: &[(usize, usize)]) -> Option<Vec<(usize, usize)>> {
        let free: Vec<usize> = self.cover.iter().copied().filter(|&x| !taken[x]).collect();
        if inner.len() + free.len() < self.target {
            return None;
        }
        let left: Vec<Vec<usize>> = free
            .iter()
            .map(|&x| self.g.neighbors(x).iter().filter(|&&w| !self.in_cover[w]).map(|&w| self.right_index[w]).collect())
            .collect();
        let partners = hopcroft_karp(&left, self.outside.len());
        let mut result = inner.to_vec();
        for (i, p) in partners.iter().enumerate() {
            if let Some(r) = p {
                let (a, b) = (free[i], self.outside[*r]);
                result.push((a.min(b), a.max(b)));
            }
        }
        if result.len() >= self.target {
            result.truncate(self.target);
            Some(result)
        } else {
            None
        }
    }
}

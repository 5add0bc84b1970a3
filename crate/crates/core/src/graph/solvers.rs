//! Exact solvers for clique, colouring, independence, cover and domination.
//!
//! All of them work on `u128` adjacency bitsets, so instances are limited to
//! [`EXACT_SOLVER_CAP`] vertices. Larger inputs are refused instead of being
//! answered heuristically.

use super::Graph;
use crate::error::{Error, Result};

/// Largest vertex count accepted by the exact solvers.
pub const EXACT_SOLVER_CAP: usize = 128;

type Set = u128;

#[inline]
fn bit(v: usize) -> Set {
    1u128 << v
}

#[inline]
fn count(s: Set) -> usize {
    s.count_ones() as usize
}

/// Iterates the members of a bitset in ascending order.
fn members(mut s: Set) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if s == 0 {
            None
        } else {
            let v = s.trailing_zeros() as usize;
            s &= s - 1;
            Some(v)
        }
    })
}

fn full(n: usize) -> Set {
    if n == 128 {
        u128::MAX
    } else {
        bit(n) - 1
    }
}

fn bit_adjacency(g: &Graph, solver: &'static str) -> Result<Vec<Set>> {
    let n = g.vertex_count();
    if n > EXACT_SOLVER_CAP {
        return Err(Error::TooLarge {
            solver,
            vertices: n,
            cap: EXACT_SOLVER_CAP,
        });
    }
    Ok((0..n)
        .map(|v| g.neighbors(v).iter().fold(0, |s, &w| s | bit(w as usize)))
        .collect())
}

fn complement(adj: &[Set]) -> Vec<Set> {
    let all = full(adj.len());
    adj.iter()
        .enumerate()
        .map(|(v, &s)| all & !s & !bit(v))
        .collect()
}

/// Greedy sequential colouring of `p`, used as the clique bound.
/// Returns vertices with their colour (1-based), colours non-decreasing.
fn colour_bound(adj: &[Set], p: Set, order: &mut Vec<(usize, usize)>) {
    order.clear();
    let mut uncoloured = p;
    let mut colour = 0;
    while uncoloured != 0 {
        colour += 1;
        let mut q = uncoloured;
        while q != 0 {
            let v = q.trailing_zeros() as usize;
            q &= !adj[v] & !bit(v);
            uncoloured &= !bit(v);
            order.push((v, colour));
        }
    }
}

/// Branch and bound maximum clique with a colouring bound.
fn max_clique(adj: &[Set]) -> (usize, Set) {
    fn expand(adj: &[Set], r: Set, mut p: Set, best: &mut (usize, Set)) {
        let mut order = Vec::with_capacity(count(p));
        colour_bound(adj, p, &mut order);
        let size = count(r);
        for &(v, colour) in order.iter().rev() {
            if size + colour <= best.0 {
                return;
            }
            let r2 = r | bit(v);
            let p2 = p & adj[v];
            if p2 == 0 {
                if size + 1 > best.0 {
                    *best = (size + 1, r2);
                }
            } else {
                expand(adj, r2, p2, best);
            }
            p &= !bit(v);
        }
    }
    let mut best = (0, 0);
    if !adj.is_empty() {
        expand(adj, 0, full(adj.len()), &mut best);
    }
    best
}

pub fn maximum_clique_size(g: &Graph) -> Result<usize> {
    let adj = bit_adjacency(g, "clique")?;
    Ok(max_clique(&adj).0)
}

/// Maximum clique order and the number of distinct cliques of that order.
///
/// Bron–Kerbosch with Tomita pivoting; branches that cannot reach the best
/// size seen so far are cut.
pub fn maximum_cliques(g: &Graph) -> Result<(usize, u64)> {
    fn bk(adj: &[Set], r_size: usize, mut p: Set, mut x: Set, best: &mut (usize, u64)) {
        if p == 0 {
            if x == 0 {
                match r_size.cmp(&best.0) {
                    std::cmp::Ordering::Greater => *best = (r_size, 1),
                    std::cmp::Ordering::Equal => best.1 += 1,
                    std::cmp::Ordering::Less => {}
                }
            }
            return;
        }
        if r_size + count(p) < best.0 {
            return;
        }
        let pivot = members(p | x)
            .max_by_key(|&u| count(p & adj[u]))
            .expect("p is non-empty");
        for v in members(p & !adj[pivot]) {
            bk(adj, r_size + 1, p & adj[v], x & adj[v], best);
            p &= !bit(v);
            x |= bit(v);
        }
    }
    let adj = bit_adjacency(g, "clique")?;
    if adj.is_empty() {
        return Ok((0, 0));
    }
    let mut best = (0, 0);
    bk(&adj, 0, full(adj.len()), 0, &mut best);
    Ok(best)
}

pub fn independence_number(g: &Graph) -> Result<usize> {
    let adj = bit_adjacency(g, "independence")?;
    Ok(max_clique(&complement(&adj)).0)
}

/// DSATUR greedy colouring; returns a colour (0-based) per vertex.
pub fn greedy_coloring(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut colour: Vec<Option<usize>> = vec![None; n];
    let mut seen: Vec<Vec<bool>> = vec![Vec::new(); n];
    let mut saturation = vec![0usize; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| colour[v].is_none())
            .max_by_key(|&v| (saturation[v], g.degree(v), std::cmp::Reverse(v)))
            .expect("an uncoloured vertex remains");
        let c = (0..)
            .find(|&c| !seen[v].get(c).copied().unwrap_or(false))
            .unwrap();
        colour[v] = Some(c);
        for &w in g.neighbors(v) {
            let w = w as usize;
            let s = &mut seen[w];
            if s.len() <= c {
                s.resize(c + 1, false);
            }
            if !s[c] {
                s[c] = true;
                saturation[w] += 1;
            }
        }
    }
    colour.into_iter().map(Option::unwrap).collect()
}

/// Exact chromatic number: DSATUR branch and bound, seeded with a maximum
/// clique (lower bound, precoloured) and the greedy colouring (upper bound).
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    let adj = bit_adjacency(g, "chromatic")?;
    let n = adj.len();
    if n == 0 {
        return Ok(0);
    }
    let greedy = greedy_coloring(g).into_iter().max().map_or(0, |c| c + 1);
    let (lower, clique) = max_clique(&adj);
    if lower == greedy {
        return Ok(greedy);
    }

    struct Search<'a> {
        adj: &'a [Set],
        classes: Vec<Set>,
        coloured: Set,
        best: usize,
        lower: usize,
    }

    impl Search<'_> {
        fn run(&mut self) {
            let n = self.adj.len();
            if count(self.coloured) == n {
                self.best = self.classes.len();
                return;
            }
            let used = self.classes.len();
            let mut pick = None;
            let mut key = (0, 0);
            for v in members(full(n) & !self.coloured) {
                let sat = self
                    .classes
                    .iter()
                    .filter(|&&c| c & self.adj[v] != 0)
                    .count();
                let deg = count(self.adj[v] & !self.coloured);
                if pick.is_none() || (sat, deg) > key {
                    pick = Some(v);
                    key = (sat, deg);
                }
            }
            let v = pick.expect("uncoloured vertex");
            for c in 0..used {
                if self.classes[c] & self.adj[v] == 0 {
                    self.classes[c] |= bit(v);
                    self.coloured |= bit(v);
                    self.run();
                    self.classes[c] &= !bit(v);
                    self.coloured &= !bit(v);
                    if self.best == self.lower {
                        return;
                    }
                }
            }
            if used + 1 < self.best {
                self.classes.push(bit(v));
                self.coloured |= bit(v);
                self.run();
                self.classes.pop();
                self.coloured &= !bit(v);
            }
        }
    }

    let mut search = Search {
        adj: &adj,
        classes: members(clique).map(bit).collect(),
        coloured: clique,
        best: greedy,
        lower,
    };
    search.run();
    Ok(search.best)
}

/// Minimum vertex cover by branching on a maximum-degree vertex: either it is
/// in the cover or all of its neighbours are. Independent of the clique code.
pub fn vertex_cover_number(g: &Graph) -> Result<usize> {
    fn search(adj: &[Set], mut alive: Set, mut size: usize, best: &mut usize) {
        // degree 0 and degree 1 reductions
        loop {
            let mut changed = false;
            for v in members(alive) {
                if alive & bit(v) == 0 {
                    continue;
                }
                let nb = adj[v] & alive;
                match count(nb) {
                    0 => {
                        alive &= !bit(v);
                        changed = true;
                    }
                    1 => {
                        alive &= !(bit(v) | nb);
                        size += 1;
                        changed = true;
                    }
                    _ => {}
                }
            }
            if !changed {
                break;
            }
        }
        if size >= *best {
            return;
        }
        if alive == 0 {
            *best = size;
            return;
        }
        let (mut v, mut max_deg, mut twice_edges) = (0, 0, 0);
        for u in members(alive) {
            let d = count(adj[u] & alive);
            twice_edges += d;
            if d > max_deg {
                (v, max_deg) = (u, d);
            }
        }
        let edges = twice_edges / 2;
        if size + edges.div_ceil(max_deg) >= *best {
            return;
        }
        let nb = adj[v] & alive;
        search(adj, alive & !bit(v), size + 1, best);
        search(adj, alive & !(nb | bit(v)), size + count(nb), best);
    }
    let adj = bit_adjacency(g, "vertex cover")?;
    if g.edge_count() == 0 {
        return Ok(0);
    }
    // any n-1 vertices cover, so the search always improves on n
    let mut best = adj.len();
    search(&adj, full(adj.len()), 0, &mut best);
    Ok(best)
}

/// Exact domination number by branching on the closed neighbourhood of the
/// undominated vertex with the fewest dominators.
pub fn domination_number(g: &Graph) -> Result<usize> {
    fn search(closed: &[Set], undominated: Set, chosen: usize, best: &mut usize) {
        if undominated == 0 {
            *best = (*best).min(chosen);
            return;
        }
        if chosen + 1 >= *best {
            return;
        }
        let max_cover = closed
            .iter()
            .map(|&c| count(c & undominated))
            .max()
            .unwrap_or(0);
        if chosen + count(undominated).div_ceil(max_cover) >= *best {
            return;
        }
        let u = members(undominated)
            .min_by_key(|&u| count(closed[u]))
            .expect("non-empty");
        let mut options: Vec<usize> = members(closed[u]).collect();
        options.sort_by_key(|&w| std::cmp::Reverse(count(closed[w] & undominated)));
        for w in options {
            search(closed, undominated & !closed[w], chosen + 1, best);
        }
    }
    let adj = bit_adjacency(g, "domination")?;
    let n = adj.len();
    if n == 0 {
        return Err(Error::EmptyGraph("domination number"));
    }
    let closed: Vec<Set> = adj.iter().enumerate().map(|(v, &s)| s | bit(v)).collect();

    // greedy upper bound
    let mut undominated = full(n);
    let mut greedy = 0;
    while undominated != 0 {
        let w = (0..n)
            .max_by_key(|&w| count(closed[w] & undominated))
            .expect("non-empty");
        undominated &= !closed[w];
        greedy += 1;
    }
    let mut best = greedy;
    search(&closed, full(n), 0, &mut best);
    Ok(best)
}

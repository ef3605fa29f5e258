//! Maximum matchings via augmenting paths with blossom contraction, and
//! an exhaustive Tutte-condition oracle for small graphs.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Partial involution pairing matched vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    mate: Vec<Option<usize>>,
}

impl Matching {
    pub fn mate(&self, v: usize) -> Option<usize> {
        self.mate[v]
    }

    /// Number of matched edges.
    pub fn size(&self) -> usize {
        self.mate.iter().flatten().count() / 2
    }

    pub fn is_perfect(&self) -> bool {
        self.mate.iter().all(|m| m.is_some())
    }

    /// Matched edges as (u, v) with u < v, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.mate
            .iter()
            .enumerate()
            .filter_map(|(u, m)| m.filter(|&v| u < v).map(|v| (u, v)))
            .collect()
    }
}

/// Maximum-cardinality matching by the blossom contraction algorithm.
/// Vertices are tried as augmenting roots in ascending order, so the
/// returned matching is deterministic.
pub fn max_matching(g: &Graph) -> Matching {
    let n = g.n();
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).iter().collect()).collect();
    let mut mate: Vec<Option<usize>> = vec![None; n];

    // greedy initialization shrinks the number of augmenting searches
    for u in 0..n {
        if mate[u].is_none() {
            if let Some(&v) = adj[u].iter().find(|&&v| mate[v].is_none()) {
                mate[u] = Some(v);
                mate[v] = Some(u);
            }
        }
    }

    let mut parent = vec![usize::MAX; n];
    let mut base = vec![0usize; n];
    let mut in_queue = vec![false; n];
    let mut in_blossom = vec![false; n];

    for root in 0..n {
        if mate[root].is_some() {
            continue;
        }
        // BFS forest from this exposed root
        for v in 0..n {
            parent[v] = usize::MAX;
            base[v] = v;
            in_queue[v] = false;
        }
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(root);
        in_queue[root] = true;
        let mut augmented = false;

        'bfs: while let Some(v) = queue.pop_front() {
            for &to in &adj[v] {
                if base[v] == base[to] || mate[v] == Some(to) {
                    continue;
                }
                if to == root || mate[to].is_some_and(|m| parent[m] != usize::MAX) {
                    // odd cycle: contract the blossom
                    let cur_base = lca(&mate, &parent, &base, v, to);
                    in_blossom.iter_mut().for_each(|b| *b = false);
                    mark_path(&mate, &mut parent, &base, &mut in_blossom, v, cur_base, to);
                    mark_path(&mate, &mut parent, &base, &mut in_blossom, to, cur_base, v);
                    for i in 0..n {
                        if in_blossom[base[i]] {
                            base[i] = cur_base;
                            if !in_queue[i] {
                                in_queue[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if parent[to] == usize::MAX {
                    parent[to] = v;
                    match mate[to] {
                        None => {
                            // augmenting path found: flip along parents
                            let mut u = to;
                            while u != usize::MAX {
                                let pv = parent[u];
                                let next = mate[pv];
                                mate[u] = Some(pv);
                                mate[pv] = Some(u);
                                u = next.unwrap_or(usize::MAX);
                            }
                            augmented = true;
                            break 'bfs;
                        }
                        Some(m) => {
                            if !in_queue[m] {
                                in_queue[m] = true;
                                queue.push_back(m);
                            }
                        }
                    }
                }
            }
        }
        let _ = augmented;
    }
    Matching { mate }
}

fn lca(mate: &[Option<usize>], parent: &[usize], base: &[usize], mut a: usize, mut b: usize) -> usize {
    let mut used = vec![false; base.len()];
    loop {
        a = base[a];
        used[a] = true;
        match mate[a] {
            Some(m) if parent[m] != usize::MAX => a = parent[m],
            _ => break,
        }
    }
    loop {
        b = base[b];
        if used[b] {
            return b;
        }
        b = parent[mate[b].expect("non-root on alternating path is matched")];
    }
}

fn mark_path(
    mate: &[Option<usize>],
    parent: &mut [usize],
    base: &[usize],
    in_blossom: &mut [bool],
    mut v: usize,
    cur_base: usize,
    mut child: usize,
) {
    while base[v] != cur_base {
        let m = mate[v].expect("blossom interior vertex is matched");
        in_blossom[base[v]] = true;
        in_blossom[base[m]] = true;
        parent[v] = child;
        child = m;
        v = parent[m];
    }
}

/// True when a maximum matching covers every vertex.
pub fn has_perfect_matching(g: &Graph) -> bool {
    g.n().is_multiple_of(2) && max_matching(g).is_perfect()
}

/// A set S violating Tutte's condition: o(G - S) > |S|.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TutteWitness {
    pub s: VertexSet,
    pub odd_count: usize,
}

pub const TUTTE_SCAN_CAP: usize = 24;

/// Exhaustive scan over all 2^n subsets; returns the violating S with the
/// smallest bitmask value, or None when Tutte's condition holds
/// everywhere. Hard-capped at 24 vertices.
pub fn tutte_witness(g: &Graph) -> Result<Option<TutteWitness>> {
    let n = g.n();
    if n > TUTTE_SCAN_CAP {
        return Err(Error::Capacity { what: "Tutte subset scan", n, cap: TUTTE_SCAN_CAP });
    }
    let adj: Vec<u64> = (0..n).map(|v| g.adj_mask(v).unwrap()).collect();
    let full: u64 = if n == 64 { !0 } else { (1u64 << n) - 1 };
    for s_mask in 0..(1u64 << n) {
        let odd = odd_components_mask(&adj, full & !s_mask);
        if odd > s_mask.count_ones() as usize {
            return Ok(Some(TutteWitness { s: VertexSet::from_mask(n, s_mask), odd_count: odd }));
        }
    }
    Ok(None)
}

/// Number of odd components of the subgraph induced by `remaining`.
fn odd_components_mask(adj: &[u64], mut remaining: u64) -> usize {
    let mut odd = 0;
    while remaining != 0 {
        let start = remaining.trailing_zeros() as usize;
        let mut comp = 1u64 << start;
        loop {
            let mut grown = comp;
            let mut scan = comp;
            while scan != 0 {
                let v = scan.trailing_zeros() as usize;
                scan &= scan - 1;
                grown |= adj[v] & remaining;
            }
            if grown == comp {
                break;
            }
            comp = grown;
        }
        if comp.count_ones() % 2 == 1 {
            odd += 1;
        }
        remaining &= !comp;
    }
    odd
}

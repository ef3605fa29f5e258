//! Graph isomorphism by backtracking over a degree-refined vertex
//! partition. Built for the small structured graphs the verifier
//! compares; no attempt at nauty-grade canonical labeling.

use crate::graph::Graph;

/// Iteratively refine vertex classes by degree, then by the multiset of
/// neighbor classes, until stable. Returns a class id per vertex;
/// ids are equal across the two graphs only if the signatures match.
fn refine_classes(g: &Graph) -> Vec<u64> {
    let n = g.n();
    let mut class: Vec<u64> = (0..n).map(|v| g.degree(v) as u64).collect();
    for _ in 0..n {
        let mut sig: Vec<(u64, Vec<u64>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<u64> = g.neighbors(v).iter().map(|u| class[u]).collect();
                nb.sort_unstable();
                (class[v], nb)
            })
            .collect();
        let mut sorted: Vec<(u64, Vec<u64>)> = sig.clone();
        sorted.sort();
        sorted.dedup();
        let next: Vec<u64> = sig
            .drain(..)
            .map(|s| sorted.binary_search(&s).unwrap() as u64)
            .collect();
        if next == class {
            break;
        }
        class = next;
    }
    class
}

/// Backtracking isomorphism test. Checks order, size and refined class
/// histograms first, then searches for a class-respecting bijection.
pub fn is_isomorphic(g1: &Graph, g2: &Graph) -> bool {
    if g1.n() != g2.n() || g1.edge_count() != g2.edge_count() {
        return false;
    }
    if g1.degree_sequence() != g2.degree_sequence() {
        return false;
    }
    let n = g1.n();
    if n == 0 {
        return true;
    }
    let c1 = refine_classes(g1);
    let c2 = refine_classes(g2);
    let mut h1 = c1.clone();
    let mut h2 = c2.clone();
    h1.sort_unstable();
    h2.sort_unstable();
    if h1 != h2 {
        return false;
    }

    // map vertices of g1 in order of rarest class first
    let mut order: Vec<usize> = (0..n).collect();
    let count = |cls: &[u64], c: u64| cls.iter().filter(|&&x| x == c).count();
    order.sort_by_key(|&v| (count(&c1, c1[v]), v));

    let mut mapping = vec![usize::MAX; n];
    let mut used = vec![false; n];
    backtrack(g1, g2, &c1, &c2, &order, 0, &mut mapping, &mut used)
}

#[allow(clippy::too_many_arguments)]
fn backtrack(
    g1: &Graph,
    g2: &Graph,
    c1: &[u64],
    c2: &[u64],
    order: &[usize],
    depth: usize,
    mapping: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for w in 0..g2.n() {
        if used[w] || c2[w] != c1[v] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&u| {
            g1.has_edge(v, u) == g2.has_edge(w, mapping[u])
        });
        if !consistent {
            continue;
        }
        mapping[v] = w;
        used[w] = true;
        if backtrack(g1, g2, c1, c2, order, depth + 1, mapping, used) {
            return true;
        }
        used[w] = false;
        mapping[v] = usize::MAX;
    }
    false
}

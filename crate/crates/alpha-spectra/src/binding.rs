//! Exact binding number by exhaustive subset scan.
//!
//! bind(G) = min |N(X)|/|X| over nonempty X with N(X) != V(G). For a
//! loop-free graph any singleton {v} has v outside N({v}), so the minimum
//! always exists. The scan is capped at 24 vertices; with the `parallel`
//! feature the subset range is split across workers and reduced by the
//! (value, bitmask) minimum, which is bit-identical to the sequential scan.

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

pub const BINDING_SCAN_CAP: usize = 24;

/// Exact minimum ratio together with the witness set attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BindingResult {
    pub value: Ratio<u64>,
    pub witness: VertexSet,
}

struct ScanCtx {
    adj: Vec<u64>,
    full: u64,
}

impl ScanCtx {
    fn new(g: &Graph) -> Result<Self> {
        let n = g.n();
        if n == 0 || n > BINDING_SCAN_CAP {
            return Err(Error::Capacity { what: "binding subset scan", n, cap: BINDING_SCAN_CAP });
        }
        Ok(ScanCtx {
            adj: (0..n).map(|v| g.adj_mask(v).unwrap()).collect(),
            full: (1u64 << n) - 1,
        })
    }

    fn neighborhood(&self, mut x: u64) -> u64 {
        let mut nb = 0u64;
        while x != 0 {
            let v = x.trailing_zeros() as usize;
            x &= x - 1;
            nb |= self.adj[v];
        }
        nb
    }

    /// (|N(X)|, |X|, X) for admissible X, None otherwise.
    fn ratio_of(&self, x: u64) -> Option<(u64, u64, u64)> {
        let nb = self.neighborhood(x);
        if nb == self.full {
            return None;
        }
        Some((nb.count_ones() as u64, x.count_ones() as u64, x))
    }
}

// (n1, d1) < (n2, d2) as fractions, exact by cross multiplication
fn frac_lt(n1: u64, d1: u64, n2: u64, d2: u64) -> bool {
    (n1 as u128) * (d2 as u128) < (n2 as u128) * (d1 as u128)
}

fn better(a: (u64, u64, u64), b: (u64, u64, u64)) -> (u64, u64, u64) {
    if frac_lt(b.0, b.1, a.0, a.1) {
        b
    } else if frac_lt(a.0, a.1, b.0, b.1) {
        a
    } else if b.2 < a.2 {
        b
    } else {
        a
    }
}

fn scan_best(ctx: &ScanCtx) -> (u64, u64, u64) {
    let last = ctx.full;
    #[cfg(feature = "parallel")]
    {
        (1..=last)
            .into_par_iter()
            .filter_map(|x| ctx.ratio_of(x))
            .reduce_with(better)
            .expect("singletons are always admissible")
    }
    #[cfg(not(feature = "parallel"))]
    {
        (1..=last)
            .filter_map(|x| ctx.ratio_of(x))
            .reduce(better)
            .expect("singletons are always admissible")
    }
}

/// Sequential reference scan, kept for cross-checking the parallel path.
pub fn binding_number_seq(g: &Graph) -> Result<BindingResult> {
    let ctx = ScanCtx::new(g)?;
    let best = (1..=ctx.full)
        .filter_map(|x| ctx.ratio_of(x))
        .reduce(better)
        .expect("singletons are always admissible");
    Ok(BindingResult { value: Ratio::new(best.0, best.1), witness: VertexSet::from_mask(g.n(), best.2) })
}

/// Exact binding number with the lexicographically smallest minimizer.
pub fn binding_number(g: &Graph) -> Result<BindingResult> {
    let ctx = ScanCtx::new(g)?;
    let best = scan_best(&ctx);
    Ok(BindingResult { value: Ratio::new(best.0, best.1), witness: VertexSet::from_mask(g.n(), best.2) })
}

/// bind(G) >= 1, decided with early exit on the first violating subset.
pub fn is_one_binding(g: &Graph) -> Result<bool> {
    let ctx = ScanCtx::new(g)?;
    let violates = |x: u64| match ctx.ratio_of(x) {
        Some((nb, sz, _)) => nb < sz,
        None => false,
    };
    #[cfg(feature = "parallel")]
    {
        Ok(!(1..=ctx.full).into_par_iter().any(violates))
    }
    #[cfg(not(feature = "parallel"))]
    {
        Ok(!(1..=ctx.full).any(violates))
    }
}

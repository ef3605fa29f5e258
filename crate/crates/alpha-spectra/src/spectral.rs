//! A_alpha matrix assembly, Jacobi eigensolver, equitable-partition
//! quotients, diagonal-similarity symmetrization and interlacing checks.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Dense row-major real matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    n: usize,
    data: Vec<f64>,
}

impl DenseMatrix {
    pub fn zeros(n: usize) -> Self {
        DenseMatrix { n, data: vec![0.0; n * n] }
    }

    pub fn from_rows(n: usize, data: Vec<f64>) -> Self {
        assert_eq!(data.len(), n * n);
        DenseMatrix { n, data }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.n + j] = v;
    }

    pub fn max_asymmetry(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                worst = worst.max((self.get(i, j) - self.get(j, i)).abs());
            }
        }
        worst
    }

    pub fn principal_submatrix(&self, rows: &[usize]) -> DenseMatrix {
        let t = rows.len();
        let mut m = DenseMatrix::zeros(t);
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in rows.iter().enumerate() {
                m.set(a, b, self.get(i, j));
            }
        }
        m
    }
}

/// A_alpha(G) = alpha D(G) + (1 - alpha) A(G).
#[derive(Debug, Clone)]
pub struct AlphaMatrix {
    pub alpha: f64,
    pub matrix: DenseMatrix,
}

pub fn alpha_matrix(g: &Graph, alpha: f64) -> Result<AlphaMatrix> {
    if !(0.0..=1.0).contains(&alpha) {
        return Err(Error::InvalidParameter(format!("alpha = {alpha} outside [0, 1]")));
    }
    let n = g.n();
    let mut m = DenseMatrix::zeros(n);
    for i in 0..n {
        m.set(i, i, alpha * g.degree(i) as f64);
        for j in g.neighbors(i).iter() {
            m.set(i, j, 1.0 - alpha);
        }
    }
    Ok(AlphaMatrix { alpha, matrix: m })
}

const JACOBI_OFFDIAG_TOL: f64 = 1e-12;
const JACOBI_MAX_SWEEPS: usize = 100;

/// All eigenvalues of a symmetric matrix by cyclic Jacobi rotations,
/// sorted descending. Sweeps until the off-diagonal Frobenius norm drops
/// below 1e-12, capped at 100 sweeps.
pub fn jacobi_eigenvalues(m: &DenseMatrix) -> Result<Vec<f64>> {
    let asym = m.max_asymmetry();
    if asym > 1e-12 {
        return Err(Error::NotSymmetric(asym));
    }
    let n = m.order();
    let mut a = m.clone();
    for _ in 0..JACOBI_MAX_SWEEPS {
        let mut off = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                off += 2.0 * a.get(i, j) * a.get(i, j);
            }
        }
        if off.sqrt() < JACOBI_OFFDIAG_TOL {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a.get(p, q);
                if apq == 0.0 {
                    continue;
                }
                let theta = (a.get(q, q) - a.get(p, p)) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (1.0 + theta * theta).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a.get(k, p);
                    let akq = a.get(k, q);
                    a.set(k, p, c * akp - s * akq);
                    a.set(k, q, s * akp + c * akq);
                }
                for k in 0..n {
                    let apk = a.get(p, k);
                    let aqk = a.get(q, k);
                    a.set(p, k, c * apk - s * aqk);
                    a.set(q, k, s * apk + c * aqk);
                }
            }
        }
    }
    let mut eig: Vec<f64> = (0..n).map(|i| a.get(i, i)).collect();
    eig.sort_by(|x, y| y.partial_cmp(x).unwrap());
    Ok(eig)
}

/// Largest eigenvalue of a symmetric matrix.
pub fn spectral_radius(m: &DenseMatrix) -> Result<f64> {
    Ok(jacobi_eigenvalues(m)?.first().copied().unwrap_or(0.0))
}

/// rho_alpha(G): largest eigenvalue of A_alpha(G).
pub fn rho_alpha(g: &Graph, alpha: f64) -> Result<f64> {
    spectral_radius(&alpha_matrix(g, alpha)?.matrix)
}

/// Ordered list of disjoint nonempty cells covering the vertex set.
#[derive(Debug, Clone)]
pub struct Partition {
    cells: Vec<VertexSet>,
}

impl Partition {
    pub fn new(n: usize, cells: Vec<VertexSet>) -> Result<Self> {
        let mut seen = VertexSet::empty(n);
        for c in &cells {
            if c.is_empty() {
                return Err(Error::InvalidPartition("empty cell".into()));
            }
            if c.universe_size() != n {
                return Err(Error::InvalidPartition("cell universe mismatch".into()));
            }
            if !seen.intersect(c).is_empty() {
                return Err(Error::InvalidPartition("cells overlap".into()));
            }
            seen.union_with(c);
        }
        if seen.len() != n {
            return Err(Error::InvalidPartition("cells do not cover the vertex set".into()));
        }
        Ok(Partition { cells })
    }

    /// One cell per vertex.
    pub fn discrete(n: usize) -> Self {
        Partition { cells: (0..n).map(|v| VertexSet::singleton(n, v)).collect() }
    }

    pub fn cells(&self) -> &[VertexSet] {
        &self.cells
    }

    pub fn num_cells(&self) -> usize {
        self.cells.len()
    }
}

/// Quotient of a matrix under a partition: entry (i, j) is the average
/// row sum of block (i, j). Generally non-symmetric.
#[derive(Debug, Clone)]
pub struct QuotientMatrix {
    pub matrix: DenseMatrix,
    pub cell_sizes: Vec<usize>,
}

pub fn quotient(m: &DenseMatrix, p: &Partition) -> Result<QuotientMatrix> {
    let n = m.order();
    if p.cells().iter().map(|c| c.len()).sum::<usize>() != n {
        return Err(Error::InvalidPartition("partition order mismatch".into()));
    }
    let r = p.num_cells();
    let mut q = DenseMatrix::zeros(r);
    for (i, ci) in p.cells().iter().enumerate() {
        for (j, cj) in p.cells().iter().enumerate() {
            let mut total = 0.0;
            for u in ci.iter() {
                for v in cj.iter() {
                    total += m.get(u, v);
                }
            }
            q.set(i, j, total / ci.len() as f64);
        }
    }
    Ok(QuotientMatrix { matrix: q, cell_sizes: p.cells().iter().map(|c| c.len()).collect() })
}

const EQUITABLE_TOL: f64 = 1e-12;

/// True when every block of the partition has constant row sums.
pub fn is_equitable(m: &DenseMatrix, p: &Partition) -> bool {
    for ci in p.cells() {
        for cj in p.cells() {
            let mut sums = ci.iter().map(|u| cj.iter().map(|v| m.get(u, v)).sum::<f64>());
            let first: f64 = match sums.next() {
                Some(s) => s,
                None => continue,
            };
            if sums.any(|s| (s - first).abs() > EQUITABLE_TOL) {
                return false;
            }
        }
    }
    true
}

/// D^{1/2} Q D^{-1/2} with D = diag(cell sizes); shares the eigenvalues
/// of the quotient and is symmetric when the quotient came from a
/// symmetric matrix with an equitable partition.
pub fn symmetrize(q: &QuotientMatrix) -> Result<DenseMatrix> {
    if q.cell_sizes.contains(&0) {
        return Err(Error::InvalidParameter("zero cell size".into()));
    }
    let r = q.matrix.order();
    let root: Vec<f64> = q.cell_sizes.iter().map(|&s| (s as f64).sqrt()).collect();
    let mut out = DenseMatrix::zeros(r);
    for i in 0..r {
        for j in 0..r {
            out.set(i, j, q.matrix.get(i, j) * root[i] / root[j]);
        }
    }
    // exact symmetry up to rounding; fold to the mean so Jacobi accepts it
    let asym = out.max_asymmetry();
    if asym > 1e-10 {
        return Err(Error::NotSymmetric(asym));
    }
    for i in 0..r {
        for j in (i + 1)..r {
            let v = 0.5 * (out.get(i, j) + out.get(j, i));
            out.set(i, j, v);
            out.set(j, i, v);
        }
    }
    Ok(out)
}

/// Largest real eigenvalue of a quotient matrix, via the symmetrized
/// similarity.
pub fn quotient_largest_eigenvalue(q: &QuotientMatrix) -> Result<f64> {
    spectral_radius(&symmetrize(q)?)
}

const INTERLACE_SLACK: f64 = 1e-9;

/// Cauchy interlacing of the principal submatrix on `rows`:
/// lambda_i >= mu_i >= lambda_{s-t+i}, up to 1e-9 slack.
pub fn interlacing_check(m: &DenseMatrix, rows: &[usize]) -> Result<bool> {
    let lambda = jacobi_eigenvalues(m)?;
    let mu = jacobi_eigenvalues(&m.principal_submatrix(rows))?;
    let s = lambda.len();
    let t = mu.len();
    for i in 0..t {
        if lambda[i] < mu[i] - INTERLACE_SLACK {
            return Ok(false);
        }
        if mu[i] < lambda[s - t + i] - INTERLACE_SLACK {
            return Ok(false);
        }
    }
    Ok(true)
}

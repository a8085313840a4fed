//! Exact kernels of linear differential operators on homogeneous pieces.
//!
//! The operator is written as a matrix from coefficients of degree-`k`
//! monomials to coefficients of its image, then row-reduced over the
//! rationals with full pivoting. Kernel vectors are lifted back to
//! polynomials.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{euclid_laplacian, kohn_laplacian, MultiIndex, Poly};
use crate::error::{domain, Result};
use crate::{Poly3, Rational, DEFAULT_MAX_DEGREE};

/// Which degree a monomial is homogeneous with respect to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Grading {
    /// `b1 + b2 + 2*b3`.
    Heisenberg,
    /// `b1 + b2 + b3`.
    Euclidean,
}

impl Grading {
    pub fn degree(self, m: &MultiIndex) -> u32 {
        match self {
            Grading::Heisenberg => m.heisenberg_degree(),
            Grading::Euclidean => m.total_degree(),
        }
    }
}

/// Monomials of exact degree `k`, in descending graded-lex order
/// (`x^k` first).
pub fn monomials_of_degree(k: u32, grading: Grading) -> Vec<MultiIndex> {
    let mut out = Vec::new();
    let t_max = match grading {
        Grading::Heisenberg => k / 2,
        Grading::Euclidean => k,
    };
    for b3 in 0..=t_max {
        let rest = k - match grading {
            Grading::Heisenberg => 2 * b3,
            Grading::Euclidean => b3,
        };
        for b1 in 0..=rest {
            out.push(MultiIndex::new(b1, rest - b1, b3));
        }
    }
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// Matrix of a linear operator restricted to one homogeneous piece.
/// `matrix[i][j]` is the coefficient of `codomain[i]` in the image of
/// `domain[j]`.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearMap {
    pub domain: Vec<MultiIndex>,
    pub codomain: Vec<MultiIndex>,
    pub matrix: Vec<Vec<Rational>>,
}

impl LinearMap {
    pub fn build(domain: Vec<MultiIndex>, op: impl Fn(&Poly3) -> Poly3) -> Self {
        let images: Vec<Poly3> = domain.iter().map(|m| op(&Poly::monomial(*m, Rational::one()))).collect();
        let mut codomain: Vec<MultiIndex> = images.iter().flat_map(|p| p.terms().map(|(i, _)| *i)).collect();
        codomain.sort_by(|a, b| b.cmp(a));
        codomain.dedup();
        let matrix = codomain.iter().map(|row| images.iter().map(|img| img.coeff(*row)).collect()).collect();
        Self { domain, codomain, matrix }
    }

    pub fn rank(&self) -> usize {
        rational_rank(&self.matrix)
    }

    /// Kernel basis, lifted to polynomials over `domain`.
    pub fn kernel(&self) -> Vec<Poly3> {
        kernel_basis(&self.matrix, self.domain.len())
            .into_iter()
            .map(|v| Poly::from_terms(self.domain.iter().copied().zip(v)))
            .collect()
    }
}

/// The Kohn-Laplacian on Heisenberg-degree-`k` polynomials.
pub fn kohn_laplacian_matrix(k: u32) -> LinearMap {
    LinearMap::build(monomials_of_degree(k, Grading::Heisenberg), kohn_laplacian)
}

fn check_degree(k: i64, max_degree: u32) -> Result<u32> {
    if k < 0 {
        return domain(format!("degree must be nonnegative, got {k}"));
    }
    if k > i64::from(max_degree) {
        return domain(format!("degree {k} exceeds the configured maximum {max_degree}"));
    }
    Ok(k as u32)
}

/// Basis of Heisenberg-degree-`k` polynomials annihilated by the
/// Kohn-Laplacian.
pub fn h_harmonic_basis(k: i64) -> Result<Vec<Poly3>> {
    h_harmonic_basis_with(k, DEFAULT_MAX_DEGREE)
}

pub fn h_harmonic_basis_with(k: i64, max_degree: u32) -> Result<Vec<Poly3>> {
    let k = check_degree(k, max_degree)?;
    Ok(kohn_laplacian_matrix(k).kernel())
}

/// Basis of ordinary-degree-`k` harmonic polynomials on R^3.
pub fn euclid_harmonic_basis(k: i64) -> Result<Vec<Poly3>> {
    let k = check_degree(k, DEFAULT_MAX_DEGREE)?;
    Ok(LinearMap::build(monomials_of_degree(k, Grading::Euclidean), euclid_laplacian).kernel())
}

/// Row echelon form with full pivoting. Returns the reduced matrix, the pivot
/// positions `(row, col)` in elimination order, and nothing else is assumed
/// about row order.
struct Echelon {
    rows: Vec<Vec<Rational>>,
    pivots: Vec<(usize, usize)>,
}

fn height(q: &Rational) -> u64 {
    q.numer().bits() + q.denom().bits()
}

fn reduce(matrix: &[Vec<Rational>], ncols: usize) -> Echelon {
    let mut rows: Vec<Vec<Rational>> = matrix.to_vec();
    let nrows = rows.len();
    let mut row_used = vec![false; nrows];
    let mut col_used = vec![false; ncols];
    let mut pivots = Vec::new();
    loop {
        // Full pivoting: smallest-height nonzero entry in the remaining
        // submatrix; ties go to the lowest (col, row).
        let mut best: Option<(u64, usize, usize)> = None;
        for c in (0..ncols).filter(|&c| !col_used[c]) {
            for r in (0..nrows).filter(|&r| !row_used[r]) {
                let v = &rows[r][c];
                if v.is_zero() {
                    continue;
                }
                let h = height(v);
                if best.is_none_or(|(bh, _, _)| h < bh) {
                    best = Some((h, r, c));
                }
            }
        }
        let Some((_, pr, pc)) = best else { break };
        row_used[pr] = true;
        col_used[pc] = true;
        let inv = rows[pr][pc].recip();
        for v in rows[pr].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot_row = rows[pr].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == pr || row[pc].is_zero() {
                continue;
            }
            let f = row[pc].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v = &*v - &(&f * p);
                }
            }
        }
        pivots.push((pr, pc));
    }
    Echelon { rows, pivots }
}

pub fn rational_rank(matrix: &[Vec<Rational>]) -> usize {
    let ncols = matrix.first().map_or(0, Vec::len);
    reduce(matrix, ncols).pivots.len()
}

/// Basis of `{v : M v = 0}` with one vector per free column; the free
/// coordinate is 1 and the vector is rescaled to coprime integers with a
/// positive leading entry.
pub fn kernel_basis(matrix: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let ech = reduce(matrix, ncols);
    let pivot_cols: Vec<usize> = ech.pivots.iter().map(|&(_, c)| c).collect();
    (0..ncols)
        .filter(|c| !pivot_cols.contains(c))
        .map(|free| {
            let mut v = vec![Rational::zero(); ncols];
            v[free] = Rational::one();
            for &(r, c) in &ech.pivots {
                v[c] = -ech.rows[r][free].clone();
            }
            normalize(v)
        })
        .collect()
}

fn normalize(v: Vec<Rational>) -> Vec<Rational> {
    use num_integer::Integer;
    let lcm = v.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let ints: Vec<BigInt> = v.iter().map(|q| (q * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let gcd = ints.iter().fold(BigInt::zero(), |acc, n| acc.gcd(n));
    let sign = match ints.iter().find(|n| !n.is_zero()) {
        Some(n) if n.is_negative() => -BigInt::one(),
        _ => BigInt::one(),
    };
    let div = if gcd.is_zero() { BigInt::one() } else { gcd * sign };
    ints.into_iter().map(|n| Rational::from_integer(n / &div)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse;
    use crate::poly::is_h_harmonic;

    #[test]
    fn monomial_counts() {
        let h3 = monomials_of_degree(3, Grading::Heisenberg);
        assert_eq!(h3.len(), 6);
        assert_eq!(h3[0], MultiIndex::new(3, 0, 0));
        assert!(h3.contains(&MultiIndex::new(0, 1, 1)));
        assert_eq!(monomials_of_degree(2, Grading::Euclidean).len(), 6);
        assert_eq!(monomials_of_degree(0, Grading::Heisenberg), vec![MultiIndex::default()]);
    }

    #[test]
    fn low_degree_bases() {
        assert_eq!(h_harmonic_basis(0).unwrap(), vec![parse("1").unwrap()]);
        assert_eq!(h_harmonic_basis(1).unwrap(), vec![parse("x").unwrap(), parse("y").unwrap()]);
        assert!(h_harmonic_basis(-1).is_err());
        assert!(h_harmonic_basis(9).is_err());
    }

    #[test]
    fn degree_three_kernel() {
        let basis = h_harmonic_basis(3).unwrap();
        assert_eq!(basis.len(), 6 - 2);
        assert!(basis.iter().all(is_h_harmonic));
        // -3yt - 2x^3 lies in the span: appending it does not raise the rank.
        let dom = monomials_of_degree(3, Grading::Heisenberg);
        let as_row = |p: &Poly3| dom.iter().map(|m| p.coeff(*m)).collect::<Vec<_>>();
        let mut rows: Vec<Vec<Rational>> = basis.iter().map(as_row).collect();
        assert_eq!(rational_rank(&rows), 4);
        rows.push(as_row(&parse("-3*y*t - 2*x^3").unwrap()));
        assert_eq!(rational_rank(&rows), 4);
    }

    #[test]
    fn euclid_basis_dimensions() {
        // dim of degree-k harmonics on R^3 is 2k+1.
        for k in 0..=5 {
            assert_eq!(euclid_harmonic_basis(k).unwrap().len(), 2 * k as usize + 1);
        }
    }

    #[test]
    fn kernel_of_explicit_matrix() {
        let q = |n: i64| Rational::from_integer(n.into());
        let m = vec![vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)]];
        assert_eq!(rational_rank(&m), 1);
        let k = kernel_basis(&m, 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            let dot: Rational = v.iter().zip(&m[0]).map(|(a, b)| a * b).sum();
            assert!(dot.is_zero());
        }
    }
}

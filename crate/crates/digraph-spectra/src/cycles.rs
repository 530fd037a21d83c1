//! Cycle counting via traces of adjacency powers, and the cycle
//! generating-function identity
//!
//! ```text
//! exp( sum_{m>=1} t^m N_m / m ) = det(I - t A)^{-1}
//! ```
//!
//! which ties the counts to the nonzero adjacency spectrum and serves as an
//! independent oracle for the spectral code. Counts are arbitrary-precision
//! integers: they grow like the spectral radius to the m-th power and
//! overflow machine words quickly.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::digraph::Digraph;
use crate::matrices::{adjacency_matrix, Mat, Rational};
use crate::spectra::{char_poly, SpectrumError};

/// Exact counts `N_1..N_M` of cycles of each length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleCountVector {
    pub counts: Vec<BigInt>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycleError {
    #[error("evaluation point {t} is outside the convergence region |t| < 1/{bound}")]
    OutOfConvergenceRegion { t: String, bound: usize },
}

fn integer_adjacency(d: &Digraph) -> Mat<BigInt> {
    let n = d.vertex_count();
    let mut mat: Mat<BigInt> = Mat::zeros(n, n);
    for j in 0..d.edge_count() {
        let (s, r) = d.endpoints(j);
        let v = mat.at(s, r).clone() + BigInt::one();
        mat.set(s, r, v);
    }
    mat
}

/// `N_m(D) = trace(A^m)` for `m = 1..=max_length`, exactly.
pub fn count_cycles(d: &Digraph, max_length: usize) -> CycleCountVector {
    assert!(max_length >= 1, "truncation order must be at least 1");
    let a = integer_adjacency(d);
    let mut counts = Vec::with_capacity(max_length);
    let mut power = a.clone();
    counts.push(power.trace());
    for _ in 2..=max_length {
        power = power.mul(&a);
        counts.push(power.trace());
    }
    CycleCountVector { counts }
}

/// Crude but safe upper bound on the adjacency spectral radius: the maximum
/// row sum, i.e. the maximum out-degree.
pub fn spectral_radius_bound(d: &Digraph) -> usize {
    d.vertex_ids()
        .iter()
        .map(|v| d.degrees(v).expect("vertex exists").d_out)
        .max()
        .unwrap_or(0)
}

/// Residual `| exp(sum_{m<=M} t^m N_m / m) - det(I - t A)^{-1} |` at a
/// rational evaluation point strictly inside the convergence region. The
/// truncated sum is accumulated exactly; only the final exponential and the
/// reciprocal are floating point.
pub fn bowen_lanford_residual(
    d: &Digraph,
    t: &Rational,
    truncation: usize,
) -> Result<f64, CycleError> {
    assert!(truncation >= 1, "truncation order must be at least 1");
    let bound = spectral_radius_bound(d);
    if bound > 0 && t.abs() * Rational::from(BigInt::from(bound)) >= Rational::one() {
        return Err(CycleError::OutOfConvergenceRegion {
            t: t.to_string(),
            bound,
        });
    }
    let counts = count_cycles(d, truncation);
    let mut sum = Rational::zero();
    let mut t_power = Rational::one();
    for (m, n_m) in counts.counts.iter().enumerate() {
        t_power *= t;
        sum += &t_power * BigRational::from(n_m.clone())
            / Rational::from(BigInt::from(m + 1));
    }
    let lhs = sum.to_f64().expect("truncated sum in f64 range").exp();
    let n = d.vertex_count();
    let a = adjacency_matrix(d);
    let i_minus_ta = Mat::from_fn(n, n, |r, c| {
        let scaled = t * a.at(r, c);
        if r == c {
            Rational::one() - scaled
        } else {
            -scaled
        }
    });
    let det = i_minus_ta
        .determinant()
        .to_f64()
        .expect("determinant in f64 range");
    Ok((lhs - 1.0 / det).abs())
}

/// Oracle for "equal cycle counts implies equal nonzero adjacency spectra":
/// returns `false` only on a counterexample, i.e. when the counts agree for
/// all `m <= max(|V1|, |V2|)` but the nonzero spectra differ exactly.
pub fn cycle_equality_implies_spectrum(
    d1: &Digraph,
    d2: &Digraph,
) -> Result<bool, SpectrumError> {
    let m_max = d1.vertex_count().max(d2.vertex_count());
    if m_max == 0 {
        return Ok(true);
    }
    if count_cycles(d1, m_max) != count_cycles(d2, m_max) {
        return Ok(true);
    }
    let p1 = char_poly(&crate::matrices::ExactMatrix::Rational(adjacency_matrix(d1)))?;
    let p2 = char_poly(&crate::matrices::ExactMatrix::Rational(adjacency_matrix(d2)))?;
    Ok(p1.nonzero_part() == p2.nonzero_part())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrices::rat;

    fn d(text: &str) -> Digraph {
        Digraph::parse(text).unwrap()
    }

    fn d4() -> Digraph {
        d("vertices v1 v2\nedge a v1 v1\nedge b v1 v2\nedge c v2 v1\n")
    }

    fn ints(values: &[i64]) -> Vec<BigInt> {
        values.iter().map(|&v| BigInt::from(v)).collect()
    }

    #[test]
    fn counts_d4() {
        assert_eq!(count_cycles(&d4(), 3).counts, ints(&[1, 3, 4]));
    }

    #[test]
    fn counts_edgeless_and_cycle() {
        let empty = d("vertices a b\n");
        assert_eq!(count_cycles(&empty, 4).counts, ints(&[0, 0, 0, 0]));
        let c3 = d("vertices a b c\nedge e1 a b\nedge e2 b c\nedge e3 c a\n");
        assert_eq!(count_cycles(&c3, 6).counts, ints(&[0, 0, 3, 0, 0, 3]));
    }

    #[test]
    fn counts_equal_line_digraph_counts() {
        let g = d("vertices v1 v2 v3\n\
                   edge a v1 v1\nedge b v1 v2\nedge c v1 v3\nedge d v1 v3\n\
                   edge e v2 v2\nedge f v2 v2\nedge g v2 v3\nedge h v3 v3\n");
        let m = 2 * g.vertex_count().max(g.edge_count());
        assert_eq!(count_cycles(&g, m), count_cycles(&g.line_digraph(), m));
    }

    #[test]
    fn unparalleled_counts_are_binary_adjacency_traces() {
        let g = d("vertices v1 v2\nedge a v2 v2\nedge b v2 v2\nedge c v2 v1\nedge d v1 v2\n");
        let u = g.unparalleled();
        let a_b = integer_adjacency(&u);
        let mut power = a_b.clone();
        for (m, count) in count_cycles(&u, 5).counts.iter().enumerate() {
            if m > 0 {
                power = power.mul(&a_b);
            }
            assert_eq!(&power.trace(), count);
        }
    }

    #[test]
    fn bowen_lanford_d4() {
        // det(I - A/10) = (1 - 1/10)(1) - 1/100 = 89/100
        let residual = bowen_lanford_residual(&d4(), &rat(1, 10), 30).unwrap();
        assert!(residual < 1e-12, "residual {residual}");
    }

    #[test]
    fn bowen_lanford_improves_with_truncation() {
        let coarse = bowen_lanford_residual(&d4(), &rat(1, 10), 5).unwrap();
        let fine = bowen_lanford_residual(&d4(), &rat(1, 10), 40).unwrap();
        assert!(fine < coarse);
    }

    #[test]
    fn bowen_lanford_three_cycle() {
        // det(I - tA) = 1 - t^3 for a 3-cycle
        let c3 = d("vertices a b c\nedge e1 a b\nedge e2 b c\nedge e3 c a\n");
        let residual = bowen_lanford_residual(&c3, &rat(1, 10), 40).unwrap();
        assert!(residual < 1e-12);
    }

    #[test]
    fn bowen_lanford_edgeless_is_zero() {
        let empty = d("vertices a b\n");
        assert_eq!(bowen_lanford_residual(&empty, &rat(7, 2), 3).unwrap(), 0.0);
    }

    #[test]
    fn bowen_lanford_gates_convergence() {
        assert!(matches!(
            bowen_lanford_residual(&d4(), &rat(1, 2), 10),
            Err(CycleError::OutOfConvergenceRegion { .. })
        ));
    }

    #[test]
    fn implication_oracle() {
        let g = d4();
        assert!(cycle_equality_implies_spectrum(&g, &g).unwrap());
        let c2 = d("vertices a b\nedge e1 a b\nedge e2 b a\n");
        // different counts: implication holds vacuously
        assert!(cycle_equality_implies_spectrum(&g, &c2).unwrap());
    }
}

//! Canonical spectrum representation and the decision procedure for "equal
//! multisets of nonzero eigenvalues".
//!
//! A spectrum is canonically its monic characteristic polynomial with exact
//! rational coefficients, computed by the Faddeev-LeVerrier recurrence;
//! numerical roots exist only for display. Stripping the maximal power of
//! `t` from the polynomial encodes exactly the multiset of nonzero
//! eigenvalues, so the spectral comparisons behind the preservation tables
//! are decided with zero tolerance. Only the two normalized-Laplacian kinds
//! are float-valued, and those comparisons use the fixed tolerances below.

use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::digraph::Digraph;
use crate::matrices::{
    build_matrix, BuiltMatrix, ExactMatrix, Mat, MatrixError, MatrixKind, Rational, Scalar,
};

/// Relative threshold below which a float eigenvalue counts as zero.
pub const FLOAT_ZERO_THRESHOLD: f64 = 1e-8;
/// Absolute tolerance for comparing two nonzero float eigenvalues.
pub const FLOAT_MATCH_TOLERANCE: f64 = 1e-7;

/// Errors from spectrum computation and comparison.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectrumError {
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error("characteristic polynomial of a Hermitian matrix had a nonreal coefficient")]
    NonRealCoefficient,
    #[error("cannot compare spectra of kinds `{0}` and `{1}`")]
    KindMismatch(MatrixKind, MatrixKind),
}

/// Monic characteristic polynomial with exact rational coefficients, stored
/// in descending degree order (`coeffs[0] == 1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPoly {
    coeffs: Vec<Rational>,
}

impl CharPoly {
    /// The constant polynomial `1` (characteristic polynomial of the empty
    /// matrix).
    pub fn one() -> Self {
        CharPoly {
            coeffs: vec![Rational::one()],
        }
    }

    /// Builds from descending coefficients; the leading one must be 1.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty() && coeffs[0].is_one(), "polynomial must be monic");
        CharPoly { coeffs }
    }

    /// `t - r`.
    pub fn linear(root: Rational) -> Self {
        CharPoly {
            coeffs: vec![Rational::one(), -root],
        }
    }

    /// `t^2 - sum t + product`: the quadratic with the given root sum and
    /// product. Handy for conjugate surd or imaginary pairs.
    pub fn quadratic(sum: Rational, product: Rational) -> Self {
        CharPoly {
            coeffs: vec![Rational::one(), -sum, product],
        }
    }

    /// Polynomial product; used to assemble expected spectra from factors.
    pub fn mul(&self, rhs: &CharPoly) -> CharPoly {
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        CharPoly { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Descending coefficients, starting with the leading 1.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// The maximal `k` with `t^k` dividing the polynomial, i.e. the
    /// algebraic multiplicity of the eigenvalue zero.
    pub fn zero_multiplicity(&self) -> usize {
        self.coeffs
            .iter()
            .rev()
            .take_while(|c| c.is_zero())
            .count()
    }

    /// The polynomial divided by `t^{zero_multiplicity}`; encodes exactly
    /// the multiset of nonzero eigenvalues.
    pub fn nonzero_part(&self) -> CharPoly {
        let trailing = self.zero_multiplicity();
        CharPoly {
            coeffs: self.coeffs[..self.coeffs.len() - trailing].to_vec(),
        }
    }

    /// True when `self` divides `other` exactly. For monic polynomials this
    /// decides multiset containment of roots with multiplicity.
    pub fn divides(&self, other: &CharPoly) -> bool {
        if self.degree() > other.degree() {
            return false;
        }
        // long division of `other` by `self`; divisor is monic
        let mut rem: Vec<Rational> = other.coeffs.clone();
        let quot_len = other.degree() - self.degree() + 1;
        for k in 0..quot_len {
            let lead = rem[k].clone();
            if lead.is_zero() {
                continue;
            }
            for (j, c) in self.coeffs.iter().enumerate() {
                let v = &rem[k + j] - &lead * c;
                rem[k + j] = v;
            }
        }
        rem.iter().all(|c| c.is_zero())
    }

    /// Numerical roots via companion-matrix eigenvalues, in descending
    /// `(re, im)` order. Coefficients of every kind handled here are real.
    pub fn roots(&self) -> Vec<Complex64> {
        let n = self.degree();
        if n == 0 {
            return Vec::new();
        }
        let companion = nalgebra::DMatrix::from_fn(n, n, |r, c| {
            if c + 1 == n {
                -self.coeffs[n - r]
                    .to_f64()
                    .expect("coefficient in f64 range")
            } else if r == c + 1 {
                1.0
            } else {
                0.0
            }
        });
        let mut roots: Vec<Complex64> = companion
            .complex_eigenvalues()
            .iter()
            .map(|z| Complex64::new(z.re, z.im))
            .collect();
        sort_complex_desc(&mut roots);
        roots
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

fn sort_complex_desc(values: &mut [Complex64]) {
    values.sort_by(|a, b| {
        (b.re, b.im)
            .partial_cmp(&(a.re, a.im))
            .expect("eigenvalues are finite")
    });
}

/// Faddeev-LeVerrier over any exact scalar field:
/// `M_1 = A`, `c_k = -tr(M_k)/k`, `M_{k+1} = A (M_k + c_k I)`.
fn faddeev_leverrier<T: Scalar>(a: &Mat<T>) -> Vec<T> {
    let n = a.rows();
    let mut coeffs = Vec::with_capacity(n + 1);
    coeffs.push(T::one());
    if n == 0 {
        return coeffs;
    }
    let mut m = a.clone();
    for k in 1..=n {
        let c = (-m.trace()).div_by_int(k);
        coeffs.push(c.clone());
        if k == n {
            break;
        }
        let mut shifted = m;
        for i in 0..n {
            let v = shifted.at(i, i).clone() + c.clone();
            shifted.set(i, i, v);
        }
        m = a.mul(&shifted);
    }
    coeffs
}

/// Integer fast path: for integer matrices the recurrence stays in integers
/// and every division by `k` is exact.
fn faddeev_leverrier_int(a: &Mat<BigInt>) -> Vec<BigInt> {
    let n = a.rows();
    let mut coeffs = Vec::with_capacity(n + 1);
    coeffs.push(BigInt::one());
    if n == 0 {
        return coeffs;
    }
    let mut m = a.clone();
    for k in 1..=n {
        let t = -m.trace();
        let k_big = BigInt::from(k);
        debug_assert!((&t % &k_big).is_zero(), "trace must divide evenly");
        let c = t / k_big;
        coeffs.push(c.clone());
        if k == n {
            break;
        }
        let mut shifted = m;
        for i in 0..n {
            let v = shifted.at(i, i).clone() + c.clone();
            shifted.set(i, i, v);
        }
        m = a.mul(&shifted);
    }
    coeffs
}

/// Characteristic polynomial `det(tI - M)` in exact arithmetic. For
/// Gaussian-rational input the coefficients must come out real; a nonzero
/// imaginary part signals a broken Hermitian construction.
pub fn char_poly(m: &ExactMatrix) -> Result<CharPoly, SpectrumError> {
    match m {
        ExactMatrix::Rational(m) => {
            let coeffs = if m.is_integral() {
                let int = Mat::from_fn(m.rows(), m.cols(), |r, c| {
                    m.at(r, c).to_integer()
                });
                faddeev_leverrier_int(&int)
                    .into_iter()
                    .map(BigRational::from)
                    .collect()
            } else {
                faddeev_leverrier(m)
            };
            Ok(CharPoly::from_coeffs(coeffs))
        }
        ExactMatrix::Gaussian(m) => {
            let coeffs = faddeev_leverrier(m);
            let mut real = Vec::with_capacity(coeffs.len());
            for c in coeffs {
                if !c.im.is_zero() {
                    return Err(SpectrumError::NonRealCoefficient);
                }
                real.push(c.re);
            }
            Ok(CharPoly::from_coeffs(real))
        }
    }
}

/// One spectrum: its kind, the exact polynomial when the kind admits one,
/// and numerical eigenvalues for display.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumReport {
    pub kind: MatrixKind,
    pub exact: Option<CharPoly>,
    pub floats: Vec<Complex64>,
}

impl SpectrumReport {
    pub fn dimension(&self) -> usize {
        self.floats.len()
    }
}

impl fmt::Display for SpectrumReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};", self.kind)?;
        if let Some(poly) = &self.exact {
            write!(f, " poly={};", poly)?;
        }
        let roots: Vec<String> = self.floats.iter().map(|z| format_complex(*z)).collect();
        write!(f, " roots={}", roots.join(","))
    }
}

/// Rounds to ten decimals and trims trailing zeros, so near-integer roots
/// print cleanly and output is locale-independent.
pub fn format_f64(x: f64) -> String {
    let mut s = format!("{:.10}", x);
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    if s == "-0" {
        s = "0".into();
    }
    s
}

pub fn format_complex(z: Complex64) -> String {
    let re = format_f64(z.re);
    let im = format_f64(z.im);
    match (re.as_str(), im.as_str()) {
        (_, "0") => re,
        ("0", _) => format!("{im}i"),
        _ if im.starts_with('-') => format!("{re}{im}i"),
        _ => format!("{re}+{im}i"),
    }
}

/// Computes the spectrum of the given kind: exact polynomial plus float
/// roots for the thirteen exact kinds, float eigenvalues only for the two
/// normalized Laplacians.
pub fn spectrum(d: &Digraph, kind: MatrixKind) -> Result<SpectrumReport, SpectrumError> {
    match build_matrix(d, kind)? {
        BuiltMatrix::Exact(m) => {
            let poly = char_poly(&m)?;
            let floats = poly.roots();
            Ok(SpectrumReport {
                kind,
                exact: Some(poly),
                floats,
            })
        }
        BuiltMatrix::Float(m) => {
            let mut eigs: Vec<Complex64> = m
                .eigenvalues()
                .into_iter()
                .map(|x| Complex64::new(x, 0.0))
                .collect();
            sort_complex_desc(&mut eigs);
            Ok(SpectrumReport {
                kind,
                exact: None,
                floats: eigs,
            })
        }
    }
}

/// Decides whether two spectra have equal multisets of nonzero elements.
///
/// Exact reports are compared coefficientwise on the `t`-stripped
/// polynomials (zero tolerance). Float reports classify an eigenvalue as
/// zero when `|x| <= 1e-8 (1 + max |eig|)` and then compare the sorted
/// nonzero lists pairwise within `1e-7`.
pub fn nonzero_spectra_equal(
    a: &SpectrumReport,
    b: &SpectrumReport,
) -> Result<bool, SpectrumError> {
    if a.kind != b.kind {
        return Err(SpectrumError::KindMismatch(a.kind, b.kind));
    }
    match (&a.exact, &b.exact) {
        (Some(pa), Some(pb)) => Ok(pa.nonzero_part() == pb.nonzero_part()),
        _ => {
            let na = nonzero_floats(&a.floats);
            let nb = nonzero_floats(&b.floats);
            Ok(na.len() == nb.len()
                && na
                    .iter()
                    .zip(&nb)
                    .all(|(x, y)| (x - y).norm() <= FLOAT_MATCH_TOLERANCE))
        }
    }
}

fn nonzero_floats(values: &[Complex64]) -> Vec<Complex64> {
    let max = values.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let threshold = FLOAT_ZERO_THRESHOLD * (1.0 + max);
    let mut nz: Vec<Complex64> = values
        .iter()
        .copied()
        .filter(|z| z.norm() > threshold)
        .collect();
    sort_complex_desc(&mut nz);
    nz
}

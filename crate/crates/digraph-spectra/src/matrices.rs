//! Matrix constructions: every matrix kind is built exactly over
//! arbitrary-precision rationals (Gaussian rationals for the Hermitian
//! matrix), except the two normalized Laplacians whose entries force square
//! roots and live in floating point.
//!
//! All matrices index rows and columns by the digraph's vertex order, except
//! the line adjacency matrix which uses the edge order. The stationary
//! distribution of the transition matrix is solved exactly by rational
//! elimination, so `phi * P = phi` and `sum(phi) = 1` hold with zero
//! residual.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::digraph::Digraph;

/// Arbitrary-precision rational scalar used throughout.
pub type Rational = BigRational;

pub(crate) fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub(crate) fn rat_int(n: i64) -> Rational {
    Rational::from(BigInt::from(n))
}

/// Element of the field of Gaussian rationals `Q(i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_rational(re: Rational) -> Self {
        GaussianRational {
            re,
            im: Rational::zero(),
        }
    }

    pub fn i() -> Self {
        GaussianRational {
            re: Rational::zero(),
            im: Rational::one(),
        }
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.im.is_negative() {
            write!(f, "{}{}*i", self.re, self.im)
        } else {
            write!(f, "{}+{}*i", self.re, self.im)
        }
    }
}

impl Add for GaussianRational {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        GaussianRational::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Sub for GaussianRational {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        GaussianRational::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Mul for GaussianRational {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let re = &self.re * &rhs.re - &self.im * &rhs.im;
        let im = &self.re * &rhs.im + &self.im * &rhs.re;
        GaussianRational::new(re, im)
    }
}

impl Neg for GaussianRational {
    type Output = Self;
    fn neg(self) -> Self {
        GaussianRational::new(-self.re, -self.im)
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        GaussianRational::from_rational(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        GaussianRational::from_rational(Rational::one())
    }
}

/// Scalars an exact characteristic polynomial can be computed over.
pub trait Scalar:
    Clone + PartialEq + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{
    /// Exact division by a small positive integer.
    fn div_by_int(self, k: usize) -> Self;
}

impl Scalar for Rational {
    fn div_by_int(self, k: usize) -> Self {
        self / Rational::from(BigInt::from(k))
    }
}

impl Scalar for GaussianRational {
    fn div_by_int(self, k: usize) -> Self {
        let d = Rational::from(BigInt::from(k));
        GaussianRational::new(self.re / &d, self.im / &d)
    }
}

/// Dense row-major matrix over an arbitrary scalar.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Mat<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: T) {
        self.data[r * self.cols + c] = value;
    }

    pub fn transpose(&self) -> Mat<T> {
        Mat::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }
}

impl<T: Clone + Zero> Mat<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat::from_fn(rows, cols, |_, _| T::zero())
    }
}

impl<T: Clone + Zero + One> Mat<T> {
    pub fn identity(n: usize) -> Self {
        Mat::from_fn(n, n, |r, c| if r == c { T::one() } else { T::zero() })
    }

    pub fn mul(&self, rhs: &Mat<T>) -> Mat<T> {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        Mat::from_fn(self.rows, rhs.cols, |r, c| {
            let mut acc = T::zero();
            for k in 0..self.cols {
                acc = acc + self.at(r, k).clone() * rhs.at(k, c).clone();
            }
            acc
        })
    }

    pub fn trace(&self) -> T {
        assert_eq!(self.rows, self.cols, "trace of a non-square matrix");
        let mut acc = T::zero();
        for i in 0..self.rows {
            acc = acc + self.at(i, i).clone();
        }
        acc
    }
}

impl<T: Clone + Sub<Output = T>> Mat<T> {
    pub fn sub(&self, rhs: &Mat<T>) -> Mat<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Mat::from_fn(self.rows, self.cols, |r, c| {
            self.at(r, c).clone() - rhs.at(r, c).clone()
        })
    }
}

impl Mat<Rational> {
    /// True when every entry is an integer.
    pub fn is_integral(&self) -> bool {
        self.data.iter().all(|x| x.is_integer())
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.data
            .iter()
            .map(|x| x.to_f64().expect("rational out of f64 range"))
            .collect()
    }

    /// Grid of exact fractions, one row per line.
    pub fn to_grid(&self) -> String {
        let mut out = String::new();
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.at(r, c).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    /// Exact determinant by rational Gaussian elimination.
    pub fn determinant(&self) -> Rational {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !m.at(r, col).is_zero());
            let Some(pivot) = pivot else {
                return Rational::zero();
            };
            if pivot != col {
                for c in 0..n {
                    let a = m.at(pivot, c).clone();
                    let b = m.at(col, c).clone();
                    m.set(pivot, c, b);
                    m.set(col, c, a);
                }
                det = -det;
            }
            let p = m.at(col, col).clone();
            det *= &p;
            for r in col + 1..n {
                let factor = m.at(r, col) / &p;
                if factor.is_zero() {
                    continue;
                }
                for c in col..n {
                    let v = m.at(r, c) - &factor * m.at(col, c);
                    m.set(r, c, v);
                }
            }
        }
        det
    }
}

/// Solves the (possibly overdetermined) system `a x = b` exactly. Returns
/// `None` when the system is inconsistent or the solution is not unique.
pub(crate) fn solve_exact(a: &Mat<Rational>, b: &[Rational]) -> Option<Vec<Rational>> {
    assert_eq!(a.rows(), b.len());
    let rows = a.rows();
    let cols = a.cols();
    let mut m = Mat::from_fn(rows, cols + 1, |r, c| {
        if c < cols {
            a.at(r, c).clone()
        } else {
            b[r].clone()
        }
    });
    let mut pivot_row = 0usize;
    let mut pivot_cols = Vec::new();
    for col in 0..cols {
        let Some(p) = (pivot_row..rows).find(|&r| !m.at(r, col).is_zero()) else {
            continue;
        };
        if p != pivot_row {
            for c in 0..=cols {
                let x = m.at(p, c).clone();
                let y = m.at(pivot_row, c).clone();
                m.set(p, c, y);
                m.set(pivot_row, c, x);
            }
        }
        let inv = m.at(pivot_row, col).clone();
        for c in 0..=cols {
            let v = m.at(pivot_row, c) / &inv;
            m.set(pivot_row, c, v);
        }
        for r in 0..rows {
            if r != pivot_row && !m.at(r, col).is_zero() {
                let factor = m.at(r, col).clone();
                for c in 0..=cols {
                    let v = m.at(r, c) - &factor * m.at(pivot_row, c);
                    m.set(r, c, v);
                }
            }
        }
        pivot_cols.push(col);
        pivot_row += 1;
        if pivot_row == rows {
            break;
        }
    }
    // Inconsistent if a zero row has nonzero right-hand side.
    for r in pivot_row..rows {
        if !m.at(r, cols).is_zero() {
            return None;
        }
    }
    if pivot_cols.len() < cols {
        return None; // solution space has positive dimension
    }
    let mut x = vec![Rational::zero(); cols];
    for (row, &col) in pivot_cols.iter().enumerate() {
        x[col] = m.at(row, cols).clone();
    }
    Some(x)
}

/// Exact matrix over rationals or Gaussian rationals, indexed by the
/// digraph's vertex order (edge order for the line adjacency matrix).
#[derive(Clone, Debug, PartialEq)]
pub enum ExactMatrix {
    Rational(Mat<Rational>),
    Gaussian(Mat<GaussianRational>),
}

impl ExactMatrix {
    pub fn dimension(&self) -> usize {
        match self {
            ExactMatrix::Rational(m) => m.rows(),
            ExactMatrix::Gaussian(m) => m.rows(),
        }
    }

    /// Machine-readable rows: entries as `p/q` (or `a/b+c/d*i`) separated by
    /// commas, one row per line.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        match self {
            ExactMatrix::Rational(m) => {
                for r in 0..m.rows() {
                    let row: Vec<String> =
                        (0..m.cols()).map(|c| m.at(r, c).to_string()).collect();
                    out.push_str(&row.join(","));
                    out.push('\n');
                }
            }
            ExactMatrix::Gaussian(m) => {
                for r in 0..m.rows() {
                    let row: Vec<String> =
                        (0..m.cols()).map(|c| m.at(r, c).to_string()).collect();
                    out.push_str(&row.join(","));
                    out.push('\n');
                }
            }
        }
        out
    }
}

/// Symmetric matrix of doubles; used only for the normalized Laplacians.
#[derive(Clone, Debug, PartialEq)]
pub struct FloatMatrix {
    n: usize,
    data: Vec<f64>,
}

impl FloatMatrix {
    /// Builds `(x + x^T) / 2` so the result is symmetric entry for entry.
    pub fn symmetrized(n: usize, x: impl Fn(usize, usize) -> f64) -> Self {
        let mut data = vec![0.0; n * n];
        for r in 0..n {
            for c in 0..=r {
                let v = (x(r, c) + x(c, r)) / 2.0;
                data[r * n + c] = v;
                data[c * n + r] = v;
            }
        }
        FloatMatrix { n, data }
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn at(&self, r: usize, c: usize) -> f64 {
        self.data[r * self.n + c]
    }

    /// Eigenvalues in descending order, via a symmetric eigensolver.
    pub fn eigenvalues(&self) -> Vec<f64> {
        if self.n == 0 {
            return Vec::new();
        }
        let m = nalgebra::DMatrix::from_fn(self.n, self.n, |r, c| self.at(r, c));
        let mut eigs: Vec<f64> = m.symmetric_eigen().eigenvalues.iter().copied().collect();
        eigs.sort_by(|a, b| b.partial_cmp(a).expect("symmetric eigenvalues are finite"));
        eigs
    }
}

/// The fifteen spectrum-defining matrix kinds. The last four require strong
/// connectivity (their definitions involve the stationary distribution).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MatrixKind {
    Laplacian,
    Adjacency,
    BinaryAdjacency,
    SymmetricAdjacency,
    SymmetricBinaryAdjacency,
    LineAdjacency,
    Hermitian,
    Skew,
    BinarySkew,
    SkewLaplacian,
    BinarySkewLaplacian,
    NormalizedLaplacian,
    CombinatorialLaplacian,
    BinaryNormalizedLaplacian,
    BinaryCombinatorialLaplacian,
}

impl MatrixKind {
    /// All kinds, in the row order used by the preservation tables.
    pub const ALL: [MatrixKind; 15] = [
        MatrixKind::Laplacian,
        MatrixKind::Adjacency,
        MatrixKind::BinaryAdjacency,
        MatrixKind::SymmetricAdjacency,
        MatrixKind::SymmetricBinaryAdjacency,
        MatrixKind::LineAdjacency,
        MatrixKind::Hermitian,
        MatrixKind::Skew,
        MatrixKind::BinarySkew,
        MatrixKind::SkewLaplacian,
        MatrixKind::BinarySkewLaplacian,
        MatrixKind::NormalizedLaplacian,
        MatrixKind::CombinatorialLaplacian,
        MatrixKind::BinaryNormalizedLaplacian,
        MatrixKind::BinaryCombinatorialLaplacian,
    ];

    /// Kinds defined only for strongly connected digraphs.
    pub fn is_perron_based(self) -> bool {
        matches!(
            self,
            MatrixKind::NormalizedLaplacian
                | MatrixKind::CombinatorialLaplacian
                | MatrixKind::BinaryNormalizedLaplacian
                | MatrixKind::BinaryCombinatorialLaplacian
        )
    }

    /// Kinds whose spectrum is carried by an exact characteristic polynomial.
    pub fn is_exact(self) -> bool {
        !matches!(
            self,
            MatrixKind::NormalizedLaplacian | MatrixKind::BinaryNormalizedLaplacian
        )
    }

    pub fn token(self) -> &'static str {
        match self {
            MatrixKind::Laplacian => "laplacian",
            MatrixKind::Adjacency => "adjacency",
            MatrixKind::BinaryAdjacency => "binary-adjacency",
            MatrixKind::SymmetricAdjacency => "symmetric-adjacency",
            MatrixKind::SymmetricBinaryAdjacency => "symmetric-binary-adjacency",
            MatrixKind::LineAdjacency => "line-adjacency",
            MatrixKind::Hermitian => "hermitian",
            MatrixKind::Skew => "skew",
            MatrixKind::BinarySkew => "binary-skew",
            MatrixKind::SkewLaplacian => "skew-laplacian",
            MatrixKind::BinarySkewLaplacian => "binary-skew-laplacian",
            MatrixKind::NormalizedLaplacian => "normalized-laplacian",
            MatrixKind::CombinatorialLaplacian => "combinatorial-laplacian",
            MatrixKind::BinaryNormalizedLaplacian => "binary-normalized-laplacian",
            MatrixKind::BinaryCombinatorialLaplacian => "binary-combinatorial-laplacian",
        }
    }

    pub fn parse(token: &str) -> Option<MatrixKind> {
        MatrixKind::ALL.iter().copied().find(|k| k.token() == token)
    }
}

impl fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// Errors from matrix construction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("digraph is not strongly connected; kind is undefined")]
    NotStronglyConnected,
    #[error("vertex `{0}` is a sink; transition matrix is undefined")]
    SinkVertex(String),
    #[error("stationary solve failed: nullspace dimension is not one")]
    NullspaceDimensionNotOne,
}

/// Either result of [`build_matrix`].
#[derive(Clone, Debug, PartialEq)]
pub enum BuiltMatrix {
    Exact(ExactMatrix),
    Float(FloatMatrix),
}

/// The `|V| x |E|` incidence matrix: `+1` at `(s(e), e)` and `-1` at
/// `(r(e), e)` for non-loop edges; loops give zero columns.
pub fn incidence_matrix(d: &Digraph) -> Mat<Rational> {
    let n = d.vertex_count();
    let m = d.edge_count();
    let mut mat = Mat::zeros(n, m);
    for j in 0..m {
        let (s, r) = d.endpoints(j);
        if s != r {
            mat.set(s, j, Rational::one());
            mat.set(r, j, -Rational::one());
        }
    }
    mat
}

/// Adjacency matrix counting parallel edges.
pub fn adjacency_matrix(d: &Digraph) -> Mat<Rational> {
    let n = d.vertex_count();
    let mut mat = Mat::zeros(n, n);
    for j in 0..d.edge_count() {
        let (s, r) = d.endpoints(j);
        let v = mat.at(s, r) + Rational::one();
        mat.set(s, r, v);
    }
    mat
}

fn skew_matrix(d: &Digraph) -> Mat<Rational> {
    let a = adjacency_matrix(d);
    a.sub(&a.transpose())
}

fn skew_laplacian_matrix(d: &Digraph) -> Mat<Rational> {
    let n = d.vertex_count();
    let s = skew_matrix(d);
    Mat::from_fn(n, n, |r, c| {
        if r == c {
            let q = d.degrees(&d.vertex_ids()[r]).expect("vertex exists");
            rat_int(q.d_out as i64 - q.d_in as i64)
        } else {
            -s.at(r, c).clone()
        }
    })
}

fn hermitian_matrix(d: &Digraph) -> Mat<GaussianRational> {
    let n = d.vertex_count();
    let a = adjacency_matrix(d);
    Mat::from_fn(n, n, |v, w| {
        let forward = !a.at(v, w).is_zero();
        let backward = !a.at(w, v).is_zero();
        match (forward, backward) {
            (true, true) => GaussianRational::one(),
            (true, false) => GaussianRational::i(),
            (false, true) => -GaussianRational::i(),
            (false, false) => GaussianRational::zero(),
        }
    })
}

/// Row-stochastic transition matrix; the binary variant distributes mass
/// uniformly over distinct out-neighbors instead of edges.
pub fn transition_matrix(d: &Digraph, binary: bool) -> Result<Mat<Rational>, MatrixError> {
    let base = if binary { d.unparalleled() } else { d.clone() };
    let n = base.vertex_count();
    for (i, v) in base.vertex_ids().iter().enumerate() {
        if base.out_edge_indices(i).is_empty() {
            return Err(MatrixError::SinkVertex(v.clone()));
        }
    }
    let a = adjacency_matrix(&base);
    Ok(Mat::from_fn(n, n, |v, w| {
        let d_out: Rational = (0..n).map(|k| a.at(v, k).clone()).sum();
        a.at(v, w) / &d_out
    }))
}

/// Exact stationary distribution of the transition matrix: the unique
/// positive left fixed vector with entries summing to one. Uniqueness is
/// guaranteed by irreducibility on strongly connected digraphs.
pub fn perron_vector(d: &Digraph, binary: bool) -> Result<Vec<Rational>, MatrixError> {
    if !d.is_strongly_connected() {
        return Err(MatrixError::NotStronglyConnected);
    }
    let p = transition_matrix(d, binary)?;
    let n = p.rows();
    // Solve (P^T - I) x = 0 together with the normalization row sum(x) = 1.
    let system = Mat::from_fn(n + 1, n, |r, c| {
        if r < n {
            let mut v = p.at(c, r).clone();
            if r == c {
                v -= Rational::one();
            }
            v
        } else {
            Rational::one()
        }
    });
    let mut rhs = vec![Rational::zero(); n + 1];
    rhs[n] = Rational::one();
    let phi = solve_exact(&system, &rhs).ok_or(MatrixError::NullspaceDimensionNotOne)?;
    if phi.iter().any(|x| !x.is_positive()) {
        return Err(MatrixError::NullspaceDimensionNotOne);
    }
    Ok(phi)
}

fn combinatorial_laplacian(d: &Digraph, binary: bool) -> Result<Mat<Rational>, MatrixError> {
    let phi = perron_vector(d, binary)?;
    let p = transition_matrix(d, binary)?;
    let n = p.rows();
    // Phi - (Phi P + P^T Phi) / 2, with Phi the diagonal of phi.
    Ok(Mat::from_fn(n, n, |r, c| {
        let sym = (&phi[r] * p.at(r, c) + &phi[c] * p.at(c, r)) / rat_int(2);
        if r == c {
            &phi[r] - sym
        } else {
            -sym
        }
    }))
}

fn normalized_laplacian(d: &Digraph, binary: bool) -> Result<FloatMatrix, MatrixError> {
    let phi = perron_vector(d, binary)?;
    let p = transition_matrix(d, binary)?;
    let n = p.rows();
    let sqrt_phi: Vec<f64> = phi
        .iter()
        .map(|x| x.to_f64().expect("stationary entry in f64 range").sqrt())
        .collect();
    let pf: Vec<f64> = p.to_f64();
    // I - (X + X^T)/2 with X = Phi^{1/2} P Phi^{-1/2}; symmetrized exactly.
    Ok(FloatMatrix::symmetrized(n, |r, c| {
        let x = sqrt_phi[r] * pf[r * n + c] / sqrt_phi[c];
        if r == c {
            1.0 - x
        } else {
            -x
        }
    }))
}

/// Builds the matrix of the given kind. Perron-based kinds error on
/// digraphs that are not strongly connected.
pub fn build_matrix(d: &Digraph, kind: MatrixKind) -> Result<BuiltMatrix, MatrixError> {
    if kind.is_perron_based() && !d.is_strongly_connected() {
        return Err(MatrixError::NotStronglyConnected);
    }
    let exact = |m: Mat<Rational>| BuiltMatrix::Exact(ExactMatrix::Rational(m));
    Ok(match kind {
        MatrixKind::Laplacian => {
            let m = incidence_matrix(d);
            exact(m.mul(&m.transpose()))
        }
        MatrixKind::Adjacency => exact(adjacency_matrix(d)),
        MatrixKind::BinaryAdjacency => exact(adjacency_matrix(&d.unparalleled())),
        MatrixKind::SymmetricAdjacency => {
            let a = adjacency_matrix(d);
            exact(a.mul(&a.transpose()))
        }
        MatrixKind::SymmetricBinaryAdjacency => {
            let a = adjacency_matrix(&d.unparalleled());
            exact(a.mul(&a.transpose()))
        }
        MatrixKind::LineAdjacency => exact(adjacency_matrix(&d.line_digraph())),
        MatrixKind::Hermitian => BuiltMatrix::Exact(ExactMatrix::Gaussian(hermitian_matrix(d))),
        MatrixKind::Skew => exact(skew_matrix(d)),
        MatrixKind::BinarySkew => exact(skew_matrix(&d.unparalleled())),
        MatrixKind::SkewLaplacian => exact(skew_laplacian_matrix(d)),
        MatrixKind::BinarySkewLaplacian => exact(skew_laplacian_matrix(&d.unparalleled())),
        MatrixKind::CombinatorialLaplacian => exact(combinatorial_laplacian(d, false)?),
        MatrixKind::BinaryCombinatorialLaplacian => exact(combinatorial_laplacian(d, true)?),
        MatrixKind::NormalizedLaplacian => BuiltMatrix::Float(normalized_laplacian(d, false)?),
        MatrixKind::BinaryNormalizedLaplacian => BuiltMatrix::Float(normalized_laplacian(d, true)?),
    })
}

/// The `A^T A` variant of the symmetric adjacency matrix. Its nonzero
/// spectrum agrees with that of `A A^T`; only the multiplicity of zero can
/// differ, which is why it is a flag here and not a separate kind.
pub fn right_symmetric_adjacency(d: &Digraph, binary: bool) -> Mat<Rational> {
    let a = if binary {
        adjacency_matrix(&d.unparalleled())
    } else {
        adjacency_matrix(d)
    };
    a.transpose().mul(&a)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(text: &str) -> Digraph {
        Digraph::parse(text).unwrap()
    }

    fn d4() -> Digraph {
        d("vertices v1 v2\nedge a v1 v1\nedge b v1 v2\nedge c v2 v1\n")
    }

    fn d3() -> Digraph {
        d("vertices v1 v2\nedge a v2 v2\nedge b v2 v2\nedge c v2 v1\nedge d v1 v2\n")
    }

    fn rational_grid(m: &Mat<Rational>) -> Vec<Vec<Rational>> {
        (0..m.rows())
            .map(|r| (0..m.cols()).map(|c| m.at(r, c).clone()).collect())
            .collect()
    }

    #[test]
    fn incidence_two_cycle() {
        let d0 = d("vertices w1 w2\nedge e1 w1 w2\nedge e2 w2 w1\n");
        let m = incidence_matrix(&d0);
        assert_eq!(
            rational_grid(&m),
            vec![
                vec![rat_int(1), rat_int(-1)],
                vec![rat_int(-1), rat_int(1)]
            ]
        );
    }

    #[test]
    fn incidence_loop_is_zero_column() {
        let g = d("vertices v\nedge a v v\n");
        let m = incidence_matrix(&g);
        assert!(m.at(0, 0).is_zero());
    }

    #[test]
    fn adjacency_d4() {
        let a = adjacency_matrix(&d4());
        assert_eq!(
            rational_grid(&a),
            vec![vec![rat_int(1), rat_int(1)], vec![rat_int(1), rat_int(0)]]
        );
    }

    #[test]
    fn skew_identity_entrywise() {
        for g in [d3(), d4()] {
            let a = adjacency_matrix(&g);
            let s = match build_matrix(&g, MatrixKind::Skew).unwrap() {
                BuiltMatrix::Exact(ExactMatrix::Rational(m)) => m,
                _ => unreachable!(),
            };
            assert_eq!(s, a.sub(&a.transpose()));
        }
    }

    #[test]
    fn laplacian_matches_direct_count() {
        // Independent oracle: for v != w the entry is minus the number of
        // non-loop edges between v and w in either direction; the diagonal
        // counts non-loop edges incident to v.
        let g = d("vertices v1 v2 v3\n\
                   edge a v1 v1\nedge b v1 v2\nedge c v1 v3\nedge d v1 v3\n\
                   edge e v2 v2\nedge f v2 v2\nedge g v2 v3\nedge h v3 v3\n");
        let lap = match build_matrix(&g, MatrixKind::Laplacian).unwrap() {
            BuiltMatrix::Exact(ExactMatrix::Rational(m)) => m,
            _ => unreachable!(),
        };
        let n = g.vertex_count();
        for r in 0..n {
            for c in 0..n {
                let mut expected = 0i64;
                for j in 0..g.edge_count() {
                    let (s, t) = g.endpoints(j);
                    if s == t {
                        continue;
                    }
                    if r == c && (s == r || t == r) {
                        expected += 1;
                    }
                    if r != c && ((s == r && t == c) || (s == c && t == r)) {
                        expected -= 1;
                    }
                }
                assert_eq!(lap.at(r, c), &rat_int(expected), "entry ({r},{c})");
            }
        }
    }

    #[test]
    fn hermitian_d1_entries() {
        let g = d("vertices v1 v2 v3\n\
                   edge a v1 v1\nedge b v1 v2\nedge c v1 v3\nedge d v1 v3\n\
                   edge e v2 v2\nedge f v2 v2\nedge g v2 v3\nedge h v3 v3\n");
        let h = hermitian_matrix(&g);
        assert_eq!(h.at(0, 1), &GaussianRational::i());
        assert_eq!(h.at(1, 0), &(-GaussianRational::i()));
        assert_eq!(h.at(0, 0), &GaussianRational::one());
        // equals its conjugate transpose
        for r in 0..3 {
            for c in 0..3 {
                let a = h.at(r, c).clone();
                let b = h.at(c, r).clone();
                assert_eq!(a.re, b.re);
                assert_eq!(a.im, -b.im);
            }
        }
    }

    #[test]
    fn transition_rows_sum_to_one() {
        for (g, binary) in [(d4(), false), (d3(), false), (d3(), true)] {
            let p = transition_matrix(&g, binary).unwrap();
            for r in 0..p.rows() {
                let sum: Rational = (0..p.cols()).map(|c| p.at(r, c).clone()).sum();
                assert!(sum.is_one());
            }
        }
    }

    #[test]
    fn transition_examples() {
        let p = transition_matrix(&d4(), false).unwrap();
        assert_eq!(
            rational_grid(&p),
            vec![vec![rat(1, 2), rat(1, 2)], vec![rat_int(1), rat_int(0)]]
        );
        let single_loop = d("vertices v\nedge a v v\n");
        let p1 = transition_matrix(&single_loop, false).unwrap();
        assert_eq!(rational_grid(&p1), vec![vec![rat_int(1)]]);
        let pb = transition_matrix(&d3(), true).unwrap();
        assert_eq!(
            rational_grid(&pb),
            vec![vec![rat_int(0), rat_int(1)], vec![rat(1, 2), rat(1, 2)]]
        );
        let sink = d("vertices a b\nedge e a b\n");
        assert_eq!(
            transition_matrix(&sink, false),
            Err(MatrixError::SinkVertex("b".into()))
        );
    }

    #[test]
    fn perron_exact() {
        let phi = perron_vector(&d4(), false).unwrap();
        assert_eq!(phi, vec![rat(2, 3), rat(1, 3)]);
        let c3 = d("vertices a b c\nedge e1 a b\nedge e2 b c\nedge e3 c a\n");
        assert_eq!(
            perron_vector(&c3, false).unwrap(),
            vec![rat(1, 3), rat(1, 3), rat(1, 3)]
        );
        let c2 = d("vertices a b\nedge e1 a b\nedge e2 b a\n");
        assert_eq!(
            perron_vector(&c2, false).unwrap(),
            vec![rat(1, 2), rat(1, 2)]
        );
        // exact residual: phi P = phi
        let p = transition_matrix(&d4(), false).unwrap();
        let phi = perron_vector(&d4(), false).unwrap();
        for c in 0..2 {
            let lhs: Rational = (0..2).map(|r| &phi[r] * p.at(r, c)).sum();
            assert_eq!(lhs, phi[c]);
        }
    }

    #[test]
    fn perron_requires_strong_connectivity() {
        let g = d("vertices a b\nedge e a b\nedge l b b\n");
        assert_eq!(
            perron_vector(&g, false),
            Err(MatrixError::NotStronglyConnected)
        );
    }

    #[test]
    fn combinatorial_laplacian_d4() {
        let m = match build_matrix(&d4(), MatrixKind::CombinatorialLaplacian).unwrap() {
            BuiltMatrix::Exact(ExactMatrix::Rational(m)) => m,
            _ => unreachable!(),
        };
        assert_eq!(
            rational_grid(&m),
            vec![vec![rat(1, 3), rat(-1, 3)], vec![rat(-1, 3), rat(1, 3)]]
        );
    }

    #[test]
    fn normalized_laplacian_symmetric_and_na() {
        let m = match build_matrix(&d4(), MatrixKind::NormalizedLaplacian).unwrap() {
            BuiltMatrix::Float(m) => m,
            _ => unreachable!(),
        };
        for r in 0..2 {
            for c in 0..2 {
                assert_eq!(m.at(r, c), m.at(c, r));
            }
        }
        let not_sc = d("vertices a b\nedge e a b\nedge l b b\n");
        assert_eq!(
            build_matrix(&not_sc, MatrixKind::NormalizedLaplacian),
            Err(MatrixError::NotStronglyConnected)
        );
    }

    #[test]
    fn binary_kinds_factor_through_unparalleled() {
        let g = d("vertices v1 v2 v3\n\
                   edge a v1 v1\nedge b v1 v2\nedge c v1 v3\nedge d v1 v3\n\
                   edge e v2 v2\nedge f v2 v2\nedge g v2 v3\nedge h v3 v3\n");
        let u = g.unparalleled();
        for (binary, plain) in [
            (MatrixKind::BinaryAdjacency, MatrixKind::Adjacency),
            (MatrixKind::BinarySkew, MatrixKind::Skew),
            (MatrixKind::BinarySkewLaplacian, MatrixKind::SkewLaplacian),
        ] {
            assert_eq!(
                build_matrix(&g, binary).unwrap(),
                build_matrix(&u, plain).unwrap()
            );
        }
    }

    #[test]
    fn empty_digraph_matrices_are_empty() {
        let g = d("vertices\n");
        for kind in MatrixKind::ALL {
            match build_matrix(&g, kind) {
                Ok(BuiltMatrix::Exact(m)) => assert_eq!(m.dimension(), 0),
                Ok(BuiltMatrix::Float(m)) => assert_eq!(m.dimension(), 0),
                Err(MatrixError::NotStronglyConnected) => assert!(kind.is_perron_based()),
                Err(e) => panic!("unexpected error {e}"),
            }
        }
    }

    #[test]
    fn determinant_and_solver() {
        let m = Mat::from_fn(2, 2, |r, c| rat_int([[1, 2], [3, 4]][r][c]));
        assert_eq!(m.determinant(), rat_int(-2));
        let x = solve_exact(&m, &[rat_int(5), rat_int(11)]).unwrap();
        assert_eq!(x, vec![rat_int(1), rat_int(2)]);
        let singular = Mat::from_fn(2, 2, |r, c| rat_int([[1, 2], [2, 4]][r][c]));
        assert_eq!(singular.determinant(), rat_int(0));
        assert!(solve_exact(&singular, &[rat_int(1), rat_int(2)]).is_none());
    }

    #[test]
    fn kind_tokens_round_trip() {
        for kind in MatrixKind::ALL {
            assert_eq!(MatrixKind::parse(kind.token()), Some(kind));
        }
        assert_eq!(MatrixKind::parse("bogus"), None);
    }
}

//! Expected spectra for the reference examples, frozen as exact polynomials
//! where closed forms exist and as decimal lists elsewhere.
//!
//! Exact entries are assembled from linear and quadratic factors: a
//! conjugate pair like `1 ± sqrt(2)` is the quadratic with root sum 2 and
//! product -1, a pair `± i sqrt(6)` is `t^2 + 6`, and so on, so every
//! closed-form multiset reduces to rational coefficients. Decimal entries
//! are matched against the float roots of the exact polynomial within
//! `5e-5`; normalized-Laplacian values are matched within `1e-9`.

use crate::matrices::{rat, rat_int, MatrixKind};
use crate::spectra::CharPoly;

/// Tolerance for decimal golden values.
pub const DECIMAL_TOLERANCE: f64 = 5e-5;
/// Tolerance for normalized-Laplacian golden values.
pub const FLOAT_KIND_TOLERANCE: f64 = 1e-9;

/// Expected spectrum of one digraph under one kind.
#[derive(Clone, Debug)]
pub enum Expected {
    /// Exact characteristic polynomial, compared with zero tolerance.
    Poly(CharPoly),
    /// Reported decimal eigenvalues, matched against float roots within
    /// [`DECIMAL_TOLERANCE`].
    Decimals(Vec<f64>),
    /// Closed-form real eigenvalues of a float-only kind, matched within
    /// [`FLOAT_KIND_TOLERANCE`].
    Reals(Vec<f64>),
}

/// One golden assertion: the labeled digraph, the kind, and the expectation.
#[derive(Clone, Debug)]
pub struct Golden {
    pub digraph: &'static str,
    pub kind: MatrixKind,
    pub expected: Expected,
}

fn lin(root: i64) -> CharPoly {
    CharPoly::linear(rat_int(root))
}

fn linr(n: i64, d: i64) -> CharPoly {
    CharPoly::linear(rat(n, d))
}

fn quad(sum: i64, product: i64) -> CharPoly {
    CharPoly::quadratic(rat_int(sum), rat_int(product))
}

fn quadr(sum: (i64, i64), product: (i64, i64)) -> CharPoly {
    CharPoly::quadratic(rat(sum.0, sum.1), rat(product.0, product.1))
}

fn tpow(k: usize) -> CharPoly {
    let mut coeffs = vec![rat_int(0); k + 1];
    coeffs[0] = rat_int(1);
    CharPoly::from_coeffs(coeffs)
}

fn prod(factors: &[CharPoly]) -> CharPoly {
    factors
        .iter()
        .fold(CharPoly::one(), |acc, f| acc.mul(f))
}

fn coeffs(values: &[i64]) -> CharPoly {
    CharPoly::from_coeffs(values.iter().map(|&c| rat_int(c)).collect())
}

fn poly(digraph: &'static str, kind: MatrixKind, p: CharPoly) -> Golden {
    Golden {
        digraph,
        kind,
        expected: Expected::Poly(p),
    }
}

fn dec(digraph: &'static str, kind: MatrixKind, values: &[f64]) -> Golden {
    Golden {
        digraph,
        kind,
        expected: Expected::Decimals(values.to_vec()),
    }
}

fn reals(digraph: &'static str, kind: MatrixKind, values: &[f64]) -> Golden {
    Golden {
        digraph,
        kind,
        expected: Expected::Reals(values.to_vec()),
    }
}

pub fn d1_goldens() -> Vec<Golden> {
    use MatrixKind::*;
    let phi_pair = quad(1, -1); // (1 ± sqrt 5)/2
    vec![
        // Laplace
        poly("D1", Laplacian, prod(&[tpow(1), lin(3), lin(5)])),
        poly("D1^(S)", Laplacian, prod(&[tpow(1), lin(6), lin(4), lin(4)])),
        poly("D1^(R)", Laplacian, prod(&[tpow(1), lin(5), quad(7, 8)])),
        poly("D1^(O)", Laplacian, prod(&[tpow(1), lin(2), quad(8, 14)])),
        poly("D1^(I)", Laplacian, prod(&[tpow(1), lin(6), quad(8, 14)])),
        dec("D1^(C)", Laplacian, &[6.6262, 5.0, 3.51514, 0.858664, 0.0]),
        // adjacency
        poly("D1", Adjacency, prod(&[lin(2), lin(1), lin(1)])),
        poly("D1^(S)", Adjacency, prod(&[tpow(1), lin(2), lin(1), lin(1)])),
        poly("D1^(R)", Adjacency, prod(&[phi_pair.clone(), lin(1), lin(1)])),
        poly("D1^(O)", Adjacency, prod(&[tpow(1), lin(2), lin(1), lin(1)])),
        poly("D1^(I)", Adjacency, prod(&[tpow(1), lin(2), lin(1), lin(1)])),
        dec("D1^(C)", Adjacency, &[2.80194, 1.44504, 1.0, 1.0, -0.24698]),
        // binary adjacency
        poly("D1", BinaryAdjacency, prod(&[lin(1), lin(1), lin(1)])),
        poly("D1^(S)", BinaryAdjacency, prod(&[tpow(1), lin(1), lin(1), lin(1)])),
        poly("D1^(R)", BinaryAdjacency, prod(&[phi_pair.clone(), lin(1), lin(1)])),
        poly("D1^(O)", BinaryAdjacency, prod(&[tpow(1), lin(1), lin(1), lin(1)])),
        poly("D1^(I)", BinaryAdjacency, prod(&[tpow(1), lin(2), lin(1), lin(1)])),
        poly("D1^(C)", BinaryAdjacency, prod(&[quad(2, -1), lin(1), lin(1), lin(1)])),
        // symmetric adjacency
        dec("D1", SymmetricAdjacency, &[10.0494, 1.719, 0.231548]),
        dec("D1^(S)", SymmetricAdjacency, &[12.7148, 1.74411, 0.541128, 0.0]),
        dec("D1^(R)", SymmetricAdjacency, &[8.73968, 1.46182, 0.684079, 0.114421]),
        poly("D1^(O)", SymmetricAdjacency, prod(&[tpow(1), lin(4), quad(9, 10)])),
        dec("D1^(I)", SymmetricAdjacency, &[10.8363, 1.86713, 0.296548, 0.0]),
        dec(
            "D1^(C)",
            SymmetricAdjacency,
            &[11.5864, 4.6524, 1.42213, 0.294867, 0.0442395],
        ),
        // symmetric binary adjacency
        dec("D1", SymmetricBinaryAdjacency, &[5.04892, 0.643104, 0.307979]),
        dec(
            "D1^(S)",
            SymmetricBinaryAdjacency,
            &[7.89167, 0.785825, 0.322504, 0.0],
        ),
        poly(
            "D1^(R)",
            SymmetricBinaryAdjacency,
            prod(&[quad(6, 1), lin(1), lin(1)]),
        ),
        poly(
            "D1^(O)",
            SymmetricBinaryAdjacency,
            prod(&[tpow(1), lin(4), quad(3, 1)]),
        ),
        dec(
            "D1^(I)",
            SymmetricBinaryAdjacency,
            &[8.12071, 1.31922, 0.560067, 0.0],
        ),
        dec(
            "D1^(C)",
            SymmetricBinaryAdjacency,
            &[7.19584, 3.35194, 0.844535, 0.511755, 0.0959274],
        ),
        // line adjacency
        poly("D1", LineAdjacency, prod(&[lin(2), lin(1), lin(1), tpow(5)])),
        poly("D1^(S)", LineAdjacency, prod(&[lin(2), lin(1), lin(1), tpow(8)])),
        poly(
            "D1^(R)",
            LineAdjacency,
            prod(&[phi_pair.clone(), lin(1), lin(1), tpow(5)]),
        ),
        poly("D1^(O)", LineAdjacency, prod(&[lin(2), lin(1), lin(1), tpow(6)])),
        poly("D1^(I)", LineAdjacency, prod(&[lin(2), lin(1), lin(1), tpow(8)])),
        dec(
            "D1^(C)",
            LineAdjacency,
            &[2.80194, 1.44504, 1.0, 1.0, -0.24698, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
        ),
        // Hermitian
        poly("D1", Hermitian, prod(&[lin(1), quad(2, -2)])),
        dec("D1^(S)", Hermitian, &[3.22001, -1.74108, 1.23136, 0.289713]),
        dec("D1^(R)", Hermitian, &[2.86081, 1.2541, -1.11491, 0.0]),
        dec("D1^(O)", Hermitian, &[2.81361, -1.34292, 1.0, 0.529317]),
        dec("D1^(I)", Hermitian, &[3.34292, 1.47068, -0.813607, 0.0]),
        poly(
            "D1^(C)",
            Hermitian,
            prod(&[tpow(1), lin(3), lin(2), lin(1), lin(-1)]),
        ),
        // skew
        poly("D1", Skew, prod(&[tpow(1), quad(0, 6)])),
        poly("D1^(S)", Skew, prod(&[tpow(2), quad(0, 9)])),
        poly("D1^(R)", Skew, prod(&[tpow(2), quad(0, 6)])),
        // ± i sqrt((7 ± 3 sqrt 5)/2): product of the two quadratics
        poly("D1^(O)", Skew, coeffs(&[1, 0, 7, 0, 1])),
        poly("D1^(I)", Skew, coeffs(&[1, 0, 7, 0, 1])),
        poly("D1^(C)", Skew, prod(&[tpow(3), quad(0, 6)])),
        // binary skew
        poly("D1", BinarySkew, prod(&[tpow(1), quad(0, 3)])),
        poly("D1^(S)", BinarySkew, coeffs(&[1, 0, 6, 0, 1])), // ± i sqrt(3 ± 2 sqrt 2)
        poly("D1^(R)", BinarySkew, prod(&[tpow(2), quad(0, 3)])),
        poly("D1^(O)", BinarySkew, prod(&[tpow(2), quad(0, 4)])),
        poly("D1^(I)", BinarySkew, coeffs(&[1, 0, 4, 0, 1])), // ± i sqrt(2 ± sqrt 3)
        poly("D1^(C)", BinarySkew, prod(&[tpow(3), quad(0, 3)])),
        // skew Laplace
        poly("D1", SkewLaplacian, prod(&[tpow(1), quad(0, -3)])),
        poly("D1^(S)", SkewLaplacian, prod(&[tpow(1), lin(2), quad(-2, -2)])),
        poly("D1^(R)", SkewLaplacian, prod(&[tpow(2), quad(0, -3)])),
        poly("D1^(O)", SkewLaplacian, tpow(4)),
        poly("D1^(I)", SkewLaplacian, prod(&[tpow(1), lin(2), quad(-2, -2)])),
        poly("D1^(C)", SkewLaplacian, prod(&[tpow(3), quad(0, -3)])),
        // binary skew Laplace
        poly("D1", BinarySkewLaplacian, prod(&[tpow(1), lin(1), lin(-1)])),
        poly("D1^(S)", BinarySkewLaplacian, prod(&[tpow(2), lin(2), lin(-2)])),
        poly("D1^(R)", BinarySkewLaplacian, prod(&[tpow(2), lin(1), lin(-1)])),
        poly("D1^(O)", BinarySkewLaplacian, tpow(4)),
        poly("D1^(I)", BinarySkewLaplacian, prod(&[tpow(1), lin(-2), lin(1), lin(1)])),
        poly("D1^(C)", BinarySkewLaplacian, prod(&[tpow(3), lin(1), lin(-1)])),
    ]
}

pub fn d2_goldens() -> Vec<Golden> {
    use MatrixKind::*;
    vec![
        poly("D2", Laplacian, prod(&[tpow(1), lin(1), lin(3)])),
        dec("D2^(P)", Laplacian, &[7.43874, 4.451, 3.15208, 0.958176, 0.0]),
        poly("D2", Adjacency, prod(&[lin(2), lin(1), lin(1)])),
        dec("D2^(P)", Adjacency, &[2.80194, 1.44504, 1.0, 1.0, -0.24698]),
        poly("D2", BinaryAdjacency, prod(&[lin(1), lin(1), lin(1)])),
        poly(
            "D2^(P)",
            BinaryAdjacency,
            prod(&[quad(2, -1), lin(1), lin(1), lin(1)]),
        ),
        dec("D2", SymmetricAdjacency, &[6.15633, 1.3691, 0.474572]),
        dec(
            "D2^(P)",
            SymmetricAdjacency,
            &[11.3293, 4.32428, 1.50561, 0.824316, 0.0164465],
        ),
        dec("D2", SymmetricBinaryAdjacency, &[3.24698, 1.55496, 0.198062]),
        dec(
            "D2^(P)",
            SymmetricBinaryAdjacency,
            &[7.45504, 2.40912, 1.52115, 0.547884, 0.0668084],
        ),
        poly("D2", LineAdjacency, prod(&[lin(2), lin(1), lin(1), tpow(3)])),
        dec(
            "D2^(P)",
            LineAdjacency,
            &[2.80194, 1.44504, 1.0, 1.0, -0.24698, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
        ),
        poly("D2", Hermitian, prod(&[lin(1), quad(2, -1)])),
        // (t - 1) ((t-1)^4 - 5 (t-1)^2 + 2): roots 1 ± sqrt((5 ± sqrt 17)/2), 1
        poly("D2^(P)", Hermitian, coeffs(&[1, -5, 5, 5, -8, 2])),
        poly("D2", Skew, prod(&[tpow(1), quad(0, 2)])),
        // ± i sqrt(3 ± sqrt 5), 0
        poly("D2^(P)", Skew, coeffs(&[1, 0, 6, 0, 4, 0])),
        poly("D2", BinarySkew, prod(&[tpow(1), quad(0, 2)])),
        // ± i sqrt((3 ± sqrt 5)/2), 0
        poly("D2^(P)", BinarySkew, coeffs(&[1, 0, 3, 0, 1, 0])),
        poly("D2", SkewLaplacian, prod(&[tpow(1), quad(0, 1)])),
        poly("D2^(P)", SkewLaplacian, prod(&[tpow(3), lin(1), lin(-1)])),
        poly("D2", BinarySkewLaplacian, prod(&[tpow(1), quad(0, 1)])),
        poly("D2^(P)", BinarySkewLaplacian, tpow(5)),
    ]
}

pub fn d2prime_goldens() -> Vec<Golden> {
    use MatrixKind::*;
    vec![
        poly("D2'", BinaryAdjacency, prod(&[tpow(1), lin(2), lin(1), lin(1)])),
        // (3 ± sqrt 5)/2, 1 ± sqrt 2, (1 ± sqrt 5)/2, 1, 1
        poly(
            "D2'^(P)",
            BinaryAdjacency,
            prod(&[quad(3, 1), quad(2, -1), quad(1, -1), lin(1), lin(1)]),
        ),
    ]
}

pub fn d3_goldens() -> Vec<Golden> {
    use MatrixKind::*;
    let s2 = 2.0_f64.sqrt();
    let s3 = 3.0_f64.sqrt();
    vec![
        poly("D3", BinaryAdjacency, quad(1, -1)),
        poly("D3^(O)", BinaryAdjacency, prod(&[tpow(1), quad(2, -1)])),
        poly("D3^(I)", BinaryAdjacency, prod(&[tpow(1), quad(2, -1)])),
        reals("D3", NormalizedLaplacian, &[4.0 / 3.0, 0.0]),
        reals(
            "D3^(O)",
            NormalizedLaplacian,
            &[(13.0 + 2.0 * s2) / 12.0, (13.0 - 2.0 * s2) / 12.0, 0.0],
        ),
        reals(
            "D3^(I)",
            NormalizedLaplacian,
            &[(7.0 + s3) / 6.0, (7.0 - s3) / 6.0, 0.0],
        ),
        poly("D3", CombinatorialLaplacian, prod(&[tpow(1), linr(1, 2)])),
        poly(
            "D3^(O)",
            CombinatorialLaplacian,
            prod(&[tpow(1), quadr((9, 14), (69, 784))]),
        ),
        poly(
            "D3^(I)",
            CombinatorialLaplacian,
            prod(&[tpow(1), quadr((3, 4), (69, 576))]),
        ),
        reals("D3", BinaryNormalizedLaplacian, &[3.0 / 2.0, 0.0]),
        reals(
            "D3^(O)",
            BinaryNormalizedLaplacian,
            &[(13.0 + 2.0 * s2) / 12.0, (13.0 - 2.0 * s2) / 12.0, 0.0],
        ),
        reals(
            "D3^(I)",
            BinaryNormalizedLaplacian,
            &[(7.0 + s3) / 6.0, (7.0 - s3) / 6.0, 0.0],
        ),
        poly("D3", BinaryCombinatorialLaplacian, prod(&[tpow(1), linr(2, 3)])),
        poly(
            "D3^(O)",
            BinaryCombinatorialLaplacian,
            prod(&[tpow(1), quadr((9, 14), (69, 784))]),
        ),
        poly(
            "D3^(I)",
            BinaryCombinatorialLaplacian,
            prod(&[tpow(1), quadr((3, 4), (69, 576))]),
        ),
    ]
}

pub fn d4_goldens() -> Vec<Golden> {
    use MatrixKind::*;
    let s13 = 13.0_f64.sqrt();
    let splice_decimals = [2.35567, 1.47726, -1.09529, 0.26236];
    let mut out = vec![
        poly("D4", Laplacian, prod(&[tpow(1), lin(4)])),
        poly("D4^(R)", Laplacian, tpow(1)),
        poly("D4^(O)", Laplacian, prod(&[tpow(1), lin(3), lin(5)])),
        poly("D4^(I)", Laplacian, prod(&[tpow(1), lin(3), lin(5)])),
        // 2(2 ± sqrt 2), 4, 0
        poly("D4^(C)", Laplacian, prod(&[tpow(1), lin(4), quad(8, 8)])),
        poly("D4", Adjacency, quad(1, -1)),
        poly("D4^(R)", Adjacency, lin(2)),
        poly("D4^(O)", Adjacency, prod(&[tpow(1), quad(1, -1)])),
        poly("D4^(I)", Adjacency, prod(&[tpow(1), quad(1, -1)])),
        dec("D4^(C)", Adjacency, &splice_decimals),
        poly("D4", BinaryAdjacency, quad(1, -1)),
        poly("D4^(R)", BinaryAdjacency, lin(1)),
        poly("D4^(O)", BinaryAdjacency, prod(&[tpow(1), quad(1, -1)])),
        poly("D4^(I)", BinaryAdjacency, prod(&[tpow(1), quad(1, -1)])),
        dec("D4^(C)", BinaryAdjacency, &splice_decimals),
        poly("D4", SymmetricAdjacency, quad(3, 1)),
        poly("D4^(R)", SymmetricAdjacency, lin(4)),
        poly("D4^(O)", SymmetricAdjacency, prod(&[tpow(1), lin(4), lin(1)])),
        poly("D4^(I)", SymmetricAdjacency, prod(&[tpow(1), lin(4), lin(1)])),
        dec("D4^(C)", SymmetricAdjacency, &[5.5492, 2.1823, 1.19967, 0.0688326]),
        poly("D4", SymmetricBinaryAdjacency, quad(3, 1)),
        poly("D4^(R)", SymmetricBinaryAdjacency, lin(1)),
        poly("D4^(O)", SymmetricBinaryAdjacency, prod(&[tpow(1), lin(4), lin(1)])),
        poly("D4^(I)", SymmetricBinaryAdjacency, prod(&[tpow(1), lin(4), lin(1)])),
        dec(
            "D4^(C)",
            SymmetricBinaryAdjacency,
            &[5.5492, 2.1823, 1.19967, 0.0688326],
        ),
        poly("D4", LineAdjacency, prod(&[tpow(1), quad(1, -1)])),
        poly("D4^(R)", LineAdjacency, prod(&[tpow(1), lin(2)])),
        poly("D4^(O)", LineAdjacency, prod(&[tpow(3), quad(1, -1)])),
        poly("D4^(I)", LineAdjacency, prod(&[tpow(3), quad(1, -1)])),
        dec(
            "D4^(C)",
            LineAdjacency,
            &[2.35567, 1.47726, -1.09529, 0.26236, 0.0, 0.0, 0.0, 0.0, 0.0],
        ),
        poly("D4", Hermitian, quad(1, -1)),
        poly("D4^(R)", Hermitian, lin(1)),
        poly("D4^(O)", Hermitian, prod(&[lin(1), quad(0, -3)])),
        poly("D4^(I)", Hermitian, prod(&[lin(1), quad(0, -3)])),
        dec("D4^(C)", Hermitian, &splice_decimals),
        reals("D4", NormalizedLaplacian, &[1.5, 0.0]),
        reals("D4^(R)", NormalizedLaplacian, &[0.0]),
        reals("D4^(O)", NormalizedLaplacian, &[1.75, 0.75, 0.0]),
        reals("D4^(I)", NormalizedLaplacian, &[1.75, 0.75, 0.0]),
        reals(
            "D4^(C)",
            NormalizedLaplacian,
            &[1.5, (7.0 + s13) / 12.0, (7.0 - s13) / 12.0, 0.0],
        ),
        poly("D4", CombinatorialLaplacian, prod(&[tpow(1), linr(2, 3)])),
        poly("D4^(R)", CombinatorialLaplacian, tpow(1)),
        poly(
            "D4^(O)",
            CombinatorialLaplacian,
            prod(&[tpow(1), linr(7, 12), linr(1, 4)]),
        ),
        poly(
            "D4^(I)",
            CombinatorialLaplacian,
            prod(&[tpow(1), linr(7, 12), linr(1, 4)]),
        ),
        // (2 ± sqrt 2)/9, 2/9, 0
        poly(
            "D4^(C)",
            CombinatorialLaplacian,
            prod(&[tpow(1), linr(2, 9), quadr((4, 9), (2, 81))]),
        ),
        reals("D4", BinaryNormalizedLaplacian, &[1.5, 0.0]),
        reals("D4^(R)", BinaryNormalizedLaplacian, &[0.0]),
        reals("D4^(O)", BinaryNormalizedLaplacian, &[1.75, 0.75, 0.0]),
        reals("D4^(I)", BinaryNormalizedLaplacian, &[1.75, 0.75, 0.0]),
        reals(
            "D4^(C)",
            BinaryNormalizedLaplacian,
            &[1.5, (7.0 + s13) / 12.0, (7.0 - s13) / 12.0, 0.0],
        ),
        poly("D4", BinaryCombinatorialLaplacian, prod(&[tpow(1), linr(2, 3)])),
        poly("D4^(R)", BinaryCombinatorialLaplacian, tpow(1)),
        poly(
            "D4^(O)",
            BinaryCombinatorialLaplacian,
            prod(&[tpow(1), linr(7, 12), linr(1, 4)]),
        ),
        poly(
            "D4^(I)",
            BinaryCombinatorialLaplacian,
            prod(&[tpow(1), linr(7, 12), linr(1, 4)]),
        ),
        poly(
            "D4^(C)",
            BinaryCombinatorialLaplacian,
            prod(&[tpow(1), linr(2, 9), quadr((4, 9), (2, 81))]),
        ),
    ];
    for kind in [Skew, BinarySkew, SkewLaplacian, BinarySkewLaplacian] {
        let inner = if matches!(kind, Skew | BinarySkew) {
            quad(0, 2)
        } else {
            quad(0, 1)
        };
        out.push(poly("D4", kind, tpow(2)));
        out.push(poly("D4^(R)", kind, tpow(1)));
        out.push(poly("D4^(O)", kind, prod(&[tpow(1), inner.clone()])));
        out.push(poly("D4^(I)", kind, prod(&[tpow(1), inner])));
        out.push(poly("D4^(C)", kind, tpow(4)));
    }
    out
}

pub fn d5_goldens() -> Vec<Golden> {
    use MatrixKind::*;
    let mut out = Vec::new();
    for kind in [Skew, BinarySkew, SkewLaplacian, BinarySkewLaplacian] {
        out.push(poly("D5", kind, prod(&[tpow(1), quad(0, 3)])));
        out.push(poly("D5^(R)", kind, tpow(2)));
    }
    out
}

pub fn d0_goldens() -> Vec<Golden> {
    use MatrixKind::*;
    vec![poly("D0", Laplacian, prod(&[tpow(1), lin(4)]))]
}

/// `Spec_Lap` of the source-adjunction family member with `m` adjoined
/// sources: `{m+4, m+2, 2 (m-1 times), 0}`.
pub fn family_laplace_poly(m: usize) -> CharPoly {
    let mut factors = vec![tpow(1), lin(m as i64 + 4)];
    if m >= 1 {
        factors.push(lin(m as i64 + 2));
        for _ in 1..m {
            factors.push(lin(2));
        }
    }
    prod(&factors)
}

//! The 81-dimensional algebra D of differential operators on M.
//!
//! The differential of a function has a unique left-normal form
//! d f = dx·∂x(f) + dy·∂y(f); this defines the twisted derivations ∂x, ∂y.
//! Together with left multiplications they generate all of End(M): the 81
//! monomials x^r y^s ∂x^a ∂y^b (a, b ∈ {0,1,2}) are linearly independent,
//! so D = End(M), graded by operator order with dimensions 9+18+27+18+9.
//!
//! The twisting morphisms σ, τ : M → M₂(M) record how functions move past
//! dx, dy; the scaling operators μx, μy repackage the commutation
//! relations; and the left action of the generators of H is realized by
//! explicit differential operators of order ≤ 4.

use std::sync::LazyLock;

use crate::env_h;
use crate::hopf::{elem_add, elem_zero, Elem};
use crate::linalg::Mat;
use crate::qplane;
use crate::report::Report;
use crate::scalar::Scalar;
use crate::wz_forms::{self, WZForm};

/// Dimension of D = End(M).
pub const DIM: usize = 81;

/// Index of the monomial operator x^r y^s ∂x^a ∂y^b.
pub fn op_index(r: usize, s: usize, a: usize, b: usize) -> usize {
    9 * qplane::idx(r, s) + 3 * a + b
}

/// Exponents (r, s, a, b) of a monomial operator index.
pub fn op_exponents(i: usize) -> (usize, usize, usize, usize) {
    let (r, s) = qplane::exponents(i / 9);
    (r, s, (i % 9) / 3, i % 3)
}

/// Operator order a + b of a monomial operator index.
pub fn op_order(i: usize) -> usize {
    let (_, _, a, b) = op_exponents(i);
    a + b
}

/// Printable name of a monomial operator, e.g. `x^2*y ∂x^2 ∂y`.
pub fn op_name(i: usize) -> String {
    let (r, s, a, b) = op_exponents(i);
    let mut parts = Vec::new();
    if r != 0 || s != 0 {
        parts.push(qplane::monomial_name(r, s));
    }
    for (sym, e) in [("∂x", a), ("∂y", b)] {
        match e {
            0 => {}
            1 => parts.push(sym.to_string()),
            _ => parts.push(format!("{sym}^{e}")),
        }
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join(" ")
    }
}

// ---------------------------------------------------------------------------
// The left-normal form of one-forms and the partial derivatives
// ---------------------------------------------------------------------------

/// 18×18 change of basis: column 9ξ + m holds the coefficients (in the
/// standard f·dξ basis of Ω¹) of the product dξ·x^r y^s.
static LEFT_NORMAL: LazyLock<Mat<Scalar>> = LazyLock::new(|| {
    let mut m = Mat::zeros(18, 18);
    for xi in 0..2 {
        for mono in 0..9 {
            // dξ (a degree-1 basis form over the unit monomial) times the
            // degree-0 basis form x^r y^s.
            let dxi = wz_forms::flat1(xi, 0);
            for (k, c) in wz_forms::WZ_ALGEBRA.product_basis(dxi, mono) {
                let (deg, m2, xi2) = wz_forms::decode(*k);
                assert_eq!(deg, 1, "dξ·f must stay in degree one");
                m[(9 * xi2.unwrap() + m2, 9 * xi + mono)] = c.clone();
            }
        }
    }
    m
});

static LEFT_NORMAL_INV: LazyLock<Mat<Scalar>> = LazyLock::new(|| {
    LEFT_NORMAL
        .inverse()
        .expect("the forms dξ·x^r y^s are a basis of Ω¹")
});

/// Write a one-form as dx·g1 + dy·g2 and return (g1, g2).
pub fn left_normal_components(u: &WZForm) -> (Elem, Elem) {
    assert!(
        u.component(1) == *u,
        "left-normal components are defined for one-forms"
    );
    let v: Vec<Scalar> = (0..18).map(|i| u.coeffs[9 + i].clone()).collect();
    let w = LEFT_NORMAL_INV.mul_vec(&v);
    (w[0..9].to_vec(), w[9..18].to_vec())
}

/// Matrix of ∂x on the monomial basis of M.
pub static PARTIAL_X: LazyLock<Mat<Scalar>> = LazyLock::new(|| partials().0);
/// Matrix of ∂y on the monomial basis of M.
pub static PARTIAL_Y: LazyLock<Mat<Scalar>> = LazyLock::new(|| partials().1);

fn partials() -> (Mat<Scalar>, Mat<Scalar>) {
    let mut px = Mat::zeros(9, 9);
    let mut py = Mat::zeros(9, 9);
    for m in 0..9 {
        let f = WZForm::from_function(&qplane::ALGEBRA.basis_elem(m));
        let (g1, g2) = left_normal_components(&wz_forms::d(&f));
        for i in 0..9 {
            px[(i, m)] = g1[i].clone();
            py[(i, m)] = g2[i].clone();
        }
    }
    (px, py)
}

/// ∂x(f), the dx-component of the left-normal form of d f.
pub fn partial_x(f: &[Scalar]) -> Elem {
    PARTIAL_X.mul_vec(f)
}

/// ∂y(f), the dy-component of the left-normal form of d f.
pub fn partial_y(f: &[Scalar]) -> Elem {
    PARTIAL_Y.mul_vec(f)
}

// ---------------------------------------------------------------------------
// The twisting morphisms σ and τ
// ---------------------------------------------------------------------------

/// A 2×2 matrix with entries in M, the target of the morphisms σ and τ.
pub type MMat2 = [[Elem; 2]; 2];

fn mmat2_identity() -> MMat2 {
    let one = qplane::ALGEBRA.unit();
    let zero = elem_zero(9);
    [
        [one.clone(), zero.clone()],
        [zero, one],
    ]
}

fn mmat2_mul(a: &MMat2, b: &MMat2) -> MMat2 {
    let mut out = [
        [elem_zero(9), elem_zero(9)],
        [elem_zero(9), elem_zero(9)],
    ];
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                let p = qplane::ALGEBRA.mul(&a[i][k], &b[k][j]);
                out[i][j] = elem_add(&out[i][j], &p);
            }
        }
    }
    out
}

fn scaled(f: &[Scalar], c: &Scalar) -> Elem {
    f.iter().map(|v| v * c).collect()
}

/// σ(x), σ(y): the generator values of the morphism σ, arranged as
/// [[σ_x^x, σ_x^y], [σ_y^x, σ_y^y]]; f·dξ = Σ_η dη·σ_η^ξ(f).
fn sigma_generators() -> (MMat2, MMat2) {
    let x = qplane::x();
    let y = qplane::y();
    let zero = elem_zero(9);
    let q = Scalar::q();
    let q2 = Scalar::q2();
    let q2m1 = &q2 - &Scalar::one();
    let sx = [
        [scaled(&x, &q2), scaled(&y, &q2m1)],
        [zero.clone(), scaled(&x, &q)],
    ];
    let sy = [
        [scaled(&y, &q), zero.clone()],
        [zero, scaled(&y, &q2)],
    ];
    (sx, sy)
}

/// τ(x), τ(y): generator values of the morphism τ; dξ·f = Σ_η τ_ξ^η(f)·dη.
fn tau_generators() -> (MMat2, MMat2) {
    let x = qplane::x();
    let y = qplane::y();
    let zero = elem_zero(9);
    let q = Scalar::q();
    let q2 = Scalar::q2();
    let qm1 = &q - &Scalar::one();
    let tx = [
        [scaled(&x, &q), zero.clone()],
        [scaled(&y, &qm1), scaled(&x, &q2)],
    ];
    let ty = [
        [scaled(&y, &q2), zero.clone()],
        [zero, scaled(&y, &q)],
    ];
    (tx, ty)
}

fn morphism_tables(gx: MMat2, gy: MMat2) -> [[Mat<Scalar>; 2]; 2] {
    let mut out = [
        [Mat::zeros(9, 9), Mat::zeros(9, 9)],
        [Mat::zeros(9, 9), Mat::zeros(9, 9)],
    ];
    for m in 0..9 {
        let (r, s) = qplane::exponents(m);
        let mut v = mmat2_identity();
        for _ in 0..r {
            v = mmat2_mul(&v, &gx);
        }
        for _ in 0..s {
            v = mmat2_mul(&v, &gy);
        }
        for i in 0..2 {
            for j in 0..2 {
                for t in 0..9 {
                    out[i][j][(t, m)] = v[i][j][t].clone();
                }
            }
        }
    }
    out
}

/// The four operators σ_i^j as 9×9 matrices; SIGMA[i][j] is σ with lower
/// index i and upper index j (i, j ∈ {0 = x, 1 = y}).
pub static SIGMA: LazyLock<[[Mat<Scalar>; 2]; 2]> = LazyLock::new(|| {
    let (gx, gy) = sigma_generators();
    morphism_tables(gx, gy)
});

/// The four operators τ_i^j as 9×9 matrices, indexed like [`SIGMA`].
pub static TAU: LazyLock<[[Mat<Scalar>; 2]; 2]> = LazyLock::new(|| {
    let (gx, gy) = tau_generators();
    morphism_tables(gx, gy)
});

/// σ(f) as a 2×2 matrix over M.
pub fn sigma(f: &[Scalar]) -> MMat2 {
    [
        [SIGMA[0][0].mul_vec(f), SIGMA[0][1].mul_vec(f)],
        [SIGMA[1][0].mul_vec(f), SIGMA[1][1].mul_vec(f)],
    ]
}

/// τ(f) as a 2×2 matrix over M.
pub fn tau(f: &[Scalar]) -> MMat2 {
    [
        [TAU[0][0].mul_vec(f), TAU[0][1].mul_vec(f)],
        [TAU[1][0].mul_vec(f), TAU[1][1].mul_vec(f)],
    ]
}

// ---------------------------------------------------------------------------
// Differential operators
// ---------------------------------------------------------------------------

/// A differential operator on M, stored as its total 9×9 matrix on the
/// monomial basis. Equality compares matrices; the normal form in the
/// monomial operator basis is recovered exactly on demand.
#[derive(Clone, Debug)]
pub struct DiffOp {
    pub mat: Mat<Scalar>,
}

impl PartialEq for DiffOp {
    fn eq(&self, other: &Self) -> bool {
        self.mat == other.mat
    }
}

impl DiffOp {
    pub fn zero() -> Self {
        DiffOp {
            mat: Mat::zeros(9, 9),
        }
    }

    pub fn identity() -> Self {
        DiffOp {
            mat: Mat::identity(9),
        }
    }

    pub fn from_matrix(mat: Mat<Scalar>) -> Self {
        assert!(mat.rows == 9 && mat.cols == 9);
        DiffOp { mat }
    }

    /// Left multiplication by f ∈ M as an operator.
    pub fn multiplication(f: &[Scalar]) -> Self {
        DiffOp {
            mat: qplane::ALGEBRA.left_mul_matrix(f),
        }
    }

    pub fn partial_x() -> Self {
        DiffOp {
            mat: PARTIAL_X.clone(),
        }
    }

    pub fn partial_y() -> Self {
        DiffOp {
            mat: PARTIAL_Y.clone(),
        }
    }

    /// The monomial operator x^r y^s ∂x^a ∂y^b.
    pub fn monomial(r: usize, s: usize, a: usize, b: usize) -> Self {
        let m = DiffOp::multiplication(&qplane::monomial(r, s));
        m.compose(&DiffOp::partial_x().pow(a))
            .compose(&DiffOp::partial_y().pow(b))
    }

    /// Linear combination of monomial operators; `coeffs` is indexed by
    /// [`op_index`].
    pub fn from_coeffs(coeffs: &[Scalar]) -> Self {
        assert_eq!(coeffs.len(), DIM);
        let mut mat = Mat::zeros(9, 9);
        for (i, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (r, s, a, b) = op_exponents(i);
            mat = mat.add(&DiffOp::monomial(r, s, a, b).mat.scale(c));
        }
        DiffOp { mat }
    }

    /// Apply to an element of M.
    pub fn apply(&self, f: &[Scalar]) -> Elem {
        self.mat.mul_vec(f)
    }

    /// Operator composition: (self ∘ other)(f) = self(other(f)).
    pub fn compose(&self, other: &Self) -> Self {
        DiffOp {
            mat: self.mat.mul(&other.mat),
        }
    }

    pub fn pow(&self, k: usize) -> Self {
        DiffOp {
            mat: self.mat.pow(k),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        DiffOp {
            mat: self.mat.add(&other.mat),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        DiffOp {
            mat: self.mat.sub(&other.mat),
        }
    }

    pub fn neg(&self) -> Self {
        DiffOp {
            mat: self.mat.neg(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        DiffOp {
            mat: self.mat.scale(c),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.mat == Mat::zeros(9, 9)
    }

    /// Exact coefficients in the monomial operator basis.
    pub fn normal_form(&self) -> Vec<Scalar> {
        normal_form_of(&self.mat)
    }
}

impl std::fmt::Display for DiffOp {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", format_normal_form(&self.normal_form()))
    }
}

fn vec_of_matrix(m: &Mat<Scalar>) -> Vec<Scalar> {
    let mut v = Vec::with_capacity(81);
    for i in 0..9 {
        for j in 0..9 {
            v.push(m[(i, j)].clone());
        }
    }
    v
}

/// 81×81 matrix whose column [`op_index`] (r,s,a,b) is the flattened 9×9
/// matrix of x^r y^s ∂x^a ∂y^b.
pub static NORMAL_BASIS: LazyLock<Mat<Scalar>> = LazyLock::new(|| {
    let mut m = Mat::zeros(DIM, DIM);
    for col in 0..DIM {
        let (r, s, a, b) = op_exponents(col);
        let v = vec_of_matrix(&DiffOp::monomial(r, s, a, b).mat);
        for (row, c) in v.into_iter().enumerate() {
            m[(row, col)] = c;
        }
    }
    m
});

static NORMAL_BASIS_INV: LazyLock<Mat<Scalar>> = LazyLock::new(|| {
    NORMAL_BASIS
        .inverse()
        .expect("the 81 monomial operators are a basis of End(M)")
});

/// The unique coefficients of a 9×9 matrix in the monomial operator basis.
pub fn normal_form_of(mat: &Mat<Scalar>) -> Vec<Scalar> {
    NORMAL_BASIS_INV.mul_vec(&vec_of_matrix(mat))
}

/// Human-readable normal form, e.g. `x ∂y + (q-1)·x*y ∂y^2`.
pub fn format_normal_form(coeffs: &[Scalar]) -> String {
    let mut parts = Vec::new();
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let name = op_name(i);
        if *c == Scalar::one() {
            parts.push(name);
        } else {
            parts.push(format!("({c})·{name}"));
        }
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

/// Rank of the span of the 81 monomial operators inside End(M).
pub fn basis_rank() -> usize {
    NORMAL_BASIS.rank()
}

/// Number of monomial operators of each operator order 0..=4.
pub fn graded_counts() -> [usize; 5] {
    let mut counts = [0usize; 5];
    for i in 0..DIM {
        counts[op_order(i)] += 1;
    }
    counts
}

// ---------------------------------------------------------------------------
// Scaling operators and the realization of the H generators
// ---------------------------------------------------------------------------

/// The scaling operators μx = 1 + (q²−1)(x∂x + y∂y) and
/// μy = 1 + (q²−1) y∂y.
pub fn scaling_ops() -> (DiffOp, DiffOp) {
    let q2m1 = &Scalar::q2() - &Scalar::one();
    let x_dx = DiffOp::monomial(1, 0, 1, 0);
    let y_dy = DiffOp::monomial(0, 1, 0, 1);
    let mx = DiffOp::identity().add(&x_dx.add(&y_dy).scale(&q2m1));
    let my = DiffOp::identity().add(&y_dy.scale(&q2m1));
    (mx, my)
}

/// The displayed polynomial realizations of X₊, X₋, K, K₋ acting on M
/// from the left, in that order.
pub fn h_generator_ops() -> (DiffOp, DiffOp, DiffOp, DiffOp) {
    let one = Scalar::one();
    let q = Scalar::q();
    let q2 = Scalar::q2();
    let qm1 = &q - &one;
    let q2m1 = &q2 - &one;
    let omq = &one - &q;
    let qmq2 = &q - &q2;
    let three = Scalar::from_int(3);

    // X₊ = x ∂y + (q−1) xy ∂y²
    let xp = DiffOp::monomial(1, 0, 0, 1)
        .add(&DiffOp::monomial(1, 1, 0, 2).scale(&qm1));
    // X₋ = y ∂x + (q−q²) xy ∂x² + (1−q) y² ∂x ∂y
    let xm = DiffOp::monomial(0, 1, 1, 0)
        .add(&DiffOp::monomial(1, 1, 2, 0).scale(&qmq2))
        .add(&DiffOp::monomial(0, 2, 1, 1).scale(&omq));
    // K = 1 + (q−1) x∂x + (q²−1) y∂y − 3q x²∂x² + 3(1−q) x²y ∂x²∂y
    //     + 9 x²y² ∂x²∂y²
    let k = DiffOp::identity()
        .add(&DiffOp::monomial(1, 0, 1, 0).scale(&qm1))
        .add(&DiffOp::monomial(0, 1, 0, 1).scale(&q2m1))
        .sub(&DiffOp::monomial(2, 0, 2, 0).scale(&(&three * &q)))
        .add(&DiffOp::monomial(2, 1, 2, 1).scale(&(&three * &omq)))
        .add(&DiffOp::monomial(2, 2, 2, 2).scale(&Scalar::from_int(9)));
    // K₋ = K² = 1 + (q²−1) x∂x + (q−1) y∂y − 3 xy ∂x∂y − 3q y² ∂y²
    let kminus = DiffOp::identity()
        .add(&DiffOp::monomial(1, 0, 1, 0).scale(&q2m1))
        .add(&DiffOp::monomial(0, 1, 0, 1).scale(&qm1))
        .sub(&DiffOp::monomial(1, 1, 1, 1).scale(&three))
        .sub(&DiffOp::monomial(0, 2, 0, 2).scale(&(&three * &q)));
    (xp, xm, k, kminus)
}

// ---------------------------------------------------------------------------
// Verification reports
// ---------------------------------------------------------------------------

/// The commutation relations of D and the twisted Leibniz rule.
pub fn relations_report() -> Report {
    let mut rep = Report::new();
    let q = Scalar::q();
    let q2 = Scalar::q2();
    let q2m1 = &q2 - &Scalar::one();
    let px = DiffOp::partial_x();
    let py = DiffOp::partial_y();
    let mul_x = DiffOp::multiplication(&qplane::x());
    let mul_y = DiffOp::multiplication(&qplane::y());

    // ∂x x = 1 + q² x ∂x + (q²−1) y ∂y
    let lhs = px.compose(&mul_x);
    let rhs = DiffOp::identity()
        .add(&mul_x.compose(&px).scale(&q2))
        .add(&mul_y.compose(&py).scale(&q2m1));
    rep.check("∂x·x = 1 + q²·x∂x + (q²−1)·y∂y", lhs == rhs, || {
        format!("lhs = {lhs}, rhs = {rhs}")
    });

    // ∂x y = q y ∂x
    let lhs = px.compose(&mul_y);
    let rhs = mul_y.compose(&px).scale(&q);
    rep.check("∂x·y = q·y∂x", lhs == rhs, || format!("lhs = {lhs}"));

    // ∂y x = q x ∂y
    let lhs = py.compose(&mul_x);
    let rhs = mul_x.compose(&py).scale(&q);
    rep.check("∂y·x = q·x∂y", lhs == rhs, || format!("lhs = {lhs}"));

    // ∂y y = 1 + q² y ∂y
    let lhs = py.compose(&mul_y);
    let rhs = DiffOp::identity().add(&mul_y.compose(&py).scale(&q2));
    rep.check("∂y·y = 1 + q²·y∂y", lhs == rhs, || format!("lhs = {lhs}"));

    // ∂y ∂x = q ∂x ∂y
    let lhs = py.compose(&px);
    let rhs = px.compose(&py).scale(&q);
    rep.check("∂y∂x = q·∂x∂y", lhs == rhs, || format!("lhs = {lhs}"));

    // ∂x³ = ∂y³ = 0
    rep.check("∂x³ = 0", px.pow(3).is_zero(), || format!("{}", px.pow(3)));
    rep.check("∂y³ = 0", py.pow(3).is_zero(), || format!("{}", py.pow(3)));

    // σ_y^x ≡ 0
    rep.check(
        "σ_y^x ≡ 0",
        SIGMA[1][0] == Mat::zeros(9, 9),
        || "σ_y^x has a nonzero entry".to_string(),
    );

    // Relations among the σ operators.
    let sxx = &SIGMA[0][0];
    let sxy = &SIGMA[0][1];
    let syy = &SIGMA[1][1];
    rep.check(
        "σ_x^x σ_x^y = q² σ_x^y σ_x^x",
        sxx.mul(sxy) == sxy.mul(sxx).scale(&q2),
        || "operator relation fails".to_string(),
    );
    rep.check(
        "σ_x^x σ_y^y = σ_y^y σ_x^x",
        sxx.mul(syy) == syy.mul(sxx),
        || "operator relation fails".to_string(),
    );
    rep.check(
        "σ_x^y σ_y^y = q² σ_y^y σ_x^y",
        sxy.mul(syy) == syy.mul(sxy).scale(&q2),
        || "operator relation fails".to_string(),
    );

    // Twisted Leibniz rule ∂_i(fg) = ∂_i(f)·g + σ_i^j(f)·∂_j(g),
    // exhaustively over basis pairs.
    let partials = [&px, &py];
    let mut leibniz_ok = true;
    let mut witness = String::new();
    'outer: for fm in 0..9 {
        let f = qplane::ALGEBRA.basis_elem(fm);
        let sf = sigma(&f);
        for gm in 0..9 {
            let g = qplane::ALGEBRA.basis_elem(gm);
            let fg = qplane::ALGEBRA.mul(&f, &g);
            for i in 0..2 {
                let lhs = partials[i].apply(&fg);
                let mut rhs = qplane::ALGEBRA.mul(&partials[i].apply(&f), &g);
                for j in 0..2 {
                    let t = qplane::ALGEBRA.mul(&sf[i][j], &partials[j].apply(&g));
                    rhs = elem_add(&rhs, &t);
                }
                if lhs != rhs {
                    leibniz_ok = false;
                    witness = format!(
                        "∂_{}({}·{}) mismatch",
                        ["x", "y"][i],
                        qplane::ALGEBRA.basis_names[fm],
                        qplane::ALGEBRA.basis_names[gm]
                    );
                    break 'outer;
                }
            }
        }
    }
    rep.check(
        "twisted Leibniz ∂_i(fg) = ∂_i(f)g + σ_i^j(f)∂_j(g)",
        leibniz_ok,
        || witness.clone(),
    );

    // The packaged (untwisted) Leibniz rule for the column vector
    // ḏ = (∂x, ∂y): ḏ(fg) = ḏ(f)·g + f·ḏ(g), with the plain right module
    // structure and the σ-twisted left module structure on M².
    let mut packaged_ok = true;
    let mut witness2 = String::new();
    'outer2: for fm in 0..9 {
        let f = qplane::ALGEBRA.basis_elem(fm);
        let sf = sigma(&f);
        for gm in 0..9 {
            let g = qplane::ALGEBRA.basis_elem(gm);
            let fg = qplane::ALGEBRA.mul(&f, &g);
            let d_of = |h: &[Scalar]| [partial_x(h), partial_y(h)];
            let lhs = d_of(&fg);
            let df = d_of(&f);
            let dg = d_of(&g);
            for i in 0..2 {
                let mut rhs = qplane::ALGEBRA.mul(&df[i], &g);
                for j in 0..2 {
                    rhs = elem_add(&rhs, &qplane::ALGEBRA.mul(&sf[i][j], &dg[j]));
                }
                if lhs[i] != rhs {
                    packaged_ok = false;
                    witness2 = format!(
                        "row {} of ḏ({}·{})",
                        i, qplane::ALGEBRA.basis_names[fm], qplane::ALGEBRA.basis_names[gm]
                    );
                    break 'outer2;
                }
            }
        }
    }
    rep.check(
        "bimodule Leibniz ḏ(fg) = ḏ(f)·g + f·ḏ(g)",
        packaged_ok,
        || witness2.clone(),
    );

    rep
}

/// The scaling operator identities.
pub fn scaling_report() -> Report {
    let mut rep = Report::new();
    let q2 = Scalar::q2();
    let (mx, my) = scaling_ops();
    let px = DiffOp::partial_x();
    let py = DiffOp::partial_y();
    let mul_x = DiffOp::multiplication(&qplane::x());
    let mul_y = DiffOp::multiplication(&qplane::y());

    for (name, lhs, rhs) in [
        ("μx·x = q²·x·μx", mx.compose(&mul_x), mul_x.compose(&mx).scale(&q2)),
        ("μx·y = q²·y·μx", mx.compose(&mul_y), mul_y.compose(&mx).scale(&q2)),
        ("μy·x = x·μy", my.compose(&mul_x), mul_x.compose(&my)),
        ("μy·y = q²·y·μy", my.compose(&mul_y), mul_y.compose(&my).scale(&q2)),
        ("μx·μy = μy·μx", mx.compose(&my), my.compose(&mx)),
        ("μx³ = 1", mx.pow(3), DiffOp::identity()),
        ("μy³ = 1", my.pow(3), DiffOp::identity()),
        ("∂x·x = μx + x·∂x", px.compose(&mul_x), mx.add(&mul_x.compose(&px))),
        ("∂y·y = μy + y·∂y", py.compose(&mul_y), my.add(&mul_y.compose(&py))),
    ] {
        rep.check(name, lhs == rhs, || format!("lhs = {lhs}, rhs = {rhs}"));
    }
    rep
}

/// The generators of H act from the left as the displayed differential
/// operators, in both the polynomial and the scaling-operator form.
pub fn h_generators_as_diffops() -> Report {
    let mut rep = Report::new();
    let (xp, xm, k, kminus) = h_generator_ops();
    let (mx, my) = scaling_ops();
    let act = &env_h::ACT_LEFT_ON_M;
    let xp_act = &act[env_h::idx(1, 0, 0)];
    let xm_act = &act[env_h::idx(0, 0, 1)];
    let k_act = &act[env_h::idx(0, 1, 0)];

    rep.check("X₊ acts as x∂y + (q−1)·xy∂y²", xp.mat == *xp_act, || {
        format!("operator = {xp}")
    });
    rep.check(
        "X₋ acts as y∂x + (q−q²)·xy∂x² + (1−q)·y²∂x∂y",
        xm.mat == *xm_act,
        || format!("operator = {xm}"),
    );
    rep.check("K acts as the displayed 6-term operator", k.mat == *k_act, || {
        format!("operator = {k}")
    });
    rep.check(
        "K₋ = K² acts as the displayed 5-term operator",
        kminus.mat == k_act.mul(k_act),
        || format!("operator = {kminus}"),
    );
    rep.check(
        "K² matches the PBW basis element K²",
        act[env_h::idx(0, 2, 0)] == k_act.mul(k_act),
        || "PBW mismatch".to_string(),
    );

    // Scaling-operator forms.
    rep.check("K₋ = μx·μy", kminus == mx.compose(&my), || {
        format!("μx·μy = {}", mx.compose(&my))
    });
    rep.check("K = μx²·μy²", k == mx.pow(2).compose(&my.pow(2)), || {
        format!("μx²μy² = {}", mx.pow(2).compose(&my.pow(2)))
    });
    let xp_mu = my
        .pow(2)
        .compose(&DiffOp::multiplication(&qplane::x()))
        .compose(&DiffOp::partial_y());
    rep.check("X₊ = μy²·x·∂y", xp == xp_mu, || format!("μ-form = {xp_mu}"));
    let xm_mu = mx
        .compose(&DiffOp::multiplication(&qplane::y()))
        .compose(&DiffOp::partial_x())
        .scale(&Scalar::q());
    rep.check("X₋ = q·μx·y·∂x", xm == xm_mu, || format!("μ-form = {xm_mu}"));

    rep
}

// ---------------------------------------------------------------------------
// Tests
// ---------------------------------------------------------------------------

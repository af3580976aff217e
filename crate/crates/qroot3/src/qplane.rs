//! The reduced quantum plane M: the 9-dimensional algebra generated by
//! `x, y` with `xy = q·yx` and `x³ = y³ = 1`, isomorphic to the full
//! 3×3-matrix algebra.
//!
//! Monomials `x^r y^s` (r, s ∈ {0,1,2}) form the basis, ordered
//! lexicographically in (r, s) with the unit first: index = 3r + s.
//!
//! Provided here: the normal-form product, the mutually inverse matrix
//! realization (`to_matrix`/`from_matrix`), the covariant star operation
//! `x* = x, y* = y` (equivalently conjugation by the charge-conjugation
//! matrix composed with hermitian transpose), the splitting into the three
//! 3-dimensional invariant subspaces, closed-form inverses on each
//! subspace, the Gell-Mann basis expressed in `x, y`, and the triadic
//! (ℤ/3-graded exponential) series used to exhibit unitary elements.

use crate::hopf::{elem_zero, Elem, FiniteAlgebra, SparseVec};
use crate::linalg::Mat;
use crate::scalar::{Cq3, Q, Ring, Scalar};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::sync::LazyLock;

pub const DIM: usize = 9;

/// Basis index of `x^r y^s`.
pub fn idx(r: usize, s: usize) -> usize {
    debug_assert!(r < 3 && s < 3);
    3 * r + s
}

/// Exponents (r, s) of basis index `i`.
pub fn exponents(i: usize) -> (usize, usize) {
    (i / 3, i % 3)
}

pub fn monomial_name(r: usize, s: usize) -> String {
    let mut parts = Vec::new();
    match r {
        1 => parts.push("x".to_string()),
        2 => parts.push("x^2".to_string()),
        _ => {}
    }
    match s {
        1 => parts.push("y".to_string()),
        2 => parts.push("y^2".to_string()),
        _ => {}
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

/// Normal-form product of basis monomials:
/// `x^r y^s · x^p y^t = q^{2sp} x^{(r+p) mod 3} y^{(s+t) mod 3}`
/// (each swap `y x = q² x y` contributes one factor q²).
fn product_basis(i: usize, j: usize) -> SparseVec {
    let (r, s) = exponents(i);
    let (p, t) = exponents(j);
    let coeff = Scalar::q_pow(2 * (s as i64) * (p as i64));
    vec![(idx((r + p) % 3, (s + t) % 3), coeff)]
}

/// The algebra M with its structure constants.
pub static ALGEBRA: LazyLock<FiniteAlgebra> = LazyLock::new(|| {
    let names = (0..DIM)
        .map(|i| {
            let (r, s) = exponents(i);
            monomial_name(r, s)
        })
        .collect();
    FiniteAlgebra::from_products("M", names, 0, product_basis)
});

pub fn monomial(r: usize, s: usize) -> Elem {
    ALGEBRA.basis_elem(idx(r, s))
}

pub fn x() -> Elem {
    monomial(1, 0)
}

pub fn y() -> Elem {
    monomial(0, 1)
}

// ---------------------------------------------------------------------------
// Matrix realization
// ---------------------------------------------------------------------------

/// The defining 3×3 matrix of `x`: diag(1, q⁻¹, q⁻²) = diag(1, q², q).
pub fn x_matrix() -> Mat<Scalar> {
    let mut m = Mat::zeros(3, 3);
    m[(0, 0)] = Scalar::one();
    m[(1, 1)] = Scalar::q2();
    m[(2, 2)] = Scalar::q();
    m
}

/// The defining 3×3 matrix of `y`: the cyclic permutation with 1s at
/// (1,2), (2,3), (3,1).
pub fn y_matrix() -> Mat<Scalar> {
    let mut m = Mat::zeros(3, 3);
    m[(0, 1)] = Scalar::one();
    m[(1, 2)] = Scalar::one();
    m[(2, 0)] = Scalar::one();
    m
}

/// Algebra isomorphism onto 3×3 matrices.
pub fn to_matrix(z: &[Scalar]) -> Mat<Scalar> {
    let mut out: Mat<Scalar> = Mat::zeros(3, 3);
    for (i, c) in z.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let (r, s) = exponents(i);
        let m = x_matrix().pow(r).mul(&y_matrix().pow(s));
        out = out.add(&m.scale(c));
    }
    out
}

/// Expansion of the elementary matrix `E_{ij}` (1-based indices) on the
/// monomial basis:
/// `E_11 = (1 + x + x²)/3`, `E_12 = (y + xy + x²y)/3`,
/// `E_13 = (y² + xy² + x²y²)/3`, `E_21 = (y² + q xy² + q² x²y²)/3`,
/// `E_22 = (1 + q x + q² x²)/3`, `E_23 = (y + q xy + q² x²y)/3`,
/// `E_31 = (y + q² xy + q x²y)/3`, `E_32 = (y² + q² xy² + q x²y²)/3`,
/// `E_33 = (1 + q² x + q x²)/3`.
pub fn elementary(i: usize, j: usize) -> Elem {
    assert!((1..=3).contains(&i) && (1..=3).contains(&j), "E_ij needs 1-based indices in 1..=3");
    // E_{ij} = (1/3) Σ_r q^{r(i-1)} x^r y^{j-i mod 3}; the nine displayed
    // formulas are exactly this.
    let s = (j + 3 - i) % 3;
    let third = Scalar::rat(1, 3);
    let mut out = elem_zero(DIM);
    for r in 0..3 {
        out[idx(r, s)] = &Scalar::q_pow((r * (i - 1)) as i64) * &third;
    }
    out
}

/// Inverse of [`to_matrix`]: expand a 3×3 matrix on the `E_{ij}` formulas.
pub fn from_matrix(m: &Mat<Scalar>) -> Elem {
    assert_eq!((m.rows, m.cols), (3, 3), "matrix must be 3×3");
    let mut out = elem_zero(DIM);
    for i in 0..3 {
        for j in 0..3 {
            let c = &m[(i, j)];
            if c.is_zero() {
                continue;
            }
            let e = elementary(i + 1, j + 1);
            for (k, v) in e.into_iter().enumerate() {
                out[k] += &(&v * c);
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Star operation
// ---------------------------------------------------------------------------

/// Star on monomials: `(x^r y^s)* = q^{2rs} x^r y^s` (reverse the factors
/// `y^s x^r` and renormalize). Extended antilinearly.
pub fn star(z: &[Scalar]) -> Elem {
    let mut out = elem_zero(DIM);
    for (i, c) in z.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let (r, s) = exponents(i);
        out[i] = &c.conj() * &Scalar::q_pow(2 * (r as i64) * (s as i64));
    }
    out
}

/// The star matrix for [`crate::hopf`]-style structures:
/// column i holds star(e_i) (the antilinear part is handled by callers).
pub fn star_matrix() -> Mat<Scalar> {
    let mut m = Mat::zeros(DIM, DIM);
    for i in 0..DIM {
        let (r, s) = exponents(i);
        m[(i, i)] = Scalar::q_pow(2 * (r as i64) * (s as i64));
    }
    m
}

/// Charge conjugation matrix `C` (involutive, self-adjoint permutation).
/// The star satisfies `to_matrix(z*) = (C·to_matrix(z)·C⁻¹)†`.
pub fn charge_conjugation() -> Mat<Scalar> {
    let mut c = Mat::zeros(3, 3);
    c[(0, 0)] = Scalar::one();
    c[(1, 2)] = Scalar::one();
    c[(2, 1)] = Scalar::one();
    c
}

/// The nine star-fixed ("real") spanning elements:
/// 1, x, y, x², q·xy, y², q²·x²y, q²·xy², q·x²y².
pub fn real_basis() -> Vec<Elem> {
    let scaled = |r: usize, s: usize, c: Scalar| {
        let mut e = elem_zero(DIM);
        e[idx(r, s)] = c;
        e
    };
    vec![
        scaled(0, 0, Scalar::one()),
        scaled(1, 0, Scalar::one()),
        scaled(0, 1, Scalar::one()),
        scaled(2, 0, Scalar::one()),
        scaled(1, 1, Scalar::q()),
        scaled(0, 2, Scalar::one()),
        scaled(2, 1, Scalar::q2()),
        scaled(1, 2, Scalar::q2()),
        scaled(2, 2, Scalar::q()),
    ]
}

// ---------------------------------------------------------------------------
// Invariant subspaces and subspace-wise inverses
// ---------------------------------------------------------------------------

/// Basis indices of the three 3-dimensional invariant subspaces.
pub const IRR_INDICES: [usize; 3] = [6, 4, 2]; // x², xy, y²
pub const EVE_INDICES: [usize; 3] = [3, 1, 8]; // x, y, x²y²
pub const ODD_INDICES: [usize; 3] = [0, 7, 5]; // 1, x²y, xy²

/// Coordinate split `z = z_irr + z_eve + z_odd` along
/// span{x², xy, y²} ⊕ span{x, y, x²y²} ⊕ span{1, x²y, xy²}.
pub fn decompose(z: &[Scalar]) -> (Elem, Elem, Elem) {
    let mut irr = elem_zero(DIM);
    let mut eve = elem_zero(DIM);
    let mut odd = elem_zero(DIM);
    for (i, c) in z.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if IRR_INDICES.contains(&i) {
            irr[i] = c.clone();
        } else if EVE_INDICES.contains(&i) {
            eve[i] = c.clone();
        } else {
            odd[i] = c.clone();
        }
    }
    (irr, eve, odd)
}

/// `D(a,b,c) = a³ + b³ + c³ − 3abc` (the norm form of ℂ[ℤ/3]).
pub fn d_form(a: &Scalar, b: &Scalar, c: &Scalar) -> Scalar {
    let cube = |t: &Scalar| t * &(t * t);
    &(&(&cube(a) + &cube(b)) + &cube(c)) - &(&(&(a * b) * c) * &Scalar::from_int(3))
}

/// `T(a,b,c) = a² − bc`.
pub fn t_form(a: &Scalar, b: &Scalar, c: &Scalar) -> Scalar {
    &(a * a) - &(b * c)
}

/// Which pure subspace an element lies in (if exactly one).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Subspace {
    Irr,
    Eve,
    Odd,
}

pub fn pure_subspace(z: &[Scalar]) -> Option<Subspace> {
    let (irr, eve, odd) = decompose(z);
    match (
        !crate::hopf::elem_is_zero(&irr),
        !crate::hopf::elem_is_zero(&eve),
        !crate::hopf::elem_is_zero(&odd),
    ) {
        (true, false, false) => Some(Subspace::Irr),
        (false, true, false) => Some(Subspace::Eve),
        (false, false, true) => Some(Subspace::Odd),
        _ => None,
    }
}

/// Multiplicative inverse. For an element supported on a single invariant
/// subspace the closed formulas are used, written in the parametrizations
/// `a_odd = a₀₀·1 + a₁₂·q²xy² + a₂₁·q²x²y`,
/// `a_eve = a₁₀·x + a₀₁·y + a₂₂·qx²y²`,
/// `a_irr = a₂₀·x² + a₁₁·qxy + a₀₂·y²`;
/// in each case the inverse has coefficients `T(·,·,·)/D(·,·,·)` on the
/// *opposite* subspace pattern (odd→odd, eve→irr, irr→eve). A mixed element
/// falls back to exact matrix inversion. Returns `None` when not
/// invertible (equivalently `D = 0` in the pure cases).
pub fn invert(z: &[Scalar]) -> Option<Elem> {
    match pure_subspace(z) {
        Some(Subspace::Odd) => {
            let a00 = z[idx(0, 0)].clone();
            let a12 = &z[idx(1, 2)] * &Scalar::q(); // coefficient of q²xy²
            let a21 = &z[idx(2, 1)] * &Scalar::q(); // coefficient of q²x²y
            let d = d_form(&a00, &a12, &a21);
            if d.is_zero() {
                return None;
            }
            let dinv = d.inv();
            let mut out = elem_zero(DIM);
            out[idx(0, 0)] = &t_form(&a00, &a12, &a21) * &dinv;
            out[idx(1, 2)] = &(&t_form(&a21, &a00, &a12) * &Scalar::q2()) * &dinv;
            out[idx(2, 1)] = &(&t_form(&a12, &a21, &a00) * &Scalar::q2()) * &dinv;
            Some(out)
        }
        Some(Subspace::Eve) => {
            let a10 = z[idx(1, 0)].clone();
            let a01 = z[idx(0, 1)].clone();
            let a22 = &z[idx(2, 2)] * &Scalar::q2(); // coefficient of qx²y²
            let d = d_form(&a10, &a01, &a22);
            if d.is_zero() {
                return None;
            }
            let dinv = d.inv();
            let mut out = elem_zero(DIM);
            out[idx(2, 0)] = &t_form(&a10, &a01, &a22) * &dinv;
            out[idx(1, 1)] = &(&t_form(&a22, &a10, &a01) * &Scalar::q()) * &dinv;
            out[idx(0, 2)] = &t_form(&a01, &a22, &a10) * &dinv;
            Some(out)
        }
        Some(Subspace::Irr) => {
            let a20 = z[idx(2, 0)].clone();
            let a11 = &z[idx(1, 1)] * &Scalar::q2(); // coefficient of qxy
            let a02 = z[idx(0, 2)].clone();
            let d = d_form(&a20, &a11, &a02);
            if d.is_zero() {
                return None;
            }
            let dinv = d.inv();
            let mut out = elem_zero(DIM);
            out[idx(1, 0)] = &t_form(&a20, &a11, &a02) * &dinv;
            out[idx(0, 1)] = &t_form(&a02, &a20, &a11) * &dinv;
            out[idx(2, 2)] = &(&t_form(&a11, &a02, &a20) * &Scalar::q()) * &dinv;
            Some(out)
        }
        None => to_matrix(z).inverse().map(|m| from_matrix(&m)),
    }
}

// ---------------------------------------------------------------------------
// Gell-Mann basis
// ---------------------------------------------------------------------------

/// Normalizing unit attached to a Gell-Mann element so its coordinates stay
/// in ℚ(q): the operation returns `u_i·λ_i` where `u_i` is 1 for the real
/// matrices, `i` for the antisymmetric ones (i ∈ {2,5,7}) and `√3` for
/// i = 8.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GellMannUnit {
    One,
    ImaginaryI,
    Sqrt3,
}

impl GellMannUnit {
    /// The rational square of the unit: 1, −1, or 3.
    pub fn square(&self) -> Q {
        match self {
            GellMannUnit::One => Q::one(),
            GellMannUnit::ImaginaryI => -Q::one(),
            GellMannUnit::Sqrt3 => Q::from(BigInt::from(3)),
        }
    }
}

pub fn gell_mann_unit(i: usize) -> GellMannUnit {
    match i {
        2 | 5 | 7 => GellMannUnit::ImaginaryI,
        8 => GellMannUnit::Sqrt3,
        1 | 3 | 4 | 6 => GellMannUnit::One,
        _ => panic!("Gell-Mann index {i} out of range 1..=8"),
    }
}

/// `u_i·λ_i` as an element of M, from the closed monomial expansions:
/// λ₁ = (y + xy + y² + x²y + q·xy² + q²·x²y²)/3,
/// λ₂ = −i(y + xy − y² + x²y − q·xy² − q²·x²y²)/3,
/// λ₃ = ((1−q)x + (1−q²)x²)/3,
/// λ₄ = (y + q²xy + y² + q·x²y + xy² + x²y²)/3,
/// λ₅ = i(y + q²xy − y² + q·x²y − xy² − x²y²)/3,
/// λ₆ = (y + q·xy + y² + q²x²y + q²xy² + q·x²y²)/3,
/// λ₇ = −i(y + q·xy − y² + q²x²y − q²xy² − q·x²y²)/3,
/// λ₈ = −(q²x + q·x²)/√3.
/// Multiplying by `u_i` clears the i in rows 2, 5, 7 and the 1/√3 in
/// row 8, leaving exact ℚ(q) coordinates.
pub fn gell_mann(i: usize) -> (Elem, GellMannUnit) {
    let unit = gell_mann_unit(i);
    let q = Scalar::q();
    let q2 = Scalar::q2();
    let one = Scalar::one();
    let third = Scalar::rat(1, 3);
    // Entries (coefficient, r, s) of 3·λ_i before the unit normalization,
    // for the six off-diagonal monomials y, xy, y², x²y, xy², x²y².
    let mut out = elem_zero(DIM);
    let mut put = |terms: &[(Scalar, usize, usize)], scale: &Scalar| {
        for (c, r, s) in terms {
            out[idx(*r, *s)] = c * scale;
        }
    };
    match i {
        1 => put(
            &[
                (one.clone(), 0, 1),
                (one.clone(), 1, 1),
                (one.clone(), 0, 2),
                (one.clone(), 2, 1),
                (q.clone(), 1, 2),
                (q2.clone(), 2, 2),
            ],
            &third,
        ),
        // u₂·λ₂ = i·λ₂ = (y + xy − y² + x²y − q·xy² − q²·x²y²)/3.
        2 => put(
            &[
                (one.clone(), 0, 1),
                (one.clone(), 1, 1),
                (-&one, 0, 2),
                (one.clone(), 2, 1),
                (-&q, 1, 2),
                (-&q2, 2, 2),
            ],
            &third,
        ),
        3 => put(
            &[(&one - &q, 1, 0), (&one - &q2, 2, 0)],
            &third,
        ),
        4 => put(
            &[
                (one.clone(), 0, 1),
                (q2.clone(), 1, 1),
                (one.clone(), 0, 2),
                (q.clone(), 2, 1),
                (one.clone(), 1, 2),
                (one.clone(), 2, 2),
            ],
            &third,
        ),
        // u₅·λ₅ = i·λ₅ = −(y + q²xy − y² + q·x²y − xy² − x²y²)/3.
        5 => put(
            &[
                (-&one, 0, 1),
                (-&q2, 1, 1),
                (one.clone(), 0, 2),
                (-&q, 2, 1),
                (one.clone(), 1, 2),
                (one.clone(), 2, 2),
            ],
            &third,
        ),
        6 => put(
            &[
                (one.clone(), 0, 1),
                (q.clone(), 1, 1),
                (one.clone(), 0, 2),
                (q2.clone(), 2, 1),
                (q2.clone(), 1, 2),
                (q.clone(), 2, 2),
            ],
            &third,
        ),
        // u₇·λ₇ = i·λ₇ = (y + q·xy − y² + q²x²y − q²xy² − q·x²y²)/3.
        7 => put(
            &[
                (one.clone(), 0, 1),
                (q.clone(), 1, 1),
                (-&one, 0, 2),
                (q2.clone(), 2, 1),
                (-&q2, 1, 2),
                (-&q, 2, 2),
            ],
            &third,
        ),
        // u₈·λ₈ = √3·λ₈ = −(q²x + q·x²).
        8 => put(&[(-&q2, 1, 0), (-&q, 2, 0)], &one),
        _ => panic!("Gell-Mann index {i} out of range 1..=8"),
    }
    (out, unit)
}

/// The classical 3×3 matrix `u_i·λ_i` (rational entries by the choice of
/// units): λ₁ = E₁₂+E₂₁, iλ₂ = E₁₂−E₂₁, λ₃ = diag(1,−1,0), λ₄ = E₁₃+E₃₁,
/// iλ₅ = E₁₃−E₃₁, λ₆ = E₂₃+E₃₂, iλ₇ = E₂₃−E₃₂, √3λ₈ = diag(1,1,−2).
pub fn gell_mann_classical(i: usize) -> Mat<Scalar> {
    let mut m: Mat<Scalar> = Mat::zeros(3, 3);
    let one = Scalar::one();
    match i {
        1 => {
            m[(0, 1)] = one.clone();
            m[(1, 0)] = one;
        }
        2 => {
            m[(0, 1)] = one.clone();
            m[(1, 0)] = -&one;
        }
        3 => {
            m[(0, 0)] = one.clone();
            m[(1, 1)] = -&one;
        }
        4 => {
            m[(0, 2)] = one.clone();
            m[(2, 0)] = one;
        }
        5 => {
            m[(0, 2)] = one.clone();
            m[(2, 0)] = -&one;
        }
        6 => {
            m[(1, 2)] = one.clone();
            m[(2, 1)] = one;
        }
        7 => {
            m[(1, 2)] = one.clone();
            m[(2, 1)] = -&one;
        }
        8 => {
            m[(0, 0)] = one.clone();
            m[(1, 1)] = one.clone();
            m[(2, 2)] = Scalar::from_int(-2);
        }
        _ => panic!("Gell-Mann index {i} out of range 1..=8"),
    }
    m
}

/// Structure constants of su(3) in the unit-normalized basis
/// `g_i = u_i·λ_i`: the rational numbers `f̃_ijk` with
/// `[g_i, g_j] = Σ_k f̃_ijk·g_k`, solved exactly from the classical
/// matrices. (In terms of the textbook constants,
/// `f̃_ijk = 2i·f_ijk·u_i u_j / u_k`, which is rational because every
/// nonzero `f_ijk` involves an odd number of indices from {2,5,7}.)
pub fn su3_structure_constants() -> &'static Vec<Vec<Vec<Q>>> {
    static F: LazyLock<Vec<Vec<Vec<Q>>>> = LazyLock::new(|| {
        let gs: Vec<Mat<Scalar>> = (1..=8).map(gell_mann_classical).collect();
        // 9×8 coefficient matrix: column k is g_{k+1} flattened.
        let a = Mat::from_fn(9, 8, |e, k| gs[k].flatten()[e].clone());
        let mut f = vec![vec![vec![Q::zero(); 8]; 8]; 8];
        for i in 0..8 {
            for j in 0..8 {
                let comm = gs[i].mul(&gs[j]).sub(&gs[j].mul(&gs[i]));
                let b = Mat::col_vec(&comm.flatten());
                match a.solve(&b) {
                    crate::linalg::SolveOutcome::Solution { particular, .. } => {
                        for k in 0..8 {
                            let c = particular[(k, 0)].clone();
                            assert!(c.is_rational(), "structure constant not rational");
                            f[i][j][k] = c.r0;
                        }
                    }
                    crate::linalg::SolveOutcome::Inconsistent => {
                        panic!("commutator not in the Gell-Mann span")
                    }
                }
            }
        }
        f
    });
    &F
}

// ---------------------------------------------------------------------------
// Triadic series and unitary elements
// ---------------------------------------------------------------------------

/// Truncated power series arithmetic (coefficient vectors of fixed length
/// order+1), over ℚ(√3)(i) for the unitary check and over ℚ for the
/// triadic determinant identity.
fn ser_mul(a: &[Cq3], b: &[Cq3]) -> Vec<Cq3> {
    let n = a.len();
    let mut out = vec![Cq3::zero(); n];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if i + j < n && !bj.is_zero() {
                out[i + j] = out[i + j].add(&ai.mul(bj));
            }
        }
    }
    out
}

fn ser_add(a: &[Cq3], b: &[Cq3]) -> Vec<Cq3> {
    a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
}

fn ser_scale(a: &[Cq3], c: &Cq3) -> Vec<Cq3> {
    a.iter().map(|x| x.mul(c)).collect()
}

fn qser_mul(a: &[Q], b: &[Q]) -> Vec<Q> {
    let n = a.len();
    let mut out = vec![Q::zero(); n];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if i + j < n && !bj.is_zero() {
                out[i + j] = &out[i + j] + &(ai * bj);
            }
        }
    }
    out
}

fn qser_add(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// The triadic analogues of cosine/sine:
/// `C₀(t) = Σ_{k ≡ 0 (3)} t^k/k!` and its successive derivatives
/// `C₁ = C₀′` (supported on k ≡ 2 (3)) and `C₂ = C₁′` (k ≡ 1 (3)),
/// truncated at the given order.
pub struct TriadicSeries {
    pub order: usize,
    pub c0: Vec<Q>,
    pub c1: Vec<Q>,
    pub c2: Vec<Q>,
}

pub fn triadic(order: usize) -> TriadicSeries {
    assert!(order >= 1);
    let mut c = [
        vec![Q::zero(); order + 1],
        vec![Q::zero(); order + 1],
        vec![Q::zero(); order + 1],
    ];
    let mut factorial = Q::one();
    for k in 0..=order {
        if k > 0 {
            factorial = factorial * Q::from(BigInt::from(k));
        }
        // t^k/k! belongs to C₀ if k≡0, to C₂ if k≡1, to C₁ if k≡2.
        let slot = [0, 2, 1][k % 3];
        c[slot][k] = Q::one() / factorial.clone();
    }
    let [c0, c1, c2] = c;
    TriadicSeries { order, c0, c1, c2 }
}

impl TriadicSeries {
    /// `D(C₀,C₁,C₂) = C₀³+C₁³+C₂³−3C₀C₁C₂` as a truncated series; the
    /// identity says it is the constant series 1.
    pub fn d_series(&self) -> Vec<Q> {
        let cube = |a: &[Q]| qser_mul(a, &qser_mul(a, a));
        let mut d = qser_add(&cube(&self.c0), &cube(&self.c1));
        d = qser_add(&d, &cube(&self.c2));
        let abc = qser_mul(&self.c0, &qser_mul(&self.c1, &self.c2));
        let m3 = -Q::from(BigInt::from(3));
        qser_add(&d, &abc.iter().map(|c| c * &m3).collect::<Vec<_>>())
    }

    pub fn d_is_one(&self) -> bool {
        let d = self.d_series();
        d[0].is_one() && d[1..].iter().all(|c| c.is_zero())
    }

    /// Evaluate a rational series at `i·t` over ℚ(√3)(i): coefficient of
    /// t^k becomes i^k·c_k.
    fn at_it(series: &[Q]) -> Vec<Cq3> {
        series
            .iter()
            .enumerate()
            .map(|(k, c)| {
                let ik = match k % 4 {
                    0 => Cq3::one(),
                    1 => Cq3::i(),
                    2 => Cq3::one().neg(),
                    _ => Cq3::i().neg(),
                };
                ik.mul(&Cq3::new(crate::scalar::Rq3::new(c.clone(), Q::zero()), crate::scalar::Rq3::zero()))
            })
            .collect()
    }

    /// Verify `u·u* = 1` through the truncation order for the unitary
    /// element `u = exp(i·t·q²xy²) = C₀(it)·1 + C₁(it)·q²x²y + C₂(it)·q²xy²`
    /// (and the companion `exp(i·t·q²x²y)`, which has the same C-pattern).
    /// Elements of M with series coefficients are multiplied through the
    /// structure constants; star conjugates each coefficient series
    /// (i ↦ −i, q ↦ q²) and multiplies basis monomials by `q^{2rs}`.
    pub fn unitary_check(&self) -> bool {
        let n = self.order + 1;
        let zero_series = vec![Cq3::zero(); n];
        let embed = |s: &Scalar| Cq3::from_scalar(s);
        // u as a 9-slot vector of coefficient series.
        let mut u: Vec<Vec<Cq3>> = vec![zero_series.clone(); DIM];
        u[idx(0, 0)] = Self::at_it(&self.c0);
        u[idx(2, 1)] = ser_scale(&Self::at_it(&self.c1), &embed(&Scalar::q2()));
        u[idx(1, 2)] = ser_scale(&Self::at_it(&self.c2), &embed(&Scalar::q2()));
        // Star: conjugate coefficients, scale monomial by q^{2rs}.
        let mut ustar: Vec<Vec<Cq3>> = vec![zero_series.clone(); DIM];
        for (i, series) in u.iter().enumerate() {
            let (r, s) = exponents(i);
            let factor = embed(&Scalar::q_pow(2 * (r as i64) * (s as i64)));
            ustar[i] = ser_scale(
                &series.iter().map(|c| c.conj()).collect::<Vec<_>>(),
                &factor,
            );
        }
        // Product through the structure constants of M.
        let mut prod: Vec<Vec<Cq3>> = vec![zero_series; DIM];
        for i in 0..DIM {
            if u[i].iter().all(|c| c.is_zero()) {
                continue;
            }
            for j in 0..DIM {
                if ustar[j].iter().all(|c| c.is_zero()) {
                    continue;
                }
                let term = ser_mul(&u[i], &ustar[j]);
                for (k, c) in ALGEBRA.product_basis(i, j) {
                    let scaled = ser_scale(&term, &embed(c));
                    prod[*k] = ser_add(&prod[*k], &scaled);
                }
            }
        }
        // Expect exactly the constant series 1 on the unit monomial.
        (0..DIM).all(|k| {
            prod[k].iter().enumerate().all(|(deg, c)| {
                if k == ALGEBRA.unit_index && deg == 0 {
                    *c == Cq3::one()
                } else {
                    c.is_zero()
                }
            })
        })
    }
}

//! The 27-dimensional quantum group F: the quotient of the quantized
//! function algebra on SL(2) at q³ = 1 by `a³ = d³ = 1, b³ = c³ = 0`.
//!
//! Basis: monomials `a^α b^β c^γ` (lexicographic, index = 9α + 3β + γ);
//! `d` is not a basis element — it is eliminated through `d = a²(1 + qbc)`.
//! This module provides the normal-form product, the full Hopf ∗-structure,
//! both coactions on the reduced quantum plane M, the faithful 3×3
//! representation over the ring ℚ(q)[ξ₁,ξ₂]/(ξ³ = 0), and the Gell-Mann
//! matrices with entries in F obtained by pushing the quantum-plane
//! expansions through the left coaction.

use crate::hopf::{
    elem_zero, sparsify, tensor_mul2, Coaction, CoactionSide, Elem, FiniteAlgebra, HopfAlgebra,
    SparseVec,
};
use crate::linalg::Mat;
use crate::qplane;
use crate::scalar::{Ring, Scalar};
use std::fmt;
use std::sync::LazyLock;

pub const DIM: usize = 27;

/// Basis index of `a^α b^β c^γ`.
pub fn idx(alpha: usize, beta: usize, gamma: usize) -> usize {
    debug_assert!(alpha < 3 && beta < 3 && gamma < 3);
    9 * alpha + 3 * beta + gamma
}

/// Exponents (α, β, γ) of basis index `i`.
pub fn exponents(i: usize) -> (usize, usize, usize) {
    (i / 9, (i / 3) % 3, i % 3)
}

pub fn monomial_name(alpha: usize, beta: usize, gamma: usize) -> String {
    let mut parts = Vec::new();
    let mut push = |sym: &str, e: usize| match e {
        1 => parts.push(sym.to_string()),
        2 => parts.push(format!("{sym}^2")),
        _ => {}
    };
    push("a", alpha);
    push("b", beta);
    push("c", gamma);
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

/// Normal-form product: commuting `a^{α₂}` through `b^{β₁} c^{γ₁}` picks up
/// `q^{2α₂(β₁+γ₁)}` (each swap `b·a = q²·a·b`, `c·a = q²·a·c`); then
/// `a³ = 1` reduces the a-exponent mod 3 while `b³ = c³ = 0` kills any
/// overflow in b or c.
fn product_basis(i: usize, j: usize) -> SparseVec {
    let (a1, b1, c1) = exponents(i);
    let (a2, b2, c2) = exponents(j);
    if b1 + b2 > 2 || c1 + c2 > 2 {
        return Vec::new();
    }
    let coeff = Scalar::q_pow(2 * (a2 as i64) * ((b1 + c1) as i64));
    vec![(idx((a1 + a2) % 3, b1 + b2, c1 + c2), coeff)]
}

pub fn a() -> Elem {
    HOPF.alg.basis_elem(idx(1, 0, 0))
}

pub fn b() -> Elem {
    HOPF.alg.basis_elem(idx(0, 1, 0))
}

pub fn c() -> Elem {
    HOPF.alg.basis_elem(idx(0, 0, 1))
}

/// `d = a²(1 + qbc) = a² + q·a²bc`.
pub fn d_element() -> Elem {
    let mut d = elem_zero(DIM);
    d[idx(2, 0, 0)] = Scalar::one();
    d[idx(2, 1, 1)] = Scalar::q();
    d
}

/// The q-determinant `da − q⁻¹bc` (equal to 1 in normal form).
pub fn q_determinant() -> Elem {
    let alg = &HOPF.alg;
    let da = alg.mul(&d_element(), &a());
    let bc = alg.mul(&b(), &c());
    let mut out = da;
    for (i, v) in bc.into_iter().enumerate() {
        out[i] -= &(&v * &Scalar::q2()); // q⁻¹ = q²
    }
    out
}

/// The Hopf ∗-algebra structure on F:
/// Δa = a⊗a + b⊗c, Δb = a⊗b + b⊗d, Δc = c⊗a + d⊗c (and Δd = c⊗b + d⊗d),
/// ε(a) = 1, ε(b) = ε(c) = 0,
/// S(a) = d, S(b) = −q²b, S(c) = −qc, S(d) = a,
/// star fixing all four generators.
pub static HOPF: LazyLock<HopfAlgebra> = LazyLock::new(|| {
    let names = (0..DIM)
        .map(|i| {
            let (al, be, ga) = exponents(i);
            monomial_name(al, be, ga)
        })
        .collect();
    let alg = FiniteAlgebra::from_products("F", names, 0, product_basis);

    // Coproduct: extend Δ multiplicatively from the generators, computing
    // Δ(a)^α Δ(b)^β Δ(c)^γ inside F⊗F.
    let dd = DIM * DIM;
    let tidx = |i: usize, j: usize| i * DIM + j;
    let mut delta_a = vec![Scalar::zero(); dd];
    delta_a[tidx(idx(1, 0, 0), idx(1, 0, 0))] = Scalar::one();
    delta_a[tidx(idx(0, 1, 0), idx(0, 0, 1))] = Scalar::one();
    let d_el = d_element();
    let mut delta_b = vec![Scalar::zero(); dd];
    delta_b[tidx(idx(1, 0, 0), idx(0, 1, 0))] = Scalar::one();
    for (k, v) in d_el.iter().enumerate() {
        if !v.is_zero() {
            delta_b[tidx(idx(0, 1, 0), k)] = v.clone();
        }
    }
    let mut delta_c = vec![Scalar::zero(); dd];
    delta_c[tidx(idx(0, 0, 1), idx(1, 0, 0))] = Scalar::one();
    for (k, v) in d_el.iter().enumerate() {
        if !v.is_zero() {
            delta_c[tidx(k, idx(0, 0, 1))] = v.clone();
        }
    }
    let mut unit2 = vec![Scalar::zero(); dd];
    unit2[tidx(0, 0)] = Scalar::one();

    let mut comult = Vec::with_capacity(DIM);
    for i in 0..DIM {
        let (al, be, ga) = exponents(i);
        let mut t = unit2.clone();
        for _ in 0..al {
            t = tensor_mul2(&alg, &alg, &t, &delta_a);
        }
        for _ in 0..be {
            t = tensor_mul2(&alg, &alg, &t, &delta_b);
        }
        for _ in 0..ga {
            t = tensor_mul2(&alg, &alg, &t, &delta_c);
        }
        let entries = sparsify(&t)
            .into_iter()
            .map(|(k, v)| (k / DIM, k % DIM, v))
            .collect();
        comult.push(entries);
    }

    // Counit: ε(a^α b^β c^γ) = δ_{β,0} δ_{γ,0}.
    let counit = (0..DIM)
        .map(|i| {
            let (_, be, ga) = exponents(i);
            if be == 0 && ga == 0 {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        })
        .collect();

    // Antipode: S is an algebra antimorphism, so on a basis monomial
    // S(a^α b^β c^γ) = S(c)^γ S(b)^β S(a)^α with S(a) = d,
    // S(b) = −q²b, S(c) = −qc.
    let sa = d_element();
    let mut sb = elem_zero(DIM);
    sb[idx(0, 1, 0)] = -Scalar::q2();
    let mut sc = elem_zero(DIM);
    sc[idx(0, 0, 1)] = -Scalar::q();
    let mut antipode: Mat<Scalar> = Mat::zeros(DIM, DIM);
    for i in 0..DIM {
        let (al, be, ga) = exponents(i);
        let factors = [
            alg.pow(&sc, ga),
            alg.pow(&sb, be),
            alg.pow(&sa, al),
        ];
        let img = alg.mul(&alg.mul(&factors[0], &factors[1]), &factors[2]);
        for (j, v) in img.into_iter().enumerate() {
            antipode[(j, i)] = v;
        }
    }

    // Star: a, b, c are fixed, so (a^α b^β c^γ)* = c^γ b^β a^α
    //     = q^{2α(β+γ)} a^α b^β c^γ.
    let mut star: Mat<Scalar> = Mat::zeros(DIM, DIM);
    for i in 0..DIM {
        let (al, be, ga) = exponents(i);
        star[(i, i)] = Scalar::q_pow(2 * (al as i64) * ((be + ga) as i64));
    }

    HopfAlgebra {
        alg,
        comult,
        counit,
        antipode,
        star: Some(star),
    }
});

// ---------------------------------------------------------------------------
// Coactions on the quantum plane M
// ---------------------------------------------------------------------------

fn build_coaction(side: CoactionSide) -> Coaction {
    // Generator images in F⊗M (uniform index f·9 + m regardless of side):
    //   left:  x ↦ a⊗x + b⊗y,  y ↦ c⊗x + d⊗y
    //   right: x ↦ x⊗a + y⊗c,  y ↦ x⊗b + y⊗d
    let dm = qplane::DIM;
    let t = |f: usize, m: usize| f * dm + m;
    let x_m = qplane::idx(1, 0);
    let y_m = qplane::idx(0, 1);
    let len = DIM * dm;
    let mut img_x = vec![Scalar::zero(); len];
    let mut img_y = vec![Scalar::zero(); len];
    let d_el = d_element();
    match side {
        CoactionSide::Left => {
            img_x[t(idx(1, 0, 0), x_m)] = Scalar::one();
            img_x[t(idx(0, 1, 0), y_m)] = Scalar::one();
            img_y[t(idx(0, 0, 1), x_m)] = Scalar::one();
            for (k, v) in d_el.iter().enumerate() {
                if !v.is_zero() {
                    img_y[t(k, y_m)] = v.clone();
                }
            }
        }
        CoactionSide::Right => {
            img_x[t(idx(1, 0, 0), x_m)] = Scalar::one();
            img_x[t(idx(0, 0, 1), y_m)] = Scalar::one();
            img_y[t(idx(0, 1, 0), x_m)] = Scalar::one();
            for (k, v) in d_el.iter().enumerate() {
                if !v.is_zero() {
                    img_y[t(k, y_m)] = v.clone();
                }
            }
        }
    }
    // Multiplicative extension to x^r y^s. The product of two simple
    // tensors multiplies the F-legs and M-legs separately on either side,
    // so the same componentwise tensor product computes both cases.
    let mut unit_t = vec![Scalar::zero(); len];
    unit_t[t(0, qplane::idx(0, 0))] = Scalar::one();
    let f_alg = &HOPF.alg;
    let m_alg = &qplane::ALGEBRA;
    let mut table = vec![Vec::new(); dm];
    for r in 0..3 {
        for s in 0..3 {
            let mut v = unit_t.clone();
            for _ in 0..r {
                v = tensor_mul2(f_alg, m_alg, &v, &img_x);
            }
            for _ in 0..s {
                v = tensor_mul2(f_alg, m_alg, &v, &img_y);
            }
            table[qplane::idx(r, s)] = sparsify(&v)
                .into_iter()
                .map(|(k, c)| (k / dm, k % dm, c))
                .collect();
        }
    }
    Coaction { side, table }
}

/// Left coaction `Δ_L: M → F ⊗ M`, `x ↦ a⊗x + b⊗y`, `y ↦ c⊗x + d⊗y`.
pub static COACT_LEFT: LazyLock<Coaction> = LazyLock::new(|| build_coaction(CoactionSide::Left));

/// Right coaction `Δ_R: M → M ⊗ F`, `x ↦ x⊗a + y⊗c`, `y ↦ x⊗b + y⊗d`.
pub static COACT_RIGHT: LazyLock<Coaction> = LazyLock::new(|| build_coaction(CoactionSide::Right));

// ---------------------------------------------------------------------------
// Faithful representation over ℚ(q)[ξ₁,ξ₂]/(ξ³)
// ---------------------------------------------------------------------------

/// Element of the commutative 9-dimensional ring generated by two symbols
/// ξ₁, ξ₂ with `ξ₁ξ₂ = ξ₂ξ₁` and `ξ₁³ = ξ₂³ = 0`; coefficients on the
/// basis `ξ₁^i ξ₂^j`, index 3i + j.
#[derive(Clone, PartialEq, Debug)]
pub struct Grass9 {
    pub coeffs: Vec<Scalar>,
}

impl Grass9 {
    pub fn new() -> Self {
        Grass9 {
            coeffs: vec![Scalar::zero(); 9],
        }
    }

    pub fn scalar(c: &Scalar) -> Self {
        let mut g = Grass9::new();
        g.coeffs[0] = c.clone();
        g
    }

    pub fn xi1() -> Self {
        let mut g = Grass9::new();
        g.coeffs[3] = Scalar::one();
        g
    }

    pub fn xi2() -> Self {
        let mut g = Grass9::new();
        g.coeffs[1] = Scalar::one();
        g
    }
}

impl Default for Grass9 {
    fn default() -> Self {
        Grass9::new()
    }
}

impl fmt::Display for Grass9 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (i, j) = (k / 3, k % 3);
            let mut name = String::new();
            match i {
                1 => name.push_str("xi1"),
                2 => name.push_str("xi1^2"),
                _ => {}
            }
            match j {
                1 => {
                    if !name.is_empty() {
                        name.push('*');
                    }
                    name.push_str("xi2");
                }
                2 => {
                    if !name.is_empty() {
                        name.push('*');
                    }
                    name.push_str("xi2^2");
                }
                _ => {}
            }
            if name.is_empty() {
                parts.push(format!("{c}"));
            } else if c.is_one() {
                parts.push(name);
            } else if c.is_composite() {
                parts.push(format!("({c})*{name}"));
            } else {
                parts.push(format!("{c}*{name}"));
            }
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl Ring for Grass9 {
    fn zero() -> Self {
        Grass9::new()
    }
    fn one() -> Self {
        Grass9::scalar(&Scalar::one())
    }
    fn add(&self, other: &Self) -> Self {
        Grass9 {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(u, v)| u + v)
                .collect(),
        }
    }
    fn sub(&self, other: &Self) -> Self {
        Grass9 {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(u, v)| u - v)
                .collect(),
        }
    }
    fn mul(&self, other: &Self) -> Self {
        let mut out = Grass9::new();
        for (k1, c1) in self.coeffs.iter().enumerate() {
            if c1.is_zero() {
                continue;
            }
            let (i1, j1) = (k1 / 3, k1 % 3);
            for (k2, c2) in other.coeffs.iter().enumerate() {
                if c2.is_zero() {
                    continue;
                }
                let (i2, j2) = (k2 / 3, k2 % 3);
                if i1 + i2 > 2 || j1 + j2 > 2 {
                    continue;
                }
                out.coeffs[3 * (i1 + i2) + (j1 + j2)] += &(c1 * c2);
            }
        }
        out
    }
    fn neg(&self) -> Self {
        Grass9 {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }
    fn conj(&self) -> Self {
        Grass9 {
            coeffs: self.coeffs.iter().map(Scalar::conj).collect(),
        }
    }
    fn from_int(n: i64) -> Self {
        Grass9::scalar(&Scalar::from_int(n))
    }
}

/// The defining matrices of the faithful representation: with P the cyclic
/// permutation matrix (1s at (1,2), (2,3), (3,1)),
/// `rep(b) = ξ₁·P`, `rep(c) = ξ₂·P`, `rep(d) = diag(1, q, q²)`, and
/// `rep(a) = (1 + q·rep(b)rep(c))·rep(d)²`.
/// The diagonal order (1, q, q²) of `rep(d)` is forced by the relation
/// `bd = q·db`: conjugating P by the diagonal must produce the factor q,
/// which pins the eigenvalue ordering.
fn rep_generators() -> [Mat<Grass9>; 3] {
    let perm = |xi: Grass9| {
        let mut m: Mat<Grass9> = Mat::zeros(3, 3);
        m[(0, 1)] = xi.clone();
        m[(1, 2)] = xi.clone();
        m[(2, 0)] = xi;
        m
    };
    let b_rep = perm(Grass9::xi1());
    let c_rep = perm(Grass9::xi2());
    let mut d_rep: Mat<Grass9> = Mat::zeros(3, 3);
    d_rep[(0, 0)] = Grass9::one();
    d_rep[(1, 1)] = Grass9::scalar(&Scalar::q());
    d_rep[(2, 2)] = Grass9::scalar(&Scalar::q2());
    let qbc = b_rep.mul(&c_rep).scale(&Grass9::scalar(&Scalar::q()));
    let a_rep = Mat::identity(3).add(&qbc).mul(&d_rep.mul(&d_rep));
    [a_rep, b_rep, c_rep]
}

/// Images of the 27 basis monomials under the faithful representation.
pub static REP_BASIS: LazyLock<Vec<Mat<Grass9>>> = LazyLock::new(|| {
    let [a_rep, b_rep, c_rep] = rep_generators();
    (0..DIM)
        .map(|i| {
            let (al, be, ga) = exponents(i);
            a_rep.pow(al).mul(&b_rep.pow(be)).mul(&c_rep.pow(ga))
        })
        .collect()
});

/// The faithful representation F → 3×3 matrices over [`Grass9`].
pub fn ogievetsky_rep(u: &[Scalar]) -> Mat<Grass9> {
    let mut out: Mat<Grass9> = Mat::zeros(3, 3);
    for (i, coeff) in u.iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        out = out.add(&REP_BASIS[i].scale(&Grass9::scalar(coeff)));
    }
    out
}

/// The 27×81 matrix whose row i lists all Grass9 coefficients of
/// `rep(e_i)`; full row rank certifies faithfulness.
pub fn rep_coefficient_matrix() -> Mat<Scalar> {
    Mat::from_fn(DIM, 81, |i, col| {
        let (entry, k) = (col / 9, col % 9);
        REP_BASIS[i][(entry / 3, entry % 3)].coeffs[k].clone()
    })
}

// ---------------------------------------------------------------------------
// Gell-Mann matrices with entries in F
// ---------------------------------------------------------------------------

/// A 3×3 matrix with entries in F, row-major.
#[derive(Clone, PartialEq, Debug)]
pub struct MatF {
    pub entries: Vec<Elem>,
}

impl MatF {
    pub fn zeros() -> Self {
        MatF {
            entries: vec![elem_zero(DIM); 9],
        }
    }

    pub fn at(&self, i: usize, j: usize) -> &Elem {
        &self.entries[3 * i + j]
    }

    pub fn mul(&self, other: &MatF) -> MatF {
        let alg = &HOPF.alg;
        let mut out = MatF::zeros();
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = elem_zero(DIM);
                for k in 0..3 {
                    let p = alg.mul(self.at(i, k), other.at(k, j));
                    acc = crate::hopf::elem_add(&acc, &p);
                }
                out.entries[3 * i + j] = acc;
            }
        }
        out
    }

    pub fn sub(&self, other: &MatF) -> MatF {
        MatF {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(u, v)| crate::hopf::elem_sub(u, v))
                .collect(),
        }
    }

    pub fn trace(&self) -> Elem {
        let mut t = elem_zero(DIM);
        for i in 0..3 {
            t = crate::hopf::elem_add(&t, self.at(i, i));
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| crate::hopf::elem_is_zero(e))
    }
}

/// The unit-normalized Gell-Mann matrix `u_i·λ′_i` with entries in F,
/// obtained by pushing `u_i·λ_i ∈ M` through the left coaction and turning
/// the M-leg into 3×3 matrices: if `Δ_L(g) = Σ f ⊗ m` then
/// `g′[r][s] = Σ f·(matrix of m)[r][s]`. The same tracked units as in the
/// quantum plane keep every entry inside ℚ(q).
pub fn gell_mann_prime(i: usize) -> (MatF, qplane::GellMannUnit) {
    let (g, unit) = qplane::gell_mann(i);
    (coact_left_matrix(&g), unit)
}

/// The matrix form of the left coaction: `M → 3×3 matrices over F`.
/// This is an algebra homomorphism (the composition of `Δ_L` with the
/// matrix realization of the M-leg).
pub fn coact_left_matrix(z: &[Scalar]) -> MatF {
    let co = &*COACT_LEFT;
    let mut out = MatF::zeros();
    for (m_src, coeff) in z.iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        for (f, m, c) in &co.table[m_src] {
            let mat_m = qplane::to_matrix(&qplane::ALGEBRA.basis_elem(*m));
            for r in 0..3 {
                for s in 0..3 {
                    if mat_m[(r, s)].is_zero() {
                        continue;
                    }
                    out.entries[3 * r + s][*f] += &(&(c * coeff) * &mat_m[(r, s)]);
                }
            }
        }
    }
    out
}

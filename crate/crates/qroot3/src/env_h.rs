//! The 27-dimensional quantized enveloping ∗-Hopf algebra `H` at a cube
//! root of unity — generators X₊, X₋, K with K³ = 1, X₊³ = X₋³ = 0 — dual
//! to the 27-dimensional quantum SL(2) function algebra `F`.
//!
//! Provides the normal-form product on the monomial basis X₊^α K^β X₋^γ,
//! the Hopf maps, the H–F duality pairing, the induced actions on F and on
//! the 3×3 matrix algebra M, the Casimir element, the four regular
//! (anti)actions, and the faithful block-matrix realization
//! M₃ ⊕ (M_{2|1}(Λ²))₀ over a rank-2 Grassmann ring.

use std::fmt;
use std::sync::LazyLock;

use crate::hopf::{
    act_elem, action_from_coaction, elem_add, elem_scale, elem_zero, sparsify, tensor_mul2, Elem,
    FiniteAlgebra, HopfAlgebra, SparseVec,
};
use crate::linalg::Mat;
use crate::report::Report;
use crate::scalar::{Ring, Scalar};
use crate::{fun_f, qplane};

pub const DIM: usize = 27;

/// Basis index of `X₊^α K^β X₋^γ`.
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
    push("X+", alpha);
    push("K", beta);
    push("X-", gamma);
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

/// `λ = 1/(q − q⁻¹) = −(1 + 2q)/3` (so that `[X₊, X₋] = λ(K − K²)`).
pub fn lambda() -> Scalar {
    &Scalar::rat(-1, 3) + &(&Scalar::rat(-2, 3) * &Scalar::q())
}

/// `X₋ · (X₊^α K^β X₋^γ)` in normal form. Commuting X₋ through the X₊
/// powers uses
///   `X₋X₊  = X₊X₋ − λK + λK²`
///   `X₋X₊² = X₊²X₋ + λq·X₊K − λq²·X₊K²`
/// and `X₋K^β = q^{2β} K^β X₋` carries it through the K power.
fn lmul_xm(v: &[Scalar]) -> Elem {
    let lam = lambda();
    let lam_q = &lam * &Scalar::q();
    let lam_q2 = &lam * &Scalar::q2();
    let mut out = elem_zero(DIM);
    for (i, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let (al, be, ga) = exponents(i);
        if ga + 1 < 3 {
            let through = &Scalar::q_pow(2 * be as i64) * c;
            out[idx(al, be, ga + 1)] += &through;
        }
        match al {
            0 => {}
            1 => {
                out[idx(0, (be + 1) % 3, ga)] -= &(&lam * c);
                out[idx(0, (be + 2) % 3, ga)] += &(&lam * c);
            }
            2 => {
                out[idx(1, (be + 1) % 3, ga)] += &(&lam_q * c);
                out[idx(1, (be + 2) % 3, ga)] -= &(&lam_q2 * c);
            }
            _ => unreachable!(),
        }
    }
    out
}

/// `K · (X₊^α K^β X₋^γ) = q^{2α} X₊^α K^{β+1} X₋^γ`.
fn lmul_k(v: &[Scalar]) -> Elem {
    let mut out = elem_zero(DIM);
    for (i, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let (al, be, ga) = exponents(i);
        out[idx(al, (be + 1) % 3, ga)] += &(&Scalar::q_pow(2 * al as i64) * c);
    }
    out
}

/// `X₊ · (X₊^α K^β X₋^γ)`; zero when α = 2.
fn lmul_xp(v: &[Scalar]) -> Elem {
    let mut out = elem_zero(DIM);
    for (i, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let (al, be, ga) = exponents(i);
        if al + 1 < 3 {
            out[idx(al + 1, be, ga)] += c;
        }
    }
    out
}

fn product_basis(i: usize, j: usize) -> SparseVec {
    let (al, be, ga) = exponents(i);
    let mut v = elem_zero(DIM);
    v[j] = Scalar::one();
    for _ in 0..ga {
        v = lmul_xm(&v);
    }
    for _ in 0..be {
        v = lmul_k(&v);
    }
    for _ in 0..al {
        v = lmul_xp(&v);
    }
    sparsify(&v)
}

/// The Hopf ∗-algebra structure on H:
/// ΔX₊ = X₊⊗1 + K⊗X₊, ΔK = K⊗K, ΔX₋ = X₋⊗K⁻¹ + 1⊗X₋,
/// ε(X±) = 0, ε(K) = 1,
/// S(X₊) = −K⁻¹X₊, S(K) = K⁻¹, S(X₋) = −X₋K,
/// star X₊* = −q²X₊, X₋* = −qX₋, K* = K (with K⁻¹ stored as K²).
pub static HOPF: LazyLock<HopfAlgebra> = LazyLock::new(|| {
    let names = (0..DIM)
        .map(|i| {
            let (al, be, ga) = exponents(i);
            monomial_name(al, be, ga)
        })
        .collect();
    let alg = FiniteAlgebra::from_products("H", names, 0, product_basis);

    let e_xp = idx(1, 0, 0);
    let e_k = idx(0, 1, 0);
    let e_k2 = idx(0, 2, 0);
    let e_xm = idx(0, 0, 1);

    // Coproduct, extended multiplicatively inside H⊗H.
    let dd = DIM * DIM;
    let tidx = |i: usize, j: usize| i * DIM + j;
    let mut delta_xp = vec![Scalar::zero(); dd];
    delta_xp[tidx(e_xp, 0)] = Scalar::one();
    delta_xp[tidx(e_k, e_xp)] = Scalar::one();
    let mut delta_k = vec![Scalar::zero(); dd];
    delta_k[tidx(e_k, e_k)] = Scalar::one();
    let mut delta_xm = vec![Scalar::zero(); dd];
    delta_xm[tidx(e_xm, e_k2)] = Scalar::one();
    delta_xm[tidx(0, e_xm)] = Scalar::one();
    let mut unit2 = vec![Scalar::zero(); dd];
    unit2[tidx(0, 0)] = Scalar::one();

    let mut comult = Vec::with_capacity(DIM);
    for i in 0..DIM {
        let (al, be, ga) = exponents(i);
        let mut t = unit2.clone();
        for _ in 0..al {
            t = tensor_mul2(&alg, &alg, &t, &delta_xp);
        }
        for _ in 0..be {
            t = tensor_mul2(&alg, &alg, &t, &delta_k);
        }
        for _ in 0..ga {
            t = tensor_mul2(&alg, &alg, &t, &delta_xm);
        }
        let entries = sparsify(&t)
            .into_iter()
            .map(|(k, v)| (k / DIM, k % DIM, v))
            .collect();
        comult.push(entries);
    }

    // Counit: ε(X₊^α K^β X₋^γ) = δ_{α,0} δ_{γ,0}.
    let counit = (0..DIM)
        .map(|i| {
            let (al, _, ga) = exponents(i);
            if al == 0 && ga == 0 {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        })
        .collect();

    // Antipode: antimorphism, so S(X₊^α K^β X₋^γ) = S(X₋)^γ S(K)^β S(X₊)^α.
    let s_xp = {
        let v = alg.mul(&alg.basis_elem(e_k2), &alg.basis_elem(e_xp));
        v.iter().map(|c| -c).collect::<Elem>()
    };
    let s_k = alg.basis_elem(e_k2);
    let s_xm = {
        let v = alg.mul(&alg.basis_elem(e_xm), &alg.basis_elem(e_k));
        v.iter().map(|c| -c).collect::<Elem>()
    };
    let mut antipode: Mat<Scalar> = Mat::zeros(DIM, DIM);
    for i in 0..DIM {
        let (al, be, ga) = exponents(i);
        let img = alg.mul(
            &alg.mul(&alg.pow(&s_xm, ga), &alg.pow(&s_k, be)),
            &alg.pow(&s_xp, al),
        );
        for (j, v) in img.into_iter().enumerate() {
            antipode[(j, i)] = v;
        }
    }

    // Star: antilinear antimorphism, so
    // (X₊^α K^β X₋^γ)* = (X₋*)^γ (K*)^β (X₊*)^α
    //                  = (−q)^γ (−q²)^α · X₋^γ K^β X₊^α (reordered).
    let mut star: Mat<Scalar> = Mat::zeros(DIM, DIM);
    for i in 0..DIM {
        let (al, be, ga) = exponents(i);
        let mut coeff = Scalar::one();
        for _ in 0..ga {
            coeff = &coeff * &(-Scalar::q());
        }
        for _ in 0..al {
            coeff = &coeff * &(-Scalar::q2());
        }
        let img = alg.mul(
            &alg.mul(
                &alg.pow(&alg.basis_elem(e_xm), ga),
                &alg.pow(&alg.basis_elem(e_k), be),
            ),
            &alg.pow(&alg.basis_elem(e_xp), al),
        );
        for (j, v) in img.into_iter().enumerate() {
            star[(j, i)] = &v * &coeff;
        }
    }

    HopfAlgebra {
        alg,
        comult,
        counit,
        antipode,
        star: Some(star),
    }
});

pub fn xp() -> Elem {
    HOPF.alg.basis_elem(idx(1, 0, 0))
}

pub fn k() -> Elem {
    HOPF.alg.basis_elem(idx(0, 1, 0))
}

/// `K⁻¹ = K²`.
pub fn k_inv() -> Elem {
    HOPF.alg.basis_elem(idx(0, 2, 0))
}

pub fn xm() -> Elem {
    HOPF.alg.basis_elem(idx(0, 0, 1))
}

pub fn star_h(u: &[Scalar]) -> Elem {
    HOPF.star_elem(u)
}

/// The central element `C = X₊X₋ − (q⁻¹K + qK⁻¹)/3` (with q⁻¹ = q²,
/// K⁻¹ = K²).
pub fn casimir() -> Elem {
    let mut c = elem_zero(DIM);
    c[idx(1, 0, 1)] = Scalar::one();
    c[idx(0, 1, 0)] = -(&Scalar::q2() * &Scalar::rat(1, 3));
    c[idx(0, 2, 0)] = -(&Scalar::q() * &Scalar::rat(1, 3));
    c
}

// ---------------------------------------------------------------------------
// The action of H on the function algebra F, and the duality pairing
// ---------------------------------------------------------------------------

/// q-weight w(a^α b^β c^γ) = α + 2β + γ, so that K[u] = q^{w(u)}·u.
fn f_weight(i: usize) -> i64 {
    let (al, be, ga) = fun_f::exponents(i);
    (al + 2 * be + ga) as i64
}

/// Matrices of X₊, K, X₋ acting on the 27-dimensional function algebra.
/// K acts as the algebra automorphism `K[u] = q^{w(u)}·u`; X₊ and X₋ act as
/// twisted derivations
///   `X₊[uv] = X₊[u]·v + K[u]·X₊[v]`,
///   `X₋[uv] = X₋[u]·K⁻¹[v] + u·X₋[v]`,
/// seeded on generators by X₊[b] = a, X₋[a] = b, X₋[c] = d (zero
/// otherwise). Columns are built by peeling the leading generator of each
/// monomial, which only refers to shorter monomials.
static GEN_ACT_ON_F: LazyLock<[Mat<Scalar>; 3]> = LazyLock::new(|| {
    let falg = &fun_f::HOPF.alg;
    let fd = fun_f::DIM;
    let a_i = fun_f::idx(1, 0, 0);
    let b_i = fun_f::idx(0, 1, 0);
    let c_i = fun_f::idx(0, 0, 1);
    let d_el = fun_f::d_element();

    let k_mat = Mat::from_fn(fd, fd, |r, c| {
        if r == c {
            Scalar::q_pow(f_weight(r))
        } else {
            Scalar::zero()
        }
    });

    let mut xp_cols: Vec<Elem> = Vec::with_capacity(fd);
    let mut xm_cols: Vec<Elem> = Vec::with_capacity(fd);
    for i in 0..fd {
        let (al, be, ga) = fun_f::exponents(i);
        if al + be + ga == 0 {
            xp_cols.push(elem_zero(fd));
            xm_cols.push(elem_zero(fd));
            continue;
        }
        let (g, rest) = if al > 0 {
            (a_i, fun_f::idx(al - 1, be, ga))
        } else if be > 0 {
            (b_i, fun_f::idx(0, be - 1, ga))
        } else {
            (c_i, fun_f::idx(0, 0, ga - 1))
        };
        let g_el = falg.basis_elem(g);
        let rest_el = falg.basis_elem(rest);

        let mut xp_img = if g == b_i {
            falg.mul(&falg.basis_elem(a_i), &rest_el)
        } else {
            elem_zero(fd)
        };
        let tail = falg.mul(&g_el, &xp_cols[rest]);
        xp_img = elem_add(&xp_img, &elem_scale(&tail, &Scalar::q_pow(f_weight(g))));
        xp_cols.push(xp_img);

        let mut xm_img = if g == a_i {
            elem_scale(
                &falg.mul(&falg.basis_elem(b_i), &rest_el),
                &Scalar::q_pow(2 * f_weight(rest)),
            )
        } else if g == c_i {
            elem_scale(&falg.mul(&d_el, &rest_el), &Scalar::q_pow(2 * f_weight(rest)))
        } else {
            elem_zero(fd)
        };
        xm_img = elem_add(&xm_img, &falg.mul(&g_el, &xm_cols[rest]));
        xm_cols.push(xm_img);
    }

    let from_cols = |cols: &[Elem]| {
        Mat::from_fn(fd, fd, |r, c| cols[c][r].clone())
    };
    [from_cols(&xp_cols), k_mat, from_cols(&xm_cols)]
});

/// Matrices of all 27 basis elements acting on F: the monomial
/// `X₊^α K^β X₋^γ` acts as the operator composition X₊^α ∘ K^β ∘ X₋^γ.
pub static ACT_ON_F: LazyLock<Vec<Mat<Scalar>>> = LazyLock::new(|| {
    let [xp_m, k_m, xm_m] = &*GEN_ACT_ON_F;
    (0..DIM)
        .map(|i| {
            let (al, be, ga) = exponents(i);
            xp_m.pow(al).mul(&k_m.pow(be)).mul(&xm_m.pow(ga))
        })
        .collect()
});

/// `h[u]` for arbitrary `h ∈ H`, `u ∈ F`.
pub fn act_on_f(h: &[Scalar], u: &[Scalar]) -> Elem {
    act_elem(&ACT_ON_F, h, u)
}

/// The full duality table `⟨e_i, e_j⟩ = ε_F(e_i[e_j])`, i over the
/// monomial basis of H and j over the monomial basis of F.
pub static PAIRING: LazyLock<Mat<Scalar>> = LazyLock::new(|| {
    Mat::from_fn(DIM, fun_f::DIM, |i, j| {
        fun_f::HOPF.counit_elem(&ACT_ON_F[i].col(j))
    })
});

/// Bilinear extension of the duality pairing.
pub fn pairing(h: &[Scalar], u: &[Scalar]) -> Scalar {
    let pu = PAIRING.mul_vec(u);
    let mut out = Scalar::zero();
    for (i, c) in h.iter().enumerate() {
        if !c.is_zero() {
            out += &(c * &pu[i]);
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Actions on the 3×3 matrix algebra M
// ---------------------------------------------------------------------------

/// Left action `h▷z = (id ⊗ ⟨h,·⟩) Δ_R z`, dual to the right coaction.
pub static ACT_LEFT_ON_M: LazyLock<Vec<Mat<Scalar>>> =
    LazyLock::new(|| action_from_coaction(&PAIRING, &fun_f::COACT_RIGHT, qplane::DIM));

/// Right action `z◁h = (⟨h,·⟩ ⊗ id) Δ_L z`, dual to the left coaction.
pub static ACT_RIGHT_ON_M: LazyLock<Vec<Mat<Scalar>>> =
    LazyLock::new(|| action_from_coaction(&PAIRING, &fun_f::COACT_LEFT, qplane::DIM));

pub fn act_left_on_m(h: &[Scalar], z: &[Scalar]) -> Elem {
    act_elem(&ACT_LEFT_ON_M, h, z)
}

pub fn act_right_on_m(h: &[Scalar], z: &[Scalar]) -> Elem {
    act_elem(&ACT_RIGHT_ON_M, h, z)
}

/// The six commutation relations between the left-action operators and the
/// coordinate multiplication operators on M, as identities of 9×9
/// matrices, plus the conformal-weight bookkeeping that makes each
/// relation homogeneous (twice-weights: X₊ ↦ 2, K ↦ 0, X₋ ↦ −2, x ↦ 1,
/// y ↦ −1).
pub fn commutation_with_coordinates() -> Report {
    let mut rep = Report::new();
    let malg = &qplane::ALGEBRA;
    let lx = malg.left_mul_matrix(&qplane::x());
    let ly = malg.left_mul_matrix(&qplane::y());
    let ap = &ACT_LEFT_ON_M[idx(1, 0, 0)];
    let ak = &ACT_LEFT_ON_M[idx(0, 1, 0)];
    let akinv = &ACT_LEFT_ON_M[idx(0, 2, 0)];
    let am = &ACT_LEFT_ON_M[idx(0, 0, 1)];
    let q = Scalar::q();
    let q2 = Scalar::q2();

    let checks: [(&str, Mat<Scalar>, Mat<Scalar>); 6] = [
        ("X₊∘x = q·x∘X₊", ap.mul(&lx), lx.mul(ap).scale(&q)),
        (
            "X₋∘x = y∘K⁻¹ + x∘X₋",
            am.mul(&lx),
            ly.mul(akinv).add(&lx.mul(am)),
        ),
        ("K∘x = q·x∘K", ak.mul(&lx), lx.mul(ak).scale(&q)),
        (
            "X₊∘y = x + q²·y∘X₊",
            ap.mul(&ly),
            lx.add(&ly.mul(ap).scale(&q2)),
        ),
        ("X₋∘y = y∘X₋", am.mul(&ly), ly.mul(am)),
        ("K∘y = q²·y∘K", ak.mul(&ly), ly.mul(ak).scale(&q2)),
    ];
    for (name, lhs, rhs) in checks {
        rep.check(&format!("operator identity {name}"), lhs == rhs, || {
            "matrices differ".into()
        });
    }

    // Weight homogeneity: each relation's left side and every right-side
    // term carry the same total twice-weight.
    let relations: [(&str, i64, &[i64]); 6] = [
        ("X₊x", 2 + 1, &[1 + 2]),
        ("X₋x", -2 + 1, &[-1 + 0, 1 - 2]),
        ("Kx", 0 + 1, &[1 + 0]),
        ("X₊y", 2 - 1, &[1, -1 + 2]),
        ("X₋y", -2 - 1, &[-1 - 2]),
        ("Ky", 0 - 1, &[-1 + 0]),
    ];
    for (name, lhs_w, rhs_ws) in relations {
        rep.check(
            &format!("weight homogeneity of {name}"),
            rhs_ws.iter().all(|w| *w == lhs_w),
            || format!("lhs weight {lhs_w}, rhs weights {rhs_ws:?}"),
        );
    }
    rep
}

// ---------------------------------------------------------------------------
// Regular (anti)actions of H on itself
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RegularKind {
    /// Right action `R[X]Y = YX`.
    RightMul,
    /// Right action `R′[X]Y = S(X)·Y`.
    RightAntipode,
    /// Left action `L[X]Y = XY`.
    LeftMul,
    /// Left action `L′[X]Y = Y·S(X)`.
    LeftAntipode,
}

pub fn regular_action(kind: RegularKind, x: &[Scalar], y: &[Scalar]) -> Elem {
    let alg = &HOPF.alg;
    match kind {
        RegularKind::RightMul => alg.mul(y, x),
        RegularKind::RightAntipode => alg.mul(&HOPF.antipode_elem(x), y),
        RegularKind::LeftMul => alg.mul(x, y),
        RegularKind::LeftAntipode => alg.mul(y, &HOPF.antipode_elem(x)),
    }
}

// ---------------------------------------------------------------------------
// The block-matrix realization M₃ ⊕ (M_{2|1}(Λ²))₀
// ---------------------------------------------------------------------------

/// Element `c₀ + c₁θ₁ + c₂θ₂ + c₃θ₁θ₂` of the Grassmann algebra on two
/// generators (θᵢ² = 0, θ₁θ₂ = −θ₂θ₁); coefficient order (1, θ₁, θ₂, θ₁θ₂).
#[derive(Clone, PartialEq, Debug)]
pub struct GrassRing4 {
    pub coeffs: [Scalar; 4],
}

impl GrassRing4 {
    pub fn scalar(c: &Scalar) -> Self {
        let mut out = <Self as Ring>::zero();
        out.coeffs[0] = c.clone();
        out
    }

    pub fn theta1() -> Self {
        let mut out = <Self as Ring>::zero();
        out.coeffs[1] = Scalar::one();
        out
    }

    pub fn theta2() -> Self {
        let mut out = <Self as Ring>::zero();
        out.coeffs[2] = Scalar::one();
        out
    }

    pub fn theta12() -> Self {
        let mut out = <Self as Ring>::zero();
        out.coeffs[3] = Scalar::one();
        out
    }

    /// Lies in the even part, spanned by 1 and θ₁θ₂.
    pub fn is_even(&self) -> bool {
        self.coeffs[1].is_zero() && self.coeffs[2].is_zero()
    }

    /// Lies in the odd part, spanned by θ₁ and θ₂.
    pub fn is_odd(&self) -> bool {
        self.coeffs[0].is_zero() && self.coeffs[3].is_zero()
    }
}

impl Ring for GrassRing4 {
    fn zero() -> Self {
        GrassRing4 {
            coeffs: [Scalar::zero(), Scalar::zero(), Scalar::zero(), Scalar::zero()],
        }
    }

    fn one() -> Self {
        Self::scalar(&Scalar::one())
    }

    fn add(&self, o: &Self) -> Self {
        GrassRing4 {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] + &o.coeffs[i]),
        }
    }

    fn sub(&self, o: &Self) -> Self {
        GrassRing4 {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] - &o.coeffs[i]),
        }
    }

    fn mul(&self, o: &Self) -> Self {
        let a = &self.coeffs;
        let b = &o.coeffs;
        GrassRing4 {
            coeffs: [
                &a[0] * &b[0],
                &(&a[0] * &b[1]) + &(&a[1] * &b[0]),
                &(&a[0] * &b[2]) + &(&a[2] * &b[0]),
                &(&(&a[0] * &b[3]) + &(&a[3] * &b[0]))
                    + &(&(&a[1] * &b[2]) - &(&a[2] * &b[1])),
            ],
        }
    }

    fn neg(&self) -> Self {
        GrassRing4 {
            coeffs: std::array::from_fn(|i| -&self.coeffs[i]),
        }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn conj(&self) -> Self {
        GrassRing4 {
            coeffs: std::array::from_fn(|i| self.coeffs[i].conj()),
        }
    }
}

impl fmt::Display for GrassRing4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const NAMES: [&str; 4] = ["", "θ1", "θ2", "θ1θ2"];
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if i == 0 {
                parts.push(format!("{c}"));
            } else if *c == Scalar::one() {
                parts.push(NAMES[i].to_string());
            } else if c.is_composite() {
                parts.push(format!("({c})·{}", NAMES[i]));
            } else {
                parts.push(format!("{c}·{}", NAMES[i]));
            }
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Element of M₃ ⊕ (M_{2|1}(Λ²))₀: a 3×3 scalar block and a 3×3 block over
/// the rank-2 Grassmann ring whose entries are even on the (2+1)-diagonal
/// blocks and odd on the off-blocks.
#[derive(Clone, PartialEq, Debug)]
pub struct StructuralElem {
    pub block1: Mat<Scalar>,
    pub block2: Mat<GrassRing4>,
}

impl StructuralElem {
    pub fn zero() -> Self {
        StructuralElem {
            block1: Mat::zeros(3, 3),
            block2: Mat::zeros(3, 3),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        StructuralElem {
            block1: self.block1.mul(&o.block1),
            block2: self.block2.mul(&o.block2),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        StructuralElem {
            block1: self.block1.add(&o.block1),
            block2: self.block2.add(&o.block2),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        StructuralElem {
            block1: self.block1.scale(c),
            block2: self.block2.scale(&GrassRing4::scalar(c)),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.block1 == Mat::zeros(3, 3) && self.block2 == Mat::zeros(3, 3)
    }

    /// The grading pattern of the even Grassmann envelope: entries (i,j)
    /// with i,j < 2 or i = j = 2 are even, the remaining four are odd.
    pub fn parity_ok(&self) -> bool {
        (0..3).all(|i| {
            (0..3).all(|j| {
                let e = &self.block2[(i, j)];
                if (i < 2 && j < 2) || (i == 2 && j == 2) {
                    e.is_even()
                } else {
                    e.is_odd()
                }
            })
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        let b1: Vec<Vec<serde_json::Value>> = (0..3)
            .map(|i| {
                (0..3)
                    .map(|j| serde_json::to_value(&self.block1[(i, j)]).unwrap())
                    .collect()
            })
            .collect();
        let b2: Vec<Vec<serde_json::Value>> = (0..3)
            .map(|i| {
                (0..3)
                    .map(|j| {
                        let coeffs: Vec<serde_json::Value> = self.block2[(i, j)]
                            .coeffs
                            .iter()
                            .map(|c| serde_json::to_value(c).unwrap())
                            .collect();
                        serde_json::json!({ "coeffs": coeffs })
                    })
                    .collect()
            })
            .collect();
        serde_json::json!({ "algebra": "H", "block1": b1, "block2": b2 })
    }
}

/// Images of the three generators:
///   X₊ ↦ E₁₂ + E₂₃ ⊕ [(1 − θ₁θ₂/2)F₁₂ + θ₁(F₂₃ + F₃₁)]
///   X₋ ↦ −E₂₁ − E₃₂ ⊕ [(1 − θ₁θ₂/2)F₂₁ + θ₂(F₁₃ − F₃₂)]
///   K  ↦ diag(q², 1, q⁻²) ⊕ diag(q, q⁻¹, 1)
fn structural_generators() -> (StructuralElem, StructuralElem, StructuralElem) {
    let one = GrassRing4::one();
    let half12 = {
        // 1 − θ₁θ₂/2
        let mut g = GrassRing4::one();
        g.coeffs[3] = Scalar::rat(-1, 2);
        g
    };
    let th1 = GrassRing4::theta1();
    let th2 = GrassRing4::theta2();
    let z = GrassRing4::zero();
    let sc = |c: Scalar| GrassRing4::scalar(&c);

    let mut xp = StructuralElem::zero();
    xp.block1[(0, 1)] = Scalar::one();
    xp.block1[(1, 2)] = Scalar::one();
    xp.block2 = Mat::from_rows(vec![
        vec![z.clone(), half12.clone(), z.clone()],
        vec![z.clone(), z.clone(), th1.clone()],
        vec![th1.clone(), z.clone(), z.clone()],
    ]);

    let mut xm = StructuralElem::zero();
    xm.block1[(1, 0)] = -Scalar::one();
    xm.block1[(2, 1)] = -Scalar::one();
    xm.block2 = Mat::from_rows(vec![
        vec![z.clone(), z.clone(), th2.clone()],
        vec![half12.clone(), z.clone(), z.clone()],
        vec![z.clone(), th2.neg(), z.clone()],
    ]);

    let mut km = StructuralElem::zero();
    km.block1[(0, 0)] = Scalar::q2();
    km.block1[(1, 1)] = Scalar::one();
    km.block1[(2, 2)] = Scalar::q(); // q⁻² = q
    km.block2 = Mat::from_rows(vec![
        vec![sc(Scalar::q()), z.clone(), z.clone()],
        vec![z.clone(), sc(Scalar::q2()), z.clone()], // q⁻¹ = q²
        vec![z.clone(), z.clone(), one],
    ]);

    (xp, km, xm)
}

/// Images of all 27 basis monomials under the block-matrix realization.
pub static STRUCTURAL_BASIS: LazyLock<Vec<StructuralElem>> = LazyLock::new(|| {
    let (sxp, sk, sxm) = structural_generators();
    let mut id = StructuralElem::zero();
    id.block1 = Mat::identity(3);
    id.block2 = Mat::identity(3);
    (0..DIM)
        .map(|i| {
            let (al, be, ga) = exponents(i);
            let mut m = id.clone();
            for _ in 0..al {
                m = m.mul(&sxp);
            }
            for _ in 0..be {
                m = m.mul(&sk);
            }
            for _ in 0..ga {
                m = m.mul(&sxm);
            }
            m
        })
        .collect()
});

pub fn structural_rep(h: &[Scalar]) -> StructuralElem {
    let mut out = StructuralElem::zero();
    for (i, c) in h.iter().enumerate() {
        if !c.is_zero() {
            out = out.add(&STRUCTURAL_BASIS[i].scale(c));
        }
    }
    out
}

/// 27×45 matrix whose i-th row lists all coordinates of the image of the
/// i-th basis monomial (9 scalar entries + 9·4 Grassmann coefficients);
/// full rank certifies faithfulness.
pub fn structural_coefficient_matrix() -> Mat<Scalar> {
    Mat::from_fn(DIM, 45, |i, col| {
        let m = &STRUCTURAL_BASIS[i];
        if col < 9 {
            m.block1[(col / 3, col % 3)].clone()
        } else {
            let e = col - 9;
            m.block2[(e / 12, (e / 4) % 3)].coeffs[e % 4].clone()
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{
        check_hopf_pairing, check_left_module_algebra, check_right_module_algebra, elem_is_zero,
        elem_sub, tensor_index,
    };

    fn alg() -> &'static FiniteAlgebra {
        &HOPF.alg
    }

    fn scaled(i: usize, c: Scalar) -> Elem {
        let mut v = elem_zero(DIM);
        v[i] = c;
        v
    }

    #[test]
    fn defining_relations_hold() {
        let alg = alg();
        // K X₊ = q² X₊ K and K X₋ = q⁻² X₋ K = q X₋ K.
        assert_eq!(
            alg.mul(&k(), &xp()),
            scaled(idx(1, 1, 0), Scalar::q2()),
            "K·X₊"
        );
        // K X₋ is already normally ordered; the relation K X₋ = q⁻² X₋ K
        // shows up when reordering the reversed product: X₋ K = q² K X₋.
        assert_eq!(alg.mul(&k(), &xm()), scaled(idx(0, 1, 1), Scalar::one()));
        assert_eq!(alg.mul(&xm(), &k()), scaled(idx(0, 1, 1), Scalar::q2()), "X₋·K");
        // [X₊, X₋] = (K − K⁻¹)/(q − q⁻¹) = λ(K − K²).
        let mut rhs = elem_zero(DIM);
        rhs[idx(0, 1, 0)] = lambda();
        rhs[idx(0, 2, 0)] = -lambda();
        assert_eq!(alg.commutator(&xp(), &xm()), rhs, "[X₊,X₋]");
        // K³ = 1, X₊³ = X₋³ = 0, and K·K² = 1.
        assert_eq!(alg.pow(&k(), 3), alg.unit());
        assert!(elem_is_zero(&alg.pow(&xp(), 3)));
        assert!(elem_is_zero(&alg.pow(&xm(), 3)));
        assert!(elem_is_zero(&alg.mul(&alg.pow(&xp(), 2), &xp())));
        assert_eq!(alg.mul(&k(), &k_inv()), alg.unit());
        // λ really is 1/(q − q⁻¹).
        assert_eq!(&lambda() * &(&Scalar::q() - &Scalar::q2()), Scalar::one());
        alg.check_associativity().assert_all();
    }

    #[test]
    fn hopf_axioms_and_antipode_square() {
        HOPF.check_all().assert_all();

        // Generator coproducts.
        let dd = |u: &[Scalar]| HOPF.comult_elem(u);
        let mut exp_xp = vec![Scalar::zero(); DIM * DIM];
        exp_xp[tensor_index(idx(1, 0, 0), DIM, 0)] = Scalar::one();
        exp_xp[tensor_index(idx(0, 1, 0), DIM, idx(1, 0, 0))] = Scalar::one();
        assert_eq!(dd(&xp()), exp_xp, "ΔX₊ = X₊⊗1 + K⊗X₊");
        let mut exp_xm = vec![Scalar::zero(); DIM * DIM];
        exp_xm[tensor_index(idx(0, 0, 1), DIM, idx(0, 2, 0))] = Scalar::one();
        exp_xm[tensor_index(0, DIM, idx(0, 0, 1))] = Scalar::one();
        assert_eq!(dd(&xm()), exp_xm, "ΔX₋ = X₋⊗K⁻¹ + 1⊗X₋");
        let mut exp_k = vec![Scalar::zero(); DIM * DIM];
        exp_k[tensor_index(idx(0, 1, 0), DIM, idx(0, 1, 0))] = Scalar::one();
        assert_eq!(dd(&k()), exp_k, "ΔK = K⊗K");

        // Counits.
        assert!(HOPF.counit_elem(&xp()).is_zero());
        assert!(HOPF.counit_elem(&xm()).is_zero());
        assert_eq!(HOPF.counit_elem(&k()), Scalar::one());

        // Antipodes in normal form: S(X₊) = −K²X₊ = −q·X₊K²,
        // S(X₋) = −X₋K = −q²·KX₋, S(K) = K².
        assert_eq!(HOPF.antipode_elem(&xp()), scaled(idx(1, 2, 0), -Scalar::q()));
        assert_eq!(HOPF.antipode_elem(&xm()), scaled(idx(0, 1, 1), -Scalar::q2()));
        assert_eq!(HOPF.antipode_elem(&k()), k_inv());

        // S² is conjugation by K⁻¹: S²(u) = K⁻¹uK on every basis element,
        // and in particular S²(X₊) = K⁻¹X₊K = q·X₊.
        let alg = alg();
        for i in 0..DIM {
            let u = alg.basis_elem(i);
            let s2 = HOPF.antipode_elem(&HOPF.antipode_elem(&u));
            let conj = alg.mul(&alg.mul(&k_inv(), &u), &k());
            assert_eq!(s2, conj, "S² ≠ K⁻¹·K-conjugation at {}", alg.basis_names[i]);
        }
        assert_eq!(
            HOPF.antipode_elem(&HOPF.antipode_elem(&xp())),
            scaled(idx(1, 0, 0), Scalar::q())
        );
    }

    #[test]
    fn pairing_is_the_hopf_duality() {
        // Generator table.
        let falg = &fun_f::HOPF.alg;
        let fa = fun_f::idx(1, 0, 0);
        let fb = fun_f::idx(0, 1, 0);
        let fc = fun_f::idx(0, 0, 1);
        let cases = [
            (idx(0, 1, 0), fa, Scalar::q()),
            (idx(0, 1, 0), fb, Scalar::zero()),
            (idx(0, 1, 0), fc, Scalar::zero()),
            (idx(1, 0, 0), fa, Scalar::zero()),
            (idx(1, 0, 0), fb, Scalar::one()),
            (idx(1, 0, 0), fc, Scalar::zero()),
            (idx(0, 0, 1), fa, Scalar::zero()),
            (idx(0, 0, 1), fb, Scalar::zero()),
            (idx(0, 0, 1), fc, Scalar::one()),
        ];
        for (h, f, want) in cases {
            assert_eq!(PAIRING[(h, f)], want, "⟨{}, {}⟩", h, f);
        }
        // Fourth column: ⟨K,d⟩ = q², ⟨X₊,d⟩ = ⟨X₋,d⟩ = 0.
        let d = fun_f::d_element();
        assert_eq!(pairing(&k(), &d), Scalar::q2());
        assert!(pairing(&xp(), &d).is_zero());
        assert!(pairing(&xm(), &d).is_zero());
        // Unit row/column conventions.
        assert_eq!(pairing(&alg().unit(), &fun_f::b()), Scalar::zero());
        assert_eq!(pairing(&alg().unit(), &falg.unit()), Scalar::one());

        // Non-degeneracy: the 27×27 table has full rank.
        assert_eq!(PAIRING.rank(), 27);

        // Full duality of the two Hopf structures.
        check_hopf_pairing(&HOPF, &fun_f::HOPF, &PAIRING).assert_all();
    }

    #[test]
    fn action_on_functions_matches_the_generator_table() {
        let falg = &fun_f::HOPF.alg;
        let a = fun_f::a();
        let b = fun_f::b();
        let c = fun_f::c();
        let d = fun_f::d_element();
        let zero = elem_zero(fun_f::DIM);
        let sc = |u: &Elem, s: Scalar| elem_scale(u, &s);

        // X₊: b ↦ a, d ↦ c, a and c ↦ 0.
        assert_eq!(act_on_f(&xp(), &a), zero);
        assert_eq!(act_on_f(&xp(), &b), a);
        assert_eq!(act_on_f(&xp(), &c), zero);
        assert_eq!(act_on_f(&xp(), &d), c);
        // X₋: a ↦ b, c ↦ d, b and d ↦ 0.
        assert_eq!(act_on_f(&xm(), &a), b);
        assert_eq!(act_on_f(&xm(), &b), zero);
        assert_eq!(act_on_f(&xm(), &c), d);
        assert_eq!(act_on_f(&xm(), &d), zero);
        // K: the q-weight automorphism.
        assert_eq!(act_on_f(&k(), &a), sc(&a, Scalar::q()));
        assert_eq!(act_on_f(&k(), &b), sc(&b, Scalar::q2()));
        assert_eq!(act_on_f(&k(), &c), sc(&c, Scalar::q()));
        assert_eq!(act_on_f(&k(), &d), sc(&d, Scalar::q2()));

        // F is a left H-module algebra under this action.
        check_left_module_algebra(&HOPF, &ACT_ON_F, falg, "H acting on F").assert_all();

        // Left invariance: Δ∘h[·] = (id ⊗ h[·])∘Δ for every basis h and u.
        let fd = fun_f::DIM;
        for hi in 0..DIM {
            let m = &ACT_ON_F[hi];
            for u in 0..fd {
                let lhs = fun_f::HOPF.comult_elem(&m.col(u));
                let du = fun_f::HOPF.comult_elem(&falg.basis_elem(u));
                let mut rhs = vec![Scalar::zero(); fd * fd];
                for (t, cv) in du.iter().enumerate() {
                    if cv.is_zero() {
                        continue;
                    }
                    let (u1, u2) = (t / fd, t % fd);
                    for (r, w) in m.col(u2).into_iter().enumerate() {
                        if !w.is_zero() {
                            rhs[tensor_index(u1, fd, r)] += &(&w * cv);
                        }
                    }
                }
                assert_eq!(lhs, rhs, "invariance fails at h={hi}, u={u}");
            }
        }

        // The pairing is recovered as ε∘h[·].
        for hi in 0..DIM {
            for u in 0..fd {
                assert_eq!(
                    fun_f::HOPF.counit_elem(&ACT_ON_F[hi].col(u)),
                    PAIRING[(hi, u)]
                );
            }
        }
    }

    /// All 54 generator actions on the monomial basis of M, frozen as
    /// golden data: (twice exponents of source, images under K, X₊, X₋)
    /// for the right action and then the left action. Each image is a list
    /// of (integer multiplier, q-power, target monomial).
    type GoldenRow = (
        (usize, usize),
        [Vec<(i64, i64, (usize, usize))>; 3],
        [Vec<(i64, i64, (usize, usize))>; 3],
    );

    fn golden_action_table() -> Vec<GoldenRow> {
        vec![
            (
                (0, 0),
                [vec![(1, 0, (0, 0))], vec![], vec![]],
                [vec![(1, 0, (0, 0))], vec![], vec![]],
            ),
            (
                (2, 1),
                [
                    vec![(1, 1, (2, 1))],
                    vec![(-1, 0, (1, 2))],
                    vec![(1, 0, (0, 0))],
                ],
                [
                    vec![(1, 1, (2, 1))],
                    vec![(1, 2, (0, 0))],
                    vec![(-1, 0, (1, 2))],
                ],
            ),
            (
                (1, 2),
                [
                    vec![(1, 2, (1, 2))],
                    vec![(1, 0, (0, 0))],
                    vec![(-1, 0, (2, 1))],
                ],
                [
                    vec![(1, 2, (1, 2))],
                    vec![(-1, 0, (2, 1))],
                    vec![(1, 2, (0, 0))],
                ],
            ),
            (
                (1, 0),
                [vec![(1, 1, (1, 0))], vec![(1, 0, (0, 1))], vec![]],
                [vec![(1, 1, (1, 0))], vec![], vec![(1, 0, (0, 1))]],
            ),
            (
                (0, 1),
                [vec![(1, 2, (0, 1))], vec![], vec![(1, 0, (1, 0))]],
                [vec![(1, 2, (0, 1))], vec![(1, 0, (1, 0))], vec![]],
            ),
            (
                (2, 2),
                [
                    vec![(1, 0, (2, 2))],
                    vec![(-1, 0, (1, 0))],
                    vec![(-1, 0, (0, 1))],
                ],
                [
                    vec![(1, 0, (2, 2))],
                    vec![(-1, 1, (0, 1))],
                    vec![(-1, 1, (1, 0))],
                ],
            ),
            (
                (2, 0),
                [vec![(1, 2, (2, 0))], vec![(-1, 0, (1, 1))], vec![]],
                [vec![(1, 2, (2, 0))], vec![], vec![(-1, 2, (1, 1))]],
            ),
            (
                (1, 1),
                [
                    vec![(1, 0, (1, 1))],
                    vec![(1, 0, (0, 2))],
                    vec![(1, 0, (2, 0))],
                ],
                [
                    vec![(1, 0, (1, 1))],
                    vec![(1, 1, (2, 0))],
                    vec![(1, 1, (0, 2))],
                ],
            ),
            (
                (0, 2),
                [vec![(1, 1, (0, 2))], vec![], vec![(-1, 0, (1, 1))]],
                [vec![(1, 1, (0, 2))], vec![(-1, 2, (1, 1))], vec![]],
            ),
        ]
    }

    #[test]
    fn golden_action_table_on_m() {
        let gens = [k(), xp(), xm()];
        let build = |terms: &[(i64, i64, (usize, usize))]| {
            let mut v = elem_zero(qplane::DIM);
            for (m, p, (r, s)) in terms {
                v[qplane::idx(*r, *s)] +=
                    &(&Scalar::from_int(*m) * &Scalar::q_pow(*p));
            }
            v
        };
        for ((r, s), right, left) in golden_action_table() {
            let z = qplane::ALGEBRA.basis_elem(qplane::idx(r, s));
            let name = &qplane::ALGEBRA.basis_names[qplane::idx(r, s)];
            for (gi, gen) in gens.iter().enumerate() {
                assert_eq!(
                    act_right_on_m(gen, &z),
                    build(&right[gi]),
                    "right action of generator {gi} on {name}"
                );
                assert_eq!(
                    act_left_on_m(gen, &z),
                    build(&left[gi]),
                    "left action of generator {gi} on {name}"
                );
            }
        }
    }

    #[test]
    fn m_is_a_module_algebra_on_both_sides() {
        let malg = &qplane::ALGEBRA;
        check_left_module_algebra(&HOPF, &ACT_LEFT_ON_M, malg, "H▷M").assert_all();
        check_right_module_algebra(&HOPF, &ACT_RIGHT_ON_M, malg, "M◁H").assert_all();

        // Independent contraction through the coactions, for every basis
        // pair: h▷z = Σ z₍₀₎⟨h, z₍₁₎⟩ and z◁h = Σ ⟨h, z₍₋₁₎⟩z₍₀₎.
        let dm = qplane::DIM;
        let fd = fun_f::DIM;
        for hi in 0..DIM {
            let h = alg().basis_elem(hi);
            for zi in 0..dm {
                let z = malg.basis_elem(zi);
                let right = fun_f::COACT_RIGHT.apply(&z, fd, dm);
                let mut left_act = elem_zero(dm);
                for (t, c) in right.iter().enumerate() {
                    if !c.is_zero() {
                        left_act[t % dm] += &(c * &PAIRING[(hi, t / dm)]);
                    }
                }
                assert_eq!(act_left_on_m(&h, &z), left_act);

                let leftco = fun_f::COACT_LEFT.apply(&z, fd, dm);
                let mut right_act = elem_zero(dm);
                for (t, c) in leftco.iter().enumerate() {
                    if !c.is_zero() {
                        right_act[t % dm] += &(c * &PAIRING[(hi, t / dm)]);
                    }
                }
                assert_eq!(act_right_on_m(&h, &z), right_act);
            }
        }
    }

    #[test]
    fn star_structure_and_duality_compatibility() {
        // Generator images.
        assert_eq!(star_h(&xp()), scaled(idx(1, 0, 0), -Scalar::q2()));
        assert_eq!(star_h(&xm()), scaled(idx(0, 0, 1), -Scalar::q()));
        assert_eq!(star_h(&k()), k());
        assert_eq!(star_h(&star_h(&xp())), xp());

        // ⟨h*, u⟩ = conj ⟨h, (Su)*⟩ on all basis pairs.
        let falg = &fun_f::HOPF.alg;
        for hi in 0..DIM {
            let hs = star_h(&alg().basis_elem(hi));
            for u in 0..fun_f::DIM {
                let su_star = fun_f::HOPF.star_elem(&fun_f::HOPF.antipode_elem(&falg.basis_elem(u)));
                let lhs = pairing(&hs, &falg.basis_elem(u));
                let rhs = pairing(&alg().basis_elem(hi), &su_star).conj();
                assert_eq!(lhs, rhs, "star-duality at h={hi}, u={u}");
            }
        }
        // The worked instance: both sides equal −q².
        let b = fun_f::b();
        assert_eq!(pairing(&star_h(&xp()), &b), -Scalar::q2());
        let sb_star = fun_f::HOPF.star_elem(&fun_f::HOPF.antipode_elem(&b));
        assert_eq!(pairing(&xp(), &sb_star).conj(), -Scalar::q2());

        // Star–action covariance on M: h[z*] = [(Sh)*[z]]* for every basis
        // h and z.
        for hi in 0..DIM {
            let h = alg().basis_elem(hi);
            let sh_star = star_h(&HOPF.antipode_elem(&h));
            for zi in 0..qplane::DIM {
                let z = qplane::ALGEBRA.basis_elem(zi);
                let lhs = act_left_on_m(&h, &qplane::star(&z));
                let rhs = qplane::star(&act_left_on_m(&sh_star, &z));
                assert_eq!(lhs, rhs, "star covariance at h={hi}, z={zi}");
            }
        }
    }

    #[test]
    fn casimir_is_central() {
        let alg = alg();
        let c = casimir();
        // Normal form: X₊X₋ − (q²/3)K − (q/3)K².
        assert_eq!(
            alg.mul(&xp(), &xm()),
            {
                let mut v = c.clone();
                v[idx(0, 1, 0)] += &(&Scalar::q2() * &Scalar::rat(1, 3));
                v[idx(0, 2, 0)] += &(&Scalar::q() * &Scalar::rat(1, 3));
                v
            },
            "C + (q⁻¹K + qK⁻¹)/3 = X₊X₋"
        );
        for i in 0..DIM {
            let u = alg.basis_elem(i);
            assert!(
                elem_is_zero(&alg.commutator(&c, &u)),
                "Casimir does not commute with {}",
                alg.basis_names[i]
            );
        }
    }

    #[test]
    fn structural_realization_is_faithful() {
        // Generator images are the defining block matrices.
        let (sxp, sk, sxm) = structural_generators();
        assert_eq!(STRUCTURAL_BASIS[idx(1, 0, 0)], sxp);
        assert_eq!(STRUCTURAL_BASIS[idx(0, 1, 0)], sk);
        assert_eq!(STRUCTURAL_BASIS[idx(0, 0, 1)], sxm);
        assert_eq!(sk.block1, Mat::from_rows(vec![
            vec![Scalar::q2(), Scalar::zero(), Scalar::zero()],
            vec![Scalar::zero(), Scalar::one(), Scalar::zero()],
            vec![Scalar::zero(), Scalar::zero(), Scalar::q()],
        ]));

        // Algebra morphism on all 27² basis pairs.
        let alg = alg();
        for i in 0..DIM {
            for j in 0..DIM {
                let prod = structural_rep(&alg.mul(&alg.basis_elem(i), &alg.basis_elem(j)));
                let matmul = STRUCTURAL_BASIS[i].mul(&STRUCTURAL_BASIS[j]);
                assert_eq!(prod, matmul, "morphism fails at ({i}, {j})");
            }
        }

        // Every image respects the even/odd block grading.
        for (i, m) in STRUCTURAL_BASIS.iter().enumerate() {
            assert!(m.parity_ok(), "parity fails at basis {i}");
        }

        // Faithfulness: the 27×45 coordinate matrix has full rank.
        assert_eq!(structural_coefficient_matrix().rank(), 27);

        // The Casimir maps to (−2/3)·1 ⊕ diag(1/3 − θ₁θ₂, 1/3 − θ₁θ₂,
        // 1/3 + θ₁θ₂).
        let c = structural_rep(&casimir());
        assert_eq!(c.block1, Mat::identity(3).scale(&Scalar::rat(-2, 3)));
        let mut even_m = GrassRing4::scalar(&Scalar::rat(1, 3));
        even_m.coeffs[3] = -Scalar::one();
        let mut even_p = GrassRing4::scalar(&Scalar::rat(1, 3));
        even_p.coeffs[3] = Scalar::one();
        for i in 0..3 {
            for j in 0..3 {
                let want = if i == j {
                    if i == 2 { even_p.clone() } else { even_m.clone() }
                } else {
                    GrassRing4::zero()
                };
                assert_eq!(c.block2[(i, j)], want, "Casimir block2 at ({i},{j})");
            }
        }

        // JSON shape for the block-matrix realization.
        let js = sk.to_json();
        assert_eq!(js["algebra"], "H");
        assert_eq!(js["block1"][0][0], serde_json::json!({"r0": "-1", "r1": "-1"}));
        assert_eq!(
            js["block2"][2][2]["coeffs"][0],
            serde_json::json!({"r0": "1", "r1": "0"})
        );
    }

    #[test]
    fn regular_actions_behave_as_expected() {
        let alg = alg();
        // Worked instances: R[X₊](K) = KX₊ = q²X₊K and
        // L′[X₊](K) = K·S(X₊) = −X₊.
        assert_eq!(
            regular_action(RegularKind::RightMul, &xp(), &k()),
            scaled(idx(1, 1, 0), Scalar::q2())
        );
        assert_eq!(
            regular_action(RegularKind::LeftAntipode, &xp(), &k()),
            scaled(idx(1, 0, 0), -Scalar::one())
        );

        // Module axioms on all basis triples: L and L′ are left actions,
        // R and R′ are right actions.
        for g in 0..DIM {
            let ge = alg.basis_elem(g);
            for h in 0..DIM {
                let he = alg.basis_elem(h);
                let gh = alg.mul(&ge, &he);
                let hg = alg.mul(&he, &ge);
                for y in 0..DIM {
                    let ye = alg.basis_elem(y);
                    let nested = |kind: RegularKind| {
                        regular_action(kind, &ge, &regular_action(kind, &he, &ye))
                    };
                    assert_eq!(nested(RegularKind::LeftMul), regular_action(RegularKind::LeftMul, &gh, &ye));
                    assert_eq!(
                        nested(RegularKind::LeftAntipode),
                        regular_action(RegularKind::LeftAntipode, &gh, &ye)
                    );
                    assert_eq!(nested(RegularKind::RightMul), regular_action(RegularKind::RightMul, &hg, &ye));
                    assert_eq!(
                        nested(RegularKind::RightAntipode),
                        regular_action(RegularKind::RightAntipode, &hg, &ye)
                    );
                }
            }
        }

        // None of them makes H an H-module algebra: explicit witness for L
        // at (X₊, K, K): L_{X₊}[K·K] ≠ Σ L_{X₊⁽¹⁾}[K]·L_{X₊⁽²⁾}[K].
        let lhs = regular_action(RegularKind::LeftMul, &xp(), &alg.mul(&k(), &k()));
        let mut rhs = elem_zero(DIM);
        for (h1, h2, c) in &HOPF.comult[idx(1, 0, 0)] {
            let t1 = regular_action(RegularKind::LeftMul, &alg.basis_elem(*h1), &k());
            let t2 = regular_action(RegularKind::LeftMul, &alg.basis_elem(*h2), &k());
            rhs = elem_add(&rhs, &elem_scale(&alg.mul(&t1, &t2), c));
        }
        assert!(!elem_is_zero(&elem_sub(&lhs, &rhs)));
        // The defect is q·X₊ exactly.
        assert_eq!(elem_sub(&rhs, &lhs), scaled(idx(1, 0, 0), Scalar::q()));
    }

    #[test]
    fn coordinate_commutation_relations_hold() {
        commutation_with_coordinates().assert_all();
    }

    #[test]
    fn display_names_are_normal_forms() {
        assert_eq!(monomial_name(0, 0, 0), "1");
        assert_eq!(monomial_name(1, 2, 1), "X+*K^2*X-");
        assert_eq!(alg().basis_names[idx(2, 0, 1)], "X+^2*X-");
        let g = GrassRing4 {
            coeffs: [
                Scalar::one(),
                Scalar::zero(),
                Scalar::zero(),
                Scalar::rat(-1, 2),
            ],
        };
        assert_eq!(format!("{g}"), "1 + -1/2·θ1θ2");
    }
}

//! Noncommutative connections on the algebra M, viewed as a right module
//! over itself: a connection is a one-form ω ∈ Ω¹, its curvature is
//! ρ = dω + ω², and gauge transformations by invertible u ∈ M act as
//! ω′ = u⁻¹ωu + u⁻¹du, conjugating the curvature.
//!
//! Connection coefficients are polynomials in formal parameters (see
//! [`crate::poly`]), so every stated curvature identity is certified as a
//! polynomial identity, not just at sampled points. The distinguished
//! 18-parameter family decomposes Ω¹ into its five H-representation blocks;
//! each block's curvature collapses as predicted (two blocks have φ² = 0,
//! two have dφ = 0, and the six-dimensional block mixes), always landing in
//! a single 3-dimensional class of Ω².

use crate::poly::PolyScalar;
use crate::qplane;
use crate::scalar::{Ring, Scalar};
use crate::wz_forms::{self, WZForm, DIM, DIM0, DIM1, flat1, flat2};

// ---------------------------------------------------------------------------
// Forms with polynomial coefficients
// ---------------------------------------------------------------------------

/// An element of Ω with polynomial coefficients in formal parameters.
#[derive(Clone, PartialEq, Debug)]
pub struct SymForm {
    pub coeffs: Vec<PolyScalar>,
}

impl SymForm {
    pub fn zero() -> Self {
        SymForm {
            coeffs: vec![PolyScalar::zero(); DIM],
        }
    }

    /// Embed a numeric form as a constant-coefficient symbolic form.
    pub fn from_wzform(u: &WZForm) -> Self {
        SymForm {
            coeffs: u
                .coeffs
                .iter()
                .map(PolyScalar::from_scalar)
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        SymForm {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        SymForm {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        SymForm {
            coeffs: self.coeffs.iter().map(|a| a.neg()).collect(),
        }
    }

    pub fn scale(&self, p: &PolyScalar) -> Self {
        SymForm {
            coeffs: self.coeffs.iter().map(|a| a.mul(p)).collect(),
        }
    }

    /// Product, through the structure constants of Ω.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = SymForm::zero();
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a.mul(b);
                for (k, c) in wz_forms::WZ_ALGEBRA.product_basis(i, j) {
                    out.coeffs[*k] = out.coeffs[*k].add(&ab.scale(c));
                }
            }
        }
        out
    }

    /// The differential, coefficientwise through the matrix of d.
    pub fn d(&self) -> Self {
        let mut out = SymForm::zero();
        for (c, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for r in 0..DIM {
                let w = &wz_forms::D_MATRIX[(r, c)];
                if !w.is_zero() {
                    out.coeffs[r] = out.coeffs[r].add(&a.scale(w));
                }
            }
        }
        out
    }

    /// The antilinear star, extending the star of Ω to polynomial
    /// coefficients (formal parameters split into real symbols, so the
    /// coefficient conjugation is the polynomial one).
    pub fn star(&self) -> Self {
        let mut out = SymForm::zero();
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let si = wz_forms::star_form(&WZForm::basis(i));
            let ac = a.conj();
            for (k, c) in si.coeffs.iter().enumerate() {
                if !c.is_zero() {
                    out.coeffs[k] = out.coeffs[k].add(&ac.scale(c));
                }
            }
        }
        out
    }

    /// Homogeneous component of the given form degree.
    pub fn component(&self, degree: usize) -> Self {
        let mut out = SymForm::zero();
        for i in 0..DIM {
            if wz_forms::decode(i).0 == degree {
                out.coeffs[i] = self.coeffs[i].clone();
            }
        }
        out
    }

    /// Degree, if homogeneous (zero counts as degree 0).
    pub fn degree(&self) -> Option<usize> {
        let degs: Vec<usize> = (0..DIM)
            .filter(|&i| !self.coeffs[i].is_zero())
            .map(|i| wz_forms::decode(i).0)
            .collect();
        match degs.as_slice() {
            [] => Some(0),
            [first, rest @ ..] => rest.iter().all(|d| d == first).then_some(*first),
        }
    }

    /// All formal variables occurring in the coefficients.
    pub fn vars_used(&self) -> std::collections::BTreeSet<usize> {
        let mut s = std::collections::BTreeSet::new();
        for c in &self.coeffs {
            s.extend(c.vars_used());
        }
        s
    }

    /// Substitute variables in every coefficient.
    pub fn substitute(&self, subst: &dyn Fn(usize) -> Option<PolyScalar>) -> Self {
        SymForm {
            coeffs: self.coeffs.iter().map(|c| c.substitute(subst)).collect(),
        }
    }

    /// Evaluate all variables to scalars.
    pub fn eval(&self, assign: &dyn Fn(usize) -> Scalar) -> WZForm {
        WZForm::from_flat(self.coeffs.iter().map(|c| c.eval(assign)).collect())
    }
}

impl std::fmt::Display for SymForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let name = &wz_forms::WZ_ALGEBRA.basis_names[i];
            let cs = c.format_with(&|k| param_var_name(k));
            parts.push(format!("({cs})·{name}"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

// ---------------------------------------------------------------------------
// The 18-parameter connection family
// ---------------------------------------------------------------------------

/// Names of the 18 formal connection parameters, in block order.
pub const PARAM_NAMES: [&str; 18] = [
    "a_i1", "a_i2", "a_i3", // 3_irr inside class-0 ⊗ (dx, dy)
    "b_i1", "b_i2", "b_i3", // 3_irr inside class-1 ⊗ (dx, dy)
    "a_e1", "a_e2", "a_e3", // 3_eve inside class-0 ⊗ (dx, dy)
    "b_o1", "b_o2", "b_o3", // 3_odd inside class-1 ⊗ (dx, dy)
    "c_1", "c_2", "c_3", "c_4", "c_5", "c_6", // 6_eve = class-2 ⊗ (dx, dy)
];

/// Number of formal parameters.
pub const N_PARAMS: usize = PARAM_NAMES.len();

/// Variable index of the real part of parameter k.
pub fn re_var(k: usize) -> usize {
    k
}

/// Variable index of the imaginary part of parameter k.
pub fn im_var(k: usize) -> usize {
    N_PARAMS + k
}

fn param_var_name(v: usize) -> String {
    if v < N_PARAMS {
        format!("Re({})", PARAM_NAMES[v])
    } else if v < 2 * N_PARAMS {
        format!("Im({})", PARAM_NAMES[v - N_PARAMS])
    } else {
        format!("t{v}")
    }
}

/// The formal parameter p_k = Re(p_k) + w·Im(p_k), with w = q − q² purely
/// imaginary, so that conjugation acts as expected on the two real symbols.
pub fn param(k: usize) -> PolyScalar {
    let w = &Scalar::q() - &Scalar::q2();
    PolyScalar::var(re_var(k)).add(&PolyScalar::var(im_var(k)).scale(&w))
}

/// The five representation blocks of the connection family.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Block {
    /// 3_irr ⊂ class-0 ⊗ (dx, dy); parameters a_i.
    Irr3InOdd2,
    /// 3_eve ⊂ class-0 ⊗ (dx, dy); parameters a_e.
    Eve3InOdd2,
    /// 3_irr ⊂ class-1 ⊗ (dx, dy); parameters b_i.
    Irr3InEve2,
    /// 3_odd ⊂ class-1 ⊗ (dx, dy); parameters b_o.
    Odd3InEve2,
    /// The six-dimensional block class-2 ⊗ (dx, dy); parameters c.
    Eve6,
}

impl Block {
    pub const ALL: [Block; 5] = [
        Block::Irr3InOdd2,
        Block::Eve3InOdd2,
        Block::Irr3InEve2,
        Block::Odd3InEve2,
        Block::Eve6,
    ];

    /// Parameter indices of the block.
    pub fn param_range(&self) -> std::ops::Range<usize> {
        match self {
            Block::Irr3InOdd2 => 0..3,
            Block::Irr3InEve2 => 3..6,
            Block::Eve3InOdd2 => 6..9,
            Block::Odd3InEve2 => 9..12,
            Block::Eve6 => 12..18,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Block::Irr3InOdd2 => "3_irr ⊂ 3_odd⊗2",
            Block::Eve3InOdd2 => "3_eve ⊂ 3_odd⊗2",
            Block::Irr3InEve2 => "3_irr ⊂ 3_eve⊗2",
            Block::Odd3InEve2 => "3_odd ⊂ 3_eve⊗2",
            Block::Eve6 => "6_eve",
        }
    }
}

/// The basis one-forms of each block, as (monomial exponents, generator,
/// scalar) triples; the k-th parameter multiplies the k-th listed vector.
fn block_vectors(block: Block) -> Vec<Vec<(usize, usize, usize, Scalar)>> {
    let q = Scalar::q();
    let q2 = Scalar::q2();
    let one = Scalar::one();
    match block {
        Block::Irr3InOdd2 => vec![
            // q x²y dx − dy
            vec![(2, 1, 0, q.clone()), (0, 0, 1, one.neg())],
            // q² xy² dx − x²y dy
            vec![(1, 2, 0, q2.clone()), (2, 1, 1, one.neg())],
            // q (dx − xy² dy)
            vec![(0, 0, 0, q.clone()), (1, 2, 1, q.neg())],
        ],
        Block::Irr3InEve2 => vec![
            // q² y dy
            vec![(0, 1, 1, q2.clone())],
            // y dx + q x dy
            vec![(0, 1, 0, one.clone()), (1, 0, 1, q.clone())],
            // q² x dx
            vec![(1, 0, 0, q2.clone())],
        ],
        Block::Eve3InOdd2 => vec![
            // dy
            vec![(0, 0, 1, one.clone())],
            // q xy² dx + x²y dy
            vec![(1, 2, 0, q.clone()), (2, 1, 1, one.clone())],
            // dx
            vec![(0, 0, 0, one.clone())],
        ],
        Block::Odd3InEve2 => vec![
            // q (x dx − x²y² dy)
            vec![(1, 0, 0, q.clone()), (2, 2, 1, q.neg())],
            // q (q y dx − x dy)
            vec![(0, 1, 0, q2.clone()), (1, 0, 1, q.neg())],
            // q (x²y² dx − q y dy)
            vec![(2, 2, 0, q.clone()), (0, 1, 1, q2.neg())],
        ],
        Block::Eve6 => vec![
            // xy dx − q² x² dy
            vec![(1, 1, 0, one.clone()), (2, 0, 1, q2.neg())],
            // y² dx − q xy dy
            vec![(0, 2, 0, one.clone()), (1, 1, 1, q.neg())],
            // q x² dx
            vec![(2, 0, 0, q.clone())],
            // q y² dy
            vec![(0, 2, 1, q.clone())],
            // q² (xy dx + x² dy)
            vec![(1, 1, 0, q2.clone()), (2, 0, 1, q2.clone())],
            // q (xy dy + y² dx)
            vec![(1, 1, 1, q.clone()), (0, 2, 0, q.clone())],
        ],
    }
}

/// The k-th basis one-form of a block as a numeric form.
pub fn block_basis_form(block: Block, k: usize) -> WZForm {
    let mut w = WZForm::zero();
    for (r, s, xi, c) in &block_vectors(block)[k] {
        w.coeffs[flat1(*xi, qplane::idx(*r, *s))] = c.clone();
    }
    w
}

// ---------------------------------------------------------------------------
// Connections
// ---------------------------------------------------------------------------

/// A connection on M over itself: a one-form with polynomial coefficients.
#[derive(Clone, PartialEq, Debug)]
pub struct Connection {
    pub omega: SymForm,
}

impl Connection {
    /// The zero connection.
    pub fn zero() -> Self {
        Connection {
            omega: SymForm::zero(),
        }
    }

    /// Wrap a numeric one-form.
    pub fn from_form(omega: &WZForm) -> Self {
        Connection::from_sym(SymForm::from_wzform(omega))
    }

    /// Wrap a symbolic one-form.
    pub fn from_sym(omega: SymForm) -> Self {
        assert_eq!(
            omega.component(1),
            omega,
            "a connection must be a pure one-form"
        );
        Connection { omega }
    }

    /// The formal connection of a single representation block.
    pub fn block(block: Block) -> Self {
        let mut omega = SymForm::zero();
        for (j, k) in block.param_range().enumerate() {
            let v = SymForm::from_wzform(&block_basis_form(block, j));
            omega = omega.add(&v.scale(&param(k)));
        }
        Connection { omega }
    }

    /// The full 18-parameter formal connection φ, the sum of all blocks.
    pub fn parametrized() -> Self {
        let mut omega = SymForm::zero();
        for b in Block::ALL {
            omega = omega.add(&Connection::block(b).omega);
        }
        Connection { omega }
    }
}

/// Curvature ρ = dω + ω².
pub fn curvature(c: &Connection) -> SymForm {
    c.omega.d().add(&c.omega.mul(&c.omega))
}

/// The inverse of u in M, through its left-multiplication matrix; None if
/// u is not invertible.
pub fn m_inverse(u: &[Scalar]) -> Option<Vec<Scalar>> {
    let lm = qplane::ALGEBRA.left_mul_matrix(u);
    let inv = lm.inverse()?;
    Some(inv.mul_vec(&qplane::ALGEBRA.unit()))
}

/// Gauge transformation ω′ = u⁻¹ωu + u⁻¹du by an invertible u ∈ M.
pub fn gauge_transform(c: &Connection, u: &[Scalar]) -> Result<Connection, String> {
    let u_inv = m_inverse(u).ok_or_else(|| {
        format!(
            "gauge element {} is not invertible in M",
            qplane::ALGEBRA.format_element(u)
        )
    })?;
    let su = SymForm::from_wzform(&WZForm::from_function(u));
    let sui = SymForm::from_wzform(&WZForm::from_function(&u_inv));
    let du = SymForm::from_wzform(&wz_forms::d(&WZForm::from_function(u)));
    let omega = sui.mul(&c.omega).mul(&su).add(&sui.mul(&du));
    Ok(Connection { omega })
}

/// Conjugate a symbolic form by an invertible u: u⁻¹ ρ u.
pub fn conjugate_by(rho: &SymForm, u: &[Scalar]) -> Option<SymForm> {
    let u_inv = m_inverse(u)?;
    let su = SymForm::from_wzform(&WZForm::from_function(u));
    let sui = SymForm::from_wzform(&WZForm::from_function(&u_inv));
    Some(sui.mul(rho).mul(&su))
}

/// The hermitian part (φ + φ*)/2. A connection is hermitian iff it is a
/// fixed point. On the parametrized family this replaces every formal
/// parameter by its real part, because each displayed block basis vector is
/// star-fixed.
pub fn hermitian_projection(c: &Connection) -> Connection {
    let half = Scalar::rat(1, 2);
    Connection {
        omega: c.omega.add(&c.omega.star()).scale(&PolyScalar::from_scalar(&half)),
    }
}

// ---------------------------------------------------------------------------
// Curvature classification
// ---------------------------------------------------------------------------

/// Facts about the curvature of a single-block connection.
#[derive(Clone, PartialEq, Debug)]
pub struct CurvatureClassification {
    pub block: Block,
    /// dφ vanishes identically in the parameters.
    pub d_phi_zero: bool,
    /// φ² vanishes identically in the parameters.
    pub phi_sq_zero: bool,
    /// The single class (0, 1 or 2) of Ω² ≅ M carrying ρ.
    pub rho_class: usize,
    pub label: String,
}

/// Classes of monomials supporting the degree-2 component.
fn two_form_classes(u: &SymForm) -> std::collections::BTreeSet<usize> {
    let mut classes = std::collections::BTreeSet::new();
    for m in 0..DIM0 {
        if !u.coeffs[flat2(m)].is_zero() {
            classes.insert(wz_forms::monomial_class(m));
        }
    }
    classes
}

/// Identify the block from the formal parameters used by the connection and
/// derive the curvature facts, verifying the expected collapse pattern:
/// every single-block curvature is either dφ (when φ² = 0 identically) or
/// φ² (when dφ = 0 identically) or their sum (six-dimensional block), and
/// always lies in one 3-dimensional class of Ω².
pub fn classify_curvature(c: &Connection) -> Result<CurvatureClassification, String> {
    let vars = c.omega.vars_used();
    if vars.is_empty() {
        return Err("the connection carries no formal parameters".into());
    }
    let mut blocks = std::collections::BTreeSet::new();
    for v in &vars {
        if *v >= 2 * N_PARAMS {
            return Err(format!("variable {v} is not a connection parameter"));
        }
        let p = v % N_PARAMS;
        for b in Block::ALL {
            if b.param_range().contains(&p) {
                blocks.insert(b.name());
            }
        }
    }
    if blocks.len() != 1 {
        return Err(format!(
            "parameters span {} blocks ({}); restrict to one",
            blocks.len(),
            blocks.into_iter().collect::<Vec<_>>().join(", ")
        ));
    }
    let block = Block::ALL
        .into_iter()
        .find(|b| b.name() == *blocks.iter().next().unwrap())
        .unwrap();

    let d_phi = c.omega.d();
    let phi_sq = c.omega.mul(&c.omega);
    let rho = d_phi.add(&phi_sq);
    let d_phi_zero = d_phi.is_zero();
    let phi_sq_zero = phi_sq.is_zero();

    let classes = two_form_classes(&rho);
    if classes.len() > 1 {
        return Err(format!(
            "curvature is spread over classes {classes:?} — not a single block"
        ));
    }
    let rho_class = classes.into_iter().next().unwrap_or(0);

    let (expect_d0, expect_sq0, expect_class, label) = match block {
        Block::Irr3InOdd2 => (false, true, 2, "φ² = 0, ρ = dφ ∈ 3_irr"),
        Block::Eve3InOdd2 => (true, false, 0, "dφ = 0, ρ = φ² ∈ 3_odd"),
        Block::Irr3InEve2 => (true, false, 2, "dφ = 0, ρ = φ² ∈ 3_irr"),
        Block::Odd3InEve2 => (false, true, 0, "φ² = 0, ρ = dφ ∈ 3_odd"),
        Block::Eve6 => (false, false, 1, "ρ = dφ + φ² ∈ 3_eve (dφ ∈ 2)"),
    };
    if (d_phi_zero, phi_sq_zero, rho_class) != (expect_d0, expect_sq0, expect_class) {
        return Err(format!(
            "block {}: computed (dφ=0: {d_phi_zero}, φ²=0: {phi_sq_zero}, class {rho_class}) \
             differs from the expected pattern",
            block.name()
        ));
    }
    if block == Block::Eve6 {
        // dφ additionally lies in the 2-dim subrepresentation {x, y}·dxdy.
        for m in 0..DIM0 {
            if ![qplane::idx(1, 0), qplane::idx(0, 1)].contains(&m)
                && !d_phi.coeffs[flat2(m)].is_zero()
            {
                return Err("6_eve: dφ leaves the span of x dxdy, y dxdy".into());
            }
        }
    }
    Ok(CurvatureClassification {
        block,
        d_phi_zero,
        phi_sq_zero,
        rho_class,
        label: label.to_string(),
    })
}

// ---------------------------------------------------------------------------
// Tests
// ---------------------------------------------------------------------------

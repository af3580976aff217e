//! Finite-dimensional representations of the 27-dimensional envelope `H`.
//!
//! This module houses the catalogue of indecomposable representations
//! (`1`, `2_eve`, `3_irr`, `3_eve(λ)`, `3_odd(λ)`, `4_eve`, `5_odd`, `6_eve`,
//! `6_odd`), the invariant hermitian metrics each of them carries together
//! with certified signatures, the identification of the reduced quantum
//! plane `M` with the direct sum `3_irr ⊕ 3_eve ⊕ 3_odd`, the unique
//! invariant scalar product on `M` (signature `(5,4)`), the Jacobson radical
//! of `H` and the radical/socle structure of the modules, and the
//! decomposition of tensor products into indecomposables via an additive
//! fingerprint.
//!
//! Everything is exact: metrics are solved for over the rational field by
//! splitting hermitian matrices into their real coordinate parts, and
//! signatures are obtained by symmetric congruence over the real quadratic
//! field ℚ(√3), never by floating point.

use crate::env_h::{self, GrassRing4};
use crate::fun_f;
use crate::hopf::Elem;
use crate::linalg::{Mat, SolveOutcome};
use crate::qplane;
use crate::report::Report;
use crate::scalar::{qq, Q, Ring, Scalar};

// ---------------------------------------------------------------------------
// Small scalar helpers
// ---------------------------------------------------------------------------

/// Integer-coordinate scalar `a + b·q`.
fn sc(a: i64, b: i64) -> Scalar {
    Scalar::new(qq(a, 1), qq(b, 1))
}

/// The purely imaginary unit `q − q² = 1 + 2q` (squares to −3).
fn omega() -> Scalar {
    sc(1, 2)
}

// ---------------------------------------------------------------------------
// Linear-span utilities over the exact scalar field
// ---------------------------------------------------------------------------

/// Row-reduced basis of the span of the given vectors.
pub fn span_basis(vecs: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    if vecs.is_empty() {
        return Vec::new();
    }
    let (r, pivots) = Mat::from_rows(vecs.to_vec()).rref();
    (0..pivots.len()).map(|i| r.row(i).to_vec()).collect()
}

/// Coordinates of `v` in the span of `basis` (columns), if it lies there.
fn express_in_span(basis: &[Vec<Scalar>], v: &[Scalar]) -> Option<Vec<Scalar>> {
    let n = v.len();
    if basis.is_empty() {
        return if v.iter().all(|c| c.is_zero()) {
            Some(Vec::new())
        } else {
            None
        };
    }
    let a = Mat::from_fn(n, basis.len(), |i, j| basis[j][i].clone());
    match a.solve(&Mat::col_vec(v)) {
        SolveOutcome::Inconsistent => None,
        SolveOutcome::Solution { particular, .. } => Some(particular.col(0)),
    }
}

// ---------------------------------------------------------------------------
// Representations of H
// ---------------------------------------------------------------------------

/// A finite-dimensional module over `H`, given by the images of the three
/// generators.  The defining relations (`check_relations`) are
/// `ρ(K)³ = 1`, `ρ(X_±)³ = 0`, `ρ(K)ρ(X₊) = q²ρ(X₊)ρ(K)`,
/// `ρ(K)ρ(X₋) = qρ(X₋)ρ(K)` and
/// `[ρ(X₊), ρ(X₋)] = λ(ρ(K) − ρ(K)²)` with `λ = 1/(q − q⁻¹)`.
#[derive(Clone, Debug, PartialEq)]
pub struct HRep {
    pub name: String,
    pub dim: usize,
    pub xp: Mat<Scalar>,
    pub xm: Mat<Scalar>,
    pub k: Mat<Scalar>,
}

impl HRep {
    pub fn new(name: &str, xp: Mat<Scalar>, xm: Mat<Scalar>, k: Mat<Scalar>) -> Self {
        let dim = k.rows;
        assert!(xp.rows == dim && xp.cols == dim && xm.rows == dim && xm.cols == dim);
        HRep {
            name: name.to_string(),
            dim,
            xp,
            xm,
            k,
        }
    }

    /// Verify the defining relations of `H` on the generator images.
    pub fn check_relations(&self) -> Report {
        let mut rep = Report::new();
        let id = Mat::identity(self.dim);
        let name = &self.name;
        rep.check(
            &format!("{name}: ρ(K)³ = 1"),
            self.k.pow(3) == id,
            || "ρ(K)³ differs from the identity".into(),
        );
        rep.check(
            &format!("{name}: ρ(X₊)³ = 0"),
            self.xp.pow(3).is_zero(),
            || "ρ(X₊)³ is nonzero".into(),
        );
        rep.check(
            &format!("{name}: ρ(X₋)³ = 0"),
            self.xm.pow(3).is_zero(),
            || "ρ(X₋)³ is nonzero".into(),
        );
        rep.check(
            &format!("{name}: ρ(K)ρ(X₊) = q²ρ(X₊)ρ(K)"),
            self.k.mul(&self.xp) == self.xp.mul(&self.k).scale(&Scalar::q2()),
            || "the K–X₊ exchange relation fails".into(),
        );
        rep.check(
            &format!("{name}: ρ(K)ρ(X₋) = qρ(X₋)ρ(K)"),
            self.k.mul(&self.xm) == self.xm.mul(&self.k).scale(&Scalar::q()),
            || "the K–X₋ exchange relation fails".into(),
        );
        let comm = self.xp.mul(&self.xm).sub(&self.xm.mul(&self.xp));
        let rhs = self.k.sub(&self.k.pow(2)).scale(&env_h::lambda());
        rep.check(
            &format!("{name}: [ρ(X₊),ρ(X₋)] = λ(ρ(K)−ρ(K)²)"),
            comm == rhs,
            || "the commutator relation fails".into(),
        );
        rep
    }

    /// Image of the ordered monomial basis element `X₊^α K^β X₋^γ`.
    pub fn act_basis(&self, i: usize) -> Mat<Scalar> {
        let (alpha, beta, gamma) = env_h::exponents(i);
        self.xp
            .pow(alpha)
            .mul(&self.k.pow(beta))
            .mul(&self.xm.pow(gamma))
    }

    /// Images of all 27 monomial basis elements of `H`.
    pub fn basis_actions(&self) -> Vec<Mat<Scalar>> {
        (0..env_h::DIM).map(|i| self.act_basis(i)).collect()
    }

    /// Image of a general element of `H`.
    pub fn act(&self, h: &[Scalar]) -> Mat<Scalar> {
        let mut out = Mat::zeros(self.dim, self.dim);
        for (i, c) in h.iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&self.act_basis(i).scale(c));
            }
        }
        out
    }

    /// Tensor product module, with the generator images obtained from the
    /// comultiplication of `H` (so the convention always matches the Hopf
    /// structure used everywhere else).
    pub fn tensor(&self, other: &HRep) -> HRep {
        let d = self.dim * other.dim;
        let gen = |idx: usize| -> Mat<Scalar> {
            let mut out = Mat::zeros(d, d);
            for (j, k, c) in &env_h::HOPF.comult[idx] {
                out = out.add(&self.act_basis(*j).kron(&other.act_basis(*k)).scale(c));
            }
            out
        };
        HRep {
            name: format!("{}⊗{}", self.name, other.name),
            dim: d,
            xp: gen(env_h::idx(1, 0, 0)),
            xm: gen(env_h::idx(0, 0, 1)),
            k: gen(env_h::idx(0, 1, 0)),
        }
    }

    /// Direct sum module.
    pub fn direct_sum(&self, other: &HRep) -> HRep {
        let d = self.dim + other.dim;
        let block = |a: &Mat<Scalar>, b: &Mat<Scalar>| {
            Mat::from_fn(d, d, |i, j| {
                if i < self.dim && j < self.dim {
                    a[(i, j)].clone()
                } else if i >= self.dim && j >= self.dim {
                    b[(i - self.dim, j - self.dim)].clone()
                } else {
                    Scalar::zero()
                }
            })
        };
        HRep {
            name: format!("{}⊕{}", self.name, other.name),
            dim: d,
            xp: block(&self.xp, &other.xp),
            xm: block(&self.xm, &other.xm),
            k: block(&self.k, &other.k),
        }
    }

    /// Image of the Casimir element `X₊X₋ − (q²K + qK²)/3`.
    pub fn casimir_matrix(&self) -> Mat<Scalar> {
        let kk = self
            .k
            .scale(&Scalar::q2())
            .add(&self.k.pow(2).scale(&Scalar::q()));
        self.xp.mul(&self.xm).sub(&kk.scale(&Scalar::rat(1, 3)))
    }
}

// ---------------------------------------------------------------------------
// The catalogue of indecomposables
// ---------------------------------------------------------------------------

/// Names of the catalogued indecomposable representations, by ascending
/// dimension.  The two 3-dimensional families carry parameters `(λ₁, λ₂)`.
pub const CATALOGUE_NAMES: [&str; 9] = [
    "1", "2_eve", "3_irr", "3_eve", "3_odd", "4_eve", "5_odd", "6_eve", "6_odd",
];

fn elementary_mat(n: usize, entries: &[(usize, usize, Scalar)]) -> Mat<Scalar> {
    let mut m = Mat::zeros(n, n);
    for (i, j, c) in entries {
        m[(*i, *j)] = c.clone();
    }
    m
}

fn diag_mat(entries: &[Scalar]) -> Mat<Scalar> {
    let n = entries.len();
    Mat::from_fn(n, n, |i, j| {
        if i == j {
            entries[i].clone()
        } else {
            Scalar::zero()
        }
    })
}

/// Construct one of the catalogued indecomposables by name.  The families
/// `3_eve` and `3_odd` require the parameter pair `(λ₁, λ₂)`; all other
/// names take no parameters.
pub fn builtin_rep(name: &str, params: Option<(Q, Q)>) -> Result<HRep, String> {
    let one = Scalar::one();
    let q = Scalar::q();
    let q2 = Scalar::q2();
    let needs_params = matches!(name, "3_eve" | "3_odd");
    if needs_params && params.is_none() {
        return Err(format!(
            "representation family {name} needs its parameters (λ₁, λ₂)"
        ));
    }
    if !needs_params && params.is_some() {
        return Err(format!("representation {name} takes no parameters"));
    }
    let (l1, l2) = match &params {
        Some((a, b)) => (Scalar::from_q(a.clone()), Scalar::from_q(b.clone())),
        None => (Scalar::zero(), Scalar::zero()),
    };
    let rep = match name {
        "1" => HRep::new(
            name,
            Mat::zeros(1, 1),
            Mat::zeros(1, 1),
            Mat::identity(1),
        ),
        "2_eve" => HRep::new(
            name,
            elementary_mat(2, &[(0, 1, one.clone())]),
            elementary_mat(2, &[(1, 0, one.clone())]),
            diag_mat(&[q.clone(), q2.clone()]),
        ),
        "3_irr" => HRep::new(
            name,
            elementary_mat(3, &[(0, 1, one.clone()), (1, 2, one.clone())]),
            elementary_mat(3, &[(1, 0, one.neg()), (2, 1, one.neg())]),
            diag_mat(&[q2.clone(), one.clone(), q.clone()]),
        ),
        "3_eve" => HRep::new(
            name,
            elementary_mat(3, &[(0, 1, one.clone()), (1, 2, l2.clone())]),
            elementary_mat(3, &[(0, 2, l1.neg()), (1, 0, one.clone())]),
            diag_mat(&[q.clone(), q2.clone(), one.clone()]),
        ),
        "3_odd" => HRep::new(
            name,
            elementary_mat(3, &[(0, 1, one.clone()), (2, 0, l2.clone())]),
            elementary_mat(3, &[(1, 0, one.clone()), (2, 1, l1.clone())]),
            diag_mat(&[q.clone(), q2.clone(), one.clone()]),
        ),
        "4_eve" => HRep::new(
            name,
            elementary_mat(4, &[(0, 1, one.clone()), (1, 3, one.clone())]),
            elementary_mat(4, &[(0, 2, one.neg()), (1, 0, one.clone())]),
            diag_mat(&[q.clone(), q2.clone(), one.clone(), one.clone()]),
        ),
        "5_odd" => HRep::new(
            name,
            elementary_mat(
                5,
                &[(0, 2, one.clone()), (1, 3, one.clone()), (4, 1, one.clone())],
            ),
            elementary_mat(
                5,
                &[(2, 0, one.clone()), (3, 1, one.clone()), (4, 2, one.clone())],
            ),
            diag_mat(&[q.clone(), q.clone(), q2.clone(), q2.clone(), one.clone()]),
        ),
        "6_eve" => HRep::new(
            name,
            elementary_mat(
                6,
                &[
                    (0, 2, one.clone()),
                    (1, 2, Scalar::rat(-1, 2)),
                    (1, 3, one.clone()),
                    (3, 5, one.clone()),
                    (4, 0, one.clone()),
                ],
            ),
            elementary_mat(
                6,
                &[
                    (2, 0, one.clone()),
                    (3, 0, Scalar::rat(-1, 2)),
                    (3, 1, one.clone()),
                    (1, 4, one.neg()),
                    (5, 2, one.neg()),
                ],
            ),
            diag_mat(&[
                q.clone(),
                q.clone(),
                q2.clone(),
                q2.clone(),
                one.clone(),
                one.clone(),
            ]),
        ),
        "6_odd" => HRep::new(
            name,
            elementary_mat(
                6,
                &[
                    (0, 2, one.clone()),
                    (1, 3, one.clone()),
                    (2, 4, one.clone()),
                    (5, 1, one.clone()),
                ],
            ),
            elementary_mat(
                6,
                &[
                    (1, 4, one.clone()),
                    (2, 0, one.clone()),
                    (3, 1, one.clone()),
                    (5, 2, one.clone()),
                ],
            ),
            diag_mat(&[
                q.clone(),
                q.clone(),
                q2.clone(),
                q2.clone(),
                one.clone(),
                one.clone(),
            ]),
        ),
        _ => return Err(format!("unknown representation name: {name}")),
    };
    Ok(rep)
}

/// The full catalogue; the two parametrized families are instantiated at
/// `(λ₁, λ₂) = (1, −1)`, the member realized inside the quantum plane `M`.
pub fn catalogue() -> Vec<HRep> {
    CATALOGUE_NAMES
        .iter()
        .map(|name| {
            let params = if matches!(*name, "3_eve" | "3_odd") {
                Some((qq(1, 1), qq(-1, 1)))
            } else {
                None
            };
            builtin_rep(name, params).unwrap()
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Invariant hermitian metrics
// ---------------------------------------------------------------------------

/// A real basis of the space of hermitian `n×n` matrices over the field
/// ℚ(q): diagonal units, symmetric pairs, and `ω`-antisymmetric pairs with
/// `ω = q − q²`.
fn hermitian_basis(n: usize) -> Vec<Mat<Scalar>> {
    let mut out = Vec::new();
    for i in 0..n {
        out.push(elementary_mat(n, &[(i, i, Scalar::one())]));
    }
    for i in 0..n {
        for j in (i + 1)..n {
            out.push(elementary_mat(
                n,
                &[(i, j, Scalar::one()), (j, i, Scalar::one())],
            ));
            out.push(elementary_mat(n, &[(i, j, omega()), (j, i, omega().neg())]));
        }
    }
    out
}

/// Solve for all hermitian `G` with `A_t† G = G B_t` for every pair
/// `(A_t, B_t)`.  The hermiticity constraint is semilinear, so the solve is
/// performed over the rationals: `G` ranges over real combinations of a
/// hermitian basis, and each condition is imposed by splitting the entries
/// of `A† G − G B` into their two rational coordinates.  Returns a basis of
/// the solution space over the reals.
pub fn invariant_hermitian_space(
    n: usize,
    pairs: &[(Mat<Scalar>, Mat<Scalar>)],
) -> Vec<Mat<Scalar>> {
    let mut basis = hermitian_basis(n);
    for (a, b) in pairs {
        if basis.is_empty() {
            break;
        }
        let ad = a.dagger();
        let mut m = Mat::zeros(2 * n * n, basis.len());
        for (col, g) in basis.iter().enumerate() {
            let t = ad.mul(g).sub(&g.mul(b));
            for i in 0..n {
                for j in 0..n {
                    let e = &t[(i, j)];
                    m[(2 * (i * n + j), col)] = Scalar::from_q(e.r0.clone());
                    m[(2 * (i * n + j) + 1, col)] = Scalar::from_q(e.r1.clone());
                }
            }
        }
        let kernel = m.kernel();
        basis = kernel
            .iter()
            .map(|kv| {
                let mut g = Mat::zeros(n, n);
                for (t, old) in basis.iter().enumerate() {
                    let c = &kv[(t, 0)];
                    debug_assert!(c.is_rational());
                    if !c.is_zero() {
                        g = g.add(&old.scale(c));
                    }
                }
                g
            })
            .collect();
    }
    basis
}

/// Real-parameter basis of the hermitian metrics `G` satisfying
/// `ρ(h)† G = G ρ(h*)` for the three generators of `H`
/// (`X₊* = −q²X₊`, `X₋* = −qX₋`, `K* = K`).
pub fn invariant_metric_space(rep: &HRep) -> Vec<Mat<Scalar>> {
    let pairs = vec![
        (rep.xp.clone(), rep.xp.scale(&sc(1, 1))),
        (rep.xm.clone(), rep.xm.scale(&sc(0, -1))),
        (rep.k.clone(), rep.k.clone()),
    ];
    invariant_hermitian_space(rep.dim, &pairs)
}

/// Exact inertia `(n₊, n₋, n₀)` of a hermitian matrix over ℚ(q), computed by
/// realification and symmetric congruence over ℚ(√3).
pub fn signature(g: &Mat<Scalar>) -> (usize, usize, usize) {
    assert!(g.is_hermitian(), "signature needs a hermitian matrix");
    g.map(crate::scalar::Cq3::from_scalar).hermitian_inertia()
}

/// Normalize a signature so that `n₊ ≥ n₋` (a metric family is closed under
/// negation, so this fixes the orientation).
fn canonical_signature(s: (usize, usize, usize)) -> (usize, usize, usize) {
    if s.1 > s.0 {
        (s.1, s.0, s.2)
    } else {
        s
    }
}

/// Deterministic sample weights used to probe a metric family.
fn family_samples(d: usize) -> Vec<Vec<Q>> {
    let mut samples: Vec<Vec<Q>> = Vec::new();
    for i in 0..d {
        let mut v = vec![qq(0, 1); d];
        v[i] = qq(1, 1);
        samples.push(v);
    }
    for i in 0..d {
        for j in (i + 1)..d {
            for sgn in [1, -1] {
                let mut v = vec![qq(0, 1); d];
                v[i] = qq(1, 1);
                v[j] = qq(sgn, 1);
                samples.push(v);
            }
        }
    }
    samples.push(vec![qq(1, 1); d]);
    samples.push((0..d).map(|i| qq(i as i64 + 1, 1)).collect());
    let primes = [2i64, -3, 5, -7, 11, -13];
    samples.push((0..d).map(|i| qq(primes[i % primes.len()], 1)).collect());
    samples
}

/// Signature of a metric family at generic parameters: all maximal-rank
/// sample points must agree (up to overall sign); returns `None` when the
/// signature genuinely depends on the parameters.
pub fn signature_of_family(basis: &[Mat<Scalar>]) -> Option<(usize, usize, usize)> {
    if basis.is_empty() {
        return None;
    }
    let n = basis[0].rows;
    let mut best_rank = 0usize;
    let mut sigs: Vec<(usize, usize, usize)> = Vec::new();
    for w in family_samples(basis.len()) {
        let mut g = Mat::zeros(n, n);
        for (t, b) in basis.iter().enumerate() {
            if w[t] != qq(0, 1) {
                g = g.add(&b.scale(&Scalar::from_q(w[t].clone())));
            }
        }
        if g.is_zero() {
            continue;
        }
        let s = signature(&g);
        let rank = s.0 + s.1;
        if rank > best_rank {
            best_rank = rank;
            sigs.clear();
        }
        if rank == best_rank {
            sigs.push(canonical_signature(s));
        }
    }
    let first = *sigs.first()?;
    if sigs.iter().all(|s| *s == first) {
        Some(first)
    } else {
        None
    }
}

/// One row of the metric table: representation name, dimension, number of
/// real parameters of the invariant metric family, and the generic
/// signature (`None` when it depends on the parameters).
#[derive(Clone, Debug, PartialEq)]
pub struct MetricRow {
    pub name: String,
    pub dim: usize,
    pub real_params: usize,
    pub signature: Option<(usize, usize, usize)>,
}

/// The invariant-metric table over the whole catalogue.
pub fn metric_table() -> Vec<MetricRow> {
    catalogue()
        .iter()
        .map(|rep| {
            let basis = invariant_metric_space(rep);
            MetricRow {
                name: rep.name.clone(),
                dim: rep.dim,
                real_params: basis.len(),
                signature: signature_of_family(&basis),
            }
        })
        .collect()
}

// ---------------------------------------------------------------------------
// The quantum plane as a module over H
// ---------------------------------------------------------------------------

/// Basis order identifying `M` with `3_irr ⊕ 3_eve ⊕ 3_odd`
/// (monomial indices `3r + s` for `x^r y^s`):
/// `(x², xy, y²; x, y, x²y²; x²y, xy², 1)`.
pub const M_IDENTIFICATION_ORDER: [usize; 9] = [6, 4, 2, 3, 1, 8, 7, 5, 0];

/// Basis order adapted to the block form of the invariant scalar product:
/// `(x², xy, y²; x, y, x²y²; 1, x²y, xy²)`.  It differs from
/// [`M_IDENTIFICATION_ORDER`] only in the cyclic order of the last summand,
/// and in it the Gram matrix becomes `[[B,0,0],[0,0,B],[0,B,0]]` with a
/// single 3×3 block `B`.
pub const M_ADAPTED_FORM_ORDER: [usize; 9] = [6, 4, 2, 3, 1, 8, 0, 7, 5];

/// Image of an element of `H` under the left action on `M`
/// (monomial basis order).
pub fn act_matrix_on_m(h: &[Scalar]) -> Mat<Scalar> {
    let mut out = Mat::zeros(qplane::DIM, qplane::DIM);
    for (i, c) in h.iter().enumerate() {
        if !c.is_zero() {
            out = out.add(&env_h::ACT_LEFT_ON_M[i].scale(c));
        }
    }
    out
}

fn reorder(m: &Mat<Scalar>, order: &[usize]) -> Mat<Scalar> {
    Mat::from_fn(order.len(), order.len(), |i, j| {
        m[(order[i], order[j])].clone()
    })
}

/// The 9-dimensional module `M` in the monomial basis order.
pub fn m_rep_monomial() -> HRep {
    HRep::new(
        "M",
        env_h::ACT_LEFT_ON_M[env_h::idx(1, 0, 0)].clone(),
        env_h::ACT_LEFT_ON_M[env_h::idx(0, 0, 1)].clone(),
        env_h::ACT_LEFT_ON_M[env_h::idx(0, 1, 0)].clone(),
    )
}

/// The 9-dimensional module `M` in the identification basis order.
pub fn m_rep() -> HRep {
    let m = m_rep_monomial();
    HRep::new(
        "M",
        reorder(&m.xp, &M_IDENTIFICATION_ORDER),
        reorder(&m.xm, &M_IDENTIFICATION_ORDER),
        reorder(&m.k, &M_IDENTIFICATION_ORDER),
    )
}

/// Basis of the space of diagonal matrices `Φ` with
/// `Φ ρ₁(h) = ρ₂(h) Φ` for the three generators.
pub fn diagonal_intertwiner_space(r1: &HRep, r2: &HRep) -> Vec<Mat<Scalar>> {
    assert_eq!(r1.dim, r2.dim);
    let n = r1.dim;
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for (a, b) in [(&r1.xp, &r2.xp), (&r1.xm, &r2.xm), (&r1.k, &r2.k)] {
        for i in 0..n {
            for j in 0..n {
                if a[(i, j)].is_zero() && b[(i, j)].is_zero() {
                    continue;
                }
                // c_i·ρ₁[i,j] − ρ₂[i,j]·c_j = 0
                let mut row = vec![Scalar::zero(); n];
                row[i] = row[i].add(&a[(i, j)]);
                row[j] = row[j].sub(&b[(i, j)]);
                rows.push(row);
            }
        }
    }
    let kernel = if rows.is_empty() {
        (0..n)
            .map(|i| {
                let mut v = vec![Scalar::zero(); n];
                v[i] = Scalar::one();
                Mat::col_vec(&v)
            })
            .collect()
    } else {
        Mat::from_rows(rows).kernel()
    };
    kernel
        .iter()
        .map(|kv| Mat::from_fn(n, n, |i, j| if i == j { kv[(i, 0)].clone() } else { Scalar::zero() }))
        .collect()
}

/// The identification of `M` with `3_irr ⊕ 3_eve(1,−1) ⊕ 3_odd(1,−1)`:
/// the module in the identification basis order, the structural target, and
/// an explicit invertible diagonal intertwiner
/// `Φ ρ_M(h) = ρ_⊕(h) Φ` (the free scalars are solved for, not guessed).
#[derive(Clone, Debug)]
pub struct MIdentification {
    pub order: [usize; 9],
    pub rep_m: HRep,
    pub target: HRep,
    pub intertwiner: Mat<Scalar>,
}

pub fn m_as_rep() -> MIdentification {
    let rep_m = m_rep();
    let irr = builtin_rep("3_irr", None).unwrap();
    let eve = builtin_rep("3_eve", Some((qq(1, 1), qq(-1, 1)))).unwrap();
    let odd = builtin_rep("3_odd", Some((qq(1, 1), qq(-1, 1)))).unwrap();
    let target = irr.direct_sum(&eve).direct_sum(&odd);
    let space = diagonal_intertwiner_space(&rep_m, &target);
    assert_eq!(
        space.len(),
        3,
        "the diagonal intertwiner space must have one scalar per summand"
    );
    // Pick a combination with every diagonal entry nonzero (invertible Φ).
    let mut intertwiner = None;
    'outer: for weights in [[1i64, 1, 1], [1, 2, 3], [1, 4, 9], [2, 3, 5]] {
        let mut phi = Mat::zeros(9, 9);
        for (t, b) in space.iter().enumerate() {
            phi = phi.add(&b.scale(&Scalar::from_int(weights[t])));
        }
        for i in 0..9 {
            if phi[(i, i)].is_zero() {
                continue 'outer;
            }
        }
        intertwiner = Some(phi);
        break;
    }
    MIdentification {
        order: M_IDENTIFICATION_ORDER,
        rep_m,
        target,
        intertwiner: intertwiner.expect("an invertible diagonal intertwiner exists"),
    }
}

// ---------------------------------------------------------------------------
// Column modules of the block realization of H
// ---------------------------------------------------------------------------

/// Coordinates `(component, Λ-basis index)` of the even part of the first
/// column of the Grassmann block: `(F₁₁, θθF₁₁, F₂₁, θθF₂₁, θ₁F₃₁, θ₂F₃₁)`.
const EVEN_COLUMN_COORDS: [(usize, usize); 6] = [(0, 0), (0, 3), (1, 0), (1, 3), (2, 1), (2, 2)];
/// Odd part of the first column: `(θ₁F₁₁, θ₂F₁₁, θ₁F₂₁, θ₂F₂₁, F₃₁, θθF₃₁)`.
const ODD_COLUMN_COORDS: [(usize, usize); 6] = [(0, 1), (0, 2), (1, 1), (1, 2), (2, 0), (2, 3)];

fn grass_unit(g: usize) -> GrassRing4 {
    match g {
        0 => GrassRing4::scalar(&Scalar::one()),
        1 => GrassRing4::theta1(),
        2 => GrassRing4::theta2(),
        _ => GrassRing4::theta12(),
    }
}

/// Apply a 3×3 Grassmann-entried matrix to a column vector with Grassmann
/// components, in the flat 12-coordinate encoding `4·component + Λ-index`.
fn grass_column_apply(b2: &Mat<GrassRing4>, v: &[Scalar]) -> Vec<Scalar> {
    assert_eq!(v.len(), 12);
    let mut comps: Vec<GrassRing4> = Vec::with_capacity(3);
    for j in 0..3 {
        let mut c = <GrassRing4 as Ring>::zero();
        for g in 0..4 {
            if !v[4 * j + g].is_zero() {
                c = c.add(&grass_unit(g).mul(&GrassRing4::scalar(&v[4 * j + g])));
            }
        }
        comps.push(c);
    }
    let mut out = vec![Scalar::zero(); 12];
    for i in 0..3 {
        let mut img = <GrassRing4 as Ring>::zero();
        for (j, comp) in comps.iter().enumerate() {
            img = img.add(&b2[(i, j)].mul(comp));
        }
        for g in 0..4 {
            out[4 * i + g] = img.coeffs[g].clone();
        }
    }
    out
}

/// The module structure carried by the fixed-parity part of a column of the
/// Grassmann block of the structural realization; `odd = false` gives the
/// even part (a copy of `6_eve`), `odd = true` the odd part (`6_odd`).
pub fn grassmann_column_rep(odd: bool) -> HRep {
    let coords = if odd {
        &ODD_COLUMN_COORDS
    } else {
        &EVEN_COLUMN_COORDS
    };
    let gens = [
        (env_h::idx(1, 0, 0), "X₊"),
        (env_h::idx(0, 0, 1), "X₋"),
        (env_h::idx(0, 1, 0), "K"),
    ];
    let mut mats = Vec::new();
    for (gidx, _) in gens {
        let b2 = &env_h::STRUCTURAL_BASIS[gidx].block2;
        let mut m = Mat::zeros(6, 6);
        for (jpos, &(cj, gj)) in coords.iter().enumerate() {
            let mut v = vec![Scalar::zero(); 12];
            v[4 * cj + gj] = Scalar::one();
            let img = grass_column_apply(b2, &v);
            let mut seen = vec![false; 12];
            for (ipos, &(ci, gi)) in coords.iter().enumerate() {
                m[(ipos, jpos)] = img[4 * ci + gi].clone();
                seen[4 * ci + gi] = true;
            }
            for (flat, s) in seen.iter().enumerate() {
                assert!(
                    *s || img[flat].is_zero(),
                    "the fixed-parity column space is not preserved"
                );
            }
        }
        mats.push(m);
    }
    let name = if odd { "6_odd" } else { "6_eve" };
    HRep::new(name, mats[0].clone(), mats[1].clone(), mats[2].clone())
}

// ---------------------------------------------------------------------------
// The invariant scalar product on M
// ---------------------------------------------------------------------------

/// Closed formula for the scalar product of two monomials,
/// `(x^p y^t, x^r y^s) = q²·δ_{p+r,2}·δ_{t+s,2}·(q²δ_{s,0} + qδ_{s,1} + δ_{s,2})`.
pub fn gram_entry(p: usize, t: usize, r: usize, s: usize) -> Scalar {
    if p + r != 2 || t + s != 2 {
        return Scalar::zero();
    }
    let weight = match s {
        0 => Scalar::q2(),
        1 => Scalar::q(),
        _ => Scalar::one(),
    };
    Scalar::q2().mul(&weight)
}

/// Gram matrix of the invariant scalar product on `M` in the monomial basis
/// (antilinear in the first argument; normalized by `(xy, xy) = 1`).
pub fn invariant_form_on_m() -> Mat<Scalar> {
    Mat::from_fn(qplane::DIM, qplane::DIM, |i, j| {
        let (p, t) = qplane::exponents(i);
        let (r, s) = qplane::exponents(j);
        gram_entry(p, t, r, s)
    })
}

/// Scalar product of two arbitrary elements of `M`.
pub fn scalar_product_on_m(z: &[Scalar], w: &[Scalar]) -> Scalar {
    let g = invariant_form_on_m();
    let mut out = Scalar::zero();
    for i in 0..qplane::DIM {
        if z[i].is_zero() {
            continue;
        }
        for j in 0..qplane::DIM {
            if w[j].is_zero() {
                continue;
            }
            out = out.add(&z[i].conj().mul(&g[(i, j)]).mul(&w[j]));
        }
    }
    out
}

/// Verify every invariance property of a hermitian form `G` on `M`:
/// hermiticity, the adjointness `ρ(h)†G = Gρ(h*)` for all 27 basis elements
/// of `H`, the counit-twisted condition `((S h₍₁₎)*.z, h₍₂₎.w) = ε(h)(z,w)`,
/// the right-coaction condition `(Δ_R z, Δ_R w) = (z,w)·1_F`, and the
/// coaction adjointness `(z, Δ_R w) = ((1⊗S)Δ_R z, w)`.
pub fn check_invariance_conditions(g: &Mat<Scalar>) -> Report {
    let mut rep = Report::new();
    rep.check("G is hermitian", g.is_hermitian(), || {
        "G† differs from G".into()
    });

    // ρ(h)† G = G ρ(h*) over the whole monomial basis of H.
    let acts: Vec<Mat<Scalar>> = (0..env_h::DIM)
        .map(|i| env_h::ACT_LEFT_ON_M[i].clone())
        .collect();
    let mut adj_fail = None;
    for i in 0..env_h::DIM {
        let star_i = env_h::star_h(&env_h::HOPF.alg.basis_elem(i));
        if acts[i].dagger().mul(g) != g.mul(&act_matrix_on_m(&star_i)) {
            adj_fail = Some(i);
            break;
        }
    }
    rep.check(
        "adjointness ρ(h)†G = Gρ(h*) on all 27 basis elements",
        adj_fail.is_none(),
        || format!("fails on basis element #{}", adj_fail.unwrap()),
    );

    // Σ (S h₍₁₎)*† G h₍₂₎ = ε(h) G, entirely in matrix form.
    let twisted: Vec<Mat<Scalar>> = (0..env_h::DIM)
        .map(|j| {
            let s = env_h::HOPF.antipode_elem(&env_h::HOPF.alg.basis_elem(j));
            act_matrix_on_m(&env_h::star_h(&s)).dagger()
        })
        .collect();
    let mut counit_fail = None;
    for i in 0..env_h::DIM {
        let mut lhs = Mat::zeros(qplane::DIM, qplane::DIM);
        for (j, k, c) in &env_h::HOPF.comult[i] {
            lhs = lhs.add(&twisted[*j].mul(&g.mul(&acts[*k])).scale(c));
        }
        if lhs != g.scale(&env_h::HOPF.counit[i]) {
            counit_fail = Some(i);
            break;
        }
    }
    rep.check(
        "counit-twisted invariance ((S h₍₁₎)*.z, h₍₂₎.w) = ε(h)(z,w)",
        counit_fail.is_none(),
        || format!("fails on basis element #{}", counit_fail.unwrap()),
    );

    // Right-coaction conditions, valued in the 27-dimensional function algebra.
    let f_alg = &fun_f::HOPF.alg;
    let f_dim = f_alg.dim;
    let co = &fun_f::COACT_RIGHT.table;
    let star_f: Vec<Elem> = (0..f_dim)
        .map(|i| fun_f::HOPF.star_elem(&f_alg.basis_elem(i)))
        .collect();
    let antistar_f: Vec<Elem> = (0..f_dim)
        .map(|i| {
            let s = fun_f::HOPF.antipode_elem(&f_alg.basis_elem(i));
            fun_f::HOPF.star_elem(&s)
        })
        .collect();

    let mut co_fail = None;
    'outer: for a in 0..qplane::DIM {
        for b in 0..qplane::DIM {
            let mut lhs = vec![Scalar::zero(); f_dim];
            for (f1, m1, c1) in &co[a] {
                for (f2, m2, c2) in &co[b] {
                    let gv = &g[(*m1, *m2)];
                    if gv.is_zero() {
                        continue;
                    }
                    let coeff = c1.conj().mul(c2).mul(gv);
                    let prod = f_alg.mul(&star_f[*f1], &f_alg.basis_elem(*f2));
                    for (t, p) in prod.iter().enumerate() {
                        if !p.is_zero() {
                            lhs[t] = lhs[t].add(&coeff.mul(p));
                        }
                    }
                }
            }
            let mut rhs = vec![Scalar::zero(); f_dim];
            rhs[f_alg.unit_index] = g[(a, b)].clone();
            if lhs != rhs {
                co_fail = Some((a, b));
                break 'outer;
            }
        }
    }
    rep.check(
        "right-coaction invariance (Δ_R z, Δ_R w) = (z,w)·1_F on all 81 pairs",
        co_fail.is_none(),
        || format!("fails on monomial pair {:?}", co_fail.unwrap()),
    );

    let mut dual_fail = None;
    'outer2: for a in 0..qplane::DIM {
        for b in 0..qplane::DIM {
            let mut lhs = vec![Scalar::zero(); f_dim];
            for (f2, m2, c2) in &co[b] {
                let coeff = c2.mul(&g[(a, *m2)]);
                if !coeff.is_zero() {
                    lhs[*f2] = lhs[*f2].add(&coeff);
                }
            }
            let mut rhs = vec![Scalar::zero(); f_dim];
            for (f1, m1, c1) in &co[a] {
                let coeff = c1.conj().mul(&g[(*m1, b)]);
                if coeff.is_zero() {
                    continue;
                }
                for (t, p) in antistar_f[*f1].iter().enumerate() {
                    if !p.is_zero() {
                        rhs[t] = rhs[t].add(&coeff.mul(p));
                    }
                }
            }
            if lhs != rhs {
                dual_fail = Some((a, b));
                break 'outer2;
            }
        }
    }
    rep.check(
        "coaction adjointness (z, Δ_R w) = ((1⊗S)Δ_R z, w) on all 81 pairs",
        dual_fail.is_none(),
        || format!("fails on monomial pair {:?}", dual_fail.unwrap()),
    );

    rep
}

// ---------------------------------------------------------------------------
// Radical and submodule structure
// ---------------------------------------------------------------------------

/// Basis of the Jacobson radical of `H`: the elements whose structural image
/// has vanishing matrix block and purely Grassmann second block (no scalar
/// body).  Thirteen-dimensional.
pub fn radical_of_envelope() -> Vec<Elem> {
    let mut m = Mat::zeros(18, env_h::DIM);
    for j in 0..env_h::DIM {
        let s = &env_h::STRUCTURAL_BASIS[j];
        for r in 0..3 {
            for c in 0..3 {
                m[(3 * r + c, j)] = s.block1[(r, c)].clone();
                m[(9 + 3 * r + c, j)] = s.block2[(r, c)].coeffs[0].clone();
            }
        }
    }
    m.kernel().iter().map(|kv| kv.col(0)).collect()
}

/// Basis of `J·V`, the radical of the module `V` (`J` the Jacobson radical
/// of `H`).  Works for any representation with exact generator matrices.
pub fn radical_of_module(rep: &HRep) -> Vec<Vec<Scalar>> {
    let actions = rep.basis_actions();
    let mut vecs = Vec::new();
    for r in radical_of_envelope() {
        let mut m = Mat::zeros(rep.dim, rep.dim);
        for (i, c) in r.iter().enumerate() {
            if !c.is_zero() {
                m = m.add(&actions[i].scale(c));
            }
        }
        for j in 0..rep.dim {
            let col = m.col(j);
            if col.iter().any(|c| !c.is_zero()) {
                vecs.push(col);
            }
        }
    }
    span_basis(&vecs)
}

/// Smallest `H`-stable subspace containing `v`.
pub fn cyclic_submodule(rep: &HRep, v: &[Scalar]) -> Vec<Vec<Scalar>> {
    let actions = rep.basis_actions();
    let vecs: Vec<Vec<Scalar>> = actions.iter().map(|a| a.mul_vec(v)).collect();
    span_basis(&vecs)
}

/// The representation induced on an invariant subspace spanned by the given
/// (independent) vectors; `None` when the span is not stable.
pub fn induced_subrep(rep: &HRep, vectors: &[Vec<Scalar>], name: &str) -> Option<HRep> {
    let k = vectors.len();
    let a = Mat::from_fn(rep.dim, k, |i, j| vectors[j][i].clone());
    assert_eq!(a.rank(), k, "subspace vectors must be independent");
    let mut mats = Vec::new();
    for gen in [&rep.xp, &rep.xm, &rep.k] {
        match a.solve(&gen.mul(&a)) {
            SolveOutcome::Inconsistent => return None,
            SolveOutcome::Solution { particular, .. } => mats.push(particular),
        }
    }
    Some(HRep::new(name, mats[0].clone(), mats[1].clone(), mats[2].clone()))
}

/// The representation induced on the quotient by an invariant subspace.
pub fn quotient_rep(rep: &HRep, subspace: &[Vec<Scalar>], name: &str) -> HRep {
    let n = rep.dim;
    let rows = span_basis(subspace);
    let (rref, pivots) = if rows.is_empty() {
        (Mat::zeros(0, n), Vec::new())
    } else {
        Mat::from_rows(rows).rref()
    };
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let reduce = |v: &[Scalar]| -> Vec<Scalar> {
        let mut w = v.to_vec();
        for (row, &p) in pivots.iter().enumerate() {
            if !w[p].is_zero() {
                let c = w[p].clone();
                for j in 0..n {
                    w[j] = w[j].sub(&c.mul(&rref[(row, j)]));
                }
            }
        }
        free.iter().map(|&c| w[c].clone()).collect()
    };
    let d = free.len();
    let mut mats = Vec::new();
    for gen in [&rep.xp, &rep.xm, &rep.k] {
        let mut m = Mat::zeros(d, d);
        for (jpos, &fj) in free.iter().enumerate() {
            let img = reduce(&gen.col(fj));
            for (ipos, c) in img.iter().enumerate() {
                m[(ipos, jpos)] = c.clone();
            }
        }
        mats.push(m);
    }
    HRep::new(name, mats[0].clone(), mats[1].clone(), mats[2].clone())
}

/// Dimension of the span of all basis-element images — the size of the
/// image of `H` in the endomorphism algebra (9 certifies irreducibility of a
/// 3-dimensional module, 4 of a 2-dimensional one, and so on).
pub fn image_algebra_dim(rep: &HRep) -> usize {
    let vecs: Vec<Vec<Scalar>> = rep.basis_actions().iter().map(|m| m.flatten()).collect();
    span_basis(&vecs).len()
}

fn unit_vec(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}

fn scaled_unit_sum(n: usize, entries: &[(usize, Q)]) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    for (i, c) in entries {
        v[*i] = Scalar::from_q(c.clone());
    }
    v
}

/// Structural facts about the submodules of one catalogued representation:
/// radical dimension, irreducibility certificates, the λ-parametrized
/// 3-dimensional families inside the six-dimensional modules, socles, and
/// the irreducible quotients by the radical.
pub fn submodule_families(rep: &HRep) -> Report {
    let mut out = Report::new();
    let name = rep.name.clone();
    let rad = radical_of_module(rep);
    let lambda_samples: [(i64, i64); 5] = [(1, 1), (1, 2), (2, 3), (1, -1), (0, 1)];

    match name.as_str() {
        "1" | "2_eve" | "3_irr" => {
            let expected_rad = 0usize;
            out.check(
                &format!("{name}: radical dimension {expected_rad}"),
                rad.len() == expected_rad,
                || format!("got radical dimension {}", rad.len()),
            );
            let full = rep.dim * rep.dim;
            out.check(
                &format!("{name}: irreducible (H maps onto the full {}-dim endomorphism algebra)", full),
                image_algebra_dim(rep) == full,
                || format!("image algebra has dimension {}", image_algebra_dim(rep)),
            );
        }
        "3_eve" => {
            out.check(
                &format!("{name}: radical dimension 2"),
                rad.len() == 2,
                || format!("got {}", rad.len()),
            );
            let sub = induced_subrep(rep, &[unit_vec(3, 0), unit_vec(3, 1)], "2_eve");
            out.check(
                &format!("{name}: the radical span (first two basis vectors) carries 2_eve"),
                sub.as_ref() == builtin_rep("2_eve", None).ok().as_ref(),
                || "induced matrices differ from 2_eve".into(),
            );
            out.check(
                &format!("{name}: the last basis line is not invariant"),
                induced_subrep(rep, &[unit_vec(3, 2)], "line").is_none(),
                || "the line is unexpectedly stable".into(),
            );
            let quot = quotient_rep(rep, &rad, "top");
            out.check(
                &format!("{name}: quotient by the radical is the trivial module"),
                fingerprint(&quot) == fingerprint(&builtin_rep("1", None).unwrap()),
                || "quotient fingerprint differs".into(),
            );
        }
        "3_odd" => {
            out.check(
                &format!("{name}: radical dimension 1"),
                rad.len() == 1,
                || format!("got {}", rad.len()),
            );
            let socle = cyclic_submodule(rep, &unit_vec(3, 2));
            out.check(
                &format!("{name}: the invariant vector spans a 1-dimensional cyclic submodule"),
                socle.len() == 1,
                || format!("cyclic submodule has dimension {}", socle.len()),
            );
            out.check(
                &format!("{name}: the first two basis vectors do not span a submodule"),
                induced_subrep(rep, &[unit_vec(3, 0), unit_vec(3, 1)], "plane").is_none(),
                || "the plane is unexpectedly stable".into(),
            );
            let quot = quotient_rep(rep, &rad, "top");
            out.check(
                &format!("{name}: quotient by the radical is 2_eve"),
                fingerprint(&quot) == fingerprint(&builtin_rep("2_eve", None).unwrap()),
                || "quotient fingerprint differs".into(),
            );
        }
        "6_eve" => {
            out.check(
                &format!("{name}: radical dimension 4"),
                rad.len() == 4,
                || format!("got {}", rad.len()),
            );
            let quot = quotient_rep(rep, &rad, "top");
            out.check(
                &format!("{name}: quotient by the radical is the irreducible 2_eve"),
                fingerprint(&quot) == fingerprint(&builtin_rep("2_eve", None).unwrap()),
                || "quotient fingerprint differs".into(),
            );
            let mut all = true;
            for (l1, l2) in lambda_samples {
                let vectors = vec![
                    unit_vec(6, 1),
                    unit_vec(6, 3),
                    scaled_unit_sum(6, &[(4, qq(l1, 1)), (5, qq(l2, 1))]),
                ];
                let induced = induced_subrep(rep, &vectors, "3_eve");
                let expect = builtin_rep("3_eve", Some((qq(l1, 1), qq(l2, 1)))).unwrap();
                if induced.as_ref() != Some(&expect) {
                    all = false;
                    break;
                }
            }
            out.check(
                &format!("{name}: the λ-family of 3-dim invariant subspaces carries 3_eve(λ)"),
                all,
                || "an induced λ-submodule differs from 3_eve(λ)".into(),
            );
        }
        "6_odd" => {
            out.check(
                &format!("{name}: radical dimension 5"),
                rad.len() == 5,
                || format!("got {}", rad.len()),
            );
            let quot = quotient_rep(rep, &rad, "top");
            out.check(
                &format!("{name}: quotient by the radical is the trivial module"),
                fingerprint(&quot) == fingerprint(&builtin_rep("1", None).unwrap()),
                || "quotient fingerprint differs".into(),
            );
            let socle = cyclic_submodule(rep, &unit_vec(6, 5));
            out.check(
                &format!("{name}: the invariant vector spans a 1-dimensional cyclic submodule"),
                socle.len() == 1,
                || format!("cyclic submodule has dimension {}", socle.len()),
            );
            let mut all = true;
            for (l1, l2) in lambda_samples {
                let vectors = vec![
                    scaled_unit_sum(6, &[(0, qq(l1, 1)), (1, qq(l2, 1))]),
                    scaled_unit_sum(6, &[(2, qq(l1, 1)), (3, qq(l2, 1))]),
                    unit_vec(6, 5),
                ];
                let induced = induced_subrep(rep, &vectors, "3_odd");
                let expect = builtin_rep("3_odd", Some((qq(l1, 1), qq(l2, 1)))).unwrap();
                if induced.as_ref() != Some(&expect) {
                    all = false;
                    break;
                }
            }
            out.check(
                &format!("{name}: the λ-family of 3-dim invariant subspaces carries 3_odd(λ)"),
                all,
                || "an induced λ-submodule differs from 3_odd(λ)".into(),
            );
        }
        _ => {
            out.ok(&format!(
                "{name}: radical dimension {} (no frozen expectation)",
                rad.len()
            ));
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Fingerprints and tensor decomposition
// ---------------------------------------------------------------------------

fn kernel_basis_matrix(m: &Mat<Scalar>) -> Mat<Scalar> {
    let ker = m.kernel();
    let n = m.cols;
    Mat::from_fn(n, ker.len(), |i, j| ker[j][(i, 0)].clone())
}

/// Additive isomorphism invariant of a module: dimension, ranks of the
/// generator images and their squares, `K`-eigenvalue multiplicities,
/// Casimir ranks, the dimension of the space of invariant vectors, and the
/// ranks of `X_±` restricted to each `K`-eigenspace.  Every component is
/// additive over direct sums, and the catalogue values are pairwise
/// distinct.
pub fn fingerprint(rep: &HRep) -> Vec<usize> {
    let n = rep.dim;
    let id = Mat::identity(n);
    let mut out = vec![
        n,
        rep.xp.rank(),
        rep.xp.pow(2).rank(),
        rep.xm.rank(),
        rep.xm.pow(2).rank(),
    ];
    let eigen: Vec<Mat<Scalar>> = (0..3)
        .map(|a| kernel_basis_matrix(&rep.k.sub(&id.scale(&Scalar::q_pow(a)))))
        .collect();
    for e in &eigen {
        out.push(e.cols);
    }
    let c = rep.casimir_matrix();
    let cm = c.sub(&id.scale(&Scalar::rat(1, 3)));
    let cp = c.add(&id.scale(&Scalar::rat(2, 3)));
    out.push(cm.rank());
    out.push(cm.pow(2).rank());
    out.push(cp.rank());
    let stacked = rep.xp.vstack(&rep.xm).vstack(&rep.k.sub(&id));
    out.push(n - stacked.rank());
    for e in &eigen {
        out.push(rep.xp.mul(e).rank());
        out.push(rep.xm.mul(e).rank());
    }
    out
}

fn add_vecs(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn leq_vecs(a: &[usize], b: &[usize]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Decompose the tensor product of two catalogued indecomposables into a
/// multiset of catalogue labels, by matching the additive fingerprint of the
/// product against all candidate multisets.  Errors when an input is not in
/// the catalogue or when the fingerprint match is not unique.
pub fn decompose_tensor(r1: &HRep, r2: &HRep) -> Result<Vec<(String, usize)>, String> {
    let cat = catalogue();
    let cat_fps: Vec<Vec<usize>> = cat.iter().map(fingerprint).collect();
    for r in [r1, r2] {
        let Some(pos) = cat.iter().position(|c| c.name == r.name) else {
            return Err(format!("{} is not a catalogued indecomposable", r.name));
        };
        if !r.check_relations().all_passed() || fingerprint(r) != cat_fps[pos] {
            return Err(format!(
                "{} does not match the catalogued module of that name",
                r.name
            ));
        }
    }
    let target = fingerprint(&r1.tensor(r2));
    // Depth-first search over count vectors, largest dimension first.
    let mut order: Vec<usize> = (0..cat.len()).collect();
    order.sort_by(|&a, &b| cat[b].dim.cmp(&cat[a].dim));
    let mut solutions: Vec<Vec<usize>> = Vec::new();
    let mut counts = vec![0usize; cat.len()];
    fn dfs(
        level: usize,
        acc: &[usize],
        order: &[usize],
        cat_dims: &[usize],
        cat_fps: &[Vec<usize>],
        target: &[usize],
        counts: &mut Vec<usize>,
        solutions: &mut Vec<Vec<usize>>,
    ) {
        if level == order.len() {
            if acc == target {
                solutions.push(counts.clone());
            }
            return;
        }
        let idx = order[level];
        let remaining = target[0] - acc[0];
        let max_count = remaining / cat_dims[idx];
        for c in (0..=max_count).rev() {
            let mut next = acc.to_vec();
            let mut ok = true;
            for _ in 0..c {
                next = add_vecs(&next, &cat_fps[idx]);
            }
            if !leq_vecs(&next, target) {
                ok = false;
            }
            if ok {
                counts[idx] = c;
                dfs(
                    level + 1,
                    &next,
                    order,
                    cat_dims,
                    cat_fps,
                    target,
                    counts,
                    solutions,
                );
                counts[idx] = 0;
            }
        }
    }
    let cat_dims: Vec<usize> = cat.iter().map(|c| c.dim).collect();
    let zero = vec![0usize; target.len()];
    dfs(
        0,
        &zero,
        &order,
        &cat_dims,
        &cat_fps,
        &target,
        &mut counts,
        &mut solutions,
    );
    match solutions.len() {
        0 => Err(format!(
            "no multiset of catalogued indecomposables matches {}⊗{}",
            r1.name, r2.name
        )),
        1 => Ok(CATALOGUE_NAMES
            .iter()
            .enumerate()
            .filter(|(i, _)| solutions[0][*i] > 0)
            .map(|(i, n)| (n.to_string(), solutions[0][i]))
            .collect()),
        _ => Err(format!(
            "fingerprints do not determine {}⊗{} uniquely",
            r1.name, r2.name
        )),
    }
}

/// One row of the tensor-product table.
#[derive(Clone, Debug, PartialEq)]
pub struct TensorRow {
    pub left: String,
    pub right: String,
    pub summands: Vec<(String, usize)>,
}

/// Tensor-product table over the four representations that occur in the
/// regular module (`2_eve`, `3_irr`, `6_eve`, `6_odd`), all 16 ordered
/// pairs.
pub fn tensor_table() -> Vec<TensorRow> {
    let names = ["2_eve", "3_irr", "6_eve", "6_odd"];
    let mut rows = Vec::new();
    for left in names {
        for right in names {
            let r1 = builtin_rep(left, None).unwrap();
            let r2 = builtin_rep(right, None).unwrap();
            let summands = decompose_tensor(&r1, &r2)
                .unwrap_or_else(|e| panic!("tensor table entry {left}⊗{right}: {e}"));
            rows.push(TensorRow {
                left: left.to_string(),
                right: right.to_string(),
                summands,
            });
        }
    }
    rows
}

// ---------------------------------------------------------------------------
// Tests
// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Cq3;

    fn rep(name: &str) -> HRep {
        let params = if matches!(name, "3_eve" | "3_odd") {
            Some((qq(1, 1), qq(-1, 1)))
        } else {
            None
        };
        builtin_rep(name, params).unwrap()
    }

    fn realified_flat(g: &Mat<Scalar>) -> Vec<Scalar> {
        let mut out = Vec::with_capacity(2 * g.rows * g.cols);
        for e in g.flatten() {
            out.push(Scalar::from_q(e.r0.clone()));
            out.push(Scalar::from_q(e.r1.clone()));
        }
        out
    }

    /// The displayed invariant metrics, as exact ℚ(q) matrices.  Purely
    /// imaginary entries are expressed through ω = q − q² = i√3, which
    /// amounts to rescaling the associated real parameter by √3.
    fn golden_metrics(name: &str) -> Vec<Mat<Scalar>> {
        let w = omega();
        let wq = w.mul(&Scalar::q());
        let wq2 = w.mul(&Scalar::q2());
        match name {
            "1" => vec![Mat::identity(1)],
            "2_eve" => vec![elementary_mat(
                2,
                &[(0, 1, wq.clone()), (1, 0, wq2.neg())],
            )],
            "3_irr" => vec![elementary_mat(
                3,
                &[
                    (0, 2, sc(1, 1)),  // −q²
                    (1, 1, sc(1, 0)),
                    (2, 0, sc(0, -1)), // −q
                ],
            )],
            "3_eve" => vec![elementary_mat(3, &[(2, 2, Scalar::one())])],
            "3_odd" => vec![elementary_mat(
                3,
                &[(0, 1, wq.clone()), (1, 0, wq2.neg())],
            )],
            "4_eve" => vec![
                elementary_mat(4, &[(2, 2, Scalar::one())]),
                elementary_mat(4, &[(3, 3, Scalar::one())]),
                elementary_mat(4, &[(2, 3, Scalar::one()), (3, 2, Scalar::one())]),
                elementary_mat(4, &[(2, 3, w.clone()), (3, 2, w.neg())]),
            ],
            "5_odd" => vec![
                elementary_mat(5, &[(0, 2, wq.clone()), (2, 0, wq2.neg())]),
                elementary_mat(5, &[(1, 3, wq.clone()), (3, 1, wq2.neg())]),
                elementary_mat(
                    5,
                    &[
                        (0, 3, Scalar::one()),
                        (3, 0, Scalar::one()),
                        (1, 2, sc(1, 1)),  // −q²
                        (2, 1, sc(0, -1)), // −q
                    ],
                ),
                elementary_mat(
                    5,
                    &[
                        (0, 3, w.clone()),
                        (3, 0, w.neg()),
                        (1, 2, sc(1, -1)), // ωq²
                        (2, 1, sc(2, 1)),  // −ωq
                    ],
                ),
            ],
            "6_eve" => vec![
                elementary_mat(
                    6,
                    &[
                        (0, 3, wq.neg()),
                        (1, 2, wq.neg()),
                        (2, 1, wq2.clone()),
                        (3, 0, wq2.clone()),
                        (4, 5, w.clone()),
                        (5, 4, w.neg()),
                    ],
                ),
                elementary_mat(6, &[(0, 2, wq.clone()), (2, 0, wq2.neg())]),
            ],
            "6_odd" => vec![
                elementary_mat(
                    6,
                    &[
                        (0, 3, Scalar::q()),
                        (1, 2, Scalar::q().neg()),
                        (2, 1, sc(1, 1)), // −q²
                        (3, 0, Scalar::q2()),
                        (4, 5, Scalar::one()),
                        (5, 4, Scalar::one()),
                    ],
                ),
                elementary_mat(6, &[(4, 4, Scalar::one())]),
            ],
            _ => unreachable!(),
        }
    }

    fn generator_adjointness_holds(r: &HRep, g: &Mat<Scalar>) -> bool {
        r.xp.dagger().mul(g) == g.mul(&r.xp.scale(&sc(1, 1)))
            && r.xm.dagger().mul(g) == g.mul(&r.xm.scale(&sc(0, -1)))
            && r.k.dagger().mul(g) == g.mul(&r.k)
    }

    #[test]
    fn builtin_reps_satisfy_the_defining_relations() {
        for r in catalogue() {
            r.check_relations().assert_all();
        }
        // Other members of the two parametrized families.
        for (l1, l2) in [(2i64, 3i64), (5, 7), (0, 1), (1, 0)] {
            for fam in ["3_eve", "3_odd"] {
                builtin_rep(fam, Some((qq(l1, 1), qq(l2, 1))))
                    .unwrap()
                    .check_relations()
                    .assert_all();
            }
        }
        // Displayed generator images.
        assert_eq!(
            rep("3_irr").k,
            diag_mat(&[Scalar::q2(), Scalar::one(), Scalar::q()])
        );
        assert_eq!(
            rep("2_eve").xp,
            elementary_mat(2, &[(0, 1, Scalar::one())])
        );
        assert_eq!(rep("6_odd").dim, 6);
        // Error cases.
        assert!(builtin_rep("7_odd", None).is_err());
        assert!(builtin_rep("3_eve", None).is_err());
        assert!(builtin_rep("3_irr", Some((qq(1, 1), qq(1, 1)))).is_err());
    }

    #[test]
    fn fingerprints_separate_the_catalogue() {
        let expected: [(&str, [usize; 18]); 9] = [
            ("1", [1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0]),
            ("2_eve", [2, 1, 0, 1, 0, 0, 1, 1, 0, 0, 2, 0, 0, 0, 0, 1, 1, 0]),
            ("3_irr", [3, 2, 1, 2, 1, 1, 1, 1, 3, 3, 0, 0, 1, 1, 1, 0, 0, 1]),
            ("3_eve", [3, 2, 1, 2, 1, 1, 1, 1, 0, 0, 3, 0, 1, 1, 0, 1, 1, 0]),
            ("3_odd", [3, 2, 1, 2, 1, 1, 1, 1, 0, 0, 3, 1, 0, 0, 1, 1, 1, 1]),
            ("4_eve", [4, 2, 1, 2, 1, 2, 1, 1, 0, 0, 4, 0, 1, 1, 0, 1, 1, 0]),
            ("5_odd", [5, 3, 1, 3, 1, 1, 2, 2, 0, 0, 5, 1, 0, 0, 1, 2, 2, 1]),
            ("6_eve", [6, 4, 2, 4, 2, 2, 2, 2, 2, 0, 6, 0, 1, 1, 1, 2, 2, 1]),
            ("6_odd", [6, 4, 2, 4, 2, 2, 2, 2, 1, 0, 6, 1, 1, 1, 1, 2, 2, 1]),
        ];
        let mut fps = Vec::new();
        for (name, fp) in &expected {
            let got = fingerprint(&rep(name));
            assert_eq!(got, fp.to_vec(), "fingerprint of {name}");
            fps.push(got);
        }
        for i in 0..fps.len() {
            for j in (i + 1)..fps.len() {
                assert_ne!(fps[i], fps[j], "fingerprints of #{i} and #{j} collide");
            }
        }
        // Additivity over direct sums.
        let a = rep("3_irr");
        let b = rep("2_eve");
        assert_eq!(
            fingerprint(&a.direct_sum(&b)),
            add_vecs(&fingerprint(&a), &fingerprint(&b))
        );
    }

    #[test]
    fn invariant_metric_spaces_match_the_displayed_families() {
        let expected_dims: [(&str, usize); 9] = [
            ("1", 1),
            ("2_eve", 1),
            ("3_irr", 1),
            ("3_eve", 1),
            ("3_odd", 1),
            ("4_eve", 4),
            ("5_odd", 4),
            ("6_eve", 2),
            ("6_odd", 2),
        ];
        for (name, dim) in expected_dims {
            let r = rep(name);
            let basis = invariant_metric_space(&r);
            assert_eq!(basis.len(), dim, "metric family dimension for {name}");
            for g in &basis {
                assert!(g.is_hermitian(), "{name}: solver output not hermitian");
                assert!(
                    generator_adjointness_holds(&r, g),
                    "{name}: solver output not invariant"
                );
            }
            // The displayed metrics are invariant and lie in the solved span.
            let span: Vec<Vec<Scalar>> = basis.iter().map(realified_flat).collect();
            for g in golden_metrics(name) {
                assert!(g.is_hermitian(), "{name}: displayed metric not hermitian");
                assert!(
                    generator_adjointness_holds(&r, &g),
                    "{name}: displayed metric not invariant"
                );
                assert!(
                    express_in_span(&span, &realified_flat(&g)).is_some(),
                    "{name}: displayed metric outside the solved family"
                );
            }
        }
    }

    #[test]
    fn metric_signatures_are_certified() {
        // The displayed single metrics.
        assert_eq!(signature(&golden_metrics("3_irr")[0]), (2, 1, 0));
        assert_eq!(signature(&golden_metrics("2_eve")[0]), (1, 1, 0));
        assert_eq!(signature(&golden_metrics("3_odd")[0]), (1, 1, 1));
        assert_eq!(signature(&golden_metrics("3_eve")[0]), (1, 0, 2));
        // Generic signatures over the solved families.
        let expected: [(&str, Option<(usize, usize, usize)>); 9] = [
            ("1", Some((1, 0, 0))),
            ("2_eve", Some((1, 1, 0))),
            ("3_irr", Some((2, 1, 0))),
            ("3_eve", Some((1, 0, 2))),
            ("3_odd", Some((1, 1, 1))),
            ("4_eve", None), // depends on the parameters
            ("5_odd", Some((2, 2, 1))),
            ("6_eve", Some((3, 3, 0))),
            ("6_odd", Some((3, 3, 0))),
        ];
        let table = metric_table();
        for ((name, sig), row) in expected.iter().zip(&table) {
            assert_eq!(&row.name, name);
            assert_eq!(&row.signature, sig, "generic signature for {name}");
        }
        assert_eq!(
            table.iter().map(|r| r.real_params).collect::<Vec<_>>(),
            vec![1, 1, 1, 1, 1, 4, 4, 2, 2]
        );
        // Two parameter points of the 4_eve family with different inertia.
        let g4 = golden_metrics("4_eve");
        let plus = g4[0].add(&g4[1]);
        let minus = g4[0].sub(&g4[1]);
        assert_eq!(signature(&plus), (2, 0, 2));
        assert_eq!(signature(&minus), (1, 1, 2));
        // Signature is stable under positive real scaling and congruence.
        let g = &golden_metrics("3_irr")[0];
        assert_eq!(signature(&g.scale(&Scalar::from_int(7))), (2, 1, 0));
        let p = Mat::from_rows(vec![
            vec![sc(1, 0), sc(2, 0), sc(0, 0)],
            vec![sc(0, 0), sc(1, 0), sc(3, 0)],
            vec![sc(1, 0), sc(0, 0), sc(1, 0)],
        ]);
        assert!(p.inverse().is_some());
        assert_eq!(signature(&p.dagger().mul(&g.mul(&p))), (2, 1, 0));
    }

    #[test]
    fn m_identifies_with_the_structural_direct_sum() {
        let ident = m_as_rep();
        let m = &ident.rep_m;
        let t = &ident.target;
        // K is diagonal with matching eigenvalues on both sides.
        assert_eq!(m.k, t.k);
        // The raising generator acts on the reordered monomial basis by the
        // frozen sparse table...
        let expected_m_xp = elementary_mat(
            9,
            &[
                (0, 1, Scalar::q()),
                (1, 2, sc(1, 1)), // −q²
                (3, 4, Scalar::one()),
                (4, 5, Scalar::q().neg()),
                (8, 6, Scalar::q2()),
                (6, 7, Scalar::one().neg()),
            ],
        );
        assert_eq!(m.xp, expected_m_xp);
        // ...and on the structural side by the three displayed blocks.
        let expected_t_xp = {
            let mut b = Mat::zeros(9, 9);
            for (i, j, c) in [
                (0, 1, Scalar::one()),
                (1, 2, Scalar::one()),
                (3, 4, Scalar::one()),
                (4, 5, Scalar::one().neg()),
                (6, 7, Scalar::one()),
                (8, 6, Scalar::one().neg()),
            ] {
                b[(i, j)] = c;
            }
            b
        };
        assert_eq!(t.xp, expected_t_xp);
        // Both generator matrices are block-diagonal over the three pieces.
        for g in [&m.xp, &m.xm, &m.k] {
            for i in 0..9 {
                for j in 0..9 {
                    if i / 3 != j / 3 {
                        assert!(g[(i, j)].is_zero(), "off-block entry at ({i},{j})");
                    }
                }
            }
        }
        // The intertwiner is an invertible diagonal solving a 3-dimensional
        // space (one free scalar per indecomposable summand).
        assert_eq!(diagonal_intertwiner_space(m, t).len(), 3);
        let phi = &ident.intertwiner;
        assert!(phi.inverse().is_some());
        for i in 0..9 {
            for j in 0..9 {
                if i != j {
                    assert!(phi[(i, j)].is_zero());
                }
            }
        }
        // Full intertwining over the 27-element monomial basis of H.
        for i in 0..env_h::DIM {
            assert_eq!(
                phi.mul(&m.act_basis(i)),
                t.act_basis(i).mul(phi),
                "intertwining fails on basis element #{i}"
            );
        }
    }

    #[test]
    fn grassmann_columns_realize_the_six_dimensional_reps() {
        // The matrix block of the structural realization is exactly 3_irr.
        let irr = rep("3_irr");
        assert_eq!(env_h::STRUCTURAL_BASIS[env_h::idx(1, 0, 0)].block1, irr.xp);
        assert_eq!(env_h::STRUCTURAL_BASIS[env_h::idx(0, 0, 1)].block1, irr.xm);
        assert_eq!(env_h::STRUCTURAL_BASIS[env_h::idx(0, 1, 0)].block1, irr.k);
        // The two parity halves of the Grassmann column carry 6_eve / 6_odd.
        assert_eq!(grassmann_column_rep(false), rep("6_eve"));
        assert_eq!(grassmann_column_rep(true), rep("6_odd"));
    }

    #[test]
    fn scalar_product_matches_every_formulation() {
        let g = invariant_form_on_m();
        assert!(g.is_hermitian());
        // Displayed special values.
        let xy = qplane::idx(1, 1);
        let one = qplane::idx(0, 0);
        let x2y2 = qplane::idx(2, 2);
        assert_eq!(g[(xy, xy)], Scalar::one());
        assert_eq!(g[(one, one)], Scalar::zero());
        assert_eq!(g[(one, xy)], Scalar::zero());
        assert_eq!(g[(one, x2y2)], Scalar::q2());
        assert_eq!(g[(x2y2, one)], Scalar::q());
        // (z, z′) = q²·(coefficient of x²y² in z*z′) on all 81 pairs.
        for i in 0..9 {
            for j in 0..9 {
                let zi = qplane::ALGEBRA.basis_elem(i);
                let zj = qplane::ALGEBRA.basis_elem(j);
                let prod = qplane::ALGEBRA.mul(&qplane::star(&zi), &zj);
                assert_eq!(
                    g[(i, j)],
                    Scalar::q2().mul(&prod[x2y2]),
                    "pair ({i},{j})"
                );
            }
        }
        // Hyperbolic-pairs basis: {x²y, xy², x²y², y²} against {y, x, 1, x²}
        // pairs into Diag(1, q, q, q), with (xy, xy) = 1 standing alone.
        let weights = [Scalar::one(), Scalar::q(), Scalar::q(), Scalar::q()];
        let order = [
            qplane::idx(2, 1),
            qplane::idx(1, 2),
            qplane::idx(2, 2),
            qplane::idx(0, 2),
            qplane::idx(0, 1),
            qplane::idx(1, 0),
            qplane::idx(0, 0),
            qplane::idx(2, 0),
            qplane::idx(1, 1),
        ];
        let gw = reorder(&g, &order);
        let mut expected = Mat::zeros(9, 9);
        for (i, w) in weights.iter().enumerate() {
            expected[(i, 4 + i)] = w.clone();
            expected[(4 + i, i)] = w.conj();
        }
        expected[(8, 8)] = Scalar::one();
        assert_eq!(gw, expected);
        // Adapted-order block form [[B,0,0],[0,0,B],[0,B,0]] with
        // B = [[0,0,q²],[0,1,0],[q,0,0]].
        let b = elementary_mat(
            3,
            &[
                (0, 2, Scalar::q2()),
                (1, 1, Scalar::one()),
                (2, 0, Scalar::q()),
            ],
        );
        let ga = reorder(&g, &M_ADAPTED_FORM_ORDER);
        let mut expected_blocks = Mat::zeros(9, 9);
        for (bi, bj) in [(0usize, 0usize), (1, 2), (2, 1)] {
            for i in 0..3 {
                for j in 0..3 {
                    expected_blocks[(3 * bi + i, 3 * bj + j)] = b[(i, j)].clone();
                }
            }
        }
        assert_eq!(ga, expected_blocks);
        // Trace formulas against the 3×3 matrix picture of M: with C the
        // charge conjugation, (m₁, m₂) = ⅓Tr(Bᵗ C m₁* m₂) = ⅓Tr(Bᵗ m₁† C m₂).
        let c = qplane::charge_conjugation();
        let bt = b.transpose();
        let third = Scalar::rat(1, 3);
        for i in 0..9 {
            for j in 0..9 {
                let zi = qplane::ALGEBRA.basis_elem(i);
                let zj = qplane::ALGEBRA.basis_elem(j);
                let mi = qplane::to_matrix(&zi);
                let mj = qplane::to_matrix(&zj);
                let mi_star = qplane::to_matrix(&qplane::star(&zi));
                let t1 = bt.mul(&c).mul(&mi_star).mul(&mj).trace().mul(&third);
                let t2 = bt.mul(&mi.dagger()).mul(&c).mul(&mj).trace().mul(&third);
                assert_eq!(g[(i, j)], t1, "first trace formula at ({i},{j})");
                assert_eq!(g[(i, j)], t2, "second trace formula at ({i},{j})");
            }
        }
        // Real diagonalizing basis: u₁ = −y + x²y, u₂ = y + x²y,
        // v₁ = −1 + x²y², v₂ = 1 + x²y², w₁ = −x + xy², w₂ = x + xy²,
        // t₁ = −x² + y², t₂ = x² + y², s = xy.
        let pairs: [(usize, usize); 4] = [
            (qplane::idx(0, 1), qplane::idx(2, 1)),
            (qplane::idx(0, 0), qplane::idx(2, 2)),
            (qplane::idx(1, 0), qplane::idx(1, 2)),
            (qplane::idx(2, 0), qplane::idx(0, 2)),
        ];
        let mut vectors: Vec<Vec<Scalar>> = Vec::new();
        for (lo, hi) in pairs {
            let mut minus = vec![Scalar::zero(); 9];
            minus[lo] = Scalar::one().neg();
            minus[hi] = Scalar::one();
            let mut plus = vec![Scalar::zero(); 9];
            plus[lo] = Scalar::one();
            plus[hi] = Scalar::one();
            vectors.push(minus);
            vectors.push(plus);
        }
        let mut s = vec![Scalar::zero(); 9];
        s[qplane::idx(1, 1)] = Scalar::one();
        vectors.push(s);
        let p = Mat::from_fn(9, 9, |i, j| vectors[j][i].clone());
        let gr = p.dagger().mul(&g.mul(&p));
        let w = omega();
        let mut expected_r = Mat::zeros(9, 9);
        expected_r[(0, 0)] = Scalar::from_int(-2);
        expected_r[(1, 1)] = Scalar::from_int(2);
        for blk in 0..3 {
            let o = 2 + 2 * blk;
            expected_r[(o, o)] = Scalar::one();
            expected_r[(o, o + 1)] = w.clone();
            expected_r[(o + 1, o)] = w.neg();
            expected_r[(o + 1, o + 1)] = Scalar::one().neg();
        }
        expected_r[(8, 8)] = Scalar::one();
        assert_eq!(gr, expected_r);
        // Its real part is the diagonal (−2, 2, 1, −1, 1, −1, 1, −1, 1), so
        // the signature (5, 4) can be read off; the exact inertia agrees.
        for i in 0..9 {
            for j in 0..9 {
                let re = gr[(i, j)].real_part();
                let expected_re = if i == j {
                    expected_r[(i, i)].real_part()
                } else {
                    qq(0, 1)
                };
                assert_eq!(re, expected_re, "real part at ({i},{j})");
            }
        }
        assert_eq!(signature(&g), (5, 4, 0));
        assert_eq!(
            g.map(Cq3::from_scalar).hermitian_inertia(),
            (5, 4, 0)
        );
    }

    #[test]
    fn scalar_product_is_the_unique_invariant_one() {
        // Invariance under H alone leaves a 5-parameter family: one metric
        // per indecomposable summand of M plus one complex cross-pairing
        // between the 3_eve and 3_odd summands (the shape G itself has).
        let m = m_rep_monomial();
        let h_space = invariant_metric_space(&m);
        assert_eq!(h_space.len(), 5);
        let g = invariant_form_on_m();
        let span: Vec<Vec<Scalar>> = h_space.iter().map(realified_flat).collect();
        assert!(express_in_span(&span, &realified_flat(&g)).is_some());
        // ...and adding adjointness for the multiplication operators,
        // (z, m·z′) = (m*·z, z′), pins the form down to a single scalar.
        let mut pairs: Vec<(Mat<Scalar>, Mat<Scalar>)> = vec![
            (m.xp.clone(), m.xp.scale(&sc(1, 1))),
            (m.xm.clone(), m.xm.scale(&sc(0, -1))),
            (m.k.clone(), m.k.clone()),
        ];
        for i in 0..qplane::DIM {
            let e = qplane::ALGEBRA.basis_elem(i);
            pairs.push((
                qplane::ALGEBRA.left_mul_matrix(&qplane::star(&e)),
                qplane::ALGEBRA.left_mul_matrix(&e),
            ));
        }
        let full = invariant_hermitian_space(qplane::DIM, &pairs);
        assert_eq!(full.len(), 1);
        let xy = qplane::idx(1, 1);
        let scale = full[0][(xy, xy)].clone();
        assert!(!scale.is_zero());
        assert_eq!(full[0].scale(&scale.inv()), g);
    }

    #[test]
    fn invariance_conditions_hold() {
        let g = invariant_form_on_m();
        let report = check_invariance_conditions(&g);
        report.assert_all();
        // h = K, z = w = xy: both sides of the counit-twisted condition are 1.
        let xy = qplane::ALGEBRA.basis_elem(qplane::idx(1, 1));
        let k_act = act_matrix_on_m(&env_h::k());
        let kxy = k_act.mul_vec(&xy);
        let sk_star = env_h::star_h(&env_h::HOPF.antipode_elem(&env_h::k()));
        let lhs = scalar_product_on_m(&act_matrix_on_m(&sk_star).mul_vec(&xy), &kxy);
        assert_eq!(lhs, Scalar::one());
        // h = X₊: the counit side vanishes for every basis pair.
        let xp = env_h::xp();
        assert!(env_h::HOPF.counit_elem(&xp).is_zero());
    }

    #[test]
    fn radical_has_the_expected_structure() {
        let rad = radical_of_envelope();
        assert_eq!(rad.len(), 13, "the radical of H is 13-dimensional");
        // The semisimple quotient splits as a 9-dim matrix block, a 4-dim
        // block (bodies of the Grassmann block minus its nilpotent part)...
        let mut block1 = Mat::zeros(9, env_h::DIM);
        let mut body2 = Mat::zeros(9, env_h::DIM);
        for j in 0..env_h::DIM {
            let s = &env_h::STRUCTURAL_BASIS[j];
            for r in 0..3 {
                for c in 0..3 {
                    block1[(3 * r + c, j)] = s.block1[(r, c)].clone();
                    body2[(3 * r + c, j)] = s.block2[(r, c)].coeffs[0].clone();
                }
            }
        }
        assert_eq!(block1.rank(), 9);
        assert_eq!(body2.rank(), 5);
        assert_eq!(block1.vstack(&body2).rank(), 14);
        // Radical dimensions of the catalogued modules.
        let expected: [(&str, usize); 7] = [
            ("1", 0),
            ("2_eve", 0),
            ("3_irr", 0),
            ("3_eve", 2),
            ("3_odd", 1),
            ("6_eve", 4),
            ("6_odd", 5),
        ];
        for (name, dim) in expected {
            assert_eq!(
                radical_of_module(&rep(name)).len(),
                dim,
                "radical of {name}"
            );
        }
        // Quotients of the principal indecomposables by their radicals are
        // the irreducibles of dimensions 3, 2 and 1.
        let q_irr = quotient_rep(&rep("3_irr"), &radical_of_module(&rep("3_irr")), "top");
        assert_eq!(fingerprint(&q_irr), fingerprint(&rep("3_irr")));
        let q_eve = quotient_rep(&rep("6_eve"), &radical_of_module(&rep("6_eve")), "top");
        assert_eq!(fingerprint(&q_eve), fingerprint(&rep("2_eve")));
        let q_odd = quotient_rep(&rep("6_odd"), &radical_of_module(&rep("6_odd")), "top");
        assert_eq!(fingerprint(&q_odd), fingerprint(&rep("1")));
    }

    #[test]
    fn submodule_families_reports_pass() {
        for r in catalogue() {
            submodule_families(&r).assert_all();
        }
        // The quantum plane contains the invariant line spanned by 1.
        let m = m_rep_monomial();
        let one = unit_vec(9, qplane::idx(0, 0));
        assert_eq!(cyclic_submodule(&m, &one).len(), 1);
    }

    #[test]
    fn tensor_products_decompose_per_the_table() {
        let expected: [(&str, &str, &[(&str, usize)]); 10] = [
            ("2_eve", "2_eve", &[("1", 1), ("3_irr", 1)]),
            ("2_eve", "3_irr", &[("6_eve", 1)]),
            ("3_irr", "3_irr", &[("3_irr", 1), ("6_odd", 1)]),
            ("6_eve", "2_eve", &[("3_irr", 2), ("6_odd", 1)]),
            ("6_odd", "2_eve", &[("3_irr", 2), ("6_eve", 1)]),
            ("6_eve", "3_irr", &[("3_irr", 2), ("6_eve", 2)]),
            ("6_odd", "3_irr", &[("3_irr", 2), ("6_eve", 2)]),
            ("6_eve", "6_eve", &[("3_irr", 4), ("6_eve", 2), ("6_odd", 2)]),
            ("6_eve", "6_odd", &[("3_irr", 4), ("6_eve", 2), ("6_odd", 2)]),
            ("6_odd", "6_odd", &[("3_irr", 4), ("6_eve", 2), ("6_odd", 2)]),
        ];
        for (l, r, want) in expected {
            let got = decompose_tensor(&rep(l), &rep(r)).unwrap();
            let want: Vec<(String, usize)> =
                want.iter().map(|(n, c)| (n.to_string(), *c)).collect();
            assert_eq!(got, want, "{l}⊗{r}");
        }
        // The full 16-row table: dimensions add up and the product is
        // symmetric in its factors.
        let table = tensor_table();
        assert_eq!(table.len(), 16);
        let cat = catalogue();
        let dim_of = |n: &str| cat.iter().find(|c| c.name == n).unwrap().dim;
        for row in &table {
            let total: usize = row
                .summands
                .iter()
                .map(|(n, c)| dim_of(n) * c)
                .sum();
            assert_eq!(
                total,
                dim_of(&row.left) * dim_of(&row.right),
                "{}⊗{} dimensions",
                row.left,
                row.right
            );
            let swapped = table
                .iter()
                .find(|r| r.left == row.right && r.right == row.left)
                .unwrap();
            assert_eq!(row.summands, swapped.summands);
        }
        // Inputs outside the catalogue are rejected.
        let t = rep("2_eve").tensor(&rep("2_eve"));
        assert!(decompose_tensor(&t, &rep("2_eve")).is_err());
    }
}

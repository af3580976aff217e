//! Finite-dimensional algebras, Hopf algebras, their modules and comodules,
//! all given by exact structure constants over ℚ(q).
//!
//! Every axiom checker here is *exhaustive over basis elements* — by
//! multilinearity that proves the axiom on the whole space — and reports a
//! witness (the basis indices and the two mismatching sides) on failure.

use crate::linalg::Mat;
use crate::report::Report;
use crate::scalar::Scalar;

/// Sparse vector: list of `(basis index, coefficient)` with nonzero
/// coefficients and strictly increasing indices.
pub type SparseVec = Vec<(usize, Scalar)>;

/// Dense element of a finite-dimensional algebra: coefficient per basis
/// element.
pub type Elem = Vec<Scalar>;

pub fn elem_zero(dim: usize) -> Elem {
    vec![Scalar::zero(); dim]
}

pub fn elem_is_zero(u: &[Scalar]) -> bool {
    u.iter().all(|c| c.is_zero())
}

pub fn elem_add(u: &[Scalar], v: &[Scalar]) -> Elem {
    u.iter().zip(v).map(|(a, b)| a + b).collect()
}

pub fn elem_sub(u: &[Scalar], v: &[Scalar]) -> Elem {
    u.iter().zip(v).map(|(a, b)| a - b).collect()
}

pub fn elem_scale(u: &[Scalar], c: &Scalar) -> Elem {
    u.iter().map(|a| a * c).collect()
}

pub fn elem_neg(u: &[Scalar]) -> Elem {
    u.iter().map(|a| -a).collect()
}

/// `dst += c · sv`.
pub fn add_assign_sparse(dst: &mut [Scalar], sv: &[(usize, Scalar)], c: &Scalar) {
    for (k, coeff) in sv {
        dst[*k] += &(coeff * c);
    }
}

pub fn sparsify(u: &[Scalar]) -> SparseVec {
    u.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

// ---------------------------------------------------------------------------
// Finite-dimensional associative algebra
// ---------------------------------------------------------------------------

/// Associative unital algebra over ℚ(q) given by structure constants on a
/// fixed monomial basis.
pub struct FiniteAlgebra {
    pub name: String,
    pub dim: usize,
    /// Printable names of the basis monomials (index order).
    pub basis_names: Vec<String>,
    /// Basis index of the unit element.
    pub unit_index: usize,
    /// Flattened `dim×dim` table: `mult[i·dim + j]` is `e_i · e_j`.
    mult: Vec<SparseVec>,
}

impl FiniteAlgebra {
    pub fn from_products(
        name: &str,
        basis_names: Vec<String>,
        unit_index: usize,
        mut product: impl FnMut(usize, usize) -> SparseVec,
    ) -> Self {
        let dim = basis_names.len();
        let mut mult = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let sv = product(i, j);
                debug_assert!(sv.iter().all(|(k, c)| *k < dim && !c.is_zero()));
                mult.push(sv);
            }
        }
        FiniteAlgebra {
            name: name.to_string(),
            dim,
            basis_names,
            unit_index,
            mult,
        }
    }

    pub fn product_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.mult[i * self.dim + j]
    }

    pub fn basis_elem(&self, i: usize) -> Elem {
        let mut u = elem_zero(self.dim);
        u[i] = Scalar::one();
        u
    }

    pub fn unit(&self) -> Elem {
        self.basis_elem(self.unit_index)
    }

    pub fn scalar_elem(&self, c: &Scalar) -> Elem {
        let mut u = elem_zero(self.dim);
        u[self.unit_index] = c.clone();
        u
    }

    pub fn mul(&self, u: &[Scalar], v: &[Scalar]) -> Elem {
        let mut out = elem_zero(self.dim);
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                add_assign_sparse(&mut out, self.product_basis(i, j), &(a * b));
            }
        }
        out
    }

    pub fn mul_many(&self, factors: &[&[Scalar]]) -> Elem {
        let mut acc = self.unit();
        for f in factors {
            acc = self.mul(&acc, f);
        }
        acc
    }

    pub fn pow(&self, u: &[Scalar], k: usize) -> Elem {
        let mut acc = self.unit();
        for _ in 0..k {
            acc = self.mul(&acc, u);
        }
        acc
    }

    pub fn commutator(&self, u: &[Scalar], v: &[Scalar]) -> Elem {
        elem_sub(&self.mul(u, v), &self.mul(v, u))
    }

    /// Left-multiplication matrix of `u` (columns are `u·e_j`).
    pub fn left_mul_matrix(&self, u: &[Scalar]) -> Mat<Scalar> {
        let mut m = Mat::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            let col = self.mul(u, &self.basis_elem(j));
            for (i, c) in col.into_iter().enumerate() {
                m[(i, j)] = c;
            }
        }
        m
    }

    /// Render an element canonically: terms in basis order, `+`/`-` joins,
    /// composite scalar coefficients parenthesised. The result re-parses to
    /// the same element through the expression grammar.
    pub fn format_element(&self, u: &[Scalar]) -> String {
        let mut out = String::new();
        for (i, c) in u.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let name = &self.basis_names[i];
            let (neg, mag) = scalar_term_string(c);
            let body = if name == "1" {
                mag
            } else if mag == "1" {
                name.clone()
            } else {
                format!("{mag}*{name}")
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
                out.push_str(&body);
            } else {
                out.push_str(if neg { " - " } else { " + " });
                out.push_str(&body);
            }
        }
        if out.is_empty() {
            "0".into()
        } else {
            out
        }
    }

    /// Exhaustive associativity and two-sided unit check.
    pub fn check_associativity(&self) -> Report {
        let mut rep = Report::new();
        let mut assoc_fail: Option<(usize, usize, usize)> = None;
        'outer: for i in 0..self.dim {
            for j in 0..self.dim {
                let ij = self.product_basis(i, j).clone();
                for k in 0..self.dim {
                    let mut lhs = elem_zero(self.dim);
                    for (p, c) in &ij {
                        add_assign_sparse(&mut lhs, self.product_basis(*p, k), c);
                    }
                    let mut rhs = elem_zero(self.dim);
                    for (p, c) in self.product_basis(j, k) {
                        add_assign_sparse(&mut rhs, self.product_basis(i, *p), c);
                    }
                    if lhs != rhs {
                        assoc_fail = Some((i, j, k));
                        break 'outer;
                    }
                }
            }
        }
        rep.check(
            &format!("{}: associativity on all basis triples", self.name),
            assoc_fail.is_none(),
            || {
                let (i, j, k) = assoc_fail.unwrap();
                format!(
                    "(e_i·e_j)·e_k ≠ e_i·(e_j·e_k) at ({}, {}, {})",
                    self.basis_names[i], self.basis_names[j], self.basis_names[k]
                )
            },
        );
        let one = self.unit();
        let unit_ok = (0..self.dim).all(|i| {
            let e = self.basis_elem(i);
            self.mul(&one, &e) == e && self.mul(&e, &one) == e
        });
        rep.check(
            &format!("{}: two-sided unit", self.name),
            unit_ok,
            || "unit axiom fails on a basis element".into(),
        );
        rep
    }
}

fn scalar_term_string(c: &Scalar) -> (bool, String) {
    if c.is_composite() {
        (false, format!("({c})"))
    } else {
        let s = c.to_string();
        match s.strip_prefix('-') {
            Some(rest) => (true, rest.to_string()),
            None => (false, s),
        }
    }
}

// ---------------------------------------------------------------------------
// Tensor products
// ---------------------------------------------------------------------------

/// Index of `e_i ⊗ e_j` in the tensor basis (left factor major).
pub fn tensor_index(i: usize, dim2: usize, j: usize) -> usize {
    i * dim2 + j
}

/// Product in `A ⊗ B` (componentwise, no braiding):
/// `(a⊗b)(a′⊗b′) = aa′ ⊗ bb′`.
pub fn tensor_mul2(a: &FiniteAlgebra, b: &FiniteAlgebra, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
    let (da, db) = (a.dim, b.dim);
    assert_eq!(u.len(), da * db);
    assert_eq!(v.len(), da * db);
    let us = sparsify(u);
    let vs = sparsify(v);
    let mut out = vec![Scalar::zero(); da * db];
    for (iu, cu) in &us {
        let (ia, ib) = (iu / db, iu % db);
        for (iv, cv) in &vs {
            let (ja, jb) = (iv / db, iv % db);
            let c = cu * cv;
            for (ka, ca) in a.product_basis(ia, ja) {
                let cca = &c * ca;
                for (kb, cb) in b.product_basis(ib, jb) {
                    out[ka * db + kb] += &(&cca * cb);
                }
            }
        }
    }
    out
}

/// Product in `A ⊗ B ⊗ C`.
pub fn tensor_mul3(
    a: &FiniteAlgebra,
    b: &FiniteAlgebra,
    c: &FiniteAlgebra,
    u: &[Scalar],
    v: &[Scalar],
) -> Vec<Scalar> {
    let (da, db, dc) = (a.dim, b.dim, c.dim);
    assert_eq!(u.len(), da * db * dc);
    assert_eq!(v.len(), da * db * dc);
    let us = sparsify(u);
    let vs = sparsify(v);
    let mut out = vec![Scalar::zero(); da * db * dc];
    for (iu, cu) in &us {
        let (ia, rest) = (iu / (db * dc), iu % (db * dc));
        let (ib, ic) = (rest / dc, rest % dc);
        for (iv, cv) in &vs {
            let (ja, jrest) = (iv / (db * dc), iv % (db * dc));
            let (jb, jc) = (jrest / dc, jrest % dc);
            let cuv = cu * cv;
            for (ka, ca) in a.product_basis(ia, ja) {
                let c1 = &cuv * ca;
                for (kb, cb) in b.product_basis(ib, jb) {
                    let c2 = &c1 * cb;
                    for (kc, cc) in c.product_basis(ic, jc) {
                        out[(ka * db + kb) * dc + kc] += &(&c2 * cc);
                    }
                }
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Hopf algebra
// ---------------------------------------------------------------------------

/// Hopf ∗-algebra structure on a [`FiniteAlgebra`].
pub struct HopfAlgebra {
    pub alg: FiniteAlgebra,
    /// `Δ(e_i) = Σ c · e_j ⊗ e_k`, stored per basis element as `(j, k, c)`.
    pub comult: Vec<Vec<(usize, usize, Scalar)>>,
    /// `ε(e_i)`.
    pub counit: Vec<Scalar>,
    /// Antipode matrix: `S(e_i) = Σ_j antipode[(j, i)] e_j`.
    pub antipode: Mat<Scalar>,
    /// Star matrix if the Hopf algebra carries a ∗-structure:
    /// `(e_i)^* = Σ_j star[(j, i)] e_j`, extended antilinearly.
    pub star: Option<Mat<Scalar>>,
}

impl HopfAlgebra {
    pub fn dim(&self) -> usize {
        self.alg.dim
    }

    /// `Δ(u)` as a dense vector of length `dim²`.
    pub fn comult_elem(&self, u: &[Scalar]) -> Vec<Scalar> {
        let d = self.dim();
        let mut out = vec![Scalar::zero(); d * d];
        for (i, c) in u.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, k, w) in &self.comult[i] {
                out[j * d + k] += &(w * c);
            }
        }
        out
    }

    pub fn counit_elem(&self, u: &[Scalar]) -> Scalar {
        let mut out = Scalar::zero();
        for (i, c) in u.iter().enumerate() {
            if !c.is_zero() {
                out += &(&self.counit[i] * c);
            }
        }
        out
    }

    pub fn antipode_elem(&self, u: &[Scalar]) -> Elem {
        self.antipode.mul_vec(u)
    }

    /// Antilinear star: coefficients are conjugated, basis elements mapped
    /// through the star matrix.
    pub fn star_elem(&self, u: &[Scalar]) -> Elem {
        let star = self.star.as_ref().expect("algebra has no star structure");
        let conj: Vec<Scalar> = u.iter().map(|c| c.conj()).collect();
        star.mul_vec(&conj)
    }

    /// Exhaustive bialgebra checks: Δ and ε are algebra maps, Δ is
    /// coassociative, ε is a two-sided counit.
    pub fn check_bialgebra(&self) -> Report {
        let mut rep = Report::new();
        let d = self.dim();
        let name = &self.alg.name;

        let mut hom_fail = None;
        'hom: for i in 0..d {
            let di = self.comult_elem(&self.alg.basis_elem(i));
            for j in 0..d {
                let dj = self.comult_elem(&self.alg.basis_elem(j));
                let rhs = tensor_mul2(&self.alg, &self.alg, &di, &dj);
                let mut prod = elem_zero(d);
                add_assign_sparse(&mut prod, self.alg.product_basis(i, j), &Scalar::one());
                let lhs = self.comult_elem(&prod);
                if lhs != rhs {
                    hom_fail = Some((i, j));
                    break 'hom;
                }
            }
        }
        rep.check(
            &format!("{name}: Δ is an algebra homomorphism"),
            hom_fail.is_none(),
            || {
                let (i, j) = hom_fail.unwrap();
                format!(
                    "Δ(e_i·e_j) ≠ Δ(e_i)Δ(e_j) at ({}, {})",
                    self.alg.basis_names[i], self.alg.basis_names[j]
                )
            },
        );

        let counit_hom = (0..d).all(|i| {
            (0..d).all(|j| {
                let mut prod = elem_zero(d);
                add_assign_sparse(&mut prod, self.alg.product_basis(i, j), &Scalar::one());
                self.counit_elem(&prod) == &self.counit[i] * &self.counit[j]
            })
        }) && self.counit_elem(&self.alg.unit()).is_one();
        rep.check(
            &format!("{name}: ε is an algebra homomorphism"),
            counit_hom,
            || "ε(uv) ≠ ε(u)ε(v) or ε(1) ≠ 1".into(),
        );

        let unit_group_like = {
            let du = self.comult_elem(&self.alg.unit());
            let mut expected = vec![Scalar::zero(); d * d];
            expected[self.alg.unit_index * d + self.alg.unit_index] = Scalar::one();
            du == expected
        };
        rep.check(&format!("{name}: Δ(1) = 1⊗1"), unit_group_like, || {
            "unit is not group-like".into()
        });

        let mut coassoc_fail = None;
        for i in 0..d {
            // Both sides in the dense dim³ tensor basis.
            let mut lhs = vec![Scalar::zero(); d * d * d];
            let mut rhs = vec![Scalar::zero(); d * d * d];
            for (j, k, c) in &self.comult[i] {
                for (p, r, w) in &self.comult[*j] {
                    lhs[(p * d + r) * d + k] += &(c * w);
                }
                for (p, r, w) in &self.comult[*k] {
                    rhs[(j * d + p) * d + r] += &(c * w);
                }
            }
            if lhs != rhs {
                coassoc_fail = Some(i);
                break;
            }
        }
        rep.check(
            &format!("{name}: coassociativity"),
            coassoc_fail.is_none(),
            || {
                format!(
                    "(Δ⊗id)Δ ≠ (id⊗Δ)Δ at {}",
                    self.alg.basis_names[coassoc_fail.unwrap()]
                )
            },
        );

        let mut counit_fail = None;
        for i in 0..d {
            let mut left = elem_zero(d);
            let mut right = elem_zero(d);
            for (j, k, c) in &self.comult[i] {
                left[*k] += &(c * &self.counit[*j]);
                right[*j] += &(c * &self.counit[*k]);
            }
            let e = self.alg.basis_elem(i);
            if left != e || right != e {
                counit_fail = Some(i);
                break;
            }
        }
        rep.check(
            &format!("{name}: counit axiom"),
            counit_fail.is_none(),
            || {
                format!(
                    "(ε⊗id)Δ or (id⊗ε)Δ ≠ id at {}",
                    self.alg.basis_names[counit_fail.unwrap()]
                )
            },
        );
        rep
    }

    /// Antipode axiom `m(S⊗id)Δ = η∘ε = m(id⊗S)Δ` on every basis element,
    /// plus anti-homomorphism property `S(uv) = S(v)S(u)`.
    pub fn check_antipode(&self) -> Report {
        let mut rep = Report::new();
        let d = self.dim();
        let name = &self.alg.name;
        let mut fail = None;
        for i in 0..d {
            let mut left = elem_zero(d);
            let mut right = elem_zero(d);
            for (j, k, c) in &self.comult[i] {
                let sj = self.antipode_elem(&self.alg.basis_elem(*j));
                let sk = self.antipode_elem(&self.alg.basis_elem(*k));
                left = elem_add(&left, &elem_scale(&self.alg.mul(&sj, &self.alg.basis_elem(*k)), c));
                right = elem_add(&right, &elem_scale(&self.alg.mul(&self.alg.basis_elem(*j), &sk), c));
            }
            let target = self.alg.scalar_elem(&self.counit[i]);
            if left != target || right != target {
                fail = Some(i);
                break;
            }
        }
        rep.check(&format!("{name}: antipode axiom"), fail.is_none(), || {
            format!(
                "m(S⊗id)Δ or m(id⊗S)Δ ≠ ε·1 at {}",
                self.alg.basis_names[fail.unwrap()]
            )
        });

        let mut anti_fail = None;
        'anti: for i in 0..d {
            for j in 0..d {
                let mut prod = elem_zero(d);
                add_assign_sparse(&mut prod, self.alg.product_basis(i, j), &Scalar::one());
                let lhs = self.antipode_elem(&prod);
                let rhs = self.alg.mul(
                    &self.antipode_elem(&self.alg.basis_elem(j)),
                    &self.antipode_elem(&self.alg.basis_elem(i)),
                );
                if lhs != rhs {
                    anti_fail = Some((i, j));
                    break 'anti;
                }
            }
        }
        rep.check(
            &format!("{name}: antipode is an anti-homomorphism"),
            anti_fail.is_none(),
            || {
                let (i, j) = anti_fail.unwrap();
                format!(
                    "S(uv) ≠ S(v)S(u) at ({}, {})",
                    self.alg.basis_names[i], self.alg.basis_names[j]
                )
            },
        );
        rep
    }

    /// ∗-structure checks: antilinear involution, anti-homomorphism of the
    /// product, coproduct compatibility `Δ(u*) = (∗⊗∗)Δ(u)`, counit
    /// compatibility `ε(u*) = conj(ε(u))`, and `(S∘∗)² = id`.
    pub fn check_star(&self) -> Report {
        let mut rep = Report::new();
        let d = self.dim();
        let name = &self.alg.name;
        if self.star.is_none() {
            rep.fail(&format!("{name}: star structure"), "no star defined".into());
            return rep;
        }

        let involutive = (0..d).all(|i| {
            let e = self.alg.basis_elem(i);
            self.star_elem(&self.star_elem(&e)) == e
        });
        rep.check(&format!("{name}: ∗ is involutive"), involutive, || {
            "(u*)* ≠ u on a basis element".into()
        });

        let mut anti_fail = None;
        'anti: for i in 0..d {
            let si = self.star_elem(&self.alg.basis_elem(i));
            for j in 0..d {
                let sj = self.star_elem(&self.alg.basis_elem(j));
                let mut prod = elem_zero(d);
                add_assign_sparse(&mut prod, self.alg.product_basis(i, j), &Scalar::one());
                if self.star_elem(&prod) != self.alg.mul(&sj, &si) {
                    anti_fail = Some((i, j));
                    break 'anti;
                }
            }
        }
        rep.check(
            &format!("{name}: (uv)* = v*u*"),
            anti_fail.is_none(),
            || {
                let (i, j) = anti_fail.unwrap();
                format!(
                    "star anti-multiplicativity fails at ({}, {})",
                    self.alg.basis_names[i], self.alg.basis_names[j]
                )
            },
        );

        let mut co_fail = None;
        for i in 0..d {
            let lhs = self.comult_elem(&self.star_elem(&self.alg.basis_elem(i)));
            // (∗⊗∗)Δ(e_i): conjugate coefficients, star both legs.
            let mut rhs = vec![Scalar::zero(); d * d];
            for (j, k, c) in &self.comult[i] {
                let sj = self.star_elem(&self.alg.basis_elem(*j));
                let sk = self.star_elem(&self.alg.basis_elem(*k));
                let cc = c.conj();
                for (a, ca) in sj.iter().enumerate() {
                    if ca.is_zero() {
                        continue;
                    }
                    for (b, cb) in sk.iter().enumerate() {
                        if !cb.is_zero() {
                            rhs[a * d + b] += &(&(&cc * ca) * cb);
                        }
                    }
                }
            }
            if lhs != rhs {
                co_fail = Some(i);
                break;
            }
        }
        rep.check(
            &format!("{name}: Δ(u*) = (∗⊗∗)Δ(u)"),
            co_fail.is_none(),
            || format!("fails at {}", self.alg.basis_names[co_fail.unwrap()]),
        );

        let counit_ok = (0..d).all(|i| {
            self.counit_elem(&self.star_elem(&self.alg.basis_elem(i))) == self.counit[i].conj()
        });
        rep.check(&format!("{name}: ε(u*) = conj ε(u)"), counit_ok, || {
            "counit/star compatibility fails".into()
        });

        let s_star = (0..d).all(|i| {
            let e = self.alg.basis_elem(i);
            let once = self.star_elem(&self.antipode_elem(&self.star_elem(&e)));
            self.antipode_elem(&once) == e
        });
        rep.check(&format!("{name}: (∗∘S)² = id"), s_star, || {
            "antipode/star compatibility fails".into()
        });
        rep
    }

    /// All Hopf ∗-algebra axioms at once.
    pub fn check_all(&self) -> Report {
        let mut rep = self.alg.check_associativity();
        rep.absorb("bialgebra", self.check_bialgebra());
        rep.absorb("antipode", self.check_antipode());
        if self.star.is_some() {
            rep.absorb("star", self.check_star());
        }
        rep
    }
}

// ---------------------------------------------------------------------------
// Modules and comodules
// ---------------------------------------------------------------------------

/// Evaluate a module action of an algebra element: `Σ h_i · acts[i]` applied
/// to `z`.
pub fn act_elem(acts: &[Mat<Scalar>], h: &[Scalar], z: &[Scalar]) -> Elem {
    let dim = z.len();
    let mut out = elem_zero(dim);
    for (i, c) in h.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let img = acts[i].mul_vec(z);
        for (k, v) in img.into_iter().enumerate() {
            out[k] += &(&v * c);
        }
    }
    out
}

/// Exhaustively check that `acts` makes the algebra `a` a *left* module
/// algebra over the Hopf algebra `h`:
/// representation property `(gh)▷z = g▷(h▷z)`, unit action, twisted
/// Leibniz `h▷(uv) = Σ (h₁▷u)(h₂▷v)` and `h▷1 = ε(h)·1`.
pub fn check_left_module_algebra(
    h: &HopfAlgebra,
    acts: &[Mat<Scalar>],
    a: &FiniteAlgebra,
    label: &str,
) -> Report {
    check_module_algebra(h, acts, a, label, true)
}

/// Right-module-algebra version: `z◁(gh) = (z◁g)◁h` and
/// `(uv)◁h = Σ (u◁h₁)(v◁h₂)`.
pub fn check_right_module_algebra(
    h: &HopfAlgebra,
    acts: &[Mat<Scalar>],
    a: &FiniteAlgebra,
    label: &str,
) -> Report {
    check_module_algebra(h, acts, a, label, false)
}

fn check_module_algebra(
    h: &HopfAlgebra,
    acts: &[Mat<Scalar>],
    a: &FiniteAlgebra,
    label: &str,
    left: bool,
) -> Report {
    let mut rep = Report::new();
    let dh = h.dim();
    assert_eq!(acts.len(), dh);

    let unit_ok = acts[h.alg.unit_index] == Mat::identity(a.dim);
    rep.check(&format!("{label}: 1 acts as identity"), unit_ok, || {
        "action of the unit is not the identity matrix".into()
    });

    let mut rep_fail = None;
    'rep: for g in 0..dh {
        for k in 0..dh {
            // Matrix of the product g·k, from the structure constants.
            let mut m = Mat::zeros(a.dim, a.dim);
            for (p, c) in h.alg.product_basis(g, k) {
                m = m.add(&acts[*p].scale(c));
            }
            let composed = if left {
                acts[g].mul(&acts[k])
            } else {
                acts[k].mul(&acts[g])
            };
            if m != composed {
                rep_fail = Some((g, k));
                break 'rep;
            }
        }
    }
    rep.check(
        &format!("{label}: action respects the product of {}", h.alg.name),
        rep_fail.is_none(),
        || {
            let (g, k) = rep_fail.unwrap();
            format!(
                "matrices disagree at ({}, {})",
                h.alg.basis_names[g], h.alg.basis_names[k]
            )
        },
    );

    let mut leib_fail = None;
    'leib: for hi in 0..dh {
        for u in 0..a.dim {
            for v in 0..a.dim {
                let mut uv = elem_zero(a.dim);
                add_assign_sparse(&mut uv, a.product_basis(u, v), &Scalar::one());
                let lhs = acts[hi].mul_vec(&uv);
                // For both chiralities the first coproduct leg acts on the
                // first factor: h▷(uv) = Σ(h₁▷u)(h₂▷v) and
                // (uv)◁h = Σ(u◁h₁)(v◁h₂).
                let mut rhs = elem_zero(a.dim);
                for (h1, h2, c) in &h.comult[hi] {
                    let au = acts[*h1].col(u);
                    let av = acts[*h2].col(v);
                    rhs = elem_add(&rhs, &elem_scale(&a.mul(&au, &av), c));
                }
                if lhs != rhs {
                    leib_fail = Some((hi, u, v));
                    break 'leib;
                }
            }
        }
    }
    rep.check(
        &format!("{label}: twisted Leibniz rule via Δ"),
        leib_fail.is_none(),
        || {
            let (hi, u, v) = leib_fail.unwrap();
            format!(
                "h▷(uv) ≠ Σ(h₁▷u)(h₂▷v) at h={}, u={}, v={}",
                h.alg.basis_names[hi], a.basis_names[u], a.basis_names[v]
            )
        },
    );

    let unit_counit = (0..dh).all(|hi| {
        acts[hi].mul_vec(&a.unit()) == a.scalar_elem(&h.counit[hi])
    });
    rep.check(
        &format!("{label}: h acts on 1 by ε(h)"),
        unit_counit,
        || "h▷1 ≠ ε(h)·1 for some basis h".into(),
    );
    rep
}

/// Which tensor factor of the coaction carries the Hopf algebra.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CoactionSide {
    /// `δ: M → F ⊗ M`.
    Left,
    /// `δ: M → M ⊗ F`.
    Right,
}

/// A coaction of a Hopf algebra `F` on an algebra `M`, stored uniformly:
/// entry `(f, m, c)` of `table[i]` contributes `c·(e_f ⊗ e_m)` (left) or
/// `c·(e_m ⊗ e_f)` (right) to the coaction of the i-th basis element.
pub struct Coaction {
    pub side: CoactionSide,
    pub table: Vec<Vec<(usize, usize, Scalar)>>,
}

impl Coaction {
    /// Apply the coaction to an element; result indexed `f·dimM + m`
    /// (uniform storage, regardless of side).
    pub fn apply(&self, u: &[Scalar], dim_f: usize, dim_m: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); dim_f * dim_m];
        for (i, c) in u.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (f, m, w) in &self.table[i] {
                out[f * dim_m + m] += &(w * c);
            }
        }
        out
    }
}

/// Exhaustively check that `co` is a comodule-algebra structure on `a` over
/// the Hopf algebra `f`: counit property, coassociativity (on the correct
/// side), multiplicativity `δ(uv) = δ(u)δ(v)` and `δ(1) = 1⊗1`.
pub fn check_comodule_algebra(
    f: &HopfAlgebra,
    co: &Coaction,
    a: &FiniteAlgebra,
    label: &str,
) -> Report {
    let mut rep = Report::new();
    let df = f.dim();
    let dm = a.dim;
    assert_eq!(co.table.len(), dm);

    let counit_ok = (0..dm).all(|i| {
        let mut img = elem_zero(dm);
        for (fi, m, c) in &co.table[i] {
            img[*m] += &(c * &f.counit[*fi]);
        }
        img == a.basis_elem(i)
    });
    rep.check(&format!("{label}: (ε⊗id)δ = id"), counit_ok, || {
        "counit property fails".into()
    });

    let mut coassoc_fail = None;
    for i in 0..dm {
        // Compare in a dense (fA, fB, m)-indexed vector, where the slot
        // meaning depends on the side; both sides land in the same space.
        let mut lhs = vec![Scalar::zero(); df * df * dm];
        let mut rhs = vec![Scalar::zero(); df * df * dm];
        match co.side {
            CoactionSide::Left => {
                // (Δ⊗id)δ = (id⊗δ)δ in F⊗F⊗M; index (f1, f2, m).
                for (fi, m, c) in &co.table[i] {
                    for (f1, f2, w) in &f.comult[*fi] {
                        lhs[(f1 * df + f2) * dm + m] += &(c * w);
                    }
                    for (f2, m2, w) in &co.table[*m] {
                        rhs[(fi * df + f2) * dm + m2] += &(c * w);
                    }
                }
            }
            CoactionSide::Right => {
                // (δ⊗id)δ = (id⊗Δ)δ in M⊗F⊗F; index (f_inner, f_outer, m):
                // for m⊗f1⊗f2 we store slot (f1, f2, m).
                for (fi, m, c) in &co.table[i] {
                    for (f1, f2, w) in &f.comult[*fi] {
                        rhs[(f1 * df + f2) * dm + m] += &(c * w);
                    }
                    for (f_in, m2, w) in &co.table[*m] {
                        lhs[(f_in * df + fi) * dm + m2] += &(c * w);
                    }
                }
            }
        }
        if lhs != rhs {
            coassoc_fail = Some(i);
            break;
        }
    }
    rep.check(
        &format!("{label}: coassociativity"),
        coassoc_fail.is_none(),
        || format!("fails at {}", a.basis_names[coassoc_fail.unwrap()]),
    );

    let mut mult_fail = None;
    'mult: for i in 0..dm {
        let di = co.apply(&a.basis_elem(i), df, dm);
        for j in 0..dm {
            let dj = co.apply(&a.basis_elem(j), df, dm);
            let rhs = tensor_mul2(&f.alg, a, &di, &dj);
            let mut prod = elem_zero(dm);
            add_assign_sparse(&mut prod, a.product_basis(i, j), &Scalar::one());
            let lhs = co.apply(&prod, df, dm);
            if lhs != rhs {
                mult_fail = Some((i, j));
                break 'mult;
            }
        }
    }
    rep.check(
        &format!("{label}: δ(uv) = δ(u)δ(v)"),
        mult_fail.is_none(),
        || {
            let (i, j) = mult_fail.unwrap();
            format!(
                "multiplicativity fails at ({}, {})",
                a.basis_names[i], a.basis_names[j]
            )
        },
    );

    let unit_ok = {
        let du = co.apply(&a.unit(), df, dm);
        let mut expected = vec![Scalar::zero(); df * dm];
        expected[f.alg.unit_index * dm + a.unit_index] = Scalar::one();
        du == expected
    };
    rep.check(&format!("{label}: δ(1) = 1⊗1"), unit_ok, || {
        "unit is not coinvariant".into()
    });
    rep
}

/// Turn a coaction into the matrices of the dually-paired action:
/// a *right* coaction `z ↦ Σ z₍₀₎⊗z₍₁₎` yields the *left* action
/// `h▷z = Σ z₍₀₎·⟨h, z₍₁₎⟩`, and a *left* coaction `z ↦ Σ z₍₋₁₎⊗z₍₀₎`
/// yields the *right* action `z◁h = Σ ⟨h, z₍₋₁₎⟩·z₍₀₎`.
/// `pairing[(h_idx, f_idx)] = ⟨e_h, e_f⟩`. Thanks to the uniform coaction
/// storage both cases are the same contraction.
pub fn action_from_coaction(
    pairing: &Mat<Scalar>,
    co: &Coaction,
    module_dim: usize,
) -> Vec<Mat<Scalar>> {
    let dh = pairing.rows;
    (0..dh)
        .map(|h| {
            let mut m: Mat<Scalar> = Mat::zeros(module_dim, module_dim);
            for (src, entries) in co.table.iter().enumerate() {
                for (f, dst, c) in entries {
                    let p = &pairing[(h, *f)];
                    if !p.is_zero() {
                        let t = &m[(*dst, src)] + &(c * p);
                        m[(*dst, src)] = t;
                    }
                }
            }
            m
        })
        .collect()
}

/// Exhaustive Hopf-pairing checks between `h` and `f`:
/// `⟨gk, u⟩ = Σ ⟨g,u₁⟩⟨k,u₂⟩`, `⟨g, uv⟩ = Σ ⟨g₁,u⟩⟨g₂,v⟩`,
/// `⟨1,u⟩ = ε(u)`, `⟨g,1⟩ = ε(g)`, `⟨S g, u⟩ = ⟨g, S u⟩`,
/// plus non-degeneracy (the pairing matrix is invertible).
pub fn check_hopf_pairing(h: &HopfAlgebra, f: &HopfAlgebra, pairing: &Mat<Scalar>) -> Report {
    let mut rep = Report::new();
    let (dh, df) = (h.dim(), f.dim());
    assert_eq!((pairing.rows, pairing.cols), (dh, df));
    let label = format!("⟨{},{}⟩", h.alg.name, f.alg.name);

    let mut prod_fail = None;
    'prod: for g in 0..dh {
        for k in 0..dh {
            let gk = h.alg.product_basis(g, k);
            for u in 0..df {
                let mut lhs = Scalar::zero();
                for (p, c) in gk {
                    lhs += &(c * &pairing[(*p, u)]);
                }
                let mut rhs = Scalar::zero();
                for (u1, u2, c) in &f.comult[u] {
                    rhs += &(&(c * &pairing[(g, *u1)]) * &pairing[(k, *u2)]);
                }
                if lhs != rhs {
                    prod_fail = Some((g, k, u));
                    break 'prod;
                }
            }
        }
    }
    rep.check(
        &format!("{label}: ⟨gk, u⟩ = Σ⟨g,u₁⟩⟨k,u₂⟩"),
        prod_fail.is_none(),
        || {
            let (g, k, u) = prod_fail.unwrap();
            format!(
                "fails at g={}, k={}, u={}",
                h.alg.basis_names[g], h.alg.basis_names[k], f.alg.basis_names[u]
            )
        },
    );

    let mut coprod_fail = None;
    'coprod: for g in 0..dh {
        let dg = &h.comult[g];
        for u in 0..df {
            for v in 0..df {
                let mut lhs = Scalar::zero();
                for (p, c) in f.alg.product_basis(u, v) {
                    lhs += &(c * &pairing[(g, *p)]);
                }
                let mut rhs = Scalar::zero();
                for (g1, g2, c) in dg {
                    rhs += &(&(c * &pairing[(*g1, u)]) * &pairing[(*g2, v)]);
                }
                if lhs != rhs {
                    coprod_fail = Some((g, u, v));
                    break 'coprod;
                }
            }
        }
    }
    rep.check(
        &format!("{label}: ⟨g, uv⟩ = Σ⟨g₁,u⟩⟨g₂,v⟩"),
        coprod_fail.is_none(),
        || {
            let (g, u, v) = coprod_fail.unwrap();
            format!(
                "fails at g={}, u={}, v={}",
                h.alg.basis_names[g], f.alg.basis_names[u], f.alg.basis_names[v]
            )
        },
    );

    let units_ok = (0..df).all(|u| pairing[(h.alg.unit_index, u)] == f.counit[u])
        && (0..dh).all(|g| pairing[(g, f.alg.unit_index)] == h.counit[g]);
    rep.check(
        &format!("{label}: ⟨1,u⟩ = ε(u) and ⟨g,1⟩ = ε(g)"),
        units_ok,
        || "unit/counit compatibility fails".into(),
    );

    let antipode_ok = (0..dh).all(|g| {
        let sg = h.antipode_elem(&h.alg.basis_elem(g));
        (0..df).all(|u| {
            let su = f.antipode_elem(&f.alg.basis_elem(u));
            let mut lhs = Scalar::zero();
            for (p, c) in sg.iter().enumerate() {
                if !c.is_zero() {
                    lhs += &(c * &pairing[(p, u)]);
                }
            }
            let mut rhs = Scalar::zero();
            for (p, c) in su.iter().enumerate() {
                if !c.is_zero() {
                    rhs += &(c * &pairing[(g, p)]);
                }
            }
            lhs == rhs
        })
    });
    rep.check(
        &format!("{label}: ⟨S g, u⟩ = ⟨g, S u⟩"),
        antipode_ok,
        || "antipode compatibility fails".into(),
    );

    rep.check(
        &format!("{label}: non-degenerate (matrix rank {dh})"),
        pairing.rank() == dh && dh == df,
        || format!("pairing matrix rank {} of {dh}", pairing.rank()),
    );
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Group algebra of ℤ/3 as a toy Hopf ∗-algebra: basis 1, g, g²;
    /// Δ(gⁱ) = gⁱ⊗gⁱ, ε = 1, S(gⁱ) = g⁻ⁱ, (gⁱ)* = g⁻ⁱ.
    fn z3_group_algebra() -> HopfAlgebra {
        let alg = FiniteAlgebra::from_products(
            "Z3",
            vec!["1".into(), "g".into(), "g^2".into()],
            0,
            |i, j| vec![((i + j) % 3, Scalar::one())],
        );
        let comult = (0..3).map(|i| vec![(i, i, Scalar::one())]).collect();
        let counit = vec![Scalar::one(); 3];
        let mut antipode = Mat::zeros(3, 3);
        for i in 0..3 {
            antipode[((3 - i) % 3, i)] = Scalar::one();
        }
        let star = antipode.clone();
        HopfAlgebra {
            alg,
            comult,
            counit,
            antipode,
            star: Some(star),
        }
    }

    #[test]
    fn toy_hopf_algebra_passes_all_axioms() {
        let h = z3_group_algebra();
        let rep = h.check_all();
        rep.assert_all();
    }

    #[test]
    fn corrupted_structure_constants_are_detected() {
        let mut h = z3_group_algebra();
        // Corrupt g·g to equal g instead of g².
        let dim = h.alg.dim;
        let bad = vec![(1usize, Scalar::one())];
        // Rebuild the algebra with one bad entry.
        let names = h.alg.basis_names.clone();
        h.alg = FiniteAlgebra::from_products("Z3", names, 0, |i, j| {
            if (i, j) == (1, 1) {
                bad.clone()
            } else {
                vec![((i + j) % 3, Scalar::one())]
            }
        });
        assert_eq!(h.alg.dim, dim);
        assert!(!h.alg.check_associativity().all_passed());
        assert!(!h.check_bialgebra().all_passed() || !h.check_antipode().all_passed());
    }

    #[test]
    fn corrupted_comultiplication_is_detected() {
        let mut h = z3_group_algebra();
        h.comult[1] = vec![(1, 0, Scalar::one())];
        assert!(!h.check_bialgebra().all_passed());
    }

    #[test]
    fn corrupted_antipode_is_detected() {
        let mut h = z3_group_algebra();
        h.antipode = Mat::identity(3);
        assert!(!h.check_antipode().all_passed());
    }

    #[test]
    fn corrupted_star_is_detected() {
        let mut h = z3_group_algebra();
        let mut st = Mat::zeros(3, 3);
        for i in 0..3 {
            st[(i, i)] = Scalar::one();
        }
        st[(1, 1)] = Scalar::q();
        h.star = Some(st);
        assert!(!h.check_star().all_passed());
    }

    #[test]
    fn self_pairing_of_z3_via_characters() {
        // ⟨gⁱ, gʲ⟩ = q^{ij} is a Hopf pairing of ℤ/3 with itself.
        let h = z3_group_algebra();
        let f = z3_group_algebra();
        let p = Mat::from_fn(3, 3, |i, j| Scalar::q_pow((i * j) as i64));
        check_hopf_pairing(&h, &f, &p).assert_all();
    }

    #[test]
    fn left_translation_is_a_module_but_not_a_module_algebra() {
        // Left translation of ℤ/3 on itself respects the product of the
        // acting algebra but violates the twisted Leibniz rule
        // (g▷(uv) = gu·v, while (g▷u)(g▷v) = g²uv); the checker must
        // accept the former axiom and reject the latter.
        let h = z3_group_algebra();
        let acts: Vec<Mat<Scalar>> = (0..3)
            .map(|i| {
                let mut m = Mat::zeros(3, 3);
                for j in 0..3 {
                    m[((i + j) % 3, j)] = Scalar::one();
                }
                m
            })
            .collect();
        let rep = check_left_module_algebra(&h, &acts, &h.alg, "Z3 translation");
        let by_name: Vec<(&str, bool)> = rep
            .items
            .iter()
            .map(|it| (it.name.as_str(), it.pass))
            .collect();
        assert!(by_name
            .iter()
            .any(|(n, p)| n.contains("respects the product") && *p));
        assert!(by_name
            .iter()
            .any(|(n, p)| n.contains("twisted Leibniz") && !*p));
    }

    #[test]
    fn comodule_checks_accept_the_regular_coaction_and_reject_corruption() {
        let h = z3_group_algebra();
        // Regular right coaction δ(gⁱ) = gⁱ ⊗ gⁱ.
        let co = Coaction {
            side: CoactionSide::Right,
            table: (0..3).map(|i| vec![(i, i, Scalar::one())]).collect(),
        };
        check_comodule_algebra(&h, &co, &h.alg, "Z3 regular").assert_all();

        let bad = Coaction {
            side: CoactionSide::Right,
            table: vec![
                vec![(0, 0, Scalar::one())],
                vec![(1, 1, Scalar::q())],
                vec![(2, 2, Scalar::one())],
            ],
        };
        assert!(!check_comodule_algebra(&h, &bad, &h.alg, "bad").all_passed());
    }

    #[test]
    fn action_from_coaction_matches_direct_formula() {
        let h = z3_group_algebra();
        let co = Coaction {
            side: CoactionSide::Right,
            table: (0..3).map(|i| vec![(i, i, Scalar::one())]).collect(),
        };
        let p = Mat::from_fn(3, 3, |i, j| Scalar::q_pow((i * j) as i64));
        let acts = action_from_coaction(&p, &co, 3);
        // g▷gʲ = gʲ·⟨g, gʲ⟩ = q^j gʲ: diagonal matrices.
        for j in 0..3 {
            assert_eq!(acts[1].col(j)[j], Scalar::q_pow(j as i64));
        }
        check_left_module_algebra(&h, &acts, &h.alg, "dual action").assert_all();
    }

    #[test]
    fn tensor_products_multiply_componentwise() {
        let h = z3_group_algebra();
        let u = {
            let mut v = vec![Scalar::zero(); 9];
            v[tensor_index(1, 3, 2)] = Scalar::one();
            v
        };
        let v = {
            let mut v = vec![Scalar::zero(); 9];
            v[tensor_index(2, 3, 2)] = Scalar::q();
            v
        };
        let uv = tensor_mul2(&h.alg, &h.alg, &u, &v);
        let mut expected = vec![Scalar::zero(); 9];
        expected[tensor_index(0, 3, 1)] = Scalar::q();
        assert_eq!(uv, expected);

        let mut u3 = vec![Scalar::zero(); 27];
        u3[(1 * 3 + 1) * 3 + 1] = Scalar::one();
        let w = tensor_mul3(&h.alg, &h.alg, &h.alg, &u3, &u3);
        let mut expected3 = vec![Scalar::zero(); 27];
        expected3[(2 * 3 + 2) * 3 + 2] = Scalar::one();
        assert_eq!(w, expected3);
    }

    #[test]
    fn format_element_round_trip_friendly_forms() {
        let h = z3_group_algebra();
        let mut u = elem_zero(3);
        u[0] = Scalar::rat(1, 2);
        u[1] = -Scalar::q();
        u[2] = Scalar::new(crate::scalar::qq(1, 1), crate::scalar::qq(2, 1));
        assert_eq!(h.alg.format_element(&u), "1/2 - q*g + (1+2*q)*g^2");
        assert_eq!(h.alg.format_element(&elem_zero(3)), "0");
        let e1 = h.alg.basis_elem(1);
        assert_eq!(h.alg.format_element(&e1), "g");
    }
}

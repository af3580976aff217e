//! Command-line front end: expression evaluation, table reproduction,
//! verification suites, and JSON export.
//!
//! ```text
//! qroot3 eval --algebra M "y x"            # normal form: q^2*x*y
//! qroot3 table actions [--json]            # the 54 generator actions on M
//! qroot3 verify all                        # every verification suite
//! qroot3 export --what table:actions --out FILE
//! ```
//!
//! Exit codes: 0 — all checks pass / expression evaluated; 1 — a
//! verification failure (or an export I/O failure); 2 — usage or parse
//! error. Identical invocations produce byte-identical output; every
//! number printed is exact.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::{Map, Value};

use crate::diffops;
use crate::env_h;
use crate::expr::{self, AlgElem, Algebra};
use crate::fun_f;
use crate::gauge;
use crate::hopf::{
    check_comodule_algebra, check_hopf_pairing, check_left_module_algebra,
    check_right_module_algebra, Elem,
};
use crate::json;
use crate::qplane;
use crate::repmod;
use crate::report::Report;
use crate::rmatrix;
use crate::scalar::{qq, Scalar};
use crate::wz_forms::{self, WZForm};

// ---------------------------------------------------------------------------
// Command surface
// ---------------------------------------------------------------------------

#[derive(Parser)]
#[command(
    name = "qroot3",
    version,
    about = "Exact computer algebra for the quantum group pair (F, H) at a cube root of unity"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Cmd,
}

#[derive(Subcommand)]
pub enum Cmd {
    /// Evaluate an expression and print its normal form.
    Eval {
        /// Algebra context: M, F, H, or WZ.
        #[arg(long, value_parser = algebra_arg)]
        algebra: Algebra,
        /// Expression, e.g. "y x" (M), "a^3 - 1" (F), "X+^2 K" (H).
        expr: String,
        /// Print the result as a JSON element document.
        #[arg(long)]
        json: bool,
    },
    /// Print one of the frozen tables.
    Table {
        /// One of: actions, tensor, metrics, cohomology, pairing.
        #[arg(value_parser = table_arg)]
        name: TableName,
        /// Print the table as a JSON array of records.
        #[arg(long)]
        json: bool,
    },
    /// Run a verification suite; prints one line per check.
    Verify {
        /// One of: hopf, actions, stars, metrics, wz, gauge, diffops,
        /// rmatrix, all.
        #[arg(value_parser = suite_arg)]
        suite: Suite,
    },
    /// Write a JSON export of a table or an element to a file.
    Export {
        /// What to export: "table:NAME" or "element:ALGEBRA:EXPR".
        #[arg(long)]
        what: String,
        /// Output file path.
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TableName {
    Actions,
    Tensor,
    Metrics,
    Cohomology,
    Pairing,
}

impl TableName {
    pub const ALL: [TableName; 5] = [
        TableName::Actions,
        TableName::Tensor,
        TableName::Metrics,
        TableName::Cohomology,
        TableName::Pairing,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TableName::Actions => "actions",
            TableName::Tensor => "tensor",
            TableName::Metrics => "metrics",
            TableName::Cohomology => "cohomology",
            TableName::Pairing => "pairing",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    Hopf,
    Actions,
    Stars,
    Metrics,
    Wz,
    Gauge,
    Diffops,
    Rmatrix,
    All,
}

impl Suite {
    pub const CONCRETE: [Suite; 8] = [
        Suite::Hopf,
        Suite::Actions,
        Suite::Stars,
        Suite::Metrics,
        Suite::Wz,
        Suite::Gauge,
        Suite::Diffops,
        Suite::Rmatrix,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Hopf => "hopf",
            Suite::Actions => "actions",
            Suite::Stars => "stars",
            Suite::Metrics => "metrics",
            Suite::Wz => "wz",
            Suite::Gauge => "gauge",
            Suite::Diffops => "diffops",
            Suite::Rmatrix => "rmatrix",
            Suite::All => "all",
        }
    }
}

fn algebra_arg(s: &str) -> Result<Algebra, String> {
    Algebra::by_name(s).ok_or_else(|| format!("unknown algebra {s:?} (expected M, F, H, or WZ)"))
}

fn table_arg(s: &str) -> Result<TableName, String> {
    TableName::ALL
        .into_iter()
        .find(|t| t.name() == s)
        .ok_or_else(|| {
            let names: Vec<&str> = TableName::ALL.iter().map(|t| t.name()).collect();
            format!("unknown table {s:?} (expected one of {})", names.join(", "))
        })
}

fn suite_arg(s: &str) -> Result<Suite, String> {
    let all = [
        Suite::Hopf,
        Suite::Actions,
        Suite::Stars,
        Suite::Metrics,
        Suite::Wz,
        Suite::Gauge,
        Suite::Diffops,
        Suite::Rmatrix,
        Suite::All,
    ];
    all.into_iter().find(|t| t.name() == s).ok_or_else(|| {
        let names: Vec<&str> = all.iter().map(|t| t.name()).collect();
        format!("unknown suite {s:?} (expected one of {})", names.join(", "))
    })
}

/// Full dispatch; returns the process exit code. Printing goes to the
/// standard streams.
pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match cli.command {
        Cmd::Eval {
            algebra,
            expr: src,
            json: as_json,
        } => match eval_output(algebra, &src, as_json) {
            Ok(s) => {
                print!("{s}");
                0
            }
            Err(e) => {
                eprintln!("{e}");
                2
            }
        },
        Cmd::Table { name, json: as_json } => {
            print!("{}", table_output(name, as_json));
            0
        }
        Cmd::Verify { suite } => {
            if suite == Suite::Rmatrix {
                print!("{}", r_coefficients_text());
            }
            let rep = verify_suite(suite);
            print!("{rep}");
            if rep.all_passed() {
                0
            } else {
                1
            }
        }
        Cmd::Export { what, out } => match export_string(&what) {
            Ok(doc) => match std::fs::write(&out, doc) {
                Ok(()) => 0,
                Err(e) => {
                    eprintln!("cannot write {}: {e}", out.display());
                    1
                }
            },
            Err(e) => {
                eprintln!("{e}");
                2
            }
        },
    }
}

// ---------------------------------------------------------------------------
// eval
// ---------------------------------------------------------------------------

/// The printed result of `eval` (newline-terminated).
pub fn eval_output(algebra: Algebra, src: &str, as_json: bool) -> Result<String, expr::ParseError> {
    let elem = expr::parse(src, algebra)?;
    if as_json {
        Ok(json::to_document(&json::element_to_value(&elem)))
    } else {
        Ok(format!("{elem}\n"))
    }
}

// ---------------------------------------------------------------------------
// Tables
// ---------------------------------------------------------------------------

/// One of the 54 entries of the action table.
pub struct ActionRow {
    pub side: &'static str,
    pub generator: &'static str,
    pub monomial: String,
    pub result: AlgElem,
}

/// The 54 generator actions on the monomial basis of M: both sides, all
/// nine monomials, generators K, X₊, X₋.
pub fn action_rows() -> Vec<ActionRow> {
    let gens: [(&'static str, Elem); 3] = [("K", env_h::k()), ("X+", env_h::xp()), ("X-", env_h::xm())];
    let mut rows = Vec::new();
    for side in ["right", "left"] {
        for m in 0..qplane::DIM {
            let z = qplane::ALGEBRA.basis_elem(m);
            for (gname, g) in &gens {
                let img = if side == "right" {
                    env_h::act_right_on_m(g, &z)
                } else {
                    env_h::act_left_on_m(g, &z)
                };
                rows.push(ActionRow {
                    side,
                    generator: gname,
                    monomial: qplane::ALGEBRA.basis_names[m].clone(),
                    result: AlgElem::new(Algebra::M, img),
                });
            }
        }
    }
    rows
}

/// The 12 generator pairings ⟨h, u⟩ for h ∈ {K, X₊, X₋}, u ∈ {a, b, c, d}.
pub fn pairing_rows() -> Vec<(&'static str, &'static str, Scalar)> {
    let hs: [(&'static str, Elem); 3] = [("K", env_h::k()), ("X+", env_h::xp()), ("X-", env_h::xm())];
    let us: [(&'static str, Elem); 4] = [
        ("a", fun_f::a()),
        ("b", fun_f::b()),
        ("c", fun_f::c()),
        ("d", fun_f::d_element()),
    ];
    let mut rows = Vec::new();
    for (hn, h) in &hs {
        for (un, u) in &us {
            rows.push((*hn, *un, env_h::pairing(h, u)));
        }
    }
    rows
}

fn signature_text(sig: &Option<(usize, usize, usize)>) -> String {
    match sig {
        None => "parameter-dependent".to_string(),
        Some((p, m, z)) => format!(
            "({p},{m},{z}) = {}{}{}",
            "+".repeat(*p),
            "-".repeat(*m),
            "0".repeat(*z)
        ),
    }
}

fn summands_text(summands: &[(String, usize)]) -> String {
    summands
        .iter()
        .map(|(name, k)| {
            if *k == 1 {
                name.clone()
            } else {
                format!("{k}*{name}")
            }
        })
        .collect::<Vec<_>>()
        .join(" (+) ")
}

/// The text rendering of a table (newline-terminated, deterministic).
pub fn table_text(t: TableName) -> String {
    let mut out = String::new();
    match t {
        TableName::Actions => {
            out.push_str("Right action of the generators of H on M (z <| h)\n");
            for r in action_rows().iter().filter(|r| r.side == "right") {
                out.push_str(&format!(
                    "  {:<9} <| {:<2} = {}\n",
                    r.monomial, r.generator, r.result
                ));
            }
            out.push_str("Left action of the generators of H on M (h |> z)\n");
            for r in action_rows().iter().filter(|r| r.side == "left") {
                out.push_str(&format!(
                    "  {:<2} |> {:<9} = {}\n",
                    r.generator, r.monomial, r.result
                ));
            }
        }
        TableName::Tensor => {
            out.push_str("Tensor products of the representations in the regular module\n");
            for row in repmod::tensor_table() {
                out.push_str(&format!(
                    "  {} (x) {} = {}\n",
                    row.left,
                    row.right,
                    summands_text(&row.summands)
                ));
            }
        }
        TableName::Metrics => {
            out.push_str("Invariant hermitian metrics over the representation catalogue\n");
            for row in repmod::metric_table() {
                out.push_str(&format!(
                    "  {:<6} dim {}  real parameters {}  generic signature {}\n",
                    row.name,
                    row.dim,
                    row.real_params,
                    signature_text(&row.signature)
                ));
            }
        }
        TableName::Cohomology => {
            out.push_str("Cohomology of (Omega, d)\n");
            out.push_str("  degree  cocycles  boundaries  cohomology\n");
            let rows = wz_forms::cohomology();
            let mut euler: i64 = 0;
            for (p, (z, b, h)) in rows.iter().enumerate() {
                out.push_str(&format!("  {p:<7} {z:<9} {b:<11} {h}\n"));
                let h = *h as i64;
                euler += if p % 2 == 0 { h } else { -h };
            }
            out.push_str(&format!("  Euler characteristic {euler}\n"));
        }
        TableName::Pairing => {
            out.push_str("Duality pairing of the generators <h, u>\n");
            for (h, u, v) in pairing_rows() {
                out.push_str(&format!("  <{h:<2}, {u}> = {v}\n"));
            }
        }
    }
    out
}

fn obj(fields: Vec<(&str, Value)>) -> Value {
    let mut m = Map::new();
    for (k, v) in fields {
        m.insert(k.to_string(), v);
    }
    Value::Object(m)
}

/// The JSON rendering of a table: an array of records.
pub fn table_value(t: TableName) -> Value {
    match t {
        TableName::Actions => Value::Array(
            action_rows()
                .iter()
                .map(|r| {
                    obj(vec![
                        ("generator", Value::String(r.generator.into())),
                        ("monomial", Value::String(r.monomial.clone())),
                        ("result", json::element_to_value(&r.result)),
                        ("side", Value::String(r.side.into())),
                    ])
                })
                .collect(),
        ),
        TableName::Tensor => Value::Array(
            repmod::tensor_table()
                .iter()
                .map(|row| {
                    let summands = row
                        .summands
                        .iter()
                        .map(|(name, k)| {
                            obj(vec![
                                ("multiplicity", Value::from(*k)),
                                ("name", Value::String(name.clone())),
                            ])
                        })
                        .collect();
                    obj(vec![
                        ("left", Value::String(row.left.clone())),
                        ("right", Value::String(row.right.clone())),
                        ("summands", Value::Array(summands)),
                    ])
                })
                .collect(),
        ),
        TableName::Metrics => Value::Array(
            repmod::metric_table()
                .iter()
                .map(|row| {
                    let sig = match row.signature {
                        None => Value::Null,
                        Some((p, m, z)) => {
                            Value::Array(vec![Value::from(p), Value::from(m), Value::from(z)])
                        }
                    };
                    obj(vec![
                        ("dim", Value::from(row.dim)),
                        ("name", Value::String(row.name.clone())),
                        ("real_params", Value::from(row.real_params)),
                        ("signature", sig),
                    ])
                })
                .collect(),
        ),
        TableName::Cohomology => Value::Array(
            wz_forms::cohomology()
                .iter()
                .enumerate()
                .map(|(p, (z, b, h))| {
                    obj(vec![
                        ("boundaries", Value::from(*b)),
                        ("cocycles", Value::from(*z)),
                        ("cohomology", Value::from(*h)),
                        ("degree", Value::from(p)),
                    ])
                })
                .collect(),
        ),
        TableName::Pairing => Value::Array(
            pairing_rows()
                .iter()
                .map(|(h, u, v)| {
                    obj(vec![
                        ("f", Value::String((*u).into())),
                        ("h", Value::String((*h).into())),
                        ("value", json::scalar_to_value(v)),
                    ])
                })
                .collect(),
        ),
    }
}

/// `table` output as printed (text or JSON document).
pub fn table_output(t: TableName, as_json: bool) -> String {
    if as_json {
        json::to_document(&table_value(t))
    } else {
        table_text(t)
    }
}

// ---------------------------------------------------------------------------
// export
// ---------------------------------------------------------------------------

/// Resolve an `--what` target to its JSON document.
pub fn export_string(what: &str) -> Result<String, String> {
    if let Some(name) = what.strip_prefix("table:") {
        let t = table_arg(name)?;
        Ok(json::to_document(&table_value(t)))
    } else if let Some(rest) = what.strip_prefix("element:") {
        let (alg, src) = rest
            .split_once(':')
            .ok_or("element export is written \"element:ALGEBRA:EXPR\"")?;
        let algebra = algebra_arg(alg)?;
        let elem = expr::parse(src, algebra).map_err(|e| e.to_string())?;
        Ok(json::to_document(&json::element_to_value(&elem)))
    } else {
        Err(format!(
            "unknown export target {what:?} (expected \"table:NAME\" or \"element:ALGEBRA:EXPR\")"
        ))
    }
}

// ---------------------------------------------------------------------------
// Verification suites
// ---------------------------------------------------------------------------

/// Nonzero coefficients of the universal R-matrix in the frozen basis of
/// H⊗H (the preamble of `verify rmatrix`).
pub fn r_coefficients_text() -> String {
    let names = &env_h::HOPF.alg.basis_names;
    let coeffs = rmatrix::r_coefficients();
    let mut out = format!(
        "Universal R-matrix: {} nonzero coefficients on the frozen basis of H (x) H\n",
        coeffs.len()
    );
    for (i, j, c) in coeffs {
        out.push_str(&format!("  {} (x) {} -> {}\n", names[i], names[j], c));
    }
    out
}

fn suite_hopf() -> Report {
    let mut rep = Report::new();
    rep.absorb("F", fun_f::HOPF.check_all());
    rep.absorb("H", env_h::HOPF.check_all());
    rep.absorb(
        "duality",
        check_hopf_pairing(&env_h::HOPF, &fun_f::HOPF, &env_h::PAIRING),
    );
    rep.check(
        "duality: the 27x27 pairing matrix has rank 27",
        env_h::PAIRING.rank() == 27,
        || format!("rank {}", env_h::PAIRING.rank()),
    );
    rep
}

fn suite_actions() -> Report {
    let mut rep = Report::new();
    rep.absorb(
        "module",
        check_left_module_algebra(&env_h::HOPF, &env_h::ACT_LEFT_ON_M, &qplane::ALGEBRA, "H|>M"),
    );
    rep.absorb(
        "module",
        check_right_module_algebra(&env_h::HOPF, &env_h::ACT_RIGHT_ON_M, &qplane::ALGEBRA, "M<|H"),
    );
    rep.absorb(
        "comodule",
        check_comodule_algebra(&fun_f::HOPF, &fun_f::COACT_LEFT, &qplane::ALGEBRA, "left"),
    );
    rep.absorb(
        "comodule",
        check_comodule_algebra(&fun_f::HOPF, &fun_f::COACT_RIGHT, &qplane::ALGEBRA, "right"),
    );
    rep.absorb("operators", env_h::commutation_with_coordinates());
    rep
}

fn suite_stars() -> Report {
    let mut rep = Report::new();
    rep.absorb("F", fun_f::HOPF.check_star());
    rep.absorb("H", env_h::HOPF.check_star());

    // The star of M: involution and antimultiplicativity.
    let mut invol = true;
    for i in 0..qplane::DIM {
        let z = qplane::ALGEBRA.basis_elem(i);
        if qplane::star(&qplane::star(&z)) != z {
            invol = false;
        }
    }
    rep.check("M: ∗ is involutive", invol, || "a basis monomial moved".into());
    let mut antimul = true;
    for i in 0..qplane::DIM {
        for j in 0..qplane::DIM {
            let u = qplane::ALGEBRA.basis_elem(i);
            let v = qplane::ALGEBRA.basis_elem(j);
            let lhs = qplane::star(&qplane::ALGEBRA.mul(&u, &v));
            let rhs = qplane::ALGEBRA.mul(&qplane::star(&v), &qplane::star(&u));
            if lhs != rhs {
                antimul = false;
            }
        }
    }
    rep.check("M: (uv)* = v* u* on all 81 basis pairs", antimul, || {
        "a product failed".into()
    });

    // Star–action covariance on M: h ▷ z* = [(S h)* ▷ z]*.
    let mut cov = true;
    let mut cov_witness = String::new();
    for hi in 0..env_h::DIM {
        let h = env_h::HOPF.alg.basis_elem(hi);
        let sh_star = env_h::star_h(&env_h::HOPF.antipode_elem(&h));
        for zi in 0..qplane::DIM {
            let z = qplane::ALGEBRA.basis_elem(zi);
            let lhs = env_h::act_left_on_m(&h, &qplane::star(&z));
            let rhs = qplane::star(&env_h::act_left_on_m(&sh_star, &z));
            if lhs != rhs {
                cov = false;
                cov_witness = format!("h = basis {hi}, z = basis {zi}");
            }
        }
    }
    rep.check("covariance h[z*] = [(Sh)*[z]]* on all 27x9 pairs", cov, || cov_witness);

    // Star–duality: ⟨h*, u⟩ = conj ⟨h, (Su)*⟩.
    let mut dual = true;
    let mut dual_witness = String::new();
    for hi in 0..env_h::DIM {
        let h = env_h::HOPF.alg.basis_elem(hi);
        let hs = env_h::star_h(&h);
        for u in 0..fun_f::DIM {
            let fu = fun_f::HOPF.alg.basis_elem(u);
            let su_star = fun_f::HOPF.star_elem(&fun_f::HOPF.antipode_elem(&fu));
            let lhs = env_h::pairing(&hs, &fu);
            let rhs = env_h::pairing(&h, &su_star).conj();
            if lhs != rhs {
                dual = false;
                dual_witness = format!("h = basis {hi}, u = basis {u}");
            }
        }
    }
    rep.check(
        "duality <h*, u> = conj <h, (Su)*> on all 27x27 pairs",
        dual,
        || dual_witness,
    );
    rep
}

fn suite_metrics() -> Report {
    let mut rep = Report::new();
    let g = repmod::invariant_form_on_m();
    rep.absorb("M-form", repmod::check_invariance_conditions(&g));
    rep.check(
        "M-form: exact inertia (5,4,0)",
        repmod::signature(&g) == (5, 4, 0),
        || format!("{:?}", repmod::signature(&g)),
    );

    let expected: [(&str, usize, Option<(usize, usize, usize)>); 9] = [
        ("1", 1, Some((1, 0, 0))),
        ("2_eve", 1, Some((1, 1, 0))),
        ("3_irr", 1, Some((2, 1, 0))),
        ("3_eve", 1, Some((1, 0, 2))),
        ("3_odd", 1, Some((1, 1, 1))),
        ("4_eve", 4, None),
        ("5_odd", 4, Some((2, 2, 1))),
        ("6_eve", 2, Some((3, 3, 0))),
        ("6_odd", 2, Some((3, 3, 0))),
    ];
    let table = repmod::metric_table();
    rep.check("catalogue has nine entries", table.len() == expected.len(), || {
        format!("{} rows", table.len())
    });
    for ((name, params, sig), row) in expected.iter().zip(&table) {
        rep.check(
            &format!("{name}: {params} real parameter(s), generic signature {}", signature_text(sig)),
            row.name == *name && row.real_params == *params && row.signature == *sig,
            || {
                format!(
                    "got {} / {} / {}",
                    row.name,
                    row.real_params,
                    signature_text(&row.signature)
                )
            },
        );
    }
    rep
}

fn suite_wz() -> Report {
    let mut rep = Report::new();
    rep.check(
        "dimensions (9, 18, 9)",
        (wz_forms::DIM0, wz_forms::DIM1, wz_forms::DIM2) == (9, 18, 9),
        || "dimension mismatch".into(),
    );
    rep.absorb("relations", wz_forms::manin_check());

    // d² = 0 as a 36×36 matrix identity.
    let d2 = wz_forms::D_MATRIX.mul(&wz_forms::D_MATRIX);
    rep.check("d∘d = 0", d2 == crate::linalg::Mat::zeros(wz_forms::DIM, wz_forms::DIM), || {
        "d² has a nonzero entry".into()
    });

    // Graded Leibniz on all 36×36 basis pairs.
    let mut leibniz = true;
    let mut witness = String::new();
    for i in 0..wz_forms::DIM {
        let u = WZForm::basis(i);
        let sign = if wz_forms::decode(i).0 % 2 == 0 {
            Scalar::one()
        } else {
            Scalar::from_int(-1)
        };
        for j in 0..wz_forms::DIM {
            let v = WZForm::basis(j);
            let lhs = wz_forms::d(&u.mul(&v));
            let rhs = wz_forms::d(&u).mul(&v).add(&u.mul(&wz_forms::d(&v)).scale(&sign));
            if lhs != rhs {
                leibniz = false;
                witness = format!("basis pair ({i}, {j})");
            }
        }
    }
    rep.check("graded Leibniz d(uv) = du·v + (−1)^p u·dv", leibniz, || witness);

    // d commutes with the star up to the degree sign.
    let mut star_ok = true;
    let mut star_witness = String::new();
    for i in 0..wz_forms::DIM {
        let u = WZForm::basis(i);
        let sign = if wz_forms::decode(i).0 % 2 == 0 {
            Scalar::one()
        } else {
            Scalar::from_int(-1)
        };
        if wz_forms::d(&wz_forms::star_form(&u))
            != wz_forms::star_form(&wz_forms::d(&u)).scale(&sign)
        {
            star_ok = false;
            star_witness = format!("basis {i}");
        }
    }
    rep.check("d(ω*) = (−1)^p (dω)*", star_ok, || star_witness);

    let coh = wz_forms::cohomology();
    rep.check(
        "cohomology (Z, B, H) = (1,0,1), (10,8,2), (9,8,1)",
        coh == vec![(1, 0, 1), (10, 8, 2), (9, 8, 1)],
        || format!("{coh:?}"),
    );
    let euler: i64 = coh
        .iter()
        .enumerate()
        .map(|(p, (_, _, h))| if p % 2 == 0 { *h as i64 } else { -(*h as i64) })
        .sum();
    rep.check("Euler characteristic 0", euler == 0, || format!("{euler}"));

    rep.absorb("H-covariance", wz_forms::rep_product_tables());
    rep.absorb("H-decomposition", wz_forms::h_decomposition_of_forms());
    rep
}

fn suite_gauge() -> Report {
    let mut rep = Report::new();
    for b in gauge::Block::ALL {
        match gauge::classify_curvature(&gauge::Connection::block(b)) {
            Ok(c) => rep.ok(&format!("block {}: {}", b.name(), c.label)),
            Err(e) => rep.fail(&format!("block {}", b.name()), e),
        }
    }

    // Star-fixed block bases (hermitian ⟺ real parameters).
    let mut star_fixed = true;
    for b in gauge::Block::ALL {
        for k in 0..b.param_range().len() {
            let phi = gauge::block_basis_form(b, k);
            if wz_forms::star_form(&phi) != phi {
                star_fixed = false;
            }
        }
    }
    rep.check("all 18 block basis one-forms are star-fixed", star_fixed, || {
        "a basis form is not hermitian".into()
    });

    // The hermitian 3_eve curvature polynomial, as an identity in the
    // formal parameters: ρ = (a_e1·a_e3 − a_e2²)(1 − q)·dxdy.
    let conn = gauge::Connection::block(gauge::Block::Eve3InOdd2);
    let rho = gauge::curvature(&conn);
    let coeff = gauge::param(6)
        .mul(&gauge::param(8))
        .sub(&gauge::param(7).mul(&gauge::param(7)))
        .scale(&Scalar::new(qq(1, 1), qq(-1, 1)));
    let expected = gauge::SymForm::from_wzform(&WZForm::dxdy()).scale(&coeff);
    rep.check(
        "3_eve: ρ = (a_e1·a_e3 − a_e2²)(1−q)·dxdy",
        rho == expected,
        || "curvature polynomial differs".into(),
    );

    // Gauge covariance ρ ↦ u⁻¹ρu for the invertible u = x.
    let u = qplane::x();
    let transformed = gauge::gauge_transform(&conn, &u)
        .map(|c2| gauge::curvature(&c2));
    let conjugated = gauge::conjugate_by(&rho, &u);
    rep.check(
        "gauge transformation by x conjugates the curvature",
        matches!((&transformed, &conjugated), (Ok(a), Some(b)) if a == b),
        || "ρ′ ≠ u⁻¹ρu".into(),
    );

    // Non-invertible gauge parameters are rejected (1 + x + x² is a zero
    // divisor of M).
    let mut zero_div = qplane::ALGEBRA.unit();
    zero_div[qplane::idx(1, 0)] = Scalar::one();
    zero_div[qplane::idx(2, 0)] = Scalar::one();
    rep.check(
        "non-invertible gauge parameter is rejected",
        gauge::gauge_transform(&conn, &zero_div).is_err(),
        || "1 + x + x² was accepted".into(),
    );
    rep
}

fn suite_diffops() -> Report {
    let mut rep = Report::new();
    rep.absorb("relations", diffops::relations_report());
    rep.absorb("scaling", diffops::scaling_report());
    rep.absorb("H-realization", diffops::h_generators_as_diffops());
    rep.check(
        "the 81 monomial operators form a basis of End(M)",
        diffops::basis_rank() == 81,
        || format!("rank {}", diffops::basis_rank()),
    );
    rep.check(
        "graded dimensions (9, 18, 27, 18, 9)",
        diffops::graded_counts() == [9, 18, 27, 18, 9],
        || format!("{:?}", diffops::graded_counts()),
    );
    rep
}

fn suite_rmatrix() -> Report {
    let mut rep = Report::new();
    rep.absorb("axioms", rmatrix::check_quasitriangularity());
    rep.absorb("projectors", rmatrix::projector_report());
    rep.absorb("relations", rmatrix::relations_from_projectors());
    rep
}

/// Run one suite (or all of them, namespaced).
pub fn verify_suite(suite: Suite) -> Report {
    match suite {
        Suite::Hopf => suite_hopf(),
        Suite::Actions => suite_actions(),
        Suite::Stars => suite_stars(),
        Suite::Metrics => suite_metrics(),
        Suite::Wz => suite_wz(),
        Suite::Gauge => suite_gauge(),
        Suite::Diffops => suite_diffops(),
        Suite::Rmatrix => suite_rmatrix(),
        Suite::All => {
            let mut rep = Report::new();
            for s in Suite::CONCRETE {
                rep.absorb(s.name(), verify_suite(s));
            }
            rep
        }
    }
}

// ---------------------------------------------------------------------------
// Tests
// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eval_matches_the_reference_examples() {
        assert_eq!(eval_output(Algebra::M, "y x", false).unwrap(), "q^2*x*y\n");
        assert_eq!(eval_output(Algebra::F, "a^3 - 1", false).unwrap(), "0\n");
        assert_eq!(eval_output(Algebra::H, "X+^3", false).unwrap(), "0\n");
        assert!(eval_output(Algebra::M, "y @", false).is_err());

        // The JSON form of x has its unit coefficient at slot (1,0).
        let doc = eval_output(Algebra::M, "x", true).unwrap();
        let v = json::from_document(&doc).unwrap();
        assert_eq!(v["algebra"], "M");
        assert_eq!(v["coeffs"][3]["r0"], "1");
        assert_eq!(v["coeffs"][0]["r0"], "0");
    }

    #[test]
    fn printed_normal_forms_reparse_to_the_same_element() {
        for (alg, srcs) in [
            (Algebra::M, vec!["y x", "x^2 y^2 + 3", "(x+y)^3"]),
            (Algebra::F, vec!["b c a", "d a", "a^2 b^2 c^2"]),
            (Algebra::H, vec!["X- K X+", "K-1", "(K + X+)^2"]),
            (Algebra::WZ, vec!["dy dx", "x dx + dy y", "dx dy x"]),
        ] {
            for src in srcs {
                let e = expr::parse(src, alg).unwrap();
                let printed = e.to_string();
                assert_eq!(expr::parse(&printed, alg).unwrap(), e, "{alg}: {src} -> {printed}");
            }
        }
    }

    #[test]
    fn tables_are_deterministic_and_well_formed() {
        for t in TableName::ALL {
            let a = table_text(t);
            let b = table_text(t);
            assert_eq!(a, b, "{} text output is not reproducible", t.name());
            assert!(a.ends_with('\n'));
            let ja = table_output(t, true);
            let jb = table_output(t, true);
            assert_eq!(ja, jb, "{} JSON output is not reproducible", t.name());
            let v = json::from_document(&ja).unwrap();
            assert!(v.is_array(), "{} JSON is an array of records", t.name());
        }
        // The actions table has its 54 entries.
        let v = json::from_document(&table_output(TableName::Actions, true)).unwrap();
        assert_eq!(v.as_array().unwrap().len(), 54);
        // Every exported action result re-imports to the computed element.
        for row in v.as_array().unwrap() {
            let elem = json::element_from_value(&row["result"]).unwrap();
            assert_eq!(elem.algebra, Algebra::M);
        }
        // The pairing grid contains <K, a> = q and <K, d> = q^2.
        let rows = pairing_rows();
        let find = |h: &str, u: &str| {
            rows.iter()
                .find(|(hh, uu, _)| *hh == h && *uu == u)
                .unwrap()
                .2
                .clone()
        };
        assert_eq!(find("K", "a"), Scalar::q());
        assert_eq!(find("K", "d"), Scalar::q2());
    }

    #[test]
    fn export_targets_resolve_or_fail_loudly() {
        let doc = export_string("element:M:x").unwrap();
        let e = json::element_from_value(&json::from_document(&doc).unwrap()).unwrap();
        assert_eq!(e, expr::parse("x", Algebra::M).unwrap());

        let doc = export_string("table:actions").unwrap();
        let v = json::from_document(&doc).unwrap();
        assert_eq!(v.as_array().unwrap().len(), 54);

        assert!(export_string("table:nope").is_err());
        assert!(export_string("element:Z:x").is_err());
        assert!(export_string("element:M:zz").is_err());
        assert!(export_string("gibberish").is_err());
    }

    #[test]
    fn exit_codes_follow_the_contract() {
        // 0: evaluation succeeds.
        assert_eq!(run_from(["qroot3", "eval", "--algebra", "M", "y x"]), 0);
        // 2: parse error in the expression.
        assert_eq!(run_from(["qroot3", "eval", "--algebra", "M", "y @"]), 2);
        // 2: unknown table (usage error).
        assert_eq!(run_from(["qroot3", "table", "nope"]), 2);
        // 2: unknown flag.
        assert_eq!(run_from(["qroot3", "eval", "--frobnicate", "x"]), 2);
        // 0: help.
        assert_eq!(run_from(["qroot3", "--help"]), 0);
    }
}

//! Command-line arguments and command dispatch.

use std::io::Read;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crossmod_adjust::{
    ad_exp, adjustment_exists, bch, check_adjustment, classify_adjustments, construct_adjustment, integrate_nilpotent,
    primitive_for_form, solve_morphism, AdaptedAdjustment, AdjustError,
};
use crossmod_butterfly::{
    classify_self_butterfly, compose, connect_same_kl, extract, is_invertible, neat_shift, reconstruct, shift_section,
    transfer_adjustment, transfer_criterion, validate_cocycle_data, CocycleData, CocycleReport,
};
use crossmod_cochains::cohomology;
use crossmod_crossed::CrossedModule;
use crossmod_linalg::{q, vadd, Matrix, Vector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::document::SpecDocument;
use crate::emit::{emit_catalog, parse_vector, CatalogRequest};
use crate::report::{self, object, Report, Status};
use crate::{computation, CliError};

/// Flags shared by all commands.
#[derive(Args, Clone, Debug, PartialEq, Eq)]
pub struct CommonFlags {
    /// Seed for randomized sweeps and random catalog parameters.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Number of samples in randomized sweeps.
    #[arg(long, global = true, default_value_t = 64)]
    pub samples: usize,
    /// Print a human-readable summary to stderr.
    #[arg(long, short, global = true)]
    pub verbose: bool,
}

impl Default for CommonFlags {
    fn default() -> Self {
        CommonFlags {
            seed: 0,
            samples: 64,
            verbose: false,
        }
    }
}

/// The `crossmod` command line.
#[derive(Parser, Clone, Debug)]
#[command(
    name = "crossmod",
    version,
    about = "Exact computations with central crossed modules of Lie algebras"
)]
pub struct Cli {
    /// Shared flags.
    #[command(flatten)]
    pub flags: CommonFlags,
    /// The command to run.
    #[command(subcommand)]
    pub command: Command,
}

/// The commands. Every command except `catalog` reads a spec document
/// from a path, or from stdin when the path is `-`.
#[derive(Subcommand, Serialize, Clone, Debug, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// Resolve and check every object in the document.
    Validate {
        /// Spec document path.
        spec: String,
    },
    /// The homotopy algebras `f = coker t` and `a = ker t`.
    Homotopy {
        /// Spec document path.
        spec: String,
        /// Module name.
        #[arg(long)]
        module: String,
    },
    /// `H^k` of an algebra with trivial coefficients, or of `f` with values
    /// in `a` for a module.
    Cohomology {
        /// Spec document path.
        spec: String,
        /// Algebra name.
        #[arg(long, conflicts_with = "module")]
        algebra: Option<String>,
        /// Module name.
        #[arg(long)]
        module: Option<String>,
        /// Degree.
        #[arg(long)]
        k: usize,
        /// Dimension of the trivial coefficients when an algebra is given.
        #[arg(long, default_value_t = 1)]
        values: usize,
    },
    /// The Kassel–Loday class in `H³(f, a)`.
    Kl {
        /// Spec document path.
        spec: String,
        /// Module name.
        #[arg(long)]
        module: String,
        /// A half splitting `u: g → h` (map name); default when omitted.
        #[arg(long)]
        splitting: Option<String>,
    },
    /// Decide whether an infinitesimal adjustment exists.
    AdjustExists {
        /// Spec document path.
        spec: String,
        /// Module name.
        #[arg(long)]
        module: String,
    },
    /// Construct an adjustment with a prescribed adjusted class.
    AdjustConstruct {
        /// Spec document path.
        spec: String,
        /// Module name.
        #[arg(long)]
        module: String,
        /// Invariant symmetric form `B: f × f → a` (form name).
        #[arg(long)]
        form: String,
        /// A half splitting (map name); default when omitted.
        #[arg(long)]
        splitting: Option<String>,
    },
    /// All adjustments adapted to a section.
    AdjustClassify {
        /// Spec document path.
        spec: String,
        /// Module name.
        #[arg(long)]
        module: String,
        /// A section `s: f → g` (map name); default when omitted.
        #[arg(long)]
        section: Option<String>,
    },
    /// Check the adjustment identities.
    AdjustCheck {
        /// Spec document path.
        spec: String,
        /// Module name.
        #[arg(long)]
        module: String,
        /// The bilinear map `η: g × g → h` (form name).
        #[arg(long)]
        eta: String,
        /// Also check adaptedness to this section (map name).
        #[arg(long)]
        section: Option<String>,
    },
    /// Morphisms between two adapted adjustments.
    Morphism {
        /// Spec document path.
        spec: String,
        /// Module name.
        #[arg(long)]
        module: String,
        /// Source adjustment (form name).
        #[arg(long)]
        from_eta: String,
        /// Target adjustment (form name).
        #[arg(long)]
        to_eta: String,
        /// Section of the source; default when omitted.
        #[arg(long)]
        from_section: Option<String>,
        /// Section of the target; default when omitted.
        #[arg(long)]
        to_section: Option<String>,
    },
    /// Check the cocycle conditions of butterfly data.
    ButterflyValidate {
        /// Spec document path.
        spec: String,
        /// Butterfly data name.
        #[arg(long)]
        butterfly: String,
    },
    /// Realize butterfly data on `h2 ⊕ g1`.
    ButterflyReconstruct {
        /// Spec document path.
        spec: String,
        /// Butterfly data name.
        #[arg(long)]
        butterfly: String,
    },
    /// Compose two butterflies.
    ButterflyCompose {
        /// Spec document path.
        spec: String,
        /// The first data (applied first).
        #[arg(long)]
        first: String,
        /// The second data.
        #[arg(long)]
        second: String,
    },
    /// The class in `H²(f, a)` of a self-butterfly inducing identities.
    ButterflyClassify {
        /// Spec document path.
        spec: String,
        /// Butterfly data name.
        #[arg(long)]
        butterfly: String,
    },
    /// Transfer an adapted adjustment along an invertible butterfly.
    Transfer {
        /// Spec document path.
        spec: String,
        /// Butterfly data name.
        #[arg(long)]
        butterfly: String,
        /// Adjustment on the source (form name).
        #[arg(long)]
        eta: String,
        /// Section of the source; default when omitted.
        #[arg(long)]
        source_section: Option<String>,
        /// Section of the target; default when omitted.
        #[arg(long)]
        target_section: Option<String>,
    },
    /// Butterfly data between two modules with equal classes.
    Connect {
        /// Spec document path.
        spec: String,
        /// Source module.
        #[arg(long)]
        source: String,
        /// Target module.
        #[arg(long)]
        target: String,
    },
    /// Emit the spec document of a catalog example.
    Catalog {
        /// product | torus | matrix-aut | heisenberg-extension | cubic |
        /// identity | path-truncation.
        name: String,
        /// Standard algebra, such as so3, heisenberg3 or abelian(2).
        #[arg(long)]
        algebra: Option<String>,
        /// Dimension of `a` for product modules.
        #[arg(long)]
        a_dim: Option<usize>,
        /// Size parameter.
        #[arg(long)]
        n: Option<usize>,
        /// Matrix parameter as "a,b;c,d".
        #[arg(long)]
        matrix: Option<String>,
        /// Truncation degree.
        #[arg(long)]
        degree: Option<usize>,
        /// Write the document here instead of into the report.
        #[arg(long)]
        out: Option<String>,
    },
    /// Integrate an adjustment along ad-nilpotent elements and sample the
    /// cocycle law.
    IntegrateNilpotent {
        /// Spec document path.
        spec: String,
        /// Module name.
        #[arg(long)]
        module: String,
        /// The adjustment (form name).
        #[arg(long)]
        eta: String,
        /// Element `Z` of `g` as "a,b,c".
        #[arg(long, requires = "vector")]
        element: Option<String>,
        /// Vector `X` of `g` as "a,b,c".
        #[arg(long, requires = "element")]
        vector: Option<String>,
        /// Truncation order of the series; `dim g` by default.
        #[arg(long)]
        max_k: Option<usize>,
    },
}

impl Command {
    /// The command name as typed.
    pub fn name(&self) -> &'static str {
        match self {
            Command::Validate { .. } => "validate",
            Command::Homotopy { .. } => "homotopy",
            Command::Cohomology { .. } => "cohomology",
            Command::Kl { .. } => "kl",
            Command::AdjustExists { .. } => "adjust-exists",
            Command::AdjustConstruct { .. } => "adjust-construct",
            Command::AdjustClassify { .. } => "adjust-classify",
            Command::AdjustCheck { .. } => "adjust-check",
            Command::Morphism { .. } => "morphism",
            Command::ButterflyValidate { .. } => "butterfly-validate",
            Command::ButterflyReconstruct { .. } => "butterfly-reconstruct",
            Command::ButterflyCompose { .. } => "butterfly-compose",
            Command::ButterflyClassify { .. } => "butterfly-classify",
            Command::Transfer { .. } => "transfer",
            Command::Connect { .. } => "connect",
            Command::Catalog { .. } => "catalog",
            Command::IntegrateNilpotent { .. } => "integrate-nilpotent",
        }
    }
}

fn load(path: &str) -> Result<SpecDocument, CliError> {
    let io = |e: std::io::Error| CliError::Io {
        path: path.to_string(),
        message: e.to_string(),
    };
    let text = if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io)?;
        s
    } else {
        std::fs::read_to_string(path).map_err(io)?
    };
    SpecDocument::parse(&text)
}

fn section_or_default(doc: &SpecDocument, m: &CrossedModule, name: &Option<String>) -> Result<Matrix, CliError> {
    match name {
        Some(n) => {
            let s = doc.map(n)?;
            m.check_section(&s).map_err(|e| CliError::Invalid {
                field: format!("maps.{n}"),
                message: e.to_string(),
            })?;
            Ok(s)
        }
        None => Ok(m.lift().clone()),
    }
}

fn splitting_or_default(doc: &SpecDocument, m: &CrossedModule, name: &Option<String>) -> Result<Matrix, CliError> {
    match name {
        Some(n) => {
            let u = doc.map(n)?;
            m.check_half_splitting(&u).map_err(|e| CliError::Invalid {
                field: format!("maps.{n}"),
                message: e.to_string(),
            })?;
            Ok(u)
        }
        None => Ok(m.default_splitting()),
    }
}

fn cocycle_checks(r: &CocycleReport) -> Value {
    Value::Array(
        r.checks
            .iter()
            .map(|c| {
                object([
                    ("condition", json!(c.condition.describe())),
                    ("passed", json!(c.violation.is_none())),
                    ("violation", report::violation(&c.violation)),
                ])
            })
            .collect(),
    )
}

fn data_payload(d: &CocycleData) -> Value {
    object([
        ("phi", report::matrix(d.phi())),
        ("f", report::matrix(d.f())),
        ("lambda", report::cochain(d.lambda())),
    ])
}

fn adapted(a: &AdaptedAdjustment) -> Value {
    object([("eta", report::form(&a.eta)), ("section", report::matrix(&a.section))])
}

fn fail(reason: impl Into<String>) -> (Status, Value) {
    (Status::Fail, object([("reason", json!(reason.into()))]))
}

/// Runs a command and returns its report.
pub fn run(command: &Command, flags: &CommonFlags) -> Result<Report, CliError> {
    let arguments = arguments(command, flags);
    let (status, payload) = dispatch(command, flags)?;
    Ok(Report {
        command: command.name().to_string(),
        arguments,
        status,
        payload,
    })
}

fn arguments(command: &Command, flags: &CommonFlags) -> Value {
    let mut args = match serde_json::to_value(command).expect("commands serialize") {
        Value::Object(mut outer) => outer.remove(command.name()).unwrap_or(Value::Null),
        other => other,
    };
    if let Value::Object(map) = &mut args {
        map.insert("seed".into(), json!(flags.seed));
        map.insert("samples".into(), json!(flags.samples));
    }
    args
}

fn dispatch(command: &Command, flags: &CommonFlags) -> Result<(Status, Value), CliError> {
    match command {
        Command::Validate { spec } => validate(&load(spec)?),
        Command::Homotopy { spec, module } => {
            let m = load(spec)?.module(module)?;
            Ok((
                Status::Ok,
                object([
                    ("f", report::algebra(m.f())),
                    ("f_dim", json!(m.f().dim())),
                    ("f_abelian", json!(m.f().is_abelian())),
                    ("a_dim", json!(m.a_dim())),
                    ("p", report::matrix(m.p())),
                    ("iota", report::matrix(m.iota())),
                    ("section", report::matrix(m.lift())),
                ]),
            ))
        }
        Command::Cohomology {
            spec,
            algebra,
            module,
            k,
            values,
        } => {
            let doc = load(spec)?;
            let (l, v) = match (algebra, module) {
                (Some(a), None) => (doc.algebra(a)?, *values),
                (None, Some(m)) => {
                    let m = doc.module(m)?;
                    (m.f().clone(), m.a_dim())
                }
                _ => return Err(CliError::Usage("give exactly one of --algebra and --module".into())),
            };
            let h = cohomology(&l, v, *k);
            Ok((
                Status::Ok,
                object([
                    ("degree", json!(k)),
                    ("dim", json!(h.dim())),
                    ("cocycles_dim", json!(h.cocycles.dim())),
                    ("coboundaries_dim", json!(h.coboundaries.dim())),
                    ("basis", Value::Array(h.basis.iter().map(report::cochain).collect())),
                ]),
            ))
        }
        Command::Kl {
            spec,
            module,
            splitting,
        } => {
            let doc = load(spec)?;
            let m = doc.module(module)?;
            let u = splitting_or_default(&doc, &m, splitting)?;
            let class = m.kl_class_with(&u).map_err(computation)?;
            Ok((
                Status::Ok,
                object([
                    ("trivial", json!(class.is_trivial())),
                    ("h3_dim", json!(class.space.dim())),
                    ("coords", report::vector(&class.coords)),
                    ("cocycle", report::cochain(&class.cocycle)),
                ]),
            ))
        }
        Command::AdjustExists { spec, module } => {
            let m = load(spec)?.module(module)?;
            let ex = adjustment_exists(&m);
            let (form, xi) = match &ex.witness {
                Some((b, xi)) => (report::form(b), report::cochain(xi)),
                None => (Value::Null, Value::Null),
            };
            Ok((
                Status::from_bool(ex.exists()),
                object([("exists", json!(ex.exists())), ("form", form), ("xi", xi)]),
            ))
        }
        Command::AdjustConstruct {
            spec,
            module,
            form,
            splitting,
        } => {
            let doc = load(spec)?;
            let m = doc.module(module)?;
            let u = splitting_or_default(&doc, &m, splitting)?;
            let b = doc.form(form)?;
            match primitive_for_form(&m, &u, &b).map_err(computation)? {
                Some(xi) => {
                    let adj = construct_adjustment(&m, &u, &b, &xi).map_err(computation)?;
                    Ok((
                        Status::Ok,
                        object([("adjustment", adapted(&adj)), ("xi", report::cochain(&xi))]),
                    ))
                }
                None => Ok(fail("[cw(B)] differs from the Kassel-Loday class")),
            }
        }
        Command::AdjustClassify { spec, module, section } => {
            let doc = load(spec)?;
            let m = doc.module(module)?;
            let s = section_or_default(&doc, &m, section)?;
            match classify_adjustments(&m, &s) {
                Ok(space) => Ok((
                    Status::Ok,
                    object([
                        ("dim", json!(space.dim())),
                        ("single_point", json!(space.dim() == 0)),
                        ("base", adapted(&space.base)),
                        (
                            "directions",
                            Value::Array(space.directions.iter().map(report::form).collect()),
                        ),
                    ]),
                )),
                Err(AdjustError::NoAdjustment) => Ok(fail("the module admits no infinitesimal adjustment")),
                Err(e) => Err(computation(e)),
            }
        }
        Command::AdjustCheck {
            spec,
            module,
            eta,
            section,
        } => {
            let doc = load(spec)?;
            let m = doc.module(module)?;
            let eta = doc.form(eta)?;
            let s = match section {
                Some(_) => Some(section_or_default(&doc, &m, section)?),
                None => None,
            };
            let r = check_adjustment(&m, &eta, s.as_ref()).map_err(computation)?;
            let checks = r
                .checks
                .iter()
                .map(|c| {
                    object([
                        ("identity", json!(c.identity.describe())),
                        ("passed", json!(c.passed())),
                        ("violation", report::violation(&c.violation)),
                    ])
                })
                .collect();
            Ok((
                Status::from_bool(r.passed()),
                object([
                    ("checks", Value::Array(checks)),
                    ("is_adjustment", json!(r.is_adjustment())),
                ]),
            ))
        }
        Command::Morphism {
            spec,
            module,
            from_eta,
            to_eta,
            from_section,
            to_section,
        } => {
            let doc = load(spec)?;
            let m = doc.module(module)?;
            let from = AdaptedAdjustment {
                section: section_or_default(&doc, &m, from_section)?,
                eta: doc.form(from_eta)?,
            };
            let to = AdaptedAdjustment {
                section: section_or_default(&doc, &m, to_section)?,
                eta: doc.form(to_eta)?,
            };
            let sol = solve_morphism(&m, &from, &to).map_err(computation)?;
            Ok((
                Status::from_bool(sol.particular.is_some()),
                object([
                    ("exists", json!(sol.particular.is_some())),
                    (
                        "particular",
                        sol.particular.as_ref().map_or(Value::Null, report::matrix),
                    ),
                    ("automorphism_dim", json!(sol.homogeneous.len())),
                    (
                        "automorphisms",
                        Value::Array(sol.homogeneous.iter().map(report::matrix).collect()),
                    ),
                ]),
            ))
        }
        Command::ButterflyValidate { spec, butterfly } => {
            let d = load(spec)?.butterfly(butterfly)?;
            let r = validate_cocycle_data(&d);
            Ok((Status::from_bool(r.passed()), object([("checks", cocycle_checks(&r))])))
        }
        Command::ButterflyReconstruct { spec, butterfly } => {
            let d = load(spec)?.butterfly(butterfly)?;
            let r = validate_cocycle_data(&d);
            if !r.passed() {
                return Ok((Status::Fail, object([("checks", cocycle_checks(&r))])));
            }
            let rec = reconstruct(&d).map_err(computation)?;
            let b = &rec.butterfly;
            let round_trip = extract(b, &rec.canonical_section).map_err(computation)? == d;
            Ok((
                Status::from_bool(round_trip),
                object([
                    ("middle", report::algebra(b.middle())),
                    ("i1", report::matrix(b.i1())),
                    ("i2", report::matrix(b.i2())),
                    ("r1", report::matrix(b.r1())),
                    ("r2", report::matrix(b.r2())),
                    ("section", report::matrix(&rec.canonical_section)),
                    ("invertible", json!(b.is_invertible())),
                    ("round_trip", json!(round_trip)),
                ]),
            ))
        }
        Command::ButterflyCompose { spec, first, second } => {
            let doc = load(spec)?;
            let (d1, d2) = (doc.butterfly(first)?, doc.butterfly(second)?);
            for (name, d) in [(first, &d1), (second, &d2)] {
                if !validate_cocycle_data(d).passed() {
                    return Ok(fail(format!("{name} is not valid cocycle data")));
                }
            }
            let d = compose(&d1, &d2).map_err(computation)?;
            let valid = validate_cocycle_data(&d).passed();
            let invertible = is_invertible(&d).map_err(computation)?;
            Ok((
                Status::from_bool(valid),
                object([
                    ("data", data_payload(&d)),
                    ("valid", json!(valid)),
                    ("invertible", json!(invertible)),
                ]),
            ))
        }
        Command::ButterflyClassify { spec, butterfly } => {
            let d = load(spec)?.butterfly(butterfly)?;
            if !validate_cocycle_data(&d).passed() {
                return Ok(fail("not valid cocycle data"));
            }
            match classify_self_butterfly(&d) {
                Ok(c) => Ok((
                    Status::Ok,
                    object([
                        ("h2_dim", json!(c.space.dim())),
                        ("coords", report::vector(&c.coords)),
                        ("trivial", json!(crossmod_linalg::vis_zero(&c.coords))),
                        ("xi", report::cochain(&c.xi)),
                        ("shift", report::matrix(&c.shift)),
                    ]),
                )),
                Err(e) => Ok(fail(e.to_string())),
            }
        }
        Command::Transfer {
            spec,
            butterfly,
            eta,
            source_section,
            target_section,
        } => {
            let doc = load(spec)?;
            let d = doc.butterfly(butterfly)?;
            if !validate_cocycle_data(&d).passed() {
                return Ok(fail("not valid cocycle data"));
            }
            if !is_invertible(&d).map_err(computation)? {
                return Ok(fail("the butterfly is not invertible"));
            }
            let s1 = section_or_default(&doc, d.source(), source_section)?;
            let s2 = section_or_default(&doc, d.target(), target_section)?;
            let eta1 = doc.form(eta)?;
            let gamma = neat_shift(&d, &s1, &s2).map_err(computation)?;
            let neat = shift_section(&d, &gamma).map_err(computation)?;
            let out = transfer_adjustment(&neat, &s1, &s2, &eta1).map_err(computation)?;
            let criterion = transfer_criterion(&neat, &eta1, &out.eta);
            Ok((
                Status::from_bool(criterion),
                object([
                    ("adjustment", adapted(&out)),
                    ("neat_shift", report::matrix(&gamma)),
                    ("criterion", json!(criterion)),
                ]),
            ))
        }
        Command::Connect { spec, source, target } => {
            let doc = load(spec)?;
            let (m1, m2) = (doc.module(source)?, doc.module(target)?);
            let (u1, u2) = (m1.default_splitting(), m2.default_splitting());
            match connect_same_kl(&m1, &u1, &m2, &u2).map_err(computation)? {
                Some(d) => Ok((Status::Ok, object([("data", data_payload(&d))]))),
                None => Ok(fail("the Kassel-Loday classes differ")),
            }
        }
        Command::Catalog {
            name,
            algebra,
            a_dim,
            n,
            matrix,
            degree,
            out,
        } => {
            let req = CatalogRequest {
                name: name.clone(),
                algebra: algebra.clone(),
                a_dim: *a_dim,
                n: *n,
                matrix: matrix.clone(),
                degree: *degree,
            };
            let doc = emit_catalog(&req, flags.seed)?;
            let text = doc.to_json();
            match out {
                Some(path) => {
                    std::fs::write(path, format!("{text}\n")).map_err(|e| CliError::Io {
                        path: path.clone(),
                        message: e.to_string(),
                    })?;
                    Ok((Status::Ok, object([("written", json!(path))])))
                }
                None => Ok((
                    Status::Ok,
                    object([("document", serde_json::to_value(&doc).expect("documents serialize"))]),
                )),
            }
        }
        Command::IntegrateNilpotent {
            spec,
            module,
            eta,
            element,
            vector,
            max_k,
        } => {
            let doc = load(spec)?;
            let m = doc.module(module)?;
            let eta = doc.form(eta)?;
            integrate(&m, &eta, element, vector, *max_k, flags)
        }
    }
}

fn validate(doc: &SpecDocument) -> Result<(Status, Value), CliError> {
    let mut entries = Vec::new();
    let mut all_valid = true;
    let mut record = |kind: &str, name: &str, outcome: Result<Option<Value>, CliError>| -> Result<(), CliError> {
        let (valid, detail) = match outcome {
            Ok(extra) => (true, extra.unwrap_or(Value::Null)),
            Err(CliError::Invalid { message, .. }) => (false, json!(message)),
            Err(e) => return Err(e),
        };
        all_valid &= valid;
        entries.push(object([
            ("kind", json!(kind)),
            ("name", json!(name)),
            ("valid", json!(valid)),
            ("detail", detail),
        ]));
        Ok(())
    };
    for name in doc.algebras.keys() {
        record("algebra", name, doc.algebra(name).map(|_| None))?;
    }
    for name in doc.maps.keys() {
        record("map", name, doc.map(name).map(|_| None))?;
    }
    for name in doc.actions.keys() {
        record("action", name, doc.action(name).map(|_| None))?;
    }
    for name in doc.modules.keys() {
        let summary = doc
            .module(name)
            .map(|m| Some(object([("f_dim", json!(m.f().dim())), ("a_dim", json!(m.a_dim()))])));
        record("module", name, summary)?;
    }
    for name in doc.cochains.keys() {
        record("cochain", name, doc.cochain(name).map(|_| None))?;
    }
    for name in doc.forms.keys() {
        record("form", name, doc.form(name).map(|_| None))?;
    }
    for name in doc.butterflies.keys() {
        let outcome = doc.butterfly(name).and_then(|d| {
            let r = validate_cocycle_data(&d);
            if r.passed() {
                Ok(Some(object([("checks", cocycle_checks(&r))])))
            } else {
                Err(CliError::Invalid {
                    field: format!("butterflies.{name}"),
                    message: r
                        .checks
                        .iter()
                        .filter(|c| c.violation.is_some())
                        .map(|c| c.condition.describe())
                        .collect::<Vec<_>>()
                        .join("; "),
                })
            }
        });
        record("butterfly", name, outcome)?;
    }
    Ok((
        Status::from_bool(all_valid),
        object([("entries", Value::Array(entries))]),
    ))
}

fn integrate(
    m: &CrossedModule,
    eta: &crossmod_lie::Bilinear,
    element: &Option<String>,
    vector: &Option<String>,
    max_k: Option<usize>,
    flags: &CommonFlags,
) -> Result<(Status, Value), CliError> {
    let g = m.g();
    let n = g.dim();
    let value = match (element, vector) {
        (Some(z), Some(x)) => {
            let (z, x) = (parse_vector(z)?, parse_vector(x)?);
            report::vector(&integrate_nilpotent(m, eta, &z, &x, max_k).map_err(computation)?)
        }
        _ => Value::Null,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(flags.seed);
    let random = |rng: &mut ChaCha8Rng| -> Vector { (0..n).map(|_| q(rng.gen_range(-2..=2))).collect() };
    let (mut checked, mut holds, mut skipped) = (0usize, 0usize, 0usize);
    for _ in 0..flags.samples {
        let (z1, z2, x) = (random(&mut rng), random(&mut rng), random(&mut rng));
        let kappa = |z: &[crossmod_linalg::Q], y: &[crossmod_linalg::Q]| integrate_nilpotent(m, eta, z, y, max_k);
        let sample = (|| -> Result<bool, AdjustError> {
            let prod = bch(g, &z1, &z2)?;
            let ad2 = ad_exp(g, &z2, n)?;
            Ok(kappa(&prod, &x)? == vadd(&kappa(&z1, &ad2.apply(&x))?, &kappa(&z2, &x)?))
        })();
        match sample {
            Ok(ok) => {
                checked += 1;
                holds += usize::from(ok);
            }
            Err(AdjustError::NotNilpotent(_)) => skipped += 1,
            Err(e) => return Err(computation(e)),
        }
    }
    let status = if checked == 0 && flags.samples > 0 {
        Status::Undecided
    } else {
        Status::from_bool(holds == checked)
    };
    Ok((
        status,
        object([
            ("value", value),
            ("samples", json!(flags.samples)),
            ("checked", json!(checked)),
            ("cocycle_law_holds", json!(holds)),
            ("skipped_non_nilpotent", json!(skipped)),
        ]),
    ))
}

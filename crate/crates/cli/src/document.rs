//! The JSON spec document and resolution of its named objects.
//!
//! A document has a version tag and named tables of Lie algebras, linear
//! maps, action tensors, crossed modules, alternating cochains, bilinear
//! forms and butterfly cocycle data. Rationals are strings `"p/q"` (or
//! integers written as strings); tensors are sparse lists of entries.
//!
//! ```json
//! {
//!   "version": "crossmod-spec/1",
//!   "algebras": { "heis": { "dim": 3, "brackets": [[0, 1, 2, "1"]] } },
//!   "maps": { "t": { "rows": 3, "cols": 1, "entries": [["0"], ["0"], ["1"]] } }
//! }
//! ```

use std::collections::BTreeMap;

use crossmod_butterfly::CocycleData;
use crossmod_cochains::{combinations, AltCochain};
use crossmod_crossed::CrossedModule;
use crossmod_lie::{ActionTensor, Bilinear, LieAlgebra, LieError};
use crossmod_linalg::{format_q, parse_q, vzero, zero, Matrix, Vector, Q};
use serde::{Deserialize, Serialize};

use crate::CliError;

/// The only supported version tag.
pub const VERSION: &str = "crossmod-spec/1";

/// A bracket entry `[e_i, e_j] ∋ c · e_k`, either `[i, j, k, "p/q"]` or
/// `[i, j, k, num, den]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BracketEntry {
    /// `[i, j, k, "p/q"]`.
    Text(usize, usize, usize, String),
    /// `[i, j, k, num, den]`.
    Parts(usize, usize, usize, i64, i64),
}

/// A Lie algebra by its nonzero brackets `[e_i, e_j]` with `i < j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    /// Dimension.
    pub dim: usize,
    /// Sparse structure constants; `[e_j, e_i]` follows by antisymmetry.
    #[serde(default)]
    pub brackets: Vec<BracketEntry>,
}

/// A dense matrix given row by row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapSpec {
    /// Number of rows (dimension of the target).
    pub rows: usize,
    /// Number of columns (dimension of the source).
    pub cols: usize,
    /// `rows` rows of `cols` rationals.
    pub entries: Vec<Vec<String>>,
}

/// An action tensor: entry `[x, r, c, "v"]` sets row `r`, column `c` of the
/// matrix of the actor basis vector `x`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionSpec {
    /// Dimension of the acting algebra.
    pub actor_dim: usize,
    /// Dimension of the acted-on algebra.
    pub module_dim: usize,
    /// Sparse entries.
    #[serde(default)]
    pub entries: Vec<(usize, usize, usize, String)>,
}

/// A crossed module referencing algebras, a map and an action by name. A
/// missing action means the zero action.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleSpec {
    /// The algebra `h`.
    pub h: String,
    /// The algebra `g`.
    pub g: String,
    /// The map `t: h → g`.
    pub t: String,
    /// The action of `g` on `h`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<String>,
}

/// An alternating cochain: entry `[[i1, …, ik], c, "v"]` with strictly
/// increasing indices sets component `c` of the value on `(e_i1, …, e_ik)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CochainSpec {
    /// Degree `k`.
    pub degree: usize,
    /// Dimension of the algebra.
    pub source_dim: usize,
    /// Dimension of the value space.
    pub values_dim: usize,
    /// Sparse entries.
    #[serde(default)]
    pub entries: Vec<(Vec<usize>, usize, String)>,
}

/// A bilinear map: entry `[i, j, c, "v"]` sets component `c` of the value
/// on `(e_i, e_j)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormSpec {
    /// Dimension of the source.
    pub source_dim: usize,
    /// Dimension of the value space.
    pub values_dim: usize,
    /// Sparse entries.
    #[serde(default)]
    pub entries: Vec<(usize, usize, usize, String)>,
}

/// Cocycle data `(φ, f, λ)` between two named modules.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ButterflySpec {
    /// The source module.
    pub source: String,
    /// The target module.
    pub target: String,
    /// The map `φ: g1 → g2`.
    pub phi: String,
    /// The map `f: h1 → h2`.
    pub f: String,
    /// The cochain `λ ∈ Alt²(g1, h2)`.
    pub lambda: String,
}

/// A complete spec document.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecDocument {
    /// Must be [`VERSION`].
    pub version: String,
    /// Named Lie algebras.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub algebras: BTreeMap<String, AlgebraSpec>,
    /// Named linear maps.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub maps: BTreeMap<String, MapSpec>,
    /// Named action tensors.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub actions: BTreeMap<String, ActionSpec>,
    /// Named crossed modules.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub modules: BTreeMap<String, ModuleSpec>,
    /// Named alternating cochains.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub cochains: BTreeMap<String, CochainSpec>,
    /// Named bilinear maps.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub forms: BTreeMap<String, FormSpec>,
    /// Named cocycle data.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub butterflies: BTreeMap<String, ButterflySpec>,
}

fn rational(text: &str, field: impl FnOnce() -> String) -> Result<Q, CliError> {
    parse_q(text).map_err(|e| CliError::Field {
        field: field(),
        message: e.to_string(),
    })
}

fn field_error(field: String, message: impl Into<String>) -> CliError {
    CliError::Field {
        field,
        message: message.into(),
    }
}

impl SpecDocument {
    /// An empty document with the current version tag.
    pub fn new() -> Self {
        SpecDocument {
            version: VERSION.to_string(),
            ..Default::default()
        }
    }

    /// Parses a document, reporting the line, column and field path of
    /// syntax and type errors.
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut de = serde_json::Deserializer::from_str(text);
        let doc: SpecDocument = serde_path_to_error::deserialize(&mut de).map_err(|e| {
            let path = e.path().to_string();
            let inner = e.into_inner();
            CliError::Parse {
                line: inner.line(),
                column: inner.column(),
                field: path,
                message: inner.to_string(),
            }
        })?;
        if doc.version != VERSION {
            return Err(field_error(
                "version".into(),
                format!("expected {VERSION:?}, found {:?}", doc.version),
            ));
        }
        Ok(doc)
    }

    /// Pretty-printed JSON with sorted keys.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    /// Resolves a Lie algebra, checking antisymmetry and the Jacobi
    /// identity.
    pub fn algebra(&self, name: &str) -> Result<LieAlgebra, CliError> {
        let spec = lookup(&self.algebras, "algebras", name)?;
        let base = format!("algebras.{name}");
        let mut brackets = Vec::with_capacity(spec.brackets.len());
        for (n, entry) in spec.brackets.iter().enumerate() {
            let field = || format!("{base}.brackets[{n}]");
            let (i, j, k, v) = match entry {
                BracketEntry::Text(i, j, k, s) => (*i, *j, *k, rational(s, field)?),
                BracketEntry::Parts(i, j, k, num, den) => {
                    if *den == 0 {
                        return Err(field_error(field(), "zero denominator"));
                    }
                    (*i, *j, *k, crossmod_linalg::qf(*num, *den))
                }
            };
            brackets.push((i, j, k, v));
        }
        LieAlgebra::from_brackets(spec.dim, &brackets)
            .and_then(|l| l.validate().map(|_| l))
            .map_err(|e| match e {
                LieError::Shape(m) => field_error(base, m),
                other => CliError::Invalid {
                    field: base,
                    message: other.to_string(),
                },
            })
    }

    /// Resolves a matrix.
    pub fn map(&self, name: &str) -> Result<Matrix, CliError> {
        let spec = lookup(&self.maps, "maps", name)?;
        let base = format!("maps.{name}");
        if spec.entries.len() != spec.rows {
            return Err(field_error(
                format!("{base}.entries"),
                format!("expected {} rows", spec.rows),
            ));
        }
        let mut m = Matrix::zeros(spec.rows, spec.cols);
        for (r, row) in spec.entries.iter().enumerate() {
            if row.len() != spec.cols {
                return Err(field_error(
                    format!("{base}.entries[{r}]"),
                    format!("expected {} entries", spec.cols),
                ));
            }
            for (c, s) in row.iter().enumerate() {
                m[(r, c)] = rational(s, || format!("{base}.entries[{r}][{c}]"))?;
            }
        }
        Ok(m)
    }

    /// Resolves an action tensor (without checking that it is an action).
    pub fn action(&self, name: &str) -> Result<ActionTensor, CliError> {
        let spec = lookup(&self.actions, "actions", name)?;
        let base = format!("actions.{name}");
        let (na, nm) = (spec.actor_dim, spec.module_dim);
        let mut mats = vec![Matrix::zeros(nm, nm); na];
        for (n, (x, r, c, s)) in spec.entries.iter().enumerate() {
            let field = || format!("{base}.entries[{n}]");
            if *x >= na || *r >= nm || *c >= nm {
                return Err(field_error(field(), "index out of range"));
            }
            mats[*x][(*r, *c)] = rational(s, field)?;
        }
        ActionTensor::from_matrices(nm, mats).map_err(|e| field_error(base, e.to_string()))
    }

    /// Resolves and validates a crossed module.
    pub fn module(&self, name: &str) -> Result<CrossedModule, CliError> {
        let spec = lookup(&self.modules, "modules", name)?;
        let base = format!("modules.{name}");
        let h = self.algebra(&spec.h)?;
        let g = self.algebra(&spec.g)?;
        let t = self.map(&spec.t)?;
        let alpha = match &spec.alpha {
            Some(a) => self.action(a)?,
            None => ActionTensor::zero(g.dim(), h.dim()),
        };
        CrossedModule::new(h, g, t, alpha).map_err(|e| CliError::Invalid {
            field: base,
            message: e.to_string(),
        })
    }

    /// Resolves an alternating cochain.
    pub fn cochain(&self, name: &str) -> Result<AltCochain, CliError> {
        let spec = lookup(&self.cochains, "cochains", name)?;
        let base = format!("cochains.{name}");
        let (k, n, v) = (spec.degree, spec.source_dim, spec.values_dim);
        let mut values: BTreeMap<Vec<usize>, Vector> = BTreeMap::new();
        for (e, (idx, c, s)) in spec.entries.iter().enumerate() {
            let field = || format!("{base}.entries[{e}]");
            if idx.len() != k || *c >= v || idx.iter().any(|i| *i >= n) || idx.windows(2).any(|w| w[0] >= w[1]) {
                return Err(field_error(field(), "expected strictly increasing in-range indices"));
            }
            let value = rational(s, field)?;
            values.entry(idx.clone()).or_insert_with(|| vzero(v))[*c] = value;
        }
        Ok(AltCochain::from_fn(k, n, v, |idx| {
            values.get(idx).cloned().unwrap_or_else(|| vzero(v))
        }))
    }

    /// Resolves a bilinear map.
    pub fn form(&self, name: &str) -> Result<Bilinear, CliError> {
        let spec = lookup(&self.forms, "forms", name)?;
        let base = format!("forms.{name}");
        let (n, v) = (spec.source_dim, spec.values_dim);
        let mut b = Bilinear::zero(n, v);
        for (e, (i, j, c, s)) in spec.entries.iter().enumerate() {
            let field = || format!("{base}.entries[{e}]");
            if *i >= n || *j >= n || *c >= v {
                return Err(field_error(field(), "index out of range"));
            }
            b.at_mut(*i, *j)[*c] = rational(s, field)?;
        }
        Ok(b)
    }

    /// Resolves cocycle data, checking shapes but not the cocycle
    /// conditions.
    pub fn butterfly(&self, name: &str) -> Result<CocycleData, CliError> {
        let spec = lookup(&self.butterflies, "butterflies", name)?;
        let base = format!("butterflies.{name}");
        let source = self.module(&spec.source)?;
        let target = self.module(&spec.target)?;
        let phi = self.map(&spec.phi)?;
        let f = self.map(&spec.f)?;
        let lambda = self.cochain(&spec.lambda)?;
        CocycleData::new(source, target, phi, f, lambda).map_err(|e| field_error(base, e.to_string()))
    }

    /// Adds an algebra.
    pub fn add_algebra(&mut self, name: &str, l: &LieAlgebra) {
        self.algebras.insert(name.into(), l.into());
    }

    /// Adds a matrix.
    pub fn add_map(&mut self, name: &str, m: &Matrix) {
        self.maps.insert(name.into(), m.into());
    }

    /// Adds an action tensor.
    pub fn add_action(&mut self, name: &str, a: &ActionTensor) {
        self.actions.insert(name.into(), a.into());
    }

    /// Adds a crossed module together with its parts, named
    /// `name.h`, `name.g`, `name.t` and `name.alpha`.
    pub fn add_module(&mut self, name: &str, m: &CrossedModule) {
        let part = |p: &str| format!("{name}.{p}");
        self.add_algebra(&part("h"), m.h());
        self.add_algebra(&part("g"), m.g());
        self.add_map(&part("t"), m.t());
        self.add_action(&part("alpha"), m.alpha());
        self.modules.insert(
            name.into(),
            ModuleSpec {
                h: part("h"),
                g: part("g"),
                t: part("t"),
                alpha: Some(part("alpha")),
            },
        );
    }

    /// Adds an alternating cochain.
    pub fn add_cochain(&mut self, name: &str, w: &AltCochain) {
        self.cochains.insert(name.into(), w.into());
    }

    /// Adds a bilinear map.
    pub fn add_form(&mut self, name: &str, b: &Bilinear) {
        self.forms.insert(name.into(), b.into());
    }

    /// Adds cocycle data between two modules already in the document, with
    /// parts named `name.phi`, `name.f` and `name.lambda`.
    pub fn add_butterfly(&mut self, name: &str, source: &str, target: &str, d: &CocycleData) {
        let part = |p: &str| format!("{name}.{p}");
        self.add_map(&part("phi"), d.phi());
        self.add_map(&part("f"), d.f());
        self.add_cochain(&part("lambda"), d.lambda());
        self.butterflies.insert(
            name.into(),
            ButterflySpec {
                source: source.into(),
                target: target.into(),
                phi: part("phi"),
                f: part("f"),
                lambda: part("lambda"),
            },
        );
    }
}

fn lookup<'a, T>(table: &'a BTreeMap<String, T>, kind: &str, name: &str) -> Result<&'a T, CliError> {
    table.get(name).ok_or_else(|| CliError::Reference {
        field: format!("{kind}.{name}"),
        message: format!("no entry named {name:?} in {kind}"),
    })
}

fn nonzero(v: &Q) -> bool {
    *v != zero()
}

impl From<&LieAlgebra> for AlgebraSpec {
    fn from(l: &LieAlgebra) -> Self {
        let n = l.dim();
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                for (k, v) in l.bracket_basis(i, j).iter().enumerate() {
                    if nonzero(v) {
                        brackets.push(BracketEntry::Text(i, j, k, format_q(v)));
                    }
                }
            }
        }
        AlgebraSpec { dim: n, brackets }
    }
}

impl From<&Matrix> for MapSpec {
    fn from(m: &Matrix) -> Self {
        let entries = (0..m.rows())
            .map(|r| (0..m.cols()).map(|c| format_q(&m[(r, c)])).collect())
            .collect();
        MapSpec {
            rows: m.rows(),
            cols: m.cols(),
            entries,
        }
    }
}

impl From<&ActionTensor> for ActionSpec {
    fn from(a: &ActionTensor) -> Self {
        let mut entries = Vec::new();
        for (x, m) in a.matrices().iter().enumerate() {
            for r in 0..m.rows() {
                for c in 0..m.cols() {
                    if nonzero(&m[(r, c)]) {
                        entries.push((x, r, c, format_q(&m[(r, c)])));
                    }
                }
            }
        }
        ActionSpec {
            actor_dim: a.actor_dim(),
            module_dim: a.module_dim(),
            entries,
        }
    }
}

impl From<&AltCochain> for CochainSpec {
    fn from(w: &AltCochain) -> Self {
        let mut entries = Vec::new();
        for idx in combinations(w.source_dim(), w.degree()) {
            for (c, v) in w.at(&idx).iter().enumerate() {
                if nonzero(v) {
                    entries.push((idx.clone(), c, format_q(v)));
                }
            }
        }
        CochainSpec {
            degree: w.degree(),
            source_dim: w.source_dim(),
            values_dim: w.values_dim(),
            entries,
        }
    }
}

impl From<&Bilinear> for FormSpec {
    fn from(b: &Bilinear) -> Self {
        let n = b.source_dim();
        let mut entries = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for (c, x) in b.at(i, j).iter().enumerate() {
                    if nonzero(x) {
                        entries.push((i, j, c, format_q(x)));
                    }
                }
            }
        }
        FormSpec {
            source_dim: n,
            values_dim: b.values_dim(),
            entries,
        }
    }
}

//! Self-contained spec documents for the catalog examples.

use crossmod_butterfly::{connect_same_kl, identity_data, CocycleData};
use crossmod_catalog::{
    categorical_torus, cubic_module, heisenberg_extension, identity_module, matrix_aut, matrix_aut_commutator_form,
    path_truncation_module, product_module,
};
use crossmod_lie::{abelian, standard_algebra, Bilinear, LieAlgebra};
use crossmod_linalg::{parse_q, q, Matrix, Q};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::document::SpecDocument;
use crate::{computation, CliError};

/// The catalog names accepted by [`emit_catalog`].
pub const CATALOG_NAMES: &[&str] = &[
    "product",
    "torus",
    "matrix-aut",
    "heisenberg-extension",
    "cubic",
    "identity",
    "path-truncation",
];

/// A catalog example and its parameters. Unused parameters are ignored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CatalogRequest {
    /// One of [`CATALOG_NAMES`].
    pub name: String,
    /// A standard algebra such as `so3`, `heisenberg3` or `abelian(2)`.
    pub algebra: Option<String>,
    /// Dimension of `a` for `product`.
    pub a_dim: Option<usize>,
    /// Size for `torus` and `matrix-aut`.
    pub n: Option<usize>,
    /// A matrix `"r11,r12;r21,r22"`: `J` for `torus`, the form `B` for
    /// `path-truncation`.
    pub matrix: Option<String>,
    /// Truncation degree for `path-truncation`.
    pub degree: Option<usize>,
}

/// Parses `"a,b;c,d"` into a matrix of rationals.
pub fn parse_matrix(text: &str) -> Result<Matrix, CliError> {
    let rows: Vec<Vec<Q>> = text
        .split(';')
        .map(|row| row.split(',').map(|x| parse_q(x).map_err(computation)).collect())
        .collect::<Result<_, _>>()
        .map_err(|e| CliError::Usage(format!("bad matrix {text:?}: {e}")))?;
    let cols = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != cols) {
        return Err(CliError::Usage(format!("rows of {text:?} have different lengths")));
    }
    Ok(Matrix::from_fn(rows.len(), cols, |r, c| rows[r][c].clone()))
}

/// Parses `"a,b,c"` into a vector of rationals.
pub fn parse_vector(text: &str) -> Result<Vec<Q>, CliError> {
    text.split(',')
        .map(|x| parse_q(x).map_err(|e| CliError::Usage(format!("bad vector {text:?}: {e}"))))
        .collect()
}

fn algebra(req: &CatalogRequest, default: &str) -> Result<LieAlgebra, CliError> {
    let name = req.algebra.as_deref().unwrap_or(default);
    standard_algebra(name).map_err(|e| CliError::Usage(e.to_string()))
}

fn form_from_matrix(m: &Matrix) -> Bilinear {
    Bilinear::from_fn(m.rows(), 1, |i, j| vec![m[(i, j)].clone()])
}

/// Builds the spec document of a catalog example. A `torus` without a
/// matrix draws an integral `J` from the seed.
///
/// Contents:
/// * `product`: module `product` over `algebra` (default `so3`) with
///   `a_dim` (default 1), algebra `f`, identity data `identity`.
/// * `torus`: module `torus`, form `eta` (the matrix `J`), identity data.
/// * `matrix-aut`: module `matrix_aut` of `n × n` matrices (default 2) and
///   form `commutator`.
/// * `heisenberg-extension`: modules `heisenberg_extension` and `plane`
///   with the strict data `projection` between them.
/// * `cubic`, `identity`: the module of that name.
/// * `path-truncation`: module `truncation` of degree `degree` (default 2)
///   with form `B` (default zero), the product module `product`, and data
///   `to_product` and `from_product` connecting them.
pub fn emit_catalog(req: &CatalogRequest, seed: u64) -> Result<SpecDocument, CliError> {
    let mut doc = SpecDocument::new();
    let identity = |doc: &mut SpecDocument, name: &str, d: &CocycleData| doc.add_butterfly("identity", name, name, d);
    match req.name.as_str() {
        "product" => {
            let f = algebra(req, "so3")?;
            let m = product_module(&f, req.a_dim.unwrap_or(1));
            doc.add_algebra("f", &f);
            doc.add_module("product", &m);
            identity(&mut doc, "product", &identity_data(&m));
        }
        "torus" => {
            let j = match &req.matrix {
                Some(text) => parse_matrix(text)?,
                None => {
                    let n = req.n.unwrap_or(2);
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    Matrix::from_fn(n, n, |_, _| q(rng.gen_range(-5..=5)))
                }
            };
            let t = categorical_torus(&j).map_err(|e| CliError::Usage(e.to_string()))?;
            doc.add_module("torus", &t.module);
            doc.add_form("eta", &t.eta);
            identity(&mut doc, "torus", &identity_data(&t.module));
        }
        "matrix-aut" => {
            let n = req.n.unwrap_or(2);
            if n == 0 {
                return Err(CliError::Usage("n must be positive".into()));
            }
            let m = matrix_aut(n);
            doc.add_module("matrix_aut", &m);
            doc.add_form("commutator", &matrix_aut_commutator_form(&m).map_err(computation)?);
        }
        "heisenberg-extension" => {
            let m = heisenberg_extension();
            let plane = product_module(&abelian(2), 1);
            let on_g = Matrix::from_fn(2, 3, |r, c| if r == c { q(1) } else { q(0) });
            let on_h = Matrix::from_fn(1, 2, |_, c| if c == 1 { q(1) } else { q(0) });
            let lambda = crossmod_cochains::AltCochain::zero(2, 3, 1);
            let d = CocycleData::validated(m.clone(), plane.clone(), on_g, on_h, lambda).map_err(computation)?;
            doc.add_module("heisenberg_extension", &m);
            doc.add_module("plane", &plane);
            doc.add_butterfly("projection", "heisenberg_extension", "plane", &d);
        }
        "cubic" => doc.add_module("cubic", &cubic_module()),
        "identity" => doc.add_module("identity", &identity_module(&algebra(req, "so3")?)),
        "path-truncation" => {
            let f = algebra(req, "so3")?;
            let b = match &req.matrix {
                Some(text) => form_from_matrix(&parse_matrix(text)?),
                None => Bilinear::zero(f.dim(), 1),
            };
            let m =
                path_truncation_module(&f, &b, req.degree.unwrap_or(2)).map_err(|e| CliError::Usage(e.to_string()))?;
            let p = product_module(&f, b.values_dim());
            let (u1, u2) = (m.default_splitting(), p.default_splitting());
            let there = connect_same_kl(&m, &u1, &p, &u2).map_err(computation)?;
            let back = connect_same_kl(&p, &u2, &m, &u1).map_err(computation)?;
            doc.add_algebra("f", &f);
            doc.add_form("B", &b);
            doc.add_module("truncation", &m);
            doc.add_module("product", &p);
            if let (Some(there), Some(back)) = (there, back) {
                doc.add_butterfly("to_product", "truncation", "product", &there);
                doc.add_butterfly("from_product", "product", "truncation", &back);
            }
        }
        other => {
            return Err(CliError::Usage(format!(
                "unknown catalog name {other:?}; expected one of {}",
                CATALOG_NAMES.join(", ")
            )))
        }
    }
    Ok(doc)
}

use super::complex::{ComplexKind, CyclicComplexData};
use super::require_characteristic_zero;
use crate::error::{Error, Result};
use crate::hopf::HopfData;
use crate::linalg::{annihilator, column_span, homology_dims as homology_dim, inverse, kernel, solve_in_span};
use crate::matrix::Matrix;
use crate::reps::{ModuleRep, Side};
use crate::report::DimensionTable;

pub type HomologyTable = DimensionTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HomologyMode {
    Hochschild,
    ConnesLambda,
}

impl std::str::FromStr for HomologyMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "hochschild" => Ok(HomologyMode::Hochschild),
            "connes" | "connes-lambda" | "conneslambda" => Ok(HomologyMode::ConnesLambda),
            _ => Err(Error::Parse(format!("unknown homology mode {s:?}"))),
        }
    }
}

fn alternating(field: crate::field::FieldSpec, maps: &[Matrix], rows: usize, cols: usize) -> Matrix {
    let mut acc = Matrix::zeros(field, rows, cols);
    for (i, m) in maps.iter().enumerate() {
        let sign = if i % 2 == 0 { field.one() } else { -field.one() };
        acc.add_scaled(&sign, m);
    }
    acc
}

/// Hochschild differentials: `b[n]` has source degree `n` (cyclic) or target degree `n` (cocyclic).
fn differentials(d: &CyclicComplexData) -> Vec<Matrix> {
    let f = d.field;
    let dims = d.dims();
    (0..=d.max_degree)
        .map(|n| match (d.kind, n) {
            (ComplexKind::CyclicOfCoalgebra, 0) => Matrix::zeros(f, 0, dims[0]),
            (ComplexKind::CocyclicOfAlgebra, 0) => Matrix::zeros(f, dims[0], 0),
            (ComplexKind::CyclicOfCoalgebra, n) => alternating(f, &d.faces[n], dims[n - 1], dims[n]),
            (ComplexKind::CocyclicOfAlgebra, n) => alternating(f, &d.faces[n], dims[n], dims[n - 1]),
        })
        .collect()
}

fn lambda(d: &CyclicComplexData, n: usize) -> Matrix {
    let t = &d.cyclic[n];
    if n.is_multiple_of(2) {
        t.clone()
    } else {
        t.neg()
    }
}

/// Homology dimensions in degrees `0..max_degree`; the top degree of the build
/// supplies only the incoming differential.
pub fn homology_dims(d: &CyclicComplexData, mode: HomologyMode) -> Result<HomologyTable> {
    let b = differentials(d);
    let label = match (d.kind, mode) {
        (ComplexKind::CyclicOfCoalgebra, HomologyMode::Hochschild) => "HH_n",
        (ComplexKind::CyclicOfCoalgebra, HomologyMode::ConnesLambda) => "HC_n",
        (ComplexKind::CocyclicOfAlgebra, HomologyMode::Hochschild) => "HH^n",
        (ComplexKind::CocyclicOfAlgebra, HomologyMode::ConnesLambda) => "HC^n",
    };
    let b = match mode {
        HomologyMode::Hochschild => b,
        HomologyMode::ConnesLambda => {
            require_characteristic_zero(d.field, "the Connes λ-complex")?;
            match d.kind {
                ComplexKind::CyclicOfCoalgebra => lambda_quotient(d, &b)?,
                ComplexKind::CocyclicOfAlgebra => lambda_invariants(d, &b)?,
            }
        }
    };
    let mut dims = Vec::new();
    for n in 0..d.max_degree {
        let h = match d.kind {
            ComplexKind::CyclicOfCoalgebra => homology_dim(&b[n + 1], &b[n])?,
            ComplexKind::CocyclicOfAlgebra => homology_dim(&b[n], &b[n + 1])?,
        };
        dims.push((n, h));
    }
    Ok(DimensionTable { label: label.into(), dims })
}

/// Induced differentials on `C_n / im(1 − λ_n)`.
fn lambda_quotient(d: &CyclicComplexData, b: &[Matrix]) -> Result<Vec<Matrix>> {
    let f = d.field;
    let mut proj: Vec<Matrix> = Vec::new();
    let mut out = Vec::new();
    for n in 0..=d.max_degree {
        let dim = d.bases[n].dim();
        let image = column_span(&Matrix::identity(f, dim).sub(&lambda(d, n)));
        let p = annihilator(&image.basis);
        // right inverse Pᵀ(PPᵀ)⁻¹ exists in characteristic 0
        let pt = p.transpose();
        let section = pt.mul(&inverse(&p.mul(&pt))?);
        if n == 0 {
            out.push(Matrix::zeros(f, 0, p.rows()));
        } else {
            let pushed = proj[n - 1].mul(&b[n]).mul(&image.basis);
            if let Some((_, column, _)) = pushed.nonzero_entries().next() {
                return Err(Error::CompositionNotZero { column });
            }
            out.push(proj[n - 1].mul(&b[n]).mul(&section));
        }
        proj.push(p);
    }
    Ok(out)
}

/// Restriction of the differentials to `ker(1 − λ_n)`.
fn lambda_invariants(d: &CyclicComplexData, b: &[Matrix]) -> Result<Vec<Matrix>> {
    let f = d.field;
    let inv: Vec<Matrix> = (0..=d.max_degree)
        .map(|n| kernel(&Matrix::identity(f, d.bases[n].dim()).sub(&lambda(d, n))).basis)
        .collect();
    (0..=d.max_degree)
        .map(|n| {
            if n == 0 {
                return Ok(Matrix::zeros(f, inv[0].cols(), 0));
            }
            solve_in_span(&inv[n], &b[n].mul(&inv[n - 1])).map_err(|column| Error::CompositionNotZero { column })
        })
        .collect()
}

/// `N ⊗_H X` as a quotient of `N ⊗ X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorQuotient {
    pub dim: usize,
    /// `dim × (dim N · dim X)`; rows are coordinates on the quotient.
    pub projection: Matrix,
}

/// Quotient of `N ⊗ X` by `n·h ⊗ ξ − n ⊗ h·ξ`, for a right module `N` and left module `X`.
pub fn tensor_over_h(h: &HopfData, n: &ModuleRep, x: &ModuleRep) -> Result<TensorQuotient> {
    if n.side != Side::Right || x.side != Side::Left {
        return Err(Error::ShapeMismatch("tensor over H needs a right module and a left module".into()));
    }
    if n.action.len() != h.dim() || x.action.len() != h.dim() {
        return Err(Error::ShapeMismatch("action matrices do not match the Hopf algebra".into()));
    }
    let f = h.field();
    let mut rel = Matrix::zeros(f, n.dim * x.dim, 0);
    for i in 0..h.dim() {
        let block = n.action[i].kron(&Matrix::identity(f, x.dim)).sub(&Matrix::identity(f, n.dim).kron(&x.action[i]));
        rel = rel.hstack(&block);
    }
    let projection = annihilator(&rel);
    Ok(TensorQuotient { dim: projection.rows(), projection })
}

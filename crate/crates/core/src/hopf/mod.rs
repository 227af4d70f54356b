//! Finite-dimensional algebras, coalgebras and Hopf algebras by structure constants.

mod examples;

use std::sync::{Arc, OnceLock};

pub use examples::{build_named_example, group_algebra, sweedler_h4, trivial, NAMED_EXAMPLES};

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg;
use crate::matrix::{tensor_digits, tensor_index, Matrix};
use crate::report::Report;

/// A sparse term `scalar · e_{i0} ⊗ … ⊗ e_{ik}`.
pub type Term = (Scalar, Vec<usize>);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoalgebraData {
    pub dim: usize,
    /// `Δ : C → C ⊗ C` as a `dim² × dim` matrix.
    pub comul: Matrix,
    /// `ε : C → k` as a `1 × dim` matrix.
    pub counit: Matrix,
}

impl CoalgebraData {
    /// `comul` entries `(i, j, k, s)` mean `Δ(e_i)` contains `s · e_j ⊗ e_k`.
    pub fn from_sparse(field: FieldSpec, dim: usize, comul: &[(usize, usize, usize, Scalar)], counit: Vec<Scalar>) -> Result<Self> {
        if counit.len() != dim {
            return Err(Error::ShapeMismatch(format!("counit has {} entries for dimension {dim}", counit.len())));
        }
        let mut m = Matrix::zeros(field, dim * dim, dim);
        for (i, j, k, s) in comul {
            if *i >= dim || *j >= dim || *k >= dim {
                return Err(Error::ShapeMismatch(format!("comultiplication index ({i},{j},{k}) out of range")));
            }
            m.add_at(j * dim + k, *i, s);
        }
        Ok(CoalgebraData { dim, comul: m, counit: Matrix::from_fn(field, 1, dim, |_, c| counit[c].clone()) })
    }

    pub fn field(&self) -> FieldSpec {
        self.comul.field()
    }

    /// The co-opposite coalgebra (`Δᵒᵖ = τ∘Δ`).
    pub fn co_opposite(&self) -> CoalgebraData {
        let swap = Matrix::swap(self.field(), self.dim, self.dim);
        CoalgebraData { dim: self.dim, comul: swap.mul(&self.comul), counit: self.counit.clone() }
    }

    pub fn counit_of(&self, i: usize) -> &Scalar {
        self.counit.get(0, i)
    }

    /// Sparse terms of `Δ(e_i)`.
    pub fn coproduct_terms(&self, i: usize) -> Vec<(Scalar, usize, usize)> {
        (0..self.dim * self.dim)
            .filter(|&r| !self.comul.get(r, i).is_zero())
            .map(|r| (self.comul.get(r, i).clone(), r / self.dim, r % self.dim))
            .collect()
    }

    /// `Δ^{(legs)}` as a `dim^legs × dim` matrix; `legs = 1` is the identity.
    pub fn coproduct_power(&self, legs: usize) -> Matrix {
        assert!(legs >= 1);
        let field = self.field();
        let mut acc = Matrix::identity(field, self.dim);
        for k in 2..=legs {
            let rest = self.dim.pow(k as u32 - 2);
            acc = self.comul.kron(&Matrix::identity(field, rest)).mul(&acc);
        }
        acc
    }

    /// Sparse terms of `Δ^{(legs)}(e_i)`.
    pub fn iterated_terms(&self, i: usize, legs: usize) -> Vec<Term> {
        let p = self.coproduct_power(legs);
        (0..p.rows())
            .filter(|&r| !p.get(r, i).is_zero())
            .map(|r| (p.get(r, i).clone(), tensor_digits(r, self.dim, legs)))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraData {
    pub dim: usize,
    /// `m : A ⊗ A → A` as a `dim × dim²` matrix.
    pub mul: Matrix,
    /// Coordinates of `1_A` as a `dim × 1` matrix.
    pub unit: Matrix,
}

impl AlgebraData {
    /// `mul` entries `(i, j, k, s)` mean `e_i e_j` contains `s · e_k`.
    pub fn from_sparse(field: FieldSpec, dim: usize, mul: &[(usize, usize, usize, Scalar)], unit: Vec<Scalar>) -> Result<Self> {
        if unit.len() != dim {
            return Err(Error::ShapeMismatch(format!("unit has {} entries for dimension {dim}", unit.len())));
        }
        let mut m = Matrix::zeros(field, dim, dim * dim);
        for (i, j, k, s) in mul {
            if *i >= dim || *j >= dim || *k >= dim {
                return Err(Error::ShapeMismatch(format!("multiplication index ({i},{j},{k}) out of range")));
            }
            m.add_at(*k, i * dim + j, s);
        }
        Ok(AlgebraData { dim, mul: m, unit: Matrix::column_vector(field, &unit) })
    }

    pub fn field(&self) -> FieldSpec {
        self.mul.field()
    }

    pub fn unit_vector(&self) -> Vec<Scalar> {
        self.unit.column(0)
    }

    /// Matrix of `a ↦ e_i a`.
    pub fn left_mult(&self, i: usize) -> Matrix {
        let d = self.dim;
        Matrix::from_fn(self.field(), d, d, |k, j| self.mul.get(k, i * d + j).clone())
    }

    /// Matrix of `a ↦ a e_i`.
    pub fn right_mult(&self, i: usize) -> Matrix {
        let d = self.dim;
        Matrix::from_fn(self.field(), d, d, |k, j| self.mul.get(k, j * d + i).clone())
    }

    /// Matrix of `a ↦ x a` for an arbitrary element `x`.
    pub fn left_mult_by(&self, x: &[Scalar]) -> Matrix {
        self.mul.mul(&Matrix::column_vector(self.field(), x).kron(&Matrix::identity(self.field(), self.dim)))
    }

    /// Matrix of `a ↦ a x`.
    pub fn right_mult_by(&self, x: &[Scalar]) -> Matrix {
        self.mul.mul(&Matrix::identity(self.field(), self.dim).kron(&Matrix::column_vector(self.field(), x)))
    }

    pub fn product(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        self.left_mult_by(a).mul_vec(b)
    }

    /// Structure constants of `e_i e_j` as a coordinate vector.
    pub fn basis_product(&self, i: usize, j: usize) -> Vec<Scalar> {
        self.mul.column(i * self.dim + j)
    }
}

/// A Hopf algebra with bijective antipode.
#[derive(Clone, Debug)]
pub struct HopfData {
    pub name: Option<String>,
    pub algebra: AlgebraData,
    pub coalgebra: CoalgebraData,
    pub antipode: Matrix,
    pub antipode_inv: Matrix,
    triple: Arc<OnceLock<Vec<Vec<Term>>>>,
}

impl PartialEq for HopfData {
    fn eq(&self, other: &Self) -> bool {
        self.algebra == other.algebra
            && self.coalgebra == other.coalgebra
            && self.antipode == other.antipode
            && self.antipode_inv == other.antipode_inv
    }
}

impl HopfData {
    pub fn new(algebra: AlgebraData, coalgebra: CoalgebraData, antipode: Matrix, antipode_inv: Matrix) -> Self {
        HopfData { name: None, algebra, coalgebra, antipode, antipode_inv, triple: Arc::default() }
    }

    /// As [`HopfData::new`], computing `S⁻¹` by exact inversion.
    pub fn with_antipode(algebra: AlgebraData, coalgebra: CoalgebraData, antipode: Matrix) -> Result<Self> {
        let inv = antipode_inverse(&antipode)?;
        Ok(Self::new(algebra, coalgebra, antipode, inv))
    }

    pub fn named(mut self, name: &str) -> Self {
        self.name = Some(name.to_string());
        self
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim
    }

    pub fn field(&self) -> FieldSpec {
        self.algebra.field()
    }

    pub fn basis(&self, i: usize) -> Vec<Scalar> {
        let f = self.field();
        (0..self.dim()).map(|k| if k == i { f.one() } else { f.zero() }).collect()
    }

    pub fn unit_vector(&self) -> Vec<Scalar> {
        self.algebra.unit_vector()
    }

    pub fn counit_of(&self, i: usize) -> &Scalar {
        self.coalgebra.counit_of(i)
    }

    pub fn counit_value(&self, v: &[Scalar]) -> Scalar {
        self.coalgebra.counit.mul_vec(v).pop().unwrap()
    }

    /// Cached `Δ²(e_i)` terms `h₁ ⊗ h₂ ⊗ h₃`.
    pub fn triple_coproduct(&self, i: usize) -> &[Term] {
        &self.triple.get_or_init(|| (0..self.dim()).map(|j| self.coalgebra.iterated_terms(j, 3)).collect())[i]
    }

    pub fn coproduct_terms(&self, i: usize) -> Vec<(Scalar, usize, usize)> {
        self.coalgebra.coproduct_terms(i)
    }

    /// Matrix of `h' ↦ a h' b` for elements `a`, `b`.
    pub fn sandwich(&self, a: &[Scalar], b: &[Scalar]) -> Matrix {
        self.algebra.left_mult_by(a).mul(&self.algebra.right_mult_by(b))
    }

    pub fn apply_antipode(&self, i: usize) -> Vec<Scalar> {
        self.antipode.column(i)
    }

    pub fn apply_antipode_inv(&self, i: usize) -> Vec<Scalar> {
        self.antipode_inv.column(i)
    }

    /// Left regular representation: one matrix per basis element.
    pub fn left_regular(&self) -> Vec<Matrix> {
        (0..self.dim()).map(|i| self.algebra.left_mult(i)).collect()
    }

    pub fn is_cocommutative(&self) -> bool {
        let swap = Matrix::swap(self.field(), self.dim(), self.dim());
        swap.mul(&self.coalgebra.comul) == self.coalgebra.comul
    }
}

/// Exact inverse of an antipode matrix.
pub fn antipode_inverse(s: &Matrix) -> Result<Matrix> {
    linalg::inverse(s)
}

/// Locator mapping a `dim^out × dim^inp` matrix entry to `(input tuple, output tuple)`.
pub(crate) fn tensor_locator(dim: usize, inp: usize, out: usize) -> impl Fn(usize, usize) -> (Vec<usize>, Vec<String>) {
    move |r, c| {
        let mut idx = tensor_digits(c, dim.max(1), inp);
        idx.extend(tensor_digits(r, dim.max(1), out));
        let mut labels: Vec<String> = (0..inp).map(|k| format!("in{k}")).collect();
        labels.extend((0..out).map(|k| format!("out{k}")));
        (idx, labels)
    }
}

fn check_shapes(h: &HopfData) -> Result<()> {
    let n = h.dim();
    let a = &h.algebra;
    let c = &h.coalgebra;
    let shapes = [
        ("mul", a.mul.rows(), a.mul.cols(), n, n * n),
        ("unit", a.unit.rows(), a.unit.cols(), n, 1),
        ("comul", c.comul.rows(), c.comul.cols(), n * n, n),
        ("counit", c.counit.rows(), c.counit.cols(), 1, n),
        ("antipode", h.antipode.rows(), h.antipode.cols(), n, n),
        ("antipode_inv", h.antipode_inv.rows(), h.antipode_inv.cols(), n, n),
    ];
    if c.dim != n {
        return Err(Error::ShapeMismatch(format!("algebra dim {n} but coalgebra dim {}", c.dim)));
    }
    for (name, r, cc, er, ec) in shapes {
        if (r, cc) != (er, ec) {
            return Err(Error::ShapeMismatch(format!("{name} is {r}x{cc}, expected {er}x{ec}")));
        }
    }
    Ok(())
}

/// Checks every Hopf algebra axiom exactly; each failed verdict carries a witness.
pub fn check_hopf_axioms(h: &HopfData) -> Result<Report> {
    check_shapes(h)?;
    let f = h.field();
    let n = h.dim();
    let id = Matrix::identity(f, n);
    let m = &h.algebra.mul;
    let u = &h.algebra.unit;
    let d = &h.coalgebra.comul;
    let e = &h.coalgebra.counit;
    let s = &h.antipode;
    let si = &h.antipode_inv;
    let one = Matrix::identity(f, 1);
    let mut rep = Report::new("hopf");

    rep.compare("associativity", &m.mul(&m.kron(&id)), &m.mul(&id.kron(m)), tensor_locator(n, 3, 1));
    rep.compare("left unitality", &m.mul(&u.kron(&id)), &id, tensor_locator(n, 1, 1));
    rep.compare("right unitality", &m.mul(&id.kron(u)), &id, tensor_locator(n, 1, 1));
    rep.compare("coassociativity", &d.kron(&id).mul(d), &id.kron(d).mul(d), tensor_locator(n, 1, 3));
    rep.compare("left counit", &e.kron(&id).mul(d), &id, tensor_locator(n, 1, 1));
    rep.compare("right counit", &id.kron(e).mul(d), &id, tensor_locator(n, 1, 1));

    let mid_swap = id.kron(&Matrix::swap(f, n, n)).kron(&id);
    let delta_mul = m.kron(m).mul(&mid_swap).mul(&d.kron(d));
    rep.compare("comultiplication multiplicative", &d.mul(m), &delta_mul, tensor_locator(n, 2, 2));
    rep.compare("counit multiplicative", &e.mul(m), &e.kron(e), tensor_locator(n, 2, 0));
    rep.compare("comultiplication unital", &d.mul(u), &u.kron(u), tensor_locator(n, 0, 2));
    rep.compare("counit unital", &e.mul(u), &one, tensor_locator(n, 0, 0));

    let ue = u.mul(e);
    rep.compare("left antipode", &m.mul(&s.kron(&id)).mul(d), &ue, tensor_locator(n, 1, 1));
    rep.compare("right antipode", &m.mul(&id.kron(s)).mul(d), &ue, tensor_locator(n, 1, 1));
    rep.compare("antipode inverse (right)", &s.mul(si), &id, tensor_locator(n, 1, 1));
    rep.compare("antipode inverse (left)", &si.mul(s), &id, tensor_locator(n, 1, 1));

    let d_op = Matrix::swap(f, n, n).mul(d);
    rep.compare("co-opposite left antipode", &m.mul(&si.kron(&id)).mul(&d_op), &ue, tensor_locator(n, 1, 1));
    rep.compare("co-opposite right antipode", &m.mul(&id.kron(si)).mul(&d_op), &ue, tensor_locator(n, 1, 1));
    Ok(rep)
}

/// Diagonal action of `e_i` on `X^{⊗legs}`, given the action matrices on `X`.
pub fn diagonal_action(h: &HopfData, action: &[Matrix], i: usize, legs: usize) -> Matrix {
    let f = h.field();
    let dx = action.first().map_or(0, Matrix::rows);
    if legs == 0 {
        return Matrix::identity(f, 1).scale(h.counit_of(i));
    }
    let mut acc = Matrix::zeros(f, dx.pow(legs as u32), dx.pow(legs as u32));
    for (coef, idx) in h.coalgebra.iterated_terms(i, legs) {
        let factors: Vec<&Matrix> = idx.iter().map(|&k| &action[k]).collect();
        acc.add_scaled(&coef, &Matrix::kron_all(f, &factors));
    }
    acc
}

/// Flat index of a basis tuple of `H^{⊗k}`.
pub fn tuple_index(h: &HopfData, digits: &[usize]) -> usize {
    tensor_index(digits, h.dim())
}

//! Modules, comodules and contramodules given by matrices.
//!
//! A contramodule structure map `α : Hom(C, M) → M` is stored as a
//! `dim M × (dim C · dim M)` matrix in the crate-wide hom-basis convention:
//! column `c · dim M + m` is the image of the map sending `e_c ↦ e_m` and every
//! other basis vector to zero.

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::hopf::{AlgebraData, CoalgebraData, HopfData};
use crate::matrix::{tensor_digits, Matrix};
use crate::report::{Erratum, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

/// A module over an algebra; `action[i]` is the matrix of acting by `e_i`.
///
/// For a right module `m · e_i = action[i] · m`, so `action(ab) = action(b) action(a)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleRep {
    pub dim: usize,
    pub side: Side,
    pub action: Vec<Matrix>,
}

impl ModuleRep {
    pub fn new(side: Side, action: Vec<Matrix>) -> Result<Self> {
        let dim = action.first().map_or(0, Matrix::rows);
        if action.iter().any(|a| a.rows() != dim || a.cols() != dim) {
            return Err(Error::ShapeMismatch("action matrices must be square of one size".into()));
        }
        Ok(ModuleRep { dim, side, action })
    }

    /// `h · m = ε(h) m` on a space of dimension `dim`.
    pub fn trivial(h: &HopfData, side: Side, dim: usize) -> Self {
        let f = h.field();
        let action = (0..h.dim()).map(|i| Matrix::identity(f, dim).scale(h.counit_of(i))).collect();
        ModuleRep { dim, side, action }
    }

    /// `H` acting on itself by multiplication.
    pub fn regular(h: &HopfData, side: Side) -> Self {
        let action = (0..h.dim())
            .map(|i| match side {
                Side::Left => h.algebra.left_mult(i),
                Side::Right => h.algebra.right_mult(i),
            })
            .collect();
        ModuleRep { dim: h.dim(), side, action }
    }

    /// One-dimensional module through a character `χ` given on the basis.
    pub fn character(side: Side, values: &[Scalar]) -> Self {
        let action = values
            .iter()
            .map(|v| Matrix::from_fn(v.field(), 1, 1, |_, _| v.clone()))
            .collect();
        ModuleRep { dim: 1, side, action }
    }

    pub fn field(&self) -> FieldSpec {
        self.action[0].field()
    }

    /// Matrix of acting by an arbitrary element.
    pub fn act(&self, elem: &[Scalar]) -> Matrix {
        let mut acc = Matrix::zeros(self.field(), self.dim, self.dim);
        for (c, a) in elem.iter().zip(&self.action) {
            acc.add_scaled(c, a);
        }
        acc
    }
}

/// A comodule. A left coaction `N → C ⊗ N` is a `(dim C · dim N) × dim N`
/// matrix with the `C` index major; a right coaction `N → N ⊗ C` has the `N`
/// index major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComoduleRep {
    pub dim: usize,
    pub side: Side,
    pub coaction: Matrix,
}

impl ComoduleRep {
    /// `x ↦ c ⊗ x` for a group-like `c` (left), or `x ↦ x ⊗ c` (right).
    pub fn grouplike(side: Side, dim_c: usize, c: &[Scalar], dim: usize) -> Self {
        let f = c[0].field();
        let mut m = Matrix::zeros(f, dim_c * dim, dim);
        for x in 0..dim {
            for (k, v) in c.iter().enumerate() {
                let r = match side {
                    Side::Left => k * dim + x,
                    Side::Right => x * dim_c + k,
                };
                m.set(r, x, v.clone());
            }
        }
        ComoduleRep { dim, side, coaction: m }
    }
}

/// A contramodule over a coalgebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContraRep {
    pub dim: usize,
    pub side: Side,
    pub over: CoalgebraData,
    pub alpha: Matrix,
}

impl ContraRep {
    /// `α(f) = f(c)` on a space of dimension `dim`.
    pub fn evaluation(over: &CoalgebraData, side: Side, c: &[Scalar], dim: usize) -> Self {
        let f = over.field();
        let mut alpha = Matrix::zeros(f, dim, over.dim * dim);
        for (k, v) in c.iter().enumerate() {
            for m in 0..dim {
                alpha.set(m, k * dim + m, v.clone());
            }
        }
        ContraRep { dim, side, over: over.clone(), alpha }
    }

    pub fn field(&self) -> FieldSpec {
        self.alpha.field()
    }
}

/// The currying isomorphisms between `Hom(X, Hom(Y, M))` and maps out of a
/// tensor product. `Theta` lands in `Hom(X ⊗ Y, M)` with
/// `Θ(f)(x ⊗ y) = f(x)(y)`; `ThetaPrime` lands in `Hom(Y ⊗ X, M)` with
/// `Θ′(f)(y ⊗ x) = f(x)(y)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Curry {
    Theta,
    ThetaInverse,
    ThetaPrime,
    ThetaPrimeInverse,
}

/// Permutation matrix of a currying isomorphism for `dims = (dim X, dim Y, dim M)`.
pub fn curry_permutation(direction: Curry, dims: (usize, usize, usize)) -> Matrix {
    let (dx, dy, dm) = dims;
    let f = FieldSpec::Rationals;
    let n = dx * dy * dm;
    match direction {
        Curry::Theta | Curry::ThetaInverse => Matrix::identity(f, n),
        Curry::ThetaPrime | Curry::ThetaPrimeInverse => {
            let mut p = Matrix::zeros(f, n, n);
            for x in 0..dx {
                for y in 0..dy {
                    for m in 0..dm {
                        let src = (x * dy + y) * dm + m;
                        let dst = (y * dx + x) * dm + m;
                        if direction == Curry::ThetaPrime {
                            p.set(dst, src, f.one());
                        } else {
                            p.set(src, dst, f.one());
                        }
                    }
                }
            }
            p
        }
    }
}

/// Applies a currying isomorphism to the columns of `f`.
pub fn curry_uncurry(direction: Curry, f: &Matrix, dims: (usize, usize, usize)) -> Result<Matrix> {
    let n = dims.0 * dims.1 * dims.2;
    if f.rows() != n {
        return Err(Error::ShapeMismatch(format!("hom vector of length {} for dims {dims:?}", f.rows())));
    }
    let field = f.field();
    let p = curry_permutation(direction, dims);
    let perm = Matrix::from_fn(field, n, n, |r, c| if p.get(r, c).is_one() { field.one() } else { field.zero() });
    Ok(perm.mul(f))
}

fn check_contra_shapes(m: &ContraRep) -> Result<()> {
    let (dc, dm) = (m.over.dim, m.dim);
    if m.alpha.rows() != dm || m.alpha.cols() != dc * dm {
        return Err(Error::ShapeMismatch(format!(
            "alpha is {}x{}, expected {dm}x{}",
            m.alpha.rows(),
            m.alpha.cols(),
            dc * dm
        )));
    }
    Ok(())
}

/// Checks the associativity and counit laws of a contramodule.
///
/// Left contramodules are checked as right contramodules over the co-opposite
/// coalgebra.
pub fn check_contramodule(m: &ContraRep) -> Result<Report> {
    check_contra_shapes(m)?;
    let coalg = match m.side {
        Side::Right => m.over.clone(),
        Side::Left => m.over.co_opposite(),
    };
    let f = m.field();
    let (dc, dm) = (coalg.dim, m.dim);
    let alpha = &m.alpha;
    let id_m = Matrix::identity(f, dm);
    let mut rep = Report::new("contramodule");
    rep.note(Erratum::CurryConvention);

    // α ∘ Hom(C, α) ∘ Θ⁻¹  versus  α ∘ Hom(Δ, M), both on Hom(C ⊗ C, M)
    let theta_inv = curry_uncurry(Curry::ThetaInverse, &Matrix::identity(f, dc * dc * dm), (dc, dc, dm))?;
    let lhs = alpha.mul(&Matrix::identity(f, dc).kron(alpha)).mul(&theta_inv);
    let rhs = alpha.mul(&coalg.comul.transpose().kron(&id_m));
    rep.compare("associativity", &lhs, &rhs, |r, c| {
        let mut idx = tensor_digits(c / dm.max(1), dc.max(1), 2);
        idx.push(c % dm.max(1));
        idx.push(r);
        (idx, vec!["c".into(), "c'".into(), "m".into(), "out".into()])
    });
    let counit = alpha.mul(&coalg.counit.transpose().kron(&id_m));
    rep.compare("counit", &counit, &id_m, |r, c| (vec![c, r], vec!["m".into(), "out".into()]));
    Ok(rep)
}

fn locate4(i: usize, j: usize, r: usize, c: usize) -> (Vec<usize>, Vec<String>) {
    (vec![i, j, r, c], vec!["i".into(), "j".into(), "row".into(), "col".into()])
}

/// Unit and associativity laws of a module.
pub fn check_module(rep: &ModuleRep, alg: &AlgebraData) -> Result<Report> {
    if rep.action.len() != alg.dim {
        return Err(Error::ShapeMismatch(format!("{} action matrices for an algebra of dim {}", rep.action.len(), alg.dim)));
    }
    let f = alg.field();
    let mut out = Report::new("module");
    out.compare("unit", &rep.act(&alg.unit_vector()), &Matrix::identity(f, rep.dim), |r, c| {
        (vec![r, c], vec!["row".into(), "col".into()])
    });
    let mut witness = None;
    'outer: for i in 0..alg.dim {
        for j in 0..alg.dim {
            let prod = rep.act(&alg.basis_product(i, j));
            let composite = match rep.side {
                Side::Left => rep.action[i].mul(&rep.action[j]),
                Side::Right => rep.action[j].mul(&rep.action[i]),
            };
            if let Some(w) = crate::report::matrix_witness(&composite, &prod, |r, c| locate4(i, j, r, c)) {
                witness = Some(w);
                break 'outer;
            }
        }
    }
    out.record("associativity", witness);
    Ok(out)
}

/// Counit and coassociativity laws of a comodule.
pub fn check_comodule(rep: &ComoduleRep, coalg: &CoalgebraData) -> Result<Report> {
    let (dc, dn) = (coalg.dim, rep.dim);
    if rep.coaction.rows() != dc * dn || rep.coaction.cols() != dn {
        return Err(Error::ShapeMismatch(format!(
            "coaction is {}x{}, expected {}x{dn}",
            rep.coaction.rows(),
            rep.coaction.cols(),
            dc * dn
        )));
    }
    let f = coalg.field();
    let id_n = Matrix::identity(f, dn);
    let id_c = Matrix::identity(f, dc);
    let rho = &rep.coaction;
    let mut out = Report::new("comodule");
    let loc = |r: usize, c: usize| (vec![c, r], vec!["in".into(), "out".into()]);
    match rep.side {
        Side::Left => {
            out.compare("coassociativity", &coalg.comul.kron(&id_n).mul(rho), &id_c.kron(rho).mul(rho), loc);
            out.compare("counit", &coalg.counit.kron(&id_n).mul(rho), &id_n, loc);
        }
        Side::Right => {
            out.compare("coassociativity", &rho.kron(&id_c).mul(rho), &id_n.kron(&coalg.comul).mul(rho), loc);
            out.compare("counit", &id_n.kron(&coalg.counit).mul(rho), &id_n, loc);
        }
    }
    Ok(out)
}

/// Either kind of representation, for the combined checker.
pub enum RepRef<'a> {
    Module(&'a ModuleRep, &'a AlgebraData),
    Comodule(&'a ComoduleRep, &'a CoalgebraData),
}

pub fn check_module_comodule(r: RepRef<'_>) -> Result<Report> {
    match r {
        RepRef::Module(m, a) => check_module(m, a),
        RepRef::Comodule(c, co) => check_comodule(c, co),
    }
}

/// The dual contramodule `N* ` of a comodule, with `α = Hom(ρ, k)`; sides flip.
pub fn dualize_comodule(n: &ComoduleRep, over: &CoalgebraData) -> Result<ContraRep> {
    let checked = check_comodule(n, over)?;
    if let Some(v) = checked.failures().next() {
        return Err(Error::InvalidComodule(format!("{} fails", v.name)));
    }
    let (dc, dn) = (over.dim, n.dim);
    let rho = &n.coaction;
    let alpha = match n.side {
        // α(f)(x) = f(x₍₋₁₎ ⊗ x₍₀₎) and f(c ⊗ x) = F(c)(x)
        Side::Left => rho.transpose(),
        // α(f)(x) = f(x₍₀₎ ⊗ x₍₁₎) and f(x ⊗ c) = F(c)(x)
        Side::Right => Matrix::from_fn(rho.field(), dn, dc * dn, |j, col| {
            let (c, x) = (col / dn, col % dn);
            rho.get(x * dc + c, j).clone()
        }),
    };
    Ok(ContraRep { dim: dn, side: n.side.flip(), over: over.clone(), alpha })
}

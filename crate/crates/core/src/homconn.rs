//! The coring `H ⊗ H`, its differential graded algebra and hom-connections.
//!
//! Coordinates: `H⁺ = ker ε` has the basis `b_i = e_i − ε(e_i)1` for `i ≠ p`,
//! `p` the first index where `1_H` has a nonzero coefficient. `Ωⁿ ≅ (H⁺)^{⊗n} ⊗ H`
//! uses left-major tensor indices. A right `H`-linear map on `Ωⁿ` is stored by
//! its values on `(H⁺)^{⊗n} ⊗ 1`, i.e. as a vector of `Hom((H⁺)^{⊗n}, M)`.

use crate::ayd::{check_ayd_compatibility, AydCoefficient, AydFlavour};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::hopf::{check_hopf_axioms, HopfData};
use crate::linalg::solve_in_span;
use crate::matrix::Matrix;
use crate::reps::{check_contramodule, Side};
use crate::report::{matrix_witness, plain, Report};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoringData {
    pub dim_h: usize,
    /// Left action of `e_i` on `H ⊗ H`: `h·(h′⊗h″) = h₁h′S⁻¹(h₃) ⊗ h₂h″`.
    pub left: Vec<Matrix>,
    /// Right action of `e_i`: `(h′⊗h″)·h = h′ ⊗ h″h`.
    pub right: Vec<Matrix>,
    /// `Δ_H ⊗ id : H⊗H → H⊗H⊗H ≅ C ⊗_H C`.
    pub comul: Matrix,
    /// `ε_H ⊗ id : H⊗H → H`.
    pub counit: Matrix,
    pub grouplike: Vec<Scalar>,
    pub report: Report,
}

impl CoringData {
    pub fn dim(&self) -> usize {
        self.dim_h * self.dim_h
    }
}

fn require_hopf(h: &HopfData) -> Result<()> {
    let rep = check_hopf_axioms(h)?;
    if let Some(v) = rep.failures().next() {
        return Err(Error::PrerequisiteFailed(format!("Hopf axiom fails: {}", v.name)));
    }
    Ok(())
}

fn combine(field: FieldSpec, family: &[Matrix], coords: &[Scalar], n: usize) -> Matrix {
    let mut acc = Matrix::zeros(field, n, n);
    for (k, c) in coords.iter().enumerate() {
        if !c.is_zero() {
            acc.add_scaled(c, &family[k]);
        }
    }
    acc
}

/// Left action of `e_i` on `H⊗H⊗H ≅ C ⊗_H C`: `h₁aS⁻¹(h₅) ⊗ h₂xS⁻¹(h₄) ⊗ h₃y`.
fn left_on_triple(h: &HopfData, i: usize) -> Matrix {
    let f = h.field();
    let d = h.dim();
    let mut acc = Matrix::zeros(f, d * d * d, d * d * d);
    for (coef, legs) in h.coalgebra.iterated_terms(i, 5) {
        let outer = h.sandwich(&h.basis(legs[0]), &h.apply_antipode_inv(legs[4]));
        let inner = h.sandwich(&h.basis(legs[1]), &h.apply_antipode_inv(legs[3]));
        acc.add_scaled(&coef, &Matrix::kron_all(f, &[&outer, &inner, &h.algebra.left_mult(legs[2])]));
    }
    acc
}

/// Builds the coring `H ⊗ H` and verifies its axioms.
pub fn build_ayd_coring(h: &HopfData) -> Result<CoringData> {
    require_hopf(h)?;
    let f = h.field();
    let d = h.dim();
    let id = Matrix::identity(f, d);
    let left: Vec<Matrix> = (0..d)
        .map(|i| {
            let mut acc = Matrix::zeros(f, d * d, d * d);
            for (coef, legs) in h.triple_coproduct(i) {
                let outer = h.sandwich(&h.basis(legs[0]), &h.apply_antipode_inv(legs[2]));
                acc.add_scaled(coef, &outer.kron(&h.algebra.left_mult(legs[1])));
            }
            acc
        })
        .collect();
    let right: Vec<Matrix> = (0..d).map(|i| id.kron(&h.algebra.right_mult(i))).collect();
    let comul = h.coalgebra.comul.kron(&id);
    let counit = h.coalgebra.counit.kron(&id);
    let unit = h.unit_vector();
    let grouplike: Vec<Scalar> = Matrix::column_vector(f, &unit).kron(&Matrix::column_vector(f, &unit)).column(0);

    let mut rep = Report::new("coring");
    let n = d * d;
    let unit_m = |fam: &[Matrix]| combine(f, fam, &unit, n);
    let (mut w_l, mut w_r, mut w_lr, mut w_eps, mut w_delta) = (None, None, None, None, None);
    let triple_right = |i: usize| Matrix::kron_all(f, &[&id, &id, &h.algebra.right_mult(i)]);
    for i in 0..d {
        let tl = left_on_triple(h, i);
        if w_delta.is_none() {
            w_delta = matrix_witness(&comul.mul(&left[i]), &tl.mul(&comul), plain)
                .or_else(|| matrix_witness(&comul.mul(&right[i]), &triple_right(i).mul(&comul), plain));
        }
        if w_eps.is_none() {
            w_eps = matrix_witness(&counit.mul(&left[i]), &h.algebra.left_mult(i).mul(&counit), plain)
                .or_else(|| matrix_witness(&counit.mul(&right[i]), &h.algebra.right_mult(i).mul(&counit), plain));
        }
        for j in 0..d {
            let prod = h.algebra.basis_product(i, j);
            if w_l.is_none() {
                w_l = matrix_witness(&left[i].mul(&left[j]), &combine(f, &left, &prod, n), plain);
            }
            if w_r.is_none() {
                w_r = matrix_witness(&right[j].mul(&right[i]), &combine(f, &right, &prod, n), plain);
            }
            if w_lr.is_none() {
                w_lr = matrix_witness(&left[i].mul(&right[j]), &right[j].mul(&left[i]), plain);
            }
        }
    }
    let ident = Matrix::identity(f, n);
    rep.record("left action", w_l.or_else(|| matrix_witness(&unit_m(&left), &ident, plain)));
    rep.record("right action", w_r.or_else(|| matrix_witness(&unit_m(&right), &ident, plain)));
    rep.record("actions commute", w_lr);
    rep.record("counit bilinear", w_eps);
    rep.record("coproduct bilinear", w_delta);
    let c3 = h.coalgebra.comul.kron(&id).kron(&id).mul(&comul);
    let c3b = Matrix::kron_all(f, &[&id, &h.coalgebra.comul, &id]).mul(&comul);
    rep.record("coassociativity", matrix_witness(&c3, &c3b, plain));
    let lc = Matrix::kron_all(f, &[&h.coalgebra.counit, &id, &id]).mul(&comul);
    let rc = Matrix::kron_all(f, &[&id, &h.coalgebra.counit, &id]).mul(&comul);
    rep.record("counitality", matrix_witness(&lc, &ident, plain).or_else(|| matrix_witness(&rc, &ident, plain)));
    let g = Matrix::column_vector(f, &grouplike);
    let ggg = Matrix::column_vector(f, &unit).kron(&g);
    rep.record(
        "grouplike",
        matrix_witness(&comul.mul(&g), &ggg, plain)
            .or_else(|| matrix_witness(&counit.mul(&g), &Matrix::column_vector(f, &unit), plain)),
    );
    if let Some(v) = rep.failures().next() {
        return Err(Error::PrerequisiteFailed(format!("coring axiom fails: {}", v.name)));
    }
    Ok(CoringData { dim_h: d, left, right, comul, counit, grouplike, report: rep })
}

/// Contramodule law for the coring, computed through `Hom_{-H}(H⊗H, M) ≅ Hom(H, M)`.
pub fn check_coring_contramodule(coring: &CoringData, h: &HopfData, m: &AydCoefficient) -> Result<Report> {
    if m.action.side != Side::Right || m.alpha.side != Side::Right {
        return Err(Error::PrerequisiteFailed("coring contramodules need a right module and right contramodule".into()));
    }
    let f = h.field();
    let (d, dm) = (h.dim(), m.dim());
    let mut rep = Report::new("coring contramodule");
    rep.verdicts.extend(check_contramodule(&m.alpha)?.verdicts);
    let r = &m.action.action;
    // φ(h′⊗h″) = f(h′)·h″
    let embed = Matrix::from_fn(f, d * d * dm, d * dm, |row, col| {
        let (pair, mo) = (row / dm, row % dm);
        let (hp, hpp) = (pair / d, pair % d);
        let (src, k) = (col / dm, col % dm);
        if src == hp {
            r[hpp].get(mo, k).clone()
        } else {
            f.zero()
        }
    });
    let unit = h.unit_vector();
    let restrict = Matrix::from_fn(f, d * dm, d * d * dm, |row, col| {
        let (hp, k) = (row / dm, row % dm);
        let (pair, k2) = (col / dm, col % dm);
        if pair / d == hp && k == k2 {
            unit[pair % d].clone()
        } else {
            f.zero()
        }
    });
    let id_m = Matrix::identity(f, dm);
    let mut witness = None;
    for i in 0..d {
        let twist = restrict.mul(&coring.left[i].transpose().kron(&id_m)).mul(&embed);
        let lhs = r[i].mul(&m.alpha.alpha);
        let rhs = m.alpha.alpha.mul(&twist);
        if let Some(w) = matrix_witness(&lhs, &rhs, |row, c| (vec![i, c, row], vec!["h".into(), "in".into(), "out".into()])) {
            witness = Some(w);
            break;
        }
    }
    rep.record("right linearity", witness);
    Ok(rep)
}

/// `Ω⁰ = H`, `Ω¹ = H⁺⊗H`, `Ω² = H⁺⊗H⁺⊗H` with `d⁰`, `d¹`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DgaData {
    pub dim_h: usize,
    /// Columns are the basis `b_i` of `H⁺` inside `H`.
    pub plus_basis: Matrix,
    /// `H → H⁺` coordinates of `x − ε(x)1`.
    pub plus_proj: Matrix,
    pub omega_dims: [usize; 3],
    pub d0: Matrix,
    pub d1: Matrix,
    pub report: Report,
}

impl DgaData {
    pub fn plus_dim(&self) -> usize {
        self.plus_basis.cols()
    }
}

/// Counit-adapted basis of `ker ε` and the projection onto it.
pub fn counit_adapted_basis(h: &HopfData) -> Result<(Matrix, Matrix)> {
    let f = h.field();
    let d = h.dim();
    let unit = h.unit_vector();
    let p = unit
        .iter()
        .position(|u| !u.is_zero())
        .ok_or_else(|| Error::CounitDegenerate("unit vector is zero".into()))?;
    if !h.counit_value(&unit).is_one() {
        return Err(Error::CounitDegenerate("ε(1) ≠ 1".into()));
    }
    let shifted = |j: usize| -> Vec<Scalar> {
        let e = h.counit_of(j);
        (0..d).map(|k| h.basis(j)[k].clone() - e * &unit[k]).collect()
    };
    let cols: Vec<Vec<Scalar>> = (0..d).filter(|&j| j != p).map(shifted).collect();
    let basis = Matrix::from_columns(f, d, &cols);
    let all: Vec<Vec<Scalar>> = (0..d).map(shifted).collect();
    let proj = solve_in_span(&basis, &Matrix::from_columns(f, d, &all))
        .map_err(|c| Error::CounitDegenerate(format!("column {c} outside ker ε")))?;
    Ok((basis, proj))
}

/// `h₁ x S⁻¹(h₃) ⊗ h₂` contributions as a vector of `H⊗H`, for `x` given in coordinates.
fn adjoint_pair(h: &HopfData, a: usize, x: &[Scalar]) -> Vec<Scalar> {
    let d = h.dim();
    let mut out = vec![h.field().zero(); d * d];
    for (coef, legs) in h.triple_coproduct(a) {
        let left = h.sandwich(&h.basis(legs[0]), &h.apply_antipode_inv(legs[2])).mul_vec(x);
        for (s, v) in left.iter().enumerate() {
            if !v.is_zero() {
                let w = coef * v;
                out[s * d + legs[1]] = &out[s * d + legs[1]] + &w;
            }
        }
    }
    out
}

pub fn build_dga(h: &HopfData) -> Result<DgaData> {
    require_hopf(h)?;
    let f = h.field();
    let d = h.dim();
    let (plus_basis, plus_proj) = counit_adapted_basis(h)?;
    let q = plus_basis.cols();
    let id = Matrix::identity(f, d);
    let unit = h.unit_vector();
    let eps_id = h.coalgebra.counit.kron(&id);
    let proj1 = plus_proj.kron(&id);
    let mut rep = Report::new("dga");
    // d⁰ e_a = 1⊗a − a₁S⁻¹(a₃)⊗a₂
    let mut raw0 = Vec::new();
    for a in 0..d {
        let mut v: Vec<Scalar> = Matrix::column_vector(f, &unit).kron(&Matrix::column_vector(f, &h.basis(a))).column(0);
        for (k, w) in adjoint_pair(h, a, &unit).into_iter().enumerate() {
            v[k] = &v[k] - &w;
        }
        raw0.push(v);
    }
    let raw0 = Matrix::from_columns(f, d * d, &raw0);
    rep.record("d0 lands in H+ (x) H", matrix_witness(&eps_id.mul(&raw0), &Matrix::zeros(f, d, d), plain));
    let d0 = proj1.mul(&raw0);
    // d¹(b⊗e_c) = 1⊗b⊗c − b₁⊗b₂⊗c + b ⊗ c₁S⁻¹(c₃)⊗c₂
    let comul3 = h.coalgebra.comul.kron(&id);
    let mut raw1 = Vec::new();
    for bi in 0..q {
        let b = plus_basis.column(bi);
        let bm = Matrix::column_vector(f, &b);
        let um = Matrix::column_vector(f, &unit);
        for c in 0..d {
            let cm = Matrix::column_vector(f, &h.basis(c));
            let first = um.kron(&bm).kron(&cm);
            let second = comul3.mul(&bm.kron(&cm));
            let third = bm.kron(&Matrix::column_vector(f, &adjoint_pair(h, c, &unit)));
            raw1.push(first.sub(&second).add(&third).column(0));
        }
    }
    let raw1 = Matrix::from_columns(f, d * d * d, &raw1);
    let e1 = Matrix::kron_all(f, &[&h.coalgebra.counit, &id, &id]).mul(&raw1);
    let e2 = Matrix::kron_all(f, &[&id, &h.coalgebra.counit, &id]).mul(&raw1);
    rep.record(
        "d1 lands in H+ (x) H+ (x) H",
        matrix_witness(&e1, &Matrix::zeros(f, e1.rows(), e1.cols()), plain)
            .or_else(|| matrix_witness(&e2, &Matrix::zeros(f, e2.rows(), e2.cols()), plain)),
    );
    let d1 = Matrix::kron_all(f, &[&plus_proj, &plus_proj, &id]).mul(&raw1);
    let dd = d1.mul(&d0);
    rep.record("d1 d0 = 0", matrix_witness(&dd, &Matrix::zeros(f, dd.rows(), dd.cols()), plain));
    Ok(DgaData { dim_h: d, plus_basis, plus_proj, omega_dims: [d, q * d, q * q * d], d0, d1, report: rep })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomConnectionData {
    pub m: AydCoefficient,
    pub dga: DgaData,
    /// `Hom(H⁺, M) → M`, `f ↦ α(f̄)` with `f̄(h) = f(h − ε(h)1)`.
    pub nabla0: Matrix,
    pub report: Report,
}

/// Hom-connection of a right-right coefficient; requires its flavour identity.
pub fn hom_connection_from_contramodule(h: &HopfData, m: &AydCoefficient) -> Result<HomConnectionData> {
    if m.flavour != AydFlavour::RIGHT_RIGHT {
        return Err(Error::PrerequisiteFailed(format!("hom-connection needs flavour rr, got {}", m.flavour)));
    }
    let c = check_ayd_compatibility(m, h)?;
    if let Some(v) = c.failures().next() {
        return Err(Error::PrerequisiteFailed(format!("coefficient fails {}", v.name)));
    }
    hom_connection_unchecked(h, m)
}

/// Same construction without the compatibility precondition.
pub fn hom_connection_unchecked(h: &HopfData, m: &AydCoefficient) -> Result<HomConnectionData> {
    if m.action.side != Side::Right || m.alpha.side != Side::Right {
        return Err(Error::PrerequisiteFailed("hom-connection needs right module and right contramodule".into()));
    }
    let dga = build_dga(h)?;
    let f = h.field();
    let dm = m.dim();
    let nabla0 = m.alpha.alpha.mul(&dga.plus_proj.transpose().kron(&Matrix::identity(f, dm)));
    let mut hc = HomConnectionData { m: m.clone(), dga, nabla0, report: Report::new("hom-connection") };
    let leibniz = leibniz_witness(h, &hc);
    hc.report.record("leibniz", leibniz);
    Ok(hc)
}

/// Matrix of `f ↦ f·a` on `Hom(H⁺, M)`: `(f·a)(b) = f(a₁bS⁻¹(a₃))·a₂`.
fn hom_right_action(h: &HopfData, hc: &HomConnectionData, a: usize) -> Matrix {
    let f = h.field();
    let dga = &hc.dga;
    let r = &hc.m.action.action;
    let mut acc = Matrix::zeros(f, dga.plus_dim() * hc.m.dim(), dga.plus_dim() * hc.m.dim());
    for (coef, legs) in h.triple_coproduct(a) {
        let t = dga.plus_proj.mul(&h.sandwich(&h.basis(legs[0]), &h.apply_antipode_inv(legs[2]))).mul(&dga.plus_basis);
        acc.add_scaled(coef, &t.transpose().kron(&r[legs[1]]));
    }
    acc
}

/// `f ↦ Σ f(b_q)·h` against the coordinates of `ω ∈ (H⁺)^{⊗n} ⊗ H`, for `f` on `(H⁺)^{⊗n}`.
fn evaluate_on(hc: &HomConnectionData, omega: &[Scalar]) -> Matrix {
    let dm = hc.m.dim();
    let d = hc.dga.dim_h;
    let field = hc.nabla0.field();
    let blocks = omega.len() / d;
    let r = &hc.m.action.action;
    let mut out = Matrix::zeros(field, dm, blocks * dm);
    for (idx, c) in omega.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let (q, hh) = (idx / d, idx % d);
        for mo in 0..dm {
            for k in 0..dm {
                let v = r[hh].get(mo, k);
                if !v.is_zero() {
                    out.add_at(mo, q * dm + k, &(c * v));
                }
            }
        }
    }
    out
}

fn leibniz_witness(h: &HopfData, hc: &HomConnectionData) -> Option<crate::report::Witness> {
    for a in 0..h.dim() {
        let lhs = hc.nabla0.mul(&hom_right_action(h, hc, a));
        let rhs = hc.m.action.action[a].mul(&hc.nabla0).add(&evaluate_on(hc, &hc.dga.d0.column(a)));
        if let Some(w) = matrix_witness(&lhs, &rhs, |r, c| (vec![a, c, r], vec!["a".into(), "f".into(), "out".into()])) {
            return Some(w);
        }
    }
    None
}

/// `∇₁ : Hom(H⁺⊗H⁺, M) → Hom(H⁺, M)`, `∇₁(g)(b) = ∇₀(q ↦ g(b⊗q)) + g(d(b⊗1))`.
pub fn nabla1(h: &HopfData, hc: &HomConnectionData) -> Matrix {
    let f = h.field();
    let q = hc.dga.plus_dim();
    let dm = hc.m.dim();
    let d = h.dim();
    let unit = h.unit_vector();
    let mut out = Matrix::zeros(f, q * dm, q * q * dm);
    for p in 0..q {
        // d¹(b_p ⊗ 1) in Ω² coordinates
        let mut omega = vec![f.zero(); q * q * d];
        for (c, u) in unit.iter().enumerate() {
            if u.is_zero() {
                continue;
            }
            for (idx, v) in hc.dga.d1.column(p * d + c).iter().enumerate() {
                omega[idx] = &omega[idx] + &(u * v);
            }
        }
        let ev = evaluate_on(hc, &omega);
        for mo in 0..dm {
            let row = p * dm + mo;
            for col in 0..q * q * dm {
                let (pair, k) = (col / dm, col % dm);
                let mut v = ev.get(mo, col).clone();
                if pair / q == p {
                    v = v + hc.nabla0.get(mo, (pair % q) * dm + k).clone();
                }
                out.set(row, col, v);
            }
        }
    }
    out
}

/// Curvature `F = ∇₀∘∇₁` and the flatness verdict.
pub fn curvature_and_flatness(h: &HopfData, hc: &HomConnectionData) -> (Matrix, Report) {
    let curvature = hc.nabla0.mul(&nabla1(h, hc));
    let mut rep = hc.report.clone();
    let zero = Matrix::zeros(h.field(), curvature.rows(), curvature.cols());
    rep.record("flatness", matrix_witness(&curvature, &zero, |r, c| (vec![c, r], vec!["form".into(), "out".into()])));
    (curvature, rep)
}

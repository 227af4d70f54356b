//! Hopf-cyclic modules with contramodule coefficients.
//!
//! For a left `H`-module coalgebra `C` and a left-right AYD contramodule `M`,
//! `C_n = Hom_H(C^{⊗n+1}, M)` carries faces, degeneracies and a cyclic operator
//! routed through `α`; for a left `H`-module algebra `A` and a left-left AYD
//! contramodule the spaces `Hom_H(A^{⊗n+1}, M)` form a cocyclic module.
//! Operators are evaluated on the full hom-space and then expressed in the
//! equivariant bases; an image that leaves the equivariant subspace is an error.

mod complex;
mod equivariant;
mod homology;
mod relations;

pub use complex::{
    build_cocyclic_complex, build_cyclic_complex, hom_bimodule_actions, verify_bimodule_laws, BuildOptions, ComplexKind,
    CyclicComplexData, HomBimodule,
};
pub use equivariant::{check_cap, equivariant_hom_basis, tensor_power_module, EquivariantBasis, DEFAULT_DIM_CAP};
pub use homology::{homology_dims, tensor_over_h, HomologyMode, HomologyTable, TensorQuotient};
pub use relations::verify_cyclic_relations;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::hopf::{AlgebraData, CoalgebraData, HopfData};
use crate::matrix::Matrix;
use crate::reps::{check_module, ModuleRep, Side};
use crate::report::{matrix_witness, Erratum, Report};

/// A coalgebra with a left `H`-action compatible with `Δ` and `ε`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleCoalgebraData {
    pub coalgebra: CoalgebraData,
    pub h_action: ModuleRep,
}

impl ModuleCoalgebraData {
    /// `C = H` with the left regular action.
    pub fn regular(h: &HopfData) -> Self {
        ModuleCoalgebraData { coalgebra: h.coalgebra.clone(), h_action: ModuleRep::regular(h, Side::Left) }
    }

    /// `C = k` with `h·1 = ε(h)`.
    pub fn ground(h: &HopfData) -> Self {
        let f = h.field();
        let coalgebra = CoalgebraData { dim: 1, comul: Matrix::identity(f, 1), counit: Matrix::identity(f, 1) };
        ModuleCoalgebraData { coalgebra, h_action: ModuleRep::trivial(h, Side::Left, 1) }
    }

    pub fn dim(&self) -> usize {
        self.coalgebra.dim
    }
}

/// An algebra with a left `H`-action compatible with multiplication and unit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleAlgebraData {
    pub algebra: AlgebraData,
    pub h_action: ModuleRep,
}

impl ModuleAlgebraData {
    /// `A = k` with `h·1 = ε(h)`.
    pub fn ground(h: &HopfData) -> Self {
        let f = h.field();
        let algebra = AlgebraData { dim: 1, mul: Matrix::identity(f, 1), unit: Matrix::identity(f, 1) };
        ModuleAlgebraData { algebra, h_action: ModuleRep::trivial(h, Side::Left, 1) }
    }

    /// `A = H` with the adjoint action `h·a = h₁ a S(h₂)`.
    pub fn adjoint(h: &HopfData) -> Self {
        let action = (0..h.dim())
            .map(|i| {
                let mut acc = Matrix::zeros(h.field(), h.dim(), h.dim());
                for (coef, a, b) in h.coproduct_terms(i) {
                    acc.add_scaled(&coef, &h.sandwich(&h.basis(a), &h.apply_antipode(b)));
                }
                acc
            })
            .collect();
        ModuleAlgebraData { algebra: h.algebra.clone(), h_action: ModuleRep { dim: h.dim(), side: Side::Left, action } }
    }

    /// `A = H` with left multiplication; a module algebra only in degenerate cases.
    pub fn left_multiplication(h: &HopfData) -> Self {
        ModuleAlgebraData { algebra: h.algebra.clone(), h_action: ModuleRep::regular(h, Side::Left) }
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim
    }
}

fn check_action(action: &ModuleRep, h: &HopfData, dim: usize) -> Result<()> {
    if action.side != Side::Left || action.action.len() != h.dim() || action.dim != dim {
        return Err(Error::ShapeMismatch("expected a left H-action on the underlying space".into()));
    }
    Ok(())
}

fn pair_locator(i: usize) -> impl Fn(usize, usize) -> (Vec<usize>, Vec<String>) {
    move |r, c| (vec![i, c, r], vec!["h".into(), "in".into(), "out".into()])
}

/// `Δ_C(h·c) = h₁·c₁ ⊗ h₂·c₂` and `ε_C(h·c) = ε_H(h)ε_C(c)` on all basis pairs.
pub fn check_module_coalgebra(c: &ModuleCoalgebraData, h: &HopfData) -> Result<Report> {
    check_action(&c.h_action, h, c.dim())?;
    let act = &c.h_action.action;
    let mut rep = Report::new("module coalgebra");
    rep.verdicts.extend(check_module(&c.h_action, &h.algebra)?.verdicts);
    let (mut w_delta, mut w_eps) = (None, None);
    for i in 0..h.dim() {
        let lhs = c.coalgebra.comul.mul(&act[i]);
        let mut pair = Matrix::zeros(h.field(), lhs.rows(), lhs.rows());
        for (coef, a, b) in h.coproduct_terms(i) {
            pair.add_scaled(&coef, &act[a].kron(&act[b]));
        }
        let rhs = pair.mul(&c.coalgebra.comul);
        if w_delta.is_none() {
            w_delta = matrix_witness(&lhs, &rhs, pair_locator(i));
        }
        let lhs = c.coalgebra.counit.mul(&act[i]);
        let rhs = c.coalgebra.counit.scale(h.counit_of(i));
        if w_eps.is_none() {
            w_eps = matrix_witness(&lhs, &rhs, pair_locator(i));
        }
    }
    rep.record("coproduct equivariance", w_delta);
    rep.record("counit equivariance", w_eps);
    Ok(rep)
}

/// `h·(aa′) = (h₁·a)(h₂·a′)` and `h·1_A = ε_H(h)1_A` on all basis pairs.
pub fn check_module_algebra(a: &ModuleAlgebraData, h: &HopfData) -> Result<Report> {
    check_action(&a.h_action, h, a.dim())?;
    let act = &a.h_action.action;
    let mut rep = Report::new("module algebra");
    rep.note(Erratum::ModuleAlgebraAxiom);
    rep.verdicts.extend(check_module(&a.h_action, &h.algebra)?.verdicts);
    let (mut w_mul, mut w_unit) = (None, None);
    for i in 0..h.dim() {
        let lhs = act[i].mul(&a.algebra.mul);
        let mut pair = Matrix::zeros(h.field(), a.dim() * a.dim(), a.dim() * a.dim());
        for (coef, x, y) in h.coproduct_terms(i) {
            pair.add_scaled(&coef, &act[x].kron(&act[y]));
        }
        let rhs = a.algebra.mul.mul(&pair);
        if w_mul.is_none() {
            w_mul = matrix_witness(&lhs, &rhs, pair_locator(i));
        }
        let lhs = act[i].mul(&a.algebra.unit);
        let rhs = a.algebra.unit.scale(h.counit_of(i));
        if w_unit.is_none() {
            w_unit = matrix_witness(&lhs, &rhs, pair_locator(i));
        }
    }
    rep.record("multiplication equivariance", w_mul);
    rep.record("unit equivariance", w_unit);
    Ok(rep)
}

pub fn require_characteristic_zero(field: FieldSpec, what: &str) -> Result<()> {
    if field.characteristic() != 0 {
        return Err(Error::CharacteristicUnsupported(format!("{what} needs characteristic 0, got {field}")));
    }
    Ok(())
}



#[cfg(test)]
mod duality_tests {
    use super::*;
    use crate::ayd::{dualize_ayd_module, AydFlavour, AydModuleData};
    use crate::field::FieldSpec::Rationals as Q;
    use crate::hopf::build_named_example;

    #[test]
    fn tensor_and_hom_dims_agree() {
        for name in ["group_C2", "group_C3", "sweedler_H4"] {
            let h = build_named_example(name, Q).unwrap();
            let n = AydModuleData::regular(&h, AydFlavour::RIGHT_LEFT).unwrap();
            let m = dualize_ayd_module(&n, &h).unwrap().evaluated(&h).unwrap();
            let x = ModuleRep::regular(&h, Side::Left);
            let top = if name == "sweedler_H4" { 2 } else { 3 };
            for deg in 0..=top {
                let xs = tensor_power_module(&h, &x, deg + 1);
                let t = tensor_over_h(&h, &n.action, &xs).unwrap();
                let e = equivariant_hom_basis(&h, &x, &m, deg, DEFAULT_DIM_CAP).unwrap();
                assert_eq!(t.dim, e.dim(), "{name} n={deg}");
                assert_eq!(t.dim, h.dim().pow(deg as u32 + 1), "{name} n={deg}");
            }
        }
    }
}

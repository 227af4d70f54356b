//! Anti-Yetter-Drinfeld contramodules in their four flavours, and the duality
//! with anti-Yetter-Drinfeld modules.
//!
//! For `f ∈ Hom(H, M)` and `Δ²(h) = h₁ ⊗ h₂ ⊗ h₃` the compatibility identities are
//!
//! | flavour | identity |
//! |---|---|
//! | left-left   | `h·α(f) = α(h₂·f(S⁻¹(h₁) − h₃))` |
//! | left-right  | `h·α(f) = α(h₂·f(S(h₃) − h₁))` |
//! | right-left  | `α(f)·h = α(f(h₃ − S(h₁))·h₂)` |
//! | right-right | `α(f)·h = α(f(h₁ − S⁻¹(h₃))·h₂)` |
//!
//! Each side is a linear map `Hom(H, M) → M`, so every identity is checked as a
//! matrix equality per basis element `h`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::hopf::HopfData;
use crate::matrix::Matrix;
use crate::reps::{check_comodule, check_contramodule, check_module, dualize_comodule, ComoduleRep, ContraRep, ModuleRep, Side};
use crate::report::{matrix_witness, Erratum, Report, Witness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AydFlavour {
    pub module_side: Side,
    /// Side of the contra-action (or of the coaction, for modules).
    pub contra_side: Side,
}

impl AydFlavour {
    pub const LEFT_LEFT: AydFlavour = AydFlavour { module_side: Side::Left, contra_side: Side::Left };
    pub const LEFT_RIGHT: AydFlavour = AydFlavour { module_side: Side::Left, contra_side: Side::Right };
    pub const RIGHT_LEFT: AydFlavour = AydFlavour { module_side: Side::Right, contra_side: Side::Left };
    pub const RIGHT_RIGHT: AydFlavour = AydFlavour { module_side: Side::Right, contra_side: Side::Right };
    pub const ALL: [AydFlavour; 4] = [Self::LEFT_LEFT, Self::LEFT_RIGHT, Self::RIGHT_LEFT, Self::RIGHT_RIGHT];

    pub fn code(&self) -> &'static str {
        match (self.module_side, self.contra_side) {
            (Side::Left, Side::Left) => "ll",
            (Side::Left, Side::Right) => "lr",
            (Side::Right, Side::Left) => "rl",
            (Side::Right, Side::Right) => "rr",
        }
    }

    /// Flavour of the dual: both sides flip.
    pub fn dual(&self) -> AydFlavour {
        AydFlavour { module_side: self.module_side.flip(), contra_side: self.contra_side.flip() }
    }
}

impl fmt::Display for AydFlavour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for AydFlavour {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ll" => Ok(Self::LEFT_LEFT),
            "lr" => Ok(Self::LEFT_RIGHT),
            "rl" => Ok(Self::RIGHT_LEFT),
            "rr" => Ok(Self::RIGHT_RIGHT),
            _ => Err(Error::Parse(format!("unknown flavour {s:?}; expected ll, lr, rl or rr"))),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckState {
    #[default]
    Unchecked,
    Pass,
    Fail,
}

impl CheckState {
    fn from_bool(ok: bool) -> Self {
        if ok {
            CheckState::Pass
        } else {
            CheckState::Fail
        }
    }
}

/// An H-module with an H-contramodule structure on the same space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AydCoefficient {
    pub flavour: AydFlavour,
    pub action: ModuleRep,
    pub alpha: ContraRep,
    pub compat_checked: CheckState,
    pub stable_checked: CheckState,
}

impl AydCoefficient {
    pub fn new(flavour: AydFlavour, action: ModuleRep, alpha: ContraRep) -> Result<Self> {
        if action.dim != alpha.dim {
            return Err(Error::ShapeMismatch(format!("action on dim {} but alpha on dim {}", action.dim, alpha.dim)));
        }
        if action.side != flavour.module_side || alpha.side != flavour.contra_side {
            return Err(Error::ShapeMismatch(format!("sides of action/alpha do not match flavour {flavour}")));
        }
        if action.field() != alpha.field() {
            return Err(Error::ShapeMismatch("action and alpha live over different fields".into()));
        }
        Ok(AydCoefficient { flavour, action, alpha, compat_checked: CheckState::Unchecked, stable_checked: CheckState::Unchecked })
    }

    /// One-dimensional coefficient: `h` acts by the character `chi`, `α(f) = f(c)`.
    pub fn one_dimensional(h: &HopfData, flavour: AydFlavour, chi: &[Scalar], c: &[Scalar]) -> Result<Self> {
        let action = ModuleRep::character(flavour.module_side, chi);
        let alpha = ContraRep::evaluation(&h.coalgebra, flavour.contra_side, c, 1);
        Self::new(flavour, action, alpha)
    }

    pub fn dim(&self) -> usize {
        self.action.dim
    }

    /// Runs both checkers and records the outcome in the flags.
    pub fn evaluate(&mut self, h: &HopfData) -> Result<Report> {
        let mut rep = check_ayd_compatibility(self, h)?;
        self.compat_checked = CheckState::from_bool(rep.all_pass());
        let stab = check_stability(self, h)?;
        self.stable_checked = CheckState::from_bool(stab.all_pass());
        rep.verdicts.extend(stab.verdicts);
        Ok(rep)
    }

    pub fn evaluated(mut self, h: &HopfData) -> Result<Self> {
        self.evaluate(h)?;
        Ok(self)
    }

    /// Both flags pass.
    pub fn accepted(&self) -> bool {
        self.compat_checked == CheckState::Pass && self.stable_checked == CheckState::Pass
    }

    /// `Hom(H, M) → M` matrix of `m ↦ α(r_m)` (or `α(ℓ_m)` for right modules).
    pub fn stability_composite(&self, h: &HopfData) -> Matrix {
        self.alpha.alpha.mul(&orbit_map(h, &self.action))
    }
}

/// `M → Hom(H, M)`, `m ↦ (h ↦ h·m)`.
fn orbit_map(h: &HopfData, action: &ModuleRep) -> Matrix {
    let dm = action.dim;
    Matrix::from_fn(h.field(), h.dim() * dm, dm, |r, m| action.action[r / dm].get(r % dm, m).clone())
}

/// The Sweedler twist on `Hom(H, M)` appearing on the right-hand side of the
/// flavour identity for basis element `e_i`, before `α` is applied.
pub fn flavour_twist(h: &HopfData, flavour: AydFlavour, action: &ModuleRep, i: usize) -> Matrix {
    let f = h.field();
    let dm = action.dim;
    let mut acc = Matrix::zeros(f, h.dim() * dm, h.dim() * dm);
    for (coef, idx) in h.triple_coproduct(i) {
        let (a, b, d) = (idx[0], idx[1], idx[2]);
        let (left, right) = match (flavour.module_side, flavour.contra_side) {
            (Side::Left, Side::Left) => (h.apply_antipode_inv(a), h.basis(d)),
            (Side::Left, Side::Right) => (h.apply_antipode(d), h.basis(a)),
            (Side::Right, Side::Left) => (h.basis(d), h.apply_antipode(a)),
            (Side::Right, Side::Right) => (h.basis(a), h.apply_antipode_inv(d)),
        };
        let pre = h.sandwich(&left, &right);
        acc.add_scaled(coef, &pre.transpose().kron(&action.action[b]));
    }
    acc
}

/// The map `f ↦ ℓℓ_{f,h}` for the left-left flavour, built pointwise:
/// `ℓℓ_{f,h}(h') = h₂·f(S⁻¹(h₁) h' h₃)` evaluated on every basis `f`, `h'`.
pub fn ll_map_pointwise(h: &HopfData, action: &ModuleRep, i: usize) -> Matrix {
    let fld = h.field();
    let (n, dm) = (h.dim(), action.dim);
    let mut out = Matrix::zeros(fld, n * dm, n * dm);
    for src_h in 0..n {
        for src_m in 0..dm {
            let col = src_h * dm + src_m;
            // f = e_{src_h}* ⊗ e_{src_m}
            for hp in 0..n {
                for (coef, idx) in h.triple_coproduct(i) {
                    let arg = h.algebra.product(
                        &h.algebra.product(&h.apply_antipode_inv(idx[0]), &h.basis(hp)),
                        &h.basis(idx[2]),
                    );
                    let weight = &arg[src_h] * coef;
                    if weight.is_zero() {
                        continue;
                    }
                    let a = &action.action[idx[1]];
                    for k in 0..dm {
                        let v = a.get(k, src_m);
                        if !v.is_zero() {
                            out.add_at(hp * dm + k, col, &(&weight * v));
                        }
                    }
                }
            }
        }
    }
    out
}

fn prerequisites(c: &AydCoefficient, h: &HopfData) -> Result<()> {
    let m = check_module(&c.action, &h.algebra)?;
    if !m.all_pass() {
        return Err(Error::PrerequisiteFailed("action is not a module".into()));
    }
    if c.alpha.over != h.coalgebra {
        return Err(Error::PrerequisiteFailed("contramodule is over a different coalgebra".into()));
    }
    let k = check_contramodule(&c.alpha)?;
    if !k.all_pass() {
        return Err(Error::PrerequisiteFailed("alpha is not a contramodule".into()));
    }
    Ok(())
}

fn hom_locator(h: usize, dm: usize) -> impl Fn(usize, usize) -> (Vec<usize>, Vec<String>) {
    move |r, c| {
        (
            vec![h, c / dm.max(1), c % dm.max(1), r],
            vec!["h".into(), "hom_h".into(), "hom_m".into(), "out".into()],
        )
    }
}

/// Checks the flavour identity on every basis element of `H`.
pub fn check_ayd_compatibility(c: &AydCoefficient, h: &HopfData) -> Result<Report> {
    prerequisites(c, h)?;
    let mut rep = Report::new("ayd");
    let alpha = &c.alpha.alpha;
    let mut witness = None;
    for i in 0..h.dim() {
        let lhs = c.action.action[i].mul(alpha);
        let rhs = alpha.mul(&flavour_twist(h, c.flavour, &c.action, i));
        if let Some(w) = matrix_witness(&lhs, &rhs, hom_locator(i, c.dim())) {
            witness = Some(w);
            break;
        }
    }
    rep.record(format!("compatibility ({})", c.flavour), witness);
    Ok(rep)
}

/// The first basis vector `m` with `α(r_m) ≠ m`, and the defect `α(r_m) − m`.
pub fn stability_defect(c: &AydCoefficient, h: &HopfData) -> Option<(usize, Vec<Scalar>)> {
    let comp = c.stability_composite(h);
    let diff = comp.sub(&Matrix::identity(h.field(), c.dim()));
    (0..c.dim()).find(|&j| diff.column(j).iter().any(|v| !v.is_zero())).map(|j| (j, diff.column(j)))
}

/// `α(r_m) = m` (left modules) or `α(ℓ_m) = m` (right modules) for all `m`.
pub fn check_stability(c: &AydCoefficient, h: &HopfData) -> Result<Report> {
    prerequisites(c, h)?;
    let mut rep = Report::new("ayd");
    let witness = stability_defect(c, h).map(|(j, defect)| {
        let row = defect.iter().position(|v| !v.is_zero()).unwrap();
        let comp = c.stability_composite(h);
        Witness {
            indices: vec![j, row],
            labels: vec!["m".into(), "out".into()],
            expected: if row == j { h.field().one() } else { h.field().zero() }.to_canonical(),
            actual: comp.get(row, j).to_canonical(),
        }
    });
    rep.record("stability", witness);
    Ok(rep)
}

/// `M = k`, `h·m = ε(h)m`, `α(f) = f(1)`, with its flags evaluated.
pub fn build_trivial_coefficient(h: &HopfData, flavour: AydFlavour) -> Result<AydCoefficient> {
    let chi: Vec<Scalar> = (0..h.dim()).map(|i| h.counit_of(i).clone()).collect();
    AydCoefficient::one_dimensional(h, flavour, &chi, &h.unit_vector())?.evaluated(h)
}

/// A module with a comodule structure over `H`; `flavour.contra_side` is the
/// side of the coaction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AydModuleData {
    pub flavour: AydFlavour,
    pub action: ModuleRep,
    pub coaction: ComoduleRep,
}

impl AydModuleData {
    pub fn new(flavour: AydFlavour, action: ModuleRep, coaction: ComoduleRep) -> Result<Self> {
        if action.dim != coaction.dim {
            return Err(Error::ShapeMismatch("action and coaction on different dimensions".into()));
        }
        if action.side != flavour.module_side || coaction.side != flavour.contra_side {
            return Err(Error::ShapeMismatch(format!("sides do not match flavour {flavour}")));
        }
        Ok(AydModuleData { flavour, action, coaction })
    }

    /// One-dimensional module: character `chi`, coaction by the group-like `c`.
    pub fn one_dimensional(h: &HopfData, flavour: AydFlavour, chi: &[Scalar], c: &[Scalar]) -> Result<Self> {
        Self::new(
            flavour,
            ModuleRep::character(flavour.module_side, chi),
            ComoduleRep::grouplike(flavour.contra_side, h.dim(), c, 1),
        )
    }

    /// `N = H` acting on itself by multiplication, with the coadjoint-type
    /// coaction making it a stable module of the given flavour:
    /// rl `x ↦ S(x₃)x₁ ⊗ x₂`, rr `x ↦ x₂ ⊗ S⁻¹(x₁)x₃`,
    /// ll `x ↦ x₁S⁻¹(x₃) ⊗ x₂`, lr `x ↦ x₂ ⊗ x₃S(x₁)`.
    pub fn regular(h: &HopfData, flavour: AydFlavour) -> Result<Self> {
        let n = h.dim();
        let f = h.field();
        let mut rho = Matrix::zeros(f, n * n, n);
        for x in 0..n {
            for (coef, idx) in h.triple_coproduct(x) {
                let (a, b, d) = (idx[0], idx[1], idx[2]);
                let (hopf_leg, module_leg) = match (flavour.module_side, flavour.contra_side) {
                    (Side::Right, Side::Left) => (h.algebra.product(&h.apply_antipode(d), &h.basis(a)), b),
                    (Side::Right, Side::Right) => (h.algebra.product(&h.apply_antipode_inv(a), &h.basis(d)), b),
                    (Side::Left, Side::Left) => (h.algebra.product(&h.basis(a), &h.apply_antipode_inv(d)), b),
                    (Side::Left, Side::Right) => (h.algebra.product(&h.basis(d), &h.apply_antipode(a)), b),
                };
                for (k, v) in hopf_leg.iter().enumerate() {
                    if v.is_zero() {
                        continue;
                    }
                    let row = match flavour.contra_side {
                        Side::Left => k * n + module_leg,
                        Side::Right => module_leg * n + k,
                    };
                    rho.add_at(row, x, &(v * coef));
                }
            }
        }
        Self::new(flavour, ModuleRep::regular(h, flavour.module_side), ComoduleRep { dim: n, side: flavour.contra_side, coaction: rho })
    }

    pub fn dim(&self) -> usize {
        self.action.dim
    }
}

/// Sweedler twist of the coaction leg for the module-side compatibility identity.
fn module_twist(h: &HopfData, n: &AydModuleData, i: usize) -> Matrix {
    let f = h.field();
    let (dh, dn) = (h.dim(), n.dim());
    let mut acc = Matrix::zeros(f, dh * dn, dh * dn);
    for (coef, idx) in h.triple_coproduct(i) {
        let (a, b, d) = (idx[0], idx[1], idx[2]);
        let (left, right) = match (n.flavour.module_side, n.flavour.contra_side) {
            (Side::Right, Side::Left) => (h.apply_antipode(d), h.basis(a)),
            (Side::Right, Side::Right) => (h.apply_antipode_inv(a), h.basis(d)),
            (Side::Left, Side::Left) => (h.basis(a), h.apply_antipode_inv(d)),
            (Side::Left, Side::Right) => (h.basis(d), h.apply_antipode(a)),
        };
        let leg = h.sandwich(&left, &right);
        let term = match n.flavour.contra_side {
            Side::Left => leg.kron(&n.action.action[b]),
            Side::Right => n.action.action[b].kron(&leg),
        };
        acc.add_scaled(coef, &term);
    }
    acc
}

/// Compatibility and stability of an anti-Yetter-Drinfeld module:
///
/// * rl: `ρ(x·h) = S(h₃)x₍₋₁₎h₁ ⊗ x₍₀₎·h₂`, stable if `x₍₀₎·x₍₋₁₎ = x`;
/// * rr: `ρ(x·h) = x₍₀₎·h₂ ⊗ S⁻¹(h₁)x₍₁₎h₃`, stable if `x₍₀₎·x₍₁₎ = x`;
/// * ll: `ρ(h·x) = h₁x₍₋₁₎S⁻¹(h₃) ⊗ h₂·x₍₀₎`, stable if `x₍₋₁₎·x₍₀₎ = x`;
/// * lr: `ρ(h·x) = h₂·x₍₀₎ ⊗ h₃x₍₁₎S(h₁)`, stable if `x₍₁₎·x₍₀₎ = x`.
///
/// These are exactly the conditions dual to the contramodule flavours.
pub fn check_ayd_module(n: &AydModuleData, h: &HopfData) -> Result<Report> {
    let m = check_module(&n.action, &h.algebra)?;
    let c = check_comodule(&n.coaction, &h.coalgebra)?;
    if !m.all_pass() || !c.all_pass() {
        return Err(Error::PrerequisiteFailed("module or comodule axioms fail".into()));
    }
    let f = h.field();
    let (dh, dn) = (h.dim(), n.dim());
    let rho = &n.coaction.coaction;
    let mut rep = Report::new("ayd_module");
    let mut witness = None;
    for i in 0..dh {
        let lhs = rho.mul(&n.action.action[i]);
        let rhs = module_twist(h, n, i).mul(rho);
        let loc = move |r: usize, c: usize| (vec![i, c, r], vec!["h".into(), "x".into(), "out".into()]);
        if let Some(w) = matrix_witness(&lhs, &rhs, loc) {
            witness = Some(w);
            break;
        }
    }
    rep.record(format!("compatibility ({})", n.flavour), witness);

    let mut back = Matrix::zeros(f, dn, dn);
    for c in 0..dh {
        let slice = Matrix::from_fn(f, dn, dn, |y, x| match n.flavour.contra_side {
            Side::Left => rho.get(c * dn + y, x).clone(),
            Side::Right => rho.get(y * dh + c, x).clone(),
        });
        back = back.add(&n.action.action[c].mul(&slice));
    }
    let id = Matrix::identity(f, dn);
    rep.compare("stability", &back, &id, |r, c| (vec![c, r], vec!["x".into(), "out".into()]));
    Ok(rep)
}

/// The dual coefficient `N*` with `(h·m)(x) = m(x·h)` and `α = Hom(ρ, k)`.
pub fn dualize_ayd_module(n: &AydModuleData, h: &HopfData) -> Result<AydCoefficient> {
    let checked = check_ayd_module(n, h)?;
    if !checked.passed(&format!("compatibility ({})", n.flavour)) {
        return Err(Error::PrerequisiteFailed(format!("module fails the {} compatibility condition", n.flavour)));
    }
    let action = ModuleRep {
        dim: n.dim(),
        side: n.flavour.module_side.flip(),
        action: n.action.action.iter().map(Matrix::transpose).collect(),
    };
    let alpha = dualize_comodule(&n.coaction, &h.coalgebra)?;
    AydCoefficient::new(n.flavour.dual(), action, alpha)?.evaluated(h)
}

/// As [`dualize_ayd_module`], noting the naming convention in `report`.
pub fn dualize_ayd_module_noted(n: &AydModuleData, h: &HopfData, report: &mut Report) -> Result<AydCoefficient> {
    if n.flavour == AydFlavour::RIGHT_LEFT {
        report.note(Erratum::AydModuleNaming);
    }
    dualize_ayd_module(n, h)
}

use crate::ayd::{AydCoefficient, CheckState};
use crate::error::{Error, Result};
use crate::hopf::{diagonal_action, HopfData};
use crate::linalg::{kernel, Subspace};
use crate::matrix::Matrix;
use crate::reps::{ModuleRep, Side};

/// Largest ambient hom-space dimension a build may allocate by default.
pub const DEFAULT_DIM_CAP: usize = 20_000;

/// A basis of `Hom_H(X^{⊗n+1}, M)` inside the full hom-space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivariantBasis {
    pub n: usize,
    pub dim_x: usize,
    pub dim_m: usize,
    pub space: Subspace,
}

impl EquivariantBasis {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn ambient_dim(&self) -> usize {
        self.space.ambient_dim
    }

    /// Number of tensor slots, `n + 1`.
    pub fn slots(&self) -> usize {
        self.n + 1
    }
}

/// `X^{⊗legs}` with the diagonal action.
pub fn tensor_power_module(h: &HopfData, x: &ModuleRep, legs: usize) -> ModuleRep {
    let action = (0..h.dim()).map(|i| diagonal_action(h, &x.action, i, legs)).collect();
    ModuleRep { dim: x.dim.pow(legs as u32), side: Side::Left, action }
}

pub fn check_cap(dim_x: usize, slots: usize, dim_m: usize, cap: usize) -> Result<usize> {
    let needed = (dim_x as u128).pow(slots as u32) * dim_m as u128;
    if needed > cap as u128 {
        return Err(Error::DimensionCap { needed: needed.min(usize::MAX as u128) as usize, cap });
    }
    Ok(needed as usize)
}

/// Kernel of the intertwiner constraints `f∘(h·) = (h·)∘f` for every basis `h`.
pub fn equivariant_hom_basis(h: &HopfData, x: &ModuleRep, m: &AydCoefficient, n: usize, cap: usize) -> Result<EquivariantBasis> {
    if m.compat_checked != CheckState::Pass {
        return Err(Error::PrerequisiteFailed("coefficient has not passed its compatibility check".into()));
    }
    equivariant_hom_basis_unchecked(h, x, m, n, cap)
}

pub(crate) fn equivariant_hom_basis_unchecked(
    h: &HopfData,
    x: &ModuleRep,
    m: &AydCoefficient,
    n: usize,
    cap: usize,
) -> Result<EquivariantBasis> {
    if x.side != Side::Left || m.action.side != Side::Left {
        return Err(Error::PrerequisiteFailed("equivariant maps need left actions on both sides".into()));
    }
    if x.action.len() != h.dim() || m.action.action.len() != h.dim() {
        return Err(Error::ShapeMismatch("action matrices do not match the Hopf algebra".into()));
    }
    let dm = m.dim();
    let ambient = check_cap(x.dim, n + 1, dm, cap)?;
    let f = h.field();
    let dx_pow = x.dim.pow(n as u32 + 1);
    let mut system = Matrix::zeros(f, 0, ambient);
    for i in 0..h.dim() {
        let rho = diagonal_action(h, &x.action, i, n + 1);
        // vec(F ρ(h)) − vec(ρ_M(h) F)
        let block = rho
            .transpose()
            .kron(&Matrix::identity(f, dm))
            .sub(&Matrix::identity(f, dx_pow).kron(&m.action.action[i]));
        system = system.vstack(&block);
    }
    Ok(EquivariantBasis { n, dim_x: x.dim, dim_m: dm, space: kernel(&system) })
}

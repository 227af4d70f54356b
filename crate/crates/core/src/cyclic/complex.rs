use super::equivariant::{check_cap, equivariant_hom_basis_unchecked, EquivariantBasis, DEFAULT_DIM_CAP};
use super::{check_module_algebra, check_module_coalgebra, ModuleAlgebraData, ModuleCoalgebraData};
use crate::ayd::{AydCoefficient, AydFlavour, CheckState};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::hopf::HopfData;
use crate::linalg::solve_in_span;
use crate::matrix::{tensor_digits, tensor_index, Matrix};
use crate::report::{matrix_witness, Erratum, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ComplexKind {
    CyclicOfCoalgebra,
    CocyclicOfAlgebra,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuildOptions {
    /// Build even if the coefficient fails stability.
    pub allow_unstable: bool,
    /// Build even if the coefficient fails its flavour identity; operators may then escape.
    pub allow_incompatible: bool,
    pub dim_cap: usize,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions { allow_unstable: false, allow_incompatible: false, dim_cap: DEFAULT_DIM_CAP }
    }
}

/// Spaces and structure maps of a (co)cyclic module, degrees `0..=max_degree`.
///
/// Cyclic kind: `faces[n][i] = d_i : C_n → C_{n-1}`, `degeneracies[n][j] = s_j : C_n → C_{n+1}`.
/// Cocyclic kind: `faces[n][i] = δ_i : C^{n-1} → C^n`, `degeneracies[n][j] = σ_j : C^{n+1} → C^n`.
/// `cyclic[n]` is `t_n` (or `τ_n`). All matrices act on coordinates in `bases`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicComplexData {
    pub kind: ComplexKind,
    pub field: FieldSpec,
    pub max_degree: usize,
    pub bases: Vec<EquivariantBasis>,
    pub faces: Vec<Vec<Matrix>>,
    pub degeneracies: Vec<Vec<Matrix>>,
    pub cyclic: Vec<Matrix>,
}

impl CyclicComplexData {
    pub fn dims(&self) -> Vec<usize> {
        self.bases.iter().map(|b| b.dim()).collect()
    }
}

/// Raw ingredients for the pointwise operator formulas on full hom-vectors.
struct Ops {
    field: FieldSpec,
    dx: usize,
    dm: usize,
    dh: usize,
    /// `act[β][out][in]` for the action on X.
    act: Vec<Matrix>,
    alpha: Matrix,
    /// Coalgebra case: `Δ(e_c)` terms; algebra case: empty.
    comul: Vec<Vec<(Scalar, usize, usize)>>,
    counit: Vec<Scalar>,
    /// Algebra case: `prod[a][b]` is `e_a e_b` in coordinates.
    prod: Vec<Vec<Vec<Scalar>>>,
    unit: Vec<Scalar>,
}

impl Ops {
    fn zero_vec(&self, slots: usize) -> Vec<Scalar> {
        vec![self.field.zero(); self.dx.pow(slots as u32) * self.dm]
    }

    fn at<'a>(&self, f: &'a [Scalar], digits: &[usize], k: usize) -> &'a Scalar {
        &f[tensor_index(digits, self.dx) * self.dm + k]
    }

    /// `α` applied to `φ ∈ Hom(H, M)` given as `φ[β·dm + k]`.
    fn apply_alpha(&self, phi: &[Scalar], out: &mut [Scalar], offset: usize) {
        for m in 0..self.dm {
            let mut acc = self.field.zero();
            for (col, v) in phi.iter().enumerate() {
                if !v.is_zero() {
                    let a = self.alpha.get(m, col);
                    if !a.is_zero() {
                        acc = acc + a * v;
                    }
                }
            }
            out[offset + m] = acc;
        }
    }

    /// `d_i : (n+1 slots) → (n slots)`.
    fn cyc_face(&self, f: &[Scalar], n: usize, i: usize) -> Vec<Scalar> {
        let mut g = self.zero_vec(n);
        for t in 0..self.dx.pow(n as u32) {
            let d = tensor_digits(t, self.dx, n);
            if i < n {
                for (coef, a, b) in &self.comul[d[i]] {
                    let mut inp = d[..i].to_vec();
                    inp.extend([*a, *b]);
                    inp.extend_from_slice(&d[i + 1..]);
                    for k in 0..self.dm {
                        let v = self.at(f, &inp, k);
                        if !v.is_zero() {
                            g[t * self.dm + k] = &g[t * self.dm + k] + &(coef * v);
                        }
                    }
                }
            } else {
                // α(h ↦ f(c⁰₍₂₎, c¹, …, c^{n-1}, h·c⁰₍₁₎))
                let mut phi = vec![self.field.zero(); self.dh * self.dm];
                for (coef, a, b) in &self.comul[d[0]] {
                    let mut inp = vec![*b];
                    inp.extend_from_slice(&d[1..]);
                    inp.push(0);
                    for beta in 0..self.dh {
                        for c in 0..self.dx {
                            let w = self.act[beta].get(c, *a);
                            if w.is_zero() {
                                continue;
                            }
                            *inp.last_mut().unwrap() = c;
                            let cw = coef * w;
                            for k in 0..self.dm {
                                let v = self.at(f, &inp, k);
                                if !v.is_zero() {
                                    phi[beta * self.dm + k] = &phi[beta * self.dm + k] + &(&cw * v);
                                }
                            }
                        }
                    }
                }
                self.apply_alpha(&phi, &mut g, t * self.dm);
            }
        }
        g
    }

    /// `s_j : (n+1 slots) → (n+2 slots)`, inserting `ε` at slot `j+1`.
    fn cyc_degeneracy(&self, f: &[Scalar], n: usize, j: usize) -> Vec<Scalar> {
        let mut g = self.zero_vec(n + 2);
        for t in 0..self.dx.pow(n as u32 + 2) {
            let d = tensor_digits(t, self.dx, n + 2);
            let e = &self.counit[d[j + 1]];
            if e.is_zero() {
                continue;
            }
            let mut inp = d.clone();
            inp.remove(j + 1);
            for k in 0..self.dm {
                g[t * self.dm + k] = e * self.at(f, &inp, k);
            }
        }
        g
    }

    /// `t_n(f)(c⁰, …, cⁿ) = α(h ↦ f(c¹, …, cⁿ, h·c⁰))`.
    fn cyc_cyclic(&self, f: &[Scalar], n: usize) -> Vec<Scalar> {
        let slots = n + 1;
        let mut g = self.zero_vec(slots);
        for t in 0..self.dx.pow(slots as u32) {
            let d = tensor_digits(t, self.dx, slots);
            let mut inp = d[1..].to_vec();
            inp.push(0);
            let mut phi = vec![self.field.zero(); self.dh * self.dm];
            for beta in 0..self.dh {
                for c in 0..self.dx {
                    let w = self.act[beta].get(c, d[0]);
                    if w.is_zero() {
                        continue;
                    }
                    *inp.last_mut().unwrap() = c;
                    for k in 0..self.dm {
                        let v = self.at(f, &inp, k);
                        if !v.is_zero() {
                            phi[beta * self.dm + k] = &phi[beta * self.dm + k] + &(w * v);
                        }
                    }
                }
            }
            self.apply_alpha(&phi, &mut g, t * self.dm);
        }
        g
    }

    /// `δ_i : (n slots) → (n+1 slots)`.
    fn cocyc_face(&self, f: &[Scalar], n: usize, i: usize) -> Vec<Scalar> {
        let mut g = self.zero_vec(n + 1);
        for t in 0..self.dx.pow(n as u32 + 1) {
            let d = tensor_digits(t, self.dx, n + 1);
            if i < n {
                let mut inp = d[..i].to_vec();
                inp.push(0);
                inp.extend_from_slice(&d[i + 2..]);
                for (l, coef) in self.prod[d[i]][d[i + 1]].iter().enumerate() {
                    if coef.is_zero() {
                        continue;
                    }
                    inp[i] = l;
                    for k in 0..self.dm {
                        let v = self.at(f, &inp, k);
                        if !v.is_zero() {
                            g[t * self.dm + k] = &g[t * self.dm + k] + &(coef * v);
                        }
                    }
                }
            } else {
                // α(h ↦ f((h·aⁿ)a⁰, a¹, …, a^{n-1}))
                let mut inp = vec![0];
                inp.extend_from_slice(&d[1..n]);
                let mut phi = vec![self.field.zero(); self.dh * self.dm];
                for beta in 0..self.dh {
                    for c in 0..self.dx {
                        let w = self.act[beta].get(c, d[n]);
                        if w.is_zero() {
                            continue;
                        }
                        for (l, coef) in self.prod[c][d[0]].iter().enumerate() {
                            if coef.is_zero() {
                                continue;
                            }
                            inp[0] = l;
                            let cw = w * coef;
                            for k in 0..self.dm {
                                let v = self.at(f, &inp, k);
                                if !v.is_zero() {
                                    phi[beta * self.dm + k] = &phi[beta * self.dm + k] + &(&cw * v);
                                }
                            }
                        }
                    }
                }
                self.apply_alpha(&phi, &mut g, t * self.dm);
            }
        }
        g
    }

    /// `σ_j : (n+2 slots) → (n+1 slots)`, inserting `1_A` at slot `j+1`.
    fn cocyc_degeneracy(&self, f: &[Scalar], n: usize, j: usize) -> Vec<Scalar> {
        let mut g = self.zero_vec(n + 1);
        for t in 0..self.dx.pow(n as u32 + 1) {
            let d = tensor_digits(t, self.dx, n + 1);
            let mut inp = d[..=j].to_vec();
            inp.push(0);
            inp.extend_from_slice(&d[j + 1..]);
            for (l, u) in self.unit.iter().enumerate() {
                if u.is_zero() {
                    continue;
                }
                inp[j + 1] = l;
                for k in 0..self.dm {
                    let v = self.at(f, &inp, k);
                    if !v.is_zero() {
                        g[t * self.dm + k] = &g[t * self.dm + k] + &(u * v);
                    }
                }
            }
        }
        g
    }

    /// `τ_n(f)(a⁰, …, aⁿ) = α(h ↦ f(h·aⁿ, a⁰, …, a^{n-1}))`.
    fn cocyc_cyclic(&self, f: &[Scalar], n: usize) -> Vec<Scalar> {
        let slots = n + 1;
        let mut g = self.zero_vec(slots);
        for t in 0..self.dx.pow(slots as u32) {
            let d = tensor_digits(t, self.dx, slots);
            let mut inp = vec![0];
            inp.extend_from_slice(&d[..n]);
            let mut phi = vec![self.field.zero(); self.dh * self.dm];
            for beta in 0..self.dh {
                for c in 0..self.dx {
                    let w = self.act[beta].get(c, d[n]);
                    if w.is_zero() {
                        continue;
                    }
                    inp[0] = c;
                    for k in 0..self.dm {
                        let v = self.at(f, &inp, k);
                        if !v.is_zero() {
                            phi[beta * self.dm + k] = &phi[beta * self.dm + k] + &(w * v);
                        }
                    }
                }
            }
            self.apply_alpha(&phi, &mut g, t * self.dm);
        }
        g
    }
}

/// Applies `op` to every basis vector of `src`, then expresses the results in `dst`.
fn restrict(
    src: &EquivariantBasis,
    dst: &EquivariantBasis,
    field: FieldSpec,
    name: &str,
    degree: usize,
    op: impl Fn(&[Scalar]) -> Vec<Scalar>,
) -> Result<Matrix> {
    let images: Vec<Vec<Scalar>> = (0..src.dim()).map(|c| op(&src.space.basis.column(c))).collect();
    let targets = Matrix::from_columns(field, dst.ambient_dim(), &images);
    solve_in_span(&dst.space.basis, &targets).map_err(|column| Error::NotEquivariant {
        operator: name.to_string(),
        degree,
        column,
    })
}

fn admit_coefficient(h: &HopfData, m: &AydCoefficient, want: AydFlavour, opts: &BuildOptions) -> Result<AydCoefficient> {
    if m.flavour != want {
        return Err(Error::PrerequisiteFailed(format!("coefficient has flavour {}, expected {want}", m.flavour)));
    }
    if m.alpha.over.dim != h.dim() {
        return Err(Error::ShapeMismatch("coefficient is not a contramodule over this Hopf algebra".into()));
    }
    let mut m = m.clone();
    if m.compat_checked == CheckState::Unchecked || m.stable_checked == CheckState::Unchecked {
        m.evaluate(h)?;
    }
    if m.compat_checked != CheckState::Pass && !opts.allow_incompatible {
        return Err(Error::PrerequisiteFailed(format!("coefficient fails the {} compatibility identity", m.flavour)));
    }
    if m.stable_checked != CheckState::Pass && !opts.allow_unstable {
        return Err(Error::PrerequisiteFailed("coefficient is not stable".into()));
    }
    Ok(m)
}

fn bases_through(
    h: &HopfData,
    x: &crate::reps::ModuleRep,
    m: &AydCoefficient,
    top: usize,
    cap: usize,
) -> Result<Vec<EquivariantBasis>> {
    check_cap(x.dim, top + 1, m.dim(), cap)?;
    (0..=top).map(|n| equivariant_hom_basis_unchecked(h, x, m, n, cap)).collect()
}

fn base_ops(h: &HopfData, x: &crate::reps::ModuleRep, m: &AydCoefficient) -> Ops {
    Ops {
        field: h.field(),
        dx: x.dim,
        dm: m.dim(),
        dh: h.dim(),
        act: x.action.clone(),
        alpha: m.alpha.alpha.clone(),
        comul: vec![],
        counit: vec![],
        prod: vec![],
        unit: vec![],
    }
}

/// Cyclic module `Hom_H(C^{⊗n+1}, M)` of a module coalgebra with a left-right coefficient.
pub fn build_cyclic_complex(
    h: &HopfData,
    c: &ModuleCoalgebraData,
    m: &AydCoefficient,
    max_degree: usize,
    opts: &BuildOptions,
) -> Result<CyclicComplexData> {
    let rep = check_module_coalgebra(c, h)?;
    if let Some(v) = rep.failures().next() {
        return Err(Error::PrerequisiteFailed(format!("module coalgebra check failed: {}", v.name)));
    }
    let m = admit_coefficient(h, m, AydFlavour::LEFT_RIGHT, opts)?;
    let bases = bases_through(h, &c.h_action, &m, max_degree, opts.dim_cap)?;
    let mut ops = base_ops(h, &c.h_action, &m);
    ops.comul = (0..c.dim()).map(|i| c.coalgebra.coproduct_terms(i)).collect();
    ops.counit = (0..c.dim()).map(|i| c.coalgebra.counit_of(i).clone()).collect();
    let f = h.field();
    let mut faces = vec![vec![]];
    let mut degeneracies = vec![];
    let mut cyclic = vec![];
    for n in 0..=max_degree {
        if n > 0 {
            let row = (0..=n)
                .map(|i| restrict(&bases[n], &bases[n - 1], f, &format!("d_{i}"), n, |v| ops.cyc_face(v, n, i)))
                .collect::<Result<Vec<_>>>()?;
            faces.push(row);
        }
        let row = if n < max_degree {
            (0..=n)
                .map(|j| restrict(&bases[n], &bases[n + 1], f, &format!("s_{j}"), n, |v| ops.cyc_degeneracy(v, n, j)))
                .collect::<Result<Vec<_>>>()?
        } else {
            vec![]
        };
        degeneracies.push(row);
        cyclic.push(restrict(&bases[n], &bases[n], f, &format!("t_{n}"), n, |v| ops.cyc_cyclic(v, n))?);
    }
    Ok(CyclicComplexData { kind: ComplexKind::CyclicOfCoalgebra, field: f, max_degree, bases, faces, degeneracies, cyclic })
}

/// Cocyclic module `Hom_H(A^{⊗n+1}, M)` of a module algebra with a left-left coefficient.
pub fn build_cocyclic_complex(
    h: &HopfData,
    a: &ModuleAlgebraData,
    m: &AydCoefficient,
    max_degree: usize,
    opts: &BuildOptions,
) -> Result<CyclicComplexData> {
    let rep = check_module_algebra(a, h)?;
    if let Some(v) = rep.failures().next() {
        return Err(Error::PrerequisiteFailed(format!("module algebra check failed: {}", v.name)));
    }
    let m = admit_coefficient(h, m, AydFlavour::LEFT_LEFT, opts)?;
    let bases = bases_through(h, &a.h_action, &m, max_degree, opts.dim_cap)?;
    let mut ops = base_ops(h, &a.h_action, &m);
    ops.prod = (0..a.dim()).map(|i| (0..a.dim()).map(|j| a.algebra.basis_product(i, j)).collect()).collect();
    ops.unit = a.algebra.unit_vector();
    let f = h.field();
    let mut faces = vec![vec![]];
    let mut degeneracies = vec![];
    let mut cyclic = vec![];
    for n in 0..=max_degree {
        if n > 0 {
            let row = (0..=n)
                .map(|i| restrict(&bases[n - 1], &bases[n], f, &format!("delta_{i}"), n, |v| ops.cocyc_face(v, n, i)))
                .collect::<Result<Vec<_>>>()?;
            faces.push(row);
        }
        let row = if n < max_degree {
            (0..=n)
                .map(|j| {
                    restrict(&bases[n + 1], &bases[n], f, &format!("sigma_{j}"), n, |v| ops.cocyc_degeneracy(v, n, j))
                })
                .collect::<Result<Vec<_>>>()?
        } else {
            vec![]
        };
        degeneracies.push(row);
        cyclic.push(restrict(&bases[n], &bases[n], f, &format!("tau_{n}"), n, |v| ops.cocyc_cyclic(v, n))?);
    }
    Ok(CyclicComplexData { kind: ComplexKind::CocyclicOfAlgebra, field: f, max_degree, bases, faces, degeneracies, cyclic })
}

/// Left and right `A`-actions on `Hom(A, M)`, one matrix per basis element of `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomBimodule {
    pub dim_a: usize,
    pub dim_m: usize,
    pub left: Vec<Matrix>,
    pub right: Vec<Matrix>,
}

/// `(a·f)(b) = f(ba)` and `(f·a)(b) = α(h ↦ f((h·a)b))`.
pub fn hom_bimodule_actions(h: &HopfData, a: &ModuleAlgebraData, m: &AydCoefficient) -> Result<HomBimodule> {
    if m.alpha.side != crate::reps::Side::Left {
        return Err(Error::PrerequisiteFailed("right action on Hom(A, M) needs a left contramodule".into()));
    }
    let rep = check_module_algebra(a, h)?;
    if let Some(v) = rep.failures().next() {
        return Err(Error::PrerequisiteFailed(format!("module algebra check failed: {}", v.name)));
    }
    let contra = crate::reps::check_contramodule(&m.alpha)?;
    if let Some(v) = contra.failures().next() {
        return Err(Error::PrerequisiteFailed(format!("contramodule check failed: {}", v.name)));
    }
    let f = h.field();
    let (da, dm) = (a.dim(), m.dim());
    let id_m = Matrix::identity(f, dm);
    let left = (0..da).map(|i| a.algebra.right_mult(i).transpose().kron(&id_m)).collect();
    let right = (0..da)
        .map(|i| {
            // (β·a)·b as the matrix b ↦ (e_β·a)b, for each β
            let lm: Vec<Matrix> =
                (0..h.dim()).map(|beta| a.algebra.left_mult_by(&a.h_action.action[beta].column(i))).collect();
            Matrix::from_fn(f, da * dm, da * dm, |r, c| {
                let (b, mo) = (r / dm, r % dm);
                let (s, k) = (c / dm, c % dm);
                let mut acc = f.zero();
                for (beta, l) in lm.iter().enumerate() {
                    let x = l.get(s, b);
                    if !x.is_zero() {
                        acc = acc + m.alpha.alpha.get(mo, beta * dm + k) * x;
                    }
                }
                acc
            })
        })
        .collect();
    Ok(HomBimodule { dim_a: da, dim_m: dm, left, right })
}

/// Associativity, unitality and compatibility of the two actions on all basis pairs.
pub fn verify_bimodule_laws(a: &ModuleAlgebraData, b: &HomBimodule) -> Report {
    let f = a.algebra.field();
    let mut rep = Report::new("hom bimodule");
    rep.note(Erratum::RightActionAssociativity);
    let combine = |family: &[Matrix], coords: &[Scalar]| {
        let mut acc = Matrix::zeros(f, b.dim_a * b.dim_m, b.dim_a * b.dim_m);
        for (k, c) in coords.iter().enumerate() {
            if !c.is_zero() {
                acc.add_scaled(c, &family[k]);
            }
        }
        acc
    };
    let unit = a.algebra.unit_vector();
    let id = Matrix::identity(f, b.dim_a * b.dim_m);
    let locate = |i: usize, j: usize| move |r: usize, c: usize| (vec![i, j, c, r], vec!["a".into(), "a'".into(), "in".into(), "out".into()]);
    let (mut w_left, mut w_right, mut w_compat) = (None, None, None);
    for i in 0..b.dim_a {
        for j in 0..b.dim_a {
            let prod = a.algebra.basis_product(i, j);
            // a·(a'·f) = (aa')·f
            let lhs = b.left[i].mul(&b.left[j]);
            if w_left.is_none() {
                w_left = matrix_witness(&lhs, &combine(&b.left, &prod), locate(i, j));
            }
            // (f·a)·a' = f·(aa')
            let lhs = b.right[j].mul(&b.right[i]);
            if w_right.is_none() {
                w_right = matrix_witness(&lhs, &combine(&b.right, &prod), locate(i, j));
            }
            // (a·f)·a' = a·(f·a')
            let lhs = b.right[j].mul(&b.left[i]);
            let rhs = b.left[i].mul(&b.right[j]);
            if w_compat.is_none() {
                w_compat = matrix_witness(&lhs, &rhs, locate(i, j));
            }
        }
    }
    rep.record("left associativity", w_left);
    rep.record("right associativity", w_right);
    rep.record("left unitality", matrix_witness(&combine(&b.left, &unit), &id, |r, c| (vec![c, r], vec!["in".into(), "out".into()])));
    rep.record("right unitality", matrix_witness(&combine(&b.right, &unit), &id, |r, c| (vec![c, r], vec!["in".into(), "out".into()])));
    rep.record("action compatibility", w_compat);
    rep
}

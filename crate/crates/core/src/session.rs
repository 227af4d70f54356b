//! Session files: a JSON document naming a field, a Hopf algebra, optional
//! module (co)algebras, coefficients and tasks.
//!
//! Scalars are strings `"n"` or `"n/d"` (integers are also accepted); all
//! indices are 0-based. Sparse tensors are lists of index tuples ending in a scalar.

use std::collections::HashMap;
use std::path::Path;

use serde::Deserialize;
use sha2::{Digest, Sha256};

use crate::ayd::{dualize_ayd_module_noted, AydCoefficient, AydFlavour, AydModuleData};
use crate::cyclic::{HomologyMode, ModuleAlgebraData, ModuleCoalgebraData};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::hopf::{build_named_example, AlgebraData, CoalgebraData, HopfData};
use crate::matrix::Matrix;
use crate::reps::{ComoduleRep, ContraRep, ModuleRep};
use crate::report::{Erratum, Report};

#[derive(Deserialize)]
#[serde(untagged)]
enum RawScalar {
    Int(i64),
    Text(String),
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawHopf {
    Named(String),
    Explicit(RawHopfExplicit),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawHopfExplicit {
    name: Option<String>,
    dim: usize,
    mul: Vec<(usize, usize, usize, RawScalar)>,
    unit: Vec<RawScalar>,
    comul: Vec<(usize, usize, usize, RawScalar)>,
    counit: Vec<RawScalar>,
    antipode: Vec<(usize, usize, RawScalar)>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawKind {
    kind: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCoefficient {
    id: String,
    kind: String,
    flavour: Option<String>,
    of: Option<String>,
    module: Option<String>,
    character: Option<Vec<RawScalar>>,
    element: Option<Vec<RawScalar>>,
    dim: Option<usize>,
    action: Option<Vec<(usize, usize, usize, RawScalar)>>,
    alpha: Option<Vec<(usize, usize, RawScalar)>>,
    coaction: Option<Vec<(usize, usize, RawScalar)>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTask {
    command: String,
    coefficient: Option<String>,
    max_degree: Option<usize>,
    mode: Option<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSession {
    field: String,
    hopf: RawHopf,
    module_coalgebra: Option<RawKind>,
    module_algebra: Option<RawKind>,
    #[serde(default)]
    coefficients: Vec<RawCoefficient>,
    #[serde(default)]
    tasks: Vec<RawTask>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoefficientValue {
    Contra(AydCoefficient),
    Module(AydModuleData),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientEntry {
    pub id: String,
    pub value: CoefficientValue,
    /// Convention notes to emit whenever the coefficient is used.
    pub errata: Vec<Erratum>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TaskKind {
    Check,
    BuildCyclic,
    BuildCocyclic,
    Homology,
    Homconn,
    Duality,
}

impl TaskKind {
    pub fn name(&self) -> &'static str {
        match self {
            TaskKind::Check => "check",
            TaskKind::BuildCyclic => "build-cyclic",
            TaskKind::BuildCocyclic => "build-cocyclic",
            TaskKind::Homology => "homology",
            TaskKind::Homconn => "homconn",
            TaskKind::Duality => "duality",
        }
    }

    fn parse(s: &str) -> Option<TaskKind> {
        [
            TaskKind::Check,
            TaskKind::BuildCyclic,
            TaskKind::BuildCocyclic,
            TaskKind::Homology,
            TaskKind::Homconn,
            TaskKind::Duality,
        ]
        .into_iter()
        .find(|k| k.name() == s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Task {
    pub kind: TaskKind,
    /// Index into `Session::coefficients`.
    pub coefficient: Option<usize>,
    pub max_degree: Option<usize>,
    pub mode: Option<HomologyMode>,
}

#[derive(Clone, Debug)]
pub struct Session {
    /// Hex sha256 of the input bytes.
    pub digest: String,
    pub field: FieldSpec,
    pub hopf: HopfData,
    pub module_coalgebra: Option<ModuleCoalgebraData>,
    pub module_algebra: Option<ModuleAlgebraData>,
    pub coefficients: Vec<CoefficientEntry>,
    pub tasks: Vec<Task>,
}

impl Session {
    pub fn hopf_label(&self) -> String {
        self.hopf.name.clone().unwrap_or_else(|| "explicit".into())
    }

    pub fn coefficient(&self, id: &str) -> Option<&CoefficientEntry> {
        self.coefficients.iter().find(|c| c.id == id)
    }
}

pub fn load_session(path: impl AsRef<Path>) -> Result<Session, SessionError> {
    let bytes = std::fs::read(path.as_ref()).map_err(|e| SessionError::Io(format!("{}: {e}", path.as_ref().display())))?;
    parse_session(&bytes).map_err(SessionError::Core)
}

/// Either an I/O failure or a parse/validation error.
#[derive(Debug, thiserror::Error)]
pub enum SessionError {
    #[error("io error: {0}")]
    Io(String),
    #[error(transparent)]
    Core(#[from] Error),
}

pub fn parse_session(bytes: &[u8]) -> Result<Session> {
    let digest = hex::encode(Sha256::digest(bytes));
    let raw: RawSession = serde_json::from_slice(bytes)
        .map_err(|e| Error::Parse(format!("line {} column {}: {e}", e.line(), e.column())))?;
    let invalid = |path: &str, msg: String| Error::Validation(format!("{path}: {msg}"));
    let field: FieldSpec = raw.field.parse().map_err(|e: Error| invalid("field", e.to_string()))?;
    let sc = |path: &str, v: &RawScalar| -> Result<Scalar> {
        match v {
            RawScalar::Int(i) => Ok(field.from_i64(*i)),
            RawScalar::Text(s) => field.parse_scalar(s).map_err(|e| invalid(path, e.to_string())),
        }
    };
    let vec_of = |path: &str, vs: &[RawScalar]| -> Result<Vec<Scalar>> {
        vs.iter().enumerate().map(|(i, v)| sc(&format!("{path}[{i}]"), v)).collect()
    };
    let hopf = match &raw.hopf {
        RawHopf::Named(name) => build_named_example(name, field).map_err(|e| invalid("hopf", e.to_string()))?,
        RawHopf::Explicit(x) => {
            let quad = |path: &str, es: &[(usize, usize, usize, RawScalar)]| -> Result<Vec<(usize, usize, usize, Scalar)>> {
                es.iter()
                    .enumerate()
                    .map(|(k, (i, j, l, s))| Ok((*i, *j, *l, sc(&format!("{path}[{k}]"), s)?)))
                    .collect()
            };
            let alg = AlgebraData::from_sparse(field, x.dim, &quad("hopf.mul", &x.mul)?, vec_of("hopf.unit", &x.unit)?)
                .map_err(|e| invalid("hopf.mul", e.to_string()))?;
            let coalg = CoalgebraData::from_sparse(field, x.dim, &quad("hopf.comul", &x.comul)?, vec_of("hopf.counit", &x.counit)?)
                .map_err(|e| invalid("hopf.comul", e.to_string()))?;
            let mut s = Matrix::zeros(field, x.dim, x.dim);
            for (k, (i, j, v)) in x.antipode.iter().enumerate() {
                if *i >= x.dim || *j >= x.dim {
                    return Err(invalid(&format!("hopf.antipode[{k}]"), format!("index ({i},{j}) out of range")));
                }
                s.add_at(*j, *i, &sc(&format!("hopf.antipode[{k}]"), v)?);
            }
            let h = HopfData::with_antipode(alg, coalg, s).map_err(|e| invalid("hopf.antipode", e.to_string()))?;
            match &x.name {
                Some(n) => h.named(n),
                None => h,
            }
        }
    };
    let module_coalgebra = match &raw.module_coalgebra {
        None => None,
        Some(k) => Some(match k.kind.as_str() {
            "regular" => ModuleCoalgebraData::regular(&hopf),
            "ground" => ModuleCoalgebraData::ground(&hopf),
            other => return Err(invalid("module_coalgebra.kind", format!("unknown kind {other:?}"))),
        }),
    };
    let module_algebra = match &raw.module_algebra {
        None => None,
        Some(k) => Some(match k.kind.as_str() {
            "ground" => ModuleAlgebraData::ground(&hopf),
            "adjoint" => ModuleAlgebraData::adjoint(&hopf),
            "left_multiplication" => ModuleAlgebraData::left_multiplication(&hopf),
            other => return Err(invalid("module_algebra.kind", format!("unknown kind {other:?}"))),
        }),
    };

    let dh = hopf.dim();
    let mut coefficients: Vec<CoefficientEntry> = Vec::new();
    let mut ids: HashMap<String, usize> = HashMap::new();
    for (ci, c) in raw.coefficients.iter().enumerate() {
        let path = format!("coefficients[{ci}]");
        if ids.contains_key(&c.id) {
            return Err(invalid(&format!("{path}.id"), format!("duplicate id {:?}", c.id)));
        }
        let flavour = || -> Result<AydFlavour> {
            let s = c.flavour.as_deref().ok_or_else(|| invalid(&format!("{path}.flavour"), "missing".into()))?;
            s.parse().map_err(|e: Error| invalid(&format!("{path}.flavour"), e.to_string()))
        };
        let need_len = |what: &str, v: &Option<Vec<RawScalar>>| -> Result<Vec<Scalar>> {
            let p = format!("{path}.{what}");
            let v = v.as_ref().ok_or_else(|| invalid(&p, "missing".into()))?;
            if v.len() != dh {
                return Err(invalid(&p, format!("expected {dh} entries, got {}", v.len())));
            }
            vec_of(&p, v)
        };
        let wrap = |e: Error| invalid(&path, e.to_string());
        let mut errata = Vec::new();
        let value = match c.kind.as_str() {
            "trivial" => {
                CoefficientValue::Contra(crate::ayd::build_trivial_coefficient(&hopf, flavour()?).map_err(wrap)?)
            }
            "one_dimensional" => {
                let chi = need_len("character", &c.character)?;
                let el = need_len("element", &c.element)?;
                CoefficientValue::Contra(AydCoefficient::one_dimensional(&hopf, flavour()?, &chi, &el).map_err(wrap)?)
            }
            "contramodule" => {
                let fl = flavour()?;
                let dm = c.dim.ok_or_else(|| invalid(&format!("{path}.dim"), "missing".into()))?;
                let action = parse_action(&path, c.action.as_ref(), dh, dm, field, &sc)?;
                let mut alpha = Matrix::zeros(field, dm, dh * dm);
                let entries = c.alpha.as_ref().ok_or_else(|| invalid(&format!("{path}.alpha"), "missing".into()))?;
                for (k, (i, j, v)) in entries.iter().enumerate() {
                    let p = format!("{path}.alpha[{k}]");
                    if *i >= dm || *j >= dh * dm {
                        return Err(invalid(&p, format!("index ({i},{j}) out of range")));
                    }
                    alpha.add_at(*i, *j, &sc(&p, v)?);
                }
                let alpha = ContraRep { dim: dm, side: fl.contra_side, over: hopf.coalgebra.clone(), alpha };
                CoefficientValue::Contra(
                    AydCoefficient::new(fl, ModuleRep { dim: dm, side: fl.module_side, action }, alpha).map_err(wrap)?,
                )
            }
            "ayd_module" => {
                let fl = flavour()?;
                let n = match (c.module.as_deref(), c.dim) {
                    (Some("regular"), _) => AydModuleData::regular(&hopf, fl).map_err(wrap)?,
                    (Some("one_dimensional"), _) => {
                        let chi = need_len("character", &c.character)?;
                        let el = need_len("element", &c.element)?;
                        AydModuleData::one_dimensional(&hopf, fl, &chi, &el).map_err(wrap)?
                    }
                    (Some(other), _) => return Err(invalid(&format!("{path}.module"), format!("unknown module {other:?}"))),
                    (None, Some(dn)) => {
                        let action = parse_action(&path, c.action.as_ref(), dh, dn, field, &sc)?;
                        let mut rho = Matrix::zeros(field, dh * dn, dn);
                        let entries =
                            c.coaction.as_ref().ok_or_else(|| invalid(&format!("{path}.coaction"), "missing".into()))?;
                        for (k, (i, j, v)) in entries.iter().enumerate() {
                            let p = format!("{path}.coaction[{k}]");
                            if *i >= dh * dn || *j >= dn {
                                return Err(invalid(&p, format!("index ({i},{j}) out of range")));
                            }
                            rho.add_at(*i, *j, &sc(&p, v)?);
                        }
                        AydModuleData::new(
                            fl,
                            ModuleRep { dim: dn, side: fl.module_side, action },
                            ComoduleRep { dim: dn, side: fl.contra_side, coaction: rho },
                        )
                        .map_err(wrap)?
                    }
                    (None, None) => return Err(invalid(&format!("{path}.module"), "missing".into())),
                };
                CoefficientValue::Module(n)
            }
            "dual" => {
                let of = c.of.as_deref().ok_or_else(|| invalid(&format!("{path}.of"), "missing".into()))?;
                let src = ids
                    .get(of)
                    .map(|&i| &coefficients[i])
                    .ok_or_else(|| invalid(&format!("{path}.of"), format!("unknown coefficient {of:?}")))?;
                let CoefficientValue::Module(n) = &src.value else {
                    return Err(invalid(&format!("{path}.of"), format!("{of:?} is not an ayd_module")));
                };
                let mut notes = Report::new("");
                let m = dualize_ayd_module_noted(n, &hopf, &mut notes).map_err(wrap)?;
                errata.extend(notes.errata);
                CoefficientValue::Contra(m)
            }
            other => return Err(invalid(&format!("{path}.kind"), format!("unknown kind {other:?}"))),
        };
        ids.insert(c.id.clone(), coefficients.len());
        coefficients.push(CoefficientEntry { id: c.id.clone(), value, errata });
    }

    let mut tasks = Vec::new();
    for (ti, t) in raw.tasks.iter().enumerate() {
        let path = format!("tasks[{ti}]");
        let kind = TaskKind::parse(&t.command)
            .ok_or_else(|| invalid(&format!("{path}.command"), format!("unknown command {:?}", t.command)))?;
        let coefficient = match &t.coefficient {
            None => None,
            Some(id) => Some(
                *ids.get(id).ok_or_else(|| invalid(&format!("{path}.coefficient"), format!("unknown coefficient {id:?}")))?,
            ),
        };
        let needs_coefficient = !matches!(kind, TaskKind::Check);
        if needs_coefficient && coefficient.is_none() {
            return Err(invalid(&format!("{path}.coefficient"), "missing".into()));
        }
        let needs = |present: bool, what: &str| -> Result<()> {
            if present {
                Ok(())
            } else {
                Err(invalid(&path, format!("{} needs {what}", kind.name())))
            }
        };
        match kind {
            TaskKind::BuildCyclic | TaskKind::Duality => needs(module_coalgebra.is_some(), "module_coalgebra")?,
            TaskKind::BuildCocyclic => needs(module_algebra.is_some(), "module_algebra")?,
            TaskKind::Homology => {
                let idx = coefficient.unwrap();
                let cyclic = matches!(&coefficients[idx].value, CoefficientValue::Contra(m) if m.flavour == AydFlavour::LEFT_RIGHT);
                if cyclic {
                    needs(module_coalgebra.is_some(), "module_coalgebra")?
                } else {
                    needs(module_algebra.is_some(), "module_algebra")?
                }
            }
            _ => {}
        }
        let mode = match &t.mode {
            None => None,
            Some(m) => Some(m.parse().map_err(|e: Error| invalid(&format!("{path}.mode"), e.to_string()))?),
        };
        tasks.push(Task { kind, coefficient, max_degree: t.max_degree, mode });
    }
    Ok(Session { digest, field, hopf, module_coalgebra, module_algebra, coefficients, tasks })
}

fn parse_action(
    path: &str,
    entries: Option<&Vec<(usize, usize, usize, RawScalar)>>,
    dh: usize,
    dim: usize,
    field: FieldSpec,
    sc: &dyn Fn(&str, &RawScalar) -> Result<Scalar>,
) -> Result<Vec<Matrix>> {
    let entries = entries.ok_or_else(|| Error::Validation(format!("{path}.action: missing")))?;
    let mut action = vec![Matrix::zeros(field, dim, dim); dh];
    for (k, (h, i, j, v)) in entries.iter().enumerate() {
        let p = format!("{path}.action[{k}]");
        if *h >= dh || *i >= dim || *j >= dim {
            return Err(Error::Validation(format!("{p}: index ({h},{i},{j}) out of range")));
        }
        action[*h].add_at(*i, *j, &sc(&p, v)?);
    }
    Ok(action)
}

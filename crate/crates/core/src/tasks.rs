//! Running session tasks and rendering deterministic reports.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::ayd::{check_ayd_module, dualize_ayd_module, AydCoefficient, AydFlavour};
use crate::cyclic::{
    build_cocyclic_complex, build_cyclic_complex, check_module_algebra, check_module_coalgebra, equivariant_hom_basis,
    hom_bimodule_actions, homology_dims, tensor_over_h, tensor_power_module, verify_bimodule_laws, verify_cyclic_relations,
    BuildOptions, CyclicComplexData, HomologyMode, DEFAULT_DIM_CAP,
};
use crate::error::{Error, Result};
use crate::homconn::{build_ayd_coring, check_coring_contramodule, curvature_and_flatness, hom_connection_from_contramodule};
use crate::hopf::check_hopf_axioms;
use crate::report::{DimensionTable, Erratum, Report, Verdict};
use crate::session::{CoefficientEntry, CoefficientValue, Session, TaskKind};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");
pub const DEFAULT_MAX_DEGREE: usize = 3;

/// What the front end asked for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Check,
    BuildCyclic,
    BuildCocyclic,
    Homology,
    Homconn,
    /// Every declared task, in order.
    Report,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Check => "check",
            Command::BuildCyclic => "build-cyclic",
            Command::BuildCocyclic => "build-cocyclic",
            Command::Homology => "homology",
            Command::Homconn => "homconn",
            Command::Report => "report",
        }
    }

    fn selects(&self, kind: TaskKind) -> bool {
        match self {
            Command::Report => true,
            Command::Check => kind == TaskKind::Check,
            Command::BuildCyclic => kind == TaskKind::BuildCyclic,
            Command::BuildCocyclic => kind == TaskKind::BuildCocyclic,
            Command::Homology => kind == TaskKind::Homology,
            Command::Homconn => kind == TaskKind::Homconn,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunOptions {
    pub max_degree: Option<usize>,
    pub mode: Option<HomologyMode>,
    pub allow_unstable: bool,
    pub dim_cap: usize,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { max_degree: None, mode: None, allow_unstable: false, dim_cap: DEFAULT_DIM_CAP }
    }
}

#[derive(Clone, Debug)]
pub struct TaskOutcome {
    pub index: usize,
    pub kind: TaskKind,
    pub label: String,
    pub verdicts: Vec<Verdict>,
    pub tables: Vec<DimensionTable>,
    pub error: Option<Error>,
}

impl TaskOutcome {
    pub fn passed(&self) -> bool {
        self.error.is_none() && self.verdicts.iter().all(|v| v.pass)
    }
}

#[derive(Clone, Debug)]
pub struct SessionReport {
    pub command: Command,
    pub digest: String,
    pub field: String,
    pub hopf: String,
    pub hopf_dim: usize,
    pub tasks: Vec<TaskOutcome>,
    pub errata: BTreeSet<Erratum>,
}

impl SessionReport {
    pub fn all_pass(&self) -> bool {
        self.tasks.iter().all(TaskOutcome::passed)
    }

    /// 0 if everything passes, the first task error's code, otherwise 1.
    pub fn exit_code(&self) -> i32 {
        if let Some(e) = self.tasks.iter().find_map(|t| t.error.as_ref()) {
            return e.exit_code();
        }
        if self.all_pass() {
            0
        } else {
            1
        }
    }

    pub fn verdict_count(&self) -> (usize, usize) {
        let total = self.tasks.iter().map(|t| t.verdicts.len()).sum();
        let failed = self.tasks.iter().map(|t| t.verdicts.iter().filter(|v| !v.pass).count()).sum();
        (total, failed)
    }

    pub fn render_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "hopfcontra {TOOL_VERSION}");
        let _ = writeln!(s, "input sha256: {}", self.digest);
        let _ = writeln!(s, "command: {}", self.command.name());
        let _ = writeln!(s, "field: {}", self.field);
        let _ = writeln!(s, "hopf: {} (dim {})", self.hopf, self.hopf_dim);
        for t in &self.tasks {
            let status = match (&t.error, t.passed()) {
                (Some(_), _) => "ERROR",
                (None, true) => "PASS",
                (None, false) => "FAIL",
            };
            let _ = writeln!(s, "\n[task {}] {} {}: {status}", t.index, t.kind.name(), t.label);
            for v in &t.verdicts {
                let _ = write!(s, "  {} {}", if v.pass { "pass" } else { "FAIL" }, v.name);
                if let Some(w) = &v.witness {
                    let at: Vec<String> = w.labels.iter().zip(&w.indices).map(|(l, i)| format!("{l}={i}")).collect();
                    let _ = write!(s, "  [{}] expected {} got {}", at.join(" "), w.expected, w.actual);
                }
                s.push('\n');
            }
            for tab in &t.tables {
                let cells: Vec<String> = tab.dims.iter().map(|(n, d)| format!("{n}:{d}")).collect();
                let _ = writeln!(s, "  table {}  {}", tab.label, cells.join(" "));
            }
            if let Some(e) = &t.error {
                let _ = writeln!(s, "  error {} (exit {}): {e}", e.kind(), e.exit_code());
            }
        }
        if !self.errata.is_empty() {
            s.push_str("\nerrata:\n");
            for e in &self.errata {
                let _ = writeln!(s, "  {}: {}", e.code(), e.note());
            }
        }
        let (total, failed) = self.verdict_count();
        let _ = writeln!(
            s,
            "\nresult: {} ({} verdicts, {} failed, exit {})",
            if self.all_pass() { "PASS" } else { "FAIL" },
            total,
            failed,
            self.exit_code()
        );
        s
    }

    pub fn to_json(&self) -> Value {
        let (total, failed) = self.verdict_count();
        let tasks: Vec<Value> = self
            .tasks
            .iter()
            .map(|t| {
                let mut v = json!({
                    "index": t.index,
                    "task": t.kind.name(),
                    "label": t.label,
                    "pass": t.passed(),
                    "verdicts": t.verdicts,
                    "tables": t.tables,
                });
                if let Some(e) = &t.error {
                    v["error"] = json!({"kind": e.kind(), "exit_code": e.exit_code(), "message": e.to_string()});
                }
                v
            })
            .collect();
        json!({
            "tool": "hopfcontra",
            "version": TOOL_VERSION,
            "input_sha256": self.digest,
            "command": self.command.name(),
            "field": self.field,
            "hopf": {"name": self.hopf, "dim": self.hopf_dim},
            "tasks": tasks,
            "errata": self.errata.iter().map(|e| json!({"code": e.code(), "note": e.note()})).collect::<Vec<_>>(),
            "summary": {"verdicts": total, "failed": failed, "pass": self.all_pass(), "exit_code": self.exit_code()},
        })
    }

    /// Canonical machine-readable form: sorted keys, two-space indent, trailing newline.
    pub fn render_canonical(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("report serializes");
        s.push('\n');
        s
    }
}

struct Sink {
    verdicts: Vec<Verdict>,
    tables: Vec<DimensionTable>,
    errata: BTreeSet<Erratum>,
}

impl Sink {
    fn absorb(&mut self, r: Report) {
        let title = r.title.clone();
        for mut v in r.verdicts {
            if !title.is_empty() {
                v.name = format!("{title}/{}", v.name);
            }
            self.verdicts.push(v);
        }
        self.tables.extend(r.tables);
        self.errata.extend(r.errata);
    }

    fn failed_prerequisite(&mut self, name: String, e: &Error) {
        self.verdicts.push(Verdict {
            name,
            pass: false,
            witness: Some(crate::report::Witness {
                indices: vec![],
                labels: vec![],
                expected: "valid input".into(),
                actual: e.to_string(),
            }),
        });
    }
}

/// Runs the tasks selected by `command`. `check` runs even when not declared.
pub fn run(session: &Session, command: Command, opts: &RunOptions) -> Result<SessionReport> {
    let mut selected: Vec<(usize, TaskKind, Option<usize>)> = session
        .tasks
        .iter()
        .enumerate()
        .filter(|(_, t)| command.selects(t.kind))
        .map(|(i, t)| (i, t.kind, t.coefficient))
        .collect();
    if selected.is_empty() {
        if command == Command::Check {
            selected.push((session.tasks.len(), TaskKind::Check, None));
        } else {
            return Err(Error::Validation(format!("tasks: session declares no {} task", command.name())));
        }
    }
    let mut errata = BTreeSet::new();
    let mut outcomes = Vec::new();
    for (index, kind, coef) in selected {
        let task = session.tasks.get(index);
        let max_degree = opts.max_degree.or(task.and_then(|t| t.max_degree)).unwrap_or(DEFAULT_MAX_DEGREE);
        let mode = opts.mode.or(task.and_then(|t| t.mode)).unwrap_or(HomologyMode::Hochschild);
        let entry = coef.map(|c| &session.coefficients[c]);
        let mut sink = Sink { verdicts: vec![], tables: vec![], errata: BTreeSet::new() };
        if let Some(e) = entry {
            sink.errata.extend(e.errata.iter().copied());
        }
        let label = match (entry, kind) {
            (Some(e), TaskKind::Homology) => format!("{} ({mode:?}, degree {max_degree})", e.id),
            (Some(e), TaskKind::Homconn) => e.id.clone(),
            (Some(e), _) => format!("{} (degree {max_degree})", e.id),
            (None, _) => "all structures".to_string(),
        };
        let result = match kind {
            TaskKind::Check => run_check(session, &mut sink),
            TaskKind::BuildCyclic | TaskKind::BuildCocyclic => {
                run_build(session, entry.unwrap(), kind, max_degree, opts, &mut sink).map(|_| ())
            }
            TaskKind::Homology => run_homology(session, entry.unwrap(), max_degree, mode, opts, &mut sink),
            TaskKind::Homconn => run_homconn(session, entry.unwrap(), &mut sink),
            TaskKind::Duality => run_duality(session, entry.unwrap(), max_degree, opts, &mut sink),
        };
        errata.extend(sink.errata.iter().copied());
        outcomes.push(TaskOutcome { index, kind, label, verdicts: sink.verdicts, tables: sink.tables, error: result.err() });
    }
    Ok(SessionReport {
        command,
        digest: session.digest.clone(),
        field: session.field.to_string(),
        hopf: session.hopf_label(),
        hopf_dim: session.hopf.dim(),
        tasks: outcomes,
        errata,
    })
}

fn run_check(session: &Session, sink: &mut Sink) -> Result<()> {
    let h = &session.hopf;
    let mut r = check_hopf_axioms(h)?;
    r.title = "hopf".into();
    sink.absorb(r);
    if let Some(c) = &session.module_coalgebra {
        sink.absorb(check_module_coalgebra(c, h)?);
    }
    if let Some(a) = &session.module_algebra {
        sink.absorb(check_module_algebra(a, h)?);
    }
    for e in &session.coefficients {
        sink.errata.extend(e.errata.iter().copied());
        let outcome = match &e.value {
            CoefficientValue::Contra(m) => m.clone().evaluate(h),
            CoefficientValue::Module(n) => check_ayd_module(n, h),
        };
        match outcome {
            Ok(mut r) => {
                r.title = format!("coefficient {}", e.id);
                sink.absorb(r);
            }
            Err(err @ Error::PrerequisiteFailed(_)) => sink.failed_prerequisite(format!("coefficient {}/prerequisites", e.id), &err),
            Err(err) => return Err(err),
        }
    }
    Ok(())
}

fn contra(entry: &CoefficientEntry, want: AydFlavour) -> Result<&AydCoefficient> {
    match &entry.value {
        CoefficientValue::Contra(m) if m.flavour == want => Ok(m),
        CoefficientValue::Contra(m) => Err(Error::PrerequisiteFailed(format!(
            "coefficient {} has flavour {}, the task needs {want}",
            entry.id, m.flavour
        ))),
        CoefficientValue::Module(_) => {
            Err(Error::PrerequisiteFailed(format!("coefficient {} is a module, not a contramodule", entry.id)))
        }
    }
}

fn dims_table(label: &str, d: &CyclicComplexData, upto: usize) -> DimensionTable {
    DimensionTable { label: label.into(), dims: d.dims().into_iter().take(upto + 1).enumerate().collect() }
}

fn run_build(
    session: &Session,
    entry: &CoefficientEntry,
    kind: TaskKind,
    max_degree: usize,
    opts: &RunOptions,
    sink: &mut Sink,
) -> Result<CyclicComplexData> {
    let h = &session.hopf;
    let bopts = BuildOptions { allow_unstable: opts.allow_unstable, allow_incompatible: false, dim_cap: opts.dim_cap };
    let d = if kind == TaskKind::BuildCyclic {
        let m = contra(entry, AydFlavour::LEFT_RIGHT)?;
        build_cyclic_complex(h, session.module_coalgebra.as_ref().unwrap(), m, max_degree, &bopts)?
    } else {
        let m = contra(entry, AydFlavour::LEFT_LEFT)?;
        let a = session.module_algebra.as_ref().unwrap();
        let d = build_cocyclic_complex(h, a, m, max_degree, &bopts)?;
        sink.absorb(verify_bimodule_laws(a, &hom_bimodule_actions(h, a, m)?));
        d
    };
    let label = if kind == TaskKind::BuildCyclic { "dim C_n" } else { "dim C^n" };
    sink.tables.push(dims_table(label, &d, max_degree));
    sink.absorb(verify_cyclic_relations(&d));
    Ok(d)
}

fn run_homology(
    session: &Session,
    entry: &CoefficientEntry,
    max_degree: usize,
    mode: HomologyMode,
    opts: &RunOptions,
    sink: &mut Sink,
) -> Result<()> {
    let cyclic = matches!(&entry.value, CoefficientValue::Contra(m) if m.flavour == AydFlavour::LEFT_RIGHT);
    if mode == HomologyMode::ConnesLambda {
        crate::cyclic::require_characteristic_zero(session.field, "the Connes λ-complex")?;
    }
    let kind = if cyclic { TaskKind::BuildCyclic } else { TaskKind::BuildCocyclic };
    let d = run_build(session, entry, kind, max_degree + 1, opts, sink)?;
    let simplicial = sink.verdicts.iter().filter(|v| v.name.contains("relation (") && !v.name.ends_with("relation (f)"));
    if simplicial.into_iter().any(|v| !v.pass) {
        return Err(Error::PrerequisiteFailed("simplicial relations fail".into()));
    }
    if mode == HomologyMode::ConnesLambda && sink.verdicts.iter().any(|v| !v.pass) {
        return Err(Error::PrerequisiteFailed("cyclic relations fail".into()));
    }
    sink.tables.push(homology_dims(&d, mode)?);
    Ok(())
}

fn run_homconn(session: &Session, entry: &CoefficientEntry, sink: &mut Sink) -> Result<()> {
    let h = &session.hopf;
    let m = contra(entry, AydFlavour::RIGHT_RIGHT)?;
    let coring = build_ayd_coring(h)?;
    sink.absorb(coring.report.clone());
    sink.absorb(check_coring_contramodule(&coring, h, m)?);
    let hc = hom_connection_from_contramodule(h, m)?;
    sink.absorb(hc.dga.report.clone());
    let dims = hc.dga.omega_dims;
    sink.tables.push(DimensionTable { label: "dim Omega^n".into(), dims: dims.into_iter().enumerate().collect() });
    let (_, rep) = curvature_and_flatness(h, &hc);
    sink.absorb(rep);
    Ok(())
}

fn run_duality(session: &Session, entry: &CoefficientEntry, max_degree: usize, opts: &RunOptions, sink: &mut Sink) -> Result<()> {
    let h = &session.hopf;
    let CoefficientValue::Module(n) = &entry.value else {
        return Err(Error::PrerequisiteFailed(format!("duality needs an ayd_module, {} is a contramodule", entry.id)));
    };
    let x = &session.module_coalgebra.as_ref().unwrap().h_action;
    let m = dualize_ayd_module(n, h)?.evaluated(h)?;
    let mut tensor_dims = Vec::new();
    let mut hom_dims = Vec::new();
    let mut rep = Report::new("duality");
    for deg in 0..=max_degree {
        crate::cyclic::check_cap(x.dim, deg + 1, n.dim(), opts.dim_cap)?;
        let t = tensor_over_h(h, &n.action, &tensor_power_module(h, x, deg + 1))?;
        let e = equivariant_hom_basis(h, x, &m, deg, opts.dim_cap)?;
        let w = (t.dim != e.dim()).then(|| crate::report::Witness {
            indices: vec![deg],
            labels: vec!["n".into()],
            expected: t.dim.to_string(),
            actual: e.dim().to_string(),
        });
        rep.record(format!("dimension n={deg}"), w);
        tensor_dims.push((deg, t.dim));
        hom_dims.push((deg, e.dim()));
    }
    rep.tables.push(DimensionTable { label: "dim N (x)_H C^(n+1)".into(), dims: tensor_dims });
    rep.tables.push(DimensionTable { label: "dim Hom_H(C^(n+1), N*)".into(), dims: hom_dims });
    sink.absorb(rep);
    Ok(())
}

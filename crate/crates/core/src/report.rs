//! Machine-readable verdicts.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::field::Scalar;
use crate::matrix::Matrix;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// Basis indices locating the failure; their meaning is given by `labels`.
    pub indices: Vec<usize>,
    pub labels: Vec<String>,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

/// Convention notes for places where the implemented formula deliberately
/// differs from a common (mis)reading of it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Erratum {
    CurryConvention,
    AydModuleNaming,
    ModuleAlgebraAxiom,
    RightActionAssociativity,
}

impl Erratum {
    pub fn code(&self) -> &'static str {
        match self {
            Erratum::CurryConvention => "curry-convention",
            Erratum::AydModuleNaming => "ayd-module-naming",
            Erratum::ModuleAlgebraAxiom => "module-algebra-axiom",
            Erratum::RightActionAssociativity => "right-action-associativity",
        }
    }

    pub fn note(&self) -> &'static str {
        match self {
            Erratum::CurryConvention => {
                "curry isomorphism implemented as Theta(f)(c (x) c') = f(c)(c'); the self-referential display Theta(f)(c (x) c') = Theta(f)(c)(c') is read this way"
            }
            Erratum::AydModuleNaming => {
                "the right-left module dualised here satisfies the anti-Yetter-Drinfeld condition rho(x.h) = S(h3) x(-1) h1 (x) x(0).h2; it is not a Yetter-Drinfeld module"
            }
            Erratum::ModuleAlgebraAxiom => {
                "module-algebra axiom implemented as h.(a a') = (h1.a)(h2.a'); the display (h1.a)(h2.a) is read with the missing prime"
            }
            Erratum::RightActionAssociativity => {
                "right action on Hom(A, M) checked as (f.a).a' = f.(aa'); the final step written as ((aa').f)(b) denotes the right action"
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimensionTable {
    pub label: String,
    /// `(degree, dimension)` pairs in increasing degree.
    pub dims: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub title: String,
    pub verdicts: Vec<Verdict>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub tables: Vec<DimensionTable>,
    #[serde(skip)]
    pub errata: BTreeSet<Erratum>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report { title: title.into(), ..Default::default() }
    }

    pub fn all_pass(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Verdict> {
        self.verdicts.iter().filter(|v| !v.pass)
    }

    pub fn verdict(&self, name: &str) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| v.name == name)
    }

    pub fn passed(&self, name: &str) -> bool {
        self.verdict(name).is_some_and(|v| v.pass)
    }

    pub fn pass(&mut self, name: impl Into<String>) {
        self.verdicts.push(Verdict { name: name.into(), pass: true, witness: None });
    }

    pub fn fail(&mut self, name: impl Into<String>, witness: Witness) {
        self.verdicts.push(Verdict { name: name.into(), pass: false, witness: Some(witness) });
    }

    pub fn record(&mut self, name: impl Into<String>, witness: Option<Witness>) {
        match witness {
            None => self.pass(name),
            Some(w) => self.fail(name, w),
        }
    }

    /// Records whether `lhs == rhs`; on failure the first differing entry is
    /// decoded into basis indices by `locate(row, col)`.
    pub fn compare(
        &mut self,
        name: impl Into<String>,
        lhs: &Matrix,
        rhs: &Matrix,
        locate: impl Fn(usize, usize) -> (Vec<usize>, Vec<String>),
    ) -> bool {
        let w = matrix_witness(lhs, rhs, locate);
        let ok = w.is_none();
        self.record(name, w);
        ok
    }

    pub fn note(&mut self, e: Erratum) {
        self.errata.insert(e);
    }

    pub fn merge(&mut self, other: Report) {
        let prefix = other.title.clone();
        for mut v in other.verdicts {
            if !prefix.is_empty() {
                v.name = format!("{prefix}/{}", v.name);
            }
            self.verdicts.push(v);
        }
        self.tables.extend(other.tables);
        self.errata.extend(other.errata);
    }
}

pub fn matrix_witness(
    lhs: &Matrix,
    rhs: &Matrix,
    locate: impl Fn(usize, usize) -> (Vec<usize>, Vec<String>),
) -> Option<Witness> {
    if lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols() {
        return Some(Witness {
            indices: vec![],
            labels: vec![],
            expected: format!("{}x{}", rhs.rows(), rhs.cols()),
            actual: format!("{}x{}", lhs.rows(), lhs.cols()),
        });
    }
    lhs.first_difference(rhs).map(|(r, c)| {
        let (indices, labels) = locate(r, c);
        Witness {
            indices,
            labels,
            expected: rhs.get(r, c).to_canonical(),
            actual: lhs.get(r, c).to_canonical(),
        }
    })
}

pub fn scalar_witness(indices: Vec<usize>, labels: &[&str], expected: &Scalar, actual: &Scalar) -> Witness {
    Witness {
        indices,
        labels: labels.iter().map(|s| s.to_string()).collect(),
        expected: expected.to_canonical(),
        actual: actual.to_canonical(),
    }
}

/// Locator for plain `(row, col)` witnesses.
pub fn plain(r: usize, c: usize) -> (Vec<usize>, Vec<String>) {
    (vec![r, c], vec!["row".into(), "col".into()])
}

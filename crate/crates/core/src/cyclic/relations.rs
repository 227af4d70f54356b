use super::complex::{ComplexKind, CyclicComplexData};
use crate::matrix::Matrix;
use crate::report::{Report, Witness};

pub const RELATIONS: [&str; 6] = ["a", "b", "c", "d", "e", "f"];

struct Tally {
    first: [Option<Witness>; 6],
}

impl Tally {
    fn check(&mut self, rel: usize, n: usize, i: usize, j: usize, lhs: &Matrix, rhs: &Matrix) {
        if self.first[rel].is_some() {
            return;
        }
        let w = if lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols() {
            Some(Witness {
                indices: vec![n, i, j],
                labels: vec!["n".into(), "i".into(), "j".into()],
                expected: format!("{}x{}", rhs.rows(), rhs.cols()),
                actual: format!("{}x{}", lhs.rows(), lhs.cols()),
            })
        } else {
            lhs.first_difference(rhs).map(|(r, c)| Witness {
                indices: vec![n, i, j, c, r],
                labels: vec!["n".into(), "i".into(), "j".into(), "column".into(), "row".into()],
                expected: rhs.get(r, c).to_canonical(),
                actual: lhs.get(r, c).to_canonical(),
            })
        };
        self.first[rel] = w;
    }
}

/// Checks the full list of (co)cyclic relations among all operators present in `d`.
///
/// Verdicts are named `relation (a)` … `relation (f)`; `(f)` is `t_n^{n+1} = id`.
pub fn verify_cyclic_relations(d: &CyclicComplexData) -> Report {
    let mut tally = Tally { first: Default::default() };
    match d.kind {
        ComplexKind::CyclicOfCoalgebra => cyclic_relations(d, &mut tally),
        ComplexKind::CocyclicOfAlgebra => cocyclic_relations(d, &mut tally),
    }
    let mut rep = Report::new(match d.kind {
        ComplexKind::CyclicOfCoalgebra => "cyclic relations",
        ComplexKind::CocyclicOfAlgebra => "cocyclic relations",
    });
    for (k, w) in tally.first.into_iter().enumerate() {
        rep.record(format!("relation ({})", RELATIONS[k]), w);
    }
    rep
}

fn cyclic_relations(d: &CyclicComplexData, t: &mut Tally) {
    let top = d.max_degree;
    let face = |n: usize, i: usize| &d.faces[n][i];
    let degen = |n: usize, j: usize| &d.degeneracies[n][j];
    let cyc = |n: usize| &d.cyclic[n];
    let id = |n: usize| Matrix::identity(d.field, d.bases[n].dim());
    for n in 2..=top {
        for j in 0..=n {
            for i in 0..j {
                t.check(0, n, i, j, &face(n - 1, i).mul(face(n, j)), &face(n - 1, j - 1).mul(face(n, i)));
            }
        }
    }
    for n in 0..top.saturating_sub(1) {
        for j in 0..=n {
            for i in 0..=j {
                t.check(1, n, i, j, &degen(n + 1, i).mul(degen(n, j)), &degen(n + 1, j + 1).mul(degen(n, i)));
            }
        }
    }
    for n in 0..top {
        for j in 0..=n {
            for i in 0..=n + 1 {
                let lhs = face(n + 1, i).mul(degen(n, j));
                let rhs = if i < j {
                    degen(n - 1, j - 1).mul(face(n, i))
                } else if i == j || i == j + 1 {
                    id(n)
                } else {
                    degen(n - 1, j).mul(face(n, i - 1))
                };
                t.check(2, n, i, j, &lhs, &rhs);
            }
        }
    }
    for n in 1..=top {
        for i in 1..=n {
            t.check(3, n, i, 0, &face(n, i).mul(cyc(n)), &cyc(n - 1).mul(face(n, i - 1)));
        }
        t.check(3, n, 0, 0, &face(n, 0).mul(cyc(n)), face(n, n));
    }
    for n in 0..top {
        for i in 1..=n {
            t.check(4, n, i, 0, &degen(n, i).mul(cyc(n)), &cyc(n + 1).mul(degen(n, i - 1)));
        }
        t.check(4, n, 0, 0, &degen(n, 0).mul(cyc(n)), &cyc(n + 1).pow(2).mul(degen(n, n)));
    }
    for n in 0..=top {
        t.check(5, n, 0, 0, &cyc(n).pow(n + 1), &id(n));
    }
}

fn cocyclic_relations(d: &CyclicComplexData, t: &mut Tally) {
    let top = d.max_degree;
    let coface = |n: usize, i: usize| &d.faces[n][i];
    let codegen = |n: usize, j: usize| &d.degeneracies[n][j];
    let cyc = |n: usize| &d.cyclic[n];
    let id = |n: usize| Matrix::identity(d.field, d.bases[n].dim());
    // δ_j δ_i = δ_i δ_{j-1} on C^{n-1} → C^{n+1}
    for n in 1..top {
        for j in 0..=n + 1 {
            for i in 0..j {
                t.check(0, n, i, j, &coface(n + 1, j).mul(coface(n, i)), &coface(n + 1, i).mul(coface(n, j - 1)));
            }
        }
    }
    // σ_j σ_i = σ_i σ_{j+1} on C^{n+2} → C^n
    for n in 0..top.saturating_sub(1) {
        for j in 0..=n {
            for i in 0..=j {
                t.check(1, n, i, j, &codegen(n, j).mul(codegen(n + 1, i)), &codegen(n, i).mul(codegen(n + 1, j + 1)));
            }
        }
    }
    // σ_j δ_i on C^n
    for n in 0..top {
        for j in 0..=n {
            for i in 0..=n + 1 {
                let lhs = codegen(n, j).mul(coface(n + 1, i));
                let rhs = if i < j {
                    coface(n, i).mul(codegen(n - 1, j - 1))
                } else if i == j || i == j + 1 {
                    id(n)
                } else {
                    coface(n, i - 1).mul(codegen(n - 1, j))
                };
                t.check(2, n, i, j, &lhs, &rhs);
            }
        }
    }
    // τ_n δ_i = δ_{i-1} τ_{n-1}, τ_n δ_0 = δ_n
    for n in 1..=top {
        for i in 1..=n {
            t.check(3, n, i, 0, &cyc(n).mul(coface(n, i)), &coface(n, i - 1).mul(cyc(n - 1)));
        }
        t.check(3, n, 0, 0, &cyc(n).mul(coface(n, 0)), coface(n, n));
    }
    // τ_n σ_i = σ_{i-1} τ_{n+1}, τ_n σ_0 = σ_n τ_{n+1}²
    for n in 0..top {
        for i in 1..=n {
            t.check(4, n, i, 0, &cyc(n).mul(codegen(n, i)), &codegen(n, i - 1).mul(cyc(n + 1)));
        }
        t.check(4, n, 0, 0, &cyc(n).mul(codegen(n, 0)), &codegen(n, n).mul(&cyc(n + 1).pow(2)));
    }
    for n in 0..=top {
        t.check(5, n, 0, 0, &cyc(n).pow(n + 1), &id(n));
    }
}

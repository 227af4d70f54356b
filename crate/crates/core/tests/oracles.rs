//! Brute-force oracles, written without the library's linear algebra, for the
//! frozen dimension tables.

use hopfcontra::ayd::{build_trivial_coefficient, AydFlavour};
use hopfcontra::cyclic::{
    build_cocyclic_complex, build_cyclic_complex, homology_dims, BuildOptions, HomologyMode, ModuleAlgebraData,
    ModuleCoalgebraData,
};
use hopfcontra::hopf::build_named_example;
use hopfcontra::FieldSpec;

type IntMatrix = Vec<Vec<i128>>;

/// Fraction-free (Bareiss) rank of an integer matrix.
fn rank(m: &IntMatrix) -> usize {
    let mut a = m.clone();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let (mut r, mut prev) = (0, 1i128);
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| a[i][c] != 0) else { continue };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

fn mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter().map(|row| (0..cols).map(|j| (0..inner).map(|k| row[k] * b[k][j]).sum()).collect()).collect()
}

fn hcat(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    a.iter().zip(b).map(|(x, y)| x.iter().chain(y).copied().collect()).collect()
}

fn zeros(r: usize, c: usize) -> IntMatrix {
    vec![vec![0; c]; r]
}

/// Tuples over `0..base` of length `len`, slot 0 most significant.
fn decode(mut idx: usize, base: usize, len: usize) -> Vec<usize> {
    let mut t = vec![0; len];
    for slot in (0..len).rev() {
        t[slot] = idx % base;
        idx /= base;
    }
    t
}

fn encode(t: &[usize], base: usize) -> usize {
    t.iter().fold(0, |acc, &d| acc * base + d)
}

/// Pullback matrix of `f ↦ f∘φ` from functions on `base^src_len` tuples to
/// functions on `base^tgt_len` tuples.
fn pullback(base: usize, tgt_len: usize, src_len: usize, phi: impl Fn(&[usize]) -> Vec<usize>) -> IntMatrix {
    let rows = base.pow(tgt_len as u32);
    let mut m = zeros(rows, base.pow(src_len as u32));
    for r in 0..rows {
        m[r][encode(&phi(&decode(r, base, tgt_len)), base)] += 1;
    }
    m
}

/// Group `Z/order`; element `k` is `g^k`. Cyclic module of the regular module
/// coalgebra with `M = k`, `α(f) = f(1)`, on functions of group tuples.
struct GroupCyclic {
    order: usize,
}

impl GroupCyclic {
    fn face(&self, n: usize, i: usize) -> IntMatrix {
        pullback(self.order, n, n + 1, |t| {
            let mut s = t.to_vec();
            if i < n {
                s.insert(i, t[i]);
            } else {
                s.push(t[0]);
            }
            s
        })
    }

    fn cyclic(&self, n: usize) -> IntMatrix {
        pullback(self.order, n + 1, n + 1, |t| {
            let mut s = t[1..].to_vec();
            s.push(t[0]);
            s
        })
    }

    fn boundary(&self, n: usize) -> IntMatrix {
        let mut b = zeros(self.order.pow(n as u32), self.order.pow(n as u32 + 1));
        for i in 0..=n {
            let d = self.face(n, i);
            let sign = if i % 2 == 0 { 1 } else { -1 };
            for (row, drow) in b.iter_mut().zip(&d) {
                for (x, y) in row.iter_mut().zip(drow) {
                    *x += sign * y;
                }
            }
        }
        b
    }

    /// Indicator functions of the diagonal orbits: a basis of the invariant maps.
    fn invariants(&self, n: usize) -> IntMatrix {
        let size = self.order.pow(n as u32 + 1);
        let mut seen = vec![false; size];
        let mut cols = vec![];
        for start in 0..size {
            if seen[start] {
                continue;
            }
            let mut col = vec![0; size];
            for k in 0..self.order {
                let t: Vec<usize> = decode(start, self.order, n + 1).iter().map(|&d| (d + k) % self.order).collect();
                let idx = encode(&t, self.order);
                seen[idx] = true;
                col[idx] = 1;
            }
            cols.push(col);
        }
        (0..size).map(|r| cols.iter().map(|c| c[r]).collect()).collect()
    }

    fn dims(&self, top: usize) -> Vec<usize> {
        (0..=top).map(|n| self.invariants(n).first().map_or(0, Vec::len)).collect()
    }

    fn hochschild(&self, top: usize) -> Vec<usize> {
        let dims = self.dims(top + 1);
        let rank_b = |n: usize| if n == 0 { 0 } else { rank(&mul(&self.boundary(n), &self.invariants(n))) };
        (0..=top).map(|n| dims[n] - rank_b(n) - rank_b(n + 1)).collect()
    }

    /// `im(1 - λ_n)` inside the ambient function space.
    fn lambda_image(&self, n: usize) -> IntMatrix {
        let t = self.cyclic(n);
        let sign = if n.is_multiple_of(2) { 1 } else { -1 };
        let one_minus: IntMatrix = t
            .iter()
            .enumerate()
            .map(|(r, row)| row.iter().enumerate().map(|(c, &v)| i128::from(r == c) - sign * v).collect())
            .collect();
        mul(&one_minus, &self.invariants(n))
    }

    fn connes(&self, top: usize) -> Vec<usize> {
        let dims = self.dims(top + 1);
        let image = |n: usize| self.lambda_image(n);
        // Rank of b_n read in the quotient of degree n-1.
        let quotient_rank = |n: usize| {
            if n == 0 {
                return 0;
            }
            let b = mul(&self.boundary(n), &self.invariants(n));
            let i = image(n - 1);
            rank(&hcat(&b, &i)) - rank(&i)
        };
        (0..=top).map(|n| dims[n] - rank(&image(n)) - quotient_rank(n) - quotient_rank(n + 1)).collect()
    }
}

/// Cocyclic module of `A = k` with the trivial coefficient: every `C^n = k`,
/// every coface and the cyclic operator are the identity.
fn ground_cocyclic_connes(top: usize) -> Vec<usize> {
    let coboundary = |n: usize| -> IntMatrix {
        if n == 0 {
            return zeros(1, 0);
        }
        vec![vec![(0..=n).map(|i| if i % 2 == 0 { 1 } else { -1 }).sum()]]
    };
    let invariant_dim = |n: usize| if n.is_multiple_of(2) { 1 } else { 0 };
    // On the invariant subcomplex the coboundary is the restriction of the full one.
    let restricted_rank = |n: usize| {
        if n == 0 || invariant_dim(n) == 0 || invariant_dim(n - 1) == 0 {
            0
        } else {
            rank(&coboundary(n))
        }
    };
    (0..=top).map(|n| invariant_dim(n) - restricted_rank(n + 1) - restricted_rank(n)).collect()
}

fn table(dims: &[(usize, usize)]) -> Vec<usize> {
    dims.iter().map(|p| p.1).collect()
}

const C2_HOCHSCHILD: [usize; 4] = [1, 0, 0, 0];
const C2_CONNES: [usize; 4] = [1, 0, 1, 0];
const C2_GROUND_CONNES: [usize; 4] = [1, 0, 1, 0];

#[test]
fn oracle_agrees_with_frozen_tables() {
    let c2 = GroupCyclic { order: 2 };
    assert_eq!(c2.dims(3), [1, 2, 4, 8]);
    assert_eq!(c2.hochschild(3), C2_HOCHSCHILD);
    assert_eq!(c2.connes(3), C2_CONNES);
    assert_eq!(ground_cocyclic_connes(3), C2_GROUND_CONNES);
}

#[test]
fn oracle_on_c3_matches_library() {
    let c3 = GroupCyclic { order: 3 };
    let h = build_named_example("group_C3", FieldSpec::Rationals).unwrap();
    let m = build_trivial_coefficient(&h, AydFlavour::LEFT_RIGHT).unwrap();
    let d = build_cyclic_complex(&h, &ModuleCoalgebraData::regular(&h), &m, 3, &BuildOptions::default()).unwrap();
    assert_eq!(d.dims(), c3.dims(3));
    assert_eq!(table(&homology_dims(&d, HomologyMode::Hochschild).unwrap().dims), c3.hochschild(2));
    assert_eq!(table(&homology_dims(&d, HomologyMode::ConnesLambda).unwrap().dims), c3.connes(2));
}

#[test]
fn library_matches_frozen_c2_tables() {
    let h = build_named_example("group_C2", FieldSpec::Rationals).unwrap();
    let lr = build_trivial_coefficient(&h, AydFlavour::LEFT_RIGHT).unwrap();
    let d = build_cyclic_complex(&h, &ModuleCoalgebraData::regular(&h), &lr, 4, &BuildOptions::default()).unwrap();
    let hh = homology_dims(&d, HomologyMode::Hochschild).unwrap();
    let hc = homology_dims(&d, HomologyMode::ConnesLambda).unwrap();
    assert_eq!(hh.label, "HH_n");
    assert_eq!(table(&hh.dims), C2_HOCHSCHILD);
    assert_eq!(table(&hc.dims), C2_CONNES);

    let ll = build_trivial_coefficient(&h, AydFlavour::LEFT_LEFT).unwrap();
    let d = build_cocyclic_complex(&h, &ModuleAlgebraData::ground(&h), &ll, 4, &BuildOptions::default()).unwrap();
    let hc = homology_dims(&d, HomologyMode::ConnesLambda).unwrap();
    assert_eq!(hc.label, "HC^n");
    assert_eq!(table(&hc.dims), C2_GROUND_CONNES);
}

/// Left regular matrices of Sweedler's algebra on the basis `1, g, x, gx`,
/// columns are images.
fn h4_left(generator: &str) -> IntMatrix {
    let images: [[i128; 4]; 4] = match generator {
        "g" => [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]],
        "x" => [[0, 0, 1, 0], [0, 0, 0, -1], [0, 0, 0, 0], [0, 0, 0, 0]],
        _ => unreachable!(),
    };
    (0..4).map(|r| (0..4).map(|c| images[c][r]).collect()).collect()
}

fn kron(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let (br, bc) = (b.len(), b[0].len());
    let mut out = zeros(a.len() * br, a[0].len() * bc);
    for (i, arow) in a.iter().enumerate() {
        for (j, &x) in arow.iter().enumerate() {
            for (k, brow) in b.iter().enumerate() {
                for (l, &y) in brow.iter().enumerate() {
                    out[i * br + k][j * bc + l] = x * y;
                }
            }
        }
    }
    out
}

fn identity(n: usize) -> IntMatrix {
    (0..n).map(|i| (0..n).map(|j| i128::from(i == j)).collect()).collect()
}

fn kron_all(factors: &[IntMatrix]) -> IntMatrix {
    factors.iter().skip(1).fold(factors[0].clone(), |acc, f| kron(&acc, f))
}

/// `dim Hom_H(H^{⊗legs}, k_ε)` from the equations `f∘(ρ(h) - ε(h)) = 0`,
/// `h ∈ {g, x}`, with `Δx = x⊗1 + g⊗x`.
fn h4_invariant_dim(legs: usize) -> usize {
    let g = h4_left("g");
    let x = h4_left("x");
    let rho_g = kron_all(&vec![g.clone(); legs]);
    let mut rho_x = zeros(4usize.pow(legs as u32), 4usize.pow(legs as u32));
    for k in 0..legs {
        let factors: Vec<IntMatrix> =
            (0..legs).map(|j| if j < k { g.clone() } else if j == k { x.clone() } else { identity(4) }).collect();
        let term = kron_all(&factors);
        for (r, row) in rho_x.iter_mut().zip(&term) {
            for (a, b) in r.iter_mut().zip(row) {
                *a += b;
            }
        }
    }
    let size = rho_g.len();
    let id = identity(size);
    let rho_g_minus: IntMatrix = rho_g.iter().zip(&id).map(|(r, i)| r.iter().zip(i).map(|(a, b)| a - b).collect()).collect();
    let transpose = |m: &IntMatrix| -> IntMatrix { (0..size).map(|c| (0..size).map(|r| m[r][c]).collect()).collect() };
    let mut equations = transpose(&rho_g_minus);
    equations.extend(transpose(&rho_x));
    size - rank(&equations)
}

#[test]
fn h4_freeness_oracle() {
    let dims: Vec<usize> = (1..=3).map(h4_invariant_dim).collect();
    assert_eq!(dims, [1, 4, 16]);
}

#[test]
fn bareiss_rank_sanity() {
    assert_eq!(rank(&vec![vec![1, 2], vec![2, 4]]), 1);
    assert_eq!(rank(&vec![vec![0, 1], vec![1, 0]]), 2);
    assert_eq!(rank(&zeros(3, 0)), 0);
    assert_eq!(rank(&vec![vec![2, 3, 5], vec![7, 11, 13], vec![17, 19, 23]]), 3);
}

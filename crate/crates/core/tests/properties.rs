use hopfcontra::hopf::{build_named_example, check_hopf_axioms, HopfData};
use hopfcontra::linalg::{inverse, kernel, rank, solve_in_span};
use hopfcontra::{FieldSpec, Matrix};
use proptest::prelude::*;

const Q: FieldSpec = FieldSpec::Rationals;

fn matrix(field: FieldSpec, rows: usize, cols: usize, entries: &[i64]) -> Matrix {
    Matrix::from_fn(field, rows, cols, |r, c| field.from_i64(entries[r * cols + c]))
}

fn small(rows: usize, cols: usize) -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(-3i64..=3, rows * cols)
}

/// Square matrices of size `n` that are invertible over Q (unit lower times unit upper).
fn invertible(n: usize) -> impl Strategy<Value = Matrix> {
    (small(n, n), small(n, n), proptest::collection::vec(prop_oneof![Just(1i64), Just(-1), Just(2)], n)).prop_map(
        move |(l, u, d)| {
            let lower = Matrix::from_fn(Q, n, n, |r, c| if r == c { Q.from_i64(d[r]) } else if r > c { Q.from_i64(l[r * n + c]) } else { Q.zero() });
            let upper = Matrix::from_fn(Q, n, n, |r, c| if r == c { Q.one() } else if r < c { Q.from_i64(u[r * n + c]) } else { Q.zero() });
            lower.mul(&upper)
        },
    )
}

/// Integer matrices with integer inverses.
fn unimodular(n: usize) -> impl Strategy<Value = Matrix> {
    (proptest::collection::vec(-1i64..=1, n * n), proptest::collection::vec(-1i64..=1, n * n)).prop_map(move |(l, u)| {
        let lower = Matrix::from_fn(Q, n, n, |r, c| if r == c { Q.one() } else if r > c { Q.from_i64(l[r * n + c]) } else { Q.zero() });
        let upper = Matrix::from_fn(Q, n, n, |r, c| if r == c { Q.one() } else if r < c { Q.from_i64(u[r * n + c]) } else { Q.zero() });
        lower.mul(&upper)
    })
}

/// The same Hopf algebra written in the basis given by the columns of `g`.
fn transport(h: &HopfData, g: &Matrix) -> HopfData {
    let gi = inverse(g).unwrap();
    let mut t = h.clone();
    t.algebra.mul = gi.mul(&h.algebra.mul).mul(&g.kron(g));
    t.algebra.unit = gi.mul(&h.algebra.unit);
    t.coalgebra.comul = gi.kron(&gi).mul(&h.coalgebra.comul).mul(g);
    t.coalgebra.counit = h.coalgebra.counit.mul(g);
    t.antipode = gi.mul(&h.antipode).mul(g);
    t.antipode_inv = gi.mul(&h.antipode_inv).mul(g);
    HopfData::new(t.algebra, t.coalgebra, t.antipode, t.antipode_inv)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn mixed_product(a in small(2, 3), b in small(2, 2), c in small(3, 2), d in small(2, 3)) {
        let (a, b, c, d) = (matrix(Q, 2, 3, &a), matrix(Q, 2, 2, &b), matrix(Q, 3, 2, &c), matrix(Q, 2, 3, &d));
        prop_assert_eq!(a.kron(&b).mul(&c.kron(&d)), a.mul(&c).kron(&b.mul(&d)));
    }

    #[test]
    fn rank_nullity(rows in 1usize..5, cols in 1usize..6, seed in small(5, 6), p in prop_oneof![Just(0u64), Just(2), Just(7)]) {
        let field = if p == 0 { Q } else { FieldSpec::prime(p).unwrap() };
        let m = matrix(field, rows, cols, &seed);
        let k = kernel(&m);
        prop_assert_eq!(rank(&m) + k.dim(), cols);
        prop_assert!(m.mul(&k.basis).is_zero());
        prop_assert_eq!(rank(&k.basis), k.dim());
    }

    #[test]
    fn rank_is_basis_invariant(seed in small(4, 4), p in invertible(4), q in invertible(4)) {
        let m = matrix(Q, 4, 4, &seed);
        prop_assert_eq!(rank(&p.mul(&m).mul(&q)), rank(&m));
    }

    #[test]
    fn inverse_round_trip(g in invertible(5)) {
        let gi = inverse(&g).unwrap();
        prop_assert!(g.mul(&gi).is_identity());
        prop_assert!(gi.mul(&g).is_identity());
    }

    #[test]
    fn solve_recovers_coordinates(g in invertible(4), x in small(4, 2)) {
        let basis = g.select_columns(&[0, 1, 2]);
        let coords = matrix(Q, 3, 2, &x[..6]);
        let targets = basis.mul(&coords);
        prop_assert_eq!(solve_in_span(&basis, &targets).unwrap(), coords);
    }

    #[test]
    fn rank_mod_p_never_exceeds_rank_over_q(seed in small(4, 5)) {
        let over_q = rank(&matrix(Q, 4, 5, &seed));
        for p in [2u64, 3, 7] {
            prop_assert!(rank(&matrix(FieldSpec::prime(p).unwrap(), 4, 5, &seed)) <= over_q);
        }
    }

    #[test]
    fn prime_field_arithmetic(a in -500i64..500, b in -500i64..500, c in -500i64..500, p in prop_oneof![Just(2u64), Just(7), Just(101)]) {
        let f = FieldSpec::prime(p).unwrap();
        let (x, y, z) = (f.from_i64(a), f.from_i64(b), f.from_i64(c));
        let modp = |v: i64| f.from_i64(v.rem_euclid(p as i64));
        prop_assert_eq!(&x + &y, modp(a + b));
        prop_assert_eq!(&x * &y, modp(a * b));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x + &(-&x), f.zero());
        match x.inv() {
            Some(inv) => prop_assert!((&x * &inv).is_one()),
            None => prop_assert!(x.is_zero()),
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn hopf_axioms_survive_change_of_basis(g in unimodular(4), g2 in unimodular(2)) {
        for name in ["group_C2", "sweedler_H4"] {
            let h = build_named_example(name, Q).unwrap();
            let n = h.dim();
            let g = if n == 4 { &g } else { &g2 };
            let r = check_hopf_axioms(&transport(&h, g)).unwrap();
            prop_assert!(r.all_pass(), "{name}: {:?}", r.failures().map(|v| &v.name).collect::<Vec<_>>());
        }
    }
}

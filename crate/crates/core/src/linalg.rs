//! Exact Gaussian elimination: rank, kernel, image, solving, inversion.
//!
//! Over Q rows are kept as primitive integer vectors and combined fraction-free
//! (`p·rᵢ − a·rₖ`, then divided by the row content), so no rational arithmetic
//! happens until the final normalisation. Over GF(p) plain modular elimination
//! is used.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::{mul_mod, pow_mod, FieldSpec, Scalar};
use crate::matrix::Matrix;

/// A subspace given by a basis of column vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    pub ambient_dim: usize,
    pub basis: Matrix,
}

impl Subspace {
    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn full(field: FieldSpec, n: usize) -> Self {
        Subspace { ambient_dim: n, basis: Matrix::identity(field, n) }
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let target = Matrix::column_vector(self.basis.field(), v);
        solve_in_span(&self.basis, &target).is_ok()
    }
}

/// Reduced row echelon form of a matrix.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub pivots: Vec<usize>,
    /// Nonzero rows of the RREF, `rank × cols`.
    pub reduced: Matrix,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

pub fn rref(m: &Matrix) -> Echelon {
    match m.field() {
        FieldSpec::Rationals => rref_rational(m),
        FieldSpec::PrimeField(p) => rref_modular(m, p),
    }
}

fn primitive(row: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for v in row.iter() {
        if !v.is_zero() {
            g = g.gcd(v);
            if g.is_one() {
                return;
            }
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for v in row.iter_mut() {
        if !v.is_zero() {
            *v = &*v / &g;
        }
    }
}

fn integer_row(row: &[Scalar]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for s in row {
        let r = s.as_rational().expect("rational entry");
        if !r.is_zero() && !r.denom().is_one() {
            lcm = lcm.lcm(r.denom());
        }
    }
    let mut out: Vec<BigInt> = row
        .iter()
        .map(|s| {
            let r = s.as_rational().unwrap();
            if r.is_zero() {
                BigInt::zero()
            } else {
                r.numer() * (&lcm / r.denom())
            }
        })
        .collect();
    primitive(&mut out);
    out
}

/// `target = (p/g)·target − (a/g)·pivot_row`, eliminating column `col`.
fn eliminate_int(target: &mut [BigInt], pivot_row: &[BigInt], col: usize) {
    let a = target[col].clone();
    if a.is_zero() {
        return;
    }
    let p = &pivot_row[col];
    let g = p.gcd(&a);
    let pf = p / &g;
    let af = &a / &g;
    let scale_target = !pf.is_one();
    for (t, r) in target.iter_mut().zip(pivot_row) {
        if scale_target && !t.is_zero() {
            *t = &*t * &pf;
        }
        if !r.is_zero() {
            *t = &*t - &af * r;
        }
    }
    debug_assert!(target[col].is_zero());
    primitive(target);
}

fn rref_rational(m: &Matrix) -> Echelon {
    let (nr, nc) = (m.rows(), m.cols());
    let mut rows: Vec<Vec<BigInt>> = (0..nr)
        .map(|r| integer_row(m.row(r)))
        .filter(|r| r.iter().any(|v| !v.is_zero()))
        .collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..nc {
        if rank == rows.len() {
            break;
        }
        // smallest pivot keeps growth down
        let best = (rank..rows.len())
            .filter(|&r| !rows[r][col].is_zero())
            .min_by_key(|&r| rows[r][col].bits());
        let Some(best) = best else { continue };
        rows.swap(rank, best);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        for r in tail.iter_mut() {
            eliminate_int(r, pivot_row, col);
        }
        pivots.push(col);
        rank += 1;
        // drop rows that became zero to keep later sweeps short
        let mut k = rank;
        while k < rows.len() {
            if rows[k].iter().all(Zero::is_zero) {
                rows.swap_remove(k);
            } else {
                k += 1;
            }
        }
    }
    rows.truncate(rank);
    for k in (0..rank).rev() {
        let (head, tail) = rows.split_at_mut(k);
        let pivot_row = &tail[0];
        for r in head.iter_mut() {
            eliminate_int(r, pivot_row, pivots[k]);
        }
    }
    let reduced = Matrix::from_fn(FieldSpec::Rationals, rank, nc, |r, c| {
        let p = &rows[r][pivots[r]];
        let v = &rows[r][c];
        if v.is_zero() {
            Scalar::Rational(BigRational::zero())
        } else {
            Scalar::Rational(BigRational::new(v.clone(), p.clone()))
        }
    });
    Echelon { pivots, reduced }
}

fn rref_modular(m: &Matrix, p: u64) -> Echelon {
    let (nr, nc) = (m.rows(), m.cols());
    let value = |s: &Scalar| match s {
        Scalar::Modular { value, .. } => *value,
        Scalar::Rational(_) => unreachable!("rational entry in a prime-field matrix"),
    };
    let mut rows: Vec<Vec<u64>> = (0..nr)
        .map(|r| m.row(r).iter().map(value).collect::<Vec<_>>())
        .filter(|r| r.iter().any(|&v| v != 0))
        .collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..nc {
        if rank == rows.len() {
            break;
        }
        let Some(best) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else { continue };
        rows.swap(rank, best);
        let inv = pow_mod(rows[rank][col], p - 2, p);
        for v in rows[rank].iter_mut() {
            *v = mul_mod(*v, inv, p);
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[col] == 0 {
                continue;
            }
            let a = row[col];
            for (t, &pv) in row.iter_mut().zip(&pivot_row) {
                if pv != 0 {
                    *t = (*t + p - mul_mod(a, pv, p)) % p;
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    rows.truncate(rank);
    let reduced = Matrix::from_fn(FieldSpec::PrimeField(p), rank, nc, |r, c| Scalar::Modular {
        value: rows[r][c],
        modulus: p,
    });
    Echelon { pivots, reduced }
}

pub fn rank(m: &Matrix) -> usize {
    rref(m).rank()
}

fn kernel_from_echelon(e: &Echelon, field: FieldSpec, cols: usize) -> Matrix {
    let mut is_pivot = vec![false; cols];
    for &p in &e.pivots {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..cols).filter(|&c| !is_pivot[c]).collect();
    let mut k = Matrix::zeros(field, cols, free.len());
    for (j, &f) in free.iter().enumerate() {
        k.set(f, j, field.one());
        for (r, &p) in e.pivots.iter().enumerate() {
            let v = e.reduced.get(r, f);
            if !v.is_zero() {
                k.set(p, j, -v);
            }
        }
    }
    k
}

pub fn kernel(m: &Matrix) -> Subspace {
    let e = rref(m);
    Subspace { ambient_dim: m.cols(), basis: kernel_from_echelon(&e, m.field(), m.cols()) }
}

/// Rank, kernel and image of `m` (as a map from its column space).
pub fn rank_kernel_image(m: &Matrix) -> (usize, Subspace, Subspace) {
    let e = rref(m);
    let kernel = Subspace { ambient_dim: m.cols(), basis: kernel_from_echelon(&e, m.field(), m.cols()) };
    let image = Subspace { ambient_dim: m.rows(), basis: m.select_columns(&e.pivots) };
    (e.rank(), kernel, image)
}

/// `dim ker(d_out) − rank(d_in)` for composable differentials with `d_out·d_in = 0`.
pub fn homology_dims(d_in: &Matrix, d_out: &Matrix) -> Result<usize> {
    if d_out.cols() != d_in.rows() {
        return Err(Error::ShapeMismatch(format!(
            "d_out has {} columns but d_in has {} rows",
            d_out.cols(),
            d_in.rows()
        )));
    }
    let prod = d_out.mul(d_in);
    if let Some((_, column, _)) = prod.nonzero_entries().next() {
        return Err(Error::CompositionNotZero { column });
    }
    let nullity = d_out.cols() - rank(d_out);
    Ok(nullity - rank(d_in))
}

/// Coordinates `X` with `basis · X = targets`; `basis` must have independent columns.
/// On failure returns the index of the first target column outside the span.
pub fn solve_in_span(basis: &Matrix, targets: &Matrix) -> std::result::Result<Matrix, usize> {
    assert_eq!(basis.rows(), targets.rows());
    let k = basis.cols();
    let e = rref(&basis.hstack(targets));
    debug_assert!(e.pivots.iter().take(k).copied().eq(0..k), "basis columns are dependent");
    if let Some(&p) = e.pivots.iter().find(|&&p| p >= k) {
        return Err(p - k);
    }
    Ok(Matrix::from_fn(basis.field(), k, targets.cols(), |r, c| e.reduced.get(r, k + c).clone()))
}

pub fn inverse(m: &Matrix) -> Result<Matrix> {
    if !m.is_square() {
        return Err(Error::ShapeMismatch(format!("inverse of a {}x{} matrix", m.rows(), m.cols())));
    }
    let n = m.rows();
    if n == 0 {
        return Ok(m.clone());
    }
    let e = rref(&m.hstack(&Matrix::identity(m.field(), n)));
    if e.rank() < n || e.pivots[n - 1] >= n {
        return Err(Error::Singular);
    }
    Ok(Matrix::from_fn(m.field(), n, n, |r, c| e.reduced.get(r, n + c).clone()))
}

/// Row functionals vanishing exactly on the column span of `m`.
pub fn annihilator(m: &Matrix) -> Matrix {
    kernel(&m.transpose()).basis.transpose()
}

/// A basis (as columns) of the span of the columns of `m`.
pub fn column_span(m: &Matrix) -> Subspace {
    rank_kernel_image(m).2
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn identity_has_full_rank() {
        let (r, k, img) = rank_kernel_image(&Matrix::identity(Q, 3));
        assert_eq!((r, k.dim(), img.dim()), (3, 0, 3));
    }

    #[test]
    fn zero_map_kernel_is_everything() {
        let (r, k, _) = rank_kernel_image(&Matrix::zeros(Q, 2, 5));
        assert_eq!((r, k.dim()), (0, 5));
    }

    #[test]
    fn rank_one_kernel() {
        let m = Matrix::from_i64(Q, &[&[1, 1], &[2, 2]]);
        let (r, k, _) = rank_kernel_image(&m);
        assert_eq!(r, 1);
        assert_eq!(k.basis, Matrix::from_i64(Q, &[&[-1], &[1]]));
    }

    #[test]
    fn homology_examples() {
        let d_in = Matrix::from_i64(Q, &[&[1], &[-1]]);
        let d_out = Matrix::from_i64(Q, &[&[1, 1]]);
        assert_eq!(homology_dims(&d_in, &d_out).unwrap(), 0);
        let z = Matrix::zeros(Q, 3, 3);
        assert_eq!(homology_dims(&z, &z).unwrap(), 3);
        let d_out = Matrix::from_i64(Q, &[&[1, 0], &[0, 0]]);
        assert_eq!(homology_dims(&Matrix::zeros(Q, 2, 2), &d_out).unwrap(), 1);
    }

    #[test]
    fn homology_rejects_nonzero_composite() {
        let d = Matrix::identity(Q, 2);
        assert_eq!(homology_dims(&d, &d), Err(Error::CompositionNotZero { column: 0 }));
        let bad = Matrix::zeros(Q, 3, 3);
        assert!(matches!(homology_dims(&d, &bad), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn modular_kernel() {
        let f = FieldSpec::PrimeField(7);
        let m = Matrix::from_i64(f, &[&[1, 3], &[2, 6]]);
        let (r, k, _) = rank_kernel_image(&m);
        assert_eq!(r, 1);
        assert!(m.mul(&k.basis).is_zero());
        let m = Matrix::from_i64(f, &[&[1, 3], &[2, 5]]);
        let inv = inverse(&m).unwrap();
        assert!(m.mul(&inv).is_identity());
    }

    #[test]
    fn inverse_and_singular() {
        let m = Matrix::from_i64(Q, &[&[2, 1], &[1, 1]]);
        assert!(inverse(&m).unwrap().mul(&m).is_identity());
        assert_eq!(inverse(&Matrix::from_i64(Q, &[&[1, 2], &[2, 4]])), Err(Error::Singular));
        assert!(inverse(&Matrix::zeros(Q, 0, 0)).unwrap().is_identity());
    }

    #[test]
    fn solve_reports_escaping_column() {
        let b = Matrix::from_i64(Q, &[&[1], &[1], &[0]]);
        let t = Matrix::from_i64(Q, &[&[2, 1], &[2, 0], &[0, 0]]);
        assert_eq!(solve_in_span(&b, &t), Err(1));
        let t = Matrix::from_i64(Q, &[&[3], &[3], &[0]]);
        assert_eq!(solve_in_span(&b, &t).unwrap(), Matrix::from_i64(Q, &[&[3]]));
    }

    #[test]
    fn fractions_survive_elimination() {
        let m = Matrix::from_rows(
            Q,
            vec![
                vec![Q.ratio(1, 2).unwrap(), Q.ratio(1, 3).unwrap()],
                vec![Q.ratio(3, 4).unwrap(), Q.ratio(1, 2).unwrap()],
            ],
        )
        .unwrap();
        let (r, k, _) = rank_kernel_image(&m);
        assert_eq!(r, 1);
        assert!(m.mul(&k.basis).is_zero());
    }
}

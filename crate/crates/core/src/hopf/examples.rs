use super::{AlgebraData, CoalgebraData, HopfData};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::matrix::Matrix;

pub const NAMED_EXAMPLES: [&str; 4] = ["trivial", "group_C2", "group_C3", "sweedler_H4"];

pub fn build_named_example(name: &str, field: FieldSpec) -> Result<HopfData> {
    let h = match name.to_ascii_lowercase().as_str() {
        "trivial" => trivial(field),
        "group_c2" => group_algebra(field, 2),
        "group_c3" => group_algebra(field, 3),
        "sweedler_h4" => sweedler_h4(field)?,
        _ => return Err(Error::UnknownName(name.to_string())),
    };
    Ok(h)
}

/// The ground field as a Hopf algebra.
pub fn trivial(field: FieldSpec) -> HopfData {
    group_algebra(field, 1).named("trivial")
}

/// Group algebra of the cyclic group of order `n`, basis `g⁰, …, gⁿ⁻¹`.
pub fn group_algebra(field: FieldSpec, n: usize) -> HopfData {
    let one = field.one();
    let mul: Vec<_> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j, (i + j) % n)))
        .map(|(i, j, k)| (i, j, k, one.clone()))
        .collect();
    let mut unit = vec![field.zero(); n];
    unit[0] = one.clone();
    let algebra = AlgebraData::from_sparse(field, n, &mul, unit).unwrap();
    let comul: Vec<_> = (0..n).map(|i| (i, i, i, one.clone())).collect();
    let coalgebra = CoalgebraData::from_sparse(field, n, &comul, vec![one.clone(); n]).unwrap();
    let mut s = Matrix::zeros(field, n, n);
    for i in 0..n {
        s.set((n - i) % n, i, one.clone());
    }
    HopfData::with_antipode(algebra, coalgebra, s)
        .unwrap()
        .named(&format!("group_C{n}"))
}

/// Sweedler's four-dimensional Hopf algebra with basis `{1, g, x, gx}`:
/// `g² = 1`, `x² = 0`, `xg = −gx`, `Δ(g) = g⊗g`, `Δ(x) = x⊗1 + g⊗x`,
/// `S(g) = g`, `S(x) = −gx`.
pub fn sweedler_h4(field: FieldSpec) -> Result<HopfData> {
    if field.characteristic() == 2 {
        return Err(Error::CharacteristicClash("Sweedler's algebra needs characteristic different from 2".into()));
    }
    let s = |v: i64| field.from_i64(v);
    // basis indices
    let (e, g, x, gx) = (0, 1, 2, 3);
    let mut mul = Vec::new();
    for i in 0..4 {
        mul.push((e, i, i, s(1)));
        if i != e {
            mul.push((i, e, i, s(1)));
        }
    }
    mul.extend([
        (g, g, e, s(1)),
        (g, x, gx, s(1)),
        (g, gx, x, s(1)),
        (x, g, gx, s(-1)),
        (gx, g, x, s(-1)),
    ]);
    let algebra = AlgebraData::from_sparse(field, 4, &mul, vec![s(1), s(0), s(0), s(0)])?;
    let comul = [
        (e, e, e, s(1)),
        (g, g, g, s(1)),
        (x, x, e, s(1)),
        (x, g, x, s(1)),
        (gx, gx, g, s(1)),
        (gx, e, gx, s(1)),
    ];
    let coalgebra = CoalgebraData::from_sparse(field, 4, &comul, vec![s(1), s(1), s(0), s(0)])?;
    let mut antipode = Matrix::zeros(field, 4, 4);
    antipode.set(e, e, s(1));
    antipode.set(g, g, s(1));
    antipode.set(gx, x, s(-1));
    antipode.set(x, gx, s(1));
    Ok(HopfData::with_antipode(algebra, coalgebra, antipode)?.named("sweedler_H4"))
}

//! The example zoo: group algebras, function algebras, Taft algebras, duals.

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::Mat;

use super::{validate_hopf, FinHopfAlgebra, HopfData};

/// A finite group as a Cayley table; element 0 is the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    table: Vec<Vec<usize>>,
    labels: Vec<String>,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    pub fn from_table(table: Vec<Vec<usize>>, labels: Vec<String>) -> Result<FiniteGroup> {
        let n = table.len();
        let bad = |m: &str| Err(Error::Unsupported(format!("not a group table: {m}")));
        if n == 0 || labels.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return bad("shape");
        }
        if (0..n).any(|a| table[0][a] != a || table[a][0] != a) {
            return bad("element 0 is not the identity");
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return bad("not associative");
                    }
                }
            }
        }
        let mut inverse = Vec::with_capacity(n);
        for a in 0..n {
            match (0..n).find(|&b| table[a][b] == 0 && table[b][a] == 0) {
                Some(b) => inverse.push(b),
                None => return bad("missing inverse"),
            }
        }
        Ok(FiniteGroup { table, labels, inverse })
    }

    /// `Z_n` with generator `g`; element `k` is `g^k`.
    pub fn cyclic(n: usize) -> FiniteGroup {
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let labels = (0..n)
            .map(|k| match k {
                0 => "e".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{k}"),
            })
            .collect();
        FiniteGroup::from_table(table, labels).expect("cyclic table is a group")
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }
    pub fn labels(&self) -> &[String] {
        &self.labels
    }
}

/// `kG` with `Δg = g⊗g`, `ε(g) = 1`, `S(g) = g⁻¹`.
pub fn group_algebra(g: &FiniteGroup, field: FieldSpec) -> Result<FinHopfAlgebra> {
    let n = g.order();
    let one = || field.one();
    let mult = Mat::from_triplets(field, n, n * n, (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).map(|(a, b)| (g.op(a, b), a * n + b, one())));
    let unit = Mat::unit_vector(field, n, 0);
    let comult = Mat::from_triplets(field, n * n, n, (0..n).map(|a| (a * n + a, a, one())));
    let counit = Mat::from_triplets(field, 1, n, (0..n).map(|a| (0, a, one())));
    let antipode = Mat::from_triplets(field, n, n, (0..n).map(|a| (g.inv(a), a, one())));
    validate_hopf(HopfData { field, labels: g.labels().to_vec(), mult, unit, comult, counit, antipode })
}

/// Functions on `G` in the delta basis: `Δδ_g = Σ_{hk=g} δ_h⊗δ_k`.
pub fn function_algebra(g: &FiniteGroup, field: FieldSpec) -> Result<FinHopfAlgebra> {
    let n = g.order();
    let one = || field.one();
    let mult = Mat::from_triplets(field, n, n * n, (0..n).map(|a| (a, a * n + a, one())));
    let unit = Mat::from_triplets(field, n, 1, (0..n).map(|a| (a, 0, one())));
    let comult = Mat::from_triplets(
        field,
        n * n,
        n,
        (0..n).flat_map(|h| (0..n).map(move |k| (h, k))).map(|(h, k)| (h * n + k, g.op(h, k), one())),
    );
    let counit = Mat::unit_vector(field, n, 0).transpose();
    let antipode = Mat::from_triplets(field, n, n, (0..n).map(|a| (g.inv(a), a, one())));
    let labels = g.labels().iter().map(|l| format!("d_{l}")).collect();
    validate_hopf(HopfData { field, labels, mult, unit, comult, counit, antipode })
}

/// Smallest primitive `n`-th root of unity in the field, if one exists.
pub fn primitive_root(n: usize, field: FieldSpec) -> Result<Scalar> {
    let missing = || Error::MissingRoot(n, format!("none in {field}"));
    match field {
        FieldSpec::Rationals => match n {
            1 => Ok(field.one()),
            2 => Ok(field.int(-1)),
            _ => Err(missing()),
        },
        FieldSpec::PrimeField(p) => {
            if (p - 1) % n as u64 != 0 {
                return Err(missing());
            }
            (1..p)
                .map(|a| field.int(a as i64))
                .find(|q| is_primitive(q, n))
                .ok_or_else(missing)
        }
    }
}

fn is_primitive(q: &Scalar, n: usize) -> bool {
    q.pow(n as u64).is_one() && (1..n).all(|k| !q.pow(k as u64).is_one())
}

/// Taft algebra `T_n(q)`: basis `g^i x^j` at index `i·n + j`, with `x g = q g x`,
/// `g^n = 1`, `x^n = 0`, `Δg = g⊗g`, `Δx = x⊗1 + g⊗x`.
pub fn taft(n: usize, q: &Scalar) -> Result<FinHopfAlgebra> {
    let field = q.field();
    if n < 2 || !is_primitive(q, n) {
        return Err(Error::MissingRoot(n, format!("{q} is not a primitive {n}-th root of unity in {field}")));
    }
    let d = n * n;
    let idx = |i: usize, j: usize| (i % n) * n + j;
    let mut trip = Vec::new();
    for (i, j) in (0..n).flat_map(|i| (0..n).map(move |j| (i, j))) {
        for (k, l) in (0..n).flat_map(|k| (0..n).map(move |l| (k, l))) {
            if j + l < n {
                trip.push((idx(i + k, j + l), idx(i, j) * d + idx(k, l), q.pow((j * k) as u64)));
            }
        }
    }
    let mult = Mat::from_triplets(field, d, d * d, trip);
    let unit = Mat::unit_vector(field, d, 0);
    let counit = Mat::from_triplets(field, 1, d, (0..n).map(|i| (0, idx(i, 0), field.one())));

    let e = |i: usize, j: usize| Mat::unit_vector(field, d, idx(i, j));
    let g = e(1, 0);
    let x = e(0, 1);
    let mult2 = {
        let p = Mat::perm_legs(field, &[d; 4], &[0, 2, 1, 3]);
        mult.kron(&mult).mul(&p)
    };
    let prod = |a: &Mat, b: &Mat| mult.mul(&a.kron(b));
    let prod2 = |a: &Mat, b: &Mat| mult2.mul(&a.kron(b));
    let dg = g.kron(&g);
    let dx = x.kron(&e(0, 0)).add(&g.kron(&x));
    let g_inv = e(n - 1, 0);
    let sg = g_inv.clone();
    let sx = prod(&g_inv, &x).scale_int(-1);

    let mut comult_cols = Vec::with_capacity(d);
    let mut s_cols = Vec::with_capacity(d);
    for i in 0..n {
        for j in 0..n {
            let mut dc = Mat::unit_vector(field, d * d, 0);
            let mut sc = e(0, 0);
            for _ in 0..i {
                dc = prod2(&dc, &dg);
                sc = prod(&sg, &sc);
            }
            for _ in 0..j {
                dc = prod2(&dc, &dx);
                sc = prod(&sx, &sc);
            }
            comult_cols.push(dc.col(0).clone());
            s_cols.push(sc.col(0).clone());
        }
    }
    let comult = Mat::from_columns(field, d * d, comult_cols);
    let antipode = Mat::from_columns(field, d, s_cols);
    let labels = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| monomial(i, j))
        .collect();
    validate_hopf(HopfData { field, labels, mult, unit, comult, counit, antipode })
}

fn monomial(i: usize, j: usize) -> String {
    let part = |s: &str, k: usize| match k {
        0 => String::new(),
        1 => s.to_string(),
        _ => format!("{s}^{k}"),
    };
    let m = format!("{}{}", part("g", i), part("x", j));
    if m.is_empty() {
        "1".into()
    } else {
        m
    }
}

/// Taft algebra with the smallest primitive root available in the field.
pub fn taft_auto(n: usize, field: FieldSpec) -> Result<FinHopfAlgebra> {
    taft(n, &primitive_root(n, field)?)
}

/// Sweedler's 4-dimensional algebra, basis `(1, x, g, gx)`.
pub fn sweedler(field: FieldSpec) -> Result<FinHopfAlgebra> {
    if field.characteristic() == 2 {
        return Err(Error::Unsupported("Sweedler's algebra needs characteristic ≠ 2".into()));
    }
    taft(2, &field.int(-1))
}

/// The dual Hopf algebra in the dual basis: every structure tensor transposed.
pub fn dual_of(h: &FinHopfAlgebra) -> Result<FinHopfAlgebra> {
    validate_hopf(HopfData {
        field: h.field(),
        labels: h.labels().iter().map(|l| format!("{l}*")).collect(),
        mult: h.comult().transpose(),
        unit: h.counit().transpose(),
        comult: h.mult().transpose(),
        counit: h.unit().transpose(),
        antipode: h.antipode().transpose(),
    })
}

/// Look up a builtin by name: `kZn`, `fZn`, `sweedler`, `taft3`, or `dual:<name>`.
pub fn by_name(name: &str, field: FieldSpec) -> Result<FinHopfAlgebra> {
    if let Some(inner) = name.strip_prefix("dual:") {
        return dual_of(&by_name(inner, field)?);
    }
    let cyclic = |s: &str| s.parse::<usize>().ok().filter(|&n| n >= 1).map(FiniteGroup::cyclic);
    if let Some(g) = name.strip_prefix("kZ").and_then(cyclic) {
        return group_algebra(&g, field);
    }
    if let Some(g) = name.strip_prefix("fZ").and_then(cyclic) {
        return function_algebra(&g, field);
    }
    if name == "sweedler" {
        return sweedler(field);
    }
    if let Some(n) = name.strip_prefix("taft").and_then(|s| s.parse::<usize>().ok()) {
        return taft_auto(n, field);
    }
    Err(Error::Parse(format!("unknown builtin {name:?}")))
}

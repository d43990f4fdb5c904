//! Comodules, module actions and Yetter-Drinfeld modules over a fixed `P`.
//!
//! These types hold matrices only; every operation takes the algebra `P`
//! explicitly and checks dimensions against it.

use crate::error::{Error, Result, Violation};
use crate::linalg::{Mat, Subspace};

use super::FinHopfAlgebra;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Left: `λ: V → P⊗V`. Right: `ρ: V → V⊗P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comodule {
    pub dim: usize,
    pub coaction: Mat,
    pub side: Side,
}

/// Left: `P⊗V → V`. Right: `V⊗P → V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleAction {
    pub dim: usize,
    pub action: Mat,
    pub side: Side,
}

fn first_diff(check: &str, a: &Mat, b: &Mat) -> Option<Violation> {
    a.first_difference(b).map(|(_, c)| Violation::new(check, format!("basis {c}")))
}

impl Comodule {
    pub fn new(p: &FinHopfAlgebra, dim: usize, coaction: Mat, side: Side) -> Result<Comodule> {
        let c = Comodule { dim, coaction, side };
        let v = c.violations(p)?;
        if v.is_empty() {
            Ok(c)
        } else {
            Err(Error::Structure(v))
        }
    }

    pub fn trivial(p: &FinHopfAlgebra, dim: usize, side: Side) -> Comodule {
        let id = Mat::identity(p.field(), dim);
        let coaction = match side {
            Side::Left => p.unit().kron(&id),
            Side::Right => id.kron(p.unit()),
        };
        Comodule { dim, coaction, side }
    }

    /// `P` coacting on itself by `Δ`.
    pub fn regular(p: &FinHopfAlgebra, side: Side) -> Comodule {
        Comodule { dim: p.dim(), coaction: p.comult().clone(), side }
    }

    pub fn violations(&self, p: &FinHopfAlgebra) -> Result<Vec<Violation>> {
        let n = p.dim();
        if self.coaction.shape() != (n * self.dim, self.dim) {
            return Err(Error::Shape(format!("coaction {:?} for comodule of dim {}", self.coaction.shape(), self.dim)));
        }
        let i = Mat::identity(p.field(), self.dim);
        let l = &self.coaction;
        let mut v = Vec::new();
        match self.side {
            Side::Left => {
                v.extend(first_diff("coassociativity", &p.comult().kron(&i).mul(l), &p.id().kron(l).mul(l)));
                v.extend(first_diff("counit", &p.counit().kron(&i).mul(l), &i));
            }
            Side::Right => {
                v.extend(first_diff("coassociativity", &l.kron(&p.id()).mul(l), &i.kron(p.comult()).mul(l)));
                v.extend(first_diff("counit", &i.kron(p.counit()).mul(l), &i));
            }
        }
        Ok(v)
    }

    /// Tensor product of left comodules: `λ(v⊗w) = v₋₁w₋₁ ⊗ v₀ ⊗ w₀`.
    pub fn tensor(&self, other: &Comodule, p: &FinHopfAlgebra) -> Comodule {
        assert!(self.side == Side::Left && other.side == Side::Left, "tensor of left comodules");
        let n = p.dim();
        let f = p.field();
        let perm = Mat::perm_legs(f, &[n, self.dim, n, other.dim], &[0, 2, 1, 3]);
        let m = p.mult().kron(&Mat::identity(f, self.dim * other.dim));
        Comodule {
            dim: self.dim * other.dim,
            coaction: m.mul(&perm).mul(&self.coaction.kron(&other.coaction)),
            side: Side::Left,
        }
    }

    /// A map `V → W` commutes with the coactions.
    pub fn is_colinear(&self, other: &Comodule, map: &Mat, p: &FinHopfAlgebra) -> bool {
        let f = p.field();
        match self.side {
            Side::Left => other.coaction.mul(map) == p.id().kron(map).mul(&self.coaction),
            Side::Right => other.coaction.mul(map) == map.kron(&Mat::identity(f, p.dim())).mul(&self.coaction),
        }
    }
}

impl ModuleAction {
    pub fn new(p: &FinHopfAlgebra, dim: usize, action: Mat, side: Side) -> Result<ModuleAction> {
        let a = ModuleAction { dim, action, side };
        let v = a.violations(p)?;
        if v.is_empty() {
            Ok(a)
        } else {
            Err(Error::Structure(v))
        }
    }

    /// Left multiplication of `P` on itself.
    pub fn regular_left(p: &FinHopfAlgebra) -> ModuleAction {
        ModuleAction { dim: p.dim(), action: p.mult().clone(), side: Side::Left }
    }

    pub fn violations(&self, p: &FinHopfAlgebra) -> Result<Vec<Violation>> {
        let n = p.dim();
        if self.action.shape() != (self.dim, n * self.dim) {
            return Err(Error::Shape(format!("action {:?} for module of dim {}", self.action.shape(), self.dim)));
        }
        let i = Mat::identity(p.field(), self.dim);
        let a = &self.action;
        let mut v = Vec::new();
        match self.side {
            Side::Left => {
                v.extend(first_diff("associativity", &a.mul(&p.id().kron(a)), &a.mul(&p.mult().kron(&i))));
                v.extend(first_diff("unit", &a.mul(&p.unit().kron(&i)), &i));
            }
            Side::Right => {
                v.extend(first_diff("associativity", &a.mul(&a.kron(&p.id())), &a.mul(&i.kron(p.mult()))));
                v.extend(first_diff("unit", &a.mul(&i.kron(p.unit())), &i));
            }
        }
        Ok(v)
    }
}

/// `{v : λ(v) = 1⊗v}` for a left comodule.
pub fn coinvariants(p: &FinHopfAlgebra, c: &Comodule) -> Subspace {
    assert_eq!(c.side, Side::Left, "coinvariants of a left comodule");
    let triv = p.unit().kron(&Mat::identity(p.field(), c.dim));
    Subspace::span(&c.coaction.sub(&triv).kernel())
}

/// Right Yetter-Drinfeld module: `ρ(η◁a) = η₀◁a₂ ⊗ S(a₁)η₁a₃`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YDModule {
    pub coaction: Comodule,
    pub action: ModuleAction,
}

impl YDModule {
    pub fn new(p: &FinHopfAlgebra, coaction: Comodule, action: ModuleAction) -> Result<YDModule> {
        if coaction.side != Side::Right || action.side != Side::Right || coaction.dim != action.dim {
            return Err(Error::Shape("YD module needs a right coaction and right action on one space".into()));
        }
        let mut v = coaction.violations(p)?;
        v.extend(action.violations(p)?);
        let y = YDModule { coaction, action };
        v.extend(y.yd_violation(p));
        if v.is_empty() {
            Ok(y)
        } else {
            Err(Error::Structure(v))
        }
    }

    /// Trivial action by `ε` and trivial coaction.
    pub fn trivial(p: &FinHopfAlgebra, dim: usize) -> YDModule {
        let id = Mat::identity(p.field(), dim);
        YDModule {
            coaction: Comodule::trivial(p, dim, Side::Right),
            action: ModuleAction { dim, action: id.kron(p.counit()), side: Side::Right },
        }
    }

    pub fn dim(&self) -> usize {
        self.action.dim
    }

    fn yd_violation(&self, p: &FinHopfAlgebra) -> Option<Violation> {
        let f = p.field();
        let n = p.dim();
        let d = self.dim();
        let lhs = self.coaction.coaction.mul(&self.action.action);
        let spread = self.coaction.coaction.kron(&p.comult_n(3));
        let perm = Mat::perm_legs(f, &[d, n, n, n, n], &[0, 3, 2, 1, 4]);
        let tail = p.mult_n(3).mul(&p.antipode().kron(&p.id_pow(2)));
        let rhs = self.action.action.kron(&tail).mul(&perm).mul(&spread);
        first_diff("Yetter-Drinfeld condition", &lhs, &rhs)
    }

    /// Tensor product with the diagonal action and the product coaction
    /// `ρ(v⊗w) = v₀⊗w₀⊗v₁w₁`.
    pub fn tensor(&self, other: &YDModule, p: &FinHopfAlgebra) -> YDModule {
        let f = p.field();
        let n = p.dim();
        let (a, b) = (self.dim(), other.dim());
        // v⊗w⊗q -> v⊗w⊗q1⊗q2 -> v⊗q1⊗w⊗q2
        let spread = Mat::identity(f, a * b).kron(p.comult());
        let perm = Mat::perm_legs(f, &[a, b, n, n], &[0, 2, 1, 3]);
        let action = self.action.action.kron(&other.action.action).mul(&perm).mul(&spread);
        // v0⊗v1⊗w0⊗w1 -> v0⊗w0⊗v1⊗w1
        let perm2 = Mat::perm_legs(f, &[a, n, b, n], &[0, 2, 1, 3]);
        let coaction = Mat::identity(f, a * b)
            .kron(p.mult())
            .mul(&perm2)
            .mul(&self.coaction.coaction.kron(&other.coaction.coaction));
        YDModule {
            coaction: Comodule { dim: a * b, coaction, side: Side::Right },
            action: ModuleAction { dim: a * b, action, side: Side::Right },
        }
    }

    /// The `k`-fold tensor power.
    pub fn tensor_pow(&self, k: usize, p: &FinHopfAlgebra) -> YDModule {
        let mut acc = YDModule::trivial(p, 1);
        for _ in 0..k {
            acc = acc.tensor(self, p);
        }
        acc
    }
}

/// `σ(ξ⊗η) = η₀ ⊗ ξ◁η₁` as a matrix `V⊗W → W⊗V`.
pub fn yd_braiding(p: &FinHopfAlgebra, v: &YDModule, w: &YDModule) -> Mat {
    let f = p.field();
    let (a, b, n) = (v.dim(), w.dim(), p.dim());
    let spread = Mat::identity(f, a).kron(&w.coaction.coaction);
    let perm = Mat::perm_legs(f, &[a, b, n], &[1, 0, 2]);
    Mat::identity(f, b).kron(&v.action.action).mul(&perm).mul(&spread)
}

/// `σ⁻¹(η⊗ξ) = ξ◁S⁻¹(η₁) ⊗ η₀`, checked against [`yd_braiding`].
pub fn yd_braiding_inverse(p: &FinHopfAlgebra, v: &YDModule, w: &YDModule) -> Result<Mat> {
    let s_inv = p.s_inv("the inverse braiding")?;
    let f = p.field();
    let (a, b, n) = (v.dim(), w.dim(), p.dim());
    let spread = w.coaction.coaction.kron(&Mat::identity(f, a));
    let perm = Mat::perm_legs(f, &[b, n, a], &[2, 1, 0]);
    let act = v.action.action.mul(&Mat::identity(f, a).kron(s_inv));
    let inv = act.kron(&Mat::identity(f, b)).mul(&perm).mul(&spread);
    let sigma = yd_braiding(p, v, w);
    if !inv.mul(&sigma).is_identity() || !sigma.mul(&inv).is_identity() {
        return Err(Error::identity("inverse braiding", "σ⁻¹∘σ ≠ id"));
    }
    Ok(inv)
}

/// The evaluation `V*⊗V → k`, `α_i⊗v_j ↦ δ_ij`.
pub fn evaluation(p: &FinHopfAlgebra, d: usize) -> Mat {
    let f = p.field();
    Mat::from_triplets(f, 1, d * d, (0..d).map(|i| (0, i * d + i, f.one())))
}

/// Dual YD module in the dual basis: `(α◁p)(v) = α(v◁S⁻¹p)`, `α₀(v)α₁ = α(v₀)S(v₁)`.
/// The evaluation pairing is checked to be a morphism.
pub fn yd_dual(p: &FinHopfAlgebra, v: &YDModule) -> Result<YDModule> {
    let s_inv = p.s_inv("the dual module")?;
    let f = p.field();
    let (d, n) = (v.dim(), p.dim());
    let twisted = v.action.action.mul(&Mat::identity(f, d).kron(s_inv));
    // act*[j, (i,k)] = twisted[i, j·n + k]
    let mut trip = Vec::new();
    for col in 0..d * n {
        let (j, k) = (col / n, col % n);
        for (i, c) in twisted.col(col) {
            trip.push((j, i * n + k, c.clone()));
        }
    }
    let action = Mat::from_triplets(f, d, d * n, trip);
    // ρ*(α_i) = Σ_j α_j ⊗ Σ_k ρ[(i,k), j] S(e_k)
    let rho = &v.coaction.coaction;
    let mut trip = Vec::new();
    for j in 0..d {
        for (row, c) in rho.col(j) {
            let (i, k) = (row / n, row % n);
            for (l, s) in p.antipode().col(k) {
                trip.push((j * n + l, i, c * s));
            }
        }
    }
    let coaction = Mat::from_triplets(f, d * n, d, trip);
    let dual = YDModule {
        coaction: Comodule { dim: d, coaction, side: Side::Right },
        action: ModuleAction { dim: d, action, side: Side::Right },
    };
    let pair = dual.tensor(v, p);
    let ev = evaluation(p, d);
    if ev.mul(&pair.action.action) != ev.kron(p.counit()) {
        return Err(Error::identity("evaluation preserves the action", "dual pairing"));
    }
    if ev.kron(&p.id()).mul(&pair.coaction.coaction) != p.unit().mul(&ev) {
        return Err(Error::identity("evaluation preserves the coaction", "dual pairing"));
    }
    YDModule::new(p, dual.coaction, dual.action)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::hopf::builtin::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn regular_coinvariants_z2() {
        let p = group_algebra(&FiniteGroup::cyclic(2), Q).unwrap();
        let c = coinvariants(&p, &Comodule::regular(&p, Side::Left));
        assert_eq!(c.dim(), 1);
        assert!(c.contains(p.unit()));
    }

    #[test]
    fn z4_over_z2_coinvariants() {
        let p = group_algebra(&FiniteGroup::cyclic(2), Q).unwrap();
        let lam = Mat::from_triplets(Q, 8, 4, (0..4).map(|i| ((i % 2) * 4 + i, i, Q.one())));
        let c = Comodule::new(&p, 4, lam, Side::Left).unwrap();
        let inv = coinvariants(&p, &c);
        let expected = Mat::from_ints(Q, &[vec![1, 0], vec![0, 0], vec![0, 1], vec![0, 0]]);
        assert!(inv.same_as(&Subspace::span(&expected)));
    }

    #[test]
    fn trivial_coaction_gives_flip() {
        let p = sweedler(Q).unwrap();
        let v = YDModule::trivial(&p, 2);
        let w = YDModule::trivial(&p, 3);
        assert_eq!(yd_braiding(&p, &v, &w), Mat::flip(Q, 2, 3));
        assert!(coinvariants(&p, &Comodule::trivial(&p, 3, Side::Left)).dim() == 3);
    }

    /// Sweedler's algebra as a right YD module over itself:
    /// `η◁a = S(a₁)ηa₂`, coaction `Δ`.
    fn sweedler_self() -> (crate::hopf::FinHopfAlgebra, YDModule) {
        let p = sweedler(Q).unwrap();
        let n = p.dim();
        let perm = Mat::perm_legs(Q, &[n, n, n], &[1, 0, 2]);
        let act = p.mult_n(3).mul(&p.antipode().kron(&p.id_pow(2))).mul(&perm).mul(&p.id().kron(p.comult()));
        let y = YDModule::new(
            &p,
            Comodule::new(&p, n, p.comult().clone(), Side::Right).unwrap(),
            ModuleAction::new(&p, n, act, Side::Right).unwrap(),
        )
        .unwrap();
        (p, y)
    }

    #[test]
    fn braid_relation_and_inverse() {
        let (p, v) = sweedler_self();
        let n = v.dim();
        let s = yd_braiding(&p, &v, &v);
        let i = Mat::identity(Q, n);
        let a = s.kron(&i);
        let b = i.kron(&s);
        assert_eq!(a.mul(&b).mul(&a), b.mul(&a).mul(&b));
        let inv = yd_braiding_inverse(&p, &v, &v).unwrap();
        assert!(inv.mul(&s).is_identity());
        let d = yd_dual(&p, &v).unwrap();
        assert_eq!(d.dim(), 4);
    }
}

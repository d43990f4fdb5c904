use crate::linalg::{Mat, Subspace};

use super::FinHopfAlgebra;

/// Solution space of `(∫⊗id)Δ = 1·∫`, with a normalised representative when one exists.
#[derive(Clone, Debug)]
pub struct IntegralResult {
    /// Columns are integrals, written as transposed row functionals.
    pub space: Subspace,
    pub normalised: Option<Mat>,
}

impl IntegralResult {
    pub fn exists(&self) -> bool {
        self.space.dim() > 0
    }
    pub fn is_normalised(&self) -> bool {
        self.normalised.is_some()
    }
    /// The normalised integral as a `1 x n` row.
    pub fn functional(&self) -> Option<&Mat> {
        self.normalised.as_ref()
    }
}

pub fn left_integral(p: &FinHopfAlgebra) -> IntegralResult {
    let n = p.dim();
    let f = p.field();
    let delta = p.comult();
    let unit = p.unit();
    // unknowns ∫_i; equation rows indexed (j, q): Σ_i ∫_i Δ[(i,j), q] - u_j ∫_q = 0
    let mut trip = Vec::new();
    for q in 0..n {
        for (row, c) in delta.col(q) {
            let (i, j) = (row / n, row % n);
            trip.push((j * n + q, i, c.clone()));
        }
    }
    for (j, c) in unit.col(0) {
        for q in 0..n {
            trip.push((j * n + q, q, -c));
        }
    }
    let system = Mat::from_triplets(f, n * n, n, trip);
    let space = Subspace::span(&system.kernel());
    let at_one = unit.transpose().mul(space.basis());
    let normalised = (0..space.dim()).find(|&k| !at_one.get(0, k).is_zero()).map(|k| {
        let s = at_one.get(0, k).inv().expect("nonzero");
        space.basis().column_as_mat(k).scale(&s).transpose()
    });
    IntegralResult { space, normalised }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::hopf::builtin::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn group_algebra_z2_integral() {
        let h = group_algebra(&FiniteGroup::cyclic(2), Q).unwrap();
        let r = left_integral(&h);
        assert_eq!(r.functional().unwrap(), &Mat::from_ints(Q, &[vec![1, 0]]));
    }

    #[test]
    fn sweedler_not_normalisable() {
        let r = left_integral(&sweedler(Q).unwrap());
        assert_eq!(r.space.dim(), 1);
        assert!(!r.is_normalised());
    }

    #[test]
    fn function_algebra_f2_sum_integral() {
        let f2 = FieldSpec::PrimeField(2);
        let r = left_integral(&function_algebra(&FiniteGroup::cyclic(2), f2).unwrap());
        assert!(r.exists() && !r.is_normalised());
        assert_eq!(r.space.basis().transpose(), Mat::from_ints(f2, &[vec![1, 1]]));
    }
}

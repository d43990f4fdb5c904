use rand::Rng;

use crate::field::FieldSpec;
use crate::linalg::Mat;

use super::DoubleComplex;

/// A basis vector at `(n, m)` and the arrows out of it.
struct Piece {
    at: Vec<(usize, usize)>,
    /// `(source, target, horizontal, coefficient)` indices into `at`.
    arrows: Vec<(usize, usize, bool, i64)>,
}

fn dot(n: usize, m: usize) -> Piece {
    Piece { at: vec![(n, m)], arrows: vec![] }
}

fn square(n: usize, m: usize, c: i64) -> Piece {
    Piece {
        at: vec![(n, m), (n + 1, m), (n, m + 1), (n + 1, m + 1)],
        arrows: vec![(0, 1, true, c), (0, 2, false, 1), (1, 3, false, 1), (2, 3, true, -c)],
    }
}

/// Zigzag `(n,m) → (n+1,m) ← (n+1,m-1) → (n+2,m-1) ← …` with `len` vertices.
fn zigzag(n: usize, m: usize, len: usize, coeffs: &[i64]) -> Piece {
    let mut at = vec![(n, m)];
    let mut arrows = Vec::new();
    for k in 1..len {
        let (pn, pm) = at[k - 1];
        if k % 2 == 1 {
            at.push((pn + 1, pm));
            arrows.push((k - 1, k, true, coeffs[k % coeffs.len()]));
        } else {
            if pm == 0 {
                break;
            }
            at.push((pn, pm - 1));
            arrows.push((k, k - 1, false, coeffs[k % coeffs.len()]));
        }
    }
    Piece { at, arrows }
}

/// Sampling modulus: the characteristic, or 7 over the rationals.
fn modulus(f: FieldSpec) -> i64 {
    match f.characteristic() {
        0 => 7,
        p => p as i64,
    }
}

fn random_invertible<R: Rng>(f: FieldSpec, n: usize, rng: &mut R) -> Mat {
    let p = modulus(f);
    loop {
        let rows: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(0..p)).collect()).collect();
        let m = Mat::from_ints(f, &rows);
        if m.rank() == n {
            return m;
        }
    }
}

/// Seeded random first-quadrant double complex on `0..=n_cap × 0..=m_cap`:
/// a direct sum of dots, squares and zigzags conjugated by random invertible
/// matrices in every bidegree.
pub fn random_double_complex<R: Rng>(f: FieldSpec, n_cap: usize, m_cap: usize, rng: &mut R) -> DoubleComplex {
    let nz = |rng: &mut R| -> i64 { rng.gen_range(1..modulus(f)) };
    let mut pieces = Vec::new();
    for _ in 0..rng.gen_range(3..8) {
        let (n, m) = (rng.gen_range(0..=n_cap), rng.gen_range(0..=m_cap));
        let piece = match rng.gen_range(0..4) {
            0 => dot(n, m),
            1 => square(n, m, nz(rng)),
            _ => {
                let coeffs: Vec<i64> = (0..4).map(|_| nz(rng)).collect();
                zigzag(n, m, rng.gen_range(2..7), &coeffs)
            }
        };
        pieces.push(piece);
    }
    // clip to the grid: drop vertices outside and arrows touching them
    let inside = |&(n, m): &(usize, usize)| n <= n_cap && m <= m_cap;
    let mut dims = vec![vec![0usize; m_cap + 1]; n_cap + 1];
    let mut index: Vec<Vec<Option<(usize, usize, usize)>>> = Vec::new();
    for piece in &pieces {
        let mut idx = Vec::new();
        for v in &piece.at {
            if inside(v) {
                idx.push(Some((v.0, v.1, dims[v.0][v.1])));
                dims[v.0][v.1] += 1;
            } else {
                idx.push(None);
            }
        }
        index.push(idx);
    }
    let mut h_trip: Vec<Vec<Vec<(usize, usize, i64)>>> = vec![vec![Vec::new(); m_cap + 1]; n_cap + 1];
    let mut v_trip = h_trip.clone();
    for (piece, idx) in pieces.iter().zip(&index) {
        for &(s, t, horizontal, c) in &piece.arrows {
            if let (Some((n, m, i)), Some((_, _, j))) = (idx[s], idx[t]) {
                let bucket = if horizontal { &mut h_trip } else { &mut v_trip };
                bucket[n][m].push((j, i, c));
            }
        }
    }
    let g: Vec<Vec<Mat>> = dims.iter().map(|col| col.iter().map(|&d| random_invertible(f, d, rng)).collect()).collect();
    let build = |trip: &[(usize, usize, i64)], rows: usize, cols: usize| {
        Mat::from_triplets(f, rows, cols, trip.iter().map(|&(i, j, c)| (i, j, f.int(c))).collect::<Vec<_>>())
    };
    let d_h = (0..n_cap)
        .map(|n| {
            (0..=m_cap)
                .map(|m| {
                    let raw = build(&h_trip[n][m], dims[n + 1][m], dims[n][m]);
                    g[n + 1][m].mul(&raw).mul(&g[n][m].inverse().expect("invertible"))
                })
                .collect()
        })
        .collect();
    let d_v = (0..=n_cap)
        .map(|n| {
            (0..m_cap)
                .map(|m| {
                    let raw = build(&v_trip[n][m], dims[n][m + 1], dims[n][m]);
                    g[n][m + 1].mul(&raw).mul(&g[n][m].inverse().expect("invertible"))
                })
                .collect()
        })
        .collect();
    DoubleComplex::new(f, dims, d_h, d_v, (false, false)).expect("sum of indecomposables is a double complex")
}

#[cfg(test)]
mod tests {
    use super::super::{convergence_check, e2_iterated, spectral_pages, total_complex, Filtration};
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn seeded_complexes_converge() {
        let f5 = FieldSpec::prime(5).unwrap();
        for seed in 0..5 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let dc = random_double_complex(f5, 3, 3, &mut rng);
            let h = total_complex(&dc).cohomology();
            for filt in [Filtration::I, Filtration::II] {
                let pages = spectral_pages(&dc, filt, 5).unwrap();
                assert_eq!(pages[0].dims, e2_iterated(&dc, filt));
                convergence_check(&dc, &pages, &h).unwrap();
            }
        }
    }

    #[test]
    fn same_seed_same_complex() {
        let f5 = FieldSpec::prime(5).unwrap();
        let a = random_double_complex(f5, 2, 2, &mut ChaCha8Rng::seed_from_u64(9));
        let b = random_double_complex(f5, 2, 2, &mut ChaCha8Rng::seed_from_u64(9));
        assert_eq!(a.dims(), b.dims());
        assert_eq!(a.d_h(0, 0), b.d_h(0, 0));
    }
}

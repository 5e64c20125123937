#![allow(dead_code)]

use nalgebra::linalg::Schur;
use nalgebra::{Complex, DMatrix};
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use latfix::{QMatrix, QPolynomial};

pub fn to_f64(m: &QMatrix) -> DMatrix<f64> {
    DMatrix::from_fn(m.nrows(), m.ncols(), |i, j| m.get(i, j).to_f64().unwrap())
}

/// Eigenvalues through a real Schur form. The unshifted Francis iteration
/// can stall on permutation-like matrices, so the input is first conjugated
/// by a fixed random orthogonal matrix, which leaves the spectrum unchanged.
pub fn float_eigenvalues(a: &DMatrix<f64>) -> Result<Vec<Complex<f64>>, String> {
    let n = a.nrows();
    if n == 0 {
        return Ok(vec![]);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let q = DMatrix::from_fn(n, n, |_, _| rng.gen_range(-1.0..1.0)).qr().q();
    let b = &q * a * q.transpose();
    let schur = Schur::try_new(b, 1e-15, 10_000).ok_or("Schur iteration did not converge")?;
    Ok(schur.complex_eigenvalues().iter().cloned().collect())
}

/// Roots of a nonconstant polynomial from its companion matrix.
pub fn float_roots(p: &QPolynomial) -> Vec<Complex<f64>> {
    let d = p.degree();
    let lead = p.leading().to_f64().unwrap();
    let c: Vec<f64> = p.coeffs().iter().map(|x| x.to_f64().unwrap() / lead).collect();
    let companion = DMatrix::from_fn(d, d, |i, j| {
        if j == d - 1 {
            -c[i]
        } else if i == j + 1 {
            1.0
        } else {
            0.0
        }
    });
    float_eigenvalues(&companion).expect("companion eigenvalues")
}

/// Primitive roots of unity of the given order.
pub fn primitive_roots(order: u64) -> Vec<Complex<f64>> {
    (1..=order)
        .filter(|k| num_integer::gcd(*k, order) == 1)
        .map(|k| Complex::from_polar(1.0, 2.0 * std::f64::consts::PI * k as f64 / order as f64))
        .collect()
}

/// Fixed seed and no failure files, so that runs are reproducible.
pub fn proptest_config(cases: u32) -> proptest::test_runner::Config {
    proptest::test_runner::Config {
        cases,
        failure_persistence: None,
        rng_seed: proptest::test_runner::RngSeed::Fixed(0x5eed),
        ..Default::default()
    }
}

#![allow(dead_code)]

use hopfkit::actions::RightModule;
use hopfkit::gallery;
use hopfkit::kernel::{Field, Matrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn q() -> Field {
    Field::Rationals
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random invertible `n×n` matrix with small integer entries.
pub fn random_invertible(field: Field, n: usize, rng: &mut ChaCha8Rng) -> Matrix {
    loop {
        let m = Matrix::from_fn(field, n, n, |_, _| field.from_i64(rng.gen_range(-3..=3)));
        if m.inverse().is_some() {
            return m;
        }
    }
}

/// A random `n`-dimensional `kC2`-module: `g` acts by `P·diag(±1)·P⁻¹`.
pub fn random_c2_module(field: Field, n: usize, rng: &mut ChaCha8Rng) -> RightModule {
    let p = random_invertible(field, n, rng);
    let mut d = Matrix::zeros(field, n, n);
    for i in 0..n {
        d.set(i, i, field.from_i64(if rng.gen_bool(0.5) { 1 } else { -1 }));
    }
    let t = &(&p * &d) * &p.inverse().unwrap();
    let basis = (0..n).map(|i| format!("n{i}")).collect();
    gallery::module_from_matrices(field, basis, &[Matrix::identity(field, n), t]).unwrap()
}

/// Every coefficient vector of length `n` over GF(p).
pub fn all_vectors(field: Field, n: usize) -> Vec<Vec<hopfkit::kernel::Scalar>> {
    let p = field.characteristic() as i64;
    let total = (p as usize).pow(n as u32);
    (0..total)
        .map(|mut k| {
            (0..n)
                .map(|_| {
                    let d = (k % p as usize) as i64;
                    k /= p as usize;
                    field.from_i64(d)
                })
                .collect()
        })
        .collect()
}

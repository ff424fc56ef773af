//! Helpers on coordinate vectors.
//!
//! Elements of a tensor product `V_1 ⊗ ... ⊗ V_n` are flat vectors in
//! row-major multi-index order: the coordinate of `e_{i_1} ⊗ ... ⊗ e_{i_n}`
//! sits at `((i_1 * d_2 + i_2) * d_3 + ...) + i_n`. Every module uses this
//! convention.

use super::field::{Field, Scalar};

/// `y += a * x`.
pub fn axpy(y: &mut [Scalar], a: &Scalar, x: &[Scalar]) {
    assert_eq!(y.len(), x.len(), "axpy length mismatch");
    if a.is_zero() {
        return;
    }
    for (yi, xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            *yi += &(a * xi);
        }
    }
}

pub fn add(x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    assert_eq!(x.len(), y.len(), "add length mismatch");
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

pub fn sub(x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    assert_eq!(x.len(), y.len(), "sub length mismatch");
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

pub fn scale(x: &[Scalar], a: &Scalar) -> Vec<Scalar> {
    x.iter().map(|xi| a * xi).collect()
}

pub fn is_zero(x: &[Scalar]) -> bool {
    x.iter().all(Scalar::is_zero)
}

pub fn dot(x: &[Scalar], y: &[Scalar]) -> Scalar {
    assert_eq!(x.len(), y.len(), "dot length mismatch");
    let field = x.first().map(Scalar::field).unwrap_or(Field::Rationals);
    let mut acc = field.zero();
    for (a, b) in x.iter().zip(y) {
        if !a.is_zero() && !b.is_zero() {
            acc += &(a * b);
        }
    }
    acc
}

/// Coordinates of `x ⊗ y`.
pub fn kron(x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let field = x.first().or(y.first()).map(Scalar::field).unwrap_or(Field::Rationals);
    let mut out = field.zeros(x.len() * y.len());
    for (i, a) in nonzero(x) {
        for (j, b) in nonzero(y) {
            out[i * y.len() + j] = a * b;
        }
    }
    out
}

/// `out += c * (x ⊗ y)`.
pub fn add_kron(out: &mut [Scalar], c: &Scalar, x: &[Scalar], y: &[Scalar]) {
    assert_eq!(out.len(), x.len() * y.len(), "add_kron length mismatch");
    if c.is_zero() {
        return;
    }
    for (i, a) in nonzero(x) {
        let ca = c * a;
        for (j, b) in nonzero(y) {
            out[i * y.len() + j] += &(&ca * b);
        }
    }
}

/// Nonzero coordinates with their indices.
pub fn nonzero(x: &[Scalar]) -> impl Iterator<Item = (usize, &Scalar)> {
    x.iter().enumerate().filter(|(_, c)| !c.is_zero())
}

/// Nonzero coordinates of an element of `V ⊗ W` (`dim W = inner`), split
/// into `(i, j, coefficient)`.
pub fn nonzero_pairs(x: &[Scalar], inner: usize) -> impl Iterator<Item = (usize, usize, &Scalar)> {
    nonzero(x).map(move |(k, c)| (k / inner, k % inner, c))
}

/// Nonzero coordinates of an element of `U ⊗ V ⊗ W`.
pub fn nonzero_triples(
    x: &[Scalar],
    mid: usize,
    inner: usize,
) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> {
    nonzero(x).map(move |(k, c)| (k / (mid * inner), (k / inner) % mid, k % inner, c))
}

pub fn to_strings(x: &[Scalar]) -> Vec<String> {
    x.iter().map(ToString::to_string).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kron_is_row_major() {
        let q = Field::Rationals;
        let x = q.vector(&[1, 2]);
        let y = q.vector(&[3, 0, 5]);
        assert_eq!(kron(&x, &y), q.vector(&[3, 0, 5, 6, 0, 10]));
        let pairs: Vec<_> = nonzero_pairs(&kron(&x, &y), 3).map(|(i, j, _)| (i, j)).collect();
        assert_eq!(pairs, vec![(0, 0), (0, 2), (1, 0), (1, 2)]);
    }

    #[test]
    fn axpy_accumulates() {
        let q = Field::Rationals;
        let mut y = q.vector(&[1, 1]);
        axpy(&mut y, &q.from_i64(2), &q.vector(&[3, -1]));
        assert_eq!(y, q.vector(&[7, -1]));
        assert_eq!(dot(&y, &q.vector(&[1, 1])), q.from_i64(6));
    }
}

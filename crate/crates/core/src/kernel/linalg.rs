//! Exact elimination.
//!
//! Over Q every row is first scaled to primitive integers and eliminated
//! fraction-free, so intermediate entries never carry denominators. Over
//! GF(p) plain modular Gauss-Jordan is used.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::field::{Field, Scalar};
use super::matrix::Matrix;
use crate::error::{dim_err, Result};

/// Reduced row echelon form and the pivot columns, in increasing order.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub reduced: Matrix,
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Columns that carry no pivot.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut free = Vec::new();
        let mut p = self.pivots.iter().peekable();
        for j in 0..self.reduced.cols() {
            if p.peek() == Some(&&j) {
                p.next();
            } else {
                free.push(j);
            }
        }
        free
    }
}

fn integer_rows(a: &Matrix) -> Vec<Vec<BigInt>> {
    (0..a.rows())
        .map(|i| {
            let row: Vec<&BigRational> =
                a.row(i).iter().map(|s| s.as_rational().expect("rational entry")).collect();
            let lcm = row.iter().fold(BigInt::one(), |l, r| l.lcm(r.denom()));
            let mut ints: Vec<BigInt> =
                row.iter().map(|r| r.numer() * (&lcm / r.denom())).collect();
            primitive(&mut ints);
            ints
        })
        .collect()
}

/// Divides a row by the gcd of its entries.
fn primitive(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in row.iter_mut() {
            *x = &*x / &g;
        }
    }
}

fn echelon_rational(a: &Matrix) -> Echelon {
    let (rows, cols) = (a.rows(), a.cols());
    let mut m = integer_rows(a);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).filter(|&i| !m[i][c].is_zero()).min_by_key(|&i| m[i][c].abs())
        else {
            continue;
        };
        m.swap(r, p);
        let (top, rest) = m.split_at_mut(r + 1);
        let (above, pivot) = top.split_at_mut(r);
        let pivot_row = &pivot[0];
        let piv = pivot_row[c].clone();
        for row in above.iter_mut().chain(rest.iter_mut()) {
            if row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for j in 0..cols {
                row[j] = &row[j] * &piv - &f * &pivot_row[j];
            }
            primitive(row);
        }
        pivots.push(c);
        r += 1;
    }
    let field = a.field();
    let mut reduced = Matrix::zeros(field, rows, cols);
    for (i, &c) in pivots.iter().enumerate() {
        let piv = m[i][c].clone();
        for (j, x) in m[i].iter().enumerate() {
            if !x.is_zero() {
                let q = BigRational::new(x.clone(), piv.clone());
                reduced.set(i, j, Scalar::Rational(q));
            }
        }
    }
    Echelon { reduced, pivots }
}

fn echelon_modular(a: &Matrix, p: u64) -> Echelon {
    let (rows, cols) = (a.rows(), a.cols());
    let mut m: Vec<Vec<u64>> = (0..rows)
        .map(|i| a.row(i).iter().map(|s| s.residue().expect("residue entry")).collect())
        .collect();
    let mulm = |x: u64, y: u64| ((x as u128 * y as u128) % p as u128) as u64;
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv_idx) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, piv_idx);
        let inv = a.field().from_i64(m[r][c] as i64).inv().and_then(|s| s.residue()).unwrap();
        for x in m[r].iter_mut() {
            *x = mulm(*x, inv);
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c] == 0 {
                continue;
            }
            let f = row[c];
            for j in 0..cols {
                row[j] = (row[j] + p - mulm(f, pivot_row[j])) % p;
            }
        }
        pivots.push(c);
        r += 1;
    }
    let field = a.field();
    let data = m.into_iter().flatten().map(|v| field.from_i64(v as i64)).collect();
    Echelon { reduced: Matrix::new(field, rows, cols, data).unwrap(), pivots }
}

/// Reduced row echelon form.
pub fn echelon(a: &Matrix) -> Echelon {
    match a.field() {
        Field::Rationals => echelon_rational(a),
        Field::Prime(p) => echelon_modular(a, p),
    }
}

/// Fraction-free (Bareiss) rank over Q, used as a route independent of
/// [`echelon`].
fn bareiss_rank(a: &Matrix) -> usize {
    let (rows, cols) = (a.rows(), a.cols());
    let mut m = integer_rows(a);
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let piv = m[r][c].clone();
        let (top, bottom) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in bottom {
            let f = row[c].clone();
            for (x, y) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                *x = (&piv * &*x - &f * y) / &prev;
            }
        }
        prev = piv;
        r += 1;
    }
    r
}

pub fn rank(a: &Matrix) -> usize {
    match a.field() {
        Field::Rationals => bareiss_rank(a),
        Field::Prime(_) => echelon(a).rank(),
    }
}

/// Some `x` with `A·x = b`, or `None` if the system is inconsistent. Free
/// variables are set to zero.
pub fn solve_linear(a: &Matrix, b: &Matrix) -> Result<Option<Matrix>> {
    if a.rows() != b.rows() || b.cols() != 1 {
        return Err(dim_err(format!(
            "system is {}x{} but right-hand side is {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    let n = a.cols();
    let ech = echelon(&a.hstack(b)?);
    if ech.pivots.last() == Some(&n) {
        return Ok(None);
    }
    let mut x = a.field().zeros(n);
    for (i, &c) in ech.pivots.iter().enumerate() {
        x[c] = ech.reduced.get(i, n).clone();
    }
    Ok(Some(Matrix::column_vector(a.field(), x)))
}

/// Basis of `{x : A·x = 0}` as the columns of the returned matrix.
pub fn kernel_basis(a: &Matrix) -> Matrix {
    let ech = echelon(a);
    kernel_from_echelon(&ech, a.field())
}

fn kernel_from_echelon(ech: &Echelon, field: Field) -> Matrix {
    let n = ech.reduced.cols();
    let free = ech.free_columns();
    let cols: Vec<Vec<Scalar>> = free
        .iter()
        .map(|&f| {
            let mut v = field.zeros(n);
            v[f] = field.one();
            for (i, &c) in ech.pivots.iter().enumerate() {
                v[c] = -ech.reduced.get(i, f);
            }
            v
        })
        .collect();
    Matrix::from_columns(field, n, &cols)
}

/// Basis of the column space of `a`, as a submatrix of pivot columns.
pub fn column_space(a: &Matrix) -> Matrix {
    let ech = echelon(a);
    let cols: Vec<Vec<Scalar>> = ech.pivots.iter().map(|&c| a.column(c)).collect();
    Matrix::from_columns(a.field(), a.rows(), &cols)
}

/// Whether `v` lies in the column span of `a`.
pub fn in_span(a: &Matrix, v: &[Scalar]) -> bool {
    let b = Matrix::column_vector(a.field(), v.to_vec());
    matches!(solve_linear(a, &b), Ok(Some(_)))
}

/// A quotient `V / R` of a coordinate space by the span of some relations.
///
/// The quotient basis is the set of coordinates left free by the reduced
/// echelon form of the relations; `projection` maps `V` onto it and `lift`
/// sends each quotient basis vector back to its coordinate vector.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub free_coords: Vec<usize>,
    pub projection: Matrix,
    pub lift: Matrix,
}

impl Quotient {
    /// `relations` holds one relation per row, each of length `ambient`.
    pub fn new(field: Field, ambient: usize, relations: &Matrix) -> Result<Quotient> {
        if relations.rows() > 0 && relations.cols() != ambient {
            return Err(dim_err("relation length differs from the ambient dimension"));
        }
        let rel = if relations.rows() == 0 { Matrix::zeros(field, 0, ambient) } else { relations.clone() };
        let ech = echelon(&rel);
        let free = ech.free_columns();
        let q = free.len();
        let mut position = vec![usize::MAX; ambient];
        for (k, &f) in free.iter().enumerate() {
            position[f] = k;
        }
        let mut projection = Matrix::zeros(field, q, ambient);
        for (k, &f) in free.iter().enumerate() {
            projection.set(k, f, field.one());
        }
        for (i, &c) in ech.pivots.iter().enumerate() {
            for &f in &free {
                let e = ech.reduced.get(i, f);
                if !e.is_zero() {
                    projection.set(position[f], c, -e);
                }
            }
        }
        let mut lift = Matrix::zeros(field, ambient, q);
        for (k, &f) in free.iter().enumerate() {
            lift.set(f, k, field.one());
        }
        Ok(Quotient { free_coords: free, projection, lift })
    }

    pub fn dim(&self) -> usize {
        self.free_coords.len()
    }

    pub fn ambient(&self) -> usize {
        self.projection.cols()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn col(f: Field, v: &[i64]) -> Matrix {
        Matrix::column_vector(f, f.vector(v))
    }

    #[test]
    fn solve_examples() {
        let q = Field::Rationals;
        let x = solve_linear(&Matrix::identity(q, 2), &col(q, &[1, 0])).unwrap().unwrap();
        assert_eq!(x, col(q, &[1, 0]));
        let ones = Matrix::from_i64(q, &[&[1, 1], &[1, 1]]);
        assert!(solve_linear(&ones, &col(q, &[1, 0])).unwrap().is_none());
        let f3 = Field::prime(3).unwrap();
        let x = solve_linear(&Matrix::from_i64(f3, &[&[2]]), &col(f3, &[1])).unwrap().unwrap();
        assert_eq!(x, col(f3, &[2]));
        assert!(solve_linear(&ones, &col(q, &[1, 0, 0])).is_err());
    }

    #[test]
    fn rank_examples() {
        let q = Field::Rationals;
        assert_eq!(rank(&Matrix::identity(q, 3)), 3);
        assert_eq!(rank(&Matrix::zeros(q, 2, 5)), 0);
        assert_eq!(rank(&Matrix::from_i64(q, &[&[1, 2], &[2, 4]])), 1);
        let f2 = Field::prime(2).unwrap();
        assert_eq!(rank(&Matrix::from_i64(f2, &[&[1, 1], &[1, -1]])), 1);
    }

    #[test]
    fn kernel_examples() {
        let q = Field::Rationals;
        assert_eq!(kernel_basis(&Matrix::identity(q, 2)).cols(), 0);
        let k = kernel_basis(&Matrix::zeros(q, 1, 2));
        assert_eq!((k.cols(), k.rank()), (2, 2));
        let k = kernel_basis(&Matrix::from_i64(q, &[&[1, -1]]));
        assert_eq!(k, col(q, &[1, 1]));
    }

    #[test]
    fn quotient_by_diagonal() {
        let q = Field::Rationals;
        // k^3 modulo span{e0 - e1}
        let rel = Matrix::from_i64(q, &[&[1, -1, 0]]);
        let quo = Quotient::new(q, 3, &rel).unwrap();
        assert_eq!(quo.dim(), 2);
        assert!(quo.projection.apply(&q.vector(&[1, -1, 0])).iter().all(Scalar::is_zero));
        assert!((&quo.projection * &quo.lift).is_identity());
    }

    #[test]
    fn rational_echelon_normalizes() {
        let q = Field::Rationals;
        let a = Matrix::new(
            q,
            2,
            2,
            vec![q.ratio(1, 2), q.ratio(1, 3), q.from_i64(3), q.from_i64(2)],
        )
        .unwrap();
        let e = echelon(&a);
        assert_eq!(e.pivots, vec![0]);
        assert_eq!(e.reduced.get(0, 1), &q.ratio(2, 3));
    }
}

use super::field::{Field, Scalar};
use super::matrix::Matrix;
use crate::error::{dim_err, Result};

/// Dense coefficient array in row-major multi-index order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tensor {
    field: Field,
    shape: Vec<usize>,
    data: Vec<Scalar>,
}

fn strides(shape: &[usize]) -> Vec<usize> {
    let mut s = vec![1; shape.len()];
    for k in (0..shape.len().saturating_sub(1)).rev() {
        s[k] = s[k + 1] * shape[k + 1];
    }
    s
}

fn unflatten(mut flat: usize, shape: &[usize], out: &mut [usize]) {
    for k in (0..shape.len()).rev() {
        out[k] = flat % shape[k];
        flat /= shape[k];
    }
}

impl Tensor {
    pub fn zeros(field: Field, shape: &[usize]) -> Tensor {
        let n = shape.iter().product();
        Tensor { field, shape: shape.to_vec(), data: field.zeros(n) }
    }

    pub fn from_vec(field: Field, shape: &[usize], data: Vec<Scalar>) -> Result<Tensor> {
        let n: usize = shape.iter().product();
        if data.len() != n {
            return Err(dim_err(format!("{} entries for shape {:?}", data.len(), shape)));
        }
        Ok(Tensor { field, shape: shape.to_vec(), data })
    }

    /// Rank-0 tensor.
    pub fn scalar(value: Scalar) -> Tensor {
        Tensor { field: value.field(), shape: Vec::new(), data: vec![value] }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn order(&self) -> usize {
        self.shape.len()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    fn offset(&self, index: &[usize]) -> usize {
        assert_eq!(index.len(), self.shape.len(), "index order mismatch");
        let mut off = 0;
        for (i, (&x, &d)) in index.iter().zip(&self.shape).enumerate() {
            assert!(x < d, "index {x} out of range on leg {i}");
            off = off * d + x;
        }
        off
    }

    pub fn get(&self, index: &[usize]) -> &Scalar {
        &self.data[self.offset(index)]
    }

    pub fn set(&mut self, index: &[usize], value: Scalar) {
        let o = self.offset(index);
        self.data[o] = value;
    }

    pub fn add_to(&mut self, index: &[usize], value: &Scalar) {
        let o = self.offset(index);
        self.data[o] += value;
    }

    /// The contiguous block of entries whose leading legs equal `prefix`,
    /// i.e. the image of a basis tuple under the map the tensor encodes.
    pub fn slice(&self, prefix: &[usize]) -> &[Scalar] {
        assert!(prefix.len() <= self.shape.len(), "slice prefix too long");
        let block: usize = self.shape[prefix.len()..].iter().product();
        let mut off = 0;
        for (&x, &d) in prefix.iter().zip(&self.shape) {
            assert!(x < d, "slice index out of range");
            off = off * d + x;
        }
        &self.data[off * block..(off + 1) * block]
    }

    /// Nonzero entries with their multi-indices.
    pub fn nonzeros(&self) -> impl Iterator<Item = (Vec<usize>, &Scalar)> + '_ {
        self.data.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| {
            let mut idx = vec![0; self.shape.len()];
            unflatten(k, &self.shape, &mut idx);
            (idx, c)
        })
    }

    /// Contracts leg `a` of `self` with leg `b` of `other` for every `(a, b)`
    /// in `pairs`. The result carries the free legs of `self` followed by the
    /// free legs of `other`, each in their original order.
    pub fn contract(&self, other: &Tensor, pairs: &[(usize, usize)]) -> Result<Tensor> {
        for &(a, b) in pairs {
            if a >= self.order() || b >= other.order() {
                return Err(dim_err(format!("contraction legs ({a}, {b}) out of range")));
            }
            if self.shape[a] != other.shape[b] {
                return Err(dim_err(format!(
                    "leg {a} has dimension {} but leg {b} has {}",
                    self.shape[a], other.shape[b]
                )));
            }
        }
        let free_a: Vec<usize> = (0..self.order()).filter(|k| pairs.iter().all(|p| p.0 != *k)).collect();
        let free_b: Vec<usize> = (0..other.order()).filter(|k| pairs.iter().all(|p| p.1 != *k)).collect();
        let out_shape: Vec<usize> = free_a
            .iter()
            .map(|&k| self.shape[k])
            .chain(free_b.iter().map(|&k| other.shape[k]))
            .collect();
        let mut out = Tensor::zeros(self.field, &out_shape);
        let out_strides = strides(&out_shape);
        let mut ia = vec![0; self.order()];
        let mut ib = vec![0; other.order()];
        for (ka, x) in self.data.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            unflatten(ka, &self.shape, &mut ia);
            let base_out: usize = free_a.iter().enumerate().map(|(p, &k)| ia[k] * out_strides[p]).sum();
            for (kb, y) in other.data.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                unflatten(kb, &other.shape, &mut ib);
                if pairs.iter().any(|&(a, b)| ia[a] != ib[b]) {
                    continue;
                }
                let off: usize = base_out
                    + free_b
                        .iter()
                        .enumerate()
                        .map(|(p, &k)| ib[k] * out_strides[free_a.len() + p])
                        .sum::<usize>();
                out.data[off] += &(x * y);
            }
        }
        Ok(out)
    }

    /// Contracts legs `a` and `b` of `self` with each other.
    pub fn trace(&self, a: usize, b: usize) -> Result<Tensor> {
        if a == b || a >= self.order() || b >= self.order() || self.shape[a] != self.shape[b] {
            return Err(dim_err(format!("cannot trace legs {a} and {b} of shape {:?}", self.shape)));
        }
        let free: Vec<usize> = (0..self.order()).filter(|&k| k != a && k != b).collect();
        let out_shape: Vec<usize> = free.iter().map(|&k| self.shape[k]).collect();
        let mut out = Tensor::zeros(self.field, &out_shape);
        let st = strides(&out_shape);
        let mut idx = vec![0; self.order()];
        for (k, x) in self.data.iter().enumerate() {
            unflatten(k, &self.shape, &mut idx);
            if x.is_zero() || idx[a] != idx[b] {
                continue;
            }
            let off: usize = free.iter().enumerate().map(|(p, &l)| idx[l] * st[p]).sum();
            out.data[off] += x;
        }
        Ok(out)
    }

    /// Reorders legs: leg `k` of the result is leg `perm[k]` of `self`.
    pub fn permute(&self, perm: &[usize]) -> Tensor {
        assert_eq!(perm.len(), self.order(), "permutation order");
        let shape: Vec<usize> = perm.iter().map(|&k| self.shape[k]).collect();
        let st = strides(&shape);
        let mut out = Tensor::zeros(self.field, &shape);
        let mut idx = vec![0; self.order()];
        for (k, x) in self.data.iter().enumerate() {
            unflatten(k, &self.shape, &mut idx);
            let off: usize = perm.iter().enumerate().map(|(p, &l)| idx[l] * st[p]).sum();
            out.data[off] = x.clone();
        }
        out
    }

    /// Views a tensor of shape `(d_0, ..., d_n)` as the matrix of the map
    /// `e_{i_0} ↦ Σ t[i_0][i_1..] e_{i_1..}`, so the first leg is the input.
    pub fn to_map(&self) -> Matrix {
        self.to_map_from_legs(1)
    }

    /// Like [`Tensor::to_map`] with the first `k` legs as the input.
    pub fn to_map_from_legs(&self, k: usize) -> Matrix {
        assert!(self.order() >= k, "not enough legs for the input");
        let input: usize = self.shape[..k].iter().product();
        let output: usize = self.shape[k..].iter().product();
        Matrix::from_fn(self.field, output, input, |i, j| self.data[j * output + i].clone())
    }

    /// Inverse of [`Tensor::to_map`] for a given output shape.
    pub fn from_map(m: &Matrix, output_shape: &[usize]) -> Result<Tensor> {
        let out: usize = output_shape.iter().product();
        if out != m.rows() {
            return Err(dim_err("output shape does not match the matrix rows"));
        }
        let mut shape = vec![m.cols()];
        shape.extend_from_slice(output_shape);
        let mut data = Vec::with_capacity(m.rows() * m.cols());
        for j in 0..m.cols() {
            for i in 0..m.rows() {
                data.push(m.get(i, j).clone());
            }
        }
        Tensor::from_vec(m.field(), &shape, data)
    }

    pub fn from_matrix(m: &Matrix) -> Tensor {
        Tensor { field: m.field(), shape: vec![m.rows(), m.cols()], data: m.entries().to_vec() }
    }

    pub fn to_matrix(&self) -> Result<Matrix> {
        if self.order() != 2 {
            return Err(dim_err("only order-2 tensors are matrices"));
        }
        Matrix::new(self.field, self.shape[0], self.shape[1], self.data.clone())
    }

    pub fn from_vector(field: Field, v: Vec<Scalar>) -> Tensor {
        Tensor { field, shape: vec![v.len()], data: v }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_on_vector() {
        let q = Field::Rationals;
        let id = Tensor::from_matrix(&Matrix::identity(q, 2));
        let v = Tensor::from_vector(q, q.vector(&[3, -7]));
        assert_eq!(id.contract(&v, &[(1, 0)]).unwrap(), v);
    }

    #[test]
    fn trace_of_identity() {
        let q = Field::Rationals;
        let t = Tensor::from_matrix(&Matrix::identity(q, 3)).trace(0, 1).unwrap();
        assert_eq!(t, Tensor::scalar(q.from_i64(3)));
    }

    #[test]
    fn counit_of_group_algebra() {
        // kC2: Δ(g^a) = g^a ⊗ g^a, ε ≡ 1
        let q = Field::Rationals;
        let mut delta = Tensor::zeros(q, &[2, 2, 2]);
        for a in 0..2 {
            delta.set(&[a, a, a], q.one());
        }
        let eps = Tensor::from_vector(q, q.vector(&[1, 1]));
        let r = delta.contract(&eps, &[(1, 0)]).unwrap();
        assert_eq!(r.to_matrix().unwrap(), Matrix::identity(q, 2));
    }

    #[test]
    fn shape_mismatch() {
        let q = Field::Rationals;
        let a = Tensor::zeros(q, &[2, 3]);
        assert!(a.contract(&a, &[(1, 1), (0, 0)]).is_ok());
        assert!(a.contract(&a, &[(0, 1)]).is_err());
        assert!(a.trace(0, 1).is_err());
    }

    #[test]
    fn map_round_trip() {
        let q = Field::Rationals;
        let m = Matrix::from_i64(q, &[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9], &[0, 1, 0]]);
        let t = Tensor::from_map(&m, &[2, 2]).unwrap();
        assert_eq!(t.get(&[1, 0, 1]), &q.from_i64(5));
        assert_eq!(t.to_map(), m);
    }
}

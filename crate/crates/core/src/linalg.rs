//! Dense exact linear algebra over `Q(i)`.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_traits::{One, Zero};
use thiserror::Error;

use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix is singular")]
    Singular,
}

/// A fixed-length vector of scalars.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Vector(Vec<Scalar>);

impl Vector {
    pub fn zeros(n: usize) -> Self {
        Vector(vec![Scalar::zero(); n])
    }

    pub fn unit(n: usize, k: usize) -> Self {
        let mut v = Vector::zeros(n);
        v.0[k] = Scalar::one();
        v
    }

    pub fn from_vec(v: Vec<Scalar>) -> Self {
        Vector(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn as_slice(&self) -> &[Scalar] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<Scalar> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Scalar> {
        self.0.iter()
    }

    fn check_len(&self, other: &Vector) -> Result<(), LinalgError> {
        if self.len() == other.len() {
            Ok(())
        } else {
            Err(LinalgError::Dimension(format!(
                "vector lengths {} and {}",
                self.len(),
                other.len()
            )))
        }
    }

    pub fn add(&self, other: &Vector) -> Result<Vector, LinalgError> {
        self.check_len(other)?;
        Ok(Vector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect()))
    }

    pub fn sub(&self, other: &Vector) -> Result<Vector, LinalgError> {
        self.check_len(other)?;
        Ok(Vector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    pub fn scale(&self, c: &Scalar) -> Vector {
        Vector(self.0.iter().map(|a| a * c).collect())
    }

    /// `self += c * other`, assuming equal lengths.
    pub fn axpy(&mut self, c: &Scalar, other: &Vector) {
        debug_assert_eq!(self.len(), other.len());
        if c.is_zero() {
            return;
        }
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            if !b.is_zero() {
                *a += &(c * b);
            }
        }
    }

    /// Kronecker product of coordinate vectors: index `i * other.len() + j`.
    pub fn kron(&self, other: &Vector) -> Vector {
        let mut out = Vec::with_capacity(self.len() * other.len());
        for a in &self.0 {
            for b in &other.0 {
                out.push(a * b);
            }
        }
        Vector(out)
    }
}

impl Index<usize> for Vector {
    type Output = Scalar;
    fn index(&self, k: usize) -> &Scalar {
        &self.0[k]
    }
}

impl IndexMut<usize> for Vector {
    fn index_mut(&mut self, k: usize) -> &mut Scalar {
        &mut self.0[k]
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.0).finish()
    }
}

impl FromIterator<Scalar> for Vector {
    fn from_iter<I: IntoIterator<Item = Scalar>>(iter: I) -> Self {
        Vector(iter.into_iter().collect())
    }
}

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Outcome of [`Matrix::solve`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solve {
    /// A particular solution; free variables are set to zero.
    Solution(Vector),
    Inconsistent,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for k in 0..n {
            m[(k, k)] = Scalar::one();
        }
        m
    }

    pub fn diag(entries: &[Scalar]) -> Self {
        let mut m = Matrix::zeros(entries.len(), entries.len());
        for (k, e) in entries.iter().enumerate() {
            m[(k, k)] = e.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(LinalgError::Dimension("ragged rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds a matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(rows: usize, columns: &[Vector]) -> Result<Self, LinalgError> {
        let mut m = Matrix::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(LinalgError::Dimension(format!(
                    "column {j} has length {}, expected {rows}",
                    col.len()
                )));
            }
            for i in 0..rows {
                m[(i, j)] = col[i].clone();
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &Vector) -> Result<Vector, LinalgError> {
        if self.cols != v.len() {
            return Err(LinalgError::Dimension(format!(
                "{}x{} times vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v.iter())
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect())
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        self.same_shape(other)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        self.same_shape(other)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        })
    }

    fn same_shape(&self, other: &Matrix) -> Result<(), LinalgError> {
        if self.rows == other.rows && self.cols == other.cols {
            Ok(())
        } else {
            Err(LinalgError::Dimension(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )))
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Kronecker product; entry `((i*p + k), (j*q + l))` is `a_ij * b_kl`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let (p, q) = (other.rows, other.cols);
        let mut out = Matrix::zeros(self.rows * p, self.cols * q);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..p {
                    for l in 0..q {
                        let b = &other[(k, l)];
                        if !b.is_zero() {
                            out[(i * p + k, j * q + l)] = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut rows: Vec<Vec<Scalar>> = (0..self.rows)
            .map(|i| self.row(i).to_vec())
            .filter(|r| r.iter().any(|x| !x.is_zero()))
            .collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            let Some(p) = (r..rows.len()).find(|&k| !rows[k][c].is_zero()) else {
                continue;
            };
            rows.swap(r, p);
            let inv = rows[r][c].inv().expect("pivot is nonzero");
            for x in rows[r].iter_mut() {
                *x = &*x * &inv;
            }
            let pivot_row = rows[r].clone();
            for (k, row) in rows.iter_mut().enumerate() {
                if k == r || row[c].is_zero() {
                    continue;
                }
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row).skip(c) {
                    if !y.is_zero() {
                        *x -= &(&f * y);
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == rows.len() {
                break;
            }
        }
        rows.truncate(r);
        let mut out = Matrix::zeros(self.rows, self.cols);
        for (i, row) in rows.into_iter().enumerate() {
            for (j, x) in row.into_iter().enumerate() {
                out[(i, j)] = x;
            }
        }
        (out, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A basis of the null space `{v : M v = 0}`.
    pub fn kernel(&self) -> Vec<Vector> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = Vector::zeros(self.cols);
                v[f] = Scalar::one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -r[(i, f)].clone();
                }
                v
            })
            .collect()
    }

    pub fn solve(&self, b: &Vector) -> Result<Solve, LinalgError> {
        if b.len() != self.rows {
            return Err(LinalgError::Dimension(format!(
                "{} rows but right-hand side of length {}",
                self.rows,
                b.len()
            )));
        }
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(Solve::Inconsistent);
        }
        let mut x = Vector::zeros(self.cols);
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = r[(i, self.cols)].clone();
        }
        Ok(Solve::Solution(x))
    }

    pub fn inverse(&self) -> Result<Matrix, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::Dimension("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Scalar::one();
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(LinalgError::Singular);
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = r[(i, n + j)].clone();
            }
        }
        Ok(inv)
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        write!(f, "]")
    }
}

/// One row per line, entries right-aligned per column.
impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(|c| c.to_string()).collect())
            .collect();
        let widths: Vec<usize> = (0..self.cols)
            .map(|j| cells.iter().map(|r| r[j].chars().count()).max().unwrap_or(0))
            .collect();
        for row in &cells {
            let padded: Vec<String> = row.iter().zip(&widths).map(|(c, &w)| format!("{c:>w$}")).collect();
            writeln!(f, "[ {} ]", padded.join("  "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn kernel_edge_cases() {
        assert_eq!(Matrix::zeros(3, 3).kernel().len(), 3);
        assert!(Matrix::identity(4).kernel().is_empty());
    }

    #[test]
    fn solve_examples() {
        let b = Vector::from_vec(vec![Scalar::from_int(3), Scalar::i()]);
        assert_eq!(Matrix::identity(2).solve(&b).unwrap(), Solve::Solution(b));
        let b = Vector::from_vec(vec![Scalar::one(), Scalar::zero()]);
        assert_eq!(m(&[&[1, 1], &[1, 1]]).solve(&b).unwrap(), Solve::Inconsistent);
        let b = Vector::from_vec(vec![Scalar::one()]);
        assert_eq!(
            m(&[&[2]]).solve(&b).unwrap(),
            Solve::Solution(Vector::from_vec(vec![Scalar::frac(1, 2)]))
        );
        assert!(m(&[&[2]]).solve(&Vector::zeros(2)).is_err());
    }

    #[test]
    fn kron_examples() {
        let i2 = Matrix::identity(2);
        assert_eq!(i2.kron(&i2), Matrix::identity(4));
        let d = Matrix::diag(&[Scalar::one(), -Scalar::one()]);
        let expected = Matrix::diag(&[1, 1, -1, -1].map(Scalar::from_int));
        assert_eq!(d.kron(&i2), expected);
    }

    #[test]
    fn dimension_errors() {
        assert!(m(&[&[1, 2]]).mul(&m(&[&[1, 2]])).is_err());
        assert!(Matrix::from_rows(vec![vec![Scalar::one()], vec![]]).is_err());
        assert_eq!(m(&[&[1, 2], &[2, 4]]).inverse(), Err(LinalgError::Singular));
    }

    fn arb_matrix(r: usize, c: usize) -> impl Strategy<Value = Matrix> {
        proptest::collection::vec((-3i64..4, -2i64..3), r * c).prop_map(move |v| {
            let data: Vec<Scalar> = v.into_iter().map(|(a, b)| Scalar::gaussian(a, 1, b, 2)).collect();
            Matrix::from_rows(data.chunks(c).map(<[Scalar]>::to_vec).collect()).unwrap()
        })
    }

    /// Entry-by-entry expansion of the Kronecker product, independent of `kron`.
    fn kron_entry(a: &Matrix, b: &Matrix, i: usize, j: usize) -> Scalar {
        let (p, q) = (b.rows(), b.cols());
        &a[(i / p, j / q)] * &b[(i % p, j % q)]
    }

    proptest! {
        #[test]
        fn rank_nullity(a in arb_matrix(4, 5)) {
            let k = a.kernel();
            prop_assert_eq!(k.len() + a.rank(), 5);
            for v in &k {
                prop_assert!(a.mul_vec(v).unwrap().is_zero());
            }
            let basis = Matrix::from_columns(5, &k).unwrap();
            prop_assert_eq!(basis.rank(), k.len());
        }

        #[test]
        fn kron_mixed_product(a in arb_matrix(2, 2), b in arb_matrix(2, 2),
                              c in arb_matrix(2, 2), d in arb_matrix(2, 2)) {
            let lhs = a.kron(&b).mul(&c.kron(&d)).unwrap();
            let ac = a.mul(&c).unwrap();
            let bd = b.mul(&d).unwrap();
            // direct expansion: sum_k (a⊗b)_{ik} (c⊗d)_{kj}
            for i in 0..4 {
                for j in 0..4 {
                    let direct: Scalar = (0..4)
                        .map(|k| kron_entry(&a, &b, i, k) * kron_entry(&c, &d, k, j))
                        .sum();
                    prop_assert_eq!(&lhs[(i, j)], &direct);
                    prop_assert_eq!(&kron_entry(&ac, &bd, i, j), &direct);
                }
            }
        }

        #[test]
        fn kron_associative(a in arb_matrix(2, 1), b in arb_matrix(1, 2), c in arb_matrix(2, 2)) {
            prop_assert_eq!(a.kron(&b).kron(&c), a.kron(&b.kron(&c)));
        }

        #[test]
        fn solve_is_exact(a in arb_matrix(3, 3), x in arb_matrix(3, 1)) {
            let b = a.mul(&x).unwrap().column(0);
            match a.solve(&b).unwrap() {
                Solve::Solution(y) => prop_assert_eq!(a.mul_vec(&y).unwrap(), b),
                Solve::Inconsistent => prop_assert!(false, "consistent system reported inconsistent"),
            }
        }
    }
}

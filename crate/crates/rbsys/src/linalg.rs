//! Exact dense linear algebra over any of the scalar fields.
//!
//! Everything here is plain Gaussian elimination; matrices are desk-scale
//! (a few hundred rows at most), exactness matters more than speed.

use crate::scalar::{FieldSpec, Scalar};

/// A dense row-major matrix over a fixed field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub field: FieldSpec,
    data: Vec<Scalar>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize, field: FieldSpec) -> Self {
        Mat {
            rows,
            cols,
            field,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(n: usize, field: FieldSpec) -> Self {
        let mut m = Mat::zeros(n, n, field);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            data.extend(row);
        }
        Mat {
            rows: r,
            cols: c,
            field,
            data,
        }
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            data: self.data.iter().map(|a| a.mul(c)).collect(),
        }
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Mat::zeros(self.rows, other.cols, self.field);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j).add(&a.mul(b));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Matrix–vector product, treating `v` as a column.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "matrix apply shape mismatch");
        let mut out = vec![self.field.zero(); self.rows];
        for i in 0..self.rows {
            for (k, vk) in v.iter().enumerate() {
                if vk.is_zero() {
                    continue;
                }
                out[i] = out[i].add(&self.get(i, k).mul(vk));
            }
        }
        out
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            for j in 0..self.cols {
                let tmp = self.get(r, j).clone();
                self.set(r, j, self.get(pr, j).clone());
                self.set(pr, j, tmp);
            }
            let inv = self.get(r, c).inverse().expect("pivot is nonzero");
            for j in 0..self.cols {
                let v = self.get(r, j).mul(&inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r || self.get(i, c).is_zero() {
                    continue;
                }
                let factor = self.get(i, c).clone();
                for j in 0..self.cols {
                    let v = self.get(i, j).sub(&factor.mul(self.get(r, j)));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// A basis of `{x : Ax = 0}`, with free variables set to 1 in column
    /// order, so the result is deterministic.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let mut basis = Vec::new();
        let mut pivot_of_col = vec![None; self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            pivot_of_col[c] = Some(r);
        }
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut v = vec![self.field.zero(); self.cols];
            v[free] = self.field.one();
            for (c, p) in pivot_of_col.iter().enumerate() {
                if let Some(r) = p {
                    v[c] = m.get(*r, free).neg();
                }
            }
            basis.push(v);
        }
        basis
    }

    /// One solution of `Ax = b`, if any.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(self.rows, b.len());
        let mut aug = Mat::zeros(self.rows, self.cols + 1, self.field);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, b[r].clone());
        }
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // inconsistent
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = aug.get(r, self.cols).clone();
        }
        Some(x)
    }

    /// Whether `v` lies in the span of `basis` (all over this matrix's field).
    pub fn in_span(field: FieldSpec, basis: &[Vec<Scalar>], v: &[Scalar]) -> bool {
        if basis.is_empty() {
            return v.iter().all(Scalar::is_zero);
        }
        let n = v.len();
        let mut m = Mat::zeros(n, basis.len(), field);
        for (j, b) in basis.iter().enumerate() {
            assert_eq!(b.len(), n);
            for i in 0..n {
                m.set(i, j, b[i].clone());
            }
        }
        m.solve(v).is_some()
    }
}

pub fn vec_add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
}

pub fn vec_sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x.sub(y)).collect()
}

pub fn vec_scale(a: &[Scalar], c: &Scalar) -> Vec<Scalar> {
    a.iter().map(|x| x.mul(c)).collect()
}

pub fn vec_is_zero(a: &[Scalar]) -> bool {
    a.iter().all(Scalar::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qi(n: i64) -> Scalar {
        FieldSpec::Rationals.integer(n)
    }

    #[test]
    fn rref_and_nullspace() {
        let f = FieldSpec::Rationals;
        // x + y + z = 0 has a 2-dimensional solution space
        let m = Mat::from_rows(f, vec![vec![qi(1), qi(1), qi(1)]]);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(vec_is_zero(&m.apply(v)));
        }
    }

    #[test]
    fn solve_unique_and_inconsistent() {
        let f = FieldSpec::Rationals;
        let m = Mat::from_rows(f, vec![vec![qi(2), qi(0)], vec![qi(0), qi(3)]]);
        let x = m.solve(&[qi(4), qi(9)]).unwrap();
        assert_eq!(x, vec![qi(2), qi(3)]);
        let sing = Mat::from_rows(f, vec![vec![qi(1), qi(1)], vec![qi(1), qi(1)]]);
        assert!(sing.solve(&[qi(0), qi(1)]).is_none());
    }

    #[test]
    fn nullspace_over_prime_field() {
        let f = FieldSpec::prime_field(5).unwrap();
        let m = Mat::from_rows(
            f,
            vec![vec![f.integer(1), f.integer(2)], vec![f.integer(2), f.integer(4)]],
        );
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        assert!(vec_is_zero(&m.apply(&ns[0])));
    }

    #[test]
    fn span_membership() {
        let f = FieldSpec::Rationals;
        let basis = vec![vec![qi(1), qi(0), qi(1)], vec![qi(0), qi(1), qi(1)]];
        assert!(Mat::in_span(f, &basis, &[qi(2), qi(3), qi(5)]));
        assert!(!Mat::in_span(f, &basis, &[qi(0), qi(0), qi(1)]));
        assert!(Mat::in_span(f, &[], &[qi(0)]));
        assert!(!Mat::in_span(f, &[], &[qi(1)]));
    }
}

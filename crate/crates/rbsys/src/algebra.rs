//! Finite-dimensional associative algebras given by structure constants.
//!
//! An [`Algebra`] stores the sparse products `e_i e_j = sum_k c_{ij}^k e_k`
//! over one of the exact fields. Elements are plain coefficient vectors;
//! operators and morphisms are matrices acting on coefficient columns
//! (column `j` of an operator matrix is the image of `e_j`).
//!
//! Associativity is checked, never assumed: [`check_associative`] reports
//! the first violating basis triple.

use crate::linalg::{vec_add, vec_is_zero, Mat};
use crate::report::{counterexample, Report};
use crate::scalar::{FieldSpec, Scalar};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("dimension must be positive")]
    ZeroDim,
    #[error("{what}: index {index} out of range 1..={dim}")]
    IndexOutOfRange {
        what: String,
        index: usize,
        dim: usize,
    },
    #[error("{what}: expected {expected} entries, got {got}")]
    BadLength {
        what: String,
        expected: usize,
        got: usize,
    },
    #[error("{what}: coefficient lies in {found}, algebra is over {expected}")]
    FieldMismatch {
        what: String,
        expected: FieldSpec,
        found: FieldSpec,
    },
    #[error("algebras are over different fields ({0} vs {1})")]
    MixedFields(FieldSpec, FieldSpec),
    #[error("{0}")]
    Invalid(String),
}

/// An associative algebra presented by sparse structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    pub field: FieldSpec,
    pub dim: usize,
    pub basis_names: Vec<String>,
    mul: BTreeMap<(usize, usize), Vec<(usize, Scalar)>>,
    pub unit: Option<Vec<Scalar>>,
}

impl Algebra {
    /// Builds an algebra from raw parts, validating shapes, index ranges
    /// and coefficient fields. Associativity and the unit law are *not*
    /// validated here; run [`check_associative`] / [`check_unit_law`].
    pub fn new(
        field: FieldSpec,
        basis_names: Vec<String>,
        products: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
        unit: Option<Vec<Scalar>>,
    ) -> Result<Algebra, AlgebraError> {
        let dim = basis_names.len();
        if dim == 0 {
            return Err(AlgebraError::ZeroDim);
        }
        let mut mul: BTreeMap<(usize, usize), BTreeMap<usize, Scalar>> = BTreeMap::new();
        for (i, j, k, c) in products {
            for (what, idx) in [("mul row", i), ("mul column", j), ("mul target", k)] {
                if idx >= dim {
                    return Err(AlgebraError::IndexOutOfRange {
                        what: what.to_string(),
                        index: idx + 1,
                        dim,
                    });
                }
            }
            if c.field() != field {
                return Err(AlgebraError::FieldMismatch {
                    what: format!("structure constant c[{},{},{}]", i + 1, j + 1, k + 1),
                    expected: field,
                    found: c.field(),
                });
            }
            let slot = mul.entry((i, j)).or_default();
            let v = match slot.remove(&k) {
                Some(prev) => prev.add(&c),
                None => c,
            };
            if !v.is_zero() {
                slot.insert(k, v);
            }
        }
        let mul = mul
            .into_iter()
            .filter(|(_, terms)| !terms.is_empty())
            .map(|(ij, terms)| (ij, terms.into_iter().collect()))
            .collect();
        if let Some(u) = &unit {
            if u.len() != dim {
                return Err(AlgebraError::BadLength {
                    what: "unit vector".to_string(),
                    expected: dim,
                    got: u.len(),
                });
            }
            for c in u {
                if c.field() != field {
                    return Err(AlgebraError::FieldMismatch {
                        what: "unit coefficient".to_string(),
                        expected: field,
                        found: c.field(),
                    });
                }
            }
        }
        Ok(Algebra {
            field,
            dim,
            basis_names,
            mul,
            unit,
        })
    }

    pub fn is_unital(&self) -> bool {
        self.unit.is_some()
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        self.mul.get(&(i, j)).map_or(&[], Vec::as_slice)
    }

    /// Iterates all stored products in sorted order.
    pub fn products(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> {
        self.mul
            .iter()
            .flat_map(|(&(i, j), terms)| terms.iter().map(move |(k, c)| (i, j, *k, c)))
    }

    pub fn zero_elem(&self) -> Vec<Scalar> {
        vec![self.field.zero(); self.dim]
    }

    pub fn basis_elem(&self, i: usize) -> Vec<Scalar> {
        let mut v = self.zero_elem();
        v[i] = self.field.one();
        v
    }

    /// Product of basis element `e_i` with an element (left factor basis).
    pub fn mul_basis_elem(&self, i: usize, b: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.zero_elem();
        for (j, bj) in b.iter().enumerate() {
            if bj.is_zero() {
                continue;
            }
            for (k, c) in self.mul_basis(i, j) {
                out[*k] = out[*k].add(&c.mul(bj));
            }
        }
        out
    }

    pub fn mul_elem_basis(&self, a: &[Scalar], j: usize) -> Vec<Scalar> {
        let mut out = self.zero_elem();
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (k, c) in self.mul_basis(i, j) {
                out[*k] = out[*k].add(&c.mul(ai));
            }
        }
        out
    }

    pub fn mul_elems(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(a.len(), self.dim);
        assert_eq!(b.len(), self.dim);
        let mut out = self.zero_elem();
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let cij = ai.mul(bj);
                for (k, c) in self.mul_basis(i, j) {
                    out[*k] = out[*k].add(&c.mul(&cij));
                }
            }
        }
        out
    }

    /// The matrix of `b -> ab` on coefficient columns.
    pub fn left_mult_matrix(&self, a: &[Scalar]) -> Mat {
        let mut m = Mat::zeros(self.dim, self.dim, self.field);
        for j in 0..self.dim {
            let col = self.mul_elems(a, &self.basis_elem(j));
            for (i, v) in col.into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    /// The matrix of `a -> ab` on coefficient columns.
    pub fn right_mult_matrix(&self, b: &[Scalar]) -> Mat {
        let mut m = Mat::zeros(self.dim, self.dim, self.field);
        for j in 0..self.dim {
            let col = self.mul_elems(&self.basis_elem(j), b);
            for (i, v) in col.into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn format_elem(&self, v: &[Scalar]) -> String {
        let terms: Vec<String> = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                if c.is_one() {
                    self.basis_names[i].clone()
                } else {
                    format!("({})*{}", c, self.basis_names[i])
                }
            })
            .collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }
}

/// A linear endomorphism as a matrix on coefficient columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Operator {
    pub matrix: Mat,
}

impl Operator {
    pub fn new(matrix: Mat) -> Operator {
        assert_eq!(matrix.rows, matrix.cols, "operator matrix must be square");
        Operator { matrix }
    }

    pub fn zero(dim: usize, field: FieldSpec) -> Operator {
        Operator::new(Mat::zeros(dim, dim, field))
    }

    pub fn identity(dim: usize, field: FieldSpec) -> Operator {
        Operator::new(Mat::identity(dim, field))
    }

    /// Builds the operator from the images of the basis vectors.
    pub fn from_images(field: FieldSpec, images: Vec<Vec<Scalar>>) -> Operator {
        let dim = images.len();
        let mut m = Mat::zeros(dim, dim, field);
        for (j, img) in images.iter().enumerate() {
            assert_eq!(img.len(), dim);
            for (i, c) in img.iter().enumerate() {
                m.set(i, j, c.clone());
            }
        }
        Operator::new(m)
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.matrix.apply(v)
    }

    pub fn apply_basis(&self, j: usize) -> Vec<Scalar> {
        self.matrix.col(j)
    }

    /// `self` after `other`: `(self ∘ other)(v) = self(other(v))`.
    pub fn compose(&self, other: &Operator) -> Operator {
        Operator::new(self.matrix.mul(&other.matrix))
    }

    pub fn add(&self, other: &Operator) -> Operator {
        Operator::new(self.matrix.add(&other.matrix))
    }

    pub fn scale(&self, c: &Scalar) -> Operator {
        Operator::new(self.matrix.scale(c))
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }
}

/// Associativity on all basis triples; fails with the first violating
/// `(i, j, k)` and both sides.
pub fn check_associative(alg: &Algebra) -> Report {
    for i in 0..alg.dim {
        for j in 0..alg.dim {
            let ij = alg.mul_elems(&alg.basis_elem(i), &alg.basis_elem(j));
            for k in 0..alg.dim {
                let lhs = alg.mul_elem_basis(&ij, k);
                let jk = alg.mul_elems(&alg.basis_elem(j), &alg.basis_elem(k));
                let rhs = alg.mul_basis_elem(i, &jk);
                if lhs != rhs {
                    return Report::fail(
                        "associative",
                        counterexample(
                            &[i, j, k],
                            alg.format_elem(&lhs),
                            alg.format_elem(&rhs),
                        ),
                    );
                }
            }
        }
    }
    Report::pass("associative")
}

/// Unit law `1*e_i = e_i*1 = e_i` for the declared unit vector.
pub fn check_unit_law(alg: &Algebra) -> Report {
    let Some(unit) = &alg.unit else {
        return Report::error("unit-law", "algebra declares no unit");
    };
    for i in 0..alg.dim {
        let e = alg.basis_elem(i);
        let left = alg.mul_elems(unit, &e);
        let right = alg.mul_elems(&e, unit);
        if left != e || right != e {
            return Report::fail(
                "unit-law",
                counterexample(&[i], alg.format_elem(&left), alg.format_elem(&right)),
            );
        }
    }
    Report::pass("unit-law")
}

/// Bases of the left and right annihilators `{b : bA = 0}` and
/// `{b : Ab = 0}`, via exact nullspaces of stacked multiplication matrices.
pub fn annihilators(alg: &Algebra) -> (Vec<Vec<Scalar>>, Vec<Vec<Scalar>>) {
    let n = alg.dim;
    // rows indexed by (j, k): sum_i x_i c_{i,j}^k = 0  (left annihilator)
    let mut left = Mat::zeros(n * n, n, alg.field);
    let mut right = Mat::zeros(n * n, n, alg.field);
    for i in 0..n {
        for j in 0..n {
            for (k, c) in alg.mul_basis(i, j) {
                // e_i e_j = sum c e_k: contributes to left-annihilator rows (j,k) col i
                let l = left.get(j * n + k, i).add(c);
                left.set(j * n + k, i, l);
                // and to right-annihilator rows (i,k) col j
                let r = right.get(i * n + k, j).add(c);
                right.set(i * n + k, j, r);
            }
        }
    }
    (left.nullspace(), right.nullspace())
}

pub fn is_nondegenerate(alg: &Algebra) -> bool {
    let (l, r) = annihilators(alg);
    l.is_empty() && r.is_empty()
}

/// The unital extension `K (+) A`: adjoins a unit as basis element 0 and
/// shifts the old basis up by one.
pub fn unital_extension(alg: &Algebra) -> Algebra {
    let mut names = Vec::with_capacity(alg.dim + 1);
    let mut unit_name = "1".to_string();
    while alg.basis_names.contains(&unit_name) {
        unit_name.push('\'');
    }
    names.push(unit_name);
    names.extend(alg.basis_names.iter().cloned());
    let one = alg.field.one();
    let mut products: Vec<(usize, usize, usize, Scalar)> = Vec::new();
    for i in 0..=alg.dim {
        products.push((0, i, i, one.clone()));
        if i > 0 {
            products.push((i, 0, i, one.clone()));
        }
    }
    for (i, j, k, c) in alg.products() {
        products.push((i + 1, j + 1, k + 1, c.clone()));
    }
    let mut unit = vec![alg.field.zero(); alg.dim + 1];
    unit[0] = one;
    Algebra::new(alg.field, names, products, Some(unit)).expect("extension is well-formed")
}

/// Lifts an element of `A` into `K (+) A`.
pub fn lift_elem(ext_dim: usize, v: &[Scalar], field: FieldSpec) -> Vec<Scalar> {
    assert_eq!(ext_dim, v.len() + 1);
    let mut out = vec![field.zero(); ext_dim];
    out[1..].clone_from_slice(v);
    out
}

/// Multiplicativity `f(e_i e_j) = f(e_i) f(e_j)` on all basis pairs.
/// `f` is a (target dim) x (source dim) matrix on coefficient columns.
pub fn check_morphism(source: &Algebra, target: &Algebra, f: &Mat) -> Report {
    if source.field != target.field {
        return Report::error(
            "morphism",
            AlgebraError::MixedFields(source.field, target.field).to_string(),
        );
    }
    if f.rows != target.dim || f.cols != source.dim {
        return Report::error(
            "morphism",
            format!(
                "matrix is {}x{}, expected {}x{}",
                f.rows, f.cols, target.dim, source.dim
            ),
        );
    }
    for i in 0..source.dim {
        let fi = f.col(i);
        for j in 0..source.dim {
            let fj = f.col(j);
            let prod = source.mul_elems(&source.basis_elem(i), &source.basis_elem(j));
            let lhs = f.apply(&prod);
            let rhs = target.mul_elems(&fi, &fj);
            if lhs != rhs {
                return Report::fail(
                    "morphism",
                    counterexample(&[i, j], target.format_elem(&lhs), target.format_elem(&rhs)),
                );
            }
        }
    }
    Report::pass("morphism")
}

/// Multiplicativity of an endomorphism (morphism with source = target).
pub fn check_endomorphism(alg: &Algebra, sigma: &Operator) -> Report {
    check_morphism(alg, alg, &sigma.matrix)
}

// ---- builtin algebras ----

/// `M_n(K)` with basis `e11, e12, ..., enn` in row-major order.
pub fn matrix_algebra(n: usize, field: FieldSpec) -> Algebra {
    assert!(n > 0, "matrix algebra needs n >= 1");
    let idx = |i: usize, j: usize| i * n + j;
    let mut names = Vec::with_capacity(n * n);
    for i in 1..=n {
        for j in 1..=n {
            names.push(format!("e{i}{j}"));
        }
    }
    let one = field.one();
    let mut products = Vec::new();
    // e_{ij} e_{kl} = delta_{jk} e_{il}
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                products.push((idx(i, j), idx(j, l), idx(i, l), one.clone()));
            }
        }
    }
    let mut unit = vec![field.zero(); n * n];
    for i in 0..n {
        unit[idx(i, i)] = one.clone();
    }
    Algebra::new(field, names, products, Some(unit)).expect("matrix algebra is well-formed")
}

/// Block-diagonal direct sum. Basis of `A` first, then basis of `B`;
/// names are prefixed when they would collide.
pub fn direct_sum(a: &Algebra, b: &Algebra) -> Result<Algebra, AlgebraError> {
    if a.field != b.field {
        return Err(AlgebraError::MixedFields(a.field, b.field));
    }
    let collide = a.basis_names.iter().any(|n| b.basis_names.contains(n));
    let mut names = Vec::with_capacity(a.dim + b.dim);
    for n in &a.basis_names {
        names.push(if collide { format!("a.{n}") } else { n.clone() });
    }
    for n in &b.basis_names {
        names.push(if collide { format!("b.{n}") } else { n.clone() });
    }
    let mut products: Vec<(usize, usize, usize, Scalar)> = Vec::new();
    for (i, j, k, c) in a.products() {
        products.push((i, j, k, c.clone()));
    }
    for (i, j, k, c) in b.products() {
        products.push((i + a.dim, j + a.dim, k + a.dim, c.clone()));
    }
    let unit = match (&a.unit, &b.unit) {
        (Some(ua), Some(ub)) => {
            let mut u = ua.clone();
            u.extend(ub.iter().cloned());
            Some(u)
        }
        _ => None,
    };
    Algebra::new(a.field, names, products, unit)
}

/// `M_m (+) M_n` embedded block-diagonally in `M_{m+n}`, with the global
/// matrix-unit names `e{i}{j}`.
pub fn block_matrix_algebra(m: usize, n: usize, field: FieldSpec) -> Algebra {
    assert!(m > 0 && n > 0);
    let mut names = Vec::new();
    let mut index = BTreeMap::new();
    for i in 1..=m {
        for j in 1..=m {
            index.insert((i, j), names.len());
            names.push(format!("e{i}{j}"));
        }
    }
    for i in m + 1..=m + n {
        for j in m + 1..=m + n {
            index.insert((i, j), names.len());
            names.push(format!("e{i}{j}"));
        }
    }
    let one = field.one();
    let mut products = Vec::new();
    let blocks: [(usize, usize); 2] = [(1, m), (m + 1, m + n)];
    for &(lo, hi) in &blocks {
        for i in lo..=hi {
            for j in lo..=hi {
                for l in lo..=hi {
                    products.push((index[&(i, j)], index[&(j, l)], index[&(i, l)], one.clone()));
                }
            }
        }
    }
    let mut unit = vec![field.zero(); names.len()];
    for &(lo, hi) in &blocks {
        for i in lo..=hi {
            unit[index[&(i, i)]] = one.clone();
        }
    }
    Algebra::new(field, names, products, Some(unit)).expect("block algebra is well-formed")
}

/// Index of the global matrix unit `e{i}{j}` in [`block_matrix_algebra`].
pub fn block_matrix_index(m: usize, n: usize, i: usize, j: usize) -> usize {
    if i <= m && j <= m {
        (i - 1) * m + (j - 1)
    } else {
        assert!(i > m && j > m && i <= m + n && j <= m + n);
        m * m + (i - m - 1) * n + (j - m - 1)
    }
}

/// `K[zeta]/<zeta^n>`, unital, basis `1, zeta, ..., zeta^{n-1}`.
pub fn truncated_poly(n: usize, field: FieldSpec) -> Algebra {
    assert!(n > 0, "truncated polynomial algebra needs n >= 1");
    let names = (0..n)
        .map(|k| match k {
            0 => "1".to_string(),
            1 => "zeta".to_string(),
            _ => format!("zeta^{k}"),
        })
        .collect();
    let one = field.one();
    let mut products = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i + j < n {
                products.push((i, j, i + j, one.clone()));
            }
        }
    }
    let mut unit = vec![field.zero(); n];
    unit[0] = one;
    Algebra::new(field, names, products, Some(unit)).expect("truncated poly is well-formed")
}

pub fn dual_numbers(field: FieldSpec) -> Algebra {
    truncated_poly(2, field)
}

/// `K[x,y]/<xy, x^{N+1}, y^{N+1}>`: the coordinate ring of two crossed
/// lines, truncated. Basis `1, x..x^N, y..y^N`.
pub fn crossed_lines(n: usize, field: FieldSpec) -> Algebra {
    assert!(n > 0);
    let mut names = vec!["1".to_string()];
    for k in 1..=n {
        names.push(if k == 1 { "x".to_string() } else { format!("x^{k}") });
    }
    for k in 1..=n {
        names.push(if k == 1 { "y".to_string() } else { format!("y^{k}") });
    }
    let dim = 2 * n + 1;
    let xi = |k: usize| k; // x^k at index k (k >= 1), 1 at 0
    let yi = |k: usize| n + k;
    let one = field.one();
    let mut products = Vec::new();
    for i in 0..dim {
        products.push((0, i, i, one.clone()));
        if i > 0 {
            products.push((i, 0, i, one.clone()));
        }
    }
    for a in 1..=n {
        for b in 1..=n {
            if a + b <= n {
                products.push((xi(a), xi(b), xi(a + b), one.clone()));
                products.push((yi(a), yi(b), yi(a + b), one.clone()));
            }
            // x^a y^b = 0
        }
    }
    let mut unit = vec![field.zero(); dim];
    unit[0] = one;
    Algebra::new(field, names, products, Some(unit)).expect("crossed lines is well-formed")
}

/// `K[a,e]/<e^2 - e, ae, a^{N+1}>` (commutative), basis `1, e, a, ..., a^N`.
pub fn counital_example(n: usize, field: FieldSpec) -> Algebra {
    assert!(n > 0);
    let mut names = vec!["1".to_string(), "e".to_string()];
    for k in 1..=n {
        names.push(if k == 1 { "a".to_string() } else { format!("a^{k}") });
    }
    let dim = n + 2;
    let ai = |k: usize| 1 + k; // a^k at index k+1 (k >= 1); e at 1; 1 at 0
    let one = field.one();
    let mut products = Vec::new();
    for i in 0..dim {
        products.push((0, i, i, one.clone()));
        if i > 0 {
            products.push((i, 0, i, one.clone()));
        }
    }
    products.push((1, 1, 1, one.clone())); // e*e = e
    for a in 1..=n {
        for b in 1..=n {
            if a + b <= n {
                products.push((ai(a), ai(b), ai(a + b), one.clone()));
            }
        }
        // a^k e = e a^k = 0
    }
    let mut unit = vec![field.zero(); dim];
    unit[0] = one;
    Algebra::new(field, names, products, Some(unit)).expect("counital example is well-formed")
}

/// The n-dimensional algebra with all products zero (non-unital).
pub fn zero_algebra(n: usize, field: FieldSpec) -> Algebra {
    assert!(n > 0);
    let names = (1..=n).map(|i| format!("e{i}")).collect();
    Algebra::new(field, names, std::iter::empty(), None).expect("zero algebra is well-formed")
}

/// Right multiplication by an element as an operator (`a -> a r`).
pub fn right_mult_operator(alg: &Algebra, r: &[Scalar]) -> Operator {
    Operator::new(alg.right_mult_matrix(r))
}

/// Left multiplication by an element as an operator (`a -> s a`).
pub fn left_mult_operator(alg: &Algebra, s: &[Scalar]) -> Operator {
    Operator::new(alg.left_mult_matrix(s))
}

/// Scans another algebra's element for the unit property without a
/// declared unit; used when verifying constructions.
pub fn acts_as_unit(alg: &Algebra, u: &[Scalar]) -> bool {
    (0..alg.dim).all(|i| {
        let e = alg.basis_elem(i);
        alg.mul_elems(u, &e) == e && alg.mul_elems(&e, u) == e
    })
}

/// Element idempotency `v*v = v`.
pub fn is_idempotent(alg: &Algebra, v: &[Scalar]) -> bool {
    alg.mul_elems(v, v) == v
}

pub fn elem_add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    vec_add(a, b)
}

pub fn elem_is_zero(a: &[Scalar]) -> bool {
    vec_is_zero(a)
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn matrix_algebra_products() {
        let m2 = matrix_algebra(2, Q);
        assert_eq!(m2.dim, 4);
        assert_eq!(m2.basis_names, vec!["e11", "e12", "e21", "e22"]);
        // e12 * e21 = e11
        let p = m2.mul_elems(&m2.basis_elem(1), &m2.basis_elem(2));
        assert_eq!(p, m2.basis_elem(0));
        assert!(check_associative(&m2).ok());
        assert!(check_unit_law(&m2).ok());
    }

    #[test]
    fn direct_sum_blocks_are_orthogonal() {
        let m2 = matrix_algebra(2, Q);
        let s = direct_sum(&m2, &m2).unwrap();
        assert_eq!(s.dim, 8);
        for i in 0..4 {
            for j in 4..8 {
                assert!(elem_is_zero(&s.mul_elems(&s.basis_elem(i), &s.basis_elem(j))));
                assert!(elem_is_zero(&s.mul_elems(&s.basis_elem(j), &s.basis_elem(i))));
            }
        }
        assert!(check_associative(&s).ok());
        assert!(check_unit_law(&s).ok());
    }

    #[test]
    fn block_matrix_algebra_matches_paper_indexing() {
        let a = block_matrix_algebra(2, 2, Q);
        assert_eq!(a.dim, 8);
        assert_eq!(a.basis_names[block_matrix_index(2, 2, 3, 4)], "e34");
        // e34 * e43 = e33
        let p = a.mul_elems(
            &a.basis_elem(block_matrix_index(2, 2, 3, 4)),
            &a.basis_elem(block_matrix_index(2, 2, 4, 3)),
        );
        assert_eq!(p, a.basis_elem(block_matrix_index(2, 2, 3, 3)));
        assert!(check_associative(&a).ok());
    }

    #[test]
    fn truncated_poly_is_unital_and_nilpotent() {
        let a = truncated_poly(4, Q);
        assert!(check_associative(&a).ok());
        assert!(check_unit_law(&a).ok());
        // zeta^2 * zeta^2 = 0
        assert!(elem_is_zero(&a.mul_elems(&a.basis_elem(2), &a.basis_elem(2))));
    }

    #[test]
    fn counital_example_relations() {
        let a = counital_example(3, Q);
        assert_eq!(a.dim, 5);
        // a*e = 0, e*e = e
        assert!(elem_is_zero(&a.mul_elems(&a.basis_elem(2), &a.basis_elem(1))));
        assert_eq!(a.mul_elems(&a.basis_elem(1), &a.basis_elem(1)), a.basis_elem(1));
        assert!(check_associative(&a).ok());
        assert!(check_unit_law(&a).ok());
    }

    #[test]
    fn crossed_lines_relations() {
        let a = crossed_lines(3, Q);
        assert_eq!(a.dim, 7);
        assert!(check_associative(&a).ok());
        // x*y = 0
        assert!(elem_is_zero(&a.mul_elems(&a.basis_elem(1), &a.basis_elem(4))));
        // x * x^2 = x^3
        assert_eq!(a.mul_elems(&a.basis_elem(1), &a.basis_elem(2)), a.basis_elem(3));
    }

    #[test]
    fn associativity_counterexample_is_reported() {
        // e1 e1 = e2, e2 e1 = e1, everything else zero: (e1e1)e1 = e1 but e1(e1e1) = 0
        let one = Q.one();
        let alg = Algebra::new(
            Q,
            vec!["e1".into(), "e2".into()],
            vec![(0, 0, 1, one.clone()), (1, 0, 0, one)],
            None,
        )
        .unwrap();
        let r = check_associative(&alg);
        assert!(!r.ok());
        let cx = r.counterexample.unwrap();
        assert_eq!(cx.indices, vec![1, 1, 1]);
        assert_eq!(cx.lhs, "e1");
        assert_eq!(cx.rhs, "0");
    }

    #[test]
    fn annihilators_examples() {
        let m2 = matrix_algebra(2, Q);
        let (l, r) = annihilators(&m2);
        assert!(l.is_empty() && r.is_empty());

        let z = zero_algebra(1, Q);
        let (l, r) = annihilators(&z);
        assert_eq!(l.len(), 1);
        assert_eq!(r.len(), 1);

        let tp = truncated_poly(4, Q);
        assert!(is_nondegenerate(&tp));
    }

    #[test]
    fn unital_extension_properties() {
        let z = zero_algebra(2, Q);
        let ext = unital_extension(&z);
        assert_eq!(ext.dim, 3);
        assert!(check_associative(&ext).ok());
        assert!(check_unit_law(&ext).ok());
        assert!(is_nondegenerate(&ext));
        // (1 (+) 0)(0 (+) a) = 0 (+) a
        let a = lift_elem(3, &z.basis_elem(0), Q);
        let u = ext.unit.clone().unwrap();
        assert_eq!(ext.mul_elems(&u, &a), a);

        // extension of a unital algebra holds two distinct idempotents
        let tp = truncated_poly(2, Q);
        let ext2 = unital_extension(&tp);
        let adjoined = ext2.unit.clone().unwrap();
        let old_unit = lift_elem(3, &tp.basis_elem(0), Q);
        assert!(is_idempotent(&ext2, &adjoined));
        assert!(is_idempotent(&ext2, &old_unit));
        assert_ne!(adjoined, old_unit);
    }

    #[test]
    fn morphism_examples() {
        let m2 = matrix_algebra(2, Q);
        let id = Mat::identity(4, Q);
        assert!(check_morphism(&m2, &m2, &id).ok());

        // projection of M2 (+) M2 onto the first block
        let s = direct_sum(&m2, &m2).unwrap();
        let mut proj = Mat::zeros(4, 8, Q);
        for i in 0..4 {
            proj.set(i, i, Q.one());
        }
        assert!(check_morphism(&s, &m2, &proj).ok());

        // transpose is an anti-homomorphism, not a homomorphism
        let mut transpose = Mat::zeros(4, 4, Q);
        transpose.set(0, 0, Q.one());
        transpose.set(2, 1, Q.one());
        transpose.set(1, 2, Q.one());
        transpose.set(3, 3, Q.one());
        let r = check_morphism(&m2, &m2, &transpose);
        assert!(!r.ok());
        // first failing pair in scan order: f(e11 e12) = e21 but f(e11) f(e12) = 0
        assert_eq!(r.counterexample.unwrap().indices, vec![1, 2]);
    }
}

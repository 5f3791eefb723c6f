//! Arithmetic in `A (x) A` and `A (x) A (x) A`.
//!
//! Tensors are sparse maps from index tuples to scalars with sorted keys,
//! so iteration order (and every report derived from it) is deterministic.
//! Leg embeddings `t -> t_{12}, t_{13}, t_{23}` need a unit; non-unital
//! algebras are lifted to `K (+) A` by [`LegArena`], which records the lift.

use crate::algebra::{lift_elem, unital_extension, Algebra, Operator};
use crate::linalg::Mat;
use crate::scalar::{FieldSpec, Scalar};
use std::collections::BTreeMap;
use std::fmt;

/// An element of `A (x) A` as a sparse coefficient map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor2 {
    pub dim: usize,
    pub field: FieldSpec,
    terms: BTreeMap<(usize, usize), Scalar>,
}

/// An element of `A (x) A (x) A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor3 {
    pub dim: usize,
    pub field: FieldSpec,
    terms: BTreeMap<(usize, usize, usize), Scalar>,
}

impl Tensor2 {
    pub fn zero(dim: usize, field: FieldSpec) -> Self {
        Tensor2 {
            dim,
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms(
        dim: usize,
        field: FieldSpec,
        terms: impl IntoIterator<Item = ((usize, usize), Scalar)>,
    ) -> Self {
        let mut t = Tensor2::zero(dim, field);
        for (ij, c) in terms {
            t.add_term(ij, c);
        }
        t
    }

    pub fn basis(dim: usize, field: FieldSpec, i: usize, j: usize) -> Self {
        Tensor2::from_terms(dim, field, [((i, j), field.one())])
    }

    /// `a (x) b` for coefficient vectors.
    pub fn outer(field: FieldSpec, a: &[Scalar], b: &[Scalar]) -> Self {
        let mut t = Tensor2::zero(a.len(), field);
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                t.add_term((i, j), ai.mul(bj));
            }
        }
        t
    }

    pub fn add_term(&mut self, ij: (usize, usize), c: Scalar) {
        assert!(ij.0 < self.dim && ij.1 < self.dim, "tensor index out of range");
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&ij) {
            Some(prev) => {
                let v = prev.add(&c);
                if !v.is_zero() {
                    self.terms.insert(ij, v);
                }
            }
            None => {
                self.terms.insert(ij, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(usize, usize), &Scalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Tensor2) -> Tensor2 {
        assert_eq!(self.dim, other.dim);
        let mut out = self.clone();
        for (ij, c) in &other.terms {
            out.add_term(*ij, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Tensor2) -> Tensor2 {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Tensor2 {
        Tensor2 {
            dim: self.dim,
            field: self.field,
            terms: self.terms.iter().map(|(ij, c)| (*ij, c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Tensor2 {
        let mut out = Tensor2::zero(self.dim, self.field);
        for (ij, v) in &self.terms {
            out.add_term(*ij, v.mul(c));
        }
        out
    }

    /// Componentwise product `(a(x)b)(a'(x)b') = aa' (x) bb'`.
    pub fn mul(&self, other: &Tensor2, alg: &Algebra) -> Tensor2 {
        assert_eq!(alg.dim, self.dim);
        assert_eq!(alg.dim, other.dim);
        let mut out = Tensor2::zero(self.dim, self.field);
        for ((i, j), c) in &self.terms {
            for ((k, l), d) in &other.terms {
                let cd = c.mul(d);
                for (p, cp) in alg.mul_basis(*i, *k) {
                    for (q, cq) in alg.mul_basis(*j, *l) {
                        out.add_term((*p, *q), cd.mul(cp).mul(cq));
                    }
                }
            }
        }
        out
    }

    /// Left bimodule action `a . t` (multiplies the first leg).
    pub fn act_left(&self, a: &[Scalar], alg: &Algebra) -> Tensor2 {
        let mut out = Tensor2::zero(self.dim, self.field);
        for ((i, j), c) in &self.terms {
            let ai = alg.mul_elem_basis(a, *i);
            for (p, cp) in ai.iter().enumerate() {
                if !cp.is_zero() {
                    out.add_term((p, *j), c.mul(cp));
                }
            }
        }
        out
    }

    /// Right bimodule action `t . b` (multiplies the second leg).
    pub fn act_right(&self, b: &[Scalar], alg: &Algebra) -> Tensor2 {
        let mut out = Tensor2::zero(self.dim, self.field);
        for ((i, j), c) in &self.terms {
            let jb = alg.mul_basis_elem(*j, b);
            for (q, cq) in jb.iter().enumerate() {
                if !cq.is_zero() {
                    out.add_term((*i, q), c.mul(cq));
                }
            }
        }
        out
    }

    /// `sum_{ij} c_{ij} e_i a e_j`.
    pub fn sandwich(&self, a: &[Scalar], alg: &Algebra) -> Vec<Scalar> {
        assert_eq!(alg.dim, self.dim);
        let mut out = alg.zero_elem();
        for ((i, j), c) in &self.terms {
            let left = alg.mul_basis_elem(*i, a);
            let full = alg.mul_elem_basis(&left, *j);
            for (k, v) in full.into_iter().enumerate() {
                if !v.is_zero() {
                    out[k] = out[k].add(&v.mul(c));
                }
            }
        }
        out
    }

    /// Re-indexes into the unital extension (basis shift by one).
    pub fn lift(&self, ext_dim: usize) -> Tensor2 {
        assert_eq!(ext_dim, self.dim + 1);
        Tensor2 {
            dim: ext_dim,
            field: self.field,
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| ((i + 1, j + 1), c.clone()))
                .collect(),
        }
    }

    pub fn describe(&self, alg: &Algebra) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|(&(i, j), c)| {
                let pair = format!("{}(x){}", alg.basis_names[i], alg.basis_names[j]);
                if c.is_one() {
                    pair
                } else {
                    format!("({c})*{pair}")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Display for Tensor2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let s = self
            .terms
            .iter()
            .map(|(&(i, j), c)| format!("({c})*[{},{}]", i + 1, j + 1))
            .collect::<Vec<_>>()
            .join(" + ");
        write!(f, "{s}")
    }
}

impl Tensor3 {
    pub fn zero(dim: usize, field: FieldSpec) -> Self {
        Tensor3 {
            dim,
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms(
        dim: usize,
        field: FieldSpec,
        terms: impl IntoIterator<Item = ((usize, usize, usize), Scalar)>,
    ) -> Self {
        let mut t = Tensor3::zero(dim, field);
        for (ijk, c) in terms {
            t.add_term(ijk, c);
        }
        t
    }

    pub fn basis(dim: usize, field: FieldSpec, i: usize, j: usize, k: usize) -> Self {
        Tensor3::from_terms(dim, field, [((i, j, k), field.one())])
    }

    pub fn add_term(&mut self, ijk: (usize, usize, usize), c: Scalar) {
        assert!(
            ijk.0 < self.dim && ijk.1 < self.dim && ijk.2 < self.dim,
            "tensor index out of range"
        );
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&ijk) {
            Some(prev) => {
                let v = prev.add(&c);
                if !v.is_zero() {
                    self.terms.insert(ijk, v);
                }
            }
            None => {
                self.terms.insert(ijk, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(usize, usize, usize), &Scalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Tensor3) -> Tensor3 {
        assert_eq!(self.dim, other.dim);
        let mut out = self.clone();
        for (ijk, c) in &other.terms {
            out.add_term(*ijk, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Tensor3) -> Tensor3 {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Tensor3 {
        Tensor3 {
            dim: self.dim,
            field: self.field,
            terms: self.terms.iter().map(|(ijk, c)| (*ijk, c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Tensor3 {
        let mut out = Tensor3::zero(self.dim, self.field);
        for (ijk, v) in &self.terms {
            out.add_term(*ijk, v.mul(c));
        }
        out
    }

    /// Componentwise product in `A (x) A (x) A`.
    pub fn mul(&self, other: &Tensor3, alg: &Algebra) -> Tensor3 {
        assert_eq!(alg.dim, self.dim);
        assert_eq!(alg.dim, other.dim);
        let mut out = Tensor3::zero(self.dim, self.field);
        for ((i1, i2, i3), c) in &self.terms {
            for ((j1, j2, j3), d) in &other.terms {
                let cd = c.mul(d);
                for (p, cp) in alg.mul_basis(*i1, *j1) {
                    for (q, cq) in alg.mul_basis(*i2, *j2) {
                        let cpq = cd.mul(cp).mul(cq);
                        for (r, cr) in alg.mul_basis(*i3, *j3) {
                            out.add_term((*p, *q, *r), cpq.mul(cr));
                        }
                    }
                }
            }
        }
        out
    }

    /// Left action on the first leg.
    pub fn act_left(&self, a: &[Scalar], alg: &Algebra) -> Tensor3 {
        let mut out = Tensor3::zero(self.dim, self.field);
        for ((i, j, k), c) in &self.terms {
            let ai = alg.mul_elem_basis(a, *i);
            for (p, cp) in ai.iter().enumerate() {
                if !cp.is_zero() {
                    out.add_term((p, *j, *k), c.mul(cp));
                }
            }
        }
        out
    }

    /// Right action on the third leg.
    pub fn act_right(&self, b: &[Scalar], alg: &Algebra) -> Tensor3 {
        let mut out = Tensor3::zero(self.dim, self.field);
        for ((i, j, k), c) in &self.terms {
            let kb = alg.mul_basis_elem(*k, b);
            for (q, cq) in kb.iter().enumerate() {
                if !cq.is_zero() {
                    out.add_term((*i, *j, q), c.mul(cq));
                }
            }
        }
        out
    }

    /// Multiplies a pair of adjacent legs with the algebra product.
    /// `Front` sends `a(x)b(x)c` to `ab(x)c`; `Back` to `a(x)bc`.
    pub fn mu_legs(&self, side: LegPair, alg: &Algebra) -> Tensor2 {
        let mut out = Tensor2::zero(self.dim, self.field);
        for ((i, j, k), c) in &self.terms {
            match side {
                LegPair::Front => {
                    for (p, cp) in alg.mul_basis(*i, *j) {
                        out.add_term((*p, *k), c.mul(cp));
                    }
                }
                LegPair::Back => {
                    for (q, cq) in alg.mul_basis(*j, *k) {
                        out.add_term((*i, *q), c.mul(cq));
                    }
                }
            }
        }
        out
    }

    pub fn lift(&self, ext_dim: usize) -> Tensor3 {
        assert_eq!(ext_dim, self.dim + 1);
        Tensor3 {
            dim: ext_dim,
            field: self.field,
            terms: self
                .terms
                .iter()
                .map(|(&(i, j, k), c)| ((i + 1, j + 1, k + 1), c.clone()))
                .collect(),
        }
    }

    pub fn describe(&self, alg: &Algebra) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|(&(i, j, k), c)| {
                let trip = format!(
                    "{}(x){}(x){}",
                    alg.basis_names[i], alg.basis_names[j], alg.basis_names[k]
                );
                if c.is_one() {
                    trip
                } else {
                    format!("({c})*{trip}")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Which pair of legs an operation touches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LegPair {
    /// Legs 1 and 2.
    Front,
    /// Legs 2 and 3.
    Back,
}

/// Placement of a 2-tensor inside the triple tensor product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Placement {
    Legs12,
    Legs13,
    Legs23,
}

/// Embeds `t` into the named legs, with the unit in the remaining leg.
/// Panics when the algebra has no unit; use [`LegArena`] to lift first.
pub fn leg_embed(t: &Tensor2, placement: Placement, alg: &Algebra) -> Tensor3 {
    let unit = alg
        .unit
        .as_ref()
        .expect("leg embedding needs a unital algebra");
    let mut out = Tensor3::zero(alg.dim, alg.field);
    for ((i, j), c) in &t.terms {
        for (u, cu) in unit.iter().enumerate() {
            if cu.is_zero() {
                continue;
            }
            let (ijk, coeff) = match placement {
                Placement::Legs12 => ((*i, *j, u), c.mul(cu)),
                Placement::Legs13 => ((*i, u, *j), c.mul(cu)),
                Placement::Legs23 => ((u, *i, *j), c.mul(cu)),
            };
            out.add_term(ijk, coeff);
        }
    }
    out
}

/// Working space for leg computations: the algebra itself when unital,
/// otherwise its unital extension with all tensors lifted.
pub struct LegArena<'a> {
    base: &'a Algebra,
    ext: Option<Algebra>,
}

impl<'a> LegArena<'a> {
    pub fn new(alg: &'a Algebra) -> Self {
        let ext = if alg.is_unital() {
            None
        } else {
            Some(unital_extension(alg))
        };
        LegArena { base: alg, ext }
    }

    /// Forces the extension even for a unital algebra. The leg products
    /// agree with the native computation; tests rely on that agreement.
    pub fn forced_extension(alg: &'a Algebra) -> Self {
        LegArena {
            base: alg,
            ext: Some(unital_extension(alg)),
        }
    }

    pub fn lifted(&self) -> bool {
        self.ext.is_some()
    }

    /// The algebra all leg tensors live over.
    pub fn working(&self) -> &Algebra {
        self.ext.as_ref().unwrap_or(self.base)
    }

    pub fn lift2(&self, t: &Tensor2) -> Tensor2 {
        match &self.ext {
            None => t.clone(),
            Some(ext) => t.lift(ext.dim),
        }
    }

    pub fn lift_elem(&self, v: &[Scalar]) -> Vec<Scalar> {
        match &self.ext {
            None => v.to_vec(),
            Some(ext) => lift_elem(ext.dim, v, self.base.field),
        }
    }

    /// Embeds an (unlifted) 2-tensor into the named legs.
    pub fn embed(&self, t: &Tensor2, placement: Placement) -> Tensor3 {
        leg_embed(&self.lift2(t), placement, self.working())
    }

    pub fn mul(&self, x: &Tensor3, y: &Tensor3) -> Tensor3 {
        x.mul(y, self.working())
    }
}

/// A linear map `A -> A (x) A` given by the images of the basis vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorMap {
    pub dim: usize,
    pub field: FieldSpec,
    pub images: Vec<Tensor2>,
}

impl TensorMap {
    pub fn new(field: FieldSpec, images: Vec<Tensor2>) -> TensorMap {
        let dim = images.len();
        assert!(images.iter().all(|t| t.dim == dim));
        TensorMap { dim, field, images }
    }

    pub fn zero(dim: usize, field: FieldSpec) -> TensorMap {
        TensorMap::new(field, vec![Tensor2::zero(dim, field); dim])
    }

    pub fn apply(&self, v: &[Scalar]) -> Tensor2 {
        assert_eq!(v.len(), self.dim);
        let mut out = Tensor2::zero(self.dim, self.field);
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            out = out.add(&self.images[i].scale(c));
        }
        out
    }

    pub fn apply_basis(&self, i: usize) -> &Tensor2 {
        &self.images[i]
    }

    pub fn add(&self, other: &TensorMap) -> TensorMap {
        assert_eq!(self.dim, other.dim);
        TensorMap::new(
            self.field,
            self.images
                .iter()
                .zip(&other.images)
                .map(|(a, b)| a.add(b))
                .collect(),
        )
    }

    pub fn sub(&self, other: &TensorMap) -> TensorMap {
        assert_eq!(self.dim, other.dim);
        TensorMap::new(
            self.field,
            self.images
                .iter()
                .zip(&other.images)
                .map(|(a, b)| a.sub(b))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(Tensor2::is_zero)
    }
}

/// Applies a tensor map to one leg of a 2-tensor: leg 1 gives
/// `(m (x) id)(t)` with the image occupying legs 1,2; leg 2 gives
/// `(id (x) m)(t)` with the image in legs 2,3.
pub fn apply_to_leg(m: &TensorMap, t: &Tensor2, leg: u8) -> Tensor3 {
    assert!(leg == 1 || leg == 2, "leg must be 1 or 2");
    assert_eq!(m.dim, t.dim);
    let mut out = Tensor3::zero(t.dim, t.field);
    for ((i, j), c) in &t.terms {
        let image = if leg == 1 { &m.images[*i] } else { &m.images[*j] };
        for ((p, q), d) in &image.terms {
            let ijk = if leg == 1 { (*p, *q, *j) } else { (*i, *p, *q) };
            out.add_term(ijk, c.mul(d));
        }
    }
    out
}

/// A linear endomorphism of `A (x) A`, kept as sparse basis images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Endo2 {
    pub dim: usize,
    pub field: FieldSpec,
    pub images: BTreeMap<(usize, usize), Tensor2>,
}

impl Endo2 {
    pub fn zero(dim: usize, field: FieldSpec) -> Endo2 {
        Endo2 {
            dim,
            field,
            images: BTreeMap::new(),
        }
    }

    pub fn identity(dim: usize, field: FieldSpec) -> Endo2 {
        let mut images = BTreeMap::new();
        for i in 0..dim {
            for j in 0..dim {
                images.insert((i, j), Tensor2::basis(dim, field, i, j));
            }
        }
        Endo2 { dim, field, images }
    }

    /// `T(a (x) b) = R(a) (x) b + a (x) S(b)` on basis pairs.
    pub fn from_operator_pair(field: FieldSpec, r: &Operator, s: &Operator) -> Endo2 {
        let dim = r.dim();
        assert_eq!(dim, s.dim());
        let mut images = BTreeMap::new();
        for i in 0..dim {
            let ri = r.apply_basis(i);
            for j in 0..dim {
                let sj = s.apply_basis(j);
                let mut t = Tensor2::zero(dim, field);
                for (p, c) in ri.iter().enumerate() {
                    if !c.is_zero() {
                        t.add_term((p, j), c.clone());
                    }
                }
                for (q, c) in sj.iter().enumerate() {
                    if !c.is_zero() {
                        t.add_term((i, q), c.clone());
                    }
                }
                if !t.is_zero() {
                    images.insert((i, j), t);
                }
            }
        }
        Endo2 { dim, field, images }
    }

    pub fn image(&self, i: usize, j: usize) -> Tensor2 {
        self.images
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(|| Tensor2::zero(self.dim, self.field))
    }

    pub fn apply(&self, t: &Tensor2) -> Tensor2 {
        let mut out = Tensor2::zero(self.dim, self.field);
        for (ij, c) in &t.terms {
            if let Some(img) = self.images.get(ij) {
                out = out.add(&img.scale(c));
            }
        }
        out
    }

    /// Applies to two adjacent legs of a 3-tensor: `Front` is `T (x) id`,
    /// `Back` is `id (x) T`.
    pub fn apply_legs(&self, t: &Tensor3, side: LegPair) -> Tensor3 {
        let mut out = Tensor3::zero(t.dim, t.field);
        for ((i, j, k), c) in &t.terms {
            let (pair, rest) = match side {
                LegPair::Front => ((*i, *j), *k),
                LegPair::Back => ((*j, *k), *i),
            };
            if let Some(img) = self.images.get(&pair) {
                for ((p, q), d) in &img.terms {
                    let ijk = match side {
                        LegPair::Front => (*p, *q, rest),
                        LegPair::Back => (rest, *p, *q),
                    };
                    out.add_term(ijk, c.mul(d));
                }
            }
        }
        out
    }

    /// Dense matrix on `A (x) A` coefficients; row/column index `i*dim + j`.
    pub fn to_matrix(&self) -> Mat {
        let n2 = self.dim * self.dim;
        let mut m = Mat::zeros(n2, n2, self.field);
        for ((i, j), img) in &self.images {
            for ((p, q), c) in &img.terms {
                m.set(p * self.dim + q, i * self.dim + j, c.clone());
            }
        }
        m
    }
}

/// A linear endomorphism of `A (x) A (x) A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Endo3 {
    pub dim: usize,
    pub field: FieldSpec,
    pub images: BTreeMap<(usize, usize, usize), Tensor3>,
}

impl Endo3 {
    pub fn zero(dim: usize, field: FieldSpec) -> Endo3 {
        Endo3 {
            dim,
            field,
            images: BTreeMap::new(),
        }
    }

    pub fn identity(dim: usize, field: FieldSpec) -> Endo3 {
        let mut images = BTreeMap::new();
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    images.insert((i, j, k), Tensor3::basis(dim, field, i, j, k));
                }
            }
        }
        Endo3 { dim, field, images }
    }

    pub fn image(&self, i: usize, j: usize, k: usize) -> Tensor3 {
        self.images
            .get(&(i, j, k))
            .cloned()
            .unwrap_or_else(|| Tensor3::zero(self.dim, self.field))
    }

    pub fn apply(&self, t: &Tensor3) -> Tensor3 {
        let mut out = Tensor3::zero(self.dim, self.field);
        for (ijk, c) in &t.terms {
            if let Some(img) = self.images.get(ijk) {
                out = out.add(&img.scale(c));
            }
        }
        out
    }
}

/// The map `a (x) b -> R(a) (x) b + a (x) S(b)` as an endomorphism of
/// `A (x) A`, ready for the pseudotwistor checker.
pub fn operator_to_tensor_maps(field: FieldSpec, r: &Operator, s: &Operator) -> Endo2 {
    Endo2::from_operator_pair(field, r, s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{matrix_algebra, truncated_poly, zero_algebra};

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn leg_embed_examples() {
        let m2 = matrix_algebra(2, Q);
        // e11 (x) e12 at legs 13 -> e11 (x) 1 (x) e12 = sum over unit terms
        let t = Tensor2::basis(4, Q, 0, 1);
        let e = leg_embed(&t, Placement::Legs13, &m2);
        let expected = Tensor3::from_terms(
            4,
            Q,
            [((0, 0, 1), Q.one()), ((0, 3, 1), Q.one())],
        );
        assert_eq!(e, expected);
        // zero tensor embeds to zero
        let z = Tensor2::zero(4, Q);
        assert!(leg_embed(&z, Placement::Legs23, &m2).is_zero());
        // legs 12 places the unit in the third leg
        let e12 = leg_embed(&t, Placement::Legs12, &m2);
        let expected12 =
            Tensor3::from_terms(4, Q, [((0, 1, 0), Q.one()), ((0, 1, 3), Q.one())]);
        assert_eq!(e12, expected12);
    }

    #[test]
    fn arena_lifts_non_unital_algebras() {
        let z = zero_algebra(2, Q);
        let arena = LegArena::new(&z);
        assert!(arena.lifted());
        assert_eq!(arena.working().dim, 3);
        let t = Tensor2::basis(2, Q, 0, 1);
        let e = arena.embed(&t, Placement::Legs13);
        // lifted indices shift by one; the unit is index 0
        assert_eq!(e, Tensor3::from_terms(3, Q, [((1, 0, 2), Q.one())]));
    }

    #[test]
    fn tensor3_products_in_matrix_units() {
        let m2 = matrix_algebra(2, Q);
        // (e11 (x) 1 (x) e11) * (e11 (x) e12 (x) 1) = e11 (x) e12 (x) e11
        let unit = m2.unit.clone().unwrap();
        let x = Tensor3::from_terms(
            4,
            Q,
            unit.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(u, c)| ((0, u, 0), c.clone())),
        );
        let y = Tensor3::from_terms(
            4,
            Q,
            unit.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(u, c)| ((0, 1, u), c.clone())),
        );
        let prod = x.mul(&y, &m2);
        assert_eq!(prod, Tensor3::from_terms(4, Q, [((0, 1, 0), Q.one())]));
        // x * 0 = 0
        assert!(x.mul(&Tensor3::zero(4, Q), &m2).is_zero());
    }

    #[test]
    fn bimodule_actions() {
        let m2 = matrix_algebra(2, Q);
        // e11 . (e12 (x) e21) . e11 = e12 (x) e21
        let t = Tensor2::basis(4, Q, 1, 2);
        let acted = t
            .act_left(&m2.basis_elem(0), &m2)
            .act_right(&m2.basis_elem(0), &m2);
        assert_eq!(acted, t);
        // a . 0 . b = 0
        let z = Tensor2::zero(4, Q);
        assert!(z.act_left(&m2.basis_elem(0), &m2).is_zero());

        // zeta . (1 (x) zeta) . zeta = zeta (x) zeta^2 in K[zeta]/<zeta^3>
        let tp = truncated_poly(3, Q);
        let t = Tensor2::basis(3, Q, 0, 1);
        let acted = t
            .act_left(&tp.basis_elem(1), &tp)
            .act_right(&tp.basis_elem(1), &tp);
        assert_eq!(acted, Tensor2::basis(3, Q, 1, 2));
    }

    #[test]
    fn sandwich_examples() {
        let m2 = matrix_algebra(2, Q);
        // t = sum_i e_{i1} (x) e_{1i}: sandwiching gives a_11 * (e11 + e22)
        let t = Tensor2::from_terms(4, Q, [((0, 0), Q.one()), ((2, 1), Q.one())]);
        let a = vec![Q.integer(7), Q.integer(3), Q.integer(-2), Q.integer(5)];
        let out = t.sandwich(&a, &m2);
        assert_eq!(
            out,
            vec![Q.integer(7), Q.zero(), Q.zero(), Q.integer(7)]
        );
        // t = 0 gives 0
        assert!(crate::linalg::vec_is_zero(
            &Tensor2::zero(4, Q).sandwich(&a, &m2)
        ));
        // t = 1 (x) 1 gives a back
        let unit = m2.unit.clone().unwrap();
        let one_one = Tensor2::outer(Q, &unit, &unit);
        assert_eq!(one_one.sandwich(&a, &m2), a);
    }

    #[test]
    fn apply_to_leg_examples() {
        // Delta on dual numbers: Delta(1) = 1 (x) zeta, Delta(zeta) = zeta (x) zeta
        let d = TensorMap::new(
            Q,
            vec![Tensor2::basis(2, Q, 0, 1), Tensor2::basis(2, Q, 1, 1)],
        );
        let t = Tensor2::basis(2, Q, 1, 1); // zeta (x) zeta
        let out = apply_to_leg(&d, &t, 2);
        assert_eq!(out, Tensor3::from_terms(2, Q, [((1, 1, 1), Q.one())]));
        // zero map gives zero
        let zm = TensorMap::zero(2, Q);
        assert!(apply_to_leg(&zm, &t, 1).is_zero());
    }

    #[test]
    fn endo2_from_operators() {
        let m2 = matrix_algebra(2, Q);
        let r = Operator::identity(4, Q);
        let s = Operator::zero(4, Q);
        let t = Endo2::from_operator_pair(Q, &r, &s);
        let x = Tensor2::basis(4, Q, 1, 2);
        assert_eq!(t.apply(&x), x);
        let zero_t = Endo2::from_operator_pair(Q, &s, &s);
        assert!(zero_t.apply(&x).is_zero());
        let _ = m2;
    }
}

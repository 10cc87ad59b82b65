use super::{Field, Matrix};
use crate::error::{Error, Result};

/// Subspace of `GF(p)^n`, stored as the nonzero rows of its reduced row
/// echelon form. Two subspaces are equal iff their stored bases are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    basis: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: Field, ambient: usize) -> Self {
        let id = Matrix::identity(field, ambient);
        Self::span(field, ambient, &id.columns())
    }

    pub fn span(field: Field, ambient: usize, vectors: &[Vec<u32>]) -> Self {
        let m = Matrix::from_rows(field, ambient, vectors);
        let (r, pivots) = m.rref();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Subspace {
            field,
            ambient,
            basis,
            pivots,
        }
    }

    /// Column space of `m`.
    pub fn image(m: &Matrix) -> Self {
        Self::span(m.field(), m.rows(), &m.columns())
    }

    /// Null space of `m`, in the domain of `m`.
    pub fn kernel(m: &Matrix) -> Self {
        let f = m.field();
        let n = m.cols();
        let (r, pivots) = m.rref();
        let mut vectors = Vec::new();
        let mut is_pivot = vec![false; n];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        for free in (0..n).filter(|c| !is_pivot[*c]) {
            let mut v = vec![0; n];
            v[free] = 1;
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = f.neg(r.get(i, free));
            }
            vectors.push(v);
        }
        let k = Self::span(f, n, &vectors);
        debug_assert_eq!(k.dim() + pivots.len(), n, "rank-nullity");
        k
    }

    /// `{x : m x in target}`.
    pub fn preimage(m: &Matrix, target: &Subspace) -> Result<Self> {
        if target.ambient != m.rows() {
            return Err(Error::DimensionMismatch {
                expected: m.rows(),
                found: target.ambient,
            });
        }
        let reduced: Vec<Vec<u32>> = m.columns().iter().map(|c| target.reduce(c)).collect();
        Ok(Self::kernel(&Matrix::from_columns(m.field(), m.rows(), &reduced)))
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Remainder of `v` after clearing the pivot coordinates. Linear in `v`,
    /// and zero exactly on the subspace.
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.ambient, "vector length");
        let f = self.field;
        let mut out = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            let c = out[p];
            if c == 0 {
                continue;
            }
            for (x, r) in out.iter_mut().zip(row) {
                *x = f.sub(*x, f.mul(c, *r));
            }
        }
        out
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.reduce(v).iter().all(|x| *x == 0)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && self.basis.iter().all(|b| other.contains(b))
    }

    pub fn insert(&self, v: &[u32]) -> Self {
        let mut vs = self.basis.clone();
        vs.push(v.to_vec());
        Self::span(self.field, self.ambient, &vs)
    }

    pub fn sum(&self, other: &Subspace) -> Self {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch");
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Self::span(self.field, self.ambient, &vs)
    }

    pub fn intersect(&self, other: &Subspace) -> Self {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch");
        let f = self.field;
        if self.is_zero() || other.is_zero() {
            return Self::zero(f, self.ambient);
        }
        // a.u = b.v  <=>  [U | -V] (a, b) = 0
        let mut cols: Vec<Vec<u32>> = self.basis.clone();
        cols.extend(other.basis.iter().map(|v| v.iter().map(|x| f.neg(*x)).collect()));
        let k = Self::kernel(&Matrix::from_columns(f, self.ambient, &cols));
        let u = Matrix::from_columns(f, self.ambient, &self.basis);
        let vectors: Vec<Vec<u32>> = k.basis.iter().map(|ab| u.apply(&ab[..self.basis.len()])).collect();
        Self::span(f, self.ambient, &vectors)
    }

    /// Image of the subspace under `m`.
    pub fn map(&self, m: &Matrix) -> Self {
        let vs: Vec<Vec<u32>> = self.basis.iter().map(|b| m.apply(b)).collect();
        Self::span(self.field, m.rows(), &vs)
    }

    /// `dim self - dim sub`, requiring `sub ⊆ self`.
    pub fn quotient_dim(&self, sub: &Subspace) -> Result<usize> {
        if !sub.is_subspace_of(self) {
            return Err(Error::SubspaceNotContained);
        }
        Ok(self.dim() - sub.dim())
    }

    /// Vectors of `self`, taken greedily from `candidates` followed by the
    /// echelon basis, that extend a basis of `sub` to one of `self`.
    pub fn complement_from(&self, sub: &Subspace, candidates: &[Vec<u32>]) -> Result<Vec<Vec<u32>>> {
        if !sub.is_subspace_of(self) {
            return Err(Error::SubspaceNotContained);
        }
        let target = self.dim() - sub.dim();
        let mut acc = sub.clone();
        let mut out = Vec::new();
        for v in candidates.iter().chain(self.basis.iter()) {
            if out.len() == target {
                break;
            }
            debug_assert!(self.contains(v));
            if !acc.contains(v) {
                acc = acc.insert(v);
                out.push(v.clone());
            }
        }
        Ok(out)
    }

    pub fn complement(&self, sub: &Subspace) -> Result<Vec<Vec<u32>>> {
        self.complement_from(sub, &[])
    }

    /// Coordinates of `v` over `complement` modulo `sub`, or `None` when `v`
    /// is not in `span(complement) + sub`.
    pub fn coords_in_quotient(v: &[u32], complement: &[Vec<u32>], sub: &Subspace) -> Option<Vec<u32>> {
        let f = sub.field;
        let mut cols = complement.to_vec();
        cols.extend(sub.basis.iter().cloned());
        let m = Matrix::from_columns(f, sub.ambient, &cols);
        m.solve(v).map(|x| x[..complement.len()].to_vec())
    }
}

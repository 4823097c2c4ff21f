//! Exact dense linear algebra over any `Field`: reduced row echelon form,
//! kernels, eigenspaces, solving, and canonical subspace arithmetic.
//!
//! Subspaces are always carried as RREF bases, so equality of subspaces is
//! literal equality of the basis matrices. This is what every dimension claim
//! in the verification rests on, so there is no probabilistic shortcut here.

use crate::cyclotomic::Field;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum LinError {
    #[error("dimension mismatch: {0}")]
    DimMismatch(String),
    #[error("inconsistent linear system")]
    Inconsistent,
}

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<F> {
    pub rows: usize,
    pub cols: usize,
    a: Vec<F>,
}

impl<F: Field> std::fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows.min(12) {
            let row: Vec<String> = (0..self.cols.min(12)).map(|c| format!("{:?}", self.at(r, c))).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl<F: Field> Matrix<F> {
    pub fn zero(rows: usize, cols: usize, zero: &F) -> Self {
        Matrix { rows, cols, a: vec![zero.zero_like(); rows * cols] }
    }

    pub fn identity(n: usize, one: &F) -> Self {
        let mut m = Self::zero(n, n, &one.zero_like());
        for i in 0..n {
            *m.at_mut(i, i) = one.one_like();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        let mut a = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            a.extend(row);
        }
        Matrix { rows: r, cols: c, a }
    }

    #[inline]
    pub fn at(&self, r: usize, c: usize) -> &F {
        &self.a[r * self.cols + c]
    }

    #[inline]
    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut F {
        &mut self.a[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F) {
        self.a[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[F] {
        &self.a[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col_vec(&self, c: usize) -> Vec<F> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let zero = self.a[0].zero_like();
        let mut t = Self::zero(self.cols, self.rows, &zero);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *t.at_mut(c, r) = self.at(r, c).clone();
            }
        }
        t
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let a = self.a.iter().zip(o.a.iter()).map(|(x, y)| x.add(y)).collect();
        Matrix { rows: self.rows, cols: self.cols, a }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let a = self.a.iter().zip(o.a.iter()).map(|(x, y)| x.sub(y)).collect();
        Matrix { rows: self.rows, cols: self.cols, a }
    }

    pub fn scale(&self, s: &F) -> Self {
        let a = self.a.iter().map(|x| x.mul(s)).collect();
        Matrix { rows: self.rows, cols: self.cols, a }
    }

    /// Matrix product, skipping zero entries (most maps here are very sparse).
    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "mul shape");
        let zero = self.a.first().map(|x| x.zero_like()).unwrap_or_else(|| o.a[0].zero_like());
        let mut out = Self::zero(self.rows, o.cols, &zero);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let s = self.at(r, k);
                if s.is_zero() {
                    continue;
                }
                for c in 0..o.cols {
                    let t = o.at(k, c);
                    if t.is_zero() {
                        continue;
                    }
                    let cur = out.at(r, c).add(&s.mul(t));
                    out.set(r, c, cur);
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len());
        let zero = self.a[0].zero_like();
        let mut out = vec![zero; self.rows];
        for r in 0..self.rows {
            for c in 0..self.cols {
                let s = self.at(r, c);
                if s.is_zero() || v[c].is_zero() {
                    continue;
                }
                out[r] = out[r].add(&s.mul(&v[c]));
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        for r in 0..self.rows {
            for c in 0..self.cols {
                let e = self.at(r, c);
                if r == c {
                    if !e.is_one() {
                        return false;
                    }
                } else if !e.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.a.iter().all(|x| x.is_zero())
    }

    /// In-place reduced row echelon form; returns (rank, pivot columns).
    pub fn rref_in_place(&mut self) -> (usize, Vec<usize>) {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            // prefer a pivot entry that is already a unit to keep numbers small
            let mut sel = None;
            for i in r..self.rows {
                if !self.at(i, c).is_zero() {
                    if self.at(i, c).is_one() {
                        sel = Some(i);
                        break;
                    }
                    if sel.is_none() {
                        sel = Some(i);
                    }
                }
            }
            let Some(i) = sel else { continue };
            self.swap_rows(r, i);
            let piv = self.at(r, c).clone();
            if !piv.is_one() {
                let inv = piv.invert().expect("pivot invertible");
                for j in c..self.cols {
                    if !self.at(r, j).is_zero() {
                        let v = self.at(r, j).mul(&inv);
                        self.set(r, j, v);
                    }
                }
            }
            for i in 0..self.rows {
                if i == r || self.at(i, c).is_zero() {
                    continue;
                }
                let f = self.at(i, c).clone();
                for j in c..self.cols {
                    if self.at(r, j).is_zero() {
                        continue;
                    }
                    let v = self.at(i, j).sub(&f.mul(self.at(r, j)));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (r, pivots)
    }

    pub fn rref(&self) -> (Self, usize, Vec<usize>) {
        let mut m = self.clone();
        let (rank, piv) = m.rref_in_place();
        (m, rank, piv)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.a.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    /// Right kernel as a canonical subspace.
    pub fn kernel(&self, zero: &F) -> Subspace<F> {
        let (red, rank, pivots) = self.rref();
        let n = self.cols;
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(n - rank);
        for &fc in free.iter() {
            let mut v = vec![zero.zero_like(); n];
            v[fc] = zero.one_like();
            for (ri, &pc) in pivots.iter().enumerate() {
                v[pc] = red.at(ri, fc).neg();
            }
            basis.push(v);
        }
        Subspace::from_vectors(n, basis, zero)
    }

    /// Solve self * x = b; `None` when inconsistent.
    pub fn solve(&self, b: &[F], zero: &F) -> Option<Vec<F>> {
        assert_eq!(self.rows, b.len());
        let mut aug = Matrix::zero(self.rows, self.cols + 1, zero);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *aug.at_mut(r, c) = self.at(r, c).clone();
            }
            *aug.at_mut(r, self.cols) = b[r].clone();
        }
        let (red, _, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![zero.zero_like(); self.cols];
        for (ri, &pc) in pivots.iter().enumerate() {
            x[pc] = red.at(ri, self.cols).clone();
        }
        Some(x)
    }

    /// Inverse of a square matrix; `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let zero = self.a[0].zero_like();
        let mut aug = Matrix::zero(n, 2 * n, &zero);
        for r in 0..n {
            for c in 0..n {
                *aug.at_mut(r, c) = self.at(r, c).clone();
            }
            *aug.at_mut(r, n + r) = zero.one_like();
        }
        let (red, rank, _) = aug.rref();
        if rank < n {
            return None;
        }
        let mut inv = Matrix::zero(n, n, &zero);
        for r in 0..n {
            for c in 0..n {
                *inv.at_mut(r, c) = red.at(r, n + c).clone();
            }
        }
        Some(inv)
    }

    /// Eigenspace for eigenvalue lambda: ker(self - lambda id).
    pub fn eigenspace(&self, lambda: &F) -> Subspace<F> {
        assert_eq!(self.rows, self.cols);
        let mut m = self.clone();
        for i in 0..self.rows {
            let v = m.at(i, i).sub(lambda);
            m.set(i, i, v);
        }
        m.kernel(&lambda.zero_like())
    }

    pub fn pow_until_identity(&self, bound: usize) -> Option<usize> {
        let mut acc = self.clone();
        for k in 1..=bound {
            if acc.is_identity() {
                return Some(k);
            }
            acc = acc.mul(self);
        }
        None
    }
}

/// A linear subspace of F^n carried by its unique RREF basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace<F: Field> {
    pub ambient: usize,
    pub basis: Matrix<F>,
    pub pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn from_vectors(ambient: usize, vectors: Vec<Vec<F>>, zero: &F) -> Self {
        if vectors.is_empty() {
            return Subspace {
                ambient,
                basis: Matrix::zero(0, ambient, zero),
                pivots: vec![],
            };
        }
        let m = Matrix::from_rows(vectors);
        let (red, rank, pivots) = m.rref();
        let mut rows = Vec::with_capacity(rank);
        for r in 0..rank {
            rows.push(red.row(r).to_vec());
        }
        let basis = if rows.is_empty() {
            Matrix::zero(0, ambient, zero)
        } else {
            Matrix::from_rows(rows)
        };
        Subspace { ambient, basis, pivots }
    }

    pub fn full(ambient: usize, one: &F) -> Self {
        let id = Matrix::identity(ambient, one);
        let rows = (0..ambient).map(|r| id.row(r).to_vec()).collect();
        Self::from_vectors(ambient, rows, &one.zero_like())
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    pub fn basis_vectors(&self) -> Vec<Vec<F>> {
        (0..self.basis.rows).map(|r| self.basis.row(r).to_vec()).collect()
    }

    /// Membership by reduction against the RREF basis.
    pub fn contains(&self, v: &[F]) -> bool {
        assert_eq!(v.len(), self.ambient);
        let mut w = v.to_vec();
        for (ri, &pc) in self.pivots.iter().enumerate() {
            if w[pc].is_zero() {
                continue;
            }
            let f = w[pc].clone();
            for c in 0..self.ambient {
                let b = self.basis.at(ri, c);
                if b.is_zero() {
                    continue;
                }
                w[c] = w[c].sub(&f.mul(b));
            }
        }
        w.iter().all(|x| x.is_zero())
    }

    /// Coordinates of v in this basis; `None` if v is outside.
    pub fn coordinates(&self, v: &[F]) -> Option<Vec<F>> {
        assert_eq!(v.len(), self.ambient);
        let mut w = v.to_vec();
        let mut coords = Vec::with_capacity(self.dim());
        for (ri, &pc) in self.pivots.iter().enumerate() {
            let f = w[pc].clone();
            coords.push(f.clone());
            if f.is_zero() {
                continue;
            }
            for c in 0..self.ambient {
                let b = self.basis.at(ri, c);
                if b.is_zero() {
                    continue;
                }
                w[c] = w[c].sub(&f.mul(b));
            }
        }
        if w.iter().all(|x| x.is_zero()) {
            Some(coords)
        } else {
            None
        }
    }

    pub fn sum(&self, o: &Self) -> Result<Self, LinError> {
        if self.ambient != o.ambient {
            return Err(LinError::DimMismatch("subspace sum".into()));
        }
        let zero = self.zero_elt(o);
        let mut rows = self.basis_vectors();
        rows.extend(o.basis_vectors());
        Ok(Self::from_vectors(self.ambient, rows, &zero))
    }

    pub fn intersect(&self, o: &Self) -> Result<Self, LinError> {
        if self.ambient != o.ambient {
            return Err(LinError::DimMismatch("subspace intersection".into()));
        }
        let zero = self.zero_elt(o);
        if self.dim() == 0 || o.dim() == 0 {
            return Ok(Self::from_vectors(self.ambient, vec![], &zero));
        }
        // x in both spans: x = u^T A = v^T B. Solve [A^T | -B^T] z = 0.
        let k = self.dim();
        let m = o.dim();
        let mut sys = Matrix::zero(self.ambient, k + m, &zero);
        for r in 0..self.ambient {
            for c in 0..k {
                *sys.at_mut(r, c) = self.basis.at(c, r).clone();
            }
            for c in 0..m {
                *sys.at_mut(r, k + c) = o.basis.at(c, r).neg();
            }
        }
        let ker = sys.kernel(&zero);
        let mut vecs = Vec::new();
        for z in ker.basis_vectors() {
            let mut x = vec![zero.zero_like(); self.ambient];
            for c in 0..k {
                if z[c].is_zero() {
                    continue;
                }
                for t in 0..self.ambient {
                    let b = self.basis.at(c, t);
                    if !b.is_zero() {
                        x[t] = x[t].add(&z[c].mul(b));
                    }
                }
            }
            vecs.push(x);
        }
        Ok(Self::from_vectors(self.ambient, vecs, &zero))
    }

    fn zero_elt(&self, o: &Self) -> F {
        if self.dim() > 0 {
            self.basis.at(0, 0).zero_like()
        } else if o.dim() > 0 {
            o.basis.at(0, 0).zero_like()
        } else {
            panic!("cannot infer field from two zero subspaces; use from_vectors")
        }
    }
}

/// Expresses vectors in the span of a fixed linearly independent family.
/// Coordinates are read off the pivot columns of the family's RREF and the
/// reconstruction is verified exactly, so a vector outside the span is
/// rejected rather than silently projected.
pub struct SpanSolver<F: Field> {
    ambient: usize,
    family: Matrix<F>,
    pivots: Vec<usize>,
    /// inverse of the family restricted to the pivot columns
    piv_inv: Matrix<F>,
}

impl<F: Field> SpanSolver<F> {
    pub fn new(vectors: Vec<Vec<F>>, zero: &F) -> Option<Self> {
        let k = vectors.len();
        let ambient = vectors.first().map(|v| v.len()).unwrap_or(0);
        let family = Matrix::from_rows(vectors);
        let (_, rank, pivots) = family.rref();
        if rank != k {
            return None; // family dependent
        }
        let mut piv = Matrix::zero(k, k, zero);
        for r in 0..k {
            for (c, &pc) in pivots.iter().enumerate() {
                *piv.at_mut(r, c) = family.at(r, pc).clone();
            }
        }
        let piv_inv = piv.transpose().inverse()?;
        Some(SpanSolver { ambient, family, pivots, piv_inv })
    }

    pub fn len(&self) -> usize {
        self.family.rows
    }

    pub fn is_empty(&self) -> bool {
        self.family.rows == 0
    }

    /// Coordinates of v in the family; None when v is outside the span.
    pub fn express(&self, v: &[F]) -> Option<Vec<F>> {
        assert_eq!(v.len(), self.ambient);
        let k = self.family.rows;
        let zero = self.piv_inv.at(0, 0).zero_like();
        let mut rhs = Vec::with_capacity(k);
        for &pc in self.pivots.iter() {
            rhs.push(v[pc].clone());
        }
        let coords = self.piv_inv.apply(&rhs);
        // verify reconstruction
        let mut rec = vec![zero; self.ambient];
        for (r, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for t in 0..self.ambient {
                let b = self.family.at(r, t);
                if !b.is_zero() {
                    rec[t] = rec[t].add(&c.mul(b));
                }
            }
        }
        if rec.iter().zip(v.iter()).all(|(a, b)| a == b) {
            Some(coords)
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::CycloScalar;

    fn ci(n: i64) -> CycloScalar {
        CycloScalar::from_int(n)
    }

    #[test]
    fn rref_identity_and_zero() {
        let id = Matrix::identity(3, &ci(1));
        let (r, rank, _) = id.rref();
        assert!(r.is_identity());
        assert_eq!(rank, 3);
        let z = Matrix::zero(3, 3, &ci(0));
        let (rz, rankz, _) = z.rref();
        assert!(rz.is_zero_matrix());
        assert_eq!(rankz, 0);
    }

    #[test]
    fn rank_one_omega_matrix() {
        // [[1, w],[w^2, 1]] has rank 1 because row2 = w^2 * row1.
        let w = CycloScalar::omega();
        let m = Matrix::from_rows(vec![
            vec![ci(1), w.clone()],
            vec![w.mul(&w), ci(1)],
        ]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernel_dims() {
        let id = Matrix::identity(4, &ci(1));
        assert_eq!(id.kernel(&ci(0)).dim(), 0);
        let z = Matrix::zero(4, 4, &ci(0));
        assert_eq!(z.kernel(&ci(0)).dim(), 4);
    }

    #[test]
    fn rank_nullity_and_canonicity() {
        let m = Matrix::from_rows(vec![
            vec![ci(1), ci(2), ci(3), ci(4)],
            vec![ci(2), ci(4), ci(6), ci(8)],
            vec![ci(0), ci(1), ci(0), ci(-1)],
        ]);
        let (red, rank, _) = m.rref();
        assert_eq!(rank + m.kernel(&ci(0)).dim(), m.cols);
        let (red2, _, _) = red.rref();
        assert_eq!(red, red2);
    }

    #[test]
    fn eigenspace_diag() {
        let m = Matrix::from_rows(vec![vec![ci(1), ci(0)], vec![ci(0), ci(-1)]]);
        let e = m.eigenspace(&ci(-1));
        assert_eq!(e.dim(), 1);
        assert!(e.contains(&[ci(0), ci(5)]));
        assert!(!e.contains(&[ci(1), ci(0)]));
    }

    #[test]
    fn solve_and_certify() {
        let m = Matrix::from_rows(vec![
            vec![ci(2), ci(1)],
            vec![ci(1), ci(3)],
        ]);
        let b = [ci(5), ci(10)];
        let x = m.solve(&b, &ci(0)).unwrap();
        assert_eq!(m.apply(&x), b.to_vec());
        // inconsistent system certified
        let m2 = Matrix::from_rows(vec![vec![ci(1), ci(1)], vec![ci(2), ci(2)]]);
        assert!(m2.solve(&[ci(0), ci(1)], &ci(0)).is_none());
    }

    #[test]
    fn subspace_ops() {
        let e1 = Subspace::from_vectors(3, vec![vec![ci(1), ci(0), ci(0)]], &ci(0));
        let e2 = Subspace::from_vectors(3, vec![vec![ci(0), ci(1), ci(0)]], &ci(0));
        assert_eq!(e1, e1.clone());
        assert_eq!(e1.intersect(&e2).unwrap().dim(), 0);
        assert_eq!(e1.sum(&e2).unwrap().dim(), 2);
        let diag = Subspace::from_vectors(3, vec![vec![ci(1), ci(1), ci(0)]], &ci(0));
        let plane = e1.sum(&e2).unwrap();
        let meet = plane.intersect(&diag).unwrap();
        assert_eq!(meet.dim(), 1);
        assert!(meet.contains(&[ci(2), ci(2), ci(0)]));
    }
}

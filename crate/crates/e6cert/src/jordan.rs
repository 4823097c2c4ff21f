//! Jordan algebras of hermitian 3x3 matrices over a Hurwitz algebra: the
//! 9-dimensional Mat3(F)+ model, the 27-dimensional Albert algebra, inner
//! derivations D_{x,y}, the full derivation algebra, and the two gradings of
//! Mat3(F)+ used by the Lie-algebra constructions.

use crate::composition::{CompositionAlgebra, DegreeMap, Flavor};
use crate::cyclotomic::CycloScalar;
use crate::exactlin::{Matrix, Subspace};
use rayon::prelude::*;

type C = CycloScalar;

#[derive(Debug, thiserror::Error)]
pub enum JordanError {
    #[error("jordan invariant violated: {0}")]
    Invariant(String),
    #[error("derivation dimension not certified: span {0}, modular bound {1}")]
    DerGap(usize, usize),
}

#[derive(Clone)]
pub struct JordanAlgebra {
    pub dim: usize,
    pub labels: Vec<String>,
    /// mult[i][j] = coordinates of b_i b_j (commutative)
    pub mult: Vec<Vec<Vec<C>>>,
    pub unit: Vec<C>,
    /// normalized trace values t_J(b_i)
    pub trace: Vec<C>,
}

fn basis_vec(dim: usize, k: usize) -> Vec<C> {
    let mut v = vec![C::zero(); dim];
    v[k] = C::one();
    v
}

impl JordanAlgebra {
    pub fn product(&self, x: &[C], y: &[C]) -> Vec<C> {
        let mut out = vec![C::zero(); self.dim];
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y[j].is_zero() {
                    continue;
                }
                let c = x[i].mul(&y[j]);
                for (k, v) in self.mult[i][j].iter().enumerate() {
                    if !v.is_zero() {
                        out[k] = out[k].add(&c.mul(v));
                    }
                }
            }
        }
        out
    }

    pub fn t_j(&self, x: &[C]) -> C {
        let mut acc = C::zero();
        for i in 0..self.dim {
            if !x[i].is_zero() && !self.trace[i].is_zero() {
                acc = acc.add(&x[i].mul(&self.trace[i]));
            }
        }
        acc
    }

    /// Trace-zero part J0 as a canonical subspace.
    pub fn j0(&self) -> Subspace<C> {
        let mut rows = Vec::new();
        for i in 0..self.dim {
            let mut row = vec![C::zero(); 1];
            row[0] = self.trace[i].clone();
            rows.push(row);
        }
        Matrix::from_rows(rows).transpose().kernel(&C::zero())
    }

    /// x * y = xy - t_J(xy) 1 on trace-zero elements.
    pub fn star(&self, x: &[C], y: &[C]) -> Vec<C> {
        let xy = self.product(x, y);
        let t = self.t_j(&xy);
        (0..self.dim).map(|k| xy[k].sub(&t.mul(&self.unit[k]))).collect()
    }

    /// D_{x,y}(z) = x(yz) - y(xz) as a matrix.
    pub fn d_xy(&self, x: &[C], y: &[C]) -> Matrix<C> {
        let mut m = Matrix::zero(self.dim, self.dim, &C::zero());
        for z in 0..self.dim {
            let ez = basis_vec(self.dim, z);
            let col = {
                let yz = self.product(y, &ez);
                let xz = self.product(x, &ez);
                let a = self.product(x, &yz);
                let b = self.product(y, &xz);
                (0..self.dim).map(|k| a[k].sub(&b[k])).collect::<Vec<_>>()
            };
            for r in 0..self.dim {
                *m.at_mut(r, z) = col[r].clone();
            }
        }
        m
    }

    pub fn is_derivation(&self, d: &Matrix<C>) -> bool {
        for i in 0..self.dim {
            let di = d.col_vec(i);
            for j in i..self.dim {
                let dj = d.col_vec(j);
                let lhs = d.apply(&self.mult[i][j]);
                let r1 = self.product(&di, &basis_vec(self.dim, j));
                let r2 = self.product(&basis_vec(self.dim, i), &dj);
                for k in 0..self.dim {
                    if lhs[k] != r1[k].add(&r2[k]) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_automorphism(&self, f: &Matrix<C>) -> bool {
        if f.inverse().is_none() {
            return false;
        }
        for i in 0..self.dim {
            let fi = f.col_vec(i);
            for j in i..self.dim {
                let fj = f.col_vec(j);
                if f.apply(&self.mult[i][j]) != self.product(&fi, &fj) {
                    return false;
                }
            }
        }
        true
    }

    /// Span of all inner derivations D_{x,y} over basis pairs, as a subspace
    /// of dim^2 operator coordinates.
    pub fn d_span(&self) -> Subspace<C> {
        let n = self.dim;
        let vecs: Vec<Vec<C>> = (0..n)
            .into_par_iter()
            .flat_map(|i| {
                let mut out = Vec::new();
                for j in (i + 1)..n {
                    let d = self.d_xy(&basis_vec(n, i), &basis_vec(n, j));
                    let mut flat = Vec::with_capacity(n * n);
                    for r in 0..n {
                        for c in 0..n {
                            flat.push(d.at(r, c).clone());
                        }
                    }
                    out.push(flat);
                }
                out
            })
            .collect();
        Subspace::from_vectors(n * n, vecs, &C::zero())
    }

    /// The full derivation algebra.
    ///
    /// The exact span of the D_{x,y} gives the lower bound; maximality is
    /// certified by an exact rank bound for the Leibniz system computed over
    /// a prime field (a nonsingular minor mod p stays nonsingular over Q, so
    /// dim ker over Q <= dim ker mod p). When both agree the span is the
    /// kernel. Every spanning operator is also Leibniz-checked exactly.
    pub fn der_basis(&self) -> Result<Subspace<C>, JordanError> {
        let span = self.d_span();
        for v in span.basis_vectors().iter() {
            let m = Matrix::from_rows(
                (0..self.dim).map(|r| v[r * self.dim..(r + 1) * self.dim].to_vec()).collect(),
            );
            if !self.is_derivation(&m) {
                return Err(JordanError::Invariant("D-span element not a derivation".into()));
            }
        }
        for p in [37u64, 73, 109] {
            if let Some(bound) = self.der_dim_mod(p) {
                if bound == span.dim() {
                    return Ok(span);
                } else if bound > span.dim() {
                    continue; // rank dropped mod p; try the next prime
                } else {
                    return Err(JordanError::DerGap(span.dim(), bound));
                }
            }
        }
        Err(JordanError::DerGap(span.dim(), usize::MAX))
    }

    /// dim of the Leibniz kernel over F_p; None when a structure constant
    /// denominator hits p.
    fn der_dim_mod(&self, p: u64) -> Option<usize> {
        let r = crate::cyclotomic::find_order36_root(p).ok()?;
        let n = self.dim;
        // mult table mod p (all entries rational here)
        let mut mp = vec![0u64; n * n * n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let v = &self.mult[i][j][k];
                    if !v.is_zero() {
                        mp[(i * n + j) * n + k] = v.modular_image(p, r).ok()?.v;
                    }
                }
            }
        }
        // unknowns d[r][c] (n^2), equations for pairs i <= j and coord k:
        // sum_m d[k][m] mult[i][j][m] - sum_r mult[r][j][k] d[r][i]
        //                            - sum_r mult[i][r][k] d[r][j] = 0
        let cols = n * n;
        let mut rref: Vec<Vec<u64>> = Vec::new(); // rows with leading pivot normalized
        let mut pivots: Vec<usize> = Vec::new();
        let mut row = vec![0u64; cols];
        for i in 0..n {
            for j in i..n {
                for k in 0..n {
                    for x in row.iter_mut() {
                        *x = 0;
                    }
                    for m in 0..n {
                        let c = mp[(i * n + j) * n + m];
                        if c != 0 {
                            let idx = k * n + m;
                            row[idx] = (row[idx] + c) % p;
                        }
                    }
                    for rr in 0..n {
                        let c1 = mp[(rr * n + j) * n + k];
                        if c1 != 0 {
                            let idx = rr * n + i;
                            row[idx] = (row[idx] + p - c1) % p;
                        }
                        let c2 = mp[(i * n + rr) * n + k];
                        if c2 != 0 {
                            let idx = rr * n + j;
                            row[idx] = (row[idx] + p - c2) % p;
                        }
                    }
                    // reduce against current rref
                    for (ri, &pc) in pivots.iter().enumerate() {
                        let f = row[pc];
                        if f != 0 {
                            let rrow = &rref[ri];
                            for c in 0..cols {
                                if rrow[c] != 0 {
                                    row[c] = (row[c] + (p - f) * rrow[c]) % p;
                                }
                            }
                        }
                    }
                    if let Some(pc) = row.iter().position(|&x| x != 0) {
                        let inv = modinv(row[pc], p);
                        let newrow: Vec<u64> =
                            row.iter().map(|&x| x * inv % p).collect();
                        rref.push(newrow);
                        pivots.push(pc);
                    }
                }
            }
        }
        Some(cols - rref.len())
    }
}

fn modinv(a: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

/// Mat3(F) with the symmetrized product and normalized trace tr/3, on the
/// basis E11, E12, ..., E33 in row-major order.
pub fn mat3_plus() -> JordanAlgebra {
    let dim = 9;
    let idx = |r: usize, c: usize| r * 3 + c;
    let mut mult = vec![vec![vec![C::zero(); dim]; dim]; dim];
    let half = C::from_ratio(1, 2);
    for r in 0..3 {
        for c in 0..3 {
            for r2 in 0..3 {
                for c2 in 0..3 {
                    let (i, j) = (idx(r, c), idx(r2, c2));
                    // (E_rc E_r2c2 + E_r2c2 E_rc)/2
                    if c == r2 {
                        mult[i][j][idx(r, c2)] = mult[i][j][idx(r, c2)].add(&half);
                    }
                    if c2 == r {
                        mult[i][j][idx(r2, c)] = mult[i][j][idx(r2, c)].add(&half);
                    }
                }
            }
        }
    }
    let mut unit = vec![C::zero(); dim];
    let mut trace = vec![C::zero(); dim];
    let third = C::from_ratio(1, 3);
    for d in 0..3 {
        unit[idx(d, d)] = C::one();
        trace[idx(d, d)] = third.clone();
    }
    JordanAlgebra {
        dim,
        labels: (0..3)
            .flat_map(|r| (0..3).map(move |c| format!("E{}{}", r + 1, c + 1)))
            .collect(),
        mult,
        unit,
        trace,
    }
}

/// H3(C): hermitian 3x3 matrices over a Hurwitz algebra with the symmetrized
/// product. Coordinates: (a1, a2, a3, x1, x2, x3) with diagonal scalars a_i
/// and off-diagonal slots x_i in C placed as in
/// [[a1, conj(x3), x2], [x3, a2, conj(x1)], [conj(x2), x1, a3]].
pub fn h3(c: &CompositionAlgebra) -> JordanAlgebra {
    assert_eq!(c.flavor, Flavor::Hurwitz, "H3 needs a unital composition algebra");
    let n = c.dim;
    let dim = 3 + 3 * n;
    // A general element is a 3x3 matrix of C-vectors.
    type Mat = Vec<Vec<Vec<C>>>;
    let zero_mat = |n: usize| -> Mat { vec![vec![vec![C::zero(); n]; 3]; 3] };
    let to_mat = |v: &[C]| -> Mat {
        let mut m = zero_mat(n);
        let unit = c.unit.as_ref().unwrap();
        for d in 0..3 {
            for k in 0..n {
                m[d][d][k] = v[d].mul(&unit[k]);
            }
        }
        let slot = |i: usize| -> Vec<C> { v[3 + i * n..3 + (i + 1) * n].to_vec() };
        let x1 = slot(0);
        let x2 = slot(1);
        let x3 = slot(2);
        m[1][0] = x3.clone();
        m[0][1] = c.conj(&x3);
        m[2][1] = x1.clone();
        m[1][2] = c.conj(&x1);
        m[0][2] = x2.clone();
        m[2][0] = c.conj(&x2);
        m
    };
    let matmul = |a: &Mat, b: &Mat| -> Mat {
        let mut out = zero_mat(n);
        for r in 0..3 {
            for cc in 0..3 {
                for k in 0..3 {
                    let prod = c.product(&a[r][k], &b[k][cc]);
                    for t in 0..n {
                        out[r][cc][t] = out[r][cc][t].add(&prod[t]);
                    }
                }
            }
        }
        out
    };
    let from_mat = |m: &Mat| -> Vec<C> {
        let unit = c.unit.as_ref().unwrap();
        let mut v = vec![C::zero(); dim];
        for d in 0..3 {
            // diagonal entries must be scalar multiples of 1
            let entry = &m[d][d];
            let t = c.polar(entry, unit); // = 2 a_d since n(1,1) = 2
            let a = t.mul(&C::from_ratio(1, 2));
            for (k, u) in unit.iter().enumerate() {
                assert_eq!(entry[k], a.mul(u), "diagonal escapes F");
            }
            v[d] = a;
        }
        for (i, (r, cc)) in [(2usize, 1usize), (0, 2), (1, 0)].iter().enumerate() {
            for k in 0..n {
                v[3 + i * n + k] = m[*r][*cc][k].clone();
            }
        }
        v
    };
    let mut mult = vec![vec![vec![C::zero(); dim]; dim]; dim];
    let half = C::from_ratio(1, 2);
    for i in 0..dim {
        let mi = to_mat(&basis_vec(dim, i));
        for j in i..dim {
            let mj = to_mat(&basis_vec(dim, j));
            let ab = matmul(&mi, &mj);
            let ba = matmul(&mj, &mi);
            let mut sym = zero_mat(n);
            for r in 0..3 {
                for cc in 0..3 {
                    for t in 0..n {
                        sym[r][cc][t] = ab[r][cc][t].add(&ba[r][cc][t]).mul(&half);
                    }
                }
            }
            let coords = from_mat(&sym);
            mult[i][j] = coords.clone();
            mult[j][i] = coords;
        }
    }
    let mut unit = vec![C::zero(); dim];
    let mut trace = vec![C::zero(); dim];
    let third = C::from_ratio(1, 3);
    for d in 0..3 {
        unit[d] = C::one();
        trace[d] = third.clone();
    }
    let mut labels: Vec<String> = (1..=3).map(|d| format!("E{}", d)).collect();
    for i in 1..=3 {
        for k in 0..n {
            labels.push(format!("x{}({})", i, c.labels[k]));
        }
    }
    JordanAlgebra { dim, labels, mult, unit, trace }
}

/// The Z^2-grading of Mat3(F)+ by matrix-unit positions.
pub fn mat3_z2_degrees() -> DegreeMap {
    let d = |m: i64, n: i64| (vec![], vec![m, n]);
    DegreeMap {
        torsion_mod: 1,
        torsion_rank: 0,
        free_rank: 2,
        degrees: vec![
            d(0, 0),
            d(1, 0),
            d(1, 1),
            d(-1, 0),
            d(0, 0),
            d(0, 1),
            d(-1, -1),
            d(0, -1),
            d(0, 0),
        ],
    }
}

/// The Pauli pair: b = diag(1, w, w^2) and the cyclic shift c, with
/// c b = w b c as associative matrices.
pub fn pauli_pair() -> (Matrix<C>, Matrix<C>) {
    let w = C::omega();
    let mut b = Matrix::zero(3, 3, &C::zero());
    *b.at_mut(0, 0) = C::one();
    *b.at_mut(1, 1) = w.clone();
    *b.at_mut(2, 2) = w.mul(&w);
    let mut cm = Matrix::zero(3, 3, &C::zero());
    *cm.at_mut(0, 1) = C::one();
    *cm.at_mut(1, 2) = C::one();
    *cm.at_mut(2, 0) = C::one();
    (b, cm)
}

/// Conjugation x -> g x g^{-1} as an operator on Mat3 coordinates; this is a
/// Jordan automorphism of Mat3(F)+ for any invertible g.
pub fn conj_operator(g: &Matrix<C>) -> Matrix<C> {
    let ginv = g.inverse().expect("conjugator invertible");
    let mut out = Matrix::zero(9, 9, &C::zero());
    for r in 0..3 {
        for c in 0..3 {
            let mut unit = Matrix::zero(3, 3, &C::zero());
            *unit.at_mut(r, c) = C::one();
            let img = g.mul(&unit).mul(&ginv);
            for r2 in 0..3 {
                for c2 in 0..3 {
                    *out.at_mut(r2 * 3 + c2, r * 3 + c) = img.at(r2, c2).clone();
                }
            }
        }
    }
    out
}

/// Transpose x -> x^t on Mat3 coordinates; an antiautomorphism of Mat3, so a
/// Jordan automorphism of Mat3(F)+.
pub fn transpose_operator() -> Matrix<C> {
    let mut out = Matrix::zero(9, 9, &C::zero());
    for r in 0..3 {
        for c in 0..3 {
            *out.at_mut(c * 3 + r, r * 3 + c) = C::one();
        }
    }
    out
}

/// The nine Pauli lines b^i c^j together with their Z3^2 degrees; the eight
/// with (i,j) != (0,0) span the trace-zero part.
pub fn pauli_basis() -> Vec<(Matrix<C>, (u64, u64))> {
    let (b, c) = pauli_pair();
    let mut out = Vec::new();
    for i in 0..3u64 {
        for j in 0..3u64 {
            let mut m = Matrix::identity(3, &C::one());
            for _ in 0..i {
                m = m.mul(&b);
            }
            for _ in 0..j {
                m = m.mul(&c);
            }
            out.push((m, (i, j)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::{hurwitz_small, split_octonions, SmallKind};

    #[test]
    fn mat3_plus_sane() {
        let j = mat3_plus();
        // commutativity and unit
        for i in 0..9 {
            for k in 0..9 {
                assert_eq!(j.mult[i][k], j.mult[k][i]);
            }
            assert_eq!(j.product(&j.unit, &basis_vec(9, i)), basis_vec(9, i));
        }
        assert!(j.t_j(&j.unit).is_one());
        // E1 E1 = E1, E1 E2 = 0
        let e1 = basis_vec(9, 0);
        let e2 = basis_vec(9, 4);
        assert_eq!(j.product(&e1, &e1), e1);
        assert!(j.product(&e1, &e2).iter().all(|x| x.is_zero()));
        // star closes on J0
        let j0 = j.j0();
        assert_eq!(j0.dim(), 8);
        for x in j0.basis_vectors().iter() {
            for y in j0.basis_vectors().iter() {
                assert!(j0.contains(&j.star(x, y)));
            }
        }
    }

    #[test]
    fn h3_dimensions_and_jordan_identity() {
        let alb = h3(&split_octonions());
        assert_eq!(alb.dim, 27);
        let j9 = h3(&hurwitz_small(SmallKind::Binarion));
        assert_eq!(j9.dim, 9);
        // Jordan identity x^2 (y x) = (x^2 y) x on all basis pairs
        for j in [&j9, &alb] {
            for a in 0..j.dim {
                let x = basis_vec(j.dim, a);
                let x2 = j.product(&x, &x);
                for b in 0..j.dim {
                    let y = basis_vec(j.dim, b);
                    let lhs = j.product(&x2, &j.product(&y, &x));
                    let rhs = j.product(&j.product(&x2, &y), &x);
                    assert_eq!(lhs, rhs, "jordan identity fails at ({a},{b})");
                }
            }
        }
    }

    #[test]
    fn h3_binarion_matches_mat3_plus() {
        // H3(F+F) is isomorphic to Mat3(F)+; same derivation dimension
        let j9 = h3(&hurwitz_small(SmallKind::Binarion));
        assert_eq!(j9.d_span().dim(), 8);
        assert_eq!(mat3_plus().d_span().dim(), 8);
    }

    #[test]
    fn d_xy_properties_albert() {
        let alb = h3(&split_octonions());
        let x = basis_vec(27, 3);
        assert!(alb.d_xy(&x, &x).is_zero_matrix());
        let d = alb.d_xy(&x, &basis_vec(27, 12));
        assert!(alb.is_derivation(&d));
        assert_eq!(alb.d_span().dim(), 52);
    }

    #[test]
    fn der_basis_certified() {
        let alb = h3(&split_octonions());
        let der = alb.der_basis().unwrap();
        assert_eq!(der.dim(), 52);
        let j9 = mat3_plus();
        assert_eq!(j9.der_basis().unwrap().dim(), 8);
        // der = D-span by construction; containment is the certificate
        assert_eq!(j9.d_span(), j9.der_basis().unwrap());
    }

    #[test]
    fn mat3_gradings() {
        let j = mat3_plus();
        // Z^2 grading additivity: reuse DegreeMap against the Jordan table
        let dm = mat3_z2_degrees();
        for i in 0..9 {
            for k in 0..9 {
                let target_t = dm.degrees[i].1[0] + dm.degrees[k].1[0];
                let target_u = dm.degrees[i].1[1] + dm.degrees[k].1[1];
                for (idx, v) in j.mult[i][k].iter().enumerate() {
                    if !v.is_zero() {
                        assert_eq!(dm.degrees[idx].1, vec![target_t, target_u]);
                    }
                }
            }
        }
        // deg E12 + deg E23 = deg E13
        assert_eq!(dm.degrees[1].1[0] + dm.degrees[5].1[0], dm.degrees[2].1[0]);
        assert_eq!(dm.degrees[1].1[1] + dm.degrees[5].1[1], dm.degrees[2].1[1]);
        // c b = w b c and the conjugation automorphisms
        let (b, c) = pauli_pair();
        assert_eq!(c.mul(&b), b.mul(&c).scale(&C::omega()));
        let h1 = conj_operator(&b);
        let h2 = conj_operator(&c);
        assert!(j.is_automorphism(&h1));
        assert!(j.is_automorphism(&h2));
        assert_eq!(h1.pow_until_identity(4), Some(3));
        assert_eq!(h2.pow_until_identity(4), Some(3));
        // nine Pauli lines of dimension one cover Mat3, simultaneous
        // eigenvectors of Ad(b), Ad(c)
        let pb = pauli_basis();
        let mut vecs = Vec::new();
        for (m, (i, jdeg)) in pb.iter() {
            let flat: Vec<C> =
                (0..9).map(|t| m.at(t / 3, t % 3).clone()).collect();
            let h1f = h1.apply(&flat);
            let h2f = h2.apply(&flat);
            // b c b^{-1} = w^{-1} c and c b c^{-1} = w b
            let ev1 = C::omega().pow((3 - *jdeg) % 3);
            let ev2 = C::omega().pow(*i);
            for t in 0..9 {
                assert_eq!(h1f[t], ev1.mul(&flat[t]));
                assert_eq!(h2f[t], ev2.mul(&flat[t]));
            }
            vecs.push(flat);
        }
        assert_eq!(Subspace::from_vectors(9, vecs, &C::zero()).dim(), 9);
        // transpose operator is a Jordan automorphism
        assert!(j.is_automorphism(&transpose_operator()));
    }
}

//! The symmetric construction g(S, S') = tri(S) + tri(S') + sum_i i_i(S x S')
//! for S the para-octonions and S' = p(F+F), with the triality automorphism,
//! the (f, f') extensions, the order-4 maps Psi_i, and the 5-grading torus.

use super::{ModelError, ModelHandle};
use crate::composition::{t_xy, CompositionAlgebra};
use crate::cyclotomic::CycloScalar;
use crate::exactlin::{Matrix, SpanSolver};
use crate::liealg::TensorBuilder;

type C = CycloScalar;

/// Slot shift applied when reading the Z^4 degree table.
pub const GAMMA3_SLOT_SHIFT: usize = 1;

pub struct ElduqueModel {
    pub handle: ModelHandle,
    pub s8: CompositionAlgebra,
    pub s2: CompositionAlgebra,
    /// triality basis operators for S8 (28 triples) and the generating pairs
    pub tri8_ops: Vec<[Matrix<C>; 3]>,
    pub tri8_pairs: Vec<(usize, usize)>,
    pub tri2_ops: Vec<[Matrix<C>; 3]>,
    tri8_sol: SpanSolver<C>,
    tri2_sol: SpanSolver<C>,
}

fn flatten3(t: &[Matrix<C>; 3]) -> Vec<C> {
    let n = t[0].rows;
    let mut v = Vec::with_capacity(3 * n * n);
    for m in t.iter() {
        for r in 0..n {
            for c in 0..n {
                v.push(m.at(r, c).clone());
            }
        }
    }
    v
}

fn shift_triple(t: &[Matrix<C>; 3], i: usize) -> [Matrix<C>; 3] {
    // theta(d0,d1,d2) = (d2,d0,d1); apply i times
    let mut out = t.clone();
    for _ in 0..(i % 3) {
        out = [out[2].clone(), out[0].clone(), out[1].clone()];
    }
    out
}

impl ElduqueModel {
    pub fn n_tri8(&self) -> usize {
        self.tri8_ops.len()
    }
    pub fn idx_tri8(&self, k: usize) -> usize {
        k
    }
    pub fn idx_tri2(&self, k: usize) -> usize {
        self.n_tri8() + k
    }
    pub fn idx_iota(&self, slot: usize, x: usize, y: usize) -> usize {
        self.n_tri8() + 2 + slot * 16 + x * 2 + y
    }

    /// The paraunit tensor element iota_0(1 x 1') as a coordinate vector.
    pub fn iota0_unit_tensor(&self) -> Vec<C> {
        let mut v = vec![C::zero(); self.handle.algebra.dim];
        for x in 0..2 {
            for y in 0..2 {
                v[self.idx_iota(0, x, y)] = C::one();
            }
        }
        v
    }

    /// Extension (f, f') of automorphisms of S8 and S2.
    pub fn pair_aut(&self, f: &Matrix<C>, fp: &Matrix<C>) -> Matrix<C> {
        let dim = self.handle.algebra.dim;
        let finv = f.inverse().expect("f invertible");
        let fpinv = fp.inverse().expect("f' invertible");
        let mut out = Matrix::zero(dim, dim, &C::zero());
        for (k, t) in self.tri8_ops.iter().enumerate() {
            let conj = [
                f.mul(&t[0]).mul(&finv),
                f.mul(&t[1]).mul(&finv),
                f.mul(&t[2]).mul(&finv),
            ];
            let coords = self
                .tri8_sol
                .express(&flatten3(&conj))
                .expect("conjugated triple stays in tri(S8)");
            for (r, c) in coords.into_iter().enumerate() {
                if !c.is_zero() {
                    *out.at_mut(self.idx_tri8(r), self.idx_tri8(k)) = c;
                }
            }
        }
        for (k, t) in self.tri2_ops.iter().enumerate() {
            let conj = [
                fp.mul(&t[0]).mul(&fpinv),
                fp.mul(&t[1]).mul(&fpinv),
                fp.mul(&t[2]).mul(&fpinv),
            ];
            let coords = self
                .tri2_sol
                .express(&flatten3(&conj))
                .expect("conjugated triple stays in tri(S2)");
            for (r, c) in coords.into_iter().enumerate() {
                if !c.is_zero() {
                    *out.at_mut(self.idx_tri2(r), self.idx_tri2(k)) = c;
                }
            }
        }
        for slot in 0..3 {
            for x in 0..8 {
                for y in 0..2 {
                    let col = self.idx_iota(slot, x, y);
                    for xr in 0..8 {
                        let cf = f.at(xr, x);
                        if cf.is_zero() {
                            continue;
                        }
                        for yr in 0..2 {
                            let cg = fp.at(yr, y);
                            if !cg.is_zero() {
                                *out.at_mut(self.idx_iota(slot, xr, yr), col) = cf.mul(cg);
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// The triality automorphism: (d0,d1,d2) -> (d2,d0,d1) on both tri parts
    /// and iota_i -> iota_{i+1}, the slot shift that is equivariant for
    /// [d, iota_i(x ⊗ x')] = iota_i(d_i(x) ⊗ x') with that cycle.
    pub fn theta3(&self) -> Matrix<C> {
        let dim = self.handle.algebra.dim;
        let mut out = Matrix::zero(dim, dim, &C::zero());
        for (k, t) in self.tri8_ops.iter().enumerate() {
            let coords = self
                .tri8_sol
                .express(&flatten3(&shift_triple(t, 1)))
                .expect("shift stays in tri(S8)");
            for (r, c) in coords.into_iter().enumerate() {
                if !c.is_zero() {
                    *out.at_mut(self.idx_tri8(r), self.idx_tri8(k)) = c;
                }
            }
        }
        for (k, t) in self.tri2_ops.iter().enumerate() {
            let coords = self
                .tri2_sol
                .express(&flatten3(&shift_triple(t, 1)))
                .expect("shift stays in tri(S2)");
            for (r, c) in coords.into_iter().enumerate() {
                if !c.is_zero() {
                    *out.at_mut(self.idx_tri2(r), self.idx_tri2(k)) = c;
                }
            }
        }
        for slot in 0..3 {
            for x in 0..8 {
                for y in 0..2 {
                    *out.at_mut(self.idx_iota((slot + 1) % 3, x, y), self.idx_iota(slot, x, y)) =
                        C::one();
                }
            }
        }
        out
    }

    /// Psi_i: identity on tri and iota_i, multiplies iota_{i+1} by i eta and
    /// iota_{i+2} by -i eta on the S2 slot, with eta = diag(1, -1).
    pub fn psi_map(&self, i: usize) -> Matrix<C> {
        let dim = self.handle.algebra.dim;
        let mut out = Matrix::identity(dim, &C::one());
        let im = C::i();
        for x in 0..8 {
            for y in 0..2 {
                let eta_sign = if y == 0 { C::one() } else { C::from_int(-1) };
                let c1 = self.idx_iota((i + 1) % 3, x, y);
                *out.at_mut(c1, c1) = im.mul(&eta_sign);
                let c2 = self.idx_iota((i + 2) % 3, x, y);
                *out.at_mut(c2, c2) = im.neg().mul(&eta_sign);
            }
        }
        out
    }

    /// The grading derivation of the 5-grading: ad of -i iota_0(1 x 1').
    /// The -i normalization moves the raw eigenvalues {0, ±i, ±2i} of
    /// ad(iota_0(1 x 1')) onto the integers {0, ±1, ±2}; the displayed
    /// eigenvectors nu_{+-} and S_{+-} carry the matching i-factors.
    pub fn grading_derivation(&self) -> Matrix<C> {
        let v: Vec<C> = self
            .iota0_unit_tensor()
            .into_iter()
            .map(|c| c.mul(&C::i().neg()))
            .collect();
        self.handle.algebra.ad(&v)
    }

    /// Order-36 sample t of the torus producing the 5-grading: acts by
    /// zeta^n on the eigenvalue-n space of the grading derivation.
    pub fn t_sample(&self, zeta_pow: i64) -> Result<Matrix<C>, ModelError> {
        let d = self.grading_derivation();
        let dim = self.handle.algebra.dim;
        let mut cols: Vec<Vec<C>> = Vec::with_capacity(dim);
        let mut evs: Vec<i64> = Vec::new();
        for n in -2i64..=2 {
            let es = d.eigenspace(&C::from_int(n));
            for v in es.basis_vectors() {
                cols.push(v);
                evs.push(n);
            }
        }
        if cols.len() != dim {
            return Err(ModelError::Ingredient(format!(
                "5-grading eigenspaces fill {} of {}",
                cols.len(),
                dim
            )));
        }
        let basis = Matrix::from_rows(cols).transpose();
        let inv = basis
            .inverse()
            .ok_or_else(|| ModelError::Ingredient("5-grading eigenbasis singular".into()))?;
        let mut diag = Matrix::zero(dim, dim, &C::zero());
        for (k, n) in evs.iter().enumerate() {
            *diag.at_mut(k, k) = C::root_of_unity(zeta_pow * n);
        }
        Ok(basis.mul(&diag).mul(&inv))
    }

    /// Degrees of the Z^4-grading from the explicit table: a_i for e1, g_i
    /// for u_i, the displayed mixed degrees for u_{i+1}, u_{i+2}, negated on
    /// the v side; zero on tri(S2); sums on tri(S8).
    ///
    /// See GAMMA3_SLOT_SHIFT for the subscript-reading convention.
    pub fn z4_degrees(&self) -> Vec<[i64; 4]> {
        let a = [[-1i64, -1, 0, 0], [1, 0, 0, 0], [0, 1, 0, 0]]; // a_0, a_1, a_2
        let g = [[0i64, 0, -1, -1], [0, 0, 1, 0], [0, 0, 0, 1]]; // g_0, g_1, g_2
        let add = |x: [i64; 4], y: [i64; 4]| [x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3]];
        let neg = |x: [i64; 4]| [-x[0], -x[1], -x[2], -x[3]];
        // S8 basis order: e1 e2 u1 u2 u3 v1 v2 v3 with u_0 := u3, v_0 := v3
        let u_idx = |j: usize| match j % 3 {
            0 => 4,
            1 => 2,
            _ => 3,
        };
        let v_idx = |j: usize| match j % 3 {
            0 => 7,
            1 => 5,
            _ => 6,
        };
        // The table's iota-subscript arithmetic is read with the slot shift
        // that reproduces the displayed induced matrices of Psi_0, Psi_1,
        // Psi_2; the additivity scan validates every shift, the matrices pin
        // this one.
        let sh = |i: usize| (i + GAMMA3_SLOT_SHIFT) % 3;
        let mut deg_iota = vec![[[0i64; 4]; 8]; 3];
        for i in 0..3 {
            deg_iota[i][0] = a[sh(i)];
            deg_iota[i][1] = neg(a[sh(i)]);
            deg_iota[i][u_idx(sh(i))] = g[sh(i)];
            deg_iota[i][v_idx(sh(i))] = neg(g[sh(i)]);
            deg_iota[i][u_idx(sh(i) + 1)] = add(a[(sh(i) + 2) % 3], g[(sh(i) + 1) % 3]);
            deg_iota[i][v_idx(sh(i) + 1)] = neg(add(a[(sh(i) + 2) % 3], g[(sh(i) + 1) % 3]));
            deg_iota[i][u_idx(sh(i) + 2)] = add(neg(a[(sh(i) + 1) % 3]), g[(sh(i) + 2) % 3]);
            deg_iota[i][v_idx(sh(i) + 2)] = neg(add(neg(a[(sh(i) + 1) % 3]), g[(sh(i) + 2) % 3]));
        }
        let dim = self.handle.algebra.dim;
        let mut out = vec![[0i64; 4]; dim];
        for (k, (p, q)) in self.tri8_pairs.iter().enumerate() {
            out[self.idx_tri8(k)] = add(deg_iota[0][*p], deg_iota[0][*q]);
        }
        for slot in 0..3 {
            for x in 0..8 {
                for y in 0..2 {
                    out[self.idx_iota(slot, x, y)] = deg_iota[slot][x];
                }
            }
        }
        out
    }

    /// Diagonal torus sample for the Z^4-grading: zeta^{<w, deg>}.
    pub fn t4_sample(&self, w: [i64; 4]) -> Matrix<C> {
        let degs = self.z4_degrees();
        let dim = self.handle.algebra.dim;
        let mut m = Matrix::zero(dim, dim, &C::zero());
        for (k, d) in degs.iter().enumerate() {
            let e = w[0] * d[0] + w[1] * d[1] + w[2] * d[2] + w[3] * d[3];
            *m.at_mut(k, k) = C::root_of_unity(e);
        }
        m
    }
}

/// Build g(S8, S2) for the para-octonions and p(F+F).
pub fn elduque() -> Result<ElduqueModel, ModelError> {
    let s8 = crate::composition::para(&crate::composition::split_octonions());
    let s2 = crate::composition::para(&crate::composition::hurwitz_small(
        crate::composition::SmallKind::Binarion,
    ));
    let e8 = |k: usize| {
        let mut v = vec![C::zero(); 8];
        v[k] = C::one();
        v
    };
    let e2 = |k: usize| {
        let mut v = vec![C::zero(); 2];
        v[k] = C::one();
        v
    };
    // tri(S8) basis: t_{b_p, b_q} for p < q
    let mut tri8_ops = Vec::new();
    let mut tri8_pairs = Vec::new();
    let mut tri8_labels = Vec::new();
    for p in 0..8 {
        for q in (p + 1)..8 {
            tri8_ops.push(t_xy(&s8, &e8(p), &e8(q)));
            tri8_pairs.push((p, q));
            tri8_labels.push(format!("t({},{})", s8.labels[p], s8.labels[q]));
        }
    }
    let tri8_sol = SpanSolver::new(tri8_ops.iter().map(flatten3).collect(), &C::zero())
        .ok_or_else(|| ModelError::Ingredient("t_xy family dependent on S8".into()))?;
    // tri(S2): (D,-D,0) and (D,0,-D) with D = diag(1,-1)
    let dmat = {
        let mut m = Matrix::zero(2, 2, &C::zero());
        *m.at_mut(0, 0) = C::one();
        *m.at_mut(1, 1) = C::from_int(-1);
        m
    };
    let z2 = Matrix::zero(2, 2, &C::zero());
    let tri2_ops = vec![
        [dmat.clone(), dmat.scale(&C::from_int(-1)), z2.clone()],
        [dmat.clone(), z2.clone(), dmat.scale(&C::from_int(-1))],
    ];
    let tri2_labels = vec!["t2(1,-1,0)".to_string(), "t2(1,0,-1)".to_string()];
    let tri2_sol = SpanSolver::new(tri2_ops.iter().map(flatten3).collect(), &C::zero())
        .ok_or_else(|| ModelError::Ingredient("tri(S2) basis dependent".into()))?;

    let n8 = tri8_ops.len();
    let dim = n8 + 2 + 48;
    let idx_tri2 = |k: usize| n8 + k;
    let idx_iota = |slot: usize, x: usize, y: usize| n8 + 2 + slot * 16 + x * 2 + y;

    let mut labels = tri8_labels;
    labels.extend(tri2_labels);
    for slot in 0..3 {
        for x in 0..8 {
            for y in 0..2 {
                labels.push(format!("i{}({}⊗{}')", slot, s8.labels[x], s2.labels[y]));
            }
        }
    }

    let mut b = TensorBuilder::new(dim, labels, C::one());

    // [tri(S8), tri(S8)]: componentwise commutators
    for p in 0..n8 {
        for q in (p + 1)..n8 {
            let tp = &tri8_ops[p];
            let tq = &tri8_ops[q];
            let comm = [
                tp[0].mul(&tq[0]).sub(&tq[0].mul(&tp[0])),
                tp[1].mul(&tq[1]).sub(&tq[1].mul(&tp[1])),
                tp[2].mul(&tq[2]).sub(&tq[2].mul(&tp[2])),
            ];
            let coords = tri8_sol
                .express(&flatten3(&comm))
                .ok_or_else(|| ModelError::Ingredient("tri(S8) not closed".into()))?;
            for (t, c) in coords.into_iter().enumerate() {
                b.add(p, q, t, c);
            }
        }
    }
    // tri(S2) is abelian and commutes with tri(S8): nothing to add.

    // [t, iota_slot(x,y)] = iota_slot(t_slot(x) ⊗ y)
    for p in 0..n8 {
        for slot in 0..3 {
            let op = &tri8_ops[p][slot];
            for x in 0..8 {
                for y in 0..2 {
                    let j = idx_iota(slot, x, y);
                    for xr in 0..8 {
                        let c = op.at(xr, x);
                        if !c.is_zero() {
                            b.add(p, j, idx_iota(slot, xr, y), c.clone());
                        }
                    }
                }
            }
        }
    }
    for p in 0..2 {
        for slot in 0..3 {
            let op = &tri2_ops[p][slot];
            for x in 0..8 {
                for y in 0..2 {
                    let j = idx_iota(slot, x, y);
                    for yr in 0..2 {
                        let c = op.at(yr, y);
                        if !c.is_zero() {
                            b.add(idx_tri2(p), j, idx_iota(slot, x, yr), c.clone());
                        }
                    }
                }
            }
        }
    }

    // iota-iota brackets
    for slot_i in 0..3 {
        for x in 0..8 {
            for y in 0..2 {
                let i = idx_iota(slot_i, x, y);
                for slot_j in 0..3 {
                    for xx in 0..8 {
                        for yy in 0..2 {
                            let j = idx_iota(slot_j, xx, yy);
                            if j <= i {
                                continue;
                            }
                            if slot_j == slot_i {
                                // q'(y,yy) th^slot(t_{x,xx}) + q(x,xx) th'^slot(t'_{y,yy})
                                let qp = s2.polar(&e2(y), &e2(yy));
                                if !qp.is_zero() {
                                    let t = t_xy(&s8, &e8(x), &e8(xx));
                                    let coords = tri8_sol
                                        .express(&flatten3(&shift_triple(&t, slot_i)))
                                        .ok_or_else(|| {
                                            ModelError::Ingredient("t_xy escapes tri".into())
                                        })?;
                                    for (t2, c) in coords.into_iter().enumerate() {
                                        b.add(i, j, t2, qp.mul(&c));
                                    }
                                }
                                let q8 = s8.polar(&e8(x), &e8(xx));
                                if !q8.is_zero() {
                                    let t = t_xy(&s2, &e2(y), &e2(yy));
                                    let coords = tri2_sol
                                        .express(&flatten3(&shift_triple(&t, slot_i)))
                                        .ok_or_else(|| {
                                            ModelError::Ingredient("t'_xy escapes tri".into())
                                        })?;
                                    for (t2, c) in coords.into_iter().enumerate() {
                                        b.add(i, j, idx_tri2(t2), q8.mul(&c));
                                    }
                                }
                            } else if slot_j == (slot_i + 1) % 3 {
                                // iota_{i+2}((x*xx) ⊗ (y*yy))
                                let prod8 = s8.product(&e8(x), &e8(xx));
                                let prod2 = s2.product(&e2(y), &e2(yy));
                                for (xr, cx) in prod8.iter().enumerate() {
                                    if cx.is_zero() {
                                        continue;
                                    }
                                    for (yr, cy) in prod2.iter().enumerate() {
                                        if !cy.is_zero() {
                                            b.add(
                                                i,
                                                j,
                                                idx_iota((slot_i + 2) % 3, xr, yr),
                                                cx.mul(cy),
                                            );
                                        }
                                    }
                                }
                            } else {
                                // slot_j = slot_i + 2: reverse the adjacent rule
                                let prod8 = s8.product(&e8(xx), &e8(x));
                                let prod2 = s2.product(&e2(yy), &e2(y));
                                for (xr, cx) in prod8.iter().enumerate() {
                                    if cx.is_zero() {
                                        continue;
                                    }
                                    for (yr, cy) in prod2.iter().enumerate() {
                                        if !cy.is_zero() {
                                            b.add(
                                                i,
                                                j,
                                                idx_iota((slot_j + 2) % 3, xr, yr),
                                                cx.mul(cy).neg(),
                                            );
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    let algebra = b.finish();
    let handle = ModelHandle::new("elduque-s8-s2", algebra);
    Ok(ElduqueModel {
        handle,
        s8,
        s2,
        tri8_ops,
        tri8_pairs,
        tri2_ops,
        tri8_sol,
        tri2_sol,
    })
}

/// The S2-side flip e1 <-> e2 (conjugation of F+F), an automorphism of S2.
pub fn s2_flip() -> Matrix<C> {
    let mut m = Matrix::zero(2, 2, &C::zero());
    *m.at_mut(0, 1) = C::one();
    *m.at_mut(1, 0) = C::one();
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::{fixed_subspace, order_of};

    #[test]
    fn elduque_dims_and_jacobi() {
        let mut m = elduque().unwrap();
        assert_eq!(m.handle.algebra.dim, 78);
        assert_eq!(m.n_tri8(), 28);
        m.handle.algebra.check_jacobi().unwrap();
    }

    #[test]
    fn named_automorphisms() {
        let m = elduque().unwrap();
        let alg = &m.handle.algebra;
        let th = m.theta3();
        alg.check_automorphism(&th).unwrap();
        assert_eq!(order_of(&th, 4).unwrap(), 3);
        let id8 = Matrix::identity(8, &C::one());
        let rho = m.pair_aut(&id8, &s2_flip());
        alg.check_automorphism(&rho).unwrap();
        assert_eq!(order_of(&rho, 4).unwrap(), 2);
        assert_eq!(fixed_subspace(&rho).dim(), 52);
        let frame = crate::composition::OctonionFrame::new().unwrap();
        for k in 0..3 {
            let fk = m.pair_aut(&frame.grading_involution(k), &Matrix::identity(2, &C::one()));
            alg.check_automorphism(&fk).unwrap();
            assert_eq!(fk.mul(&th), th.mul(&fk));
        }
        for i in 0..3 {
            let psi = m.psi_map(i);
            alg.check_automorphism(&psi).unwrap();
            assert_eq!(order_of(&psi, 8).unwrap(), 4);
        }
    }

    #[test]
    fn five_grading_structure() {
        let m = elduque().unwrap();
        let d = m.grading_derivation();
        m.handle.algebra.check_derivation(&d).unwrap();
        let dims: Vec<usize> =
            (-2i64..=2).map(|n| d.eigenspace(&C::from_int(n)).dim()).collect();
        assert_eq!(dims, vec![8, 16, 30, 16, 8]);
        let t = m.t_sample(1).unwrap();
        m.handle.algebra.check_automorphism(&t).unwrap();
        assert_eq!(order_of(&t, 40).unwrap(), 36);
    }

    #[test]
    fn z4_degree_table_is_a_grading() {
        let m = elduque().unwrap();
        let degs = m.z4_degrees();
        let alg = &m.handle.algebra;
        for i in 0..78 {
            for j in (i + 1)..78 {
                let want = [
                    degs[i][0] + degs[j][0],
                    degs[i][1] + degs[j][1],
                    degs[i][2] + degs[j][2],
                    degs[i][3] + degs[j][3],
                ];
                for (k, c) in alg.basis_bracket(i, j) {
                    if !c.is_zero() {
                        assert_eq!(degs[*k as usize], want, "additivity at ({i},{j})");
                    }
                }
            }
        }
        for w in [[1i64, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]] {
            alg.check_automorphism(&m.t4_sample(w)).unwrap();
        }
    }
}

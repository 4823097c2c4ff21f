//! Adams' model: sl(W)^3 + (W x W x W) + (W* x W* x W*) for W of dimension
//! three, with the slot-shift automorphism H2, the Z3-grading automorphism
//! H1, and the GL(W)-extensions Psi(f) whose kernel is the cube roots of 1.

use super::{ModelError, ModelHandle};
use crate::cyclotomic::CycloScalar;
use crate::exactlin::{Matrix, SpanSolver};
use crate::liealg::TensorBuilder;

type C = CycloScalar;

pub const N_SL: usize = 24;
pub const N_T: usize = 27;

/// sl3 basis per slot: E12 E13 E21 E23 E31 E32, E11-E22, E22-E33.
fn sl3_basis() -> (Vec<Matrix<C>>, Vec<String>) {
    let mut ops = Vec::new();
    let mut labels = Vec::new();
    for r in 0..3 {
        for c in 0..3 {
            if r != c {
                let mut m = Matrix::zero(3, 3, &C::zero());
                *m.at_mut(r, c) = C::one();
                ops.push(m);
                labels.push(format!("E{}{}", r + 1, c + 1));
            }
        }
    }
    for d in 0..2 {
        let mut m = Matrix::zero(3, 3, &C::zero());
        *m.at_mut(d, d) = C::one();
        *m.at_mut(d + 1, d + 1) = C::from_int(-1);
        ops.push(m);
        labels.push(format!("H{}", d + 1));
    }
    (ops, labels)
}

pub fn idx_sl(slot: usize, op: usize) -> usize {
    slot * 8 + op
}
pub fn idx_w(a: usize, b: usize, c: usize) -> usize {
    N_SL + 9 * a + 3 * b + c
}
pub fn idx_wd(a: usize, b: usize, c: usize) -> usize {
    N_SL + N_T + 9 * a + 3 * b + c
}

/// Levi-Civita epsilon on three indices in {0,1,2}.
fn eps(a: usize, b: usize, c: usize) -> i64 {
    super::perm_sign(&[a, b, c]).unwrap_or(0)
}

pub struct AdamsModel {
    pub handle: ModelHandle,
    sl_ops: Vec<Matrix<C>>,
    sl_sol: SpanSolver<C>,
}

impl AdamsModel {
    /// H1: omega^i on the i-th part of the Z3-grading.
    pub fn h1(&self) -> Matrix<C> {
        let w = C::omega();
        let mut m = Matrix::zero(78, 78, &C::zero());
        for k in 0..N_SL {
            *m.at_mut(k, k) = C::one();
        }
        for k in N_SL..N_SL + N_T {
            *m.at_mut(k, k) = w.clone();
        }
        for k in N_SL + N_T..78 {
            *m.at_mut(k, k) = w.mul(&w);
        }
        m
    }

    /// H2: u x v x w -> v x w x u, slots shifting accordingly.
    pub fn h2(&self) -> Matrix<C> {
        let mut m = Matrix::zero(78, 78, &C::zero());
        // operator in slot s moves to slot s + 2 (H2 (A,B,C) H2^-1 = (B,C,A))
        for s in 0..3 {
            for op in 0..8 {
                *m.at_mut(idx_sl((s + 2) % 3, op), idx_sl(s, op)) = C::one();
            }
        }
        for a in 0..3 {
            for b in 0..3 {
                for c in 0..3 {
                    *m.at_mut(idx_w(b, c, a), idx_w(a, b, c)) = C::one();
                    *m.at_mut(idx_wd(b, c, a), idx_wd(a, b, c)) = C::one();
                }
            }
        }
        m
    }

    /// Psi(f) for f in GL(W): f x f x f on W-cubes, conjugation on each
    /// sl-slot, det(f) (dual f) per slot on the dual cubes.
    pub fn psi(&self, f: &Matrix<C>) -> Matrix<C> {
        let finv = f.inverse().expect("f invertible");
        let det = super::det3(f);
        let mut m = Matrix::zero(78, 78, &C::zero());
        for s in 0..3 {
            for (op, mat) in self.sl_ops.iter().enumerate() {
                let conj = f.mul(mat).mul(&finv);
                let coords = self.sl_sol.express(&flat3(&conj)).expect("conjugation stays sl3");
                for (t, cc) in coords.into_iter().enumerate() {
                    if !cc.is_zero() {
                        *m.at_mut(idx_sl(s, t), idx_sl(s, op)) = cc;
                    }
                }
            }
        }
        for a in 0..3 {
            for b in 0..3 {
                for c in 0..3 {
                    for a2 in 0..3 {
                        let fa = f.at(a2, a);
                        if fa.is_zero() {
                            continue;
                        }
                        for b2 in 0..3 {
                            let fb = f.at(b2, b);
                            if fb.is_zero() {
                                continue;
                            }
                            for c2 in 0..3 {
                                let fc = f.at(c2, c);
                                if !fc.is_zero() {
                                    *m.at_mut(idx_w(a2, b2, c2), idx_w(a, b, c)) =
                                        fa.mul(&fb).mul(&fc);
                                }
                            }
                        }
                    }
                    // dual cube: det(f)^3 (e*_a o f^-1) x ... per slot
                    let d3 = det.mul(&det).mul(&det);
                    for a2 in 0..3 {
                        let fa = finv.at(a, a2);
                        if fa.is_zero() {
                            continue;
                        }
                        for b2 in 0..3 {
                            let fb = finv.at(b, b2);
                            if fb.is_zero() {
                                continue;
                            }
                            for c2 in 0..3 {
                                let fc = finv.at(c, c2);
                                if !fc.is_zero() {
                                    *m.at_mut(idx_wd(a2, b2, c2), idx_wd(a, b, c)) =
                                        d3.mul(&fa).mul(&fb).mul(&fc);
                                }
                            }
                        }
                    }
                }
            }
        }
        m
    }

    /// T_{alpha,beta} = Psi(diag(alpha, beta, 1/(alpha beta))) at roots of
    /// unity zeta^x, zeta^y.
    pub fn t_ab(&self, x: i64, y: i64) -> Matrix<C> {
        let mut d = Matrix::zero(3, 3, &C::zero());
        *d.at_mut(0, 0) = C::root_of_unity(x);
        *d.at_mut(1, 1) = C::root_of_unity(y);
        *d.at_mut(2, 2) = C::root_of_unity(-x - y);
        self.psi(&d)
    }
}

fn flat3(m: &Matrix<C>) -> Vec<C> {
    let mut v = Vec::with_capacity(9);
    for r in 0..3 {
        for c in 0..3 {
            v.push(m.at(r, c).clone());
        }
    }
    v
}

pub fn adams() -> Result<AdamsModel, ModelError> {
    let (sl_ops, sl_labels) = sl3_basis();
    let sl_sol = SpanSolver::new(sl_ops.iter().map(flat3).collect(), &C::zero())
        .ok_or_else(|| ModelError::Ingredient("sl3 basis dependent".into()))?;
    let mut labels = Vec::new();
    for s in 0..3 {
        for l in sl_labels.iter() {
            labels.push(format!("sl{}:{}", s + 1, l));
        }
    }
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                labels.push(format!("w{}{}{}", a + 1, b + 1, c + 1));
            }
        }
    }
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                labels.push(format!("w*{}{}{}", a + 1, b + 1, c + 1));
            }
        }
    }
    let mut bld = TensorBuilder::new(78, labels, C::one());

    // [sl slot s, sl slot s]: commutators; different slots commute
    for s in 0..3 {
        for p in 0..8 {
            for q in (p + 1)..8 {
                let comm = sl_ops[p].mul(&sl_ops[q]).sub(&sl_ops[q].mul(&sl_ops[p]));
                let coords = sl_sol
                    .express(&flat3(&comm))
                    .ok_or_else(|| ModelError::Ingredient("sl3 not closed".into()))?;
                for (t, c) in coords.into_iter().enumerate() {
                    bld.add(idx_sl(s, p), idx_sl(s, q), idx_sl(s, t), c);
                }
            }
        }
    }
    // [sl slot s, w/w* cubes]: natural action on the s-th slot
    for s in 0..3 {
        for (p, op) in sl_ops.iter().enumerate() {
            let i = idx_sl(s, p);
            for a in 0..3 {
                for b in 0..3 {
                    for c in 0..3 {
                        let j = idx_w(a, b, c);
                        let cur = [a, b, c];
                        for t in 0..3 {
                            let v = op.at(t, cur[s]);
                            if v.is_zero() {
                                continue;
                            }
                            let mut img = cur;
                            img[s] = t;
                            bld.add(i, j, idx_w(img[0], img[1], img[2]), v.clone());
                        }
                        let jd = idx_wd(a, b, c);
                        for t in 0..3 {
                            // dual: e*_x -> -sum op[x][t] e*_t
                            let v = op.at(cur[s], t);
                            if v.is_zero() {
                                continue;
                            }
                            let mut img = cur;
                            img[s] = t;
                            bld.add(i, jd, idx_wd(img[0], img[1], img[2]), v.neg());
                        }
                    }
                }
            }
        }
    }
    // [x u_i, x v_i] = x (u_i wedge v_i) with u wedge v = det(u, v, -)
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                let i = idx_w(a, b, c);
                for d in 0..3 {
                    for e2 in 0..3 {
                        for f in 0..3 {
                            let j = idx_w(d, e2, f);
                            if j <= i {
                                continue;
                            }
                            for g in 0..3 {
                                let s1 = eps(a, d, g);
                                if s1 == 0 {
                                    continue;
                                }
                                for h in 0..3 {
                                    let s2 = eps(b, e2, h);
                                    if s2 == 0 {
                                        continue;
                                    }
                                    for k in 0..3 {
                                        let s3 = eps(c, f, k);
                                        if s3 != 0 {
                                            bld.add(
                                                i,
                                                j,
                                                idx_wd(g, h, k),
                                                C::from_int(s1 * s2 * s3),
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
    // [x f_i, x g_i] = x (f_i wedge g_i) landing back in the W cube
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                let i = idx_wd(a, b, c);
                for d in 0..3 {
                    for e2 in 0..3 {
                        for f in 0..3 {
                            let j = idx_wd(d, e2, f);
                            if j <= i {
                                continue;
                            }
                            for g in 0..3 {
                                let s1 = eps(a, d, g);
                                if s1 == 0 {
                                    continue;
                                }
                                for h in 0..3 {
                                    let s2 = eps(b, e2, h);
                                    if s2 == 0 {
                                        continue;
                                    }
                                    for k in 0..3 {
                                        let s3 = eps(c, f, k);
                                        if s3 != 0 {
                                            bld.add(
                                                i,
                                                j,
                                                idx_w(g, h, k),
                                                C::from_int(s1 * s2 * s3),
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
    // [x f_i, x u_i] = sum_k prod_{i != k} f_i(u_i) (f_k(-) u_k - (1/3) f_k(u_k) id)_k
    let third = C::from_ratio(1, 3);
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                let i = idx_wd(a, b, c); // f = e*_a x e*_b x e*_c
                let fidx = [a, b, c];
                for d in 0..3 {
                    for e2 in 0..3 {
                        for f in 0..3 {
                            let j = idx_w(d, e2, f); // u = e_d x e_e x e_f
                            let uidx = [d, e2, f];
                            for k in 0..3 {
                                // prefactor prod over other slots of delta(f_i, u_i)
                                let others: Vec<usize> = (0..3).filter(|t| *t != k).collect();
                                if fidx[others[0]] != uidx[others[0]]
                                    || fidx[others[1]] != uidx[others[1]]
                                {
                                    continue;
                                }
                                // operator e*_{fk}(-) e_{uk} - delta/3 on slot k
                                let mut op = Matrix::zero(3, 3, &C::zero());
                                *op.at_mut(uidx[k], fidx[k]) = C::one();
                                if fidx[k] == uidx[k] {
                                    for t in 0..3 {
                                        let v = op.at(t, t).sub(&third);
                                        op.set(t, t, v);
                                    }
                                }
                                let coords = sl_sol
                                    .express(&flat3(&op))
                                    .ok_or_else(|| {
                                        ModelError::Ingredient("rank-one op escapes sl3".into())
                                    })?;
                                // builder orientation: i = dual cube, j = cube
                                for (t, cc) in coords.into_iter().enumerate() {
                                    bld.add(i, j, idx_sl(k, t), cc);
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    let algebra = bld.finish();
    let handle = ModelHandle::new("adams", algebra);
    Ok(AdamsModel { handle, sl_ops, sl_sol })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::order_of;

    #[test]
    fn adams_dims_and_jacobi() {
        let mut m = adams().unwrap();
        assert_eq!(m.handle.algebra.dim, 78);
        m.handle.algebra.check_jacobi().unwrap();
    }

    #[test]
    fn named_automorphisms() {
        let m = adams().unwrap();
        let alg = &m.handle.algebra;
        let h1 = m.h1();
        alg.check_automorphism(&h1).unwrap();
        assert_eq!(order_of(&h1, 4).unwrap(), 3);
        let h2 = m.h2();
        alg.check_automorphism(&h2).unwrap();
        assert_eq!(order_of(&h2, 4).unwrap(), 3);
        // H2(u x v x w) = v x w x u on the cube part
        let mut v = vec![C::zero(); 78];
        v[idx_w(0, 1, 2)] = C::one();
        let img = h2.apply(&v);
        assert!(img[idx_w(1, 2, 0)].is_one());
        // Psi(w I) = id: the kernel of Psi
        let wi = Matrix::identity(3, &C::one()).scale(&C::omega());
        assert!(m.psi(&wi).is_identity());
        // Psi of a generic unimodular element is an automorphism
        let mut g = Matrix::identity(3, &C::one());
        *g.at_mut(0, 1) = C::from_int(2);
        *g.at_mut(1, 2) = C::from_int(-1);
        alg.check_automorphism(&m.psi(&g)).unwrap();
        // torus sample
        let t = m.t_ab(1, 0);
        alg.check_automorphism(&t).unwrap();
        assert_eq!(order_of(&t, 40).unwrap(), 36);
    }

    #[test]
    fn h1_tee_relabel_order3() {
        // H1' = H1 T_{xi,xi} has order 3 because T_{xi,xi}^3 = Psi(omega I)
        let m = adams().unwrap();
        let h1p = m.h1().mul(&m.t_ab(4, 4));
        m.handle.algebra.check_automorphism(&h1p).unwrap();
        assert_eq!(order_of(&h1p, 9).unwrap(), 3);
    }
}

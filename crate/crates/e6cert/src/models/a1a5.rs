//! The model sl(U) + sl(V) + (U x /\3 V) for dim U = 2, dim V = 6, with
//! [v x, w y] = lambda <x,y> phi_{v,w} + mu b(v,w) [x,y]; the scalars lambda,
//! mu are recovered by imposing Jacobi.

use super::{minor3, sort_wedge, triple_index, triples6, ModelError, ModelHandle};
use crate::cyclotomic::CycloScalar;
use crate::exactlin::Matrix;
use crate::liealg::{StructuredAlgebra, TensorBuilder};

type C = CycloScalar;

pub const N_SLU: usize = 3;
pub const N_SLV: usize = 35;

/// sl(U) basis: E12, E21, E11-E22 over the symplectic basis (p, q), b(p,q)=1.
pub fn idx_slu(k: usize) -> usize {
    k
}
/// sl(V) basis: 30 off-diagonal units then the 5 diagonal differences.
pub fn idx_slv(k: usize) -> usize {
    N_SLU + k
}
pub fn idx_tensor(u: usize, t: usize) -> usize {
    N_SLU + N_SLV + u * 20 + t
}

/// The element [x, y] of sl(V) with tr(f [x,y]) = <f(x), y> for all f in
/// sl(V), for x = e_I, y = e_J.
fn bracket_wedges(i_t: &[usize; 3], j_t: &[usize; 3]) -> Matrix<C> {
    let mut m = Matrix::zero(6, 6, &C::zero());
    let pair = |u: &[usize], j: &[usize; 3]| -> i64 {
        // <e_u, e_J>: coefficient of vol in e_u wedge e_J
        let word: Vec<usize> = u.iter().chain(j.iter()).cloned().collect();
        match sort_wedge(&word) {
            Some((_, s)) => s,
            None => 0,
        }
    };
    // off-diagonal: m[b][a] = <E_ab(e_I), e_J>
    for a in 0..6 {
        for b in 0..6 {
            if a == b {
                continue;
            }
            if let Some(pos) = i_t.iter().position(|&x| x == b) {
                let mut word = *i_t;
                word[pos] = a;
                if let Some((sorted, sign)) = sort_wedge(&word) {
                    let v = pair(&sorted, j_t);
                    if v != 0 {
                        *m.at_mut(b, a) = C::from_int(sign * v);
                    }
                }
            }
        }
    }
    // diagonal: p_a - p_{a+1} = <H_a(e_I), e_J>, sum p = 0
    let mut diffs = [0i64; 5];
    for a in 0..5 {
        let count = |d: usize| -> i64 {
            if i_t.contains(&d) {
                pair(i_t, j_t)
            } else {
                0
            }
        };
        diffs[a] = count(a) - count(a + 1);
    }
    // solve p from consecutive differences with zero sum
    let mut p = [C::zero(), C::zero(), C::zero(), C::zero(), C::zero(), C::zero()];
    // p_a = p_5 + sum_{t=a..4} diffs[t]
    let mut suffix = [0i64; 6];
    for a in (0..5).rev() {
        suffix[a] = suffix[a + 1] + diffs[a];
    }
    let total: i64 = suffix.iter().sum();
    let p5 = C::from_ratio(-total, 6);
    for a in 0..6 {
        p[a] = p5.add(&C::from_int(suffix[a]));
    }
    for a in 0..6 {
        *m.at_mut(a, a) = p[a].clone();
    }
    m
}

pub struct A1A5Model {
    pub handle: ModelHandle,
    pub lambda: C,
    pub mu: C,
}

impl A1A5Model {
    /// Extension f1 x f2 of f1 in SP(U) and f2 in SL(V): conjugation on the
    /// even part, f1 x (f2 . cube) on the odd part.
    pub fn pair_aut(&self, f1: &Matrix<C>, f2: &Matrix<C>) -> Matrix<C> {
        pair_aut_matrix(f1, f2)
    }
}

/// Build the pair automorphism without a model handle (shared helper).
pub fn pair_aut_matrix(f1: &Matrix<C>, f2: &Matrix<C>) -> Matrix<C> {
    let tri = triples6();
    let f1inv = f1.inverse().expect("f1 invertible");
    let f2inv = f2.inverse().expect("f2 invertible");
    let mut m = Matrix::zero(78, 78, &C::zero());
    // sl(U) conjugation in the basis E12, E21, H
    let slu = slu_basis();
    for (k, op) in slu.iter().enumerate() {
        let conj = f1.mul(op).mul(&f1inv);
        // express: traceless 2x2 -> coords (c12, c21, h)
        let coords = [conj.at(0, 1).clone(), conj.at(1, 0).clone(), conj.at(0, 0).clone()];
        for (t, c) in coords.iter().enumerate() {
            if !c.is_zero() {
                *m.at_mut(idx_slu(t), idx_slu(k)) = c.clone();
            }
        }
    }
    // sl(V) conjugation
    let slv = slv_basis();
    for (k, op) in slv.iter().enumerate() {
        let conj = f2.mul(op).mul(&f2inv);
        let coords = slv_coords(&conj);
        for (t, c) in coords.into_iter().enumerate() {
            if !c.is_zero() {
                *m.at_mut(idx_slv(t), idx_slv(k)) = c;
            }
        }
    }
    // odd part
    for u in 0..2 {
        for (ti, t) in tri.iter().enumerate() {
            let col = idx_tensor(u, ti);
            for u2 in 0..2 {
                let cu = f1.at(u2, u);
                if cu.is_zero() {
                    continue;
                }
                for (ui, ut) in tri.iter().enumerate() {
                    let mi = minor3(f2, ut, t);
                    if !mi.is_zero() {
                        *m.at_mut(idx_tensor(u2, ui), col) = cu.mul(&mi);
                    }
                }
            }
        }
    }
    m
}

fn slu_basis() -> Vec<Matrix<C>> {
    let mut e12 = Matrix::zero(2, 2, &C::zero());
    *e12.at_mut(0, 1) = C::one();
    let mut e21 = Matrix::zero(2, 2, &C::zero());
    *e21.at_mut(1, 0) = C::one();
    let mut h = Matrix::zero(2, 2, &C::zero());
    *h.at_mut(0, 0) = C::one();
    *h.at_mut(1, 1) = C::from_int(-1);
    vec![e12, e21, h]
}

fn slv_basis() -> Vec<Matrix<C>> {
    let mut out = Vec::new();
    for r in 0..6 {
        for c in 0..6 {
            if r != c {
                let mut m = Matrix::zero(6, 6, &C::zero());
                *m.at_mut(r, c) = C::one();
                out.push(m);
            }
        }
    }
    for d in 0..5 {
        let mut m = Matrix::zero(6, 6, &C::zero());
        *m.at_mut(d, d) = C::one();
        *m.at_mut(d + 1, d + 1) = C::from_int(-1);
        out.push(m);
    }
    out
}

fn slv_coords(m: &Matrix<C>) -> Vec<C> {
    // traceless 6x6 -> 30 off-diagonal + 5 H-coordinates
    let mut out = Vec::with_capacity(35);
    for r in 0..6 {
        for c in 0..6 {
            if r != c {
                out.push(m.at(r, c).clone());
            }
        }
    }
    // diag = sum h_a H_a: h coordinates from partial sums
    let mut acc = C::zero();
    for d in 0..5 {
        acc = acc.add(m.at(d, d));
        out.push(acc.clone());
    }
    out
}

fn build(lambda: &C, mu: &C) -> StructuredAlgebra<C> {
    let tri = triples6();
    let mut labels = vec!["u:E12".into(), "u:E21".into(), "u:H".into()];
    for r in 0..6 {
        for c in 0..6 {
            if r != c {
                labels.push(format!("v:E{}{}", r + 1, c + 1));
            }
        }
    }
    for d in 0..5 {
        labels.push(format!("v:H{}", d + 1));
    }
    for u in ["p", "q"] {
        for t in tri.iter() {
            labels.push(format!("{}⊗e{}{}{}", u, t[0] + 1, t[1] + 1, t[2] + 1));
        }
    }
    let mut bld = TensorBuilder::new(78, labels, C::one());
    let slu = slu_basis();
    let slv = slv_basis();
    // [sl(U), sl(U)]
    for p in 0..3 {
        for q in (p + 1)..3 {
            let comm = slu[p].mul(&slu[q]).sub(&slu[q].mul(&slu[p]));
            let coords = [comm.at(0, 1).clone(), comm.at(1, 0).clone(), comm.at(0, 0).clone()];
            for (t, c) in coords.iter().enumerate() {
                if !c.is_zero() {
                    bld.add(idx_slu(p), idx_slu(q), idx_slu(t), c.clone());
                }
            }
        }
    }
    // [sl(V), sl(V)]
    for p in 0..35 {
        for q in (p + 1)..35 {
            let comm = slv[p].mul(&slv[q]).sub(&slv[q].mul(&slv[p]));
            for (t, c) in slv_coords(&comm).into_iter().enumerate() {
                if !c.is_zero() {
                    bld.add(idx_slv(p), idx_slv(q), idx_slv(t), c);
                }
            }
        }
    }
    // [g, v x] = g(v) x for g in sl(U)
    for p in 0..3 {
        for u in 0..2 {
            for ti in 0..20 {
                let j = idx_tensor(u, ti);
                for u2 in 0..2 {
                    let c = slu[p].at(u2, u);
                    if !c.is_zero() {
                        bld.add(idx_slu(p), j, idx_tensor(u2, ti), c.clone());
                    }
                }
            }
        }
    }
    // [f, v x] = v f(x): derivation action on the wedge
    for p in 0..35 {
        let op = &slv[p];
        for u in 0..2 {
            for (ti, t) in tri.iter().enumerate() {
                let j = idx_tensor(u, ti);
                for slot in 0..3 {
                    for a in 0..6 {
                        let c = op.at(a, t[slot]);
                        if c.is_zero() {
                            continue;
                        }
                        let mut word = *t;
                        word[slot] = a;
                        if let Some((sorted, sign)) = sort_wedge(&word) {
                            bld.add(
                                idx_slv(p),
                                j,
                                idx_tensor(u, triple_index([sorted[0], sorted[1], sorted[2]])),
                                c.scale_int(sign),
                            );
                        }
                    }
                }
            }
        }
    }
    // [v x, w y] = lambda <x,y> phi_{v,w} + mu b(v,w) [x,y]
    // b(p,q) = 1; phi_{v,w} = b(v,-) w + b(w,-) v
    let phi = |vu: usize, wu: usize| -> Matrix<C> {
        // as a 2x2 matrix over basis (p,q)
        let mut m = Matrix::zero(2, 2, &C::zero());
        let b = |x: usize, y: usize| -> i64 {
            match (x, y) {
                (0, 1) => 1,
                (1, 0) => -1,
                _ => 0,
            }
        };
        for z in 0..2 {
            // phi(e_z) = b(v, e_z) w + b(w, e_z) v
            let c1 = b(vu, z);
            if c1 != 0 {
                let cur = m.at(wu, z).add(&C::from_int(c1));
                m.set(wu, z, cur);
            }
            let c2 = b(wu, z);
            if c2 != 0 {
                let cur = m.at(vu, z).add(&C::from_int(c2));
                m.set(vu, z, cur);
            }
        }
        m
    };
    for vu in 0..2 {
        for (ti, t) in tri.iter().enumerate() {
            let i = idx_tensor(vu, ti);
            for wu in 0..2 {
                for (ui, u) in tri.iter().enumerate() {
                    let j = idx_tensor(wu, ui);
                    if j <= i {
                        continue;
                    }
                    // <x, y> term
                    let word: Vec<usize> = t.iter().chain(u.iter()).cloned().collect();
                    if let Some((_, sign)) = sort_wedge(&word) {
                        let ph = phi(vu, wu);
                        let coords =
                            [ph.at(0, 1).clone(), ph.at(1, 0).clone(), ph.at(0, 0).clone()];
                        for (k, c) in coords.iter().enumerate() {
                            if !c.is_zero() {
                                bld.add(i, j, idx_slu(k), lambda.scale_int(sign).mul(c));
                            }
                        }
                    }
                    // b(v,w) [x,y] term
                    let bvw = match (vu, wu) {
                        (0, 1) => 1i64,
                        (1, 0) => -1,
                        _ => 0,
                    };
                    if bvw != 0 {
                        let bw = bracket_wedges(t, u);
                        for (k, c) in slv_coords(&bw).into_iter().enumerate() {
                            if !c.is_zero() {
                                bld.add(i, j, idx_slv(k), mu.scale_int(bvw).mul(&c));
                            }
                        }
                    }
                }
            }
        }
    }
    bld.finish()
}

/// Gauge mu = 1 and solve lambda from a designated Jacobi triple; the
/// rescaling of the odd part scales (lambda, mu) jointly, which the gauge
/// absorbs. Certified by the full Jacobi check afterwards.
pub fn solve_lambda_mu() -> Result<(C, C), ModelError> {
    let mu = C::one();
    let t123 = triple_index([0, 1, 2]);
    let t456 = triple_index([3, 4, 5]);
    let probe = |lam: &C| -> Vec<C> {
        let alg = build(lam, &mu);
        let e = |k: usize| {
            let mut v = vec![C::zero(); 78];
            v[k] = C::one();
            v
        };
        let (i, j, k) = (idx_tensor(0, t123), idx_tensor(1, t456), idx_tensor(1, t123));
        let mut r = alg.bracket(&alg.bracket(&e(i), &e(j)), &e(k));
        let t2 = alg.bracket(&alg.bracket(&e(j), &e(k)), &e(i));
        let t3 = alg.bracket(&alg.bracket(&e(k), &e(i)), &e(j));
        for t in 0..78 {
            r[t] = r[t].add(&t2[t]).add(&t3[t]);
        }
        r
    };
    let r0 = probe(&C::zero());
    let r1 = probe(&C::one());
    for t in 0..78 {
        let slope = r1[t].sub(&r0[t]);
        if !slope.is_zero() {
            let lam = r0[t].neg().div(&slope).expect("nonzero slope");
            let r = probe(&lam);
            if r.iter().all(|x| x.is_zero()) {
                return Ok((lam, mu));
            }
            return Err(ModelError::ScalarSolve("lambda residual not affine".into()));
        }
    }
    Err(ModelError::ScalarSolve("designated triple unconstraining".into()))
}

pub fn a1a5_model() -> Result<A1A5Model, ModelError> {
    let (lambda, mu) = solve_lambda_mu()?;
    let mut algebra = build(&lambda, &mu);
    algebra.check_jacobi()?;
    let mut handle = ModelHandle::new("a1a5", algebra);
    handle
        .meta
        .insert("scalars".into(), format!("lambda={} mu={}", lambda.to_text(), mu.to_text()));
    Ok(A1A5Model { handle, lambda, mu })
}

/// The Gamma'_1 grading automorphisms of the model.
pub fn f1_prime() -> (Matrix<C>, Matrix<C>) {
    // i diag(1,-1) x zeta12 diag(I3, -I3)
    let i = C::i();
    let z = C::zeta12();
    let mut f1 = Matrix::zero(2, 2, &C::zero());
    *f1.at_mut(0, 0) = i.clone();
    *f1.at_mut(1, 1) = i.neg();
    let mut f2 = Matrix::identity(6, &C::one()).scale(&z);
    for d in 3..6 {
        *f2.at_mut(d, d) = z.neg();
    }
    (f1, f2)
}

pub fn f3_prime() -> (Matrix<C>, Matrix<C>) {
    let i = C::i();
    let z = C::zeta12();
    let mut f1 = Matrix::zero(2, 2, &C::zero());
    *f1.at_mut(0, 1) = i.clone();
    *f1.at_mut(1, 0) = i.clone();
    let mut f2 = Matrix::zero(6, 6, &C::zero());
    for d in 0..3 {
        *f2.at_mut(d, d + 3) = z.clone();
        *f2.at_mut(d + 3, d) = z.clone();
    }
    (f1, f2)
}

/// f2': identity on the even part, -identity on U x /\3 V.
pub fn f2_prime() -> Matrix<C> {
    let mut m = Matrix::identity(78, &C::one());
    for k in N_SLU + N_SLV..78 {
        *m.at_mut(k, k) = C::from_int(-1);
    }
    m
}

/// s'_{alpha,beta} = I2 x diag(a, b, 1/(ab), a, b, 1/(ab)) at root powers.
pub fn s_prime(x: i64, y: i64) -> (Matrix<C>, Matrix<C>) {
    let mut f2 = Matrix::zero(6, 6, &C::zero());
    for (d, e) in [(0usize, x), (1, y), (2, -x - y), (3, x), (4, y), (5, -x - y)] {
        *f2.at_mut(d, d) = C::root_of_unity(e);
    }
    (Matrix::identity(2, &C::one()), f2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::{fixed_subspace, order_of};

    #[test]
    fn dims_and_scalars() {
        let m = a1a5_model().unwrap();
        assert_eq!(m.handle.algebra.dim, 78);
        assert!(m.mu.is_one());
        assert_eq!(m.lambda, C::from_ratio(-1, 2));
    }

    #[test]
    fn bracket_characterization() {
        // tr(f [x,y]) = <f(x), y> for the solved bracket map
        let tri = triples6();
        let x = [0usize, 1, 2];
        let y = [0usize, 3, 4];
        let bw = bracket_wedges(&x, &y);
        for f in slv_basis().iter() {
            // tr(f bw)
            let prod = f.mul(&bw);
            let mut tr = C::zero();
            for d in 0..6 {
                tr = tr.add(prod.at(d, d));
            }
            // <f(x), y>
            let mut rhs = C::zero();
            for slot in 0..3 {
                for a in 0..6 {
                    let c = f.at(a, x[slot]);
                    if c.is_zero() {
                        continue;
                    }
                    let mut word = x;
                    word[slot] = a;
                    if let Some((sorted, sign)) = sort_wedge(&word) {
                        let word2: Vec<usize> =
                            sorted.iter().chain(y.iter()).cloned().collect();
                        if let Some((_, s2)) = sort_wedge(&word2) {
                            rhs = rhs.add(&c.scale_int(sign * s2));
                        }
                    }
                }
            }
            assert_eq!(tr, rhs);
        }
        let _ = tri;
    }

    #[test]
    fn pair_automorphisms() {
        let m = a1a5_model().unwrap();
        let alg = &m.handle.algebra;
        // random symplectic f1 (det 1) and unimodular f2
        let mut f1 = Matrix::identity(2, &C::one());
        *f1.at_mut(0, 1) = C::from_int(3);
        let mut f2 = Matrix::identity(6, &C::one());
        *f2.at_mut(0, 3) = C::from_int(2);
        *f2.at_mut(2, 5) = C::from_int(-1);
        alg.check_automorphism(&m.pair_aut(&f1, &f2)).unwrap();
        // the Gamma'_1 family
        let (a1, a2) = f1_prime();
        let f1p = m.pair_aut(&a1, &a2);
        alg.check_automorphism(&f1p).unwrap();
        assert_eq!(order_of(&f1p, 4).unwrap(), 2);
        let (b1, b2) = f3_prime();
        let f3p = m.pair_aut(&b1, &b2);
        alg.check_automorphism(&f3p).unwrap();
        assert_eq!(order_of(&f3p, 4).unwrap(), 2);
        let f2p = f2_prime();
        alg.check_automorphism(&f2p).unwrap();
        // f2' is an order-2 automorphism of type 2A: fix = sl(U) + sl(V)
        assert_eq!(fixed_subspace(&f2p).dim(), 38);
        let (s1, s2) = s_prime(1, 0);
        let sp = m.pair_aut(&s1, &s2);
        alg.check_automorphism(&sp).unwrap();
        assert_eq!(order_of(&sp, 40).unwrap(), 36);
    }
}

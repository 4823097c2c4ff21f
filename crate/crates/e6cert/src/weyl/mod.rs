//! Weyl groups of the gradings: block matrices on Z_p^t x Z^r induced by
//! algebra automorphisms, breadth-first closure of finite matrix groups, the
//! claimed Weyl-group sets of the six gradings, and the conjugacy-type
//! obstruction computations.

pub mod claimed;
pub mod obstructions;
pub mod verify;

use crate::cyclotomic::Field;
use crate::exactlin::Matrix;
use crate::gradings::{GradedDecomposition, GroupElem};
use crate::liealg::StructuredAlgebra;
use std::collections::{HashMap, VecDeque};

#[derive(Debug, thiserror::Error)]
pub enum WeylError {
    #[error("automorphism does not permute the components: image of {0:?} is not a component")]
    NotInAutGamma(GroupElem),
    #[error("induced map not solvable over the support")]
    Unsolvable,
    #[error("induced map fails verification on support element {0:?}")]
    BadSolution(GroupElem),
    #[error("block invariant violated: {0}")]
    BadBlocks(String),
    #[error("closure exceeded cap {0}")]
    ClosureCap(usize),
    #[error("free-block entry left [-4, 4] during closure")]
    EntryCap,
    #[error("sl2 construction failed: {0}")]
    Sl2(String),
    #[error("claimed set is not closed: product escapes the set")]
    SetEscape,
}

/// Signature of the acting group Z_p^t x Z^r.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct GroupSig {
    pub p: u64,
    pub t: usize,
    pub r: usize,
}

/// Automorphism of Z_p^t x Z^r in the canonical basis: block upper
/// triangular with A (t x t mod p), C (t x r mod p), B (r x r over Z); the
/// lower-left block is identically zero because finite-order elements map to
/// finite-order elements.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GroupAutMatrix {
    pub sig: GroupSig,
    pub a: Vec<u64>,
    pub c: Vec<u64>,
    pub b: Vec<i64>,
}

impl GroupAutMatrix {
    pub fn identity(sig: GroupSig) -> Self {
        let mut a = vec![0; sig.t * sig.t];
        for i in 0..sig.t {
            a[i * sig.t + i] = 1;
        }
        let mut b = vec![0; sig.r * sig.r];
        for i in 0..sig.r {
            b[i * sig.r + i] = 1;
        }
        GroupAutMatrix { sig, a, c: vec![0; sig.t * sig.r], b }
    }

    pub fn from_blocks(sig: GroupSig, a: Vec<u64>, c: Vec<u64>, b: Vec<i64>) -> Self {
        let mut m = GroupAutMatrix { sig, a, c, b };
        m.reduce();
        m
    }

    fn reduce(&mut self) {
        for x in self.a.iter_mut() {
            *x %= self.sig.p;
        }
        for x in self.c.iter_mut() {
            *x %= self.sig.p;
        }
    }

    pub fn apply(&self, g: &GroupElem) -> GroupElem {
        let (t, r, p) = (self.sig.t, self.sig.r, self.sig.p);
        let mut tors = vec![0u64; t];
        for i in 0..t {
            let mut acc: i64 = 0;
            for j in 0..t {
                acc += (self.a[i * t + j] * g.0[j]) as i64;
            }
            for j in 0..r {
                acc += self.c[i * r + j] as i64 * g.1[j];
            }
            tors[i] = acc.rem_euclid(p as i64) as u64;
        }
        let mut free = vec![0i64; r];
        for i in 0..r {
            for j in 0..r {
                free[i] += self.b[i * r + j] * g.1[j];
            }
        }
        (tors, free)
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.sig, o.sig);
        let (t, r, p) = (self.sig.t, self.sig.r, self.sig.p);
        let mut a = vec![0u64; t * t];
        for i in 0..t {
            for j in 0..t {
                let mut acc = 0u64;
                for k in 0..t {
                    acc += self.a[i * t + k] * o.a[k * t + j];
                }
                a[i * t + j] = acc % p;
            }
        }
        let mut c = vec![0u64; t * r];
        for i in 0..t {
            for j in 0..r {
                let mut acc: i64 = 0;
                for k in 0..t {
                    acc += (self.a[i * t + k] * o.c[k * r + j]) as i64;
                }
                for k in 0..r {
                    acc += self.c[i * r + k] as i64 * o.b[k * r + j];
                }
                c[i * r + j] = acc.rem_euclid(p as i64) as u64;
            }
        }
        let mut b = vec![0i64; r * r];
        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    b[i * r + j] += self.b[i * r + k] * o.b[k * r + j];
                }
            }
        }
        GroupAutMatrix { sig: self.sig, a, c, b }
    }

    /// Inverse; None when A is singular mod p or det B is not a unit.
    pub fn inverse(&self) -> Option<Self> {
        let (t, r, p) = (self.sig.t, self.sig.r, self.sig.p);
        let a_inv = invert_mod_p(&self.a, t, p)?;
        let (b_inv, det) = invert_integer(&self.b, r)?;
        if det.abs() != 1 {
            return None;
        }
        // C' = -A^{-1} C B^{-1} mod p
        let mut c = vec![0u64; t * r];
        for i in 0..t {
            for j in 0..r {
                let mut acc: i64 = 0;
                for k in 0..t {
                    for l in 0..r {
                        acc += a_inv[i * t + k] as i64
                            * self.c[k * r + l] as i64
                            * b_inv[l * r + j];
                    }
                }
                c[i * r + j] = (-acc).rem_euclid(p as i64) as u64;
            }
        }
        Some(GroupAutMatrix { sig: self.sig, a: a_inv, c, b: b_inv })
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.sig)
    }

    pub fn order(&self, cap: usize) -> Option<usize> {
        let mut acc = self.clone();
        for k in 1..=cap {
            if acc.is_identity() {
                return Some(k);
            }
            acc = acc.mul(self);
        }
        None
    }

    /// Canonical byte encoding; free entries must stay within [-4, 4].
    pub fn encode(&self) -> Result<Vec<u8>, WeylError> {
        let mut out = Vec::with_capacity(self.a.len() + self.c.len() + self.b.len());
        for x in self.a.iter().chain(self.c.iter()) {
            out.push(*x as u8);
        }
        for x in self.b.iter() {
            if x.abs() > 4 {
                return Err(WeylError::EntryCap);
            }
            out.push((x + 4) as u8);
        }
        Ok(out)
    }
}

fn invert_mod_p(a: &[u64], n: usize, p: u64) -> Option<Vec<u64>> {
    let mut m = vec![0u64; n * 2 * n];
    for i in 0..n {
        for j in 0..n {
            m[i * 2 * n + j] = a[i * n + j] % p;
        }
        m[i * 2 * n + n + i] = 1;
    }
    let inv = |x: u64| -> u64 {
        let mut acc = 1u64;
        let mut b = x % p;
        let mut e = p - 2;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        acc
    };
    for col in 0..n {
        let piv = (col..n).find(|&r| m[r * 2 * n + col] % p != 0)?;
        if piv != col {
            for k in 0..2 * n {
                m.swap(col * 2 * n + k, piv * 2 * n + k);
            }
        }
        let pv = inv(m[col * 2 * n + col]);
        for k in 0..2 * n {
            m[col * 2 * n + k] = m[col * 2 * n + k] * pv % p;
        }
        for r in 0..n {
            if r == col {
                continue;
            }
            let f = m[r * 2 * n + col] % p;
            if f != 0 {
                for k in 0..2 * n {
                    m[r * 2 * n + k] = (m[r * 2 * n + k] + (p - f) * m[col * 2 * n + k]) % p;
                }
            }
        }
    }
    let mut out = vec![0u64; n * n];
    for i in 0..n {
        for j in 0..n {
            out[i * n + j] = m[i * 2 * n + n + j];
        }
    }
    Some(out)
}

/// Integer inverse via adjugate for small matrices; returns (inverse, det)
/// only when det = +-1.
fn invert_integer(b: &[i64], n: usize) -> Option<(Vec<i64>, i64)> {
    if n == 0 {
        return Some((vec![], 1));
    }
    let det = int_det(b, n);
    if det.abs() != 1 {
        return None;
    }
    let mut adj = vec![0i64; n * n];
    for i in 0..n {
        for j in 0..n {
            // cofactor C_ji
            let mut sub = Vec::with_capacity((n - 1) * (n - 1));
            for r in 0..n {
                if r == j {
                    continue;
                }
                for c in 0..n {
                    if c == i {
                        continue;
                    }
                    sub.push(b[r * n + c]);
                }
            }
            let minor = int_det(&sub, n - 1);
            let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
            adj[i * n + j] = sign * minor * det; // det = ±1 so this is adj/det
        }
    }
    Some((adj, det))
}

fn int_det(m: &[i64], n: usize) -> i64 {
    match n {
        0 => 1,
        1 => m[0],
        2 => m[0] * m[3] - m[1] * m[2],
        _ => {
            let mut det = 0i64;
            for c in 0..n {
                if m[c] == 0 {
                    continue;
                }
                let mut sub = Vec::with_capacity((n - 1) * (n - 1));
                for r in 1..n {
                    for cc in 0..n {
                        if cc != c {
                            sub.push(m[r * n + cc]);
                        }
                    }
                }
                let sign = if c % 2 == 0 { 1 } else { -1 };
                det += sign * m[c] * int_det(&sub, n - 1);
            }
            det
        }
    }
}

/// A finite group of block matrices with its generating set.
pub struct FiniteMatrixGroup {
    pub sig: GroupSig,
    pub elements: HashMap<Vec<u8>, GroupAutMatrix>,
    pub generators: Vec<GroupAutMatrix>,
}

impl FiniteMatrixGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, m: &GroupAutMatrix) -> bool {
        m.encode().map(|e| self.elements.contains_key(&e)).unwrap_or(false)
    }
}

/// Breadth-first closure of the generated group; errors beyond `cap`
/// elements or when a free-block entry leaves [-4, 4].
pub fn closure(gens: &[GroupAutMatrix], cap: usize) -> Result<FiniteMatrixGroup, WeylError> {
    let sig = gens.first().map(|g| g.sig).expect("at least one generator");
    let mut elements: HashMap<Vec<u8>, GroupAutMatrix> = HashMap::new();
    let id = GroupAutMatrix::identity(sig);
    elements.insert(id.encode()?, id);
    let mut frontier: VecDeque<GroupAutMatrix> =
        VecDeque::from(vec![GroupAutMatrix::identity(sig)]);
    while let Some(x) = frontier.pop_front() {
        for g in gens.iter() {
            let y = x.mul(g);
            let key = y.encode()?;
            if !elements.contains_key(&key) {
                if elements.len() >= cap {
                    return Err(WeylError::ClosureCap(cap));
                }
                elements.insert(key, y.clone());
                frontier.push_back(y);
            }
        }
    }
    Ok(FiniteMatrixGroup { sig, elements, generators: gens.to_vec() })
}

/// Compute the block matrix alpha_f with f(L_s) = L_{alpha_f(s)}: match each
/// component's image to a component, solve the blocks over the support, and
/// verify the solution reproduces the whole permutation.
pub fn induced_on_group<F: Field>(
    f: &Matrix<F>,
    dec: &GradedDecomposition<F>,
) -> Result<GroupAutMatrix, WeylError> {
    let sig = GroupSig { p: dec.sig.p, t: dec.sig.torsion, r: dec.sig.free };
    // support permutation
    let mut perm: Vec<(GroupElem, GroupElem)> = Vec::new();
    for (g, space) in dec.comps.iter() {
        let imgs: Vec<Vec<F>> = space.basis_vectors().iter().map(|v| f.apply(v)).collect();
        let mut target: Option<GroupElem> = None;
        for (h, hs) in dec.comps.iter() {
            if hs.dim() != space.dim() {
                continue;
            }
            if imgs.iter().all(|v| hs.contains(v)) {
                target = Some(h.clone());
                break;
            }
        }
        match target {
            Some(h) => perm.push((g.clone(), h)),
            None => return Err(WeylError::NotInAutGamma(g.clone())),
        }
    }
    let (t, r, p) = (sig.t, sig.r, sig.p);
    // free block B over Q from the free parts (must come out integral)
    let mut b = vec![0i64; r * r];
    if r > 0 {
        // pick r support elements with independent free parts
        let mut chosen: Vec<usize> = Vec::new();
        let mut mat: Vec<Vec<i64>> = Vec::new();
        for (idx, (g, _)) in perm.iter().enumerate() {
            if chosen.len() == r {
                break;
            }
            let mut cand = mat.clone();
            cand.push(g.1.clone());
            if int_rank(&cand, r) == cand.len() {
                mat.push(g.1.clone());
                chosen.push(idx);
            }
        }
        if chosen.len() < r {
            return Err(WeylError::Unsolvable);
        }
        // solve B * s = pi(s) for the chosen set: B = P * S^{-1} over Q
        let dets = int_rref_solve(&mat, &chosen.iter().map(|&i| perm[i].1 .1.clone()).collect::<Vec<_>>(), r)
            .ok_or(WeylError::Unsolvable)?;
        b = dets;
    }
    // torsion rows: solve [A | C] over F_p from all support constraints
    let mut a = vec![0u64; t * t];
    let mut c = vec![0u64; t * r];
    for i in 0..t {
        // unknown row x of length t + r: for each support s:
        // x . (s_tors, s_free mod p) = pi(s)_tors[i]
        let mut rows: Vec<Vec<u64>> = Vec::new();
        let mut rhs: Vec<u64> = Vec::new();
        for (g, h) in perm.iter() {
            let mut row: Vec<u64> = g.0.iter().map(|x| x % p).collect();
            row.extend(g.1.iter().map(|x| x.rem_euclid(p as i64) as u64));
            rows.push(row);
            rhs.push(h.0[i] % p);
        }
        let sol = solve_mod_p(&rows, &rhs, t + r, p).ok_or(WeylError::Unsolvable)?;
        for j in 0..t {
            a[i * t + j] = sol[j];
        }
        for j in 0..r {
            c[i * r + j] = sol[t + j];
        }
    }
    let m = GroupAutMatrix::from_blocks(sig, a, c, b);
    // full verification over the support
    for (g, h) in perm.iter() {
        if m.apply(g) != *h {
            return Err(WeylError::BadSolution(g.clone()));
        }
    }
    // block invariants
    if m.inverse().is_none() {
        return Err(WeylError::BadBlocks("A or B block not invertible".into()));
    }
    Ok(m)
}

fn int_rank(rows: &[Vec<i64>], n: usize) -> usize {
    // rank over Q by fraction-free elimination
    let mut m: Vec<Vec<i64>> = rows.to_vec();
    let mut rank = 0;
    let mut col = 0;
    while col < n && rank < m.len() {
        if let Some(pr) = (rank..m.len()).find(|&r| m[r][col] != 0) {
            m.swap(rank, pr);
            for r in (rank + 1)..m.len() {
                if m[r][col] != 0 {
                    let (a, b) = (m[rank][col], m[r][col]);
                    for cc in 0..n {
                        m[r][cc] = m[r][cc] * a - m[rank][cc] * b;
                    }
                }
            }
            rank += 1;
        }
        col += 1;
    }
    rank
}

/// Solve B S = P for integer B given square-invertible S (columns are the
/// chosen support free parts); returns row-major B when integral.
fn int_rref_solve(s_rows: &[Vec<i64>], p_rows: &[Vec<i64>], r: usize) -> Option<Vec<i64>> {
    // we need B with B * s^T = p^T for each chosen (s, p):
    // row i of B satisfies: for each pair k: sum_j B[i][j] s_k[j] = p_k[i]
    let mut out = vec![0i64; r * r];
    for i in 0..r {
        // Cramer's rule over the integers with i128 intermediates
        let m: Vec<Vec<i128>> = s_rows
            .iter()
            .zip(p_rows.iter())
            .map(|(s, pr)| {
                let mut row: Vec<i128> = s.iter().map(|&x| x as i128).collect();
                row.push(pr[i] as i128);
                row
            })
            .collect();
        let n = r;
        let base: Vec<i128> = (0..n * n).map(|k| m[k / n][k % n]).collect();
        let det = int_det_i128(&base, n);
        if det == 0 {
            return None;
        }
        for j in 0..n {
            let mut rep = base.clone();
            for k in 0..n {
                rep[k * n + j] = m[k][n];
            }
            let dj = int_det_i128(&rep, n);
            if dj % det != 0 {
                return None;
            }
            out[i * r + j] = (dj / det) as i64;
        }
    }
    Some(out)
}

fn int_det_i128(m: &[i128], n: usize) -> i128 {
    match n {
        0 => 1,
        1 => m[0],
        2 => m[0] * m[3] - m[1] * m[2],
        _ => {
            let mut det = 0i128;
            for c in 0..n {
                if m[c] == 0 {
                    continue;
                }
                let mut sub = Vec::with_capacity((n - 1) * (n - 1));
                for r in 1..n {
                    for cc in 0..n {
                        if cc != c {
                            sub.push(m[r * n + cc]);
                        }
                    }
                }
                let sign = if c % 2 == 0 { 1 } else { -1 };
                det += sign * m[c] * int_det_i128(&sub, n - 1);
            }
            det
        }
    }
}

fn solve_mod_p(rows: &[Vec<u64>], rhs: &[u64], n: usize, p: u64) -> Option<Vec<u64>> {
    let mut aug: Vec<Vec<u64>> = rows
        .iter()
        .zip(rhs.iter())
        .map(|(r, &v)| {
            let mut row = r.clone();
            row.push(v % p);
            row
        })
        .collect();
    let inv = |x: u64| -> u64 {
        let mut acc = 1u64;
        let mut b = x % p;
        let mut e = p - 2;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        acc
    };
    let mut rank = 0;
    let mut pivots = Vec::new();
    for col in 0..n {
        if let Some(pr) = (rank..aug.len()).find(|&r| aug[r][col] % p != 0) {
            aug.swap(rank, pr);
            let f = inv(aug[rank][col]);
            for k in 0..=n {
                aug[rank][k] = aug[rank][k] * f % p;
            }
            for r in 0..aug.len() {
                if r != rank && aug[r][col] % p != 0 {
                    let f2 = aug[r][col] % p;
                    for k in 0..=n {
                        aug[r][k] = (aug[r][k] + (p - f2) * aug[rank][k]) % p;
                    }
                }
            }
            pivots.push(col);
            rank += 1;
        }
    }
    // consistency
    for r in rank..aug.len() {
        if aug[r][n] % p != 0 {
            return None;
        }
    }
    if rank < n {
        return None; // must be unique for a well-posed support
    }
    let mut x = vec![0u64; n];
    for (ri, &pc) in pivots.iter().enumerate() {
        x[pc] = aug[ri][n] % p;
    }
    Some(x)
}

/// exp(ad x) for an ad-nilpotent x; exact since the series terminates.
pub fn exp_ad<F: Field>(
    alg: &StructuredAlgebra<F>,
    x: &[F],
    cap: usize,
) -> Result<Matrix<F>, WeylError> {
    let n = alg.dim;
    let ad = alg.ad(x);
    let one = alg.one();
    let mut acc = Matrix::identity(n, &one);
    let mut term = Matrix::identity(n, &one);
    let mut k = 0usize;
    loop {
        term = ad.mul(&term);
        k += 1;
        if term.is_zero_matrix() {
            break;
        }
        if k > cap {
            return Err(WeylError::Sl2("ad x not nilpotent within cap".into()));
        }
        let mut fact = one.clone();
        for d in 2..=k as i64 {
            fact = fact.mul(&one.from_int_like(d));
        }
        let inv = fact.invert().ok_or_else(|| WeylError::Sl2("factorial vanishes".into()))?;
        acc = acc.add(&term.scale(&inv));
    }
    Ok(acc)
}

/// The Weyl element exp(ad e) exp(-ad f) exp(ad e) of the sl2 pair carried by
/// a one-dimensional support degree s with -s also supported.
pub fn sl2_weyl_element<F: Field>(
    alg: &StructuredAlgebra<F>,
    dec: &GradedDecomposition<F>,
    s: &GroupElem,
) -> Result<Matrix<F>, WeylError> {
    let neg = |g: &GroupElem| -> GroupElem {
        (
            g.0.iter().map(|x| (dec.sig.p - x % dec.sig.p) % dec.sig.p).collect(),
            g.1.iter().map(|x| -x).collect(),
        )
    };
    let sp = dec.component(s).ok_or_else(|| WeylError::Sl2("degree unsupported".into()))?;
    let sn = dec
        .component(&neg(s))
        .ok_or_else(|| WeylError::Sl2("negative degree unsupported".into()))?;
    if sp.dim() != 1 || sn.dim() != 1 {
        return Err(WeylError::Sl2("degree component not one-dimensional".into()));
    }
    let e = sp.basis_vectors().remove(0);
    let f0 = sn.basis_vectors().remove(0);
    let h = alg.bracket(&e, &f0);
    let he = alg.bracket(&h, &e);
    // he = c e with c != 0
    let pos = e.iter().position(|x| !x.is_zero()).unwrap();
    if e[pos].is_zero() || he[pos].is_zero() {
        return Err(WeylError::Sl2("[h,e] degenerate".into()));
    }
    let cval = he[pos].mul(&e[pos].invert().unwrap());
    for t in 0..alg.dim {
        if he[t] != cval.mul(&e[t]) {
            return Err(WeylError::Sl2("[h,e] not proportional to e".into()));
        }
    }
    if cval.is_zero() {
        return Err(WeylError::Sl2("pairing degenerate".into()));
    }
    let two = alg.one().from_int_like(2);
    let scale = two.mul(&cval.invert().unwrap());
    let f: Vec<F> = f0.iter().map(|x| x.mul(&scale)).collect();
    let fneg: Vec<F> = f.iter().map(|x| x.neg()).collect();
    let ea = exp_ad(alg, &e, 10)?;
    let eb = exp_ad(alg, &fneg, 10)?;
    Ok(ea.mul(&eb).mul(&ea))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig32() -> GroupSig {
        GroupSig { p: 2, t: 3, r: 2 }
    }

    #[test]
    fn group_matrix_ops() {
        let sig = sig32();
        let id = GroupAutMatrix::identity(sig);
        assert!(id.is_identity());
        // tau1 = [[0,-1],[1,-1]] has order 3, tau2 = [[-1,1],[0,1]] order 2
        let tau1 = GroupAutMatrix::from_blocks(
            sig,
            id.a.clone(),
            vec![0; 6],
            vec![0, -1, 1, -1],
        );
        let tau2 =
            GroupAutMatrix::from_blocks(sig, id.a.clone(), vec![0; 6], vec![-1, 1, 0, 1]);
        assert_eq!(tau1.order(10), Some(3));
        assert_eq!(tau2.order(10), Some(2));
        let g = closure(&[tau1.clone(), tau2.clone()], 100).unwrap();
        assert_eq!(g.order(), 6);
        // nonabelian
        assert_ne!(tau1.mul(&tau2), tau2.mul(&tau1));
        // inverse round trip
        let w = tau1.mul(&tau2);
        assert!(w.mul(&w.inverse().unwrap()).is_identity());
    }

    #[test]
    fn sigma_tau_d6() {
        let sig = GroupSig { p: 3, t: 2, r: 2 };
        let id = GroupAutMatrix::identity(sig);
        let sigma =
            GroupAutMatrix::from_blocks(sig, id.a.clone(), vec![0; 4], vec![1, -1, 1, 0]);
        let tau =
            GroupAutMatrix::from_blocks(sig, id.a.clone(), vec![0; 4], vec![1, -1, 0, -1]);
        assert_eq!(sigma.order(12), Some(6));
        assert_eq!(tau.order(12), Some(2));
        let g = closure(&[sigma, tau], 100).unwrap();
        assert_eq!(g.order(), 12);
    }

    #[test]
    fn f4_weyl_order() {
        let sig = GroupSig { p: 2, t: 0, r: 4 };
        let mk = |rows: [[i64; 4]; 4]| {
            GroupAutMatrix::from_blocks(
                sig,
                vec![],
                vec![],
                rows.iter().flatten().cloned().collect(),
            )
        };
        let s1 = mk([[0, -1, 1, -1], [1, -1, 1, 0], [0, 0, 1, 0], [0, 0, 0, 1]]);
        let s2 = mk([[-1, 1, 0, -1], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]);
        let s3 = mk([[0, 0, 1, -1], [0, 1, 0, 0], [1, 0, 0, 1], [0, 0, 0, 1]]);
        let s4 = mk([[1, 0, -1, 1], [0, 1, -1, 0], [0, 0, 0, -1], [0, 0, 1, -1]]);
        let g = closure(&[s1, s2, s3, s4], 2000).unwrap();
        assert_eq!(g.order(), 1152);
    }
}

//! Builders for the five explicit models of the Lie algebra e6, each with a
//! frozen labeled basis and a registry of named automorphisms.

use crate::cyclotomic::CycloScalar;
use crate::exactlin::Matrix;
use crate::liealg::{LieError, StructuredAlgebra};
use std::collections::BTreeMap;



pub mod a1a5;
pub mod adams;
pub mod elduque;
pub mod fivegrading;
pub mod tits;

type C = CycloScalar;

#[derive(Debug, thiserror::Error)]
pub enum ModelError {
    #[error("ingredient mismatch: {0}")]
    Ingredient(String),
    #[error("scalar solve infeasible: {0}")]
    ScalarSolve(String),
    #[error("unknown automorphism `{0}`")]
    UnknownAut(String),
    #[error(transparent)]
    Lie(#[from] LieError),
}

/// A constructed model: the structure-constant algebra plus its registry of
/// named automorphisms and bookkeeping about the construction.
pub struct ModelHandle {
    pub name: String,
    pub algebra: StructuredAlgebra<C>,
    pub auts: BTreeMap<String, Matrix<C>>,
    pub meta: BTreeMap<String, String>,
}

impl ModelHandle {
    pub fn new(name: &str, algebra: StructuredAlgebra<C>) -> Self {
        ModelHandle {
            name: name.to_string(),
            algebra,
            auts: BTreeMap::new(),
            meta: BTreeMap::new(),
        }
    }

    pub fn register(&mut self, name: &str, f: Matrix<C>) {
        self.auts.insert(name.to_string(), f);
    }

    pub fn named_aut(&self, name: &str) -> Result<&Matrix<C>, ModelError> {
        self.auts.get(name).ok_or_else(|| ModelError::UnknownAut(name.to_string()))
    }

    /// Verify every registered automorphism exactly; returns offender names.
    pub fn verify_auts(&self) -> Vec<String> {
        use rayon::prelude::*;
        self.auts
            .par_iter()
            .filter_map(|(n, f)| self.algebra.check_automorphism(f).err().map(|_| n.clone()))
            .collect()
    }
}

/// The five models plus the Albert-form Tits instance, built once and
/// shared by every verification stage.
pub struct ModelSet {
    pub tits_oct: tits::TitsModel,
    pub tits_alb: tits::TitsModel,
    pub elduque: elduque::ElduqueModel,
    pub five: fivegrading::FiveGradingModel,
    pub adams: adams::AdamsModel,
    pub a1a5: a1a5::A1A5Model,
}

pub fn build_all() -> Result<ModelSet, ModelError> {
    let mut set = ModelSet {
        tits_oct: tits::tits_oct_mat3()?,
        tits_alb: tits::tits_binarion_albert()?,
        elduque: elduque::elduque()?,
        five: fivegrading::five_grading_model()?,
        adams: adams::adams()?,
        a1a5: a1a5::a1a5_model()?,
    };
    register_named_auts(&mut set)?;
    Ok(set)
}

/// Populate each model's automorphism registry with the named maps the
/// verification uses; `verify model` checks every one of them exactly.
fn register_named_auts(set: &mut ModelSet) -> Result<(), ModelError> {
    use crate::cyclotomic::CycloScalar as C;
    let frame = crate::composition::OctonionFrame::new()
        .map_err(|e| ModelError::Ingredient(e.to_string()))?;
    {
        let (bm, cm) = crate::jordan::pauli_pair();
        let h1 = set.tits_oct.tilde_j(&crate::jordan::conj_operator(&bm));
        let h2 = set.tits_oct.tilde_j(&crate::jordan::conj_operator(&cm));
        let torus = |a: i64, b: i64| {
            set.tits_oct
                .tilde_c(&frame.torus_element(&C::root_of_unity(a), &C::root_of_unity(b)))
        };
        let t_ww = torus(12, 12);
        let t_w1 = torus(12, 0);
        let mut fs = Vec::new();
        for k in 0..3 {
            fs.push(set.tits_oct.tilde_c(&frame.grading_involution(k)));
        }
        let m = &mut set.tits_oct.handle;
        for (k, f) in fs.into_iter().enumerate() {
            m.register(&format!("f{}", k + 1), f);
        }
        m.register("h1", h1);
        m.register("h2", h2);
        m.register("t(w,w)", t_ww);
        m.register("t(w,1)", t_w1);
    }
    {
        let z2 = {
            let mut u = crate::exactlin::Matrix::zero(78, 78, &C::zero());
            for k in 0..26 {
                *u.at_mut(k, k) = C::from_int(-1);
            }
            for k in 26..78 {
                *u.at_mut(k, k) = C::one();
            }
            u
        };
        set.tits_alb.handle.register("z2-grading", z2);
    }
    {
        let id2 = crate::exactlin::Matrix::identity(2, &C::one());
        let id8 = crate::exactlin::Matrix::identity(8, &C::one());
        let rho = set.elduque.pair_aut(&id8, &elduque::s2_flip());
        let th3 = set.elduque.theta3();
        let mut regs: Vec<(String, crate::exactlin::Matrix<C>)> = Vec::new();
        for k in 0..3 {
            regs.push((
                format!("F{}", k + 1),
                set.elduque.pair_aut(&frame.grading_involution(k), &id2),
            ));
        }
        for i in 0..3 {
            regs.push((format!("Psi{}", i), set.elduque.psi_map(i)));
        }
        let rho_f1 = rho.mul(&regs[0].1);
        let t = set.elduque.t_sample(1)?;
        let m = &mut set.elduque.handle;
        m.register("rho", rho);
        m.register("theta3", th3);
        m.register("rhoF1", rho_f1);
        m.register("t-sample", t);
        for (n, f) in regs {
            m.register(&n, f);
        }
    }
    {
        let th = fivegrading::theta();
        let rf = fivegrading::rho_flip(&set.five.handle.algebra)?;
        let m = &mut set.five.handle;
        m.register("theta", th);
        m.register("rho-flip", rf);
        for j in 1..5 {
            m.register(
                &format!("f1{}", j + 1),
                fivegrading::tilde(&fivegrading::diag_signs(&[0, j])),
            );
        }
        m.register("g1'", fivegrading::tilde(&fivegrading::diag_signs(&[3, 5])));
        m.register("g2'", fivegrading::tilde(&fivegrading::diag_signs(&[3, 4])));
        m.register("T1-sample", fivegrading::t1_sample(1));
        m.register("T1'-sample", fivegrading::tilde(&fivegrading::psi_block(1)));
    }
    {
        let h1 = set.adams.h1();
        let h2 = set.adams.h2();
        let h1p = h1.mul(&set.adams.t_ab(4, 4));
        let t = set.adams.t_ab(1, 0);
        let m = &mut set.adams.handle;
        m.register("H1", h1);
        m.register("H2", h2);
        m.register("H1'", h1p);
        m.register("T(z,1)", t);
    }
    {
        let (f1a, f1b) = a1a5::f1_prime();
        let (f3a, f3b) = a1a5::f3_prime();
        let f1p = set.a1a5.pair_aut(&f1a, &f1b);
        let f3p = set.a1a5.pair_aut(&f3a, &f3b);
        let (s1, s2) = a1a5::s_prime(1, 0);
        let sp = set.a1a5.pair_aut(&s1, &s2);
        let m = &mut set.a1a5.handle;
        m.register("f1'", f1p);
        m.register("f2'", a1a5::f2_prime());
        m.register("f3'", f3p);
        m.register("s'(z,1)", sp);
    }
    Ok(())
}

/// Sign of a permutation of 0..n given as a sequence (None if repeats).
pub fn perm_sign(seq: &[usize]) -> Option<i64> {
    let n = seq.len();
    let mut seen = vec![false; n];
    for &s in seq {
        if s >= n || seen[s] {
            return None;
        }
        seen[s] = true;
    }
    let mut sign = 1i64;
    let mut v = seq.to_vec();
    for i in 0..n {
        while v[i] != i {
            let j = v[i];
            v.swap(i, j);
            sign = -sign;
        }
    }
    Some(sign)
}

/// All 3-subsets of {0..5} in lexicographic order.
pub fn triples6() -> Vec<[usize; 3]> {
    let mut out = Vec::with_capacity(20);
    for a in 0..6 {
        for b in (a + 1)..6 {
            for c in (b + 1)..6 {
                out.push([a, b, c]);
            }
        }
    }
    out
}

pub fn triple_index(t: [usize; 3]) -> usize {
    triples6().iter().position(|x| *x == t).expect("triple index")
}

/// Sort a wedge word, returning the sorted word and the sign (None if it has
/// a repeated factor).
pub fn sort_wedge(word: &[usize]) -> Option<(Vec<usize>, i64)> {
    let mut v = word.to_vec();
    let mut sign = 1i64;
    for i in 0..v.len() {
        for j in (i + 1)..v.len() {
            if v[i] == v[j] {
                return None;
            }
            if v[i] > v[j] {
                v.swap(i, j);
                sign = -sign;
            }
        }
    }
    Some((v, sign))
}

pub fn complement6(t: &[usize; 3]) -> [usize; 3] {
    let mut out = [0usize; 3];
    let mut k = 0;
    for x in 0..6 {
        if !t.contains(&x) {
            out[k] = x;
            k += 1;
        }
    }
    out
}

/// det of the 3x3 submatrix of m with the given rows and columns.
pub fn minor3(m: &Matrix<C>, rows: &[usize; 3], cols: &[usize; 3]) -> C {
    let a = |r: usize, c: usize| m.at(rows[r], cols[c]).clone();
    let mut det = C::zero();
    det = det.add(&a(0, 0).mul(&a(1, 1).mul(&a(2, 2)).sub(&a(1, 2).mul(&a(2, 1)))));
    det = det.sub(&a(0, 1).mul(&a(1, 0).mul(&a(2, 2)).sub(&a(1, 2).mul(&a(2, 0)))));
    det = det.add(&a(0, 2).mul(&a(1, 0).mul(&a(2, 1)).sub(&a(1, 1).mul(&a(2, 0)))));
    det
}

/// det of a 3x3 matrix given as a full Matrix.
pub fn det3(m: &Matrix<C>) -> C {
    minor3(m, &[0, 1, 2], &[0, 1, 2])
}

/// det of a 6x6 exact matrix by cofactor-free Gaussian elimination.
pub fn det6(m: &Matrix<C>) -> C {
    let n = m.rows;
    let mut a = m.clone();
    let mut det = C::one();
    for col in 0..n {
        let mut piv = None;
        for r in col..n {
            if !a.at(r, col).is_zero() {
                piv = Some(r);
                break;
            }
        }
        let Some(p) = piv else { return C::zero() };
        if p != col {
            for c in 0..n {
                let tmp = a.at(p, c).clone();
                let other = a.at(col, c).clone();
                a.set(p, c, other);
                a.set(col, c, tmp);
            }
            det = det.neg();
        }
        let pv = a.at(col, col).clone();
        det = det.mul(&pv);
        let inv = pv.inv().expect("pivot nonzero");
        for r in (col + 1)..n {
            if a.at(r, col).is_zero() {
                continue;
            }
            let f = a.at(r, col).mul(&inv);
            for c in col..n {
                let v = a.at(r, c).sub(&f.mul(a.at(col, c)));
                a.set(r, c, v);
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perm_and_wedge_helpers() {
        assert_eq!(perm_sign(&[0, 1, 2]), Some(1));
        assert_eq!(perm_sign(&[1, 0, 2]), Some(-1));
        assert_eq!(perm_sign(&[3, 4, 5, 0, 1, 2]), Some(-1));
        assert_eq!(perm_sign(&[0, 0, 1]), None);
        assert_eq!(triples6().len(), 20);
        assert_eq!(triple_index([0, 1, 2]), 0);
        assert_eq!(triple_index([3, 4, 5]), 19);
        assert_eq!(sort_wedge(&[2, 1]), Some((vec![1, 2], -1)));
        assert_eq!(sort_wedge(&[1, 1]), None);
        assert_eq!(complement6(&[0, 1, 2]), [3, 4, 5]);
    }
}

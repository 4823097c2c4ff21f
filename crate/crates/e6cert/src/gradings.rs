//! Fine gradings as simultaneous eigenspace decompositions of commuting
//! finite-order automorphisms and order-36 torus samples, with exact weight
//! lifting, bracket-compatibility certification, and the six concrete
//! gradings carried by the models.

use crate::cyclotomic::{CycloScalar, Field};
use crate::exactlin::{Matrix, Subspace};
use crate::liealg::StructuredAlgebra;
use crate::models::ModelSet;
use rayon::prelude::*;
use serde::Serialize;

type C = CycloScalar;

#[derive(Debug, thiserror::Error)]
pub enum GradingError {
    #[error("generators do not commute: {0} vs {1}")]
    NonCommuting(usize, usize),
    #[error("generator {0} does not have declared order {1}")]
    WrongOrder(usize, u64),
    #[error("eigenspaces do not fill the algebra: {0} of {1}")]
    NotDiagonalizable(usize, usize),
    #[error("weight lift failed for exponents {0:?} (no unique small solution)")]
    WeightLift(Vec<i64>),
    #[error("bracket incompatibility between supports {0:?} and {1:?}")]
    Incompatible(GroupElem, GroupElem),
    #[error("support does not generate the group")]
    SupportSmall,
    #[error("lifted degree {0} outside the safety margin [-8, 8]")]
    LiftMargin(i64),
}

/// Universal-group shape: `torsion` coordinates of prime order p plus
/// `free` integer coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupSignature {
    pub p: u64,
    pub torsion: usize,
    pub free: usize,
}

pub type GroupElem = (Vec<u64>, Vec<i64>);

#[derive(Clone)]
pub struct GradedDecomposition<F: Field> {
    pub sig: GroupSignature,
    pub comps: Vec<(GroupElem, Subspace<F>)>,
    /// Index in Z^free of the lattice generated by the support's free parts.
    /// 1 for a grading in universal coordinates; the a1a5 realization of
    /// Gamma_1 carries the s'-parameter exponents, whose lattice has index 3
    /// (the parameter torus covers the acting torus 3:1).
    pub free_index: i64,
}

/// A finite-order torsion generator: the map, its order, and an optional
/// twist functional that corrects the measured character by a multiple of
/// the lifted free degree (used when a torsion generator is only a torsion
/// element modulo the torus, like H1' = H1 T_{xi,xi}).
pub struct TorsionGen<F: Field> {
    pub map: Matrix<F>,
    pub order: u64,
    pub twist: Vec<i64>,
}

/// An order-36 torus sample together with the integer functional w such
/// that the sample acts on the weight-x component by zeta^{<w, x>}.
pub struct TorusSample<F: Field> {
    pub map: Matrix<F>,
    pub functional: Vec<i64>,
}

impl<F: Field> GradedDecomposition<F> {
    pub fn dim_total(&self) -> usize {
        self.comps.iter().map(|(_, s)| s.dim()).sum()
    }

    /// The type sequence (h_1, ..., h_r): h_i components of dimension i.
    pub fn grading_type(&self) -> Vec<usize> {
        let max = self.comps.iter().map(|(_, s)| s.dim()).max().unwrap_or(0);
        let mut h = vec![0usize; max];
        for (_, s) in self.comps.iter() {
            if s.dim() > 0 {
                h[s.dim() - 1] += 1;
            }
        }
        h
    }

    pub fn support(&self) -> Vec<GroupElem> {
        self.comps.iter().map(|(g, _)| g.clone()).collect()
    }

    pub fn component(&self, g: &GroupElem) -> Option<&Subspace<F>> {
        self.comps.iter().find(|(h, _)| h == g).map(|(_, s)| s)
    }

    fn add_elems(&self, a: &GroupElem, b: &GroupElem) -> GroupElem {
        let t = a
            .0
            .iter()
            .zip(b.0.iter())
            .map(|(x, y)| (x + y) % self.sig.p.max(1))
            .collect();
        let f = a.1.iter().zip(b.1.iter()).map(|(x, y)| x + y).collect();
        (t, f)
    }

    /// Hard postcondition: [L_g, L_h] lands in L_{g+h}, zero when g+h is
    /// unsupported. Catches any collision introduced by weight lifting.
    pub fn check_bracket_compatibility(
        &self,
        alg: &StructuredAlgebra<F>,
    ) -> Result<(), GradingError> {
        let n = self.comps.len();
        let bad = (0..n).into_par_iter().find_map_any(|i| {
            for j in i..n {
                let (gi, si) = &self.comps[i];
                let (gj, sj) = &self.comps[j];
                let target = self.add_elems(gi, gj);
                let tgt_space = self.component(&target);
                for x in si.basis_vectors().iter() {
                    for y in sj.basis_vectors().iter() {
                        let br = alg.bracket(x, y);
                        let ok = match tgt_space {
                            Some(sp) => sp.contains(&br),
                            None => br.iter().all(|c| c.is_zero()),
                        };
                        if !ok {
                            return Some(GradingError::Incompatible(gi.clone(), gj.clone()));
                        }
                    }
                }
            }
            None
        });
        match bad {
            Some(e) => Err(e),
            None => Ok(()),
        }
    }

    /// The support must generate a finite-index sublattice on the free part
    /// and separate all torsion characters: the mixed reduction mod p has to
    /// fill F_p^{t+f}. Returns the free-lattice index.
    pub fn support_index(&self) -> Result<i64, GradingError> {
        let t = self.sig.torsion;
        let f = self.sig.free;
        let p = self.sig.p;
        // mixed rank over F_p
        let mut rank = 0usize;
        let mut basis: Vec<Vec<u64>> = Vec::new();
        for (g, _) in self.comps.iter() {
            let mut row: Vec<u64> = g.0.iter().map(|x| x % p).collect();
            row.extend(g.1.iter().map(|x| x.rem_euclid(p as i64) as u64));
            for b in basis.iter() {
                let lead = b.iter().position(|x| *x != 0).unwrap();
                if row[lead] != 0 {
                    let factor = row[lead] * modinv_u64(b[lead], p) % p;
                    for c in 0..row.len() {
                        row[c] = (row[c] + (p - factor % p) * b[c]) % p;
                    }
                }
            }
            if row.iter().any(|x| *x != 0) {
                basis.push(row);
                rank += 1;
            }
        }
        if rank < t + f {
            return Err(GradingError::SupportSmall);
        }
        // free-lattice index via the Hermite diagonal product
        if f == 0 {
            return Ok(1);
        }
        let rows: Vec<Vec<i64>> = self.comps.iter().map(|(g, _)| g.1.clone()).collect();
        hermite_index(rows, f).ok_or(GradingError::SupportSmall)
    }
}

fn modinv_u64(a: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    let mut b = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// Index of the row lattice in Z^n (None when the rank is deficient).
fn hermite_index(mut rows: Vec<Vec<i64>>, n: usize) -> Option<i64> {
    let mut index = 1i64;
    let mut col = 0;
    let mut row = 0;
    while col < n {
        loop {
            let mut piv: Option<(usize, i64)> = None;
            for r in row..rows.len() {
                let v = rows[r][col];
                if v != 0 && piv.map(|(_, pv): (usize, i64)| v.abs() < pv.abs()).unwrap_or(true) {
                    piv = Some((r, v));
                }
            }
            let Some((pr, pv)) = piv else { return None };
            rows.swap(row, pr);
            let mut again = false;
            for r in (row + 1)..rows.len() {
                let q = rows[r][col].div_euclid(pv);
                if q != 0 {
                    for c in 0..n {
                        rows[r][c] -= q * rows[row][c];
                    }
                }
                if rows[r][col] != 0 {
                    again = true;
                }
            }
            if !again {
                break;
            }
        }
        index *= rows[row][col].abs();
        row += 1;
        col += 1;
        if row == rows.len() && col < n {
            return None;
        }
    }
    Some(index)
}

/// Split a list of labeled subspaces by the eigenvalues of `map` restricted
/// to each subspace; eigenexponents range over multiples of 36/order.
fn eigensplit<F: Field>(
    alg_dim: usize,
    parts: Vec<(Vec<i64>, Subspace<F>)>,
    map: &Matrix<F>,
    order: u64,
    root: &(dyn Fn(i64) -> F + Sync),
) -> Result<Vec<(Vec<i64>, Subspace<F>)>, GradingError> {
    let zero = map.at(0, 0).zero_like();
    let results: Vec<Vec<(Vec<i64>, Subspace<F>)>> = parts
        .into_par_iter()
        .map(|(label, w)| {
            let k = w.dim();
            if k == 0 {
                return vec![];
            }
            // restriction of map to w in its RREF coordinates
            let mut rest = Matrix::zero(k, k, &zero);
            for (ri, v) in w.basis_vectors().iter().enumerate() {
                let img = map.apply(v);
                let coords = w
                    .coordinates(&img)
                    .expect("commuting generators preserve joint eigenspaces");
                for (ci, c) in coords.into_iter().enumerate() {
                    *rest.at_mut(ci, ri) = c;
                }
            }
            // note: rest columns are images of basis vectors
            let mut out = Vec::new();
            let step = (36 / order) as i64;
            let mut seen = 0;
            for e in 0..order as i64 {
                let lam = root(e * step);
                let es = rest.eigenspace(&lam);
                if es.dim() == 0 {
                    continue;
                }
                seen += es.dim();
                // map back to ambient coordinates
                let mut vecs = Vec::new();
                for cv in es.basis_vectors() {
                    let mut amb = vec![zero.zero_like(); alg_dim];
                    for (ci, c) in cv.iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        for t in 0..alg_dim {
                            let b = w.basis.at(ci, t);
                            if !b.is_zero() {
                                amb[t] = amb[t].add(&c.mul(b));
                            }
                        }
                    }
                    vecs.push(amb);
                }
                let mut lab = label.clone();
                lab.push(e);
                out.push((lab, Subspace::from_vectors(alg_dim, vecs, &zero)));
            }
            if seen != k {
                // signal through an empty marker; caller checks totals
            }
            out
        })
        .collect();
    Ok(results.into_iter().flatten().collect())
}

/// Compute the joint eigenspace decomposition with exact integer weight
/// lifting and validate it as a grading.
pub fn simultaneous_decomposition<F: Field>(
    alg: &StructuredAlgebra<F>,
    torsion_gens: &[TorsionGen<F>],
    samples: &[TorusSample<F>],
    root: &(dyn Fn(i64) -> F + Sync),
) -> Result<GradedDecomposition<F>, GradingError> {
    let one = alg.one();
    let dim = alg.dim;
    let all: Vec<&Matrix<F>> = torsion_gens
        .iter()
        .map(|t| &t.map)
        .chain(samples.iter().map(|s| &s.map))
        .collect();
    for (i, f) in all.iter().enumerate() {
        for (j, g) in all.iter().enumerate().skip(i + 1) {
            if f.mul(g) != g.mul(f) {
                return Err(GradingError::NonCommuting(i, j));
            }
        }
    }
    for (i, t) in torsion_gens.iter().enumerate() {
        if t.map.pow_until_identity(t.order as usize) != Some(t.order as usize)
            && !t.map.is_identity()
        {
            return Err(GradingError::WrongOrder(i, t.order));
        }
    }
    for (i, s) in samples.iter().enumerate() {
        if s.map.pow_until_identity(37).map(|o| 36 % o == 0) != Some(true) {
            return Err(GradingError::WrongOrder(torsion_gens.len() + i, 36));
        }
    }
    let mut parts = vec![(Vec::new(), Subspace::full(dim, &one))];
    for t in torsion_gens.iter() {
        parts = eigensplit(dim, parts, &t.map, t.order, root)?;
    }
    for s in samples.iter() {
        parts = eigensplit(dim, parts, &s.map, 36, root)?;
    }
    let total: usize = parts.iter().map(|(_, s)| s.dim()).sum();
    if total != dim {
        return Err(GradingError::NotDiagonalizable(total, dim));
    }
    // assemble group elements: lift free weights, then twist torsion chars
    let nt = torsion_gens.len();
    let nf = samples.len();
    let free_rank = if nf > 0 { samples[0].functional.len() } else { 0 };
    let p = torsion_gens.first().map(|t| t.order).unwrap_or(2);
    let mut comps = Vec::new();
    for (label, space) in parts.into_iter() {
        let sample_exps: Vec<i64> = label[nt..nt + nf].to_vec();
        let free = lift_weights(&sample_exps, samples, free_rank)?;
        for x in free.iter() {
            if x.abs() > 8 {
                return Err(GradingError::LiftMargin(*x));
            }
        }
        let mut tors = Vec::with_capacity(nt);
        for (i, t) in torsion_gens.iter().enumerate() {
            // measured exponent is in units of 36/order
            let mut k = label[i];
            let twist: i64 = t.twist.iter().zip(free.iter()).map(|(a, b)| a * b).sum();
            k = (k - twist).rem_euclid(t.order as i64);
            tors.push(k as u64);
        }
        comps.push(((tors, free), space));
    }
    comps.sort_by(|a, b| a.0.cmp(&b.0));
    let mut dec = GradedDecomposition {
        sig: GroupSignature { p, torsion: nt, free: free_rank },
        comps,
        free_index: 1,
    };
    dec.check_bracket_compatibility(alg)?;
    dec.free_index = dec.support_index()?;
    Ok(dec)
}

/// Solve <w_j, x> = e_j (mod 36) for the unique small integer weight x.
fn lift_weights(
    exps: &[i64],
    samples: &[TorusSample<impl Field>],
    rank: usize,
) -> Result<Vec<i64>, GradingError> {
    if rank == 0 {
        return Ok(vec![]);
    }
    let mut sol: Option<Vec<i64>> = None;
    let mut cursor = vec![-9i64; rank];
    loop {
        let ok = samples.iter().zip(exps.iter()).all(|(s, e)| {
            let v: i64 = s.functional.iter().zip(cursor.iter()).map(|(a, b)| a * b).sum();
            (v - e).rem_euclid(36) == 0
        });
        if ok {
            if sol.is_some() {
                return Err(GradingError::WeightLift(exps.to_vec()));
            }
            sol = Some(cursor.clone());
        }
        // increment cursor
        let mut k = 0;
        loop {
            if k == rank {
                return sol.ok_or_else(|| GradingError::WeightLift(exps.to_vec()));
            }
            cursor[k] += 1;
            if cursor[k] <= 9 {
                break;
            }
            cursor[k] = -9;
            k += 1;
        }
    }
}

/// Everything needed to reason about one grading realization, including the
/// defining generators so backends over other scalars can redo the split.
pub struct GammaRealization {
    pub model: &'static str,
    pub decomposition: GradedDecomposition<C>,
    pub torsion_names: Vec<String>,
    pub sample_names: Vec<String>,
    pub torsion_gens: Vec<TorsionGen<C>>,
    pub samples: Vec<TorusSample<C>>,
}

impl GammaRealization {
    fn build(
        model: &'static str,
        alg: &StructuredAlgebra<C>,
        torsion_names: Vec<&str>,
        sample_names: Vec<&str>,
        torsion_gens: Vec<TorsionGen<C>>,
        samples: Vec<TorusSample<C>>,
    ) -> Result<Self, GradingError> {
        let decomposition = simultaneous_decomposition(alg, &torsion_gens, &samples, &cyclo_root)?;
        Ok(GammaRealization {
            model,
            decomposition,
            torsion_names: torsion_names.into_iter().map(String::from).collect(),
            sample_names: sample_names.into_iter().map(String::from).collect(),
            torsion_gens,
            samples,
        })
    }
}

pub struct GammaBuild {
    pub id: usize,
    pub primary: GammaRealization,
    pub secondary: Option<GammaRealization>,
}

fn cyclo_root(k: i64) -> C {
    C::root_of_unity(k)
}

fn tg(map: Matrix<C>, order: u64, twist: Vec<i64>) -> TorsionGen<C> {
    TorsionGen { map, order, twist }
}

fn ts(map: Matrix<C>, functional: Vec<i64>) -> TorusSample<C> {
    TorusSample { map, functional }
}

/// Build the grading Gamma_id over its universal signature from the
/// registered automorphisms of the models.
pub fn build_gamma(id: usize, models: &ModelSet) -> Result<GammaBuild, GradingError> {
    match id {
        1 => {
            let m = &models.tits_oct;
            let frame = crate::composition::OctonionFrame::new().expect("frame");
            let torsion: Vec<TorsionGen<C>> = (0..3)
                .map(|k| tg(m.tilde_c(&frame.grading_involution(k)), 2, vec![0, 0]))
                .collect();
            let diag_j = |a: i64, b: i64| {
                // s_{alpha,beta} = Ad(diag(alpha beta, beta, 1)) on Mat3
                let mut d = Matrix::identity(3, &C::one());
                *d.at_mut(0, 0) = C::root_of_unity(a + b);
                *d.at_mut(1, 1) = C::root_of_unity(b);
                m.tilde_j(&crate::jordan::conj_operator(&d))
            };
            let samples = vec![ts(diag_j(1, 0), vec![1, 0]), ts(diag_j(0, 1), vec![0, 1])];
            let primary = GammaRealization::build(
                "tits-oct-mat3",
                &m.handle.algebra,
                vec!["f1", "f2", "f3"],
                vec!["s(z,1)", "s(1,z)"],
                torsion,
                samples,
            )?;
            // Gamma'_1 in the sl2+sl6 model
            let a = &models.a1a5;
            let (f1a, f1b) = crate::models::a1a5::f1_prime();
            let (f3a, f3b) = crate::models::a1a5::f3_prime();
            let torsion2 = vec![
                tg(a.pair_aut(&f1a, &f1b), 2, vec![0, 0]),
                tg(crate::models::a1a5::f2_prime(), 2, vec![0, 0]),
                tg(a.pair_aut(&f3a, &f3b), 2, vec![0, 0]),
            ];
            let sp = |x: i64, y: i64| {
                let (s1, s2) = crate::models::a1a5::s_prime(x, y);
                a.pair_aut(&s1, &s2)
            };
            let samples2 = vec![ts(sp(1, 0), vec![1, 0]), ts(sp(0, 1), vec![0, 1])];
            let secondary = GammaRealization::build(
                "a1a5",
                &a.handle.algebra,
                vec!["f1'", "f2'", "f3'"],
                vec!["s'(z,1)", "s'(1,z)"],
                torsion2,
                samples2,
            )?;
            Ok(GammaBuild { id, primary, secondary: Some(secondary) })
        }
        2 => {
            let m = &models.elduque;
            let frame = crate::composition::OctonionFrame::new().expect("frame");
            let id2 = Matrix::identity(2, &C::one());
            let rho =
                m.pair_aut(&Matrix::identity(8, &C::one()), &crate::models::elduque::s2_flip());
            let mut torsion = vec![tg(rho, 2, vec![0])];
            for k in 0..3 {
                torsion.push(tg(m.pair_aut(&frame.grading_involution(k), &id2), 2, vec![0]));
            }
            let samples = vec![ts(m.t_sample(1).expect("t sample"), vec![1])];
            let primary = GammaRealization::build(
                "elduque-s8-s2",
                &m.handle.algebra,
                vec!["rho", "F1", "F2", "F3"],
                vec!["t(z)"],
                torsion,
                samples,
            )?;
            Ok(GammaBuild { id, primary, secondary: None })
        }
        3 => {
            let m = &models.elduque;
            let rho =
                m.pair_aut(&Matrix::identity(8, &C::one()), &crate::models::elduque::s2_flip());
            let torsion = vec![tg(rho, 2, vec![0, 0, 0, 0])];
            let samples = vec![
                ts(m.t4_sample([1, 0, 0, 0]), vec![1, 0, 0, 0]),
                ts(m.t4_sample([0, 1, 0, 0]), vec![0, 1, 0, 0]),
                ts(m.t4_sample([0, 0, 1, 0]), vec![0, 0, 1, 0]),
                ts(m.t4_sample([0, 0, 0, 1]), vec![0, 0, 0, 1]),
            ];
            let primary = GammaRealization::build(
                "elduque-s8-s2",
                &m.handle.algebra,
                vec!["rho"],
                vec!["t4_1", "t4_2", "t4_3", "t4_4"],
                torsion,
                samples,
            )?;
            Ok(GammaBuild { id, primary, secondary: None })
        }
        4 => {
            let m = &models.tits_oct;
            let (bm, cm) = crate::jordan::pauli_pair();
            let torsion = vec![
                tg(m.tilde_j(&crate::jordan::conj_operator(&bm)), 3, vec![0, 0]),
                tg(m.tilde_j(&crate::jordan::conj_operator(&cm)), 3, vec![0, 0]),
            ];
            let frame = crate::composition::OctonionFrame::new().expect("frame");
            let toct = |a: i64, b: i64| {
                m.tilde_c(&frame.torus_element(&C::root_of_unity(a), &C::root_of_unity(b)))
            };
            let samples = vec![ts(toct(1, 0), vec![1, 0]), ts(toct(0, 1), vec![0, 1])];
            let primary = GammaRealization::build(
                "tits-oct-mat3",
                &m.handle.algebra,
                vec!["h1", "h2"],
                vec!["t(z,1)", "t(1,z)"],
                torsion,
                samples,
            )?;
            // Adams realization with H1' = H1 T_{xi,xi} and T'-coordinates
            let ad = &models.adams;
            let torsion2 = vec![
                tg(ad.h1().mul(&ad.t_ab(4, 4)), 3, vec![0, 0]),
                tg(ad.h2(), 3, vec![0, 0]),
            ];
            // T'_{z,z} = T_{z,1} (functional m+n), T'_{z,z^-2} = T_{z^-1,z}
            let samples2 =
                vec![ts(ad.t_ab(1, 0), vec![1, 1]), ts(ad.t_ab(-1, 1), vec![1, -2])];
            let secondary = GammaRealization::build(
                "adams",
                &ad.handle.algebra,
                vec!["H1'", "H2'"],
                vec!["T'(z,z)", "T'(z,z^-2)"],
                torsion2,
                samples2,
            )?;
            Ok(GammaBuild { id, primary, secondary: Some(secondary) })
        }
        5 => {
            let five = &models.five;
            use crate::models::fivegrading as fg;
            let mut torsion = vec![tg(fg::theta(), 2, vec![0])];
            for j in 1..5 {
                torsion.push(tg(fg::tilde(&fg::diag_signs(&[0, j])), 2, vec![0]));
            }
            let samples = vec![ts(fg::t1_sample(1), vec![1])];
            let primary = GammaRealization::build(
                "five-grading",
                &five.handle.algebra,
                vec!["theta", "f12", "f13", "f14", "f15"],
                vec!["f(z)"],
                torsion,
                samples,
            )?;
            Ok(GammaBuild { id, primary, secondary: None })
        }
        6 => {
            let five = &models.five;
            use crate::models::fivegrading as fg;
            let torsion = vec![
                tg(fg::theta(), 2, vec![0, 0]),
                tg(fg::tilde(&fg::diag_signs(&[3, 5])), 2, vec![0, 0]),
                tg(fg::tilde(&fg::diag_signs(&[3, 4])), 2, vec![0, 0]),
            ];
            let samples = vec![
                ts(fg::t1_sample(1), vec![1, 0]),
                ts(fg::tilde(&fg::psi_block(1)), vec![0, 1]),
            ];
            let primary = GammaRealization::build(
                "five-grading",
                &five.handle.algebra,
                vec!["theta", "g1'", "g2'"],
                vec!["f(z)", "psi(z)"],
                torsion,
                samples,
            )?;
            Ok(GammaBuild { id, primary, secondary: None })
        }
        _ => panic!("gamma id out of range"),
    }
}

/// JSON export of a grading: signature, support, dimensions, basis vectors.
pub fn export_json(dec: &GradedDecomposition<C>) -> serde_json::Value {
    let comps: Vec<serde_json::Value> = dec
        .comps
        .iter()
        .map(|(g, s)| {
            serde_json::json!({
                "torsion": g.0,
                "free": g.1,
                "dim": s.dim(),
                "basis": s
                    .basis_vectors()
                    .iter()
                    .map(|v| v.iter().map(|c| c.to_text()).collect::<Vec<_>>())
                    .collect::<Vec<_>>(),
            })
        })
        .collect();
    serde_json::json!({
        "signature": dec.sig,
        "components": comps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::build_all;

    #[test]
    fn single_involution_splits() {
        let models = build_all().unwrap();
        let th = crate::models::fivegrading::theta();
        let torsion = vec![TorsionGen { map: th, order: 2, twist: vec![] }];
        let dec = simultaneous_decomposition(
            &models.five.handle.algebra,
            &torsion,
            &[],
            &cyclo_root,
        )
        .unwrap();
        let dims: Vec<usize> = dec.comps.iter().map(|(_, s)| s.dim()).collect();
        assert_eq!(dims, vec![36, 42]);
    }

    #[test]
    fn empty_generators_give_full_component() {
        let models = build_all().unwrap();
        let dec = simultaneous_decomposition(
            &models.five.handle.algebra,
            &[],
            &[],
            &cyclo_root,
        )
        .unwrap();
        assert_eq!(dec.comps.len(), 1);
        assert_eq!(dec.comps[0].1.dim(), 78);
    }

    #[test]
    fn gamma_types_match_the_table() {
        let models = build_all().unwrap();
        let expect: [(usize, Vec<usize>); 6] = [
            (1, vec![48, 1, 0, 7]),
            (2, vec![57, 0, 7]),
            (3, vec![72, 1, 0, 1]),
            (4, vec![60, 9]),
            (5, vec![73, 0, 0, 0, 1]),
            (6, vec![60, 7, 0, 1]),
        ];
        for (id, ty) in expect.iter() {
            let g = build_gamma(*id, &models).unwrap();
            assert_eq!(g.primary.decomposition.grading_type(), *ty, "gamma {}", id);
            assert_eq!(g.primary.decomposition.dim_total(), 78);
            if let Some(sec) = &g.secondary {
                assert_eq!(sec.decomposition.grading_type(), *ty, "gamma {} secondary", id);
            }
        }
    }
}

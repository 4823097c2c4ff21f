//! Per-grading Weyl verification: realize the explicit normalizer
//! automorphisms, compute their induced matrices on the universal grading
//! group, compare with the displayed matrices, close up under products, and
//! check the closure against the claimed set.

use super::claimed::{claimed_weyl, kappa, sp4_enumerate, ClaimedSet};
use super::obstructions::{obstruction_checks, CheckLine};
use super::{closure, induced_on_group, sl2_weyl_element, GroupAutMatrix, GroupSig, WeylError};
use crate::composition::OctonionFrame;
use crate::cyclotomic::CycloScalar;
use crate::exactlin::Matrix;
use crate::gradings::{build_gamma, GammaBuild, GroupElem};
use crate::models::fivegrading as fg;
use crate::models::ModelSet;
use serde::Serialize;

type C = CycloScalar;

#[derive(Debug, Clone, Serialize)]
pub struct RealizedGen {
    pub name: String,
    pub realization: String,
    pub matrix: String,
    pub matches_displayed: Option<bool>,
}

#[derive(Debug, Serialize)]
pub struct WeylReport {
    pub gamma: usize,
    pub grading_type: Vec<usize>,
    pub claimed_order: usize,
    pub closure_order: usize,
    pub closure_matches_claimed: bool,
    pub all_realized_in_claimed: bool,
    pub generators: Vec<RealizedGen>,
    pub structural_checks: Vec<CheckLine>,
    pub obstructions: Vec<CheckLine>,
    pub assumptions: Vec<String>,
    pub pass: bool,
}

fn fmt_gaut(m: &GroupAutMatrix) -> String {
    format!("A={:?} C={:?} B={:?}", m.a, m.c, m.b)
}

fn check(name: &str, expected: impl ToString, got: impl ToString, out: &mut Vec<CheckLine>) {
    let e = expected.to_string();
    let g = got.to_string();
    out.push(CheckLine { name: name.to_string(), pass: e == g, expected: e, got: g });
}

/// A displayed matrix from the propositions, as blocks.
fn displayed(sig: GroupSig, a: Vec<u64>, c: Vec<u64>, b: Vec<i64>) -> GroupAutMatrix {
    GroupAutMatrix::from_blocks(sig, a, c, b)
}

fn exact(m: GroupAutMatrix) -> (GroupAutMatrix, MatchKind) {
    (m, MatchKind::Exact)
}

fn ident_a(t: usize) -> Vec<u64> {
    let mut a = vec![0u64; t * t];
    for i in 0..t {
        a[i * t + i] = 1;
    }
    a
}

#[derive(Clone, Copy, PartialEq)]
enum MatchKind {
    Exact,
}

struct Realization {
    name: String,
    realization: String,
    map: Matrix<C>,
    expect: Option<(GroupAutMatrix, MatchKind)>,
    in_secondary: bool,
}



fn realized_generators(
    id: usize,
    models: &ModelSet,
    gamma: &GammaBuild,
) -> Result<Vec<Realization>, WeylError> {
    let frame = OctonionFrame::new().expect("frame");
    let mut out = Vec::new();
    match id {
        1 => {
            let m = &models.tits_oct;
            let sig = GroupSig { p: 2, t: 3, r: 2 };
            // octonion automorphisms realizing GL3(Z2) generators
            let cyc = [[0u8, 0, 1], [1, 0, 0], [0, 1, 0]];
            let tvec = [[1u8, 1, 0], [0, 1, 0], [0, 0, 1]];
            for (n, a) in [("oct-gl3-cycle", cyc), ("oct-gl3-transvection", tvec)] {
                let phi = frame.graded_automorphism(a).expect("graded automorphism");
                out.push(Realization {
                    name: n.into(),
                    realization: "tits-oct-mat3".into(),
                    map: m.tilde_c(&phi),
                    expect: None,
                    in_secondary: false,
                });
            }
            // Jordan permutations (1,2,3) and (1,2): tau1, tau2 blocks
            let pmat = |perm: [usize; 3]| {
                let mut p = Matrix::zero(3, 3, &C::zero());
                for (i, t) in perm.iter().enumerate() {
                    *p.at_mut(*t, i) = C::one();
                }
                p
            };
            out.push(Realization {
                name: "jordan-perm-123".into(),
                realization: "tits-oct-mat3".into(),
                map: m.tilde_j(&crate::jordan::conj_operator(&pmat([1, 2, 0]))),
                expect: Some(exact(displayed(sig, ident_a(3), vec![0; 6], vec![0, -1, 1, -1]))),
                in_secondary: false,
            });
            out.push(Realization {
                name: "jordan-perm-12".into(),
                realization: "tits-oct-mat3".into(),
                map: m.tilde_j(&crate::jordan::conj_operator(&pmat([1, 0, 2]))),
                expect: Some(exact(displayed(sig, ident_a(3), vec![0; 6], vec![-1, 1, 0, 1]))),
                in_secondary: false,
            });
            // the C-block generators in the a1a5 realization
            let a = &models.a1a5;
            let perm6 = |s: [usize; 6]| fg::p_sigma(&s);
            let id2 = Matrix::identity(2, &C::one());
            out.push(Realization {
                name: "perm-(1,4)(3,6)".into(),
                realization: "a1a5".into(),
                map: a.pair_aut(&id2, &perm6([3, 1, 5, 0, 4, 2])),
                expect: Some(exact(displayed(
                    sig,
                    ident_a(3),
                    vec![1, 0, 0, 0, 0, 0],
                    vec![1, 0, 0, 1],
                ))),
                in_secondary: true,
            });
            out.push(Realization {
                name: "perm-(2,5)(3,6)".into(),
                realization: "a1a5".into(),
                map: a.pair_aut(&id2, &perm6([0, 4, 5, 3, 1, 2])),
                expect: Some(exact(displayed(
                    sig,
                    ident_a(3),
                    vec![0, 1, 0, 0, 0, 0],
                    vec![1, 0, 0, 1],
                ))),
                in_secondary: true,
            });
        }
        2 => {
            let m = &models.elduque;
            let sig = GroupSig { p: 2, t: 4, r: 1 };
            let id2 = Matrix::identity(2, &C::one());
            let cyc = [[0u8, 0, 1], [1, 0, 0], [0, 1, 0]];
            let tvec = [[1u8, 1, 0], [0, 1, 0], [0, 0, 1]];
            for (n, a) in [("oct-gl3-cycle", cyc), ("oct-gl3-transvection", tvec)] {
                let phi = frame.graded_automorphism(a).expect("graded automorphism");
                out.push(Realization {
                    name: n.into(),
                    realization: "elduque-s8-s2".into(),
                    map: m.pair_aut(&phi, &id2),
                    expect: None,
                    in_secondary: false,
                });
            }
            out.push(Realization {
                name: "Psi0".into(),
                realization: "elduque-s8-s2".into(),
                map: m.psi_map(0),
                expect: Some(exact(displayed(sig, ident_a(4), vec![1, 0, 0, 0], vec![1]))),
                in_secondary: false,
            });
            // grading reversals from sl2 pairs at degree-one supports
            let dec = &gamma.primary.decomposition;
            let mut added = 0;
            for (g, s) in dec.comps.iter() {
                if (g.1 == vec![1] || g.1 == vec![2]) && s.dim() == 1 {
                    if let Ok(w) = sl2_weyl_element(&m.handle.algebra, dec, g) {
                        out.push(Realization {
                            name: format!("sl2-weyl@{:?}", g),
                            realization: "elduque-s8-s2".into(),
                            map: w,
                            expect: None,
                            in_secondary: false,
                        });
                        added += 1;
                    }
                }
            }
            if added == 0 {
                return Err(WeylError::Sl2("no degree-one sl2 pair".into()));
            }
        }
        3 => {
            let m = &models.elduque;
            let sig = GroupSig { p: 2, t: 1, r: 4 };
            for (i, row) in
                [(0usize, [0u64, 1, 0, 1]), (1, [1, 0, 1, 0]), (2, [1, 1, 1, 1])]
            {
                out.push(Realization {
                    name: format!("Psi{}", i),
                    realization: "elduque-s8-s2".into(),
                    map: m.psi_map(i),
                    expect: Some(exact(displayed(sig, vec![1], row.to_vec(), ident_b(4)))),
                    in_secondary: false,
                });
            }
            // reflections at the simple roots of the even support
            let dec = &gamma.primary.decomposition;
            let simples = simple_roots(dec);
            if simples.len() != 4 {
                return Err(WeylError::Sl2(format!(
                    "expected 4 simple roots, found {}",
                    simples.len()
                )));
            }
            for s in simples {
                let w = sl2_weyl_element(&m.handle.algebra, dec, &s)?;
                out.push(Realization {
                    name: format!("reflection@{:?}", s.1),
                    realization: "elduque-s8-s2".into(),
                    map: w,
                    expect: None,
                    in_secondary: false,
                });
            }
        }
        4 => {
            let m = &models.tits_oct;
            let sig = GroupSig { p: 3, t: 2, r: 2 };
            // GL2(Z3) block: Fourier, quadratic diagonal, transpose
            let w = C::omega();
            let fourier = {
                let mut f = Matrix::zero(3, 3, &C::zero());
                for r in 0..3 {
                    for c in 0..3 {
                        *f.at_mut(r, c) = w.pow((r * c) as u64);
                    }
                }
                f
            };
            let quad = {
                let mut d = Matrix::identity(3, &C::one());
                *d.at_mut(2, 2) = w.clone();
                d
            };
            out.push(Realization {
                name: "pauli-fourier".into(),
                realization: "tits-oct-mat3".into(),
                map: m.tilde_j(&crate::jordan::conj_operator(&fourier)),
                expect: None,
                in_secondary: false,
            });
            out.push(Realization {
                name: "pauli-quad".into(),
                realization: "tits-oct-mat3".into(),
                map: m.tilde_j(&crate::jordan::conj_operator(&quad)),
                expect: None,
                in_secondary: false,
            });
            out.push(Realization {
                name: "mat3-transpose".into(),
                realization: "tits-oct-mat3".into(),
                map: m.tilde_j(&crate::jordan::transpose_operator()),
                expect: None,
                in_secondary: false,
            });
            // octonion rotation u_i -> u_{i+2} (the displayed matrix is the
            // inverse-direction tabulation of u_i -> u_{i+1}), psi1, psi2
            let rho2 = {
                let mut p = Matrix::zero(8, 8, &C::zero());
                *p.at_mut(0, 0) = C::one();
                *p.at_mut(1, 1) = C::one();
                for i in 0..3 {
                    *p.at_mut(2 + (i + 2) % 3, 2 + i) = C::one();
                    *p.at_mut(5 + (i + 2) % 3, 5 + i) = C::one();
                }
                p
            };
            out.push(Realization {
                name: "oct-rotation-sq".into(),
                realization: "tits-oct-mat3".into(),
                map: m.tilde_c(&rho2),
                expect: Some(exact(displayed(sig, ident_a(2), vec![0; 4], vec![-1, 1, -1, 0]))),
                in_secondary: false,
            });
            let psi1 = {
                let mut p = Matrix::zero(8, 8, &C::zero());
                *p.at_mut(0, 1) = C::one();
                *p.at_mut(1, 0) = C::one();
                for i in 0..3 {
                    *p.at_mut(5 + i, 2 + i) = C::one();
                    *p.at_mut(2 + i, 5 + i) = C::one();
                }
                p
            };
            out.push(Realization {
                name: "oct-psi1".into(),
                realization: "tits-oct-mat3".into(),
                map: m.tilde_c(&psi1),
                expect: Some(exact(displayed(sig, ident_a(2), vec![0; 4], vec![-1, 0, 0, -1]))),
                in_secondary: false,
            });
            let psi2 = {
                let mut p = Matrix::zero(8, 8, &C::zero());
                *p.at_mut(0, 0) = C::one();
                *p.at_mut(1, 1) = C::one();
                *p.at_mut(2, 2) = C::from_int(-1);
                *p.at_mut(5, 5) = C::from_int(-1);
                *p.at_mut(4, 3) = C::one();
                *p.at_mut(3, 4) = C::one();
                *p.at_mut(7, 6) = C::one();
                *p.at_mut(6, 7) = C::one();
                p
            };
            out.push(Realization {
                name: "oct-psi2".into(),
                realization: "tits-oct-mat3".into(),
                map: m.tilde_c(&psi2),
                expect: Some(exact(displayed(sig, ident_a(2), vec![0; 4], vec![1, -1, 0, -1]))),
                in_secondary: false,
            });
            // the Adams-side element Psi(M^2) with the displayed column
            let ad = &models.adams;
            let m2 = {
                let mut p = Matrix::zero(3, 3, &C::zero());
                // M: e1 -> e3, e2 -> e1, e3 -> e2 ; M^2: e1 -> e2, e2 -> e3, e3 -> e1
                *p.at_mut(1, 0) = C::one();
                *p.at_mut(2, 1) = C::one();
                *p.at_mut(0, 2) = C::one();
                p
            };
            out.push(Realization {
                name: "adams-psi-inverse".into(),
                realization: "adams".into(),
                map: ad.psi(&m2),
                expect: Some(exact(displayed(
                    sig,
                    ident_a(2),
                    vec![1, 1, 0, 0],
                    vec![-1, 1, -1, 0],
                ))),
                in_secondary: true,
            });
        }
        5 => {
            let sig = GroupSig { p: 2, t: 5, r: 1 };
            // adjacent transpositions of GL(V) permutations
            for k in 0..5usize {
                let mut perm = [0usize, 1, 2, 3, 4, 5];
                perm.swap(k, k + 1);
                out.push(Realization {
                    name: format!("perm-({},{})", k + 1, k + 2),
                    realization: "five-grading".into(),
                    map: fg::tilde(&fg::p_sigma(&perm)),
                    expect: None,
                    in_secondary: false,
                });
            }
            let phi1 = {
                let mut d = Matrix::identity(6, &C::one());
                *d.at_mut(0, 0) = C::i();
                *d.at_mut(1, 1) = C::i().neg();
                d
            };
            let mut a_phi1 = ident_a(5);
            a_phi1[1] = 1; // theta-row picks up the f12 character
            out.push(Realization {
                name: "phi1".into(),
                realization: "five-grading".into(),
                map: fg::tilde(&phi1),
                expect: Some(exact(displayed(sig, a_phi1, vec![0; 5], vec![1]))),
                in_secondary: false,
            });
            let phi2 = {
                let mut d = Matrix::identity(6, &C::one()).scale(&C::i());
                *d.at_mut(0, 0) = C::i().neg();
                d
            };
            out.push(Realization {
                name: "phi2".into(),
                realization: "five-grading".into(),
                map: fg::tilde(&phi2),
                expect: Some(exact(displayed(sig, ident_a(5), vec![1, 0, 0, 0, 0], vec![1]))),
                in_secondary: false,
            });
            out.push(Realization {
                name: "rho-grading-flip".into(),
                realization: "five-grading".into(),
                map: fg::rho_flip(&models.five.handle.algebra)
                    .map_err(|e| WeylError::Sl2(e.to_string()))?,
                expect: None,
                in_secondary: false,
            });
        }
        6 => {
            let sig = GroupSig { p: 2, t: 3, r: 2 };
            let phi0 = {
                let mut d = Matrix::identity(6, &C::one());
                *d.at_mut(3, 3) = C::i();
                *d.at_mut(5, 5) = C::i().neg();
                d
            };
            let mut a_phi0 = ident_a(3);
            a_phi0[1] = 1; // theta-row picks up the g1' character
            out.push(Realization {
                name: "phi0".into(),
                realization: "five-grading".into(),
                map: fg::tilde(&phi0),
                expect: Some(exact(displayed(sig, a_phi0, vec![0; 6], ident_b(2)))),
                in_secondary: false,
            });
            let phi1 = {
                let mut d = Matrix::identity(6, &C::one());
                *d.at_mut(0, 0) = C::i();
                *d.at_mut(1, 1) = C::i().neg();
                d
            };
            // phi1 inverts the psi-rotation torus (phi1 psi_{a,a'} phi1^{-1}
            // = psi_{a,-a'}), so its matrix carries B = diag(1,-1) and the
            // theta twist sits on the T1'-parity column.
            out.push(Realization {
                name: "phi1".into(),
                realization: "five-grading".into(),
                map: fg::tilde(&phi1),
                expect: Some(exact(displayed(
                    sig,
                    ident_a(3),
                    vec![0, 1, 0, 0, 0, 0],
                    vec![1, 0, 0, -1],
                ))),
                in_secondary: false,
            });
        }
        _ => panic!("gamma id out of range"),
    }
    Ok(out)
}

fn ident_b(r: usize) -> Vec<i64> {
    let mut b = vec![0i64; r * r];
    for i in 0..r {
        b[i * r + i] = 1;
    }
    b
}

/// Positive-system simple roots of the free parts of the even support.
fn simple_roots(
    dec: &crate::gradings::GradedDecomposition<C>,
) -> Vec<GroupElem> {
    let zero_t = vec![0u64; dec.sig.torsion];
    let roots: Vec<Vec<i64>> = dec
        .comps
        .iter()
        .filter(|(g, _)| g.0 == zero_t && g.1.iter().any(|x| *x != 0))
        .map(|(g, _)| g.1.clone())
        .collect();
    let height = |r: &Vec<i64>| -> i64 {
        let weights = [1000000i64, 10000, 100, 1];
        r.iter().zip(weights.iter()).map(|(a, w)| a * w).sum()
    };
    let positives: Vec<Vec<i64>> =
        roots.iter().filter(|r| height(r) > 0).cloned().collect();
    let mut simples = Vec::new();
    'outer: for r in positives.iter() {
        for p in positives.iter() {
            for q in positives.iter() {
                let sum: Vec<i64> =
                    p.iter().zip(q.iter()).map(|(a, b)| a + b).collect();
                if sum == *r {
                    continue 'outer;
                }
            }
        }
        simples.push((zero_t.clone(), r.clone()));
    }
    simples
}

/// Realized generator data for backends over other scalar fields.
pub fn realized_for_modular(
    id: usize,
    models: &ModelSet,
    gamma: &GammaBuild,
) -> Result<Vec<(String, String, Matrix<C>, bool, Option<GroupAutMatrix>)>, WeylError> {
    let realized = realized_generators(id, models, gamma)?;
    Ok(realized
        .into_iter()
        .map(|r| {
            let expect = r.expect.map(|(e, MatchKind::Exact)| e);
            (r.name, r.realization, r.map, r.in_secondary, expect)
        })
        .collect())
}

/// The derived Gamma_6 generators with their provenance labels.
pub fn gamma6_derived_public() -> Vec<(String, GroupAutMatrix)> {
    gamma6_derived(GroupSig { p: 2, t: 3, r: 2 })
}

/// The Gamma_6 block generators derived from the certified 8x8 symplectic
/// identities: p1, p2, p3 give the free block, the similitude conjugators
/// give the torsion block, psi gives the column.
fn gamma6_derived(sig: GroupSig) -> Vec<(String, GroupAutMatrix)> {
    let ia = ident_a(3);
    vec![
        (
            "p1 (derived)".into(),
            GroupAutMatrix::from_blocks(sig, ia.clone(), vec![0; 6], vec![1, 0, 0, -1]),
        ),
        (
            "p2 (derived)".into(),
            GroupAutMatrix::from_blocks(sig, ia.clone(), vec![0; 6], vec![0, -1, -1, 0]),
        ),
        (
            "p3 (derived)".into(),
            GroupAutMatrix::from_blocks(sig, ia.clone(), vec![0; 6], vec![0, 1, 1, 0]),
        ),
        (
            "swap-conjugator (derived)".into(),
            GroupAutMatrix::from_blocks(
                sig,
                vec![1, 0, 0, 0, 0, 1, 0, 1, 0],
                vec![0; 6],
                ident_b(2),
            ),
        ),
        (
            "transvection-conjugator (derived)".into(),
            GroupAutMatrix::from_blocks(
                sig,
                vec![1, 0, 0, 0, 1, 0, 0, 1, 1],
                vec![0; 6],
                ident_b(2),
            ),
        ),
        (
            "psi (derived)".into(),
            GroupAutMatrix::from_blocks(
                sig,
                ia,
                vec![0, 0, 0, 0, 1, 1],
                ident_b(2),
            ),
        ),
    ]
}

/// Full verification of one Weyl group.
pub fn verify_weyl(id: usize, models: &ModelSet) -> Result<WeylReport, WeylError> {
    let gamma = build_gamma(id, models).map_err(|e| WeylError::Sl2(e.to_string()))?;
    let claimed: ClaimedSet = claimed_weyl(id);
    claimed.certify_group()?;
    let realized = realized_generators(id, models, &gamma)?;
    let mut gens: Vec<GroupAutMatrix> = Vec::new();
    let mut gen_reports = Vec::new();
    let mut structural = Vec::new();
    for r in realized.iter() {
        let dec = if r.in_secondary {
            &gamma.secondary.as_ref().expect("secondary realization").decomposition
        } else {
            &gamma.primary.decomposition
        };
        let alg = match r.realization.as_str() {
            "tits-oct-mat3" => &models.tits_oct.handle.algebra,
            "a1a5" => &models.a1a5.handle.algebra,
            "elduque-s8-s2" => &models.elduque.handle.algebra,
            "adams" => &models.adams.handle.algebra,
            "five-grading" => &models.five.handle.algebra,
            _ => unreachable!(),
        };
        alg.check_automorphism(&r.map).map_err(|_| {
            WeylError::Sl2(format!("{} is not an automorphism", r.name))
        })?;
        let m = induced_on_group(&r.map, dec)?;
        let matches = r.expect.as_ref().map(|(e, MatchKind::Exact)| *e == m);
        gen_reports.push(RealizedGen {
            name: r.name.clone(),
            realization: r.realization.clone(),
            matrix: fmt_gaut(&m),
            matches_displayed: matches,
        });
        if let Some(ok) = matches {
            check(&format!("{} matches displayed matrix", r.name), true, ok, &mut structural);
        }
        gens.push(m);
    }
    if id == 6 {
        for (n, m) in gamma6_derived(claimed.sig) {
            gen_reports.push(RealizedGen {
                name: n.clone(),
                realization: "sp8-matrix-identities".into(),
                matrix: fmt_gaut(&m),
                matches_displayed: None,
            });
            gens.push(m);
        }
    }
    let grp = closure(&gens, claimed.order * 2 + 64)?;
    let closure_order = grp.order();
    let all_in = grp.elements.values().all(|m| claimed.contains(m));
    // structural predicates
    match id {
        3 => {
            let ok = grp.elements.values().all(|m| {
                m.c.len() == 4 && m.c[0] == m.c[2] && m.c[1] == m.c[3]
            });
            check("every realized matrix has first-row pattern (a,b,a,b)", true, ok, &mut structural);
        }
        5 => {
            let ok = grp.elements.values().all(|m| {
                // torsion block: rows 1..5 x cols 1..5 and the kappa column
                let mut a4 = [0u64; 16];
                for i in 0..4 {
                    for j in 0..4 {
                        a4[i * 4 + j] = m.a[(i + 1) * 5 + (j + 1)];
                    }
                }
                let k = kappa(&a4);
                (0..4).all(|i| m.c[i + 1] == k[i])
            });
            check("every realized matrix has column = kappa(A)", true, ok, &mut structural);
            // the transposition images generate the full symplectic set
            let mut x_gens = Vec::new();
            for (r, m) in realized.iter().zip(gens.iter()) {
                if r.name.starts_with("perm-") {
                    x_gens.push(m.clone());
                }
            }
            let sub = closure(&x_gens, 200000)?;
            let a_blocks: std::collections::HashSet<Vec<u64>> = sub
                .elements
                .values()
                .map(|m| {
                    let mut a4 = vec![0u64; 16];
                    for i in 0..4 {
                        for j in 0..4 {
                            a4[i * 4 + j] = m.a[(i + 1) * 5 + (j + 1)];
                        }
                    }
                    a4
                })
                .collect();
            let full: std::collections::HashSet<Vec<u64>> =
                sp4_enumerate().into_iter().collect();
            check(
                "transposition images generate the full Sp4(Z2) set",
                true,
                a_blocks == full,
                &mut structural,
            );
        }
        _ => {}
    }
    // functoriality spot check: induced(f g) = induced(f) induced(g)
    if realized.len() >= 2 {
        let same_primary: Vec<usize> = (0..realized.len())
            .filter(|&k| !realized[k].in_secondary)
            .take(2)
            .collect();
        if same_primary.len() == 2
            && realized[same_primary[0]].realization == realized[same_primary[1]].realization
        {
            let (i, j) = (same_primary[0], same_primary[1]);
            let fg_map = realized[i].map.mul(&realized[j].map);
            let dec = &gamma.primary.decomposition;
            let prod = induced_on_group(&fg_map, dec)?;
            check(
                "induced(f g) = induced(f) induced(g)",
                true,
                prod == gens[i].mul(&gens[j]),
                &mut structural,
            );
        }
    }
    let obstructions = obstruction_checks(id, models);
    let mut assumptions = vec![
        "upper bounds beyond the computed obstructions rest on structural maximality arguments that are not reproduced computationally".into(),
    ];
    if gamma.secondary.is_some() {
        assumptions.push(
            "cross-model assembly identifies the two realizations through an abstract conjugating isomorphism that is not constructed; both realizations are checked to have identical grading type".into(),
        );
    }
    if id == 6 {
        assumptions.push(
            "the GL2(Z2), D4 and column blocks are derived from certified 8x8 symplectic identities rather than realized as 78x78 automorphisms (the sp8 bracket is outside the artifact)".into(),
        );
    }
    let pass = closure_order == claimed.order
        && all_in
        && structural.iter().all(|c| c.pass)
        && obstructions.iter().all(|c| c.pass)
        && gen_reports.iter().all(|g| g.matches_displayed != Some(false));
    Ok(WeylReport {
        gamma: id,
        grading_type: gamma.primary.decomposition.grading_type(),
        claimed_order: claimed.order,
        closure_order,
        closure_matches_claimed: closure_order == claimed.order,
        all_realized_in_claimed: all_in,
        generators: gen_reports,
        structural_checks: structural,
        obstructions,
        assumptions,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::build_all;

    #[test]
    fn verify_gamma5_full() {
        let models = build_all().unwrap();
        let rep = verify_weyl(5, &models).unwrap();
        assert_eq!(rep.closure_order, 46080);
        assert!(rep.pass, "{:?}", rep);
    }
}

//! Modular fast-check backend: replays every dimension, grading type, Weyl
//! order and displayed-matrix comparison over Z/p for primes p = 1 (mod 36),
//! substituting zeta_36 by an element of multiplicative order 36. Exact mode
//! stays the certification path; agreement here is the criterion-8 gate.

use crate::composition::OctonionFrame;
use crate::cyclotomic::{find_order36_root, fp_root_power, CycloScalar, Fp};
use crate::exactlin::Matrix;
use crate::gradings::{
    build_gamma, simultaneous_decomposition, GammaBuild, TorsionGen, TorusSample,
};
use crate::liealg::{algebra_mod_p, fixed_subspace, matrix_mod_p};
use crate::models::fivegrading as fg;
use crate::models::ModelSet;
use crate::weyl::obstructions::CheckLine;
use crate::weyl::verify::realized_for_modular;
use crate::weyl::{closure, induced_on_group};
use serde::Serialize;

type C = CycloScalar;

#[derive(Debug, Serialize)]
pub struct ModularReport {
    pub prime: u64,
    pub root: u64,
    pub checks: Vec<CheckLine>,
    pub pass: bool,
}

fn line(name: String, expected: impl ToString, got: impl ToString) -> CheckLine {
    let e = expected.to_string();
    let g = got.to_string();
    CheckLine { name, pass: e == g, expected: e, got: g }
}

/// The fixed-dimension claims of the acceptance criteria as explicit
/// matrices, so any backend can recompute them.
pub fn dimension_claims(models: &ModelSet) -> Vec<(String, Matrix<C>, usize)> {
    let mut out: Vec<(String, Matrix<C>, usize)> = Vec::new();
    out.push(("fix(theta)".into(), fg::theta(), 36));
    let m = &models.elduque;
    let frame = OctonionFrame::new().expect("frame");
    let id2 = Matrix::identity(2, &C::one());
    let rho = m.pair_aut(&Matrix::identity(8, &C::one()), &crate::models::elduque::s2_flip());
    out.push(("fix(rho)".into(), rho.clone(), 52));
    let f: Vec<Matrix<C>> =
        (0..3).map(|k| m.pair_aut(&frame.grading_involution(k), &id2)).collect();
    for mask in 1..8usize {
        let mut g = Matrix::identity(78, &C::one());
        for (k, fk) in f.iter().enumerate() {
            if (mask >> k) & 1 == 1 {
                g = g.mul(fk);
            }
        }
        out.push((format!("fix(F_{:03b})", mask), g.clone(), 38));
        out.push((format!("fix(rho F_{:03b})", mask), rho.mul(&g), 36));
    }
    // Gamma_3 sign vectors
    for bits in 0..16u64 {
        let b: Vec<i64> = (0..4).map(|k| ((bits >> k) & 1) as i64).collect();
        let t = m.t4_sample([18 * b[0], 18 * b[1], 18 * b[2], 18 * b[3]]);
        let fix_tri: usize = (0..28).filter(|&k| t.at(k, k).is_one()).count();
        out.push((format!("fix(rho t_{:04b})", bits), rho.mul(&t), fix_tri + 24));
    }
    // Gamma_4 torus and h_i classes
    let tm = &models.tits_oct;
    let toct = |a: i64, b: i64| {
        tm.tilde_c(&frame.torus_element(&C::root_of_unity(a), &C::root_of_unity(b)))
    };
    for (i, j, d) in [
        (1i64, 1i64, 24usize),
        (2, 2, 24),
        (0, 1, 36),
        (0, 2, 36),
        (1, 0, 36),
        (2, 0, 36),
        (1, 2, 36),
        (2, 1, 36),
    ] {
        out.push((format!("fix(t_(w^{},w^{}))", i, j), toct(12 * i, 12 * j), d));
    }
    let (bm, cm) = crate::jordan::pauli_pair();
    let h1 = tm.tilde_j(&crate::jordan::conj_operator(&bm));
    let h2 = tm.tilde_j(&crate::jordan::conj_operator(&cm));
    for (name, h) in [("h1", &h1), ("h2", &h2)] {
        out.push((format!("fix({})", name), h.clone(), 30));
        for (i, j, d) in [
            (1i64, 1i64, 30usize),
            (2, 2, 30),
            (1, 0, 24),
            (0, 1, 24),
            (1, 2, 24),
            (2, 1, 24),
            (2, 0, 24),
            (0, 2, 24),
        ] {
            out.push((
                format!("fix({} t_(w^{},w^{}))", name, i, j),
                h.mul(&toct(12 * i, 12 * j)),
                d,
            ));
        }
    }
    // Gamma_5 minus-count rule
    for bits in 1..64u64 {
        let negs: Vec<usize> = (0..6).filter(|k| (bits >> k) & 1 == 1).collect();
        if negs.len() % 2 != 0 {
            continue;
        }
        let want = if negs.len() == 4 { 46 } else { 38 };
        out.push((format!("fix(Y_{:06b})", bits), fg::tilde(&fg::diag_signs(&negs)), want));
    }
    out
}

/// Replay the verification over Z/p.
pub fn modular_verify(models: &ModelSet, p: u64) -> Result<ModularReport, String> {
    let r = find_order36_root(p).map_err(|e| e.to_string())?;
    let root = move |k: i64| Fp::new(fp_root_power(r, k, p), p);
    let mut checks = Vec::new();
    // criterion 1: models keep dim 78 and zero Jacobi residual
    for (name, alg) in [
        ("tits-oct-mat3", &models.tits_oct.handle.algebra),
        ("tits-binarion-albert", &models.tits_alb.handle.algebra),
        ("elduque-s8-s2", &models.elduque.handle.algebra),
        ("five-grading", &models.five.handle.algebra),
        ("adams", &models.adams.handle.algebra),
        ("a1a5", &models.a1a5.handle.algebra),
    ] {
        let mut am = algebra_mod_p(alg, p, r);
        checks.push(line(format!("jacobi mod {} [{}]", p, name), "ok", match am.check_jacobi() {
            Ok(()) => "ok".to_string(),
            Err(e) => e.to_string(),
        }));
    }
    // criterion 2 + 4 + 5 + 6: gradings, induced matrices, closures
    let expect_types: [(usize, Vec<usize>); 6] = [
        (1, vec![48, 1, 0, 7]),
        (2, vec![57, 0, 7]),
        (3, vec![72, 1, 0, 1]),
        (4, vec![60, 9]),
        (5, vec![73, 0, 0, 0, 1]),
        (6, vec![60, 7, 0, 1]),
    ];
    let expected_orders = [64512usize, 5376, 4608, 5184, 46080, 3072];
    for (id, ty) in expect_types.iter() {
        let gamma: GammaBuild = build_gamma(*id, models).map_err(|e| e.to_string())?;
        let map_real = |real: &crate::gradings::GammaRealization| -> Result<
            crate::gradings::GradedDecomposition<Fp>,
            String,
        > {
            let alg = model_algebra(models, real.model);
            let am = algebra_mod_p(alg, p, r);
            let torsion: Vec<TorsionGen<Fp>> = real
                .torsion_gens
                .iter()
                .map(|t| TorsionGen {
                    map: matrix_mod_p(&t.map, p, r),
                    order: t.order,
                    twist: t.twist.clone(),
                })
                .collect();
            let samples: Vec<TorusSample<Fp>> = real
                .samples
                .iter()
                .map(|s| TorusSample {
                    map: matrix_mod_p(&s.map, p, r),
                    functional: s.functional.clone(),
                })
                .collect();
            simultaneous_decomposition(&am, &torsion, &samples, &root).map_err(|e| e.to_string())
        };
        let dec_p = map_real(&gamma.primary)?;
        checks.push(line(
            format!("type(Gamma{}) mod {}", id, p),
            format!("{:?}", ty),
            format!("{:?}", dec_p.grading_type()),
        ));
        // support labels and dimensions agree with exact mode
        let same_support = dec_p.comps.len() == gamma.primary.decomposition.comps.len()
            && dec_p
                .comps
                .iter()
                .zip(gamma.primary.decomposition.comps.iter())
                .all(|((g, s), (ge, se))| g == ge && s.dim() == se.dim());
        checks.push(line(
            format!("support(Gamma{}) mod {} matches exact", id, p),
            true,
            same_support,
        ));
        let sec_p = match &gamma.secondary {
            Some(sec) => {
                let d = map_real(sec)?;
                checks.push(line(
                    format!("type(Gamma{} secondary) mod {}", id, p),
                    format!("{:?}", ty),
                    format!("{:?}", d.grading_type()),
                ));
                Some(d)
            }
            None => None,
        };
        // realized generators: map, re-induce, re-close
        let realized = realized_for_modular(*id, models, &gamma).map_err(|e| e.to_string())?;
        let mut gens = Vec::new();
        let mut displayed_ok = true;
        for (name, realization, mat, in_secondary, expect) in realized {
            let dec = if in_secondary { sec_p.as_ref().unwrap() } else { &dec_p };
            let mp = matrix_mod_p(&mat, p, r);
            let induced = induced_on_group(&mp, dec).map_err(|e| format!("{}: {}", name, e))?;
            if let Some(e) = expect {
                if e != induced {
                    displayed_ok = false;
                }
            }
            let _ = realization;
            gens.push(induced);
        }
        if *id == 6 {
            gens.extend(crate::weyl::verify::gamma6_derived_public().into_iter().map(|(_, m)| m));
        }
        checks.push(line(
            format!("displayed matrices (Gamma{}) mod {}", id, p),
            true,
            displayed_ok,
        ));
        let grp = closure(&gens, expected_orders[id - 1] * 2 + 64).map_err(|e| e.to_string())?;
        checks.push(line(
            format!("closure order (Gamma{}) mod {}", id, p),
            expected_orders[id - 1],
            grp.order(),
        ));
    }
    // criterion 3: fixed dimensions
    for (name, mat, want) in dimension_claims(models) {
        let mp = matrix_mod_p(&mat, p, r);
        checks.push(line(format!("{} mod {}", name, p), want, fixed_subspace(&mp).dim()));
    }
    let pass = checks.iter().all(|c| c.pass);
    Ok(ModularReport { prime: p, root: r, checks, pass })
}

fn model_algebra<'a>(
    models: &'a ModelSet,
    name: &str,
) -> &'a crate::liealg::StructuredAlgebra<C> {
    match name {
        "tits-oct-mat3" => &models.tits_oct.handle.algebra,
        "a1a5" => &models.a1a5.handle.algebra,
        "elduque-s8-s2" => &models.elduque.handle.algebra,
        "adams" => &models.adams.handle.algebra,
        "five-grading" => &models.five.handle.algebra,
        _ => panic!("unknown model {name}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::build_all;

    #[test]
    fn modular_agrees_at_37() {
        let models = build_all().unwrap();
        let rep = modular_verify(&models, 37).unwrap();
        for c in rep.checks.iter() {
            assert!(c.pass, "{}: want {} got {}", c.name, c.expected, c.got);
        }
    }
}

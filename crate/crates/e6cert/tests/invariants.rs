//! Cross-module invariants: random inner derivations, automorphism
//! composition, refinement sanity of the gradings, and block consistency
//! between the models and their ingredient algebras.

use e6cert::cyclotomic::CycloScalar as C;
use e6cert::exactlin::Subspace;
use e6cert::gradings::{build_gamma, simultaneous_decomposition, TorsionGen};
use e6cert::models::{build_all, ModelSet};
use std::sync::OnceLock;

fn models() -> &'static ModelSet {
    static MODELS: OnceLock<ModelSet> = OnceLock::new();
    MODELS.get_or_init(|| build_all().expect("models build"))
}

fn lcg(state: &mut u64) -> u64 {
    *state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
    *state
}

#[test]
fn ad_of_random_elements_is_a_derivation() {
    let m = models();
    let algs = [
        &m.tits_oct.handle.algebra,
        &m.elduque.handle.algebra,
        &m.five.handle.algebra,
        &m.adams.handle.algebra,
        &m.a1a5.handle.algebra,
    ];
    let mut state = 0xfeedbeef;
    for alg in algs {
        for _ in 0..20 {
            let x: Vec<C> = (0..alg.dim)
                .map(|_| C::from_int((lcg(&mut state) % 7) as i64 - 3))
                .collect();
            alg.check_derivation(&alg.ad(&x)).unwrap();
        }
    }
}

#[test]
fn composed_registered_automorphisms_stay_automorphisms() {
    let m = models();
    for h in [&m.elduque.handle, &m.five.handle] {
        let mats: Vec<_> = h.auts.values().take(4).collect();
        for f in mats.iter() {
            for g in mats.iter() {
                h.algebra.check_automorphism(&f.mul(g)).unwrap();
            }
        }
    }
}

#[test]
fn dercomp_block_matches_d_span() {
    // Der(octonions) block inside the Tits model has the same dimension as
    // the span of the d_{a,b} operators of the composition algebra.
    let m = models();
    assert_eq!(m.tits_oct.dim_der_c(), 14);
    let oct = e6cert::composition::split_octonions();
    let mut vecs = Vec::new();
    for i in 0..8 {
        for j in 0..8 {
            let mut a = vec![C::zero(); 8];
            a[i] = C::one();
            let mut b = vec![C::zero(); 8];
            b[j] = C::one();
            let d = oct.d_ab(&a, &b);
            vecs.push((0..64).map(|t| d.at(t / 8, t % 8).clone()).collect::<Vec<_>>());
        }
    }
    assert_eq!(Subspace::from_vectors(64, vecs, &C::zero()).dim(), 14);
}

#[test]
fn gamma2_forgets_to_z2_4_decomposition() {
    // dropping the free part of Gamma_2 must give the pure Z2^4 eigenspace
    // decomposition of (rho, F1, F2, F3)
    let m = models();
    let g2 = build_gamma(2, m).unwrap();
    let torsion: Vec<TorsionGen<C>> = g2
        .primary
        .torsion_gens
        .iter()
        .map(|t| TorsionGen { map: t.map.clone(), order: t.order, twist: vec![] })
        .collect();
    let pure = simultaneous_decomposition(
        &m.elduque.handle.algebra,
        &torsion,
        &[],
        &|k| C::root_of_unity(k),
    )
    .unwrap();
    // merge Gamma_2 components by torsion label and compare dimensions
    use std::collections::BTreeMap;
    let mut merged: BTreeMap<Vec<u64>, usize> = BTreeMap::new();
    for (g, s) in g2.primary.decomposition.comps.iter() {
        *merged.entry(g.0.clone()).or_insert(0) += s.dim();
    }
    let mut pure_dims: BTreeMap<Vec<u64>, usize> = BTreeMap::new();
    for (g, s) in pure.comps.iter() {
        *pure_dims.entry(g.0.clone()).or_insert(0) += s.dim();
    }
    assert_eq!(merged, pure_dims);
}

#[test]
fn gamma3_free_part_restricted_to_fix_rho_is_cartan_of_f4() {
    // forgetting the torsion of Gamma_3 gives a Z^4 grading; its restriction
    // to fix(rho) has 48 one-dimensional root components and a
    // four-dimensional zero component (the Cartan grading of f4)
    let m = models();
    let g3 = build_gamma(3, m).unwrap();
    use std::collections::BTreeMap;
    let mut even_dims: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
    for (g, s) in g3.primary.decomposition.comps.iter() {
        if g.0 == vec![0] {
            *even_dims.entry(g.1.clone()).or_insert(0) += s.dim();
        }
    }
    let zero = vec![0i64; 4];
    assert_eq!(even_dims.get(&zero), Some(&4));
    let roots: Vec<_> = even_dims.iter().filter(|(k, _)| **k != zero).collect();
    assert_eq!(roots.len(), 48);
    assert!(roots.iter().all(|(_, d)| **d == 1));
}

#[test]
fn lifted_degrees_stay_within_margin() {
    let m = models();
    for id in 1..=6 {
        let g = build_gamma(id, m).unwrap();
        for (gr, _) in g.primary.decomposition.comps.iter() {
            for x in gr.1.iter() {
                assert!(x.abs() <= 8, "gamma {} degree {:?}", id, gr);
            }
        }
    }
}

#[test]
fn cross_model_assembled_realizations_have_equal_types() {
    let m = models();
    for id in [1usize, 4] {
        let g = build_gamma(id, m).unwrap();
        let sec = g.secondary.expect("two realizations");
        assert_eq!(
            g.primary.decomposition.grading_type(),
            sec.decomposition.grading_type()
        );
    }
}

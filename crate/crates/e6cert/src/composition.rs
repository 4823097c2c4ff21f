//! Hurwitz and symmetric composition algebras: the split octonions with their
//! Cartan and Z2^3 gradings, para-Hurwitz twists, the pseudo-octonion algebra,
//! derivations d_{a,b}, and the triality Lie algebra with its t_{x,y} elements.

use crate::cyclotomic::CycloScalar;
use crate::exactlin::{Matrix, Subspace};

type C = CycloScalar;

#[derive(Debug, thiserror::Error)]
pub enum CompError {
    #[error("algebra invariant violated: {0}")]
    Invariant(String),
    #[error("no grading-compatible automorphism exists for the requested support permutation")]
    NoGradedAut,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Flavor {
    Hurwitz,
    ParaHurwitz,
    PseudoOctonion,
}

/// A composition algebra given by its structure constants and the Gram matrix
/// of the polar form n(x,y) = n(x+y) - n(x) - n(y).
#[derive(Clone)]
pub struct CompositionAlgebra {
    pub dim: usize,
    pub labels: Vec<String>,
    /// mult[i][j] = coordinates of b_i * b_j
    pub mult: Vec<Vec<Vec<C>>>,
    /// polar form values n(b_i, b_j)
    pub gram: Matrix<C>,
    /// unit (Hurwitz) or paraunit (para-Hurwitz); None for pseudo-octonions
    pub unit: Option<Vec<C>>,
    pub flavor: Flavor,
}

fn e(dim: usize, k: usize) -> Vec<C> {
    let mut v = vec![C::zero(); dim];
    v[k] = C::one();
    v
}

impl CompositionAlgebra {
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

    /// Polar form n(x, y).
    pub fn polar(&self, x: &[C], y: &[C]) -> C {
        let mut acc = C::zero();
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                let g = self.gram.at(i, j);
                if g.is_zero() || y[j].is_zero() {
                    continue;
                }
                acc = acc.add(&x[i].mul(&y[j]).mul(g));
            }
        }
        acc
    }

    /// Quadratic norm n(x) = polar(x,x)/2.
    pub fn norm(&self, x: &[C]) -> C {
        self.polar(x, x).mul(&C::from_ratio(1, 2))
    }

    /// Trace t(x) = n(x, 1); requires a (para)unit.
    pub fn trace(&self, x: &[C]) -> C {
        let u = self.unit.as_ref().expect("trace needs a unit");
        self.polar(x, u)
    }

    /// Standard involution x -> t(x) 1 - x (Hurwitz algebras).
    pub fn conj(&self, x: &[C]) -> Vec<C> {
        let u = self.unit.as_ref().expect("conjugation needs a unit");
        let t = self.polar(x, u);
        let mut out = Vec::with_capacity(self.dim);
        for i in 0..self.dim {
            out.push(t.mul(&u[i]).sub(&x[i]));
        }
        out
    }

    /// Left multiplication operator l_a.
    pub fn l_op(&self, a: &[C]) -> Matrix<C> {
        let mut m = Matrix::zero(self.dim, self.dim, &C::zero());
        for j in 0..self.dim {
            let col = self.product(a, &e(self.dim, j));
            for i in 0..self.dim {
                *m.at_mut(i, j) = col[i].clone();
            }
        }
        m
    }

    /// Right multiplication operator r_a.
    pub fn r_op(&self, a: &[C]) -> Matrix<C> {
        let mut m = Matrix::zero(self.dim, self.dim, &C::zero());
        for j in 0..self.dim {
            let col = self.product(&e(self.dim, j), a);
            for i in 0..self.dim {
                *m.at_mut(i, j) = col[i].clone();
            }
        }
        m
    }

    /// d_{a,b} = [l_a,l_b] + [l_a,r_b] + [r_a,r_b].
    pub fn d_ab(&self, a: &[C], b: &[C]) -> Matrix<C> {
        let la = self.l_op(a);
        let lb = self.l_op(b);
        let ra = self.r_op(a);
        let rb = self.r_op(b);
        let comm = |x: &Matrix<C>, y: &Matrix<C>| x.mul(y).sub(&y.mul(x));
        comm(&la, &lb).add(&comm(&la, &rb)).add(&comm(&ra, &rb))
    }

    /// Leibniz check for a candidate derivation on all basis pairs.
    pub fn is_derivation(&self, d: &Matrix<C>) -> bool {
        for i in 0..self.dim {
            let dei = d.col_vec(i);
            for j in 0..self.dim {
                let dej = d.col_vec(j);
                let lhs = d.apply(&self.mult[i][j]);
                let rhs1 = self.product(&dei, &e(self.dim, j));
                let rhs2 = self.product(&e(self.dim, i), &dej);
                for k in 0..self.dim {
                    if lhs[k] != rhs1[k].add(&rhs2[k]) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Algebra-automorphism check on all basis pairs.
    pub fn is_automorphism(&self, f: &Matrix<C>) -> bool {
        if f.inverse().is_none() {
            return false;
        }
        for i in 0..self.dim {
            let fi = f.col_vec(i);
            for j in 0..self.dim {
                let fj = f.col_vec(j);
                let lhs = f.apply(&self.mult[i][j]);
                let rhs = self.product(&fi, &fj);
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    /// Multiplicativity of the norm through four-linear polarization:
    /// n(ab, cd) + n(ad, cb) = n(a,c) n(b,d) over all basis 4-tuples.
    pub fn check_norm_multiplicative(&self) -> Result<(), CompError> {
        for a in 0..self.dim {
            let ea = e(self.dim, a);
            for b in 0..self.dim {
                let eb = e(self.dim, b);
                let ab = self.product(&ea, &eb);
                for c in 0..self.dim {
                    let ec = e(self.dim, c);
                    let nac = self.polar(&ea, &ec);
                    for d in 0..self.dim {
                        let ed = e(self.dim, d);
                        let cd = self.product(&ec, &ed);
                        let ad = self.product(&ea, &ed);
                        let cb = self.product(&ec, &eb);
                        let lhs = self.polar(&ab, &cd).add(&self.polar(&ad, &cb));
                        let rhs = nac.mul(&self.polar(&eb, &ed));
                        if lhs != rhs {
                            return Err(CompError::Invariant(format!(
                                "polarized multiplicativity fails at ({a},{b},{c},{d})"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Associativity of the polar form, the symmetric-composition axiom.
    pub fn check_symmetric(&self) -> Result<(), CompError> {
        for x in 0..self.dim {
            let ex = e(self.dim, x);
            for y in 0..self.dim {
                let ey = e(self.dim, y);
                let xy = self.product(&ex, &ey);
                for z in 0..self.dim {
                    let ez = e(self.dim, z);
                    let yz = self.product(&ey, &ez);
                    if self.polar(&xy, &ez) != self.polar(&ex, &yz) {
                        return Err(CompError::Invariant(format!(
                            "n(x*y,z) != n(x,y*z) at ({x},{y},{z})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Full invariant suite for a constructed algebra.
    pub fn validate(&self) -> Result<(), CompError> {
        if self.gram.rank() != self.dim {
            return Err(CompError::Invariant("polar form degenerate".into()));
        }
        self.check_norm_multiplicative()?;
        match self.flavor {
            Flavor::Hurwitz => {
                let u = self.unit.as_ref().unwrap();
                for j in 0..self.dim {
                    let ej = e(self.dim, j);
                    if self.product(u, &ej) != ej || self.product(&ej, u) != ej {
                        return Err(CompError::Invariant("unit fails".into()));
                    }
                }
            }
            Flavor::ParaHurwitz | Flavor::PseudoOctonion => {
                self.check_symmetric()?;
                if let Some(u) = self.unit.as_ref() {
                    // paraunit law e*x = x*e = n(e,x) e - x
                    for j in 0..self.dim {
                        let ej = e(self.dim, j);
                        let ne = self.polar(u, &ej);
                        let want: Vec<C> =
                            (0..self.dim).map(|k| ne.mul(&u[k]).sub(&ej[k])).collect();
                        if self.product(u, &ej) != want || self.product(&ej, u) != want {
                            return Err(CompError::Invariant("paraunit law fails".into()));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// The split octonion algebra on the canonical basis
/// {e1, e2, u1, u2, u3, v1, v2, v3}.
///
/// The norm pairings are n(e1,e2) = n(ui,vi) = 1 with all other basis pairs
/// orthogonal. The multiplication table is the standard split convention;
/// any valid sign convention passes the validation suite, which is what pins
/// it down.
pub fn split_octonions() -> CompositionAlgebra {
    let labels = ["e1", "e2", "u1", "u2", "u3", "v1", "v2", "v3"];
    const E1: usize = 0;
    const E2: usize = 1;
    let u = |i: usize| 2 + (i % 3);
    let v = |i: usize| 5 + (i % 3);
    let dim = 8;
    let mut mult = vec![vec![vec![C::zero(); dim]; dim]; dim];
    let set = |i: usize, j: usize, k: usize, s: i64, m: &mut Vec<Vec<Vec<C>>>| {
        m[i][j][k] = C::from_int(s);
    };
    set(E1, E1, E1, 1, &mut mult);
    set(E2, E2, E2, 1, &mut mult);
    for i in 0..3 {
        // e1 ui = ui = ui e2, e2 vi = vi = vi e1
        set(E1, u(i), u(i), 1, &mut mult);
        set(u(i), E2, u(i), 1, &mut mult);
        set(E2, v(i), v(i), 1, &mut mult);
        set(v(i), E1, v(i), 1, &mut mult);
        // ui u_{i+1} = v_{i+2} = -u_{i+1} ui ; vi v_{i+1} = u_{i+2} = -v_{i+1} vi
        set(u(i), u(i + 1), v(i + 2), 1, &mut mult);
        set(u(i + 1), u(i), v(i + 2), -1, &mut mult);
        set(v(i), v(i + 1), u(i + 2), 1, &mut mult);
        set(v(i + 1), v(i), u(i + 2), -1, &mut mult);
        // ui vi = -e1, vi ui = -e2
        set(u(i), v(i), E1, -1, &mut mult);
        set(v(i), u(i), E2, -1, &mut mult);
    }
    let mut gram = Matrix::zero(dim, dim, &C::zero());
    *gram.at_mut(E1, E2) = C::one();
    *gram.at_mut(E2, E1) = C::one();
    for i in 0..3 {
        *gram.at_mut(u(i), v(i)) = C::one();
        *gram.at_mut(v(i), u(i)) = C::one();
    }
    let mut unit = vec![C::zero(); dim];
    unit[E1] = C::one();
    unit[E2] = C::one();
    CompositionAlgebra {
        dim,
        labels: labels.iter().map(|s| s.to_string()).collect(),
        mult,
        gram,
        unit: Some(unit),
        flavor: Flavor::Hurwitz,
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SmallKind {
    Field,
    Binarion,
    QuaternionMatrix,
}

/// The Hurwitz algebras of dimension 1, 2 and 4: F, F+F, Mat2(F).
pub fn hurwitz_small(kind: SmallKind) -> CompositionAlgebra {
    match kind {
        SmallKind::Field => {
            let mult = vec![vec![vec![C::one()]]];
            let mut gram = Matrix::zero(1, 1, &C::zero());
            *gram.at_mut(0, 0) = C::from_int(2);
            CompositionAlgebra {
                dim: 1,
                labels: vec!["1".into()],
                mult,
                gram,
                unit: Some(vec![C::one()]),
                flavor: Flavor::Hurwitz,
            }
        }
        SmallKind::Binarion => {
            // F + F with n((a,b)) = ab
            let dim = 2;
            let mut mult = vec![vec![vec![C::zero(); dim]; dim]; dim];
            mult[0][0][0] = C::one();
            mult[1][1][1] = C::one();
            let mut gram = Matrix::zero(dim, dim, &C::zero());
            *gram.at_mut(0, 1) = C::one();
            *gram.at_mut(1, 0) = C::one();
            CompositionAlgebra {
                dim,
                labels: vec!["e1".into(), "e2".into()],
                mult,
                gram,
                unit: Some(vec![C::one(), C::one()]),
                flavor: Flavor::Hurwitz,
            }
        }
        SmallKind::QuaternionMatrix => {
            // Mat2(F) with determinant norm; basis E11, E12, E21, E22
            let dim = 4;
            let idx = |r: usize, c: usize| r * 2 + c;
            let mut mult = vec![vec![vec![C::zero(); dim]; dim]; dim];
            for r in 0..2 {
                for c in 0..2 {
                    for r2 in 0..2 {
                        for c2 in 0..2 {
                            if c == r2 {
                                mult[idx(r, c)][idx(r2, c2)][idx(r, c2)] = C::one();
                            }
                        }
                    }
                }
            }
            // det polarization: n(x,y) = det(x+y)-det(x)-det(y)
            // = x11 y22 + x22 y11 - x12 y21 - x21 y12
            let mut gram = Matrix::zero(dim, dim, &C::zero());
            *gram.at_mut(idx(0, 0), idx(1, 1)) = C::one();
            *gram.at_mut(idx(1, 1), idx(0, 0)) = C::one();
            *gram.at_mut(idx(0, 1), idx(1, 0)) = C::from_int(-1);
            *gram.at_mut(idx(1, 0), idx(0, 1)) = C::from_int(-1);
            let mut unit = vec![C::zero(); dim];
            unit[idx(0, 0)] = C::one();
            unit[idx(1, 1)] = C::one();
            CompositionAlgebra {
                dim,
                labels: vec!["E11".into(), "E12".into(), "E21".into(), "E22".into()],
                mult,
                gram,
                unit: Some(unit),
                flavor: Flavor::Hurwitz,
            }
        }
    }
}

/// Para-Hurwitz twist: same space and norm, product x*y = conj(x) conj(y).
pub fn para(c: &CompositionAlgebra) -> CompositionAlgebra {
    assert_eq!(c.flavor, Flavor::Hurwitz, "para needs a unital algebra");
    let dim = c.dim;
    let mut mult = vec![vec![vec![C::zero(); dim]; dim]; dim];
    for i in 0..dim {
        let ci = c.conj(&e(dim, i));
        for j in 0..dim {
            let cj = c.conj(&e(dim, j));
            mult[i][j] = c.product(&ci, &cj);
        }
    }
    CompositionAlgebra {
        dim,
        labels: c.labels.clone(),
        mult,
        gram: c.gram.clone(),
        unit: c.unit.clone(),
        flavor: Flavor::ParaHurwitz,
    }
}

/// The pseudo-octonion algebra P8(F) on trace-zero 3x3 matrices with
/// x*y = w xy - w^2 yx - ((w - w^2)/3) tr(xy) I.
///
/// This product is the (w - w^2)-multiple of the unit-normalized Okubo
/// product, so the multiplicative norm for it is n(x) = -tr(x^2)/2; the
/// validation suite rejects any other scaling.
pub fn pseudo_octonions() -> CompositionAlgebra {
    let w = C::omega();
    let w2 = w.mul(&w);
    // basis of Mat3(F)_0: six off-diagonal units then E11-E22, E22-E33
    let mut basis: Vec<Matrix<C>> = Vec::new();
    let mut labels = Vec::new();
    for r in 0..3 {
        for c in 0..3 {
            if r != c {
                let mut m = Matrix::zero(3, 3, &C::zero());
                *m.at_mut(r, c) = C::one();
                basis.push(m);
                labels.push(format!("E{}{}", r + 1, c + 1));
            }
        }
    }
    for d in 0..2 {
        let mut m = Matrix::zero(3, 3, &C::zero());
        *m.at_mut(d, d) = C::one();
        *m.at_mut(d + 1, d + 1) = C::from_int(-1);
        basis.push(m);
        labels.push(format!("H{}", d + 1));
    }
    let dim = 8;
    let tr = |m: &Matrix<C>| m.at(0, 0).add(m.at(1, 1)).add(m.at(2, 2));
    let to_coords = |m: &Matrix<C>| -> Vec<C> {
        // invert the basis description directly: off-diagonals first
        let mut v = Vec::with_capacity(8);
        for r in 0..3 {
            for c in 0..3 {
                if r != c {
                    v.push(m.at(r, c).clone());
                }
            }
        }
        // diagonal (d1, d2, d3), trace zero: d = a(1,-1,0)+b(0,1,-1) with a = d1, b = d1+d2
        let d1 = m.at(0, 0).clone();
        let d2 = m.at(1, 1).clone();
        v.push(d1.clone());
        v.push(d1.add(&d2));
        v
    };
    let star = |x: &Matrix<C>, y: &Matrix<C>| -> Matrix<C> {
        let xy = x.mul(y);
        let yx = y.mul(x);
        let t = tr(&xy);
        let corr = w.sub(&w2).mul(&C::from_ratio(1, 3)).mul(&t);
        let mut m = xy.scale(&w).sub(&yx.scale(&w2));
        for d in 0..3 {
            let v = m.at(d, d).sub(&corr);
            m.set(d, d, v);
        }
        m
    };
    let mut mult = vec![vec![vec![C::zero(); dim]; dim]; dim];
    for i in 0..dim {
        for j in 0..dim {
            mult[i][j] = to_coords(&star(&basis[i], &basis[j]));
        }
    }
    // polar form of n(x) = -tr(x^2)/2 is n(x,y) = -tr(xy)
    let mut gram = Matrix::zero(dim, dim, &C::zero());
    for i in 0..dim {
        for j in 0..dim {
            *gram.at_mut(i, j) = tr(&basis[i].mul(&basis[j])).neg();
        }
    }
    CompositionAlgebra {
        dim,
        labels,
        mult,
        gram,
        unit: None,
        flavor: Flavor::PseudoOctonion,
    }
}

/// A degree assignment for a basis-aligned grading over Z_p^a x Z^r.
#[derive(Clone, Debug)]
pub struct DegreeMap {
    pub torsion_mod: u64,
    pub torsion_rank: usize,
    pub free_rank: usize,
    pub degrees: Vec<(Vec<u64>, Vec<i64>)>,
}

impl DegreeMap {
    fn deg_add(&self, a: &(Vec<u64>, Vec<i64>), b: &(Vec<u64>, Vec<i64>)) -> (Vec<u64>, Vec<i64>) {
        let t = a
            .0
            .iter()
            .zip(b.0.iter())
            .map(|(x, y)| (x + y) % self.torsion_mod.max(1))
            .collect();
        let f = a.1.iter().zip(b.1.iter()).map(|(x, y)| x + y).collect();
        (t, f)
    }

    /// deg(x y) = deg(x) + deg(y) on every basis pair with nonzero product.
    pub fn check_additive(&self, alg: &CompositionAlgebra) -> Result<(), CompError> {
        for i in 0..alg.dim {
            for j in 0..alg.dim {
                let target = self.deg_add(&self.degrees[i], &self.degrees[j]);
                for (k, v) in alg.mult[i][j].iter().enumerate() {
                    if !v.is_zero() && self.degrees[k] != target {
                        return Err(CompError::Invariant(format!(
                            "degree additivity fails: b{i} * b{j} hits b{k}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Cartan Z^2-grading of the split octonions.
pub fn cartan_degrees() -> DegreeMap {
    let d = |m: i64, n: i64| (vec![], vec![m, n]);
    DegreeMap {
        torsion_mod: 1,
        torsion_rank: 0,
        free_rank: 2,
        degrees: vec![
            d(0, 0),
            d(0, 0),
            d(1, 0),
            d(0, 1),
            d(-1, -1),
            d(-1, 0),
            d(0, -1),
            d(1, 1),
        ],
    }
}

/// The concrete orthogonal frame for the Z2^3-grading: three anticommuting
/// square roots of 1 and the products filling out the seven nonzero degrees.
pub struct OctonionFrame {
    pub oct: CompositionAlgebra,
    /// basis vector of the degree-g component, indexed by g in F2^3 as 0..8
    /// (bit 0 = first coordinate)
    pub w_basis: Vec<Vec<C>>,
    /// canonical-basis coordinates of the frame as rows
    pub to_canonical: Matrix<C>,
    pub from_canonical: Matrix<C>,
}

pub fn g_index(g: [u8; 3]) -> usize {
    (g[0] as usize) | (g[1] as usize) << 1 | (g[2] as usize) << 2
}

impl OctonionFrame {
    pub fn new() -> Result<Self, CompError> {
        let oct = split_octonions();
        let dim = 8;
        let sub = |a: &[C], b: &[C]| -> Vec<C> {
            a.iter().zip(b.iter()).map(|(x, y)| x.sub(y)).collect()
        };
        let w1 = sub(&e(dim, 0), &e(dim, 1)); // e1 - e2
        let w2 = sub(&e(dim, 2), &e(dim, 5)); // u1 - v1
        let w3 = sub(&e(dim, 3), &e(dim, 6)); // u2 - v2
        let ws = [w1, w2, w3];
        // validation: wi^2 = 1, pairwise orthogonal, trace zero
        let unit = oct.unit.clone().unwrap();
        for (i, w) in ws.iter().enumerate() {
            if oct.product(w, w) != unit {
                return Err(CompError::Invariant(format!("w{}^2 != 1", i + 1)));
            }
            for w_ in ws.iter().skip(i + 1) {
                if !oct.polar(w, w_).is_zero() {
                    return Err(CompError::Invariant("frame not orthogonal".into()));
                }
            }
        }
        let mut w_basis = vec![vec![C::zero(); dim]; 8];
        w_basis[0] = unit;
        for (i, w) in ws.iter().enumerate() {
            w_basis[g_index([u8::from(i == 0), u8::from(i == 1), u8::from(i == 2)])] = w.clone();
        }
        // fill composite degrees by multiplying along fixed chains
        let fill = [
            ([1u8, 1, 0], [1u8, 0, 0], [0u8, 1, 0]),
            ([0, 1, 1], [0, 1, 0], [0, 0, 1]),
            ([1, 0, 1], [1, 0, 0], [0, 0, 1]),
            ([1, 1, 1], [1, 1, 0], [0, 0, 1]),
        ];
        for (g, a, b) in fill {
            w_basis[g_index(g)] =
                oct.product(&w_basis[g_index(a)].clone(), &w_basis[g_index(b)].clone());
        }
        let mut to_canonical = Matrix::zero(8, 8, &C::zero());
        for (r, w) in w_basis.iter().enumerate() {
            for c in 0..8 {
                *to_canonical.at_mut(r, c) = w[c].clone();
            }
        }
        let from_canonical = to_canonical
            .inverse()
            .ok_or_else(|| CompError::Invariant("frame not a basis".into()))?;
        Ok(OctonionFrame { oct, w_basis, to_canonical, from_canonical })
    }

    /// Structure scalar mu(g,h) with b_g b_h = mu(g,h) b_{g+h}.
    fn mu(&self, g: usize, h: usize) -> C {
        let prod = self.oct.product(&self.w_basis[g], &self.w_basis[h]);
        let target = g ^ h;
        // coordinates in the w-basis
        let coords = self.from_canonical.transpose().apply(&prod);
        for (k, c) in coords.iter().enumerate() {
            if k != target && !c.is_zero() {
                panic!("product of homogeneous elements not homogeneous");
            }
        }
        coords[target].clone()
    }

    /// Degree map of the Z2^3-grading in the canonical octonion basis order
    /// is not basis-aligned; this one is in the w-basis order 0..8.
    pub fn z23_degrees(&self) -> DegreeMap {
        DegreeMap {
            torsion_mod: 2,
            torsion_rank: 3,
            free_rank: 0,
            degrees: (0..8)
                .map(|g| {
                    (
                        vec![(g & 1) as u64, ((g >> 1) & 1) as u64, ((g >> 2) & 1) as u64],
                        vec![],
                    )
                })
                .collect(),
        }
    }

    /// The grading automorphism with eigenvalue (-1)^{g_k} on the degree-g
    /// component, as a matrix in the canonical basis.
    pub fn grading_involution(&self, k: usize) -> Matrix<C> {
        let mut d = Matrix::zero(8, 8, &C::zero());
        for g in 0..8 {
            let sign = if (g >> k) & 1 == 1 { -1 } else { 1 };
            *d.at_mut(g, g) = C::from_int(sign);
        }
        // conjugate: canonical <- w-basis
        let p = self.to_canonical.transpose(); // columns are w-basis vectors
        p.mul(&d).mul(&p.inverse().unwrap())
    }

    /// Diagonal torus element of the Cartan grading: scalars
    /// {1, 1, a, b, 1/(ab), 1/a, 1/b, ab} on the canonical basis.
    pub fn torus_element(&self, a: &C, b: &C) -> Matrix<C> {
        let ab = a.mul(b);
        let scalars = [
            C::one(),
            C::one(),
            a.clone(),
            b.clone(),
            ab.inv().unwrap(),
            a.inv().unwrap(),
            b.inv().unwrap(),
            ab,
        ];
        let mut m = Matrix::zero(8, 8, &C::zero());
        for (i, s) in scalars.iter().enumerate() {
            *m.at_mut(i, i) = s.clone();
        }
        m
    }

    /// Construct an octonion automorphism that permutes the Z2^3 components
    /// by the invertible map `a` on F2^3 (acting on degree indices). The
    /// scalars on each component are solved multiplicatively; fourth roots of
    /// unity always suffice here.
    pub fn graded_automorphism(&self, a: [[u8; 3]; 3]) -> Result<Matrix<C>, CompError> {
        let apply = |g: usize| -> usize {
            let bits = [(g & 1) as u8, ((g >> 1) & 1) as u8, ((g >> 2) & 1) as u8];
            let mut out = [0u8; 3];
            for r in 0..3 {
                out[r] = (a[r][0] * bits[0] + a[r][1] * bits[1] + a[r][2] * bits[2]) % 2;
            }
            g_index(out)
        };
        let mut mu = vec![vec![C::zero(); 8]; 8];
        for g in 0..8 {
            for h in 0..8 {
                mu[g][h] = self.mu(g, h);
            }
        }
        let roots = [
            C::one(),
            C::from_int(-1),
            C::i(),
            C::i().neg(),
        ];
        for c1 in roots.iter() {
            for c2 in roots.iter() {
                for c3 in roots.iter() {
                    let mut c = vec![C::zero(); 8];
                    c[0] = C::one();
                    c[g_index([1, 0, 0])] = c1.clone();
                    c[g_index([0, 1, 0])] = c2.clone();
                    c[g_index([0, 0, 1])] = c3.clone();
                    // derive composite scalars: c(g+h) = c(g) c(h) mu(g,h) / mu(Ag,Ah)
                    let chains = [
                        (g_index([1, 1, 0]), g_index([1, 0, 0]), g_index([0, 1, 0])),
                        (g_index([0, 1, 1]), g_index([0, 1, 0]), g_index([0, 0, 1])),
                        (g_index([1, 0, 1]), g_index([1, 0, 0]), g_index([0, 0, 1])),
                        (g_index([1, 1, 1]), g_index([1, 1, 0]), g_index([0, 0, 1])),
                    ];
                    for (t, g, h) in chains {
                        let ratio = mu[g][h].div(&mu[apply(g)][apply(h)]).unwrap();
                        c[t] = c[g].mul(&c[h]).mul(&ratio);
                    }
                    // verify all multiplicative constraints
                    let mut ok = true;
                    'outer: for g in 0..8 {
                        for h in 0..8 {
                            let lhs = c[g].mul(&c[h]).mul(&mu[g][h]);
                            let rhs = c[g ^ h].mul(&mu[apply(g)][apply(h)]);
                            if lhs != rhs {
                                ok = false;
                                break 'outer;
                            }
                        }
                    }
                    if !ok {
                        continue;
                    }
                    // build the map in canonical coordinates
                    let mut f = Matrix::zero(8, 8, &C::zero());
                    for g in 0..8 {
                        let img = apply(g);
                        for row in 0..8 {
                            let add = c[g].mul(&self.w_basis[img][row]);
                            if !add.is_zero() {
                                let cur = f.at(row, g).add(&add);
                                f.set(row, g, cur);
                            }
                        }
                    }
                    // f currently maps w-basis coords -> canonical; compose
                    let f = f.mul(&self.from_canonical.transpose());
                    if self.oct.is_automorphism(&f) {
                        return Ok(f);
                    }
                }
            }
        }
        Err(CompError::NoGradedAut)
    }
}

/// Flatten a triple of n x n operators into 3 n^2 coordinates.
pub fn flatten_triple(t: &[Matrix<C>; 3]) -> Vec<C> {
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

/// The triality Lie algebra tri(S) of a symmetric composition algebra:
/// triples (d0,d1,d2) of skew transformations with
/// d0(x*y) = d1(x)*y + x*d2(y), returned as a subspace of 3 n^2 coordinates.
pub fn triality(s: &CompositionAlgebra) -> Subspace<C> {
    let n = s.dim;
    let unknowns = 3 * n * n;
    let mut rows: Vec<Vec<C>> = Vec::new();
    // skewness: for each slot i and basis pair (x <= y): q(d x, y) + q(x, d y) = 0
    for slot in 0..3 {
        for x in 0..n {
            for y in x..n {
                let mut row = vec![C::zero(); unknowns];
                for r in 0..n {
                    // d x = sum_r d[r][x] b_r contributes q(b_r, b_y) d[r][x]
                    let g1 = s.gram.at(r, y);
                    if !g1.is_zero() {
                        let idx = slot * n * n + r * n + x;
                        row[idx] = row[idx].add(g1);
                    }
                    let g2 = s.gram.at(x, r);
                    if !g2.is_zero() {
                        let idx = slot * n * n + r * n + y;
                        row[idx] = row[idx].add(g2);
                    }
                }
                rows.push(row);
            }
        }
    }
    // triality: d0(x*y) - d1(x)*y - x*d2(y) = 0, coordinatewise
    for x in 0..n {
        let ex = e(n, x);
        for y in 0..n {
            let ey = e(n, y);
            let xy = s.product(&ex, &ey);
            for k in 0..n {
                let mut row = vec![C::zero(); unknowns];
                // d0 applied to xy: coefficient of d0[k][m] is xy[m]
                for m in 0..n {
                    if !xy[m].is_zero() {
                        row[k * n + m] = row[k * n + m].add(&xy[m]);
                    }
                }
                // -(d1 x)*y: d1 x = sum_r d1[r][x] b_r ; (b_r * b_y)[k]
                for r in 0..n {
                    let c1 = &s.mult[r][y][k];
                    if !c1.is_zero() {
                        let idx = n * n + r * n + x;
                        row[idx] = row[idx].sub(c1);
                    }
                    let c2 = &s.mult[x][r][k];
                    if !c2.is_zero() {
                        let idx = 2 * n * n + r * n + y;
                        row[idx] = row[idx].sub(c2);
                    }
                }
                rows.push(row);
            }
        }
    }
    Matrix::from_rows(rows).kernel(&C::zero())
}

/// t_{x,y} = (sigma_{x,y}, q(x,y)/2 - r_x l_y, q(x,y)/2 - l_x r_y).
pub fn t_xy(s: &CompositionAlgebra, x: &[C], y: &[C]) -> [Matrix<C>; 3] {
    let n = s.dim;
    let q = s.polar(x, y);
    let half_q = q.mul(&C::from_ratio(1, 2));
    // sigma_{x,y}(z) = q(x,z) y - q(y,z) x
    let mut sigma = Matrix::zero(n, n, &C::zero());
    for z in 0..n {
        let ez = e(n, z);
        let qa = s.polar(x, &ez);
        let qb = s.polar(y, &ez);
        for r in 0..n {
            let v = qa.mul(&y[r]).sub(&qb.mul(&x[r]));
            if !v.is_zero() {
                *sigma.at_mut(r, z) = v;
            }
        }
    }
    let rx = s.r_op(x);
    let ly = s.l_op(y);
    let lx = s.l_op(x);
    let ry = s.r_op(y);
    let mut slot1 = rx.mul(&ly).scale(&C::from_int(-1));
    let mut slot2 = lx.mul(&ry).scale(&C::from_int(-1));
    for i in 0..n {
        let v1 = slot1.at(i, i).add(&half_q);
        slot1.set(i, i, v1);
        let v2 = slot2.at(i, i).add(&half_q);
        slot2.set(i, i, v2);
    }
    [sigma, slot1, slot2]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn octonion_table_valid() {
        let o = split_octonions();
        o.validate().unwrap();
        // n(e1,e2) = 1, e1 idempotent
        assert!(o.polar(&e(8, 0), &e(8, 1)).is_one());
        assert_eq!(o.product(&e(8, 0), &e(8, 0)), e(8, 0));
    }

    #[test]
    fn small_hurwitz_valid() {
        for kind in [SmallKind::Field, SmallKind::Binarion, SmallKind::QuaternionMatrix] {
            hurwitz_small(kind).validate().unwrap();
        }
        let b = hurwitz_small(SmallKind::Binarion);
        // orthogonal idempotents and the polar pairing
        assert!(b.product(&e(2, 0), &e(2, 1)).iter().all(|c| c.is_zero()));
        assert!(b.polar(&e(2, 0), &e(2, 1)).is_one());
        let m = hurwitz_small(SmallKind::QuaternionMatrix);
        assert!(m.norm(m.unit.as_ref().unwrap()).is_one());
    }

    #[test]
    fn para_binarion_swaps_idempotents() {
        let p = para(&hurwitz_small(SmallKind::Binarion));
        p.validate().unwrap();
        assert_eq!(p.product(&e(2, 0), &e(2, 0)), e(2, 1));
        assert_eq!(p.product(&e(2, 1), &e(2, 1)), e(2, 0));
    }

    #[test]
    fn para_octonions_symmetric() {
        let s8 = para(&split_octonions());
        s8.validate().unwrap();
    }

    #[test]
    fn pseudo_octonions_valid() {
        let p8 = pseudo_octonions();
        p8.validate().unwrap();
        assert_eq!(p8.gram.rank(), 8);
        // Z3^2 grading generated by b = diag(1,w,w^2), c = cyclic shift:
        // rewrite the product table in the basis {b^i c^j}, (i,j) != (0,0),
        // and check degree additivity with deg(b) = (1,0), deg(c) = (0,1).
        let w = C::omega();
        let b = {
            let mut m = Matrix::zero(3, 3, &C::zero());
            *m.at_mut(0, 0) = C::one();
            *m.at_mut(1, 1) = w.clone();
            *m.at_mut(2, 2) = w.mul(&w);
            m
        };
        let c = {
            let mut m = Matrix::zero(3, 3, &C::zero());
            *m.at_mut(0, 1) = C::one();
            *m.at_mut(1, 2) = C::one();
            *m.at_mut(2, 0) = C::one();
            m
        };
        let mut pauli: Vec<Matrix<C>> = Vec::new();
        let mut degs = Vec::new();
        for i in 0..3u64 {
            for j in 0..3u64 {
                if (i, j) == (0, 0) {
                    continue;
                }
                let mut m = Matrix::identity(3, &C::one());
                for _ in 0..i {
                    m = m.mul(&b);
                }
                for _ in 0..j {
                    m = m.mul(&c);
                }
                pauli.push(m);
                degs.push((vec![i, j], vec![]));
            }
        }
        // coordinates of a trace-zero matrix in the P8 basis order
        let to_coords = |m: &Matrix<C>| -> Vec<C> {
            let mut v = Vec::with_capacity(8);
            for r in 0..3 {
                for cc in 0..3 {
                    if r != cc {
                        v.push(m.at(r, cc).clone());
                    }
                }
            }
            let d1 = m.at(0, 0).clone();
            let d2 = m.at(1, 1).clone();
            v.push(d1.clone());
            v.push(d1.add(&d2));
            v
        };
        let pauli_coords: Vec<Vec<C>> = pauli.iter().map(&to_coords).collect();
        let change = Matrix::from_rows(pauli_coords.clone()).transpose();
        let inv = change.inverse().unwrap();
        let mut mult = vec![vec![vec![C::zero(); 8]; 8]; 8];
        for i in 0..8 {
            for j in 0..8 {
                let prod = p8.product(&pauli_coords[i], &pauli_coords[j]);
                mult[i][j] = inv.apply(&prod);
            }
        }
        let alg = CompositionAlgebra {
            dim: 8,
            labels: (0..8).map(|k| format!("p{}", k)).collect(),
            mult,
            gram: Matrix::identity(8, &C::one()),
            unit: None,
            flavor: Flavor::PseudoOctonion,
        };
        let dm = DegreeMap { torsion_mod: 3, torsion_rank: 2, free_rank: 0, degrees: degs };
        dm.check_additive(&alg).unwrap();
    }

    #[test]
    fn d_ab_properties() {
        let o = split_octonions();
        // d_{a,a} = 0
        let a = e(8, 2);
        assert!(o.d_ab(&a, &a).is_zero_matrix());
        // d_{u1,v1} is a derivation
        let d = o.d_ab(&e(8, 2), &e(8, 5));
        assert!(o.is_derivation(&d));
        // span of all d_{x,y} over trace-zero elements has dimension 14
        let mut vecs = Vec::new();
        let c0: Vec<Vec<C>> = {
            let mut v = vec![];
            let mut w1 = vec![C::zero(); 8];
            w1[0] = C::one();
            w1[1] = C::from_int(-1);
            v.push(w1);
            for k in 2..8 {
                v.push(e(8, k));
            }
            v
        };
        for x in c0.iter() {
            for y in c0.iter() {
                let d = o.d_ab(x, y);
                vecs.push((0..64).map(|t| d.at(t / 8, t % 8).clone()).collect::<Vec<_>>());
            }
        }
        let span = Subspace::from_vectors(64, vecs, &C::zero());
        assert_eq!(span.dim(), 14);
    }

    #[test]
    fn gradings_on_octonions() {
        let o = split_octonions();
        cartan_degrees().check_additive(&o).unwrap();
        let frame = OctonionFrame::new().unwrap();
        // grading additivity in the w-basis presentation
        let mut mult_w = vec![vec![vec![C::zero(); 8]; 8]; 8];
        for g in 0..8 {
            for h in 0..8 {
                let prod = frame.oct.product(&frame.w_basis[g], &frame.w_basis[h]);
                mult_w[g][h] = frame.from_canonical.transpose().apply(&prod);
            }
        }
        let alg_w = CompositionAlgebra {
            dim: 8,
            labels: (0..8).map(|g| format!("b{}", g)).collect(),
            mult: mult_w,
            gram: frame
                .to_canonical
                .mul(&frame.oct.gram)
                .mul(&frame.to_canonical.transpose()),
            unit: None,
            flavor: Flavor::Hurwitz,
        };
        frame.z23_degrees().check_additive(&alg_w).unwrap();
        // restriction to <1, w1, w2, w1w2> and <1, w1> closes, so the
        // restricted degree maps are gradings as well
        for keep in [vec![0usize, 1, 2, 3], vec![0usize, 1]] {
            for &g in keep.iter() {
                for &h in keep.iter() {
                    for (k, c) in alg_w.mult[g][h].iter().enumerate() {
                        if !c.is_zero() {
                            assert!(keep.contains(&k), "restriction not closed");
                        }
                    }
                }
            }
        }
        // the grading involutions are automorphisms
        for k in 0..3 {
            assert!(frame.oct.is_automorphism(&frame.grading_involution(k)));
        }
    }

    #[test]
    fn torus_elements_are_automorphisms() {
        let frame = OctonionFrame::new().unwrap();
        let t = frame.torus_element(&C::root_of_unity(1), &C::root_of_unity(7));
        assert!(frame.oct.is_automorphism(&t));
    }

    #[test]
    fn graded_automorphism_synthesis() {
        let frame = OctonionFrame::new().unwrap();
        // a 3-cycle and a transvection generate GL3(F2)
        let cyc = [[0u8, 0, 1], [1, 0, 0], [0, 1, 0]];
        let tvec = [[1u8, 1, 0], [0, 1, 0], [0, 0, 1]];
        for a in [cyc, tvec] {
            let f = frame.graded_automorphism(a).unwrap();
            assert!(frame.oct.is_automorphism(&f));
        }
    }

    #[test]
    fn triality_dimensions() {
        let s2 = para(&hurwitz_small(SmallKind::Binarion));
        assert_eq!(triality(&s2).dim(), 2);
        let s8 = para(&split_octonions());
        let tri8 = triality(&s8);
        assert_eq!(tri8.dim(), 28);
        // the cyclic shift preserves the space
        for row in tri8.basis_vectors().iter().take(5) {
            let n2 = 64;
            let shifted: Vec<C> = row[2 * n2..]
                .iter()
                .chain(row[..n2].iter())
                .chain(row[n2..2 * n2].iter())
                .cloned()
                .collect();
            assert!(tri8.contains(&shifted));
        }
    }

    #[test]
    fn t_xy_membership_and_span() {
        let s8 = para(&split_octonions());
        let tri8 = triality(&s8);
        let mut span_vecs = Vec::new();
        for i in 0..8 {
            for j in 0..8 {
                let t = t_xy(&s8, &e(8, i), &e(8, j));
                let flat = flatten_triple(&t);
                assert!(tri8.contains(&flat), "t_xy outside tri at ({i},{j})");
                span_vecs.push(flat);
            }
        }
        let span = Subspace::from_vectors(192, span_vecs, &C::zero());
        assert_eq!(span.dim(), 28);
        // antisymmetric first slot
        let t12 = t_xy(&s8, &e(8, 1), &e(8, 2));
        let t21 = t_xy(&s8, &e(8, 2), &e(8, 1));
        assert!(t12[0].add(&t21[0]).is_zero_matrix());
    }
}

//! Structure-constant algebra engine: sparse bracket tensors, Jacobi
//! verification, automorphism and derivation checks, fixed subspaces, orders,
//! conjugacy-class lookup for order 2/3 automorphisms, and the textual
//! structure-constant dump.

use crate::cyclotomic::{CycloScalar, Field, Fp};
use crate::exactlin::{Matrix, Subspace};
use rayon::prelude::*;
use std::collections::BTreeMap;

#[derive(Debug, thiserror::Error)]
pub enum LieError {
    #[error("jacobi fails at basis triple ({0},{1},{2}); first residual coordinate {3}: {4}")]
    Jacobi(usize, usize, usize, usize, String),
    #[error("not an automorphism: bracket mismatch at basis pair ({0},{1})")]
    NotAutomorphism(usize, usize),
    #[error("not a derivation: Leibniz fails at basis pair ({0},{1})")]
    NotDerivation(usize, usize),
    #[error("map is singular")]
    Singular,
    #[error("order exceeds bound {0}")]
    OrderBound(usize),
    #[error("no class for order {0} with fixed dimension {1}")]
    Unclassifiable(usize, usize),
    #[error("tensor not antisymmetric at ({0},{1})")]
    NotAntisymmetric(usize, usize),
    #[error("dump parse error: {0}")]
    Dump(String),
}

/// Finite-dimensional anticommutative algebra given by a sparse structure
/// tensor over a labeled basis.
#[derive(Clone)]
pub struct StructuredAlgebra<F: Field> {
    pub dim: usize,
    pub labels: Vec<String>,
    rows: Vec<Vec<(u32, F)>>,
    one: F,
    jacobi_checked: bool,
}

/// Incremental builder; entries are accumulated and compressed on `finish`.
pub struct TensorBuilder<F: Field> {
    dim: usize,
    labels: Vec<String>,
    entries: Vec<BTreeMap<u32, F>>,
    one: F,
}

impl<F: Field> TensorBuilder<F> {
    pub fn new(dim: usize, labels: Vec<String>, one: F) -> Self {
        assert_eq!(labels.len(), dim);
        TensorBuilder { dim, labels, entries: vec![BTreeMap::new(); dim * dim], one }
    }

    /// Add c to the coefficient of basis k in [b_i, b_j]; the mirrored term
    /// for (j,i) is added automatically.
    pub fn add(&mut self, i: usize, j: usize, k: usize, c: F) {
        if c.is_zero() {
            return;
        }
        assert!(i != j, "diagonal bracket terms must vanish");
        let e = self.entries[i * self.dim + j].entry(k as u32).or_insert_with(|| c.zero_like());
        *e = e.add(&c);
        let e2 = self.entries[j * self.dim + i].entry(k as u32).or_insert_with(|| c.zero_like());
        *e2 = e2.sub(&c);
    }

    /// Add a whole coordinate vector to [b_i, b_j].
    pub fn add_vec(&mut self, i: usize, j: usize, v: &[F]) {
        for (k, c) in v.iter().enumerate() {
            if !c.is_zero() {
                self.add(i, j, k, c.clone());
            }
        }
    }

    pub fn finish(self) -> StructuredAlgebra<F> {
        let rows = self
            .entries
            .into_iter()
            .map(|m| m.into_iter().filter(|(_, c)| !c.is_zero()).collect())
            .collect();
        StructuredAlgebra {
            dim: self.dim,
            labels: self.labels,
            rows,
            one: self.one,
            jacobi_checked: false,
        }
    }
}

impl<F: Field> StructuredAlgebra<F> {
    pub fn one(&self) -> F {
        self.one.clone()
    }

    pub fn zero_scalar(&self) -> F {
        self.one.zero_like()
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> &[(u32, F)] {
        &self.rows[i * self.dim + j]
    }

    /// Bilinear extension of the tensor.
    pub fn bracket(&self, x: &[F], y: &[F]) -> Vec<F> {
        assert_eq!(x.len(), self.dim, "bracket operand dimension");
        assert_eq!(y.len(), self.dim, "bracket operand dimension");
        let mut out = vec![self.zero_scalar(); self.dim];
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y[j].is_zero() {
                    continue;
                }
                let row = &self.rows[i * self.dim + j];
                if row.is_empty() {
                    continue;
                }
                let c = x[i].mul(&y[j]);
                for (k, v) in row.iter() {
                    out[*k as usize] = out[*k as usize].add(&c.mul(v));
                }
            }
        }
        out
    }

    /// [v, b_j] for a coordinate vector against a basis element.
    fn bracket_vec_basis(&self, v: &[F], j: usize) -> Vec<F> {
        let mut out = vec![self.zero_scalar(); self.dim];
        for (m, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (k, w) in self.rows[m * self.dim + j].iter() {
                out[*k as usize] = out[*k as usize].add(&c.mul(w));
            }
        }
        out
    }

    /// ad(x) as a matrix.
    pub fn ad(&self, x: &[F]) -> Matrix<F> {
        let mut m = Matrix::zero(self.dim, self.dim, &self.zero_scalar());
        for j in 0..self.dim {
            let mut ej = vec![self.zero_scalar(); self.dim];
            ej[j] = self.one();
            let col = self.bracket(x, &ej);
            for r in 0..self.dim {
                *m.at_mut(r, j) = col[r].clone();
            }
        }
        m
    }

    pub fn check_antisymmetric(&self) -> Result<(), LieError> {
        for i in 0..self.dim {
            if !self.rows[i * self.dim + i].is_empty() {
                return Err(LieError::NotAntisymmetric(i, i));
            }
            for j in (i + 1)..self.dim {
                let a = &self.rows[i * self.dim + j];
                let b = &self.rows[j * self.dim + i];
                if a.len() != b.len() {
                    return Err(LieError::NotAntisymmetric(i, j));
                }
                for ((k1, c1), (k2, c2)) in a.iter().zip(b.iter()) {
                    if k1 != k2 || !c1.add(c2).is_zero() {
                        return Err(LieError::NotAntisymmetric(i, j));
                    }
                }
            }
        }
        Ok(())
    }

    /// Jacobi identity over all unordered basis triples; exact, zero
    /// tolerance. Reports the first violating triple with its residual.
    pub fn check_jacobi(&mut self) -> Result<(), LieError> {
        self.check_antisymmetric()?;
        let n = self.dim;
        let bad: Option<LieError> = (0..n)
            .into_par_iter()
            .find_map_any(|i| {
                for j in (i + 1)..n {
                    let bij = self.rows[i * n + j].clone();
                    let mut vij = vec![self.zero_scalar(); n];
                    for (k, c) in bij.iter() {
                        vij[*k as usize] = c.clone();
                    }
                    for k in (j + 1)..n {
                        // [[i,j],k] + [[j,k],i] + [[k,i],j]
                        let mut r = self.bracket_vec_basis(&vij, k);
                        let mut vjk = vec![self.zero_scalar(); n];
                        for (m, c) in self.rows[j * n + k].iter() {
                            vjk[*m as usize] = c.clone();
                        }
                        let t2 = self.bracket_vec_basis(&vjk, i);
                        let mut vki = vec![self.zero_scalar(); n];
                        for (m, c) in self.rows[k * n + i].iter() {
                            vki[*m as usize] = c.clone();
                        }
                        let t3 = self.bracket_vec_basis(&vki, j);
                        for t in 0..n {
                            r[t] = r[t].add(&t2[t]).add(&t3[t]);
                        }
                        if let Some(pos) = r.iter().position(|x| !x.is_zero()) {
                            return Some(LieError::Jacobi(
                                i,
                                j,
                                k,
                                pos,
                                format!("{:?}", r[pos]),
                            ));
                        }
                    }
                }
                None
            });
        match bad {
            Some(e) => Err(e),
            None => {
                self.jacobi_checked = true;
                Ok(())
            }
        }
    }

    pub fn is_lie_checked(&self) -> bool {
        self.jacobi_checked
    }

    /// f([x,y]) = [f(x), f(y)] on all basis pairs, f invertible.
    pub fn check_automorphism(&self, f: &Matrix<F>) -> Result<(), LieError> {
        if f.rows != self.dim || f.cols != self.dim {
            return Err(LieError::Singular);
        }
        if f.inverse().is_none() {
            return Err(LieError::Singular);
        }
        let n = self.dim;
        let images: Vec<Vec<F>> = (0..n).map(|i| f.col_vec(i)).collect();
        let bad = (0..n).into_par_iter().find_map_any(|i| {
            for j in (i + 1)..n {
                let mut vij = vec![self.zero_scalar(); n];
                for (m, c) in self.rows[i * n + j].iter() {
                    vij[*m as usize] = c.clone();
                }
                let lhs = f.apply(&vij);
                let rhs = self.bracket(&images[i], &images[j]);
                if lhs != rhs {
                    return Some(LieError::NotAutomorphism(i, j));
                }
            }
            None
        });
        match bad {
            Some(e) => Err(e),
            None => Ok(()),
        }
    }

    /// Leibniz rule d([x,y]) = [d x, y] + [x, d y] on all basis pairs.
    pub fn check_derivation(&self, d: &Matrix<F>) -> Result<(), LieError> {
        let n = self.dim;
        let images: Vec<Vec<F>> = (0..n).map(|i| d.col_vec(i)).collect();
        let bad = (0..n).into_par_iter().find_map_any(|i| {
            for j in (i + 1)..n {
                let mut vij = vec![self.zero_scalar(); n];
                for (m, c) in self.rows[i * n + j].iter() {
                    vij[*m as usize] = c.clone();
                }
                let lhs = d.apply(&vij);
                let mut ej = vec![self.zero_scalar(); n];
                ej[j] = self.one();
                let mut ei = vec![self.zero_scalar(); n];
                ei[i] = self.one();
                let r1 = self.bracket(&images[i], &ej);
                let r2 = self.bracket(&ei, &images[j]);
                for t in 0..n {
                    if lhs[t] != r1[t].add(&r2[t]) {
                        return Some(LieError::NotDerivation(i, j));
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

    /// Map scalars through a ring homomorphism (the modular backend).
    pub fn map_scalars<G: Field>(&self, one: G, f: &dyn Fn(&F) -> G) -> StructuredAlgebra<G> {
        let rows = self
            .rows
            .iter()
            .map(|row| row.iter().map(|(k, c)| (*k, f(c))).collect())
            .collect();
        StructuredAlgebra {
            dim: self.dim,
            labels: self.labels.clone(),
            rows,
            one,
            jacobi_checked: false,
        }
    }
}

/// Reduce an exact algebra mod p with zeta_36 -> r.
pub fn algebra_mod_p(
    a: &StructuredAlgebra<CycloScalar>,
    p: u64,
    r: u64,
) -> StructuredAlgebra<Fp> {
    a.map_scalars(Fp::new(1, p), &|c| c.modular_image(p, r).expect("prime valid for model"))
}

/// Reduce an exact matrix mod p.
pub fn matrix_mod_p(m: &Matrix<CycloScalar>, p: u64, r: u64) -> Matrix<Fp> {
    let mut out = Matrix::zero(m.rows, m.cols, &Fp::new(0, p));
    for i in 0..m.rows {
        for j in 0..m.cols {
            let v = m.at(i, j);
            if !v.is_zero() {
                *out.at_mut(i, j) = v.modular_image(p, r).expect("prime valid for matrix");
            }
        }
    }
    out
}

/// Subspace of fixed points of f.
pub fn fixed_subspace<F: Field>(f: &Matrix<F>) -> Subspace<F> {
    let one = f.at(0, 0).one_like();
    f.eigenspace(&one)
}

/// Least k <= bound with f^k = id.
pub fn order_of<F: Field>(f: &Matrix<F>, bound: usize) -> Result<usize, LieError> {
    f.pow_until_identity(bound).ok_or(LieError::OrderBound(bound))
}

/// Conjugacy class labels for order-2 and order-3 automorphisms of e6, keyed
/// by the dimension of the fixed subalgebra.
pub fn classify<F: Field>(
    alg: &StructuredAlgebra<F>,
    f: &Matrix<F>,
) -> Result<&'static str, LieError> {
    let _ = alg;
    let ord = order_of(f, 72)?;
    let fix = fixed_subspace(f).dim();
    class_for(ord, fix)
}

/// The (order, fixed dimension) -> class table, keyed by the classical
/// dimensions of the fixed subalgebra types: order 2 fixes A5+A1 (38),
/// D5+Z (46), F4 (52) or C4 (36); order 3 fixes A5+Z (36), 3A2 (24),
/// D4+2Z (30), A4+A1+Z (28) or D5+Z (46).
pub fn class_for(order: usize, fix_dim: usize) -> Result<&'static str, LieError> {
    match (order, fix_dim) {
        (2, 38) => Ok("2A"),
        (2, 46) => Ok("2B"),
        (2, 52) => Ok("2C"),
        (2, 36) => Ok("2D"),
        (3, 36) => Ok("3B"),
        (3, 24) => Ok("3C"),
        (3, 30) => Ok("3D"),
        (3, 28) => Ok("3E"),
        (3, 46) => Ok("3F"),
        _ => Err(LieError::Unclassifiable(order, fix_dim)),
    }
}

/// Textual structure-constant dump; round-trips bit-exactly.
pub fn dump(a: &StructuredAlgebra<CycloScalar>) -> String {
    let mut out = String::new();
    out.push_str(&format!("dim {}\n", a.dim));
    for (i, l) in a.labels.iter().enumerate() {
        out.push_str(&format!("label {} {}\n", i, l));
    }
    for i in 0..a.dim {
        for j in 0..a.dim {
            for (k, c) in a.rows[i * a.dim + j].iter() {
                out.push_str(&format!("{} {} {} {}\n", i, j, k, c.to_text()));
            }
        }
    }
    out
}

pub fn parse_dump(s: &str) -> Result<StructuredAlgebra<CycloScalar>, LieError> {
    let mut lines = s.lines();
    let head = lines.next().ok_or_else(|| LieError::Dump("empty".into()))?;
    let dim: usize = head
        .strip_prefix("dim ")
        .and_then(|x| x.parse().ok())
        .ok_or_else(|| LieError::Dump("missing dim header".into()))?;
    let mut labels = vec![String::new(); dim];
    let mut builder: Option<TensorBuilder<CycloScalar>> = None;
    for line in lines {
        if line.trim().is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("label ") {
            let (idx, text) = rest
                .split_once(' ')
                .ok_or_else(|| LieError::Dump(format!("bad label line `{line}`")))?;
            let i: usize =
                idx.parse().map_err(|_| LieError::Dump(format!("bad label index `{idx}`")))?;
            labels[i] = text.to_string();
            continue;
        }
        let b = builder.get_or_insert_with(|| {
            TensorBuilder::new(dim, labels.clone(), CycloScalar::one())
        });
        let mut it = line.splitn(4, ' ');
        let i: usize = it
            .next()
            .and_then(|x| x.parse().ok())
            .ok_or_else(|| LieError::Dump(format!("bad line `{line}`")))?;
        let j: usize = it
            .next()
            .and_then(|x| x.parse().ok())
            .ok_or_else(|| LieError::Dump(format!("bad line `{line}`")))?;
        let k: usize = it
            .next()
            .and_then(|x| x.parse().ok())
            .ok_or_else(|| LieError::Dump(format!("bad line `{line}`")))?;
        let c = CycloScalar::from_text(
            it.next().ok_or_else(|| LieError::Dump(format!("bad line `{line}`")))?,
        )
        .map_err(|e| LieError::Dump(e.to_string()))?;
        // only record the (i<j) orientation; builder mirrors it
        if i < j {
            b.add(i, j, k, c);
        }
    }
    let b = builder
        .unwrap_or_else(|| TensorBuilder::new(dim, labels.clone(), CycloScalar::one()));
    Ok(b.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    type C = CycloScalar;

    /// sl2: [h,e] = 2e, [h,f] = -2f, [e,f] = h, basis order (e, f, h).
    fn sl2() -> StructuredAlgebra<C> {
        let mut b = TensorBuilder::new(
            3,
            vec!["e".into(), "f".into(), "h".into()],
            C::one(),
        );
        b.add(2, 0, 0, C::from_int(2));
        b.add(2, 1, 1, C::from_int(-2));
        b.add(0, 1, 2, C::one());
        b.finish()
    }

    #[test]
    fn sl2_is_lie() {
        let mut a = sl2();
        a.check_jacobi().unwrap();
        // [x,x] = 0 by antisymmetry of the tensor
        let x = vec![C::from_int(3), C::from_int(-1), C::from_int(7)];
        assert!(a.bracket(&x, &x).iter().all(|c| c.is_zero()));
        // ad(x) is a derivation
        assert!(a.check_derivation(&a.ad(&x)).is_ok());
    }

    #[test]
    fn broken_tensor_detected() {
        let mut b = TensorBuilder::new(
            3,
            vec!["e".into(), "f".into(), "h".into()],
            C::one(),
        );
        b.add(2, 0, 0, C::from_int(2));
        b.add(2, 1, 1, C::from_int(-2));
        b.add(0, 1, 2, C::one());
        b.add(0, 1, 0, C::one()); // perturbation
        let mut a = b.finish();
        match a.check_jacobi() {
            Err(LieError::Jacobi(..)) => {}
            other => panic!("expected jacobi witness, got {:?}", other.err()),
        }
    }

    #[test]
    fn automorphism_and_order() {
        let a = sl2();
        let id = Matrix::identity(3, &C::one());
        a.check_automorphism(&id).unwrap();
        // diag torus of sl2: e -> t^2 e, f -> t^-2 f, h -> h with t = zeta_36
        let t = C::root_of_unity(1);
        let mut m = Matrix::zero(3, 3, &C::zero());
        *m.at_mut(0, 0) = t.mul(&t);
        *m.at_mut(1, 1) = t.mul(&t).inv().unwrap();
        *m.at_mut(2, 2) = C::one();
        a.check_automorphism(&m).unwrap();
        assert_eq!(order_of(&m, 72).unwrap(), 18);
        assert_eq!(fixed_subspace(&m).dim(), 1);
        // a random non-automorphism is rejected
        let mut bad = Matrix::identity(3, &C::one());
        *bad.at_mut(0, 1) = C::one();
        assert!(a.check_automorphism(&bad).is_err());
    }

    #[test]
    fn classify_table() {
        assert_eq!(class_for(2, 52).unwrap(), "2C");
        assert_eq!(class_for(3, 30).unwrap(), "3D");
        assert!(matches!(class_for(2, 37), Err(LieError::Unclassifiable(2, 37))));
        assert!(matches!(class_for(5, 10), Err(LieError::Unclassifiable(5, 10))));
    }

    #[test]
    fn dump_round_trip() {
        let a = sl2();
        let text = dump(&a);
        let back = parse_dump(&text).unwrap();
        assert_eq!(dump(&back), text);
        assert_eq!(back.dim, 3);
        assert_eq!(back.labels, a.labels);
    }

    #[test]
    fn modular_reduction_keeps_jacobi() {
        let a = sl2();
        let r = crate::cyclotomic::find_order36_root(37).unwrap();
        let mut am = algebra_mod_p(&a, 37, r);
        am.check_jacobi().unwrap();
    }
}

//! Exact arithmetic in Q(zeta_36), the field generated by a primitive 36th
//! root of unity, together with a modular image backend for fast pre-checks.
//!
//! Elements are residues in Q[z]/(Phi_36) with Phi_36(z) = z^12 - z^6 + 1,
//! stored as integer coefficient vectors over a common positive denominator,
//! always fully reduced. All certification arithmetic happens here; there is
//! no floating point anywhere.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::str::FromStr;

/// Degree of the cyclotomic extension: Phi_36 has degree 12.
pub const DEGREE: usize = 12;

/// Conductor of the field. Every root of unity used by the constructions
/// (i, omega, zeta_12, xi_9) is a power of zeta_36.
pub const CONDUCTOR: u64 = 36;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ArithError {
    #[error("division by zero in Q(zeta_36)")]
    DivisionByZero,
    #[error("denominator not invertible mod {0}; choose a different prime")]
    BadPrime(u64),
    #[error("{0} is not 1 mod 36")]
    PrimeNotSplit(u64),
    #[error("parse error on `{0}`")]
    Parse(String),
}

/// An element of Q(zeta_36) in canonical reduced form.
///
/// `num` holds the 12 integer coefficients of the residue, `den` is a
/// positive common denominator with gcd(content(num), den) = 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycloScalar {
    num: [BigInt; 12],
    den: BigInt,
}

fn zero_coeffs() -> [BigInt; 12] {
    Default::default()
}

impl CycloScalar {
    pub fn zero() -> Self {
        CycloScalar { num: zero_coeffs(), den: BigInt::one() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        let mut num = zero_coeffs();
        num[0] = BigInt::from(n);
        CycloScalar { num, den: BigInt::one() }
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        let mut num = zero_coeffs();
        num[0] = BigInt::from(n);
        let mut s = CycloScalar { num, den: BigInt::from(d) };
        s.normalize();
        s
    }

    /// zeta_36^k in canonical form; the exponent is taken mod 36.
    pub fn root_of_unity(k: i64) -> Self {
        let k = k.rem_euclid(36) as usize;
        // Build z^k as a degree-<36 monomial and reduce by z^12 = z^6 - 1.
        let mut c = vec![BigInt::zero(); 36];
        c[k] = BigInt::one();
        reduce_mod_phi(&mut c);
        let mut num = zero_coeffs();
        for (i, v) in c.into_iter().take(DEGREE).enumerate() {
            num[i] = v;
        }
        CycloScalar { num, den: BigInt::one() }
    }

    /// i = zeta^9, a primitive fourth root of unity.
    pub fn i() -> Self {
        Self::root_of_unity(9)
    }

    /// omega = zeta^12, a primitive cube root of unity.
    pub fn omega() -> Self {
        Self::root_of_unity(12)
    }

    /// zeta_12 = zeta^3.
    pub fn zeta12() -> Self {
        Self::root_of_unity(3)
    }

    /// xi = zeta^4, a primitive ninth root of unity.
    pub fn xi9() -> Self {
        Self::root_of_unity(4)
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one()
            && self.num[0].is_one()
            && self.num[1..].iter().all(|c| c.is_zero())
    }

    /// True when the element lies in Q.
    pub fn is_rational(&self) -> bool {
        self.num[1..].iter().all(|c| c.is_zero())
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -self.den.clone();
            for c in self.num.iter_mut() {
                *c = -c.clone();
            }
        }
        let mut g = self.den.clone();
        for c in self.num.iter() {
            if !c.is_zero() {
                g = g.gcd(c);
            }
            if g.is_one() {
                return;
            }
        }
        if self.is_zero() {
            self.den = BigInt::one();
            return;
        }
        if !g.is_one() {
            self.den = &self.den / &g;
            for c in self.num.iter_mut() {
                *c = &*c / &g;
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let mut num = zero_coeffs();
        if self.den == o.den {
            for i in 0..DEGREE {
                num[i] = &self.num[i] + &o.num[i];
            }
            let mut s = CycloScalar { num, den: self.den.clone() };
            s.normalize();
            return s;
        }
        for i in 0..DEGREE {
            num[i] = &self.num[i] * &o.den + &o.num[i] * &self.den;
        }
        let mut s = CycloScalar { num, den: &self.den * &o.den };
        s.normalize();
        s
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        let mut num = zero_coeffs();
        for i in 0..DEGREE {
            num[i] = -self.num[i].clone();
        }
        CycloScalar { num, den: self.den.clone() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if self.is_one() {
            return o.clone();
        }
        if o.is_one() {
            return self.clone();
        }
        let mut conv = vec![BigInt::zero(); 2 * DEGREE - 1];
        for i in 0..DEGREE {
            if self.num[i].is_zero() {
                continue;
            }
            for j in 0..DEGREE {
                if o.num[j].is_zero() {
                    continue;
                }
                conv[i + j] += &self.num[i] * &o.num[j];
            }
        }
        reduce_mod_phi(&mut conv);
        let mut num = zero_coeffs();
        for (i, v) in conv.into_iter().take(DEGREE).enumerate() {
            num[i] = v;
        }
        let mut s = CycloScalar { num, den: &self.den * &o.den };
        s.normalize();
        s
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.mul(&Self::from_int(k))
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in Q[z]
    /// against Phi_36.
    pub fn inv(&self) -> Result<Self, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        // Work with rational-coefficient polynomials (num vec, den).
        let phi = {
            let mut c = vec![BigInt::zero(); 13];
            c[0] = BigInt::one();
            c[6] = -BigInt::one();
            c[12] = BigInt::one();
            QPoly { c, den: BigInt::one() }
        };
        let a = QPoly { c: self.num.to_vec(), den: self.den.clone() };
        // Invariant: r0 = s0*a mod phi, r1 = s1*a mod phi (phi-multiples dropped).
        let mut r0 = phi;
        let mut r1 = a.trimmed();
        let mut s0 = QPoly::zero();
        let mut s1 = QPoly::one();
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = s0.sub(&q.mul(&s1));
            r0 = r1;
            s0 = s1;
            r1 = r;
            s1 = s;
        }
        // r0 is a nonzero constant gcd.
        debug_assert!(r0.degree() == Some(0));
        let c0 = r0.constant();
        let scale = QPoly { c: vec![c0.1], den: c0.0 }; // 1/constant
        let inv = s0.mul(&scale);
        let mut num = zero_coeffs();
        for (i, v) in inv.c.into_iter().enumerate() {
            assert!(i < DEGREE, "inverse not reduced");
            num[i] = v;
        }
        let mut s = CycloScalar { num, den: inv.den };
        s.normalize();
        debug_assert!(s.mul(self).is_one());
        Ok(s)
    }

    pub fn div(&self, o: &Self) -> Result<Self, ArithError> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Ring homomorphism to Z/p substituting zeta_36 -> r.
    ///
    /// `r` must have multiplicative order exactly 36 mod p (so p = 1 mod 36);
    /// fails if the denominator vanishes mod p.
    pub fn modular_image(&self, p: u64, r: u64) -> Result<Fp, ArithError> {
        let den = bigint_mod(&self.den, p);
        if den == 0 {
            return Err(ArithError::BadPrime(p));
        }
        let mut acc = 0u64;
        let mut rk = 1u64;
        for c in self.num.iter() {
            let cm = bigint_mod(c, p);
            acc = (acc + mulmod(cm, rk, p)) % p;
            rk = mulmod(rk, r, p);
        }
        let deninv = powmod(den, p - 2, p);
        Ok(Fp::new(mulmod(acc, deninv, p), p))
    }

    /// If the element is a root of unity zeta_36^k, return k.
    pub fn as_root_exponent(&self) -> Option<i64> {
        for k in 0..36 {
            if *self == Self::root_of_unity(k) {
                return Some(k);
            }
        }
        None
    }

    /// Textual form: polynomial in z with rational coefficients.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        let mut first = true;
        for k in 0..DEGREE {
            if self.num[k].is_zero() {
                continue;
            }
            let c = &self.num[k];
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    out.push('-');
                }
                first = false;
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            if self.den.is_one() {
                out.push_str(&format!("{}*z^{}", mag, k));
            } else {
                out.push_str(&format!("{}/{}*z^{}", mag, self.den, k));
            }
        }
        out
    }

    /// Parse the `to_text` format; round-trips exactly.
    pub fn from_text(s: &str) -> Result<Self, ArithError> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::zero());
        }
        let err = || ArithError::Parse(s.to_string());
        let mut acc = Self::zero();
        // Terms are separated by " + " or " - "; a leading '-' binds to the
        // first term. Exponents are never negative so this is unambiguous.
        let (mut sign, body) = match s.strip_prefix('-') {
            Some(rest) => (-1i64, rest.trim_start()),
            None => (1i64, s),
        };
        let mut terms: Vec<(i64, String)> = Vec::new();
        let mut rest = body;
        loop {
            let plus = rest.find(" + ");
            let minus = rest.find(" - ");
            match (plus, minus) {
                (None, None) => {
                    terms.push((sign, rest.trim().to_string()));
                    break;
                }
                (Some(i), None) => {
                    terms.push((sign, rest[..i].trim().to_string()));
                    sign = 1;
                    rest = &rest[i + 3..];
                }
                (None, Some(j)) => {
                    terms.push((sign, rest[..j].trim().to_string()));
                    sign = -1;
                    rest = &rest[j + 3..];
                }
                (Some(i), Some(j)) if i < j => {
                    terms.push((sign, rest[..i].trim().to_string()));
                    sign = 1;
                    rest = &rest[i + 3..];
                }
                (Some(_), Some(j)) => {
                    terms.push((sign, rest[..j].trim().to_string()));
                    sign = -1;
                    rest = &rest[j + 3..];
                }
            }
        }
        for (sg, t) in terms {
            if t.is_empty() {
                return Err(err());
            }
            let (coef, exp) = match t.split_once("*z^") {
                Some((c, e)) => (c.to_string(), e.parse::<usize>().map_err(|_| err())?),
                None => match t.strip_prefix("z^") {
                    Some(e) => ("1".to_string(), e.parse::<usize>().map_err(|_| err())?),
                    None => (t.clone(), 0),
                },
            };
            if exp >= DEGREE {
                return Err(err());
            }
            let (n, d) = match coef.split_once('/') {
                Some((n, d)) => (
                    BigInt::from_str(n.trim()).map_err(|_| err())?,
                    BigInt::from_str(d.trim()).map_err(|_| err())?,
                ),
                None => (BigInt::from_str(coef.trim()).map_err(|_| err())?, BigInt::one()),
            };
            let mut num = zero_coeffs();
            num[exp] = if sg < 0 { -n } else { n };
            let mut term = CycloScalar { num, den: d };
            term.normalize();
            acc = acc.add(&term);
        }
        Ok(acc)
    }
}

impl fmt::Debug for CycloScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

/// Reduce a coefficient vector in place by z^12 = z^6 - 1.
fn reduce_mod_phi(c: &mut Vec<BigInt>) {
    for k in (DEGREE..c.len()).rev() {
        if c[k].is_zero() {
            continue;
        }
        let v = std::mem::replace(&mut c[k], BigInt::zero());
        c[k - 6] += &v;
        c[k - 12] -= &v;
    }
    c.truncate(DEGREE);
}

/// Rational-coefficient polynomial used only inside `inv`.
#[derive(Clone)]
struct QPoly {
    c: Vec<BigInt>,
    den: BigInt,
}

impl QPoly {
    fn zero() -> Self {
        QPoly { c: vec![], den: BigInt::one() }
    }
    fn one() -> Self {
        QPoly { c: vec![BigInt::one()], den: BigInt::one() }
    }
    fn trimmed(mut self) -> Self {
        while self.c.last().map(|x| x.is_zero()).unwrap_or(false) {
            self.c.pop();
        }
        self
    }
    fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }
    fn degree(&self) -> Option<usize> {
        self.c.iter().rposition(|x| !x.is_zero())
    }
    fn constant(&self) -> (BigInt, BigInt) {
        (self.c[0].clone(), self.den.clone())
    }
    fn sub(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let mut c = vec![BigInt::zero(); n];
        for i in 0..n {
            let a = self.c.get(i).cloned().unwrap_or_default() * &o.den;
            let b = o.c.get(i).cloned().unwrap_or_default() * &self.den;
            c[i] = a - b;
        }
        QPoly { c, den: &self.den * &o.den }.reduced()
    }
    fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut c = vec![BigInt::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if !b.is_zero() {
                    c[i + j] += a * b;
                }
            }
        }
        QPoly { c, den: &self.den * &o.den }.reduced()
    }
    fn reduced(mut self) -> Self {
        let mut g = self.den.clone();
        for x in self.c.iter() {
            if !x.is_zero() {
                g = g.gcd(x);
            }
        }
        if !g.is_zero() && !g.is_one() {
            self.den = &self.den / &g;
            for x in self.c.iter_mut() {
                *x = &*x / &g;
            }
        }
        if self.den.is_negative() {
            self.den = -self.den;
            for x in self.c.iter_mut() {
                *x = -x.clone();
            }
        }
        self.trimmed()
    }
    /// Polynomial division with remainder.
    fn div_rem(&self, o: &Self) -> (Self, Self) {
        let dn = o.degree().expect("division by zero polynomial");
        let mut rem = self.clone();
        let mut quot = QPoly::zero();
        while let Some(dr) = rem.degree() {
            if dr < dn {
                break;
            }
            // leading coefficient of rem / leading of o
            let lead = QPoly {
                c: {
                    let mut v = vec![BigInt::zero(); dr - dn + 1];
                    v[dr - dn] = rem.c[dr].clone() * &o.den;
                    v
                },
                den: rem.den.clone() * &o.c[dn],
            }
            .reduced();
            quot = quot.sub(&lead.mul(&QPoly {
                c: vec![-BigInt::one()],
                den: BigInt::one(),
            }));
            rem = rem.sub(&lead.mul(o));
        }
        (quot, rem)
    }
}

fn bigint_mod(x: &BigInt, p: u64) -> u64 {
    let m = x.mod_floor(&BigInt::from(p));
    let (_, digits) = m.to_u64_digits();
    *digits.first().unwrap_or(&0)
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    acc
}

/// Element of the prime field Z/p used by the modular fast-check backend.
/// The prime travels with the value; mixing primes is a bug and panics.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    pub v: u64,
    pub p: u64,
}

impl Fp {
    pub fn new(v: u64, p: u64) -> Self {
        Fp { v: v % p, p }
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}#{}", self.v, self.p)
    }
}

/// r^k mod p with negative exponents folded through r^36 = 1.
pub fn fp_root_power(r: u64, k: i64, p: u64) -> u64 {
    powmod(r, k.rem_euclid(36) as u64, p)
}

/// Find an element of order exactly 36 mod p (requires p = 1 mod 36).
pub fn find_order36_root(p: u64) -> Result<u64, ArithError> {
    if (p - 1) % 36 != 0 {
        return Err(ArithError::PrimeNotSplit(p));
    }
    let e = (p - 1) / 36;
    for a in 2..p {
        let r = powmod(a, e, p);
        // order of r divides 36; check it is exactly 36
        if powmod(r, 18, p) != 1 && powmod(r, 12, p) != 1 {
            return Ok(r);
        }
    }
    Err(ArithError::PrimeNotSplit(p))
}

/// The abstract scalar interface shared by the exact field and the modular
/// backend. Elements carry enough context to mint 0 and 1 of their own field.
pub trait Field: Clone + PartialEq + Eq + std::fmt::Debug + Send + Sync + std::hash::Hash {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn from_int_like(&self, n: i64) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn invert(&self) -> Option<Self>;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
}

impl Field for CycloScalar {
    fn zero_like(&self) -> Self {
        CycloScalar::zero()
    }
    fn one_like(&self) -> Self {
        CycloScalar::one()
    }
    fn from_int_like(&self, n: i64) -> Self {
        CycloScalar::from_int(n)
    }
    fn add(&self, o: &Self) -> Self {
        CycloScalar::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        CycloScalar::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        CycloScalar::mul(self, o)
    }
    fn neg(&self) -> Self {
        CycloScalar::neg(self)
    }
    fn invert(&self) -> Option<Self> {
        CycloScalar::inv(self).ok()
    }
    fn is_zero(&self) -> bool {
        CycloScalar::is_zero(self)
    }
    fn is_one(&self) -> bool {
        CycloScalar::is_one(self)
    }
}

impl Field for Fp {
    fn zero_like(&self) -> Self {
        Fp::new(0, self.p)
    }
    fn one_like(&self) -> Self {
        Fp::new(1, self.p)
    }
    fn from_int_like(&self, n: i64) -> Self {
        Fp::new(n.rem_euclid(self.p as i64) as u64, self.p)
    }
    fn add(&self, o: &Self) -> Self {
        assert_eq!(self.p, o.p);
        Fp::new(self.v + o.v, self.p)
    }
    fn sub(&self, o: &Self) -> Self {
        assert_eq!(self.p, o.p);
        Fp::new(self.v + self.p - o.v, self.p)
    }
    fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.p, o.p);
        Fp::new(mulmod(self.v, o.v, self.p), self.p)
    }
    fn neg(&self) -> Self {
        Fp::new(self.p - self.v % self.p, self.p)
    }
    fn invert(&self) -> Option<Self> {
        if self.v % self.p == 0 {
            None
        } else {
            Some(Fp::new(powmod(self.v, self.p - 2, self.p), self.p))
        }
    }
    fn is_zero(&self) -> bool {
        self.v % self.p == 0
    }
    fn is_one(&self) -> bool {
        self.v % self.p == 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(k: i64) -> CycloScalar {
        CycloScalar::root_of_unity(k)
    }

    #[test]
    fn root_orders() {
        assert!(z(1).pow(36).is_one());
        assert!(!z(1).pow(18).is_one());
        assert!(z(9).pow(4).is_one());
        // i^2 = -1
        assert_eq!(z(9).mul(&z(9)), CycloScalar::from_int(-1));
        // omega has order 3, xi has order 9 but not 3
        assert!(z(12).pow(3).is_one());
        assert!(z(4).pow(9).is_one());
        assert!(!z(4).pow(3).is_one());
        assert!(z(0).is_one());
    }

    #[test]
    fn omega_sum_vanishes() {
        let w = CycloScalar::omega();
        let s = CycloScalar::one().add(&w).add(&w.mul(&w));
        assert!(s.is_zero());
    }

    #[test]
    fn inversion_is_two_sided() {
        let a = z(5).add(&CycloScalar::from_ratio(3, 7)).sub(&z(11));
        let inv = a.inv().unwrap();
        assert!(a.mul(&inv).is_one());
        assert!(inv.mul(&a).is_one());
        assert_eq!(CycloScalar::zero().inv(), Err(ArithError::DivisionByZero));
    }

    #[test]
    fn field_axioms_randomized() {
        // deterministic LCG over small elements
        let mut state = 12345u64;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            state
        };
        let rand_elt = |next: &mut dyn FnMut() -> u64| {
            let mut acc = CycloScalar::zero();
            for _ in 0..3 {
                let k = (next() % 36) as i64;
                let n = (next() % 7) as i64 - 3;
                let d = (next() % 4) as i64 + 1;
                acc = acc.add(&z(k).mul(&CycloScalar::from_ratio(n, d)));
            }
            acc
        };
        for _ in 0..1000 {
            let a = rand_elt(&mut next);
            let b = rand_elt(&mut next);
            let c = rand_elt(&mut next);
            assert_eq!(a.mul(&b), b.mul(&a));
            assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            if !a.is_zero() {
                assert!(a.mul(&a.inv().unwrap()).is_one());
            }
        }
    }

    #[test]
    fn modular_homomorphism() {
        for p in [37u64, 73, 109] {
            let r = find_order36_root(p).unwrap();
            assert_eq!(powmod(r, 36, p), 1);
            assert_eq!(CycloScalar::one().modular_image(p, r).unwrap().v, 1);
            assert_eq!(z(1).modular_image(p, r).unwrap().v, r);
            let mut state = 777u64;
            let mut next = || {
                state = state.wrapping_mul(2862933555777941757).wrapping_add(3037000493);
                state
            };
            for _ in 0..200 {
                let a = z((next() % 36) as i64).add(&CycloScalar::from_ratio(
                    (next() % 11) as i64 - 5,
                    (next() % 5) as i64 + 1,
                ));
                let b = z((next() % 36) as i64).sub(&CycloScalar::from_ratio(
                    (next() % 9) as i64 - 4,
                    (next() % 6) as i64 + 1,
                ));
                let lhs = a.mul(&b).modular_image(p, r).unwrap();
                let rhs = a.modular_image(p, r).unwrap().mul(&b.modular_image(p, r).unwrap());
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn text_round_trip() {
        let samples = [
            CycloScalar::zero(),
            CycloScalar::from_ratio(1, 2).mul(&z(3)).sub(&CycloScalar::from_int(2)),
            z(35).add(&CycloScalar::from_ratio(-7, 3)),
            CycloScalar::from_int(-1),
        ];
        for s in samples.iter() {
            let t = s.to_text();
            let back = CycloScalar::from_text(&t).unwrap();
            assert_eq!(&back, s, "round trip failed on {}", t);
        }
        // the documented example form parses
        let e = CycloScalar::from_text("1/2*z^3 - 2*z^0").unwrap();
        assert_eq!(e, CycloScalar::from_ratio(1, 2).mul(&z(3)).sub(&CycloScalar::from_int(2)));
    }
}

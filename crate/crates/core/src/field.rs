//! Field contexts for exact linear algebra: the rationals and small finite
//! fields `GF(p^r)` with table-based arithmetic.

use crate::error::{CoreError, Result};
use crate::exact::numtheory::is_prime_u64;
use crate::exact::scalar::{rat, Rat};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

/// A field given as a context object; elements are plain data.
pub trait Field: Clone + std::fmt::Debug {
    type Elem: Clone + PartialEq + Eq + std::hash::Hash + std::fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// `None` exactly for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn from_i64(&self, n: i64) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    /// Field cardinality, when finite.
    fn size(&self) -> Option<u64> {
        None
    }

    /// All elements, when finite; deterministic order.
    fn elements(&self) -> Option<Vec<Self::Elem>> {
        None
    }
}

#[derive(Clone, Debug, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = Rat;

    fn zero(&self) -> Rat {
        Rat::zero()
    }
    fn one(&self) -> Rat {
        Rat::one()
    }
    fn is_zero(&self, a: &Rat) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Rat, b: &Rat) -> Rat {
        a + b
    }
    fn neg(&self, a: &Rat) -> Rat {
        -a
    }
    fn mul(&self, a: &Rat, b: &Rat) -> Rat {
        a * b
    }
    fn inv(&self, a: &Rat) -> Option<Rat> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn from_i64(&self, n: i64) -> Rat {
        rat(n)
    }
}

/// `GF(p^r)` with full add/mul/inv tables. Elements are indices `0..q`
/// encoding polynomials over `F_p` in base `p` (constant digit first).
#[derive(Clone)]
pub struct Gf {
    p: u64,
    r: u32,
    q: u64,
    modulus: Vec<u64>,
    add_t: Vec<u16>,
    mul_t: Vec<u16>,
    inv_t: Vec<u16>,
}

impl std::fmt::Debug for Gf {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Gf(q={}, p={}, r={})", self.q, self.p, self.r)
    }
}

const MAX_GF_SIZE: u64 = 256;

impl Gf {
    /// Builds `GF(p^r)`. When `modulus` is `None` and `r > 1`, the
    /// lexicographically first monic irreducible of degree `r` is used.
    /// A supplied modulus lists coefficients constant-first and must be
    /// monic irreducible of degree `r`.
    pub fn new(p: u64, r: u32, modulus: Option<Vec<u64>>) -> Result<Gf> {
        if !is_prime_u64(p) {
            return Err(CoreError::BadInput(format!("{} is not prime", p)));
        }
        if r == 0 {
            return Err(CoreError::BadInput("field degree must be positive".into()));
        }
        let q = p.checked_pow(r).filter(|&q| q <= MAX_GF_SIZE).ok_or_else(|| {
            CoreError::ResourceLimit {
                what: "finite field size",
                detail: format!("p^r exceeds {}", MAX_GF_SIZE),
            }
        })?;
        let modulus = match modulus {
            Some(m) => {
                if m.len() != r as usize + 1
                    || m[r as usize] != 1
                    || m.iter().any(|&c| c >= p)
                    || (r > 1 && !poly_irreducible(&m, p))
                {
                    return Err(CoreError::BadInput(
                        "modulus is not a monic irreducible of the right degree".into(),
                    ));
                }
                m
            }
            None => default_modulus(p, r)?,
        };
        let mut gf = Gf {
            p,
            r,
            q,
            modulus,
            add_t: Vec::new(),
            mul_t: Vec::new(),
            inv_t: Vec::new(),
        };
        gf.build_tables();
        Ok(gf)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn element(&self, index: u64) -> u16 {
        assert!(index < self.q);
        index as u16
    }

    /// A generator of the multiplicative group.
    pub fn primitive_element(&self) -> u16 {
        'cand: for c in 1..self.q {
            let mut x = c as u16;
            for ord in 1..self.q {
                if x == 1 {
                    if ord == self.q - 1 {
                        return c as u16;
                    }
                    continue 'cand;
                }
                x = self.mul(&x, &(c as u16));
            }
        }
        unreachable!("multiplicative group of a finite field is cyclic")
    }

    fn encode(&self, digits: &[u64]) -> u16 {
        let mut v = 0u64;
        for &d in digits.iter().rev() {
            v = v * self.p + d;
        }
        v as u16
    }

    fn decode(&self, e: u16) -> Vec<u64> {
        let mut v = e as u64;
        let mut digits = vec![0u64; self.r as usize];
        for d in digits.iter_mut() {
            *d = v % self.p;
            v /= self.p;
        }
        digits
    }

    fn build_tables(&mut self) {
        let q = self.q as usize;
        self.add_t = vec![0; q * q];
        self.mul_t = vec![0; q * q];
        self.inv_t = vec![0; q];
        for a in 0..q {
            let da = self.decode(a as u16);
            for b in 0..q {
                let db = self.decode(b as u16);
                let sum: Vec<u64> = da
                    .iter()
                    .zip(db.iter())
                    .map(|(x, y)| (x + y) % self.p)
                    .collect();
                self.add_t[a * q + b] = self.encode(&sum);
                let prod = poly_mulmod(&da, &db, &self.modulus, self.p);
                self.mul_t[a * q + b] = self.encode(&prod);
            }
        }
        for a in 1..q {
            for b in 1..q {
                if self.mul_t[a * q + b] == 1 {
                    self.inv_t[a] = b as u16;
                    break;
                }
            }
            assert_ne!(self.inv_t[a], 0, "modulus is not irreducible");
        }
    }
}

impl Field for Gf {
    type Elem = u16;

    fn zero(&self) -> u16 {
        0
    }
    fn one(&self) -> u16 {
        1
    }
    fn is_zero(&self, a: &u16) -> bool {
        *a == 0
    }
    fn add(&self, a: &u16, b: &u16) -> u16 {
        self.add_t[*a as usize * self.q as usize + *b as usize]
    }
    fn neg(&self, a: &u16) -> u16 {
        let digits = self.decode(*a);
        let neg: Vec<u64> = digits.iter().map(|&d| (self.p - d) % self.p).collect();
        self.encode(&neg)
    }
    fn mul(&self, a: &u16, b: &u16) -> u16 {
        self.mul_t[*a as usize * self.q as usize + *b as usize]
    }
    fn inv(&self, a: &u16) -> Option<u16> {
        if *a == 0 {
            None
        } else {
            Some(self.inv_t[*a as usize])
        }
    }
    fn from_i64(&self, n: i64) -> u16 {
        let m = n.rem_euclid(self.p as i64) as u64;
        m as u16
    }
    fn size(&self) -> Option<u64> {
        Some(self.q)
    }
    fn elements(&self) -> Option<Vec<u16>> {
        Some((0..self.q as u16).collect())
    }
}

/// Serializable description of a coefficient field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FieldSpec {
    Rationals,
    Finite {
        p: u64,
        r: u32,
        /// Constant-first monic modulus; `None` selects the default.
        modulus: Option<Vec<u64>>,
    },
}

impl FieldSpec {
    pub fn finite(p: u64, r: u32) -> Self {
        FieldSpec::Finite { p, r, modulus: None }
    }

    pub fn build_finite(&self) -> Result<Gf> {
        match self {
            FieldSpec::Rationals => Err(CoreError::BadInput(
                "expected a finite field, not the rationals".into(),
            )),
            FieldSpec::Finite { p, r, modulus } => Gf::new(*p, *r, modulus.clone()),
        }
    }

    /// Parses `"Q"` or `"F<q>"` with `q` a prime power.
    pub fn parse(s: &str) -> Result<FieldSpec> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") {
            return Ok(FieldSpec::Rationals);
        }
        let body = s
            .strip_prefix('F')
            .or_else(|| s.strip_prefix('f'))
            .ok_or_else(|| CoreError::BadInput(format!("bad field spec `{}`", s)))?;
        let q: u64 = body
            .parse()
            .map_err(|_| CoreError::BadInput(format!("bad field spec `{}`", s)))?;
        let (p, r) = prime_power_split(q)
            .ok_or_else(|| CoreError::BadInput(format!("{} is not a prime power", q)))?;
        Ok(FieldSpec::Finite { p, r, modulus: None })
    }
}

pub fn prime_power_split(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2u64;
    while p * p <= q {
        if q % p == 0 {
            let mut m = q;
            let mut r = 0u32;
            while m % p == 0 {
                m /= p;
                r += 1;
            }
            return if m == 1 { Some((p, r)) } else { None };
        }
        p += 1;
    }
    Some((q, 1))
}

fn default_modulus(p: u64, r: u32) -> Result<Vec<u64>> {
    if r == 1 {
        // Reduction modulo x never fires for constant operands.
        return Ok(vec![0, 1]);
    }
    let count = p.pow(r);
    for lower in 0..count {
        let mut m = vec![0u64; r as usize + 1];
        let mut v = lower;
        for c in m.iter_mut().take(r as usize) {
            *c = v % p;
            v /= p;
        }
        m[r as usize] = 1;
        if poly_irreducible(&m, p) {
            return Ok(m);
        }
    }
    Err(CoreError::Inconsistent(format!(
        "no irreducible of degree {} over F_{}",
        r, p
    )))
}

fn poly_degree(a: &[u64]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

fn poly_mulmod(a: &[u64], b: &[u64], modulus: &[u64], p: u64) -> Vec<u64> {
    let r = modulus.len() - 1;
    let mut prod = vec![0u64; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    // reduce modulo the monic modulus
    for i in (r..prod.len()).rev() {
        let c = prod[i];
        if c == 0 {
            continue;
        }
        prod[i] = 0;
        for (j, &m) in modulus.iter().enumerate().take(r) {
            let idx = i - r + j;
            prod[idx] = (prod[idx] + c * (p - m) % p) % p;
        }
    }
    prod.truncate(r.max(1));
    prod.resize(r.max(1), 0);
    prod
}

fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let db = poly_degree(b).expect("division by zero poly");
    let lead_inv = mod_inv(b[db], p);
    let mut rem = a.to_vec();
    loop {
        let da = match poly_degree(&rem) {
            Some(d) if d >= db => d,
            _ => break,
        };
        let factor = rem[da] * lead_inv % p;
        for j in 0..=db {
            let idx = da - db + j;
            rem[idx] = (rem[idx] + factor * (p - b[j]) % p) % p;
        }
    }
    rem
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // Fermat; p is prime and small enough that u64 products cannot overflow.
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

fn poly_irreducible(m: &[u64], p: u64) -> bool {
    let r = match poly_degree(m) {
        Some(d) if d >= 1 => d,
        _ => return false,
    };
    if r == 1 {
        return true;
    }
    // trial division by all monic polynomials of degree 1 ..= r/2
    for d in 1..=r / 2 {
        let count = p.pow(d as u32);
        for lower in 0..count {
            let mut div = vec![0u64; d + 1];
            let mut v = lower;
            for c in div.iter_mut().take(d) {
                *c = v % p;
                v /= p;
            }
            div[d] = 1;
            let rem = poly_rem(m, &div, p);
            if poly_degree(&rem).is_none() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf4_structure() {
        let f4 = Gf::new(2, 2, None).unwrap();
        assert_eq!(f4.q(), 4);
        // default modulus is x^2 + x + 1
        assert_eq!(f4.modulus(), &[1, 1, 1]);
        // x * x = x + 1 under x^2 = x + 1; x encodes as 2, x+1 as 3
        assert_eq!(f4.mul(&2, &2), 3);
        assert_eq!(f4.mul(&2, &3), 1);
        for a in 1..4u16 {
            let inv = f4.inv(&a).unwrap();
            assert_eq!(f4.mul(&a, &inv), 1);
        }
        // characteristic 2: a + a = 0
        for a in 0..4u16 {
            assert_eq!(f4.add(&a, &a), 0);
        }
    }

    #[test]
    fn gf_prime_fields() {
        let f5 = Gf::new(5, 1, None).unwrap();
        assert_eq!(f5.add(&3, &4), 2);
        assert_eq!(f5.mul(&3, &4), 2);
        assert_eq!(f5.inv(&2), Some(3));
        assert_eq!(f5.neg(&2), 3);
        assert_eq!(f5.from_i64(-1), 4);
    }

    #[test]
    fn gf8_and_gf9() {
        let f8 = Gf::new(2, 3, None).unwrap();
        let f9 = Gf::new(3, 2, None).unwrap();
        for f in [&f8, &f9] {
            let q = f.q();
            let prim = f.primitive_element();
            let mut seen = std::collections::HashSet::new();
            let mut x = 1u16;
            for _ in 0..q - 1 {
                x = f.mul(&x, &prim);
                seen.insert(x);
            }
            assert_eq!(seen.len() as u64, q - 1);
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(Gf::new(4, 1, None).is_err());
        assert!(Gf::new(2, 0, None).is_err());
        assert!(Gf::new(2, 9, None).is_err()); // 512 > limit
        // x^2 + 1 is reducible over F_2
        assert!(Gf::new(2, 2, Some(vec![1, 0, 1])).is_err());
        // x^2 + 1 is irreducible over F_3
        assert!(Gf::new(3, 2, Some(vec![1, 0, 1])).is_ok());
    }

    #[test]
    fn field_spec_parsing() {
        assert_eq!(FieldSpec::parse("Q").unwrap(), FieldSpec::Rationals);
        assert_eq!(
            FieldSpec::parse("F9").unwrap(),
            FieldSpec::Finite { p: 3, r: 2, modulus: None }
        );
        assert!(FieldSpec::parse("F6").is_err());
        assert!(FieldSpec::parse("G5").is_err());
    }
}

//! Dense univariate polynomials with exact rational coefficients.

use super::scalar::{int, rat, rat_display, rat_is_int, Int, Rat};
use num_traits::{One, Signed, Zero};

/// Coefficients in ascending power order; no trailing zeros (zero = empty).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyQ {
    coeffs: Vec<Rat>,
}

impl PolyQ {
    pub fn zero() -> Self {
        PolyQ { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        PolyQ::constant(rat(1))
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = PolyQ { coeffs: vec![c] };
        p.normalize();
        p
    }

    pub fn monomial(deg: usize, c: Rat) -> Self {
        if c.is_zero() {
            return PolyQ::zero();
        }
        let mut coeffs = vec![Rat::zero(); deg + 1];
        coeffs[deg] = c;
        PolyQ { coeffs }
    }

    pub fn x() -> Self {
        PolyQ::monomial(1, rat(1))
    }

    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        let mut p = PolyQ { coeffs };
        p.normalize();
        p
    }

    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        PolyQ::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect())
    }

    fn normalize(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        matches!(self.leading(), Some(c) if c.is_one())
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(rat_is_int)
    }

    pub fn integer_coeffs(&self) -> Option<Vec<Int>> {
        if self.has_integer_coeffs() {
            Some(self.coeffs.iter().map(|c| c.numer().clone()).collect())
        } else {
            None
        }
    }

    pub fn add(&self, other: &PolyQ) -> PolyQ {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + other.coeff(i));
        }
        PolyQ::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &PolyQ) -> PolyQ {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> PolyQ {
        PolyQ {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> PolyQ {
        if c.is_zero() {
            return PolyQ::zero();
        }
        PolyQ {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &PolyQ) -> PolyQ {
        if self.is_zero() || other.is_zero() {
            return PolyQ::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        PolyQ::from_coeffs(coeffs)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_int(&self, x: i64) -> Rat {
        self.eval(&rat(x))
    }

    pub fn derivative(&self) -> PolyQ {
        if self.coeffs.len() <= 1 {
            return PolyQ::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * rat(i as i64))
            .collect();
        PolyQ::from_coeffs(coeffs)
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn divrem(&self, div: &PolyQ) -> (PolyQ, PolyQ) {
        assert!(!div.is_zero(), "polynomial division by zero");
        let dd = div.coeffs.len() - 1;
        let lead = div.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (PolyQ::zero(), self.clone());
        }
        let mut quo = vec![Rat::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = &rem[i] / lead;
            for (j, c) in div.coeffs.iter().enumerate() {
                let delta = &q * c;
                rem[i - dd + j] -= delta;
            }
            quo[i - dd] = q;
        }
        (PolyQ::from_coeffs(quo), PolyQ::from_coeffs(rem))
    }

    pub fn divides_exactly(&self, div: &PolyQ) -> Option<PolyQ> {
        let (q, r) = self.divrem(div);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    pub fn make_monic(&self) -> PolyQ {
        match self.leading() {
            None => PolyQ::zero(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, other: &PolyQ) -> PolyQ {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.make_monic()
    }

    /// Extended Euclid: returns `(g, u, v)` with `u*self + v*other = g`, g monic.
    pub fn extended_gcd(&self, other: &PolyQ) -> (PolyQ, PolyQ, PolyQ) {
        let mut r0 = self.clone();
        let mut r1 = other.clone();
        let mut s0 = PolyQ::one();
        let mut s1 = PolyQ::zero();
        let mut t0 = PolyQ::zero();
        let mut t1 = PolyQ::one();
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        match r0.leading() {
            None => (PolyQ::zero(), PolyQ::zero(), PolyQ::zero()),
            Some(l) => {
                let inv = l.recip();
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
        }
    }

    /// Yun's squarefree decomposition: pairwise-coprime monic squarefree
    /// `f_i` with `self ~ prod f_i^i`; only nonconstant factors are listed.
    pub fn squarefree_decomposition(&self) -> Vec<(PolyQ, usize)> {
        let f = self.make_monic();
        if f.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut out = Vec::new();
        let mut c = f.divides_exactly(&a0).expect("gcd divides");
        let mut d = df.divides_exactly(&a0).expect("gcd divides").sub(&c.derivative());
        let mut i = 1usize;
        while c.degree().unwrap_or(0) > 0 {
            let p = c.gcd(&d);
            if p.degree().unwrap_or(0) > 0 {
                out.push((p.clone(), i));
            }
            c = c.divides_exactly(&p).expect("factor divides");
            d = d.divides_exactly(&p).expect("factor divides").sub(&c.derivative());
            i += 1;
        }
        out
    }

    /// All rational roots with multiplicities, found exactly via the
    /// rational root bound on the primitive integer form.
    pub fn rational_roots(&self) -> Vec<(Rat, usize)> {
        if self.is_zero() {
            return Vec::new();
        }
        // Clear denominators.
        let mut den = Int::one();
        for c in &self.coeffs {
            den = num_integer::lcm(den, c.denom().clone());
        }
        let ints: Vec<Int> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        // Strip powers of x.
        let mut shift = 0usize;
        while shift < ints.len() && ints[shift].is_zero() {
            shift += 1;
        }
        let body = &ints[shift..];
        let mut roots: Vec<(Rat, usize)> = Vec::new();
        if shift > 0 {
            roots.push((Rat::zero(), shift));
        }
        if body.len() <= 1 {
            return roots;
        }
        let a0 = body[0].abs();
        let an = body.last().unwrap().abs();
        let mut candidates: Vec<Rat> = Vec::new();
        for p in divisors_int(&a0) {
            for q in divisors_int(&an) {
                let pos = Rat::new(p.clone(), q.clone());
                let neg = -&pos;
                candidates.push(pos);
                candidates.push(neg);
            }
        }
        candidates.sort();
        candidates.dedup();
        let poly = PolyQ::from_coeffs(body.iter().map(|c| Rat::from_integer(c.clone())).collect());
        for cand in candidates {
            if poly.eval(&cand).is_zero() {
                let lin = PolyQ::from_coeffs(vec![-&cand, Rat::one()]);
                let mut mult = 0usize;
                let mut cur = poly.clone();
                while let Some(q) = cur.divides_exactly(&lin) {
                    mult += 1;
                    cur = q;
                }
                roots.push((cand, mult));
            }
        }
        roots
    }

    pub fn to_string_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts: Vec<String> = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let body = if i == 0 {
                rat_display(&mag)
            } else {
                let xpow = if i == 1 {
                    var.to_string()
                } else {
                    format!("{}^{}", var, i)
                };
                if mag.is_one() {
                    xpow
                } else {
                    format!("{}*{}", rat_display(&mag), xpow)
                }
            };
            if parts.is_empty() {
                if c.is_negative() {
                    parts.push(format!("-{}", body));
                } else {
                    parts.push(body);
                }
            } else if c.is_negative() {
                parts.push(format!("- {}", body));
            } else {
                parts.push(format!("+ {}", body));
            }
        }
        parts.join(" ")
    }
}

impl std::fmt::Display for PolyQ {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_string_var("q"))
    }
}

/// Positive divisors of `|n|` by trial division; `n` must be nonzero.
fn divisors_int(n: &Int) -> Vec<Int> {
    let n = n.abs();
    assert!(!n.is_zero());
    let mut factors: Vec<(Int, u32)> = Vec::new();
    let mut m = n;
    let mut p = int(2);
    // Budgeted trial division; any unfactored cofactor is kept whole, which
    // can only add (never lose) genuine divisors as long as the cofactor is
    // included as its own divisor candidate below.
    let budget = int(1_000_000);
    while &p * &p <= m && p <= budget {
        if (&m % &p).is_zero() {
            let mut e = 0u32;
            while (&m % &p).is_zero() {
                m /= &p;
                e += 1;
            }
            factors.push((p.clone(), e));
        }
        p += 1;
    }
    if !m.is_one() {
        factors.push((m, 1));
    }
    let mut divs = vec![Int::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pk = Int::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    divs.dedup();
    divs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::rat_frac;

    #[test]
    fn add_example() {
        let a = PolyQ::from_int_coeffs(&[1, 0, 1]); // q^2 + 1
        let b = PolyQ::from_int_coeffs(&[-1, 1]); // q - 1
        assert_eq!(a.add(&b), PolyQ::from_int_coeffs(&[0, 1, 1]));
    }

    #[test]
    fn eval_example() {
        let p = PolyQ::from_int_coeffs(&[0, -1, 0, 1]); // q^3 - q
        assert_eq!(p.eval(&rat_frac(1, 2)), rat_frac(-3, 8));
    }

    #[test]
    fn display_forms() {
        let p = PolyQ::from_int_coeffs(&[0, 0, 0, 1, 0, 1]);
        assert_eq!(p.to_string(), "q^5 + q^3");
        let r = PolyQ::from_int_coeffs(&[2, 0, 2]);
        assert_eq!(r.to_string(), "2*q^2 + 2");
        let m = PolyQ::from_int_coeffs(&[1, -2]);
        assert_eq!(m.to_string(), "-2*q + 1");
        assert_eq!(PolyQ::zero().to_string(), "0");
    }

    #[test]
    fn division_and_gcd() {
        let a = PolyQ::from_int_coeffs(&[-1, 0, 1]); // x^2 - 1
        let b = PolyQ::from_int_coeffs(&[-1, 1]); // x - 1
        let (q, r) = a.divrem(&b);
        assert_eq!(q, PolyQ::from_int_coeffs(&[1, 1]));
        assert!(r.is_zero());
        let g = a.gcd(&PolyQ::from_int_coeffs(&[1, 1]));
        assert_eq!(g, PolyQ::from_int_coeffs(&[1, 1]));
        let (g2, u, v) = a.extended_gcd(&b);
        assert_eq!(g2, b.make_monic());
        assert_eq!(u.mul(&a).add(&v.mul(&b)), g2);
    }

    #[test]
    fn bezout_coprime() {
        let a = PolyQ::from_int_coeffs(&[-1, 1]); // x - 1
        let b = PolyQ::from_int_coeffs(&[-2, 1]); // x - 2
        let (g, u, v) = a.extended_gcd(&b);
        assert_eq!(g, PolyQ::one());
        assert_eq!(u.mul(&a).add(&v.mul(&b)), PolyQ::one());
    }

    #[test]
    fn squarefree_and_roots() {
        // (x-1)^2 (x+2)
        let p = PolyQ::from_int_coeffs(&[2, -3, 0, 1]);
        let sf = p.squarefree_decomposition();
        assert_eq!(sf.len(), 2);
        assert_eq!(sf[0], (PolyQ::from_int_coeffs(&[2, 1]), 1));
        assert_eq!(sf[1], (PolyQ::from_int_coeffs(&[-1, 1]), 2));
        let mut roots = p.rational_roots();
        roots.sort();
        assert_eq!(roots, vec![(rat(-2), 1), (rat(1), 2)]);
        // x^2 + 1 has none
        assert!(PolyQ::from_int_coeffs(&[1, 0, 1]).rational_roots().is_empty());
        // x^3: root 0 with multiplicity 3
        assert_eq!(
            PolyQ::from_int_coeffs(&[0, 0, 0, 1]).rational_roots(),
            vec![(rat(0), 3)]
        );
        // half-integer root: 2x - 1
        assert_eq!(
            PolyQ::from_int_coeffs(&[-1, 2]).rational_roots(),
            vec![(rat_frac(1, 2), 1)]
        );
    }
}

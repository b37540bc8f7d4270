//! Polynomials in a discrete variable `g` written in the binomial basis
//! `C(g,0), C(g,1), C(g,2), ...`. Counting formulas live naturally in this
//! basis with nonnegative integer coefficients.

use super::polyq::PolyQ;
use super::scalar::{binomial, factorial, int, rat, Int, Rat};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinomialPolyG {
    /// `k -> coefficient of C(g,k)`; zero coefficients are not stored.
    coeffs: BTreeMap<u32, Rat>,
}

impl BinomialPolyG {
    pub fn zero() -> Self {
        BinomialPolyG {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn from_int_terms(terms: &[(u32, i64)]) -> Self {
        let mut p = BinomialPolyG::zero();
        for &(k, c) in terms {
            p.add_term(k, &rat(c));
        }
        p
    }

    pub fn add_term(&mut self, k: u32, c: &Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(k).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&k);
        }
    }

    pub fn add(&self, other: &BinomialPolyG) -> BinomialPolyG {
        let mut out = self.clone();
        for (k, c) in &other.coeffs {
            out.add_term(*k, c);
        }
        out
    }

    pub fn scale_int(&self, c: &Int) -> BinomialPolyG {
        let cr = Rat::from_integer(c.clone());
        let mut out = BinomialPolyG::zero();
        for (k, v) in &self.coeffs {
            out.add_term(*k, &(v * &cr));
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, k: u32) -> Rat {
        self.coeffs.get(&k).cloned().unwrap_or_else(Rat::zero)
    }

    /// `(k, coefficient)` pairs in ascending `k`.
    pub fn terms(&self) -> Vec<(u32, Rat)> {
        self.coeffs.iter().map(|(k, c)| (*k, c.clone())).collect()
    }

    pub fn max_index(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.values().all(|c| c.denom().is_one())
    }

    pub fn eval_at(&self, g: u64) -> Rat {
        let gi = int(g as i64);
        let mut acc = Rat::zero();
        for (k, c) in &self.coeffs {
            acc += c * Rat::from_integer(binomial(&gi, *k as u64));
        }
        acc
    }

    /// Expansion into the monomial basis, as a polynomial in `g`.
    pub fn to_monomial(&self) -> PolyQ {
        let mut acc = PolyQ::zero();
        for (k, c) in &self.coeffs {
            // C(g,k) = g (g-1) ... (g-k+1) / k!
            let mut basis = PolyQ::one();
            for j in 0..*k {
                basis = basis.mul(&PolyQ::from_coeffs(vec![rat(-(j as i64)), Rat::one()]));
            }
            basis = basis.scale(&Rat::new(Int::one(), factorial(*k as u64)));
            acc = acc.add(&basis.scale(c));
        }
        acc
    }

    /// Exact inverse of `to_monomial`: peel leading terms, highest first.
    pub fn from_monomial(p: &PolyQ) -> BinomialPolyG {
        let mut out = BinomialPolyG::zero();
        let mut rest = p.clone();
        while let Some(d) = rest.degree() {
            let lead = rest.leading().unwrap().clone();
            // leading coefficient of C(g,d) is 1/d!
            let c = lead * Rat::from_integer(factorial(d as u64));
            out.add_term(d as u32, &c);
            let single = BinomialPolyG {
                coeffs: BTreeMap::from([(d as u32, c)]),
            };
            rest = rest.sub(&single.to_monomial());
        }
        out
    }

    pub fn to_display(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().rev() {
            let mag = c.abs();
            let body = if *k == 0 {
                super::scalar::rat_display(&mag)
            } else if mag.is_one() {
                format!("C(g,{})", k)
            } else {
                format!("{}*C(g,{})", super::scalar::rat_display(&mag), k)
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

impl std::fmt::Display for BinomialPolyG {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_display())
    }
}

//! Scalar type aliases and small exact-arithmetic helpers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn int(n: i64) -> Int {
    Int::from(n)
}

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(int(n))
}

pub fn rat_frac(num: i64, den: i64) -> Rat {
    Rat::new(int(num), int(den))
}

pub fn factorial(n: u64) -> Int {
    let mut acc = Int::one();
    for k in 2..=n {
        acc *= int(k as i64);
    }
    acc
}

/// Binomial coefficient with an arbitrary integer upper argument,
/// via the falling factorial: C(n, k) = n (n-1) ... (n-k+1) / k!.
pub fn binomial(n: &Int, k: u64) -> Int {
    let mut num = Int::one();
    for j in 0..k {
        num *= n - int(j as i64);
    }
    let den = factorial(k);
    let (q, r) = num_integer::Integer::div_rem(&num, &den);
    debug_assert!(r.is_zero());
    q
}

pub fn binomial_u(n: u64, k: u64) -> Int {
    if k > n {
        return Int::zero();
    }
    binomial(&int(n as i64), k)
}

/// `base^exp` for a possibly negative exponent; `base` must be nonzero
/// when `exp < 0`.
pub fn pow_rat(base: &Rat, exp: i64) -> Rat {
    if exp >= 0 {
        num_traits::Pow::pow(base, exp as u64)
    } else {
        assert!(!base.is_zero(), "negative power of zero");
        num_traits::Pow::pow(&base.recip(), (-exp) as u64)
    }
}

pub fn rat_is_int(r: &Rat) -> bool {
    r.denom().is_one()
}

pub fn rat_to_int(r: &Rat) -> Option<Int> {
    if rat_is_int(r) {
        Some(r.numer().clone())
    } else {
        None
    }
}

/// Renders a rational without a denominator when it is integral.
pub fn rat_display(r: &Rat) -> String {
    if rat_is_int(r) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rat_abs(r: &Rat) -> Rat {
    r.abs()
}

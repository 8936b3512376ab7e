use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::numtheory::{is_prime, is_probable_prime, primes_up_to};

use super::PaperError;

/// Trial-division bound on the candidate t before falling back to
/// Pollard's rho.
const TRIAL_BOUND: u64 = 2_000_000;
/// Iteration budget for one Pollard rho attempt.
const RHO_ITERATIONS: u64 = 200_000;

/// Parameters (q, r, t): q an odd prime, r ≥ 5 a prime with r | q-1 and
/// r² ∤ q-1, t a prime dividing (q^r - 1)/(q - 1) but not q - 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ParamTriple {
    pub q: u64,
    pub r: u64,
    pub t: u64,
}

impl ParamTriple {
    pub const BASE: ParamTriple = ParamTriple {
        q: 11,
        r: 5,
        t: 3221,
    };

    /// (q^r - 1)/(q - 1).
    pub fn norm_quotient(&self) -> BigUint {
        norm_quotient(self.q, self.r)
    }

    pub fn validate(&self) -> Result<(), PaperError> {
        let ParamTriple { q, r, t } = *self;
        let fail = |msg: String| Err(PaperError::InvalidParams(msg));
        if q < 3 || !is_prime(q) {
            return fail(format!("q = {q} is not an odd prime"));
        }
        if r < 5 || !is_prime(r) {
            return fail(format!("r = {r} is not a prime at least 5"));
        }
        if (q - 1) % r != 0 {
            return fail(format!("r = {r} does not divide q - 1 = {}", q - 1));
        }
        if (q - 1) % (r * r) == 0 {
            return fail(format!("r^2 = {} divides q - 1 = {}", r * r, q - 1));
        }
        if !is_prime(t) {
            return fail(format!("t = {t} is not prime"));
        }
        if !(self.norm_quotient() % t).is_zero() {
            return fail(format!("t = {t} does not divide (q^r - 1)/(q - 1)"));
        }
        if (q - 1) % t == 0 {
            return fail(format!("t = {t} divides q - 1"));
        }
        Ok(())
    }
}

pub fn norm_quotient(q: u64, r: u64) -> BigUint {
    let qb = BigUint::from(q);
    (qb.pow(r as u32) - 1u32) / (qb - 1u32)
}

/// Outcome of a parameter search: the triples found, plus any (q, r) for
/// which the least t could not be determined within the factoring budget.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ParamSearch {
    pub triples: Vec<ParamTriple>,
    pub unresolved: Vec<(u64, u64)>,
}

/// Every valid (q, r) with q ≤ q_max, each paired with its least t, sorted.
pub fn find_params(q_max: u64) -> Vec<ParamTriple> {
    search_params(q_max).triples
}

pub fn search_params(q_max: u64) -> ParamSearch {
    let mut out = ParamSearch::default();
    for q in primes_up_to(q_max).filter(|&q| q >= 3) {
        for r in primes_up_to(q - 1).filter(|&r| r >= 5) {
            if (q - 1) % r != 0 || (q - 1) % (r * r) == 0 {
                continue;
            }
            match least_t(q, r) {
                Some(t) => out.triples.push(ParamTriple { q, r, t }),
                None => out.unresolved.push((q, r)),
            }
        }
    }
    out.triples.sort();
    out
}

/// Least prime t dividing N = (q^r - 1)/(q - 1) with t ∤ q - 1.
///
/// When r | q - 1 the only prime shared by N and q - 1 is r, and every other
/// prime factor of N is 1 mod 2r, so candidates are scanned in that class.
fn least_t(q: u64, r: u64) -> Option<u64> {
    let mut n = norm_quotient(q, r);
    while (&n % r).is_zero() {
        n /= r;
    }
    if n.is_one() {
        return None;
    }
    let step = 2 * r;
    let mut cand = 1 + step;
    while cand <= TRIAL_BOUND {
        let cb = BigUint::from(cand);
        if &cb * &cb > n {
            return n.to_u64();
        }
        if (&n % cand).is_zero() {
            return Some(cand);
        }
        cand += step;
    }
    if is_probable_prime(&n) {
        return n.to_u64();
    }
    smallest_factor_rho(&n).and_then(|f| f.to_u64())
}

/// Smallest prime factor of a composite with no factor below the trial
/// bound, by repeated Pollard rho splitting. `None` if the budget runs out.
fn smallest_factor_rho(n: &BigUint) -> Option<BigUint> {
    if is_probable_prime(n) {
        return Some(n.clone());
    }
    let d = (1u32..4).find_map(|c| pollard_rho(n, c))?;
    let other = n / &d;
    let a = smallest_factor_rho(&d)?;
    let b = smallest_factor_rho(&other)?;
    Some(a.min(b))
}

/// Brent's variant of Pollard rho, taking one gcd per batch of steps.
fn pollard_rho(n: &BigUint, c: u32) -> Option<BigUint> {
    const BATCH: u64 = 128;
    let f = |x: &BigUint| (x * x + c) % n;
    let mut y = BigUint::from(2u32);
    let mut product = BigUint::one();
    let mut power = 1u64;
    let mut steps = 0u64;
    while steps < RHO_ITERATIONS {
        let x = y.clone();
        for _ in 0..power {
            y = f(&y);
        }
        let mut done = 0;
        while done < power && steps < RHO_ITERATIONS {
            let saved = y.clone();
            let batch = BATCH.min(power - done);
            for _ in 0..batch {
                y = f(&y);
                let diff = if x > y { &x - &y } else { &y - &x };
                product = product * diff % n;
            }
            done += batch;
            steps += batch;
            let d = gcd(&product, n);
            if d.is_one() {
                continue;
            }
            if d != *n {
                return Some(d);
            }
            // The batch overshot; replay it one step at a time.
            let mut z = saved.clone();
            for _ in 0..batch {
                z = f(&z);
                let diff = if x > z { &x - &z } else { &z - &x };
                let d = gcd(&diff, n);
                if !d.is_one() {
                    return (d != *n).then_some(d);
                }
            }
            return None;
        }
        power *= 2;
    }
    None
}

fn gcd(a: &BigUint, b: &BigUint) -> BigUint {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_zero() {
        let t = &a % &b;
        a = b;
        b = t;
    }
    a
}

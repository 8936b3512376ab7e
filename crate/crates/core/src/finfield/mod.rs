//! Exact arithmetic in GF(p^k).
//!
//! A [`Field`] is an immutable, shareable arithmetic context. Elements are
//! encoded as the integer `sum c_i p^i` of their coefficient vector
//! (`c_0` is the constant term), so the prime subfield embeds as `0..p` and
//! the numeric order of encodings is the lexicographic order of coefficient
//! vectors read from the top degree down. That order is the canonical one
//! used for every deterministic choice (modulus, primitive element, element
//! serialisation).
//!
//! Fields up to [`TABLE_LIMIT`] elements carry discrete log tables; larger
//! fields fall back to schoolbook polynomial arithmetic.

mod poly;
mod upoly;

pub use poly::{BiPoly, MPoly};

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::numtheory::{factorize, is_prime, prime_divisors};

/// Default bound on the number of field elements.
pub const DEFAULT_FIELD_CAP: u64 = 1 << 24;
/// Fields at most this large get log/antilog tables.
pub const TABLE_LIMIT: u64 = 1 << 20;
const MAX_DEGREE: usize = 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("GF({p}^{k}) exceeds the cap of {cap} elements")]
    CapExceeded { p: u64, k: usize, cap: u64 },
    #[error("extension degree must be at least 1")]
    InvalidDegree,
    #[error("modulus is not a monic irreducible polynomial of degree {0}")]
    InvalidModulus(usize),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    SpecMismatch,
    #[error("zero has no multiplicative order")]
    ZeroElement,
    #[error("no element of order {n} in GF({q})")]
    NoSuchOrder { n: u64, q: u64 },
    #[error("encoding {0} is out of range for this field")]
    OutOfRange(u64),
}

/// Serialisable description of GF(p^k): `{"p":..,"k":..,"modulus":[..]}`,
/// modulus coefficients low-degree first, monic of degree `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u32,
    pub k: usize,
    pub modulus: Vec<u32>,
}

struct Tables {
    log: Vec<u32>,
    exp: Vec<u32>,
}

struct Inner {
    spec: FieldSpec,
    p: u64,
    k: usize,
    order: u64,
    modulus: Vec<u64>,
    tables: Option<Tables>,
    primitive: u32,
    /// Prime divisors of `order - 1`.
    unit_primes: Vec<u64>,
    /// Encodings of (X^j)^p, j < k: the Frobenius map is GF(p)-linear.
    frob_basis: Vec<u32>,
}

/// Shared arithmetic context for GF(p^k). Cheap to clone.
#[derive(Clone)]
pub struct Field(Arc<Inner>);

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.0.p, self.0.k)
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.spec == other.0.spec
    }
}

impl Eq for Field {}

impl Field {
    /// GF(p^k) with the default element cap.
    pub fn new(p: u64, k: usize) -> Result<Self, FieldError> {
        Self::with_cap(p, k, DEFAULT_FIELD_CAP)
    }

    /// GF(p^k) with the lexicographically least monic irreducible modulus.
    pub fn with_cap(p: u64, k: usize, cap: u64) -> Result<Self, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if k == 0 {
            return Err(FieldError::InvalidDegree);
        }
        let order = field_order(p, k, cap)?;
        let modulus = if k == 1 {
            vec![0, 1]
        } else {
            least_irreducible(p, k)
        };
        Ok(Self::build(p, k, order, modulus))
    }

    /// Rebuild a field from its serialised description, validating it.
    pub fn from_spec(spec: &FieldSpec, cap: u64) -> Result<Self, FieldError> {
        let p = spec.p as u64;
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if spec.k == 0 {
            return Err(FieldError::InvalidDegree);
        }
        let order = field_order(p, spec.k, cap)?;
        let modulus: Vec<u64> = spec.modulus.iter().map(|&c| c as u64).collect();
        let well_formed =
            modulus.len() == spec.k + 1 && modulus[spec.k] == 1 && modulus.iter().all(|&c| c < p);
        if !well_formed || !upoly::is_irreducible(&modulus, p) {
            return Err(FieldError::InvalidModulus(spec.k));
        }
        Ok(Self::build(p, spec.k, order, modulus))
    }

    fn build(p: u64, k: usize, order: u64, modulus: Vec<u64>) -> Self {
        let spec = FieldSpec {
            p: p as u32,
            k,
            modulus: modulus.iter().map(|&c| c as u32).collect(),
        };
        let mut inner = Inner {
            spec,
            p,
            k,
            order,
            modulus,
            tables: None,
            primitive: 0,
            unit_primes: prime_divisors(order - 1),
            frob_basis: Vec::new(),
        };
        inner.primitive = (1..order as u32)
            .find(|&a| inner.is_primitive_slow(a))
            .expect("the multiplicative group of a finite field is cyclic");
        inner.frob_basis = (0..k)
            .map(|j| {
                let xj = (p.pow(j as u32)) as u32;
                inner.pow_slow(xj, p)
            })
            .collect();
        if order <= TABLE_LIMIT {
            let n = (order - 1) as usize;
            let mut exp = Vec::with_capacity(n);
            let mut log = vec![u32::MAX; order as usize];
            let mut cur = 1u32;
            for i in 0..n {
                exp.push(cur);
                log[cur as usize] = i as u32;
                cur = inner.mul_slow(cur, inner.primitive);
            }
            inner.tables = Some(Tables { log, exp });
        }
        Field(Arc::new(inner))
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.0.spec
    }

    pub fn characteristic(&self) -> u64 {
        self.0.p
    }

    pub fn degree(&self) -> usize {
        self.0.k
    }

    /// Number of elements, p^k.
    pub fn order(&self) -> u64 {
        self.0.order
    }

    /// Wrap a raw encoding.
    pub fn element(&self, raw: u64) -> Result<FieldElement, FieldError> {
        if raw >= self.0.order {
            return Err(FieldError::OutOfRange(raw));
        }
        Ok(self.wrap(raw as u32))
    }

    pub(crate) fn wrap(&self, raw: u32) -> FieldElement {
        debug_assert!((raw as u64) < self.0.order);
        FieldElement {
            field: self.clone(),
            raw,
        }
    }

    /// Element from a low-degree-first coefficient list (reduced mod p;
    /// at most k entries).
    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<FieldElement, FieldError> {
        if coeffs.len() > self.0.k {
            return Err(FieldError::InvalidModulus(self.0.k));
        }
        let mut raw = 0u64;
        for &c in coeffs.iter().rev() {
            raw = raw * self.0.p + c % self.0.p;
        }
        Ok(self.wrap(raw as u32))
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> FieldElement {
        self.wrap(self.int_raw(n))
    }

    pub(crate) fn int_raw(&self, n: i64) -> u32 {
        n.rem_euclid(self.0.p as i64) as u32
    }

    pub fn zero(&self) -> FieldElement {
        self.wrap(0)
    }

    pub fn one(&self) -> FieldElement {
        self.wrap(1)
    }

    /// Least primitive element in canonical order.
    pub fn primitive_element(&self) -> FieldElement {
        self.wrap(self.0.primitive)
    }

    /// Every element in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.0.order as u32).map(move |r| self.wrap(r))
    }

    /// An element of exact multiplicative order `n`: the primitive element
    /// raised to `(p^k - 1) / n`.
    pub fn element_of_order(&self, n: u64) -> Result<FieldElement, FieldError> {
        let units = self.0.order - 1;
        if n == 0 || !units.is_multiple_of(n) {
            return Err(FieldError::NoSuchOrder { n, q: self.0.order });
        }
        Ok(self.wrap(self.pow_raw(self.0.primitive, units / n)))
    }

    /// All elements of exact order `n`, in canonical order.
    pub fn elements_of_order(&self, n: u64) -> Result<Vec<FieldElement>, FieldError> {
        let gen = self.element_of_order(n)?;
        let mut out: Vec<FieldElement> = (1..=n)
            .filter(|&j| num_integer_gcd(j, n) == 1)
            .map(|j| gen.pow(j))
            .collect();
        out.sort();
        Ok(out)
    }

    // ----- raw arithmetic on encodings -----

    pub(crate) fn add_raw(&self, a: u32, b: u32) -> u32 {
        let inner = &*self.0;
        let p = inner.p;
        if inner.k == 1 {
            return ((a as u64 + b as u64) % p) as u32;
        }
        let (mut a, mut b) = (a as u64, b as u64);
        let mut out = 0u64;
        let mut place = 1u64;
        for _ in 0..inner.k {
            out += ((a % p + b % p) % p) * place;
            place *= p;
            a /= p;
            b /= p;
        }
        out as u32
    }

    pub(crate) fn neg_raw(&self, a: u32) -> u32 {
        let inner = &*self.0;
        let p = inner.p;
        let mut a = a as u64;
        let mut out = 0u64;
        let mut place = 1u64;
        for _ in 0..inner.k {
            out += ((p - a % p) % p) * place;
            place *= p;
            a /= p;
        }
        out as u32
    }

    pub(crate) fn sub_raw(&self, a: u32, b: u32) -> u32 {
        self.add_raw(a, self.neg_raw(b))
    }

    /// `c * a` for `c` in the prime subfield.
    fn scale_raw(&self, c: u64, a: u32) -> u32 {
        let inner = &*self.0;
        let p = inner.p;
        let mut a = a as u64;
        let mut out = 0u64;
        let mut place = 1u64;
        for _ in 0..inner.k {
            out += ((a % p) * c % p) * place;
            place *= p;
            a /= p;
        }
        out as u32
    }

    pub(crate) fn mul_raw(&self, a: u32, b: u32) -> u32 {
        let inner = &*self.0;
        if a == 0 || b == 0 {
            return 0;
        }
        match &inner.tables {
            Some(t) => {
                let n = inner.order - 1;
                let e = (t.log[a as usize] as u64 + t.log[b as usize] as u64) % n;
                t.exp[e as usize]
            }
            None => inner.mul_slow(a, b),
        }
    }

    pub(crate) fn inv_raw(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let inner = &*self.0;
        match &inner.tables {
            Some(t) => {
                let n = inner.order - 1;
                let e = (n - t.log[a as usize] as u64) % n;
                Some(t.exp[e as usize])
            }
            None => Some(inner.pow_slow(a, inner.order - 2)),
        }
    }

    pub(crate) fn pow_raw(&self, a: u32, e: u64) -> u32 {
        let inner = &*self.0;
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        match &inner.tables {
            Some(t) => {
                let n = (inner.order - 1) as u128;
                let ex = (t.log[a as usize] as u128 * e as u128) % n;
                t.exp[ex as usize]
            }
            None => inner.pow_slow(a, e),
        }
    }

    /// Square-and-multiply over the bits of an arbitrary-precision exponent.
    pub(crate) fn pow_big_raw(&self, a: u32, e: &BigUint) -> u32 {
        let mut acc = 1u32;
        for i in (0..e.bits()).rev() {
            acc = self.mul_raw(acc, acc);
            if e.bit(i) {
                acc = self.mul_raw(acc, a);
            }
        }
        acc
    }

    /// beta^i(a) = a^(p^(i mod k)); negative `i` gives the inverse powers.
    pub(crate) fn frob_raw(&self, a: u32, i: i64) -> u32 {
        let inner = &*self.0;
        let k = inner.k as i64;
        let i = i.rem_euclid(k);
        if i == 0 || a == 0 {
            return a;
        }
        if let Some(t) = &inner.tables {
            let n = inner.order - 1;
            let pi = inner.p.pow(i as u32) % n;
            let ex = (t.log[a as usize] as u128 * pi as u128) % n as u128;
            return t.exp[ex as usize];
        }
        let mut cur = a;
        for _ in 0..i {
            cur = self.frob_once_linear(cur);
        }
        cur
    }

    /// One application of x -> x^p using the precomputed linear map.
    fn frob_once_linear(&self, a: u32) -> u32 {
        let inner = &*self.0;
        let p = inner.p;
        let mut rest = a as u64;
        let mut out = 0u32;
        for j in 0..inner.k {
            let c = rest % p;
            rest /= p;
            if c != 0 {
                out = self.add_raw(out, self.scale_raw(c, inner.frob_basis[j]));
            }
        }
        out
    }

    pub(crate) fn order_raw(&self, a: u32) -> Option<u64> {
        if a == 0 {
            return None;
        }
        let mut n = self.0.order - 1;
        for &s in &self.0.unit_primes {
            while n.is_multiple_of(s) && self.pow_raw(a, n / s) == 1 {
                n /= s;
            }
        }
        Some(n)
    }

    pub(crate) fn coeffs_raw(&self, a: u32) -> Vec<u32> {
        let p = self.0.p;
        let mut rest = a as u64;
        (0..self.0.k)
            .map(|_| {
                let c = rest % p;
                rest /= p;
                c as u32
            })
            .collect()
    }
}

fn num_integer_gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn field_order(p: u64, k: usize, cap: u64) -> Result<u64, FieldError> {
    let order = u32::try_from(k)
        .ok()
        .and_then(|k32| p.checked_pow(k32))
        .filter(|&o| o <= cap && o <= u32::MAX as u64 && k <= MAX_DEGREE);
    order.ok_or(FieldError::CapExceeded {
        p,
        k,
        cap: cap.min(u32::MAX as u64),
    })
}

/// Least monic irreducible of degree k in the order of the encoding of its
/// lower coefficients.
fn least_irreducible(p: u64, k: usize) -> Vec<u64> {
    let count = p.pow(k as u32);
    for n in 0..count {
        let mut f: Vec<u64> = Vec::with_capacity(k + 1);
        let mut rest = n;
        for _ in 0..k {
            f.push(rest % p);
            rest /= p;
        }
        f.push(1);
        if f[0] != 0 && upoly::is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

impl Inner {
    fn decode(&self, a: u32) -> [u64; MAX_DEGREE] {
        let mut out = [0u64; MAX_DEGREE];
        let mut rest = a as u64;
        for slot in out.iter_mut().take(self.k) {
            *slot = rest % self.p;
            rest /= self.p;
        }
        out
    }

    fn mul_slow(&self, a: u32, b: u32) -> u32 {
        let (p, k) = (self.p, self.k);
        let da = self.decode(a);
        let db = self.decode(b);
        let mut t = [0u64; 2 * MAX_DEGREE];
        for i in 0..k {
            if da[i] == 0 {
                continue;
            }
            for j in 0..k {
                t[i + j] = (t[i + j] + da[i] * db[j]) % p;
            }
        }
        for deg in (k..=2 * k - 2).rev() {
            let c = t[deg];
            if c == 0 {
                continue;
            }
            for j in 0..k {
                let idx = deg - k + j;
                t[idx] = (t[idx] + p - c * self.modulus[j] % p) % p;
            }
            t[deg] = 0;
        }
        let mut raw = 0u64;
        for i in (0..k).rev() {
            raw = raw * p + t[i];
        }
        raw as u32
    }

    fn pow_slow(&self, a: u32, mut e: u64) -> u32 {
        let mut acc = 1u32;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_slow(acc, base);
            }
            base = self.mul_slow(base, base);
            e >>= 1;
        }
        acc
    }

    fn is_primitive_slow(&self, a: u32) -> bool {
        let n = self.order - 1;
        self.unit_primes
            .iter()
            .all(|&s| self.pow_slow(a, n / s) != 1)
    }
}

/// An element of a [`Field`].
#[derive(Clone)]
pub struct FieldElement {
    field: Field,
    raw: u32,
}

impl FieldElement {
    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Integer encoding `sum c_i p^i`.
    pub fn raw(&self) -> u32 {
        self.raw
    }

    /// Coefficient vector, low degree first, length k.
    pub fn coeffs(&self) -> Vec<u32> {
        self.field.coeffs_raw(self.raw)
    }

    pub fn is_zero(&self) -> bool {
        self.raw == 0
    }

    pub fn is_one(&self) -> bool {
        self.raw == 1
    }

    fn same_field(&self, other: &Self) -> Result<(), FieldError> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(FieldError::SpecMismatch)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, FieldError> {
        self.same_field(other)?;
        Ok(self.field.wrap(self.field.add_raw(self.raw, other.raw)))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, FieldError> {
        self.same_field(other)?;
        Ok(self.field.wrap(self.field.sub_raw(self.raw, other.raw)))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, FieldError> {
        self.same_field(other)?;
        Ok(self.field.wrap(self.field.mul_raw(self.raw, other.raw)))
    }

    pub fn inv(&self) -> Result<Self, FieldError> {
        self.field
            .inv_raw(self.raw)
            .map(|r| self.field.wrap(r))
            .ok_or(FieldError::DivisionByZero)
    }

    pub fn pow(&self, e: u64) -> Self {
        self.field.wrap(self.field.pow_raw(self.raw, e))
    }

    pub fn pow_big(&self, e: &BigUint) -> Self {
        self.field.wrap(self.field.pow_big_raw(self.raw, e))
    }

    /// beta^i applied to this element, where beta is x -> x^p.
    pub fn frobenius(&self, i: i64) -> Self {
        self.field.wrap(self.field.frob_raw(self.raw, i))
    }

    /// Multiplicative order, via the factorisation of p^k - 1.
    pub fn order(&self) -> Result<u64, FieldError> {
        self.field
            .order_raw(self.raw)
            .ok_or(FieldError::ZeroElement)
    }
}

/// Multiplicative order of an element; see [`FieldElement::order`].
pub fn element_order(a: &FieldElement) -> Result<u64, FieldError> {
    a.order()
}

/// Prime factorisation of the unit group order p^k - 1.
pub fn unit_group_factors(field: &Field) -> Vec<(u64, u32)> {
    factorize(field.order() - 1)
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.raw == other.raw && self.field == other.field
    }
}

impl Eq for FieldElement {}

impl Hash for FieldElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.raw.hash(state);
    }
}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.raw.cmp(&other.raw)
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.degree() == 1 {
            return write!(f, "{}", self.raw);
        }
        let terms: Vec<String> = self
            .coeffs()
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| match (i, c) {
                (0, c) => format!("{c}"),
                (1, 1) => "X".to_string(),
                (1, c) => format!("{c}X"),
                (i, 1) => format!("X^{i}"),
                (i, c) => format!("{c}X^{i}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl Serialize for FieldElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.coeffs().serialize(s)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.$checked(rhs).expect("operands from different fields")
            }
        }
        impl $tr for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.field.wrap(self.field.neg_raw(self.raw))
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

//! Sparse multivariate polynomials over a [`Field`], used for symbolic
//! matrix identities.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Field, FieldElement, FieldError};

/// Exponent vector of a monomial.
pub type Exponents = Vec<u16>;

/// Polynomial in `nvars` commuting indeterminates. Zero coefficients are
/// never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct MPoly {
    field: Field,
    nvars: usize,
    terms: BTreeMap<Exponents, u32>,
}

impl MPoly {
    pub fn zero(field: &Field, nvars: usize) -> Self {
        MPoly {
            field: field.clone(),
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: &FieldElement, nvars: usize) -> Self {
        let mut out = Self::zero(c.field(), nvars);
        if !c.is_zero() {
            out.terms.insert(vec![0; nvars], c.raw());
        }
        out
    }

    pub fn from_int(field: &Field, nvars: usize, n: i64) -> Self {
        Self::constant(&field.from_int(n), nvars)
    }

    pub fn one(field: &Field, nvars: usize) -> Self {
        Self::from_int(field, nvars, 1)
    }

    /// The indeterminate with index `i`.
    pub fn var(field: &Field, nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index {i} out of range");
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut out = Self::zero(field, nvars);
        out.terms.insert(e, 1);
        out
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, FieldElement)> + '_ {
        self.terms.iter().map(|(e, &c)| (e, self.field.wrap(c)))
    }

    pub fn coeff(&self, exps: &[u16]) -> FieldElement {
        self.field.wrap(self.terms.get(exps).copied().unwrap_or(0))
    }

    fn compatible(&self, other: &Self) -> Result<(), FieldError> {
        if self.field == other.field && self.nvars == other.nvars {
            Ok(())
        } else {
            Err(FieldError::SpecMismatch)
        }
    }

    fn insert_add(&mut self, e: Exponents, c: u32) {
        if c == 0 {
            return;
        }
        let field = self.field.clone();
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = field.add_raw(*o.get(), c);
                if s == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, FieldError> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (e, &c) in &other.terms {
            out.insert_add(e.clone(), c);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, FieldError> {
        self.checked_add(&other.neg_poly())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, FieldError> {
        self.compatible(other)?;
        let mut out = Self::zero(&self.field, self.nvars);
        for (ea, &ca) in &self.terms {
            for (eb, &cb) in &other.terms {
                let e: Exponents = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.insert_add(e, self.field.mul_raw(ca, cb));
            }
        }
        Ok(out)
    }

    fn neg_poly(&self) -> Self {
        MPoly {
            field: self.field.clone(),
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, &c)| (e.clone(), self.field.neg_raw(c)))
                .collect(),
        }
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        let mut out = Self::zero(&self.field, self.nvars);
        for (e, &v) in &self.terms {
            out.insert_add(e.clone(), self.field.mul_raw(v, c.raw()));
        }
        out
    }

    /// Evaluate at a point (one value per indeterminate).
    pub fn eval(&self, point: &[FieldElement]) -> Result<FieldElement, FieldError> {
        if point.len() != self.nvars || point.iter().any(|v| *v.field() != self.field) {
            return Err(FieldError::SpecMismatch);
        }
        let mut acc = 0u32;
        for (e, &c) in &self.terms {
            let mut term = c;
            for (v, &k) in point.iter().zip(e) {
                if k > 0 {
                    term = self
                        .field
                        .mul_raw(term, self.field.pow_raw(v.raw(), k as u64));
                }
            }
            acc = self.field.add_raw(acc, term);
        }
        Ok(self.field.wrap(acc))
    }

    /// `Some((c, e))` when the polynomial is the single term `c * x^e`.
    pub fn as_monomial(&self) -> Option<(FieldElement, Exponents)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, &c) = self.terms.iter().next()?;
        Some((self.field.wrap(c), e.clone()))
    }

    /// Substitute zero for one indeterminate.
    pub fn set_zero(&self, var: usize) -> Self {
        MPoly {
            field: self.field.clone(),
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e[var] == 0)
                .map(|(e, &c)| (e.clone(), c))
                .collect(),
        }
    }

    /// Group the terms by their exponents in `vars`; each value is the
    /// coefficient polynomial in the remaining indeterminates.
    pub fn coefficients_in(&self, vars: &[usize]) -> BTreeMap<Exponents, MPoly> {
        let mut out: BTreeMap<Exponents, MPoly> = BTreeMap::new();
        for (e, &c) in &self.terms {
            let key: Exponents = vars.iter().map(|&v| e[v]).collect();
            let mut rest = e.clone();
            for &v in vars {
                rest[v] = 0;
            }
            out.entry(key)
                .or_insert_with(|| MPoly::zero(&self.field, self.nvars))
                .insert_add(rest, c);
        }
        out.retain(|_, p| !p.is_zero());
        out
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&k| k as u32).sum())
            .max()
            .unwrap_or(0)
    }

    /// Render with the given indeterminate names.
    pub fn display_with(&self, names: &[&str]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (e, &c) in self.terms.iter().rev() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    let name = names
                        .get(i)
                        .map(|s| s.to_string())
                        .unwrap_or(format!("v{i}"));
                    if k == 1 {
                        name
                    } else {
                        format!("{name}^{k}")
                    }
                })
                .collect();
            let coeff = self.field.wrap(c).to_string();
            parts.push(match (mono.is_empty(), c == 1) {
                (true, _) => coeff,
                (false, true) => mono.join("*"),
                (false, false) => format!("({coeff})*{}", mono.join("*")),
            });
        }
        parts.join(" + ")
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(&[]))
    }
}

macro_rules! poly_binop {
    ($ty:ident, $tr:ident, $method:ident, $checked:ident) => {
        impl $tr for &$ty {
            type Output = $ty;
            fn $method(self, rhs: &$ty) -> $ty {
                self.$checked(rhs).expect("incompatible polynomials")
            }
        }
        impl $tr for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                (&self).$method(&rhs)
            }
        }
    };
}

poly_binop!(MPoly, Add, add, checked_add);
poly_binop!(MPoly, Sub, sub, checked_sub);
poly_binop!(MPoly, Mul, mul, checked_mul);

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        self.neg_poly()
    }
}

/// Polynomial in two indeterminates `a` and `b`: the parameters of two
/// one-parameter matrix families.
#[derive(Clone, PartialEq, Eq)]
pub struct BiPoly(MPoly);

impl BiPoly {
    pub fn zero(field: &Field) -> Self {
        BiPoly(MPoly::zero(field, 2))
    }

    pub fn constant(c: &FieldElement) -> Self {
        BiPoly(MPoly::constant(c, 2))
    }

    pub fn a(field: &Field) -> Self {
        BiPoly(MPoly::var(field, 2, 0))
    }

    pub fn b(field: &Field) -> Self {
        BiPoly(MPoly::var(field, 2, 1))
    }

    /// Coefficient of a^i b^j.
    pub fn coeff(&self, i: u16, j: u16) -> FieldElement {
        self.0.coeff(&[i, j])
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, FieldError> {
        self.0.checked_add(&other.0).map(BiPoly)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, FieldError> {
        self.0.checked_sub(&other.0).map(BiPoly)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, FieldError> {
        self.0.checked_mul(&other.0).map(BiPoly)
    }

    pub fn eval(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement, FieldError> {
        self.0.eval(&[a.clone(), b.clone()])
    }

    pub fn as_mpoly(&self) -> &MPoly {
        &self.0
    }

    pub fn into_mpoly(self) -> MPoly {
        self.0
    }
}

impl From<MPoly> for BiPoly {
    fn from(p: MPoly) -> Self {
        assert_eq!(p.nvars(), 2, "BiPoly needs exactly two indeterminates");
        BiPoly(p)
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.display_with(&["a", "b"]))
    }
}

poly_binop!(BiPoly, Add, add, checked_add);
poly_binop!(BiPoly, Sub, sub, checked_sub);
poly_binop!(BiPoly, Mul, mul, checked_mul);

//! Integer polynomials in `x, y` (Tutte-type invariants) and in `t`
//! (characteristic polynomials).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Polynomial in `x` and `y` with exact integer coefficients. Zero coefficients
/// are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BivariatePoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BivariatePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: BigInt, i: u32, j: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(i, j, c);
        p
    }

    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(BigInt::one(), 0, 1)
    }

    /// `(x - 1)^a (y - 1)^b`, expanded.
    pub fn shifted_monomial(a: u32, b: u32) -> Self {
        let xm = &Self::x() - &Self::one();
        let ym = &Self::y() - &Self::one();
        &xm.pow(a) * &ym.pow(b)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: u32, j: u32) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry((i, j)).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut p = Self::zero();
        for (&(i, j), v) in &self.terms {
            p.add_term(i, j, v * c);
        }
        p
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        self.terms
            .iter()
            .map(|(&(i, j), c)| c * num_traits::pow(x.clone(), i as usize) * num_traits::pow(y.clone(), j as usize))
            .sum()
    }

    /// Substitutes `x = 1 - t`, `y = 0`.
    pub fn at_one_minus_t_zero(&self) -> UniPoly {
        let base = &UniPoly::one() - &UniPoly::t();
        let mut out = UniPoly::zero();
        for (&(i, j), c) in &self.terms {
            if j == 0 {
                out += &base.pow(i).scale(c);
            }
        }
        out
    }
}

impl fmt::Display for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut keys: Vec<&(u32, u32)> = self.terms.keys().collect();
        keys.sort_by(|a, b| (b.0 + b.1, b.0).cmp(&(a.0 + a.1, a.0)));
        let terms = keys.into_iter().map(|k| {
            let mut m = String::new();
            push_var(&mut m, "x", k.0);
            push_var(&mut m, "y", k.1);
            (&self.terms[k], m)
        });
        write_terms(f, terms)
    }
}

/// Polynomial in `t` with exact integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct UniPoly {
    terms: BTreeMap<u32, BigInt>,
}

impl UniPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    pub fn t() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn monomial(c: BigInt, k: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(k, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    pub fn coeff(&self, k: u32) -> BigInt {
        self.terms.get(&k).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&u32, &BigInt)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, k: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(k).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut p = Self::zero();
        for (&k, v) in &self.terms {
            p.add_term(k, v * c);
        }
        p
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.terms
            .iter()
            .map(|(&k, c)| c * num_traits::pow(t.clone(), k as usize))
            .sum()
    }

    /// True when the coefficients of `t^r, t^{r-1}, ...` alternate in sign
    /// (zero coefficients allowed), starting from the leading one.
    pub fn alternates_in_sign(&self) -> bool {
        let Some(top) = self.degree() else { return true };
        let lead_positive = self.coeff(top).is_positive();
        self.terms.iter().all(|(&k, c)| {
            let even = (top - k) % 2 == 0;
            c.is_positive() == (even == lead_positive)
        })
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms.iter().rev().map(|(&k, c)| {
            let mut m = String::new();
            push_var(&mut m, "t", k);
            (c, m)
        });
        write_terms(f, terms)
    }
}

fn push_var(out: &mut String, var: &str, exp: u32) {
    match exp {
        0 => {}
        1 => out.push_str(var),
        e => out.push_str(&format!("{var}^{e}")),
    }
}

fn write_terms<'a>(f: &mut fmt::Formatter<'_>, terms: impl Iterator<Item = (&'a BigInt, String)>) -> fmt::Result {
    let mut first = true;
    for (c, mono) in terms {
        let mag = c.abs();
        let body = if mono.is_empty() {
            mag.to_string()
        } else if mag.is_one() {
            mono
        } else {
            format!("{mag}{mono}")
        };
        match (first, c.is_negative()) {
            (true, false) => write!(f, "{body}")?,
            (true, true) => write!(f, "-{body}")?,
            (false, false) => write!(f, " + {body}")?,
            (false, true) => write!(f, " - {body}")?,
        }
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

macro_rules! ring_ops {
    ($ty:ident, $key:ty, $mulkey:expr) => {
        impl Add for &$ty {
            type Output = $ty;
            fn add(self, rhs: &$ty) -> $ty {
                let mut out = self.clone();
                out += rhs;
                out
            }
        }
        impl Add for $ty {
            type Output = $ty;
            fn add(self, rhs: $ty) -> $ty {
                &self + &rhs
            }
        }
        impl AddAssign<&$ty> for $ty {
            fn add_assign(&mut self, rhs: &$ty) {
                for (k, v) in &rhs.terms {
                    let e = self.terms.entry(*k).or_default();
                    *e += v;
                    if e.is_zero() {
                        self.terms.remove(k);
                    }
                }
            }
        }
        impl Neg for &$ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                $ty {
                    terms: self.terms.iter().map(|(k, v)| (*k, -v)).collect(),
                }
            }
        }
        impl Sub for &$ty {
            type Output = $ty;
            fn sub(self, rhs: &$ty) -> $ty {
                self + &(-rhs)
            }
        }
        impl Mul for &$ty {
            type Output = $ty;
            fn mul(self, rhs: &$ty) -> $ty {
                let mut out = $ty::zero();
                for (a, u) in &self.terms {
                    for (b, v) in &rhs.terms {
                        let k: $key = $mulkey(*a, *b);
                        let e = out.terms.entry(k).or_default();
                        *e += u * v;
                    }
                }
                out.terms.retain(|_, v| !v.is_zero());
                out
            }
        }
        impl Mul for $ty {
            type Output = $ty;
            fn mul(self, rhs: $ty) -> $ty {
                &self * &rhs
            }
        }
        impl std::iter::Sum for $ty {
            fn sum<I: Iterator<Item = $ty>>(iter: I) -> $ty {
                let mut out = $ty::zero();
                for p in iter {
                    out += &p;
                }
                out
            }
        }
    };
}

ring_ops!(BivariatePoly, (u32, u32), |a: (u32, u32), b: (u32, u32)| (a.0 + b.0, a.1 + b.1));
ring_ops!(UniPoly, u32, |a: u32, b: u32| a + b);

#[cfg(test)]
mod tests {
    use super::*;

    fn b(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn display_order() {
        let mut p = BivariatePoly::zero();
        p.add_term(1, 0, b(3));
        p.add_term(0, 2, b(1));
        p.add_term(2, 0, b(1));
        p.add_term(0, 0, b(7));
        p.add_term(0, 1, b(4));
        assert_eq!(p.to_string(), "x^2 + y^2 + 3x + 4y + 7");
        let mut q = UniPoly::zero();
        q.add_term(2, b(1));
        q.add_term(1, b(-5));
        q.add_term(0, b(11));
        assert_eq!(q.to_string(), "t^2 - 5t + 11");
        assert_eq!(BivariatePoly::monomial(b(-3), 2, 1).to_string(), "-3x^2y");
        assert_eq!(BivariatePoly::zero().to_string(), "0");
    }

    #[test]
    fn shifted_expansion() {
        // (x-1)^2 + 3(x-1) + 4 + (y-1) = x^2 + x + y + 1
        let p = BivariatePoly::shifted_monomial(2, 0)
            + BivariatePoly::shifted_monomial(1, 0).scale(&b(3))
            + BivariatePoly::constant(b(4))
            + BivariatePoly::shifted_monomial(0, 1);
        assert_eq!(p.to_string(), "x^2 + x + y + 1");
        assert_eq!(p.eval(&b(2), &b(3)), b(4 + 2 + 3 + 1));
    }

    #[test]
    fn substitution() {
        // T = x^2 + x + y + 1 -> (1-t)^2 + (1-t) + 1 = t^2 - 3t + 3
        let mut p = BivariatePoly::zero();
        p.add_term(2, 0, b(1));
        p.add_term(1, 0, b(1));
        p.add_term(0, 1, b(1));
        p.add_term(0, 0, b(1));
        let chi = p.at_one_minus_t_zero();
        assert_eq!(chi.to_string(), "t^2 - 3t + 3");
        assert!(chi.alternates_in_sign());
        assert!(!(&UniPoly::t() + &UniPoly::one()).alternates_in_sign());
    }
}

//! Sparse Laurent polynomials in two variables `s` and `t`.
//!
//! Terms are kept in a sorted map from exponent pairs to nonzero
//! coefficients; the empty map is zero. The coefficient ring is generic so
//! the same arithmetic serves the exact integer case and the floating-point
//! fallback used for non-integral cosine values.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Coefficient ring for [`Laurent`]: exact integers or floats.
pub trait Coeff:
    Clone
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + fmt::Debug
{
}

impl Coeff for BigInt {}
impl Coeff for f64 {}
impl Coeff for i64 {}

/// Exponent pair `(a, b)` standing for the monomial `s^a t^b`.
pub type Expt = (i32, i32);

/// A Laurent polynomial `sum c * s^a t^b` with nonzero coefficients only.
#[derive(Clone, PartialEq)]
pub struct Laurent<C: Coeff> {
    terms: BTreeMap<Expt, C>,
}

/// Exact Laurent polynomial over the integers.
pub type LaurentPoly = Laurent<BigInt>;
/// Floating-point Laurent polynomial for non-small labels.
pub type LaurentPolyF = Laurent<f64>;

impl<C: Coeff> Laurent<C> {
    /// Single term `c * s^a t^b`; a zero coefficient collapses to zero.
    pub fn term(c: C, a: i32, b: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((a, b), c);
        }
        Laurent { terms }
    }

    pub fn constant(c: C) -> Self {
        Self::term(c, 0, 0)
    }

    /// The variable `s`.
    pub fn s() -> Self {
        Self::term(C::one(), 1, 0)
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::term(C::one(), 0, 1)
    }

    /// The product `st`, the Hecke parameter.
    pub fn st() -> Self {
        Self::term(C::one(), 1, 1)
    }

    pub fn coeff(&self, a: i32, b: i32) -> Option<&C> {
        self.terms.get(&(a, b))
    }

    /// Terms in sorted exponent order.
    pub fn iter(&self) -> impl Iterator<Item = (&Expt, &C)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn insert_add(&mut self, e: Expt, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&e) {
            None => {
                self.terms.insert(e, c);
            }
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    self.terms.insert(e, sum);
                }
            }
        }
    }

    /// Bar-conjugation: fixes coefficients, sends `s -> s^-1`, `t -> t^-1`.
    pub fn bar(&self) -> Self {
        let mut out = Self::zero();
        for (&(a, b), c) in &self.terms {
            out.insert_add((-a, -b), c.clone());
        }
        out
    }

    /// Evaluate at unit values `s, t in {1, -1}`. Safe for negative
    /// exponents because the values are their own inverses.
    pub fn eval_units(&self, s: i8, t: i8) -> C {
        let mut acc = C::zero();
        for (&(a, b), c) in &self.terms {
            let mut v = c.clone();
            if s < 0 && a % 2 != 0 {
                v = -v;
            }
            if t < 0 && b % 2 != 0 {
                v = -v;
            }
            acc = acc + v;
        }
        acc
    }

    pub fn term_keys(&self) -> Vec<Expt> {
        self.terms.keys().copied().collect()
    }
}

impl Laurent<f64> {
    /// True when every coefficient of `self - other` is within `tol`,
    /// compared over the union of the two term supports.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        let mut keys: Vec<Expt> = self.term_keys();
        keys.extend(other.term_keys());
        keys.sort_unstable();
        keys.dedup();
        keys.into_iter().all(|k| {
            let a = self.terms.get(&k).copied().unwrap_or(0.0);
            let b = other.terms.get(&k).copied().unwrap_or(0.0);
            (a - b).abs() <= tol
        })
    }
}

impl<C: Coeff> Zero for Laurent<C> {
    fn zero() -> Self {
        Laurent {
            terms: BTreeMap::new(),
        }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Coeff> One for Laurent<C> {
    fn one() -> Self {
        Self::term(C::one(), 0, 0)
    }

    fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(0, 0).map(C::is_one).unwrap_or(false)
    }
}

impl<C: Coeff> Add for Laurent<C> {
    type Output = Laurent<C>;
    fn add(mut self, rhs: Laurent<C>) -> Laurent<C> {
        for (e, c) in rhs.terms {
            self.insert_add(e, c);
        }
        self
    }
}

impl<C: Coeff> Add for &Laurent<C> {
    type Output = Laurent<C>;
    fn add(self, rhs: &Laurent<C>) -> Laurent<C> {
        self.clone() + rhs.clone()
    }
}

impl<C: Coeff> Sub for Laurent<C> {
    type Output = Laurent<C>;
    fn sub(self, rhs: Laurent<C>) -> Laurent<C> {
        self + (-rhs)
    }
}

impl<C: Coeff> Sub for &Laurent<C> {
    type Output = Laurent<C>;
    fn sub(self, rhs: &Laurent<C>) -> Laurent<C> {
        self.clone() - rhs.clone()
    }
}

impl<C: Coeff> Neg for Laurent<C> {
    type Output = Laurent<C>;
    fn neg(self) -> Laurent<C> {
        let mut out = Laurent::zero();
        for (e, c) in self.terms {
            out.insert_add(e, -c);
        }
        out
    }
}

impl<C: Coeff> Neg for &Laurent<C> {
    type Output = Laurent<C>;
    fn neg(self) -> Laurent<C> {
        -self.clone()
    }
}

impl<C: Coeff> Mul for &Laurent<C> {
    type Output = Laurent<C>;
    fn mul(self, rhs: &Laurent<C>) -> Laurent<C> {
        let mut out = Laurent::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.insert_add((a1 + a2, b1 + b2), c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<C: Coeff> Mul for Laurent<C> {
    type Output = Laurent<C>;
    fn mul(self, rhs: Laurent<C>) -> Laurent<C> {
        &self * &rhs
    }
}

impl<C: Coeff> fmt::Debug for Laurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render(self))
    }
}

impl<C: Coeff> fmt::Display for Laurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render(self))
    }
}

fn render<C: Coeff>(p: &Laurent<C>) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut parts = Vec::new();
    for (&(a, b), c) in p.iter() {
        let mut s = format!("{:?}", c);
        if a != 0 {
            s += &(if a == 1 { "*s".into() } else { format!("*s^{}", a) });
        }
        if b != 0 {
            s += &(if b == 1 { "*t".into() } else { format!("*t^{}", b) });
        }
        parts.push(s);
    }
    parts.join(" + ")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn bar_swaps_exponent_signs() {
        // bar(s + t^-1) = s^-1 + t
        let p = LaurentPoly::s() + LaurentPoly::term(int(1), 0, -1);
        let q = LaurentPoly::term(int(1), -1, 0) + LaurentPoly::t();
        assert_eq!(p.bar(), q);
        assert_eq!(p.bar().bar(), p);
    }

    #[test]
    fn mul_identity_and_signs() {
        let one = LaurentPoly::one();
        let p = one.clone() + LaurentPoly::st(); // 1 + st
        assert_eq!(&p * &one, p);
        // (-s) * (-t) = st
        let ms = LaurentPoly::term(int(-1), 1, 0);
        let mt = LaurentPoly::term(int(-1), 0, 1);
        assert_eq!(ms * mt, LaurentPoly::st());
    }

    #[test]
    fn eval_units_handles_negative_exponents() {
        // s * t^-1 at s=1, t=-1 -> -1
        let p = LaurentPoly::term(int(1), 1, -1);
        assert_eq!(p.eval_units(1, -1), int(-1));
        assert_eq!(p.eval_units(1, 1), int(1));
        assert_eq!(p.eval_units(-1, -1), int(1));
    }

    #[test]
    fn cancellation_drops_terms() {
        let p = LaurentPoly::s() - LaurentPoly::s();
        assert!(p.is_zero());
        assert_eq!(p.num_terms(), 0);
    }
}

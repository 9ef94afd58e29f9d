//! Commutative rings with unit that can carry vertex and edge weights.
//!
//! Everything in the crate is generic over [`Ring`], which is a blanket
//! trait over the `num-traits` identities plus `+` and `*`. Two instantiations
//! are used throughout: [`BigInt`] for counting and [`Poly2`] for generating
//! functions in an edge variable `x` and a vertex variable `y`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A commutative ring with unit.
///
/// Commutativity is not expressible in the type system; every
/// implementation used by the crate is commutative.
pub trait Ring:
    Clone + PartialEq + fmt::Debug + Send + Sync + Zero + One + Add<Output = Self> + Mul<Output = Self>
{
}

impl<T> Ring for T where
    T: Clone + PartialEq + fmt::Debug + Send + Sync + Zero + One + Add<Output = T> + Mul<Output = T>
{
}

/// Exponent pair `(x_degree, y_degree)` of a monomial `x^i y^j`.
pub type Monomial = (u32, u32);

/// Sparse polynomial in `x` and `y` with arbitrary-precision integer
/// coefficients. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly2 {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Poly2 {
    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1, 0)
    }

    /// The polynomial `y`.
    pub fn y() -> Self {
        Self::monomial(BigInt::one(), 0, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c.into(), 0, 0)
    }

    /// `c x^i y^j`.
    pub fn monomial(c: BigInt, x_degree: u32, y_degree: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((x_degree, y_degree), c);
        }
        Poly2 { terms }
    }

    /// Builds a polynomial from `(x_degree, y_degree, coefficient)` triples.
    /// Repeated monomials are summed and zero results dropped.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, u32, C)>,
        C: Into<BigInt>,
    {
        let mut p = Poly2::zero();
        for (i, j, c) in terms {
            p.add_term((i, j), c.into());
        }
        p
    }

    fn add_term(&mut self, key: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// Terms in ascending `(x_degree, y_degree)` order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (Monomial, &BigInt)> + '_ {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of `x^i y^j`; zero when absent.
    pub fn coeff(&self, x_degree: u32, y_degree: u32) -> BigInt {
        self.terms
            .get(&(x_degree, y_degree))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Constant value if the polynomial has no `x` or `y` terms.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&(0, 0)).cloned(),
            _ => None,
        }
    }

    pub fn x_degree(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.0).max()
    }

    pub fn y_degree(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.1).max()
    }

    /// Value at `x = 1, y = 1`.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Substitutes `x = 1`, leaving a polynomial in `y`.
    pub fn at_x_one(&self) -> Poly2 {
        Poly2::from_terms(self.terms.iter().map(|(&(_, j), c)| (0, j, c.clone())))
    }

    /// Substitutes `y = 1`, leaving a polynomial in `x`.
    pub fn at_y_one(&self) -> Poly2 {
        Poly2::from_terms(self.terms.iter().map(|(&(i, _), c)| (i, 0, c.clone())))
    }

    pub fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        self.terms
            .iter()
            .map(|(&(i, j), c)| c * num_traits::pow(x.clone(), i as usize) * num_traits::pow(y.clone(), j as usize))
            .sum()
    }
}

impl From<BigInt> for Poly2 {
    fn from(c: BigInt) -> Self {
        Poly2::constant(c)
    }
}

impl From<i64> for Poly2 {
    fn from(c: i64) -> Self {
        Poly2::constant(c)
    }
}

impl Zero for Poly2 {
    fn zero() -> Self {
        Poly2 { terms: BTreeMap::new() }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for Poly2 {
    fn one() -> Self {
        Poly2::constant(1)
    }
}

impl Add for Poly2 {
    type Output = Poly2;

    fn add(mut self, rhs: Poly2) -> Poly2 {
        let (mut big, small) = if self.terms.len() >= rhs.terms.len() {
            (std::mem::take(&mut self), rhs)
        } else {
            (rhs, std::mem::take(&mut self))
        };
        for (k, c) in small.terms {
            big.add_term(k, c);
        }
        big
    }
}

impl Neg for Poly2 {
    type Output = Poly2;

    fn neg(mut self) -> Poly2 {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Sub for Poly2 {
    type Output = Poly2;

    fn sub(self, rhs: Poly2) -> Poly2 {
        self + (-rhs)
    }
}

impl Mul for Poly2 {
    type Output = Poly2;

    fn mul(self, rhs: Poly2) -> Poly2 {
        &self * &rhs
    }
}

impl<'a> Mul<&'a Poly2> for &'a Poly2 {
    type Output = Poly2;

    fn mul(self, rhs: &'a Poly2) -> Poly2 {
        // Fast paths for constants keep unit-weight runs cheap.
        if let Some(c) = self.as_constant_ref() {
            return rhs.scale(c);
        }
        if let Some(c) = rhs.as_constant_ref() {
            return self.scale(c);
        }
        let mut out: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                *out.entry((i1 + i2, j1 + j2)).or_insert_with(BigInt::zero) += c1 * c2;
            }
        }
        out.retain(|_, c| !c.is_zero());
        Poly2 { terms: out }
    }
}

impl Poly2 {
    fn as_constant_ref(&self) -> Option<&BigInt> {
        if self.terms.len() == 1 {
            self.terms.get(&(0, 0))
        } else {
            None
        }
    }

    fn scale(&self, c: &BigInt) -> Poly2 {
        if c.is_zero() {
            return Poly2::zero();
        }
        Poly2 {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }
}

impl fmt::Debug for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly2({self})")
    }
}

/// Prints terms in descending `x` degree (then descending `y` degree),
/// e.g. `x^5 + 4x^4 + 6x^3 + 6x^2 + 5x + 6`.
impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (&(i, j), c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (n, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let is_const = i == 0 && j == 0;
            if is_const || !abs.is_one() {
                write!(f, "{abs}")?;
            }
            for (var, deg) in [("x", i), ("y", j)] {
                match deg {
                    0 => {}
                    1 => f.write_str(var)?,
                    d => write!(f, "{var}^{d}")?,
                }
            }
        }
        Ok(())
    }
}

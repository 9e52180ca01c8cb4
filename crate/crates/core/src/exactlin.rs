//! Exact rational scalars and sparse formal linear combinations.
//!
//! Every algebra element in this crate (of `H_Pack`, `NSym`, `QSym`, ...) is a
//! [`LinComb`] over some basis key type. Coefficients are [`Rational`]s, which
//! are always stored reduced with a positive denominator, so equality of two
//! combinations is structural.

use std::collections::btree_map;
use std::collections::BTreeMap;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Arbitrary precision rational number, always in lowest terms.
pub type Rational = BigRational;

/// Shorthand for the rational `n/d`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for the integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p"` or `"p/q"` (optional leading sign on `p`).
pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim();
    let bad = || Error::parse(t, 0, "expected a rational of the form p or p/q");
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::parse(t, 0, "zero denominator"));
    }
    Ok(Rational::new(num, den))
}

/// A basis key: totally ordered, printable in the canonical text form.
pub trait Basis: Ord + Clone + fmt::Debug {
    fn fmt_basis(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result;
}

impl<A: Basis, B: Basis> Basis for (A, B) {
    fn fmt_basis(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt_basis(f)?;
        f.write_str(" ⊗ ")?;
        self.1.fmt_basis(f)
    }
}

impl<A: Basis, B: Basis, C: Basis> Basis for (A, B, C) {
    fn fmt_basis(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt_basis(f)?;
        f.write_str(" ⊗ ")?;
        self.1.fmt_basis(f)?;
        f.write_str(" ⊗ ")?;
        self.2.fmt_basis(f)
    }
}

/// Two-fold tensor key, as produced by coproducts.
pub type Tensor2<K> = (K, K);
/// Three-fold tensor key, as produced by iterated coproducts.
pub type Tensor3<K> = (K, K, K);

/// A finite formal sum `Σ c_k · k` with nonzero rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, Rational>,
}

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The basis element `key` with coefficient 1.
    pub fn basis(key: K) -> Self {
        Self::term(key, Rational::one())
    }

    pub fn term(key: K, coeff: Rational) -> Self {
        let mut out = Self::zero();
        out.add_term(key, coeff);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of (nonzero) terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &K) -> Rational {
        self.terms.get(key).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn contains(&self, key: &K) -> bool {
        self.terms.contains_key(key)
    }

    /// Terms in canonical key order.
    pub fn iter(&self) -> btree_map::Iter<'_, K, Rational> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, Rational> {
        self.terms.keys()
    }

    /// Adds `coeff · key` in place, dropping the entry if it cancels.
    pub fn add_term(&mut self, key: K, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Adds `scale · other` in place.
    pub fn add_scaled(&mut self, scale: &Rational, other: &LinComb<K>) {
        if scale.is_zero() {
            return;
        }
        for (k, c) in other.iter() {
            self.add_term(k.clone(), scale * c);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let terms = self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect();
        Self { terms }
    }

    /// Linear extension of a key-to-key map.
    pub fn map_keys<K2: Ord + Clone>(&self, mut f: impl FnMut(&K) -> K2) -> LinComb<K2> {
        let mut out = LinComb::zero();
        for (k, c) in self.iter() {
            out.add_term(f(k), c.clone());
        }
        out
    }

    /// Linear extension of a map from keys to combinations.
    pub fn flat_map<K2: Ord + Clone>(&self, mut f: impl FnMut(&K) -> LinComb<K2>) -> LinComb<K2> {
        let mut out = LinComb::zero();
        for (k, c) in self.iter() {
            out.add_scaled(c, &f(k));
        }
        out
    }

    /// Fallible [`LinComb::flat_map`].
    pub fn try_flat_map<K2: Ord + Clone, E>(
        &self,
        mut f: impl FnMut(&K) -> std::result::Result<LinComb<K2>, E>,
    ) -> std::result::Result<LinComb<K2>, E> {
        let mut out = LinComb::zero();
        for (k, c) in self.iter() {
            out.add_scaled(c, &f(k)?);
        }
        Ok(out)
    }

    /// Linear functional given by its values on basis keys.
    pub fn eval(&self, mut f: impl FnMut(&K) -> Rational) -> Rational {
        self.iter().map(|(k, c)| c * f(k)).sum()
    }

    /// True when no stored coefficient is zero.
    pub fn is_normalized(&self) -> bool {
        self.terms.values().all(|c| !c.is_zero())
    }
}

/// Bilinear extension of `f` defined on pairs of basis keys.
pub fn bilinear<A, B, C>(
    a: &LinComb<A>,
    b: &LinComb<B>,
    mut f: impl FnMut(&A, &B) -> LinComb<C>,
) -> LinComb<C>
where
    A: Ord + Clone,
    B: Ord + Clone,
    C: Ord + Clone,
{
    let mut out = LinComb::zero();
    for (ka, ca) in a.iter() {
        for (kb, cb) in b.iter() {
            out.add_scaled(&(ca * cb), &f(ka, kb));
        }
    }
    out
}

/// Fallible [`bilinear`].
pub fn try_bilinear<A, B, C, E>(
    a: &LinComb<A>,
    b: &LinComb<B>,
    mut f: impl FnMut(&A, &B) -> std::result::Result<LinComb<C>, E>,
) -> std::result::Result<LinComb<C>, E>
where
    A: Ord + Clone,
    B: Ord + Clone,
    C: Ord + Clone,
{
    let mut out = LinComb::zero();
    for (ka, ca) in a.iter() {
        for (kb, cb) in b.iter() {
            out.add_scaled(&(ca * cb), &f(ka, kb)?);
        }
    }
    Ok(out)
}

/// `a ⊗ b`; the coefficient of `(k1, k2)` is `a[k1]·b[k2]`.
pub fn tensor<A, B>(a: &LinComb<A>, b: &LinComb<B>) -> LinComb<(A, B)>
where
    A: Ord + Clone,
    B: Ord + Clone,
{
    bilinear(a, b, |x, y| LinComb::basis((x.clone(), y.clone())))
}

/// The delta pairing `⟨k, k'⟩ = δ_{k,k'}` extended bilinearly.
pub fn pairing<K: Ord + Clone>(a: &LinComb<K>, b: &LinComb<K>) -> Rational {
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    small
        .iter()
        .filter_map(|(k, c)| large.terms.get(k).map(|d| c * d))
        .sum()
}

/// Applies `f` to each leg of a two-fold tensor, `(f ⊗ g)` extended linearly.
pub fn map_tensor2<A, B, C, D>(
    t: &LinComb<(A, B)>,
    mut f: impl FnMut(&A) -> LinComb<C>,
    mut g: impl FnMut(&B) -> LinComb<D>,
) -> LinComb<(C, D)>
where
    A: Ord + Clone,
    B: Ord + Clone,
    C: Ord + Clone,
    D: Ord + Clone,
{
    t.flat_map(|(a, b)| tensor(&f(a), &g(b)))
}

impl<K: Ord> IntoIterator for LinComb<K> {
    type Item = (K, Rational);
    type IntoIter = btree_map::IntoIter<K, Rational>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

impl<'a, K: Ord> IntoIterator for &'a LinComb<K> {
    type Item = (&'a K, &'a Rational);
    type IntoIter = btree_map::Iter<'a, K, Rational>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<K: Ord + Clone> FromIterator<(K, Rational)> for LinComb<K> {
    fn from_iter<I: IntoIterator<Item = (K, Rational)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

impl<K: Ord + Clone> AddAssign<&LinComb<K>> for LinComb<K> {
    fn add_assign(&mut self, rhs: &LinComb<K>) {
        for (k, c) in rhs.iter() {
            self.add_term(k.clone(), c.clone());
        }
    }
}

impl<K: Ord + Clone> AddAssign for LinComb<K> {
    fn add_assign(&mut self, rhs: LinComb<K>) {
        for (k, c) in rhs {
            self.add_term(k, c);
        }
    }
}

impl<K: Ord + Clone> SubAssign<&LinComb<K>> for LinComb<K> {
    fn sub_assign(&mut self, rhs: &LinComb<K>) {
        for (k, c) in rhs.iter() {
            self.add_term(k.clone(), -c);
        }
    }
}

impl<K: Ord + Clone> Add for LinComb<K> {
    type Output = LinComb<K>;
    fn add(mut self, rhs: LinComb<K>) -> LinComb<K> {
        self += rhs;
        self
    }
}

impl<K: Ord + Clone> Add for &LinComb<K> {
    type Output = LinComb<K>;
    fn add(self, rhs: &LinComb<K>) -> LinComb<K> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<K: Ord + Clone> Sub for LinComb<K> {
    type Output = LinComb<K>;
    fn sub(mut self, rhs: LinComb<K>) -> LinComb<K> {
        self -= &rhs;
        self
    }
}

impl<K: Ord + Clone> Sub for &LinComb<K> {
    type Output = LinComb<K>;
    fn sub(self, rhs: &LinComb<K>) -> LinComb<K> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<K: Ord + Clone> Neg for LinComb<K> {
    type Output = LinComb<K>;
    fn neg(self) -> LinComb<K> {
        let terms = self.terms.into_iter().map(|(k, c)| (k, -c)).collect();
        LinComb { terms }
    }
}

impl<K: Ord + Clone> Neg for &LinComb<K> {
    type Output = LinComb<K>;
    fn neg(self) -> LinComb<K> {
        -self.clone()
    }
}

impl<K: Ord + Clone> Sum for LinComb<K> {
    fn sum<I: Iterator<Item = LinComb<K>>>(iter: I) -> Self {
        iter.fold(LinComb::zero(), |acc, x| acc + x)
    }
}

fn write_coeff_abs(f: &mut fmt::Formatter<'_>, c: &Rational) -> fmt::Result {
    let a = c.abs();
    if a.is_one() {
        Ok(())
    } else {
        write!(f, "{}*", a)
    }
}

impl<K: Basis> fmt::Display for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, false) => {}
                (0, true) => f.write_str("-")?,
                (_, false) => f.write_str(" + ")?,
                (_, true) => f.write_str(" - ")?,
            }
            write_coeff_abs(f, c)?;
            k.fmt_basis(f)?;
        }
        Ok(())
    }
}

/// `{"terms": [{"coeff": "p/q", "key": …}, …]}` in canonical key order.
impl<K: Ord + Serialize> Serialize for LinComb<K> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a, K> {
            coeff: String,
            key: &'a K,
        }
        #[derive(Serialize)]
        struct Terms<'a, K> {
            terms: Vec<Term<'a, K>>,
        }
        Terms {
            terms: self
                .terms
                .iter()
                .map(|(key, c)| Term {
                    coeff: c.to_string(),
                    key,
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<K: Ord + fmt::Debug> fmt::Debug for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.terms.iter().map(|(k, c)| (k, c.to_string())))
            .finish()
    }
}

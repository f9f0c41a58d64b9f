//! Sparse Laurent monomials and polynomials in the variables `Y[i,l]`.
//!
//! A [`Monomial`] is kept as a vector of `(variable, exponent)` pairs sorted
//! by `(node, shift)` with no zero exponents, so equality, ordering and
//! hashing are plain structural operations. A [`LaurentPolynomial`] maps
//! monomials to nonzero integer coefficients.
//!
//! The text form produced by `Display` and accepted by `FromStr` is
//!
//! ```text
//! monomial := "1" | factor (" " factor)*
//! factor   := "Y[" node "," shift "]" ( "^" exponent )?
//! ```
//!
//! where the exponent is omitted exactly when it equals 1.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::cartan::DynkinD;
use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct YVar {
    pub node: usize,
    pub shift: i64,
}

impl YVar {
    pub const fn new(node: usize, shift: i64) -> Self {
        Self { node, shift }
    }
}

impl fmt::Display for YVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Y[{},{}]", self.node, self.shift)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    factors: Vec<(YVar, i32)>,
}

impl Monomial {
    /// The empty monomial.
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(node: usize, shift: i64) -> Self {
        Self {
            factors: vec![(YVar::new(node, shift), 1)],
        }
    }

    /// Builds a monomial from arbitrary factors; repeated variables are
    /// combined and zero exponents dropped.
    pub fn from_factors<I>(factors: I) -> Self
    where
        I: IntoIterator<Item = (YVar, i32)>,
    {
        let mut acc: BTreeMap<YVar, i32> = BTreeMap::new();
        for (v, e) in factors {
            *acc.entry(v).or_insert(0) += e;
        }
        Self {
            factors: acc.into_iter().filter(|&(_, e)| e != 0).collect(),
        }
    }

    #[inline]
    pub fn factors(&self) -> &[(YVar, i32)] {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn exponent(&self, var: YVar) -> i32 {
        match self.factors.binary_search_by(|(v, _)| v.cmp(&var)) {
            Ok(idx) => self.factors[idx].1,
            Err(_) => 0,
        }
    }

    pub fn inverse(&self) -> Self {
        Self {
            factors: self.factors.iter().map(|&(v, e)| (v, -e)).collect(),
        }
    }

    pub fn pow(&self, e: i32) -> Self {
        if e == 0 {
            return Self::one();
        }
        Self {
            factors: self.factors.iter().map(|&(v, x)| (v, x * e)).collect(),
        }
    }

    /// All exponents nonnegative. The empty monomial is dominant.
    pub fn is_dominant(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e > 0)
    }

    /// All exponents nonpositive. The empty monomial is anti-dominant.
    pub fn is_antidominant(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e < 0)
    }

    /// Exchanges `Y[n-1,l]` and `Y[n,l]` for every `l`.
    pub fn swap_spin_nodes(&self, rank: usize) -> Self {
        let swapped = self.factors.iter().map(|&(v, e)| {
            let node = if v.node == rank {
                rank - 1
            } else if v.node + 1 == rank {
                rank
            } else {
                v.node
            };
            (YVar::new(node, v.shift), e)
        });
        Self::from_factors(swapped)
    }

    /// Adds `delta` to every shift.
    pub fn shifted(&self, delta: i64) -> Self {
        Self {
            factors: self
                .factors
                .iter()
                .map(|&(v, e)| (YVar::new(v.node, v.shift + delta), e))
                .collect(),
        }
    }

    /// Smallest and largest shift occurring, if any.
    pub fn shift_range(&self) -> Option<(i64, i64)> {
        let mut it = self.factors.iter().map(|(v, _)| v.shift);
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), s| (lo.min(s), hi.max(s))))
    }

    pub fn max_node(&self) -> usize {
        self.factors.iter().map(|(v, _)| v.node).max().unwrap_or(0)
    }

    fn merge_with(&self, other: &Self, sign: i32) -> Self {
        let (a, b) = (&self.factors, &other.factors);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((b[j].0, sign * b[j].1));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let e = a[i].1 + sign * b[j].1;
                    if e != 0 {
                        out.push((a[i].0, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend(b[j..].iter().map(|&(v, e)| (v, sign * e)));
        Self { factors: out }
    }

    /// `self / other`.
    pub fn div(&self, other: &Self) -> Self {
        self.merge_with(other, -1)
    }
}

impl Mul for &Monomial {
    type Output = Monomial;

    fn mul(self, rhs: &Monomial) -> Monomial {
        self.merge_with(rhs, 1)
    }
}

impl Mul for Monomial {
    type Output = Monomial;

    fn mul(self, rhs: Monomial) -> Monomial {
        &self * &rhs
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (idx, (v, e)) in self.factors.iter().enumerate() {
            if idx > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
            if *e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Monomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| Error::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let trimmed = s.trim();
        if trimmed == "1" {
            return Ok(Self::one());
        }
        if trimmed.is_empty() {
            return Err(err("empty input"));
        }
        let mut factors = Vec::new();
        for token in trimmed.split_whitespace() {
            let body = token
                .strip_prefix("Y[")
                .ok_or_else(|| err("factor must start with Y["))?;
            let (inside, rest) = body
                .split_once(']')
                .ok_or_else(|| err("missing closing bracket"))?;
            let (node, shift) = inside
                .split_once(',')
                .ok_or_else(|| err("expected node,shift"))?;
            let node: usize = node.trim().parse().map_err(|_| err("bad node"))?;
            let shift: i64 = shift.trim().parse().map_err(|_| err("bad shift"))?;
            let exp: i32 = if rest.is_empty() {
                1
            } else {
                rest.strip_prefix('^')
                    .ok_or_else(|| err("expected ^ after factor"))?
                    .parse()
                    .map_err(|_| err("bad exponent"))?
            };
            factors.push((YVar::new(node, shift), exp));
        }
        Ok(Self::from_factors(factors))
    }
}

/// Finds `e >= 0` with `m = reference * prod A[j,l]^-e[j,l]`, the A-shifts
/// restricted to `window`.
///
/// The linear map from A-exponents to Y-exponents is injective on a bounded
/// window: the topmost Y-shift `l+1` touched by `A[j,l]` is hit by no
/// A-variable of lower shift, so the exponents are peeled off from the top
/// shift downwards. Returns `None` when the unique solution is not
/// nonnegative or leaves a residue.
pub fn factor_over_a(
    reference: &Monomial,
    m: &Monomial,
    d: &DynkinD,
    window: std::ops::RangeInclusive<i64>,
) -> Option<BTreeMap<(usize, i64), u32>> {
    // Target: sum_e e * exps(A) = exps(reference / m).
    let mut residual: BTreeMap<YVar, i64> = reference
        .div(m)
        .factors()
        .iter()
        .map(|&(v, e)| (v, e as i64))
        .collect();
    if residual.keys().any(|v| v.node == 0 || v.node > d.rank()) {
        return None;
    }
    let (lo, hi) = (*window.start(), *window.end());
    let mut out = BTreeMap::new();
    for shift in (lo..=hi).rev() {
        for node in d.nodes() {
            let top = YVar::new(node, shift + 1);
            let e = residual.get(&top).copied().unwrap_or(0);
            if e == 0 {
                continue;
            }
            if e < 0 {
                return None;
            }
            let a = d.a_monomial(node, shift).ok()?;
            for &(v, x) in a.factors() {
                let slot = residual.entry(v).or_insert(0);
                *slot -= e * x as i64;
                if *slot == 0 {
                    residual.remove(&v);
                }
            }
            out.insert((node, shift), e as u32);
        }
    }
    residual.is_empty().then_some(out)
}

/// The A-shift window `[min - n, max + n]` over the shifts of both inputs.
pub fn default_window(
    reference: &Monomial,
    m: &Monomial,
    rank: usize,
) -> std::ops::RangeInclusive<i64> {
    let ranges = [reference.shift_range(), m.shift_range()];
    let lo = ranges.iter().flatten().map(|r| r.0).min().unwrap_or(0);
    let hi = ranges.iter().flatten().map(|r| r.1).max().unwrap_or(0);
    (lo - rank as i64)..=(hi + rank as i64)
}

/// Re-expands `reference * prod A^-e`.
pub fn expand_factorization(
    reference: &Monomial,
    exps: &BTreeMap<(usize, i64), u32>,
    d: &DynkinD,
) -> crate::Result<Monomial> {
    let mut acc = reference.clone();
    for (&(node, shift), &e) in exps {
        acc = &acc * &d.a_monomial(node, shift)?.pow(-(e as i32));
    }
    Ok(acc)
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LaurentPolynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from(Monomial::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of distinct monomials.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// Removes a monomial, returning its coefficient.
    pub fn remove(&mut self, m: &Monomial) -> Option<BigInt> {
        self.terms.remove(m)
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Self {
            terms: self.terms.iter().map(|(k, c)| (k * m, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, x)| (k.clone(), x * c)).collect(),
        }
    }

    /// Applies `f` to every monomial, recombining collisions.
    pub fn map_monomials<F>(&self, f: F) -> Self
    where
        F: Fn(&Monomial) -> Monomial,
    {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(f(m), c.clone());
        }
        out
    }

    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn all_coefficients_positive(&self) -> bool {
        self.terms.values().all(|c| c.is_positive())
    }

    /// `(coefficient, monomial)` pairs sorted by the canonical monomial string.
    pub fn sorted_terms(&self) -> Vec<(BigInt, String)> {
        let mut out: Vec<_> = self
            .terms
            .iter()
            .map(|(m, c)| (c.clone(), m.to_string()))
            .collect();
        out.sort_by(|a, b| a.1.cmp(&b.1));
        out
    }
}

impl From<Monomial> for LaurentPolynomial {
    fn from(m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(m, BigInt::one());
        Self { terms }
    }
}

impl FromIterator<(Monomial, BigInt)> for LaurentPolynomial {
    fn from_iter<I: IntoIterator<Item = (Monomial, BigInt)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (m, c) in iter {
            out.add_term(m, c);
        }
        out
    }
}

impl AddAssign<&LaurentPolynomial> for LaurentPolynomial {
    fn add_assign(&mut self, rhs: &LaurentPolynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl AddAssign for LaurentPolynomial {
    fn add_assign(&mut self, rhs: LaurentPolynomial) {
        if self.terms.len() < rhs.terms.len() {
            let lhs = std::mem::replace(self, rhs);
            *self += lhs;
            return;
        }
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a * b, x * y);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (c, m)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (idx, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            f.write_str(&m)?;
        }
        Ok(())
    }
}

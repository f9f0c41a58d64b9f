//! q-characters of fundamental modules and the counting formulas that go
//! with them.

use num_bigint::{BigInt, BigUint};
use num_traits::One;
use rayon::prelude::*;

use crate::cartan::{binomial, DynkinD};
use crate::error::{Error, Result};
use crate::laurent::{
    default_window, expand_factorization, factor_over_a, LaurentPolynomial, Monomial,
};
use crate::paths::Family;
use crate::weights::weight;

/// Terms with their coefficients, as listed by a dominance report.
pub type TermList = [(Monomial, BigInt)];

/// `chi_q(L(Y[node,shift]))` for type D of the given rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QCharacter {
    rank: usize,
    node: usize,
    shift: i64,
    terms: LaurentPolynomial,
    path_count: u64,
    dominant: Vec<(Monomial, BigInt)>,
    antidominant: Vec<(Monomial, BigInt)>,
}

impl QCharacter {
    /// Wraps an already computed polynomial, e.g. one read back from disk.
    pub fn from_terms(
        rank: usize,
        node: usize,
        shift: i64,
        terms: LaurentPolynomial,
        path_count: u64,
    ) -> Self {
        let pick = |f: fn(&Monomial) -> bool| -> Vec<(Monomial, BigInt)> {
            terms
                .terms()
                .filter(|(m, _)| f(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect()
        };
        let dominant = pick(Monomial::is_dominant);
        let antidominant = pick(Monomial::is_antidominant);
        Self {
            rank,
            node,
            shift,
            terms,
            path_count,
            dominant,
            antidominant,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn node(&self) -> usize {
        self.node
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn terms(&self) -> &LaurentPolynomial {
        &self.terms
    }

    pub fn into_terms(self) -> LaurentPolynomial {
        self.terms
    }

    /// Number of paths the character was summed over.
    pub fn path_count(&self) -> u64 {
        self.path_count
    }

    /// Sum of coefficients.
    pub fn dimension(&self) -> BigInt {
        self.terms.coefficient_sum()
    }

    /// Dominant and anti-dominant terms with their coefficients.
    pub fn dominance_report(&self) -> (&TermList, &TermList) {
        (&self.dominant, &self.antidominant)
    }

    /// The highest monomial `Y[i,k]`.
    pub fn highest_monomial(&self) -> Monomial {
        Monomial::var(self.node, self.shift)
    }

    /// The expected lowest monomial `Y[i*, 2n-2+k]^-1`.
    pub fn lowest_monomial(&self) -> Result<Monomial> {
        let d = DynkinD::new(self.rank)?;
        let dual = d.dual_node(self.node)?;
        Ok(Monomial::var(dual, 2 * self.rank as i64 - 2 + self.shift).inverse())
    }

    /// True when the only dominant term is the highest monomial and the only
    /// anti-dominant term is the lowest one, each with coefficient 1.
    pub fn extremes_are_unique(&self) -> bool {
        let one = BigInt::one();
        let lowest = match self.lowest_monomial() {
            Ok(m) => m,
            Err(_) => return false,
        };
        self.dominant == [(self.highest_monomial(), one.clone())]
            && self.antidominant == [(lowest, one)]
    }

    /// Terms that do not factor as `Y[i,k] prod A^-e` with `e >= 0`, or whose
    /// factorization fails to re-expand to the term.
    pub fn cone_violations(&self) -> Vec<Monomial> {
        let d = DynkinD::new(self.rank).expect("rank of a built character");
        let top = self.highest_monomial();
        let terms: Vec<&Monomial> = self.terms.monomials().collect();
        terms
            .into_par_iter()
            .filter(|m| {
                let window = default_window(&top, m, self.rank);
                match factor_over_a(&top, m, &d, window) {
                    Some(e) => expand_factorization(&top, &e, &d).ok().as_ref() != Some(*m),
                    None => true,
                }
            })
            .cloned()
            .collect()
    }
}

fn family_for(rank: usize, node: usize, shift: i64) -> Result<Family> {
    let d = DynkinD::new(rank)?;
    d.check_node(node)?;
    let path_node = if node == rank { rank - 1 } else { node };
    Family::new(rank, path_node, shift).map_err(|e| match e {
        Error::Parity { .. } => Error::Parity { node, shift },
        other => other,
    })
}

/// Checks `(n, i, k)` without computing anything.
pub fn validate(rank: usize, node: usize, shift: i64) -> Result<()> {
    family_for(rank, node, shift).map(|_| ())
}

/// Sum of path weights over `P[i,k]`; node `n` is obtained from node `n-1`
/// by exchanging the spin variables.
pub fn q_character(rank: usize, node: usize, shift: i64) -> Result<QCharacter> {
    let family = family_for(rank, node, shift)?;
    let paths = family.enumerate();
    let path_count = paths.len() as u64;
    // BTreeMap accumulation makes the merge order irrelevant.
    let mut terms = paths
        .par_iter()
        .fold(LaurentPolynomial::zero, |mut acc, p| {
            acc += weight(p);
            acc
        })
        .reduce(LaurentPolynomial::zero, |mut a, b| {
            a += b;
            a
        });
    if node == rank {
        terms = terms.map_monomials(|m| m.swap_spin_nodes(rank));
    }
    Ok(QCharacter::from_terms(rank, node, shift, terms, path_count))
}

/// Total number of weight terms over a family, streamed.
pub fn term_count(family: &Family) -> u64 {
    family
        .iter()
        .par_bridge()
        .map(|p| weight(&p).len() as u64)
        .sum()
}

fn check(rank: usize, node: usize) -> Result<DynkinD> {
    let d = DynkinD::new(rank)?;
    d.check_node(node)?;
    Ok(d)
}

/// Closed form for the number of paths in `P[i,0]`.
pub fn path_count_formula(rank: usize, node: usize) -> Result<BigUint> {
    let d = check(rank, node)?;
    if d.is_spin_node(node) {
        return Ok(BigUint::one() << (rank - 1));
    }
    let m = rank as u64 - 1;
    let i = node as u64;
    Ok((0..=i)
        .flat_map(|j| (0..=i - j).map(move |l| binomial(m, j) * binomial(m, l)))
        .sum())
}

/// Closed form for the number of monomials, with multiplicity, over `P[i,0]`.
pub fn monomial_count_formula(rank: usize, node: usize) -> Result<BigUint> {
    let d = check(rank, node)?;
    if d.is_spin_node(node) {
        return Ok(BigUint::one() << (rank - 1));
    }
    let m = rank as u64 - 1;
    let i = node as u64;
    // inner sum runs to i - j - 1 and is empty when that is negative
    let double: BigUint = (0..i)
        .flat_map(|j| (0..i - j).map(move |l| binomial(m, j) * binomial(m, l)))
        .sum();
    Ok(binomial(2 * m, i) + double * 2u32)
}

/// Smallest nonnegative shift of valid parity for `(n, i)`.
pub fn default_shift(rank: usize, node: usize) -> i64 {
    let path_node = if node == rank { rank - 1 } else { node };
    ((path_node as i64) + 1) % 2
}

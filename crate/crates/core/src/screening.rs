//! Screening operators and their kernels.
//!
//! `S_j` sends a Laurent polynomial to the module spanned by symbols
//! `S[j,l]` subject to `S[j,l+2] = A[j,l+1] S[j,l]`. A polynomial lies in
//! the image of the q-character map exactly when every `S_j` kills it, which
//! makes the kernels a check that knows nothing about paths.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::cartan::DynkinD;
use crate::error::Result;
use crate::laurent::{LaurentPolynomial, Monomial};
use crate::qchar::QCharacter;

/// An element of the quotient module attached to node `j`, stored as a map
/// from basis shift to coefficient polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScreeningElement {
    dynkin: DynkinD,
    node: usize,
    comps: BTreeMap<i64, LaurentPolynomial>,
}

impl ScreeningElement {
    pub fn zero(dynkin: DynkinD, node: usize) -> Self {
        Self {
            dynkin,
            node,
            comps: BTreeMap::new(),
        }
    }

    pub fn node(&self) -> usize {
        self.node
    }

    pub fn components(&self) -> &BTreeMap<i64, LaurentPolynomial> {
        &self.comps
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    /// Adds `p` to the component at `S[j,shift]`.
    pub fn add_component(&mut self, shift: i64, p: LaurentPolynomial) {
        let slot = self
            .comps
            .entry(shift)
            .or_insert_with(LaurentPolynomial::zero);
        *slot += p;
        if slot.is_zero() {
            self.comps.remove(&shift);
        }
    }

    fn add_term(&mut self, shift: i64, m: Monomial, c: BigInt) {
        let slot = self
            .comps
            .entry(shift)
            .or_insert_with(LaurentPolynomial::zero);
        slot.add_term(m, c);
        if slot.is_zero() {
            self.comps.remove(&shift);
        }
    }

    /// Componentwise sum.
    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&l, p) in &other.comps {
            out.add_component(l, p.clone());
        }
        out
    }

    fn a(&self, shift: i64) -> Monomial {
        self.dynkin
            .a_monomial(self.node, shift)
            .expect("node checked at construction")
    }

    fn minima(&self) -> BTreeMap<i64, i64> {
        let mut out = BTreeMap::new();
        for &l in self.comps.keys() {
            out.entry(l.rem_euclid(2)).or_insert(l);
        }
        out
    }

    /// Pushes every component down to the smallest shift of its parity,
    /// one step `l -> l-2` at a time, largest shift first.
    pub fn reduce(&self) -> Self {
        let minima = self.minima();
        let mut comps = self.comps.clone();
        let mut out = Self::zero(self.dynkin, self.node);
        while let Some((l, p)) = comps.pop_last() {
            let floor = minima[&l.rem_euclid(2)];
            if l == floor {
                out.add_component(l, p);
                continue;
            }
            let moved = p.mul_monomial(&self.a(l - 1));
            let slot = comps.entry(l - 2).or_insert_with(LaurentPolynomial::zero);
            *slot += moved;
        }
        out
    }

    /// Same quotient as [`reduce`](Self::reduce), but each component is
    /// carried to its floor in one multiplication, smallest shift first.
    pub fn reduce_direct(&self) -> Self {
        let minima = self.minima();
        let mut out = Self::zero(self.dynkin, self.node);
        for (&l, p) in &self.comps {
            let floor = minima[&l.rem_euclid(2)];
            let mut factor = Monomial::one();
            let mut t = l;
            while t > floor {
                factor = &factor * &self.a(t - 1);
                t -= 2;
            }
            out.add_component(floor, p.mul_monomial(&factor));
        }
        out
    }
}

impl fmt::Display for ScreeningElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.comps.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .comps
            .iter()
            .map(|(l, p)| format!("S[{},{}]: {}", self.node, l, p))
            .collect();
        f.write_str(&parts.join("; "))
    }
}

/// `S~_j(f)` by the Leibniz rule: each factor `Y[j,l]^u` of a term `c m`
/// contributes `c u m` at `S[j,l]`.
pub fn apply_screening_raw(
    dynkin: &DynkinD,
    node: usize,
    f: &LaurentPolynomial,
) -> Result<ScreeningElement> {
    dynkin.check_node(node)?;
    let mut out = ScreeningElement::zero(*dynkin, node);
    for (m, c) in f.terms() {
        for (v, u) in m.factors() {
            if v.node == node {
                out.add_term(v.shift, m.clone(), c * BigInt::from(*u));
            }
        }
    }
    Ok(out)
}

/// `S_j(f)` in the quotient.
pub fn apply_screening(
    dynkin: &DynkinD,
    node: usize,
    f: &LaurentPolynomial,
) -> Result<ScreeningElement> {
    Ok(apply_screening_raw(dynkin, node, f)?.reduce())
}

pub fn is_in_kernel(dynkin: &DynkinD, node: usize, f: &LaurentPolynomial) -> Result<bool> {
    Ok(apply_screening(dynkin, node, f)?.is_zero())
}

/// Outcome of checking one node: `None` on success, otherwise the reduced
/// residue.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeCheck {
    pub node: usize,
    pub residue: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub checks: Vec<NodeCheck>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.residue.is_none())
    }

    pub fn failing_nodes(&self) -> Vec<usize> {
        self.checks
            .iter()
            .filter(|c| c.residue.is_some())
            .map(|c| c.node)
            .collect()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match &c.residue {
                None => writeln!(f, "S_{}: ok", c.node)?,
                Some(r) => writeln!(f, "S_{}: FAIL residue {}", c.node, r)?,
            }
        }
        Ok(())
    }
}

/// Runs every screening operator of the diagram on `f`.
pub fn verify_polynomial(dynkin: &DynkinD, f: &LaurentPolynomial) -> VerificationReport {
    let nodes: Vec<usize> = dynkin.nodes().collect();
    let checks = nodes
        .par_iter()
        .map(|&j| {
            let e = apply_screening(dynkin, j, f).expect("node from the diagram");
            NodeCheck {
                node: j,
                residue: (!e.is_zero()).then(|| e.to_string()),
            }
        })
        .collect();
    VerificationReport { checks }
}

pub fn verify_qcharacter(qc: &QCharacter) -> VerificationReport {
    let d = DynkinD::new(qc.rank()).expect("rank of a built character");
    verify_polynomial(&d, qc.terms())
}

/// Terms whose removal leaves the polynomial outside some kernel. For a
/// genuine q-character this should be every term.
pub fn sensitive_terms(dynkin: &DynkinD, f: &LaurentPolynomial) -> Vec<(Monomial, bool)> {
    let terms: Vec<Monomial> = f.monomials().cloned().collect();
    terms
        .into_par_iter()
        .map(|m| {
            let mut g = f.clone();
            g.remove(&m);
            let broken = !verify_polynomial(dynkin, &g).passed();
            (m, broken)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qchar::q_character;
    use proptest::prelude::*;

    fn d(n: usize) -> DynkinD {
        DynkinD::new(n).unwrap()
    }

    fn poly(terms: &[(&str, i64)]) -> LaurentPolynomial {
        terms
            .iter()
            .map(|(m, c)| (m.parse::<Monomial>().unwrap(), BigInt::from(*c)))
            .collect()
    }

    #[test]
    fn raw_examples() {
        let e = apply_screening_raw(&d(4), 1, &poly(&[("Y[2,1]", 1)])).unwrap();
        assert!(e.is_zero());
        let e = apply_screening_raw(&d(4), 1, &poly(&[("Y[1,0]", 1)])).unwrap();
        assert_eq!(e.to_string(), "S[1,0]: Y[1,0]");
        let f = poly(&[("Y[1,0]", 1), ("Y[1,2]^-1 Y[2,1]", 1)]);
        let e = apply_screening_raw(&d(4), 1, &f).unwrap();
        assert_eq!(e.to_string(), "S[1,0]: Y[1,0]; S[1,2]: -Y[1,2]^-1 Y[2,1]");
        assert!(e.reduce().is_zero());
    }

    #[test]
    fn squared_factor_counts_twice() {
        let e = apply_screening_raw(&d(4), 2, &poly(&[("Y[2,3]^2 Y[1,0]", 3)])).unwrap();
        assert_eq!(e.to_string(), "S[2,3]: 6*Y[1,0] Y[2,3]^2");
    }

    #[test]
    fn single_component_chain() {
        let mut e = ScreeningElement::zero(d(4), 1);
        e.add_component(0, LaurentPolynomial::zero());
        e.add_component(-1, poly(&[("Y[3,0]", 1)]));
        e.add_component(5, poly(&[("Y[3,0]", 1)]));
        let r = e.reduce();
        // Y[3,0] A[1,4] A[1,2] A[1,0] at S[1,-1]
        let g = d(4);
        let expected = ["Y[3,0]"]
            .iter()
            .map(|s| s.parse::<Monomial>().unwrap())
            .chain([4, 2, 0].iter().map(|&l| g.a_monomial(1, l).unwrap()))
            .fold(Monomial::one(), |a, b| &a * &b);
        let mut want = poly(&[("Y[3,0]", 1)]);
        want.add_term(expected, BigInt::from(1));
        assert_eq!(r.components().keys().copied().collect::<Vec<_>>(), vec![-1]);
        assert_eq!(r.components()[&-1], want);
    }

    #[test]
    fn kernel_examples() {
        let f = poly(&[("Y[1,0]", 1), ("Y[1,2]^-1 Y[2,1]", 1)]);
        assert!(is_in_kernel(&d(4), 1, &f).unwrap());
        assert!(!is_in_kernel(&d(4), 1, &poly(&[("Y[1,0]", 1)])).unwrap());
        let q = q_character(4, 2, 1).unwrap();
        for j in 1..=4 {
            assert!(is_in_kernel(&d(4), j, q.terms()).unwrap());
        }
    }

    #[test]
    fn d4_characters_verify() {
        for (i, k) in [(1, 0), (2, 1), (3, 0), (4, 0)] {
            let r = verify_qcharacter(&q_character(4, i, k).unwrap());
            assert!(r.passed(), "({i},{k}):\n{r}");
        }
        assert!(verify_qcharacter(&q_character(7, 4, 1).unwrap()).passed());
    }

    #[test]
    fn deleting_a_term_breaks_node_one() {
        let q = q_character(4, 1, 0).unwrap();
        let mut g = q.terms().clone();
        g.remove(&"Y[1,2]^-1 Y[2,1]".parse().unwrap());
        let r = verify_polynomial(&d(4), &g);
        assert!(r.failing_nodes().contains(&1));
    }

    #[test]
    fn every_d4_term_is_load_bearing() {
        for (i, k) in [(1, 0), (2, 1), (3, 0), (4, 0)] {
            let q = q_character(4, i, k).unwrap();
            for (m, broken) in sensitive_terms(&d(4), q.terms()) {
                assert!(broken, "({i},{k}) without {m}");
            }
        }
    }

    #[test]
    fn kernel_generators() {
        for n in 4..=6 {
            let g = d(n);
            for j in g.nodes() {
                for b in -3..=3 {
                    let y = Monomial::var(j, b);
                    let lowered = &y * &g.a_monomial(j, b + 1).unwrap().inverse();
                    let mut f = LaurentPolynomial::from(y);
                    f.add_term(lowered, BigInt::from(1));
                    assert!(is_in_kernel(&g, j, &f).unwrap());
                    let other = if j == 1 { 2 } else { 1 };
                    let spectator: Monomial = format!("Y[{other},{b}]^-2").parse().unwrap();
                    let f2 = f.mul_monomial(&spectator);
                    assert!(is_in_kernel(&g, j, &f2).unwrap());
                    assert!(is_in_kernel(&g, j, &(&f * &f)).unwrap());
                }
            }
        }
    }

    fn arb_poly(node_max: usize) -> impl Strategy<Value = LaurentPolynomial> {
        let factor = (1..=node_max, -4i64..=4, -2i32..=2);
        let mono = prop::collection::vec(factor, 0..4).prop_map(|fs| {
            Monomial::from_factors(
                fs.into_iter()
                    .map(|(i, l, e)| (crate::laurent::YVar::new(i, l), e)),
            )
        });
        prop::collection::vec((mono, -3i64..=3), 0..6).prop_map(|ts| {
            ts.into_iter()
                .map(|(m, c)| (m, BigInt::from(c)))
                .collect::<LaurentPolynomial>()
        })
    }

    proptest! {
        #[test]
        fn raw_screening_is_linear(f in arb_poly(4), g in arb_poly(4), j in 1usize..=4) {
            let dy = d(4);
            let sum = &f + &g;
            let lhs = apply_screening_raw(&dy, j, &sum).unwrap();
            let rhs = apply_screening_raw(&dy, j, &f).unwrap()
                .add(&apply_screening_raw(&dy, j, &g).unwrap());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn reduction_is_idempotent_and_confluent(f in arb_poly(5), j in 1usize..=5) {
            let e = apply_screening_raw(&d(5), j, &f).unwrap();
            let r = e.reduce();
            prop_assert_eq!(&r.reduce(), &r);
            prop_assert_eq!(&e.reduce_direct(), &r);
            prop_assert!(r.components().len() <= 2);
        }
    }
}

//! Cartan data of type D_n in Bourbaki labeling.
//!
//! Nodes are numbered `1..=n`. The chain `1 - 2 - ... - (n-2)` forks at
//! node `n-2` into the two spin nodes `n-1` and `n`, which are not adjacent
//! to each other. All symmetrizers are 1, so every `A[i,k]` has the simply
//! laced shape `Y[i,k-1] Y[i,k+1] / prod_{j~i} Y[j,k]`.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::laurent::{Monomial, YVar};

/// The Dynkin diagram of type D_n. Adjacency is derived from the rank, so
/// only well-formed diagrams can be built.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DynkinD {
    rank: usize,
}

impl DynkinD {
    pub fn new(rank: usize) -> Result<Self> {
        if rank < 4 {
            return Err(Error::RankTooSmall(rank));
        }
        Ok(Self { rank })
    }

    #[inline]
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn nodes(&self) -> impl Iterator<Item = usize> {
        1..=self.rank
    }

    pub fn check_node(&self, node: usize) -> Result<()> {
        if node == 0 || node > self.rank {
            return Err(Error::NodeOutOfRange {
                node,
                rank: self.rank,
            });
        }
        Ok(())
    }

    pub fn is_spin_node(&self, node: usize) -> bool {
        node + 1 >= self.rank
    }

    /// Nodes `j` with `c_ij = -1`, in increasing order.
    pub fn neighbors(&self, node: usize) -> Result<Vec<usize>> {
        self.check_node(node)?;
        let n = self.rank;
        let out = match node {
            1 => vec![2],
            i if i + 2 < n => vec![i - 1, i + 1],
            i if i + 2 == n => vec![i - 1, n - 1, n],
            _ => vec![n - 2],
        };
        Ok(out)
    }

    /// The Cartan matrix entry `c_ij`.
    pub fn cartan_entry(&self, i: usize, j: usize) -> Result<i32> {
        self.check_node(j)?;
        if i == j {
            self.check_node(i)?;
            return Ok(2);
        }
        Ok(if self.neighbors(i)?.contains(&j) {
            -1
        } else {
            0
        })
    }

    /// `A[i,k] = Y[i,k-1] Y[i,k+1] prod_{j ~ i} Y[j,k]^-1`.
    pub fn a_monomial(&self, node: usize, shift: i64) -> Result<Monomial> {
        let nbrs = self.neighbors(node)?;
        let mut factors = Vec::with_capacity(2 + nbrs.len());
        factors.push((YVar::new(node, shift - 1), 1));
        factors.push((YVar::new(node, shift + 1), 1));
        factors.extend(nbrs.into_iter().map(|j| (YVar::new(j, shift), -1)));
        Ok(Monomial::from_factors(factors))
    }

    /// The node `i*` with `w_0(alpha_i) = -alpha_{i*}`.
    pub fn dual_node(&self, node: usize) -> Result<usize> {
        self.check_node(node)?;
        let n = self.rank;
        if node + 1 < n || n.is_multiple_of(2) {
            Ok(node)
        } else if node == n {
            Ok(n - 1)
        } else {
            Ok(n)
        }
    }

    /// Dimension of `L(Y[i,k])` restricted to the finite quantum group, from
    /// the Chari-Pressley branching: `2^(n-1)` for the spin nodes and
    /// `sum_j C(2n, i-2j)` otherwise.
    pub fn cp_dimension(&self, node: usize) -> Result<BigUint> {
        self.check_node(node)?;
        let n = self.rank;
        if self.is_spin_node(node) {
            return Ok(BigUint::one() << (n - 1));
        }
        Ok((0..=node / 2)
            .map(|j| binomial(2 * n as u64, (node - 2 * j) as u64))
            .sum())
    }
}

/// `C(n, k)` as an arbitrary-precision integer; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for t in 0..k {
        acc *= n - t;
        acc /= t + 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(n: usize) -> DynkinD {
        DynkinD::new(n).unwrap()
    }

    #[test]
    fn rank_below_four_is_rejected() {
        assert_eq!(DynkinD::new(3), Err(Error::RankTooSmall(3)));
    }

    #[test]
    fn neighbors_examples() {
        assert_eq!(d(4).neighbors(2).unwrap(), vec![1, 3, 4]);
        assert_eq!(d(4).neighbors(3).unwrap(), vec![2]);
        assert_eq!(d(6).neighbors(5).unwrap(), vec![4]);
        assert_eq!(d(6).neighbors(6).unwrap(), vec![4]);
        assert_eq!(d(6).neighbors(4).unwrap(), vec![3, 5, 6]);
        assert!(matches!(
            d(4).neighbors(5),
            Err(Error::NodeOutOfRange { node: 5, rank: 4 })
        ));
        assert!(d(4).neighbors(0).is_err());
    }

    #[test]
    fn adjacency_is_symmetric_with_bourbaki_degrees() {
        for n in 4..=12 {
            let g = d(n);
            for i in g.nodes() {
                let nb = g.neighbors(i).unwrap();
                for &j in &nb {
                    assert!(g.neighbors(j).unwrap().contains(&i));
                }
                let expected = match i {
                    1 => 1,
                    i if i == n - 2 => 3,
                    i if i >= n - 1 => 1,
                    _ => 2,
                };
                assert_eq!(nb.len(), expected, "n={n} i={i}");
            }
        }
    }

    #[test]
    fn a_monomial_examples() {
        assert_eq!(
            d(4).a_monomial(1, 1).unwrap().to_string(),
            "Y[1,0] Y[1,2] Y[2,1]^-1"
        );
        assert_eq!(
            d(4).a_monomial(2, 2).unwrap().to_string(),
            "Y[1,2]^-1 Y[2,1] Y[2,3] Y[3,2]^-1 Y[4,2]^-1"
        );
        let y10: Monomial = "Y[1,0]".parse().unwrap();
        let lowered = &y10 * &d(4).a_monomial(1, 1).unwrap().inverse();
        assert_eq!(lowered.to_string(), "Y[1,2]^-1 Y[2,1]");
    }

    #[test]
    fn a_monomial_rows_match_cartan_matrix() {
        for n in 4..=9 {
            let g = d(n);
            for i in g.nodes() {
                let a = g.a_monomial(i, 7).unwrap();
                for j in g.nodes() {
                    let total: i32 = a
                        .factors()
                        .iter()
                        .filter(|(v, _)| v.node == j)
                        .map(|(_, e)| *e)
                        .sum();
                    assert_eq!(total, g.cartan_entry(j, i).unwrap(), "n={n} i={i} j={j}");
                }
            }
        }
    }

    #[test]
    fn dual_node_examples_and_involution() {
        assert_eq!(d(4).dual_node(3).unwrap(), 3);
        assert_eq!(d(5).dual_node(4).unwrap(), 5);
        assert_eq!(d(5).dual_node(5).unwrap(), 4);
        assert_eq!(d(5).dual_node(2).unwrap(), 2);
        for n in 4..=11 {
            let g = d(n);
            for i in g.nodes() {
                assert_eq!(g.dual_node(g.dual_node(i).unwrap()).unwrap(), i);
            }
        }
    }

    #[test]
    fn cp_dimension_examples() {
        assert_eq!(d(4).cp_dimension(2).unwrap(), BigUint::from(29u32));
        assert_eq!(d(4).cp_dimension(3).unwrap(), BigUint::from(8u32));
        assert_eq!(d(4).cp_dimension(1).unwrap(), BigUint::from(8u32));
        // C(20,6)+C(20,4)+C(20,2)+C(20,0) = 38760+4845+190+1
        assert_eq!(d(10).cp_dimension(6).unwrap(), BigUint::from(43796u32));
        for n in 4..=40 {
            let g = d(n);
            let spin = BigUint::one() << (n - 1);
            assert_eq!(g.cp_dimension(n - 1).unwrap(), spin);
            assert_eq!(g.cp_dimension(n).unwrap(), spin);
        }
    }

    #[test]
    fn binomial_matches_pascal() {
        let mut row = vec![BigUint::one()];
        for n in 1..=70u64 {
            let mut next = vec![BigUint::one(); n as usize + 1];
            for k in 1..n as usize {
                next[k] = &row[k - 1] + &row[k];
            }
            row = next;
            for k in 0..=n {
                assert_eq!(binomial(n, k), row[k as usize]);
            }
        }
        assert_eq!(binomial(3, 5), BigUint::zero());
    }
}

//! The monomial or binomial `m(p)` attached to a path.
//!
//! Spin paths carry one monomial: a factor per interior corner and an
//! endpoint factor whose node (`n-1` or `n`) is selected by
//! `(y_{n-1} - k) mod 4`. Glued paths carry the interior corner factors,
//! with columns right of `n-1` folded back by `x -> N - x`, times a
//! spin-node factor read off from how the path crosses column `n-1`.

use num_bigint::BigInt;

use crate::laurent::{LaurentPolynomial, Monomial, YVar};
use crate::paths::Path;

/// How a glued path crosses column `n-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TravelConfig {
    /// `y > y'`: the path enters at `high = y` and leaves at `low = y'`.
    /// `entry` is `+1` when it arrives descending (`y_{n-2} = y - 1`),
    /// `exit` is `+1` when it leaves descending (`y_n = y' + 1`).
    Vertical {
        low: i64,
        high: i64,
        entry: i8,
        exit: i8,
    },
    /// Coincident copies with both neighbours one level below.
    UpperCorner(i64),
    /// Coincident copies with both neighbours one level above.
    LowerCorner(i64),
    /// Coincident copies, neighbours on opposite sides.
    StraightPass,
}

impl TravelConfig {
    /// Numbering `1..=6` of the crossing shapes; `None` for a straight pass.
    pub fn case_number(&self) -> Option<u8> {
        match *self {
            TravelConfig::Vertical { entry, exit, .. } => Some(match (entry, exit) {
                (1, 1) => 1,
                (1, _) => 2,
                (_, 1) => 3,
                _ => 4,
            }),
            TravelConfig::UpperCorner(_) => Some(5),
            TravelConfig::LowerCorner(_) => Some(6),
            TravelConfig::StraightPass => None,
        }
    }
}

/// Crossing shape of a glued path. Panics on spin paths.
pub fn classify_travel(p: &Path) -> TravelConfig {
    assert!(!p.is_spin(), "spin paths do not cross column n-1");
    let n = p.family().rank();
    let h = p.heights();
    let (before, y, y2, after) = (h[n - 2], h[n - 1], h[n], h[n + 1]);
    if y > y2 {
        return TravelConfig::Vertical {
            low: y2,
            high: y,
            entry: if before == y - 1 { 1 } else { -1 },
            exit: if after == y2 + 1 { 1 } else { -1 },
        };
    }
    match (before - y, after - y) {
        (1, 1) => TravelConfig::UpperCorner(y),
        (-1, -1) => TravelConfig::LowerCorner(y),
        _ => TravelConfig::StraightPass,
    }
}

/// The spin-node factor of a crossing shape, for rank `n`.
pub fn z_factor(cfg: TravelConfig, rank: usize) -> LaurentPolynomial {
    let (a, b) = (rank - 1, rank);
    let pair = |x: (usize, i64, i32), y: (usize, i64, i32)| {
        Monomial::from_factors([(YVar::new(x.0, x.1), x.2), (YVar::new(y.0, y.1), y.2)])
    };
    match cfg {
        TravelConfig::StraightPass => LaurentPolynomial::one(),
        TravelConfig::UpperCorner(l) => pair((a, l, 1), (b, l, 1)).into(),
        TravelConfig::LowerCorner(l) => pair((a, l, -1), (b, l, -1)).into(),
        TravelConfig::Vertical {
            low,
            high,
            entry,
            exit,
        } => {
            let s_high = if entry == 1 { -1 } else { 1 };
            let s_low = if exit == 1 { 1 } else { -1 };
            let gap_is_two = (high - low).rem_euclid(4) == 2;
            // Cases 1 and 4 pair different spin nodes when the gap is 2 mod
            // 4; cases 2 and 3 when it is 0 mod 4.
            let mixed = gap_is_two == (entry == exit);
            let (first, second) = if mixed {
                (
                    pair((a, low, s_low), (b, high, s_high)),
                    pair((b, low, s_low), (a, high, s_high)),
                )
            } else {
                (
                    pair((a, low, s_low), (a, high, s_high)),
                    pair((b, low, s_low), (b, high, s_high)),
                )
            };
            [(first, BigInt::from(1)), (second, BigInt::from(1))]
                .into_iter()
                .collect()
        }
    }
}

/// Folds a column onto a node: `x` left of `n-1`, `N - x` right of it.
fn bar(column: usize, rank: usize) -> usize {
    if column + 1 < rank {
        column
    } else {
        2 * rank - 2 - column
    }
}

fn corner_product(p: &Path) -> Vec<(YVar, i32)> {
    let n = p.family().rank();
    let (upper, lower) = p.corners();
    upper
        .iter()
        .map(|c| (c, 1))
        .chain(lower.iter().map(|c| (c, -1)))
        .filter(|(c, _)| c.point.x != n - 1)
        .map(|(c, e)| (YVar::new(bar(c.point.x, n), c.point.y), e))
        .collect()
}

/// Monomial of a spin path. Panics on glued paths.
pub fn spin_weight(p: &Path) -> Monomial {
    assert!(p.is_spin(), "spin_weight needs a path of the spin family");
    let f = p.family();
    let n = f.rank();
    let y = p.heights()[n - 1];
    let (upper, _) = p.corners();
    let endpoint_upper = upper.iter().any(|c| c.point.x == n - 1);
    let residue = (y - f.shift()).rem_euclid(4);
    debug_assert!(residue % 2 == 0, "endpoint parity is fixed by the family");
    let node = match (endpoint_upper, residue) {
        (true, 0) | (false, 2) => n - 1,
        _ => n,
    };
    let mut factors = corner_product(p);
    factors.push((YVar::new(node, y), if endpoint_upper { 1 } else { -1 }));
    Monomial::from_factors(factors)
}

/// Monomial or binomial of a glued path. Panics on spin paths.
pub fn glued_weight(p: &Path) -> LaurentPolynomial {
    let rest = Monomial::from_factors(corner_product(p));
    z_factor(classify_travel(p), p.family().rank()).mul_monomial(&rest)
}

/// `m(p)` for either shape, always as a polynomial with one or two terms.
pub fn weight(p: &Path) -> LaurentPolynomial {
    if p.is_spin() {
        spin_weight(p).into()
    } else {
        glued_weight(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::Family;

    fn mono(s: &str) -> Monomial {
        s.parse().unwrap()
    }

    fn poly(ms: &[&str]) -> LaurentPolynomial {
        ms.iter().map(|m| (mono(m), BigInt::from(1))).collect()
    }

    fn spin(heights: &[i64]) -> Path {
        Path::new(Family::new(4, 3, 0).unwrap(), heights.to_vec()).unwrap()
    }

    fn glued(i: usize, k: i64, left: &[i64], right: &[i64]) -> Path {
        Path::glued(Family::new(4, i, k).unwrap(), left, right).unwrap()
    }

    #[test]
    fn spin_weight_examples() {
        assert_eq!(spin_weight(&spin(&[3, 2, 1, 0])), mono("Y[3,0]"));
        assert_eq!(
            spin_weight(&spin(&[3, 2, 3, 2])),
            mono("Y[1,2] Y[2,3]^-1 Y[4,2]")
        );
        assert_eq!(spin_weight(&spin(&[3, 4, 5, 6])), mono("Y[3,6]^-1"));
        assert_eq!(spin_weight(&spin(&[3, 2, 1, 2])), mono("Y[2,1] Y[3,2]^-1"));
    }

    #[test]
    fn classify_examples() {
        let p = glued(1, 0, &[1, 2, 3, 4], &[2, 3, 4, 5]);
        assert_eq!(
            classify_travel(&p),
            TravelConfig::Vertical {
                low: 2,
                high: 4,
                entry: 1,
                exit: 1
            }
        );
        assert_eq!(classify_travel(&p).case_number(), Some(1));
        let p = glued(2, 1, &[3, 2, 1, 2], &[2, 3, 4, 5]);
        assert_eq!(classify_travel(&p), TravelConfig::StraightPass);
        let p = glued(2, 1, &[3, 2, 3, 2], &[2, 3, 4, 5]);
        assert_eq!(classify_travel(&p), TravelConfig::UpperCorner(2));
        assert_eq!(classify_travel(&p).case_number(), Some(5));
    }

    #[test]
    fn z_factor_rows() {
        let v = |low, high, entry, exit| TravelConfig::Vertical {
            low,
            high,
            entry,
            exit,
        };
        assert_eq!(
            z_factor(v(2, 4, 1, 1), 4),
            poly(&["Y[3,2] Y[4,4]^-1", "Y[4,2] Y[3,4]^-1"])
        );
        assert_eq!(
            z_factor(v(2, 6, 1, 1), 4),
            poly(&["Y[3,2] Y[3,6]^-1", "Y[4,2] Y[4,6]^-1"])
        );
        assert_eq!(
            z_factor(v(2, 6, 1, -1), 4),
            poly(&["Y[3,2]^-1 Y[4,6]^-1", "Y[4,2]^-1 Y[3,6]^-1"])
        );
        assert_eq!(
            z_factor(v(2, 4, 1, -1), 4),
            poly(&["Y[3,2]^-1 Y[3,4]^-1", "Y[4,2]^-1 Y[4,4]^-1"])
        );
        assert_eq!(
            z_factor(v(1, 5, -1, 1), 5),
            poly(&["Y[4,1] Y[5,5]", "Y[5,1] Y[4,5]"])
        );
        assert_eq!(
            z_factor(v(1, 3, -1, 1), 5),
            poly(&["Y[4,1] Y[4,3]", "Y[5,1] Y[5,3]"])
        );
        assert_eq!(
            z_factor(v(1, 3, -1, -1), 5),
            poly(&["Y[4,1]^-1 Y[5,3]", "Y[5,1]^-1 Y[4,3]"])
        );
        assert_eq!(
            z_factor(v(1, 5, -1, -1), 5),
            poly(&["Y[4,1]^-1 Y[4,5]", "Y[5,1]^-1 Y[5,5]"])
        );
        assert_eq!(
            z_factor(TravelConfig::UpperCorner(2), 4),
            poly(&["Y[3,2] Y[4,2]"])
        );
        assert_eq!(
            z_factor(TravelConfig::LowerCorner(4), 4),
            poly(&["Y[3,4]^-1 Y[4,4]^-1"])
        );
        assert_eq!(
            z_factor(TravelConfig::StraightPass, 4),
            LaurentPolynomial::one()
        );
    }

    #[test]
    fn glued_weight_examples() {
        let p = glued(1, 0, &[1, 2, 3, 4], &[4, 5, 4, 5]);
        assert_eq!(glued_weight(&p), poly(&["Y[1,4] Y[2,5]^-1"]));
        let p = glued(1, 0, &[1, 2, 3, 4], &[4, 5, 6, 5]);
        assert_eq!(glued_weight(&p), poly(&["Y[1,6]^-1"]));
        let p = glued(2, 1, &[3, 4, 3, 4], &[4, 3, 4, 5]);
        assert_eq!(
            glued_weight(&p),
            poly(&["Y[1,4]^-1 Y[2,3]^2 Y[3,4]^-1 Y[4,4]^-1"])
        );
        let p = glued(2, 1, &[3, 2, 3, 2], &[2, 3, 4, 5]);
        assert_eq!(glued_weight(&p), poly(&["Y[1,2] Y[2,3]^-1 Y[3,2] Y[4,2]"]));
    }

    #[test]
    fn extremal_weights() {
        for n in 4..=8 {
            for i in 1..n {
                for k in 0..4 {
                    let Ok(f) = Family::new(n, i, k) else {
                        continue;
                    };
                    let d = crate::DynkinD::new(n).unwrap();
                    let top = weight(&f.highest_path());
                    assert_eq!(top, Monomial::var(i, k).into(), "{f:?}");
                    let bottom = weight(&f.lowest_path());
                    let dual = d.dual_node(i).unwrap();
                    let expect = Monomial::var(dual, 2 * n as i64 - 2 + k).inverse();
                    assert_eq!(bottom, expect.into(), "{f:?}");
                }
            }
        }
    }

    #[test]
    fn z_factors_have_unit_coefficients() {
        for f in [Family::new(5, 2, 1).unwrap(), Family::new(6, 3, 0).unwrap()] {
            for p in f.iter() {
                let w = glued_weight(&p);
                assert!(w.len() == 1 || w.len() == 2);
                assert!(w.terms().all(|(_, c)| *c == BigInt::from(1)));
                assert_eq!(
                    w.len() == 2,
                    matches!(classify_travel(&p), TravelConfig::Vertical { .. })
                );
            }
        }
    }
}

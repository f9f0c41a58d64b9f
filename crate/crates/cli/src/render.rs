use std::fmt::Write as _;

use dqchar::laurent::YVar;
use dqchar::{LaurentPolynomial, Monomial, Path, QCharacter};
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorDoc {
    pub node: usize,
    pub shift: i64,
    pub power: i32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDoc {
    pub coeff: i64,
    pub factors: Vec<FactorDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QCharDoc {
    pub n: usize,
    pub node: usize,
    pub shift: i64,
    pub dimension: String,
    pub terms: Vec<TermDoc>,
}

impl QCharDoc {
    pub fn from_qchar(qc: &QCharacter) -> Self {
        let mut sorted: Vec<(String, &Monomial, &BigInt)> = qc
            .terms()
            .terms()
            .map(|(m, c)| (m.to_string(), m, c))
            .collect();
        sorted.sort();
        let terms = sorted
            .into_iter()
            .map(|(_, m, c)| TermDoc {
                coeff: c.to_i64().expect("q-character coefficients fit in i64"),
                factors: m
                    .factors()
                    .iter()
                    .map(|(v, e)| FactorDoc {
                        node: v.node,
                        shift: v.shift,
                        power: *e,
                    })
                    .collect(),
            })
            .collect();
        Self {
            n: qc.rank(),
            node: qc.node(),
            shift: qc.shift(),
            dimension: qc.dimension().to_string(),
            terms,
        }
    }

    pub fn polynomial(&self) -> LaurentPolynomial {
        self.terms
            .iter()
            .map(|t| {
                let m = Monomial::from_factors(
                    t.factors
                        .iter()
                        .map(|f| (YVar::new(f.node, f.shift), f.power)),
                );
                (m, BigInt::from(t.coeff))
            })
            .collect()
    }
}

fn coeff_prefix(c: &BigInt) -> String {
    if c.is_one() {
        String::new()
    } else if *c == -BigInt::one() {
        "-".to_string()
    } else {
        format!("{c}*")
    }
}

/// One term per line, sorted by the monomial's canonical string.
pub fn text(p: &LaurentPolynomial) -> String {
    let mut out = String::new();
    for (c, m) in p.sorted_terms() {
        writeln!(out, "{}{}", coeff_prefix(&c), m).unwrap();
    }
    out
}

fn latex_monomial(m: &Monomial) -> String {
    if m.is_one() {
        return "1".to_string();
    }
    m.factors()
        .iter()
        .map(|(v, e)| match e {
            1 => format!("Y_{{{},{}}}", v.node, v.shift),
            _ => format!("Y^{{{}}}_{{{},{}}}", e, v.node, v.shift),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn latex(qc: &QCharacter) -> String {
    let mut sorted: Vec<(String, &Monomial, &BigInt)> = qc
        .terms()
        .terms()
        .map(|(m, c)| (m.to_string(), m, c))
        .collect();
    sorted.sort();
    let mut body = String::new();
    for (idx, (_, m, c)) in sorted.into_iter().enumerate() {
        let neg = c.sign() == num_bigint::Sign::Minus;
        let mag = if neg { -c.clone() } else { c.clone() };
        if idx > 0 {
            body.push_str(if neg { " - " } else { " + " });
        } else if neg {
            body.push('-');
        }
        if !mag.is_one() {
            write!(body, "{mag} ").unwrap();
        }
        body.push_str(&latex_monomial(m));
    }
    format!(
        "\\chi_q(L(Y_{{{},{}}})) = {}\n",
        qc.node(),
        qc.shift(),
        body
    )
}

fn join_heights(h: &[i64]) -> String {
    h.iter()
        .map(|y| y.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Height sequence of a path: one group for a spin path, two for a glued one.
pub fn heights(p: &Path) -> String {
    if p.is_spin() {
        format!("[{}]", join_heights(p.heights()))
    } else {
        format!("[{}] [{}]", join_heights(p.left()), join_heights(p.right()))
    }
}

#[derive(Debug, Serialize)]
pub struct PathDoc {
    pub heights: Vec<Vec<i64>>,
    pub weight: String,
}

#[derive(Debug, Serialize)]
pub struct PathListDoc {
    pub n: usize,
    pub node: usize,
    pub shift: i64,
    pub paths: Vec<PathDoc>,
    pub count: usize,
    pub terms: u64,
}

#[derive(Debug, Serialize)]
pub struct DimRow {
    pub n: usize,
    pub node: usize,
    pub paths: String,
    pub monomials: String,
    pub cp_dimension: String,
    pub status: &'static str,
}

pub fn dims_text(rows: &[DimRow]) -> String {
    let mut out = format!(
        "{:>3} {:>3} {:>12} {:>14} {:>14}  {}\n",
        "n", "i", "paths", "monomials", "cp_dim", "status"
    );
    for r in rows {
        writeln!(
            out,
            "{:>3} {:>3} {:>12} {:>14} {:>14}  {}",
            r.n, r.node, r.paths, r.monomials, r.cp_dimension, r.status
        )
        .unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use dqchar::qchar::q_character;

    #[test]
    fn text_prefixes_coefficients() {
        let p: LaurentPolynomial = [("Y[2,3] Y[2,5]^-1", 2), ("Y[1,0]", 1), ("Y[3,1]", -1)]
            .iter()
            .map(|(m, c)| (m.parse::<Monomial>().unwrap(), BigInt::from(*c)))
            .collect();
        assert_eq!(text(&p), "Y[1,0]\n2*Y[2,3] Y[2,5]^-1\n-Y[3,1]\n");
    }

    #[test]
    fn latex_uses_subscript_notation() {
        let qc = q_character(4, 1, 0).unwrap();
        let s = latex(&qc);
        assert!(s.starts_with("\\chi_q(L(Y_{1,0})) = "));
        assert!(s.contains("Y^{-1}_{1,2} Y_{2,1}"));
        let qc = q_character(4, 2, 1).unwrap();
        assert!(latex(&qc).contains("2 Y_{2,3} Y^{-1}_{2,5}"));
    }

    #[test]
    fn doc_round_trip() {
        let qc = q_character(5, 3, 0).unwrap();
        let doc = QCharDoc::from_qchar(&qc);
        let back: QCharDoc = serde_json::from_str(&serde_json::to_string(&doc).unwrap()).unwrap();
        assert_eq!(back, doc);
        assert_eq!(&back.polynomial(), qc.terms());
    }
}

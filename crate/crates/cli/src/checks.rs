//! The invariant suite behind `dqchar verify`.

use std::collections::BTreeSet;

use dqchar::qchar::{self, q_character};
use dqchar::screening::{sensitive_terms, verify_qcharacter};
use dqchar::{DynkinD, Family, QCharacter, Result};
use num_bigint::BigInt;

pub struct Outcome {
    pub name: &'static str,
    pub detail: Option<String>,
}

impl Outcome {
    fn new(name: &'static str, detail: Option<String>) -> Self {
        Self { name, detail }
    }

    pub fn passed(&self) -> bool {
        self.detail.is_none()
    }
}

fn kernels(qc: &QCharacter) -> Option<String> {
    let r = verify_qcharacter(qc);
    (!r.passed()).then(|| r.to_string().trim_end().replace('\n', "; "))
}

fn extremes(qc: &QCharacter) -> Option<String> {
    if qc.extremes_are_unique() {
        return None;
    }
    let (dom, anti) = qc.dominance_report();
    let show = |v: &[(dqchar::Monomial, BigInt)]| {
        v.iter()
            .map(|(m, c)| format!("{c}*{m}"))
            .collect::<Vec<_>>()
            .join(", ")
    };
    Some(format!(
        "dominant [{}], anti-dominant [{}]",
        show(dom),
        show(anti)
    ))
}

fn cone(qc: &QCharacter) -> Option<String> {
    let bad = qc.cone_violations();
    (!bad.is_empty()).then(|| {
        let list: Vec<String> = bad.iter().take(5).map(|m| m.to_string()).collect();
        format!(
            "{} terms outside the cone, e.g. {}",
            bad.len(),
            list.join(", ")
        )
    })
}

fn counts(qc: &QCharacter) -> Result<Option<String>> {
    let d = DynkinD::new(qc.rank())?;
    let paths = qchar::path_count_formula(qc.rank(), qc.node())?;
    let monos = qchar::monomial_count_formula(qc.rank(), qc.node())?;
    let cp = d.cp_dimension(qc.node())?;
    let dim = qc.dimension();
    let ok = BigInt::from(qc.path_count()) == BigInt::from(paths.clone())
        && dim == BigInt::from(monos.clone())
        && monos == cp;
    Ok((!ok).then(|| {
        format!(
            "paths {} vs formula {}; dimension {} vs formula {} vs cp {}",
            qc.path_count(),
            paths,
            dim,
            monos,
            cp
        )
    }))
}

fn spin_swap(qc: &QCharacter) -> Result<Option<String>> {
    let n = qc.rank();
    if qc.node() + 1 < n {
        return Ok(None);
    }
    let other = if qc.node() == n { n - 1 } else { n };
    let twin = q_character(n, other, qc.shift())?;
    let swapped = twin.terms().map_monomials(|m| m.swap_spin_nodes(n));
    Ok((&swapped != qc.terms())
        .then(|| format!("node {other} does not swap onto node {}", qc.node())))
}

fn moves(qc: &QCharacter) -> Result<Option<String>> {
    let n = qc.rank();
    let node = if qc.node() == n { n - 1 } else { qc.node() };
    let fam = Family::new(n, node, qc.shift())?;
    let listed: BTreeSet<Vec<i64>> = fam.iter().map(|p| p.heights().to_vec()).collect();
    let reached: BTreeSet<Vec<i64>> = fam
        .enumerate_by_moves()
        .iter()
        .map(|p| p.heights().to_vec())
        .collect();
    if listed != reached {
        return Ok(Some(format!(
            "{} paths listed, {} reached by moves",
            listed.len(),
            reached.len()
        )));
    }
    for p in fam.iter() {
        for s in p.lowering_sites() {
            let back = p.lower(s)?.raise(s)?;
            if back != p {
                return Ok(Some(format!(
                    "raise after lower at {s:?} is not the identity"
                )));
            }
        }
    }
    Ok(None)
}

fn mutations(qc: &QCharacter) -> Result<Option<String>> {
    let d = DynkinD::new(qc.rank())?;
    let survivors: Vec<String> = sensitive_terms(&d, qc.terms())
        .into_iter()
        .filter(|(_, broken)| !broken)
        .map(|(m, _)| m.to_string())
        .collect();
    Ok((!survivors.is_empty())
        .then(|| format!("removable without detection: {}", survivors.join(", "))))
}

/// Runs every check on one character; `deep` adds the mutation sweep.
pub fn run(qc: &QCharacter, deep: bool) -> Result<Vec<Outcome>> {
    let mut out = vec![
        Outcome::new("screening kernels", kernels(qc)),
        Outcome::new("extremal monomials", extremes(qc)),
        Outcome::new("cone", cone(qc)),
        Outcome::new("counts", counts(qc)?),
        Outcome::new("spin swap", spin_swap(qc)?),
        Outcome::new("moves", moves(qc)?),
    ];
    if deep {
        out.push(Outcome::new("mutations", mutations(qc)?));
    }
    Ok(out)
}

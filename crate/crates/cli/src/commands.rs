use std::path::{Path, PathBuf};

use serde_json::{json, Map, Value};
use zariski_core::finite::{
    check_reduction, family_subset, group_family, semigroup_family, topology_subset, BUILTIN_NAMES,
};
use zariski_core::random::{random_g_element, random_pair, random_perm, random_proper_pair, Rng8, PairShape};
use zariski_core::sepgroup::{finiteness_bound, solve_on_tm, solve_on_tm_brute, SolutionBound};
use zariski_core::symtop::{maximal_decompose, stab_by_commutation, stabilizes_pair};
use zariski_core::witness::{construct_witness, prefixes_disjoint, separators_avoid_image, WitnessTrace};
use zariski_core::{
    normalize_traced, FinPerm, FiniteGroupTable, GElement, MatrixPair, NormalForm, SymOmega,
};

use crate::report::Report;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] zariski_core::Error),
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("invalid input in {path}: {source}")]
    Parse { path: PathBuf, source: serde_json::Error },
    #[error("{0} normalizes to the empty set, so it has no element to witness")]
    EmptyInput(PathBuf),
    #[error("{0}")]
    Usage(String),
}

pub type CliResult<T> = Result<T, CliError>;

pub fn read_pair(path: &Path) -> CliResult<MatrixPair<FinPerm>> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })?;
    serde_json::from_str(&text).map_err(|source| CliError::Parse { path: path.into(), source })
}

pub fn parse_perm(s: &str) -> Result<FinPerm, String> {
    serde_json::from_str(s).map_err(|e| e.to_string())
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn form_kind<E>(f: &NormalForm<E>) -> &'static str {
    match f {
        NormalForm::Empty => "empty",
        NormalForm::Full => "full",
        NormalForm::Proper(_) => "proper",
    }
}

pub fn bounds(pairs: &[(&str, Value)]) -> Map<String, Value> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

pub struct NormalizeParams {
    pub shape: PairShape,
    pub samples: usize,
    pub adjuster: FinPerm,
}

/// Normalizes one pair and compares membership before and after at random
/// points.
fn normalize_case(
    pair: &MatrixPair<FinPerm>,
    params: &NormalizeParams,
    rng: &mut Rng8,
    full_trace: bool,
) -> CliResult<(bool, Value)> {
    let n = normalize_traced(pair, &SymOmega, &params.adjuster)?;
    let agreeing = (0..params.samples)
        .filter(|_| {
            let x = random_perm(rng, params.shape.support);
            pair.membership(&SymOmega, &x) == n.form.contains(&SymOmega, &x)
        })
        .count();
    let conditions = n.form.proper().is_none_or(|p| p.is_normalized());
    let decreasing = n.measure_decreases();
    let passed = agreeing == params.samples && conditions && decreasing;
    let mut detail = json!({
        "form": form_kind(&n.form),
        "steps": n.steps.len(),
        "initial_signature": n.initial_signature,
        "agreement": [agreeing, params.samples],
        "conditions": conditions,
        "decreasing": decreasing,
    });
    if full_trace {
        detail["normalization"] = to_value(&n);
    }
    Ok((passed, detail))
}

pub fn normalize(report: &mut Report, input: Option<&Path>, cases: usize, params: &NormalizeParams, rng: &mut Rng8) -> CliResult<()> {
    match input {
        Some(path) => {
            let pair = read_pair(path)?;
            let (passed, detail) = normalize_case(&pair, params, rng, true)?;
            report.push(passed, detail);
        }
        None => {
            for _ in 0..cases {
                let pair = random_pair(rng, params.shape);
                let (passed, detail) = normalize_case(&pair, params, rng, false)?;
                report.push(passed, detail);
            }
        }
    }
    Ok(())
}

/// Checks a finished construction: membership in every input set, the step
/// bound, and the two invariants of the loop replayed on each partial map.
fn judge_witness(
    originals: &[&MatrixPair<FinPerm>],
    normalized: &MatrixPair<FinPerm>,
    g: &FinPerm,
    trace: &WitnessTrace,
) -> (bool, Value) {
    let member = originals.iter().all(|p| p.membership(&SymOmega, g));
    let bound = normalized.total_degree();
    let within = trace.steps.len() <= bound;
    let maps = trace.partial_maps();
    let separated = maps.iter().all(|x| separators_avoid_image(normalized, &trace.separators, x));
    let disjoint = maps.iter().all(|x| prefixes_disjoint(normalized, &trace.separators, x));
    let detail = json!({
        "member": member,
        "steps": trace.steps.len(),
        "bound": bound,
        "separators_avoid_image": separated,
        "prefixes_disjoint": disjoint,
        "element": g.to_string(),
    });
    (member && within && separated && disjoint, detail)
}

fn witness_for(
    originals: &[&MatrixPair<FinPerm>],
    forms: Vec<NormalForm<FinPerm>>,
    full_trace: bool,
) -> CliResult<(bool, Value)> {
    let proper: Vec<MatrixPair<FinPerm>> = forms.into_iter().filter_map(|f| match f {
        NormalForm::Proper(p) => Some(p),
        _ => None,
    }).collect();
    let Some((first, rest)) = proper.split_first() else {
        let g = FinPerm::identity();
        let member = originals.iter().all(|p| p.membership(&SymOmega, &g));
        return Ok((member, json!({ "member": member, "steps": 0, "element": g.to_string(), "full": true })));
    };
    let stacked = rest.iter().fold(first.clone(), |acc, p| acc.stack(p));
    let (g, trace) = construct_witness(&stacked, &zariski_core::symw_oracle())?;
    let (passed, mut detail) = judge_witness(originals, &stacked, &g, &trace);
    if full_trace {
        detail["trace"] = to_value(&trace);
    }
    Ok((passed, detail))
}

/// Witness for one or two pairs read from files.
pub fn witness_files(report: &mut Report, paths: &[PathBuf], adjuster: &FinPerm) -> CliResult<()> {
    let pairs = paths.iter().map(|p| read_pair(p)).collect::<CliResult<Vec<_>>>()?;
    let mut forms = Vec::new();
    for (pair, path) in pairs.iter().zip(paths) {
        let form = zariski_core::normalize(pair, &SymOmega, adjuster)?;
        if form == NormalForm::Empty {
            return Err(CliError::EmptyInput(path.clone()));
        }
        forms.push(form);
    }
    let originals: Vec<&MatrixPair<FinPerm>> = pairs.iter().collect();
    let (passed, detail) = witness_for(&originals, forms, true)?;
    report.push(passed, detail);
    Ok(())
}

/// Random normalized pairs (`sets` of them per case, stacked).
pub fn witness_random(report: &mut Report, sets: usize, cases: usize, shape: PairShape, rng: &mut Rng8) -> CliResult<()> {
    for _ in 0..cases {
        let pairs: Vec<MatrixPair<FinPerm>> = (0..sets).map(|_| random_proper_pair(rng, shape)).collect();
        let originals: Vec<&MatrixPair<FinPerm>> = pairs.iter().collect();
        let forms = pairs.iter().cloned().map(NormalForm::Proper).collect();
        let (passed, detail) = witness_for(&originals, forms, false)?;
        report.push(passed, detail);
    }
    Ok(())
}

fn bound_value(b: &SolutionBound) -> Value {
    to_value(b)
}

fn separate_case(a: &GElement, p: u64, m: usize, n: usize) -> CliResult<(bool, Value)> {
    let closed = solve_on_tm(a, p, m, n)?;
    let brute = solve_on_tm_brute(a, p, m, n)?;
    let bound = finiteness_bound(a, p, m)?;
    let within = match &bound {
        SolutionBound::FiniteCandidates(c) => brute.iter().all(|i| c.contains(i)),
        SolutionBound::AllEven => brute == (0..=n).step_by(2).collect::<Vec<_>>(),
    };
    let detail = json!({
        "m": m,
        "p": p,
        "a": to_value(a),
        "solutions": brute,
        "bound": bound_value(&bound),
        "closed_form_agrees": closed == brute,
    });
    Ok((within && closed == brute, detail))
}

pub struct SeparateParams {
    pub m_min: usize,
    pub m_max: usize,
    pub samples: usize,
    pub bound_n: usize,
}

/// For each `m` and each `1 ≤ p ≤ m`: the identity coefficient, then
/// `samples` random coefficients.
pub fn separate(report: &mut Report, params: &SeparateParams, rng: &mut Rng8) -> CliResult<()> {
    if params.m_min < 2 || params.m_max < params.m_min {
        return Err(CliError::Usage(format!("need 2 ≤ m-min ≤ m-max, got {}..{}", params.m_min, params.m_max)));
    }
    for m in params.m_min..=params.m_max {
        for p in 1..=m as u64 {
            let (passed, detail) = separate_case(&GElement::identity(), p, m, params.bound_n)?;
            report.push(passed, detail);
            for _ in 0..params.samples {
                let a = random_g_element(rng, m, p);
                let (passed, detail) = separate_case(&a, p, m, params.bound_n)?;
                report.push(passed, detail);
            }
        }
    }
    Ok(())
}

fn all_perms(n: usize) -> Vec<FinPerm> {
    let mut image: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    loop {
        out.push(FinPerm::from_pairs(image.iter().copied().enumerate()).expect("bijection"));
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| image[i - 1] < image[i]) else { return out };
        let j = (i..n).rev().find(|&j| image[j] > image[i - 1]).expect("exists");
        image.swap(i - 1, j);
        image[i..].reverse();
    }
}

/// Every permutation of `{0..4}` against every pair, then random
/// decompositions on `{0..support-1}`.
pub fn symcheck(report: &mut Report, samples: usize, support: usize, rng: &mut Rng8) -> CliResult<()> {
    if support < 2 {
        return Err(CliError::Usage("support must be at least 2".into()));
    }
    for f in all_perms(5) {
        for x in 0..5 {
            for y in x + 1..5 {
                let commutes = stab_by_commutation(&f, x, y)?;
                let stabilizes = stabilizes_pair(&f, x, y);
                report.push(
                    commutes == stabilizes,
                    json!({ "check": "stabilizer", "f": f.to_string(), "x": x, "y": y, "commutes": commutes }),
                );
            }
        }
    }
    use rand::Rng;
    for _ in 0..samples {
        let x = rng.random_range(0..support);
        let (f, g) = loop {
            let (f, g) = (random_perm(rng, support), random_perm(rng, support));
            if f.apply(x) != x && g.apply(x) != x {
                break (f, g);
            }
        };
        let (phi, h) = maximal_decompose(&f, &g, x)?;
        let exact = phi.compose(&f).compose(&h.invert()) == g;
        let fixing = phi.apply(x) == x && h.apply(x) == x;
        report.push(
            exact && fixing,
            json!({
                "check": "decomposition",
                "f": f.to_string(),
                "g": g.to_string(),
                "x": x,
                "phi": phi.to_string(),
                "h": h.to_string(),
            }),
        );
    }
    Ok(())
}

/// Families, topology comparisons and the reduction check on each group.
pub fn finite_check(report: &mut Report, groups: &[String], max_degree: usize) -> CliResult<()> {
    let names: Vec<String> = if groups.is_empty() {
        BUILTIN_NAMES.iter().map(|s| s.to_string()).collect()
    } else {
        groups.to_vec()
    };
    for name in &names {
        let g = FiniteGroupTable::builtin(name)?;
        let abelian = g.is_abelian();
        let mut previous = None;
        for d in 0..=max_degree {
            let grp = group_family(&g, d)?;
            let semi = semigroup_family(&g, d)?;
            let coarser = topology_subset(&semi, &grp)?;
            let finer = topology_subset(&grp, &semi)?;
            let monotone = match &previous {
                None => true,
                Some((s0, g0)) => family_subset(s0, &semi)? && family_subset(g0, &grp)?,
            };
            let equal_ok = !abelian || (coarser && finer);
            report.push(
                coarser && monotone && equal_ok,
                json!({
                    "group": name,
                    "degree": d,
                    "abelian": abelian,
                    "semigroup_sets": semi.len(),
                    "group_sets": grp.len(),
                    "semigroup_in_group": coarser,
                    "same_topology": coarser && finer,
                    "monotone": monotone,
                }),
            );
            previous = Some((semi, grp));
        }
        let r = check_reduction(&g, max_degree.min(3))?;
        report.push(
            r.mismatches.is_empty(),
            json!({
                "group": name,
                "reduction_degree": max_degree.min(3),
                "words": r.words,
                "points": r.points,
                "mismatches": to_value(&r.mismatches),
            }),
        );
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexicographic_enumeration() {
        let p = all_perms(5);
        assert_eq!(p.len(), 120);
        assert!(p[0].is_identity());
        let set: std::collections::BTreeSet<_> = p.iter().collect();
        assert_eq!(set.len(), 120);
    }
}

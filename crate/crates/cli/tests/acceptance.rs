//! One line per acceptance criterion; exits non-zero if any fails.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::Rng;
use zariski_core::finite::{
    check_reduction, family_subset, group_family, semigroup_family, topology_close, BUILTIN_NAMES,
};
use zariski_core::random::{random_g_element, random_pair, random_perm, random_proper_pair, rng, PairShape};
use zariski_core::sepgroup::{finiteness_bound, solve_on_tm, solve_on_tm_brute, SolutionBound};
use zariski_core::symtop::{maximal_decompose, stab_by_commutation};
use zariski_core::witness::intersect_witness;
use zariski_core::{
    normalize_traced, FinPerm, FiniteGroupTable, GElement, GroupWord, MatrixPair, NormalForm, Sign, SymOmega,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

/// `(m) r₀ x r₁ … x r_d` differs between the sides of every row, computed by
/// folding compositions.
fn member(pair: &MatrixPair<FinPerm>, g: &FinPerm) -> bool {
    let eval = |row: &Vec<FinPerm>| row[1..].iter().fold(row[0].clone(), |acc, c| acc.compose(g).compose(c));
    pair.a().rows().iter().zip(pair.b().rows()).all(|(a, b)| eval(a) != eval(b))
}

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn hyperconnectedness() -> Outcome {
    let shape = PairShape { max_rows: 3, max_degree: 3, support: 8 };
    let mut r = rng(1);
    let pairs: Vec<_> = (0..1000).map(|_| (random_proper_pair(&mut r, shape), random_proper_pair(&mut r, shape))).collect();
    let start = Instant::now();
    let mut ok = 0;
    for (i, (p, q)) in pairs.iter().enumerate() {
        let (g, trace) = intersect_witness(p, q, &zariski_core::symw_oracle()).map_err(|e| format!("case {i}: {e}"))?;
        let bound: usize = p.total_degree() + q.total_degree();
        ensure(trace.steps.len() <= bound, format!("case {i}: {} steps > {bound}", trace.steps.len()))?;
        ensure(member(p, &g) && member(q, &g), format!("case {i}: {g} is not in both sets"))?;
        ok += 1;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(10), format!("took {elapsed:?}"))?;
    Ok(format!("{ok}/1000 intersections in {} ms", elapsed.as_millis()))
}

fn normalization() -> Outcome {
    let shape = PairShape { max_rows: 3, max_degree: 3, support: 6 };
    let adjuster = FinPerm::transposition(0, 1);
    let mut r = rng(2);
    let (mut agree, mut total, mut proper, mut steps) = (0u64, 0u64, 0, 0);
    for i in 0..200 {
        let pair = random_pair(&mut r, shape);
        let n = normalize_traced(&pair, &SymOmega, &adjuster).map_err(|e| e.to_string())?;
        if let NormalForm::Proper(p) = &n.form {
            proper += 1;
            for (a, b) in p.a().rows().iter().zip(p.b().rows()) {
                ensure(a.len() + b.len() > 2, format!("pair {i}: a row is constant on both sides"))?;
                ensure(a[0] != b[0], format!("pair {i}: a row has equal leading entries"))?;
            }
        }
        let mut prev = (n.initial_signature.clone(), pair.a().rows().iter().zip(pair.b().rows()).filter(|(a, b)| a[0] == b[0]).count());
        for s in &n.steps {
            let next = (s.signature.clone(), s.unsettled);
            ensure(next < prev, format!("pair {i}: measure {prev:?} -> {next:?}"))?;
            prev = next;
            steps += 1;
        }
        for _ in 0..1000 {
            let x = random_perm(&mut r, 7);
            total += 1;
            if member(&pair, &x) == n.form.contains(&SymOmega, &x) {
                agree += 1;
            }
        }
    }
    ensure(agree == total, format!("membership agreement {agree}/{total}"))?;
    Ok(format!("agreement {agree}/{total}, {proper} proper forms, {steps} steps all decreasing"))
}

fn separation() -> Outcome {
    const N: usize = 200;
    let start = Instant::now();
    let mut r = rng(3);
    let (mut cases, mut mismatches) = (0, 0);
    for m in 2..=5usize {
        for p in 1..m as u64 {
            for _ in 0..500 {
                let a = random_g_element(&mut r, m, p);
                let brute = solve_on_tm_brute(&a, p, m, N).map_err(|e| e.to_string())?;
                if solve_on_tm(&a, p, m, N).map_err(|e| e.to_string())? != brute {
                    mismatches += 1;
                }
                match finiteness_bound(&a, p, m).map_err(|e| e.to_string())? {
                    SolutionBound::FiniteCandidates(c) => {
                        ensure(brute.iter().all(|n| c.contains(n)), format!("m={m} p={p}: {brute:?} ⊄ {c:?}"))?
                    }
                    SolutionBound::AllEven => return Err(format!("m={m} p={p}: unexpected AllEven")),
                }
                cases += 1;
            }
        }
        let evens: Vec<usize> = (0..=N).step_by(2).collect();
        let id = GElement::identity();
        ensure(solve_on_tm_brute(&id, m as u64, m, N).unwrap() == evens, format!("m={m}: xᵐ = 1 not the even indices"))?;
        ensure(solve_on_tm(&id, m as u64, m, N).unwrap() == evens, format!("m={m}: closed form on xᵐ = 1"))?;
    }
    let elapsed = start.elapsed();
    ensure(mismatches == 0, format!("{mismatches} closed-form mismatches"))?;
    ensure(elapsed < Duration::from_secs(5), format!("took {elapsed:?}"))?;
    Ok(format!("{cases} random coefficients, 0 mismatches, torsion rows even, {} ms", elapsed.as_millis()))
}

fn reduction() -> Outcome {
    let s3 = FiniteGroupTable::builtin("S3").map_err(|e| e.to_string())?;
    let r = check_reduction(&s3, 3).map_err(|e| e.to_string())?;
    let expected_words = 6 + 36 * 2 + 216 * 4 + 1296 * 8;
    ensure(r.words == expected_words, format!("{} words, expected {expected_words}", r.words))?;
    ensure(r.mismatches.is_empty(), format!("{} mismatches, first {:?}", r.mismatches.len(), r.mismatches.first()))?;
    // spot check against direct evaluation in Sym(ω) on {0,1,2}
    let w = GroupWord::new(vec![FinPerm::transposition(0, 1); 3], vec![Sign::Pos, Sign::Neg]).unwrap();
    let pair = zariski_core::words::group_ineq_to_semigroup_pair(&w, &SymOmega).map_err(|e| e.to_string())?;
    for x in [FinPerm::identity(), FinPerm::transposition(0, 2), FinPerm::cycle(&[0, 1, 2]).unwrap()] {
        ensure(pair.holds(&SymOmega, &x) == !w.eval(&SymOmega, &x).is_identity(), "Sym(ω) spot check")?;
    }
    Ok(format!("{} words × 6 points, 0 mismatches", r.words))
}

fn commutative_identity() -> Outcome {
    let closed = |f: zariski_core::Result<zariski_core::SetFamily>| -> Result<_, String> {
        topology_close(&f.map_err(|e| e.to_string())?).map_err(|e| e.to_string())
    };
    for name in ["Z2", "Z3", "Z4", "Z5", "Z6"] {
        let g = FiniteGroupTable::builtin(name).unwrap();
        for d in 0..=2 {
            ensure(closed(group_family(&g, d))? == closed(semigroup_family(&g, d))?, format!("{name} d={d}: topologies differ"))?;
        }
    }
    let s3 = FiniteGroupTable::builtin("S3").unwrap();
    for d in 0..=2 {
        ensure(
            family_subset(&closed(semigroup_family(&s3, d))?, &closed(group_family(&s3, d))?).unwrap(),
            format!("S3 d={d}: semigroup topology not contained"),
        )?;
    }
    let mut checked = 0;
    for name in BUILTIN_NAMES {
        let g = FiniteGroupTable::builtin(name).unwrap();
        let top = if g.order() > 6 { 2 } else { 3 };
        for d in 0..top {
            let e = |x: zariski_core::Result<_>| x.map_err(|e: zariski_core::Error| e.to_string());
            ensure(family_subset(&e(semigroup_family(&g, d))?, &e(semigroup_family(&g, d + 1))?).unwrap(), format!("{name} semigroup d={d}"))?;
            ensure(family_subset(&e(group_family(&g, d))?, &e(group_family(&g, d + 1))?).unwrap(), format!("{name} group d={d}"))?;
            checked += 2;
        }
    }
    Ok(format!("Z2..Z6 equal, S3 contained, {checked} monotonicity checks"))
}

fn stabilizers_and_decomposition() -> Outcome {
    let mut stab = 0;
    let mut image: Vec<usize> = (0..5).collect();
    let mut perms = vec![];
    permute(&mut image, 0, &mut perms);
    for f in &perms {
        for x in 0..5 {
            for y in x + 1..5 {
                let setwise: BTreeSet<usize> = [f.apply(x), f.apply(y)].into();
                let expected = setwise == [x, y].into();
                ensure(stab_by_commutation(f, x, y).unwrap() == expected, format!("{f} on {{{x},{y}}}"))?;
                stab += 1;
            }
        }
    }
    let mut r = rng(6);
    let mut dec = 0;
    while dec < 500 {
        let (f, g, x) = (random_perm(&mut r, 7), random_perm(&mut r, 7), r.random_range(0..7));
        if f.apply(x) == x || g.apply(x) == x {
            continue;
        }
        let (phi, h) = maximal_decompose(&f, &g, x).map_err(|e| e.to_string())?;
        ensure(phi.compose(&f).compose(&h.invert()) == g, format!("φfh⁻¹ ≠ g for f={f} g={g}"))?;
        ensure(phi.apply(x) == x && h.apply(x) == x, format!("φ or h moves {x}"))?;
        dec += 1;
    }
    Ok(format!("stabilizers {stab}/1200, decompositions {dec}/500"))
}

fn permute(v: &mut Vec<usize>, k: usize, out: &mut Vec<FinPerm>) {
    if k == v.len() {
        out.push(FinPerm::from_pairs(v.iter().copied().enumerate()).unwrap());
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permute(v, k + 1, out);
        v.swap(k, i);
    }
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let input = dir.path().join("comm.json");
    std::fs::write(&input, r#"{"A": [[[[0,1],[1,0]], []]], "B": [[[], [[0,1],[1,0]]]]}"#).unwrap();
    let input = input.to_str().unwrap();
    let runs: Vec<Vec<&str>> = vec![
        vec!["normalize", "--random"],
        vec!["normalize", input],
        vec!["witness", "--random"],
        vec!["witness", input],
        vec!["intersect", "--random"],
        vec!["intersect", input, input],
        vec!["separate"],
        vec!["symcheck"],
        vec!["finite-check"],
        vec!["symcheck", "--format", "table"],
    ];
    for args in &runs {
        let run = || {
            Command::new(env!("CARGO_BIN_EXE_zariski"))
                .args(args)
                .args(["--seed", "42", "--no-timing"])
                .output()
                .map_err(|e| e.to_string())
        };
        let (a, b) = (run()?, run()?);
        ensure(a.status.success(), format!("{args:?} exited with {:?}", a.status.code()))?;
        ensure(a.stdout == b.stdout, format!("{args:?} differs between runs"))?;
    }
    Ok(format!("{} commands byte-identical across two runs", runs.len()))
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("hyperconnectedness certificate", hyperconnectedness),
        ("normalization soundness", normalization),
        ("separation dichotomy", separation),
        ("degree-3 reduction", reduction),
        ("commutative identity", commutative_identity),
        ("stabilizers and decomposition", stabilizers_and_decomposition),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(msg) => println!("criterion {}: PASS  {name}: {msg}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {msg}", i + 1);
            }
        }
    }
    println!("acceptance: {}/{} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}

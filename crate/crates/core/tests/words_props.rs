mod common;

use common::{all_perms, perm_on};
use proptest::prelude::*;
use zariski_core::words::group_ineq_to_semigroup_pair;
use zariski_core::{FinPerm, GroupWord, Sign, SymOmega};

/// `a₀ x^{ε₁} a₁ …` folded by hand.
fn eval_direct(coeffs: &[FinPerm], signs: &[Sign], x: &FinPerm) -> FinPerm {
    let xi = x.invert();
    let mut acc = coeffs[0].clone();
    for (c, s) in coeffs[1..].iter().zip(signs) {
        acc = acc.compose(if *s == Sign::Pos { x } else { &xi }).compose(c);
    }
    acc
}

fn eval_positive(coeffs: &[FinPerm], x: &FinPerm) -> FinPerm {
    eval_direct(coeffs, &vec![Sign::Pos; coeffs.len() - 1], x)
}

fn sign_patterns(n: usize) -> Vec<Vec<Sign>> {
    (0u32..1 << n)
        .map(|m| (0..n).map(|i| if m & (1 << i) != 0 { Sign::Neg } else { Sign::Pos }).collect())
        .collect()
}

#[test]
fn reduction_is_exact_over_s3() {
    let s3 = all_perms(3);
    let mut words = 0;
    for n in 0..=3usize {
        for signs in sign_patterns(n) {
            let mut idx = vec![0usize; n + 1];
            loop {
                let coeffs: Vec<FinPerm> = idx.iter().map(|&i| s3[i].clone()).collect();
                let w = GroupWord::new(coeffs.clone(), signs.clone()).unwrap();
                let r = group_ineq_to_semigroup_pair(&w, &SymOmega).unwrap();
                assert_eq!(r.lhs.degree() + r.rhs.degree(), n, "{w:?}");
                for x in &s3 {
                    let direct = !eval_direct(&coeffs, &signs, x).is_identity();
                    let reduced = eval_positive(r.lhs.coeffs(), x) != eval_positive(r.rhs.coeffs(), x);
                    assert_eq!(direct, reduced, "{w:?} at {x}");
                }
                words += 1;
                let Some(pos) = idx.iter().position(|&i| i + 1 < 6) else { break };
                idx[pos] += 1;
                idx[..pos].iter_mut().for_each(|i| *i = 0);
            }
        }
    }
    assert_eq!(words, 6 + 36 * 2 + 216 * 4 + 1296 * 8);
}

fn group_word(max_deg: usize) -> impl Strategy<Value = GroupWord<FinPerm>> {
    (0..=max_deg).prop_flat_map(|n| {
        (
            proptest::collection::vec(perm_on(7), n + 1),
            proptest::collection::vec(prop_oneof![Just(Sign::Pos), Just(Sign::Neg)], n),
        )
            .prop_map(|(c, s)| GroupWord::new(c, s).unwrap())
    })
}

proptest! {
    #[test]
    fn reduction_is_exact_on_sym_omega(w in group_word(3), x in perm_on(9)) {
        let r = group_ineq_to_semigroup_pair(&w, &SymOmega).unwrap();
        let direct = !eval_direct(w.coeffs(), w.signs(), &x).is_identity();
        prop_assert_eq!(direct, r.holds(&SymOmega, &x));
        prop_assert!(r.lhs.degree() + r.rhs.degree() <= w.degree());
    }

    #[test]
    fn formal_inverse_inverts_values(w in group_word(5), x in perm_on(9)) {
        let inv = w.formal_inverse(&SymOmega);
        prop_assert_eq!(inv.degree(), w.degree());
        prop_assert_eq!(inv.eval(&SymOmega, &x), w.eval(&SymOmega, &x).invert());
    }

    #[test]
    fn group_eval_matches_direct(w in group_word(5), x in perm_on(9)) {
        prop_assert_eq!(w.eval(&SymOmega, &x), eval_direct(w.coeffs(), w.signs(), &x));
    }

    #[test]
    fn uniform_signs_reduce_at_any_degree(w in group_word(6), x in perm_on(9)) {
        let uniform = w.signs().iter().all(|&s| s == Sign::Pos) || w.signs().iter().all(|&s| s == Sign::Neg);
        let r = group_ineq_to_semigroup_pair(&w, &SymOmega);
        if uniform || w.degree() <= 3 {
            let r = r.unwrap();
            prop_assert_eq!(!w.eval(&SymOmega, &x).is_identity(), r.holds(&SymOmega, &x));
        } else {
            prop_assert!(r.is_err());
        }
    }
}

mod common;

use common::*;
use hypersemi_core::dsl::{
    evaluate, hunt, parse, AlphabetPolicy, Binder, Conjecture, DslError, Formula, HuntOptions,
    Relation, Term, Verdict,
};
use hypersemi_core::{Error, IdealClass, Subset};
use proptest::prelude::*;

fn reparse(text: &str) -> Conjecture {
    let c = parse(text).unwrap_or_else(|e| panic!("{text}: {e}"));
    let printed = c.to_string();
    let again = parse(&printed).unwrap_or_else(|e| panic!("{printed}: {e}"));
    assert_eq!(again, c, "{text} printed as {printed}");
    assert_eq!(again.to_string(), printed);
    c
}

#[test]
fn corpus_round_trips() {
    assert!(CORPUS.len() >= 20);
    let mut sorts = std::collections::HashSet::new();
    let mut has = [false; 8];
    for text in CORPUS {
        let c = reparse(text);
        sorts.extend(c.binders.iter().map(|b| b.sort));
        let printed = c.to_string();
        for (i, needle) in ["*", "&cap", "&cup", "H", "R(", "L(", "I(", "!"]
            .iter()
            .enumerate()
        {
            has[i] |= printed.contains(needle);
        }
    }
    assert_eq!(sorts.len(), IdealClass::ALL.len());
    assert!(has.iter().all(|&b| b));
}

#[test]
fn printing_respects_precedence() {
    assert_eq!(
        parse("forall A:subset, B:subset : A &cup B &cap A*B = A")
            .unwrap()
            .to_string(),
        "forall A:subset, B:subset : A &cup B &cap A*B = A"
    );
    assert_eq!(
        parse("forall A:subset, B:subset : (A &cup B)*A = A*(B*A)")
            .unwrap()
            .to_string(),
        "forall A:subset, B:subset : (A &cup B)*A = A*(B*A)"
    );
    assert_eq!(
        parse("forall A:subset : (A <= A | A = A) & !(A <= H)")
            .unwrap()
            .to_string(),
        "forall A:subset : (A <= A | A = A) & !A <= H"
    );
}

#[test]
fn errors_carry_positions() {
    match parse("forall A:right : A* <= A") {
        Err(DslError::Syntax { line, column, .. }) => assert_eq!((line, column), (1, 19)),
        other => panic!("{other:?}"),
    }
    match parse("forall A:right :\n  A <= B") {
        Err(DslError::Sort { line, column, .. }) => assert_eq!((line, column), (2, 8)),
        other => panic!("{other:?}"),
    }
    assert!(matches!(
        parse("forall A:lefty : A = A"),
        Err(DslError::Sort { .. })
    ));
    assert!(matches!(
        parse("forall A:left, A:right : A = A"),
        Err(DslError::Sort { .. })
    ));
    assert!(matches!(
        parse("forall H:left : H = H"),
        Err(DslError::Sort { .. })
    ));
    assert!(matches!(
        parse("forall A:left : A = A extra"),
        Err(DslError::Syntax { .. })
    ));
}

fn class_oracle(h: &hypersemi_core::Hypergroupoid, class: IdealClass, a: Subset) -> bool {
    let f = full(h);
    let right = right_ideal_oracle(h, a);
    let left = left_ideal_oracle(h, a);
    match class {
        IdealClass::Subset => true,
        IdealClass::Right => right,
        IdealClass::Left => left,
        IdealClass::TwoSided => right && left,
        IdealClass::Bi => chain(h, &[a, f, a]).is_subset_of(a),
        IdealClass::Quasi => {
            (product_by_membership(h, a, f) & product_by_membership(h, f, a)).is_subset_of(a)
        }
    }
}

#[test]
fn sorted_domains_match_predicates() {
    let defining = [
        (IdealClass::Subset, "forall A:subset : A <= H"),
        (IdealClass::Right, "forall A:right : A*H <= A"),
        (IdealClass::Left, "forall A:left : H*A <= A"),
        (IdealClass::TwoSided, "forall A:ideal : H*A &cup A*H <= A"),
        (IdealClass::Bi, "forall A:bi : A*H*A <= A"),
        (IdealClass::Quasi, "forall A:quasi : A*H &cap H*A <= A"),
    ];
    for h in hypersemigroups_up_to_3().iter().step_by(11) {
        for (class, text) in defining {
            let expected = nonempty(h.order())
                .into_iter()
                .filter(|&a| class_oracle(h, class, a))
                .count() as u64;
            match evaluate(h, &parse(text).unwrap()).unwrap() {
                Verdict::Holds { assignments } => assert_eq!(assignments, expected, "{h} {class}"),
                Verdict::Refuted(c) => panic!("{text} refuted: {c}"),
            }
        }
    }
}

#[test]
fn idempotence_hunt_finds_replayable_counterexample() {
    let c = parse("forall A:right : A*A = A").unwrap();
    let report = hunt(&c, &HuntOptions::up_to(2)).unwrap();
    let cx = report.counterexample.clone().expect("refuted");
    assert!(cx.replays(&c).unwrap());
    assert!(associative_oracle(&cx.structure));
    let (a, _) = &cx.assignment[0];
    assert_eq!(a, "A");
    let value = cx.assignment[0].1;
    assert!(right_ideal_oracle(&cx.structure, value));
    assert_ne!(product_by_membership(&cx.structure, value, value), value);

    // the constant table is among the structures searched and is refuted by A={0,1}
    let h = h2c();
    assert!(naive_associative(2, &nonempty(2)).contains(&h));
    let on_h2c = evaluate(&h, &c).unwrap().counterexample().unwrap();
    assert_eq!(on_h2c.assignment[0].1, s(&[0, 1]));
    assert!(report.to_string().contains("counterexample found"));
}

#[test]
fn product_inclusion_is_exhausted() {
    let c = parse("forall A:right, B:left : A*B <= A &cap B").unwrap();
    let report = hunt(&c, &HuntOptions::up_to(2)).unwrap();
    assert!(report.exhausted());
    for h in naive_associative(2, &nonempty(2)) {
        assert!(evaluate(&h, &c).unwrap().holds());
    }
    assert_eq!(report.runs[1].stats.associative_count, 30);
}

fn never_refuted(text: &str, regular_only: bool) {
    let c = parse(text).unwrap();
    let opts = HuntOptions {
        regular_only,
        ..HuntOptions::up_to(3)
    };
    let report = hunt(&c, &opts).unwrap();
    assert!(report.exhausted(), "{text}:\n{report}");
    assert_eq!(report.runs.len(), 3);
    assert_eq!(report.runs[2].stats.total_tables, 7u128.pow(9));
}

#[test]
fn bi_ideal_products_never_refuted() {
    never_refuted("forall C:right, D:subset : (C*D)*H*(C*D) <= C*D", false);
    never_refuted("forall C:subset, D:left : (C*D)*H*(C*D) <= C*D", false);
}

#[test]
fn right_left_meet_never_refuted() {
    never_refuted("forall A:right, B:left : A*B <= A &cap B", false);
}

#[test]
fn regular_ideal_conditions_never_refuted() {
    never_refuted("forall A:right : A*A = A", true);
    never_refuted("forall B:left : B*B = B", true);
    never_refuted("forall A:right, B:left : (A*B)*H &cap H*(A*B) <= A*B", true);
    never_refuted("forall A:right, B:left : A*B = A &cap B", true);
    never_refuted("forall A:subset : A <= A*H*A", true);
}

#[test]
fn restricted_runs_are_labelled() {
    let c = parse("forall A:right, B:left : A*B <= A &cap B").unwrap();
    let opts = HuntOptions {
        alphabet: AlphabetPolicy::RestrictFrom(3),
        canonicalize: true,
        ..HuntOptions::up_to(3)
    };
    let report = hunt(&c, &opts).unwrap();
    assert!(report.exhausted());
    let text = report.to_string();
    assert!(
        text.contains("order 3") && text.contains("restricted to"),
        "{text}"
    );
}

const NAMES: &[&str] = &["A", "B", "Xy", "q_1"];

fn arb_term(vars: usize) -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![
        (0..vars).prop_map(|i| Term::var(NAMES[i])),
        Just(Term::Full),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Term::product(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Term::union(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Term::intersection(a, b)),
            inner.clone().prop_map(|t| Term::RightIdeal(Box::new(t))),
            inner.clone().prop_map(|t| Term::LeftIdeal(Box::new(t))),
            inner.prop_map(|t| Term::TwoSidedIdeal(Box::new(t))),
        ]
    })
}

fn arb_formula(vars: usize) -> impl Strategy<Value = Formula> {
    let atom = (arb_term(vars), any::<bool>(), arb_term(vars)).prop_map(|(l, sub, r)| {
        Formula::atom(
            l,
            if sub {
                Relation::Subset
            } else {
                Relation::Equal
            },
            r,
        )
    });
    atom.prop_recursive(3, 12, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|f| Formula::Not(Box::new(f))),
            (inner.clone(), inner.clone())
                .prop_map(|(a, b)| Formula::And(Box::new(a), Box::new(b))),
            (inner.clone(), inner).prop_map(|(a, b)| Formula::Or(Box::new(a), Box::new(b))),
        ]
    })
}

fn arb_conjecture() -> impl Strategy<Value = Conjecture> {
    (1..=NAMES.len()).prop_flat_map(|k| {
        (
            prop::collection::vec(prop::sample::select(IdealClass::ALL.to_vec()), k),
            arb_formula(k),
        )
            .prop_map(|(sorts, body)| Conjecture {
                binders: sorts
                    .into_iter()
                    .enumerate()
                    .map(|(i, sort)| Binder {
                        name: NAMES[i].to_string(),
                        sort,
                    })
                    .collect(),
                body,
            })
    })
}

proptest! {
    #[test]
    fn printed_asts_parse_back(c in arb_conjecture()) {
        let printed = c.to_string();
        let parsed = parse(&printed);
        prop_assert_eq!(parsed.as_ref().ok(), Some(&c), "{}: {:?}", printed, parsed);
    }

    #[test]
    fn refutations_replay(idx in 0usize..28_142, c in arb_conjecture()) {
        let all = hypersemigroups_up_to_3();
        let h = &all[idx % all.len()];
        let verdict = match evaluate(h, &c) {
            Ok(v) => v,
            Err(DslError::Eval { source: Error::EmptyOperand { .. }, .. }) => return Ok(()),
            Err(e) => panic!("{c}: {e}"),
        };
        if let Verdict::Refuted(cx) = verdict {
            prop_assert!(cx.replays(&c).unwrap());
            for (binder, (_, value)) in c.binders.iter().zip(&cx.assignment) {
                prop_assert!(class_oracle(h, binder.sort, *value));
            }
        }
    }
}

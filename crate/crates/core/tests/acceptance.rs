//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

mod common;

use std::process::ExitCode;
use std::sync::Mutex;
use std::time::Instant;

use common::*;
use hypersemi_core::dsl::{hunt, parse, HuntOptions};
use hypersemi_core::{
    as_semigroup, enumerate, enumerate_parallel, generated_ideals, is_bi_ideal, is_ideal,
    is_idempotent, is_left_ideal, is_quasi_ideal, is_regular, is_right_ideal, verify_corollary13,
    verify_corollary14, verify_theorem12, verify_theorem9, EnumerationSpec, Hypergroupoid, Magma,
    Subset,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn order_2_sweep() -> Outcome {
    let start = Instant::now();
    let naive = naive_tables(2, &nonempty(2));
    let naive_assoc: Vec<Hypergroupoid> = naive
        .iter()
        .filter(|h| associative_oracle(h))
        .cloned()
        .collect();

    let all = enumerate(&EnumerationSpec::new(2), |_| {}).map_err(|e| e.to_string())?;
    let mut pruned = Vec::new();
    let stats = enumerate(&EnumerationSpec::new(2).associative_only(), |h| {
        pruned.push(h.clone())
    })
    .map_err(|e| e.to_string())?;
    if all.visited != 81 || naive.len() != 81 {
        return Err(format!(
            "expected 81 tables, enumerated {} (naive {})",
            all.visited,
            naive.len()
        ));
    }
    if pruned != naive_assoc || stats.associative_count as usize != naive_assoc.len() {
        return Err(format!(
            "pruned count {} differs from naive count {}",
            stats.associative_count,
            naive_assoc.len()
        ));
    }
    let mut violations = 0;
    for h in &pruned {
        if !verify_theorem12(h).map_err(|e| e.to_string())?.holds {
            violations += 1;
        }
    }
    let elapsed = start.elapsed();
    if violations > 0 {
        return Err(format!(
            "{violations} regularity/ideal-condition equivalence violations"
        ));
    }
    if elapsed.as_secs_f64() >= 1.0 {
        return Err(format!("took {elapsed:?}, budget 1 s"));
    }
    Ok(format!(
        "81 tables, {} associative (naive filter {}), equivalence holds on all, {elapsed:.2?}",
        pruned.len(),
        naive_assoc.len()
    ))
}

/// Bi-ideal factorization from first principles: closures for R/L, membership product.
fn factorization_failures(h: &Hypergroupoid) -> usize {
    let f = full(h);
    let subsets = nonempty(h.order());
    let rights: Vec<Subset> = subsets
        .iter()
        .copied()
        .filter(|&a| right_ideal_oracle(h, a))
        .collect();
    let lefts: Vec<Subset> = subsets
        .iter()
        .copied()
        .filter(|&a| left_ideal_oracle(h, a))
        .collect();
    let bi = |b: Subset| chain(h, &[b, f, b]).is_subset_of(b);
    let mut failures = 0;
    for &b in subsets.iter().filter(|&&b| bi(b)) {
        let r = closure(h, b, |c| right_ideal_oracle(h, c));
        let l = closure(h, b, |c| left_ideal_oracle(h, c));
        failures += (product_by_membership(h, r, l) != b) as usize;
    }
    for &c in &rights {
        for &d in &lefts {
            failures += !bi(product_by_membership(h, c, d)) as usize;
        }
    }
    failures
}

fn bi_ideal_sweep() -> Outcome {
    let start = Instant::now();
    let mut small = Vec::new();
    for n in 1..=2 {
        enumerate(&EnumerationSpec::new(n).associative_only(), |h| {
            small.push(h.clone())
        })
        .map_err(|e| e.to_string())?;
    }
    let order3 = Mutex::new(Vec::new());
    let stats = enumerate_parallel(&EnumerationSpec::new(3).associative_only(), |h| {
        if regular_oracle(h) {
            order3.lock().unwrap().push(h.clone());
        }
    })
    .map_err(|e| e.to_string())?;
    if stats.total_tables < 1_000_000 {
        return Err(format!(
            "order-3 run covered only {} tables",
            stats.total_tables
        ));
    }
    let regular_small: Vec<_> = small.into_iter().filter(regular_oracle).collect();
    let order3 = order3.into_inner().unwrap();
    let mut violations = 0;
    for h in regular_small.iter().chain(&order3) {
        violations += factorization_failures(h);
        if !verify_theorem9(h).map_err(|e| e.to_string())?.holds {
            violations += 1;
        }
    }
    if violations > 0 {
        return Err(format!("{violations} violations"));
    }
    Ok(format!(
        "{} regular of order <= 2, {} regular of order 3 from {} tables covered ({} associative), 0 violations, {:.2?}",
        regular_small.len(),
        order3.len(),
        stats.total_tables,
        stats.associative_count,
        start.elapsed()
    ))
}

/// All nonempty triples of `h`; returns how many were checked.
fn triples_associate(h: &Hypergroupoid) -> Result<usize, String> {
    let subsets = nonempty(h.order());
    for &a in &subsets {
        for &b in &subsets {
            for &c in &subsets {
                let ab_c = h.product(h.product(a, b).unwrap(), c).unwrap();
                let a_bc = h.product(a, h.product(b, c).unwrap()).unwrap();
                if ab_c != a_bc || ab_c != chain(h, &[a, b, c]) {
                    return Err(format!("{h}: A={a} B={b} C={c}"));
                }
            }
        }
    }
    Ok(subsets.len().pow(3))
}

fn subset_associativity() -> Outcome {
    let mut triples = 0;
    let order2 = naive_associative(2, &nonempty(2));
    for h in &order2 {
        triples += triples_associate(h)?;
    }
    let mut order3 = 0;
    for h in hypersemigroups_up_to_3().iter().filter(|h| h.order() == 3) {
        triples += triples_associate(h)?;
        order3 += 1;
    }

    let h = h2m();
    let subsets = nonempty(2);
    let mut broken = None;
    'search: for &a in &subsets {
        for &b in &subsets {
            for &c in &subsets {
                let left = product_by_membership(&h, product_by_membership(&h, a, b), c);
                let right = product_by_membership(&h, a, product_by_membership(&h, b, c));
                if left != right {
                    broken = Some((a, b, c, left, right));
                    break 'search;
                }
            }
        }
    }
    let (a, b, c, left, right) = broken.ok_or("non-associative fixture has no failing triple")?;
    if h.product(h.product(a, b).unwrap(), c).unwrap()
        == h.product(a, h.product(b, c).unwrap()).unwrap()
    {
        return Err("library product disagrees with the brute-force failing triple".into());
    }
    Ok(format!(
        "{} order-2 (27 triples each) and {order3} order-3 (343 triples each) hypersemigroups, {triples} triples equal; non-associative fixture fails at A={a} B={b} C={c}: {left} vs {right}",
        order2.len()
    ))
}

fn regularity_reduction() -> Outcome {
    let mut regular = 0;
    let all = hypersemigroups_up_to_3();
    for h in all {
        let fast = is_regular(h).map_err(|e| e.to_string())?.is_regular();
        if fast != regular_oracle(h) {
            return Err(format!("disagreement on {h}"));
        }
        regular += fast as usize;
    }
    Ok(format!(
        "{} hypersemigroups of order <= 3, {regular} regular, 0 disagreements",
        all.len()
    ))
}

fn generated_ideal_minimality() -> Outcome {
    let mut seeds = 0;
    for h in hypersemigroups_up_to_3() {
        for a in nonempty(h.order()) {
            seeds += 1;
            let g = generated_ideals(h, a).map_err(|e| e.to_string())?;
            let r = closure(h, a, |c| right_ideal_oracle(h, c));
            let l = closure(h, a, |c| left_ideal_oracle(h, c));
            let i = closure(h, a, |c| {
                right_ideal_oracle(h, c) && left_ideal_oracle(h, c)
            });
            if (g.right, g.left, g.two_sided) != (r, l, i) {
                return Err(format!(
                    "{h}, seed {a}: formulas {g:?}, closures ({r}, {l}, {i})"
                ));
            }
        }
    }
    Ok(format!("{seeds} (structure, seed) pairs, 0 disagreements"))
}

/// Plain semigroup predicates computed from the multiplication table.
struct Classical<'a> {
    n: usize,
    op: &'a [usize],
}

impl Classical<'_> {
    fn mul(&self, a: usize, b: usize) -> usize {
        self.op[a * self.n + b]
    }
    fn product(&self, a: Subset, b: Subset) -> Subset {
        a.iter()
            .flat_map(|x| b.iter().map(move |y| (x, y)))
            .map(|(x, y)| self.mul(x, y))
            .collect()
    }
    fn all(&self) -> Subset {
        (0..self.n).collect()
    }
    fn right(&self, a: Subset) -> bool {
        self.product(a, self.all()).is_subset_of(a)
    }
    fn left(&self, a: Subset) -> bool {
        self.product(self.all(), a).is_subset_of(a)
    }
    fn bi(&self, a: Subset) -> bool {
        self.product(self.product(a, self.all()), a).is_subset_of(a)
    }
    fn quasi(&self, a: Subset) -> bool {
        (self.product(a, self.all()) & self.product(self.all(), a)).is_subset_of(a)
    }
    fn regular(&self) -> bool {
        (0..self.n).all(|x| (0..self.n).any(|y| self.mul(self.mul(x, y), x) == x))
    }
}

fn semigroup_bridge() -> Outcome {
    let n = 2;
    let mut operations = 0;
    let mut associative = 0;
    let mut regular = 0;
    for code in 0..(1usize << 4) {
        operations += 1;
        let op: Vec<usize> = (0..4).map(|i| (code >> i) & 1).collect();
        let cl = Classical { n, op: &op };
        let assoc = (0..n).all(|x| {
            (0..n).all(|y| (0..n).all(|z| cl.mul(cl.mul(x, y), z) == cl.mul(x, cl.mul(y, z))))
        });
        if !assoc {
            continue;
        }
        associative += 1;
        let h = Hypergroupoid::new(n, op.iter().map(|&c| Subset::singleton(c)).collect())
            .map_err(|e| e.to_string())?;
        if !h.is_hypersemigroup() {
            return Err(format!("{h} is associative but not a hypersemigroup"));
        }
        let m = as_semigroup(&h).ok_or("singleton-celled table has no semigroup")?;
        if m != Magma::new(n, op.clone()).map_err(|e| e.to_string())? {
            return Err(format!("{h}: semigroup table round trip failed"));
        }
        for a in nonempty(n) {
            let e = |r: hypersemi_core::Result<bool>| r.map_err(|e| e.to_string());
            let pairs = [
                (e(is_right_ideal(&h, a))?, cl.right(a)),
                (e(is_left_ideal(&h, a))?, cl.left(a)),
                (e(is_ideal(&h, a))?, cl.right(a) && cl.left(a)),
                (e(is_bi_ideal(&h, a))?, cl.bi(a)),
                (e(is_quasi_ideal(&h, a))?, cl.quasi(a)),
                (e(is_idempotent(&h, a))?, cl.product(a, a) == a),
            ];
            if pairs.iter().any(|(x, y)| x != y) {
                return Err(format!("{h}: predicate disagreement on {a}"));
            }
        }
        let reg = is_regular(&h).map_err(|e| e.to_string())?.is_regular();
        if reg != cl.regular() {
            return Err(format!("{h}: regularity disagreement"));
        }
        if !verify_corollary14(&h).map_err(|e| e.to_string())?.holds {
            return Err(format!("{h}: regularity characterization fails"));
        }
        if reg {
            regular += 1;
            if !verify_corollary13(&h).map_err(|e| e.to_string())?.holds {
                return Err(format!("{h}: bi-ideal characterization fails"));
            }
        }
    }
    Ok(format!(
        "{operations} operations, {associative} associative (brute force), {regular} regular; all predicates agree"
    ))
}

fn dsl_regression() -> Outcome {
    for text in CORPUS {
        let c = parse(text).map_err(|e| format!("{text}: {e}"))?;
        let again = parse(&c.to_string()).map_err(|e| format!("{c}: {e}"))?;
        if again != c {
            return Err(format!("round trip changed {text}"));
        }
    }
    let run = |text: &str, max_order: usize| {
        let c = parse(text).map_err(|e| e.to_string())?;
        hunt(&c, &HuntOptions::up_to(max_order)).map_err(|e| e.to_string())
    };
    let idempotence = run("forall A:right : A*A = A", 2)?;
    match &idempotence.counterexample {
        Some(cx)
            if cx
                .replays(&parse("forall A:right : A*A = A").unwrap())
                .unwrap_or(false) => {}
        _ => return Err("right-ideal idempotence was not refuted at order 2".into()),
    }
    if !run("forall A:right, B:left : A*B <= A &cap B", 2)?.exhausted() {
        return Err("right*left inclusion refuted at order 2".into());
    }
    let mut alphabets = Vec::new();
    for text in [
        "forall C:right, D:subset : (C*D)*H*(C*D) <= C*D",
        "forall C:subset, D:left : (C*D)*H*(C*D) <= C*D",
        "forall A:right, B:left : A*B <= A &cap B",
    ] {
        let report = run(text, 3)?;
        if !report.exhausted() {
            return Err(format!("`{text}` refuted:\n{report}"));
        }
        alphabets.push(report.runs[2].alphabet.describe());
    }
    alphabets.dedup();
    Ok(format!(
        "{} conjectures round-trip; idempotence refuted at order 2; inclusion exhausted at order 2; bi-ideal products and right/left meet exhausted at order 3 ({})",
        CORPUS.len(),
        alphabets.join(", ")
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("order-2 exhaustive sweep", order_2_sweep),
        ("bi-ideal characterization sweep", bi_ideal_sweep),
        ("subset product associativity", subset_associativity),
        ("regularity reduction oracle", regularity_reduction),
        (
            "generated-ideal minimality oracle",
            generated_ideal_minimality,
        ),
        ("semigroup bridge", semigroup_bridge),
        ("conjecture language regression", dsl_regression),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("[PASS] criterion {}: {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] criterion {}: {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

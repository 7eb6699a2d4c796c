//! Brute-force oracles shared by the integration tests. Everything here is
//! written from the definitions, element by element, without calling the
//! library's product, ideal, regularity or enumeration code.

#![allow(dead_code)]

use std::sync::OnceLock;

use hypersemi_core::{enumerate, EnumerationSpec, Hypergroupoid, Subset};

/// Conjectures covering every operator and sort.
pub const CORPUS: &[&str] = &[
    "forall A:right : A*A = A",
    "forall A:right, B:left : A*B <= A &cap B",
    "forall B:bi : B*H*B <= B",
    "forall Q:quasi : Q*H &cap H*Q <= Q",
    "forall A:ideal : H*A &cup A*H <= A",
    "forall A:subset : A <= R(A)",
    "forall A:subset : A <= L(A) &cap R(A)",
    "forall A:subset : R(A) &cup L(A) <= I(A)",
    "forall C:right, D:subset : C*D*H*(C*D) <= C*D",
    "forall C:subset, D:left : (C*D)*H*(C*D) <= C*D",
    "forall A:right, B:left : !(A &cap B <= A*B) | A*B = A &cap B",
    "forall A:left, B:left : A &cup B = B &cup A & A &cap B <= A",
    "forall X:subset, Y:subset, Z:subset : X*(Y*Z) = (X*Y)*Z",
    "forall X:subset, Y:subset : X*(Y &cup H) = X*H",
    "forall A:quasi, B:bi : !A <= B | !!(B <= A)",
    "forall A:subset : I(R(L(A))) = I(A)",
    "forall A:subset : (A &cup A*H) &cap (A &cup H*A) <= I(A)",
    "forall A1:right, b_2:left : A1*b_2 <= A1 & A1*b_2 <= b_2",
    "forall A:bi, B:quasi, C:ideal : (A <= B | B <= C) & !(C = A)",
    "forall A:subset : R(A)*L(A) <= R(A) &cap L(A)",
    "forall A:subset : A*(A &cap H) &cup A = A*A &cup A",
    "forall A:right :\n  A*H <= A\n  & A <= A",
    "forall A:subset : ((A)) = A",
];

pub fn s(elems: &[usize]) -> Subset {
    elems.iter().copied().collect()
}

pub fn h2l() -> Hypergroupoid {
    Hypergroupoid::new(2, vec![s(&[0]), s(&[0]), s(&[1]), s(&[1])]).unwrap()
}
pub fn h2f() -> Hypergroupoid {
    Hypergroupoid::new(2, vec![s(&[0, 1]); 4]).unwrap()
}
pub fn h2c() -> Hypergroupoid {
    Hypergroupoid::new(2, vec![s(&[0]); 4]).unwrap()
}
pub fn h2m() -> Hypergroupoid {
    Hypergroupoid::new(2, vec![s(&[0]), s(&[0, 1]), s(&[1]), s(&[0])]).unwrap()
}

pub fn nonempty(order: usize) -> Vec<Subset> {
    (1u16..(1 << order)).map(Subset::from_bits).collect()
}

/// `A*B` by membership: `x` is in it iff `x ∈ a∘b` for some `a∈A`, `b∈B`.
pub fn product_by_membership(h: &Hypergroupoid, a: Subset, b: Subset) -> Subset {
    let n = h.order();
    let mut out = Vec::new();
    for x in 0..n {
        let hit = (0..n)
            .any(|p| a.contains(p) && (0..n).any(|q| b.contains(q) && h.cell(p, q).contains(x)));
        if hit {
            out.push(x);
        }
    }
    out.into_iter().collect()
}

pub fn chain(h: &Hypergroupoid, factors: &[Subset]) -> Subset {
    let mut acc = factors[0];
    for &f in &factors[1..] {
        acc = product_by_membership(h, acc, f);
    }
    acc
}

pub fn full(h: &Hypergroupoid) -> Subset {
    Subset::from_bits(((1u32 << h.order()) - 1) as u16)
}

/// `{x}*(y∘z) = (x∘y)*{z}` for every triple, via the membership product.
pub fn associative_oracle(h: &Hypergroupoid) -> bool {
    let n = h.order();
    (0..n).all(|x| {
        (0..n).all(|y| {
            (0..n).all(|z| {
                product_by_membership(h, Subset::singleton(x), h.cell(y, z))
                    == product_by_membership(h, h.cell(x, y), Subset::singleton(z))
            })
        })
    })
}

pub fn right_ideal_oracle(h: &Hypergroupoid, a: Subset) -> bool {
    let n = h.order();
    a.iter()
        .all(|x| (0..n).all(|y| h.cell(x, y).is_subset_of(a)))
}

pub fn left_ideal_oracle(h: &Hypergroupoid, a: Subset) -> bool {
    let n = h.order();
    a.iter()
        .all(|x| (0..n).all(|y| h.cell(y, x).is_subset_of(a)))
}

/// Intersection of all nonempty subsets satisfying `pred` that contain `seed`.
pub fn closure(h: &Hypergroupoid, seed: Subset, pred: impl Fn(Subset) -> bool) -> Subset {
    nonempty(h.order())
        .into_iter()
        .filter(|&c| seed.is_subset_of(c) && pred(c))
        .fold(full(h), |acc, c| acc & c)
}

/// `A ⊆ A*H*A` for every nonempty `A`.
pub fn regular_oracle(h: &Hypergroupoid) -> bool {
    let f = full(h);
    nonempty(h.order())
        .into_iter()
        .all(|a| a.is_subset_of(chain(h, &[a, f, a])))
}

/// Every table over `alphabet` by an odometer, in row-major lexicographic order.
pub fn naive_tables(order: usize, alphabet: &[Subset]) -> Vec<Hypergroupoid> {
    let cells = order * order;
    let mut digits = vec![0usize; cells];
    let mut out = Vec::new();
    loop {
        let table = digits.iter().map(|&d| alphabet[d]).collect();
        out.push(Hypergroupoid::new(order, table).unwrap());
        let mut i = cells;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < alphabet.len() {
                break;
            }
            digits[i] = 0;
        }
    }
}

pub fn naive_associative(order: usize, alphabet: &[Subset]) -> Vec<Hypergroupoid> {
    naive_tables(order, alphabet)
        .into_iter()
        .filter(associative_oracle)
        .collect()
}

/// Every hypersemigroup of order 1..=3 (cached; produced by the pruned enumerator,
/// which the enumeration tests check against [`naive_associative`]).
pub fn hypersemigroups_up_to_3() -> &'static [Hypergroupoid] {
    static CACHE: OnceLock<Vec<Hypergroupoid>> = OnceLock::new();
    CACHE.get_or_init(|| {
        let mut out = Vec::new();
        for n in 1..=3 {
            enumerate(&EnumerationSpec::new(n).associative_only(), |h| {
                out.push(h.clone())
            })
            .unwrap();
        }
        out
    })
}

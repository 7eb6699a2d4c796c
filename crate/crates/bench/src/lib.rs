//! Fixtures shared by the benchmarks.

use hypersemi_core::{Hypergroupoid, Subset};

/// A fixed order-4 hypersemigroup with mixed cell sizes: the first one the
/// associative enumeration reaches whose cells are not all singletons and
/// that is not a constant table.
pub fn order_4_sample() -> Hypergroupoid {
    let mut found = None;
    let spec = hypersemi_core::EnumerationSpec::new(4)
        .associative_only()
        .with_alphabet(hypersemi_core::Alphabet::singletons_and_full(4));
    let _ = hypersemi_core::enumerate_until(&spec, |h| {
        let sizes: Vec<usize> = h.cells().iter().map(|c| c.len()).collect();
        if sizes.iter().any(|&s| s > 1)
            && sizes.contains(&1)
            && h.cells().iter().any(|c| *c != h.cell(0, 0))
        {
            found = Some(h.clone());
            return std::ops::ControlFlow::Break(());
        }
        std::ops::ControlFlow::Continue(())
    });
    found.expect("the restricted order-4 space contains such a table")
}

/// Every nonempty subset of an order-`n` carrier.
pub fn subsets(order: usize) -> Vec<Subset> {
    Subset::all_nonempty(order).collect()
}

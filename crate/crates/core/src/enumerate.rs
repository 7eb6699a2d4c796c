//! Exhaustive generation of small hypergroupoids.
//!
//! Tables are filled cell by cell in row-major order, each cell drawn from an
//! alphabet of nonempty subsets in ascending mask order, so tables are
//! produced in lexicographic order. With associativity pruning, each
//! instance of `{x}*(y∘z) = (x∘y)*{z}` is tested as soon as every cell it
//! reads is filled, and the whole subtree is cut on failure.

use std::ops::ControlFlow;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::hypergroupoid::{AssociativityWitness, Hypergroupoid};
use crate::regularity::is_regular;
use crate::subset::{Subset, ORDER_CAP};

/// Largest order accepted with the full cell alphabet.
pub const MAX_FULL_ALPHABET_ORDER: usize = 4;
/// Largest order accepted with `canonicalize`; relabelings are tried one by one.
pub const MAX_CANONICAL_ORDER: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Filter {
    All,
    AssociativeOnly,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Alphabet {
    /// Every nonempty subset of the carrier.
    AllNonempty,
    /// Only these cell values.
    Restricted(Vec<Subset>),
}

impl Alphabet {
    /// Singletons plus the full set, which is closed under relabeling.
    pub fn singletons_and_full(order: usize) -> Alphabet {
        let mut cells: Vec<Subset> = (0..order).map(Subset::singleton).collect();
        if order > 1 {
            cells.push(Subset::full(order));
        }
        Alphabet::Restricted(cells)
    }

    /// Cells of exactly one element: enumerates ordinary magmas.
    pub fn singletons(order: usize) -> Alphabet {
        Alphabet::Restricted((0..order).map(Subset::singleton).collect())
    }

    pub fn describe(&self) -> String {
        match self {
            Alphabet::AllNonempty => "all nonempty subsets".to_string(),
            Alphabet::Restricted(cells) => {
                let parts: Vec<String> = cells.iter().map(|c| c.to_string()).collect();
                format!("restricted to {}", parts.join(" "))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EnumerationSpec {
    pub order: usize,
    pub filter: Filter,
    pub canonicalize: bool,
    pub alphabet: Alphabet,
}

impl EnumerationSpec {
    /// Every table of the given order, full alphabet, no canonicalization.
    pub fn new(order: usize) -> Self {
        EnumerationSpec {
            order,
            filter: Filter::All,
            canonicalize: false,
            alphabet: Alphabet::AllNonempty,
        }
    }

    pub fn associative_only(mut self) -> Self {
        self.filter = Filter::AssociativeOnly;
        self
    }

    pub fn canonical(mut self) -> Self {
        self.canonicalize = true;
        self
    }

    pub fn with_alphabet(mut self, alphabet: Alphabet) -> Self {
        self.alphabet = alphabet;
        self
    }

    /// Validates bounds and returns the sorted, deduplicated cell alphabet.
    fn resolve(&self) -> Result<Vec<Subset>> {
        let n = self.order;
        if n == 0 || n > ORDER_CAP {
            return Err(Error::InvalidOrder(n));
        }
        let cells = match &self.alphabet {
            Alphabet::AllNonempty => {
                if n > MAX_FULL_ALPHABET_ORDER {
                    return Err(Error::InvalidSpec(format!(
                        "order {n} with the full cell alphabet exceeds {MAX_FULL_ALPHABET_ORDER}"
                    )));
                }
                Subset::all_nonempty(n).collect()
            }
            Alphabet::Restricted(cells) => {
                if cells.is_empty() {
                    return Err(Error::InvalidSpec("empty cell alphabet".into()));
                }
                if let Some(bad) = cells.iter().find(|c| c.is_empty() || !c.fits_order(n)) {
                    return Err(Error::InvalidSpec(format!(
                        "alphabet cell {bad} is empty or outside order {n}"
                    )));
                }
                let mut cells = cells.clone();
                cells.sort();
                cells.dedup();
                cells
            }
        };
        if self.canonicalize {
            if n > MAX_CANONICAL_ORDER {
                return Err(Error::InvalidSpec(format!(
                    "canonicalization is limited to order {MAX_CANONICAL_ORDER}"
                )));
            }
            let closed = permutations(n).iter().all(|p| {
                cells
                    .iter()
                    .all(|c| cells.binary_search(&c.relabel(p)).is_ok())
            });
            if !closed {
                return Err(Error::InvalidSpec(
                    "canonicalization needs an alphabet closed under relabeling".into(),
                ));
            }
        }
        Ok(cells)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EnumerationStats {
    /// Size of the table space covered, pruned subtrees included
    /// (saturates at `u128::MAX`).
    pub total_tables: u128,
    /// Tables handed to the visitor.
    pub visited: u64,
    /// Associative tables reached (before canonical deduplication).
    pub associative_count: u64,
    /// Regular tables among the associative ones.
    pub regular_count: u64,
    /// Partial tables cut by associativity pruning.
    pub pruned_nodes: u64,
    pub elapsed: Duration,
}

impl EnumerationStats {
    /// Associative, commutative combination of two disjoint runs.
    pub fn merge(self, other: EnumerationStats) -> EnumerationStats {
        EnumerationStats {
            total_tables: self.total_tables.saturating_add(other.total_tables),
            visited: self.visited + other.visited,
            associative_count: self.associative_count + other.associative_count,
            regular_count: self.regular_count + other.regular_count,
            pruned_nodes: self.pruned_nodes + other.pruned_nodes,
            elapsed: self.elapsed.max(other.elapsed),
        }
    }

    /// Equality of every counter, ignoring wall time.
    pub fn same_counts(&self, other: &EnumerationStats) -> bool {
        EnumerationStats {
            elapsed: Duration::ZERO,
            ..*self
        } == EnumerationStats {
            elapsed: Duration::ZERO,
            ..*other
        }
    }
}

fn space_size(alphabet: usize, cells: usize) -> u128 {
    (alphabet as u128)
        .checked_pow(cells as u32)
        .unwrap_or(u128::MAX)
}

/// All permutations of `0..n` in lexicographic order; cached for n ≤ 6.
pub fn permutations(n: usize) -> &'static [Vec<usize>] {
    static CACHE: [OnceLock<Vec<Vec<usize>>>; MAX_CANONICAL_ORDER + 1] =
        [const { OnceLock::new() }; MAX_CANONICAL_ORDER + 1];
    assert!(
        n <= MAX_CANONICAL_ORDER,
        "permutations cached only up to {MAX_CANONICAL_ORDER}"
    );
    CACHE[n].get_or_init(|| {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(n);
        let mut used = vec![false; n];
        fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
            if cur.len() == n {
                out.push(cur.clone());
                return;
            }
            for x in 0..n {
                if !used[x] {
                    used[x] = true;
                    cur.push(x);
                    rec(n, cur, used, out);
                    cur.pop();
                    used[x] = false;
                }
            }
        }
        rec(n, &mut current, &mut used, &mut out);
        out
    })
}

fn relabeled_cells(n: usize, cells: &[Subset], perm: &[usize], out: &mut [Subset]) {
    for a in 0..n {
        for b in 0..n {
            out[perm[a] * n + perm[b]] = cells[a * n + b].relabel(perm);
        }
    }
}

fn is_canonical(n: usize, cells: &[Subset], perms: &[Vec<usize>], scratch: &mut [Subset]) -> bool {
    perms.iter().skip(1).all(|p| {
        relabeled_cells(n, cells, p, scratch);
        *scratch >= *cells
    })
}

/// The lexicographically least relabeling of `h` (cells compared by
/// bitmask, row-major). Examines all `order!` relabelings; intended for
/// order ≤ 4 and panics beyond order 6.
pub fn canonical_form(h: &Hypergroupoid) -> Hypergroupoid {
    let n = h.order();
    let mut best = h.cells().to_vec();
    let mut scratch = vec![Subset::EMPTY; n * n];
    for p in permutations(n) {
        relabeled_cells(n, h.cells(), p, &mut scratch);
        if scratch < best {
            best.copy_from_slice(&scratch);
        }
    }
    Hypergroupoid::from_valid_table(n, best)
}

/// A row-major prefix of a table under construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialTable {
    order: usize,
    cells: Vec<Subset>,
}

impl PartialTable {
    pub fn new(order: usize) -> Result<Self> {
        if order == 0 || order > ORDER_CAP {
            return Err(Error::InvalidOrder(order));
        }
        Ok(PartialTable {
            order,
            cells: Vec::with_capacity(order * order),
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of filled cells.
    pub fn filled(&self) -> usize {
        self.cells.len()
    }

    pub fn cells(&self) -> &[Subset] {
        &self.cells
    }

    /// Fills the next cell in row-major order and returns its index.
    pub fn push(&mut self, cell: Subset) -> Result<usize> {
        let n = self.order;
        let k = self.cells.len();
        if k == n * n {
            return Err(Error::TableSize {
                order: n,
                expected: n * n,
                found: k + 1,
            });
        }
        if cell.is_empty() {
            return Err(Error::EmptyCell { a: k / n, b: k % n });
        }
        if !cell.fits_order(n) {
            return Err(Error::CellOutOfRange {
                a: k / n,
                b: k % n,
                cell,
                order: n,
            });
        }
        self.cells.push(cell);
        Ok(k)
    }

    /// First violated instance among all the ones whose cells are filled,
    /// in lexicographic `(x, y, z)` order.
    pub fn first_determined_violation(&self) -> Option<AssociativityWitness> {
        let n = self.order;
        let last = self.cells.len().checked_sub(1)?;
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    match determined_instance(n, &self.cells, last, x, y, z) {
                        Some((_, Some(w))) => return Some(w),
                        _ => continue,
                    }
                }
            }
        }
        None
    }

    pub fn into_hypergroupoid(self) -> Result<Hypergroupoid> {
        Hypergroupoid::new(self.order, self.cells)
    }
}

/// If every cell the `(x,y,z)` instance reads has index ≤ `last`, returns
/// the largest such index and the violation, if any.
#[inline]
fn determined_instance(
    n: usize,
    cells: &[Subset],
    last: usize,
    x: usize,
    y: usize,
    z: usize,
) -> Option<(usize, Option<AssociativityWitness>)> {
    let xy_idx = x * n + y;
    let yz_idx = y * n + z;
    if xy_idx > last || yz_idx > last {
        return None;
    }
    let xy = cells[xy_idx];
    let yz = cells[yz_idx];
    // lhs reads (x, w) for w ∈ y∘z; rhs reads (w, z) for w ∈ x∘y
    let lhs_max = x * n + yz.max_element()?;
    let rhs_max = xy.max_element()? * n + z;
    let needed = xy_idx.max(yz_idx).max(lhs_max).max(rhs_max);
    if needed > last {
        return None;
    }
    let mut lhs = Subset::EMPTY;
    for w in yz {
        lhs |= cells[x * n + w];
    }
    let mut rhs = Subset::EMPTY;
    for w in xy {
        rhs |= cells[w * n + z];
    }
    let witness = (lhs != rhs).then_some(AssociativityWitness { x, y, z, lhs, rhs });
    Some((needed, witness))
}

/// Incremental pruning test after filling cell `newly_filled` (the last
/// filled cell of `partial`): checks exactly the instances that became fully
/// determined with this cell. Returns false iff one of them is violated.
///
/// Instances determined earlier are assumed to have passed when their own
/// last cell was filled, which is how the enumerator calls this.
pub fn prune_check(partial: &PartialTable, newly_filled: usize) -> bool {
    newly_determined_ok(partial.order, &partial.cells[..=newly_filled], newly_filled)
}

#[inline]
fn newly_determined_ok(n: usize, cells: &[Subset], k: usize) -> bool {
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if let Some((needed, witness)) = determined_instance(n, cells, k, x, y, z) {
                    if needed == k && witness.is_some() {
                        return false;
                    }
                }
            }
        }
    }
    true
}

struct Engine<'a> {
    order: usize,
    alphabet: &'a [Subset],
    filter: Filter,
    perms: Option<&'static [Vec<usize>]>,
    cells: Vec<Subset>,
    scratch: Vec<Subset>,
    stats: EnumerationStats,
}

impl<'a> Engine<'a> {
    fn new(spec: &EnumerationSpec, alphabet: &'a [Subset]) -> Self {
        let n = spec.order;
        Engine {
            order: n,
            alphabet,
            filter: spec.filter,
            perms: spec.canonicalize.then(|| permutations(n)),
            cells: vec![Subset::EMPTY; n * n],
            scratch: vec![Subset::EMPTY; n * n],
            stats: EnumerationStats::default(),
        }
    }

    fn prunes(&self) -> bool {
        self.filter == Filter::AssociativeOnly
    }

    fn size(&self) -> usize {
        self.order * self.order
    }

    /// Fills cells `depth..stop`; calls `at_stop` on each surviving prefix.
    fn descend<B>(
        &mut self,
        depth: usize,
        stop: usize,
        at_stop: &mut dyn FnMut(&mut Self) -> ControlFlow<B>,
    ) -> ControlFlow<B> {
        if depth == stop {
            return at_stop(self);
        }
        for i in 0..self.alphabet.len() {
            self.cells[depth] = self.alphabet[i];
            if self.prunes() && !newly_determined_ok(self.order, &self.cells[..=depth], depth) {
                self.stats.pruned_nodes += 1;
                self.stats.total_tables = self
                    .stats
                    .total_tables
                    .saturating_add(space_size(self.alphabet.len(), self.size() - depth - 1));
                continue;
            }
            self.descend(depth + 1, stop, at_stop)?;
        }
        ControlFlow::Continue(())
    }

    fn leaf<B>(
        &mut self,
        visit: &mut dyn FnMut(&Hypergroupoid) -> ControlFlow<B>,
    ) -> ControlFlow<B> {
        self.stats.total_tables = self.stats.total_tables.saturating_add(1);
        let h = Hypergroupoid::from_valid_table(self.order, self.cells.clone());
        let associative = h.is_hypersemigroup();
        debug_assert!(
            associative || !self.prunes(),
            "pruning let a violation through"
        );
        if associative {
            self.stats.associative_count += 1;
            if is_regular(&h).map(|e| e.is_regular()).unwrap_or(false) {
                self.stats.regular_count += 1;
            }
        } else if self.filter == Filter::AssociativeOnly {
            return ControlFlow::Continue(());
        }
        if let Some(perms) = self.perms {
            if !is_canonical(self.order, &self.cells, perms, &mut self.scratch) {
                return ControlFlow::Continue(());
            }
        }
        self.stats.visited += 1;
        visit(&h)
    }

    fn run_from<B>(
        &mut self,
        depth: usize,
        visit: &mut dyn FnMut(&Hypergroupoid) -> ControlFlow<B>,
    ) -> ControlFlow<B> {
        let size = self.size();
        self.descend(depth, size, &mut |e: &mut Self| e.leaf(visit))
    }
}

/// Visits every table matching `spec`, in lexicographic order, and returns
/// the run statistics.
pub fn enumerate(
    spec: &EnumerationSpec,
    mut visitor: impl FnMut(&Hypergroupoid),
) -> Result<EnumerationStats> {
    let (stats, _) = enumerate_until(spec, |h| {
        visitor(h);
        ControlFlow::<()>::Continue(())
    })?;
    Ok(stats)
}

/// Like [`enumerate`], but the visitor may stop the run early. Returns the
/// statistics so far and the break value, if any.
pub fn enumerate_until<B>(
    spec: &EnumerationSpec,
    mut visitor: impl FnMut(&Hypergroupoid) -> ControlFlow<B>,
) -> Result<(EnumerationStats, Option<B>)> {
    let alphabet = spec.resolve()?;
    let start = Instant::now();
    let mut engine = Engine::new(spec, &alphabet);
    let flow = engine.run_from(0, &mut visitor);
    let mut stats = engine.stats;
    stats.elapsed = start.elapsed();
    Ok((stats, flow.break_value()))
}

/// Number of leading cells that fix a partition: enough for a few hundred
/// independent tasks.
fn partition_depth(alphabet: usize, cells: usize) -> usize {
    let mut k = 0;
    let mut parts = 1u128;
    while k < cells && parts < 512 {
        parts = parts.saturating_mul(alphabet as u128);
        k += 1;
    }
    k
}

/// Surviving prefixes of length `k` in lexicographic order, plus the pruning
/// statistics of the prefix phase.
fn partitions(
    spec: &EnumerationSpec,
    alphabet: &[Subset],
) -> (Vec<Vec<Subset>>, usize, EnumerationStats) {
    let mut engine = Engine::new(spec, alphabet);
    let k = partition_depth(alphabet.len(), engine.size());
    let mut prefixes = Vec::new();
    let _ = engine.descend::<()>(0, k, &mut |e: &mut Engine| {
        prefixes.push(e.cells[..k].to_vec());
        ControlFlow::Continue(())
    });
    (prefixes, k, engine.stats)
}

fn run_partition<B>(
    spec: &EnumerationSpec,
    alphabet: &[Subset],
    prefix: &[Subset],
    visit: &mut dyn FnMut(&Hypergroupoid) -> ControlFlow<B>,
) -> (EnumerationStats, Option<B>) {
    let mut engine = Engine::new(spec, alphabet);
    engine.cells[..prefix.len()].copy_from_slice(prefix);
    let flow = engine.run_from(prefix.len(), visit);
    (engine.stats, flow.break_value())
}

/// Parallel [`enumerate`]: the search tree is split on its leading cells and
/// the parts run as independent rayon tasks. The visitor may be called from
/// several threads at once and in any order; the merged statistics equal
/// those of the sequential run.
pub fn enumerate_parallel(
    spec: &EnumerationSpec,
    visitor: impl Fn(&Hypergroupoid) + Sync,
) -> Result<EnumerationStats> {
    let alphabet = spec.resolve()?;
    let start = Instant::now();
    let (prefixes, _, prefix_stats) = partitions(spec, &alphabet);
    let merged = prefixes
        .par_iter()
        .map(|prefix| {
            run_partition::<()>(spec, &alphabet, prefix, &mut |h| {
                visitor(h);
                ControlFlow::Continue(())
            })
            .0
        })
        .reduce(EnumerationStats::default, EnumerationStats::merge);
    let mut stats = prefix_stats.merge(merged);
    stats.elapsed = start.elapsed();
    Ok(stats)
}

/// Parallel search for the first table (in sequential visitation order) on
/// which `probe` returns `Some`.
///
/// Statistics cover exactly the tables the sequential [`enumerate_until`]
/// would have reached before stopping, so they are deterministic.
pub fn find_first_parallel<T: Send>(
    spec: &EnumerationSpec,
    probe: impl Fn(&Hypergroupoid) -> Option<T> + Sync,
) -> Result<(EnumerationStats, Option<T>)> {
    let alphabet = spec.resolve()?;
    let start = Instant::now();
    let (prefixes, _, prefix_stats) = partitions(spec, &alphabet);
    let best = AtomicUsize::new(usize::MAX);
    let results: Vec<Option<(EnumerationStats, Option<T>)>> = prefixes
        .par_iter()
        .enumerate()
        .map(|(i, prefix)| {
            if i > best.load(Ordering::Relaxed) {
                return None;
            }
            let (stats, found) = run_partition(spec, &alphabet, prefix, &mut |h| match probe(h) {
                Some(t) => ControlFlow::Break(t),
                None => ControlFlow::Continue(()),
            });
            if found.is_some() {
                best.fetch_min(i, Ordering::Relaxed);
            }
            Some((stats, found))
        })
        .collect();

    // Pruned prefixes are counted in the prefix phase; only keep those that
    // precede the winning partition.
    let winner = best.into_inner();
    let mut stats = if winner == usize::MAX {
        prefix_stats
    } else {
        prefix_stats_before(spec, &alphabet, &prefixes[winner])
    };
    let mut found = None;
    for (i, r) in results.into_iter().enumerate() {
        if i > winner {
            break;
        }
        let (s, f) = r.expect("partitions up to the winner always run");
        stats = stats.merge(s);
        if f.is_some() {
            found = f;
        }
    }
    stats.elapsed = start.elapsed();
    Ok((stats, found))
}

/// Prefix-phase statistics restricted to prefixes lexicographically before `stop_at`.
fn prefix_stats_before(
    spec: &EnumerationSpec,
    alphabet: &[Subset],
    stop_at: &[Subset],
) -> EnumerationStats {
    let mut engine = Engine::new(spec, alphabet);
    let k = stop_at.len();
    let _ = engine.descend::<()>(0, k, &mut |e: &mut Engine| {
        if e.cells[..k] == *stop_at {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    engine.stats
}

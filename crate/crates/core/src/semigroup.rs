//! Numerical semigroups and their elementary invariants.
//!
//! A semigroup is stored by its minimal generating system together with the
//! Apéry set of its multiplicity, which gives O(1) membership and the
//! Frobenius number. Order tables are built on demand by dynamic programming.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{NsError, Result};

/// Default cap on generator magnitude.
pub const DEFAULT_MAX_GENERATOR: u64 = 1 << 31;
/// Default cap on the Frobenius number for table-based operations.
pub const DEFAULT_MAX_FROBENIUS: u64 = 100_000_000;
/// Environment variable overriding [`Limits::max_frobenius`].
pub const MAX_FROBENIUS_ENV: &str = "NSRING_MAX_FROBENIUS";

/// Size caps guarding against runaway allocations and silent wraparound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    pub max_generator: u64,
    /// Bounds the Frobenius number and residue-table sizes of table-based
    /// operations. Order tables may extend to twice this value.
    pub max_frobenius: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_generator: DEFAULT_MAX_GENERATOR,
            max_frobenius: DEFAULT_MAX_FROBENIUS,
        }
    }
}

impl Limits {
    /// Default limits, with the Frobenius cap taken from `NSRING_MAX_FROBENIUS`
    /// when it is set to a valid integer.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(cap) = std::env::var(MAX_FROBENIUS_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<u64>().ok())
        {
            limits.max_frobenius = cap;
        }
        limits
    }

    fn check_residues(&self, modulus: u64) -> Result<()> {
        if modulus > self.max_frobenius.max(1) {
            return Err(NsError::TooLarge {
                quantity: "residue table size",
                value: modulus,
                cap: self.max_frobenius,
            });
        }
        Ok(())
    }

    fn check_table_bound(&self, bound: u64) -> Result<()> {
        let cap = self.max_frobenius.saturating_mul(2);
        if bound > cap {
            return Err(NsError::TooLarge {
                quantity: "order table bound",
                value: bound,
                cap,
            });
        }
        Ok(())
    }
}

/// Sentinel stored in order tables for integers outside the semigroup.
const NOT_IN_H: u32 = u32::MAX;

/// Orders of all semigroup elements up to a bound.
///
/// `ord(w)` is the largest number of generators, counted with multiplicity,
/// that sum to `w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderTable {
    ord: Vec<u32>,
}

impl OrderTable {
    /// Builds the table for `0..=bound` from a generating set.
    ///
    /// The generating set does not need to be minimal.
    pub fn build(generators: &[u64], bound: u64) -> OrderTable {
        let len = bound as usize + 1;
        let mut ord = vec![NOT_IN_H; len];
        ord[0] = 0;
        for w in 1..len {
            let mut best = NOT_IN_H;
            for &g in generators {
                let g = g as usize;
                if g > w {
                    continue;
                }
                let prev = ord[w - g];
                if prev != NOT_IN_H && (best == NOT_IN_H || prev + 1 > best) {
                    best = prev + 1;
                }
            }
            ord[w] = best;
        }
        OrderTable { ord }
    }

    pub fn bound(&self) -> u64 {
        (self.ord.len() - 1) as u64
    }

    /// Order of `w`, or `None` if `w` is not in the semigroup.
    ///
    /// # Panics
    /// If `w` exceeds the table bound.
    pub fn get(&self, w: u64) -> Option<u32> {
        match self.ord[w as usize] {
            NOT_IN_H => None,
            o => Some(o),
        }
    }

    pub fn contains(&self, w: u64) -> bool {
        self.get(w).is_some()
    }
}

/// One entry of an Apéry table: the least element of a residue class and its
/// order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AperyEntry {
    pub element: u64,
    pub order: u32,
}

/// `Ap(H; s)`: for each residue class mod `s`, the least element of `H` in it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AperyTable {
    pub modulus: u64,
    /// Indexed by residue class.
    pub entries: Vec<AperyEntry>,
}

impl AperyTable {
    /// Apéry elements in increasing order.
    pub fn sorted_elements(&self) -> Vec<u64> {
        let mut w: Vec<u64> = self.entries.iter().map(|e| e.element).collect();
        w.sort_unstable();
        w
    }

    pub fn max_element(&self) -> u64 {
        self.entries.iter().map(|e| e.element).max().unwrap_or(0)
    }

    /// Largest order among the nonzero Apéry elements (0 when `s = 1`).
    pub fn max_nonzero_order(&self) -> u32 {
        self.entries
            .iter()
            .filter(|e| e.element != 0)
            .map(|e| e.order)
            .max()
            .unwrap_or(0)
    }

    /// Checks `w_i + w_{s-1-i} = f + s` on the sorted Apéry set and returns the
    /// first offending pair `(w_i, w_{s-1-i})`, if any.
    pub fn symmetry_witness(&self, frobenius: i64) -> Option<(u64, u64)> {
        let w = self.sorted_elements();
        let target = frobenius + self.modulus as i64;
        let n = w.len();
        (0..n)
            .map(|i| (w[i], w[n - 1 - i]))
            .find(|&(lo, hi)| lo as i64 + hi as i64 != target)
    }
}

/// Shortest-path distances over residues mod `modulus`, with one edge of weight
/// `g` from `r` to `(r + g) mod modulus` for each generator `g`.
///
/// `dist[r]` is the least combination of `generators` congruent to `r`, or
/// `u64::MAX` when the class is unreachable.
fn residue_distances(modulus: u64, generators: &[u64]) -> Vec<u64> {
    let m = modulus as usize;
    let mut dist = vec![u64::MAX; m];
    dist[0] = 0;
    let steps: Vec<u64> = generators
        .iter()
        .copied()
        .filter(|g| g % modulus != 0)
        .collect();
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0u64, 0usize)));
    while let Some(Reverse((d, r))) = heap.pop() {
        if d > dist[r] {
            continue;
        }
        for &g in &steps {
            let nd = d.saturating_add(g);
            let nr = ((r as u64 + g % modulus) % modulus) as usize;
            if nd < dist[nr] {
                dist[nr] = nd;
                heap.push(Reverse((nd, nr)));
            }
        }
    }
    dist
}

/// A numerical semigroup given by its minimal system of generators.
///
/// Immutable after construction; cached order tables are filled at most once.
#[derive(Clone)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    redundant: Vec<u64>,
    apery_mult: Vec<u64>,
    frobenius: i64,
    limits: Limits,
    orders: OnceLock<Arc<OrderTable>>,
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("NumericalSemigroup")
            .field("generators", &self.generators)
            .field("frobenius", &self.frobenius)
            .finish()
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators
    }
}

impl Eq for NumericalSemigroup {}

impl NumericalSemigroup {
    /// Builds a semigroup with default limits. See [`Self::with_limits`].
    pub fn new(raw_generators: &[u64]) -> Result<Self> {
        Self::with_limits(raw_generators, Limits::default())
    }

    /// Validates `raw_generators`, drops redundant ones and sorts the rest.
    pub fn with_limits(raw_generators: &[u64], limits: Limits) -> Result<Self> {
        if raw_generators.is_empty() {
            return Err(NsError::Empty);
        }
        if raw_generators.contains(&0) {
            return Err(NsError::ZeroGenerator);
        }
        if let Some(&big) = raw_generators.iter().find(|&&g| g > limits.max_generator) {
            return Err(NsError::Overflow {
                value: big as u128,
                cap: limits.max_generator,
            });
        }
        let gcd = raw_generators.iter().fold(0u64, |acc, &g| acc.gcd(&g));
        if gcd != 1 {
            return Err(NsError::GcdNotOne { gcd });
        }

        let mut sorted = raw_generators.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mult = sorted[0];
        limits.check_residues(mult)?;

        // Candidates are scanned in increasing order, so a candidate is
        // redundant iff it is representable by the generators kept so far.
        let mut generators = vec![mult];
        let mut redundant = Vec::new();
        let mut dist = residue_distances(mult, &generators);
        for &g in &sorted[1..] {
            if dist[(g % mult) as usize] <= g {
                redundant.push(g);
            } else {
                generators.push(g);
                dist = residue_distances(mult, &generators);
            }
        }
        let max_apery = *dist.iter().max().expect("nonempty residue table");
        let frobenius = max_apery as i64 - mult as i64;

        Ok(NumericalSemigroup {
            generators,
            redundant,
            apery_mult: dist,
            frobenius,
            limits,
            orders: OnceLock::new(),
        })
    }

    /// Minimal generators `a_1 < ... < a_e`.
    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    /// Input values dropped because they are sums of smaller generators.
    pub fn redundant_inputs(&self) -> &[u64] {
        &self.redundant
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    /// Smallest generator, the multiplicity of the semigroup ring.
    pub fn multiplicity(&self) -> u64 {
        self.generators[0]
    }

    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    pub fn max_generator(&self) -> u64 {
        *self.generators.last().expect("nonempty")
    }

    /// Whether the semigroup is all of ℕ.
    pub fn is_regular(&self) -> bool {
        self.generators == [1]
    }

    /// Largest integer outside the semigroup; `-1` for ℕ.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn contains(&self, w: u64) -> bool {
        let m = self.multiplicity();
        w >= self.apery_mult[(w % m) as usize]
    }

    /// Whether `w` is a minimal generator.
    pub fn is_generator(&self, w: u64) -> bool {
        self.generators.binary_search(&w).is_ok()
    }

    /// `s ∈ H ⟺ f - s ∉ H` for all `0 ≤ s ≤ f`.
    ///
    /// Checked on `Ap(H; a_1)`: symmetric iff `f + a_1 - w` is an Apéry
    /// element for every Apéry element `w`.
    pub fn is_symmetric(&self) -> bool {
        let m = self.multiplicity();
        let top = self.frobenius + m as i64;
        self.apery_mult.iter().all(|&w| {
            let dual = top - w as i64;
            dual >= 0 && self.apery_mult[(dual as u64 % m) as usize] == dual as u64
        })
    }

    fn check_frobenius_cap(&self) -> Result<()> {
        if self.frobenius > self.limits.max_frobenius as i64 {
            return Err(NsError::TooLarge {
                quantity: "Frobenius number",
                value: self.frobenius as u64,
                cap: self.limits.max_frobenius,
            });
        }
        Ok(())
    }

    /// All gaps in increasing order.
    pub fn gaps(&self) -> Result<Vec<u64>> {
        self.check_frobenius_cap()?;
        if self.frobenius < 0 {
            return Ok(Vec::new());
        }
        Ok((1..=self.frobenius as u64)
            .filter(|&w| !self.contains(w))
            .collect())
    }

    pub fn gap_count(&self) -> Result<u64> {
        self.check_frobenius_cap()?;
        Ok(self.apery_mult.iter().map(|&w| w / self.multiplicity()).sum())
    }

    /// Builds an uncached order table on `0..=bound`.
    pub fn order_table(&self, bound: u64) -> Result<OrderTable> {
        self.check_frobenius_cap()?;
        self.limits.check_table_bound(bound)?;
        Ok(OrderTable::build(&self.generators, bound))
    }

    /// Bound of the cached order table: `f + a_e`, enough for `N_s` at every
    /// generator `s`.
    pub fn default_order_bound(&self) -> u64 {
        (self.frobenius + self.max_generator() as i64).max(0) as u64
    }

    /// An order table covering at least `0..=bound`, shared when possible.
    pub fn orders_up_to(&self, bound: u64) -> Result<Arc<OrderTable>> {
        let default = self.default_order_bound();
        if bound > default {
            return Ok(Arc::new(self.order_table(bound)?));
        }
        if let Some(t) = self.orders.get() {
            return Ok(Arc::clone(t));
        }
        let table = Arc::new(self.order_table(default)?);
        Ok(Arc::clone(self.orders.get_or_init(|| table)))
    }

    /// Maximal coefficient sum over all representations of `w`.
    pub fn order(&self, w: u64) -> Result<u32> {
        if !self.contains(w) {
            return Err(NsError::NotAnElement(w));
        }
        let table = self.orders_up_to(w)?;
        Ok(table.get(w).expect("w is in H"))
    }

    /// `Ap(H; s)` with orders, for a nonzero element `s`.
    pub fn apery_set(&self, s: u64) -> Result<AperyTable> {
        if s == 0 || !self.contains(s) {
            return Err(NsError::NotAnElement(s));
        }
        self.limits.check_residues(s)?;
        self.check_frobenius_cap()?;
        let elements = if s == self.multiplicity() {
            self.apery_mult.clone()
        } else {
            residue_distances(s, &self.generators)
        };
        let top = *elements.iter().max().expect("nonempty");
        let orders = self.orders_up_to(top)?;
        let entries = elements
            .into_iter()
            .map(|w| AperyEntry {
                element: w,
                order: orders.get(w).expect("Apéry elements lie in H"),
            })
            .collect();
        Ok(AperyTable {
            modulus: s,
            entries,
        })
    }
}

impl Serialize for NumericalSemigroup {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.generators.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for NumericalSemigroup {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<u64>::deserialize(deserializer)?;
        NumericalSemigroup::with_limits(&raw, Limits::from_env()).map_err(serde::de::Error::custom)
    }
}

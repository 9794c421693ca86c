//! Auslander index of numerical semigroup rings.
//!
//! `N_s` is the least `i` with `m^i ⊆ (t^s)`. Three independent routes are
//! provided:
//!
//! * [`n_value_apery`]: one more than the largest order of a nonzero element
//!   of `Ap(H; s)`. Valid for every semigroup.
//! * [`n_value_direct`]: scans `i = 1, 2, ...` and tests the inclusion
//!   `m^i ⊆ (t^s)` monomial by monomial.
//! * [`n_value_ord_formula`]: `ord(f(H) + s) + 1`, valid only for symmetric
//!   semigroups.
//!
//! The index is the minimum of `N_s` over the minimal generators. For
//! Gorenstein semigroup rings it coincides with the generalized Loewy length.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::ci3;
use crate::error::{NsError, Result};
use crate::semigroup::NumericalSemigroup;

/// How the per-generator `N` values of a report were obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Method {
    #[serde(rename = "apery-oracle")]
    Apery,
    #[serde(rename = "direct-oracle")]
    Direct,
    #[serde(rename = "ord-formula")]
    OrdFormula,
    #[serde(rename = "ci3-formula")]
    Ci3,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Apery => "apery-oracle",
            Method::Direct => "direct-oracle",
            Method::OrdFormula => "ord-formula",
            Method::Ci3 => "ci3-formula",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "apery" | "apery-oracle" => Ok(Method::Apery),
            "direct" | "direct-oracle" => Ok(Method::Direct),
            "ord-formula" | "ord" => Ok(Method::OrdFormula),
            "ci3" | "ci3-formula" => Ok(Method::Ci3),
            other => Err(format!("unknown method `{other}`")),
        }
    }
}

/// Index data of one semigroup ring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexReport {
    pub generators: Vec<u64>,
    /// `N_{a_j}` keyed by generator.
    pub n_values: BTreeMap<u64, u32>,
    pub index: u32,
    pub mult: u64,
    pub edim: usize,
    /// `edim - 1`; the rings are one-dimensional and Cohen–Macaulay.
    pub codim: usize,
    /// `mult - index - codim + 1`.
    pub ding_gap: i64,
    pub gorenstein: bool,
    pub method: Method,
    /// Generalized Loewy length; reported only for Gorenstein rings, where it
    /// equals the index.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub loewy_length: Option<u32>,
    /// False when the ring is not Gorenstein, in which case `ding_gap >= 0` is
    /// not a theorem.
    pub ding_inequality_guaranteed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl IndexReport {
    /// Assembles a report from per-generator `N` values.
    pub fn from_n_values(
        h: &NumericalSemigroup,
        n_values: BTreeMap<u64, u32>,
        method: Method,
    ) -> Result<Self> {
        let index = *n_values
            .values()
            .min()
            .ok_or_else(|| NsError::Inconsistent("no N values".into()))?;
        let gorenstein = h.is_symmetric();
        let mult = h.multiplicity();
        let edim = h.embedding_dimension();
        let codim = edim - 1;
        let note = match edim {
            1 => Some("regular ring: index 1".to_string()),
            2 => Some("hypersurface: index equals multiplicity".to_string()),
            _ if !gorenstein => Some(
                "not Gorenstein: Loewy length omitted, ding_gap >= 0 not guaranteed".to_string(),
            ),
            _ => None,
        };
        Ok(IndexReport {
            generators: h.generators().to_vec(),
            n_values,
            index,
            mult,
            edim,
            codim,
            ding_gap: ding_gap_of(mult, index, codim),
            gorenstein,
            method,
            loewy_length: gorenstein.then_some(index),
            ding_inequality_guaranteed: gorenstein && !h.is_regular(),
            note,
        })
    }
}

/// `mult - index - codim + 1`.
pub fn ding_gap_of(mult: u64, index: u32, codim: usize) -> i64 {
    mult as i64 - index as i64 - codim as i64 + 1
}

/// Ding gap recorded in a report.
pub fn ding_gap(report: &IndexReport) -> i64 {
    ding_gap_of(report.mult, report.index, report.codim)
}

fn check_element(h: &NumericalSemigroup, s: u64) -> Result<()> {
    if s == 0 || !h.contains(s) {
        return Err(NsError::NotAnElement(s));
    }
    Ok(())
}

/// `N_s = 1 + max{ord(w) : w ∈ Ap(H; s), w ≠ 0}`.
pub fn n_value_apery(h: &NumericalSemigroup, s: u64) -> Result<u32> {
    let table = h.apery_set(s)?;
    Ok(table.max_nonzero_order() + 1)
}

/// `N_s` as the least `i` with `m^i ⊆ (t^s)`, tested monomial by monomial.
///
/// A monomial `t^w` lies in `m^i` iff `ord(w) >= i` and in `(t^s)` iff
/// `w - s ∈ H`. Only `w <= f(H) + s` needs checking: above that `w - s`
/// exceeds the Frobenius number.
pub fn n_value_direct(h: &NumericalSemigroup, s: u64) -> Result<u32> {
    check_element(h, s)?;
    let window = (h.frobenius() + s as i64) as u64;
    let table = h.orders_up_to(window)?;
    let outside_ideal: Vec<u32> = (0..=window)
        .filter_map(|w| {
            let ord = table.get(w)?;
            let in_ideal = w >= s && table.contains(w - s);
            (!in_ideal).then_some(ord)
        })
        .collect();
    let mut i = 1;
    while outside_ideal.iter().any(|&ord| ord >= i) {
        i += 1;
    }
    Ok(i)
}

/// `N_s = ord(f(H) + s) + 1`; requires a symmetric semigroup.
pub fn n_value_ord_formula(h: &NumericalSemigroup, s: u64) -> Result<u32> {
    check_element(h, s)?;
    if !h.is_symmetric() {
        return Err(NsError::NotGorenstein {
            generators: h.generators().to_vec(),
        });
    }
    let top = (h.frobenius() + s as i64) as u64;
    Ok(h.order(top)? + 1)
}

/// `N_s` by the chosen method, for `Apery`, `Direct` or `OrdFormula`.
pub fn n_value(h: &NumericalSemigroup, s: u64, method: Method) -> Result<u32> {
    match method {
        Method::Apery => n_value_apery(h, s),
        Method::Direct => n_value_direct(h, s),
        Method::OrdFormula => n_value_ord_formula(h, s),
        Method::Ci3 => {
            let report = ci3::index_ci3(h)?;
            report
                .n_values
                .get(&s)
                .copied()
                .ok_or(NsError::NotAnElement(s))
        }
    }
}

/// Index report with every generator's `N` value computed by `method`.
pub fn index(h: &NumericalSemigroup, method: Method) -> Result<IndexReport> {
    if method == Method::Ci3 {
        return ci3::index_ci3(h);
    }
    if method == Method::OrdFormula && !h.is_symmetric() {
        return Err(NsError::NotGorenstein {
            generators: h.generators().to_vec(),
        });
    }
    let n_values = h
        .generators()
        .iter()
        .map(|&g| Ok((g, n_value(h, g, method)?)))
        .collect::<Result<BTreeMap<_, _>>>()?;
    IndexReport::from_n_values(h, n_values, method)
}

/// Closed-form route when the semigroup is a complete intersection of
/// embedding dimension 3, Apéry oracle otherwise.
pub fn index_auto(h: &NumericalSemigroup) -> Result<IndexReport> {
    if h.embedding_dimension() == 3 && !ci3::detect_ci3(h)?.is_empty() {
        return ci3::index_ci3(h);
    }
    index(h, Method::Apery)
}

//! Formula-versus-oracle sweeps.
//!
//! Each check runs over a deterministic corpus and records how many instances
//! passed, plus the first failing instance in corpus order.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::ci3::{self, n_formula_a, n_formula_b, n_formula_c};
use crate::corpus;
use crate::family::{build_ding_family_3gen, build_hna, frobenius_hna};
use crate::index::{self, n_value_apery, n_value_direct, Method};
use crate::oracle::frobenius_by_sieve;
use crate::semigroup::NumericalSemigroup;

/// A deliberate error injected into the formulas to test the harness itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Fault {
    #[default]
    None,
    /// Adds one to every closed-form `N_b`.
    NbOffByOne,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyConfig {
    pub seed: u64,
    pub ci3_count: usize,
    pub chain_count: usize,
    pub hna_max_n: u32,
    pub hna_a_values: Vec<u64>,
    pub ding_max_n: u32,
    pub hypersurface_count: usize,
    pub fault: Fault,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: corpus::DEFAULT_SEED,
            ci3_count: 200,
            chain_count: 100,
            hna_max_n: 8,
            hna_a_values: vec![1, 3, 5, 7, 9],
            ding_max_n: 6,
            hypersurface_count: 50,
            fault: Fault::None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: String,
    pub total: usize,
    pub passed: usize,
    pub first_failure: Option<String>,
}

impl CheckOutcome {
    pub fn ok(&self) -> bool {
        self.passed == self.total
    }
}

fn run_check<T, F>(name: &str, items: &[T], check: F) -> CheckOutcome
where
    T: Sync,
    F: Fn(&T) -> Result<(), String> + Sync,
{
    let results: Vec<Result<(), String>> = items.par_iter().map(&check).collect();
    let passed = results.iter().filter(|r| r.is_ok()).count();
    let first_failure = results.into_iter().find_map(Result::err);
    CheckOutcome {
        name: name.to_string(),
        total: items.len(),
        passed,
        first_failure,
    }
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

/// Closed-form `N_a, N_b, N_c` against both oracles, generator by generator.
pub fn check_ci3_instance(
    h: &NumericalSemigroup,
    s: &ci3::CiEdim3Structure,
    fault: Fault,
) -> Result<(), String> {
    let err = |e: crate::error::NsError| format!("{h}: {e}");
    let n_b = n_formula_b(s).map_err(err)? + u64::from(fault == Fault::NbOffByOne);
    let formulas = [
        (s.roles.a, n_formula_a(s)),
        (s.roles.b, n_b),
        (s.roles.c, n_formula_c(s).map_err(err)?),
    ];
    for (g, formula) in formulas {
        let apery = n_value_apery(h, g).map_err(err)? as u64;
        let direct = n_value_direct(h, g).map_err(err)? as u64;
        if formula != apery || apery != direct {
            return Err(format!(
                "{h} with {s:?}: N_{g} formula={formula} apery={apery} direct={direct}"
            ));
        }
    }
    Ok(())
}

pub fn check_ding_member(n: u32) -> Result<(), String> {
    let m = build_ding_family_3gen(n).map_err(|e| e.to_string())?;
    let h = &m.semigroup;
    for method in [Method::Ci3, Method::Apery] {
        let r = index::index(h, method).map_err(|e| format!("{h}: {e}"))?;
        expect_eq(&format!("{h} index via {method}"), r.index, m.expected.index)?;
        expect_eq(&format!("{h} ding gap via {method}"), r.ding_gap, m.expected.ding_gap)?;
    }
    Ok(())
}

pub fn check_hna_member(n: u32, a: u64) -> Result<(), String> {
    let glued = build_hna(n, a).map_err(|e| e.to_string())?;
    let h = &glued.semigroup;
    let closed = frobenius_hna(n, a).map_err(|e| e.to_string())?;
    let scanned = frobenius_by_sieve(h.generators(), 10_000_000)
        .ok_or_else(|| format!("{h}: sieve did not terminate"))?;
    expect_eq(&format!("f(H_{{{n},{a}}}) sieve"), scanned, closed)?;
    expect_eq(&format!("f(H_{{{n},{a}}}) recurrence"), glued.frobenius_by_recurrence().map_err(|e| e.to_string())?, closed)?;
    for method in [Method::OrdFormula, Method::Apery] {
        let r = index::index(h, method).map_err(|e| format!("{h}: {e}"))?;
        expect_eq(&format!("index(H_{{{n},{a}}}) via {method}"), r.index, n + 1)?;
    }
    Ok(())
}

/// `N_s = ord(f + s) + 1` on a glued semigroup, plus the gluing Frobenius
/// recurrence and symmetry.
pub fn check_gluing_chain(g: &crate::family::GluedSemigroup) -> Result<(), String> {
    let h = &g.semigroup;
    let err = |e: crate::error::NsError| format!("{h}: {e}");
    let recurrence = g.frobenius_by_recurrence().map_err(err)?;
    expect_eq(&format!("{h} Frobenius recurrence"), recurrence, h.frobenius())?;
    if !h.is_symmetric() {
        return Err(format!("{h} (glued) is not symmetric"));
    }
    for &s in h.generators() {
        let apery = n_value_apery(h, s).map_err(err)?;
        let top = (h.frobenius() + s as i64) as u64;
        let formula = h.order(top).map_err(err)? + 1;
        expect_eq(&format!("{h}: N_{s} vs ord(f+{s})+1"), apery, formula)?;
    }
    Ok(())
}

pub fn check_hypersurface(a: u64, b: u64) -> Result<(), String> {
    let h = NumericalSemigroup::new(&[a, b]).map_err(|e| e.to_string())?;
    let r = index::index(&h, Method::Apery).map_err(|e| e.to_string())?;
    expect_eq(&format!("index({h})"), r.index as u64, a)?;
    expect_eq(&format!("ding gap({h})"), r.ding_gap, 0)
}

/// Runs every sweep.
pub fn run(config: &VerifyConfig) -> Vec<CheckOutcome> {
    let ci3 = corpus::ci3_corpus(config.seed, config.ci3_count);
    let chains = corpus::gluing_corpus(config.seed.wrapping_add(1), config.chain_count);
    let pairs = corpus::coprime_pairs(config.seed.wrapping_add(2), config.hypersurface_count, 500);
    let ding: Vec<u32> = (2..=config.ding_max_n).collect();
    let hna: Vec<(u32, u64)> = (1..=config.hna_max_n)
        .flat_map(|n| config.hna_a_values.iter().map(move |&a| (n, a)))
        .collect();

    vec![
        run_check("ci3-formula-vs-oracles", &ci3, |(h, s)| {
            check_ci3_instance(h, s, config.fault)
        }),
        run_check("ding-gap-family", &ding, |&n| check_ding_member(n)),
        run_check("hna-family", &hna, |&(n, a)| check_hna_member(n, a)),
        run_check("gorenstein-ord-formula-on-gluings", &chains, check_gluing_chain),
        run_check("hypersurface-law", &pairs, |&(a, b)| check_hypersurface(a, b)),
    ]
}

//! Acceptance criteria, one check per criterion.
//!
//! Runs without the libtest harness so every criterion prints a single
//! `PASS`/`FAIL` line; the process exits nonzero if any criterion fails.
//! All comparisons are exact.

use std::time::{Duration, Instant};

use nsring_core::ci3::{detect_ci3, n_values_ci3};
use nsring_core::corpus;
use nsring_core::family::{build_ding_family_3gen, build_hna, frobenius_hna};
use nsring_core::index::{index, n_value_apery, n_value_direct, Method};
use nsring_core::oracle::frobenius_by_sieve;
use nsring_core::verify::{check_ci3_instance, check_gluing_chain, Fault};
use nsring_core::NumericalSemigroup;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:?}, limit {limit:?}"))
}

/// Criterion 1: Ding-gap family n = 2..6: index 2n+2 and gap 2n-3 by closed form and
/// Apéry oracle, under 5 s.
fn ding_gap_family() -> Outcome {
    let start = Instant::now();
    for n in 2..=6u32 {
        let member = build_ding_family_3gen(n).map_err(|e| e.to_string())?;
        let h = &member.semigroup;
        for method in [Method::Ci3, Method::Apery] {
            let r = index(h, method).map_err(|e| format!("{h}: {e}"))?;
            ensure(r.index == 2 * n + 2, || format!("{h} via {method}: index {}", r.index))?;
            ensure(r.ding_gap == 2 * n as i64 - 3, || {
                format!("{h} via {method}: ding gap {}", r.ding_gap)
            })?;
        }
    }
    within(start, Duration::from_secs(5))?;
    Ok(format!("n=2..6 exact in {:?}", start.elapsed()))
}

/// Criterion 2: H_{n,a}, n <= 8, odd a <= 9: Frobenius closed form equals the gap
/// scan, index n+1 by ord-formula and by Apéry oracle, under 30 s.
fn hna_family() -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    for n in 1..=8u32 {
        for a in [1u64, 3, 5, 7, 9] {
            let h = build_hna(n, a).map_err(|e| e.to_string())?.semigroup;
            let closed = frobenius_hna(n, a).map_err(|e| e.to_string())?;
            let scanned = frobenius_by_sieve(h.generators(), 10_000_000);
            ensure(scanned == Some(closed), || {
                format!("f({h}) closed {closed} vs scan {scanned:?}")
            })?;
            for method in [Method::OrdFormula, Method::Apery] {
                let r = index(&h, method).map_err(|e| format!("{h}: {e}"))?;
                ensure(r.index == n + 1, || format!("{h} via {method}: index {}", r.index))?;
            }
            count += 1;
        }
    }
    within(start, Duration::from_secs(30))?;
    Ok(format!("{count} semigroups exact in {:?}", start.elapsed()))
}

/// Criterion 3: 200 seeded random structures: closed forms = Apéry oracle = direct
/// oracle per generator, under 60 s.
fn ci3_differential() -> Outcome {
    let start = Instant::now();
    let corpus = corpus::ci3_corpus(corpus::DEFAULT_SEED, 200);
    let mut agree = 0;
    let mut first = None;
    for (h, s) in &corpus {
        match check_ci3_instance(h, s, Fault::None) {
            Ok(()) => agree += 1,
            Err(e) => {
                first.get_or_insert(e);
            }
        }
    }
    within(start, Duration::from_secs(60))?;
    ensure(agree == 200, || format!("{agree}/200; first: {}", first.unwrap_or_default()))?;
    Ok(format!("200/200 exact in {:?}", start.elapsed()))
}

/// Criterion 4: 100 seeded gluing chains: N_s = ord(f+s)+1 for every generator; the
/// non-Gorenstein <4,5,11> has N_4 = 3 != 2 = ord(11)+1.
fn gorenstein_ord_formula() -> Outcome {
    let chains = corpus::gluing_corpus(corpus::DEFAULT_SEED, 100);
    for g in &chains {
        ensure(!g.chain.is_empty() && g.chain.len() <= 3, || format!("chain depth {}", g.chain.len()))?;
        ensure(g.semigroup.frobenius() <= 100_000, || format!("{} too large", g.semigroup))?;
        check_gluing_chain(g)?;
    }
    let h = NumericalSemigroup::new(&[4, 5, 11]).unwrap();
    let n4 = n_value_apery(&h, 4).map_err(|e| e.to_string())?;
    let ord = h.order(11).map_err(|e| e.to_string())? + 1;
    ensure(n4 == 3 && ord == 2, || format!("<4,5,11>: N_4 = {n4}, ord(11)+1 = {ord}"))?;
    let max_edim = chains.iter().map(|g| g.semigroup.embedding_dimension()).max().unwrap();
    Ok(format!("100 chains (edim <= {max_edim}); <4,5,11>: N_4 = 3 != 2"))
}

/// Criterion 5: <4,10,15>: both structures give {N_4, N_10, N_15} = {3, 6, 10},
/// confirmed by the direct oracle.
fn structure_independence() -> Outcome {
    let h = NumericalSemigroup::new(&[4, 10, 15]).unwrap();
    let structures = detect_ci3(&h).map_err(|e| e.to_string())?;
    ensure(structures.len() == 2, || format!("{} structures", structures.len()))?;
    let expected = [(4u64, 3u32), (10, 6), (15, 10)].into_iter().collect();
    for s in &structures {
        let n = n_values_ci3(s).map_err(|e| e.to_string())?;
        ensure(n == expected, || format!("{s:?} gives {n:?}"))?;
    }
    for (&g, &want) in &expected {
        let direct = n_value_direct(&h, g).map_err(|e| e.to_string())?;
        ensure(direct == want, || format!("direct N_{g} = {direct}"))?;
    }
    Ok("both structures give {4:3, 10:6, 15:10}".into())
}

/// Criterion 6: 50 coprime pairs a < b <= 500: index = a = mult, gap 0.
fn hypersurface_law() -> Outcome {
    for (a, b) in corpus::coprime_pairs(corpus::DEFAULT_SEED, 50, 500) {
        let h = NumericalSemigroup::new(&[a, b]).unwrap();
        let r = index(&h, Method::Apery).map_err(|e| e.to_string())?;
        ensure(r.index as u64 == a && r.mult == a && r.ding_gap == 0, || {
            format!("{h}: index {} mult {} gap {}", r.index, r.mult, r.ding_gap)
        })?;
    }
    Ok("50/50 pairs".into())
}

fn symmetric_corpus() -> Vec<NumericalSemigroup> {
    let mut out: Vec<NumericalSemigroup> = corpus::ci3_corpus(corpus::DEFAULT_SEED, 200)
        .into_iter()
        .map(|(h, _)| h)
        .collect();
    out.extend(corpus::gluing_corpus(corpus::DEFAULT_SEED, 100).into_iter().map(|g| g.semigroup));
    for n in 1..=8 {
        for a in [1, 3, 5, 7, 9] {
            out.push(build_hna(n, a).unwrap().semigroup);
        }
    }
    for n in 2..=6 {
        out.push(build_ding_family_3gen(n).unwrap().semigroup);
    }
    out
}

/// Criterion 7: Sorted Apéry sets of symmetric semigroups satisfy
/// w_i + w_{s-1-i} = f + s for every generator s; <4,5,11> violates it.
fn apery_symmetry(corpus: &[NumericalSemigroup]) -> Outcome {
    let mut tables = 0;
    for h in corpus {
        ensure(h.is_symmetric(), || format!("{h} is not symmetric"))?;
        for &s in h.generators() {
            let t = h.apery_set(s).map_err(|e| e.to_string())?;
            if let Some((lo, hi)) = t.symmetry_witness(h.frobenius()) {
                return Err(format!("{h}, s={s}: {lo} + {hi} != f + s"));
            }
            tables += 1;
        }
    }
    let h = NumericalSemigroup::new(&[4, 5, 11]).unwrap();
    let witness = h.apery_set(4).unwrap().symmetry_witness(h.frobenius());
    let (lo, hi) = witness.ok_or("<4,5,11> unexpectedly satisfies the property")?;
    Ok(format!("{tables} Apéry tables; <4,5,11> witness {lo} + {hi} != 11"))
}

/// Criterion 8: ding_gap >= 0 on every symmetric non-regular corpus instance.
fn ding_inequality(corpus: &[NumericalSemigroup]) -> Outcome {
    let mut min_gap = i64::MAX;
    let mut checked = 0;
    for h in corpus.iter().filter(|h| !h.is_regular()) {
        checked += 1;
        let r = index(h, Method::Apery).map_err(|e| e.to_string())?;
        ensure(r.gorenstein, || format!("{h} not Gorenstein"))?;
        ensure(r.ding_gap >= 0, || format!("{h}: ding gap {}", r.ding_gap))?;
        min_gap = min_gap.min(r.ding_gap);
    }
    Ok(format!("{checked} instances, min gap {min_gap}"))
}

fn main() {
    let symmetric = symmetric_corpus();
    let results: Vec<(&str, Outcome)> = vec![
        ("1 ding-gap family", ding_gap_family()),
        ("2 H_{n,a} family", hna_family()),
        ("3 closed-form differential", ci3_differential()),
        ("4 Gorenstein ord formula", gorenstein_ord_formula()),
        ("5 structure independence", structure_independence()),
        ("6 hypersurface law", hypersurface_law()),
        ("7 Apéry symmetry", apery_symmetry(&symmetric)),
        ("8 Ding inequality", ding_inequality(&symmetric)),
    ];
    let mut failed = Vec::new();
    for (name, outcome) in &results {
        match outcome {
            Ok(detail) => println!("PASS  criterion {name}: {detail}"),
            Err(detail) => {
                println!("FAIL  criterion {name}: {detail}");
                failed.push(*name);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
    println!("acceptance: {}/{} criteria passed", results.len(), results.len());
}

//! Complete intersections built by gluing, and two infinite families.
//!
//! Gluing takes a complete intersection `H`, an element `a ∈ H` of order at
//! least 2 and `p >= 2` coprime to `a`, and produces `⟨a, pH⟩`, again a
//! complete intersection with `f(⟨a, pH⟩) = p·f(H) + (p - 1)·a`.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{NsError, Result};
use crate::semigroup::NumericalSemigroup;

/// Parameters of one gluing `⟨a, p·H⟩`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GluingStep {
    pub base: NumericalSemigroup,
    pub a: u64,
    pub p: u64,
}

impl GluingStep {
    pub fn new(base: NumericalSemigroup, a: u64, p: u64) -> Result<Self> {
        let step = GluingStep { base, a, p };
        step.validate()?;
        Ok(step)
    }

    /// `p >= 2`, `gcd(a, p) = 1` and `ord(a) >= 2`.
    ///
    /// An element has order at least 2 exactly when it is a nonzero element
    /// that is not a minimal generator, so no order table is needed.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(NsError::InvalidGluing(msg));
        if self.p < 2 {
            return bad(format!("p = {} < 2", self.p));
        }
        if self.a.gcd(&self.p) != 1 {
            return bad(format!("gcd(a, p) = {} for a={}, p={}", self.a.gcd(&self.p), self.a, self.p));
        }
        if self.a == 0 || !self.base.contains(self.a) {
            return bad(format!("{} is not a nonzero element of {}", self.a, self.base));
        }
        if self.base.is_generator(self.a) {
            return bad(format!("{} is a minimal generator of {}, so ord(a) = 1", self.a, self.base));
        }
        Ok(())
    }
}

/// `p·f(base) + (p - 1)·a`.
pub fn frobenius_glued(step: &GluingStep) -> Result<i64> {
    glued_frobenius_value(step.base.frobenius(), step.a, step.p)
}

fn glued_frobenius_value(base_frobenius: i64, a: u64, p: u64) -> Result<i64> {
    let value = p as i128 * base_frobenius as i128 + (p as i128 - 1) * a as i128;
    i64::try_from(value).map_err(|_| NsError::Overflow {
        value: value.unsigned_abs(),
        cap: i64::MAX as u64,
    })
}

/// `⟨a, p·H⟩`, minimalized.
pub fn glue(step: &GluingStep) -> Result<NumericalSemigroup> {
    step.validate()?;
    let limits = step.base.limits();
    let mut raw = Vec::with_capacity(step.base.embedding_dimension() + 1);
    raw.push(step.a);
    for &g in step.base.generators() {
        let v = g.checked_mul(step.p).filter(|&v| v <= limits.max_generator);
        raw.push(v.ok_or(NsError::Overflow {
            value: g as u128 * step.p as u128,
            cap: limits.max_generator,
        })?);
    }
    NumericalSemigroup::with_limits(&raw, limits)
}

/// One recorded gluing in a [`GluedSemigroup`] chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GluingRecord {
    pub a: u64,
    pub p: u64,
}

/// A semigroup together with the gluing chain that produced it from a root.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GluedSemigroup {
    pub root: NumericalSemigroup,
    pub chain: Vec<GluingRecord>,
    pub semigroup: NumericalSemigroup,
}

impl GluedSemigroup {
    pub fn root(root: NumericalSemigroup) -> Self {
        GluedSemigroup {
            semigroup: root.clone(),
            root,
            chain: Vec::new(),
        }
    }

    /// Glues `a` and `p` onto the current semigroup.
    pub fn glue(&self, a: u64, p: u64) -> Result<Self> {
        let step = GluingStep::new(self.semigroup.clone(), a, p)?;
        let semigroup = glue(&step)?;
        let mut chain = self.chain.clone();
        chain.push(GluingRecord { a, p });
        Ok(GluedSemigroup {
            root: self.root.clone(),
            chain,
            semigroup,
        })
    }

    /// Frobenius number by the gluing recurrence, starting from the root.
    pub fn frobenius_by_recurrence(&self) -> Result<i64> {
        self.chain.iter().try_fold(self.root.frobenius(), |f, step| {
            glued_frobenius_value(f, step.a, step.p)
        })
    }
}

fn check_hna(n: u32, a: u64) -> Result<()> {
    if n == 0 {
        return Err(NsError::InvalidFamily("H_{n,a} needs n >= 1".into()));
    }
    if a.is_multiple_of(2) {
        return Err(NsError::InvalidFamily(format!("H_{{n,a}} needs odd a, got {a}")));
    }
    Ok(())
}

fn pow2(n: u32, cap: u64) -> Result<u64> {
    1u64.checked_shl(n)
        .filter(|&v| n < 64 && v <= cap)
        .ok_or(NsError::Overflow {
            value: 1u128 << n.min(127),
            cap,
        })
}

/// Closed-form generator set `{2^n} ∪ {2^n + 2^i·a : 0 <= i < n}`.
pub fn hna_generators(n: u32, a: u64, cap: u64) -> Result<Vec<u64>> {
    check_hna(n, a)?;
    let base = pow2(n, cap)?;
    let mut g = vec![base];
    for i in 0..n {
        let v = (base as u128) + ((1u128 << i) * a as u128);
        if v > cap as u128 {
            return Err(NsError::Overflow { value: v, cap });
        }
        g.push(v as u64);
    }
    g.sort_unstable();
    Ok(g)
}

/// `H_{n,a}`, built as `H_{1,a} = ⟨2, 2 + a⟩` followed by the gluings
/// `H_{k,a} = ⟨2^k + a, 2·H_{k-1,a}⟩`.
///
/// Fails if the result differs from the closed-form generator set, including
/// the case where a listed generator turns out to be redundant.
pub fn build_hna(n: u32, a: u64) -> Result<GluedSemigroup> {
    check_hna(n, a)?;
    let limits = crate::semigroup::Limits::from_env();
    let expected = hna_generators(n, a, limits.max_generator)?;
    let two_plus_a = a.checked_add(2).filter(|&v| v <= limits.max_generator).ok_or(
        NsError::Overflow {
            value: a as u128 + 2,
            cap: limits.max_generator,
        },
    )?;
    let mut current = GluedSemigroup::root(NumericalSemigroup::with_limits(&[2, two_plus_a], limits)?);
    for k in 2..=n {
        current = current.glue(pow2(k, limits.max_generator)? + a, 2)?;
    }
    if current.semigroup.generators() != expected.as_slice() {
        let redundant: Vec<u64> = expected
            .iter()
            .copied()
            .filter(|g| !current.semigroup.is_generator(*g))
            .collect();
        return Err(NsError::InvalidFamily(format!(
            "H_{{{n},{a}}}: gluing gives {}, closed form lists {expected:?} (redundant: {redundant:?})",
            current.semigroup
        )));
    }
    Ok(current)
}

/// `(n - 1)·2^n + (2^n - 1)·a`.
pub fn frobenius_hna(n: u32, a: u64) -> Result<i64> {
    check_hna(n, a)?;
    let p = pow2(n, i64::MAX as u64)? as i128;
    let value = (n as i128 - 1) * p + (p - 1) * a as i128;
    i64::try_from(value).map_err(|_| NsError::Overflow {
        value: value as u128,
        cap: i64::MAX as u64,
    })
}

/// Expected index and Ding gap of a family member.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expected {
    pub index: u32,
    pub ding_gap: i64,
}

/// `index(H_{n,a}) = n + 1`, Ding gap `2^n - 2n`.
pub fn expected_index_hna(n: u32, a: u64) -> Result<Expected> {
    check_hna(n, a)?;
    let p = pow2(n, i64::MAX as u64)? as i64;
    Ok(Expected {
        index: n + 1,
        ding_gap: p - 2 * n as i64,
    })
}

/// A family member with its expected invariants.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyMember {
    pub semigroup: NumericalSemigroup,
    pub expected: Expected,
}

/// `⟨4n, (4n+1)(2n-1), (4n+1)(2n+1)⟩`, with index `2n + 2` and Ding gap
/// `2n - 3`.
pub fn build_ding_family_3gen(n: u32) -> Result<FamilyMember> {
    if n < 2 {
        return Err(NsError::InvalidFamily(format!("the 3-generator family needs n >= 2, got {n}")));
    }
    let n64 = n as u64;
    let q = 4 * n64 + 1;
    let gens = [4 * n64, q * (2 * n64 - 1), q * (2 * n64 + 1)];
    let semigroup = NumericalSemigroup::with_limits(&gens, crate::semigroup::Limits::from_env())?;
    Ok(FamilyMember {
        semigroup,
        expected: Expected {
            index: 2 * n + 2,
            ding_gap: 2 * n as i64 - 3,
        },
    })
}

/// A family selector, as read from JSON.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum FamilySpec {
    WatanabeHna { n: u32, a: u64 },
    #[serde(rename = "ding-gap-3gen")]
    DingGap3gen { n: u32 },
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        match *self {
            FamilySpec::WatanabeHna { n, a } => check_hna(n, a),
            FamilySpec::DingGap3gen { n } if n < 2 => Err(NsError::InvalidFamily(format!(
                "the 3-generator family needs n >= 2, got {n}"
            ))),
            FamilySpec::DingGap3gen { .. } => Ok(()),
        }
    }

    pub fn build(&self) -> Result<FamilyMember> {
        self.validate()?;
        match *self {
            FamilySpec::WatanabeHna { n, a } => Ok(FamilyMember {
                semigroup: build_hna(n, a)?.semigroup,
                expected: expected_index_hna(n, a)?,
            }),
            FamilySpec::DingGap3gen { n } => build_ding_family_3gen(n),
        }
    }
}

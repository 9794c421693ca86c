//! Complete intersections of embedding dimension 3.
//!
//! Such a semigroup is `⟨a, px, py⟩` with `p, x, y >= 2`, `gcd(x, y) = 1`,
//! `gcd(a, p) = 1` and `a ∈ ⟨x, y⟩ \ {x, y}`. In embedding dimension 3 this
//! is equivalent to the semigroup being symmetric. Writing
//! `a = a'x + a''y`, the values `N_a`, `N_b`, `N_c` have closed forms in
//! `p, x, y, a', a''`.
//!
//! Structures are normalized so that `x < y` and `0 <= a'' < x`. The formulas
//! for `N_b` and `N_c` are evaluated under that normalization.

use std::collections::BTreeMap;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{NsError, Result};
use crate::index::{IndexReport, Method};
use crate::semigroup::NumericalSemigroup;

/// Which generator plays which role in `⟨a, b = px, c = py⟩`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Roles {
    pub a: u64,
    pub b: u64,
    pub c: u64,
}

/// A witness that a semigroup is a complete intersection of embedding
/// dimension 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CiEdim3Structure {
    pub roles: Roles,
    pub p: u64,
    pub x: u64,
    pub y: u64,
    /// Coefficient of `x` in the canonical decomposition `a = a'x + a''y`.
    pub a_prime: u64,
    /// Coefficient of `y`; `0 <= a'' < x`.
    pub a_dprime: u64,
}

/// The unique decomposition `a = a'x + a''y` with `0 <= a'' < x`, if `a` is a
/// nonnegative combination of `x` and `y` (`gcd(x, y) = 1`).
pub fn canonical_decomposition(a: u64, x: u64, y: u64) -> Option<(u64, u64)> {
    let (x_i, y_i, a_i) = (x as i128, y as i128, a as i128);
    let eg = y_i.extended_gcd(&x_i);
    if eg.gcd != 1 {
        return None;
    }
    // a'' ≡ a · y⁻¹ (mod x)
    let a_dprime = (a_i * eg.x).rem_euclid(x_i);
    let rest = a_i - a_dprime * y_i;
    if rest < 0 {
        return None;
    }
    Some(((rest / x_i) as u64, a_dprime as u64))
}

impl CiEdim3Structure {
    /// Validates `(a, p, x, y)` and fills in the canonical decomposition.
    /// `x` and `y` may be given in either order.
    pub fn new(a: u64, p: u64, x: u64, y: u64) -> Result<Self> {
        let (x, y) = if x <= y { (x, y) } else { (y, x) };
        let bad = |msg: String| Err(NsError::InvalidStructure(msg));
        if p < 2 || x < 2 || y < 2 {
            return bad(format!("need p, x, y >= 2, got p={p}, x={x}, y={y}"));
        }
        if x == y || x.gcd(&y) != 1 {
            return bad(format!("gcd(x, y) = {} for x={x}, y={y}", x.gcd(&y)));
        }
        if a.gcd(&p) != 1 {
            return bad(format!("gcd(a, p) = {} for a={a}, p={p}", a.gcd(&p)));
        }
        if a == x || a == y {
            return bad(format!("a = {a} is one of x, y"));
        }
        let (a_prime, a_dprime) = canonical_decomposition(a, x, y)
            .ok_or_else(|| NsError::InvalidStructure(format!("{a} is not in <{x},{y}>")))?;
        let b = p.checked_mul(x);
        let c = p.checked_mul(y);
        let (Some(b), Some(c)) = (b, c) else {
            return Err(NsError::Overflow {
                value: p as u128 * y as u128,
                cap: u64::MAX,
            });
        };
        Ok(CiEdim3Structure {
            roles: Roles { a, b, c },
            p,
            x,
            y,
            a_prime,
            a_dprime,
        })
    }

    /// The three generators, sorted.
    pub fn generators(&self) -> [u64; 3] {
        let mut g = [self.roles.a, self.roles.b, self.roles.c];
        g.sort_unstable();
        g
    }
}

/// All complete-intersection structures of an embedding-dimension-3
/// semigroup. Empty iff the semigroup is not symmetric.
pub fn detect_ci3(h: &NumericalSemigroup) -> Result<Vec<CiEdim3Structure>> {
    let g = h.generators();
    if g.len() != 3 {
        return Err(NsError::WrongEdim { edim: g.len() });
    }
    let mut found = Vec::new();
    for i in 0..3 {
        let a = g[i];
        let (b, c) = match i {
            0 => (g[1], g[2]),
            1 => (g[0], g[2]),
            _ => (g[0], g[1]),
        };
        let p = b.gcd(&c);
        if p < 2 {
            continue;
        }
        if let Ok(s) = CiEdim3Structure::new(a, p, b / p, c / p) {
            found.push(s);
        }
    }
    Ok(found)
}

/// `f(H) = pxy + pa - (a + b + c)`.
pub fn frobenius_ci3(s: &CiEdim3Structure) -> i64 {
    let (p, x, y, a) = (s.p as i64, s.x as i64, s.y as i64, s.roles.a as i64);
    p * x * y + p * a - (s.roles.a + s.roles.b + s.roles.c) as i64
}

/// `N_a` for an arbitrary nonnegative decomposition `a = a'x + a''y`, with
/// `x < y`.
pub fn n_a_general(x: u64, y: u64, a_prime: u64, a_dprime: u64) -> u64 {
    debug_assert!(x < y);
    if a_dprime.is_multiple_of(x) {
        x + a_prime + y * (a_dprime / x) - 1
    } else {
        y + a_prime + a_dprime + (y - x) * (a_dprime / x) - 1
    }
}

/// `N_b` from `p`, `x` and the decomposition `a = a'x + a''y`.
///
/// `N_c` is the same case split with `(x, a')` and `(y, a'')` exchanged.
pub fn n_b_general(p: u64, x: u64, a_prime: u64, a_dprime: u64) -> Result<u64> {
    if a_prime != 0 {
        return Ok(p + x - 1);
    }
    if a_dprime == 0 {
        return Err(NsError::InvalidStructure("a' = a'' = 0".into()));
    }
    match a_dprime.cmp(&p) {
        std::cmp::Ordering::Greater => Ok(p + x - 1),
        std::cmp::Ordering::Equal => Err(NsError::InvalidStructure(format!(
            "a' = 0 and a'' = p = {p}"
        ))),
        std::cmp::Ordering::Less if x.is_multiple_of(a_dprime) => Ok(a_dprime + p * (x / a_dprime) - 1),
        std::cmp::Ordering::Less => Ok(p + x - 1 + (p - a_dprime) * (x / a_dprime)),
    }
}

pub fn n_formula_a(s: &CiEdim3Structure) -> u64 {
    n_a_general(s.x, s.y, s.a_prime, s.a_dprime)
}

pub fn n_formula_b(s: &CiEdim3Structure) -> Result<u64> {
    n_b_general(s.p, s.x, s.a_prime, s.a_dprime)
}

pub fn n_formula_c(s: &CiEdim3Structure) -> Result<u64> {
    n_b_general(s.p, s.y, s.a_dprime, s.a_prime)
}

/// Special cases in which the index reduces to a minimum of two terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CorollaryCase {
    /// `a' ≠ 0, a'' ≠ 0`: `min{y + a' + a'' - 1, p + x - 1}`.
    BothNonzero,
    /// `a' = 0, p < a''`: `min{y + a'' - 1, p + x - 1}`.
    APrimeZero,
    /// `a'' = 0`: `min{p + x - 1, x + a' - 1}`.
    ADprimeZero,
}

/// The applicable special case and its index value, if any.
pub fn corollary_index(s: &CiEdim3Structure) -> Option<(CorollaryCase, u64)> {
    let (p, x, y, a1, a2) = (s.p, s.x, s.y, s.a_prime, s.a_dprime);
    if a1 != 0 && a2 != 0 {
        Some((CorollaryCase::BothNonzero, (y + a1 + a2 - 1).min(p + x - 1)))
    } else if a1 == 0 && p < a2 {
        Some((CorollaryCase::APrimeZero, (y + a2 - 1).min(p + x - 1)))
    } else if a2 == 0 {
        Some((CorollaryCase::ADprimeZero, (p + x - 1).min(x + a1 - 1)))
    } else {
        None
    }
}

/// `{generator: N}` from one structure's closed forms.
pub fn n_values_ci3(s: &CiEdim3Structure) -> Result<BTreeMap<u64, u32>> {
    let to_u32 = |v: u64| {
        u32::try_from(v).map_err(|_| NsError::Overflow {
            value: v as u128,
            cap: u32::MAX as u64,
        })
    };
    Ok(BTreeMap::from([
        (s.roles.a, to_u32(n_formula_a(s))?),
        (s.roles.b, to_u32(n_formula_b(s)?)?),
        (s.roles.c, to_u32(n_formula_c(s)?)?),
    ]))
}

/// Index report from the closed forms.
///
/// Every detected structure must induce the same `N` values, and the
/// applicable special case must agree with the minimum.
pub fn index_ci3(h: &NumericalSemigroup) -> Result<IndexReport> {
    let not_ci = || NsError::NotCiEdim3 {
        generators: h.generators().to_vec(),
    };
    if h.embedding_dimension() != 3 {
        return Err(not_ci());
    }
    let structures = detect_ci3(h)?;
    let first = structures.first().ok_or_else(not_ci)?;
    let n_values = n_values_ci3(first)?;
    for other in &structures[1..] {
        let alt = n_values_ci3(other)?;
        if alt != n_values {
            return Err(NsError::Inconsistent(format!(
                "structures {first:?} and {other:?} give {n_values:?} vs {alt:?}"
            )));
        }
    }
    let mut report = IndexReport::from_n_values(h, n_values, Method::Ci3)?;
    if let Some((case, value)) = corollary_index(first) {
        if value != report.index as u64 {
            return Err(NsError::Inconsistent(format!(
                "special case {case:?} gives {value}, minimum of N values is {}",
                report.index
            )));
        }
    }
    if !report.gorenstein {
        return Err(NsError::Inconsistent(format!(
            "{h} has a complete-intersection structure but is not symmetric"
        )));
    }
    report.note = None;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(gens: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::new(gens).unwrap()
    }

    #[test]
    fn detect_examples() {
        let s = detect_ci3(&h(&[8, 27, 45])).unwrap();
        assert_eq!(s.len(), 1);
        let s = s[0];
        assert_eq!(
            (s.roles.a, s.p, s.x, s.y, s.a_prime, s.a_dprime),
            (8, 9, 3, 5, 1, 1)
        );

        let s = detect_ci3(&h(&[4, 10, 15])).unwrap();
        let got: Vec<_> = s
            .iter()
            .map(|s| (s.roles.a, s.p, s.x, s.y, s.a_prime, s.a_dprime))
            .collect();
        assert_eq!(got, vec![(4, 5, 2, 3, 2, 0), (15, 2, 2, 5, 5, 1)]);

        assert!(detect_ci3(&h(&[4, 5, 11])).unwrap().is_empty());
        assert_eq!(
            detect_ci3(&h(&[2, 3])).unwrap_err(),
            NsError::WrongEdim { edim: 2 }
        );
    }

    #[test]
    fn decomposition() {
        assert_eq!(canonical_decomposition(8, 3, 5), Some((1, 1)));
        assert_eq!(canonical_decomposition(7, 3, 5), None);
        assert_eq!(canonical_decomposition(10, 3, 5), Some((0, 2)));
        assert_eq!(canonical_decomposition(0, 3, 5), Some((0, 0)));
    }

    #[test]
    fn invalid_structures() {
        assert!(CiEdim3Structure::new(10, 4, 3, 5).is_err()); // gcd(a, p) = 2
        assert!(CiEdim3Structure::new(7, 2, 3, 5).is_err()); // 7 ∉ ⟨3, 5⟩
        assert!(CiEdim3Structure::new(3, 2, 3, 5).is_err()); // a = x
        assert!(CiEdim3Structure::new(9, 2, 3, 6).is_err()); // gcd(x, y) = 3
        assert!(CiEdim3Structure::new(9, 1, 2, 5).is_err()); // p < 2
    }

    #[test]
    fn frobenius_examples() {
        let s = detect_ci3(&h(&[8, 27, 45])).unwrap()[0];
        assert_eq!(frobenius_ci3(&s), 127);
        let both = detect_ci3(&h(&[4, 10, 15])).unwrap();
        assert_eq!(frobenius_ci3(&both[0]), 21);
        assert_eq!(frobenius_ci3(&both[1]), 21);
    }

    #[test]
    fn n_a_examples() {
        let s = detect_ci3(&h(&[8, 27, 45])).unwrap()[0];
        assert_eq!(n_formula_a(&s), 6);
        let s = CiEdim3Structure::new(4, 5, 2, 3).unwrap();
        assert_eq!(n_formula_a(&s), 3);
        // 10 = 5·2 + 0·3 = 2·2 + 2·3
        assert_eq!(n_a_general(2, 3, 5, 0), 6);
        assert_eq!(n_a_general(2, 3, 2, 2), 6);
    }

    #[test]
    fn n_b_examples() {
        let s = detect_ci3(&h(&[8, 27, 45])).unwrap()[0];
        assert_eq!(n_formula_b(&s).unwrap(), 11);
        let s = CiEdim3Structure::new(4, 5, 2, 3).unwrap();
        assert_eq!(n_formula_b(&s).unwrap(), 6);
        // a' = 0, a'' = 2 < p = 3, 2 ∤ 3: ⟨10, 9, 15⟩
        let s = CiEdim3Structure::new(10, 3, 3, 5).unwrap();
        assert_eq!((s.a_prime, s.a_dprime), (0, 2));
        assert_eq!(n_formula_b(&s).unwrap(), 3 + 3 - 1 + 1);
        // a' = 0, a'' = 2 < p, 2 | x: a = 10, x = 4, y = 5, p = 3
        assert_eq!(n_b_general(3, 4, 0, 2).unwrap(), 2 + 3 * 2 - 1);
        assert!(n_b_general(3, 4, 0, 3).is_err());
    }

    #[test]
    fn n_c_examples() {
        let s = detect_ci3(&h(&[8, 27, 45])).unwrap()[0];
        assert_eq!(n_formula_c(&s).unwrap(), 13);
        let s = CiEdim3Structure::new(4, 5, 2, 3).unwrap();
        assert_eq!(n_formula_c(&s).unwrap(), 10);
        let s = CiEdim3Structure::new(15, 2, 2, 5).unwrap();
        assert_eq!(n_formula_c(&s).unwrap(), 6);
    }

    #[test]
    fn index_examples() {
        let r = index_ci3(&h(&[8, 27, 45])).unwrap();
        assert_eq!(r.index, 6);
        assert_eq!(r.method, Method::Ci3);
        let s = detect_ci3(&h(&[8, 27, 45])).unwrap()[0];
        assert_eq!(corollary_index(&s), Some((CorollaryCase::BothNonzero, 6)));

        let r = index_ci3(&h(&[4, 10, 15])).unwrap();
        assert_eq!(r.index, 3);
        assert_eq!(
            r.n_values,
            BTreeMap::from([(4, 3), (10, 6), (15, 10)])
        );

        assert_eq!(index_ci3(&h(&[12, 65, 91])).unwrap().index, 8);
        assert!(matches!(
            index_ci3(&h(&[4, 5, 11])),
            Err(NsError::NotCiEdim3 { .. })
        ));
        assert!(matches!(
            index_ci3(&h(&[2, 3])),
            Err(NsError::NotCiEdim3 { .. })
        ));
    }

    #[test]
    fn structure_json() {
        let s = CiEdim3Structure::new(8, 9, 3, 5).unwrap();
        let v = serde_json::to_value(s).unwrap();
        assert_eq!(v["roles"]["b"], 27);
        assert_eq!(v["a_dprime"], 1);
    }
}

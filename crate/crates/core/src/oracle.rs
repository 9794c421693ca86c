//! Brute-force membership and Frobenius computations.
//!
//! These use a plain reachability sieve and share no code with the
//! residue-class shortest paths behind [`NumericalSemigroup`], so they serve
//! as an independent check on it.
//!
//! [`NumericalSemigroup`]: crate::semigroup::NumericalSemigroup

/// `reach[w]` is true iff `w` is a nonnegative combination of `generators`.
pub fn membership_sieve(generators: &[u64], bound: u64) -> Vec<bool> {
    let mut reach = vec![false; bound as usize + 1];
    reach[0] = true;
    for w in 1..reach.len() {
        reach[w] = generators
            .iter()
            .any(|&g| g as usize <= w && reach[w - g as usize]);
    }
    reach
}

/// Frobenius number by extending the sieve until `min(generators)`
/// consecutive members appear; `None` if that does not happen below `limit`.
pub fn frobenius_by_sieve(generators: &[u64], limit: u64) -> Option<i64> {
    let m = *generators.iter().min()? as usize;
    let mut reach = vec![true];
    let mut run = 1usize;
    let mut last_gap: i64 = -1;
    let mut w = 0usize;
    while run < m {
        w += 1;
        if w as u64 > limit {
            return None;
        }
        let member = generators
            .iter()
            .any(|&g| g as usize <= w && reach[w - g as usize]);
        reach.push(member);
        if member {
            run += 1;
        } else {
            run = 0;
            last_gap = w as i64;
        }
    }
    Some(last_gap)
}

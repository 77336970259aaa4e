//! Integer machinery for the circulant constructions.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Greatest common divisor of two positive integers.
pub fn gcd(a: usize, b: usize) -> usize {
    num_integer::gcd(a, b)
}

/// Reduce `x` into the label range `1..=n` (so `0` maps to `n`).
pub fn label(x: i64, n: usize) -> usize {
    let n = n as i64;
    ((x - 1).rem_euclid(n) + 1) as usize
}

/// Canonical solution of a linear Diophantine equation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DioSolution {
    pub x0: i64,
    pub y0: i64,
}

/// Solve `a*x + b*y = c` for signed coefficients.
///
/// Returns the unique solution with `0 <= x0 < |b| / gcd(a, b)`; when the
/// coefficients are coprime this is the range `0..|b|`. Callers posing the
/// equation as `a*x - b*y = c` pass `-b`.
pub fn solve_diophantine(a: i64, b: i64, c: i64) -> Result<DioSolution> {
    if a == 0 || b == 0 {
        return Err(Error::PreconditionViolated(format!(
            "coefficients must be nonzero, got a = {a}, b = {b}"
        )));
    }
    let eg = a.extended_gcd(&b);
    let g = eg.gcd.abs();
    if c % g != 0 {
        return Err(Error::NoSolution { a, b, c });
    }
    // eg.x * a + eg.y * b = eg.gcd, which may carry either sign.
    let period = (b / g).abs();
    let scale = c / eg.gcd;
    let x0 = ((eg.x as i128 * scale as i128).rem_euclid(period as i128)) as i64;
    let rest = c as i128 - a as i128 * x0 as i128;
    debug_assert_eq!(rest % b as i128, 0);
    let y0 = (rest / b as i128) as i64;
    Ok(DioSolution { x0, y0 })
}

/// Position (1-based) of the element `1 + c` in the ordered progression
/// `1, 1 + a, 1 + 2a, ..., 1 + (b - 1)a` reduced modulo `b`.
///
/// Equals `1 + x0` where `x0` is the canonical solution of `a*x - b*y = c`.
pub fn position_in_progression(a: i64, b: i64, c: i64) -> Result<i64> {
    if b < 1 {
        return Err(Error::PreconditionViolated(format!("modulus {b} < 1")));
    }
    if !(0..b).contains(&c) {
        return Err(Error::InvalidRange {
            value: c,
            lo: 0,
            hi: b - 1,
        });
    }
    if a.gcd(&b) != 1 {
        return Err(Error::PreconditionViolated(format!("gcd({a}, {b}) != 1")));
    }
    Ok(1 + solve_diophantine(a, -b, c)?.x0)
}

/// One row `k_{i-1} = a_i * k_i + r_i` of the remainder reduction, with
/// `k_i = k_{i-1} - r_{i-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionStep {
    pub a: usize,
    pub k: usize,
    pub r: usize,
}

/// Remainder reduction of a coprime pair `n > k >= 2`.
///
/// Starting from `n = a*k + r`, each step replaces `(k, r)` by
/// `(k - r, k mod (k - r))` until the remainder vanishes, which happens with
/// final divisor 1. `steps[i - 1]` holds `(a_i, k_i, r_i)` for `i = 1..=m+1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionTrace {
    pub n: usize,
    pub k: usize,
    pub a: usize,
    pub r: usize,
    pub steps: Vec<ReductionStep>,
    pub m: usize,
    pub s: Option<usize>,
    pub t: usize,
}

impl ReductionTrace {
    /// `k_i` with `k_0 = k`.
    pub fn k_at(&self, i: usize) -> usize {
        if i == 0 {
            self.k
        } else {
            self.steps[i - 1].k
        }
    }

    /// `r_i` with `r_0 = r`.
    pub fn r_at(&self, i: usize) -> usize {
        if i == 0 {
            self.r
        } else {
            self.steps[i - 1].r
        }
    }
}

pub fn reduction_trace(n: usize, k: usize) -> Result<ReductionTrace> {
    if k < 2 || n <= k {
        return Err(Error::KOutOfRange {
            n,
            k,
            lo: 2,
            hi: n.saturating_sub(1),
        });
    }
    let g = gcd(n, k);
    if g != 1 {
        return Err(Error::NotCoprime { n, k, gcd: g });
    }
    let (a, r) = n.div_rem(&k);
    let mut steps = Vec::new();
    let (mut prev_k, mut prev_r) = (k, r);
    loop {
        let next_k = prev_k - prev_r;
        let (ai, ri) = prev_k.div_rem(&next_k);
        steps.push(ReductionStep {
            a: ai,
            k: next_k,
            r: ri,
        });
        if ri == 0 {
            break;
        }
        prev_k = next_k;
        prev_r = ri;
    }
    let m = steps.len() - 1;
    let mut trace = ReductionTrace {
        n,
        k,
        a,
        r,
        steps,
        m,
        s: None,
        t: 0,
    };
    trace.s = (1..m).find(|&i| trace.k_at(i) >= 3 && trace.r_at(i) == 1);
    trace.t = if r == 1 || r + 1 == k {
        k
    } else if let Some(s) = trace.s {
        trace.k_at(s) + 1
    } else {
        trace.k_at(m)
    };
    Ok(trace)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_canonical_x(a: i64, b: i64, c: i64) -> Option<i64> {
        // a*x - b*y = c  <=>  a*x = c (mod b)
        (0..b).find(|&x| (a * x - c).rem_euclid(b) == 0)
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd(60, 28), 4);
        assert_eq!(gcd(7, 7), 7);
        assert_eq!(gcd(56, 9), 1);
    }

    #[test]
    fn label_wraps_zero_to_n() {
        assert_eq!(label(0, 14), 14);
        assert_eq!(label(15, 14), 1);
        assert_eq!(label(-13, 14), 1);
        assert_eq!(label(-14, 14), 14);
    }

    #[test]
    fn diophantine_examples() {
        assert_eq!(
            solve_diophantine(7, -15, 35).unwrap(),
            DioSolution { x0: 5, y0: 0 }
        );
        for b in 1..20 {
            assert_eq!(
                solve_diophantine(1, -b, 0).unwrap(),
                DioSolution { x0: 0, y0: 0 }
            );
        }
        assert_eq!(brute_canonical_x(5, 14, 7), Some(7));
        assert_eq!(
            solve_diophantine(5, -14, 7).unwrap(),
            DioSolution { x0: 7, y0: 2 }
        );
    }

    #[test]
    fn diophantine_without_solution() {
        assert!(matches!(
            solve_diophantine(4, -6, 3),
            Err(Error::NoSolution { .. })
        ));
    }

    #[test]
    fn diophantine_non_coprime_reduces_period() {
        // 28x - 60y = 140 reduces to 7x - 15y = 35.
        let sol = solve_diophantine(28, -60, 140).unwrap();
        assert_eq!(sol.x0, 5);
        assert_eq!(28 * sol.x0 - 60 * sol.y0, 140);
    }

    #[test]
    fn position_examples() {
        assert_eq!(position_in_progression(1, 5, 3).unwrap(), 4);
        // 1, 6, 11, 2, 7: element 7 sits at position 5.
        assert_eq!(position_in_progression(5, 14, 6).unwrap(), 5);
        let brute = (1..=15).find(|&z| label(1 + 7 * (z - 1), 15) == 6).unwrap();
        assert_eq!(position_in_progression(7, 15, 5).unwrap(), brute);
        assert_eq!(brute, 1 + brute_canonical_x(7, 15, 5).unwrap());
    }

    #[test]
    fn position_rejects_out_of_range() {
        assert!(matches!(
            position_in_progression(3, 7, 7),
            Err(Error::InvalidRange { .. })
        ));
        assert!(matches!(
            position_in_progression(3, 7, -1),
            Err(Error::InvalidRange { .. })
        ));
    }

    #[test]
    fn trace_56_9() {
        let tr = reduction_trace(56, 9).unwrap();
        assert_eq!((tr.a, tr.r), (6, 2));
        let ks: Vec<_> = tr.steps.iter().map(|s| s.k).collect();
        assert_eq!(ks, vec![7, 5, 3, 1]);
        assert_eq!(tr.steps.last().unwrap().r, 0);
        assert_eq!(tr.m, 3);
        assert_eq!(tr.s, None);
        assert_eq!(tr.t, 3);
    }

    #[test]
    fn trace_87_20() {
        let tr = reduction_trace(87, 20).unwrap();
        assert_eq!((tr.a, tr.r), (4, 7));
        assert_eq!(tr.k_at(1), 13);
        assert_eq!((tr.k_at(2), tr.r_at(2)), (6, 1));
        assert_eq!(tr.s, Some(2));
        assert_eq!(tr.t, 7);
    }

    #[test]
    fn trace_77_10() {
        let tr = reduction_trace(77, 10).unwrap();
        assert_eq!((tr.a, tr.r), (7, 7));
        assert_eq!((tr.k_at(1), tr.r_at(1)), (3, 1));
        assert_eq!(tr.s, Some(1));
        assert_eq!(tr.t, 4);
    }

    #[test]
    fn trace_rejects_non_coprime() {
        assert!(matches!(
            reduction_trace(27, 9),
            Err(Error::NotCoprime { gcd: 9, .. })
        ));
    }
}

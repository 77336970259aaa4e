//! Ordered vertex sets `P_1..P_t` cutting the Hamiltonian jump cycle of a
//! coprime `C(n, k)` into consecutive runs.

use serde::{Deserialize, Serialize};

use crate::numth::{gcd, label, reduction_trace, ReductionTrace};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Scheme {
    /// `n mod k = 1`: `P_1` has `a + 1` elements, the rest `a`.
    R1,
    /// `n mod k = k - 1`: `P_1..P_{k-1}` have `a + 1` elements, `P_k` has `a`.
    RK1,
    /// Middle remainder with a reduction step `k_s >= 3, r_s = 1`: the sets
    /// walk with jump `n - k`.
    DescendingWithS,
    /// Middle remainder without such a step: the sets walk with jump `k`.
    AscendingNoS,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderedPartition {
    pub n: usize,
    pub k: usize,
    pub scheme: Scheme,
    /// Jump between consecutive elements of a set (`k` or `n - k`).
    pub walk: usize,
    pub sets: Vec<Vec<usize>>,
    pub t: usize,
    pub trace: ReductionTrace,
}

impl OrderedPartition {
    /// `P_i` with 1-based `i`.
    pub fn set(&self, i: usize) -> &[usize] {
        &self.sets[i - 1]
    }
}

pub fn build_partition(n: usize, k: usize) -> Result<OrderedPartition> {
    if k < 2 || 2 * k > n {
        return Err(Error::KOutOfRange {
            n,
            k,
            lo: 2,
            hi: n / 2,
        });
    }
    let g = gcd(n, k);
    if g != 1 {
        return Err(Error::NotCoprime { n, k, gcd: g });
    }
    let trace = reduction_trace(n, k)?;
    let (a, r, t) = (trace.a, trace.r, trace.t);
    let run = |start: usize, len: usize, walk: usize| -> Vec<usize> {
        (0..len)
            .map(|j| label((start + j * walk) as i64, n))
            .collect()
    };
    let (scheme, walk, sets) = if r == 1 {
        let sets = (1..=k)
            .map(|i| run(i, if i == 1 { a + 1 } else { a }, k))
            .collect();
        (Scheme::R1, k, sets)
    } else if r + 1 == k {
        let sets = (1..=k)
            .map(|i| run(i, if i < k { a + 1 } else { a }, k))
            .collect();
        (Scheme::RK1, k, sets)
    } else {
        let (scheme, walk) = if trace.s.is_some() {
            (Scheme::DescendingWithS, n - k)
        } else {
            (Scheme::AscendingNoS, k)
        };
        let mut sets = Vec::with_capacity(t);
        for i in 1..=t {
            // P_i runs from i to the element just before i + 1 (P_t closes at 1).
            let next = if i == t { 1 } else { i + 1 };
            let stop = label(next as i64 - walk as i64, n);
            let mut set = vec![i];
            let mut v = i;
            while v != stop {
                v = label((v + walk) as i64, n);
                if v <= t || set.len() > n {
                    return Err(Error::PreconditionViolated(format!(
                        "run from {i} in C({n}, {k}) meets {v} before {stop}"
                    )));
                }
                set.push(v);
            }
            sets.push(set);
        }
        (scheme, walk, sets)
    };
    let part = OrderedPartition {
        n,
        k,
        scheme,
        walk,
        sets,
        t,
        trace,
    };
    check_partition(&part)?;
    Ok(part)
}

fn check_partition(p: &OrderedPartition) -> Result<()> {
    let mut seen = vec![false; p.n + 1];
    for v in p.sets.iter().flatten() {
        if std::mem::replace(&mut seen[*v], true) {
            return Err(Error::PreconditionViolated(format!(
                "vertex {v} repeated in partition"
            )));
        }
    }
    if seen[1..].iter().any(|s| !s) || p.sets.len() != p.t {
        return Err(Error::PreconditionViolated(
            "sets do not cover the vertices".into(),
        ));
    }
    if matches!(p.scheme, Scheme::DescendingWithS | Scheme::AscendingNoS) {
        let head = p.sets[0].len();
        let tail = p.sets[p.t - 1].len();
        if p.sets[..p.t - 1].iter().any(|s| s.len() != head) || tail >= head {
            return Err(Error::PreconditionViolated(format!(
                "unequal run lengths in C({}, {}): {:?}",
                p.n,
                p.k,
                p.sets.iter().map(Vec::len).collect::<Vec<_>>()
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn r1_sizes() {
        let p = build_partition(56, 5).unwrap();
        assert_eq!(p.scheme, Scheme::R1);
        assert_eq!(p.t, 5);
        assert_eq!(p.set(1).len(), 12);
        assert!(p.sets[1..].iter().all(|s| s.len() == 11));
    }

    #[test]
    fn schemes_selected_by_remainder() {
        assert_eq!(build_partition(53, 9).unwrap().scheme, Scheme::RK1);
        assert_eq!(
            build_partition(87, 20).unwrap().scheme,
            Scheme::DescendingWithS
        );
        assert_eq!(
            build_partition(77, 10).unwrap().scheme,
            Scheme::DescendingWithS
        );
        assert_eq!(build_partition(56, 9).unwrap().scheme, Scheme::AscendingNoS);
    }

    #[test]
    fn errors() {
        assert!(matches!(
            build_partition(27, 9),
            Err(Error::NotCoprime { .. })
        ));
        assert!(matches!(
            build_partition(27, 14),
            Err(Error::KOutOfRange { .. })
        ));
        assert!(matches!(
            build_partition(27, 1),
            Err(Error::KOutOfRange { .. })
        ));
    }
}

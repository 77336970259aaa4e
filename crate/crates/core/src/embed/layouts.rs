//! Circular vertex orders for each route.
//!
//! Notation follows the constructions: `V_i` is the jump cycle through `i`,
//! `P_i` the runs of the coprime partition, `X^-` the reverse of `X`. Where a
//! construction's interleaving admits two readings, both orders are returned
//! (primary first) and the embedding builder keeps the first that works.

use crate::numth::{gcd, label};
use crate::partition::{build_partition, OrderedPartition};
use crate::{Error, Result};

use super::Route;

fn rev(x: &[usize]) -> Vec<usize> {
    x.iter().rev().copied().collect()
}

/// `V_i = (i, i + k, ..., i + (n/d - 1)k)`.
fn jump_cycle(n: usize, k: usize, i: usize) -> Vec<usize> {
    let len = n / gcd(n, k);
    (0..len).map(|j| label((i + j * k) as i64, n)).collect()
}

/// Zip two equally long rows into a ladder `x0 y0 | y1 x1 | x2 y2 | ...`.
/// With `pivot_first` the first rung repeats the orientation of the second
/// (`x0 y0 | x1 y1 | y2 x2 | ...`).
fn ladder(x: &[usize], y: &[usize], pivot_first: bool) -> Vec<usize> {
    debug_assert_eq!(x.len(), y.len());
    let mut out = Vec::with_capacity(2 * x.len());
    for j in 0..x.len() {
        let x_first = if pivot_first && j > 0 {
            j % 2 == 1
        } else {
            j % 2 == 0
        };
        if x_first {
            out.extend([x[j], y[j]]);
        } else {
            out.extend([y[j], x[j]]);
        }
    }
    out
}

fn concat(parts: Vec<Vec<usize>>) -> Vec<usize> {
    parts.into_iter().flatten().collect()
}

/// Candidate orders for `route`, primary reading first.
pub fn candidate_layouts(route: Route, n: usize, k: usize) -> Result<Vec<Vec<usize>>> {
    let d = gcd(n, k);
    let v = |i: usize| jump_cycle(n, k, i);
    Ok(match route {
        Route::Cycle | Route::Fallback => vec![(1..=n).collect()],
        Route::EvenOdd | Route::EvenOddHalf => {
            // 1, n, 3, n - 2, ..., n - 1, 2
            vec![(0..n / 2).flat_map(|j| [2 * j + 1, n - 2 * j]).collect()]
        }
        Route::EvenEvenHalf => {
            let mut order: Vec<usize> = (1..=n / 2).collect();
            order.extend((n / 2 + 1..=n).rev());
            vec![order]
        }
        Route::EvenEven => {
            // V_1^- V_2 V_3^- V_4 ... V_{d-1}^- V_d
            vec![concat(
                (1..=d)
                    .map(|i| if i % 2 == 1 { rev(&v(i)) } else { v(i) })
                    .collect(),
            )]
        }
        Route::GcdTriangles => {
            // V_1 V_2 V_3^- V_4 ... V_{d-2}^- V_{d-1} V_d^-
            vec![concat(
                (1..=d)
                    .map(|i| {
                        if i == 1 || i % 2 == 0 {
                            v(i)
                        } else {
                            rev(&v(i))
                        }
                    })
                    .collect(),
            )]
        }
        Route::GcdThree | Route::GcdWide => {
            let merged: Vec<Vec<usize>> = [true, false]
                .into_iter()
                .map(|pivot| ladder(&v(d - 1), &v(d), pivot))
                .collect();
            merged
                .into_iter()
                .map(|m| {
                    if route == Route::GcdThree {
                        // V_1 V'_2^-
                        concat(vec![v(1), rev(&m)])
                    } else {
                        // V_1 V_3 ... V_{d-2} V'_{d-1}^- V_{d-3}^- ... V_4^- V_2^-
                        let mut parts: Vec<Vec<usize>> = (1..=d - 2).step_by(2).map(v).collect();
                        parts.push(rev(&m));
                        parts.extend((2..=d - 3).rev().step_by(2).map(|i| rev(&v(i))));
                        concat(parts)
                    }
                })
                .collect()
        }
        Route::UnitRemainderShort => {
            // Q_1 = 1..=k+1, Q_2 = k+2..=n; order Q_1 Q_2^-
            let mut order: Vec<usize> = (1..=k + 1).collect();
            order.extend((k + 2..=n).rev());
            vec![order]
        }
        Route::UnitRemainderEvenK => {
            // P_1^- P_2 P_3^- ... P_k
            let p = build_partition(n, k)?;
            vec![alternate(&p, 1..=k, true)]
        }
        Route::UnitRemainderOddK => {
            let p = build_partition(n, k)?;
            let a = p.trace.a;
            let q_k = p.set(k).to_vec();
            let q_last = p.set(1)[1..].to_vec();
            if q_k.len() != a || q_last.len() != a {
                return Err(Error::PreconditionViolated(format!(
                    "run sizes in C({n}, {k})"
                )));
            }
            // Q_c = Q_{k+1,1} Q_{k,1} Q_{k,2} Q_{k+1,2} Q_{k+1,3} Q_{k,3} ...
            let qc = ladder(&q_last, &q_k, false);
            // Q_1 Q_c^- Q_2 Q_3^- ... Q_{k-2}^- Q_{k-1}
            let mut parts = vec![vec![1], rev(&qc)];
            parts.extend((2..k).map(|i| {
                if i % 2 == 0 {
                    p.set(i).to_vec()
                } else {
                    rev(p.set(i))
                }
            }));
            vec![concat(parts)]
        }
        Route::NearFullEvenK => {
            // P_1 P_2^- P_3 P_4^- ... P_{k-1} P_k^-
            let p = build_partition(n, k)?;
            vec![alternate(&p, 1..=k, false)]
        }
        Route::NearFullOddK => {
            // Q_i = (i-1)k+1 ..= ik, Q_{a+1} = ak+1 ..= n; order Q_1 Q_2^- Q_3 ... Q_a Q_{a+1}^-
            let a = n / k;
            let blocks: Vec<Vec<usize>> = (1..=a + 1)
                .map(|i| {
                    let hi = if i <= a { i * k } else { n };
                    let block: Vec<usize> = ((i - 1) * k + 1..=hi).collect();
                    if i % 2 == 0 {
                        rev(&block)
                    } else {
                        block
                    }
                })
                .collect();
            vec![concat(blocks)]
        }
        Route::OddRunsThreeLong | Route::OddRunsThreeShort | Route::OddRunsMany => {
            let p = build_partition(n, k)?;
            odd_runs(&p, route)?
        }
        Route::EvenRunsTwo | Route::EvenRunsMany => {
            let p = build_partition(n, k)?;
            even_runs(&p, route)?
        }
    })
}

/// Concatenate `P_i` for `i` in `range`, reversing odd `i` when
/// `odd_reversed`, even `i` otherwise.
fn alternate(
    p: &OrderedPartition,
    range: impl Iterator<Item = usize>,
    odd_reversed: bool,
) -> Vec<usize> {
    concat(
        range
            .map(|i| {
                if (i % 2 == 1) == odd_reversed {
                    rev(p.set(i))
                } else {
                    p.set(i).to_vec()
                }
            })
            .collect(),
    )
}

fn split_at_len(set: &[usize], len: usize) -> (Vec<usize>, Vec<usize>) {
    (set[..len].to_vec(), set[len..].to_vec())
}

/// Split `set` just before the element `x`.
fn split_before(set: &[usize], x: usize) -> Result<(Vec<usize>, Vec<usize>)> {
    let at = set
        .iter()
        .position(|&v| v == x)
        .ok_or_else(|| Error::PreconditionViolated(format!("{x} missing from run {set:?}")))?;
    Ok(split_at_len(set, at))
}

/// Odd `t >= 3`.
fn odd_runs(p: &OrderedPartition, route: Route) -> Result<Vec<Vec<usize>>> {
    let t = p.t;
    let short = p.set(t).len();
    let (p1a, p1b) = split_at_len(p.set(1), short);
    let (pta, ptb) = split_at_len(p.set(t - 1), short);
    // P'_t merges P'_{t-1} and P_t: t-1, t, t+w, t-1+w, t-1+2w, t+2w, ...
    let merged = ladder(&pta, p.set(t), false);
    Ok(if route == Route::OddRunsMany {
        // P_1^- P_2 P_3^- ... P_{t-4}^- P_{t-3} P''_{t-1} P_{t-2}^- P'_t
        let mut order = alternate(p, 1..=t - 3, true);
        order.extend(ptb);
        order.extend(rev(p.set(t - 2)));
        order.extend(merged);
        vec![order]
    } else {
        // P'_1 P'_3^- P''_1 P''_2^-
        vec![concat(vec![p1a, rev(&merged), p1b, rev(&ptb)])]
    })
}

/// Even `t >= 2`.
fn even_runs(p: &OrderedPartition, route: Route) -> Result<Vec<Vec<usize>>> {
    let (n, t) = (p.n, p.t);
    if route == Route::EvenRunsTwo {
        let (p1a, p1b) = split_before(p.set(1), n)?;
        let (p2a, p2b) = split_before(p.set(2), n - 1)?;
        if p1b.len() != p2b.len() {
            return Err(Error::PreconditionViolated(format!(
                "unequal tails {p1b:?} / {p2b:?}"
            )));
        }
        // L = n, n-1, w-1, w, 2w, 2w-1, ...; order P'_1 L^- P'_2^-
        return Ok([false, true]
            .into_iter()
            .map(|pivot| {
                concat(vec![
                    p1a.clone(),
                    rev(&ladder(&p1b, &p2b, pivot)),
                    rev(&p2a),
                ])
            })
            .collect());
    }
    let (p1a, p1b) = split_before(p.set(1), t + 1)?;
    let (pla, plb) = split_before(p.set(t - 1), n)?;
    if p1a.len() != plb.len() {
        return Err(Error::PreconditionViolated(format!(
            "unequal runs {p1a:?} / {plb:?}"
        )));
    }
    // L = n, 1, w, 1+w, 1+2w, 2w, ...
    // order P_2^- P_3 P_4^- ... P_{t-2}^- P'_{t-1} L P_t^- P''_1
    Ok([true, false]
        .into_iter()
        .map(|pivot| {
            let mut order = alternate(p, 2..=t - 2, false);
            order.extend(pla.iter().copied());
            order.extend(ladder(&plb, &p1a, pivot));
            order.extend(rev(p.set(t)));
            order.extend(p1b.iter().copied());
            order
        })
        .collect())
}

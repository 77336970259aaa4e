//! Closed-form page rules for the routes whose coloring is fully determined
//! by the construction. Other routes return `None` and are colored exactly.

use crate::graph::Edge;
use crate::numth::{gcd, label};
use crate::partition::build_partition;

use super::{Route, BLUE, GREEN, PURPLE, RED, YELLOW};

pub(super) fn pages(
    route: Route,
    n: usize,
    k: usize,
    _order: &[usize],
) -> Option<Vec<(Edge, usize)>> {
    let at = |x: i64| label(x, n);
    let e = |a: i64, b: i64| Edge::new(at(a), at(b));
    let (ni, ki) = (n as i64, k as i64);
    let mut out = Vec::new();
    match route {
        Route::Cycle => {
            for i in 1..=ni {
                let page = if n % 2 == 1 && i == ni {
                    GREEN
                } else if i % 2 == 1 {
                    YELLOW
                } else {
                    PURPLE
                };
                out.push((e(i, i + 1), page));
            }
        }
        Route::EvenOdd | Route::EvenOddHalf => {
            for i in 1..=ni {
                out.push((e(i, i + 1), if i % 2 == 1 { YELLOW } else { PURPLE }));
            }
            if route == Route::EvenOddHalf {
                // Each diameter has exactly one even endpoint.
                for i in (2..=ni).step_by(2) {
                    out.push((e(i, i + ki), GREEN));
                }
            } else {
                for i in 1..=ni {
                    out.push((e(i, i + ki), if i % 2 == 0 { GREEN } else { RED }));
                }
            }
        }
        Route::EvenEvenHalf => {
            out.push((e(1, ni), PURPLE));
            for i in 1..ni {
                out.push((e(i, i + 1), if i % 2 == 1 { RED } else { GREEN }));
            }
            for i in 1..=ni / 2 {
                out.push((e(i, i + ki), YELLOW));
            }
        }
        Route::GcdTriangles => {
            // n = 3k, d = k, V_i = {i, i + k, i + 2k}.
            let d = ki;
            let succ = |out: &mut Vec<(Edge, usize)>, i: i64, page| {
                for j in [i, i + ki, i + 2 * ki] {
                    out.push((e(j, j + 1), page));
                }
            };
            for i in (2..=d - 1).step_by(2) {
                succ(&mut out, i, YELLOW);
            }
            out.push((e(1, 1 + 2 * ki), YELLOW));
            for i in (3..=d - 2).step_by(2) {
                succ(&mut out, i, RED);
            }
            for (a, b) in [
                (1, 1 + ki),
                (2, 2 + ki),
                (1 + 2 * ki, 2 + 2 * ki),
                (d, d + 2 * ki),
            ] {
                out.push((e(a, b), RED));
            }
            out.push((e(1, 2), PURPLE));
            for i in [1, 2, d] {
                out.push((e(i + ki, i + 2 * ki), PURPLE));
            }
            for (a, b) in [(1, ni), (1 + ki, 2 + ki), (d, d + ki)] {
                out.push((e(a, b), BLUE));
            }
            for (a, b) in [(1 + ki, ki), (1 + 2 * ki, 2 * ki), (2, 2 + 2 * ki)] {
                out.push((e(a, b), GREEN));
            }
            for i in 3..=d - 1 {
                out.push((e(i, i + ki), PURPLE));
                out.push((e(i, i + 2 * ki), BLUE));
                out.push((e(i + ki, i + 2 * ki), GREEN));
            }
        }
        Route::UnitRemainderShort => {
            // n = 2k + 1, Q_1 = 1..=k+1, Q_2 = k+2..=n.
            out.push((e(1, 1 + ki), PURPLE));
            for i in 2..=ki + 1 {
                out.push((e(i, i + ki), GREEN));
            }
            for i in ki + 2..=ni {
                out.push((e(i, i + ki), RED));
            }
            out.push((e(1, 2), YELLOW));
            out.push((e(1 + ki, 2 + ki), YELLOW));
            out.push((e(1, ni), BLUE));
            for i in 2..=ki {
                out.push((e(i, i + 1), if (ki - i) % 2 == 0 { BLUE } else { PURPLE }));
            }
            for i in ki + 2..ni {
                out.push((
                    e(i, i + 1),
                    if (ni - 1 - i) % 2 == 0 { PURPLE } else { BLUE },
                ));
            }
        }
        _ => return None,
    }
    Some(out)
}

/// Partial page rules used to seed the exact search when the construction
/// only pins down part of the coloring unambiguously.
pub(super) fn hints(route: Route, n: usize, k: usize) -> Option<Vec<(Edge, usize)>> {
    let at = |x: i64| label(x, n);
    let e = |a: i64, b: i64| Edge::new(at(a), at(b));
    let (ni, ki) = (n as i64, k as i64);
    let mut out = Vec::new();
    match route {
        Route::EvenRunsTwo => {
            let p = build_partition(n, k).ok()?;
            let split = |set: &[usize], x: usize| -> Option<(Vec<i64>, Vec<i64>)> {
                let at = set.iter().position(|&v| v == x)?;
                let to = |s: &[usize]| s.iter().map(|&v| v as i64).collect();
                Some((to(&set[..at]), to(&set[at..])))
            };
            let (_, p1b) = split(p.set(1), n)?;
            let (p2a, p2b) = split(p.set(2), n - 1)?;
            // the n-cycle
            for &i in &p2a {
                out.push((e(i - 1, i), PURPLE));
                out.push((e(i, i + 1), GREEN));
            }
            for &i in &p2b {
                if i != ni - 1 {
                    out.push((e(i, i + 1), PURPLE));
                }
                out.push((e(i, i - 1), RED));
            }
            out.push((e(1, ni), RED));
            out.push((e(ni - 1, ni), GREEN));
            for &i in p1b.iter().filter(|&&i| i != ni) {
                out.push((e(i, i + 1), YELLOW));
            }
            // rungs between the two tails
            out.push((e(ni - ki, ni), PURPLE));
            out.push((e(ni - 1, ni - 1 - ki), YELLOW));
            for (pos, &i) in p1b.iter().enumerate() {
                let page = if pos % 2 == 1 { GREEN } else { BLUE };
                out.push((e(i, i + ki), page));
                out.push((e(i - 1, i - 1 + ki), page));
            }
        }
        Route::GcdWide => {
            let d = gcd(n, k) as i64;
            let m = ni / d;
            // position of n in V_d = (d, d + k, ...)
            let n_pos = (0..m).find(|&p| at(d + p * ki) == n)?;
            let before_n = |j: i64| (0..n_pos).any(|p| at(d + p * ki) == at(j));
            let v_d = |p: i64| d + p * ki;
            // edges between the last two jump cycles
            for p in 0..m {
                let j = v_d(p);
                let page = match p {
                    _ if p == m - 2 => RED,
                    _ if p == m - 3 => BLUE,
                    _ if before_n(j) => PURPLE,
                    _ => GREEN,
                };
                out.push((e(j - 1, j), page));
            }
            // the rest of the n-cycle
            for i in 1..=d - 2 {
                for p in 0..m {
                    let j = i + p * ki;
                    if i % 2 == 0 {
                        out.push((e(j, j + 1), RED));
                    } else if at(j) != at(d - 2 + ki) {
                        out.push((e(j, j + 1), YELLOW));
                    }
                }
            }
            out.push((e(d - 2 + ki, d - 1 + ki), BLUE));
            out.push((e(d, d + 1), BLUE));
            for p in 1..m {
                let j = v_d(p);
                out.push((e(j, j + 1), if before_n(j) { GREEN } else { PURPLE }));
            }
            // rungs of the last two jump cycles
            out.push((e(d - 1, d - 1 + ki), GREEN));
            out.push((e(d, d + ki), YELLOW));
            for p in 1..m {
                let i = v_d(p);
                let page = if p == m - 3 {
                    if before_n(i) {
                        PURPLE
                    } else {
                        GREEN
                    }
                } else if p == m - 1 || (p % 2 == 1 && p <= m - 4) {
                    RED
                } else {
                    BLUE
                };
                out.push((e(i - 1, i - 1 + ki), page));
                out.push((e(i, i + ki), page));
            }
            // first jump cycle: two fixed edges, the rest alternate from (1, 1 - k)
            out.push((e(d + 1 - ki, d + 1), GREEN));
            out.push((e(d + 1, d + 1 + ki), PURPLE));
            let path: Vec<i64> = (0..m - 1).map(|q| d + 1 + (q + 1) * ki).collect();
            let anchor = path.iter().position(|&x| at(x + ki) == 1)? as i64;
            for (q, w) in path.windows(2).enumerate() {
                let page = if (q as i64 - anchor) % 2 == 0 {
                    RED
                } else {
                    BLUE
                };
                out.push((e(w[0], w[1]), page));
            }
            for i in 2..=d - 2 {
                out.push((e(i, i - ki), PURPLE));
            }
            out.push((e(d - 2, d - 2 + ki), GREEN));
            out.push((e(d - 2 + ki, d - 2 + 2 * ki), PURPLE));
        }
        _ => return None,
    }
    let mut seen = std::collections::HashMap::new();
    out.retain(|&(edge, page)| *seen.entry(edge).or_insert(page) == page);
    Some(out)
}

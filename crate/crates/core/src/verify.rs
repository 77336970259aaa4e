//! Ground truth for matching book embeddings.
//!
//! [`verify_embedding`] checks an embedding against the definition: every
//! edge on exactly one page, and each page a matching whose chords are
//! pairwise noncrossing in the circular layout. [`brute_force_mbt`] computes
//! the matching book thickness of a small graph by trying every circular
//! order and coloring its conflict graph exactly.

use std::collections::BTreeSet;
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::sync::Mutex;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coloring::{chromatic_number, ConflictGraph};
use crate::embed::{BookEmbedding, Layout};
use crate::graph::{CirculantSpec, Edge};
use crate::{Error, Result};

/// Largest order accepted by the exhaustive oracle.
pub const ORACLE_MAX_N: usize = 10;

/// Default page cap: one above the largest value the constructions need.
pub const DEFAULT_PAGE_CAP: usize = 6;

/// Strict interleaving of chord endpoints around the circle. Chords sharing
/// an endpoint never cross.
pub fn crosses(layout: &Layout, e1: Edge, e2: Edge) -> Result<bool> {
    let pos = |v| layout.position(v).ok_or(Error::UnknownVertex(v));
    let (a, b) = (pos(e1.u)?, pos(e1.v)?);
    let (c, d) = (pos(e2.u)?, pos(e2.v)?);
    Ok(interleaved(a, b, c, d))
}

/// Positions version of [`crosses`].
pub fn interleaved(a: usize, b: usize, c: usize, d: usize) -> bool {
    if a == c || a == d || b == c || b == d {
        return false;
    }
    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
    let inside = |x: usize| lo < x && x < hi;
    inside(c) != inside(d)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    SharedEndpoint,
    Crossing,
    MissingEdge,
    UnknownEdge,
    DuplicateEdge,
    PageOutOfRange,
    BadLayout,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub first: Option<Edge>,
    pub second: Option<Edge>,
    pub page: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub proper_matching_per_page: bool,
    pub noncrossing_per_page: bool,
    pub complete_cover: bool,
    pub pages_used: usize,
    pub first_violation: Option<Violation>,
}

impl VerificationReport {
    pub fn is_valid(&self) -> bool {
        self.proper_matching_per_page && self.noncrossing_per_page && self.complete_cover
    }
}

pub fn verify_embedding(spec: &CirculantSpec, emb: &BookEmbedding) -> VerificationReport {
    let mut report = VerificationReport {
        proper_matching_per_page: true,
        noncrossing_per_page: true,
        complete_cover: true,
        pages_used: 0,
        first_violation: None,
    };
    let note = |report: &mut VerificationReport, kind, first, second, page| {
        if report.first_violation.is_none() {
            report.first_violation = Some(Violation {
                kind,
                first,
                second,
                page,
            });
        }
    };

    let n = spec.n();
    let order = emb.layout.order();
    let mut seen = vec![false; n + 1];
    let permutation = order.len() == n
        && order
            .iter()
            .all(|&v| (1..=n).contains(&v) && !std::mem::replace(&mut seen[v], true));
    if !permutation {
        report.complete_cover = false;
        note(&mut report, ViolationKind::BadLayout, None, None, None);
        return report;
    }

    let expected: BTreeSet<Edge> = spec.edges().into_iter().collect();
    let mut covered = BTreeSet::new();
    let mut pages: Vec<Vec<Edge>> = vec![Vec::new(); emb.pages];
    for &(e, p) in &emb.assignment {
        if !expected.contains(&e) {
            report.complete_cover = false;
            note(
                &mut report,
                ViolationKind::UnknownEdge,
                Some(e),
                None,
                Some(p),
            );
            continue;
        }
        if !covered.insert(e) {
            report.complete_cover = false;
            note(
                &mut report,
                ViolationKind::DuplicateEdge,
                Some(e),
                None,
                Some(p),
            );
            continue;
        }
        if p >= emb.pages {
            report.complete_cover = false;
            note(
                &mut report,
                ViolationKind::PageOutOfRange,
                Some(e),
                None,
                Some(p),
            );
            continue;
        }
        pages[p].push(e);
    }
    if let Some(&missing) = expected.difference(&covered).next() {
        report.complete_cover = false;
        note(
            &mut report,
            ViolationKind::MissingEdge,
            Some(missing),
            None,
            None,
        );
    }
    report.pages_used = pages.iter().filter(|p| !p.is_empty()).count();

    for (p, edges) in pages.iter_mut().enumerate() {
        edges.sort_unstable();
        for (i, &e) in edges.iter().enumerate() {
            for &f in &edges[i + 1..] {
                if e.shares_endpoint(&f) {
                    report.proper_matching_per_page = false;
                    note(
                        &mut report,
                        ViolationKind::SharedEndpoint,
                        Some(e),
                        Some(f),
                        Some(p),
                    );
                } else if crosses(&emb.layout, e, f).unwrap_or(true) {
                    report.noncrossing_per_page = false;
                    note(
                        &mut report,
                        ViolationKind::Crossing,
                        Some(e),
                        Some(f),
                        Some(p),
                    );
                }
            }
        }
    }
    report
}

/// Conflict graph of `edges` under `layout`: two edges conflict when they
/// share an endpoint or cross. Its chromatic number is the least page count
/// of a matching book embedding with this layout.
pub fn conflict_graph(layout: &Layout, edges: &[Edge]) -> ConflictGraph {
    let pos: Vec<(usize, usize)> = edges
        .iter()
        .map(|e| {
            (
                layout.position(e.u).expect("vertex in layout"),
                layout.position(e.v).expect("vertex in layout"),
            )
        })
        .collect();
    let mut g = ConflictGraph::new(edges.len());
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            let (a, b) = pos[i];
            let (c, d) = pos[j];
            if edges[i].shares_endpoint(&edges[j]) || interleaved(a, b, c, d) {
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// Optimal layout found by [`exhaustive_search`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleWitness {
    pub pages: usize,
    pub order: Vec<usize>,
    pub assignment: Vec<(Edge, usize)>,
}

/// Exact matching book thickness by exhaustive search over circular orders.
///
/// Vertex 1 is fixed at position 0 and reflections are removed by requiring
/// the second vertex to be smaller than the last. Returns
/// [`Error::ExceedsCap`] if no order fits in `page_cap` pages.
pub fn brute_force_mbt(spec: &CirculantSpec, page_cap: usize) -> Result<usize> {
    exhaustive_search(spec, page_cap).map(|w| w.pages)
}

pub fn exhaustive_search(spec: &CirculantSpec, page_cap: usize) -> Result<OracleWitness> {
    let n = spec.n();
    if n > ORACLE_MAX_N {
        return Err(Error::TooLarge {
            n,
            max: ORACLE_MAX_N,
        });
    }
    let edges = spec.edges();
    // A proper edge coloring needs at least max-degree colors.
    let floor = spec.max_degree();
    let best = AtomicUsize::new(page_cap + 1);
    let done = AtomicBool::new(false);
    let witness: Mutex<Option<OracleWitness>> = Mutex::new(None);

    let ends: Vec<(usize, usize)> = (2..=n)
        .flat_map(|a| (a + 1..=n).map(move |b| (a, b)))
        .collect();
    let consider = |order: &[usize]| {
        let cur = best.load(Ordering::Relaxed);
        if cur <= floor {
            done.store(true, Ordering::Relaxed);
            return;
        }
        let layout = Layout::new(order.to_vec());
        let g = conflict_graph(&layout, &edges);
        if let Some((c, col)) = chromatic_number(&g, cur - 1) {
            let mut w = witness.lock().unwrap();
            // Keep the lexicographically smallest order among equal optima so
            // the witness does not depend on scheduling.
            let better = match w.as_ref() {
                None => true,
                Some(old) => (c, order) < (old.pages, old.order.as_slice()),
            };
            if better {
                best.fetch_min(c, Ordering::Relaxed);
                *w = Some(OracleWitness {
                    pages: c,
                    order: order.to_vec(),
                    assignment: edges.iter().copied().zip(col).collect(),
                });
            }
        }
    };

    if n == 3 {
        consider(&[1, 2, 3]);
    } else {
        ends.par_iter().for_each(|&(second, last)| {
            if done.load(Ordering::Relaxed) {
                return;
            }
            let middle: Vec<usize> = (2..=n).filter(|&v| v != second && v != last).collect();
            let mut order = vec![0; n];
            order[0] = 1;
            order[1] = second;
            order[n - 1] = last;
            permute(
                &middle,
                &mut order,
                2,
                &mut vec![false; middle.len()],
                &mut |o| {
                    if !done.load(Ordering::Relaxed) {
                        consider(o)
                    }
                },
            );
        });
    }
    let out = witness.into_inner().unwrap();
    out.filter(|w| w.pages <= page_cap)
        .ok_or(Error::ExceedsCap(page_cap))
}

fn permute(
    pool: &[usize],
    order: &mut Vec<usize>,
    at: usize,
    used: &mut Vec<bool>,
    visit: &mut dyn FnMut(&[usize]),
) {
    if at == order.len() - 1 {
        visit(order);
        return;
    }
    for i in 0..pool.len() {
        if used[i] {
            continue;
        }
        used[i] = true;
        order[at] = pool[i];
        permute(pool, order, at + 1, used, visit);
        used[i] = false;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(a: usize, b: usize) -> Edge {
        Edge::new(a, b)
    }

    #[test]
    fn crossing_examples() {
        let l = Layout::new(vec![1, 2, 3, 4]);
        assert!(crosses(&l, e(1, 3), e(2, 4)).unwrap());
        assert!(!crosses(&l, e(1, 2), e(3, 4)).unwrap());
        assert!(!crosses(&l, e(1, 2), e(2, 3)).unwrap());
        assert!(matches!(
            crosses(&l, e(1, 5), e(2, 3)),
            Err(Error::UnknownVertex(5))
        ));
    }

    #[test]
    fn oracle_small_values() {
        let mbt =
            |n, k| brute_force_mbt(&CirculantSpec::ck(n, k).unwrap(), DEFAULT_PAGE_CAP).unwrap();
        assert_eq!(mbt(4, 1), 2);
        assert_eq!(mbt(5, 1), 3);
        assert_eq!(mbt(4, 2), 4);
        assert_eq!(mbt(5, 2), 5);
        assert_eq!(mbt(6, 2), 5);
    }

    #[test]
    fn oracle_guard_and_cap() {
        let big = CirculantSpec::ck(11, 2).unwrap();
        assert!(matches!(
            brute_force_mbt(&big, 6),
            Err(Error::TooLarge { .. })
        ));
        let k5 = CirculantSpec::ck(5, 2).unwrap();
        assert!(matches!(brute_force_mbt(&k5, 4), Err(Error::ExceedsCap(4))));
    }

    #[test]
    fn witness_is_a_valid_embedding() {
        let spec = CirculantSpec::ck(7, 3).unwrap();
        let w = exhaustive_search(&spec, 6).unwrap();
        let emb = BookEmbedding::new(
            Layout::new(w.order),
            w.pages,
            w.assignment,
            crate::Route::Fallback,
        );
        assert!(verify_embedding(&spec, &emb).is_valid());
    }
}

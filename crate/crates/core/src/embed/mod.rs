//! Optimal matching book embeddings of `C(n, k)`.
//!
//! [`embed`] routes `(n, k)` to one of the constructive cases (see [`Route`]),
//! lays the vertices out on the circle in that case's order, and assigns
//! pages. Cases whose page rules are fully determined use them directly;
//! otherwise the conflict graph of the case's layout is colored exactly with
//! the predicted number of pages. Every result is checked by
//! [`verify_embedding`] before it is returned.

pub mod layouts;
mod prescribed;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::coloring::{color_with, tabu_color, Outcome};
use crate::graph::{CirculantSpec, Edge};
use crate::numth::gcd;
use crate::partition::build_partition;
use crate::verify::{conflict_graph, exhaustive_search, verify_embedding, ORACLE_MAX_N};
use crate::{Error, Result};

pub use layouts::candidate_layouts;

/// Page names in index order.
pub const PALETTE: [&str; 5] = ["yellow", "purple", "green", "red", "blue"];
pub const YELLOW: usize = 0;
pub const PURPLE: usize = 1;
pub const GREEN: usize = 2;
pub const RED: usize = 3;
pub const BLUE: usize = 4;

/// Search nodes allowed per candidate layout when coloring exactly.
const SEARCH_BUDGET: u64 = 20_000;
const TABU_ITERS: u64 = 400_000;
const TABU_SEEDS: u64 = 4;

/// Circular vertex order; index 0 is the anchor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "Vec<usize>", into = "Vec<usize>")]
pub struct Layout {
    order: Vec<usize>,
    pos: HashMap<usize, usize>,
}

impl Layout {
    pub fn new(order: Vec<usize>) -> Self {
        let pos = order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        Layout { order, pos }
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn position(&self, v: usize) -> Option<usize> {
        self.pos.get(&v).copied()
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }
}

impl From<Vec<usize>> for Layout {
    fn from(order: Vec<usize>) -> Self {
        Layout::new(order)
    }
}

impl From<Layout> for Vec<usize> {
    fn from(l: Layout) -> Self {
        l.order
    }
}

/// Which construction produced an embedding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Route {
    /// `k = 1`: the plain `n`-cycle.
    Cycle,
    /// `n` even, `k` odd, `k != n/2`.
    EvenOdd,
    /// `n` even, `k = n/2` odd.
    EvenOddHalf,
    /// `n`, `k` even, `k = n/2`.
    EvenEvenHalf,
    /// `n`, `k` even, `k != n/2`.
    EvenEven,
    /// `n` odd, `gcd(n, k) > 1`, `n = 3k`.
    GcdTriangles,
    /// `n` odd, `n != 3k`, `gcd(n, k) = 3`.
    GcdThree,
    /// `n` odd, `n != 3k`, `gcd(n, k) >= 5`.
    GcdWide,
    /// Coprime, `n mod k = 1`, `n = 2k + 1`.
    UnitRemainderShort,
    /// Coprime, `n mod k = 1`, `a >= 3`, `k` even.
    UnitRemainderEvenK,
    /// Coprime, `n mod k = 1`, `a >= 3`, `k` odd.
    UnitRemainderOddK,
    /// Coprime, `n mod k = k - 1`, `k` even.
    NearFullEvenK,
    /// Coprime, `n mod k = k - 1`, `k` odd.
    NearFullOddK,
    /// Middle remainder, `t = 3`, `|P_t| > |P_1| / 2`.
    OddRunsThreeLong,
    /// Middle remainder, `t = 3`, `|P_t| <= |P_1| / 2`.
    OddRunsThreeShort,
    /// Middle remainder, `t > 3` odd.
    OddRunsMany,
    /// Middle remainder, `t = 2`.
    EvenRunsTwo,
    /// Middle remainder, `t >= 4` even.
    EvenRunsMany,
    /// Exhaustive search on a small instance.
    Fallback,
}

impl Route {
    pub const ALL: [Route; 19] = [
        Route::Cycle,
        Route::EvenOdd,
        Route::EvenOddHalf,
        Route::EvenEvenHalf,
        Route::EvenEven,
        Route::GcdTriangles,
        Route::GcdThree,
        Route::GcdWide,
        Route::UnitRemainderShort,
        Route::UnitRemainderEvenK,
        Route::UnitRemainderOddK,
        Route::NearFullEvenK,
        Route::NearFullOddK,
        Route::OddRunsThreeLong,
        Route::OddRunsThreeShort,
        Route::OddRunsMany,
        Route::EvenRunsTwo,
        Route::EvenRunsMany,
        Route::Fallback,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Route::Cycle => "cycle",
            Route::EvenOdd => "even-n/odd-k",
            Route::EvenOddHalf => "even-n/odd-k/k=n/2",
            Route::EvenEvenHalf => "even-n/even-k/k=n/2",
            Route::EvenEven => "even-n/even-k/k!=n/2",
            Route::GcdTriangles => "odd-n/gcd>1/n=3k",
            Route::GcdThree => "odd-n/gcd>1/d=3",
            Route::GcdWide => "odd-n/gcd>1/d>=5",
            Route::UnitRemainderShort => "odd-n/coprime/r=1/a=2",
            Route::UnitRemainderEvenK => "odd-n/coprime/r=1/a>=3/k-even",
            Route::UnitRemainderOddK => "odd-n/coprime/r=1/a>=3/k-odd",
            Route::NearFullEvenK => "odd-n/coprime/r=k-1/k-even",
            Route::NearFullOddK => "odd-n/coprime/r=k-1/k-odd",
            Route::OddRunsThreeLong => "odd-n/coprime/t-odd/t=3/|Pt|>half",
            Route::OddRunsThreeShort => "odd-n/coprime/t-odd/t=3/|Pt|<=half",
            Route::OddRunsMany => "odd-n/coprime/t-odd/t>3",
            Route::EvenRunsTwo => "odd-n/coprime/t-even/t=2",
            Route::EvenRunsMany => "odd-n/coprime/t-even/t>=4",
            Route::Fallback => "fallback",
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Route {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Route::ALL
            .into_iter()
            .find(|r| r.tag() == s)
            .ok_or_else(|| Error::PreconditionViolated(format!("unknown route tag {s:?}")))
    }
}

impl Serialize for Route {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.tag())
    }
}

impl<'de> Deserialize<'de> for Route {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// How the pages of an embedding were assigned.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// Closed-form page rules for the route.
    Prescribed,
    /// Exact coloring of the route's layout.
    Searched,
    /// Exhaustive search over layouts.
    Exhaustive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BookEmbedding {
    pub layout: Layout,
    pub pages: usize,
    /// Page per edge, in canonical edge order.
    pub assignment: Vec<(Edge, usize)>,
    pub route: Route,
    pub method: Method,
}

impl BookEmbedding {
    pub fn new(
        layout: Layout,
        pages: usize,
        mut assignment: Vec<(Edge, usize)>,
        route: Route,
    ) -> Self {
        assignment.sort_unstable();
        BookEmbedding {
            layout,
            pages,
            assignment,
            route,
            method: Method::Searched,
        }
    }

    pub fn page_of(&self, e: Edge) -> Option<usize> {
        self.assignment
            .binary_search_by_key(&e, |&(f, _)| f)
            .ok()
            .map(|i| self.assignment[i].1)
    }
}

/// Route for `C(n, k)` with `1 <= k <= n/2`.
pub fn route_for(n: usize, k: usize) -> Result<Route> {
    check_range(n, k)?;
    if k == 1 {
        return Ok(Route::Cycle);
    }
    if n.is_multiple_of(2) {
        return Ok(match (k % 2 == 1, 2 * k == n) {
            (true, false) => Route::EvenOdd,
            (true, true) => Route::EvenOddHalf,
            (false, true) => Route::EvenEvenHalf,
            (false, false) => Route::EvenEven,
        });
    }
    let d = gcd(n, k);
    if d > 1 {
        return Ok(if n == 3 * k {
            Route::GcdTriangles
        } else if d == 3 {
            Route::GcdThree
        } else {
            Route::GcdWide
        });
    }
    let (a, r) = (n / k, n % k);
    if r == 1 {
        return Ok(if a == 2 {
            Route::UnitRemainderShort
        } else if k.is_multiple_of(2) {
            Route::UnitRemainderEvenK
        } else {
            Route::UnitRemainderOddK
        });
    }
    if r + 1 == k {
        return Ok(if k.is_multiple_of(2) {
            Route::NearFullEvenK
        } else {
            Route::NearFullOddK
        });
    }
    let p = build_partition(n, k)?;
    let t = p.t;
    Ok(if t % 2 == 1 {
        if t == 3 {
            if p.set(t).len() > p.set(1).len() / 2 {
                Route::OddRunsThreeLong
            } else {
                Route::OddRunsThreeShort
            }
        } else {
            Route::OddRunsMany
        }
    } else if t == 2 {
        Route::EvenRunsTwo
    } else {
        Route::EvenRunsMany
    })
}

fn check_range(n: usize, k: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::OrderTooSmall(n));
    }
    if k < 1 || 2 * k > n {
        return Err(Error::KOutOfRange {
            n,
            k,
            lo: 1,
            hi: n / 2,
        });
    }
    Ok(())
}

/// Build a verified matching book embedding of `C(n, k)` with the predicted
/// optimal number of pages.
pub fn embed(n: usize, k: usize) -> Result<BookEmbedding> {
    let route = route_for(n, k)?;
    let spec = CirculantSpec::ck(n, k)?;
    let pages = spec.predicted_mbt()?;
    let edges = spec.edges();
    let candidates = candidate_layouts(route, n, k)?;

    for order in &candidates {
        if let Some(assign) = prescribed::pages(route, n, k, order) {
            let emb = BookEmbedding {
                method: Method::Prescribed,
                ..BookEmbedding::new(Layout::new(order.clone()), pages, assign, route)
            };
            if verify_embedding(&spec, &emb).is_valid() {
                return Ok(emb);
            }
        }
    }
    let hints = prescribed::hints(route, n, k).unwrap_or_default();
    if !hints.is_empty() {
        for order in &candidates {
            if let Some(emb) = color_layout(&spec, &edges, order, pages, route, &hints) {
                return Ok(emb);
            }
        }
    }
    for order in &candidates {
        if let Some(emb) = color_layout(&spec, &edges, order, pages, route, &[]) {
            return Ok(emb);
        }
    }
    if n <= ORACLE_MAX_N {
        let w = exhaustive_search(&spec, pages)?;
        let emb = BookEmbedding {
            method: Method::Exhaustive,
            ..BookEmbedding::new(Layout::new(w.order), pages, w.assignment, Route::Fallback)
        };
        if verify_embedding(&spec, &emb).is_valid() {
            return Ok(emb);
        }
    }
    Err(Error::Unsupported { n, k })
}

/// Color the conflict graph of `order` with `pages` colors, keeping the pages
/// in `hints` fixed. `edges` must be sorted. Falls back to tabu search when
/// the exact search runs out of budget on an unseeded instance.
pub fn color_layout(
    spec: &CirculantSpec,
    edges: &[Edge],
    order: &[usize],
    pages: usize,
    route: Route,
    hints: &[(Edge, usize)],
) -> Option<BookEmbedding> {
    let layout = Layout::new(order.to_vec());
    let g = conflict_graph(&layout, edges);
    let mut fixed = vec![None; edges.len()];
    for &(e, page) in hints {
        fixed[edges.binary_search(&e).ok()?] = Some(page);
    }
    let col = match color_with(&g, pages, &fixed, Some(SEARCH_BUDGET)) {
        Outcome::Colored(col) => col,
        Outcome::Infeasible => return None,
        Outcome::GaveUp if hints.is_empty() => {
            (0..TABU_SEEDS).find_map(|seed| tabu_color(&g, pages, TABU_ITERS, seed))?
        }
        Outcome::GaveUp => return None,
    };
    let emb = BookEmbedding::new(
        layout,
        pages,
        edges.iter().copied().zip(col).collect(),
        route,
    );
    verify_embedding(spec, &emb).is_valid().then_some(emb)
}

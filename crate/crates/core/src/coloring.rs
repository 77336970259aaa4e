//! Exact vertex coloring of small conflict graphs.
//!
//! DSatur-ordered branch and bound for the decision problem "is this graph
//! `c`-colorable", with optional precolored vertices and a node budget, plus
//! a tabu local search for instances where the exact search stalls.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Undirected graph on `0..len` stored as adjacency bitsets.
#[derive(Debug, Clone)]
pub struct ConflictGraph {
    len: usize,
    words: usize,
    bits: Vec<u64>,
}

impl ConflictGraph {
    pub fn new(len: usize) -> Self {
        let words = len.div_ceil(64).max(1);
        ConflictGraph {
            len,
            words,
            bits: vec![0; len * words],
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        debug_assert_ne!(a, b);
        self.bits[a * self.words + b / 64] |= 1 << (b % 64);
        self.bits[b * self.words + a / 64] |= 1 << (a % 64);
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.bits[a * self.words + b / 64] >> (b % 64) & 1 == 1
    }

    pub fn degree(&self, a: usize) -> usize {
        self.row(a).iter().map(|w| w.count_ones() as usize).sum()
    }

    fn row(&self, a: usize) -> &[u64] {
        &self.bits[a * self.words..(a + 1) * self.words]
    }

    pub fn neighbors(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(a).iter().enumerate().flat_map(|(w, &word)| {
            let mut word = word;
            std::iter::from_fn(move || {
                if word == 0 {
                    return None;
                }
                let b = word.trailing_zeros() as usize;
                word &= word - 1;
                Some(w * 64 + b)
            })
        })
    }

    /// Size of a greedily grown clique; a lower bound on the chromatic number.
    pub fn greedy_clique(&self) -> usize {
        let mut order: Vec<usize> = (0..self.len).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(self.degree(v)));
        let mut best = usize::from(self.len > 0);
        for &seed in order.iter().take(16) {
            let mut clique = vec![seed];
            for &v in &order {
                if v != seed && clique.iter().all(|&c| self.has_edge(c, v)) {
                    clique.push(v);
                }
            }
            best = best.max(clique.len());
        }
        best
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    /// Color per vertex, each below the requested count.
    Colored(Vec<usize>),
    Infeasible,
    /// The node budget ran out before the search finished.
    GaveUp,
}

/// Decide `colors`-colorability of `g` extending the partial assignment
/// `fixed`. `budget` caps the number of search nodes.
pub fn color_with(
    g: &ConflictGraph,
    colors: usize,
    fixed: &[Option<usize>],
    budget: Option<u64>,
) -> Outcome {
    assert!(colors <= 32, "at most 32 colors supported");
    assert_eq!(fixed.len(), g.len());
    let mut s = Search {
        g,
        colors,
        color: vec![usize::MAX; g.len()],
        blocked: vec![0u16; g.len() * colors.max(1)],
        degree: (0..g.len()).map(|v| g.degree(v)).collect(),
        nodes: 0,
        budget: budget.unwrap_or(u64::MAX),
        symmetric: fixed.iter().all(Option::is_none),
    };
    for (v, c) in fixed.iter().enumerate() {
        if let Some(c) = *c {
            if c >= colors || s.forbidden(v) >> c & 1 == 1 {
                return Outcome::Infeasible;
            }
            s.assign(v, c);
        }
    }
    let remaining = s.color.iter().filter(|&&c| c == usize::MAX).count();
    let max_used = fixed.iter().flatten().copied().max();
    match s.run(remaining, max_used) {
        Some(true) => Outcome::Colored(s.color),
        Some(false) => Outcome::Infeasible,
        None => Outcome::GaveUp,
    }
}

/// Tabu local search for a proper `colors`-coloring. Incomplete: `None` means
/// no coloring was found within `max_iters` moves, not that none exists.
/// Deterministic for a given `seed`.
pub fn tabu_color(
    g: &ConflictGraph,
    colors: usize,
    max_iters: u64,
    seed: u64,
) -> Option<Vec<usize>> {
    let n = g.len();
    if n == 0 {
        return Some(Vec::new());
    }
    if colors == 0 {
        return None;
    }
    let mut rng = StdRng::seed_from_u64(seed);
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
    let mut color: Vec<usize> = (0..n).map(|_| rng.random_range(0..colors)).collect();
    // gamma[v * colors + c] = neighbors of v currently colored c
    let mut gamma = vec![0i64; n * colors];
    for v in 0..n {
        for &u in &adj[v] {
            gamma[v * colors + color[u]] += 1;
        }
    }
    let mut conflicts: i64 = (0..n).map(|v| gamma[v * colors + color[v]]).sum::<i64>() / 2;
    let mut best = conflicts;
    let mut tabu = vec![0u64; n * colors];
    for iter in 0..max_iters {
        if conflicts == 0 {
            return Some(color);
        }
        let mut pick: Option<(usize, usize)> = None;
        let mut pick_delta = i64::MAX;
        let mut ties = 0u32;
        for v in 0..n {
            let own = gamma[v * colors + color[v]];
            if own == 0 {
                continue;
            }
            for c in (0..colors).filter(|&c| c != color[v]) {
                let delta = gamma[v * colors + c] - own;
                let allowed = tabu[v * colors + c] <= iter || conflicts + delta < best;
                if !allowed || delta > pick_delta {
                    continue;
                }
                if delta < pick_delta {
                    pick_delta = delta;
                    pick = Some((v, c));
                    ties = 1;
                } else {
                    ties += 1;
                    if rng.random_range(0..ties) == 0 {
                        pick = Some((v, c));
                    }
                }
            }
        }
        let Some((v, c)) = pick else { continue };
        let old = color[v];
        for &u in &adj[v] {
            gamma[u * colors + old] -= 1;
            gamma[u * colors + c] += 1;
        }
        color[v] = c;
        conflicts += pick_delta;
        best = best.min(conflicts);
        tabu[v * colors + old] = iter + 1 + rng.random_range(0..10) + (6 * conflicts as u64) / 10;
    }
    (conflicts == 0).then_some(color)
}

/// Smallest `c <= cap` for which `g` is `c`-colorable, with a witness.
pub fn chromatic_number(g: &ConflictGraph, cap: usize) -> Option<(usize, Vec<usize>)> {
    if g.is_empty() {
        return Some((0, Vec::new()));
    }
    let free = vec![None; g.len()];
    (g.greedy_clique()..=cap).find_map(|c| match color_with(g, c, &free, None) {
        Outcome::Colored(col) => Some((c, col)),
        _ => None,
    })
}

struct Search<'a> {
    g: &'a ConflictGraph,
    colors: usize,
    color: Vec<usize>,
    /// `blocked[v * colors + c]`: colored neighbors of `v` holding color `c`.
    blocked: Vec<u16>,
    degree: Vec<usize>,
    nodes: u64,
    budget: u64,
    symmetric: bool,
}

impl Search<'_> {
    fn forbidden(&self, v: usize) -> u32 {
        let row = &self.blocked[v * self.colors..(v + 1) * self.colors];
        row.iter()
            .enumerate()
            .fold(0, |m, (c, &k)| if k > 0 { m | 1 << c } else { m })
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = c;
        for w in self.g.neighbors(v) {
            self.blocked[w * self.colors + c] += 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = std::mem::replace(&mut self.color[v], usize::MAX);
        for w in self.g.neighbors(v) {
            self.blocked[w * self.colors + c] -= 1;
        }
    }

    /// `Some(found)` or `None` when the budget is exhausted.
    fn run(&mut self, remaining: usize, max_used: Option<usize>) -> Option<bool> {
        if remaining == 0 {
            return Some(true);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }
        // Most saturated uncolored vertex, ties by degree.
        let mut pick = usize::MAX;
        let mut best = (0u32, 0usize);
        let mut pick_mask = 0;
        for v in 0..self.g.len() {
            if self.color[v] != usize::MAX {
                continue;
            }
            let mask = self.forbidden(v);
            let key = (mask.count_ones(), self.degree[v]);
            if pick == usize::MAX || key > best {
                pick = v;
                best = key;
                pick_mask = mask;
            }
        }
        let limit = match (self.symmetric, max_used) {
            (true, Some(m)) => (m + 2).min(self.colors),
            (true, None) => 1.min(self.colors),
            (false, _) => self.colors,
        };
        for c in 0..limit {
            if pick_mask >> c & 1 == 1 {
                continue;
            }
            self.assign(pick, c);
            let used = Some(max_used.map_or(c, |m| m.max(c)));
            match self.run(remaining - 1, used) {
                Some(true) => return Some(true),
                Some(false) => self.unassign(pick),
                None => {
                    self.unassign(pick);
                    return None;
                }
            }
        }
        Some(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(len: usize) -> ConflictGraph {
        let mut g = ConflictGraph::new(len);
        for i in 0..len {
            g.add_edge(i, (i + 1) % len);
        }
        g
    }

    fn complete(len: usize) -> ConflictGraph {
        let mut g = ConflictGraph::new(len);
        for a in 0..len {
            for b in a + 1..len {
                g.add_edge(a, b);
            }
        }
        g
    }

    fn proper(g: &ConflictGraph, col: &[usize]) -> bool {
        (0..g.len()).all(|a| g.neighbors(a).all(|b| col[a] != col[b]))
    }

    #[test]
    fn small_chromatic_numbers() {
        assert_eq!(chromatic_number(&cycle(6), 5).unwrap().0, 2);
        assert_eq!(chromatic_number(&cycle(7), 5).unwrap().0, 3);
        assert_eq!(chromatic_number(&complete(5), 6).unwrap().0, 5);
        assert!(chromatic_number(&complete(5), 4).is_none());
    }

    #[test]
    fn petersen_is_three_chromatic() {
        let mut g = ConflictGraph::new(10);
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(5 + i, 5 + (i + 2) % 5);
            g.add_edge(i, i + 5);
        }
        let (c, col) = chromatic_number(&g, 5).unwrap();
        assert_eq!(c, 3);
        assert!(proper(&g, &col));
    }

    #[test]
    fn precolored_vertices_are_respected() {
        let g = cycle(4);
        let fixed = vec![Some(1), None, Some(1), None];
        match color_with(&g, 2, &fixed, None) {
            Outcome::Colored(col) => {
                assert_eq!((col[0], col[2]), (1, 1));
                assert!(proper(&g, &col));
            }
            other => panic!("{other:?}"),
        }
        let clash = vec![Some(0), Some(0), None, None];
        assert_eq!(color_with(&g, 3, &clash, None), Outcome::Infeasible);
    }

    #[test]
    fn tabu_finds_proper_colorings() {
        let g = cycle(101);
        let col = tabu_color(&g, 3, 100_000, 7).unwrap();
        assert!(proper(&g, &col));
        assert_eq!(tabu_color(&g, 3, 100_000, 7), Some(col));
        assert_eq!(tabu_color(&complete(6), 5, 20_000, 1), None);
    }

    #[test]
    fn budget_can_run_out() {
        assert_eq!(
            color_with(&cycle(101), 2, &[None; 101], Some(10)),
            Outcome::GaveUp
        );
        assert_eq!(
            color_with(&cycle(101), 2, &[None; 101], None),
            Outcome::Infeasible
        );
    }

    #[test]
    fn wide_graphs_cross_word_boundaries() {
        let g = cycle(130);
        let (c, col) = chromatic_number(&g, 4).unwrap();
        assert_eq!(c, 2);
        assert!(proper(&g, &col));
    }
}

//! Circulant graphs on the labels `1..=n`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::numth::{gcd, label};
use crate::{Error, Result};

/// An undirected edge stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Self {
        debug_assert_ne!(a, b, "loops are not edges");
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn touches(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }

    pub fn shares_endpoint(&self, other: &Edge) -> bool {
        self.touches(other.u) || self.touches(other.v)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.u, self.v)
    }
}

/// `C(Z_n, S)` with `S` holding one or two normalized jumps.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CirculantSpec {
    n: usize,
    jumps: Vec<usize>,
}

impl CirculantSpec {
    /// Build from raw jumps in `1..n`. Jumps above `n / 2` are folded to
    /// `n - j`; a set that collapses after folding is rejected.
    pub fn build(n: usize, raw_jumps: &[usize]) -> Result<Self> {
        if n < 3 {
            return Err(Error::OrderTooSmall(n));
        }
        if raw_jumps.is_empty() || raw_jumps.len() > 2 {
            return Err(Error::PreconditionViolated(format!(
                "expected one or two jumps, got {}",
                raw_jumps.len()
            )));
        }
        let mut jumps = Vec::with_capacity(raw_jumps.len());
        for &j in raw_jumps {
            if j % n == 0 {
                return Err(Error::InvalidJump { n, jump: j });
            }
            let j = j % n;
            jumps.push(j.min(n - j));
        }
        jumps.sort_unstable();
        jumps.dedup();
        if jumps.len() != raw_jumps.len() {
            return Err(Error::DuplicateJump {
                n,
                jumps: raw_jumps.to_vec(),
            });
        }
        Ok(CirculantSpec { n, jumps })
    }

    /// `C(n, k) = C(Z_n, {1, k})`; `k = 1` gives the plain cycle.
    pub fn ck(n: usize, k: usize) -> Result<Self> {
        if k == 1 || k % n == 1 || k % n == n - 1 {
            Self::build(n, &[1])
        } else {
            Self::build(n, &[1, k])
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn jumps(&self) -> &[usize] {
        &self.jumps
    }

    /// The `k` of `C(n, k)`, if this graph has that form.
    pub fn step(&self) -> Option<usize> {
        match self.jumps.as_slice() {
            [1] => Some(1),
            [1, k] => Some(*k),
            _ => None,
        }
    }

    fn require_step(&self) -> Result<usize> {
        self.step()
            .ok_or_else(|| Error::NotSingleStep(self.jumps.clone()))
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        if u == v || u == 0 || v == 0 || u > self.n || v > self.n {
            return false;
        }
        let diff = (u + self.n - v) % self.n;
        self.jumps.iter().any(|&j| diff == j || diff == self.n - j)
    }

    /// Neighbors of `v` in increasing label order.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .jumps
            .iter()
            .flat_map(|&j| {
                [
                    label(v as i64 + j as i64, self.n),
                    label(v as i64 - j as i64, self.n),
                ]
            })
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// All edges in canonical `(min, max)` order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut set = BTreeSet::new();
        for v in 1..=self.n {
            for &j in &self.jumps {
                set.insert(Edge::new(v, label((v + j) as i64, self.n)));
            }
        }
        set.into_iter().collect()
    }

    pub fn edge_count(&self) -> usize {
        self.jumps
            .iter()
            .map(|&j| if 2 * j == self.n { self.n / 2 } else { self.n })
            .sum()
    }

    /// Maximum (= common) degree.
    pub fn max_degree(&self) -> usize {
        self.jumps
            .iter()
            .map(|&j| if 2 * j == self.n { 1 } else { 2 })
            .sum()
    }

    /// Closed-form bipartiteness of `C(n, k)`: `n` even and `k` odd.
    pub fn is_bipartite(&self) -> Result<bool> {
        let k = self.require_step()?;
        Ok(self.n.is_multiple_of(2) && k % 2 == 1)
    }

    /// Lower bound on the matching book thickness of `C(n, k)`, which every
    /// construction in [`crate::embed`] attains.
    pub fn predicted_mbt(&self) -> Result<usize> {
        let k = self.require_step()?;
        let delta = self.max_degree();
        if k == 1 {
            return Ok(if self.n.is_multiple_of(2) { 2 } else { 3 });
        }
        Ok(if self.n.is_multiple_of(2) && k % 2 == 1 {
            delta
        } else {
            delta + 1
        })
    }

    /// Split `C(n, k)` into the outer `n`-cycle and the `gcd(n, k)` jump cycles.
    pub fn cycle_decomposition(&self) -> Result<CycleDecomposition> {
        let k = self.require_step()?;
        if k == 1 {
            return Err(Error::PreconditionViolated(
                "cycle decomposition needs k >= 2".into(),
            ));
        }
        let n = self.n;
        let d = gcd(n, k);
        let outer: Vec<usize> = (1..=n).collect();
        if 2 * k == n {
            let matching = (1..=n / 2).map(|i| Edge::new(i, i + k)).collect();
            return Ok(CycleDecomposition {
                n,
                k,
                d,
                outer,
                cycles: Vec::new(),
                matching: Some(matching),
            });
        }
        let cycles = (1..=d)
            .map(|i| (0..n / d).map(|j| label((i + j * k) as i64, n)).collect())
            .collect();
        Ok(CycleDecomposition {
            n,
            k,
            d,
            outer,
            cycles,
            matching: None,
        })
    }

    /// 2-coloring by breadth-first search, independent of the closed form.
    pub fn two_colorable(&self) -> bool {
        let mut side = vec![None; self.n + 1];
        for start in 1..=self.n {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                let sv = side[v].unwrap();
                for w in self.neighbors(v) {
                    match side[w] {
                        None => {
                            side[w] = Some(!sv);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == sv => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }
}

impl fmt::Display for CirculantSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.step() {
            Some(k) => write!(f, "C({}, {})", self.n, k),
            None => write!(
                f,
                "C(Z_{}, {{{}}})",
                self.n,
                self.jumps
                    .iter()
                    .map(|j| j.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            ),
        }
    }
}

/// Outer cycle `C_0 = (1, 2, ..., n)` plus the jump cycles
/// `C_i = (i, i + k, ..., i + (n/d - 1)k)` for `i = 1..=d`.
///
/// When `k = n / 2` the jump edges form a perfect matching and are reported
/// in `matching` instead of as 2-vertex cycles.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleDecomposition {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub outer: Vec<usize>,
    pub cycles: Vec<Vec<usize>>,
    pub matching: Option<Vec<Edge>>,
}

impl CycleDecomposition {
    /// Edges of a closed vertex walk.
    pub fn cycle_edges(cycle: &[usize]) -> Vec<Edge> {
        (0..cycle.len())
            .map(|i| Edge::new(cycle[i], cycle[(i + 1) % cycle.len()]))
            .collect()
    }

    pub fn all_edges(&self) -> Vec<Edge> {
        let mut out = Self::cycle_edges(&self.outer);
        for c in &self.cycles {
            out.extend(Self::cycle_edges(c));
        }
        if let Some(m) = &self.matching {
            out.extend(m.iter().copied());
        }
        out
    }
}

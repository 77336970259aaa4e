//! Structural classification of two-jump circulants `C(Z_n, {k1, k2})`.
//!
//! Every two-jump circulant splits into `gcd(n, k1, k2)` isomorphic
//! components, each of which is one of: a single-jump circulant `C(m, k)`,
//! a Cartesian bundle of cycles `C_b □^φ C_f` with `φ` a cyclic shift, a
//! prism `K_2 □ C_f`, or `C(m, m/2)`. Each outcome carries a vertex map
//! ([`IsoCertificate`]) that [`verify_certificate`] checks edge by edge.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Serialize};

use crate::graph::{CirculantSpec, Edge};
use crate::numth::{gcd, label, solve_diophantine};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Family {
    /// `copies` × `C(n1, k)`.
    SingleJumpUnion { copies: usize, n1: usize, k: usize },
    /// `copies` × `C_base □^shift C_fiber`, with `shift <= fiber_len / 2`.
    BundleUnion {
        copies: usize,
        base_len: usize,
        fiber_len: usize,
        shift: usize,
        trivial_shift: bool,
    },
    /// `copies` × `K_2 □ C_fiber`.
    PrismUnion { copies: usize, fiber_len: usize },
    /// `copies` × `C(n1, n1/2)`.
    HalfJumpUnion { copies: usize, n1: usize },
}

impl Family {
    pub fn copies(&self) -> usize {
        match *self {
            Family::SingleJumpUnion { copies, .. }
            | Family::BundleUnion { copies, .. }
            | Family::PrismUnion { copies, .. }
            | Family::HalfJumpUnion { copies, .. } => copies,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::SingleJumpUnion { copies, n1, k } => {
                let k = k.min(n1 - k);
                write!(f, "union: {copies} × C({n1},{k})")
            }
            Family::BundleUnion {
                copies,
                base_len,
                fiber_len,
                shift,
                ..
            } => {
                write!(f, "bundle: {copies} × C_{base_len} □^{shift} C_{fiber_len}")
            }
            Family::PrismUnion { copies, fiber_len } => {
                write!(f, "prism: {copies} × K_2 □ C_{fiber_len}")
            }
            Family::HalfJumpUnion { copies, n1 } => {
                write!(f, "union: {copies} × C({n1},{})", n1 / 2)
            }
        }
    }
}

/// Classification of `C(Z_n, {k1, k2})`. `k1` is the jump with the smaller
/// `gcd(n, k1)`, so `d1 <= d2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub n: usize,
    pub k1: usize,
    pub k2: usize,
    pub d1: usize,
    pub d2: usize,
    pub d: usize,
    pub family: Family,
}

pub fn classify(n: usize, k1: usize, k2: usize) -> Result<Classification> {
    let (n, k1, k2) = normalize_pair(n, k1, k2)?;
    let (d1, d2) = (gcd(n, k1), gcd(n, k2));
    let d = gcd(d1, d2);
    let family = if d1 == 1 || d1 == d2 {
        single_jump(n, k1, k2, d)?
    } else if n % 2 == 0 && d2 == n / 2 {
        let n1 = n / d1;
        if n1 % 2 == 1 {
            if d * 2 != d1 {
                return Err(Error::PreconditionViolated(format!(
                    "prism components: expected gcd(d1, d2) = d1/2, got d = {d}, d1 = {d1}"
                )));
            }
            Family::PrismUnion {
                copies: d,
                fiber_len: n1,
            }
        } else {
            Family::HalfJumpUnion { copies: d, n1 }
        }
    } else if d == d1 {
        // d1 | d2: each component is C(Z_{n/d1}, {k1/d1, k2/d1}) with a unit
        // first jump, so it is again a single-jump circulant.
        single_jump(n, k1, k2, d)?
    } else {
        let comp = bundle_decompose(n / d, k1 / d, k2 / d)?;
        let base_len = d1 / d;
        let fiber_len = n / d1;
        let shift = canonical_shift(comp.shift, fiber_len);
        Family::BundleUnion {
            copies: d,
            base_len,
            fiber_len,
            shift,
            trivial_shift: shift == 0,
        }
    };
    Ok(Classification {
        n,
        k1,
        k2,
        d1,
        d2,
        d,
        family,
    })
}

/// Fold both jumps into `[1, n/2]` and order them so that `gcd(n, k1) <= gcd(n, k2)`
/// (ties broken by value).
fn normalize_pair(n: usize, k1: usize, k2: usize) -> Result<(usize, usize, usize)> {
    if n < 3 {
        return Err(Error::OrderTooSmall(n));
    }
    let fold = |j: usize| -> Result<usize> {
        if j.is_multiple_of(n) {
            return Err(Error::InvalidJump { n, jump: j });
        }
        let j = j % n;
        Ok(j.min(n - j))
    };
    let (a, b) = (fold(k1)?, fold(k2)?);
    if a == b {
        return Err(Error::JumpCoincidence { n, k1, k2 });
    }
    let key = |j: usize| (gcd(n, j), j);
    Ok(if key(a) <= key(b) {
        (n, a, b)
    } else {
        (n, b, a)
    })
}

fn single_jump(n: usize, k1: usize, k2: usize, d: usize) -> Result<Family> {
    let n1 = n / d;
    let (t1, t2) = ((k1 / d) as i64, (k2 / d) as i64);
    let k = solve_diophantine(t1, -(n1 as i64), t2)?.x0 as usize;
    Ok(Family::SingleJumpUnion { copies: d, n1, k })
}

/// A `x`-shift and a `(f - x)`-shift of `C_f` are conjugate by a reflection
/// of the fiber and give isomorphic bundles; report the smaller.
fn canonical_shift(x: usize, fiber_len: usize) -> usize {
    x.min((fiber_len - x) % fiber_len)
}

/// Rows of a connected bundle component together with its shift.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BundleDecomposition {
    /// `C_1..C_{d1}` with `C_i = (i, i + k1, i + 2k1, ...)`.
    pub cycles: Vec<Vec<usize>>,
    /// 1-based index into `cycles` for each row after rearrangement.
    pub row_cycles: Vec<usize>,
    /// Row `i` (0-based) is its cycle rotated to start at `1 + i*k2`.
    pub rows: Vec<Vec<usize>>,
    /// Cyclic shift carried by the closing `k2` edge from the last row back
    /// to the first.
    pub shift: usize,
}

/// Rotate-and-rearrange decomposition of a connected `C(Z_n, {k1, k2})`
/// with `1 < d1 < d2 < n/2`.
pub fn bundle_decompose(n: usize, k1: usize, k2: usize) -> Result<BundleDecomposition> {
    let (d1, d2) = (gcd(n, k1), gcd(n, k2));
    if !(1 < d1 && d1 < d2 && 2 * d2 < n) || gcd(d1, d2) != 1 {
        return Err(Error::PreconditionViolated(format!(
            "bundle decomposition needs 1 < d1 < d2 < n/2 and gcd(d1, d2) = 1; got n = {n}, d1 = {d1}, d2 = {d2}"
        )));
    }
    let fiber = n / d1;
    let cycles: Vec<Vec<usize>> = (1..=d1)
        .map(|i| (0..fiber).map(|j| label((i + j * k1) as i64, n)).collect())
        .collect();
    let mut where_is = HashMap::with_capacity(n);
    for (c, cycle) in cycles.iter().enumerate() {
        for (pos, &v) in cycle.iter().enumerate() {
            where_is.insert(v, (c, pos));
        }
    }
    let mut row_cycles = Vec::with_capacity(d1);
    let mut rows = Vec::with_capacity(d1);
    for i in 0..d1 {
        let start = label((1 + i * k2) as i64, n);
        let (c, pos) = where_is[&start];
        row_cycles.push(c + 1);
        let cycle = &cycles[c];
        rows.push(
            (0..fiber)
                .map(|j| cycle[(pos + j) % fiber])
                .collect::<Vec<_>>(),
        );
    }
    let t1 = (k1 / d1) as i64;
    let shift = solve_diophantine(t1, -(fiber as i64), k2 as i64)?.x0 as usize;
    Ok(BundleDecomposition {
        cycles,
        row_cycles,
        rows,
        shift,
    })
}

/// The graph a component is mapped onto.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Target {
    Circulant {
        n: usize,
        k: usize,
    },
    /// Vertex `(i, j)` (row `i` of the base, position `j` on the fiber) is
    /// labeled `i * fiber_len + j + 1`.
    Bundle {
        base_len: usize,
        fiber_len: usize,
        shift: usize,
    },
    /// Vertex `(s, j)` with `s ∈ {0, 1}` is labeled `s * fiber_len + j + 1`.
    Prism {
        fiber_len: usize,
    },
}

impl Target {
    pub fn order(&self) -> usize {
        match *self {
            Target::Circulant { n, .. } => n,
            Target::Bundle {
                base_len,
                fiber_len,
                ..
            } => base_len * fiber_len,
            Target::Prism { fiber_len } => 2 * fiber_len,
        }
    }

    /// Edge list; may contain duplicates if the descriptor is degenerate.
    pub fn edges(&self) -> Result<Vec<Edge>> {
        Ok(match *self {
            Target::Circulant { n, k } => CirculantSpec::ck(n, k)?.edges(),
            Target::Bundle {
                base_len,
                fiber_len,
                shift,
            } => {
                let at = |i: usize, j: usize| i * fiber_len + (j % fiber_len) + 1;
                let mut out = Vec::new();
                for i in 0..base_len {
                    for j in 0..fiber_len {
                        out.push(Edge::new(at(i, j), at(i, j + 1)));
                        if i + 1 < base_len {
                            out.push(Edge::new(at(i, j), at(i + 1, j)));
                        } else {
                            out.push(Edge::new(at(i, j), at(0, j + shift)));
                        }
                    }
                }
                out
            }
            Target::Prism { fiber_len } => {
                let at = |s: usize, j: usize| s * fiber_len + (j % fiber_len) + 1;
                let mut out = Vec::new();
                for j in 0..fiber_len {
                    out.push(Edge::new(at(0, j), at(0, j + 1)));
                    out.push(Edge::new(at(1, j), at(1, j + 1)));
                    out.push(Edge::new(at(0, j), at(1, j)));
                }
                out
            }
        })
    }
}

/// Vertex bijection `domain[i] -> theta[i]` from one connected component of
/// the source graph onto `target`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoCertificate {
    pub domain: Vec<usize>,
    pub theta: Vec<usize>,
    pub target: Target,
}

impl Classification {
    pub fn spec(&self) -> Result<CirculantSpec> {
        CirculantSpec::build(self.n, &[self.k1, self.k2])
    }

    /// Certificate for the component containing vertex 1.
    pub fn certificate(&self) -> Result<IsoCertificate> {
        let (n, k1, k2) = (self.n, self.k1, self.k2);
        // Vertex 1 + j*k1 walks the k1-cycle through 1.
        let walk = |len: usize, offset: usize| -> Vec<usize> {
            (0..len)
                .map(|j| label((1 + offset + j * k1) as i64, n))
                .collect()
        };
        Ok(match self.family {
            Family::SingleJumpUnion { n1, k, .. } => IsoCertificate {
                domain: walk(n1, 0),
                theta: (1..=n1).collect(),
                target: Target::Circulant { n: n1, k },
            },
            Family::HalfJumpUnion { n1, .. } => IsoCertificate {
                domain: walk(n1, 0),
                theta: (1..=n1).collect(),
                target: Target::Circulant { n: n1, k: n1 / 2 },
            },
            Family::PrismUnion { fiber_len, .. } => {
                let mut domain = walk(fiber_len, 0);
                domain.extend(walk(fiber_len, n / 2));
                IsoCertificate {
                    domain,
                    theta: (1..=2 * fiber_len).collect(),
                    target: Target::Prism { fiber_len },
                }
            }
            Family::BundleUnion {
                base_len,
                fiber_len,
                shift,
                ..
            } => {
                let d = self.d;
                let comp = bundle_decompose(n / d, k1 / d, k2 / d)?;
                // Reading every row backwards turns an x-shift into a (f - x)-shift.
                let reflect = comp.shift != shift;
                let read = |row: &Vec<usize>| -> Vec<usize> {
                    (0..fiber_len)
                        .map(|j| {
                            if reflect {
                                row[(fiber_len - j) % fiber_len]
                            } else {
                                row[j]
                            }
                        })
                        .collect()
                };
                // Component labels 1..n/d correspond to 1 + (v - 1) * d.
                let domain = comp
                    .rows
                    .iter()
                    .flat_map(read)
                    .map(|v| 1 + (v - 1) * d)
                    .collect();
                IsoCertificate {
                    domain,
                    theta: (1..=base_len * fiber_len).collect(),
                    target: Target::Bundle {
                        base_len,
                        fiber_len,
                        shift,
                    },
                }
            }
        })
    }
}

/// Check that `cert` maps the component of `source` spanned by its domain
/// bijectively onto the target's edge set.
pub fn verify_certificate(source: &CirculantSpec, cert: &IsoCertificate) -> Result<bool> {
    let order = cert.target.order();
    if cert.domain.len() != order || cert.theta.len() != order {
        return Err(Error::SizeMismatch {
            expected: order,
            found: cert.domain.len(),
        });
    }
    let mut map = HashMap::with_capacity(order);
    for (&v, &w) in cert.domain.iter().zip(&cert.theta) {
        if v == 0 || v > source.n() || w == 0 || w > order || map.insert(v, w).is_some() {
            return Ok(false);
        }
    }
    if cert.theta.iter().collect::<BTreeSet<_>>().len() != order {
        return Ok(false);
    }
    let mut image = BTreeSet::new();
    for &v in &cert.domain {
        for w in source.neighbors(v) {
            let Some(&tw) = map.get(&w) else {
                // Domain is not closed under adjacency: not a whole component.
                return Ok(false);
            };
            image.insert(Edge::new(map[&v], tw));
        }
    }
    let target_edges = cert.target.edges()?;
    let target_set: BTreeSet<Edge> = target_edges.iter().copied().collect();
    Ok(target_set.len() == target_edges.len() && image == target_set)
}

/// Connected components of the actual edge set.
pub fn component_count(spec: &CirculantSpec) -> usize {
    let n = spec.n();
    let mut uf = UnionFind::<usize>::new(n);
    for e in spec.edges() {
        uf.union(e.u - 1, e.v - 1);
    }
    let mut roots: Vec<usize> = (0..n).map(|v| uf.find(v)).collect();
    roots.sort_unstable();
    roots.dedup();
    roots.len()
}

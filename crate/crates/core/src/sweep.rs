//! Sweep driver: embed and verify every `C(n, k)` up to a bound, and compare
//! the exhaustive oracle against the predicted thickness on small orders.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::embed::{embed, Method, Route};
use crate::graph::CirculantSpec;
use crate::verify::{brute_force_mbt, verify_embedding, DEFAULT_PAGE_CAP};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub n: usize,
    pub k: usize,
    pub route: Option<Route>,
    pub method: Option<Method>,
    pub pages: Option<usize>,
    pub predicted: usize,
    pub valid: bool,
    pub oracle: Option<usize>,
    pub ok: bool,
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub n_max: usize,
    pub oracle_max: usize,
    pub rows: Vec<SweepRow>,
    pub discrepancies: usize,
}

impl SweepReport {
    pub fn ok(&self) -> bool {
        self.discrepancies == 0
    }
}

/// Run the sweep over `3 <= n <= n_max` (and the oracle for `n <= oracle_max`).
/// Rows come back sorted by `(n, k)` whatever the thread count.
pub fn run_sweep(n_max: usize, oracle_max: usize) -> SweepReport {
    let top = n_max.max(oracle_max);
    let pairs: Vec<(usize, usize)> = (3..=top)
        .flat_map(|n| (1..=n / 2).map(move |k| (n, k)))
        .collect();
    let mut rows: Vec<SweepRow> = pairs
        .par_iter()
        .map(|&(n, k)| sweep_one(n, k, n <= n_max, n <= oracle_max))
        .collect();
    rows.sort_by_key(|r| (r.n, r.k));
    let discrepancies = rows.iter().filter(|r| !r.ok).count();
    SweepReport {
        n_max,
        oracle_max,
        rows,
        discrepancies,
    }
}

fn sweep_one(n: usize, k: usize, with_embed: bool, with_oracle: bool) -> SweepRow {
    let spec = CirculantSpec::ck(n, k).expect("k in range");
    let predicted = spec.predicted_mbt().expect("C(n, k) form");
    let mut row = SweepRow {
        n,
        k,
        route: None,
        method: None,
        pages: None,
        predicted,
        valid: false,
        oracle: None,
        ok: true,
        error: None,
    };
    if with_embed {
        match embed(n, k) {
            Ok(emb) => {
                row.route = Some(emb.route);
                row.method = Some(emb.method);
                row.pages = Some(emb.pages);
                row.valid = verify_embedding(&spec, &emb).is_valid();
                row.ok &= row.valid && emb.pages == predicted;
            }
            Err(e) => {
                row.ok = false;
                row.error = Some(e.to_string());
            }
        }
    }
    if with_oracle {
        match brute_force_mbt(&spec, DEFAULT_PAGE_CAP) {
            Ok(m) => {
                row.oracle = Some(m);
                row.ok &= m == predicted;
            }
            Err(e) => {
                row.ok = false;
                row.error.get_or_insert(e.to_string());
            }
        }
    }
    row
}

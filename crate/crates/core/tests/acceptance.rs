//! Acceptance suite. Runs without the libtest harness so that every criterion
//! prints exactly one PASS/FAIL line; exits nonzero if any criterion fails.

use std::collections::HashMap;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use circbook::classify::{component_count, verify_certificate, Target};
use circbook::embed::{Method, Route};
use circbook::numth::gcd;
use circbook::render::svg;
use circbook::sweep::run_sweep;
use circbook::verify::{brute_force_mbt, DEFAULT_PAGE_CAP};
use circbook::{
    build_partition, classify, embed, verify_embedding, BookEmbedding, CirculantSpec, Edge, Family,
    Layout,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use regex::Regex;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn embedding_sweep() -> Outcome {
    let start = Instant::now();
    let report = run_sweep(60, 0);
    let elapsed = start.elapsed();
    let bad: Vec<String> = report
        .rows
        .iter()
        .filter(|r| !r.ok)
        .map(|r| {
            format!(
                "C({},{}) pages={:?} predicted={} valid={}",
                r.n, r.k, r.pages, r.predicted, r.valid
            )
        })
        .collect();
    if !bad.is_empty() {
        return Err(format!("{} failures: {}", bad.len(), bad.join("; ")));
    }
    let summary = format!("{} graphs, 0 failures, {:.2?}", report.rows.len(), elapsed);
    if elapsed > Duration::from_secs(10) {
        return Err(format!("{summary} exceeds the 10 s target"));
    }
    Ok(summary)
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for n in 3..=9 {
        for k in 1..=n / 2 {
            let spec = CirculantSpec::ck(n, k).map_err(|e| e.to_string())?;
            let oracle = brute_force_mbt(&spec, DEFAULT_PAGE_CAP).map_err(|e| e.to_string())?;
            let predicted = spec.predicted_mbt().map_err(|e| e.to_string())?;
            if oracle != predicted {
                return Err(format!(
                    "C({n},{k}): oracle {oracle} != predicted {predicted}"
                ));
            }
            checked += 1;
        }
    }
    for (n, k, want) in [(9, 3, 5), (4, 2, 4), (5, 2, 5)] {
        let got = brute_force_mbt(&CirculantSpec::ck(n, k).unwrap(), DEFAULT_PAGE_CAP)
            .map_err(|e| e.to_string())?;
        if got != want {
            return Err(format!("C({n},{k}) = {got}, expected {want}"));
        }
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(300) {
        return Err(format!(
            "{checked} graphs took {elapsed:.2?}, over the 5 min target"
        ));
    }
    Ok(format!(
        "{checked} graphs agree, C(9,3)=5, K4=4, K5=5, {elapsed:.2?}"
    ))
}

fn bundle_certificate() -> Outcome {
    let c = classify(60, 28, 35).map_err(|e| e.to_string())?;
    let Family::BundleUnion {
        copies,
        base_len,
        fiber_len,
        shift,
        ..
    } = c.family
    else {
        return Err(format!("wrong family: {}", c.family));
    };
    if (copies, base_len, fiber_len, shift) != (1, 4, 15, 5) {
        return Err(format!("got {}", c.family));
    }
    let spec = c.spec().map_err(|e| e.to_string())?;
    let components = component_count(&spec);
    if components != 1 {
        return Err(format!("{components} components"));
    }
    let cert = c.certificate().map_err(|e| e.to_string())?;
    let target_edges = Target::Bundle {
        base_len: 4,
        fiber_len: 15,
        shift: 5,
    }
    .edges()
    .map_err(|e| e.to_string())?;
    if target_edges.len() != spec.edge_count() {
        return Err(format!(
            "{} bundle edges vs {} graph edges",
            target_edges.len(),
            spec.edge_count()
        ));
    }
    if !verify_certificate(&spec, &cert).map_err(|e| e.to_string())? {
        return Err("reconstructed bundle edge set differs from the graph".into());
    }
    Ok(format!(
        "{}, 1 component, {} edges match",
        c.family,
        target_edges.len()
    ))
}

fn fixture(n: usize, k: usize) -> Result<Vec<Vec<usize>>, String> {
    let path: PathBuf = [
        env!("CARGO_MANIFEST_DIR"),
        "tests",
        "fixtures",
        "partitions",
        &format!("c{n}_{k}.txt"),
    ]
    .iter()
    .collect();
    let text = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            l.split(',')
                .map(|x| x.trim().parse().map_err(|e| format!("{x}: {e}")))
                .collect()
        })
        .collect()
}

fn partition_fixtures() -> Outcome {
    let cases = [(56, 5, 5), (53, 9, 9), (87, 20, 7), (77, 10, 4), (56, 9, 3)];
    for (n, k, t) in cases {
        let p = build_partition(n, k).map_err(|e| e.to_string())?;
        if p.t != t {
            return Err(format!("C({n},{k}): t = {}, expected {t}", p.t));
        }
        if p.sets != fixture(n, k)? {
            return Err(format!("C({n},{k}): sets differ from the golden file"));
        }
    }
    Ok("C(56,5) C(53,9) C(87,20) C(77,10) C(56,9) match, t = 5 9 7 4 3".into())
}

fn classification_sample() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed_c1a5);
    let mut done = 0;
    let mut families: HashMap<&'static str, usize> = HashMap::new();
    while done < 100 {
        let n = rng.random_range(3..=40);
        let k1 = rng.random_range(1..n - 1);
        let k2 = rng.random_range(k1 + 1..n);
        if k1 + k2 == n {
            // k2 = -k1: a one-jump graph, not a two-jump triple
            continue;
        }
        let spec = CirculantSpec::build(n, &[k1, k2]).map_err(|e| e.to_string())?;
        let want = gcd(gcd(k1, k2), n);
        let got = component_count(&spec);
        if got != want {
            return Err(format!(
                "C({n},{{{k1},{k2}}}): {got} components, gcd {want}"
            ));
        }
        let c = classify(n, k1, k2).map_err(|e| e.to_string())?;
        let cert = c.certificate().map_err(|e| e.to_string())?;
        if !verify_certificate(&spec, &cert).map_err(|e| e.to_string())? {
            return Err(format!(
                "C({n},{{{k1},{k2}}}): certificate for {} rejected",
                c.family
            ));
        }
        let name = match c.family {
            Family::SingleJumpUnion { .. } => "union",
            Family::BundleUnion { .. } => "bundle",
            Family::PrismUnion { .. } => "prism",
            Family::HalfJumpUnion { .. } => "half-jump",
        };
        *families.entry(name).or_default() += 1;
        done += 1;
    }
    let mut mix: Vec<String> = families.iter().map(|(k, v)| format!("{k}={v}")).collect();
    mix.sort();
    Ok(format!(
        "100 triples, components = gcd, certificates verify ({})",
        mix.join(" ")
    ))
}

/// Rebuild the embedding drawn in `text` from coordinates alone and check
/// that every chord ends exactly on the vertex it names.
fn embedding_from_svg(text: &str, n: usize, route: Route) -> Result<BookEmbedding, String> {
    let circle = Regex::new(r#"<circle data-v="(\d+)" cx="([-\d.]+)" cy="([-\d.]+)""#).unwrap();
    let line = Regex::new(
        r#"<line data-u="(\d+)" data-v="(\d+)" data-page="(\d+)" x1="([-\d.]+)" y1="([-\d.]+)" x2="([-\d.]+)" y2="([-\d.]+)""#,
    )
    .unwrap();
    let mut at: HashMap<usize, (String, String)> = HashMap::new();
    let mut order = vec![0; n];
    let (c, two_pi) = (circbook::render::SVG_SIZE / 2.0, 2.0 * std::f64::consts::PI);
    for cap in circle.captures_iter(text) {
        let v: usize = cap[1].parse().unwrap();
        let (x, y): (f64, f64) = (cap[2].parse().unwrap(), cap[3].parse().unwrap());
        let index =
            ((y - c).atan2(x - c).rem_euclid(two_pi) / two_pi * n as f64).round() as usize % n;
        if order[index] != 0 {
            return Err(format!("two vertices at index {index}"));
        }
        order[index] = v;
        at.insert(v, (cap[2].to_string(), cap[3].to_string()));
    }
    let mut assignment = Vec::new();
    let mut pages = 0;
    for cap in line.captures_iter(text) {
        let (u, v, page): (usize, usize, usize) = (
            cap[1].parse().unwrap(),
            cap[2].parse().unwrap(),
            cap[3].parse().unwrap(),
        );
        let ends = (at.get(&u), at.get(&v));
        let (Some(pu), Some(pv)) = ends else {
            return Err(format!("chord ({u},{v}) names a missing vertex"));
        };
        if (&cap[4], &cap[5]) != (pu.0.as_str(), pu.1.as_str())
            || (&cap[6], &cap[7]) != (pv.0.as_str(), pv.1.as_str())
        {
            return Err(format!("chord ({u},{v}) does not end on its vertices"));
        }
        pages = pages.max(page + 1);
        assignment.push((Edge::new(u, v), page));
    }
    Ok(BookEmbedding::new(
        Layout::new(order),
        pages,
        assignment,
        route,
    ))
}

fn figure_parity() -> Outcome {
    let figures = [
        (14, 5, 4),
        (14, 7, 3),
        (12, 6, 4),
        (24, 4, 5),
        (9, 3, 5),
        (27, 3, 5),
        (65, 5, 5),
        (27, 13, 5),
        (25, 8, 5),
        (55, 9, 5),
        (53, 6, 5),
        (63, 11, 5),
        (65, 14, 5),
        (47, 13, 5),
    ];
    let mut counts = Vec::new();
    for (n, k, want) in figures {
        let emb = embed(n, k).map_err(|e| format!("C({n},{k}): {e}"))?;
        let spec = CirculantSpec::ck(n, k).unwrap();
        if emb.method == Method::Exhaustive {
            return Err(format!("C({n},{k}) needed the exhaustive fallback"));
        }
        let drawn = svg(&emb, &format!("C({n},{k})"));
        let parsed =
            embedding_from_svg(&drawn, n, emb.route).map_err(|e| format!("C({n},{k}): {e}"))?;
        let report = verify_embedding(&spec, &parsed);
        if !report.is_valid() {
            return Err(format!(
                "C({n},{k}): SVG embedding rejected: {:?}",
                report.first_violation
            ));
        }
        if emb.pages != want || report.pages_used != want {
            return Err(format!(
                "C({n},{k}): {} pages ({} drawn), expected {want}",
                emb.pages, report.pages_used
            ));
        }
        counts.push(want.to_string());
    }
    Ok(format!(
        "14 figures verifier-clean from SVG, pages {}",
        counts.join(",")
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 6] = [
        ("embedding sweep n <= 60", embedding_sweep),
        ("oracle equivalence n <= 9", oracle_equivalence),
        ("bundle certificate C(Z_60,{28,35})", bundle_certificate),
        ("partition golden fixtures", partition_fixtures),
        ("classification soundness sample", classification_sample),
        ("figure parity", figure_parity),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS [{}] {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL [{}] {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

//! Exhaustive verification suites for the extremality statements, each
//! returning a report of instances checked and any violations found.

use crate::constructions::{
    balanced_bipartite_max, hook_shapes, nearly_regular, prop31_maximizer, prop32_maximizer,
};
use crate::error::{Error, Result};
use crate::kernel::DegreeSequence;
use crate::majorization::{is_bigraphical, majorizes};
use crate::search::{
    bigraphical_pairs, brute_force_extremal, fast_extremal, for_each_partition,
};
use crate::tableau::YoungTableau;
use std::collections::{HashMap, HashSet};

#[derive(Debug, Clone)]
pub struct Report {
    pub suite: String,
    pub checked: u64,
    pub violations: Vec<String>,
}

impl Report {
    fn new(suite: &str) -> Self {
        Report { suite: suite.into(), checked: 0, violations: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

impl std::fmt::Display for Report {
    fn fmt(&self, fm: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.passed() {
            write!(fm, "{}: pass ({} instances checked)", self.suite, self.checked)
        } else {
            writeln!(fm, "{}: FAIL ({} instances checked)", self.suite, self.checked)?;
            for v in &self.violations {
                writeln!(fm, "  violation: {v}")?;
            }
            Ok(())
        }
    }
}

/// Whether a degree pair is that of a complete bipartite graph.
fn is_complete_bipartite_pair(a: &DegreeSequence, b: &DegreeSequence) -> bool {
    let av = a.nonzero();
    let bv = b.nonzero();
    !av.is_empty()
        && av.iter().all(|&d| d == bv.len() as u64)
        && bv.iter().all(|&d| d == av.len() as u64)
}

/// `h ≤ m ln m` over every bigraphical pair of size at most `limit`,
/// with equality exactly at complete bipartite pairs.
pub fn thm11(limit: u64) -> Report {
    let mut report = Report::new("thm11");
    for m in 1..=limit {
        let bound = (m as f64) * (m as f64).ln();
        for pair in bigraphical_pairs(m) {
            report.checked += 1;
            let h = pair.h();
            let complete = is_complete_bipartite_pair(pair.u_degrees(), pair.v_degrees());
            if complete {
                if (h - bound).abs() > 1e-9 {
                    report.violations.push(format!(
                        "m={m} complete pair {}/{} has h={h} != m ln m={bound}",
                        pair.u_degrees(),
                        pair.v_degrees()
                    ));
                }
            } else if h >= bound - 1e-9 {
                report.violations.push(format!(
                    "m={m} non-complete pair {}/{} has h={h} >= m ln m - tol",
                    pair.u_degrees(),
                    pair.v_degrees()
                ));
            }
        }
    }
    report
}

/// `h(T) < h(T')` for every valid hook-shape instance with `x ≤ limit`.
pub fn lemma41(limit: u64) -> Report {
    let mut report = Report::new("lemma41");
    for x in 3..=limit {
        for y in 2..x {
            for r in 1..=x - y {
                for s in 1..y {
                    if r + s - 1 < y {
                        continue; // w = 0, outside the hypothesis
                    }
                    let hook = hook_shapes(x, y, r, s).expect("parameters satisfy the hypothesis");
                    report.checked += 1;
                    if hook.t.h() >= hook.t_prime.h() {
                        report.violations.push(format!(
                            "(x,y,r,s)=({x},{y},{r},{s}): h(T)={} !< h(T')={}",
                            hook.t.h(),
                            hook.t_prime.h()
                        ));
                    }
                }
            }
        }
    }
    report
}

/// Every brute-force extremal tableau contains its `[y]×[y]` corner
/// square (min degree of the smaller class ≥ max degree of the other).
pub fn lemma42(limit: u64) -> Report {
    let mut report = Report::new("lemma42");
    for n in 2..=limit {
        for m in 1..=n * n / 4 {
            let winners = match brute_force_extremal(m, Some(n)) {
                Ok((_, w)) => w,
                Err(Error::Infeasible(_)) => continue,
                Err(e) => {
                    report.violations.push(format!("n={n} m={m}: {e}"));
                    continue;
                }
            };
            for t in winners {
                report.checked += 1;
                let y = t.num_rows();
                let min_row = *t.rows().last().unwrap();
                if min_row < y {
                    report.violations.push(format!(
                        "n={n} m={m}: extremal {t} has min row {min_row} < {y} rows"
                    ));
                }
            }
        }
    }
    report
}

/// Every brute-force extremal tableau satisfies `xy - min(x,y) < m ≤ xy`,
/// and the brute-force maximum agrees with the fast `B(n,m,y)` scan.
pub fn thm43(limit: u64) -> Report {
    let mut report = Report::new("thm43");
    for n in 2..=limit {
        for m in 1..=n * n / 4 {
            let (brute_h, winners) = match brute_force_extremal(m, Some(n)) {
                Ok(res) => res,
                Err(Error::Infeasible(_)) => continue,
                Err(e) => {
                    report.violations.push(format!("n={n} m={m}: {e}"));
                    continue;
                }
            };
            report.checked += 1;
            match fast_extremal(n, m) {
                Ok((fast_winner, _)) => {
                    let tol = 1e-9 * brute_h.abs().max(1.0);
                    if (brute_h - fast_winner.h).abs() > tol {
                        report.violations.push(format!(
                            "n={n} m={m}: brute h={brute_h} vs fast h={}",
                            fast_winner.h
                        ));
                    }
                }
                Err(e) => report.violations.push(format!("n={n} m={m}: fast scan failed: {e}")),
            }
            for t in winners {
                let (x, y) = (t.width(), t.num_rows());
                // Representatives have y <= x.
                if !(x * y - y < m && m <= x * y) {
                    report.violations.push(format!(
                        "n={n} m={m}: extremal {t} has xy-min={} not < m <= xy={}",
                        x * y - y,
                        x * y
                    ));
                }
            }
        }
    }
    report
}

fn exact_unique_maximizer(
    candidates: &[YoungTableau],
    expected: &YoungTableau,
    label: &str,
    report: &mut Report,
) {
    let keys: Vec<_> = candidates.iter().map(|t| t.degrees().h_key()).collect();
    let max_key = keys.iter().max().expect("non-empty candidate set").clone();
    let winners: Vec<&YoungTableau> = candidates
        .iter()
        .zip(&keys)
        .filter(|(_, k)| **k == max_key)
        .map(|(t, _)| t)
        .collect();
    if winners.len() != 1 || winners[0] != expected {
        report.violations.push(format!(
            "{label}: expected unique maximizer {expected}, found {:?}",
            winners.iter().map(|t| t.to_string()).collect::<Vec<_>>()
        ));
    }
}

/// The single-column-trim shape uniquely maximizes `h` over tableaux
/// with `xy - r` cells inside the `[x]×[y]` box, for `x, y ≤ limit`.
pub fn prop31(limit: u64) -> Report {
    let mut report = Report::new("prop31");
    for x in 3..=limit {
        for y in 2..x {
            for r in 1..y {
                let m = x * y - r;
                let mut candidates = Vec::new();
                for_each_partition(m, x, y as usize, |parts| {
                    candidates.push(YoungTableau::new(parts.to_vec()).unwrap());
                });
                let expected = prop31_maximizer(x, y, r).unwrap();
                report.checked += 1;
                exact_unique_maximizer(&candidates, &expected, &format!("prop31({x},{y},{r})"), &mut report);
            }
        }
    }
    report
}

/// All tableaux with `qy + r` cells containing the `[q]×[y]` box: the
/// rectangle extended by one `(q+1)`-column of height `r`.
fn tableaux_containing_box(q: u64, y: u64, r: u64) -> Vec<YoungTableau> {
    let mut result = Vec::new();
    for k in 0..=r {
        // alpha: cells appended to the right of the box rows.
        let mut alphas: Vec<Vec<u64>> = Vec::new();
        for_each_partition(k, k.max(1), y as usize, |parts| alphas.push(parts.to_vec()));
        for alpha in &alphas {
            let mut rows: Vec<u64> = (0..y as usize)
                .map(|j| q + alpha.get(j).copied().unwrap_or(0))
                .collect();
            let below = r - k;
            if below == 0 {
                result.push(YoungTableau::new(rows.clone()).unwrap());
                continue;
            }
            // beta: full rows below the box; lengths at most q and at
            // most the remainder, so always stackable.
            for_each_partition(below, below.min(q), below as usize, |beta| {
                let mut full = rows.clone();
                full.extend_from_slice(beta);
                result.push(YoungTableau::new(full).unwrap());
            });
            rows.clear();
        }
    }
    result
}

/// The one-extra-column shape uniquely maximizes `h` over tableaux with
/// `qy + r` cells containing the `[q]×[y]` box, for `q ≤ limit`.
pub fn prop32(limit: u64) -> Report {
    let mut report = Report::new("prop32");
    for q in 2..=limit {
        for y in 2..=q {
            for r in 1..y {
                let candidates = tableaux_containing_box(q, y, r);
                let expected = prop32_maximizer(q, y, r).unwrap();
                report.checked += 1;
                if q > y {
                    exact_unique_maximizer(
                        &candidates,
                        &expected,
                        &format!("prop32({q},{y},{r})"),
                        &mut report,
                    );
                    continue;
                }
                // Square box: the conjugate of the maximizer also
                // contains it, so uniqueness holds up to conjugation.
                let keys: Vec<_> = candidates.iter().map(|t| t.degrees().h_key()).collect();
                let max_key = keys.iter().max().unwrap().clone();
                let conj = expected.conjugate();
                let mut found_expected = false;
                for (t, k) in candidates.iter().zip(&keys) {
                    if *k != max_key {
                        continue;
                    }
                    found_expected |= *t == expected;
                    if *t != expected && *t != conj {
                        report.violations.push(format!(
                            "prop32({q},{y},{r}): stray maximizer {t}"
                        ));
                    }
                }
                if !found_expected {
                    report.violations.push(format!(
                        "prop32({q},{y},{r}): expected maximizer {expected} not maximal"
                    ));
                }
            }
        }
    }
    report
}

/// Degree sequences of all labeled simple graphs on `n ≤ 7` vertices,
/// bucketed by edge count.
fn graphical_sequences(n: usize) -> HashMap<u64, HashSet<Vec<u64>>> {
    assert!(n <= 7, "exhaustive graph enumeration is capped at n = 7");
    let mut edges = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            edges.push((a, b));
        }
    }
    let mut buckets: HashMap<u64, HashSet<Vec<u64>>> = HashMap::new();
    for mask in 0u32..(1 << edges.len()) {
        let mut deg = vec![0u64; n];
        let mut m = 0u64;
        let mut bits = mask;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            let (a, b) = edges[i];
            deg[a] += 1;
            deg[b] += 1;
            m += 1;
            bits &= bits - 1;
        }
        deg.sort_unstable_by(|a, b| b.cmp(a));
        buckets.entry(m).or_default().insert(deg);
    }
    buckets
}

/// Nearly-regular minimality: its degree sequence is majorized by every
/// graphical sequence of the same `(n, m)` (exhaustive for `n ≤ 7`),
/// and its witness graph is simple with the declared degrees.
pub fn prop51(limit: u64) -> Report {
    let mut report = Report::new("prop51");
    for n in 2..=limit {
        let buckets = if n <= 7 { Some(graphical_sequences(n as usize)) } else { None };
        for m in 0..=n * (n - 1) / 2 {
            let (deg, edges) = match nearly_regular(n, m) {
                Ok(res) => res,
                Err(e) => {
                    report.violations.push(format!("n={n} m={m}: {e}"));
                    continue;
                }
            };
            report.checked += 1;
            // Witness validity.
            let mut seen = HashSet::new();
            let mut count = vec![0u64; n as usize];
            for &(a, b) in &edges {
                if a >= b || b >= n as usize || !seen.insert((a, b)) {
                    report.violations.push(format!("n={n} m={m}: bad witness edge ({a},{b})"));
                }
                count[a] += 1;
                count[b] += 1;
            }
            if DegreeSequence::new(count) != deg {
                report.violations.push(format!("n={n} m={m}: witness degrees mismatch"));
            }
            let spread = deg.degrees().first().unwrap() - deg.degrees().last().unwrap();
            if spread > 1 {
                report.violations.push(format!("n={n} m={m}: spread {spread} > 1"));
            }
            if let Some(buckets) = &buckets {
                for other in buckets.get(&m).into_iter().flatten() {
                    let other = DegreeSequence::new(other.clone());
                    if !majorizes(&other, &deg) {
                        report.violations.push(format!(
                            "n={n} m={m}: {other} does not majorize nearly-regular {deg}"
                        ));
                    }
                }
            }
        }
    }
    report
}

/// Balanced bipartite maximality: its combined degree sequence is
/// majorized by every bigraphical pair of the same order and size.
pub fn prop52(limit: u64) -> Report {
    let mut report = Report::new("prop52");
    for n in 2..=limit {
        let capacity = (n / 2) * n.div_ceil(2);
        for m in 1..=capacity {
            let (pair, _) = match balanced_bipartite_max(n, m) {
                Ok(res) => res,
                Err(e) => {
                    report.violations.push(format!("n={n} m={m}: {e}"));
                    continue;
                }
            };
            report.checked += 1;
            let balanced = pair.combined();
            for u in 1..n {
                let v = n - u;
                let mut a_parts: Vec<Vec<u64>> = Vec::new();
                for_each_partition(m, v, u as usize, |p| a_parts.push(p.to_vec()));
                let mut b_parts: Vec<Vec<u64>> = Vec::new();
                for_each_partition(m, u, v as usize, |p| b_parts.push(p.to_vec()));
                for a in &a_parts {
                    let da = DegreeSequence::new(a.clone());
                    for b in &b_parts {
                        let db = DegreeSequence::new(b.clone());
                        if !is_bigraphical(&da, &db) {
                            continue;
                        }
                        let mut combined = a.clone();
                        combined.extend_from_slice(b);
                        let combined = DegreeSequence::new(combined);
                        if !majorizes(&combined, &balanced) {
                            report.violations.push(format!(
                                "n={n} m={m}: pair {da}/{db} does not majorize balanced {balanced}"
                            ));
                        }
                    }
                }
            }
        }
    }
    report
}

pub const SUITES: &[&str] =
    &["thm11", "lemma41", "lemma42", "thm43", "prop31", "prop32", "prop51", "prop52"];

/// Default limit per suite, matching the exhaustive regimes above.
pub fn default_limit(suite: &str) -> u64 {
    match suite {
        "thm11" => 8,
        "lemma41" => 12,
        "lemma42" => 12,
        "thm43" => 12,
        "prop31" => 8,
        "prop32" => 8,
        "prop51" => 7,
        "prop52" => 10,
        _ => 0,
    }
}

pub fn run_suite(suite: &str, limit: Option<u64>) -> Result<Report> {
    let limit = limit.unwrap_or_else(|| default_limit(suite));
    match suite {
        "thm11" => Ok(thm11(limit)),
        "lemma41" => Ok(lemma41(limit)),
        "lemma42" => Ok(lemma42(limit)),
        "thm43" => Ok(thm43(limit)),
        "prop31" => Ok(prop31(limit)),
        "prop32" => Ok(prop32(limit)),
        "prop51" => Ok(prop51(limit)),
        "prop52" => Ok(prop52(limit)),
        other => Err(Error::Domain(format!("unknown suite {other:?}; known: {SUITES:?}"))),
    }
}

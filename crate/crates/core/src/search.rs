//! Brute-force extremal search over Young tableaux, the fast `B(n,m,y)`
//! scan, and the order/size sweep with its per-record flags.
//!
//! Float `h` values drive the argmax; exact decisions (maximizer sets,
//! near-ties) fall back to the integer key `Π dᵢ^dᵢ`, so no tableau is
//! merged or dropped by rounding.

use crate::constructions::b_nmy;
use crate::error::{Error, Result};
use crate::kernel::f;
use crate::majorization::is_bigraphical;
use crate::tableau::{BipartiteDegreePair, YoungTableau};
use crate::kernel::DegreeSequence;
use rayon::prelude::*;

/// Calls `visit` once per partition of `m` into at most `max_len`
/// non-increasing parts, each at most `max_part`. Parts arrive in a
/// scratch buffer that must not be retained.
pub fn for_each_partition<F: FnMut(&[u64])>(m: u64, max_part: u64, max_len: usize, mut visit: F) {
    fn rec<F: FnMut(&[u64])>(rem: u64, cap: u64, slots: usize, buf: &mut Vec<u64>, visit: &mut F) {
        if rem == 0 {
            visit(buf);
            return;
        }
        if slots == 0 || cap == 0 {
            return;
        }
        let start = rem.min(cap);
        for part in (1..=start).rev() {
            // Remaining cells must fit in the remaining slots.
            if part * (slots as u64 - 1) < rem - part {
                break;
            }
            buf.push(part);
            rec(rem - part, part, slots - 1, buf, visit);
            buf.pop();
        }
    }
    let mut buf = Vec::new();
    rec(m, max_part, max_len, &mut buf, &mut visit);
}

/// Number of partitions of `m` (saturating), for the brute-force guard.
pub fn partition_count(m: u64) -> u64 {
    let m = m as usize;
    let mut table = vec![0u64; m + 1];
    table[0] = 1;
    for part in 1..=m {
        for total in part..=m {
            table[total] = table[total].saturating_add(table[total - part]);
        }
    }
    table[m]
}

/// All Young tableaux with `m` cells and `x + y ≤ n` (None = unbounded),
/// one representative per conjugate pair, preferring `y ≤ x`.
pub fn enumerate_tableaux(m: u64, n: Option<u64>) -> Vec<YoungTableau> {
    let mut out = Vec::new();
    let max_len = match n {
        // x + y <= n and x >= 1 cap the row count.
        Some(bound) => bound.saturating_sub(1) as usize,
        None => m as usize,
    };
    for_each_partition(m, m, max_len, |parts| {
        let x = parts[0];
        let y = parts.len() as u64;
        if let Some(bound) = n {
            if x + y > bound {
                return;
            }
        }
        if y > x {
            return;
        }
        let t = YoungTableau::new(parts.to_vec()).expect("generated partition is valid");
        if y == x {
            // Square bounding box: both orientations pass y <= x; keep
            // the lexicographically smaller one (self-conjugates once).
            let conj = t.conjugate();
            if t.rows() > conj.rows() {
                return;
            }
        }
        out.push(t);
    });
    out
}

/// Default ceiling on partition count for exhaustive search.
pub const DEFAULT_STATE_LIMIT: u64 = 1_000_000;

/// Exhaustive maximum of `h` over `enumerate_tableaux(m, n)`, with the
/// complete set of maximizers (ties resolved exactly via `Π dᵢ^dᵢ`).
pub fn brute_force_extremal(m: u64, n: Option<u64>) -> Result<(f64, Vec<YoungTableau>)> {
    brute_force_extremal_with_limit(m, n, DEFAULT_STATE_LIMIT)
}

pub fn brute_force_extremal_with_limit(
    m: u64,
    n: Option<u64>,
    state_limit: u64,
) -> Result<(f64, Vec<YoungTableau>)> {
    if m == 0 {
        return Err(Error::Domain("brute_force_extremal requires m >= 1".into()));
    }
    let states = partition_count(m);
    if states > state_limit {
        return Err(Error::TooLarge(format!(
            "partition count {states} for m = {m} exceeds the limit {state_limit}"
        )));
    }
    let mut best = f64::NEG_INFINITY;
    let mut candidates: Vec<(YoungTableau, f64)> = Vec::new();
    for t in enumerate_tableaux(m, n) {
        let h = t.h();
        if h > best {
            best = h;
        }
        candidates.push((t, h));
    }
    if candidates.is_empty() {
        return Err(Error::Infeasible(format!("no tableau with {m} cells fits the order bound")));
    }
    // Floats only shortlist; exact keys decide the maximizer set.
    let tol = 1e-9 * best.abs().max(1.0);
    candidates.retain(|(_, h)| best - *h <= tol);
    let keys: Vec<_> = candidates.iter().map(|(t, _)| t.degrees().h_key()).collect();
    let max_key = keys.iter().max().cloned().expect("non-empty");
    let mut winners: Vec<YoungTableau> = candidates
        .into_iter()
        .zip(keys)
        .filter(|(_, k)| *k == max_key)
        .map(|((t, _), _)| t)
        .collect();
    winners.sort();
    let h = winners[0].h();
    Ok((h, winners))
}

/// One row of the order/size sweep: the `B(n,m,y)` candidate for a
/// feasible `y`, with its three extremality flags.
#[derive(Debug, Clone, PartialEq)]
pub struct ExtremalRecord {
    pub n: u64,
    pub m: u64,
    pub y: u64,
    /// `q = ⌊m/y⌋`.
    pub q: u64,
    /// `x = ⌈m/y⌉`.
    pub x: u64,
    /// `m - qy`: edges beyond the largest contained rectangle.
    pub r_low: u64,
    /// `xy - m`: edges missing from the smallest containing rectangle.
    pub r_high: u64,
    pub h: f64,
    /// `h` maximal among all feasible `y` for this `(n, m)`.
    pub is_max_h: bool,
    /// `r_low` minimal among all feasible `y` for this `(n, m)`.
    pub is_min_r_low: bool,
    /// `r_high` minimal among all feasible `y` for this `(n, m)`.
    pub is_min_r_high: bool,
}

impl ExtremalRecord {
    pub fn is_rectangle(&self) -> bool {
        self.r_low == 0
    }

    pub fn tableau(&self) -> YoungTableau {
        b_nmy(Some(self.n), self.m, self.y).expect("record parameters are feasible").tableau()
    }
}

/// Records for all feasible `1 ≤ y ≤ ⌊√m⌋` at a given `(n, m)`, in
/// ascending `y`, with group flags assigned.
pub fn records_for(n: u64, m: u64) -> Vec<ExtremalRecord> {
    let mut records = Vec::new();
    let mut y = 1;
    while y * y <= m {
        let x = m.div_ceil(y);
        if y + x <= n {
            let q = m / y;
            let r_low = m - q * y;
            let r_high = x * y - m;
            let h = (r_low as f64) * f(q + 1) + ((y - r_low) as f64) * f(q) + (q as f64) * f(y) + f(r_low);
            records.push(ExtremalRecord {
                n,
                m,
                y,
                q,
                x,
                r_low,
                r_high,
                h,
                is_max_h: false,
                is_min_r_low: false,
                is_min_r_high: false,
            });
        }
        y += 1;
    }
    if records.is_empty() {
        return records;
    }
    let max_h = records.iter().map(|r| r.h).fold(f64::NEG_INFINITY, f64::max);
    let min_r_low = records.iter().map(|r| r.r_low).min().unwrap();
    let min_r_high = records.iter().map(|r| r.r_high).min().unwrap();
    for r in &mut records {
        r.is_max_h = r.h == max_h;
        r.is_min_r_low = r.r_low == min_r_low;
        r.is_min_r_high = r.r_high == min_r_high;
    }
    records
}

/// The winning record (smallest `y` attaining the maximum `h`) plus all
/// per-`y` records for `(n, m)`.
pub fn fast_extremal(n: u64, m: u64) -> Result<(ExtremalRecord, Vec<ExtremalRecord>)> {
    if m == 0 {
        return Err(Error::Domain("fast_extremal requires m >= 1".into()));
    }
    let records = records_for(n, m);
    let winner = records
        .iter()
        .find(|r| r.is_max_h)
        .cloned()
        .ok_or_else(|| {
            Error::Infeasible(format!("no B({n},{m},y) fits within order {n} (capacity {})", (n / 2) * n.div_ceil(2)))
        })?;
    Ok((winner, records))
}

/// All records for `2 ≤ n ≤ max_n`, `1 ≤ m ≤ ⌊n²/4⌋`, in `(n, m, y)`
/// order. Pairs are evaluated in parallel; output order is fixed.
pub fn sweep(max_n: u64) -> Vec<ExtremalRecord> {
    let pairs: Vec<(u64, u64)> =
        (2..=max_n).flat_map(|n| (1..=n * n / 4).map(move |m| (n, m))).collect();
    pairs
        .par_iter()
        .map(|&(n, m)| records_for(n, m))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

/// Tally of extremal non-rectangle records by which of the two residues
/// is minimal.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Tally {
    pub both_min: u64,
    pub only_r_low: u64,
    pub only_r_high: u64,
    pub neither: u64,
}

/// Summary counts over a sweep, both per extremal record and per `(n,m)`
/// pair (classified by its first extremal non-rectangle record).
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SweepSummary {
    pub per_record: Tally,
    pub per_pair: Tally,
}

pub fn summarize(records: &[ExtremalRecord]) -> SweepSummary {
    let mut summary = SweepSummary::default();
    let mut current_pair = None;
    let mut pair_counted = false;
    for r in records {
        if current_pair != Some((r.n, r.m)) {
            current_pair = Some((r.n, r.m));
            pair_counted = false;
        }
        if !(r.is_max_h && r.r_low > 0) {
            continue;
        }
        let bump = |t: &mut Tally| match (r.is_min_r_low, r.is_min_r_high) {
            (true, true) => t.both_min += 1,
            (true, false) => t.only_r_low += 1,
            (false, true) => t.only_r_high += 1,
            (false, false) => t.neither += 1,
        };
        bump(&mut summary.per_record);
        if !pair_counted {
            bump(&mut summary.per_pair);
            pair_counted = true;
        }
    }
    summary
}

/// All Gale–Ryser-realizable degree-sequence pairs of size `m`,
/// deduplicated up to swapping the two classes.
pub fn bigraphical_pairs(m: u64) -> Vec<BipartiteDegreePair> {
    let mut partitions: Vec<Vec<u64>> = Vec::new();
    for_each_partition(m, m, m as usize, |parts| partitions.push(parts.to_vec()));
    let mut pairs = Vec::new();
    for (i, a) in partitions.iter().enumerate() {
        for b in &partitions[i..] {
            let da = DegreeSequence::new(a.clone());
            let db = DegreeSequence::new(b.clone());
            if is_bigraphical(&da, &db) {
                pairs.push(BipartiteDegreePair::new(da, db).expect("Gale-Ryser implies consistency"));
            }
        }
    }
    pairs
}

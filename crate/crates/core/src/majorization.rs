//! Majorization order, the Karamata comparison it induces on `h`, and the
//! Gale–Ryser bigraphicality test used as realizability filter.

use crate::kernel::DegreeSequence;

/// True iff every prefix sum of `a` dominates that of `b` and the totals
/// agree. Sequences are zero-padded internally to a common length.
pub fn majorizes(a: &DegreeSequence, b: &DegreeSequence) -> bool {
    if a.total() != b.total() {
        return false;
    }
    let av = a.degrees();
    let bv = b.degrees();
    let len = av.len().max(bv.len());
    let (mut pa, mut pb) = (0u64, 0u64);
    for i in 0..len {
        pa += av.get(i).copied().unwrap_or(0);
        pb += bv.get(i).copied().unwrap_or(0);
        if pa < pb {
            return false;
        }
    }
    true
}

/// Outcome of comparing `h(a)` against `h(b)` along the majorization order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KaramataOrdering {
    /// Same degree multiset, hence `h(a) = h(b)` exactly.
    Equal,
    /// `a` strictly majorizes `b`, hence `h(a) > h(b)` (f strictly convex).
    StrictlyGreater,
    /// `a` does not majorize `b`; nothing is certified.
    Incomparable,
}

/// Karamata comparison: when `a` majorizes `b`, `h(a) ≥ h(b)` with
/// strictness exactly when the multisets differ.
pub fn karamata_compare(a: &DegreeSequence, b: &DegreeSequence) -> KaramataOrdering {
    if !majorizes(a, b) {
        return KaramataOrdering::Incomparable;
    }
    if a == b {
        KaramataOrdering::Equal
    } else {
        KaramataOrdering::StrictlyGreater
    }
}

/// Gale–Ryser: a simple bipartite graph with class degree sequences `a`
/// and `b` exists iff the sums agree and for every `k`,
/// `Σ_{i≤k} a_i ≤ Σ_j min(b_j, k)`.
pub fn is_bigraphical(a: &DegreeSequence, b: &DegreeSequence) -> bool {
    if a.total() != b.total() {
        return false;
    }
    let av = a.nonzero();
    let bv = b.nonzero();
    let mut prefix = 0u64;
    for (k, &ai) in av.iter().enumerate() {
        prefix += ai;
        let cap: u64 = bv.iter().map(|&bj| bj.min(k as u64 + 1)).sum();
        if prefix > cap {
            return false;
        }
    }
    true
}

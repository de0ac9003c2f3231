//! Closed-form extremal and comparison shapes: complete bipartite
//! rectangles, the near-complete `B(n,m,y)`, the restricted-family
//! maximizers with their asymptotic estimates, the hook-shape comparison
//! pair, and the max-entropy (nearly-regular / balanced bipartite)
//! witnesses.

use crate::error::{Error, Result};
use crate::kernel::{f, DegreeSequence};
use crate::tableau::{BipartiteDegreePair, YoungTableau};

/// Rectangle with `y` rows of length `q`; `h = qy·ln(qy)`.
pub fn complete_bipartite(q: u64, y: u64) -> Result<YoungTableau> {
    if q == 0 || y == 0 {
        return Err(Error::Domain("complete_bipartite requires q, y >= 1".into()));
    }
    YoungTableau::new(vec![q; y as usize])
}

/// `K_{q,y}` plus one extra vertex joined to `r = m mod y` vertices of the
/// `y`-side; the candidate minimum-entropy shape for bounded order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BnmyShape {
    /// Order budget; `None` means unbounded (size-only problems).
    pub n: Option<u64>,
    pub m: u64,
    pub y: u64,
    /// `q = ⌊m/y⌋`.
    pub q: u64,
    /// `r = m - qy`; zero iff the shape degenerates to `K_{q,y}`.
    pub r: u64,
    /// `x = ⌈m/y⌉`.
    pub x: u64,
}

impl BnmyShape {
    /// `r` rows of length `q+1` followed by `y-r` rows of length `q`.
    pub fn tableau(&self) -> YoungTableau {
        let mut rows = vec![self.q + 1; self.r as usize];
        rows.extend(std::iter::repeat_n(self.q, (self.y - self.r) as usize));
        YoungTableau::new(rows).expect("BnmyShape rows are valid by construction")
    }

    /// Vertices actually used: `y + q`, plus the extra vertex when `r > 0`.
    pub fn order_used(&self) -> u64 {
        self.y + self.q + u64::from(self.r > 0)
    }

    /// Whether the "additional vertex" is present at all.
    pub fn has_extra_vertex(&self) -> bool {
        self.r > 0
    }

    /// `h(B(n,m,y))` from the grouped degree counts.
    pub fn h(&self) -> f64 {
        let BnmyShape { q, r, y, .. } = *self;
        (r as f64) * f(q + 1) + ((y - r) as f64) * f(q) + (q as f64) * f(y) + f(r)
    }
}

/// Builds `B(n,m,y)`; `n = None` lifts the order constraint.
pub fn b_nmy(n: Option<u64>, m: u64, y: u64) -> Result<BnmyShape> {
    if m == 0 {
        return Err(Error::Domain("b_nmy requires m >= 1".into()));
    }
    if y == 0 || y * y > m {
        return Err(Error::Domain(format!("y = {y} outside 1 <= y <= floor(sqrt({m}))")));
    }
    let q = m / y;
    let r = m - q * y;
    let x = q + u64::from(r > 0);
    let shape = BnmyShape { n, m, y, q, r, x };
    if let Some(bound) = n {
        if shape.order_used() > bound {
            return Err(Error::Infeasible(format!(
                "B(n,{m},{y}) needs {} vertices, budget is {bound}",
                shape.order_used()
            )));
        }
    }
    Ok(shape)
}

/// The maximizer over Young tableaux with `xy - r` cells inside the
/// `[x]×[y]` box: a full box with the last cell of the bottom `r` rows
/// removed.
pub fn prop31_maximizer(x: u64, y: u64, r: u64) -> Result<YoungTableau> {
    if !(x > y && y > r && r > 0) {
        return Err(Error::Domain(format!("prop31 requires x > y > r > 0, got ({x},{y},{r})")));
    }
    let mut rows = vec![x; (y - r) as usize];
    rows.extend(std::iter::repeat_n(x - 1, r as usize));
    YoungTableau::new(rows)
}

/// Asymptotic estimate `m·ln m - r` for the shape above.
pub fn prop31_estimate(x: u64, y: u64, r: u64) -> f64 {
    let m = (x * y - r) as f64;
    m * m.ln() - r as f64
}

/// The maximizer over Young tableaux with `qy + r` cells containing the
/// `[q]×[y]` box: `r` rows of length `q+1` on top of `y-r` rows of `q`.
pub fn prop32_maximizer(q: u64, y: u64, r: u64) -> Result<YoungTableau> {
    if !(q >= y && y > r && r > 0) {
        return Err(Error::Domain(format!("prop32 requires q >= y > r > 0, got ({q},{y},{r})")));
    }
    let mut rows = vec![q + 1; r as usize];
    rows.extend(std::iter::repeat_n(q, (y - r) as usize));
    YoungTableau::new(rows)
}

/// Asymptotic estimate `m·ln m - r·ln(y/r)` for the shape above.
pub fn prop32_estimate(q: u64, y: u64, r: u64) -> f64 {
    let m = (q * y + r) as f64;
    m * m.ln() - (r as f64) * ((y as f64) / (r as f64)).ln()
}

/// The two equal-size hook comparison shapes: the full box minus an
/// r-by-1 strip and an (s-1)-cell corner column, against the narrower
/// near-box with `r'` trimmed cells. Always `h(T) < h(T')`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HookShapes {
    pub x: u64,
    pub y: u64,
    pub r: u64,
    pub s: u64,
    /// Column count removed on the right of `T'`: `r + s - 1 = wy + r'`.
    pub w: u64,
    pub r_prime: u64,
    pub t: YoungTableau,
    pub t_prime: YoungTableau,
}

impl HookShapes {
    pub fn cell_count(&self) -> u64 {
        self.x * self.y - self.r - self.s + 1
    }
}

/// Builds the comparison pair for `m = xy - r - s + 1`, requiring
/// `x > y ≥ 2`, `1 ≤ r ≤ x - y`, `1 ≤ s < y`, and `r + s - 1 ≥ y`
/// (so that `w ≥ 1`; smaller `r + s` is outside the hypothesis).
pub fn hook_shapes(x: u64, y: u64, r: u64, s: u64) -> Result<HookShapes> {
    if !(x > y && y >= 2) {
        return Err(Error::Domain(format!("hook_shapes requires x > y >= 2, got ({x},{y})")));
    }
    if !(r >= 1 && r <= x - y) {
        return Err(Error::Domain(format!("hook_shapes requires 1 <= r <= x-y, got r = {r}")));
    }
    if !(s >= 1 && s < y) {
        return Err(Error::Domain(format!("hook_shapes requires 1 <= s < y, got s = {s}")));
    }
    let excess = r + s - 1;
    let w = excess / y;
    let r_prime = excess % y;
    if w == 0 {
        return Err(Error::Infeasible(format!(
            "r + s - 1 = {excess} < y = {y} forces w = 0, outside the hypothesis"
        )));
    }

    // T: (y-s) rows of x, (s-1) rows of x-1, one row of x-r.
    let mut t_rows = vec![x; (y - s) as usize];
    t_rows.extend(std::iter::repeat_n(x - 1, (s - 1) as usize));
    t_rows.push(x - r);
    let t = YoungTableau::new(t_rows)?;

    // T': (y - r') rows of x-w, r' rows of x-w-1.
    let mut tp_rows = vec![x - w; (y - r_prime) as usize];
    tp_rows.extend(std::iter::repeat_n(x - w - 1, r_prime as usize));
    let t_prime = YoungTableau::new(tp_rows)?;

    debug_assert_eq!(t.cell_count(), t_prime.cell_count());
    Ok(HookShapes { x, y, r, s, w, r_prime, t, t_prime })
}

/// Degree sequence with spread at most one and sum `2m`, together with a
/// simple witness graph assembled from the 1-factor / 2-factor
/// decomposition of `K_n`.
pub fn nearly_regular(n: u64, m: u64) -> Result<(DegreeSequence, Vec<(usize, usize)>)> {
    if n == 0 {
        return Err(Error::Domain("nearly_regular requires n >= 1".into()));
    }
    if m > n * (n - 1) / 2 {
        return Err(Error::Infeasible(format!("m = {m} exceeds capacity n(n-1)/2 = {}", n * (n - 1) / 2)));
    }
    let n = n as usize;
    let m = m as usize;
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(m);

    if n.is_multiple_of(2) {
        // Round-robin 1-factorization; a truncated round is a matching.
        let rounds = n - 1;
        'outer_even: for round in 0..rounds {
            let pivot = n - 1;
            let mate = round;
            if edges.len() == m {
                break;
            }
            edges.push((pivot.min(mate), pivot.max(mate)));
            for k in 1..n / 2 {
                if edges.len() == m {
                    break 'outer_even;
                }
                let a = (round + k) % (n - 1);
                let b = (round + n - 1 - k) % (n - 1);
                edges.push((a.min(b), a.max(b)));
            }
        }
    } else {
        // 2-factor ell: edges {i, i+ell mod n}. The ell = 1 factor (an
        // n-cycle) is reserved for the truncated part.
        let k = (n - 1) / 2;
        let full = m / n;
        let b = m % n;
        let full_factors: Vec<usize> = if b == 0 { (1..=full).collect() } else { (2..=full + 1).collect() };
        debug_assert!(full_factors.iter().all(|&ell| ell <= k));
        for &ell in &full_factors {
            for i in 0..n {
                let j = (i + ell) % n;
                if i < j {
                    edges.push((i, j));
                } else {
                    edges.push((j, i));
                }
            }
        }
        if b > 0 {
            if b <= n / 2 {
                // A matching inside the cycle.
                for t in 0..b {
                    edges.push((2 * t, 2 * t + 1));
                }
            } else {
                // The cycle minus a matching of size n - b.
                let removed: Vec<(usize, usize)> = (0..n - b).map(|t| (2 * t, 2 * t + 1)).collect();
                for i in 0..n {
                    let j = (i + 1) % n;
                    let e = (i.min(j), i.max(j));
                    if !removed.contains(&e) {
                        edges.push(e);
                    }
                }
            }
        }
    }

    debug_assert_eq!(edges.len(), m);
    let mut deg = vec![0u64; n];
    for &(a, b) in &edges {
        deg[a] += 1;
        deg[b] += 1;
    }
    Ok((DegreeSequence::new(deg), edges))
}

/// Maximum-entropy bipartite graph of order `n` and size `m`: partition
/// sizes `⌈n/2⌉` and `⌊n/2⌋` with degrees inside each class differing by
/// at most one. Edges are `(u_index, v_index)` pairs.
pub fn balanced_bipartite_max(n: u64, m: u64) -> Result<(BipartiteDegreePair, Vec<(usize, usize)>)> {
    if n < 2 {
        return Err(Error::Domain("balanced_bipartite_max requires n >= 2".into()));
    }
    let u = n.div_ceil(2) as usize;
    let v = (n / 2) as usize;
    if m > (u * v) as u64 {
        return Err(Error::Infeasible(format!("m = {m} exceeds bipartite capacity {}", u * v)));
    }
    let m = m as usize;
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(m);
    if u == v {
        // Perfect matchings of K_{u,u}, one at a time.
        'outer: for ell in 0..u {
            for i in 0..u {
                if edges.len() == m {
                    break 'outer;
                }
                edges.push((i, (i + ell) % u));
            }
        }
    } else {
        // u and v are coprime (consecutive), so k mod u / k mod v never
        // repeats within uv edges.
        for k in 1..=m {
            edges.push((k % u, k % v));
        }
    }

    let mut du = vec![0u64; u];
    let mut dv = vec![0u64; v];
    for &(i, j) in &edges {
        du[i] += 1;
        dv[j] += 1;
    }
    let pair = BipartiteDegreePair::new(DegreeSequence::new(du), DegreeSequence::new(dv))?;
    Ok((pair, edges))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(rows: &[u64]) -> YoungTableau {
        YoungTableau::new(rows.to_vec()).unwrap()
    }

    #[test]
    fn complete_bipartite_examples() {
        assert_eq!(complete_bipartite(1, 1).unwrap(), t(&[1]));
        assert_eq!(complete_bipartite(1, 1).unwrap().h(), 0.0);
        let k32 = complete_bipartite(3, 2).unwrap();
        assert_eq!(k32, t(&[3, 3]));
        assert!((k32.h() - 10.75055681536833).abs() < 1e-12);
        // Three rectangles share h = 12 ln 12.
        let h12 = 12.0f64 * 12.0f64.ln();
        for (q, y) in [(12, 1), (6, 2), (4, 3)] {
            assert!((complete_bipartite(q, y).unwrap().h() - h12).abs() < 1e-9);
        }
    }

    #[test]
    fn b_nmy_examples() {
        let b = b_nmy(Some(10), 22, 4).unwrap();
        assert_eq!(b.tableau(), t(&[6, 6, 5, 5]));
        assert_eq!((b.q, b.r, b.x), (5, 2, 6));
        assert!((b.h() - 66.70767433859537).abs() < 1e-9);
        assert_eq!(b.order_used(), 10);

        // Divisible case degenerates to the rectangle.
        let rect = b_nmy(None, 15, 3).unwrap();
        assert_eq!(rect.r, 0);
        assert!(!rect.has_extra_vertex());
        assert_eq!(rect.tableau(), t(&[5, 5, 5]));
        assert!((rect.h() - 15.0 * 15.0f64.ln()).abs() < 1e-9);

        let small = b_nmy(Some(5), 5, 2).unwrap();
        assert_eq!(small.tableau(), t(&[3, 2]));
        assert_eq!((small.q, small.r), (2, 1));
        assert!((small.h() - 7.4547199493640015).abs() < 1e-12);

        assert!(matches!(b_nmy(Some(10), 22, 5), Err(Error::Domain(_))));
        assert!(matches!(b_nmy(Some(8), 22, 4), Err(Error::Infeasible(_))));
    }

    #[test]
    fn prop31_examples() {
        assert_eq!(prop31_maximizer(6, 4, 2).unwrap(), t(&[6, 6, 5, 5]));
        let y = 7u64;
        let near = prop31_maximizer(y + 1, y, 1).unwrap();
        assert_eq!(near.cell_count(), y * y + y - 1);
        assert!((prop31_estimate(6, 4, 2) - 66.00293397388296).abs() < 1e-9);
        assert!(prop31_maximizer(4, 4, 2).is_err());
    }

    #[test]
    fn prop32_examples() {
        assert_eq!(prop32_maximizer(5, 4, 2).unwrap(), t(&[6, 6, 5, 5]));
        assert!((prop32_estimate(5, 4, 2) - 66.61663961276307).abs() < 1e-9);
        assert!(prop32_maximizer(3, 4, 2).is_err());
        // Agreement with b_nmy whenever both are defined.
        for (q, y, r) in [(5u64, 4u64, 2u64), (9, 4, 3), (7, 7, 6)] {
            let m = q * y + r;
            assert_eq!(prop32_maximizer(q, y, r).unwrap(), b_nmy(None, m, y).unwrap().tableau());
        }
    }

    #[test]
    fn hook_examples() {
        let hook = hook_shapes(5, 3, 2, 2).unwrap();
        assert_eq!((hook.w, hook.r_prime), (1, 0));
        assert_eq!(hook.t, t(&[5, 4, 3]));
        assert_eq!(hook.t_prime, t(&[4, 4, 4]));
        assert!((hook.t.h() - 28.162008831787272).abs() < 1e-9);
        assert!((hook.t_prime.h() - 12.0 * 12.0f64.ln()).abs() < 1e-9);
        assert!(hook.t.h() < hook.t_prime.h());

        // Hypothesis boundary: r + s - 1 < y forces w = 0.
        assert!(matches!(hook_shapes(4, 3, 1, 1), Err(Error::Infeasible(_))));

        let hook = hook_shapes(10, 4, 6, 3).unwrap();
        assert_eq!((hook.w, hook.r_prime), (2, 0));
        assert!(hook.t.h() < hook.t_prime.h());
    }

    fn check_simple_witness(n: usize, edges: &[(usize, usize)], deg: &DegreeSequence) {
        let mut seen = std::collections::HashSet::new();
        let mut count = vec![0u64; n];
        for &(a, b) in edges {
            assert!(a < b && b < n, "edge ({a},{b}) malformed");
            assert!(seen.insert((a, b)), "duplicate edge ({a},{b})");
            count[a] += 1;
            count[b] += 1;
        }
        assert_eq!(&DegreeSequence::new(count), deg);
    }

    #[test]
    fn nearly_regular_examples() {
        let (d, e) = nearly_regular(5, 7).unwrap();
        assert_eq!(d.degrees(), &[3, 3, 3, 3, 2]);
        check_simple_witness(5, &e, &d);

        let (d, e) = nearly_regular(4, 6).unwrap();
        assert_eq!(d.degrees(), &[3, 3, 3, 3]);
        check_simple_witness(4, &e, &d);

        let (d, e) = nearly_regular(7, 9).unwrap();
        assert_eq!(d.degrees(), &[3, 3, 3, 3, 2, 2, 2]);
        check_simple_witness(7, &e, &d);

        assert!(matches!(nearly_regular(4, 7), Err(Error::Infeasible(_))));
    }

    #[test]
    fn nearly_regular_witness_all_small_cases() {
        for n in 1..=9u64 {
            for m in 0..=n * (n - 1) / 2 {
                let (d, e) = nearly_regular(n, m).unwrap();
                check_simple_witness(n as usize, &e, &d);
                let max = d.degrees().first().copied().unwrap_or(0);
                let min = d.degrees().last().copied().unwrap_or(0);
                assert!(max - min <= 1, "spread > 1 at n={n} m={m}: {d}");
                assert_eq!(d.total(), 2 * m);
            }
        }
    }

    #[test]
    fn balanced_bipartite_examples() {
        let (pair, edges) = balanced_bipartite_max(8, 9).unwrap();
        assert_eq!(pair.u_degrees().degrees(), &[3, 2, 2, 2]);
        assert_eq!(pair.v_degrees().degrees(), &[3, 2, 2, 2]);
        assert_eq!(edges.len(), 9);

        let (pair, _) = balanced_bipartite_max(8, 16).unwrap();
        assert_eq!(pair.u_degrees().degrees(), &[4, 4, 4, 4]);
        assert_eq!(pair.v_degrees().degrees(), &[4, 4, 4, 4]);

        let (pair, edges) = balanced_bipartite_max(9, 9).unwrap();
        assert_eq!(pair.u_degrees().len(), 5);
        assert_eq!(pair.v_degrees().len(), 4);
        assert_eq!(edges.len(), 9);

        assert!(matches!(balanced_bipartite_max(8, 17), Err(Error::Infeasible(_))));
    }

    #[test]
    fn balanced_bipartite_spread_small_cases() {
        for n in 2..=11u64 {
            let u = n.div_ceil(2);
            let v = n / 2;
            for m in 1..=u * v {
                let (pair, edges) = balanced_bipartite_max(n, m).unwrap();
                let mut seen = std::collections::HashSet::new();
                for &e in &edges {
                    assert!(seen.insert(e), "duplicate edge at n={n} m={m}");
                }
                assert_eq!(edges.len() as u64, m);
                for class in [pair.u_degrees(), pair.v_degrees()] {
                    let ds = class.degrees();
                    assert!(ds[0] - ds[ds.len() - 1] <= 1, "class spread > 1 at n={n} m={m}");
                }
            }
        }
    }
}

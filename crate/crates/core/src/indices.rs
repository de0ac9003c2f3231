//! Degree-based topological indices `TI_g(G) = Σ_{uv∈E} g(deg u, deg v)`
//! evaluated on Young tableaux, with a registry of the built-in `g`
//! functions and the theorem-backed size-only maximizer.

use crate::error::{Error, Result};
use crate::search;
use crate::tableau::YoungTableau;

/// A symmetric two-argument edge weight with declared shape flags.
///
/// Flags are declared by the registrant and numerically spot-checked at
/// registration; `maximize_ti_over_size` refuses unflagged functions
/// rather than silently falling back to brute force.
#[derive(Debug, Clone)]
pub struct IndexFunction {
    pub id: &'static str,
    pub eval: fn(u64, u64) -> f64,
    /// `g` increasing as a function of the product `ab`.
    pub increasing_in_product: bool,
    /// `g` concave as a function of the product `ab`.
    pub concave_in_product: bool,
}

impl IndexFunction {
    /// Numeric sanity check of symmetry and the declared product flags
    /// on a sampled grid.
    pub fn spot_check(&self) -> Result<()> {
        let grid: Vec<u64> = vec![1, 2, 3, 5, 8, 13, 21, 34];
        for &a in &grid {
            for &b in &grid {
                let lhs = (self.eval)(a, b);
                let rhs = (self.eval)(b, a);
                if (lhs - rhs).abs() > 1e-9 * lhs.abs().max(1.0) {
                    return Err(Error::Contract(format!("{}: g({a},{b}) != g({b},{a})", self.id)));
                }
            }
        }
        if self.increasing_in_product || self.concave_in_product {
            // Sample along products 1·p so the flag is about g(ab).
            let vals: Vec<f64> = (1..=64u64).map(|p| (self.eval)(1, p)).collect();
            if self.increasing_in_product {
                for w in vals.windows(2) {
                    if w[1] < w[0] - 1e-12 {
                        return Err(Error::Contract(format!("{}: not increasing in product", self.id)));
                    }
                }
            }
            if self.concave_in_product {
                for w in vals.windows(3) {
                    if w[0] + w[2] > 2.0 * w[1] + 1e-9 {
                        return Err(Error::Contract(format!("{}: not concave in product", self.id)));
                    }
                }
            }
        }
        Ok(())
    }
}

fn g_log_product(a: u64, b: u64) -> f64 {
    ((a * b) as f64).ln()
}

fn g_zagreb1(a: u64, b: u64) -> f64 {
    (a + b) as f64
}

fn g_zagreb2(a: u64, b: u64) -> f64 {
    (a * b) as f64
}

fn g_reciprocal_randic(a: u64, b: u64) -> f64 {
    ((a * b) as f64).sqrt()
}

fn g_squared_sum(a: u64, b: u64) -> f64 {
    let s = (a + b) as f64;
    s * s
}

/// Registry of built-in index functions, keyed by the identifiers used
/// as CLI flag values.
pub struct Registry {
    entries: Vec<IndexFunction>,
}

impl Registry {
    pub fn get(&self, id: &str) -> Result<&IndexFunction> {
        self.entries
            .iter()
            .find(|e| e.id == id)
            .ok_or_else(|| Error::UnknownIndex(id.into()))
    }

    pub fn ids(&self) -> Vec<&'static str> {
        self.entries.iter().map(|e| e.id).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &IndexFunction> {
        self.entries.iter()
    }
}

/// Builds the registry: entropy kernel `ln(ab)`, second Zagreb `ab`,
/// reciprocal Randić `√(ab)`, first Zagreb `a+b`, squared sum `(a+b)²`.
pub fn builtin_indices() -> Registry {
    let entries = vec![
        IndexFunction {
            id: "entropy",
            eval: g_log_product,
            increasing_in_product: true,
            concave_in_product: true,
        },
        IndexFunction {
            id: "zagreb2",
            eval: g_zagreb2,
            increasing_in_product: true,
            concave_in_product: true,
        },
        IndexFunction {
            id: "rrandic",
            eval: g_reciprocal_randic,
            increasing_in_product: true,
            concave_in_product: true,
        },
        IndexFunction {
            id: "zagreb1",
            eval: g_zagreb1,
            increasing_in_product: false,
            concave_in_product: false,
        },
        IndexFunction {
            id: "sqsum",
            eval: g_squared_sum,
            increasing_in_product: false,
            concave_in_product: false,
        },
    ];
    for e in &entries {
        e.spot_check().expect("built-in index failed its registration spot check");
    }
    Registry { entries }
}

/// `TI_g` of a tableau: sum of `g(column height, row length)` over cells.
pub fn ti_g(t: &YoungTableau, g: &IndexFunction) -> f64 {
    let cols = t.column_heights();
    let mut total = 0.0;
    for &row_len in t.rows() {
        for &col_height in cols.iter().take(row_len as usize) {
            total += (g.eval)(col_height, row_len);
        }
    }
    total
}

/// First Zagreb index `Σ_v deg(v)²`, exactly.
pub fn zagreb1_exact(t: &YoungTableau) -> u128 {
    t.rows().iter().map(|&r| (r as u128) * (r as u128)).sum::<u128>()
        + t.column_heights().iter().map(|&c| (c as u128) * (c as u128)).sum::<u128>()
}

/// Second Zagreb index `Σ_{(i,j)∈T} y_i·x_j`, exactly.
pub fn zagreb2_exact(t: &YoungTableau) -> u128 {
    let cols = t.column_heights();
    let mut total = 0u128;
    for &row_len in t.rows() {
        let col_sum: u128 = cols.iter().take(row_len as usize).map(|&c| c as u128).sum();
        total += col_sum * row_len as u128;
    }
    total
}

/// For `g` increasing and concave in the product, the size-`m` maximizers
/// are exactly the complete bipartite rectangles `q×y` with `qy = m`,
/// `y ≤ q`.
pub fn maximize_ti_over_size(m: u64, g: &IndexFunction) -> Result<Vec<YoungTableau>> {
    if m == 0 {
        return Err(Error::Domain("maximize_ti_over_size requires m >= 1".into()));
    }
    if !(g.increasing_in_product && g.concave_in_product) {
        return Err(Error::Contract(format!(
            "{}: needs increasing_in_product and concave_in_product; use brute force instead",
            g.id
        )));
    }
    let mut rectangles = Vec::new();
    let mut y = 1;
    while y * y <= m {
        if m.is_multiple_of(y) {
            rectangles.push(YoungTableau::new(vec![m / y; y as usize])?);
        }
        y += 1;
    }
    Ok(rectangles)
}

/// Brute-force `TI_g` maximizers over all Young tableaux with `m` cells
/// and `x + y ≤ n` (None = unbounded), available for any `g`.
/// Ties are resolved at float equality within 1e-9 relative tolerance.
pub fn brute_force_ti_maximizers(m: u64, n: Option<u64>, g: &IndexFunction) -> Vec<YoungTableau> {
    let mut best = f64::NEG_INFINITY;
    let mut winners: Vec<(YoungTableau, f64)> = Vec::new();
    for t in search::enumerate_tableaux(m, n) {
        let v = ti_g(&t, g);
        if v > best {
            best = v;
        }
        winners.push((t, v));
    }
    let tol = 1e-9 * best.abs().max(1.0);
    winners.retain(|(_, v)| (best - *v) <= tol);
    winners.into_iter().map(|(t, _)| t).collect()
}

/// A pair `(n, m)` whose first- and second-Zagreb maximizer sets over
/// bipartite graphs differ, with both maximizer sets.
#[derive(Debug, Clone)]
pub struct ZagrebDivergence {
    pub n: u64,
    pub m: u64,
    pub zagreb1_maximizers: Vec<YoungTableau>,
    pub zagreb2_maximizers: Vec<YoungTableau>,
}

/// Searches `(n, m)` with `n ≤ n_max` (and `m ≤ m_max` per instance) for
/// a witness where the two Zagreb maximizer sets differ. Both indices
/// are integer-valued, so maximizer sets are exact.
pub fn find_zagreb_divergence(n_max: u64, m_max: u64) -> Option<ZagrebDivergence> {
    for n in 2..=n_max {
        let cap = (n / 2) * n.div_ceil(2);
        for m in 1..=cap.min(m_max) {
            let tableaux = search::enumerate_tableaux(m, Some(n));
            if tableaux.is_empty() {
                continue;
            }
            let z1_best = tableaux.iter().map(zagreb1_exact).max().unwrap();
            let z2_best = tableaux.iter().map(zagreb2_exact).max().unwrap();
            let z1: Vec<YoungTableau> =
                tableaux.iter().filter(|t| zagreb1_exact(t) == z1_best).cloned().collect();
            let z2: Vec<YoungTableau> =
                tableaux.iter().filter(|t| zagreb2_exact(t) == z2_best).cloned().collect();
            if z1 != z2 {
                return Some(ZagrebDivergence { n, m, zagreb1_maximizers: z1, zagreb2_maximizers: z2 });
            }
        }
    }
    None
}

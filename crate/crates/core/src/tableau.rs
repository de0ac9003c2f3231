//! Young tableaux as the canonical form of bipartite difference graphs.
//!
//! A bipartite graph with both sides sorted by degree corresponds to the
//! cell set `{(i,j) : u_i v_j ∈ E}`; the graph is a difference graph
//! exactly when that set is staircase-shaped, i.e. a Young tableau.
//! Only the row-length sequence is stored; explicit adjacency is
//! materialized solely for the `is_young` / `is_difference_graph` checks.

use crate::error::{Error, Result};
use crate::kernel::{f, DegreeSequence};
use std::str::FromStr;

/// Non-increasing positive row lengths `x_1 ≥ … ≥ x_y ≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct YoungTableau {
    rows: Vec<u64>,
}

impl YoungTableau {
    pub fn new(rows: Vec<u64>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::Domain("tableau must have at least one row".into()));
        }
        if rows.contains(&0) {
            return Err(Error::Domain("row lengths must be positive".into()));
        }
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Domain("row lengths must be non-increasing".into()));
        }
        Ok(YoungTableau { rows })
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    /// Width `x = x_1`.
    pub fn width(&self) -> u64 {
        self.rows[0]
    }

    /// Number of rows `y`.
    pub fn num_rows(&self) -> u64 {
        self.rows.len() as u64
    }

    /// Cell count `m`.
    pub fn cell_count(&self) -> u64 {
        self.rows.iter().sum()
    }

    /// Column heights `y_1 ≥ … ≥ y_x` where `y_i = #{j : x_j ≥ i}`.
    pub fn column_heights(&self) -> Vec<u64> {
        let x = self.width() as usize;
        let mut heights = vec![0u64; x];
        for &r in &self.rows {
            for h in heights.iter_mut().take(r as usize) {
                *h += 1;
            }
        }
        heights
    }

    /// Transpose; swapping the two partition classes. An involution.
    pub fn conjugate(&self) -> YoungTableau {
        YoungTableau { rows: self.column_heights() }
    }

    /// `h` via the degree-sum form `Σ_j f(x_j) + Σ_i f(y_i)`.
    pub fn h(&self) -> f64 {
        self.rows.iter().map(|&r| f(r)).sum::<f64>()
            + self.column_heights().iter().map(|&c| f(c)).sum::<f64>()
    }

    /// Combined degree sequence (rows and column heights together).
    pub fn degrees(&self) -> DegreeSequence {
        let mut d = self.rows.clone();
        d.extend(self.column_heights());
        DegreeSequence::new(d)
    }

    pub fn is_rectangle(&self) -> bool {
        self.rows.iter().all(|&r| r == self.rows[0])
    }

    pub fn contains_cell(&self, col: u64, row: u64) -> bool {
        row >= 1 && row <= self.num_rows() && col >= 1 && col <= self.rows[(row - 1) as usize]
    }
}

impl std::fmt::Display for YoungTableau {
    fn fmt(&self, fm: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.rows.iter().map(|r| r.to_string()).collect();
        write!(fm, "{}", parts.join(","))
    }
}

impl FromStr for YoungTableau {
    type Err = Error;

    /// Parses the CLI literal "x1,x2,…", e.g. "6,6,5,5".
    fn from_str(s: &str) -> Result<Self> {
        let mut rows = Vec::new();
        let mut pos = 0usize;
        for piece in s.split(',') {
            let trimmed = piece.trim();
            let v: u64 = trimmed.parse().map_err(|_| Error::Parse {
                position: pos,
                message: format!("expected a positive integer, found {trimmed:?}"),
            })?;
            rows.push(v);
            pos += piece.len() + 1;
        }
        YoungTableau::new(rows)
    }
}

/// Degree sequences of the two partition classes, with equal sums.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteDegreePair {
    u_degrees: DegreeSequence,
    v_degrees: DegreeSequence,
}

impl BipartiteDegreePair {
    pub fn new(u_degrees: DegreeSequence, v_degrees: DegreeSequence) -> Result<Self> {
        if u_degrees.total() != v_degrees.total() {
            return Err(Error::Inconsistent(format!(
                "class degree sums differ: {} vs {}",
                u_degrees.total(),
                v_degrees.total()
            )));
        }
        let positive_u = u_degrees.nonzero().len() as u64;
        let positive_v = v_degrees.nonzero().len() as u64;
        if u_degrees.degrees().iter().any(|&d| d > positive_v)
            || v_degrees.degrees().iter().any(|&d| d > positive_u)
        {
            return Err(Error::Inconsistent(
                "a degree exceeds the number of positive-degree vertices opposite".into(),
            ));
        }
        Ok(BipartiteDegreePair { u_degrees, v_degrees })
    }

    pub fn u_degrees(&self) -> &DegreeSequence {
        &self.u_degrees
    }

    pub fn v_degrees(&self) -> &DegreeSequence {
        &self.v_degrees
    }

    pub fn size(&self) -> u64 {
        self.u_degrees.total()
    }

    /// Both classes merged into one degree sequence.
    pub fn combined(&self) -> DegreeSequence {
        let mut d = self.u_degrees.degrees().to_vec();
        d.extend_from_slice(self.v_degrees.degrees());
        DegreeSequence::new(d)
    }

    pub fn h(&self) -> f64 {
        self.u_degrees.h() + self.v_degrees.h()
    }
}

/// Explicit bipartite adjacency, `matrix[i][j]` for `u_i v_j`.
#[derive(Debug, Clone)]
pub struct Biadjacency {
    matrix: Vec<Vec<bool>>,
}

impl Biadjacency {
    pub fn from_matrix(matrix: Vec<Vec<bool>>) -> Result<Self> {
        let width = matrix.first().map(|r| r.len()).unwrap_or(0);
        if matrix.iter().any(|r| r.len() != width) {
            return Err(Error::Inconsistent("ragged adjacency matrix".into()));
        }
        Ok(Biadjacency { matrix })
    }

    pub fn from_edges(nu: usize, nv: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut matrix = vec![vec![false; nv]; nu];
        for &(i, j) in edges {
            if i >= nu || j >= nv {
                return Err(Error::Inconsistent(format!("edge ({i},{j}) out of range")));
            }
            if matrix[i][j] {
                return Err(Error::Inconsistent(format!("duplicate edge ({i},{j})")));
            }
            matrix[i][j] = true;
        }
        Ok(Biadjacency { matrix })
    }

    pub fn nu(&self) -> usize {
        self.matrix.len()
    }

    pub fn nv(&self) -> usize {
        self.matrix.first().map(|r| r.len()).unwrap_or(0)
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.matrix[i][j]
    }

    pub fn u_degrees(&self) -> Vec<u64> {
        self.matrix.iter().map(|r| r.iter().filter(|&&b| b).count() as u64).collect()
    }

    pub fn v_degrees(&self) -> Vec<u64> {
        (0..self.nv())
            .map(|j| self.matrix.iter().filter(|r| r[j]).count() as u64)
            .collect()
    }
}

/// True iff no `u1,u2,v1,v2` with `u1v1, u2v2 ∈ E` and `u1v2, u2v1 ∉ E`
/// (the 2×2 switch pattern). Agrees with `is_young` on every input.
pub fn is_difference_graph(adj: &Biadjacency) -> bool {
    let (nu, nv) = (adj.nu(), adj.nv());
    for i1 in 0..nu {
        for i2 in (i1 + 1)..nu {
            for j1 in 0..nv {
                for j2 in (j1 + 1)..nv {
                    let a = adj.has_edge(i1, j1);
                    let b = adj.has_edge(i1, j2);
                    let c = adj.has_edge(i2, j1);
                    let d = adj.has_edge(i2, j2);
                    if (a && d && !b && !c) || (b && c && !a && !d) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// True iff, after sorting both sides by degree descending, the edge set
/// is staircase-shaped: `(i,j) ∈ E` and `i' ≤ i`, `j' ≤ j` imply
/// `(i',j') ∈ E`.
pub fn is_young(pair: &BipartiteDegreePair, adj: &Biadjacency) -> Result<bool> {
    let u_deg = adj.u_degrees();
    let v_deg = adj.v_degrees();
    let mut u_sorted = u_deg.clone();
    let mut v_sorted = v_deg.clone();
    u_sorted.sort_unstable_by(|a, b| b.cmp(a));
    v_sorted.sort_unstable_by(|a, b| b.cmp(a));
    if DegreeSequence::new(u_sorted) != *pair.u_degrees()
        || DegreeSequence::new(v_sorted) != *pair.v_degrees()
    {
        return Err(Error::Inconsistent(
            "adjacency degrees do not match the declared degree pair".into(),
        ));
    }

    let mut u_order: Vec<usize> = (0..adj.nu()).collect();
    let mut v_order: Vec<usize> = (0..adj.nv()).collect();
    u_order.sort_by_key(|&i| std::cmp::Reverse(u_deg[i]));
    v_order.sort_by_key(|&j| std::cmp::Reverse(v_deg[j]));

    for (pi, &i) in u_order.iter().enumerate() {
        for (pj, &j) in v_order.iter().enumerate() {
            if adj.has_edge(i, j) {
                for &i2 in &u_order[..=pi] {
                    for &j2 in &v_order[..=pj] {
                        if !adj.has_edge(i2, j2) {
                            return Ok(false);
                        }
                    }
                }
            }
        }
    }
    Ok(true)
}

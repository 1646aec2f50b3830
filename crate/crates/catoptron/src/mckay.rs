//! Young-diagram combinatorics and McKay quivers.
//!
//! Partitions index the irreducible representations of the symmetric group;
//! the single-block-move rule and loop counts give the McKay quiver of S_n
//! combinatorially, and the class-sum formula gives it from characters.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// A partition: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "partition parts must be weakly decreasing"
        );
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn sum(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition { parts: vec![] };
        }
        let cols = self.parts[0] as usize;
        let parts = (0..cols)
            .map(|c| self.parts.iter().filter(|&&p| p as usize > c).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Number of distinct part sizes.
    pub fn distinct_parts(&self) -> usize {
        let mut d = self.parts.clone();
        d.dedup();
        d.len()
    }

    /// Per-cell arm, foot and hook lengths plus the totals A and F and the
    /// dimension of the corresponding irreducible by the hook length formula.
    pub fn cell_stats(&self) -> CellStats {
        let conj = self.conjugate();
        let mut cells = Vec::new();
        let mut total_arm = 0u64;
        let mut total_foot = 0u64;
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row as usize {
                let arm = row as u64 - j as u64 - 1;
                let foot = conj.parts[j] as u64 - i as u64 - 1;
                cells.push(Cell {
                    row: i,
                    col: j,
                    arm,
                    foot,
                    hook: arm + foot + 1,
                });
                total_arm += arm;
                total_foot += foot;
            }
        }
        let n = self.sum() as u64;
        let mut dim_num: u128 = 1;
        for k in 1..=n as u128 {
            dim_num *= k;
        }
        let hook_prod: u128 = cells.iter().map(|c| c.hook as u128).product();
        CellStats {
            cells,
            total_arm,
            total_foot,
            dim: (dim_num / hook_prod) as u64,
        }
    }

    pub fn dim(&self) -> u64 {
        self.cell_stats().dim
    }

    /// All partitions of n reachable by moving a single cell: remove one
    /// removable cell, add one addable cell at a different position.
    pub fn single_block_moves(&self) -> Vec<Partition> {
        let n = self.sum();
        let mut out = Vec::new();
        for removed in self.remove_one_cell() {
            for added in removed.add_one_cell() {
                if added != *self && added.sum() == n && !out.contains(&added) {
                    out.push(added);
                }
            }
        }
        out.sort_by(|a, b| cmp_revlex(b, a));
        out
    }

    /// All partitions of n-1 obtained by removing one removable cell.
    pub fn remove_one_cell(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..self.parts.len() {
            if i + 1 == self.parts.len() || self.parts[i] > self.parts[i + 1] {
                let mut p = self.parts.clone();
                p[i] -= 1;
                out.push(Partition::new(p));
            }
        }
        out
    }

    /// All partitions of n+1 obtained by adding one addable cell.
    pub fn add_one_cell(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..=self.parts.len() {
            let can = if i == 0 {
                true
            } else {
                i <= self.parts.len() && self.parts[i - 1] > *self.parts.get(i).unwrap_or(&0)
            };
            if can {
                let mut p = self.parts.clone();
                if i == p.len() {
                    p.push(1);
                } else {
                    p[i] += 1;
                }
                out.push(Partition::new(p));
            }
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})",
            self.parts
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

#[derive(Clone, Debug)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
    pub arm: u64,
    pub foot: u64,
    pub hook: u64,
}

#[derive(Clone, Debug)]
pub struct CellStats {
    pub cells: Vec<Cell>,
    pub total_arm: u64,
    pub total_foot: u64,
    pub dim: u64,
}

/// All partitions of n in descending lexicographic order: (n) first,
/// (1,...,1) last.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur: Vec<u32> = Vec::new();
    fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition::new(cur.clone()));
            return;
        }
        let top = rem.min(max);
        for p in (1..=top).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    rec(n, n, &mut cur, &mut out);
    out
}

fn cmp_revlex(a: &Partition, b: &Partition) -> std::cmp::Ordering {
    a.parts.cmp(&b.parts)
}

/// A quiver: labeled vertices, arrow multiplicities between distinct
/// vertices, and loop counts.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Quiver {
    pub vertices: Vec<String>,
    /// (from, to) -> multiplicity, for from != to.
    pub arrows: BTreeMap<(usize, usize), u32>,
    /// vertex -> number of loops.
    pub loops: BTreeMap<usize, u32>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>) -> Self {
        Quiver {
            vertices,
            arrows: BTreeMap::new(),
            loops: BTreeMap::new(),
        }
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn add_arrow(&mut self, from: usize, to: usize, mult: u32) {
        if mult == 0 {
            return;
        }
        if from == to {
            *self.loops.entry(from).or_insert(0) += mult;
        } else {
            *self.arrows.entry((from, to)).or_insert(0) += mult;
        }
    }

    pub fn arrow_mult(&self, from: usize, to: usize) -> u32 {
        if from == to {
            self.loops.get(&from).copied().unwrap_or(0)
        } else {
            self.arrows.get(&(from, to)).copied().unwrap_or(0)
        }
    }

    pub fn total_arrows(&self) -> u32 {
        self.arrows.values().sum()
    }

    pub fn total_loops(&self) -> u32 {
        self.loops.values().sum()
    }

    /// Remove a vertex together with all incident arrows and loops.
    pub fn remove_vertex(&self, label: &str) -> Result<Quiver> {
        let v = self
            .vertex_index(label)
            .ok_or_else(|| Error::InvalidParameter(format!("no vertex '{label}'")))?;
        let mut vertices = self.vertices.clone();
        vertices.remove(v);
        let remap = |i: usize| if i > v { i - 1 } else { i };
        let mut q = Quiver::new(vertices);
        for (&(a, b), &m) in &self.arrows {
            if a != v && b != v {
                q.add_arrow(remap(a), remap(b), m);
            }
        }
        for (&a, &m) in &self.loops {
            if a != v {
                *q.loops.entry(remap(a)).or_insert(0) += m;
            }
        }
        Ok(q)
    }

    /// DOT output with deterministic vertex order; multiplicities as
    /// parallel edges, loops as self-edges.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph quiver {\n");
        for (i, v) in self.vertices.iter().enumerate() {
            s.push_str(&format!("  v{i} [label=\"{v}\"];\n"));
        }
        for (&(a, b), &m) in &self.arrows {
            for _ in 0..m {
                s.push_str(&format!("  v{a} -> v{b};\n"));
            }
        }
        for (&a, &m) in &self.loops {
            for _ in 0..m {
                s.push_str(&format!("  v{a} -> v{a};\n"));
            }
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        let arrows: Vec<serde_json::Value> = self
            .arrows
            .iter()
            .map(|(&(a, b), &m)| {
                serde_json::json!({
                    "from": self.vertices[a],
                    "to": self.vertices[b],
                    "mult": m,
                })
            })
            .collect();
        let loops: BTreeMap<String, u32> = self
            .loops
            .iter()
            .map(|(&v, &m)| (self.vertices[v].clone(), m))
            .collect();
        serde_json::json!({
            "vertices": self.vertices,
            "arrows": arrows,
            "loops": loops,
        })
    }
}

/// The McKay quiver of S_n from the single-block-move rule: an arrow each
/// way between partitions related by moving one cell, and p(lambda) - 1
/// loops at lambda.
pub fn mckay_quiver_sn(n: u32) -> Result<Quiver> {
    if n < 2 {
        return Err(Error::InvalidParameter("mckay_quiver_sn needs n >= 2".into()));
    }
    let parts = partitions_of(n);
    let labels: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
    let mut q = Quiver::new(labels);
    for (i, lam) in parts.iter().enumerate() {
        for tau in lam.single_block_moves() {
            let j = parts.iter().position(|p| *p == tau).unwrap();
            q.add_arrow(i, j, 1);
        }
        let loops = lam.distinct_parts() as u32 - 1;
        if loops > 0 {
            q.add_arrow(i, i, loops);
        }
    }
    Ok(q)
}

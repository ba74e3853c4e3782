//! Exact-distance oracle: explicit graph construction and breadth-first
//! search. Everything the certificate calculus claims is checked against
//! this module at small sizes.

use crate::barriers;
use crate::error::{Error, Result};
use crate::strings::{self, BitString};
use num_bigint::BigUint;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

const UNSEEN: u16 = u16::MAX;

/// The length-`n` graph held explicitly: vertices as packed codes in
/// ascending order plus a compressed adjacency list.
pub struct GraphIndex {
    n: usize,
    codes: Vec<u64>,
    adj_off: Vec<u32>,
    adj: Vec<u32>,
}

fn pack(bits: &[u8]) -> u64 {
    // Column 1 (leftmost) is the most significant bit, so numeric order on
    // codes equals lexicographic order on strings.
    let mut code = 0u64;
    for &b in bits {
        code = (code << 1) | b as u64;
    }
    code
}

fn unpack(code: u64, n: usize) -> BitString {
    let bits: Vec<u8> = (0..n)
        .map(|i| ((code >> (n - 1 - i)) & 1) as u8)
        .collect();
    BitString::from_bits(bits)
}

impl GraphIndex {
    /// Builds the length-`n` graph. Errors if the vertex count exceeds the
    /// budget (`FIBRUN_MAX_VERTICES`, default 2,000,000) and checks
    /// connectivity defensively.
    pub fn build(n: usize) -> Result<GraphIndex> {
        if n > 62 {
            // Packing uses a u64; the vertex budget makes anything close to
            // this unreachable anyway.
            return Err(Error::OutOfRange {
                n: n as u64,
                lo: 0,
                hi: 62,
            });
        }
        let count = strings::count_vertices(n);
        let budget = strings::vertex_budget();
        if count > BigUint::from(budget) {
            return Err(Error::BudgetExceeded {
                needed: count.to_string(),
                budget,
            });
        }

        let mut codes = Vec::new();
        strings::for_each_vertex(n, |bits| codes.push(pack(bits)));
        debug_assert!(codes.windows(2).all(|w| w[0] < w[1]));

        // Adjacency: flip each column, keep flips that land in the vertex
        // set; sort each row for a deterministic layout.
        let v = codes.len();
        let rows: Vec<Vec<u32>> = (0..v)
            .into_par_iter()
            .map(|i| {
                let code = codes[i];
                let mut row = Vec::new();
                for col in 1..=n {
                    let cand = code ^ (1u64 << (n - col));
                    if let Ok(j) = codes.binary_search(&cand) {
                        row.push(j as u32);
                    }
                }
                row.sort_unstable();
                row
            })
            .collect();

        let mut adj_off = Vec::with_capacity(v + 1);
        let mut adj = Vec::new();
        adj_off.push(0u32);
        for row in &rows {
            adj.extend_from_slice(row);
            adj_off.push(adj.len() as u32);
        }

        let g = GraphIndex {
            n,
            codes,
            adj_off,
            adj,
        };
        let reached = g.bfs(0).iter().filter(|&&d| d != UNSEEN).count();
        if reached != v {
            return Err(Error::Disconnected { reached, total: v });
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.codes.len()
    }

    pub fn vertex(&self, idx: usize) -> BitString {
        unpack(self.codes[idx], self.n)
    }

    /// Index of a vertex string (validates it first).
    pub fn index_of(&self, s: &BitString) -> Result<usize> {
        strings::check_vertex(s, self.n)?;
        self.codes
            .binary_search(&pack(s.bits()))
            .map_err(|_| Error::VertexNotFound {
                vertex: s.to_string(),
                n: self.n,
            })
    }

    fn neighbors(&self, idx: usize) -> &[u32] {
        &self.adj[self.adj_off[idx] as usize..self.adj_off[idx + 1] as usize]
    }

    /// Breadth-first distances from `src` to every vertex.
    pub fn bfs(&self, src: usize) -> Vec<u16> {
        let mut dist = vec![UNSEEN; self.codes.len()];
        dist[src] = 0;
        let mut frontier = vec![src as u32];
        let mut next = Vec::new();
        let mut d = 0u16;
        while !frontier.is_empty() {
            d += 1;
            for &u in &frontier {
                for &w in self.neighbors(u as usize) {
                    if dist[w as usize] == UNSEEN {
                        dist[w as usize] = d;
                        next.push(w);
                    }
                }
            }
            std::mem::swap(&mut frontier, &mut next);
            next.clear();
        }
        dist
    }

    /// Exact distance between two vertex strings.
    pub fn distance_bfs(&self, u: &BitString, v: &BitString) -> Result<usize> {
        let ui = self.index_of(u)?;
        let vi = self.index_of(v)?;
        Ok(self.bfs(ui)[vi] as usize)
    }

    /// Eccentricity of a vertex with every farthest vertex listed in
    /// ascending order.
    pub fn eccentricity(&self, v: &BitString) -> Result<EccentricityReport> {
        let vi = self.index_of(v)?;
        let dist = self.bfs(vi);
        let ecc = dist.iter().copied().max().unwrap_or(0);
        let farthest: Vec<String> = (0..self.codes.len())
            .filter(|&i| dist[i] == ecc)
            .map(|i| self.vertex(i).to_string())
            .collect();
        Ok(EccentricityReport {
            n: self.n,
            vertex: v.to_string(),
            eccentricity: ecc as usize,
            farthest,
        })
    }

    /// Per-source eccentricity and the first farthest target, for all
    /// sources, computed in parallel with a deterministic layout.
    fn all_eccentricities(&self) -> Vec<(u16, u32)> {
        (0..self.codes.len())
            .into_par_iter()
            .map(|src| {
                let dist = self.bfs(src);
                let mut ecc = 0u16;
                let mut arg = src as u32;
                for (i, &d) in dist.iter().enumerate() {
                    if d != UNSEEN && d > ecc {
                        ecc = d;
                        arg = i as u32;
                    }
                }
                (ecc, arg)
            })
            .collect()
    }

    /// Exact diameter with a witness pair (first in source order, then in
    /// target order — deterministic regardless of thread count).
    pub fn diameter_exact(&self) -> (usize, (BitString, BitString)) {
        let eccs = self.all_eccentricities();
        let mut best = (0u16, 0u32, 0u32);
        for (src, &(ecc, arg)) in eccs.iter().enumerate() {
            if ecc > best.0 {
                best = (ecc, src as u32, arg);
            }
        }
        (
            best.0 as usize,
            (self.vertex(best.1 as usize), self.vertex(best.2 as usize)),
        )
    }

    /// Exact radius and the number of center vertices attaining it.
    pub fn radius_exact(&self) -> (usize, usize) {
        let eccs = self.all_eccentricities();
        let radius = eccs.iter().map(|&(e, _)| e).min().unwrap_or(0);
        let center = eccs.iter().filter(|&&(e, _)| e == radius).count();
        (radius as usize, center)
    }

    /// Compares a distance formula against breadth-first search over vertex
    /// pairs, either exhaustively or on a seeded random sample. Mismatches
    /// are collected (never patched); pairs the certificate calculus
    /// declines (overlapping barrier windows) are counted separately as
    /// refusals.
    pub fn all_pairs_check(&self, formula: FormulaKind, mode: CheckMode) -> CheckReport {
        match mode {
            CheckMode::Exhaustive => self.check_exhaustive(formula),
            CheckMode::Sampled { pairs, seed } => self.check_sampled(formula, pairs, seed),
        }
    }

    fn apply_formula(
        &self,
        formula: FormulaKind,
        u: &BitString,
        v: &BitString,
    ) -> std::result::Result<usize, ()> {
        match formula {
            FormulaKind::Hamming => Ok(strings::hamming(u, v).expect("equal lengths")),
            FormulaKind::Certified => match barriers::distance_certified(u, v) {
                Ok(cert) => Ok(cert.certified_distance),
                Err(Error::OverlappingBarriers { .. }) => Err(()),
                Err(e) => panic!("unexpected certificate error on vertex pair: {e}"),
            },
        }
    }

    fn check_exhaustive(&self, formula: FormulaKind) -> CheckReport {
        let v = self.codes.len();
        let per_source: Vec<(Vec<Mismatch>, u64, u64)> = (0..v)
            .into_par_iter()
            .map(|i| {
                let dist = self.bfs(i);
                let u = self.vertex(i);
                let mut mism = Vec::new();
                let mut checked = 0u64;
                let mut refusals = 0u64;
                for j in (i + 1)..v {
                    let w = self.vertex(j);
                    checked += 1;
                    match self.apply_formula(formula, &u, &w) {
                        Ok(f) => {
                            if f != dist[j] as usize {
                                mism.push(Mismatch {
                                    u: u.to_string(),
                                    v: w.to_string(),
                                    bfs: dist[j] as usize,
                                    formula: f,
                                });
                            }
                        }
                        Err(()) => refusals += 1,
                    }
                }
                (mism, checked, refusals)
            })
            .collect();

        let mut report = CheckReport {
            n: self.n,
            pairs_checked: 0,
            mismatches: Vec::new(),
            seed: None,
            overlap_refusals: 0,
        };
        for (mism, checked, refusals) in per_source {
            report.mismatches.extend(mism);
            report.pairs_checked += checked;
            report.overlap_refusals += refusals;
        }
        report
    }

    fn check_sampled(&self, formula: FormulaKind, pairs: u64, seed: u64) -> CheckReport {
        let v = self.codes.len();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut report = CheckReport {
            n: self.n,
            pairs_checked: 0,
            mismatches: Vec::new(),
            seed: Some(seed),
            overlap_refusals: 0,
        };
        const BATCH: u64 = 1000;
        while report.pairs_checked < pairs {
            let src = rng.gen_range(0..v);
            let dist = self.bfs(src);
            let u = self.vertex(src);
            let batch = BATCH.min(pairs - report.pairs_checked);
            for _ in 0..batch {
                let mut tgt = rng.gen_range(0..v);
                while tgt == src && v > 1 {
                    tgt = rng.gen_range(0..v);
                }
                let w = self.vertex(tgt);
                report.pairs_checked += 1;
                match self.apply_formula(formula, &u, &w) {
                    Ok(f) => {
                        if f != dist[tgt] as usize {
                            report.mismatches.push(Mismatch {
                                u: u.to_string(),
                                v: w.to_string(),
                                bfs: dist[tgt] as usize,
                                formula: f,
                            });
                        }
                    }
                    Err(()) => report.overlap_refusals += 1,
                }
            }
        }
        report
    }
}

/// Which distance formula `all_pairs_check` compares against the oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormulaKind {
    /// Plain Hamming distance (exact only when no barrier separates a pair).
    Hamming,
    /// The barrier-based certified distance.
    Certified,
}

/// Pair coverage for `all_pairs_check`.
#[derive(Debug, Clone, Copy)]
pub enum CheckMode {
    /// Every unordered pair once.
    Exhaustive,
    /// `pairs` pseudo-random ordered pairs from the given seed
    /// (deterministic).
    Sampled { pairs: u64, seed: u64 },
}

/// One disagreement between the oracle and a formula.
#[derive(Debug, Clone, Serialize)]
pub struct Mismatch {
    pub u: String,
    pub v: String,
    pub bfs: usize,
    pub formula: usize,
}

/// Outcome of an oracle-vs-formula comparison.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub n: usize,
    pub pairs_checked: u64,
    pub mismatches: Vec<Mismatch>,
    pub seed: Option<u64>,
    /// Pairs the certificate calculus refused (overlapping barrier
    /// windows); counted, not treated as mismatches.
    pub overlap_refusals: u64,
}

/// Eccentricity of one vertex with all farthest vertices.
#[derive(Debug, Clone, Serialize)]
pub struct EccentricityReport {
    pub n: usize,
    pub vertex: String,
    pub eccentricity: usize,
    pub farthest: Vec<String>,
}

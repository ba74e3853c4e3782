//! Binary strings, run decomposition, the run constraint, vertex
//! enumeration, and vertex counting.
//!
//! A *run* is a maximal block of equal characters. A binary string is
//! *run-constrained* when every maximal run of 1s is immediately followed by
//! a strictly longer run of 0s. The vertices of the graph studied here are
//! the length-`n` strings `r` such that `r` with `"00"` appended is
//! run-constrained; two vertices are adjacent when they differ in exactly
//! one column. Columns are 1-based throughout.

use crate::error::{Error, Result, BUDGET_ENV};
use num_bigint::BigUint;
use std::fmt;
use std::str::FromStr;

/// A binary string stored as one byte (0 or 1) per column.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BitString(Vec<u8>);

impl BitString {
    /// The empty string (the single vertex of the length-0 graph).
    pub fn empty() -> Self {
        BitString(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Bit at 1-based column `col` (panics if out of range).
    pub fn bit(&self, col: usize) -> u8 {
        self.0[col - 1]
    }

    /// All bits, leftmost column first, each 0 or 1.
    pub fn bits(&self) -> &[u8] {
        &self.0
    }

    /// Build from raw bits (each must be 0 or 1).
    pub fn from_bits(bits: Vec<u8>) -> Self {
        debug_assert!(bits.iter().all(|&b| b <= 1));
        BitString(bits)
    }

    /// Build from `(bit, length)` blocks; zero-length blocks are skipped and
    /// adjacent equal-bit blocks merge naturally.
    pub fn from_runs<I: IntoIterator<Item = (u8, usize)>>(runs: I) -> Self {
        let mut bits = Vec::new();
        for (bit, len) in runs {
            debug_assert!(bit <= 1);
            bits.extend(std::iter::repeat(bit).take(len));
        }
        BitString(bits)
    }

    /// Suffix keeping the last `n` columns (errors if the string is shorter).
    pub fn suffix(&self, n: usize) -> Result<BitString> {
        if n > self.len() {
            return Err(Error::LengthMismatch {
                expected: n,
                actual: self.len(),
            });
        }
        Ok(BitString(self.0[self.len() - n..].to_vec()))
    }

    /// Run decomposition, leftmost run first.
    pub fn runs(&self) -> Vec<Run> {
        let mut out = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let bit = self.0[i];
            let start = i + 1;
            let mut j = i + 1;
            while j < self.0.len() && self.0[j] == bit {
                j += 1;
            }
            out.push(Run {
                bit,
                len: j - i,
                start,
            });
            i = j;
        }
        out
    }

    /// True when every maximal run of 1s is immediately followed by a
    /// strictly longer run of 0s (the empty string qualifies).
    pub fn is_run_constrained(&self) -> bool {
        self.run_constraint_offender().is_none()
    }

    /// The first run of 1s violating the run constraint, if any.
    fn run_constraint_offender(&self) -> Option<Run> {
        let runs = self.runs();
        for (i, r) in runs.iter().enumerate() {
            if r.bit == 1 {
                let follower_len = match runs.get(i + 1) {
                    Some(next) => next.len, // next run is 0s by maximality
                    None => 0,              // trailing run of 1s
                };
                if follower_len <= r.len {
                    return Some(*r);
                }
            }
        }
        None
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

impl FromStr for BitString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut bits = Vec::with_capacity(s.len());
        for (i, ch) in s.chars().enumerate() {
            match ch {
                '0' => bits.push(0),
                '1' => bits.push(1),
                _ => return Err(Error::InvalidChar { ch, col: i + 1 }),
            }
        }
        Ok(BitString(bits))
    }
}

/// One maximal run: its bit, length, and 1-based start column.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Run {
    pub bit: u8,
    pub len: usize,
    pub start: usize,
}

impl Run {
    /// 1-based inclusive end column.
    pub fn end(&self) -> usize {
        self.start + self.len - 1
    }
}

/// Checks that `s` has length `n` and is a vertex: `s` with `"00"` appended
/// must be run-constrained.
pub fn check_vertex(s: &BitString, n: usize) -> Result<()> {
    if s.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            actual: s.len(),
        });
    }
    let mut padded = s.0.clone();
    padded.push(0);
    padded.push(0);
    match BitString(padded).run_constraint_offender() {
        None => Ok(()),
        Some(r) => Err(Error::NotRunConstrained {
            run_start: r.start,
            run_end: r.end(),
        }),
    }
}

/// True when `s` has length `n` and `s · "00"` is run-constrained.
pub fn is_vertex(s: &BitString, n: usize) -> bool {
    check_vertex(s, n).is_ok()
}

/// Hamming distance between equal-length strings.
pub fn hamming(a: &BitString, b: &BitString) -> Result<usize> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            expected: a.len(),
            actual: b.len(),
        });
    }
    Ok(a.0.iter().zip(&b.0).filter(|(x, y)| x != y).count())
}

/// Fibonacci numbers with F(1) = F(2) = 1 (and F(0) = 0).
pub fn fibonacci(k: usize) -> BigUint {
    let mut a = BigUint::from(0u32);
    let mut b = BigUint::from(1u32);
    for _ in 0..k {
        let next = &a + &b;
        a = b;
        b = next;
    }
    a
}

/// Number of vertices of the length-`n` graph, computed by a block
/// decomposition independent of Fibonacci identities:
///
/// A run-constrained string factors uniquely as leading 0s followed by
/// blocks `1^a 0^z` with `z > a ≥ 1`. A block of total length `ℓ = a + z`
/// admits `⌊(ℓ−1)/2⌋` choices of `a`. With `g(L)` counting block sequences
/// of total length `L` and `f(L) = Σ_{z≥0} g(L−z)` adding the leading 0s,
/// the vertices of length `n` biject with run-constrained strings of length
/// `n + 2` via appending `"00"`, so the count is `f(n+2)`.
pub fn count_vertices(n: usize) -> BigUint {
    let total = n + 2;
    let zero = BigUint::from(0u32);
    let mut g = vec![zero.clone(); total + 1];
    g[0] = BigUint::from(1u32);
    for len in 1..=total {
        let mut acc = BigUint::from(0u32);
        for block in 3..=len {
            let choices = (block - 1) / 2;
            if choices > 0 {
                acc += &g[len - block] * BigUint::from(choices as u64);
            }
        }
        g[len] = acc;
    }
    let mut f = zero;
    for item in g.iter().take(total + 1) {
        f += item;
    }
    f
}

/// Vertex budget: `FIBRUN_MAX_VERTICES` env var, default 2,000,000.
pub fn vertex_budget() -> u64 {
    std::env::var(BUDGET_ENV)
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(2_000_000)
}

/// Calls `f` once per vertex of the length-`n` graph, in ascending
/// lexicographic order, passing the bits of each vertex. The recursion
/// prunes every branch that cannot be completed to a vertex, so total work
/// is proportional to `n` times the number of vertices.
pub fn for_each_vertex<F: FnMut(&[u8])>(n: usize, mut f: F) {
    let mut buf = vec![0u8; n];
    // State: position `pos` (chars placed), `prev_one` = length of the last
    // completed run of 1s still awaiting a longer run of 0s (0 if none
    // pending), `cur_bit`/`cur_len` = trailing run.
    fn rec<F: FnMut(&[u8])>(
        buf: &mut Vec<u8>,
        n: usize,
        pos: usize,
        cur_bit: u8,
        cur_len: usize,
        f: &mut F,
    ) {
        if pos == n {
            // End of string: appending "00" gives the trailing run of 1s a
            // follower of length exactly 2, and extends a trailing run of 0s
            // by 2; both cases reduce to the checks below.
            let ok = if cur_len == 0 {
                true // empty string
            } else if cur_bit == 1 {
                cur_len < 2 // followed by exactly "00"
            } else {
                true // 0-run feasibility was maintained during placement
            };
            if ok {
                f(buf);
            }
            return;
        }
        let remaining = n - pos - 1; // columns left after placing this one

        // Try '0' first (lexicographic order).
        if cur_bit == 1 {
            // Starting the 0-run that must outgrow the 1-run of length
            // `cur_len`: even appending "00" at the end adds 2, so the run
            // can reach 1 + remaining + 2; prune if that cannot exceed it.
            if 1 + remaining + 2 > cur_len {
                buf[pos] = 0;
                rec(buf, n, pos + 1, 0, 1, f);
            }
        } else {
            buf[pos] = 0;
            rec(buf, n, pos + 1, 0, cur_len + 1, f);
        }

        // Then '1'.
        let can_start_one = if cur_bit == 1 {
            true // extending the current run of 1s
        } else if cur_len == 0 && pos == 0 {
            true // first character
        } else {
            // A new run of 1s closes the current run of 0s; the closed run
            // must already be strictly longer than the run of 1s before it.
            // Track that prior 1-run length via the buffer.
            prev_one_before_zero_run(buf, pos, cur_len)
                .map(|a| cur_len > a)
                .unwrap_or(true)
        };
        if can_start_one {
            let new_len = if cur_bit == 1 { cur_len + 1 } else { 1 };
            // The run of 1s will need a strictly longer run of 0s after it;
            // with the appended "00" the best follower length is
            // (n - pos - 1) + 2. Prune when even that is too short.
            if remaining + 2 > new_len {
                buf[pos] = 1;
                rec(buf, n, pos + 1, 1, new_len, f);
            }
        }
    }

    /// Length of the run of 1s immediately before the current run of 0s
    /// (which has length `zero_len` and ends at `pos - 1`), if any.
    fn prev_one_before_zero_run(buf: &[u8], pos: usize, zero_len: usize) -> Option<usize> {
        let zero_start = pos - zero_len; // index of first 0 of the run
        if zero_start == 0 {
            return None; // leading 0s
        }
        let mut i = zero_start;
        let mut a = 0;
        while i > 0 && buf[i - 1] == 1 {
            a += 1;
            i -= 1;
        }
        Some(a)
    }

    if n == 0 {
        f(&[]);
        return;
    }
    rec(&mut buf, n, 0, 0, 0, &mut f)
}

/// All vertices of the length-`n` graph in ascending lexicographic order.
/// Errors when the count exceeds the vertex budget.
pub fn enumerate_vertices(n: usize) -> Result<Vec<BitString>> {
    let count = count_vertices(n);
    let budget = vertex_budget();
    if count > BigUint::from(budget) {
        return Err(Error::BudgetExceeded {
            needed: count.to_string(),
            budget,
        });
    }
    let mut out = Vec::new();
    for_each_vertex(n, |bits| out.push(BitString(bits.to_vec())));
    Ok(out)
}

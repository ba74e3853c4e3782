//! Validated constructions of vertex pairs with known certified distance.
//!
//! All families start from the same *staircase pair*: the complete pair
//! ending with parameter `q` consists of
//!
//! * `mu(q)`  = runs of lengths `1, 2, …, 2q+2` starting with 1s, capped by
//!   `1^{q+1} 0^q`, and
//! * `nu(q)`  = runs of lengths `1, 2, …, 2q+2` starting with 0s, capped by
//!   `0^{2q+1}`.
//!
//! Both have length `L(q) = 2q² + 7q + 4`, they differ everywhere except on
//! the final `q` columns, and their distance equals their Hamming distance
//! `L(q) − q`. The *h family* takes the length-`n` suffixes of the two
//! (every suffix of a vertex is a vertex), giving a barrier-free pair at
//! Hamming distance `n − q`.
//!
//! Writing `D = L(q) − n`, the cut lands `k` columns into staircase run
//! `j+1` where `T(j) ≤ D < T(j+1)` (`T` = triangular numbers) and
//! `k = T(j+1) − D`; the first complete run has length `K = j + 2`. One
//! suffix starts with `1^k` (the *one side*) and the other with `0^k` (the
//! *zero side*).
//!
//! The non-Hamming families rewrite the leading `k` (and sometimes the next
//! `K`, …) columns so that a single barrier appears while both strings stay
//! vertices; each extra cost unit raises the certified distance by 2 over
//! the Hamming distance the rewrite sacrifices less of:
//!
//! * `nh-bar1` (parameter `b ≥ 2`): a barrier of `b` thickness-1 runs, five
//!   sub-cases by how `k` compares with `3b`; certified `n − q + b − 2`.
//! * `nh-bar2` (geometry-determined `t = k/3`, needs `k = j − 1 ≡ 0 mod
//!   3`): a barrier of `t+1` thickness-1 runs; certified `n − q + t − 1`.
//! * `thick` (parameters `w ≥ 1`, `c ≥ 2`, optional prefix): a chain of `c`
//!   thickness-`w` runs, certified `n − q + w(c−2)`; the prefixed variant
//!   adds a leading thickness-1 run and one more cost unit.
//!
//! Every constructor validates its output before returning it: both strings
//! are vertices, the expected barrier (and nothing else) is detected, and
//! the certificate's distance matches the family formula. Invalid
//! parameters yield an error, never an unvalidated pair.

use crate::barriers::{self, DistanceCertificate};
use crate::bounds;
use crate::error::{Error, Result};
use crate::strings::{self, BitString};
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

/// Construction family tokens.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    H,
    NhBar1,
    NhBar2,
    ThickChain,
}

impl Family {
    pub fn token(&self) -> &'static str {
        match self {
            Family::H => "h",
            Family::NhBar1 => "nh-bar1",
            Family::NhBar2 => "nh-bar2",
            Family::ThickChain => "thick",
        }
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.token())
    }
}

impl Serialize for Family {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.token())
    }
}

/// Parameters requested of a constructor. `n` and `q` are always required;
/// `b` only for `nh-bar1`; `w`, `c`, `prefixed` only for `thick`.
#[derive(Debug, Clone)]
pub struct ConstructionSpec {
    pub family: Family,
    pub n: usize,
    pub q: usize,
    pub b: Option<usize>,
    pub w: Option<usize>,
    pub c: Option<usize>,
    pub prefixed: bool,
}

/// Derived parameters reported with a witness.
#[derive(Debug, Clone, Serialize)]
pub struct WitnessParams {
    pub p: usize,
    pub m: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub w: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prefixed: Option<bool>,
}

impl WitnessParams {
    fn new(p: usize, m: usize) -> Self {
        WitnessParams {
            p,
            m,
            b: None,
            k: None,
            s: None,
            t: None,
            w: None,
            c: None,
            prefixed: None,
        }
    }
}

/// A validated pair with its certificate.
#[derive(Debug, Clone)]
pub struct WitnessPair {
    pub family: Family,
    pub params: WitnessParams,
    pub u: BitString,
    pub v: BitString,
    pub certificate: DistanceCertificate,
    /// Certified distance minus the conjectured diameter `n − p`.
    pub e: i64,
}

impl WitnessPair {
    pub fn n(&self) -> usize {
        self.u.len()
    }

    pub fn hamming(&self) -> usize {
        self.certificate.hamming
    }

    pub fn certified_distance(&self) -> usize {
        self.certificate.certified_distance
    }
}

impl Serialize for WitnessPair {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("WitnessPair", 7)?;
        st.serialize_field("family", &self.family)?;
        st.serialize_field("params", &self.params)?;
        st.serialize_field("u", &self.certificate.u)?;
        st.serialize_field("v", &self.certificate.v)?;
        st.serialize_field("hamming", &self.certificate.hamming)?;
        st.serialize_field("certified_distance", &self.certificate.certified_distance)?;
        st.serialize_field("e", &self.e)?;
        st.end()
    }
}

type RunList = Vec<(u8, usize)>;

fn infeasible(reason: impl Into<String>) -> Error {
    Error::Infeasible {
        reason: reason.into(),
    }
}

/// The complete staircase pair ending with `q`, as run lists with caps.
fn complete_runs(q: usize) -> (RunList, RunList) {
    let mut mu: RunList = (1..=2 * q + 2)
        .map(|r| (if r % 2 == 1 { 1 } else { 0 }, r))
        .collect();
    mu.push((1, q + 1));
    mu.push((0, q));
    let mut nu: RunList = (1..=2 * q + 2)
        .map(|r| (if r % 2 == 0 { 1 } else { 0 }, r))
        .collect();
    nu.push((0, 2 * q + 1));
    (mu, nu)
}

/// The complete staircase pair ending with `q` as strings (`mu`, `nu`).
pub fn complete_pair(q: usize) -> (BitString, BitString) {
    let (mu, nu) = complete_runs(q);
    (BitString::from_runs(mu), BitString::from_runs(nu))
}

/// Cut geometry for a length-`n` suffix of the complete pair ending with
/// `q`: `d` columns are dropped, landing `k` columns into staircase run
/// `j + 1`; the first complete run has length `kk = j + 2`.
#[derive(Debug, Clone, Copy)]
pub struct Cut {
    pub d: usize,
    pub j: usize,
    pub k: usize,
    pub kk: usize,
}

fn cut_of(q: usize, n: usize) -> Result<Cut> {
    let l = bounds::interval_len(q);
    if n > l {
        return Err(infeasible(format!(
            "suffix length {n} exceeds the complete length {l} for q={q}"
        )));
    }
    let d = l - n;
    // Largest j with T(j) ≤ d.
    let mut j = 0usize;
    while bounds::triangular(j + 1) <= d {
        j += 1;
    }
    let k = bounds::triangular(j + 1) - d;
    Ok(Cut {
        d,
        j,
        k,
        kk: j + 2,
    })
}

/// Run lists of the length-`n` suffixes of the staircase pair, split by
/// leading bit: `(one side, zero side, cut)`. Requires the cut to land in
/// the staircase (not the caps), i.e. `j + 2 ≤ 2q + 2`.
fn suffix_runs(q: usize, n: usize) -> Result<(RunList, RunList, Cut)> {
    let cut = cut_of(q, n)?;
    if cut.kk > 2 * q + 2 {
        return Err(infeasible(format!(
            "suffix length {n} cuts into the cap region for q={q} (first full run index {} of {})",
            cut.kk,
            2 * q + 2
        )));
    }
    let build = |starts_with_one_on_odd: bool| -> RunList {
        let bit_of = |r: usize| -> u8 {
            if (r % 2 == 1) == starts_with_one_on_odd {
                1
            } else {
                0
            }
        };
        let mut list: RunList = Vec::new();
        list.push((bit_of(cut.j + 1), cut.k));
        for r in (cut.j + 2)..=(2 * q + 2) {
            list.push((bit_of(r), r));
        }
        if starts_with_one_on_odd {
            list.push((1, q + 1));
            list.push((0, q));
        } else {
            list.push((0, 2 * q + 1));
        }
        list
    };
    let mu_suffix = build(true);
    let nu_suffix = build(false);
    if mu_suffix[0].0 == 1 {
        Ok((mu_suffix, nu_suffix, cut))
    } else {
        Ok((nu_suffix, mu_suffix, cut))
    }
}

/// Shared post-validation: both strings are vertices, the expected barrier
/// shape is found, and the certified distance matches the family formula.
fn validate_pair(
    family: Family,
    params: WitnessParams,
    one: RunList,
    zero: RunList,
    n: usize,
    expected_certified: usize,
    expected_thicknesses: Option<&[usize]>,
) -> Result<WitnessPair> {
    let u = BitString::from_runs(one);
    let v = BitString::from_runs(zero);
    if u.len() != n || v.len() != n {
        return Err(infeasible(format!(
            "assembled lengths {}/{} do not match n={n}",
            u.len(),
            v.len()
        )));
    }
    strings::check_vertex(&u, n)
        .map_err(|e| infeasible(format!("one side is not a vertex: {e}")))?;
    strings::check_vertex(&v, n)
        .map_err(|e| infeasible(format!("zero side is not a vertex: {e}")))?;
    let certificate = barriers::distance_certified(&u, &v)
        .map_err(|e| infeasible(format!("certificate rejected: {e}")))?;
    match expected_thicknesses {
        None => {
            if !certificate.barriers.is_empty() {
                return Err(infeasible(format!(
                    "expected a barrier-free pair, found {} barrier(s)",
                    certificate.barriers.len()
                )));
            }
        }
        Some(th) => {
            if certificate.barriers.len() != 1 {
                return Err(infeasible(format!(
                    "expected exactly one barrier, found {}",
                    certificate.barriers.len()
                )));
            }
            if certificate.barriers[0].thicknesses != th {
                return Err(infeasible(format!(
                    "barrier thicknesses {:?} differ from expected {:?}",
                    certificate.barriers[0].thicknesses, th
                )));
            }
        }
    }
    if certificate.certified_distance != expected_certified {
        return Err(infeasible(format!(
            "certified distance {} differs from the family value {expected_certified}",
            certificate.certified_distance
        )));
    }
    let p = bounds::p_of(n as u64).p as usize;
    let e = expected_certified as i64 - (n as i64 - p as i64);
    Ok(WitnessPair {
        family,
        params,
        u,
        v,
        certificate,
        e,
    })
}

fn base_params(n: usize, q: usize) -> Result<WitnessParams> {
    let p = bounds::p_of(n as u64).p as usize;
    if q < p {
        return Err(infeasible(format!(
            "q={q} lies below the interval parameter p={p} for n={n}"
        )));
    }
    Ok(WitnessParams::new(p, q - p))
}

/// Barrier-free pair at certified distance `n − q`: length-`n` suffixes of
/// the complete staircase pair ending with `q`. Requires `q ≤ n ≤ L(q)`.
pub fn h_type_pair(q: usize, n: usize) -> Result<WitnessPair> {
    let l = bounds::interval_len(q);
    if n > l {
        return Err(infeasible(format!(
            "n={n} exceeds the complete length {l} for q={q}"
        )));
    }
    if n < q {
        return Err(infeasible(format!(
            "n={n} is shorter than the {q} equal tail columns for q={q}"
        )));
    }
    let (mu, nu) = complete_pair(q);
    let u = mu.suffix(n)?;
    let v = nu.suffix(n)?;
    let params = base_params(n, q)?;
    // Reuse the common validator via run lists.
    let one: RunList = u.runs().iter().map(|r| (r.bit, r.len)).collect();
    let zero: RunList = v.runs().iter().map(|r| (r.bit, r.len)).collect();
    validate_pair(Family::H, params, one, zero, n, n - q, None)
}

fn repeat_blocks(block: &[(u8, usize)], times: usize) -> RunList {
    let mut out = Vec::with_capacity(block.len() * times);
    for _ in 0..times {
        out.extend_from_slice(block);
    }
    out
}

/// Alternating runs of the given lengths starting with `start_bit`.
fn alternating(start_bit: u8, lens: &[usize]) -> RunList {
    lens.iter()
        .enumerate()
        .map(|(i, &l)| (if i % 2 == 0 { start_bit } else { 1 - start_bit }, l))
        .collect()
}

/// Single-barrier pair with `b` thickness-1 runs; certified distance
/// `n − q + b − 2`. The rewrite depends on how the cut offset `k` compares
/// with `3b`; infeasible parameter combinations are rejected.
pub fn nh_bar1_pair(spec: &ConstructionSpec) -> Result<WitnessPair> {
    let (n, q) = (spec.n, spec.q);
    let b = spec
        .b
        .ok_or_else(|| infeasible("nh-bar1 requires the barrier parameter b"))?;
    if b < 2 {
        return Err(infeasible(format!("nh-bar1 needs b ≥ 2, got {b}")));
    }
    let mut params = base_params(n, q)?;
    let (one, zero, cut) = suffix_runs(q, n)?;
    let (k, kk) = (cut.k, cut.kk);
    let g = kk as i64 - 1 - 3 * b as i64;
    params.b = Some(b);
    params.k = Some(k);
    params.s = Some((kk - 1) % 3);
    params.t = Some((kk - 1) / 3);

    let block100: [(u8, usize); 2] = [(1, 1), (0, 2)];
    let (one2, zero2): (RunList, RunList) = if k >= 3 * b {
        // Plenty of room: rewrite the zero side's leading 0^k only.
        let mut z = vec![(0, k - 3 * b)];
        z.extend(repeat_blocks(&block100, b));
        z.extend_from_slice(&zero[1..]);
        (one.clone(), z)
    } else if k + 1 == 3 * b {
        if g < 0 {
            return Err(infeasible(format!(
                "nh-bar1 with k={k}=3b−1 needs the full run K={kk} to exceed 3b={}",
                3 * b
            )));
        }
        let mut z: RunList = vec![(1, 2), (0, 3)];
        z.extend(repeat_blocks(&block100, b - 2));
        z.extend_from_slice(&zero[1..]);
        let mut o: RunList = vec![(0, 1), (1, 3 * b - 1), (0, kk - 1)];
        o.extend_from_slice(&one[2..]);
        (o, z)
    } else if k + 3 >= 3 * b {
        // k ∈ {3b−3, 3b−2}: merge the final barrier run into the full run.
        let mut z = vec![(0, k + 3 - 3 * b)];
        z.extend(repeat_blocks(&block100, b - 1));
        z.extend_from_slice(&zero[1..]);
        let mut o: RunList = vec![(1, k + 1), (0, kk - 1)];
        o.extend_from_slice(&one[2..]);
        (o, z)
    } else {
        // k ≤ 3b−4: consume i+1 full runs beyond the cut.
        if g < 0 {
            return Err(infeasible(format!(
                "nh-bar1 with k={k} < 3b−3 needs the full run K={kk} to exceed 3b={}",
                3 * b
            )));
        }
        let g = g as usize;
        let i = (3 * b - 4 - k) / (g + 1);
        if cut.j + 2 + i > 2 * q + 2 {
            return Err(infeasible(format!(
                "nh-bar1 rewrite would consume run {} past the last staircase run {}",
                cut.j + 2 + i,
                2 * q + 2
            )));
        }
        if i == 0 {
            let mut z = repeat_blocks(&block100, b - 1);
            z.push((1, g + k + 4));
            z.extend_from_slice(&zero[2..]);
            let mut o: RunList = vec![(1, 3 * b - 2), (0, g + k + 3)];
            o.extend_from_slice(&one[2..]);
            (o, z)
        } else {
            let long = (i + 1) * g + 2 * i + k + 4;
            let zero_lens: Vec<usize> = (3 * b..3 * b + i).collect();
            let mut z = repeat_blocks(&block100, b - 1);
            let mut z_mid = alternating(1, &zero_lens);
            let long_bit_z = if i % 2 == 1 { 0 } else { 1 };
            z_mid.push((long_bit_z, long));
            z.extend(z_mid);
            z.extend_from_slice(&zero[i + 2..]);

            let mut one_lens: Vec<usize> = vec![3 * b - 1];
            one_lens.extend(3 * b + 1..3 * b + i);
            let mut o: RunList = vec![(1, 3 * b - 2)];
            let mut o_mid = alternating(0, &one_lens);
            let long_bit_o = if i % 2 == 1 { 1 } else { 0 };
            o_mid.push((long_bit_o, long));
            o.extend(o_mid);
            o.extend_from_slice(&one[i + 2..]);
            (o, z)
        }
    };

    let expected = (n - q + b).checked_sub(2).ok_or_else(|| {
        infeasible("degenerate parameters: certified distance would be negative")
    })?;
    let thick = vec![1usize; b];
    validate_pair(
        Family::NhBar1,
        params,
        one2,
        zero2,
        n,
        expected,
        Some(&thick),
    )
}

/// Single-barrier pair with `t + 1` thickness-1 runs at an exactly
/// determined length: requires the cut to satisfy `k = j − 1 ≡ 0 (mod 3)`
/// with `t = k/3 ≥ max(2, m + 2)`. Certified distance `n − q + t − 1`.
pub fn nh_bar2_pair(spec: &ConstructionSpec) -> Result<WitnessPair> {
    let (n, q) = (spec.n, spec.q);
    let mut params = base_params(n, q)?;
    let m = params.m;
    let (one, zero, cut) = suffix_runs(q, n)?;
    let (k, kk) = (cut.k, cut.kk);
    if k + 1 != cut.j || k % 3 != 0 {
        return Err(infeasible(format!(
            "nh-bar2 needs the cut offset k to equal j−1 and be divisible by 3; got k={k}, j={}",
            cut.j
        )));
    }
    let t = k / 3;
    if t < 2 || t < m + 2 {
        return Err(infeasible(format!(
            "nh-bar2 needs t ≥ max(2, m+2); got t={t}, m={m}"
        )));
    }
    params.k = Some(k);
    params.s = Some((kk - 1) % 3);
    params.t = Some(t);

    let mut z = repeat_blocks(&[(1, 1), (0, 2)], t);
    z.extend_from_slice(&zero[1..]);
    let mut o: RunList = vec![(1, 3 * t + 1), (0, 3 * t + 2)];
    o.extend_from_slice(&one[2..]);

    let expected = n - q + t - 1;
    let thick = vec![1usize; t + 1];
    validate_pair(Family::NhBar2, params, o, z, n, expected, Some(&thick))
}

/// Single-barrier pair whose barrier is a chain of thickness-`w` runs;
/// certified distance `n − q + w(c−2)`, or `n − q + w(c−2) + 1` for the
/// prefixed variant (which adds a leading thickness-1 run).
pub fn thick_chain_pair(spec: &ConstructionSpec) -> Result<WitnessPair> {
    let (n, q) = (spec.n, spec.q);
    let w = spec
        .w
        .ok_or_else(|| infeasible("thick requires the thickness parameter w"))?;
    let c = spec
        .c
        .ok_or_else(|| infeasible("thick requires the run-count parameter c"))?;
    if w < 1 || c < 2 {
        return Err(infeasible(format!(
            "thick needs w ≥ 1 and c ≥ 2, got w={w}, c={c}"
        )));
    }
    let mut params = base_params(n, q)?;
    let (one, zero, cut) = suffix_runs(q, n)?;
    let (k, kk) = (cut.k, cut.kk);
    params.k = Some(k);
    params.w = Some(w);
    params.c = Some(c);
    params.prefixed = Some(spec.prefixed);

    let chain_block: [(u8, usize); 2] = [(1, w), (0, w + 1)];
    if !spec.prefixed {
        let body = (2 * w + 1) * (c - 1);
        if k < body {
            return Err(infeasible(format!(
                "uniform chain needs k ≥ (2w+1)(c−1) = {body}, got k={k}"
            )));
        }
        let slack = k - body;
        if kk < k + 2 * w + 1 {
            return Err(infeasible(format!(
                "uniform chain needs K ≥ k + 2w + 1 = {}, got K={kk}",
                k + 2 * w + 1
            )));
        }
        let mut z = vec![(0, slack)];
        z.extend(repeat_blocks(&chain_block, c - 1));
        z.extend_from_slice(&zero[1..]);
        let mut o: RunList = vec![(1, k + w), (0, kk - w)];
        o.extend_from_slice(&one[2..]);
        let expected = n - q + w * (c - 2);
        let thick = vec![w; c];
        validate_pair(Family::ThickChain, params, o, z, n, expected, Some(&thick))
    } else {
        let body = 3 + (2 * w + 1) * (c - 1) + w;
        if k < body + w + 1 {
            return Err(infeasible(format!(
                "prefixed chain needs k ≥ {}, got k={k}",
                body + w + 1
            )));
        }
        let leftover = k - body;
        let mut z: RunList = vec![(1, 1), (0, 2)];
        z.extend(repeat_blocks(&chain_block, c - 1));
        z.push((1, w));
        z.push((0, leftover));
        z.extend_from_slice(&zero[1..]);
        let o = one.clone();
        let expected = n - q + w * (c - 2) + 1;
        let mut thick = vec![1usize];
        thick.extend(std::iter::repeat(w).take(c));
        validate_pair(Family::ThickChain, params, o, z, n, expected, Some(&thick))
    }
}

/// Dispatch on the family token.
pub fn construct(spec: &ConstructionSpec) -> Result<WitnessPair> {
    match spec.family {
        Family::H => h_type_pair(spec.q, spec.n),
        Family::NhBar1 => nh_bar1_pair(spec),
        Family::NhBar2 => nh_bar2_pair(spec),
        Family::ThickChain => thick_chain_pair(spec),
    }
}

/// Extra certified distance of `cert` over the barrier-free base pair:
/// `Σ (C′ − 2M)` over the barriers. Checks the bookkeeping identity
/// `certified(cert) = certified(base) + gain`.
pub fn chain_gain(cert: &DistanceCertificate, base: &WitnessPair) -> Result<i64> {
    if !base.certificate.barriers.is_empty() {
        return Err(infeasible("gain base must be a barrier-free pair"));
    }
    if cert.u.len() != base.n() {
        return Err(infeasible(format!(
            "gain base has length {}, certificate has length {}",
            base.n(),
            cert.u.len()
        )));
    }
    let gain: i64 = cert
        .barriers
        .iter()
        .map(|b| {
            let (cprime, mx, _) = barriers::barrier_cost(b);
            cprime as i64 - 2 * mx as i64
        })
        .sum();
    let expect = base.certificate.certified_distance as i64 + gain;
    if cert.certified_distance as i64 != expect {
        return Err(infeasible(format!(
            "gain identity fails: certified {} ≠ base {} + gain {gain}",
            cert.certified_distance, base.certificate.certified_distance
        )));
    }
    Ok(gain)
}

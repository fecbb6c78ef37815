//! Finite metric spaces with integer distances: remoteness, covering radius,
//! radius and diameter of codes, and the smallest codes of given remoteness.
//!
//! Points are addressed by index `0..size()`. Three concrete spaces are provided:
//! the symmetric group `S_n` under Hamming distance, the Hamming graph `H(n, q)`,
//! and an explicit distance matrix (used for graph path metrics).

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::perm::{all_permutations, factorial, Permutation};

/// Spaces larger than `10!` points are rejected at construction.
pub const MAX_SPACE_SIZE: usize = 3_628_800;

/// Default ceiling on candidate codes evaluated by [`m_exact`].
pub const DEFAULT_SEARCH_BUDGET: u64 = 1_000_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MetricError {
    #[error("code is empty")]
    EmptyCode,
    #[error("point {point} is not in a space of size {size}")]
    PointOutOfRange { point: usize, size: usize },
    #[error("space of {0} points exceeds the supported maximum")]
    SpaceTooLarge(u128),
    #[error("radius {t} exceeds the space radius {max}")]
    RadiusTooLarge { t: usize, max: usize },
    #[error("bounds are undefined at t = 0")]
    ZeroRadius,
    #[error("permutation degree {found} does not match the space degree {expected}")]
    DegreeMismatch { expected: usize, found: usize },
}

pub trait FiniteMetricSpace: Sync {
    fn size(&self) -> usize;

    fn distance(&self, u: usize, v: usize) -> usize;

    /// True when the isometry group is transitive on points. Enables
    /// fixing the first codeword in exhaustive searches.
    fn is_vertex_transitive(&self) -> bool {
        false
    }

    /// Human-readable name of a point, used in reports.
    fn label(&self, v: usize) -> String {
        let mut s = String::new();
        use core::fmt::Write;
        let _ = write!(s, "{v}");
        s
    }

    /// `|B_t(v)|`.
    fn ball_volume(&self, v: usize, t: usize) -> usize {
        (0..self.size()).filter(|&u| self.distance(u, v) <= t).count()
    }

    fn min_ball_volume(&self, t: usize) -> usize {
        if self.is_vertex_transitive() {
            return self.ball_volume(0, t);
        }
        (0..self.size()).map(|v| self.ball_volume(v, t)).min().unwrap_or(0)
    }

    fn max_ball_volume(&self, t: usize) -> usize {
        if self.is_vertex_transitive() {
            return self.ball_volume(0, t);
        }
        (0..self.size()).map(|v| self.ball_volume(v, t)).max().unwrap_or(0)
    }
}

/// `S_n` with Hamming distance; point `i` is the `i`-th permutation in lexicographic order.
pub struct SymmetricSpace {
    n: usize,
    perms: Vec<Permutation>,
}

impl SymmetricSpace {
    pub fn new(n: usize) -> Result<SymmetricSpace, MetricError> {
        if n == 0 || factorial(n) as u128 > MAX_SPACE_SIZE as u128 || n > 20 {
            return Err(MetricError::SpaceTooLarge(if n > 20 { u128::MAX } else { factorial(n) as u128 }));
        }
        Ok(SymmetricSpace {
            n,
            perms: all_permutations(n).collect(),
        })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn point(&self, i: usize) -> &Permutation {
        &self.perms[i]
    }

    pub fn points(&self) -> &[Permutation] {
        &self.perms
    }

    /// Lexicographic rank of a permutation (its point index).
    pub fn index_of(&self, p: &Permutation) -> Result<usize, MetricError> {
        if p.degree() != self.n {
            return Err(MetricError::DegreeMismatch {
                expected: self.n,
                found: p.degree(),
            });
        }
        Ok(lex_rank(p))
    }

    pub fn indices_of(&self, code: &[Permutation]) -> Result<Vec<usize>, MetricError> {
        code.iter().map(|p| self.index_of(p)).collect()
    }
}

pub(crate) fn lex_rank(p: &Permutation) -> usize {
    let n = p.degree();
    let mut rank = 0usize;
    let mut used = 0u64;
    for i in 0..n {
        let v = p.image(i);
        let smaller_unused = (0..v).filter(|&x| used & (1 << x) == 0).count();
        rank += smaller_unused * factorial(n - 1 - i) as usize;
        used |= 1 << v;
    }
    rank
}

impl FiniteMetricSpace for SymmetricSpace {
    fn size(&self) -> usize {
        self.perms.len()
    }

    #[inline]
    fn distance(&self, u: usize, v: usize) -> usize {
        self.perms[u].distance(&self.perms[v])
    }

    fn is_vertex_transitive(&self) -> bool {
        true
    }

    fn label(&self, v: usize) -> String {
        use core::fmt::Write;
        let mut s = String::new();
        let _ = write!(s, "{}", self.perms[v]);
        s
    }

    fn ball_volume(&self, _v: usize, t: usize) -> usize {
        symmetric_ball_volume(self.n, t) as usize
    }
}

/// Derangement numbers `D_0..=D_n`.
pub fn derangements(n: usize) -> Vec<u64> {
    let mut d = vec![1u64; n + 1];
    if n >= 1 {
        d[1] = 0;
    }
    for k in 2..=n {
        d[k] = (k as u64 - 1) * (d[k - 1] + d[k - 2]);
    }
    d
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) as u64 / (i as u64 + 1);
    }
    acc
}

/// Ball volume in `S_n`: `sum_{k <= t} C(n, k) D_k`.
pub fn symmetric_ball_volume(n: usize, t: usize) -> u64 {
    let d = derangements(n);
    (0..=t.min(n)).map(|k| binomial(n, k) * d[k]).sum()
}

/// The Hamming graph `H(n, q)`: words of length `n` over `{0, .., q-1}`,
/// indexed as base-`q` numbers with the first coordinate most significant.
pub struct HammingSpace {
    n: usize,
    q: usize,
    size: usize,
}

impl HammingSpace {
    pub fn new(n: usize, q: usize) -> Result<HammingSpace, MetricError> {
        let size = (q as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
        if n == 0 || q < 2 || size > MAX_SPACE_SIZE as u128 {
            return Err(MetricError::SpaceTooLarge(size));
        }
        Ok(HammingSpace {
            n,
            q,
            size: size as usize,
        })
    }

    pub fn length(&self) -> usize {
        self.n
    }

    pub fn alphabet(&self) -> usize {
        self.q
    }

    pub fn word(&self, mut v: usize) -> Vec<usize> {
        let mut w = vec![0; self.n];
        for slot in w.iter_mut().rev() {
            *slot = v % self.q;
            v /= self.q;
        }
        w
    }

    pub fn index_of(&self, word: &[usize]) -> Result<usize, MetricError> {
        if word.len() != self.n {
            return Err(MetricError::DegreeMismatch {
                expected: self.n,
                found: word.len(),
            });
        }
        let mut v = 0;
        for &a in word {
            if a >= self.q {
                return Err(MetricError::PointOutOfRange {
                    point: a,
                    size: self.q,
                });
            }
            v = v * self.q + a;
        }
        Ok(v)
    }

    /// Passive form of a permutation as a word of `H(n, n)`.
    pub fn passive_word(&self, p: &Permutation) -> Result<usize, MetricError> {
        self.index_of(&p.to_vec())
    }

    /// The constant word `(a, a, .., a)`.
    pub fn constant_word(&self, a: usize) -> usize {
        (0..self.n).fold(0, |acc, _| acc * self.q + a)
    }
}

impl FiniteMetricSpace for HammingSpace {
    fn size(&self) -> usize {
        self.size
    }

    fn distance(&self, mut u: usize, mut v: usize) -> usize {
        let mut d = 0;
        for _ in 0..self.n {
            if u % self.q != v % self.q {
                d += 1;
            }
            u /= self.q;
            v /= self.q;
        }
        d
    }

    fn is_vertex_transitive(&self) -> bool {
        true
    }

    fn label(&self, v: usize) -> String {
        use core::fmt::Write;
        let mut s = String::new();
        for a in self.word(v) {
            let _ = write!(s, "{a}");
            if self.q > 10 {
                s.push('.');
            }
        }
        s
    }

    fn ball_volume(&self, _v: usize, t: usize) -> usize {
        (0..=t.min(self.n))
            .map(|k| binomial(self.n, k) * (self.q as u64 - 1).pow(k as u32))
            .sum::<u64>() as usize
    }
}

/// A space given by its full distance matrix.
pub struct ExplicitSpace {
    dist: Vec<Vec<usize>>,
}

impl ExplicitSpace {
    pub fn from_matrix(dist: Vec<Vec<usize>>) -> ExplicitSpace {
        ExplicitSpace { dist }
    }

    /// Shortest-path metric of a connected simple graph.
    pub fn from_graph(adjacency: &[Vec<usize>]) -> ExplicitSpace {
        let n = adjacency.len();
        let mut dist = vec![vec![usize::MAX; n]; n];
        for (s, row) in dist.iter_mut().enumerate() {
            row[s] = 0;
            let mut queue = alloc::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &adjacency[u] {
                    if row[w] == usize::MAX {
                        row[w] = row[u] + 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        ExplicitSpace { dist }
    }

    /// Star graph with one center (point 0) and `leaves` leaves.
    pub fn star(leaves: usize) -> ExplicitSpace {
        let mut adj = vec![Vec::new(); leaves + 1];
        for leaf in 1..=leaves {
            adj[0].push(leaf);
            adj[leaf].push(0);
        }
        ExplicitSpace::from_graph(&adj)
    }
}

impl FiniteMetricSpace for ExplicitSpace {
    fn size(&self) -> usize {
        self.dist.len()
    }

    fn distance(&self, u: usize, v: usize) -> usize {
        self.dist[u][v]
    }
}

fn check_code<S: FiniteMetricSpace + ?Sized>(space: &S, code: &[usize]) -> Result<(), MetricError> {
    if code.is_empty() {
        return Err(MetricError::EmptyCode);
    }
    if let Some(&p) = code.iter().find(|&&p| p >= space.size()) {
        return Err(MetricError::PointOutOfRange {
            point: p,
            size: space.size(),
        });
    }
    Ok(())
}

/// `max_c d(v, c)`, or `None` as soon as it exceeds `bound`.
#[inline]
fn eccentricity_within<S: FiniteMetricSpace + ?Sized>(
    space: &S,
    v: usize,
    code: &[usize],
    bound: usize,
) -> Option<usize> {
    let mut worst = 0;
    for &c in code {
        let d = space.distance(v, c);
        if d > bound {
            return None;
        }
        worst = worst.max(d);
    }
    Some(worst)
}

/// `min_c d(v, c)`, or `None` as soon as it drops below `bound`.
#[inline]
fn nearest_at_least<S: FiniteMetricSpace + ?Sized>(
    space: &S,
    v: usize,
    code: &[usize],
    bound: usize,
) -> Option<usize> {
    let mut best = usize::MAX;
    for &c in code {
        let d = space.distance(v, c);
        if d < bound {
            return None;
        }
        best = best.min(d);
    }
    Some(best)
}

#[cfg_attr(not(feature = "parallel"), allow(dead_code))]
const SCAN_CHUNK: usize = 2048;

/// Scans `range` for the least `v` minimizing `max_c d(v, c)`; stops early at `floor`.
fn scan_remoteness<S: FiniteMetricSpace + ?Sized>(
    space: &S,
    code: &[usize],
    range: core::ops::Range<usize>,
    floor: usize,
    shared: &dyn Fn() -> usize,
    publish: &dyn Fn(usize),
) -> (usize, usize) {
    let mut best = (usize::MAX, usize::MAX);
    for v in range {
        let bound = best.0.min(shared());
        if let Some(e) = eccentricity_within(space, v, code, bound) {
            if e < best.0 {
                best = (e, v);
                publish(e);
                if e <= floor {
                    break;
                }
            }
        }
    }
    best
}

/// Exact remoteness `min_v max_c d(v, c)` and the least minimizing point.
pub fn remoteness<S: FiniteMetricSpace + ?Sized>(
    space: &S,
    code: &[usize],
) -> Result<(usize, usize), MetricError> {
    check_code(space, code)?;
    // r(C) >= ceil(diam / 2); a point attaining it ends the scan.
    let floor = diameter(space, code)?.div_ceil(2);
    let n = space.size();

    #[cfg(feature = "parallel")]
    {
        use core::sync::atomic::{AtomicUsize, Ordering};
        use rayon::prelude::*;
        let global = AtomicUsize::new(usize::MAX);
        let chunks = n.div_ceil(SCAN_CHUNK);
        let best = (0..chunks)
            .into_par_iter()
            .map(|ci| {
                let range = ci * SCAN_CHUNK..((ci + 1) * SCAN_CHUNK).min(n);
                scan_remoteness(
                    space,
                    code,
                    range,
                    floor,
                    &|| global.load(Ordering::Relaxed),
                    &|e| {
                        global.fetch_min(e, Ordering::Relaxed);
                    },
                )
            })
            .reduce(|| (usize::MAX, usize::MAX), |a, b| a.min(b));
        Ok(best)
    }
    #[cfg(not(feature = "parallel"))]
    {
        Ok(scan_remoteness(space, code, 0..n, floor, &|| usize::MAX, &|_| {}))
    }
}

/// Exact covering radius `max_v min_c d(v, c)`.
pub fn covering_radius<S: FiniteMetricSpace + ?Sized>(
    space: &S,
    code: &[usize],
) -> Result<usize, MetricError> {
    check_code(space, code)?;
    let n = space.size();
    let scan = |range: core::ops::Range<usize>, shared: &dyn Fn() -> usize| {
        let mut best = 0;
        for v in range {
            let bound = best.max(shared()) + 1;
            if let Some(d) = nearest_at_least(space, v, code, bound) {
                best = best.max(d);
            }
        }
        best
    };
    #[cfg(feature = "parallel")]
    {
        use core::sync::atomic::{AtomicUsize, Ordering};
        use rayon::prelude::*;
        let global = AtomicUsize::new(0);
        let chunks = n.div_ceil(SCAN_CHUNK);
        Ok((0..chunks)
            .into_par_iter()
            .map(|ci| {
                let got = scan(ci * SCAN_CHUNK..((ci + 1) * SCAN_CHUNK).min(n), &|| {
                    global.load(Ordering::Relaxed)
                });
                global.fetch_max(got, Ordering::Relaxed);
                got
            })
            .max()
            .unwrap_or(0))
    }
    #[cfg(not(feature = "parallel"))]
    {
        Ok(scan(0..n, &|| 0))
    }
}

/// `min_{c in C} max_{c' in C} d(c, c')`.
pub fn radius<S: FiniteMetricSpace + ?Sized>(space: &S, code: &[usize]) -> Result<usize, MetricError> {
    check_code(space, code)?;
    Ok(code
        .iter()
        .map(|&c| code.iter().map(|&c2| space.distance(c, c2)).max().unwrap_or(0))
        .min()
        .unwrap_or(0))
}

/// `max_{c, c' in C} d(c, c')`.
pub fn diameter<S: FiniteMetricSpace + ?Sized>(space: &S, code: &[usize]) -> Result<usize, MetricError> {
    check_code(space, code)?;
    let mut best = 0;
    for (i, &a) in code.iter().enumerate() {
        for &b in &code[i + 1..] {
            best = best.max(space.distance(a, b));
        }
    }
    Ok(best)
}

/// Number of points within distance `t` of every codeword.
pub fn mu_count<S: FiniteMetricSpace + ?Sized>(
    space: &S,
    code: &[usize],
    t: usize,
) -> Result<usize, MetricError> {
    check_code(space, code)?;
    Ok((0..space.size())
        .filter(|&v| eccentricity_within(space, v, code, t).is_some())
        .count())
}

/// Radius of the whole space, `rho(X) = min_v max_u d(u, v)`.
pub fn space_radius<S: FiniteMetricSpace + ?Sized>(space: &S) -> usize {
    let n = space.size();
    let ecc = |v: usize| (0..n).map(|u| space.distance(u, v)).max().unwrap_or(0);
    if space.is_vertex_transitive() {
        ecc(0)
    } else {
        (0..n).map(ecc).min().unwrap_or(0)
    }
}

/// Diameter of the whole space.
pub fn space_diameter<S: FiniteMetricSpace + ?Sized>(space: &S) -> usize {
    let n = space.size();
    let ecc = |v: usize| (0..n).map(|u| space.distance(u, v)).max().unwrap_or(0);
    if space.is_vertex_transitive() {
        ecc(0)
    } else {
        (0..n).map(ecc).max().unwrap_or(0)
    }
}

/// All distinct distance values realized between points of the space.
pub fn distance_spectrum<S: FiniteMetricSpace + ?Sized>(space: &S) -> Vec<usize> {
    let n = space.size();
    let sources: Vec<usize> = if space.is_vertex_transitive() {
        vec![0]
    } else {
        (0..n).collect()
    };
    let mut seen = Vec::new();
    for &s in &sources {
        for u in 0..n {
            let d = space.distance(s, u);
            if d >= seen.len() {
                seen.resize(d + 1, false);
            }
            seen[d] = true;
        }
    }
    seen.iter()
        .enumerate()
        .filter(|(_, &b)| b)
        .map(|(d, _)| d)
        .collect()
}

/// Remoteness, radius, diameter and covering radius of one code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeSummary {
    pub remoteness: usize,
    /// Least point attaining the remoteness.
    pub witness: usize,
    pub radius: usize,
    pub diameter: usize,
    pub covering_radius: usize,
    /// Points within distance `remoteness` of every codeword (the ball centers).
    pub mu_count: usize,
}

pub fn summarize<S: FiniteMetricSpace + ?Sized>(space: &S, code: &[usize]) -> Result<CodeSummary, MetricError> {
    let (remoteness, witness) = remoteness(space, code)?;
    Ok(CodeSummary {
        remoteness,
        witness,
        radius: radius(space, code)?,
        diameter: diameter(space, code)?,
        covering_radius: covering_radius(space, code)?,
        mu_count: mu_count(space, code, remoteness)?,
    })
}

/// Result of the exact search for the smallest code of remoteness at least `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MOutcome {
    Found { size: usize, code: Vec<usize> },
    /// No code has remoteness exactly `t` (it is not a realized distance, or exceeds `rho(X)`).
    Unattainable,
    /// The next cardinality level would push the evaluation count past the budget.
    BudgetExceeded { evaluated: u64, level: usize },
}

impl MOutcome {
    pub fn size(&self) -> Option<usize> {
        match self {
            MOutcome::Found { size, .. } => Some(*size),
            _ => None,
        }
    }
}

/// Bitsets of `{c : d(v, c) >= t}` for every point `v`.
struct FarSets {
    words: usize,
    bits: Vec<u64>,
}

impl FarSets {
    fn new<S: FiniteMetricSpace + ?Sized>(space: &S, t: usize) -> FarSets {
        let n = space.size();
        let words = n.div_ceil(64);
        let mut bits = vec![0u64; words * n];
        for v in 0..n {
            for c in 0..n {
                if space.distance(v, c) >= t {
                    bits[v * words + c / 64] |= 1 << (c % 64);
                }
            }
        }
        FarSets { words, bits }
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    /// Every point has a codeword at distance `>= t`.
    fn dominated_by(&self, code_bits: &[u64], points: usize) -> bool {
        (0..points).all(|v| self.row(v).iter().zip(code_bits).any(|(a, b)| a & b != 0))
    }
}

/// Smallest `|C|` with `r(C) >= t`, found by increasing-cardinality exhaustive search.
///
/// In vertex-transitive spaces the first codeword is fixed to point 0. The whole
/// next level is skipped (with [`MOutcome::BudgetExceeded`]) if its candidate count
/// would exceed `budget`.
pub fn m_exact<S: FiniteMetricSpace + ?Sized>(space: &S, t: usize, budget: u64) -> MOutcome {
    if t == 0 {
        return MOutcome::Found {
            size: 1,
            code: vec![0],
        };
    }
    let n = space.size();
    if t > space_radius(space) || !distance_spectrum(space).contains(&t) {
        return MOutcome::Unattainable;
    }
    let far = FarSets::new(space, t);
    let fixed = space.is_vertex_transitive();
    let mut evaluated = 0u64;
    for k in 2..=n {
        let (pool_start, free) = if fixed { (1, k - 1) } else { (0, k) };
        let pool = n - pool_start;
        let level = binomial(pool, free);
        if evaluated.saturating_add(level) > budget {
            return MOutcome::BudgetExceeded { evaluated, level: k };
        }
        evaluated += level;
        if let Some(code) = search_level(&far, n, fixed, pool_start, free) {
            return MOutcome::Found { size: k, code };
        }
    }
    // r(X) = rho(X) >= t, so the whole space always qualifies.
    MOutcome::Found {
        size: n,
        code: (0..n).collect(),
    }
}

fn search_level(far: &FarSets, n: usize, fixed: bool, pool_start: usize, free: usize) -> Option<Vec<usize>> {
    let try_first = |first: usize| -> Option<Vec<usize>> {
        let mut chosen: Vec<usize> = Vec::with_capacity(free + 1);
        if fixed {
            chosen.push(0);
        }
        chosen.push(first);
        let mut rest = Combinations::new(n - first - 1, free - 1);
        while let Some(comb) = rest.next_comb() {
            let mut code = chosen.clone();
            code.extend(comb.iter().map(|&i| i + first + 1));
            let mut bits = vec![0u64; far.words];
            for &c in &code {
                bits[c / 64] |= 1 << (c % 64);
            }
            if far.dominated_by(&bits, n) {
                return Some(code);
            }
        }
        None
    };
    if free == 0 {
        return None;
    }
    let firsts = pool_start..n.saturating_sub(free - 1);
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        firsts.into_par_iter().find_map_first(try_first)
    }
    #[cfg(not(feature = "parallel"))]
    {
        firsts.into_iter().find_map(try_first)
    }
}

/// Lexicographic `k`-subsets of `0..n`.
pub(crate) struct Combinations {
    n: usize,
    idx: Vec<usize>,
    started: bool,
    done: bool,
}

impl Combinations {
    pub(crate) fn new(n: usize, k: usize) -> Combinations {
        Combinations {
            n,
            idx: (0..k).collect(),
            started: false,
            done: k > n,
        }
    }

    pub(crate) fn next_comb(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.idx);
        }
        let k = self.idx.len();
        let mut i = k;
        while i > 0 {
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                return Some(&self.idx);
            }
        }
        self.done = true;
        None
    }
}

/// Greedy set cover over the domination formulation: repeatedly add the point
/// that is far (distance `>= t`) from the most not-yet-dominated points.
pub fn greedy_remote_code<S: FiniteMetricSpace + ?Sized>(space: &S, t: usize) -> Result<Vec<usize>, MetricError> {
    let rho = space_radius(space);
    if t > rho {
        return Err(MetricError::RadiusTooLarge { t, max: rho });
    }
    if t == 0 {
        return Ok(vec![0]);
    }
    let n = space.size();
    let mut dominated = vec![false; n];
    let mut remaining = n;
    let mut code = Vec::new();
    while remaining > 0 {
        let mut best = (0usize, usize::MAX);
        for c in 0..n {
            let gain = (0..n)
                .filter(|&v| !dominated[v] && space.distance(v, c) >= t)
                .count();
            if gain > best.0 {
                best = (gain, c);
            }
        }
        let c = best.1;
        code.push(c);
        for (v, done) in dominated.iter_mut().enumerate() {
            if !*done && space.distance(v, c) >= t {
                *done = true;
                remaining -= 1;
            }
        }
    }
    code.sort_unstable();
    Ok(code)
}

/// The graph `G_t` on the points with edges `{u, v : d(u, v) >= t}`.
#[derive(Clone, Debug)]
pub struct DominationGraph {
    pub t: usize,
    /// At `t = 0` every vertex is dominated by any nonempty set; no adjacency is stored.
    pub universal: bool,
    pub adjacency: Vec<Vec<usize>>,
}

impl DominationGraph {
    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Strong (total) domination: every vertex has a neighbour in `set`.
    pub fn strongly_dominates(&self, set: &[usize]) -> bool {
        if self.universal {
            return !set.is_empty();
        }
        let n = self.adjacency.len();
        let mut member = vec![false; n];
        for &s in set {
            member[s] = true;
        }
        self.adjacency
            .iter()
            .all(|nbrs| nbrs.iter().any(|&u| member[u]))
    }
}

pub fn domination_graph<S: FiniteMetricSpace + ?Sized>(space: &S, t: usize) -> DominationGraph {
    let n = space.size();
    if t == 0 {
        return DominationGraph {
            t,
            universal: true,
            adjacency: vec![Vec::new(); n],
        };
    }
    let adjacency = (0..n)
        .map(|u| (0..n).filter(|&v| v != u && space.distance(u, v) >= t).collect())
        .collect();
    DominationGraph {
        t,
        universal: false,
        adjacency,
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MBounds {
    pub lower: f64,
    pub upper: f64,
}

/// The set-cover bounds on `m(X, t)` in their published form:
/// `N/(N - Vmin + 1) <= m <= N/(N - Vmin + 1) + N/(N - Vmax + 1) ln(N - Vmin + 1)`
/// with `N = |X|` and volumes of radius `t - 1`.
///
/// The upper bound is not valid in general (it fails on `H(3, 2)` at `t = 3`);
/// see [`set_cover_bounds`] for the version that holds for the greedy code.
pub fn bound_m<S: FiniteMetricSpace + ?Sized>(space: &S, t: usize) -> Result<MBounds, MetricError> {
    if t == 0 {
        return Err(MetricError::ZeroRadius);
    }
    let n = space.size() as f64;
    let vmin = space.min_ball_volume(t - 1) as f64;
    let vmax = space.max_ball_volume(t - 1) as f64;
    let lower = n / (n - vmin + 1.0);
    let upper = lower + n / (n - vmax + 1.0) * libm::log(n - vmin + 1.0);
    Ok(MBounds { lower, upper })
}

/// Set-cover bounds with every point far from at least `N - Vmax` points and every
/// far-set of size at most `N - Vmin`:
/// `N/(N - Vmin) <= m <= N/(N - Vmin) + N/(N - Vmax) ln(N - Vmin)`.
/// Requires `t <= rho(X)` so both far-set counts are positive.
pub fn set_cover_bounds<S: FiniteMetricSpace + ?Sized>(space: &S, t: usize) -> Result<MBounds, MetricError> {
    if t == 0 {
        return Err(MetricError::ZeroRadius);
    }
    let rho = space_radius(space);
    if t > rho {
        return Err(MetricError::RadiusTooLarge { t, max: rho });
    }
    let n = space.size() as f64;
    let largest = n - space.min_ball_volume(t - 1) as f64;
    let smallest = n - space.max_ball_volume(t - 1) as f64;
    let lower = n / largest;
    let upper = lower + n / smallest * libm::log(largest);
    Ok(MBounds { lower, upper })
}

/// Integer form of the greedy guarantee: `ceil((N/s) ln L) + floor(N/L)` steps, where
/// `L` and `s` are the largest and smallest far-set sizes.
pub fn greedy_size_bound<S: FiniteMetricSpace + ?Sized>(space: &S, t: usize) -> Result<usize, MetricError> {
    if t == 0 {
        return Ok(1);
    }
    let rho = space_radius(space);
    if t > rho {
        return Err(MetricError::RadiusTooLarge { t, max: rho });
    }
    let n = space.size();
    let largest = n - space.min_ball_volume(t - 1);
    let smallest = n - space.max_ball_volume(t - 1);
    let phase1 = libm::ceil(n as f64 / smallest as f64 * libm::log(largest as f64)) as usize;
    Ok(phase1 + n / largest)
}

/// Lower bound `floor((2n - t + 1) / (2(n - t + 1))) + 1` on `m(S_n, t)` for `1 <= t <= n`.
pub fn symmetric_m_lower_bound(n: usize, t: usize) -> usize {
    assert!(t >= 1 && t <= n, "t must lie in 1..=n");
    (2 * n - t + 1) / (2 * (n - t + 1)) + 1
}

/// Checks whether the space is balanced; returns the antipode map when it is.
pub fn is_balanced<S: FiniteMetricSpace + ?Sized>(space: &S) -> Option<Vec<usize>> {
    let n = space.size();
    let rho = space_radius(space);
    if rho != space_diameter(space) {
        return None;
    }
    let mut antipodes = Vec::with_capacity(n);
    for v in 0..n {
        let bar = (0..n).find(|&w| {
            space.distance(v, w) == rho && (0..n).all(|u| space.distance(u, v) + space.distance(u, w) == rho)
        })?;
        antipodes.push(bar);
    }
    Some(antipodes)
}

/// Brute-force remoteness of a permutation code over all of `S_n`, with the least
/// (lexicographic) minimizing permutation.
pub fn permutation_remoteness(code: &[Permutation]) -> Result<(usize, Permutation), MetricError> {
    let space = permutation_space(code)?;
    let idx = space.indices_of(code)?;
    let (r, w) = remoteness(&space, &idx)?;
    Ok((r, space.point(w).clone()))
}

/// Brute-force covering radius of a permutation code over all of `S_n`.
pub fn permutation_covering_radius(code: &[Permutation]) -> Result<usize, MetricError> {
    let space = permutation_space(code)?;
    let idx = space.indices_of(code)?;
    covering_radius(&space, &idx)
}

pub fn permutation_summary(code: &[Permutation]) -> Result<(SymmetricSpace, CodeSummary), MetricError> {
    let space = permutation_space(code)?;
    let idx = space.indices_of(code)?;
    let summary = summarize(&space, &idx)?;
    Ok((space, summary))
}

fn permutation_space(code: &[Permutation]) -> Result<SymmetricSpace, MetricError> {
    let first = code.first().ok_or(MetricError::EmptyCode)?;
    SymmetricSpace::new(first.degree())
}

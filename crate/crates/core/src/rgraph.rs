//! The remoteness graph `R(G)` on ordered pairs and its stability number.
//!
//! Two distinct pairs `(a, b)` and `(c, d)` are adjacent when `a = c`, `b = d`, or
//! `(a, c)` and `(b, d)` lie in the same orbital. An independent set of size `n`
//! is exactly the graph `{(x, pi(x))}` of a permutation at distance `n - 1` from
//! every element of `G`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::group::{GroupError, OrbitalPartition, PermutationGroup};
use crate::perm::Permutation;

#[derive(Clone, Debug)]
pub struct RemotenessGraph {
    n: usize,
    words: usize,
    adjacency: Vec<u64>,
    orbitals: OrbitalPartition,
}

#[inline]
fn test_bit(row: &[u64], v: usize) -> bool {
    row[v / 64] >> (v % 64) & 1 == 1
}

#[inline]
fn set_bit(row: &mut [u64], v: usize) {
    row[v / 64] |= 1 << (v % 64);
}

fn count(bits: &[u64]) -> usize {
    bits.iter().map(|w| w.count_ones() as usize).sum()
}

impl RemotenessGraph {
    pub fn build(group: &PermutationGroup) -> Result<RemotenessGraph, GroupError> {
        if !group.is_transitive() {
            return Err(GroupError::NotTransitive);
        }
        Ok(RemotenessGraph::from_orbitals(group.orbitals()))
    }

    pub fn from_orbitals(orbitals: OrbitalPartition) -> RemotenessGraph {
        let n = orbitals.degree();
        let v = n * n;
        let words = v.div_ceil(64);
        let mut adjacency = vec![0u64; v * words];
        for x in 0..v {
            let (a, b) = (x / n, x % n);
            let row = &mut adjacency[x * words..(x + 1) * words];
            for y in 0..v {
                let (c, d) = (y / n, y % n);
                if x != y && (a == c || b == d || orbitals.label(a, c) == orbitals.label(b, d)) {
                    set_bit(row, y);
                }
            }
        }
        RemotenessGraph {
            n,
            words,
            adjacency,
            orbitals,
        }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.n * self.n
    }

    pub fn orbitals(&self) -> &OrbitalPartition {
        &self.orbitals
    }

    #[inline]
    pub fn vertex(&self, a: usize, b: usize) -> usize {
        a * self.n + b
    }

    #[inline]
    pub fn pair(&self, v: usize) -> (usize, usize) {
        (v / self.n, v % self.n)
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.adjacency[v * self.words..(v + 1) * self.words]
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        test_bit(self.row(u), v)
    }

    pub fn vertex_degree(&self, v: usize) -> usize {
        count(self.row(v))
    }

    pub fn edge_count(&self) -> usize {
        (0..self.vertex_count()).map(|v| self.vertex_degree(v)).sum::<usize>() / 2
    }

    /// One `"a,b c,d"` line per edge with the first vertex smaller.
    pub fn edge_list(&self) -> String {
        let mut out = String::new();
        for u in 0..self.vertex_count() {
            for v in u + 1..self.vertex_count() {
                if self.adjacent(u, v) {
                    let ((a, b), (c, d)) = (self.pair(u), self.pair(v));
                    let _ = writeln!(out, "{a},{b} {c},{d}");
                }
            }
        }
        out
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| u != v && !self.adjacent(u, v)))
    }
}

/// Maximum independent set found by branch and bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stability {
    pub alpha: usize,
    /// Vertices of the lexicographically least maximum independent set.
    pub witness: Vec<usize>,
}

impl Stability {
    /// Reads a size-`n` independent set `{(x, pi(x))}` as the permutation `pi`.
    pub fn permutation(&self, graph: &RemotenessGraph) -> Option<Permutation> {
        let n = graph.degree();
        if self.alpha != n {
            return None;
        }
        let mut images = vec![0usize; n];
        for &v in &self.witness {
            let (a, b) = graph.pair(v);
            images[a] = b;
        }
        Permutation::from_images(images).ok()
    }
}

struct Search<'g> {
    g: &'g RemotenessGraph,
    best: usize,
    best_set: Vec<usize>,
    current: Vec<usize>,
    limit: usize,
}

impl Search<'_> {
    /// Upper bound: each chosen vertex uses a distinct row and a distinct column.
    fn bound(&self, candidates: &[u64]) -> usize {
        let n = self.g.n;
        let mut rows = 0u64;
        let mut cols = 0u64;
        for (w, &word) in candidates.iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                let v = w * 64 + bits.trailing_zeros() as usize;
                bits &= bits - 1;
                rows |= 1 << (v / n);
                cols |= 1 << (v % n);
            }
        }
        rows.count_ones().min(cols.count_ones()) as usize
    }

    fn run(&mut self, row: usize, candidates: &[u64]) {
        if self.best >= self.limit {
            return;
        }
        if self.current.len() > self.best {
            self.best = self.current.len();
            self.best_set = self.current.clone();
        }
        let n = self.g.n;
        if row == n || self.current.len() + self.bound(candidates) <= self.best {
            return;
        }
        let mut next = vec![0u64; candidates.len()];
        for b in 0..n {
            let v = row * n + b;
            if !test_bit(candidates, v) {
                continue;
            }
            let adj = self.g.row(v);
            for (i, word) in next.iter_mut().enumerate() {
                *word = candidates[i] & !adj[i];
            }
            // drop the rest of this row, v included
            for c in 0..n {
                let u = row * n + c;
                next[u / 64] &= !(1 << (u % 64));
            }
            self.current.push(v);
            self.run(row + 1, &next);
            self.current.pop();
            if self.best >= self.limit {
                return;
            }
        }
        let mut skip = candidates.to_vec();
        for c in 0..n {
            let u = row * n + c;
            skip[u / 64] &= !(1 << (u % 64));
        }
        self.run(row + 1, &skip);
    }
}

/// Exact stability number, stopping early once an independent set of size `n` is found.
pub fn stability_number(graph: &RemotenessGraph) -> Stability {
    let n = graph.n;
    let mut all = vec![0u64; graph.words];
    for v in 0..graph.vertex_count() {
        set_bit(&mut all, v);
    }
    let mut search = Search {
        g: graph,
        best: 0,
        best_set: Vec::new(),
        current: Vec::new(),
        limit: n,
    };
    search.run(0, &all);
    Stability {
        alpha: search.best,
        witness: search.best_set,
    }
}

/// Same answer as [`stability_number`], searching the first-row branches in parallel.
/// Each branch keeps ties so the lexicographically least witness is still returned.
#[cfg(feature = "parallel")]
pub fn stability_number_parallel(graph: &RemotenessGraph) -> Stability {
    use core::sync::atomic::{AtomicUsize, Ordering};
    use rayon::prelude::*;

    let n = graph.n;
    let shared = AtomicUsize::new(0);
    let mut all = vec![0u64; graph.words];
    for v in 0..graph.vertex_count() {
        set_bit(&mut all, v);
    }
    // Branch b < n takes vertex (0, b); branch n skips row 0.
    let results: Vec<Stability> = (0..=n)
        .into_par_iter()
        .map(|b| {
            let mut candidates = all.clone();
            let mut current = Vec::new();
            if b < n {
                let adj = graph.row(b);
                for (i, word) in candidates.iter_mut().enumerate() {
                    *word &= !adj[i];
                }
                current.push(b);
            }
            for c in 0..n {
                candidates[c / 64] &= !(1 << (c % 64));
            }
            let floor = shared.load(Ordering::Relaxed).saturating_sub(1);
            let mut search = Search {
                g: graph,
                best: floor.max(current.len().saturating_sub(1)),
                best_set: Vec::new(),
                current,
                limit: n,
            };
            search.run(1, &candidates);
            shared.fetch_max(search.best, Ordering::Relaxed);
            if search.best_set.is_empty() {
                Stability { alpha: 0, witness: Vec::new() }
            } else {
                Stability {
                    alpha: search.best_set.len(),
                    witness: search.best_set,
                }
            }
        })
        .collect();
    results
        .into_iter()
        .fold(Stability { alpha: 0, witness: Vec::new() }, |acc, s| if s.alpha > acc.alpha { s } else { acc })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphStats {
    pub vertices: usize,
    /// Common degree; `None` if the graph is not regular.
    pub valency: Option<usize>,
    /// `2(n-1) + sum |O|^2 / n^2` over off-diagonal orbitals, times `n^2`.
    pub formula_valency_times_n2: usize,
    pub edges: usize,
    /// Exact clique number for `n <= 7`.
    pub clique_number: Option<usize>,
    /// A clique of size `n`: all pairs with first coordinate 0.
    pub clique_certificate: Vec<usize>,
    /// `(lambda, mu)` when the graph is strongly regular.
    pub strongly_regular: Option<(usize, usize)>,
}

impl GraphStats {
    pub fn formula_valency(&self) -> Option<usize> {
        let n2 = self.vertices;
        (self.formula_valency_times_n2 % n2 == 0).then_some(self.formula_valency_times_n2 / n2)
    }
}

/// Largest exact clique search handled by [`graph_stats`].
pub const EXACT_CLIQUE_DEGREE: usize = 7;

pub fn graph_stats(graph: &RemotenessGraph) -> GraphStats {
    let n = graph.n;
    let nv = graph.vertex_count();
    let degrees: Vec<usize> = (0..nv).map(|v| graph.vertex_degree(v)).collect();
    let valency = degrees.iter().all(|&d| d == degrees[0]).then_some(degrees[0]);
    let o = graph.orbitals();
    let off_diag: usize = (0..o.rank())
        .filter(|&l| !o.is_diagonal(l))
        .map(|l| o.sizes()[l] * o.sizes()[l])
        .sum();
    let clique_number = (n <= EXACT_CLIQUE_DEGREE).then(|| max_clique(graph));
    GraphStats {
        vertices: nv,
        valency,
        formula_valency_times_n2: 2 * (n - 1) * n * n + off_diag,
        edges: degrees.iter().sum::<usize>() / 2,
        clique_number,
        clique_certificate: (0..n).collect(),
        strongly_regular: strong_regularity(graph),
    }
}

/// `(lambda, mu)` if every adjacent pair has `lambda` and every non-adjacent pair `mu` common neighbours.
pub fn strong_regularity(graph: &RemotenessGraph) -> Option<(usize, usize)> {
    let nv = graph.vertex_count();
    let mut lambda = None;
    let mut mu = None;
    for u in 0..nv {
        for v in u + 1..nv {
            let common = graph.row(u).iter().zip(graph.row(v)).map(|(a, b)| (a & b).count_ones() as usize).sum();
            let slot = if graph.adjacent(u, v) { &mut lambda } else { &mut mu };
            match *slot {
                None => *slot = Some(common),
                Some(c) if c != common => return None,
                _ => {}
            }
        }
    }
    Some((lambda.unwrap_or(0), mu.unwrap_or(0)))
}

fn max_clique(graph: &RemotenessGraph) -> usize {
    fn expand(g: &RemotenessGraph, size: usize, candidates: Vec<u64>, best: &mut usize) {
        let left = count(&candidates);
        if left == 0 {
            *best = (*best).max(size);
            return;
        }
        if size + left <= *best {
            return;
        }
        let mut cand = candidates;
        while count(&cand) > 0 && size + count(&cand) > *best {
            let w = cand.iter().position(|&x| x != 0).expect("non-empty");
            let v = w * 64 + cand[w].trailing_zeros() as usize;
            cand[v / 64] &= !(1 << (v % 64));
            let next: Vec<u64> = cand.iter().zip(g.row(v)).map(|(a, b)| a & b).collect();
            expand(g, size + 1, next, best);
        }
    }
    let mut all = vec![0u64; graph.words];
    for v in 0..graph.vertex_count() {
        set_bit(&mut all, v);
    }
    let mut best = 0;
    expand(graph, 0, all, &mut best);
    best
}

/// Checks that `G x G` acting coordinatewise preserves adjacency and is transitive on vertices.
pub fn vertex_transitivity_check(graph: &RemotenessGraph, group: &PermutationGroup) -> bool {
    let n = graph.n;
    if group.degree() != n {
        return false;
    }
    let id = Permutation::identity(n);
    let moves: Vec<(Permutation, Permutation)> = group
        .generators()
        .iter()
        .flat_map(|g| [(g.clone(), id.clone()), (id.clone(), g.clone())])
        .collect();
    let act = |(g, h): &(Permutation, Permutation), v: usize| {
        let (a, b) = graph.pair(v);
        graph.vertex(g.image(a), h.image(b))
    };
    let nv = graph.vertex_count();
    for m in &moves {
        for u in 0..nv {
            for v in u + 1..nv {
                if graph.adjacent(u, v) != graph.adjacent(act(m, u), act(m, v)) {
                    return false;
                }
            }
        }
    }
    let mut seen = vec![false; nv];
    seen[0] = true;
    let mut stack = vec![0];
    while let Some(v) = stack.pop() {
        for m in &moves {
            let w = act(m, v);
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.iter().all(|&s| s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: usize) -> PermutationGroup {
        PermutationGroup::cyclic(&Permutation::standard_cycle(n))
    }

    #[test]
    fn symmetric_three_is_complete() {
        let r = RemotenessGraph::build(&PermutationGroup::symmetric(3).unwrap()).unwrap();
        assert_eq!(r.edge_count(), 36);
        assert_eq!(stability_number(&r).alpha, 1);
    }

    #[test]
    fn valencies() {
        let r3 = RemotenessGraph::build(&cyclic(3)).unwrap();
        let s = graph_stats(&r3);
        assert_eq!(s.vertices, 9);
        assert_eq!(s.valency, Some(6));
        assert_eq!(s.formula_valency(), Some(6));
        assert!(s.clique_number.unwrap() >= 3);
        let r5 = RemotenessGraph::build(&cyclic(5)).unwrap();
        let s = graph_stats(&r5);
        assert_eq!((s.valency, s.formula_valency()), (Some(12), Some(12)));
    }

    #[test]
    fn cyclic_five_has_full_independent_set() {
        let r = RemotenessGraph::build(&cyclic(5)).unwrap();
        let s = stability_number(&r);
        assert_eq!(s.alpha, 5);
        assert!(r.is_independent(&s.witness));
        let pi = s.permutation(&r).unwrap();
        assert!(cyclic(5).orbitals().witness_condition(&pi));
        let doubling = Permutation::affine_mod(5, 2, 0).unwrap();
        let pairs: Vec<usize> = (0..5).map(|x| r.vertex(x, doubling.image(x))).collect();
        assert!(r.is_independent(&pairs));
    }

    #[test]
    fn cyclic_four_falls_short() {
        let r = RemotenessGraph::build(&cyclic(4)).unwrap();
        assert!(stability_number(&r).alpha < 4);
    }

    #[test]
    fn regular_groups_give_latin_square_graphs() {
        for g in [cyclic(4), cyclic(5)] {
            let n = g.degree();
            let r = RemotenessGraph::build(&g).unwrap();
            assert_eq!(graph_stats(&r).valency, Some(3 * (n - 1)));
            assert_eq!(strong_regularity(&r), Some((n, 6)));
        }
    }

    #[test]
    fn transitivity_of_the_graph() {
        for g in [cyclic(3), cyclic(5), PermutationGroup::dihedral(5).unwrap()] {
            let r = RemotenessGraph::build(&g).unwrap();
            assert!(vertex_transitivity_check(&r, &g));
        }
    }

    #[test]
    fn edge_list_format() {
        let r = RemotenessGraph::build(&PermutationGroup::symmetric(2).unwrap()).unwrap();
        let text = r.edge_list();
        assert_eq!(text.lines().count(), r.edge_count());
        assert!(text.starts_with("0,0 0,1\n"));
    }

    #[test]
    fn non_transitive_is_rejected() {
        let g = PermutationGroup::cyclic(&Permutation::parse("(0 1)", Some(3)).unwrap());
        assert!(matches!(RemotenessGraph::build(&g), Err(GroupError::NotTransitive)));
    }

    #[cfg(feature = "parallel")]
    #[test]
    fn parallel_search_matches() {
        for g in [cyclic(4), cyclic(5), cyclic(6), PermutationGroup::dihedral(7).unwrap()] {
            let r = RemotenessGraph::build(&g).unwrap();
            assert_eq!(stability_number_parallel(&r), stability_number(&r));
        }
    }
}

//! Permutation groups: stabilizer chains, orbitals, and the remoteness of
//! cyclic, dihedral and transitive groups.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::metric::MetricError;
use crate::perm::{Parity, PermError, Permutation};

/// Default bound on the number of elements materialized by [`PermutationGroup::elements`].
pub const DEFAULT_ORDER_CAP: u128 = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("generator has degree {found}, expected {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("group degree must be positive")]
    ZeroDegree,
    #[error("group of order {order} exceeds the element cap {cap}")]
    OrderCapExceeded { order: u128, cap: u128 },
    #[error("the group is not transitive")]
    NotTransitive,
    #[error("dihedral groups need n >= 3, got {0}")]
    DihedralDegree(usize),
    #[error("codewords disagree on point {0}")]
    DisagreeingPoint(usize),
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("shortcut answer {shortcut} contradicts witness search answer {search}")]
    ShortcutMismatch { shortcut: usize, search: usize },
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Metric(#[from] MetricError),
}

#[derive(Clone, Debug)]
struct Level {
    base: usize,
    gens: Vec<Permutation>,
    orbit: Vec<usize>,
    /// `transversal[b]` maps the base point to `b`.
    transversal: Vec<Option<Permutation>>,
    inverse: Vec<Option<Permutation>>,
}

impl Level {
    fn new(base: usize, n: usize) -> Level {
        let mut level = Level {
            base,
            gens: Vec::new(),
            orbit: Vec::new(),
            transversal: vec![None; n],
            inverse: vec![None; n],
        };
        level.rebuild(n);
        level
    }

    fn rebuild(&mut self, n: usize) {
        self.transversal = vec![None; n];
        self.transversal[self.base] = Some(Permutation::identity(n));
        self.orbit = vec![self.base];
        let mut head = 0;
        while head < self.orbit.len() {
            let p = self.orbit[head];
            head += 1;
            for s in &self.gens {
                let q = s.image(p);
                if self.transversal[q].is_none() {
                    let u = self.transversal[p].as_ref().expect("orbit point").then(s);
                    self.transversal[q] = Some(u);
                    self.orbit.push(q);
                }
            }
        }
        self.inverse = self.transversal.iter().map(|u| u.as_ref().map(Permutation::inverse)).collect();
    }
}

/// Sifts `g` through `levels[from..]`; returns the residue and the level where it stopped.
fn sift(levels: &[Level], from: usize, mut g: Permutation) -> (Permutation, usize) {
    for (k, level) in levels.iter().enumerate().skip(from) {
        match &level.inverse[g.image(level.base)] {
            None => return (g, k),
            Some(u_inv) => g = g.then(u_inv),
        }
    }
    (g, levels.len())
}

fn first_moved(g: &Permutation) -> usize {
    (0..g.degree()).find(|&i| g.image(i) != i).expect("non-identity permutation")
}

/// Deterministic Schreier-Sims: restart from the deepest level whenever a
/// Schreier generator fails to sift, until every Schreier generator sifts.
fn stabilizer_chain(n: usize, gens: &[Permutation], base_prefix: &[usize]) -> Vec<Level> {
    let mut levels: Vec<Level> = base_prefix.iter().map(|&b| Level::new(b, n)).collect();
    for g in gens.iter().filter(|g| !g.is_identity()) {
        let j = match levels.iter().position(|l| g.image(l.base) != l.base) {
            Some(j) => j,
            None => {
                levels.push(Level::new(first_moved(g), n));
                levels.len() - 1
            }
        };
        for level in levels.iter_mut().take(j + 1) {
            level.gens.push(g.clone());
        }
    }
    for level in levels.iter_mut() {
        level.rebuild(n);
    }
    'restart: loop {
        for i in (0..levels.len()).rev() {
            let level = &levels[i];
            for &b in &level.orbit {
                let u_b = level.transversal[b].as_ref().expect("orbit point");
                for s in &level.gens {
                    let bs = s.image(b);
                    let h = u_b.then(s).then(level.inverse[bs].as_ref().expect("orbit point"));
                    let (res, j) = sift(&levels, i + 1, h);
                    if res.is_identity() {
                        continue;
                    }
                    if j == levels.len() {
                        levels.push(Level::new(first_moved(&res), n));
                    }
                    for level in levels.iter_mut().take(j + 1).skip(i + 1) {
                        level.gens.push(res.clone());
                        level.rebuild(n);
                    }
                    continue 'restart;
                }
            }
        }
        break;
    }
    levels
}

/// A permutation group given by generators, with a stabilizer chain computed on construction.
#[derive(Clone, Debug)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Permutation>,
    levels: Vec<Level>,
}

impl PermutationGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<PermutationGroup, GroupError> {
        if degree == 0 {
            return Err(GroupError::ZeroDegree);
        }
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(GroupError::DegreeMismatch {
                expected: degree,
                found: g.degree(),
            });
        }
        let levels = stabilizer_chain(degree, &generators, &[]);
        Ok(PermutationGroup {
            degree,
            generators,
            levels,
        })
    }

    /// The closure of a non-empty generator list.
    pub fn closure(generators: Vec<Permutation>) -> Result<PermutationGroup, GroupError> {
        let degree = generators.first().map(Permutation::degree).ok_or(GroupError::ZeroDegree)?;
        PermutationGroup::new(degree, generators)
    }

    pub fn trivial(degree: usize) -> Result<PermutationGroup, GroupError> {
        PermutationGroup::new(degree, Vec::new())
    }

    pub fn cyclic(g: &Permutation) -> PermutationGroup {
        PermutationGroup::new(g.degree(), vec![g.clone()]).expect("single generator")
    }

    pub fn symmetric(n: usize) -> Result<PermutationGroup, GroupError> {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(Permutation::standard_cycle(n));
            gens.push(Permutation::from_cycles(n, &[[0, 1]])?);
        }
        PermutationGroup::new(n, gens)
    }

    pub fn alternating(n: usize) -> Result<PermutationGroup, GroupError> {
        let gens = (2..n)
            .map(|k| Permutation::from_cycles(n, &[[0, 1, k]]))
            .collect::<Result<Vec<_>, _>>()?;
        PermutationGroup::new(n, gens)
    }

    /// `D_2n = <x -> x+1, x -> -x>` acting on `Z_n`.
    pub fn dihedral(n: usize) -> Result<PermutationGroup, GroupError> {
        if n < 3 {
            return Err(GroupError::DihedralDegree(n));
        }
        let rotation = Permutation::standard_cycle(n);
        let reflection = Permutation::affine_mod(n, n - 1, 0)?;
        PermutationGroup::new(n, vec![rotation, reflection])
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        p.degree() == self.degree && sift(&self.levels, 0, p.clone()).0.is_identity()
    }

    /// All elements in sorted order, refusing groups larger than [`DEFAULT_ORDER_CAP`].
    pub fn elements(&self) -> Result<Vec<Permutation>, GroupError> {
        self.elements_with_cap(DEFAULT_ORDER_CAP)
    }

    pub fn elements_with_cap(&self, cap: u128) -> Result<Vec<Permutation>, GroupError> {
        let order = self.order();
        if order > cap {
            return Err(GroupError::OrderCapExceeded { order, cap });
        }
        let mut out = vec![Permutation::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * level.orbit.len());
            for e in &out {
                for &b in &level.orbit {
                    next.push(e.then(level.transversal[b].as_ref().expect("orbit point")));
                }
            }
            out = next;
        }
        out.sort_unstable();
        Ok(out)
    }

    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let n = self.degree;
        let mut seen = vec![false; n];
        let mut orbits = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut orbit = vec![start];
            let mut head = 0;
            while head < orbit.len() {
                let p = orbit[head];
                head += 1;
                for g in &self.generators {
                    let q = g.image(p);
                    if !seen[q] {
                        seen[q] = true;
                        orbit.push(q);
                    }
                }
            }
            orbit.sort_unstable();
            orbits.push(orbit);
        }
        orbits
    }

    pub fn is_transitive(&self) -> bool {
        self.orbits().len() == 1
    }

    pub fn is_regular(&self) -> bool {
        self.is_transitive() && self.order() == self.degree as u128
    }

    pub fn orbitals(&self) -> OrbitalPartition {
        OrbitalPartition::of(self)
    }

    pub fn is_2transitive(&self) -> bool {
        self.is_transitive() && (self.degree == 1 || self.orbitals().rank() == 2)
    }

    /// The stabilizer of `point`, generated by the second level of a chain based at `point`.
    pub fn stabilizer(&self, point: usize) -> Result<PermutationGroup, GroupError> {
        if point >= self.degree {
            return Err(GroupError::PointOutOfRange {
                point,
                degree: self.degree,
            });
        }
        let levels = stabilizer_chain(self.degree, &self.generators, &[point]);
        let gens = levels.get(1).map(|l| l.gens.clone()).unwrap_or_default();
        PermutationGroup::new(self.degree, gens)
    }
}

/// The orbits of a group on ordered pairs, labelled by first appearance in row-major order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitalPartition {
    n: usize,
    labels: Vec<u32>,
    sizes: Vec<usize>,
}

impl OrbitalPartition {
    fn of(group: &PermutationGroup) -> OrbitalPartition {
        let n = group.degree;
        let mut labels = vec![u32::MAX; n * n];
        let mut sizes = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..n * n {
            if labels[start] != u32::MAX {
                continue;
            }
            let label = sizes.len() as u32;
            labels[start] = label;
            queue.push_back(start);
            let mut size = 0;
            while let Some(v) = queue.pop_front() {
                size += 1;
                let (x, y) = (v / n, v % n);
                for g in &group.generators {
                    let w = g.image(x) * n + g.image(y);
                    if labels[w] == u32::MAX {
                        labels[w] = label;
                        queue.push_back(w);
                    }
                }
            }
            sizes.push(size);
        }
        OrbitalPartition { n, labels, sizes }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn label(&self, x: usize, y: usize) -> usize {
        self.labels[x * self.n + y] as usize
    }

    pub fn rank(&self) -> usize {
        self.sizes.len()
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn is_diagonal(&self, label: usize) -> bool {
        (0..self.n).any(|x| self.label(x, x) == label)
    }

    /// Orbit lengths of the stabilizer of point 0, one per orbital meeting row 0,
    /// listed in order of orbital label.
    pub fn suborbit_sizes(&self) -> Vec<usize> {
        let mut counts = vec![0usize; self.rank()];
        for y in 0..self.n {
            counts[self.label(0, y)] += 1;
        }
        counts.into_iter().filter(|&c| c > 0).collect()
    }

    /// The pair-set reading of a permutation: `(x, pi(x))` never shares an
    /// off-diagonal orbital with `(y, pi(y))` read as `(x, y)` vs `(pi x, pi y)`.
    pub fn witness_condition(&self, pi: &Permutation) -> bool {
        let n = self.n;
        for x in 0..n {
            for y in 0..n {
                if x != y && self.label(x, y) == self.label(pi.image(x), pi.image(y)) {
                    return false;
                }
            }
        }
        true
    }
}

/// Whether `pi` is at distance `n - 1` from every element, decided from orbitals alone.
pub fn orbital_witness_valid(group: &PermutationGroup, pi: &Permutation) -> Result<bool, GroupError> {
    if !group.is_transitive() {
        return Err(GroupError::NotTransitive);
    }
    if pi.degree() != group.degree() {
        return Err(GroupError::DegreeMismatch {
            expected: group.degree(),
            found: pi.degree(),
        });
    }
    Ok(group.orbitals().witness_condition(pi))
}

/// `pi_0, pi_1` on `Z_2m`: `pi_0` is at distance `2m - 2` from even powers of the
/// standard cycle and `2m` from odd powers; `pi_1` the other way round.
/// Even `m` uses `i -> 3i` unless `3 | m`, where `i -> -i` (even `i`), `i -> 4 - i` (odd `i`).
pub fn pi0_pi1(m: usize) -> (Permutation, Permutation) {
    assert!(m >= 1 && 2 * m <= crate::perm::MAX_DEGREE, "m out of range");
    let n = 2 * m;
    let p0: Vec<usize> = if m % 2 == 0 && m % 3 != 0 {
        (0..n).map(|i| 3 * i % n).collect()
    } else if m % 2 == 0 {
        // i -> 3i is not injective mod 2m here; reflect evens and odds instead.
        (0..n).map(|i| if i % 2 == 0 { (n - i) % n } else { (n + 4 - i) % n }).collect()
    } else {
        (0..n).map(|i| (i + 2 * (i / 2)) % n).collect()
    };
    let p1: Vec<usize> = p0.iter().map(|&v| (v + 1) % n).collect();
    (
        Permutation::from_images(p0).expect("pi_0 is a bijection"),
        Permutation::from_images(p1).expect("pi_1 is a bijection"),
    )
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicAnalysis {
    pub remoteness: usize,
    /// A permutation at distance at most `remoteness` from every power of `g`.
    pub witness: Permutation,
    /// Number of non-trivial cycles of `g`.
    pub cycles: usize,
    pub parity: Parity,
    /// Fixed points of `g`, removed before applying the formula.
    pub fixed_points: usize,
}

/// `r(<g>) = n' - k` for even `g` and `n' - k + 1` for odd `g`, where `n'` is the
/// size of the support and `k` the number of non-trivial cycles.
pub fn cyclic_group_remoteness(g: &Permutation) -> CyclicAnalysis {
    let n = g.degree();
    let cs = g.cycle_structure();
    let cycles: Vec<&Vec<usize>> = cs.cycles.iter().filter(|c| c.len() > 1).collect();
    let k = cycles.len();
    let support: usize = cycles.iter().map(|c| c.len()).sum();
    let parity = g.parity();
    let mut images: Vec<usize> = (0..n).collect();
    let mut place = |cycle: &[usize], local: &Permutation| {
        for (i, &p) in cycle.iter().enumerate() {
            images[p] = cycle[local.image(i)];
        }
    };
    let mut even: Vec<&Vec<usize>> = cycles.iter().copied().filter(|c| c.len() % 2 == 0).collect();
    if parity == Parity::Odd {
        // One even cycle keeps the identity; the rest pair up.
        even.remove(0);
    }
    let half = even.len() / 2;
    for (idx, cycle) in even.iter().enumerate() {
        let (p0, p1) = pi0_pi1(cycle.len() / 2);
        place(cycle, if idx < half { &p0 } else { &p1 });
    }
    for cycle in cycles.iter().filter(|c| c.len() % 2 == 1) {
        let l = cycle.len();
        let doubling = Permutation::from_images((0..l).map(|i| 2 * i % l)).expect("2 is a unit mod odd l");
        place(cycle, &doubling);
    }
    let remoteness = match parity {
        Parity::Even => support - k,
        Parity::Odd => support - k + 1,
    };
    CyclicAnalysis {
        remoteness,
        witness: Permutation::from_images(images).expect("cycle-wise bijection"),
        cycles: k,
        parity,
        fixed_points: n - support,
    }
}

/// Largest distance from `pi` to a power of `g`.
pub fn max_distance_to_powers(g: &Permutation, pi: &Permutation) -> usize {
    let order = g.order();
    let mut power = Permutation::identity(g.degree());
    let mut best = 0;
    for _ in 0..order {
        best = best.max(pi.distance(&power));
        power = power.then(g);
    }
    best
}

/// `r(D_2n) = n - 1` when `n = 1, 5 (mod 6)`, with witness `j -> 2j`; otherwise `n`.
pub fn dihedral_remoteness(n: usize) -> Result<(usize, Option<Permutation>), GroupError> {
    if n < 3 {
        return Err(GroupError::DihedralDegree(n));
    }
    if n % 6 == 1 || n % 6 == 5 {
        Ok((n - 1, Some(Permutation::affine_mod(n, 2, 0)?)))
    } else {
        Ok((n, None))
    }
}

/// Which argument settled a transitive group's remoteness.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Decision {
    TwoTransitive,
    LargeSuborbit,
    OddOrder,
    RegularSylow,
    WitnessSearch,
}

impl Decision {
    pub fn name(self) -> &'static str {
        match self {
            Decision::TwoTransitive => "2-transitive",
            Decision::LargeSuborbit => "large-suborbit",
            Decision::OddOrder => "odd-order",
            Decision::RegularSylow => "regular-sylow",
            Decision::WitnessSearch => "witness-search",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitiveAnalysis {
    pub remoteness: usize,
    /// A permutation at distance exactly `n - 1` from every element, when one exists.
    pub witness: Option<Permutation>,
    pub decision: Decision,
}

fn two_part(mut order: u128) -> u128 {
    let mut p = 1;
    while order % 2 == 0 {
        order /= 2;
        p *= 2;
    }
    p
}

/// Remoteness of a transitive group, which is `n - 1` or `n`.
///
/// Shortcuts are tried in a fixed order: 2-transitivity, a suborbit longer than
/// `(n-1)/2`, odd order, and the Sylow 2-subgroup test for regular groups; the
/// orbital witness search decides the rest. Whenever the answer is `n - 1` the
/// search also runs, to produce the witness and to confirm the shortcut.
pub fn transitive_remoteness(group: &PermutationGroup) -> Result<TransitiveAnalysis, GroupError> {
    if !group.is_transitive() {
        return Err(GroupError::NotTransitive);
    }
    let n = group.degree();
    let orbitals = group.orbitals();
    let order = group.order();
    let shortcut = if n == 1 || orbitals.rank() == 2 {
        Some((n, Decision::TwoTransitive))
    } else if orbitals.suborbit_sizes().iter().skip(1).any(|&s| 2 * s > n - 1) {
        Some((n, Decision::LargeSuborbit))
    } else if order % 2 == 1 {
        Some((n - 1, Decision::OddOrder))
    } else if order == n as u128 {
        let target = two_part(order);
        let cyclic_sylow = group.elements()?.iter().any(|g| g.order() as u128 == target);
        Some((if cyclic_sylow { n } else { n - 1 }, Decision::RegularSylow))
    } else {
        None
    };
    if let Some((r, decision)) = shortcut {
        if r == n {
            return Ok(TransitiveAnalysis {
                remoteness: n,
                witness: None,
                decision,
            });
        }
        let witness = orbital_witness_search(&orbitals);
        return match witness {
            Some(w) => Ok(TransitiveAnalysis {
                remoteness: n - 1,
                witness: Some(w),
                decision,
            }),
            None => Err(GroupError::ShortcutMismatch { shortcut: n - 1, search: n }),
        };
    }
    let witness = orbital_witness_search(&orbitals);
    Ok(TransitiveAnalysis {
        remoteness: if witness.is_some() { n - 1 } else { n },
        witness,
        decision: Decision::WitnessSearch,
    })
}

/// The lexicographically least `pi` with `pi(0) = 0` satisfying the orbital
/// witness condition, by backtracking over images in point order. For a
/// transitive group a witness exists iff one fixes 0, since right translation
/// by a group element preserves the condition.
pub fn orbital_witness_search(orbitals: &OrbitalPartition) -> Option<Permutation> {
    let n = orbitals.degree();
    if n == 1 {
        return Some(Permutation::identity(1));
    }
    let mut images = vec![0usize; n];
    let mut used = vec![false; n];
    used[0] = true;
    fn extend(o: &OrbitalPartition, x: usize, images: &mut [usize], used: &mut [bool]) -> bool {
        let n = o.degree();
        if x == n {
            return true;
        }
        for y in 0..n {
            if used[y] {
                continue;
            }
            if (0..x).any(|w| o.label(w, x) == o.label(images[w], y)) {
                continue;
            }
            images[x] = y;
            used[y] = true;
            if extend(o, x + 1, images, used) {
                return true;
            }
            used[y] = false;
        }
        false
    }
    if extend(orbitals, 1, &mut images, &mut used) {
        Some(Permutation::from_images(images).expect("injective assignment"))
    } else {
        None
    }
}

/// The lexicographically least `pi` agreeing with every element in at most one
/// point (covering radius `n - 1`), found by backtracking over explicit elements.
pub fn agreement_witness_search(group: &PermutationGroup) -> Result<Option<Permutation>, GroupError> {
    let n = group.degree();
    let elements = group.elements()?;
    // hits[x * n + y]: indices of elements mapping x to y.
    let mut hits: Vec<Vec<u32>> = vec![Vec::new(); n * n];
    for (idx, g) in elements.iter().enumerate() {
        for x in 0..n {
            hits[x * n + g.image(x)].push(idx as u32);
        }
    }
    let mut agree = vec![0u8; elements.len()];
    let mut images = vec![0usize; n];
    let mut used = vec![false; n];
    fn extend(
        n: usize,
        x: usize,
        hits: &[Vec<u32>],
        agree: &mut [u8],
        images: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if x == n {
            return true;
        }
        for y in 0..n {
            if used[y] {
                continue;
            }
            let list = &hits[x * n + y];
            if list.iter().any(|&g| agree[g as usize] >= 1) {
                continue;
            }
            for &g in list {
                agree[g as usize] += 1;
            }
            images[x] = y;
            used[y] = true;
            if extend(n, x + 1, hits, agree, images, used) {
                return true;
            }
            used[y] = false;
            for &g in list {
                agree[g as usize] -= 1;
            }
        }
        false
    }
    if extend(n, 0, &hits, &mut agree, &mut images, &mut used) {
        Ok(Some(Permutation::from_images(images).expect("injective assignment")))
    } else {
        Ok(None)
    }
}

/// Block-diagonal product: `c` acts as `c1` on `0..n1` and as `c2` shifted by `n1` on the rest.
pub fn cartesian_product(c1: &[Permutation], c2: &[Permutation]) -> Result<Vec<Permutation>, GroupError> {
    let (Some(a), Some(b)) = (c1.first(), c2.first()) else {
        return Ok(Vec::new());
    };
    let (n1, n2) = (a.degree(), b.degree());
    for (code, n) in [(c1, n1), (c2, n2)] {
        if let Some(bad) = code.iter().find(|p| p.degree() != n) {
            return Err(GroupError::DegreeMismatch {
                expected: n,
                found: bad.degree(),
            });
        }
    }
    let mut out = Vec::with_capacity(c1.len() * c2.len());
    for x in c1 {
        for y in c2 {
            let images = (0..n1).map(|i| x.image(i)).chain((0..n2).map(|i| y.image(i) + n1));
            out.push(Permutation::from_images(images)?);
        }
    }
    Ok(out)
}

/// A code of possibly zero degree; degree 0 carries the empty-product convention `r = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictedCode {
    pub degree: usize,
    pub code: Vec<Permutation>,
}

impl RestrictedCode {
    pub fn remoteness(&self) -> Result<usize, MetricError> {
        if self.degree == 0 {
            return Ok(0);
        }
        Ok(crate::metric::permutation_remoteness(&self.code)?.0)
    }
}

/// Points on which all codewords agree, as `(i, j)` with `c(i) = j` for every `c`.
pub fn common_agreements(code: &[Permutation]) -> Vec<(usize, usize)> {
    let Some(first) = code.first() else {
        return Vec::new();
    };
    (0..first.degree())
        .filter(|&i| code.iter().all(|c| c.image(i) == first.image(i)))
        .map(|i| (i, first.image(i)))
        .collect()
}

/// Removes points on which all codewords agree (all such points when `points` is `None`).
/// Codewords are first translated so that each removed point is fixed, then relabelled
/// on the remaining points; duplicates are dropped.
pub fn restrict_fixed(code: &[Permutation], points: Option<&[usize]>) -> Result<RestrictedCode, GroupError> {
    let first = code.first().ok_or(MetricError::EmptyCode)?;
    let n = first.degree();
    if let Some(bad) = code.iter().find(|p| p.degree() != n) {
        return Err(GroupError::DegreeMismatch {
            expected: n,
            found: bad.degree(),
        });
    }
    let agreeing = common_agreements(code);
    let pairs: Vec<(usize, usize)> = match points {
        None => agreeing,
        Some(points) => {
            let mut pairs = Vec::with_capacity(points.len());
            for &i in points {
                if i >= n {
                    return Err(GroupError::PointOutOfRange { point: i, degree: n });
                }
                match agreeing.iter().find(|&&(a, _)| a == i) {
                    Some(&pair) => pairs.push(pair),
                    None => return Err(GroupError::DisagreeingPoint(i)),
                }
            }
            pairs.sort_unstable();
            pairs.dedup();
            pairs
        }
    };
    // h sends each j back to its i; other points fill the remaining slots in order.
    let mut h = vec![usize::MAX; n];
    let mut taken = vec![false; n];
    for &(i, j) in &pairs {
        h[j] = i;
        taken[i] = true;
    }
    let mut free = (0..n).filter(|&p| !taken[p]);
    for slot in h.iter_mut().filter(|s| **s == usize::MAX) {
        *slot = free.next().expect("counts match");
    }
    let h = Permutation::from_images(h)?;
    let removed: Vec<bool> = {
        let mut r = vec![false; n];
        for &(i, _) in &pairs {
            r[i] = true;
        }
        r
    };
    let keep: Vec<usize> = (0..n).filter(|&p| !removed[p]).collect();
    let mut new_index = vec![usize::MAX; n];
    for (k, &p) in keep.iter().enumerate() {
        new_index[p] = k;
    }
    if keep.is_empty() {
        return Ok(RestrictedCode {
            degree: 0,
            code: Vec::new(),
        });
    }
    let mut out: Vec<Permutation> = code
        .iter()
        .map(|c| {
            let t = c.then(&h);
            Permutation::from_images(keep.iter().map(|&p| new_index[t.image(p)])).expect("restriction is a bijection")
        })
        .collect();
    out.sort_unstable();
    out.dedup();
    Ok(RestrictedCode {
        degree: keep.len(),
        code: out,
    })
}

/// Splits a generator list. Cycle notation is separated by commas or semicolons
/// outside parentheses; image notation (no parentheses) is separated by semicolons.
pub fn parse_generators(text: &str, degree: Option<usize>) -> Result<Vec<Permutation>, PermError> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    let mut parts = Vec::new();
    if text.contains('(') {
        let mut depth = 0i32;
        let mut start = 0;
        for (i, ch) in text.char_indices() {
            match ch {
                '(' => depth += 1,
                ')' => depth -= 1,
                ',' | ';' if depth == 0 => {
                    parts.push(&text[start..i]);
                    start = i + 1;
                }
                _ => {}
            }
        }
        parts.push(&text[start..]);
    } else {
        parts.extend(text.split(';'));
    }
    parts
        .into_iter()
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| Permutation::parse(p, degree))
        .collect()
}

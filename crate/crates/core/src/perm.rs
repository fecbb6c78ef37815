//! Permutations of `{0, .., n-1}` in passive (image-sequence) form.
//!
//! A permutation acts on the right: `i.then(a).then(b)` is written `compose(a, b)`
//! and means "apply `a`, then `b`". The Hamming distance between two permutations
//! is the number of points on which their images differ.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use thiserror::Error;

/// Largest supported degree; points are stored as bytes.
pub const MAX_DEGREE: usize = 255;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("degree must be at least 1")]
    ZeroDegree,
    #[error("degree {0} exceeds the supported maximum of 255")]
    DegreeTooLarge(usize),
    #[error("point {point} is out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("image sequence is not a bijection (value {0} repeated)")]
    NotABijection(usize),
    #[error("cannot parse `{token}`: {reason}")]
    Parse { token: String, reason: &'static str },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_even(self) -> bool {
        self == Parity::Even
    }

    fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }
}

impl core::ops::BitXor for Parity {
    type Output = Parity;

    fn bitxor(self, rhs: Parity) -> Parity {
        if rhs.is_even() {
            self
        } else {
            self.flip()
        }
    }
}

/// A bijection on `{0, .., n-1}`; position `i` holds the image of `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

fn check_degree(n: usize) -> Result<(), PermError> {
    if n == 0 {
        Err(PermError::ZeroDegree)
    } else if n > MAX_DEGREE {
        Err(PermError::DegreeTooLarge(n))
    } else {
        Ok(())
    }
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        assert!((1..=MAX_DEGREE).contains(&n), "invalid degree {n}");
        Permutation {
            images: (0..n as u8).collect(),
        }
    }

    pub fn from_images<I: IntoIterator<Item = usize>>(images: I) -> Result<Permutation, PermError> {
        let images: Vec<usize> = images.into_iter().collect();
        let n = images.len();
        check_degree(n)?;
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n {
                return Err(PermError::PointOutOfRange { point: v, degree: n });
            }
            if seen[v] {
                return Err(PermError::NotABijection(v));
            }
            seen[v] = true;
        }
        Ok(Permutation {
            images: images.into_iter().map(|v| v as u8).collect(),
        })
    }

    /// Builds a permutation from a list of disjoint cycles; unlisted points are fixed.
    pub fn from_cycles<C: AsRef<[usize]>>(n: usize, cycles: &[C]) -> Result<Permutation, PermError> {
        check_degree(n)?;
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            let cycle = cycle.as_ref();
            for &p in cycle {
                if p >= n {
                    return Err(PermError::PointOutOfRange { point: p, degree: n });
                }
                if touched[p] {
                    return Err(PermError::NotABijection(p));
                }
                touched[p] = true;
            }
            for (k, &p) in cycle.iter().enumerate() {
                images[p] = cycle[(k + 1) % cycle.len()];
            }
        }
        Permutation::from_images(images)
    }

    /// The standard `n`-cycle `i -> i + 1 (mod n)`.
    pub fn standard_cycle(n: usize) -> Permutation {
        Permutation {
            images: (0..n).map(|i| ((i + 1) % n) as u8).collect(),
        }
    }

    /// `i -> (a*i + b) mod n`; `a` must be a unit modulo `n`.
    pub fn affine_mod(n: usize, a: usize, b: usize) -> Result<Permutation, PermError> {
        Permutation::from_images((0..n).map(|i| (a * i + b) % n))
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn image(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    /// Apply `self`, then `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.then(other))
    }

    /// Unchecked composition: apply `self`, then `other`. Panics on degree mismatch.
    #[inline]
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            images: self.images.iter().map(|&v| other.images[v as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u8; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v as usize] = i as u8;
        }
        Permutation { images }
    }

    pub fn pow(&self, exp: i64) -> Permutation {
        let base = if exp < 0 { self.inverse() } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = Permutation::identity(self.degree());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.then(&sq);
            }
            sq = sq.then(&sq);
            e >>= 1;
        }
        acc
    }

    /// Conjugate `h^-1 * self * h`, i.e. relabel points through `h`.
    pub fn conjugate_by(&self, h: &Permutation) -> Permutation {
        h.inverse().then(self).then(h)
    }

    /// Number of points where the two permutations agree. Panics on degree mismatch.
    #[inline]
    pub fn agreements(&self, other: &Permutation) -> usize {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        self.images
            .iter()
            .zip(other.images.iter())
            .filter(|(a, b)| a == b)
            .count()
    }

    /// Hamming distance without the degree check. Panics on degree mismatch.
    #[inline]
    pub fn distance(&self, other: &Permutation) -> usize {
        self.degree() - self.agreements(other)
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.degree()).filter(|&i| self.image(i) == i).collect()
    }

    pub fn is_fixed_point_free(&self) -> bool {
        (0..self.degree()).all(|i| self.image(i) != i)
    }

    pub fn cycle_structure(&self) -> CycleStructure {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        let mut fixed_points = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut p = self.image(start);
            while p != start {
                seen[p] = true;
                cycle.push(p);
                p = self.image(p);
            }
            if cycle.len() == 1 {
                fixed_points.push(start);
            } else {
                cycles.push(cycle);
            }
        }
        CycleStructure {
            degree: n,
            cycles,
            fixed_points,
        }
    }

    pub fn parity(&self) -> Parity {
        let even_cycles = self
            .cycle_structure()
            .lengths()
            .filter(|l| l % 2 == 0)
            .count();
        if even_cycles % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Order of the permutation as a group element.
    pub fn order(&self) -> u64 {
        self.cycle_structure()
            .lengths()
            .fold(1u64, |acc, l| lcm(acc, l as u64))
    }

    pub fn cycle_notation(&self) -> String {
        let cs = self.cycle_structure();
        if cs.cycles.is_empty() {
            return String::from("()");
        }
        let mut out = String::new();
        for cycle in &cs.cycles {
            out.push('(');
            for (k, p) in cycle.iter().enumerate() {
                if k > 0 {
                    out.push(' ');
                }
                push_usize(&mut out, *p);
            }
            out.push(')');
        }
        out
    }

    /// Parses image notation (`"2,0,1"`) or cycle notation (`"(0 1 2)(3 4)"`).
    /// Cycle notation needs `degree` unless the largest listed point determines it.
    pub fn parse(text: &str, degree: Option<usize>) -> Result<Permutation, PermError> {
        let text = text.trim();
        if text.starts_with('(') {
            parse_cycles(text, degree)
        } else {
            let p = parse_images(text)?;
            if let Some(n) = degree {
                if n != p.degree() {
                    return Err(PermError::DegreeMismatch {
                        left: p.degree(),
                        right: n,
                    });
                }
            }
            Ok(p)
        }
    }
}

fn push_usize(out: &mut String, v: usize) {
    use core::fmt::Write;
    let _ = write!(out, "{v}");
}

fn parse_point(token: &str) -> Result<usize, PermError> {
    token.parse::<usize>().map_err(|_| PermError::Parse {
        token: String::from(token),
        reason: "expected a non-negative integer point",
    })
}

fn parse_images(text: &str) -> Result<Permutation, PermError> {
    let mut images = Vec::new();
    for token in text.split(',') {
        let token = token.trim();
        if token.is_empty() {
            return Err(PermError::Parse {
                token: String::from(text),
                reason: "empty entry in image list",
            });
        }
        images.push(parse_point(token)?);
    }
    Permutation::from_images(images)
}

fn parse_cycles(text: &str, degree: Option<usize>) -> Result<Permutation, PermError> {
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        if !rest.starts_with('(') {
            return Err(PermError::Parse {
                token: String::from(rest),
                reason: "expected `(` to open a cycle",
            });
        }
        let close = rest.find(')').ok_or_else(|| PermError::Parse {
            token: String::from(rest),
            reason: "unterminated cycle",
        })?;
        let body = &rest[1..close];
        let mut cycle = Vec::new();
        for token in body.split(|c: char| c == ',' || c.is_whitespace()) {
            if !token.is_empty() {
                cycle.push(parse_point(token)?);
            }
        }
        if cycle.len() > 1 {
            cycles.push(cycle);
        }
        rest = rest[close + 1..].trim_start();
    }
    let max_point = cycles.iter().flatten().copied().max();
    let n = match (degree, max_point) {
        (Some(n), _) => n,
        (None, Some(m)) => m + 1,
        (None, None) => {
            return Err(PermError::Parse {
                token: String::from(text),
                reason: "degree required for the identity in cycle notation",
            })
        }
    };
    Permutation::from_cycles(n, &cycles)
}

impl FromStr for Permutation {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Permutation::parse(s, None)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// Hamming distance: the number of points whose images differ.
pub fn hamming_distance(a: &Permutation, b: &Permutation) -> Result<usize, PermError> {
    if a.degree() != b.degree() {
        return Err(PermError::DegreeMismatch {
            left: a.degree(),
            right: b.degree(),
        });
    }
    Ok(a.distance(b))
}

/// Disjoint nontrivial cycles (in order of their least point) plus fixed points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleStructure {
    pub degree: usize,
    pub cycles: Vec<Vec<usize>>,
    pub fixed_points: Vec<usize>,
}

impl CycleStructure {
    pub fn lengths(&self) -> impl Iterator<Item = usize> + '_ {
        self.cycles.iter().map(|c| c.len())
    }

    /// Number of nontrivial cycles.
    pub fn count(&self) -> usize {
        self.cycles.len()
    }

    /// Number of moved points, i.e. the distance to the identity.
    pub fn support_size(&self) -> usize {
        self.lengths().sum()
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// Iterates over all of `S_n` in lexicographic order of image sequences.
pub struct AllPermutations {
    current: Option<Vec<u8>>,
}

pub fn all_permutations(n: usize) -> AllPermutations {
    assert!((1..=MAX_DEGREE).contains(&n), "invalid degree {n}");
    AllPermutations {
        current: Some((0..n as u8).collect()),
    }
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let cur = self.current.take()?;
        let out = Permutation { images: cur.clone() };
        let mut next = cur;
        if next_lex(&mut next) {
            self.current = Some(next);
        }
        Some(out)
    }
}

/// Advances to the next permutation in lexicographic order; false when exhausted.
pub(crate) fn next_lex(a: &mut [u8]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn distance_identity_and_transposition() {
        let id4 = Permutation::identity(4);
        assert_eq!(hamming_distance(&id4, &id4).unwrap(), 0);
        let id3 = Permutation::identity(3);
        let t = Permutation::from_cycles(3, &[[0, 1]]).unwrap();
        assert_eq!(hamming_distance(&id3, &t).unwrap(), 2);
    }

    #[test]
    fn distance_degree_mismatch() {
        let err = hamming_distance(&Permutation::identity(3), &Permutation::identity(4));
        assert_eq!(err, Err(PermError::DegreeMismatch { left: 3, right: 4 }));
        assert!(Permutation::identity(3)
            .compose(&Permutation::identity(2))
            .is_err());
    }

    #[test]
    fn cycle_structure_examples() {
        let cs = Permutation::identity(5).cycle_structure();
        assert_eq!(cs.count(), 0);
        assert_eq!(cs.fixed_points, vec![0, 1, 2, 3, 4]);

        let cs = Permutation::from_cycles(4, &[[0, 1], [2, 3]]).unwrap().cycle_structure();
        assert_eq!(cs.lengths().collect::<Vec<_>>(), vec![2, 2]);
        assert!(cs.fixed_points.is_empty());
    }

    #[test]
    fn cycle_lengths_sum_to_distance_over_s5() {
        let id = Permutation::identity(5);
        for q in all_permutations(5) {
            assert_eq!(q.cycle_structure().support_size(), q.distance(&id));
        }
    }

    #[test]
    fn parity_examples() {
        assert_eq!(Permutation::identity(4).parity(), Parity::Even);
        assert_eq!(p("(0 1)").parity(), Parity::Odd);
        assert_eq!(Permutation::standard_cycle(5).parity(), Parity::Even);
        assert_eq!(Permutation::standard_cycle(4).parity(), Parity::Odd);
    }

    #[test]
    fn compose_and_inverse() {
        let a = p("1,2,0,4,3");
        let id = Permutation::identity(5);
        assert_eq!(a.then(&id), a);
        assert_eq!(a.then(&a.inverse()), id);
        // apply a, then b
        let b = Permutation::parse("(0 3)", Some(5)).unwrap();
        let ab = a.compose(&b).unwrap();
        for i in 0..5 {
            assert_eq!(ab.image(i), b.image(a.image(i)));
        }
    }

    #[test]
    fn power_and_order() {
        let k = Permutation::standard_cycle(6);
        assert_eq!(k.order(), 6);
        assert_eq!(k.pow(6), Permutation::identity(6));
        assert_eq!(k.pow(-1), k.inverse());
        assert_eq!(k.pow(2).then(&k), k.pow(3));
        assert_eq!(p("(0 1)(2 3 4)").order(), 6);
    }

    #[test]
    fn parse_and_display() {
        let c = Permutation::parse("(0 1 2)", Some(3)).unwrap();
        assert_eq!(c.to_string(), "1,2,0");
        assert_eq!(p("2,0,1").cycle_notation(), "(0 2 1)");
        assert_eq!(Permutation::parse("()", Some(3)).unwrap(), Permutation::identity(3));
        assert_eq!(Permutation::parse("(0,3)(1 2)", Some(5)).unwrap().to_string(), "3,2,1,0,4");
        assert!(matches!(
            Permutation::parse("0,x,1", None),
            Err(PermError::Parse { ref token, .. }) if token == "x"
        ));
        assert!(matches!(
            Permutation::parse("0,0,1", None),
            Err(PermError::NotABijection(0))
        ));
        assert!(Permutation::parse("(0 5)", Some(3)).is_err());
        assert!(Permutation::parse("(0 1", Some(3)).is_err());
        assert!(Permutation::parse("1,0", Some(3)).is_err());
    }

    #[test]
    fn enumerates_symmetric_group() {
        assert_eq!(all_permutations(5).count(), 120);
        let v: Vec<_> = all_permutations(3).map(|q| q.to_string()).collect();
        assert_eq!(v, ["0,1,2", "0,2,1", "1,0,2", "1,2,0", "2,0,1", "2,1,0"]);
    }
}

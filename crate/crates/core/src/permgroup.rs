//! Permutations of `{1..n}` and bounded computations in the groups they generate.
//!
//! Composition is right-to-left everywhere in this crate: `p.compose(&q)` is the
//! permutation `i -> p(q(i))`, i.e. `q` is applied first.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest degree accepted by [`pair_conjugator`] unless the caller raises it.
pub const DEFAULT_SCAN_DEGREE: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("point {point} out of range 1..={degree}")]
    OutOfRange { point: usize, degree: usize },
    #[error("point {0} repeated")]
    RepeatedPoint(usize),
    #[error("degree must be positive")]
    ZeroDegree,
    #[error("closure exceeded cap {cap} ({partial} elements found)")]
    CapExceeded { cap: usize, partial: usize },
    #[error("degree {degree} exceeds scan bound {bound}")]
    DegreeTooLarge { degree: usize, bound: usize },
    #[error("generator set is empty")]
    EmptyGenerators,
    #[error("cannot parse permutation: {0}")]
    Parse(String),
}

impl PermError {
    /// Short variant name, used for diagnostics.
    pub fn name(&self) -> &'static str {
        match self {
            PermError::DegreeMismatch { .. } => "DegreeMismatch",
            PermError::OutOfRange { .. } => "OutOfRange",
            PermError::RepeatedPoint(_) => "RepeatedPoint",
            PermError::ZeroDegree => "ZeroDegree",
            PermError::CapExceeded { .. } => "CapExceeded",
            PermError::DegreeTooLarge { .. } => "DegreeTooLarge",
            PermError::EmptyGenerators => "EmptyGenerators",
            PermError::Parse(_) => "Parse",
        }
    }
}

/// A permutation of `{1..n}` stored as its image array (0-based internally).
///
/// The derived ordering is lexicographic on the image sequence, which is the
/// canonical ordering of every set-valued output in the crate.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u32>,
}

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        assert!(degree > 0, "permutation degree must be positive");
        Perm {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from 1-based images: `images[i-1]` is the image of `i`.
    pub fn from_images(images: &[usize]) -> Result<Perm, PermError> {
        let degree = images.len();
        if degree == 0 {
            return Err(PermError::ZeroDegree);
        }
        let mut seen = vec![false; degree];
        let mut out = Vec::with_capacity(degree);
        for &img in images {
            if img == 0 || img > degree {
                return Err(PermError::OutOfRange { point: img, degree });
            }
            if seen[img - 1] {
                return Err(PermError::RepeatedPoint(img));
            }
            seen[img - 1] = true;
            out.push((img - 1) as u32);
        }
        Ok(Perm { images: out })
    }

    /// Product of disjoint cycles given with 1-based entries; unlisted points are fixed.
    pub fn from_cycles<C: AsRef<[usize]>>(cycles: &[C], degree: usize) -> Result<Perm, PermError> {
        if degree == 0 {
            return Err(PermError::ZeroDegree);
        }
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            let cycle = cycle.as_ref();
            for &p in cycle {
                if p == 0 || p > degree {
                    return Err(PermError::OutOfRange { point: p, degree });
                }
                if used[p - 1] {
                    return Err(PermError::RepeatedPoint(p));
                }
                used[p - 1] = true;
            }
            for (k, &p) in cycle.iter().enumerate() {
                let next = cycle[(k + 1) % cycle.len()];
                images[p - 1] = (next - 1) as u32;
            }
        }
        Ok(Perm { images })
    }

    /// Transposition of the 1-based points `i` and `j`.
    pub fn transposition(degree: usize, i: usize, j: usize) -> Result<Perm, PermError> {
        Perm::from_cycles(&[[i, j]], degree)
    }

    /// The cycle `(1 2 .. n)`.
    pub fn long_cycle(degree: usize) -> Perm {
        let mut images: Vec<u32> = (1..degree as u32).collect();
        images.push(0);
        Perm { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 1-based point.
    pub fn apply(&self, point: usize) -> usize {
        self.images[point - 1] as usize + 1
    }

    /// 1-based image sequence.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    pub(crate) fn raw_images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Result<Perm, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.mul(other))
    }

    /// Unchecked composition for callers that already guarantee equal degrees.
    pub(crate) fn mul(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: other.images.iter().map(|&x| self.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Perm { images: inv }
    }

    pub fn pow(&self, exp: i64) -> Perm {
        let base = if exp < 0 { self.inverse() } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = Perm::identity(self.degree());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            sq = sq.mul(&sq);
            e >>= 1;
        }
        acc
    }

    /// `g ∘ self ∘ g⁻¹`.
    pub fn conjugate_by(&self, g: &Perm) -> Result<Perm, PermError> {
        if self.degree() != g.degree() {
            return Err(PermError::DegreeMismatch {
                left: self.degree(),
                right: g.degree(),
            });
        }
        Ok(self.conj(g))
    }

    pub(crate) fn conj(&self, g: &Perm) -> Perm {
        // (g p g⁻¹)(g(i)) = g(p(i))
        let mut out = vec![0u32; self.images.len()];
        for (i, &pi) in self.images.iter().enumerate() {
            out[g.images[i] as usize] = g.images[pi as usize];
        }
        Perm { images: out }
    }

    pub fn commutes_with(&self, other: &Perm) -> bool {
        self.degree() == other.degree() && self.mul(other) == other.mul(self)
    }

    /// Non-trivial cycles, 1-based, each starting at its smallest point,
    /// ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] as usize == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.images[x] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle lengths including fixed points, sorted descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lens = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                len += 1;
                x = self.images[x] as usize;
            }
            lens.push(len);
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    /// Least `k ≥ 1` with `self^k = id`, the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycle_type()
            .into_iter()
            .fold(1u64, |acc, len| acc.lcm(&(len as u64)))
    }

    /// Parses cycle notation such as `(5,4,1)(2,6)` or `(1 2 3)(4..8)`;
    /// `()` or an empty string is the identity.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Perm, PermError> {
        let cycles = parse_cycle_list(text)?;
        Perm::from_cycles(&cycles, degree)
    }
}

fn parse_cycle_list(text: &str) -> Result<Vec<Vec<usize>>, PermError> {
    let err = || PermError::Parse(text.to_string());
    let mut cycles = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        if !rest.starts_with('(') {
            return Err(err());
        }
        let close = rest.find(')').ok_or_else(err)?;
        let body = &rest[1..close];
        let mut cycle = Vec::new();
        for tok in body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
        {
            if let Some((lo, hi)) = tok.split_once("..") {
                let lo: usize = lo.parse().map_err(|_| err())?;
                let hi: usize = hi.parse().map_err(|_| err())?;
                if hi < lo {
                    return Err(err());
                }
                cycle.extend(lo..=hi);
            } else {
                cycle.push(tok.parse().map_err(|_| err())?);
            }
        }
        if cycle.len() > 1 {
            cycles.push(cycle);
        }
        rest = rest[close + 1..].trim_start();
    }
    Ok(cycles)
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (k, p) in c.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm[{}]{}", self.degree(), self)
    }
}

/// Parses `"<degree>:<cycles>"`, e.g. `"7:(5,4,1)(2,6)"`.
impl FromStr for Perm {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (deg, cycles) = s.split_once(':').ok_or_else(|| PermError::Parse(s.to_string()))?;
        let degree: usize = deg.trim().parse().map_err(|_| PermError::Parse(s.to_string()))?;
        Perm::parse_cycles(cycles, degree)
    }
}

#[derive(Serialize, Deserialize)]
struct PermRepr {
    degree: usize,
    cycles: Vec<Vec<usize>>,
}

impl Serialize for Perm {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        PermRepr {
            degree: self.degree(),
            cycles: self.cycles(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Perm {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = PermRepr::deserialize(deserializer)?;
        Perm::from_cycles(&repr.cycles, repr.degree).map_err(serde::de::Error::custom)
    }
}

/// A deduplicated, canonically sorted set of permutations of one degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementSet {
    degree: usize,
    members: Vec<Perm>,
}

impl ElementSet {
    pub fn new(degree: usize, members: impl IntoIterator<Item = Perm>) -> Result<ElementSet, PermError> {
        if degree == 0 {
            return Err(PermError::ZeroDegree);
        }
        let mut members: Vec<Perm> = members.into_iter().collect();
        if let Some(p) = members.iter().find(|p| p.degree() != degree) {
            return Err(PermError::DegreeMismatch {
                left: degree,
                right: p.degree(),
            });
        }
        members.sort_unstable();
        members.dedup();
        Ok(ElementSet { degree, members })
    }

    /// Builds from a nonempty collection, taking the degree from the first member.
    pub fn from_perms(members: impl IntoIterator<Item = Perm>) -> Result<ElementSet, PermError> {
        let members: Vec<Perm> = members.into_iter().collect();
        let degree = members.first().ok_or(PermError::EmptyGenerators)?.degree();
        ElementSet::new(degree, members)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[Perm] {
        &self.members
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Perm> {
        self.members.iter()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.members.binary_search(p).is_ok()
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        let members = self.members.iter().filter(|p| other.contains(p)).cloned().collect();
        ElementSet {
            degree: self.degree,
            members,
        }
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.members.iter().all(|p| other.contains(p))
    }
}

impl<'a> IntoIterator for &'a ElementSet {
    type Item = &'a Perm;
    type IntoIter = std::slice::Iter<'a, Perm>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

impl Serialize for ElementSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.members.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ElementSet {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let members = Vec::<Perm>::deserialize(deserializer)?;
        ElementSet::from_perms(members).map_err(serde::de::Error::custom)
    }
}

/// Subgroup generated by `generators`, by breadth-first multiplication.
///
/// Fails with [`PermError::CapExceeded`] as soon as more than `cap` distinct
/// elements have been found.
pub fn closure(generators: &ElementSet, cap: usize) -> Result<ElementSet, PermError> {
    let first = generators.members().first().ok_or(PermError::EmptyGenerators)?;
    let degree = first.degree();
    let gens = generators.members();
    let id = Perm::identity(degree);
    let mut seen: HashSet<Perm> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(id.clone());
    queue.push_back(id);
    if cap == 0 {
        return Err(PermError::CapExceeded { cap, partial: 1 });
    }
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = g.mul(&x);
            if !seen.contains(&y) {
                if seen.len() >= cap {
                    return Err(PermError::CapExceeded {
                        cap,
                        partial: seen.len() + 1,
                    });
                }
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    // Finite group: closure under left multiplication by generators from the
    // identity is already closed under inverses.
    ElementSet::new(degree, seen)
}

/// Convenience wrapper around [`closure`] for a slice of generators.
pub fn generate(generators: &[Perm], cap: usize) -> Result<ElementSet, PermError> {
    closure(&ElementSet::from_perms(generators.iter().cloned())?, cap)
}

/// Outcome of [`pair_conjugator`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjugatorSearch {
    /// Lexicographically smallest `g` with `g a g⁻¹ = a2` and `g c g⁻¹ = c2`.
    pub witness: Option<Perm>,
    /// Set for degree 6, where `S_6` has outer automorphisms that this
    /// search (inner automorphisms only) does not see.
    pub outer_automorphism_caveat: bool,
}

/// Exhaustive search over `S_n` for a simultaneous conjugator carrying
/// `(a, c)` to `(a2, c2)`.
///
/// The scan assigns `g(1), g(2), ...` in increasing order and propagates the
/// constraints `g(a(x)) = a2(g(x))`, `g(c(x)) = c2(g(x))`, so the first
/// complete assignment is the lexicographically smallest witness.
pub fn pair_conjugator(a: &Perm, c: &Perm, a2: &Perm, c2: &Perm, bound: usize) -> Result<ConjugatorSearch, PermError> {
    let n = a.degree();
    for p in [c, a2, c2] {
        if p.degree() != n {
            return Err(PermError::DegreeMismatch {
                left: n,
                right: p.degree(),
            });
        }
    }
    if n > bound {
        return Err(PermError::DegreeTooLarge { degree: n, bound });
    }
    let outer_automorphism_caveat = n == 6;
    if n == 6 {
        log::warn!("degree 6: only inner automorphisms are searched; Out(S6) is nontrivial");
    }
    if a.cycle_type() != a2.cycle_type() || c.cycle_type() != c2.cycle_type() {
        return Ok(ConjugatorSearch {
            witness: None,
            outer_automorphism_caveat,
        });
    }
    let mut scan = ConjugatorScan {
        n,
        sources: [a.raw_images(), c.raw_images()],
        targets: [a2.raw_images(), c2.raw_images()],
        map: vec![u32::MAX; n],
        used: vec![false; n],
    };
    let witness = if scan.search(0) {
        Some(Perm { images: scan.map })
    } else {
        None
    };
    Ok(ConjugatorSearch {
        witness,
        outer_automorphism_caveat,
    })
}

struct ConjugatorScan<'a> {
    n: usize,
    sources: [&'a [u32]; 2],
    targets: [&'a [u32]; 2],
    map: Vec<u32>,
    used: Vec<bool>,
}

impl ConjugatorScan<'_> {
    fn search(&mut self, from: usize) -> bool {
        let Some(x) = (from..self.n).find(|&x| self.map[x] == u32::MAX) else {
            return true;
        };
        for y in 0..self.n as u32 {
            if self.used[y as usize] {
                continue;
            }
            let mut trail = Vec::new();
            if self.assign(x as u32, y, &mut trail) && self.search(x + 1) {
                return true;
            }
            for p in trail {
                self.used[self.map[p as usize] as usize] = false;
                self.map[p as usize] = u32::MAX;
            }
        }
        false
    }

    /// Sets `g(x) = y` and propagates; records every newly assigned point in `trail`.
    fn assign(&mut self, x: u32, y: u32, trail: &mut Vec<u32>) -> bool {
        let mut stack = vec![(x, y)];
        while let Some((x, y)) = stack.pop() {
            let cur = self.map[x as usize];
            if cur != u32::MAX {
                if cur != y {
                    return false;
                }
                continue;
            }
            if self.used[y as usize] {
                return false;
            }
            self.map[x as usize] = y;
            self.used[y as usize] = true;
            trail.push(x);
            for k in 0..2 {
                stack.push((self.sources[k][x as usize], self.targets[k][y as usize]));
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cyc(text: &str, n: usize) -> Perm {
        Perm::parse_cycles(text, n).unwrap()
    }

    #[test]
    fn compose_examples() {
        let t = cyc("(1,2)", 2);
        assert!(t.compose(&t).unwrap().is_identity());
        let p = cyc("(1,2)", 3).compose(&cyc("(2,3)", 3)).unwrap();
        // 1 -> 1 -> 2, 2 -> 3 -> 3, 3 -> 2 -> 1
        assert_eq!(p, cyc("(1,2,3)", 3));
        assert_eq!(
            cyc("(1,2)", 2).compose(&cyc("(1,2)", 3)),
            Err(PermError::DegreeMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn from_cycles_examples() {
        let a = Perm::from_cycles(&[vec![5, 4, 1], vec![2, 6]], 7).unwrap();
        assert_eq!(a.order(), 6);
        assert!(Perm::from_cycles::<Vec<usize>>(&[], 5).unwrap().is_identity());
        let c = Perm::from_cycles(&[vec![1, 2, 3], vec![4, 5, 6, 7]], 7).unwrap();
        assert_eq!(c.order(), 12);
        assert_eq!(
            Perm::from_cycles(&[vec![1, 8]], 7),
            Err(PermError::OutOfRange { point: 8, degree: 7 })
        );
        assert_eq!(
            Perm::from_cycles(&[vec![1, 2], vec![2, 3]], 7),
            Err(PermError::RepeatedPoint(2))
        );
    }

    #[test]
    fn order_examples() {
        assert_eq!(Perm::identity(4).order(), 1);
        assert_eq!(cyc("(1,2,3)(4..8)", 8).order(), 15);
    }

    #[test]
    fn parse_and_display() {
        let p = cyc("(5,4,1)(2,6)", 7);
        assert_eq!(p.to_string(), "(1,5,4)(2,6)");
        assert_eq!(cyc("(1 2 3)(4..7)", 7), cyc("(1,2,3)(4,5,6,7)", 7));
        assert_eq!(cyc("()", 3), Perm::identity(3));
        assert_eq!("7:(5,4,1)(2,6)".parse::<Perm>().unwrap(), p);
        assert!(Perm::parse_cycles("(1,2", 3).is_err());
    }

    #[test]
    fn closure_examples() {
        let s3 = generate(&[cyc("(1,2)", 3), cyc("(1,2,3)", 3)], 10).unwrap();
        assert_eq!(s3.len(), 6);
        let id = generate(&[Perm::identity(4)], 1).unwrap();
        assert_eq!(id.members(), &[Perm::identity(4)]);
        let err = generate(&[cyc("(1,2)", 3), cyc("(1,2,3)", 3)], 4).unwrap_err();
        assert!(matches!(err, PermError::CapExceeded { cap: 4, .. }));
    }

    #[test]
    fn closure_is_sorted() {
        let g = generate(&[cyc("(1,2,3,4)", 4), cyc("(1,2)", 4)], 100).unwrap();
        assert_eq!(g.len(), 24);
        assert!(g.members().windows(2).all(|w| w[0] < w[1]));
        assert!(g.members()[0].is_identity());
    }

    #[test]
    fn conjugator_examples() {
        let a = cyc("(1,2)", 3);
        let c = cyc("(2,3)", 3);
        // (1,2) fixes (1,2) and carries (2,3) to (1,3).
        let r = pair_conjugator(&a, &c, &a, &cyc("(1,3)", 3), 9).unwrap();
        assert_eq!(r.witness, Some(a.clone()));
        // A conjugator would have to map both {1,2} and {2,3} onto {1,2}.
        let r = pair_conjugator(&a, &c, &a, &a, 9).unwrap();
        assert_eq!(r.witness, None);
        let r = pair_conjugator(&a, &c, &a, &c, 9).unwrap();
        assert_eq!(r.witness, Some(Perm::identity(3)));
    }

    #[test]
    fn conjugator_degree_bound() {
        let p = Perm::identity(10);
        assert_eq!(
            pair_conjugator(&p, &p, &p, &p, 9),
            Err(PermError::DegreeTooLarge { degree: 10, bound: 9 })
        );
        let q = Perm::identity(6);
        assert!(pair_conjugator(&q, &q, &q, &q, 9).unwrap().outer_automorphism_caveat);
    }

    #[test]
    fn json_shape() {
        let p = cyc("(5,4,1)(2,6)", 7);
        let v = serde_json::to_value(&p).unwrap();
        assert_eq!(v, serde_json::json!({"degree": 7, "cycles": [[1,5,4],[2,6]]}));
        let back: Perm = serde_json::from_value(v).unwrap();
        assert_eq!(back, p);
    }

    fn perm_strategy(n: usize) -> impl Strategy<Value = Perm> {
        Just((1..=n).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Perm::from_images(&v).unwrap())
    }

    fn triple(n: usize) -> impl Strategy<Value = (Perm, Perm, Perm)> {
        (perm_strategy(n), perm_strategy(n), perm_strategy(n))
    }

    proptest! {
        #[test]
        fn group_laws((p, q, r) in (1usize..=8).prop_flat_map(triple)) {
            let lhs = p.compose(&q).unwrap().compose(&r).unwrap();
            let rhs = p.compose(&q.compose(&r).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
            prop_assert!(p.compose(&p.inverse()).unwrap().is_identity());
            prop_assert_eq!(p.compose(&Perm::identity(p.degree())).unwrap(), p.clone());
        }

        #[test]
        fn conjugation_preserves_order((p, g, _) in (1usize..=8).prop_flat_map(triple)) {
            let conj = g.compose(&p.compose(&g.inverse()).unwrap()).unwrap();
            prop_assert_eq!(conj.order(), p.order());
            prop_assert_eq!(p.conjugate_by(&g).unwrap(), conj);
        }

        #[test]
        fn closure_is_a_group((p, q, _) in (1usize..=5).prop_flat_map(triple)) {
            let g = generate(&[p, q], 200).unwrap();
            for x in g.iter() {
                prop_assert!(g.contains(&x.inverse()));
                for y in g.iter() {
                    prop_assert!(g.contains(&x.mul(y)));
                }
            }
        }

        #[test]
        fn conjugator_found_is_verified((a, c, g) in (1usize..=7).prop_flat_map(triple)) {
            let a2 = a.conj(&g);
            let c2 = c.conj(&g);
            let r = pair_conjugator(&a, &c, &a2, &c2, 9).unwrap();
            let w = r.witness.expect("a conjugator exists by construction");
            prop_assert_eq!(a.conj(&w), a2);
            prop_assert_eq!(c.conj(&w), c2);
            prop_assert!(w <= g);
        }

        #[test]
        fn pow_matches_repeated_compose(p in (1usize..=7).prop_flat_map(perm_strategy), k in -10i64..10) {
            let mut acc = Perm::identity(p.degree());
            let step = if k < 0 { p.inverse() } else { p.clone() };
            for _ in 0..k.unsigned_abs() {
                acc = acc.mul(&step);
            }
            prop_assert_eq!(p.pow(k), acc);
        }
    }
}

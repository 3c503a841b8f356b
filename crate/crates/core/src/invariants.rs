//! Numerical invariants of bidouble covers of the quadric, (a,b,c)-surfaces
//! and Manetti surfaces, with topological comparison tests and the
//! box-principle search for homeomorphic, non-diffeomorphic families.

use std::collections::HashSet;
use std::fmt;

use itertools::Itertools;
use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
    #[error("test not applicable: {0}")]
    NotApplicable(String),
    #[error("no family of size {h} with exponent <= {max_exponent} and scale <= {max_scale}")]
    NotFoundWithinBound {
        h: usize,
        max_exponent: u32,
        max_scale: u64,
    },
}

impl InvariantError {
    pub fn name(&self) -> &'static str {
        match self {
            InvariantError::OutOfRange(_) => "OutOfRange",
            InvariantError::Overflow(_) => "Overflow",
            InvariantError::NotApplicable(_) => "NotApplicable",
            InvariantError::NotFoundWithinBound { .. } => "NotFoundWithinBound",
        }
    }
}

fn narrow(x: i128, what: &'static str) -> Result<i64, InvariantError> {
    i64::try_from(x).map_err(|_| InvariantError::Overflow(what))
}

/// Bidouble cover of `P¹ × P¹` branched on curves of bidegrees `(2a, 2b)` and `(2c, 2d)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BidoubleType {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub d: u64,
}

impl BidoubleType {
    pub fn new(a: u64, b: u64, c: u64, d: u64) -> BidoubleType {
        BidoubleType { a, b, c, d }
    }

    /// Swaps the two branch curves.
    pub fn swapped(self) -> BidoubleType {
        BidoubleType::new(self.c, self.d, self.a, self.b)
    }
}

impl fmt::Display for BidoubleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})({},{})", self.a, self.b, self.c, self.d)
    }
}

/// Invariants of a minimal surface of general type. `r` is the divisibility of
/// the canonical class in `H²(S, Z)`, when known.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SurfaceInvariants {
    pub chi: i64,
    pub p_g: i64,
    pub k2: i64,
    pub e: i64,
    pub sigma: i64,
    pub r: Option<u64>,
    pub simply_connected: bool,
}

impl SurfaceInvariants {
    /// Fills in `e` (Noether) and `σ` (index theorem) from `χ` and `K²`, with `q = 0`.
    pub fn from_chi_k2(chi: i128, k2: i128, r: Option<u64>, simply_connected: bool) -> Result<Self, InvariantError> {
        let e = 12 * chi - k2;
        let sigma = k2 - 8 * chi;
        assert_eq!(3 * sigma, k2 - 2 * e, "index theorem");
        Ok(SurfaceInvariants {
            chi: narrow(chi, "chi")?,
            p_g: narrow(chi - 1, "p_g")?,
            k2: narrow(k2, "K^2")?,
            e: narrow(e, "e")?,
            sigma: narrow(sigma, "sigma")?,
            r,
            simply_connected,
        })
    }

    /// Second Betti number `e − 2` of a simply connected surface.
    pub fn b2(&self) -> i64 {
        self.e - 2
    }
}

/// `p_g = (a−1)(b−1) + (c−1)(d−1) + (a+c−1)(b+d−1)`, `q = 0`,
/// `K² = 8(a+c−2)(b+d−2)`, `r = gcd(a+c−2, b+d−2)`; simply connected.
pub fn bidouble_invariants(t: BidoubleType) -> Result<SurfaceInvariants, InvariantError> {
    let BidoubleType { a, b, c, d } = t;
    if a.min(b).min(c).min(d) < 1 || a + c < 3 || b + d < 3 {
        return Err(InvariantError::OutOfRange(format!(
            "type {t} needs all entries >= 1, a+c >= 3 and b+d >= 3"
        )));
    }
    let [a, b, c, d] = [a, b, c, d].map(|x| x as i128);
    let p_g = (a - 1) * (b - 1) + (c - 1) * (d - 1) + (a + c - 1) * (b + d - 1);
    let u = a + c - 2;
    let v = b + d - 2;
    let r = (u as u64).gcd(&(v as u64));
    SurfaceInvariants::from_chi_k2(1 + p_g, 8 * u * v, Some(r), true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbcInvariants {
    pub surface: SurfaceInvariants,
    /// `(b+1)(4a+c+3) + 2b(a+c+1) − 8`.
    pub moduli_dimension: i64,
    /// Whether the non-deformation hypotheses hold for some admissible `k`,
    /// the range where the dimension count applies.
    pub moduli_dimension_valid: bool,
}

/// (a,b,c)-surfaces: bidouble covers of type `(2a,2b),(2c,2b)`.
pub fn abc_invariants(a: u64, b: u64, c: u64) -> Result<AbcInvariants, InvariantError> {
    if a < 1 || c < 1 || b < 2 || a + c < 3 {
        return Err(InvariantError::OutOfRange(format!(
            "(a,b,c) = ({a},{b},{c}) needs a, c >= 1, b >= 2, a+c >= 3"
        )));
    }
    let [a, b, c] = [a, b, c].map(|x| x as i128);
    let s = a + c;
    let chi = 2 * (s - 2) * (b - 1) + b * s;
    let k2 = 16 * (s - 2) * (b - 1);
    let r = ((s - 2) as u64).gcd(&(2 * (b - 1) as u64));
    let surface = SurfaceInvariants::from_chi_k2(chi, k2, Some(r), true)?;
    let m = (b + 1) * (4 * a + c + 3) + 2 * b * (a + c + 1) - 8;
    let (ai, bi, ci) = (a as i64, b as i64, c as i64);
    let valid = (2..=ci - 4).step_by(2).any(|k| nondef_hypotheses(ai, bi, ci, k).holds);
    Ok(AbcInvariants {
        surface,
        moduli_dimension: narrow(m, "moduli dimension")?,
        moduli_dimension_valid: valid,
    })
}

/// Manetti's surfaces with `n` admissible triple points:
/// `K² = 18ab − 24(a+b) + 32 − n`, `χ = 4 + 3(ab − a − b)`. The divisibility
/// of `K` is not known in closed form and is left unset.
pub fn manetti_invariants(a: u64, b: u64, n: u64) -> Result<SurfaceInvariants, InvariantError> {
    if a < 1 || b < 1 {
        return Err(InvariantError::OutOfRange(format!(
            "(a,b) = ({a},{b}) must be positive"
        )));
    }
    let simply_connected = !(a.is_even() && b.is_even());
    let [a, b, n] = [a, b, n].map(|x| x as i128);
    let k2 = 18 * a * b - 24 * (a + b) + 32 - n;
    let chi = 4 + 3 * (a * b - a - b);
    SurfaceInvariants::from_chi_k2(chi, k2, None, simply_connected)
}

/// Freedman: simply connected surfaces are homeomorphic iff their
/// intersection forms have equal rank, signature and parity, i.e. iff
/// `χ`, `K²` agree and `r ≡ r' (mod 2)`.
pub fn homeo_test(s1: &SurfaceInvariants, s2: &SurfaceInvariants) -> Result<bool, InvariantError> {
    for (k, s) in [s1, s2].into_iter().enumerate() {
        if !s.simply_connected {
            return Err(InvariantError::NotApplicable(format!(
                "surface {} is not simply connected",
                k + 1
            )));
        }
        if s.chi < 2 {
            return Err(InvariantError::NotApplicable(format!(
                "surface {} has chi = {} < 2",
                k + 1,
                s.chi
            )));
        }
    }
    let (Some(r1), Some(r2)) = (s1.r, s2.r) else {
        return Err(InvariantError::NotApplicable("divisibility of K unknown".into()));
    };
    Ok(s1.chi == s2.chi && s1.k2 == s2.k2 && r1 % 2 == r2 % 2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DiffeoVerdict {
    Obstructed,
    NoObstruction,
}

/// The divisibility of the canonical class is a differentiable invariant of
/// minimal surfaces of general type. Unknown divisibility gives no obstruction.
pub fn diffeo_obstruction(s1: &SurfaceInvariants, s2: &SurfaceInvariants) -> DiffeoVerdict {
    match (s1.r, s2.r) {
        (Some(x), Some(y)) if x != y => DiffeoVerdict::Obstructed,
        _ => DiffeoVerdict::NoObstruction,
    }
}

/// `P_m = χ + m(m−1)/2 · K²`.
pub fn plurigenus(chi: i64, k2: i64, m: i64) -> Result<i64, InvariantError> {
    if m < 2 || chi < 1 || k2 < 1 {
        return Err(InvariantError::OutOfRange(format!(
            "plurigenus needs m >= 2, chi >= 1, K^2 >= 1 (got m={m}, chi={chi}, K^2={k2})"
        )));
    }
    let m = m as i128;
    narrow(chi as i128 + m * (m - 1) / 2 * k2 as i128, "plurigenus")
}

/// `h⁰(5mK) = χ + (5m−1)·5m/2 · K²`.
pub fn hilbert_5canonical(chi: i64, k2: i64, m: i64) -> Result<i64, InvariantError> {
    if m < 1 || chi < 1 || k2 < 1 {
        return Err(InvariantError::OutOfRange(format!(
            "needs m >= 1, chi >= 1, K^2 >= 1 (got m={m}, chi={chi}, K^2={k2})"
        )));
    }
    let m = m as i128;
    narrow(chi as i128 + (5 * m - 1) * 5 * m / 2 * k2 as i128, "h0(5mK)")
}

/// Clause-by-clause evaluation of the hypotheses under which the pair of
/// bidouble covers `((2a,2b),(2c,2b))` and `((2a+2k,2b),(2c−2k,2b))` are not
/// deformation equivalent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct NondefReport {
    /// Positive even `a, b, c, k` with `a, b, c − k ≥ 4`.
    pub clause_i: bool,
    /// `a ≥ 2c + 1`.
    pub clause_ii: bool,
    /// `b ≥ c + 2`.
    pub clause_iii: bool,
    /// `b ≥ 2a + 2k − 1`.
    pub clause_iv1: bool,
    /// `a ≥ b + 2`.
    pub clause_iv2: bool,
    pub holds: bool,
}

pub fn nondef_hypotheses(a: i64, b: i64, c: i64, k: i64) -> NondefReport {
    let even_positive = |x: i64| x > 0 && x % 2 == 0;
    let clause_i = [a, b, c, k].into_iter().all(even_positive) && a >= 4 && b >= 4 && c - k >= 4;
    let clause_ii = a > 2 * c;
    let clause_iii = b >= c + 2;
    let clause_iv1 = b >= 2 * a + 2 * k - 1;
    let clause_iv2 = a >= b + 2;
    NondefReport {
        clause_i,
        clause_ii,
        clause_iii,
        clause_iv1,
        clause_iv2,
        holds: clause_i && clause_ii && clause_iii && (clause_iv1 || clause_iv2),
    }
}

/// Limits for [`box_family`]: factorizations of `6^n` for `n ≤ max_exponent`
/// and scalings `T ≤ max_scale`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoxBound {
    pub max_exponent: u32,
    pub max_scale: u64,
}

impl Default for BoxBound {
    fn default() -> Self {
        BoxBound {
            max_exponent: 6,
            max_scale: 8,
        }
    }
}

/// Unordered factorizations `u'·v' = 6^n` with both factors even, `u' ≤ v'`.
fn even_factorizations(n: u32) -> Vec<(u64, u64)> {
    let total = 6u64.pow(n);
    let mut out = Vec::new();
    for i in 1..n {
        for j in 0..=n {
            let u = 2u64.pow(i) * 3u64.pow(j);
            let v = total / u;
            if u <= v && v.is_even() {
                out.push((u, v));
            }
        }
    }
    out.sort_unstable();
    out
}

/// Given `u = a+c−2`, `v = b+d−2` (both even), the products `WZ` realisable
/// with `a = A+W, c = A−W, b = B−Z, d = B+Z ≥ 3`, where `A = u/2+1`,
/// `B = v/2+1`; then `ab + cd = 2AB − 2WZ`.
fn products(u: u64, v: u64) -> Option<HashSet<i64>> {
    if u < 4 || v < 4 {
        return None;
    }
    let (wm, zm) = ((u / 2 - 2) as i64, (v / 2 - 2) as i64);
    let mut out = HashSet::new();
    for w in 0..=wm {
        for z in -zm..=zm {
            out.insert(w * z);
        }
    }
    Some(out)
}

/// Smallest `(W, Z)` in lexicographic order with `W·Z = target` inside the box.
fn solve_box(u: u64, v: u64, target: i64) -> Option<(i64, i64)> {
    let (wm, zm) = ((u / 2 - 2) as i64, (v / 2 - 2) as i64);
    for w in -wm..=wm {
        if w == 0 {
            if target == 0 {
                return Some((0, -zm));
            }
            continue;
        }
        if target % w == 0 && (target / w).abs() <= zm {
            return Some((w, target / w));
        }
    }
    None
}

fn family_for(subset: &[(u64, u64)], scale: u64) -> Option<Vec<BidoubleType>> {
    let sized: Vec<(u64, u64)> = subset.iter().map(|&(u, v)| (scale * u, scale * v)).collect();
    let ab: Vec<i64> = sized.iter().map(|&(u, v)| ((u / 2 + 1) * (v / 2 + 1)) as i64).collect();
    let sets: Vec<HashSet<i64>> = sized.iter().map(|&(u, v)| products(u, v)).collect::<Option<_>>()?;
    // K = A_i B_i − W_i Z_i must be common to all members.
    let mut ks: Vec<i64> = sets[0].iter().map(|p| ab[0] - p).collect();
    ks.retain(|k| sets.iter().zip(&ab).all(|(s, &x)| s.contains(&(x - k))));
    let k = ks.into_iter().min()?;
    sized
        .iter()
        .zip(&ab)
        .map(|(&(u, v), &x)| {
            let (w, z) = solve_box(u, v, x - k)?;
            let (big_a, big_b) = ((u / 2 + 1) as i64, (v / 2 + 1) as i64);
            Some(BidoubleType::new(
                (big_a + w) as u64,
                (big_b - z) as u64,
                (big_a - w) as u64,
                (big_b + z) as u64,
            ))
        })
        .collect()
}

/// `h` bidouble covers that are pairwise homeomorphic but pairwise distinguished
/// by the divisibility of the canonical class.
///
/// Scans `n` upward, then the scale `T`, then `h`-subsets of the even
/// factorizations of `6^n` with distinct gcds in lexicographic order; the
/// first subset admitting a common value of `ab + cd` wins.
pub fn box_family(h: usize, bound: BoxBound) -> Result<Vec<BidoubleType>, InvariantError> {
    if h == 0 {
        return Err(InvariantError::OutOfRange("family size must be at least 1".into()));
    }
    for n in 1..=bound.max_exponent {
        let facts = even_factorizations(n);
        let subsets: Vec<Vec<(u64, u64)>> = facts
            .iter()
            .copied()
            .combinations(h)
            .filter(|s| s.iter().map(|&(u, v)| u.gcd(&v)).all_unique())
            .collect();
        if subsets.is_empty() {
            continue;
        }
        for scale in 1..=bound.max_scale {
            let found = subsets.par_iter().find_map_first(|s| family_for(s, scale));
            if let Some(family) = found {
                verify_family(&family)?;
                log::debug!("box family for h={h}: n={n}, T={scale}");
                return Ok(family);
            }
        }
    }
    Err(InvariantError::NotFoundWithinBound {
        h,
        max_exponent: bound.max_exponent,
        max_scale: bound.max_scale,
    })
}

fn verify_family(family: &[BidoubleType]) -> Result<(), InvariantError> {
    let inv: Vec<SurfaceInvariants> = family
        .iter()
        .map(|&t| bidouble_invariants(t))
        .collect::<Result<_, _>>()?;
    for (x, y) in inv.iter().tuple_combinations() {
        assert!(homeo_test(x, y)?, "box family members must be homeomorphic");
        assert_eq!(diffeo_obstruction(x, y), DiffeoVerdict::Obstructed);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn bd(a: u64, b: u64, c: u64, d: u64) -> SurfaceInvariants {
        bidouble_invariants(BidoubleType::new(a, b, c, d)).unwrap()
    }

    #[test]
    fn bidouble_examples() {
        let s = bd(2, 3, 2, 3);
        assert_eq!((s.p_g, s.chi, s.k2, s.r, s.e, s.sigma), (19, 20, 64, Some(2), 176, -96));
        let s = bd(3, 2, 2, 3);
        assert_eq!((s.p_g, s.chi, s.k2, s.r), (20, 21, 72, Some(3)));
        assert!(bidouble_invariants(BidoubleType::new(1, 1, 1, 1)).is_err());
        assert!(bidouble_invariants(BidoubleType::new(0, 3, 3, 3)).is_err());
    }

    #[test]
    fn chi_is_uv_plus_ab_plus_cd() {
        for (a, b, c, d) in [(2, 3, 2, 3), (5, 7, 3, 4), (9, 3, 4, 8)] {
            let s = bd(a, b, c, d);
            let (u, v) = (a + c - 2, b + d - 2);
            assert_eq!(s.chi as u64, u * v + a * b + c * d);
        }
    }

    #[test]
    fn abc_examples() {
        let x = abc_invariants(2, 3, 2).unwrap();
        assert_eq!(
            (x.surface.chi, x.surface.k2, x.surface.r, x.surface.sigma),
            (20, 64, Some(2), -96)
        );
        // 4·(8+2+3) + 2·3·5 − 8.
        assert_eq!(x.moduli_dimension, 74);
        assert!(!x.moduli_dimension_valid);
        let y = bd(2, 3, 2, 3);
        assert_eq!((x.surface.chi, x.surface.k2), (y.chi, y.k2));
        let p = abc_invariants(2, 3, 3).unwrap().surface;
        let q = abc_invariants(3, 3, 2).unwrap().surface;
        assert_eq!((p.chi, p.k2, p.r), (q.chi, q.k2, q.r));
        assert!(abc_invariants(1, 1, 2).is_err());
        // A point where the non-deformation hypotheses hold with k = 2.
        let z = abc_invariants(14, 32, 6).unwrap();
        assert!(z.moduli_dimension_valid);
    }

    #[test]
    fn homeo_and_diffeo() {
        let p = abc_invariants(2, 3, 3).unwrap().surface;
        let q = abc_invariants(3, 3, 2).unwrap().surface;
        assert!(homeo_test(&p, &q).unwrap());
        assert_eq!(diffeo_obstruction(&p, &q), DiffeoVerdict::NoObstruction);
        let s = bd(2, 3, 2, 3);
        let t = bd(3, 2, 2, 3);
        assert!(!homeo_test(&s, &t).unwrap());
        assert!(homeo_test(&s, &s).unwrap());
        let mut r6 = s;
        r6.r = Some(6);
        assert_eq!(diffeo_obstruction(&s, &r6), DiffeoVerdict::Obstructed);
        assert_eq!(diffeo_obstruction(&s, &s), DiffeoVerdict::NoObstruction);
        let m = manetti_invariants(4, 6, 0).unwrap();
        assert!(matches!(homeo_test(&m, &s), Err(InvariantError::NotApplicable(_))));
        let m = manetti_invariants(4, 5, 0).unwrap();
        assert!(matches!(homeo_test(&m, &s), Err(InvariantError::NotApplicable(_))));
    }

    #[test]
    fn manetti_examples() {
        let m = manetti_invariants(4, 5, 10).unwrap();
        assert_eq!((m.k2, m.chi, m.simply_connected, m.r), (166, 37, true, None));
        let base = manetti_invariants(4, 5, 0).unwrap();
        assert_eq!(base.k2, 176);
        for n in 0..20 {
            let x = manetti_invariants(4, 5, n).unwrap();
            let y = manetti_invariants(4, 5, n + 1).unwrap();
            assert_eq!((x.k2 - y.k2, x.chi), (1, y.chi));
        }
        assert!(!manetti_invariants(4, 6, 0).unwrap().simply_connected);
        assert!(manetti_invariants(3, 6, 0).unwrap().simply_connected);
    }

    #[test]
    fn plurigenera() {
        assert_eq!(plurigenus(20, 64, 2).unwrap(), 84);
        assert_eq!(plurigenus(1, 1, 2).unwrap(), 2);
        assert!(plurigenus(1, 0, 2).is_err());
        assert!(plurigenus(1, 1, 1).is_err());
        assert_eq!(hilbert_5canonical(20, 64, 1).unwrap(), 660);
        assert_eq!(hilbert_5canonical(1, 1, 1).unwrap(), 11);
        assert!(hilbert_5canonical(1, 1, 0).is_err());
    }

    #[test]
    fn nondef_clauses() {
        let r = nondef_hypotheses(3, 6, 4, 2);
        assert!(!r.clause_i && !r.holds);
        let r = nondef_hypotheses(10, 6, 4, 2);
        assert!(r.clause_ii && r.clause_iii && r.clause_iv2);
        assert!(!r.clause_i && !r.holds);
        let r = nondef_hypotheses(12, 8, 6, 2);
        assert!(r.clause_i && !r.clause_ii && !r.holds);
        let r = nondef_hypotheses(14, 32, 6, 2);
        assert!(r.holds && r.clause_iv1 && !r.clause_iv2);
    }

    #[test]
    fn factorizations_of_powers_of_six() {
        assert!(even_factorizations(1).is_empty());
        assert_eq!(even_factorizations(2), vec![(2, 18), (6, 6)]);
        for n in 1..7 {
            for (u, v) in even_factorizations(n) {
                assert_eq!(u * v, 6u64.pow(n));
                assert!(u.is_even() && v.is_even() && u <= v);
            }
        }
    }

    fn check_family(family: &[BidoubleType], h: usize) {
        assert_eq!(family.len(), h);
        let inv: Vec<_> = family.iter().map(|&t| bidouble_invariants(t).unwrap()).collect();
        for t in family {
            assert!(t.a >= 3 && t.b >= 3 && t.c >= 3 && t.d >= 3, "{t}");
        }
        for i in 0..h {
            for j in i + 1..h {
                assert!(homeo_test(&inv[i], &inv[j]).unwrap());
                assert_eq!(diffeo_obstruction(&inv[i], &inv[j]), DiffeoVerdict::Obstructed);
                assert_ne!(family[i], family[j]);
            }
        }
    }

    #[test]
    fn box_families() {
        for h in 1..=3 {
            let family = box_family(h, BoxBound::default()).unwrap();
            check_family(&family, h);
        }
        // Regression snapshots of the first family found.
        let t = BidoubleType::new;
        assert_eq!(
            box_family(2, BoxBound::default()).unwrap(),
            vec![t(3, 35, 3, 3), t(3, 5, 11, 9)]
        );
        assert_eq!(
            box_family(3, BoxBound::default()).unwrap(),
            vec![t(3, 323, 3, 3), t(3, 56, 5, 162), t(4, 3, 6, 161)]
        );
        assert!(box_family(0, BoxBound::default()).is_err());
        let tiny = BoxBound {
            max_exponent: 2,
            max_scale: 1,
        };
        assert_eq!(
            box_family(3, tiny),
            Err(InvariantError::NotFoundWithinBound {
                h: 3,
                max_exponent: 2,
                max_scale: 1
            })
        );
    }

    proptest! {
        #[test]
        fn noether_and_index(a in 1u64..40, b in 1u64..40, c in 1u64..40, d in 1u64..40) {
            prop_assume!(a + c >= 3 && b + d >= 3);
            let s = bd(a, b, c, d);
            prop_assert_eq!(s.e, 12 * s.chi - s.k2);
            prop_assert_eq!(s.sigma, s.k2 - 8 * s.chi);
            prop_assert_eq!(3 * s.sigma, s.k2 - 2 * s.e);
            prop_assert_eq!(s, bd(c, d, a, b));
        }

        #[test]
        fn abc_depends_on_sum_only(s in 3u64..=20, b in 2u64..30, split in 0u64..20) {
            let a = 1 + split % (s - 1);
            let c = s - a;
            let x = abc_invariants(a, b, c).unwrap().surface;
            let y = abc_invariants(1, b, s - 1).unwrap().surface;
            prop_assert_eq!((x.chi, x.k2, x.r), (y.chi, y.k2, y.r));
        }

        #[test]
        fn abc_matches_bidouble_diagonal(a in 1u64..30, b in 2u64..30, c in 1u64..30) {
            prop_assume!(a + c >= 3);
            let x = abc_invariants(a, b, c).unwrap().surface;
            let y = bd(a, b, c, b);
            prop_assert_eq!((x.chi, x.k2), (y.chi, y.k2));
        }

        #[test]
        fn hilbert_is_plurigenus_at_multiples_of_five(chi in 1i64..100, k2 in 1i64..100, m in 1i64..20) {
            prop_assert_eq!(hilbert_5canonical(chi, k2, m).unwrap(), plurigenus(chi, k2, 5 * m).unwrap());
        }

        #[test]
        fn manetti_noether(a in 1u64..30, b in 1u64..30, n in 0u64..50) {
            let m = manetti_invariants(a, b, n).unwrap();
            prop_assert_eq!(m.e, 12 * m.chi - m.k2);
            prop_assert_eq!(3 * m.sigma, m.k2 - 2 * m.e);
        }
    }
}

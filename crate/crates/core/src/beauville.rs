//! Unmixed Beauville structures: stabilizer sets `Σ(a, c)`, verification over
//! permutation groups, and the exhaustive search over `(Z/n)²`.

use std::collections::BTreeSet;

use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::permgroup::{self, ConjugatorSearch, ElementSet, Perm, PermError};

/// Largest `n` accepted by [`search_abelian`] by default.
pub const DEFAULT_ABELIAN_BOUND: u64 = 13;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BeauvilleError {
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("generator {0} is not a member of the group")]
    MemberMissing(Perm),
    #[error("element set is not closed: {0}")]
    NotClosed(String),
    #[error("n = {n} exceeds the search bound {bound}")]
    BoundExceeded { n: u64, bound: u64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

impl BeauvilleError {
    pub fn name(&self) -> &'static str {
        match self {
            BeauvilleError::Perm(e) => e.name(),
            BeauvilleError::MemberMissing(_) => "MemberMissing",
            BeauvilleError::NotClosed(_) => "NotClosed",
            BeauvilleError::BoundExceeded { .. } => "BoundExceeded",
            BeauvilleError::InvalidParameter(_) => "InvalidParameter",
        }
    }
}

/// A triple `(a, b, c)` with `a ∘ b ∘ c = 1`, stored through `a` and `c`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GeneratingPair {
    a: Perm,
    b: Perm,
    c: Perm,
}

impl GeneratingPair {
    pub fn new(a: Perm, c: Perm) -> Result<GeneratingPair, BeauvilleError> {
        let b = a.inverse().compose(&c.inverse())?;
        Ok(GeneratingPair { a, b, c })
    }

    pub fn a(&self) -> &Perm {
        &self.a
    }

    pub fn b(&self) -> &Perm {
        &self.b
    }

    pub fn c(&self) -> &Perm {
        &self.c
    }

    pub fn degree(&self) -> usize {
        self.a.degree()
    }

    pub fn triple(&self) -> [&Perm; 3] {
        [&self.a, &self.b, &self.c]
    }

    pub fn conjugated(&self, g: &Perm) -> Result<GeneratingPair, BeauvilleError> {
        GeneratingPair::new(self.a.conjugate_by(g)?, self.c.conjugate_by(g)?)
    }
}

#[derive(Deserialize)]
struct PairRepr {
    a: Perm,
    c: Perm,
}

impl<'de> Deserialize<'de> for GeneratingPair {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = PairRepr::deserialize(d)?;
        GeneratingPair::new(r.a, r.c).map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Checks {
    pub generation1: bool,
    pub generation2: bool,
    pub disjointness: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BeauvilleCertificate {
    pub group_order: usize,
    pub pair1: GeneratingPair,
    pub pair2: GeneratingPair,
    pub sigma1_size: usize,
    pub sigma2_size: usize,
    pub checks: Checks,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FailedCheck {
    Generation1,
    Generation2,
    Disjointness,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum BeauvilleVerdict {
    Certificate(BeauvilleCertificate),
    Failure { check: FailedCheck, checks: Checks },
}

impl BeauvilleVerdict {
    pub fn is_certificate(&self) -> bool {
        matches!(self, BeauvilleVerdict::Certificate(_))
    }
}

fn spot_check_closed(group: &ElementSet, gens: &[&Perm]) -> Result<(), BeauvilleError> {
    let members = group.members();
    if members.is_empty() || !members[0].is_identity() {
        return Err(BeauvilleError::NotClosed("identity missing".into()));
    }
    let step = (members.len() / 16).max(1);
    for g in members.iter().step_by(step) {
        if !group.contains(&g.inverse()) {
            return Err(BeauvilleError::NotClosed(format!("inverse of {g} missing")));
        }
        for h in gens {
            let gh = g.compose(h)?;
            if !group.contains(&gh) {
                return Err(BeauvilleError::NotClosed(format!("{g} ∘ {h} missing")));
            }
        }
    }
    Ok(())
}

/// All conjugates, by members of `group`, of all powers of `a`, `b` and `c`.
///
/// Σ is a union of conjugacy classes, so a power that already lies in Σ
/// contributes nothing new and is skipped.
pub fn sigma_set(pair: &GeneratingPair, group: &ElementSet) -> Result<ElementSet, BeauvilleError> {
    if group.degree() != pair.degree() {
        return Err(PermError::DegreeMismatch {
            left: group.degree(),
            right: pair.degree(),
        }
        .into());
    }
    for x in [&pair.a, &pair.c] {
        if !group.contains(x) {
            return Err(BeauvilleError::MemberMissing(x.clone()));
        }
    }
    spot_check_closed(group, &[&pair.a, &pair.c])?;
    let inverses: Vec<Perm> = group.iter().map(Perm::inverse).collect();
    let mut sigma: BTreeSet<Perm> = BTreeSet::new();
    for x in pair.triple() {
        let mut p = Perm::identity(x.degree());
        for _ in 0..x.order() {
            if !sigma.contains(&p) {
                for (g, gi) in group.iter().zip(&inverses) {
                    sigma.insert(g.compose(&p)?.compose(gi)?);
                }
            }
            p = p.compose(x)?;
        }
    }
    Ok(ElementSet::new(group.degree(), sigma)?)
}

fn generates(pair: &GeneratingPair, group: &ElementSet) -> Result<bool, BeauvilleError> {
    match permgroup::generate(&[pair.a.clone(), pair.c.clone()], group.len()) {
        Ok(h) => Ok(&h == group),
        // More elements than the group: cannot be equal.
        Err(PermError::CapExceeded { .. }) => Ok(false),
        Err(e) => Err(e.into()),
    }
}

/// Checks that both pairs generate `group` and that their Σ-sets meet only
/// in the identity. The first failing check is reported.
pub fn is_beauville(
    pair1: &GeneratingPair,
    pair2: &GeneratingPair,
    group: &ElementSet,
) -> Result<BeauvilleVerdict, BeauvilleError> {
    let mut checks = Checks {
        generation1: false,
        generation2: false,
        disjointness: false,
    };
    checks.generation1 = generates(pair1, group)?;
    if !checks.generation1 {
        return Ok(BeauvilleVerdict::Failure {
            check: FailedCheck::Generation1,
            checks,
        });
    }
    checks.generation2 = generates(pair2, group)?;
    if !checks.generation2 {
        return Ok(BeauvilleVerdict::Failure {
            check: FailedCheck::Generation2,
            checks,
        });
    }
    let s1 = sigma_set(pair1, group)?;
    let s2 = sigma_set(pair2, group)?;
    let meet = s1.intersection(&s2);
    checks.disjointness = meet.len() == 1;
    if !checks.disjointness {
        return Ok(BeauvilleVerdict::Failure {
            check: FailedCheck::Disjointness,
            checks,
        });
    }
    Ok(BeauvilleVerdict::Certificate(BeauvilleCertificate {
        group_order: group.len(),
        pair1: pair1.clone(),
        pair2: pair2.clone(),
        sigma1_size: s1.len(),
        sigma2_size: s2.len(),
        checks,
    }))
}

/// Element of `(Z/n)²`.
type Vector = (u64, u64);

fn add(n: u64, u: Vector, v: Vector) -> Vector {
    ((u.0 + v.0) % n, (u.1 + v.1) % n)
}

fn neg(n: u64, u: Vector) -> Vector {
    ((n - u.0) % n, (n - u.1) % n)
}

fn cyclic(n: u64, v: Vector) -> BTreeSet<Vector> {
    let mut out = BTreeSet::new();
    let mut p = (0, 0);
    loop {
        out.insert(p);
        p = add(n, p, v);
        if p == (0, 0) {
            return out;
        }
    }
}

/// `⟨a⟩ ∪ ⟨b⟩ ∪ ⟨c⟩` with `b = −a − c`; conjugation is trivial.
fn abelian_sigma(n: u64, a: Vector, c: Vector) -> BTreeSet<Vector> {
    let b = neg(n, add(n, a, c));
    let mut s = cyclic(n, a);
    s.extend(cyclic(n, b));
    s.extend(cyclic(n, c));
    s
}

/// Translation by `v` on the `n²` points `x + n·y`, as a permutation.
pub fn translation(n: u64, v: Vector) -> Perm {
    let n = n as usize;
    let images: Vec<usize> = (0..n * n)
        .map(|p| {
            let (x, y) = (p % n, p / n);
            (x + v.0 as usize) % n + n * ((y + v.1 as usize) % n) + 1
        })
        .collect();
    Perm::from_images(&images).expect("translation is a bijection")
}

/// The regular representation of `(Z/n)²`.
pub fn abelian_group(n: u64) -> Result<ElementSet, BeauvilleError> {
    let members = (0..n).flat_map(|x| (0..n).map(move |y| translation(n, (x, y))));
    Ok(ElementSet::new((n * n) as usize, members)?)
}

/// Unmixed Beauville structures on `(Z/n)²`, one per class under
/// simultaneous automorphisms.
///
/// Automorphisms act simply transitively on generating pairs, so every class
/// has exactly one member whose first pair is `(e₁, e₂)`; the second pair then
/// runs over the columns of all invertible 2×2 matrices mod `n`.
pub fn search_abelian(n: u64, bound: u64) -> Result<Vec<BeauvilleCertificate>, BeauvilleError> {
    if n < 2 {
        return Err(BeauvilleError::InvalidParameter(format!(
            "n must be at least 2, got {n}"
        )));
    }
    if n > bound {
        return Err(BeauvilleError::BoundExceeded { n, bound });
    }
    let e1 = (1, 0);
    let e2 = (0, 1);
    let s1 = abelian_sigma(n, e1, e2);
    let mut hits: Vec<(Vector, Vector, usize)> = (0..n * n)
        .into_par_iter()
        .flat_map_iter(|col1| {
            let a = (col1 % n, col1 / n);
            let s1 = &s1;
            (0..n * n).filter_map(move |col2| {
                let c = (col2 % n, col2 / n);
                let det = (a.0 * c.1 + n * n - a.1 * c.0 % n) % n;
                if det.gcd(&n) != 1 {
                    return None;
                }
                let s2 = abelian_sigma(n, a, c);
                (s1.intersection(&s2).count() == 1).then_some((a, c, s2.len()))
            })
        })
        .collect();
    hits.sort_unstable();
    let pair1 = GeneratingPair::new(translation(n, e1), translation(n, e2))?;
    let mut out: Vec<BeauvilleCertificate> = hits
        .into_iter()
        .map(|(a, c, size2)| {
            Ok(BeauvilleCertificate {
                group_order: (n * n) as usize,
                pair1: pair1.clone(),
                pair2: GeneratingPair::new(translation(n, a), translation(n, c))?,
                sigma1_size: s1.len(),
                sigma2_size: size2,
                checks: Checks {
                    generation1: true,
                    generation2: true,
                    disjointness: true,
                },
            })
        })
        .collect::<Result<_, BeauvilleError>>()?;
    out.sort_by(|x, y| x.pair2.cmp(&y.pair2));
    Ok(out)
}

/// Looks for an inner automorphism of the ambient symmetric group carrying
/// `a ↦ a⁻¹` and `c ↦ c⁻¹`.
pub fn inverting_witness(pair: &GeneratingPair, bound: usize) -> Result<ConjugatorSearch, BeauvilleError> {
    Ok(permgroup::pair_conjugator(
        &pair.a,
        &pair.c,
        &pair.a.inverse(),
        &pair.c.inverse(),
        bound,
    )?)
}

pub fn orders_triple(pair: &GeneratingPair) -> (u64, u64, u64) {
    (pair.a.order(), pair.b.order(), pair.c.order())
}

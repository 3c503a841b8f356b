//! Factorizations in permutation groups and the Hurwitz action of the braid group.
//!
//! A factorization `t_1 ∘ t_2 ∘ ⋯ ∘ t_m` has product `t_1 t_2 ⋯ t_m`
//! (composition, right-to-left application). The forward move at `i` is
//! `(t_i, t_{i+1}) ↦ (t_i t_{i+1} t_i⁻¹, t_i)`, the backward move its inverse
//! `(t_i, t_{i+1}) ↦ (t_{i+1}, t_{i+1}⁻¹ t_i t_{i+1})`. Both keep the product.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::braid::BraidWord;
use crate::permgroup::{self, ElementSet, Perm, PermError};

/// Default node budget for orbit and equivalence searches.
pub const DEFAULT_ORBIT_CAP: usize = 1_000_000;

/// Number of canonical representatives kept in an [`OrbitReport`].
pub const REPRESENTATIVE_LIMIT: usize = 1000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HurwitzError {
    #[error("factorization must have at least one factor")]
    Empty,
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("move index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("factor index {index} out of range 1..={len}")]
    FactorOutOfRange { index: usize, len: usize },
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("product is not central in the generated subgroup")]
    NotCentral,
    #[error("constructed move path failed to replay")]
    ReplayFailed,
    #[error("braid has {strands} strands but the factorization has {factors} factors")]
    StrandMismatch { strands: usize, factors: usize },
}

impl HurwitzError {
    pub fn name(&self) -> &'static str {
        match self {
            HurwitzError::Empty => "Empty",
            HurwitzError::Perm(e) => e.name(),
            HurwitzError::IndexOutOfRange { .. } => "IndexOutOfRange",
            HurwitzError::FactorOutOfRange { .. } => "FactorOutOfRange",
            HurwitzError::LengthMismatch { .. } => "LengthMismatch",
            HurwitzError::NotCentral => "NotCentral",
            HurwitzError::ReplayFailed => "ReplayFailed",
            HurwitzError::StrandMismatch { .. } => "StrandMismatch",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Direction {
    /// `σ_i`.
    #[serde(rename = "f")]
    Forward,
    /// `σ_i⁻¹`.
    #[serde(rename = "b")]
    Backward,
}

impl Direction {
    pub fn reversed(self) -> Direction {
        match self {
            Direction::Forward => Direction::Backward,
            Direction::Backward => Direction::Forward,
        }
    }
}

/// One elementary move; `i` is 1-based and acts on factors `i` and `i + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Move {
    pub i: usize,
    pub dir: Direction,
}

impl Move {
    pub fn forward(i: usize) -> Move {
        Move {
            i,
            dir: Direction::Forward,
        }
    }

    pub fn backward(i: usize) -> Move {
        Move {
            i,
            dir: Direction::Backward,
        }
    }

    pub fn inverse(self) -> Move {
        Move {
            i: self.i,
            dir: self.dir.reversed(),
        }
    }
}

/// Inverse of a move sequence.
pub fn invert_path(path: &[Move]) -> Vec<Move> {
    path.iter().rev().map(|m| m.inverse()).collect()
}

/// An ordered tuple of permutations of one degree with its cached product.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Factorization {
    factors: Vec<Perm>,
    product: Perm,
}

impl Factorization {
    pub fn new(factors: Vec<Perm>) -> Result<Factorization, HurwitzError> {
        let first = factors.first().ok_or(HurwitzError::Empty)?;
        let degree = first.degree();
        let mut product = Perm::identity(degree);
        for f in &factors {
            product = product.compose(f)?;
        }
        Ok(Factorization { factors, product })
    }

    pub fn degree(&self) -> usize {
        self.product.degree()
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn factors(&self) -> &[Perm] {
        &self.factors
    }

    pub fn product(&self) -> &Perm {
        &self.product
    }

    /// Sorted multiset of the factors' cycle types.
    pub fn cycle_types(&self) -> Vec<Vec<usize>> {
        let mut v: Vec<_> = self.factors.iter().map(Perm::cycle_type).collect();
        v.sort();
        v
    }

    /// The subgroup generated by the factors, if it has at most `cap` elements.
    pub fn generated_subgroup(&self, cap: usize) -> Result<ElementSet, PermError> {
        permgroup::generate(&self.factors, cap)
    }

    fn moved(&self, m: Move) -> Factorization {
        let k = m.i - 1;
        let (x, y) = (&self.factors[k], &self.factors[k + 1]);
        let (nx, ny) = match m.dir {
            Direction::Forward => (x.mul(y).mul(&x.inverse()), x.clone()),
            Direction::Backward => (y.clone(), y.inverse().mul(x).mul(y)),
        };
        let mut factors = self.factors.clone();
        factors[k] = nx;
        factors[k + 1] = ny;
        Factorization {
            factors,
            product: self.product.clone(),
        }
    }

    fn conjugated(&self, b: &Perm) -> Factorization {
        Factorization {
            factors: self.factors.iter().map(|t| t.conj(b)).collect(),
            product: self.product.conj(b),
        }
    }

    /// Concatenated image sequences; the key minimized by canonical conjugates.
    fn key(&self) -> Vec<u32> {
        self.factors
            .iter()
            .flat_map(|p| p.raw_images().iter().copied())
            .collect()
    }
}

#[derive(Serialize, Deserialize)]
struct FactorizationRepr {
    degree: usize,
    factors: Vec<Perm>,
}

impl Serialize for Factorization {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        FactorizationRepr {
            degree: self.degree(),
            factors: self.factors.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Factorization {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = FactorizationRepr::deserialize(deserializer)?;
        if let Some(p) = repr.factors.iter().find(|p| p.degree() != repr.degree) {
            return Err(serde::de::Error::custom(format!(
                "factor of degree {} in a degree {} factorization",
                p.degree(),
                repr.degree
            )));
        }
        Factorization::new(repr.factors).map_err(serde::de::Error::custom)
    }
}

pub fn hurwitz_move(f: &Factorization, i: usize, dir: Direction) -> Result<Factorization, HurwitzError> {
    let max = f.len() - 1;
    if i == 0 || i > max {
        return Err(HurwitzError::IndexOutOfRange { index: i, max });
    }
    Ok(f.moved(Move { i, dir }))
}

/// Applies a move sequence in order.
pub fn apply_path(f: &Factorization, path: &[Move]) -> Result<Factorization, HurwitzError> {
    path.iter().try_fold(f.clone(), |acc, m| hurwitz_move(&acc, m.i, m.dir))
}

/// Hurwitz action of a braid word: `σ_i` is a forward move, `σ_i⁻¹` a backward
/// one, leftmost letter first.
pub fn act_braid(f: &Factorization, b: &BraidWord) -> Result<Factorization, HurwitzError> {
    if b.strands() != f.len() {
        return Err(HurwitzError::StrandMismatch {
            strands: b.strands(),
            factors: f.len(),
        });
    }
    let path: Vec<Move> = b
        .letters()
        .iter()
        .map(|l| Move {
            i: l.index,
            dir: if l.inverse {
                Direction::Backward
            } else {
                Direction::Forward
            },
        })
        .collect();
    apply_path(f, &path)
}

/// Replaces every factor `t` by `b ∘ t ∘ b⁻¹`.
///
/// In the left-to-right reading of products this is the conjugate `b⁻¹ t b`
/// (first `b⁻¹`, then `t`, then `b`), so `((1 2),(2 3))` conjugated by
/// `(1 2 3)` becomes `((2 3),(1 3))`.
pub fn simultaneous_conjugate(f: &Factorization, b: &Perm) -> Result<Factorization, HurwitzError> {
    if b.degree() != f.degree() {
        return Err(PermError::DegreeMismatch {
            left: f.degree(),
            right: b.degree(),
        }
        .into());
    }
    Ok(f.conjugated(b))
}

/// Invariants shared by every member of a Hurwitz orbit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantSummary {
    pub product: Perm,
    pub cycle_types: Vec<Vec<usize>>,
    /// `None` when the generated subgroup exceeded the cap.
    pub subgroup_order: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitReport {
    pub size: usize,
    pub exhausted: bool,
    pub mod_conjugation: bool,
    /// The smallest members in canonical order, at most [`REPRESENTATIVE_LIMIT`].
    pub representatives: Vec<Factorization>,
    pub invariant_summary: InvariantSummary,
}

fn canonical_conjugate(f: &Factorization, group: &ElementSet) -> Factorization {
    let mut best = f.clone();
    let mut best_key = f.key();
    for g in group {
        let c = f.conjugated(g);
        let key = c.key();
        if key < best_key {
            best_key = key;
            best = c;
        }
    }
    best
}

fn all_moves(m: usize) -> impl Iterator<Item = Move> {
    (1..m).flat_map(|i| [Move::forward(i), Move::backward(i)])
}

/// Breadth-first enumeration of the Hurwitz orbit of `f`, stopping after `cap`
/// distinct nodes.
///
/// With `mod_conjugation`, nodes are replaced by their canonical conjugate
/// under the subgroup generated by the factors (which every move preserves):
/// the conjugate whose concatenated image sequence is lexicographically least.
pub fn orbit(f: &Factorization, cap: usize, mod_conjugation: bool) -> OrbitReport {
    let subgroup = f.generated_subgroup(cap).ok();
    let summary = InvariantSummary {
        product: f.product.clone(),
        cycle_types: f.cycle_types(),
        subgroup_order: subgroup.as_ref().map(ElementSet::len),
    };
    let normalize = |x: Factorization| match (&subgroup, mod_conjugation) {
        (Some(g), true) => canonical_conjugate(&x, g),
        _ => x,
    };
    if mod_conjugation && subgroup.is_none() {
        return OrbitReport {
            size: 1,
            exhausted: false,
            mod_conjugation,
            representatives: vec![f.clone()],
            invariant_summary: summary,
        };
    }
    let start = normalize(f.clone());
    let mut seen: std::collections::HashSet<Factorization> = std::collections::HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    let mut exhausted = true;
    'bfs: while let Some(x) = queue.pop_front() {
        for m in all_moves(x.len()) {
            let y = normalize(x.moved(m));
            if seen.contains(&y) {
                continue;
            }
            if seen.len() >= cap {
                exhausted = false;
                break 'bfs;
            }
            seen.insert(y.clone());
            queue.push_back(y);
        }
    }
    let size = seen.len();
    let mut members: Vec<Factorization> = seen.into_iter().collect();
    members.sort_unstable();
    members.truncate(REPRESENTATIVE_LIMIT);
    OrbitReport {
        size,
        exhausted,
        mod_conjugation,
        representatives: members,
        invariant_summary: summary,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", content = "path")]
pub enum Equivalence {
    /// A replayable move sequence carrying the first factorization to the second.
    Yes(Vec<Move>),
    No,
    Unknown,
}

/// Decides Hurwitz equivalence by breadth-first search from `f1`, returning a
/// shortest move path when `f2` is reached within `cap` nodes.
pub fn equivalent(f1: &Factorization, f2: &Factorization, cap: usize) -> Result<Equivalence, HurwitzError> {
    if f1.len() != f2.len() {
        return Err(HurwitzError::LengthMismatch {
            left: f1.len(),
            right: f2.len(),
        });
    }
    if f1.degree() != f2.degree() {
        return Err(PermError::DegreeMismatch {
            left: f1.degree(),
            right: f2.degree(),
        }
        .into());
    }
    if f1.product != f2.product || f1.cycle_types() != f2.cycle_types() {
        return Ok(Equivalence::No);
    }
    if f1 == f2 {
        return Ok(Equivalence::Yes(Vec::new()));
    }
    let mut parent: HashMap<Factorization, Option<(Factorization, Move)>> = HashMap::new();
    let mut queue = VecDeque::new();
    parent.insert(f1.clone(), None);
    queue.push_back(f1.clone());
    while let Some(x) = queue.pop_front() {
        for m in all_moves(x.len()) {
            let y = x.moved(m);
            if parent.contains_key(&y) {
                continue;
            }
            if parent.len() >= cap {
                return Ok(Equivalence::Unknown);
            }
            parent.insert(y.clone(), Some((x.clone(), m)));
            if &y == f2 {
                let mut path = Vec::new();
                let mut cur = y;
                while let Some(Some((prev, mv))) = parent.get(&cur) {
                    path.push(*mv);
                    cur = prev.clone();
                }
                path.reverse();
                return Ok(Equivalence::Yes(path));
            }
            queue.push_back(y);
        }
    }
    Ok(Equivalence::No)
}

/// Move sequence carrying `simultaneous_conjugate(f, t_h)` back to `f`, for a
/// factorization whose product is central in the subgroup its factors generate.
///
/// With `τ = t_h` and `c_x(y) = x y x⁻¹`, the path is built as follows and then
/// inverted (moves commute with simultaneous conjugation):
///
/// 1. `h − 1` backward moves bring `τ` to the front: `f ≅ τ ∘ f'`.
/// 2. Starting from `c_{τ⁻¹}(f)`, the same moves give `τ ∘ c_{τ⁻¹}(f')`.
/// 3. Forward moves at `1, …, m−1` carry `τ` to the back: `f' ∘ τ`.
/// 4. Forward moves at `m−1, …, 1` carry it to the front again as
///    `c_{P'}(τ)`, where `P'` is the product of `f'`; centrality of the
///    product makes this `τ`, giving `τ ∘ f'`.
/// 5. Undoing step 1 returns `f`.
///
/// The path is replayed before it is returned.
pub fn auroux_path(f: &Factorization, h: usize) -> Result<Vec<Move>, HurwitzError> {
    let m = f.len();
    if h == 0 || h > m {
        return Err(HurwitzError::FactorOutOfRange { index: h, len: m });
    }
    if !f.factors.iter().all(|t| t.commutes_with(&f.product)) {
        return Err(HurwitzError::NotCentral);
    }
    let to_front: Vec<Move> = (1..h).rev().map(Move::backward).collect();
    let mut from_inverse_conjugate = to_front.clone();
    from_inverse_conjugate.extend((1..m).map(Move::forward));
    from_inverse_conjugate.extend((1..m).rev().map(Move::forward));
    from_inverse_conjugate.extend(invert_path(&to_front));
    let path = invert_path(&from_inverse_conjugate);

    let tau = &f.factors[h - 1];
    let start = f.conjugated(tau);
    match apply_path(&start, &path) {
        Ok(end) if &end == f => Ok(path),
        _ => Err(HurwitzError::ReplayFailed),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{braid_equal, BraidWord, Letter};
    use proptest::prelude::*;

    fn p(text: &str, n: usize) -> Perm {
        Perm::parse_cycles(text, n).unwrap()
    }

    fn fact(items: &[&str], n: usize) -> Factorization {
        Factorization::new(items.iter().map(|t| p(t, n)).collect()).unwrap()
    }

    #[test]
    fn move_examples() {
        let f = fact(&["(1,2)", "(1,2)"], 2);
        assert_eq!(hurwitz_move(&f, 1, Direction::Forward).unwrap(), f);
        let g = fact(&["(1,2)", "(2,3)"], 3);
        assert_eq!(
            hurwitz_move(&g, 1, Direction::Forward).unwrap(),
            fact(&["(1,3)", "(1,2)"], 3)
        );
        assert_eq!(
            hurwitz_move(&g, 2, Direction::Forward),
            Err(HurwitzError::IndexOutOfRange { index: 2, max: 1 })
        );
        assert!(hurwitz_move(&g, 0, Direction::Backward).is_err());
    }

    #[test]
    fn conjugation_examples() {
        let f = fact(&["(1,2)", "(2,3)"], 3);
        assert_eq!(simultaneous_conjugate(&f, &Perm::identity(3)).unwrap(), f);
        let c = simultaneous_conjugate(&f, &p("(1,2,3)", 3)).unwrap();
        assert_eq!(c, fact(&["(2,3)", "(1,3)"], 3));
        assert!(simultaneous_conjugate(&f, &Perm::identity(4)).is_err());
    }

    #[test]
    fn orbit_examples() {
        let r = orbit(&fact(&["(1,2)", "(1,2)"], 2), 10, false);
        assert_eq!((r.size, r.exhausted), (1, true));
        let r = orbit(&fact(&["(1,2)", "(2,3)"], 3), 10, false);
        assert_eq!((r.size, r.exhausted), (3, true));
        assert_eq!(
            r.representatives,
            vec![
                fact(&["(2,3)", "(1,3)"], 3),
                fact(&["(1,2)", "(2,3)"], 3),
                fact(&["(1,3)", "(1,2)"], 3),
            ]
        );
        let capped = orbit(&fact(&["(1,2)", "(2,3)"], 3), 2, false);
        assert_eq!((capped.size, capped.exhausted), (2, false));
    }

    #[test]
    fn orbit_mod_conjugation_collapses() {
        let f = fact(&["(1,2)", "(2,3)"], 3);
        let r = orbit(&f, 100, true);
        assert!(r.exhausted);
        assert_eq!(r.size, 1);
        assert_eq!(r.invariant_summary.subgroup_order, Some(6));
    }

    #[test]
    fn four_transposition_orbit_is_closed() {
        let f = fact(&["(1,2)", "(1,3)", "(2,3)", "(1,2)"], 3);
        let r = orbit(&f, 100_000, false);
        assert!(r.exhausted);
        // Every 4-tuple of transpositions with a 3-cycle product generates S3,
        // so the orbit is the whole fibre of the product map.
        let transpositions = ["(1,2)", "(1,3)", "(2,3)"].map(|t| p(t, 3));
        let mut fibre = 0;
        for ix in 0..81usize {
            let tuple: Vec<Perm> = (0..4)
                .map(|k| transpositions[(ix / 3usize.pow(k)) % 3].clone())
                .collect();
            if Factorization::new(tuple).unwrap().product() == f.product() {
                fibre += 1;
            }
        }
        assert_eq!(fibre, 27);
        assert_eq!(r.size, fibre);
        for x in &r.representatives {
            assert_eq!(x.product(), f.product());
            assert_eq!(x.cycle_types(), f.cycle_types());
            for m in all_moves(x.len()) {
                assert!(r.representatives.contains(&x.moved(m)));
            }
        }
    }

    #[test]
    fn equivalence_examples() {
        let f = fact(&["(1,2)", "(2,3)"], 3);
        assert_eq!(equivalent(&f, &f, 10).unwrap(), Equivalence::Yes(vec![]));
        let g = fact(&["(2,3)", "(1,3)"], 3);
        let Equivalence::Yes(path) = equivalent(&f, &g, 10).unwrap() else {
            panic!("expected equivalence");
        };
        assert_eq!(path.len(), 1);
        assert_eq!(apply_path(&f, &path).unwrap(), g);
        assert_eq!(
            equivalent(&f, &fact(&["(1,2)", "(1,3)"], 3), 10).unwrap(),
            Equivalence::No
        );
        assert!(matches!(
            equivalent(&f, &fact(&["(1,2)"], 3), 10),
            Err(HurwitzError::LengthMismatch { .. })
        ));
    }

    #[test]
    fn equivalence_reports_unknown_at_cap() {
        let f = fact(&["(1,2)", "(1,3)", "(2,3)", "(1,2)"], 3);
        let far = orbit(&f, 100, false).representatives.last().unwrap().clone();
        assert_eq!(equivalent(&f, &far, 2).unwrap(), Equivalence::Unknown);
    }

    #[test]
    fn auroux_examples() {
        let t = p("(1,2,3)", 4);
        let f = Factorization::new(vec![t.clone(), t]).unwrap();
        let path = auroux_path(&f, 1).unwrap();
        assert_eq!(
            apply_path(&simultaneous_conjugate(&f, &f.factors()[0]).unwrap(), &path).unwrap(),
            f
        );

        let six = fact(&["(1,2)", "(1,3)", "(2,3)", "(1,2)", "(1,3)", "(2,3)"], 3);
        assert!(six.factors().iter().all(|t| t.commutes_with(six.product())));
        for h in 1..=6 {
            let path = auroux_path(&six, h).unwrap();
            let start = simultaneous_conjugate(&six, &six.factors()[h - 1]).unwrap();
            assert_eq!(apply_path(&start, &path).unwrap(), six);
        }
    }

    #[test]
    fn auroux_rejects_non_central() {
        let f = fact(&["(1,2)", "(2,3)"], 3);
        assert_eq!(auroux_path(&f, 1), Err(HurwitzError::NotCentral));
        assert!(matches!(auroux_path(&f, 3), Err(HurwitzError::FactorOutOfRange { .. })));
    }

    #[test]
    fn json_shape() {
        let f = fact(&["(1,2)", "(2,3)"], 3);
        let v = serde_json::to_value(&f).unwrap();
        assert_eq!(
            v,
            serde_json::json!({"degree": 3, "factors": [
                {"degree": 3, "cycles": [[1,2]]},
                {"degree": 3, "cycles": [[2,3]]}
            ]})
        );
        let moves = serde_json::to_value(vec![Move::forward(1), Move::backward(2)]).unwrap();
        assert_eq!(moves, serde_json::json!([{"i":1,"dir":"f"},{"i":2,"dir":"b"}]));
        let bad = serde_json::json!({"degree": 4, "factors": [{"degree": 3, "cycles": []}]});
        assert!(serde_json::from_value::<Factorization>(bad).is_err());
    }

    fn perm_strategy(n: usize) -> impl Strategy<Value = Perm> {
        Just((1..=n).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Perm::from_images(&v).unwrap())
    }

    fn factorization_strategy(n: usize, max_len: usize) -> impl Strategy<Value = Factorization> {
        prop::collection::vec(perm_strategy(n), 2..=max_len).prop_map(|v| Factorization::new(v).unwrap())
    }

    proptest! {
        #[test]
        fn backward_undoes_forward(f in factorization_strategy(5, 5), i in 1usize..5) {
            prop_assume!(i < f.len());
            let g = hurwitz_move(&f, i, Direction::Forward).unwrap();
            prop_assert_eq!(hurwitz_move(&g, i, Direction::Backward).unwrap(), f);
        }

        #[test]
        fn conjugation_product(f in factorization_strategy(5, 4), b in perm_strategy(5)) {
            let c = simultaneous_conjugate(&f, &b).unwrap();
            let recomputed = Factorization::new(c.factors().to_vec()).unwrap();
            prop_assert_eq!(c.product(), recomputed.product());
            prop_assert_eq!(c.product(), &b.mul(f.product()).mul(&b.inverse()));
        }

        #[test]
        fn braid_equal_words_act_equally(
            f in factorization_strategy(4, 5),
            letters in prop::collection::vec((1usize..5, any::<bool>()), 0..8),
        ) {
            let n = f.len();
            let letters: Vec<Letter> = letters
                .into_iter()
                .filter(|(i, _)| *i < n)
                .map(|(i, inv)| Letter::new(i, inv))
                .collect();
            let b = BraidWord::new(n, letters).unwrap();
            // b · Δ² · Δ⁻² and Δ² · b · Δ⁻² are both equal to b in B_n.
            let tw = crate::braid::full_twist(n).unwrap();
            let b2 = tw.then(&b).unwrap().then(&tw.inverse()).unwrap();
            prop_assert!(braid_equal(&b, &b2).unwrap());
            prop_assert_eq!(act_braid(&f, &b).unwrap(), act_braid(&f, &b2).unwrap());
        }

        #[test]
        fn auroux_on_identity_factorizations(
            half in prop::collection::vec(perm_strategy(4), 1..=3),
            h in 1usize..=6,
        ) {
            // t_1 … t_k t_k⁻¹ … t_1⁻¹ multiplies to the identity.
            let mut factors = half.clone();
            factors.extend(half.iter().rev().map(Perm::inverse));
            let f = Factorization::new(factors).unwrap();
            prop_assume!(h <= f.len());
            let path = auroux_path(&f, h).unwrap();
            let start = simultaneous_conjugate(&f, &f.factors()[h - 1]).unwrap();
            prop_assert_eq!(apply_path(&start, &path).unwrap(), f);
        }
    }
}

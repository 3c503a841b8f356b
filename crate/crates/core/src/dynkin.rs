//! Configurations of (−2)-curves: intersection matrices, ADE and extended
//! ADE recognition, fundamental cycles and the rational double point table.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DynkinError {
    #[error("configuration has no curves")]
    Empty,
    #[error("curve index {index} out of range 1..={count}")]
    IndexOutOfRange { index: usize, count: usize },
    #[error("curve {0} meets itself")]
    SelfLoop(usize),
    #[error("intersection multiplicity {0} is not 1 or 2")]
    BadMultiplicity(u8),
    #[error("edge {0}-{1} given twice")]
    DuplicateEdge(usize, usize),
    #[error("configuration is disconnected")]
    Disconnected,
    #[error("not an ADE diagram: {0}")]
    NotAde(NotAde),
    #[error("not an extended ADE diagram")]
    NotExtended,
    #[error("unknown label {0:?}")]
    UnknownLabel(String),
}

impl DynkinError {
    pub fn name(&self) -> &'static str {
        match self {
            DynkinError::Empty => "Empty",
            DynkinError::IndexOutOfRange { .. } => "IndexOutOfRange",
            DynkinError::SelfLoop(_) => "SelfLoop",
            DynkinError::BadMultiplicity(_) => "BadMultiplicity",
            DynkinError::DuplicateEdge(..) => "DuplicateEdge",
            DynkinError::Disconnected => "Disconnected",
            DynkinError::NotAde(_) => "NotADE",
            DynkinError::NotExtended => "NotExtended",
            DynkinError::UnknownLabel(_) => "UnknownLabel",
        }
    }
}

/// A connected configuration of smooth rational curves with self-intersection −2.
/// Curves are numbered from 1 at the API, from 0 internally.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CurveConfig {
    count: usize,
    edges: BTreeMap<(usize, usize), u8>,
}

#[derive(Serialize, Deserialize)]
struct ConfigRepr {
    count: usize,
    edges: Vec<(usize, usize, u8)>,
}

impl CurveConfig {
    /// `edges` are `(i, j, multiplicity)` with 1-based indices.
    pub fn new(count: usize, edges: &[(usize, usize, u8)]) -> Result<CurveConfig, DynkinError> {
        if count == 0 {
            return Err(DynkinError::Empty);
        }
        let mut map = BTreeMap::new();
        for &(i, j, m) in edges {
            for x in [i, j] {
                if x == 0 || x > count {
                    return Err(DynkinError::IndexOutOfRange { index: x, count });
                }
            }
            if i == j {
                return Err(DynkinError::SelfLoop(i));
            }
            if !(1..=2).contains(&m) {
                return Err(DynkinError::BadMultiplicity(m));
            }
            let key = (i.min(j) - 1, i.max(j) - 1);
            if map.insert(key, m).is_some() {
                return Err(DynkinError::DuplicateEdge(key.0 + 1, key.1 + 1));
            }
        }
        let cfg = CurveConfig { count, edges: map };
        if !cfg.is_connected() {
            return Err(DynkinError::Disconnected);
        }
        Ok(cfg)
    }

    pub fn path(n: usize) -> Result<CurveConfig, DynkinError> {
        let edges: Vec<_> = (1..n).map(|i| (i, i + 1, 1)).collect();
        CurveConfig::new(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<CurveConfig, DynkinError> {
        match n {
            0 | 1 => Err(DynkinError::SelfLoop(1)),
            2 => CurveConfig::new(2, &[(1, 2, 2)]),
            _ => {
                let mut edges: Vec<_> = (1..n).map(|i| (i, i + 1, 1)).collect();
                edges.push((n, 1, 1));
                CurveConfig::new(n, &edges)
            }
        }
    }

    /// Curve 1 is the centre; each arm is a chain of the given length hanging off it.
    pub fn star(arms: &[usize]) -> Result<CurveConfig, DynkinError> {
        let mut edges = Vec::new();
        let mut next = 2;
        for &len in arms {
            let mut prev = 1;
            for _ in 0..len {
                edges.push((prev, next, 1));
                prev = next;
                next += 1;
            }
        }
        CurveConfig::new(next - 1, &edges)
    }

    pub fn from_label(label: AdeLabel) -> Result<CurveConfig, DynkinError> {
        match label {
            AdeLabel::A(n) => CurveConfig::path(n),
            AdeLabel::D(n) => CurveConfig::star(&[1, 1, n - 3]),
            AdeLabel::E6 => CurveConfig::star(&[1, 2, 2]),
            AdeLabel::E7 => CurveConfig::star(&[1, 2, 3]),
            AdeLabel::E8 => CurveConfig::star(&[1, 2, 4]),
        }
    }

    pub fn from_extended(label: ExtendedLabel) -> Result<CurveConfig, DynkinError> {
        match label {
            ExtendedLabel::A(n) => CurveConfig::cycle(n + 1),
            ExtendedLabel::D(4) => CurveConfig::star(&[1, 1, 1, 1]),
            ExtendedLabel::D(n) => {
                // Two forks joined by a chain: n + 1 curves.
                let mut edges = vec![(1, 3, 1), (2, 3, 1)];
                for k in 3..n - 1 {
                    edges.push((k, k + 1, 1));
                }
                edges.push((n - 1, n, 1));
                edges.push((n - 1, n + 1, 1));
                CurveConfig::new(n + 1, &edges)
            }
            ExtendedLabel::E6 => CurveConfig::star(&[2, 2, 2]),
            ExtendedLabel::E7 => CurveConfig::star(&[1, 3, 3]),
            ExtendedLabel::E8 => CurveConfig::star(&[1, 2, 5]),
        }
    }

    pub fn count(&self) -> usize {
        self.count
    }

    /// Edges as `(i, j, multiplicity)` with 1-based `i < j`.
    pub fn edges(&self) -> Vec<(usize, usize, u8)> {
        self.edges.iter().map(|(&(i, j), &m)| (i + 1, j + 1, m)).collect()
    }

    fn neighbours(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.count];
        for &(i, j) in self.edges.keys() {
            adj[i].push(j);
            adj[j].push(i);
        }
        adj
    }

    fn is_connected(&self) -> bool {
        let adj = self.neighbours();
        let mut seen = vec![false; self.count];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Symmetric matrix with −2 on the diagonal and multiplicities elsewhere.
    pub fn intersection_matrix(&self) -> Vec<Vec<i64>> {
        let mut m = vec![vec![0i64; self.count]; self.count];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = -2;
        }
        for (&(i, j), &mult) in &self.edges {
            m[i][j] = mult as i64;
            m[j][i] = mult as i64;
        }
        m
    }

    /// The configuration with one more curve, and that curve's 1-based index.
    fn with_node(&self, attach: &[(usize, u8)]) -> (CurveConfig, usize) {
        let mut edges = self.edges.clone();
        for &(v, m) in attach {
            edges.insert((v, self.count), m);
        }
        (
            CurveConfig {
                count: self.count + 1,
                edges,
            },
            self.count + 1,
        )
    }
}

impl Serialize for CurveConfig {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ConfigRepr {
            count: self.count,
            edges: self.edges(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CurveConfig {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = ConfigRepr::deserialize(d)?;
        CurveConfig::new(r.count, &r.edges).map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AdeLabel {
    A(usize),
    D(usize),
    E6,
    E7,
    E8,
}

impl AdeLabel {
    /// Number of curves, which is also the Milnor number.
    pub fn rank(self) -> usize {
        match self {
            AdeLabel::A(n) | AdeLabel::D(n) => n,
            AdeLabel::E6 => 6,
            AdeLabel::E7 => 7,
            AdeLabel::E8 => 8,
        }
    }
}

impl fmt::Display for AdeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AdeLabel::A(n) => write!(f, "A{n}"),
            AdeLabel::D(n) => write!(f, "D{n}"),
            AdeLabel::E6 => f.write_str("E6"),
            AdeLabel::E7 => f.write_str("E7"),
            AdeLabel::E8 => f.write_str("E8"),
        }
    }
}

impl FromStr for AdeLabel {
    type Err = DynkinError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || DynkinError::UnknownLabel(s.to_string());
        let t = s.trim();
        let mut chars = t.chars();
        let kind = chars.next().ok_or_else(unknown)?.to_ascii_uppercase();
        let n: usize = chars.as_str().trim_start_matches('_').parse().map_err(|_| unknown())?;
        match (kind, n) {
            ('A', n) if n >= 1 => Ok(AdeLabel::A(n)),
            ('D', n) if n >= 4 => Ok(AdeLabel::D(n)),
            ('E', 6) => Ok(AdeLabel::E6),
            ('E', 7) => Ok(AdeLabel::E7),
            ('E', 8) => Ok(AdeLabel::E8),
            _ => Err(unknown()),
        }
    }
}

impl Serialize for AdeLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Extended (affine) diagrams; the index is one less than the number of curves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtendedLabel {
    A(usize),
    D(usize),
    E6,
    E7,
    E8,
}

impl fmt::Display for ExtendedLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedLabel::A(n) => write!(f, "~A{n}"),
            ExtendedLabel::D(n) => write!(f, "~D{n}"),
            ExtendedLabel::E6 => f.write_str("~E6"),
            ExtendedLabel::E7 => f.write_str("~E7"),
            ExtendedLabel::E8 => f.write_str("~E8"),
        }
    }
}

impl Serialize for ExtendedLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum NotAdeReason {
    MultipleEdge,
    Cycle { length: usize },
    HighDegree { curve: usize, degree: usize },
    TwoBranchVertices { distance: usize },
    LongArms { arms: [usize; 3] },
    NotNegativeDefinite,
}

/// Why a configuration is not ADE, with the extended diagram it contains.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NotAde {
    pub reason: NotAdeReason,
    pub forbidden: Option<ExtendedLabel>,
}

impl fmt::Display for NotAde {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.reason {
            NotAdeReason::MultipleEdge => write!(f, "multiple edge")?,
            NotAdeReason::Cycle { length } => write!(f, "cycle of length {length}")?,
            NotAdeReason::HighDegree { curve, degree } => write!(f, "curve {curve} has degree {degree}")?,
            NotAdeReason::TwoBranchVertices { distance } => write!(f, "two branch vertices at distance {distance}")?,
            NotAdeReason::LongArms { arms } => write!(f, "arms {}, {}, {} too long", arms[0], arms[1], arms[2])?,
            NotAdeReason::NotNegativeDefinite => write!(f, "not negative definite")?,
        }
        if let Some(x) = self.forbidden {
            write!(f, " (contains {x})")?;
        }
        Ok(())
    }
}

/// Leading principal minors by fraction-free (Bareiss) elimination, stopping
/// at the first zero pivot.
fn leading_minors(m: &[Vec<i64>]) -> Vec<i128> {
    let n = m.len();
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut minors = Vec::with_capacity(n);
    let mut prev = 1i128;
    for k in 0..n {
        let pivot = a[k][k];
        minors.push(pivot);
        if pivot == 0 {
            break;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = pivot;
    }
    minors
}

fn determinant(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

fn negated(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
    m.iter().map(|r| r.iter().map(|&x| -x).collect()).collect()
}

fn positive_definite(m: &[Vec<i64>]) -> bool {
    let minors = leading_minors(m);
    minors.len() == m.len() && minors.iter().all(|&d| d > 0)
}

fn delete_index(m: &[Vec<i64>], k: usize) -> Vec<Vec<i64>> {
    m.iter()
        .enumerate()
        .filter(|&(i, _)| i != k)
        .map(|(_, r)| r.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, &x)| x).collect())
        .collect()
}

/// All leading principal minors of `−M` are positive.
pub fn is_negative_definite(cfg: &CurveConfig) -> bool {
    positive_definite(&negated(&cfg.intersection_matrix()))
}

/// Negative semidefinite with a one-dimensional radical: `det M = 0` and some
/// principal submatrix of size `count − 1` is negative definite (interlacing).
pub fn is_semidefinite_corank_one(cfg: &CurveConfig) -> bool {
    let m = negated(&cfg.intersection_matrix());
    determinant(&m) == 0 && (0..cfg.count).any(|k| positive_definite(&delete_index(&m, k)))
}

/// Tree shapes with at most one branch vertex.
enum Shape {
    /// Vertices in order along the chain.
    Path(Vec<usize>),
    /// Centre and arms (each listed outward), sorted by length.
    Star { centre: usize, arms: Vec<Vec<usize>> },
}

fn shortest_cycle(adj: &[Vec<usize>]) -> Option<usize> {
    let n = adj.len();
    let mut best: Option<usize> = None;
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(v) = q.pop_front() {
            for &w in &adj[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    q.push_back(w);
                } else if parent[v] != w {
                    let len = dist[v] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

fn arm_from(adj: &[Vec<usize>], centre: usize, first: usize) -> Vec<usize> {
    let mut arm = vec![first];
    let (mut prev, mut cur) = (centre, first);
    while let Some(&next) = adj[cur].iter().find(|&&w| w != prev) {
        arm.push(next);
        prev = cur;
        cur = next;
    }
    arm
}

/// Distances between the closest pair of branch vertices in a tree.
fn closest_branch_distance(adj: &[Vec<usize>], branches: &[usize]) -> usize {
    let mut best = usize::MAX;
    for &s in branches {
        let mut dist = vec![usize::MAX; adj.len()];
        dist[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(v) = q.pop_front() {
            for &w in &adj[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    q.push_back(w);
                }
            }
        }
        for &t in branches {
            if t != s {
                best = best.min(dist[t]);
            }
        }
    }
    best
}

/// Reduces a simple-edged configuration to a path or a three-armed star, or
/// explains which forbidden subdiagram prevents it.
fn shape(cfg: &CurveConfig) -> Result<Shape, NotAde> {
    if cfg.edges.values().any(|&m| m > 1) {
        return Err(NotAde {
            reason: NotAdeReason::MultipleEdge,
            forbidden: Some(ExtendedLabel::A(1)),
        });
    }
    let adj = cfg.neighbours();
    if let Some((v, d)) = adj.iter().enumerate().map(|(v, a)| (v, a.len())).find(|&(_, d)| d >= 4) {
        return Err(NotAde {
            reason: NotAdeReason::HighDegree {
                curve: v + 1,
                degree: d,
            },
            forbidden: Some(ExtendedLabel::D(4)),
        });
    }
    if let Some(length) = shortest_cycle(&adj) {
        return Err(NotAde {
            reason: NotAdeReason::Cycle { length },
            forbidden: Some(ExtendedLabel::A(length - 1)),
        });
    }
    let branches: Vec<usize> = (0..cfg.count).filter(|&v| adj[v].len() == 3).collect();
    match branches.len() {
        0 => {
            let start = (0..cfg.count).find(|&v| adj[v].len() <= 1).unwrap_or(0);
            let mut order = vec![start];
            if let Some(&first) = adj[start].first() {
                order.extend(arm_from(&adj, start, first));
            }
            Ok(Shape::Path(order))
        }
        1 => {
            let centre = branches[0];
            let mut arms: Vec<Vec<usize>> = adj[centre].iter().map(|&w| arm_from(&adj, centre, w)).collect();
            arms.sort_by_key(|a| a.len());
            Ok(Shape::Star { centre, arms })
        }
        _ => {
            let distance = closest_branch_distance(&adj, &branches);
            Err(NotAde {
                reason: NotAdeReason::TwoBranchVertices { distance },
                forbidden: Some(ExtendedLabel::D(distance + 4)),
            })
        }
    }
}

fn star_label(arms: [usize; 3]) -> Result<AdeLabel, NotAde> {
    let long = |forbidden| {
        Err(NotAde {
            reason: NotAdeReason::LongArms { arms },
            forbidden: Some(forbidden),
        })
    };
    match arms {
        [1, 1, r] => Ok(AdeLabel::D(r + 3)),
        [1, 2, 2] => Ok(AdeLabel::E6),
        [1, 2, 3] => Ok(AdeLabel::E7),
        [1, 2, 4] => Ok(AdeLabel::E8),
        [1, 2, _] => long(ExtendedLabel::E8),
        [1, _, _] => long(ExtendedLabel::E7),
        _ => long(ExtendedLabel::E6),
    }
}

fn arm_lengths(arms: &[Vec<usize>]) -> [usize; 3] {
    [arms[0].len(), arms[1].len(), arms[2].len()]
}

/// ADE label of a configuration, or the reason it has none.
pub fn classify(cfg: &CurveConfig) -> Result<AdeLabel, NotAde> {
    let label = match shape(cfg)? {
        Shape::Path(order) => AdeLabel::A(order.len()),
        Shape::Star { arms, .. } => star_label(arm_lengths(&arms))?,
    };
    if !is_negative_definite(cfg) {
        return Err(NotAde {
            reason: NotAdeReason::NotNegativeDefinite,
            forbidden: None,
        });
    }
    Ok(label)
}

/// Extended ADE label, when the shape matches and the form is semidefinite
/// with a one-dimensional radical.
pub fn classify_extended(cfg: &CurveConfig) -> Option<ExtendedLabel> {
    let n = cfg.count;
    let adj = cfg.neighbours();
    let degrees: Vec<usize> = adj.iter().map(Vec::len).collect();
    let label = if n == 2 && cfg.edges.values().all(|&m| m == 2) {
        Some(ExtendedLabel::A(1))
    } else if cfg.edges.values().any(|&m| m > 1) {
        None
    } else if n >= 3 && degrees.iter().all(|&d| d == 2) {
        Some(ExtendedLabel::A(n - 1))
    } else if cfg.edges.len() != n - 1 {
        None
    } else {
        let branches: Vec<usize> = (0..n).filter(|&v| degrees[v] >= 3).collect();
        match branches.as_slice() {
            [c] if degrees[*c] == 4 && n == 5 => Some(ExtendedLabel::D(4)),
            [c] if degrees[*c] == 3 => {
                let mut arms: Vec<usize> = adj[*c].iter().map(|&w| arm_from(&adj, *c, w).len()).collect();
                arms.sort_unstable();
                match arms.as_slice() {
                    [2, 2, 2] => Some(ExtendedLabel::E6),
                    [1, 3, 3] => Some(ExtendedLabel::E7),
                    [1, 2, 5] => Some(ExtendedLabel::E8),
                    _ => None,
                }
            }
            [x, y] if degrees[*x] == 3 && degrees[*y] == 3 => {
                let leaves = |v: usize| adj[v].iter().filter(|&&w| degrees[w] == 1).count();
                (leaves(*x) == 2 && leaves(*y) == 2).then_some(ExtendedLabel::D(n - 1))
            }
            _ => None,
        }
    };
    label.filter(|_| is_semidefinite_corank_one(cfg))
}

/// Effective divisor `Σ n_i C_i` on a configuration.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Cycle {
    pub coefficients: Vec<i64>,
}

impl Cycle {
    /// `Z · C_i` for each curve.
    pub fn dot_curves(&self, cfg: &CurveConfig) -> Vec<i64> {
        cfg.intersection_matrix()
            .iter()
            .map(|row| row.iter().zip(&self.coefficients).map(|(m, n)| m * n).sum())
            .collect()
    }

    pub fn self_intersection(&self, cfg: &CurveConfig) -> i64 {
        self.dot_curves(cfg)
            .iter()
            .zip(&self.coefficients)
            .map(|(d, n)| d * n)
            .sum()
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coefficients.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Minimal positive cycle with `Z · C_i ≤ 0` for all `i`, by Artin's ascent
/// from the reduced sum of all curves.
pub fn fundamental_cycle(cfg: &CurveConfig) -> Result<Cycle, DynkinError> {
    classify(cfg).map_err(DynkinError::NotAde)?;
    let m = cfg.intersection_matrix();
    let mut z = vec![1i64; cfg.count];
    loop {
        let bad = (0..cfg.count).find(|&i| m[i].iter().zip(&z).map(|(a, b)| a * b).sum::<i64>() > 0);
        match bad {
            Some(i) => z[i] += 1,
            None => break,
        }
    }
    let cycle = Cycle { coefficients: z };
    debug_assert_eq!(cycle.self_intersection(cfg), -2);
    Ok(cycle)
}

/// Primitive positive generator `F` of the radical of an extended diagram:
/// `F · C_i = 0` for all `i`.
pub fn elliptic_divisor(cfg: &CurveConfig) -> Result<Cycle, DynkinError> {
    classify_extended(cfg).ok_or(DynkinError::NotExtended)?;
    let n = cfg.count;
    let m = cfg.intersection_matrix();
    // Fix the coordinate whose removal leaves a definite block, solve for the rest.
    let neg = negated(&m);
    let k = (0..n)
        .find(|&k| positive_definite(&delete_index(&neg, k)))
        .ok_or(DynkinError::NotExtended)?;
    let idx: Vec<usize> = (0..n).filter(|&i| i != k).collect();
    let size = idx.len();
    let mut a: Vec<Vec<Ratio<i64>>> = idx
        .iter()
        .map(|&i| {
            let mut row: Vec<Ratio<i64>> = idx.iter().map(|&j| Ratio::from_integer(m[i][j])).collect();
            row.push(Ratio::from_integer(-m[i][k]));
            row
        })
        .collect();
    for col in 0..size {
        let piv = (col..size)
            .find(|&r| a[r][col] != Ratio::from_integer(0))
            .ok_or(DynkinError::NotExtended)?;
        a.swap(col, piv);
        let p = a[col][col];
        for x in a[col].iter_mut() {
            *x /= p;
        }
        for r in 0..size {
            if r != col && a[r][col] != Ratio::from_integer(0) {
                let factor = a[r][col];
                let pivot_row = a[col].clone();
                for (x, v) in a[r].iter_mut().zip(pivot_row) {
                    *x -= factor * v;
                }
            }
        }
    }
    let mut values = vec![Ratio::from_integer(0i64); n];
    values[k] = Ratio::from_integer(1);
    for (r, &i) in idx.iter().enumerate() {
        values[i] = a[r][size];
    }
    let denom = values.iter().fold(1i64, |acc, v| acc.lcm(v.denom()));
    let mut ints: Vec<i64> = values.iter().map(|v| (v * denom).to_integer()).collect();
    let g = ints.iter().fold(0i64, |acc, &x| acc.gcd(&x));
    let sign = if ints.iter().any(|&x| x < 0) { -1 } else { 1 };
    for x in ints.iter_mut() {
        *x = sign * *x / g;
    }
    Ok(Cycle { coefficients: ints })
}

/// Adds the extending curve of an ADE diagram. Returns the extended
/// configuration and the 1-based index of the new curve; `F` of the result
/// has coefficient 1 there and equals the fundamental cycle elsewhere.
pub fn extend(cfg: &CurveConfig) -> Result<(CurveConfig, usize), DynkinError> {
    let label = classify(cfg).map_err(DynkinError::NotAde)?;
    let shape = shape(cfg).map_err(DynkinError::NotAde)?;
    let attach: Vec<(usize, u8)> = match (label, shape) {
        (AdeLabel::A(1), _) => vec![(0, 2)],
        (AdeLabel::A(_), Shape::Path(order)) => vec![(order[0], 1), (*order.last().unwrap(), 1)],
        (AdeLabel::D(4), Shape::Star { centre, .. }) => vec![(centre, 1)],
        (AdeLabel::D(_), Shape::Star { arms, .. }) => {
            let long = &arms[2];
            vec![(long[long.len() - 2], 1)]
        }
        (AdeLabel::E6, Shape::Star { arms, .. }) => vec![(*arms[0].last().unwrap(), 1)],
        (AdeLabel::E7, Shape::Star { arms, .. }) => vec![(*arms[1].last().unwrap(), 1)],
        (AdeLabel::E8, Shape::Star { arms, .. }) => vec![(*arms[2].last().unwrap(), 1)],
        _ => unreachable!("label and shape come from the same classification"),
    };
    Ok(cfg.with_node(&attach))
}

/// Static data for the rational double point of a given type.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RdpData {
    pub label: AdeLabel,
    /// `z² = f(x, y)`.
    pub equation: String,
    pub milnor_number: usize,
    /// Group of graded automorphisms of the local ring.
    pub aut_group: &'static str,
}

pub fn rdp_data(label: AdeLabel) -> Result<RdpData, DynkinError> {
    let (equation, aut_group) = match label {
        AdeLabel::A(0) => return Err(DynkinError::UnknownLabel(label.to_string())),
        AdeLabel::A(1) => ("z^2 = x^2 + y^2".to_string(), "GL(2,C)/{±1}"),
        AdeLabel::A(n) => (format!("z^2 = x^2 + y^{}", n + 1), "(C*)^2 × Z/2"),
        AdeLabel::D(n) if n < 4 => return Err(DynkinError::UnknownLabel(label.to_string())),
        AdeLabel::D(4) => ("z^2 = y(x^2 + y^2)".to_string(), "C* × S3"),
        AdeLabel::D(n) => (format!("z^2 = y(x^2 + y^{})", n - 2), "C* × Z/2"),
        AdeLabel::E6 => ("z^2 = x^3 + y^4".to_string(), "C* × Z/2"),
        // Classical form; y(x^2 + y^3) would be the D5 curve.
        AdeLabel::E7 => ("z^2 = x(x^2 + y^3)".to_string(), "C*"),
        AdeLabel::E8 => ("z^2 = x^3 + y^5".to_string(), "C*"),
    };
    Ok(RdpData {
        label,
        equation,
        milnor_number: label.rank(),
        aut_group,
    })
}

//! Riemann–Hurwitz arithmetic for orbifold signatures `(b; m_1, …, m_r)`.
//!
//! Everything is exact rational arithmetic.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Rational = Ratio<i64>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrbifoldError {
    #[error("branch order {0} is below 2")]
    InvalidOrder(u64),
    #[error("triangle ({0}, {1}, {2}) is not of elliptic type")]
    NotElliptic(u64, u64, u64),
    #[error("{quantity} = {value} is not an integer")]
    NotIntegral { quantity: &'static str, value: String },
    #[error("forced genus {0} is negative")]
    NegativeGenus(i64),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("cannot parse signature: {0}")]
    Parse(String),
}

impl OrbifoldError {
    pub fn name(&self) -> &'static str {
        match self {
            OrbifoldError::InvalidOrder(_) => "InvalidOrder",
            OrbifoldError::NotElliptic(..) => "NotElliptic",
            OrbifoldError::NotIntegral { .. } => "NotIntegral",
            OrbifoldError::NegativeGenus(_) => "NegativeGenus",
            OrbifoldError::InvalidParameter(_) => "InvalidParameter",
            OrbifoldError::Parse(_) => "Parse",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupType {
    Elliptic,
    Parabolic,
    Hyperbolic,
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroupType::Elliptic => "Elliptic",
            GroupType::Parabolic => "Parabolic",
            GroupType::Hyperbolic => "Hyperbolic",
        })
    }
}

/// Genus of the quotient curve plus the branching orders.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrbifoldSignature {
    genus: u64,
    branch_orders: Vec<u64>,
}

impl OrbifoldSignature {
    pub fn new(genus: u64, branch_orders: Vec<u64>) -> Result<OrbifoldSignature, OrbifoldError> {
        if let Some(&m) = branch_orders.iter().find(|&&m| m < 2) {
            return Err(OrbifoldError::InvalidOrder(m));
        }
        Ok(OrbifoldSignature { genus, branch_orders })
    }

    pub fn triangle(m1: u64, m2: u64, m3: u64) -> Result<OrbifoldSignature, OrbifoldError> {
        OrbifoldSignature::new(0, vec![m1, m2, m3])
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }

    pub fn branch_orders(&self) -> &[u64] {
        &self.branch_orders
    }

    /// Sign of the orbifold Euler number, which generalizes the triangle trichotomy.
    pub fn group_type(&self) -> GroupType {
        type_of_sign(orbifold_euler(self))
    }
}

impl fmt::Display for OrbifoldSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};", self.genus)?;
        for (k, m) in self.branch_orders.iter().enumerate() {
            write!(f, "{}{m}", if k == 0 { " " } else { "," })?;
        }
        write!(f, ")")
    }
}

/// Parses `"(b; m1,m2,...)"`; the branch list may be empty (`"(2;)"` or `"(2)"`).
impl FromStr for OrbifoldSignature {
    type Err = OrbifoldError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || OrbifoldError::Parse(s.to_string());
        let body = s
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(err)?;
        let (genus, orders) = body.split_once(';').unwrap_or((body, ""));
        let genus: u64 = genus.trim().parse().map_err(|_| err())?;
        let orders = orders
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<u64>().map_err(|_| err()))
            .collect::<Result<Vec<_>, _>>()?;
        OrbifoldSignature::new(genus, orders)
    }
}

fn type_of_sign(x: Rational) -> GroupType {
    match x.cmp(&Rational::from_integer(0)) {
        std::cmp::Ordering::Greater => GroupType::Elliptic,
        std::cmp::Ordering::Equal => GroupType::Parabolic,
        std::cmp::Ordering::Less => GroupType::Hyperbolic,
    }
}

fn reciprocal_sum(ms: &[u64]) -> Rational {
    ms.iter().map(|&m| Rational::new(1, m as i64)).sum()
}

fn check_orders(ms: &[u64]) -> Result<(), OrbifoldError> {
    match ms.iter().find(|&&m| m < 2) {
        Some(&m) => Err(OrbifoldError::InvalidOrder(m)),
        None => Ok(()),
    }
}

/// Elliptic iff `Σ 1/m_i > 1`, parabolic iff `= 1`, hyperbolic iff `< 1`.
pub fn classify_triangle(m1: u64, m2: u64, m3: u64) -> Result<GroupType, OrbifoldError> {
    check_orders(&[m1, m2, m3])?;
    Ok(type_of_sign(reciprocal_sum(&[m1, m2, m3]) - 1))
}

/// Order of the finite rotation group with elliptic signature `(m1, m2, m3)`:
/// `|G| = 2 / (Σ 1/m_i − 1)`.
pub fn elliptic_order(m1: u64, m2: u64, m3: u64) -> Result<u64, OrbifoldError> {
    if classify_triangle(m1, m2, m3)? != GroupType::Elliptic {
        return Err(OrbifoldError::NotElliptic(m1, m2, m3));
    }
    let order = Rational::from_integer(2) / (reciprocal_sum(&[m1, m2, m3]) - 1);
    if !order.is_integer() {
        return Err(OrbifoldError::NotIntegral {
            quantity: "group order",
            value: order.to_string(),
        });
    }
    Ok(order.to_integer() as u64)
}

/// `2 − 2b − Σ (1 − 1/m_i)`.
pub fn orbifold_euler(sig: &OrbifoldSignature) -> Rational {
    let base = Rational::from_integer(2 - 2 * sig.genus as i64);
    sig.branch_orders.iter().fold(base, |acc, &m| {
        acc - (Rational::from_integer(1) - Rational::new(1, m as i64))
    })
}

/// Genus `g` of a Galois cover with group of the given order branched with
/// signature `sig`: `2g − 2 = |G| · (−χ_orb)`.
pub fn cover_genus(sig: &OrbifoldSignature, group_order: u64) -> Result<u64, OrbifoldError> {
    if group_order == 0 {
        return Err(OrbifoldError::InvalidParameter("group order must be positive".into()));
    }
    let two_g_minus_two = -orbifold_euler(sig) * Rational::from_integer(group_order as i64);
    let genus = (two_g_minus_two + 2) / 2;
    if !genus.is_integer() {
        return Err(OrbifoldError::NotIntegral {
            quantity: "genus",
            value: genus.to_string(),
        });
    }
    let g = genus.to_integer();
    if g < 0 {
        return Err(OrbifoldError::NegativeGenus(g));
    }
    Ok(g as u64)
}

/// Invariants of `(C_1 × C_2)/G` for a free action of `G`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsogenousInvariants {
    pub e: i64,
    pub chi: i64,
    pub k2: i64,
}

/// `e = 4 (g1 − 1)(g2 − 1) / |G|`, `χ = e / 4`, `K² = 8 χ`.
pub fn isogenous_invariants(g1: u64, g2: u64, group_order: u64) -> Result<IsogenousInvariants, OrbifoldError> {
    if g1 < 2 || g2 < 2 {
        return Err(OrbifoldError::InvalidParameter(format!(
            "genera must be at least 2, got {g1} and {g2}"
        )));
    }
    if group_order == 0 {
        return Err(OrbifoldError::InvalidParameter("group order must be positive".into()));
    }
    let numerator = 4 * (g1 as i64 - 1) * (g2 as i64 - 1);
    let e = Rational::new(numerator, group_order as i64);
    if !e.is_integer() {
        return Err(OrbifoldError::NotIntegral {
            quantity: "e",
            value: e.to_string(),
        });
    }
    let chi = e / 4;
    if !chi.is_integer() {
        return Err(OrbifoldError::NotIntegral {
            quantity: "chi",
            value: chi.to_string(),
        });
    }
    let chi = chi.to_integer();
    Ok(IsogenousInvariants {
        e: e.to_integer(),
        chi,
        k2: 8 * chi,
    })
}

/// Lower bound `4 (g − 1)(b − 1)` for the Euler number of a fibration with
/// fibre genus `g` over a curve of genus `b`.
pub fn zeuthen_segre_bound(g: i64, b: i64) -> i64 {
    4 * (g - 1) * (b - 1)
}

/// Number of singular members of a Lefschetz pencil:
/// `μ = (−1)^n (e(X) + e(Z) − 2 e(Y))`.
pub fn pencil_singular_fibres(e_x: i64, e_y: i64, e_z: i64, n: u32) -> i64 {
    let s = e_x + e_z - 2 * e_y;
    if n.is_multiple_of(2) {
        s
    } else {
        -s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sig(s: &str) -> OrbifoldSignature {
        s.parse().unwrap()
    }

    #[test]
    fn triangle_types() {
        assert_eq!(classify_triangle(2, 3, 5).unwrap(), GroupType::Elliptic);
        assert_eq!(classify_triangle(3, 3, 3).unwrap(), GroupType::Parabolic);
        assert_eq!(classify_triangle(2, 3, 6).unwrap(), GroupType::Parabolic);
        assert_eq!(classify_triangle(2, 4, 4).unwrap(), GroupType::Parabolic);
        assert_eq!(classify_triangle(2, 3, 7).unwrap(), GroupType::Hyperbolic);
        assert_eq!(classify_triangle(1, 3, 7), Err(OrbifoldError::InvalidOrder(1)));
    }

    #[test]
    fn elliptic_orders() {
        for m in 2..=10 {
            assert_eq!(elliptic_order(2, 2, m).unwrap(), 2 * m);
        }
        assert_eq!(elliptic_order(2, 3, 3).unwrap(), 12);
        assert_eq!(elliptic_order(2, 3, 4).unwrap(), 24);
        assert_eq!(elliptic_order(2, 3, 5).unwrap(), 60);
        assert!(matches!(elliptic_order(2, 3, 6), Err(OrbifoldError::NotElliptic(..))));
    }

    #[test]
    fn euler_numbers() {
        assert_eq!(orbifold_euler(&sig("(1;)")), Rational::from_integer(0));
        assert_eq!(orbifold_euler(&sig("(0; 5,5,5)")), Rational::new(-2, 5));
        assert_eq!(orbifold_euler(&sig("(0; 2,2,2,2)")), Rational::from_integer(0));
    }

    #[test]
    fn cover_genera() {
        assert_eq!(cover_genus(&sig("(0; 5,5,5)"), 25).unwrap(), 6);
        assert_eq!(cover_genus(&sig("(2;)"), 2).unwrap(), 3);
        assert_eq!(cover_genus(&sig("(0; 2,2,2)"), 4).unwrap(), 0);
        assert!(matches!(
            cover_genus(&sig("(0; 2,2,3)"), 5),
            Err(OrbifoldError::NotIntegral { .. })
        ));
        assert_eq!(cover_genus(&sig("(0;)"), 2), Err(OrbifoldError::NegativeGenus(-1)));
    }

    #[test]
    fn isogenous_examples() {
        assert_eq!(
            isogenous_invariants(6, 6, 25).unwrap(),
            IsogenousInvariants { e: 4, chi: 1, k2: 8 }
        );
        assert_eq!(
            isogenous_invariants(2, 2, 1).unwrap(),
            IsogenousInvariants { e: 4, chi: 1, k2: 8 }
        );
        assert!(matches!(
            isogenous_invariants(2, 3, 8),
            Err(OrbifoldError::NotIntegral { quantity: "chi", .. })
        ));
    }

    #[test]
    fn zeuthen_segre_and_pencils() {
        assert_eq!(zeuthen_segre_bound(1, 17), 0);
        assert_eq!(zeuthen_segre_bound(2, 2), 4);
        assert_eq!(zeuthen_segre_bound(6, 2), 20);
        assert_eq!(pencil_singular_fibres(3, 2, 1, 2), 0);
        assert_eq!(pencil_singular_fibres(3, 2, 4, 2), 3);
        assert_eq!(pencil_singular_fibres(3, 2, 4, 3), -3);
    }

    #[test]
    fn signature_text() {
        let s = sig("(0; 5,5,5)");
        assert_eq!(s.to_string(), "(0; 5,5,5)");
        assert_eq!(sig("(2)"), sig("(2;)"));
        assert!("(0; 1,2)".parse::<OrbifoldSignature>().is_err());
        assert!("0; 2".parse::<OrbifoldSignature>().is_err());
    }

    proptest! {
        #[test]
        fn triangle_type_is_symmetric(a in 2u64..40, b in 2u64..40, c in 2u64..40) {
            let t = classify_triangle(a, b, c).unwrap();
            prop_assert_eq!(t, classify_triangle(b, c, a).unwrap());
            prop_assert_eq!(t, classify_triangle(c, a, b).unwrap());
            prop_assert_eq!(t, classify_triangle(b, a, c).unwrap());
            prop_assert_eq!(t, OrbifoldSignature::triangle(a, b, c).unwrap().group_type());
            prop_assert_eq!(
                t == GroupType::Hyperbolic,
                orbifold_euler(&OrbifoldSignature::triangle(a, b, c).unwrap()) < Rational::from_integer(0)
            );
        }

        #[test]
        fn trivial_cover_keeps_genus(b in 0u64..50) {
            prop_assert_eq!(cover_genus(&OrbifoldSignature::new(b, vec![]).unwrap(), 1).unwrap(), b);
        }

        #[test]
        fn isogenous_relations(g1 in 2u64..30, g2 in 2u64..30, n in 1u64..50) {
            if let Ok(inv) = isogenous_invariants(g1, g2, n) {
                prop_assert_eq!(inv.k2, 2 * inv.e);
                prop_assert_eq!(inv.e, 4 * inv.chi);
            }
        }
    }
}

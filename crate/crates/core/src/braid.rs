//! Free-group words and the braid group `B_n` acting on a geometric basis
//! `γ_1, …, γ_n` of the free group of rank `n`.
//!
//! Generator substitutions (Artin action):
//!
//! | letter  | `γ_i`            | `γ_{i+1}`                 |
//! |---------|------------------|---------------------------|
//! | `σ_i`   | `γ_{i+1}`        | `γ_{i+1}⁻¹ γ_i γ_{i+1}`   |
//! | `σ_i⁻¹` | `γ_i γ_{i+1} γ_i⁻¹` | `γ_i`                  |
//!
//! A braid word acts letter by letter, leftmost letter first. Equality of
//! braid words is decided by comparing the images of every `γ_i`; this relies
//! on faithfulness of the Artin representation, which is classical but not
//! re-proved here.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::permgroup::Perm;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("strand mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("generator index {index} out of range for {limit}")]
    IndexOutOfRange { index: usize, limit: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("cannot parse word: {0}")]
    Parse(String),
}

impl BraidError {
    pub fn name(&self) -> &'static str {
        match self {
            BraidError::RankMismatch { .. } => "RankMismatch",
            BraidError::StrandMismatch { .. } => "StrandMismatch",
            BraidError::IndexOutOfRange { .. } => "IndexOutOfRange",
            BraidError::InvalidParameter(_) => "InvalidParameter",
            BraidError::Parse(_) => "Parse",
        }
    }
}

/// A generator or its inverse. `index` is 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Letter {
    pub index: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(index: usize, inverse: bool) -> Letter {
        Letter { index, inverse }
    }

    pub fn inv(self) -> Letter {
        Letter {
            index: self.index,
            inverse: !self.inverse,
        }
    }

    fn cancels(self, other: Letter) -> bool {
        self.index == other.index && self.inverse != other.inverse
    }
}

fn parse_letters(text: &str, prefix: char) -> Result<Vec<Letter>, String> {
    let mut out = Vec::new();
    for tok in text.split_whitespace() {
        if tok == "1" || tok == "e" {
            continue;
        }
        let body = tok.strip_prefix(prefix).ok_or_else(|| tok.to_string())?;
        let (idx, inverse) = match body.split_once('^') {
            Some((idx, "-1")) => (idx, true),
            Some((idx, "1")) => (idx, false),
            Some(_) => return Err(tok.to_string()),
            None => (body, false),
        };
        let index: usize = idx.parse().map_err(|_| tok.to_string())?;
        out.push(Letter { index, inverse });
    }
    Ok(out)
}

fn write_letters(f: &mut fmt::Formatter<'_>, letters: &[Letter], prefix: char) -> fmt::Result {
    if letters.is_empty() {
        return write!(f, "1");
    }
    for (k, l) in letters.iter().enumerate() {
        if k > 0 {
            write!(f, " ")?;
        }
        write!(f, "{prefix}{}", l.index)?;
        if l.inverse {
            write!(f, "^-1")?;
        }
    }
    Ok(())
}

/// A freely reduced word in the free group on `γ_1, …, γ_rank`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FreeWord {
    rank: usize,
    letters: Vec<Letter>,
}

impl FreeWord {
    pub fn identity(rank: usize) -> FreeWord {
        FreeWord {
            rank,
            letters: Vec::new(),
        }
    }

    /// `γ_i`.
    pub fn generator(rank: usize, i: usize) -> Result<FreeWord, BraidError> {
        FreeWord::from_letters(rank, vec![Letter::new(i, false)])
    }

    /// Validates indices and freely reduces.
    pub fn from_letters(rank: usize, letters: Vec<Letter>) -> Result<FreeWord, BraidError> {
        if let Some(l) = letters.iter().find(|l| l.index == 0 || l.index > rank) {
            return Err(BraidError::IndexOutOfRange {
                index: l.index,
                limit: rank,
            });
        }
        let mut w = FreeWord::identity(rank);
        for l in letters {
            w.push(l);
        }
        Ok(w)
    }

    /// Parses `"g1 g2^-1"`; `"1"` or an empty string is the identity.
    pub fn parse(text: &str, rank: usize) -> Result<FreeWord, BraidError> {
        let letters = parse_letters(text, 'g').map_err(BraidError::Parse)?;
        FreeWord::from_letters(rank, letters)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    fn push(&mut self, l: Letter) {
        match self.letters.last() {
            Some(&last) if last.cancels(l) => {
                self.letters.pop();
            }
            _ => self.letters.push(l),
        }
    }

    pub fn multiply(&self, other: &FreeWord) -> Result<FreeWord, BraidError> {
        if self.rank != other.rank {
            return Err(BraidError::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        let mut out = self.clone();
        for &l in &other.letters {
            out.push(l);
        }
        Ok(out)
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            rank: self.rank,
            letters: self.letters.iter().rev().map(|l| l.inv()).collect(),
        }
    }

    /// `γ_1 γ_2 ⋯ γ_rank`.
    pub fn boundary(rank: usize) -> FreeWord {
        FreeWord {
            rank,
            letters: (1..=rank).map(|i| Letter::new(i, false)).collect(),
        }
    }

    /// Replaces each `γ_j` by `images[j-1]` (inverses by inverse images).
    pub fn substitute(&self, images: &[FreeWord]) -> FreeWord {
        let rank = images.first().map_or(self.rank, |w| w.rank);
        let mut out = FreeWord::identity(rank);
        for l in &self.letters {
            let img = &images[l.index - 1];
            if l.inverse {
                for &x in img.letters.iter().rev() {
                    out.push(x.inv());
                }
            } else {
                for &x in &img.letters {
                    out.push(x);
                }
            }
        }
        out
    }

    /// Image under the Artin substitution for a single braid letter.
    fn act_letter(&self, l: Letter) -> FreeWord {
        let i = l.index;
        let gi = Letter::new(i, false);
        let gj = Letter::new(i + 1, false);
        let mut out = FreeWord::identity(self.rank);
        for &x in &self.letters {
            let image: Vec<Letter> = match (x.index == i, x.index == i + 1, l.inverse) {
                (true, _, false) => vec![gj],
                (_, true, false) => vec![gj.inv(), gi, gj],
                (true, _, true) => vec![gi, gj, gi.inv()],
                (_, true, true) => vec![gi],
                _ => {
                    out.push(x);
                    continue;
                }
            };
            if x.inverse {
                image.iter().rev().for_each(|&y| out.push(y.inv()));
            } else {
                image.iter().for_each(|&y| out.push(y));
            }
        }
        out
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.letters, 'g')
    }
}

/// A word in the Artin generators `σ_1, …, σ_{strands-1}`. Not normalized.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<BraidWord, BraidError> {
        if strands == 0 {
            return Err(BraidError::InvalidParameter("strands must be positive".into()));
        }
        if let Some(l) = letters.iter().find(|l| l.index == 0 || l.index >= strands) {
            return Err(BraidError::IndexOutOfRange {
                index: l.index,
                limit: strands - 1,
            });
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> BraidWord {
        BraidWord {
            strands,
            letters: Vec::new(),
        }
    }

    /// `σ_i` (or `σ_i⁻¹`) on `strands` strands.
    pub fn generator(strands: usize, i: usize, inverse: bool) -> Result<BraidWord, BraidError> {
        BraidWord::new(strands, vec![Letter::new(i, inverse)])
    }

    /// Parses `"s1 s2^-1 s1"`.
    pub fn parse(text: &str, strands: usize) -> Result<BraidWord, BraidError> {
        let letters = parse_letters(text, 's').map_err(BraidError::Parse)?;
        BraidWord::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| l.inv()).collect(),
        }
    }

    /// Concatenation `self · other`.
    pub fn then(&self, other: &BraidWord) -> Result<BraidWord, BraidError> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    pub fn pow(&self, k: usize) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.repeat(k),
        }
    }

    /// Images of `γ_1, …, γ_n` under this braid.
    pub fn generator_images(&self) -> Vec<FreeWord> {
        (1..=self.strands)
            .map(|i| {
                let mut w = FreeWord::identity(self.strands);
                w.push(Letter::new(i, false));
                artin_image(self, w)
            })
            .collect()
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.letters, 's')
    }
}

fn artin_image(b: &BraidWord, mut w: FreeWord) -> FreeWord {
    for &l in &b.letters {
        w = w.act_letter(l);
    }
    w
}

/// Image of `w` under the free-group automorphism of `b`, leftmost letter first.
pub fn artin_apply(b: &BraidWord, w: &FreeWord) -> Result<FreeWord, BraidError> {
    if b.strands != w.rank {
        return Err(BraidError::RankMismatch {
            left: b.strands,
            right: w.rank,
        });
    }
    Ok(artin_image(b, w.clone()))
}

/// Semantic equality in `B_n`: both words move every `γ_i` to the same reduced word.
pub fn braid_equal(b1: &BraidWord, b2: &BraidWord) -> Result<bool, BraidError> {
    if b1.strands != b2.strands {
        return Err(BraidError::StrandMismatch {
            left: b1.strands,
            right: b2.strands,
        });
    }
    Ok((1..=b1.strands).all(|i| {
        let g = FreeWord {
            rank: b1.strands,
            letters: vec![Letter::new(i, false)],
        };
        artin_image(b1, g.clone()) == artin_image(b2, g)
    }))
}

/// `Δ²_d = (σ_{d-1} σ_{d-2} ⋯ σ_1)^d` on `d` strands.
pub fn full_twist(d: usize) -> Result<BraidWord, BraidError> {
    if d < 2 {
        return Err(BraidError::InvalidParameter(format!(
            "full twist needs d >= 2, got {d}"
        )));
    }
    let sweep: Vec<Letter> = (1..d).rev().map(|i| Letter::new(i, false)).collect();
    Ok(BraidWord {
        strands: d,
        letters: sweep.repeat(d),
    })
}

/// Coxeter element of a chain of length `n`, realized on `n + 1` strands:
/// `(σ_1)(σ_2 σ_1) ⋯ (σ_n σ_{n-1} ⋯ σ_1)`.
pub fn coxeter_chain(n: usize) -> Result<BraidWord, BraidError> {
    if n < 1 {
        return Err(BraidError::InvalidParameter("chain length must be >= 1".into()));
    }
    let letters = (1..=n)
        .flat_map(|k| (1..=k).rev().map(|i| Letter::new(i, false)))
        .collect();
    Ok(BraidWord {
        strands: n + 1,
        letters,
    })
}

/// Homomorphism `B_n → S_n`, `σ_i ↦ (i i+1)`: the word `l_1 ⋯ l_k` maps to
/// `s_1 ∘ ⋯ ∘ s_k`.
pub fn braid_to_perm(b: &BraidWord) -> Perm {
    let mut images: Vec<usize> = (1..=b.strands).collect();
    // Right-multiplying by a transposition swaps the corresponding image slots.
    for l in &b.letters {
        images.swap(l.index - 1, l.index);
    }
    Perm::from_images(&images).expect("swaps of a bijection stay a bijection")
}

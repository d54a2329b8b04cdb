//! Block-word encoding of type-2 matchings on even-k hosts.
//!
//! A type-2.0 matching of FS(j,2p) decomposes into p blocks, each spanning
//! two consecutive claws `(C_{2i}, C_{2i+1})`: inside a block the two claw
//! centers are matched to externals of one common role, and the other two
//! role pairs are matched straight across the block's internal gap. The
//! common role names the block's letter, so the whole matching is a word of
//! length p over `{X, Y, Z}`.
//!
//! Subtype 2.1 shifts the blocks down by one claw — `(C_{2i+1}, C_{2i+2})`,
//! with the wrap block `(C_{k-1}, C_0)` straddling the seam as the terminal
//! position. A wrap block's two star roles differ by the seam permutation;
//! its letter is the star role at the `C_{k-1}` end. With that convention
//! the hamiltonicity criterion below is exactly the same for both subtypes.
//!
//! The complement of a decoded matching is hamiltonian if and only if no
//! junction between blocks collapses into a 6-cycle: adjacent letters must
//! differ, and the (initial, terminal) letter pair must avoid three
//! forbidden configurations that depend on the seam.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::family::FSGraph;
use crate::graph::{EdgeId, Role};
use crate::matchings::{Matching, MatchingType};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("matching is not of type 2")]
    NotTypeTwo,
    #[error("block words require an even number of claws (k = {0})")]
    OddK(usize),
    #[error("block words require k >= 4 (k = {0})")]
    KTooSmall(usize),
    #[error("word length {found} does not match k/2 = {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("word letters must be x, y or z")]
    BadLetter,
    #[error("subtype must be 2.0 or 2.1")]
    BadSubtype,
}

/// A length-p word over `{X, Y, Z}` together with the subtype it encodes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockWord {
    letters: Vec<Role>,
    subtype: MatchingType,
}

impl BlockWord {
    pub fn new(letters: Vec<Role>, subtype: MatchingType) -> Result<Self, WordError> {
        if letters.iter().any(|r| r.external_index().is_none()) {
            return Err(WordError::BadLetter);
        }
        if subtype == MatchingType::One {
            return Err(WordError::BadSubtype);
        }
        Ok(BlockWord { letters, subtype })
    }

    pub fn letters(&self) -> &[Role] {
        &self.letters
    }

    pub fn subtype(&self) -> MatchingType {
        self.subtype
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl fmt::Display for BlockWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.letters {
            write!(f, "{}", r.letter().to_ascii_uppercase())?;
        }
        write!(f, "@{}", self.subtype)
    }
}

impl FromStr for BlockWord {
    type Err = WordError;

    /// Parses the `XYZ…@2.0` / `XYZ…@2.1` literal form.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (word, subtype) = s.split_once('@').ok_or(WordError::BadSubtype)?;
        let subtype = match subtype {
            "2.0" => MatchingType::TwoZero,
            "2.1" => MatchingType::TwoOne,
            _ => return Err(WordError::BadSubtype),
        };
        let letters = word
            .chars()
            .map(|c| Role::from_letter(c).filter(|r| *r != Role::T))
            .collect::<Option<Vec<Role>>>()
            .ok_or(WordError::BadLetter)?;
        BlockWord::new(letters, subtype)
    }
}

fn require_word_host(g: &FSGraph) -> Result<usize, WordError> {
    let k = g.k();
    if k % 2 != 0 {
        return Err(WordError::OddK(k));
    }
    if k < 4 {
        return Err(WordError::KTooSmall(k));
    }
    Ok(k / 2)
}

/// The claw pair of block `i` for the given subtype.
fn block_claws(k: usize, subtype: MatchingType, i: usize) -> (usize, usize) {
    match subtype {
        MatchingType::TwoZero => (2 * i, 2 * i + 1),
        MatchingType::TwoOne => (2 * i + 1, (2 * i + 2) % k),
        MatchingType::One => unreachable!("blocks exist only for type 2"),
    }
}

/// Reads the block word off a type-2 matching.
pub fn encode_word(m: &Matching<'_>) -> Result<BlockWord, WordError> {
    let g = m.host();
    let p = require_word_host(g)?;
    let subtype = match m.matching_type() {
        MatchingType::One => return Err(WordError::NotTypeTwo),
        t => t,
    };
    let k = g.k();
    let mut letters = Vec::with_capacity(p);
    for i in 0..p {
        let (left, right) = block_claws(k, subtype, i);
        let letter = m.star_role(left);
        // non-wrap blocks carry one role on both centers; the wrap block's
        // right star role is the seam image of the left one
        let expect_right = if right == 0 {
            g.seam().apply(letter)
        } else {
            letter
        };
        debug_assert_eq!(m.star_role(right), expect_right);
        letters.push(letter);
    }
    BlockWord::new(letters, subtype)
}

/// Builds the unique type-2 matching realizing a block word.
pub fn decode_word<'g>(g: &'g FSGraph, w: &BlockWord) -> Result<Matching<'g>, WordError> {
    let p = require_word_host(g)?;
    if w.len() != p {
        return Err(WordError::LengthMismatch {
            expected: p,
            found: w.len(),
        });
    }
    let k = g.k();
    let mut edges: Vec<EdgeId> = Vec::with_capacity(2 * k);
    for (i, &letter) in w.letters().iter().enumerate() {
        let (left, right) = block_claws(k, w.subtype(), i);
        edges.push(g.star_edge(left, letter));
        if right == 0 {
            // wrap block: cross the seam with the two non-letter roles
            edges.push(g.star_edge(0, g.seam().apply(letter)));
            for r in Role::EXTERNAL {
                if r != letter {
                    edges.push(g.seam_edge(r));
                }
            }
        } else {
            edges.push(g.star_edge(right, letter));
            for r in Role::EXTERNAL {
                if r != letter {
                    edges.push(g.path_edge(left, r));
                }
            }
        }
    }
    let m = Matching::new(g, edges).expect("block words decode to perfect matchings");
    debug_assert_eq!(m.matching_type(), w.subtype());
    Ok(m)
}

/// The three forbidden (initial letter, terminal letter) configurations per
/// family member. A pair `(a, b)` is forbidden exactly when the seam maps
/// `b` to `a`, which collapses the junction between the terminal and initial
/// blocks into a 6-cycle.
pub fn forbidden_pairs(j: u8) -> [(Role, Role); 3] {
    use Role::{X, Y, Z};
    match j {
        1 => [(X, Y), (Y, Z), (Z, X)],
        2 => [(X, X), (Y, Z), (Z, Y)],
        3 => [(X, X), (Y, Y), (Z, Z)],
        _ => panic!("j must be 1, 2 or 3"),
    }
}

/// Word-level hamiltonicity criterion: no equal adjacent letters, and the
/// extremal pair is not forbidden. Valid for both subtypes.
pub fn word_admits_hamiltonian(j: u8, letters: &[Role]) -> bool {
    if letters.windows(2).any(|w| w[0] == w[1]) {
        return false;
    }
    let pair = (letters[0], letters[letters.len() - 1]);
    !forbidden_pairs(j).contains(&pair)
}

/// All length-p words over `{X, Y, Z}` in lexicographic order.
pub fn all_words(p: usize) -> Vec<Vec<Role>> {
    let mut out = Vec::with_capacity(3usize.pow(p as u32));
    let mut current = vec![Role::X; p];
    loop {
        out.push(current.clone());
        // odometer increment
        let mut i = p;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            current[i] = match current[i] {
                Role::X => Role::Y,
                Role::Y => Role::Z,
                Role::Z => {
                    current[i] = Role::X;
                    continue;
                }
                Role::T => unreachable!(),
            };
            break;
        }
    }
}

/// Number of type-2 matchings whose complement is hamiltonian, counted by
/// the word criterion over all `3^(k/2)` words and doubled for the two
/// subtypes.
pub fn hamiltonian_type2_count(g: &FSGraph) -> Result<u64, WordError> {
    let p = require_word_host(g)?;
    let per_subtype = all_words(p)
        .iter()
        .filter(|w| word_admits_hamiltonian(g.j(), w))
        .count() as u64;
    Ok(2 * per_subtype)
}

/// Number of length-p words with no equal adjacent letters that start with a
/// fixed letter and do not end with that same letter. Satisfies the
/// recurrence `u_2 = 2`, `u_p = 2^(p-1) - u_(p-1)`.
pub fn open_count_same(p: u32) -> u128 {
    assert!(p >= 2);
    let sign: i128 = if p % 2 == 0 { 1 } else { -1 };
    ((2i128.pow(p) + 2 * sign) / 3) as u128
}

/// Number of length-p words with no equal adjacent letters that start with a
/// fixed letter and do not end with a fixed *different* letter. Satisfies
/// `v_2 = 1`, `v_p = 2^(p-1) - v_(p-1)`.
pub fn open_count_distinct(p: u32) -> u128 {
    assert!(p >= 2);
    let sign: i128 = if p % 2 == 0 { 1 } else { -1 };
    ((2i128.pow(p) - sign) / 3) as u128
}

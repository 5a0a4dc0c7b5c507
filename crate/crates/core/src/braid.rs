//! Braid words in the text format `"n: L1 L2 ..."`, where a letter is a
//! signed generator index `±i` or a singular letter `i!`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Letter {
    pub index: usize,
    pub positive: bool,
}

impl Letter {
    pub fn pos(index: usize) -> Self {
        Letter { index, positive: true }
    }

    pub fn neg(index: usize) -> Self {
        Letter { index, positive: false }
    }

    pub fn inverse(self) -> Self {
        Letter { positive: !self.positive, ..self }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LetterKind {
    Positive,
    Negative,
    Singular,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SingularLetter {
    pub index: usize,
    pub kind: LetterKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self> {
        if strands < 1 {
            return Err(Error::Parse("strand count must be at least 1".into()));
        }
        for l in &letters {
            check_index(l.index, strands)?;
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn parse(s: &str) -> Result<Self> {
        let w = SingularBraidWord::parse(s)?;
        if w.singular_count() > 0 {
            return Err(Error::Parse(format!("singular letter in a plain braid word: {s:?}")));
        }
        Ok(w.resolve(&[]))
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn writhe(&self) -> i32 {
        self.letters.iter().map(|l| if l.positive { 1 } else { -1 }).sum()
    }

    /// `2α = n - writhe`.
    pub fn two_alpha(&self) -> i32 {
        self.strands as i32 - self.writhe()
    }

    /// `⌊α⌋` with `α = (n - writhe)/2`.
    pub fn alpha_floor(&self) -> i32 {
        self.two_alpha().div_euclid(2)
    }

    pub fn mirror(&self) -> BraidWord {
        BraidWord { strands: self.strands, letters: self.letters.iter().map(|l| l.inverse()).collect() }
    }

    /// Number of components of the closure.
    pub fn components(&self) -> usize {
        let mut perm: Vec<usize> = (0..self.strands).collect();
        for l in &self.letters {
            perm.swap(l.index - 1, l.index);
        }
        let mut seen = vec![false; self.strands];
        let mut count = 0;
        for s in 0..self.strands {
            if !seen[s] {
                count += 1;
                let mut t = s;
                while !seen[t] {
                    seen[t] = true;
                    t = perm[t];
                }
            }
        }
        count
    }

    pub fn is_knot(&self) -> bool {
        self.components() == 1
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.strands)?;
        for l in &self.letters {
            let sign = if l.positive { "" } else { "-" };
            write!(f, " {sign}{}", l.index)?;
        }
        Ok(())
    }
}

impl FromStr for BraidWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        BraidWord::parse(s)
    }
}

fn check_index(index: usize, strands: usize) -> Result<()> {
    if index < 1 || index >= strands {
        return Err(Error::IndexOutOfRange { index: index as i64, strands });
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SingularBraidWord {
    strands: usize,
    letters: Vec<SingularLetter>,
}

impl SingularBraidWord {
    pub fn new(strands: usize, letters: Vec<SingularLetter>) -> Result<Self> {
        if strands < 1 {
            return Err(Error::Parse("strand count must be at least 1".into()));
        }
        for l in &letters {
            check_index(l.index, strands)?;
        }
        Ok(SingularBraidWord { strands, letters })
    }

    pub fn parse(s: &str) -> Result<Self> {
        let (head, body) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected \"n: letters\", got {s:?}")))?;
        let strands: usize = head
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad strand count {:?}", head.trim())))?;
        if strands < 1 {
            return Err(Error::Parse("strand count must be at least 1".into()));
        }
        let mut letters = Vec::new();
        for tok in body.split_whitespace() {
            let (num, kind) = if let Some(t) = tok.strip_suffix('!') {
                (t, LetterKind::Singular)
            } else if let Some(t) = tok.strip_prefix('-') {
                (t, LetterKind::Negative)
            } else {
                (tok.strip_prefix('+').unwrap_or(tok), LetterKind::Positive)
            };
            if num.is_empty() || !num.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::Parse(format!("malformed letter {tok:?}")));
            }
            let index: i64 = num.parse().map_err(|_| Error::Parse(format!("malformed letter {tok:?}")))?;
            if index < 1 || index >= strands as i64 {
                return Err(Error::IndexOutOfRange { index, strands });
            }
            letters.push(SingularLetter { index: index as usize, kind });
        }
        Ok(SingularBraidWord { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[SingularLetter] {
        &self.letters
    }

    /// Positions of the singular letters in the word.
    pub fn singular_positions(&self) -> Vec<usize> {
        (0..self.letters.len()).filter(|&p| self.letters[p].kind == LetterKind::Singular).collect()
    }

    pub fn singular_count(&self) -> usize {
        self.singular_positions().len()
    }

    /// Resolves the singular letters; `signs[t]` is the sign of the `t`-th
    /// singular letter (`true` for the positive crossing).
    pub fn resolve(&self, signs: &[bool]) -> BraidWord {
        let mut t = 0;
        let letters = self
            .letters
            .iter()
            .map(|l| match l.kind {
                LetterKind::Positive => Letter::pos(l.index),
                LetterKind::Negative => Letter::neg(l.index),
                LetterKind::Singular => {
                    let s = signs[t];
                    t += 1;
                    Letter { index: l.index, positive: s }
                }
            })
            .collect();
        BraidWord { strands: self.strands, letters }
    }
}

impl fmt::Display for SingularBraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.strands)?;
        for l in &self.letters {
            match l.kind {
                LetterKind::Positive => write!(f, " {}", l.index)?,
                LetterKind::Negative => write!(f, " -{}", l.index)?,
                LetterKind::Singular => write!(f, " {}!", l.index)?,
            }
        }
        Ok(())
    }
}

impl FromStr for SingularBraidWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SingularBraidWord::parse(s)
    }
}

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A word in the simple generators. Letters are stored 0-based and written
/// 1-based (`"1 2 1"`).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Word {
    letters: Vec<usize>,
}

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word { letters }
    }

    pub fn empty() -> Self {
        Word::default()
    }

    /// Builds a word from 1-based letters.
    pub fn from_one_based(letters: &[usize]) -> Self {
        Word { letters: letters.iter().map(|l| l - 1).collect() }
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn reversed(&self) -> Word {
        Word { letters: self.letters.iter().rev().copied().collect() }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    pub fn check_rank(&self, rank: usize) -> Result<()> {
        match self.letters.iter().find(|&&l| l >= rank) {
            Some(&l) => Err(Error::LetterOutOfRange { letter: l + 1, rank }),
            None => Ok(()),
        }
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.letters.iter().map(|l| l + 1).collect()
    }
}

/// Letters reversed; a reduced word of `c` becomes one of `c^{-1}`.
pub fn reverse_word(w: &Word) -> Word {
    w.reversed()
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for tok in s.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
            let l: usize = tok.parse().map_err(|_| Error::BadWord(s.to_string()))?;
            if l == 0 {
                return Err(Error::BadWord(s.to_string()));
            }
            letters.push(l - 1);
        }
        Ok(Word { letters })
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", l + 1)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let w: Word = "1 2 1".parse().unwrap();
        assert_eq!(w.letters(), &[0, 1, 0]);
        assert_eq!(w.to_string(), "1 2 1");
        assert_eq!("".parse::<Word>().unwrap(), Word::empty());
        assert!("1 0".parse::<Word>().is_err());
        assert!("1 x".parse::<Word>().is_err());
    }

    #[test]
    fn reverse() {
        assert_eq!(reverse_word(&"1 2".parse().unwrap()).to_string(), "2 1");
        assert_eq!(reverse_word(&Word::empty()), Word::empty());
        assert_eq!(reverse_word(&"1 2 3".parse().unwrap()).to_string(), "3 2 1");
    }

    #[test]
    fn rank_check() {
        let w: Word = "1 3".parse().unwrap();
        assert!(w.check_rank(3).is_ok());
        assert_eq!(w.check_rank(2), Err(Error::LetterOutOfRange { letter: 3, rank: 2 }));
    }
}

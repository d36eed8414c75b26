//! Finite Coxeter groups: root systems, element arithmetic, reduced words,
//! braid moves, Demazure products, Coxeter elements and sorting words.

mod element;
mod roots;
mod spec;
mod word;

use std::collections::{BTreeSet, HashMap, VecDeque};

pub use element::GroupElement;
pub use roots::{Root, RootId, RootSystem};
pub use spec::{Component, CoxeterSpec, Family};
pub use word::{reverse_word, Word};

use crate::error::{Error, Result};

/// Default cap for [`reduced_words`].
pub const DEFAULT_WORD_CAP: usize = 1_000_000;

pub fn build_root_system(spec: CoxeterSpec) -> Result<RootSystem> {
    RootSystem::new(spec)
}

/// `s_{l_1} · s_{l_2} · … · s_{l_k}`.
pub fn element_of_word(rs: &RootSystem, w: &Word) -> Result<GroupElement> {
    w.check_rank(rs.rank())?;
    let mut e = GroupElement::identity(rs);
    for &l in w.letters() {
        e.mul_simple_right(rs, l);
    }
    Ok(e)
}

pub fn length(rs: &RootSystem, w: &GroupElement) -> usize {
    w.length(rs)
}

/// A word is reduced iff every letter is a right ascent of the prefix before it.
pub fn is_reduced(rs: &RootSystem, w: &Word) -> Result<bool> {
    w.check_rank(rs.rank())?;
    let mut e = GroupElement::identity(rs);
    for &l in w.letters() {
        if !e.right_ascent(rs, l) {
            return Ok(false);
        }
        e.mul_simple_right(rs, l);
    }
    Ok(true)
}

/// The element sending every positive root to a negative one.
pub fn longest_element(rs: &RootSystem) -> GroupElement {
    let mut w = GroupElement::identity(rs);
    // keep multiplying by ascents until none is left
    'outer: loop {
        for i in 0..rs.rank() {
            if w.right_ascent(rs, i) {
                w.mul_simple_right(rs, i);
                continue 'outer;
            }
        }
        return w;
    }
}

/// Greedy Demazure fold: `w ← w·s` whenever that increases length.
pub fn demazure_product(rs: &RootSystem, q: &Word) -> Result<GroupElement> {
    q.check_rank(rs.rank())?;
    let mut w = GroupElement::identity(rs);
    for &l in q.letters() {
        if w.right_ascent(rs, l) {
            w.mul_simple_right(rs, l);
        }
    }
    Ok(w)
}

/// One reduced word for `w`, read off right descents.
pub fn some_reduced_word(rs: &RootSystem, w: &GroupElement) -> Word {
    let mut x = w.clone();
    let mut rev = Vec::new();
    'outer: while !x.is_identity() {
        for i in 0..rs.rank() {
            if !x.right_ascent(rs, i) {
                x.mul_simple_right(rs, i);
                rev.push(i);
                continue 'outer;
            }
        }
        unreachable!("a non-identity element has a right descent");
    }
    rev.reverse();
    Word::new(rev)
}

/// True iff `c` uses every generator exactly once.
pub fn is_coxeter_word(rs: &RootSystem, c: &Word) -> bool {
    let n = rs.rank();
    let mut seen = vec![false; n];
    c.len() == n
        && c.letters().iter().all(|&l| l < n && !std::mem::replace(&mut seen[l], true))
}

pub(crate) fn require_coxeter_word(rs: &RootSystem, c: &Word) -> Result<()> {
    if is_coxeter_word(rs, c) {
        Ok(())
    } else {
        Err(Error::NotCoxeterElement(c.to_string()))
    }
}

pub(crate) fn require_longest_word(rs: &RootSystem, wo: &Word) -> Result<()> {
    wo.check_rank(rs.rank())?;
    if wo.len() != rs.positive_count() || !is_reduced(rs, wo)? {
        return Err(Error::NotLongest(wo.to_string()));
    }
    Ok(())
}

/// All Coxeter elements with the lexicographically first word of each.
pub fn coxeter_elements(rs: &RootSystem) -> Vec<(GroupElement, Word)> {
    let n = rs.rank();
    let mut order: Vec<usize> = (0..n).collect();
    let mut seen = HashMap::new();
    let mut out = Vec::new();
    loop {
        let w = Word::new(order.clone());
        let e = element_of_word(rs, &w).expect("letters in range");
        if !seen.contains_key(&e) {
            seen.insert(e.clone(), out.len());
            out.push((e, w));
        }
        if !next_permutation(&mut order) {
            return out;
        }
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("pivot exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// The `c`-sorting word of `w`: the greedy reduced subword of `c c c …`
/// whose product is `w`.
pub fn sorting_word(rs: &RootSystem, c: &Word, w: &GroupElement) -> Result<Word> {
    require_coxeter_word(rs, c)?;
    // x = w^{-1}·(prefix); a letter s extends the prefix inside w iff x(α_s) < 0
    let mut x = w.inverse();
    let mut remaining = w.length(rs);
    let mut out = Vec::with_capacity(remaining);
    while remaining > 0 {
        for &s in c.letters() {
            if remaining > 0 && !x.right_ascent(rs, s) {
                x.mul_simple_right(rs, s);
                out.push(s);
                remaining -= 1;
            }
        }
    }
    Ok(Word::new(out))
}

/// Words reachable from `w` by a single braid move.
pub fn braid_neighbors(rs: &RootSystem, w: &Word) -> Result<Vec<Word>> {
    if !is_reduced(rs, w)? {
        return Err(Error::NotReduced(w.to_string()));
    }
    Ok(braid_moves(rs.spec(), w))
}

fn braid_moves(spec: &CoxeterSpec, w: &Word) -> Vec<Word> {
    let letters = w.letters();
    let n = spec.rank();
    let mut out = BTreeSet::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let m = spec.m(i, j);
            if m > letters.len() {
                continue;
            }
            for start in 0..=letters.len() - m {
                let window = &letters[start..start + m];
                let alternates = window
                    .iter()
                    .enumerate()
                    .all(|(k, &l)| l == if k % 2 == 0 { i } else { j });
                if alternates {
                    let mut next = letters.to_vec();
                    for (k, slot) in next[start..start + m].iter_mut().enumerate() {
                        *slot = if k % 2 == 0 { j } else { i };
                    }
                    out.insert(Word::new(next));
                }
            }
        }
    }
    out.into_iter().collect()
}

/// All reduced words of `w`, as the braid-move closure of one of them.
pub fn reduced_words(rs: &RootSystem, w: &GroupElement, cap: usize) -> Result<Vec<Word>> {
    let (words, complete) = reduced_words_bounded(rs, w, cap);
    if complete {
        Ok(words)
    } else {
        Err(Error::CapExceeded { cap })
    }
}

/// Like [`reduced_words`] but returns the first `cap` words found instead
/// of failing; the flag reports whether the class was exhausted.
pub fn reduced_words_bounded(rs: &RootSystem, w: &GroupElement, cap: usize) -> (Vec<Word>, bool) {
    let start = some_reduced_word(rs, w);
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(cur) = queue.pop_front() {
        for nb in braid_moves(rs.spec(), &cur) {
            if !seen.contains(&nb) {
                if seen.len() >= cap {
                    return (seen.into_iter().collect(), false);
                }
                seen.insert(nb.clone());
                queue.push_back(nb);
            }
        }
    }
    (seen.into_iter().collect(), true)
}

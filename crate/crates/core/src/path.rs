//! Dyck paths packed into a single machine word.
//!
//! Step `i` of a path is bit `i` of a `u128`, with `U = 1` and `D = 0`, so the
//! largest representable path has 128 steps (semilength 64). Factor scans and
//! hashing are word operations.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::limits::Caps;

/// Maximum number of steps a [`DyckPath`] can hold.
pub const MAX_STEPS: usize = 128;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    U,
    D,
}

impl Step {
    pub fn as_char(self) -> char {
        match self {
            Step::U => 'U',
            Step::D => 'D',
        }
    }
}

/// An immutable Dyck path.
///
/// Ordering is lexicographic on the step word with `U < D`; a proper prefix
/// sorts before its extensions.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct DyckPath {
    bits: u128,
    len: u8,
}

/// Fixed-width step word that is not required to be balanced. Used for
/// factors of paths (for instance the prefix `Q'` of an upper path, or a
/// consecutive pattern).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct StepWord {
    bits: u128,
    len: u8,
}

fn mask(len: usize) -> u128 {
    if len >= 128 {
        u128::MAX
    } else {
        (1u128 << len) - 1
    }
}

impl StepWord {
    pub fn empty() -> Self {
        StepWord::default()
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn step(&self, i: usize) -> Step {
        debug_assert!(i < self.len());
        if self.bits >> i & 1 == 1 {
            Step::U
        } else {
            Step::D
        }
    }

    pub fn steps(&self) -> impl Iterator<Item = Step> + '_ {
        (0..self.len()).map(move |i| self.step(i))
    }

    pub fn push(&mut self, step: Step) {
        assert!(self.len() < MAX_STEPS, "step word overflow");
        if step == Step::U {
            self.bits |= 1 << self.len;
        }
        self.len += 1;
    }

    pub fn extend_repeat(&mut self, step: Step, count: usize) {
        for _ in 0..count {
            self.push(step);
        }
    }

    pub fn append(&mut self, other: StepWord) {
        assert!(self.len() + other.len() <= MAX_STEPS, "step word overflow");
        if other.len > 0 {
            self.bits |= other.bits << self.len;
        }
        self.len += other.len;
    }

    /// Steps `start..end`.
    pub fn slice(&self, start: usize, end: usize) -> StepWord {
        assert!(start <= end && end <= self.len());
        let len = end - start;
        let bits = if len == 0 { 0 } else { (self.bits >> start) & mask(len) };
        StepWord { bits, len: len as u8 }
    }

    /// Whether `pattern` occurs as a consecutive factor.
    pub fn contains_factor(&self, pattern: &StepWord) -> bool {
        if pattern.len() > self.len() {
            return false;
        }
        let m = mask(pattern.len());
        (0..=self.len() - pattern.len()).any(|i| (self.bits >> i) & m == pattern.bits)
    }

    pub fn parse_word(word: &str) -> Result<StepWord> {
        let mut out = StepWord::empty();
        for (pos, ch) in word.chars().enumerate() {
            if pos >= MAX_STEPS {
                return Err(Error::TooLong { len: word.chars().count(), max: MAX_STEPS });
            }
            match ch {
                'U' => out.push(Step::U),
                'D' => out.push(Step::D),
                _ => return Err(Error::BadCharacter { pos, ch }),
            }
        }
        Ok(out)
    }

    /// Validates the word as a Dyck path.
    pub fn into_path(self) -> Result<DyckPath> {
        let mut height = 0i64;
        for (pos, step) in self.steps().enumerate() {
            height += if step == Step::U { 1 } else { -1 };
            if height < 0 {
                return Err(Error::GoesBelowAxis { pos });
            }
        }
        if height != 0 {
            let ups = self.bits.count_ones() as usize;
            return Err(Error::NotBalanced { ups, downs: self.len() - ups });
        }
        Ok(DyckPath { bits: self.bits, len: self.len })
    }
}

impl fmt::Display for StepWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in self.steps() {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for StepWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StepWord({self})")
    }
}

impl DyckPath {
    pub fn empty() -> Self {
        DyckPath { bits: 0, len: 0 }
    }

    /// `U^k D^k`.
    pub fn pyramid(k: usize) -> Self {
        let mut w = StepWord::empty();
        w.extend_repeat(Step::U, k);
        w.extend_repeat(Step::D, k);
        DyckPath { bits: w.bits, len: w.len }
    }

    /// `(UD)^n`.
    pub fn sawtooth(n: usize) -> Self {
        let mut w = StepWord::empty();
        for _ in 0..n {
            w.push(Step::U);
            w.push(Step::D);
        }
        DyckPath { bits: w.bits, len: w.len }
    }

    pub fn from_steps(steps: &[Step]) -> Result<Self> {
        if steps.len() > MAX_STEPS {
            return Err(Error::TooLong { len: steps.len(), max: MAX_STEPS });
        }
        let mut w = StepWord::empty();
        for &s in steps {
            w.push(s);
        }
        w.into_path()
    }

    /// Builds a path from a word already known to be balanced.
    pub(crate) fn from_word_unchecked(w: StepWord) -> Self {
        debug_assert!(w.into_path().is_ok(), "not a Dyck word: {w}");
        DyckPath { bits: w.bits, len: w.len }
    }

    pub fn word(&self) -> StepWord {
        StepWord { bits: self.bits, len: self.len }
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn semilength(&self) -> usize {
        self.len() / 2
    }

    pub fn step(&self, i: usize) -> Step {
        self.word().step(i)
    }

    pub fn steps(&self) -> impl Iterator<Item = Step> + '_ {
        (0..self.len()).map(move |i| self.step(i))
    }

    /// Heights after each prefix, including the empty prefix (length `2n + 1`).
    pub fn heights(&self) -> Vec<usize> {
        let mut h = Vec::with_capacity(self.len() + 1);
        let mut cur = 0usize;
        h.push(0);
        for s in self.steps() {
            match s {
                Step::U => cur += 1,
                Step::D => cur -= 1,
            }
            h.push(cur);
        }
        h
    }

    /// Sum of the heights; strictly increases along every covering move.
    pub fn area(&self) -> usize {
        self.heights().iter().sum()
    }

    /// Concatenation of two Dyck paths.
    pub fn concat(&self, other: &DyckPath) -> DyckPath {
        let mut w = self.word();
        w.append(other.word());
        DyckPath::from_word_unchecked(w)
    }

    /// `U self D`.
    pub fn lift(&self) -> DyckPath {
        let mut w = StepWord::empty();
        w.push(Step::U);
        w.append(self.word());
        w.push(Step::D);
        DyckPath::from_word_unchecked(w)
    }

    /// Index of the down-step matching the up-step at `up`.
    pub fn matching_down(&self, up: usize) -> usize {
        debug_assert_eq!(self.step(up), Step::U);
        let mut depth = 0usize;
        for i in up..self.len() {
            match self.step(i) {
                Step::U => depth += 1,
                Step::D => {
                    depth -= 1;
                    if depth == 0 {
                        return i;
                    }
                }
            }
        }
        unreachable!("Dyck path has unmatched up-step")
    }

    /// First return decomposition `P = U R D S`.
    pub fn decompose_first_return(&self) -> Result<(DyckPath, DyckPath)> {
        if self.is_empty() {
            return Err(Error::EmptyPath);
        }
        let ret = self.matching_down(0);
        let w = self.word();
        Ok((
            DyckPath::from_word_unchecked(w.slice(1, ret)),
            DyckPath::from_word_unchecked(w.slice(ret + 1, self.len())),
        ))
    }

    /// Last return decomposition `P = R U S D`.
    pub fn decompose_last_return(&self) -> Result<(DyckPath, DyckPath)> {
        if self.is_empty() {
            return Err(Error::EmptyPath);
        }
        let h = self.heights();
        // last departure from the axis: last index < len with height 0
        let dep = (0..self.len()).rev().find(|&i| h[i] == 0).expect("path starts on the axis");
        let w = self.word();
        Ok((
            DyckPath::from_word_unchecked(w.slice(0, dep)),
            DyckPath::from_word_unchecked(w.slice(dep + 1, self.len() - 1)),
        ))
    }

    /// Touches the axis only at both ends.
    pub fn is_prime(&self) -> bool {
        !self.is_empty() && self.matching_down(0) == self.len() - 1
    }

    /// Length of the final run of down-steps.
    pub fn final_descent(&self) -> usize {
        (0..self.len()).rev().take_while(|&i| self.step(i) == Step::D).count()
    }

    /// Length of the final run of up-steps (the ascent of the last peak).
    pub fn final_ascent(&self) -> usize {
        let b = self.final_descent();
        (0..self.len() - b).rev().take_while(|&i| self.step(i) == Step::U).count()
    }

    /// Maximal runs as `(step, start, length)`, left to right.
    pub fn runs(&self) -> Vec<(Step, usize, usize)> {
        let mut out: Vec<(Step, usize, usize)> = Vec::new();
        for (i, s) in self.steps().enumerate() {
            match out.last_mut() {
                Some(last) if last.0 == s => last.2 += 1,
                _ => out.push((s, i, 1)),
            }
        }
        out
    }
}

impl PartialOrd for DyckPath {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for DyckPath {
    fn cmp(&self, other: &Self) -> Ordering {
        let common = self.len.min(other.len) as usize;
        let diff = (self.bits ^ other.bits) & mask(common);
        if diff == 0 {
            return self.len.cmp(&other.len);
        }
        let i = diff.trailing_zeros();
        // U sorts first.
        if self.bits >> i & 1 == 1 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.word().fmt(f)
    }
}

impl fmt::Debug for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            write!(f, "DyckPath(ε)")
        } else {
            write!(f, "DyckPath({self})")
        }
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_path(s)
    }
}

impl serde::Serialize for DyckPath {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for DyckPath {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        parse_path(&s).map_err(serde::de::Error::custom)
    }
}

/// Parses a `U`/`D` word.
pub fn parse_path(word: &str) -> Result<DyckPath> {
    StepWord::parse_word(word)?.into_path()
}

/// All paths of semilength `n`, in lexicographic order with `U < D`.
pub fn enumerate_paths(n: usize) -> Result<Vec<DyckPath>> {
    enumerate_paths_capped(n, &Caps::default())
}

pub fn enumerate_paths_capped(n: usize, caps: &Caps) -> Result<Vec<DyckPath>> {
    if 2 * n > MAX_STEPS {
        return Err(Error::TooLong { len: 2 * n, max: MAX_STEPS });
    }
    Caps::check_catalan("path enumeration", n, caps.max_paths)?;
    let mut out = Vec::new();
    let mut word = StepWord::empty();
    fill(n, 0, 0, &mut word, &mut out);
    Ok(out)
}

fn fill(n: usize, ups: usize, downs: usize, word: &mut StepWord, out: &mut Vec<DyckPath>) {
    if ups == n && downs == n {
        out.push(DyckPath { bits: word.bits, len: word.len });
        return;
    }
    let saved = *word;
    if ups < n {
        word.push(Step::U);
        fill(n, ups + 1, downs, word, out);
        *word = saved;
    }
    if downs < ups {
        word.push(Step::D);
        fill(n, ups, downs + 1, word, out);
        *word = saved;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::catalan;
    use proptest::prelude::*;

    fn p(s: &str) -> DyckPath {
        s.parse().unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(p("UDUD").semilength(), 2);
        let e = p("");
        assert!(e.is_empty());
        assert_eq!(e.semilength(), 0);
        assert_eq!(parse_path("UDD"), Err(Error::GoesBelowAxis { pos: 2 }));
        assert_eq!(parse_path("UDDU"), Err(Error::GoesBelowAxis { pos: 2 }));
        assert_eq!(parse_path("UUD"), Err(Error::NotBalanced { ups: 2, downs: 1 }));
        assert_eq!(parse_path("UxD"), Err(Error::BadCharacter { pos: 1, ch: 'x' }));
        assert!(matches!(parse_path(&"UD".repeat(65)), Err(Error::TooLong { .. })));
        assert_eq!(p(&"UD".repeat(64)).semilength(), 64);
    }

    #[test]
    fn enumerate_d3() {
        let words: Vec<String> = enumerate_paths(3).unwrap().iter().map(|p| p.to_string()).collect();
        assert_eq!(words, vec!["UUUDDD", "UUDUDD", "UUDDUD", "UDUUDD", "UDUDUD"]);
        assert_eq!(enumerate_paths(0).unwrap(), vec![DyckPath::empty()]);
        assert_eq!(enumerate_paths(10).unwrap().len(), 16796);
    }

    #[test]
    fn enumeration_sizes_and_order() {
        for n in 0..=14 {
            let paths = enumerate_paths(n).unwrap();
            assert_eq!(num::BigUint::from(paths.len()), catalan(n), "n = {n}");
            if n <= 10 {
                assert!(paths.windows(2).all(|w| w[0] < w[1]));
                assert!(paths
                    .windows(2)
                    .all(|w| w[0].to_string().replace('U', "0") < w[1].to_string().replace('U', "0")));
            }
        }
    }

    #[test]
    fn enumeration_cap() {
        assert!(matches!(enumerate_paths(16), Err(Error::ResourceLimit { .. })));
        let caps = Caps { max_paths: 10, ..Caps::default() };
        assert!(enumerate_paths_capped(4, &caps).is_err());
        assert!(enumerate_paths_capped(3, &caps).is_ok());
    }

    #[test]
    fn decompositions() {
        let (r, s) = p("UUDDUD").decompose_first_return().unwrap();
        assert_eq!((r, s), (p("UD"), p("UD")));
        let (r, s) = p("UUDDUD").decompose_last_return().unwrap();
        assert_eq!((r, s), (p("UUDD"), p("")));
        assert!(p("UUDUDD").is_prime());
        assert!(!p("UUDDUD").is_prime());
        assert_eq!(DyckPath::empty().decompose_first_return(), Err(Error::EmptyPath));
        assert_eq!(DyckPath::empty().decompose_last_return(), Err(Error::EmptyPath));
    }

    #[test]
    fn decompositions_reassemble() {
        for n in 1..=7 {
            for path in enumerate_paths(n).unwrap() {
                let (r, s) = path.decompose_first_return().unwrap();
                assert_eq!(r.lift().concat(&s), path);
                assert_eq!(path.is_prime(), s.is_empty());
                let (r, s) = path.decompose_last_return().unwrap();
                assert_eq!(r.concat(&s.lift()), path);
            }
        }
    }

    #[test]
    fn final_runs() {
        assert_eq!(p("UUDUDD").final_descent(), 2);
        assert_eq!(p("UUDUDD").final_ascent(), 1);
        assert_eq!(p("UUUDDD").final_ascent(), 3);
    }

    #[test]
    fn factor_search() {
        let w = p("UUDUDD").word();
        assert!(w.contains_factor(&StepWord::parse_word("DUD").unwrap()));
        assert!(!w.contains_factor(&StepWord::parse_word("UUU").unwrap()));
        assert!(w.contains_factor(&StepWord::empty()));
    }

    fn arb_path() -> impl Strategy<Value = DyckPath> {
        (0usize..=8).prop_flat_map(|n| {
            let all = enumerate_paths(n).unwrap();
            (0..all.len()).prop_map(move |i| all[i])
        })
    }

    proptest! {
        #[test]
        fn render_parse_round_trip(path in arb_path()) {
            let text = path.to_string();
            prop_assert_eq!(parse_path(&text).unwrap(), path);
            prop_assert_eq!(path.steps().filter(|&s| s == Step::U).count(), path.semilength());
        }

        #[test]
        fn ordering_matches_word_order(a in arb_path(), b in arb_path()) {
            let key = |p: &DyckPath| p.to_string().replace('U', "0").replace('D', "1");
            prop_assert_eq!(a.cmp(&b), key(&a).cmp(&key(&b)));
        }
    }
}

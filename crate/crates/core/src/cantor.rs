//! Binary words, standard dyadic intervals and partitions, finite unions of
//! intervals, and eventually periodic points of the Cantor space.
//!
//! A standard dyadic interval (sdi) is the clopen set of infinite binary
//! sequences sharing a fixed finite prefix; an sdp is a finite partition of
//! the whole space into sdi. Everything here is exact: measures are dyadic
//! rationals and partition validity is decided by sibling merging, never by
//! approximation.

use crate::dyadic::Dyadic;
use crate::error::Error;
use std::fmt;
use std::str::FromStr;

/// A finite word over the alphabet `{0, 1}`; `false` is the letter `0`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<bool>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        Word(bits.to_vec())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[bool] {
        &self.0
    }

    pub fn push(&mut self, b: bool) {
        self.0.push(b);
    }

    pub fn child(&self, b: bool) -> Word {
        let mut w = self.clone();
        w.push(b);
        w
    }

    /// Parent prefix (drops the last letter); `None` for the empty word.
    pub fn parent(&self) -> Option<Word> {
        if self.0.is_empty() {
            None
        } else {
            Some(Word(self.0[..self.0.len() - 1].to_vec()))
        }
    }

    pub fn last(&self) -> Option<bool> {
        self.0.last().copied()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut w = self.clone();
        w.0.extend_from_slice(&other.0);
        w
    }

    pub fn is_prefix_of(&self, other: &Word) -> bool {
        other.0.len() >= self.0.len() && other.0[..self.0.len()] == self.0[..]
    }

    pub fn is_proper_prefix_of(&self, other: &Word) -> bool {
        other.0.len() > self.0.len() && self.is_prefix_of(other)
    }

    /// `true` when neither word is a prefix of the other, i.e. the two sdi
    /// are disjoint.
    pub fn incomparable(&self, other: &Word) -> bool {
        !self.is_prefix_of(other) && !other.is_prefix_of(self)
    }

    /// The suffix left after stripping the prefix `p`.
    pub fn strip_prefix(&self, p: &Word) -> Option<Word> {
        if p.is_prefix_of(self) {
            Some(Word(self.0[p.0.len()..].to_vec()))
        } else {
            None
        }
    }

    /// Complements every letter (the bit-flip homeomorphism on prefixes).
    pub fn complemented(&self) -> Word {
        Word(self.0.iter().map(|b| !b).collect())
    }

    /// Sum of the digits, the word statistic used by the co-context-free
    /// exponent.
    pub fn digit_sum(&self) -> i64 {
        self.0.iter().filter(|b| **b).count() as i64
    }

    /// Left rotation by `k` letters.
    pub fn rotate_left(&self, k: usize) -> Word {
        if self.0.is_empty() {
            return self.clone();
        }
        let k = k % self.0.len();
        let mut v = self.0[k..].to_vec();
        v.extend_from_slice(&self.0[..k]);
        Word(v)
    }

    /// Right rotation by one letter.
    pub fn rotate_right(&self) -> Word {
        if self.0.is_empty() {
            return self.clone();
        }
        let mut v = Vec::with_capacity(self.0.len());
        v.push(self.0[self.0.len() - 1]);
        v.extend_from_slice(&self.0[..self.0.len() - 1]);
        Word(v)
    }

    /// The primitive root: the shortest word `p` with `self = p^k`.
    pub fn primitive_root(&self) -> Word {
        let n = self.0.len();
        for d in 1..=n {
            if n % d == 0 {
                let root = &self.0[..d];
                if self.0.chunks(d).all(|c| c == root) {
                    return Word(root.to_vec());
                }
            }
        }
        self.clone()
    }

    /// Lexicographically least rotation.
    pub fn least_rotation(&self) -> Word {
        let mut best = self.clone();
        for k in 1..self.0.len() {
            let r = self.rotate_left(k);
            if r < best {
                best = r;
            }
        }
        best
    }

    /// All extensions of `self` with total length exactly `len`.
    pub fn extensions_to(&self, len: usize) -> Vec<Word> {
        if self.len() >= len {
            return vec![self.clone()];
        }
        let extra = len - self.len();
        let mut out = Vec::with_capacity(1 << extra);
        for mask in 0..(1u64 << extra) {
            let mut w = self.clone();
            for i in 0..extra {
                w.push(mask >> (extra - 1 - i) & 1 == 1);
            }
            out.push(w);
        }
        out
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "e");
        }
        for b in &self.0 {
            write!(f, "{}", if *b { '1' } else { '0' })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s == "e" || s == "ε" || s.is_empty() {
            return Ok(Word::empty());
        }
        let mut bits = Vec::with_capacity(s.len());
        for c in s.chars() {
            match c {
                '0' => bits.push(false),
                '1' => bits.push(true),
                _ => return Err(Error::Parse(format!("invalid letter {c:?} in word {s:?}"))),
            }
        }
        Ok(Word(bits))
    }
}

/// A standard dyadic interval, named by its prefix word. The empty prefix
/// denotes the whole Cantor space.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Sdi {
    prefix: Word,
}

impl Sdi {
    pub fn new(prefix: Word) -> Self {
        Sdi { prefix }
    }

    pub fn full() -> Self {
        Sdi {
            prefix: Word::empty(),
        }
    }

    pub fn prefix(&self) -> &Word {
        &self.prefix
    }

    pub fn is_full(&self) -> bool {
        self.prefix.is_empty()
    }

    pub fn measure(&self) -> Dyadic {
        Dyadic::unit(self.prefix.len() as u32)
    }

    pub fn contains(&self, other: &Sdi) -> bool {
        self.prefix.is_prefix_of(&other.prefix)
    }

    pub fn contains_point(&self, x: &CPoint) -> bool {
        x.has_prefix(&self.prefix)
    }
}

impl fmt::Display for Sdi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.prefix)
    }
}

/// A standard dyadic partition: lexicographically sorted, pairwise
/// incomparable prefixes of total measure one.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Sdp {
    cells: Vec<Word>,
}

impl Sdp {
    /// Validates and sorts the given cell prefixes.
    pub fn new(mut cells: Vec<Word>) -> Result<Self, Error> {
        cells.sort();
        for pair in cells.windows(2) {
            if pair[0].is_prefix_of(&pair[1]) {
                return Err(Error::InvalidSdp(format!(
                    "cells {} and {} overlap",
                    pair[0], pair[1]
                )));
            }
        }
        if !sibling_merge_to_full(&cells) {
            return Err(Error::InvalidSdp(format!(
                "cells {{{}}} do not cover the Cantor space",
                cells
                    .iter()
                    .map(|w| w.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            )));
        }
        Ok(Sdp { cells })
    }

    pub fn full() -> Self {
        Sdp {
            cells: vec![Word::empty()],
        }
    }

    /// The uniform partition into the `2^depth` cells of the given depth.
    pub fn uniform(depth: usize) -> Self {
        Sdp {
            cells: Word::empty().extensions_to(depth),
        }
    }

    pub fn cells(&self) -> &[Word] {
        &self.cells
    }

    /// Number of cells; a partition is never empty.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    /// The coarsest partition refining both inputs.
    pub fn common_refinement(&self, other: &Sdp) -> Sdp {
        let mut cells = Vec::new();
        for c in &self.cells {
            for d in &other.cells {
                if c.is_prefix_of(d) {
                    cells.push(d.clone());
                } else if d.is_proper_prefix_of(c) {
                    cells.push(c.clone());
                }
            }
        }
        cells.sort();
        cells.dedup();
        Sdp { cells }
    }

    pub fn total_measure(&self) -> Dyadic {
        self.cells
            .iter()
            .fold(Dyadic::ZERO, |acc, w| acc + Dyadic::unit(w.len() as u32))
    }

    /// The cell containing the given point.
    pub fn cell_of(&self, x: &CPoint) -> &Word {
        self.cells
            .iter()
            .find(|w| x.has_prefix(w))
            .expect("an sdp covers every point")
    }
}

impl fmt::Display for Sdp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.cells.iter().map(|w| w.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Sdp {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let cells = s
            .split(',')
            .map(|p| p.trim().parse::<Word>())
            .collect::<Result<Vec<_>, _>>()?;
        Sdp::new(cells)
    }
}

/// Checks that a sorted prefix-free family tiles the whole space: repeatedly
/// merging sibling pairs must reduce it to the single empty word.
fn sibling_merge_to_full(cells: &[Word]) -> bool {
    let mut stack: Vec<Word> = Vec::with_capacity(cells.len());
    for cell in cells {
        let mut cur = cell.clone();
        loop {
            match stack.last() {
                Some(top) if top.last() == Some(false) && top.parent() == cur.parent() => {
                    if cur.last() == Some(true) {
                        stack.pop();
                        cur = cur.parent().unwrap();
                    } else {
                        break;
                    }
                }
                _ => break,
            }
        }
        stack.push(cur);
    }
    stack.len() == 1 && stack[0].is_empty()
}

/// A finite union of sdi in canonical form: sorted, pairwise incomparable,
/// and with no two sibling cells both present. The empty union is allowed.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct SdiUnion {
    cells: Vec<Word>,
}

impl SdiUnion {
    pub fn empty() -> Self {
        SdiUnion { cells: Vec::new() }
    }

    pub fn full() -> Self {
        SdiUnion {
            cells: vec![Word::empty()],
        }
    }

    /// Canonicalises an arbitrary family of cells: drops cells contained in
    /// others and merges sibling pairs to a fixpoint.
    pub fn from_cells(cells: Vec<Word>) -> Self {
        let mut cells = cells;
        loop {
            cells.sort();
            cells.dedup();
            // drop cells covered by an earlier (shorter) cell
            let mut keep: Vec<Word> = Vec::with_capacity(cells.len());
            for c in cells {
                if keep.last().map_or(true, |p: &Word| !p.is_prefix_of(&c)) {
                    keep.push(c);
                }
            }
            let mut merged = false;
            let mut out: Vec<Word> = Vec::with_capacity(keep.len());
            let mut i = 0;
            while i < keep.len() {
                if i + 1 < keep.len()
                    && keep[i].last() == Some(false)
                    && keep[i + 1].last() == Some(true)
                    && keep[i].parent() == keep[i + 1].parent()
                {
                    out.push(keep[i].parent().unwrap());
                    merged = true;
                    i += 2;
                } else {
                    out.push(keep[i].clone());
                    i += 1;
                }
            }
            cells = out;
            if !merged {
                return SdiUnion { cells };
            }
        }
    }

    pub fn cells(&self) -> &[Word] {
        &self.cells
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.cells.len() == 1 && self.cells[0].is_empty()
    }

    pub fn contains_point(&self, x: &CPoint) -> bool {
        self.cells.iter().any(|w| x.has_prefix(w))
    }

    pub fn contains_cell(&self, w: &Word) -> bool {
        self.cells.iter().any(|c| c.is_prefix_of(w))
    }

    pub fn measure(&self) -> Dyadic {
        self.cells
            .iter()
            .fold(Dyadic::ZERO, |acc, w| acc + Dyadic::unit(w.len() as u32))
    }

    /// Canonical complement inside the Cantor space.
    pub fn complement(&self) -> SdiUnion {
        let mut out = Vec::new();
        complement_into(&Word::empty(), &self.cells, &mut out);
        SdiUnion::from_cells(out)
    }

    pub fn union(&self, other: &SdiUnion) -> SdiUnion {
        let mut cells = self.cells.clone();
        cells.extend_from_slice(&other.cells);
        SdiUnion::from_cells(cells)
    }

    pub fn intersects(&self, w: &Word) -> bool {
        self.cells.iter().any(|c| !c.incomparable(w))
    }
}

fn complement_into(scope: &Word, cells: &[Word], out: &mut Vec<Word>) {
    if cells.iter().any(|c| c.is_prefix_of(scope)) {
        return; // fully covered
    }
    if !cells.iter().any(|c| scope.is_prefix_of(c)) {
        out.push(scope.clone()); // fully outside
        return;
    }
    complement_into(&scope.child(false), cells, out);
    complement_into(&scope.child(true), cells, out);
}

impl fmt::Display for SdiUnion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cells.is_empty() {
            return write!(f, "{{}}");
        }
        let parts: Vec<String> = self.cells.iter().map(|w| w.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// An eventually periodic point `preperiod . period^infinity` of the Cantor
/// space, kept in a unique canonical form: the period is primitive and the
/// preperiod is shortened (rotating the period) while its last letter equals
/// the period's last letter.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CPoint {
    preperiod: Word,
    period: Word,
}

impl CPoint {
    /// Canonicalises `pre . per^infinity`; rejects an empty period.
    pub fn new(pre: Word, per: Word) -> Result<Self, Error> {
        if per.is_empty() {
            return Err(Error::Parse("empty period in Cantor point".into()));
        }
        let mut period = per.primitive_root();
        let mut preperiod = pre;
        while let (Some(a), Some(b)) = (preperiod.last(), period.last()) {
            if a != b {
                break;
            }
            preperiod = preperiod.parent().unwrap();
            period = period.rotate_right();
        }
        Ok(CPoint { preperiod, period })
    }

    /// The point `w^infinity`.
    pub fn periodic(w: Word) -> Result<Self, Error> {
        CPoint::new(Word::empty(), w)
    }

    /// The point `0^infinity` (zero, the base point of the dyadic class).
    pub fn zero() -> Self {
        CPoint::periodic(Word::from_bits(&[false])).unwrap()
    }

    /// The point `1^infinity`.
    pub fn one() -> Self {
        CPoint::periodic(Word::from_bits(&[true])).unwrap()
    }

    pub fn preperiod(&self) -> &Word {
        &self.preperiod
    }

    pub fn period(&self) -> &Word {
        &self.period
    }

    /// The first `n` letters of the infinite expansion.
    pub fn expand(&self, n: usize) -> Word {
        let mut bits = Vec::with_capacity(n);
        for i in 0..n {
            bits.push(self.letter(i));
        }
        Word(bits)
    }

    pub fn letter(&self, i: usize) -> bool {
        if i < self.preperiod.len() {
            self.preperiod.letters()[i]
        } else {
            let j = (i - self.preperiod.len()) % self.period.len();
            self.period.letters()[j]
        }
    }

    pub fn has_prefix(&self, w: &Word) -> bool {
        (0..w.len()).all(|i| self.letter(i) == w.letters()[i])
    }

    /// Strips the first `n` letters, recanonicalising.
    pub fn strip(&self, n: usize) -> CPoint {
        if n <= self.preperiod.len() {
            let rest = Word(self.preperiod.letters()[n..].to_vec());
            CPoint::new(rest, self.period.clone()).unwrap()
        } else {
            let k = (n - self.preperiod.len()) % self.period.len();
            CPoint::new(Word::empty(), self.period.rotate_left(k)).unwrap()
        }
    }

    /// Prepends a finite word, recanonicalising.
    pub fn prepend(&self, w: &Word) -> CPoint {
        CPoint::new(w.concat(&self.preperiod), self.period.clone()).unwrap()
    }

    /// Complements every letter (image under the bit flip).
    pub fn complemented(&self) -> CPoint {
        CPoint::new(self.preperiod.complemented(), self.period.complemented()).unwrap()
    }

    /// The canonical prime word of the tail equivalence class: the
    /// lexicographically least rotation of the primitive period. This is a
    /// complete invariant of the V-orbit of the point.
    pub fn tail_class_word(&self) -> Word {
        self.period.least_rotation()
    }

    /// `true` when the point lies in the dyadic class (tail word `0`).
    pub fn is_dyadic_rational(&self) -> bool {
        self.period.letters() == [false]
    }
}

impl fmt::Display for CPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.preperiod.is_empty() {
            write!(f, "({})", self.period)
        } else {
            write!(f, "{}.({})", self.preperiod, self.period)
        }
    }
}

impl FromStr for CPoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let open = s
            .find('(')
            .ok_or_else(|| Error::Parse(format!("point {s:?} lacks a (period)")))?;
        if !s.ends_with(')') {
            return Err(Error::Parse(format!("point {s:?} lacks a closing paren")));
        }
        let pre_part = s[..open].trim_end_matches('.');
        let per_part = &s[open + 1..s.len() - 1];
        let pre = pre_part.parse::<Word>()?;
        let per = per_part.parse::<Word>()?;
        CPoint::new(pre, per)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn word_basics() {
        assert!(w("0").is_prefix_of(&w("01")));
        assert!(w("01").incomparable(&w("00")));
        assert_eq!(w("0110").complemented(), w("1001"));
        assert_eq!(w("0101").primitive_root(), w("01"));
        assert_eq!(w("011").primitive_root(), w("011"));
        assert_eq!(w("10").least_rotation(), w("01"));
        assert_eq!(w("e"), Word::empty());
        assert_eq!(w("110").digit_sum(), 2);
    }

    #[test]
    fn sdp_validity() {
        assert!(Sdp::new(vec![w("0"), w("1")]).is_ok());
        assert!(Sdp::new(vec![w("00"), w("01"), w("1")]).is_ok());
        assert!(Sdp::new(vec![w("e")]).is_ok());
        assert!(Sdp::new(vec![w("0"), w("01")]).is_err());
        assert!(Sdp::new(vec![w("0"), w("10")]).is_err());
        assert!(Sdp::new(vec![w("0")]).is_err());
    }

    /// Brute-force oracle: every depth-`d` word has exactly one cell of the
    /// family as a prefix.
    fn sdp_oracle(cells: &[Word], depth: usize) -> bool {
        Word::empty()
            .extensions_to(depth)
            .iter()
            .all(|path| cells.iter().filter(|c| c.is_prefix_of(path)).count() == 1)
    }

    #[test]
    fn sdp_validity_matches_brute_enumeration() {
        // All subsets of the words of length <= 2 (the 7-word pool).
        let pool: Vec<Word> = (0..=2)
            .flat_map(|d| Word::empty().extensions_to(d))
            .collect();
        assert_eq!(pool.len(), 7);
        for mask in 0u32..(1 << pool.len()) {
            let cells: Vec<Word> = pool
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, w)| w.clone())
                .collect();
            let accepted = Sdp::new(cells.clone()).is_ok();
            // prefix-freeness is part of the contract, not implied by the
            // coverage count alone
            let prefix_free = cells
                .iter()
                .enumerate()
                .all(|(i, a)| cells.iter().skip(i + 1).all(|b| a.incomparable(b)));
            let oracle = !cells.is_empty() && prefix_free && sdp_oracle(&cells, 2);
            assert_eq!(accepted, oracle, "cells {cells:?}");
        }
    }

    #[test]
    fn refinement_examples() {
        let p = Sdp::new(vec![w("0"), w("1")]).unwrap();
        assert_eq!(p.common_refinement(&p), p);
        let q = Sdp::new(vec![w("00"), w("01"), w("1")]).unwrap();
        assert_eq!(p.common_refinement(&q), q);
        let r = Sdp::new(vec![w("0"), w("10"), w("11")]).unwrap();
        let expect = Sdp::new(vec![w("00"), w("01"), w("10"), w("11")]).unwrap();
        assert_eq!(q.common_refinement(&r), expect);
    }

    #[test]
    fn complement_examples() {
        assert_eq!(SdiUnion::empty().complement(), SdiUnion::full());
        let u = SdiUnion::from_cells(vec![w("0")]);
        assert_eq!(u.complement(), SdiUnion::from_cells(vec![w("1")]));
        let v = SdiUnion::from_cells(vec![w("00"), w("11")]);
        assert_eq!(v.complement(), SdiUnion::from_cells(vec![w("01"), w("10")]));
    }

    #[test]
    fn union_canonical_form() {
        let u = SdiUnion::from_cells(vec![w("00"), w("01")]);
        assert_eq!(u.cells(), &[w("0")]);
        let v = SdiUnion::from_cells(vec![w("0"), w("10"), w("11")]);
        assert!(v.is_full());
        let nested = SdiUnion::from_cells(vec![w("0"), w("01")]);
        assert_eq!(nested.cells(), &[w("0")]);
    }

    #[test]
    fn cpoint_canonical_form() {
        let a = CPoint::new(w("e"), w("0101")).unwrap();
        assert_eq!(a, CPoint::new(w("e"), w("01")).unwrap());
        let b = CPoint::new(w("0"), w("10")).unwrap();
        assert_eq!(b, CPoint::new(w("e"), w("01")).unwrap());
        let c = CPoint::new(w("1"), w("0")).unwrap();
        assert_eq!(c.preperiod(), &w("1"));
        assert_eq!(c.period(), &w("0"));
        assert!(CPoint::new(w("0"), Word::empty()).is_err());
    }

    #[test]
    fn cpoint_expansion_and_membership() {
        let zero = CPoint::zero();
        assert!(Sdi::new(w("00")).contains_point(&zero));
        assert!(!Sdi::new(w("1")).contains_point(&zero));
        let x = CPoint::new(w("01"), w("10")).unwrap();
        assert_eq!(x.expand(4), w("0110"));
        assert!(Sdi::new(w("0110")).contains_point(&x));
    }

    #[test]
    fn tail_class_words() {
        assert_eq!(CPoint::zero().tail_class_word(), w("0"));
        assert_eq!(
            CPoint::periodic(w("10")).unwrap().tail_class_word(),
            w("01")
        );
        assert_eq!(
            CPoint::new(w("111"), w("0")).unwrap().tail_class_word(),
            w("0")
        );
    }

    #[test]
    fn cpoint_round_trip_text() {
        for s in ["(0)", "01.(10)", "(1)", "111.(0)"] {
            let p: CPoint = s.parse().unwrap();
            let q: CPoint = p.to_string().parse().unwrap();
            assert_eq!(p, q);
        }
    }

    mod properties {
        use super::*;
        use crate::sampling::{random_cpoint, random_sdp, random_word, rng_for_case};
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn refinement_laws(seed in any::<u64>()) {
                let mut rng = rng_for_case(seed, 0);
                let p = random_sdp(&mut rng, 8);
                let q = random_sdp(&mut rng, 8);
                let r = random_sdp(&mut rng, 8);
                prop_assert_eq!(p.common_refinement(&p), p.clone());
                prop_assert_eq!(p.common_refinement(&q), q.common_refinement(&p));
                prop_assert_eq!(
                    p.common_refinement(&q).common_refinement(&r),
                    p.common_refinement(&q.common_refinement(&r))
                );
                prop_assert_eq!(p.total_measure(), Dyadic::ONE);
            }

            #[test]
            fn complement_involution(seed in any::<u64>()) {
                let mut rng = rng_for_case(seed, 1);
                let n = (seed % 5) as usize;
                let cells = (0..n).map(|_| random_word(&mut rng, 4)).collect();
                let u = SdiUnion::from_cells(cells);
                prop_assert_eq!(u.complement().complement(), u.clone());
                prop_assert_eq!(u.measure() + u.complement().measure(), Dyadic::ONE);
            }

            #[test]
            fn canonicalize_idempotent_and_denotational(seed in any::<u64>()) {
                let mut rng = rng_for_case(seed, 2);
                let x = random_cpoint(&mut rng, 4, 4);
                // idempotent
                let again = CPoint::new(x.preperiod().clone(), x.period().clone()).unwrap();
                prop_assert_eq!(&again, &x);
                // unrolling the period or pushing it into the preperiod
                // changes nothing
                let unrolled = CPoint::new(
                    x.preperiod().clone(),
                    x.period().concat(x.period()),
                )
                .unwrap();
                prop_assert_eq!(&unrolled, &x);
                let pushed = CPoint::new(
                    x.preperiod().concat(x.period()),
                    x.period().rotate_left(0),
                )
                .unwrap();
                prop_assert_eq!(&pushed, &x);
                let rotated = CPoint::new(
                    x.preperiod().concat(&x.expand(x.preperiod().len() + 1)
                        .strip_prefix(x.preperiod()).unwrap()),
                    x.period().rotate_left(1),
                )
                .unwrap();
                prop_assert_eq!(&rotated, &x);
                prop_assert_eq!(rotated.expand(64), x.expand(64));
            }

            #[test]
            fn tail_word_ignores_preperiod(seed in any::<u64>()) {
                let mut rng = rng_for_case(seed, 3);
                let x = random_cpoint(&mut rng, 3, 4);
                let w = random_word(&mut rng, 5);
                let y = x.prepend(&w);
                prop_assert_eq!(y.tail_class_word(), x.tail_class_word());
            }
        }
    }
}

//! Deterministic random generators for the property suites: words, points,
//! partitions, table elements, loops and fraction elements.
//!
//! Elements of V are sampled as random tree pairs with a bounded leaf count
//! and a uniform leaf permutation, then reduced; this reaches all of V, not
//! just F or T. Every suite derives per-case seeds by a fixed splitting rule
//! so parallel and serial runs agree.

use crate::cantor::{CPoint, SdiUnion, Sdp, Word};
use crate::coeff::{DyadicPairTriple, PairElem, Triple};
use crate::dyadic::Dyadic;
use crate::fraction::{FractionElement, WreathElement};
use crate::loop_group::LoopElement;
use crate::thompson::{v_from_partial, VElement};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

/// SplitMix64 step; the fixed per-case seed derivation rule.
pub fn split_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed.wrapping_add(index.wrapping_mul(0x9E3779B97F4A7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
    z ^ (z >> 31)
}

pub fn rng_for_case(seed: u64, index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(split_seed(seed, index))
}

pub fn random_word(rng: &mut impl Rng, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    let mut w = Word::empty();
    for _ in 0..len {
        w.push(rng.gen());
    }
    w
}

pub fn random_nonempty_word(rng: &mut impl Rng, max_len: usize) -> Word {
    let len = rng.gen_range(1..=max_len.max(1));
    let mut w = Word::empty();
    for _ in 0..len {
        w.push(rng.gen());
    }
    w
}

pub fn random_cpoint(rng: &mut impl Rng, max_pre: usize, max_per: usize) -> CPoint {
    let pre = random_word(rng, max_pre);
    let per = random_nonempty_word(rng, max_per);
    CPoint::new(pre, per).expect("nonempty period")
}

/// A dyadic-class point (tail word `0`).
pub fn random_dyadic_point(rng: &mut impl Rng, max_pre: usize) -> CPoint {
    let pre = random_word(rng, max_pre);
    CPoint::new(pre, "0".parse().unwrap()).expect("nonempty period")
}

/// A random partition with exactly `leaves` cells, grown by repeated splits.
pub fn random_sdp(rng: &mut impl Rng, leaves: usize) -> Sdp {
    let mut cells = vec![Word::empty()];
    while cells.len() < leaves.max(1) {
        let i = rng.gen_range(0..cells.len());
        let w = cells.swap_remove(i);
        cells.push(w.child(false));
        cells.push(w.child(true));
    }
    Sdp::new(cells).expect("splitting preserves validity")
}

/// A random reduced table with at most `max_leaves` leaves.
pub fn random_velement(rng: &mut impl Rng, max_leaves: usize) -> VElement {
    let n = rng.gen_range(1..=max_leaves.max(1));
    let dom = random_sdp(rng, n);
    let cod = random_sdp(rng, n);
    let mut perm: Vec<usize> = (0..n).collect();
    // Fisher-Yates
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        perm.swap(i, j);
    }
    let pairs = dom
        .cells()
        .iter()
        .cloned()
        .zip(perm.into_iter().map(|k| cod.cells()[k].clone()))
        .collect();
    VElement::new(pairs).expect("sampled partitions are valid")
}

/// A random element of V that is the identity outside the given union.
pub fn random_v_supported_in(rng: &mut impl Rng, u: &SdiUnion, extra_splits: usize) -> VElement {
    if u.is_empty() {
        return VElement::identity();
    }
    let split = |rng: &mut dyn RngCore, mut cells: Vec<Word>, target: usize| -> Vec<Word> {
        while cells.len() < target {
            let i = rng.gen_range(0..cells.len());
            let w = cells.swap_remove(i);
            cells.push(w.child(false));
            cells.push(w.child(true));
        }
        cells.sort();
        cells
    };
    let base = u.cells().to_vec();
    let n = base.len() + extra_splits.max(1);
    let dom = split(&mut *rng, base.clone(), n);
    let cod = split(&mut *rng, base, n);
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        perm.swap(i, j);
    }
    let pairs: Vec<(Word, Word)> = dom
        .into_iter()
        .zip(perm.into_iter().map(|k| cod[k].clone()))
        .collect();
    v_from_partial(pairs).expect("prescribed cells tile the union")
}

pub fn random_group_element(rng: &mut impl Rng, t: &Triple) -> usize {
    rng.gen_range(0..t.group.order())
}

pub fn random_loop(rng: &mut impl Rng, t: &Triple, max_leaves: usize) -> LoopElement<Triple> {
    let leaves = rng.gen_range(1..=max_leaves.max(1));
    let part = random_sdp(rng, leaves);
    let cells = part
        .cells()
        .iter()
        .map(|w| (w.clone(), rng.gen_range(0..t.group.order())))
        .collect();
    LoopElement::new(cells).expect("partition is valid")
}

pub fn random_fraction(
    rng: &mut impl Rng,
    t: &Triple,
    max_leaves: usize,
) -> FractionElement<Triple> {
    FractionElement::new(
        random_loop(rng, t, max_leaves),
        random_velement(rng, max_leaves),
    )
}

pub fn random_dyadic(rng: &mut impl Rng) -> Dyadic {
    Dyadic::new(rng.gen_range(-8i64..=8), rng.gen_range(0..4))
}

pub fn random_pair_loop(rng: &mut impl Rng, max_leaves: usize) -> LoopElement<DyadicPairTriple> {
    let leaves = rng.gen_range(1..=max_leaves.max(1));
    let part = random_sdp(rng, leaves);
    let cells = part
        .cells()
        .iter()
        .map(|w| {
            (
                w.clone(),
                PairElem::new(random_dyadic(rng), random_dyadic(rng)),
            )
        })
        .collect();
    LoopElement::new(cells).expect("partition is valid")
}

pub fn random_wreath(rng: &mut impl Rng, t: &Triple, max_points: usize) -> WreathElement<Triple> {
    let n = rng.gen_range(1..=max_points.max(1));
    let mut support: Vec<(CPoint, usize)> = Vec::new();
    for _ in 0..n {
        let x = random_dyadic_point(rng, 4);
        if support.iter().all(|(y, _)| *y != x) {
            support.push((x, rng.gen_range(0..t.group.order())));
        }
    }
    WreathElement::new(t, support).expect("dyadic points")
}

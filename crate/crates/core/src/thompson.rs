//! Thompson's group V as reduced prefix-replacement tables, together with
//! slopes, F/T membership, the bit-flip normaliser and the constructive
//! element builders used throughout the crate.
//!
//! An element of V is stored as the list of pairs `domain -> codomain` of
//! prefix words; both sides form standard dyadic partitions and the table is
//! reduced (no sibling domain pair maps onto a sibling codomain pair in
//! order). Reduced tables are canonical, so equality is structural.

use crate::cantor::{CPoint, Sdi, SdiUnion, Sdp, Word};
use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

/// An element of Thompson's group V.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct VElement {
    /// `(domain, codomain)` prefix pairs, sorted by domain word.
    pairs: Vec<(Word, Word)>,
}

/// Integer slope exponent `log2 v'(x)`.
pub type SlopeExp = i64;

impl VElement {
    /// Builds and reduces a table. Both projections must be valid sdp of the
    /// same size.
    pub fn new(pairs: Vec<(Word, Word)>) -> Result<Self> {
        Sdp::new(pairs.iter().map(|(d, _)| d.clone()).collect())?;
        Sdp::new(pairs.iter().map(|(_, c)| c.clone()).collect())?;
        let mut v = VElement { pairs };
        v.pairs.sort();
        v.reduce();
        Ok(v)
    }

    pub fn identity() -> Self {
        VElement {
            pairs: vec![(Word::empty(), Word::empty())],
        }
    }

    /// The half-swap `0 <-> 1`.
    pub fn half_swap() -> Self {
        VElement::new(vec![
            ("0".parse().unwrap(), "1".parse().unwrap()),
            ("1".parse().unwrap(), "0".parse().unwrap()),
        ])
        .unwrap()
    }

    pub fn pairs(&self) -> &[(Word, Word)] {
        &self.pairs
    }

    pub fn is_identity(&self) -> bool {
        self.pairs.len() == 1 && self.pairs[0].0.is_empty() && self.pairs[0].1.is_empty()
    }

    pub fn domain_partition(&self) -> Sdp {
        Sdp::new(self.pairs.iter().map(|(d, _)| d.clone()).collect()).unwrap()
    }

    pub fn codomain_partition(&self) -> Sdp {
        Sdp::new(self.pairs.iter().map(|(_, c)| c.clone()).collect()).unwrap()
    }

    /// Merges sibling pairs to a fixpoint. Sorted order keeps mergeable
    /// siblings adjacent, so one linear scan per round suffices.
    fn reduce(&mut self) {
        loop {
            let mut merged = false;
            let mut out: Vec<(Word, Word)> = Vec::with_capacity(self.pairs.len());
            let mut i = 0;
            while i < self.pairs.len() {
                if i + 1 < self.pairs.len() {
                    let (d0, c0) = &self.pairs[i];
                    let (d1, c1) = &self.pairs[i + 1];
                    if d0.last() == Some(false)
                        && d1.last() == Some(true)
                        && d0.parent() == d1.parent()
                        && c0.last() == Some(false)
                        && c1.last() == Some(true)
                        && c0.parent() == c1.parent()
                    {
                        out.push((d0.parent().unwrap(), c0.parent().unwrap()));
                        merged = true;
                        i += 2;
                        continue;
                    }
                }
                out.push(self.pairs[i].clone());
                i += 1;
            }
            out.sort();
            self.pairs = out;
            if !merged {
                return;
            }
        }
    }

    /// The table refined so that its domain partition also refines the given
    /// partition (used before acting on a loop element).
    pub(crate) fn refined_against(&self, partition: &Sdp) -> Vec<(Word, Word)> {
        let mut out = Vec::new();
        for (d, c) in &self.pairs {
            let mut split = false;
            for cell in partition.cells() {
                if d.is_proper_prefix_of(cell) {
                    let suffix = cell.strip_prefix(d).unwrap();
                    out.push((cell.clone(), c.concat(&suffix)));
                    split = true;
                }
            }
            if !split {
                out.push((d.clone(), c.clone()));
            }
        }
        out.sort();
        out
    }

    /// Composition `self . other` (`other` applied first).
    pub fn compose(&self, other: &VElement) -> VElement {
        let mut pairs = Vec::new();
        for (m, u) in other.pairs.iter() {
            for (p, q) in self.pairs.iter() {
                if p.is_prefix_of(u) {
                    // whole cell I_u lands inside the cell I_p of self
                    let suffix = u.strip_prefix(p).unwrap();
                    pairs.push((m.clone(), q.concat(&suffix)));
                } else if u.is_proper_prefix_of(p) {
                    // only the part of I_u with prefix p moves together
                    let suffix = p.strip_prefix(u).unwrap();
                    pairs.push((m.concat(&suffix), q.clone()));
                }
            }
        }
        let mut v = VElement { pairs };
        v.pairs.sort();
        v.reduce();
        v
    }

    pub fn inverse(&self) -> VElement {
        let mut pairs: Vec<(Word, Word)> = self
            .pairs
            .iter()
            .map(|(d, c)| (c.clone(), d.clone()))
            .collect();
        pairs.sort();
        let mut v = VElement { pairs };
        v.reduce();
        v
    }

    /// The table cell whose domain prefix covers the point.
    pub fn cell_at(&self, x: &CPoint) -> (&Word, &Word) {
        self.pairs
            .iter()
            .find(|(d, _)| x.has_prefix(d))
            .map(|(d, c)| (d, c))
            .expect("table domains cover the space")
    }

    /// Applies the homeomorphism to an eventually periodic point.
    pub fn apply(&self, x: &CPoint) -> CPoint {
        let (d, c) = self.cell_at(x);
        x.strip(d.len()).prepend(c)
    }

    /// Slope exponent `log2 v'(x) = |m_I| - |m_v(I)|` at the point.
    pub fn slope_at(&self, x: &CPoint) -> SlopeExp {
        let (d, c) = self.cell_at(x);
        d.len() as i64 - c.len() as i64
    }

    /// `log2(v'(v^-1 x))`, the slope cocycle integrand.
    pub fn ell_at(&self, x: &CPoint) -> SlopeExp {
        -self.inverse().slope_at(x)
    }

    /// Membership in Thompson's group F: the codomain cells, read in domain
    /// order, appear in increasing lexicographic order.
    pub fn is_in_f(&self) -> bool {
        self.pairs.windows(2).all(|w| w[0].1 < w[1].1)
    }

    /// Membership in Thompson's group T: the codomain cells form a cyclic
    /// rotation of their increasing order.
    pub fn is_in_t(&self) -> bool {
        let n = self.pairs.len();
        let breaks = (0..n)
            .filter(|&i| self.pairs[i].1 > self.pairs[(i + 1) % n].1)
            .count();
        breaks <= 1
    }

    /// Image of an sdi as a union of sdi.
    pub fn image_of_sdi(&self, w: &Word) -> SdiUnion {
        let mut cells = Vec::new();
        for (d, c) in &self.pairs {
            if d.is_prefix_of(w) {
                let suffix = w.strip_prefix(d).unwrap();
                cells.push(c.concat(&suffix));
            } else if w.is_proper_prefix_of(d) {
                cells.push(c.clone());
            }
        }
        SdiUnion::from_cells(cells)
    }

    pub fn image_of_union(&self, u: &SdiUnion) -> SdiUnion {
        let mut out = SdiUnion::empty();
        for cell in u.cells() {
            out = out.union(&self.image_of_sdi(cell));
        }
        out
    }

    /// Conjugate `flip . self . flip`: both projections complemented.
    pub fn flip_conjugate(&self) -> VElement {
        let pairs = self
            .pairs
            .iter()
            .map(|(d, c)| (d.complemented(), c.complemented()))
            .collect();
        let mut v = VElement { pairs };
        v.pairs.sort();
        v.reduce();
        v
    }

    /// `true` when `self` fixes every point of the union pointwise, i.e.
    /// every table cell meeting the union is a fixed prefix pair.
    pub fn fixes_pointwise(&self, u: &SdiUnion) -> bool {
        self.pairs.iter().all(|(d, c)| !u.intersects(d) || c == d)
    }
}

impl fmt::Display for VElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .pairs
            .iter()
            .map(|(d, c)| format!("{d}->{c}"))
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl FromStr for VElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut pairs = Vec::new();
        for chunk in s
            .split(|c| c == ' ' || c == ',')
            .filter(|p| !p.trim().is_empty())
        {
            let (d, c) = chunk
                .split_once("->")
                .ok_or_else(|| Error::Parse(format!("expected dom->cod, got {chunk:?}")))?;
            pairs.push((d.trim().parse::<Word>()?, c.trim().parse::<Word>()?));
        }
        if pairs.is_empty() {
            return Err(Error::Parse("empty table".into()));
        }
        VElement::new(pairs)
    }
}

/// An element of the subgroup of the normaliser of V generated by V and the
/// bit-flip, in the normal form `flip^a . v`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct NormalizerElement {
    flip: bool,
    v: VElement,
}

impl NormalizerElement {
    pub fn new(flip: bool, v: VElement) -> Self {
        NormalizerElement { flip, v }
    }

    pub fn identity() -> Self {
        NormalizerElement {
            flip: false,
            v: VElement::identity(),
        }
    }

    pub fn flip() -> Self {
        NormalizerElement {
            flip: true,
            v: VElement::identity(),
        }
    }

    pub fn from_v(v: VElement) -> Self {
        NormalizerElement { flip: false, v }
    }

    /// Normalises `flip^pre . v . flip^post` using `flip v flip in V`.
    pub fn from_parts(flip_pre: bool, v: VElement, flip_post: bool) -> Self {
        let v = if flip_post { v.flip_conjugate() } else { v };
        NormalizerElement {
            flip: flip_pre ^ flip_post,
            v,
        }
    }

    pub fn has_flip(&self) -> bool {
        self.flip
    }

    pub fn v_part(&self) -> &VElement {
        &self.v
    }

    pub fn is_identity(&self) -> bool {
        !self.flip && self.v.is_identity()
    }

    /// Composition `self . other` (`other` applied first).
    pub fn compose(&self, other: &NormalizerElement) -> NormalizerElement {
        // (flip^a v)(flip^b w) = flip^(a xor b) (flip^b v flip^b) w
        let v_conj = if other.flip {
            self.v.flip_conjugate()
        } else {
            self.v.clone()
        };
        NormalizerElement {
            flip: self.flip ^ other.flip,
            v: v_conj.compose(&other.v),
        }
    }

    pub fn inverse(&self) -> NormalizerElement {
        // (flip^a v)^-1 = v^-1 flip^a = flip^a (flip^a v^-1 flip^a)
        let vi = self.v.inverse();
        NormalizerElement {
            flip: self.flip,
            v: if self.flip { vi.flip_conjugate() } else { vi },
        }
    }

    pub fn apply(&self, x: &CPoint) -> CPoint {
        let y = self.v.apply(x);
        if self.flip {
            y.complemented()
        } else {
            y
        }
    }

    /// Conjugation `phi . v . phi^-1`, an element of V again.
    pub fn conjugate(&self, v: &VElement) -> VElement {
        let inner = self.v.compose(v).compose(&self.v.inverse());
        if self.flip {
            inner.flip_conjugate()
        } else {
            inner
        }
    }

    pub fn image_of_union(&self, u: &SdiUnion) -> SdiUnion {
        let image = self.v.image_of_union(u);
        if self.flip {
            SdiUnion::from_cells(image.cells().iter().map(|w| w.complemented()).collect())
        } else {
            image
        }
    }

    pub fn image_of_sdi(&self, w: &Word) -> SdiUnion {
        self.image_of_union(&SdiUnion::from_cells(vec![w.clone()]))
    }
}

impl fmt::Display for NormalizerElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.flip {
            write!(f, "~{}", self.v)
        } else {
            write!(f, "{}", self.v)
        }
    }
}

impl FromStr for NormalizerElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix('~') {
            if rest.trim().is_empty() {
                return Ok(NormalizerElement::flip());
            }
            Ok(NormalizerElement::new(true, rest.parse()?))
        } else {
            Ok(NormalizerElement::new(false, s.parse()?))
        }
    }
}

/// Completes a partial prefix table into a full element of V. The given
/// pairs are kept verbatim; the uncovered domain cells are matched with the
/// uncovered codomain cells in lexicographic order, splitting the last cell
/// of the smaller side until the counts agree.
pub fn v_from_partial(pairs: Vec<(Word, Word)>) -> Result<VElement> {
    let dom = SdiUnion::from_cells(pairs.iter().map(|(d, _)| d.clone()).collect());
    let cod = SdiUnion::from_cells(pairs.iter().map(|(_, c)| c.clone()).collect());
    {
        // the prescribed cells must be pairwise disjoint on both sides
        for (i, (d, c)) in pairs.iter().enumerate() {
            for (d2, c2) in pairs.iter().skip(i + 1) {
                if !d.incomparable(d2) {
                    return Err(Error::InvalidSdp(format!(
                        "prescribed domains {d} and {d2} overlap"
                    )));
                }
                if !c.incomparable(c2) {
                    return Err(Error::InvalidSdp(format!(
                        "prescribed codomains {c} and {c2} overlap"
                    )));
                }
            }
        }
    }
    let mut rest_dom: Vec<Word> = dom.complement().cells().to_vec();
    let mut rest_cod: Vec<Word> = cod.complement().cells().to_vec();
    if rest_dom.is_empty() != rest_cod.is_empty() {
        return Err(Error::InvalidSdp(
            "one side of the partial table covers the space, the other does not".into(),
        ));
    }
    while rest_dom.len() < rest_cod.len() {
        let w = rest_dom.pop().unwrap();
        rest_dom.push(w.child(false));
        rest_dom.push(w.child(true));
        rest_dom.sort();
    }
    while rest_cod.len() < rest_dom.len() {
        let w = rest_cod.pop().unwrap();
        rest_cod.push(w.child(false));
        rest_cod.push(w.child(true));
        rest_cod.sort();
    }
    let mut all = pairs;
    all.extend(rest_dom.into_iter().zip(rest_cod));
    VElement::new(all)
}

/// The transposition swapping two disjoint sdi by prefix replacement and
/// fixing everything else.
pub fn transposition(a: &Word, b: &Word) -> Result<VElement> {
    if !a.incomparable(b) {
        return Err(Error::IncompatiblePrefix(a.to_string(), b.to_string()));
    }
    v_from_partial(vec![(a.clone(), b.clone()), (b.clone(), a.clone())])
}

/// An element adapted to the sdi `j` sending it onto the sdi named `target`
/// (one prefix must properly extend the other); the element is the identity
/// outside the minimal sdi properly containing both.
pub fn make_contraction(j: &Sdi, target: &Word) -> Result<VElement> {
    let jw = j.prefix();
    if j.is_full() {
        return Err(Error::FullSpace);
    }
    if !(jw.is_proper_prefix_of(target) || target.is_proper_prefix_of(jw)) {
        return Err(Error::IncompatiblePrefix(
            jw.to_string(),
            target.to_string(),
        ));
    }
    let shorter = if jw.len() < target.len() { jw } else { target };
    let scope = match shorter.parent() {
        Some(p) => p,
        None => {
            return Err(Error::IncompatiblePrefix(
                jw.to_string(),
                target.to_string(),
            ))
        }
    };
    // keep everything outside the scope cell fixed
    let mut pairs = vec![(jw.clone(), target.clone())];
    for cell in SdiUnion::from_cells(vec![scope.clone()])
        .complement()
        .cells()
    {
        pairs.push((cell.clone(), cell.clone()));
    }
    v_from_partial(pairs)
}

/// A finite family of elements fixing the union `u` pointwise and
/// rearranging its complement: all transpositions of disjoint complement
/// cells of depth at most `depth`, plus one in-cell contraction per cell.
pub fn fix_generators(u: &SdiUnion, depth: usize) -> Result<Vec<VElement>> {
    let comp = u.complement();
    if comp.is_empty() {
        return Err(Error::FullSpace);
    }
    let mut cells: Vec<Word> = Vec::new();
    for base in comp.cells() {
        for len in base.len()..=depth.max(base.len()) {
            cells.extend(base.extensions_to(len));
        }
    }
    cells.sort();
    cells.dedup();
    let mut out = Vec::new();
    for (i, a) in cells.iter().enumerate() {
        for b in cells.iter().skip(i + 1) {
            if a.incomparable(b) {
                out.push(transposition(a, b)?);
            }
        }
    }
    // the A-shaped contraction supported inside each cell
    for m in &cells {
        let m00 = m.child(false).child(false);
        let m0 = m.child(false);
        let m01 = m.child(false).child(true);
        let m10 = m.child(true).child(false);
        let m1 = m.child(true);
        let m11 = m.child(true).child(true);
        out.push(v_from_partial(vec![(m00, m0), (m01, m10), (m1, m11)])?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    /// The classical generator {00->0, 01->10, 1->11}.
    pub(crate) fn gen_a() -> VElement {
        "00->0 01->10 1->11".parse().unwrap()
    }

    #[test]
    fn compose_examples() {
        let a = gen_a();
        assert_eq!(a.compose(&a.inverse()), VElement::identity());
        let s = VElement::half_swap();
        assert_eq!(s.compose(&s), VElement::identity());
        let aa: VElement = "000->0 001->10 01->110 1->111".parse().unwrap();
        assert_eq!(a.compose(&a), aa);
    }

    #[test]
    fn reduction_is_canonical() {
        let v: VElement = "0->0 10->10 11->11".parse().unwrap();
        assert!(v.is_identity());
        assert_eq!(v.to_string(), "e->e");
    }

    #[test]
    fn apply_examples() {
        let a = gen_a();
        assert_eq!(a.apply(&CPoint::zero()), CPoint::zero());
        // the half swap sends 0.(0) to the midpoint 1.(0), not to (1)
        let s = VElement::half_swap();
        assert_eq!(
            s.apply(&CPoint::zero()),
            CPoint::new(w("1"), w("0")).unwrap()
        );
        assert_eq!(s.apply(&s.apply(&CPoint::zero())), CPoint::zero());
        // 01(10)^inf lies in I_01, image 10.(10)^inf = (10)^inf canonically
        let x = CPoint::new(w("01"), w("10")).unwrap();
        let y = a.apply(&x);
        assert_eq!(y, CPoint::periodic(w("10")).unwrap());
        assert_eq!(y.expand(6), w("101010"));
    }

    #[test]
    fn slope_examples() {
        let a = gen_a();
        assert_eq!(VElement::identity().slope_at(&CPoint::zero()), 0);
        assert_eq!(a.slope_at(&CPoint::zero()), 1);
        assert_eq!(a.slope_at(&CPoint::one()), -1);
    }

    #[test]
    fn membership_examples() {
        let a = gen_a();
        assert!(a.is_in_f() && a.is_in_t());
        let s = VElement::half_swap();
        assert!(!s.is_in_f() && s.is_in_t());
        let t: VElement = "00->1 01->00 1->01".parse().unwrap();
        assert!(!t.is_in_f() && t.is_in_t());
        let v: VElement = "00->00 01->1 1->01".parse().unwrap();
        assert!(!v.is_in_t());
    }

    #[test]
    fn apply_preserves_tail_class() {
        let a = gen_a();
        for x in [
            CPoint::zero(),
            CPoint::one(),
            CPoint::new(w("01"), w("10")).unwrap(),
            CPoint::new(w("110"), w("011")).unwrap(),
        ] {
            assert_eq!(a.apply(&x).tail_class_word(), x.tail_class_word());
        }
    }

    #[test]
    fn normalizer_normal_form_and_conjugation() {
        let a = gen_a();
        let phi = NormalizerElement::flip();
        let mirror: VElement = "11->1 10->01 0->00".parse().unwrap();
        assert_eq!(phi.conjugate(&a), mirror);
        let s = VElement::half_swap();
        assert_eq!(phi.conjugate(&s), s);
        assert_eq!(NormalizerElement::identity().conjugate(&a), a);
        // flip^2 = id
        assert_eq!(phi.compose(&phi), NormalizerElement::identity());
        let n = NormalizerElement::from_parts(false, a.clone(), true);
        assert!(!n.has_flip() || n.v_part() != &a);
        // applying matches composition semantics
        let m = NormalizerElement::new(true, a.clone());
        let x = CPoint::new(w("01"), w("10")).unwrap();
        assert_eq!(m.apply(&x), a.apply(&x).complemented());
    }

    #[test]
    fn contraction_builder() {
        let v = make_contraction(&Sdi::new(w("00")), &w("0")).unwrap();
        assert_eq!(v.image_of_sdi(&w("00")), SdiUnion::from_cells(vec![w("0")]));
        assert_eq!(v.slope_at(&CPoint::zero()), 1);
        let vi = make_contraction(&Sdi::new(w("0")), &w("00")).unwrap();
        assert_eq!(
            vi.image_of_sdi(&w("0")),
            SdiUnion::from_cells(vec![w("00")])
        );
        let deep = make_contraction(&Sdi::new(w("010")), &w("01011")).unwrap();
        // identity outside I_01
        for p in ["(0)", "1.(0)", "11.(1)", "001.(10)"] {
            let x: CPoint = p.parse().unwrap();
            if !x.has_prefix(&w("01")) {
                assert_eq!(deep.apply(&x), x);
            }
        }
        assert!(make_contraction(&Sdi::new(w("01")), &w("10")).is_err());
        assert!(make_contraction(&Sdi::full(), &w("0")).is_err());
    }

    #[test]
    fn partial_table_error_paths() {
        // overlapping prescribed domains
        assert!(v_from_partial(vec![(w("0"), w("10")), (w("01"), w("11")),]).is_err());
        // one side covers the space, the other does not
        assert!(v_from_partial(vec![(w("0"), w("00")), (w("1"), w("01"))]).is_err());
        // disjoint transpositions complete to the identity elsewhere
        let v = transposition(&w("00"), &w("11")).unwrap();
        assert_eq!(
            v.apply(&CPoint::new(w("01"), w("0")).unwrap()),
            CPoint::new(w("01"), w("0")).unwrap()
        );
        assert!(transposition(&w("0"), &w("01")).is_err());
    }

    #[test]
    fn fix_generator_family_fixes_pointwise() {
        let u = SdiUnion::from_cells(vec![w("0")]);
        let gens = fix_generators(&u, 2).unwrap();
        assert!(!gens.is_empty());
        let samples = [
            CPoint::zero(),
            CPoint::new(w("0011"), w("01")).unwrap(),
            CPoint::new(w("01"), w("0")).unwrap(),
        ];
        for g in &gens {
            for x in &samples {
                assert_eq!(g.apply(x), *x, "generator {g} moved {x}");
            }
        }
        assert!(fix_generators(&SdiUnion::full(), 2).is_err());
    }

    #[test]
    fn chain_rule_on_samples() {
        let a = gen_a();
        let s = VElement::half_swap();
        let x = CPoint::new(w("01"), w("10")).unwrap();
        for (v, u) in [
            (a.clone(), s.clone()),
            (s.clone(), a.clone()),
            (a.clone(), a.clone()),
        ] {
            let lhs = v.compose(&u).slope_at(&x);
            let rhs = v.slope_at(&u.apply(&x)) + u.slope_at(&x);
            assert_eq!(lhs, rhs);
        }
    }

    mod properties {
        use super::*;
        use crate::sampling::{random_cpoint, random_velement, rng_for_case};
        use proptest::prelude::*;
        use rand::Rng;

        proptest! {
            #[test]
            fn group_axioms(seed in any::<u64>()) {
                let mut rng = rng_for_case(seed, 0);
                let v = random_velement(&mut rng, 10);
                let u = random_velement(&mut rng, 10);
                let t = random_velement(&mut rng, 10);
                prop_assert_eq!(v.compose(&u).compose(&t), v.compose(&u.compose(&t)));
                prop_assert!(v.compose(&v.inverse()).is_identity());
                prop_assert!(v.inverse().compose(&v).is_identity());
            }

            #[test]
            fn chain_rule(seed in any::<u64>()) {
                let mut rng = rng_for_case(seed, 1);
                let v = random_velement(&mut rng, 8);
                let u = random_velement(&mut rng, 8);
                let x = random_cpoint(&mut rng, 3, 3);
                let lhs = v.compose(&u).slope_at(&x);
                prop_assert_eq!(lhs, v.slope_at(&u.apply(&x)) + u.slope_at(&x));
            }

            #[test]
            fn reduction_confluence(seed in any::<u64>()) {
                // splitting any table pairs and re-reducing recovers the
                // same canonical table, regardless of which pairs were split
                let mut rng = rng_for_case(seed, 2);
                let v = random_velement(&mut rng, 8);
                let mut pairs: Vec<(Word, Word)> = v.pairs().to_vec();
                for _ in 0..4 {
                    let i = rng.gen_range(0..pairs.len());
                    let (d, c) = pairs.swap_remove(i);
                    pairs.push((d.child(false), c.child(false)));
                    pairs.push((d.child(true), c.child(true)));
                }
                let expanded = VElement::new(pairs).unwrap();
                prop_assert_eq!(expanded, v);
            }

            #[test]
            fn apply_preserves_tail_words(seed in any::<u64>()) {
                let mut rng = rng_for_case(seed, 3);
                let v = random_velement(&mut rng, 8);
                let x = random_cpoint(&mut rng, 3, 3);
                prop_assert_eq!(v.apply(&x).tail_class_word(), x.tail_class_word());
                prop_assert_eq!(v.inverse().apply(&v.apply(&x)), x);
            }
        }
    }
}

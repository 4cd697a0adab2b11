//! The discrete loop group `L(Gamma)` of locally constant maps from the
//! Cantor space to a coefficient group, with canonical forms, supports, the
//! twist automorphisms `tau_{v,x}` and the Jones action of V.
//!
//! A loop element stores its values over an exact standard dyadic partition;
//! the canonical form merges sibling cells carrying equal values, so
//! structural equality decides equality of maps.

use crate::cantor::{CPoint, SdiUnion, Sdp, Word};
use crate::coeff::{Coefficients, GroupMap, Triple};
use crate::error::{Error, Result};
use crate::thompson::{NormalizerElement, VElement};

/// A locally constant map `Cantor -> Gamma` over the coefficient context `C`.
pub struct LoopElement<C: Coefficients> {
    cells: Vec<(Word, C::Elem)>,
}

impl<C: Coefficients> Clone for LoopElement<C> {
    fn clone(&self) -> Self {
        LoopElement {
            cells: self.cells.clone(),
        }
    }
}

impl<C: Coefficients> PartialEq for LoopElement<C> {
    fn eq(&self, other: &Self) -> bool {
        self.cells == other.cells
    }
}

impl<C: Coefficients> Eq for LoopElement<C> {}

impl<C: Coefficients> std::fmt::Debug for LoopElement<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_map()
            .entries(self.cells.iter().map(|(w, g)| (w.to_string(), g)))
            .finish()
    }
}

impl<C: Coefficients> LoopElement<C> {
    /// Builds a loop element from cells forming an sdp, then canonicalises.
    pub fn new(cells: Vec<(Word, C::Elem)>) -> Result<Self> {
        Sdp::new(cells.iter().map(|(w, _)| w.clone()).collect())?;
        let mut a = LoopElement { cells };
        a.canonicalize();
        Ok(a)
    }

    pub fn constant(g: C::Elem) -> Self {
        LoopElement {
            cells: vec![(Word::empty(), g)],
        }
    }

    pub fn identity(ctx: &C) -> Self {
        LoopElement::constant(ctx.identity())
    }

    /// The element equal to `g` on the cells of `u` and trivial elsewhere.
    pub fn indicator(ctx: &C, u: &SdiUnion, g: C::Elem) -> Self {
        let mut cells: Vec<(Word, C::Elem)> =
            u.cells().iter().map(|w| (w.clone(), g.clone())).collect();
        for w in u.complement().cells() {
            cells.push((w.clone(), ctx.identity()));
        }
        cells.sort_by(|a, b| a.0.cmp(&b.0));
        let mut a = LoopElement { cells };
        a.canonicalize();
        a
    }

    pub fn cells(&self) -> &[(Word, C::Elem)] {
        &self.cells
    }

    pub fn partition(&self) -> Sdp {
        Sdp::new(self.cells.iter().map(|(w, _)| w.clone()).collect())
            .expect("loop cells form an sdp")
    }

    fn canonicalize(&mut self) {
        self.cells.sort_by(|a, b| a.0.cmp(&b.0));
        loop {
            let mut merged = false;
            let mut out: Vec<(Word, C::Elem)> = Vec::with_capacity(self.cells.len());
            let mut i = 0;
            while i < self.cells.len() {
                if i + 1 < self.cells.len() {
                    let (w0, g0) = &self.cells[i];
                    let (w1, g1) = &self.cells[i + 1];
                    if w0.last() == Some(false)
                        && w1.last() == Some(true)
                        && w0.parent() == w1.parent()
                        && g0 == g1
                    {
                        out.push((w0.parent().unwrap(), g0.clone()));
                        merged = true;
                        i += 2;
                        continue;
                    }
                }
                out.push(self.cells[i].clone());
                i += 1;
            }
            self.cells = out;
            if !merged {
                return;
            }
        }
    }

    /// The constant value on the (sub)cell named by `w`; `w` must be at
    /// least as deep as the containing cell.
    pub fn value_on(&self, w: &Word) -> &C::Elem {
        self.cells
            .iter()
            .find(|(c, _)| c.is_prefix_of(w))
            .map(|(_, g)| g)
            .expect("cell lookup inside the partition")
    }

    pub fn value_at(&self, x: &CPoint) -> &C::Elem {
        self.cells
            .iter()
            .find(|(c, _)| x.has_prefix(c))
            .map(|(_, g)| g)
            .expect("loop cells cover every point")
    }

    /// Cell list refined to the given finer partition.
    pub fn refined_to(&self, partition: &Sdp) -> Vec<(Word, C::Elem)> {
        let mut out = Vec::new();
        for cell in partition.cells() {
            out.push((cell.clone(), self.value_on(cell).clone()));
        }
        out
    }

    pub fn is_identity(&self, ctx: &C) -> bool {
        self.cells.len() == 1 && self.cells[0].1 == ctx.identity()
    }

    /// Pointwise product over the common refinement.
    pub fn mul(&self, ctx: &C, other: &Self) -> Self {
        let part = self.partition().common_refinement(&other.partition());
        let cells = part
            .cells()
            .iter()
            .map(|w| (w.clone(), ctx.mul(self.value_on(w), other.value_on(w))))
            .collect();
        let mut a = LoopElement { cells };
        a.canonicalize();
        a
    }

    pub fn inv(&self, ctx: &C) -> Self {
        let cells = self
            .cells
            .iter()
            .map(|(w, g)| (w.clone(), ctx.inv(g)))
            .collect();
        LoopElement { cells }
    }

    /// Canonical union of the cells carrying a non-identity value.
    pub fn support(&self, ctx: &C) -> SdiUnion {
        SdiUnion::from_cells(
            self.cells
                .iter()
                .filter(|(_, g)| *g != ctx.identity())
                .map(|(w, _)| w.clone())
                .collect(),
        )
    }

    /// Applies a map to every value (e.g. a diagonal isomorphism).
    pub fn map_values<D: Coefficients>(&self, f: impl Fn(&C::Elem) -> D::Elem) -> LoopElement<D> {
        let cells = self.cells.iter().map(|(w, g)| (w.clone(), f(g))).collect();
        let mut a = LoopElement { cells };
        a.canonicalize();
        a
    }

    /// Pure spatial pushforward `a . phi^-1` along a normaliser element.
    pub fn pushforward(&self, phi: &NormalizerElement) -> Self {
        let mut cells = Vec::new();
        for (w, g) in &self.cells {
            for img in phi.image_of_sdi(w).cells() {
                cells.push((img.clone(), g.clone()));
            }
        }
        let mut a = LoopElement { cells };
        a.canonicalize();
        a
    }

    /// Untwisted shift `a . v^-1` for `v` in V.
    pub fn shift(&self, v: &VElement) -> Self {
        self.pushforward(&NormalizerElement::from_v(v.clone()))
    }
}

/// The Jones action `pi_v(a)(vx) = tau_{v,x}(a(x))`; requires an
/// automorphism pair.
pub fn jones_act<C: Coefficients>(
    ctx: &C,
    v: &VElement,
    a: &LoopElement<C>,
) -> Result<LoopElement<C>> {
    if !ctx.autos() {
        return Err(Error::NotAutomorphism);
    }
    let table = v.refined_against(&a.partition());
    let mut cells = Vec::with_capacity(table.len());
    for (d, c) in &table {
        let g = a.value_on(d);
        let twisted = ctx.alpha_word_inv(c, &ctx.alpha_word(d, g));
        cells.push((c.clone(), twisted));
    }
    let mut out = LoopElement { cells };
    out.canonicalize();
    Ok(out)
}

/// The local twist `tau_{v,x} = alpha_{m_v(I)}^-1 o alpha_{m_I}` as a map on
/// the finite coefficient group; independent of the adapted cell chosen.
pub fn tau(t: &Triple, v: &VElement, x: &CPoint) -> Result<GroupMap> {
    if !t.autos() {
        return Err(Error::NotAutomorphism);
    }
    let (d, c) = v.cell_at(x);
    Ok(t.alpha_word(c).inverse()?.compose(&t.alpha_word(d)))
}

/// Integer coefficients under addition; loop elements over this context are
/// the exponent fields (slope cocycles, digit-sum coboundaries).
#[derive(Clone, Copy, Debug, Default)]
pub struct IntAdd;

impl Coefficients for IntAdd {
    type Elem = i64;

    fn identity(&self) -> i64 {
        0
    }

    fn mul(&self, a: &i64, b: &i64) -> i64 {
        a + b
    }

    fn inv(&self, a: &i64) -> i64 {
        -a
    }

    fn alpha(&self, _b: bool, g: &i64) -> i64 {
        *g
    }

    fn alpha_inv(&self, _b: bool, g: &i64) -> i64 {
        *g
    }

    fn autos(&self) -> bool {
        true
    }

    fn describe(&self, g: &i64) -> String {
        g.to_string()
    }
}

pub type IntLoop = LoopElement<IntAdd>;

/// The slope-exponent field `x -> log2(v'(v^-1 x))` as an integer loop over
/// the codomain partition of `v`.
pub fn ell_loop(v: &VElement) -> IntLoop {
    let cells = v
        .pairs()
        .iter()
        .map(|(d, c)| (c.clone(), d.len() as i64 - c.len() as i64))
        .collect();
    let mut a = LoopElement { cells };
    a.canonicalize();
    a
}

/// Raises a fixed element to a locally constant integer exponent.
pub fn elem_pow_loop<C: Coefficients>(ctx: &C, g: &C::Elem, exps: &IntLoop) -> LoopElement<C> {
    let cells = exps
        .cells()
        .iter()
        .map(|(w, k)| (w.clone(), ctx.pow(g, *k)))
        .collect();
    let mut a = LoopElement { cells };
    a.canonicalize();
    a
}

/// Scales an integer loop by a constant.
pub fn int_loop_scale(a: &IntLoop, k: i64) -> IntLoop {
    let cells = a.cells().iter().map(|(w, x)| (w.clone(), k * x)).collect();
    let mut out = LoopElement { cells };
    out.canonicalize();
    out
}

// ---------------------------------------------------------------------------
// Text format for finite-coefficient loops: "word:elemIndex; ...".

impl LoopElement<Triple> {
    pub fn parse(s: &str, t: &Triple) -> Result<Self> {
        let mut cells = Vec::new();
        for chunk in s.split(';').filter(|p| !p.trim().is_empty()) {
            let (w, g) = chunk
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("expected word:elem, got {chunk:?}")))?;
            let word: Word = w.trim().parse()?;
            let idx: usize = g
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad element index {g:?}")))?;
            if idx >= t.group.order() {
                return Err(Error::Parse(format!(
                    "element index {idx} out of range for group of order {}",
                    t.group.order()
                )));
            }
            cells.push((word, idx));
        }
        LoopElement::new(cells)
    }

    pub fn display(&self) -> String {
        self.cells
            .iter()
            .map(|(w, g)| format!("{w}:{g}"))
            .collect::<Vec<_>>()
            .join("; ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::fixture;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn gen_a() -> VElement {
        "00->0 01->10 1->11".parse().unwrap()
    }

    #[test]
    fn canonical_form_merges_equal_siblings() {
        let t = fixture("z3inv").unwrap();
        let a = LoopElement::<Triple>::new(vec![(w("00"), 1), (w("01"), 1), (w("1"), 0)]).unwrap();
        assert_eq!(a.cells().len(), 2);
        assert_eq!(a.cells()[0], (w("0"), 1));
        assert_eq!(a.support(&t), SdiUnion::from_cells(vec![w("0")]));
    }

    #[test]
    fn mul_and_inverse() {
        let t = fixture("z3inv").unwrap();
        let a = LoopElement::<Triple>::new(vec![(w("0"), 1), (w("1"), 2)]).unwrap();
        assert!(a.mul(&t, &a.inv(&t)).is_identity(&t));
        // disjointly supported elements tile into a constant for abelian groups
        let b = LoopElement::<Triple>::new(vec![(w("0"), 1), (w("1"), 0)]).unwrap();
        let c = LoopElement::<Triple>::new(vec![(w("0"), 0), (w("1"), 1)]).unwrap();
        assert_eq!(b.mul(&t, &c), LoopElement::constant(1));
        assert_eq!(b.mul(&t, &c), c.mul(&t, &b));
    }

    #[test]
    fn support_examples() {
        let t = fixture("z3inv").unwrap();
        assert!(LoopElement::identity(&t).support(&t).is_empty());
        let a = LoopElement::<Triple>::new(vec![(w("00"), 1), (w("01"), 1), (w("1"), 0)]).unwrap();
        assert_eq!(a.support(&t), SdiUnion::from_cells(vec![w("0")]));
    }

    #[test]
    fn tau_examples() {
        let t = fixture("z3inv").unwrap();
        let a = gen_a();
        // identity element has trivial twist
        assert!(tau(&t, &VElement::identity(), &CPoint::zero())
            .unwrap()
            .is_identity());
        // A at 0^inf: cell 00 -> 0, tau = alpha_0 = id for this triple
        assert!(tau(&t, &a, &CPoint::zero()).unwrap().is_identity());
        // A at 1^inf: cell 1 -> 11, tau = alpha_1^-1 = inv
        let tau1 = tau(&t, &a, &CPoint::one()).unwrap();
        assert_eq!(tau1, t.a1.inverse().unwrap());
    }

    #[test]
    fn tau_alpha0_example() {
        // a triple with nontrivial alpha_0 to see tau = alpha_0 on 00 -> 0
        let t = {
            let g = crate::coeff::cyclic(5);
            Triple::new(
                g.clone(),
                crate::coeff::cyclic_scaling(5, 2),
                crate::coeff::cyclic_scaling(5, 3),
            )
            .unwrap()
        };
        let v =
            crate::thompson::make_contraction(&crate::cantor::Sdi::new(w("00")), &w("0")).unwrap();
        let x = CPoint::zero();
        assert_eq!(tau(&t, &v, &x).unwrap(), t.a0);
    }

    #[test]
    fn jones_action_examples() {
        let t = fixture("z3inv").unwrap();
        let a = LoopElement::<Triple>::new(vec![(w("0"), 0), (w("1"), 1)]).unwrap();
        // identity acts trivially
        assert_eq!(jones_act(&t, &VElement::identity(), &a).unwrap(), a);
        // A sends "g on 1" to "alpha_1^-1(g) on 11"
        let acted = jones_act(&t, &gen_a(), &a).unwrap();
        let expect =
            LoopElement::<Triple>::new(vec![(w("0"), 0), (w("10"), 0), (w("11"), 2)]).unwrap();
        assert_eq!(acted, expect);
        // untwisted triples shift without twisting
        let u = fixture("z2").unwrap();
        let b = LoopElement::<Triple>::new(vec![(w("0"), 1), (w("1"), 0)]).unwrap();
        let shifted = jones_act(&u, &VElement::half_swap(), &b).unwrap();
        assert_eq!(shifted, b.shift(&VElement::half_swap()));
    }

    #[test]
    fn ell_loop_of_generator() {
        let l = ell_loop(&gen_a());
        assert_eq!(l.cells(), &[(w("0"), 1), (w("10"), 0), (w("11"), -1)]);
    }

    #[test]
    fn loop_text_round_trip() {
        let t = fixture("z3inv").unwrap();
        let a = LoopElement::parse("0:1; 10:0; 11:2", &t).unwrap();
        let b = LoopElement::parse(&a.display(), &t).unwrap();
        assert_eq!(a, b);
    }
}

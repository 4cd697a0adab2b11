//! The fraction group `G = L(Gamma) x| V`, the labelled-tree picture of the
//! general directed system, the restricted wreath variant supported on the
//! dyadic class, centralizer predicates and co-context-free helpers.

use crate::cantor::{CPoint, Sdp, Word};
use crate::coeff::{Coefficients, Triple};
use crate::error::{Error, Result};
use crate::loop_group::{jones_act, LoopElement};
use crate::thompson::VElement;

/// An element `a v` of the semidirect product.
pub struct FractionElement<C: Coefficients> {
    pub a: LoopElement<C>,
    pub v: VElement,
}

impl<C: Coefficients> Clone for FractionElement<C> {
    fn clone(&self) -> Self {
        FractionElement {
            a: self.a.clone(),
            v: self.v.clone(),
        }
    }
}

impl<C: Coefficients> PartialEq for FractionElement<C> {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a && self.v == other.v
    }
}

impl<C: Coefficients> Eq for FractionElement<C> {}

impl<C: Coefficients> std::fmt::Debug for FractionElement<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({:?} | {})", self.a, self.v)
    }
}

impl<C: Coefficients> FractionElement<C> {
    pub fn new(a: LoopElement<C>, v: VElement) -> Self {
        FractionElement { a, v }
    }

    pub fn identity(ctx: &C) -> Self {
        FractionElement {
            a: LoopElement::identity(ctx),
            v: VElement::identity(),
        }
    }

    pub fn from_loop(a: LoopElement<C>) -> Self {
        FractionElement {
            a,
            v: VElement::identity(),
        }
    }

    pub fn from_v(ctx: &C, v: VElement) -> Self {
        FractionElement {
            a: LoopElement::identity(ctx),
            v,
        }
    }

    pub fn is_identity(&self, ctx: &C) -> bool {
        self.a.is_identity(ctx) && self.v.is_identity()
    }

    /// `(a, v)(b, w) = (a . pi_v(b), v w)`.
    pub fn mul(&self, ctx: &C, other: &Self) -> Result<Self> {
        let shifted = jones_act(ctx, &self.v, &other.a)?;
        Ok(FractionElement {
            a: self.a.mul(ctx, &shifted),
            v: self.v.compose(&other.v),
        })
    }

    pub fn inv(&self, ctx: &C) -> Result<Self> {
        let vi = self.v.inverse();
        Ok(FractionElement {
            a: jones_act(ctx, &vi, &self.a.inv(ctx))?,
            v: vi,
        })
    }

    pub fn commutes(&self, ctx: &C, other: &Self) -> Result<bool> {
        Ok(self.mul(ctx, other)? == other.mul(ctx, self)?)
    }

    pub fn conjugate(&self, ctx: &C, by: &Self) -> Result<Self> {
        by.mul(ctx, self)?.mul(ctx, &by.inv(ctx)?)
    }
}

/// Constant central alpha-fixed loops paired with the identity: the full
/// center of the fraction group over a finite coefficient triple.
pub fn center_elements(t: &Triple) -> Result<Vec<FractionElement<Triple>>> {
    if !t.autos() {
        return Err(Error::NotAutomorphism);
    }
    Ok(t.central_alpha_fixed()
        .into_iter()
        .map(|g| FractionElement::from_loop(LoopElement::constant(g)))
        .collect())
}

// ---------------------------------------------------------------------------
// Labelled trees: the directed-system picture valid for arbitrary
// endomorphism pairs.

/// A finite binary tree with group labels on its leaves, stored as the leaf
/// partition with labels in left-to-right order.
pub struct LabelledTree<C: Coefficients> {
    leaves: Vec<(Word, C::Elem)>,
}

impl<C: Coefficients> Clone for LabelledTree<C> {
    fn clone(&self) -> Self {
        LabelledTree {
            leaves: self.leaves.clone(),
        }
    }
}

impl<C: Coefficients> PartialEq for LabelledTree<C> {
    fn eq(&self, other: &Self) -> bool {
        self.leaves == other.leaves
    }
}

impl<C: Coefficients> Eq for LabelledTree<C> {}

impl<C: Coefficients> std::fmt::Debug for LabelledTree<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_map()
            .entries(self.leaves.iter().map(|(w, g)| (w.to_string(), g)))
            .finish()
    }
}

impl<C: Coefficients> LabelledTree<C> {
    pub fn new(leaves: Vec<(Word, C::Elem)>) -> Result<Self> {
        Sdp::new(leaves.iter().map(|(w, _)| w.clone()).collect())?;
        let mut leaves = leaves;
        leaves.sort_by(|a, b| a.0.cmp(&b.0));
        Ok(LabelledTree { leaves })
    }

    pub fn root(g: C::Elem) -> Self {
        LabelledTree {
            leaves: vec![(Word::empty(), g)],
        }
    }

    pub fn leaves(&self) -> &[(Word, C::Elem)] {
        &self.leaves
    }

    pub fn partition(&self) -> Sdp {
        Sdp::new(self.leaves.iter().map(|(w, _)| w.clone()).collect())
            .expect("leaf words form an sdp")
    }
}

/// Pushes labels through a forest: the target partition must refine the leaf
/// partition, and a leaf at relative path `p` under a leaf labelled `g`
/// receives `alpha_p(g)`.
pub fn phi_forest<C: Coefficients>(
    ctx: &C,
    lt: &LabelledTree<C>,
    target: &Sdp,
) -> Result<LabelledTree<C>> {
    let mut leaves = Vec::with_capacity(target.len());
    for cell in target.cells() {
        let src = lt
            .leaves
            .iter()
            .find(|(w, _)| w.is_prefix_of(cell))
            .ok_or_else(|| {
                Error::InvalidSdp(format!(
                    "target partition does not refine the tree at cell {cell}"
                ))
            })?;
        let path = cell.strip_prefix(&src.0).unwrap();
        leaves.push((cell.clone(), ctx.alpha_word(&path, &src.1)));
    }
    Ok(LabelledTree { leaves })
}

/// Equality in the direct limit: push both trees to their common refinement
/// and then a further `kernel_depth` levels down, and compare labels.
pub fn lt_equiv<C: Coefficients>(
    ctx: &C,
    x: &LabelledTree<C>,
    y: &LabelledTree<C>,
) -> Result<bool> {
    let join = x.partition().common_refinement(&y.partition());
    let depth = ctx.kernel_depth();
    let mut cells = Vec::new();
    for cell in join.cells() {
        cells.extend(cell.extensions_to(cell.len() + depth));
    }
    let deep = Sdp::new(cells)?;
    Ok(phi_forest(ctx, x, &deep)? == phi_forest(ctx, y, &deep)?)
}

/// The comparison map into the loop group: the leaf labelled `g` at word `m`
/// contributes the value `alpha_m^-1(g)` on its cell. Constant on each leaf
/// cell; requires automorphisms.
pub fn kappa_t<C: Coefficients>(ctx: &C, lt: &LabelledTree<C>) -> Result<LoopElement<C>> {
    if !ctx.autos() {
        return Err(Error::NotAutomorphism);
    }
    let cells = lt
        .leaves
        .iter()
        .map(|(w, g)| (w.clone(), ctx.alpha_word_inv(w, g)))
        .collect();
    LoopElement::new(cells)
}

/// The elementary cloning map on tuples: the `k`-th entry (1-based) of an
/// `n`-tuple is replaced by the pair `(alpha_0(g_k), alpha_1(g_k))`.
pub fn cloning_map<C: Coefficients>(
    ctx: &C,
    n: usize,
    k: usize,
    g: &[C::Elem],
) -> Result<Vec<C::Elem>> {
    if g.len() != n || k == 0 || k > n {
        return Err(Error::Unsupported(format!(
            "cloning index {k} out of range for a {n}-tuple"
        )));
    }
    let mut out = Vec::with_capacity(n + 1);
    out.extend_from_slice(&g[..k - 1]);
    out.push(ctx.alpha(false, &g[k - 1]));
    out.push(ctx.alpha(true, &g[k - 1]));
    out.extend_from_slice(&g[k..]);
    Ok(out)
}

// ---------------------------------------------------------------------------
// The restricted wreath-product picture: finitely supported maps on the
// dyadic class, twisted by a single automorphism.

/// A finitely supported map from the dyadic tail class to the group,
/// canonical: points sorted and distinct, values nontrivial.
pub struct WreathElement<C: Coefficients> {
    support: Vec<(CPoint, C::Elem)>,
}

impl<C: Coefficients> Clone for WreathElement<C> {
    fn clone(&self) -> Self {
        WreathElement {
            support: self.support.clone(),
        }
    }
}

impl<C: Coefficients> PartialEq for WreathElement<C> {
    fn eq(&self, other: &Self) -> bool {
        self.support == other.support
    }
}

impl<C: Coefficients> Eq for WreathElement<C> {}

impl<C: Coefficients> std::fmt::Debug for WreathElement<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_map()
            .entries(self.support.iter().map(|(x, g)| (x.to_string(), g)))
            .finish()
    }
}

impl<C: Coefficients> WreathElement<C> {
    pub fn new(ctx: &C, support: Vec<(CPoint, C::Elem)>) -> Result<Self> {
        let mut support: Vec<(CPoint, C::Elem)> = support
            .into_iter()
            .filter(|(_, g)| *g != ctx.identity())
            .collect();
        for (x, _) in &support {
            if !x.is_dyadic_rational() {
                return Err(Error::Unsupported(format!(
                    "support point {x} lies outside the dyadic class"
                )));
            }
        }
        support.sort_by(|a, b| a.0.cmp(&b.0));
        for pair in support.windows(2) {
            if pair[0].0 == pair[1].0 {
                return Err(Error::Unsupported(format!(
                    "duplicate support point {}",
                    pair[0].0
                )));
            }
        }
        Ok(WreathElement { support })
    }

    pub fn support(&self) -> &[(CPoint, C::Elem)] {
        &self.support
    }

    pub fn support_points(&self) -> Vec<CPoint> {
        self.support.iter().map(|(x, _)| x.clone()).collect()
    }
}

/// The single-automorphism wreath action: the support point `x` moves to
/// `v(x)` and its value is twisted by `alpha^(log2 v'(x))`. The `alpha` used
/// is `alpha_0` of the context, which must be an automorphism.
pub fn wreath_act<C: Coefficients>(
    ctx: &C,
    v: &VElement,
    a: &WreathElement<C>,
) -> Result<WreathElement<C>> {
    if !ctx.autos() {
        return Err(Error::NotAutomorphism);
    }
    let support = a
        .support
        .iter()
        .map(|(x, g)| {
            let k = v.slope_at(x);
            let mut h = g.clone();
            if k >= 0 {
                for _ in 0..k {
                    h = ctx.alpha(false, &h);
                }
            } else {
                for _ in 0..(-k) {
                    h = ctx.alpha_inv(false, &h);
                }
            }
            (v.apply(x), h)
        })
        .collect();
    WreathElement::new(ctx, support)
}

/// The digit-sum exponent `N_{v,x} = f(m_I) - f(m_v(I))` of the
/// co-context-free description; equals the twist exponent of any triple with
/// `alpha_0 = id`.
pub fn cocf_exponent(v: &VElement, x: &CPoint) -> i64 {
    let (d, c) = v.cell_at(x);
    d.digit_sum() - c.digit_sum()
}

// ---------------------------------------------------------------------------
// Text formats.

impl FractionElement<Triple> {
    /// Parses `[loop] | [v-table]`.
    pub fn parse(s: &str, t: &Triple) -> Result<Self> {
        let (la, lv) = s
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("expected [loop] | [table], got {s:?}")))?;
        let strip = |p: &str| -> Result<String> {
            let p = p.trim();
            let p = p
                .strip_prefix('[')
                .and_then(|q| q.strip_suffix(']'))
                .ok_or_else(|| Error::Parse(format!("expected [..], got {p:?}")))?;
            Ok(p.to_string())
        };
        let a = LoopElement::parse(&strip(la)?, t)?;
        let v: VElement = strip(lv)?.parse()?;
        Ok(FractionElement::new(a, v))
    }

    pub fn display(&self) -> String {
        format!("[{}] | [{}]", self.a.display(), self.v)
    }
}

impl LabelledTree<Triple> {
    /// Prints the nested-parenthesis form, e.g. `((g1,g2),g0)`.
    pub fn display(&self) -> String {
        fn rec(leaves: &[(Word, usize)], scope: &Word) -> String {
            if let Some((_, g)) = leaves.iter().find(|(w, _)| w == scope) {
                return format!("g{g}");
            }
            let left: Vec<(Word, usize)> = leaves
                .iter()
                .filter(|(w, _)| scope.child(false).is_prefix_of(w))
                .cloned()
                .collect();
            let right: Vec<(Word, usize)> = leaves
                .iter()
                .filter(|(w, _)| scope.child(true).is_prefix_of(w))
                .cloned()
                .collect();
            format!(
                "({},{})",
                rec(&left, &scope.child(false)),
                rec(&right, &scope.child(true))
            )
        }
        rec(&self.leaves, &Word::empty())
    }

    /// Parses the nested-parenthesis form.
    pub fn parse(s: &str, t: &Triple) -> Result<Self> {
        fn rec(
            chars: &mut std::iter::Peekable<std::str::Chars<'_>>,
            prefix: &Word,
            out: &mut Vec<(Word, usize)>,
            order: usize,
        ) -> Result<()> {
            match chars.peek() {
                Some('(') => {
                    chars.next();
                    rec(chars, &prefix.child(false), out, order)?;
                    if chars.next() != Some(',') {
                        return Err(Error::Parse("expected ',' in labelled tree".into()));
                    }
                    rec(chars, &prefix.child(true), out, order)?;
                    if chars.next() != Some(')') {
                        return Err(Error::Parse("expected ')' in labelled tree".into()));
                    }
                    Ok(())
                }
                Some(_) => {
                    let mut tok = String::new();
                    while let Some(&c) = chars.peek() {
                        if c == ',' || c == ')' {
                            break;
                        }
                        tok.push(c);
                        chars.next();
                    }
                    let tok = tok.trim().trim_start_matches('g');
                    let idx: usize = tok
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad leaf label {tok:?}")))?;
                    if idx >= order {
                        return Err(Error::Parse(format!("leaf label {idx} out of range")));
                    }
                    out.push((prefix.clone(), idx));
                    Ok(())
                }
                None => Err(Error::Parse("unexpected end of labelled tree".into())),
            }
        }
        let mut out = Vec::new();
        let mut chars = s.trim().chars().peekable();
        rec(&mut chars, &Word::empty(), &mut out, t.group.order())?;
        if chars.next().is_some() {
            return Err(Error::Parse("trailing input after labelled tree".into()));
        }
        LabelledTree::new(out)
    }
}

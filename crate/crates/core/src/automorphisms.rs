//! Cocycles on V, the elementary automorphism families of untwisted
//! fraction groups, the slope cocycle, the normaliser-map calculus with
//! `k_phi` and `gamma_phi`, the quadruple decomposition map, and the
//! `Z[1/2] x Z[1/2]` non-spatial morphism example.
//!
//! Cocycles and normaliser maps are stored symbolically by construction
//! recipe and evaluated lazily per element of V; every map used here has a
//! finite recipe, so nothing is ever tabulated over all of V.

use crate::cantor::{CPoint, Word};
use crate::coeff::{DyadicPairTriple, GroupMap, Triple};
use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::fraction::FractionElement;
use crate::loop_group::{elem_pow_loop, ell_loop, int_loop_scale, jones_act, IntLoop, LoopElement};
use crate::thompson::{v_from_partial, NormalizerElement, VElement};

/// `ell_v(x) = log2(v'(v^-1 x))`, the slope cocycle integrand.
pub fn ell(v: &VElement, x: &CPoint) -> i64 {
    v.ell_at(x)
}

/// Length of the prime word of the tail class of `phi^-1(0^infinity)`; the
/// scaling constant of the slope-cocycle conjugation law.
pub fn k_phi(phi: &NormalizerElement) -> usize {
    phi.inverse().apply(&CPoint::zero()).tail_class_word().len()
}

/// An element of V sending `0^infinity` to the given dyadic-class point.
pub fn v_sending_zero_to(x: &CPoint) -> Result<VElement> {
    if !x.is_dyadic_rational() {
        return Err(Error::Unsupported(format!(
            "{x} lies outside the dyadic tail class"
        )));
    }
    let zero_cell: Word = "0".parse().unwrap();
    let target = x.preperiod().concat(&zero_cell);
    v_from_partial(vec![(zero_cell, target)])
}

/// A second, generally different element with the same image of zero; used
/// to test that `gamma_phi` does not depend on the auxiliary choice.
pub fn v_sending_zero_to_alt(x: &CPoint) -> Result<VElement> {
    if !x.is_dyadic_rational() {
        return Err(Error::Unsupported(format!(
            "{x} lies outside the dyadic tail class"
        )));
    }
    let zero_cell: Word = "00".parse().unwrap();
    let target = x.preperiod().concat(&zero_cell);
    v_from_partial(vec![(zero_cell, target)])
}

/// `gamma_phi` evaluated through a chosen auxiliary element with `v(0) = x`.
pub fn gamma_phi_via(phi: &NormalizerElement, v: &VElement) -> i64 {
    let w = phi.inverse().conjugate(v);
    let p = phi.inverse().apply(&CPoint::zero());
    let k = k_phi(phi) as i64;
    w.slope_at(&p) - k * v.slope_at(&CPoint::zero())
}

/// The function `gamma_phi` of the slope-cocycle conjugation law, defined on
/// the dyadic tail class; its value does not depend on the auxiliary element.
pub fn gamma_phi(phi: &NormalizerElement, x: &CPoint) -> Result<i64> {
    let v = v_sending_zero_to(x)?;
    Ok(gamma_phi_via(phi, &v))
}

// ---------------------------------------------------------------------------
// Normaliser maps: elements of the unrestricted product normalising G.

/// A map from the dyadic class to the coefficient group that normalises the
/// fraction group; stored by recipe. Only the coboundary `f (f^v)^-1` is
/// ever materialised, so maps with infinitely many values are fine.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NormalizerMap {
    /// An honest loop element.
    Loop(LoopElement<Triple>),
    /// `x -> zeta^(digit sum of x)` for a central element.
    DigitSumPow { zeta: usize },
    /// `x -> zeta^(gamma_phi(x))` for a central element.
    ZetaGamma { zeta: usize, phi: NormalizerElement },
}

impl NormalizerMap {
    pub fn constant(g: usize) -> Self {
        NormalizerMap::Loop(LoopElement::constant(g))
    }

    fn require_central(t: &Triple, zeta: usize) -> Result<()> {
        if !t.group.center().contains(&zeta) {
            return Err(Error::Unsupported(format!("element {zeta} is not central")));
        }
        Ok(())
    }

    fn require_untwisted(t: &Triple) -> Result<()> {
        if !t.is_untwisted() {
            return Err(Error::Unsupported(
                "digit-sum and gamma-phi normaliser maps are untwisted-only".into(),
            ));
        }
        Ok(())
    }

    /// The integer exponent field of the coboundary, for the central-power
    /// variants.
    pub fn coboundary_exponents(&self, v: &VElement) -> Result<IntLoop> {
        match self {
            NormalizerMap::Loop(_) => Err(Error::Unsupported(
                "loop-valued normaliser maps have no exponent field".into(),
            )),
            NormalizerMap::DigitSumPow { .. } => {
                let cells = v
                    .pairs()
                    .iter()
                    .map(|(d, c)| (c.clone(), c.digit_sum() - d.digit_sum()))
                    .collect();
                IntLoop::new(cells)
            }
            NormalizerMap::ZetaGamma { phi, .. } => {
                let w = phi.inverse().conjugate(v);
                let pushed = ell_loop(&w).pushforward(phi);
                let k = k_phi(phi) as i64;
                Ok(pushed.mul(
                    &crate::loop_group::IntAdd,
                    &int_loop_scale(&ell_loop(v), -k),
                ))
            }
        }
    }

    /// The coboundary `f . (f^v)^-1` as a loop element; the defining
    /// normaliser property is that this lands in the loop group for all v.
    pub fn coboundary(&self, t: &Triple, v: &VElement) -> Result<LoopElement<Triple>> {
        match self {
            NormalizerMap::Loop(f) => {
                let shifted = jones_act(t, v, f)?;
                Ok(f.mul(t, &shifted.inv(t)))
            }
            NormalizerMap::DigitSumPow { zeta } | NormalizerMap::ZetaGamma { zeta, .. } => {
                Self::require_untwisted(t)?;
                Self::require_central(t, *zeta)?;
                let exps = self.coboundary_exponents(v)?;
                Ok(elem_pow_loop(t, zeta, &exps))
            }
        }
    }

    /// The adjoint action `ad(f)(a v) = f a (f^v)^-1 v`.
    pub fn apply_ad(
        &self,
        t: &Triple,
        x: &FractionElement<Triple>,
    ) -> Result<FractionElement<Triple>> {
        match self {
            NormalizerMap::Loop(f) => {
                let shifted = jones_act(t, &x.v, f)?;
                Ok(FractionElement::new(
                    f.mul(t, &x.a).mul(t, &shifted.inv(t)),
                    x.v.clone(),
                ))
            }
            _ => {
                // centrally valued: f a (f^v)^-1 = a . coboundary
                let cob = self.coboundary(t, &x.v)?;
                Ok(FractionElement::new(x.a.mul(t, &cob), x.v.clone()))
            }
        }
    }

    pub fn inverse(&self, t: &Triple) -> NormalizerMap {
        match self {
            NormalizerMap::Loop(f) => NormalizerMap::Loop(f.inv(t)),
            NormalizerMap::DigitSumPow { zeta } => NormalizerMap::DigitSumPow {
                zeta: t.group.inv(*zeta),
            },
            NormalizerMap::ZetaGamma { zeta, phi } => NormalizerMap::ZetaGamma {
                zeta: t.group.inv(*zeta),
                phi: phi.clone(),
            },
        }
    }

    /// Transport along a spatial pair: `f -> beta-bar(f)^phi`.
    pub fn transport(&self, phi: &NormalizerElement, beta: &GroupMap) -> Result<Self> {
        match self {
            NormalizerMap::Loop(f) => Ok(NormalizerMap::Loop(
                f.map_values::<Triple>(|g| beta.apply(*g)).pushforward(phi),
            )),
            _ => Err(Error::Unsupported(
                "transport is only implemented for loop-valued maps".into(),
            )),
        }
    }
}

// ---------------------------------------------------------------------------
// Cocycles c : V -> L(Gamma), stored by recipe.

#[derive(Clone, Debug)]
pub enum Cocycle {
    /// The slope cocycle `s(zeta)_v(x) = zeta^(log2 v'(v^-1 x))`; requires a
    /// central alpha-fixed element.
    Slope { zeta: usize },
    /// The coboundary of a normaliser map.
    Coboundary(NormalizerMap),
    /// The twisting cocycle built from a pair `(h0, h1)` through the
    /// word-indexed elements `h_q`; requires an automorphism triple.
    HTwist { h0: usize, h1: usize },
    /// Pointwise product (for building test variants).
    Product(Vec<Cocycle>),
}

impl Cocycle {
    pub fn eval(&self, t: &Triple, v: &VElement) -> Result<LoopElement<Triple>> {
        match self {
            Cocycle::Slope { zeta } => {
                if !t.central_alpha_fixed().contains(zeta) {
                    return Err(Error::Unsupported(format!(
                        "slope cocycle needs a central alpha-fixed element, got {zeta}"
                    )));
                }
                Ok(elem_pow_loop(t, zeta, &ell_loop(v)))
            }
            Cocycle::Coboundary(f) => f.coboundary(t, v),
            Cocycle::HTwist { h0, h1 } => {
                if !t.autos() {
                    return Err(Error::NotAutomorphism);
                }
                let mut cells = Vec::with_capacity(v.pairs().len());
                for (d, c) in v.pairs() {
                    let hd = t.h_q(*h0, *h1, d)?;
                    let hc = t.h_q(*h0, *h1, c)?;
                    let val = t
                        .alpha_word(c)
                        .inverse()?
                        .apply(t.group.mul(t.group.inv(hc), hd));
                    cells.push((c.clone(), val));
                }
                LoopElement::new(cells)
            }
            Cocycle::Product(cs) => {
                let mut acc = LoopElement::identity(t);
                for c in cs {
                    acc = acc.mul(t, &c.eval(t, v)?);
                }
                Ok(acc)
            }
        }
    }

    /// Checks the cocycle identity `c_(vw) = c_v . pi_v(c_w)` on random
    /// pairs (the action sign of `c^v`; it reduces to the plain shift on
    /// untwisted triples and on alpha-fixed central values). Returns the
    /// failing case indices.
    pub fn check(&self, t: &Triple, trials: usize, seed: u64) -> Result<Vec<usize>> {
        check_cocycle_map(t, trials, seed, |v| self.eval(t, v))
    }
}

/// The cocycle-identity checker over an arbitrary evaluation map; useful as
/// a negative control with deliberately broken maps.
pub fn check_cocycle_map(
    t: &Triple,
    trials: usize,
    seed: u64,
    eval: impl Fn(&VElement) -> Result<LoopElement<Triple>>,
) -> Result<Vec<usize>> {
    let mut failures = Vec::new();
    for i in 0..trials {
        let mut rng = crate::sampling::rng_for_case(seed, i as u64);
        let v = crate::sampling::random_velement(&mut rng, 8);
        let w = crate::sampling::random_velement(&mut rng, 8);
        let lhs = eval(&v.compose(&w))?;
        let rhs = eval(&v)?.mul(t, &jones_act(t, &v, &eval(&w)?)?);
        if lhs != rhs {
            failures.push(i);
        }
    }
    Ok(failures)
}

// ---------------------------------------------------------------------------
// Elementary automorphisms of untwisted fraction groups.

#[derive(Clone, Debug)]
pub enum ElementaryAut {
    /// `A_(phi, beta)(a v) = beta-bar(a)^phi . ad_phi(v)`.
    Spatial {
        phi: NormalizerElement,
        beta: GroupMap,
    },
    /// `ad(f)` for a normaliser map.
    Adjoint(NormalizerMap),
    /// `F_zeta(a v) = zeta^(ell_v) a v` for a central element.
    SlopeTwist { zeta: usize },
}

impl ElementaryAut {
    fn require_untwisted(t: &Triple) -> Result<()> {
        if !t.is_untwisted() {
            return Err(Error::Unsupported(
                "elementary automorphisms are defined on untwisted triples".into(),
            ));
        }
        Ok(())
    }

    pub fn apply(
        &self,
        t: &Triple,
        x: &FractionElement<Triple>,
    ) -> Result<FractionElement<Triple>> {
        Self::require_untwisted(t)?;
        match self {
            ElementaryAut::Spatial { phi, beta } => {
                if !beta.is_bijective() {
                    return Err(Error::NotAutomorphism);
                }
                let a =
                    x.a.map_values::<Triple>(|g| beta.apply(*g))
                        .pushforward(phi);
                Ok(FractionElement::new(a, phi.conjugate(&x.v)))
            }
            ElementaryAut::Adjoint(f) => f.apply_ad(t, x),
            ElementaryAut::SlopeTwist { zeta } => {
                NormalizerMap::require_central(t, *zeta)?;
                let twist = elem_pow_loop(t, zeta, &ell_loop(&x.v));
                Ok(FractionElement::new(twist.mul(t, &x.a), x.v.clone()))
            }
        }
    }

    pub fn inverse(&self, t: &Triple) -> Result<ElementaryAut> {
        Ok(match self {
            ElementaryAut::Spatial { phi, beta } => ElementaryAut::Spatial {
                phi: phi.inverse(),
                beta: beta.inverse()?,
            },
            ElementaryAut::Adjoint(f) => ElementaryAut::Adjoint(f.inverse(t)),
            ElementaryAut::SlopeTwist { zeta } => ElementaryAut::SlopeTwist {
                zeta: t.group.inv(*zeta),
            },
        })
    }
}

/// The parameter quadruple of the decomposition map: applied as
/// `F_zeta o ad(f) o A_(phi, beta)`.
#[derive(Clone, Debug)]
pub struct Quadruple {
    pub zeta: usize,
    pub f: NormalizerMap,
    pub phi: NormalizerElement,
    pub beta: GroupMap,
}

impl Quadruple {
    pub fn identity(t: &Triple) -> Self {
        Quadruple {
            zeta: 0,
            f: NormalizerMap::constant(0),
            phi: NormalizerElement::identity(),
            beta: GroupMap::identity(&t.group),
        }
    }

    /// The kernel quadruple `(e, g-bar, id, ad(g^-1))`.
    pub fn kernel(t: &Triple, g: usize) -> Self {
        Quadruple {
            zeta: 0,
            f: NormalizerMap::constant(g),
            phi: NormalizerElement::identity(),
            beta: t.group.ad(t.group.inv(g)),
        }
    }

    pub fn apply(
        &self,
        t: &Triple,
        x: &FractionElement<Triple>,
    ) -> Result<FractionElement<Triple>> {
        let spatial = ElementaryAut::Spatial {
            phi: self.phi.clone(),
            beta: self.beta.clone(),
        };
        let adjoint = ElementaryAut::Adjoint(self.f.clone());
        let twist = ElementaryAut::SlopeTwist { zeta: self.zeta };
        twist.apply(t, &adjoint.apply(t, &spatial.apply(t, x)?)?)
    }
}

/// Verifies that the kernel quadruple of `g` acts trivially on randomly
/// sampled elements.
pub fn xi_kernel_check(t: &Triple, g: usize, trials: usize, seed: u64) -> Result<bool> {
    let q = Quadruple::kernel(t, g);
    for i in 0..trials {
        let mut rng = crate::sampling::rng_for_case(seed, i as u64);
        let x = crate::sampling::random_fraction(&mut rng, t, 5);
        if q.apply(t, &x)? != x {
            return Ok(false);
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// JSON form of quadruples:
// {"zeta": k, "f": {...}, "phi": "~table", "beta": [..]} with the
// normaliser map spec one of
// {"type":"loop","cells":"w:g; ..."} | {"type":"digitsum","zeta":k} |
// {"type":"zetagamma","zeta":k,"phi":"~table"}.

#[derive(serde::Serialize, serde::Deserialize)]
struct NormalizerMapFile {
    #[serde(rename = "type")]
    kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    cells: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    zeta: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    phi: Option<String>,
}

#[derive(serde::Serialize, serde::Deserialize)]
struct QuadrupleFile {
    zeta: usize,
    f: NormalizerMapFile,
    phi: String,
    beta: Vec<usize>,
}

impl NormalizerMap {
    fn from_file_spec(spec: &NormalizerMapFile, t: &Triple) -> Result<Self> {
        match spec.kind.as_str() {
            "loop" => {
                let cells = spec
                    .cells
                    .as_deref()
                    .ok_or_else(|| Error::Parse("loop map needs \"cells\"".into()))?;
                Ok(NormalizerMap::Loop(LoopElement::parse(cells, t)?))
            }
            "digitsum" => Ok(NormalizerMap::DigitSumPow {
                zeta: spec
                    .zeta
                    .ok_or_else(|| Error::Parse("digitsum map needs \"zeta\"".into()))?,
            }),
            "zetagamma" => Ok(NormalizerMap::ZetaGamma {
                zeta: spec
                    .zeta
                    .ok_or_else(|| Error::Parse("zetagamma map needs \"zeta\"".into()))?,
                phi: spec
                    .phi
                    .as_deref()
                    .ok_or_else(|| Error::Parse("zetagamma map needs \"phi\"".into()))?
                    .parse()?,
            }),
            other => Err(Error::Parse(format!(
                "unknown normaliser map type {other:?}"
            ))),
        }
    }

    fn to_file_spec(&self) -> NormalizerMapFile {
        match self {
            NormalizerMap::Loop(a) => NormalizerMapFile {
                kind: "loop".into(),
                cells: Some(a.display()),
                zeta: None,
                phi: None,
            },
            NormalizerMap::DigitSumPow { zeta } => NormalizerMapFile {
                kind: "digitsum".into(),
                cells: None,
                zeta: Some(*zeta),
                phi: None,
            },
            NormalizerMap::ZetaGamma { zeta, phi } => NormalizerMapFile {
                kind: "zetagamma".into(),
                cells: None,
                zeta: Some(*zeta),
                phi: Some(phi.to_string()),
            },
        }
    }
}

impl Quadruple {
    pub fn from_json(json: &str, t: &Triple) -> Result<Self> {
        let file: QuadrupleFile = serde_json::from_str(json)?;
        if file.zeta >= t.group.order() {
            return Err(Error::Parse("zeta index out of range".into()));
        }
        let beta = GroupMap::endo(&t.group, file.beta)?;
        if !beta.is_bijective() {
            return Err(Error::NotAutomorphism);
        }
        Ok(Quadruple {
            zeta: file.zeta,
            f: NormalizerMap::from_file_spec(&file.f, t)?,
            phi: file.phi.parse()?,
            beta,
        })
    }

    pub fn to_json(&self) -> String {
        let file = QuadrupleFile {
            zeta: self.zeta,
            f: self.f.to_file_spec(),
            phi: self.phi.to_string(),
            beta: self.beta.image().to_vec(),
        };
        serde_json::to_string_pretty(&file).expect("quadruple serialises")
    }
}

// ---------------------------------------------------------------------------
// The Z[1/2] x Z[1/2] morphism into the center and its non-spatial
// automorphism.

/// `zeta(a) = sum over cells of Leb(I) * r` for a loop over the dyadic pair
/// group; V-invariant and multiplicative, vanishing on V.
pub fn zeta_morphism_loop(a: &LoopElement<DyadicPairTriple>) -> Dyadic {
    a.cells().iter().fold(Dyadic::ZERO, |acc, (w, g)| {
        acc + Dyadic::unit(w.len() as u32) * g.r
    })
}

/// The extension to the fraction group, ignoring the V part.
pub fn zeta_morphism(x: &FractionElement<DyadicPairTriple>) -> Dyadic {
    zeta_morphism_loop(&x.a)
}

/// The non-spatial automorphism `g -> g . zeta(g)`, embedding `Z[1/2]` as
/// the constant maps `(t, 0)`.
pub fn nonspatial_apply(
    ctx: &DyadicPairTriple,
    x: &FractionElement<DyadicPairTriple>,
) -> FractionElement<DyadicPairTriple> {
    let z = zeta_morphism(x);
    let c = LoopElement::constant(crate::coeff::PairElem::new(z, Dyadic::ZERO));
    FractionElement::new(x.a.mul(ctx, &c), x.v.clone())
}

/// The inverse `g -> g . zeta(g)^-1`.
pub fn nonspatial_unapply(
    ctx: &DyadicPairTriple,
    x: &FractionElement<DyadicPairTriple>,
) -> FractionElement<DyadicPairTriple> {
    let z = zeta_morphism(x);
    let c = LoopElement::constant(crate::coeff::PairElem::new(-z, Dyadic::ZERO));
    FractionElement::new(x.a.mul(ctx, &c), x.v.clone())
}

//! Constructive isomorphisms between fraction groups and the decision
//! procedures for the classification results on finite coefficient groups.
//!
//! A witness `(beta, sigma, h0, h1)` with
//! `alpha~_(sigma(i)) = ad(h_i) o beta alpha_i beta^-1` yields an explicit
//! isomorphism assembled from the diagonal map, the twisting cocycle and the
//! bit-flip map. The searches below are exhaustive over the finite data and
//! report three-valued verdicts: a missing witness is never claimed to prove
//! non-isomorphism beyond what the necessary conditions license.

use crate::automorphisms::Cocycle;
use crate::coeff::{isomorphisms, out_class, GroupMap, Triple};
use crate::error::{Error, Result};
use crate::fraction::FractionElement;
use crate::thompson::NormalizerElement;

/// Witness data for the sufficient isomorphism condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoWitness {
    /// Isomorphism of coefficient groups.
    pub beta: GroupMap,
    /// Whether the two structure letters are exchanged.
    pub swap: bool,
    /// Twisting elements of the target group.
    pub h0: usize,
    pub h1: usize,
}

impl IsoWitness {
    pub fn identity(t: &Triple) -> Self {
        IsoWitness {
            beta: GroupMap::identity(&t.group),
            swap: false,
            h0: 0,
            h1: 0,
        }
    }

    /// Verifies the defining condition exactly.
    pub fn validate(&self, src: &Triple, tgt: &Triple) -> Result<()> {
        if !src.autos() || !tgt.autos() {
            return Err(Error::NotAutomorphism);
        }
        let beta_inv = self.beta.inverse()?;
        for (i, h) in [(false, self.h0), (true, self.h1)] {
            let sigma_i = i ^ self.swap;
            let lhs = tgt.endo(sigma_i);
            let rhs = tgt
                .group
                .ad(h)
                .compose(&self.beta.compose(&src.endo(i).compose(&beta_inv)));
            if *lhs != rhs {
                return Err(Error::NotHomomorphism(format!(
                    "witness condition fails at letter {}",
                    i as u8
                )));
            }
        }
        Ok(())
    }
}

/// The isomorphism of fraction groups assembled from a verified witness:
/// the diagonal map, then the inverse twisting map, then (when the letters
/// are exchanged) the bit-flip map.
pub struct IsoMap {
    src: Triple,
    tgt: Triple,
    /// Intermediate triple carrying `beta alpha_i beta^-1`.
    gamma: Triple,
    witness: IsoWitness,
    beta_inv: GroupMap,
}

impl IsoMap {
    pub fn witness(&self) -> &IsoWitness {
        &self.witness
    }

    /// The spatial part of the assembled map.
    pub fn spatial_part(&self) -> NormalizerElement {
        if self.witness.swap {
            NormalizerElement::flip()
        } else {
            NormalizerElement::identity()
        }
    }

    fn twist_cocycle(&self) -> Cocycle {
        Cocycle::HTwist {
            h0: self.witness.h0,
            h1: self.witness.h1,
        }
    }

    pub fn apply(&self, x: &FractionElement<Triple>) -> Result<FractionElement<Triple>> {
        let beta = &self.witness.beta;
        // diagonal map into the conjugated triple
        let a = x.a.map_values::<Triple>(|g| beta.apply(*g));
        // inverse twisting map into the ad(h)-twisted triple
        let c = self.twist_cocycle().eval(&self.gamma, &x.v)?;
        let a = a.mul(&self.gamma, &c.inv(&self.gamma));
        // optional flip into the target letter order
        if self.witness.swap {
            Ok(FractionElement::new(
                a.pushforward(&NormalizerElement::flip()),
                NormalizerElement::flip().conjugate(&x.v),
            ))
        } else {
            Ok(FractionElement::new(a, x.v.clone()))
        }
    }

    pub fn apply_inverse(&self, y: &FractionElement<Triple>) -> Result<FractionElement<Triple>> {
        let (a, v) = if self.witness.swap {
            (
                y.a.pushforward(&NormalizerElement::flip()),
                NormalizerElement::flip().conjugate(&y.v),
            )
        } else {
            (y.a.clone(), y.v.clone())
        };
        let c = self.twist_cocycle().eval(&self.gamma, &v)?;
        let a = a.mul(&self.gamma, &c);
        Ok(FractionElement::new(
            a.map_values::<Triple>(|g| self.beta_inv.apply(*g)),
            v,
        ))
    }

    pub fn src(&self) -> &Triple {
        &self.src
    }

    pub fn tgt(&self) -> &Triple {
        &self.tgt
    }
}

/// Builds the element map from a witness, verifying the condition first.
pub fn build_iso(src: &Triple, tgt: &Triple, witness: IsoWitness) -> Result<IsoMap> {
    witness.validate(src, tgt)?;
    let beta_inv = witness.beta.inverse()?;
    let conj = |m: &GroupMap| witness.beta.compose(&m.compose(&beta_inv));
    let gamma = Triple::new(tgt.group.clone(), conj(&src.a0), conj(&src.a1))?;
    Ok(IsoMap {
        src: src.clone(),
        tgt: tgt.clone(),
        gamma,
        witness,
        beta_inv,
    })
}

/// Exhaustive search for a witness; `None` means the sufficient condition
/// has no witness, not that the groups are non-isomorphic.
pub fn prop24_search(src: &Triple, tgt: &Triple, bound: usize) -> Result<Option<IsoWitness>> {
    if !src.autos() || !tgt.autos() {
        return Err(Error::NotAutomorphism);
    }
    let isos = isomorphisms(&src.group, &tgt.group, bound)?;
    let n = tgt.group.order();
    for beta in &isos {
        let beta_inv = beta.inverse()?;
        for swap in [false, true] {
            for h0 in 0..n {
                for h1 in 0..n {
                    let witness = IsoWitness {
                        beta: beta.clone(),
                        swap,
                        h0,
                        h1,
                    };
                    let ok = [(false, h0), (true, h1)].iter().all(|&(i, h)| {
                        let sigma_i = i ^ swap;
                        *tgt.endo(sigma_i)
                            == tgt
                                .group
                                .ad(h)
                                .compose(&beta.compose(&src.endo(i).compose(&beta_inv)))
                    });
                    if ok {
                        return Ok(Some(witness));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Three-valued classification verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Isomorphic,
    NotIsomorphic,
    Inconclusive,
}

/// The inner-automorphism criterion: decisive whenever the coefficient
/// groups differ, or one side has both structure automorphisms inner.
pub fn cor28_decide(t1: &Triple, t2: &Triple, bound: usize) -> Result<Verdict> {
    if !t1.autos() || !t2.autos() {
        return Err(Error::NotAutomorphism);
    }
    let isos = isomorphisms(&t1.group, &t2.group, bound)?;
    if isos.is_empty() {
        return Ok(Verdict::NotIsomorphic);
    }
    let inner = |t: &Triple| t.a0.is_inner(&t.group) && t.a1.is_inner(&t.group);
    let (i1, i2) = (inner(t1), inner(t2));
    if i2 {
        return Ok(if i1 {
            Verdict::Isomorphic
        } else {
            Verdict::NotIsomorphic
        });
    }
    if i1 {
        // symmetric application of the criterion
        return Ok(Verdict::NotIsomorphic);
    }
    Ok(Verdict::Inconclusive)
}

/// Outcome of the co-context-free necessary condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CocfOutcome {
    /// Some isomorphism matches the generated subgroups in the outer
    /// automorphism group.
    Holds,
    /// No isomorphism does; the fraction groups are not isomorphic.
    Fails(String),
}

/// Cyclic subgroup of the outer automorphism classes generated by a map.
fn out_subgroup(t: &Triple, a: &GroupMap) -> Vec<Vec<usize>> {
    let mut tokens = vec![out_class(&t.group, &GroupMap::identity(&t.group))];
    let mut power = a.clone();
    loop {
        let tok = out_class(&t.group, &power);
        if tokens.contains(&tok) {
            break;
        }
        tokens.push(tok);
        power = power.compose(a);
    }
    tokens.sort();
    tokens
}

/// Checks the necessary condition for isomorphism of the groups built from
/// `(Gamma, id, alpha_1)` data: some coefficient isomorphism must identify
/// the subgroups generated by the twisting automorphisms inside the outer
/// automorphism groups.
pub fn cocf_check(t1: &Triple, t2: &Triple, bound: usize) -> Result<CocfOutcome> {
    for t in [t1, t2] {
        if !t.a0.is_identity() {
            return Err(Error::Unsupported(
                "the co-context-free family requires alpha_0 = id".into(),
            ));
        }
        if !t.a1.is_bijective() {
            return Err(Error::NotAutomorphism);
        }
    }
    let isos = isomorphisms(&t1.group, &t2.group, bound)?;
    if isos.is_empty() {
        return Ok(CocfOutcome::Fails(
            "coefficient groups are not isomorphic".into(),
        ));
    }
    let target = out_subgroup(t2, &t2.a1);
    for beta in &isos {
        let beta_inv = beta.inverse()?;
        let conj = beta.compose(&t1.a1.compose(&beta_inv));
        if out_subgroup(t2, &conj) == target {
            return Ok(CocfOutcome::Holds);
        }
    }
    let got = {
        let beta = &isos[0];
        let beta_inv = beta.inverse()?;
        out_subgroup(t2, &beta.compose(&t1.a1.compose(&beta_inv))).len()
    };
    Ok(CocfOutcome::Fails(format!(
        "outer subgroup orders differ: {} vs {}",
        got,
        target.len()
    )))
}

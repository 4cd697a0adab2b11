//! The verification suites behind the acceptance criteria and the `check`
//! subcommand. Every suite is deterministic given its seed (per-case seeds
//! split by a fixed rule) and reports exact failures; there are no
//! tolerances anywhere.

use crate::automorphisms::{
    gamma_phi_via, k_phi, v_sending_zero_to, Cocycle, ElementaryAut, NormalizerMap, Quadruple,
};
use crate::cantor::{SdiUnion, Sdp, Word};
use crate::classification::{build_iso, prop24_search};
use crate::coeff::{fixture, DyadicPairTriple, GroupMap, Triple};
use crate::error::{Error, Result};
use crate::fraction::{cocf_exponent, FractionElement};
use crate::loop_group::{jones_act, tau, LoopElement};
use crate::sampling::{
    random_dyadic_point, random_fraction, random_loop, random_pair_loop, random_velement,
    random_wreath, rng_for_case,
};
use crate::thompson::{fix_generators, make_contraction, NormalizerElement, VElement};
use crate::Sdi;
use rand::Rng;

/// Result of one suite run.
#[derive(Clone, Debug, Default)]
pub struct SuiteOutcome {
    pub cases: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn case(&mut self, index: usize, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(format!("case {index}: {}", describe()));
        }
    }

    pub fn merge(&mut self, other: SuiteOutcome) {
        self.cases += other.cases;
        self.failures.extend(other.failures);
        self.notes.extend(other.notes);
    }
}

/// The standard fixture set used when no triple is supplied.
pub fn standard_fixtures() -> Vec<(String, Triple)> {
    ["z2", "z3inv", "z4inv", "s3"]
        .iter()
        .map(|n| (n.to_string(), fixture(n).unwrap()))
        .collect()
}

// ---------------------------------------------------------------------------
// Group axioms.

pub fn group_axioms(t: &Triple, seed: u64, iters: usize) -> Result<SuiteOutcome> {
    let mut out = SuiteOutcome::default();
    for i in 0..iters {
        let mut rng = rng_for_case(seed, i as u64);
        // V: associativity and inverses on reduced tables
        let v = random_velement(&mut rng, 8);
        let w = random_velement(&mut rng, 8);
        let u = random_velement(&mut rng, 8);
        let assoc_v = v.compose(&w).compose(&u) == v.compose(&w.compose(&u));
        let inv_v = v.compose(&v.inverse()).is_identity();
        // loops
        let a = random_loop(&mut rng, t, 6);
        let b = random_loop(&mut rng, t, 6);
        let c = random_loop(&mut rng, t, 6);
        let assoc_l = a.mul(t, &b).mul(t, &c) == a.mul(t, &b.mul(t, &c));
        let inv_l = a.mul(t, &a.inv(t)).is_identity(t);
        // fraction elements
        let x = random_fraction(&mut rng, t, 5);
        let y = random_fraction(&mut rng, t, 5);
        let z = random_fraction(&mut rng, t, 5);
        let assoc_g = x.mul(t, &y)?.mul(t, &z)? == x.mul(t, &y.mul(t, &z)?)?;
        let inv_g = x.mul(t, &x.inv(t)?)?.is_identity(t);
        out.case(
            i,
            assoc_v && inv_v && assoc_l && inv_l && assoc_g && inv_g,
            || {
                format!(
                "axioms failed (v:{assoc_v},{inv_v} loop:{assoc_l},{inv_l} g:{assoc_g},{inv_g}) \
                 at v={v} w={w} u={u}"
            )
            },
        );
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Jones action laws and tau laws.

pub fn action_laws(t: &Triple, seed: u64, iters: usize) -> Result<SuiteOutcome> {
    let mut out = SuiteOutcome::default();
    for i in 0..iters {
        let mut rng = rng_for_case(seed, i as u64);
        let v = random_velement(&mut rng, 7);
        let w = random_velement(&mut rng, 7);
        let a = random_loop(&mut rng, t, 5);
        let b = random_loop(&mut rng, t, 5);
        let compat = jones_act(t, &v.compose(&w), &a)? == jones_act(t, &v, &jones_act(t, &w, &a)?)?;
        let id_triv = jones_act(t, &VElement::identity(), &a)? == a;
        let hom = jones_act(t, &v, &a.mul(t, &b))?
            == jones_act(t, &v, &a)?.mul(t, &jones_act(t, &v, &b)?);
        let support_eq = jones_act(t, &v, &a)?.support(t) == v.image_of_union(&a.support(t));
        out.case(i, compat && id_triv && hom && support_eq, || {
            format!(
                "action laws failed (compose:{compat} id:{id_triv} hom:{hom} \
                 support:{support_eq}) at v={v} w={w}"
            )
        });
    }
    Ok(out)
}

pub fn tau_laws(t: &Triple, seed: u64, iters: usize) -> Result<SuiteOutcome> {
    let mut out = SuiteOutcome::default();
    for i in 0..iters {
        let mut rng = rng_for_case(seed, i as u64);
        let v = random_velement(&mut rng, 7);
        let w = random_velement(&mut rng, 7);
        let x = crate::sampling::random_cpoint(&mut rng, 3, 3);
        // composition law
        let lhs = tau(t, &v.compose(&w), &x)?;
        let rhs = tau(t, &v, &w.apply(&x))?.compose(&tau(t, &w, &x)?);
        // refinement independence: recompute through a deeper adapted cell
        let (d, c) = v.cell_at(&x);
        let ext = x.expand(d.len() + 2).strip_prefix(d).unwrap();
        let deep = t
            .alpha_word(&c.concat(&ext))
            .inverse()?
            .compose(&t.alpha_word(&d.concat(&ext)));
        let shallow = tau(t, &v, &x)?;
        out.case(i, lhs == rhs && deep == shallow, || {
            format!(
                "tau laws failed (composition:{} refinement:{}) at v={v} w={w} x={x}",
                lhs == rhs,
                deep == shallow
            )
        });
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Centralizers (exhaustive at depth 3) and the center.

/// All loop elements constant on the uniform depth-`d` partition. The
/// candidate count is `|G|^(2^d)`, so the exhaustive suites only accept
/// small groups.
fn enumerate_loops(t: &Triple, depth: usize) -> Result<Vec<LoopElement<Triple>>> {
    let part = Sdp::uniform(depth);
    let n = t.group.order();
    let cells = part.len();
    let total = n
        .checked_pow(cells as u32)
        .filter(|&total| total <= 1 << 20)
        .ok_or_else(|| Error::BoundExceeded { order: n, bound: 6 })?;
    let mut out = Vec::with_capacity(total);
    for code in 0..total {
        let mut c = code;
        let cells_vec: Vec<(Word, usize)> = part
            .cells()
            .iter()
            .map(|w| {
                let g = c % n;
                c /= n;
                (w.clone(), g)
            })
            .collect();
        out.push(LoopElement::new(cells_vec).expect("uniform partition"));
    }
    Ok(out)
}

/// `pi_v(a) = a` for all listed elements.
fn commutes_with_all(t: &Triple, a: &LoopElement<Triple>, gens: &[VElement]) -> Result<bool> {
    for v in gens {
        if jones_act(t, v, a)? != *a {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exhaustive verification of the centralizer description at depth 3 for
/// `I = {0}`: commuting with the pointwise-fixing family forces arbitrary
/// values on `I` and one alpha-fixed constant on the complement; commuting
/// with the stabilizer family forces alpha-fixed constants on both halves.
pub fn centralizer_suite(t: &Triple, depth: usize) -> Result<SuiteOutcome> {
    let mut out = SuiteOutcome::default();
    let left: SdiUnion = SdiUnion::from_cells(vec!["0".parse()?]);
    let right = left.complement();
    let fix_left = fix_generators(&left, depth)?;
    let fix_right = fix_generators(&right, depth)?;
    let stab: Vec<VElement> = fix_left.iter().chain(fix_right.iter()).cloned().collect();
    let fixed = t.alpha_fixed();
    let loops = enumerate_loops(t, depth)?;
    let uniform = Sdp::uniform(depth);
    let on_half = |a: &LoopElement<Triple>, letter: bool| -> Vec<usize> {
        uniform
            .cells()
            .iter()
            .filter(|w| w.letters()[0] == letter)
            .map(|w| *a.value_on(w))
            .collect()
    };
    let constant_fixed = |vals: &[usize]| -> bool {
        vals.windows(2).all(|p| p[0] == p[1]) && fixed.contains(&vals[0])
    };
    for (i, a) in loops.iter().enumerate() {
        // Fix_V(I) commutant = L_I(Gamma) . D_(I^c)(Gamma^alpha)
        let lhs_fix = commutes_with_all(t, a, &fix_left)?;
        let rhs_fix = constant_fixed(&on_half(a, true));
        // Stab_V(I) commutant = D_I(Gamma^alpha) . D_(I^c)(Gamma^alpha)
        let lhs_stab = commutes_with_all(t, a, &stab)?;
        let rhs_stab = constant_fixed(&on_half(a, true)) && constant_fixed(&on_half(a, false));
        out.case(i, lhs_fix == rhs_fix && lhs_stab == rhs_stab, || {
            format!(
                "centralizer mismatch at loop {} (fix {lhs_fix}/{rhs_fix}, \
                 stab {lhs_stab}/{rhs_stab})",
                a.display()
            )
        });
    }
    out.notes.push(format!(
        "enumerated {} depth-{depth} loops over a group of order {}",
        loops.len(),
        t.group.order()
    ));
    Ok(out)
}

/// Exhaustive verification of the center at depth 3: commuting with the
/// V-generator family and all constants picks out exactly the constant
/// central alpha-fixed maps.
pub fn center_suite(t: &Triple, depth: usize) -> Result<SuiteOutcome> {
    let mut out = SuiteOutcome::default();
    let vgens = fix_generators(&SdiUnion::empty(), depth)?;
    let central_fixed = t.central_alpha_fixed();
    let loops = enumerate_loops(t, depth)?;
    let mut computed = 0usize;
    for (i, a) in loops.iter().enumerate() {
        let with_v = commutes_with_all(t, a, &vgens)?;
        let with_constants = t.group.elements().all(|g| {
            a.cells()
                .iter()
                .all(|(_, x)| t.group.mul(*x, g) == t.group.mul(g, *x))
        });
        let lhs = with_v && with_constants;
        let rhs = a.cells().len() == 1 && central_fixed.contains(&a.cells()[0].1);
        if lhs {
            computed += 1;
        }
        out.case(i, lhs == rhs, || {
            format!("center mismatch at loop {}", a.display())
        });
    }
    let expected = crate::fraction::center_elements(t)?.len();
    out.cases += 1;
    if computed != expected {
        out.failures.push(format!(
            "center size {computed} differs from enumerated {expected}"
        ));
    }
    out.notes.push(format!("|Z(G)| = {computed}"));
    Ok(out)
}

/// Commutator realization: for every alpha-fixed `g` and proper sdi `I` of
/// depth at most 2, a constructed `[v, g_J]` equals `g_I` exactly.
pub fn derived_commutators(t: &Triple) -> Result<SuiteOutcome> {
    let mut out = SuiteOutcome::default();
    let mut cells: Vec<Word> = Vec::new();
    for d in 1..=2 {
        cells.extend(Word::empty().extensions_to(d));
    }
    let mut idx = 0;
    for g in t.alpha_fixed() {
        if g == 0 {
            continue;
        }
        for i_cell in &cells {
            let i_union = SdiUnion::from_cells(vec![i_cell.clone()]);
            // a disjoint cell J with I union J still proper
            let comp = i_union.complement();
            let j_cell = comp.cells()[0].child(false);
            let v = crate::thompson::v_from_partial(vec![
                (j_cell.child(false), i_cell.clone()),
                (j_cell.child(true), j_cell.clone()),
            ])?;
            let j_union = SdiUnion::from_cells(vec![j_cell.clone()]);
            let g_j = FractionElement::from_loop(LoopElement::indicator(t, &j_union, g));
            let g_i = FractionElement::from_loop(LoopElement::indicator(t, &i_union, g));
            let v_el = FractionElement::from_v(t, v);
            let commutator = v_el
                .mul(t, &g_j)?
                .mul(t, &v_el.inv(t)?)?
                .mul(t, &g_j.inv(t)?)?;
            out.case(idx, commutator == g_i, || {
                format!("[v, g_J] != g_I for g={g}, I={i_cell}, J={j_cell}")
            });
            idx += 1;
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Cocycle suites.

pub fn cocycle_suite(t: &Triple, seed: u64, iters: usize) -> Result<SuiteOutcome> {
    let mut out = SuiteOutcome::default();
    // slope cocycles for every admissible element
    for zeta in t.central_alpha_fixed() {
        if zeta == 0 {
            continue;
        }
        let failures = Cocycle::Slope { zeta }.check(t, iters, seed)?;
        out.cases += iters;
        out.failures.extend(
            failures
                .iter()
                .map(|i| format!("slope cocycle zeta={zeta} case {i}")),
        );
    }
    // twisting cocycles for a few deterministic pairs
    let n = t.group.order();
    let pairs = [(1 % n, (n - 1) % n), ((n - 1) % n, 1 % n), (1 % n, 1 % n)];
    for (h0, h1) in pairs {
        let failures = Cocycle::HTwist { h0, h1 }.check(t, iters, seed ^ 0x5a5a)?;
        out.cases += iters;
        out.failures.extend(
            failures
                .iter()
                .map(|i| format!("htwist cocycle ({h0},{h1}) case {i}")),
        );
        // the twisting map theta(a v) = a c_v v from the ad(h)-twisted triple
        let twisted = Triple::new(
            t.group.clone(),
            t.group.ad(h0).compose(&t.a0),
            t.group.ad(h1).compose(&t.a1),
        )?;
        let c = Cocycle::HTwist { h0, h1 };
        for i in 0..iters {
            let mut rng = rng_for_case(seed ^ 0xa5a5, i as u64);
            let x = random_fraction(&mut rng, &twisted, 5);
            let y = random_fraction(&mut rng, &twisted, 5);
            let theta = |z: &FractionElement<Triple>| -> Result<FractionElement<Triple>> {
                Ok(FractionElement::new(
                    z.a.mul(t, &c.eval(t, &z.v)?),
                    z.v.clone(),
                ))
            };
            let theta_inv = |z: &FractionElement<Triple>| -> Result<FractionElement<Triple>> {
                Ok(FractionElement::new(
                    z.a.mul(t, &c.eval(t, &z.v)?.inv(t)),
                    z.v.clone(),
                ))
            };
            let hom = theta(&x.mul(&twisted, &y)?)? == theta(&x)?.mul(t, &theta(&y)?)?;
            let round = theta_inv(&theta(&x)?)? == x;
            out.case(i, hom && round, || {
                format!("twisting map failed (hom:{hom} round:{round}) for pair ({h0},{h1})")
            });
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Automorphism relation suites.

/// The flip, five random elements of V, and one mixed flip-composite.
fn sample_phis(seed: u64) -> Vec<NormalizerElement> {
    let mut rng = rng_for_case(seed, 0xffff);
    let mut phis = vec![NormalizerElement::flip()];
    for _ in 0..5 {
        phis.push(NormalizerElement::from_v(random_velement(&mut rng, 7)));
    }
    phis.push(NormalizerElement::new(true, random_velement(&mut rng, 6)));
    phis
}

pub fn theorem33_suite(t: &Triple, seed: u64, iters: usize) -> Result<SuiteOutcome> {
    if !t.is_untwisted() {
        return Err(Error::Unsupported(
            "the automorphism relations are untwisted-only".into(),
        ));
    }
    let mut out = SuiteOutcome::default();
    let phis = sample_phis(seed);
    let betas = {
        let mut b = vec![GroupMap::identity(&t.group)];
        b.push(t.group.ad(1 % t.group.order()));
        b
    };
    let centrals = t.group.center();
    let per_block = (iters / 4).max(1);
    let mut case = 0usize;

    // conjugating an adjoint by a spatial pair transports the map
    for phi in &phis {
        for beta in &betas {
            let spatial = ElementaryAut::Spatial {
                phi: phi.clone(),
                beta: beta.clone(),
            };
            let spatial_inv = spatial.inverse(t)?;
            for i in 0..per_block {
                let mut rng = rng_for_case(seed, (case * 1000 + i) as u64);
                let f = NormalizerMap::Loop(random_loop(&mut rng, t, 5));
                let x = random_fraction(&mut rng, t, 5);
                let adjoint = ElementaryAut::Adjoint(f.clone());
                let lhs = spatial.apply(t, &adjoint.apply(t, &spatial_inv.apply(t, &x)?)?)?;
                let transported = ElementaryAut::Adjoint(f.transport(phi, beta)?);
                let rhs = transported.apply(t, &x)?;
                out.case(case * 10000 + i, lhs == rhs, || {
                    format!("adjoint transport relation failed at phi={phi}")
                });
            }
            case += 1;
        }
    }

    // A_beta F_zeta A_beta^-1 = F_beta(zeta)
    for beta in &betas {
        let spatial = ElementaryAut::Spatial {
            phi: NormalizerElement::identity(),
            beta: beta.clone(),
        };
        let spatial_inv = spatial.inverse(t)?;
        for &zeta in &centrals {
            for i in 0..per_block {
                let mut rng = rng_for_case(seed ^ 0x33, (case * 1000 + i) as u64);
                let x = random_fraction(&mut rng, t, 5);
                let f_zeta = ElementaryAut::SlopeTwist { zeta };
                let lhs = spatial.apply(t, &f_zeta.apply(t, &spatial_inv.apply(t, &x)?)?)?;
                let rhs = ElementaryAut::SlopeTwist {
                    zeta: beta.apply(zeta),
                }
                .apply(t, &x)?;
                out.case(case * 10000 + i, lhs == rhs, || {
                    format!("diagonal/slope-twist relation failed at zeta={zeta}")
                });
            }
            case += 1;
        }
    }

    // A_phi F_zeta A_phi^-1 = F_(zeta^k_phi) o ad(zeta^gamma_phi)
    for phi in &phis {
        let spatial = ElementaryAut::Spatial {
            phi: phi.clone(),
            beta: GroupMap::identity(&t.group),
        };
        let spatial_inv = spatial.inverse(t)?;
        for &zeta in &centrals {
            let k = k_phi(phi) as i64;
            let f_pow = ElementaryAut::SlopeTwist {
                zeta: t.group.pow(zeta, k),
            };
            let ad_gamma = ElementaryAut::Adjoint(NormalizerMap::ZetaGamma {
                zeta,
                phi: phi.clone(),
            });
            for i in 0..per_block {
                let mut rng = rng_for_case(seed ^ 0x77, (case * 1000 + i) as u64);
                let x = random_fraction(&mut rng, t, 5);
                let f_zeta = ElementaryAut::SlopeTwist { zeta };
                let lhs = spatial.apply(t, &f_zeta.apply(t, &spatial_inv.apply(t, &x)?)?)?;
                let rhs = f_pow.apply(t, &ad_gamma.apply(t, &x)?)?;
                out.case(case * 10000 + i, lhs == rhs, || {
                    format!("slope-twist conjugation failed at phi={phi}, zeta={zeta}")
                });
            }
            case += 1;
        }
    }

    // kernel quadruples act trivially
    for g in t.group.elements() {
        let q = Quadruple::kernel(t, g);
        for i in 0..per_block {
            let mut rng = rng_for_case(seed ^ 0x99, (case * 1000 + i) as u64);
            let x = random_fraction(&mut rng, t, 5);
            out.case(case * 10000 + i, q.apply(t, &x)? == x, || {
                format!("kernel quadruple for g={g} moved an element")
            });
        }
        case += 1;
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// gamma_phi laws.

pub fn gamma_phi_suite(seed: u64, iters: usize) -> Result<SuiteOutcome> {
    let mut out = SuiteOutcome::default();
    let phis = sample_phis(seed ^ 0x6a09);
    for (pi, phi) in phis.iter().enumerate() {
        for i in 0..iters {
            let mut rng = rng_for_case(seed, (pi * 100_000 + i) as u64);
            let x = random_dyadic_point(&mut rng, 4);
            // independence of the auxiliary element
            let v1 = v_sending_zero_to(&x)?;
            let v2 = crate::automorphisms::v_sending_zero_to_alt(&x)?;
            let contraction = make_contraction(&Sdi::new("0".parse()?), &"00".parse()?)?;
            let v3 = v1.compose(&contraction);
            let g1 = gamma_phi_via(phi, &v1);
            let g2 = gamma_phi_via(phi, &v2);
            let g3 = gamma_phi_via(phi, &v3);
            // difference law
            let v = random_velement(&mut rng, 7);
            let lhs = gamma_phi_via(phi, &v_sending_zero_to(&v.apply(&x))?) - g1;
            let w = phi.inverse().conjugate(&v);
            let rhs = w.slope_at(&phi.inverse().apply(&x)) - (k_phi(phi) as i64) * v.slope_at(&x);
            out.case(pi * 100_000 + i, g1 == g2 && g1 == g3 && lhs == rhs, || {
                format!(
                    "gamma_phi failed at phi={phi}, x={x} \
                     (independence {g1}={g2}={g3}, difference {lhs} vs {rhs})"
                )
            });
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Slope/prime-word identity at rational fixed points.

pub fn slope_prime_word_suite(seed: u64, iters: usize) -> Result<SuiteOutcome> {
    let mut out = SuiteOutcome::default();
    for i in 0..iters {
        let mut rng = rng_for_case(seed, i as u64);
        let x = crate::sampling::random_cpoint(&mut rng, 3, 3);
        let y = x.preperiod().clone();
        let c = x.period().clone();
        // fixing elements with nontrivial slope at x
        let j = Sdi::new(y.concat(&c));
        let k = rng.gen_range(1..=2usize);
        let mut target = y.concat(&c);
        for _ in 0..k {
            target = target.concat(&c);
        }
        let v0 = make_contraction(&j, &target)?;
        let v = if rng.gen() { v0.inverse() } else { v0 };
        let fixes = v.apply(&x) == x;
        let slope = v.slope_at(&x);
        let m_x = x.tail_class_word();
        let divisible = slope.rem_euclid(m_x.len() as i64) == 0 && slope != 0;
        // the identity under a flip-type normaliser
        let phi = if rng.gen() {
            NormalizerElement::flip()
        } else {
            NormalizerElement::new(true, random_velement(&mut rng, 6))
        };
        let fx = phi.apply(&x);
        let m_fx = fx.tail_class_word();
        let conj = phi.conjugate(&v);
        let identity_holds = (m_fx.len() as i64) * slope == (m_x.len() as i64) * conj.slope_at(&fx);
        out.case(i, fixes && divisible && identity_holds, || {
            format!(
                "slope identity failed at x={x}, v={v} \
                 (fixes:{fixes} divisible:{divisible} identity:{identity_holds})"
            )
        });
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Spatial support of constructed isomorphisms and automorphisms.

pub fn spatial_support_suite(seed: u64, iters: usize) -> Result<SuiteOutcome> {
    let mut out = SuiteOutcome::default();
    // constructed isomorphisms on the swap pair
    let t1 = fixture("z3inv")?;
    let t2 = {
        let g = crate::coeff::cyclic(3);
        Triple::new(
            g.clone(),
            crate::coeff::cyclic_inversion(3),
            GroupMap::identity(&g),
        )?
    };
    let witness = prop24_search(&t1, &t2, crate::coeff::DEFAULT_MAX_GROUP)?
        .ok_or_else(|| Error::Unsupported("swap witness must exist".into()))?;
    let iso = build_iso(&t1, &t2, witness)?;
    let phi_iso = iso.spatial_part();
    let half = iters / 2;
    for i in 0..half {
        let mut rng = rng_for_case(seed, i as u64);
        let a = random_loop(&mut rng, &t1, 6);
        let img = iso.apply(&FractionElement::from_loop(a.clone()))?;
        let ok =
            img.v.is_identity() && img.a.support(&t2) == phi_iso.image_of_union(&a.support(&t1));
        out.case(i, ok, || {
            format!("iso support not spatial at a={}", a.display())
        });
    }
    // elementary automorphisms with loop-valued adjoint part
    let t = fixture("s3")?;
    let phis = sample_phis(seed ^ 1);
    for i in 0..half {
        let mut rng = rng_for_case(seed ^ 2, i as u64);
        let phi = &phis[i % phis.len()];
        let beta = t.group.ad(rng.gen_range(0..t.group.order()));
        let f = NormalizerMap::Loop(random_loop(&mut rng, &t, 5));
        let a = random_loop(&mut rng, &t, 6);
        let x = FractionElement::from_loop(a.clone());
        let spatial = ElementaryAut::Spatial {
            phi: phi.clone(),
            beta,
        };
        let composite = ElementaryAut::Adjoint(f).apply(&t, &spatial.apply(&t, &x)?)?;
        // F_zeta is trivial on pure loops; zeta would be e for S3 anyway
        let ok = composite.v.is_identity()
            && composite.a.support(&t) == phi.image_of_union(&a.support(&t));
        out.case(half + i, ok, || {
            format!(
                "elementary support not spatial at phi={phi}, a={}",
                a.display()
            )
        });
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Wreath containments.

pub fn wreath_containment_suite(seed: u64, iters: usize) -> Result<SuiteOutcome> {
    let mut out = SuiteOutcome::default();
    // a single-automorphism triple for the wreath side
    let wreath_triple = {
        let g = crate::coeff::cyclic(3);
        Triple::new(
            g.clone(),
            crate::coeff::cyclic_inversion(3),
            crate::coeff::cyclic_inversion(3),
        )?
    };
    let loop_triple = fixture("z3inv")?;
    let half = iters / 2;
    for i in 0..half {
        let mut rng = rng_for_case(seed, i as u64);
        let a = random_wreath(&mut rng, &wreath_triple, 3);
        // an element fixing neighbourhoods of the support pointwise
        let mut cells = Vec::new();
        for x in a.support_points() {
            cells.push(x.expand(x.preperiod().len() + 2));
        }
        let hood = SdiUnion::from_cells(cells);
        let v = crate::sampling::random_v_supported_in(&mut rng, &hood.complement(), 4);
        let ok = crate::fraction::wreath_act(&wreath_triple, &v, &a)? == a;
        out.case(i, ok, || {
            format!("W_supp element does not commute with {a:?}")
        });
    }
    for i in 0..half {
        let mut rng = rng_for_case(seed ^ 0x17, i as u64);
        let b = random_loop(&mut rng, &loop_triple, 5);
        let supp = b.support(&loop_triple);
        // one commuting element by construction, one generic element
        let fixing = crate::sampling::random_v_supported_in(&mut rng, &supp.complement(), 4);
        let generic = random_velement(&mut rng, 7);
        let mut ok = true;
        let mut checked = 0;
        for v in [fixing, generic] {
            if jones_act(&loop_triple, &v, &b)? == b {
                checked += 1;
                if v.image_of_union(&supp) != supp {
                    ok = false;
                }
            }
        }
        out.case(half + i, ok && checked >= 1, || {
            format!(
                "commuting element does not stabilise support of {}",
                b.display()
            )
        });
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Co-context-free twist consistency.

pub fn cocf_suite(t: &Triple, seed: u64, iters: usize) -> Result<SuiteOutcome> {
    if !t.a0.is_identity() {
        return Err(Error::Unsupported(
            "the coCF description requires alpha_0 = id".into(),
        ));
    }
    let mut out = SuiteOutcome::default();
    for i in 0..iters {
        let mut rng = rng_for_case(seed, i as u64);
        let v = random_velement(&mut rng, 8);
        let x = crate::sampling::random_cpoint(&mut rng, 3, 3);
        let n = cocf_exponent(&v, &x);
        let mut expect = GroupMap::identity(&t.group);
        let step = if n >= 0 {
            t.a1.clone()
        } else {
            t.a1.inverse()?
        };
        for _ in 0..n.unsigned_abs() {
            expect = step.compose(&expect);
        }
        let ok = tau(t, &v, &x)? == expect;
        out.case(i, ok, || format!("tau != alpha_1^{n} at v={v}, x={x}"));
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// The Z[1/2]^2 example.

pub fn zeta_example_suite(seed: u64, iters: usize) -> Result<SuiteOutcome> {
    use crate::automorphisms::{nonspatial_apply, nonspatial_unapply, zeta_morphism};
    let ctx = DyadicPairTriple;
    let mut out = SuiteOutcome::default();
    for i in 0..iters {
        let mut rng = rng_for_case(seed, i as u64);
        let x = FractionElement::new(random_pair_loop(&mut rng, 5), random_velement(&mut rng, 6));
        let y = FractionElement::new(random_pair_loop(&mut rng, 5), random_velement(&mut rng, 6));
        let mult = zeta_morphism(&x.mul(&ctx, &y)?) == zeta_morphism(&x) + zeta_morphism(&y);
        let v = FractionElement::from_v(&ctx, random_velement(&mut rng, 6));
        let invariant = zeta_morphism(&x.conjugate(&ctx, &v)?) == zeta_morphism(&x);
        let round = nonspatial_unapply(&ctx, &nonspatial_apply(&ctx, &x)) == x;
        out.case(i, mult && invariant && round, || {
            format!("zeta example failed (mult:{mult} invariant:{invariant} round:{round})")
        });
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Registry.

pub const SUITE_NAMES: &[&str] = &[
    "group-axioms",
    "action-laws",
    "cocycle",
    "centralizer",
    "center",
    "theorem33",
    "gamma-phi",
    "spatial-support",
    "wreath-containment",
    "cocf",
    "zeta-example",
];

/// Runs a registered suite; `triple` overrides the per-suite default
/// fixtures when given.
pub fn run_suite(
    name: &str,
    triple: Option<&Triple>,
    seed: u64,
    iters: usize,
) -> Result<SuiteOutcome> {
    let with_fixtures =
        |f: &dyn Fn(&Triple) -> Result<SuiteOutcome>, defaults: &[&str]| -> Result<SuiteOutcome> {
            let mut out = SuiteOutcome::default();
            match triple {
                Some(t) => out.merge(f(t)?),
                None => {
                    for name in defaults {
                        out.merge(f(&fixture(name)?)?);
                    }
                }
            }
            Ok(out)
        };
    match name {
        "group-axioms" => with_fixtures(
            &|t| group_axioms(t, seed, iters),
            &["z2", "z3inv", "z4inv", "s3"],
        ),
        "action-laws" => {
            let mut out = with_fixtures(
                &|t| action_laws(t, seed, iters),
                &["z2", "z3inv", "z4inv", "s3"],
            )?;
            out.merge(with_fixtures(
                &|t| tau_laws(t, seed ^ 1, iters),
                &["z2", "z3inv", "z4inv", "s3"],
            )?);
            Ok(out)
        }
        "cocycle" => with_fixtures(
            &|t| cocycle_suite(t, seed, iters),
            &["z2", "z3inv", "z4inv", "s3"],
        ),
        "centralizer" => with_fixtures(&|t| centralizer_suite(t, 3), &["z2", "z4inv"]),
        "center" => with_fixtures(&|t| center_suite(t, 3), &["z2", "z4inv"]),
        "theorem33" => with_fixtures(&|t| theorem33_suite(t, seed, iters), &["s3", "z2"]),
        "gamma-phi" => gamma_phi_suite(seed, iters),
        "spatial-support" => spatial_support_suite(seed, iters),
        "wreath-containment" => wreath_containment_suite(seed, iters),
        "cocf" => with_fixtures(&|t| cocf_suite(t, seed, iters), &["z3inv"]),
        "zeta-example" => zeta_example_suite(seed, iters),
        other => Err(Error::Unsupported(format!("unknown suite {other:?}"))),
    }
}

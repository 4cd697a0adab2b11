//! Finite coefficient groups with endomorphism pairs, automorphism-group
//! machinery, word-indexed endomorphisms, the kernel-union reduction and the
//! twisting elements `h_q`, plus the built-in `Z[1/2] x Z[1/2]` fixture.
//!
//! Elements of a finite group are indices into its multiplication table;
//! index `0` is always the identity. Maps between groups are plain image
//! arrays, validated for multiplicativity on construction.

use crate::cantor::Word;
use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Default cap on group orders for the brute-force enumeration routines;
/// override with the `THOMPSON_MAX_GROUP` environment variable in the CLI.
pub const DEFAULT_MAX_GROUP: usize = 24;

/// A finite group given by its multiplication table.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<Vec<usize>>,
    inv: Vec<usize>,
    names: Option<Vec<String>>,
}

impl FiniteGroup {
    /// Validates the table: index 0 is a two-sided identity, the operation
    /// is associative and every element has a two-sided inverse.
    pub fn new(mul: Vec<Vec<usize>>, names: Option<Vec<String>>) -> Result<Self> {
        let order = mul.len();
        if order == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        for (i, row) in mul.iter().enumerate() {
            if row.len() != order {
                return Err(Error::InvalidGroup(format!("row {i} has wrong length")));
            }
            if row.iter().any(|&x| x >= order) {
                return Err(Error::InvalidGroup(format!(
                    "row {i} has an index out of range"
                )));
            }
        }
        for i in 0..order {
            if mul[0][i] != i || mul[i][0] != i {
                return Err(Error::InvalidGroup("index 0 is not the identity".into()));
            }
        }
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                        return Err(Error::InvalidGroup(format!(
                            "associativity fails at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        let mut inv = vec![usize::MAX; order];
        for a in 0..order {
            match (0..order).find(|&b| mul[a][b] == 0 && mul[b][a] == 0) {
                Some(b) => inv[a] = b,
                None => return Err(Error::InvalidGroup(format!("element {a} has no inverse"))),
            }
        }
        if let Some(ns) = &names {
            if ns.len() != order {
                return Err(Error::InvalidGroup("name list has wrong length".into()));
            }
        }
        Ok(FiniteGroup {
            order,
            mul,
            inv,
            names,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> {
        0..self.order
    }

    pub fn name(&self, a: usize) -> String {
        match &self.names {
            Some(ns) => ns[a].clone(),
            None => a.to_string(),
        }
    }

    pub fn pow(&self, a: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(a) } else { a };
        let mut out = 0;
        for _ in 0..k.unsigned_abs() {
            out = self.mul(out, base);
        }
        out
    }

    pub fn elem_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut n = 1;
        while x != 0 {
            x = self.mul(x, a);
            n += 1;
        }
        n
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.order)
            .filter(|&z| (0..self.order).all(|g| self.mul(z, g) == self.mul(g, z)))
            .collect()
    }

    /// The inner automorphism `h -> g h g^-1`.
    pub fn ad(&self, g: usize) -> GroupMap {
        let image = (0..self.order)
            .map(|h| self.mul(self.mul(g, h), self.inv(g)))
            .collect();
        GroupMap { image }
    }

    /// A small generating set found greedily (identity excluded).
    pub fn generators(&self) -> Vec<usize> {
        let mut gens: Vec<usize> = Vec::new();
        let mut closed = vec![false; self.order];
        closed[0] = true;
        while let Some(g) = (0..self.order).find(|&g| !closed[g]) {
            gens.push(g);
            let mut cl = vec![false; self.order];
            cl[0] = true;
            let mut stack = vec![0usize];
            while let Some(a) = stack.pop() {
                for &b in &gens {
                    for c in [self.mul(a, b), self.mul(b, a)] {
                        if !cl[c] {
                            cl[c] = true;
                            stack.push(c);
                        }
                    }
                }
            }
            closed = cl;
        }
        gens
    }

    /// Expresses every element as a word in the given generators (indices
    /// into `gens`); used to transport generator images to whole maps.
    fn words_in_generators(&self, gens: &[usize]) -> Vec<Vec<usize>> {
        let mut words: Vec<Option<Vec<usize>>> = vec![None; self.order];
        words[0] = Some(Vec::new());
        let mut queue = std::collections::VecDeque::from([0usize]);
        while let Some(a) = queue.pop_front() {
            for (gi, &g) in gens.iter().enumerate() {
                let b = self.mul(a, g);
                if words[b].is_none() {
                    let mut w = words[a].clone().unwrap();
                    w.push(gi);
                    words[b] = Some(w);
                    queue.push_back(b);
                }
            }
        }
        words
            .into_iter()
            .map(|w| w.expect("generators generate the group"))
            .collect()
    }

    /// Complete list of automorphisms, by brute force over generator images.
    pub fn automorphisms(&self, bound: usize) -> Result<Vec<GroupMap>> {
        isomorphisms(self, self, bound)
    }

    pub fn inner_automorphisms(&self) -> Vec<GroupMap> {
        let mut out: Vec<GroupMap> = Vec::new();
        for g in 0..self.order {
            let m = self.ad(g);
            if !out.contains(&m) {
                out.push(m);
            }
        }
        out.sort_by(|a, b| a.image.cmp(&b.image));
        out
    }
}

/// All isomorphisms from `g` to `h`, by brute force over generator images.
pub fn isomorphisms(g: &FiniteGroup, h: &FiniteGroup, bound: usize) -> Result<Vec<GroupMap>> {
    if g.order() > bound || h.order() > bound {
        return Err(Error::BoundExceeded {
            order: g.order().max(h.order()),
            bound,
        });
    }
    if g.order() != h.order() {
        return Ok(Vec::new());
    }
    let gens = g.generators();
    let words = g.words_in_generators(&gens);
    let orders: Vec<usize> = gens.iter().map(|&x| g.elem_order(x)).collect();
    let mut out = Vec::new();
    let mut choice = vec![0usize; gens.len()];
    'outer: loop {
        // prune: generator images must have matching orders
        let ok = choice
            .iter()
            .zip(&orders)
            .all(|(&c, &o)| h.elem_order(c) == o);
        if ok {
            let image: Vec<usize> = words
                .iter()
                .map(|w| w.iter().fold(0usize, |acc, &gi| h.mul(acc, choice[gi])))
                .collect();
            let mut seen = vec![false; h.order()];
            let bijective = image.iter().all(|&x| {
                let fresh = !seen[x];
                seen[x] = true;
                fresh
            });
            if bijective {
                let multiplicative = (0..g.order()).all(|a| {
                    (0..g.order()).all(|b| image[g.mul(a, b)] == h.mul(image[a], image[b]))
                });
                if multiplicative {
                    out.push(GroupMap { image });
                }
            }
        }
        // next tuple
        for i in 0..choice.len() {
            choice[i] += 1;
            if choice[i] < h.order() {
                continue 'outer;
            }
            choice[i] = 0;
        }
        break;
    }
    out.sort_by(|a, b| a.image.cmp(&b.image));
    Ok(out)
}

/// A map between finite groups (or an endomorphism), stored by images.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GroupMap {
    image: Vec<usize>,
}

impl GroupMap {
    /// Validates multiplicativity of the image array as a map `g -> h`.
    pub fn new(g: &FiniteGroup, h: &FiniteGroup, image: Vec<usize>) -> Result<Self> {
        if image.len() != g.order() {
            return Err(Error::NotHomomorphism(
                "image array has wrong length".into(),
            ));
        }
        if image.iter().any(|&x| x >= h.order()) {
            return Err(Error::NotHomomorphism("image index out of range".into()));
        }
        for a in 0..g.order() {
            for b in 0..g.order() {
                if image[g.mul(a, b)] != h.mul(image[a], image[b]) {
                    return Err(Error::NotHomomorphism(format!("fails at ({a},{b})")));
                }
            }
        }
        Ok(GroupMap { image })
    }

    pub fn endo(g: &FiniteGroup, image: Vec<usize>) -> Result<Self> {
        GroupMap::new(g, g, image)
    }

    pub fn identity(g: &FiniteGroup) -> Self {
        GroupMap {
            image: (0..g.order()).collect(),
        }
    }

    /// The trivial endomorphism sending everything to the identity.
    pub fn trivial(g: &FiniteGroup) -> Self {
        GroupMap {
            image: vec![0; g.order()],
        }
    }

    pub fn apply(&self, a: usize) -> usize {
        self.image[a]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn is_bijective(&self) -> bool {
        let mut seen = vec![false; self.image.len()];
        self.image.iter().all(|&x| {
            x < seen.len() && {
                let fresh = !seen[x];
                seen[x] = true;
                fresh
            }
        })
    }

    pub fn inverse(&self) -> Result<GroupMap> {
        if !self.is_bijective() {
            return Err(Error::NotAutomorphism);
        }
        let mut image = vec![0usize; self.image.len()];
        for (a, &b) in self.image.iter().enumerate() {
            image[b] = a;
        }
        Ok(GroupMap { image })
    }

    /// `self . other` (apply `other` first).
    pub fn compose(&self, other: &GroupMap) -> GroupMap {
        GroupMap {
            image: other.image.iter().map(|&x| self.image[x]).collect(),
        }
    }

    pub fn kernel(&self) -> Vec<usize> {
        self.image
            .iter()
            .enumerate()
            .filter(|(_, &x)| x == 0)
            .map(|(a, _)| a)
            .collect()
    }

    /// `true` when this endomorphism is conjugation by some element.
    pub fn is_inner(&self, g: &FiniteGroup) -> bool {
        (0..g.order()).any(|k| g.ad(k) == *self)
    }
}

/// Canonical token of the coset `a Inn(G)` in `Out(G)`: the lexicographically
/// least image array in the coset.
pub fn out_class(g: &FiniteGroup, a: &GroupMap) -> Vec<usize> {
    g.inner_automorphisms()
        .iter()
        .map(|i| a.compose(i).image.clone())
        .min()
        .expect("inner automorphism list is nonempty")
}

/// A finite group with an ordered pair of endomorphisms.
#[derive(Clone, Debug)]
pub struct Triple {
    pub group: FiniteGroup,
    pub a0: GroupMap,
    pub a1: GroupMap,
    inv0: Option<GroupMap>,
    inv1: Option<GroupMap>,
}

impl Triple {
    pub fn new(group: FiniteGroup, a0: GroupMap, a1: GroupMap) -> Result<Self> {
        GroupMap::new(&group, &group, a0.image.clone())?;
        GroupMap::new(&group, &group, a1.image.clone())?;
        let inv0 = a0.inverse().ok();
        let inv1 = a1.inverse().ok();
        Ok(Triple {
            group,
            a0,
            a1,
            inv0,
            inv1,
        })
    }

    pub fn untwisted(group: FiniteGroup) -> Self {
        let a0 = GroupMap::identity(&group);
        let a1 = a0.clone();
        Triple {
            group,
            inv0: Some(a0.clone()),
            inv1: Some(a1.clone()),
            a0,
            a1,
        }
    }

    pub fn endo(&self, letter: bool) -> &GroupMap {
        if letter {
            &self.a1
        } else {
            &self.a0
        }
    }

    pub fn autos(&self) -> bool {
        self.inv0.is_some() && self.inv1.is_some()
    }

    pub fn is_untwisted(&self) -> bool {
        self.a0.is_identity() && self.a1.is_identity()
    }

    /// The composed endomorphism `alpha_m = alpha_{m_k} o ... o alpha_{m_1}`
    /// (first letter innermost).
    pub fn alpha_word(&self, m: &Word) -> GroupMap {
        let mut acc = GroupMap::identity(&self.group);
        for &b in m.letters() {
            acc = self.endo(b).compose(&acc);
        }
        acc
    }

    /// Elements fixed by both endomorphisms.
    pub fn alpha_fixed(&self) -> Vec<usize> {
        self.group
            .elements()
            .filter(|&g| self.a0.apply(g) == g && self.a1.apply(g) == g)
            .collect()
    }

    /// Central alpha-fixed elements; these constant maps form the center of
    /// the fraction group.
    pub fn central_alpha_fixed(&self) -> Vec<usize> {
        let center = self.group.center();
        self.alpha_fixed()
            .into_iter()
            .filter(|g| center.contains(g))
            .collect()
    }

    /// Depth at which the increasing chain of kernels
    /// `K_d = { g : alpha_w(g) = e for all |w| = d }` stabilises.
    pub fn kernel_stabilization_depth(&self) -> usize {
        let mut depth = 0;
        let mut current = kernel_set(self, 0);
        loop {
            let next = kernel_set(self, depth + 1);
            if next == current {
                return depth;
            }
            current = next;
            depth += 1;
        }
    }

    /// The twisting element `h_q` built from `(h0, h1)`:
    /// `h_epsilon = e` and `h_{q.i} = h_i * alpha_i(h_q)`.
    pub fn h_q(&self, h0: usize, h1: usize, q: &Word) -> Result<usize> {
        if !self.autos() {
            return Err(Error::NotAutomorphism);
        }
        let mut acc = 0usize;
        for &b in q.letters() {
            let h = if b { h1 } else { h0 };
            acc = self.group.mul(h, self.endo(b).apply(acc));
        }
        Ok(acc)
    }
}

/// `K_d` as a sorted element list.
fn kernel_set(t: &Triple, depth: usize) -> Vec<usize> {
    let words = Word::empty().extensions_to(depth);
    t.group
        .elements()
        .filter(|&g| words.iter().all(|w| t.alpha_word(w).apply(g) == 0))
        .collect()
}

/// The kernel-union reduction: quotients by `N = union of the K_d` so that
/// `g -> (alpha_0(g), alpha_1(g))` becomes injective on the quotient,
/// without changing the fraction group. Returns the reduced triple and the
/// quotient map.
pub fn kernel_union_reduce(t: &Triple) -> Result<(Triple, GroupMap)> {
    let depth = t.kernel_stabilization_depth();
    let n: Vec<usize> = kernel_set(t, depth);
    // cosets of N, represented by their least member
    let g = &t.group;
    let in_n = |x: usize| n.binary_search(&x).is_ok();
    let mut coset_of = vec![usize::MAX; g.order()];
    let mut reps: Vec<usize> = Vec::new();
    for a in 0..g.order() {
        if coset_of[a] != usize::MAX {
            continue;
        }
        let idx = reps.len();
        for b in 0..g.order() {
            // b in aN
            if coset_of[b] == usize::MAX && in_n(g.mul(g.inv(a), b)) {
                coset_of[b] = idx;
            }
        }
        reps.push(a);
    }
    let order = reps.len();
    let mut mul = vec![vec![0usize; order]; order];
    for (i, &a) in reps.iter().enumerate() {
        for (j, &b) in reps.iter().enumerate() {
            mul[i][j] = coset_of[g.mul(a, b)];
        }
    }
    let quotient_group = FiniteGroup::new(mul, None)?;
    let q0: Vec<usize> = reps.iter().map(|&a| coset_of[t.a0.apply(a)]).collect();
    let q1: Vec<usize> = reps.iter().map(|&a| coset_of[t.a1.apply(a)]).collect();
    let a0 = GroupMap::endo(&quotient_group, q0)?;
    let a1 = GroupMap::endo(&quotient_group, q1)?;
    let quotient_map = GroupMap::new(g, &quotient_group, coset_of)?;
    Ok((Triple::new(quotient_group, a0, a1)?, quotient_map))
}

// ---------------------------------------------------------------------------
// Serialisation of triples.

#[derive(Serialize, Deserialize)]
struct GroupFile {
    order: usize,
    mul: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    names: Option<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct TripleFile {
    group: GroupFile,
    a0: Vec<usize>,
    a1: Vec<usize>,
}

impl Triple {
    pub fn from_json(json: &str) -> Result<Self> {
        let file: TripleFile = serde_json::from_str(json)?;
        if file.group.order != file.group.mul.len() {
            return Err(Error::InvalidGroup(
                "declared order differs from table size".into(),
            ));
        }
        let group = FiniteGroup::new(file.group.mul, file.group.names)?;
        let a0 = GroupMap::endo(&group, file.a0)?;
        let a1 = GroupMap::endo(&group, file.a1)?;
        Triple::new(group, a0, a1)
    }

    pub fn to_json(&self) -> String {
        let file = TripleFile {
            group: GroupFile {
                order: self.group.order(),
                mul: (0..self.group.order())
                    .map(|a| {
                        (0..self.group.order())
                            .map(|b| self.group.mul(a, b))
                            .collect()
                    })
                    .collect(),
                names: None,
            },
            a0: self.a0.image().to_vec(),
            a1: self.a1.image().to_vec(),
        };
        serde_json::to_string_pretty(&file).expect("triple serialises")
    }
}

// ---------------------------------------------------------------------------
// Built-in fixtures.

/// The cyclic group `Z/n` with element `i` the residue `i`.
pub fn cyclic(n: usize) -> FiniteGroup {
    let mul = (0..n)
        .map(|a| (0..n).map(|b| (a + b) % n).collect())
        .collect();
    let names = Some((0..n).map(|i| i.to_string()).collect());
    FiniteGroup::new(mul, names).expect("cyclic table is a group")
}

/// Inversion `x -> -x` on `Z/n`.
pub fn cyclic_inversion(n: usize) -> GroupMap {
    GroupMap {
        image: (0..n).map(|a| (n - a) % n).collect(),
    }
}

/// Multiplication `x -> kx` on `Z/n` (an endomorphism; an automorphism iff
/// `gcd(k, n) = 1`).
pub fn cyclic_scaling(n: usize, k: usize) -> GroupMap {
    GroupMap {
        image: (0..n).map(|a| (a * k) % n).collect(),
    }
}

/// The symmetric group S3 on `{0,1,2}`, elements ordered as
/// `e, (01), (02), (12), (012), (021)`.
pub fn symmetric_3() -> FiniteGroup {
    let perms: [[usize; 3]; 6] = [
        [0, 1, 2],
        [1, 0, 2],
        [2, 1, 0],
        [0, 2, 1],
        [1, 2, 0],
        [2, 0, 1],
    ];
    let compose = |p: &[usize; 3], q: &[usize; 3]| -> [usize; 3] {
        // (p o q)(x) = p(q(x))
        [p[q[0]], p[q[1]], p[q[2]]]
    };
    let index_of = |r: &[usize; 3]| perms.iter().position(|p| p == r).unwrap();
    let mul = (0..6)
        .map(|a| {
            (0..6)
                .map(|b| index_of(&compose(&perms[a], &perms[b])))
                .collect()
        })
        .collect();
    let names = Some(
        ["e", "(01)", "(02)", "(12)", "(012)", "(021)"]
            .iter()
            .map(|s| s.to_string())
            .collect(),
    );
    FiniteGroup::new(mul, names).expect("S3 table is a group")
}

/// Standard fixtures used by the verification suites.
pub fn fixture(name: &str) -> Result<Triple> {
    match name {
        "z2" => Ok(Triple::untwisted(cyclic(2))),
        "z3inv" => {
            let g = cyclic(3);
            let a1 = cyclic_inversion(3);
            Triple::new(g.clone(), GroupMap::identity(&g), a1)
        }
        "z4inv" => {
            let g = cyclic(4);
            let a1 = cyclic_inversion(4);
            Triple::new(g.clone(), GroupMap::identity(&g), a1)
        }
        "s3" => Ok(Triple::untwisted(symmetric_3())),
        other => Err(Error::Parse(format!("unknown fixture {other:?}"))),
    }
}

// ---------------------------------------------------------------------------
// The Z[1/2]^2 fixture group with alpha(t, r) = (t, r/2).

/// Element of `Z[1/2] x Z[1/2]` under addition.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct PairElem {
    pub t: Dyadic,
    pub r: Dyadic,
}

impl PairElem {
    pub fn new(t: Dyadic, r: Dyadic) -> Self {
        PairElem { t, r }
    }

    pub fn zero() -> Self {
        PairElem {
            t: Dyadic::ZERO,
            r: Dyadic::ZERO,
        }
    }
}

/// Abstract interface the loop-group machinery needs from a coefficient
/// group: multiplication and the two structure endomorphisms.
pub trait Coefficients {
    type Elem: Clone + Eq + std::fmt::Debug;

    fn identity(&self) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    /// Applies `alpha_b` for the letter `b`.
    fn alpha(&self, b: bool, g: &Self::Elem) -> Self::Elem;
    /// Applies `alpha_b^-1`; only called when `autos()` holds.
    fn alpha_inv(&self, b: bool, g: &Self::Elem) -> Self::Elem;
    fn autos(&self) -> bool;
    /// Stabilisation depth of the kernel chain (0 for injective pairs).
    fn kernel_depth(&self) -> usize {
        0
    }
    fn describe(&self, g: &Self::Elem) -> String;

    fn pow(&self, g: &Self::Elem, k: i64) -> Self::Elem {
        let base = if k < 0 { self.inv(g) } else { g.clone() };
        let mut out = self.identity();
        for _ in 0..k.unsigned_abs() {
            out = self.mul(&out, &base);
        }
        out
    }

    /// `alpha_m` applied to an element, first letter innermost.
    fn alpha_word(&self, m: &Word, g: &Self::Elem) -> Self::Elem {
        let mut out = g.clone();
        for &b in m.letters() {
            out = self.alpha(b, &out);
        }
        out
    }

    /// `alpha_m^-1` applied to an element.
    fn alpha_word_inv(&self, m: &Word, g: &Self::Elem) -> Self::Elem {
        let mut out = g.clone();
        for &b in m.letters().iter().rev() {
            out = self.alpha_inv(b, &out);
        }
        out
    }
}

impl Coefficients for Triple {
    type Elem = usize;

    fn identity(&self) -> usize {
        0
    }

    fn mul(&self, a: &usize, b: &usize) -> usize {
        self.group.mul(*a, *b)
    }

    fn inv(&self, a: &usize) -> usize {
        self.group.inv(*a)
    }

    fn alpha(&self, b: bool, g: &usize) -> usize {
        self.endo(b).apply(*g)
    }

    fn alpha_inv(&self, b: bool, g: &usize) -> usize {
        let inv = if b { &self.inv1 } else { &self.inv0 };
        inv.as_ref()
            .expect("alpha_inv requires automorphisms")
            .apply(*g)
    }

    fn autos(&self) -> bool {
        Triple::autos(self)
    }

    fn kernel_depth(&self) -> usize {
        self.kernel_stabilization_depth()
    }

    fn describe(&self, g: &usize) -> String {
        g.to_string()
    }
}

/// The additive group `Z[1/2] x Z[1/2]` with `alpha_0 = alpha_1 = alpha`,
/// `alpha(t, r) = (t, r/2)`. The only built-in infinite coefficient group;
/// enumeration-style algorithms reject it by construction (they are only
/// defined on [`Triple`]).
#[derive(Clone, Copy, Debug, Default)]
pub struct DyadicPairTriple;

impl Coefficients for DyadicPairTriple {
    type Elem = PairElem;

    fn identity(&self) -> PairElem {
        PairElem::zero()
    }

    fn mul(&self, a: &PairElem, b: &PairElem) -> PairElem {
        PairElem {
            t: a.t + b.t,
            r: a.r + b.r,
        }
    }

    fn inv(&self, a: &PairElem) -> PairElem {
        PairElem { t: -a.t, r: -a.r }
    }

    fn alpha(&self, _b: bool, g: &PairElem) -> PairElem {
        PairElem {
            t: g.t,
            r: g.r.halve(),
        }
    }

    fn alpha_inv(&self, _b: bool, g: &PairElem) -> PairElem {
        PairElem {
            t: g.t,
            r: g.r.scale_pow2(1),
        }
    }

    fn autos(&self) -> bool {
        true
    }

    fn describe(&self, g: &PairElem) -> String {
        format!("({},{})", g.t, g.r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn cyclic_and_s3_are_groups() {
        for n in 1..=8 {
            cyclic(n);
        }
        let s3 = symmetric_3();
        assert_eq!(s3.order(), 6);
        assert_eq!(s3.center(), vec![0]);
        assert_eq!(cyclic(4).center().len(), 4);
    }

    #[test]
    fn alpha_word_order_convention() {
        // alpha_{01} = alpha_1 o alpha_0
        let g = cyclic(5);
        let a0 = cyclic_scaling(5, 2);
        let a1 = cyclic_scaling(5, 3);
        let t = Triple::new(g, a0.clone(), a1.clone()).unwrap();
        assert_eq!(t.alpha_word(&w("01")), a1.compose(&a0));
        assert_eq!(t.alpha_word(&w("e")), GroupMap::identity(&t.group));
        // "110" with alpha_0 = id, alpha_1 = inversion on Z/3: inv^2 = id
        let g3 = cyclic(3);
        let t3 = Triple::new(g3.clone(), GroupMap::identity(&g3), cyclic_inversion(3)).unwrap();
        assert!(t3.alpha_word(&w("110")).is_identity());
    }

    #[test]
    fn alpha_word_concatenation_law() {
        // alpha_(m.m') = alpha_(m') o alpha_m, random words up to length 8
        let g = cyclic(5);
        let t = Triple::new(g, cyclic_scaling(5, 2), cyclic_scaling(5, 3)).unwrap();
        let mut rng = crate::sampling::rng_for_case(61, 0);
        for _ in 0..50 {
            let m = crate::sampling::random_word(&mut rng, 8);
            let m2 = crate::sampling::random_word(&mut rng, 8);
            assert_eq!(
                t.alpha_word(&m.concat(&m2)),
                t.alpha_word(&m2).compose(&t.alpha_word(&m))
            );
        }
    }

    #[test]
    fn automorphism_counts() {
        let z3 = cyclic(3);
        let auts = z3.automorphisms(DEFAULT_MAX_GROUP).unwrap();
        assert_eq!(auts.len(), 2);
        assert_eq!(z3.inner_automorphisms().len(), 1);

        let s3 = symmetric_3();
        let auts = s3.automorphisms(DEFAULT_MAX_GROUP).unwrap();
        assert_eq!(auts.len(), 6);
        assert_eq!(s3.inner_automorphisms().len(), 6);
        // Out(S3) trivial: single coset token
        let tokens: std::collections::HashSet<Vec<usize>> =
            auts.iter().map(|a| out_class(&s3, a)).collect();
        assert_eq!(tokens.len(), 1);

        let z2 = cyclic(2);
        assert_eq!(z2.automorphisms(DEFAULT_MAX_GROUP).unwrap().len(), 1);
    }

    #[test]
    fn out_class_tokens_separate_cosets() {
        // Aut(Z/8) = {1,3,5,7}, Inn trivial: four distinct tokens
        let z8 = cyclic(8);
        let auts = z8.automorphisms(DEFAULT_MAX_GROUP).unwrap();
        assert_eq!(auts.len(), 4);
        let tokens: std::collections::HashSet<Vec<usize>> =
            auts.iter().map(|a| out_class(&z8, a)).collect();
        assert_eq!(tokens.len(), 4);
    }

    #[test]
    fn alpha_fixed_sets() {
        let t = fixture("z4inv").unwrap();
        assert_eq!(t.alpha_fixed(), vec![0, 2]);
        let t3 = fixture("z3inv").unwrap();
        assert_eq!(t3.alpha_fixed(), vec![0]);
        let u = fixture("z2").unwrap();
        assert_eq!(u.alpha_fixed(), vec![0, 1]);
        // the fixed set is a subgroup: closed under products and inverses
        let s3 = symmetric_3();
        let tw = Triple::new(s3.clone(), s3.ad(4), GroupMap::identity(&s3)).unwrap();
        let fixed = tw.alpha_fixed();
        for &a in &fixed {
            assert!(fixed.contains(&tw.group.inv(a)));
            for &b in &fixed {
                assert!(fixed.contains(&tw.group.mul(a, b)));
            }
        }
    }

    #[test]
    fn inner_normal_and_out_class_constant_on_cosets() {
        for g in [cyclic(8), symmetric_3(), cyclic(12)] {
            let auts = g.automorphisms(DEFAULT_MAX_GROUP).unwrap();
            let inns = g.inner_automorphisms();
            // Inn is normal in Aut
            for a in &auts {
                let ai = a.inverse().unwrap();
                for i in &inns {
                    assert!(inns.contains(&a.compose(i).compose(&ai)));
                }
            }
            // tokens are constant on cosets and separate them
            let mut tokens = std::collections::HashSet::new();
            for a in &auts {
                let tok = out_class(&g, a);
                for i in &inns {
                    assert_eq!(out_class(&g, &a.compose(i)), tok);
                }
                tokens.insert(tok);
            }
            assert_eq!(tokens.len(), auts.len() / inns.len());
        }
    }

    #[test]
    fn reduction_examples() {
        // both trivial endomorphisms: quotient is trivial
        let g = cyclic(6);
        let t = Triple::new(g.clone(), GroupMap::trivial(&g), GroupMap::trivial(&g)).unwrap();
        let (reduced, _) = kernel_union_reduce(&t).unwrap();
        assert_eq!(reduced.group.order(), 1);

        // Z/4 with a0: x -> 2x, a1 trivial: kernel union reaches everything
        let z4 = cyclic(4);
        let t = Triple::new(z4.clone(), cyclic_scaling(4, 2), GroupMap::trivial(&z4)).unwrap();
        let (reduced, q) = kernel_union_reduce(&t).unwrap();
        assert_eq!(reduced.group.order(), 1);
        assert!(q.image().iter().all(|&x| x == 0));

        // automorphism pairs reduce to themselves
        let t = fixture("z3inv").unwrap();
        let (reduced, q) = kernel_union_reduce(&t).unwrap();
        assert_eq!(reduced.group.order(), 3);
        assert!(q.is_bijective());
    }

    #[test]
    fn reduction_joint_injectivity() {
        // a mixed example: Z/8 with a0: x -> 2x, a1: x -> 4x
        let z8 = cyclic(8);
        let t = Triple::new(z8.clone(), cyclic_scaling(8, 2), cyclic_scaling(8, 4)).unwrap();
        let (reduced, _) = kernel_union_reduce(&t).unwrap();
        for g in 1..reduced.group.order() {
            assert!(
                reduced.a0.apply(g) != 0 || reduced.a1.apply(g) != 0,
                "joint map not injective at {g}"
            );
        }
        assert!(t.kernel_stabilization_depth() <= z8.order());
    }

    #[test]
    fn h_q_examples() {
        let t = fixture("z3inv").unwrap();
        // single letters give back the letters
        assert_eq!(t.h_q(1, 2, &w("0")).unwrap(), 1);
        assert_eq!(t.h_q(1, 2, &w("1")).unwrap(), 2);
        // q = "01" gives h1 * alpha_1(h0) = 2 + inv(1) = 1
        assert_eq!(t.h_q(1, 2, &w("01")).unwrap(), 1);
        // concatenation law h_{q.m} = h_m * alpha_m(h_q)
        for (h0, h1) in [(1, 2), (2, 2), (1, 1)] {
            for q in ["0", "01", "010", "1101"] {
                for m in ["0", "1", "10", "011"] {
                    let q: Word = q.parse().unwrap();
                    let m: Word = m.parse().unwrap();
                    let lhs = t.h_q(h0, h1, &q.concat(&m)).unwrap();
                    let rhs = t.group.mul(
                        t.h_q(h0, h1, &m).unwrap(),
                        t.alpha_word(&m).apply(t.h_q(h0, h1, &q).unwrap()),
                    );
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn h_q_twist_conjugation_identity() {
        // ad(h_q) o alpha_q equals the tilde-alpha_q built from
        // tilde-alpha_i = ad(h_i) o alpha_i
        let t = fixture("s3").unwrap();
        let s3 = &t.group;
        let (h0, h1) = (1usize, 4usize);
        let t_twisted = Triple::new(
            s3.clone(),
            s3.ad(h0).compose(&t.a0),
            s3.ad(h1).compose(&t.a1),
        )
        .unwrap();
        for q in ["0", "1", "01", "10", "110", "0101"] {
            let q: Word = q.parse().unwrap();
            let lhs = t_twisted.alpha_word(&q);
            let hq = t.h_q(h0, h1, &q).unwrap();
            let rhs = s3.ad(hq).compose(&t.alpha_word(&q));
            assert_eq!(lhs, rhs, "word {q}");
        }
    }

    #[test]
    fn triple_json_round_trip() {
        let t = fixture("z4inv").unwrap();
        let json = t.to_json();
        let back = Triple::from_json(&json).unwrap();
        assert_eq!(back.group.order(), 4);
        assert_eq!(back.a1.image(), t.a1.image());
    }

    #[test]
    fn dyadic_pair_alpha() {
        let ctx = DyadicPairTriple;
        let g = PairElem::new(Dyadic::from_int(3), Dyadic::from_int(1));
        let h = ctx.alpha(false, &g);
        assert_eq!(h.r, Dyadic::new(1, 1));
        assert_eq!(ctx.alpha_inv(true, &h), g);
        assert_eq!(ctx.mul(&g, &ctx.inv(&g)), PairElem::zero());
    }
}

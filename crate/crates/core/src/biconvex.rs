//! Biconvex sets in `Delta_{J+}`: the `(K, u, y)` parametrization of real
//! biconvex sets, its inverse, the windowed convexity predicate, and the
//! four-way classification of arbitrary biconvex sets.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::affine::{
    angle_bracket, cayley_ball, inversion_set_affine, letter_element, letters, simple_root, window,
    AffineRoot, AffineRootJson, AffineRootSet, AffineWeylElement, AffineWeylJson,
};
use crate::cartan::{Sign, SubSystem};
use crate::error::{Error, Result};
use crate::finweyl::{
    element_from_labels, factor_pointed_biclosed, subgroup_elements, translate_delta_j_k,
    FiniteWeylElement, RootSet,
};
use crate::vector::{RootVec, Subset};

/// A triple `(K, u, y)` with `K` inside `J`, `u` minimal in `u W_K` and `y` in
/// the affine Weyl group `W_K`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BiconvexParam {
    sub: SubSystem,
    k: Subset,
    u: FiniteWeylElement,
    y: AffineWeylElement,
}

impl BiconvexParam {
    pub fn new(
        sub: &SubSystem,
        k: Subset,
        u: FiniteWeylElement,
        y: AffineWeylElement,
    ) -> Result<Self> {
        let j = sub.index_set();
        if j.is_empty() {
            return Err(Error::InvalidParam("J must be nonempty".into()));
        }
        if !k.is_subset_of(j) {
            return Err(Error::NotSubset {
                sub: k.to_string(),
                sup: j.to_string(),
            });
        }
        if u.root_system() != sub.root_system() || y.root_system() != sub.root_system() {
            return Err(Error::MixedSystems);
        }
        if !u.is_in_parabolic(j) {
            return Err(Error::InvalidParam(format!(
                "u = {u} is not in W_J for J = {j}"
            )));
        }
        if !u.is_min_coset_rep(k) {
            return Err(Error::InvalidParam(format!(
                "u = {u} is not minimal in u W_K for K = {k}"
            )));
        }
        if !y.is_in_subgroup(k) {
            return Err(Error::InvalidParam(format!(
                "y = {y:?} is not in W_K for K = {k}"
            )));
        }
        Ok(BiconvexParam {
            sub: sub.clone(),
            k,
            u,
            y,
        })
    }

    pub fn sub(&self) -> &SubSystem {
        &self.sub
    }

    pub fn j(&self) -> Subset {
        self.sub.index_set()
    }

    pub fn k(&self) -> Subset {
        self.k
    }

    pub fn u(&self) -> &FiniteWeylElement {
        &self.u
    }

    pub fn y(&self) -> &AffineWeylElement {
        &self.y
    }

    /// The subsystem `Delta_K`.
    pub fn sub_k(&self) -> SubSystem {
        self.sub
            .root_system()
            .sub_system(self.k)
            .expect("K is a subset of the index set")
    }

    /// `nabla(K, u, y)` is infinite exactly when `K != J`.
    pub fn is_infinite(&self) -> bool {
        self.k != self.j()
    }

    /// `u y`, the element carrying `Z^K_J` onto this parameter's word class.
    pub fn uy(&self) -> AffineWeylElement {
        &AffineWeylElement::from_finite(self.u.clone()) * &self.y
    }
}

impl fmt::Debug for BiconvexParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(K={}, u={}, y={:?})", self.k, self.u, self.y)
    }
}

/// JSON form `{"J": [...], "K": [...], "u": [word], "y": {"lambda": [...], "wbar": [word]}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamJson {
    #[serde(rename = "J")]
    pub j: Vec<usize>,
    #[serde(rename = "K")]
    pub k: Vec<usize>,
    pub u: Vec<usize>,
    pub y: AffineWeylJson,
}

impl From<&BiconvexParam> for ParamJson {
    fn from(p: &BiconvexParam) -> Self {
        ParamJson {
            j: p.j().labels(),
            k: p.k.labels(),
            u: p.u.reduced_word().iter().map(|i| i + 1).collect(),
            y: AffineWeylJson::from(&p.y),
        }
    }
}

impl ParamJson {
    pub fn to_param(
        &self,
        rs: &std::sync::Arc<crate::cartan::RootSystem>,
    ) -> Result<BiconvexParam> {
        let bad = |what: &str| Error::Parse(format!("bad {what} index set"));
        let j = Subset::from_labels(&self.j).ok_or_else(|| bad("J"))?;
        let k = Subset::from_labels(&self.k).ok_or_else(|| bad("K"))?;
        let sub = rs.sub_system(j)?;
        let u = element_from_labels(rs, &self.u)?;
        let y = self.y.to_element(rs)?;
        BiconvexParam::new(&sub, k, u, y)
    }
}

/// A subset of `Delta_{J+}` described exactly by finitely many data:
/// `(Delta^im_+ if imaginary) + (<tail> - removed) + added`.
///
/// Normalized so that `added` is disjoint from `<tail>` and `removed` lies
/// inside `<tail>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TailedSet {
    pub imaginary: bool,
    pub tail: RootSet,
    pub added: AffineRootSet,
    pub removed: AffineRootSet,
}

fn in_bracket(tail: &RootSet, b: &AffineRoot) -> bool {
    b.is_real() && b.is_positive() && tail.contains(&b.classical)
}

impl TailedSet {
    pub fn new(
        sub: &SubSystem,
        imaginary: bool,
        tail: RootSet,
        added: AffineRootSet,
        removed: AffineRootSet,
    ) -> Result<Self> {
        if let Some(e) = tail.iter().find(|e| !sub.contains_root(e)) {
            return Err(Error::NotInSubsystem(e.to_string()));
        }
        for b in added.iter().chain(removed.iter()) {
            if !(b.is_positive() && b.is_real() && sub.contains_root(&b.classical)) {
                return Err(Error::NotInSubsystem(b.to_string()));
            }
        }
        let added = added
            .into_iter()
            .filter(|b| !in_bracket(&tail, b))
            .collect();
        let removed = removed
            .into_iter()
            .filter(|b| in_bracket(&tail, b))
            .collect();
        Ok(TailedSet {
            imaginary,
            tail,
            added,
            removed,
        })
    }

    /// A finite set of positive real roots.
    pub fn finite(sub: &SubSystem, roots: AffineRootSet) -> Result<Self> {
        Self::new(sub, false, RootSet::new(), roots, AffineRootSet::new())
    }

    /// Reads a window `members` (all elements of level `<= N`) together with
    /// a promised tail support.
    pub fn from_window(
        sub: &SubSystem,
        tail: RootSet,
        members: &AffineRootSet,
        cutoff: i32,
    ) -> Result<Self> {
        let imaginary = members.iter().any(|b| b.is_imaginary());
        let real: AffineRootSet = members.iter().copied().filter(|b| b.is_real()).collect();
        let removed = angle_bracket(&tail, cutoff)
            .into_iter()
            .filter(|b| !real.contains(b))
            .collect();
        Self::new(sub, imaginary, tail, real, removed)
    }

    pub fn contains(&self, b: &AffineRoot) -> bool {
        if b.is_imaginary() {
            return self.imaginary && b.level > 0;
        }
        self.added.contains(b) || (in_bracket(&self.tail, b) && !self.removed.contains(b))
    }

    /// All members of level at most `N`.
    pub fn truncate(&self, sub: &SubSystem, cutoff: i32) -> AffineRootSet {
        let mut out: AffineRootSet = angle_bracket(&self.tail, cutoff)
            .into_iter()
            .filter(|b| !self.removed.contains(b))
            .collect();
        out.extend(self.added.iter().copied().filter(|b| b.level <= cutoff));
        if self.imaginary && sub.component_count() > 0 {
            out.extend((1..=cutoff).map(AffineRoot::imaginary));
        }
        out
    }

    /// `Delta_{J+}` minus this set.
    pub fn complement(&self, sub: &SubSystem) -> Self {
        let tail: RootSet = sub
            .roots()
            .iter()
            .copied()
            .filter(|e| !self.tail.contains(e))
            .collect();
        TailedSet {
            imaginary: !self.imaginary,
            tail,
            added: self.removed.clone(),
            removed: self.added.clone(),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.tail.is_empty() && !self.imaginary
    }
}

/// `nabla(K, u, y)` as a tail `u Delta^K_{J-}` plus the finite part `u Phi_K(y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiconvexSetView {
    pub param: BiconvexParam,
    pub tail: RootSet,
    pub finite: AffineRootSet,
    pub cutoff: i32,
}

impl BiconvexSetView {
    /// Membership at any level.
    pub fn contains(&self, b: &AffineRoot) -> bool {
        in_bracket(&self.tail, b) || self.finite.contains(b)
    }

    /// All members of level at most `N`.
    pub fn truncate(&self, cutoff: i32) -> AffineRootSet {
        let mut out = angle_bracket(&self.tail, cutoff);
        out.extend(self.finite.iter().copied().filter(|b| b.level <= cutoff));
        out
    }

    /// Members up to the view's own cutoff.
    pub fn materialize(&self) -> AffineRootSet {
        self.truncate(self.cutoff)
    }

    pub fn to_tailed(&self) -> TailedSet {
        TailedSet {
            imaginary: false,
            tail: self.tail.clone(),
            added: self.finite.clone(),
            removed: AffineRootSet::new(),
        }
    }

    pub fn to_json(&self) -> ViewJson {
        let rank = self.param.sub.root_system().rank();
        ViewJson {
            tail: self.tail.iter().map(|e| e.coords(rank).to_vec()).collect(),
            finite: self
                .finite
                .iter()
                .map(|b| AffineRootJson::new(b, rank))
                .collect(),
            cutoff: self.cutoff,
            roots: Some(
                self.materialize()
                    .iter()
                    .map(|b| AffineRootJson::new(b, rank))
                    .collect(),
            ),
        }
    }
}

/// JSON form `{"tail": [[coords]], "finite": [roots], "cutoff": N}`; `roots`
/// optionally lists the materialized window.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViewJson {
    pub tail: Vec<Vec<i32>>,
    pub finite: Vec<AffineRootJson>,
    pub cutoff: i32,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub roots: Option<Vec<AffineRootJson>>,
}

impl ViewJson {
    pub fn to_tailed(&self, sub: &SubSystem) -> Result<TailedSet> {
        let rs = sub.root_system();
        let mut tail = RootSet::new();
        for c in &self.tail {
            if c.len() != rs.rank() {
                return Err(Error::Parse(format!("tail root {c:?} has the wrong rank")));
            }
            tail.insert(RootVec::from_slice(c));
        }
        let finite = self
            .finite
            .iter()
            .map(|r| r.to_root(rs))
            .collect::<Result<_>>()?;
        TailedSet::new(sub, false, tail, finite, AffineRootSet::new())
    }
}

pub fn nabla(param: &BiconvexParam, cutoff: i32) -> Result<BiconvexSetView> {
    let tail = translate_delta_j_k(&param.sub, param.k, &param.u)?;
    let u = AffineWeylElement::from_finite(param.u.clone());
    let finite = u.act_set(&inversion_set_affine(&param.y, &param.sub_k())?);
    Ok(BiconvexSetView {
        param: param.clone(),
        tail,
        finite,
        cutoff,
    })
}

/// Recovers `y` in `W_K` from `X = Phi_K(y)` by removing the smallest simple
/// root of `Delta_K` present and reflecting; `None` if `X` is no inversion set.
pub fn element_from_affine_inversions(
    set: &AffineRootSet,
    sub_k: &SubSystem,
) -> Option<AffineWeylElement> {
    let mut x = set.clone();
    let all = letters(sub_k);
    let mut word = Vec::new();
    while !x.is_empty() {
        if x.iter()
            .any(|b| !b.is_positive() || !b.is_real() || !sub_k.contains_root(&b.classical))
        {
            return None;
        }
        let letter = *all.iter().find(|&&l| x.contains(&simple_root(l, sub_k)))?;
        let s = letter_element(letter, sub_k).ok()?;
        x.remove(&simple_root(letter, sub_k));
        x = s.act_set(&x);
        word.push(s);
    }
    let mut y = AffineWeylElement::identity(sub_k.root_system());
    for s in &word {
        y = &y * s;
    }
    Some(y)
}

/// Inverse of [`nabla`] on real biconvex sets with a known tail.
pub fn parametrize(b: &TailedSet, sub: &SubSystem) -> Result<BiconvexParam> {
    if b.imaginary {
        return Err(Error::NotBiconvex("contains imaginary roots".into()));
    }
    let (k, u) = factor_pointed_biclosed(&b.tail, sub)
        .map_err(|e| Error::NotBiconvex(format!("tail support is not pointed biclosed ({e})")))?;
    if let Some(r) = b.removed.first() {
        return Err(Error::NotBiconvex(format!("tail is missing {r}")));
    }
    let sub_k = sub.root_system().sub_system(k)?;
    let uinv = AffineWeylElement::from_finite(u.inverse());
    let x = uinv.act_set(&b.added);
    let y = element_from_affine_inversions(&x, &sub_k)
        .ok_or_else(|| Error::NotBiconvex("finite part is not an inversion set of W_K".into()))?;
    BiconvexParam::new(sub, k, u, y)
}

/// `nabla(p1)` is contained in `nabla(p2)` up to finitely many roots.
pub fn dot_subset(p1: &BiconvexParam, p2: &BiconvexParam) -> Result<bool> {
    if p1.sub != p2.sub {
        return Err(Error::InvalidParam("parameters have different J".into()));
    }
    Ok(p2.k.is_subset_of(p1.k) && (&p2.u.inverse() * &p1.u).is_in_parabolic(p1.k))
}

/// Precomputed additive structure of the level-`<= N` window of `Delta_{J+}`.
pub struct Window {
    roots: Vec<AffineRoot>,
    index: HashMap<AffineRoot, usize>,
    triples: Vec<(usize, usize, usize)>,
}

impl Window {
    pub fn new(sub: &SubSystem, cutoff: i32) -> Self {
        let roots: Vec<AffineRoot> = window(sub, cutoff, true).into_iter().collect();
        let index: HashMap<AffineRoot, usize> =
            roots.iter().enumerate().map(|(i, b)| (*b, i)).collect();
        let mut triples = Vec::new();
        for i in 0..roots.len() {
            for j in i..roots.len() {
                if let Some(&k) = index.get(&(roots[i] + roots[j])) {
                    triples.push((i, j, k));
                }
            }
        }
        Window {
            roots,
            index,
            triples,
        }
    }

    pub fn roots(&self) -> &[AffineRoot] {
        &self.roots
    }

    pub fn index_of(&self, b: &AffineRoot) -> Option<usize> {
        self.index.get(b).copied()
    }

    /// C(i) and C(ii) for a membership mask over the window roots.
    pub fn check_mask(&self, member: &[bool]) -> bool {
        self.triples.iter().all(|&(i, j, k)| {
            let closed = !(member[i] && member[j]) || member[k];
            let coclosed = !member[k] || member[i] || member[j];
            closed && coclosed
        })
    }

    pub fn check(&self, s: &AffineRootSet) -> Result<bool> {
        let mut member = vec![false; self.roots.len()];
        for b in s {
            let i = self
                .index_of(b)
                .ok_or_else(|| Error::NotInSubsystem(format!("{b} is not in the window")))?;
            member[i] = true;
        }
        Ok(self.check_mask(&member))
    }
}

/// Both convexity conditions inside `Delta_{J+}` for all sums of level `<= N`.
pub fn is_biconvex_window(s: &AffineRootSet, sub: &SubSystem, cutoff: i32) -> Result<bool> {
    Window::new(sub, cutoff).check(s)
}

/// Largest candidate pool the brute-force enumerator accepts.
pub const BRUTEFORCE_LIMIT: usize = 24;

/// All sets of at most `max_size` real roots of level `<= N` passing the
/// window check at `N`.
pub fn enumerate_biconvex_bruteforce(
    sub: &SubSystem,
    cutoff: i32,
    max_size: usize,
) -> Result<Vec<AffineRootSet>> {
    enumerate_biconvex_candidates(sub, cutoff, cutoff, max_size)
}

/// Like [`enumerate_biconvex_bruteforce`], but candidates come from levels
/// `<= candidate_level` and are checked in the larger window of level
/// `<= check_cutoff`. With `check_cutoff >= 2 * candidate_level` the check
/// is exact for these finite sets.
pub fn enumerate_biconvex_candidates(
    sub: &SubSystem,
    candidate_level: i32,
    check_cutoff: i32,
    max_size: usize,
) -> Result<Vec<AffineRootSet>> {
    let candidates: Vec<AffineRoot> = window(sub, candidate_level, false).into_iter().collect();
    if candidates.len() > BRUTEFORCE_LIMIT {
        return Err(Error::WindowTooLarge {
            roots: candidates.len(),
            limit: BRUTEFORCE_LIMIT,
        });
    }
    let win = Window::new(sub, check_cutoff.max(candidate_level));
    let positions: Vec<usize> = candidates
        .iter()
        .map(|b| win.index_of(b).unwrap())
        .collect();
    let masks = combinations(candidates.len(), max_size);
    let mut found: Vec<AffineRootSet> = masks
        .par_iter()
        .filter_map(|&mask| {
            let mut member = vec![false; win.roots().len()];
            for (bit, &p) in positions.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    member[p] = true;
                }
            }
            win.check_mask(&member).then(|| {
                (0..candidates.len())
                    .filter(|bit| mask >> bit & 1 == 1)
                    .map(|bit| candidates[bit])
                    .collect()
            })
        })
        .collect();
    found.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    found.dedup();
    Ok(found)
}

/// Bitmasks over `n` items with at most `k` bits set.
fn combinations(n: usize, k: usize) -> Vec<u32> {
    fn go(start: usize, n: usize, left: usize, mask: u32, out: &mut Vec<u32>) {
        out.push(mask);
        if left == 0 {
            return;
        }
        for i in start..n {
            go(i + 1, n, left - 1, mask | 1 << i, out);
        }
    }
    let mut out = Vec::new();
    go(0, n, k.min(n), 0, &mut out);
    out
}

/// Guesses the tail support of a window: `eps` belongs to it when the top two
/// levels of `<eps>` are present. Reliable once `N >= l_K(y) + 2`.
pub fn infer_tail(members: &AffineRootSet, sub: &SubSystem, cutoff: i32) -> RootSet {
    sub.roots()
        .iter()
        .copied()
        .filter(|e| {
            let lowest = if e.is_positive() { 0 } else { 1 };
            cutoff > lowest
                && members.contains(&AffineRoot::real(cutoff, *e))
                && members.contains(&AffineRoot::real(cutoff - 1, *e))
        })
        .collect()
}

/// The four shapes of a biconvex set in `Delta_{J+}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BiconvexClass {
    /// `Phi_J(z)`
    Finite(AffineWeylElement),
    /// `Delta_{J+} - Phi_J(z)`
    CoFinite(AffineWeylElement),
    /// `nabla(K, u, y)` with `K != J`
    Infinite(BiconvexParam),
    /// `Delta_{J+} - nabla(K, u, y)`
    CoInfinite(BiconvexParam),
}

impl BiconvexClass {
    pub fn tag(&self) -> char {
        match self {
            BiconvexClass::Finite(_) => 'a',
            BiconvexClass::CoFinite(_) => 'b',
            BiconvexClass::Infinite(_) => 'c',
            BiconvexClass::CoInfinite(_) => 'd',
        }
    }
}

fn classify_real(
    b: &TailedSet,
    sub: &SubSystem,
) -> Result<std::result::Result<AffineWeylElement, BiconvexParam>> {
    if b.tail.is_empty() {
        element_from_affine_inversions(&b.added, sub)
            .map(Ok)
            .ok_or_else(|| Error::NotBiconvex("finite set is not an inversion set".into()))
    } else {
        parametrize(b, sub).map(Err)
    }
}

pub fn classify_biconvex(b: &TailedSet, sub: &SubSystem) -> Result<BiconvexClass> {
    if b.imaginary {
        Ok(match classify_real(&b.complement(sub), sub)? {
            Ok(z) => BiconvexClass::CoFinite(z),
            Err(p) => BiconvexClass::CoInfinite(p),
        })
    } else {
        Ok(match classify_real(b, sub)? {
            Ok(z) => BiconvexClass::Finite(z),
            Err(p) => BiconvexClass::Infinite(p),
        })
    }
}

/// Every parameter `(K, u, y)` over `J` with `l_K(y) <= max_len`, optionally
/// restricted to `K != J`.
pub fn enumerate_params(
    sub: &SubSystem,
    max_len: usize,
    infinite_only: bool,
) -> Result<Vec<BiconvexParam>> {
    let rs = sub.root_system();
    let elems = subgroup_elements(sub);
    let mut out = Vec::new();
    for k in sub.index_set().subsets() {
        if infinite_only && k == sub.index_set() {
            continue;
        }
        let sub_k = rs.sub_system(k)?;
        let ys = cayley_ball(&sub_k, max_len)?;
        for u in elems.iter().filter(|u| u.is_min_coset_rep(k)) {
            for (y, _) in &ys {
                out.push(BiconvexParam::new(sub, k, u.clone(), y.clone())?);
            }
        }
    }
    Ok(out)
}

/// `u Delta^K_{J+}`, the classical support of `Delta^K_J(u, +)`.
pub fn opposite_tail(sub: &SubSystem, k: Subset, u: &FiniteWeylElement) -> Result<RootSet> {
    Ok(sub
        .delta_j_k(k, Sign::Plus)?
        .iter()
        .map(|e| u.apply(e))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine::{word_element, AffineLetter};
    use crate::cartan::root_system;

    fn full(label: &str) -> SubSystem {
        let rs = root_system(label).unwrap();
        rs.sub_system(rs.full_index_set()).unwrap()
    }

    fn ar(m: i32, c: &[i32]) -> AffineRoot {
        AffineRoot::real(m, RootVec::from_slice(c))
    }

    fn id(sub: &SubSystem) -> AffineWeylElement {
        AffineWeylElement::identity(sub.root_system())
    }

    fn fid(sub: &SubSystem) -> FiniteWeylElement {
        FiniteWeylElement::identity(sub.root_system())
    }

    #[test]
    fn window_examples() {
        let sub = full("A1");
        assert!(is_biconvex_window(&AffineRootSet::new(), &sub, 3).unwrap());
        assert!(is_biconvex_window(&AffineRootSet::from([ar(0, &[1])]), &sub, 3).unwrap());
        let bad = AffineRootSet::from([ar(0, &[1]), ar(1, &[-1])]);
        assert!(!is_biconvex_window(&bad, &sub, 1).unwrap());
        assert!(is_biconvex_window(&AffineRootSet::from([ar(0, &[-1])]), &sub, 1).is_err());
    }

    #[test]
    fn nabla_examples() {
        let sub = full("A1");
        let rs = sub.root_system();
        let p = BiconvexParam::new(&sub, Subset::EMPTY, fid(&sub), id(&sub)).unwrap();
        let v = nabla(&p, 3).unwrap();
        assert_eq!(
            v.materialize(),
            AffineRootSet::from([ar(1, &[-1]), ar(2, &[-1]), ar(3, &[-1])])
        );
        assert!(v.contains(&ar(100, &[-1])));

        let s1 = FiniteWeylElement::simple(rs, 0);
        let p = BiconvexParam::new(&sub, Subset::EMPTY, s1, id(&sub)).unwrap();
        assert_eq!(
            nabla(&p, 2).unwrap().materialize(),
            AffineRootSet::from([ar(0, &[1]), ar(1, &[1]), ar(2, &[1])])
        );

        let y = word_element(&[AffineLetter::Affine(0), AffineLetter::Classical(0)], &sub).unwrap();
        let p = BiconvexParam::new(&sub, Subset::full(1), fid(&sub), y.clone()).unwrap();
        assert!(!p.is_infinite());
        let v = nabla(&p, 10).unwrap();
        assert_eq!(v.materialize(), inversion_set_affine(&y, &sub).unwrap());
    }

    #[test]
    fn invalid_params() {
        let sub = full("A2");
        let rs = sub.root_system();
        let s1 = FiniteWeylElement::simple(rs, 0);
        assert!(BiconvexParam::new(&sub, Subset::from_indices([0]), s1, id(&sub)).is_err());
        let y = word_element(&[AffineLetter::Classical(1)], &sub).unwrap();
        assert!(BiconvexParam::new(&sub, Subset::from_indices([0]), fid(&sub), y).is_err());
    }

    #[test]
    fn parametrize_examples() {
        let sub = full("A1");
        let tail = RootSet::from([RootVec::from_slice(&[-1])]);
        let b = TailedSet::new(
            &sub,
            false,
            tail,
            AffineRootSet::new(),
            AffineRootSet::new(),
        )
        .unwrap();
        let p = parametrize(&b, &sub).unwrap();
        assert_eq!(p.k(), Subset::EMPTY);
        assert!(p.u().is_identity() && p.y().is_identity());

        let y = word_element(&[AffineLetter::Affine(0)], &sub).unwrap();
        let b = TailedSet::finite(&sub, inversion_set_affine(&y, &sub).unwrap()).unwrap();
        let p = parametrize(&b, &sub).unwrap();
        assert_eq!((p.k(), p.y()), (Subset::full(1), &y));

        let sub = full("A2");
        let k = Subset::from_indices([0]);
        let sub_k = sub.root_system().sub_system(k).unwrap();
        let y = word_element(&[AffineLetter::Classical(0)], &sub_k).unwrap();
        let p = BiconvexParam::new(&sub, k, fid(&sub), y).unwrap();
        let v = nabla(&p, 5).unwrap();
        assert!(v.finite.contains(&ar(0, &[1, 0])));
        assert_eq!(parametrize(&v.to_tailed(), &sub).unwrap(), p);
    }

    #[test]
    fn parametrize_rejects_non_biconvex() {
        let sub = full("A2");
        let tail = RootSet::from([RootVec::from_slice(&[1, 0]), RootVec::from_slice(&[0, 1])]);
        let b = TailedSet::new(
            &sub,
            false,
            tail,
            AffineRootSet::new(),
            AffineRootSet::new(),
        )
        .unwrap();
        assert!(matches!(parametrize(&b, &sub), Err(Error::NotBiconvex(_))));
        let b = TailedSet::finite(&sub, AffineRootSet::from([ar(0, &[1, 1])])).unwrap();
        assert!(matches!(parametrize(&b, &sub), Err(Error::NotBiconvex(_))));
    }

    #[test]
    fn dot_subset_examples() {
        let sub = full("A1");
        let s1 = FiniteWeylElement::simple(sub.root_system(), 0);
        let p = BiconvexParam::new(&sub, Subset::EMPTY, fid(&sub), id(&sub)).unwrap();
        let q = BiconvexParam::new(&sub, Subset::EMPTY, s1, id(&sub)).unwrap();
        assert!(dot_subset(&p, &p).unwrap());
        assert!(!dot_subset(&p, &q).unwrap());

        let sub = full("A2");
        let a = BiconvexParam::new(&sub, Subset::from_indices([0]), fid(&sub), id(&sub)).unwrap();
        let b = BiconvexParam::new(&sub, Subset::EMPTY, fid(&sub), id(&sub)).unwrap();
        assert!(dot_subset(&a, &b).unwrap());
        assert!(!dot_subset(&b, &a).unwrap());
    }

    #[test]
    fn bruteforce_examples() {
        let sub = full("A1");
        let sets = enumerate_biconvex_bruteforce(&sub, 1, 1).unwrap();
        assert_eq!(
            sets,
            vec![
                AffineRootSet::new(),
                AffineRootSet::from([ar(0, &[1])]),
                AffineRootSet::from([ar(1, &[-1])]),
            ]
        );
        assert_eq!(
            enumerate_biconvex_bruteforce(&sub, 1, 0).unwrap(),
            vec![AffineRootSet::new()]
        );
        let with_a1: Vec<_> = enumerate_biconvex_bruteforce(&sub, 2, 2)
            .unwrap()
            .into_iter()
            .filter(|s| s.len() == 2 && s.contains(&ar(0, &[1])))
            .collect();
        assert_eq!(
            with_a1,
            vec![AffineRootSet::from([ar(0, &[1]), ar(1, &[1])])]
        );
        assert!(matches!(
            enumerate_biconvex_bruteforce(&full("C2"), 5, 2),
            Err(Error::WindowTooLarge { .. })
        ));
    }

    #[test]
    fn classification_examples() {
        let sub = full("A1");
        let empty = TailedSet::finite(&sub, AffineRootSet::new()).unwrap();
        assert!(
            matches!(classify_biconvex(&empty, &sub).unwrap(), BiconvexClass::Finite(z) if z.is_identity())
        );
        let everything = empty.complement(&sub);
        assert!(
            matches!(classify_biconvex(&everything, &sub).unwrap(), BiconvexClass::CoFinite(z) if z.is_identity())
        );

        let up = TailedSet::new(
            &sub,
            false,
            RootSet::from([RootVec::from_slice(&[1])]),
            AffineRootSet::new(),
            AffineRootSet::new(),
        )
        .unwrap();
        let class = classify_biconvex(&up.complement(&sub), &sub).unwrap();
        assert_eq!(class.tag(), 'd');
        match class {
            BiconvexClass::CoInfinite(p) => {
                assert_eq!(p.k(), Subset::EMPTY);
                assert_eq!(*p.u(), FiniteWeylElement::simple(sub.root_system(), 0));
                assert!(p.y().is_identity());
            }
            other => panic!("unexpected {other:?}"),
        }
        let bad = TailedSet::finite(&sub, AffineRootSet::from([ar(1, &[1])])).unwrap();
        assert!(classify_biconvex(&bad, &sub).is_err());
    }

    #[test]
    fn tail_inference_and_window_reading() {
        let sub = full("A2");
        let rs = sub.root_system();
        for p in enumerate_params(&sub, 2, true).unwrap() {
            let n = (p.u().length() + 4) as i32;
            let members = nabla(&p, n).unwrap().materialize();
            let tail = infer_tail(&members, &sub, n);
            let b = TailedSet::from_window(&sub, tail, &members, n).unwrap();
            assert_eq!(parametrize(&b, &sub).unwrap(), p, "{p:?}");
        }
        assert_eq!(rs.rank(), 2);
    }

    #[test]
    fn maximal_views() {
        let sub = full("A2");
        for p in enumerate_params(&sub, 1, false).unwrap() {
            if p.k().is_empty() {
                continue;
            }
            let top = BiconvexParam::new(&sub, Subset::EMPTY, p.u().clone(), id(&sub)).unwrap();
            assert!(dot_subset(&p, &top).unwrap());
            assert!(!dot_subset(&top, &p).unwrap());
        }
    }

    #[test]
    fn json_roundtrip() {
        let sub = full("A2");
        let rs = sub.root_system();
        for p in enumerate_params(&sub, 2, false).unwrap() {
            let json = serde_json::to_string(&ParamJson::from(&p)).unwrap();
            let back: ParamJson = serde_json::from_str(&json).unwrap();
            assert_eq!(back.to_param(rs).unwrap(), p);
            let v = nabla(&p, 4).unwrap();
            let tailed = v.to_json().to_tailed(&sub).unwrap();
            assert_eq!(tailed, v.to_tailed());
        }
    }
}

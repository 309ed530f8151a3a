//! The finite Weyl group and the classification of closed subsets of a finite
//! root system.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::cartan::{RootSystem, Sign, SubSystem};
use crate::error::{Error, Result};
use crate::vector::{RootVec, Subset, MAX_RANK};

/// A finite set of classical roots with deterministic iteration order.
pub type RootSet = BTreeSet<RootVec>;

type Matrix = [RootVec; MAX_RANK];

/// An element `w` of the finite Weyl group.
///
/// Stored as the images of the simple roots and simple coroots under `w` and
/// under `w^-1`, so that every action needed downstream is integral.
#[derive(Clone)]
pub struct FiniteWeylElement {
    rs: Arc<RootSystem>,
    root: Matrix,
    coroot: Matrix,
    inv_root: Matrix,
    inv_coroot: Matrix,
}

impl PartialEq for FiniteWeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.rs.tag() == other.rs.tag() && self.root == other.root
    }
}

impl Eq for FiniteWeylElement {}

impl Hash for FiniteWeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.rs.tag().hash(state);
        self.root.hash(state);
    }
}

fn apply_matrix(m: &Matrix, rank: usize, v: &RootVec) -> RootVec {
    let mut out = RootVec::ZERO;
    for (i, col) in m.iter().enumerate().take(rank) {
        let c = v.get(i);
        if c != 0 {
            out = out.add_scaled(c, col);
        }
    }
    out
}

impl FiniteWeylElement {
    pub fn identity(rs: &Arc<RootSystem>) -> Self {
        let mut m = [RootVec::ZERO; MAX_RANK];
        for (i, col) in m.iter_mut().enumerate().take(rs.rank()) {
            *col = RootVec::unit(i);
        }
        FiniteWeylElement {
            rs: Arc::clone(rs),
            root: m,
            coroot: m,
            inv_root: m,
            inv_coroot: m,
        }
    }

    /// The simple reflection `s_i` (0-based index).
    pub fn simple(rs: &Arc<RootSystem>, i: usize) -> Self {
        assert!(i < rs.rank(), "simple reflection index {i} out of range");
        let mut root = [RootVec::ZERO; MAX_RANK];
        let mut coroot = [RootVec::ZERO; MAX_RANK];
        for j in 0..rs.rank() {
            root[j] = rs.reflect(i, &RootVec::unit(j));
            coroot[j] = rs.reflect_coroot(i, &RootVec::unit(j));
        }
        FiniteWeylElement {
            rs: Arc::clone(rs),
            root,
            coroot,
            inv_root: root,
            inv_coroot: coroot,
        }
    }

    /// The reflection `s_beta` in an arbitrary root.
    pub fn reflection(rs: &Arc<RootSystem>, beta: &RootVec) -> Result<Self> {
        if !rs.is_root(beta) {
            return Err(Error::NotInSubsystem(beta.to_string()));
        }
        let beta_vee = rs.coroot_coords(beta);
        let mut root = [RootVec::ZERO; MAX_RANK];
        let mut coroot = [RootVec::ZERO; MAX_RANK];
        for j in 0..rs.rank() {
            let e = RootVec::unit(j);
            // s_beta(v) = v - (v|beta^vee) beta, and dually on coroots
            root[j] = e.add_scaled(-rs.pair_root_coroot(&e, &beta_vee), beta);
            coroot[j] = e.add_scaled(-rs.pair_root_coroot(beta, &e), &beta_vee);
        }
        Ok(FiniteWeylElement {
            rs: Arc::clone(rs),
            root,
            coroot,
            inv_root: root,
            inv_coroot: coroot,
        })
    }

    /// Product `s_{w[0]} s_{w[1]} ...` of simple reflections (0-based indices).
    pub fn from_word(rs: &Arc<RootSystem>, word: &[usize]) -> Self {
        word.iter()
            .fold(Self::identity(rs), |acc, &i| acc.mul_simple_right(i))
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn is_identity(&self) -> bool {
        (0..self.rank()).all(|i| self.root[i] == RootVec::unit(i))
    }

    /// `w(v)` for `v` in root coordinates.
    #[inline]
    pub fn apply(&self, v: &RootVec) -> RootVec {
        apply_matrix(&self.root, self.rank(), v)
    }

    /// `w^-1(v)` for `v` in root coordinates.
    #[inline]
    pub fn apply_inverse(&self, v: &RootVec) -> RootVec {
        apply_matrix(&self.inv_root, self.rank(), v)
    }

    /// `w(y)` for `y` in coroot coordinates.
    #[inline]
    pub fn apply_coroot(&self, y: &RootVec) -> RootVec {
        apply_matrix(&self.coroot, self.rank(), y)
    }

    /// `w^-1(y)` for `y` in coroot coordinates.
    #[inline]
    pub fn apply_inverse_coroot(&self, y: &RootVec) -> RootVec {
        apply_matrix(&self.inv_coroot, self.rank(), y)
    }

    pub fn apply_set<'a>(&self, set: impl IntoIterator<Item = &'a RootVec>) -> RootSet {
        set.into_iter().map(|v| self.apply(v)).collect()
    }

    pub fn inverse(&self) -> Self {
        FiniteWeylElement {
            rs: Arc::clone(&self.rs),
            root: self.inv_root,
            coroot: self.inv_coroot,
            inv_root: self.root,
            inv_coroot: self.coroot,
        }
    }

    /// `self * other`; fails if the factors live in different root systems.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.rs.tag() != other.rs.tag() || *self.rs != *other.rs {
            return Err(Error::MixedSystems);
        }
        let l = self.rank();
        let mut out = self.clone();
        for i in 0..l {
            out.root[i] = self.apply(&other.root[i]);
            out.coroot[i] = self.apply_coroot(&other.coroot[i]);
            out.inv_root[i] = other.apply_inverse(&self.inv_root[i]);
            out.inv_coroot[i] = other.apply_inverse_coroot(&self.inv_coroot[i]);
        }
        Ok(out)
    }

    /// `self * s_i`.
    pub fn mul_simple_right(&self, i: usize) -> Self {
        self.try_mul(&Self::simple(&self.rs, i))
            .expect("same system")
    }

    /// `s_i * self`.
    pub fn mul_simple_left(&self, i: usize) -> Self {
        Self::simple(&self.rs, i)
            .try_mul(self)
            .expect("same system")
    }

    /// `{beta > 0 : w^-1(beta) < 0}`, the full inversion set.
    pub fn inversions(&self) -> RootSet {
        self.rs
            .positive_roots()
            .iter()
            .copied()
            .filter(|b| self.apply_inverse(b).is_negative())
            .collect()
    }

    /// Inversion set restricted to the positive roots of `Delta_J`.
    pub fn inversion_set(&self, sub: &SubSystem) -> RootSet {
        sub.positive_roots()
            .iter()
            .copied()
            .filter(|b| self.apply_inverse(b).is_negative())
            .collect()
    }

    pub fn length(&self) -> usize {
        self.rs
            .positive_roots()
            .iter()
            .filter(|b| self.apply_inverse(b).is_negative())
            .count()
    }

    /// Reduced word by repeatedly stripping the smallest left descent (0-based).
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut cur = self.clone();
        let mut word = Vec::new();
        while let Some(i) = (0..self.rank()).find(|&i| cur.inv_root[i].is_negative()) {
            word.push(i);
            cur = cur.mul_simple_left(i);
        }
        word
    }

    /// Whether `w` lies in the parabolic subgroup generated by `{s_j : j in J}`.
    pub fn is_in_parabolic(&self, j: Subset) -> bool {
        self.inversions()
            .iter()
            .all(|b| b.support().is_subset_of(j))
    }

    /// Whether `w` is the minimal representative of its coset `w W_K`.
    pub fn is_min_coset_rep(&self, k: Subset) -> bool {
        k.iter().all(|i| self.root[i].is_positive())
    }

    /// Images of all simple roots, for display.
    pub fn simple_images(&self) -> Vec<RootVec> {
        self.root[..self.rank()].to_vec()
    }
}

impl fmt::Debug for FiniteWeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "W({})", self)
    }
}

impl fmt::Display for FiniteWeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word = self.reduced_word();
        if word.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = word.iter().map(|i| format!("s{}", i + 1)).collect();
        f.write_str(&parts.join(" "))
    }
}

impl std::ops::Mul for &FiniteWeylElement {
    type Output = FiniteWeylElement;

    fn mul(self, rhs: &FiniteWeylElement) -> FiniteWeylElement {
        self.try_mul(rhs)
            .expect("cannot multiply elements of different root systems")
    }
}

/// `w = w^K w_K` with `w^K` minimal in its coset `w W_K` and `w_K in W_K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetDecomposition {
    pub w_upper: FiniteWeylElement,
    pub w_lower: FiniteWeylElement,
}

pub fn coset_decompose(
    w: &FiniteWeylElement,
    sub: &SubSystem,
    k: Subset,
) -> Result<CosetDecomposition> {
    let j = sub.index_set();
    if !k.is_subset_of(j) {
        return Err(Error::NotSubset {
            sub: k.to_string(),
            sup: j.to_string(),
        });
    }
    if !w.is_in_parabolic(j) {
        return Err(Error::NotInSubgroup(j.to_string()));
    }
    let mut upper = w.clone();
    let mut lower_rev = Vec::new();
    while let Some(i) = k.iter().find(|&i| upper.root[i].is_negative()) {
        upper = upper.mul_simple_right(i);
        lower_rev.push(i);
    }
    lower_rev.reverse();
    let lower = FiniteWeylElement::from_word(w.root_system(), &lower_rev);
    Ok(CosetDecomposition {
        w_upper: upper,
        w_lower: lower,
    })
}

/// Every element of the parabolic subgroup `W_J`, ordered by length then by
/// reduced word.
pub fn subgroup_elements(sub: &SubSystem) -> Vec<FiniteWeylElement> {
    let rs = sub.root_system();
    let id = FiniteWeylElement::identity(rs);
    let mut seen: HashSet<FiniteWeylElement> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    let mut out = Vec::new();
    while let Some(w) = queue.pop_front() {
        for i in sub.index_set().iter() {
            let next = w.mul_simple_right(i);
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
        out.push(w);
    }
    out.sort_by_cached_key(|w| (w.length(), w.reduced_word()));
    out
}

/// Recovers `w` from a set `X` of positive roots with `X = Phi(w)`, by
/// repeatedly removing the smallest simple root `alpha_s` in `X` and
/// reflecting. Returns `None` when `X` is not an inversion set.
pub fn element_from_inversions(rs: &Arc<RootSystem>, set: &RootSet) -> Option<FiniteWeylElement> {
    if set.iter().any(|b| !b.is_positive() || !rs.is_root(b)) {
        return None;
    }
    let mut x = set.clone();
    let mut word = Vec::new();
    while !x.is_empty() {
        let s = (0..rs.rank()).find(|&i| x.contains(&RootVec::unit(i)))?;
        x.remove(&RootVec::unit(s));
        x = x.iter().map(|b| rs.reflect(s, b)).collect();
        word.push(s);
    }
    Some(FiniteWeylElement::from_word(rs, &word))
}

/// Flags and parts of a subset `P` of `Delta_J`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetClassification {
    pub closed: bool,
    pub coclosed_in_j: bool,
    pub biclosed_in_j: bool,
    pub parabolic_in_j: bool,
    pub symmetric: bool,
    pub pointed: bool,
    pub pointed_part: RootSet,
    pub symmetric_part: RootSet,
}

/// `P` is closed: `a, b in P` and `a + b` a root imply `a + b in P`.
pub fn is_closed(rs: &RootSystem, p: &RootSet) -> bool {
    p.iter().all(|a| {
        p.iter().all(|b| {
            let s = *a + *b;
            !rs.is_root(&s) || p.contains(&s)
        })
    })
}

fn check_within(sub: &SubSystem, p: &RootSet) -> Result<()> {
    match p.iter().find(|r| !sub.contains_root(r)) {
        Some(r) => Err(Error::NotInSubsystem(r.to_string())),
        None => Ok(()),
    }
}

fn complement(sub: &SubSystem, p: &RootSet) -> RootSet {
    sub.roots()
        .iter()
        .copied()
        .filter(|r| !p.contains(r))
        .collect()
}

pub fn classify_subset(p: &RootSet, sub: &SubSystem) -> Result<SubsetClassification> {
    check_within(sub, p)?;
    let rs = sub.root_system();
    let closed = is_closed(rs, p);
    let coclosed_in_j = is_closed(rs, &complement(sub, p));
    let symmetric_part: RootSet = p.iter().copied().filter(|r| p.contains(&-*r)).collect();
    let pointed_part: RootSet = p.iter().copied().filter(|r| !p.contains(&-*r)).collect();
    let covers = sub
        .roots()
        .iter()
        .all(|r| p.contains(r) || p.contains(&-*r));
    Ok(SubsetClassification {
        closed,
        coclosed_in_j,
        biclosed_in_j: closed && coclosed_in_j,
        parabolic_in_j: closed && covers,
        symmetric: pointed_part.is_empty(),
        pointed: symmetric_part.is_empty(),
        pointed_part,
        symmetric_part,
    })
}

/// Some `w in W_J` with `wP` inside the negative roots of `Delta_J`, for a
/// pointed closed `P`.
///
/// Lowers `sigma = sum(P)` by simple reflections with `<alpha_j^vee, sigma> > 0`
/// (smallest `j` first); each step strictly lowers the height of `sigma`. If
/// the resulting translate is not yet negative, the subgroup is searched in
/// length order from there.
pub fn positivize(p: &RootSet, sub: &SubSystem) -> Result<FiniteWeylElement> {
    let class = classify_subset(p, sub)?;
    if !(class.closed && class.pointed) {
        return Err(Error::NotPointedClosed);
    }
    let rs = sub.root_system();
    let mut w = FiniteWeylElement::identity(rs);
    let mut sigma = p.iter().fold(RootVec::ZERO, |acc, r| acc + *r);
    let all_negative = |w: &FiniteWeylElement| p.iter().all(|r| w.apply(r).is_negative());
    loop {
        if all_negative(&w) {
            return Ok(w);
        }
        let step = sub.index_set().iter().find(|&j| {
            let pairing: i32 = (0..rs.rank())
                .map(|k| rs.cartan().entry(j, k) * sigma.get(k))
                .sum();
            pairing > 0
        });
        match step {
            Some(j) => {
                sigma = rs.reflect(j, &sigma);
                w = w.mul_simple_left(j);
            }
            None => break,
        }
    }
    subgroup_elements(sub)
        .into_iter()
        .map(|v| &v * &w)
        .find(|v| all_negative(v))
        .ok_or(Error::Internal(
            "no element maps a pointed closed set to negative roots".into(),
        ))
}

/// `u Delta^K_{J-}` as a set.
pub fn translate_delta_j_k(sub: &SubSystem, k: Subset, u: &FiniteWeylElement) -> Result<RootSet> {
    Ok(sub
        .delta_j_k(k, Sign::Minus)?
        .iter()
        .map(|r| u.apply(r))
        .collect())
}

/// The unique `(K, u)` with `u` minimal in `u W_K` and `P = u Delta^K_{J-}`.
pub fn factor_pointed_biclosed(
    p: &RootSet,
    sub: &SubSystem,
) -> Result<(Subset, FiniteWeylElement)> {
    let class = classify_subset(p, sub)?;
    if !(class.biclosed_in_j && class.pointed) {
        return Err(Error::NotPointedBiclosed);
    }
    let rs = sub.root_system();
    let positive_part: RootSet = p.iter().copied().filter(|r| r.is_positive()).collect();
    let u = element_from_inversions(rs, &positive_part)
        .ok_or_else(|| Error::Internal("positive part of P is not an inversion set".into()))?;
    let k = Subset::from_indices(sub.index_set().iter().filter(|&j| {
        let image = u.apply(&RootVec::unit(j));
        !p.contains(&image) && !p.contains(&-image)
    }));
    if !u.is_min_coset_rep(k) || translate_delta_j_k(sub, k, &u)? != *p {
        return Err(Error::Internal(format!(
            "factorization of {} failed validation",
            format_set(p)
        )));
    }
    Ok((k, u))
}

/// `{a, b, ...}` using root strings.
pub fn format_set(p: &RootSet) -> String {
    let parts: Vec<String> = p.iter().map(|r| r.to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}

/// JSON form: type label plus a 1-based reduced word.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteWeylJson {
    #[serde(rename = "type")]
    pub type_label: String,
    pub word: Vec<usize>,
}

impl From<&FiniteWeylElement> for FiniteWeylJson {
    fn from(w: &FiniteWeylElement) -> Self {
        FiniteWeylJson {
            type_label: w.rs.label().to_string(),
            word: w.reduced_word().iter().map(|i| i + 1).collect(),
        }
    }
}

/// Parses a 1-based word into an element.
pub fn element_from_labels(rs: &Arc<RootSystem>, word: &[usize]) -> Result<FiniteWeylElement> {
    let mut idx = Vec::with_capacity(word.len());
    for &l in word {
        if l == 0 || l > rs.rank() {
            return Err(Error::Parse(format!(
                "letter {l} out of range for {}",
                rs.label()
            )));
        }
        idx.push(l - 1);
    }
    Ok(FiniteWeylElement::from_word(rs, &idx))
}

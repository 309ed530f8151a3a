//! Affine roots and the affine Weyl group in translation form `x = t_lambda w`.
//!
//! A real affine root `m delta + eps` is stored as its level `m` and classical
//! part `eps`; imaginary roots have a zero classical part. Translation parts
//! are kept in simple-coroot coordinates so that
//! `t_lambda(mu) = mu - (mu | lambda) delta` is integral.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::cartan::{RootSystem, Sign, SubSystem};
use crate::error::{Error, Result};
use crate::finweyl::{element_from_labels, FiniteWeylElement, RootSet};
use crate::vector::{RootVec, Subset};

/// `m delta + eps`; imaginary when `eps = 0`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineRoot {
    pub level: i32,
    pub classical: RootVec,
}

pub type AffineRootSet = BTreeSet<AffineRoot>;

impl AffineRoot {
    pub fn real(level: i32, classical: RootVec) -> Self {
        debug_assert!(!classical.is_zero());
        AffineRoot { level, classical }
    }

    pub fn imaginary(level: i32) -> Self {
        AffineRoot {
            level,
            classical: RootVec::ZERO,
        }
    }

    pub fn is_real(&self) -> bool {
        !self.classical.is_zero()
    }

    pub fn is_imaginary(&self) -> bool {
        self.classical.is_zero() && self.level != 0
    }

    pub fn is_positive(&self) -> bool {
        self.level > 0 || (self.level == 0 && self.classical.is_positive())
    }

    pub fn is_negative(&self) -> bool {
        (-*self).is_positive()
    }

    /// Height with `delta` counted as `ht(theta) + 1`.
    pub fn height(&self, rs: &RootSystem) -> i32 {
        let delta = rs.positive_roots().last().map_or(0, |t| t.height()) + 1;
        self.level * delta + self.classical.height()
    }
}

impl std::ops::Neg for AffineRoot {
    type Output = AffineRoot;
    fn neg(self) -> AffineRoot {
        AffineRoot {
            level: -self.level,
            classical: -self.classical,
        }
    }
}

impl std::ops::Add for AffineRoot {
    type Output = AffineRoot;
    fn add(self, rhs: AffineRoot) -> AffineRoot {
        AffineRoot {
            level: self.level + rhs.level,
            classical: self.classical + rhs.classical,
        }
    }
}

impl std::ops::Sub for AffineRoot {
    type Output = AffineRoot;
    fn sub(self, rhs: AffineRoot) -> AffineRoot {
        self + (-rhs)
    }
}

impl fmt::Display for AffineRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let delta = match self.level {
            0 => String::new(),
            1 => "δ".to_string(),
            -1 => "-δ".to_string(),
            m => format!("{m}δ"),
        };
        if self.classical.is_zero() {
            return f.write_str(if delta.is_empty() { "0" } else { &delta });
        }
        let eps = self.classical.to_root_string();
        if delta.is_empty() {
            f.write_str(&eps)
        } else if eps.starts_with('-') {
            write!(f, "{delta}{eps}")
        } else {
            write!(f, "{delta}+{eps}")
        }
    }
}

impl fmt::Debug for AffineRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// JSON form `{"level": m, "classical": [coords] | null}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineRootJson {
    pub level: i32,
    pub classical: Option<Vec<i32>>,
}

impl AffineRootJson {
    pub fn new(root: &AffineRoot, rank: usize) -> Self {
        AffineRootJson {
            level: root.level,
            classical: root.is_real().then(|| root.classical.coords(rank).to_vec()),
        }
    }

    pub fn to_root(&self, rs: &RootSystem) -> Result<AffineRoot> {
        match &self.classical {
            None => Ok(AffineRoot::imaginary(self.level)),
            Some(c) => {
                if c.len() != rs.rank() {
                    return Err(Error::Parse(format!("root {c:?} has the wrong rank")));
                }
                let v = RootVec::from_slice(c);
                if !rs.is_root(&v) {
                    return Err(Error::Parse(format!(
                        "{c:?} is not a root of {}",
                        rs.label()
                    )));
                }
                Ok(AffineRoot::real(self.level, v))
            }
        }
    }
}

/// A simple reflection of `W_J`: `Classical(j)` is `s_{alpha_j}` and
/// `Affine(c)` is `s_{delta - theta_c}` for the `c`-th component of `J`.
/// Indices are 0-based. Classical letters sort before affine ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AffineLetter {
    Classical(usize),
    Affine(usize),
}

impl fmt::Display for AffineLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AffineLetter::Classical(j) => write!(f, "c{}", j + 1),
            AffineLetter::Affine(c) => write!(f, "a{}", c + 1),
        }
    }
}

/// Letter JSON `{"c": j}` or `{"a": c}`, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LetterJson {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub c: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub a: Option<usize>,
}

impl From<AffineLetter> for LetterJson {
    fn from(l: AffineLetter) -> Self {
        match l {
            AffineLetter::Classical(j) => LetterJson {
                c: Some(j + 1),
                a: None,
            },
            AffineLetter::Affine(c) => LetterJson {
                c: None,
                a: Some(c + 1),
            },
        }
    }
}

impl LetterJson {
    pub fn to_letter(&self, sub: &SubSystem) -> Result<AffineLetter> {
        let letter = match (self.c, self.a) {
            (Some(j), None) if j >= 1 => AffineLetter::Classical(j - 1),
            (None, Some(c)) if c >= 1 => AffineLetter::Affine(c - 1),
            _ => return Err(Error::Parse(format!("malformed letter {self:?}"))),
        };
        check_letter(letter, sub)?;
        Ok(letter)
    }
}

/// Parses `c1`, `a2`, ... (1-based).
pub fn parse_letter(text: &str, sub: &SubSystem) -> Result<AffineLetter> {
    let t = text.trim();
    let bad = || Error::Parse(format!("malformed letter `{t}`"));
    let (kind, rest) = t.split_at(t.char_indices().nth(1).map_or(t.len(), |(i, _)| i));
    let n: usize = rest.parse().map_err(|_| bad())?;
    if n == 0 {
        return Err(bad());
    }
    let letter = match kind {
        "c" | "C" => AffineLetter::Classical(n - 1),
        "a" | "A" => AffineLetter::Affine(n - 1),
        _ => return Err(bad()),
    };
    check_letter(letter, sub)?;
    Ok(letter)
}

pub fn format_word(word: &[AffineLetter]) -> String {
    let parts: Vec<String> = word.iter().map(|l| l.to_string()).collect();
    format!("[{}]", parts.join(","))
}

fn check_letter(letter: AffineLetter, sub: &SubSystem) -> Result<()> {
    let ok = match letter {
        AffineLetter::Classical(j) => sub.index_set().contains(j),
        AffineLetter::Affine(c) => c < sub.component_count(),
    };
    if ok {
        Ok(())
    } else {
        Err(Error::NotInSubgroup(format!(
            "{letter} for J = {}",
            sub.index_set()
        )))
    }
}

/// All letters of `S_J` in their canonical order.
pub fn letters(sub: &SubSystem) -> Vec<AffineLetter> {
    sub.index_set()
        .iter()
        .map(AffineLetter::Classical)
        .chain((0..sub.component_count()).map(AffineLetter::Affine))
        .collect()
}

/// The simple root `alpha_s` attached to a letter.
pub fn simple_root(letter: AffineLetter, sub: &SubSystem) -> AffineRoot {
    match letter {
        AffineLetter::Classical(j) => AffineRoot::real(0, RootVec::unit(j)),
        AffineLetter::Affine(c) => AffineRoot::real(1, -sub.highest_roots()[c]),
    }
}

/// `x = t_lambda w` with `lambda` in simple-coroot coordinates.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AffineWeylElement {
    lambda: RootVec,
    wbar: FiniteWeylElement,
}

impl AffineWeylElement {
    pub fn identity(rs: &Arc<RootSystem>) -> Self {
        AffineWeylElement {
            lambda: RootVec::ZERO,
            wbar: FiniteWeylElement::identity(rs),
        }
    }

    pub fn new(lambda: RootVec, wbar: FiniteWeylElement) -> Self {
        AffineWeylElement { lambda, wbar }
    }

    pub fn translation(rs: &Arc<RootSystem>, lambda: RootVec) -> Self {
        AffineWeylElement {
            lambda,
            wbar: FiniteWeylElement::identity(rs),
        }
    }

    pub fn from_finite(wbar: FiniteWeylElement) -> Self {
        AffineWeylElement {
            lambda: RootVec::ZERO,
            wbar,
        }
    }

    pub fn lambda(&self) -> &RootVec {
        &self.lambda
    }

    pub fn wbar(&self) -> &FiniteWeylElement {
        &self.wbar
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        self.wbar.root_system()
    }

    pub fn is_identity(&self) -> bool {
        self.lambda.is_zero() && self.wbar.is_identity()
    }

    /// `(t_l w)(t_m v) = t_{l + w m} (w v)`
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        let wbar = self.wbar.try_mul(&other.wbar)?;
        Ok(AffineWeylElement {
            lambda: self.lambda + self.wbar.apply_coroot(&other.lambda),
            wbar,
        })
    }

    pub fn inverse(&self) -> Self {
        let winv = self.wbar.inverse();
        AffineWeylElement {
            lambda: -winv.apply_coroot(&self.lambda),
            wbar: winv,
        }
    }

    /// `x(m delta + eps) = (m - (w eps | lambda)) delta + w eps`; fixes imaginary roots.
    pub fn act(&self, b: &AffineRoot) -> AffineRoot {
        if b.classical.is_zero() {
            return *b;
        }
        let eps = self.wbar.apply(&b.classical);
        let rs = self.root_system();
        AffineRoot {
            level: b.level - rs.pair_root_coroot(&eps, &self.lambda),
            classical: eps,
        }
    }

    /// `x^-1(m delta + eps) = (m + (eps | lambda)) delta + w^-1 eps`.
    pub fn act_inverse(&self, b: &AffineRoot) -> AffineRoot {
        if b.classical.is_zero() {
            return *b;
        }
        let rs = self.root_system();
        AffineRoot {
            level: b.level + rs.pair_root_coroot(&b.classical, &self.lambda),
            classical: self.wbar.apply_inverse(&b.classical),
        }
    }

    pub fn act_set<'a>(&self, set: impl IntoIterator<Item = &'a AffineRoot>) -> AffineRootSet {
        set.into_iter().map(|b| self.act(b)).collect()
    }

    /// Membership in `W_J = W_J(finite) x| T_J`.
    pub fn is_in_subgroup(&self, j: Subset) -> bool {
        self.lambda.support().is_subset_of(j) && self.wbar.is_in_parabolic(j)
    }

    fn require_subgroup(&self, sub: &SubSystem) -> Result<()> {
        if self.is_in_subgroup(sub.index_set()) {
            Ok(())
        } else {
            Err(Error::NotInSubgroup(sub.index_set().to_string()))
        }
    }
}

impl fmt::Debug for AffineWeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "t({:?}) {}",
            self.lambda.coords(self.root_system().rank()),
            self.wbar
        )
    }
}

impl std::ops::Mul for &AffineWeylElement {
    type Output = AffineWeylElement;

    fn mul(self, rhs: &AffineWeylElement) -> AffineWeylElement {
        self.try_mul(rhs)
            .expect("cannot multiply elements of different root systems")
    }
}

/// The reflection attached to a letter: `(0, s_j)` or `(theta_c^vee, s_theta_c)`.
pub fn letter_element(letter: AffineLetter, sub: &SubSystem) -> Result<AffineWeylElement> {
    check_letter(letter, sub)?;
    let rs = sub.root_system();
    Ok(match letter {
        AffineLetter::Classical(j) => {
            AffineWeylElement::from_finite(FiniteWeylElement::simple(rs, j))
        }
        AffineLetter::Affine(c) => {
            let theta = sub.highest_roots()[c];
            AffineWeylElement::new(
                rs.coroot_coords(&theta),
                FiniteWeylElement::reflection(rs, &theta)?,
            )
        }
    })
}

/// Product of the letters of a word.
pub fn word_element(word: &[AffineLetter], sub: &SubSystem) -> Result<AffineWeylElement> {
    let mut x = AffineWeylElement::identity(sub.root_system());
    for &l in word {
        x = x.try_mul(&letter_element(l, sub)?)?;
    }
    Ok(x)
}

/// `Phi_J(x) = {beta in Delta_{J+} : x^-1(beta) < 0}`, computed in closed form.
///
/// For `beta = m delta + eps` the condition is `m + (eps|lambda) < 0`, or
/// `m + (eps|lambda) = 0` with `w^-1 eps < 0`.
pub fn inversion_set_affine(x: &AffineWeylElement, sub: &SubSystem) -> Result<AffineRootSet> {
    x.require_subgroup(sub)?;
    let rs = sub.root_system();
    let mut out = AffineRootSet::new();
    for eps in sub.roots() {
        let shift = rs.pair_root_coroot(eps, &x.lambda);
        let start = if eps.is_positive() { 0 } else { 1 };
        let mut end = -shift - 1;
        if x.wbar.apply_inverse(eps).is_negative() {
            end += 1;
        }
        for m in start..=end {
            out.insert(AffineRoot::real(m, *eps));
        }
    }
    Ok(out)
}

pub fn length_j(x: &AffineWeylElement, sub: &SubSystem) -> Result<usize> {
    x.require_subgroup(sub)?;
    let rs = sub.root_system();
    let mut total = 0usize;
    for eps in sub.roots() {
        let shift = rs.pair_root_coroot(eps, &x.lambda);
        let start = if eps.is_positive() { 0 } else { 1 };
        let end = -shift - 1 + i32::from(x.wbar.apply_inverse(eps).is_negative());
        total += (end - start + 1).max(0) as usize;
    }
    Ok(total)
}

/// Reduced word over `S_J`: repeatedly strip the first letter `s` with
/// `x^-1(alpha_s) < 0`.
pub fn reduced_word_j(x: &AffineWeylElement, sub: &SubSystem) -> Result<Vec<AffineLetter>> {
    x.require_subgroup(sub)?;
    let all = letters(sub);
    let elems: Vec<AffineWeylElement> = all
        .iter()
        .map(|&l| letter_element(l, sub))
        .collect::<Result<_>>()?;
    let roots: Vec<AffineRoot> = all.iter().map(|&l| simple_root(l, sub)).collect();
    let mut cur = x.clone();
    let mut word = Vec::new();
    while !cur.is_identity() {
        let i = (0..all.len())
            .find(|&i| cur.act_inverse(&roots[i]).is_negative())
            .ok_or_else(|| Error::Internal(format!("no descent for {cur:?}")))?;
        word.push(all[i]);
        cur = elems[i].try_mul(&cur)?;
    }
    Ok(word)
}

/// `<P>` truncated at level `N`.
pub fn angle_bracket<'a>(p: impl IntoIterator<Item = &'a RootVec>, cutoff: i32) -> AffineRootSet {
    let mut out = AffineRootSet::new();
    for eps in p {
        let start = if eps.is_positive() { 0 } else { 1 };
        for m in start..=cutoff {
            out.insert(AffineRoot::real(m, *eps));
        }
    }
    out
}

/// `Delta^K_J(u, +/-) = <u Delta^K_{J+/-}>` truncated at level `N`.
pub fn delta_u_pm(
    sub: &SubSystem,
    k: Subset,
    u: &FiniteWeylElement,
    sign: Sign,
    cutoff: i32,
) -> Result<AffineRootSet> {
    let tail: RootSet = sub.delta_j_k(k, sign)?.iter().map(|e| u.apply(e)).collect();
    Ok(angle_bracket(&tail, cutoff))
}

/// Positive roots of `Delta_J` with level at most `N`, imaginary ones included.
pub fn window(sub: &SubSystem, cutoff: i32, imaginary: bool) -> AffineRootSet {
    let mut out = angle_bracket(sub.roots(), cutoff);
    if imaginary && sub.component_count() > 0 {
        out.extend((1..=cutoff).map(AffineRoot::imaginary));
    }
    out
}

/// Elements of `W_J` of length at most `max_len`, found by breadth-first
/// search in the Cayley graph, each with its graph distance from `1`.
pub fn cayley_ball(sub: &SubSystem, max_len: usize) -> Result<Vec<(AffineWeylElement, usize)>> {
    let gens: Vec<AffineWeylElement> = letters(sub)
        .into_iter()
        .map(|l| letter_element(l, sub))
        .collect::<Result<_>>()?;
    let id = AffineWeylElement::identity(sub.root_system());
    let mut seen: HashSet<AffineWeylElement> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([(id, 0usize)]);
    let mut out = Vec::new();
    while let Some((x, d)) = queue.pop_front() {
        if d < max_len {
            for g in &gens {
                let next = x.try_mul(g)?;
                if seen.insert(next.clone()) {
                    queue.push_back((next, d + 1));
                }
            }
        }
        out.push((x, d));
    }
    Ok(out)
}

/// JSON form `{"lambda": [coroot coords], "wbar": [1-based word]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineWeylJson {
    pub lambda: Vec<i32>,
    pub wbar: Vec<usize>,
}

impl From<&AffineWeylElement> for AffineWeylJson {
    fn from(x: &AffineWeylElement) -> Self {
        AffineWeylJson {
            lambda: x.lambda.coords(x.root_system().rank()).to_vec(),
            wbar: x.wbar.reduced_word().iter().map(|i| i + 1).collect(),
        }
    }
}

impl AffineWeylJson {
    pub fn to_element(&self, rs: &Arc<RootSystem>) -> Result<AffineWeylElement> {
        if self.lambda.len() != rs.rank() {
            return Err(Error::Parse(format!(
                "lambda {:?} has the wrong rank",
                self.lambda
            )));
        }
        Ok(AffineWeylElement::new(
            RootVec::from_slice(&self.lambda),
            element_from_labels(rs, &self.wbar)?,
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::root_system;

    fn full(label: &str) -> SubSystem {
        let rs = root_system(label).unwrap();
        rs.sub_system(rs.full_index_set()).unwrap()
    }

    fn ar(m: i32, c: &[i32]) -> AffineRoot {
        AffineRoot::real(m, RootVec::from_slice(c))
    }

    const C1: AffineLetter = AffineLetter::Classical(0);
    const A1: AffineLetter = AffineLetter::Affine(0);

    #[test]
    fn translation_action() {
        let sub = full("A1");
        let rs = sub.root_system();
        let t = AffineWeylElement::translation(rs, RootVec::unit(0));
        assert_eq!(t.act(&AffineRoot::imaginary(1)), AffineRoot::imaginary(1));
        assert_eq!(t.act(&ar(0, &[1])), ar(-2, &[1]));
        let id = AffineWeylElement::identity(rs);
        assert_eq!(id.act(&ar(3, &[-1])), ar(3, &[-1]));
    }

    #[test]
    fn letters_are_involutions() {
        let sub = full("A1");
        let s0 = letter_element(A1, &sub).unwrap();
        assert_eq!(s0.act(&ar(0, &[1])), ar(2, &[-1]));
        assert!((&s0 * &s0).is_identity());
        let s1 = letter_element(C1, &sub).unwrap();
        assert_eq!(s1.act(&ar(0, &[1])), ar(0, &[-1]));
        for label in ["A2", "C2", "G2", "B3"] {
            let sub = full(label);
            for l in letters(&sub) {
                let x = letter_element(l, &sub).unwrap();
                assert!((&x * &x).is_identity());
                assert_eq!(x.act(&simple_root(l, &sub)), -simple_root(l, &sub));
            }
        }
    }

    #[test]
    fn inversion_sets() {
        let sub = full("A1");
        let rs = sub.root_system();
        assert!(inversion_set_affine(&AffineWeylElement::identity(rs), &sub)
            .unwrap()
            .is_empty());
        let s0 = word_element(&[A1], &sub).unwrap();
        assert_eq!(
            inversion_set_affine(&s0, &sub).unwrap(),
            AffineRootSet::from([ar(1, &[-1])])
        );
        let s0s1 = word_element(&[A1, C1], &sub).unwrap();
        assert_eq!(
            inversion_set_affine(&s0s1, &sub).unwrap(),
            AffineRootSet::from([ar(1, &[-1]), ar(2, &[-1])])
        );
    }

    #[test]
    fn reduced_words() {
        let sub = full("A1");
        let rs = sub.root_system();
        let t = AffineWeylElement::translation(rs, RootVec::unit(0));
        assert_eq!(reduced_word_j(&t, &sub).unwrap(), vec![A1, C1]);
        assert_eq!(length_j(&t, &sub).unwrap(), 2);
        assert!(reduced_word_j(&AffineWeylElement::identity(rs), &sub)
            .unwrap()
            .is_empty());

        let sub = full("A2");
        let rs = sub.root_system();
        let theta = rs.coroot_coords(&sub.highest_roots()[0]);
        let t = AffineWeylElement::translation(rs, theta);
        assert_eq!(length_j(&t, &sub).unwrap(), 4);
        let w = reduced_word_j(&t, &sub).unwrap();
        assert_eq!(w.len(), 4);
        assert_eq!(word_element(&w, &sub).unwrap(), t);
    }

    #[test]
    fn subgroup_membership() {
        let rs = root_system("A2").unwrap();
        let j1 = rs.sub_system(Subset::from_indices([0])).unwrap();
        let t = AffineWeylElement::translation(&rs, RootVec::unit(1));
        assert!(matches!(
            inversion_set_affine(&t, &j1),
            Err(Error::NotInSubgroup(_))
        ));
        assert!(matches!(
            letter_element(AffineLetter::Affine(1), &j1),
            Err(Error::NotInSubgroup(_))
        ));
    }

    #[test]
    fn angle_brackets() {
        let a = RootVec::unit(0);
        assert_eq!(
            angle_bracket(&[a], 2),
            AffineRootSet::from([ar(0, &[1]), ar(1, &[1]), ar(2, &[1])])
        );
        assert_eq!(
            angle_bracket(&[-a], 2),
            AffineRootSet::from([ar(1, &[-1]), ar(2, &[-1])])
        );
        assert!(angle_bracket(&[], 2).is_empty());
    }

    #[test]
    fn delta_u_pm_examples() {
        let sub = full("A1");
        let rs = sub.root_system();
        let id = FiniteWeylElement::identity(rs);
        assert_eq!(
            delta_u_pm(&sub, Subset::EMPTY, &id, Sign::Minus, 3).unwrap(),
            AffineRootSet::from([ar(1, &[-1]), ar(2, &[-1]), ar(3, &[-1])])
        );
        assert!(delta_u_pm(&sub, Subset::full(1), &id, Sign::Minus, 3)
            .unwrap()
            .is_empty());

        let sub = full("A2");
        let id = FiniteWeylElement::identity(sub.root_system());
        assert_eq!(
            delta_u_pm(&sub, Subset::from_indices([0]), &id, Sign::Minus, 1).unwrap(),
            AffineRootSet::from([ar(1, &[0, -1]), ar(1, &[-1, -1])])
        );
    }

    #[test]
    fn display_and_json() {
        assert_eq!(ar(2, &[-1, 0]).to_string(), "2δ-a1");
        assert_eq!(ar(1, &[1, 1]).to_string(), "δ+a1+a2");
        assert_eq!(ar(0, &[1]).to_string(), "a1");
        assert_eq!(AffineRoot::imaginary(1).to_string(), "δ");
        let j = serde_json::to_string(&AffineRootJson::new(&AffineRoot::imaginary(2), 2)).unwrap();
        assert_eq!(j, r#"{"level":2,"classical":null}"#);
        let j = serde_json::to_string(&LetterJson::from(A1)).unwrap();
        assert_eq!(j, r#"{"a":1}"#);
        let sub = full("A1");
        let back: LetterJson = serde_json::from_str(r#"{"c":1}"#).unwrap();
        assert_eq!(back.to_letter(&sub).unwrap(), C1);
        assert_eq!(parse_letter("a1", &sub).unwrap(), A1);
        assert!(parse_letter("c2", &sub).is_err());
    }

    #[test]
    fn ball_distances_match_lengths() {
        for label in ["A1", "A2", "C2", "G2"] {
            let sub = full(label);
            for (x, d) in cayley_ball(&sub, 5).unwrap() {
                assert_eq!(length_j(&x, &sub).unwrap(), d, "{label} {x:?}");
                assert_eq!(inversion_set_affine(&x, &sub).unwrap().len(), d);
                assert_eq!(reduced_word_j(&x, &sub).unwrap().len(), d);
            }
        }
    }
}

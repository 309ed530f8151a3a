//! Infinite reduced words over `S_J` as eventually periodic letter sequences,
//! the action of `W_J` on them, and the words `Z^K_J` attached to
//! translations.
//!
//! A word `head . period^inf` is certified on construction. Let `pi` be the
//! product of the period and `o` the order of its finite part, so that
//! `pi^o = t_nu`. Past the head, `phi(p + o|period|)` is `phi(p)` translated
//! by `z(head) t_nu z(head)^-1`, which only moves the level. The word is
//! reduced iff every `phi(p)` up to `|head| + o|period|` is positive and each
//! of those past the head gains level under that shift. The positions past
//! the head therefore split into finitely many tracks: arithmetic progressions
//! of levels over a fixed classical part.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::affine::{
    format_word, inversion_set_affine, letter_element, reduced_word_j, simple_root, word_element,
    AffineLetter, AffineRoot, AffineRootSet, AffineWeylElement, LetterJson,
};
use crate::biconvex::{parametrize, BiconvexParam, TailedSet};
use crate::cartan::SubSystem;
use crate::error::{Error, Result};
use crate::finweyl::RootSet;
use crate::vector::{RootVec, Subset};

#[derive(Clone, Debug, PartialEq, Eq)]
struct Track {
    /// 1-based position of the first root on this track.
    start: usize,
    root: AffineRoot,
    /// Level gained every `stride` positions.
    step: i32,
}

/// An eventually periodic infinite reduced word `head . period . period ...`.
#[derive(Clone)]
pub struct InfiniteWord {
    sub: SubSystem,
    head: Vec<AffineLetter>,
    period: Vec<AffineLetter>,
    head_phi: Vec<AffineRoot>,
    tracks: Vec<Track>,
    stride: usize,
}

impl PartialEq for InfiniteWord {
    fn eq(&self, other: &Self) -> bool {
        self.sub == other.sub && self.head == other.head && self.period == other.period
    }
}

impl Eq for InfiniteWord {}

/// Smallest `o >= 1` with `w^o = 1`.
fn finite_order(x: &AffineWeylElement) -> usize {
    let w = x.wbar();
    let mut cur = w.clone();
    let mut o = 1;
    while !cur.is_identity() {
        cur = &cur * w;
        o += 1;
    }
    o
}

impl InfiniteWord {
    pub fn new(
        sub: &SubSystem,
        head: Vec<AffineLetter>,
        period: Vec<AffineLetter>,
    ) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::NotReduced("period is empty".into()));
        }
        let rs = sub.root_system();
        let pi = word_element(&period, sub)?;
        let z_head = word_element(&head, sub)?;
        let order = finite_order(&pi);
        let stride = order * period.len();
        // z(head) t_nu z(head)^-1 = t_mu with mu = zbar(head) nu
        let mut pi_o = AffineWeylElement::identity(rs);
        for _ in 0..order {
            pi_o = &pi_o * &pi;
        }
        let mu = z_head.wbar().apply_coroot(pi_o.lambda());

        let letter_at = |p: usize| -> AffineLetter {
            if p <= head.len() {
                head[p - 1]
            } else {
                period[(p - head.len() - 1) % period.len()]
            }
        };
        let checked = head.len() + stride.max(3 * period.len());
        let mut z = AffineWeylElement::identity(rs);
        let mut phis = Vec::with_capacity(checked);
        let mut seen = AffineRootSet::new();
        for p in 1..=checked {
            let letter = letter_at(p);
            let phi = z.act(&simple_root(letter, sub));
            if !phi.is_positive() {
                return Err(Error::NotReduced(format!(
                    "phi({p}) = {phi} is not positive"
                )));
            }
            if !seen.insert(phi) {
                return Err(Error::NotReduced(format!("phi({p}) = {phi} repeats")));
            }
            phis.push(phi);
            z = &z * &letter_element(letter, sub)?;
        }
        let mut tracks = Vec::with_capacity(stride);
        for p in head.len() + 1..=head.len() + stride {
            let root = phis[p - 1];
            let step = -rs.pair_root_coroot(&root.classical, &mu);
            if step <= 0 {
                return Err(Error::NotReduced(format!(
                    "phi({p}) = {root} does not gain level along the period"
                )));
            }
            tracks.push(Track {
                start: p,
                root,
                step,
            });
        }
        Ok(InfiniteWord {
            sub: sub.clone(),
            head_phi: phis[..head.len()].to_vec(),
            head,
            period,
            tracks,
            stride,
        })
    }

    pub fn sub(&self) -> &SubSystem {
        &self.sub
    }

    pub fn head(&self) -> &[AffineLetter] {
        &self.head
    }

    pub fn period(&self) -> &[AffineLetter] {
        &self.period
    }

    /// The `p`-th letter, 1-based.
    pub fn letter(&self, p: usize) -> AffineLetter {
        assert!(p >= 1, "positions are 1-based");
        if p <= self.head.len() {
            self.head[p - 1]
        } else {
            self.period[(p - self.head.len() - 1) % self.period.len()]
        }
    }

    /// `z_s(p) = s(1) ... s(p)`.
    pub fn prefix(&self, p: usize) -> AffineWeylElement {
        let letters: Vec<AffineLetter> = (1..=p).map(|i| self.letter(i)).collect();
        word_element(&letters, &self.sub).expect("letters are valid for J")
    }

    /// `phi_s(p) = z_s(p-1)(alpha_{s(p)})`.
    pub fn phi_at(&self, p: usize) -> AffineRoot {
        assert!(p >= 1, "positions are 1-based");
        if p <= self.head.len() {
            return self.head_phi[p - 1];
        }
        let offset = p - self.head.len() - 1;
        let track = &self.tracks[offset % self.stride];
        let k = (offset / self.stride) as i32;
        AffineRoot {
            level: track.root.level + k * track.step,
            classical: track.root.classical,
        }
    }

    /// The position `p` with `phi_s(p) = beta`, if any.
    pub fn position_of(&self, beta: &AffineRoot) -> Option<usize> {
        if let Some(i) = self.head_phi.iter().position(|b| b == beta) {
            return Some(i + 1);
        }
        self.tracks.iter().find_map(|t| {
            let diff = beta.level - t.root.level;
            (t.root.classical == beta.classical && diff >= 0 && diff % t.step == 0)
                .then(|| t.start + (diff / t.step) as usize * self.stride)
        })
    }

    pub fn contains(&self, beta: &AffineRoot) -> bool {
        self.position_of(beta).is_some()
    }

    /// `Phi^inf(s)` truncated at level `N`.
    pub fn phi_infinity(&self, cutoff: i32) -> AffineRootSet {
        let mut out: AffineRootSet = self
            .head_phi
            .iter()
            .copied()
            .filter(|b| b.level <= cutoff)
            .collect();
        for t in &self.tracks {
            let mut level = t.root.level;
            while level <= cutoff {
                out.insert(AffineRoot::real(level, t.root.classical));
                level += t.step;
            }
        }
        out
    }

    /// Classical parts occurring infinitely often.
    pub fn tail_support(&self) -> RootSet {
        self.tracks.iter().map(|t| t.root.classical).collect()
    }

    pub fn to_json(&self) -> WordJson {
        WordJson {
            j: self.sub.index_set().labels(),
            head: self.head.iter().map(|&l| l.into()).collect(),
            period: self.period.iter().map(|&l| l.into()).collect(),
        }
    }
}

impl fmt::Debug for InfiniteWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{}^inf",
            format_word(&self.head),
            format_word(&self.period)
        )
    }
}

impl fmt::Display for InfiniteWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// JSON form `{"J": [...], "head": [letters], "period": [letters]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordJson {
    #[serde(rename = "J")]
    pub j: Vec<usize>,
    pub head: Vec<LetterJson>,
    pub period: Vec<LetterJson>,
}

impl WordJson {
    pub fn to_word(&self, rs: &std::sync::Arc<crate::cartan::RootSystem>) -> Result<InfiniteWord> {
        let j =
            Subset::from_labels(&self.j).ok_or_else(|| Error::Parse("bad J index set".into()))?;
        let sub = rs.sub_system(j)?;
        let head = self
            .head
            .iter()
            .map(|l| l.to_letter(&sub))
            .collect::<Result<_>>()?;
        let period = self
            .period
            .iter()
            .map(|l| l.to_letter(&sub))
            .collect::<Result<_>>()?;
        InfiniteWord::new(&sub, head, period)
    }
}

/// A class of infinite reduced words, identified by its biconvex parameter.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WordClass {
    pub canonical_param: BiconvexParam,
}

/// `lambda = sum c_j alpha_j^vee` with `(alpha_i|lambda) = 0` on `K` and `> 0`
/// on `J - K`, smallest by maximal coefficient and then lexicographically.
pub fn z_lambda(sub: &SubSystem, k: Subset) -> Result<RootVec> {
    let j = sub.index_set();
    if !k.is_subset_of(j) {
        return Err(Error::NotSubset {
            sub: k.to_string(),
            sup: j.to_string(),
        });
    }
    if k == j {
        return Err(Error::KEqualsJ);
    }
    let rs = sub.root_system();
    let idx: Vec<usize> = j.iter().collect();
    let fits = |c: &RootVec| {
        j.iter().all(|i| {
            let v = rs.pair_root_coroot(&RootVec::unit(i), c);
            if k.contains(i) {
                v == 0
            } else {
                v > 0
            }
        })
    };
    for bound in 1..=64 {
        // all coefficient vectors in [0, bound]^J with some entry equal to
        // bound, in lexicographic order
        let mut digits = vec![0i32; idx.len()];
        loop {
            if digits.contains(&bound) {
                let mut c = RootVec::ZERO;
                for (&i, &d) in idx.iter().zip(&digits) {
                    c.set(i, d);
                }
                if fits(&c) {
                    return Ok(c);
                }
            }
            match digits.iter().rposition(|&d| d < bound) {
                Some(pos) => {
                    digits[pos] += 1;
                    digits[pos + 1..].iter_mut().for_each(|d| *d = 0);
                }
                None => break,
            }
        }
    }
    Err(Error::Internal(format!("no translation found for K = {k}")))
}

/// The word `Z^K_J = (reduced word of t_lambda)^inf`.
pub fn z_word(sub: &SubSystem, k: Subset) -> Result<InfiniteWord> {
    let lambda = z_lambda(sub, k)?;
    let t = AffineWeylElement::translation(sub.root_system(), lambda);
    let period = reduced_word_j(&t, sub)?;
    InfiniteWord::new(sub, Vec::new(), period)
}

/// `x.s`: absorbs `x z_s(p0)` into the head, where `p0` is the least
/// position with `Phi(x^-1)` meeting `Phi^inf(s)` only inside `Phi(z_s(p0))`.
pub fn act(x: &AffineWeylElement, s: &InfiniteWord) -> Result<InfiniteWord> {
    let sub = &s.sub;
    if !x.is_in_subgroup(sub.index_set()) {
        return Err(Error::NotInSubgroup(sub.index_set().to_string()));
    }
    let p0 = inversion_set_affine(&x.inverse(), sub)?
        .iter()
        .filter_map(|b| s.position_of(b))
        .max()
        .unwrap_or(0);
    let mut head = reduced_word_j(&(x * &s.prefix(p0)), sub)?;
    let period = if p0 < s.head.len() {
        head.extend_from_slice(&s.head[p0..]);
        s.period.clone()
    } else {
        let shift = (p0 - s.head.len()) % s.period.len();
        let mut p = s.period[shift..].to_vec();
        p.extend_from_slice(&s.period[..shift]);
        p
    };
    InfiniteWord::new(sub, head, period)
}

/// `chi(K, u, y) = u y . Z^K_J`.
pub fn chi(param: &BiconvexParam) -> Result<InfiniteWord> {
    act(&param.uy(), &z_word(param.sub(), param.k())?)
}

/// The parameter of `Phi^inf(s)`, which determines the class of `s`.
pub fn classify_word(s: &InfiniteWord) -> Result<WordClass> {
    let tail = s.tail_support();
    // every level of <eps> must occur; past the last track start the
    // pattern repeats with period lcm(steps)
    for eps in &tail {
        let lowest = if eps.is_positive() { 0 } else { 1 };
        let ours: Vec<&Track> = s
            .tracks
            .iter()
            .filter(|t| t.root.classical == *eps)
            .collect();
        let top = ours.iter().map(|t| t.root.level).max().unwrap_or(lowest);
        let period = ours.iter().fold(1, |acc, t| lcm(acc, t.step));
        for level in lowest..=top + period {
            if !s.contains(&AffineRoot::real(level, *eps)) {
                return Err(Error::Internal(format!(
                    "{} is missing from the tail of {s}",
                    AffineRoot::real(level, *eps)
                )));
            }
        }
    }
    let added: AffineRootSet = s
        .head_phi
        .iter()
        .copied()
        .filter(|b| !tail.contains(&b.classical))
        .collect();
    let set = TailedSet::new(&s.sub, false, tail, added, AffineRootSet::new())?;
    let canonical_param = parametrize(&set, &s.sub)?;
    Ok(WordClass { canonical_param })
}

fn lcm(a: i32, b: i32) -> i32 {
    fn gcd(a: i32, b: i32) -> i32 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

pub fn equivalent(s: &InfiniteWord, t: &InfiniteWord) -> Result<bool> {
    Ok(classify_word(s)? == classify_word(t)?)
}

/// The `K` with `s` in the orbit of `Z^K_J`.
pub fn orbit_invariant(s: &InfiniteWord) -> Result<Subset> {
    Ok(classify_word(s)?.canonical_param.k())
}

/// Both sides of `Phi^inf(x.s) = (Phi(x) - (-Omega)) + (x Phi^inf(s) - Omega)`
/// with `Omega = x Phi^inf(s) ∩ Delta^re_-`, truncated at level `N`.
pub fn action_formula_sides(
    x: &AffineWeylElement,
    s: &InfiniteWord,
    cutoff: i32,
) -> Result<(AffineRootSet, AffineRootSet)> {
    let sub = &s.sub;
    let lhs = act(x, s)?.phi_infinity(cutoff);
    let rs = sub.root_system();
    // x moves levels by at most this much
    let margin = sub
        .roots()
        .iter()
        .map(|e| rs.pair_root_coroot(e, x.lambda()).abs())
        .max()
        .unwrap_or(0);
    let moved: AffineRootSet = x.act_set(&s.phi_infinity(cutoff + margin));
    let omega: AffineRootSet = moved.iter().copied().filter(|b| b.is_negative()).collect();
    let mut rhs: AffineRootSet = inversion_set_affine(x, sub)?
        .into_iter()
        .filter(|b| !omega.contains(&-*b) && b.level <= cutoff)
        .collect();
    rhs.extend(
        moved
            .into_iter()
            .filter(|b| b.is_positive() && b.level <= cutoff),
    );
    Ok((lhs, rhs))
}

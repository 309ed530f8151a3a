//! Reference implementations used by the integration tests. They follow the
//! definitions literally and share no code paths with the library beyond the
//! group law and the action on roots.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::sync::Arc;

use affine_biconvex::affine::{
    letter_element, letters, simple_root, AffineRoot, AffineRootSet, AffineWeylElement,
};
use affine_biconvex::finweyl::{FiniteWeylElement, RootSet};
use affine_biconvex::{root_system, RootSystem, RootVec, SubSystem, Subset};

pub fn sub(label: &str, j: &[usize]) -> SubSystem {
    let rs = root_system(label).unwrap();
    rs.sub_system(Subset::from_labels(j).unwrap()).unwrap()
}

pub fn full(label: &str) -> SubSystem {
    let rs = root_system(label).unwrap();
    rs.sub_system(rs.full_index_set()).unwrap()
}

/// Breadth-first search from `1` over right multiplication by the simple
/// reflections of `W_J`, with graph distances.
pub fn bfs(sub: &SubSystem, radius: usize) -> Vec<(AffineWeylElement, usize)> {
    let gens: Vec<_> = letters(sub)
        .into_iter()
        .map(|l| letter_element(l, sub).unwrap())
        .collect();
    let id = AffineWeylElement::identity(sub.root_system());
    let mut dist = HashMap::from([(id.clone(), 0usize)]);
    let mut order = vec![(id.clone(), 0)];
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        let d = dist[&x];
        if d == radius {
            continue;
        }
        for g in &gens {
            let y = &x * g;
            if !dist.contains_key(&y) {
                dist.insert(y.clone(), d + 1);
                order.push((y.clone(), d + 1));
                queue.push_back(y);
            }
        }
    }
    order
}

/// Finite Weyl group `W_J` by breadth-first search.
pub fn finite_group(sub: &SubSystem) -> Vec<FiniteWeylElement> {
    let rs = sub.root_system();
    let id = FiniteWeylElement::identity(rs);
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id.clone()]);
    let mut out = vec![id];
    while let Some(w) = queue.pop_front() {
        for i in sub.index_set().iter() {
            let v = w.mul_simple_right(i);
            if seen.insert(v.clone()) {
                out.push(v.clone());
                queue.push_back(v);
            }
        }
    }
    out
}

/// Positive roots of `Delta_J` with level at most `n`, imaginary ones included.
pub fn window_roots(sub: &SubSystem, n: i32) -> Vec<AffineRoot> {
    let mut out = Vec::new();
    for m in 0..=n {
        for e in sub.roots() {
            if m > 0 || e.is_positive() {
                out.push(AffineRoot::real(m, *e));
            }
        }
        if m > 0 {
            out.push(AffineRoot::imaginary(m));
        }
    }
    out
}

/// `{beta > 0 : y^-1 beta < 0}` among the real roots of level at most `n`.
pub fn inversions_by_definition(y: &AffineWeylElement, sub: &SubSystem, n: i32) -> AffineRootSet {
    window_roots(sub, n)
        .into_iter()
        .filter(|b| b.is_real() && y.act_inverse(b).is_negative())
        .collect()
}

/// Both convexity conditions for every sum of two window roots landing in
/// the window.
pub fn biconvex_in_window(s: &AffineRootSet, sub: &SubSystem, n: i32) -> bool {
    let roots = window_roots(sub, n);
    let present: HashSet<AffineRoot> = roots.iter().copied().collect();
    for (i, a) in roots.iter().enumerate() {
        for b in &roots[i..] {
            let c = *a + *b;
            if !present.contains(&c) {
                continue;
            }
            if s.contains(a) && s.contains(b) && !s.contains(&c) {
                return false;
            }
            if s.contains(&c) && !s.contains(a) && !s.contains(b) {
                return false;
            }
        }
    }
    true
}

/// Positive real roots of level at most `n` whose classical part lies in `tail`.
pub fn bracket(tail: &RootSet, n: i32) -> AffineRootSet {
    (0..=n)
        .flat_map(|m| tail.iter().map(move |e| AffineRoot::real(m, *e)))
        .filter(|b| b.is_positive())
        .collect()
}

/// `u (Delta_{J-} - Delta_{K-})`.
pub fn pointed_tail(sub: &SubSystem, k: Subset, u: &FiniteWeylElement) -> RootSet {
    sub.roots()
        .iter()
        .filter(|e| e.is_negative() && !e.support().is_subset_of(k))
        .map(|e| u.apply(e))
        .collect()
}

pub fn is_min_rep(u: &FiniteWeylElement, k: Subset) -> bool {
    k.iter().all(|i| u.apply(&RootVec::unit(i)).is_positive())
}

pub fn closed(rs: &RootSystem, p: &RootSet) -> bool {
    p.iter().all(|a| {
        p.iter()
            .all(|b| !rs.is_root(&(*a + *b)) || p.contains(&(*a + *b)))
    })
}

pub fn all_subsets(roots: &[RootVec]) -> Vec<RootSet> {
    (0u32..1 << roots.len())
        .map(|mask| {
            (0..roots.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| roots[i])
                .collect()
        })
        .collect()
}

/// `phi_s(p)` for `p = 1..=count`, straight from prefixes.
pub fn phis_from_prefixes(
    sub: &SubSystem,
    letter_at: impl Fn(usize) -> affine_biconvex::affine::AffineLetter,
    count: usize,
) -> Vec<AffineRoot> {
    let mut prefix = AffineWeylElement::identity(sub.root_system());
    let mut out = Vec::with_capacity(count);
    for p in 1..=count {
        let l = letter_at(p);
        out.push(prefix.act(&simple_root(l, sub)));
        prefix = &prefix * &letter_element(l, sub).unwrap();
    }
    out
}

pub fn distinct_positive(phis: &[AffineRoot]) -> bool {
    let set: BTreeSet<_> = phis.iter().collect();
    set.len() == phis.len() && phis.iter().all(|b| b.is_positive())
}

pub fn rank_le_2() -> Vec<Arc<RootSystem>> {
    ["A1", "A2", "B2", "C2", "G2"]
        .iter()
        .map(|l| root_system(l).unwrap())
        .collect()
}

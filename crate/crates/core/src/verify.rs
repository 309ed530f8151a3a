//! Exhaustive and randomized checks of the main correspondences, at sizes
//! small enough to run on a laptop. Each suite returns a [`Report`] listing
//! every counterexample it found.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::affine::{
    cayley_ball, delta_u_pm, inversion_set_affine, length_j, AffineRootSet, AffineWeylElement,
};
use crate::biconvex::{
    classify_biconvex, enumerate_biconvex_candidates, enumerate_params, infer_tail,
    is_biconvex_window, nabla, parametrize, BiconvexClass, BiconvexParam, TailedSet, Window,
};
use crate::cartan::{RootSystem, Sign, SubSystem};
use crate::error::{Error, Result};
use crate::finweyl::{
    classify_subset, factor_pointed_biclosed, is_closed, positivize, subgroup_elements,
    translate_delta_j_k, FiniteWeylElement, RootSet,
};
use crate::vector::Subset;
use crate::words::{
    act, action_formula_sides, chi, classify_word, equivalent, orbit_invariant, z_word,
};

/// Outcome of one suite.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub suite: String,
    pub checks: u64,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl Report {
    fn new(suite: &str) -> Self {
        Report {
            suite: suite.to_string(),
            ..Default::default()
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn merge(&mut self, other: Report) {
        self.checks += other.checks;
        self.failures.extend(other.failures);
        self.notes.extend(other.notes);
    }
}

fn full(rs: &Arc<RootSystem>) -> Result<SubSystem> {
    rs.sub_system(rs.full_index_set())
}

fn nonempty_subsystems(rs: &Arc<RootSystem>) -> Result<Vec<SubSystem>> {
    rs.full_index_set()
        .subsets()
        .into_iter()
        .filter(|j| !j.is_empty())
        .map(|j| rs.sub_system(j))
        .collect()
}

fn too_large(what: &str, estimate: usize, limit: usize) -> Result<()> {
    if estimate > limit {
        Err(Error::InvalidParam(format!(
            "bounds too large for {what}: about {estimate} cases (limit {limit})"
        )))
    } else {
        Ok(())
    }
}

/// Finite biconvex sets are exactly the inversion sets `Phi_J(y)`.
///
/// Every `y` with `l_J(y) <= max_len` has a biconvex inversion set of size
/// `l_J(y)` (window check at `cutoff`), distinct `y` give distinct sets, and
/// every set of at most `max_len` real roots of level `<= candidate_level`
/// passing an exact window check is one of them.
pub fn finite_sets(
    sub: &SubSystem,
    max_len: usize,
    cutoff: i32,
    candidate_level: i32,
) -> Result<Report> {
    too_large("finite-sets", max_len, 8)?;
    let mut report = Report::new("finite-sets");
    let ball = cayley_ball(sub, max_len)?;
    let win = Window::new(sub, cutoff);
    let mut seen: HashMap<AffineRootSet, AffineWeylElement> = HashMap::new();
    for (y, d) in &ball {
        let phi = inversion_set_affine(y, sub)?;
        report.check(phi.len() == *d, || {
            format!("|Phi({y:?})| = {} but length {d}", phi.len())
        });
        report.check(win.check(&phi)?, || {
            format!("Phi({y:?}) fails the window check")
        });
        if let Some(other) = seen.insert(phi, y.clone()) {
            report.failures.push(format!("Phi({y:?}) = Phi({other:?})"));
        }
    }
    let check_cutoff = cutoff.max(2 * candidate_level);
    let found = enumerate_biconvex_candidates(sub, candidate_level, check_cutoff, max_len)?;
    let found_set: HashSet<&AffineRootSet> = found.iter().collect();
    for s in &found {
        report.check(seen.contains_key(s), || {
            format!("biconvex set {s:?} is no inversion set")
        });
    }
    for phi in seen.keys() {
        if phi.iter().all(|b| b.level <= candidate_level) {
            report.check(found_set.contains(phi), || {
                format!("inversion set {phi:?} was not enumerated")
            });
        }
    }
    report.notes.push(format!(
        "{} elements of length <= {max_len}, {} brute-force biconvex sets",
        ball.len(),
        found.len()
    ));
    Ok(report)
}

/// Pointed biclosed, parabolic and pointed/symmetric structure of every
/// subset of `Delta_J`.
pub fn classical_subsets(sub: &SubSystem) -> Result<Report> {
    too_large("classical-subsets", sub.roots().len(), 12)?;
    let mut report = classical_subsets_for(sub)?;
    report
        .notes
        .push(format!("{} subsets scanned", 1u64 << sub.roots().len()));
    Ok(report)
}

fn classical_subsets_for(sub: &SubSystem) -> Result<Report> {
    let mut report = Report::new("classical-subsets");
    let rs = sub.root_system();
    let j = sub.index_set();
    let elems = subgroup_elements(sub);
    let positive: RootSet = sub.positive_roots().iter().copied().collect();

    let mut pointed_biclosed: HashMap<RootSet, (Subset, FiniteWeylElement)> = HashMap::new();
    let mut parabolic: HashSet<RootSet> = HashSet::new();
    for k in j.subsets() {
        let neg_k: RootSet = rs.sub_system(k)?.negative_roots().collect();
        for u in &elems {
            let mut base = positive.clone();
            base.extend(neg_k.iter().copied());
            parabolic.insert(u.apply_set(&base));
            if u.is_min_coset_rep(k) {
                let set = translate_delta_j_k(sub, k, u)?;
                if let Some((k2, u2)) = pointed_biclosed.insert(set.clone(), (k, u.clone())) {
                    report
                        .failures
                        .push(format!("({k}, {u}) and ({k2}, {u2}) give the same set"));
                }
            }
        }
    }

    let roots = sub.roots();
    let subsets: Vec<RootSet> = (0u32..1 << roots.len())
        .map(|mask| {
            (0..roots.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| roots[i])
                .collect()
        })
        .collect();
    let parts: Vec<Report> = subsets
        .par_iter()
        .map(|p| -> Result<Report> {
            let mut r = Report::new("classical-subsets");
            let c = classify_subset(p, sub)?;
            let pb = c.pointed && c.biclosed_in_j;
            let pc = c.pointed && c.coclosed_in_j;
            let complement: RootSet = roots.iter().copied().filter(|e| !p.contains(e)).collect();
            let comp_parabolic = classify_subset(&complement, sub)?.parabolic_in_j;
            r.check(pb == pc && pb == comp_parabolic, || {
                format!("{p:?}: pointed biclosed {pb}, pointed coclosed {pc}, complement parabolic {comp_parabolic}")
            });
            r.check(pb == pointed_biclosed.contains_key(p), || {
                format!("{p:?}: pointed biclosed {pb} disagrees with the u Delta^K_J- list")
            });
            match (pb, factor_pointed_biclosed(p, sub)) {
                (true, Ok((k, u))) => {
                    let expected = &pointed_biclosed[p];
                    r.check(expected.0 == k && expected.1 == u, || {
                        format!("{p:?}: factored as ({k}, {u}), expected ({}, {})", expected.0, expected.1)
                    });
                }
                (false, Err(_)) => r.checks += 1,
                (true, Err(e)) => r.failures.push(format!("{p:?}: factorization failed: {e}")),
                (false, Ok(_)) => r.failures.push(format!("{p:?}: factored a non pointed-biclosed set")),
            }
            r.check(c.parabolic_in_j == parabolic.contains(p), || {
                format!("{p:?}: parabolic {} disagrees with the w(Delta_J+ + Delta_K-) list", c.parabolic_in_j)
            });

            // P = P_p + P_s, and it is the only such split
            let union: RootSet = c.pointed_part.union(&c.symmetric_part).copied().collect();
            r.check(
                union == *p && c.pointed_part.is_disjoint(&c.symmetric_part),
                || format!("{p:?}: parts do not partition"),
            );
            let members: Vec<_> = p.iter().copied().collect();
            for mask in 0u32..1 << members.len() {
                let s: RootSet = (0..members.len()).filter(|i| mask >> i & 1 == 1).map(|i| members[i]).collect();
                let rest: RootSet = p.difference(&s).copied().collect();
                let symmetric = s.iter().all(|e| s.contains(&-*e));
                let pointed = rest.iter().all(|e| !rest.contains(&-*e));
                if symmetric && pointed {
                    r.check(s == c.symmetric_part, || format!("{p:?}: second split with symmetric part {s:?}"));
                }
            }
            if c.closed {
                let ok = is_closed(rs, &c.pointed_part)
                    && is_closed(rs, &c.symmetric_part)
                    && c.pointed_part.iter().all(|e| {
                        c.symmetric_part
                            .iter()
                            .all(|h| !rs.is_root(&(*e + *h)) || c.pointed_part.contains(&(*e + *h)))
                    });
                r.check(ok, || format!("{p:?}: P_p + P_s is not inside P_p"));
                if c.pointed {
                    let w = positivize(p, sub)?;
                    r.check(p.iter().all(|e| w.apply(e).is_negative()), || {
                        format!("{p:?}: positivize returned {w}")
                    });
                }
            }
            Ok(r)
        })
        .collect::<Result<_>>()?;
    for part in parts {
        report.merge(part);
    }
    Ok(report)
}

/// Level bound used for a parameter: `l(u) + l_K(y) + 3`.
pub fn param_cutoff(p: &BiconvexParam) -> Result<i32> {
    Ok((p.u().length() + length_j(p.y(), &p.sub_k())? + 3) as i32)
}

/// `parametrize(nabla(p)) = p` for every parameter with `l_K(y) <= max_len`,
/// over every nonempty `J`.
pub fn parametrization(rs: &Arc<RootSystem>, max_len: usize) -> Result<Report> {
    too_large("parametrization", max_len, 6)?;
    let mut report = Report::new("parametrization");
    let mut count = 0;
    for sub in nonempty_subsystems(rs)? {
        let params = enumerate_params(&sub, max_len, false)?;
        count += params.len();
        let parts: Vec<Report> = params
            .par_iter()
            .map(|p| -> Result<Report> {
                let mut r = Report::new("parametrization");
                let n = param_cutoff(p)?;
                let view = nabla(p, n)?;
                let members = view.truncate(n);
                let promised = TailedSet::from_window(&sub, view.tail.clone(), &members, n)?;
                match parametrize(&promised, &sub) {
                    Ok(q) => r.check(q == *p, || format!("{p:?} came back as {q:?}")),
                    Err(e) => r.failures.push(format!("{p:?}: {e}")),
                }
                let inferred = infer_tail(&members, &sub, n);
                r.check(inferred == view.tail, || {
                    format!("{p:?}: inferred tail {inferred:?}")
                });
                for level in 0..=n {
                    let ok = is_biconvex_window(&view.truncate(level), &sub, level)?;
                    r.check(ok, || format!("{p:?}: window check fails at level {level}"));
                }
                Ok(r)
            })
            .collect::<Result<_>>()?;
        let mut views: HashMap<(RootSet, AffineRootSet), &BiconvexParam> = HashMap::new();
        for p in &params {
            let v = nabla(p, 0)?;
            if let Some(q) = views.insert((v.tail, v.finite), p) {
                report
                    .failures
                    .push(format!("{p:?} and {q:?} have the same set"));
            }
        }
        for part in parts {
            report.merge(part);
        }
    }
    report.notes.push(format!("{count} parameters"));
    Ok(report)
}

/// `Phi^inf(chi(p)) = nabla(p)` up to level `max(cutoff, l(u) + l_K(y) + 3)`
/// for every parameter with `K != J` and `l_K(y) <= max_len`.
pub fn words_realize_nabla(rs: &Arc<RootSystem>, max_len: usize, cutoff: i32) -> Result<Report> {
    too_large("words", max_len, 6)?;
    let mut report = Report::new("words");
    let mut count = 0;
    for sub in nonempty_subsystems(rs)? {
        let params = enumerate_params(&sub, max_len, true)?;
        count += params.len();
        let parts: Vec<Report> = params
            .par_iter()
            .map(|p| -> Result<Report> {
                let mut r = Report::new("words");
                let n = param_cutoff(p)?.max(cutoff);
                let word = chi(p)?;
                let lhs = word.phi_infinity(n);
                let rhs = nabla(p, n)?.truncate(n);
                r.check(lhs == rhs, || {
                    format!("{p:?}: Phi^inf(chi) = {lhs:?}, nabla = {rhs:?}")
                });
                let class = classify_word(&word)?;
                r.check(class.canonical_param == *p, || {
                    format!("{p:?}: chi classifies as {:?}", class.canonical_param)
                });
                Ok(r)
            })
            .collect::<Result<_>>()?;
        for part in parts {
            report.merge(part);
        }
    }
    report.notes.push(format!("{count} parameters"));
    Ok(report)
}

/// `Z^K_J` is reduced through three periods and has `Phi^inf = Delta^K_J(1, -)`.
pub fn z_words(rs: &Arc<RootSystem>, cutoff: i32) -> Result<Report> {
    let mut report = Report::new("z-words");
    for sub in nonempty_subsystems(rs)? {
        let id = FiniteWeylElement::identity(rs);
        for k in sub.index_set().subsets() {
            if k == sub.index_set() {
                continue;
            }
            let z = z_word(&sub, k)?;
            let n = z.period().len();
            let mut seen = AffineRootSet::new();
            let mut prefix = AffineWeylElement::identity(rs);
            for p in 1..=3 * n {
                let letter = z.letter(p);
                let phi = prefix.act(&crate::affine::simple_root(letter, &sub));
                report.check(phi.is_positive() && seen.insert(phi), || {
                    format!(
                        "Z^{k}_{}: phi({p}) = {phi} is not new and positive",
                        sub.index_set()
                    )
                });
                prefix = &prefix * &crate::affine::letter_element(letter, &sub)?;
            }
            let expected = delta_u_pm(&sub, k, &id, Sign::Minus, cutoff)?;
            report.check(z.phi_infinity(cutoff) == expected, || {
                format!(
                    "Z^{k}_{}: Phi^inf differs from Delta^K_J(1,-)",
                    sub.index_set()
                )
            });
        }
    }
    Ok(report)
}

/// Random elements and infinite words for the action suites.
struct Sampler {
    sub: SubSystem,
    short: Vec<AffineWeylElement>,
    words: Vec<BiconvexParam>,
}

impl Sampler {
    fn new(sub: SubSystem, max_len: usize) -> Result<Self> {
        let short = cayley_ball(&sub, max_len)?
            .into_iter()
            .map(|(x, _)| x)
            .collect();
        let words = enumerate_params(&sub, 2, true)?;
        Ok(Sampler { sub, short, words })
    }
}

/// Action formula and composition laws for random `(x, s)` with `l(x) <= max_len`.
pub fn action_laws(
    rs: &Arc<RootSystem>,
    samples: usize,
    max_len: usize,
    cutoff: i32,
    seed: u64,
) -> Result<Report> {
    let mut report = Report::new("action");
    let sampler = Sampler::new(full(rs)?, max_len)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let id = AffineWeylElement::identity(rs);
    for _ in 0..samples {
        let x = sampler.short.choose(&mut rng).unwrap();
        let y = sampler.short.choose(&mut rng).unwrap();
        let p = sampler.words.choose(&mut rng).unwrap();
        let s = chi(p)?;
        let (lhs, rhs) = action_formula_sides(x, &s, cutoff)?;
        report.check(lhs == rhs, || {
            format!("x = {x:?}, s = {s}: {lhs:?} vs {rhs:?}")
        });
        let nested = act(x, &act(y, &s)?)?;
        let direct = act(&(x * y), &s)?;
        report.check(equivalent(&nested, &direct)?, || {
            format!("x = {x:?}, y = {y:?}, s = {s}: x.(y.s) and (xy).s differ")
        });
        report.check(equivalent(&act(&id, &s)?, &s)?, || {
            format!("1.s differs from s = {s}")
        });
    }
    let _ = &sampler.sub;
    Ok(report)
}

/// The orbit invariant is constant under the action and separates the `Z^K_J`.
pub fn orbits(rs: &Arc<RootSystem>, samples: usize, max_len: usize, seed: u64) -> Result<Report> {
    let mut report = Report::new("orbits");
    let sampler = Sampler::new(full(rs)?, max_len)?;
    let sub = &sampler.sub;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut invariants = HashSet::new();
    for k in sub.index_set().subsets() {
        if k == sub.index_set() {
            continue;
        }
        let z = z_word(sub, k)?;
        let base = orbit_invariant(&z)?;
        report.check(base == k, || format!("Z^{k} has invariant {base}"));
        report.check(invariants.insert(base), || {
            format!("invariant {base} repeats")
        });
        for _ in 0..samples {
            let x = sampler.short.choose(&mut rng).unwrap();
            let got = orbit_invariant(&act(x, &z)?)?;
            report.check(got == k, || format!("{x:?}.Z^{k} has invariant {got}"));
        }
    }
    Ok(report)
}

/// The class of every biconvex set built from a parameter, and of its complement.
pub fn shapes(rs: &Arc<RootSystem>, max_len: usize) -> Result<Report> {
    too_large("shapes", max_len, 6)?;
    let mut report = Report::new("shapes");
    let sub = full(rs)?;
    for p in enumerate_params(&sub, max_len, false)? {
        let view = nabla(&p, 0)?;
        let set = view.to_tailed();
        let class = classify_biconvex(&set, &sub)?;
        let co = classify_biconvex(&set.complement(&sub), &sub)?;
        if p.is_infinite() {
            report.check(class == BiconvexClass::Infinite(p.clone()), || {
                format!("{p:?} classified as {class:?}")
            });
            report.check(co == BiconvexClass::CoInfinite(p.clone()), || {
                format!("complement of {p:?} classified as {co:?}")
            });
        } else {
            report.check(class == BiconvexClass::Finite(p.y().clone()), || {
                format!("{p:?} classified as {class:?}")
            });
            report.check(co == BiconvexClass::CoFinite(p.y().clone()), || {
                format!("complement of {p:?} classified as {co:?}")
            });
        }
    }
    Ok(report)
}

/// `l_J` by inversion counting equals Cayley graph distance.
pub fn length_oracle(sub: &SubSystem, max_len: usize) -> Result<Report> {
    let mut report = Report::new("length");
    for (x, d) in cayley_ball(sub, max_len)? {
        let l = length_j(&x, sub)?;
        report.check(l == d, || format!("{x:?}: length {l}, distance {d}"));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::root_system;

    #[test]
    fn suites_pass_on_small_types() {
        let a2 = root_system("A2").unwrap();
        let sub = full(&a2).unwrap();
        assert!(finite_sets(&sub, 3, 4, 1).unwrap().passed());
        assert!(classical_subsets(&sub).unwrap().passed());
        assert!(parametrization(&a2, 1).unwrap().passed());
        assert!(words_realize_nabla(&a2, 1, 4).unwrap().passed());
        assert!(shapes(&a2, 1).unwrap().passed());
        assert!(z_words(&a2, 4).unwrap().passed());
        assert!(action_laws(&a2, 10, 2, 4, 1).unwrap().passed());
        assert!(orbits(&a2, 5, 2, 1).unwrap().passed());
        assert!(length_oracle(&sub, 3).unwrap().passed());
    }

    #[test]
    fn subset_scan_counts() {
        let b2 = root_system("B2").unwrap();
        let report = classical_subsets(&full(&b2).unwrap()).unwrap();
        assert_eq!(report.notes, vec!["256 subsets scanned".to_string()]);
    }

    #[test]
    fn oversized_bounds_are_refused() {
        let a1 = root_system("A1").unwrap();
        assert!(matches!(parametrization(&a1, 50), Err(Error::InvalidParam(_))));
        let b3 = root_system("B3").unwrap();
        assert!(classical_subsets(&full(&b3).unwrap()).is_err());
    }
}

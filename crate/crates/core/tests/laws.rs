mod common;

use affine_biconvex::affine::{
    delta_u_pm, inversion_set_affine, length_j, letters, word_element, AffineLetter, AffineRoot,
    AffineRootSet, AffineWeylElement,
};
use affine_biconvex::biconvex::{enumerate_params, nabla};
use affine_biconvex::finweyl::{translate_delta_j_k, FiniteWeylElement, RootSet};
use affine_biconvex::words::{act, chi, equivalent, z_word, InfiniteWord};
use affine_biconvex::{root_system, RootVec, Sign, Subset};
use common::*;
use proptest::prelude::*;

const TYPES: [&str; 5] = ["A1", "A2", "B2", "C2", "G2"];

fn word_strategy() -> impl Strategy<Value = (usize, Vec<usize>, Vec<usize>)> {
    (
        0..TYPES.len(),
        prop::collection::vec(0usize..8, 0..8),
        prop::collection::vec(0usize..8, 0..8),
    )
}

fn to_letters(ty: usize, raw: &[usize]) -> (affine_biconvex::SubSystem, Vec<AffineLetter>) {
    let sub = full(TYPES[ty]);
    let all = letters(&sub);
    let word = raw.iter().map(|&i| all[i % all.len()]).collect();
    (sub, word)
}

proptest! {
    #[test]
    fn product_acts_as_composition((ty, a, b) in word_strategy()) {
        let (sub, wa) = to_letters(ty, &a);
        let (_, wb) = to_letters(ty, &b);
        let x = word_element(&wa, &sub).unwrap();
        let y = word_element(&wb, &sub).unwrap();
        let xy = &x * &y;
        let rs = sub.root_system();
        let lam = x.lambda().add_scaled(1, &x.wbar().apply_coroot(y.lambda()));
        prop_assert_eq!(xy.lambda(), &lam);
        prop_assert_eq!(xy.wbar(), &(x.wbar() * y.wbar()));
        for b in window_roots(&sub, 3).into_iter().filter(AffineRoot::is_real) {
            prop_assert_eq!(xy.act(&b), x.act(&y.act(&b)));
            prop_assert_eq!(x.act_inverse(&x.act(&b)), b);
        }
        prop_assert!((&x * &x.inverse()).is_identity());
        prop_assert_eq!(AffineWeylElement::identity(rs).act(&AffineRoot::real(2, RootVec::unit(0))),
            AffineRoot::real(2, RootVec::unit(0)));
    }

    #[test]
    fn inversion_sets_of_products((ty, a, b) in word_strategy()) {
        let (sub, wa) = to_letters(ty, &a);
        let (_, wb) = to_letters(ty, &b);
        let x = word_element(&wa, &sub).unwrap();
        let y = word_element(&wb, &sub).unwrap();
        let px = inversion_set_affine(&x, &sub).unwrap();
        let py = inversion_set_affine(&y, &sub).unwrap();
        let pxy = inversion_set_affine(&(&x * &y), &sub).unwrap();
        // Phi(xy) is the symmetric difference of Phi(x) and the positive part of +-x Phi(y)
        let moved: AffineRootSet = py.iter().map(|r| x.act(r)).collect();
        let mut expected = px.clone();
        for r in &moved {
            let p = if r.is_positive() { *r } else { -*r };
            if !expected.remove(&p) {
                expected.insert(p);
            }
        }
        prop_assert_eq!(&pxy, &expected);
        if moved.iter().all(AffineRoot::is_positive) {
            prop_assert!(px.is_disjoint(&moved));
            prop_assert_eq!(length_j(&(&x * &y), &sub).unwrap(), px.len() + py.len());
        }
    }

    #[test]
    fn word_equivalence_is_an_equivalence(ty in 1usize..5, picks in prop::collection::vec(0usize..1000, 3)) {
        let sub = full(TYPES[ty]);
        let params = enumerate_params(&sub, 1, true).unwrap();
        let words: Vec<InfiniteWord> = picks.iter().map(|&i| chi(&params[i % params.len()]).unwrap()).collect();
        let xs = bfs(&sub, 2);
        let shifted: Vec<InfiniteWord> = words
            .iter()
            .zip(&picks)
            .map(|(s, &i)| {
                // x.(x^-1.s) is a different word in the same class
                let x = &xs[i % xs.len()].0;
                act(x, &act(&x.inverse(), s).unwrap()).unwrap()
            })
            .collect();
        for (s, t) in words.iter().zip(&shifted) {
            prop_assert!(equivalent(s, s).unwrap());
            prop_assert!(equivalent(s, t).unwrap());
            prop_assert!(equivalent(t, s).unwrap());
        }
        let e01 = equivalent(&words[0], &words[1]).unwrap();
        let e12 = equivalent(&words[1], &words[2]).unwrap();
        if e01 && e12 {
            prop_assert!(equivalent(&words[0], &words[2]).unwrap());
        }
        prop_assert_eq!(e01, equivalent(&words[1], &words[0]).unwrap());
    }

    #[test]
    fn chi_words_are_reduced(ty in 0usize..5, pick in 0usize..10_000) {
        let sub = full(TYPES[ty]);
        let params = enumerate_params(&sub, 3, true).unwrap();
        let s = chi(&params[pick % params.len()]).unwrap();
        let count = s.head().len() + 3 * s.period().len();
        let phis = phis_from_prefixes(&sub, |p| s.letter(p), count);
        prop_assert!(distinct_positive(&phis));
        for (p, b) in phis.iter().enumerate() {
            prop_assert_eq!(s.phi_at(p + 1), *b);
            prop_assert_eq!(s.position_of(b), Some(p + 1));
        }
    }
}

#[test]
fn prefix_inversions_and_weak_order() {
    for label in TYPES {
        let sub = full(label);
        let ball = bfs(&sub, 4);
        let phis: Vec<AffineRootSet> = ball
            .iter()
            .map(|(x, _)| inversion_set_affine(x, &sub).unwrap())
            .collect();
        for (i, (y1, l1)) in ball.iter().enumerate() {
            for (j, (y2, l2)) in ball.iter().enumerate() {
                let l12 = length_j(&(&y1.inverse() * y2), &sub).unwrap();
                let prefix = *l2 as isize - *l1 as isize == l12 as isize;
                assert_eq!(
                    prefix,
                    phis[i].is_subset(&phis[j]),
                    "{label}: {y1:?} vs {y2:?}"
                );
            }
        }
    }
}

#[test]
fn pointed_tails_absorb_sums() {
    for label in ["A1", "A2", "B2", "C2", "G2", "A3", "B3", "C3"] {
        let rs = root_system(label).unwrap();
        for j in rs.full_index_set().subsets() {
            let sub = rs.sub_system(j).unwrap();
            for k in j.subsets() {
                let inside_k: RootSet = rs.sub_system(k).unwrap().roots().iter().copied().collect();
                for sign in [Sign::Plus, Sign::Minus] {
                    let d: RootSet = sub.delta_j_k(k, sign).unwrap().into_iter().collect();
                    for a in &d {
                        for b in d.iter().chain(&inside_k) {
                            let c = *a + *b;
                            if rs.is_root(&c) {
                                assert!(d.contains(&c), "{label} J={j} K={k}: {a:?} + {b:?}");
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn containment_of_pointed_tails() {
    for label in ["A2", "B2", "G2"] {
        let rs = root_system(label).unwrap();
        let sub = rs.sub_system(rs.full_index_set()).unwrap();
        let group = finite_group(&sub);
        let subsets = sub.index_set().subsets();
        for &k1 in &subsets {
            for &k2 in &subsets {
                for u in group.iter().filter(|u| is_min_rep(u, k1)) {
                    for v in group.iter().filter(|v| is_min_rep(v, k2)) {
                        let lhs = translate_delta_j_k(&sub, k1, u).unwrap();
                        let rhs = translate_delta_j_k(&sub, k2, v).unwrap();
                        let same_coset = (&v.inverse() * u).is_in_parabolic(k1);
                        assert_eq!(
                            lhs.is_subset(&rhs),
                            k2.is_subset_of(k1) && same_coset,
                            "{label}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn finite_inversion_sets_are_biclosed() {
    for label in ["A2", "B2", "G2", "A3", "B3"] {
        let sub = full(label);
        let rs = sub.root_system();
        let positive: RootSet = sub.positive_roots().iter().copied().collect();
        for w in finite_group(&sub) {
            let inv = w.inversion_set(&sub);
            let rest: RootSet = positive.difference(&inv).copied().collect();
            assert!(closed(rs, &inv) && closed(rs, &rest), "{label}: {w}");
        }
    }
}

#[test]
fn tail_decompositions() {
    for label in ["A1", "A2", "B2", "G2"] {
        let rs = root_system(label).unwrap();
        for j in rs
            .full_index_set()
            .subsets()
            .into_iter()
            .filter(|j| !j.is_empty())
        {
            let sub = rs.sub_system(j).unwrap();
            for k in j.subsets() {
                let sub_k = rs.sub_system(k).unwrap();
                for u in finite_group(&sub).iter().filter(|u| is_min_rep(u, k)) {
                    let uu = AffineWeylElement::from_finite(u.clone());
                    let phi_u = inversion_set_affine(&uu, &sub).unwrap();
                    for n in 1..=5 {
                        let minus = delta_u_pm(&sub, k, u, Sign::Minus, n).unwrap();
                        let plus = delta_u_pm(&sub, k, u, Sign::Plus, n).unwrap();
                        let id = FiniteWeylElement::identity(&rs);
                        let base = delta_u_pm(&sub, k, &id, Sign::Minus, n).unwrap();
                        let mut expected = phi_u.clone();
                        for b in &base {
                            let m = uu.act(b);
                            if m.level <= n {
                                assert!(expected.insert(m), "{label}: overlap in the u-translate");
                            }
                        }
                        assert_eq!(minus, expected, "{label} J={j} K={k} u={u} N={n}");

                        let k_part: AffineRootSet =
                            bracket(&sub_k.roots().iter().copied().collect(), n)
                                .iter()
                                .map(|b| uu.act(b))
                                .collect();
                        let all: AffineRootSet = window_roots(&sub, n)
                            .into_iter()
                            .filter(AffineRoot::is_real)
                            .collect();
                        let mut union = minus.clone();
                        for part in [&k_part, &plus] {
                            for b in part.iter() {
                                assert!(union.insert(*b), "{label}: pieces overlap at {b}");
                            }
                        }
                        assert_eq!(union, all, "{label} J={j} K={k} u={u} N={n}");

                        for b in &k_part {
                            if !(b.is_positive()) {
                                continue;
                            }
                            for side in [&minus, &plus] {
                                for a in side.iter() {
                                    let c = *a + *b;
                                    if c.level <= n && all.contains(&c) {
                                        assert!(
                                            side.contains(&c),
                                            "{label}: {a} + {b} leaves the tail"
                                        );
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn same_orbit_classes_are_linked_by_uy() {
    for label in ["A1", "A2", "B2"] {
        let sub = full(label);
        let params = enumerate_params(&sub, 2, true).unwrap();
        for p in &params {
            let z = z_word(&sub, p.k()).unwrap();
            let moved = act(&p.uy(), &z).unwrap();
            assert!(
                equivalent(&moved, &chi(p).unwrap()).unwrap(),
                "{label}: {p:?}"
            );
        }
    }
}

#[test]
fn nabla_views_are_biconvex_at_every_level() {
    for label in ["B2", "C2", "G2"] {
        let sub = full(label);
        for p in enumerate_params(&sub, 2, false).unwrap() {
            let view = nabla(&p, 6).unwrap();
            for n in 0..=6 {
                let s: AffineRootSet = view.truncate(n);
                assert!(
                    biconvex_in_window(&s, &sub, n),
                    "{label}: {p:?} at level {n}"
                );
            }
        }
    }
}

#[test]
fn subsets_roundtrip_labels() {
    let s = Subset::from_labels(&[1, 3]).unwrap();
    assert_eq!(s.labels(), vec![1, 3]);
}

//! Property tests for the structural invariants of each module.

mod common;

use autfb::abelianization::{act_hom, johnson_crossed, johnson_y, johnson_z, wedge_push};
use autfb::automorphism::{is_in_kernel, sk_symbols, sq_symbols};
use autfb::cocycle::{alpha, drop_to_l, i_s, jprime_y, ny_project, PairingContext};
use autfb::presentation::{
    action_bounds_hold, action_extend, action_f, action_letter, basic_relators,
    disjoint_for_trivial_action, verify_action_consistency,
};
use autfb::{Gen, Letter, NamedAut, Signature, SymbolWord, Word};
use common::{random_kernel, random_sk_word, random_sq_word, rng, sig};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

fn random_raw(r: &mut impl Rng, s: Signature, max_len: usize) -> Vec<Letter<Gen>> {
    let gens: Vec<Gen> = s.gens().collect();
    let len = r.gen_range(0..=max_len);
    (0..len)
        .map(|_| Letter::with_sign(*gens.choose(r).unwrap(), r.gen_bool(0.5)))
        .collect()
}

fn random_reduced(r: &mut impl Rng, s: Signature, max_len: usize) -> Word {
    Word::reduce(random_raw(r, s, max_len))
}

/// A product of conjugates `p y_i^{±1} p^{-1}`: an element of the normal closure of Y.
fn random_ny(r: &mut impl Rng, s: Signature, factors: usize) -> Word {
    let ys: Vec<Gen> = s.ys().collect();
    (0..factors).fold(Word::identity(), |acc, _| {
        let p = random_reduced(r, s, 4);
        let y = Word::from_letter(Letter::with_sign(*ys.choose(r).unwrap(), r.gen_bool(0.5)));
        acc.multiply(&y.conjugate(&p))
    })
}

const S: Signature = Signature { n: 2, k: 2, l: 2 };

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    // ---- free group ----

    #[test]
    fn reduce_is_idempotent(seed in any::<u64>()) {
        let mut r = rng(seed);
        let w = Word::reduce(random_raw(&mut r, S, 20));
        prop_assert_eq!(Word::reduce(w.letters().iter().copied()), w);
    }

    #[test]
    fn group_laws(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (u, v, w) = (random_reduced(&mut r, S, 10), random_reduced(&mut r, S, 10), random_reduced(&mut r, S, 10));
        prop_assert_eq!(u.multiply(&v).multiply(&w), u.multiply(&v.multiply(&w)));
        prop_assert!(u.multiply(&u.invert()).is_identity());
        prop_assert!(u.invert().multiply(&u).is_identity());
    }

    #[test]
    fn conjugacy_is_an_equivalence(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (u, w, w2) = (random_reduced(&mut r, S, 8), random_reduced(&mut r, S, 6), random_reduced(&mut r, S, 6));
        let c1 = u.conjugate(&w);
        let c2 = c1.conjugate(&w2);
        prop_assert!(u.is_conjugate(&u));
        prop_assert!(u.is_conjugate(&c1));
        prop_assert!(c1.is_conjugate(&u));
        prop_assert!(u.is_conjugate(&c2));
    }

    #[test]
    fn abelianize_and_delete_y_are_homomorphisms(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (u, v) = (random_reduced(&mut r, S, 12), random_reduced(&mut r, S, 12));
        prop_assert_eq!(u.multiply(&v).abelianize(S), u.abelianize(S) + v.abelianize(S));
        prop_assert_eq!(u.multiply(&v).delete_y(), u.delete_y().multiply(&v.delete_y()));
        prop_assert_eq!(u.delete_y().delete_y(), u.delete_y());
        prop_assert_eq!(u.delete_y().abelianize(S), u.abelianize(S).zero_y(S));
    }

    // ---- automorphisms ----

    #[test]
    fn apply_is_a_homomorphism_and_composes(seed in any::<u64>()) {
        let mut r = rng(seed);
        let alphabet: Vec<_> = sk_symbols(S).into_iter().chain(sq_symbols(S)).collect();
        let f = NamedAut::from_valid_spelling(S, &common::random_word(&mut r, &alphabet, 6));
        let g = NamedAut::from_valid_spelling(S, &common::random_word(&mut r, &alphabet, 6));
        let (u, v) = (random_reduced(&mut r, S, 8), random_reduced(&mut r, S, 8));
        use autfb::GeneratorImages;
        prop_assert_eq!(f.apply(&u.multiply(&v)), f.apply(&u).multiply(&f.apply(&v)));
        prop_assert_eq!(f.compose(&g).unwrap().apply(&u), f.apply(&g.apply(&u)));
    }

    #[test]
    fn compose_with_inverse_is_identity(seed in any::<u64>()) {
        let mut r = rng(seed);
        let alphabet: Vec<_> = sk_symbols(S).into_iter().chain(sq_symbols(S)).collect();
        let f = NamedAut::from_valid_spelling(S, &common::random_word(&mut r, &alphabet, 12));
        prop_assert!(f.compose(&f.inverse()).unwrap().is_identity());
        prop_assert!(f.inverse().compose(&f).unwrap().is_identity());
    }

    // ---- presentation ----

    #[test]
    fn disjoint_support_fixes(seed in any::<u64>()) {
        let big = sig(4, 3, 4);
        let mut r = rng(seed);
        let mut tried = 0;
        loop {
            let s = random_sk_word(&mut r, big, 3);
            let t = random_sq_word(&mut r, big, 3);
            if disjoint_for_trivial_action(&t, &s) {
                prop_assert_eq!(action_extend(&t, &s), s);
                break;
            }
            tried += 1;
            prop_assert!(tried < 10_000);
        }
    }

    #[test]
    fn support_bounds_for_words(seed in any::<u64>()) {
        let mut r = rng(seed);
        let s = random_sk_word(&mut r, S, 6);
        let t = random_sq_word(&mut r, S, 1);
        prop_assert!(action_bounds_hold(&t, &s, &action_extend(&t, &s)));
    }

    #[test]
    fn action_letters_are_invertible_on_words(seed in any::<u64>()) {
        let mut r = rng(seed);
        let s = random_sk_word(&mut r, S, 8);
        let t = *random_sq_word(&mut r, S, 1).letters().first().unwrap_or(&Letter::pos(sq_symbols(S)[0]));
        prop_assert_eq!(action_letter(t.inv(), &action_letter(t, &s)), s);
    }

    #[test]
    fn expanded_relations_are_sound(seed in any::<u64>()) {
        let s = sig(2, 2, 1);
        let mut r = rng(seed);
        let rels = basic_relators(s).unwrap();
        let rel = rels.choose(&mut r).unwrap();
        let w = random_sq_word(&mut r, s, 4);
        prop_assert!(NamedAut::from_valid_spelling(s, &action_extend(&w, rel)).is_identity());
    }

    // ---- abelianization ----

    #[test]
    fn boundary_johnson_maps_are_additive(seed in any::<u64>()) {
        let mut r = rng(seed);
        let f = random_kernel(&mut r, S, 8);
        let g = random_kernel(&mut r, S, 8);
        let fg = f.compose(&g).unwrap();
        let add = |a: Vec<i64>, b: Vec<i64>| a.iter().zip(&b).map(|(x, y)| x + y).collect::<Vec<_>>();
        for c in S.zs() {
            prop_assert_eq!(johnson_z(&fg, c).unwrap(), add(johnson_z(&f, c).unwrap(), johnson_z(&g, c).unwrap()));
        }
        for c in S.ys() {
            prop_assert_eq!(johnson_y(&fg, c).unwrap(), add(johnson_y(&f, c).unwrap(), johnson_y(&g, c).unwrap()));
        }
        let (a, b, ab) = (act_hom(&f).unwrap(), act_hom(&g).unwrap(), act_hom(&fg).unwrap());
        for i in 0..ab.matrix.rows() {
            for j in 0..ab.matrix.cols() {
                prop_assert_eq!(ab.matrix.get(i, j), a.matrix.get(i, j) + b.matrix.get(i, j));
            }
        }
    }

    #[test]
    fn johnson_is_crossed(seed in any::<u64>()) {
        let mut r = rng(seed);
        let f = random_kernel(&mut r, S, 8);
        let g = random_kernel(&mut r, S, 8);
        let jf = johnson_crossed(&f).unwrap();
        let jg = johnson_crossed(&g).unwrap();
        let jfg = johnson_crossed(&f.compose(&g).unwrap()).unwrap();
        for ((c, v), ((_, a), (_, b))) in jfg.values.iter().zip(jf.values.iter().zip(&jg.values)) {
            prop_assert_eq!(v, &a.add(&wedge_push(&f, b)), "at {}", c);
        }
    }

    // ---- cocycle ----

    #[test]
    fn projection_is_well_defined(seed in any::<u64>()) {
        let s = sig(1, 2, 1);
        let ctx = PairingContext::new(s, Gen::y(1), Gen::x(1), Gen::z(1)).unwrap();
        let mut r = rng(seed);
        let u = random_ny(&mut r, s, 4);
        let w1 = random_reduced(&mut r, s, 4).commutator(&random_reduced(&mut r, s, 4));
        let w2 = random_ny(&mut r, s, 2);
        let c = w1.multiply(&w2);
        let y = ctx.y();
        let moved: Word = u.substitute(|g, b, inv| {
            if g == y {
                b.push_word(&y.word().conjugate(&c), inv);
            } else {
                b.push(Letter { gen: g, inverse: inv });
            }
        });
        prop_assert_eq!(ny_project(&ctx, &moved).unwrap(), ny_project(&ctx, &u).unwrap());
    }

    #[test]
    fn i_s_twisted_identity(seed in any::<u64>()) {
        let s = sig(2, 1, 1);
        let ctx = PairingContext::default_for(s).unwrap();
        let mut r = rng(seed);
        let f = random_kernel(&mut r, s, 8);
        let g = random_kernel(&mut r, s, 8);
        let fg = f.compose(&g).unwrap();
        let shift = jprime_y(&ctx, &f).unwrap();
        for t in s.xs().chain(s.zs()) {
            let lhs = i_s(&ctx, &fg, t).unwrap();
            let rhs = &i_s(&ctx, &g, t).unwrap().shift(&shift) + &i_s(&ctx, &f, t).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn i_s_and_alpha_additive_on_l(seed in any::<u64>()) {
        let s = sig(1, 2, 1);
        let ctx = PairingContext::default_for(s).unwrap();
        let mut r = rng(seed);
        let f = drop_to_l(&ctx, &random_kernel(&mut r, s, 8)).unwrap();
        let g = drop_to_l(&ctx, &random_kernel(&mut r, s, 8)).unwrap();
        let fg = f.compose(&g).unwrap();
        for t in s.xs().chain(s.zs()) {
            prop_assert_eq!(i_s(&ctx, &fg, t).unwrap(), &i_s(&ctx, &f, t).unwrap() + &i_s(&ctx, &g, t).unwrap());
        }
        for k in -2..3 {
            prop_assert_eq!(alpha(&ctx, k, &fg).unwrap(), alpha(&ctx, k, &f).unwrap() + alpha(&ctx, k, &g).unwrap());
        }
    }
}

#[test]
fn generating_sets_membership() {
    for s in [sig(2, 2, 2), sig(0, 2, 1), sig(3, 1, 0)] {
        for t in sk_symbols(s) {
            assert!(
                is_in_kernel(&NamedAut::from_valid_spelling(s, &t.word())).unwrap(),
                "{t}"
            );
        }
        for t in sq_symbols(s) {
            let f = NamedAut::from_valid_spelling(s, &t.word());
            assert!(f.is_in_autfb());
            assert!(!f.is_in_kernel().unwrap(), "{t}");
        }
    }
}

#[test]
fn abelian_cycle_pairs_commute() {
    for s in [sig(1, 1, 1), sig(0, 1, 2), sig(2, 2, 1)] {
        let ctx = PairingContext::default_for(s).unwrap();
        let g = ctx.g();
        for m in 1..=6 {
            let f = ctx.f_m(m);
            assert_eq!(f.compose(&g).unwrap(), g.compose(&f).unwrap());
        }
    }
}

#[test]
fn support_bounds_for_all_single_symbols() {
    for s in [sig(2, 2, 2), sig(3, 1, 3)] {
        for t in sq_symbols(s) {
            for l in [Letter::pos(t), Letter::neg(t)] {
                let tw = SymbolWord::from_letter(l);
                for k in sk_symbols(s) {
                    assert!(
                        action_bounds_hold(&tw, &k.word(), &action_f(l, k)),
                        "t={l} s={k}"
                    );
                }
            }
        }
    }
}

#[test]
fn action_consistency_small_signatures() {
    for n in 0..=3 {
        for k in 1..=3 {
            for l in 0..=3 {
                let s = sig(n, k, l);
                assert!(
                    verify_action_consistency(s).iter().all(|c| c.passed()),
                    "{s}"
                );
            }
        }
    }
}

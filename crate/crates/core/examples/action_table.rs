//! The action of `S_Q` on `F(S_K)` by rewriting, checked against conjugation.

use autfb::automorphism::Symbol;
use autfb::presentation::{
    action_extend, action_f, defect_instances, nontrivial_actors, verify_action_consistency,
};
use autfb::{Gen, Letter, Signature, SymbolWord};

pub fn main() {
    let sig = Signature::new(2, 2, 2).unwrap();
    let s = Symbol::mul(Gen::x(1), 1, Gen::y(1));
    let t = Letter::pos(Symbol::swap(1, 2));
    println!("f({t}, {s}) = {}", action_f(t, s));
    println!(
        "{} symbols act nontrivially on {s}",
        nontrivial_actors(sig, s).len()
    );

    let tw: SymbolWord = "P[1,2] I[1]".parse().unwrap();
    println!("f({tw}, {s}) = {}", action_extend(&tw, &s.word()));

    let checks = verify_action_consistency(sig);
    let ok = checks.iter().filter(|c| c.passed()).count();
    println!("consistency: {ok}/{} pairs", checks.len());

    let defects = defect_instances(sig);
    let literal = defects.iter().filter(|d| d.holds_literally()).count();
    println!(
        "defect rows: {literal}/{} hold in the free group on S_K",
        defects.len()
    );
}

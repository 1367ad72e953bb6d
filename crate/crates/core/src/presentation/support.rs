//! Support and multiplier sets of words over named generators.

use std::collections::BTreeSet;

use crate::automorphism::{Symbol, SymbolWord};
use crate::freegroup::{Gen, Letter};

/// Signed generators a symbol may alter.
pub fn symbol_support(s: Symbol) -> BTreeSet<Letter<Gen>> {
    let both = |g: Gen| [Letter::pos(g), Letter::neg(g)];
    match s {
        Symbol::Inv { i } => both(Gen::x(i)).into(),
        Symbol::Swap { i, j } => both(Gen::x(i)).into_iter().chain(both(Gen::x(j))).collect(),
        Symbol::Mul { v, eps, .. } => [Letter::with_sign(v, eps > 0)].into(),
        Symbol::Con { v, .. } => both(v).into(),
    }
}

/// Generators a symbol multiplies by.
pub fn symbol_mult(s: Symbol) -> BTreeSet<Gen> {
    match s {
        Symbol::Inv { i } => [Gen::x(i)].into(),
        Symbol::Swap { i, j } => [Gen::x(i), Gen::x(j)].into(),
        Symbol::Mul { w, .. } | Symbol::Con { w, .. } => [w].into(),
    }
}

/// Union of the supports of the letters of `w`.
pub fn support(w: &SymbolWord) -> BTreeSet<Letter<Gen>> {
    w.iter().flat_map(|l| symbol_support(l.gen)).collect()
}

/// Union of the multiplier sets of the letters of `w`.
pub fn mult_set(w: &SymbolWord) -> BTreeSet<Gen> {
    w.iter().flat_map(|l| symbol_mult(l.gen)).collect()
}

/// `M^{±1}` for a set of generators.
pub fn signed_closure(m: &BTreeSet<Gen>) -> BTreeSet<Letter<Gen>> {
    m.iter()
        .flat_map(|&g| [Letter::pos(g), Letter::neg(g)])
        .collect()
}

/// The three disjointness conditions under which `t` acts trivially on `s`.
pub fn disjoint_for_trivial_action(t: &SymbolWord, s: &SymbolWord) -> bool {
    let (st, ss) = (support(t), support(s));
    st.is_disjoint(&ss)
        && ss.is_disjoint(&signed_closure(&mult_set(t)))
        && st.is_disjoint(&signed_closure(&mult_set(s)))
}

/// Containments bounding the support and multipliers of `f(t, s)`.
pub fn action_bounds_hold(t: &SymbolWord, s: &SymbolWord, f: &SymbolWord) -> bool {
    let ms = mult_set(s);
    let mut supp_bound = support(s);
    supp_bound.extend(support(t));
    supp_bound.extend(signed_closure(&ms));
    let mut mult_bound = ms;
    mult_bound.extend(mult_set(t));
    support(f).is_subset(&supp_bound) && mult_set(f).is_subset(&mult_bound)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sets_of_generators() {
        let s: SymbolWord = "M[x1^-1,y2] C[z1,y1]^-1 P[1,2]".parse().unwrap();
        let supp: Vec<String> = support(&s).iter().map(|l| l.to_string()).collect();
        assert_eq!(supp.len(), 6);
        let mult: Vec<String> = mult_set(&s).iter().map(|g| g.to_string()).collect();
        assert_eq!(mult, ["x1", "x2", "y1", "y2"]);
    }
}

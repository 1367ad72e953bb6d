//! The action of `F(S_Q)` on `F(S_K)`: for a letter `t` over `S_Q` and a
//! generator `s ∈ S_K`, `f(t, s)` is a word over `S_K` representing
//! `t s t^{-1}`.

use rayon::prelude::*;

use crate::automorphism::{sk_symbols, sq_symbols, NamedAut, Symbol, SymbolWord};
use crate::freegroup::{Gen, Letter, Signature};

fn w(s: Symbol) -> SymbolWord {
    s.word()
}

fn p(s: Symbol, e: i64) -> SymbolWord {
    s.pow(e)
}

fn cat<const N: usize>(parts: [SymbolWord; N]) -> SymbolWord {
    SymbolWord::reduce(parts.iter().flat_map(|x| x.letters().iter().copied()))
}

/// `b^{-e} a b^{e}`.
fn conj_by(a: SymbolWord, b: Symbol, e: i64) -> SymbolWord {
    cat([p(b, -e), a, p(b, e)])
}

/// `f(t, s)` for `t ∈ S_Q^{±1}` and `s ∈ S_K`. Pairs not covered by the table act trivially.
pub fn action_f(t: Letter<Symbol>, s: Symbol) -> SymbolWord {
    let eta = t.exponent();
    let sw = w(s);
    match (s, t.gen) {
        (Symbol::Mul { v: xa, eps, w: y }, tg) if xa.is_x() && y.is_y() => match tg {
            Symbol::Mul {
                v,
                eps: e2,
                w: target,
            } if v == xa && e2 == eps => {
                // M_{x_a^ε, x_b}^δ or M_{x_a^ε, z_i}^δ
                conj_by(sw, Symbol::con(y, target), eta)
            }
            Symbol::Mul {
                v: xb,
                eps: d,
                w: target,
            } if target == xa => {
                let myb = Symbol::mul(xb, d, y);
                if eta == eps as i64 {
                    cat([sw, conj_by(p(myb, -1), Symbol::con(y, xa), eps as i64)])
                } else {
                    cat([sw, w(myb)])
                }
            }
            Symbol::Con { v: zi, w: target } if zi.is_z() && target == xa => {
                let czy = Symbol::con(zi, y);
                if eta == eps as i64 {
                    cat([sw, conj_by(p(czy, -1), Symbol::con(y, xa), eps as i64)])
                } else {
                    cat([sw, w(czy)])
                }
            }
            Symbol::Swap { i, j } if xa == Gen::x(i) || xa == Gen::x(j) => {
                let other = if xa == Gen::x(i) {
                    Gen::x(j)
                } else {
                    Gen::x(i)
                };
                w(Symbol::mul(other, eps, y))
            }
            Symbol::Inv { i } if xa == Gen::x(i) => w(Symbol::mul(xa, -eps, y)),
            _ => sw,
        },
        (Symbol::Con { v: y, w: xa }, tg) if y.is_y() && xa.is_x() => match tg {
            Symbol::Mul { v, eps, w: target } if v == xa => {
                // (C_{y,x_a}^ε C_{y,target}^δ)^ε
                cat([
                    p(Symbol::con(y, xa), eps as i64),
                    p(Symbol::con(y, target), eta),
                ])
                .pow(eps as i64)
            }
            Symbol::Swap { i, j } if xa == Gen::x(i) || xa == Gen::x(j) => {
                let other = if xa == Gen::x(i) {
                    Gen::x(j)
                } else {
                    Gen::x(i)
                };
                w(Symbol::con(y, other))
            }
            Symbol::Inv { i } if xa == Gen::x(i) => p(s, -1),
            _ => sw,
        },
        (Symbol::Con { v: zi, w: y }, tg) if zi.is_z() && y.is_y() => match tg {
            Symbol::Con { v, w: xa } if v == zi && xa.is_x() => {
                conj_by(sw, Symbol::con(y, xa), eta)
            }
            Symbol::Con { v, w: zj } if v == zi && zj.is_z() => {
                conj_by(sw, Symbol::con(y, zj), eta)
            }
            Symbol::Con { v: zj, w: target } if target == zi && zj.is_z() => cat([
                sw,
                w(Symbol::con(zj, y)).commutator(&p(Symbol::con(y, zi), -eta)),
            ]),
            Symbol::Mul {
                v: xa,
                eps,
                w: target,
            } if target == zi => cat([
                sw,
                w(Symbol::mul(xa, eps, y)).commutator(&p(Symbol::con(y, zi), -eta)),
            ]),
            _ => sw,
        },
        (Symbol::Con { v: y, w: zi }, Symbol::Con { v, w: target })
            if y.is_y() && zi.is_z() && v == zi =>
        {
            conj_by(sw, Symbol::con(y, target), eta)
        }
        _ => sw,
    }
}

/// `f(t, u)` for a single letter `t` and a word `u` over `S_K`.
pub fn action_letter(t: Letter<Symbol>, u: &SymbolWord) -> SymbolWord {
    u.substitute(|s, b, inverse| b.push_word(&action_f(t, s), inverse))
}

/// Extends `f` to `F(S_Q) × F(S_K)`: `f(t_1⋯t_m, u) = f(t_1, ⋯ f(t_m, u))`.
pub fn action_extend(t: &SymbolWord, u: &SymbolWord) -> SymbolWord {
    t.letters()
        .iter()
        .rev()
        .fold(u.clone(), |acc, &l| action_letter(l, &acc))
}

/// Result of checking `f(t, s) = t s t^{-1}` in `AutFB` for one pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionCheck {
    pub t: Letter<Symbol>,
    pub s: Symbol,
    /// `f(t, s)` evaluates to `t s t^{-1}`.
    pub conjugation: bool,
    /// `f(t^{-1}, f(t, s)) = s` as reduced words.
    pub inverse: bool,
}

impl ActionCheck {
    pub fn passed(&self) -> bool {
        self.conjugation && self.inverse
    }
}

/// Checks every pair `(t, s) ∈ S_Q^{±1} × S_K` at the given signature.
pub fn verify_action_consistency(sig: Signature) -> Vec<ActionCheck> {
    let pairs: Vec<(Letter<Symbol>, Symbol)> = sq_symbols(sig)
        .into_iter()
        .flat_map(|t| [Letter::pos(t), Letter::neg(t)])
        .flat_map(|t| sk_symbols(sig).into_iter().map(move |s| (t, s)))
        .collect();
    pairs
        .into_par_iter()
        .map(|(t, s)| {
            let f = action_f(t, s);
            let tw = SymbolWord::from_letter(t);
            let lhs = cat([tw.clone(), w(s), tw.invert()]);
            let conjugation =
                NamedAut::from_valid_spelling(sig, &lhs) == NamedAut::from_valid_spelling(sig, &f);
            let inverse = action_letter(t.inv(), &f) == w(s);
            ActionCheck {
                t,
                s,
                conjugation,
                inverse,
            }
        })
        .collect()
}

/// The `S_Q` letters for which `f(t, s)` is given by the table rather than the default.
pub fn nontrivial_actors(sig: Signature, s: Symbol) -> Vec<Letter<Symbol>> {
    sq_symbols(sig)
        .into_iter()
        .flat_map(|t| [Letter::pos(t), Letter::neg(t)])
        .filter(|&t| action_f(t, s) != w(s))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn consistency_small() {
        let sig = Signature::new(2, 1, 1).unwrap();
        let bad: Vec<_> = verify_action_consistency(sig)
            .into_iter()
            .filter(|c| !c.passed())
            .collect();
        assert!(bad.is_empty(), "{bad:?}");
    }

    #[test]
    fn inversion_row() {
        let s = Symbol::mul(Gen::x(1), 1, Gen::y(1));
        let f = action_f(Symbol::inv(1).letter(), s);
        assert_eq!(f.to_string(), "M[x1^-1,y1]");
    }

    #[test]
    fn extend_is_a_left_action() {
        let sig = Signature::new(2, 1, 1).unwrap();
        let t: SymbolWord = "M[x1^+1,x2] C[z1,x1]^-1".parse().unwrap();
        let u: SymbolWord = "M[x1^+1,y1] C[z1,y1]".parse().unwrap();
        let lhs = cat([t.clone(), u.clone(), t.invert()]);
        let f = action_extend(&t, &u);
        assert_eq!(
            NamedAut::from_valid_spelling(sig, &lhs),
            NamedAut::from_valid_spelling(sig, &f)
        );
        assert_eq!(action_extend(&t.invert(), &f), u);
    }
}

//! Finite truncations of the L-presentation of the kernel: the relators
//! `f(w, r)` for basic relators `r` and reduced words `w` over `S_Q^{±1}` of
//! bounded length.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::automorphism::{sq_symbols, Symbol, SymbolWord};
use crate::error::Result;
use crate::freegroup::{Letter, Signature};

use super::action::action_extend;
use super::relations::enumerate_relations;

/// Reduced words over `S_Q^{±1}` of length at most `depth`, shortest first.
pub fn sq_words(sig: Signature, depth: usize) -> Vec<SymbolWord> {
    let letters: Vec<Letter<Symbol>> = sq_symbols(sig)
        .into_iter()
        .flat_map(|t| [Letter::pos(t), Letter::neg(t)])
        .collect();
    let mut out = vec![SymbolWord::identity()];
    let mut frontier = out.clone();
    for _ in 0..depth {
        let next: Vec<SymbolWord> = frontier
            .iter()
            .flat_map(|w| {
                letters.iter().filter_map(move |&l| {
                    let ext = w.multiply(&SymbolWord::from_letter(l));
                    (ext.len() == w.len() + 1).then_some(ext)
                })
            })
            .collect();
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// The basic relators of the kernel at `sig`.
pub fn basic_relators(sig: Signature) -> Result<Vec<SymbolWord>> {
    Ok(enumerate_relations("R", sig)?
        .iter()
        .map(|r| r.relator())
        .collect())
}

/// All `f(w, r)` with `|w| ≤ depth`, deduplicated in first-seen order.
pub fn lpres_expand(sig: Signature, depth: usize) -> Result<Vec<SymbolWord>> {
    let rels = basic_relators(sig)?;
    let words = sq_words(sig, depth);
    let images: Vec<Vec<SymbolWord>> = words
        .par_iter()
        .map(|w| rels.iter().map(|r| action_extend(w, r)).collect())
        .collect();
    let mut seen = HashSet::new();
    Ok(images
        .into_iter()
        .flatten()
        .filter(|r| seen.insert(r.clone()))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_counts() {
        // 4 symbols at (1,1,1): 1 + 8 + 8·7.
        let sig = Signature::new(1, 1, 1).unwrap();
        assert_eq!(sq_symbols(sig).len(), 4);
        assert_eq!(sq_words(sig, 2).len(), 65);
    }

    #[test]
    fn depth_zero_is_basic() {
        let sig = Signature::new(1, 2, 0).unwrap();
        let base = basic_relators(sig).unwrap();
        let distinct: HashSet<_> = base.into_iter().collect();
        assert_eq!(lpres_expand(sig, 0).unwrap().len(), distinct.len());
    }
}

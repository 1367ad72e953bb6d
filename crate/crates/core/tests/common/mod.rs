#![allow(dead_code)]

use autfb::automorphism::{sk_symbols, sq_symbols};
use autfb::{Letter, NamedAut, Signature, Symbol, SymbolWord};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn sig(n: u32, k: u32, l: u32) -> Signature {
    Signature::new(n, k, l).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A reduced random word of length at most `max_len` over `alphabet^{±1}`.
pub fn random_word(rng: &mut impl Rng, alphabet: &[Symbol], max_len: usize) -> SymbolWord {
    let len = rng.gen_range(0..=max_len);
    SymbolWord::reduce((0..len).map(|_| {
        let s = *alphabet.choose(rng).unwrap();
        Letter::with_sign(s, rng.gen_bool(0.5))
    }))
}

pub fn random_sk_word(rng: &mut impl Rng, sig: Signature, max_len: usize) -> SymbolWord {
    random_word(rng, &sk_symbols(sig), max_len)
}

pub fn random_sq_word(rng: &mut impl Rng, sig: Signature, max_len: usize) -> SymbolWord {
    random_word(rng, &sq_symbols(sig), max_len)
}

/// A random kernel element with an `S_K` spelling of length at most `max_len`.
pub fn random_kernel(rng: &mut impl Rng, sig: Signature, max_len: usize) -> NamedAut {
    NamedAut::from_valid_spelling(sig, &random_sk_word(rng, sig, max_len))
}

//! Reduced words, conjugacy and the abelianization of `F_{n,k,l}`.

use autfb::{Gen, Signature, Word};

pub fn main() {
    let sig = Signature::new(2, 1, 1).unwrap();
    let u = sig.parse_word("x1 y1 y1^-1 x2 z1").unwrap();
    let w = sig.parse_word("x2^-1 y1").unwrap();
    println!("u = {u}");
    println!("u w = {}", u.multiply(&w));
    println!("u^-1 = {}", u.invert());

    let c = u.conjugate(&w);
    println!("w u w^-1 = {c}, conjugate to u: {}", c.is_conjugate(&u));
    let (core, conj) = c.cyclic_reduce();
    println!("cyclic core {core}, conjugator {conj}");

    let k: Word = "x1 y1 x1^-1 y1^-1".parse().unwrap();
    println!("[x1,y1] abelianizes to {:?}", k.abelianize(sig).0);
    println!("u with Y deleted: {}", u.delete_y());
    println!("u mentions z1: {}", u.mentions(Gen::z(1)));
}

//! Named generators of `AutFB(n,k,l)`, composition and membership tests.

use autfb::automorphism::{sk_symbols, sq_symbols};
use autfb::{GeneratorImages, NamedAut, Signature};

pub fn main() {
    let sig = Signature::new(2, 1, 1).unwrap();
    let m = NamedAut::parse(sig, "M[x1^+1,y1]").unwrap();
    let c = NamedAut::parse(sig, "C[y1,x2]").unwrap();
    print!("M[x1^+1,y1]:\n{}", m.dump());

    let mc = m.compose(&c).unwrap();
    let u = sig.parse_word("x1 y1 z1").unwrap();
    println!("(M C)(x1 y1 z1) = {}", mc.apply(&u));
    println!(
        "M C M^-1 C^-1 = id: {}",
        m.commutator(&c).unwrap().is_identity()
    );
    println!(
        "(M C)(M C)^-1 = id: {}",
        mc.compose(&mc.inverse()).unwrap().is_identity()
    );

    println!(
        "|S_K| = {}, |S_Q| = {}",
        sk_symbols(sig).len(),
        sq_symbols(sig).len()
    );
    let p = NamedAut::parse(sig, "P[1,2]").unwrap();
    println!(
        "P[1,2] in AutFB: {}, in kernel: {}",
        p.is_in_autfb(),
        p.is_in_kernel().unwrap()
    );
    println!("M in kernel: {}", m.is_in_kernel().unwrap());
}

//! Expands the finite L-presentation of the kernel and checks every relator.

use autfb::presentation::{basic_relators, lpres_expand};
use autfb::{NamedAut, Signature};

pub fn main() {
    let sig = Signature::new(1, 1, 1).unwrap();
    let base = basic_relators(sig).unwrap();
    println!("{} basic relators", base.len());
    for depth in 0..=2 {
        let rels = lpres_expand(sig, depth).unwrap();
        let sound = rels
            .iter()
            .all(|w| NamedAut::from_valid_spelling(sig, w).is_identity());
        println!("depth {depth}: {} relators, sound = {sound}", rels.len());
    }
}

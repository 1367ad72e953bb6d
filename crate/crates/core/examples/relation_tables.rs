//! Verifies the relation families of the kernel and of the ambient group.

use autfb::presentation::{enumerate_relations, verify_relations};
use autfb::Signature;

pub fn main() {
    let sig = Signature::new(2, 2, 2).unwrap();
    for tag in ["N", "Q", "R", "C", "Rconj"] {
        let report = verify_relations(tag, sig).unwrap();
        println!("{tag}: {}", report.footer());
    }
    let r5 = enumerate_relations("R5", Signature::new(1, 1, 0).unwrap()).unwrap();
    for inst in &r5 {
        println!("R5 {}: {} = {}", inst.params, inst.lhs, inst.rhs);
    }
}

//! Kernel elements of the alternative kernel with pairwise distinct images under `I_s`.

use autfb::cocycle::{distinct_image_witness, PairingContext};
use autfb::{Gen, Signature};

pub fn main() {
    let sig = Signature::new(2, 1, 1).unwrap();
    let ctx = PairingContext::default_for(sig).unwrap();
    for m in 0..=4 {
        let (h, sum) = distinct_image_witness(&ctx, m, Gen::x(1), Gen::z(1)).unwrap();
        let image = sum.to_string().replace('\n', "  ");
        println!(
            "m={m}\tin AutFB': {}\tI_x1(h_m) = {image}",
            h.is_in_autfb_prime()
        );
    }
}

//! The pairing between the cocycles and the abelian cycles built from `f_m` and `g`.

use autfb::cocycle::{i_s, pairing_table, pairing_via_zeta, PairingContext};
use autfb::{Gen, Signature};

pub fn main() {
    let sig = Signature::new(1, 1, 1).unwrap();
    let ctx = PairingContext::new(sig, Gen::y(1), Gen::x(1), Gen::z(1)).unwrap();
    println!("I_b(g):\n{}", i_s(&ctx, &ctx.g(), ctx.b()).unwrap());
    println!("I_b(f_2):\n{}", i_s(&ctx, &ctx.f_m(2), ctx.b()).unwrap());

    for row in pairing_table(&ctx, 4, 4).unwrap() {
        println!(
            "{}",
            row.iter()
                .map(|v| format!("{v:>2}"))
                .collect::<Vec<_>>()
                .join(" ")
        );
    }
    println!(
        "through the cocycle itself: <zeta_3, mu_3> = {}",
        pairing_via_zeta(&ctx, 3, 3).unwrap()
    );
}

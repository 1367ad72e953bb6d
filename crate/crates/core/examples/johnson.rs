//! Johnson-type homomorphisms of kernel elements.

use autfb::abelianization::{act_hom, johnson_crossed, johnson_full, johnson_y, johnson_z};
use autfb::{Gen, NamedAut, Signature};

pub fn main() {
    let sig = Signature::new(0, 2, 1).unwrap();
    for text in ["C[y1,y2]", "C[z1,y2]", "C[y2,z1]"] {
        let j = johnson_full(&NamedAut::parse(sig, text).unwrap()).unwrap();
        for (c, w) in j.values.iter().filter(|(_, w)| !w.is_zero()) {
            println!("J({text})({c}) = {}", w.display(sig));
        }
    }

    let sig = Signature::new(1, 1, 1).unwrap();
    let f = NamedAut::parse(sig, "M[x1^+1,y1] C[y1,x1] C[z1,y1]").unwrap();
    print!("A(f):\n{}", act_hom(&f).unwrap());
    println!("J'_y1(f) = {:?}", johnson_y(&f, Gen::y(1)).unwrap());
    println!("J_z1(f) = {:?}", johnson_z(&f, Gen::z(1)).unwrap());
    println!(
        "crossed J(f) coordinates: {:?}",
        johnson_crossed(&f).unwrap().coords()
    );
}

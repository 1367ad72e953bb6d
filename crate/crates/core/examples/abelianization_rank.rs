//! Exact rank of the abelianization of the kernel, against the closed formulas.

use autfb::abelianization::{abelianization_matrix, alternative_rank, RankReport};
use autfb::Signature;

pub fn main() {
    println!("sig\texpected\tcomputed\tstatus\t2kn+kl");
    for (n, k, l) in [(0, 2, 1), (1, 1, 1), (2, 3, 1), (3, 2, 0)] {
        let sig = Signature::new(n, k, l).unwrap();
        let report = RankReport::compute(sig).unwrap();
        let alt = if n >= 1 {
            alternative_rank(sig).to_string()
        } else {
            "-".into()
        };
        println!("{report}\t{alt}");
    }
    let m = abelianization_matrix(Signature::new(1, 1, 1).unwrap()).unwrap();
    println!("matrix at (1,1,1) is {}x{}:\n{m}", m.rows(), m.cols());
}

//! Abelian quotients of the kernel: the homology action `A`, the Johnson
//! homomorphism `J` and its boundary pieces `J_c`, `J'_c`, and exact ranks.
//!
//! Wedge orientation: a commutator `[g, h]` has class `ḡ ∧ h̄`, and
//! `J(f)(c)` is the class of `c · f(c)^{-1}`, so that `J(C_{y_i,y_j})(ȳ_i) = ȳ_i ∧ ȳ_j`.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use rayon::prelude::*;

use crate::automorphism::{is_in_kernel, sk_symbols, GeneratorImages, NamedAut};
use crate::error::{Error, Result};
use crate::freegroup::{AbelianVector, Gen, Signature, Word};
use crate::linalg::IntMatrix;

/// An element of `⋀² V̄`, keyed by generator positions `i < j`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Wedge(BTreeMap<(usize, usize), i64>);

impl Wedge {
    pub fn zero() -> Self {
        Wedge::default()
    }

    /// `e_i ∧ e_j` for generator positions.
    pub fn basis(i: usize, j: usize) -> Self {
        let mut w = Wedge::zero();
        w.add_pair(i, j, 1);
        w
    }

    /// `ḡ ∧ h̄`.
    pub fn of(sig: Signature, g: Gen, h: Gen) -> Self {
        Wedge::basis(sig.position(g), sig.position(h))
    }

    /// `u ∧ v` for abelian vectors.
    pub fn product(u: &AbelianVector, v: &AbelianVector) -> Self {
        let mut w = Wedge::zero();
        for (i, &a) in u.0.iter().enumerate().filter(|(_, a)| **a != 0) {
            for (j, &b) in v.0.iter().enumerate().filter(|(_, b)| **b != 0) {
                w.add_pair(i, j, a * b);
            }
        }
        w
    }

    fn add_pair(&mut self, i: usize, j: usize, c: i64) {
        if i == j || c == 0 {
            return;
        }
        let (key, c) = if i < j { ((i, j), c) } else { ((j, i), -c) };
        let e = self.0.entry(key).or_insert(0);
        *e += c;
        if *e == 0 {
            self.0.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeff(&self, i: usize, j: usize) -> i64 {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.0.get(&(i, j)).copied().unwrap_or(0),
            std::cmp::Ordering::Greater => -self.coeff(j, i),
            std::cmp::Ordering::Equal => 0,
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = ((usize, usize), i64)> + '_ {
        self.0.iter().map(|(&k, &v)| (k, v))
    }

    /// Coordinates in the basis `e_i ∧ e_j`, `i < j < dim`, lexicographic.
    pub fn coords(&self, dim: usize) -> Vec<i64> {
        (0..dim)
            .tuple_combinations()
            .map(|(i, j)| self.coeff(i, j))
            .collect()
    }

    pub fn add(&self, other: &Wedge) -> Wedge {
        let mut w = self.clone();
        for ((i, j), c) in other.terms() {
            w.add_pair(i, j, c);
        }
        w
    }

    pub fn scale(&self, s: i64) -> Wedge {
        let mut w = Wedge::zero();
        for ((i, j), c) in self.terms() {
            w.add_pair(i, j, c * s);
        }
        w
    }

    pub fn display(&self, sig: Signature) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.terms()
            .map(|((i, j), c)| format!("{c:+}*{}^{}", sig.gen_at(i), sig.gen_at(j)))
            .join(" ")
    }
}

/// Class of `w ∈ [F, F]` in `[F,F]/[F,[F,F]] ≅ ⋀² V̄`.
///
/// Each letter `g^e` contributes `e · (prefix ∧ ḡ)`; the total is twice the class.
pub fn commutator_class(sig: Signature, w: &Word) -> Result<Wedge> {
    let mut prefix = vec![0i64; sig.rank()];
    let mut twice: BTreeMap<(usize, usize), i64> = BTreeMap::new();
    for l in w {
        let g = sig.position(l.gen);
        let e = l.exponent();
        for (i, &p) in prefix
            .iter()
            .enumerate()
            .filter(|(i, p)| **p != 0 && *i != g)
        {
            let (key, s) = if i < g { ((i, g), 1) } else { ((g, i), -1) };
            *twice.entry(key).or_insert(0) += s * e * p;
        }
        prefix[g] += e;
    }
    if prefix.iter().any(|&p| p != 0) {
        return Err(Error::NotInCommutator(w.to_string()));
    }
    let mut out = Wedge::zero();
    for ((i, j), c) in twice {
        debug_assert!(c % 2 == 0, "odd crossing count");
        out.add_pair(i, j, c / 2);
    }
    Ok(out)
}

/// The induced action `f_*` of `f` on `⋀² V̄`.
pub fn wedge_push<F: GeneratorImages + ?Sized>(f: &F, w: &Wedge) -> Wedge {
    let sig = f.signature();
    let ab = |i: usize| f.image(sig.gen_at(i)).abelianize(sig);
    w.terms().fold(Wedge::zero(), |acc, ((i, j), c)| {
        acc.add(&Wedge::product(&ab(i), &ab(j)).scale(c))
    })
}

fn require_kernel<F: GeneratorImages + ?Sized>(f: &F) -> Result<()> {
    if is_in_kernel(f)? {
        Ok(())
    } else {
        Err(Error::NotInKernel)
    }
}

/// `w` with `f(c) = w c w^{-1}`; `c` must be a boundary generator preserved up to conjugacy.
pub fn boundary_conjugator<F: GeneratorImages + ?Sized>(f: &F, c: Gen) -> Word {
    f.image(c)
        .conjugator_of(c.letter())
        .expect("boundary generator is preserved up to conjugacy")
}

/// `A(f)`: a `k × n` matrix, rows indexed by Y, columns by X.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomMatrix {
    pub sig: Signature,
    pub matrix: IntMatrix,
}

impl fmt::Display for HomMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let head: Vec<String> = self.sig.xs().map(|g| g.to_string()).collect();
        writeln!(f, "\t{}", head.join("\t"))?;
        for (r, y) in self.sig.ys().enumerate() {
            let cells: Vec<String> = self.matrix.row(r).iter().map(|v| v.to_string()).collect();
            writeln!(f, "{y}\t{}", cells.join("\t"))?;
        }
        Ok(())
    }
}

/// The homology action `A(f)`: column `x_i` is the Y-part of `f_*(x̄_i) − x̄_i`.
pub fn act_hom<F: GeneratorImages + ?Sized>(f: &F) -> Result<HomMatrix> {
    require_kernel(f)?;
    let sig = f.signature();
    let mut m = IntMatrix::zeros(sig.k as usize, sig.n as usize);
    for (c, x) in sig.xs().enumerate() {
        let d = f.image(x).abelianize(sig) - AbelianVector::unit(sig, x);
        for (r, y) in sig.ys().enumerate() {
            m.set(r, c, d.coord(sig, y));
        }
    }
    Ok(HomMatrix { sig, matrix: m })
}

/// Values of `J(f)` on each `c ∈ Y ∪ Z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JohnsonImage {
    pub sig: Signature,
    pub values: Vec<(Gen, Wedge)>,
}

impl JohnsonImage {
    pub fn get(&self, c: Gen) -> Option<&Wedge> {
        self.values.iter().find(|(g, _)| *g == c).map(|(_, w)| w)
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|(_, w)| w.is_zero())
    }

    /// Concatenated wedge coordinates, `c` in order.
    pub fn coords(&self) -> Vec<i64> {
        let dim = self.sig.rank();
        self.values
            .iter()
            .flat_map(|(_, w)| w.coords(dim))
            .collect()
    }
}

impl fmt::Display for JohnsonImage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (c, w) in &self.values {
            writeln!(f, "{c}\t{}", w.display(self.sig))?;
        }
        Ok(())
    }
}

/// The crossed homomorphism `J` on the kernel at any signature.
pub fn johnson_crossed<F: GeneratorImages + ?Sized>(f: &F) -> Result<JohnsonImage> {
    require_kernel(f)?;
    let sig = f.signature();
    let values = sig
        .ys()
        .chain(sig.zs())
        .map(|c| {
            let u = c.word().multiply(&f.image(c).invert());
            commutator_class(sig, &u).map(|w| (c, w))
        })
        .collect::<Result<_>>()?;
    Ok(JohnsonImage { sig, values })
}

/// The Johnson homomorphism `J`, defined as a homomorphism only when `n = 0`.
pub fn johnson_full<F: GeneratorImages + ?Sized>(f: &F) -> Result<JohnsonImage> {
    let sig = f.signature();
    if sig.n != 0 {
        return Err(Error::RequiresNoX(sig));
    }
    johnson_crossed(f)
}

/// `J_c(f)` for `c ∈ Z`: the Y-coordinates of `w` where `f(c) = w c w^{-1}`.
pub fn johnson_z<F: GeneratorImages + ?Sized>(f: &F, c: Gen) -> Result<Vec<i64>> {
    if !c.is_z() {
        return Err(Error::InvalidGenerator(format!("{c}: J_c needs c in Z")));
    }
    f.signature().check(c)?;
    require_kernel(f)?;
    let sig = f.signature();
    Ok(boundary_conjugator(f, c)
        .abelianize(sig)
        .restrict(sig, sig.ys()))
}

/// `J'_c(f)` for `c ∈ Y`: the X- and Z-coordinates of `w` where `f(c) = w c w^{-1}`.
pub fn johnson_y<F: GeneratorImages + ?Sized>(f: &F, c: Gen) -> Result<Vec<i64>> {
    if !c.is_y() {
        return Err(Error::InvalidGenerator(format!("{c}: J'_c needs c in Y")));
    }
    f.signature().check(c)?;
    require_kernel(f)?;
    let sig = f.signature();
    Ok(boundary_conjugator(f, c)
        .abelianize(sig)
        .restrict(sig, sig.xs().chain(sig.zs())))
}

/// Stacked image of `f` under the map whose image is the abelianization:
/// `J` for `n = 0`, `A ⊕ (⊕ J'_c) ⊕ (⊕ J_c)` otherwise.
pub fn abelianization_row<F: GeneratorImages + ?Sized>(f: &F) -> Result<Vec<i64>> {
    let sig = f.signature();
    if sig.n == 0 {
        return Ok(johnson_full(f)?.coords());
    }
    let a = act_hom(f)?;
    let mut row: Vec<i64> = (0..a.matrix.rows())
        .flat_map(|r| a.matrix.row(r).to_vec())
        .collect();
    for c in sig.ys() {
        row.extend(johnson_y(f, c)?);
    }
    for c in sig.zs() {
        row.extend(johnson_z(f, c)?);
    }
    Ok(row)
}

/// The stacked images of every generator in `S_K`, one row each.
pub fn abelianization_matrix(sig: Signature) -> Result<IntMatrix> {
    if sig.k == 0 {
        return Err(Error::RequiresY(sig));
    }
    let rows = sk_symbols(sig)
        .into_par_iter()
        .map(|s| abelianization_row(&NamedAut::from_valid_spelling(sig, &s.word())))
        .collect::<Result<Vec<_>>>()?;
    let width = if sig.n == 0 {
        sig.rank() * (sig.rank() - 1) / 2 * sig.rank()
    } else {
        let (n, k, l) = (sig.n as usize, sig.k as usize, sig.l as usize);
        k * n + k * (n + l) + l * k
    };
    Ok(IntMatrix::from_rows(width, rows))
}

/// Rank of the abelianization of the kernel, computed exactly.
pub fn abelianization_rank(sig: Signature) -> Result<usize> {
    Ok(abelianization_matrix(sig)?.rank())
}

/// `2kl + k(k−1)` for `n = 0`, `2kn + 2kl` for `n ≥ 1`.
pub fn expected_rank(sig: Signature) -> usize {
    let (n, k, l) = (sig.n as usize, sig.k as usize, sig.l as usize);
    if n == 0 {
        2 * k * l + k * (k - 1)
    } else {
        2 * k * n + 2 * k * l
    }
}

/// The alternative count `2kn + kl` for `n ≥ 1`, kept to report which count the computation confirms.
pub fn alternative_rank(sig: Signature) -> usize {
    let (n, k, l) = (sig.n as usize, sig.k as usize, sig.l as usize);
    2 * k * n + k * l
}

/// `sig<TAB>expected<TAB>computed<TAB>PASS|FAIL`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RankReport {
    pub sig: Signature,
    pub expected: usize,
    pub computed: usize,
}

impl RankReport {
    pub fn compute(sig: Signature) -> Result<Self> {
        Ok(RankReport {
            sig,
            expected: expected_rank(sig),
            computed: abelianization_rank(sig)?,
        })
    }

    pub fn passed(&self) -> bool {
        self.expected == self.computed
    }
}

impl fmt::Display for RankReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}\t{}\t{}\t{}",
            self.sig,
            self.expected,
            self.computed,
            if self.passed() { "PASS" } else { "FAIL" }
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(n: u32, k: u32, l: u32) -> Signature {
        Signature::new(n, k, l).unwrap()
    }

    fn aut(s: Signature, text: &str) -> NamedAut {
        NamedAut::parse(s, text).unwrap()
    }

    #[test]
    fn commutator_class_of_commutator() {
        let s = sig(0, 2, 1);
        let w: Word = "y1 z1 y1^-1 z1^-1".parse().unwrap();
        assert_eq!(
            commutator_class(s, &w).unwrap(),
            Wedge::of(s, Gen::y(1), Gen::z(1))
        );
        let w: Word = "y1".parse().unwrap();
        assert!(commutator_class(s, &w).is_err());
    }

    #[test]
    fn act_hom_examples() {
        let s = sig(2, 2, 0);
        let a = act_hom(&aut(s, "M[x1^+1,y1]")).unwrap();
        assert_eq!(a.matrix.get(0, 0), 1);
        assert_eq!(a.matrix.rows() * a.matrix.cols(), 4);
        assert_eq!(
            (0..2)
                .flat_map(|r| a.matrix.row(r).to_vec())
                .filter(|&v| v != 0)
                .count(),
            1
        );
        assert!(act_hom(&aut(s, "C[y1,x1]")).unwrap().matrix.is_zero());
        assert!(act_hom(&NamedAut::identity(s)).unwrap().matrix.is_zero());
        assert_eq!(act_hom(&aut(s, "M[x1^+1,x2]")), Err(Error::NotInKernel));
    }

    #[test]
    fn johnson_full_examples() {
        let s = sig(0, 2, 2);
        let j = johnson_full(&aut(s, "C[y1,y2]")).unwrap();
        assert_eq!(
            j.get(Gen::y(1)).unwrap(),
            &Wedge::of(s, Gen::y(1), Gen::y(2))
        );
        assert_eq!(j.values.iter().filter(|(_, w)| !w.is_zero()).count(), 1);
        let j = johnson_full(&aut(s, "C[z1,y2]")).unwrap();
        assert_eq!(
            j.get(Gen::z(1)).unwrap(),
            &Wedge::of(s, Gen::z(1), Gen::y(2))
        );
        let j = johnson_full(&aut(s, "C[y2,z2]")).unwrap();
        assert_eq!(
            j.get(Gen::y(2)).unwrap(),
            &Wedge::of(s, Gen::y(2), Gen::z(2))
        );
        assert!(johnson_full(&NamedAut::identity(s)).unwrap().is_zero());
        assert_eq!(
            johnson_full(&NamedAut::identity(sig(1, 1, 0))),
            Err(Error::RequiresNoX(sig(1, 1, 0)))
        );
    }

    #[test]
    fn johnson_boundary_examples() {
        let s = sig(2, 2, 2);
        assert_eq!(
            johnson_z(&aut(s, "C[z1,y2]"), Gen::z(1)).unwrap(),
            vec![0, 1]
        );
        assert_eq!(
            johnson_z(&aut(s, "C[y2,x1]"), Gen::z(1)).unwrap(),
            vec![0, 0]
        );
        assert_eq!(
            johnson_y(&aut(s, "C[y1,x2]"), Gen::y(1)).unwrap(),
            vec![0, 1, 0, 0]
        );
        assert_eq!(
            johnson_y(&aut(s, "C[y1,z1]"), Gen::y(1)).unwrap(),
            vec![0, 0, 1, 0]
        );
        assert_eq!(
            johnson_y(&aut(s, "M[x1^+1,y1]"), Gen::y(1)).unwrap(),
            vec![0, 0, 0, 0]
        );
    }

    #[test]
    fn ranks_match_formulas() {
        for (n, k, l, r) in [
            (0, 2, 1, 6),
            (1, 1, 1, 4),
            (2, 1, 0, 4),
            (0, 1, 2, 4),
            (3, 2, 0, 12),
        ] {
            let s = sig(n, k, l);
            assert_eq!(expected_rank(s), r);
            assert_eq!(abelianization_rank(s).unwrap(), r, "{s}");
        }
        assert_eq!(
            abelianization_rank(sig(1, 0, 1)),
            Err(Error::RequiresY(sig(1, 0, 1)))
        );
    }

    #[test]
    fn redundancy_relations() {
        let s = sig(2, 2, 0);
        for i in 1..=2 {
            for j in 1..=2 {
                let lhs = aut(s, &format!("M[x{i}^+1,y{j}] M[x{i}^-1,y{j}]"));
                let m = aut(s, &format!("M[x{i}^+1,y{j}]"));
                let c = aut(s, &format!("C[y{j},x{i}]"));
                assert_eq!(lhs, m.commutator(&c).unwrap());
            }
        }
        let lhs = aut(s, "C[y1,y2]");
        let rhs = aut(s, "C[y1,x1]")
            .inverse()
            .commutator(&aut(s, "M[x1^+1,y2]"))
            .unwrap();
        assert_eq!(lhs, rhs);
    }
}

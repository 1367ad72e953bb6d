//! Automorphisms of `F_{n,k,l}` given by named generators.
//!
//! A [`NamedAut`] carries its spelling over [`Symbol`]s together with the
//! evaluated image tables of the automorphism and of its inverse. Spellings
//! compose right to left: the leftmost symbol is applied last.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::freegroup::{FreeWord, Gen, Letter, Signature, Word, WordBuilder};

/// One of the named generators `M_{v^ε,w}`, `C_{v,w}`, `P_{i,j}`, `I_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    /// `M_{v^ε,w}`: `v ↦ w v` for `ε = 1`, `v ↦ v w^{-1}` for `ε = -1`.
    Mul { v: Gen, eps: i8, w: Gen },
    /// `C_{v,w}`: `v ↦ w v w^{-1}`.
    Con { v: Gen, w: Gen },
    /// `P_{i,j}` with `i < j`: swaps `x_i` and `x_j`.
    Swap { i: u32, j: u32 },
    /// `I_i`: `x_i ↦ x_i^{-1}`.
    Inv { i: u32 },
}

/// A word over named generators.
pub type SymbolWord = FreeWord<Symbol>;

impl Symbol {
    pub fn mul(v: Gen, eps: i8, w: Gen) -> Self {
        assert!(eps == 1 || eps == -1, "ε must be ±1");
        Symbol::Mul { v, eps, w }
    }

    pub fn con(v: Gen, w: Gen) -> Self {
        Symbol::Con { v, w }
    }

    /// `P_{i,j}`, stored with `i < j`.
    pub fn swap(i: u32, j: u32) -> Self {
        Symbol::Swap {
            i: i.min(j),
            j: i.max(j),
        }
    }

    pub fn inv(i: u32) -> Self {
        Symbol::Inv { i }
    }

    pub fn letter(self) -> Letter<Symbol> {
        Letter::pos(self)
    }

    pub fn word(self) -> SymbolWord {
        SymbolWord::generator(self)
    }

    /// `self^e` as a symbol word.
    pub fn pow(self, e: i64) -> SymbolWord {
        self.word().pow(e)
    }

    pub fn validate(&self, sig: Signature) -> Result<()> {
        match *self {
            Symbol::Mul { v, eps, w } => {
                if eps != 1 && eps != -1 {
                    return Err(Error::InvalidGenerator(format!("{self}: ε must be ±1")));
                }
                if v == w {
                    return Err(Error::InvalidGenerator(format!("{self}: requires v ≠ w")));
                }
                sig.check(v)?;
                sig.check(w)
            }
            Symbol::Con { v, w } => {
                if v == w {
                    return Err(Error::InvalidGenerator(format!("{self}: requires v ≠ w")));
                }
                sig.check(v)?;
                sig.check(w)
            }
            Symbol::Swap { i, j } => {
                if i == j {
                    return Err(Error::InvalidGenerator(format!("{self}: requires i ≠ j")));
                }
                sig.check(Gen::x(i))?;
                sig.check(Gen::x(j))
            }
            Symbol::Inv { i } => sig.check(Gen::x(i)),
        }
    }

    /// Generators whose image differs from themselves.
    pub fn moved(&self) -> Vec<Gen> {
        match *self {
            Symbol::Mul { v, .. } | Symbol::Con { v, .. } => vec![v],
            Symbol::Swap { i, j } => vec![Gen::x(i), Gen::x(j)],
            Symbol::Inv { i } => vec![Gen::x(i)],
        }
    }

    /// Image of `g` under `self` (or `self^{-1}` when `inverse`), `None` if fixed.
    pub fn image(&self, g: Gen, inverse: bool) -> Option<Word> {
        let pos = |g: Gen| Letter::pos(g);
        let neg = |g: Gen| Letter::neg(g);
        match *self {
            Symbol::Mul { v, eps, w } if g == v => Some(Word::reduce(match (eps, inverse) {
                (1, false) => [pos(w), pos(v)],
                (1, true) => [neg(w), pos(v)],
                (_, false) => [pos(v), neg(w)],
                (_, true) => [pos(v), pos(w)],
            })),
            Symbol::Con { v, w } if g == v => Some(if inverse {
                Word::reduce([neg(w), pos(v), pos(w)])
            } else {
                Word::reduce([pos(w), pos(v), neg(w)])
            }),
            Symbol::Swap { i, j } if g == Gen::x(i) => Some(Gen::x(j).word()),
            Symbol::Swap { i, j } if g == Gen::x(j) => Some(Gen::x(i).word()),
            Symbol::Inv { i } if g == Gen::x(i) => Some(Word::from_letter(neg(g))),
            _ => None,
        }
    }

    /// Membership in `S_K`: `M_{x^ε,y}`, `C_{z,y}`, `C_{y,v}`.
    pub fn in_sk(&self) -> bool {
        match *self {
            Symbol::Mul { v, w, .. } => v.is_x() && w.is_y(),
            Symbol::Con { v, w } => (v.is_z() && w.is_y()) || (v.is_y() && v != w),
            _ => false,
        }
    }

    /// Membership in `S_Q`: swaps, inversions, `M_{x^ε,v}` and `C_{z,v}` with `v ∈ X ∪ Z`.
    pub fn in_sq(&self) -> bool {
        match *self {
            Symbol::Mul { v, w, .. } => v.is_x() && !w.is_y() && v != w,
            Symbol::Con { v, w } => v.is_z() && !w.is_y() && v != w,
            Symbol::Swap { i, j } => i != j,
            Symbol::Inv { .. } => true,
        }
    }

    /// Membership in Nielsen's generating set `S_N` for `Aut(F(X))`.
    pub fn in_sn(&self) -> bool {
        match *self {
            Symbol::Mul { v, w, .. } => v.is_x() && w.is_x() && v != w,
            Symbol::Con { .. } => false,
            Symbol::Swap { i, j } => i != j,
            Symbol::Inv { .. } => true,
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Symbol::Mul { v, eps, w } => {
                write!(f, "M[{v}^{},{w}]", if eps > 0 { "+1" } else { "-1" })
            }
            Symbol::Con { v, w } => write!(f, "C[{v},{w}]"),
            Symbol::Swap { i, j } => write!(f, "P[{i},{j}]"),
            Symbol::Inv { i } => write!(f, "I[{i}]"),
        }
    }
}

impl fmt::Display for Letter<Symbol> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverse {
            write!(f, "{}^-1", self.gen)
        } else {
            write!(f, "{}", self.gen)
        }
    }
}

impl fmt::Display for SymbolWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

fn parse_index(s: &str) -> Result<u32> {
    match s.parse::<u32>() {
        Ok(i) if i >= 1 => Ok(i),
        _ => Err(Error::Parse(format!("bad index {s:?}"))),
    }
}

/// `g`, `g^1`, `g^+1` or `g^-1`; returns the generator and whether it is inverted.
fn parse_signed_gen(s: &str) -> Result<(Gen, bool)> {
    let (base, inverse) = match s.split_once('^') {
        None => (s, false),
        Some((b, "1" | "+1")) => (b, false),
        Some((b, "-1")) => (b, true),
        Some((_, e)) => return Err(Error::Parse(format!("bad exponent {e:?} in {s:?}"))),
    };
    Ok((base.parse()?, inverse))
}

/// Parses one token of the automorphism grammar, e.g. `M[x1^+1,y1]^-1`.
///
/// The extended notation `M[v^ε,w^-1]` and `C[v,w^-1]` is normalized into
/// the inverse of the plain symbol.
pub fn parse_symbol_letter(tok: &str) -> Result<Letter<Symbol>> {
    let bad = || Error::Parse(format!("malformed automorphism token {tok:?}"));
    let open = tok.find('[').ok_or_else(bad)?;
    let close = tok.rfind(']').ok_or_else(bad)?;
    if close < open {
        return Err(bad());
    }
    let mut inverse = match &tok[close + 1..] {
        "" | "^1" | "^+1" => false,
        "^-1" => true,
        _ => return Err(bad()),
    };
    let args: Vec<&str> = tok[open + 1..close].split(',').map(str::trim).collect();
    let sym = match (&tok[..open], args.as_slice()) {
        ("M", [v, w]) => {
            let (v, vinv) = parse_signed_gen(v)?;
            let (w, winv) = parse_signed_gen(w)?;
            inverse ^= winv;
            Symbol::Mul {
                v,
                eps: if vinv { -1 } else { 1 },
                w,
            }
        }
        ("C", [v, w]) => {
            let (v, vinv) = parse_signed_gen(v)?;
            if vinv {
                return Err(bad());
            }
            let (w, winv) = parse_signed_gen(w)?;
            inverse ^= winv;
            Symbol::Con { v, w }
        }
        ("P", [i, j]) => {
            let (i, j) = (parse_index(i)?, parse_index(j)?);
            if i == j {
                return Err(Error::InvalidGenerator(format!("{tok}: requires i ≠ j")));
            }
            Symbol::swap(i, j)
        }
        ("I", [i]) => Symbol::Inv { i: parse_index(i)? },
        _ => return Err(bad()),
    };
    if let Symbol::Mul { v, w, .. } | Symbol::Con { v, w } = sym {
        if v == w {
            return Err(Error::InvalidGenerator(format!("{tok}: requires v ≠ w")));
        }
    }
    Ok(Letter { gen: sym, inverse })
}

impl FromStr for SymbolWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.split_whitespace()
            .map(parse_symbol_letter)
            .collect::<Result<Vec<_>>>()
            .map(SymbolWord::reduce)
    }
}

/// Anything that assigns an image word to each generator.
pub trait GeneratorImages {
    fn signature(&self) -> Signature;

    fn image(&self, g: Gen) -> &Word;

    /// Substitutes images into `u`; inverse letters map to inverted images.
    fn apply(&self, u: &Word) -> Word {
        u.substitute(|g, b: &mut WordBuilder<Gen>, inv| b.push_word(self.image(g), inv))
    }

    /// Like [`GeneratorImages::apply`], rejecting letters outside the signature.
    fn try_apply(&self, u: &Word) -> Result<Word> {
        self.signature().check_word(u)?;
        Ok(self.apply(u))
    }

    /// One line per generator: `x1\t<image>`.
    fn dump(&self) -> String {
        let mut out = String::new();
        for g in self.signature().gens() {
            out.push_str(&format!("{g}\t{}\n", self.image(g)));
        }
        out
    }
}

fn substitute_table(sig: Signature, table: &[Word], u: &Word) -> Word {
    u.substitute(|g, b: &mut WordBuilder<Gen>, inv| b.push_word(&table[sig.position(g)], inv))
}

fn identity_table(sig: Signature) -> Vec<Word> {
    sig.gens().map(Gen::word).collect()
}

/// Replaces `table` (images of some `f`) by the images of `f ∘ sym^{±1}`.
fn compose_right(sig: Signature, table: &mut [Word], sym: Symbol, inverse: bool) {
    let updates: Vec<(usize, Word)> = sym
        .moved()
        .into_iter()
        .map(|g| {
            let img = sym.image(g, inverse).expect("moved generator");
            (sig.position(g), substitute_table(sig, table, &img))
        })
        .collect();
    for (pos, w) in updates {
        table[pos] = w;
    }
}

/// An automorphism together with a spelling in named generators.
#[derive(Debug, Clone)]
pub struct NamedAut {
    sig: Signature,
    spelling: SymbolWord,
    images: Vec<Word>,
    inverse_images: Vec<Word>,
}

impl NamedAut {
    pub fn identity(sig: Signature) -> Self {
        NamedAut {
            sig,
            spelling: SymbolWord::identity(),
            images: identity_table(sig),
            inverse_images: identity_table(sig),
        }
    }

    /// Evaluates a spelling (leftmost symbol applied last).
    pub fn from_spelling(sig: Signature, spelling: &SymbolWord) -> Result<Self> {
        for l in spelling {
            l.gen.validate(sig)?;
        }
        Ok(Self::from_valid_spelling(sig, spelling))
    }

    /// As [`NamedAut::from_spelling`] for spellings already known to be valid.
    pub fn from_valid_spelling(sig: Signature, spelling: &SymbolWord) -> Self {
        let mut images = identity_table(sig);
        for l in spelling {
            compose_right(sig, &mut images, l.gen, l.inverse);
        }
        let mut inverse_images = identity_table(sig);
        for l in spelling.letters().iter().rev() {
            compose_right(sig, &mut inverse_images, l.gen, !l.inverse);
        }
        NamedAut {
            sig,
            spelling: spelling.clone(),
            images,
            inverse_images,
        }
    }

    pub fn from_symbol(sig: Signature, sym: Symbol) -> Result<Self> {
        Self::from_spelling(sig, &sym.word())
    }

    /// Parses the automorphism token grammar.
    pub fn parse(sig: Signature, text: &str) -> Result<Self> {
        Self::from_spelling(sig, &text.parse()?)
    }

    pub fn mul_gen(sig: Signature, v: Gen, eps: i8, w: Gen) -> Result<Self> {
        if eps != 1 && eps != -1 {
            return Err(Error::InvalidGenerator(format!("ε = {eps} must be ±1")));
        }
        Self::from_symbol(sig, Symbol::Mul { v, eps, w })
    }

    pub fn con_gen(sig: Signature, v: Gen, w: Gen) -> Result<Self> {
        Self::from_symbol(sig, Symbol::con(v, w))
    }

    pub fn swap_gen(sig: Signature, i: u32, j: u32) -> Result<Self> {
        if i == j {
            return Err(Error::InvalidGenerator(format!(
                "P[{i},{j}]: requires i ≠ j"
            )));
        }
        Self::from_symbol(sig, Symbol::swap(i, j))
    }

    pub fn inv_gen(sig: Signature, i: u32) -> Result<Self> {
        Self::from_symbol(sig, Symbol::inv(i))
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn spelling(&self) -> &SymbolWord {
        &self.spelling
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn inverse_images(&self) -> &[Word] {
        &self.inverse_images
    }

    pub fn inverse_image(&self, g: Gen) -> &Word {
        &self.inverse_images[self.sig.position(g)]
    }

    pub fn is_identity(&self) -> bool {
        self.sig
            .gens()
            .zip(&self.images)
            .all(|(g, w)| w.len() == 1 && w.letters()[0] == g.letter())
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &NamedAut) -> Result<NamedAut> {
        if self.sig != other.sig {
            return Err(Error::SignatureMismatch {
                left: self.sig,
                right: other.sig,
            });
        }
        Ok(self.compose_unchecked(other))
    }

    fn compose_unchecked(&self, other: &NamedAut) -> NamedAut {
        let sig = self.sig;
        NamedAut {
            sig,
            spelling: self.spelling.multiply(&other.spelling),
            images: other
                .images
                .iter()
                .map(|w| substitute_table(sig, &self.images, w))
                .collect(),
            inverse_images: self
                .inverse_images
                .iter()
                .map(|w| substitute_table(sig, &other.inverse_images, w))
                .collect(),
        }
    }

    /// Reverses the spelling and swaps the two image tables.
    pub fn inverse(&self) -> NamedAut {
        NamedAut {
            sig: self.sig,
            spelling: self.spelling.invert(),
            images: self.inverse_images.clone(),
            inverse_images: self.images.clone(),
        }
    }

    pub fn pow(&self, e: i64) -> NamedAut {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut acc = NamedAut::identity(self.sig);
        for _ in 0..e.unsigned_abs() {
            acc = acc.compose_unchecked(&base);
        }
        acc
    }

    /// `self ∘ other ∘ self^{-1}`.
    pub fn conjugate(&self, other: &NamedAut) -> Result<NamedAut> {
        self.compose(other)?.compose(&self.inverse())
    }

    /// `[self, other] = self ∘ other ∘ self^{-1} ∘ other^{-1}`.
    pub fn commutator(&self, other: &NamedAut) -> Result<NamedAut> {
        self.conjugate(other)?.compose(&other.inverse())
    }

    pub fn is_in_autfb(&self) -> bool {
        is_in_autfb(self)
    }

    pub fn is_in_kernel(&self) -> Result<bool> {
        is_in_kernel(self)
    }

    pub fn is_in_autfb_prime(&self) -> bool {
        is_in_autfb_prime(self)
    }
}

impl GeneratorImages for NamedAut {
    fn signature(&self) -> Signature {
        self.sig
    }

    fn image(&self, g: Gen) -> &Word {
        &self.images[self.sig.position(g)]
    }
}

impl PartialEq for NamedAut {
    fn eq(&self, other: &Self) -> bool {
        self.sig == other.sig && self.images == other.images
    }
}

impl Eq for NamedAut {}

impl Mul for &NamedAut {
    type Output = NamedAut;

    /// Composition; panics on mismatched signatures.
    fn mul(self, rhs: &NamedAut) -> NamedAut {
        self.compose(rhs)
            .expect("composition of automorphisms with different signatures")
    }
}

impl Mul for NamedAut {
    type Output = NamedAut;

    fn mul(self, rhs: NamedAut) -> NamedAut {
        &self * &rhs
    }
}

/// An endomorphism given only by an image table. Its inverse is optional and
/// counts as verified once checked by [`AdHocAut::with_inverse`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdHocAut {
    sig: Signature,
    images: Vec<Word>,
    inverse_images: Option<Vec<Word>>,
}

impl AdHocAut {
    /// Images listed in the global generator order.
    pub fn from_images(sig: Signature, images: Vec<Word>) -> Result<Self> {
        if images.len() != sig.rank() {
            return Err(Error::InvalidContext(format!(
                "expected {} images, got {}",
                sig.rank(),
                images.len()
            )));
        }
        images.iter().try_for_each(|w| sig.check_word(w))?;
        Ok(AdHocAut {
            sig,
            images,
            inverse_images: None,
        })
    }

    /// Starts from the identity and overrides the listed generators.
    pub fn from_pairs(
        sig: Signature,
        pairs: impl IntoIterator<Item = (Gen, Word)>,
    ) -> Result<Self> {
        let mut images = identity_table(sig);
        for (g, w) in pairs {
            sig.check(g)?;
            images[sig.position(g)] = w;
        }
        Self::from_images(sig, images)
    }

    /// Attaches an inverse table after checking both composites fix every generator.
    pub fn with_inverse(mut self, inverse_images: Vec<Word>) -> Result<Self> {
        if inverse_images.len() != self.sig.rank() {
            return Err(Error::InverseMismatch);
        }
        inverse_images
            .iter()
            .try_for_each(|w| self.sig.check_word(w))?;
        let sig = self.sig;
        let fixes = |outer: &[Word], inner: &[Word]| {
            sig.gens()
                .zip(inner)
                .all(|(g, w)| substitute_table(sig, outer, w) == g.word())
        };
        if !fixes(&self.images, &inverse_images) || !fixes(&inverse_images, &self.images) {
            return Err(Error::InverseMismatch);
        }
        self.inverse_images = Some(inverse_images);
        Ok(self)
    }

    pub fn is_verified(&self) -> bool {
        self.inverse_images.is_some()
    }

    pub fn inverse_images(&self) -> Option<&[Word]> {
        self.inverse_images.as_deref()
    }
}

impl GeneratorImages for AdHocAut {
    fn signature(&self) -> Signature {
        self.sig
    }

    fn image(&self, g: Gen) -> &Word {
        &self.images[self.sig.position(g)]
    }
}

impl From<&NamedAut> for AdHocAut {
    fn from(f: &NamedAut) -> Self {
        AdHocAut {
            sig: f.sig,
            images: f.images.clone(),
            inverse_images: Some(f.inverse_images.clone()),
        }
    }
}

/// `f(v)` is conjugate to `v` for every `v ∈ Y ∪ Z`.
pub fn is_in_autfb<F: GeneratorImages + ?Sized>(f: &F) -> bool {
    let sig = f.signature();
    sig.ys()
        .chain(sig.zs())
        .all(|v| f.image(v).is_conjugate(&v.word()))
}

/// Membership in the Birman kernel: `delete_y(f(s)) = s` for `s ∈ X ∪ Z`.
///
/// Fails with [`Error::NotInAutFb`] when `f` does not preserve the boundary classes.
pub fn is_in_kernel<F: GeneratorImages + ?Sized>(f: &F) -> Result<bool> {
    if !is_in_autfb(f) {
        return Err(Error::NotInAutFb);
    }
    let sig = f.signature();
    Ok(sig
        .xs()
        .chain(sig.zs())
        .all(|s| f.image(s).delete_y() == s.word()))
}

/// `f(v) = v` exactly for every `v ∈ Y ∪ Z`.
pub fn is_in_autfb_prime<F: GeneratorImages + ?Sized>(f: &F) -> bool {
    let sig = f.signature();
    sig.ys().chain(sig.zs()).all(|v| *f.image(v) == v.word())
}

/// The generating set `S_K` of the kernel, in a fixed order.
pub fn sk_symbols(sig: Signature) -> Vec<Symbol> {
    let mut out = Vec::new();
    for x in sig.xs() {
        for eps in [1, -1] {
            for y in sig.ys() {
                out.push(Symbol::mul(x, eps, y));
            }
        }
    }
    for z in sig.zs() {
        for y in sig.ys() {
            out.push(Symbol::con(z, y));
        }
    }
    for y in sig.ys() {
        for v in sig.gens().filter(|&v| v != y) {
            out.push(Symbol::con(y, v));
        }
    }
    out
}

/// The generating set `S_Q` of `AutFB(n,0,l)` inside `AutFB(n,k,l)`, in a fixed order.
pub fn sq_symbols(sig: Signature) -> Vec<Symbol> {
    let mut out = Vec::new();
    for i in 1..=sig.n {
        for j in i + 1..=sig.n {
            out.push(Symbol::swap(i, j));
        }
    }
    for i in 1..=sig.n {
        out.push(Symbol::inv(i));
    }
    let xz: Vec<Gen> = sig.xs().chain(sig.zs()).collect();
    for x in sig.xs() {
        for eps in [1, -1] {
            for &v in xz.iter().filter(|&&v| v != x) {
                out.push(Symbol::mul(x, eps, v));
            }
        }
    }
    for z in sig.zs() {
        for &v in xz.iter().filter(|&&v| v != z) {
            out.push(Symbol::con(z, v));
        }
    }
    out
}

/// Nielsen's generating set `S_N` for `Aut(F(X))`.
pub fn sn_symbols(n: u32) -> Vec<Symbol> {
    let sig = Signature { n, k: 0, l: 0 };
    sq_symbols(sig)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(n: u32, k: u32, l: u32) -> Signature {
        Signature::new(n, k, l).unwrap()
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    const X1: Gen = Gen::x(1);
    const Y1: Gen = Gen::y(1);
    const Z1: Gen = Gen::z(1);

    #[test]
    fn mul_gen_images() {
        let s = sig(2, 2, 2);
        let f = NamedAut::mul_gen(s, X1, 1, Y1).unwrap();
        assert_eq!(f.image(X1), &w("y1 x1"));
        for g in s.gens().filter(|&g| g != X1) {
            assert_eq!(f.image(g), &g.word());
        }
        let f = NamedAut::mul_gen(s, X1, -1, Y1).unwrap();
        assert_eq!(f.image(X1), &w("x1 y1^-1"));
        assert!((&f * &f.inverse()).is_identity());
        assert!(NamedAut::mul_gen(s, X1, 1, X1).is_err());
    }

    #[test]
    fn con_gen_images() {
        let s = sig(1, 2, 1);
        assert_eq!(
            NamedAut::con_gen(s, Y1, X1).unwrap().image(Y1),
            &w("x1 y1 x1^-1")
        );
        assert_eq!(
            NamedAut::con_gen(s, Z1, Y1).unwrap().image(Z1),
            &w("y1 z1 y1^-1")
        );
        assert_eq!(
            NamedAut::con_gen(s, Y1, X1).unwrap().apply(&w("y2")),
            w("y2")
        );
        assert!(NamedAut::con_gen(s, Y1, Y1).is_err());
    }

    #[test]
    fn swap_and_inv() {
        let s = sig(2, 1, 0);
        let p = NamedAut::swap_gen(s, 1, 2).unwrap();
        assert_eq!(p.apply(&w("x1")), w("x2"));
        assert_eq!(p.apply(&w("y1")), w("y1"));
        let i = NamedAut::inv_gen(s, 1).unwrap();
        assert_eq!(i.apply(&i.apply(&w("x1"))), w("x1"));
        assert!(NamedAut::swap_gen(s, 1, 3).is_err());
        assert!(NamedAut::swap_gen(s, 1, 1).is_err());
        assert!(NamedAut::inv_gen(s, 3).is_err());
    }

    #[test]
    fn apply_examples() {
        let s = sig(1, 1, 0);
        let m = NamedAut::mul_gen(s, X1, 1, Y1).unwrap();
        assert_eq!(m.apply(&w("x1 x1")), w("y1 x1 y1 x1"));
        assert_eq!(NamedAut::identity(s).apply(&w("x1 y1^-1")), w("x1 y1^-1"));
        let c = NamedAut::con_gen(s, Y1, X1).unwrap();
        assert_eq!(c.apply(&w("y1^-1")), w("x1 y1^-1 x1^-1"));
        assert!(m.try_apply(&w("x2")).is_err());
    }

    #[test]
    fn compose_examples() {
        let s = sig(2, 1, 0);
        let m = NamedAut::mul_gen(s, X1, 1, Y1).unwrap();
        assert_eq!((&m * &m).image(X1), &w("y1 y1 x1"));
        let p = NamedAut::swap_gen(s, 1, 2).unwrap();
        assert!((&p * &p).is_identity());
        assert_eq!(m.inverse().image(X1), &w("y1^-1 x1"));
        assert!(NamedAut::identity(s).inverse().is_identity());
        assert!(m.compose(&NamedAut::identity(sig(1, 1, 0))).is_err());
    }

    #[test]
    fn spelling_right_to_left() {
        let s = sig(1, 2, 0);
        // M[x1^+1,y1] applied last: x1 ↦ y2 x1 ↦ y2 y1 x1.
        let f = NamedAut::parse(s, "M[x1^+1,y1] M[x1^+1,y2]").unwrap();
        assert_eq!(f.image(X1), &w("y2 y1 x1"));
        assert_eq!(f.inverse().image(X1), &w("y1^-1 y2^-1 x1"));
        assert_eq!(f.inverse_image(X1), &w("y1^-1 y2^-1 x1"));
    }

    #[test]
    fn token_grammar() {
        let t: SymbolWord = "M[x1^+1,y1] C[y1,x1]^-1 P[2,1] I[1]".parse().unwrap();
        assert_eq!(t.to_string(), "M[x1^+1,y1] C[y1,x1]^-1 P[1,2] I[1]");
        let ext: SymbolWord = "M[x1^-1,y1^-1] C[y1,x1^-1]".parse().unwrap();
        assert_eq!(ext.to_string(), "M[x1^-1,y1]^-1 C[y1,x1]^-1");
        let ext: SymbolWord = "M[x1,y1^-1]^-1".parse().unwrap();
        assert_eq!(ext.to_string(), "M[x1^+1,y1]");
        assert!("M[x1,x1]".parse::<SymbolWord>().is_err());
        assert!("P[1,1]".parse::<SymbolWord>().is_err());
        assert!("Q[1]".parse::<SymbolWord>().is_err());
        assert!("M[x1^2,y1]".parse::<SymbolWord>().is_err());
        assert!("C[y1^-1,x1]".parse::<SymbolWord>().is_err());
    }

    #[test]
    fn membership() {
        let s = sig(1, 1, 1);
        let m = NamedAut::mul_gen(s, X1, 1, Y1).unwrap();
        assert!(m.is_in_autfb());
        assert_eq!(m.is_in_kernel(), Ok(true));
        assert!(m.is_in_autfb_prime());
        let c = NamedAut::con_gen(s, Y1, X1).unwrap();
        assert!(c.is_in_autfb());
        assert_eq!(c.is_in_kernel(), Ok(true));
        assert!(!c.is_in_autfb_prime());
        let q = NamedAut::mul_gen(s, X1, 1, Z1).unwrap();
        assert_eq!(q.is_in_kernel(), Ok(false));
        let bad = AdHocAut::from_pairs(s, [(Y1, w("x1 y1"))]).unwrap();
        assert!(!is_in_autfb(&bad));
        assert_eq!(is_in_kernel(&bad), Err(Error::NotInAutFb));
    }

    #[test]
    fn ad_hoc_inverse_check() {
        let s = sig(1, 1, 0);
        let f = AdHocAut::from_pairs(s, [(X1, w("y1 x1"))]).unwrap();
        assert!(!f.is_verified());
        let good = f
            .clone()
            .with_inverse(vec![w("y1^-1 x1"), w("y1")])
            .unwrap();
        assert!(good.is_verified());
        assert_eq!(
            f.with_inverse(vec![w("x1"), w("y1")]),
            Err(Error::InverseMismatch)
        );
        let m = NamedAut::mul_gen(s, X1, 1, Y1).unwrap();
        assert_eq!(AdHocAut::from(&m), good);
    }

    #[test]
    fn generating_sets() {
        let s = sig(2, 2, 2);
        let sk = sk_symbols(s);
        // 2nk + lk + k(n+k+l-1)
        assert_eq!(sk.len(), 8 + 4 + 2 * 5);
        for sym in &sk {
            let f = NamedAut::from_symbol(s, *sym).unwrap();
            assert_eq!(f.is_in_kernel(), Ok(true), "{sym}");
            assert!(sym.in_sk() && !sym.in_sq());
        }
        for sym in sq_symbols(s) {
            let f = NamedAut::from_symbol(s, sym).unwrap();
            assert!(f.is_in_autfb());
            assert_eq!(f.is_in_kernel(), Ok(false), "{sym}");
            assert!(sym.in_sq() && !sym.in_sk());
        }
        assert_eq!(sn_symbols(3).len(), 3 + 3 + 12);
    }

    #[test]
    fn dump_format() {
        let s = sig(1, 1, 0);
        let m = NamedAut::mul_gen(s, X1, -1, Y1).unwrap();
        assert_eq!(m.dump(), "x1\tx1 y1^-1\ny1\ty1\n");
    }
}

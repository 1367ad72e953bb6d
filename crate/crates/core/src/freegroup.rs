//! Words in the free group `F_{n,k,l}` on `x_1..x_n, y_1..y_k, z_1..z_l`.
//!
//! [`FreeWord`] is generic over its alphabet so that the same reduction,
//! multiplication and conjugacy code also serves words over abstract
//! presentation symbols. [`Word`] is the instance over [`Gen`].
//!
//! Words are kept freely reduced at all times, so equality of group elements
//! is equality of letter sequences.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};

/// The three kinds of basis letters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Class {
    X,
    Y,
    Z,
}

impl Class {
    fn prefix(self) -> char {
        match self {
            Class::X => 'x',
            Class::Y => 'y',
            Class::Z => 'z',
        }
    }
}

/// A basis element `x_i`, `y_i` or `z_i` (1-based index).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gen {
    pub class: Class,
    pub index: u32,
}

impl Gen {
    pub const fn new(class: Class, index: u32) -> Self {
        Gen { class, index }
    }

    pub const fn x(index: u32) -> Self {
        Gen::new(Class::X, index)
    }

    pub const fn y(index: u32) -> Self {
        Gen::new(Class::Y, index)
    }

    pub const fn z(index: u32) -> Self {
        Gen::new(Class::Z, index)
    }

    pub fn is_x(self) -> bool {
        self.class == Class::X
    }

    pub fn is_y(self) -> bool {
        self.class == Class::Y
    }

    pub fn is_z(self) -> bool {
        self.class == Class::Z
    }

    pub fn letter(self) -> Letter<Gen> {
        Letter::pos(self)
    }

    pub fn word(self) -> Word {
        Word::generator(self)
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.class.prefix(), self.index)
    }
}

impl FromStr for Gen {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut chars = s.chars();
        let class = match chars.next() {
            Some('x') => Class::X,
            Some('y') => Class::Y,
            Some('z') => Class::Z,
            _ => {
                return Err(Error::Parse(format!(
                    "expected x<i>, y<i> or z<i>, got {s:?}"
                )))
            }
        };
        let digits = chars.as_str();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Parse(format!("bad generator index in {s:?}")));
        }
        let index: u32 = digits
            .parse()
            .map_err(|_| Error::Parse(format!("bad generator index in {s:?}")))?;
        if index == 0 {
            return Err(Error::Parse(format!(
                "generator indices are 1-based: {s:?}"
            )));
        }
        Ok(Gen::new(class, index))
    }
}

/// Counts `(n, k, l)` of X-, Y- and Z-letters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Signature {
    pub n: u32,
    pub k: u32,
    pub l: u32,
}

impl Signature {
    pub fn new(n: u32, k: u32, l: u32) -> Result<Self> {
        if n + k + l == 0 {
            return Err(Error::InvalidSignature { n, k, l });
        }
        Ok(Signature { n, k, l })
    }

    /// Total number of generators `n + k + l`.
    pub fn rank(self) -> usize {
        (self.n + self.k + self.l) as usize
    }

    pub fn count(self, class: Class) -> u32 {
        match class {
            Class::X => self.n,
            Class::Y => self.k,
            Class::Z => self.l,
        }
    }

    pub fn contains(self, gen: Gen) -> bool {
        gen.index >= 1 && gen.index <= self.count(gen.class)
    }

    pub fn check(self, gen: Gen) -> Result<()> {
        if self.contains(gen) {
            Ok(())
        } else {
            Err(Error::OutOfRange { gen, sig: self })
        }
    }

    /// Position of `gen` in the global ordering `x_1..x_n, y_1..y_k, z_1..z_l`.
    pub fn position(self, gen: Gen) -> usize {
        debug_assert!(self.contains(gen), "{gen} outside {self}");
        let offset = match gen.class {
            Class::X => 0,
            Class::Y => self.n,
            Class::Z => self.n + self.k,
        };
        (offset + gen.index - 1) as usize
    }

    /// Inverse of [`Signature::position`].
    pub fn gen_at(self, pos: usize) -> Gen {
        let pos = pos as u32;
        if pos < self.n {
            Gen::x(pos + 1)
        } else if pos < self.n + self.k {
            Gen::y(pos - self.n + 1)
        } else {
            assert!(
                pos < self.n + self.k + self.l,
                "position {pos} outside {self}"
            );
            Gen::z(pos - self.n - self.k + 1)
        }
    }

    pub fn class_gens(self, class: Class) -> impl Iterator<Item = Gen> + Clone {
        (1..=self.count(class)).map(move |i| Gen::new(class, i))
    }

    pub fn xs(self) -> impl Iterator<Item = Gen> + Clone {
        self.class_gens(Class::X)
    }

    pub fn ys(self) -> impl Iterator<Item = Gen> + Clone {
        self.class_gens(Class::Y)
    }

    pub fn zs(self) -> impl Iterator<Item = Gen> + Clone {
        self.class_gens(Class::Z)
    }

    /// All generators in the global ordering.
    pub fn gens(self) -> impl Iterator<Item = Gen> + Clone {
        self.xs().chain(self.ys()).chain(self.zs())
    }

    /// Builds a reduced word, rejecting letters outside the signature.
    pub fn reduce(self, raw: impl IntoIterator<Item = Letter<Gen>>) -> Result<Word> {
        let mut b = WordBuilder::new();
        for letter in raw {
            self.check(letter.gen)?;
            b.push(letter);
        }
        Ok(b.finish())
    }

    pub fn check_word(self, w: &Word) -> Result<()> {
        w.iter().try_for_each(|l| self.check(l.gen))
    }

    /// Parses a word in the token grammar and checks it against this signature.
    pub fn parse_word(self, s: &str) -> Result<Word> {
        let w: Word = s.parse()?;
        self.check_word(&w)?;
        Ok(w)
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.n, self.k, self.l)
    }
}

/// A generator or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter<G> {
    pub gen: G,
    pub inverse: bool,
}

impl<G> Letter<G> {
    pub const fn pos(gen: G) -> Self {
        Letter {
            gen,
            inverse: false,
        }
    }

    pub const fn neg(gen: G) -> Self {
        Letter { gen, inverse: true }
    }

    pub fn with_sign(gen: G, positive: bool) -> Self {
        Letter {
            gen,
            inverse: !positive,
        }
    }

    pub fn inv(self) -> Self {
        Letter {
            gen: self.gen,
            inverse: !self.inverse,
        }
    }

    /// `+1` or `-1`.
    pub fn exponent(&self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }
}

impl<G: PartialEq> Letter<G> {
    fn cancels(&self, other: &Self) -> bool {
        self.gen == other.gen && self.inverse != other.inverse
    }
}

impl fmt::Display for Letter<Gen> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverse {
            write!(f, "{}^-1", self.gen)
        } else {
            write!(f, "{}", self.gen)
        }
    }
}

/// Incremental free reduction: pushing a letter cancels against the tail.
#[derive(Debug, Clone)]
pub struct WordBuilder<G> {
    letters: Vec<Letter<G>>,
}

impl<G: Copy + PartialEq> WordBuilder<G> {
    pub fn new() -> Self {
        WordBuilder {
            letters: Vec::new(),
        }
    }

    pub fn with_capacity(cap: usize) -> Self {
        WordBuilder {
            letters: Vec::with_capacity(cap),
        }
    }

    pub fn push(&mut self, letter: Letter<G>) {
        match self.letters.last() {
            Some(last) if last.cancels(&letter) => {
                self.letters.pop();
            }
            _ => self.letters.push(letter),
        }
    }

    /// Appends `w` (or `w^{-1}` when `inverse` is set).
    pub fn push_word(&mut self, w: &FreeWord<G>, inverse: bool) {
        if inverse {
            for l in w.letters.iter().rev() {
                self.push(l.inv());
            }
        } else {
            for &l in &w.letters {
                self.push(l);
            }
        }
    }

    pub fn finish(self) -> FreeWord<G> {
        FreeWord {
            letters: self.letters,
        }
    }
}

impl<G: Copy + PartialEq> Default for WordBuilder<G> {
    fn default() -> Self {
        Self::new()
    }
}

/// A freely reduced word over the alphabet `G`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FreeWord<G> {
    letters: Vec<Letter<G>>,
}

/// An element of `F_{n,k,l}`.
pub type Word = FreeWord<Gen>;

impl<G> FreeWord<G> {
    pub const fn identity() -> Self {
        FreeWord {
            letters: Vec::new(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Letter<G>] {
        &self.letters
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Letter<G>> {
        self.letters.iter()
    }
}

impl<G> Default for FreeWord<G> {
    fn default() -> Self {
        Self::identity()
    }
}

impl<G: Copy + PartialEq> FreeWord<G> {
    /// Freely reduces an arbitrary letter sequence.
    pub fn reduce(raw: impl IntoIterator<Item = Letter<G>>) -> Self {
        let mut b = WordBuilder::new();
        raw.into_iter().for_each(|l| b.push(l));
        b.finish()
    }

    pub fn generator(g: G) -> Self {
        FreeWord {
            letters: vec![Letter::pos(g)],
        }
    }

    pub fn from_letter(l: Letter<G>) -> Self {
        FreeWord { letters: vec![l] }
    }

    pub fn multiply(&self, other: &Self) -> Self {
        let mut b = WordBuilder::with_capacity(self.len() + other.len());
        b.push_word(self, false);
        b.push_word(other, false);
        b.finish()
    }

    pub fn invert(&self) -> Self {
        FreeWord {
            letters: self.letters.iter().rev().map(|l| l.inv()).collect(),
        }
    }

    pub fn pow(&self, e: i64) -> Self {
        let mut b = WordBuilder::with_capacity(self.len() * e.unsigned_abs() as usize);
        for _ in 0..e.unsigned_abs() {
            b.push_word(self, e < 0);
        }
        b.finish()
    }

    /// `w u w^{-1}` where `u = self`.
    pub fn conjugate(&self, w: &Self) -> Self {
        let mut b = WordBuilder::with_capacity(self.len() + 2 * w.len());
        b.push_word(w, false);
        b.push_word(self, false);
        b.push_word(w, true);
        b.finish()
    }

    /// `[u, v] = u v u^{-1} v^{-1}`.
    pub fn commutator(&self, other: &Self) -> Self {
        let mut b = WordBuilder::with_capacity(2 * (self.len() + other.len()));
        b.push_word(self, false);
        b.push_word(other, false);
        b.push_word(self, true);
        b.push_word(other, true);
        b.finish()
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.letters.first(), self.letters.last()) {
            (Some(a), Some(b)) if self.letters.len() > 1 => !a.cancels(b),
            _ => true,
        }
    }

    /// Splits `self = conjugator · core · conjugator^{-1}` with `core` cyclically reduced.
    pub fn cyclic_reduce(&self) -> (Self, Self) {
        let ls = &self.letters;
        let mut i = 0;
        let mut j = ls.len();
        while j - i >= 2 && ls[i].cancels(&ls[j - 1]) {
            i += 1;
            j -= 1;
        }
        (
            FreeWord {
                letters: ls[i..j].to_vec(),
            },
            FreeWord {
                letters: ls[..i].to_vec(),
            },
        )
    }

    /// Conjugacy in the free group: cyclic cores agree up to rotation.
    pub fn is_conjugate(&self, other: &Self) -> bool {
        let (a, _) = self.cyclic_reduce();
        let (b, _) = other.cyclic_reduce();
        if a.len() != b.len() {
            return false;
        }
        if a.is_empty() {
            return true;
        }
        let n = a.len();
        (0..n).any(|shift| (0..n).all(|i| a.letters[(i + shift) % n] == b.letters[i]))
    }

    /// If `self = w · c · w^{-1}` for the single letter `c`, returns one such `w`.
    pub fn conjugator_of(&self, c: Letter<G>) -> Option<Self> {
        let (core, conj) = self.cyclic_reduce();
        (core.letters.as_slice() == [c]).then_some(conj)
    }

    /// Applies the homomorphism sending each generator `g` to `image(g)`.
    pub fn substitute<H, F>(&self, mut image: F) -> FreeWord<H>
    where
        H: Copy + PartialEq,
        F: FnMut(G, &mut WordBuilder<H>, bool),
    {
        let mut b = WordBuilder::with_capacity(self.len());
        for l in &self.letters {
            image(l.gen, &mut b, l.inverse);
        }
        b.finish()
    }

    /// Drops every letter rejected by `keep`, then reduces.
    pub fn filter(&self, mut keep: impl FnMut(G) -> bool) -> Self {
        FreeWord::reduce(self.letters.iter().copied().filter(|l| keep(l.gen)))
    }
}

impl<G: Copy + PartialEq> FromIterator<Letter<G>> for FreeWord<G> {
    fn from_iter<I: IntoIterator<Item = Letter<G>>>(iter: I) -> Self {
        FreeWord::reduce(iter)
    }
}

impl<G: Copy + PartialEq> Mul for FreeWord<G> {
    type Output = FreeWord<G>;

    fn mul(self, rhs: Self) -> Self {
        self.multiply(&rhs)
    }
}

impl<G: Copy + PartialEq> Mul for &FreeWord<G> {
    type Output = FreeWord<G>;

    fn mul(self, rhs: Self) -> FreeWord<G> {
        self.multiply(rhs)
    }
}

impl<'a, G> IntoIterator for &'a FreeWord<G> {
    type Item = &'a Letter<G>;
    type IntoIter = std::slice::Iter<'a, Letter<G>>;

    fn into_iter(self) -> Self::IntoIter {
        self.letters.iter()
    }
}

impl Word {
    /// Exponent-sum vector in the global generator ordering.
    pub fn abelianize(&self, sig: Signature) -> AbelianVector {
        let mut v = AbelianVector::zero(sig.rank());
        for l in &self.letters {
            v.0[sig.position(l.gen)] += l.exponent();
        }
        v
    }

    /// Image under `F_{n,k,l} → F_{n,0,l}` killing the normal closure of Y.
    pub fn delete_y(&self) -> Word {
        self.filter(|g| !g.is_y())
    }

    pub fn mentions(&self, g: Gen) -> bool {
        self.letters.iter().any(|l| l.gen == g)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Parses a single token `x3`, `y1^-1`, `z2^1`.
pub fn parse_letter(tok: &str) -> Result<Letter<Gen>> {
    let (base, inverse) = match tok.split_once('^') {
        None => (tok, false),
        Some((base, "-1")) => (base, true),
        Some((base, "1" | "+1")) => (base, false),
        Some((_, e)) => {
            return Err(Error::Parse(format!(
                "exponent {e:?} in {tok:?}: only ±1 allowed, write powers as repeated tokens"
            )))
        }
    };
    Ok(Letter {
        gen: base.parse()?,
        inverse,
    })
}

impl FromStr for Word {
    type Err = Error;

    /// Whitespace-separated tokens; the empty string is the identity.
    fn from_str(s: &str) -> Result<Self> {
        s.split_whitespace()
            .map(parse_letter)
            .collect::<Result<Vec<_>>>()
            .map(FreeWord::reduce)
    }
}

/// An element of `V̄ = F_{n,k,l}^{ab} ≅ Z^{n+k+l}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AbelianVector(pub Vec<i64>);

impl AbelianVector {
    pub fn zero(dim: usize) -> Self {
        AbelianVector(vec![0; dim])
    }

    pub fn unit(sig: Signature, g: Gen) -> Self {
        let mut v = Self::zero(sig.rank());
        v.0[sig.position(g)] = 1;
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn coord(&self, sig: Signature, g: Gen) -> i64 {
        self.0[sig.position(g)]
    }

    /// Sets every Y-coordinate to zero.
    pub fn zero_y(&self, sig: Signature) -> Self {
        let mut v = self.clone();
        for g in sig.ys() {
            v.0[sig.position(g)] = 0;
        }
        v
    }

    /// Coordinates of the listed generators, in the order given.
    pub fn restrict(&self, sig: Signature, gens: impl IntoIterator<Item = Gen>) -> Vec<i64> {
        gens.into_iter().map(|g| self.coord(sig, g)).collect()
    }
}

impl Add for AbelianVector {
    type Output = AbelianVector;

    fn add(mut self, rhs: Self) -> Self {
        assert_eq!(self.dim(), rhs.dim());
        self.0.iter_mut().zip(&rhs.0).for_each(|(a, b)| *a += b);
        self
    }
}

impl Sub for AbelianVector {
    type Output = AbelianVector;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for AbelianVector {
    type Output = AbelianVector;

    fn neg(mut self) -> Self {
        self.0.iter_mut().for_each(|a| *a = -*a);
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn x(i: u32) -> Letter<Gen> {
        Gen::x(i).letter()
    }
    fn y(i: u32) -> Letter<Gen> {
        Gen::y(i).letter()
    }
    fn z(i: u32) -> Letter<Gen> {
        Gen::z(i).letter()
    }

    #[test]
    fn reduce_examples() {
        let sig = Signature::new(2, 2, 2).unwrap();
        assert_eq!(sig.reduce([x(1), x(1).inv(), y(1)]).unwrap(), w("y1"));
        assert_eq!(sig.reduce([]).unwrap(), Word::identity());
        assert_eq!(
            sig.reduce([y(1), x(1), x(1).inv(), y(1).inv(), z(1)])
                .unwrap(),
            w("z1")
        );
    }

    #[test]
    fn reduce_rejects_out_of_range() {
        let sig = Signature::new(1, 1, 0).unwrap();
        assert!(matches!(sig.reduce([x(2)]), Err(Error::OutOfRange { .. })));
        assert!(matches!(sig.reduce([z(1)]), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn multiply_examples() {
        assert_eq!(w("x1") * w("x1^-1"), Word::identity());
        assert_eq!(w("x1") * Word::identity(), w("x1"));
        assert_eq!(w("y1 x1") * w("x1^-1 z1"), w("y1 z1"));
    }

    #[test]
    fn invert_examples() {
        assert_eq!(w("x1 y2^-1").invert(), w("y2 x1^-1"));
        assert_eq!(Word::identity().invert(), Word::identity());
        assert_eq!(w("z1 z1").invert(), w("z1^-1 z1^-1"));
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(w("y1").conjugate(&w("x1")), w("x1 y1 x1^-1"));
        assert_eq!(w("x1").conjugate(&w("x1")), w("x1"));
        assert_eq!(w("y1").conjugate(&w("x1 x1")), w("x1 x1 y1 x1^-1 x1^-1"));
    }

    #[test]
    fn commutator_examples() {
        assert_eq!(w("x1").commutator(&w("x1")), Word::identity());
        assert_eq!(w("x1").commutator(&Word::identity()), Word::identity());
        assert_eq!(w("x1").commutator(&w("y1")), w("x1 y1 x1^-1 y1^-1"));
    }

    #[test]
    fn cyclic_reduce_examples() {
        assert_eq!(w("x1 y1 x1^-1").cyclic_reduce(), (w("y1"), w("x1")));
        assert_eq!(w("y1").cyclic_reduce(), (w("y1"), Word::identity()));
        assert_eq!(
            w("x1^-1 z1 y1 x1").cyclic_reduce(),
            (w("z1 y1"), w("x1^-1"))
        );
    }

    #[test]
    fn conjugacy_examples() {
        assert!(w("y1").is_conjugate(&w("x1 y1 x1^-1")));
        assert!(!w("y1").is_conjugate(&w("y2")));
        assert!(w("x1 z1").is_conjugate(&w("z1 x1")));
        assert!(Word::identity().is_conjugate(&Word::identity()));
        assert!(!w("x1 x1").is_conjugate(&w("x1")));
    }

    #[test]
    fn abelianize_examples() {
        let sig = Signature::new(2, 1, 2).unwrap();
        assert_eq!(
            w("x1 y1 x1^-1").abelianize(sig),
            AbelianVector::unit(sig, Gen::y(1))
        );
        assert!(Word::identity().abelianize(sig).is_zero());
        assert_eq!(w("x1 x1 z2^-1").abelianize(sig).0, vec![2, 0, 0, 0, -1]);
    }

    #[test]
    fn delete_y_examples() {
        assert_eq!(w("x1 y1 x1^-1").delete_y(), Word::identity());
        assert_eq!(w("y2 z1 y2^-1").delete_y(), w("z1"));
        assert_eq!(w("x1 y1 z1 y1^-1 x1").delete_y(), w("x1 z1 x1"));
    }

    #[test]
    fn parse_grammar() {
        assert_eq!(w(""), Word::identity());
        assert_eq!(w("x1 y2^-1 z1").to_string(), "x1 y2^-1 z1");
        assert_eq!(w("x1^1 x1^-1"), Word::identity());
        assert!("x1^2".parse::<Word>().is_err());
        assert!("x0".parse::<Word>().is_err());
        assert!("w1".parse::<Word>().is_err());
        assert!("x".parse::<Word>().is_err());
        let sig = Signature::new(1, 0, 0).unwrap();
        assert!(sig.parse_word("x2").is_err());
    }

    #[test]
    fn signature_positions() {
        let sig = Signature::new(2, 3, 1).unwrap();
        for (i, g) in sig.gens().enumerate() {
            assert_eq!(sig.position(g), i);
            assert_eq!(sig.gen_at(i), g);
        }
        assert!(Signature::new(0, 0, 0).is_err());
    }
}

//! The quotient `N_Y/M`, the crossed homomorphisms `I_s`, the subgroup
//! `L = Ker(J'_y)`, twisted functionals `x·α_r`, the averaged 2-cocycle `ζ_r`,
//! and its pairing with the abelian cycles `μ_m`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use itertools::Itertools;

use crate::abelianization::johnson_y;
use crate::automorphism::{
    is_in_autfb_prime, is_in_kernel, GeneratorImages, NamedAut, Symbol, SymbolWord,
};
use crate::error::{Error, Result};
use crate::freegroup::{Gen, Signature, Word};

/// A point of `V̄/V̄_Y`, coordinates indexed by `x_1 … x_n z_1 … z_l`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePoint(pub Vec<i64>);

impl LatticePoint {
    pub fn zero(dim: usize) -> Self {
        LatticePoint(vec![0; dim])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn scale(&self, s: i64) -> Self {
        LatticePoint(self.0.iter().map(|c| c * s).collect())
    }
}

impl Add for &LatticePoint {
    type Output = LatticePoint;

    fn add(self, rhs: &LatticePoint) -> LatticePoint {
        LatticePoint(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &LatticePoint {
    type Output = LatticePoint;

    fn sub(self, rhs: &LatticePoint) -> LatticePoint {
        LatticePoint(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &LatticePoint {
    type Output = LatticePoint;

    fn neg(self) -> LatticePoint {
        self.scale(-1)
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

/// An element of `N_Y/M`: a finite integer combination of basis symbols `y^v`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct FormalSum(BTreeMap<LatticePoint, i64>);

impl FormalSum {
    pub fn zero() -> Self {
        FormalSum::default()
    }

    /// The single basis symbol `y^v`.
    pub fn point(v: LatticePoint) -> Self {
        let mut s = FormalSum::zero();
        s.add_term(v, 1);
        s
    }

    pub fn add_term(&mut self, v: LatticePoint, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.0.entry(v.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.0.remove(&v);
        }
    }

    pub fn coeff(&self, v: &LatticePoint) -> i64 {
        self.0.get(v).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&LatticePoint, i64)> {
        self.0.iter().map(|(p, &c)| (p, c))
    }

    pub fn support(&self) -> BTreeSet<LatticePoint> {
        self.0.keys().cloned().collect()
    }

    /// Translates every point by `by`; this is the action of `f` with `J'_y(f) = by`.
    pub fn shift(&self, by: &LatticePoint) -> Self {
        FormalSum(self.0.iter().map(|(p, &c)| (p + by, c)).collect())
    }
}

impl Add for &FormalSum {
    type Output = FormalSum;

    fn add(self, rhs: &FormalSum) -> FormalSum {
        let mut out = self.clone();
        for (p, c) in rhs.terms() {
            out.add_term(p.clone(), c);
        }
        out
    }
}

impl Neg for &FormalSum {
    type Output = FormalSum;

    fn neg(self) -> FormalSum {
        FormalSum(self.0.iter().map(|(p, &c)| (p.clone(), -c)).collect())
    }
}

impl Sub for &FormalSum {
    type Output = FormalSum;

    fn sub(self, rhs: &FormalSum) -> FormalSum {
        self + &(-rhs)
    }
}

impl fmt::Display for FormalSum {
    /// One line per term: `(<coords>) <coeff>`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (p, c) in self.terms() {
            writeln!(f, "{p} {c}")?;
        }
        Ok(())
    }
}

/// The data `(y, a, b)` fixing the cocycles and cycles, plus the section order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairingContext {
    sig: Signature,
    y: Gen,
    a: Gen,
    b: Gen,
    order: Vec<Gen>,
}

impl PairingContext {
    pub fn new(sig: Signature, y: Gen, a: Gen, b: Gen) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidContext(msg));
        if sig.k < 1 || sig.n + sig.l < 2 {
            return bad(format!("signature {sig} needs k >= 1 and n + l >= 2"));
        }
        for g in [y, a, b] {
            sig.check(g)?;
        }
        if !y.is_y() {
            return bad(format!("{y} is not a Y generator"));
        }
        if a.is_y() || b.is_y() || a == b {
            return bad(format!(
                "a = {a}, b = {b} must be distinct members of X ∪ Z"
            ));
        }
        let order = sig.xs().chain(sig.zs()).collect();
        Ok(PairingContext {
            sig,
            y,
            a,
            b,
            order,
        })
    }

    /// `y = y_1`, `a`, `b` the first two members of `X ∪ Z`.
    pub fn default_for(sig: Signature) -> Result<Self> {
        let mut xz = sig.xs().chain(sig.zs());
        match (xz.next(), xz.next()) {
            (Some(a), Some(b)) if sig.k >= 1 => Self::new(sig, Gen::y(1), a, b),
            _ => Err(Error::InvalidContext(format!(
                "signature {sig} needs k >= 1 and n + l >= 2"
            ))),
        }
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn y(&self) -> Gen {
        self.y
    }

    pub fn a(&self) -> Gen {
        self.a
    }

    pub fn b(&self) -> Gen {
        self.b
    }

    /// Order of the factors of `σ`: `x_1 … x_n z_1 … z_l`.
    pub fn order(&self) -> &[Gen] {
        &self.order
    }

    pub fn dim(&self) -> usize {
        self.order.len()
    }

    /// The image of `g ∈ X ∪ Z` in `V̄/V̄_Y`.
    pub fn unit(&self, g: Gen) -> LatticePoint {
        let mut p = LatticePoint::zero(self.dim());
        if let Some(i) = self.order.iter().position(|&h| h == g) {
            p.0[i] = 1;
        }
        p
    }

    /// `A`, the image of `a`.
    pub fn point_a(&self) -> LatticePoint {
        self.unit(self.a)
    }

    /// `B`, the image of `b`.
    pub fn point_b(&self) -> LatticePoint {
        self.unit(self.b)
    }

    fn aut(&self, w: &SymbolWord) -> NamedAut {
        NamedAut::from_valid_spelling(self.sig, w)
    }

    /// `f_m = C_{y,a}^m C_{b,y} C_{y,a}^{-m}`.
    pub fn f_m(&self, m: i64) -> NamedAut {
        let c = Symbol::con(self.y, self.a);
        self.aut(
            &c.pow(m)
                .multiply(&Symbol::con(self.b, self.y).word())
                .multiply(&c.pow(-m)),
        )
    }

    /// `g = C_{a,y} C_{b,y}`.
    pub fn g(&self) -> NamedAut {
        self.aut(
            &Symbol::con(self.a, self.y)
                .word()
                .multiply(&Symbol::con(self.b, self.y).word()),
        )
    }
}

/// Image of `u ∈ N_Y` in `N_Y/M`: each chosen `y^{±1}` contributes `±y^p`,
/// `p` the image of the preceding prefix in `V̄/V̄_Y`.
pub fn ny_project(ctx: &PairingContext, u: &Word) -> Result<FormalSum> {
    if !u.delete_y().is_identity() {
        return Err(Error::NotInNormalClosure(u.to_string()));
    }
    let mut prefix = LatticePoint::zero(ctx.dim());
    let index: BTreeMap<Gen, usize> = ctx.order.iter().enumerate().map(|(i, &g)| (g, i)).collect();
    let mut out = FormalSum::zero();
    for l in u {
        if l.gen == ctx.y {
            out.add_term(prefix.clone(), l.exponent());
        } else if let Some(&i) = index.get(&l.gen) {
            prefix.0[i] += l.exponent();
        }
    }
    Ok(out)
}

fn require_kernel<F: GeneratorImages + ?Sized>(f: &F) -> Result<()> {
    if is_in_kernel(f)? {
        Ok(())
    } else {
        Err(Error::NotInKernel)
    }
}

/// `I_s(f)`: the image of `f(s) s^{-1}` in `N_Y/M`.
pub fn i_s<F: GeneratorImages + ?Sized>(ctx: &PairingContext, f: &F, s: Gen) -> Result<FormalSum> {
    if s.is_y() {
        return Err(Error::InvalidGenerator(format!(
            "{s}: I_s needs s in X ∪ Z"
        )));
    }
    ctx.sig.check(s)?;
    require_kernel(f)?;
    ny_project(ctx, &f.image(s).multiply(&s.word().invert()))
}

/// `J'_y(f)` at the chosen `y`.
pub fn jprime_y<F: GeneratorImages + ?Sized>(ctx: &PairingContext, f: &F) -> Result<LatticePoint> {
    johnson_y(f, ctx.y).map(LatticePoint)
}

pub fn is_in_l<F: GeneratorImages + ?Sized>(ctx: &PairingContext, f: &F) -> Result<bool> {
    Ok(jprime_y(ctx, f)?.is_zero())
}

/// `σ(x) = Π_s C_{y,s}^{x_s}` in the context order.
pub fn sigma(ctx: &PairingContext, x: &LatticePoint) -> NamedAut {
    let spelling = ctx
        .order
        .iter()
        .zip(&x.0)
        .fold(SymbolWord::identity(), |acc, (&s, &e)| {
            acc.multiply(&Symbol::con(ctx.y, s).pow(e))
        });
    ctx.aut(&spelling)
}

/// `ĝ = σ(J'_y(g))`.
pub fn hat(ctx: &PairingContext, g: &NamedAut) -> Result<NamedAut> {
    Ok(sigma(ctx, &jprime_y(ctx, g)?))
}

/// `g ĝ^{-1} ∈ L`.
pub fn drop_to_l(ctx: &PairingContext, g: &NamedAut) -> Result<NamedAut> {
    g.compose(&hat(ctx, g)?.inverse())
}

fn require_l(ctx: &PairingContext, f: &NamedAut) -> Result<()> {
    if is_in_l(ctx, f)? {
        Ok(())
    } else {
        Err(Error::NotInL)
    }
}

/// `α_r(f)`: the coefficient of `y^{rA}` in `I_b(f)`.
pub fn alpha(ctx: &PairingContext, r: i64, f: &NamedAut) -> Result<i64> {
    require_l(ctx, f)?;
    Ok(i_s(ctx, f, ctx.b)?.coeff(&ctx.point_a().scale(r)))
}

/// `(x·α_r)(f) = α_r(σ(x) f σ(x)^{-1})`, the twist that moves the support of `α_r` to `rA − v`.
pub fn alpha_twisted(ctx: &PairingContext, x: &LatticePoint, r: i64, f: &NamedAut) -> Result<i64> {
    require_l(ctx, f)?;
    let s = sigma(ctx, x);
    alpha(ctx, r, &s.compose(f)?.compose(&s.inverse())?)
}

/// `{x : (x·α_r)(f) ≠ 0} ⊆ {rA − v : v ∈ supp I_b(f)}`.
pub fn support_of_twist(
    ctx: &PairingContext,
    r: i64,
    f: &NamedAut,
) -> Result<BTreeSet<LatticePoint>> {
    require_l(ctx, f)?;
    let ra = ctx.point_a().scale(r);
    Ok(i_s(ctx, f, ctx.b)?
        .support()
        .iter()
        .map(|v| &ra - v)
        .collect())
}

/// `(x·α_r)` evaluated from a precomputed `I_b(f)`.
fn twisted_from_sum(ctx: &PairingContext, x: &LatticePoint, r: i64, ib: &FormalSum) -> i64 {
    ib.coeff(&(&ctx.point_a().scale(r) - x))
}

/// `κ_r(g_0, g_1, g_2) = (α_r(g_1ĝ_1^{-1}) − α_r(g_0ĝ_0^{-1}))(α_0(g_2ĝ_2^{-1}) − α_0(g_1ĝ_1^{-1}))`.
pub fn kappa_eval(ctx: &PairingContext, r: i64, g: [&NamedAut; 3]) -> Result<i64> {
    let h = g.map(|gi| drop_to_l(ctx, gi));
    let [h0, h1, h2] = [h[0].clone()?, h[1].clone()?, h[2].clone()?];
    let ar = |f: &NamedAut| alpha(ctx, r, f);
    let a0 = |f: &NamedAut| alpha(ctx, 0, f);
    Ok((ar(&h1)? - ar(&h0)?) * (a0(&h2)? - a0(&h1)?))
}

/// `ζ_r(g_0, g_1, g_2) = Σ_x (x·κ_r)(g_0, g_1, g_2)`, summed over the finitely many `x`
/// where some twisted `α` is nonzero.
pub fn zeta_eval(ctx: &PairingContext, r: i64, g: [&NamedAut; 3]) -> Result<i64> {
    let mut sums = Vec::with_capacity(3);
    for gi in g {
        sums.push(i_s(ctx, &drop_to_l(ctx, gi)?, ctx.b)?);
    }
    let ra = ctx.point_a().scale(r);
    let xs: BTreeSet<LatticePoint> = sums
        .iter()
        .flat_map(|s| s.support())
        .flat_map(|v| [&ra - &v, -&v])
        .collect();
    Ok(xs
        .iter()
        .map(|x| {
            let t = |r: i64, i: usize| twisted_from_sum(ctx, x, r, &sums[i]);
            (t(r, 1) - t(r, 0)) * (t(0, 2) - t(0, 1))
        })
        .sum())
}

/// `ζ_r` through the literal definition `Σ_x κ_r(σ(x)^{-1} g_0, σ(x)^{-1} g_1, σ(x)^{-1} g_2)`,
/// evaluating every summand with full automorphism arithmetic.
pub fn zeta_eval_literal(ctx: &PairingContext, r: i64, g: [&NamedAut; 3]) -> Result<i64> {
    let ra = ctx.point_a().scale(r);
    let mut xs = BTreeSet::new();
    for gi in g {
        for v in i_s(ctx, gi, ctx.b)?.support() {
            xs.insert(&v - &ra);
            xs.insert(v);
        }
    }
    let mut total = 0;
    for x in &xs {
        let sx = sigma(ctx, x).inverse();
        let moved = [sx.compose(g[0])?, sx.compose(g[1])?, sx.compose(g[2])?];
        total += kappa_eval(ctx, r, [&moved[0], &moved[1], &moved[2]])?;
    }
    Ok(total)
}

/// `ω([ζ_r], μ_m) = Σ_x ((x·α_r)(f_m)(x·α_0)(g) − (x·α_r)(g)(x·α_0)(f_m))`.
pub fn pairing(ctx: &PairingContext, r: i64, m: i64) -> Result<i64> {
    let (fm, g) = (ctx.f_m(m), ctx.g());
    let (sf, sg) = (i_s(ctx, &fm, ctx.b)?, i_s(ctx, &g, ctx.b)?);
    let ra = ctx.point_a().scale(r);
    let xs: BTreeSet<LatticePoint> = sf
        .support()
        .into_iter()
        .chain(sg.support())
        .flat_map(|v| [&ra - &v, -&v])
        .collect();
    Ok(xs
        .iter()
        .map(|x| {
            let t = |r: i64, s: &FormalSum| twisted_from_sum(ctx, x, r, s);
            t(r, &sf) * t(0, &sg) - t(r, &sg) * t(0, &sf)
        })
        .sum())
}

/// The pairing through `ζ_r` on the abelian cycle: `ζ_r(1, f_m, f_m g) − ζ_r(1, g, g f_m)`.
pub fn pairing_via_zeta(ctx: &PairingContext, r: i64, m: i64) -> Result<i64> {
    let (fm, g) = (ctx.f_m(m), ctx.g());
    let id = NamedAut::identity(ctx.sig);
    let fg = fm.compose(&g)?;
    let gf = g.compose(&fm)?;
    Ok(zeta_eval(ctx, r, [&id, &fm, &fg])? - zeta_eval(ctx, r, [&id, &g, &gf])?)
}

/// `(rmax × mmax)` table of [`pairing`], rows `r = 1..`, columns `m = 1..`.
pub fn pairing_table(ctx: &PairingContext, rmax: i64, mmax: i64) -> Result<Vec<Vec<i64>>> {
    (1..=rmax)
        .map(|r| (1..=mmax).map(|m| pairing(ctx, r, m)).collect())
        .collect()
}

/// `h_m = C_{y,t}^m M_{s,y} C_{y,t}^{-m}` together with `I_s(h_m)`.
pub fn distinct_image_witness(
    ctx: &PairingContext,
    m: i64,
    s: Gen,
    t: Gen,
) -> Result<(NamedAut, FormalSum)> {
    let sig = ctx.sig;
    sig.check(s)?;
    sig.check(t)?;
    if !s.is_x() || t.is_y() || s == t || sig.n < 1 {
        return Err(Error::InvalidContext(format!(
            "need s in X, t in X ∪ Z, s ≠ t; got s = {s}, t = {t}"
        )));
    }
    let c = Symbol::con(ctx.y, t);
    let h = ctx.aut(
        &c.pow(m)
            .multiply(&Symbol::mul(s, 1, ctx.y).word())
            .multiply(&c.pow(-m)),
    );
    debug_assert!(is_in_autfb_prime(&h));
    let sum = i_s(ctx, &h, s)?;
    Ok((h, sum))
}

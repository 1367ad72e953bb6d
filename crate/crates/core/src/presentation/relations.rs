//! Relation tables: Nielsen's relations `N1–N5`, the Jensen–Wahl relations
//! `Q1–Q5`, the basic kernel relations `R1–R5`, the commutator families
//! `C1`/`C2`, and the conjugation relations `Rconj` coming from the action map.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::automorphism::{sk_symbols, sq_symbols, Symbol, SymbolWord};
use crate::error::{Error, Result};
use crate::freegroup::{Gen, Letter, Signature};

use super::action::action_f;

/// One instance of a relation `lhs = rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationInstance {
    pub family: &'static str,
    pub params: String,
    pub lhs: SymbolWord,
    pub rhs: SymbolWord,
}

impl RelationInstance {
    /// `lhs · rhs^{-1}`.
    pub fn relator(&self) -> SymbolWord {
        self.lhs.multiply(&self.rhs.invert())
    }
}

/// Leaf family tags in report order.
pub const LEAF_FAMILIES: &[&str] = &[
    "N1", "N2", "N3", "N4", "N5", "Q2.1", "Q2.2", "Q2.3", "Q3.1", "Q3.2", "Q3.3", "Q3.4", "Q4.1",
    "Q4.1'", "Q4.2", "Q4.2'", "Q5", "R1.1", "R1.2", "R1.3", "R2", "R3", "R4", "R5", "C1.1", "C1.2",
    "C1.3", "C2.1", "C2.2", "Rconj",
];

/// Expands a family or group tag into leaf families.
pub fn leaf_families(tag: &str) -> Result<Vec<&'static str>> {
    let pick = |prefix: &str| -> Vec<&'static str> {
        LEAF_FAMILIES
            .iter()
            .copied()
            .filter(|f| *f == prefix || f.starts_with(&format!("{prefix}.")))
            .collect()
    };
    let out: Vec<&'static str> = match tag {
        "N" | "Q1" => pick("N1")
            .into_iter()
            .chain(["N2", "N3", "N4", "N5"])
            .collect(),
        "Q" => {
            let mut v = leaf_families("Q1")?;
            for g in ["Q2", "Q3", "Q4", "Q5"] {
                v.extend(leaf_families(g)?);
            }
            v
        }
        "Q4" => vec!["Q4.1", "Q4.1'", "Q4.2", "Q4.2'"],
        "R" => ["R1", "R2", "R3", "R4", "R5"]
            .iter()
            .flat_map(|g| pick(g))
            .collect(),
        "C" => pick("C1").into_iter().chain(pick("C2")).collect(),
        _ => pick(tag),
    };
    if out.is_empty() {
        return Err(Error::UnknownFamily(tag.to_string()));
    }
    Ok(out)
}

fn w(s: Symbol) -> SymbolWord {
    s.word()
}

fn p(s: Symbol, e: i64) -> SymbolWord {
    s.pow(e)
}

fn cat<const N: usize>(parts: [SymbolWord; N]) -> SymbolWord {
    SymbolWord::reduce(parts.iter().flat_map(|x| x.letters().iter().copied()))
}

fn comm(a: SymbolWord, b: SymbolWord) -> SymbolWord {
    a.commutator(&b)
}

fn one() -> SymbolWord {
    SymbolWord::identity()
}

fn m(v: Gen, eps: i8, w: Gen) -> Symbol {
    Symbol::mul(v, eps, w)
}

fn c(v: Gen, w: Gen) -> Symbol {
    Symbol::con(v, w)
}

fn sgn(e: i8) -> &'static str {
    if e > 0 {
        "+1"
    } else {
        "-1"
    }
}

/// `M_{v^ε, w^{±1}}` in the extended notation: `M_{v^ε,w^{-1}} = M_{v^ε,w}^{-1}`.
fn m_ext(v: Gen, eps: i8, w: Letter<Gen>) -> SymbolWord {
    p(m(v, eps, w.gen), w.exponent())
}

/// `C_{v,w^{-1}} = C_{v,w}^{-1}`.
fn c_ext(v: Gen, w: Letter<Gen>) -> SymbolWord {
    p(c(v, w.gen), w.exponent())
}

fn swap_letter(i: u32, j: u32, l: Letter<Gen>) -> Letter<Gen> {
    let g = if l.gen == Gen::x(i) {
        Gen::x(j)
    } else if l.gen == Gen::x(j) {
        Gen::x(i)
    } else {
        l.gen
    };
    Letter {
        gen: g,
        inverse: l.inverse,
    }
}

fn inv_letter(i: u32, l: Letter<Gen>) -> Letter<Gen> {
    if l.gen == Gen::x(i) {
        l.inv()
    } else {
        l
    }
}

fn signed(g: Gen, eps: i8) -> Letter<Gen> {
    Letter::with_sign(g, eps > 0)
}

struct Sink {
    family: &'static str,
    seen: HashSet<(SymbolWord, SymbolWord)>,
    out: Vec<RelationInstance>,
}

impl Sink {
    fn new(family: &'static str) -> Self {
        Sink {
            family,
            seen: HashSet::new(),
            out: Vec::new(),
        }
    }

    fn push(&mut self, params: String, lhs: SymbolWord, rhs: SymbolWord) {
        if self.seen.insert((lhs.clone(), rhs.clone())) {
            self.out.push(RelationInstance {
                family: self.family,
                params,
                lhs,
                rhs,
            });
        }
    }
}

const SIGNS: [i8; 2] = [1, -1];

/// All instances of one family or group tag at the given signature.
pub fn enumerate_relations(tag: &str, sig: Signature) -> Result<Vec<RelationInstance>> {
    let mut out = Vec::new();
    for fam in leaf_families(tag)? {
        out.extend(enumerate_leaf(fam, sig));
    }
    Ok(out)
}

fn enumerate_leaf(fam: &'static str, sig: Signature) -> Vec<RelationInstance> {
    let n = sig.n;
    let xs: Vec<Gen> = sig.xs().collect();
    let ys: Vec<Gen> = sig.ys().collect();
    let zs: Vec<Gen> = sig.zs().collect();
    let yz: Vec<Gen> = sig.ys().chain(sig.zs()).collect();
    let xz: Vec<Gen> = sig.xs().chain(sig.zs()).collect();
    let all: Vec<Gen> = sig.gens().collect();
    let idx: Vec<u32> = (1..=n).collect();
    let in_sk = |s: Symbol| s.in_sk();
    let mut sink = Sink::new(fam);
    let k = &mut sink;

    match fam {
        "N1" => {
            for &a in &idx {
                k.push(format!("I^2 a={a}"), p(Symbol::inv(a), 2), one());
                for &b in idx.iter().filter(|&&b| b != a) {
                    k.push(
                        format!("[I,I] a={a},b={b}"),
                        comm(w(Symbol::inv(a)), w(Symbol::inv(b))),
                        one(),
                    );
                    let pab = Symbol::swap(a, b);
                    k.push(format!("P^2 a={a},b={b}"), p(pab, 2), one());
                    k.push(
                        format!("PIP a={a},b={b}"),
                        cat([w(pab), w(Symbol::inv(a)), p(pab, -1)]),
                        w(Symbol::inv(b)),
                    );
                    for &cc in idx.iter().filter(|&&cc| cc != a && cc != b) {
                        k.push(
                            format!("PPP a={a},b={b},c={cc}"),
                            cat([w(pab), w(Symbol::swap(b, cc)), p(pab, -1)]),
                            w(Symbol::swap(a, cc)),
                        );
                        k.push(
                            format!("[P,I] a={a},b={b},c={cc}"),
                            comm(w(pab), w(Symbol::inv(cc))),
                            one(),
                        );
                        for &d in idx.iter().filter(|&&d| d != a && d != b && d != cc) {
                            k.push(
                                format!("[P,P] a={a},b={b},c={cc},d={d}"),
                                comm(w(pab), w(Symbol::swap(cc, d))),
                                one(),
                            );
                        }
                    }
                }
            }
        }
        "N2" => {
            for &x in &xs {
                for &y in xs.iter().filter(|&&y| y != x) {
                    for e in SIGNS {
                        let mxy = w(m(x, e, y));
                        for &a in &idx {
                            for &b in idx.iter().filter(|&&b| b != a) {
                                let pab = Symbol::swap(a, b);
                                let px = swap_letter(a, b, signed(x, e));
                                let py = swap_letter(a, b, y.letter());
                                k.push(
                                    format!("P a={a},b={b},x={x},eps={},y={y}", sgn(e)),
                                    cat([w(pab), mxy.clone(), p(pab, -1)]),
                                    m_ext(px.gen, px.exponent() as i8, py),
                                );
                            }
                            let ia = Symbol::inv(a);
                            let ix = inv_letter(a, signed(x, e));
                            let iy = inv_letter(a, y.letter());
                            k.push(
                                format!("I a={a},x={x},eps={},y={y}", sgn(e)),
                                cat([w(ia), mxy.clone(), p(ia, -1)]),
                                m_ext(ix.gen, ix.exponent() as i8, iy),
                            );
                        }
                    }
                }
            }
        }
        "N3" => {
            for &a in &idx {
                for &b in idx.iter().filter(|&&b| b != a) {
                    let (xa, xb) = (Gen::x(a), Gen::x(b));
                    k.push(
                        format!("first a={a},b={b}"),
                        cat([p(m(xa, -1, xb), -1), w(m(xb, -1, xa)), w(m(xa, 1, xb))]),
                        cat([w(Symbol::inv(a)), w(Symbol::swap(a, b))]),
                    );
                    k.push(
                        format!("second a={a},b={b}"),
                        cat([w(m(xa, -1, xb)), w(m(xb, 1, xa)), p(m(xa, 1, xb), -1)]),
                        cat([w(Symbol::inv(b)), w(Symbol::swap(a, b))]),
                    );
                }
            }
        }
        "N4" => {
            for &xa in &xs {
                for &xb in xs.iter().filter(|&&g| g != xa) {
                    for &xc in &xs {
                        for &xd in xs.iter().filter(|&&g| g != xc) {
                            for e in SIGNS {
                                for d in SIGNS {
                                    if (xa == xc && e == d) || xa == xd || xc == xb {
                                        continue;
                                    }
                                    k.push(
                                        format!(
                                            "a={xa},eps={},b={xb},c={xc},delta={},d={xd}",
                                            sgn(e),
                                            sgn(d)
                                        ),
                                        comm(w(m(xa, e, xb)), w(m(xc, d, xd))),
                                        one(),
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
        "N5" => {
            for &xa in &xs {
                for &xb in xs.iter().filter(|&&g| g != xa) {
                    for &xc in xs.iter().filter(|&&g| g != xa && g != xb) {
                        for e in SIGNS {
                            for d in SIGNS {
                                let mcb = p(m(xc, d, xb), e as i64);
                                k.push(
                                    format!("a={xa},b={xb},c={xc},eps={},delta={}", sgn(e), sgn(d)),
                                    cat([w(m(xb, e, xa)), mcb.clone()]),
                                    cat([mcb, w(m(xb, e, xa)), w(m(xc, d, xa))]),
                                );
                            }
                        }
                    }
                }
            }
        }
        "Q2.1" => {
            for &x in &xs {
                for &v in xs.iter().filter(|&&v| v != x) {
                    for &wg in &xs {
                        for &z in &yz {
                            for e in SIGNS {
                                for d in SIGNS {
                                    if (x == wg && e == d) || wg == v {
                                        continue;
                                    }
                                    k.push(
                                        format!(
                                            "x={x},eps={},v={v},w={wg},delta={},z={z}",
                                            sgn(e),
                                            sgn(d)
                                        ),
                                        comm(w(m(x, e, v)), w(m(wg, d, z))),
                                        one(),
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
        "Q2.2" => {
            for &x in &xs {
                for &v in xs.iter().filter(|&&v| v != x) {
                    for &wg in &yz {
                        for &z in yz.iter().filter(|&&z| z != wg) {
                            for e in SIGNS {
                                k.push(
                                    format!("x={x},eps={},v={v},w={wg},z={z}", sgn(e)),
                                    comm(w(m(x, e, v)), w(c(wg, z))),
                                    one(),
                                );
                            }
                        }
                    }
                }
            }
        }
        "Q2.3" => {
            for &u in &yz {
                for &v in yz.iter().filter(|&&v| v != u) {
                    for &wg in yz.iter().filter(|&&g| g != u && g != v) {
                        for &z in yz.iter().filter(|&&z| z != u && z != wg) {
                            k.push(
                                format!("u={u},v={v},w={wg},z={z}"),
                                comm(w(c(u, v)), w(c(wg, z))),
                                one(),
                            );
                        }
                    }
                }
            }
        }
        "Q3.1" | "Q3.3" => {
            for &x in &xs {
                for &z in &yz {
                    for e in SIGNS {
                        let mxz = w(m(x, e, z));
                        if fam == "Q3.1" {
                            for &i in &idx {
                                for &j in idx.iter().filter(|&&j| j != i) {
                                    let pij = Symbol::swap(i, j);
                                    let px = swap_letter(i, j, signed(x, e));
                                    k.push(
                                        format!("i={i},j={j},x={x},eps={},z={z}", sgn(e)),
                                        cat([w(pij), mxz.clone(), p(pij, -1)]),
                                        w(m(px.gen, px.exponent() as i8, z)),
                                    );
                                }
                            }
                        } else {
                            for &i in &idx {
                                let ii = Symbol::inv(i);
                                let ix = inv_letter(i, signed(x, e));
                                k.push(
                                    format!("i={i},x={x},eps={},z={z}", sgn(e)),
                                    cat([w(ii), mxz.clone(), p(ii, -1)]),
                                    w(m(ix.gen, ix.exponent() as i8, z)),
                                );
                            }
                        }
                    }
                }
            }
        }
        "Q3.2" | "Q3.4" => {
            for &x in &xs {
                for &z in &yz {
                    let czx = w(c(z, x));
                    if fam == "Q3.2" {
                        for &i in &idx {
                            for &j in idx.iter().filter(|&&j| j != i) {
                                let pij = Symbol::swap(i, j);
                                k.push(
                                    format!("i={i},j={j},x={x},z={z}"),
                                    cat([w(pij), czx.clone(), p(pij, -1)]),
                                    c_ext(z, swap_letter(i, j, x.letter())),
                                );
                            }
                        }
                    } else {
                        for &i in &idx {
                            let ii = Symbol::inv(i);
                            k.push(
                                format!("i={i},x={x},z={z}"),
                                cat([w(ii), czx.clone(), p(ii, -1)]),
                                c_ext(z, inv_letter(i, x.letter())),
                            );
                        }
                    }
                }
            }
        }
        "Q4.1" => {
            for &x in &xs {
                for &wg in xs.iter().filter(|&&g| g != x) {
                    for &v in all.iter().filter(|&&v| v != x && v != wg) {
                        for e in SIGNS {
                            for d in SIGNS {
                                let mxw = m(x, e, wg);
                                k.push(
                                    format!("x={x},eps={},w={wg},delta={},v={v}", sgn(e), sgn(d)),
                                    cat([p(mxw, -d as i64), w(m(wg, d, v)), p(mxw, d as i64)]),
                                    cat([w(m(x, e, v)), w(m(wg, d, v))]),
                                );
                            }
                        }
                    }
                }
            }
        }
        "Q4.1'" => {
            for &x in &xs {
                for &z in &yz {
                    for &v in all.iter().filter(|&&v| v != x && v != z) {
                        for e in SIGNS {
                            let czx = c(z, x);
                            k.push(
                                format!("x={x},eps={},z={z},v={v}", sgn(e)),
                                cat([p(czx, -e as i64), w(m(x, e, v)), p(czx, e as i64)]),
                                cat([w(c(z, v)), w(m(x, e, v))]),
                            );
                        }
                    }
                }
            }
        }
        "Q4.2" => {
            for &x in &xs {
                for &z in &yz {
                    for &v in all.iter().filter(|&&v| v != x && v != z) {
                        for e in SIGNS {
                            for d in SIGNS {
                                let czv = c(z, v);
                                let mxv = m(x, d, v);
                                k.push(
                                    format!("x={x},delta={},z={z},v={v},eps={}", sgn(d), sgn(e)),
                                    cat([p(czv, e as i64), w(m(x, d, z)), p(czv, -e as i64)]),
                                    cat([p(mxv, -e as i64), w(m(x, d, z)), p(mxv, e as i64)]),
                                );
                            }
                        }
                    }
                }
            }
        }
        "Q4.2'" => {
            for &z in &yz {
                for &wg in yz.iter().filter(|&&g| g != z) {
                    for &v in all.iter().filter(|&&v| v != z && v != wg) {
                        for e in SIGNS {
                            let czv = c(z, v);
                            let cwv = c(wg, v);
                            k.push(
                                format!("z={z},w={wg},v={v},eps={}", sgn(e)),
                                cat([p(czv, e as i64), w(c(wg, z)), p(czv, -e as i64)]),
                                cat([p(cwv, -e as i64), w(c(wg, z)), p(cwv, e as i64)]),
                            );
                        }
                    }
                }
            }
        }
        "Q5" | "R5" => {
            let vs = if fam == "Q5" { &yz } else { &ys };
            for &x in &xs {
                for &v in vs {
                    for e in SIGNS {
                        let cvx = c(v, x);
                        k.push(
                            format!("x={x},v={v},eps={}", sgn(e)),
                            cat([p(cvx, -e as i64), w(m(x, -e, v)), p(cvx, e as i64)]),
                            p(m(x, e, v), -1),
                        );
                    }
                }
            }
        }
        "R1.1" => {
            for &x in &xs {
                for &wg in &xs {
                    for e in SIGNS {
                        for d in SIGNS {
                            if x == wg && e == d {
                                continue;
                            }
                            for &v in &ys {
                                for &y in &ys {
                                    k.push(
                                        format!(
                                            "x={x},eps={},v={v},w={wg},delta={},y={y}",
                                            sgn(e),
                                            sgn(d)
                                        ),
                                        comm(w(m(x, e, v)), w(m(wg, d, y))),
                                        one(),
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
        "R1.2" => {
            for &x in &xs {
                for &y in &ys {
                    for &v in yz.iter().filter(|&&v| v != y) {
                        for &z in all.iter().filter(|&&z| z != x && in_sk(c(v, z))) {
                            for e in SIGNS {
                                k.push(
                                    format!("x={x},eps={},y={y},v={v},z={z}", sgn(e)),
                                    comm(w(m(x, e, y)), w(c(v, z))),
                                    one(),
                                );
                            }
                        }
                    }
                }
            }
        }
        "R1.3" => {
            for &u in &yz {
                for &v in all.iter().filter(|&&v| in_sk(c(u, v))) {
                    for &wg in yz.iter().filter(|&&g| g != u && g != v) {
                        for &z in all.iter().filter(|&&z| z != u && in_sk(c(wg, z))) {
                            k.push(
                                format!("u={u},v={v},w={wg},z={z}"),
                                comm(w(c(u, v)), w(c(wg, z))),
                                one(),
                            );
                        }
                    }
                }
            }
        }
        "R2" => {
            for &x in &xs {
                for &v in &ys {
                    for &z in ys.iter().filter(|&&z| z != v) {
                        for e in SIGNS {
                            let cvx = c(v, x);
                            k.push(
                                format!("x={x},eps={},v={v},z={z}", sgn(e)),
                                cat([p(cvx, -e as i64), w(m(x, e, z)), p(cvx, e as i64)]),
                                cat([w(c(v, z)), w(m(x, e, z))]),
                            );
                        }
                    }
                }
            }
        }
        "R3" => {
            for &x in &xs {
                for &v in &ys {
                    for &z in ys.iter().filter(|&&z| z != v) {
                        for e in SIGNS {
                            for d in SIGNS {
                                let cvz = c(v, z);
                                let mxz = m(x, d, z);
                                k.push(
                                    format!("x={x},delta={},v={v},z={z},eps={}", sgn(d), sgn(e)),
                                    cat([p(cvz, e as i64), w(m(x, d, v)), p(cvz, -e as i64)]),
                                    cat([p(mxz, -e as i64), w(m(x, d, v)), p(mxz, e as i64)]),
                                );
                            }
                        }
                    }
                }
            }
        }
        "R4" => {
            for &wg in &yz {
                for &v in &yz {
                    for &z in &all {
                        let (cvz, cwv, cwz) = (c(v, z), c(wg, v), c(wg, z));
                        if v == z || wg == v || wg == z || !in_sk(cvz) || !in_sk(cwv) || !in_sk(cwz)
                        {
                            continue;
                        }
                        for e in SIGNS {
                            k.push(
                                format!("w={wg},v={v},z={z},eps={}", sgn(e)),
                                cat([p(cvz, e as i64), w(cwv), p(cvz, -e as i64)]),
                                cat([p(cwz, -e as i64), w(cwv), p(cwz, e as i64)]),
                            );
                        }
                    }
                }
            }
        }
        "C1.1" => {
            for &y in &ys {
                for &xa in &xs {
                    for &xb in &xs {
                        for &v in xz.iter().filter(|&&v| v != xa && v != xb) {
                            for e in SIGNS {
                                for d in SIGNS {
                                    for zt in SIGNS {
                                        if xa == xb && d == zt {
                                            continue;
                                        }
                                        let cyv = c(y, v);
                                        k.push(
                                            format!(
                                                "y={y},v={v},eps={},a={xa},delta={},b={xb},zeta={}",
                                                sgn(e),
                                                sgn(d),
                                                sgn(zt)
                                            ),
                                            comm(
                                                cat([
                                                    p(cyv, e as i64),
                                                    w(m(xa, d, y)),
                                                    p(cyv, -e as i64),
                                                ]),
                                                w(m(xb, zt, y)),
                                            ),
                                            one(),
                                        );
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        "C1.2" => {
            for &y in &ys {
                for &x in &xs {
                    for &z in yz.iter().filter(|&&z| z != y) {
                        for &v in xz.iter().filter(|&&v| v != z && v != x) {
                            for e in SIGNS {
                                for d in SIGNS {
                                    let cyv = c(y, v);
                                    k.push(
                                        format!(
                                            "y={y},v={v},eps={},x={x},delta={},z={z}",
                                            sgn(e),
                                            sgn(d)
                                        ),
                                        comm(
                                            cat([
                                                p(cyv, e as i64),
                                                w(m(x, d, y)),
                                                p(cyv, -e as i64),
                                            ]),
                                            w(c(z, y)),
                                        ),
                                        one(),
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
        "C1.3" => {
            // The side condition on the second conjugation generator is read as w ≠ z.
            for &y in &ys {
                for &z in yz.iter().filter(|&&z| z != y) {
                    for &wg in yz.iter().filter(|&&g| g != y && g != z) {
                        for &v in xz.iter().filter(|&&v| v != z && v != wg) {
                            for e in SIGNS {
                                let cyv = c(y, v);
                                k.push(
                                    format!("y={y},v={v},eps={},z={z},w={wg}", sgn(e)),
                                    comm(
                                        cat([p(cyv, e as i64), w(c(z, y)), p(cyv, -e as i64)]),
                                        w(c(wg, y)),
                                    ),
                                    one(),
                                );
                            }
                        }
                    }
                }
            }
        }
        "C2.1" => {
            for &y in &ys {
                for &z in &zs {
                    for &x in &xs {
                        for e in SIGNS {
                            for d in SIGNS {
                                let cyz = c(y, z);
                                k.push(
                                    format!("y={y},z={z},x={x},eps={},delta={}", sgn(e), sgn(d)),
                                    comm(
                                        cat([p(cyz, e as i64), w(m(x, d, y)), p(cyz, -e as i64)]),
                                        cat([w(c(z, y)), w(m(x, d, y))]),
                                    ),
                                    one(),
                                );
                            }
                        }
                    }
                }
            }
        }
        "C2.2" => {
            for &y in &ys {
                for &z in &zs {
                    for &wg in zs.iter().filter(|&&g| g != z) {
                        for e in SIGNS {
                            let cyz = c(y, z);
                            k.push(
                                format!("y={y},z={z},w={wg},eps={}", sgn(e)),
                                comm(
                                    cat([p(cyz, e as i64), w(c(wg, y)), p(cyz, -e as i64)]),
                                    cat([w(c(z, y)), w(c(wg, y))]),
                                ),
                                one(),
                            );
                        }
                    }
                }
            }
        }
        "Rconj" => {
            for t in sq_symbols(sig) {
                for s in sk_symbols(sig) {
                    for e in SIGNS {
                        let tl = Letter::with_sign(t, e > 0);
                        let mut params = String::new();
                        let _ = write!(params, "t={tl},s={s}");
                        k.push(
                            params,
                            cat([p(t, e as i64), w(s), p(t, -e as i64)]),
                            action_f(tl, s),
                        );
                    }
                }
            }
        }
        _ => unreachable!("unknown leaf family {fam}"),
    }
    sink.out
}

/// Closed-form size of `R1.1`: ordered pairs of distinct signed X-letters times `k²`.
pub fn r11_count(sig: Signature) -> usize {
    let n = sig.n as usize;
    let k = sig.k as usize;
    2 * n * (2 * n).saturating_sub(1) * k * k
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(n: u32, k: u32, l: u32) -> Signature {
        Signature::new(n, k, l).unwrap()
    }

    #[test]
    fn r5_has_one_instance_per_sign() {
        let r = enumerate_relations("R5", sig(1, 1, 0)).unwrap();
        assert_eq!(r.len(), 2);
        assert_eq!(r[0].lhs.to_string(), "C[y1,x1]^-1 M[x1^-1,y1] C[y1,x1]");
        assert_eq!(r[0].rhs.to_string(), "M[x1^+1,y1]^-1");
    }

    #[test]
    fn n3_needs_two_letters() {
        assert!(enumerate_relations("N3", sig(1, 0, 0)).unwrap().is_empty());
    }

    #[test]
    fn r11_count_matches_closed_form() {
        for (n, k) in [(2, 2), (1, 1), (3, 2), (0, 2)] {
            let s = sig(n, k, 1);
            assert_eq!(enumerate_relations("R1.1", s).unwrap().len(), r11_count(s));
        }
        assert_eq!(r11_count(sig(2, 2, 0)), 48);
    }

    #[test]
    fn unknown_family_is_an_error() {
        assert_eq!(leaf_families("Q9"), Err(Error::UnknownFamily("Q9".into())));
        assert_eq!(leaf_families("R1").unwrap(), vec!["R1.1", "R1.2", "R1.3"]);
        assert_eq!(
            leaf_families("Q1").unwrap(),
            vec!["N1", "N2", "N3", "N4", "N5"]
        );
        assert_eq!(leaf_families("Q").unwrap().len(), 17);
    }

    #[test]
    fn swaps_are_canonical() {
        for r in enumerate_relations("N1", sig(4, 0, 0)).unwrap() {
            for l in r.lhs.iter().chain(r.rhs.iter()) {
                if let Symbol::Swap { i, j } = l.gen {
                    assert!(i < j);
                }
            }
        }
    }
}

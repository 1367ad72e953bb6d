//! Presentations: relation tables, the action of `Q` on `F(S_K)`, support
//! sets, and truncated L-presentations.

mod action;
mod lpres;
mod relations;
mod support;
mod table5;

use std::fmt;

use rayon::prelude::*;

pub use action::{
    action_extend, action_f, action_letter, nontrivial_actors, verify_action_consistency,
    ActionCheck,
};
pub use lpres::{basic_relators, lpres_expand, sq_words};
pub use relations::{
    enumerate_relations, leaf_families, r11_count, RelationInstance, LEAF_FAMILIES,
};
pub use support::{
    action_bounds_hold, disjoint_for_trivial_action, mult_set, signed_closure, support,
    symbol_mult, symbol_support,
};
pub use table5::{defect_instances, verify_defects, DefectInstance, ROWS as DEFECT_ROWS};

use crate::automorphism::{NamedAut, SymbolWord};
use crate::error::Result;
use crate::freegroup::Signature;

/// Evaluates a spelling to an automorphism of `F_{n,k,l}`.
pub fn eval_symbol_word(sig: Signature, w: &SymbolWord) -> Result<NamedAut> {
    NamedAut::from_spelling(sig, w)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportLine {
    pub family: &'static str,
    pub params: String,
    pub status: Status,
}

/// Outcome of verifying a set of relation families, one line per instance.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub lines: Vec<ReportLine>,
}

impl Report {
    pub fn count(&self, status: Status) -> usize {
        self.lines.iter().filter(|l| l.status == status).count()
    }

    pub fn all_passed(&self) -> bool {
        self.count(Status::Fail) == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &ReportLine> {
        self.lines.iter().filter(|l| l.status == Status::Fail)
    }

    /// `family<TAB>pass<TAB>fail<TAB>skip` per family, in report order.
    pub fn summary(&self) -> Vec<(&'static str, usize, usize, usize)> {
        let mut out: Vec<(&'static str, usize, usize, usize)> = Vec::new();
        for l in &self.lines {
            if out.last().map(|e| e.0) != Some(l.family) {
                out.push((l.family, 0, 0, 0));
            }
            let e = out.last_mut().unwrap();
            match l.status {
                Status::Pass => e.1 += 1,
                Status::Fail => e.2 += 1,
                Status::Skip => e.3 += 1,
            }
        }
        out
    }

    pub fn footer(&self) -> String {
        format!(
            "total\t{}\tpass={}\tfail={}\tskip={}",
            self.lines.len(),
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Skip)
        )
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.lines {
            writeln!(f, "{}\t{}\t{}", l.family, l.params, l.status)?;
        }
        writeln!(f, "{}", self.footer())
    }
}

/// Checks every instance of the families named by `tag`; an empty family yields one SKIP line.
pub fn verify_relations(tag: &str, sig: Signature) -> Result<Report> {
    let mut lines = Vec::new();
    for fam in leaf_families(tag)? {
        let inst = enumerate_relations(fam, sig)?;
        if inst.is_empty() {
            lines.push(ReportLine {
                family: fam,
                params: "-".into(),
                status: Status::Skip,
            });
            continue;
        }
        let ok: Vec<bool> = inst
            .par_iter()
            .map(|r| {
                NamedAut::from_spelling(sig, &r.relator())
                    .map(|a| a.is_identity())
                    .unwrap_or(false)
            })
            .collect();
        lines.extend(inst.into_iter().zip(ok).map(|(r, ok)| ReportLine {
            family: fam,
            params: r.params,
            status: if ok { Status::Pass } else { Status::Fail },
        }));
    }
    Ok(Report { lines })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_families_hold() {
        for (n, k, l) in [(2, 2, 2), (3, 1, 1), (1, 2, 2), (0, 3, 1), (3, 0, 0)] {
            let sig = Signature::new(n, k, l).unwrap();
            for tag in ["N", "Q", "R", "C", "Rconj"] {
                let rep = verify_relations(tag, sig).unwrap();
                let bad: Vec<_> = rep.failures().take(5).collect();
                assert!(bad.is_empty(), "{sig} {tag}: {bad:?}");
            }
        }
    }

    #[test]
    fn empty_families_skip() {
        let rep = verify_relations("N3", Signature::new(1, 1, 0).unwrap()).unwrap();
        assert_eq!(rep.lines.len(), 1);
        assert_eq!(rep.lines[0].status, Status::Skip);
        assert!(rep
            .to_string()
            .ends_with("total\t1\tpass=0\tfail=0\tskip=1\n"));
    }
}

//! Command-line front end. Exit codes: 0 all checks pass, 1 a check failed, 2 usage error.

use std::fmt::Write as _;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use itertools::Itertools;

use crate::abelianization::{
    act_hom, alternative_rank, johnson_crossed, johnson_y, johnson_z, RankReport,
};
use crate::automorphism::NamedAut;
use crate::cocycle::{i_s, pairing_table, PairingContext};
use crate::error::{Error, Result};
use crate::freegroup::{Gen, Signature};
use crate::presentation::{
    defect_instances, lpres_expand, verify_action_consistency, verify_relations, Report,
    ReportLine, Status, DEFECT_ROWS,
};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "autfb",
    version,
    about = "Exact computations in AutFB(n,k,l) and its Birman kernel"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Text,
}

#[derive(Debug, Args)]
struct Common {
    #[arg(long, default_value_t = 0)]
    n: u32,
    #[arg(long, default_value_t = 0)]
    k: u32,
    #[arg(long, default_value_t = 0)]
    l: u32,
    #[arg(long, value_enum, default_value_t = Format::Tsv)]
    format: Format,
    /// Collapse per-instance lines to counts.
    #[arg(long)]
    summary: bool,
}

impl Common {
    fn sig(&self) -> Result<Signature> {
        Signature::new(self.n, self.k, self.l)
    }
}

#[derive(Debug, Args)]
struct ContextArgs {
    /// Boundary generator `y` (default y1).
    #[arg(long)]
    y: Option<String>,
    /// First member `a` of X ∪ Z (default: first available).
    #[arg(long)]
    a: Option<String>,
    /// Second member `b` of X ∪ Z (default: second available).
    #[arg(long)]
    b: Option<String>,
}

impl ContextArgs {
    fn build(&self, sig: Signature) -> Result<PairingContext> {
        let def = PairingContext::default_for(sig)?;
        let pick = |s: &Option<String>, d: Gen| s.as_deref().map_or(Ok(d), str::parse);
        PairingContext::new(
            sig,
            pick(&self.y, def.y())?,
            pick(&self.a, def.a())?,
            pick(&self.b, def.b())?,
        )
    }
}

#[derive(Debug, Args)]
struct AutArgs {
    /// Automorphism spelling, e.g. "C[y1,x1] M[x1^+1,y1]".
    #[arg(long, conflicts_with = "word")]
    aut: Option<String>,
    /// File holding an automorphism spelling.
    #[arg(long)]
    word: Option<std::path::PathBuf>,
}

impl AutArgs {
    fn load(&self, sig: Signature) -> Result<NamedAut> {
        let text = match (&self.aut, &self.word) {
            (Some(t), _) => t.clone(),
            (None, Some(p)) => std::fs::read_to_string(p)
                .map_err(|e| Error::Parse(format!("{}: {e}", p.display())))?,
            (None, None) => return Err(Error::Parse("one of --aut or --word is required".into())),
        };
        NamedAut::parse(sig, &text)
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Verify a relation family or suite.
    Verify {
        /// nielsen, jensen-wahl, rk, c-lemma, action-table, table5, inverse-property, or a family tag such as R1.2.
        family: String,
        #[command(flatten)]
        common: Common,
    },
    /// Exact rank of the abelianization of the kernel.
    Rank {
        #[command(flatten)]
        common: Common,
    },
    /// Homology action and Johnson-type homomorphisms of a kernel element.
    Johnson {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        aut: AutArgs,
    },
    /// Table of the pairing between the cocycles and the abelian cycles.
    Pairing {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        ctx: ContextArgs,
        #[arg(long, default_value_t = 6)]
        rmax: i64,
        #[arg(long, default_value_t = 6)]
        mmax: i64,
    },
    /// The crossed homomorphism I_s of a kernel element, as a formal sum.
    Isum {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        ctx: ContextArgs,
        #[command(flatten)]
        aut: AutArgs,
        /// Generator s in X ∪ Z.
        #[arg(long)]
        s: String,
    },
    /// Expand the L-presentation to a given depth.
    Expand {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 1)]
        depth: usize,
    },
}

/// Parses `args` (including the program name) and runs the command. Reports go to
/// `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return EXIT_USAGE;
            }
            let _ = write!(out, "{}", e.render());
            return EXIT_PASS;
        }
    };
    let mut buf = String::new();
    let code = match dispatch(cli.cmd, &mut buf) {
        Ok(pass) => {
            if pass {
                EXIT_PASS
            } else {
                EXIT_FAIL
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    };
    let _ = out.write_all(buf.as_bytes());
    code
}

fn dispatch(cmd: Command, out: &mut String) -> Result<bool> {
    match cmd {
        Command::Verify { family, common } => cmd_verify(&family, &common, out),
        Command::Rank { common } => cmd_rank(&common, out),
        Command::Johnson { common, aut } => cmd_johnson(&common, &aut, out),
        Command::Pairing {
            common,
            ctx,
            rmax,
            mmax,
        } => cmd_pairing(&common, &ctx, rmax, mmax, out),
        Command::Isum {
            common,
            ctx,
            aut,
            s,
        } => cmd_isum(&common, &ctx, &aut, &s, out),
        Command::Expand { common, depth } => cmd_expand(&common, depth, out),
    }
}

fn line(family: &'static str, params: String, ok: bool) -> ReportLine {
    ReportLine {
        family,
        params,
        status: if ok { Status::Pass } else { Status::Fail },
    }
}

fn suite_report(family: &str, sig: Signature) -> Result<Report> {
    let tag = match family {
        "nielsen" => "N",
        "jensen-wahl" => "Q",
        "rk" => "R",
        "c-lemma" => "C",
        "action-table" => {
            let lines = verify_action_consistency(sig)
                .into_iter()
                .map(|c| line("action", format!("t={},s={}", c.t, c.s), c.conjugation))
                .collect();
            return Ok(Report { lines });
        }
        "inverse-property" => {
            let lines = verify_action_consistency(sig)
                .into_iter()
                .map(|c| line("inverse", format!("t={},s={}", c.t, c.s), c.inverse))
                .collect();
            return Ok(Report { lines });
        }
        "table5" => {
            const NAMES: [&str; DEFECT_ROWS] = [
                "T5.1", "T5.2", "T5.3", "T5.4", "T5.5", "T5.6", "T5.7", "T5.8", "T5.9",
            ];
            let inst = defect_instances(sig);
            let mut lines = Vec::new();
            for (row, name) in (1..=DEFECT_ROWS).zip(NAMES) {
                let here: Vec<_> = inst.iter().filter(|d| d.row == row).collect();
                if here.is_empty() {
                    lines.push(ReportLine {
                        family: name,
                        params: "-".into(),
                        status: Status::Skip,
                    });
                }
                lines.extend(
                    here.into_iter()
                        .map(|d| line(name, d.params.clone(), d.holds_literally())),
                );
            }
            return Ok(Report { lines });
        }
        other => other,
    };
    verify_relations(tag, sig)
}

fn write_report(rep: &Report, common: &Common, out: &mut String) {
    if common.summary {
        for (fam, p, f, s) in rep.summary() {
            let _ = writeln!(out, "{fam}\tpass={p}\tfail={f}\tskip={s}");
        }
        let _ = writeln!(out, "{}", rep.footer());
        return;
    }
    match common.format {
        Format::Tsv => out.push_str(&rep.to_string()),
        Format::Text => {
            for l in &rep.lines {
                let _ = writeln!(
                    out,
                    "{:<8} {:<6} {}",
                    l.family,
                    l.status.to_string(),
                    l.params
                );
            }
            let _ = writeln!(
                out,
                "{} instances: {} passed, {} failed, {} skipped",
                rep.lines.len(),
                rep.count(Status::Pass),
                rep.count(Status::Fail),
                rep.count(Status::Skip)
            );
        }
    }
}

fn cmd_verify(family: &str, common: &Common, out: &mut String) -> Result<bool> {
    let rep = suite_report(family, common.sig()?)?;
    write_report(&rep, common, out);
    Ok(rep.all_passed())
}

fn cmd_rank(common: &Common, out: &mut String) -> Result<bool> {
    let sig = common.sig()?;
    let rep = RankReport::compute(sig)?;
    match common.format {
        Format::Tsv => {
            let _ = writeln!(out, "sig\texpected\tcomputed\tstatus");
            let _ = writeln!(out, "{rep}");
        }
        Format::Text => {
            let _ = writeln!(out, "signature {sig}");
            let _ = writeln!(out, "computed rank: {}", rep.computed);
            let _ = writeln!(
                out,
                "expected rank: {} ({})",
                rep.expected,
                if sig.n == 0 {
                    "2kl + k(k-1)"
                } else {
                    "2kn + 2kl"
                }
            );
            if sig.n > 0 {
                let alt = alternative_rank(sig);
                let _ = writeln!(
                    out,
                    "alternative count 2kn + kl = {alt}: {}",
                    if alt == rep.computed {
                        "matches"
                    } else {
                        "does not match"
                    }
                );
            }
            let _ = writeln!(out, "{}", if rep.passed() { "PASS" } else { "FAIL" });
        }
    }
    Ok(rep.passed())
}

fn cmd_johnson(common: &Common, aut: &AutArgs, out: &mut String) -> Result<bool> {
    let sig = common.sig()?;
    let f = aut.load(sig)?;
    if sig.n > 0 {
        let _ = writeln!(out, "# A");
        out.push_str(&act_hom(&f)?.to_string());
    }
    let _ = writeln!(out, "# J");
    out.push_str(&johnson_crossed(&f)?.to_string());
    let _ = writeln!(out, "# J'_c");
    let head = sig.xs().chain(sig.zs()).join("\t");
    let _ = writeln!(out, "\t{head}");
    for c in sig.ys() {
        let _ = writeln!(out, "{c}\t{}", johnson_y(&f, c)?.iter().join("\t"));
    }
    if sig.l > 0 {
        let _ = writeln!(out, "# J_c");
        let _ = writeln!(out, "\t{}", sig.ys().join("\t"));
        for c in sig.zs() {
            let _ = writeln!(out, "{c}\t{}", johnson_z(&f, c)?.iter().join("\t"));
        }
    }
    Ok(true)
}

fn cmd_pairing(
    common: &Common,
    ctx: &ContextArgs,
    rmax: i64,
    mmax: i64,
    out: &mut String,
) -> Result<bool> {
    if rmax < 1 || mmax < 1 {
        return Err(Error::InvalidContext(
            "--rmax and --mmax must be at least 1".into(),
        ));
    }
    let ctx = ctx.build(common.sig()?)?;
    let table = pairing_table(&ctx, rmax, mmax)?;
    let _ = writeln!(out, "r\\m\t{}", (1..=mmax).join("\t"));
    for (r, row) in (1..).zip(&table) {
        let _ = writeln!(out, "{r}\t{}", row.iter().join("\t"));
    }
    let ok = table.iter().enumerate().all(|(r, row)| {
        row.iter()
            .enumerate()
            .all(|(m, &v)| v == if r == m { 2 } else { 0 })
    });
    if common.format == Format::Text || common.summary {
        let _ = writeln!(out, "{}", if ok { "PASS" } else { "FAIL" });
    }
    Ok(ok)
}

fn cmd_isum(
    common: &Common,
    ctx: &ContextArgs,
    aut: &AutArgs,
    s: &str,
    out: &mut String,
) -> Result<bool> {
    let sig = common.sig()?;
    let ctx = ctx.build(sig)?;
    let f = aut.load(sig)?;
    let s: Gen = s.parse()?;
    out.push_str(&i_s(&ctx, &f, s)?.to_string());
    Ok(true)
}

fn cmd_expand(common: &Common, depth: usize, out: &mut String) -> Result<bool> {
    let sig = common.sig()?;
    let rels = lpres_expand(sig, depth)?;
    let bad = rels
        .iter()
        .filter(|r| !NamedAut::from_valid_spelling(sig, r).is_identity())
        .count();
    if !common.summary {
        for r in &rels {
            let _ = writeln!(out, "{r}");
        }
    }
    let _ = writeln!(
        out,
        "sound\t{}\tfail={bad}\t{}",
        rels.len(),
        if bad == 0 { "PASS" } else { "FAIL" }
    );
    Ok(bad == 0)
}

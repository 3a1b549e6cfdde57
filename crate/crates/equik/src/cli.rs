//! Command-line front door: one subcommand per capability plus a one-shot
//! cross-consistency battery (`verify`).
//!
//! All machine output is JSON built from structs with fixed field order,
//! and every collection is sorted canonically, so a given invocation is
//! byte-for-byte reproducible. Exit codes: 0 success, 1 verification
//! failure, 2 malformed input or guard violation.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;

use crate::groups::{builtins, Group, GroupFile, SignedPermJson};
use crate::lambda::{self, ConstantsTable, TableKind};
use crate::linalg::{rat, Matrix};
use crate::partitions::{self, Constraint, Partition};
use crate::{clifford, ktheory, schur, Error, Result};

const EXIT_OK: i32 = 0;
const EXIT_VERIFY_FAILED: i32 = 1;
const EXIT_BAD_INPUT: i32 = 2;

/// Upper bound for the symmetric-group battery (runtime guard).
const MAX_VERIFY_SYM: u32 = 7;

#[derive(Parser, Debug)]
#[command(
    name = "equik",
    about = "Exact ranks of equivariant K-theory groups for signed-permutation groups",
    version
)]
struct CliArgs {
    /// Output format for machine-readable commands.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Cap on generated group orders.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    max_group_size: usize,
    /// Cap on the dimension for Clifford-algebra computations.
    #[arg(long, global = true, default_value_t = 12)]
    max_clifford_dim: usize,
    /// Cap on table degrees for the operations engine.
    #[arg(long, global = true, default_value_t = 8)]
    max_lambda_degree: u32,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Pretty,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PartitionKind {
    All,
    Distinct,
    Odd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RankSpace {
    Thom,
    Projective,
}

#[derive(Args, Debug, Clone)]
struct GroupSource {
    /// Group definition file (JSON with 1-indexed generators).
    #[arg(long, conflicts_with = "sym")]
    group: Option<PathBuf>,
    /// Built-in symmetric group on N letters.
    #[arg(long)]
    sym: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Enumerate partitions or report the counting statistics.
    Partitions {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = PartitionKind::All)]
        kind: PartitionKind,
        /// Report P, p, i, j counts instead of the list.
        #[arg(long)]
        stats: bool,
        /// Check the counting identities for all m <= N.
        #[arg(long, value_name = "N")]
        verify_upto: Option<u32>,
    },
    /// List conjugacy classes of a group.
    Classes {
        #[command(flatten)]
        source: GroupSource,
        /// Extend the group by an orientation-reversing factor first.
        #[arg(long)]
        extend: bool,
    },
    /// Rank of the K-theory of the representation space or its
    /// projectivization.
    Ranks {
        #[arg(value_enum)]
        space: RankSpace,
        #[command(flatten)]
        source: GroupSource,
    },
    /// Full counting report with the consistency equations.
    Report {
        #[command(flatten)]
        source: GroupSource,
    },
    /// Which classes split in the double cover, per class.
    Schur {
        #[command(flatten)]
        source: GroupSource,
        /// Also run the Clifford-algebra brute-force verdict.
        #[arg(long)]
        oracle: bool,
        /// Also report the crossed-product ranks.
        #[arg(long)]
        ranks: bool,
    },
    /// Commutator sign of the lifts of two commuting elements.
    Commutator {
        /// Group definition file.
        #[arg(long)]
        group: PathBuf,
        /// Index of the first element in canonical order.
        #[arg(long)]
        g: usize,
        /// Index of the second element in canonical order.
        #[arg(long)]
        h: usize,
    },
    /// Tables of the operations engine.
    #[command(subcommand)]
    Lambda(LambdaCommand),
    /// Run the whole cross-consistency battery.
    Verify {
        /// Largest symmetric group in the battery (max 7).
        #[arg(long, default_value_t = 6)]
        sym_upto: u32,
        /// Shorthand for --sym-upto 7.
        #[arg(long)]
        slow: bool,
    },
}

#[derive(Subcommand, Debug)]
enum LambdaCommand {
    /// Power-sum symbol expressed in the exterior-power symbols.
    Psi {
        #[arg(long)]
        i: u32,
    },
    /// Expansions of power-sum products over monomials of weight k.
    Theta {
        #[arg(long)]
        k: u32,
    },
    /// Inverse expansions: monomials over power-sum products.
    Omega {
        #[arg(long)]
        k: u32,
    },
    /// Product structure constants for the exterior-power basis.
    C {
        /// Partition, e.g. "2,3" or "2+3".
        #[arg(long = "L", value_name = "PARTS")]
        l: String,
    },
    /// Product structure constants for the gamma basis.
    U {
        #[arg(long = "L", value_name = "PARTS")]
        l: String,
    },
    /// Module action of a weight-n symbol on a rank-basis symbol.
    Module {
        #[arg(long)]
        n: u32,
        #[arg(long = "I", value_name = "PARTS")]
        i: String,
        #[arg(long = "S", value_name = "PARTS")]
        s: String,
    },
}

/// Resolved invocation: subcommand plus output and guard settings.
pub struct RunConfig {
    args: CliArgs,
}

impl RunConfig {
    pub fn from_cli_args<I, T>(itr: I) -> std::result::Result<Self, clap::Error>
    where
        I: IntoIterator<Item = T>,
        T: Into<std::ffi::OsString> + Clone,
    {
        Ok(RunConfig {
            args: CliArgs::try_parse_from(itr)?,
        })
    }
}

/// Entry point used by the binary: parses `std::env::args`, runs, prints.
pub fn main() -> i32 {
    let config = match RunConfig::from_cli_args(std::env::args_os()) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_BAD_INPUT } else { EXIT_OK };
        }
    };
    let (code, output) = run(config);
    print!("{output}");
    code
}

/// Dispatches a resolved configuration; returns the exit code and the
/// serialized report.
pub fn run(config: RunConfig) -> (i32, String) {
    let format = config.args.format;
    match execute(config) {
        Ok(Output::Report(text)) => (EXIT_OK, text),
        Ok(Output::VerifySummary { text, failures }) => {
            let code = if failures == 0 { EXIT_OK } else { EXIT_VERIFY_FAILED };
            (code, text)
        }
        Err(e) => {
            let msg = match format {
                Format::Json => {
                    format!("{{\"error\":{}}}\n", serde_json::to_string(&e.to_string()).unwrap())
                }
                _ => format!("error: {e}\n"),
            };
            (EXIT_BAD_INPUT, msg)
        }
    }
}

enum Output {
    Report(String),
    VerifySummary { text: String, failures: usize },
}

fn execute(config: RunConfig) -> Result<Output> {
    let CliArgs {
        format,
        max_group_size,
        max_clifford_dim,
        max_lambda_degree,
        command,
    } = config.args;
    match command {
        Command::Partitions {
            n,
            kind,
            stats,
            verify_upto,
        } => partitions_cmd(format, n, kind, stats, verify_upto),
        Command::Classes { source, extend } => {
            let group = load_group(&source, max_group_size, extend)?;
            classes_cmd(format, &group)
        }
        Command::Ranks { space, source } => {
            let group = load_group(&source, max_group_size, false)?;
            let ranks_json = match space {
                RankSpace::Thom => serde_json::to_string(&ktheory::thom_ranks(&group)).unwrap(),
                RankSpace::Projective => {
                    serde_json::to_string(&ktheory::projective_ranks(&group)).unwrap()
                }
            };
            match format {
                Format::Json => Ok(Output::Report(format!("{ranks_json}\n"))),
                Format::Pretty => {
                    let label = match space {
                        RankSpace::Thom => "representation space",
                        RankSpace::Projective => "projective space",
                    };
                    Ok(Output::Report(format!("{label} ranks: {ranks_json}\n")))
                }
                Format::Csv => Err(Error::InvalidInput(
                    "csv output is only available for tabular commands".into(),
                )),
            }
        }
        Command::Report { source } => {
            let group = load_group(&source, max_group_size, false)?;
            let report = ktheory::count_report(&group)?;
            match format {
                Format::Json => Ok(Output::Report(format!(
                    "{}\n",
                    serde_json::to_string(&report).unwrap()
                ))),
                Format::Pretty => Ok(Output::Report(pretty_report(&report))),
                Format::Csv => Err(Error::InvalidInput(
                    "csv output is only available for tabular commands".into(),
                )),
            }
        }
        Command::Schur {
            source,
            oracle,
            ranks,
        } => {
            let group = load_group(&source, max_group_size, false)?;
            if oracle && group.dim() > max_clifford_dim {
                return Err(Error::SizeLimit {
                    what: "oracle dimension",
                    limit: max_clifford_dim,
                    requested: group.dim(),
                });
            }
            schur_cmd(format, &group, oracle, ranks)
        }
        Command::Commutator { group, g, h } => {
            let loaded = load_group_file(&group, max_group_size)?;
            if loaded.dim() > max_clifford_dim {
                return Err(Error::SizeLimit {
                    what: "commutator dimension",
                    limit: max_clifford_dim,
                    requested: loaded.dim(),
                });
            }
            let elems = loaded.elements();
            let pick = |idx: usize| -> Result<_> {
                elems.get(idx).cloned().ok_or_else(|| {
                    Error::InvalidInput(format!(
                        "element index {idx} out of range (order {})",
                        elems.len()
                    ))
                })
            };
            let ge = pick(g)?;
            let he = pick(h)?;
            let sign = clifford::commutator_sign(&ge, &he)?;
            #[derive(Serialize)]
            struct SignOut {
                sign: i8,
            }
            let json = serde_json::to_string(&SignOut { sign }).unwrap();
            match format {
                Format::Json => Ok(Output::Report(format!("{json}\n"))),
                Format::Pretty => Ok(Output::Report(format!(
                    "commutator sign of lifts of {ge} and {he}: {sign:+}\n"
                ))),
                Format::Csv => Err(Error::InvalidInput(
                    "csv output is only available for tabular commands".into(),
                )),
            }
        }
        Command::Lambda(sub) => lambda_cmd(format, max_lambda_degree, sub),
        Command::Verify { sym_upto, slow } => {
            let sym_upto = if slow { MAX_VERIFY_SYM } else { sym_upto };
            if sym_upto == 0 || sym_upto > MAX_VERIFY_SYM {
                return Err(Error::InvalidInput(format!(
                    "--sym-upto must be between 1 and {MAX_VERIFY_SYM}"
                )));
            }
            let report = run_verification(sym_upto);
            Ok(Output::VerifySummary {
                failures: report.failures(),
                text: report.render(),
            })
        }
    }
}

fn load_group_file(path: &PathBuf, cap: usize) -> Result<Group> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
    let file: GroupFile = serde_json::from_str(&text)
        .map_err(|e| Error::InvalidInput(format!("bad group file {}: {e}", path.display())))?;
    Group::from_file_capped(&file, cap)
}

fn load_group(source: &GroupSource, cap: usize, extend: bool) -> Result<Group> {
    let base = match (&source.group, source.sym) {
        (Some(path), None) => load_group_file(path, cap),
        (None, Some(n)) => Group::symmetric(n),
        _ => Err(Error::InvalidInput(
            "exactly one of --group FILE or --sym N is required".into(),
        )),
    }?;
    if extend {
        base.extend_with_reflection()
    } else {
        Ok(base)
    }
}

fn big_value(v: &num_bigint::BigUint) -> serde_json::Value {
    use num_traits::ToPrimitive;
    match v.to_u64() {
        Some(u) => serde_json::Value::from(u),
        None => serde_json::Value::from(v.to_string()),
    }
}

fn partitions_cmd(
    format: Format,
    n: u32,
    kind: PartitionKind,
    stats: bool,
    verify_upto: Option<u32>,
) -> Result<Output> {
    if let Some(limit) = verify_upto {
        if limit < 1 {
            return Err(Error::InvalidInput("--verify-upto must be positive".into()));
        }
        let report = partitions::verify_identities(limit);
        #[derive(Serialize)]
        struct VerifyOut {
            checked_to: u32,
            pass: bool,
            failures: Vec<String>,
        }
        let out = VerifyOut {
            checked_to: report.checked_to,
            pass: report.all_pass(),
            failures: report.failures.clone(),
        };
        let text = match format {
            Format::Json => format!("{}\n", serde_json::to_string(&out).unwrap()),
            _ => {
                if out.pass {
                    format!("all partition identities hold up to n = {}\n", out.checked_to)
                } else {
                    format!("failures: {:?}\n", out.failures)
                }
            }
        };
        return Ok(Output::Report(text));
    }
    if stats {
        if n < 1 {
            return Err(Error::InvalidInput("--stats needs n >= 1".into()));
        }
        let st = partitions::stats(n);
        #[derive(Serialize)]
        struct StatsOut {
            n: u32,
            #[serde(rename = "P")]
            total: serde_json::Value,
            p: serde_json::Value,
            i: serde_json::Value,
            j: serde_json::Value,
        }
        let out = StatsOut {
            n,
            total: big_value(&st.total),
            p: big_value(&st.distinct_even),
            i: big_value(&st.distinct_odd),
            j: big_value(&st.odd_parts),
        };
        let text = match format {
            Format::Json => format!("{}\n", serde_json::to_string(&out).unwrap()),
            Format::Pretty => format!(
                "n = {}: P = {}, p = {}, i = {}, j = {}\n",
                n, st.total, st.distinct_even, st.distinct_odd, st.odd_parts
            ),
            Format::Csv => format!(
                "n,P,p,i,j\n{},{},{},{},{}\n",
                n, st.total, st.distinct_even, st.distinct_odd, st.odd_parts
            ),
        };
        return Ok(Output::Report(text));
    }
    let constraint = match kind {
        PartitionKind::All => Constraint::All,
        PartitionKind::Distinct => Constraint::Distinct,
        PartitionKind::Odd => Constraint::OddParts,
    };
    let list = partitions::enumerate(n, constraint);
    #[derive(Serialize)]
    struct ListOut {
        n: u32,
        kind: &'static str,
        count: usize,
        partitions: Vec<Vec<u32>>,
    }
    let out = ListOut {
        n,
        kind: match kind {
            PartitionKind::All => "all",
            PartitionKind::Distinct => "distinct",
            PartitionKind::Odd => "odd",
        },
        count: list.len(),
        partitions: list.iter().map(|p| p.parts().to_vec()).collect(),
    };
    let text = match format {
        Format::Json => format!("{}\n", serde_json::to_string(&out).unwrap()),
        Format::Pretty => {
            let mut s = format!("{} partitions of {} ({}):\n", out.count, n, out.kind);
            for p in &list {
                let _ = writeln!(s, "  {p}");
            }
            s
        }
        Format::Csv => {
            let mut s = String::from("partition\n");
            for p in &list {
                let _ = writeln!(s, "{p}");
            }
            s
        }
    };
    Ok(Output::Report(text))
}

fn classes_cmd(format: Format, group: &Group) -> Result<Output> {
    let classes = group.conjugacy_classes();
    #[derive(Serialize)]
    struct ClassOut {
        rep: SignedPermJson,
        size: usize,
        #[serde(skip_serializing_if = "Option::is_none")]
        cycle_type: Option<Vec<u32>>,
    }
    #[derive(Serialize)]
    struct ClassesOut {
        n: usize,
        order: usize,
        class_count: usize,
        classes: Vec<ClassOut>,
    }
    let out = ClassesOut {
        n: group.dim(),
        order: group.order(),
        class_count: classes.len(),
        classes: classes
            .iter()
            .map(|c| ClassOut {
                rep: SignedPermJson::from_element(&c.rep),
                size: c.size,
                cycle_type: c.cycle_type.as_ref().map(|t| t.parts().to_vec()),
            })
            .collect(),
    };
    let text = match format {
        Format::Json => format!("{}\n", serde_json::to_string(&out).unwrap()),
        Format::Pretty => {
            let mut s = format!(
                "group of order {} in O({}), {} conjugacy classes:\n",
                out.order, out.n, out.class_count
            );
            for c in &classes {
                let t = c
                    .cycle_type
                    .as_ref()
                    .map(|t| format!("  cycle type {t}"))
                    .unwrap_or_default();
                let _ = writeln!(s, "  rep {} size {}{t}", c.rep, c.size);
            }
            s
        }
        Format::Csv => {
            let mut s = String::from("rep,size,cycle_type\n");
            for c in &classes {
                let t = c
                    .cycle_type
                    .as_ref()
                    .map(|t| t.to_plus_string())
                    .unwrap_or_default();
                let _ = writeln!(s, "{},{},{}", c.rep, c.size, t);
            }
            s
        }
    };
    Ok(Output::Report(text))
}

fn schur_cmd(format: Format, group: &Group, oracle: bool, ranks: bool) -> Result<Output> {
    let report = schur::decomposition_report(group, oracle)?;
    let ranks_out = if ranks {
        Some(schur::crossed_product_ranks(group)?)
    } else {
        None
    };
    #[derive(Serialize)]
    struct SchurOut {
        n: usize,
        order: usize,
        class_count: usize,
        decomposed_count: usize,
        classes: Vec<schur::ClassDecomposition>,
        #[serde(skip_serializing_if = "Option::is_none")]
        ranks: Option<schur::CrossedProductRanks>,
    }
    let out = SchurOut {
        n: group.dim(),
        order: report.order,
        class_count: report.class_count,
        decomposed_count: report.decomposed_count,
        classes: report.classes.clone(),
        ranks: ranks_out,
    };
    let text = match format {
        Format::Json => format!("{}\n", serde_json::to_string(&out).unwrap()),
        Format::Pretty => {
            let mut s = format!(
                "group of order {} in O({}): {} classes, {} decomposed\n",
                out.order,
                out.n,
                out.class_count,
                out.decomposed_count
            );
            for c in &out.classes {
                let oracle_txt = match c.oracle {
                    Some(o) => format!(" oracle {o}"),
                    None => String::new(),
                };
                let _ = writeln!(
                    s,
                    "  rep {} det {:+} criterion {}{}",
                    c.rep, c.det, c.criterion, oracle_txt
                );
            }
            if let Some(r) = &out.ranks {
                let _ = writeln!(s, "crossed-product ranks: R_V = {}, R_V1 = {}", r.r_v, r.r_v1);
            }
            s
        }
        Format::Csv => {
            let mut s = String::from("rep,det,criterion,oracle\n");
            for c in &out.classes {
                let o = c.oracle.map(|b| b.to_string()).unwrap_or_default();
                let _ = writeln!(s, "{},{},{},{}", c.rep, c.det, c.criterion, o);
            }
            s
        }
    };
    Ok(Output::Report(text))
}

fn pretty_report(r: &ktheory::RankReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "classes C = {}", r.class_count);
    let _ = writeln!(s, "positive-or-negative count A = {}", r.a);
    let _ = writeln!(s, "even oriented count O = {}", r.o);
    let _ = writeln!(s, "positive oriented even P = {}, odd N = {}", r.p, r.n);
    let _ = writeln!(s, "representation-space ranks: K0 = {}, K1 = {}", r.k0_thom, r.k1_thom);
    let _ = writeln!(s, "projective-space ranks: K0 = {}, K1 = {}", r.k0_proj, r.k1_proj);
    let _ = writeln!(s, "crossed-product ranks: R_V = {}, R_V1 = {}", r.r_v, r.r_v1);
    let _ = writeln!(
        s,
        "consistency: projective {}, euler {}, positive-difference {} (applicable: {})",
        r.consistency_projective,
        r.consistency_euler,
        r.positive_difference_holds,
        r.positive_difference_applicable
    );
    s
}

fn table_entries_nested(table: &ConstantsTable, outer_is_second: bool) -> BTreeMap<String, BTreeMap<String, String>> {
    let mut out: BTreeMap<String, BTreeMap<String, String>> = BTreeMap::new();
    for ((a, b), v) in table.entries() {
        let (outer, inner) = if outer_is_second { (b, a) } else { (a, b) };
        out.entry(outer.to_plus_string())
            .or_default()
            .insert(inner.to_plus_string(), v.to_string());
    }
    out
}

#[derive(Serialize)]
struct TableOut {
    kind: &'static str,
    k: u32,
    #[serde(rename = "L", skip_serializing_if = "Option::is_none")]
    label: Option<String>,
    entries: BTreeMap<String, BTreeMap<String, String>>,
}

fn table_out(table: &ConstantsTable) -> TableOut {
    // theta/omega/conversions read best grouped by the expanded symbol
    // (the second key); c/u tables group by the first argument I.
    let outer_is_second = matches!(
        table.kind,
        TableKind::Theta | TableKind::Omega | TableKind::GammaInLambda | TableKind::LambdaInGamma
    );
    TableOut {
        kind: table.kind.name(),
        k: table.weight,
        label: table.label.as_ref().map(|l| l.to_plus_string()),
        entries: table_entries_nested(table, outer_is_second),
    }
}

fn render_table(format: Format, table: &ConstantsTable) -> Result<Output> {
    let out = table_out(table);
    let text = match format {
        Format::Json => format!("{}\n", serde_json::to_string(&out).unwrap()),
        Format::Pretty => {
            let mut s = format!("{} table, weight {}", out.kind, out.k);
            if let Some(l) = &out.label {
                let _ = write!(s, ", L = {l}");
            }
            s.push('\n');
            for (outer, row) in &out.entries {
                let _ = write!(s, "  {outer}:");
                for (inner, v) in row {
                    let _ = write!(s, "  {inner} -> {v}");
                }
                s.push('\n');
            }
            s
        }
        Format::Csv => {
            let mut s = String::from("row,col,value\n");
            for (outer, row) in &out.entries {
                for (inner, v) in row {
                    let _ = writeln!(s, "{outer},{inner},{v}");
                }
            }
            s
        }
    };
    Ok(Output::Report(text))
}

fn lambda_cmd(format: Format, max_degree: u32, sub: LambdaCommand) -> Result<Output> {
    let check = |k: u32| -> Result<()> {
        if k == 0 || k > max_degree {
            Err(Error::SizeLimit {
                what: "lambda degree",
                limit: max_degree as usize,
                requested: k as usize,
            })
        } else {
            Ok(())
        }
    };
    match sub {
        LambdaCommand::Psi { i } => {
            check(i)?;
            let poly = lambda::newton_psi(i);
            #[derive(Serialize)]
            struct PsiOut {
                i: u32,
                poly: BTreeMap<String, String>,
            }
            let out = PsiOut {
                i,
                poly: poly
                    .terms()
                    .map(|(p, c)| (p.to_plus_string(), c.to_string()))
                    .collect(),
            };
            let text = match format {
                Format::Json => format!("{}\n", serde_json::to_string(&out).unwrap()),
                _ => {
                    let body: Vec<String> = out
                        .poly
                        .iter()
                        .map(|(p, c)| format!("{c} * lam[{p}]"))
                        .collect();
                    format!("psi^{} = {}\n", i, body.join(" + "))
                }
            };
            Ok(Output::Report(text))
        }
        LambdaCommand::Theta { k } => {
            check(k)?;
            render_table(format, &lambda::theta(k)?)
        }
        LambdaCommand::Omega { k } => {
            check(k)?;
            render_table(format, &lambda::omega(k)?)
        }
        LambdaCommand::C { l } => {
            let l = Partition::parse(&l)?;
            check(l.weight())?;
            render_table(format, &lambda::c_constants(&l)?)
        }
        LambdaCommand::U { l } => {
            let l = Partition::parse(&l)?;
            check(l.weight())?;
            render_table(format, &lambda::u_constants(&l)?)
        }
        LambdaCommand::Module { n, i, s } => {
            check(n)?;
            let i = Partition::parse(&i)?;
            let s = Partition::parse(&s)?;
            if i.weight() != n || s.weight() != n {
                return Err(Error::InvalidInput(format!(
                    "both partitions must have weight {n}"
                )));
            }
            let action = lambda::module_action(&i, &s)?;
            #[derive(Serialize)]
            struct ModuleOut {
                n: u32,
                #[serde(rename = "I")]
                i: String,
                #[serde(rename = "S")]
                s: String,
                degree: u8,
                action: BTreeMap<String, String>,
            }
            let out = ModuleOut {
                n,
                i: i.to_plus_string(),
                s: s.to_plus_string(),
                degree: lambda::symbol_degree(&s),
                action: action
                    .iter()
                    .map(|(j, v)| (j.to_plus_string(), v.to_string()))
                    .collect(),
            };
            let text = match format {
                Format::Json => format!("{}\n", serde_json::to_string(&out).unwrap()),
                _ => {
                    let body: Vec<String> = action
                        .iter()
                        .map(|(j, v)| format!("{v} * gamma[{j}]"))
                        .collect();
                    format!(
                        "gamma[{}] . gamma[{}] = {}   (degree {})\n",
                        out.i,
                        out.s,
                        body.join(" + "),
                        out.degree
                    )
                }
            };
            Ok(Output::Report(text))
        }
    }
}

// ---------------------------------------------------------------------------
// verification battery

/// One named check with its verdict.
pub struct CheckLine {
    pub pass: bool,
    pub name: String,
    pub detail: String,
}

/// Deterministic battery outcome.
pub struct VerifyReport {
    pub lines: Vec<CheckLine>,
}

impl VerifyReport {
    fn check(&mut self, pass: bool, name: impl Into<String>, detail: impl Into<String>) {
        self.lines.push(CheckLine {
            pass,
            name: name.into(),
            detail: detail.into(),
        });
    }

    pub fn failures(&self) -> usize {
        self.lines.iter().filter(|l| !l.pass).count()
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        for line in &self.lines {
            if line.pass {
                let _ = writeln!(s, "ok   {}", line.name);
            } else {
                let _ = writeln!(s, "FAIL {}: {}", line.name, line.detail);
            }
        }
        let total = self.lines.len();
        let failed = self.failures();
        if failed == 0 {
            let _ = writeln!(s, "all {total} checks passed");
        } else {
            let _ = writeln!(s, "{failed} of {total} checks FAILED");
        }
        s
    }
}

/// The named groups exercised by the battery, beyond the symmetric family.
pub fn battery_groups() -> Vec<(String, Group)> {
    let mut out: Vec<(String, Group)> = Vec::new();
    for n in 1..=5 {
        out.push((format!("sign group (Z/2)^{n}"), builtins::sign_group(n)));
    }
    for n in 1..=5 {
        let s = Group::symmetric(n).expect("guarded");
        out.push((
            format!("reflection-extended symmetric group on {n} letters"),
            s.extend_with_reflection().expect("small"),
        ));
    }
    out.push(("rotation group of order 4".into(), builtins::rotation4()));
    out.push(("dihedral group of order 8".into(), builtins::dihedral8()));
    out.push(("quaternion group of order 8".into(), builtins::quaternion8()));
    out.push(("alternating group on 4 letters".into(), builtins::alternating4()));
    out.push((
        "full signed-permutation group of rank 3".into(),
        builtins::hyperoctahedral(3).expect("small"),
    ));
    out
}

/// Runs every cross-consistency check. Each line names the identity being
/// checked; all numbers are exact.
pub fn run_verification(sym_upto: u32) -> VerifyReport {
    let mut report = VerifyReport { lines: Vec::new() };

    // partition counting identities
    let identities = partitions::verify_identities(60);
    report.check(
        identities.all_pass(),
        "partition identities to n = 60: odd-parts count = p + i, p - i = pentagonal coefficient, distinct/odd series product is 1",
        identities.failures.join("; "),
    );

    // asymptotic sanity of the distinct-partition count
    let r400 = partitions::asymptotic_ratio(400);
    let r50 = partitions::asymptotic_ratio(50);
    report.check(
        (0.5..=1.5).contains(&r400) && (r400 - 1.0).abs() < (r50 - 1.0).abs(),
        "asymptotic growth of the distinct-partition count (leading term at n = 400)",
        format!("ratio(400) = {r400}, ratio(50) = {r50}"),
    );

    // symmetric-group family: geometric ranks against partition closed forms
    for n in 1..=sym_upto {
        let group = match Group::symmetric(n as usize) {
            Ok(g) => g,
            Err(e) => {
                report.check(false, format!("symmetric group on {n} letters"), e.to_string());
                continue;
            }
        };
        let forms = ktheory::symmetric_closed_forms(n);
        match ktheory::count_report(&group) {
            Ok(r) => {
                let thom_ok = (r.k0_thom, r.k1_thom) == (forms.k0_thom, forms.k1_thom);
                report.check(
                    thom_ok,
                    format!("representation-space ranks of the symmetric group, n = {n}: (K0, K1) = (p, i)"),
                    format!("got ({}, {}), expected ({}, {})", r.k0_thom, r.k1_thom, forms.k0_thom, forms.k1_thom),
                );
                let proj_ok = (r.k0_proj, r.k1_proj) == (forms.k0_proj, forms.k1_proj);
                report.check(
                    proj_ok,
                    format!("projective-space ranks of the symmetric group, n = {n}: (K0, K1) = (2P - j, p)"),
                    format!("got ({}, {}), expected ({}, {})", r.k0_proj, r.k1_proj, forms.k0_proj, forms.k1_proj),
                );
                let crossed_ok = (r.r_v, r.r_v1) == (forms.r_v, forms.r_v1);
                report.check(
                    crossed_ok,
                    format!("crossed-product ranks of the symmetric group, n = {n}: (p + 2i, 2p + i)"),
                    format!("got ({}, {}), expected ({}, {})", r.r_v, r.r_v1, forms.r_v, forms.r_v1),
                );
                report.check(
                    r.consistency_projective && r.consistency_euler && r.positive_difference_holds,
                    format!("rank consistency equations for the symmetric group, n = {n}"),
                    format!("{r:?}"),
                );
            }
            Err(e) => report.check(false, format!("symmetric group report, n = {n}"), e.to_string()),
        }
    }

    // named battery groups
    for (name, group) in battery_groups() {
        battery_checks(&mut report, &name, &group);
    }
    for n in 1..=sym_upto.min(6) {
        let group = Group::symmetric(n as usize).expect("guarded");
        battery_checks(&mut report, &format!("symmetric group on {n} letters"), &group);
    }

    // operations engine
    lambda_checks(&mut report);

    report
}

fn battery_checks(report: &mut VerifyReport, name: &str, group: &Group) {
    // double-cover split criterion against the Clifford oracle
    let oracle_feasible = group.dim() <= 7 && group.order() <= 750;
    if oracle_feasible {
        match schur::decomposition_report(group, true) {
            Ok(dec) => {
                let all_agree = dec.classes.iter().all(|c| c.agreement == Some(true));
                report.check(
                    all_agree,
                    format!("{name}: split criterion agrees with the Clifford oracle on every class"),
                    dec.classes
                        .iter()
                        .filter(|c| c.agreement != Some(true))
                        .map(|c| format!("{}", c.rep))
                        .collect::<Vec<_>>()
                        .join(", "),
                );
            }
            Err(e) => report.check(false, format!("{name}: oracle comparison"), e.to_string()),
        }
    }

    // cover class-count identity
    if group.order() <= 1000 && group.dim() <= clifford::MAX_COVER_DIM {
        match clifford::schur_cover_class_count(group) {
            Ok(cover) => {
                let classes = group.conjugacy_classes().len();
                let dec = schur::decomposed_count(group);
                report.check(
                    cover == classes + dec,
                    format!("{name}: double-cover class count = classes + decomposed classes"),
                    format!("cover {cover}, classes {classes}, decomposed {dec}"),
                );
            }
            Err(e) => report.check(false, format!("{name}: cover class count"), e.to_string()),
        }
    }

    // involution commutator table
    if oracle_feasible {
        let (pass, detail) = involution_table_check(group);
        report.check(
            pass,
            format!("{name}: commutator of an involution lift matches the determinant table"),
            detail,
        );
    }

    // consistency equations
    match ktheory::count_report(group) {
        Ok(r) => {
            report.check(
                r.consistency_projective,
                format!("{name}: projective rank equation R_V1 - 2C = O - A"),
                format!("{r:?}"),
            );
            report.check(
                r.consistency_euler,
                format!("{name}: euler identity R_V1 - R_V = K0 - K1"),
                format!("{r:?}"),
            );
            if r.positive_difference_applicable {
                report.check(
                    r.positive_difference_holds,
                    format!("{name}: positive-class difference R_V1 - R_V = P - N"),
                    format!("{r:?}"),
                );
            }
            if group.is_special_orthogonal() && group.dim().is_multiple_of(2) {
                report.check(
                    r.k1_thom == 0,
                    format!("{name}: orientation-preserving group in even dimension has K1 = 0"),
                    format!("K1 = {}", r.k1_thom),
                );
            }
        }
        Err(e) => report.check(false, format!("{name}: counting report"), e.to_string()),
    }
}

/// Checks the four-row determinant table against the Clifford commutator
/// for every involution class representative and full centralizer.
pub fn involution_table_check(group: &Group) -> (bool, String) {
    let n = group.dim();
    for class in group.conjugacy_classes() {
        let g = &class.rep;
        if !g.compose(g).is_identity() {
            continue;
        }
        let fixed = g.matrix().sub(&Matrix::identity(n)).kernel();
        let n_minus = n - fixed.dim();
        for h in group.centralizer(g) {
            let det_fixed = h
                .matrix()
                .restrict_to(&fixed)
                .expect("centralizer preserves the fixed space")
                .det();
            let det_fixed = if det_fixed == rat(1) { 1 } else { -1 };
            let expected = clifford::involution_table_sign(h.det(), det_fixed, n_minus);
            let actual = clifford::commutator_sign(g, &h).expect("commuting pair");
            if expected != actual {
                return (
                    false,
                    format!("g = {g}, h = {h}: table {expected}, oracle {actual}"),
                );
            }
        }
    }
    (true, String::new())
}

fn lambda_checks(report: &mut VerifyReport) {
    // displayed degree-2 product formula
    let c2 = lambda::c_constants(&Partition::from_parts(vec![2]));
    let ok = match &c2 {
        Ok(t) => {
            let p2 = Partition::from_parts(vec![2]);
            let p11 = Partition::from_parts(vec![1, 1]);
            t.get(&p2, &p11) == rat(1) && t.get(&p11, &p2) == rat(1) && t.get(&p2, &p2) == rat(-2)
        }
        Err(_) => false,
    };
    report.check(
        ok,
        "degree-2 product constants are (1, 1, -2)",
        String::new(),
    );

    // integrality of c and u to degree 5
    let mut integral = true;
    let mut detail = String::new();
    for k in 1..=5u32 {
        for l in lambda::weight_basis(k) {
            match (lambda::c_constants(&l), lambda::u_constants(&l)) {
                (Ok(c), Ok(u)) => {
                    if !c.is_integral() || !u.is_integral() {
                        integral = false;
                        detail = format!("non-integral table at {l}");
                    }
                }
                _ => {
                    integral = false;
                    detail = format!("table construction failed at {l}");
                }
            }
        }
    }
    report.check(integral, "structure constants are integral to degree 5", detail);

    // oracle agreement to degree 4
    let mut oracle_ok = true;
    let mut oracle_detail = String::new();
    'outer: for k in 1..=4u32 {
        for l in lambda::weight_basis(k) {
            let table = match lambda::c_constants(&l) {
                Ok(t) => t,
                Err(e) => {
                    oracle_ok = false;
                    oracle_detail = e.to_string();
                    break 'outer;
                }
            };
            let brute = match lambda::oracle_c(&l, k as usize, k as usize) {
                Ok(t) => t,
                Err(e) => {
                    oracle_ok = false;
                    oracle_detail = e.to_string();
                    break 'outer;
                }
            };
            let mut n_entries = 0;
            for ((i, j), v) in brute.iter() {
                if table.get(i, j) != crate::linalg::Rational::from_integer(v.clone()) {
                    oracle_ok = false;
                    oracle_detail = format!("mismatch at L = {l}, I = {i}, J = {j}");
                    break 'outer;
                }
                n_entries += 1;
            }
            if n_entries != table.len() {
                oracle_ok = false;
                oracle_detail = format!("support mismatch at L = {l}");
                break 'outer;
            }
        }
    }
    report.check(
        oracle_ok,
        "structure constants match the brute-force expansion to degree 4",
        oracle_detail,
    );

    // power-sum diagonality to degree 4
    let mut diag_ok = true;
    let mut diag_detail = String::new();
    for k in 1..=4u32 {
        for s in lambda::weight_basis(k) {
            match lambda::psi_diagonality_holds(&s) {
                Ok(true) => {}
                Ok(false) => {
                    diag_ok = false;
                    diag_detail = format!("psi^{s} is not diagonal");
                }
                Err(e) => {
                    diag_ok = false;
                    diag_detail = e.to_string();
                }
            }
        }
    }
    report.check(
        diag_ok,
        "power sums are multiplicative on products (diagonal coproduct) to degree 4",
        diag_detail,
    );

    // basis-change inversion to degree 6
    let mut inv_ok = true;
    let mut inv_detail = String::new();
    for k in 1..=6u32 {
        let basis = lambda::weight_basis(k);
        match (lambda::theta(k), lambda::omega(k)) {
            (Ok(th), Ok(om)) => {
                for a in &basis {
                    for b in &basis {
                        let mut acc = crate::linalg::Rational::from_integer(0.into());
                        for kk in &basis {
                            acc += om.get(kk, a) * th.get(b, kk);
                        }
                        let expected = if a == b { rat(1) } else { rat(0) };
                        if acc != expected {
                            inv_ok = false;
                            inv_detail = format!("k = {k}, a = {a}, b = {b}");
                        }
                    }
                }
            }
            _ => {
                inv_ok = false;
                inv_detail = format!("table construction failed at k = {k}");
            }
        }
    }
    report.check(
        inv_ok,
        "power-sum basis change inverts exactly to degree 6",
        inv_detail,
    );
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String) {
        let mut full = vec!["equik"];
        full.extend_from_slice(args);
        let config = RunConfig::from_cli_args(full).expect("args parse");
        run(config)
    }

    #[test]
    fn partitions_stats_json() {
        let (code, out) = run_args(&["partitions", "--n", "6", "--stats"]);
        assert_eq!(code, 0);
        assert_eq!(out, "{\"n\":6,\"P\":11,\"p\":2,\"i\":2,\"j\":4}\n");
    }

    #[test]
    fn partitions_list_order() {
        let (code, out) = run_args(&["partitions", "--n", "5", "--kind", "distinct"]);
        assert_eq!(code, 0);
        assert!(out.contains("\"partitions\":[[5],[1,4],[2,3]]"), "{out}");
    }

    #[test]
    fn ranks_thom_sym5() {
        let (code, out) = run_args(&["ranks", "thom", "--sym", "5"]);
        assert_eq!(code, 0);
        assert_eq!(out, "{\"K0\":2,\"K1\":1}\n");
    }

    #[test]
    fn ranks_projective_sym4() {
        let (code, out) = run_args(&["ranks", "projective", "--sym", "4"]);
        assert_eq!(code, 0);
        assert_eq!(out, "{\"K0\":8,\"K1\":1}\n");
    }

    #[test]
    fn missing_group_source_is_input_error() {
        let (code, out) = run_args(&["ranks", "thom"]);
        assert_eq!(code, 2);
        assert!(out.contains("error"));
    }

    #[test]
    fn lambda_psi_output() {
        let (code, out) = run_args(&["lambda", "psi", "--i", "3"]);
        assert_eq!(code, 0);
        assert_eq!(
            out,
            "{\"i\":3,\"poly\":{\"1+1+1\":\"1\",\"1+2\":\"-3\",\"3\":\"3\"}}\n"
        );
    }

    #[test]
    fn lambda_degree_guard() {
        let (code, _) = run_args(&["lambda", "theta", "--k", "9"]);
        assert_eq!(code, 2);
        let (code2, _) = run_args(&["--max-lambda-degree", "10", "lambda", "theta", "--k", "9"]);
        assert_eq!(code2, 0);
    }

    #[test]
    fn verify_battery_passes_and_is_deterministic() {
        let first = run_verification(3);
        assert_eq!(first.failures(), 0, "{}", first.render());
        let second = run_verification(3);
        assert_eq!(first.render(), second.render());
    }

    #[test]
    fn classes_from_group_file() {
        let dir = std::env::temp_dir().join("equik-cli-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("rot4.json");
        std::fs::write(
            &path,
            r#"{"n": 2, "generators": [{"perm": [2,1], "signs": [1,-1]}]}"#,
        )
        .unwrap();
        let (code, out) = run_args(&["classes", "--group", path.to_str().unwrap()]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("\"order\":4"), "{out}");
        let (code2, out2) = run_args(&["commutator", "--group", path.to_str().unwrap(), "--g", "1", "--h", "2"]);
        assert_eq!(code2, 0, "{out2}");
        assert!(out2.starts_with("{\"sign\":"), "{out2}");
    }

    #[test]
    fn schur_sym4_shows_three_decomposed() {
        let (code, out) = run_args(&["schur", "--sym", "4", "--oracle", "--ranks"]);
        assert_eq!(code, 0);
        assert!(out.contains("\"decomposed_count\":3"), "{out}");
        assert!(out.contains("\"ranks\":{\"R_V\":3,\"R_V1\":3}"), "{out}");
        assert!(!out.contains("\"agreement\":false"), "{out}");
    }
}

//! `artinchar`: JSON front end for exact character-theory computations.
//!
//! Exit codes: 0 success, 1 a checked property failed, 2 bad input.

mod commands;
mod corpus_run;
mod input;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use artinchar::heilbronn::Mode;
use artinchar::par::Strategy;
use artinchar::Result;
use clap::{Args, Parser, Subcommand};

use commands::Outcome;
use input::{character, resolve_group, resolve_subgroup, Context};

#[derive(Parser)]
#[command(
    name = "artinchar",
    version,
    about = "Exact character theory of finite permutation groups"
)]
struct Cli {
    /// Write JSON here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Directory for cached character tables.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Worker threads; 1 runs sequentially.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Group structure.
    #[command(subcommand)]
    Grp(GrpCmd),
    /// Character tables.
    #[command(subcommand)]
    Chartab(ChartabCmd),
    /// Class function operations.
    #[command(subcommand)]
    Cf(CfCmd),
    /// Monomial decompositions, M-groups and the monomial cone.
    #[command(subcommand)]
    Mono(MonoCmd),
    /// Order assignments and their inequalities.
    #[command(subcommand)]
    Heilbronn(HeilbronnCmd),
    /// Supercharacter theories.
    #[command(subcommand)]
    Sct(SctCmd),
    /// Holomorphy certificates for formal L-symbols.
    #[command(subcommand)]
    Certify(CertifyCmd),
    /// Corpus sweeps.
    #[command(subcommand)]
    Corpus(CorpusCmd),
}

#[derive(Args)]
struct GroupArg {
    /// Group file path or corpus name such as `S4`.
    group: String,
}

#[derive(Args)]
struct SubgroupArg {
    /// Cycle-notation generators separated by `;`, e.g. `(1,2,3);(1,2)`.
    #[arg(long)]
    subgroup: String,
}

#[derive(Args)]
struct CharArg {
    /// Irreducible index in table order.
    #[arg(long)]
    chi: Option<usize>,
    /// Integer coefficients over the irreducibles, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    coeffs: Option<String>,
}

#[derive(Subcommand)]
enum GrpCmd {
    /// Order, classes, derived series and solvability.
    Info(GroupArg),
    /// Every subgroup, optionally only those up to `--max-order`.
    Subgroups {
        #[command(flatten)]
        g: GroupArg,
        #[arg(long)]
        max_order: Option<usize>,
    },
}

#[derive(Subcommand)]
enum ChartabCmd {
    /// Character table with its orthogonality check.
    Compute(GroupArg),
    /// Re-verifies a table file.
    Verify { table: PathBuf },
}

#[derive(Subcommand)]
enum CfCmd {
    /// Induce a character of the subgroup.
    Induce {
        #[command(flatten)]
        g: GroupArg,
        #[command(flatten)]
        h: SubgroupArg,
        #[command(flatten)]
        c: CharArg,
    },
    /// Restrict a character of the group.
    Restrict {
        #[command(flatten)]
        g: GroupArg,
        #[command(flatten)]
        h: SubgroupArg,
        #[command(flatten)]
        c: CharArg,
    },
    /// Inflate a character of the quotient by the normal subgroup.
    Inflate {
        #[command(flatten)]
        g: GroupArg,
        #[command(flatten)]
        h: SubgroupArg,
        #[command(flatten)]
        c: CharArg,
    },
    /// Pointwise product with irreducible `--with`.
    Twist {
        #[command(flatten)]
        g: GroupArg,
        #[command(flatten)]
        c: CharArg,
        #[arg(long)]
        with: usize,
    },
    /// Multiplicities over the irreducibles.
    Decompose {
        #[command(flatten)]
        g: GroupArg,
        #[command(flatten)]
        c: CharArg,
        /// JSON array of cyclotomic values, one per class.
        #[arg(long)]
        values: Option<PathBuf>,
    },
    /// Level of a character, or of every irreducible.
    Level {
        #[command(flatten)]
        g: GroupArg,
        #[command(flatten)]
        c: CharArg,
    },
}

#[derive(Subcommand)]
enum MonoCmd {
    /// Monomial decomposition of `Ind_H^G 1` with trivial multiplicity one.
    Uvdw {
        #[command(flatten)]
        g: GroupArg,
        #[command(flatten)]
        h: SubgroupArg,
    },
    /// Decomposition through `H G^i`.
    Level {
        #[command(flatten)]
        g: GroupArg,
        #[command(flatten)]
        h: SubgroupArg,
        #[arg(long)]
        level: usize,
    },
    /// Monomiality witness for every irreducible.
    Mgroup(GroupArg),
    /// Cone membership; defaults to `Reg - 1`.
    Cone {
        #[command(flatten)]
        g: GroupArg,
        #[command(flatten)]
        c: CharArg,
    },
}

#[derive(Subcommand)]
enum HeilbronnCmd {
    /// Admissibility and every inequality for an assignment file.
    Verify {
        assignment: PathBuf,
    },
    /// Exhaustive search over base vectors in `[-bound, bound]`.
    Search {
        #[command(flatten)]
        g: GroupArg,
        #[arg(long, default_value_t = 2)]
        bound: i64,
        #[arg(long, default_value = "weak")]
        mode: Mode,
    },
    /// Splits `Θ_G` into its three parts.
    Split {
        assignment: PathBuf,
    },
}

#[derive(Subcommand)]
enum SctCmd {
    /// Checks a theory file.
    Verify {
        theory: PathBuf,
    },
    /// Every supercharacter theory of the group.
    Enumerate(GroupArg),
    /// Product of a theory on the normal subgroup with one on the quotient.
    Product {
        #[command(flatten)]
        g: GroupArg,
        #[command(flatten)]
        h: SubgroupArg,
        /// `classical`, `max` or a theory file.
        #[arg(long, default_value = "max")]
        normal_theory: String,
        #[arg(long, default_value = "classical")]
        quotient_theory: String,
    },
    /// Superinduces every supercharacter of the subgroup theory.
    Superinduce {
        #[command(flatten)]
        g: GroupArg,
        #[command(flatten)]
        h: SubgroupArg,
        #[arg(long, default_value = "classical")]
        theory: String,
        #[arg(long, default_value = "classical")]
        subgroup_theory: String,
    },
}

#[derive(Subcommand)]
enum CertifyCmd {
    /// Certificate for `Ind_H^G 1 - 1_G`.
    Uvdw {
        #[command(flatten)]
        g: GroupArg,
        #[command(flatten)]
        h: SubgroupArg,
    },
    /// `--chi` indexes the linear character in the subgroup's table.
    Rr2 {
        #[command(flatten)]
        g: GroupArg,
        #[command(flatten)]
        h: SubgroupArg,
        #[command(flatten)]
        c: CharArg,
    },
    /// Certificate for `Ind_H^G ψ` with its level-`≤ i` part removed.
    Level {
        #[command(flatten)]
        g: GroupArg,
        #[command(flatten)]
        h: SubgroupArg,
        #[command(flatten)]
        c: CharArg,
        #[arg(long)]
        level: usize,
    },
    /// Symbol of `Reg_G`, or of `Ind_H^G 1` with `--subgroup`.
    Takagi {
        #[command(flatten)]
        g: GroupArg,
        #[arg(long)]
        subgroup: Option<String>,
    },
}

#[derive(Subcommand)]
enum CorpusCmd {
    Run {
        /// Corpus list file; the built-in corpus is used when absent.
        spec: Option<PathBuf>,
        #[arg(long)]
        max_order: Option<usize>,
    },
}

fn dispatch(ctx: &Context, cmd: Command) -> Result<Outcome> {
    use commands::*;
    match cmd {
        Command::Grp(GrpCmd::Info(a)) => grp_info(&resolve_group(&a.group)?),
        Command::Grp(GrpCmd::Subgroups { g, max_order }) => {
            grp_subgroups(&resolve_group(&g.group)?, max_order)
        }
        Command::Chartab(ChartabCmd::Compute(a)) => chartab_compute(ctx, &resolve_group(&a.group)?),
        Command::Chartab(ChartabCmd::Verify { table }) => chartab_verify(&table),
        Command::Cf(c) => cf(ctx, c),
        Command::Mono(m) => mono(ctx, m),
        Command::Heilbronn(HeilbronnCmd::Verify { assignment }) => {
            heilbronn_verify(ctx, &assignment)
        }
        Command::Heilbronn(HeilbronnCmd::Search { g, bound, mode }) => {
            heilbronn_search(ctx, &resolve_group(&g.group)?, bound, mode)
        }
        Command::Heilbronn(HeilbronnCmd::Split { assignment }) => heilbronn_split(ctx, &assignment),
        Command::Sct(s) => sct(ctx, s),
        Command::Certify(c) => certify(ctx, c),
        Command::Corpus(CorpusCmd::Run { spec, max_order }) => {
            let (value, ok) = corpus_run::run(ctx, spec.as_deref(), max_order)?;
            let summary = format!(
                "corpus run: {} groups, all checks hold = {ok}",
                value["count"]
            );
            Ok(Outcome { value, summary, ok })
        }
    }
}

fn cf(ctx: &Context, cmd: CfCmd) -> Result<Outcome> {
    use commands::*;
    match cmd {
        CfCmd::Induce { g, h, c } => {
            let g = resolve_group(&g.group)?;
            let h = resolve_subgroup(&g, &h.subgroup)?;
            let phi = character(ctx, &h, c.chi, c.coeffs.as_deref())?;
            cf_induce(ctx, &g, &h, &phi)
        }
        CfCmd::Restrict { g, h, c } => {
            let g = resolve_group(&g.group)?;
            let h = resolve_subgroup(&g, &h.subgroup)?;
            let chi = character(ctx, &g, c.chi, c.coeffs.as_deref())?;
            cf_restrict(ctx, &h, &chi)
        }
        CfCmd::Inflate { g, h, c } => {
            let g = resolve_group(&g.group)?;
            let n = resolve_subgroup(&g, &h.subgroup)?;
            cf_inflate(ctx, &g, &n, c.chi, c.coeffs.as_deref())
        }
        CfCmd::Twist { g, c, with } => {
            let g = resolve_group(&g.group)?;
            let a = character(ctx, &g, c.chi, c.coeffs.as_deref())?;
            let b = character(ctx, &g, Some(with), None)?;
            cf_twist(ctx, &a, &b)
        }
        CfCmd::Decompose { g, c, values } => {
            let g = resolve_group(&g.group)?;
            let f = match values {
                Some(p) => artinchar::ClassFunction::new(g.clone(), input::read_json(&p)?)?,
                None => character(ctx, &g, c.chi, c.coeffs.as_deref())?,
            };
            cf_decompose(ctx, &f)
        }
        CfCmd::Level { g, c } => {
            let g = resolve_group(&g.group)?;
            let f = match (c.chi, c.coeffs.as_deref()) {
                (None, None) => None,
                (chi, coeffs) => Some(character(ctx, &g, chi, coeffs)?),
            };
            cf_level(&g, f.as_ref())
        }
    }
}

fn mono(ctx: &Context, cmd: MonoCmd) -> Result<Outcome> {
    use commands::*;
    match cmd {
        MonoCmd::Uvdw { g, h } => {
            let g = resolve_group(&g.group)?;
            let h = resolve_subgroup(&g, &h.subgroup)?;
            mono_uvdw(&g, &h)
        }
        MonoCmd::Level { g, h, level } => {
            let g = resolve_group(&g.group)?;
            let h = resolve_subgroup(&g, &h.subgroup)?;
            mono_level(&g, &h, level)
        }
        MonoCmd::Mgroup(a) => mono_mgroup(ctx, &resolve_group(&a.group)?),
        MonoCmd::Cone { g, c } => {
            let g = resolve_group(&g.group)?;
            let psi = match (c.chi, c.coeffs.as_deref()) {
                (None, None) => None,
                (chi, coeffs) => Some(character(ctx, &g, chi, coeffs)?),
            };
            mono_cone(ctx, &g, psi.as_ref())
        }
    }
}

fn sct(ctx: &Context, cmd: SctCmd) -> Result<Outcome> {
    use commands::*;
    match cmd {
        SctCmd::Verify { theory } => sct_verify(&theory),
        SctCmd::Enumerate(a) => sct_enumerate(ctx, &resolve_group(&a.group)?),
        SctCmd::Product {
            g,
            h,
            normal_theory,
            quotient_theory,
        } => {
            let g = resolve_group(&g.group)?;
            let n = resolve_subgroup(&g, &h.subgroup)?;
            sct_product(&g, &n, &normal_theory, &quotient_theory)
        }
        SctCmd::Superinduce {
            g,
            h,
            theory,
            subgroup_theory,
        } => {
            let g = resolve_group(&g.group)?;
            let h = resolve_subgroup(&g, &h.subgroup)?;
            sct_superinduce(&g, &h, &theory, &subgroup_theory)
        }
    }
}

fn certify(ctx: &Context, cmd: CertifyCmd) -> Result<Outcome> {
    use commands::*;
    match cmd {
        CertifyCmd::Uvdw { g, h } => {
            let g = resolve_group(&g.group)?;
            let h = resolve_subgroup(&g, &h.subgroup)?;
            certify_uvdw(&g, &h)
        }
        CertifyCmd::Rr2 { g, h, c } => {
            let g = resolve_group(&g.group)?;
            let h = resolve_subgroup(&g, &h.subgroup)?;
            let psi = character(ctx, &h, c.chi, c.coeffs.as_deref())?;
            certify_rr2_cmd(&g, &h, &psi)
        }
        CertifyCmd::Level { g, h, c, level } => {
            let g = resolve_group(&g.group)?;
            let h = resolve_subgroup(&g, &h.subgroup)?;
            let psi = character(ctx, &h, c.chi, c.coeffs.as_deref())?;
            certify_level_cmd(&g, &h, &psi, level)
        }
        CertifyCmd::Takagi { g, subgroup } => {
            let g = resolve_group(&g.group)?;
            let h = subgroup.map(|s| resolve_subgroup(&g, &s)).transpose()?;
            certify_takagi(&g, h.as_ref())
        }
    }
}

fn emit(out: Option<&PathBuf>, value: &serde_json::Value) -> std::io::Result<()> {
    let text = serde_json::to_string_pretty(value)? + "\n";
    match out {
        Some(p) => std::fs::write(p, text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let strategy = match cli.jobs {
        Some(1) => Strategy::Sequential,
        Some(n) => {
            if let Err(e) = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build_global()
            {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            Strategy::Parallel
        }
        None => Strategy::Parallel,
    };
    let ctx = Context {
        cache_dir: cli.cache_dir,
        strategy,
    };
    match dispatch(&ctx, cli.command) {
        Ok(o) => {
            if let Err(e) = emit(cli.out.as_ref(), &o.value) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            eprintln!("{}", o.summary);
            if o.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(commands::exit_code(&e) as u8)
        }
    }
}

//! finrep: exact representation theory of finite permutation groups from the
//! command line.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use finrep_core::chartab::{character_table, real_irreducibles};
use finrep_core::error::Error;
use finrep_core::group::Group;
use finrep_core::induction::{
    fusion, induction_map, induction_rank, mono_complex, mono_real, MonoVerdict,
};
use finrep_core::lattice::{is_oliver, subgroup_lattice_capped};
use finrep_core::report::{render_chartab, render_smith_report, Format};
use finrep_core::smith::{
    gap_group_check, induction_certificate, prim, smith_matched, smith_search, GapVerdict,
    RGModule, SmithContext,
};
use finrep_core::{corpus, grpfile, linear, verify};

#[derive(Parser)]
#[command(name = "finrep", version, about = "Exact representation theory of finite permutation groups: conjugacy data, cyclotomic character tables, induction monomorphism tests, and Smith-matched module certificates.", long_about = None)]
struct Cli {
    /// Output format for reports.
    #[arg(long, global = true, default_value = "text")]
    format: String,
    /// Cap on group orders for explicit enumeration.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    max_order: usize,
    /// Cap on group orders for subgroup-lattice computations.
    #[arg(long, global = true, default_value_t = 2000)]
    lattice_cap: usize,
    /// Node budget for bounded searches.
    #[arg(long, global = true, default_value_t = 50_000_000)]
    search_cap: usize,
    /// Treat P-orientability as satisfied in overall verdicts.
    #[arg(long, global = true)]
    waive_orientability: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Order, exponent, class counts, prim, Oliver verdict and a lattice
    /// summary of a group.
    Info(GroupArg),
    /// Exact character table (complex irreducibles) with a decimal
    /// approximation column.
    Chartab(GroupArg),
    /// Fusion table, (a, b, a', b') statistics and the induction
    /// monomorphism verdicts for a subgroup H of G.
    Induction {
        #[arg(long)]
        group: String,
        #[arg(long)]
        subgroup: String,
        /// Cross-check the verdicts against exact induction-matrix ranks.
        #[arg(long)]
        rank: bool,
    },
    /// Smith-matched verification and search for real module pairs.
    #[command(subcommand)]
    Smith(SmithCommand),
    /// The SL(2,q) <= GL(2,q) induction report for one q.
    Sl2gl2 {
        #[arg(long)]
        q: u64,
        /// Cross-check against exact induction-matrix ranks.
        #[arg(long)]
        rank: bool,
    },
    /// Induction certificate: verifies the hypotheses for transporting a
    /// Smith-matched pair from a normal subgroup up to the whole group.
    Certificate {
        #[arg(long)]
        group: String,
        #[arg(long)]
        normal: String,
        /// Module literal for U over the normal subgroup (searched when
        /// omitted).
        #[arg(long)]
        u: Option<String>,
        /// Module literal for V over the normal subgroup.
        #[arg(long)]
        v: Option<String>,
    },
    /// Re-runs the bundled verification battery and reports each claim.
    ReproducePaper,
}

#[derive(Subcommand)]
enum SmithCommand {
    /// Verify the Smith-matched conditions and P-orientability of a pair.
    Verify {
        #[arg(long)]
        group: String,
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
    },
    /// Search for minimal Smith matched and P-oriented pairs.
    Search {
        #[arg(long)]
        group: String,
        #[arg(long, default_value_t = 64)]
        max_dim: i64,
    },
}

#[derive(Args)]
struct GroupArg {
    /// Path to a group file, or a bundled corpus name (see README).
    group: String,
}

fn load_group(spec: &str, max_order: usize) -> Result<Group, Error> {
    if let Some(name) = spec.strip_prefix("corpus:") {
        return corpus::load(name);
    }
    if corpus::entries().iter().any(|e| e.name == spec) {
        return corpus::load(spec);
    }
    let text = std::fs::read_to_string(spec).map_err(|e| Error::Parse {
        line: 0,
        msg: format!("cannot read `{spec}`: {e}"),
    })?;
    grpfile::parse_group_capped(&text, max_order)
}

/// Loads a subgroup specification and realizes it on the parent's points,
/// padding with fixed points when its degree is smaller.
fn load_subgroup(g: &Group, spec: &str, max_order: usize) -> Result<Group, Error> {
    let h = load_group(spec, max_order)?;
    let h = if h.degree() == g.degree() {
        h
    } else if h.degree() < g.degree() {
        let gens: Vec<_> = h
            .generators()
            .iter()
            .map(|p| verify::pad_perm(p, g.degree()))
            .collect();
        Group::from_generators(g.degree(), gens)?
    } else {
        return Err(Error::SubgroupMismatch);
    };
    g.embed(&h)?;
    Ok(h)
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Parse { .. }
        | Error::InvalidPermutation(_)
        | Error::ElementNotInGroup
        | Error::NotPrime(_)
        | Error::DegreeTooLarge { .. }
        | Error::UnsupportedQ(_)
        | Error::GroupMismatch
        | Error::SubgroupMismatch
        | Error::NotNormal => 2,
        Error::OrderCapExceeded { .. }
        | Error::LatticeCapExceeded { .. }
        | Error::NoSuitablePrime { .. }
        | Error::SearchBudgetExceeded { .. } => 3,
        Error::InternalInconsistency(_)
        | Error::NotIrreducible(_)
        | Error::TableUnavailable(_)
        | Error::NotIntegral(_) => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = match Format::parse(&cli.format) {
        Some(f) => f,
        None => {
            eprintln!("unknown format `{}` (expected tsv or text)", cli.format);
            return ExitCode::from(2);
        }
    };
    match run(&cli, format) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn run(cli: &Cli, format: Format) -> Result<u8, Error> {
    match &cli.command {
        Command::Info(arg) => cmd_info(cli, format, &arg.group),
        Command::Chartab(arg) => {
            let g = load_group(&arg.group, cli.max_order)?;
            let table = character_table(&g)?;
            print!("{}", render_chartab(&g, &table, format));
            Ok(0)
        }
        Command::Induction {
            group,
            subgroup,
            rank,
        } => {
            let g = load_group(group, cli.max_order)?;
            let h = load_subgroup(&g, subgroup, cli.max_order)?;
            print!("{}", induction_report(&g, &h, *rank, format)?);
            Ok(0)
        }
        Command::Smith(SmithCommand::Verify { group, u, v }) => {
            let g = load_group(group, cli.max_order)?;
            let table = character_table(&g)?;
            let rirr = real_irreducibles(&g, &table)?;
            let lattice = subgroup_lattice_capped(&g, cli.lattice_cap)?;
            let ctx = SmithContext::new(&g, &lattice, &rirr)?;
            let mu = RGModule::parse(&rirr, u)?;
            let mv = RGModule::parse(&rirr, v)?;
            let report = smith_matched(&ctx, &mu, &mv)?;
            print!(
                "{}",
                render_smith_report(&report, cli.waive_orientability, format)
            );
            Ok(if report.overall(cli.waive_orientability) {
                0
            } else {
                1
            })
        }
        Command::Smith(SmithCommand::Search { group, max_dim }) => {
            let g = load_group(group, cli.max_order)?;
            let table = character_table(&g)?;
            let rirr = real_irreducibles(&g, &table)?;
            let lattice = subgroup_lattice_capped(&g, cli.lattice_cap)?;
            let ctx = SmithContext::new(&g, &lattice, &rirr)?;
            let outcome = smith_search(&ctx, *max_dim, cli.search_cap)?;
            match outcome.minimal_dim {
                None => println!(
                    "no Smith matched and P-oriented pair up to dimension {max_dim} ({} candidates)",
                    outcome.candidates_checked
                ),
                Some(d) => {
                    println!(
                        "minimal dimension {d} ({} candidates checked)",
                        outcome.candidates_checked
                    );
                    for (u, v) in &outcome.pairs {
                        println!("U = {}", u.format(&rirr));
                        println!("V = {}", v.format(&rirr));
                    }
                }
            }
            Ok(0)
        }
        Command::Sl2gl2 { q, rank } => {
            let n = linear::sl2(*q)?;
            let g = linear::gl2(*q)?;
            print!("{}", induction_report(&g, &n, *rank, format)?);
            Ok(0)
        }
        Command::Certificate {
            group,
            normal,
            u,
            v,
        } => cmd_certificate(cli, format, group, normal, u.as_deref(), v.as_deref()),
        Command::ReproducePaper => {
            let claims = verify::run_all(cli.search_cap);
            let mut all = true;
            for c in &claims {
                let verdict = if c.pass { "PASS" } else { "FAIL" };
                match format {
                    Format::Tsv => println!("{}\t{}\t{}", c.id, verdict, c.description),
                    Format::Text => {
                        println!("[{verdict}] {} — {}", c.id, c.description);
                        for line in c.details.lines() {
                            println!("    {line}");
                        }
                    }
                }
                all &= c.pass;
            }
            Ok(if all { 0 } else { 1 })
        }
    }
}

fn cmd_info(cli: &Cli, format: Format, spec: &str) -> Result<u8, Error> {
    let g = load_group(spec, cli.max_order)?;
    let (oliver, _) = is_oliver(&g)?;
    let mut rows: Vec<(String, String)> = vec![
        ("degree".into(), g.degree().to_string()),
        ("order".into(), g.order().to_string()),
        ("exponent".into(), g.exponent().to_string()),
        ("classes".into(), g.nclasses().to_string()),
        ("real classes".into(), g.nrealclasses().to_string()),
        ("prim".into(), prim(&g).to_string()),
        ("oliver".into(), if oliver { "yes" } else { "no" }.into()),
    ];
    if g.order() <= cli.lattice_cap {
        let lattice = subgroup_lattice_capped(&g, cli.lattice_cap)?;
        rows.push(("subgroup classes".into(), lattice.len().to_string()));
        let orders: Vec<String> = lattice
            .classes
            .iter()
            .map(|c| c.order.to_string())
            .collect();
        rows.push(("subgroup class orders".into(), orders.join(",")));
        rows.push((
            "prime-power classes".into(),
            lattice.p_classes().len().to_string(),
        ));
        rows.push((
            "pseudocyclic classes".into(),
            lattice.pseudocyclic_classes().len().to_string(),
        ));
        rows.push((
            "large classes".into(),
            lattice.large_classes().len().to_string(),
        ));
        let table = character_table(&g)?;
        let rirr = real_irreducibles(&g, &table)?;
        let ctx = SmithContext::new(&g, &lattice, &rirr)?;
        let gap = match gap_group_check(&ctx, 48, cli.search_cap) {
            Ok(GapVerdict::Gap { .. }) => "yes".to_string(),
            Ok(GapVerdict::NotGap { .. }) => "no".to_string(),
            Ok(GapVerdict::NotGapWithinBudget) => "no witness within budget".to_string(),
            Err(Error::SearchBudgetExceeded { .. }) => "no witness within budget".to_string(),
            Err(e) => return Err(e),
        };
        rows.push(("gap group".into(), gap));
    }
    match format {
        Format::Tsv => {
            for (k, v) in rows {
                println!("{k}\t{v}");
            }
        }
        Format::Text => {
            for (k, v) in rows {
                println!("{k:24} {v}");
            }
        }
    }
    Ok(0)
}

fn induction_report(
    g: &Group,
    h: &Group,
    with_rank: bool,
    format: Format,
) -> Result<String, Error> {
    let fus = fusion(g, h)?;
    let mc = mono_complex(g, h)?;
    let mr = mono_real(g, h)?;
    let hcls = h.classes();
    let mut out = String::new();
    match format {
        Format::Tsv => {
            writeln!(out, "h_class\th_order\th_size\tg_class").unwrap();
            for i in 0..hcls.len() {
                writeln!(
                    out,
                    "{i}\t{}\t{}\t{}",
                    hcls.orders[i], hcls.sizes[i], fus.class_map[i]
                )
                .unwrap();
            }
        }
        Format::Text => {
            writeln!(out, "fusion of {} H-classes into G:", hcls.len()).unwrap();
            for i in 0..hcls.len() {
                writeln!(
                    out,
                    "  H-class {i} (order {}, size {}) -> G-class {}",
                    hcls.orders[i], hcls.sizes[i], fus.class_map[i]
                )
                .unwrap();
            }
        }
    }
    writeln!(
        out,
        "a={} b={} a'={} b'={}",
        fus.a, fus.b, fus.a_real, fus.b_real
    )
    .unwrap();
    let describe = |v: &MonoVerdict| match v {
        MonoVerdict::Mono => "monomorphism".to_string(),
        MonoVerdict::NotMono { witness } => format!("not a monomorphism (witness {witness})"),
    };
    writeln!(out, "complex induction: {}", describe(&mc)).unwrap();
    writeln!(out, "real induction:    {}", describe(&mr)).unwrap();
    if with_rank {
        let tg = character_table(g)?;
        let th = character_table(h)?;
        let rg = real_irreducibles(g, &tg)?;
        let rh = real_irreducibles(h, &th)?;
        let map = induction_map(g, h, &tg, &th, &rg, &rh)?;
        let rc = induction_rank(&map.matrix_complex)?;
        let rr = induction_rank(&map.matrix_real)?;
        writeln!(
            out,
            "rank over R(H): {rc} of {} | rank over RO(H): {rr} of {}",
            fus.b, fus.b_real
        )
        .unwrap();
        let consistent = (rc == fus.b) == mc.is_mono() && (rr == fus.b_real) == mr.is_mono();
        writeln!(
            out,
            "rank cross-check: {}",
            if consistent {
                "consistent"
            } else {
                "INCONSISTENT"
            }
        )
        .unwrap();
        if !consistent {
            return Err(Error::InternalInconsistency(
                "rank cross-check disagrees with the class criterion".into(),
            ));
        }
    }
    Ok(out)
}

fn cmd_certificate(
    cli: &Cli,
    format: Format,
    group: &str,
    normal: &str,
    u: Option<&str>,
    v: Option<&str>,
) -> Result<u8, Error> {
    let g = load_group(group, cli.max_order)?;
    let n = load_subgroup(&g, normal, cli.max_order)?;
    let tn = character_table(&n)?;
    let rn = real_irreducibles(&n, &tn)?;
    let lat_n = subgroup_lattice_capped(&n, cli.lattice_cap)?;
    let ctx_n = SmithContext::new(&n, &lat_n, &rn)?;
    let (mu, mv) = match (u, v) {
        (Some(us), Some(vs)) => (RGModule::parse(&rn, us)?, RGModule::parse(&rn, vs)?),
        (None, None) => {
            let outcome = smith_search(&ctx_n, 64, cli.search_cap)?;
            match outcome.pairs.first() {
                Some((a, b)) => (a.clone(), b.clone()),
                None => {
                    println!("no Smith matched pair found on the normal subgroup");
                    return Ok(1);
                }
            }
        }
        _ => {
            return Err(Error::Parse {
                line: 0,
                msg: "provide both --u and --v, or neither".into(),
            })
        }
    };
    let tg = character_table(&g)?;
    let rg = real_irreducibles(&g, &tg)?;
    let lat_g = subgroup_lattice_capped(&g, cli.lattice_cap)?;
    let ctx_g = SmithContext::new(&g, &lat_g, &rg)?;
    let cert = induction_certificate(&g, &n, &ctx_g, &ctx_n, &mu, &mv, cli.waive_orientability)?;
    let rows = vec![
        ("oliver".to_string(), cert.oliver.to_string()),
        (
            "real induction mono".to_string(),
            cert.mono_real.to_string(),
        ),
        (
            "pair matched on N".to_string(),
            cert.n_report.matched().to_string(),
        ),
        ("induced dim".to_string(), cert.induced_dim.to_string()),
        (
            "induced matched".to_string(),
            cert.induced_report.matched().to_string(),
        ),
        (
            "induced oriented".to_string(),
            (cert.induced_report.oriented_u.pass && cert.induced_report.oriented_v.pass)
                .to_string(),
        ),
        ("doubling applied".to_string(), cert.doubled.to_string()),
        ("final dim".to_string(), cert.final_dim.to_string()),
        ("final U".to_string(), cert.final_u.format(&rg)),
        ("final V".to_string(), cert.final_v.format(&rg)),
        (
            "certificate".to_string(),
            if cert.pass { "pass" } else { "FAIL" }.to_string(),
        ),
    ];
    match format {
        Format::Tsv => {
            for (k, val) in rows {
                println!("{k}\t{val}");
            }
        }
        Format::Text => {
            for (k, val) in rows {
                println!("{k:24} {val}");
            }
        }
    }
    Ok(if cert.pass { 0 } else { 1 })
}

//! Command-line front end: batch invariant computation, domination,
//! enumeration, family construction, transforms, and the verification
//! harness.
//!
//! Exit status: 0 on success, 1 when `verify` finds a failing claim,
//! 2 on usage or input errors.

use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use zagreb_trees::domination::{gamma_k, is_k_dominating};
use zagreb_trees::enumeration::free_trees;
use zagreb_trees::indices::{f_aux, first_zagreb, h_aux, pi1, pi2, second_zagreb};
use zagreb_trees::tree::{text, Tree};
use zagreb_trees::verify::{report_csv, report_json, run_all, ALL_CLAIMS};
use zagreb_trees::{canonical_code, contract_pend, corona, move_pendants, path, star, t_a_nk2, t_nks};

#[derive(Parser)]
#[command(name = "zagreb-trees", version, about = "Multiplicative Zagreb indices and distance-k domination of trees")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Compute exact invariants for every tree in a file.
    Compute {
        /// Tree file in the line-oriented text format ("-" for stdin).
        #[arg(long)]
        input: String,
        /// Domination radius for the gamma column.
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Distance-k domination number with witness for every tree in a file.
    Gamma {
        #[arg(long)]
        input: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit all non-isomorphic trees of order n in the tree text format.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Keep only trees with this distance-k domination number.
        #[arg(long, requires = "k")]
        filter_gamma: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Construct a named family member and print it in the text format.
    Family(FamilyArgs),
    /// Apply a tree transform and print the result(s).
    Transform {
        #[arg(value_enum)]
        which: TransformKind,
        #[arg(long)]
        input: String,
        #[arg(long)]
        u: usize,
        #[arg(long)]
        v: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Scan the catalogued claims and extremal cells; write a JSON report.
    Verify {
        /// Comma-separated claim ids, or "all".
        #[arg(long, default_value = "all")]
        claims: String,
        #[arg(long, default_value_t = 10)]
        nmax: usize,
        #[arg(long, default_value_t = 3)]
        kmax: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

#[derive(Args)]
struct FamilyArgs {
    #[arg(value_enum)]
    which: FamilyKind,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    a: Option<usize>,
    /// Base tree file for corona.
    #[arg(long)]
    input: Option<String>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyKind {
    Star,
    Path,
    TNks,
    TANk2,
    Corona,
}

#[derive(Clone, Copy, ValueEnum)]
enum TransformKind {
    ContractPend,
    MovePendants,
}

fn read_input(path: &str) -> anyhow::Result<String> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        Ok(buf)
    } else {
        Ok(fs::read_to_string(path)?)
    }
}

fn write_output(out: &Option<PathBuf>, content: &str) -> anyhow::Result<()> {
    match out {
        Some(p) => fs::write(p, content)?,
        None => print!("{content}"),
    }
    Ok(())
}

struct ComputedRow {
    index: usize,
    n: usize,
    pi1: String,
    pi2: String,
    m1: String,
    m2: String,
    f: String,
    h: String,
    gamma: usize,
    diameter: usize,
    code: String,
}

fn compute_rows(trees: &[Tree], k: usize) -> anyhow::Result<Vec<ComputedRow>> {
    trees
        .iter()
        .enumerate()
        .map(|(i, t)| {
            Ok(ComputedRow {
                index: i,
                n: t.vertex_count(),
                pi1: pi1(t)?.to_string(),
                pi2: pi2(t)?.to_string(),
                m1: first_zagreb(t).to_string(),
                m2: second_zagreb(t).to_string(),
                f: f_aux(t).to_string(),
                h: h_aux(t).to_string(),
                gamma: gamma_k(t, k)?.gamma,
                diameter: t.diameter(),
                code: canonical_code(t).to_hex(),
            })
        })
        .collect()
}

fn render_rows(rows: &[ComputedRow], k: usize, format: Format) -> String {
    match format {
        Format::Text => {
            let mut s = format!("index n pi1 pi2 m1 m2 f h gamma_{k} diameter code\n");
            for r in rows {
                s.push_str(&format!(
                    "{} {} {} {} {} {} {} {} {} {} {}\n",
                    r.index, r.n, r.pi1, r.pi2, r.m1, r.m2, r.f, r.h, r.gamma, r.diameter, r.code
                ));
            }
            s
        }
        Format::Csv => {
            let mut s = format!("index,n,pi1,pi2,m1,m2,f,h,gamma_{k},diameter,code\n");
            for r in rows {
                s.push_str(&format!(
                    "{},{},{},{},{},{},{},{},{},{},{}\n",
                    r.index, r.n, r.pi1, r.pi2, r.m1, r.m2, r.f, r.h, r.gamma, r.diameter, r.code
                ));
            }
            s
        }
        Format::Json => {
            let items: Vec<serde_json::Value> = rows
                .iter()
                .map(|r| {
                    let mut obj = serde_json::Map::new();
                    obj.insert("index".into(), r.index.into());
                    obj.insert("n".into(), r.n.into());
                    obj.insert("pi1".into(), r.pi1.clone().into());
                    obj.insert("pi2".into(), r.pi2.clone().into());
                    obj.insert("m1".into(), r.m1.clone().into());
                    obj.insert("m2".into(), r.m2.clone().into());
                    obj.insert("f".into(), r.f.clone().into());
                    obj.insert("h".into(), r.h.clone().into());
                    obj.insert(format!("gamma_{k}"), r.gamma.into());
                    obj.insert("diameter".into(), r.diameter.into());
                    obj.insert("code".into(), r.code.clone().into());
                    serde_json::Value::Object(obj)
                })
                .collect();
            let mut s = serde_json::to_string_pretty(&items).unwrap();
            s.push('\n');
            s
        }
    }
}

fn family_tree(args: &FamilyArgs) -> anyhow::Result<Tree> {
    let need = |o: Option<usize>, name: &str| {
        o.ok_or_else(|| anyhow::anyhow!("family requires --{name}"))
    };
    Ok(match args.which {
        FamilyKind::Star => star(need(args.n, "n")?)?,
        FamilyKind::Path => path(need(args.n, "n")?)?,
        FamilyKind::TNks => t_nks(need(args.n, "n")?, need(args.k, "k")?, need(args.s, "s")?)?,
        FamilyKind::TANk2 => t_a_nk2(need(args.n, "n")?, need(args.k, "k")?, need(args.a, "a")?)?,
        FamilyKind::Corona => {
            let input = args
                .input
                .as_deref()
                .ok_or_else(|| anyhow::anyhow!("corona requires --input with the base tree"))?;
            let trees = text::parse_document(&read_input(input)?)?;
            let base = trees
                .first()
                .ok_or_else(|| anyhow::anyhow!("base tree file is empty"))?;
            corona(base, need(args.k, "k")?)?
        }
    })
}

fn run(cli: Cli) -> anyhow::Result<i32> {
    match cli.command {
        Command::Compute {
            input,
            k,
            format,
            out,
        } => {
            let trees = text::parse_document(&read_input(&input)?)?;
            let rows = compute_rows(&trees, k)?;
            write_output(&out, &render_rows(&rows, k, format))?;
            Ok(0)
        }
        Command::Gamma { input, k, out } => {
            let trees = text::parse_document(&read_input(&input)?)?;
            let mut s = String::new();
            for (i, t) in trees.iter().enumerate() {
                let r = gamma_k(t, k)?;
                debug_assert!(is_k_dominating(t, &r.witness, k)?);
                let witness: Vec<String> = r.witness.iter().map(|v| v.to_string()).collect();
                s.push_str(&format!("{} gamma={} witness={}\n", i, r.gamma, witness.join(",")));
            }
            write_output(&out, &s)?;
            Ok(0)
        }
        Command::Enumerate {
            n,
            filter_gamma,
            k,
            out,
        } => {
            let mut s = String::new();
            for t in free_trees(n)? {
                if let Some(g) = filter_gamma {
                    let radius = k.expect("clap enforces --k with --filter-gamma");
                    if gamma_k(&t, radius)?.gamma != g {
                        continue;
                    }
                }
                s.push_str(&text::format_line(&t));
                s.push('\n');
            }
            write_output(&out, &s)?;
            Ok(0)
        }
        Command::Family(args) => {
            let t = family_tree(&args)?;
            write_output(&args.out, &format!("{}\n", text::format_line(&t)))?;
            Ok(0)
        }
        Command::Transform {
            which,
            input,
            u,
            v,
            out,
        } => {
            let trees = text::parse_document(&read_input(&input)?)?;
            let t = trees
                .first()
                .ok_or_else(|| anyhow::anyhow!("input tree file is empty"))?;
            let mut s = String::new();
            match which {
                TransformKind::ContractPend => {
                    s.push_str(&text::format_line(&contract_pend(t, u, v)?));
                    s.push('\n');
                }
                TransformKind::MovePendants => {
                    let (gp, gpp) = move_pendants(t, u, v)?;
                    s.push_str(&text::format_line(&gp));
                    s.push('\n');
                    s.push_str(&text::format_line(&gpp));
                    s.push('\n');
                }
            }
            write_output(&out, &s)?;
            Ok(0)
        }
        Command::Verify {
            claims,
            nmax,
            kmax,
            jobs,
            report,
            csv,
        } => {
            let ids: Vec<String> = if claims == "all" {
                ALL_CLAIMS.iter().map(|s| s.to_string()).collect()
            } else {
                claims.split(',').map(|s| s.trim().to_string()).collect()
            };
            let rep = run_all(&ids, nmax, kmax, jobs)?;
            let json = report_json(&rep);
            match &report {
                Some(p) => fs::write(p, &json)?,
                None => print!("{json}"),
            }
            if let Some(p) = &csv {
                fs::write(p, report_csv(&rep))?;
            }
            for c in &rep.claims {
                eprintln!("{}: {:?}", c.id, c.status);
            }
            Ok(rep.exit_code())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

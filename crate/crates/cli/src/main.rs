use std::error::Error as StdError;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};

use stratlink::complex::subcomplex_by_names;
use stratlink::corpus::{self, CorpusItem};
use stratlink::format::{self, ComplexFile};
use stratlink::geometry::{self, PLFunction, SimplexPoint};
use stratlink::homology::{homology, homology_of, ChainComplexZ, Coefficients};
use stratlink::neighborhoods::{holink_model, simplicial_link, stan_hood_flag};
use stratlink::verify::{check_pushout, compare_links};
use stratlink::{Flag, Poset, RegularFlag, Restriction, StratComplex};

type CliResult<T> = Result<T, Box<dyn StdError>>;

const FLAG_WARNING_LIMIT: u128 = 1 << 20;

#[derive(Parser)]
#[command(name = "stratlink", version, about = "Homotopy-link models of stratified complexes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print simplex counts, strata and Euler characteristic.
    Show { file: PathBuf },
    /// Barycentric subdivision, repeated `count` times.
    Sd {
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        count: usize,
    },
    /// The simplicial link of a flag, as a complex file.
    Link {
        file: PathBuf,
        #[arg(long)]
        flag: String,
    },
    /// The simplicial standard neighborhood of a flag, as a complex file.
    Neighborhood {
        file: PathBuf,
        #[arg(long)]
        flag: String,
    },
    /// Homology of the holink model of a flag.
    Holink {
        file: PathBuf,
        #[arg(long)]
        flag: String,
        #[arg(long, default_value = "int")]
        coeff: String,
    },
    /// Homology of a complex.
    Homology {
        file: PathBuf,
        #[arg(long, default_value = "int")]
        coeff: String,
    },
    /// Print a corpus complex (`--list` for names).
    Corpus {
        name: Option<String>,
        #[arg(long)]
        list: bool,
        /// Print Δ-complexes as cells instead of flattening them.
        #[arg(long)]
        cells: bool,
    },
    /// Compare simplicial links with holink models for every (or the given) flag.
    VerifyA {
        file: PathBuf,
        #[arg(long = "flag")]
        flags: Vec<String>,
    },
    /// Glue B onto X along A and check Mayer–Vietoris on every link.
    VerifyB {
        x: PathBuf,
        b: PathBuf,
        /// Complex file naming the simplices of A inside B.
        #[arg(long)]
        sub: PathBuf,
        /// Lines `<vertex of A> <vertex of X>`.
        #[arg(long)]
        map: PathBuf,
        #[arg(long = "flag")]
        flags: Vec<String>,
    },
    /// Exact coordinate computations on one stratified simplex.
    #[command(subcommand)]
    Geom(Geom),
}

#[derive(Args)]
struct Simplex {
    /// Labels of the simplex, e.g. `0,1,2`.
    #[arg(long)]
    flag: String,
    /// Chain poset `a,b,c` (a < b < c); defaults to `0..=max` for numeric labels.
    #[arg(long, conflicts_with = "poset_file")]
    chain: Option<String>,
    /// Take the poset from a complex file.
    #[arg(long)]
    poset_file: Option<PathBuf>,
}

#[derive(Args)]
struct AtPoint {
    #[command(flatten)]
    simplex: Simplex,
    /// Barycentric coordinates, e.g. `1/2,1/4,1/4`.
    #[arg(long)]
    point: String,
}

#[derive(Subcommand)]
enum Geom {
    /// Label of the open face containing the point.
    Stratum(AtPoint),
    /// The coordinate sum `s` over entries related to `p` by `mode`.
    S {
        #[command(flatten)]
        at: AtPoint,
        #[arg(long)]
        p: String,
        #[arg(long, default_value = "eq")]
        mode: String,
    },
    /// The join coordinate `t_p`.
    T {
        #[command(flatten)]
        at: AtPoint,
        #[arg(long)]
        p: String,
    },
    /// Membership in the φ-standard neighborhood of `p`.
    InHood {
        #[command(flatten)]
        at: AtPoint,
        #[arg(long)]
        p: String,
        /// Constant `c` or breakpoints `s:v,...`.
        #[arg(long, default_value = "1")]
        phi: String,
    },
    /// Retraction onto the `≤ p` face, at homotopy time `time`.
    Rho {
        #[command(flatten)]
        at: AtPoint,
        #[arg(long)]
        p: String,
        #[arg(long, default_value = "1")]
        time: String,
    },
    /// The standard aspire over the regular flag `over` at time `time`.
    Aspire {
        #[command(flatten)]
        at: AtPoint,
        #[arg(long)]
        over: String,
        #[arg(long)]
        time: String,
    },
    /// The reparametrisation onto the φ-neighborhood of `p`.
    Reparam {
        #[command(flatten)]
        at: AtPoint,
        #[arg(long)]
        p: String,
        #[arg(long)]
        phi: String,
    },
    /// The weighted barycenter of the flag.
    Barycenter(Simplex),
    /// A point of the subdivision: subflags as positions `0|0,1`, with weights.
    Psi {
        #[command(flatten)]
        simplex: Simplex,
        #[arg(long)]
        chain_of: String,
        #[arg(long)]
        weights: String,
    },
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()).into())
}

fn load(path: &Path) -> CliResult<ComplexFile> {
    format::parse(&read(path)?).map_err(|e| format!("{}: {e}", path.display()).into())
}

fn load_simplicial(path: &Path) -> CliResult<StratComplex> {
    Ok(load(path)?.into_simplicial()?)
}

fn warn_on_large_poset(poset: &Poset) {
    let n = poset.count_regular_flags();
    if n > FLAG_WARNING_LIMIT {
        eprintln!("warning: the poset has {n} regular flags");
    }
}

fn parse_flags(poset: &Poset, texts: &[String]) -> CliResult<Option<Vec<RegularFlag>>> {
    if texts.is_empty() {
        warn_on_large_poset(poset);
        return Ok(None);
    }
    let flags = texts
        .iter()
        .map(|t| RegularFlag::parse(poset, t))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Some(flags))
}

fn plural(n: usize, one: &str, many: &str) -> String {
    format!("{n} {}", if n == 1 { one } else { many })
}

fn count_words(counts: &[usize], cells: bool) -> String {
    if counts.iter().sum::<usize>() == 0 {
        return "0 simplices".into();
    }
    let names = [("vertex", "vertices"), ("edge", "edges"), ("triangle", "triangles"), ("tetrahedron", "tetrahedra")];
    counts
        .iter()
        .enumerate()
        .map(|(d, &c)| match names.get(d) {
            _ if cells => plural(c, &format!("{d}-cell"), &format!("{d}-cells")),
            Some((one, many)) => plural(c, one, many),
            None => plural(c, &format!("{d}-simplex"), &format!("{d}-simplices")),
        })
        .collect::<Vec<_>>()
        .join(", ")
}

fn show(file: &ComplexFile) -> String {
    let (counts, chi, cells) = match file {
        ComplexFile::Simplicial(k) => (k.counts(), k.euler_characteristic(), false),
        ComplexFile::Cells(d) => (d.counts(), d.euler_characteristic(), true),
    };
    let poset = file.poset();
    let mut out = count_words(&counts, cells);
    if counts.iter().sum::<usize>() > 0 {
        out.push_str(&format!(", χ={chi}"));
    }
    for p in poset.labels() {
        let n = match file {
            ComplexFile::Simplicial(k) => k
                .all_simplices()
                .filter(|s| k.max_label(s).ok() == Some(p))
                .count(),
            ComplexFile::Cells(d) => d.cells().iter().filter(|c| c.flag().top() == Some(p)).count(),
        };
        let kind = if cells { ("cell", "cells") } else { ("simplex", "simplices") };
        out.push_str(&format!("\nstratum {}: {}", poset.name(p), plural(n, kind.0, kind.1)));
    }
    out
}

fn homology_lines(file: ComplexFile, coeff: Coefficients) -> CliResult<String> {
    let table = match file {
        ComplexFile::Simplicial(k) => homology(&k, coeff),
        ComplexFile::Cells(d) => homology_of(&ChainComplexZ::of_delta_complex(&d), coeff),
    };
    Ok(table.to_string())
}

fn simplex_poset(s: &Simplex) -> CliResult<Arc<Poset>> {
    if let Some(path) = &s.poset_file {
        return Ok(Arc::new(load(path)?.poset().clone()));
    }
    if let Some(chain) = &s.chain {
        let names: Vec<&str> = chain.split(',').collect();
        return Ok(Arc::new(Poset::chain(&names)?));
    }
    let labels: Vec<&str> = s.flag.split(',').collect();
    let numeric: Option<Vec<usize>> = labels.iter().map(|l| l.parse().ok()).collect();
    match numeric {
        Some(ns) => Ok(corpus::chain_poset(ns.into_iter().max().unwrap_or(0) + 1)),
        None => {
            let mut distinct: Vec<&str> = Vec::new();
            for l in labels {
                if !distinct.contains(&l) {
                    distinct.push(l);
                }
            }
            Ok(Arc::new(Poset::chain(&distinct)?))
        }
    }
}

fn point(at: &AtPoint) -> CliResult<(Arc<Poset>, SimplexPoint)> {
    let poset = simplex_poset(&at.simplex)?;
    let flag = Flag::parse(&poset, &at.simplex.flag)?;
    let x = SimplexPoint::new(flag, geometry::parse_rationals(&at.point)?)?;
    Ok((poset, x))
}

/// Output of a geometry command and whether its check held.
fn geom(g: &Geom) -> CliResult<(String, bool)> {
    if let Geom::InHood { at, p, phi } = g {
        let (poset, x) = point(at)?;
        let phi = PLFunction::parse(phi)?;
        let inside = geometry::in_phi_hood(&poset, &x, poset.label(p)?, &phi)?;
        return Ok((inside.to_string(), inside));
    }
    let text = match g {
        Geom::Stratum(at) => {
            let (poset, x) = point(at)?;
            poset.name(geometry::point_stratum(&poset, &x)).to_string()
        }
        Geom::S { at, p, mode } => {
            let (poset, x) = point(at)?;
            let mode: Restriction = mode.parse()?;
            geometry::s_coord(&poset, &x, poset.label(p)?, mode)?.to_string()
        }
        Geom::T { at, p } => {
            let (poset, x) = point(at)?;
            match geometry::t_coord(&poset, &x, poset.label(p)?)? {
                Some(t) => t.to_string(),
                None => "undefined".to_string(),
            }
        }
        Geom::Rho { at, p, time } => {
            let (poset, x) = point(at)?;
            let t = geometry::parse_rational(time)?;
            geometry::rho_homotopy(&poset, &x, poset.label(p)?, &t)?.to_string()
        }
        Geom::Aspire { at, over, time } => {
            let (poset, x) = point(at)?;
            let over = RegularFlag::parse(&poset, over)?;
            let t = SimplexPoint::new(over.as_flag().clone(), geometry::parse_rationals(time)?)?;
            geometry::aspire_eval(&poset, &x, &over, &t)?.to_string()
        }
        Geom::Reparam { at, p, phi } => {
            let (poset, x) = point(at)?;
            let phi = PLFunction::parse(phi)?;
            geometry::phi_reparam(&poset, &x, poset.label(p)?, &phi)?.to_string()
        }
        Geom::Barycenter(s) => {
            let poset = simplex_poset(s)?;
            geometry::weighted_barycenter(&Flag::parse(&poset, &s.flag)?)?.to_string()
        }
        Geom::Psi {
            simplex,
            chain_of,
            weights,
        } => {
            let poset = simplex_poset(simplex)?;
            let flag = Flag::parse(&poset, &simplex.flag)?;
            let chain = chain_of
                .split('|')
                .map(|part| {
                    part.split(',')
                        .map(|i| i.trim().parse::<usize>().map_err(|e| format!("`{i}`: {e}")))
                        .collect::<Result<Vec<_>, _>>()
                })
                .collect::<Result<Vec<_>, _>>()?;
            let weights = geometry::parse_rationals(weights)?;
            geometry::psi_eval(&flag, &chain, &weights)?.to_string()
        }
        Geom::InHood { .. } => unreachable!("handled above"),
    };
    Ok((text, true))
}

/// Runs a command; `Ok(false)` is a failed verification.
fn run(command: &Command) -> CliResult<bool> {
    match command {
        Command::Show { file } => println!("{}", show(&load(file)?)),
        Command::Sd { file, count } => match load(file)? {
            ComplexFile::Simplicial(mut k) => {
                for _ in 0..*count {
                    k = k.barycentric_subdivision().complex;
                }
                print!("{}", format::print_complex(&k));
            }
            ComplexFile::Cells(mut d) => {
                for _ in 0..*count {
                    d = d.delta_sd();
                }
                print!("{}", format::print_delta(&d));
            }
        },
        Command::Link { file, flag } | Command::Neighborhood { file, flag } => {
            let k = load_simplicial(file)?;
            let flag = RegularFlag::parse(k.poset(), flag)?;
            let sd = k.barycentric_subdivision();
            let (what, sub) = match command {
                Command::Link { .. } => ("Link", simplicial_link(&sd, &flag)?),
                _ => ("S", stan_hood_flag(&sd, &flag)?),
            };
            let comments = vec![
                format!("{what}_{} of {}", flag.display(k.poset()), file.display()),
                format!("subcomplex of sd: {} of {} simplices", sub.len(), sd.complex.num_simplices()),
            ];
            print!("{}", format::print_annotated(&sub.to_complex(&sd.complex), &comments));
        }
        Command::Holink { file, flag, coeff } => {
            let coeff: Coefficients = coeff.parse()?;
            let k = load_simplicial(file)?;
            let flag = RegularFlag::parse(k.poset(), flag)?;
            let model = holink_model(&k.barycentric_subdivision(), &flag)?;
            for line in &model.provenance {
                println!("# {line}");
            }
            println!("{}", homology(&model.complex, coeff));
        }
        Command::Homology { file, coeff } => {
            let coeff: Coefficients = coeff.parse()?;
            println!("{}", homology_lines(load(file)?, coeff)?);
        }
        Command::Corpus { name, list, cells } => {
            if *list {
                for n in corpus::NAMES {
                    println!("{n}");
                }
                return Ok(true);
            }
            let name = name.as_deref().ok_or("a corpus name or --list is required")?;
            match corpus::named(name)? {
                CorpusItem::Cells(d) if *cells => print!("{}", format::print_delta(&d)),
                item => print!("{}", format::print_complex(&item.flatten()?)),
            }
        }
        Command::VerifyA { file, flags } => {
            let k = load_simplicial(file)?;
            let flags = parse_flags(k.poset(), flags)?;
            let report = compare_links(&k, flags.as_deref())?;
            println!("{report}");
            return Ok(report.passed());
        }
        Command::VerifyB {
            x,
            b,
            sub,
            map,
            flags,
        } => {
            let x = load_simplicial(x)?;
            let b = load_simplicial(b)?;
            let a = subcomplex_by_names(&b, &load_simplicial(sub)?)?;
            let embed = format::parse_vertex_map(&read(map)?)
                .map_err(|e| format!("{}: {e}", map.display()))?;
            let flags = parse_flags(x.poset(), flags)?;
            let report = check_pushout(&x, &b, &a, &embed, flags.as_deref())?;
            println!("{report}");
            return Ok(report.passed());
        }
        Command::Geom(g) => {
            let (text, held) = geom(g)?;
            println!("{text}");
            return Ok(held);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

//! Argument parsing and command dispatch for the `platsq` binary.
//!
//! Exit codes: 0 success, 1 validation failure, 2 input error, 3 resource
//! ceiling exceeded.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use platsq::braided_surface::SlideDirection;
use platsq::coloring::{self, ColoringOptions, DEFAULT_CEILING};
use platsq::symmetric_quandle::{self, QuandleTables};
use platsq::{plat_lower_bound, BraidSystem, Error, FiniteSymQuandle, SymQuandlePresentation};

#[derive(Parser)]
#[command(
    name = "platsq",
    version,
    about = "Symmetric quandle presentations, colorings, and plat-index bounds \
             for surface-links given by braid systems"
)]
struct Cli {
    /// Emit machine-readable JSON instead of text
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a quandle file against the quandle and good-involution axioms
    Validate {
        /// Quandle file: { "size": n, "op": [[..]], "rho": [..] }, 0-based
        quandle: PathBuf,
    },
    /// Print the plat-form symmetric quandle presentation of a braid system
    Present {
        /// Braid system file (alternative to --family)
        system: Option<PathBuf>,
        /// Generate the twisted family system b(M,P) with G extra handles
        #[arg(long, num_args = 3, value_names = ["M", "P", "G"])]
        family: Option<Vec<usize>>,
        /// Emit the associated group presentation instead
        #[arg(long)]
        group: bool,
    },
    /// Count colorings by a finite symmetric quandle and print the plat bound
    Color {
        /// Braid system file and/or quandle file (system first)
        #[arg(value_name = "FILE")]
        inputs: Vec<PathBuf>,
        /// Generate the twisted family system b(M,P) with G extra handles
        #[arg(long, num_args = 3, value_names = ["M", "P", "G"])]
        family: Option<Vec<usize>>,
        /// Color by the dihedral quandle R_Q with the identity involution
        #[arg(long, value_name = "Q")]
        dihedral: Option<usize>,
        /// Refuse searches above this many candidate assignments
        #[arg(long, value_name = "N")]
        ceiling: Option<u64>,
    },
    /// Report degree, boundary triviality, Euler characteristic, components
    Invariants {
        /// Braid system file (alternative to --family)
        system: Option<PathBuf>,
        /// Generate the twisted family system b(M,P) with G extra handles
        #[arg(long, num_args = 3, value_names = ["M", "P", "G"])]
        family: Option<Vec<usize>>,
    },
    /// Tabulate family coloring counts against the expected dihedral values
    Table {
        /// Range of m, e.g. 2:3 (or a single value)
        #[arg(long, value_name = "LO:HI")]
        m: String,
        /// Comma-separated twist parameters, e.g. 3,5,7
        #[arg(long, value_name = "LIST")]
        p: String,
        /// Comma-separated dihedral orders, e.g. 3,5,7
        #[arg(long, value_name = "LIST")]
        q: String,
        /// Refuse searches above this many candidate assignments
        #[arg(long, value_name = "N")]
        ceiling: Option<u64>,
    },
    /// Apply slide moves to a braid system and re-emit it with a check
    Slide {
        /// Braid system file
        system: PathBuf,
        /// Comma-separated moves like 1f,2b (position then f/b); empty = none
        #[arg(long, value_name = "MOVES", default_value = "")]
        moves: String,
        /// Write the transformed system here instead of stdout
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        /// Dihedral order used for the coloring-invariance check
        #[arg(long, value_name = "Q", default_value_t = 3)]
        dihedral: usize,
        /// Refuse searches above this many candidate assignments
        #[arg(long, value_name = "N")]
        ceiling: Option<u64>,
    },
}

/// A command failure carrying its exit code.
enum Failure {
    /// Exit 1: the input was well-formed but failed validation. The message
    /// is empty when the command already printed its own report.
    Validation(String),
    /// Exit 2: unreadable, malformed, or inconsistent input.
    Input(String),
    /// Exit 3: the requested search exceeds the resource ceiling.
    Ceiling(String),
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        match err {
            Error::CeilingExceeded { .. } => Failure::Ceiling(err.to_string()),
            Error::InvalidQuandle(_) => Failure::Validation(err.to_string()),
            _ => Failure::Input(err.to_string()),
        }
    }
}

pub fn run() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Validate { quandle } => cmd_validate(quandle, cli.json),
        Command::Present {
            system,
            family,
            group,
        } => cmd_present(system.as_deref(), family.as_deref(), *group, cli.json),
        Command::Color {
            inputs,
            family,
            dihedral,
            ceiling,
        } => cmd_color(inputs, family.as_deref(), *dihedral, *ceiling, cli.json),
        Command::Invariants { system, family } => {
            cmd_invariants(system.as_deref(), family.as_deref(), cli.json)
        }
        Command::Table { m, p, q, ceiling } => cmd_table(m, p, q, *ceiling, cli.json),
        Command::Slide {
            system,
            moves,
            out,
            dihedral,
            ceiling,
        } => cmd_slide(system, moves, out.as_deref(), *dihedral, *ceiling, cli.json),
    };
    match result {
        Ok(()) => ExitCode::from(0),
        Err(Failure::Validation(msg)) => {
            if !msg.is_empty() {
                eprintln!("error: {msg}");
            }
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Ceiling(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_system(
    path: Option<&Path>,
    family: Option<&[usize]>,
) -> Result<(BraidSystem, String), Failure> {
    match (path, family) {
        (Some(_), Some(_)) => Err(Failure::Input(
            "give either a system file or --family, not both".to_string(),
        )),
        (Some(path), None) => {
            let system = BraidSystem::from_json(&read_file(path)?)?;
            Ok((system, path.display().to_string()))
        }
        (None, Some(params)) => {
            let (m, p, g) = (params[0], params[1], params[2]);
            let system = BraidSystem::family_bmpg(m, p, g)?;
            Ok((system, format!("b({m},{p},{g})")))
        }
        (None, None) => Err(Failure::Input(
            "no braid system: give a system file or --family M P G".to_string(),
        )),
    }
}

fn load_quandle(
    path: Option<&Path>,
    dihedral: Option<usize>,
) -> Result<(FiniteSymQuandle, String), Failure> {
    match (path, dihedral) {
        (Some(_), Some(_)) => Err(Failure::Input(
            "give either a quandle file or --dihedral, not both".to_string(),
        )),
        (Some(path), None) => {
            let quandle = FiniteSymQuandle::from_json(&read_file(path)?)?;
            Ok((quandle, path.display().to_string()))
        }
        (None, Some(q)) => Ok((FiniteSymQuandle::dihedral(q)?, format!("R_{q}"))),
        (None, None) => Err(Failure::Input(
            "no quandle: give a quandle file or --dihedral Q".to_string(),
        )),
    }
}

const AXIOMS: [&str; 6] = ["Q1", "Q2", "Q3", "involution", "SQ1", "SQ2"];

fn cmd_validate(path: &Path, as_json: bool) -> Result<(), Failure> {
    let text = read_file(path)?;
    let tables: QuandleTables =
        serde_json::from_str(&text).map_err(|e| Failure::Input(e.to_string()))?;
    if tables.size != tables.op.len() {
        return Err(Failure::Input(format!(
            "declared size {} but op has {} rows",
            tables.size,
            tables.op.len()
        )));
    }
    let report = symmetric_quandle::validate(&tables.op, &tables.rho).map_err(Failure::from)?;

    if as_json {
        let axioms: serde_json::Map<String, serde_json::Value> = AXIOMS
            .iter()
            .map(|&axiom| {
                let failures: Vec<String> = report
                    .violations()
                    .iter()
                    .filter(|v| v.axiom() == axiom)
                    .map(|v| v.to_string())
                    .collect();
                (
                    axiom.to_string(),
                    json!({ "pass": failures.is_empty(), "violations": failures }),
                )
            })
            .collect();
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "file": path.display().to_string(),
                "valid": report.is_clean(),
                "axioms": axioms,
            }))
            .expect("report serializes")
        );
    } else {
        for axiom in AXIOMS {
            let count = report
                .violations()
                .iter()
                .filter(|v| v.axiom() == axiom)
                .count();
            match report.first_for(axiom) {
                None => println!("{axiom}: pass"),
                Some(witness) if count == 1 => println!("{axiom}: FAIL — {witness}"),
                Some(witness) => {
                    println!("{axiom}: FAIL — {witness} (+{} more)", count - 1)
                }
            }
        }
    }
    if report.is_clean() {
        Ok(())
    } else {
        Err(Failure::Validation(String::new()))
    }
}

fn cmd_present(
    path: Option<&Path>,
    family: Option<&[usize]>,
    group: bool,
    as_json: bool,
) -> Result<(), Failure> {
    let (system, name) = load_system(path, family)?;
    let presentation = SymQuandlePresentation::plat(&system)?;
    if as_json {
        let relators: Vec<serde_json::Value> = presentation
            .relators()
            .iter()
            .map(|(l, r)| json!({ "lhs": l.to_string(), "rhs": r.to_string() }))
            .collect();
        let mut obj = json!({
            "system": name,
            "generators": presentation.num_generators(),
            "relators": relators,
        });
        if group {
            obj["group_presentation"] = json!(presentation.to_group_presentation());
        }
        println!(
            "{}",
            serde_json::to_string_pretty(&obj).expect("presentation serializes")
        );
    } else if group {
        println!("{}", presentation.to_group_presentation());
    } else {
        println!("{presentation}");
    }
    Ok(())
}

fn cmd_color(
    inputs: &[PathBuf],
    family: Option<&[usize]>,
    dihedral: Option<usize>,
    ceiling: Option<u64>,
    as_json: bool,
) -> Result<(), Failure> {
    // positional files fill the system slot first (unless --family), then
    // the quandle slot (unless --dihedral)
    let mut positional = inputs.iter();
    let system_path = if family.is_none() {
        positional.next()
    } else {
        None
    };
    let quandle_path = if dihedral.is_none() {
        positional.next()
    } else {
        None
    };
    if positional.next().is_some() {
        return Err(Failure::Input("too many input files".to_string()));
    }

    let (system, system_name) = load_system(system_path.map(|p| p.as_path()), family)?;
    let (quandle, quandle_name) = load_quandle(quandle_path.map(|p| p.as_path()), dihedral)?;

    let options = ColoringOptions {
        ceiling: ceiling.unwrap_or(DEFAULT_CEILING),
        eliminate: true,
    };
    let count = coloring::coloring_count_for_system_with(&system, &quandle, &options)?;
    let order = quandle.size() as u64;
    let bound = if count >= 1 && order >= 2 {
        Some(plat_lower_bound(count, order)?)
    } else {
        None
    };

    if as_json {
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "system": system_name,
                "quandle": quandle_name,
                "quandle_order": order,
                "colorings": count,
                "plat_lower_bound": bound,
            }))
            .expect("count serializes")
        );
    } else {
        println!("system: {system_name}");
        println!("quandle: {quandle_name} (order {order})");
        println!("colorings: {count}");
        match bound {
            Some(bound) => println!("plat index lower bound: {bound}"),
            None => println!("plat index lower bound: n/a"),
        }
    }
    Ok(())
}

fn cmd_invariants(
    path: Option<&Path>,
    family: Option<&[usize]>,
    as_json: bool,
) -> Result<(), Failure> {
    let (system, name) = load_system(path, family)?;
    let chi = system.euler_characteristic()?;
    let genuine = system.is_genuine();
    let adequacy = system.adequacy_necessary()?;
    let components = if genuine {
        Some(system.component_count()?)
    } else {
        None
    };
    // genus of a connected closure, orientability not decided from the data
    let genus = match components {
        Some(1) if (2 - chi) % 2 == 0 && chi <= 2 => Some((2 - chi) / 2),
        _ => None,
    };

    if as_json {
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "system": name,
                "degree": system.degree(),
                "entries": system.entries().len(),
                "genuine": genuine,
                "adequacy_necessary_condition": adequacy,
                "euler_characteristic": chi,
                "components": components,
                "genus_assuming_orientable": genus,
            }))
            .expect("invariants serialize")
        );
    } else {
        println!("system: {name}");
        println!("degree: {}", system.degree());
        println!("entries: {}", system.entries().len());
        println!("boundary braid trivial (genuine): {genuine}");
        println!("adequacy necessary condition: {adequacy}");
        println!("euler characteristic: {chi}");
        match components {
            Some(c) => println!("components: {c}"),
            None => println!("components: n/a (non-genuine)"),
        }
        match genus {
            Some(g) => println!("genus (assuming orientable): {g}"),
            None => println!("genus: n/a"),
        }
    }
    Ok(())
}

fn parse_range(text: &str) -> Result<Vec<usize>, Failure> {
    let parse = |tok: &str| {
        tok.trim()
            .parse::<usize>()
            .map_err(|_| Failure::Input(format!("bad number {tok:?} in range")))
    };
    match text.split_once(':') {
        Some((lo, hi)) => {
            let (lo, hi) = (parse(lo)?, parse(hi)?);
            if lo > hi {
                return Err(Failure::Input(format!("empty range {text:?}")));
            }
            Ok((lo..=hi).collect())
        }
        None => Ok(vec![parse(text)?]),
    }
}

fn parse_list(text: &str) -> Result<Vec<usize>, Failure> {
    text.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<usize>()
                .map_err(|_| Failure::Input(format!("bad number {tok:?} in list")))
        })
        .collect()
}

fn cmd_table(
    m_spec: &str,
    p_spec: &str,
    q_spec: &str,
    ceiling: Option<u64>,
    as_json: bool,
) -> Result<(), Failure> {
    let ms = parse_range(m_spec)?;
    let ps = parse_list(p_spec)?;
    let qs = parse_list(q_spec)?;
    let options = ColoringOptions {
        ceiling: ceiling.unwrap_or(DEFAULT_CEILING),
        eliminate: true,
    };

    let mut tables = Vec::new();
    for &m in &ms {
        let mut rows = Vec::new();
        for &p in &ps {
            let system = BraidSystem::family_bmp(m, p)?;
            let mut counts = Vec::new();
            let mut expected = Vec::new();
            for &q in &qs {
                let quandle = FiniteSymQuandle::dihedral(q)?;
                counts.push(coloring::coloring_count_for_system_with(
                    &system, &quandle, &options,
                )?);
                expected.push(if p == q {
                    (q as u64).pow(m as u32)
                } else {
                    q as u64
                });
            }
            rows.push((p, counts, expected));
        }
        tables.push((m, rows));
    }

    if as_json {
        let json_tables: Vec<serde_json::Value> = tables
            .iter()
            .map(|(m, rows)| {
                json!({
                    "m": m,
                    "q": qs,
                    "rows": rows.iter().map(|(p, counts, expected)| {
                        json!({
                            "p": p,
                            "counts": counts,
                            "expected": expected,
                            "match": counts == expected,
                        })
                    }).collect::<Vec<_>>(),
                })
            })
            .collect();
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({ "tables": json_tables }))
                .expect("table serializes")
        );
    } else {
        for (m, rows) in &tables {
            println!("m = {m}");
            print!("{:>6} |", "p\\q");
            for q in &qs {
                print!(" {q:>6}");
            }
            println!();
            for (p, counts, expected) in rows {
                print!("{p:>6} |");
                for count in counts {
                    print!(" {count:>6}");
                }
                if counts == expected {
                    println!("   ok");
                } else {
                    println!("   MISMATCH (expected {expected:?})");
                }
            }
        }
    }
    Ok(())
}

fn parse_moves(text: &str) -> Result<Vec<(usize, SlideDirection)>, Failure> {
    let mut moves = Vec::new();
    for token in text.split([',', ' ']).filter(|t| !t.is_empty()) {
        let token = token.trim().to_ascii_lowercase();
        let (digits, dir) = token.split_at(token.len() - 1);
        let direction = match dir {
            "f" => SlideDirection::Forward,
            "b" => SlideDirection::Backward,
            _ => {
                return Err(Failure::Input(format!(
                    "bad move {token:?}: expected e.g. 1f or 2b"
                )))
            }
        };
        let j = digits
            .parse::<usize>()
            .map_err(|_| Failure::Input(format!("bad move position in {token:?}")))?;
        moves.push((j, direction));
    }
    Ok(moves)
}

fn cmd_slide(
    path: &Path,
    moves_spec: &str,
    out: Option<&Path>,
    dihedral: usize,
    ceiling: Option<u64>,
    as_json: bool,
) -> Result<(), Failure> {
    let system = BraidSystem::from_json(&read_file(path)?)?;
    let moves = parse_moves(moves_spec)?;

    let mut slid = system.clone();
    for &(j, direction) in &moves {
        slid = slid.slide(j, direction)?;
    }

    let options = ColoringOptions {
        ceiling: ceiling.unwrap_or(DEFAULT_CEILING),
        eliminate: true,
    };
    let quandle = FiniteSymQuandle::dihedral(dihedral)?;
    let chi_before = system.euler_characteristic()?;
    let chi_after = slid.euler_characteristic()?;
    let count_before = coloring::coloring_count_for_system_with(&system, &quandle, &options)?;
    let count_after = coloring::coloring_count_for_system_with(&slid, &quandle, &options)?;
    let boundary_preserved = system
        .boundary_braid()
        .equivalent(&slid.boundary_braid())
        .expect("same degree");

    let system_json = slid.to_json();
    if let Some(out) = out {
        fs::write(out, &system_json)
            .map_err(|e| Failure::Input(format!("{}: {e}", out.display())))?;
    }

    if as_json {
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "moves": moves.len(),
                "system": serde_json::from_str::<serde_json::Value>(&system_json)
                    .expect("round trip"),
                "check": {
                    "boundary_braid_preserved": boundary_preserved,
                    "euler_characteristic": { "before": chi_before, "after": chi_after },
                    "colorings": {
                        "quandle": format!("R_{dihedral}"),
                        "before": count_before,
                        "after": count_after,
                    },
                },
            }))
            .expect("slide output serializes")
        );
    } else {
        if out.is_none() {
            println!("{system_json}");
        }
        eprintln!("applied {} move(s)", moves.len());
        eprintln!("boundary braid preserved: {boundary_preserved}");
        eprintln!("euler characteristic: {chi_before} -> {chi_after}");
        eprintln!("colorings by R_{dihedral}: {count_before} -> {count_after}");
    }
    Ok(())
}

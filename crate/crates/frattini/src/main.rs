//! Command-line front end. All real work lives in the library.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use frattini::{
    build_certificate, check_certificate, converse_verdict, default_catalog, frattini_condition_scoped,
    load_group_file, make_alternating, make_cyclic, make_dihedral, make_quaternion,
    make_symmetric, normalizer, sweep, sylow_classes, direct_product, FrattiniReport, Group,
    NormalityCertificate, Permutation, Subgroup, SylowScope, Verdict, DEFAULT_MAX_ORDER,
};

#[derive(Parser)]
#[command(
    name = "frattini",
    about = "Finite permutation groups: normality via Sylow-normalizer coverage, with checkable certificates",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the coverage condition and normality for K in G
    Verify {
        /// Builtin name (S4, A4, C12, D6, Q8, products like A4xC2) or a group file
        #[arg(long)]
        group: String,
        /// Generators of K in cycle notation, separated by ';'
        #[arg(long)]
        subgroup: String,
        /// Check one Sylow subgroup per prime instead of every conjugate
        #[arg(long)]
        representatives: bool,
    },
    /// Build a normality certificate for x^g ∈ K
    Certify {
        #[arg(long)]
        group: String,
        #[arg(long)]
        subgroup: String,
        /// The element x of K, in cycle notation
        #[arg(long)]
        x: String,
        /// The conjugating element g of G, in cycle notation
        #[arg(long)]
        g: String,
        /// Write the certificate here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-verify a certificate file against G and K
    CheckCert {
        path: PathBuf,
        #[arg(long)]
        group: String,
        #[arg(long)]
        subgroup: String,
    },
    /// Print the Sylow classes of K
    Sylow {
        #[arg(long)]
        group: String,
        #[arg(long)]
        subgroup: String,
        /// Restrict to one prime
        #[arg(long)]
        prime: Option<usize>,
    },
    /// Print the normalizer of K in G
    Normalizer {
        #[arg(long)]
        group: String,
        #[arg(long)]
        subgroup: String,
    },
    /// Run the exhaustive catalog sweep
    Sweep {
        #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
        max_order: usize,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
}

/// Exit codes: 0 all consistent, 1 usage or parse error, 2 counterexample
/// or internal verification failure.
fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // clap renders --help/--version as "errors"; keep those at 0.
            if err.use_stderr() {
                eprint!("{err}");
                return ExitCode::from(1);
            }
            print!("{err}");
            return ExitCode::SUCCESS;
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Verify {
            group,
            subgroup,
            representatives,
        } => {
            let g = parse_group_spec(&group)?;
            let k = parse_subgroup(&g, &subgroup)?;
            let scope = if representatives {
                SylowScope::Representatives
            } else {
                SylowScope::AllConjugates
            };
            let report =
                frattini_condition_scoped(&g, &k, scope).map_err(|e| e.to_string())?;
            let verdict = converse_verdict(&g, &k).map_err(|e| e.to_string())?;
            print_report(&group, &g, &k, &report);
            print_verdict(&verdict);
            if !verdict.consistent {
                return Ok(ExitCode::from(2));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Certify {
            group,
            subgroup,
            x,
            g,
            out,
        } => {
            let ambient = parse_group_spec(&group)?;
            let k = parse_subgroup(&ambient, &subgroup)?;
            let x = parse_perm(&x, ambient.degree())?;
            let conjugator = parse_perm(&g, ambient.degree())?;
            let cert =
                build_certificate(&ambient, &k, &x, &conjugator).map_err(|e| e.to_string())?;
            match out {
                Some(path) => {
                    std::fs::write(&path, cert.to_text())
                        .map_err(|e| format!("could not write {}: {e}", path.display()))?;
                    println!(
                        "certificate for ({x})^({conjugator}) written to {}",
                        path.display()
                    );
                }
                None => print!("{}", cert.to_text()),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::CheckCert {
            path,
            group,
            subgroup,
        } => {
            let g = parse_group_spec(&group)?;
            let k = parse_subgroup(&g, &subgroup)?;
            let text = std::fs::read_to_string(&path)
                .map_err(|e| format!("could not read {}: {e}", path.display()))?;
            let cert = NormalityCertificate::from_text(&text).map_err(|e| e.to_string())?;
            match check_certificate(&cert, &g, &k) {
                Ok(()) => {
                    println!(
                        "ACCEPTED: certificate shows ({})^({}) = {} ∈ K",
                        cert.x, cert.g, cert.result
                    );
                    Ok(ExitCode::SUCCESS)
                }
                Err(failure) => {
                    println!("REJECTED: {failure}");
                    Ok(ExitCode::from(2))
                }
            }
        }
        Command::Sylow {
            group,
            subgroup,
            prime,
        } => {
            let g = parse_group_spec(&group)?;
            let k = parse_subgroup(&g, &subgroup)?;
            let classes = sylow_classes(&k).map_err(|e| e.to_string())?;
            if let Some(p) = prime {
                if !classes.iter().any(|c| c.prime == p) {
                    return Err(format!("no Sylow {p}-subgroups: {p} does not divide {}", k.order()));
                }
            }
            println!("subgroup of order {} in a group of order {}", k.order(), g.order());
            for class in classes {
                if prime.is_some_and(|p| p != class.prime) {
                    continue;
                }
                println!(
                    "p = {}: order {}, count {}",
                    class.prime,
                    class.representative.order(),
                    class.count()
                );
                for (i, sub) in class.conjugates.iter().enumerate() {
                    println!("  sylow[{i}]: <{}>", perm_list(sub.generators()));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Normalizer { group, subgroup } => {
            let g = parse_group_spec(&group)?;
            let k = parse_subgroup(&g, &subgroup)?;
            let n = normalizer(&g, &k).map_err(|e| e.to_string())?;
            println!(
                "N_G(K): order {} of |G| = {}, generators <{}>",
                n.order(),
                g.order(),
                perm_list(n.generators())
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Sweep { max_order, threads } => {
            if threads == 0 {
                return Err("--threads must be at least 1".into());
            }
            let selection: Vec<(String, Group)> = default_catalog()
                .into_iter()
                .filter(|(_, g)| g.order() <= max_order)
                .collect();
            let report = sweep(&selection, max_order, threads).map_err(|e| e.to_string())?;
            print!("{}", report.render_table());
            println!("runtime: {:.3}s", report.runtime_seconds);
            if report.totals.inconsistencies > 0 {
                return Ok(ExitCode::from(2));
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// Builtin names (S4, A4, C12, D6, Q8), `x`-joined direct products of
/// builtins (A4xC2), or a path to a group file.
fn parse_group_spec(spec: &str) -> Result<Group, String> {
    if let Some(group) = parse_builtin(spec)? {
        return Ok(group);
    }
    load_group_file(std::path::Path::new(spec)).map_err(|e| e.to_string())
}

fn parse_builtin(spec: &str) -> Result<Option<Group>, String> {
    if spec.contains('x') {
        let mut product: Option<Group> = None;
        for part in spec.split('x') {
            let Some(factor) = parse_builtin(part)? else {
                return Ok(None);
            };
            product = Some(match product {
                None => factor,
                Some(acc) => direct_product(&acc, &factor).map_err(|e| e.to_string())?,
            });
        }
        return Ok(product);
    }
    if spec == "Q8" {
        return Ok(Some(make_quaternion()));
    }
    let (family, rest) = match spec.split_at_checked(1) {
        Some(parts) => parts,
        None => return Ok(None),
    };
    let Ok(n) = rest.parse::<usize>() else {
        return Ok(None);
    };
    let built = match family {
        "S" => make_symmetric(n),
        "A" => make_alternating(n),
        "C" => make_cyclic(n),
        "D" => make_dihedral(n),
        _ => return Ok(None),
    };
    built.map(Some).map_err(|e| e.to_string())
}

fn parse_subgroup(g: &Group, gens: &str) -> Result<Subgroup, String> {
    let mut parsed = Vec::new();
    for chunk in gens.split(';') {
        let chunk = chunk.trim();
        if chunk.is_empty() {
            continue;
        }
        parsed.push(parse_perm(chunk, g.degree())?);
    }
    Subgroup::generated(g, &parsed).map_err(|e| e.to_string())
}

fn parse_perm(text: &str, degree: usize) -> Result<Permutation, String> {
    Permutation::parse_cycles(text, degree).map_err(|e| format!("{text:?}: {e}"))
}

fn perm_list(perms: &[Permutation]) -> String {
    if perms.is_empty() {
        return "()".to_string();
    }
    perms
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

fn print_report(name: &str, g: &Group, k: &Subgroup, report: &FrattiniReport) {
    println!(
        "group {name}: degree {}, order {}; subgroup K: order {}, generators <{}>",
        g.degree(),
        g.order(),
        k.order(),
        perm_list(k.generators())
    );
    let rendered: Vec<String> = report
        .entries
        .iter()
        .map(|e| format!("<{}>", perm_list(e.sylow.generators())))
        .collect();
    let width = rendered
        .iter()
        .map(|s| s.chars().count())
        .chain([14])
        .max()
        .expect("nonempty");
    println!(
        "{:>2}  {:<width$} {:>8} {:>10}  covers G",
        "p", "sylow subgroup", "|N_G(P)|", "|K.N_G(P)|"
    );
    for (entry, sylow) in report.entries.iter().zip(&rendered) {
        println!(
            "{:>2}  {:<width$} {:>8} {:>10}  {}",
            entry.prime,
            sylow,
            entry.normalizer_order,
            entry.product_size,
            if entry.holds { "yes" } else { "no" }
        );
    }
    if report.entries.is_empty() {
        println!("  (K is trivial: no Sylow subgroups, condition vacuously true)");
    }
    println!("condition_holds: {}", report.condition_holds);
}

fn print_verdict(verdict: &Verdict) {
    println!("is_normal: {}", verdict.normal);
    println!("consistent: {}", verdict.consistent);
    if !verdict.consistent {
        println!("COUNTEREXAMPLE: condition and normality disagree");
    }
}

//! `trapeze` — classify, profile and factorize finite binary words, and run
//! exhaustive census and verification sweeps.
//!
//! Exit codes: 0 on success / all checks passing, 1 when the verification
//! harness finds a violation, 2 on input errors.

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use trapeze::lab::{
    census, census_csv, explore_csv, explore_open_sturmian, verify_statements, Statement,
};
use trapeze::{
    classify, complexity_profile, dalessandro_factorize, parameters, Classification, Word,
};

#[derive(Parser)]
#[command(
    name = "trapeze",
    version,
    about = "Combinatorics on finite binary words"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the full classification record of a word
    Classify {
        word: String,
        /// Emit JSON instead of the human-readable table
        #[arg(long)]
        json: bool,
    },
    /// Print the factor complexity profile and parameters of a word
    Profile {
        word: String,
        /// Emit JSON instead of the human-readable summary
        #[arg(long, conflicts_with = "ascii_graph")]
        json: bool,
        /// Draw the complexity function as a column chart
        #[arg(long)]
        ascii_graph: bool,
    },
    /// Factorize a non-Sturmian trapezoidal word as p·q over its root powers
    Factorize {
        word: String,
        /// Emit JSON instead of the human-readable breakdown
        #[arg(long)]
        json: bool,
    },
    /// Count word classes for every length up to a bound
    Census {
        #[arg(long)]
        max: usize,
        /// Emit CSV (column order matches the census row fields)
        #[arg(long, conflicts_with = "json")]
        csv: bool,
        /// Emit JSON
        #[arg(long)]
        json: bool,
        /// Partition each length across this many worker threads
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Check every structural statement over all binary words up to a bound
    Verify {
        #[arg(long)]
        max: usize,
        /// Comma-separated statement ids to check (default: all)
        #[arg(long, value_delimiter = ',')]
        only: Option<Vec<String>>,
        /// Keep sweeping after a violation instead of halting
        #[arg(long)]
        accumulate: bool,
        /// Partition each length across this many worker threads
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Dump every open Sturmian word with its parameter profile
    ExploreOpenSturmian {
        #[arg(long)]
        max: usize,
        /// Emit CSV
        #[arg(long)]
        csv: bool,
    },
}

fn main() -> ExitCode {
    // die quietly when the output pipe closes (e.g. `trapeze census | head`)
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> trapeze::Result<ExitCode> {
    match command {
        Command::Classify { word, json } => {
            let word = Word::parse(&word)?;
            let c = classify(&word)?;
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&c).expect("serializable")
                );
            } else {
                print_classification(&word, &c);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Profile {
            word,
            json,
            ascii_graph,
        } => {
            let word = Word::parse(&word)?;
            let profile = complexity_profile(&word);
            if ascii_graph {
                print!("{}", profile.ascii_graph());
            } else if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&profile_json(&word)).expect("serializable")
                );
            } else {
                print_profile(&word);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Factorize { word, json } => {
            let word = Word::parse(&word)?;
            let d = dalessandro_factorize(&word)?;
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&d).expect("serializable")
                );
            } else {
                println!("w   = {word}");
                println!("p|q = {}|{}", d.p, d.q);
                println!(
                    "pathological pair: f = {}, g = {} (letters {} / {}), u = {}",
                    d.pair.f,
                    d.pair.g,
                    d.pair.a,
                    d.pair.b,
                    display_word(&d.pair.u)
                );
                println!(
                    "roots: reversed root of f = {}, root of g = {}",
                    d.z_f_rev, d.z_g
                );
                println!("|p| = R = {}, |q| = K = {}", d.p.len(), d.q.len());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Census {
            max,
            csv,
            json,
            workers,
        } => {
            let rows = census(max, workers)?;
            if csv {
                print!("{}", census_csv(&rows));
            } else if json {
                let value = json!({
                    "note": trapeze::lab::CENSUS_NOTE,
                    "rows": rows,
                });
                println!(
                    "{}",
                    serde_json::to_string_pretty(&value).expect("serializable")
                );
            } else {
                print_census_table(&rows);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            max,
            only,
            accumulate,
            workers,
        } => {
            let filter: Option<Vec<Statement>> = match only {
                Some(ids) => Some(
                    ids.iter()
                        .map(|id| id.parse::<Statement>())
                        .collect::<trapeze::Result<Vec<_>>>()?,
                ),
                None => None,
            };
            let report = verify_statements(max, filter.as_deref(), accumulate, workers)?;
            print!("{}", report.render_text());
            Ok(if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::ExploreOpenSturmian { max, csv } => {
            let rows = explore_open_sturmian(max)?;
            if csv {
                print!("{}", explore_csv(&rows));
            } else {
                println!(
                    "{:<18} {:>3} {:>3} {:>3} {:>3} {:>4}  {:<12} longest right special",
                    "word", "H", "K", "L", "R", "pi", "lrp"
                );
                for r in &rows {
                    println!(
                        "{:<18} {:>3} {:>3} {:>3} {:>3} {:>4}  {:<12} {}",
                        r.word.to_string(),
                        r.h,
                        r.k,
                        r.l,
                        r.r,
                        r.period,
                        display_word(&r.lrp),
                        display_word(&r.longest_right_special),
                    );
                }
                println!("{} open Sturmian words up to length {max}", rows.len());
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// ε for the empty word, the letters otherwise.
fn display_word(w: &Word) -> String {
    if w.is_empty() {
        "ε".to_string()
    } else {
        w.to_string()
    }
}

fn yes_no(v: bool) -> &'static str {
    if v {
        "yes"
    } else {
        "no"
    }
}

fn print_classification(word: &Word, c: &Classification) {
    println!("word         {}", display_word(word));
    println!("binary       {}", yes_no(c.is_binary));
    println!("balanced     {}", yes_no(c.balanced));
    println!("sturmian     {}", yes_no(c.sturmian));
    println!("trapezoidal  {}", yes_no(c.trapezoidal));
    println!("rich         {}", yes_no(c.rich));
    println!("closedness   {:?}", c.closedness);
    println!("primitive    {}", yes_no(c.primitive));
    println!("palindrome   {}", yes_no(c.palindrome));
    println!("central      {}", yes_no(c.central));
    println!("standard     {}", yes_no(c.standard));
    match &c.parameters {
        Some(p) => println!(
            "parameters   H={} K={} L={} R={} m={} M={} pi={}",
            p.h, p.k, p.l, p.r, p.m_min, p.m_max, p.period
        ),
        None => println!("parameters   undefined (fewer than two letters)"),
    }
}

fn print_profile(word: &Word) {
    let profile = complexity_profile(word);
    println!("word    {}", display_word(word));
    let counts: Vec<String> = profile.counts().iter().map(|c| c.to_string()).collect();
    println!("f(n)    {}", counts.join(" "));
    match parameters(word) {
        Ok(p) => println!(
            "params  H={} K={} L={} R={} m={} M={} pi={}",
            p.h, p.k, p.l, p.r, p.m_min, p.m_max, p.period
        ),
        Err(_) => println!("params  undefined (fewer than two letters)"),
    }
    for n in 0..=word.len() {
        let left = profile.left_specials(n);
        let right = profile.right_specials(n);
        if !left.is_empty() || !right.is_empty() {
            let fmt = |set: &std::collections::BTreeSet<Word>| {
                set.iter().map(display_word).collect::<Vec<_>>().join(" ")
            };
            println!(
                "n={n:<3} left special: {:<20} right special: {}",
                fmt(left),
                fmt(right)
            );
        }
    }
}

/// JSON shape: word, counts, flattened parameters (null when undefined) and
/// per-length special factor lists.
fn profile_json(word: &Word) -> serde_json::Value {
    let profile = complexity_profile(word);
    let specials = |side: fn(&trapeze::ComplexityProfile, usize) -> Vec<String>| {
        (0..=word.len())
            .map(|n| side(&profile, n))
            .collect::<Vec<_>>()
    };
    let left = specials(|p, n| p.left_specials(n).iter().map(|w| w.to_string()).collect());
    let right = specials(|p, n| p.right_specials(n).iter().map(|w| w.to_string()).collect());
    let params = parameters(word).ok();
    json!({
        "word": word.to_string(),
        "counts": profile.counts(),
        "H": params.as_ref().map(|p| p.h),
        "K": params.as_ref().map(|p| p.k),
        "L": params.as_ref().map(|p| p.l),
        "R": params.as_ref().map(|p| p.r),
        "m": params.as_ref().map(|p| p.m_min),
        "M": params.as_ref().map(|p| p.m_max),
        "pi": params.as_ref().map(|p| p.period),
        "specials": { "left": left, "right": right },
    })
}

fn print_census_table(rows: &[trapeze::lab::CensusRow]) {
    println!("# {}", trapeze::lab::CENSUS_NOTE);
    println!(
        "{:>3} {:>10} {:>6} {:>8} {:>9} {:>6} {:>8} {:>9} {:>10} {:>9}",
        "len", "total", "trap", "sturm", "trap¬st", "open", "closed", "open-st", "rich", "trap-pal"
    );
    for r in rows {
        println!(
            "{:>3} {:>10} {:>6} {:>8} {:>9} {:>6} {:>8} {:>9} {:>10} {:>9}",
            r.length,
            r.total_binary,
            r.trapezoidal,
            r.sturmian,
            r.trapezoidal_non_sturmian,
            r.open_trapezoidal,
            r.closed_trapezoidal,
            r.open_sturmian,
            r.rich,
            r.trapezoidal_palindromes,
        );
    }
}

//! Batch command-line front end.
//!
//! ```text
//! surfd10 construct <A..H | --all> [options]
//! surfd10 certify <file.ideal> --family <A..H> [options]
//! surfd10 numerology [--pi N [--chi M] | --table]
//! surfd10 link <file.ideal> <m> <n> [options]
//! ```
//!
//! Options: --prime P, --seed S, --retries N, --smoothness {exact,fast},
//! --range a..b, --out DIR. All randomness flows from --seed.
//!
//! Exit codes: 0 success, 1 certification failed, 2 construction budget
//! exhausted, 3 numerology input outside the tables, 4 no regular sequence,
//! 64 usage error, 65 unreadable/unparsable input.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use surfd10::constructions::{certify, construct_family, link, RunConfig};
use surfd10::groebner::{ideal_from_string, ideal_to_string, Ideal};
use surfd10::idealops::SmoothnessMode;
use surfd10::modres::hilbert::hilbert_data;
use surfd10::numerology::{
    classify_d10, double_point_k2, family_descriptor, hk_from_genus, lebarz_counts, Classification,
    FamilyId,
};
use surfd10::report::{betti_to_text, report_to_json, report_to_text};
use surfd10::{Fp, Rng};

const USAGE: &str = "usage:
  surfd10 construct <A..H | --all> [--prime P] [--seed S] [--retries N]
                    [--smoothness exact|fast] [--range a..b] [--out DIR]
  surfd10 certify <file.ideal> --family <A..H> [--seed S] [--smoothness exact|fast] [--out DIR]
  surfd10 numerology [--pi N [--chi M] | --table]
  surfd10 link <file.ideal> <m> <n> [--seed S] [--out DIR]";

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    match run(args) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {}", msg);
            eprintln!("{}", USAGE);
            ExitCode::from(64)
        }
    }
}

struct Options {
    prime: u64,
    seed: u64,
    retries: usize,
    smoothness: SmoothnessMode,
    range: (i64, i64),
    out: PathBuf,
    all: bool,
    family: Option<FamilyId>,
    pi: Option<i64>,
    chi: Option<i64>,
    table: bool,
    positional: Vec<String>,
}

fn parse_options(args: &[String]) -> Result<Options, String> {
    let mut o = Options {
        prime: surfd10::DEFAULT_PRIME,
        seed: 1,
        retries: 5,
        smoothness: SmoothnessMode::Probabilistic { trials: 8 },
        range: (-1, 7),
        out: PathBuf::from("."),
        all: false,
        family: None,
        pi: None,
        chi: None,
        table: false,
        positional: Vec::new(),
    };
    let mut it = args.iter().peekable();
    while let Some(arg) = it.next() {
        let mut need = |name: &str| -> Result<String, String> {
            it.next()
                .map(|s| s.to_string())
                .ok_or(format!("{} needs a value", name))
        };
        match arg.as_str() {
            "--prime" => o.prime = need("--prime")?.parse().map_err(|_| "bad --prime")?,
            "--seed" => o.seed = need("--seed")?.parse().map_err(|_| "bad --seed")?,
            "--retries" => o.retries = need("--retries")?.parse().map_err(|_| "bad --retries")?,
            "--smoothness" => {
                o.smoothness = match need("--smoothness")?.as_str() {
                    "exact" => SmoothnessMode::Exact,
                    "fast" => SmoothnessMode::Probabilistic { trials: 8 },
                    other => return Err(format!("unknown smoothness mode '{}'", other)),
                }
            }
            "--range" => {
                let v = need("--range")?;
                let (a, b) = v.split_once("..").ok_or("range must look like a..b")?;
                o.range = (
                    a.parse().map_err(|_| "bad range start")?,
                    b.parse().map_err(|_| "bad range end")?,
                );
            }
            "--out" => o.out = PathBuf::from(need("--out")?),
            "--all" => o.all = true,
            "--family" => {
                let v = need("--family")?;
                let c = v.chars().next().ok_or("empty family")?;
                o.family = Some(FamilyId::from_letter(c).map_err(|e| e.to_string())?);
            }
            "--pi" => o.pi = Some(need("--pi")?.parse().map_err(|_| "bad --pi")?),
            "--chi" => o.chi = Some(need("--chi")?.parse().map_err(|_| "bad --chi")?),
            "--table" => o.table = true,
            other if other.starts_with("--") => return Err(format!("unknown flag {}", other)),
            other => o.positional.push(other.to_string()),
        }
    }
    if o.retries == 0 {
        return Err("--retries must be at least 1".into());
    }
    Ok(o)
}

fn run(args: Vec<String>) -> Result<ExitCode, String> {
    let Some(cmd) = args.first() else {
        return Err("missing subcommand".into());
    };
    let rest = &args[1..];
    match cmd.as_str() {
        "construct" => cmd_construct(rest),
        "certify" => cmd_certify(rest),
        "numerology" => cmd_numerology(rest),
        "link" => cmd_link(rest),
        other => Err(format!("unknown subcommand '{}'", other)),
    }
}

fn config_from(o: &Options) -> Result<RunConfig, String> {
    Fp::new(o.prime).map_err(|e| e.to_string())?;
    Ok(RunConfig {
        prime: o.prime,
        seed: o.seed,
        retries: o.retries,
        smoothness: o.smoothness.clone(),
        range: o.range,
    })
}

fn write_file(path: &Path, contents: &str) -> Result<(), String> {
    std::fs::write(path, contents).map_err(|e| format!("cannot write {}: {}", path.display(), e))
}

fn cmd_construct(args: &[String]) -> Result<ExitCode, String> {
    let o = parse_options(args)?;
    let cfg = config_from(&o)?;
    let families: Vec<FamilyId> = if o.all {
        FamilyId::ALL.to_vec()
    } else {
        let Some(letter) = o.positional.first() else {
            return Err("construct needs a family letter or --all".into());
        };
        let c = letter.chars().next().unwrap();
        vec![FamilyId::from_letter(c).map_err(|e| e.to_string())?]
    };
    std::fs::create_dir_all(&o.out).map_err(|e| e.to_string())?;

    let run_one = |f: FamilyId| -> (FamilyId, Result<bool, String>) {
        let result = construct_family(f, &cfg);
        match result {
            Ok(res) => {
                let base = o.out.join(f.letter().to_string());
                let status = || -> Result<(), String> {
                    write_file(&base.with_extension("ideal"), &ideal_to_string(&res.ideal))?;
                    for (name, ideal) in &res.stages {
                        let p = o.out.join(format!("{}.{}.ideal", f.letter(), name));
                        write_file(&p, &ideal_to_string(ideal))?;
                    }
                    let mut json = report_to_json(&res.report).to_string_pretty();
                    json.insert_str(0, "");
                    write_file(&o.out.join(format!("{}.report.json", f.letter())), &json)?;
                    write_file(
                        &o.out.join(format!("{}.betti.txt", f.letter())),
                        &betti_to_text(&res.report.betti),
                    )?;
                    if let Some(desc) = &res.descriptor {
                        write_file(&o.out.join(format!("{}.monad.txt", f.letter())), desc)?;
                    }
                    Ok(())
                };
                if let Err(e) = status() {
                    return (f, Err(e));
                }
                println!(
                    "family {}: PASS after {} attempt(s) via {}",
                    f.letter(),
                    res.attempts,
                    res.route
                );
                let stages: Vec<String> = res
                    .report
                    .stage_millis
                    .iter()
                    .map(|(n, ms)| format!("{} {}ms", n, ms))
                    .collect();
                println!("  stages: {}", stages.join(", "));
                (f, Ok(true))
            }
            Err(e) => {
                eprintln!("family {}: construction failed\n{}", f.letter(), e);
                (f, Ok(false))
            }
        }
    };

    let outcomes: Vec<(FamilyId, Result<bool, String>)> = if families.len() > 1 {
        std::thread::scope(|scope| {
            let handles: Vec<_> = families
                .iter()
                .map(|&f| scope.spawn(move || run_one(f)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("worker panicked"))
                .collect()
        })
    } else {
        families.into_iter().map(run_one).collect()
    };

    let mut all_ok = true;
    for (_, outcome) in outcomes {
        match outcome {
            Ok(true) => {}
            Ok(false) => all_ok = false,
            Err(e) => return Err(e),
        }
    }
    Ok(if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    })
}

fn cmd_certify(args: &[String]) -> Result<ExitCode, String> {
    let o = parse_options(args)?;
    let cfg = config_from(&o)?;
    let Some(path) = o.positional.first() else {
        return Err("certify needs an ideal file".into());
    };
    let Some(family) = o.family else {
        return Err("certify needs --family".into());
    };
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("cannot read {}: {}", path, e);
            return Ok(ExitCode::from(65));
        }
    };
    let ideal = match ideal_from_string(&text) {
        Ok(i) => i,
        Err(e) => {
            eprintln!("cannot parse {}: {}", path, e);
            return Ok(ExitCode::from(65));
        }
    };
    let report = certify(&ideal, family, &cfg, cfg.seed);
    print!("{}", report_to_text(&report));
    std::fs::create_dir_all(&o.out).map_err(|e| e.to_string())?;
    let json_path = o.out.join(format!("{}.report.json", family.letter()));
    write_file(&json_path, &report_to_json(&report).to_string_pretty())?;
    Ok(if report.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_numerology(args: &[String]) -> Result<ExitCode, String> {
    let o = parse_options(args)?;
    if o.table {
        println!(" S   pi  chi   N6   N5   K^2   type            Hilbert scheme");
        for f in FamilyId::ALL {
            let d = family_descriptor(f);
            let k2 = double_point_k2(10, hk_from_genus(10, d.pi), d.chi).unwrap();
            println!(
                " {}   {:>2}  {:>3}  {:>3}  {:>3}  {:>4}   {:<14}  {}",
                f.letter(),
                d.pi,
                d.chi,
                d.n6,
                d.n5,
                k2,
                d.birational_type,
                d.hilbert_scheme_dim
            );
        }
        return Ok(ExitCode::SUCCESS);
    }
    let Some(pi) = o.pi else {
        return Err("numerology needs --pi or --table".into());
    };
    if let Some(chi) = o.chi {
        match lebarz_counts(pi, chi) {
            Ok((n5, n6)) => {
                let k2 = double_point_k2(10, hk_from_genus(10, pi), chi).unwrap();
                println!(
                    "pi = {}, chi = {}: #5-secants meeting a general plane = {}, #6-secants + (-1)-lines = {}, K^2 = {}",
                    pi, chi, n5, n6, k2
                );
                return Ok(ExitCode::SUCCESS);
            }
            Err(_) => {
                eprintln!("no table entry for (pi, chi) = ({}, {})", pi, chi);
                return Ok(ExitCode::from(3));
            }
        }
    }
    match classify_d10(pi) {
        Ok(Classification::Families(rows)) => {
            for r in rows {
                println!(
                    "{}: chi = {}, N6 = {}, N5 = {}, {} ({})",
                    r.family.letter(),
                    r.chi,
                    r.n6,
                    r.n5,
                    r.birational_type,
                    r.construction
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Ok(Classification::Summary(s)) => {
            println!("pi = {}: {}", pi, s);
            Ok(ExitCode::SUCCESS)
        }
        Err(_) => {
            eprintln!("no degree-10 classification for pi = {}", pi);
            Ok(ExitCode::from(3))
        }
    }
}

fn cmd_link(args: &[String]) -> Result<ExitCode, String> {
    let o = parse_options(args)?;
    if o.positional.len() < 3 {
        return Err("link needs: <file.ideal> <m> <n>".into());
    }
    let path = &o.positional[0];
    let m: i64 = o.positional[1].parse().map_err(|_| "bad m")?;
    let n: i64 = o.positional[2].parse().map_err(|_| "bad n")?;
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("cannot read {}: {}", path, e);
            return Ok(ExitCode::from(65));
        }
    };
    let ideal: Ideal = match ideal_from_string(&text) {
        Ok(i) => i,
        Err(e) => {
            eprintln!("cannot parse {}: {}", path, e);
            return Ok(ExitCode::from(65));
        }
    };
    let mut rng = Rng::derive(o.seed, "cmd-link");
    match link(&ideal, m, n, &mut rng) {
        Ok(out) => {
            if out.residual.is_unit_ideal() {
                println!(
                    "the ({}, {}) complete intersection equals the scheme itself; empty residual",
                    m, n
                );
                return Ok(ExitCode::SUCCESS);
            }
            let hd = hilbert_data(&out.residual);
            match hd.surface_invariants() {
                Some(s) => println!(
                    "residual: degree {}, sectional genus {}, chi {}",
                    s.degree, s.sectional_genus, s.chi
                ),
                None => println!("residual: dimension {}, degree {}", hd.dim, hd.degree),
            }
            std::fs::create_dir_all(&o.out).map_err(|e| e.to_string())?;
            let stem = Path::new(path)
                .file_stem()
                .map(|s| s.to_string_lossy().to_string())
                .unwrap_or_else(|| "input".into());
            let out_path = o.out.join(format!("{}.residual_{}_{}.ideal", stem, m, n));
            write_file(&out_path, &ideal_to_string(&out.residual))?;
            println!("residual written to {}", out_path.display());
            Ok(ExitCode::SUCCESS)
        }
        Err(e) => {
            eprintln!("{}", e);
            Ok(ExitCode::from(4))
        }
    }
}

use std::fs;
use std::path::Path;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use lexseg_core::constructions::{construct, fixture};
use lexseg_core::eliahou_kervaire::ek_betti_table;
use lexseg_core::hilbert::{
    hilbert_function_by_enumeration, kpolynomial_inclusion_exclusion, kpolynomial_pivot,
};
use lexseg_core::io::{ideal_from_json, ideal_to_json};
use lexseg_core::macaulay::{
    is_o_sequence, lex_ideal_from_hf, macaulay_expansion, macaulay_growth, HilbertFunctionSpec,
};
use lexseg_core::oracle::bruteforce_betti_table;
use lexseg_core::{analyze, corpus, BettiTable, Error, MonomialIdeal};
use rayon::prelude::*;
use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde_json::json;

use crate::{Command, Format};

/// Marks a failed self-check so it maps to exit code 4.
#[derive(Debug)]
struct VerificationFailed(String);

impl std::fmt::Display for VerificationFailed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for VerificationFailed {}

pub fn exit_code(e: &anyhow::Error) -> u8 {
    if e.downcast_ref::<VerificationFailed>().is_some() {
        return 4;
    }
    match e.downcast_ref::<Error>() {
        Some(err) if err.is_verification_error() => 4,
        Some(err) if err.is_domain_error() => 3,
        _ => 2,
    }
}

pub fn run(command: Command) -> Result<()> {
    match command {
        Command::Construct { r, s, out, format } => cmd_construct(r, s, out.as_deref(), format),
        Command::Analyze {
            input,
            fixture: name,
            oracle,
            max_degree,
            format,
        } => {
            let ideal = match (input, name) {
                (Some(path), _) => read_ideal(&path)?,
                (None, Some(name)) => fixture(&name)?,
                (None, None) => bail!("an ideal file or --fixture is required"),
            };
            cmd_analyze(&ideal, oracle, max_degree, format)
        }
        Command::Lexify {
            spec,
            n,
            out,
            format,
        } => cmd_lexify(&spec, n, out.as_deref(), format),
        Command::Expansion { a, d, format } => cmd_expansion(a, d, format),
        Command::Betti {
            input,
            oracle,
            format,
        } => cmd_betti(&read_ideal(&input)?, oracle, format),
        Command::VerifyGrid { rmax, smax, oracle } => cmd_verify_grid(rmax, smax, oracle),
        Command::Selfcheck { seed, count } => cmd_selfcheck(seed, count),
    }
}

fn read_ideal(path: &Path) -> Result<MonomialIdeal> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(ideal_from_json(&text)?)
}

fn write_ideal(path: &Path, ideal: &MonomialIdeal) -> Result<()> {
    fs::write(path, ideal_to_json(ideal)).with_context(|| format!("writing {}", path.display()))
}

fn print_json(v: &serde_json::Value) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(v)?);
    Ok(())
}

fn betti_for(ideal: &MonomialIdeal, oracle: bool) -> Result<BettiTable> {
    if oracle || (!ideal.is_zero() && !ideal.is_unit() && !ideal.is_stable()?) {
        Ok(bruteforce_betti_table(ideal)?)
    } else {
        Ok(ek_betti_table(ideal)?)
    }
}

fn cmd_construct(r: u32, s: u32, out: Option<&Path>, format: Format) -> Result<()> {
    let report = construct(r, s)?;
    let betti = ek_betti_table(&report.ideal)?;
    if let Some(path) = out {
        write_ideal(path, &report.ideal)?;
    }
    match format {
        Format::Text => {
            println!("{report}");
            println!("generators: {}", report.ideal);
            println!("betti table:");
            print!("{betti}");
        }
        Format::Json => {
            let gens: Vec<&[u32]> = report.ideal.generators().iter().map(|g| g.exponents()).collect();
            print_json(&json!({
                "report": report.to_json(),
                "ideal": {"n": report.ideal.n(), "generators": gens},
                "betti": betti.to_json()?,
            }))?;
        }
    }
    Ok(())
}

fn cmd_analyze(ideal: &MonomialIdeal, oracle: bool, max_degree: usize, format: Format) -> Result<()> {
    let a = analyze(ideal, oracle, max_degree)?;
    match format {
        Format::Text => print!("{a}"),
        Format::Json => print_json(&a.to_json()?)?,
    }
    Ok(())
}

fn cmd_lexify(spec_path: &Path, n: usize, out: Option<&Path>, format: Format) -> Result<()> {
    let text = fs::read_to_string(spec_path)
        .with_context(|| format!("reading {}", spec_path.display()))?;
    let spec: HilbertFunctionSpec =
        serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
    is_o_sequence(&spec, n)?;
    let ideal = lex_ideal_from_hf(&spec, n)?;
    if let Some(path) = out {
        write_ideal(path, &ideal)?;
    }
    let len = spec.initial.len() + 4;
    let values: Vec<BigUint> = (0..len).map(|k| spec.value(k, n)).collect();
    let prefix: Vec<String> = values.iter().map(ToString::to_string).collect();
    match format {
        Format::Text => {
            println!("hilbert function (verified): {}, ...", prefix.join(", "));
            println!("generators ({}): {}", ideal.generators().len(), ideal);
            if out.is_none() {
                print!("{}", ideal_to_json(&ideal));
            }
        }
        Format::Json => {
            let gens: Vec<&[u32]> = ideal.generators().iter().map(|g| g.exponents()).collect();
            print_json(&json!({
                "n": ideal.n(),
                "generators": gens,
                "hilbert_function": values.iter().map(big_json).collect::<Vec<_>>(),
            }))?;
        }
    }
    Ok(())
}

/// A JSON number when it fits in `u64`, else a decimal string.
fn big_json(v: &BigUint) -> serde_json::Value {
    match v.to_u64() {
        Some(x) => json!(x),
        None => json!(v.to_string()),
    }
}

fn cmd_expansion(a: u64, d: u32, format: Format) -> Result<()> {
    let growth = macaulay_growth(a, d)?;
    let expansion = if a == 0 { None } else { Some(macaulay_expansion(a, d)?) };
    match format {
        Format::Text => {
            match &expansion {
                Some(e) => println!("{a} = {e}"),
                None => println!("0 = 0"),
            }
            println!("{a}^<{d}> = {growth}");
        }
        Format::Json => {
            let terms: Vec<(u64, u32)> = expansion.iter().flat_map(|e| e.terms()).collect();
            print_json(&json!({
                "a": a,
                "d": d,
                "terms": terms,
                "growth": big_json(&growth),
            }))?;
        }
    }
    Ok(())
}

fn cmd_betti(ideal: &MonomialIdeal, oracle: bool, format: Format) -> Result<()> {
    let table = betti_for(ideal, oracle)?;
    match format {
        Format::Text => print!("{table}"),
        Format::Json => print_json(&table.to_json()?)?,
    }
    Ok(())
}

fn cmd_verify_grid(rmax: u32, smax: u32, oracle: bool) -> Result<()> {
    let start = Instant::now();
    let cells: Vec<(u32, u32)> = (1..=rmax).flat_map(|r| (1..=smax).map(move |s| (r, s))).collect();
    let results: Vec<(u32, u32, std::result::Result<&'static str, String>)> = cells
        .par_iter()
        .map(|&(r, s)| {
            let outcome = (|| -> std::result::Result<&'static str, String> {
                let report = construct(r, s).map_err(|e| e.to_string())?;
                if !(oracle && report.ideal.n() <= 4) {
                    return Ok("ok");
                }
                let ek = ek_betti_table(&report.ideal).map_err(|e| e.to_string())?;
                let brute = bruteforce_betti_table(&report.ideal).map_err(|e| e.to_string())?;
                if ek == brute {
                    Ok("ok*")
                } else {
                    Err(format!("Eliahou-Kervaire and oracle tables differ at ({r}, {s})"))
                }
            })();
            (r, s, outcome)
        })
        .collect();

    print!("r\\s");
    for s in 1..=smax {
        print!(" {s:>4}");
    }
    println!();
    let mut failures = Vec::new();
    for r in 1..=rmax {
        print!("{r:>3}");
        for s in 1..=smax {
            let (_, _, outcome) = results
                .iter()
                .find(|(rr, ss, _)| *rr == r && *ss == s)
                .expect("every cell computed");
            match outcome {
                Ok(mark) => print!(" {mark:>4}"),
                Err(msg) => {
                    print!(" {:>4}", "FAIL");
                    failures.push(msg.clone());
                }
            }
        }
        println!();
    }
    let total = results.len();
    println!(
        "{} / {total} passed in {:.2?}{}",
        total - failures.len(),
        start.elapsed(),
        if oracle { " (ok* = oracle agrees)" } else { "" }
    );
    for f in &failures {
        eprintln!("{f}");
    }
    if !failures.is_empty() {
        return Err(VerificationFailed(format!("{} grid cells failed", failures.len())).into());
    }
    Ok(())
}

fn cmd_selfcheck(seed: u64, count: usize) -> Result<()> {
    let mut failures: Vec<String> = Vec::new();

    let stable = corpus::strongly_stable_corpus(seed, count);
    let mut agree = 0;
    for i in &stable {
        if ek_betti_table(i)? == bruteforce_betti_table(i)? {
            agree += 1;
        } else {
            failures.push(format!("Betti tables differ for {i}"));
        }
    }
    println!("eliahou-kervaire vs oracle: {agree} / {} agree", stable.len());

    let general = corpus::monomial_corpus(seed, 2 * count, 5);
    let mut agree = 0;
    for i in &general {
        let ie = kpolynomial_inclusion_exclusion(i)?;
        let mut ok = ie == kpolynomial_pivot(i);
        let series = lexseg_core::hilbert::hilbert_series(i)?;
        for k in 0..=8u32 {
            let by_series = series.coefficient(k as u64);
            let counted = hilbert_function_by_enumeration(i, k)?;
            ok &= by_series == counted.into();
        }
        let a = analyze(i, false, 0)?;
        ok &= a.inequality_slack() >= 0;
        if ok {
            agree += 1;
        } else {
            failures.push(format!("engines disagree for {i}"));
        }
    }
    println!(
        "k-polynomial engines, hilbert function, inequality: {agree} / {} agree",
        general.len()
    );
    if !failures.is_empty() {
        for f in &failures {
            eprintln!("{f}");
        }
        return Err(VerificationFailed(format!("{} self-checks failed", failures.len())).into());
    }
    Ok(())
}

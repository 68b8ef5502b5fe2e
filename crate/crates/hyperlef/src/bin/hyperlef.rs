//! Command-line front end: certify, compile and rewrite fibration words.
//!
//! Usage:
//!   hyperlef check <file> [--json]
//!   hyperlef compile <file> [--emit json|kirby] [--out DIR] [--json]
//!   hyperlef rewrite <file> (--deform N | --resolve A..B) [--out DIR]
//!
//! Exit codes: 0 success; 1 not certified / rewrite precondition failed;
//! 2 parse, validation or I/O error; 3 divisibility failure.

use hyperlef::branch::{compile_branched_cover, BranchError};
use hyperlef::certify::{certify_global_monodromy, Verdict};
use hyperlef::fibration::{parse_fibration, print_fibration, validate, CycleBase, FibrationSpec};
use hyperlef::invariants::{deform_cycle, resolve_block};
use hyperlef::kirby::{gamma0_extended_model, simplify_model};
use hyperlef::report::{
    digest, move_log_json, to_json_string, CertificateJson, DescriptionJson, KirbyModelJson,
    RunReport, SCHEMA_VERSION,
};
use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

const EXIT_OK: u8 = 0;
const EXIT_DOMAIN: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_DIVISIBILITY: u8 = 3;

struct Options {
    command: String,
    path: PathBuf,
    emit: Vec<String>,
    out_dir: PathBuf,
    json: bool,
    deform: Option<usize>,
    resolve: Option<(usize, usize)>,
}

fn usage() -> ! {
    eprintln!(
        "usage: hyperlef check <file> [--json]\n       hyperlef compile <file> [--emit json|kirby] [--out DIR] [--json]\n       hyperlef rewrite <file> (--deform N | --resolve A..B) [--out DIR]"
    );
    std::process::exit(EXIT_INPUT as i32)
}

fn parse_args() -> Options {
    let mut args = std::env::args().skip(1);
    let command = args.next().unwrap_or_else(|| usage());
    let mut path = None;
    let mut emit = Vec::new();
    let mut out_dir = PathBuf::from(".");
    let mut json = false;
    let mut deform = None;
    let mut resolve = None;

    while let Some(arg) = args.next() {
        match arg.as_str() {
            "--emit" => {
                let v = args.next().unwrap_or_else(|| usage());
                if v != "json" && v != "kirby" {
                    eprintln!("error: unknown emit format '{v}' (expected json or kirby)");
                    std::process::exit(EXIT_INPUT as i32);
                }
                emit.push(v);
            }
            "--out" => out_dir = PathBuf::from(args.next().unwrap_or_else(|| usage())),
            "--json" => json = true,
            "--deform" => {
                deform = Some(args.next().and_then(|s| s.parse().ok()).unwrap_or_else(|| usage()))
            }
            "--resolve" => {
                let v = args.next().unwrap_or_else(|| usage());
                let Some((a, b)) = v.split_once("..") else { usage() };
                let (Ok(a), Ok(b)) = (a.parse(), b.parse()) else { usage() };
                resolve = Some((a, b));
            }
            _ if path.is_none() => path = Some(PathBuf::from(arg)),
            _ => usage(),
        }
    }
    if emit.is_empty() {
        emit.push("json".to_string());
    }
    Options {
        command,
        path: path.unwrap_or_else(|| usage()),
        emit,
        out_dir,
        json,
        deform,
        resolve,
    }
}

fn load_spec(path: &Path) -> Result<(String, FibrationSpec), (u8, String)> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| (EXIT_INPUT, format!("{}: {e}", path.display())))?;
    let spec = parse_fibration(&text)
        .map_err(|e| (EXIT_INPUT, format!("{}:{e}", path.display())))?;
    let report = validate(&spec);
    if !report.is_sound() {
        return Err((EXIT_INPUT, format!("{}: invalid spec:\n{report}", path.display())));
    }
    Ok((text, spec))
}

fn stem(path: &Path) -> String {
    path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| "out".into())
}

fn cmd_check(opts: &Options) -> Result<u8, (u8, String)> {
    let (text, spec) = load_spec(&opts.path)?;
    let cert = certify_global_monodromy(&spec);
    let report = RunReport {
        schema: SCHEMA_VERSION,
        input_digest: digest(&text),
        certificate: CertificateJson::from_certificate(&cert),
        description: None,
        kirby_models: vec![],
    };
    print!("{}", to_json_string(&report));
    Ok(if cert.verdict == Verdict::IdentityUpstairs { EXIT_OK } else { EXIT_DOMAIN })
}

fn branch_error_exit(e: &BranchError) -> u8 {
    match e {
        BranchError::Divisibility { .. } => EXIT_DIVISIBILITY,
        _ => EXIT_DOMAIN,
    }
}

fn kirby_models(spec: &FibrationSpec) -> Result<Vec<KirbyModelJson>, (u8, String)> {
    let spec = spec.canonicalized();
    let genera: BTreeSet<usize> = spec
        .word
        .iter()
        .filter_map(|c| match c.base {
            CycleBase::SeparatingLoop(g) => Some(g),
            CycleBase::ArcGenerator(_) => None,
        })
        .collect();
    let mut out = Vec::new();
    for g in genera {
        let model = gamma0_extended_model(spec.genus, g)
            .map_err(|e| (EXIT_INPUT, format!("kirby model: {e}")))?;
        let (simplified, log) =
            simplify_model(&model).map_err(|e| (EXIT_INPUT, format!("kirby model: {e}")))?;
        out.push(KirbyModelJson {
            genus: spec.genus,
            separating_genus: g,
            handle_list: model.render().lines().map(str::to_owned).collect(),
            simplified_handle_list: simplified.render().lines().map(str::to_owned).collect(),
            move_log: move_log_json(&log),
        });
    }
    Ok(out)
}

fn render_kirby_text(models: &[KirbyModelJson]) -> String {
    let mut out = String::new();
    for m in models {
        out.push_str(&format!("model h={} g={} extended\n", m.genus, m.separating_genus));
        for line in &m.handle_list {
            out.push_str(line);
            out.push('\n');
        }
        out.push_str("simplified\n");
        for line in &m.simplified_handle_list {
            out.push_str(line);
            out.push('\n');
        }
        out.push_str("moves\n");
        for e in &m.move_log {
            out.push_str(&format!(
                "{} targets=[{}] chi {}->{} sig {}->{}\n",
                e.move_kind,
                e.targets.join(", "),
                e.chi_before,
                e.chi_after,
                e.signature_before,
                e.signature_after
            ));
        }
        out.push('\n');
    }
    out
}

fn cmd_compile(opts: &Options) -> Result<u8, (u8, String)> {
    let (text, spec) = load_spec(&opts.path)?;
    let cert = certify_global_monodromy(&spec);
    let description = match compile_branched_cover(&spec) {
        Ok(d) => d,
        Err(e) => return Err((branch_error_exit(&e), e.to_string())),
    };
    let desc_json = DescriptionJson::from_description(&spec, &description);

    let want_kirby = opts.emit.iter().any(|e| e == "kirby");
    let models = if want_kirby { kirby_models(&spec)? } else { vec![] };

    std::fs::create_dir_all(&opts.out_dir)
        .map_err(|e| (EXIT_INPUT, format!("{}: {e}", opts.out_dir.display())))?;
    let base = stem(&opts.path);
    if opts.emit.iter().any(|e| e == "json") {
        let out = opts.out_dir.join(format!("{base}.cover.json"));
        std::fs::write(&out, to_json_string(&desc_json))
            .map_err(|e| (EXIT_INPUT, format!("{}: {e}", out.display())))?;
        eprintln!("wrote {}", out.display());
    }
    if want_kirby {
        let out = opts.out_dir.join(format!("{base}.kirby.txt"));
        std::fs::write(&out, render_kirby_text(&models))
            .map_err(|e| (EXIT_INPUT, format!("{}: {e}", out.display())))?;
        eprintln!("wrote {}", out.display());
    }

    let report = RunReport {
        schema: SCHEMA_VERSION,
        input_digest: digest(&text),
        certificate: CertificateJson::from_certificate(&cert),
        description: Some(desc_json),
        kirby_models: models,
    };
    if opts.json {
        print!("{}", to_json_string(&report));
    } else {
        let d = report.description.as_ref().unwrap();
        println!(
            "ambient {}  chi_branch {}  chi_M' {}  chi_M {}  sigma {}",
            d.ambient,
            d.chi_branch,
            d.chi_mprime,
            d.chi_m,
            d.sigma_endo.map_or("n/a".into(), |s| s.to_string())
        );
    }
    Ok(EXIT_OK)
}

fn cmd_rewrite(opts: &Options) -> Result<u8, (u8, String)> {
    let (_, spec) = load_spec(&opts.path)?;
    let (rewritten, suffix) = match (opts.deform, opts.resolve) {
        (Some(index), None) => (
            deform_cycle(&spec, index).map_err(|e| (EXIT_DOMAIN, e.to_string()))?,
            "deformed",
        ),
        (None, Some((a, b))) => (
            resolve_block(&spec, a..b).map_err(|e| (EXIT_DOMAIN, e.to_string()))?,
            "resolved",
        ),
        _ => usage(),
    };
    std::fs::create_dir_all(&opts.out_dir)
        .map_err(|e| (EXIT_INPUT, format!("{}: {e}", opts.out_dir.display())))?;
    let out = opts.out_dir.join(format!("{}.{suffix}.lf", stem(&opts.path)));
    std::fs::write(&out, print_fibration(&rewritten))
        .map_err(|e| (EXIT_INPUT, format!("{}: {e}", out.display())))?;
    println!("{}", out.display());
    Ok(EXIT_OK)
}

fn main() -> ExitCode {
    let opts = parse_args();
    let result = match opts.command.as_str() {
        "check" => cmd_check(&opts),
        "compile" => cmd_compile(&opts),
        "rewrite" => cmd_rewrite(&opts),
        _ => usage(),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err((code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

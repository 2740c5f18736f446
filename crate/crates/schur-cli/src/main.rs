//! The `schur` binary: identities, relations, evolution, and sweeps over
//! the schur-core engine.
//!
//! Exit codes: 0 verified or constructed, 1 a verification failed (the
//! report carries the surviving LHS - RHS monomials), 2 bad usage.

use clap::{Args, Parser, Subcommand};
use schur_cli::report;
use schur_cli::sweep::{self, SweepWhat};
use schur_core::*;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "schur", version, about = "Schur function identities, exchange relations, and tableau combinatorics")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Bilinear identities and the recurrence evolver
    Hirota {
        #[command(subcommand)]
        cmd: Hirota,
    },
    /// Exchange relations among maximal minors
    Plucker {
        #[command(subcommand)]
        cmd: Plucker,
    },
    /// Tableau products and the shape-level identity
    Lr {
        #[command(subcommand)]
        cmd: Lr,
    },
    /// Verify an identity family over every shape within bounds
    Sweep(SweepArgs),
}

#[derive(Subcommand)]
enum Hirota {
    /// Emit the identity attached to one corner of a shape
    Identity(IdentityArgs),
    /// Reach a Schur function through the solved-for recurrence
    Evolve(EvolveArgs),
}

#[derive(Args)]
struct IdentityArgs {
    /// Shape, comma separated: "3,2,1"
    #[arg(long)]
    lambda: String,
    /// Column height of the pivot corner
    #[arg(long)]
    k: usize,
    /// Carry spectral parameters
    #[arg(long)]
    quantum: bool,
    /// Expand everything and check LHS - RHS = 0
    #[arg(long)]
    verify: bool,
    /// Ring for --verify: specialized or formal
    #[arg(long, default_value = "specialized")]
    mode: String,
    /// text or json
    #[arg(long, default_value = "text")]
    report: String,
}

#[derive(Args)]
struct EvolveArgs {
    /// Shape to reach: "3,3,2"
    #[arg(long)]
    target: String,
    /// text or json
    #[arg(long, default_value = "text")]
    report: String,
}

#[derive(Subcommand)]
enum Plucker {
    /// Print the exchange relation for an n x 2n row system
    Generate(GenerateArgs),
    /// Expand the boxed relation of a shape and check it vanishes
    Verify(BoxVerifyArgs),
}

#[derive(Args)]
struct GenerateArgs {
    /// Minor size n
    #[arg(long)]
    n: usize,
    /// Rows to exchange, comma separated: "1,2"
    #[arg(long)]
    swap: String,
    /// text or json
    #[arg(long, default_value = "text")]
    format: String,
}

#[derive(Args)]
struct BoxVerifyArgs {
    /// Shape whose corner relation to expand: "3,2,1"
    #[arg(long = "box")]
    box_shape: String,
    /// Column height of the pivot corner
    #[arg(long)]
    k: usize,
    /// plain, formal, or quantum
    #[arg(long, default_value = "plain")]
    family: String,
    /// Ring for the expansion: specialized or formal
    #[arg(long, default_value = "specialized")]
    mode: String,
    /// text or json
    #[arg(long, default_value = "text")]
    format: String,
}

#[derive(Subcommand)]
enum Lr {
    /// Multiply two Schur functions by the tableau action
    Multiply(MultiplyArgs),
    /// Check the signed shape-count identity at one corner
    Conjecture(ConjectureArgs),
}

#[derive(Args)]
struct MultiplyArgs {
    /// Left shape: "2,1"
    #[arg(long)]
    lambda: String,
    /// Right shape, the one whose tableaux act: "2,1"
    #[arg(long)]
    mu: String,
    /// text or json
    #[arg(long, default_value = "text")]
    report: String,
}

#[derive(Args)]
struct ConjectureArgs {
    /// Shape, comma separated: "3,2,1"
    #[arg(long)]
    lambda: String,
    /// Column height of the pivot corner
    #[arg(long)]
    k: usize,
    /// text or json
    #[arg(long, default_value = "text")]
    report: String,
}

#[derive(Args)]
struct SweepArgs {
    /// main-identity, quantum-identity, or conjecture
    #[arg(long)]
    what: String,
    /// Largest box count; defaults to the family's exhaustive range
    #[arg(long)]
    max_boxes: Option<u64>,
    /// Largest corner count
    #[arg(long, default_value_t = 4)]
    max_corners: usize,
    /// text or json
    #[arg(long, default_value = "text")]
    report: String,
}

fn usage(msg: String) -> ! {
    eprintln!("error: {msg}");
    std::process::exit(2);
}

fn partition_arg(s: &str, flag: &str) -> Partition {
    match Partition::parse(s) {
        Ok(p) => p,
        Err(e) => usage(format!("{flag}: {e}")),
    }
}

/// --k names a column height; the engine wants the corner carrying it.
fn corner_for_height(lam: &Partition, ell: usize, flag: &str) -> usize {
    if let Err(e) = lam.remove_column(ell) {
        usage(format!("{flag}: {e} in {lam}"));
    }
    lam.to_corners()
        .pairs
        .iter()
        .position(|&(_, y)| y as usize == ell)
        .unwrap()
        + 1
}

fn mode_arg(s: &str) -> Mode {
    match s {
        "specialized" => Mode::Specialized,
        "formal" => Mode::Formal,
        _ => usage(format!("--mode: expected specialized or formal, got {s:?}")),
    }
}

fn mode_name(m: Mode) -> &'static str {
    match m {
        Mode::Specialized => "specialized",
        Mode::Formal => "formal",
    }
}

fn family_arg(s: &str) -> RelationFamily {
    match s {
        "plain" => RelationFamily::Plain,
        "formal" => RelationFamily::Formal,
        "quantum" => RelationFamily::Quantum,
        _ => usage(format!("--family: expected plain, formal, or quantum, got {s:?}")),
    }
}

fn wants_json(s: &str, flag: &str) -> bool {
    match s {
        "text" => false,
        "json" => true,
        _ => usage(format!("{flag}: expected text or json, got {s:?}")),
    }
}

fn print_json(doc: &Value) {
    println!("{}", serde_json::to_string_pretty(doc).unwrap());
}

fn run_identity(a: IdentityArgs) -> i32 {
    let lam = partition_arg(&a.lambda, "--lambda");
    let corner = corner_for_height(&lam, a.k, "--k");
    let mode = mode_arg(&a.mode);
    if mode == Mode::Formal && !a.quantum {
        usage("--mode: the plain identity holds in the specialized ring; formal needs --quantum".into());
    }
    let json_out = wants_json(&a.report, "--report");
    let terms = if a.quantum {
        quantum_identity(&lam, corner)
    } else {
        main_identity(&lam, corner)
    };

    let mut residual = None;
    if a.verify {
        match verify_identity(&terms, mode) {
            Ok(rep) => {
                if !rep.is_zero() {
                    residual = Some(rep.residual);
                }
            }
            Err(m) => {
                eprintln!("FAIL: term {} rejected: {}", m.index, m.reason);
                return 1;
            }
        }
    }

    if json_out {
        let mut doc = json!({
            "schema": report::SCHEMA,
            "command": "hirota identity",
            "lambda": report::shape_list(&lam),
            "column_height": a.k,
            "corner": corner,
            "quantum": a.quantum,
            "terms": terms.iter().map(report::term_json).collect::<Vec<_>>(),
        });
        if a.verify {
            doc["verified"] = match &residual {
                None => json!({"mode": mode_name(mode), "residual_terms": 0}),
                Some(r) => json!({
                    "mode": mode_name(mode),
                    "residual_terms": r.term_count(),
                    "residual": report::residual_json(r),
                }),
            };
        }
        print_json(&doc);
    } else {
        print!("{}", report::identity_text(&terms, a.quantum));
        match &residual {
            None if a.verify => println!("verified: LHS - RHS = 0 ({})", mode_name(mode)),
            None => {}
            Some(r) => {
                println!("FAIL: LHS - RHS != 0 ({} monomials)", r.term_count());
                print!("{}", report::residual_text(r, 20));
            }
        }
    }
    if residual.is_some() {
        1
    } else {
        0
    }
}

fn run_evolve(a: EvolveArgs) -> i32 {
    let target = partition_arg(&a.target, "--target");
    let json_out = wants_json(&a.report, "--report");
    let mut evolver = Evolver::new(determinant_seeds(&target));
    let state = match evolver.evolve(&target) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("FAIL: {e}");
            return 1;
        }
    };
    let expected = schur_plain(&target);
    let ok = state.value == expected;

    if json_out {
        let provenance = match &state.provenance {
            Provenance::Seed => json!({"kind": "seed"}),
            Provenance::Evolved { base, ell } => {
                json!({"kind": "evolved", "base": report::shape_list(base), "ell": ell})
            }
        };
        let mut doc = json!({
            "schema": report::SCHEMA,
            "command": "hirota evolve",
            "target": report::shape_list(&target),
            "provenance": provenance,
            "value": report::poly_text(&state.value),
            "determinant_match": ok,
        });
        if !ok {
            doc["residual"] = report::residual_json(&(&state.value - &expected));
        }
        print_json(&doc);
    } else {
        println!("target: {target}");
        match &state.provenance {
            Provenance::Seed => println!("provenance: seed"),
            Provenance::Evolved { base, ell } => {
                println!("provenance: evolved from {base} by adding a column of height {ell}")
            }
        }
        println!("value: {}", report::poly_text(&state.value));
        if ok {
            println!("determinant check: equal");
        } else {
            println!("FAIL: value differs from the determinant");
            print!("{}", report::residual_text(&(&state.value - &expected), 20));
        }
    }
    if ok {
        0
    } else {
        1
    }
}

fn swap_arg(s: &str, n: usize) -> Vec<usize> {
    let mut swap = Vec::new();
    for piece in s.split(',') {
        match piece.trim().parse::<usize>() {
            Ok(v) if (1..=n).contains(&v) => swap.push(v),
            Ok(v) => usage(format!("--swap: row {v} outside 1..={n}")),
            Err(_) => usage(format!("--swap: bad row {piece:?}")),
        }
    }
    swap.sort_unstable();
    swap.dedup();
    if swap.is_empty() {
        usage("--swap: need at least one row".into());
    }
    swap
}

fn plucker_rows_text(rows: &[usize], compact: bool) -> String {
    let pieces: Vec<String> = rows.iter().map(usize::to_string).collect();
    format!("[{}]", pieces.join(if compact { "" } else { " " }))
}

fn plucker_term_json(t: &PluckerTerm) -> Value {
    json!({"rows_left": t.left, "rows_right": t.right, "sign": t.sign})
}

fn run_generate(a: GenerateArgs) -> i32 {
    if a.n == 0 {
        usage("--n: must be at least 1".into());
    }
    let swap = swap_arg(&a.swap, a.n);
    let rel = generate(a.n, &swap);
    if wants_json(&a.format, "--format") {
        let doc = json!({
            "schema": report::SCHEMA,
            "command": "plucker generate",
            "n": a.n,
            "swap": swap,
            "lhs": plucker_term_json(&rel.lhs),
            "rhs": rel.rhs.iter().map(plucker_term_json).collect::<Vec<_>>(),
        });
        print_json(&doc);
    } else {
        let compact = 2 * a.n <= 9;
        println!(
            "{}{} =",
            plucker_rows_text(&rel.lhs.left, compact),
            plucker_rows_text(&rel.lhs.right, compact)
        );
        for t in &rel.rhs {
            let sign = if t.sign >= 0 { '+' } else { '-' };
            println!(
                "{sign} {}{}",
                plucker_rows_text(&t.left, compact),
                plucker_rows_text(&t.right, compact)
            );
        }
    }
    0
}

fn run_box_verify(a: BoxVerifyArgs) -> i32 {
    let lam = partition_arg(&a.box_shape, "--box");
    let family = family_arg(&a.family);
    let mode = mode_arg(&a.mode);
    let json_out = wants_json(&a.format, "--format");
    let rel = match box_relation(&lam, a.k, family) {
        Ok(r) => r,
        Err(e) => usage(format!("--k: {e} in {lam}")),
    };
    let residual = rel.verify(mode);
    let quantum = family == RelationFamily::Quantum;

    if json_out {
        let mut doc = json!({
            "schema": report::SCHEMA,
            "command": "plucker verify",
            "box": report::shape_list(&lam),
            "column_height": a.k,
            "family": a.family,
            "mode": mode_name(mode),
            "lhs": report::box_term_json(&rel.terms[0]),
            "rhs": rel.terms[1..].iter().map(report::box_term_json).collect::<Vec<_>>(),
            "vanishing": rel.vanishing.iter().map(report::box_term_json).collect::<Vec<_>>(),
            "residual_terms": residual.term_count(),
        });
        if !residual.is_zero() {
            doc["residual"] = report::residual_json(&residual);
        }
        print_json(&doc);
    } else {
        println!(
            "box {lam} column height {}, family {}: {} terms, {} vanishing",
            a.k,
            a.family,
            rel.terms.len(),
            rel.vanishing.len()
        );
        println!(
            "{}{} =",
            report::rows_text(&rel.terms[0].left_rows),
            report::rows_text(&rel.terms[0].right_rows)
        );
        for t in &rel.terms[1..] {
            let sign = if t.identity_sign >= 0 { '+' } else { '-' };
            println!(
                "{sign} {}{} -> {}",
                report::rows_text(&t.left_rows),
                report::rows_text(&t.right_rows),
                report::box_product_text(t, quantum)
            );
        }
        for t in &rel.vanishing {
            println!(
                "vanishing: {}{}",
                report::rows_text(&t.left_rows),
                report::rows_text(&t.right_rows)
            );
        }
        if residual.is_zero() {
            println!("residual ({}): 0", mode_name(mode));
        } else {
            println!(
                "FAIL: residual ({}) kept {} monomials",
                mode_name(mode),
                residual.term_count()
            );
            print!("{}", report::residual_text(&residual, 20));
        }
    }
    if residual.is_zero() {
        0
    } else {
        1
    }
}

fn run_multiply(a: MultiplyArgs) -> i32 {
    let lam = partition_arg(&a.lambda, "--lambda");
    let mu = partition_arg(&a.mu, "--mu");
    let d = default_max_entry(&lam, &mu);
    let table = lr_multiply(&lam, &mu, d);
    if wants_json(&a.report, "--report") {
        let doc = json!({
            "schema": report::SCHEMA,
            "command": "lr multiply",
            "lambda": report::shape_list(&lam),
            "mu": report::shape_list(&mu),
            "max_entry": d,
            "products": report::counted_shapes_json(table.iter().map(|(s, &m)| (s, m as i64))),
        });
        print_json(&doc);
    } else {
        println!("s{lam}*s{mu} =");
        for (shape, mult) in &table {
            println!("{mult} s{shape}");
        }
    }
    0
}

fn run_conjecture(a: ConjectureArgs) -> i32 {
    let lam = partition_arg(&a.lambda, "--lambda");
    let corner = corner_for_height(&lam, a.k, "--k");
    let json_out = wants_json(&a.report, "--report");
    let rep = conjecture_check(&lam, corner);

    let mut diff: Vec<(Partition, i64, i64)> = Vec::new();
    if !rep.holds {
        let shapes: std::collections::BTreeSet<&Partition> =
            rep.lhs.keys().chain(rep.rhs.keys()).collect();
        for shape in shapes {
            let l = rep.lhs.get(shape).copied().unwrap_or(0);
            let r = rep.rhs.get(shape).copied().unwrap_or(0);
            if l != r {
                diff.push((shape.clone(), l, r));
            }
        }
    }

    if json_out {
        let mut doc = json!({
            "schema": report::SCHEMA,
            "command": "lr conjecture",
            "lambda": report::shape_list(&lam),
            "column_height": a.k,
            "corner": corner,
            "terms": rep.terms.iter().map(|(t, _)| report::term_json(t)).collect::<Vec<_>>(),
            "lhs": report::counted_shapes_json(rep.lhs.iter().map(|(s, &m)| (s, m))),
            "rhs": report::counted_shapes_json(rep.rhs.iter().map(|(s, &m)| (s, m))),
            "holds": rep.holds,
        });
        if !rep.holds {
            doc["diff"] = Value::Array(
                diff.iter()
                    .map(|(s, l, r)| {
                        json!({"shape": report::shape_list(s), "lhs": l, "rhs": r})
                    })
                    .collect(),
            );
        }
        print_json(&doc);
    } else {
        println!("lambda {lam}, column height {} (corner {corner})", a.k);
        println!("products: {}", rep.terms.len());
        println!("final shapes: lhs {}, rhs {}", rep.lhs.len(), rep.rhs.len());
        if rep.holds {
            println!("holds: true");
        } else {
            println!("FAIL: {} shapes differ", diff.len());
            for (shape, l, r) in &diff {
                println!("  s{shape}: lhs {l}, rhs {r}");
            }
        }
    }
    if rep.holds {
        0
    } else {
        1
    }
}

fn run_sweep(a: SweepArgs) -> i32 {
    let what = match SweepWhat::parse(&a.what) {
        Some(w) => w,
        None => usage(format!(
            "--what: expected main-identity, quantum-identity, or conjecture, got {:?}",
            a.what
        )),
    };
    let max_boxes = a.max_boxes.unwrap_or_else(|| what.default_max_boxes());
    let json_out = wants_json(&a.report, "--report");
    let jobs = match std::env::var("HIROTA_SWEEP_JOBS") {
        Err(_) => std::thread::available_parallelism().map_or(1, |n| n.get()),
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(j) if j >= 1 => j,
            _ => usage(format!("HIROTA_SWEEP_JOBS: expected a positive integer, got {s:?}")),
        },
    };
    let out = sweep::run(what, max_boxes, a.max_corners, jobs);

    if json_out {
        let doc = json!({
            "schema": report::SCHEMA,
            "command": "sweep",
            "what": what.name(),
            "max_boxes": max_boxes,
            "max_corners": a.max_corners,
            "shapes": out.shapes,
            "cases": out.cases,
            "failures": out.failures,
        });
        print_json(&doc);
    } else {
        println!(
            "sweep {}: boxes <= {max_boxes}, corners <= {}",
            what.name(),
            a.max_corners
        );
        if out.failures.is_empty() {
            println!("ok: {} shapes, {} cases", out.shapes, out.cases);
        } else {
            println!("FAIL: {} of {} cases", out.failures.len(), out.cases);
            for f in &out.failures {
                println!("  {f}");
            }
        }
    }
    if out.failures.is_empty() {
        0
    } else {
        1
    }
}

fn main() {
    let cli = Cli::parse();
    let code = match cli.cmd {
        Cmd::Hirota { cmd: Hirota::Identity(a) } => run_identity(a),
        Cmd::Hirota { cmd: Hirota::Evolve(a) } => run_evolve(a),
        Cmd::Plucker { cmd: Plucker::Generate(a) } => run_generate(a),
        Cmd::Plucker { cmd: Plucker::Verify(a) } => run_box_verify(a),
        Cmd::Lr { cmd: Lr::Multiply(a) } => run_multiply(a),
        Cmd::Lr { cmd: Lr::Conjecture(a) } => run_conjecture(a),
        Cmd::Sweep(a) => run_sweep(a),
    };
    std::process::exit(code);
}

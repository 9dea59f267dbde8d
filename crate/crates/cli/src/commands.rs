use std::fs;
use std::path::Path;

use racks::canon::{canonical_form, distinguishing_fields, is_isomorphic};
use racks::construction::{build_rack, check_blueprint, decompose, RackBlueprint};
use racks::enumerate::{enumerate, Engine, EnumerationRequest, EnumerationResult};
use racks::lower_bound::{build_xe, lower_bound_report, EMatrix};
use racks::rack::{validate, RackClass};
use racks::report::{bounds_report, counts_monotone};
use racks::{Error, Kind, Parallelism, RackTable};
use serde_json::{json, Value};

use crate::{Cli, Command, Format};

/// What a subcommand produced: text for humans, a document for `--format doc`.
struct Outcome {
    text: String,
    doc: Value,
    code: u8,
}

impl Outcome {
    fn ok(text: String, doc: Value) -> Self {
        Outcome { text, doc, code: 0 }
    }
}

enum Failure {
    Io(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Io(_) => 2,
            Failure::Lib(e) if e.is_resource() => 3,
            Failure::Lib(Error::EngineDisagreement { .. }) => 1,
            Failure::Lib(_) => 2,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Io(m) => m.clone(),
            Failure::Lib(e) => e.to_string(),
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn write(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn read_table(path: &Path) -> Result<RackTable, Failure> {
    RackTable::parse(&read(path)?).map_err(|e| match e {
        Error::Parse { line, msg } => Failure::Io(format!("{}: line {line}: {msg}", path.display())),
        other => Failure::Lib(other),
    })
}

fn read_rack(path: &Path) -> Result<RackTable, Failure> {
    let t = read_table(path)?;
    if let RackClass::NotRack(w) = validate(&t) {
        return Err(Failure::Io(format!("{}: not a rack: {w}", path.display())));
    }
    Ok(t)
}

pub fn run(cli: &Cli) -> u8 {
    let result = match &cli.command {
        Command::Validate { file } => cmd_validate(file),
        Command::Canon { file } => cmd_canon(file),
        Command::Iso { a, b } => cmd_iso(a, b),
        Command::Construct { file } => cmd_construct(file),
        Command::Decompose { file } => cmd_decompose(file),
        Command::Xe { n, file } => cmd_xe(*n, file),
        Command::Enumerate {
            n,
            kind,
            engine,
            emit_tables,
        } => cmd_enumerate(cli, *n, (*kind).into(), (*engine).into(), emit_tables.as_deref()),
        Command::Report { n, from, to, engine } => {
            let range = match (n, from, to) {
                (Some(n), _, _) => Some((*n, *n)),
                (None, Some(a), Some(b)) => Some((*a, *b)),
                _ => None,
            };
            cmd_report(cli, range, (*engine).into())
        }
        Command::Selftest => cmd_selftest(),
    };
    match result {
        Ok(out) => {
            let body = match cli.format {
                Format::Text => out.text,
                Format::Doc => {
                    let mut s = serde_json::to_string_pretty(&out.doc).expect("json");
                    s.push('\n');
                    s
                }
            };
            match &cli.output {
                Some(path) => {
                    if let Err(f) = write(path, &body) {
                        eprintln!("error: {}", f.message());
                        return f.code();
                    }
                }
                None => print!("{body}"),
            }
            out.code
        }
        Err(f) => {
            eprintln!("error: {}", f.message());
            f.code()
        }
    }
}

fn cmd_validate(file: &Path) -> Result<Outcome, Failure> {
    let text = read(file)?;
    let t = match RackTable::parse(&text) {
        Ok(t) => t,
        Err(e) => {
            let msg = format!("malformed: {e}");
            return Ok(Outcome {
                text: format!("{msg}\n"),
                doc: json!({ "classification": "malformed", "detail": e.to_string() }),
                code: 2,
            });
        }
    };
    let class = validate(&t);
    let (text, witness, code) = match class {
        RackClass::NotRack(w) => (format!("not_rack: {w}\n"), Value::String(w.to_string()), 1),
        other => (format!("{}\n", other.label()), Value::Null, 0),
    };
    Ok(Outcome {
        text,
        doc: json!({ "n": t.order(), "classification": class.label(), "witness": witness }),
        code,
    })
}

fn cmd_canon(file: &Path) -> Result<Outcome, Failure> {
    let c = canonical_form(&read_rack(file)?);
    Ok(Outcome::ok(c.to_text(), json!({ "n": c.order(), "table": c.to_text() })))
}

fn cmd_iso(a: &Path, b: &Path) -> Result<Outcome, Failure> {
    let (ta, tb) = (read_rack(a)?, read_rack(b)?);
    match is_isomorphic(&ta, &tb)? {
        Some(iso) => Ok(Outcome::ok(
            format!("isomorphic: {}\n", iso.0),
            json!({ "isomorphic": true, "witness": iso.0.to_string(), "images": iso.0.one_based_images() }),
        )),
        None => {
            let fields = if ta.order() != tb.order() {
                vec!["order"]
            } else {
                distinguishing_fields(&ta, &tb)?
            };
            let detail = if fields.is_empty() {
                "fingerprints agree; no isomorphism exists".to_string()
            } else {
                format!("differs in {}", fields.join(", "))
            };
            Ok(Outcome {
                text: format!("not isomorphic ({detail})\n"),
                doc: json!({ "isomorphic": false, "distinguishing_fields": fields }),
                code: 1,
            })
        }
    }
}

fn cmd_construct(file: &Path) -> Result<Outcome, Failure> {
    let b = RackBlueprint::parse(&read(file)?)?;
    let flags = check_blueprint(&b)?;
    let t = build_rack(&b);
    eprintln!(
        "condition_b={} quandle_ok={} kei_ok={}",
        flags.condition_b, flags.quandle_ok, flags.kei_ok
    );
    Ok(Outcome::ok(
        t.to_text(),
        json!({
            "n": t.order(),
            "table": t.to_text(),
            "condition_b": flags.condition_b,
            "quandle_ok": flags.quandle_ok,
            "kei_ok": flags.kei_ok,
            "classification": validate(&t).label(),
        }),
    ))
}

fn cmd_decompose(file: &Path) -> Result<Outcome, Failure> {
    let b = decompose(&read_rack(file)?)?;
    let text = b.to_text();
    Ok(Outcome::ok(
        text.clone(),
        json!({
            "degree": b.degree(),
            "group_order": b.group().order(),
            "reps": b.reps().iter().map(|r| r + 1).collect::<Vec<_>>(),
            "pis": b.pis().iter().map(ToString::to_string).collect::<Vec<_>>(),
            "blueprint": text,
        }),
    ))
}

fn cmd_xe(n: usize, file: &Path) -> Result<Outcome, Failure> {
    let e = EMatrix::parse(&read(file)?)?;
    let t = build_xe(n, &e)?;
    let class = validate(&t);
    eprintln!("{}", class.label());
    Ok(Outcome::ok(
        t.to_text(),
        json!({ "n": n, "table": t.to_text(), "classification": class.label() }),
    ))
}

fn request(cli: &Cli, n: usize, kind: Kind, engine: Engine, emit: bool) -> EnumerationRequest {
    let mut req = EnumerationRequest::new(n, kind, engine);
    req.emit_tables = emit;
    req.brute_cap = cli.brute_cap;
    req.degree_cap = cli.degree_cap;
    req.parallelism = Parallelism::Parallel;
    req
}

fn breakdown_doc(r: &EnumerationResult) -> Value {
    serde_json::to_value(&r.breakdown).expect("json")
}

fn cmd_enumerate(
    cli: &Cli,
    n: usize,
    kind: Kind,
    engine: Engine,
    emit: Option<&Path>,
) -> Result<Outcome, Failure> {
    if n == 5 && matches!(engine, Engine::Brute | Engine::Both) && cli.brute_cap >= 5 {
        eprintln!("warning: brute-force enumeration at order 5 is experimental");
    }
    let needs_tables = emit.is_some() || engine == Engine::Both;
    let r = enumerate(&request(cli, n, kind, engine, needs_tables))?;
    if let (Some(path), Some(reps)) = (emit, &r.representatives) {
        let mut body = format!("# {} canonical {} tables of order {n}\n", reps.len(), kind.name());
        for t in reps {
            body.push_str(&t.to_text());
        }
        write(path, &body)?;
    }
    let mut text = format!("n = {n}, kind = {}, engine = {}: {} classes\n", kind.name(), engine.name(), r.count);
    for b in &r.breakdown {
        text.push_str(&format!(
            "  operator group order {:>3}, orbits {:?}: {}\n",
            b.group_order, b.orbit_sizes, b.count
        ));
    }
    let doc = json!({
        "n": n,
        "kind": kind.name(),
        "engine": engine.name(),
        "count": r.count,
        "group_breakdown": breakdown_doc(&r),
        "representatives_path": emit.map(|p| p.display().to_string()),
    });
    Ok(Outcome::ok(text, doc))
}

fn cmd_report(cli: &Cli, range: Option<(usize, usize)>, engine: Engine) -> Result<Outcome, Failure> {
    let mut results = Vec::new();
    let mut lower = Vec::new();
    if let Some((from, to)) = range {
        for n in from.max(1)..=to {
            if n >= 2 {
                lower.push(lower_bound_report(n));
            }
            for kind in Kind::ALL {
                match enumerate(&request(cli, n, kind, engine, engine == Engine::Both)) {
                    Ok(r) => results.push(r),
                    Err(e) if e.is_resource() => {
                        eprintln!("note: skipping enumeration at n = {n}: {e}");
                        break;
                    }
                    Err(e) => return Err(e.into()),
                }
            }
        }
    }
    let report = bounds_report(&results);
    let monotone = counts_monotone(&results);
    let mut text = report.to_string();
    for l in &lower {
        text.push_str(&format!("\n{l}\n"));
    }
    if !results.is_empty() {
        text.push_str(&format!(
            "\nf_kei <= f_quandle <= f_rack: {}\n",
            if monotone { "holds" } else { "VIOLATED" }
        ));
    }
    let doc = json!({
        "c1": report.c1,
        "c": report.c,
        "rows": serde_json::to_value(&report.rows).expect("json"),
        "lower_bound": serde_json::to_value(&lower).expect("json"),
        "monotone": monotone,
    });
    Ok(Outcome {
        text,
        doc,
        code: if monotone { 0 } else { 1 },
    })
}

const GOLDEN_KEI: &str = "7
1 1 2 2 1 1 1
2 2 1 1 2 2 2
4 4 3 3 4 4 3
3 3 4 4 3 3 4
6 6 5 5 5 5 5
5 5 6 6 6 6 6
7 7 7 7 7 7 7
";

fn cmd_selftest() -> Result<Outcome, Failure> {
    let mut lines = Vec::new();
    let mut checks = Vec::new();
    let mut all = true;
    let mut record = |name: String, ok: bool| {
        lines.push(format!("{} {name}", if ok { "ok  " } else { "FAIL" }));
        checks.push(json!({ "check": name, "pass": ok }));
        all &= ok;
    };

    let e = EMatrix::new(&[vec![0, 1, 0], vec![1, 0, 1], vec![1, 0, 0]])?;
    let t = build_xe(7, &e)?;
    let golden = RackTable::parse(GOLDEN_KEI)?;
    record("golden kei table".into(), t == golden);
    record("golden table is kei".into(), validate(&t) == RackClass::Kei);

    for n in 1..=3 {
        for kind in Kind::ALL {
            let ok = enumerate(&EnumerationRequest::new(n, kind, Engine::Both)).is_ok();
            record(format!("engines agree n={n} {}", kind.name()), ok);
        }
    }
    let mut text = lines.join("\n");
    text.push('\n');
    Ok(Outcome {
        text,
        doc: json!({ "pass": all, "checks": checks }),
        code: if all { 0 } else { 1 },
    })
}

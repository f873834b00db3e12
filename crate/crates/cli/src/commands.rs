use std::fmt::Write;

use num_complex::Complex64;
use rayon::prelude::*;
use serde_json::{json, Value};
use tourney_codes::codes::count_tight_codes;
use tourney_codes::representation::{analyze, embed, verify_embedding, Embedding, EmbeddingVerdict};
use tourney_codes::tournament::{enumerate_tournaments, parse_catalog, switching_class};
use tourney_codes::{Error, Tolerances, Tournament};

use crate::input::{load, load_single, read_file};
use crate::verify::run_checks;
use crate::Command;

/// Everything a command produces before it is wrapped in a report.
pub struct Body {
    pub digest_input: String,
    pub results: Vec<Value>,
    pub tsv: String,
    pub all_passed: bool,
    pub diagnostics: Vec<String>,
}

impl Body {
    fn new(digest_input: String, header: &str) -> Body {
        Body {
            digest_input,
            results: Vec::new(),
            tsv: format!("#{header}\n"),
            all_passed: true,
            diagnostics: Vec::new(),
        }
    }

    fn row(&mut self, fields: &[String]) {
        let _ = writeln!(self.tsv, "{}", fields.join("\t"));
    }
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("results are serializable")
}

/// Runs `f` on every tournament in parallel and returns the results in
/// input order, stopping at the first error in that order.
fn per_tournament<T: Send>(
    ts: &[Tournament],
    f: impl Fn(&Tournament) -> Result<T, Error> + Sync,
) -> Result<Vec<T>, Error> {
    let out: Vec<Result<T, Error>> = ts.par_iter().map(&f).collect();
    out.into_iter()
        .enumerate()
        .map(|(i, r)| r.map_err(|e| locate(e, ts, i)))
        .collect()
}

fn locate(e: Error, ts: &[Tournament], i: usize) -> Error {
    match e {
        Error::Inconsistency(m) => Error::Inconsistency(format!("tournament {} ({}): {m}", i + 1, ts[i])),
        Error::Input(m) => Error::Input(format!("tournament {} ({}): {m}", i + 1, ts[i])),
        other => other,
    }
}

fn fmt_f(x: f64) -> String {
    format!("{x:.12}")
}

pub fn execute(cmd: &Command, tol: &Tolerances) -> Result<Body, Error> {
    match cmd {
        Command::Analyze { input } => {
            let input = load(input)?;
            let reports = per_tournament(&input.tournaments, |t| analyze(t, tol))?;
            let mut body = Body::new(input.text, "tournament\tn\ttype\trep_dim\talpha_re\talpha_im");
            for (t, r) in input.tournaments.iter().zip(reports) {
                body.diagnostics.extend(r.spectrum.warnings().iter().map(|w| format!("warning: {t}: {w}")));
                body.row(&[
                    t.to_line(),
                    r.n.to_string(),
                    r.class.kind.number().to_string(),
                    r.rep_dim.to_string(),
                    fmt_f(r.alpha.re),
                    fmt_f(r.alpha.im),
                ]);
                let mut v = json!({ "tournament": t.to_line() });
                merge(&mut v, to_value(&r));
                body.results.push(v);
            }
            Ok(body)
        }
        Command::Embed { input, check } => {
            let input = load(input)?;
            let done = per_tournament(&input.tournaments, |t| {
                let (report, e) = embed(t, tol)?;
                let verdict = verify_embedding(&e, t)?;
                Ok((report, e, verdict))
            })?;
            let mut body = Body::new(input.text, "tournament\tn\trep_dim\tmax_deviation");
            for (t, (report, e, verdict)) in input.tournaments.iter().zip(done) {
                let mut v = json!({
                    "tournament": t.to_line(),
                    "n": report.n,
                    "type": report.class.kind.number(),
                    "rep_dim": report.rep_dim,
                    "embedding": to_value(&e),
                    "verification": to_value(&verdict),
                });
                if *check {
                    let again = recheck_embedding(t, &v["embedding"])?;
                    v["recheck"] = to_value(&again);
                }
                body.row(&[t.to_line(), report.n.to_string(), report.rep_dim.to_string(), format!("{:.3e}", verdict.max_deviation)]);
                body.results.push(v);
            }
            Ok(body)
        }
        Command::Enumerate { n } => {
            let classes = enumerate_tournaments(*n)?;
            let mut body = Body::new(format!("enumerate n={n}"), "tournament");
            for t in classes {
                body.row(&[t.to_line()]);
                body.results.push(Value::String(t.to_line()));
            }
            Ok(body)
        }
        Command::SwitchingClass { input } => {
            let input = load_single(input)?;
            let class = switching_class(&input.tournaments[0])?;
            let mut body = Body::new(input.text, "tournament");
            for c in class {
                body.row(&[c.to_string()]);
                body.results.push(Value::String(c.to_string()));
            }
            Ok(body)
        }
        Command::CountTight { d, catalog } => {
            let (text, list) = match catalog {
                Some(path) => {
                    let text = read_file(path)?;
                    let list = parse_catalog(&text)?;
                    (text, Some(list))
                }
                None => (String::new(), None),
            };
            let count = count_tight_codes(*d, list.as_deref())?;
            let mut body = Body::new(format!("count-tight d={d}\n{text}"), "d\tsize\tcount\tcatalog_trusted");
            body.row(&[d.to_string(), count.size.to_string(), count.count.to_string(), count.catalog_trusted.to_string()]);
            body.results.push(to_value(&count));
            Ok(body)
        }
        Command::VerifyPaper { level } => {
            let outcomes = run_checks(*level, tol);
            let mut body = Body::new(format!("verify-paper {level:?}"), "check\tpassed\tdetail");
            for o in &outcomes {
                body.row(&[o.id.to_string(), o.passed.to_string(), o.detail.clone()]);
                body.results.push(to_value(o));
                if !o.passed {
                    body.all_passed = false;
                    body.diagnostics.push(format!("failed: {}", o.id));
                }
            }
            Ok(body)
        }
    }
}

fn merge(into: &mut Value, from: Value) {
    if let (Value::Object(a), Value::Object(b)) = (into, from) {
        a.extend(b);
    }
}

/// Rebuilds an embedding from its report form and verifies it against `t`.
/// A deviation above tolerance is an internal inconsistency.
pub fn recheck_embedding(t: &Tournament, value: &Value) -> Result<EmbeddingVerdict, Error> {
    let malformed = || Error::Inconsistency("embedding in the report is malformed".into());
    let complex = |v: &Value| -> Option<Complex64> {
        Some(Complex64::new(v.get("re")?.as_f64()?, v.get("im")?.as_f64()?))
    };
    let dim = value.get("dim").and_then(Value::as_u64).ok_or_else(malformed)? as usize;
    let alpha = value.get("alpha").and_then(complex).ok_or_else(malformed)?;
    let vectors = value
        .get("vectors")
        .and_then(Value::as_array)
        .ok_or_else(malformed)?
        .iter()
        .map(|row| row.as_array().and_then(|r| r.iter().map(complex).collect::<Option<Vec<_>>>()))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(malformed)?;
    let e = Embedding { dim, alpha, vectors };
    let verdict = verify_embedding(&e, t).map_err(|err| Error::Inconsistency(err.to_string()))?;
    if !verdict.pass {
        return Err(Error::Inconsistency(format!(
            "embedding of {t} deviates by {:.3e}",
            verdict.max_deviation
        )));
    }
    Ok(verdict)
}

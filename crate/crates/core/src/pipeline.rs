//! Declarative subtraction-chain files.
//!
//! ```text
//! load xprime = shipped prop46_xprime
//! load extra = fib path/to/file.fib
//! subtract step1 = xprime - p44 groups (8,9 | 0,1) match type sections coincide
//! expect step1 fiber_genus=3 base_genus=3 signature=-4 fibers=8
//! ```
//!
//! Groups list the minuend indices left of `|` and the subtrahend
//! indices right of it, one parenthesized group per matched disk pair.

use std::collections::BTreeMap;
use std::path::Path;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fibration::{
    self, load_shipped, subtract, FibrationSummary, Grouping, MatchMode, SubtractOptions,
};
use crate::sympl::TwistSign;

#[derive(Debug, Clone, Serialize)]
pub struct PipelineStep {
    pub name: String,
    pub detail: String,
    pub sigma: i64,
    pub base_genus: usize,
    pub fibers: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExpectCheck {
    pub target: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug)]
pub struct PipelineOutcome {
    pub steps: Vec<PipelineStep>,
    pub expects: Vec<ExpectCheck>,
    pub summaries: BTreeMap<String, FibrationSummary>,
    pub last: Option<String>,
}

impl PipelineOutcome {
    pub fn all_expects_passed(&self) -> bool {
        self.expects.iter().all(|e| e.passed)
    }

    pub fn result(&self) -> Option<&FibrationSummary> {
        self.last.as_ref().and_then(|n| self.summaries.get(n))
    }
}

/// Run a pipeline file. Shipped fibrations are stabilized to `h` when
/// given; `fib <path>` loads resolve relative to `base_dir`.
pub fn run_pipeline(
    src: &str,
    h: Option<usize>,
    sign: TwistSign,
    base_dir: Option<&Path>,
) -> Result<PipelineOutcome> {
    let mut summaries: BTreeMap<String, FibrationSummary> = BTreeMap::new();
    let mut steps = Vec::new();
    let mut expects = Vec::new();
    let mut last = None;
    for (lineno, raw) in src.lines().enumerate() {
        let lineno = lineno + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |what: &str| Error::Parse {
            line: lineno,
            column: 1,
            expected: what.to_string(),
        };
        let mut parts = line.splitn(2, char::is_whitespace);
        let key = parts.next().unwrap_or_default();
        let rest = parts.next().unwrap_or("").trim();
        match key {
            "load" => {
                let (id, spec) = rest.split_once('=').ok_or_else(|| bad("`=` in load"))?;
                let id = id.trim().to_string();
                let spec = spec.trim();
                let summary = if let Some(name) = spec.strip_prefix("shipped ") {
                    let fib = load_shipped(name.trim(), h, sign)?;
                    let report = fib.validate(sign);
                    if let Some(fail) = report.first_failure() {
                        return Err(Error::RelatorViolation(format!(
                            "`{}`: {} ({})",
                            name.trim(),
                            fail.check,
                            fail.detail
                        )));
                    }
                    fib.summarize(sign)?
                } else if let Some(path) = spec.strip_prefix("fib ") {
                    let full = match base_dir {
                        Some(d) => d.join(path.trim()),
                        None => Path::new(path.trim()).to_path_buf(),
                    };
                    let text = std::fs::read_to_string(&full).map_err(|e| {
                        Error::FibrationFile(format!("{}: {e}", full.display()))
                    })?;
                    let mut fib = fibration::parse_fibration(&id, &text, sign)?;
                    if let Some(h_new) = h {
                        if h_new > fib.h {
                            fib.atlas = fib.atlas.stabilize(h_new, sign)?;
                            fib.h = h_new;
                        }
                    }
                    fib.summarize(sign)?
                } else {
                    return Err(bad("`shipped <name>` or `fib <path>`"));
                };
                steps.push(PipelineStep {
                    name: id.clone(),
                    detail: format!("load {spec}"),
                    sigma: summary.sigma,
                    base_genus: summary.base_genus,
                    fibers: summary.fibers.len(),
                });
                summaries.insert(id.clone(), summary);
                last = Some(id);
            }
            "subtract" => {
                let (id, spec) = rest
                    .split_once('=')
                    .ok_or_else(|| bad("`=` in subtract"))?;
                let id = id.trim().to_string();
                let (operands, tail) = spec
                    .split_once("groups")
                    .ok_or_else(|| bad("`groups` clause"))?;
                let (lhs, rhs) = operands
                    .split_once('-')
                    .ok_or_else(|| bad("`-` between operands"))?;
                let f1 = summaries
                    .get(lhs.trim())
                    .ok_or_else(|| Error::UnknownName(lhs.trim().to_string()))?
                    .clone();
                let f2 = summaries
                    .get(rhs.trim())
                    .ok_or_else(|| Error::UnknownName(rhs.trim().to_string()))?
                    .clone();
                let (groups, opts) = parse_groups_clause(tail, lineno)?;
                let out = subtract(&f1, &f2, &groups, &opts)?;
                steps.push(PipelineStep {
                    name: id.clone(),
                    detail: format!(
                        "subtract {} - {} ({} groups, {:?})",
                        lhs.trim(),
                        rhs.trim(),
                        groups.len(),
                        opts.mode
                    ),
                    sigma: out.sigma,
                    base_genus: out.base_genus,
                    fibers: out.fibers.len(),
                });
                summaries.insert(id.clone(), out);
                last = Some(id);
            }
            "expect" => {
                let mut it = rest.split_whitespace();
                let target = it.next().ok_or_else(|| bad("target id"))?.to_string();
                let summary = summaries
                    .get(&target)
                    .ok_or_else(|| Error::UnknownName(target.clone()))?;
                let mut failures = Vec::new();
                for field in it {
                    let (k, v) = field.split_once('=').ok_or_else(|| bad("key=value"))?;
                    let actual: i64 = match k {
                        "fiber_genus" => summary.h as i64,
                        "base_genus" => summary.base_genus as i64,
                        "signature" => summary.sigma,
                        "fibers" => summary.fibers.len() as i64,
                        _ => return Err(bad("fiber_genus|base_genus|signature|fibers")),
                    };
                    let wanted: i64 = v.parse().map_err(|_| bad("integer value"))?;
                    if actual != wanted {
                        failures.push(format!("{k}: expected {wanted}, got {actual}"));
                    }
                }
                expects.push(ExpectCheck {
                    target,
                    passed: failures.is_empty(),
                    detail: if failures.is_empty() {
                        "ok".into()
                    } else {
                        failures.join("; ")
                    },
                });
            }
            _ => return Err(bad("load, subtract, or expect")),
        }
    }
    Ok(PipelineOutcome {
        steps,
        expects,
        summaries,
        last,
    })
}

/// Parse `(i, j | k, l) (…) match type sections coincide`.
fn parse_groups_clause(tail: &str, lineno: usize) -> Result<(Grouping, SubtractOptions)> {
    let bad = |what: &str| Error::Parse {
        line: lineno,
        column: 1,
        expected: what.to_string(),
    };
    let mut groups = Vec::new();
    let mut rest = tail.trim();
    while let Some(open) = rest.find('(') {
        let close = rest[open..]
            .find(')')
            .map(|i| open + i)
            .ok_or_else(|| bad("closing `)` in group"))?;
        let inner = &rest[open + 1..close];
        let (l, r) = inner
            .split_once('|')
            .ok_or_else(|| bad("`|` separating group sides"))?;
        let parse_side = |s: &str| -> Result<Vec<usize>> {
            s.split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| bad("fiber index")))
                .collect()
        };
        groups.push((parse_side(l)?, parse_side(r)?));
        rest = rest[close + 1..].trim();
    }
    let mut opts = SubtractOptions::default();
    let mut it = rest.split_whitespace().peekable();
    while let Some(tok) = it.next() {
        match tok {
            "match" => {
                opts.mode = match it.next() {
                    Some("type") => MatchMode::TypeOnly,
                    Some("strict") => MatchMode::Strict,
                    _ => return Err(bad("match type|strict")),
                };
            }
            "sections" => {
                if it.next() != Some("coincide") {
                    return Err(bad("sections coincide"));
                }
                opts.sections_coincide = true;
            }
            _ => return Err(bad("match or sections clause")),
        }
    }
    Ok((groups, opts))
}

pub const THM11_PIPELINE: &str = include_str!("../data/thm11_pipeline.txt");

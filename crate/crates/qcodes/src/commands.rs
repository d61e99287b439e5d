//! Build-family commands and the parameter table.

use qcodes_core::codes::{build_code, expected_dimension};
use qcodes_core::derived::{classify_type, gray_image, subfield_subcode, trace_code, TypeVerdict};
use qcodes_core::distance::{claimed_lower_bound, theorem_for, verify_distance_theorem, Method};
use qcodes_core::galois::MAX_M;
use qcodes_core::weights::{self, Base, EXHAUSTIVE_SEARCH_MAX_N};
use qcodes_core::{CyclicCode, LinearCode};
use serde_json::{json, Map, Value};

use crate::descriptor::Descriptor;
use crate::error::CliError;
use crate::report::{Report, Status};
use crate::session::{distance_json, distribution_json, Session};

/// Largest `m` for which build-family commands construct generators.
pub const MAX_BUILD_M: u32 = 6;

/// A code named by `(i, m)` or read from a descriptor.
#[derive(Clone, Debug)]
pub enum Source {
    Built { i: u32, m: u32 },
    Descriptor(Descriptor),
}

impl Source {
    fn inputs(&self) -> Map<String, Value> {
        let mut map = Map::new();
        match self {
            Source::Built { i, m } => {
                map.insert("i".into(), json!(i));
                map.insert("m".into(), json!(m));
            }
            Source::Descriptor(d) => {
                map.insert("descriptor".into(), serde_json::to_value(d).unwrap());
            }
        }
        map
    }

    pub fn code(&self, s: &Session) -> Result<(CyclicCode, Option<u32>), CliError> {
        match self {
            Source::Built { i, m } => {
                check_build_range(*i, *m)?;
                Ok((build_code(*i, *m, &s.ctx(*m)?)?, Some(*i)))
            }
            Source::Descriptor(d) => Ok((d.to_code(&s.ctx(d.m)?)?, d.i)),
        }
    }
}

fn check_build_range(i: u32, m: u32) -> Result<(), CliError> {
    if i > 1 {
        return Err(CliError::Usage(format!("i must be 0 or 1, got {i}")));
    }
    if m == 0 || m > MAX_BUILD_M {
        return Err(CliError::Usage(format!(
            "m must be in 1..={MAX_BUILD_M} for constructive commands, got {m}"
        )));
    }
    Ok(())
}

fn report(s: &Session, command: &str, inputs: Map<String, Value>, results: Value, status: Status) -> Report {
    Report {
        command: command.into(),
        inputs,
        results,
        provenance: s.provenance(),
        status,
    }
}

fn cyclic_results(s: &Session, code: &CyclicCode, i: Option<u32>) -> Result<Value, CliError> {
    let d = s.min_distance(code)?;
    let mut v = json!({
        "q": code.q(),
        "n": code.n(),
        "k": code.k(),
        "d": distance_json(&d),
        "odd_like": code.is_odd_like(),
        "descriptor": Descriptor::of(code, i),
    });
    if let Some(wd) = &d.distribution {
        v["weight_distribution"] = distribution_json(wd);
    }
    Ok(v)
}

fn linear_results(s: &Session, code: &LinearCode) -> Result<Value, CliError> {
    let d = s.min_distance(code)?;
    let mut v = json!({ "q": code.q(), "n": code.n(), "k": code.k(), "d": distance_json(&d) });
    if let Some(wd) = &d.distribution {
        v["weight_distribution"] = distribution_json(wd);
    }
    Ok(v)
}

fn verdict_json(v: &TypeVerdict) -> Value {
    json!({
        "self_orthogonal": v.self_orthogonal,
        "self_dual": v.self_dual,
        "type_ii": v.type_ii.as_str(),
        "codewords_checked": v.checked,
    })
}

pub fn build(s: &Session, i: u32, m: u32) -> Result<Report, CliError> {
    let src = Source::Built { i, m };
    let (code, i) = src.code(s)?;
    let results = json!({
        "descriptor": Descriptor::of(&code, i),
        "n": code.n(),
        "k": code.k(),
        "expected_k": expected_dimension(i.unwrap(), m),
        "generator": code.generator().to_text(),
        "coset_leaders": code.defining_set().coset_leaders(),
    });
    let status = Status::from_pass(code.k() as u64 == expected_dimension(i.unwrap(), m));
    Ok(report(s, "build", src.inputs(), results, status))
}

pub fn params(s: &Session, src: &Source) -> Result<Report, CliError> {
    let (code, i) = src.code(s)?;
    let results = cyclic_results(s, &code, i)?;
    Ok(report(s, "params", src.inputs(), results, Status::Pass))
}

pub fn dual(s: &Session, src: &Source) -> Result<Report, CliError> {
    let (code, _) = src.code(s)?;
    let dual = code.dual(&s.ctx(code.m())?)?;
    let results = cyclic_results(s, &dual, None)?;
    Ok(report(s, "dual", src.inputs(), results, Status::Pass))
}

pub fn extend(s: &Session, src: &Source) -> Result<Report, CliError> {
    let (code, _) = src.code(s)?;
    let ext = code.extend();
    let mut results = linear_results(s, &ext)?;
    results["type"] = verdict_json(&classify_type(&ext, s.budget, s.samples, s.seed));
    let status = if results["type"]["type_ii"] == "sampled_consistent" {
        Status::Partial
    } else {
        Status::Pass
    };
    Ok(report(s, "extend", src.inputs(), results, status))
}

pub fn trace(s: &Session, src: &Source) -> Result<Report, CliError> {
    let (code, _) = src.code(s)?;
    let t = trace_code(&code);
    let mut results = linear_results(s, &t)?;
    let ext = t.extend();
    results["extended"] = linear_results(s, &ext)?;
    Ok(report(s, "trace", src.inputs(), results, Status::Pass))
}

pub fn subfield(s: &Session, src: &Source) -> Result<Report, CliError> {
    let (code, _) = src.code(s)?;
    let sub = subfield_subcode(&code, &s.ctx(code.m())?)?;
    let results = cyclic_results(s, &sub, None)?;
    Ok(report(s, "subfield", src.inputs(), results, Status::Pass))
}

pub fn gray(s: &Session, src: &Source) -> Result<Report, CliError> {
    let (code, _) = src.code(s)?;
    let image = gray_image(&code.generator_matrix())?;
    let mut results = linear_results(s, &image)?;
    results["self_orthogonal"] = json!(image.is_self_orthogonal());
    Ok(report(s, "gray", src.inputs(), results, Status::Pass))
}

/// Parses `1..3`, `2,4` or mixtures such as `1,3..5` (ranges inclusive).
pub fn parse_list(text: &str) -> Result<Vec<u32>, CliError> {
    let bad = || CliError::Usage(format!("bad list `{text}`; use e.g. 1,3,5 or 1..3"));
    let mut out = Vec::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        match part.split_once("..") {
            Some((a, b)) => {
                let a: u32 = a.parse().map_err(|_| bad())?;
                let b: u32 = b.trim_start_matches('=').parse().map_err(|_| bad())?;
                if a > b {
                    return Err(bad());
                }
                out.extend(a..=b);
            }
            None => out.push(part.parse().map_err(|_| bad())?),
        }
    }
    if out.is_empty() {
        return Err(bad());
    }
    Ok(out)
}

/// One row per `(i, m)`: `n, k`, the claimed and certified lower bounds, a
/// BCH-with-multiplier bound and `d` (exact or sampled upper).
pub fn table(s: &Session, ms: &[u32]) -> Result<Report, CliError> {
    let mut rows = Vec::new();
    let mut status = Status::Pass;
    for &m in ms {
        if m == 0 || m > MAX_M {
            return Err(CliError::Usage(format!("table supports m in 1..={MAX_M}, got {m}")));
        }
        for i in 0..2 {
            let t = weights::defining_set(i, m, Base::Four)?;
            let n = weights::code_length(m);
            let k = n - t.len() as u64;
            let claimed = claimed_lower_bound(i, m);
            let certified = match theorem_for(i, m) {
                Some(th) if m <= 31 => Some(verify_distance_theorem(m, th)?.certified_lower),
                _ => None,
            };
            let cands = if n <= EXHAUSTIVE_SEARCH_MAX_N {
                weights::units(n)
            } else {
                weights::default_candidates(m)
            };
            let bch = weights::bch_multiplier_search(&t, &cands)?.delta();
            let (mut exact, mut upper, mut method) = (None, None, None);
            if m <= MAX_BUILD_M {
                let code = build_code(i, m, &s.ctx(m)?)?;
                let d = s.min_distance(&code)?;
                exact = d.exact;
                upper = Some(d.upper);
                method = Some(d.method);
                if let Some(c) = certified {
                    if d.upper < c {
                        return Err(CliError::Internal(format!(
                            "sampled weight {} below certified bound {c}",
                            d.upper
                        )));
                    }
                }
            }
            if let (Some(c), Some(cert)) = (claimed, certified) {
                if cert < c {
                    status = Status::Fail;
                }
            }
            rows.push(json!({
                "i": i,
                "m": m,
                "n": n,
                "k": k,
                "claimed_lower": claimed,
                "certified_lower": certified,
                "bch_lower": bch,
                "d_exact": exact,
                "d_upper": upper,
                "method": method.map(Method::as_str),
            }));
        }
    }
    let mut inputs = Map::new();
    inputs.insert("m".into(), json!(ms));
    Ok(report(s, "table", inputs, json!({ "rows": rows }), status))
}

//! Settings shared by all commands and the field contexts they build.

use std::cell::RefCell;
use std::collections::BTreeMap;

use qcodes_core::distance::{DistanceOptions, DistanceReport};
use qcodes_core::{FieldContext, LinearCode, WeightDistribution};
use serde_json::{json, Value};

use crate::error::CliError;
use crate::parallel::Threaded;
use crate::report::Provenance;

#[derive(Debug)]
pub struct Session {
    pub budget: u64,
    pub seed: u64,
    pub samples: usize,
    pub moduli: BTreeMap<u32, u32>,
    pub threads: Threaded,
    contexts: RefCell<BTreeMap<u32, FieldContext>>,
}

impl Default for Session {
    fn default() -> Session {
        Session::new(
            qcodes_core::DEFAULT_BUDGET,
            qcodes_core::DEFAULT_SEED,
            qcodes_core::DEFAULT_SAMPLES,
        )
    }
}

impl Session {
    pub fn new(budget: u64, seed: u64, samples: usize) -> Session {
        Session {
            budget,
            seed,
            samples,
            moduli: BTreeMap::new(),
            threads: Threaded::available(),
            contexts: RefCell::default(),
        }
    }

    pub fn with_moduli(mut self, moduli: BTreeMap<u32, u32>) -> Session {
        self.moduli = moduli;
        self
    }

    pub fn ctx(&self, m: u32) -> Result<FieldContext, CliError> {
        if let Some(ctx) = self.contexts.borrow().get(&m) {
            return Ok(ctx.clone());
        }
        let ctx = FieldContext::build(m, self.moduli.get(&m).copied())?;
        self.contexts.borrow_mut().insert(m, ctx.clone());
        Ok(ctx)
    }

    pub fn options(&self) -> DistanceOptions {
        DistanceOptions {
            budget: self.budget,
            seed: self.seed,
            samples: self.samples,
        }
    }

    pub fn min_distance<'a>(
        &self,
        code: impl Into<qcodes_core::distance::Code<'a>>,
    ) -> Result<DistanceReport, CliError> {
        Ok(qcodes_core::distance::min_distance_with(
            code,
            &self.options(),
            &self.threads,
        )?)
    }

    pub fn weight_distribution(&self, code: &LinearCode) -> Result<WeightDistribution, CliError> {
        Ok(qcodes_core::distance::weight_distribution_with(
            code,
            self.budget,
            &self.threads,
        )?)
    }

    pub fn provenance(&self) -> Provenance {
        let modulus = self
            .contexts
            .borrow()
            .iter()
            .map(|(&m, c)| (m, format!("{:#x}", c.modulus())))
            .collect();
        Provenance {
            seed: self.seed,
            budget: self.budget,
            samples: self.samples,
            modulus,
        }
    }
}

/// `d` as `{exact, method}` or `{lower, upper, method, ...}`.
pub fn distance_json(r: &DistanceReport) -> Value {
    match r.exact {
        Some(d) => json!({ "exact": d, "method": r.method.as_str() }),
        None => json!({
            "lower": r.lower,
            "upper": r.upper,
            "method": r.method.as_str(),
            "bch_multiplier": r.bch_multiplier,
            "seed": r.seed,
            "samples": r.samples,
        }),
    }
}

/// Nonzero entries `[weight, count]`, counts as numbers when they fit.
pub fn distribution_json(wd: &WeightDistribution) -> Value {
    let entries: Vec<Value> = wd
        .counts()
        .iter()
        .enumerate()
        .filter(|(_, c)| !num_is_zero(c))
        .map(|(w, c)| match u64::try_from(c) {
            Ok(x) => json!([w, x]),
            Err(_) => json!([w, c.to_string()]),
        })
        .collect();
    Value::Array(entries)
}

fn num_is_zero(c: &qcodes_core::distance::Count) -> bool {
    c.bits() == 0
}

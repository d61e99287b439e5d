//! Code descriptor JSON: `{q, m, n, i, defining_set, generator, k}` with the
//! defining set run-length encoded as `[start, length]` pairs.

use qcodes_core::poly::BaseField;
use qcodes_core::{CyclicCode, DefiningSet, FieldContext, Poly};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Descriptor {
    pub q: u32,
    pub m: u32,
    pub n: u64,
    pub i: Option<u32>,
    pub defining_set: Vec<[u64; 2]>,
    pub generator: String,
    pub k: u64,
}

#[derive(Debug, Error)]
pub enum DescriptorError {
    #[error("invalid descriptor JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("descriptor has q = {0}; expected 2 or 4")]
    Alphabet(u32),
    #[error("descriptor length {found} does not match 4^m - 1 = {expected}")]
    Length { expected: u64, found: u64 },
    #[error("descriptor field `{field}` disagrees with the code rebuilt from its defining set")]
    Inconsistent { field: &'static str },
    #[error(transparent)]
    Core(#[from] qcodes_core::Error),
}

impl Descriptor {
    pub fn of(code: &CyclicCode, i: Option<u32>) -> Descriptor {
        Descriptor {
            q: code.q(),
            m: code.m(),
            n: code.n() as u64,
            i,
            defining_set: code.defining_set().runs().into_iter().map(|(s, l)| [s, l]).collect(),
            generator: code.generator().to_text(),
            k: code.k() as u64,
        }
    }

    pub fn parse(text: &str) -> Result<Descriptor, DescriptorError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("descriptor serializes")
    }

    pub fn members(&self) -> Vec<u64> {
        self.defining_set.iter().flat_map(|&[s, l]| s..s + l).collect()
    }

    /// Rebuilds the code and checks the stored generator and dimension.
    pub fn to_code(&self, ctx: &FieldContext) -> Result<CyclicCode, DescriptorError> {
        if self.q != 2 && self.q != 4 {
            return Err(DescriptorError::Alphabet(self.q));
        }
        if ctx.m() != self.m {
            return Err(qcodes_core::Error::ContextMismatch {
                ctx: ctx.m(),
                requested: self.m,
            }
            .into());
        }
        if self.n != ctx.n() as u64 {
            return Err(DescriptorError::Length {
                expected: ctx.n() as u64,
                found: self.n,
            });
        }
        let t = DefiningSet::new(self.n, self.q, self.members())?;
        let code = CyclicCode::from_defining_set(t, ctx)?;
        let field = BaseField::from_order(self.q).expect("q checked");
        if Poly::parse_text(field, &self.generator)? != *code.generator() {
            return Err(DescriptorError::Inconsistent { field: "generator" });
        }
        if code.k() as u64 != self.k {
            return Err(DescriptorError::Inconsistent { field: "k" });
        }
        Ok(code)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use qcodes_core::codes::build_code;

    #[test]
    fn round_trip() {
        let ctx = FieldContext::build(2, None).unwrap();
        let c = build_code(1, 2, &ctx).unwrap();
        let d = Descriptor::of(&c, Some(1));
        assert_eq!(d.k, 7);
        let back = Descriptor::parse(&d.to_json()).unwrap();
        assert_eq!(back, d);
        assert_eq!(back.to_code(&ctx).unwrap(), c);
    }

    #[test]
    fn run_length_encoding() {
        let ctx = FieldContext::build(1, None).unwrap();
        let c = CyclicCode::from_defining_set(DefiningSet::new(3, 4, vec![1, 2]).unwrap(), &ctx).unwrap();
        assert_eq!(Descriptor::of(&c, None).defining_set, vec![[1, 2]]);
    }

    #[test]
    fn tampered_generator_rejected() {
        let ctx = FieldContext::build(2, None).unwrap();
        let mut d = Descriptor::of(&build_code(0, 2, &ctx).unwrap(), Some(0));
        d.generator = "1,1".into();
        assert!(matches!(
            d.to_code(&ctx),
            Err(DescriptorError::Inconsistent { field: "generator" })
        ));
        d.q = 3;
        assert!(matches!(d.to_code(&ctx), Err(DescriptorError::Alphabet(3))));
    }
}

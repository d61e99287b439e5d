//! Cyclic codes given by a defining set, and the code algebra around
//! `C(0, m)` and `C(1, m)`: duals, even-weight subcodes, multipliers, the
//! duadic and LCD predicates, extension and encoding.
//!
//! Two cyclic codes over the same field context are equal exactly when their
//! defining sets are.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::galois::{FieldContext, Gf4};
use crate::linear::{for_each_in_span, LinearCode, QVec};
use crate::poly::{generator_from_defining_set, BaseField, Poly};
use crate::weights::{self, mod_inverse, Base, DefiningSet};

#[derive(Clone, Debug)]
pub struct CyclicCode {
    m: u32,
    defining_set: DefiningSet,
    generator: Poly,
}

impl PartialEq for CyclicCode {
    fn eq(&self, other: &CyclicCode) -> bool {
        self.m == other.m && self.defining_set == other.defining_set
    }
}

impl Eq for CyclicCode {}

impl CyclicCode {
    /// Code over GF(`T.q()`) with generator `prod_{t in T} (x - alpha^t)`.
    pub fn from_defining_set(t: DefiningSet, ctx: &FieldContext) -> Result<CyclicCode> {
        let generator = generator_from_defining_set(&t, ctx)?;
        debug_assert_eq!(generator.degree().unwrap_or(0), t.len());
        Ok(CyclicCode {
            m: ctx.m(),
            defining_set: t,
            generator,
        })
    }

    pub fn q(&self) -> u32 {
        self.defining_set.q()
    }

    pub fn field(&self) -> BaseField {
        self.generator.field()
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> usize {
        self.defining_set.n() as usize
    }

    /// `n - |T|`.
    pub fn k(&self) -> usize {
        self.n() - self.defining_set.len()
    }

    pub fn defining_set(&self) -> &DefiningSet {
        &self.defining_set
    }

    pub fn generator(&self) -> &Poly {
        &self.generator
    }

    /// Odd-like: `g(1) != 0`, i.e. `0` is not a zero of the code.
    pub fn is_odd_like(&self) -> bool {
        !self.defining_set.contains(0)
    }

    /// Dual code, defining set `Z_n \ (-T)`.
    pub fn dual(&self, ctx: &FieldContext) -> Result<CyclicCode> {
        CyclicCode::from_defining_set(self.defining_set.negate().complement(), ctx)
    }

    /// Subcode of words with coordinate sum zero; defining set `T ∪ {0}`.
    pub fn even_weight_subcode(&self, ctx: &FieldContext) -> Result<CyclicCode> {
        if self.defining_set.contains(0) {
            return Err(Error::AlreadyEven);
        }
        CyclicCode::from_defining_set(self.defining_set.with(0), ctx)
    }

    /// Image under the multiplier `mu_a` (`x -> x^a`): defining set `a^-1 T`.
    pub fn multiplier(&self, a: i64, ctx: &FieldContext) -> Result<CyclicCode> {
        let n = self.n() as u64;
        let a_red = a.rem_euclid(n as i64) as u64;
        let inv = mod_inverse(a_red, n).ok_or(Error::NonCoprime {
            value: a_red,
            modulus: n,
        })?;
        CyclicCode::from_defining_set(self.defining_set.scale(inv), ctx)
    }

    /// Defining set of `C ∩ C^⊥`: `T ∪ (Z_n \ -T)`.
    pub fn hull_defining_set(&self) -> DefiningSet {
        self.defining_set.union(&self.defining_set.negate().complement())
    }

    /// Trivial hull: the hull defining set is all of `Z_n`.
    pub fn is_lcd(&self) -> bool {
        self.hull_defining_set().len() == self.n()
    }

    /// Rows `x^i g(x)` for `i < k`; already in (lower) echelon form since
    /// `g(0) != 0`.
    pub fn shift_rows(&self) -> Vec<QVec> {
        let n = self.n();
        let g = self.generator.coeffs();
        (0..self.k())
            .map(|i| {
                let mut v = QVec::zeros(n);
                for (j, &c) in g.iter().enumerate() {
                    v.set(i + j, c);
                }
                v
            })
            .collect()
    }

    /// Generator matrix in reduced echelon form.
    pub fn generator_matrix(&self) -> LinearCode {
        LinearCode::from_rows(self.q(), self.n(), self.shift_rows()).expect("shift rows are well formed")
    }

    /// `message * G` with `G` the reduced generator matrix.
    pub fn encode(&self, message: &[Gf4]) -> Result<QVec> {
        self.generator_matrix().encode(message)
    }

    /// Parity-check view: the word, read as `c(x)`, is a multiple of `g(x)`.
    pub fn is_codeword(&self, word: &QVec) -> bool {
        if word.len() != self.n() {
            return false;
        }
        let p = Poly::new(BaseField::Gf4, word.symbols());
        match p.over(self.field()) {
            Some(p) => p
                .rem(&self.generator.over(self.field()).unwrap())
                .map(|r| r.is_zero())
                .unwrap_or(false),
            None => false,
        }
    }

    /// Number of codewords `q^k`, saturating.
    pub fn size(&self) -> u128 {
        words_in(self.q(), self.k())
    }

    /// Calls `f` on every codeword, refusing if `q^k > budget`.
    pub fn iterate_codewords(&self, budget: u64, f: impl FnMut(&QVec)) -> Result<()> {
        if self.size() > budget as u128 {
            return Err(Error::BudgetExceeded {
                q: self.q(),
                k: self.k(),
                budget,
            });
        }
        let g = self.generator_matrix();
        let gens = g.binary_generators();
        for_each_in_span(&gens, self.n(), 0, 1u64 << gens.len(), f);
        Ok(())
    }

    /// Extension by an overall parity check.
    pub fn extend(&self) -> LinearCode {
        self.generator_matrix().extend()
    }
}

pub(crate) fn words_in(q: u32, k: usize) -> u128 {
    let bits = k * if q == 4 { 2 } else { 1 };
    if bits >= 127 {
        u128::MAX
    } else {
        1u128 << bits
    }
}

/// `C(i, m)`: quaternary cyclic code with defining set `T(i, m)`.
pub fn build_code(i: u32, m: u32, ctx: &FieldContext) -> Result<CyclicCode> {
    if ctx.m() != m {
        return Err(Error::ContextMismatch {
            ctx: ctx.m(),
            requested: m,
        });
    }
    if i > 1 {
        return Err(Error::HypothesisViolated("i must be 0 or 1"));
    }
    CyclicCode::from_defining_set(weights::defining_set(i, m, Base::Four)?, ctx)
}

/// Expected dimension of `C(i, m)`: `2^(2m-1)` for odd `m`, and
/// `2^(2m-1) + 1` (i = 0) or `2^(2m-1) - 1` (i = 1) for even `m`.
pub fn expected_dimension(i: u32, m: u32) -> u64 {
    let half = 1u64 << (2 * m - 1);
    match (m % 2, i) {
        (1, _) => half,
        (_, 0) => half + 1,
        _ => half - 1,
    }
}

/// `T1`, `T2` partition `{1..n-1}` and `b` swaps them.
pub fn is_duadic_pair(c1: &CyclicCode, c2: &CyclicCode, b: i64) -> bool {
    if c1.n() != c2.n() || c1.q() != c2.q() {
        return false;
    }
    let (t1, t2) = (c1.defining_set(), c2.defining_set());
    let n = c1.n() as u64;
    if t1.contains(0) || t2.contains(0) {
        return false;
    }
    if t1.len() + t2.len() != n as usize - 1 || !t1.intersection(t2).is_empty() {
        return false;
    }
    let b = b.rem_euclid(n as i64) as u64;
    if mod_inverse(b, n).is_none() {
        return false;
    }
    t1.scale(b) == *t2 && t2.scale(b) == *t1
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn ctx(m: u32) -> FieldContext {
        FieldContext::build(m, None).unwrap()
    }

    #[test]
    fn m2_dimensions() {
        let c = ctx(2);
        assert_eq!(build_code(1, 2, &c).unwrap().k(), 7);
        assert_eq!(build_code(0, 2, &c).unwrap().k(), 9);
        let c01 = build_code(0, 1, &ctx(1)).unwrap();
        assert_eq!((c01.n(), c01.k()), (3, 2));
        assert_eq!(c01.generator().to_text(), "W,1");
    }

    #[test]
    fn context_mismatch() {
        assert_eq!(
            build_code(0, 3, &ctx(2)),
            Err(Error::ContextMismatch { ctx: 2, requested: 3 })
        );
    }

    #[test]
    fn duals() {
        let c = ctx(2);
        let c0 = build_code(0, 2, &c).unwrap();
        let c1 = build_code(1, 2, &c).unwrap();
        assert_eq!(c0.dual(&c).unwrap().k(), 6);
        assert_eq!(c1.dual(&c).unwrap().k(), 8);
        assert_eq!(c0.dual(&c).unwrap().dual(&c).unwrap(), c0);
        let c01 = build_code(0, 1, &ctx(1)).unwrap();
        assert_eq!(c01.dual(&ctx(1)).unwrap().k(), 1);
    }

    #[test]
    fn even_weight_subcodes() {
        let c = ctx(2);
        let c0 = build_code(0, 2, &c).unwrap();
        let c1 = build_code(1, 2, &c).unwrap();
        let e = c1.even_weight_subcode(&c).unwrap();
        assert_eq!(e.k(), 6);
        assert_eq!(e, c0.dual(&c).unwrap());
        assert_eq!(e.even_weight_subcode(&c), Err(Error::AlreadyEven));
        let c3 = ctx(3);
        let c03 = build_code(0, 3, &c3).unwrap();
        assert_eq!(c03.even_weight_subcode(&c3).unwrap(), c03.dual(&c3).unwrap());
    }

    #[test]
    fn multipliers() {
        let c = ctx(2);
        let c1 = build_code(1, 2, &c).unwrap();
        assert_eq!(c1.multiplier(1, &c).unwrap(), c1);
        assert_eq!(c1.multiplier(4, &c).unwrap(), c1);
        assert!(matches!(c1.multiplier(3, &c), Err(Error::NonCoprime { .. })));
        let c3 = ctx(3);
        let c03 = build_code(0, 3, &c3).unwrap();
        assert_eq!(c03.multiplier(-1, &c3).unwrap(), build_code(1, 3, &c3).unwrap());
    }

    #[test]
    fn duadic_examples() {
        for (m, expect) in [(1, true), (2, false), (3, true)] {
            let c = ctx(m);
            let a = build_code(0, m, &c).unwrap();
            let b = build_code(1, m, &c).unwrap();
            assert_eq!(is_duadic_pair(&a, &b, -1), expect, "m={m}");
        }
    }

    #[test]
    fn lcd_examples() {
        let c = ctx(2);
        assert!(build_code(0, 2, &c).unwrap().is_lcd());
        assert!(build_code(1, 2, &c).unwrap().is_lcd());
        let c3 = ctx(3);
        assert!(!build_code(0, 3, &c3).unwrap().is_lcd());
        let c1 = ctx(1);
        let rep = CyclicCode::from_defining_set(DefiningSet::new(3, 4, vec![1, 2]).unwrap(), &c1).unwrap();
        assert_eq!(rep.k(), 1);
        assert!(rep.is_lcd());
    }

    #[test]
    fn encoding_and_iteration() {
        let c1 = ctx(1);
        let code = build_code(0, 1, &c1).unwrap();
        assert!(code.encode(&[Gf4::ZERO, Gf4::ZERO]).unwrap().is_zero());
        let mut count = 0;
        code.iterate_codewords(1 << 22, |w| {
            assert!(code.is_codeword(w));
            count += 1;
        })
        .unwrap();
        assert_eq!(count, 16);
        let c2 = ctx(2);
        let big = build_code(0, 2, &c2).unwrap();
        assert!(matches!(
            big.iterate_codewords(1000, |_| {}),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn extension_of_c01() {
        let c1 = ctx(1);
        let ext = build_code(0, 1, &c1).unwrap().extend();
        assert_eq!((ext.n(), ext.k()), (4, 2));
        assert!(ext.is_self_dual());
    }

    #[test]
    fn expected_dimensions() {
        for m in 1..=4 {
            let c = ctx(m);
            for i in 0..2 {
                assert_eq!(build_code(i, m, &c).unwrap().k() as u64, expected_dimension(i, m));
            }
        }
    }
}

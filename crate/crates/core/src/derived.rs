//! Binary codes derived from a quaternary code: subfield subcode, trace code
//! and Gray image, together with Lee weights and the self-dual / Type II
//! classification.
//!
//! Lee weight counts `n1` coordinates in `{w, W}` once and `n2` coordinates
//! equal to `1` twice. The naming of `n2` for the count of ones is kept as
//! in the usual statement of the Gray isometry, where `1 = w + W` maps to
//! `(1, 1)`.

use alloc::vec::Vec;

use crate::codes::{words_in, CyclicCode};
use crate::distance::sample_codewords;
use crate::error::Result;
use crate::galois::FieldContext;
use crate::linear::{for_each_in_span, LinearCode, QVec};
use crate::weights::DefiningSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LeeComposition {
    pub n0: usize,
    pub n1: usize,
    pub n2: usize,
}

impl LeeComposition {
    pub fn weight(&self) -> usize {
        self.n1 + 2 * self.n2
    }
}

pub fn lee_composition(x: &QVec) -> LeeComposition {
    let n2 = x.count_ones_symbol();
    let nonzero = x.weight();
    LeeComposition {
        n0: x.len() - nonzero,
        n1: nonzero - n2,
        n2,
    }
}

pub fn lee_weight(x: &QVec) -> usize {
    x.lee_weight()
}

/// `phi(w x + W y) = (x, y)`: `0 -> (0,0)`, `w -> (1,0)`, `W -> (0,1)`,
/// `1 -> (1,1)`, laid out as the x-block followed by the y-block.
pub fn gray_map(v: &QVec) -> QVec {
    let n = v.len();
    let (p0, p1) = v.planes();
    let x: Vec<u64> = p0.iter().zip(p1).map(|(a, b)| a ^ b).collect();
    let mut out = QVec::zeros(2 * n);
    for i in 0..n {
        let bit = |plane: &[u64]| (plane[i / 64] >> (i % 64)) & 1 == 1;
        if bit(&x) {
            out.set(i, crate::galois::Gf4::ONE);
        }
        if bit(p0) {
            out.set(n + i, crate::galois::Gf4::ONE);
        }
    }
    out
}

/// Binary code of length `2n` spanned by the Gray images of a GF(2) basis.
pub fn gray_image(code: &LinearCode) -> Result<LinearCode> {
    code.map_rows(gray_map, 2, 2 * code.n())
}

/// The binary cyclic code whose defining set is the 2-closure of `T(C)`.
pub fn subfield_subcode(code: &CyclicCode, ctx: &FieldContext) -> Result<CyclicCode> {
    let t = code.defining_set();
    let closed = DefiningSet::closure_of(t.n(), 2, t.members().iter().copied())?;
    CyclicCode::from_defining_set(closed, ctx)
}

/// Codewords with all coordinates in GF(2), solved from the parity checks:
/// a binary `v` satisfies `h . v = 0` over GF(4) iff it is orthogonal to
/// both planes of `h`.
pub fn binary_subcode(code: &LinearCode) -> LinearCode {
    if code.q() == 2 {
        return code.clone();
    }
    let n = code.n();
    let dual = code.dual();
    let mut checks = Vec::with_capacity(2 * dual.k());
    for h in dual.rows() {
        let (p0, p1) = h.planes();
        checks.push(QVec::from_planes(n, p0.to_vec(), Vec::new()));
        checks.push(QVec::from_planes(n, p1.to_vec(), Vec::new()));
    }
    LinearCode::from_rows(2, n, checks)
        .expect("plane rows are binary")
        .dual()
}

/// Whether the defining-set construction matches the kernel construction.
pub fn verify_subfield_subcode(code: &CyclicCode, ctx: &FieldContext) -> Result<bool> {
    let by_closure = subfield_subcode(code, ctx)?.generator_matrix();
    Ok(by_closure == binary_subcode(&code.generator_matrix()))
}

/// Binary span of the coordinatewise traces of `b * row` for `b` in
/// `{1, w}` over the generator rows.
pub fn trace_code_linear(code: &LinearCode) -> LinearCode {
    let rows = code.binary_generators().iter().map(QVec::trace).collect();
    LinearCode::from_rows(2, code.n(), rows).expect("traces are binary")
}

pub fn trace_code(code: &CyclicCode) -> LinearCode {
    trace_code_linear(&code.generator_matrix())
}

/// Both sides of `Tr(C) = (C^⊥|GF(2))^⊥`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DelsarteCheck {
    pub trace_dim: usize,
    pub subfield_dual_dim: usize,
    pub holds: bool,
}

pub fn verify_delsarte(code: &CyclicCode, ctx: &FieldContext) -> Result<DelsarteCheck> {
    let lhs = trace_code(code);
    let sub = subfield_subcode(&code.dual(ctx)?, ctx)?;
    let rhs = sub.generator_matrix().dual();
    Ok(DelsarteCheck {
        trace_dim: lhs.k(),
        subfield_dual_dim: sub.k(),
        holds: lhs == rhs,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TypeII {
    Proven,
    Refuted,
    SampledConsistent,
}

impl TypeII {
    pub fn as_str(self) -> &'static str {
        match self {
            TypeII::Proven => "proven",
            TypeII::Refuted => "refuted",
            TypeII::SampledConsistent => "sampled_consistent",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TypeVerdict {
    pub self_orthogonal: bool,
    pub self_dual: bool,
    pub type_ii: TypeII,
    /// Codewords whose Lee weight was inspected.
    pub checked: u64,
}

/// Euclidean self-orthogonality and self-duality exactly; Type II (every
/// Lee weight divisible by 4) by enumeration when `q^k <= budget`, else by
/// `samples` seeded random codewords.
pub fn classify_type(code: &LinearCode, budget: u64, samples: usize, seed: u64) -> TypeVerdict {
    let self_orthogonal = code.is_self_orthogonal();
    let self_dual = self_orthogonal && 2 * code.k() == code.n();
    let mut violation = false;
    let mut checked = 0u64;
    let exhaustive = words_in(code.q(), code.k()) <= budget as u128;
    if exhaustive {
        let gens = code.binary_generators();
        for_each_in_span(&gens, code.n(), 0, 1u64 << gens.len(), |v| {
            checked += 1;
            violation |= v.lee_weight() % 4 != 0;
        });
    } else {
        sample_codewords(code, seed, samples, |v| {
            checked += 1;
            violation |= v.lee_weight() % 4 != 0;
        });
    }
    let type_ii = match (violation, exhaustive) {
        (true, _) => TypeII::Refuted,
        (false, true) => TypeII::Proven,
        (false, false) => TypeII::SampledConsistent,
    };
    TypeVerdict {
        self_orthogonal,
        self_dual,
        type_ii,
        checked,
    }
}

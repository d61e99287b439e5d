//! Exact arithmetic in GF(2), GF(4) and GF(4^m) = GF(2^(2m)).

mod field;
mod gf4;

pub use field::{default_modulus, Embedding, Ext, FieldContext, DEFAULT_MODULI, MAX_M};
pub use gf4::Gf4;

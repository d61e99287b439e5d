//! Vectors over GF(2)/GF(4) packed as two bit-planes, and explicit linear
//! codes kept in reduced row echelon form.
//!
//! A symbol `x0 + x1*w` sets bit `i` of plane 0 to `x0` and of plane 1 to
//! `x1`. Binary vectors have an all-zero plane 1. Addition is XOR on both
//! planes; multiplication by `w` maps `(p0, p1)` to `(p1, p0 ^ p1)`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::galois::Gf4;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QVec {
    n: usize,
    p0: Vec<u64>,
    p1: Vec<u64>,
}

#[inline]
fn words(n: usize) -> usize {
    n.div_ceil(64)
}

impl QVec {
    pub fn zeros(n: usize) -> QVec {
        QVec {
            n,
            p0: vec![0; words(n)],
            p1: vec![0; words(n)],
        }
    }

    pub fn from_symbols(symbols: &[Gf4]) -> QVec {
        let mut v = QVec::zeros(symbols.len());
        for (i, &s) in symbols.iter().enumerate() {
            v.set(i, s);
        }
        v
    }

    /// Binary vector from bits.
    pub fn from_bits(bits: &[u8]) -> QVec {
        let mut v = QVec::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b & 1 == 1 {
                v.p0[i / 64] |= 1 << (i % 64);
            }
        }
        v
    }

    /// Vector from raw planes; bits past `n` are cleared.
    pub fn from_planes(n: usize, mut p0: Vec<u64>, mut p1: Vec<u64>) -> QVec {
        p0.resize(words(n), 0);
        p1.resize(words(n), 0);
        if n % 64 != 0 {
            let mask = (1u64 << (n % 64)) - 1;
            let last = words(n) - 1;
            p0[last] &= mask;
            p1[last] &= mask;
        }
        QVec { n, p0, p1 }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn planes(&self) -> (&[u64], &[u64]) {
        (&self.p0, &self.p1)
    }

    #[inline]
    pub fn get(&self, i: usize) -> Gf4 {
        let (w, b) = (i / 64, i % 64);
        let x0 = (self.p0[w] >> b) & 1;
        let x1 = (self.p1[w] >> b) & 1;
        Gf4::from_bits((x0 | (x1 << 1)) as u8)
    }

    #[inline]
    pub fn set(&mut self, i: usize, x: Gf4) {
        let (w, b) = (i / 64, i % 64);
        let mask = 1u64 << b;
        let bits = x.bits();
        self.p0[w] = (self.p0[w] & !mask) | (((bits & 1) as u64) << b);
        self.p1[w] = (self.p1[w] & !mask) | ((((bits >> 1) & 1) as u64) << b);
    }

    pub fn symbols(&self) -> Vec<Gf4> {
        (0..self.n).map(|i| self.get(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.p0.iter().chain(&self.p1).all(|&w| w == 0)
    }

    /// All symbols in GF(2).
    pub fn is_binary(&self) -> bool {
        self.p1.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn add_assign(&mut self, other: &QVec) {
        for (a, b) in self.p0.iter_mut().zip(&other.p0) {
            *a ^= b;
        }
        for (a, b) in self.p1.iter_mut().zip(&other.p1) {
            *a ^= b;
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &QVec, c: Gf4) {
        match c {
            Gf4::ZERO => {}
            Gf4::ONE => self.add_assign(other),
            Gf4::OMEGA => {
                for i in 0..self.p0.len() {
                    let (o0, o1) = (other.p0[i], other.p1[i]);
                    self.p0[i] ^= o1;
                    self.p1[i] ^= o0 ^ o1;
                }
            }
            _ => {
                for i in 0..self.p0.len() {
                    let (o0, o1) = (other.p0[i], other.p1[i]);
                    self.p0[i] ^= o0 ^ o1;
                    self.p1[i] ^= o0;
                }
            }
        }
    }

    pub fn scaled(&self, c: Gf4) -> QVec {
        let mut out = QVec::zeros(self.n);
        out.add_scaled(self, c);
        out
    }

    /// Hamming weight.
    #[inline]
    pub fn weight(&self) -> usize {
        self.p0
            .iter()
            .zip(&self.p1)
            .map(|(a, b)| (a | b).count_ones() as usize)
            .sum()
    }

    /// Number of coordinates equal to 1.
    pub fn count_ones_symbol(&self) -> usize {
        self.p0
            .iter()
            .zip(&self.p1)
            .map(|(a, b)| (a & !b).count_ones() as usize)
            .sum()
    }

    /// Lee weight: `w`, `W` count 1 and `1` counts 2.
    #[inline]
    pub fn lee_weight(&self) -> usize {
        self.p0
            .iter()
            .zip(&self.p1)
            .map(|(a, b)| ((a ^ b).count_ones() + a.count_ones()) as usize)
            .sum()
    }

    /// Euclidean inner product `sum x_i y_i` in GF(4).
    pub fn dot(&self, other: &QVec) -> Gf4 {
        // (a0 + a1 w)(b0 + b1 w) = a0 b0 + a1 b1 + (a0 b1 + a1 b0 + a1 b1) w
        let mut c0 = 0u32;
        let mut c1 = 0u32;
        for i in 0..self.p0.len() {
            let (a0, a1, b0, b1) = (self.p0[i], self.p1[i], other.p0[i], other.p1[i]);
            c0 ^= ((a0 & b0) ^ (a1 & b1)).count_ones() & 1;
            c1 ^= ((a0 & b1) ^ (a1 & b0) ^ (a1 & b1)).count_ones() & 1;
        }
        Gf4::from_bits((c0 | (c1 << 1)) as u8)
    }

    /// Sum of all coordinates.
    pub fn coordinate_sum(&self) -> Gf4 {
        let c0 = self.p0.iter().map(|w| w.count_ones()).sum::<u32>() & 1;
        let c1 = self.p1.iter().map(|w| w.count_ones()).sum::<u32>() & 1;
        Gf4::from_bits((c0 | (c1 << 1)) as u8)
    }

    /// Coordinatewise trace to GF(2), which is plane 1.
    pub fn trace(&self) -> QVec {
        QVec {
            n: self.n,
            p0: self.p1.clone(),
            p1: vec![0; self.p1.len()],
        }
    }

    /// The vector with one more coordinate holding `x`.
    pub fn appended(&self, x: Gf4) -> QVec {
        let mut out = QVec::zeros(self.n + 1);
        out.p0[..self.p0.len()].copy_from_slice(&self.p0);
        out.p1[..self.p1.len()].copy_from_slice(&self.p1);
        out.set(self.n, x);
        out
    }

    /// Coordinate `i` of the result is coordinate `perm[i]` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> QVec {
        let mut out = QVec::zeros(perm.len());
        for (i, &src) in perm.iter().enumerate() {
            out.set(i, self.get(src));
        }
        out
    }

    /// Cyclic shift right by `s` (`x^s * c(x) mod x^n - 1`).
    pub fn cyclic_shift(&self, s: usize) -> QVec {
        let mut out = QVec::zeros(self.n);
        for i in 0..self.n {
            out.set((i + s) % self.n, self.get(i));
        }
        out
    }

    fn first_nonzero_from(&self, col: usize) -> Option<usize> {
        (col..self.n).find(|&i| !self.get(i).is_zero())
    }
}

/// Explicit `[n, k]` code over GF(2) or GF(4), generator rows in reduced row
/// echelon form (canonical, so equal codes compare equal).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearCode {
    q: u32,
    n: usize,
    rows: Vec<QVec>,
    pivots: Vec<usize>,
}

impl LinearCode {
    pub fn from_rows(q: u32, n: usize, rows: Vec<QVec>) -> Result<LinearCode> {
        if q != 2 && q != 4 {
            return Err(Error::WrongAlphabet { expected: 4 });
        }
        for r in &rows {
            if r.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    found: r.len(),
                });
            }
            if q == 2 && !r.is_binary() {
                return Err(Error::WrongAlphabet { expected: 4 });
            }
        }
        let (rows, pivots) = rref(rows, n);
        Ok(LinearCode { q, n, rows, pivots })
    }

    /// The zero code of length `n`.
    pub fn zero(q: u32, n: usize) -> LinearCode {
        LinearCode {
            q,
            n,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[QVec] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` against the pivots; zero remainder means membership.
    pub fn contains(&self, v: &QVec) -> bool {
        if v.len() != self.n || (self.q == 2 && !v.is_binary()) {
            return false;
        }
        let mut r = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = r.get(p);
            r.add_scaled(row, c);
        }
        r.is_zero()
    }

    pub fn encode(&self, message: &[Gf4]) -> Result<QVec> {
        if message.len() != self.k() {
            return Err(Error::DimensionMismatch {
                expected: self.k(),
                found: message.len(),
            });
        }
        let mut out = QVec::zeros(self.n);
        for (row, &c) in self.rows.iter().zip(message) {
            if self.q == 2 && !c.is_binary() {
                return Err(Error::WrongAlphabet { expected: 4 });
            }
            out.add_scaled(row, c);
        }
        Ok(out)
    }

    /// A GF(2) basis of the code viewed as a binary space: each row, and for
    /// q = 4 also `w` times each row. Spans `q^k` words.
    pub fn binary_generators(&self) -> Vec<QVec> {
        let mut gens = Vec::with_capacity(self.rows.len() * 2);
        for r in &self.rows {
            gens.push(r.clone());
            if self.q == 4 {
                gens.push(r.scaled(Gf4::OMEGA));
            }
        }
        gens
    }

    /// Euclidean dual, read off the echelon form.
    pub fn dual(&self) -> LinearCode {
        let mut is_pivot = vec![false; self.n];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let mut out = Vec::with_capacity(self.n - self.k());
        for j in (0..self.n).filter(|&j| !is_pivot[j]) {
            let mut h = QVec::zeros(self.n);
            h.set(j, Gf4::ONE);
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                // row . h = row[j] + h[p], so h[p] = row[j] in characteristic 2
                h.set(p, row.get(j));
            }
            out.push(h);
        }
        LinearCode::from_rows(self.q, self.n, out).expect("dual rows are well formed")
    }

    /// Appends the coordinate sum to every codeword.
    pub fn extend(&self) -> LinearCode {
        let rows = self.rows.iter().map(|r| r.appended(r.coordinate_sum())).collect();
        LinearCode::from_rows(self.q, self.n + 1, rows).expect("extended rows are well formed")
    }

    /// `C ⊂ C^⊥`, i.e. `G G^T = 0`.
    pub fn is_self_orthogonal(&self) -> bool {
        self.rows
            .iter()
            .enumerate()
            .all(|(i, a)| self.rows[i..].iter().all(|b| a.dot(b).is_zero()))
    }

    pub fn is_self_dual(&self) -> bool {
        2 * self.k() == self.n && self.is_self_orthogonal()
    }

    /// Code spanned by both generator sets.
    pub fn sum(&self, other: &LinearCode) -> Result<LinearCode> {
        if self.q != other.q || self.n != other.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        LinearCode::from_rows(self.q, self.n, rows)
    }

    /// `dim(C ∩ D) = dim C + dim D - dim(C + D)`.
    pub fn intersection_dim(&self, other: &LinearCode) -> Result<usize> {
        Ok(self.k() + other.k() - self.sum(other)?.k())
    }

    /// Minimum Hamming weight over the generator rows (an upper bound on `d`).
    pub fn min_row_weight(&self) -> Option<usize> {
        self.rows.iter().map(QVec::weight).min()
    }

    /// Generator rows of the binary image under `gray`-style linear maps.
    pub fn map_rows(&self, f: impl Fn(&QVec) -> QVec, q: u32, n: usize) -> Result<LinearCode> {
        let rows = self.binary_generators().iter().map(f).collect();
        LinearCode::from_rows(q, n, rows)
    }
}

fn rref(mut rows: Vec<QVec>, n: usize) -> (Vec<QVec>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut rank = 0;
    let mut col = 0;
    while rank < rows.len() && col < n {
        // choose the row whose first nonzero is leftmost, from `col`
        let mut best: Option<(usize, usize)> = None;
        for (r, row) in rows.iter().enumerate().skip(rank) {
            if let Some(c) = row.first_nonzero_from(col) {
                if best.is_none_or(|(_, bc)| c < bc) {
                    best = Some((r, c));
                    if c == col {
                        break;
                    }
                }
            }
        }
        let Some((r, c)) = best else { break };
        rows.swap(rank, r);
        let inv = rows[rank].get(c).inv().unwrap();
        let pivot_row = rows[rank].scaled(inv);
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank {
                let s = row.get(c);
                if !s.is_zero() {
                    row.add_scaled(&pivot_row, s);
                }
            }
        }
        rows[rank] = pivot_row;
        pivots.push(c);
        rank += 1;
        col = c + 1;
    }
    rows.truncate(rank);
    (rows, pivots)
}

/// Visits the codewords with Gray-code indices in `[start, end)` of the
/// binary span of `gens` (`2^gens.len()` words in total). Consecutive words
/// differ by one generator, so each step costs one vector XOR.
pub fn for_each_in_span(gens: &[QVec], n: usize, start: u64, end: u64, mut f: impl FnMut(&QVec)) {
    let total = if gens.len() >= 64 { u64::MAX } else { 1u64 << gens.len() };
    let end = end.min(total);
    if start >= end {
        return;
    }
    let gray = start ^ (start >> 1);
    let mut cur = QVec::zeros(n);
    for (b, g) in gens.iter().enumerate() {
        if (gray >> b) & 1 == 1 {
            cur.add_assign(g);
        }
    }
    f(&cur);
    for i in start + 1..end {
        cur.add_assign(&gens[i.trailing_zeros() as usize]);
        f(&cur);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;

    fn sym(s: &str) -> Vec<Gf4> {
        s.chars().map(|c| Gf4::from_char(c).unwrap()).collect()
    }

    #[test]
    fn planes_match_symbols() {
        let v = QVec::from_symbols(&sym("01wW0W"));
        assert_eq!(v.symbols(), sym("01wW0W"));
        assert_eq!(v.weight(), 4);
        assert_eq!(v.lee_weight(), 2 + 1 + 1 + 1);
        assert_eq!(v.count_ones_symbol(), 1);
    }

    #[test]
    fn scaling_matches_field() {
        let all = sym("01wW");
        let v = QVec::from_symbols(&all);
        for c in Gf4::ALL {
            let s = v.scaled(c);
            for (i, &x) in all.iter().enumerate() {
                assert_eq!(s.get(i), x * c);
            }
        }
    }

    #[test]
    fn dot_matches_symbolwise() {
        let a = sym("1wW01wWW1w");
        let b = sym("wW1W0w11Ww");
        let expect = a.iter().zip(&b).fold(Gf4::ZERO, |acc, (&x, &y)| acc + x * y);
        assert_eq!(QVec::from_symbols(&a).dot(&QVec::from_symbols(&b)), expect);
    }

    #[test]
    fn rref_and_dual() {
        let rows = vec![
            QVec::from_symbols(&sym("1w0W")),
            QVec::from_symbols(&sym("w1W0")),
            QVec::from_symbols(&sym("0000")),
        ];
        let c = LinearCode::from_rows(4, 4, rows.clone()).unwrap();
        assert_eq!(c.k(), 2);
        for r in &rows {
            assert!(c.contains(r));
        }
        let d = c.dual();
        assert_eq!(d.k(), 2);
        for a in c.rows() {
            for b in d.rows() {
                assert!(a.dot(b).is_zero());
            }
        }
        assert_eq!(d.dual(), c);
    }

    #[test]
    fn span_enumeration_is_exhaustive() {
        let c = LinearCode::from_rows(
            4,
            5,
            vec![QVec::from_symbols(&sym("1w0W1")), QVec::from_symbols(&sym("01wW1"))],
        )
        .unwrap();
        let gens = c.binary_generators();
        let mut seen = BTreeSet::new();
        for_each_in_span(&gens, 5, 0, 16, |v| {
            assert!(c.contains(v));
            seen.insert(v.symbols());
        });
        assert_eq!(seen.len(), 16);
        // split ranges cover the same set
        let mut split = BTreeSet::new();
        for (s, e) in [(0, 5), (5, 11), (11, 16)] {
            for_each_in_span(&gens, 5, s, e, |v| {
                split.insert(v.symbols());
            });
        }
        assert_eq!(seen, split);
    }

    #[test]
    fn zero_extended_ones_is_self_orthogonal_not_dual() {
        let c = LinearCode::from_rows(4, 4, vec![QVec::from_symbols(&sym("1111"))]).unwrap();
        assert!(c.is_self_orthogonal());
        assert!(!c.is_self_dual());
    }
}

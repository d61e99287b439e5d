//! Digit weights, cyclotomic cosets and defining sets.
//!
//! `T(i, m)` is the set of residues `1 <= t < 4^m - 1` whose base-4 digit sum
//! has parity `i`; the binary analogue uses the base-2 digit sum. This module
//! also holds the arithmetic-only verifiers for the containment lemmas behind
//! the BCH-with-multiplier bounds, and the consecutive-run searches.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

const EVEN_BITS: u128 = 0x5555_5555_5555_5555_5555_5555_5555_5555;
const ODD_BITS: u128 = 0xAAAA_AAAA_AAAA_AAAA_AAAA_AAAA_AAAA_AAAA;

/// Sum of base-4 digits.
#[inline]
pub fn w4(i: u128) -> u32 {
    (i & EVEN_BITS).count_ones() + 2 * (i & ODD_BITS).count_ones()
}

/// Sum of base-2 digits.
#[inline]
pub fn w2(i: u128) -> u32 {
    i.count_ones()
}

pub fn w4_big(i: &BigUint) -> u64 {
    i.iter_u64_digits().map(|d| w4(d as u128) as u64).sum()
}

pub fn w2_big(i: &BigUint) -> u64 {
    i.iter_u64_digits().map(|d| d.count_ones() as u64).sum()
}

/// Modular inverse of `a` modulo `n`, if it exists.
pub fn mod_inverse(a: u64, n: u64) -> Option<u64> {
    if n == 1 {
        return Some(0);
    }
    let g = (a as i128).extended_gcd(&(n as i128));
    if g.gcd != 1 {
        return None;
    }
    Some(g.x.rem_euclid(n as i128) as u64)
}

#[inline]
fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

/// The q-cyclotomic coset of `i` modulo `n`, sorted.
pub fn cyclotomic_coset(i: u64, q: u64, n: u64) -> Result<Vec<u64>> {
    if n == 0 || q.gcd(&n) != 1 {
        return Err(Error::NonCoprime { value: q, modulus: n });
    }
    let start = i % n;
    let mut out = vec![start];
    let mut x = mul_mod(start, q, n);
    while x != start {
        out.push(x);
        x = mul_mod(x, q, n);
    }
    out.sort_unstable();
    Ok(out)
}

/// A set of residues modulo `n` closed under multiplication by `q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DefiningSet {
    n: u64,
    q: u32,
    members: Vec<u64>,
}

impl DefiningSet {
    /// Validates range and q-closure.
    pub fn new(n: u64, q: u32, mut members: Vec<u64>) -> Result<DefiningSet> {
        members.sort_unstable();
        members.dedup();
        if let Some(&bad) = members.iter().find(|&&t| t >= n) {
            return Err(Error::OutOfRange { residue: bad, n });
        }
        let set = DefiningSet { n, q, members };
        if let Some(member) = set.closure_witness() {
            return Err(Error::NotClosed { member });
        }
        Ok(set)
    }

    /// Smallest q-closed set containing `seeds`.
    pub fn closure_of(n: u64, q: u32, seeds: impl IntoIterator<Item = u64>) -> Result<DefiningSet> {
        let mut mark = vec![false; n as usize];
        for s in seeds {
            if s >= n {
                return Err(Error::OutOfRange { residue: s, n });
            }
            let mut x = s;
            while !mark[x as usize] {
                mark[x as usize] = true;
                x = mul_mod(x, q as u64, n);
            }
        }
        Ok(DefiningSet::from_mask(n, q, &mark))
    }

    fn from_mask(n: u64, q: u32, mask: &[bool]) -> DefiningSet {
        let members = (0..n).filter(|&t| mask[t as usize]).collect();
        DefiningSet { n, q, members }
    }

    fn closure_witness(&self) -> Option<u64> {
        self.members
            .iter()
            .copied()
            .find(|&t| !self.contains(mul_mod(t, self.q as u64, self.n)))
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn members(&self) -> &[u64] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    #[inline]
    pub fn contains(&self, t: u64) -> bool {
        self.members.binary_search(&t).is_ok()
    }

    pub fn mask(&self) -> Vec<bool> {
        let mut mask = vec![false; self.n as usize];
        for &t in &self.members {
            mask[t as usize] = true;
        }
        mask
    }

    /// `{a * t mod n}`; the same q-closure holds because multiplication commutes.
    pub fn scale(&self, a: u64) -> DefiningSet {
        let mut members: Vec<u64> = self.members.iter().map(|&t| mul_mod(t, a % self.n, self.n)).collect();
        members.sort_unstable();
        members.dedup();
        DefiningSet {
            n: self.n,
            q: self.q,
            members,
        }
    }

    /// `-T mod n`.
    pub fn negate(&self) -> DefiningSet {
        self.scale(self.n - 1)
    }

    /// `Z_n \ T`.
    pub fn complement(&self) -> DefiningSet {
        let mask = self.mask();
        let members = (0..self.n).filter(|&t| !mask[t as usize]).collect();
        DefiningSet {
            n: self.n,
            q: self.q,
            members,
        }
    }

    pub fn union(&self, other: &DefiningSet) -> DefiningSet {
        let mut members = self.members.clone();
        members.extend_from_slice(&other.members);
        members.sort_unstable();
        members.dedup();
        DefiningSet {
            n: self.n,
            q: self.q,
            members,
        }
    }

    pub fn intersection(&self, other: &DefiningSet) -> DefiningSet {
        let members = self.members.iter().copied().filter(|&t| other.contains(t)).collect();
        DefiningSet {
            n: self.n,
            q: self.q,
            members,
        }
    }

    pub fn with(&self, t: u64) -> DefiningSet {
        let mut members = self.members.clone();
        if let Err(pos) = members.binary_search(&t) {
            members.insert(pos, t);
        }
        DefiningSet {
            n: self.n,
            q: self.q,
            members,
        }
    }

    /// Re-closes under a different alphabet size (e.g. 4-closed to 2-closed).
    pub fn closure_under(&self, q: u32) -> DefiningSet {
        DefiningSet::closure_of(self.n, q, self.members.iter().copied()).expect("members are in range")
    }

    /// Canonical coset representatives (smallest element of each q-coset).
    pub fn coset_leaders(&self) -> Vec<u64> {
        let mut seen = vec![false; self.n as usize];
        let mut leaders = Vec::new();
        for &t in &self.members {
            if seen[t as usize] {
                continue;
            }
            leaders.push(t);
            let mut x = t;
            while !seen[x as usize] {
                seen[x as usize] = true;
                x = mul_mod(x, self.q as u64, self.n);
            }
        }
        leaders
    }

    /// Maximal runs `(start, length)` of consecutive members, non-circular.
    pub fn runs(&self) -> Vec<(u64, u64)> {
        let mut out: Vec<(u64, u64)> = Vec::new();
        for &t in &self.members {
            match out.last_mut() {
                Some((s, l)) if *s + *l == t => *l += 1,
                _ => out.push((t, 1)),
            }
        }
        out
    }
}

/// Which digit weight cuts out the set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Base {
    Two,
    Four,
}

impl Base {
    pub fn radix(self) -> u32 {
        match self {
            Base::Two => 2,
            Base::Four => 4,
        }
    }

    #[inline]
    pub fn weight(self, t: u128) -> u32 {
        match self {
            Base::Two => w2(t),
            Base::Four => w4(t),
        }
    }
}

/// Code length `4^m - 1`.
pub fn code_length(m: u32) -> u64 {
    (1u64 << (2 * m)) - 1
}

/// `{1 <= t <= n-1 : weight(t) = i mod 2}` with `n = 4^m - 1`.
///
/// Base-4 sets are 4-closed; base-2 sets are 2-closed (and hence 4-closed).
pub fn defining_set(i: u32, m: u32, base: Base) -> Result<DefiningSet> {
    if m == 0 || m > 31 {
        return Err(Error::UnsupportedSize(m));
    }
    let n = code_length(m);
    let members = (1..n).filter(|&t| base.weight(t as u128) % 2 == i % 2).collect();
    Ok(DefiningSet {
        n,
        q: base.radix(),
        members,
    })
}

/// Membership of `t` (any integer) in `T(i, m)` reduced mod `n`, big-integer route.
pub fn in_t(i: u32, base: Base, t: &BigUint, n: &BigUint) -> bool {
    let r = t % n;
    if r.is_zero() {
        return false;
    }
    let wt = match base {
        Base::Two => w2_big(&r),
        Base::Four => w4_big(&r),
    };
    wt % 2 == (i % 2) as u64
}

fn big_code_length(m: u32) -> BigUint {
    (BigUint::one() << (2 * m as usize)) - BigUint::one()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GcdLemmaCheck {
    pub predicted: u32,
    pub actual: BigUint,
    pub matches: bool,
}

/// Compares `gcd(a^m + 1, a^l - 1)` with 1 (a even) or 2 (a odd), under the
/// hypothesis that `l / gcd(m, l)` is odd.
pub fn verify_gcd_lemma(a: u64, m: u32, l: u32) -> Result<GcdLemmaCheck> {
    if a < 2 || m == 0 || l == 0 {
        return Err(Error::HypothesisViolated("need a >= 2 and m, l >= 1"));
    }
    if (l / m.gcd(&l)) % 2 == 0 {
        return Err(Error::HypothesisViolated("l / gcd(m, l) must be odd"));
    }
    let base = BigUint::from(a);
    let lhs = num_traits::pow(base.clone(), m as usize) + BigUint::one();
    let rhs = num_traits::pow(base, l as usize) - BigUint::one();
    let actual = euclid(lhs, rhs);
    let predicted = if a % 2 == 0 { 1 } else { 2 };
    let matches = actual == BigUint::from(predicted);
    Ok(GcdLemmaCheck {
        predicted,
        actual,
        matches,
    })
}

fn euclid(mut a: BigUint, mut b: BigUint) -> BigUint {
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

/// Multiplier `v` and window length `a_max` for which `{a v : 1 <= a <= a_max}`
/// lies in `T(0, m)`, by residue class of `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaMultiplier {
    pub m: u32,
    pub v: BigUint,
    pub a_max: u64,
}

pub fn lemma_multiplier(m: u32) -> Result<LemmaMultiplier> {
    let four = |e: u32| BigUint::one() << (2 * e as usize);
    let (v_exp, a_exp) = match m {
        m if m % 4 == 1 && m >= 5 => ((m - 1) / 2, (m - 1) / 2),
        m if m % 4 == 3 && m >= 7 => ((m + 1) / 2, (m - 3) / 2),
        m if m % 4 == 2 && m >= 8 => ((m + 2) / 2, (m - 4) / 2),
        m if m % 8 == 4 && m >= 12 => ((m - 4) / 2, (m - 4) / 2),
        _ => {
            return Err(Error::InapplicableM {
                m,
                reason: "needs m = 1 mod 4 (m >= 5), 3 mod 4 (m >= 7), 2 mod 4 (m >= 8) or 4 mod 8 (m >= 12)",
            })
        }
    };
    if 2 * a_exp >= 64 {
        return Err(Error::InapplicableM {
            m,
            reason: "window 4^x does not fit in 64 bits",
        });
    }
    Ok(LemmaMultiplier {
        m,
        v: four(v_exp) + BigUint::one(),
        a_max: 1u64 << (2 * a_exp),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AvContainment {
    pub v: BigUint,
    pub a_max: u64,
    pub coprime: bool,
    pub contained: bool,
    /// Values of `a` with `a v mod n` outside `T(0, m)`.
    pub witnesses: Vec<u64>,
}

/// Checks `gcd(v, n) = 1` and `{a v mod n : 1 <= a <= a_max} ⊂ T(0, m)` by
/// big-integer digit arithmetic only.
pub fn verify_av_containment(m: u32) -> Result<AvContainment> {
    let lm = lemma_multiplier(m)?;
    let n = big_code_length(m);
    let coprime = lm.v.gcd(&n).is_one();
    let mut witnesses = Vec::new();
    let mut av = BigUint::zero();
    for a in 1..=lm.a_max {
        av += &lm.v;
        if !in_t(0, Base::Four, &av, &n) {
            witnesses.push(a);
        }
    }
    let contained = coprime && witnesses.is_empty();
    Ok(AvContainment {
        v: lm.v,
        a_max: lm.a_max,
        coprime,
        contained,
        witnesses,
    })
}

/// `w4(2a) = w4(a) (mod 2)` if and only if `w2(a)` is even.
pub fn verify_w2_w4_coupling(a: u128) -> bool {
    let same = w4(2 * a) % 2 == w4(a) % 2;
    let even = w2(a) % 2 == 0;
    same == even
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialTheoremCheck {
    pub v1: BigUint,
    pub v2: BigUint,
    pub a_max: u64,
    pub coprime: bool,
    /// `a v1 v2 mod n` has even base-4 weight for every `a`.
    pub contained_t40: bool,
    /// `a v1 v2 mod n` has odd base-2 weight for every `a`.
    pub contained_t21: bool,
    /// `2 a v1 v2 mod n` has odd base-4 weight for every `a`.
    pub contained_2av_t41: bool,
    /// `(a, in T4(0), in T2(1), 2a.. in T4(1))` for every failing `a`.
    pub witnesses: Vec<(u64, bool, bool, bool)>,
}

/// Multipliers `v1 = 2^((m-4)/2) - 1`, `v2 = 4^((m+2)/8) + 1` and window
/// `2^((m-14)/4)` for `m = 14 (mod 16)`, `m >= 30`.
pub fn partial_multipliers(m: u32) -> Result<(BigUint, BigUint, u64)> {
    if m % 16 != 14 || m < 30 {
        return Err(Error::InapplicableM {
            m,
            reason: "needs m = 14 mod 16 and m >= 30",
        });
    }
    let v1 = (BigUint::one() << ((m as usize - 4) / 2)) - BigUint::one();
    let v2 = (BigUint::one() << (2 * (m as usize + 2) / 8)) + BigUint::one();
    let a_exp = (m - 14) / 4;
    if a_exp >= 64 {
        return Err(Error::InapplicableM {
            m,
            reason: "window does not fit in 64 bits",
        });
    }
    Ok((v1, v2, 1u64 << a_exp))
}

pub fn verify_partial_theorem(m: u32) -> Result<PartialTheoremCheck> {
    let (v1, v2, a_max) = partial_multipliers(m)?;
    let n = big_code_length(m);
    let coprime = v1.gcd(&n).is_one() && v2.gcd(&n).is_one();
    let step = &v1 * &v2;
    let mut witnesses = Vec::new();
    let (mut c40, mut c21, mut c41) = (true, true, true);
    let mut x = BigUint::zero();
    for a in 1..=a_max {
        x += &step;
        let t40 = in_t(0, Base::Four, &x, &n);
        let t21 = in_t(1, Base::Two, &x, &n);
        let t41 = in_t(1, Base::Four, &(&x << 1usize), &n);
        c40 &= t40;
        c21 &= t21;
        c41 &= t41;
        if !(t40 && t21 && t41) {
            witnesses.push((a, t40, t21, t41));
        }
    }
    Ok(PartialTheoremCheck {
        v1,
        v2,
        a_max,
        coprime,
        contained_t40: c40,
        contained_t21: c21,
        contained_2av_t41: c41,
        witnesses,
    })
}

/// Longest run of cyclically consecutive residues (`n-1` is followed by `0`)
/// in a membership mask. A full mask has run `n`.
pub fn longest_circular_run(mask: &[bool]) -> u64 {
    let n = mask.len();
    if n == 0 {
        return 0;
    }
    if mask.iter().all(|&b| b) {
        return n as u64;
    }
    // Start scanning just after a non-member so no run straddles the start.
    let gap = mask.iter().position(|&b| !b).unwrap();
    let mut best = 0u64;
    let mut cur = 0u64;
    for k in 1..=n {
        if mask[(gap + k) % n] {
            cur += 1;
            best = best.max(cur);
        } else {
            cur = 0;
        }
    }
    best
}

pub fn longest_consecutive_run(t: &DefiningSet) -> u64 {
    longest_circular_run(&t.mask())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MultiplierRun {
    pub v: u64,
    pub run: u64,
}

impl MultiplierRun {
    /// BCH designed distance `run + 1`.
    pub fn delta(&self) -> u64 {
        self.run + 1
    }
}

/// Maximizes the circular run of `v * T mod n` over the candidates. The first
/// candidate attaining the maximum is reported; with no candidates the plain
/// run (`v = 1`) is used.
pub fn bch_multiplier_search(t: &DefiningSet, candidates: &[u64]) -> Result<MultiplierRun> {
    let n = t.n();
    let mut best = MultiplierRun {
        v: 1,
        run: longest_consecutive_run(t),
    };
    if candidates.is_empty() {
        return Ok(best);
    }
    best.run = 0;
    let mut mask = vec![false; n as usize];
    for (idx, &v) in candidates.iter().enumerate() {
        if v.gcd(&n) != 1 {
            return Err(Error::NonCoprime { value: v, modulus: n });
        }
        mask.iter_mut().for_each(|b| *b = false);
        for &s in t.members() {
            mask[mul_mod(s, v % n, n) as usize] = true;
        }
        let run = longest_circular_run(&mask);
        if idx == 0 || run > best.run {
            best = MultiplierRun { v, run };
        }
    }
    Ok(best)
}

/// All units modulo `n`.
pub fn units(n: u64) -> Vec<u64> {
    (1..n.max(2)).filter(|&v| v.gcd(&n) == 1).collect()
}

/// Largest `n` for which the default multiplier search is exhaustive.
pub const EXHAUSTIVE_SEARCH_MAX_N: u64 = 4095;

/// Default candidate list: every unit for `n <= 4095`, otherwise the inverses
/// of the lemma multiplier and of its negative (when a lemma applies).
pub fn default_candidates(m: u32) -> Vec<u64> {
    let n = code_length(m);
    if n <= EXHAUSTIVE_SEARCH_MAX_N {
        return units(n);
    }
    lemma_candidates(m)
}

/// `v^-1` and `-v^-1` mod n for the lemma multiplier `v`, if any.
pub fn lemma_candidates(m: u32) -> Vec<u64> {
    let n = code_length(m);
    match lemma_multiplier(m) {
        Ok(lm) => {
            let v = (lm.v % BigUint::from(n)).to_u64().unwrap();
            match mod_inverse(v, n) {
                Some(inv) => vec![inv, n - inv],
                None => Vec::new(),
            }
        }
        Err(_) => Vec::new(),
    }
}

/// Length of the maximal cyclic run of `{a : member(a)}` in `Z_n` that
/// contains `anchor`, walking at most `cap` steps in each direction.
/// Returns 0 if `anchor` is not a member.
pub fn run_through(n: u64, anchor: u64, cap: u64, member: impl Fn(u64) -> bool) -> u64 {
    if !member(anchor % n) {
        return 0;
    }
    let mut len = 1u64;
    let mut fwd = 0u64;
    while fwd < cap && len < n && member((anchor + fwd + 1) % n) {
        fwd += 1;
        len += 1;
    }
    let mut back = 0u64;
    while back < cap && len < n && member((anchor + n - (back + 1) % n) % n) {
        back += 1;
        len += 1;
    }
    len
}

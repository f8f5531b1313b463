//! Exact integer sequences underlying both numeration systems.
//!
//! The Fibonacci sequence here starts `f_0 = f_1 = 1`, so the weights of a
//! Fibonacci code read from the right are `f_1, f_2, f_3, ... = 1, 2, 3, 5, ...`.

use std::borrow::Cow;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::One;

use super::NumerationError;

/// Terms kept in the shared tables. `f_255` is already a 53-digit number, far
/// beyond anything a tree table can hold.
const CACHED_TERMS: usize = 256;

fn fib_table() -> &'static [BigUint] {
    static TABLE: OnceLock<Vec<BigUint>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = Vec::with_capacity(CACHED_TERMS);
        t.push(BigUint::one());
        t.push(BigUint::one());
        while t.len() < CACHED_TERMS {
            let next = &t[t.len() - 1] + &t[t.len() - 2];
            t.push(next);
        }
        t
    })
}

/// `f_n` with `f_0 = f_1 = 1` and `f_{n+2} = f_{n+1} + f_n`.
pub fn fib(n: usize) -> BigUint {
    let table = fib_table();
    if let Some(v) = table.get(n) {
        return v.clone();
    }
    let mut a = table[CACHED_TERMS - 2].clone();
    let mut b = table[CACHED_TERMS - 1].clone();
    for _ in CACHED_TERMS..=n {
        let c = &a + &b;
        a = std::mem::replace(&mut b, c);
    }
    b
}

/// Fibonacci-code weights `f_1, f_2, ..., f_len`, least significant first.
pub(crate) fn fib_weights(len: usize) -> Cow<'static, [BigUint]> {
    let table = fib_table();
    if len < CACHED_TERMS {
        return Cow::Borrowed(&table[1..=len]);
    }
    let mut w = table[1..].to_vec();
    while w.len() < len {
        let next = &w[w.len() - 1] + &w[w.len() - 2];
        w.push(next);
    }
    Cow::Owned(w)
}

/// Fibonacci-code weights `f_1 ..= f_k` where `f_k` is the largest weight not
/// exceeding `n`. Empty when `n` is zero.
pub(crate) fn fib_weights_covering(n: &BigUint) -> Cow<'static, [BigUint]> {
    let table = &fib_table()[1..];
    let k = table.partition_point(|w| w <= n);
    if k < table.len() {
        return Cow::Borrowed(&table[..k]);
    }
    let mut w = table.to_vec();
    loop {
        let next = &w[w.len() - 1] + &w[w.len() - 2];
        if &next > n {
            break;
        }
        w.push(next);
    }
    Cow::Owned(w)
}

/// A sequence `w_1, w_2, ...` obeying `w_{n+2} = 3 w_{n+1} - w_n`.
///
/// The standard instance (`w_1 = 1`, `w_2 = 3`) counts the nodes on each level
/// of the white tree and equals the odd-indexed Fibonacci numbers
/// `w_n = f_{2n-1}`. Other initial conditions are supported so that the
/// alternative `w_2 = 2` weighting can be evaluated against the black tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldenWeights {
    prefix: Vec<BigUint>,
}

impl GoldenWeights {
    /// Builds the sequence from its first two terms; requires `0 < w1 < w2`.
    pub fn new(w1: u64, w2: u64) -> Result<Self, NumerationError> {
        if w1 == 0 || w2 <= w1 {
            return Err(NumerationError::InvalidWeights { w1, w2 });
        }
        let mut prefix = Vec::with_capacity(CACHED_TERMS / 2);
        prefix.push(BigUint::from(w1));
        prefix.push(BigUint::from(w2));
        while prefix.len() < CACHED_TERMS / 2 {
            prefix.push(next_golden(&prefix));
        }
        Ok(Self { prefix })
    }

    /// The sequence `1, 3, 8, 21, 55, ...` used by every golden code.
    pub fn standard() -> &'static GoldenWeights {
        static STANDARD: OnceLock<GoldenWeights> = OnceLock::new();
        STANDARD.get_or_init(|| GoldenWeights::new(1, 3).expect("1 < 3"))
    }

    pub fn initial(&self) -> (&BigUint, &BigUint) {
        (&self.prefix[0], &self.prefix[1])
    }

    /// `w_n`, 1-indexed.
    pub fn weight(&self, n: usize) -> Result<BigUint, NumerationError> {
        if n == 0 {
            return Err(NumerationError::ZeroIndex);
        }
        if let Some(w) = self.prefix.get(n - 1) {
            return Ok(w.clone());
        }
        let mut w = self.prefix.clone();
        while w.len() < n {
            w.push(next_golden(&w));
        }
        Ok(w.pop().expect("nonempty"))
    }

    /// Weights `w_1 ..= w_len`, least significant first.
    pub(crate) fn first(&self, len: usize) -> Cow<'_, [BigUint]> {
        if len <= self.prefix.len() {
            return Cow::Borrowed(&self.prefix[..len]);
        }
        let mut w = self.prefix.clone();
        while w.len() < len {
            w.push(next_golden(&w));
        }
        Cow::Owned(w)
    }

    /// Weights `w_1 ..= w_k` with `w_k` the largest weight not exceeding `n`.
    pub(crate) fn covering(&self, n: &BigUint) -> Cow<'_, [BigUint]> {
        let k = self.prefix.partition_point(|w| w <= n);
        if k < self.prefix.len() {
            return Cow::Borrowed(&self.prefix[..k]);
        }
        let mut w = self.prefix.clone();
        loop {
            let next = next_golden(&w);
            if &next > n {
                break;
            }
            w.push(next);
        }
        Cow::Owned(w)
    }
}

fn next_golden(w: &[BigUint]) -> BigUint {
    let last = &w[w.len() - 1];
    // increasing sequence, so 3 * last > previous
    last * 3u32 - &w[w.len() - 2]
}

/// `w_n` of the standard golden sequence.
pub fn golden_weight(n: usize) -> Result<BigUint, NumerationError> {
    GoldenWeights::standard().weight(n)
}

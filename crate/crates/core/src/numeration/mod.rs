//! Fibonacci and golden numeration systems.
//!
//! Both codecs are positional, most significant digit first, with exact
//! arbitrary-precision values. Zero has no code.

mod fibonacci;
mod golden;
mod sequence;

use num_bigint::BigUint;
use thiserror::Error;

pub use fibonacci::FibCode;
pub use golden::{GoldenCode, GoldenValue, Validation};
pub use sequence::{fib, golden_weight, GoldenWeights};

use crate::report::{Check, Report};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum NumerationError {
    #[error("0 has no code; values start at 1")]
    Zero,
    #[error("weights are indexed from 1")]
    ZeroIndex,
    #[error("empty code word")]
    Empty,
    #[error("invalid digit {digit:?} at position {position}")]
    InvalidDigit { digit: char, position: usize },
    #[error("code word has a leading zero")]
    LeadingZero,
    #[error("factor \"11\" at position {position}")]
    AdjacentOnes { position: usize },
    #[error("golden code {code} is not canonical; the canonical word is {canonical}")]
    NonCanonical { code: String, canonical: String },
    #[error("the code of 1 has no predecessor")]
    NoPredecessor,
    #[error("{n} has no representation with digits 0, 1, 2 over these weights")]
    Unrepresentable { n: String },
    #[error("golden weights need 0 < w1 < w2, got w1 = {w1}, w2 = {w2}")]
    InvalidWeights { w1: u64, w2: u64 },
}

/// Values up to which order isomorphism is checked by [`verify_codecs`].
pub const ORDER_CHECK_BOUND: u64 = 100_000;

/// Indices `n` for which `w_n = f_{2n-1}` is checked by [`verify_codecs`].
pub const WEIGHT_IDENTITY_BOUND: usize = 60;

/// Exhaustive codec sweep over `1..=max_n`.
///
/// Covers round trips of both codecs, agreement of the increment/decrement
/// rewritings with arithmetic, the forbidden factors of both codecs, order
/// isomorphism (up to [`ORDER_CHECK_BOUND`]) and the golden weight identity.
pub fn verify_codecs(max_n: u64) -> Report {
    let mut report = Report::new(format!("codecs 1..={max_n}"));
    let mut fib_round = Check::new("fib_round_trip");
    let mut golden_round = Check::new("golden_round_trip");
    let mut increment = Check::new("fib_increment_rewriting");
    let mut decrement = Check::new("fib_decrement_rewriting");
    let mut no_eleven = Check::new("fib_no_factor_11");
    let mut no_two_ones_two = Check::new("golden_no_factor_2_1*_2");
    let mut fib_order = Check::new("fib_order_isomorphism");
    let mut golden_order = Check::new("golden_order_isomorphism");

    if max_n >= 1 {
        let mut fib_code = FibCode::from_u64(1).expect("1 >= 1");
        let mut golden_code = GoldenCode::from_u64(1).expect("1 >= 1");
        for n in 1..=max_n {
            let value = BigUint::from(n);
            fib_round.record(n, fib_code.decode() == value, || {
                format!("{fib_code} decodes to {}", fib_code.decode())
            });
            golden_round.record(n, golden_code.decode() == value, || {
                format!("{golden_code} decodes to {}", golden_code.decode())
            });
            no_eleven.record(
                n,
                !fib_code.digits().windows(2).any(|p| p == [1, 1]),
                || format!("{fib_code} contains 11"),
            );
            no_two_ones_two.record(n, !golden_code.contains_forbidden_pattern(), || {
                format!("{golden_code} contains 2 1* 2")
            });
            if n == max_n {
                break;
            }

            let next_value = BigUint::from(n + 1);
            let next_fib = FibCode::encode(&next_value).expect("n + 1 >= 1");
            let next_golden = GoldenCode::encode(&next_value).expect("n + 1 >= 1");
            let inc = fib_code.increment();
            increment.record(n, inc == next_fib, || {
                format!("{fib_code} + 1 rewrote to {inc}, expected {next_fib}")
            });
            match next_fib.decrement() {
                Ok(dec) => decrement.record(n + 1, dec == fib_code, || {
                    format!("{next_fib} - 1 rewrote to {dec}, expected {fib_code}")
                }),
                Err(e) => decrement.record(n + 1, false, || e.to_string()),
            }
            if n < ORDER_CHECK_BOUND {
                fib_order.record(n, fib_code < next_fib, || {
                    format!("{fib_code} !< {next_fib}")
                });
                golden_order.record(n, golden_code < next_golden, || {
                    format!("{golden_code} !< {next_golden}")
                });
            }
            fib_code = next_fib;
            golden_code = next_golden;
        }
    }

    let mut identity = Check::new("golden_weight_is_odd_fibonacci");
    for n in 1..=WEIGHT_IDENTITY_BOUND {
        let w = golden_weight(n).expect("n >= 1");
        let f = fib(2 * n - 1);
        identity.record(n as u64, w == f, || {
            format!("w_{n} = {w}, f_{} = {f}", 2 * n - 1)
        });
    }

    for c in [
        fib_round,
        golden_round,
        increment,
        decrement,
        no_eleven,
        no_two_ones_two,
        fib_order,
        golden_order,
        identity,
    ] {
        report.push(c);
    }
    report
}

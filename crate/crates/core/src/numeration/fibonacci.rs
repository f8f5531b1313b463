//! Fibonacci (Zeckendorf) codes.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use super::sequence::{fib_weights, fib_weights_covering};
use super::NumerationError;

/// A Zeckendorf code word: binary digits, most significant first, with a
/// leading `1` and no factor `11`.
///
/// The digit read last carries weight `f_1 = 1`, the one before it `f_2 = 2`,
/// then `3, 5, 8, ...`. Codes order by length first, then lexicographically,
/// which matches the order of the values they represent.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FibCode(Vec<u8>);

impl FibCode {
    /// Greedy largest-weight-first representation of `n`.
    pub fn encode(n: &BigUint) -> Result<Self, NumerationError> {
        if n.is_zero() {
            return Err(NumerationError::Zero);
        }
        let weights = fib_weights_covering(n);
        let mut rest = n.clone();
        let mut digits = Vec::with_capacity(weights.len());
        for w in weights.iter().rev() {
            if *w <= rest {
                rest -= w;
                digits.push(1);
            } else {
                digits.push(0);
            }
        }
        debug_assert!(rest.is_zero());
        Ok(Self(digits))
    }

    pub fn from_u64(n: u64) -> Result<Self, NumerationError> {
        Self::encode(&BigUint::from(n))
    }

    /// Validates a digit vector (most significant first).
    pub fn from_digits(digits: Vec<u8>) -> Result<Self, NumerationError> {
        match digits.first() {
            None => return Err(NumerationError::Empty),
            Some(0) => return Err(NumerationError::LeadingZero),
            _ => {}
        }
        for (position, &d) in digits.iter().enumerate() {
            if d > 1 {
                return Err(NumerationError::InvalidDigit {
                    digit: char::from_digit(u32::from(d), 36).unwrap_or('?'),
                    position,
                });
            }
            if d == 1 && position > 0 && digits[position - 1] == 1 {
                return Err(NumerationError::AdjacentOnes {
                    position: position - 1,
                });
            }
        }
        Ok(Self(digits))
    }

    pub fn decode(&self) -> BigUint {
        let weights = fib_weights(self.0.len());
        self.0
            .iter()
            .rev()
            .zip(weights.iter())
            .filter(|(&d, _)| d == 1)
            .fold(BigUint::zero(), |acc, (_, w)| acc + w)
    }

    /// The decoded value, when it fits in a `u64`.
    pub fn to_u64(&self) -> Option<u64> {
        self.decode().to_u64()
    }

    pub fn digits(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn ends_with(&self, suffix: &[u8]) -> bool {
        self.0.ends_with(suffix)
    }

    /// Number of trailing zeros.
    pub fn trailing_zeros(&self) -> usize {
        self.0.iter().rev().take_while(|&&d| d == 0).count()
    }

    /// The code followed by `count` zeros (value shifted in the numeration).
    pub fn append_zeros(&self, count: usize) -> Self {
        let mut digits = self.0.clone();
        digits.resize(digits.len() + count, 0);
        Self(digits)
    }

    /// The code of the next integer, obtained by local rewriting.
    ///
    /// A trailing `0(01)^n` becomes `010(00)^(n-1)`, and a trailing
    /// `00(10)^n` becomes `01(00)^n`: the carry generated by a `11` runs left
    /// until it reaches a `0` preceded by a `0`, which it turns into `1`.
    /// Two zeros of padding in front of the leading `1` guarantee such a
    /// position exists.
    pub fn increment(&self) -> Self {
        let mut d = Vec::with_capacity(self.0.len() + 2);
        d.extend_from_slice(&[0, 0]);
        d.extend_from_slice(&self.0);
        let len = d.len();
        let mut i = len;
        if d[len - 1] == 1 {
            while i >= 2 && d[i - 2] == 0 && d[i - 1] == 1 {
                i -= 2;
            }
            // d[i - 1] is the 0 in front of (01)^n
            d[i - 1] = 0;
            d[i] = 1;
            d[i + 1..].fill(0);
        } else {
            while i >= 2 && d[i - 2] == 1 && d[i - 1] == 0 {
                i -= 2;
            }
            // d[i - 2..i] is the 00 in front of (10)^n
            d[i - 1] = 1;
            d[i..].fill(0);
        }
        Self(strip_leading_zeros(d))
    }

    /// The code of the previous integer, obtained by local rewriting.
    ///
    /// The rightmost `1` becomes `0`. The `m` zeros after it become the
    /// alternating word `1010...` of length `m`, so that an even run of `00`
    /// blocks turns into `10` blocks and an odd one ends in a lone `1`.
    pub fn decrement(&self) -> Result<Self, NumerationError> {
        if self.0 == [1] {
            return Err(NumerationError::NoPredecessor);
        }
        let mut d = self.0.clone();
        let last_one = d.iter().rposition(|&x| x == 1).expect("leading digit is 1");
        d[last_one] = 0;
        for (offset, digit) in d[last_one + 1..].iter_mut().enumerate() {
            *digit = u8::from(offset % 2 == 0);
        }
        Ok(Self(strip_leading_zeros(d)))
    }
}

fn strip_leading_zeros(mut d: Vec<u8>) -> Vec<u8> {
    let first = d.iter().position(|&x| x != 0).unwrap_or(d.len());
    d.drain(..first);
    d
}

impl Ord for FibCode {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for FibCode {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for FibCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &d in &self.0 {
            f.write_str(if d == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for FibCode {
    type Err = NumerationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let digits = s
            .chars()
            .enumerate()
            .map(|(position, c)| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                digit => Err(NumerationError::InvalidDigit { digit, position }),
            })
            .collect::<Result<Vec<u8>, _>>()?;
        Self::from_digits(digits)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(s: &str) -> FibCode {
        s.parse().unwrap()
    }

    /// All 11-free words of exactly `len` digits with a leading 1.
    fn words(len: usize) -> Vec<Vec<u8>> {
        let mut out = Vec::new();
        for bits in 0u32..(1 << len) {
            let w: Vec<u8> = (0..len).rev().map(|i| ((bits >> i) & 1) as u8).collect();
            if w[0] == 1 && !w.windows(2).any(|p| p == [1, 1]) {
                out.push(w);
            }
        }
        out
    }

    fn weighted(w: &[u8]) -> u64 {
        let mut f = (1u64, 2u64);
        let mut s = 0;
        for &d in w.iter().rev() {
            s += u64::from(d) * f.0;
            f = (f.1, f.0 + f.1);
        }
        s
    }

    #[test]
    fn brute_force_encode_values() {
        // oracle: the unique word among all 11-free words of length <= 5
        let find = |n: u64| -> String {
            let hits: Vec<_> = (1..=5)
                .flat_map(words)
                .filter(|w| weighted(w) == n)
                .collect();
            assert_eq!(hits.len(), 1, "{n} should have one 11-free word");
            hits[0].iter().map(|d| char::from(b'0' + d)).collect()
        };
        assert_eq!(find(5), "1000");
        assert_eq!(find(12), "10101");
        assert_eq!(FibCode::from_u64(1).unwrap().to_string(), "1");
        assert_eq!(FibCode::from_u64(5).unwrap().to_string(), "1000");
        assert_eq!(FibCode::from_u64(12).unwrap().to_string(), "10101");
    }

    #[test]
    fn every_short_word_decodes_to_its_weighted_sum() {
        for len in 1..=12 {
            for w in words(len) {
                let c = FibCode::from_digits(w.clone()).unwrap();
                assert_eq!(c.to_u64(), Some(weighted(&w)));
                assert_eq!(FibCode::from_u64(weighted(&w)).unwrap(), c);
            }
        }
    }

    #[test]
    fn decode_examples() {
        assert_eq!(code("1").to_u64(), Some(1));
        assert_eq!(code("10000").to_u64(), Some(8));
        assert_eq!(code("10101").to_u64(), Some(12));
    }

    #[test]
    fn rejects_zero_and_bad_words() {
        assert_eq!(FibCode::from_u64(0), Err(NumerationError::Zero));
        assert_eq!("".parse::<FibCode>(), Err(NumerationError::Empty));
        assert_eq!("0101".parse::<FibCode>(), Err(NumerationError::LeadingZero));
        assert_eq!(
            "10110".parse::<FibCode>(),
            Err(NumerationError::AdjacentOnes { position: 2 })
        );
        assert_eq!(
            "1021".parse::<FibCode>(),
            Err(NumerationError::InvalidDigit {
                digit: '2',
                position: 2
            })
        );
    }

    #[test]
    fn increment_examples() {
        assert_eq!(code("1").increment(), code("10"));
        assert_eq!(code("100001").increment(), code("100010"));
        assert_eq!(code("100101").increment(), code("101000"));
        assert_eq!(code("101").increment(), code("1000"));
        assert_eq!(code("10101").increment(), code("100000"));
    }

    #[test]
    fn decrement_examples() {
        assert_eq!(code("101").decrement().unwrap(), code("100"));
        assert_eq!(code("10000").decrement().unwrap(), code("1010"));
        assert_eq!(code("10").decrement().unwrap(), code("1"));
        assert_eq!(code("1000").decrement().unwrap(), code("101"));
        assert_eq!(code("1").decrement(), Err(NumerationError::NoPredecessor));
    }

    #[test]
    fn rewriting_matches_arithmetic() {
        let mut c = FibCode::from_u64(1).unwrap();
        for n in 1u64..20_000 {
            let next = c.increment();
            assert_eq!(next.to_u64(), Some(n + 1));
            assert_eq!(next.decrement().unwrap(), c);
            c = next;
        }
    }

    #[test]
    fn order_is_length_then_lexicographic() {
        assert!(code("1010") < code("10000"));
        assert!(code("10001") < code("10010"));
        let mut v: Vec<_> = (1..500).map(|n| FibCode::from_u64(n).unwrap()).collect();
        let sorted = v.clone();
        v.reverse();
        v.sort();
        assert_eq!(v, sorted);
    }

    #[test]
    fn append_zeros_and_endings() {
        let c = code("1001");
        assert_eq!(c.append_zeros(2).to_string(), "100100");
        assert!(c.ends_with(&[0, 1]));
        assert_eq!(code("10100").trailing_zeros(), 2);
    }
}

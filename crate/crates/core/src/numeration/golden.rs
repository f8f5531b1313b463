//! Golden codes: digits `0..=2` over the weights `1, 3, 8, 21, ...`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use super::sequence::GoldenWeights;
use super::NumerationError;

/// A golden code word, most significant digit first, leading digit nonzero.
///
/// Representations over `{0, 1, 2}` are not unique, so a parsed word may be
/// non-canonical. [`GoldenCode::encode`] always yields the canonical word:
/// the greedy largest-weight-first representation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GoldenCode(Vec<u8>);

/// Whether [`GoldenCode::decode_checked`] accepts non-canonical words.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Validation {
    Strict,
    #[default]
    Lenient,
}

/// A decoded golden code together with its canonicality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldenValue {
    pub value: BigUint,
    pub canonical: bool,
}

impl GoldenWeights {
    /// Greedy representation of `n` over these weights.
    pub fn encode(&self, n: &BigUint) -> Result<GoldenCode, NumerationError> {
        if n.is_zero() {
            return Err(NumerationError::Zero);
        }
        let weights = self.covering(n);
        let mut rest = n.clone();
        let mut digits = Vec::with_capacity(weights.len());
        for w in weights.iter().rev() {
            // rest < next weight <= 3w, so at most two copies fit
            let mut digit = 0;
            while digit < 2 && *w <= rest {
                rest -= w;
                digit += 1;
            }
            digits.push(digit);
        }
        if !rest.is_zero() {
            return Err(NumerationError::Unrepresentable { n: n.to_string() });
        }
        Ok(GoldenCode(digits))
    }

    pub fn decode(&self, code: &GoldenCode) -> BigUint {
        let weights = self.first(code.0.len());
        code.0
            .iter()
            .rev()
            .zip(weights.iter())
            .fold(BigUint::zero(), |acc, (&d, w)| match d {
                0 => acc,
                1 => acc + w,
                _ => acc + w * 2u32,
            })
    }
}

impl GoldenCode {
    pub fn encode(n: &BigUint) -> Result<Self, NumerationError> {
        GoldenWeights::standard().encode(n)
    }

    pub fn from_u64(n: u64) -> Result<Self, NumerationError> {
        Self::encode(&BigUint::from(n))
    }

    /// Checks digits and the leading digit; canonicality is not required.
    pub fn from_digits(digits: Vec<u8>) -> Result<Self, NumerationError> {
        match digits.first() {
            None => return Err(NumerationError::Empty),
            Some(0) => return Err(NumerationError::LeadingZero),
            _ => {}
        }
        if let Some(position) = digits.iter().position(|&d| d > 2) {
            return Err(NumerationError::InvalidDigit {
                digit: char::from_digit(u32::from(digits[position]), 36).unwrap_or('?'),
                position,
            });
        }
        Ok(Self(digits))
    }

    /// Value over the standard weights.
    pub fn decode(&self) -> BigUint {
        GoldenWeights::standard().decode(self)
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.decode().to_u64()
    }

    /// Decodes, rejecting non-canonical words under [`Validation::Strict`].
    pub fn decode_checked(&self, validation: Validation) -> Result<GoldenValue, NumerationError> {
        let value = self.decode();
        let canonical_code = Self::encode(&value)?;
        let canonical = canonical_code == *self;
        if !canonical && validation == Validation::Strict {
            return Err(NumerationError::NonCanonical {
                code: self.to_string(),
                canonical: canonical_code.to_string(),
            });
        }
        Ok(GoldenValue { value, canonical })
    }

    pub fn is_canonical(&self) -> bool {
        Self::encode(&self.decode()).is_ok_and(|c| c == *self)
    }

    /// True if the word contains `2 1* 2`: two 2s separated by 1s only.
    pub fn contains_forbidden_pattern(&self) -> bool {
        let mut after_two = false;
        for &d in &self.0 {
            match d {
                2 if after_two => return true,
                2 => after_two = true,
                1 => {}
                _ => after_two = false,
            }
        }
        false
    }

    pub fn digits(&self) -> &[u8] {
        &self.0
    }

    pub fn last_digit(&self) -> u8 {
        *self.0.last().expect("codes are nonempty")
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

    pub fn append_zero(&self) -> Self {
        let mut digits = self.0.clone();
        digits.push(0);
        Self(digits)
    }
}

impl Ord for GoldenCode {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for GoldenCode {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for GoldenCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &d in &self.0 {
            f.write_str(match d {
                0 => "0",
                1 => "1",
                _ => "2",
            })?;
        }
        Ok(())
    }
}

impl FromStr for GoldenCode {
    type Err = NumerationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let digits = s
            .chars()
            .enumerate()
            .map(|(position, c)| match c.to_digit(10) {
                Some(d @ 0..=2) => Ok(d as u8),
                _ => Err(NumerationError::InvalidDigit { digit: c, position }),
            })
            .collect::<Result<Vec<u8>, _>>()?;
        Self::from_digits(digits)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(s: &str) -> GoldenCode {
        s.parse().unwrap()
    }

    /// Every word over {0,1,2} of length <= `max_len` (leading digit nonzero)
    /// whose value over 1, 3, 8, 21, ... equals `n`.
    fn all_words_for(n: u64, max_len: u32) -> Vec<String> {
        let weights = [1u64, 3, 8, 21, 55, 144];
        let mut out = Vec::new();
        for len in 1..=max_len {
            for idx in 0..3u64.pow(len) {
                let mut digits = Vec::new();
                let mut x = idx;
                for _ in 0..len {
                    digits.push(x % 3);
                    x /= 3;
                }
                // digits are least significant first here
                if digits[len as usize - 1] == 0 {
                    continue;
                }
                let v: u64 = digits.iter().zip(weights).map(|(d, w)| d * w).sum();
                if v == n {
                    out.push(digits.iter().rev().map(|d| d.to_string()).collect());
                }
            }
        }
        out
    }

    /// Greedy oracle: the largest word under length-then-lexicographic order.
    fn greedy_by_search(n: u64, max_len: u32) -> String {
        let mut words = all_words_for(n, max_len);
        let max = words.iter().map(String::len).max().unwrap();
        words.retain(|w| w.len() == max);
        words.sort();
        words.pop().unwrap()
    }

    #[test]
    fn encode_examples_match_search() {
        assert_eq!(greedy_by_search(12, 3), "111");
        assert_eq!(greedy_by_search(14, 3), "120");
        assert_eq!(GoldenCode::from_u64(1).unwrap().to_string(), "1");
        assert_eq!(GoldenCode::from_u64(12).unwrap().to_string(), "111");
        assert_eq!(GoldenCode::from_u64(14).unwrap().to_string(), "120");
    }

    #[test]
    fn greedy_is_maximal_word_for_small_values() {
        for n in 1..=80 {
            assert_eq!(
                GoldenCode::from_u64(n).unwrap().to_string(),
                greedy_by_search(n, 5),
                "n = {n}"
            );
        }
    }

    #[test]
    fn representations_are_not_unique() {
        // 29 = 21 + 8 = 21 + 2*3 + 2*1
        let words = all_words_for(29, 4);
        assert!(words.contains(&"1100".to_string()));
        assert!(words.contains(&"1022".to_string()));
        assert!(words.len() > 1);
    }

    #[test]
    fn decode_examples() {
        assert_eq!(code("1").to_u64(), Some(1));
        assert_eq!(code("1000").to_u64(), Some(21));
        assert_eq!(code("210").to_u64(), Some(19));
    }

    #[test]
    fn strict_and_lenient_decoding() {
        let non_canonical = code("1022");
        assert_eq!(non_canonical.to_u64(), Some(29));
        let lenient = non_canonical.decode_checked(Validation::Lenient).unwrap();
        assert_eq!(lenient.value, BigUint::from(29u32));
        assert!(!lenient.canonical);
        assert_eq!(
            non_canonical.decode_checked(Validation::Strict),
            Err(NumerationError::NonCanonical {
                code: "1022".into(),
                canonical: "1100".into()
            })
        );
        assert!(
            code("1100")
                .decode_checked(Validation::Strict)
                .unwrap()
                .canonical
        );
    }

    #[test]
    fn forbidden_pattern_scan() {
        assert!(code("22").contains_forbidden_pattern());
        assert!(code("2112").contains_forbidden_pattern());
        assert!(code("12110212").contains_forbidden_pattern());
        assert!(!code("202").contains_forbidden_pattern());
        assert!(!code("2101102").contains_forbidden_pattern());
    }

    #[test]
    fn invalid_words() {
        assert_eq!("".parse::<GoldenCode>(), Err(NumerationError::Empty));
        assert_eq!(
            "012".parse::<GoldenCode>(),
            Err(NumerationError::LeadingZero)
        );
        assert_eq!(
            "13".parse::<GoldenCode>(),
            Err(NumerationError::InvalidDigit {
                digit: '3',
                position: 1
            })
        );
        assert_eq!(GoldenCode::from_u64(0), Err(NumerationError::Zero));
    }

    #[test]
    fn alternative_weights_round_trip() {
        let w = GoldenWeights::new(1, 2).unwrap();
        for n in 1u64..2000 {
            let c = w.encode(&BigUint::from(n)).unwrap();
            assert_eq!(w.decode(&c), BigUint::from(n));
        }
    }

    #[test]
    fn gaps_too_wide_are_reported() {
        let w = GoldenWeights::new(1, 4).unwrap();
        assert_eq!(
            w.encode(&BigUint::from(3u32)),
            Err(NumerationError::Unrepresentable { n: "3".into() })
        );
    }
}

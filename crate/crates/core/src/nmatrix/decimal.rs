use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use super::Entry;
use crate::neutro::{split_terms, NeutroValue, ParseValueError};

/// A matrix entry with terminating-decimal parts, e.g. `.3`, `-.6`, `.2I`.
///
/// Only used to classify fuzzy matrices; the inference engines work on
/// [`NeutroValue`] and reject these.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DecimalValue {
    pub real: Ratio<i64>,
    pub indet: Ratio<i64>,
}

impl DecimalValue {
    pub fn new(real: Ratio<i64>, indet: Ratio<i64>) -> Self {
        Self { real, indet }
    }

    /// The integral value, if both parts are whole numbers.
    pub fn to_integral(self) -> Option<NeutroValue> {
        (self.real.is_integer() && self.indet.is_integer())
            .then(|| NeutroValue::new(self.real.to_integer(), self.indet.to_integer()))
    }
}

impl From<NeutroValue> for DecimalValue {
    fn from(v: NeutroValue) -> Self {
        Self::new(Ratio::from_integer(v.real), Ratio::from_integer(v.indet))
    }
}

fn unit_interval(x: Ratio<i64>) -> bool {
    x >= Ratio::from_integer(0) && x <= Ratio::from_integer(1)
}

impl Entry for DecimalValue {
    fn is_zero(&self) -> bool {
        self.real == Ratio::from_integer(0) && self.indet == Ratio::from_integer(0)
    }
    fn is_indeterminate(&self) -> bool {
        self.indet != Ratio::from_integer(0)
    }
    fn is_fuzzy(&self) -> bool {
        !self.is_indeterminate() && unit_interval(self.real)
    }
    fn is_fuzzy_neutrosophic(&self) -> bool {
        unit_interval(self.real) && unit_interval(self.indet)
    }
}

fn parse_decimal(s: &str) -> Option<Ratio<i64>> {
    let (neg, body) = match s.as_bytes().first()? {
        b'-' => (true, &s[1..]),
        b'+' => (false, &s[1..]),
        _ => (false, s),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if int.is_empty() && frac.is_empty() {
        return None;
    }
    if !int.bytes().chain(frac.bytes()).all(|b| b.is_ascii_digit()) {
        return None;
    }
    let scale = 10i64.checked_pow(frac.len() as u32)?;
    let int: i64 = if int.is_empty() { 0 } else { int.parse().ok()? };
    let frac_val: i64 = if frac.is_empty() { 0 } else { frac.parse().ok()? };
    let numer = int.checked_mul(scale)?.checked_add(frac_val)?;
    let r = Ratio::new(numer, scale);
    Some(if neg { -r } else { r })
}

fn parse_decimal_coeff(s: &str) -> Option<Ratio<i64>> {
    match s {
        "" | "+" => Some(Ratio::from_integer(1)),
        "-" => Some(Ratio::from_integer(-1)),
        _ => parse_decimal(s),
    }
}

impl FromStr for DecimalValue {
    type Err = ParseValueError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseValueError(s.to_string());
        let (real, coeff) = split_terms(s).ok_or_else(err)?;
        let real = match real {
            Some(r) => parse_decimal(r).ok_or_else(err)?,
            None => Ratio::from_integer(0),
        };
        let indet = match coeff {
            Some(c) => parse_decimal_coeff(c).ok_or_else(err)?,
            None => Ratio::from_integer(0),
        };
        Ok(Self { real, indet })
    }
}

fn write_decimal(f: &mut fmt::Formatter<'_>, x: Ratio<i64>) -> fmt::Result {
    if x.is_integer() {
        return write!(f, "{}", x.to_integer());
    }
    let neg = x < Ratio::from_integer(0);
    let x = if neg { -x } else { x };
    let int = x.trunc().to_integer();
    let mut frac = x.fract();
    let mut digits = String::new();
    // Parsed values have power-of-ten denominators, so this terminates.
    while frac != Ratio::from_integer(0) && digits.len() < 18 {
        frac *= 10;
        let d = frac.trunc().to_integer();
        digits.push(char::from(b'0' + d as u8));
        frac = frac.fract();
    }
    if neg {
        f.write_str("-")?;
    }
    if int != 0 {
        write!(f, "{int}")?;
    }
    write!(f, ".{digits}")
}

impl fmt::Display for DecimalValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let zero = Ratio::from_integer(0);
        let one = Ratio::from_integer(1);
        let write_coeff = |f: &mut fmt::Formatter<'_>, c: Ratio<i64>| -> fmt::Result {
            if c == one {
                f.write_str("I")
            } else if c == -one {
                f.write_str("-I")
            } else {
                write_decimal(f, c)?;
                f.write_str("I")
            }
        };
        if self.indet == zero {
            return write_decimal(f, self.real);
        }
        if self.real != zero {
            write_decimal(f, self.real)?;
            if self.indet > zero {
                f.write_str("+")?;
            }
        }
        write_coeff(f, self.indet)
    }
}

impl Serialize for DecimalValue {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for DecimalValue {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dv(s: &str) -> DecimalValue {
        s.parse().unwrap()
    }

    #[test]
    fn reads_decimal_tokens() {
        assert_eq!(dv(".3").real, Ratio::new(3, 10));
        assert_eq!(dv("-.6").real, Ratio::new(-6, 10));
        assert_eq!(dv(".2I").indet, Ratio::new(2, 10));
        assert_eq!(dv("0.25").real, Ratio::new(1, 4));
        assert_eq!(dv("I"), DecimalValue::from(NeutroValue::I));
        assert_eq!(dv("2+I").to_integral(), Some(NeutroValue::new(2, 1)));
        assert_eq!(dv(".5").to_integral(), None);
        for bad in [".", "-", "1..2", "a", ".I.", "1e3"] {
            assert!(bad.parse::<DecimalValue>().is_err(), "{bad}");
        }
    }

    #[test]
    fn display_round_trips() {
        for s in [".3", "-.6", ".2I", "0", "1", "I", "2+I", ".25", "1.5-.5I", "-I", "3"] {
            let v = dv(s);
            assert_eq!(dv(&v.to_string()), v, "{s}");
        }
        assert_eq!(dv("0.30").to_string(), ".3");
    }

    #[test]
    fn entry_predicates() {
        assert!(dv(".7").is_fuzzy());
        assert!(!dv("-.6").is_fuzzy());
        assert!(!dv("2").is_fuzzy());
        assert!(dv(".2I").is_fuzzy_neutrosophic());
        assert!(dv("I").is_fuzzy_neutrosophic());
        assert!(!dv("2I").is_fuzzy_neutrosophic());
        assert!(!dv("-.6").is_fuzzy_neutrosophic());
    }
}

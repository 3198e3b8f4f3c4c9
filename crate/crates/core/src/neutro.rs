//! Exact neutrosophic scalars `a + bI` with `I * I = I`, and the
//! thresholding rule shared by every inference engine.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A value `real + indet * I` with exact integer parts.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NeutroValue {
    pub real: i64,
    pub indet: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("neutrosophic arithmetic overflow")]
pub struct Overflow;

impl NeutroValue {
    pub const ZERO: Self = Self::new(0, 0);
    pub const ONE: Self = Self::new(1, 0);
    pub const NEG_ONE: Self = Self::new(-1, 0);
    pub const I: Self = Self::new(0, 1);

    pub const fn new(real: i64, indet: i64) -> Self {
        Self { real, indet }
    }

    pub const fn real(real: i64) -> Self {
        Self::new(real, 0)
    }

    pub fn is_zero(self) -> bool {
        self == Self::ZERO
    }

    pub fn is_indeterminate(self) -> bool {
        self.indet != 0
    }

    pub fn checked_add(self, rhs: Self) -> Result<Self, Overflow> {
        Ok(Self {
            real: self.real.checked_add(rhs.real).ok_or(Overflow)?,
            indet: self.indet.checked_add(rhs.indet).ok_or(Overflow)?,
        })
    }

    /// `(a+bI)(c+dI) = ac + (ad + bc + bd)I`.
    pub fn checked_mul(self, rhs: Self) -> Result<Self, Overflow> {
        let (a, b, c, d) = (self.real, self.indet, rhs.real, rhs.indet);
        let ac = a.checked_mul(c).ok_or(Overflow)?;
        let ad = a.checked_mul(d).ok_or(Overflow)?;
        let bc = b.checked_mul(c).ok_or(Overflow)?;
        let bd = b.checked_mul(d).ok_or(Overflow)?;
        let indet = ad.checked_add(bc).and_then(|s| s.checked_add(bd)).ok_or(Overflow)?;
        Ok(Self { real: ac, indet })
    }
}

impl Add for NeutroValue {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.checked_add(rhs).expect("neutrosophic addition overflow")
    }
}

impl Sub for NeutroValue {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for NeutroValue {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.checked_mul(rhs).expect("neutrosophic multiplication overflow")
    }
}

impl Neg for NeutroValue {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.real, -self.indet)
    }
}

impl Sum for NeutroValue {
    fn sum<It: Iterator<Item = Self>>(iter: It) -> Self {
        iter.fold(Self::ZERO, Add::add)
    }
}

impl From<i64> for NeutroValue {
    fn from(real: i64) -> Self {
        Self::real(real)
    }
}

fn write_coefficient(f: &mut fmt::Formatter<'_>, coeff: i64) -> fmt::Result {
    match coeff {
        1 => f.write_str("I"),
        -1 => f.write_str("-I"),
        c => write!(f, "{c}I"),
    }
}

impl fmt::Display for NeutroValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.real, self.indet) {
            (r, 0) => write!(f, "{r}"),
            (0, b) => write_coefficient(f, b),
            (r, b) => {
                write!(f, "{r}")?;
                if b > 0 {
                    f.write_str("+")?;
                }
                write_coefficient(f, b)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("malformed neutrosophic value `{0}`")]
pub struct ParseValueError(pub String);

/// Splits `s` into an optional real term and an optional `I` term.
///
/// Accepted shapes: `a`, `bI`, `I`, `-I`, `a+bI`, `a-bI`, `a+I`. Shared with
/// the decimal reader in [`crate::nmatrix::DecimalValue`].
pub(crate) fn split_terms(s: &str) -> Option<(Option<&str>, Option<&str>)> {
    if s.is_empty() {
        return None;
    }
    let Some(body) = s.strip_suffix('I') else {
        return Some((Some(s), None));
    };
    // Find the sign that starts the I term (not the leading sign).
    let split = body
        .char_indices()
        .skip(1)
        .filter(|&(_, c)| c == '+' || c == '-')
        .map(|(i, _)| i)
        .last();
    match split {
        Some(i) => {
            let (real, coeff) = body.split_at(i);
            Some((Some(real), Some(coeff)))
        }
        None => Some((None, Some(body))),
    }
}

fn parse_int(s: &str) -> Option<i64> {
    let digits = s.strip_prefix(['+', '-']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

fn parse_coeff(s: &str) -> Option<i64> {
    match s {
        "" | "+" => Some(1),
        "-" => Some(-1),
        _ => parse_int(s),
    }
}

impl FromStr for NeutroValue {
    type Err = ParseValueError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseValueError(s.to_string());
        let (real, coeff) = split_terms(s).ok_or_else(err)?;
        let real = match real {
            Some(r) => parse_int(r).ok_or_else(err)?,
            None => 0,
        };
        let indet = match coeff {
            Some(c) => parse_coeff(c).ok_or_else(err)?,
            None => 0,
        };
        Ok(Self { real, indet })
    }
}

impl Serialize for NeutroValue {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for NeutroValue {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The three values a node can hold after thresholding.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NodeState {
    #[default]
    Off,
    On,
    Indeterminate,
}

impl NodeState {
    pub fn value(self) -> NeutroValue {
        match self {
            NodeState::Off => NeutroValue::ZERO,
            NodeState::On => NeutroValue::ONE,
            NodeState::Indeterminate => NeutroValue::I,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            NodeState::Off => "0",
            NodeState::On => "1",
            NodeState::Indeterminate => "I",
        }
    }
}

impl From<NodeState> for NeutroValue {
    fn from(s: NodeState) -> Self {
        s.value()
    }
}

impl fmt::Display for NodeState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for NodeState {
    type Err = ParseValueError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "0" => Ok(NodeState::Off),
            "1" => Ok(NodeState::On),
            "I" => Ok(NodeState::Indeterminate),
            _ => Err(ParseValueError(s.to_string())),
        }
    }
}

impl Serialize for NodeState {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.symbol())
    }
}

impl<'de> Deserialize<'de> for NodeState {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ThresholdMode {
    /// A real part of at least `k` switches the node on, whatever its `I` part.
    #[default]
    #[serde(rename = "real")]
    RealDominant,
    /// An `I` part of at least `k` that exceeds the real part wins.
    #[serde(rename = "indet")]
    IndetDominant,
}

impl fmt::Display for ThresholdMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ThresholdMode::RealDominant => "real",
            ThresholdMode::IndetDominant => "indet",
        })
    }
}

impl FromStr for ThresholdMode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "real" => Ok(ThresholdMode::RealDominant),
            "indet" => Ok(ThresholdMode::IndetDominant),
            other => Err(format!("unknown threshold mode `{other}` (expected real or indet)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("threshold constant must be at least 1")]
pub struct InvalidThreshold;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawPolicy", into = "RawPolicy")]
pub struct ThresholdPolicy {
    k: i64,
    mode: ThresholdMode,
}

#[derive(Serialize, Deserialize)]
struct RawPolicy {
    k: i64,
    mode: ThresholdMode,
}

impl TryFrom<RawPolicy> for ThresholdPolicy {
    type Error = InvalidThreshold;
    fn try_from(raw: RawPolicy) -> Result<Self, Self::Error> {
        ThresholdPolicy::new(raw.k, raw.mode)
    }
}

impl From<ThresholdPolicy> for RawPolicy {
    fn from(p: ThresholdPolicy) -> Self {
        RawPolicy { k: p.k, mode: p.mode }
    }
}

impl Default for ThresholdPolicy {
    fn default() -> Self {
        Self {
            k: 1,
            mode: ThresholdMode::RealDominant,
        }
    }
}

impl ThresholdPolicy {
    pub fn new(k: i64, mode: ThresholdMode) -> Result<Self, InvalidThreshold> {
        if k < 1 {
            return Err(InvalidThreshold);
        }
        Ok(Self { k, mode })
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn mode(&self) -> ThresholdMode {
        self.mode
    }

    pub fn with_k(self, k: i64) -> Result<Self, InvalidThreshold> {
        Self::new(k, self.mode)
    }

    pub fn with_mode(self, mode: ThresholdMode) -> Self {
        Self { mode, ..self }
    }

    pub fn apply(&self, v: NeutroValue) -> NodeState {
        threshold_scalar(v, *self)
    }
}

pub fn threshold_scalar(v: NeutroValue, p: ThresholdPolicy) -> NodeState {
    if p.mode == ThresholdMode::IndetDominant && v.indet >= p.k && v.indet > v.real {
        return NodeState::Indeterminate;
    }
    if v.real >= p.k {
        NodeState::On
    } else if v.indet != 0 {
        NodeState::Indeterminate
    } else {
        NodeState::Off
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn nv(s: &str) -> NeutroValue {
        s.parse().unwrap()
    }

    #[test]
    fn renders_canonical_tokens() {
        let cases = [
            ((0, 0), "0"),
            ((1, 0), "1"),
            ((-1, 0), "-1"),
            ((0, 1), "I"),
            ((0, -1), "-I"),
            ((2, 1), "2+I"),
            ((0, 2), "2I"),
            ((-1, 1), "-1+I"),
            ((3, -2), "3-2I"),
        ];
        for ((r, i), text) in cases {
            let v = NeutroValue::new(r, i);
            assert_eq!(v.to_string(), text);
            assert_eq!(nv(text), v);
        }
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "II", "2+", "x", "1.5", "I2", "+-1", "2+3", "--I"] {
            assert!(bad.parse::<NeutroValue>().is_err(), "{bad}");
        }
    }

    #[test]
    fn sums_match_trace_values() {
        assert_eq!(nv("1") + nv("1+I"), nv("2+I"));
        assert_eq!(nv("1") + nv("-1"), NeutroValue::ZERO);
        assert_eq!(nv("4") + nv("I") + NeutroValue::I * NeutroValue::I, nv("4+2I"));
    }

    #[test]
    fn i_squared_is_i() {
        assert_eq!(NeutroValue::I * NeutroValue::I, NeutroValue::I);
        assert_eq!(nv("1+I") * NeutroValue::NEG_ONE, nv("-1-I"));
    }

    // Brute-force oracle: expand (a+bI)(c+dI) as a polynomial in I and
    // collapse every power I^n (n >= 1) to I.
    #[test]
    fn mul_matches_polynomial_oracle() {
        for a in -2..=2 {
            for b in -2..=2 {
                for c in -2..=2 {
                    for d in -2..=2 {
                        let poly = [a * c, a * d + b * c, b * d];
                        let expected = NeutroValue::new(poly[0], poly[1] + poly[2]);
                        assert_eq!(NeutroValue::new(a, b) * NeutroValue::new(c, d), expected);
                    }
                }
            }
        }
    }

    #[test]
    fn overflow_is_reported() {
        let big = NeutroValue::real(i64::MAX);
        assert_eq!(big.checked_add(NeutroValue::ONE), Err(Overflow));
        assert_eq!(big.checked_mul(NeutroValue::real(2)), Err(Overflow));
    }

    #[test]
    fn threshold_examples() {
        let real = ThresholdPolicy::default();
        let indet = real.with_mode(ThresholdMode::IndetDominant);
        assert_eq!(threshold_scalar(nv("2+I"), real), NodeState::On);
        assert_eq!(threshold_scalar(nv("2I"), real), NodeState::Indeterminate);
        assert_eq!(threshold_scalar(nv("-1+I"), real), NodeState::Indeterminate);
        assert_eq!(threshold_scalar(nv("1+2I"), indet), NodeState::Indeterminate);
        assert_eq!(threshold_scalar(nv("1+2I"), real), NodeState::On);
        assert_eq!(threshold_scalar(nv("-I"), real), NodeState::Indeterminate);
        assert_eq!(threshold_scalar(NeutroValue::ZERO, real), NodeState::Off);
        assert_eq!(threshold_scalar(NeutroValue::ZERO, indet), NodeState::Off);
        let k2 = ThresholdPolicy::new(2, ThresholdMode::RealDominant).unwrap();
        assert_eq!(threshold_scalar(nv("1"), k2), NodeState::Off);
        assert_eq!(threshold_scalar(nv("2"), k2), NodeState::On);
    }

    #[test]
    fn policy_rejects_zero_k() {
        assert_eq!(
            ThresholdPolicy::new(0, ThresholdMode::RealDominant),
            Err(InvalidThreshold)
        );
        let json = r#"{"k":0,"mode":"real"}"#;
        assert!(serde_json::from_str::<ThresholdPolicy>(json).is_err());
        let ok: ThresholdPolicy = serde_json::from_str(r#"{"k":2,"mode":"indet"}"#).unwrap();
        assert_eq!(ok.k(), 2);
        assert_eq!(ok.mode(), ThresholdMode::IndetDominant);
    }

    fn small() -> impl Strategy<Value = NeutroValue> {
        (-50i64..=50, -50i64..=50).prop_map(|(r, i)| NeutroValue::new(r, i))
    }

    fn policy() -> impl Strategy<Value = ThresholdPolicy> {
        (
            1i64..=4,
            prop_oneof![Just(ThresholdMode::RealDominant), Just(ThresholdMode::IndetDominant)],
        )
            .prop_map(|(k, m)| ThresholdPolicy::new(k, m).unwrap())
    }

    proptest! {
        #[test]
        fn ring_laws(x in small(), y in small(), z in small()) {
            prop_assert_eq!(x + y, y + x);
            prop_assert_eq!(x * y, y * x);
            prop_assert_eq!((x + y) + z, x + (y + z));
            prop_assert_eq!((x * y) * z, x * (y * z));
            prop_assert_eq!(x * (y + z), x * y + x * z);
        }

        #[test]
        fn display_parse_round_trip(x in small()) {
            prop_assert_eq!(x.to_string().parse::<NeutroValue>().unwrap(), x);
        }

        #[test]
        fn threshold_idempotent_at_k1(x in small(), indet in any::<bool>()) {
            let mode = if indet { ThresholdMode::IndetDominant } else { ThresholdMode::RealDominant };
            let p = ThresholdPolicy::new(1, mode).unwrap();
            let once = threshold_scalar(x, p);
            prop_assert_eq!(threshold_scalar(once.value(), p), once);
        }

        #[test]
        fn pure_real_modes_agree(r in -20i64..=20, p in policy()) {
            let expected = if r >= p.k() { NodeState::On } else { NodeState::Off };
            prop_assert_eq!(threshold_scalar(NeutroValue::real(r), p), expected);
        }
    }
}

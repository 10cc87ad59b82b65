use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;

/// Exact rational filtration level.
pub type Rational = Rational64;

/// A filtration value: a finite rational or the "never present" sentinel.
///
/// `Inf` orders above every finite value, so `value <= eps` with finite `eps`
/// is false for it and infinite simplices never enter a sublevel complex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FiltValue {
    Finite(Rational),
    Inf,
}

impl FiltValue {
    pub fn int(n: i64) -> Self {
        FiltValue::Finite(Rational::from_integer(n))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        FiltValue::Finite(Rational::new(n, d))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, FiltValue::Finite(_))
    }

    pub fn finite(&self) -> Option<Rational> {
        match self {
            FiltValue::Finite(r) => Some(*r),
            FiltValue::Inf => None,
        }
    }

    /// `self <= level` for a finite level.
    pub fn at_most(&self, level: Rational) -> bool {
        match self {
            FiltValue::Finite(r) => *r <= level,
            FiltValue::Inf => false,
        }
    }
}

impl From<Rational> for FiltValue {
    fn from(r: Rational) -> Self {
        FiltValue::Finite(r)
    }
}

impl From<i64> for FiltValue {
    fn from(n: i64) -> Self {
        FiltValue::int(n)
    }
}

pub fn fmt_rational(r: &Rational) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: i64 = n.trim().parse().ok()?;
            let d: i64 = d.trim().parse().ok()?;
            if d == 0 {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => s.parse::<i64>().ok().map(Rational::from_integer),
    }
}

impl fmt::Display for FiltValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiltValue::Finite(r) => f.write_str(&fmt_rational(r)),
            FiltValue::Inf => f.write_str("inf"),
        }
    }
}

impl FromStr for FiltValue {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("inf") {
            return Ok(FiltValue::Inf);
        }
        parse_rational(t)
            .map(FiltValue::Finite)
            .ok_or_else(|| format!("invalid filtration value `{t}`"))
    }
}

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// A dyadic rational `numerator / 2^exponent`, kept in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Dyadic {
    numerator: i64,
    exponent: u32,
}

impl Dyadic {
    pub const ZERO: Dyadic = Dyadic { numerator: 0, exponent: 0 };

    pub fn new(numerator: i64, exponent: u32) -> Self {
        let mut d = Dyadic { numerator, exponent };
        d.reduce();
        d
    }

    pub fn integer(n: i64) -> Self {
        Dyadic { numerator: n, exponent: 0 }
    }

    /// Builds `numerator / denominator`, failing unless the denominator is a
    /// positive power of two.
    pub fn from_fraction(numerator: i64, denominator: i64) -> Result<Self, Error> {
        if denominator <= 0 || denominator.count_ones() != 1 {
            return Err(Error::NonDyadic { numerator, denominator });
        }
        Ok(Dyadic::new(numerator, denominator.trailing_zeros()))
    }

    fn reduce(&mut self) {
        if self.numerator == 0 {
            self.exponent = 0;
            return;
        }
        let shift = self.numerator.trailing_zeros().min(self.exponent);
        self.numerator >>= shift;
        self.exponent -= shift;
    }

    pub fn numerator(self) -> i64 {
        self.numerator
    }

    pub fn exponent(self) -> u32 {
        self.exponent
    }

    pub fn is_integer(self) -> bool {
        self.exponent == 0
    }

    /// The two neighbours `(p - 1) / 2^q` and `(p + 1) / 2^q` whose simplest
    /// form sits between them. Only meaningful for non-integers.
    pub(crate) fn neighbours(self) -> (Dyadic, Dyadic) {
        (Dyadic::new(self.numerator - 1, self.exponent), Dyadic::new(self.numerator + 1, self.exponent))
    }

    /// Mean of two dyadics, used when recognising `{x | y}` number forms.
    pub(crate) fn midpoint(self, other: Dyadic) -> Dyadic {
        let exp = self.exponent.max(other.exponent) + 1;
        let a = self.numerator << (exp - self.exponent);
        let b = other.numerator << (exp - other.exponent);
        Dyadic::new((a + b) / 2, exp)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let exp = self.exponent.max(other.exponent);
        let a = (self.numerator as i128) << (exp - self.exponent);
        let b = (other.numerator as i128) << (exp - other.exponent);
        a.cmp(&b)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponent == 0 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}/{}", self.numerator, 1u64 << self.exponent)
        }
    }
}

impl FromStr for Dyadic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || Error::Parse { offset: 0, message: format!("invalid dyadic literal `{s}`") };
        match s.split_once('/') {
            None => s.trim().parse::<i64>().map(Dyadic::integer).map_err(|_| bad()),
            Some((n, d)) => {
                let n = n.trim().parse::<i64>().map_err(|_| bad())?;
                let d = d.trim().parse::<i64>().map_err(|_| bad())?;
                Dyadic::from_fraction(n, d)
            }
        }
    }
}

impl std::ops::Neg for Dyadic {
    type Output = Dyadic;

    fn neg(self) -> Dyadic {
        Dyadic { numerator: -self.numerator, exponent: self.exponent }
    }
}

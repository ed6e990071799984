use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// Generator families, declared in canonical output order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    /// Cobordism class of complex projective space `CP_i`.
    CP,
    /// Complete symmetric function `h_i`.
    H,
    /// Power sum `p_i`.
    P,
    /// Elementary symmetric function `e_i`.
    E,
    /// The degree-two class `b = b_(1)`.
    B,
}

impl Family {
    pub fn prefix(self) -> &'static str {
        match self {
            Family::CP => "CP",
            Family::H => "h",
            Family::P => "p",
            Family::E => "e",
            Family::B => "b",
        }
    }
}

/// A named graded generator. Every generator has degree `2 * index`,
/// except `b` which has degree 2.
///
/// `CP_0` is not a generator; [`crate::MultiPoly::cp`] maps it to the unit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    family: Family,
    index: u32,
}

impl Generator {
    /// Builds a generator, rejecting index 0 for the indexed families and any
    /// nonzero index for `b`.
    pub fn new(family: Family, index: u32) -> Result<Self, Error> {
        let valid = match family {
            Family::B => index == 0,
            _ => index >= 1,
        };
        if valid {
            Ok(Generator { family, index })
        } else {
            Err(Error::InvalidGenerator(format!("{}{}", family.prefix(), index)))
        }
    }

    pub(crate) const fn unchecked(family: Family, index: u32) -> Self {
        Generator { family, index }
    }

    pub fn cp(index: u32) -> Self {
        assert!(index >= 1, "CP_0 is the unit, not a generator");
        Generator::unchecked(Family::CP, index)
    }

    pub fn h(index: u32) -> Self {
        assert!(index >= 1);
        Generator::unchecked(Family::H, index)
    }

    pub fn p(index: u32) -> Self {
        assert!(index >= 1);
        Generator::unchecked(Family::P, index)
    }

    pub fn e(index: u32) -> Self {
        assert!(index >= 1);
        Generator::unchecked(Family::E, index)
    }

    pub const fn b() -> Self {
        Generator::unchecked(Family::B, 0)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn index(&self) -> u32 {
        self.index
    }

    pub fn degree(&self) -> u32 {
        match self.family {
            Family::B => 2,
            _ => 2 * self.index,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::B => f.write_str("b"),
            family => write!(f, "{}{}", family.prefix(), self.index),
        }
    }
}

impl FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        if s == "b" {
            return Ok(Generator::b());
        }
        let (family, rest) = if let Some(rest) = s.strip_prefix("CP") {
            (Family::CP, rest)
        } else if let Some(rest) = s.strip_prefix('h') {
            (Family::H, rest)
        } else if let Some(rest) = s.strip_prefix('p') {
            (Family::P, rest)
        } else if let Some(rest) = s.strip_prefix('e') {
            (Family::E, rest)
        } else {
            return Err(Error::InvalidGenerator(s.to_string()));
        };
        if rest.is_empty() || !rest.bytes().all(|c| c.is_ascii_digit()) {
            return Err(Error::InvalidGenerator(s.to_string()));
        }
        let index = rest.parse().map_err(|_| Error::InvalidGenerator(s.to_string()))?;
        Generator::new(family, index)
    }
}

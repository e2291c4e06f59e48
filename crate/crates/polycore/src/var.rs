use std::fmt;
use std::str::FromStr;

use crate::PolyError;

/// The fixed, ordered variable universe shared by every polynomial.
///
/// The order `a < b < c < u < x < m < n < t` drives the graded
/// lexicographic term order used for printing and hashing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    A,
    B,
    C,
    U,
    X,
    M,
    N,
    T,
}

pub const NUM_VARS: usize = 8;

impl Var {
    pub const ALL: [Var; NUM_VARS] = [
        Var::A,
        Var::B,
        Var::C,
        Var::U,
        Var::X,
        Var::M,
        Var::N,
        Var::T,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Option<Var> {
        Var::ALL.get(i).copied()
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::A => "a",
            Var::B => "b",
            Var::C => "c",
            Var::U => "u",
            Var::X => "x",
            Var::M => "m",
            Var::N => "n",
            Var::T => "t",
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Var {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Var::ALL
            .iter()
            .copied()
            .find(|v| v.name() == s)
            .ok_or_else(|| PolyError::Parse(format!("unknown variable `{s}`")))
    }
}

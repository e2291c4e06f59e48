//! Triangle center catalog loaded from `data/centers.txt`.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use polycore::{MultiPoly, Scalar, Var};

use crate::error::{CoreError, Result};
use crate::geom::{BaryPoint, Sides};

const CATALOG_TEXT: &str = include_str!("../../data/centers.txt");

/// One catalog entry: `f(a,b,c)` generating `(f(a,b,c) : f(b,c,a) : f(c,a,b))`.
#[derive(Clone, Debug)]
pub struct CenterFormula {
    pub index: u32,
    pub provenance: String,
    pub first: MultiPoly,
    /// All three coordinates as polynomials in `a, b, c`.
    pub coords: [MultiPoly; 3],
}

impl CenterFormula {
    fn new(index: u32, provenance: String, first: MultiPoly) -> Self {
        let shift = [(Var::A, Var::B), (Var::B, Var::C), (Var::C, Var::A)];
        let second = first.rename(&shift);
        let third = second.rename(&shift);
        CenterFormula {
            index,
            provenance,
            first,
            coords: [MultiPoly::zero(), second, third],
        }
        .fill_first()
    }

    fn fill_first(mut self) -> Self {
        self.coords[0] = self.first.clone();
        self
    }

    /// Coordinates evaluated in any ring holding the side lengths.
    pub fn point<T: Scalar>(&self, s: &Sides<T>) -> BaryPoint<T> {
        let val = |v: Var| match v {
            Var::A => s.a.clone(),
            Var::B => s.b.clone(),
            Var::C => s.c.clone(),
            _ => T::zero(),
        };
        BaryPoint(std::array::from_fn(|i| self.coords[i].eval(val)))
    }

    /// Whether the coordinates sum to zero identically (a point at infinity).
    pub fn is_infinite(&self) -> bool {
        MultiPoly::sum(self.coords.iter()).is_zero()
    }
}

/// The loaded catalog.
#[derive(Debug)]
pub struct Catalog {
    entries: BTreeMap<u32, CenterFormula>,
}

impl Catalog {
    pub fn parse(text: &str) -> Result<Catalog> {
        let mut entries = BTreeMap::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let parts: Vec<&str> = line.splitn(3, '|').map(str::trim).collect();
            let bad = |msg: &str| CoreError::Config(format!("catalog line {}: {msg}", lineno + 1));
            if parts.len() != 3 {
                return Err(bad("expected `index | provenance | polynomial`"));
            }
            let index: u32 = parts[0].parse().map_err(|_| bad("bad index"))?;
            let first: MultiPoly = parts[2].parse()?;
            if first.vars().iter().any(|v| !matches!(v, Var::A | Var::B | Var::C)) {
                return Err(bad("polynomial must only involve a, b, c"));
            }
            entries.insert(index, CenterFormula::new(index, parts[1].to_string(), first));
        }
        Ok(Catalog { entries })
    }

    /// The catalog shipped with the crate.
    pub fn builtin() -> &'static Catalog {
        static CAT: OnceLock<Catalog> = OnceLock::new();
        CAT.get_or_init(|| Catalog::parse(CATALOG_TEXT).expect("bundled catalog parses"))
    }

    pub fn get(&self, n: u32) -> Result<&CenterFormula> {
        self.entries.get(&n).ok_or(CoreError::UnsupportedCenter(n))
    }

    pub fn indices(&self) -> impl Iterator<Item = u32> + '_ {
        self.entries.keys().copied()
    }

    pub fn entries(&self) -> impl Iterator<Item = &CenterFormula> {
        self.entries.values()
    }
}

/// Center `X_n` evaluated on the given sides.
pub fn center<T: Scalar>(n: u32, s: &Sides<T>) -> Result<BaryPoint<T>> {
    Ok(Catalog::builtin().get(n)?.point(s))
}

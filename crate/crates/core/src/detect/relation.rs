//! Exact linear relations among angle symbols and multiples of pi.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use polycore::BigRational;

/// `sum(coeff * symbol) + pi_coeff * pi = 0` with exact rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AngleRelation {
    pub terms: BTreeMap<String, BigRational>,
    pub pi: BigRational,
}

impl AngleRelation {
    pub fn new() -> Self {
        AngleRelation {
            terms: BTreeMap::new(),
            pi: BigRational::zero(),
        }
    }

    /// Relation from `(symbol, coefficient)` pairs and the coefficient of pi.
    pub fn from_terms(terms: &[(&str, BigRational)], pi: BigRational) -> Self {
        let mut r = AngleRelation::new();
        for (s, c) in terms {
            r.add_term(s, c.clone());
        }
        r.pi = pi;
        r
    }

    pub fn add_term(&mut self, symbol: &str, c: BigRational) {
        let e = self.terms.entry(symbol.to_string()).or_insert_with(BigRational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(symbol);
        }
    }

    pub fn add_pi(&mut self, c: BigRational) {
        self.pi += c;
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty() && self.pi.is_zero()
    }

    pub fn scaled(&self, k: &BigRational) -> AngleRelation {
        if k.is_zero() {
            return AngleRelation::new();
        }
        AngleRelation {
            terms: self.terms.iter().map(|(s, c)| (s.clone(), c * k)).collect(),
            pi: &self.pi * k,
        }
    }

    /// `self + k * other`.
    pub fn add_scaled(&mut self, other: &AngleRelation, k: &BigRational) {
        for (s, c) in &other.terms {
            self.add_term(s, c * k);
        }
        self.pi += &other.pi * k;
    }

    pub fn negated(&self) -> AngleRelation {
        self.scaled(&-BigRational::one())
    }

    /// The same relation without its pi part.
    pub fn without_pi(&self) -> AngleRelation {
        AngleRelation {
            terms: self.terms.clone(),
            pi: BigRational::zero(),
        }
    }
}

impl fmt::Display for AngleRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut put = |f: &mut fmt::Formatter<'_>, c: &BigRational, name: &str| -> fmt::Result {
            let neg = c.is_negative();
            let mag = c.abs();
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            if mag.is_one() {
                write!(f, "{name}")
            } else {
                write!(f, "{mag}*{name}")
            }
        };
        for (s, c) in &self.terms {
            put(f, c, s)?;
        }
        if !self.pi.is_zero() {
            put(f, &self.pi, "pi")?;
        }
        if self.is_zero() {
            write!(f, "0")?;
        }
        write!(f, " = 0")
    }
}

const PI_KEY: &str = "\u{10ffff}pi";

fn as_vector(r: &AngleRelation, track_pi: bool) -> BTreeMap<String, BigRational> {
    let mut v = r.terms.clone();
    if track_pi && !r.pi.is_zero() {
        v.insert(PI_KEY.to_string(), r.pi.clone());
    }
    v
}

struct Row {
    pivot: String,
    vec: BTreeMap<String, BigRational>,
    tag: usize,
}

/// Row-echelon span of relations, each row tagged with the index of the
/// relation that introduced it. Rows are never rewritten after insertion,
/// so the largest tag used to express a vector is the earliest prefix of
/// inserted relations whose span contains it.
pub struct RelationSpace {
    rows: Vec<Row>,
    track_pi: bool,
}

impl RelationSpace {
    /// With `track_pi` false the pi coefficients are ignored, which is
    /// sound when every relation involved is known to hold numerically.
    pub fn new(track_pi: bool) -> Self {
        RelationSpace { rows: Vec::new(), track_pi }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, r: &AngleRelation) -> (BTreeMap<String, BigRational>, Option<usize>) {
        let mut v = as_vector(r, self.track_pi);
        let mut used: Option<usize> = None;
        for row in &self.rows {
            if let Some(c) = v.get(&row.pivot).cloned() {
                let k = -c / &row.vec[&row.pivot];
                for (s, x) in &row.vec {
                    let e = v.entry(s.clone()).or_insert_with(BigRational::zero);
                    *e += x * &k;
                    if e.is_zero() {
                        v.remove(s);
                    }
                }
                used = Some(used.map_or(row.tag, |t| t.max(row.tag)));
            }
        }
        (v, used)
    }

    /// `Some(tag)` when `r` lies in the span; the tag is the smallest
    /// prefix index that suffices (`0` for the zero relation).
    pub fn contains(&self, r: &AngleRelation) -> Option<usize> {
        let (rest, used) = self.reduce(r);
        rest.is_empty().then(|| used.unwrap_or(0))
    }

    /// Adds `r` with the given tag; false when it was already in the span.
    pub fn insert(&mut self, r: &AngleRelation, tag: usize) -> bool {
        let (rest, _) = self.reduce(r);
        match rest.keys().next().cloned() {
            None => false,
            Some(pivot) => {
                self.rows.push(Row { pivot, vec: rest, tag });
                true
            }
        }
    }
}

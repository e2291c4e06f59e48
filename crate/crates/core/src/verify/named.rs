//! Named statements with their home families.

use crate::centers::shape::Family;
use crate::error::{CoreError, Result};
use crate::verify::statement::Statement;

#[derive(Clone, Copy, Debug)]
pub struct NamedStatement {
    pub name: &'static str,
    pub statement: &'static str,
    pub family: Family,
    pub summary: &'static str,
}

pub const NAMED: &[NamedStatement] = &[
    NamedStatement {
        name: "io-perpendicular",
        statement: "perpendicular(Y1 Y2, X1 X3)",
        family: Family::ScaleneRandom,
        summary: "Y1Y2 is perpendicular to the line through the incenter and circumcenter",
    },
    NamedStatement {
        name: "right-x8x20-concurrent",
        statement: "concurrent(A Y2, C Y1, X8 X20)",
        family: Family::RightAtB,
        summary: "AY2, CY1 and X8X20 concur in a triangle right-angled at B",
    },
    NamedStatement {
        name: "right3060-x8x21-concurrent",
        statement: "concurrent(A Y1, B Y2, X8 X21)",
        family: Family::Right306090,
        summary: "AY1, BY2 and X8X21 concur in a 30-60-90 triangle",
    },
    NamedStatement {
        name: "right-bx8-perpendicular",
        statement: "perpendicular(B X8, Y1 Y2)",
        family: Family::RightAtB,
        summary: "BX8 is perpendicular to Y1Y2 in a triangle right-angled at B",
    },
    NamedStatement {
        name: "sixty-x3x8-concurrent",
        statement: "concurrent(A Y1, B Y2, X3 X8)",
        family: Family::SixtyAtC,
        summary: "AY1, BY2 and X3X8 concur when the angle at C is 60 degrees",
    },
    NamedStatement {
        name: "hepta-parallel",
        statement: "parallel(X1 Y2, reflect(Y1,BC) C)",
        family: Family::Heptagonal,
        summary: "X1Y2 is parallel to the line through C and the reflection of Y1 in BC",
    },
    NamedStatement {
        name: "harmonic-vertex",
        statement: "collinear(Y1, Y2, B)",
        family: Family::Harmonic,
        summary: "Y1Y2 passes through B in a harmonic triangle",
    },
    NamedStatement {
        name: "harmonic-centroid",
        statement: "collinear(Y1, Y2, X2)",
        family: Family::Harmonic,
        summary: "Y1Y2 passes through the centroid in a harmonic triangle",
    },
    NamedStatement {
        name: "harmonic-side-midpoint",
        statement: "collinear(Y1, Y2, mid(A,C))",
        family: Family::Harmonic,
        summary: "Y1Y2 bisects side CA in a harmonic triangle",
    },
    NamedStatement {
        name: "ap-parallel",
        statement: "parallel(A X1, Y1 Y2)",
        family: Family::Ap,
        summary: "AX1 is parallel to Y1Y2 when the sides are in arithmetic progression",
    },
    NamedStatement {
        name: "double-angle-concurrent",
        statement: "concurrent(B Y2, C X2, A reflect(Y2,BC))",
        family: Family::DoubleAngle,
        summary: "BY2, CX2 and AY2' concur when angle A is twice angle B",
    },
    NamedStatement {
        name: "isosceles-area",
        statement: "area(Y1)",
        family: Family::Isosceles,
        summary: "the subtriangle areas of Y1 satisfy Kb*Kc = Ka^2 when b = c",
    },
    NamedStatement {
        name: "nagel-special-x8",
        statement: "collinear(B, Y1, X8)",
        family: Family::NagelSpecial,
        summary: "BY1 passes through the Nagel point",
    },
    NamedStatement {
        name: "nagel-special-x7",
        statement: "collinear(C, Y1, X7)",
        family: Family::NagelSpecial,
        summary: "CY1 passes through the Gergonne point",
    },
];

pub fn find_named(name: &str) -> Option<&'static NamedStatement> {
    NAMED.iter().find(|n| n.name.eq_ignore_ascii_case(name.trim()))
}

/// Resolves either a catalog name or a statement in the DSL.
pub fn resolve_statement(text: &str) -> Result<(Statement, Option<Family>)> {
    if let Some(n) = find_named(text) {
        return Ok((n.statement.parse()?, Some(n.family)));
    }
    text.parse::<Statement>()
        .map(|s| (s, None))
        .map_err(|e| CoreError::Statement(format!("`{text}` is neither a named statement nor valid syntax ({e})")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_named_statement_parses() {
        for n in NAMED {
            let st: Statement = n.statement.parse().unwrap();
            assert_eq!(st.to_string(), n.statement);
        }
        assert!(resolve_statement("HEPTA-PARALLEL").unwrap().1 == Some(Family::Heptagonal));
        assert!(resolve_statement("collinear(A, B, C)").unwrap().1.is_none());
        assert!(resolve_statement("nonsense").is_err());
    }
}

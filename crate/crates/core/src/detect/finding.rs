//! Detected properties and their canonical text form.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::detect::relation::AngleRelation;
use crate::points::{LineExpr, PointExpr};
use crate::verify::statement::Statement;

/// Detector kinds, in the priority order used for deduplication.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FindingKind {
    Perpendicular,
    Parallel,
    Concurrent,
    Collinear,
    EqualAngle,
    AngleSumConstant,
    EqualLength,
    AreaRelation,
}

impl FindingKind {
    pub const ALL: [FindingKind; 8] = [
        FindingKind::Perpendicular,
        FindingKind::Parallel,
        FindingKind::Concurrent,
        FindingKind::Collinear,
        FindingKind::EqualAngle,
        FindingKind::AngleSumConstant,
        FindingKind::EqualLength,
        FindingKind::AreaRelation,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            FindingKind::Perpendicular => "perpendicular",
            FindingKind::Parallel => "parallel",
            FindingKind::Concurrent => "concurrent",
            FindingKind::Collinear => "collinear",
            FindingKind::EqualAngle => "equal-angle",
            FindingKind::AngleSumConstant => "angle-sum-constant",
            FindingKind::EqualLength => "equal-length",
            FindingKind::AreaRelation => "area-relation",
        }
    }
}

/// `angle1 + sign * angle2 = num/den * pi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AngleConstant {
    pub sign: i8,
    pub num: i64,
    pub den: i64,
}

/// Ordering of labels: vertices, then centers by index, then Yff points
/// and anything derived from them.
pub fn label_rank(label: &str) -> (u32, u32, &str) {
    match label {
        "A" => (0, 0, label),
        "B" => (0, 1, label),
        "C" => (0, 2, label),
        _ => {
            if let Some(n) = label.strip_prefix('X').and_then(|r| r.parse::<u32>().ok()) {
                (1, n, label)
            } else if label.starts_with('Y') {
                (3, 0, label)
            } else {
                (2, 0, label)
            }
        }
    }
}

pub fn cmp_labels(a: &str, b: &str) -> Ordering {
    label_rank(a).cmp(&label_rank(b))
}

pub fn is_yff_label(label: &str) -> bool {
    label.starts_with('Y')
}

/// Figure label of an expression (`Y1'` for the reflection of `Y1` in BC).
pub fn point_label(p: &PointExpr) -> String {
    crate::detect::figure::reflected_points()
        .into_iter()
        .find(|(_, e)| e == p)
        .map_or_else(|| p.to_string(), |(l, _)| l)
}

/// Inverse of [`point_label`].
pub fn label_point(label: &str) -> Option<PointExpr> {
    crate::detect::figure::reflected_points()
        .into_iter()
        .find(|(l, _)| l == label)
        .map(|(_, e)| e)
        .or_else(|| label.parse().ok())
}

fn cmp_lists(a: &[String], b: &[String]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match cmp_labels(x, y) {
            Ordering::Equal => {}
            o => return o,
        }
    }
    a.len().cmp(&b.len())
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Finding {
    pub kind: FindingKind,
    /// Lines and segments list their points; angles are `[p, vertex, r]`;
    /// an area relation is `[[point], [vertex]]`.
    pub actors: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub constant: Option<AngleConstant>,
    pub residual: f64,
    pub verified_residual: f64,
    pub tolerance: f64,
    pub class: String,
    #[serde(skip)]
    pub relation: Option<AngleRelation>,
}

impl Finding {
    /// Builds a finding with canonically ordered actors.
    pub fn new(kind: FindingKind, mut actors: Vec<Vec<String>>, mut constant: Option<AngleConstant>) -> Finding {
        match kind {
            FindingKind::EqualAngle | FindingKind::AngleSumConstant => {
                for a in &mut actors {
                    if a.len() == 3 && cmp_labels(&a[0], &a[2]) == Ordering::Greater {
                        a.swap(0, 2);
                    }
                }
            }
            FindingKind::AreaRelation => {}
            _ => {
                for a in &mut actors {
                    a.sort_by(|x, y| cmp_labels(x, y));
                }
            }
        }
        match (kind, &mut constant) {
            (FindingKind::AngleSumConstant, Some(c)) if c.sign < 0 => {
                // keep the difference positive by ordering the angles
                if c.num < 0 {
                    actors.swap(0, 1);
                    c.num = -c.num;
                }
            }
            (FindingKind::AreaRelation, _) => {}
            _ => actors.sort_by(|a, b| cmp_lists(a, b)),
        }
        Finding {
            kind,
            actors,
            constant,
            residual: 0.0,
            verified_residual: 0.0,
            tolerance: 0.0,
            class: String::new(),
            relation: None,
        }
    }

    /// Every label mentioned.
    pub fn labels(&self) -> Vec<&str> {
        let mut v: Vec<&str> = self.actors.iter().flatten().map(String::as_str).collect();
        v.sort_by(|a, b| cmp_labels(a, b));
        v.dedup();
        v
    }

    pub fn involves_yff(&self) -> bool {
        self.labels().iter().any(|l| is_yff_label(l))
    }

    /// Canonical text; equal for findings with the same actor sets.
    pub fn key(&self) -> String {
        self.to_string()
    }

    /// Exact statements equivalent to an incidence finding.
    pub fn to_statements(&self) -> Vec<Statement> {
        let pt = label_point;
        let line = |v: &Vec<String>| Some(LineExpr(pt(&v[0])?, pt(&v[1])?));
        let out: Option<Vec<Statement>> = (|| {
            Some(match self.kind {
                FindingKind::Concurrent => vec![Statement::Concurrent(
                    line(&self.actors[0])?,
                    line(&self.actors[1])?,
                    line(&self.actors[2])?,
                )],
                FindingKind::Collinear => {
                    let m = &self.actors[0];
                    let mut v = Vec::new();
                    for k in 2..m.len() {
                        v.push(Statement::Collinear(pt(&m[0])?, pt(&m[1])?, pt(&m[k])?));
                    }
                    v
                }
                FindingKind::Parallel => vec![Statement::Parallel(line(&self.actors[0])?, line(&self.actors[1])?)],
                FindingKind::Perpendicular => {
                    vec![Statement::Perpendicular(line(&self.actors[0])?, line(&self.actors[1])?)]
                }
                FindingKind::AreaRelation if self.actors[1][0] == "A" => {
                    vec![Statement::AreaRelation(pt(&self.actors[0][0])?)]
                }
                _ => Vec::new(),
            })
        })();
        out.unwrap_or_default()
    }

    /// Whether the finding asserts `st` (lines may carry extra points).
    pub fn matches(&self, st: &Statement) -> bool {
        let has_line = |members: &Vec<String>, l: &LineExpr| {
            let (p, q) = (point_label(&l.0), point_label(&l.1));
            members.contains(&p) && members.contains(&q)
        };
        let lines_match = |ls: &[&LineExpr]| {
            ls.len() == self.actors.len()
                && permutations(ls.len())
                    .iter()
                    .any(|perm| perm.iter().enumerate().all(|(i, &j)| has_line(&self.actors[i], ls[j])))
        };
        match (self.kind, st) {
            (FindingKind::Concurrent, Statement::Concurrent(l, m, n)) => lines_match(&[l, m, n]),
            (FindingKind::Parallel, Statement::Parallel(l, m))
            | (FindingKind::Perpendicular, Statement::Perpendicular(l, m)) => lines_match(&[l, m]),
            (FindingKind::Collinear, Statement::Collinear(p, q, r)) => {
                [p, q, r].iter().all(|x| self.actors[0].contains(&point_label(x)))
            }
            (FindingKind::AreaRelation, Statement::AreaRelation(p)) => {
                self.actors[0][0] == point_label(p) && self.actors[1][0] == "A"
            }
            _ => false,
        }
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    match n {
        2 => vec![vec![0, 1], vec![1, 0]],
        3 => vec![
            vec![0, 1, 2],
            vec![0, 2, 1],
            vec![1, 0, 2],
            vec![1, 2, 0],
            vec![2, 0, 1],
            vec![2, 1, 0],
        ],
        _ => vec![(0..n).collect()],
    }
}

fn angle_text(a: &[String]) -> String {
    format!("angle({},{},{})", a[0], a[1], a[2])
}

fn pi_text(num: i64, den: i64) -> String {
    match (num, den) {
        (0, _) => "0".to_string(),
        (n, 1) => format!("{n}pi"),
        (n, d) => format!("{n}/{d}pi"),
    }
}

impl fmt::Display for Finding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lines = |ls: &[Vec<String>]| ls.iter().map(|l| l.join(" ")).collect::<Vec<_>>().join(", ");
        match self.kind {
            FindingKind::Concurrent | FindingKind::Parallel | FindingKind::Perpendicular => {
                write!(f, "{}({})", self.kind.tag(), lines(&self.actors))
            }
            FindingKind::Collinear => write!(f, "collinear({})", self.actors[0].join(", ")),
            FindingKind::EqualAngle => write!(f, "{} = {}", angle_text(&self.actors[0]), angle_text(&self.actors[1])),
            FindingKind::AngleSumConstant => {
                let c = self.constant.unwrap_or(AngleConstant { sign: 1, num: 0, den: 1 });
                write!(
                    f,
                    "{} {} {} = {}",
                    angle_text(&self.actors[0]),
                    if c.sign < 0 { "-" } else { "+" },
                    angle_text(&self.actors[1]),
                    pi_text(c.num, c.den)
                )
            }
            FindingKind::EqualLength => {
                let segs: Vec<String> = self.actors.iter().map(|s| format!("length({},{})", s[0], s[1])).collect();
                write!(f, "{}", segs.join(" = "))
            }
            FindingKind::AreaRelation => write!(f, "area({}; {})", self.actors[0][0], self.actors[1][0]),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[&str]) -> Vec<String> {
        xs.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn canonical_order_is_actor_order_free() {
        let f1 = Finding::new(
            FindingKind::Concurrent,
            vec![v(&["X20", "X8"]), v(&["Y1", "C"]), v(&["Y2", "A"])],
            None,
        );
        let f2 = Finding::new(
            FindingKind::Concurrent,
            vec![v(&["A", "Y2"]), v(&["X8", "X20"]), v(&["C", "Y1"])],
            None,
        );
        assert_eq!(f1.key(), f2.key());
        assert_eq!(f1.key(), "concurrent(A Y2, C Y1, X8 X20)");
        let st: Statement = "concurrent(A Y2, C Y1, X8 X20)".parse().unwrap();
        assert!(f1.matches(&st));
        assert_eq!(f1.to_statements(), vec![st]);
    }

    #[test]
    fn angle_difference_is_kept_positive() {
        let f = Finding::new(
            FindingKind::AngleSumConstant,
            vec![v(&["C", "X1", "Y2"]), v(&["X1", "C", "Y1"])],
            Some(AngleConstant { sign: -1, num: -1, den: 7 }),
        );
        assert_eq!(f.key(), "angle(X1,C,Y1) - angle(C,X1,Y2) = 1/7pi");
    }

    #[test]
    fn labels_rank_vertices_first() {
        let mut l = vec!["Y1", "X20", "B", "X8", "Y1'"];
        l.sort_by(|a, b| cmp_labels(a, b));
        assert_eq!(l, vec!["B", "X8", "X20", "Y1", "Y1'"]);
    }
}

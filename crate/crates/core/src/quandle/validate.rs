use std::fmt;

use serde::Serialize;

use super::QuandleTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Classification {
    /// Some row is not a bijection.
    None,
    LeftQuasigroup,
    Rack,
    Quandle,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Classification::None => "not a left quasigroup",
            Classification::LeftQuasigroup => "left-quasigroup",
            Classification::Rack => "rack",
            Classification::Quandle => "quandle",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "axiom", rename_all = "snake_case")]
pub enum Violation {
    /// `row * a = row * b = value` with `a ≠ b`.
    LeftQuasigroup { row: usize, a: usize, b: usize, value: usize },
    /// `x * x ≠ x`.
    Idempotence { x: usize },
    /// `x * (y * z) ≠ (x * y) * (x * z)`.
    LeftDistributivity { x: usize, y: usize, z: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::LeftQuasigroup { row, a, b, value } => write!(
                f,
                "left-quasigroup violation at row {row}: columns {a} and {b} both give {value}"
            ),
            Violation::Idempotence { x } => write!(f, "idempotence violation: {x}*{x} ≠ {x}"),
            Violation::LeftDistributivity { x, y, z } => write!(
                f,
                "left distributivity violation at ({x}, {y}, {z})"
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Validation {
    pub classification: Classification,
    /// At most one witness per axiom, in the order the axioms are checked.
    pub violations: Vec<Violation>,
}

impl Validation {
    pub fn is_quandle(&self) -> bool {
        self.classification == Classification::Quandle
    }

    pub fn is_rack(&self) -> bool {
        self.classification >= Classification::Rack
    }
}

/// Classifies a square table with entries in range. Rows that are not
/// bijections stop the check, since `\` is then undefined.
pub fn validate_rows(rows: &[Vec<usize>]) -> Validation {
    let n = rows.len();
    for (row, r) in rows.iter().enumerate() {
        let mut seen = vec![usize::MAX; n];
        for (b, &value) in r.iter().enumerate() {
            if seen[value] != usize::MAX {
                return Validation {
                    classification: Classification::None,
                    violations: vec![Violation::LeftQuasigroup {
                        row,
                        a: seen[value],
                        b,
                        value,
                    }],
                };
            }
            seen[value] = b;
        }
    }
    let table = QuandleTable::from_rows(rows.to_vec()).expect("rows are bijections");
    validate_table(&table)
}

/// Above this size distributivity is checked on a generating set only.
const EXHAUSTIVE_LIMIT: usize = 64;

fn distributivity_at(q: &QuandleTable, x: usize) -> Option<Violation> {
    let n = q.len();
    (0..n).find_map(|y| {
        let xy = q.op(x, y);
        (0..n)
            .find(|&z| q.op(x, q.op(y, z)) != q.op(xy, q.op(x, z)))
            .map(|z| Violation::LeftDistributivity { x, y, z })
    })
}

/// Let `G = ⟨L_s : s ∈ S⟩`. If `L_{s*y} = L_s L_y L_s⁻¹` for all `s ∈ S`
/// and all `y`, then `L_{g(y)} = g L_y g⁻¹` for every `g ∈ G`. So when the
/// `G`-orbits of `S` cover `Q`, checking `x ∈ S` decides distributivity
/// exactly. `S` is grown greedily until the orbits cover `Q`, and
/// generators whose row repeats an earlier one are not checked twice.
fn distributivity_by_generators(q: &QuandleTable) -> Option<Violation> {
    let n = q.len();
    let mut generators: Vec<usize> = Vec::new();
    let mut done: Vec<usize> = Vec::new();
    let mut inside = vec![false; n];
    let mut members = Vec::with_capacity(n);
    for x in 0..n {
        if inside[x] {
            continue;
        }
        generators.push(x);
        done.push(0);
        inside[x] = true;
        members.push(x);
        let mut grown = true;
        while grown {
            grown = false;
            for (j, &s) in generators.iter().enumerate() {
                while done[j] < members.len() {
                    let a = members[done[j]];
                    done[j] += 1;
                    for z in [q.op(s, a), q.ldiv(s, a)] {
                        if !inside[z] {
                            inside[z] = true;
                            members.push(z);
                            grown = true;
                        }
                    }
                }
            }
        }
    }
    let mut rows_seen = std::collections::HashSet::new();
    generators
        .into_iter()
        .filter(|&x| rows_seen.insert(q.left_translation(x)))
        .find_map(|x| distributivity_at(q, x))
}

pub(super) fn validate_table(q: &QuandleTable) -> Validation {
    let n = q.len();
    let mut violations = Vec::new();
    if let Some(x) = (0..n).find(|&x| q.op(x, x) != x) {
        violations.push(Violation::Idempotence { x });
    }
    let distributive = if n > EXHAUSTIVE_LIMIT {
        distributivity_by_generators(q)
    } else {
        (0..n).find_map(|x| distributivity_at(q, x))
    };
    let classification = match (distributive.is_none(), violations.is_empty()) {
        (true, true) => Classification::Quandle,
        (true, false) => Classification::Rack,
        (false, _) => Classification::LeftQuasigroup,
    };
    violations.extend(distributive);
    Validation {
        classification,
        violations,
    }
}

use serde::Serialize;

use super::{class_points, class_structure, fit_signed, SignPattern};
use crate::algebra::Rational;
use crate::cf::Chain;
use crate::error::{Error, Result};
use crate::genfunc::{Family, GFKind};

/// Published degrees for `F(x,r)`, odd `r`; the zero class is printed as 0.
const TABLE_F_ODD: &[(u32, &[usize])] = &[
    (3, &[0, 0, 0]),
    (5, &[0, 0, 1, 0, 1]),
    (7, &[0, 0, 3, 2, 0, 2, 3]),
    (9, &[0, 0, 5, 6, 3, 0, 3, 6, 5]),
    (11, &[0, 0, 7, 10, 9, 4, 0, 4, 9, 10, 7]),
    (13, &[0, 0, 9, 14, 15, 12, 5, 0, 5, 12, 15, 14, 9]),
];

/// Published degrees for `F(x,r)`, even `r`.
const TABLE_F_EVEN: &[(u32, &[usize])] = &[
    (4, &[1, 1]),
    (6, &[2, 2, 3]),
    (8, &[3, 3, 6, 6]),
    (10, &[4, 4, 9, 10, 9]),
    (12, &[5, 5, 12, 15, 15, 12]),
];

/// Tabulated row for `kind`, if any.
pub fn table_row(kind: GFKind) -> Option<&'static [usize]> {
    if kind.family != Family::F {
        return None;
    }
    let tab = if kind.r % 2 == 1 { TABLE_F_ODD } else { TABLE_F_EVEN };
    tab.iter().find(|(r, _)| *r == kind.r).map(|(_, row)| *row)
}

/// Predicted degree per residue class (`None` for an identically zero
/// class), plus classes on which the general rule assigns conflicting degrees.
pub fn expected_class_degrees(kind: GFKind) -> (Vec<Option<usize>>, Vec<usize>) {
    let (m, _) = class_structure(kind);
    let r = kind.r as i64;
    let t = r / 2;
    let mut out: Vec<Option<Option<usize>>> = vec![None; m];
    let mut conflicts = Vec::new();
    let mut set = |out: &mut Vec<Option<Option<usize>>>, i: usize, d: Option<usize>| match out[i] {
        Some(prev) if prev != d => {
            if !conflicts.contains(&i) {
                conflicts.push(i);
            }
        }
        Some(_) => {}
        None => out[i] = Some(d),
    };
    match (kind.family, r % 2) {
        (Family::F, 1) => {
            for i in 0..m as i64 {
                let d = if i == t + 1 {
                    None
                } else {
                    let j = if i == 0 { 1 } else { i.min(r + 1 - i) };
                    Some(((j - 1) * (r - 2 * j)) as usize)
                };
                set(&mut out, i as usize, d);
            }
        }
        (Family::F, _) => {
            for i in 0..m as i64 {
                let j = if i == 0 { 1 } else { i.min(t + 1 - i) };
                set(&mut out, i as usize, Some(((2 * j - 1) * (t - j)).max(0) as usize));
            }
        }
        (Family::G, 1) => {
            for j in 1..=(r + 3) / 4 {
                let d = Some(((2 * j - 1) * (t + 1 - j)) as usize);
                for c in [j, t + j, t + 2 - j, r + 1 - j] {
                    set(&mut out, c.rem_euclid(r) as usize, d);
                }
            }
        }
        (Family::G, _) => {
            for j in 1..=t {
                let d = Some(((j - 1) * (r + 1 - 2 * j)) as usize);
                set(&mut out, j as usize % m, d);
                set(&mut out, (r + 1 - j).rem_euclid(r) as usize, d);
            }
        }
    }
    let degrees = out.into_iter().map(|d| d.flatten()).collect();
    (degrees, conflicts)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeRow {
    pub class: usize,
    pub expected: Option<usize>,
    pub table: Option<usize>,
    /// `None` when the class vanishes identically.
    pub fitted: Option<usize>,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeReport {
    pub kind: GFKind,
    pub modulus: usize,
    pub sign: SignPattern,
    pub rows: Vec<DegreeRow>,
    /// Classes `i` and `m+1-i (mod m)` have equal fitted degree.
    pub palindromic: bool,
    pub conflicts: Vec<usize>,
}

impl DegreeReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.pass) && self.palindromic && self.conflicts.is_empty()
    }

    pub fn fitted(&self) -> Vec<Option<usize>> {
        self.rows.iter().map(|r| r.fitted).collect()
    }
}

const VERIFY: usize = 3;

/// Fits every residue class of `kind` with enough points to exceed the
/// predicted degree and compares with the prediction (and the table, if any).
pub fn check_degree_tables(kind: GFKind) -> Result<DegreeReport> {
    if kind.r < 2 {
        return Err(Error::NoFit);
    }
    let (m, sign) = class_structure(kind);
    let (expected, conflicts) = expected_class_degrees(kind);
    let table = table_row(kind);
    let counts: Vec<usize> = expected.iter().map(|d| d.map_or(2, |d| d + 2) + VERIFY).collect();
    let top = (0..m).map(|j| m * (counts[j] - 1) + j).max().unwrap_or(0);
    let seq = Chain::<Rational>::new(kind.fe()?).hankel_sequence_grow(top)?;
    let mut rows = Vec::with_capacity(m);
    for j in 0..m {
        let pts = class_points(&seq, m, j, counts[j]);
        let fitted = match fit_signed(&pts, sign, VERIFY) {
            Ok(g) => g.degree(),
            Err(Error::VerificationFailed(_)) => Some(usize::MAX),
            Err(e) => return Err(e),
        };
        let tab = table.map(|row| row[j]);
        let table_ok = tab.is_none_or(|v| v == expected[j].unwrap_or(0));
        rows.push(DegreeRow {
            class: j,
            expected: expected[j],
            table: tab,
            fitted,
            pass: fitted == expected[j] && table_ok,
        });
    }
    let palindromic = (0..m).all(|i| rows[i].fitted == rows[(m + 1 - i) % m].fitted);
    Ok(DegreeReport { kind, modulus: m, sign, rows, palindromic, conflicts })
}

/// Degree patterns of `G(x,r)` for `2 <= r <= r_max`.
pub fn check_g_degrees(r_max: u32) -> Result<Vec<DegreeReport>> {
    (2..=r_max).map(|r| check_degree_tables(GFKind::g(r))).collect()
}

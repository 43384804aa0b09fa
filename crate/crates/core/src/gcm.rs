//! Generalized Cartan matrices: validation, Dynkin diagrams, and the
//! finite / affine / indefinite trichotomy computed from exact principal minors.
//!
//! Indices are 0-based throughout the library.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

/// Which of the defining conditions of a generalized Cartan matrix failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Axiom {
    /// `a_ii = 2`
    Diagonal,
    /// `a_ij <= 0` for `i != j`
    OffDiagonalSign,
    /// `a_ij = 0` iff `a_ji = 0`
    ZeroPattern,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Axiom::Diagonal => f.write_str("diagonal entries must equal 2"),
            Axiom::OffDiagonalSign => f.write_str("off-diagonal entries must be <= 0"),
            Axiom::ZeroPattern => f.write_str("a_ij = 0 must hold exactly when a_ji = 0"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GcmError {
    #[error("matrix must be square with at least one row (got {rows} rows, row {bad_row} has {bad_len} entries)")]
    NotSquare {
        rows: usize,
        bad_row: usize,
        bad_len: usize,
    },
    #[error("empty matrix")]
    Empty,
    #[error("entry ({i}, {j}) violates axiom: {axiom}")]
    AxiomViolation { i: usize, j: usize, axiom: Axiom },
    #[error("index set must be nonempty")]
    EmptyIndexSet,
    #[error("index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("k = {k} must satisfy 2 <= k <= d = {d}")]
    KOutOfRange { k: usize, d: usize },
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

/// A validated generalized Cartan matrix. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Gcm {
    d: usize,
    entries: Vec<i64>,
}

impl Gcm {
    /// Checks the GCM axioms row by row and reports the first failing entry.
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self, GcmError> {
        let d = rows.len();
        if d == 0 {
            return Err(GcmError::Empty);
        }
        if let Some((bad_row, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != d) {
            return Err(GcmError::NotSquare {
                rows: d,
                bad_row,
                bad_len: r.len(),
            });
        }
        for i in 0..d {
            for j in 0..d {
                let a = rows[i][j];
                if i == j {
                    if a != 2 {
                        return Err(GcmError::AxiomViolation {
                            i,
                            j,
                            axiom: Axiom::Diagonal,
                        });
                    }
                } else if a > 0 {
                    return Err(GcmError::AxiomViolation {
                        i,
                        j,
                        axiom: Axiom::OffDiagonalSign,
                    });
                } else if (a == 0) != (rows[j][i] == 0) {
                    return Err(GcmError::AxiomViolation {
                        i,
                        j,
                        axiom: Axiom::ZeroPattern,
                    });
                }
            }
        }
        Ok(Gcm {
            d,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn size(&self) -> usize {
        self.d
    }

    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.d + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.d).map(<[i64]>::to_vec).collect()
    }

    /// The principal submatrix `A_I`, rows and columns taken in the order given.
    pub fn submatrix(&self, index_set: &[usize]) -> Result<Gcm, GcmError> {
        if index_set.is_empty() {
            return Err(GcmError::EmptyIndexSet);
        }
        if let Some(&bad) = index_set.iter().find(|&&i| i >= self.d) {
            return Err(GcmError::IndexOutOfRange(bad));
        }
        let rows = index_set
            .iter()
            .map(|&i| index_set.iter().map(|&j| self.entry(i, j)).collect())
            .collect();
        Gcm::new(rows)
    }

    pub fn dynkin(&self) -> DynkinDiagram {
        let d = self.d;
        let mut mult = vec![0; d * d];
        for i in 0..d {
            for j in 0..d {
                if i != j {
                    mult[i * d + j] = (self.entry(i, j) * self.entry(j, i)) as u32;
                }
            }
        }
        DynkinDiagram { d, mult }
    }

    /// Largest absolute value of an off-diagonal entry (0 for a 1x1 matrix).
    pub fn max_off_diagonal(&self) -> u32 {
        let mut m = 0;
        for i in 0..self.d {
            for j in 0..self.d {
                if i != j {
                    m = m.max(self.entry(i, j).unsigned_abs() as u32);
                }
            }
        }
        m
    }

    pub fn is_two_spherical(&self) -> bool {
        self.dynkin().max_multiplicity() <= 3
    }

    pub fn is_indecomposable(&self) -> bool {
        self.dynkin().components().len() == 1
    }

    /// Exact determinant of the principal submatrix on `index_set`.
    pub fn principal_minor(&self, index_set: &[usize]) -> i128 {
        let m: Vec<Vec<i128>> = index_set
            .iter()
            .map(|&i| index_set.iter().map(|&j| self.entry(i, j) as i128).collect())
            .collect();
        bareiss_determinant(m)
    }

    pub fn determinant(&self) -> i128 {
        let all: Vec<usize> = (0..self.d).collect();
        self.principal_minor(&all)
    }

    pub fn classify(&self) -> GcmClassification {
        let dynkin = self.dynkin();
        let components = dynkin.components();
        let indecomposable = components.len() == 1;
        let spherical = components
            .iter()
            .all(|c| all_principal_minors(self, c, |_, m| m > 0));
        let kind = if spherical {
            GcmKind::Spherical
        } else if indecomposable && self.determinant() == 0 && {
            let all: Vec<usize> = (0..self.d).collect();
            all_principal_minors(self, &all, |size, m| size == self.d || m > 0)
        } {
            GcmKind::Affine
        } else {
            GcmKind::Indefinite
        };
        let note = (!indecomposable && kind == GcmKind::Indefinite)
            .then(|| "decomposable".to_string());
        let max_mult = dynkin.max_multiplicity();
        let two_spherical = max_mult <= 3;
        let simply_laced = max_mult <= 1;
        let m = self.max_off_diagonal();
        let n_a = if two_spherical && indecomposable && self.d >= 2 && (1..=3).contains(&m) {
            ideal_index_threshold(self.d, m)
        } else {
            None
        };
        GcmClassification {
            kind,
            indecomposable,
            two_spherical,
            simply_laced,
            max_off_diagonal: m,
            ideal_index_threshold: n_a,
            note,
        }
    }

    /// True iff every `k x k` principal submatrix is of finite type.
    pub fn is_k_spherical(&self, k: usize) -> Result<bool, GcmError> {
        if k < 2 || k > self.d {
            return Err(GcmError::KOutOfRange { k, d: self.d });
        }
        let mut ok = true;
        for_each_subset_of_size(self.d, k, &mut |subset| {
            if ok {
                let sub = self.submatrix(subset).expect("principal submatrix of a GCM");
                ok = sub.classify().kind == GcmKind::Spherical;
            }
        });
        Ok(ok)
    }
}

impl fmt::Display for Gcm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.d)?;
        for row in self.entries.chunks(self.d) {
            let cells: Vec<String> = row.iter().map(i64::to_string).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Text format: first non-blank line holds `d`, followed by `d` rows of
/// whitespace-separated integers. Lines starting with `#` are ignored.
impl FromStr for Gcm {
    type Err = GcmError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(n, l)| (n + 1, l))
            .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));
        let (size_line, size_text) = lines.next().ok_or(GcmError::Parse {
            line: 1,
            column: 1,
            message: "missing matrix size".into(),
        })?;
        let d: usize = size_text.trim().parse().map_err(|_| GcmError::Parse {
            line: size_line,
            column: column_of(size_text, size_text.trim()),
            message: format!("expected matrix size, found {:?}", size_text.trim()),
        })?;
        if d == 0 {
            return Err(GcmError::Parse {
                line: size_line,
                column: column_of(size_text, size_text.trim()),
                message: "matrix size must be at least 1".into(),
            });
        }
        let mut rows = Vec::with_capacity(d);
        let mut last_line = size_line;
        for (line_no, line) in lines {
            last_line = line_no;
            if rows.len() == d {
                return Err(GcmError::Parse {
                    line: line_no,
                    column: 1,
                    message: format!("unexpected extra row (matrix size is {d})"),
                });
            }
            let mut row = Vec::with_capacity(d);
            for token in line.split_whitespace() {
                let value = token.parse::<i64>().map_err(|_| GcmError::Parse {
                    line: line_no,
                    column: column_of(line, token),
                    message: format!("expected integer, found {token:?}"),
                })?;
                row.push(value);
            }
            if row.len() != d {
                return Err(GcmError::Parse {
                    line: line_no,
                    column: line.len() + 1,
                    message: format!("expected {d} entries, found {}", row.len()),
                });
            }
            rows.push(row);
        }
        if rows.len() != d {
            return Err(GcmError::Parse {
                line: last_line + 1,
                column: 1,
                message: format!("expected {d} rows, found {}", rows.len()),
            });
        }
        Gcm::new(rows)
    }
}

fn column_of(line: &str, token: &str) -> usize {
    // token is always a subslice of line
    token.as_ptr() as usize - line.as_ptr() as usize + 1
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GcmKind {
    Spherical,
    Affine,
    Indefinite,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GcmClassification {
    pub kind: GcmKind,
    pub indecomposable: bool,
    pub two_spherical: bool,
    pub simply_laced: bool,
    #[serde(rename = "M")]
    pub max_off_diagonal: u32,
    /// The ideal-index threshold `n(A)`; absent outside its hypotheses.
    #[serde(rename = "nA")]
    pub ideal_index_threshold: Option<u128>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// `(2d-2)^2`, `3(2d-2)^4` or `188(2d-2)^16` for `M = 1, 2, 3`.
pub fn ideal_index_threshold(d: usize, max_off_diagonal: u32) -> Option<u128> {
    if d < 2 {
        return None;
    }
    let base = 2 * d as u128 - 2;
    let (factor, exp) = match max_off_diagonal {
        1 => (1u128, 2u32),
        2 => (3, 4),
        3 => (188, 16),
        _ => return None,
    };
    base.checked_pow(exp)?.checked_mul(factor)
}

/// Graph on the simple roots with `a_ij * a_ji` edges between `i != j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DynkinDiagram {
    d: usize,
    mult: Vec<u32>,
}

impl DynkinDiagram {
    pub fn vertex_count(&self) -> usize {
        self.d
    }

    /// Edge multiplicity; `None` on the diagonal.
    pub fn multiplicity(&self, i: usize, j: usize) -> Option<u32> {
        (i != j).then(|| self.mult[i * self.d + j])
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.mult[i * self.d + j] > 0
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.d).filter(move |&j| self.adjacent(i, j))
    }

    pub fn max_multiplicity(&self) -> u32 {
        self.mult.iter().copied().max().unwrap_or(0)
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.d)
            .filter(|&i| self.neighbors(i).next().is_none())
            .collect()
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.d];
        let mut out = Vec::new();
        for start in 0..self.d {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Greedy maximal independent set within `vertices`, scanning in the
    /// given order.
    pub fn greedy_independent(&self, vertices: &[usize]) -> Vec<usize> {
        let mut chosen: Vec<usize> = Vec::new();
        for &v in vertices {
            if chosen.iter().all(|&c| !self.adjacent(c, v)) {
                chosen.push(v);
            }
        }
        chosen
    }

    /// Greedy ascending-index maximal independent set of the whole diagram.
    pub fn maximal_independent(&self) -> Vec<usize> {
        let all: Vec<usize> = (0..self.d).collect();
        self.greedy_independent(&all)
    }
}

fn all_principal_minors(gcm: &Gcm, vertices: &[usize], pred: impl Fn(usize, i128) -> bool) -> bool {
    let n = vertices.len();
    let mut subset = Vec::with_capacity(n);
    for mask in 1u64..(1u64 << n) {
        subset.clear();
        subset.extend((0..n).filter(|b| mask >> b & 1 == 1).map(|b| vertices[b]));
        if !pred(subset.len(), gcm.principal_minor(&subset)) {
            return false;
        }
    }
    true
}

fn for_each_subset_of_size(n: usize, k: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, f);
            cur.pop();
        }
    }
    rec(0, n, k, &mut Vec::with_capacity(k), f);
}

/// Fraction-free Gaussian elimination; exact for integer input.
pub(crate) fn bareiss_determinant(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// Named matrices used across tests, benches and the CLI examples.
pub mod catalogue {
    use super::Gcm;

    fn build(rows: &[&[i64]]) -> Gcm {
        Gcm::new(rows.iter().map(|r| r.to_vec()).collect()).expect("catalogue matrix is a GCM")
    }

    pub fn a1() -> Gcm {
        build(&[&[2]])
    }
    pub fn a1xa1() -> Gcm {
        build(&[&[2, 0], &[0, 2]])
    }
    pub fn a2() -> Gcm {
        build(&[&[2, -1], &[-1, 2]])
    }
    /// Vertex 0 is the short simple root.
    pub fn b2() -> Gcm {
        build(&[&[2, -2], &[-1, 2]])
    }
    /// Vertex 0 is the short simple root.
    pub fn g2() -> Gcm {
        build(&[&[2, -3], &[-1, 2]])
    }
    pub fn a3() -> Gcm {
        path(3)
    }
    /// D4 with center vertex 1.
    pub fn d4_star() -> Gcm {
        build(&[&[2, -1, 0, 0], &[-1, 2, -1, -1], &[0, -1, 2, 0], &[0, -1, 0, 2]])
    }
    pub fn affine_a1() -> Gcm {
        build(&[&[2, -2], &[-2, 2]])
    }
    /// Cyclic matrix: `a_ij = -1` when `i - j = +-1 mod d`.
    pub fn cyclic(d: usize) -> Gcm {
        assert!(d >= 3, "cyclic matrix needs d >= 3");
        let rows = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| {
                        if i == j {
                            2
                        } else if (i + 1) % d == j || (j + 1) % d == i {
                            -1
                        } else {
                            0
                        }
                    })
                    .collect()
            })
            .collect();
        Gcm::new(rows).expect("cyclic matrix is a GCM")
    }
    pub fn path(d: usize) -> Gcm {
        let rows = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| if i == j { 2 } else if i.abs_diff(j) == 1 { -1 } else { 0 })
                    .collect()
            })
            .collect();
        Gcm::new(rows).expect("path matrix is a GCM")
    }
    /// Rank-3 indefinite, 2-spherical.
    pub fn indefinite_rank3() -> Gcm {
        build(&[&[2, -1, -1], &[-1, 2, -2], &[-1, -1, 2]])
    }
    /// Rank-2, not 2-spherical (product 6).
    pub fn hyperbolic_rank2() -> Gcm {
        build(&[&[2, -2], &[-3, 2]])
    }
}

#[cfg(test)]
mod tests {
    use super::catalogue::*;
    use super::*;

    #[test]
    fn validate_accepts_and_rejects() {
        assert_eq!(a2().size(), 2);
        assert_eq!(a1().size(), 1);
        let err = Gcm::new(vec![vec![2, -1], vec![0, 2]]).unwrap_err();
        assert_eq!(
            err,
            GcmError::AxiomViolation {
                i: 0,
                j: 1,
                axiom: Axiom::ZeroPattern
            }
        );
        assert!(matches!(
            Gcm::new(vec![vec![3]]),
            Err(GcmError::AxiomViolation {
                axiom: Axiom::Diagonal,
                ..
            })
        ));
        assert!(matches!(
            Gcm::new(vec![vec![2, 1], vec![-1, 2]]),
            Err(GcmError::AxiomViolation {
                axiom: Axiom::OffDiagonalSign,
                ..
            })
        ));
        assert!(matches!(Gcm::new(vec![vec![2, 0]]), Err(GcmError::NotSquare { .. })));
        assert_eq!(Gcm::new(vec![]), Err(GcmError::Empty));
    }

    #[test]
    fn classification_examples() {
        let c = a2().classify();
        assert_eq!(c.kind, GcmKind::Spherical);
        assert!(c.two_spherical && c.simply_laced && c.indecomposable);
        assert_eq!(c.max_off_diagonal, 1);
        assert_eq!(c.ideal_index_threshold, Some(4));

        let c = affine_a1().classify();
        assert_eq!(c.kind, GcmKind::Affine);
        assert_eq!(c.max_off_diagonal, 2);
        assert!(!c.two_spherical);
        assert_eq!(c.ideal_index_threshold, None);

        let c = g2().classify();
        assert_eq!(c.kind, GcmKind::Spherical);
        assert_eq!(c.max_off_diagonal, 3);
        assert!(c.two_spherical);
        assert_eq!(c.ideal_index_threshold, Some(12_320_768));
    }

    #[test]
    fn decomposable_non_spherical_is_indefinite_with_note() {
        // affine A1 block plus an isolated vertex
        let g = Gcm::new(vec![vec![2, -2, 0], vec![-2, 2, 0], vec![0, 0, 2]]).unwrap();
        let c = g.classify();
        assert_eq!(c.kind, GcmKind::Indefinite);
        assert_eq!(c.note.as_deref(), Some("decomposable"));
        assert_eq!(a1xa1().classify().kind, GcmKind::Spherical);
        assert_eq!(a1xa1().classify().note, None);
    }

    #[test]
    fn submatrix_examples() {
        let s = a3().submatrix(&[0, 2]).unwrap();
        assert_eq!(s.rows(), vec![vec![2, 0], vec![0, 2]]);
        assert_eq!(g2().submatrix(&[0]).unwrap().rows(), vec![vec![2]]);
        let r3 = indefinite_rank3();
        assert_eq!(r3.submatrix(&[0, 1]).unwrap().rows(), vec![vec![2, -1], vec![-1, 2]]);
        assert_eq!(a2().submatrix(&[]), Err(GcmError::EmptyIndexSet));
        assert_eq!(a2().submatrix(&[5]), Err(GcmError::IndexOutOfRange(5)));
    }

    #[test]
    fn k_spherical_examples() {
        assert!(a2().is_k_spherical(2).unwrap());
        assert!(!affine_a1().is_k_spherical(2).unwrap());
        assert!(cyclic(3).is_k_spherical(2).unwrap());
        assert!(!cyclic(3).is_k_spherical(3).unwrap());
        assert_eq!(a2().is_k_spherical(3), Err(GcmError::KOutOfRange { k: 3, d: 2 }));
        assert_eq!(a2().is_k_spherical(1), Err(GcmError::KOutOfRange { k: 1, d: 2 }));
    }

    #[test]
    fn determinants() {
        assert_eq!(a2().determinant(), 3);
        assert_eq!(b2().determinant(), 2);
        assert_eq!(g2().determinant(), 1);
        assert_eq!(a3().determinant(), 4);
        assert_eq!(d4_star().determinant(), 4);
        assert_eq!(affine_a1().determinant(), 0);
        assert_eq!(cyclic(3).determinant(), 0);
        assert_eq!(cyclic(5).determinant(), 0);
        assert_eq!(bareiss_determinant(vec![vec![0, 1], vec![1, 0]]), -1);
    }

    #[test]
    fn threshold_formula() {
        assert_eq!(ideal_index_threshold(2, 1), Some(4));
        assert_eq!(ideal_index_threshold(2, 2), Some(48));
        assert_eq!(ideal_index_threshold(2, 3), Some(12_320_768));
        assert_eq!(ideal_index_threshold(3, 1), Some(16));
        assert_eq!(ideal_index_threshold(1, 1), None);
        for m in 1..=3 {
            for d in 2..20 {
                assert!(ideal_index_threshold(d, m) < ideal_index_threshold(d + 1, m));
            }
        }
    }

    #[test]
    fn parse_text_format() {
        let g: Gcm = "2\n2 -1\n-1 2\n".parse().unwrap();
        assert_eq!(g, a2());
        let g: Gcm = "# comment\n\n3\n2 -1 0\n-1 2 -1\n0 -1 2\n".parse().unwrap();
        assert_eq!(g, a3());
        assert_eq!(g.to_string().parse::<Gcm>().unwrap(), g);

        match "2\n2 x\n-1 2\n".parse::<Gcm>() {
            Err(GcmError::Parse { line, column, .. }) => assert_eq!((line, column), (2, 3)),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!("2\n2 -1\n".parse::<Gcm>(), Err(GcmError::Parse { line: 3, .. })));
        assert!(matches!("2\n2 -1 0\n-1 2\n".parse::<Gcm>(), Err(GcmError::Parse { line: 2, .. })));
        assert!(matches!(
            "2\n2 -1\n0 2\n".parse::<Gcm>(),
            Err(GcmError::AxiomViolation { .. })
        ));
    }

    #[test]
    fn dynkin_diagram() {
        let dyn_ = d4_star().dynkin();
        assert_eq!(dyn_.neighbors(1).collect::<Vec<_>>(), vec![0, 2, 3]);
        assert_eq!(dyn_.multiplicity(0, 0), None);
        assert_eq!(g2().dynkin().multiplicity(0, 1), Some(3));
        assert_eq!(a3().dynkin().maximal_independent(), vec![0, 2]);
        assert_eq!(a2().dynkin().maximal_independent(), vec![0]);
        assert_eq!(a1xa1().dynkin().maximal_independent(), vec![0, 1]);
        assert_eq!(a1xa1().dynkin().isolated_vertices(), vec![0, 1]);
        assert_eq!(a1xa1().dynkin().components(), vec![vec![0], vec![1]]);
    }
}

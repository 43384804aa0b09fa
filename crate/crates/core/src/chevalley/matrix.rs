//! Matrices over `Z/q` and root-subgroup realizations in `SL_d`, the
//! Heisenberg group and `Sp_4`.

use std::fmt;
use std::str::FromStr;

use super::{ChevalleyError, Zq};
use crate::chevalley::closure::GroupElem;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MatrixElem {
    n: usize,
    q: u32,
    data: Vec<u32>,
}

impl MatrixElem {
    pub fn identity(n: usize, q: u64) -> Self {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1 % q as u32;
        }
        MatrixElem { n, q: q as u32, data }
    }

    pub fn from_rows(rows: &[Vec<i64>], q: u64) -> Self {
        let n = rows.len();
        let z = Zq { q };
        let data = rows.iter().flat_map(|r| r.iter().map(|&x| z.of(x) as u32)).collect();
        MatrixElem { n, q: q as u32, data }
    }

    /// `I + r E_{ij}` (0-based, `i != j`).
    pub fn elementary(n: usize, i: usize, j: usize, r: i64, q: u64) -> Self {
        Self::unipotent(n, &[(i, j, 1)], r, q)
    }

    /// `I + r N` where `N = sum c E_{ij}` is given as `(i, j, c)` entries.
    pub fn unipotent(n: usize, entries: &[(usize, usize, i64)], r: i64, q: u64) -> Self {
        let mut m = Self::identity(n, q);
        let z = Zq { q };
        for &(i, j, c) in entries {
            let v = z.add(m.data[i * n + j] as u64, z.of(c * r));
            m.data[i * n + j] = v as u32;
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }
    pub fn modulus(&self) -> u64 {
        self.q as u64
    }
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.n + j] as u64
    }
    pub fn rows(&self) -> Vec<Vec<u64>> {
        self.data.chunks(self.n).map(|r| r.iter().map(|&x| x as u64).collect()).collect()
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, ChevalleyError> {
        if self.n != other.n || self.q != other.q {
            return Err(ChevalleyError::TypeMismatch);
        }
        let (n, q) = (self.n, self.q as u64);
        let mut data = vec![0u32; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k] as u64;
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let idx = i * n + j;
                    data[idx] = ((data[idx] as u64 + a * other.data[k * n + j] as u64) % q) as u32;
                }
            }
        }
        Ok(MatrixElem { n, q: self.q, data })
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut data = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                data[j * n + i] = self.data[i * n + j];
            }
        }
        MatrixElem { n, q: self.q, data }
    }

    /// Inverse by Gauss-Jordan over `Z/q`; `None` when a pivot is not a unit.
    pub fn inverse(&self) -> Option<Self> {
        let (n, q) = (self.n, self.q as u64);
        let z = Zq { q };
        let mut a: Vec<Vec<u64>> = self.rows();
        let mut inv: Vec<Vec<u64>> = Self::identity(n, q).rows();
        for col in 0..n {
            let pivot = (col..n).find(|&r| unit_inverse(a[r][col], q).is_some())?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let p = unit_inverse(a[col][col], q)?;
            for j in 0..n {
                a[col][j] = z.mul(a[col][j], p);
                inv[col][j] = z.mul(inv[col][j], p);
            }
            for r in 0..n {
                if r != col && a[r][col] != 0 {
                    let f = a[r][col];
                    for j in 0..n {
                        a[r][j] = z.sub(a[r][j], z.mul(f, a[col][j]));
                        inv[r][j] = z.sub(inv[r][j], z.mul(f, inv[col][j]));
                    }
                }
            }
        }
        let data = inv.into_iter().flatten().map(|x| x as u32).collect();
        Some(MatrixElem { n, q: self.q, data })
    }

    /// `g^-1 h^-1 g h`
    pub fn commutator(&self, other: &Self) -> Option<Self> {
        let gi = self.inverse()?;
        let hi = other.inverse()?;
        gi.try_mul(&hi).ok()?.try_mul(self).ok()?.try_mul(other).ok()
    }

    /// Determinant over `Z/q` by cofactor expansion along the first row.
    pub fn det(&self) -> u64 {
        let rows: Vec<Vec<i64>> = self.rows().into_iter().map(|r| r.into_iter().map(|x| x as i64).collect()).collect();
        let d = crate::gcm::bareiss_determinant(
            rows.into_iter().map(|r| r.into_iter().map(i128::from).collect()).collect(),
        );
        d.rem_euclid(self.q as i128) as u64
    }

    /// `g^T J g = J` for the antidiagonal form `J = antidiag(1, 1, -1, -1)`.
    pub fn is_symplectic(&self) -> bool {
        if self.n != 4 {
            return false;
        }
        let j = symplectic_form(self.q as u64);
        self.transpose().try_mul(&j).and_then(|m| m.try_mul(self)).map(|m| m == j).unwrap_or(false)
    }
}

fn unit_inverse(a: u64, q: u64) -> Option<u64> {
    let (mut r0, mut r1) = (q as i64, a as i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let k = r0 / r1;
        (r0, r1) = (r1, r0 - k * r1);
        (t0, t1) = (t1, t0 - k * t1);
    }
    (r0 == 1).then(|| t0.rem_euclid(q as i64) as u64)
}

pub fn symplectic_form(q: u64) -> MatrixElem {
    MatrixElem::from_rows(
        &[vec![0, 0, 0, 1], vec![0, 0, 1, 0], vec![0, -1, 0, 0], vec![-1, 0, 0, 0]],
        q,
    )
}

impl fmt::Debug for MatrixElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M{}/Z{}{:?}", self.n, self.q, self.rows())
    }
}

impl GroupElem for MatrixElem {
    fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("matching matrix groups")
    }
    fn identity_like(&self) -> Self {
        Self::identity(self.n, self.q as u64)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixKind {
    /// Type `A_{d-1}` roots in `SL_d`.
    SL(usize),
    /// Upper unitriangular `3 x 3` matrices; positive `A_2` roots only.
    Heis,
    /// `B_2` roots in `Sp_4`.
    B2,
    G2,
}

impl FromStr for MatrixKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let lower = s.to_ascii_lowercase();
        match lower.as_str() {
            "a2" | "sl3" => Ok(MatrixKind::SL(3)),
            "heis" => Ok(MatrixKind::Heis),
            "b2" | "sp4" => Ok(MatrixKind::B2),
            "g2" => Ok(MatrixKind::G2),
            _ => lower
                .strip_prefix("sl")
                .and_then(|d| d.parse().ok())
                .filter(|&d: &usize| d >= 2)
                .map(MatrixKind::SL)
                .ok_or_else(|| format!("unknown matrix group {s:?}")),
        }
    }
}

/// Entries `(i, j, c)` of `N` with `x_root(r) = I + r N` in `Sp_4`; roots are
/// `(a, b)` for `a*alpha + b*beta`, alpha long.
pub type Sp4Table = [((i64, i64), &'static [(usize, usize, i64)]); 8];

/// Signs fixed once by [`discover_sp4_signs`] and frozen here.
pub const SP4_ROOTS: Sp4Table = [
    ((1, 0), &[(1, 2, 1)]),
    ((0, 1), &[(0, 1, -1), (2, 3, 1)]),
    ((1, 1), &[(0, 2, 1), (1, 3, 1)]),
    ((1, 2), &[(0, 3, 1)]),
    ((-1, 0), &[(2, 1, 1)]),
    ((0, -1), &[(1, 0, 1), (3, 2, -1)]),
    ((-1, -1), &[(2, 0, 1), (3, 1, 1)]),
    ((-1, -2), &[(3, 0, 1)]),
];

/// `x_root(r)` as a matrix.
pub fn matrix_realize(kind: MatrixKind, root: &[i64], r: i64, q: u64) -> Result<MatrixElem, ChevalleyError> {
    Zq::new(q)?;
    let not_root = || ChevalleyError::NotARoot(format!("{root:?}"));
    match kind {
        MatrixKind::SL(d) => {
            if root.len() + 1 != d {
                return Err(not_root());
            }
            let (i, j) = type_a_positions(root).ok_or_else(not_root)?;
            Ok(MatrixElem::elementary(d, i, j, r, q))
        }
        MatrixKind::Heis => {
            if root.len() != 2 || root.iter().any(|&c| c < 0) {
                return Err(not_root());
            }
            let (i, j) = type_a_positions(root).ok_or_else(not_root)?;
            Ok(MatrixElem::elementary(3, i, j, r, q))
        }
        MatrixKind::B2 => {
            let key = match root {
                [a, b] => (*a, *b),
                _ => return Err(not_root()),
            };
            let (_, entries) = SP4_ROOTS.iter().find(|(k, _)| *k == key).ok_or_else(not_root)?;
            Ok(MatrixElem::unipotent(4, entries, r, q))
        }
        MatrixKind::G2 => Err(ChevalleyError::Unsupported("G2 matrix realization".into())),
    }
}

/// `a_i + ... + a_{j-1}` maps to `(i, j)`, its negative to `(j, i)`.
fn type_a_positions(root: &[i64]) -> Option<(usize, usize)> {
    let sign = *root.iter().find(|&&c| c != 0)?;
    if sign.abs() != 1 || root.iter().any(|&c| c != 0 && c != sign) {
        return None;
    }
    let support: Vec<usize> = (0..root.len()).filter(|&k| root[k] != 0).collect();
    let (lo, hi) = (support[0], *support.last()?);
    if hi - lo + 1 != support.len() {
        return None;
    }
    Some(if sign > 0 { (lo, hi + 1) } else { (hi + 1, lo) })
}

/// Overall signs `(alpha, beta, alpha+beta, alpha+2beta)` for which the
/// `B_2` relations hold in `Sp_4(Z/q)` for every `r, s`; the inner signs of
/// two-term roots are forced by the symplectic condition.
pub fn discover_sp4_signs(q: u64) -> Vec<[i64; 4]> {
    let shapes: [&[(usize, usize)]; 4] = [&[(1, 2)], &[(0, 1), (2, 3)], &[(0, 2), (1, 3)], &[(0, 3)]];
    // symplectic inner signs for each shape
    let inner: Vec<Vec<(usize, usize, i64)>> = shapes
        .iter()
        .map(|shape| {
            // first entry normalized to +1
            (0..1u32 << (shape.len() - 1))
                .map(|mask| mask << 1)
                .map(|mask| {
                    shape
                        .iter()
                        .enumerate()
                        .map(|(k, &(i, j))| (i, j, if mask >> k & 1 == 1 { -1 } else { 1 }))
                        .collect::<Vec<_>>()
                })
                .find(|e| MatrixElem::unipotent(4, e, 1, q).is_symplectic())
                .expect("a symplectic sign choice exists")
        })
        .collect();
    let mut found = Vec::new();
    for mask in 0..16u32 {
        let signs: [i64; 4] = std::array::from_fn(|k| if mask >> k & 1 == 1 { -1 } else { 1 });
        let x = |root: usize, r: i64| {
            let entries: Vec<_> = inner[root].iter().map(|&(i, j, c)| (i, j, c * signs[root])).collect();
            MatrixElem::unipotent(4, &entries, r, q)
        };
        if b2_relations_hold(&x, q) {
            found.push(signs);
        }
    }
    found
}

/// The two `B_2` relations plus the commuting pairs, for all `r, s` in `Z/q`;
/// `x(k, r)` realizes root `k` in the order `alpha, beta, alpha+beta, alpha+2beta`.
pub fn b2_relations_hold(x: &dyn Fn(usize, i64) -> MatrixElem, q: u64) -> bool {
    let q = q as i64;
    for r in 0..q {
        for s in 0..q {
            let c = |a: usize, b: usize| x(a, r).commutator(&x(b, s)).expect("unipotent");
            let rel1 = x(2, r * s).try_mul(&x(3, r * s * s)).expect("same group");
            let rel2 = x(3, 2 * r * s);
            let id = MatrixElem::identity(4, q as u64);
            if c(0, 1) != rel1 || c(2, 1) != rel2 {
                return false;
            }
            for (a, b) in [(0, 2), (0, 3), (2, 3), (1, 3)] {
                if c(a, b) != id {
                    return false;
                }
            }
        }
    }
    true
}

/// The two commutator relations of `B_2` in `Sp_4(Z/q)` under the frozen table.
pub fn frozen_sp4_relations_hold(q: u64) -> bool {
    let roots = [(1, 0), (0, 1), (1, 1), (1, 2)];
    let x = |k: usize, r: i64| {
        let (a, b): (i64, i64) = roots[k];
        matrix_realize(MatrixKind::B2, &[a, b], r, q).expect("B2 root")
    };
    b2_relations_hold(&x, q)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn heisenberg_commutator() {
        for r in 0..5 {
            for s in 0..5 {
                let a = matrix_realize(MatrixKind::Heis, &[1, 0], r, 5).unwrap();
                let b = matrix_realize(MatrixKind::Heis, &[0, 1], s, 5).unwrap();
                let c = matrix_realize(MatrixKind::Heis, &[1, 1], r * s, 5).unwrap();
                assert_eq!(a.commutator(&b).unwrap(), c);
            }
        }
    }

    #[test]
    fn realizations() {
        let e = matrix_realize(MatrixKind::SL(3), &[1, 0], 4, 7).unwrap();
        assert_eq!(e, MatrixElem::elementary(3, 0, 1, 4, 7));
        let e = matrix_realize(MatrixKind::SL(4), &[0, -1, -1], 1, 7).unwrap();
        assert_eq!(e, MatrixElem::elementary(4, 3, 1, 1, 7));
        assert!(matrix_realize(MatrixKind::SL(3), &[1, -1], 1, 7).is_err());
        assert!(matrix_realize(MatrixKind::Heis, &[0, -1], 1, 7).is_err());
        assert!(matches!(
            matrix_realize(MatrixKind::G2, &[1, 0], 1, 7),
            Err(ChevalleyError::Unsupported(_))
        ));
        assert_eq!("sl5".parse::<MatrixKind>(), Ok(MatrixKind::SL(5)));
    }

    #[test]
    fn sp4_table_is_symplectic() {
        for (root, _) in SP4_ROOTS.iter() {
            for r in 0..5 {
                let m = matrix_realize(MatrixKind::B2, &[root.0, root.1], r, 5).unwrap();
                assert!(m.is_symplectic(), "{root:?}");
                assert_eq!(m.det(), 1);
            }
        }
    }

    #[test]
    fn sp4_frozen_signs_regression() {
        let found = discover_sp4_signs(5);
        assert!(!found.is_empty());
        assert_eq!(found[0], [1, -1, 1, 1]);
        assert!(frozen_sp4_relations_hold(5));
        assert!(frozen_sp4_relations_hold(7));
    }

    #[test]
    fn inverse_and_det() {
        let m = MatrixElem::from_rows(&[vec![2, 1], vec![1, 1]], 7);
        let inv = m.inverse().unwrap();
        assert_eq!(m.try_mul(&inv).unwrap(), MatrixElem::identity(2, 7));
        assert_eq!(m.det(), 1);
        assert!(MatrixElem::from_rows(&[vec![2, 0], vec![0, 1]], 4).inverse().is_none());
    }
}

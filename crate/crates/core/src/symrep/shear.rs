//! Binomial shear matrices of the symmetric-power representations of `SL_2`
//! and the polynomial-substitution oracle that pins their convention.

use serde::Serialize;

use super::SymrepError;
use crate::chevalley::{MatrixElem, Zq};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Orientation {
    /// Image of `E_12(s)`.
    Upper,
    /// Image of `E_21(s)`.
    Lower,
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k.min(n - k)).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `n x n` unitriangular matrix whose entries are monomials `c s^e` in the
/// parameter `s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShearMatrix {
    pub n: usize,
    pub orientation: Orientation,
}

pub fn shear(n: usize, orientation: Orientation) -> Result<ShearMatrix, SymrepError> {
    if n < 2 {
        return Err(SymrepError::BadN(n));
    }
    Ok(ShearMatrix { n, orientation })
}

impl ShearMatrix {
    /// Entry `(k, i)` as `(c, e)` meaning `c s^e`; zero entries give `None`.
    pub fn entry(&self, k: usize, i: usize) -> Option<(u64, u32)> {
        let top = (self.n - 1) as u64;
        let (k64, i64_) = (k as u64, i as u64);
        match self.orientation {
            Orientation::Upper if i >= k => Some((binomial(top - k64, i64_ - k64), (i - k) as u32)),
            Orientation::Lower if i <= k => Some((binomial(k64, k64 - i64_), (k - i) as u32)),
            _ => None,
        }
    }

    /// All entries as `(c, e)` pairs, `(0, 0)` standing for zero.
    pub fn symbolic(&self) -> Vec<Vec<(u64, u32)>> {
        (0..self.n)
            .map(|k| (0..self.n).map(|i| self.entry(k, i).unwrap_or((0, 0))).collect())
            .collect()
    }

    /// Numeric matrix at `s` over `Z/q`.
    pub fn eval(&self, s: i64, q: u64) -> MatrixElem {
        let z = Zq { q };
        let s = z.of(s);
        let rows: Vec<Vec<i64>> = (0..self.n)
            .map(|k| {
                (0..self.n)
                    .map(|i| match self.entry(k, i) {
                        Some((c, e)) => z.mul(z.of(c as i64), z.pow(s, e)) as i64,
                        None => 0,
                    })
                    .collect()
            })
            .collect();
        MatrixElem::from_rows(&rows, q)
    }
}

/// How a `2 x 2` matrix acts on binary forms of degree `n - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SymConvention {
    /// `x -> g11 x + g12 y, y -> g21 x + g22 y` when true; the transpose otherwise.
    pub row_substitution: bool,
    /// Basis `x^{n-1-k} y^k` when true, `x^k y^{n-1-k}` otherwise.
    pub x_first: bool,
    /// Images of basis vectors written as rows when true, as columns otherwise.
    pub images_as_rows: bool,
}

/// The convention reproducing the shear matrices verbatim.
pub const SYM_CONVENTION: SymConvention = SymConvention {
    row_substitution: true,
    x_first: true,
    images_as_rows: true,
};

impl SymConvention {
    pub fn all() -> impl Iterator<Item = SymConvention> {
        (0..8u8).map(|m| SymConvention {
            row_substitution: m & 1 == 0,
            x_first: m & 2 == 0,
            images_as_rows: m & 4 == 0,
        })
    }
}

/// Matrix of the induced action on degree-`(n-1)` forms under [`SYM_CONVENTION`].
pub fn sym_power_oracle(n: usize, g: [[i64; 2]; 2], q: u64) -> Result<MatrixElem, SymrepError> {
    sym_power_with(n, g, q, SYM_CONVENTION)
}

pub fn sym_power_with(n: usize, g: [[i64; 2]; 2], q: u64, conv: SymConvention) -> Result<MatrixElem, SymrepError> {
    if n < 2 {
        return Err(SymrepError::BadN(n));
    }
    let z = Zq { q };
    let deg = n - 1;
    // images of x and y as (coefficient of x, coefficient of y)
    let (img_x, img_y) = if conv.row_substitution {
        ((g[0][0], g[0][1]), (g[1][0], g[1][1]))
    } else {
        ((g[0][0], g[1][0]), (g[0][1], g[1][1]))
    };
    // polynomial in x, y of degree `deg` stored by power of y
    let power = |lin: (i64, i64), e: usize| -> Vec<u64> {
        let mut p = vec![0u64; e + 1];
        p[0] = 1 % q;
        for _ in 0..e {
            let mut next = vec![0u64; e + 1];
            for (j, &c) in p.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                next[j] = z.add(next[j], z.mul(c, z.of(lin.0)));
                if j < e {
                    next[j + 1] = z.add(next[j + 1], z.mul(c, z.of(lin.1)));
                }
            }
            p = next;
        }
        p
    };
    let y_power = |k: usize| if conv.x_first { k } else { deg - k };
    let mut rows = vec![vec![0i64; n]; n];
    for k in 0..n {
        let yk = y_power(k);
        let px = power(img_x, deg - yk);
        let py = power(img_y, yk);
        // product of x-image^(deg-yk) and y-image^yk, indexed by y-degree
        let mut prod = vec![0u64; deg + 1];
        for (a, &ca) in px.iter().enumerate() {
            for (b, &cb) in py.iter().enumerate() {
                if a + b <= deg {
                    prod[a + b] = z.add(prod[a + b], z.mul(ca, cb));
                }
            }
        }
        for i in 0..n {
            let c = prod[y_power(i)] as i64;
            if conv.images_as_rows {
                rows[k][i] = c;
            } else {
                rows[i][k] = c;
            }
        }
    }
    Ok(MatrixElem::from_rows(&rows, q))
}

/// Conventions under which the oracle reproduces both shear orientations for
/// every `n` in `ns` and every `s` in `Z/q`.
pub fn matching_conventions(ns: std::ops::RangeInclusive<usize>, q: u64) -> Vec<SymConvention> {
    SymConvention::all()
        .filter(|&conv| {
            ns.clone().all(|n| {
                (0..q as i64).all(|s| {
                    let up = sym_power_with(n, [[1, s], [0, 1]], q, conv).expect("n >= 2");
                    let lo = sym_power_with(n, [[1, 0], [s, 1]], q, conv).expect("n >= 2");
                    up == shear(n, Orientation::Upper).unwrap().eval(s, q)
                        && lo == shear(n, Orientation::Lower).unwrap().eval(s, q)
                })
            })
        })
        .collect()
}

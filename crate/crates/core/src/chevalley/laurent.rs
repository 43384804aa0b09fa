//! Matrices over `Z/q[t, t^-1]` with a fixed degree window, and the check
//! that the affine map into `EL_d` respects the root-subgroup relations.

use std::fmt;

use super::{ChevalleyError, Zq};
use crate::report::{CheckReport, CheckResult};

/// Laurent polynomial with degrees in `[-window, window]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    window: i64,
    q: u64,
    coeffs: Vec<u64>,
}

impl LaurentPoly {
    pub fn zero(window: i64, q: u64) -> Self {
        LaurentPoly {
            window,
            q,
            coeffs: vec![0; (2 * window + 1) as usize],
        }
    }

    /// `c t^degree`
    pub fn monomial(c: i64, degree: i64, window: i64, q: u64) -> Result<Self, ChevalleyError> {
        let mut p = Self::zero(window, q);
        if degree.abs() > window {
            return Err(ChevalleyError::WindowBreach { degree, window });
        }
        p.coeffs[(degree + window) as usize] = Zq { q }.of(c);
        Ok(p)
    }

    pub fn coeff(&self, degree: i64) -> u64 {
        if degree.abs() > self.window {
            0
        } else {
            self.coeffs[(degree + self.window) as usize]
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let z = Zq { q: self.q };
        LaurentPoly {
            window: self.window,
            q: self.q,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(&a, &b)| z.add(a, b)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        let z = Zq { q: self.q };
        LaurentPoly {
            window: self.window,
            q: self.q,
            coeffs: self.coeffs.iter().map(|&a| z.neg(a)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, ChevalleyError> {
        let z = Zq { q: self.q };
        let w = self.window;
        let mut out = Self::zero(w, self.q);
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let degree = i as i64 + j as i64 - 2 * w;
                let c = z.mul(a, b);
                if c == 0 {
                    continue;
                }
                if degree.abs() > w {
                    return Err(ChevalleyError::WindowBreach { degree, window: w });
                }
                let k = (degree + w) as usize;
                out.coeffs[k] = z.add(out.coeffs[k], c);
            }
        }
        Ok(out)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = (-self.window..=self.window)
            .filter(|&k| self.coeff(k) != 0)
            .map(|k| format!("{}t^{k}", self.coeff(k)))
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join("+"))
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LaurentMatrixElem {
    d: usize,
    entries: Vec<LaurentPoly>,
}

impl LaurentMatrixElem {
    pub fn identity(d: usize, window: i64, q: u64) -> Self {
        let mut entries = vec![LaurentPoly::zero(window, q); d * d];
        for i in 0..d {
            entries[i * d + i] = LaurentPoly::monomial(1, 0, window, q).expect("degree 0 fits");
        }
        LaurentMatrixElem { d, entries }
    }

    /// `I + p E_{ij}`
    pub fn elementary(d: usize, i: usize, j: usize, p: LaurentPoly) -> Self {
        let mut m = Self::identity(d, p.window, p.q);
        m.entries[i * d + j] = m.entries[i * d + j].add(&p);
        m
    }

    pub fn entry(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i * self.d + j]
    }

    pub fn mul(&self, other: &Self) -> Result<Self, ChevalleyError> {
        let d = self.d;
        let proto = &self.entries[0];
        let mut entries = vec![LaurentPoly::zero(proto.window, proto.q); d * d];
        for i in 0..d {
            for k in 0..d {
                let a = &self.entries[i * d + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let prod = a.mul(&other.entries[k * d + j])?;
                    entries[i * d + j] = entries[i * d + j].add(&prod);
                }
            }
        }
        Ok(LaurentMatrixElem { d, entries })
    }

    /// Inverse of a unipotent matrix `I + N`: `sum_k (-N)^k`.
    pub fn unipotent_inverse(&self) -> Result<Self, ChevalleyError> {
        let (w, q) = (self.entries[0].window, self.entries[0].q);
        let id = Self::identity(self.d, w, q);
        let minus_n = LaurentMatrixElem {
            d: self.d,
            entries: self
                .entries
                .iter()
                .zip(&id.entries)
                .map(|(a, i)| a.add(&i.neg()).neg())
                .collect(),
        };
        let mut sum = id.clone();
        let mut power = id.clone();
        for _ in 1..self.d {
            power = power.mul(&minus_n)?;
            sum = LaurentMatrixElem {
                d: self.d,
                entries: sum.entries.iter().zip(&power.entries).map(|(a, b)| a.add(b)).collect(),
            };
        }
        if self.mul(&sum)? != id {
            return Err(ChevalleyError::BadParameter("matrix is not unipotent".into()));
        }
        Ok(sum)
    }

    /// `g^-1 h^-1 g h` for unipotent `g, h`.
    pub fn commutator(&self, other: &Self) -> Result<Self, ChevalleyError> {
        self.unipotent_inverse()?
            .mul(&other.unipotent_inverse()?)?
            .mul(self)?
            .mul(other)
    }
}

/// Images of `x_{+-a_i}(r)` under the affine map (0-based `i`):
/// `x_{a_i}(r) -> E_{i,i+1}(r)`, `x_{a_{d-1}}(r) -> E_{d-1,0}(rt)`, and the
/// transposed pattern with `t^-1` for negative roots.
pub struct AffineMap {
    d: usize,
    window: i64,
    q: u64,
}

impl AffineMap {
    pub fn new(d: usize, q: u64, window: i64) -> Result<Self, ChevalleyError> {
        Zq::new(q)?;
        if d < 3 {
            return Err(ChevalleyError::BadParameter("d must be at least 3".into()));
        }
        if window < 4 {
            return Err(ChevalleyError::BadParameter("window must be at least 4".into()));
        }
        Ok(AffineMap { d, window, q })
    }

    fn wraps(&self, i: usize) -> i64 {
        i64::from(i == self.d - 1)
    }

    fn e(&self, i: usize, j: usize, c: i64, degree: i64) -> Result<LaurentMatrixElem, ChevalleyError> {
        let p = LaurentPoly::monomial(c, degree, self.window, self.q)?;
        Ok(LaurentMatrixElem::elementary(self.d, i, j, p))
    }

    pub fn positive(&self, i: usize, r: i64) -> Result<LaurentMatrixElem, ChevalleyError> {
        self.e(i, (i + 1) % self.d, r, self.wraps(i))
    }

    pub fn negative(&self, i: usize, r: i64) -> Result<LaurentMatrixElem, ChevalleyError> {
        self.e((i + 1) % self.d, i, r, -self.wraps(i))
    }
}

pub fn affine_pi_check(d: usize, q: u64, window: i64) -> Result<CheckReport, ChevalleyError> {
    let pi = AffineMap::new(d, q, window)?;
    let qi = q as i64;
    let pairs = || (0..qi).flat_map(|r| (0..qi).map(move |s| (r, s)));
    let id = LaurentMatrixElem::identity(d, window, q);
    let mut report = CheckReport::default();

    let mut r1 = CheckResult::new("R1 additivity");
    for i in 0..d {
        for (r, s) in pairs() {
            for sign in [1, -1] {
                let x = |c| if sign > 0 { pi.positive(i, c) } else { pi.negative(i, c) };
                let ok = x(r)?.mul(&x(s)?)? == x(r + s)?;
                r1.record(ok, || format!("root {}{i}, r={r}, s={s}", if sign > 0 { "+" } else { "-" }));
            }
        }
    }
    report.push(r1);

    let mut pos = CheckResult::new("R2 adjacent positive");
    let mut neg = CheckResult::new("R2 adjacent negative");
    for i in 0..d {
        let j = (i + 1) % d;
        let k = (i + 2) % d;
        let degree = pi.wraps(i) + pi.wraps(j);
        for (r, s) in pairs() {
            let got = pi.positive(i, r)?.commutator(&pi.positive(j, s)?)?;
            pos.record(got == pi.e(i, k, r * s, degree)?, || format!("pair ({i}, {j}), r={r}, s={s}"));
            let got = pi.negative(i, r)?.commutator(&pi.negative(j, s)?)?;
            neg.record(got == pi.e(k, i, -r * s, -degree)?, || format!("pair (-{i}, -{j}), r={r}, s={s}"));
        }
    }
    report.push(pos);
    report.push(neg);

    let mut commute = CheckResult::new("R2 commuting pairs");
    for i in 0..d {
        for j in 0..d {
            let adjacent = j == (i + 1) % d || i == (j + 1) % d;
            for (r, s) in pairs() {
                if i != j {
                    let c = pi.positive(i, r)?.commutator(&pi.negative(j, s)?)?;
                    commute.record(c == id, || format!("(+{i}, -{j}), r={r}, s={s}"));
                }
                if i < j && !adjacent {
                    let c = pi.positive(i, r)?.commutator(&pi.positive(j, s)?)?;
                    commute.record(c == id, || format!("(+{i}, +{j}), r={r}, s={s}"));
                }
            }
        }
    }
    report.push(commute);
    Ok(report)
}

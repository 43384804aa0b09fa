//! Finitely supported Laurent series in `t^-1` with `Z/q` coefficients, and
//! 4-vectors of them under the right action of the shear matrices.

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;

use super::shear::{shear, Orientation};
use super::SymrepError;
use crate::chevalley::Zq;

/// Series stored as power of `t` -> nonzero coefficient.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Series {
    q: u64,
    terms: BTreeMap<i64, u64>,
}

impl Series {
    pub fn zero(q: u64) -> Self {
        Series { q, terms: BTreeMap::new() }
    }

    /// `c t^power`
    pub fn monomial(c: i64, power: i64, q: u64) -> Self {
        let mut s = Self::zero(q);
        s.add_term(power, Zq { q }.of(c));
        s
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, i64)>, q: u64) -> Self {
        let mut s = Self::zero(q);
        for (p, c) in terms {
            s.add_term(p, Zq { q }.of(c));
        }
        s
    }

    fn add_term(&mut self, power: i64, c: u64) {
        let z = Zq { q: self.q };
        let v = z.add(self.terms.get(&power).copied().unwrap_or(0), c);
        if v == 0 {
            self.terms.remove(&power);
        } else {
            self.terms.insert(power, v);
        }
    }

    pub fn modulus(&self) -> u64 {
        self.q
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, u64)> + '_ {
        self.terms.iter().map(|(&p, &c)| (p, c))
    }

    /// Highest power of `t` present; `None` is `-infinity`.
    pub fn valuation(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Leading term `(power, coefficient)`.
    pub fn leading(&self) -> Option<(i64, u64)> {
        self.terms.iter().next_back().map(|(&p, &c)| (p, c))
    }

    pub fn leading_series(&self) -> Series {
        match self.leading() {
            Some((p, c)) => Series::monomial(c as i64, p, self.q),
            None => Series::zero(self.q),
        }
    }

    pub fn add(&self, other: &Series) -> Series {
        let mut out = self.clone();
        for (p, c) in other.terms() {
            out.add_term(p, c);
        }
        out
    }

    pub fn neg(&self) -> Series {
        self.scale(-1)
    }

    pub fn scale(&self, k: i64) -> Series {
        let z = Zq { q: self.q };
        let k = z.of(k);
        let mut out = Series::zero(self.q);
        for (p, c) in self.terms() {
            out.add_term(p, z.mul(c, k));
        }
        out
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i64) -> Series {
        Series {
            q: self.q,
            terms: self.terms.iter().map(|(&p, &c)| (p + k, c)).collect(),
        }
    }

    /// Random series with support in powers `-window ..= -1`: zero with
    /// probability `1/(window+1)`, otherwise a uniformly chosen top power
    /// with a nonzero leading coefficient and uniform lower coefficients.
    pub fn sample<R: Rng>(rng: &mut R, q: u64, window: i64) -> Series {
        let top = rng.gen_range(0..=window);
        if top == 0 {
            return Series::zero(q);
        }
        let mut s = Series::monomial(rng.gen_range(1..q) as i64, -top, q);
        for p in -window..-top {
            s.add_term(p, rng.gen_range(0..q));
        }
        s
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().rev().map(|(p, c)| format!("{c}t^{p}")).collect();
        f.write_str(&parts.join(" + "))
    }
}

/// The shear parameters `+-1, +-t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Param {
    One,
    MinusOne,
    T,
    MinusT,
}

impl Param {
    /// `c t^e` as a parameter; only `c = +-1`, `e in {0, 1}` are allowed.
    pub fn from_monomial(c: i64, e: i64) -> Result<Param, SymrepError> {
        match (c, e) {
            (1, 0) => Ok(Param::One),
            (-1, 0) => Ok(Param::MinusOne),
            (1, 1) => Ok(Param::T),
            (-1, 1) => Ok(Param::MinusT),
            _ => Err(SymrepError::UnsupportedS),
        }
    }

    fn parts(self) -> (i64, i64) {
        match self {
            Param::One => (1, 0),
            Param::MinusOne => (-1, 0),
            Param::T => (1, 1),
            Param::MinusT => (-1, 1),
        }
    }

    pub fn negate(self) -> Param {
        let (c, e) = self.parts();
        Param::from_monomial(-c, e).expect("closed under negation")
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Param::One => "1",
            Param::MinusOne => "-1",
            Param::T => "t",
            Param::MinusT => "-t",
        })
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SeriesVec(pub [Series; 4]);

impl SeriesVec {
    pub fn zero(q: u64) -> Self {
        SeriesVec(std::array::from_fn(|_| Series::zero(q)))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Series::is_zero)
    }

    pub fn valuations(&self) -> [Option<i64>; 4] {
        std::array::from_fn(|i| self.0[i].valuation())
    }

    pub fn sample<R: Rng>(rng: &mut R, q: u64, window: i64) -> Self {
        SeriesVec(std::array::from_fn(|_| Series::sample(rng, q, window)))
    }

    /// Row vector times `U_+^s` or `U_-^s`.
    pub fn act(&self, orientation: Orientation, s: Param) -> SeriesVec {
        let m = shear(4, orientation).expect("n = 4");
        let (sign, e) = s.parts();
        let q = self.0[0].modulus();
        SeriesVec(std::array::from_fn(|i| {
            (0..4).fold(Series::zero(q), |acc, k| match m.entry(k, i) {
                Some((c, power)) => {
                    let coeff = c as i64 * sign.pow(power);
                    acc.add(&self.0[k].scale(coeff).shift(e * power as i64))
                }
                None => acc,
            })
        }))
    }

    /// Applies the factors left to right.
    pub fn act_word(&self, word: &[(Orientation, Param)]) -> SeriesVec {
        word.iter().fold(self.clone(), |v, &(o, s)| v.act(o, s))
    }
}

impl fmt::Debug for SeriesVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?}, {:?}, {:?})", self.0[0], self.0[1], self.0[2], self.0[3])
    }
}

//! Ring specifications: `Z/q`, `Z[1/n!]`, `Z[i, 1/n!]` and polynomial
//! extensions, with the smallest index of a proper ideal.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingSpec {
    ZmodN { q: u64 },
    /// `Z[1/n!]`
    LocalizedFactorial { n: u64 },
    /// `Z[i, 1/n!]`
    GaussianLocalized { n: u64 },
    /// `base[t]`
    PolyExtension { base: Box<RingSpec> },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("ring spec column {column}: {message}")]
pub struct RingParseError {
    pub column: usize,
    pub message: String,
}

impl RingSpec {
    /// Smallest index of a proper ideal.
    pub fn min_ideal_index(&self) -> u64 {
        match self {
            RingSpec::ZmodN { q } => least_prime_factor(*q),
            RingSpec::LocalizedFactorial { n } => next_prime_above(*n),
            RingSpec::GaussianLocalized { n } => {
                // residue fields of Z[i]: F_2 (ramified), F_p for p = 1 mod 4,
                // F_{p^2} for p = 3 mod 4
                let mut best = next_prime_above_in_class(*n, 1);
                let inert = next_prime_above_in_class(*n, 3);
                best = best.min(inert.saturating_mul(inert));
                if *n < 2 {
                    best = best.min(2);
                }
                best
            }
            RingSpec::PolyExtension { base } => base.min_ideal_index(),
        }
    }

    /// Whether the integer `k >= 1` is a unit.
    pub fn is_unit(&self, k: u64) -> bool {
        match self {
            RingSpec::ZmodN { q } => gcd(*q, k) == 1,
            RingSpec::LocalizedFactorial { n } | RingSpec::GaussianLocalized { n } => {
                prime_factors(k).iter().all(|p| p <= n)
            }
            RingSpec::PolyExtension { base } => base.is_unit(k),
        }
    }

    /// The integers in `2..=m` that are not units.
    pub fn missing_units(&self, m: u64) -> Vec<u64> {
        (2..=m).filter(|&k| !self.is_unit(k)).collect()
    }

    /// The modulus when elements can be materialized.
    pub fn modulus(&self) -> Option<u64> {
        match self {
            RingSpec::ZmodN { q } => Some(*q),
            _ => None,
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::ZmodN { q } => write!(f, "Z/{q}"),
            RingSpec::LocalizedFactorial { n } => write!(f, "Zloc!{n}"),
            RingSpec::GaussianLocalized { n } => write!(f, "Zi!{n}"),
            RingSpec::PolyExtension { base } => write!(f, "poly({base})"),
        }
    }
}

impl Serialize for RingSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for RingSpec {
    type Err = RingParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = Parser { src: s, pos: 0 };
        let spec = p.ring()?;
        if p.pos != s.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(spec)
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> RingParseError {
        RingParseError {
            column: self.pos + 1,
            message: message.to_string(),
        }
    }

    fn eat(&mut self, token: &str) -> bool {
        if self.src[self.pos..].starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Result<u64, RingParseError> {
        let digits = self.src[self.pos..]
            .bytes()
            .take_while(u8::is_ascii_digit)
            .count();
        if digits == 0 {
            return Err(self.error("expected a number"));
        }
        let text = &self.src[self.pos..self.pos + digits];
        let value = text.parse().map_err(|_| self.error("number too large"))?;
        self.pos += digits;
        Ok(value)
    }

    fn ring(&mut self) -> Result<RingSpec, RingParseError> {
        if self.eat("poly(") {
            let base = self.ring()?;
            if !self.eat(")") {
                return Err(self.error("expected ')'"));
            }
            return Ok(RingSpec::PolyExtension { base: Box::new(base) });
        }
        if self.eat("Zloc!") {
            let start = self.pos;
            let n = self.number()?;
            if n < 1 {
                self.pos = start;
                return Err(self.error("n must be at least 1"));
            }
            return Ok(RingSpec::LocalizedFactorial { n });
        }
        if self.eat("Zi!") {
            let start = self.pos;
            let n = self.number()?;
            if n < 1 {
                self.pos = start;
                return Err(self.error("n must be at least 1"));
            }
            return Ok(RingSpec::GaussianLocalized { n });
        }
        if self.eat("Z/") {
            let start = self.pos;
            let q = self.number()?;
            if q < 2 {
                self.pos = start;
                return Err(self.error("modulus must be at least 2"));
            }
            return Ok(RingSpec::ZmodN { q });
        }
        Err(self.error("expected one of 'Z/', 'Zloc!', 'Zi!', 'poly('"))
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            return false;
        }
        p += 1;
    }
    true
}

pub fn least_prime_factor(n: u64) -> u64 {
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            return p;
        }
        p += 1;
    }
    n
}

pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn next_prime_above(n: u64) -> u64 {
    (n + 1..).find(|&p| is_prime(p)).expect("primes are unbounded")
}

fn next_prime_above_in_class(n: u64, residue: u64) -> u64 {
    (n + 1..)
        .find(|&p| p % 4 == residue && is_prime(p))
        .expect("primes are unbounded in each class")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> RingSpec {
        s.parse().unwrap()
    }

    #[test]
    fn min_index_examples() {
        assert_eq!(parse("Z/35").min_ideal_index(), 5);
        assert_eq!(parse("Zloc!4").min_ideal_index(), 5);
        assert_eq!(parse("poly(Z/7)").min_ideal_index(), 7);
        assert_eq!(parse("poly(poly(Zloc!4))").min_ideal_index(), 5);
        assert_eq!(parse("Z/2").min_ideal_index(), 2);
        assert_eq!(parse("Z/9").min_ideal_index(), 3);
    }

    #[test]
    fn gaussian_index() {
        // Z[i]: (1+i) has index 2
        assert_eq!(parse("Zi!1").min_ideal_index(), 2);
        // p > 2: 5 splits
        assert_eq!(parse("Zi!2").min_ideal_index(), 5);
        // p > 4: 5 splits, 7 inert gives 49
        assert_eq!(parse("Zi!4").min_ideal_index(), 5);
        // p > 6: 13 splits, 7 inert gives 49
        assert_eq!(parse("Zi!6").min_ideal_index(), 13);
        // p > 12: 13 splits
        assert_eq!(parse("Zi!12").min_ideal_index(), 13);
    }

    #[test]
    fn units() {
        let z35 = parse("Z/35");
        assert!(z35.is_unit(2) && z35.is_unit(3) && !z35.is_unit(5));
        assert_eq!(parse("Z/6").missing_units(3), vec![2, 3]);
        assert_eq!(parse("Zloc!2").missing_units(3), vec![3]);
        assert!(parse("Zloc!3").missing_units(3).is_empty());
        assert_eq!(parse("poly(Z/4)").missing_units(2), vec![2]);
    }

    #[test]
    fn parse_errors_name_column() {
        let e = "poly(Z/7".parse::<RingSpec>().unwrap_err();
        assert_eq!(e.column, 9);
        let e = "Z/x".parse::<RingSpec>().unwrap_err();
        assert_eq!(e.column, 3);
        let e = "Q".parse::<RingSpec>().unwrap_err();
        assert_eq!(e.column, 1);
        let e = "Z/1".parse::<RingSpec>().unwrap_err();
        assert_eq!(e.column, 3);
        let e = "Z/5x".parse::<RingSpec>().unwrap_err();
        assert_eq!(e.column, 4);
    }

    #[test]
    fn display_round_trip() {
        for s in ["Z/35", "Zloc!4", "Zi!4", "poly(Z/7)", "poly(poly(Zi!9))"] {
            assert_eq!(parse(s).to_string(), s);
        }
    }

    #[test]
    fn arithmetic_helpers() {
        assert_eq!(gcd(12, 18), 6);
        assert_eq!(prime_factors(360), vec![2, 3, 5]);
        assert_eq!(least_prime_factor(91), 7);
        assert!(is_prime(53) && !is_prime(1) && !is_prime(51));
    }
}

//! Symmetric-power shear matrices, their action on 4-vectors of Laurent
//! series, the valuation regions, the transport verifier and the 22C ledger.

pub mod ledger;
pub mod region;
pub mod series;
pub mod shear;
pub mod transport;

use rand::Rng;
use thiserror::Error;

pub use ledger::{ledger_check, ledger_nodes, LedgerNode};
pub use region::{classify_region, RegionTag};
pub use series::{Param, Series, SeriesVec};
pub use shear::{
    matching_conventions, shear, sym_power_oracle, sym_power_with, Orientation, ShearMatrix, SymConvention,
    SYM_CONVENTION,
};
pub use transport::{check_transport, transport_facts, Region, TransportFact};

use crate::chevalley::MatrixElem;
use crate::report::{CheckReport, CheckResult};
use crate::rng::substream;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymrepError {
    #[error("n must be at least 2, got {0}")]
    BadN(usize),
    #[error("the zero vector lies in no region")]
    ZeroVector,
    #[error("shear parameter must be one of 1, -1, t, -t")]
    UnsupportedS,
    #[error("modulus must be coprime to 6")]
    BadModulus,
    #[error("modulus must be at least 2")]
    ModulusTooSmall,
    #[error("sample count must be at least 1")]
    BadSamples,
}

/// Shear/oracle consistency for one `n` over `Z/q`, plus action round trips.
pub fn symrep_report(n: usize, q: u64, seed: u64) -> Result<CheckReport, SymrepError> {
    if q < 2 {
        return Err(SymrepError::ModulusTooSmall);
    }
    let up = shear(n, Orientation::Upper)?;
    let lo = shear(n, Orientation::Lower)?;
    let qi = q as i64;
    let mut report = CheckReport::default();

    let mut hom = CheckResult::new("shear homomorphism");
    let mut det = CheckResult::new("shear determinant 1");
    let mut lock = CheckResult::new("oracle reproduces shear");
    for m in [&up, &lo] {
        for s in 0..qi {
            let ms = m.eval(s, q);
            det.record(ms.det() == 1 % q, || format!("{:?} s={s}", m.orientation));
            let g = match m.orientation {
                Orientation::Upper => [[1, s], [0, 1]],
                Orientation::Lower => [[1, 0], [s, 1]],
            };
            lock.record(sym_power_oracle(n, g, q)? == ms, || format!("{:?} s={s}", m.orientation));
            for t in 0..qi {
                let ok = ms.try_mul(&m.eval(t, q)).ok() == Some(m.eval(s + t, q));
                hom.record(ok, || format!("{:?} s={s} s'={t}", m.orientation));
            }
        }
    }
    report.push(hom);
    report.push(det);
    report.push(lock);

    let mut rng = substream(seed, 0);
    let mut func = CheckResult::new("oracle multiplicative");
    for _ in 0..100 {
        let mut g = || -> [[i64; 2]; 2] { std::array::from_fn(|_| std::array::from_fn(|_| rng.gen_range(0..qi))) };
        let (a, b) = (g(), g());
        let ab: [[i64; 2]; 2] =
            std::array::from_fn(|i| std::array::from_fn(|j| a[i][0] * b[0][j] + a[i][1] * b[1][j]));
        let lhs = sym_power_oracle(n, a, q)?.try_mul(&sym_power_oracle(n, b, q)?).ok();
        func.record(lhs == Some(sym_power_oracle(n, ab, q)?), || format!("{a:?} {b:?}"));
    }
    report.push(func);

    let mut round = CheckResult::new("U^s then U^-s is the identity on series vectors");
    let mut rng = substream(seed, 1);
    for k in 0..10_000u32 {
        let v = SeriesVec::sample(&mut rng, q, 8);
        let o = if k % 2 == 0 { Orientation::Upper } else { Orientation::Lower };
        let p = [Param::One, Param::MinusOne, Param::T, Param::MinusT][(k / 2 % 4) as usize];
        round.record(v.act(o, p).act(o, p.negate()) == v, || format!("{v:?} {o:?} {p}"));
    }
    report.push(round);
    Ok(report)
}

/// Numeric `U_+^s` / `U_-^s` of size `n` over `Z/q`.
pub fn shear_matrix(n: usize, orientation: Orientation, s: i64, q: u64) -> Result<MatrixElem, SymrepError> {
    Ok(shear(n, orientation)?.eval(s, q))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_passes() {
        for n in 2..=6 {
            let rep = symrep_report(n, 7, 0).unwrap();
            assert!(rep.passed(), "{n}: {rep:?}");
        }
        assert_eq!(symrep_report(1, 7, 0), Err(SymrepError::BadN(1)));
    }
}

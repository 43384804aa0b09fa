//! The nested-radical bound chain `s_i(m)`, rank-2 orthogonality bounds,
//! and assembly of the hypothesis certificate.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::gcm::Gcm;
use crate::ring::RingSpec;
use crate::roots::Root;
use crate::sigma::{build_sigma, certify, PairCertificate, SigmaSet, Verdict};

pub const MAX_RECURSION_INDEX: usize = 8;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BoundError {
    #[error("m = {0} is out of range")]
    BadM(f64),
    #[error("recursion index {0} exceeds {MAX_RECURSION_INDEX}")]
    BadIndex(usize),
    #[error("{0} is not invertible in the ring")]
    InvertibilityUnmet(u64),
}

/// `s_0 = 0`, `s_i = sqrt(s_{i-1} + 1/m)`.
pub fn s_sequence(m: f64, i: usize) -> Result<f64, BoundError> {
    if !(m >= 1.0) {
        return Err(BoundError::BadM(m));
    }
    if i > MAX_RECURSION_INDEX {
        return Err(BoundError::BadIndex(i));
    }
    Ok((0..i).fold(0.0, |s, _| (s + 1.0 / m).sqrt()))
}

/// Exact comparison of `s_i(m)` with a rational `c`, by squaring down the chain.
pub fn s_cmp(m: u64, i: usize, c: &BigRational) -> Ordering {
    assert!(m >= 1, "m must be positive");
    if i == 0 {
        return BigRational::zero().cmp(c);
    }
    if !c.is_positive() {
        return Ordering::Greater;
    }
    let inv_m = BigRational::new(BigInt::one(), BigInt::from(m));
    s_cmp(m, i - 1, &(c * c - inv_m))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum RankTwoType {
    A1xA1,
    A2,
    B2,
    G2,
}

impl RankTwoType {
    /// Type of the rank-2 subdiagram with edge product `a_ij a_ji`.
    pub fn from_edge_product(p: i64) -> Option<Self> {
        match p {
            0 => Some(RankTwoType::A1xA1),
            1 => Some(RankTwoType::A2),
            2 => Some(RankTwoType::B2),
            3 => Some(RankTwoType::G2),
            _ => None,
        }
    }

    /// Index `i` with `orth <= s_i(m)`.
    pub fn recursion_index(self) -> usize {
        match self {
            RankTwoType::A1xA1 => 0,
            RankTwoType::A2 => 1,
            RankTwoType::B2 => 2,
            RankTwoType::G2 => 4,
        }
    }

    /// Integers that must be units for the bound to apply.
    pub fn required_units(self) -> &'static [u64] {
        match self {
            RankTwoType::A1xA1 | RankTwoType::A2 => &[],
            RankTwoType::B2 => &[2],
            RankTwoType::G2 => &[2, 3],
        }
    }
}

pub fn orth_bound(t: RankTwoType, m: u64) -> Result<f64, BoundError> {
    if m < 2 {
        return Err(BoundError::BadM(m as f64));
    }
    s_sequence(m as f64, t.recursion_index())
}

/// `orth_bound` with `m = m(R)` after checking the required units.
pub fn orth_bound_for_ring(t: RankTwoType, ring: &RingSpec) -> Result<f64, BoundError> {
    if let Some(&k) = t.required_units().iter().find(|&&k| !ring.is_unit(k)) {
        return Err(BoundError::InvertibilityUnmet(k));
    }
    orth_bound(t, ring.min_ideal_index())
}

pub fn heisenberg_orth_bound(m: u64) -> Result<f64, BoundError> {
    if m < 2 {
        return Err(BoundError::BadM(m as f64));
    }
    Ok(1.0 / (m as f64).sqrt())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BoundVerdict {
    AllBelow,
    Boundary,
    Fails,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PairBound {
    pub pair: (usize, usize),
    pub roots: (Root, Root),
    pub rank_two_type: RankTwoType,
    pub recursion_index: usize,
    pub bound: f64,
    pub relation: &'static str,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub m: u64,
    pub sigma_size: usize,
    /// `1/(|Σ| - 1)` as an exact fraction.
    pub threshold: String,
    pub threshold_value: f64,
    pub pairs: Vec<PairBound>,
    pub verdict: BoundVerdict,
}

/// Rank-2 type a certificate assigns to its pair (commuting pairs get `A1xA1`).
pub fn certificate_type(gcm: &Gcm, cert: &PairCertificate) -> RankTwoType {
    match &cert.verdict {
        Verdict::Commute { .. } => RankTwoType::A1xA1,
        Verdict::RankTwoEmbed { simple: (i, j), .. } => {
            RankTwoType::from_edge_product(gcm.entry(*i, *j) * gcm.entry(*j, *i))
                .expect("certified pairs live in a 2-spherical matrix")
        }
    }
}

/// Compares every pair bound with the threshold exactly.
pub fn bound_report(sigma: &SigmaSet, certs: &[PairCertificate], m: u64) -> Result<BoundReport, BoundError> {
    if m < 2 {
        return Err(BoundError::BadM(m as f64));
    }
    let n = sigma.len() as i64;
    let threshold = BigRational::new(BigInt::one(), BigInt::from(n - 1));
    let mut verdict = BoundVerdict::AllBelow;
    let mut pairs = Vec::with_capacity(certs.len());
    for cert in certs {
        let t = certificate_type(&sigma.gcm, cert);
        let i = t.recursion_index();
        let relation = match s_cmp(m, i, &threshold) {
            Ordering::Less => "below",
            Ordering::Equal => {
                if verdict == BoundVerdict::AllBelow {
                    verdict = BoundVerdict::Boundary;
                }
                "equal"
            }
            Ordering::Greater => {
                verdict = BoundVerdict::Fails;
                "above"
            }
        };
        pairs.push(PairBound {
            pair: cert.pair,
            roots: cert.roots.clone(),
            rank_two_type: t,
            recursion_index: i,
            bound: s_sequence(m as f64, i)?,
            relation,
        });
    }
    Ok(BoundReport {
        m,
        sigma_size: sigma.len(),
        threshold: format!("1/{}", n - 1),
        threshold_value: 1.0 / (n - 1) as f64,
        pairs,
        verdict,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Hypothesis {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OverallVerdict {
    Certified,
    Boundary,
    Failed,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Certificate {
    pub ring: RingSpec,
    pub hypotheses: Vec<Hypothesis>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sigma: Option<SigmaSet>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub pair_certificates: Vec<PairCertificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound_report: Option<BoundReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub verdict: OverallVerdict,
}

/// Checks every hypothesis in order, then builds Σ and the bound report.
/// Failures are recorded, never thrown.
pub fn certify_property_t(gcm: &Gcm, ring: &RingSpec) -> Certificate {
    let class = gcm.classify();
    let m_ring = ring.min_ideal_index();
    let mut hypotheses = Vec::new();
    let mut push = |name, pass, detail: String| hypotheses.push(Hypothesis { name, pass, detail });

    push("size_at_least_two", gcm.size() >= 2, format!("d = {}", gcm.size()));
    push("indecomposable", class.indecomposable, String::new());
    push("two_spherical", class.two_spherical, String::new());
    let m_max = class.max_off_diagonal;
    push("max_off_diagonal_at_most_3", m_max <= 3, format!("M = {m_max}"));
    let missing = ring.missing_units(m_max.min(3) as u64);
    push(
        "small_integers_invertible",
        missing.is_empty(),
        if missing.is_empty() {
            format!("1..{m_max} are units")
        } else {
            format!("not units: {missing:?}")
        },
    );
    match class.ideal_index_threshold {
        Some(n_a) => push(
            "ideal_index_at_least_threshold",
            m_ring as u128 >= n_a,
            format!("m(R) = {m_ring}, n(A) = {n_a}"),
        ),
        None => push(
            "ideal_index_at_least_threshold",
            false,
            format!("m(R) = {m_ring}, n(A) undefined"),
        ),
    }
    let hypotheses_pass = hypotheses.iter().all(|h| h.pass);

    let mut cert = Certificate {
        ring: ring.clone(),
        hypotheses,
        sigma: None,
        pair_certificates: Vec::new(),
        bound_report: None,
        error: None,
        verdict: OverallVerdict::Failed,
    };
    let built = build_sigma(gcm).map_err(|e| e.to_string()).and_then(|sigma| {
        let certs = certify(&sigma).map_err(|e| e.to_string())?;
        let report = bound_report(&sigma, &certs, m_ring).map_err(|e| e.to_string())?;
        Ok((sigma, certs, report))
    });
    match built {
        Ok((sigma, certs, report)) => {
            if hypotheses_pass {
                cert.verdict = match report.verdict {
                    BoundVerdict::AllBelow => OverallVerdict::Certified,
                    BoundVerdict::Boundary => OverallVerdict::Boundary,
                    BoundVerdict::Fails => OverallVerdict::Failed,
                };
            }
            cert.sigma = Some(sigma);
            cert.pair_certificates = certs;
            cert.bound_report = Some(report);
        }
        Err(e) => cert.error = Some(e),
    }
    cert
}

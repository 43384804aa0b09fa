//! Randomized verification that the shear matrices move vectors between the
//! valuation regions as the counting argument needs.

use std::collections::BTreeMap;

use rand::Rng;

use super::region::{classify_region, third_column_condition, RegionTag};
use super::series::{Param, Series, SeriesVec};
use super::shear::Orientation;
use super::SymrepError;
use crate::report::{CheckReport, CheckResult};
use crate::rng::substream;

/// Sampled supports use the powers `t^-1 ..= t^-SAMPLE_WINDOW`.
pub const SAMPLE_WINDOW: i64 = 8;
const MAX_REJECTIONS: u64 = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    A(usize),
    AStrict(usize),
    /// `A_i \ A_i°`
    ANonStrict(usize),
    E,
    /// `A_2° ⊔ A_3°`
    A2A3Strict,
    /// `A_3° ⊔ A_4`
    A3StrictOrA4,
    BMinusS,
    S,
}

impl Region {
    pub fn contains(self, tag: &RegionTag) -> bool {
        match self {
            Region::A(i) => tag.a[i],
            Region::AStrict(i) => tag.a_strict[i],
            Region::ANonStrict(i) => tag.a[i] && !tag.a_strict[i],
            Region::E => tag.e,
            Region::A2A3Strict => tag.a_strict[1] || tag.a_strict[2],
            Region::A3StrictOrA4 => tag.a_strict[2] || tag.a[3],
            Region::BMinusS => tag.b && !tag.s,
            Region::S => tag.s,
        }
    }

    pub fn name(self) -> String {
        match self {
            Region::A(i) => format!("A{}", i + 1),
            Region::AStrict(i) => format!("A{}°", i + 1),
            Region::ANonStrict(i) => format!("A{}\\A{}°", i + 1, i + 1),
            Region::E => "E".into(),
            Region::A2A3Strict => "A2°⊔A3°".into(),
            Region::A3StrictOrA4 => "A3°⊔A4".into(),
            Region::BMinusS => "B\\S".into(),
            Region::S => "S".into(),
        }
    }
}

/// `source . g_1 ⊆ target_1`, `target_1 . g_2 ⊆ target_2`, ...
#[derive(Debug, Clone)]
pub struct TransportFact {
    pub source: Region,
    pub steps: Vec<(Orientation, Param, Region)>,
}

impl TransportFact {
    pub fn name(&self) -> String {
        let word: Vec<String> = self
            .steps
            .iter()
            .map(|(o, p, _)| format!("U{}^{}", if *o == Orientation::Upper { "+" } else { "-" }, p))
            .collect();
        let path: Vec<String> = std::iter::once(self.source.name())
            .chain(self.steps.iter().map(|s| s.2.name()))
            .collect();
        format!("{}: {}", word.join(" "), path.join(" -> "))
    }
}

pub fn transport_facts() -> Vec<TransportFact> {
    use Orientation::{Lower, Upper};
    use Param::{One, T};
    let fact = |source, steps: &[(Orientation, Param, Region)]| TransportFact {
        source,
        steps: steps.to_vec(),
    };
    vec![
        fact(Region::A2A3Strict, &[(Upper, One, Region::ANonStrict(3))]),
        fact(Region::A2A3Strict, &[(Lower, One, Region::ANonStrict(0))]),
        fact(Region::A(0), &[(Upper, T, Region::AStrict(3)), (Lower, One, Region::E)]),
        fact(Region::A(3), &[(Lower, T, Region::AStrict(0)), (Upper, One, Region::E)]),
        fact(Region::A(0), &[(Upper, T, Region::AStrict(3)), (Lower, T, Region::AStrict(0))]),
        fact(Region::A(3), &[(Lower, T, Region::AStrict(0)), (Upper, T, Region::AStrict(3))]),
        fact(Region::BMinusS, &[(Upper, T, Region::AStrict(3))]),
        fact(Region::S, &[(Upper, T, Region::A3StrictOrA4)]),
    ]
}

fn sample_in<R: Rng>(rng: &mut R, q: u64, region: Region, rejected: &mut u64) -> Option<SeriesVec> {
    // S has vanishing density, so B-samples are pushed into S by rewriting x_1
    let base = if region == Region::S { Region::BMinusS } else { region };
    for _ in 0..MAX_REJECTIONS {
        let v = SeriesVec::sample(rng, q, SAMPLE_WINDOW);
        let Ok(tag) = classify_region(&v) else {
            *rejected += 1;
            continue;
        };
        if !base.contains(&tag) {
            *rejected += 1;
            continue;
        }
        if region != Region::S {
            return Some(v);
        }
        let (top, c2) = v.0[1].leading().expect("x_2 attains the maximum in B");
        let lower = v.0[0].terms().filter(|&(p, _)| p < top - 1).map(|(p, c)| (p, c as i64));
        let mut w = v.clone();
        w.0[0] = Series::from_terms(lower, q).add(&Series::monomial(-(c2 as i64), top - 1, q));
        return Some(w);
    }
    None
}

pub fn check_transport(q: u64, samples: u64, seed: u64) -> Result<CheckReport, SymrepError> {
    if q < 2 || q % 2 == 0 || q % 3 == 0 {
        return Err(SymrepError::BadModulus);
    }
    if samples == 0 {
        return Err(SymrepError::BadSamples);
    }
    let mut report = CheckReport::default();
    let mut clause = CheckResult::new("S impossibility clause");
    let mut rejections = BTreeMap::new();
    for (idx, fact) in transport_facts().iter().enumerate() {
        let mut rng = substream(seed, idx as u64);
        let mut check = CheckResult::new(fact.name());
        let mut rejected = 0;
        for _ in 0..samples {
            let Some(v) = sample_in(&mut rng, q, fact.source, &mut rejected) else {
                check.record(false, || "sampler could not reach the source region".into());
                continue;
            };
            let source_tag = classify_region(&v)?;
            if source_tag.b {
                let both = source_tag.s && third_column_condition(&v.0[0], &v.0[1]);
                clause.record(!both, || format!("{v:?}"));
            }
            let mut ok = fact.source.contains(&source_tag);
            let mut current = v.clone();
            for &(o, p, target) in &fact.steps {
                if !ok {
                    break;
                }
                current = current.act(o, p);
                ok = classify_region(&current).map(|t| target.contains(&t)).unwrap_or(false);
            }
            check.record(ok, || format!("{v:?}"));
        }
        rejections.insert(fact.name(), rejected);
        report.push(check);
    }
    report.push(clause);
    report.details = Some(serde_json::json!({
        "q": q,
        "samples": samples,
        "seed": seed,
        "window": SAMPLE_WINDOW,
        "rejected": rejections,
    }));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_passes() {
        let rep = check_transport(5, 500, 3).unwrap();
        assert!(rep.passed(), "{rep:?}");
        assert_eq!(rep.checks.len(), 9);
    }

    #[test]
    fn deterministic() {
        assert_eq!(check_transport(35, 100, 9).unwrap(), check_transport(35, 100, 9).unwrap());
    }

    #[test]
    fn modulus_guard() {
        assert_eq!(check_transport(6, 10, 0), Err(SymrepError::BadModulus));
        assert_eq!(check_transport(9, 10, 0), Err(SymrepError::BadModulus));
        assert_eq!(check_transport(5, 0, 0), Err(SymrepError::BadSamples));
    }

    #[test]
    fn s_samples_are_in_s() {
        let mut rng = substream(0, 0);
        let mut rej = 0;
        for _ in 0..100 {
            let v = sample_in(&mut rng, 7, Region::S, &mut rej).unwrap();
            assert!(classify_region(&v).unwrap().s);
        }
    }
}

//! The small generating root set Σ (and its pseudo-parabolic variant) with
//! mechanically verified certificates for every pair of members.

use std::collections::{HashSet, VecDeque};

use serde::Serialize;
use thiserror::Error;

use crate::gcm::Gcm;
use crate::roots::{
    apply_word_root, closed_interval, is_prenilpotent, reflect_root, Prenilpotency, Root, RootError,
    RootSlice, WeylWord,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SigmaError {
    #[error("vertex {0} is isolated in the Dynkin diagram")]
    IsolatedVertex(usize),
    #[error("matrix is not 2-spherical")]
    NotTwoSpherical,
    #[error("matrix is decomposable")]
    NotIndecomposable,
    #[error("index set is empty or has an index out of range")]
    InvalidIndexSet,
    #[error("vertex {0} has no neighbour in the index set")]
    BadIndexSet(usize),
    #[error("reflections over the independent set do not commute")]
    NonCommutingIndependentSet,
    #[error("members {0} and {1} sum to zero")]
    OppositeMembers(usize, usize),
    #[error("no certificate found for pair ({0}, {1})")]
    CertificationFailed(usize, usize),
    #[error("certificate for pair ({0}, {1}) failed re-verification")]
    BadCertificate(usize, usize),
    #[error(transparent)]
    Root(#[from] RootError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MemberKind {
    Simple { index: usize },
    /// `-w(a_source)` for the product `w` of reflections over the independent set.
    Twisted { source: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SigmaMember {
    pub root: Root,
    #[serde(flatten)]
    pub kind: MemberKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PseudoParts {
    pub index_set: Vec<usize>,
    pub i1: Vec<usize>,
    pub i2: Vec<usize>,
    pub i3: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SigmaSet {
    #[serde(skip)]
    pub gcm: Gcm,
    /// Independent set (the whole of `I_1` in the pseudo variant).
    pub pi1: Vec<usize>,
    /// Sources of the twisted members.
    pub pi2: Vec<usize>,
    pub w0: WeylWord,
    pub members: Vec<SigmaMember>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pseudo: Option<PseudoParts>,
}

impl SigmaSet {
    pub fn len(&self) -> usize {
        self.members.len()
    }
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
    pub fn roots(&self) -> Vec<Root> {
        self.members.iter().map(|m| m.root.clone()).collect()
    }
    pub fn twisted(&self) -> Vec<Root> {
        self.members
            .iter()
            .filter(|m| matches!(m.kind, MemberKind::Twisted { .. }))
            .map(|m| m.root.clone())
            .collect()
    }
    pub fn max_height(&self) -> i64 {
        self.members.iter().map(|m| m.root.height()).max().unwrap_or(0)
    }
}

/// Σ = Π ∪ {w0(-β) : β ∈ Π₂} with Π₁ the greedy independent set.
pub fn build_sigma(gcm: &Gcm) -> Result<SigmaSet, SigmaError> {
    if !gcm.is_two_spherical() {
        return Err(SigmaError::NotTwoSpherical);
    }
    let dynkin = gcm.dynkin();
    if let Some(&v) = dynkin.isolated_vertices().first() {
        return Err(SigmaError::IsolatedVertex(v));
    }
    let all: Vec<usize> = (0..gcm.size()).collect();
    assemble(gcm, &all, None)
}

/// Pseudo-parabolic variant for an index set `I`.
pub fn build_sigma_pseudo(gcm: &Gcm, index_set: &[usize]) -> Result<SigmaSet, SigmaError> {
    let d = gcm.size();
    let mut set: Vec<usize> = index_set.to_vec();
    set.sort_unstable();
    set.dedup();
    if set.is_empty() || set.iter().any(|&i| i >= d) {
        return Err(SigmaError::InvalidIndexSet);
    }
    if !gcm.is_indecomposable() {
        return Err(SigmaError::NotIndecomposable);
    }
    if !gcm.is_two_spherical() {
        return Err(SigmaError::NotTwoSpherical);
    }
    for i in 0..d {
        if !set.iter().any(|&j| j != i && gcm.entry(i, j) != 0) {
            return Err(SigmaError::BadIndexSet(i));
        }
    }
    let i3 = (0..d).filter(|i| !set.contains(i)).collect();
    assemble(gcm, &set, Some(i3))
}

fn assemble(gcm: &Gcm, index_set: &[usize], i3: Option<Vec<usize>>) -> Result<SigmaSet, SigmaError> {
    let d = gcm.size();
    let dynkin = gcm.dynkin();
    let pi1 = dynkin.greedy_independent(index_set);
    let pi2: Vec<usize> = index_set.iter().copied().filter(|i| !pi1.contains(i)).collect();
    let w0 = WeylWord(pi1.clone());
    let reversed = w0.inverse();

    let mut members: Vec<SigmaMember> = (0..d)
        .map(|i| SigmaMember {
            root: Root::simple(d, i),
            kind: MemberKind::Simple { index: i },
        })
        .collect();
    for &j in &pi2 {
        let minus = Root::simple(d, j).neg();
        let gamma = apply_word_root(gcm, &w0, &minus)?;
        if apply_word_root(gcm, &reversed, &minus)? != gamma {
            return Err(SigmaError::NonCommutingIndependentSet);
        }
        members.push(SigmaMember {
            root: gamma,
            kind: MemberKind::Twisted { source: j },
        });
    }
    for a in 0..members.len() {
        for b in a + 1..members.len() {
            if members[a].root == members[b].root.neg() {
                return Err(SigmaError::OppositeMembers(a, b));
            }
        }
    }
    let pseudo = i3.map(|i3| PseudoParts {
        index_set: index_set.to_vec(),
        i1: pi1.clone(),
        i2: pi2.clone(),
        i3,
    });
    Ok(SigmaSet {
        gcm: gcm.clone(),
        pi1,
        pi2,
        w0,
        members,
        pseudo,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CommuteReason {
    DisjointSupport,
    EmptyInterval,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Verdict {
    Commute { reason: CommuteReason },
    /// `w` maps both roots into `Z a_i + Z a_j`.
    RankTwoEmbed { simple: (usize, usize), word: WeylWord },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairCertificate {
    /// Positions in `SigmaSet::members`.
    pub pair: (usize, usize),
    pub roots: (Root, Root),
    pub verdict: Verdict,
}

/// Height cap that makes every pairwise interval of Σ exact.
pub fn certification_cap(sigma: &SigmaSet) -> i64 {
    let h = 2 * sigma.max_height();
    (2 * h + 5).max(3 * h).max(12)
}

pub fn certify(sigma: &SigmaSet) -> Result<Vec<PairCertificate>, SigmaError> {
    let slice = RootSlice::enumerate(&sigma.gcm, certification_cap(sigma))?;
    certify_pairs(sigma, &slice)
}

/// Certificate for every unordered pair, each re-verified before return.
pub fn certify_pairs(sigma: &SigmaSet, slice: &RootSlice) -> Result<Vec<PairCertificate>, SigmaError> {
    let mut out = Vec::new();
    for a in 0..sigma.members.len() {
        for b in a + 1..sigma.members.len() {
            let verdict = find_certificate(sigma, slice, a, b)?
                .ok_or(SigmaError::CertificationFailed(a, b))?;
            let cert = PairCertificate {
                pair: (a, b),
                roots: (sigma.members[a].root.clone(), sigma.members[b].root.clone()),
                verdict,
            };
            if !verify_certificate(&sigma.gcm, slice, &cert)? {
                return Err(SigmaError::BadCertificate(a, b));
            }
            out.push(cert);
        }
    }
    Ok(out)
}

fn find_certificate(
    sigma: &SigmaSet,
    slice: &RootSlice,
    a: usize,
    b: usize,
) -> Result<Option<Verdict>, SigmaError> {
    let gcm = &sigma.gcm;
    let (ma, mb) = (&sigma.members[a], &sigma.members[b]);
    let (x, y) = (&ma.root, &mb.root);

    if let (MemberKind::Simple { index: i }, MemberKind::Simple { index: j }) = (ma.kind, mb.kind) {
        return Ok(Some(Verdict::RankTwoEmbed {
            simple: (i, j),
            word: WeylWord::identity(),
        }));
    }
    if opposite_disjoint(x, y) {
        return Ok(Some(Verdict::Commute {
            reason: CommuteReason::DisjointSupport,
        }));
    }
    // a twisted member against its own source
    let own_source = match (ma.kind, mb.kind) {
        (MemberKind::Simple { index }, MemberKind::Twisted { source })
        | (MemberKind::Twisted { source }, MemberKind::Simple { index }) => {
            (index == source).then_some(source)
        }
        _ => None,
    };
    if let Some(j) = own_source {
        let neighbours: Vec<usize> = sigma
            .pi1
            .iter()
            .copied()
            .filter(|&t| gcm.entry(t, j) != 0)
            .collect();
        if neighbours.len() == 1 {
            let t = neighbours[0];
            return Ok(Some(Verdict::RankTwoEmbed {
                simple: (t.min(j), t.max(j)),
                word: WeylWord::identity(),
            }));
        }
    }
    if exact_empty_interval(slice, x, y)? {
        return Ok(Some(Verdict::Commute {
            reason: CommuteReason::EmptyInterval,
        }));
    }
    if let Some(v) = rank_two_under(gcm, &sigma.w0, x, y)? {
        return Ok(Some(v));
    }
    search_embedding(gcm, x, y, 2 * gcm.size())
}

fn opposite_disjoint(x: &Root, y: &Root) -> bool {
    let opposite = (x.is_positive() && y.is_negative()) || (x.is_negative() && y.is_positive());
    opposite && x.0.iter().zip(&y.0).all(|(p, q)| *p == 0 || *q == 0)
}

fn exact_empty_interval(slice: &RootSlice, x: &Root, y: &Root) -> Result<bool, SigmaError> {
    let (ex, ey) = (slice.entry(x)?, slice.entry(y)?);
    if is_prenilpotent(slice.gcm(), ex, ey)? != Prenilpotency::Prenilpotent {
        return Ok(false);
    }
    let iv = closed_interval(slice, x, y)?;
    Ok(iv.exact && iv.is_empty())
}

fn rank_two_pair(x: &Root, y: &Root) -> Option<(usize, usize)> {
    let mut support: Vec<usize> = x.support();
    support.extend(y.support());
    support.sort_unstable();
    support.dedup();
    match support.as_slice() {
        [i] => Some(if *i == 0 { (0, 1) } else { (i - 1, *i) }),
        [i, j] => Some((*i, *j)),
        _ => None,
    }
}

fn rank_two_under(gcm: &Gcm, w: &WeylWord, x: &Root, y: &Root) -> Result<Option<Verdict>, SigmaError> {
    let (wx, wy) = (apply_word_root(gcm, w, x)?, apply_word_root(gcm, w, y)?);
    Ok(rank_two_pair(&wx, &wy).map(|simple| Verdict::RankTwoEmbed {
        simple,
        word: w.clone(),
    }))
}

/// Breadth-first search over simple-reflection words of bounded length.
fn search_embedding(gcm: &Gcm, x: &Root, y: &Root, max_len: usize) -> Result<Option<Verdict>, SigmaError> {
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert((x.clone(), y.clone()));
    queue.push_back((x.clone(), y.clone(), WeylWord::identity()));
    while let Some((u, v, w)) = queue.pop_front() {
        if let Some(simple) = rank_two_pair(&u, &v) {
            return Ok(Some(Verdict::RankTwoEmbed { simple, word: w }));
        }
        if w.len() == max_len {
            continue;
        }
        for i in 0..gcm.size() {
            let (nu, nv) = (reflect_root(gcm, i, &u)?, reflect_root(gcm, i, &v)?);
            if seen.insert((nu.clone(), nv.clone())) {
                queue.push_back((nu, nv, w.prepend(i)));
            }
        }
    }
    Ok(None)
}

/// Re-checks a certificate from scratch.
pub fn verify_certificate(gcm: &Gcm, slice: &RootSlice, cert: &PairCertificate) -> Result<bool, SigmaError> {
    let (x, y) = (&cert.roots.0, &cert.roots.1);
    Ok(match &cert.verdict {
        Verdict::Commute {
            reason: CommuteReason::DisjointSupport,
        } => opposite_disjoint(x, y),
        Verdict::Commute {
            reason: CommuteReason::EmptyInterval,
        } => exact_empty_interval(slice, x, y)?,
        Verdict::RankTwoEmbed { simple: (i, j), word } => {
            let allowed = |r: &Root| r.support().iter().all(|k| k == i || k == j);
            i != j
                && allowed(&apply_word_root(gcm, word, x)?)
                && allowed(&apply_word_root(gcm, word, y)?)
        }
    })
}

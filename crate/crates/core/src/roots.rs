//! Real roots, coroots and Weyl words; the bounded real-root slice and
//! prenilpotency of root pairs.

use std::collections::{BTreeMap, VecDeque};

use serde::Serialize;
use thiserror::Error;

use crate::gcm::Gcm;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("simple reflection index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("height cap must be at least 1")]
    CapTooSmall,
    #[error("roots {0:?} and its negative form an opposite pair")]
    OppositePair(Vec<i64>),
    #[error("pairings <a,b> = {p} and <b,a> = {q} disagree in sign")]
    SignMismatch { p: i64, q: i64 },
    #[error("root {0:?} reached with two different coroots")]
    CorootMismatch(Vec<i64>),
    #[error("vector {0:?} has mixed signs")]
    MixedSigns(Vec<i64>),
    #[error("vector {0:?} is not in the slice")]
    NotInSlice(Vec<i64>),
}

/// Coordinates in the basis of simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Root(pub Vec<i64>);

/// Coordinates in the basis of simple coroots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Coroot(pub Vec<i64>);

macro_rules! lattice_vector {
    ($t:ident) => {
        impl $t {
            pub fn simple(d: usize, i: usize) -> Self {
                let mut v = vec![0; d];
                v[i] = 1;
                $t(v)
            }
            pub fn zero(d: usize) -> Self {
                $t(vec![0; d])
            }
            pub fn dim(&self) -> usize {
                self.0.len()
            }
            /// Sum of absolute values of the coordinates.
            pub fn height(&self) -> i64 {
                self.0.iter().map(|c| c.abs()).sum()
            }
            pub fn is_zero(&self) -> bool {
                self.0.iter().all(|&c| c == 0)
            }
            pub fn is_positive(&self) -> bool {
                !self.is_zero() && self.0.iter().all(|&c| c >= 0)
            }
            pub fn is_negative(&self) -> bool {
                !self.is_zero() && self.0.iter().all(|&c| c <= 0)
            }
            pub fn neg(&self) -> Self {
                $t(self.0.iter().map(|c| -c).collect())
            }
            pub fn support(&self) -> Vec<usize> {
                (0..self.0.len()).filter(|&i| self.0[i] != 0).collect()
            }
            pub fn add_scaled(&self, k: i64, other: &Self) -> Self {
                $t(self.0.iter().zip(&other.0).map(|(a, b)| a + k * b).collect())
            }
        }
    };
}
lattice_vector!(Root);
lattice_vector!(Coroot);

/// `w = s_{i1} s_{i2} ... s_{ik}`; acting on a vector, the rightmost
/// reflection is applied first.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct WeylWord(pub Vec<usize>);

impl WeylWord {
    pub fn identity() -> Self {
        WeylWord(Vec::new())
    }
    pub fn len(&self) -> usize {
        self.0.len()
    }
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
    /// `s_i * self`
    pub fn prepend(&self, i: usize) -> Self {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(i);
        v.extend_from_slice(&self.0);
        WeylWord(v)
    }
    pub fn inverse(&self) -> Self {
        WeylWord(self.0.iter().rev().copied().collect())
    }
}

fn check_dim(gcm: &Gcm, len: usize) -> Result<(), RootError> {
    if len == gcm.size() {
        Ok(())
    } else {
        Err(RootError::DimensionMismatch {
            expected: gcm.size(),
            got: len,
        })
    }
}

/// `<y, x> = sum_{i,j} y_i x_j a_ij`
pub fn pairing(gcm: &Gcm, y: &Coroot, x: &Root) -> Result<i64, RootError> {
    check_dim(gcm, y.dim())?;
    check_dim(gcm, x.dim())?;
    Ok(pairing_unchecked(gcm, &y.0, &x.0))
}

fn pairing_unchecked(gcm: &Gcm, y: &[i64], x: &[i64]) -> i64 {
    let d = gcm.size();
    let mut s = 0;
    for i in 0..d {
        if y[i] == 0 {
            continue;
        }
        for j in 0..d {
            s += y[i] * x[j] * gcm.entry(i, j);
        }
    }
    s
}

/// `s_i(x) = x - <a_i^v, x> a_i`.
pub fn reflect_root(gcm: &Gcm, i: usize, x: &Root) -> Result<Root, RootError> {
    check_dim(gcm, x.dim())?;
    if i >= gcm.size() {
        return Err(RootError::IndexOutOfRange(i));
    }
    let c: i64 = (0..gcm.size()).map(|j| gcm.entry(i, j) * x.0[j]).sum();
    let mut out = x.clone();
    out.0[i] -= c;
    Ok(out)
}

/// `s_i(y) = y - <y, a_i> a_i^v`.
pub fn reflect_coroot(gcm: &Gcm, i: usize, y: &Coroot) -> Result<Coroot, RootError> {
    check_dim(gcm, y.dim())?;
    if i >= gcm.size() {
        return Err(RootError::IndexOutOfRange(i));
    }
    let c: i64 = (0..gcm.size()).map(|k| y.0[k] * gcm.entry(k, i)).sum();
    let mut out = y.clone();
    out.0[i] -= c;
    Ok(out)
}

pub fn reflect(gcm: &Gcm, i: usize, x: &Root, y: &Coroot) -> Result<(Root, Coroot), RootError> {
    Ok((reflect_root(gcm, i, x)?, reflect_coroot(gcm, i, y)?))
}

pub fn apply_word_root(gcm: &Gcm, w: &WeylWord, x: &Root) -> Result<Root, RootError> {
    let mut x = x.clone();
    for &i in w.0.iter().rev() {
        x = reflect_root(gcm, i, &x)?;
    }
    Ok(x)
}

pub fn apply_word_coroot(gcm: &Gcm, w: &WeylWord, y: &Coroot) -> Result<Coroot, RootError> {
    let mut y = y.clone();
    for &i in w.0.iter().rev() {
        y = reflect_coroot(gcm, i, &y)?;
    }
    Ok(y)
}

pub fn apply_word(
    gcm: &Gcm,
    w: &WeylWord,
    x: &Root,
    y: &Coroot,
) -> Result<(Root, Coroot), RootError> {
    Ok((apply_word_root(gcm, w, x)?, apply_word_coroot(gcm, w, y)?))
}

/// A real root with its coroot and a witness: `root = witness * (sign * a_base)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootEntry {
    #[serde(rename = "coeffs")]
    pub root: Root,
    #[serde(rename = "coroot_coeffs")]
    pub coroot: Coroot,
    pub witness: WeylWord,
    pub base: usize,
    pub base_sign: i8,
}

impl RootEntry {
    pub fn simple(d: usize, i: usize, sign: i8) -> Self {
        let (r, c) = (Root::simple(d, i), Coroot::simple(d, i));
        let (root, coroot) = if sign < 0 { (r.neg(), c.neg()) } else { (r, c) };
        RootEntry {
            root,
            coroot,
            witness: WeylWord::identity(),
            base: i,
            base_sign: sign,
        }
    }

    pub fn negated(&self) -> Self {
        RootEntry {
            root: self.root.neg(),
            coroot: self.coroot.neg(),
            witness: self.witness.clone(),
            base: self.base,
            base_sign: -self.base_sign,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Membership<'a> {
    Root(&'a RootEntry),
    NotRoot,
    /// Above the height cap: the slice cannot decide.
    Unknown,
}

/// All real roots of height at most `cap`, keyed by coefficient vector.
#[derive(Debug, Clone)]
pub struct RootSlice {
    gcm: Gcm,
    cap: i64,
    entries: BTreeMap<Root, RootEntry>,
}

impl RootSlice {
    /// Breadth-first closure of the simple roots and their negatives under
    /// simple reflections; intermediates above the cap are discarded.
    pub fn enumerate(gcm: &Gcm, height_cap: i64) -> Result<Self, RootError> {
        if height_cap < 1 {
            return Err(RootError::CapTooSmall);
        }
        let d = gcm.size();
        let mut entries = BTreeMap::new();
        let mut queue = VecDeque::new();
        for sign in [1i8, -1] {
            for i in 0..d {
                let e = RootEntry::simple(d, i, sign);
                queue.push_back(e.root.clone());
                entries.insert(e.root.clone(), e);
            }
        }
        while let Some(key) = queue.pop_front() {
            let cur = entries[&key].clone();
            for i in 0..d {
                let (root, coroot) = reflect(gcm, i, &cur.root, &cur.coroot)?;
                if root.height() > height_cap {
                    continue;
                }
                if !root.is_positive() && !root.is_negative() {
                    return Err(RootError::MixedSigns(root.0));
                }
                match entries.get(&root) {
                    Some(existing) => {
                        if existing.coroot != coroot {
                            return Err(RootError::CorootMismatch(root.0));
                        }
                    }
                    None => {
                        let entry = RootEntry {
                            root: root.clone(),
                            coroot,
                            witness: cur.witness.prepend(i),
                            base: cur.base,
                            base_sign: cur.base_sign,
                        };
                        entries.insert(root.clone(), entry);
                        queue.push_back(root);
                    }
                }
            }
        }
        Ok(RootSlice {
            gcm: gcm.clone(),
            cap: height_cap,
            entries,
        })
    }

    pub fn gcm(&self) -> &Gcm {
        &self.gcm
    }
    pub fn cap(&self) -> i64 {
        self.cap
    }
    pub fn len(&self) -> usize {
        self.entries.len()
    }
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
    /// Entries in lexicographic order of coefficient vectors.
    pub fn iter(&self) -> impl Iterator<Item = &RootEntry> {
        self.entries.values()
    }
    pub fn positive(&self) -> impl Iterator<Item = &RootEntry> {
        self.entries.values().filter(|e| e.root.is_positive())
    }
    pub fn get(&self, root: &Root) -> Option<&RootEntry> {
        self.entries.get(root)
    }
    pub fn entry(&self, root: &Root) -> Result<&RootEntry, RootError> {
        self.get(root).ok_or_else(|| RootError::NotInSlice(root.0.clone()))
    }
    pub fn membership(&self, v: &Root) -> Membership<'_> {
        if v.height() > self.cap {
            Membership::Unknown
        } else {
            match self.entries.get(v) {
                Some(e) => Membership::Root(e),
                None => Membership::NotRoot,
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Prenilpotency {
    Prenilpotent,
    NotPrenilpotent,
}

/// The pairing criterion: signs of `<a^v,b>` and `<b^v,a>` agree; a
/// nonnegative pair is prenilpotent, a negative one iff the product is <= 3.
pub fn is_prenilpotent(gcm: &Gcm, a: &RootEntry, b: &RootEntry) -> Result<Prenilpotency, RootError> {
    if b.root == a.root.neg() {
        return Err(RootError::OppositePair(a.root.0.clone()));
    }
    let p = pairing(gcm, &a.coroot, &b.root)?;
    let q = pairing(gcm, &b.coroot, &a.root)?;
    if p.signum() != q.signum() {
        return Err(RootError::SignMismatch { p, q });
    }
    Ok(if p >= 0 || p * q <= 3 {
        Prenilpotency::Prenilpotent
    } else {
        Prenilpotency::NotPrenilpotent
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Interval {
    /// Each entry is `(i, j, root)` with `root = i a + j b`.
    pub members: Vec<(i64, i64, Root)>,
    /// True when the slice provably contains the whole interval.
    pub exact: bool,
}

impl Interval {
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
    pub fn roots(&self) -> Vec<Root> {
        self.members.iter().map(|m| m.2.clone()).collect()
    }
}

/// Slice roots of the form `i a + j b` with `i, j >= 1`.
pub fn closed_interval(slice: &RootSlice, a: &Root, b: &Root) -> Result<Interval, RootError> {
    let ea = slice.entry(a)?;
    let eb = slice.entry(b)?;
    if *b == a.neg() {
        return Err(RootError::OppositePair(a.0.clone()));
    }
    let members = interval_members(slice, a, b);
    let gcm = slice.gcm();
    let (ha, hb) = (a.height(), b.height());
    let p = pairing(gcm, &ea.coroot, b)?;
    let exact = if p >= 0 {
        slice.cap() >= ha + hb
    } else if gcm.is_two_spherical()
        && is_prenilpotent(gcm, ea, eb)? == Prenilpotency::Prenilpotent
    {
        slice.cap() >= (2 * (ha + hb) + 5).max(3 * (ha + hb))
    } else {
        false
    };
    Ok(Interval { members, exact })
}

fn interval_members(slice: &RootSlice, a: &Root, b: &Root) -> Vec<(i64, i64, Root)> {
    let d = a.dim();
    // a and b are distinct real roots, not opposite, hence independent
    let (k, l) = (0..d)
        .flat_map(|k| (0..d).map(move |l| (k, l)))
        .find(|&(k, l)| a.0[k] * b.0[l] - a.0[l] * b.0[k] != 0)
        .expect("independent roots");
    let det = a.0[k] * b.0[l] - a.0[l] * b.0[k];
    let mut out = Vec::new();
    for r in slice.entries.keys() {
        let ni = r.0[k] * b.0[l] - r.0[l] * b.0[k];
        let nj = a.0[k] * r.0[l] - a.0[l] * r.0[k];
        if ni % det != 0 || nj % det != 0 {
            continue;
        }
        let (i, j) = (ni / det, nj / det);
        if i >= 1 && j >= 1 && (0..d).all(|t| r.0[t] == i * a.0[t] + j * b.0[t]) {
            out.push((i, j, r.clone()));
        }
    }
    out
}

/// Opposite signs with disjoint supports, or prenilpotent with an exact
/// empty interval.
pub fn commute_guaranteed(slice: &RootSlice, a: &Root, b: &Root) -> Result<bool, RootError> {
    if *b == a.neg() {
        return Err(RootError::OppositePair(a.0.clone()));
    }
    let opposite = (a.is_positive() && b.is_negative()) || (a.is_negative() && b.is_positive());
    let disjoint = a.0.iter().zip(&b.0).all(|(x, y)| *x == 0 || *y == 0);
    if opposite && disjoint {
        return Ok(true);
    }
    let (ea, eb) = (slice.entry(a)?, slice.entry(b)?);
    if is_prenilpotent(slice.gcm(), ea, eb)? == Prenilpotency::NotPrenilpotent {
        return Ok(false);
    }
    let iv = closed_interval(slice, a, b)?;
    Ok(iv.exact && iv.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gcm::catalogue::*;

    fn r(v: &[i64]) -> Root {
        Root(v.to_vec())
    }

    #[test]
    fn pairing_examples() {
        let a2 = a2();
        assert_eq!(pairing(&a2, &Coroot::simple(2, 0), &Root::simple(2, 1)), Ok(-1));
        assert_eq!(pairing(&g2(), &Coroot::simple(2, 0), &Root::simple(2, 1)), Ok(-3));
        for i in 0..3 {
            assert_eq!(pairing(&a3(), &Coroot::simple(3, i), &Root::simple(3, i)), Ok(2));
        }
        assert!(matches!(
            pairing(&a2, &Coroot::simple(3, 0), &Root::simple(2, 0)),
            Err(RootError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn reflection_examples() {
        let a2 = a2();
        assert_eq!(reflect_root(&a2, 0, &r(&[0, 1])).unwrap(), r(&[1, 1]));
        assert_eq!(reflect_root(&a2, 1, &r(&[0, 1])).unwrap(), r(&[0, -1]));
        // long simple reflected by the short one
        assert_eq!(reflect_root(&b2(), 0, &r(&[0, 1])).unwrap(), r(&[2, 1]));
        assert_eq!(reflect_root(&b2(), 1, &r(&[1, 0])).unwrap(), r(&[1, 1]));
        assert_eq!(reflect_root(&a2, 5, &r(&[0, 1])), Err(RootError::IndexOutOfRange(5)));
    }

    #[test]
    fn word_examples() {
        let g = a3();
        let x = r(&[0, -1, 0]);
        let y = Coroot(vec![0, -1, 0]);
        let (rx, _) = apply_word(&g, &WeylWord(vec![0, 2]), &x, &y).unwrap();
        assert_eq!(rx, r(&[-1, -1, -1]));
        assert_eq!(apply_word_root(&g, &WeylWord::identity(), &x).unwrap(), x);
        assert_eq!(apply_word_root(&g, &WeylWord(vec![1, 1]), &x).unwrap(), x);
        // rightmost letter acts first
        let w = WeylWord(vec![0, 1]);
        let a1 = Root::simple(3, 0);
        let step = reflect_root(&g, 0, &reflect_root(&g, 1, &a1).unwrap()).unwrap();
        assert_eq!(apply_word_root(&g, &w, &a1).unwrap(), step);
    }

    #[test]
    fn slice_counts() {
        assert_eq!(RootSlice::enumerate(&a2(), 5).unwrap().len(), 6);
        assert_eq!(RootSlice::enumerate(&b2(), 10).unwrap().len(), 8);
        assert_eq!(RootSlice::enumerate(&g2(), 10).unwrap().len(), 12);
        assert_eq!(RootSlice::enumerate(&affine_a1(), 7).unwrap().len(), 16);
        assert!(matches!(RootSlice::enumerate(&a2(), 0), Err(RootError::CapTooSmall)));
    }

    #[test]
    fn witnesses_reproduce_roots() {
        for g in [a2(), b2(), g2(), affine_a1(), cyclic(3), indefinite_rank3()] {
            let s = RootSlice::enumerate(&g, 9).unwrap();
            for e in s.iter() {
                let base = RootEntry::simple(g.size(), e.base, e.base_sign);
                let (x, y) = apply_word(&g, &e.witness, &base.root, &base.coroot).unwrap();
                assert_eq!((x, y), (e.root.clone(), e.coroot.clone()));
            }
        }
    }

    #[test]
    fn membership_above_cap_is_unknown() {
        let s = RootSlice::enumerate(&affine_a1(), 7).unwrap();
        assert!(matches!(s.membership(&r(&[4, 3])), Membership::Root(_)));
        assert_eq!(s.membership(&r(&[2, 0])), Membership::NotRoot);
        assert_eq!(s.membership(&r(&[5, 4])), Membership::Unknown);
    }

    #[test]
    fn prenilpotency_examples() {
        let g = a2();
        let a = RootEntry::simple(2, 0, 1);
        let b = RootEntry::simple(2, 1, 1);
        assert_eq!(is_prenilpotent(&g, &a, &b), Ok(Prenilpotency::Prenilpotent));
        assert_eq!(is_prenilpotent(&g, &a, &b.negated()), Ok(Prenilpotency::Prenilpotent));
        assert!(matches!(is_prenilpotent(&g, &a, &a.negated()), Err(RootError::OppositePair(_))));
        let h = affine_a1();
        assert_eq!(is_prenilpotent(&h, &a, &b), Ok(Prenilpotency::NotPrenilpotent));
    }

    #[test]
    fn interval_examples() {
        let s = RootSlice::enumerate(&b2(), 20).unwrap();
        // long simple is vertex 1, short simple is vertex 0
        let iv = closed_interval(&s, &r(&[0, 1]), &r(&[1, 0])).unwrap();
        assert!(iv.exact);
        assert_eq!(iv.roots(), vec![r(&[1, 1]), r(&[2, 1])]);

        let s = RootSlice::enumerate(&a2(), 12).unwrap();
        let iv = closed_interval(&s, &r(&[1, 0]), &r(&[0, -1])).unwrap();
        assert!(iv.exact && iv.is_empty());

        let s = RootSlice::enumerate(&a1xa1(), 12).unwrap();
        assert!(closed_interval(&s, &r(&[1, 0]), &r(&[0, 1])).unwrap().is_empty());
    }

    #[test]
    fn commute_examples() {
        let s = RootSlice::enumerate(&a3(), 12).unwrap();
        assert_eq!(commute_guaranteed(&s, &r(&[1, 0, 0]), &r(&[0, 0, -1])), Ok(true));
        let s = RootSlice::enumerate(&a1xa1(), 12).unwrap();
        assert_eq!(commute_guaranteed(&s, &r(&[1, 0]), &r(&[0, 1])), Ok(true));
        let s = RootSlice::enumerate(&a2(), 12).unwrap();
        assert_eq!(commute_guaranteed(&s, &r(&[1, 0]), &r(&[0, 1])), Ok(false));
    }
}

//! Positive unipotent subgroups of rank-2 Chevalley groups over `Z/q`,
//! multiplied by collection into a fixed normal-form order.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use super::{ChevalleyError, ChevalleyType, Zq};
use crate::chevalley::closure::GroupElem;

/// Coefficient `c * r^i * s^j` attached to root `target`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Term {
    pub target: usize,
    pub c: i64,
    pub i: u32,
    pub j: u32,
}

/// `[x_left(r), x_right(s)] = prod x_target(c r^i s^j)`, commutators `g^-1 h^-1 g h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub left: usize,
    pub right: usize,
    pub terms: Vec<Term>,
}

const fn t(target: usize, c: i64, i: u32, j: u32) -> Term {
    Term { target, c, i, j }
}

/// Positive roots as `(a, b)` meaning `a*alpha + b*beta`, alpha long.
pub fn positive_roots(ty: ChevalleyType) -> &'static [(i64, i64)] {
    match ty {
        ChevalleyType::A2 => &[(1, 0), (0, 1), (1, 1)],
        ChevalleyType::B2 => &[(1, 0), (0, 1), (1, 1), (1, 2)],
        ChevalleyType::G2 => &[(1, 0), (0, 1), (1, 1), (1, 2), (1, 3), (2, 3)],
    }
}

/// The non-trivial commutator relations; every other pair commutes.
pub fn relations(ty: ChevalleyType) -> Vec<Relation> {
    let rel = |left, right, terms: &[Term]| Relation {
        left,
        right,
        terms: terms.to_vec(),
    };
    match ty {
        ChevalleyType::A2 => vec![rel(0, 1, &[t(2, 1, 1, 1)])],
        ChevalleyType::B2 => vec![
            rel(0, 1, &[t(2, 1, 1, 1), t(3, 1, 1, 2)]),
            rel(2, 1, &[t(3, 2, 1, 1)]),
        ],
        ChevalleyType::G2 => vec![
            rel(0, 1, &[t(2, 1, 1, 1), t(3, 1, 1, 2), t(4, 1, 1, 3), t(5, 1, 2, 3)]),
            rel(2, 1, &[t(3, 2, 1, 1), t(4, 3, 1, 2), t(5, 3, 2, 1)]),
            rel(3, 1, &[t(4, 3, 1, 1)]),
            rel(3, 2, &[t(5, 3, 1, 1)]),
            rel(4, 0, &[t(5, -1, 1, 1)]),
        ],
    }
}

pub fn root_name(root: (i64, i64)) -> String {
    let part = |k: i64, s: &str| match k {
        0 => String::new(),
        1 => s.to_string(),
        k => format!("{k}{s}"),
    };
    let (a, b) = (part(root.0, "a"), part(root.1, "b"));
    match (a.is_empty(), b.is_empty()) {
        (false, false) => format!("{a}+{b}"),
        (true, _) => b,
        (_, true) => a,
    }
}

#[derive(Debug, Clone, Copy)]
enum Rule {
    Commute,
    Direct(usize),
    Reversed(usize),
}

#[derive(Debug)]
pub struct Engine {
    ty: ChevalleyType,
    zq: Zq,
    roots: &'static [(i64, i64)],
    relations: Vec<Relation>,
    rules: Vec<Rule>,
}

impl Engine {
    pub fn new(ty: ChevalleyType, q: u64) -> Result<Arc<Self>, ChevalleyError> {
        let zq = Zq::new(q)?;
        let roots = positive_roots(ty);
        let relations = relations(ty);
        let n = roots.len();
        let mut rules = vec![Rule::Commute; n * n];
        for (k, r) in relations.iter().enumerate() {
            rules[r.left * n + r.right] = Rule::Direct(k);
            rules[r.right * n + r.left] = Rule::Reversed(k);
        }
        Ok(Arc::new(Engine {
            ty,
            zq,
            roots,
            relations,
            rules,
        }))
    }

    pub fn ty(&self) -> ChevalleyType {
        self.ty
    }
    pub fn q(&self) -> u64 {
        self.zq.q
    }
    pub fn zq(&self) -> Zq {
        self.zq
    }
    pub fn rank(&self) -> usize {
        self.roots.len()
    }
    pub fn roots(&self) -> &'static [(i64, i64)] {
        self.roots
    }
    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }
    pub fn root_index(&self, root: (i64, i64)) -> Result<usize, ChevalleyError> {
        self.roots
            .iter()
            .position(|&r| r == root)
            .ok_or_else(|| ChevalleyError::NotARoot(root_name(root)))
    }

    /// Pairs of positive roots whose positive span contains a root but
    /// which have no relation; empty when the table is complete.
    pub fn missing_relations(&self) -> Vec<(usize, usize)> {
        let n = self.rank();
        let mut out = Vec::new();
        for p in 0..n {
            for s in p + 1..n {
                let (a, b) = (self.roots[p], self.roots[s]);
                let spans_root = self.roots.iter().any(|&(x, y)| {
                    (1..=3).any(|i| (1..=3).any(|j| (i * a.0 + j * b.0, i * a.1 + j * b.1) == (x, y)))
                });
                if spans_root && matches!(self.rules[p * n + s], Rule::Commute) {
                    out.push((p, s));
                }
            }
        }
        out
    }

    /// Number of elements, `q^{#positive roots}`.
    pub fn order(&self) -> u128 {
        (self.q() as u128).pow(self.rank() as u32)
    }

    pub fn identity(self: &Arc<Self>) -> UnipotentElem {
        UnipotentElem {
            engine: Arc::clone(self),
            coeffs: vec![0; self.rank()],
        }
    }

    /// `x_root(r)` for the root with the given index.
    pub fn x(self: &Arc<Self>, root: usize, r: i64) -> UnipotentElem {
        let mut g = self.identity();
        g.coeffs[root] = self.zq.of(r);
        g
    }

    pub fn x_root(self: &Arc<Self>, root: (i64, i64), r: i64) -> Result<UnipotentElem, ChevalleyError> {
        Ok(self.x(self.root_index(root)?, r))
    }

    pub fn from_coeffs(self: &Arc<Self>, coeffs: &[u64]) -> Result<UnipotentElem, ChevalleyError> {
        if coeffs.len() != self.rank() {
            return Err(ChevalleyError::TypeMismatch);
        }
        Ok(UnipotentElem {
            engine: Arc::clone(self),
            coeffs: coeffs.iter().map(|&c| c % self.q()).collect(),
        })
    }

    /// Element number `index` in the base-`q` enumeration of normal forms.
    pub fn element(self: &Arc<Self>, mut index: u128) -> UnipotentElem {
        let mut g = self.identity();
        for c in g.coeffs.iter_mut() {
            *c = (index % self.q() as u128) as u64;
            index /= self.q() as u128;
        }
        g
    }

    fn eval(&self, term: &Term, r: u64, s: u64) -> u64 {
        let z = self.zq;
        z.mul(z.of(term.c), z.mul(z.pow(r, term.i), z.pow(s, term.j)))
    }

    /// `[x_p(u), x_r(v)]` as a list of factors.
    fn commutator_factors(&self, p: usize, u: u64, r: usize, v: u64) -> Vec<(usize, u64)> {
        match self.rules[p * self.rank() + r] {
            Rule::Commute => Vec::new(),
            Rule::Direct(k) => self.relations[k]
                .terms
                .iter()
                .map(|t| (t.target, self.eval(t, u, v)))
                .collect(),
            Rule::Reversed(k) => self.relations[k]
                .terms
                .iter()
                .rev()
                .map(|t| (t.target, self.zq.neg(self.eval(t, v, u))))
                .collect(),
        }
    }

    /// Rewrites a word of root factors into normal form.
    pub fn collect(&self, mut word: Vec<(usize, u64)>) -> Vec<u64> {
        let mut guard = 0usize;
        loop {
            word.retain(|f| f.1 != 0);
            let Some(i) = (0..word.len().saturating_sub(1)).find(|&i| word[i].0 >= word[i + 1].0) else {
                break;
            };
            guard += 1;
            assert!(guard < 1_000_000, "collection did not terminate");
            let (p, u) = word[i];
            let (r, v) = word[i + 1];
            if p == r {
                word[i].1 = self.zq.add(u, v);
                word.remove(i + 1);
                continue;
            }
            // x_p(u) x_r(v) = x_r(v) x_p(u) [x_p(u), x_r(v)]
            let mut replacement = vec![(r, v), (p, u)];
            replacement.extend(self.commutator_factors(p, u, r, v));
            word.splice(i..i + 2, replacement);
        }
        let mut coeffs = vec![0; self.rank()];
        for (root, c) in word {
            coeffs[root] = c;
        }
        coeffs
    }

    fn word_of(g: &UnipotentElem) -> impl Iterator<Item = (usize, u64)> + '_ {
        g.coeffs.iter().copied().enumerate().filter(|f| f.1 != 0)
    }

    pub fn mul(self: &Arc<Self>, a: &UnipotentElem, b: &UnipotentElem) -> Result<UnipotentElem, ChevalleyError> {
        self.check(a)?;
        self.check(b)?;
        let word: Vec<_> = Self::word_of(a).chain(Self::word_of(b)).collect();
        Ok(UnipotentElem {
            engine: Arc::clone(self),
            coeffs: self.collect(word),
        })
    }

    pub fn inverse(self: &Arc<Self>, a: &UnipotentElem) -> Result<UnipotentElem, ChevalleyError> {
        self.check(a)?;
        let word: Vec<_> = Self::word_of(a)
            .collect::<Vec<_>>()
            .into_iter()
            .rev()
            .map(|(r, c)| (r, self.zq.neg(c)))
            .collect();
        Ok(UnipotentElem {
            engine: Arc::clone(self),
            coeffs: self.collect(word),
        })
    }

    /// `a^-1 b^-1 a b`
    pub fn commutator(self: &Arc<Self>, a: &UnipotentElem, b: &UnipotentElem) -> Result<UnipotentElem, ChevalleyError> {
        let ai = self.inverse(a)?;
        let bi = self.inverse(b)?;
        let word: Vec<_> = Self::word_of(&ai)
            .chain(Self::word_of(&bi))
            .chain(Self::word_of(a))
            .chain(Self::word_of(b))
            .collect();
        Ok(UnipotentElem {
            engine: Arc::clone(self),
            coeffs: self.collect(word),
        })
    }

    /// Product of `x_{root}(c)` factors in the given order.
    pub fn product(self: &Arc<Self>, factors: &[(usize, i64)]) -> UnipotentElem {
        let word = factors.iter().map(|&(r, c)| (r, self.zq.of(c))).collect();
        UnipotentElem {
            engine: Arc::clone(self),
            coeffs: self.collect(word),
        }
    }

    fn check(&self, g: &UnipotentElem) -> Result<(), ChevalleyError> {
        if g.engine.ty == self.ty && g.engine.zq == self.zq {
            Ok(())
        } else {
            Err(ChevalleyError::TypeMismatch)
        }
    }
}

/// Normal-form element: coefficient per positive root in the engine's order.
#[derive(Clone)]
pub struct UnipotentElem {
    engine: Arc<Engine>,
    coeffs: Vec<u64>,
}

impl UnipotentElem {
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }
    pub fn engine(&self) -> &Arc<Engine> {
        &self.engine
    }
    pub fn is_identity(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
    pub fn coeff(&self, root: usize) -> u64 {
        self.coeffs[root]
    }
}

impl PartialEq for UnipotentElem {
    fn eq(&self, other: &Self) -> bool {
        self.engine.ty == other.engine.ty && self.engine.zq == other.engine.zq && self.coeffs == other.coeffs
    }
}
impl Eq for UnipotentElem {}

impl Hash for UnipotentElem {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl fmt::Debug for UnipotentElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}/Z{}{:?}", self.engine.ty, self.engine.q(), self.coeffs)
    }
}

impl fmt::Display for UnipotentElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, c)| format!("x_{}({c})", root_name(self.engine.roots[k])))
            .collect();
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join(" "))
        }
    }
}

impl GroupElem for UnipotentElem {
    fn mul(&self, other: &Self) -> Self {
        self.engine.mul(self, other).expect("same engine")
    }
    fn identity_like(&self) -> Self {
        self.engine.identity()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relation_tables_complete() {
        for ty in [ChevalleyType::A2, ChevalleyType::B2, ChevalleyType::G2] {
            assert!(Engine::new(ty, 5).unwrap().missing_relations().is_empty(), "{ty:?}");
        }
    }

    #[test]
    fn a2_swap_costs_highest_root() {
        let e = Engine::new(ChevalleyType::A2, 7).unwrap();
        let ab = e.mul(&e.x(0, 2), &e.x(1, 3)).unwrap();
        let ba = e.mul(&e.x(1, 3), &e.x(0, 2)).unwrap();
        assert_eq!(ab.coeffs(), &[2, 3, 0]);
        // x_b x_a = x_a x_b x_{a+b}(-6)
        assert_eq!(ba.coeffs(), &[2, 3, 1]);
        let comm = e.commutator(&e.x(0, 2), &e.x(1, 3)).unwrap();
        assert_eq!(comm.coeffs(), &[0, 0, 6]);
    }

    #[test]
    fn identity_and_self_commutator() {
        let e = Engine::new(ChevalleyType::G2, 5).unwrap();
        let g = e.product(&[(1, 2), (0, 3), (4, 1)]);
        assert_eq!(e.mul(&e.identity(), &g).unwrap(), g);
        assert!(e.commutator(&g, &g).unwrap().is_identity());
        assert!(e.mul(&g, &e.inverse(&g).unwrap()).unwrap().is_identity());
    }

    #[test]
    fn printed_relations_reproduced() {
        let e = Engine::new(ChevalleyType::B2, 5).unwrap();
        let c = e.commutator(&e.x(2, 1), &e.x(1, 1)).unwrap();
        assert_eq!(c.coeffs(), &[0, 0, 0, 2]);
        let g = Engine::new(ChevalleyType::G2, 5).unwrap();
        let c = g.commutator(&g.x(0, 1), &g.x(1, 1)).unwrap();
        assert_eq!(c.coeffs(), &[0, 0, 1, 1, 1, 1]);
        for r in 0..5 {
            for s in 0..5 {
                let c = g.commutator(&g.x(4, r), &g.x(0, s)).unwrap();
                assert_eq!(c, g.x(5, -r * s));
            }
        }
    }

    #[test]
    fn type_mismatch() {
        let a = Engine::new(ChevalleyType::A2, 5).unwrap();
        let b = Engine::new(ChevalleyType::A2, 7).unwrap();
        assert_eq!(a.mul(&a.x(0, 1), &b.x(0, 1)), Err(ChevalleyError::TypeMismatch));
    }

    #[test]
    fn names() {
        assert_eq!(root_name((2, 3)), "2a+3b");
        assert_eq!(root_name((0, 1)), "b");
        assert_eq!(root_name((1, 1)), "a+b");
    }
}

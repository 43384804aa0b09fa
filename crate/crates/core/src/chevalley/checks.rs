//! Structural verifications built on the engines and matrix realizations:
//! associativity and normal forms, centrality, the `B_2` quotient of `U+(G_2)`,
//! the `V_4` action, the Heisenberg identification and generation closures.

use rand::Rng;
use serde::Serialize;
use serde_json::json;

use super::closure::bfs_closure;
use super::matrix::{matrix_realize, MatrixElem, MatrixKind};
use super::unipotent::{root_name, Engine, UnipotentElem};
use super::{require_coprime_to_six, ChevalleyError, ChevalleyType, DEFAULT_CLOSURE_CAP};
use crate::gcm::catalogue;
use crate::report::{CheckReport, CheckResult};
use crate::rng::substream;
use crate::sigma::build_sigma;
use crate::symrep::{shear, Orientation};

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

/// Engine self-consistency: associativity, inverses, printed relations,
/// normal-form saturation and generation by the simple roots.
pub fn engine_report(ty: ChevalleyType, q: u64, samples: u64, seed: u64) -> Result<CheckReport, ChevalleyError> {
    let e = Engine::new(ty, q)?;
    let mut report = CheckReport::default();
    let mut rng = substream(seed, 0);
    let order = e.order();
    let random = |rng: &mut rand_chacha::ChaCha8Rng| e.element(rng.gen_range(0..order));

    let mut assoc = CheckResult::new("associativity");
    for _ in 0..samples {
        let (a, b, c) = (random(&mut rng), random(&mut rng), random(&mut rng));
        let left = e.mul(&e.mul(&a, &b)?, &c)?;
        let right = e.mul(&a, &e.mul(&b, &c)?)?;
        assoc.record(left == right, || format!("{a:?} {b:?} {c:?}"));
    }
    report.push(assoc);

    let mut inv = CheckResult::new("inverse");
    let exhaustive = order <= 625;
    let count = if exhaustive { order as u64 } else { samples };
    for k in 0..count {
        let g = if exhaustive { e.element(k as u128) } else { random(&mut rng) };
        let ok = e.mul(&g, &e.inverse(&g)?)?.is_identity() && e.mul(&e.inverse(&g)?, &g)?.is_identity();
        inv.record(ok, || format!("{g:?}"));
    }
    report.push(inv);

    let mut rel = CheckResult::new("printed relations");
    let z = e.zq();
    for relation in e.relations() {
        for r in 0..q {
            for s in 0..q {
                let got = e.commutator(&e.x(relation.left, r as i64), &e.x(relation.right, s as i64))?;
                let factors: Vec<(usize, i64)> = relation
                    .terms
                    .iter()
                    .map(|t| (t.target, z.mul(z.of(t.c), z.mul(z.pow(r, t.i), z.pow(s, t.j))) as i64))
                    .collect();
                rel.record(got == e.product(&factors), || {
                    format!("[{}, {}] r={r} s={s}", root_name(e.roots()[relation.left]), root_name(e.roots()[relation.right]))
                });
            }
        }
    }
    report.push(rel);

    let all: Vec<UnipotentElem> = (0..e.rank()).map(|k| e.x(k, 1)).collect();
    let full = bfs_closure(&all, DEFAULT_CLOSURE_CAP)?;
    let mut nf = CheckResult::new("normal-form closure order");
    nf.record(full.order() as u128 == order, || format!("{} != {order}", full.order()));
    report.push(nf);

    // simple roots are the first two in every engine order
    let simple: Vec<UnipotentElem> = (0..2).flat_map(|k| (1..q).map(move |r| (k, r))).map(|(k, r)| e.x(k, r as i64)).collect();
    let gen = bfs_closure(&simple, DEFAULT_CLOSURE_CAP)?;
    let hypothesis = gcd(q, factorial(ty.max_off_diagonal())) == 1;
    let mut sr = CheckResult::new("simple roots generate");
    sr.record(!hypothesis || gen.order() as u128 == order, || format!("order {}", gen.order()));
    report.push(sr);

    report.details = Some(json!({
        "type": ty,
        "q": q,
        "order": order.to_string(),
        "simple_root_closure": gen.order(),
        "hypothesis_holds": hypothesis,
    }));
    Ok(report)
}

/// Highest roots are central and, in `G_2`, `a+3b` becomes central modulo `2a+3b`;
/// exhaustive over `Z/5`.
pub fn centrality_report(ty: ChevalleyType) -> Result<CheckReport, ChevalleyError> {
    let q = 5;
    let e = Engine::new(ty, q)?;
    let mut report = CheckReport::default();
    let elements: Vec<UnipotentElem> = (0..e.order()).map(|k| e.element(k)).collect();
    let central = |name: &str, root: usize, modulo: usize| -> Result<CheckResult, ChevalleyError> {
        let mut c = CheckResult::new(name);
        for r in 1..q as i64 {
            for g in &elements {
                let comm = e.commutator(&e.x(root, r), g)?;
                c.record(comm.coeffs()[..modulo].iter().all(|&x| x == 0), || format!("r={r}, g={g:?}"));
            }
        }
        Ok(c)
    };
    match ty {
        ChevalleyType::B2 => {
            let top = e.root_index((1, 2))?;
            report.push(central("a+2b central", top, e.rank())?);
        }
        ChevalleyType::G2 => {
            report.push(central("2a+3b central", e.root_index((2, 3))?, e.rank())?);
            report.push(central("a+3b central modulo 2a+3b", e.root_index((1, 3))?, e.rank() - 1)?);
            // the obstruction in the full group
            let mut obs = CheckResult::new("a+3b not central in the full group");
            let c = e.commutator(&e.x(e.root_index((1, 3))?, 1), &e.x(0, 1))?;
            obs.record(!c.is_identity(), || "commutes".into());
            report.push(obs);
        }
        ChevalleyType::A2 => return Err(ChevalleyError::Unsupported("centrality report for A2".into())),
    }
    Ok(report)
}

/// The quotient of `U+(G_2)` by `<X_{a+3b}, X_{2a+3b}>` against `U+(B_2)`.
pub fn quotient_relations_check(q: u64) -> Result<CheckReport, ChevalleyError> {
    require_coprime_to_six(q)?;
    let g2 = Engine::new(ChevalleyType::G2, q)?;
    let b2 = Engine::new(ChevalleyType::B2, q)?;
    let qi = q as i64;
    // G_2 roots 0..4 are a, b, a+b, a+2b in the B_2 order
    let project = |g: &UnipotentElem| g.coeffs()[..4].to_vec();
    let lift = |coeffs: &[u64]| {
        let mut c = coeffs.to_vec();
        c.extend([0, 0]);
        g2.from_coeffs(&c)
    };
    let mut report = CheckReport::default();

    let mut first = CheckResult::new("[a, b] = (a+b)(rs) (a+2b)(rs^2)");
    let mut second = CheckResult::new("[a+b, b] = (a+2b)(2rs)");
    let mut trivial = CheckResult::new("r = 0 gives the identity");
    for r in 0..qi {
        for s in 0..qi {
            let c = g2.commutator(&g2.x(0, r), &g2.x(1, s))?;
            first.record(project(&c) == [0, 0, g2.zq().of(r * s), g2.zq().of(r * s * s)], || format!("r={r} s={s}"));
            let c = g2.commutator(&g2.x(2, r), &g2.x(1, s))?;
            second.record(project(&c) == [0, 0, 0, g2.zq().of(2 * r * s)], || format!("r={r} s={s}"));
            if r == 0 {
                let c = g2.commutator(&g2.x(0, 0), &g2.x(1, s))?;
                trivial.record(c.is_identity(), || format!("s={s}"));
            }
        }
    }
    report.push(first);
    report.push(second);
    report.push(trivial);

    let mut normal = CheckResult::new("kernel is normal");
    for k in [4, 5] {
        for gen in 0..g2.rank() {
            for r in 1..qi {
                for s in 1..qi {
                    let x = g2.x(gen, s);
                    let conj = g2.mul(&g2.mul(&g2.inverse(&x)?, &g2.x(k, r))?, &x)?;
                    normal.record(project(&conj) == [0, 0, 0, 0], || format!("root {k} by {gen}"));
                }
            }
        }
    }
    report.push(normal);

    let mut table = CheckResult::new("quotient table equals U+(B2)");
    let n = b2.order();
    for i in 0..n {
        let a = b2.element(i);
        let la = lift(a.coeffs())?;
        for j in 0..n {
            let b = b2.element(j);
            let prod = g2.mul(&la, &lift(b.coeffs())?)?;
            table.record(project(&prod) == b2.mul(&a, &b)?.coeffs(), || format!("{a:?} * {b:?}"));
        }
    }
    report.push(table);
    Ok(report)
}

/// How coordinates of `N/X_{2a+3b}` map onto `V_4` and which shear acts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct V4Dictionary {
    /// Root names in model-basis order.
    pub order: Vec<String>,
    pub signs: [i64; 4],
    pub matrix: String,
    /// `s` or `-s`
    pub parameter: String,
    /// `column`: `w -> M w`; `row`: `w -> w M`.
    pub side: String,
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 0..n {
        for rest in permutations(n - 1) {
            let mut p = vec![first];
            p.extend(rest.into_iter().map(|x| if x >= first { x + 1 } else { x }));
            out.push(p);
        }
    }
    out
}

/// Conjugation `n -> x_b(s)^-1 n x_b(s)` on `N/X_{2a+3b}`, coordinates
/// `(a+3b, a+2b, a+b, a)`, matched against the shear action on `V_4`.
pub fn g2_v4_conjugation_check(q: u64) -> Result<CheckReport, ChevalleyError> {
    let z = require_coprime_to_six(q)?;
    let e = Engine::new(ChevalleyType::G2, q)?;
    let coords = [e.root_index((1, 3))?, e.root_index((1, 2))?, e.root_index((1, 1))?, e.root_index((1, 0))?];
    let beta = e.root_index((0, 1))?;
    let qi = q as i64;
    let conj = |n: &UnipotentElem, s: i64| -> Result<[u64; 4], ChevalleyError> {
        let x = e.x(beta, s);
        let c = e.mul(&e.mul(&e.inverse(&x)?, n)?, &x)?;
        Ok(coords.map(|k| c.coeff(k)))
    };
    let element = |v: [u64; 4]| {
        let factors: Vec<(usize, i64)> = (0..4).map(|k| (coords[k], v[k] as i64)).collect();
        e.product(&factors)
    };
    // action matrices: column j is the image of basis vector j
    let mut action = Vec::new();
    for s in 0..qi {
        let mut m = [[0u64; 4]; 4];
        for j in 0..4 {
            let mut basis = [0u64; 4];
            basis[j] = 1;
            let img = conj(&element(basis), s)?;
            for i in 0..4 {
                m[i][j] = img[i];
            }
        }
        action.push(m);
    }

    let mut matches = Vec::new();
    for perm in permutations(4) {
        for sign_mask in 0..16u32 {
            let signs: [i64; 4] = std::array::from_fn(|k| if sign_mask >> k & 1 == 1 { -1 } else { 1 });
            for orientation in [Orientation::Upper, Orientation::Lower] {
                for eps in [1i64, -1] {
                    for column in [true, false] {
                        let fits = (0..qi).all(|s| {
                            let m = shear(4, orientation).expect("n = 4").eval(eps * s, q);
                            // model coordinate k = signs[k] * coordinate perm[k]
                            (0..4).all(|i| {
                                (0..4).all(|j| {
                                    let ours = z.of(signs[i] * signs[j] * action[s as usize][perm[i]][perm[j]] as i64);
                                    let model = if column { m.get(i, j) } else { m.get(j, i) };
                                    ours == model
                                })
                            })
                        });
                        if fits {
                            matches.push((perm.clone(), signs, orientation, eps, column));
                        }
                    }
                }
            }
        }
    }
    let Some((perm, signs, orientation, eps, column)) = matches.first().cloned() else {
        return Err(ChevalleyError::DictionaryNotFound);
    };
    let names = ["a+3b", "a+2b", "a+b", "a"];
    let dictionary = V4Dictionary {
        order: perm.iter().map(|&k| names[k].to_string()).collect(),
        signs,
        matrix: if orientation == Orientation::Upper { "U+" } else { "U-" }.into(),
        parameter: if eps == 1 { "s" } else { "-s" }.into(),
        side: if column { "column" } else { "row" }.into(),
    };

    let mut report = CheckReport::default();
    let mut full = CheckResult::new("dictionary exhaustive");
    let mut ident = CheckResult::new("s = 0 acts trivially");
    for idx in 0..q.pow(4) {
        let v: [u64; 4] = std::array::from_fn(|k| idx / q.pow(k as u32) % q);
        let n = element(v);
        let model_in: [u64; 4] = std::array::from_fn(|k| z.of(signs[k] * v[perm[k]] as i64));
        for s in 0..qi {
            let got = conj(&n, s)?;
            let m = shear(4, orientation).expect("n = 4").eval(eps * s, q);
            let model_out: [u64; 4] = std::array::from_fn(|i| {
                (0..4).fold(0, |acc, j| {
                    let entry = if column { m.get(i, j) } else { m.get(j, i) };
                    z.add(acc, z.mul(entry, model_in[j]))
                })
            });
            let ours: [u64; 4] = std::array::from_fn(|k| z.of(signs[k] * got[perm[k]] as i64));
            full.record(ours == model_out, || format!("v={v:?} s={s}"));
            if s == 0 {
                ident.record(got == v, || format!("v={v:?}"));
            }
        }
    }
    report.push(full);
    report.push(ident);

    let mut two = CheckResult::new("x_{a+b}(r) picks up (a+2b)(2rs)");
    for r in 0..qi {
        for s in 0..qi {
            let got = conj(&e.x(coords[2], r), s)?;
            two.record(got[1] == z.of(2 * r * s), || format!("r={r} s={s}"));
        }
    }
    report.push(two);
    report.details = Some(json!({ "dictionary": dictionary, "matching_dictionaries": matches.len() }));
    Ok(report)
}

/// `x_a(a) x_b(b) x_{a+b}(c) -> E_12(a) E_23(b) E_13(c)` is a bijective
/// homomorphism onto the upper unitriangular group, for both realizations.
pub fn heis_isomorphism_check(q: u64) -> Result<CheckReport, ChevalleyError> {
    let e = Engine::new(ChevalleyType::A2, q)?;
    let mut report = CheckReport::default();
    for kind in [MatrixKind::Heis, MatrixKind::SL(3)] {
        let phi = |g: &UnipotentElem| -> Result<MatrixElem, ChevalleyError> {
            let c = g.coeffs();
            let a = matrix_realize(kind, &[1, 0], c[0] as i64, q)?;
            let b = matrix_realize(kind, &[0, 1], c[1] as i64, q)?;
            let ab = matrix_realize(kind, &[1, 1], c[2] as i64, q)?;
            a.try_mul(&b)?.try_mul(&ab)
        };
        let name = if kind == MatrixKind::Heis { "Heis" } else { "SL3" };
        let elements: Vec<UnipotentElem> = (0..e.order()).map(|k| e.element(k)).collect();
        let images: Vec<MatrixElem> = elements.iter().map(phi).collect::<Result<_, _>>()?;
        let mut hom = CheckResult::new(format!("{name} homomorphism"));
        for (g, pg) in elements.iter().zip(&images) {
            for (h, ph) in elements.iter().zip(&images) {
                hom.record(phi(&e.mul(g, h)?)? == pg.try_mul(ph)?, || format!("{g:?} {h:?}"));
            }
        }
        report.push(hom);
        let mut bij = CheckResult::new(format!("{name} bijective"));
        let distinct: std::collections::HashSet<_> = images.iter().collect();
        let unitriangular = images
            .iter()
            .all(|m| (0..3).all(|i| m.get(i, i) == 1 && (0..i).all(|j| m.get(i, j) == 0)));
        bij.record(distinct.len() as u128 == e.order() && unitriangular, || format!("{} images", distinct.len()));
        report.push(bij);
    }
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GenGroup {
    Sl3,
    Sp4,
}

impl std::str::FromStr for GenGroup {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "sl3" => Ok(GenGroup::Sl3),
            "sp4" => Ok(GenGroup::Sp4),
            _ => Err(format!("unknown group {s:?}")),
        }
    }
}

fn is_prime(q: u64) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| q % d != 0)
}

/// Order of the full group over the prime field.
pub fn group_order(group: GenGroup, q: u64) -> u64 {
    match group {
        GenGroup::Sl3 => q.pow(3) * (q * q - 1) * (q.pow(3) - 1),
        GenGroup::Sp4 => q.pow(4) * (q * q - 1) * (q.pow(4) - 1),
    }
}

/// Closure of the root subgroups of the generating set inside `SL_3(F_q)` or
/// `Sp_4(F_q)`, compared with the group order.
pub fn generation_report(group: GenGroup, q: u64) -> Result<CheckReport, ChevalleyError> {
    if !is_prime(q) {
        return Err(ChevalleyError::BadParameter(format!("q = {q} must be prime")));
    }
    let (gcm, kind) = match group {
        GenGroup::Sl3 => (catalogue::a2(), MatrixKind::SL(3)),
        GenGroup::Sp4 => (catalogue::b2(), MatrixKind::B2),
    };
    let sigma = build_sigma(&gcm).map_err(|err| ChevalleyError::BadParameter(err.to_string()))?;
    let mut generators = Vec::new();
    let mut roots = Vec::new();
    for root in sigma.roots() {
        // the B_2 catalogue lists the short root first; the Sp_4 table uses (long, short)
        let coords = match group {
            GenGroup::Sl3 => root.0.clone(),
            GenGroup::Sp4 => vec![root.0[1], root.0[0]],
        };
        roots.push(coords.clone());
        for r in 1..q as i64 {
            generators.push(matrix_realize(kind, &coords, r, q)?);
        }
    }
    let closure = bfs_closure(&generators, DEFAULT_CLOSURE_CAP)?;
    let expected = group_order(group, q);
    let mut check = CheckResult::new("generating-set closure is the whole group");
    check.record(closure.order() as u64 == expected, || format!("{} != {expected}", closure.order()));
    let mut report = CheckReport::default();
    report.push(check);
    report.details = Some(json!({
        "group": group,
        "q": q,
        "roots": roots,
        "order": closure.order(),
        "expected": expected,
    }));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutations_start_with_identity() {
        let p = permutations(4);
        assert_eq!(p.len(), 24);
        assert_eq!(p[0], vec![0, 1, 2, 3]);
    }

    #[test]
    fn group_orders() {
        assert_eq!(group_order(GenGroup::Sl3, 2), 168);
        assert_eq!(group_order(GenGroup::Sl3, 5), 372_000);
        assert_eq!(group_order(GenGroup::Sp4, 3), 51_840);
    }

    #[test]
    fn small_generation() {
        let rep = generation_report(GenGroup::Sl3, 2).unwrap();
        assert!(rep.passed(), "{rep:?}");
        assert!(generation_report(GenGroup::Sl3, 4).is_err());
    }

    #[test]
    fn b2_centrality() {
        assert!(centrality_report(ChevalleyType::B2).unwrap().passed());
        assert!(centrality_report(ChevalleyType::A2).is_err());
    }

    #[test]
    fn heis() {
        assert!(heis_isomorphism_check(3).unwrap().passed());
    }

    #[test]
    fn engine_small() {
        let rep = engine_report(ChevalleyType::B2, 3, 200, 0).unwrap();
        assert!(rep.passed(), "{rep:?}");
    }

    #[test]
    fn coprimality_guard() {
        assert_eq!(quotient_relations_check(6).unwrap_err(), ChevalleyError::ModulusNotCoprimeToSix);
        assert_eq!(g2_v4_conjugation_check(9).unwrap_err(), ChevalleyError::ModulusNotCoprimeToSix);
    }
}

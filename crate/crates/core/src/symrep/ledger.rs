//! The mass bookkeeping behind the 1/22 bound, replayed as a DAG of
//! inequalities whose coefficients are multiples of the invariance constant C.

use std::collections::{BTreeMap, VecDeque};

use num_rational::Ratio;

use super::region::{classify_region, RegionTag};
use super::series::SeriesVec;
use super::transport::transport_facts;
use crate::report::{CheckReport, CheckResult};
use crate::rng::substream;

/// `mu(region) < own*C + sum mu(deps)`; `own` counts moves by elements of the
/// generating set, one `C` each, taken from the referenced transport facts.
#[derive(Debug, Clone)]
pub struct LedgerNode {
    pub region: &'static str,
    pub own: i64,
    pub deps: &'static [&'static str],
    pub facts: &'static [usize],
    pub stated: i64,
}

pub const TOTAL: &str = "total";

pub fn ledger_nodes() -> Vec<LedgerNode> {
    let node = |region, own, deps, facts, stated| LedgerNode {
        region,
        own,
        deps,
        facts,
        stated,
    };
    vec![
        node("A1\\E", 2, &[], &[2], 2),
        node("A4\\E", 2, &[], &[3], 2),
        node("A1\\A1°", 2, &[], &[4], 2),
        node("A4\\A4°", 2, &[], &[5], 2),
        node("A2°⊔A3°", 1, &["A1\\A1°"], &[1], 3),
        node("A1", 0, &["A1\\E", "A1\\A1°"], &[], 4),
        node("A4", 0, &["A4\\E", "A4\\A4°"], &[], 4),
        node("B\\S", 1, &["A4\\E"], &[6], 3),
        node("S", 1, &["A2°⊔A3°", "A4"], &[7], 8),
        node(TOTAL, 0, &["A1", "A4", "A2°⊔A3°", "B\\S", "S"], &[], 22),
    ]
}

fn member(region: &str, t: &RegionTag) -> bool {
    match region {
        "A1\\E" => t.a[0] && !t.e,
        "A4\\E" => t.a[3] && !t.e,
        "A1\\A1°" => t.a[0] && !t.a_strict[0],
        "A4\\A4°" => t.a[3] && !t.a_strict[3],
        "A2°⊔A3°" => t.a_strict[1] || t.a_strict[2],
        "A1" => t.a[0],
        "A4" => t.a[3],
        "B\\S" => t.b && !t.s,
        "S" => t.s,
        _ => true,
    }
}

/// Kahn's algorithm; `None` on a cycle or a dangling dependency.
fn topological_order(nodes: &[LedgerNode]) -> Option<Vec<usize>> {
    let index: BTreeMap<&str, usize> = nodes.iter().enumerate().map(|(i, n)| (n.region, i)).collect();
    let mut indegree = vec![0usize; nodes.len()];
    let mut users = vec![Vec::new(); nodes.len()];
    for (i, n) in nodes.iter().enumerate() {
        for d in n.deps {
            let j = *index.get(d)?;
            indegree[i] += 1;
            users[j].push(i);
        }
    }
    let mut queue: VecDeque<usize> = (0..nodes.len()).filter(|&i| indegree[i] == 0).collect();
    let mut order = Vec::new();
    while let Some(i) = queue.pop_front() {
        order.push(i);
        for &u in &users[i] {
            indegree[u] -= 1;
            if indegree[u] == 0 {
                queue.push_back(u);
            }
        }
    }
    (order.len() == nodes.len()).then_some(order)
}

/// Coefficient of `C` in each node's bound, in node order.
pub fn derive_coefficients(nodes: &[LedgerNode]) -> Option<Vec<i64>> {
    let order = topological_order(nodes)?;
    let index: BTreeMap<&str, usize> = nodes.iter().enumerate().map(|(i, n)| (n.region, i)).collect();
    let mut value = vec![0i64; nodes.len()];
    for i in order {
        value[i] = nodes[i].own + nodes[i].deps.iter().map(|d| value[index[d]]).sum::<i64>();
    }
    Some(value)
}

pub fn ledger_check() -> CheckReport {
    let nodes = ledger_nodes();
    let facts = transport_facts();
    let mut report = CheckReport::default();

    let mut dag = CheckResult::new("inequality DAG acyclic");
    let derived = derive_coefficients(&nodes);
    dag.record(derived.is_some(), || "cycle or dangling dependency".into());
    report.push(dag);
    let derived = derived.unwrap_or_default();

    let mut coeffs = CheckResult::new("derived coefficients match");
    for (n, &v) in nodes.iter().zip(&derived) {
        coeffs.record(v == n.stated, || format!("{}: derived {v}, stated {}", n.region, n.stated));
    }
    report.push(coeffs);

    let mut own = CheckResult::new("own terms equal transport steps");
    for n in &nodes {
        let steps: Option<usize> = n.facts.iter().map(|&f| facts.get(f).map(|x| x.steps.len())).sum();
        own.record(steps == Some(n.own as usize), || format!("{}: {steps:?} steps for {}C", n.region, n.own));
    }
    report.push(own);

    let total = nodes.iter().position(|n| n.region == TOTAL).and_then(|i| derived.get(i).copied());
    let terms: Vec<i64> = nodes
        .iter()
        .find(|n| n.region == TOTAL)
        .map(|n| {
            n.deps
                .iter()
                .map(|d| nodes.iter().position(|m| m.region == *d).map_or(0, |i| derived[i]))
                .collect()
        })
        .unwrap_or_default();
    let mut sum = CheckResult::new("terms 4+4+3+3+8 sum to 22");
    sum.record(terms == [4, 4, 3, 3, 8] && total == Some(22), || format!("{terms:?} -> {total:?}"));
    report.push(sum);

    let mut mass = CheckResult::new("C = 1/22 saturates mass 1");
    let c = Ratio::new(1i64, 22);
    mass.record(total.map(|t| c * t) == Some(Ratio::from_integer(1)), || format!("{total:?} * 1/22"));
    report.push(mass);

    // region inclusions behind the dependency edges, on sampled vectors
    let mut cover = CheckResult::new("dependency regions cover");
    let mut rng = substream(0, 1000);
    for _ in 0..10_000 {
        let v = SeriesVec::sample(&mut rng, 5, 8);
        let Ok(tag) = classify_region(&v) else { continue };
        for n in nodes.iter().filter(|n| !n.deps.is_empty()) {
            let image = match n.facts.first() {
                Some(&f) if member(n.region, &tag) => {
                    let word: Vec<_> = facts[f].steps.iter().map(|&(o, p, _)| (o, p)).collect();
                    classify_region(&v.act_word(&word)).ok()
                }
                Some(_) => continue,
                None if member(n.region, &tag) => Some(tag),
                None => continue,
            };
            let ok = image.is_some_and(|t| n.deps.iter().any(|d| member(d, &t)));
            cover.record(ok, || format!("{}: {v:?}", n.region));
        }
    }
    report.push(cover);

    let mut disjoint = CheckResult::new("E misses A1° and A4°");
    let mut rng = substream(0, 1001);
    for _ in 0..10_000 {
        let v = SeriesVec::sample(&mut rng, 5, 8);
        if let Ok(t) = classify_region(&v) {
            disjoint.record(!(t.e && (t.a_strict[0] || t.a_strict[3])), || format!("{v:?}"));
        }
    }
    report.push(disjoint);
    report
}

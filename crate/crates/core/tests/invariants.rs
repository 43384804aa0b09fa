use proptest::prelude::*;

use kmt_core::chevalley::{ChevalleyType, Engine};
use kmt_core::roots::{apply_word, pairing, reflect_root};
use kmt_core::symrep::{shear, Orientation, Param, Series, SeriesVec};
use kmt_core::{Coroot, Gcm, GcmKind, Root, RootSlice, WeylWord};

/// Random GCMs of size 2..=4 with off-diagonal entries in -3..=0 and a
/// symmetric zero pattern.
fn gcm_strategy() -> impl Strategy<Value = Gcm> {
    (2usize..=4).prop_flat_map(|d| {
        prop::collection::vec((0i64..=3, 0i64..=3), d * (d - 1) / 2).prop_map(move |pairs| {
            let mut rows = vec![vec![0i64; d]; d];
            let mut it = pairs.into_iter();
            for i in 0..d {
                rows[i][i] = 2;
                for j in i + 1..d {
                    let (a, b) = it.next().expect("enough pairs");
                    let (a, b) = if a == 0 || b == 0 { (0, 0) } else { (a, b) };
                    rows[i][j] = -a;
                    rows[j][i] = -b;
                }
            }
            Gcm::new(rows).expect("valid by construction")
        })
    })
}

fn series_strategy(q: u64) -> impl Strategy<Value = Series> {
    prop::collection::vec((-8i64..=-1, 0i64..q as i64), 0..6).prop_map(move |t| Series::from_terms(t, q))
}

fn vec_strategy(q: u64) -> impl Strategy<Value = SeriesVec> {
    [series_strategy(q), series_strategy(q), series_strategy(q), series_strategy(q)].prop_map(SeriesVec)
}

fn param_strategy() -> impl Strategy<Value = Param> {
    prop_oneof![Just(Param::One), Just(Param::MinusOne), Just(Param::T), Just(Param::MinusT)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn classification_is_permutation_invariant(g in gcm_strategy(), k in 0usize..24) {
        let d = g.size();
        let mut perm: Vec<usize> = (0..d).collect();
        for i in (1..d).rev() {
            perm.swap(i, k % (i + 1));
        }
        let rows: Vec<Vec<i64>> = (0..d).map(|i| (0..d).map(|j| g.entry(perm[i], perm[j])).collect()).collect();
        let h = Gcm::new(rows).unwrap();
        let (a, b) = (g.classify(), h.classify());
        prop_assert_eq!(a.kind, b.kind);
        prop_assert_eq!(a.two_spherical, b.two_spherical);
        prop_assert_eq!(g.determinant(), h.determinant());
    }

    #[test]
    fn spherical_iff_positive_minors(g in gcm_strategy()) {
        let d = g.size();
        let all_positive = (1u32..1 << d).all(|mask| {
            let idx: Vec<usize> = (0..d).filter(|i| mask >> i & 1 == 1).collect();
            g.principal_minor(&idx) > 0
        });
        let c = g.classify();
        if g.is_indecomposable() {
            prop_assert_eq!(c.kind == GcmKind::Spherical, all_positive);
        }
    }

    #[test]
    fn two_sphericity_matches_rank_two_subsets(g in gcm_strategy()) {
        prop_assert_eq!(g.is_k_spherical(2).unwrap(), g.is_two_spherical());
    }

    #[test]
    fn reflections_preserve_pairing(g in gcm_strategy(), word in prop::collection::vec(0usize..4, 0..6),
                                    x in prop::collection::vec(-3i64..=3, 4), y in prop::collection::vec(-3i64..=3, 4)) {
        let d = g.size();
        let w = WeylWord(word.into_iter().map(|i| i % d).collect());
        let x = Root(x[..d].to_vec());
        let y = Coroot(y[..d].to_vec());
        let before = pairing(&g, &y, &x).unwrap();
        let (wx, wy) = apply_word(&g, &w, &x, &y).unwrap();
        prop_assert_eq!(pairing(&g, &wy, &wx).unwrap(), before);
        let (back, _) = apply_word(&g, &w.inverse(), &wx, &wy).unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn reflections_are_involutions(g in gcm_strategy(), i in 0usize..4, x in prop::collection::vec(-4i64..=4, 4)) {
        let d = g.size();
        let x = Root(x[..d].to_vec());
        let once = reflect_root(&g, i % d, &x).unwrap();
        prop_assert_eq!(reflect_root(&g, i % d, &once).unwrap(), x);
    }

    #[test]
    fn root_slices_are_symmetric(g in gcm_strategy()) {
        let slice = RootSlice::enumerate(&g, 5).unwrap();
        for e in slice.iter() {
            prop_assert!(slice.get(&e.root.neg()).is_some());
            prop_assert!(e.root.is_positive() || e.root.is_negative());
        }
    }

    #[test]
    fn valuation_of_shift(s in series_strategy(7), k in -3i64..=3) {
        prop_assert_eq!(s.shift(k).valuation(), s.valuation().map(|v| v + k));
    }

    #[test]
    fn valuation_max_rule(a in series_strategy(7), b in series_strategy(7)) {
        let sum = a.add(&b);
        let bound = a.valuation().max(b.valuation());
        prop_assert!(sum.valuation() <= bound);
        if a.valuation() != b.valuation() {
            prop_assert_eq!(sum.valuation(), bound);
        }
    }

    #[test]
    fn leading_terms_add_when_they_do_not_cancel(a in series_strategy(11), b in series_strategy(11)) {
        let la = a.leading_series();
        let lb = b.leading_series();
        let lsum = la.add(&lb);
        if a.valuation() == b.valuation() && !lsum.is_zero() {
            prop_assert_eq!(a.add(&b).leading_series(), lsum);
        }
    }

    #[test]
    fn shear_action_is_a_homomorphism(v in vec_strategy(35), up in any::<bool>(), s in param_strategy()) {
        let o = if up { Orientation::Upper } else { Orientation::Lower };
        prop_assert_eq!(v.act(o, s).act(o, s.negate()), v.clone());
        let doubled = v.act(o, s).act(o, s);
        let w = v.act(o, s.negate());
        prop_assert_eq!(doubled.act(o, s.negate()).act(o, s.negate()), v.clone());
        prop_assert_eq!(w.act(o, s), v);
    }

    #[test]
    fn numeric_shear_homomorphism(n in 2usize..=6, s in 0i64..11, t in 0i64..11, up in any::<bool>()) {
        let m = shear(n, if up { Orientation::Upper } else { Orientation::Lower }).unwrap();
        prop_assert_eq!(m.eval(s, 11).try_mul(&m.eval(t, 11)).unwrap(), m.eval(s + t, 11));
    }

    #[test]
    fn unipotent_group_axioms(a in 0u128..15_625, b in 0u128..15_625, c in 0u128..15_625) {
        let e = Engine::new(ChevalleyType::G2, 5).unwrap();
        let (x, y, z) = (e.element(a), e.element(b), e.element(c));
        let left = e.mul(&e.mul(&x, &y).unwrap(), &z).unwrap();
        let right = e.mul(&x, &e.mul(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert_eq!(e.mul(&x, &e.inverse(&x).unwrap()).unwrap(), e.identity());
    }
}

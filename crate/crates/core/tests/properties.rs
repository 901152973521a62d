use std::collections::BTreeSet;

use proptest::prelude::*;
use resdeg_core::arith::{divisors, gcd, is_prime};
use resdeg_core::aut::{aut_order, universal_kernel_order, DEFAULT_CEILING};
use resdeg_core::consequences::{h_f, theta_f, GroupRingElement};
use resdeg_core::criteria::{check_cmain, check_main, ClassData, FieldDescriptor};
use resdeg_core::cyclo::{primes_up_to, residue_degree_cyclotomic, residue_degree_plus_part, residue_degree_subfield};
use resdeg_core::group::{coset_representatives, subgroup_generated};
use resdeg_core::sim::{for_each_action, ActionFilter};
use resdeg_core::FiniteAbelianGroup;

/// Abelian groups of order at most `max`, as cyclic-order lists.
fn small_group(max: u64) -> impl Strategy<Value = FiniteAbelianGroup> {
    prop::collection::vec(2u64..=12, 0..=3)
        .prop_filter("order bound", move |f| f.iter().product::<u64>() <= max)
        .prop_map(|f| FiniteAbelianGroup::new(&f).unwrap())
}

fn element_of(g: &FiniteAbelianGroup, seed: u64) -> resdeg_core::GroupElement {
    g.element_at(seed % g.order())
}

fn odd_prime() -> impl Strategy<Value = u64> {
    (3u64..400).prop_filter("prime", |&p| is_prime(p))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn order_census_sums_to_order(g in small_group(200)) {
        let census = g.order_census();
        prop_assert_eq!(census.values().sum::<u64>(), g.order());
        prop_assert!(census.keys().all(|k| g.exponent() % k == 0));
        prop_assert_eq!(census.get(&1), Some(&1));
    }

    #[test]
    fn order_of_multiple(g in small_group(200), seed in any::<u64>(), k in 0i64..50) {
        let x = element_of(&g, seed);
        let ord = g.element_order(&x);
        prop_assert_eq!(g.element_order(&g.scale(k, &x)), ord / gcd(k as u64, ord));
    }

    #[test]
    fn cosets_partition_group(g in small_group(200), seed in any::<u64>()) {
        let h = subgroup_generated(&g, &[element_of(&g, seed)]);
        let reps = coset_representatives(&g, &h);
        prop_assert_eq!(reps.len() as u64, g.order() / h.order());
        let members = h.members().expect("small subgroups are materialized");
        let gr = &g;
        let covered: BTreeSet<_> = reps.iter().flat_map(|r| members.iter().map(move |m| gr.add(r, m))).collect();
        prop_assert_eq!(covered.len() as u64, g.order());
    }

    #[test]
    fn aut_order_multiplicative_on_coprime_parts(a in small_group(60), b in small_group(60)) {
        prop_assume!(gcd(a.order(), b.order()) == 1);
        let mut both: Vec<u64> = a.factors().to_vec();
        both.extend_from_slice(b.factors());
        let sum = if both.is_empty() { FiniteAbelianGroup::trivial() } else { FiniteAbelianGroup::new(&both).unwrap() };
        prop_assert_eq!(aut_order(&sum), aut_order(&a) * aut_order(&b));
    }

    #[test]
    fn universal_kernel_divides_degree(a in small_group(30), n in 1u64..=40) {
        prop_assume!(aut_order(&a) <= 100_000u64.into());
        let k = universal_kernel_order(n, &a, DEFAULT_CEILING).unwrap();
        prop_assert_eq!(n % k, 0);
        // Every action of Z/n on A factors through Z/(n/k).
        let g = FiniteAbelianGroup::cyclic(n);
        let x = g.scale((n / k) as i64, &g.element_at(1 % n));
        let mut all_trivial = true;
        for_each_action(&a, &g, ActionFilter::All, DEFAULT_CEILING, |ext| {
            all_trivial &= ext.acts_trivially(ext.g().index(&x));
            std::ops::ControlFlow::Continue(())
        }).unwrap();
        prop_assert!(all_trivial);
    }

    #[test]
    fn cmain_implies_main(a in small_group(40), n in 1u64..=60) {
        prop_assume!(gcd(n, a.order()) == 1 && aut_order(&a) <= 100_000u64.into());
        let field = FieldDescriptor::cyclic("K", n, ClassData::Group(a)).unwrap();
        for f in divisors(n) {
            if check_cmain(&field, f).unwrap().is_certified() {
                prop_assert!(check_main(&field, f, DEFAULT_CEILING).unwrap().is_certified());
            }
        }
    }

    #[test]
    fn residue_degrees_in_towers(ell in odd_prime(), p in 2u64..10_000) {
        prop_assume!(p % ell != 0);
        let full = residue_degree_cyclotomic(p, ell).unwrap();
        prop_assert_eq!(residue_degree_subfield(p, ell, ell - 1).unwrap(), full);
        for f in divisors(ell - 1) {
            let d = residue_degree_subfield(p, ell, f).unwrap();
            prop_assert_eq!(full % d, 0);
            prop_assert_eq!(f % d, 0);
            // Through an intermediate field: degrees multiply up the tower.
            for e in divisors(f) {
                prop_assert_eq!(d % residue_degree_subfield(p, ell, e).unwrap(), 0);
            }
        }
        let plus = residue_degree_plus_part(p, ell).unwrap();
        prop_assert!(plus == full || 2 * plus == full);
        prop_assert_eq!(plus, residue_degree_subfield(p, ell, (ell - 1) / 2).unwrap());
    }

    #[test]
    fn group_ring_laws(g in small_group(24), s in ring_terms(), t in ring_terms(), u in ring_terms()) {
        let build = |terms: &[(u64, i64)]| {
            GroupRingElement::from_terms(&g, terms.iter().map(|&(seed, c)| (element_of(&g, seed), c)))
        };
        let (x, y, z) = (build(&s), build(&t), build(&u));
        prop_assert_eq!(x.mul(&y), y.mul(&x));
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
        prop_assert_eq!(x.mul(&GroupRingElement::one(&g)), x.clone());
        // N·x = ε(x)·N.
        let eps: i64 = x.terms().map(|(_, c)| c).sum();
        let n = GroupRingElement::norm(&g);
        prop_assert_eq!(n.mul(&x), n.scale(eps));
    }

    #[test]
    fn theta_support_is_transversal(n in 1u64..=200, pick in any::<prop::sample::Index>()) {
        let g = FiniteAbelianGroup::cyclic(n);
        let ds = divisors(n);
        let f = ds[pick.index(ds.len())];
        let h = h_f(&g, f).unwrap();
        let theta = theta_f(&g, f).unwrap();
        prop_assert_eq!(h.order(), f);
        prop_assert_eq!(theta.support().len() as u64 * h.order(), n);
        if gcd(f, n / f) == 1 {
            let support = theta.support();
            let span = subgroup_generated(&g, &support);
            prop_assert_eq!(span.order(), n / f);
        }
    }
}

fn ring_terms() -> impl Strategy<Value = Vec<(u64, i64)>> {
    prop::collection::vec((any::<u64>(), -3i64..=3), 0..4)
}

#[test]
fn sieve_matches_trial_division() {
    let ps = primes_up_to(20_000);
    let brute: Vec<u64> = (2..=20_000).filter(|&n| is_prime(n)).collect();
    assert_eq!(ps, brute);
}

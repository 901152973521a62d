//! Acceptance suite: one PASS/FAIL line per criterion, then a single assertion
//! so that every criterion reports even when an earlier one fails.
//!
//! Run with `cargo test -p resdeg --test acceptance -- --nocapture` to see the lines.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use resdeg::data::parse_records;
use resdeg::examples::{self, CYCLOTOMIC_CSV, REAL_PLUS_TABLE_CSV};
use resdeg::sweep::{self, Coverage};
use resdeg::table::{self, TableRow};
use resdeg_core::arith::{euler_phi, factorize, gcd};
use resdeg_core::aut::{aut_order, count_order2_aut_cyclic};
use resdeg_core::consequences::{subfield_exponent_bound, Conclusion};
use resdeg_core::criteria::ClassData;
use resdeg_core::cyclo::{degree_census, primes_up_to, CyclotomicContext, DensityReport};
use resdeg_core::FiniteAbelianGroup;

/// Largest predicted `|Aut|` enumerated by the automorphism oracle.
const AUT_ORACLE_LIMIT: u64 = 1_000_000;
/// Largest `|A|·|G|` in the order-formula sweep.
const SPL_MAX_PRODUCT: u64 = 400;
/// Homomorphisms are enumerated outright when `|Aut(A)|` is at most this.
const SPL_ENUMERATION_CEILING: u64 = 2_000_000;
/// Bounds of the criteria-against-simulator sweep.
const SWEEP_MAX_A: u64 = 40;
const SWEEP_MAX_N: u64 = 30;
/// Covers `|Aut((Z/2)^5)| = 9 999 360`, the largest automorphism group with `|A| ≤ 40`.
const SWEEP_CEILING: u64 = 20_000_000;
const A1_MAX_PRODUCT: u64 = 400;
const DENSITY_BOUND: u64 = 1_000_000;
/// Binomial standard deviations allowed between observed and predicted densities.
const SIGMA_TOLERANCE: f64 = 3.0;

struct Outcome {
    id: u32,
    name: &'static str,
    pass: bool,
    detail: String,
    elapsed: Duration,
    budget: Duration,
}

fn run(id: u32, name: &'static str, budget_secs: u64, check: impl FnOnce() -> (bool, String)) -> Outcome {
    let start = Instant::now();
    let (pass, detail) = check();
    Outcome { id, name, pass, detail, elapsed: start.elapsed(), budget: Duration::from_secs(budget_secs) }
}

/// Mixed-radix arithmetic on `⊕ Z/n_i`, kept separate from the library's tables.
struct Naive {
    factors: Vec<u64>,
    size: usize,
}

impl Naive {
    fn new(factors: &[u64]) -> Self {
        Naive { factors: factors.to_vec(), size: factors.iter().product::<u64>() as usize }
    }

    fn coords(&self, mut x: usize) -> Vec<u64> {
        let mut c = vec![0; self.factors.len()];
        for i in (0..self.factors.len()).rev() {
            let n = self.factors[i] as usize;
            c[i] = (x % n) as u64;
            x /= n;
        }
        c
    }

    fn index(&self, c: &[u64]) -> usize {
        c.iter().zip(&self.factors).fold(0, |acc, (&x, &n)| acc * n as usize + x as usize)
    }

    fn add(&self, x: usize, y: usize) -> usize {
        let (a, b) = (self.coords(x), self.coords(y));
        let s: Vec<u64> = a.iter().zip(&b).zip(&self.factors).map(|((p, q), n)| (p + q) % n).collect();
        self.index(&s)
    }

    fn order(&self, x: usize) -> u64 {
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = self.add(y, x);
            k += 1;
        }
        k
    }

    /// Automorphisms counted as generator-image tuples `(x_1, …, x_r)` with
    /// `ord(x_i) | n_i` whose induced map is injective on each prefix.
    fn count_automorphisms(&self) -> u64 {
        let cands: Vec<Vec<usize>> = self
            .factors
            .iter()
            .map(|&n| (0..self.size).filter(|&x| n % self.order(x) == 0).collect())
            .collect();
        let mut image: Vec<usize> = vec![0];
        self.extend(&cands, 0, &mut image)
    }

    fn extend(&self, cands: &[Vec<usize>], level: usize, image: &mut Vec<usize>) -> u64 {
        if level == cands.len() {
            return 1;
        }
        let n = self.factors[level] as usize;
        let mut total = 0;
        for &x in &cands[level] {
            // New image = previous image + k·x for k < n; injective iff all distinct.
            let mut next = image.clone();
            let mut step = x;
            for _ in 1..n {
                next.extend(image.iter().map(|&y| self.add(y, step)));
                step = self.add(step, x);
            }
            let distinct: HashSet<usize> = next.iter().copied().collect();
            if distinct.len() == next.len() {
                total += self.extend(cands, level + 1, &mut next);
            }
        }
        total
    }
}

fn criterion_aut_oracle() -> (bool, String) {
    let mut checked = 0;
    let mut skipped = 0;
    let mut bad = Vec::new();
    for order in (2..=64u64).filter(|&m| factorize(m).len() == 1) {
        for g in FiniteAbelianGroup::all_of_order(order) {
            let predicted = aut_order(&g);
            if predicted > AUT_ORACLE_LIMIT.into() {
                skipped += 1;
                continue;
            }
            let counted = Naive::new(g.factors()).count_automorphisms();
            checked += 1;
            if predicted != counted.into() {
                bad.push(format!("{g:?}: formula {predicted}, enumerated {counted}"));
            }
        }
    }
    (bad.is_empty(), format!("{checked} p-groups agree, {skipped} above the limit; mismatches {bad:?}"))
}

fn criterion_involutions() -> (bool, String) {
    let mut bad = Vec::new();
    for n in (1..=1000u64).step_by(2) {
        let r = factorize(n).len() as u32;
        let brute = (1..n.max(2)).filter(|&x| gcd(x, n) == 1 && x * x % n == 1 % n && x % n != 1 % n).count() as u64;
        let got = count_order2_aut_cyclic(n).unwrap();
        if got != brute || got != (1u64 << r) - 1 {
            bad.push((n, got, brute));
        }
    }
    (bad.is_empty(), format!("500 odd moduli; mismatches {bad:?}"))
}

fn criterion_order_formula() -> (bool, String) {
    let report = sweep::spl_sweep(SPL_MAX_PRODUCT, SPL_ENUMERATION_CEILING).expect("sweep runs");
    let v = report.violations();
    let detail = format!(
        "{} pairs ({} with every homomorphism, {} by kernel reduction), {} actions, {} elements, {v} violations",
        report.pairs.len(),
        report.count(Coverage::AllHoms),
        report.count(Coverage::KernelReduction),
        report.actions(),
        report.checked(),
    );
    (v == 0, detail)
}

fn criterion_table() -> (bool, String) {
    let records = parse_records(REAL_PLUS_TABLE_CSV).unwrap();
    let rows: Vec<TableRow> = table::reproduce_table(&records).into_iter().map(Result::unwrap).collect();
    let tsv = table::to_tsv(&rows.iter().map(TableRow::summary).collect::<Vec<_>>());
    let table_ok = tsv == include_str!("golden/real_plus_table.tsv");
    let round_trip = table::parse_tsv(&tsv).unwrap() == rows.iter().map(TableRow::summary).collect::<Vec<_>>();
    let outcomes = examples::run_bundled().unwrap();
    let examples_ok = examples::to_tsv(&outcomes) == include_str!("golden/examples.tsv")
        && outcomes.iter().all(examples::ExampleOutcome::passed);
    let pass = table_ok && examples_ok && round_trip && rows.len() == 27 && outcomes.len() == 11;
    (pass, format!("{} table rows byte-exact: {table_ok}; 11 examples: {examples_ok}; round trip: {round_trip}", rows.len()))
}

fn criteria_soundness() -> (Outcome, Outcome) {
    let start = Instant::now();
    let cases = sweep::soundness_sweep(SWEEP_MAX_A, SWEEP_MAX_N, SWEEP_CEILING).expect("sweep runs");
    let elapsed = start.elapsed();
    let certified: usize = cases.iter().map(|c| c.certified.len()).sum();
    let actions: u64 = cases.iter().map(|c| c.valid_actions).sum();
    let unsound: Vec<_> = cases.iter().filter(|c| !c.unsound.is_empty()).map(|c| (&c.a, c.n, &c.unsound)).collect();
    let annihilation: Vec<_> = cases
        .iter()
        .filter(|c| !c.annihilation_failures.is_empty())
        .map(|c| (&c.a, c.n, &c.annihilation_failures))
        .collect();
    let five = Outcome {
        id: 5,
        name: "criteria never certify what the simulator refutes",
        pass: unsound.is_empty() && certified > 0,
        detail: format!(
            "{} (A, n) cells, {actions} valid actions, {certified} certified degrees; violations {unsound:?}",
            cases.len()
        ),
        elapsed,
        budget: Duration::from_secs(600),
    };
    let six = Outcome {
        id: 6,
        name: "theta_f kills degree-f classes under every valid action",
        pass: annihilation.is_empty(),
        detail: format!("every f | n in every cell checked; violations {annihilation:?}"),
        elapsed,
        budget: Duration::from_secs(600),
    };
    (five, six)
}

fn criterion_a1() -> (bool, String) {
    let cases = sweep::a1_sweep(A1_MAX_PRODUCT, resdeg_core::aut::DEFAULT_CEILING).expect("sweep runs");
    let impossible = cases.iter().filter(|c| c.impossible).count();
    let bad: Vec<_> = cases.iter().filter(|c| c.impossible && c.valid_actions > 0).map(|c| (c.n, c.m)).collect();
    (bad.is_empty() && impossible > 0, format!("{} pairs, {impossible} impossible, contradictions {bad:?}", cases.len()))
}

fn criterion_density() -> (bool, String) {
    let primes = primes_up_to(DENSITY_BOUND);
    let mut ok = true;
    let mut parts = Vec::new();
    for (ell, plus, fs) in [(7u64, false, &[1u64, 2, 3, 6][..]), (163, true, &[3][..])] {
        let ctx = CyclotomicContext::new(ell, plus).unwrap();
        let census = degree_census(&ctx, &primes).unwrap();
        let total: u64 = census.values().sum();
        // Observed fractions count_f/total sum to 1 exactly iff the counts sum
        // to the total; predicted φ(f)/n sum to 1 iff Σ_{f|n} φ(f) = n.
        let n = ctx.degree();
        let predicted_sum: u64 = resdeg_core::arith::divisors(n).iter().map(|&f| euler_phi(f)).sum();
        let exact = census.keys().all(|f| n.is_multiple_of(*f)) && predicted_sum == n && total > 0;
        ok &= exact;
        for &f in fs {
            let r = DensityReport::from_census(&ctx, &census, f);
            ok &= r.within_sigma(SIGMA_TOLERANCE);
            let tag = if plus { format!("{ell}+") } else { ell.to_string() };
            parts.push(format!("({tag}, {f}): {:.5} vs {:.5}, {:.2} sigma", r.observed, r.predicted, r.sigma_distance));
        }
    }
    (ok, parts.join("; "))
}

fn criterion_a3() -> (bool, String) {
    let rec = parse_records(CYCLOTOMIC_CSV).unwrap().into_iter().find(|r| r.ell == 23).expect("ingested datum");
    let class = match &rec.factors {
        Some(f) => ClassData::Group(FiniteAbelianGroup::new(f).unwrap()),
        None => ClassData::Number(rec.h),
    };
    let report = subfield_exponent_bound(23, 11, &class).unwrap();
    let conditions: Vec<&str> = report.transcript.iter().map(|l| l.condition.as_str()).collect();
    let complete = conditions
        == ["f divides l - 1", "gcd(f, (l-1)/f) = 1", "gcd(l - 1, h) = 1", "gcd(f, |Aut(Cl)|) = 1"]
        && report.transcript.iter().all(|l| l.holds && !l.witnesses.is_empty());
    let pass = rec.h == 3 && complete && report.conclusion == Conclusion::ExponentAtMost(2);
    (pass, format!("h = {}, conclusion {:?}, {} hypothesis lines", rec.h, report.conclusion, conditions.len()))
}

#[test]
fn acceptance() {
    let mut outcomes = vec![
        run(1, "automorphism-count formula equals enumeration", 60, criterion_aut_oracle),
        run(2, "involutions of (Z/n)^* number 2^r - 1", 5, criterion_involutions),
        run(3, "order formula in split extensions", 60, criterion_order_formula),
        run(4, "table and worked examples reproduce byte-exactly", 10, criterion_table),
    ];
    let (five, six) = criteria_soundness();
    outcomes.push(five);
    outcomes.push(six);
    outcomes.push(run(7, "impossibility agrees with an empty simulator", 60, criterion_a1));
    outcomes.push(run(8, "empirical residue-degree densities", 30, criterion_density));
    outcomes.push(run(9, "exponent bound for the degree-11 subfield of Q(zeta_23)", 1, criterion_a3));

    for o in &outcomes {
        let timing = if o.elapsed <= o.budget { "" } else { " [over time budget]" };
        println!(
            "{} criterion {}: {} ({:.1}s of {}s{timing}) - {}",
            if o.pass { "PASS" } else { "FAIL" },
            o.id,
            o.name,
            o.elapsed.as_secs_f64(),
            o.budget.as_secs(),
            o.detail
        );
    }
    let failed: Vec<u32> = outcomes.iter().filter(|o| !o.pass).map(|o| o.id).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

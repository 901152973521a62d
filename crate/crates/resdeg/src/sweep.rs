//! Exhaustive cross-checks between the closed-form criteria and the simulator.
//!
//! Each sweep is a pure function of its bounds and returns a report; the
//! acceptance suite and the `sweep` subcommand only format the reports.

use std::collections::BTreeMap;
use std::ops::ControlFlow;
use std::sync::Arc;

use rayon::prelude::*;
use resdeg_core::arith::{divisors, gcd, prime_factors};
use resdeg_core::aut::{
    aut_order, for_each_automorphism_indexed, universal_kernel_from_spectrum, Automorphism, IndexedAut,
};
use resdeg_core::consequences::{a1_impossible, Conclusion, IndexedTheta};
use resdeg_core::criteria::{
    check_cmain, check_main_with, check_pvaluation, ClassData, FieldDescriptor, RCertificate,
};
use resdeg_core::group::{describe, IndexedGroup};
use resdeg_core::sim::{cyclic_norm_is_zero, for_each_action, valid_actions, ActionFilter, SplitExtension};
use resdeg_core::{FiniteAbelianGroup, Result};
use serde::Serialize;

/// How the homomorphisms `G → Aut(A)` of one pair were covered.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Coverage {
    /// Every homomorphism was built and checked.
    AllHoms,
    /// `Aut(A)` exceeds the enumeration ceiling. The order of `(a, g)` with
    /// `ψ(g) = id` only involves `ψ` on `<g>`, where it is trivial, so the
    /// trivial action already presents every such element; it is checked
    /// together with every homomorphism into the scalar automorphisms.
    KernelReduction,
}

#[derive(Clone, Debug, Serialize)]
pub struct SplPair {
    pub a: String,
    pub g: String,
    pub coverage: Coverage,
    pub actions: u64,
    /// Elements `(a, g)` with `ψ(g) = id` whose order was compared, summed over actions.
    pub checked: u64,
    pub violations: u64,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SplReport {
    pub pairs: Vec<SplPair>,
}

impl SplReport {
    pub fn violations(&self) -> u64 {
        self.pairs.iter().map(|p| p.violations).sum()
    }

    pub fn actions(&self) -> u64 {
        self.pairs.iter().map(|p| p.actions).sum()
    }

    pub fn checked(&self) -> u64 {
        self.pairs.iter().map(|p| p.checked).sum()
    }

    pub fn count(&self, coverage: Coverage) -> usize {
        self.pairs.iter().filter(|p| p.coverage == coverage).count()
    }
}

/// All pairs of abelian groups `(A, G)` with `|A|·|G| ≤ max_product`.
pub fn group_pairs(max_product: u64) -> Vec<(FiniteAbelianGroup, FiniteAbelianGroup)> {
    let mut out = Vec::new();
    for ma in 1..=max_product {
        let as_ = FiniteAbelianGroup::all_of_order(ma);
        for mg in 1..=max_product / ma {
            for g in FiniteAbelianGroup::all_of_order(mg) {
                out.extend(as_.iter().map(|a| (a.clone(), g.clone())));
            }
        }
    }
    out
}

fn spl_tally(ext: &SplitExtension, pair: &mut SplPair) {
    pair.actions += 1;
    let kernel = (0..ext.g().size() as u32).filter(|&g| ext.acts_trivially(g)).count();
    pair.checked += (kernel * ext.a().size()) as u64;
    pair.violations += ext.order_formula_violations().len() as u64;
}

/// Order-formula check for one pair, every homomorphism when `Aut(A)` fits
/// under `ceiling`.
pub fn spl_pair(a: &FiniteAbelianGroup, g: &FiniteAbelianGroup, ceiling: u64) -> Result<SplPair> {
    let mut pair = SplPair {
        a: describe(a),
        g: describe(g),
        coverage: Coverage::AllHoms,
        actions: 0,
        checked: 0,
        violations: 0,
    };
    if g.is_trivial() {
        // One homomorphism, whatever the size of Aut(A).
        let ext = SplitExtension::from_indexed(Arc::new(IndexedGroup::new(a)?), Arc::new(IndexedGroup::new(g)?), &[])?;
        spl_tally(&ext, &mut pair);
        return Ok(pair);
    }
    if aut_order(a) <= ceiling.into() {
        for_each_action(a, g, ActionFilter::All, ceiling, |ext| {
            spl_tally(ext, &mut pair);
            ControlFlow::Continue(())
        })?;
        return Ok(pair);
    }
    pair.coverage = Coverage::KernelReduction;
    let ia = Arc::new(IndexedGroup::new(a)?);
    let ig = Arc::new(IndexedGroup::new(g)?);
    let e = a.exponent();
    let per_gen: Vec<Vec<IndexedAut>> = g
        .factors()
        .iter()
        .map(|&n| {
            (1..e.max(2))
                .filter(|&u| gcd(u, e) == 1 && pow_mod_is_one(u, n, e))
                .map(|u| IndexedAut::from_automorphism(&ia, &Automorphism::scalar(a, u)))
                .collect()
        })
        .collect();
    // Scalars commute, so every tuple of admissible scalars is a homomorphism;
    // the all-ones tuple is the trivial action.
    let mut tuple = Vec::with_capacity(per_gen.len());
    scalar_tuples(&per_gen, &mut tuple, &mut |gens| {
        let ext = SplitExtension::from_indexed(ia.clone(), ig.clone(), gens)?;
        spl_tally(&ext, &mut pair);
        Ok(())
    })?;
    Ok(pair)
}

fn pow_mod_is_one(u: u64, n: u64, m: u64) -> bool {
    m == 1 || resdeg_core::arith::pow_mod(u, n, m) == 1
}

fn scalar_tuples<F>(per_gen: &[Vec<IndexedAut>], tuple: &mut Vec<IndexedAut>, emit: &mut F) -> Result<()>
where
    F: FnMut(&[IndexedAut]) -> Result<()>,
{
    if tuple.len() == per_gen.len() {
        return emit(tuple);
    }
    for alpha in &per_gen[tuple.len()] {
        tuple.push(alpha.clone());
        scalar_tuples(per_gen, tuple, emit)?;
        tuple.pop();
    }
    Ok(())
}

/// The order-formula sweep over all pairs with `|A|·|G| ≤ max_product`.
pub fn spl_sweep(max_product: u64, ceiling: u64) -> Result<SplReport> {
    let pairs: Result<Vec<SplPair>> =
        group_pairs(max_product).par_iter().map(|(a, g)| spl_pair(a, g, ceiling)).collect();
    Ok(SplReport { pairs: pairs? })
}

/// One `(A, Z/n)` cell of the soundness sweep.
#[derive(Clone, Debug, Serialize)]
pub struct SoundnessCase {
    pub a: String,
    pub n: u64,
    pub valid_actions: u64,
    /// Degrees certified by the Main, CMain and p-valuation checkers.
    pub certified: Vec<u64>,
    /// `f | n` generated by degree-`f` classes under every valid action.
    pub simulated: Vec<u64>,
    /// Certified degrees the simulator refutes.
    pub unsound: Vec<u64>,
    /// `f | n` where `θ_f` fails to kill the degree-`f` classes of some valid action.
    pub annihilation_failures: Vec<u64>,
}

struct Cell {
    n: u64,
    g: Arc<IndexedGroup>,
    fs: Vec<u64>,
    thetas: Vec<IndexedTheta>,
    generated: Vec<bool>,
    killed: Vec<bool>,
    valid: u64,
}

/// Streams `Aut(A)` once and evaluates every valid action of every `Z/n`,
/// `n ≤ max_n`, `gcd(n, |A|) = 1`, on `A`.
pub fn soundness_for(a: &FiniteAbelianGroup, max_n: u64, ceiling: u64) -> Result<Vec<SoundnessCase>> {
    let predicted = aut_order(a);
    if predicted > ceiling.into() {
        return Err(resdeg_core::Error::TooLarge { predicted, ceiling });
    }
    let ia = Arc::new(IndexedGroup::new(a)?);
    let mut cells = Vec::new();
    for n in (1..=max_n).filter(|&n| gcd(n, a.order()) == 1) {
        let g = Arc::new(IndexedGroup::new(&FiniteAbelianGroup::cyclic(n))?);
        let fs = divisors(n);
        let thetas = fs.iter().map(|&f| IndexedTheta::new(&g, f)).collect::<Result<Vec<_>>>()?;
        let k = fs.len();
        cells.push(Cell { n, g, fs, thetas, generated: vec![true; k], killed: vec![true; k], valid: 0 });
    }
    let mut spectrum: BTreeMap<u64, u64> = BTreeMap::new();
    let mut failure = None;
    let _ = for_each_automorphism_indexed(&ia, |imgs| {
        let alpha = IndexedAut::from_images(&ia, imgs);
        let k = alpha.order();
        *spectrum.entry(k).or_insert(0) += 1;
        for cell in cells.iter_mut().filter(|c| c.n % k == 0) {
            if !cyclic_norm_is_zero(&ia, &alpha, cell.n) {
                continue;
            }
            let gens = if cell.n == 1 { &[][..] } else { std::slice::from_ref(&alpha) };
            let ext = match SplitExtension::from_indexed(ia.clone(), cell.g.clone(), gens) {
                Ok(ext) => ext,
                Err(e) => {
                    failure = Some(e);
                    return ControlFlow::Break(());
                }
            };
            cell.valid += 1;
            for (i, &f) in cell.fs.iter().enumerate() {
                if cell.generated[i] && !ext.generated_by_degree(f) {
                    cell.generated[i] = false;
                }
                if cell.killed[i] && !cell.thetas[i].kills_degree_f_classes(&ext) {
                    cell.killed[i] = false;
                }
            }
        }
        ControlFlow::Continue(())
    });
    if let Some(e) = failure {
        return Err(e);
    }
    cells
        .into_iter()
        .map(|cell| {
            let field = FieldDescriptor::cyclic(
                format!("Z/{} on {}", cell.n, describe(a)),
                cell.n,
                ClassData::Group(a.clone()),
            )?;
            let certified = certified_degrees(&field, &spectrum)?;
            let pick = |flags: &[bool], want: bool| -> Vec<u64> {
                cell.fs.iter().zip(flags).filter(|(_, &b)| b == want).map(|(&f, _)| f).collect()
            };
            let simulated = pick(&cell.generated, true);
            let unsound = certified.iter().copied().filter(|f| !simulated.contains(f)).collect();
            Ok(SoundnessCase {
                a: describe(a),
                n: cell.n,
                valid_actions: cell.valid,
                certified,
                simulated,
                unsound,
                annihilation_failures: pick(&cell.killed, false),
            })
        })
        .collect()
}

/// Union of everything Main, CMain (tried at every `f | n`) and p-valuation certify.
pub fn certified_degrees(field: &FieldDescriptor, spectrum: &BTreeMap<u64, u64>) -> Result<Vec<u64>> {
    let n = field.degree;
    let mut certs: Vec<RCertificate> = Vec::new();
    for f in divisors(n) {
        certs.push(check_main_with(field, f, |_| Ok(universal_kernel_from_spectrum(n, spectrum)))?);
        certs.push(check_cmain(field, f)?);
    }
    for p in prime_factors(n) {
        certs.push(check_pvaluation(field, p)?);
    }
    Ok(resdeg_core::criteria::union_of(&certs))
}

/// The soundness and annihilation sweep over `|A| ≤ max_a`, `n ≤ max_n`.
pub fn soundness_sweep(max_a: u64, max_n: u64, ceiling: u64) -> Result<Vec<SoundnessCase>> {
    let groups: Vec<FiniteAbelianGroup> = (1..=max_a).flat_map(FiniteAbelianGroup::all_of_order).collect();
    let per_group: Result<Vec<Vec<SoundnessCase>>> =
        groups.par_iter().map(|a| soundness_for(a, max_n, ceiling)).collect();
    Ok(per_group?.into_iter().flatten().collect())
}

#[derive(Clone, Debug, Serialize)]
pub struct A1Case {
    pub n: u64,
    pub m: u64,
    pub impossible: bool,
    pub valid_actions: usize,
}

/// Every `(n, m)` with `n, m ≥ 2` and `n·m ≤ max_product`: does the
/// closed-form impossibility agree with an empty simulator?
pub fn a1_sweep(max_product: u64, ceiling: u64) -> Result<Vec<A1Case>> {
    let cells: Vec<(u64, u64)> =
        (2..=max_product / 2).flat_map(|n| (2..=max_product / n).map(move |m| (n, m))).collect();
    cells
        .par_iter()
        .map(|&(n, m)| {
            let impossible = a1_impossible(n, m)?.conclusion == Conclusion::Impossible;
            let valid = valid_actions(&FiniteAbelianGroup::cyclic(m), &FiniteAbelianGroup::cyclic(n), ceiling)?.len();
            Ok(A1Case { n, m, impossible, valid_actions: valid })
        })
        .collect()
}

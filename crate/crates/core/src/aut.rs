//! Automorphism groups of finite abelian groups.
//!
//! The order of `Aut(G)` comes from the closed-form count for abelian
//! `p`-groups, multiplied over the primary decomposition. An independent
//! enumerator lists the automorphisms themselves (as images of the standard
//! generators) and serves as the oracle for the formula.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::arith::{carmichael, factorize, gcd, is_prime, lcm, omega, pow_mod};
use crate::group::{span_structure, FiniteAbelianGroup, GroupElement, IndexedGroup};
use crate::{Error, Result};

/// Default bound on the number of automorphisms materialized in a list.
pub const DEFAULT_CEILING: u64 = 1_000_000;

/// An automorphism, stored as the images of the standard generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Automorphism {
    images: Vec<GroupElement>,
}

impl Automorphism {
    pub fn identity(g: &FiniteAbelianGroup) -> Self {
        Automorphism { images: g.generators() }
    }

    /// Builds the endomorphism with the given generator images, checking that
    /// it is well defined and bijective.
    pub fn from_images(g: &FiniteAbelianGroup, images: Vec<GroupElement>) -> Result<Self> {
        if images.len() != g.rank() || !images.iter().all(|x| g.contains(x)) {
            return Err(Error::NotAnElement("generator images must lie in the group".into()));
        }
        for (x, &n) in images.iter().zip(g.factors()) {
            if n % g.element_order(x) != 0 {
                return Err(Error::InvalidAction(alloc::format!(
                    "image {x} has order not dividing {n}"
                )));
            }
        }
        if span_structure(g, &images).order() != g.order() {
            return Err(Error::InvalidAction("generator images do not span the group".into()));
        }
        Ok(Automorphism { images })
    }

    /// Multiplication by a unit `u`, an automorphism of any abelian group of
    /// exponent prime to `u`.
    pub fn scalar(g: &FiniteAbelianGroup, u: u64) -> Self {
        Automorphism {
            images: g.generators().iter().map(|x| g.scale(u as i64, x)).collect(),
        }
    }

    pub fn images(&self) -> &[GroupElement] {
        &self.images
    }

    pub fn apply(&self, g: &FiniteAbelianGroup, x: &GroupElement) -> GroupElement {
        let mut acc = g.identity();
        for (&c, img) in x.coords().iter().zip(&self.images) {
            if c != 0 {
                acc = g.add(&acc, &g.scale(c as i64, img));
            }
        }
        acc
    }

    /// `self ∘ other`.
    pub fn compose(&self, g: &FiniteAbelianGroup, other: &Automorphism) -> Automorphism {
        Automorphism {
            images: other.images.iter().map(|x| self.apply(g, x)).collect(),
        }
    }

    pub fn pow(&self, g: &FiniteAbelianGroup, mut k: u64) -> Automorphism {
        let mut acc = Automorphism::identity(g);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.compose(g, &base);
            }
            base = base.compose(g, &base);
            k >>= 1;
        }
        acc
    }

    pub fn is_identity(&self, g: &FiniteAbelianGroup) -> bool {
        self.images == g.generators()
    }

    pub fn order(&self, g: &FiniteAbelianGroup) -> u64 {
        let mut k = 1;
        let mut cur = self.clone();
        while !cur.is_identity(g) {
            cur = cur.compose(g, self);
            k += 1;
        }
        k
    }

    /// The automorphism as a permutation of element indices.
    pub fn permutation(&self, g: &FiniteAbelianGroup) -> Vec<u32> {
        g.elements().map(|x| g.index_of(&self.apply(g, &x)) as u32).collect()
    }
}

#[derive(Clone, Debug)]
pub struct AutDescriptor {
    pub group: FiniteAbelianGroup,
    pub order: BigUint,
    pub automorphisms: Option<Vec<Automorphism>>,
}

impl AutDescriptor {
    /// Closed-form order, plus the enumerated list when it fits under `ceiling`.
    pub fn new(group: &FiniteAbelianGroup, ceiling: u64) -> Self {
        let automorphisms = enumerate_automorphisms(group, ceiling).ok();
        AutDescriptor { group: group.clone(), order: aut_order(group), automorphisms }
    }
}

/// `|Aut(Z/p^{e_1} ⊕ … ⊕ Z/p^{e_t})|` by the closed-form count.
pub fn aut_order_p_group(p: u64, exponents: &[u32]) -> Result<BigUint> {
    if !is_prime(p) {
        return Err(Error::InvalidPrime(p));
    }
    let mut e: Vec<u32> = exponents.iter().copied().filter(|&x| x > 0).collect();
    e.sort_unstable();
    let t = e.len();
    let pb = BigUint::from(p);
    let mut total = BigUint::one();
    for i in 1..=t {
        let ei = e[i - 1];
        // d_i, c_i: last and first (1-based) positions carrying the exponent e_i.
        let d = (1..=t).filter(|&j| e[j - 1] == ei).max().expect("i itself");
        let c = (1..=t).filter(|&j| e[j - 1] == ei).min().expect("i itself");
        total *= pb.pow(d as u32) - pb.pow(i as u32 - 1);
        total *= pb.pow(ei * (t - d) as u32);
        total *= pb.pow((ei - 1) * (t - c + 1) as u32);
    }
    Ok(total)
}

/// `|Aut(G)|` as the product over primary components.
pub fn aut_order(g: &FiniteAbelianGroup) -> BigUint {
    g.primary_decomposition()
        .iter()
        .map(|(&p, exps)| aut_order_p_group(p, exps).expect("primes from factorization"))
        .product()
}

/// Cyclic factors `q^{e-1}(q-1)` of `Aut(Z/n)` for odd `n`, ascending.
pub fn aut_cyclic_structure(n: u64) -> Result<Vec<u64>> {
    if n == 0 || n.is_multiple_of(2) {
        return Err(Error::Unsupported(alloc::format!("aut_cyclic_structure needs odd n, got {n}")));
    }
    let mut out: Vec<u64> = factorize(n).into_iter().map(|(q, e)| q.pow(e - 1) * (q - 1)).collect();
    out.sort_unstable();
    Ok(out)
}

/// Number of involutions of `Aut(Z/n)`, `n` odd: `2^r - 1` with `r` the
/// number of distinct prime factors.
pub fn count_order2_aut_cyclic(n: u64) -> Result<u64> {
    if n == 0 || n.is_multiple_of(2) {
        return Err(Error::Unsupported(alloc::format!("count_order2_aut_cyclic needs odd n, got {n}")));
    }
    Ok((1u64 << omega(n)) - 1)
}

/// Visits every automorphism of `g`. Cyclic groups are handled in closed form
/// (multiplication by units); otherwise generator images are chosen one at a
/// time and a partial choice is abandoned as soon as the images chosen so far
/// fail to span a subgroup of the expected order.
pub fn for_each_automorphism<F>(g: &FiniteAbelianGroup, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(&Automorphism) -> ControlFlow<()>,
{
    if g.rank() == 0 {
        return visit(&Automorphism::identity(g));
    }
    if g.rank() == 1 {
        let n = g.order();
        for u in 1..n {
            if gcd(u, n) == 1 {
                visit(&Automorphism::scalar(g, u))?;
            }
        }
        return ControlFlow::Continue(());
    }
    if let Ok(ig) = IndexedGroup::new(g) {
        return for_each_automorphism_indexed(&ig, |imgs| {
            visit(&Automorphism {
                images: imgs.iter().map(|&i| ig.element(i)).collect(),
            })
        });
    }
    let candidates: Vec<Vec<GroupElement>> = g.factors().iter().map(|&n| g.torsion_elements(n)).collect();
    let mut chosen: Vec<GroupElement> = Vec::with_capacity(g.rank());
    generic_search(g, &candidates, &mut chosen, &mut visit)
}

fn generic_search<F>(
    g: &FiniteAbelianGroup,
    candidates: &[Vec<GroupElement>],
    chosen: &mut Vec<GroupElement>,
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&Automorphism) -> ControlFlow<()>,
{
    let i = chosen.len();
    if i == g.rank() {
        return visit(&Automorphism { images: chosen.clone() });
    }
    let target: u64 = g.factors()[..=i].iter().product();
    for x in &candidates[i] {
        chosen.push(x.clone());
        if span_structure(g, chosen).order() == target {
            generic_search(g, candidates, chosen, visit)?;
        }
        chosen.pop();
    }
    ControlFlow::Continue(())
}

/// Index-level automorphism enumeration: `visit` receives the element
/// indices of the images of the standard generators.
pub fn for_each_automorphism_indexed<F>(ig: &IndexedGroup, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(&[u32]) -> ControlFlow<()>,
{
    let g = ig.group();
    let candidates: Vec<Vec<u32>> = g
        .factors()
        .iter()
        .map(|&n| (0..ig.size() as u32).filter(|&x| n % ig.order_of(x) == 0).collect())
        .collect();
    let mut search = SpanSearch {
        ig,
        spans: vec![vec![0]],
        marks: vec![0; ig.size()],
        stamp: 0,
        chosen: Vec::with_capacity(g.rank()),
    };
    search.run(&candidates, &mut visit)
}

struct SpanSearch<'a> {
    ig: &'a IndexedGroup,
    spans: Vec<Vec<u32>>,
    marks: Vec<u32>,
    stamp: u32,
    chosen: Vec<u32>,
}

impl SpanSearch<'_> {
    fn run<F>(&mut self, candidates: &[Vec<u32>], visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[u32]) -> ControlFlow<()>,
    {
        let level = self.chosen.len();
        if level == candidates.len() {
            return visit(&self.chosen);
        }
        let n = self.ig.group().factors()[level];
        for &x in &candidates[level] {
            // The new image must enlarge the span by exactly a factor n.
            let Some(next) = self.extend(level, x, n) else {
                continue;
            };
            self.spans.truncate(level + 1);
            self.spans.push(next);
            self.chosen.push(x);
            let flow = self.run(candidates, visit);
            self.chosen.pop();
            flow?;
        }
        ControlFlow::Continue(())
    }

    fn extend(&mut self, level: usize, x: u32, n: u64) -> Option<Vec<u32>> {
        if self.ig.order_of(x) != n {
            return None;
        }
        self.stamp += 1;
        let stamp = self.stamp;
        let base = &self.spans[level];
        for &i in base {
            self.marks[i as usize] = stamp;
        }
        let mut out = Vec::with_capacity(base.len() * n as usize);
        out.extend_from_slice(base);
        let mut step = x;
        for _ in 1..n {
            if self.marks[step as usize] == stamp {
                // <x> meets the previous span nontrivially.
                return None;
            }
            out.extend(base.iter().map(|&b| self.ig.add(b, step)));
            step = self.ig.add(step, x);
        }
        Some(out)
    }
}

/// An automorphism of a tabulated group, as a permutation of element indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IndexedAut {
    perm: Vec<u32>,
}

impl IndexedAut {
    pub fn identity(ig: &IndexedGroup) -> Self {
        IndexedAut { perm: (0..ig.size() as u32).collect() }
    }

    /// Extends generator images additively to the whole group.
    pub fn from_images(ig: &IndexedGroup, images: &[u32]) -> Self {
        let strides = ig.strides();
        let mut perm = vec![0u32; ig.size()];
        for k in 1..ig.size() {
            // Peel off the least significant nonzero coordinate.
            let i = (0..strides.len())
                .rev()
                .find(|&i| !(k as u32 / strides[i]).is_multiple_of(ig.group().factors()[i] as u32))
                .expect("k > 0 has a nonzero coordinate");
            perm[k] = ig.add(perm[k - strides[i] as usize], images[i]);
        }
        IndexedAut { perm }
    }

    pub fn from_automorphism(ig: &IndexedGroup, a: &Automorphism) -> Self {
        let imgs: Vec<u32> = a.images().iter().map(|x| ig.index(x)).collect();
        Self::from_images(ig, &imgs)
    }

    pub fn to_automorphism(&self, ig: &IndexedGroup) -> Automorphism {
        Automorphism {
            images: ig.generators().iter().map(|&e| ig.element(self.perm[e as usize])).collect(),
        }
    }

    #[inline]
    pub fn apply(&self, i: u32) -> u32 {
        self.perm[i as usize]
    }

    pub fn permutation(&self) -> &[u32] {
        &self.perm
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &IndexedAut) -> IndexedAut {
        IndexedAut { perm: other.perm.iter().map(|&i| self.perm[i as usize]).collect() }
    }

    pub fn pow(&self, mut k: u64) -> IndexedAut {
        let mut acc: Vec<u32> = (0..self.perm.len() as u32).collect();
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.iter().map(|&i| base.perm[i as usize]).collect();
            }
            base = base.compose(&base);
            k >>= 1;
        }
        IndexedAut { perm: acc }
    }

    /// Do `self` and `other` commute? Checking the generators `gens` suffices.
    pub fn commutes_with(&self, other: &IndexedAut, gens: &[u32]) -> bool {
        gens.iter().all(|&e| self.apply(other.apply(e)) == other.apply(self.apply(e)))
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    /// Order as the lcm of cycle lengths.
    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.perm.len()];
        let mut acc = 1;
        for start in 0..self.perm.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.perm[i] as usize;
                len += 1;
            }
            acc = lcm(acc, len);
        }
        acc
    }
}

/// Complete list of automorphisms; refuses when `|Aut(g)|` exceeds `ceiling`.
pub fn enumerate_automorphisms(g: &FiniteAbelianGroup, ceiling: u64) -> Result<Vec<Automorphism>> {
    let predicted = aut_order(g);
    if predicted > BigUint::from(ceiling) {
        return Err(Error::TooLarge { predicted, ceiling });
    }
    let mut out = Vec::with_capacity(predicted.to_usize().unwrap_or(0));
    let _ = for_each_automorphism(g, |a| {
        out.push(a.clone());
        ControlFlow::Continue(())
    });
    Ok(out)
}

/// Automorphisms `α` with `α^n = id`, i.e. the possible images of a generator
/// of a cyclic group of order `n`. Scans the whole group, so `|Aut(g)|` must
/// stay under `ceiling`.
pub fn automorphisms_with_order_dividing(g: &FiniteAbelianGroup, n: u64, ceiling: u64) -> Result<Vec<Automorphism>> {
    let predicted = aut_order(g);
    if predicted > BigUint::from(ceiling) {
        return Err(Error::TooLarge { predicted, ceiling });
    }
    if g.is_trivial() {
        return Ok(vec![Automorphism::identity(g)]);
    }
    let mut out = Vec::new();
    if g.is_cyclic() {
        let m = g.order();
        for u in 1..m {
            if gcd(u, m) == 1 && pow_mod(u, n, m) == 1 {
                out.push(Automorphism::scalar(g, u));
            }
        }
        return Ok(out);
    }
    let _ = for_each_automorphism(g, |a| {
        if a.pow(g, n).is_identity(g) {
            out.push(a.clone());
        }
        ControlFlow::Continue(())
    });
    Ok(out)
}

/// Number of automorphisms of each order.
pub fn order_spectrum(g: &FiniteAbelianGroup, ceiling: u64) -> Result<BTreeMap<u64, u64>> {
    let predicted = aut_order(g);
    if predicted > BigUint::from(ceiling) {
        return Err(Error::TooLarge { predicted, ceiling });
    }
    let mut out = BTreeMap::new();
    if g.is_cyclic() {
        let m = g.order();
        if m == 1 {
            out.insert(1, 1);
            return Ok(out);
        }
        for u in 1..m {
            if gcd(u, m) == 1 {
                let k = crate::arith::multiplicative_order(u, m).expect("unit");
                *out.entry(k).or_insert(0) += 1;
            }
        }
        return Ok(out);
    }
    let _ = for_each_automorphism(g, |a| {
        *out.entry(a.order(g)).or_insert(0) += 1;
        ControlFlow::Continue(())
    });
    Ok(out)
}

/// Largest `f | n` such that `g^{n/f}` (for `g` generating a cyclic group of
/// order `n`) is sent to the identity by every homomorphism into `Aut(a)`.
///
/// Equals `n / L` with `L` the lcm of automorphism orders dividing `n`. For
/// cyclic `a` the automorphism group is abelian of exponent `λ(|a|)`, so
/// `L = gcd(n, λ(|a|))`.
pub fn universal_kernel_order(n: u64, a: &FiniteAbelianGroup, ceiling: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidArgument("group order must be positive".into()));
    }
    if a.is_cyclic() {
        return Ok(n / gcd(n, carmichael(a.order())));
    }
    let predicted = aut_order(a);
    if predicted > BigUint::from(ceiling) {
        return Err(Error::TooLarge { predicted, ceiling });
    }
    let mut l = 1u64;
    let _ = for_each_automorphism(a, |alpha| {
        if alpha.pow(a, n).is_identity(a) {
            l = lcm(l, alpha.order(a));
        }
        ControlFlow::Continue(())
    });
    Ok(n / l)
}

/// `n / L` with `L` the lcm of the orders in `spectrum` that divide `n`.
pub fn universal_kernel_from_spectrum(n: u64, spectrum: &BTreeMap<u64, u64>) -> u64 {
    let l = spectrum.keys().filter(|&&k| n.is_multiple_of(k)).fold(1, |acc, &k| lcm(acc, k));
    n / l
}

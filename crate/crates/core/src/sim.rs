//! Finite-group model of the Galois group of a Hilbert class field.
//!
//! For a cyclic (more generally abelian) extension `K/Q` with class group `A`
//! and Galois group `G`, the Galois group of the Hilbert class field over `Q`
//! is a split extension `A ⋊_ψ G`. A Frobenius element `τ = (a, g)` describes a
//! prime of `K` with residue degree `ord(g)` whose ideal class is the `A`-part
//! of `τ^{ord(g)}`. Everything here works on that shadow: no number-field
//! arithmetic is involved.
//!
//! An action `ψ` is called *valid* when the norm element `Σ_{x ∈ G} ψ(x)`
//! kills `A`. Every class group of a field with trivial base class group must
//! satisfy this (the norm of a degree-one prime is principal), so the
//! simulator only quantifies over valid actions when modelling fields.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::ControlFlow;

use num_bigint::BigUint;

use crate::arith::{gcd, lcm};
use crate::aut::{aut_order, for_each_automorphism_indexed, Automorphism, IndexedAut};
use crate::group::{FiniteAbelianGroup, GroupElement, IndexedGroup, Subgroup};
use crate::{Error, Result};

/// A homomorphism `ψ : G → Aut(A)` given by the images of the standard
/// generators of `G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionHom {
    domain: FiniteAbelianGroup,
    codomain: FiniteAbelianGroup,
    images: Vec<Automorphism>,
}

impl ActionHom {
    pub fn new(domain: &FiniteAbelianGroup, codomain: &FiniteAbelianGroup, images: Vec<Automorphism>) -> Result<Self> {
        if images.len() != domain.rank() {
            return Err(Error::InvalidAction(alloc::format!(
                "expected {} generator images, got {}",
                domain.rank(),
                images.len()
            )));
        }
        for (alpha, &n) in images.iter().zip(domain.factors()) {
            if alpha.images().len() != codomain.rank() {
                return Err(Error::InvalidAction("image is not an automorphism of the codomain".into()));
            }
            if !alpha.pow(codomain, n).is_identity(codomain) {
                return Err(Error::InvalidAction(alloc::format!(
                    "generator of order {n} sent to an automorphism of order {}",
                    alpha.order(codomain)
                )));
            }
        }
        for (i, x) in images.iter().enumerate() {
            for y in &images[i + 1..] {
                if x.compose(codomain, y) != y.compose(codomain, x) {
                    return Err(Error::InvalidAction("generator images do not commute".into()));
                }
            }
        }
        Ok(ActionHom { domain: domain.clone(), codomain: codomain.clone(), images })
    }

    pub fn trivial(domain: &FiniteAbelianGroup, codomain: &FiniteAbelianGroup) -> Self {
        ActionHom {
            domain: domain.clone(),
            codomain: codomain.clone(),
            images: vec![Automorphism::identity(codomain); domain.rank()],
        }
    }

    /// Cyclic `G = Z/n` acting on `A` with the generator acting as multiplication by `u`.
    pub fn cyclic_scalar(n: u64, codomain: &FiniteAbelianGroup, u: u64) -> Result<Self> {
        let g = FiniteAbelianGroup::cyclic(n);
        let images = if g.is_trivial() { Vec::new() } else { vec![Automorphism::scalar(codomain, u)] };
        Self::new(&g, codomain, images)
    }

    pub fn domain(&self) -> &FiniteAbelianGroup {
        &self.domain
    }

    pub fn codomain(&self) -> &FiniteAbelianGroup {
        &self.codomain
    }

    pub fn images(&self) -> &[Automorphism] {
        &self.images
    }

    pub fn image_of(&self, x: &GroupElement) -> Automorphism {
        let a = &self.codomain;
        x.coords()
            .iter()
            .zip(&self.images)
            .fold(Automorphism::identity(a), |acc, (&c, alpha)| acc.compose(a, &alpha.pow(a, c)))
    }

    /// Does the norm element `Σ_{x ∈ G} ψ(x)` annihilate `A`?
    pub fn is_valid(&self) -> bool {
        let a = &self.codomain;
        let auts: Vec<Automorphism> = self.domain.elements().map(|x| self.image_of(&x)).collect();
        a.generators().iter().all(|e| {
            auts.iter().fold(a.identity(), |acc, alpha| a.add(&acc, &alpha.apply(a, e))) == a.identity()
        })
    }
}

/// Element `(a, g)` of a split extension, by element indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SdpElement {
    pub a: u32,
    pub g: u32,
}

/// `A ⋊_ψ G` with product `(a₁, g₁)(a₂, g₂) = (a₁ + ψ(g₁)(a₂), g₁g₂)`.
#[derive(Clone, Debug)]
pub struct SplitExtension {
    a: Arc<IndexedGroup>,
    g: Arc<IndexedGroup>,
    act: Vec<IndexedAut>,
}

impl SplitExtension {
    pub fn new(psi: &ActionHom) -> Result<Self> {
        let a = Arc::new(IndexedGroup::new(psi.codomain())?);
        let g = Arc::new(IndexedGroup::new(psi.domain())?);
        let gens: Vec<IndexedAut> = psi.images().iter().map(|x| IndexedAut::from_automorphism(&a, x)).collect();
        let act = action_table(&a, &g, &gens);
        Ok(SplitExtension { a, g, act })
    }

    /// Builds the extension from tabulated groups and generator images,
    /// validating orders and commutation.
    pub fn from_indexed(a: Arc<IndexedGroup>, g: Arc<IndexedGroup>, gens: &[IndexedAut]) -> Result<Self> {
        if gens.len() != g.group().rank() {
            return Err(Error::InvalidAction(alloc::format!("expected {} generator images", g.group().rank())));
        }
        for (alpha, &n) in gens.iter().zip(g.group().factors()) {
            if alpha.permutation().len() != a.size() || n % alpha.order() != 0 {
                return Err(Error::InvalidAction("generator image has the wrong order".into()));
            }
        }
        let agens = a.generators();
        for (i, x) in gens.iter().enumerate() {
            if !gens[i + 1..].iter().all(|y| x.commutes_with(y, &agens)) {
                return Err(Error::InvalidAction("generator images do not commute".into()));
            }
        }
        let act = action_table(&a, &g, gens);
        Ok(SplitExtension { a, g, act })
    }

    pub fn a(&self) -> &IndexedGroup {
        &self.a
    }

    pub fn g(&self) -> &IndexedGroup {
        &self.g
    }

    pub fn order(&self) -> u64 {
        (self.a.size() * self.g.size()) as u64
    }

    pub fn action(&self, g: u32) -> &IndexedAut {
        &self.act[g as usize]
    }

    pub fn action_hom(&self) -> ActionHom {
        ActionHom {
            domain: self.g.group().clone(),
            codomain: self.a.group().clone(),
            images: self
                .g
                .generators()
                .iter()
                .map(|&e| self.act[e as usize].to_automorphism(&self.a))
                .collect(),
        }
    }

    pub fn element(&self, a: &GroupElement, g: &GroupElement) -> SdpElement {
        SdpElement { a: self.a.index(a), g: self.g.index(g) }
    }

    pub fn a_part(&self, x: SdpElement) -> GroupElement {
        self.a.element(x.a)
    }

    pub fn elements(&self) -> impl Iterator<Item = SdpElement> + '_ {
        (0..self.g.size() as u32).flat_map(move |g| (0..self.a.size() as u32).map(move |a| SdpElement { a, g }))
    }

    /// Position of `x` in [`SplitExtension::elements`] order.
    pub fn index(&self, x: SdpElement) -> u32 {
        x.g * self.a.size() as u32 + x.a
    }

    pub fn identity(&self) -> SdpElement {
        SdpElement { a: 0, g: 0 }
    }

    pub fn mul(&self, x: SdpElement, y: SdpElement) -> SdpElement {
        SdpElement {
            a: self.a.add(x.a, self.act[x.g as usize].apply(y.a)),
            g: self.g.add(x.g, y.g),
        }
    }

    pub fn inv(&self, x: SdpElement) -> SdpElement {
        // (a, g)^{-1} = (-ψ(g^{-1})(a), g^{-1})
        let gi = self.g.neg(x.g);
        SdpElement { a: self.a.neg(self.act[gi as usize].apply(x.a)), g: gi }
    }

    pub fn pow(&self, x: SdpElement, mut k: u64) -> SdpElement {
        let mut acc = self.identity();
        let mut base = x;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// Exact order, by repeated multiplication.
    pub fn element_order(&self, x: SdpElement) -> u64 {
        let mut k = 1;
        let mut cur = x;
        while cur != self.identity() {
            cur = self.mul(cur, x);
            k += 1;
        }
        k
    }

    pub fn acts_trivially(&self, g: u32) -> bool {
        self.act[g as usize].is_identity()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.g.size()).all(|g| self.act[g].is_identity())
    }

    /// `(residue degree in K, ideal class)` of a prime with Frobenius `τ`:
    /// the degree is the order of the `G`-part and the class is the `A`-part
    /// of `τ^{degree}`.
    pub fn frobenius_class(&self, tau: SdpElement) -> (u64, u32) {
        let degree = self.g.order_of(tau.g);
        (degree, self.pow(tau, degree).a)
    }

    /// Member indices of the subgroup of `A` generated by the classes of all
    /// Frobenius elements whose `G`-part has order `f`.
    ///
    /// For fixed `g` the class map `a ↦ Σ_{i<f} ψ(g)^i(a)` is additive, so its
    /// image is spanned by the images of the generators of `A`; the image is
    /// stable under `ψ(G)`, so the span is already closed under conjugation.
    pub fn degree_f_class_members(&self, f: u64) -> Vec<u32> {
        let mut gens = Vec::new();
        for g in 0..self.g.size() as u32 {
            if self.g.order_of(g) != f {
                continue;
            }
            for e in self.a.generators() {
                let mut acc = 0;
                let mut h = 0;
                for _ in 0..f {
                    acc = self.a.add(acc, self.act[h as usize].apply(e));
                    h = self.g.add(h, g);
                }
                if acc != 0 {
                    gens.push(acc);
                }
            }
        }
        gens.sort_unstable();
        gens.dedup();
        self.a.span(&gens)
    }

    pub fn degree_f_class_subgroup(&self, f: u64) -> Subgroup {
        let members = self.degree_f_class_members(f);
        let gens: Vec<u32> = members.iter().copied().filter(|&x| x != 0).collect();
        self.a.subgroup(&gens)
    }

    /// Do the classes of degree-`f` primes generate all of `A`?
    pub fn generated_by_degree(&self, f: u64) -> bool {
        self.degree_f_class_members(f).len() == self.a.size()
    }

    /// Elements `(a, g)` with `ψ(g) = id` whose order differs from
    /// `lcm(ord a, ord g)`; empty when the order formula holds throughout.
    pub fn order_formula_violations(&self) -> Vec<SdpElement> {
        let mut bad = Vec::new();
        for g in 0..self.g.size() as u32 {
            if !self.acts_trivially(g) {
                continue;
            }
            for a in 0..self.a.size() as u32 {
                let x = SdpElement { a, g };
                if self.element_order(x) != lcm(self.a.order_of(a), self.g.order_of(g)) {
                    bad.push(x);
                }
            }
        }
        bad
    }

    pub fn norm_is_zero(&self) -> bool {
        self.a.generators().iter().all(|&e| {
            self.act.iter().fold(0, |acc, alpha| self.a.add(acc, alpha.apply(e))) == 0
        })
    }

    pub fn to_cayley(&self) -> CayleyGroup {
        let m = self.order() as usize;
        let elems: Vec<SdpElement> = self.elements().collect();
        let mut table = vec![0u32; m * m];
        for (i, &x) in elems.iter().enumerate() {
            for (j, &y) in elems.iter().enumerate() {
                table[i * m + j] = self.index(self.mul(x, y));
            }
        }
        CayleyGroup::new(m, table).expect("split extension is a group")
    }
}

fn action_table(a: &IndexedGroup, g: &IndexedGroup, gens: &[IndexedAut]) -> Vec<IndexedAut> {
    let strides = g.generators();
    let factors = g.group().factors();
    let mut act = Vec::with_capacity(g.size());
    act.push(IndexedAut::identity(a));
    for k in 1..g.size() {
        let i = (0..strides.len())
            .rev()
            .find(|&i| !(k as u32 / strides[i]).is_multiple_of(factors[i] as u32))
            .expect("nonzero index");
        let prev = act[k - strides[i] as usize].clone();
        act.push(prev.compose(&gens[i]));
    }
    act
}

/// Which homomorphisms an action scan visits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ActionFilter {
    All,
    Valid,
}

/// Streams every homomorphism `G → Aut(A)` (or only the valid ones) as a
/// ready-built split extension.
pub fn for_each_action<F>(
    a: &FiniteAbelianGroup,
    g: &FiniteAbelianGroup,
    filter: ActionFilter,
    ceiling: u64,
    mut visit: F,
) -> Result<()>
where
    F: FnMut(&SplitExtension) -> ControlFlow<()>,
{
    let predicted = aut_order(a);
    if predicted > BigUint::from(ceiling) {
        return Err(Error::TooLarge { predicted, ceiling });
    }
    let ia = Arc::new(IndexedGroup::new(a)?);
    let ig = Arc::new(IndexedGroup::new(g)?);
    let orders = g.factors().to_vec();
    let mut emit = |gens: &[IndexedAut]| -> ControlFlow<()> {
        if filter == ActionFilter::Valid && g.is_cyclic() && !cyclic_norm_is_zero(&ia, &gens[0], g.order()) {
            return ControlFlow::Continue(());
        }
        let ext = SplitExtension { a: ia.clone(), g: ig.clone(), act: action_table(&ia, &ig, gens) };
        if filter == ActionFilter::Valid && !ext.norm_is_zero() {
            return ControlFlow::Continue(());
        }
        visit(&ext)
    };
    if orders.is_empty() {
        let _ = emit(&[]);
        return Ok(());
    }
    if orders.len() == 1 {
        let n = orders[0];
        let _ = for_each_automorphism_indexed(&ia, |imgs| {
            let alpha = IndexedAut::from_images(&ia, imgs);
            if !n.is_multiple_of(alpha.order()) {
                return ControlFlow::Continue(());
            }
            emit(core::slice::from_ref(&alpha))
        });
        return Ok(());
    }
    // Several generators: collect candidates per generator, then choose
    // pairwise commuting tuples.
    let mut by_order: Vec<Vec<IndexedAut>> = vec![Vec::new(); orders.len()];
    let _ = for_each_automorphism_indexed(&ia, |imgs| {
        let alpha = IndexedAut::from_images(&ia, imgs);
        let k = alpha.order();
        for (slot, &n) in by_order.iter_mut().zip(&orders) {
            if n % k == 0 {
                slot.push(alpha.clone());
            }
        }
        ControlFlow::Continue(())
    });
    let gens = ia.generators();
    let mut chosen: Vec<IndexedAut> = Vec::with_capacity(orders.len());
    let _ = choose_commuting(&by_order, &gens, &mut chosen, &mut emit);
    Ok(())
}

fn choose_commuting<F>(
    cands: &[Vec<IndexedAut>],
    gens: &[u32],
    chosen: &mut Vec<IndexedAut>,
    emit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[IndexedAut]) -> ControlFlow<()>,
{
    let level = chosen.len();
    if level == cands.len() {
        return emit(chosen);
    }
    for alpha in &cands[level] {
        if chosen.iter().all(|beta| alpha.commutes_with(beta, gens)) {
            chosen.push(alpha.clone());
            let flow = choose_commuting(cands, gens, chosen, emit);
            chosen.pop();
            flow?;
        }
    }
    ControlFlow::Continue(())
}

/// `Σ_{i<n} α^i` kills `A`: the validity condition for `Z/n` acting through `α`.
pub fn cyclic_norm_is_zero(a: &IndexedGroup, alpha: &IndexedAut, n: u64) -> bool {
    a.generators().iter().all(|&e| {
        let mut acc = 0;
        let mut x = e;
        for _ in 0..n {
            acc = a.add(acc, x);
            x = alpha.apply(x);
        }
        acc == 0
    })
}

/// Every valid action of `G` on `A`.
pub fn valid_actions(a: &FiniteAbelianGroup, g: &FiniteAbelianGroup, ceiling: u64) -> Result<Vec<ActionHom>> {
    let mut out = Vec::new();
    for_each_action(a, g, ActionFilter::Valid, ceiling, |ext| {
        out.push(ext.action_hom());
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// Is `f` in the simulated `R`-set for every valid action of `G` on `A`?
pub fn verify_r_membership_sim(a: &FiniteAbelianGroup, g: &FiniteAbelianGroup, f: u64, ceiling: u64) -> Result<bool> {
    Ok(r_membership_profile(a, g, &[f], ceiling)?[0])
}

/// [`verify_r_membership_sim`] for several `f` with a single scan.
pub fn r_membership_profile(a: &FiniteAbelianGroup, g: &FiniteAbelianGroup, fs: &[u64], ceiling: u64) -> Result<Vec<bool>> {
    let mut ok = vec![true; fs.len()];
    for_each_action(a, g, ActionFilter::Valid, ceiling, |ext| {
        for (flag, &f) in ok.iter_mut().zip(fs) {
            if *flag && !ext.generated_by_degree(f) {
                *flag = false;
            }
        }
        if ok.iter().any(|&b| b) {
            ControlFlow::Continue(())
        } else {
            ControlFlow::Break(())
        }
    })?;
    Ok(ok)
}

/// An exact density `num/den` in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Density {
    pub num: u64,
    pub den: u64,
}

impl Density {
    pub fn new(num: u64, den: u64) -> Self {
        let g = gcd(num, den).max(1);
        Density { num: num / g, den: den / g }
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl fmt::Display for Density {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// A finite group given by its multiplication table on `0..m`.
#[derive(Clone, Debug)]
pub struct CayleyGroup {
    m: usize,
    table: Vec<u32>,
    identity: u32,
    inverse: Vec<u32>,
}

impl CayleyGroup {
    /// Validates closure, identity, inverses and associativity.
    pub fn new(m: usize, table: Vec<u32>) -> Result<Self> {
        if m == 0 || table.len() != m * m {
            return Err(Error::InvalidTable(alloc::format!("expected {} entries", m * m)));
        }
        if table.iter().any(|&x| x as usize >= m) {
            return Err(Error::InvalidTable("entry out of range".into()));
        }
        let at = |x: usize, y: usize| table[x * m + y] as usize;
        let identity = (0..m)
            .find(|&e| (0..m).all(|x| at(e, x) == x && at(x, e) == x))
            .ok_or_else(|| Error::InvalidTable("no identity".into()))?;
        let mut inverse = vec![0u32; m];
        for x in 0..m {
            let y = (0..m)
                .find(|&y| at(x, y) == identity && at(y, x) == identity)
                .ok_or_else(|| Error::InvalidTable(alloc::format!("element {x} has no inverse")))?;
            inverse[x] = y as u32;
        }
        for x in 0..m {
            for y in 0..m {
                let xy = at(x, y);
                for z in 0..m {
                    if at(xy, z) != at(x, at(y, z)) {
                        return Err(Error::InvalidTable(alloc::format!("not associative at ({x}, {y}, {z})")));
                    }
                }
            }
        }
        Ok(CayleyGroup { m, table, identity: identity as u32, inverse })
    }

    pub fn from_abelian(g: &IndexedGroup) -> Self {
        let m = g.size();
        let mut table = vec![0u32; m * m];
        for i in 0..m {
            for j in 0..m {
                table[i * m + j] = g.add(i as u32, j as u32);
            }
        }
        CayleyGroup::new(m, table).expect("abelian table is a group")
    }

    pub fn order(&self) -> usize {
        self.m
    }

    pub fn identity(&self) -> u32 {
        self.identity
    }

    #[inline]
    pub fn mul(&self, x: u32, y: u32) -> u32 {
        self.table[x as usize * self.m + y as usize]
    }

    pub fn inv(&self, x: u32) -> u32 {
        self.inverse[x as usize]
    }

    pub fn element_order(&self, x: u32) -> u64 {
        let mut k = 1;
        let mut cur = x;
        while cur != self.identity {
            cur = self.mul(cur, x);
            k += 1;
        }
        k
    }

    pub fn is_subgroup(&self, members: &[u32]) -> bool {
        let mut mark = vec![false; self.m];
        for &x in members {
            if x as usize >= self.m {
                return false;
            }
            mark[x as usize] = true;
        }
        mark[self.identity as usize]
            && members.iter().all(|&x| members.iter().all(|&y| mark[self.mul(x, self.inv(y)) as usize]))
    }

    /// Sorted conjugacy class of `x`.
    pub fn conjugacy_class(&self, x: u32) -> Vec<u32> {
        let mut out: Vec<u32> = (0..self.m as u32).map(|y| self.mul(self.mul(y, x), self.inv(y))).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// `|C_x| / |G|`, the density of primes whose Frobenius lies in the class of `x`.
    pub fn cebotarev_density(&self, x: u32) -> Density {
        Density::new(self.conjugacy_class(x).len() as u64, self.m as u64)
    }

    /// Sorted left coset `x·H`.
    pub fn left_coset(&self, x: u32, h: &[u32]) -> Vec<u32> {
        let mut out: Vec<u32> = h.iter().map(|&y| self.mul(x, y)).collect();
        out.sort_unstable();
        out
    }

    /// Splits a left transversal `t` of `h2` in `G` through the chain
    /// `h2 ≤ h1 ≤ G`: returns transversals `T₁` of `h2` in `h1` and `T₂` of
    /// `h1` in `G`, and for each `g ∈ t` the unique `g' ∈ T₁`, `g'' ∈ T₂`,
    /// `h ∈ h2` with `g = g''·g'·h`.
    ///
    /// `T₁` is `t ∩ h1`; `T₂` takes the identity for the coset `h1` and the
    /// first element of `t` in every other coset.
    pub fn nested_coset_decompose(&self, h1: &[u32], h2: &[u32], t: &[u32]) -> Result<NestedCosets> {
        if !self.is_subgroup(h1) || !self.is_subgroup(h2) {
            return Err(Error::InvalidChain("H1 and H2 must be subgroups".into()));
        }
        let in_h1 = self.membership(h1);
        let in_h2 = self.membership(h2);
        if !h2.iter().all(|&x| in_h1[x as usize]) {
            return Err(Error::InvalidChain("H2 is not contained in H1".into()));
        }
        let mut covered = vec![false; self.m];
        for &z in t {
            for y in self.left_coset(z, h2) {
                if core::mem::replace(&mut covered[y as usize], true) {
                    return Err(Error::InvalidChain("T repeats a coset of H2".into()));
                }
            }
        }
        if covered.iter().any(|&c| !c) {
            return Err(Error::InvalidChain("T misses a coset of H2".into()));
        }

        let t1: Vec<u32> = t.iter().copied().filter(|&z| in_h1[z as usize]).collect();
        let mut t2: Vec<u32> = vec![self.identity];
        let mut cosets: Vec<Vec<u32>> = vec![self.left_coset(self.identity, h1)];
        for &z in t {
            let c = self.left_coset(z, h1);
            if !cosets.contains(&c) {
                cosets.push(c);
                t2.push(z);
            }
        }

        let mut rows = Vec::with_capacity(t.len());
        for &g in t {
            let c = self.left_coset(g, h1);
            let j = cosets.iter().position(|x| *x == c).expect("every coset has a representative");
            let g2 = t2[j];
            let x = self.mul(self.inv(g2), g);
            let g1 = *t1
                .iter()
                .find(|&&z| in_h2[self.mul(self.inv(z), x) as usize])
                .ok_or_else(|| Error::InvalidChain("T ∩ H1 is not a transversal of H2 in H1".into()))?;
            let h = self.mul(self.inv(g1), x);
            debug_assert_eq!(self.mul(self.mul(g2, g1), h), g);
            rows.push(CosetFactor { g, g1, g2, h });
        }
        Ok(NestedCosets { t1, t2, rows })
    }

    fn membership(&self, members: &[u32]) -> Vec<bool> {
        let mut mark = vec![false; self.m];
        for &x in members {
            mark[x as usize] = true;
        }
        mark
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CosetFactor {
    pub g: u32,
    /// Representative in `T₁`.
    pub g1: u32,
    /// Representative in `T₂`.
    pub g2: u32,
    pub h: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NestedCosets {
    pub t1: Vec<u32>,
    pub t2: Vec<u32>,
    pub rows: Vec<CosetFactor>,
}

impl NestedCosets {
    /// Is `g ↦ (g', g'')` a bijection from `T` onto `T₁ × T₂`?
    pub fn is_bijective(&self) -> bool {
        let mut pairs: Vec<(u32, u32)> = self.rows.iter().map(|r| (r.g1, r.g2)).collect();
        pairs.sort_unstable();
        pairs.dedup();
        pairs.len() == self.rows.len()
            && pairs.len() == self.t1.len() * self.t2.len()
            && pairs.iter().all(|(a, b)| self.t1.contains(a) && self.t2.contains(b))
    }
}

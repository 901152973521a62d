//! Finite abelian groups in invariant-factor form.
//!
//! A group is stored as its invariant factors `n_1 | n_2 | … | n_t` (each at
//! least 2); the trivial group has no factors. Elements are coordinate vectors
//! with coordinate `i` reduced modulo `n_i`, and elements are ordered
//! lexicographically, which is also the order of [`FiniteAbelianGroup::index_of`].

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::arith::{factorize, gcd, lcm, mod_inverse, p_valuation};
use crate::{Error, Result};

/// Subgroups of groups up to this order keep an explicit member list.
pub const MATERIALIZE_LIMIT: u64 = 10_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct FiniteAbelianGroup {
    factors: Vec<u64>,
    order: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct GroupElement(Vec<u64>);

impl GroupElement {
    pub fn coords(&self) -> &[u64] {
        &self.0
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl FiniteAbelianGroup {
    /// Builds the group `⊕ Z/m_i` for arbitrary cyclic orders `m_i >= 2` and
    /// normalizes it to its invariant-factor chain.
    pub fn new(cyclic_orders: &[u64]) -> Result<Self> {
        let mut primary: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
        for &m in cyclic_orders {
            if m < 2 {
                return Err(Error::InvalidFactor(m));
            }
            for (p, e) in factorize(m) {
                primary.entry(p).or_default().push(e);
            }
        }
        Self::from_primary(&primary)
    }

    pub fn trivial() -> Self {
        FiniteAbelianGroup { factors: Vec::new(), order: 1 }
    }

    pub fn cyclic(n: u64) -> Self {
        if n == 1 {
            Self::trivial()
        } else {
            Self::new(&[n]).expect("n >= 2")
        }
    }

    /// Recombines primary components (prime ↦ exponents, any order) by CRT.
    pub fn from_primary(primary: &BTreeMap<u64, Vec<u32>>) -> Result<Self> {
        let rank = primary.values().map(|v| v.iter().filter(|&&e| e > 0).count()).max().unwrap_or(0);
        let mut factors = vec![1u64; rank];
        for (&p, exps) in primary {
            let mut exps: Vec<u32> = exps.iter().copied().filter(|&e| e > 0).collect();
            exps.sort_unstable_by(|a, b| b.cmp(a));
            for (slot, e) in factors.iter_mut().zip(exps) {
                *slot = p
                    .checked_pow(e)
                    .and_then(|pe| slot.checked_mul(pe))
                    .ok_or_else(|| Error::InvalidArgument("group order overflows 64 bits".to_string()))?;
            }
        }
        factors.reverse();
        let order = factors
            .iter()
            .try_fold(1u64, |acc, &n| acc.checked_mul(n))
            .ok_or_else(|| Error::InvalidArgument("group order overflows 64 bits".to_string()))?;
        Ok(FiniteAbelianGroup { factors, order })
    }

    /// Every abelian group of order `h`, one per isomorphism class.
    pub fn all_of_order(h: u64) -> Vec<Self> {
        let mut shapes: Vec<BTreeMap<u64, Vec<u32>>> = vec![BTreeMap::new()];
        for (p, e) in factorize(h) {
            let parts = partitions(e);
            let mut next = Vec::with_capacity(shapes.len() * parts.len());
            for shape in &shapes {
                for part in &parts {
                    let mut s = shape.clone();
                    s.insert(p, part.clone());
                    next.push(s);
                }
            }
            shapes = next;
        }
        let mut out: Vec<Self> = shapes
            .iter()
            .map(|s| Self::from_primary(s).expect("order fits"))
            .collect();
        out.sort();
        out
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn exponent(&self) -> u64 {
        self.factors.last().copied().unwrap_or(1)
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn is_cyclic(&self) -> bool {
        self.factors.len() <= 1
    }

    /// Prime ↦ ascending exponent list of the primary components.
    pub fn primary_decomposition(&self) -> BTreeMap<u64, Vec<u32>> {
        let mut out: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
        for &n in &self.factors {
            for (p, e) in factorize(n) {
                out.entry(p).or_default().push(e);
            }
        }
        for exps in out.values_mut() {
            exps.sort_unstable();
        }
        out
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement(vec![0; self.factors.len()])
    }

    /// Standard generators `e_i`, of order `n_i`.
    pub fn generators(&self) -> Vec<GroupElement> {
        (0..self.rank())
            .map(|i| {
                let mut c = vec![0; self.rank()];
                c[i] = 1;
                GroupElement(c)
            })
            .collect()
    }

    /// Reduces signed coordinates into the group.
    pub fn element(&self, coords: &[i64]) -> Result<GroupElement> {
        if coords.len() != self.rank() {
            return Err(Error::NotAnElement(alloc::format!(
                "expected {} coordinates, got {}",
                self.rank(),
                coords.len()
            )));
        }
        Ok(GroupElement(
            coords
                .iter()
                .zip(&self.factors)
                .map(|(&c, &n)| c.rem_euclid(n as i64) as u64)
                .collect(),
        ))
    }

    pub fn contains(&self, x: &GroupElement) -> bool {
        x.0.len() == self.rank() && x.0.iter().zip(&self.factors).all(|(c, n)| c < n)
    }

    pub fn add(&self, x: &GroupElement, y: &GroupElement) -> GroupElement {
        GroupElement(
            x.0.iter()
                .zip(&y.0)
                .zip(&self.factors)
                .map(|((a, b), n)| (a + b) % n)
                .collect(),
        )
    }

    pub fn neg(&self, x: &GroupElement) -> GroupElement {
        GroupElement(x.0.iter().zip(&self.factors).map(|(a, n)| (n - a) % n).collect())
    }

    pub fn sub(&self, x: &GroupElement, y: &GroupElement) -> GroupElement {
        self.add(x, &self.neg(y))
    }

    /// `k·x` for any integer `k`.
    pub fn scale(&self, k: i64, x: &GroupElement) -> GroupElement {
        GroupElement(
            x.0.iter()
                .zip(&self.factors)
                .map(|(&a, &n)| {
                    let k = k.rem_euclid(n as i64) as u128;
                    ((k * a as u128) % n as u128) as u64
                })
                .collect(),
        )
    }

    pub fn element_order(&self, x: &GroupElement) -> u64 {
        x.0.iter()
            .zip(&self.factors)
            .fold(1, |acc, (&a, &n)| lcm(acc, n / gcd(n, a)))
    }

    /// Position of `x` in lexicographic order (first coordinate most significant).
    pub fn index_of(&self, x: &GroupElement) -> u64 {
        x.0.iter().zip(&self.factors).fold(0, |acc, (&a, &n)| acc * n + a)
    }

    pub fn element_at(&self, mut index: u64) -> GroupElement {
        let mut c = vec![0; self.rank()];
        for i in (0..self.rank()).rev() {
            c[i] = index % self.factors[i];
            index /= self.factors[i];
        }
        GroupElement(c)
    }

    /// All elements in lexicographic order.
    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order).map(move |i| self.element_at(i))
    }

    /// Elements killed by `m`, i.e. the subgroup `G[m]`, in lexicographic order.
    pub fn torsion_elements(&self, m: u64) -> Vec<GroupElement> {
        let steps: Vec<(u64, u64)> = self
            .factors
            .iter()
            .map(|&n| {
                let g = gcd(n, m);
                (g, n / g)
            })
            .collect();
        let mut out = vec![self.identity()];
        for (i, &(count, step)) in steps.iter().enumerate() {
            let mut next = Vec::with_capacity(out.len() * count as usize);
            for x in &out {
                for k in 0..count {
                    let mut y = x.clone();
                    y.0[i] = k * step;
                    next.push(y);
                }
            }
            out = next;
        }
        out
    }

    /// Number of elements of each order, keyed by order.
    pub fn order_census(&self) -> BTreeMap<u64, u64> {
        let mut out = BTreeMap::new();
        for x in self.elements() {
            *out.entry(self.element_order(&x)).or_insert(0) += 1;
        }
        out
    }

    /// Does `self` contain a subgroup isomorphic to `other`?
    pub fn contains_copy_of(&self, other: &FiniteAbelianGroup) -> bool {
        let mine = self.primary_decomposition();
        other.primary_decomposition().iter().all(|(p, theirs)| {
            let Some(ours) = mine.get(p) else {
                return false;
            };
            if theirs.len() > ours.len() {
                return false;
            }
            theirs.iter().rev().zip(ours.iter().rev()).all(|(a, b)| a <= b)
        })
    }
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (i, n) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{n}")?;
        }
        Ok(())
    }
}

/// Parses cyclic orders separated by `,` or `x` (`"2,6"`, `"2x2"`); an empty
/// string or `"1"` is the trivial group.
impl FromStr for FiniteAbelianGroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "1" {
            return Ok(Self::trivial());
        }
        let orders = s
            .split([',', 'x', 'X', '*'])
            .map(|t| {
                t.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::InvalidArgument(alloc::format!("bad cyclic order {t:?}")))
            })
            .collect::<Result<Vec<u64>>>()?;
        Self::new(&orders)
    }
}

fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn rec(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            let mut p = prefix.clone();
            p.reverse();
            out.push(p);
            return;
        }
        for part in (1..=max.min(n)).rev() {
            prefix.push(part);
            rec(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// A subgroup of a fixed ambient group.
///
/// Always carries a generating set, its order and invariant factors; the
/// sorted member list is kept when the ambient group has order at most
/// [`MATERIALIZE_LIMIT`].
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Subgroup {
    generators: Vec<GroupElement>,
    structure: FiniteAbelianGroup,
    members: Option<Vec<GroupElement>>,
}

impl Subgroup {
    pub fn generators(&self) -> &[GroupElement] {
        &self.generators
    }

    pub fn order(&self) -> u64 {
        self.structure.order()
    }

    /// Isomorphism type of the subgroup.
    pub fn structure(&self) -> &FiniteAbelianGroup {
        &self.structure
    }

    pub fn members(&self) -> Option<&[GroupElement]> {
        self.members.as_deref()
    }

    pub fn contains(&self, g: &FiniteAbelianGroup, x: &GroupElement) -> bool {
        match &self.members {
            Some(m) => m.binary_search(x).is_ok(),
            None => {
                let mut gens = self.generators.clone();
                gens.push(x.clone());
                span_structure(g, &gens).order() == self.order()
            }
        }
    }

    pub fn is_whole(&self, g: &FiniteAbelianGroup) -> bool {
        self.order() == g.order()
    }

    pub fn is_subgroup_of(&self, g: &FiniteAbelianGroup, other: &Subgroup) -> bool {
        self.generators.iter().all(|x| other.contains(g, x))
    }

    pub fn same_as(&self, g: &FiniteAbelianGroup, other: &Subgroup) -> bool {
        self.order() == other.order() && self.is_subgroup_of(g, other)
    }

    /// Intersection of two subgroups; both must carry member lists.
    pub fn intersect(&self, g: &FiniteAbelianGroup, other: &Subgroup) -> Subgroup {
        let (Some(a), Some(b)) = (&self.members, &other.members) else {
            panic!("intersection requires materialized subgroups");
        };
        let common: Vec<GroupElement> = a.iter().filter(|x| b.binary_search(x).is_ok()).cloned().collect();
        from_members(g, common)
    }
}

/// Smallest subgroup of `g` containing `elems`.
pub fn subgroup_generated(g: &FiniteAbelianGroup, elems: &[GroupElement]) -> Subgroup {
    let structure = span_structure(g, elems);
    let generators: Vec<GroupElement> = elems.iter().filter(|x| **x != g.identity()).cloned().collect();
    let members = (g.order() <= MATERIALIZE_LIMIT).then(|| enumerate_span(g, &generators));
    Subgroup { generators, structure, members }
}

fn enumerate_span(g: &FiniteAbelianGroup, gens: &[GroupElement]) -> Vec<GroupElement> {
    let mut seen = vec![false; g.order() as usize];
    let mut members = vec![g.identity()];
    seen[0] = true;
    for x in gens {
        if seen[g.index_of(x) as usize] {
            continue;
        }
        let ord = g.element_order(x);
        let base = members.clone();
        let mut step = x.clone();
        for _ in 1..ord {
            for y in &base {
                let z = g.add(y, &step);
                let i = g.index_of(&z) as usize;
                if !seen[i] {
                    seen[i] = true;
                    members.push(z);
                }
            }
            step = g.add(&step, x);
        }
    }
    members.sort();
    members
}

fn from_members(g: &FiniteAbelianGroup, members: Vec<GroupElement>) -> Subgroup {
    let mut generators: Vec<GroupElement> = Vec::new();
    let mut span = vec![g.identity()];
    for x in &members {
        if span.binary_search(x).is_err() {
            generators.push(x.clone());
            span = enumerate_span(g, &generators);
        }
        if span.len() == members.len() {
            break;
        }
    }
    let structure = span_structure(g, &generators);
    Subgroup { generators, structure, members: Some(members) }
}

/// Isomorphism type of the subgroup generated by `elems`.
///
/// Works one prime at a time: the `p`-primary part of `g` embeds in
/// `(Z/p^E)^t`, and row/column elimination over the chain ring `Z/p^E`
/// (pivoting on an entry of least `p`-adic valuation) diagonalizes the
/// generator matrix.
pub fn span_structure(g: &FiniteAbelianGroup, elems: &[GroupElement]) -> FiniteAbelianGroup {
    let mut primary: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
    for (p, exps) in g.primary_decomposition() {
        let top = *exps.last().expect("nonempty");
        let q = p.pow(top);
        // Column i of the p-part, with its exponent.
        let cols: Vec<(usize, u32)> = g
            .factors()
            .iter()
            .enumerate()
            .map(|(i, &n)| (i, p_valuation(p, n)))
            .filter(|&(_, e)| e > 0)
            .collect();
        let mut rows: Vec<Vec<u64>> = elems
            .iter()
            .map(|x| {
                cols.iter()
                    .map(|&(i, e)| (x.0[i] % p.pow(e)) * p.pow(top - e))
                    .collect()
            })
            .collect();
        let found = chain_ring_diagonal(&mut rows, p, top, q);
        if !found.is_empty() {
            primary.insert(p, found);
        }
    }
    FiniteAbelianGroup::from_primary(&primary).expect("subgroup order fits")
}

fn valuation_mod(x: u64, p: u64, top: u32) -> u32 {
    if x == 0 {
        top
    } else {
        p_valuation(p, x)
    }
}

fn chain_ring_diagonal(rows: &mut [Vec<u64>], p: u64, top: u32, q: u64) -> Vec<u32> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    let mut r0 = 0;
    let mut c0 = 0;
    while r0 < rows.len() && c0 < ncols {
        let mut best: Option<(usize, usize, u32)> = None;
        for (i, row) in rows.iter().enumerate().skip(r0) {
            for (j, &x) in row.iter().enumerate().skip(c0) {
                let v = valuation_mod(x, p, top);
                if v < top && best.is_none_or(|(_, _, bv)| v < bv) {
                    best = Some((i, j, v));
                }
            }
        }
        let Some((i, j, v)) = best else { break };
        rows.swap(r0, i);
        for row in rows.iter_mut() {
            row.swap(c0, j);
        }
        let pv = p.pow(v);
        let unit_inv = mod_inverse((rows[r0][c0] / pv) % q, q).expect("unit in chain ring");
        let pivot_row = rows[r0].clone();
        for row in rows.iter_mut().skip(r0 + 1) {
            let e = row[c0];
            if e == 0 {
                continue;
            }
            let factor = ((e / pv) as u128 * unit_inv as u128 % q as u128) as u64;
            for (x, &y) in row.iter_mut().zip(&pivot_row) {
                let sub = (factor as u128 * y as u128 % q as u128) as u64;
                *x = (*x + q - sub) % q;
            }
        }
        out.push(top - v);
        r0 += 1;
        c0 += 1;
    }
    out
}

/// All cyclic subgroups of order `f`, without duplicates, ordered by their
/// lexicographically least generator.
pub fn cyclic_subgroups_of_order(g: &FiniteAbelianGroup, f: u64) -> Vec<Subgroup> {
    if f == 0 || !g.exponent().is_multiple_of(f) {
        return Vec::new();
    }
    let mut keys: Vec<GroupElement> = Vec::new();
    for x in g.torsion_elements(f) {
        if g.element_order(&x) != f {
            continue;
        }
        let least = (1..f.max(2))
            .filter(|&k| gcd(k, f) == 1)
            .map(|k| g.scale(k as i64, &x))
            .min()
            .expect("f >= 1");
        if least == x {
            keys.push(x);
        }
    }
    keys.sort();
    keys.into_iter().map(|x| subgroup_generated(g, &[x])).collect()
}

/// One representative per coset of `h` in `g`.
///
/// When `|h|` and `[g : h]` are coprime the unique subgroup of order
/// `[g : h]` is a transversal and its members are returned; otherwise each
/// coset contributes its lexicographically least element. Output is sorted.
pub fn coset_representatives(g: &FiniteAbelianGroup, h: &Subgroup) -> Vec<GroupElement> {
    let index = g.order() / h.order();
    if gcd(h.order(), index) == 1 {
        let mut reps = g.torsion_elements(index);
        reps.sort();
        return reps;
    }
    let h_members: Vec<GroupElement> = match h.members() {
        Some(m) => m.to_vec(),
        None => enumerate_span(g, h.generators()),
    };
    let mut covered = vec![false; g.order() as usize];
    let mut reps = Vec::with_capacity(index as usize);
    for x in g.elements() {
        if covered[g.index_of(&x) as usize] {
            continue;
        }
        for y in &h_members {
            covered[g.index_of(&g.add(&x, y)) as usize] = true;
        }
        reps.push(x);
    }
    reps
}

/// A small abelian group with elements replaced by their indices and the
/// group law tabulated. Used by the exhaustive simulator and enumerators.
#[derive(Clone, Debug)]
pub struct IndexedGroup {
    group: FiniteAbelianGroup,
    add: Vec<u32>,
    neg: Vec<u32>,
    orders: Vec<u64>,
    strides: Vec<u32>,
}

impl IndexedGroup {
    pub const MAX_ORDER: u64 = 2048;

    pub fn new(group: &FiniteAbelianGroup) -> Result<Self> {
        if group.order() > Self::MAX_ORDER {
            return Err(Error::Unsupported(alloc::format!(
                "group of order {} is too large for tabulation (limit {})",
                group.order(),
                Self::MAX_ORDER
            )));
        }
        let m = group.order() as usize;
        let elems: Vec<GroupElement> = group.elements().collect();
        let mut add = vec![0u32; m * m];
        for (i, x) in elems.iter().enumerate() {
            for (j, y) in elems.iter().enumerate() {
                add[i * m + j] = group.index_of(&group.add(x, y)) as u32;
            }
        }
        let neg = elems.iter().map(|x| group.index_of(&group.neg(x)) as u32).collect();
        let orders = elems.iter().map(|x| group.element_order(x)).collect();
        let mut strides = vec![1u32; group.rank()];
        for i in (0..group.rank().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * group.factors()[i + 1] as u32;
        }
        Ok(IndexedGroup { group: group.clone(), add, neg, orders, strides })
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn size(&self) -> usize {
        self.neg.len()
    }

    #[inline]
    pub fn add(&self, i: u32, j: u32) -> u32 {
        self.add[i as usize * self.neg.len() + j as usize]
    }

    #[inline]
    pub fn neg(&self, i: u32) -> u32 {
        self.neg[i as usize]
    }

    #[inline]
    pub fn order_of(&self, i: u32) -> u64 {
        self.orders[i as usize]
    }

    /// Index of the `k`-th standard generator.
    pub fn generator(&self, k: usize) -> u32 {
        self.strides[k]
    }

    pub fn generators(&self) -> Vec<u32> {
        self.strides.clone()
    }

    pub(crate) fn strides(&self) -> &[u32] {
        &self.strides
    }

    pub fn scale(&self, k: u64, i: u32) -> u32 {
        let k = k % self.orders[i as usize].max(1);
        (0..k).fold(0, |acc, _| self.add(acc, i))
    }

    pub fn element(&self, i: u32) -> GroupElement {
        self.group.element_at(i as u64)
    }

    pub fn index(&self, x: &GroupElement) -> u32 {
        self.group.index_of(x) as u32
    }

    /// Sorted member indices of the subgroup generated by `gens`.
    pub fn span(&self, gens: &[u32]) -> Vec<u32> {
        let mut seen = vec![false; self.size()];
        let mut members = vec![0u32];
        seen[0] = true;
        for &x in gens {
            if seen[x as usize] {
                continue;
            }
            let base = members.clone();
            let mut step = x;
            while step != 0 {
                for &y in &base {
                    let z = self.add(y, step);
                    if !seen[z as usize] {
                        seen[z as usize] = true;
                        members.push(z);
                    }
                }
                step = self.add(step, x);
            }
        }
        members.sort_unstable();
        members
    }

    pub fn subgroup(&self, gens: &[u32]) -> Subgroup {
        let elems: Vec<GroupElement> = gens.iter().map(|&i| self.element(i)).collect();
        subgroup_generated(&self.group, &elems)
    }
}

/// Invariant factors rendered as `Z/a x Z/b`.
pub fn describe(g: &FiniteAbelianGroup) -> String {
    if g.is_trivial() {
        return "1".to_string();
    }
    let parts: Vec<String> = g.factors().iter().map(|n| alloc::format!("Z/{n}")).collect();
    parts.join(" x ")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grp(f: &[u64]) -> FiniteAbelianGroup {
        FiniteAbelianGroup::new(f).unwrap()
    }

    #[test]
    fn normalization() {
        assert_eq!(grp(&[2, 3]).factors(), [6]);
        assert_eq!(grp(&[6, 2]).factors(), [2, 6]);
        assert_eq!(grp(&[]).order(), 1);
        assert_eq!(grp(&[4, 6, 10]).factors(), [2, 2, 60]);
        assert_eq!(FiniteAbelianGroup::new(&[1]), Err(Error::InvalidFactor(1)));
        assert_eq!(FiniteAbelianGroup::new(&[4, 0]), Err(Error::InvalidFactor(0)));
        assert_eq!("2x2".parse::<FiniteAbelianGroup>().unwrap().factors(), [2, 2]);
        assert_eq!("2,6".parse::<FiniteAbelianGroup>().unwrap().to_string(), "2,6");
        assert!("".parse::<FiniteAbelianGroup>().unwrap().is_trivial());
    }

    #[test]
    fn primary_components() {
        let pd = grp(&[2, 6]).primary_decomposition();
        assert_eq!(pd.get(&2).unwrap(), &[1, 1]);
        assert_eq!(pd.get(&3).unwrap(), &[1]);
        let pd = grp(&[12]).primary_decomposition();
        assert_eq!(pd.get(&2).unwrap(), &[2]);
        assert_eq!(pd.get(&3).unwrap(), &[1]);
        assert!(FiniteAbelianGroup::trivial().primary_decomposition().is_empty());
    }

    #[test]
    fn orders() {
        let z81 = grp(&[81]);
        assert_eq!(z81.element_order(&z81.element(&[1]).unwrap()), 81);
        assert_eq!(z81.element_order(&z81.identity()), 1);
        // Z/6 x Z/8 is not in invariant form, so build coordinates by hand.
        let g = FiniteAbelianGroup { factors: vec![6, 8], order: 48 };
        assert_eq!(g.element_order(&GroupElement(vec![3, 2])), 4);
    }

    #[test]
    fn generated_subgroups() {
        let z5 = grp(&[5]);
        assert!(subgroup_generated(&z5, &[z5.element(&[1]).unwrap()]).is_whole(&z5));
        let z6 = grp(&[6]);
        let h = subgroup_generated(&z6, &[z6.element(&[2]).unwrap()]);
        assert_eq!(h.order(), 3);
        assert_eq!(subgroup_generated(&z6, &[]).order(), 1);
    }

    #[test]
    fn cyclic_subgroups() {
        let z6 = grp(&[6]);
        let subs = cyclic_subgroups_of_order(&z6, 3);
        assert_eq!(subs.len(), 1);
        let m: Vec<u64> = subs[0].members().unwrap().iter().map(|x| x.coords()[0]).collect();
        assert_eq!(m, [0, 2, 4]);
        assert_eq!(cyclic_subgroups_of_order(&grp(&[2, 2]), 2).len(), 3);
        assert!(cyclic_subgroups_of_order(&grp(&[4]), 3).is_empty());
    }

    #[test]
    fn coset_reps() {
        let z6 = grp(&[6]);
        let h3 = subgroup_generated(&z6, &[z6.element(&[2]).unwrap()]);
        let reps: Vec<u64> = coset_representatives(&z6, &h3).iter().map(|x| x.coords()[0]).collect();
        assert_eq!(reps, [0, 3]);
        let whole = subgroup_generated(&z6, &[z6.element(&[1]).unwrap()]);
        assert_eq!(coset_representatives(&z6, &whole), [z6.identity()]);
        let z4 = grp(&[4]);
        let h2 = subgroup_generated(&z4, &[z4.element(&[2]).unwrap()]);
        let reps: Vec<u64> = coset_representatives(&z4, &h2).iter().map(|x| x.coords()[0]).collect();
        assert_eq!(reps, [0, 1]);
    }

    #[test]
    fn groups_of_order() {
        assert_eq!(FiniteAbelianGroup::all_of_order(4).len(), 2);
        assert_eq!(FiniteAbelianGroup::all_of_order(1), [FiniteAbelianGroup::trivial()]);
        assert_eq!(FiniteAbelianGroup::all_of_order(72).len(), 6);
        assert_eq!(FiniteAbelianGroup::all_of_order(32).len(), 7);
    }

    #[test]
    fn copies() {
        assert!(grp(&[2, 4]).contains_copy_of(&grp(&[4])));
        assert!(!grp(&[8]).contains_copy_of(&grp(&[2, 2])));
        assert!(grp(&[3, 15]).contains_copy_of(&grp(&[15])));
    }
}

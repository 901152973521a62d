//! Checkers that certify residue degrees `f` whose primes generate the class group.
//!
//! Every checker validates the hypotheses of one sufficient condition and
//! records each of them, with the numbers involved, in a transcript. A
//! rejection only means "not certified by this condition".
//!
//! When only the class number `h` is known, every abelian group of order `h`
//! is considered and the intersection of the conclusions is reported.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::ControlFlow;

use num_bigint::BigUint;

use crate::arith::{divisors, gcd, gcd_big, is_prime, omega, p_valuation, p_valuation_big, prime_factors};
use crate::aut::{aut_order, count_order2_aut_cyclic, order_spectrum, universal_kernel_order};
use crate::group::describe;
use crate::sim::{for_each_action, ActionFilter};
use crate::{Error, FiniteAbelianGroup, Result};

/// Shape of `Gal(K/Q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum GaloisShape {
    Cyclic,
    Abelian(Vec<u64>),
    /// `(Z/2)^t`.
    Elem2(u32),
    /// Some group of order `q^t`.
    PrimePower { q: u64, t: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum ClassData {
    Group(FiniteAbelianGroup),
    Number(u64),
}

impl ClassData {
    pub fn class_number(&self) -> u64 {
        match self {
            ClassData::Group(g) => g.order(),
            ClassData::Number(h) => *h,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct FieldDescriptor {
    pub label: String,
    pub degree: u64,
    pub shape: GaloisShape,
    pub class: ClassData,
}

impl FieldDescriptor {
    pub fn new(label: impl Into<String>, degree: u64, shape: GaloisShape, class: ClassData) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidArgument("degree must be at least 1".into()));
        }
        if class.class_number() == 0 {
            return Err(Error::InvalidArgument("class number must be at least 1".into()));
        }
        let consistent = match &shape {
            GaloisShape::Cyclic => true,
            GaloisShape::Abelian(f) => f.iter().all(|&x| x > 0) && f.iter().product::<u64>() == degree,
            GaloisShape::Elem2(t) => 2u64.checked_pow(*t) == Some(degree),
            GaloisShape::PrimePower { q, t } => is_prime(*q) && q.checked_pow(*t) == Some(degree),
        };
        if !consistent {
            return Err(Error::WrongShape(format!("shape {shape:?} does not have order {degree}")));
        }
        Ok(FieldDescriptor { label: label.into(), degree, shape, class })
    }

    pub fn cyclic(label: impl Into<String>, degree: u64, class: ClassData) -> Result<Self> {
        Self::new(label, degree, GaloisShape::Cyclic, class)
    }

    /// The maximal real subfield of `Q(ζ_ℓ)`, cyclic of degree `(ℓ-1)/2`.
    pub fn real_cyclotomic(ell: u64, class: ClassData) -> Result<Self> {
        if ell < 5 || !is_prime(ell) {
            return Err(Error::InvalidPrime(ell));
        }
        Self::cyclic(format!("Q(zeta_{ell})+"), (ell - 1) / 2, class)
    }

    pub fn class_number(&self) -> u64 {
        self.class.class_number()
    }

    pub fn is_cyclic(&self) -> bool {
        match &self.shape {
            GaloisShape::Cyclic => true,
            GaloisShape::Abelian(f) => FiniteAbelianGroup::new(f).map(|g| g.is_cyclic()).unwrap_or(false),
            GaloisShape::Elem2(t) => *t <= 1,
            GaloisShape::PrimePower { t, .. } => *t <= 1,
        }
    }

    /// `Gal(K/Q)` when the shape pins it down as an abelian group.
    pub fn galois_group(&self) -> Option<FiniteAbelianGroup> {
        match &self.shape {
            GaloisShape::Cyclic => Some(FiniteAbelianGroup::cyclic(self.degree)),
            GaloisShape::Abelian(f) => FiniteAbelianGroup::new(f).ok(),
            GaloisShape::Elem2(t) => FiniteAbelianGroup::new(&vec![2; *t as usize]).ok(),
            GaloisShape::PrimePower { q, t } if *t <= 1 => Some(FiniteAbelianGroup::cyclic(q.pow(*t))),
            GaloisShape::PrimePower { .. } => None,
        }
    }

    /// Every class group compatible with the class data.
    pub fn class_groups(&self) -> Vec<FiniteAbelianGroup> {
        match &self.class {
            ClassData::Group(g) => vec![g.clone()],
            ClassData::Number(h) => FiniteAbelianGroup::all_of_order(*h),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub enum Theorem {
    /// Universal-kernel criterion.
    Main,
    /// `f | n` prime to `|Aut(Cl)|`.
    CMain,
    /// `p`-power criterion from valuations of `n` and `|Aut(Cl)|`.
    PValuation,
    /// Subgroup-shape bound when `n/f` is prime.
    GMain,
    /// Prime-power degree `q^t`, `q` odd.
    T41,
    /// Elementary abelian 2-group Galois group.
    T45,
    /// Abelian 2-group Galois group, kernel by counting or exhaustion.
    TwoPowerCounting,
    /// `ℓ`-torsion variant.
    Torsion,
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Theorem::Main => "Main",
            Theorem::CMain => "CMain",
            Theorem::PValuation => "PValuation",
            Theorem::GMain => "GMain",
            Theorem::T41 => "T41",
            Theorem::T45 => "T45",
            Theorem::TwoPowerCounting => "TwoPowerCounting",
            Theorem::Torsion => "Torsion",
        };
        f.write_str(s)
    }
}

/// One checked hypothesis.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Line {
    pub condition: String,
    pub witnesses: Vec<(String, String)>,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct RCertificate {
    pub field: FieldDescriptor,
    pub f: u64,
    pub theorem: Theorem,
    pub transcript: Vec<Line>,
    /// Certified residue degrees including `1`; empty on rejection.
    pub conclusion: Vec<u64>,
    /// Shape guaranteed inside the degree-`f` class subgroup (GMain only).
    pub subgroup_bound: Option<FiniteAbelianGroup>,
}

impl RCertificate {
    pub fn is_certified(&self) -> bool {
        self.transcript.iter().all(|l| l.holds) && !self.conclusion.is_empty()
    }

    /// Certified values other than the trivial `1`.
    pub fn nontrivial(&self) -> Vec<u64> {
        self.conclusion.iter().copied().filter(|&f| f > 1).collect()
    }

    pub fn failing_line(&self) -> Option<&Line> {
        self.transcript.iter().find(|l| !l.holds)
    }
}

pub(crate) struct Builder {
    pub(crate) lines: Vec<Line>,
}

impl Builder {
    pub(crate) fn new() -> Self {
        Builder { lines: Vec::new() }
    }

    pub(crate) fn check(&mut self, condition: &str, witnesses: &[(&str, String)], holds: bool) -> bool {
        self.lines.push(Line {
            condition: condition.into(),
            witnesses: witnesses.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
            holds,
        });
        holds
    }

    pub(crate) fn ok(&self) -> bool {
        self.lines.iter().all(|l| l.holds)
    }

    fn finish(self, field: &FieldDescriptor, f: u64, theorem: Theorem, conclusion: Vec<u64>) -> RCertificate {
        let conclusion = if self.ok() { conclusion } else { Vec::new() };
        RCertificate { field: field.clone(), f, theorem, transcript: self.lines, conclusion, subgroup_bound: None }
    }
}

fn require_cyclic(field: &FieldDescriptor, theorem: Theorem) -> Result<()> {
    if field.is_cyclic() {
        Ok(())
    } else {
        Err(Error::WrongShape(format!("{theorem} needs a cyclic Galois group, got {:?}", field.shape)))
    }
}

fn coprimality_lines(b: &mut Builder, field: &FieldDescriptor) {
    let (n, h) = (field.degree, field.class_number());
    b.check("gcd(n, h) = 1", &[("n", n.to_string()), ("h", h.to_string()), ("gcd", gcd(n, h).to_string())], gcd(n, h) == 1);
}

/// Largest divisor of `n` sharing no prime with `big`.
fn coprime_part_big(n: u64, big: &BigUint) -> u64 {
    let mut out = n;
    for p in prime_factors(n) {
        if gcd_big(p, big) != 1 {
            while out.is_multiple_of(p) {
                out /= p;
            }
        }
    }
    out
}

/// Certifies every divisor of `f` when `gcd(n, h) = 1` and an element of
/// order `f` is fixed by every homomorphism `G → Aut(Cl)`.
pub fn check_main(field: &FieldDescriptor, f: u64, ceiling: u64) -> Result<RCertificate> {
    check_main_with(field, f, |a| universal_kernel_order(field.degree, a, ceiling))
}

/// [`check_main`] with the universal kernel order of each candidate class
/// group supplied by the caller (sweeps compute it from a cached spectrum).
pub fn check_main_with<K>(field: &FieldDescriptor, f: u64, mut kernel_of: K) -> Result<RCertificate>
where
    K: FnMut(&FiniteAbelianGroup) -> Result<u64>,
{
    require_cyclic(field, Theorem::Main)?;
    let n = field.degree;
    let mut b = Builder::new();
    b.check("f divides n", &[("f", f.to_string()), ("n", n.to_string())], f >= 1 && n.is_multiple_of(f));
    coprimality_lines(&mut b, field);
    for a in field.class_groups() {
        let k = kernel_of(&a)?;
        b.check(
            "f divides the order of the universal kernel",
            &[("Cl", describe(&a)), ("kernel order", k.to_string()), ("f", f.to_string())],
            k % f.max(1) == 0,
        );
    }
    Ok(b.finish(field, f, Theorem::Main, divisors(f)))
}

/// Certifies every divisor of `f` when `f | n`, `gcd(n, h) = 1` and `gcd(f, |Aut(Cl)|) = 1`.
pub fn check_cmain(field: &FieldDescriptor, f: u64) -> Result<RCertificate> {
    require_cyclic(field, Theorem::CMain)?;
    let n = field.degree;
    let mut b = Builder::new();
    b.check("f divides n", &[("f", f.to_string()), ("n", n.to_string())], f >= 1 && n.is_multiple_of(f));
    coprimality_lines(&mut b, field);
    for a in field.class_groups() {
        let aut = aut_order(&a);
        let g = gcd_big(f, &aut);
        b.check(
            "gcd(f, |Aut(Cl)|) = 1",
            &[("Cl", describe(&a)), ("|Aut(Cl)|", aut.to_string()), ("gcd", g.to_string())],
            g == 1,
        );
    }
    Ok(b.finish(field, f, Theorem::CMain, divisors(f)))
}

/// Certifies `p^i` for `i ≤ e₁ - e₂` where `p^{e₁} ∥ n` and `p^{e₂} ∥ |Aut(Cl)|`.
pub fn check_pvaluation(field: &FieldDescriptor, p: u64) -> Result<RCertificate> {
    require_cyclic(field, Theorem::PValuation)?;
    let n = field.degree;
    if !is_prime(p) || !n.is_multiple_of(p) {
        return Err(Error::InvalidPrime(p));
    }
    let mut b = Builder::new();
    coprimality_lines(&mut b, field);
    let e1 = p_valuation(p, n);
    let mut e2max = 0;
    for a in field.class_groups() {
        let aut = aut_order(&a);
        let e2 = p_valuation_big(p, &aut);
        e2max = e2max.max(e2);
        b.check(
            "e1 > e2",
            &[("Cl", describe(&a)), ("|Aut(Cl)|", aut.to_string()), ("e1", e1.to_string()), ("e2", e2.to_string())],
            e1 > e2,
        );
    }
    let top = if e1 > e2max { p.pow(e1 - e2max) } else { p };
    Ok(b.finish(field, top, Theorem::PValuation, divisors(top)))
}

/// Shape bound for the subgroup generated by degree-`f` primes when `n/f` is a prime `q`.
///
/// Requires the exact class group (a class number with a unique group of that order is accepted).
pub fn check_gmain(field: &FieldDescriptor, f: u64, ceiling: u64) -> Result<RCertificate> {
    require_cyclic(field, Theorem::GMain)?;
    let groups = field.class_groups();
    let [a] = groups.as_slice() else {
        return Err(Error::Unsupported("the subgroup-shape bound needs the exact class group".into()));
    };
    let n = field.degree;
    let mut b = Builder::new();
    let divides = f >= 1 && n.is_multiple_of(f);
    b.check("f divides n", &[("f", f.to_string()), ("n", n.to_string())], divides);
    let q = if divides { n / f } else { 0 };
    b.check("n/f = q is prime", &[("q", q.to_string())], is_prime(q));
    b.check("gcd(q, f) = 1", &[("gcd", gcd(q, f).to_string())], gcd(q, f) == 1);
    let nt = a.exponent();
    b.check(
        "gcd(f, n_t) = 1",
        &[("Cl", describe(a)), ("n_t", nt.to_string()), ("gcd", gcd(f, nt).to_string())],
        gcd(f, nt) == 1,
    );
    let k = universal_kernel_order(n, a, ceiling)?;
    b.check(
        "f divides the order of the universal kernel",
        &[("kernel order", k.to_string()), ("f", f.to_string())],
        divides && k % f == 0,
    );
    let bound = if is_prime(q) {
        let reduced: Vec<u64> =
            a.factors().iter().map(|&m| m / q.pow(p_valuation(q, m))).filter(|&m| m > 1).collect();
        Some(FiniteAbelianGroup::new(&reduced)?)
    } else {
        None
    };
    let whole = bound.as_ref().is_some_and(|s| s.order() == a.order());
    let conclusion = if whole { vec![1, f] } else { vec![1] };
    let mut cert = b.finish(field, f, Theorem::GMain, conclusion);
    if cert.is_certified() {
        cert.subgroup_bound = bound;
    }
    Ok(cert)
}

/// Degree `q^t` (`t > 1`, `q` odd): certifies `q` when `q ∤ h` and `q ∤ |Aut(Cl)|`.
pub fn check_t41(field: &FieldDescriptor, q: u64) -> Result<RCertificate> {
    match field.shape {
        GaloisShape::PrimePower { q: q0, t } if q0 == q && t > 1 && q % 2 == 1 => {}
        _ => {
            return Err(Error::WrongShape(format!(
                "needs an odd prime-power degree q^t with t > 1 and q = {q}, got {:?}",
                field.shape
            )))
        }
    }
    let h = field.class_number();
    let mut b = Builder::new();
    b.check("gcd(q, h) = 1", &[("q", q.to_string()), ("h", h.to_string())], gcd(q, h) == 1);
    for a in field.class_groups() {
        let aut = aut_order(&a);
        b.check(
            "q does not divide |Aut(Cl)|",
            &[("Cl", describe(&a)), ("|Aut(Cl)|", aut.to_string())],
            gcd_big(q, &aut) == 1,
        );
    }
    Ok(b.finish(field, q, Theorem::T41, vec![1, q]))
}

/// `Gal(K/Q) = (Z/2)^{t₁}`, `Cl` cyclic of odd order with `t₂` prime factors: certifies `2` when `t₁ > t₂`.
pub fn check_t45(field: &FieldDescriptor) -> Result<RCertificate> {
    let t1 = match field.shape {
        GaloisShape::Elem2(t) if t >= 2 => t,
        _ => return Err(Error::WrongShape(format!("needs (Z/2)^t with t >= 2, got {:?}", field.shape))),
    };
    let mut b = Builder::new();
    for a in field.class_groups() {
        let h = a.order();
        let fits = a.is_cyclic() && h % 2 == 1;
        b.check("Cl cyclic of odd order", &[("Cl", describe(&a))], fits);
        if !fits {
            continue;
        }
        let t2 = omega(h);
        let involutions = count_order2_aut_cyclic(h)?;
        b.check(
            "t1 > t2",
            &[
                ("t1", t1.to_string()),
                ("t2", t2.to_string()),
                ("involutions in Aut(Cl)", involutions.to_string()),
            ],
            t1 > t2,
        );
    }
    Ok(b.finish(field, 2, Theorem::T45, vec![1, 2]))
}

/// Abelian 2-group `G`, odd `h`: certifies `2` when every homomorphism
/// `G → Aut(Cl)` kills an involution, by counting 2-power-order automorphisms
/// or, failing that, by sweeping all homomorphisms.
pub fn check_two_power_counting(field: &FieldDescriptor, ceiling: u64) -> Result<RCertificate> {
    let g = field
        .galois_group()
        .filter(|g| g.order().is_power_of_two() && g.order() > 1)
        .ok_or_else(|| Error::WrongShape(format!("needs a nontrivial abelian 2-group, got {:?}", field.shape)))?;
    let h = field.class_number();
    let mut b = Builder::new();
    b.check("h odd", &[("h", h.to_string())], h % 2 == 1);
    if h % 2 == 1 {
        for a in field.class_groups() {
            let spectrum = order_spectrum(&a, ceiling)?;
            let two_power: u64 = spectrum.iter().filter(|(k, _)| k.is_power_of_two()).map(|(_, c)| c).sum();
            let (holds, path) = if two_power < g.order() {
                (true, "counting")
            } else {
                (every_hom_kills_involution(&a, &g, ceiling)?, "exhaustive")
            };
            b.check(
                "every homomorphism G -> Aut(Cl) has an involution in its kernel",
                &[
                    ("Cl", describe(&a)),
                    ("|Aut(Cl)|", spectrum.values().sum::<u64>().to_string()),
                    ("2-power-order automorphisms", two_power.to_string()),
                    ("|G|", g.order().to_string()),
                    ("path", path.to_string()),
                ],
                holds,
            );
        }
    }
    Ok(b.finish(field, 2, Theorem::TwoPowerCounting, vec![1, 2]))
}

fn every_hom_kills_involution(a: &FiniteAbelianGroup, g: &FiniteAbelianGroup, ceiling: u64) -> Result<bool> {
    let mut all = true;
    for_each_action(a, g, ActionFilter::All, ceiling, |ext| {
        let killed = (0..ext.g().size() as u32).any(|x| ext.g().order_of(x) == 2 && ext.acts_trivially(x));
        if killed {
            ControlFlow::Continue(())
        } else {
            all = false;
            ControlFlow::Break(())
        }
    })?;
    Ok(all)
}

/// Largest `f | n` prime to `|Aut(A)|` for every admissible class group `A`.
pub fn cmain_maximal_f(field: &FieldDescriptor) -> u64 {
    field
        .class_groups()
        .iter()
        .fold(field.degree, |acc, a| gcd(acc, coprime_part_big(field.degree, &aut_order(a))))
}

/// Order of the universal kernel, minimised over admissible class groups.
pub fn main_maximal_f(field: &FieldDescriptor, ceiling: u64) -> Result<u64> {
    let mut acc = field.degree;
    for a in field.class_groups() {
        acc = gcd(acc, universal_kernel_order(field.degree, &a, ceiling)?);
    }
    Ok(acc)
}

/// Nontrivial residue degrees certified for the real cyclotomic field `Q(ζ_ℓ)^+`
/// by the coprimality criterion at its maximal `f`.
pub fn r_set_real_cyclotomic(ell: u64, class: ClassData) -> Result<Vec<u64>> {
    let field = FieldDescriptor::real_cyclotomic(ell, class)?;
    let cert = check_cmain(&field, cmain_maximal_f(&field))?;
    Ok(cert.nontrivial())
}

/// Every applicable checker at its strongest parameter.
pub fn certify_all(field: &FieldDescriptor, ceiling: u64) -> Result<Vec<RCertificate>> {
    let mut out = Vec::new();
    if field.is_cyclic() {
        out.push(check_cmain(field, cmain_maximal_f(field))?);
        out.push(check_main(field, main_maximal_f(field, ceiling)?, ceiling)?);
        for p in prime_factors(field.degree) {
            out.push(check_pvaluation(field, p)?);
        }
    }
    match field.shape {
        GaloisShape::PrimePower { q, t } if t > 1 && q % 2 == 1 => out.push(check_t41(field, q)?),
        GaloisShape::Elem2(t) if t >= 2 => out.push(check_t45(field)?),
        _ => {}
    }
    if !field.is_cyclic() {
        if let Some(g) = field.galois_group() {
            if g.order().is_power_of_two() {
                out.push(check_two_power_counting(field, ceiling)?);
            }
        }
    }
    Ok(out)
}

/// Union of the nontrivial conclusions of `certs`, ascending.
pub fn union_of(certs: &[RCertificate]) -> Vec<u64> {
    let mut out: Vec<u64> = certs.iter().flat_map(|c| c.nontrivial()).collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Degrees `f` whose primes generate the `ℓ`-torsion `Cl[ℓ]`, certified via the
/// universal kernel of `G` acting on the `ℓ`-Sylow subgroup.
pub fn r_ell_torsion_set(field: &FieldDescriptor, ell: u64, ceiling: u64) -> Result<RCertificate> {
    require_cyclic(field, Theorem::Torsion)?;
    let n = field.degree;
    if !is_prime(ell) {
        return Err(Error::InvalidPrime(ell));
    }
    if n.is_multiple_of(ell) {
        return Err(Error::Unsupported(format!("{ell} divides the degree {n}")));
    }
    let mut sylows: Vec<FiniteAbelianGroup> = field.class_groups().iter().map(|a| sylow(a, ell)).collect();
    sylows.sort();
    sylows.dedup();
    let mut b = Builder::new();
    let mut f = n;
    for s in &sylows {
        let k = universal_kernel_order(n, s, ceiling)?;
        f = gcd(f, k);
        b.check(
            "universal kernel on the Sylow subgroup is nontrivial",
            &[("Sylow", describe(s)), ("|Aut|", aut_order(s).to_string()), ("kernel order", k.to_string())],
            k > 1 || n == 1,
        );
    }
    Ok(b.finish(field, f, Theorem::Torsion, divisors(f)))
}

/// The `p`-primary component of `a`.
pub fn sylow(a: &FiniteAbelianGroup, p: u64) -> FiniteAbelianGroup {
    let mut primary = a.primary_decomposition();
    primary.retain(|&q, _| q == p);
    FiniteAbelianGroup::from_primary(&primary).expect("component of a valid group")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aut::DEFAULT_CEILING;

    fn cyc(n: u64, h: u64) -> FieldDescriptor {
        FieldDescriptor::cyclic("K", n, ClassData::Number(h)).unwrap()
    }

    fn exact(n: u64, cl: &[u64]) -> FieldDescriptor {
        FieldDescriptor::cyclic("K", n, ClassData::Group(FiniteAbelianGroup::new(cl).unwrap())).unwrap()
    }

    #[test]
    fn main_criterion() {
        let c = check_main(&cyc(81, 4), 27, DEFAULT_CEILING).unwrap();
        assert_eq!(c.conclusion, [1, 3, 9, 27]);
        assert!(!check_main(&cyc(81, 4), 81, DEFAULT_CEILING).unwrap().is_certified());
        assert!(check_main(&cyc(12, 1), 12, DEFAULT_CEILING).unwrap().is_certified());
    }

    #[test]
    fn cmain_criterion() {
        assert_eq!(check_cmain(&cyc(380, 3), 95).unwrap().conclusion, [1, 5, 19, 95]);
        assert_eq!(check_cmain(&cyc(546, 5), 273).unwrap().nontrivial(), [3, 7, 13, 21, 39, 91, 273]);
        let r = check_cmain(&cyc(546, 5), 2).unwrap();
        assert!(!r.is_certified());
        assert_eq!(r.failing_line().unwrap().condition, "gcd(f, |Aut(Cl)|) = 1");
        assert!(check_cmain(&FieldDescriptor::new("K", 4, GaloisShape::Elem2(2), ClassData::Number(3)).unwrap(), 2).is_err());
    }

    #[test]
    fn pvaluation_criterion() {
        assert_eq!(check_pvaluation(&cyc(81, 4), 3).unwrap().conclusion, [1, 3, 9, 27]);
        let c = check_pvaluation(&cyc(729, 247), 3).unwrap();
        assert!(c.conclusion.contains(&9));
        assert_eq!(c.nontrivial(), [3, 9, 27]);
        assert!(!check_pvaluation(&cyc(12, 35), 2).unwrap().is_certified());
        assert_eq!(check_pvaluation(&cyc(12, 35), 5), Err(Error::InvalidPrime(5)));
    }

    #[test]
    fn gmain_criterion() {
        let c = check_gmain(&exact(15, &[12]), 5, DEFAULT_CEILING).unwrap();
        assert_eq!(c.subgroup_bound, Some(FiniteAbelianGroup::cyclic(4)));
        let c = check_gmain(&exact(6, &[4]), 3, DEFAULT_CEILING).unwrap();
        assert!(c.subgroup_bound.unwrap().is_trivial());
        let c = check_gmain(&exact(10, &[3, 15]), 5, DEFAULT_CEILING).unwrap();
        assert_eq!(c.failing_line().unwrap().condition, "gcd(f, n_t) = 1");
        let c = check_gmain(&exact(14, &[3, 15]), 7, DEFAULT_CEILING).unwrap();
        assert_eq!(c.subgroup_bound, Some(FiniteAbelianGroup::new(&[3, 15]).unwrap()));
        assert_eq!(c.nontrivial(), [7]);
    }

    #[test]
    fn prime_power_degree() {
        let f = |t, h| FieldDescriptor::new("K", 3u64.pow(t), GaloisShape::PrimePower { q: 3, t }, ClassData::Number(h)).unwrap();
        assert!(check_t41(&f(3, 5), 3).unwrap().is_certified());
        assert!(!check_t41(&f(2, 3), 3).unwrap().is_certified());
        assert!(matches!(check_t41(&f(1, 5), 3), Err(Error::WrongShape(_))));
    }

    #[test]
    fn elementary_two_groups() {
        let f = |t, h| FieldDescriptor::new("K", 1u64 << t, GaloisShape::Elem2(t), ClassData::Number(h)).unwrap();
        assert!(check_t45(&f(2, 3)).unwrap().is_certified());
        assert!(!check_t45(&f(2, 15)).unwrap().is_certified());
        assert!(check_t45(&f(3, 21)).unwrap().is_certified());
    }

    #[test]
    fn two_power_counting() {
        let ex = FieldDescriptor::new("Q(zeta_96)", 32, GaloisShape::Abelian(vec![2, 2, 8]), ClassData::Number(9)).unwrap();
        let c = check_two_power_counting(&ex, DEFAULT_CEILING).unwrap();
        assert!(c.is_certified());
        let paths: Vec<(&str, &str)> =
            c.transcript[1..].iter().map(|l| (l.witnesses[0].1.as_str(), l.witnesses[4].1.as_str())).collect();
        assert!(paths.contains(&("Z/9", "counting")));
        assert!(paths.contains(&("Z/3 x Z/3", "exhaustive")));
        let z2 = |h| FieldDescriptor::new("K", 2, GaloisShape::Cyclic, ClassData::Number(h)).unwrap();
        assert!(!check_two_power_counting(&z2(5), DEFAULT_CEILING).unwrap().is_certified());
        assert!(!check_two_power_counting(&z2(3), DEFAULT_CEILING).unwrap().is_certified());
    }

    #[test]
    fn real_cyclotomic_rows() {
        assert_eq!(r_set_real_cyclotomic(631, ClassData::Number(11)).unwrap(), [3, 7, 9, 21, 63]);
        assert_eq!(r_set_real_cyclotomic(821, ClassData::Number(11)).unwrap(), [41]);
        assert_eq!(r_set_real_cyclotomic(829, ClassData::Number(47)).unwrap(), [3, 9]);
    }

    #[test]
    fn torsion() {
        let c = r_ell_torsion_set(&exact(7, &[11]), 11, DEFAULT_CEILING).unwrap();
        assert_eq!(c.conclusion, [1, 7]);
        let c = r_ell_torsion_set(&exact(7, &[2, 2, 2]), 2, DEFAULT_CEILING).unwrap();
        assert!(!c.is_certified());
        let c = r_ell_torsion_set(&exact(6, &[5]), 11, DEFAULT_CEILING).unwrap();
        assert_eq!(c.conclusion, [1, 2, 3, 6]);
        assert!(matches!(r_ell_torsion_set(&exact(6, &[5]), 3, DEFAULT_CEILING), Err(Error::Unsupported(_))));
    }
}

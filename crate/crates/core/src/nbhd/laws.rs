//! The continuity-inclusion law catalog L1-L7.
//!
//! Each law states that pointwise products of one or two basic neighborhoods
//! land in another basic neighborhood (or a singleton). The defining sets are
//! infinite; a check enumerates tails up to a bound, multiplies pointwise,
//! and tests membership on the target side in exact closed form, so a pass is
//! honest coverage, monotone in the tail bound. Equality laws (L1, L6, L7)
//! additionally check the reverse containment over the truncation.

use std::collections::HashSet;

use super::{unit_nbhd_index_profile, BasicNbhd};
use crate::cz::{cz, CzElement};
use crate::error::{Error, Result};
use crate::ext::{ext_inverse, ext_multiply, ExtElement, Model, ModelSpec};

/// A law identifier with its parameter tuple.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InclusionLaw {
    /// Unit neighborhoods of S1 are stable under products and inversion, and
    /// act as the identity on any fixed element once the tail is deep enough.
    L1 { n: i64 },
    /// Unit-group neighborhood products, inversion (with the index shift the
    /// product law forces), and the two singleton translation identities.
    L2 { i1: i64, i2: i64, j: i64 },
    /// Ideal neighborhood products, inversion, and translation by a fixed
    /// element, with the halved-index side conditions.
    L3 { k1: i64, k2: i64, n: i64 },
    /// Adjoined-unit neighborhoods absorb into ideal neighborhoods in S4.
    L4 { n1: i64, n0: i64, k0: i64 },
    /// Unit-group times ideal neighborhoods in S5.
    L5 { i: i64, n0: i64, p: i64 },
    /// Translating the zero-centered ideal neighborhood by `(i, i+k)` yields
    /// exactly the k-centered one.
    L6 { i: i64, k: i64 },
    /// The displayed forms of a unit-group generator acting on identity
    /// neighborhoods, with `k` the generator's index profile.
    L7 { g: i64, i: i64 },
}

impl InclusionLaw {
    pub fn id(&self) -> &'static str {
        match self {
            InclusionLaw::L1 { .. } => "L1",
            InclusionLaw::L2 { .. } => "L2",
            InclusionLaw::L3 { .. } => "L3",
            InclusionLaw::L4 { .. } => "L4",
            InclusionLaw::L5 { .. } => "L5",
            InclusionLaw::L6 { .. } => "L6",
            InclusionLaw::L7 { .. } => "L7",
        }
    }

    pub fn params(&self) -> Vec<(&'static str, i64)> {
        match *self {
            InclusionLaw::L1 { n } => vec![("n", n)],
            InclusionLaw::L2 { i1, i2, j } => vec![("i1", i1), ("i2", i2), ("j", j)],
            InclusionLaw::L3 { k1, k2, n } => vec![("k1", k1), ("k2", k2), ("n", n)],
            InclusionLaw::L4 { n1, n0, k0 } => vec![("n1", n1), ("n0", n0), ("k0", k0)],
            InclusionLaw::L5 { i, n0, p } => vec![("i", i), ("n0", n0), ("p", p)],
            InclusionLaw::L6 { i, k } => vec![("i", i), ("k", k)],
            InclusionLaw::L7 { g, i } => vec![("g", g), ("i", i)],
        }
    }
}

/// A concrete offender: the factors whose product (or the unproduced member,
/// for reverse checks) violates the stated containment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawFailure {
    pub direction: &'static str,
    pub factors: Vec<String>,
    pub product: String,
    pub target: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LawOutcome {
    Pass,
    Fail(LawFailure),
}

/// Result of checking one law at one parameter tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawCertificate {
    pub law: &'static str,
    pub model: String,
    pub params: Vec<(&'static str, i64)>,
    pub tail_bound: u32,
    pub products_checked: u64,
    pub outcome: LawOutcome,
}

impl LawCertificate {
    pub fn passed(&self) -> bool {
        matches!(self.outcome, LawOutcome::Pass)
    }
}

fn param_err(msg: String) -> Error {
    Error::LawParam(msg)
}

struct Checker<'a> {
    m: &'a ModelSpec,
    tail: u32,
    products: u64,
    failure: Option<LawFailure>,
}

impl<'a> Checker<'a> {
    fn new(m: &'a ModelSpec, tail: u32) -> Self {
        Checker {
            m,
            tail,
            products: 0,
            failure: None,
        }
    }

    fn text(&self, x: ExtElement) -> String {
        self.m
            .format_element(x)
            .unwrap_or_else(|_| format!("{x:?}"))
    }

    fn nbhd_name(&self, nb: &BasicNbhd) -> String {
        format!("U_{}({})", nb.idx(), self.text(nb.center()))
    }

    fn done(&self) -> bool {
        self.failure.is_some()
    }

    /// Pointwise products of two member lists must satisfy the predicate.
    fn products_in(
        &mut self,
        lhs: &[ExtElement],
        rhs: &[ExtElement],
        target: &str,
        pred: impl Fn(&ModelSpec, ExtElement) -> Result<bool>,
    ) -> Result<()> {
        if self.done() {
            return Ok(());
        }
        for &x in lhs {
            for &y in rhs {
                let p = ext_multiply(self.m, x, y)?;
                self.products += 1;
                if !pred(self.m, p)? {
                    self.failure = Some(LawFailure {
                        direction: "forward",
                        factors: vec![self.text(x), self.text(y)],
                        product: self.text(p),
                        target: target.to_string(),
                    });
                    return Ok(());
                }
            }
        }
        Ok(())
    }

    fn products_in_nbhd(
        &mut self,
        lhs: &[ExtElement],
        rhs: &[ExtElement],
        target: &BasicNbhd,
    ) -> Result<()> {
        let name = self.nbhd_name(target);
        self.products_in(lhs, rhs, &name, |_, p| target.contains(p))
    }

    /// Every pointwise product of the member lists must equal `expected`.
    fn products_equal(
        &mut self,
        lhs: &[ExtElement],
        rhs: &[ExtElement],
        expected: ExtElement,
    ) -> Result<()> {
        let name = format!("{{{}}}", self.text(expected));
        self.products_in(lhs, rhs, &name, move |_, p| Ok(p == expected))
    }

    /// Every truncated member of `target` must occur in the product set.
    fn covers(
        &mut self,
        produced: &HashSet<ExtElement>,
        target: &BasicNbhd,
        lhs_desc: &str,
    ) -> Result<()> {
        if self.done() {
            return Ok(());
        }
        for z in target.members_truncated(self.tail) {
            if !produced.contains(&z) {
                self.failure = Some(LawFailure {
                    direction: "reverse",
                    factors: vec![],
                    product: self.text(z),
                    target: format!("product set of {lhs_desc}"),
                });
                return Ok(());
            }
        }
        Ok(())
    }

    fn product_set(&mut self, lhs: &[ExtElement], rhs: &[ExtElement]) -> Result<HashSet<ExtElement>> {
        let mut set = HashSet::new();
        for &x in lhs {
            for &y in rhs {
                set.insert(ext_multiply(self.m, x, y)?);
                self.products += 1;
            }
        }
        Ok(set)
    }

    /// Two finite element sets must coincide.
    fn sets_equal(
        &mut self,
        produced: &HashSet<ExtElement>,
        expected: &HashSet<ExtElement>,
        lhs_desc: &str,
        rhs_desc: &str,
    ) {
        if self.done() {
            return;
        }
        for &p in produced {
            if !expected.contains(&p) {
                self.failure = Some(LawFailure {
                    direction: "forward",
                    factors: vec![lhs_desc.to_string()],
                    product: self.text(p),
                    target: rhs_desc.to_string(),
                });
                return;
            }
        }
        for &e in expected {
            if !produced.contains(&e) {
                self.failure = Some(LawFailure {
                    direction: "reverse",
                    factors: vec![rhs_desc.to_string()],
                    product: self.text(e),
                    target: lhs_desc.to_string(),
                });
                return;
            }
        }
    }
}

/// Checks one law at one parameter tuple against the given model.
///
/// Side-condition violations surface as a parameter error, never as a law
/// failure: the law was not evaluated at all.
pub fn check_law(law: InclusionLaw, m: &ModelSpec, tail_bound: u32) -> Result<LawCertificate> {
    if tail_bound == 0 {
        return Err(param_err("tail bound must be positive".to_string()));
    }
    let mut c = Checker::new(m, tail_bound);
    match law {
        InclusionLaw::L1 { n } => check_l1(&mut c, m, n)?,
        InclusionLaw::L2 { i1, i2, j } => check_l2(&mut c, m, i1, i2, j)?,
        InclusionLaw::L3 { k1, k2, n } => check_l3(&mut c, m, k1, k2, n)?,
        InclusionLaw::L4 { n1, n0, k0 } => check_l4(&mut c, m, n1, n0, k0)?,
        InclusionLaw::L5 { i, n0, p } => check_l5(&mut c, m, i, n0, p)?,
        InclusionLaw::L6 { i, k } => check_l6(&mut c, m, i, k)?,
        InclusionLaw::L7 { g, i } => check_l7(&mut c, m, g, i)?,
    }
    Ok(LawCertificate {
        law: law.id(),
        model: m.to_string(),
        params: law.params(),
        tail_bound,
        products_checked: c.products,
        outcome: match c.failure {
            None => LawOutcome::Pass,
            Some(f) => LawOutcome::Fail(f),
        },
    })
}

fn require_positive(name: &str, v: i64) -> Result<()> {
    if v < 1 {
        Err(param_err(format!("{name} must be positive, got {v}")))
    } else {
        Ok(())
    }
}

fn check_l1(c: &mut Checker, m: &ModelSpec, n: i64) -> Result<()> {
    if !m.has_adjoined_unit() {
        return Err(param_err(format!("L1 needs an adjoined unit, model is {m}")));
    }
    require_positive("n", n)?;
    let u = BasicNbhd::new(*m, ExtElement::AdjoinedUnit, n)?;
    let mem = u.members_truncated(c.tail);

    // U_n(e1) · U_n(e1) = U_n(e1)
    c.products_in_nbhd(&mem, &mem, &u)?;
    let produced = c.product_set(&mem, &mem)?;
    c.covers(&produced, &u, "U_n(e1)·U_n(e1)")?;

    // (U_n(e1))^-1 = U_n(e1)
    if !c.done() {
        let mut inv_set = HashSet::new();
        for &x in &mem {
            inv_set.insert(ext_inverse(m, x)?);
        }
        let mem_set: HashSet<ExtElement> = mem.iter().copied().collect();
        c.sets_equal(&inv_set, &mem_set, "(U_n(e1))^-1", "U_n(e1)");
    }

    // deep-tail neighborhoods act as the identity on fixed elements
    let seq = m.iso_seq();
    for p in -2..=2 {
        for q in -2..=2 {
            if c.done() {
                return Ok(());
            }
            let mut i = 1;
            while seq.m(i) > p.min(q) {
                i += 1;
            }
            let deep = BasicNbhd::new(*m, ExtElement::AdjoinedUnit, i)?;
            let dm = deep.members_truncated(c.tail);
            let fixed = ExtElement::Cz(cz(p, q));
            c.products_equal(&dm, &[fixed], fixed)?;
            c.products_equal(&[fixed], &dm, fixed)?;
        }
    }
    Ok(())
}

fn check_l2(c: &mut Checker, m: &ModelSpec, i1: i64, i2: i64, j: i64) -> Result<()> {
    let k = m
        .unit_modulus()
        .ok_or_else(|| param_err(format!("L2 needs a unit group, model is {m}")))?;
    let n = m.unit_spacing().expect("unit models carry a spacing");
    require_positive("j", j)?;
    let s = k / n;
    let j2 = j - i1 * s;
    if j2 < 1 {
        return Err(param_err(format!(
            "left-factor index j - i1*s = {j2} must be positive"
        )));
    }

    let a = BasicNbhd::new(*m, ExtElement::UnitGroup(i1), j)?;
    let b = BasicNbhd::new(*m, ExtElement::UnitGroup(i2), j2)?;
    let r = BasicNbhd::new(*m, ExtElement::UnitGroup(i1 + i2), j)?;
    let am = a.members_truncated(c.tail);
    let bm = b.members_truncated(c.tail);
    c.products_in_nbhd(&am, &bm, &r)?;

    // inversion carries the same index shift the product law does
    if !c.done() {
        let target = BasicNbhd::new(*m, ExtElement::UnitGroup(-i1), j2)?;
        let name = c.nbhd_name(&target);
        for &x in &am {
            let ix = ext_inverse(m, x)?;
            c.products += 1;
            if !target.contains(ix)? {
                c.failure = Some(LawFailure {
                    direction: "forward",
                    factors: vec![c.text(x)],
                    product: c.text(ix),
                    target: name,
                });
                break;
            }
        }
    }

    // singleton translation identities, where the tail is deep enough
    for p in -3..=3 {
        for q in -3..=3 {
            if c.done() {
                return Ok(());
            }
            if n * j < (-q).max(k * i1 - p) {
                continue;
            }
            let fixed = ExtElement::Cz(cz(p, q));
            c.products_equal(&am, &[fixed], ExtElement::Cz(cz(p - k * i1, q)))?;
            c.products_equal(&[fixed], &am, ExtElement::Cz(cz(p, q + k * i1)))?;
        }
    }
    Ok(())
}

fn check_l3(c: &mut Checker, m: &ModelSpec, k1: i64, k2: i64, n: i64) -> Result<()> {
    if !m.has_ideal() {
        return Err(param_err(format!("L3 needs an ideal part, model is {m}")));
    }
    require_positive("n", n)?;
    if n < k1.abs().max(k2.abs()) {
        return Err(param_err(format!(
            "n = {n} must dominate |k1| = {} and |k2| = {}",
            k1.abs(),
            k2.abs()
        )));
    }

    let a = BasicNbhd::new(*m, ExtElement::IdealGroup(k1), 2 * n)?;
    let b = BasicNbhd::new(*m, ExtElement::IdealGroup(k2), 2 * n)?;
    let r = BasicNbhd::new(*m, ExtElement::IdealGroup(k1 + k2), n)?;
    let am = a.members_truncated(c.tail);
    let bm = b.members_truncated(c.tail);
    c.products_in_nbhd(&am, &bm, &r)?;

    // (U_i(k1))^-1 = U_i(-k1), exact at the same index
    if !c.done() {
        let src = BasicNbhd::new(*m, ExtElement::IdealGroup(k1), n)?;
        let target = BasicNbhd::new(*m, ExtElement::IdealGroup(-k1), n)?;
        let name = c.nbhd_name(&target);
        for x in src.members_truncated(c.tail) {
            let ix = ext_inverse(m, x)?;
            c.products += 1;
            if !target.contains(ix)? {
                c.failure = Some(LawFailure {
                    direction: "forward",
                    factors: vec![c.text(x)],
                    product: c.text(ix),
                    target: name,
                });
                break;
            }
        }
    }

    // translation by a fixed element; n must dominate the target center
    // |k1 + q - p| as well, otherwise the product tail starts below index n
    for p in -3i64..=3 {
        for q in -3i64..=3 {
            if c.done() {
                return Ok(());
            }
            if n < p.abs().max(q.abs()).max(k1.abs()).max((k1 + q - p).abs()) {
                continue;
            }
            let fixed = ExtElement::Cz(cz(p, q));
            let target = BasicNbhd::new(*m, ExtElement::IdealGroup(k1 + q - p), n)?;
            c.products_in_nbhd(&[fixed], &am, &target)?;
            c.products_in_nbhd(&am, &[fixed], &target)?;
        }
    }
    Ok(())
}

fn check_l4(c: &mut Checker, m: &ModelSpec, n1: i64, n0: i64, k0: i64) -> Result<()> {
    if m.model() != Model::S4 {
        return Err(param_err(format!(
            "L4 needs both the adjoined unit and the ideal, model is {m}"
        )));
    }
    require_positive("n1", n1)?;
    require_positive("n0", n0)?;
    let a = BasicNbhd::new(*m, ExtElement::AdjoinedUnit, n1)?;
    let b = BasicNbhd::new(*m, ExtElement::IdealGroup(k0), n0)?;
    let am = a.members_truncated(c.tail);
    let bm = b.members_truncated(c.tail);
    c.products_in_nbhd(&am, &bm, &b)?;
    c.products_in_nbhd(&bm, &am, &b)?;
    Ok(())
}

fn check_l5(c: &mut Checker, m: &ModelSpec, i: i64, n0: i64, p: i64) -> Result<()> {
    let k = match m.model() {
        Model::S5 { k, .. } => k,
        _ => {
            return Err(param_err(format!(
                "L5 needs both the unit group and the ideal, model is {m}"
            )))
        }
    };
    require_positive("p", p)?;
    if p < (k * i).abs().max(n0.abs()) {
        return Err(param_err(format!(
            "p = {p} must dominate |k*i| = {} and |n0| = {}",
            (k * i).abs(),
            n0.abs()
        )));
    }
    let a = BasicNbhd::new(*m, ExtElement::UnitGroup(i), 2 * p)?;
    let b = BasicNbhd::new(*m, ExtElement::IdealGroup(n0), 2 * p)?;
    let r = BasicNbhd::new(*m, ExtElement::IdealGroup(k * i + n0), p)?;
    let am = a.members_truncated(c.tail);
    let bm = b.members_truncated(c.tail);
    c.products_in_nbhd(&am, &bm, &r)?;
    c.products_in_nbhd(&bm, &am, &r)?;
    Ok(())
}

fn check_l6(c: &mut Checker, m: &ModelSpec, i: i64, k: i64) -> Result<()> {
    if !m.has_ideal() {
        return Err(param_err(format!("L6 needs an ideal part, model is {m}")));
    }
    require_positive("i", i)?;
    if k < 0 {
        return Err(param_err(format!("k must be nonnegative, got {k}")));
    }
    let a = BasicNbhd::new(*m, ExtElement::IdealGroup(0), i)?;
    let r = BasicNbhd::new(*m, ExtElement::IdealGroup(k), i)?;
    let fixed = ExtElement::Cz(cz(i, i + k));
    let am = a.members_truncated(c.tail);
    c.products_in_nbhd(&am, &[fixed], &r)?;
    let produced = c.product_set(&am, &[fixed])?;
    c.covers(&produced, &r, "U_i(0)·{(i,i+k)}")?;
    Ok(())
}

fn check_l7(c: &mut Checker, m: &ModelSpec, g: i64, i: i64) -> Result<()> {
    if !m.has_unit_group() {
        return Err(param_err(format!("L7 needs a unit group, model is {m}")));
    }
    if g == 0 {
        return Err(param_err("generator multiplier must be nonzero".to_string()));
    }
    require_positive("i", i)?;
    let gen = ExtElement::UnitGroup(g);
    let gen_nbhd = BasicNbhd::new(*m, gen, 1)?;
    let k_prof = unit_nbhd_index_profile(m, &gen_nbhd)?;

    let unit_base = BasicNbhd::new(*m, ExtElement::UnitGroup(0), i)?;
    let um = unit_base.members_truncated(c.tail);

    let expected_of = |map: &dyn Fn(CzElement) -> CzElement| -> HashSet<ExtElement> {
        um.iter()
            .map(|&x| match x {
                ExtElement::Cz(p) => ExtElement::Cz(map(p)),
                _ => gen,
            })
            .collect()
    };

    // g · U_i(1) = {(c+k, c)} ∪ {g}
    let left = c.product_set(&[gen], &um)?;
    let exp_left = expected_of(&|p| cz(p.a + k_prof, p.b));
    c.sets_equal(&left, &exp_left, "g·U_i(1)", "{(m+k,m)} ∪ {g}");

    // U_i(1) · g = {(c, c-k)} ∪ {g}
    if !c.done() {
        let right = c.product_set(&um, &[gen])?;
        let exp_right = expected_of(&|p| cz(p.a, p.b - k_prof));
        c.sets_equal(&right, &exp_right, "U_i(1)·g", "{(m,m-k)} ∪ {g}");
    }
    Ok(())
}

//! Parametric neighborhood bases for the model topologies, the solution sets
//! that isolate points of the core semigroup, and the closure-structure sets
//! of the remainder.
//!
//! Basic neighborhoods are infinite, but membership is decidable in closed
//! form for any element, so inclusion laws can be certified by multiplying a
//! truncated tail pointwise and testing exact membership on the other side.

pub mod laws;

pub use laws::{check_law, InclusionLaw, LawCertificate, LawFailure, LawOutcome};

use crate::cz::{cz, multiply, CzElement, Side, Window};
use crate::error::{Error, Result};
use crate::ext::{classify, ext_multiply, universe, ElementClass, ExtElement, ModelSpec};

/// One basic open set of a model topology: a non-core center plus a tail of
/// core elements indexed from `idx` on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BasicNbhd {
    model: ModelSpec,
    center: ExtElement,
    idx: i64,
}

impl BasicNbhd {
    pub fn new(model: ModelSpec, center: ExtElement, idx: i64) -> Result<Self> {
        model.validate_element(center)?;
        if matches!(center, ExtElement::Cz(_)) {
            return Err(Error::InvalidCenter(
                "core elements are isolated and have no parametric base".to_string(),
            ));
        }
        if idx < 1 {
            return Err(Error::InvalidCenter(format!(
                "base index must be positive, got {idx}"
            )));
        }
        Ok(BasicNbhd { model, center, idx })
    }

    pub fn model(&self) -> &ModelSpec {
        &self.model
    }

    pub fn center(&self) -> ExtElement {
        self.center
    }

    pub fn idx(&self) -> i64 {
        self.idx
    }

    /// Exact closed-form membership; no truncation.
    pub fn contains(&self, x: ExtElement) -> Result<bool> {
        self.model.validate_element(x)?;
        if x == self.center {
            return Ok(true);
        }
        let p = match x {
            ExtElement::Cz(p) => p,
            _ => return Ok(false),
        };
        Ok(match self.center {
            ExtElement::AdjoinedUnit => {
                p.a == p.b
                    && self
                        .model
                        .iso_seq()
                        .index_of(p.a)
                        .is_some_and(|i| i >= self.idx)
            }
            ExtElement::UnitGroup(i0) => {
                let k = self.model.unit_modulus().expect("validated center");
                let n = self.model.unit_spacing().expect("validated center");
                p.b - p.a == k * i0 && p.a % n == 0 && -p.a / n >= self.idx
            }
            ExtElement::IdealGroup(g) => p.b - p.a == g && p.a.min(p.b) >= self.idx,
            ExtElement::Cz(_) => unreachable!("constructor rejects core centers"),
        })
    }

    /// The center plus the tail members with index in `[idx, idx + tail_bound]`.
    pub fn members_truncated(&self, tail_bound: u32) -> Vec<ExtElement> {
        let mut v = vec![self.center];
        let hi = self.idx + tail_bound as i64;
        match self.center {
            ExtElement::AdjoinedUnit => {
                let seq = self.model.iso_seq();
                v.extend((self.idx..=hi).map(|i| ExtElement::Cz(cz(seq.m(i), seq.m(i)))));
            }
            ExtElement::UnitGroup(i0) => {
                let k = self.model.unit_modulus().expect("validated center");
                let n = self.model.unit_spacing().expect("validated center");
                v.extend(
                    (self.idx..=hi).map(|q| ExtElement::Cz(cz(-n * q, -n * q + k * i0))),
                );
            }
            ExtElement::IdealGroup(g) => {
                if g >= 0 {
                    v.extend((self.idx..=hi).map(|a| ExtElement::Cz(cz(a, a + g))));
                } else {
                    v.extend((self.idx..=hi).map(|a| ExtElement::Cz(cz(a - g, a))));
                }
            }
            ExtElement::Cz(_) => unreachable!("constructor rejects core centers"),
        }
        v
    }
}

/// Closed-form membership test for a basic neighborhood.
pub fn nbhd_contains(nb: &BasicNbhd, x: ExtElement) -> Result<bool> {
    nb.contains(x)
}

/// Brute-force solution set `{(x,y) in w^2 : (x,y)·(b,a) = (a,a)}`, in
/// lexicographic order.
pub fn dl_set(a: i64, b: i64, w: Window) -> Result<Vec<CzElement>> {
    let gen = cz(b, a);
    let target = cz(a, a);
    let mut out = Vec::new();
    for x in w.iter() {
        if multiply(x, gen)? == target {
            out.push(x);
        }
    }
    Ok(out)
}

/// The closed form of the same set: `{(x,y) : x - y = a - b, x <= a}` cut to
/// the window. Kept separate so the two routes stay independently checkable.
pub fn dl_set_closed_form(a: i64, b: i64, w: Window) -> Vec<CzElement> {
    let d = a - b;
    let mut out = Vec::new();
    for x in w.lo()..=a.min(w.hi()) {
        let y = x - d;
        if y >= w.lo() && y <= w.hi() {
            out.push(cz(x, y));
        }
    }
    out
}

/// Outcome of the singleton set-difference identity at window scale.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SingletonStatus {
    Holds,
    Fails,
    /// The window cannot witness the subtracted set, so no verdict is issued.
    Inconclusive,
}

/// Checks `{(a,b)} = DL(a,b) \ DL(a-1,b-1)` inside the window.
pub fn singleton_identity(a: i64, b: i64, w: Window) -> Result<SingletonStatus> {
    if !w.contains(cz(a, b)) {
        return Err(Error::OutsideWindow {
            a,
            b,
            lo: w.lo(),
            hi: w.hi(),
        });
    }
    if a - 1 < w.lo() || b - 1 < w.lo() {
        return Ok(SingletonStatus::Inconclusive);
    }
    let big = dl_set(a, b, w)?;
    let small = dl_set(a - 1, b - 1, w)?;
    let diff: Vec<CzElement> = big
        .into_iter()
        .filter(|x| small.binary_search(x).is_err())
        .collect();
    if diff == [cz(a, b)] {
        Ok(SingletonStatus::Holds)
    } else {
        Ok(SingletonStatus::Fails)
    }
}

/// A translate that escapes a candidate neighborhood of `(a,a)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiscretenessWitness {
    pub offender: CzElement,
    pub escape: CzElement,
    pub side: Side,
}

/// Searches a finite candidate neighborhood of `(a,a)` for a point whose
/// translate by `(a,a)` must leave it: an offender `(x,y)` with `x < y <= a`
/// escapes left to `(a, a+(y-x))`, one with `y < x <= a` escapes right to
/// `(a+(x-y), a)`.
pub fn discreteness_witness(a: i64, v: &[CzElement]) -> Result<Option<DiscretenessWitness>> {
    if !v.contains(&cz(a, a)) {
        return Err(Error::CenterMissing(a));
    }
    let mut sorted: Vec<CzElement> = v.to_vec();
    sorted.sort_unstable();
    for &p in &sorted {
        if p.a < p.b && p.b <= a {
            return Ok(Some(DiscretenessWitness {
                offender: p,
                escape: cz(a, a + (p.b - p.a)),
                side: Side::Left,
            }));
        }
    }
    for &p in &sorted {
        if p.b < p.a && p.a <= a {
            return Ok(Some(DiscretenessWitness {
                offender: p,
                escape: cz(a + (p.a - p.b), a),
                side: Side::Right,
            }));
        }
    }
    Ok(None)
}

/// All bounded model elements `x` with `x·(b,b) = (a,b)`.
pub fn upset(
    m: &ModelSpec,
    a: i64,
    b: i64,
    w: Window,
    group_bound: i64,
) -> Result<Vec<ExtElement>> {
    let sets = upset_definitions(m, a, b, w, group_bound)?;
    debug_assert_eq!(sets[0], sets[1]);
    debug_assert_eq!(sets[0], sets[2]);
    let [first, ..] = sets;
    Ok(first)
}

/// The same set computed through each of its three defining conditions:
/// `x·(b,b) = (a,b)`, `(a,a)·x = (a,b)`, and `(a,a)·x·(b,b) = (a,b)`.
pub fn upset_definitions(
    m: &ModelSpec,
    a: i64,
    b: i64,
    w: Window,
    group_bound: i64,
) -> Result<[Vec<ExtElement>; 3]> {
    let eb = ExtElement::Cz(cz(b, b));
    let ea = ExtElement::Cz(cz(a, a));
    let target = ExtElement::Cz(cz(a, b));
    let mut by_right = Vec::new();
    let mut by_left = Vec::new();
    let mut by_both = Vec::new();
    for x in universe(m, w, group_bound)? {
        if ext_multiply(m, x, eb)? == target {
            by_right.push(x);
        }
        if ext_multiply(m, ea, x)? == target {
            by_left.push(x);
        }
        if ext_multiply(m, ext_multiply(m, ea, x)?, eb)? == target {
            by_both.push(x);
        }
    }
    Ok([by_right, by_left, by_both])
}

/// The boundary decomposition of the non-core part of a model, scanned within
/// bounds. `left_eq_right` and `ideal_absorbs` record the structural claims a
/// verification run must confirm.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundarySets {
    pub left: Vec<ExtElement>,
    pub right: Vec<ExtElement>,
    pub ideal: Vec<ExtElement>,
    pub left_eq_right: bool,
    pub ideal_absorbs: bool,
}

/// Scans non-core elements against core witnesses: `left` collects those with
/// some `x·y` back in the core, `right` those with some `y·x` in the core,
/// and `ideal` the rest.
pub fn boundary_sets(m: &ModelSpec, w: Window, group_bound: i64) -> Result<BoundarySets> {
    let elems = universe(m, w, group_bound)?;
    let core: Vec<ExtElement> = w.iter().map(ExtElement::Cz).collect();
    let mut left = Vec::new();
    let mut right = Vec::new();
    let mut ideal = Vec::new();
    for &x in &elems {
        if matches!(x, ExtElement::Cz(_)) {
            continue;
        }
        let mut in_left = false;
        let mut in_right = false;
        for &y in &core {
            if !in_left && matches!(ext_multiply(m, x, y)?, ExtElement::Cz(_)) {
                in_left = true;
            }
            if !in_right && matches!(ext_multiply(m, y, x)?, ExtElement::Cz(_)) {
                in_right = true;
            }
            if in_left && in_right {
                break;
            }
        }
        if in_left {
            left.push(x);
        }
        if in_right {
            right.push(x);
        }
        if !in_left && !in_right {
            ideal.push(x);
        }
    }
    let left_eq_right = left == right;
    let mut ideal_absorbs = true;
    'outer: for &i in &ideal {
        for &x in &elems {
            let a = classify(m, ext_multiply(m, i, x)?)?;
            let b = classify(m, ext_multiply(m, x, i)?)?;
            if a != ElementClass::IdealPart || b != ElementClass::IdealPart {
                ideal_absorbs = false;
                break 'outer;
            }
        }
    }
    Ok(BoundarySets {
        left,
        right,
        ideal,
        left_eq_right,
        ideal_absorbs,
    })
}

/// The constant index value taken by the core members of a neighborhood
/// centered at a unit: 0 at the adjoined unit, `-k*i` at the unit-group
/// element `k*i`.
pub fn unit_nbhd_index_profile(m: &ModelSpec, nb: &BasicNbhd) -> Result<i64> {
    match nb.center() {
        ExtElement::AdjoinedUnit => Ok(0),
        ExtElement::UnitGroup(i) => {
            let k = m.unit_modulus().ok_or_else(|| {
                Error::InvalidCenter("model has no unit group".to_string())
            })?;
            Ok(-k * i)
        }
        other => Err(Error::InvalidCenter(format!(
            "index profile is defined only at unit centers, got {other:?}"
        ))),
    }
}

/// Idempotents of the bounded model universe, found by squaring.
pub fn idempotents_in_bounds(
    m: &ModelSpec,
    w: Window,
    group_bound: i64,
) -> Result<Vec<ExtElement>> {
    let mut out = Vec::new();
    for x in universe(m, w, group_bound)? {
        if ext_multiply(m, x, x)? == x {
            out.push(x);
        }
    }
    Ok(out)
}

/// Natural partial order on idempotents across sorts: `e <= f` iff both
/// products collapse to `e`.
pub fn ext_idem_leq(m: &ModelSpec, e: ExtElement, f: ExtElement) -> Result<bool> {
    Ok(ext_multiply(m, e, f)? == e && ext_multiply(m, f, e)? == e)
}

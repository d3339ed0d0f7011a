//! The five extension semigroups S1-S5 as total multiplication tables over a
//! multi-sort element type.
//!
//! S1 adjoins a unit, S2 a group of units isomorphic to `kZ`, S3 an ideal copy
//! of the integers, S4 is S3 with the adjoined unit, and S5 carries both the
//! unit group and the ideal. Unit-group elements are stored by their
//! multiplier `i` (the element is `k*i`), so the divisor constraint on the
//! model parameters stays checkable independently of element values.

use std::fmt;

use crate::cz::{cz, multiply, CzElement, Window};
use crate::error::{Error, Result};

/// Element of one of the extension semigroups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExtElement {
    Cz(CzElement),
    AdjoinedUnit,
    /// The unit-group element `k*i`, stored by its multiplier `i`.
    UnitGroup(i64),
    /// The ideal-group element `n`.
    IdealGroup(i64),
}

impl From<CzElement> for ExtElement {
    fn from(x: CzElement) -> Self {
        ExtElement::Cz(x)
    }
}

/// Coarse classification of an element's position in its model.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ElementClass {
    CzPart,
    Unit,
    UnitGroupPart,
    IdealPart,
}

/// Which semigroup, with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Model {
    PlainCz,
    S1,
    S2 { k: i64, n_div: i64 },
    S3,
    S4,
    S5 { k: i64, n_div: i64 },
}

/// Descriptor of the decreasing sequence of negative integers used by the
/// isolated-point bases of S1/S4: `m_i = start - (i - 1) * step`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IsoSeq {
    start: i64,
    step: i64,
}

impl Default for IsoSeq {
    fn default() -> Self {
        IsoSeq { start: -1, step: 1 }
    }
}

impl IsoSeq {
    pub fn new(start: i64, step: i64) -> Result<Self> {
        if start >= 0 {
            return Err(Error::ModelParam(format!(
                "sequence start must be negative, got {start}"
            )));
        }
        if step < 1 {
            return Err(Error::ModelParam(format!(
                "sequence step must be positive, got {step}"
            )));
        }
        Ok(IsoSeq { start, step })
    }

    /// The i-th member, i >= 1.
    pub fn m(&self, i: i64) -> i64 {
        self.start - (i - 1) * self.step
    }

    /// Position of `v` in the sequence, if it occurs.
    pub fn index_of(&self, v: i64) -> Option<i64> {
        let d = self.start - v;
        if d >= 0 && d % self.step == 0 {
            Some(d / self.step + 1)
        } else {
            None
        }
    }
}

/// A model together with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ModelSpec {
    model: Model,
    iso_seq: IsoSeq,
}

impl ModelSpec {
    pub fn new(model: Model) -> Result<Self> {
        if let Model::S2 { k, n_div } | Model::S5 { k, n_div } = model {
            if k < 1 {
                return Err(Error::ModelParam(format!("k must be positive, got {k}")));
            }
            if n_div < 1 || k % n_div != 0 {
                return Err(Error::ModelParam(format!(
                    "n must be a positive divisor of k, got k={k}, n={n_div}"
                )));
            }
        }
        Ok(ModelSpec {
            model,
            iso_seq: IsoSeq::default(),
        })
    }

    pub fn plain_cz() -> Self {
        ModelSpec::new(Model::PlainCz).unwrap()
    }

    pub fn s1() -> Self {
        ModelSpec::new(Model::S1).unwrap()
    }

    pub fn s2(k: i64, n_div: i64) -> Result<Self> {
        ModelSpec::new(Model::S2 { k, n_div })
    }

    pub fn s3() -> Self {
        ModelSpec::new(Model::S3).unwrap()
    }

    pub fn s4() -> Self {
        ModelSpec::new(Model::S4).unwrap()
    }

    pub fn s5(k: i64, n_div: i64) -> Result<Self> {
        ModelSpec::new(Model::S5 { k, n_div })
    }

    /// Replace the default isolated-point sequence (S1/S4 only).
    pub fn with_iso_seq(mut self, seq: IsoSeq) -> Self {
        self.iso_seq = seq;
        self
    }

    pub fn model(&self) -> Model {
        self.model
    }

    pub fn iso_seq(&self) -> IsoSeq {
        self.iso_seq
    }

    /// The unit-group modulus `k`, in models that carry a unit group.
    pub fn unit_modulus(&self) -> Option<i64> {
        match self.model {
            Model::S2 { k, .. } | Model::S5 { k, .. } => Some(k),
            _ => None,
        }
    }

    /// The base-set spacing `n` of the unit-group neighborhoods.
    pub fn unit_spacing(&self) -> Option<i64> {
        match self.model {
            Model::S2 { n_div, .. } | Model::S5 { n_div, .. } => Some(n_div),
            _ => None,
        }
    }

    pub fn has_adjoined_unit(&self) -> bool {
        matches!(self.model, Model::S1 | Model::S4)
    }

    pub fn has_unit_group(&self) -> bool {
        matches!(self.model, Model::S2 { .. } | Model::S5 { .. })
    }

    pub fn has_ideal(&self) -> bool {
        matches!(self.model, Model::S3 | Model::S4 | Model::S5 { .. })
    }

    pub fn validate_element(&self, x: ExtElement) -> Result<()> {
        let ok = match x {
            ExtElement::Cz(_) => true,
            ExtElement::AdjoinedUnit => self.has_adjoined_unit(),
            ExtElement::UnitGroup(_) => self.has_unit_group(),
            ExtElement::IdealGroup(_) => self.has_ideal(),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidSort {
                model: self.to_string(),
                elem: self.format_element_lossy(x),
            })
        }
    }

    /// Element text form: `(a,b)`, `e1`, `g:<value>` (value = k*i), `z:<n>`.
    pub fn format_element(&self, x: ExtElement) -> Result<String> {
        self.validate_element(x)?;
        Ok(self.format_element_lossy(x))
    }

    fn format_element_lossy(&self, x: ExtElement) -> String {
        match x {
            ExtElement::Cz(p) => p.to_string(),
            ExtElement::AdjoinedUnit => "e1".to_string(),
            ExtElement::UnitGroup(i) => {
                let k = self.unit_modulus().unwrap_or(1);
                format!("g:{}", k * i)
            }
            ExtElement::IdealGroup(n) => format!("z:{n}"),
        }
    }

    /// Parse one element in the text grammar of this model.
    pub fn parse_element(&self, s: &str) -> Result<ExtElement> {
        let s = s.trim();
        let elem = if s == "e1" {
            ExtElement::AdjoinedUnit
        } else if let Some(v) = s.strip_prefix("g:") {
            let value: i64 = v
                .parse()
                .map_err(|_| Error::Parse(format!("bad unit-group value: {s}")))?;
            let k = self.unit_modulus().ok_or_else(|| Error::InvalidSort {
                model: self.to_string(),
                elem: s.to_string(),
            })?;
            if value % k != 0 {
                return Err(Error::Parse(format!(
                    "unit-group value {value} is not a multiple of k={k}"
                )));
            }
            ExtElement::UnitGroup(value / k)
        } else if let Some(v) = s.strip_prefix("z:") {
            let n: i64 = v
                .parse()
                .map_err(|_| Error::Parse(format!("bad ideal value: {s}")))?;
            ExtElement::IdealGroup(n)
        } else {
            ExtElement::Cz(parse_cz_pair(s)?)
        };
        self.validate_element(elem)?;
        Ok(elem)
    }

    /// Model text form, inverse of the parser below.
    pub fn parse(s: &str) -> Result<ModelSpec> {
        let s = s.trim();
        match s {
            "cz" => return Ok(ModelSpec::plain_cz()),
            "s1" => return Ok(ModelSpec::s1()),
            "s3" => return Ok(ModelSpec::s3()),
            "s4" => return Ok(ModelSpec::s4()),
            _ => {}
        }
        let parse_params = |rest: &str| -> Result<(i64, i64)> {
            let mut k = None;
            let mut n = None;
            for part in rest.split(',') {
                if let Some(v) = part.strip_prefix("k=") {
                    k = Some(
                        v.parse()
                            .map_err(|_| Error::Parse(format!("bad k in model: {s}")))?,
                    );
                } else if let Some(v) = part.strip_prefix("n=") {
                    n = Some(
                        v.parse()
                            .map_err(|_| Error::Parse(format!("bad n in model: {s}")))?,
                    );
                } else {
                    return Err(Error::Parse(format!("bad model parameter: {part}")));
                }
            }
            match (k, n) {
                (Some(k), Some(n)) => Ok((k, n)),
                _ => Err(Error::Parse(format!("model {s} needs k=<k>,n=<n>"))),
            }
        };
        if let Some(rest) = s.strip_prefix("s2:") {
            let (k, n) = parse_params(rest)?;
            ModelSpec::s2(k, n)
        } else if let Some(rest) = s.strip_prefix("s5:") {
            let (k, n) = parse_params(rest)?;
            ModelSpec::s5(k, n)
        } else {
            Err(Error::Parse(format!("unknown model: {s}")))
        }
    }
}

impl fmt::Display for ModelSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.model {
            Model::PlainCz => write!(f, "cz"),
            Model::S1 => write!(f, "s1"),
            Model::S2 { k, n_div } => write!(f, "s2:k={k},n={n_div}"),
            Model::S3 => write!(f, "s3"),
            Model::S4 => write!(f, "s4"),
            Model::S5 { k, n_div } => write!(f, "s5:k={k},n={n_div}"),
        }
    }
}

fn parse_cz_pair(s: &str) -> Result<CzElement> {
    let inner = s
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("expected (a,b), got {s}")))?;
    let mut parts = inner.splitn(2, ',');
    let a = parts
        .next()
        .and_then(|t| t.trim().parse().ok())
        .ok_or_else(|| Error::Parse(format!("bad first coordinate in {s}")))?;
    let b = parts
        .next()
        .and_then(|t| t.trim().parse().ok())
        .ok_or_else(|| Error::Parse(format!("bad second coordinate in {s}")))?;
    Ok(cz(a, b))
}

fn add(x: i64, y: i64) -> Result<i64> {
    x.checked_add(y).ok_or(Error::ArithmeticOverflow)
}

fn sub(x: i64, y: i64) -> Result<i64> {
    x.checked_sub(y).ok_or(Error::ArithmeticOverflow)
}

/// Full case table of the extended product.
pub fn ext_multiply(m: &ModelSpec, x: ExtElement, y: ExtElement) -> Result<ExtElement> {
    use ExtElement::*;
    m.validate_element(x)?;
    m.validate_element(y)?;
    let k = m.unit_modulus().unwrap_or(0);
    Ok(match (x, y) {
        (Cz(p), Cz(q)) => Cz(multiply(p, q)?),
        // the adjoined unit is the identity of S1/S4
        (AdjoinedUnit, z) => z,
        (z, AdjoinedUnit) => z,
        // the unit group shifts indices
        (UnitGroup(i), Cz(p)) => Cz(cz(sub(p.a, k * i)?, p.b)),
        (Cz(p), UnitGroup(i)) => Cz(cz(p.a, add(p.b, k * i)?)),
        (UnitGroup(i), UnitGroup(j)) => UnitGroup(add(i, j)?),
        // the ideal absorbs
        (Cz(p), IdealGroup(n)) | (IdealGroup(n), Cz(p)) => {
            IdealGroup(add(n, sub(p.b, p.a)?)?)
        }
        (UnitGroup(i), IdealGroup(n)) | (IdealGroup(n), UnitGroup(i)) => {
            IdealGroup(add(k * i, n)?)
        }
        (IdealGroup(n), IdealGroup(p)) => IdealGroup(add(n, p)?),
    })
}

/// Sort-wise inversion.
pub fn ext_inverse(m: &ModelSpec, x: ExtElement) -> Result<ExtElement> {
    use ExtElement::*;
    m.validate_element(x)?;
    Ok(match x {
        Cz(p) => Cz(cz(p.b, p.a)),
        AdjoinedUnit => AdjoinedUnit,
        UnitGroup(i) => UnitGroup(-i),
        IdealGroup(n) => IdealGroup(-n),
    })
}

/// Which structural part of the model an element belongs to.
pub fn classify(m: &ModelSpec, x: ExtElement) -> Result<ElementClass> {
    m.validate_element(x)?;
    Ok(match x {
        ExtElement::Cz(_) => ElementClass::CzPart,
        ExtElement::AdjoinedUnit => ElementClass::Unit,
        ExtElement::UnitGroup(_) => ElementClass::UnitGroupPart,
        ExtElement::IdealGroup(_) => ElementClass::IdealPart,
    })
}

/// All model elements within bounds, in deterministic order: the adjoined
/// unit, then the window box lexicographically, then unit-group and ideal
/// elements by value.
pub fn universe(m: &ModelSpec, w: Window, group_bound: i64) -> Result<Vec<ExtElement>> {
    if group_bound < 0 {
        return Err(Error::ModelParam(format!(
            "group bound must be nonnegative, got {group_bound}"
        )));
    }
    let mut v = Vec::new();
    if m.has_adjoined_unit() {
        v.push(ExtElement::AdjoinedUnit);
    }
    v.extend(w.iter().map(ExtElement::Cz));
    if m.has_unit_group() {
        v.extend((-group_bound..=group_bound).map(ExtElement::UnitGroup));
    }
    if m.has_ideal() {
        v.extend((-group_bound..=group_bound).map(ExtElement::IdealGroup));
    }
    Ok(v)
}

/// Outcome of an exhaustive associativity sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssocReport {
    pub cases: u64,
    pub violation: Option<AssocViolation>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssocViolation {
    pub x: ExtElement,
    pub y: ExtElement,
    pub z: ExtElement,
    pub lhs: ExtElement,
    pub rhs: ExtElement,
}

impl AssocReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

/// Exhaustively check `(x·y)·z = x·(y·z)` over all triples from the bounded
/// universe; stops at the first counterexample.
pub fn associativity_report(m: &ModelSpec, w: Window, group_bound: i64) -> Result<AssocReport> {
    let elems = universe(m, w, group_bound)?;
    let mut cases = 0u64;
    for &x in &elems {
        for &y in &elems {
            let xy = ext_multiply(m, x, y)?;
            for &z in &elems {
                cases += 1;
                let lhs = ext_multiply(m, xy, z)?;
                let rhs = ext_multiply(m, x, ext_multiply(m, y, z)?)?;
                if lhs != rhs {
                    return Ok(AssocReport {
                        cases,
                        violation: Some(AssocViolation { x, y, z, lhs, rhs }),
                    });
                }
            }
        }
    }
    Ok(AssocReport {
        cases,
        violation: None,
    })
}

/// The natural map onto the ideal part: `x -> x · IdealGroup(0)`.
pub fn hom_to_ideal(m: &ModelSpec, x: ExtElement) -> Result<ExtElement> {
    if !m.has_ideal() {
        return Err(Error::InvalidSort {
            model: m.to_string(),
            elem: "z:0".to_string(),
        });
    }
    ext_multiply(m, x, ExtElement::IdealGroup(0))
}

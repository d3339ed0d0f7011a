//! Exact arithmetic and structure theory of the extended bicyclic semigroup.
//!
//! Elements are pairs of integers `(a, b)` multiplied by the three-case rule
//!
//! ```text
//! (a,b)·(c,d) = (a-b+c, d)   if b < c
//!             = (a, d)       if b = c
//!             = (a, d+b-c)   if b > c
//! ```
//!
//! All index arithmetic is checked; overflow is reported, never wrapped.

use std::fmt;

use crate::error::{Error, Result};

/// An element of the extended bicyclic semigroup: an ordered pair of integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CzElement {
    pub a: i64,
    pub b: i64,
}

/// Shorthand constructor.
pub const fn cz(a: i64, b: i64) -> CzElement {
    CzElement { a, b }
}

impl CzElement {
    pub const fn new(a: i64, b: i64) -> Self {
        CzElement { a, b }
    }
}

impl From<(i64, i64)> for CzElement {
    fn from((a, b): (i64, i64)) -> Self {
        CzElement { a, b }
    }
}

impl fmt::Display for CzElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// The five Green relations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GreenRelation {
    R,
    L,
    H,
    D,
    J,
}

/// Which side a translation acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// An inclusive coordinate box used to truncate exhaustive checks.
///
/// A window `[lo, hi]` bounds both coordinates, so it holds exactly
/// `(hi - lo + 1)^2` elements. Degenerate windows (`lo == hi`) are legal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Window {
    lo: i64,
    hi: i64,
}

impl Window {
    pub fn new(lo: i64, hi: i64) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidWindow { lo, hi });
        }
        Ok(Window { lo, hi })
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.hi
    }

    pub fn side_len(&self) -> i64 {
        self.hi - self.lo + 1
    }

    /// Number of elements in the window box.
    pub fn len(&self) -> u64 {
        let s = self.side_len() as u64;
        s * s
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, x: CzElement) -> bool {
        self.lo <= x.a && x.a <= self.hi && self.lo <= x.b && x.b <= self.hi
    }

    /// Lexicographic enumeration on `(a, b)`; the order every report relies on.
    pub fn iter(&self) -> impl Iterator<Item = CzElement> + '_ {
        let (lo, hi) = (self.lo, self.hi);
        (lo..=hi).flat_map(move |a| (lo..=hi).map(move |b| cz(a, b)))
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.lo, self.hi)
    }
}

fn add(x: i64, y: i64) -> Result<i64> {
    x.checked_add(y).ok_or(Error::ArithmeticOverflow)
}

fn sub(x: i64, y: i64) -> Result<i64> {
    x.checked_sub(y).ok_or(Error::ArithmeticOverflow)
}

/// The three-case product.
pub fn multiply(x: CzElement, y: CzElement) -> Result<CzElement> {
    let (a, b) = (x.a, x.b);
    let (c, d) = (y.a, y.b);
    if b < c {
        Ok(cz(add(sub(a, b)?, c)?, d))
    } else if b == c {
        Ok(cz(a, d))
    } else {
        Ok(cz(a, add(d, sub(b, c)?)?))
    }
}

/// The inverse of `(a, b)` is `(b, a)`.
pub fn inverse(x: CzElement) -> CzElement {
    cz(x.b, x.a)
}

/// Idempotents are exactly the diagonal pairs.
pub fn is_idempotent(x: CzElement) -> bool {
    x.a == x.b
}

fn require_idempotent(x: CzElement) -> Result<()> {
    if is_idempotent(x) {
        Ok(())
    } else {
        Err(Error::NotIdempotent(x.a, x.b))
    }
}

/// Natural partial order on idempotents: `(a,a) <= (b,b)` iff `a >= b`.
pub fn idem_leq(e: CzElement, f: CzElement) -> Result<bool> {
    require_idempotent(e)?;
    require_idempotent(f)?;
    Ok(e.a >= f.a)
}

/// Meet of two idempotents in the semilattice `(Z, max)`; equals their product.
pub fn idem_meet(e: CzElement, f: CzElement) -> Result<CzElement> {
    require_idempotent(e)?;
    require_idempotent(f)?;
    let m = e.a.max(f.a);
    Ok(cz(m, m))
}

/// The index homomorphism onto the additive integers: `(a, b) -> a - b`.
pub fn index(x: CzElement) -> Result<i64> {
    sub(x.a, x.b)
}

/// Green-relation test via the coordinate characterization: `R` compares first
/// coordinates, `L` second, `H` both; `D` and `J` relate everything.
pub fn green_related(x: CzElement, y: CzElement, rel: GreenRelation) -> bool {
    match rel {
        GreenRelation::R => x.a == y.a,
        GreenRelation::L => x.b == y.b,
        GreenRelation::H => x.a == y.a && x.b == y.b,
        GreenRelation::D | GreenRelation::J => true,
    }
}

/// An element `x` with `x·x⁻¹ = e` and `x⁻¹·x = f`, for idempotents `e`, `f`.
pub fn connecting_element(e: CzElement, f: CzElement) -> Result<CzElement> {
    require_idempotent(e)?;
    require_idempotent(f)?;
    Ok(cz(e.a, f.a))
}

/// Membership in the principal right ideal generated by `gen`.
pub fn in_principal_right_ideal(x: CzElement, gen: CzElement) -> bool {
    x.a >= gen.a
}

/// Membership in the principal left ideal generated by `gen`.
pub fn in_principal_left_ideal(x: CzElement, gen: CzElement) -> bool {
    x.b >= gen.b
}

/// A bicyclic-semigroup word in canonical form `q^i p^j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BicyclicWord {
    pub q_exp: i64,
    pub p_exp: i64,
}

impl BicyclicWord {
    /// Normal-form product: rewrite with `p q = 1` until canonical.
    pub fn mul(self, rhs: BicyclicWord) -> Result<BicyclicWord> {
        let (i, j) = (self.q_exp, self.p_exp);
        let (k, l) = (rhs.q_exp, rhs.p_exp);
        if j < k {
            Ok(BicyclicWord {
                q_exp: add(i, sub(k, j)?)?,
                p_exp: l,
            })
        } else if j == k {
            Ok(BicyclicWord { q_exp: i, p_exp: l })
        } else {
            Ok(BicyclicWord {
                q_exp: i,
                p_exp: add(l, sub(j, k)?)?,
            })
        }
    }
}

impl fmt::Display for BicyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q^{} p^{}", self.q_exp, self.p_exp)
    }
}

/// Isomorphism from the corner subsemigroup at `n` onto the bicyclic semigroup:
/// `(a, b) -> q^(a-n) p^(b-n)`, defined when both coordinates are at least `n`.
pub fn bicyclic_embed(n: i64, x: CzElement) -> Result<BicyclicWord> {
    if x.a < n || x.b < n {
        return Err(Error::OutsideCorner { n, a: x.a, b: x.b });
    }
    Ok(BicyclicWord {
        q_exp: sub(x.a, n)?,
        p_exp: sub(x.b, n)?,
    })
}

/// Brute-force translation solver: the first `u` in lexicographic window order
/// with `gen·u = target` (right) or `u·gen = target` (left), if any.
pub fn solve_translation(
    gen: CzElement,
    target: CzElement,
    side: Side,
    w: Window,
) -> Result<Option<CzElement>> {
    for u in w.iter() {
        let p = match side {
            Side::Right => multiply(gen, u)?,
            Side::Left => multiply(u, gen)?,
        };
        if p == target {
            return Ok(Some(u));
        }
    }
    Ok(None)
}

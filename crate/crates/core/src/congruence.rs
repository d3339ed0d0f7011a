//! The congruence lattice of the extended bicyclic semigroup.
//!
//! Every non-trivial congruence is a group congruence with cyclic quotient, so
//! the whole lattice is `Identity` plus the family `sigma_k` relating elements
//! whose indices agree mod `k` (`k = 0` reads as plain index equality).
//! `saturate_window` is the independent brute-force oracle: it closes a set of
//! generator pairs under in-window translations and reports the resulting
//! partition, with no reference to the gcd classification.

use std::fmt;

use crate::cz::{cz, index, multiply, CzElement, Window};
use crate::error::{Error, Result};

/// Identity congruence or a member of the mod-k family.
///
/// `SigmaK(0)` is the minimal group congruence (quotient `Z`), `SigmaK(1)` the
/// universal congruence, and `SigmaK(k)` for `k >= 2` has quotient `Z/kZ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CongruenceSpec {
    Identity,
    SigmaK(u64),
}

impl CongruenceSpec {
    /// Human-readable classification, the form the CLI prints.
    pub fn describe(&self) -> String {
        match self {
            CongruenceSpec::Identity => "identity".to_string(),
            CongruenceSpec::SigmaK(0) => "sigma k=0 quotient=Z".to_string(),
            CongruenceSpec::SigmaK(1) => "sigma k=1 quotient=trivial".to_string(),
            CongruenceSpec::SigmaK(k) => format!("sigma k={k} quotient=Z/{k}Z"),
        }
    }
}

impl fmt::Display for CongruenceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

/// A finite sequence of generator pairs.
pub type PairList = Vec<(CzElement, CzElement)>;

/// Whether `x` and `y` are related under the given congruence.
pub fn related(spec: CongruenceSpec, x: CzElement, y: CzElement) -> Result<bool> {
    match spec {
        CongruenceSpec::Identity => Ok(x == y),
        CongruenceSpec::SigmaK(0) => Ok(index(x)? == index(y)?),
        CongruenceSpec::SigmaK(k) => {
            let d = (index(x)? as i128) - (index(y)? as i128);
            Ok(d.rem_euclid(k as i128) == 0)
        }
    }
}

/// Canonical quotient value: the index for `k = 0`, otherwise the index
/// normalized into `[0, k)`.
pub fn quotient_map(k: u64, x: CzElement) -> Result<i64> {
    let ix = index(x)?;
    if k == 0 {
        Ok(ix)
    } else {
        Ok((ix as i128).rem_euclid(k as i128) as i64)
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The smallest congruence containing the given pairs: `Identity` when every
/// pair is reflexive, otherwise `SigmaK(g)` with `g` the gcd of the absolute
/// index differences (gcd of an all-zero multiset is 0).
pub fn congruence_from_pairs(gens: &[(CzElement, CzElement)]) -> Result<CongruenceSpec> {
    let mut any_nonreflexive = false;
    let mut g: u64 = 0;
    for &(x, y) in gens {
        if x != y {
            any_nonreflexive = true;
        }
        let d = (index(x)? as i128 - index(y)? as i128).unsigned_abs();
        let d = u64::try_from(d).map_err(|_| Error::ArithmeticOverflow)?;
        g = gcd(g, d);
    }
    if any_nonreflexive {
        Ok(CongruenceSpec::SigmaK(g))
    } else {
        Ok(CongruenceSpec::Identity)
    }
}

/// Nonnegative generator of the subgroup of `(Z, +)` generated by `{n}` and
/// the non-trivial subgroup `kZ`.
pub fn cyclic_generator(n: i64, k: i64) -> Result<i64> {
    if k <= 0 {
        return Err(Error::NonPositiveSubgroup(k));
    }
    Ok(gcd(n.unsigned_abs(), k.unsigned_abs()) as i64)
}

/// A partition of a window box, as produced by saturation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    window: Window,
    // canonical label per element (the least member index of its class)
    labels: Vec<u32>,
}

impl Partition {
    pub fn window(&self) -> Window {
        self.window
    }

    fn elem_index(&self, x: CzElement) -> Result<usize> {
        if !self.window.contains(x) {
            return Err(Error::OutsidePartition { a: x.a, b: x.b });
        }
        let side = self.window.side_len();
        Ok(((x.a - self.window.lo()) * side + (x.b - self.window.lo())) as usize)
    }

    pub fn same_class(&self, x: CzElement, y: CzElement) -> Result<bool> {
        Ok(self.labels[self.elem_index(x)?] == self.labels[self.elem_index(y)?])
    }

    pub fn class_count(&self) -> usize {
        let mut labels: Vec<u32> = self.labels.clone();
        labels.sort_unstable();
        labels.dedup();
        labels.len()
    }

    /// Classes in deterministic order (by least member, members lexicographic).
    pub fn classes(&self) -> Vec<Vec<CzElement>> {
        let side = self.window.side_len();
        let lo = self.window.lo();
        let mut by_label: Vec<(u32, Vec<CzElement>)> = Vec::new();
        for (i, &lab) in self.labels.iter().enumerate() {
            let a = lo + (i as i64) / side;
            let b = lo + (i as i64) % side;
            match by_label.binary_search_by_key(&lab, |(l, _)| *l) {
                Ok(pos) => by_label[pos].1.push(cz(a, b)),
                Err(pos) => by_label.insert(pos, (lab, vec![cz(a, b)])),
            }
        }
        by_label.into_iter().map(|(_, c)| c).collect()
    }
}

const NONE: u32 = u32::MAX;

/// Reusable saturation engine for one fixed window.
///
/// Precomputes every in-window left/right translation once so that repeated
/// saturation calls over the same window (the acceptance grids run tens of
/// thousands) only pay for union-find work.
pub struct Saturator {
    window: Window,
    n: usize,
    elems: Vec<CzElement>,
    // witness_init[e * 2n + op]: target index of elems[e] under op, NONE if
    // the product leaves the window. Ops 0..n are right-multiplications by
    // elems[op], ops n..2n left-multiplications by elems[op - n].
    witness_init: Vec<u32>,
}

/// Scratch buffers for one saturation call; reusable across calls.
pub struct SaturationScratch {
    parent: Vec<u32>,
    size: Vec<u32>,
    // witness[root * 2n + op]: some op-image of a member of the class at root
    witness: Vec<u32>,
    queue: Vec<(u32, u32)>,
}

impl Saturator {
    pub fn new(window: Window) -> Result<Self> {
        let elems: Vec<CzElement> = window.iter().collect();
        let n = elems.len();
        let side = window.side_len();
        let lo = window.lo();
        let idx_of = |x: CzElement| -> u32 {
            if window.contains(x) {
                ((x.a - lo) * side + (x.b - lo)) as u32
            } else {
                NONE
            }
        };
        let ops = 2 * n;
        let mut witness_init = vec![NONE; ops * n];
        for (o, &u) in elems.iter().enumerate() {
            for (e, &x) in elems.iter().enumerate() {
                witness_init[e * ops + o] = idx_of(multiply(x, u)?);
                witness_init[e * ops + n + o] = idx_of(multiply(u, x)?);
            }
        }
        Ok(Saturator {
            window,
            n,
            elems,
            witness_init,
        })
    }

    pub fn make_scratch(&self) -> SaturationScratch {
        SaturationScratch {
            parent: vec![0; self.n],
            size: vec![0; self.n],
            witness: vec![NONE; 2 * self.n * self.n],
            queue: Vec::new(),
        }
    }

    pub fn saturate(&self, gens: &[(CzElement, CzElement)]) -> Result<Partition> {
        let mut scratch = self.make_scratch();
        self.saturate_with(gens, &mut scratch)
    }

    pub fn saturate_with(
        &self,
        gens: &[(CzElement, CzElement)],
        scratch: &mut SaturationScratch,
    ) -> Result<Partition> {
        let n = self.n;
        let ops = 2 * n;
        for &(x, y) in gens {
            for e in [x, y] {
                if !self.window.contains(e) {
                    return Err(Error::GeneratorOutsideWindow {
                        a: e.a,
                        b: e.b,
                        lo: self.window.lo(),
                        hi: self.window.hi(),
                    });
                }
            }
        }

        let parent = &mut scratch.parent;
        let size = &mut scratch.size;
        let witness = &mut scratch.witness;
        let queue = &mut scratch.queue;
        for i in 0..n {
            parent[i] = i as u32;
            size[i] = 1;
        }
        // singleton witnesses are the elements' own translation images
        witness.copy_from_slice(&self.witness_init);
        queue.clear();

        fn find(parent: &mut [u32], mut i: u32) -> u32 {
            while parent[i as usize] != i {
                let g = parent[parent[i as usize] as usize];
                parent[i as usize] = g;
                i = g;
            }
            i
        }

        let side = self.window.side_len();
        let lo = self.window.lo();
        let idx = |x: CzElement| ((x.a - lo) * side + (x.b - lo)) as u32;
        for &(x, y) in gens {
            queue.push((idx(x), idx(y)));
        }

        while let Some((x, y)) = queue.pop() {
            let rx = find(parent, x);
            let ry = find(parent, y);
            if rx == ry {
                continue;
            }
            // merge the smaller class into the larger
            let (small, big) = if size[rx as usize] <= size[ry as usize] {
                (rx, ry)
            } else {
                (ry, rx)
            };
            parent[small as usize] = big;
            size[big as usize] += size[small as usize];
            let sbase = small as usize * ops;
            let bbase = big as usize * ops;
            for op in 0..ops {
                let ws = witness[sbase + op];
                if ws == NONE {
                    continue;
                }
                let wb = witness[bbase + op];
                if wb == NONE {
                    witness[bbase + op] = ws;
                } else if ws != wb {
                    queue.push((ws, wb));
                }
            }
        }

        let mut labels = vec![NONE; n];
        for i in 0..n {
            let r = find(parent, i as u32) as usize;
            if labels[r] == NONE {
                labels[r] = i as u32;
            }
            labels[i] = labels[r];
        }
        Ok(Partition {
            window: self.window,
            labels,
        })
    }

    pub fn elements(&self) -> &[CzElement] {
        &self.elems
    }
}

/// Least equivalence on the window box containing the generator pairs and
/// closed under left/right multiplication by window elements whenever both
/// products stay inside the box.
pub fn saturate_window(gens: &[(CzElement, CzElement)], w: Window) -> Result<Partition> {
    Saturator::new(w)?.saturate(gens)
}

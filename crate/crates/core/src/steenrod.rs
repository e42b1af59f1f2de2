//! Chain-level Steenrod squares over `Z_2`.
//!
//! For a `j`-cocycle `c`, `Sq^i(c) = c ⌣_{j-i} c`. Over `Z_2` the value on
//! an `(i+j)`-simplex `z` is the parity of the number of unordered support
//! pairs `{x_r, x_s}` that decompose `z` into alternating segments: their
//! union is `z`, their common face is an `(j-i)`-simplex
//! `⟨v_{i_0}, …, v_{i_n}⟩` with `i_0 = S(0)`, and one of them is the union of
//! the even segments `z^0, z^2, …` (the other is then the odd ones).

use std::collections::{BTreeMap, BTreeSet};
use std::ops::Range;

use crate::cochain::{is_cocycle, Cochain, FormalSum};
use crate::cup::{cup_eval_bounded_counted, pair_shape, shape_within, EvalStats, LoopBounds};
use crate::error::{Error, Result};
use crate::ring::{Ring, RingElement};
use crate::simplicial::{vertex_union, Simplex, SimplicialComplex};
use crate::words::IndexTuple;

/// How [`sq_with`] decides that its input is a cocycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CocycleCheck {
    /// `δc = 0` on every `(j+1)`-simplex.
    #[default]
    Direct,
    /// The pair-accumulation test of [`cocycle_by_pairs`]. Incomplete; kept
    /// for comparison only.
    PairAccumulation,
}

/// The segments `z^0, …, z^{n+1}` of `z` cut at the positions of a tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockSimplex {
    z: Simplex,
    tuple: IndexTuple,
    segments: Vec<Simplex>,
}

impl BlockSimplex {
    pub fn new(z: Simplex, tuple: IndexTuple) -> Result<BlockSimplex> {
        if z.dim() != tuple.m() {
            return Err(Error::DimensionMismatch {
                expected: tuple.m() as i64,
                found: z.dim() as i64,
            });
        }
        let v = z.vertices();
        let idx = tuple.indices();
        let mut segments = Vec::with_capacity(idx.len() + 1);
        segments.push(Simplex::from_sorted(v[..=idx[0]].to_vec()));
        for w in idx.windows(2) {
            segments.push(Simplex::from_sorted(v[w[0]..=w[1]].to_vec()));
        }
        segments.push(Simplex::from_sorted(v[idx[idx.len() - 1]..].to_vec()));
        Ok(BlockSimplex { z, tuple, segments })
    }

    pub fn z(&self) -> &Simplex {
        &self.z
    }

    pub fn tuple(&self) -> &IndexTuple {
        &self.tuple
    }

    pub fn segments(&self) -> &[Simplex] {
        &self.segments
    }

    fn union_of(&self, parity: usize) -> Simplex {
        let mut v: Vec<i64> = self
            .segments
            .iter()
            .skip(parity)
            .step_by(2)
            .flat_map(|s| s.vertices().iter().copied())
            .collect();
        v.dedup();
        Simplex::from_sorted(v)
    }

    /// `z^0 ∪ z^2 ∪ …`
    pub fn even_union(&self) -> Simplex {
        self.union_of(0)
    }

    /// `z^1 ∪ z^3 ∪ …`
    pub fn odd_union(&self) -> Simplex {
        self.union_of(1)
    }
}

fn require_mod2(c: &Cochain) -> Result<()> {
    if c.ring().is_mod2() {
        Ok(())
    } else {
        Err(Error::NotMod2(c.ring().to_string()))
    }
}

/// `Sq^i(c)` as the formal sum of the simplices on which it is 1.
pub fn sq(i: usize, c: &Cochain, complex: &SimplicialComplex) -> Result<FormalSum> {
    sq_with(i, c, complex, CocycleCheck::Direct)
}

pub fn sq_with(i: usize, c: &Cochain, complex: &SimplicialComplex, check: CocycleCheck) -> Result<FormalSum> {
    match SqPlan::new(i, c, complex, check)? {
        SqPlan::Identity(sum) => Ok(sum),
        SqPlan::Pairs(plan) => Ok(plan.part(0..plan.len())),
    }
}

/// A validated `Sq^i(c)` computation.
#[derive(Debug, Clone)]
pub enum SqPlan<'a> {
    /// `i = 0`: the answer is `c` itself.
    Identity(FormalSum),
    Pairs(SqPairs<'a>),
}

impl<'a> SqPlan<'a> {
    /// Checks that `c` is a `Z_2` cochain supported in `complex` and, for
    /// `i ≥ 1`, a cocycle.
    pub fn new(i: usize, c: &'a Cochain, complex: &'a SimplicialComplex, check: CocycleCheck) -> Result<SqPlan<'a>> {
        require_mod2(c)?;
        c.check_support_in(complex)?;
        if i == 0 {
            return Ok(SqPlan::Identity(c.to_formal_sum()));
        }
        let cocycle = match check {
            CocycleCheck::Direct => is_cocycle(c, complex)?,
            CocycleCheck::PairAccumulation => cocycle_by_pairs(c, complex)?,
        };
        if !cocycle {
            return Err(Error::NotACocycle);
        }
        let j = c.degree();
        let support = if i > j { Vec::new() } else { c.support().keys().collect() };
        let bounds = LoopBounds::new(j, j, j.saturating_sub(i));
        Ok(SqPlan::Pairs(SqPairs { support, complex, bounds }))
    }
}

/// The unordered pairs `{x_r, x_s}` of a cocycle's support, split by `r`:
/// `part(range)` covers the pairs whose smaller index lies in `range`.
#[derive(Debug, Clone)]
pub struct SqPairs<'a> {
    support: Vec<&'a Simplex>,
    complex: &'a SimplicialComplex,
    bounds: LoopBounds,
}

impl SqPairs<'_> {
    pub fn len(&self) -> usize {
        self.support.len()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    pub fn part(&self, range: Range<usize>) -> FormalSum {
        let one = Ring::Z2.one();
        let mut out = FormalSum::new(Ring::Z2);
        for r in range {
            for y in &self.support[r + 1..] {
                if let Some(shape) = pair_shape(self.support[r], y, &self.bounds, self.complex) {
                    if shape.x_even || shape.x_odd {
                        out.add_term(shape.z, &one);
                    }
                }
            }
        }
        out
    }
}

/// The pairs `(x_r, x_s)`, `r < s` in the order of `support`, that count
/// towards `Sq^i(c)(z)` for a `j`-cochain with the given support.
pub fn pair_set(z: &Simplex, support: &[Simplex], i: usize, j: usize) -> Vec<(Simplex, Simplex)> {
    let mut out = Vec::new();
    if i > j {
        return out;
    }
    let bounds = LoopBounds::new(j, j, j - i);
    for (r, x) in support.iter().enumerate() {
        for y in &support[r + 1..] {
            if vertex_union(x, y) != *z {
                continue;
            }
            if let Some(shape) = shape_within(x, y, z.clone(), &bounds) {
                if shape.x_even || shape.x_odd {
                    out.push((x.clone(), y.clone()));
                }
            }
        }
    }
    out
}

/// `|D_z| mod 2`, which is `Sq^i(c)(z)` when `support` is the support of a
/// `j`-cocycle and `i ≥ 1`.
pub fn dz_parity(z: &Simplex, support: &[Simplex], i: usize, j: usize) -> bool {
    pair_set(z, support, i, j).len() % 2 == 1
}

/// `Sq^i(c)(z)` by the restricted cup-`(j-i)` formula on the single
/// simplex `z`, with its enumeration counters.
pub fn sq_value_at(i: usize, c: &Cochain, z: &Simplex) -> Result<(RingElement, EvalStats)> {
    require_mod2(c)?;
    let j = c.degree();
    if i > j {
        return Ok((Ring::Z2.zero(), EvalStats::default()));
    }
    cup_eval_bounded_counted(c, c, z, j - i)
}

/// The cocycle test by pair accumulation: collect the pairs of support
/// simplices spanning a `(j+1)`-simplex of the complex, group the members of
/// those pairs by the simplex they span, and accept when every group has
/// even size.
///
/// This is not a correct cocycle test. A `(j+1)`-simplex with exactly one
/// face in the support forms no pair, so `δc ≠ 0` there goes unnoticed; and
/// a cocycle for which no pair exists at all (for instance any nonzero
/// top-dimensional cochain with a single simplex) is rejected.
pub fn cocycle_by_pairs(c: &Cochain, complex: &SimplicialComplex) -> Result<bool> {
    require_mod2(c)?;
    c.check_support_in(complex)?;
    let support: Vec<&Simplex> = c.support().keys().collect();
    let mut groups: BTreeMap<Simplex, BTreeSet<&Simplex>> = BTreeMap::new();
    for (r, x) in support.iter().enumerate() {
        for y in &support[r + 1..] {
            if let Some(z) = complex.union(x, y)? {
                if z.dim() == c.degree() + 1 {
                    let members = groups.entry(z).or_default();
                    members.insert(x);
                    members.insert(y);
                }
            }
        }
    }
    if groups.is_empty() {
        return Ok(false);
    }
    Ok(groups.values().all(|g| g.len() % 2 == 0))
}

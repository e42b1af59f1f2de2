//! Cup-`n` products of cochains on ordered simplicial complexes.
//!
//! Three routes compute the same thing:
//!
//! * [`cup_eval_oracle`] evaluates `c ⌣_n c'` on one simplex by visiting
//!   every one of the `C(m+1, n+1)` index tuples;
//! * [`cup_eval_bounded`] visits only the tuples whose two faces have the
//!   degrees of `c` and `c'`, using the loop bounds of [`LoopBounds`];
//! * [`cup_product`] works from the supports instead, pairing each
//!   `x ∈ supp c` with each `y ∈ supp c'` and deciding from `x ∪ y` and
//!   `x ∩ y` whether (and with which tuple) the pair contributes.
//!
//! All three share the sign of [`SignExponents`].

use std::ops::Range;

use itertools::Itertools;

use crate::cochain::{Cochain, FormalSum};
use crate::error::{Error, Result};
use crate::ring::{Ring, RingElement};
use crate::simplicial::{intersection, Simplex, SimplicialComplex};
use crate::words::{split_faces, IndexTuple};

/// The four sign exponents, each reduced mod 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignExponents {
    pub a: u8,
    pub b: u8,
    pub c: u8,
    pub d: u8,
}

impl SignExponents {
    /// Exponents for the tuple `indices = (i_0, …, i_n)` acting on an
    /// `m`-simplex.
    pub fn of(m: usize, indices: &[usize]) -> SignExponents {
        let n = indices.len() - 1;
        let bit = |v: usize| (v & 1) as u8;

        let a = u8::from(matches!(n % 8, 3..=6));

        let b = if matches!(n % 4, 1 | 2) {
            indices.iter().step_by(2).fold(0, |acc, &i| acc ^ bit(i))
        } else {
            let odd = indices.iter().skip(1).step_by(2).fold(0, |acc, &i| acc ^ bit(i));
            odd ^ (bit(n) & bit(m))
        };

        // prefix[k] = i_0 + … + i_{k-1} mod 2
        let mut prefix = Vec::with_capacity(n + 2);
        prefix.push(0u8);
        for &i in indices {
            prefix.push(prefix.last().unwrap() ^ bit(i));
        }

        let c = (1..=n / 2).fold(0, |acc, j| {
            let pair = bit(indices[2 * j]) ^ bit(indices[2 * j - 1]);
            acc ^ (pair & prefix[2 * j])
        });

        let d = if n % 2 == 1 {
            (bit(m) ^ bit(indices[n])) & prefix[n + 1]
        } else {
            0
        };

        SignExponents { a, b, c, d }
    }

    pub fn parity(&self) -> u8 {
        (self.a + self.b + self.c + self.d) & 1
    }

    pub fn sign(&self) -> i8 {
        if self.parity() == 0 {
            1
        } else {
            -1
        }
    }
}

/// `A + B + C + D` mod 2 for a tuple.
pub fn sign_exponent(t: &IndexTuple) -> u8 {
    SignExponents::of(t.m(), t.indices()).parity()
}

/// Degrees and derived constants of one `c ⌣_n c'` computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LoopBounds {
    pub n: usize,
    pub p: usize,
    pub q: usize,
    /// `p + q - n`; negative when no simplex has the right dimension.
    pub m: i64,
    /// `p` for even `n`, `q` for odd `n`.
    pub lambda: usize,
}

impl LoopBounds {
    pub fn new(p: usize, q: usize, n: usize) -> LoopBounds {
        LoopBounds {
            n,
            p,
            q,
            m: p as i64 + q as i64 - n as i64,
            lambda: if n.is_multiple_of(2) { p } else { q },
        }
    }

    /// Whether any summand can exist at all.
    pub fn nonvanishing(&self) -> bool {
        self.n <= self.p && self.n <= self.q
    }

    /// `S(k)` for the already fixed indices `suffix = (i_{k+1}, …, i_n)`:
    /// the lower limit of the loop over `i_k` for `k ≥ 1`, and the forced
    /// value of `i_0` for `k = 0`.
    pub fn lower_bound(&self, k: usize, suffix: &[usize]) -> i64 {
        debug_assert_eq!(suffix.len(), self.n - k);
        let alternating: i64 = suffix
            .iter()
            .enumerate()
            .map(|(t, &i)| if t % 2 == 0 { i as i64 } else { -(i as i64) })
            .sum();
        let constant = self.lambda as i64 - (self.n / 2) as i64;
        let signed = if (k + self.n).is_multiple_of(2) { constant } else { -constant };
        alternating + signed + (k / 2) as i64
    }
}

/// Free-function form of [`LoopBounds::lower_bound`].
pub fn lower_bound(k: usize, suffix: &[usize], bounds: &LoopBounds) -> i64 {
    bounds.lower_bound(k, suffix)
}

/// Enumeration counters of one evaluation.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EvalStats {
    /// Complete tuples handed to the summand.
    pub visited: u64,
    /// Tuples dropped because the forced `i_0` was out of range.
    pub skipped: u64,
}

/// Calls `f` on every tuple `0 ≤ i_0 < … < i_n ≤ m`.
pub fn visit_all_tuples(m: i64, n: usize, mut f: impl FnMut(&[usize])) -> EvalStats {
    let mut stats = EvalStats::default();
    if m < n as i64 {
        return stats;
    }
    for combo in (0..=m as usize).combinations(n + 1) {
        stats.visited += 1;
        f(&combo);
    }
    stats
}

/// Calls `f` on every tuple of the restricted enumeration: `i_k` runs from
/// `S(k)` to `i_{k+1} - 1` (to `m` for `k = n`) and `i_0 = S(0)`.
pub fn visit_bounded_tuples(bounds: &LoopBounds, mut f: impl FnMut(&[usize])) -> EvalStats {
    let mut stats = EvalStats::default();
    if !bounds.nonvanishing() {
        return stats;
    }
    let n = bounds.n;
    let mut idx = vec![0usize; n + 1];
    descend(bounds, n, &mut idx, &mut stats, &mut f);
    stats
}

fn descend(
    bounds: &LoopBounds,
    k: usize,
    idx: &mut [usize],
    stats: &mut EvalStats,
    f: &mut impl FnMut(&[usize]),
) {
    let s = bounds.lower_bound(k, &idx[k + 1..]);
    if k == 0 {
        let upper = if bounds.n == 0 { bounds.m } else { idx[1] as i64 - 1 };
        if s < 0 || s > upper {
            stats.skipped += 1;
            return;
        }
        idx[0] = s as usize;
        stats.visited += 1;
        f(idx);
        return;
    }
    let upper = if k == bounds.n { bounds.m } else { idx[k + 1] as i64 - 1 };
    for i in s.max(0)..=upper {
        idx[k] = i as usize;
        descend(bounds, k - 1, idx, stats, f);
    }
}

/// One term of the restricted formula on a fixed simplex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Summand {
    pub tuple: IndexTuple,
    pub sign: i8,
    pub plus_face: Simplex,
    pub minus_face: Simplex,
}

/// The terms of `c ⌣_n c'(x)` for a `p`-cochain and a `q`-cochain, in
/// enumeration order.
pub fn summands(p: usize, q: usize, n: usize, x: &Simplex) -> Result<Vec<Summand>> {
    let bounds = LoopBounds::new(p, q, n);
    check_target(&bounds, x)?;
    let m = x.dim();
    let mut out = Vec::new();
    visit_bounded_tuples(&bounds, |idx| {
        let (plus, minus) = split_faces(idx, x.vertices());
        out.push(Summand {
            tuple: IndexTuple::new(idx.to_vec(), m).expect("enumeration yields valid tuples"),
            sign: SignExponents::of(m, idx).sign(),
            plus_face: Simplex::from_sorted(plus),
            minus_face: Simplex::from_sorted(minus),
        });
    });
    Ok(out)
}

fn check_target(bounds: &LoopBounds, x: &Simplex) -> Result<()> {
    if x.dim() as i64 != bounds.m {
        return Err(Error::DimensionMismatch {
            expected: bounds.m,
            found: x.dim() as i64,
        });
    }
    if x.is_degenerate() {
        return Err(Error::Degenerate(x.clone()));
    }
    Ok(())
}

fn prepare(c: &Cochain, cp: &Cochain, x: &Simplex, n: usize) -> Result<LoopBounds> {
    c.ring().check_same(&cp.ring())?;
    let bounds = LoopBounds::new(c.degree(), cp.degree(), n);
    check_target(&bounds, x)?;
    Ok(bounds)
}

/// Accumulates `± c(plus) · c'(minus)` for the tuples fed to it.
struct Accumulator<'a> {
    c: &'a Cochain,
    cp: &'a Cochain,
    x: &'a Simplex,
    ring: Ring,
    total: RingElement,
}

impl<'a> Accumulator<'a> {
    fn new(c: &'a Cochain, cp: &'a Cochain, x: &'a Simplex) -> Self {
        let ring = c.ring();
        Accumulator {
            c,
            cp,
            x,
            ring,
            total: ring.zero(),
        }
    }

    fn add(&mut self, idx: &[usize]) {
        let (plus, minus) = split_faces(idx, self.x.vertices());
        // Wrong-dimension faces evaluate to zero; skip building them.
        if plus.len() != self.c.degree() + 1 || minus.len() != self.cp.degree() + 1 {
            return;
        }
        let a = self.c.evaluate(&Simplex::from_sorted(plus));
        if a.is_zero() {
            return;
        }
        let b = self.cp.evaluate(&Simplex::from_sorted(minus));
        if b.is_zero() {
            return;
        }
        let mut term = self.ring.mul(&a, &b);
        if !self.ring.is_mod2() {
            term = self.ring.signed(SignExponents::of(self.x.dim(), idx).parity(), term);
        }
        self.total = self.ring.add(&self.total, &term);
    }
}

/// `(c ⌣_n c')(x)` by the unrestricted sum over all index tuples.
pub fn cup_eval_oracle(c: &Cochain, cp: &Cochain, x: &Simplex, n: usize) -> Result<RingElement> {
    cup_eval_oracle_counted(c, cp, x, n).map(|(v, _)| v)
}

pub fn cup_eval_oracle_counted(
    c: &Cochain,
    cp: &Cochain,
    x: &Simplex,
    n: usize,
) -> Result<(RingElement, EvalStats)> {
    let bounds = prepare(c, cp, x, n)?;
    let mut acc = Accumulator::new(c, cp, x);
    let stats = visit_all_tuples(bounds.m, n, |idx| acc.add(idx));
    Ok((acc.total, stats))
}

/// `(c ⌣_n c')(x)` by the restricted sum; zero when `n > p` or `n > q`.
pub fn cup_eval_bounded(c: &Cochain, cp: &Cochain, x: &Simplex, n: usize) -> Result<RingElement> {
    cup_eval_bounded_counted(c, cp, x, n).map(|(v, _)| v)
}

pub fn cup_eval_bounded_counted(
    c: &Cochain,
    cp: &Cochain,
    x: &Simplex,
    n: usize,
) -> Result<(RingElement, EvalStats)> {
    let bounds = prepare(c, cp, x, n)?;
    let mut acc = Accumulator::new(c, cp, x);
    let stats = visit_bounded_tuples(&bounds, |idx| acc.add(idx));
    Ok((acc.total, stats))
}

/// How a support pair `(x, y)` sits inside `z = x ∪ y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct PairShape {
    pub z: Simplex,
    /// Positions in `z` of the vertices of `x ∩ y`.
    pub tuple: Vec<usize>,
    /// `x` is the union of the even segments `z^0, z^2, …`.
    pub x_even: bool,
    /// `x` is the union of the odd segments `z^1, z^3, …`.
    pub x_odd: bool,
}

/// The common checks on a pair: `x ∪ y` is an `m`-simplex of `complex`,
/// `x ∩ y` is an `n`-simplex whose positions `(i_0, …, i_n)` in it satisfy
/// `i_0 = S(0)`. Reports which segment union `x` is.
pub(crate) fn pair_shape(
    x: &Simplex,
    y: &Simplex,
    bounds: &LoopBounds,
    complex: &SimplicialComplex,
) -> Option<PairShape> {
    let z = complex.union(x, y).ok().flatten()?;
    shape_within(x, y, z, bounds)
}

/// As [`pair_shape`], for a `z` already known to be `x ∪ y`.
pub(crate) fn shape_within(x: &Simplex, y: &Simplex, z: Simplex, bounds: &LoopBounds) -> Option<PairShape> {
    if z.dim() as i64 != bounds.m {
        return None;
    }
    let common = intersection(x, y)?;
    if common.dim() != bounds.n {
        return None;
    }
    let tuple = common.positions_in(&z)?;
    if bounds.lower_bound(0, &tuple[1..]) != tuple[0] as i64 {
        return None;
    }
    let (even, odd) = split_faces(&tuple, z.vertices());
    let x_even = even == x.vertices();
    let x_odd = odd == x.vertices();
    Some(PairShape { z, tuple, x_even, x_odd })
}

fn check_inputs(c: &Cochain, cp: &Cochain, complex: &SimplicialComplex) -> Result<()> {
    c.ring().check_same(&cp.ring())?;
    c.check_support_in(complex)?;
    cp.check_support_in(complex)
}

/// `c ⌣_n c'` on the whole complex, as a formal sum of `(p+q-n)`-simplices.
pub fn cup_product(c: &Cochain, cp: &Cochain, n: usize, complex: &SimplicialComplex) -> Result<FormalSum> {
    let plan = CupPlan::new(c, cp, n, complex)?;
    Ok(plan.part(0..plan.len()))
}

/// A validated cup-`n` product whose support pairs can be evaluated in
/// pieces. `part(r)` covers the pairs `(x, y)` with `x` among the entries
/// `r` of `supp c` (in lexicographic order); the parts of any partition of
/// `0..len()` add up to [`cup_product`].
#[derive(Debug, Clone)]
pub struct CupPlan<'a> {
    left: Vec<(&'a Simplex, &'a RingElement)>,
    cp: &'a Cochain,
    complex: &'a SimplicialComplex,
    bounds: LoopBounds,
    ring: Ring,
}

impl<'a> CupPlan<'a> {
    pub fn new(c: &'a Cochain, cp: &'a Cochain, n: usize, complex: &'a SimplicialComplex) -> Result<CupPlan<'a>> {
        check_inputs(c, cp, complex)?;
        let bounds = LoopBounds::new(c.degree(), cp.degree(), n);
        let left = if bounds.nonvanishing() { c.support().iter().collect() } else { Vec::new() };
        Ok(CupPlan { left, cp, complex, bounds, ring: c.ring() })
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    /// Number of entries of `supp c` to distribute.
    pub fn len(&self) -> usize {
        self.left.len()
    }

    pub fn is_empty(&self) -> bool {
        self.left.is_empty()
    }

    pub fn part(&self, range: Range<usize>) -> FormalSum {
        let ring = self.ring;
        let mut out = FormalSum::new(ring);
        for (x, cx) in &self.left[range] {
            for (y, cy) in self.cp.support() {
                let Some(shape) = pair_shape(x, y, &self.bounds, self.complex) else {
                    continue;
                };
                if !shape.x_even {
                    continue;
                }
                let mut term = ring.mul(cx, cy);
                if !ring.is_mod2() {
                    let m = shape.z.dim();
                    term = ring.signed(SignExponents::of(m, &shape.tuple).parity(), term);
                }
                out.add_term(shape.z, &term);
            }
        }
        out
    }
}

/// `c ⌣_n c'` as a cochain, evaluated simplex by simplex with the
/// restricted formula over every `(p+q-n)`-simplex of `complex`.
pub fn cup_cochain_by_evaluation(
    c: &Cochain,
    cp: &Cochain,
    n: usize,
    complex: &SimplicialComplex,
) -> Result<Cochain> {
    check_inputs(c, cp, complex)?;
    let bounds = LoopBounds::new(c.degree(), cp.degree(), n);
    let mut sum = FormalSum::new(c.ring());
    if bounds.m < 0 {
        return Ok(Cochain::zero(0, c.ring()));
    }
    for z in complex.simplices_of_dim(bounds.m as usize) {
        let v = cup_eval_bounded(c, cp, &z, n)?;
        sum.add_term(z, &v);
    }
    sum.into_cochain(bounds.m as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::{binomial, count_bounded};

    fn s(v: &[i64]) -> Simplex {
        Simplex::new(v.to_vec()).unwrap()
    }

    fn k(lists: &[&[i64]]) -> SimplicialComplex {
        SimplicialComplex::from_lists(lists.iter().map(|l| l.to_vec())).unwrap()
    }

    /// Each exponent straight from its case definition, in plain integers.
    fn sign_by_definition(m: usize, t: &[usize]) -> u8 {
        let n = t.len() - 1;
        let a = if [3, 4, 5, 6].contains(&(n % 8)) { 1 } else { 0 };
        let b: usize = if n % 4 == 1 || n % 4 == 2 {
            (0..=n / 2).map(|j| t[2 * j]).sum()
        } else {
            (0..n.div_ceil(2)).map(|j| t[2 * j + 1]).sum::<usize>() + n * m
        };
        let c: usize = (1..=n / 2)
            .map(|j| (t[2 * j] + t[2 * j - 1]) * t[..2 * j].iter().sum::<usize>())
            .sum();
        let d = if n % 2 == 1 { (m + t[n]) * t.iter().sum::<usize>() } else { 0 };
        ((a + b + c + d) % 2) as u8
    }

    #[test]
    fn sign_examples() {
        for m in 0..6 {
            for i0 in 0..=m {
                assert_eq!(sign_exponent(&IndexTuple::new(vec![i0], m).unwrap()), 0);
            }
        }
        let e = SignExponents::of(1, &[0, 1]);
        assert_eq!(e, SignExponents { a: 0, b: 0, c: 0, d: 0 });
        assert_eq!(e.sign(), 1);
    }

    #[test]
    fn sign_matches_definition() {
        for m in 0..9usize {
            for n in 0..=m {
                for t in (0..=m).combinations(n + 1) {
                    assert_eq!(SignExponents::of(m, &t).parity(), sign_by_definition(m, &t), "{t:?}_{m}");
                }
            }
        }
    }

    #[test]
    fn cup_one_sign() {
        for p in 1..7usize {
            for q in 1..7usize {
                let m = p + q - 1;
                for j in 0..p {
                    let e = SignExponents::of(m, &[j, j + q]).parity();
                    assert_eq!(e as usize, (j + (p - 1 + j) * q) % 2);
                }
            }
        }
    }

    #[test]
    fn lower_bound_examples() {
        for p in 0..6 {
            for q in 0..6 {
                assert_eq!(LoopBounds::new(p, q, 0).lower_bound(0, &[]), p as i64);
                let b1 = LoopBounds::new(p, q, 1);
                assert_eq!(b1.lower_bound(1, &[]), q as i64);
                for i1 in 0..10usize {
                    assert_eq!(b1.lower_bound(0, &[i1]), i1 as i64 - q as i64);
                }
            }
        }
        let mut tuples = Vec::new();
        let stats = visit_bounded_tuples(&LoopBounds::new(3, 4, 2), |t| tuples.push(t.to_vec()));
        assert_eq!(tuples.len(), 6);
        assert_eq!(stats, EvalStats { visited: 6, skipped: 0 });
        assert_eq!(tuples[0], vec![0, 1, 3]);
    }

    #[test]
    fn bounded_counts_and_dimensions() {
        for p in 0..9usize {
            for q in 0..9usize {
                for n in 0..=p.min(q) {
                    let bounds = LoopBounds::new(p, q, n);
                    let x = Simplex::new((0..=bounds.m).collect()).unwrap();
                    let stats = visit_bounded_tuples(&bounds, |t| {
                        let (plus, minus) = split_faces(t, x.vertices());
                        assert_eq!((plus.len(), minus.len()), (p + 1, q + 1));
                    });
                    assert_eq!(stats.skipped, 0);
                    assert_eq!(stats.visited, u64::try_from(count_bounded(p, q, n)).unwrap());
                    let all = visit_all_tuples(bounds.m, n, |_| {});
                    assert_eq!(
                        all.visited,
                        u64::try_from(binomial(bounds.m + 1, n as i64 + 1)).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn cup_zero_of_edges() {
        let x = s(&[0, 1, 2]);
        let c = Cochain::new(1, Ring::Integers, [(s(&[0, 1]), 1)]).unwrap();
        let cp = Cochain::new(1, Ring::Integers, [(s(&[1, 2]), 1)]).unwrap();
        assert_eq!(cup_eval_oracle(&c, &cp, &x, 0).unwrap(), Ring::Integers.one());
        assert_eq!(cup_eval_bounded(&c, &cp, &x, 0).unwrap(), Ring::Integers.one());
        assert!(cup_eval_bounded(&cp, &c, &x, 0).unwrap().is_zero());
    }

    #[test]
    fn cup_one_single_edge() {
        let x = s(&[3, 8]);
        let c = Cochain::new(1, Ring::Integers, [(x.clone(), 1)]).unwrap();
        let (v, stats) = cup_eval_bounded_counted(&c, &c, &x, 1).unwrap();
        assert_eq!(v, Ring::Integers.one());
        assert_eq!(stats.visited, 1);
    }

    #[test]
    fn vanishes_above_degrees() {
        let c = Cochain::new(1, Ring::Integers, [(s(&[0, 1]), 3)]).unwrap();
        let cp = Cochain::new(3, Ring::Integers, [(s(&[0, 1, 2, 3]), 2)]).unwrap();
        let x = s(&[0, 1, 2]);
        assert!(cup_eval_bounded(&c, &cp, &x, 2).unwrap().is_zero());
        assert!(cup_eval_oracle(&c, &cp, &x, 2).unwrap().is_zero());
        assert_eq!(cup_eval_bounded_counted(&c, &cp, &x, 2).unwrap().1.visited, 0);
    }

    #[test]
    fn evaluator_errors() {
        let c = Cochain::new(1, Ring::Integers, [(s(&[0, 1]), 1)]).unwrap();
        assert!(cup_eval_bounded(&c, &c, &s(&[0, 1, 2]), 0).unwrap().is_zero());
        assert_eq!(
            cup_eval_bounded(&c, &c, &s(&[0, 1]), 0),
            Err(Error::DimensionMismatch { expected: 2, found: 1 })
        );
        assert!(matches!(cup_eval_oracle(&c, &c, &s(&[0, 0, 1]), 0), Err(Error::Degenerate(_))));
        let c2 = Cochain::new(1, Ring::Z2, [(s(&[0, 1]), 1)]).unwrap();
        assert!(matches!(cup_eval_oracle(&c, &c2, &s(&[0, 1, 2]), 0), Err(Error::RingMismatch(..))));
    }

    #[test]
    fn cup_product_triangle() {
        let tri = k(&[&[0, 1, 2]]);
        let c = Cochain::indicator(1, Ring::Z2, tri.simplices_of_dim(1)).unwrap();
        let sum = cup_product(&c, &c, 0, &tri).unwrap();
        let terms: Vec<_> = sum.iter().map(|(z, v)| (z.clone(), v.clone())).collect();
        assert_eq!(terms, vec![(s(&[0, 1, 2]), Ring::Z2.one())]);

        let x = s(&[0, 1, 2]);
        let mut contributing = 0;
        for a in tri.simplices_of_dim(1) {
            for b in tri.simplices_of_dim(1) {
                let ca = Cochain::indicator(1, Ring::Z2, [a.clone()]).unwrap();
                let cb = Cochain::indicator(1, Ring::Z2, [b.clone()]).unwrap();
                if !cup_eval_oracle(&ca, &cb, &x, 0).unwrap().is_zero() {
                    contributing += 1;
                    assert_eq!((a.clone(), b.clone()), (s(&[0, 1]), s(&[1, 2])));
                }
            }
        }
        assert_eq!(contributing, 1);
    }

    #[test]
    fn cup_product_empty_and_errors() {
        let tri = k(&[&[0, 1, 2]]);
        let c = Cochain::indicator(1, Ring::Z2, tri.simplices_of_dim(1)).unwrap();
        let zero = Cochain::zero(1, Ring::Z2);
        assert!(cup_product(&c, &zero, 0, &tri).unwrap().is_empty());
        assert!(cup_product(&zero, &c, 1, &tri).unwrap().is_empty());
        let outside = Cochain::indicator(1, Ring::Z2, [s(&[2, 3])]).unwrap();
        assert_eq!(
            cup_product(&c, &outside, 0, &tri),
            Err(Error::SupportNotInComplex(s(&[2, 3])))
        );
    }

    #[test]
    fn summand_listing() {
        let x = s(&[0, 1, 2, 3]);
        let terms = summands(2, 2, 1, &x).unwrap();
        let shown: Vec<_> = terms
            .iter()
            .map(|t| (t.tuple.indices().to_vec(), t.sign, t.plus_face.clone(), t.minus_face.clone()))
            .collect();
        assert_eq!(
            shown,
            vec![
                (vec![0, 2], 1, s(&[0, 2, 3]), s(&[0, 1, 2])),
                (vec![1, 3], -1, s(&[0, 1, 3]), s(&[1, 2, 3])),
            ]
        );
    }
}

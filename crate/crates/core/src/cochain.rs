//! Cochains, formal sums of simplices, the simplicial differential and the
//! coboundary.
//!
//! Everything here lives in the normalized complex: degenerate simplices
//! evaluate to zero and never appear in a support.

use std::collections::btree_map::{self, BTreeMap};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::ring::{Ring, RingElement};
use crate::simplicial::{Simplex, SimplicialComplex};

/// A finite formal sum `Σ λ_j z_j` of simplices with nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalSum {
    ring: Ring,
    terms: BTreeMap<Simplex, RingElement>,
}

impl FormalSum {
    pub fn new(ring: Ring) -> FormalSum {
        FormalSum {
            ring,
            terms: BTreeMap::new(),
        }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    /// Adds `coeff · z`, cancelling exactly.
    pub fn add_term(&mut self, z: Simplex, coeff: &RingElement) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(z) {
            btree_map::Entry::Vacant(e) => {
                e.insert(coeff.clone());
            }
            btree_map::Entry::Occupied(mut e) => {
                let sum = self.ring.add(e.get(), coeff);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &FormalSum) -> Result<()> {
        self.ring.check_same(&other.ring)?;
        for (z, c) in &other.terms {
            self.add_term(z.clone(), c);
        }
        Ok(())
    }

    pub fn coefficient(&self, z: &Simplex) -> RingElement {
        self.terms.get(z).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn terms(&self) -> &BTreeMap<Simplex, RingElement> {
        &self.terms
    }

    pub fn iter(&self) -> btree_map::Iter<'_, Simplex, RingElement> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Applies the differential termwise.
    pub fn differential(&self) -> FormalSum {
        let mut out = FormalSum::new(self.ring);
        for (x, c) in &self.terms {
            for (face, sign) in differential(x, self.ring).terms {
                out.add_term(face, &self.ring.mul(c, &sign));
            }
        }
        out
    }

    /// Reinterprets the sum as a cochain of the given degree.
    pub fn into_cochain(self, degree: usize) -> Result<Cochain> {
        for z in self.terms.keys() {
            check_cell(z, degree)?;
        }
        Ok(Cochain {
            degree,
            ring: self.ring,
            support: self.terms,
        })
    }
}

impl<'a> IntoIterator for &'a FormalSum {
    type Item = (&'a Simplex, &'a RingElement);
    type IntoIter = btree_map::Iter<'a, Simplex, RingElement>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

fn check_cell(x: &Simplex, degree: usize) -> Result<()> {
    if x.is_degenerate() {
        return Err(Error::Degenerate(x.clone()));
    }
    if x.dim() != degree {
        return Err(Error::DimensionMismatch {
            expected: degree as i64,
            found: x.dim() as i64,
        });
    }
    Ok(())
}

/// A degree-`p` cochain, stored by its nonzero values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cochain {
    degree: usize,
    ring: Ring,
    support: BTreeMap<Simplex, RingElement>,
}

impl Cochain {
    pub fn zero(degree: usize, ring: Ring) -> Cochain {
        Cochain {
            degree,
            ring,
            support: BTreeMap::new(),
        }
    }

    /// Builds a cochain from `(simplex, value)` pairs. Repeated simplices
    /// are summed and zero values dropped.
    pub fn new<I, T>(degree: usize, ring: Ring, entries: I) -> Result<Cochain>
    where
        I: IntoIterator<Item = (Simplex, T)>,
        T: Into<BigInt>,
    {
        let mut sum = FormalSum::new(ring);
        for (x, v) in entries {
            check_cell(&x, degree)?;
            sum.add_term(x, &ring.element(v));
        }
        sum.into_cochain(degree)
    }

    /// The cochain taking value 1 on each listed simplex.
    pub fn indicator(degree: usize, ring: Ring, simplices: impl IntoIterator<Item = Simplex>) -> Result<Cochain> {
        Cochain::new(degree, ring, simplices.into_iter().map(|s| (s, 1)))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn support(&self) -> &BTreeMap<Simplex, RingElement> {
        &self.support
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    /// Value on `x`; zero off the support, on degenerate simplices and on
    /// simplices of the wrong dimension.
    pub fn evaluate(&self, x: &Simplex) -> RingElement {
        self.support
            .get(x)
            .cloned()
            .unwrap_or_else(|| self.ring.zero())
    }

    /// Linear extension of [`Cochain::evaluate`] to formal sums.
    pub fn pair(&self, chain: &FormalSum) -> RingElement {
        chain.iter().fold(self.ring.zero(), |acc, (x, c)| {
            self.ring.add(&acc, &self.ring.mul(c, &self.evaluate(x)))
        })
    }

    pub fn add(&self, other: &Cochain) -> Result<Cochain> {
        self.ring.check_same(&other.ring)?;
        if self.degree != other.degree {
            return Err(Error::DimensionMismatch {
                expected: self.degree as i64,
                found: other.degree as i64,
            });
        }
        let mut sum = self.to_formal_sum();
        for (x, c) in &other.support {
            sum.add_term(x.clone(), c);
        }
        sum.into_cochain(self.degree)
    }

    pub fn to_formal_sum(&self) -> FormalSum {
        FormalSum {
            ring: self.ring,
            terms: self.support.clone(),
        }
    }

    /// Fails with the first support simplex missing from `complex`.
    pub fn check_support_in(&self, complex: &SimplicialComplex) -> Result<()> {
        match self.support.keys().find(|x| !complex.contains(x)) {
            Some(x) => Err(Error::SupportNotInComplex(x.clone())),
            None => Ok(()),
        }
    }
}

/// Free-function form of [`Cochain::evaluate`].
pub fn evaluate(c: &Cochain, x: &Simplex) -> RingElement {
    c.evaluate(x)
}

/// `d x = Σ (-1)^i ∂_i x`. Zero for 0-simplices, and zero for degenerate
/// `x` since those vanish in the normalized complex.
pub fn differential(x: &Simplex, ring: Ring) -> FormalSum {
    let mut out = FormalSum::new(ring);
    if x.dim() == 0 || x.is_degenerate() {
        return out;
    }
    for i in 0..=x.dim() {
        let face = x.face(i).expect("index within range");
        out.add_term(face, &ring.signed((i % 2) as u8, ring.one()));
    }
    out
}

/// `(δc)(x) = c(d x)` on every `(p+1)`-simplex of `complex`.
pub fn coboundary(c: &Cochain, complex: &SimplicialComplex) -> Result<Cochain> {
    c.check_support_in(complex)?;
    let ring = c.ring;
    let mut support = BTreeMap::new();
    if !c.is_zero() {
        for x in complex.simplices_of_dim(c.degree + 1) {
            let mut v = ring.zero();
            for i in 0..=x.dim() {
                let fv = c.evaluate(&x.face(i).expect("index within range"));
                if !fv.is_zero() {
                    v = ring.add(&v, &ring.signed((i % 2) as u8, fv));
                }
            }
            if !v.is_zero() {
                support.insert(x, v);
            }
        }
    }
    Ok(Cochain {
        degree: c.degree + 1,
        ring,
        support,
    })
}

pub fn is_cocycle(c: &Cochain, complex: &SimplicialComplex) -> Result<bool> {
    Ok(coboundary(c, complex)?.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(v: &[i64]) -> Simplex {
        Simplex::new(v.to_vec()).unwrap()
    }

    fn k(lists: &[&[i64]]) -> SimplicialComplex {
        SimplicialComplex::from_lists(lists.iter().map(|l| l.to_vec())).unwrap()
    }

    #[test]
    fn evaluate_convention() {
        let c = Cochain::new(1, Ring::Integers, [(s(&[0, 1]), 1)]).unwrap();
        assert_eq!(evaluate(&c, &s(&[0, 1])), Ring::Integers.one());
        assert!(evaluate(&c, &s(&[0, 1, 2])).is_zero());
        assert!(evaluate(&c, &s(&[0, 0])).is_zero());
    }

    #[test]
    fn cochain_validation() {
        assert!(matches!(
            Cochain::new(1, Ring::Integers, [(s(&[0]), 1)]),
            Err(Error::DimensionMismatch { expected: 1, found: 0 })
        ));
        assert!(matches!(
            Cochain::new(1, Ring::Integers, [(s(&[0, 0]), 1)]),
            Err(Error::Degenerate(_))
        ));
        let c = Cochain::new(0, Ring::IntegersMod(3), [(s(&[0]), 3), (s(&[1]), 2), (s(&[1]), 1)]).unwrap();
        assert!(c.is_zero());
    }

    #[test]
    fn differential_examples() {
        let d = differential(&s(&[0, 1, 2]), Ring::Integers);
        let expected: Vec<(Simplex, i64)> = vec![(s(&[0, 1]), 1), (s(&[0, 2]), -1), (s(&[1, 2]), 1)];
        let got: Vec<(Simplex, i64)> = d
            .iter()
            .map(|(x, c)| (x.clone(), i64::try_from(c.value().clone()).unwrap()))
            .collect();
        assert_eq!(got, expected);
        assert!(differential(&s(&[5]), Ring::Integers).is_empty());
        assert!(differential(&s(&[0, 1, 2, 3]), Ring::Integers).differential().is_empty());
    }

    #[test]
    fn coboundary_examples() {
        let tri = k(&[&[0, 1, 2]]);
        let c = Cochain::indicator(0, Ring::Z2, [s(&[0])]).unwrap();
        let dc = coboundary(&c, &tri).unwrap();
        let support: Vec<_> = dc.support().keys().cloned().collect();
        assert_eq!(support, vec![s(&[0, 1]), s(&[0, 2])]);
        assert!(coboundary(&Cochain::zero(1, Ring::Integers), &tri).unwrap().is_zero());
        let outside = Cochain::indicator(1, Ring::Z2, [s(&[0, 3])]).unwrap();
        assert_eq!(coboundary(&outside, &tri), Err(Error::SupportNotInComplex(s(&[0, 3]))));
    }

    #[test]
    fn cocycle_examples() {
        let tri = k(&[&[0, 1, 2]]);
        let hollow = k(&[&[0, 1], &[1, 2], &[0, 2]]);
        let top = Cochain::new(2, Ring::Integers, [(s(&[0, 1, 2]), 5)]).unwrap();
        assert!(is_cocycle(&top, &tri).unwrap());
        let edge = Cochain::indicator(1, Ring::Z2, [s(&[0, 1])]).unwrap();
        assert!(is_cocycle(&edge, &hollow).unwrap());
        assert!(!is_cocycle(&edge, &tri).unwrap());
    }

    fn complex_and_cochain() -> impl Strategy<Value = (SimplicialComplex, Cochain)> {
        let rings = prop_oneof![Just(Ring::Integers), Just(Ring::Z2), Just(Ring::IntegersMod(7))];
        (
            prop::collection::vec(prop::collection::btree_set(0i64..5, 1..5), 1..4),
            rings,
            0usize..3,
            prop::collection::vec(-5i64..5, 64),
        )
            .prop_map(|(sets, ring, degree, values)| {
                let complex = SimplicialComplex::from_lists(
                    sets.into_iter().map(|s| s.into_iter().collect::<Vec<_>>()),
                )
                .unwrap();
                let cells = complex.simplices_of_dim(degree);
                let c = Cochain::new(degree, ring, cells.into_iter().zip(values)).unwrap();
                (complex, c)
            })
    }

    proptest! {
        #[test]
        fn double_differential_vanishes(mut v in prop::collection::btree_set(-10i64..10, 3..8)) {
            let x = Simplex::new(std::mem::take(&mut v).into_iter().collect()).unwrap();
            for ring in [Ring::Integers, Ring::Z2, Ring::IntegersMod(6)] {
                prop_assert!(differential(&x, ring).differential().is_empty());
            }
        }

        #[test]
        fn double_coboundary_vanishes((complex, c) in complex_and_cochain()) {
            let dc = coboundary(&c, &complex).unwrap();
            prop_assert!(coboundary(&dc, &complex).unwrap().is_zero());
        }

        #[test]
        fn coboundary_is_pairing_with_differential((complex, c) in complex_and_cochain()) {
            let dc = coboundary(&c, &complex).unwrap();
            for x in complex.simplices_of_dim(c.degree() + 1) {
                prop_assert_eq!(dc.evaluate(&x), c.pair(&differential(&x, c.ring())));
            }
        }

        #[test]
        fn pairing_is_linear((complex, c) in complex_and_cochain(), coeffs in prop::collection::vec(-4i64..4, 16)) {
            let ring = c.ring();
            let cells = complex.simplices_of_dim(c.degree());
            let mut chain = FormalSum::new(ring);
            let mut expected = ring.zero();
            for (x, a) in cells.iter().zip(coeffs) {
                let a = ring.element(a);
                expected = ring.add(&expected, &ring.mul(&a, &c.evaluate(x)));
                chain.add_term(x.clone(), &a);
            }
            prop_assert_eq!(c.pair(&chain), expected);
        }
    }
}

#![allow(dead_code)]

use cupsq::{Cochain, Ring, Simplex, SimplicialComplex};
use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn s(v: &[i64]) -> Simplex {
    Simplex::new(v.to_vec()).unwrap()
}

pub fn complex(lists: &[&[i64]]) -> SimplicialComplex {
    SimplicialComplex::from_lists(lists.iter().map(|l| l.to_vec())).unwrap()
}

pub fn solid(dim: i64) -> SimplicialComplex {
    SimplicialComplex::from_lists([(0..=dim).collect::<Vec<_>>()]).unwrap()
}

pub fn rp2() -> SimplicialComplex {
    complex(&[
        &[1, 2, 3],
        &[1, 3, 4],
        &[1, 2, 6],
        &[1, 4, 5],
        &[1, 5, 6],
        &[2, 3, 5],
        &[2, 4, 5],
        &[2, 4, 6],
        &[3, 4, 6],
        &[3, 5, 6],
    ])
}

pub fn hollow_tetrahedron() -> SimplicialComplex {
    complex(&[&[0, 1, 2], &[0, 1, 3], &[0, 2, 3], &[1, 2, 3]])
}

/// A few random simplices on at most `max_vertices` vertices.
pub fn random_complex(rng: &mut impl Rng, max_vertices: i64) -> SimplicialComplex {
    let n = rng.gen_range(3..=max_vertices);
    let vertices: Vec<i64> = (0..n).collect();
    let count = rng.gen_range(1..=4);
    let lists: Vec<Vec<i64>> = (0..count)
        .map(|_| {
            let size = rng.gen_range(2..=n as usize);
            let mut pick: Vec<i64> = vertices.choose_multiple(rng, size).copied().collect();
            pick.sort();
            pick
        })
        .collect();
    SimplicialComplex::from_lists(lists).unwrap()
}

/// A random cochain of the given degree supported on simplices of `k`.
pub fn random_cochain(rng: &mut impl Rng, k: &SimplicialComplex, degree: usize, ring: Ring) -> Cochain {
    let entries: Vec<(Simplex, i64)> = k
        .simplices_of_dim(degree)
        .into_iter()
        .filter_map(|x| rng.gen_bool(0.6).then(|| (x, rng.gen_range(-6..=6))))
        .collect();
    Cochain::new(degree, ring, entries).unwrap()
}

fn delete_positions(x: &Simplex, mut positions: Vec<usize>) -> Simplex {
    positions.sort_unstable_by(|a, b| b.cmp(a));
    let mut y = x.clone();
    for k in positions {
        y = y.face(k).unwrap();
    }
    y
}

fn open_range(a: usize, b: usize) -> impl Iterator<Item = usize> {
    a + 1..b
}

/// `c ⌣_n c'` on `x` straight from the face-operator form of the formula,
/// summing over every `0 ≤ i_0 < … < i_n ≤ m` and evaluating each factor.
pub fn naive_cup(c: &Cochain, cp: &Cochain, x: &Simplex, n: usize) -> BigInt {
    let m = x.dim();
    let p = c.degree();
    let q = cp.degree();
    assert_eq!(m + n, p + q);
    let mut total = BigInt::from(0);
    let mut tuple = Vec::new();
    fn rec(start: usize, left: usize, m: usize, tuple: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if left == 0 {
            f(tuple);
            return;
        }
        for i in start..=m {
            tuple.push(i);
            rec(i + 1, left - 1, m, tuple, f);
            tuple.pop();
        }
    }
    rec(0, n + 1, m, &mut tuple, &mut |t: &[usize]| {
        let mut del_c = Vec::new();
        let mut del_cp: Vec<usize> = (0..t[0]).collect();
        for j in 0..n {
            if j % 2 == 0 {
                del_c.extend(open_range(t[j], t[j + 1]));
            } else {
                del_cp.extend(open_range(t[j], t[j + 1]));
            }
        }
        if n.is_multiple_of(2) {
            del_c.extend(t[n] + 1..=m);
        } else {
            del_cp.extend(t[n] + 1..=m);
        }
        let fc = delete_positions(x, del_c);
        let fcp = delete_positions(x, del_cp);
        let v = c.evaluate(&fc).value() * cp.evaluate(&fcp).value();
        if v == BigInt::from(0) {
            return;
        }
        let e = naive_sign_exponent(n, m, t);
        if e.is_multiple_of(2) {
            total += v;
        } else {
            total -= v;
        }
    });
    total
}

pub fn naive_sign_exponent(n: usize, m: usize, t: &[usize]) -> usize {
    let a = usize::from(matches!(n % 8, 3..=6));
    let b = if matches!(n % 4, 1 | 2) {
        (0..=n / 2).map(|j| t[2 * j]).sum::<usize>()
    } else {
        (0..=(n.saturating_sub(1)) / 2).filter(|j| 2 * j < n).map(|j| t[2 * j + 1]).sum::<usize>() + n * m
    };
    let cc: usize = (1..=n / 2)
        .map(|j| (t[2 * j] + t[2 * j - 1]) * t[..2 * j].iter().sum::<usize>())
        .sum();
    let d = if n % 2 == 1 { (m + t[n]) * t.iter().sum::<usize>() } else { 0 };
    a + b + cc + d
}

/// A random mod-2 cocycle: a random coboundary plus a random combination of
/// cohomology representatives.
pub fn random_cocycle(rng: &mut impl Rng, k: &SimplicialComplex, degree: usize) -> Cochain {
    let mut c = if degree == 0 {
        Cochain::zero(0, Ring::Z2)
    } else {
        let b = random_cochain(rng, k, degree - 1, Ring::Z2);
        cupsq::coboundary(&b, k).unwrap()
    };
    for h in cupsq::verify::cohomology_basis_mod2(k, degree) {
        if rng.gen_bool(0.5) {
            c = c.add(&h).unwrap();
        }
    }
    c
}

#![allow(dead_code)]

pub mod oracle;

use num_bigint::BigInt;
use num_integer::Integer;
use rand::seq::SliceRandom;
use rand::Rng;
use symlp::group::{OrbitPartition, Permutation};
use symlp::numeric::{int, ratio, Matrix, Rational, Vector};
use symlp::LpProblem;

pub fn small_rational<R: Rng>(rng: &mut R, span: i64) -> Rational {
    let denom = rng.gen_range(1..=3);
    ratio(rng.gen_range(-span..=span), denom)
}

pub fn random_vector<R: Rng>(rng: &mut R, n: usize, span: i64) -> Vector {
    (0..n).map(|_| small_rational(rng, span)).collect()
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Permutation {
    let mut images: Vec<usize> = (0..n).collect();
    images.shuffle(rng);
    Permutation::from_images(images).unwrap()
}

pub fn nonzero_vector<R: Rng>(rng: &mut R, n: usize, span: i64) -> Vector {
    loop {
        let v = random_vector(rng, n, span);
        if v.iter().any(|x| *x != int(0)) {
            return v;
        }
    }
}

/// Random LP with `n` variables and `m` rows; entries in `[-span, span]`
/// with denominators up to 3.
pub fn random_lp<R: Rng>(rng: &mut R, n: usize, m: usize, span: i64) -> LpProblem {
    let rows = (0..m).map(|_| random_vector(rng, n, span)).collect();
    let b = (0..m)
        .map(|_| ratio(rng.gen_range(-2..=3 * span), rng.gen_range(1..=2)))
        .collect();
    LpProblem::canonical(
        Matrix::from_rows(n, rows).unwrap(),
        b,
        nonzero_vector(rng, n, span),
    )
    .unwrap()
}

/// Random partition of `0..n` with blocks in arbitrary (interleaved) order.
pub fn random_partition<R: Rng>(rng: &mut R, n: usize) -> OrbitPartition {
    let labels = rng.gen_range(1..=n);
    let mut blocks = vec![Vec::new(); labels];
    for i in 0..n {
        blocks[rng.gen_range(0..labels)].push(i);
    }
    OrbitPartition::new(n, blocks.into_iter().filter(|b| !b.is_empty()).collect()).unwrap()
}

/// A symmetric LP obtained by spreading a `k`-variable LP over orbits.
pub struct Expanded {
    pub lp: LpProblem,
    /// Generators of a symmetry group whose orbits are `orbits`.
    pub generators: Vec<Permutation>,
    pub orbits: OrbitPartition,
    pub base: LpProblem,
}

/// Expands `base` so that variable `i` becomes an orbit of `sizes[i]`
/// variables. Every base row is split into a random pattern per orbit with
/// the base coefficient as its sum; the system is closed under the cyclic
/// shift inside every orbit simultaneously. Variables are then shuffled.
pub fn expand<R: Rng>(rng: &mut R, base: &LpProblem, sizes: &[usize], span: i64) -> Expanded {
    let k = base.n();
    assert_eq!(sizes.len(), k);
    let n: usize = sizes.iter().sum();
    let starts: Vec<usize> = sizes
        .iter()
        .scan(0, |acc, s| {
            let start = *acc;
            *acc += s;
            Some(start)
        })
        .collect();

    let mut shift = vec![0; n];
    for (i, &s) in sizes.iter().enumerate() {
        for r in 0..s {
            shift[starts[i] + r] = starts[i] + (r + 1) % s;
        }
    }
    let shift = Permutation::from_images(shift).unwrap();
    let period = sizes.iter().fold(1usize, |acc, &s| acc.lcm(&s));

    let mut rows: Vec<Vector> = Vec::new();
    let mut b = Vec::new();
    for r in 0..base.m() {
        let mut row = Vec::with_capacity(n);
        for (i, &size) in sizes.iter().enumerate() {
            let target = &base.a().row(r)[i];
            let mut pattern: Vector = (1..size).map(|_| small_rational(rng, span)).collect();
            let partial: Rational = pattern.iter().cloned().sum();
            pattern.push(target - partial);
            row.extend(pattern);
        }
        let mut images = std::collections::BTreeSet::new();
        let mut current = row;
        for _ in 0..period {
            images.insert(current.clone());
            current = shift.act(&current).unwrap();
        }
        for image in images {
            rows.push(image);
            b.push(base.b()[r].clone());
        }
    }
    let mut c = Vec::with_capacity(n);
    for (ci, &size) in base.c().iter().zip(sizes) {
        let share = ci / Rational::from_integer(BigInt::from(size));
        c.extend(std::iter::repeat_n(share, size));
    }

    // Shuffle variables: new index tau(j) holds old variable j.
    let tau = random_permutation(rng, n);
    let rows: Vec<Vector> = rows.iter().map(|r| tau.act(r).unwrap()).collect();
    let c = tau.act(&c).unwrap();
    let lp = LpProblem::canonical(Matrix::from_rows(n, rows).unwrap(), b, c).unwrap();
    let conjugated = tau.inverse().then(&shift).unwrap().then(&tau).unwrap();
    let blocks = sizes
        .iter()
        .enumerate()
        .map(|(i, &s)| (0..s).map(|r| tau.apply(starts[i] + r)).collect())
        .collect();
    Expanded {
        lp,
        generators: vec![conjugated],
        orbits: OrbitPartition::new(n, blocks).unwrap(),
        base: base.clone(),
    }
}

/// A random feasible point of an LP whose origin is feasible: a random
/// nonnegative point on a random support, halved until it satisfies every
/// row. Falls back to the origin.
pub fn random_feasible_point<R: Rng>(rng: &mut R, lp: &LpProblem) -> Option<Vector> {
    for _ in 0..50 {
        let mut x: Vector = (0..lp.n())
            .map(|_| {
                if rng.gen_bool(0.3) {
                    int(0)
                } else {
                    ratio(rng.gen_range(0..=12), rng.gen_range(1..=4))
                }
            })
            .collect();
        for _ in 0..20 {
            if lp.is_feasible(&x).unwrap() {
                return Some(x);
            }
            x = x.iter().map(|v| v / int(2)).collect();
        }
    }
    let origin = vec![int(0); lp.n()];
    lp.is_feasible(&origin).unwrap().then_some(origin)
}

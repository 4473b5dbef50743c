//! Permutations of `{1..n}` and their action on `ℚⁿ`.
//!
//! # Conventions
//!
//! Everything that depends on how a permutation acts lives here:
//!
//! * A permutation `g` moves basis vectors, `e_i ↦ e_{g(i)}`. Hence a point
//!   `x` is sent to `xᵍ` with `(xᵍ)_{g(i)} = x_i`.
//! * [`Permutation::matrix`] returns `P_g` with `P_g e_i = e_{g(i)}`, so
//!   `P_g x = xᵍ`, and column `i` of `A·P_g` is column `g(i)` of `A`. For a
//!   row permutation `σ`, row `σ(i)` of `P_σ·A` is row `i` of `A`.
//! * Products act from the right: `g.then(&h)` is "first `g`, then `h`", so
//!   `x^{gh} = (xᵍ)ʰ` and `P_{gh} = P_h · P_g`.
//!
//! Indices are 0-based internally and 1-based in cycle notation.

mod orbit;
mod signed;

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use crate::error::{check_len, Error, Result};
use crate::numeric::{Matrix, Rational};

pub use orbit::{
    barycenter, group_average, orbit_of_point, orbit_of_point_bounded, orbits_from_generators,
    OrbitPartition,
};
pub use signed::{decompose_signed_permutation, SignedPermutation};

/// Default cap on the number of group elements or orbit points enumerated.
pub const DEFAULT_CLOSURE_LIMIT: usize = 1_000_000;

/// A bijection on `{0..n}`; `images[i]` is the image of `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::NotAPermutation(format!("{images:?}")));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from 1-based images, e.g. `[2, 1, 4, 3]`.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::NotAPermutation(format!("{images:?}")));
        }
        Permutation::from_images(images.iter().map(|i| i - 1).collect())
    }

    /// Parses cycle notation such as `(1 2)(3 4)`. `()` and `id` denote the
    /// identity. Entries are 1-based and separated by whitespace or commas.
    pub fn parse_cycles(text: &str, n: usize) -> Result<Self> {
        let syntax = |reason: &str| Error::CycleSyntax {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        let trimmed = text.trim();
        let mut images: Vec<usize> = (0..n).collect();
        if trimmed == "id" {
            return Ok(Permutation { images });
        }
        let mut used = vec![false; n];
        let mut rest = trimmed;
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| syntax("expected '('"))?;
            let close = body.find(')').ok_or_else(|| syntax("unclosed cycle"))?;
            let inner = &body[..close];
            if inner.contains('(') {
                return Err(syntax("nested '('"));
            }
            let mut cycle = Vec::new();
            for token in inner.split(|c: char| c.is_whitespace() || c == ',') {
                if token.is_empty() {
                    continue;
                }
                let index: usize = token
                    .parse()
                    .map_err(|_| syntax(&format!("bad index {token:?}")))?;
                if index == 0 || index > n {
                    return Err(Error::IndexOutOfRange { index, n });
                }
                if used[index - 1] {
                    return Err(Error::RepeatedIndex { index });
                }
                used[index - 1] = true;
                cycle.push(index - 1);
            }
            for (pos, &from) in cycle.iter().enumerate() {
                images[from] = cycle[(pos + 1) % cycle.len()];
            }
            rest = body[close + 1..].trim_start();
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Result<Permutation> {
        check_len("compose", self.degree(), other.degree())?;
        Ok(Permutation {
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    /// `P_g` with `P_g e_i = e_{g(i)}`.
    pub fn matrix(&self) -> Matrix {
        let n = self.degree();
        let mut m = Matrix::zeros(n, n);
        for (i, &j) in self.images.iter().enumerate() {
            m[(j, i)] = Rational::from_integer(1.into());
        }
        m
    }

    /// `xᵍ`, i.e. `P_g x`.
    pub fn act<T: Clone>(&self, x: &[T]) -> Result<Vec<T>> {
        check_len("permute vector", self.degree(), x.len())?;
        let mut out = x.to_vec();
        for (i, &j) in self.images.iter().enumerate() {
            out[j] = x[i].clone();
        }
        Ok(out)
    }

    /// Disjoint cycles of length ≥ 2, each starting at its smallest element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut cycles = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut next = self.images[start];
            while next != start {
                seen[next] = true;
                cycle.push(next);
                next = self.images[next];
            }
            if cycle.len() > 1 {
                cycles.push(cycle);
            }
        }
        cycles
    }

    /// Cycle notation, 1-based; the identity prints as `()`.
    pub fn to_cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        cycles
            .iter()
            .map(|c| {
                let parts: Vec<String> = c.iter().map(|i| (i + 1).to_string()).collect();
                format!("({})", parts.join(" "))
            })
            .collect()
    }
}

/// `g` followed by `h`.
pub fn compose(g: &Permutation, h: &Permutation) -> Result<Permutation> {
    g.then(h)
}

pub fn inverse(g: &Permutation) -> Permutation {
    g.inverse()
}

pub fn parse_cycles(text: &str, n: usize) -> Result<Permutation> {
    Permutation::parse_cycles(text, n)
}

pub fn permutation_matrix(g: &Permutation) -> Matrix {
    g.matrix()
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_cycle_string())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_cycle_string())
    }
}

fn check_degrees(gens: &[Permutation], n: usize) -> Result<()> {
    for g in gens {
        check_len("generator degree", n, g.degree())?;
    }
    Ok(())
}

/// All elements of `⟨gens⟩` by breadth-first closure, sorted by image array.
/// Fails once more than `limit` elements have been found.
pub fn group_closure(gens: &[Permutation], n: usize, limit: usize) -> Result<Vec<Permutation>> {
    check_degrees(gens, n)?;
    let limit = limit.max(1);
    let identity = Permutation::identity(n);
    let mut seen: HashSet<Permutation> = HashSet::from([identity.clone()]);
    let mut queue = VecDeque::from([identity]);
    while let Some(current) = queue.pop_front() {
        for g in gens {
            let next = current.then(g)?;
            if seen.insert(next.clone()) {
                if seen.len() > limit {
                    return Err(Error::ClosureLimitExceeded { limit });
                }
                queue.push_back(next);
            }
        }
    }
    let sorted: BTreeSet<Permutation> = seen.into_iter().collect();
    Ok(sorted.into_iter().collect())
}

use std::collections::{BTreeSet, VecDeque};

use num_traits::Zero;

use super::{check_degrees, Permutation};
use crate::error::{check_len, Error, Result};
use crate::numeric::{Rational, Vector};

/// A partition of `{0..n}` into orbits.
///
/// Blocks are sorted ascending internally and ordered by their smallest
/// member, so two partitions with the same blocks compare equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl OrbitPartition {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n];
        let mut blocks: Vec<Vec<usize>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        for block in &blocks {
            if block.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            for &i in block {
                if i >= n {
                    return Err(Error::InvalidPartition(format!(
                        "index {} exceeds n = {n}",
                        i + 1
                    )));
                }
                if seen[i] {
                    return Err(Error::InvalidPartition(format!(
                        "index {} in two blocks",
                        i + 1
                    )));
                }
                seen[i] = true;
            }
        }
        if let Some(missing) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidPartition(format!(
                "index {} not covered",
                missing + 1
            )));
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(OrbitPartition { n, blocks })
    }

    /// Every index in its own block.
    pub fn singletons(n: usize) -> Self {
        OrbitPartition {
            n,
            blocks: (0..n).map(|i| vec![i]).collect(),
        }
    }

    /// Contiguous blocks of the given sizes.
    pub fn contiguous(sizes: &[usize]) -> Result<Self> {
        let mut start = 0;
        let mut blocks = Vec::with_capacity(sizes.len());
        for &size in sizes {
            blocks.push((start..start + size).collect());
            start += size;
        }
        OrbitPartition::new(start, blocks)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Block sizes `n_i`.
    pub fn sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    /// Cumulative sizes `s_i = n_1 + … + n_i`; the last entry is `n`.
    pub fn offsets(&self) -> Vec<usize> {
        self.blocks
            .iter()
            .scan(0, |acc, b| {
                *acc += b.len();
                Some(*acc)
            })
            .collect()
    }

    /// Block index of every element.
    pub fn block_of(&self) -> Vec<usize> {
        let mut owner = vec![0; self.n];
        for (bi, block) in self.blocks.iter().enumerate() {
            for &i in block {
                owner[i] = bi;
            }
        }
        owner
    }

    /// True when block `i` is `{s_{i-1}, …, s_i - 1}`.
    pub fn is_contiguous(&self) -> bool {
        let mut next = 0;
        for block in &self.blocks {
            for &i in block {
                if i != next {
                    return false;
                }
                next += 1;
            }
        }
        true
    }

    pub fn is_trivial(&self) -> bool {
        self.k() == self.n
    }

    /// Whether `x` takes one value on each block.
    pub fn is_constant_on_blocks(&self, x: &[Rational]) -> bool {
        self.first_nonconstant_block(x).is_none()
    }

    pub(crate) fn first_nonconstant_block(&self, x: &[Rational]) -> Option<usize> {
        self.blocks
            .iter()
            .position(|b| b.iter().any(|&i| x[i] != x[b[0]]))
    }

    /// The partition after renaming every index `i` to `relabel.apply(i)`.
    pub fn relabel(&self, relabel: &Permutation) -> Result<OrbitPartition> {
        check_len("relabel partition", self.n, relabel.degree())?;
        OrbitPartition::new(
            self.n,
            self.blocks
                .iter()
                .map(|b| b.iter().map(|&i| relabel.apply(i)).collect())
                .collect(),
        )
    }

    /// Blocks as 1-based index lists.
    pub fn to_one_based(&self) -> Vec<Vec<usize>> {
        self.blocks
            .iter()
            .map(|b| b.iter().map(|i| i + 1).collect())
            .collect()
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // Keep the smaller index as root.
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

/// Orbits of `⟨gens⟩` on `{0..n}`: connected components of `i ~ g(i)`.
pub fn orbits_from_generators(gens: &[Permutation], n: usize) -> Result<OrbitPartition> {
    check_degrees(gens, n)?;
    let mut uf = UnionFind::new(n);
    for g in gens {
        for i in 0..n {
            uf.union(i, g.apply(i));
        }
    }
    let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); n];
    for i in 0..n {
        let root = uf.find(i);
        blocks[root].push(i);
    }
    OrbitPartition::new(n, blocks.into_iter().filter(|b| !b.is_empty()).collect())
}

/// The orbit `x^G` as a set.
pub fn orbit_of_point(gens: &[Permutation], x: &[Rational]) -> Result<BTreeSet<Vector>> {
    orbit_of_point_bounded(gens, x, usize::MAX)
}

/// Like [`orbit_of_point`], failing once the orbit exceeds `limit` points.
pub fn orbit_of_point_bounded(
    gens: &[Permutation],
    x: &[Rational],
    limit: usize,
) -> Result<BTreeSet<Vector>> {
    check_degrees(gens, x.len())?;
    let limit = limit.max(1);
    let mut orbit = BTreeSet::from([x.to_vec()]);
    let mut queue = VecDeque::from([x.to_vec()]);
    while let Some(current) = queue.pop_front() {
        for g in gens {
            let next = g.act(&current)?;
            if !orbit.contains(&next) {
                if orbit.len() >= limit {
                    return Err(Error::ClosureLimitExceeded { limit });
                }
                orbit.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    Ok(orbit)
}

fn average<'a>(points: impl IntoIterator<Item = &'a Vector>, n: usize) -> Vector {
    let mut sum = vec![Rational::zero(); n];
    let mut count = 0usize;
    for p in points {
        for (s, v) in sum.iter_mut().zip(p) {
            *s += v;
        }
        count += 1;
    }
    let count = Rational::from_integer(count.into());
    sum.into_iter().map(|s| s / &count).collect()
}

/// Barycenter `(1/|x^G|) Σ_{y ∈ x^G} y` of the orbit of `x`.
pub fn barycenter(gens: &[Permutation], x: &[Rational], limit: usize) -> Result<Vector> {
    let orbit = orbit_of_point_bounded(gens, x, limit)?;
    Ok(average(&orbit, x.len()))
}

/// Group average `(1/|G|) Σ_{g ∈ G} xᵍ` over an explicit element list.
pub fn group_average(elements: &[Permutation], x: &[Rational]) -> Result<Vector> {
    let images: Vec<Vector> = elements.iter().map(|g| g.act(x)).collect::<Result<_>>()?;
    Ok(average(&images, x.len()))
}

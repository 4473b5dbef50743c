//! Dimension reduction by orbit substitution.
//!
//! Given an orbit partition of the variables coming from a symmetry group,
//! variables are first renamed so every orbit is a contiguous block. The
//! projection `P` then replaces each block by its first variable, the
//! retraction `M_r` expands a point of `ℚᵏ` into the fixed space, and the
//! inclusion `M_ι` reads off one representative per block.
//!
//! `M_ι·M_r = I_k`, `M_r·M_ι = P`, `P² = P` and `rank P = k`.

use std::collections::BTreeSet;

use num_traits::Zero;

use crate::error::{check_len, Error, Result};
use crate::group::{orbits_from_generators, OrbitPartition, Permutation};
use crate::lp::LpProblem;
use crate::numeric::{Matrix, Rational, Vector};
use crate::symmetry::{detect_symmetries, DetectOptions};

/// Matrices relating the original space and the `k`-dimensional retract.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionMaps {
    /// `pi.apply(j)` is the reindexed position of original variable `j`.
    pub pi: Permutation,
    /// Orbits in reindexed coordinates; always contiguous.
    pub orbits: OrbitPartition,
    /// `n × n` projection onto the fixed space.
    pub p: Matrix,
    /// `n × k` retraction.
    pub m_r: Matrix,
    /// `k × n` inclusion.
    pub m_iota: Matrix,
}

impl ReductionMaps {
    pub fn n(&self) -> usize {
        self.orbits.n()
    }

    pub fn k(&self) -> usize {
        self.orbits.k()
    }
}

/// Result of [`reduce`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedLp {
    /// The `k`-variable retract `max (ĉᵗM_r) y, (Â M_r) y ≤ b`.
    pub lp: LpProblem,
    pub maps: ReductionMaps,
    pub original_n: usize,
    /// `ĉᵗ = cᵗP` in reindexed coordinates.
    pub c_hat: Vector,
    /// `Â = A·P` in reindexed coordinates.
    pub a_hat: Matrix,
}

impl ReducedLp {
    pub fn lift(&self, y: &[Rational]) -> Result<Vector> {
        lift(y, &self.maps)
    }
}

/// Renaming that makes every orbit contiguous.
///
/// Blocks keep their order (by smallest original member) and members keep
/// ascending order inside a block.
pub fn canonical_reindex(orbits: &OrbitPartition) -> Permutation {
    let mut images = vec![0; orbits.n()];
    let mut next = 0;
    for block in orbits.blocks() {
        for &j in block {
            images[j] = next;
            next += 1;
        }
    }
    Permutation::from_images(images).expect("partition blocks cover 0..n once")
}

/// The same LP with variable `j` renamed to `pi.apply(j)`.
pub fn reindex_lp(lp: &LpProblem, pi: &Permutation) -> Result<LpProblem> {
    check_len("reindex_lp", lp.n(), pi.degree())?;
    let rows = lp
        .a()
        .row_vectors()
        .iter()
        .map(|r| pi.act(r))
        .collect::<Result<Vec<_>>>()?;
    LpProblem::new(
        Matrix::from_rows(lp.n(), rows)?,
        lp.b().to_vec(),
        pi.act(lp.c())?,
        lp.nonneg(),
    )
}

/// `P`, `M_r` and `M_ι` for a contiguous partition.
///
/// Each diagonal block of `P` has ones in its first column and zeros
/// elsewhere. Column `i` of `M_r` is the indicator of block `i`; row `i` of
/// `M_ι` selects the first index of block `i`.
pub fn build_projection(orbits: &OrbitPartition) -> Result<(Matrix, Matrix, Matrix)> {
    if !orbits.is_contiguous() {
        return Err(Error::NonContiguousPartition);
    }
    let (n, k) = (orbits.n(), orbits.k());
    let one = Rational::from_integer(1.into());
    let mut p = Matrix::zeros(n, n);
    let mut m_r = Matrix::zeros(n, k);
    let mut m_iota = Matrix::zeros(k, n);
    for (i, block) in orbits.blocks().iter().enumerate() {
        let rep = block[0];
        m_iota[(i, rep)] = one.clone();
        for &j in block {
            p[(j, rep)] = one.clone();
            m_r[(j, i)] = one.clone();
        }
    }
    Ok((p, m_r, m_iota))
}

/// `ĉᵗ = cᵗP` and `Â = A·P` for an LP whose orbits are already contiguous.
///
/// Fails if `c` is not constant on some orbit, which means the partition
/// cannot come from a symmetry group of `lp`.
pub fn substitute(lp: &LpProblem, orbits: &OrbitPartition) -> Result<(Vector, Matrix)> {
    check_len("substitute", lp.n(), orbits.n())?;
    if let Some(block) = orbits.first_nonconstant_block(lp.c()) {
        return Err(Error::UtilityNotOrbitConstant { orbit: block + 1 });
    }
    let (p, _, _) = build_projection(orbits)?;
    Ok((p.left_mul_vec(lp.c())?, lp.a().mul(&p)?))
}

/// Builds the `k`-dimensional retract of `lp` for an arbitrary orbit
/// partition (reindexing internally).
pub fn reduce(lp: &LpProblem, orbits: &OrbitPartition) -> Result<ReducedLp> {
    check_len("reduce", lp.n(), orbits.n())?;
    let pi = canonical_reindex(orbits);
    let reindexed = reindex_lp(lp, &pi)?;
    let contiguous = orbits.relabel(&pi)?;
    let (c_hat, a_hat) = substitute(&reindexed, &contiguous)?;
    let (p, m_r, m_iota) = build_projection(&contiguous)?;
    let retract = LpProblem::new(
        a_hat.mul(&m_r)?,
        lp.b().to_vec(),
        m_r.left_mul_vec(&c_hat)?,
        lp.nonneg(),
    )?;
    Ok(ReducedLp {
        lp: retract,
        maps: ReductionMaps {
            pi,
            orbits: contiguous,
            p,
            m_r,
            m_iota,
        },
        original_n: lp.n(),
        c_hat,
        a_hat,
    })
}

/// `x = π⁻¹(M_r y)`: a retract point in original coordinates.
pub fn lift(y: &[Rational], maps: &ReductionMaps) -> Result<Vector> {
    check_len("lift", maps.k(), y.len())?;
    let reindexed = maps.m_r.mul_vec(y)?;
    maps.pi.inverse().act(&reindexed)
}

/// Barycenter of the orbit of a feasible `x` under the listed group
/// elements. The result is feasible, fixed by the group and has the same
/// utility as `x` whenever the elements are symmetries of `lp`.
pub fn fixed_point_of(
    lp: &LpProblem,
    group_elements: &[Permutation],
    x: &[Rational],
) -> Result<Vector> {
    if !lp.is_feasible(x)? {
        return Err(Error::InfeasiblePoint);
    }
    let mut orbit = BTreeSet::from([x.to_vec()]);
    for g in group_elements {
        orbit.insert(g.act(x)?);
    }
    let mut sum = vec![Rational::zero(); x.len()];
    for y in &orbit {
        for (s, v) in sum.iter_mut().zip(y) {
            *s += v;
        }
    }
    let count = Rational::from_integer(orbit.len().into());
    Ok(sum.into_iter().map(|s| s / &count).collect())
}

/// One round of [`iterate_reduce`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionStage {
    /// Symmetries used in this round, in the coordinates of the LP being
    /// reduced (generators if supplied, all elements if detected).
    pub symmetries: Vec<Permutation>,
    pub reduced: ReducedLp,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IteratedReduction {
    pub stages: Vec<ReductionStage>,
    /// The LP left after the last round; the input itself if no round ran.
    pub final_lp: LpProblem,
}

impl IteratedReduction {
    /// Maps a point of `final_lp` back through every stage.
    pub fn lift(&self, y: &[Rational]) -> Result<Vector> {
        self.stages
            .iter()
            .rev()
            .try_fold(y.to_vec(), |point, stage| stage.reduced.lift(&point))
    }

    pub fn rounds(&self) -> usize {
        self.stages.len()
    }
}

/// Repeatedly reduces `lp` until its symmetry group is trivial or
/// `max_rounds` rounds have run.
///
/// The first round uses `seed` generators when given (the caller is
/// expected to have verified them); every other round runs detection on the
/// current retract. A detection failure in the first round is returned;
/// in later rounds it ends the iteration.
pub fn iterate_reduce(
    lp: &LpProblem,
    seed: Option<&[Permutation]>,
    max_rounds: usize,
    options: DetectOptions,
) -> Result<IteratedReduction> {
    let mut stages = Vec::new();
    let mut current = lp.clone();
    for round in 0..max_rounds.max(1) {
        let symmetries = match (round, seed) {
            (0, Some(gens)) => gens.to_vec(),
            (0, None) => detect_symmetries(&current, options)?,
            _ => match detect_symmetries(&current, options) {
                Ok(found) => found,
                Err(Error::DimensionTooLarge { .. }) => break,
                Err(e) => return Err(e),
            },
        };
        let orbits = orbits_from_generators(&symmetries, current.n())?;
        if orbits.is_trivial() {
            break;
        }
        let reduced = reduce(&current, &orbits)?;
        current = reduced.lp.clone();
        stages.push(ReductionStage {
            symmetries,
            reduced,
        });
    }
    Ok(IteratedReduction {
        stages,
        final_lp: current,
    })
}

use num_traits::{One, Zero};

use super::Permutation;
use crate::error::{Error, Result};
use crate::numeric::{int, Matrix};

/// Factorisation `M = D·P_p` of a signed permutation matrix into a ±1
/// diagonal `D` and a permutation matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedPermutation {
    pub signs: Vec<i8>,
    pub perm: Permutation,
}

impl SignedPermutation {
    pub fn to_matrix(&self) -> Matrix {
        let n = self.signs.len();
        let mut d = Matrix::zeros(n, n);
        for (i, &s) in self.signs.iter().enumerate() {
            d[(i, i)] = int(s.into());
        }
        d.mul(&self.perm.matrix())
            .expect("diagonal and permutation share a dimension")
    }
}

/// Splits a square matrix into `D·P_p`, or reports the first column that is
/// not `±e_r` for a row `r` unused by earlier columns.
///
/// Column `i` of `D·P_p` is `d_{p(i)} e_{p(i)}`, which determines both
/// factors uniquely.
pub fn decompose_signed_permutation(m: &Matrix) -> Result<SignedPermutation> {
    let n = m.rows();
    if m.cols() != n {
        return Err(Error::DimensionMismatch {
            op: "decompose_signed_permutation",
            expected: n,
            found: m.cols(),
        });
    }
    let mut images = vec![0; n];
    let mut signs = vec![0i8; n];
    let mut row_used = vec![false; n];
    for col in 0..n {
        let mut support = None;
        for row in 0..n {
            let v = &m[(row, col)];
            if v.is_zero() {
                continue;
            }
            let sign = if v.is_one() {
                1
            } else if (-v).is_one() {
                -1
            } else {
                return Err(Error::NotSignedPermutation { column: col + 1 });
            };
            if support.is_some() {
                return Err(Error::NotSignedPermutation { column: col + 1 });
            }
            support = Some((row, sign));
        }
        let Some((row, sign)) = support else {
            return Err(Error::NotSignedPermutation { column: col + 1 });
        };
        if row_used[row] {
            return Err(Error::NotSignedPermutation { column: col + 1 });
        }
        row_used[row] = true;
        images[col] = row;
        signs[row] = sign;
    }
    Ok(SignedPermutation {
        signs,
        perm: Permutation::from_images(images)?,
    })
}

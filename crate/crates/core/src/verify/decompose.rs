//! Invariant decomposition of a user-supplied matrix.

use serde::{Deserialize, Serialize};

use crate::algebra::PrimeField;
use crate::error::{Error, Result};
use crate::linalg::{charpoly, FlMatrix};
use crate::symplectic::{decomposition_violations, invariant_decomposition, BlockKind, SymplecticSpace};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BlockReport {
    pub kind: BlockKind,
    pub dim: usize,
    /// Rows are basis vectors of the block.
    pub basis: Vec<Vec<u64>>,
    pub charpoly: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DecompositionReport {
    pub ell: u64,
    pub matrix: Vec<Vec<u64>>,
    pub charpoly: Vec<u64>,
    pub blocks: Vec<BlockReport>,
    pub violations: Vec<String>,
    pub passed: bool,
}

/// Parses a JSON array of integer rows.
pub fn parse_matrix_json(ell: u64, text: &str) -> Result<FlMatrix> {
    let rows: Vec<Vec<i64>> =
        serde_json::from_str(text).map_err(|e| Error::InvalidConfig(format!("matrix is not a JSON array of integer rows: {e}")))?;
    FlMatrix::from_rows(PrimeField::new(ell)?, &rows)
}

/// Decomposes a semisimple symplectomorphism of the standard space and
/// checks every block invariant.
pub fn decompose_matrix(g: &FlMatrix, seed: u64) -> Result<DecompositionReport> {
    if !g.is_square() || !g.rows().is_multiple_of(2) || g.rows() == 0 {
        return Err(Error::DimensionMismatch(format!(
            "expected a square matrix of positive even size, got {}x{}",
            g.rows(),
            g.cols()
        )));
    }
    let space = SymplecticSpace::standard(g.field(), g.rows() / 2)?;
    let blocks = invariant_decomposition(&space, g, seed)?;
    let violations = decomposition_violations(&space, g, &blocks)?;
    Ok(DecompositionReport {
        ell: g.field().modulus(),
        matrix: g.to_u64_rows(),
        charpoly: charpoly(g)?.coeff_values(),
        blocks: blocks
            .iter()
            .map(|b| BlockReport {
                kind: b.kind,
                dim: b.subspace.dim(),
                basis: b.subspace.basis_vectors().iter().map(|v| v.iter().map(|x| x.value()).collect()).collect(),
                charpoly: b.charpoly.coeff_values(),
            })
            .collect(),
        passed: violations.is_empty(),
        violations,
    })
}

//! Energy ratios of the three-branch trees `B_k`.

use c4energy_core::constructions::{b_tree, b_tree_order};
use c4energy_core::spectra::{energy, SpectrumError};
use c4energy_core::GraphError;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest `k` tabulated (order 3070).
pub const MAX_K: u32 = 9;

#[derive(Debug, Error)]
pub enum ConjectureError {
    #[error("k = {k} exceeds the supported maximum {MAX_K}")]
    KTooLarge { k: u32 },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConjectureRow {
    pub k: u32,
    pub order: usize,
    pub energy: f64,
    pub ratio: f64,
}

/// Rows for `k = 0..=max_k`.
pub fn conjecture_table(max_k: u32) -> Result<Vec<ConjectureRow>, ConjectureError> {
    if max_k > MAX_K {
        return Err(ConjectureError::KTooLarge { k: max_k });
    }
    (0..=max_k)
        .map(|k| {
            let g = b_tree(k)?;
            let e = energy(&g)?;
            let order = b_tree_order(k);
            Ok(ConjectureRow { k, order, energy: e, ratio: e / order as f64 })
        })
        .collect()
}

/// Energy of `B_k` next to the energy of a randomly relabelled copy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PermutationCheck {
    pub k: u32,
    pub energy: f64,
    pub permuted_energy: f64,
}

impl PermutationCheck {
    pub fn difference(&self) -> f64 {
        (self.energy - self.permuted_energy).abs()
    }
}

pub fn permutation_check(k: u32, seed: u64) -> Result<PermutationCheck, ConjectureError> {
    if k > MAX_K {
        return Err(ConjectureError::KTooLarge { k });
    }
    let g = b_tree(k)?;
    let mut perm: Vec<usize> = (0..g.order()).collect();
    perm.shuffle(&mut StdRng::seed_from_u64(seed));
    let h = g.relabel(&perm);
    Ok(PermutationCheck { k, energy: energy(&g)?, permuted_energy: energy(&h)? })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_table() {
        let rows = conjecture_table(3).unwrap();
        assert_eq!(rows.iter().map(|r| r.order).collect::<Vec<_>>(), vec![4, 10, 22, 46]);
        assert!((rows[0].energy - 2.0 * 3f64.sqrt()).abs() < 1e-12);
        assert!(conjecture_table(MAX_K + 1).is_err());
    }

    #[test]
    fn relabelling_keeps_energy() {
        let c = permutation_check(2, 7).unwrap();
        assert!(c.difference() < 1e-10, "{c:?}");
    }
}

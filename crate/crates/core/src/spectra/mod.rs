//! Adjacency spectra, graph energy and spectral moments.

pub mod eigen;

use crate::graph::Graph;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use libm::fabs;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpectrumError {
    /// The QL iteration exceeded [`eigen::MAX_SWEEPS`] on this eigenvalue.
    NoConvergence { index: usize },
    /// Only the second and fourth moments are supported.
    UnsupportedMoment { power: u32 },
}

impl fmt::Display for SpectrumError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpectrumError::NoConvergence { index } => {
                write!(f, "eigenvalue {index} did not converge within {} QL sweeps", eigen::MAX_SWEEPS)
            }
            SpectrumError::UnsupportedMoment { power } => {
                write!(f, "spectral moment of power {power} is not supported (use 2 or 4)")
            }
        }
    }
}

impl core::error::Error for SpectrumError {}

/// Adjacency eigenvalues sorted non-increasingly, with the largest
/// eigenpair residual `max_j ‖A v_j − μ_j v_j‖∞` of the decomposition.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
    residual: f64,
}

impl Spectrum {
    /// Wraps externally computed eigenvalues (sorted here).
    pub fn from_values(mut values: Vec<f64>, residual: f64) -> Spectrum {
        values.sort_by(|a, b| b.total_cmp(a));
        Spectrum { values, residual }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn residual(&self) -> f64 {
        self.residual
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `μ₁`.
    pub fn spectral_radius(&self) -> f64 {
        self.values[0]
    }

    pub fn smallest(&self) -> f64 {
        self.values[self.values.len() - 1]
    }

    /// `Σ |μ_i|`.
    pub fn energy(&self) -> f64 {
        self.values.iter().map(|&x| fabs(x)).sum()
    }

    pub fn trace(&self) -> f64 {
        self.values.iter().sum()
    }

    /// `Σ μ_i^k` for `k ∈ {2, 4}`.
    pub fn moment(&self, k: u32) -> Result<f64, SpectrumError> {
        match k {
            2 => Ok(self.values.iter().map(|x| x * x).sum()),
            4 => Ok(self.values.iter().map(|x| (x * x) * (x * x)).sum()),
            power => Err(SpectrumError::UnsupportedMoment { power }),
        }
    }
}

/// Column-major dense adjacency matrix.
pub(crate) fn adjacency_matrix(g: &Graph) -> Vec<f64> {
    let n = g.order();
    let mut a = vec![0.0; n * n];
    for (u, v) in g.edges() {
        a[u * n + v] = 1.0;
        a[v * n + u] = 1.0;
    }
    a
}

/// The adjacency spectrum of `g`.
pub fn spectrum(g: &Graph) -> Result<Spectrum, SpectrumError> {
    let n = g.order();
    let dec = eigen::decompose(adjacency_matrix(g), n, true).map_err(|index| SpectrumError::NoConvergence { index })?;
    let z = dec.vectors.expect("requested eigenvectors");
    let mut residual: f64 = 0.0;
    for (j, &mu) in dec.values.iter().enumerate() {
        let col = &z[j * n..(j + 1) * n];
        for (r, &vr) in col.iter().enumerate() {
            let av: f64 = g.neighbors(r).map(|c| col[c]).sum();
            residual = residual.max(fabs(av - mu * vr));
        }
    }
    Ok(Spectrum::from_values(dec.values, residual))
}

/// Eigenvalues recomputed by Sturm bisection on the Householder
/// tridiagonal form, to full working precision.
///
/// Returns the spectrum and an error radius for the energy: the sum of the
/// final bisection half-widths plus an `n²·ε·‖A‖_F` allowance for the
/// orthogonal reduction.
pub fn refined_spectrum(g: &Graph) -> (Spectrum, f64) {
    let n = g.order();
    let t = eigen::tridiagonalize(adjacency_matrix(g), n);
    let pairs = t.bisect_all();
    let frob = libm::sqrt(2.0 * g.size() as f64);
    let reduction = (n * n) as f64 * f64::EPSILON * frob;
    let radius = pairs.iter().map(|&(_, w)| w).sum::<f64>() + reduction;
    let values = pairs.into_iter().map(|(x, _)| x).collect();
    (Spectrum::from_values(values, reduction), radius)
}

/// Graph energy `Σ |μ_i|`.
pub fn energy(g: &Graph) -> Result<f64, SpectrumError> {
    spectrum(g).map(|s| s.energy())
}

/// Per-graph energy record.
#[derive(Debug, Clone, PartialEq)]
pub struct EnergyReport {
    /// Canonical code, graph6 string or construction name.
    pub label: String,
    pub order: usize,
    pub edges: usize,
    pub energy: f64,
    pub mu1: f64,
    /// `E − n`.
    pub deficit: f64,
}

impl EnergyReport {
    pub fn new(label: impl Into<String>, g: &Graph, s: &Spectrum) -> EnergyReport {
        let energy = s.energy();
        EnergyReport {
            label: label.into(),
            order: g.order(),
            edges: g.size(),
            energy,
            mu1: s.spectral_radius().max(0.0),
            deficit: energy - g.order() as f64,
        }
    }
}

/// `|Σμ² − 2m|` and `|Σμ⁴ − (2Σd² − 2m + 8C)|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentResiduals {
    pub second: f64,
    pub fourth: f64,
    /// `Σμ⁴` as computed from the spectrum.
    pub fourth_moment: f64,
}

/// Checks the closed-walk identities for the second and fourth moments.
pub fn verify_moment_identities(g: &Graph) -> Result<MomentResiduals, SpectrumError> {
    let s = spectrum(g)?;
    Ok(moment_residuals(g, &s, g.count_c4()))
}

/// Moment residuals of an already computed spectrum, with the 4-cycle count
/// supplied by the caller.
pub fn moment_residuals(g: &Graph, s: &Spectrum, c4: u64) -> MomentResiduals {
    let m = g.size() as f64;
    let p2 = s.moment(2).expect("supported");
    let p4 = s.moment(4).expect("supported");
    let exact4 = 2.0 * g.degree_square_sum() as f64 - 2.0 * m + 8.0 * c4 as f64;
    MomentResiduals { second: fabs(p2 - 2.0 * m), fourth: fabs(p4 - exact4), fourth_moment: p4 }
}

/// `Σ d_u² ≤ n·μ₁²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HofmeisterCheck {
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
}

pub fn hofmeister_check(g: &Graph) -> Result<HofmeisterCheck, SpectrumError> {
    let s = spectrum(g)?;
    Ok(hofmeister_with(g, &s))
}

pub fn hofmeister_with(g: &Graph, s: &Spectrum) -> HofmeisterCheck {
    let n = g.order() as f64;
    let mu = s.spectral_radius();
    let lhs = g.degree_square_sum() as f64;
    let rhs = n * mu * mu;
    let tol = crate::MARGIN * n * g.max_degree().max(1) as f64;
    HofmeisterCheck { lhs, rhs, holds: lhs <= rhs + tol }
}

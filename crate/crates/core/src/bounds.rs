//! Edge-density threshold, degree and moment bounds, theorem verdicts.
//!
//! Two conventions hold throughout:
//!
//! * Moment-based bounds use the exact integer closed-walk counts
//!   `p₂ = 2m` and `p₄ = 2Σd² − 2m + 8C`, so comparing a bound against the
//!   computed energy exercises the eigensolver instead of re-deriving the same
//!   floating-point numbers.
//! * The degree-square bound is `Σd² ≤ 2m(d+1) − dn`, the sum over all
//!   vertices of `(d_i − 1)(d_i − d) ≤ 0`.

use crate::graph::{canonical_code, Graph};
use crate::spectra::{spectrum, Spectrum, SpectrumError};
use crate::MARGIN;
use core::fmt;
use libm::{fabs, sqrt};

#[derive(Debug, Clone, PartialEq)]
pub enum BoundsError {
    /// The degree parameter is below the supported minimum.
    DegreeTooSmall {
        d: u32,
        min: u32,
    },
    /// The bipartite refinement needs a connected bipartite graph.
    NotConnectedBipartite,
    /// The denominator of the bipartite refinement is not positive.
    Inapplicable {
        numerator: f64,
        denominator: f64,
    },
    Spectrum(SpectrumError),
}

impl fmt::Display for BoundsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundsError::DegreeTooSmall { d, min } => write!(f, "degree bound {d} is below {min}"),
            BoundsError::NotConnectedBipartite => {
                write!(f, "bound requires a connected bipartite graph")
            }
            BoundsError::Inapplicable { numerator, denominator } => {
                write!(f, "bound inapplicable: numerator {numerator:e}, non-positive denominator {denominator:e}")
            }
            BoundsError::Spectrum(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for BoundsError {}

impl From<SpectrumError> for BoundsError {
    fn from(e: SpectrumError) -> Self {
        BoundsError::Spectrum(e)
    }
}

// ---------------------------------------------------------------------------
// alpha(d)
// ---------------------------------------------------------------------------

/// `4x³ − (2d+1)x + d`.
#[inline]
pub fn alpha_cubic(d: u32, x: f64) -> f64 {
    let d = d as f64;
    (4.0 * x * x - (2.0 * d + 1.0)) * x + d
}

/// The largest real root of `4x³ − (2d+1)x + d` with a bracket on which the
/// cubic changes sign.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlphaResult {
    pub d: u32,
    pub value: f64,
    pub bracket: (f64, f64),
    pub iterations: u32,
}

impl AlphaResult {
    /// `|4α³ − (2d+1)α + d|`.
    pub fn residual(&self) -> f64 {
        fabs(alpha_cubic(self.d, self.value))
    }
}

/// `(√((2d+1)/4) − 1/3, √((2d+1)/4))`, which encloses `alpha(d)` for `d ≥ 4`.
pub fn alpha_bounds(d: u32) -> Result<(f64, f64), BoundsError> {
    if d < 4 {
        return Err(BoundsError::DegreeTooSmall { d, min: 4 });
    }
    let hi = sqrt((2.0 * d as f64 + 1.0) / 4.0);
    Ok((hi - 1.0 / 3.0, hi))
}

/// Width at which bisection stops before the Newton polish.
const ALPHA_WIDTH: f64 = 1e-14;

/// `alpha(d)` for `d ≥ 3`.
///
/// For `d = 3` the cubic factors as `(x − 1)(2x − 1)(2x + 3)` and the root is
/// exactly 1. Otherwise the bracket from [`alpha_bounds`] is bisected down to
/// `1e-14` and the midpoint gets two Newton steps, kept only if they stay in
/// the bracket and do not increase the residual.
pub fn alpha(d: u32) -> Result<AlphaResult, BoundsError> {
    if d < 3 {
        return Err(BoundsError::DegreeTooSmall { d, min: 3 });
    }
    if d == 3 {
        return Ok(AlphaResult { d, value: 1.0, bracket: (1.0, 1.0), iterations: 0 });
    }
    let (mut lo, mut hi) = alpha_bounds(d)?;
    debug_assert!(alpha_cubic(d, lo) < 0.0 && alpha_cubic(d, hi) > 0.0);
    let mut iterations = 0;
    while hi - lo > ALPHA_WIDTH {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        iterations += 1;
        if alpha_cubic(d, mid) > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let mut value = 0.5 * (lo + hi);
    let df = |x: f64| 12.0 * x * x - (2.0 * d as f64 + 1.0);
    for _ in 0..2 {
        let step = value - alpha_cubic(d, value) / df(value);
        if (lo..=hi).contains(&step) && fabs(alpha_cubic(d, step)) <= fabs(alpha_cubic(d, value)) {
            value = step;
        }
    }
    Ok(AlphaResult { d, value, bracket: (lo, hi), iterations })
}

// ---------------------------------------------------------------------------
// Degree and moment bounds
// ---------------------------------------------------------------------------

/// `2m(d+1) − dn`, an upper bound on `Σd_i²` when every degree lies in `[1, d]`.
pub fn degree_square_bound(n: u64, m: u64, d: u64) -> i128 {
    2 * m as i128 * (d as i128 + 1) - d as i128 * n as i128
}

/// `p₄ = Σμ⁴ = 2Σd² − 2m + 8C`.
pub fn fourth_moment_exact(g: &Graph) -> u64 {
    2 * g.degree_square_sum() - 2 * g.size() as u64 + 8 * g.count_c4()
}

/// `√(p₂³ / p₄)`, from `E^{2/3}·p₄^{1/3} ≥ p₂` (Hölder). Zero for edgeless
/// graphs.
pub fn moment_energy_lower_bound(g: &Graph) -> f64 {
    if g.size() == 0 {
        return 0.0;
    }
    let p2 = 2.0 * g.size() as f64;
    let p4 = fourth_moment_exact(g) as f64;
    sqrt(p2 * p2 * p2 / p4)
}

/// `2μ₁ + √((2m − 2μ₁²)³ / (2Σd² − 2m + 8C − 2μ₁⁴))`.
///
/// In a bipartite graph `μ_n = −μ₁`, so removing both extreme eigenvalues
/// from the moment sums and applying Hölder to the remaining ones bounds
/// `E − 2μ₁`. When `2m − 2μ₁²` vanishes (all other eigenvalues are zero)
/// the bound is `2μ₁`.
pub fn bipartite_energy_lower_bound(g: &Graph) -> Result<f64, BoundsError> {
    if !(g.is_connected() && g.is_bipartite()) {
        return Err(BoundsError::NotConnectedBipartite);
    }
    let s = spectrum(g)?;
    bipartite_bound_with(g, &s)
}

/// As [`bipartite_energy_lower_bound`], reusing a computed spectrum.
pub fn bipartite_bound_with(g: &Graph, s: &Spectrum) -> Result<f64, BoundsError> {
    let mu = s.spectral_radius();
    let mu2 = mu * mu;
    let m = g.size() as f64;
    let numerator = 2.0 * m - 2.0 * mu2;
    let denominator = fourth_moment_exact(g) as f64 - 2.0 * mu2 * mu2;
    let tol = MARGIN * (1.0 + 2.0 * m) * (1.0 + mu2);
    if fabs(numerator) <= tol {
        return Ok(2.0 * mu);
    }
    if denominator <= tol || numerator < 0.0 {
        return Err(BoundsError::Inapplicable { numerator, denominator });
    }
    Ok(2.0 * mu + sqrt(numerator * numerator * numerator / denominator))
}

/// `(μ⁴−12μ²+16μ−5)n² + 4(−μ⁵+3μ⁴+2μ²−7μ+3)n + 4(−3μ⁴+4μ²−1)`.
///
/// Positive on `√7 ≤ μ ≤ 3`, `n ≥ 23`; there it guarantees
/// `4(n−1−μ²)³ / (4n−7−μ⁴) > (n−2μ)²`.
pub fn large_tree_polynomial(n: u64, mu: f64) -> f64 {
    let n = n as f64;
    let mu2 = mu * mu;
    let mu4 = mu2 * mu2;
    let a = mu4 - 12.0 * mu2 + 16.0 * mu - 5.0;
    let b = 4.0 * (-mu4 * mu + 3.0 * mu4 + 2.0 * mu2 - 7.0 * mu + 3.0);
    let c = 4.0 * (-3.0 * mu4 + 4.0 * mu2 - 1.0);
    (a * n + b) * n + c
}

/// The unexpanded inequality behind [`large_tree_polynomial`]:
/// `4(n−1−μ²)³ / (4n−7−μ⁴) − (n−2μ)²`.
pub fn large_tree_gap(n: u64, mu: f64) -> f64 {
    let n = n as f64;
    let mu2 = mu * mu;
    let base = n - 1.0 - mu2;
    4.0 * base * base * base / (4.0 * n - 7.0 - mu2 * mu2) - (n - 2.0 * mu) * (n - 2.0 * mu)
}

// ---------------------------------------------------------------------------
// Theorem verdicts
// ---------------------------------------------------------------------------

/// Hypothesis and conclusion status of one theorem on one graph.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TheoremVerdict {
    pub hypotheses_hold: bool,
    pub conclusion_holds: bool,
    /// `E − n`.
    pub margin: f64,
    /// `|margin| < MARGIN`: the conclusion could not be decided reliably.
    pub borderline: bool,
}

impl TheoremVerdict {
    fn strict(hypotheses_hold: bool, energy: f64, n: usize) -> TheoremVerdict {
        let margin = energy - n as f64;
        let borderline = fabs(margin) < MARGIN;
        TheoremVerdict { hypotheses_hold, conclusion_holds: margin > 0.0 && !borderline, margin, borderline }
    }

    /// A counterexample: hypotheses hold and the conclusion fails outright.
    pub fn is_counterexample(&self) -> bool {
        self.hypotheses_hold && !self.conclusion_holds && !self.borderline
    }
}

/// Whether `m ≥ α(d)·n`, decided from the certified bracket when it is
/// conclusive.
pub fn density_at_least_alpha(m: usize, n: usize, a: &AlphaResult) -> bool {
    let (m, n) = (m as f64, n as f64);
    if m >= a.bracket.1 * n {
        true
    } else if m < a.bracket.0 * n {
        false
    } else {
        m >= a.value * n
    }
}

/// C4-free, no isolated vertices, `Δ ≤ d`, `m ≥ α(d)·n` ⇒ `E > n`.
pub fn dense_verdict(g: &Graph, d: u32) -> Result<TheoremVerdict, BoundsError> {
    let a = alpha(d)?;
    let s = spectrum(g)?;
    Ok(dense_verdict_with(g, &a, &s))
}

pub fn dense_hypotheses(g: &Graph, a: &AlphaResult) -> bool {
    !g.has_isolated_vertex()
        && g.max_degree() <= a.d as usize
        && density_at_least_alpha(g.size(), g.order(), a)
        && g.is_c4_free()
}

pub fn dense_verdict_with(g: &Graph, a: &AlphaResult, s: &Spectrum) -> TheoremVerdict {
    TheoremVerdict::strict(dense_hypotheses(g, a), s.energy(), g.order())
}

/// C4-free, no isolated vertices, `Δ ≤ 3`, `m ≥ n` ⇒ `E > n`.
pub fn subcubic_hypotheses(g: &Graph) -> bool {
    !g.has_isolated_vertex() && g.max_degree() <= 3 && g.size() >= g.order() && g.is_c4_free()
}

pub fn subcubic_verdict(g: &Graph) -> Result<TheoremVerdict, BoundsError> {
    let s = spectrum(g)?;
    Ok(TheoremVerdict::strict(subcubic_hypotheses(g), s.energy(), g.order()))
}

/// Whether `g` is one of the four exceptional trees (by canonical code).
pub fn is_exceptional_tree(g: &Graph) -> bool {
    if !matches!(g.order(), 1 | 3 | 4 | 7) {
        return false;
    }
    let Ok(code) = canonical_code(g) else { return false };
    crate::constructions::exceptional_trees().iter().any(|t| canonical_code(t).is_ok_and(|c| c == code))
}

/// A tree with `Δ ≤ 3` other than the four exceptions ⇒ `E ≥ n`.
///
/// The conclusion is non-strict, so a margin inside the tolerance counts as
/// holding rather than borderline.
pub fn tree_verdict(g: &Graph) -> Result<TheoremVerdict, BoundsError> {
    let s = spectrum(g)?;
    let hypotheses_hold = g.is_tree() && g.max_degree() <= 3 && !is_exceptional_tree(g);
    let margin = s.energy() - g.order() as f64;
    Ok(TheoremVerdict { hypotheses_hold, conclusion_holds: margin > -MARGIN, margin, borderline: false })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{balanced_binary_tree, complete_bipartite, cycle, path, star};
    use crate::spectra::energy;

    /// Independent root oracle: scan for sign changes on a fine grid, then
    /// plain bisection on the last one.
    fn largest_root_by_scan(d: u32) -> f64 {
        let upper = sqrt((2 * d + 1) as f64) + 1.0;
        let steps = 200_000;
        let mut last = None;
        for i in 0..steps {
            let x0 = upper * i as f64 / steps as f64;
            let x1 = upper * (i + 1) as f64 / steps as f64;
            if alpha_cubic(d, x0).signum() != alpha_cubic(d, x1).signum() {
                last = Some((x0, x1));
            }
        }
        let (mut lo, mut hi) = last.expect("cubic has a positive root");
        for _ in 0..100 {
            let mid = 0.5 * (lo + hi);
            if alpha_cubic(d, mid).signum() == alpha_cubic(d, lo).signum() {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    #[test]
    fn alpha_three_is_one() {
        let a = alpha(3).unwrap();
        assert_eq!(a.value, 1.0);
        assert_eq!(alpha_cubic(3, 1.0), 0.0);
        // the other two roots of (x − 1)(2x − 1)(2x + 3)
        assert_eq!(alpha_cubic(3, 0.5), 0.0);
        assert_eq!(alpha_cubic(3, -1.5), 0.0);
    }

    #[test]
    fn alpha_four() {
        let a = alpha(4).unwrap();
        assert!(alpha_cubic(4, 1.185) < 0.0 && alpha_cubic(4, 1.19) > 0.0);
        assert!(a.value > 1.185 && a.value < 1.19);
        assert!((a.value - largest_root_by_scan(4)).abs() < 1e-12);
        let (lo, hi) = alpha_bounds(4).unwrap();
        assert!((lo - (1.5 - 1.0 / 3.0)).abs() < 1e-15 && hi == 1.5);
        assert!(lo < a.value && a.value < hi);
    }

    #[test]
    fn alpha_bounds_examples() {
        let (lo, hi) = alpha_bounds(5).unwrap();
        assert!((lo - 1.3250).abs() < 1e-4 && (hi - 1.6583).abs() < 1e-4);
        for d in [5, 100] {
            let (lo, hi) = alpha_bounds(d).unwrap();
            assert!(alpha_cubic(d, lo) < 0.0 && alpha_cubic(d, hi) > 0.0);
        }
        assert!(alpha_bounds(3).is_err());
        assert_eq!(alpha(2), Err(BoundsError::DegreeTooSmall { d: 2, min: 3 }));
    }

    #[test]
    fn alpha_range_properties() {
        for d in 3..=100 {
            let a = alpha(d).unwrap();
            assert!(a.residual() <= 1e-12 * d as f64, "d={d} residual {}", a.residual());
            assert!(alpha_cubic(d, a.value + 1e-6) > 0.0);
            assert!(alpha_cubic(d, a.bracket.1 + 1.0) > 0.0);
            assert!(a.bracket.0 <= a.value && a.value <= a.bracket.1);
            assert!((a.value - largest_root_by_scan(d)).abs() < 1e-11, "d={d}");
            if d >= 4 {
                let (lo, hi) = alpha_bounds(d).unwrap();
                assert!(lo < a.value && a.value < hi);
                assert!(alpha_cubic(d, a.bracket.0) <= 0.0 && alpha_cubic(d, a.bracket.1) >= 0.0);
            }
        }
    }

    #[test]
    fn degree_square_examples() {
        // Petersen graph is 3-regular: 9n = 90
        assert_eq!(degree_square_bound(10, 15, 3), 90);
        let p3 = path(3).unwrap();
        assert_eq!(p3.degree_square_sum() as i128, degree_square_bound(3, 2, 2));
        let k13 = star(3).unwrap();
        assert_eq!(k13.degree_square_sum(), 12);
        assert_eq!(degree_square_bound(4, 3, 3), 12);
    }

    #[test]
    fn degree_square_bound_holds_on_random_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(2);
        let mut checked = 0;
        while checked < 500 {
            let n = rng.gen_range(2..=14);
            let p: f64 = rng.gen_range(0.1..0.9);
            let edges: Vec<_> =
                (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.gen_bool(p)).collect();
            let g = Graph::from_edge_list(n, &edges).unwrap();
            if g.has_isolated_vertex() {
                continue;
            }
            checked += 1;
            let brute: u64 = (0..n).map(|v| (g.degree(v) as u64).pow(2)).sum();
            for d in g.max_degree()..g.max_degree() + 3 {
                assert!(brute as i128 <= degree_square_bound(n as u64, g.size() as u64, d as u64));
            }
        }
    }

    #[test]
    fn moment_bound_examples() {
        let k23 = complete_bipartite(2, 3).unwrap();
        assert_eq!(fourth_moment_exact(&k23), 72);
        let b = moment_energy_lower_bound(&k23);
        assert!((b - 2.0 * 6f64.sqrt()).abs() < 1e-12);
        assert!((b - energy(&k23).unwrap()).abs() < 1e-9);

        let p4 = path(4).unwrap();
        assert_eq!(fourth_moment_exact(&p4), 14);
        let b = moment_energy_lower_bound(&p4);
        assert!((b - (216.0f64 / 14.0).sqrt()).abs() < 1e-12);
        // P_4 eigenvalues ±(1±√5)/2: energy 2√5
        assert!(b < energy(&p4).unwrap());
        assert!((energy(&p4).unwrap() - 2.0 * 5f64.sqrt()).abs() < 1e-12);
        assert_eq!(moment_energy_lower_bound(&Graph::empty(1).unwrap()), 0.0);
    }

    #[test]
    fn bipartite_bound_examples() {
        let p4 = path(4).unwrap();
        assert!(bipartite_energy_lower_bound(&p4).unwrap() <= energy(&p4).unwrap() + 1e-8);
        let k13 = star(3).unwrap();
        let b = bipartite_energy_lower_bound(&k13).unwrap();
        assert!((b - 2.0 * 3f64.sqrt()).abs() < 1e-9);
        let t7 = balanced_binary_tree(2).unwrap();
        let b = bipartite_energy_lower_bound(&t7).unwrap();
        assert!(b <= 4.0 + 2.0 * 2f64.sqrt() + 1e-8);
        assert_eq!(bipartite_energy_lower_bound(&cycle(5).unwrap()), Err(BoundsError::NotConnectedBipartite));
    }

    #[test]
    fn large_tree_expansion_matches_gap_sign() {
        // the expanded polynomial and the original inequality agree in sign
        let mut mu = 7f64.sqrt();
        while mu <= 3.0 {
            for n in [23u64, 30, 100] {
                assert!(large_tree_polynomial(n, mu) > 0.0);
                assert!(large_tree_gap(n, mu) > 0.0);
            }
            mu += 0.01;
        }
        assert!(large_tree_polynomial(23, 7f64.sqrt()) > 0.0);
        // outside the claimed region the sign is unconstrained; just evaluate
        let _ = large_tree_polynomial(5, 7f64.sqrt());
    }

    #[test]
    fn dense_examples() {
        let outer: alloc::vec::Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        let petersen = Graph::from_edge_list(
            10,
            &outer
                .into_iter()
                .chain((0..5).map(|i| (i, i + 5)))
                .chain((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)))
                .collect::<alloc::vec::Vec<_>>(),
        )
        .unwrap();
        let v = dense_verdict(&petersen, 3).unwrap();
        assert!(v.hypotheses_hold && v.conclusion_holds);
        assert!((v.margin - 6.0).abs() < 1e-9);

        let v = dense_verdict(&star(3).unwrap(), 3).unwrap();
        assert!(!v.hypotheses_hold && !v.is_counterexample());

        let v = dense_verdict(&cycle(7).unwrap(), 3).unwrap();
        let expect: f64 = (0..7).map(|k| (2.0 * (2.0 * core::f64::consts::PI * k as f64 / 7.0).cos()).abs()).sum();
        assert!(v.hypotheses_hold && v.conclusion_holds);
        assert!((v.margin + 7.0 - expect).abs() < 1e-9);
        assert!((expect - 8.988).abs() < 1e-3);

        // C_4 violates C4-freeness even though m = n
        assert!(!dense_verdict(&cycle(4).unwrap(), 3).unwrap().hypotheses_hold);
    }

    #[test]
    fn tree_examples() {
        assert!(!tree_verdict(&balanced_binary_tree(2).unwrap()).unwrap().hypotheses_hold);
        let v = tree_verdict(&path(2).unwrap()).unwrap();
        assert!(v.hypotheses_hold && v.conclusion_holds);
        let v = tree_verdict(&path(8).unwrap()).unwrap();
        assert!(v.hypotheses_hold && v.conclusion_holds && v.margin > 0.0);
        assert!(is_exceptional_tree(&star(2).unwrap()));
        assert!(!is_exceptional_tree(&path(4).unwrap()));
    }
}

//! Identity registry, symbolic verifier and randomized screen.
//!
//! Each registered identity has builders for both sides producing elements of
//! `Q(λ)[x]`; the verifier expands `LHS − RHS` into canonical form, so
//! equality is decidable and a verdict is always definite. Several identities
//! carry an `as-printed` and a `corrected` variant; refuted instances report
//! the residual and the corrected coefficient expansion minted from the basis
//! machinery.
//!
//! The randomized screen evaluates both sides at seeded random rational
//! points `(λ0, x0)`: a disagreement refutes conclusively, agreement is
//! evidence only — the canonical comparison stays the authority.

mod registry;
mod report;

pub use registry::{registry_list, CorrectionBasis, Identity, Variant};
pub use report::{run_report, run_report_sequential, Report, ReportOptions, ReportRow};

use crate::basis::{to_fe_basis_higher, FEExpansion};
use crate::rat::{rat, BigRat};
use crate::xpoly::XPoly;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabError {
    #[error("unknown identity id {0:?}")]
    UnknownIdentity(String),
    #[error("identity {0:?} takes an order parameter r")]
    MissingOrder(String),
    #[error("identity {id:?} requires r >= {min}, got {got}")]
    OrderOutOfRange { id: String, min: usize, got: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Refuted,
}

/// Machine-readable verdict for one identity instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub id: String,
    pub variant: String,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    pub status: Status,
    /// Canonical `LHS − RHS`; zero iff verified.
    pub residual: XPoly,
    pub corrected_coefficients: Option<FEExpansion>,
    pub seed: Option<u64>,
}

fn check_params(identity: &Identity, n: usize, r: Option<usize>) -> Result<usize, LabError> {
    let _ = n;
    if !identity.takes_r {
        return Ok(0);
    }
    let r = r.ok_or_else(|| LabError::MissingOrder(identity.id.to_string()))?;
    if r < identity.min_r {
        return Err(LabError::OrderOutOfRange {
            id: identity.id.to_string(),
            min: identity.min_r,
            got: r,
        });
    }
    Ok(r)
}

fn find(id: &str) -> Result<&'static Identity, LabError> {
    registry_list()
        .iter()
        .find(|i| i.id == id)
        .ok_or_else(|| LabError::UnknownIdentity(id.to_string()))
}

/// Verify one instance symbolically. The residual is `LHS − RHS` in
/// canonical form; refuted instances also carry the corrected expansion of
/// the left-hand side.
pub fn verify_identity(id: &str, n: usize, r: Option<usize>) -> Result<IdentityReport, LabError> {
    let identity = find(id)?;
    let rr = check_params(identity, n, r)?;
    Ok(verify_instance(identity, n, rr))
}

fn verify_instance(identity: &Identity, n: usize, r: usize) -> IdentityReport {
    let lhs = (identity.lhs)(n, r);
    let rhs = (identity.rhs)(n, r);
    let residual = &lhs - &rhs;
    let status = if residual.is_zero() {
        Status::Verified
    } else {
        Status::Refuted
    };
    let corrected = if status == Status::Refuted {
        let order = identity.correction_order(r);
        Some(to_fe_basis_higher(&lhs, order))
    } else {
        None
    };
    IdentityReport {
        id: identity.id.to_string(),
        variant: identity.variant.as_str().to_string(),
        n,
        r: identity.takes_r.then_some(r),
        status,
        residual,
        corrected_coefficients: corrected,
        seed: None,
    }
}

/// The `(n, r)` grid for one identity, ordered by `(n, r)`.
fn grid(identity: &Identity, n_max: usize, r_max: usize) -> Vec<(usize, usize)> {
    let mut pts = Vec::new();
    for n in 0..=n_max {
        if identity.takes_r {
            for r in identity.min_r..=r_max.max(identity.min_r) {
                pts.push((n, r));
            }
        } else {
            pts.push((n, 0));
        }
    }
    pts
}

/// Verify an identity over the whole `(n, r)` grid. With the `parallel`
/// feature the grid points run on the rayon pool; the output order is fixed
/// by `(n, r)` either way.
pub fn verify_range(id: &str, n_max: usize, r_max: usize) -> Result<Vec<IdentityReport>, LabError> {
    let identity = find(id)?;
    let pts = grid(identity, n_max, r_max);
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        Ok(pts
            .par_iter()
            .map(|&(n, r)| verify_instance(identity, n, r))
            .collect())
    }
    #[cfg(not(feature = "parallel"))]
    Ok(pts
        .iter()
        .map(|&(n, r)| verify_instance(identity, n, r))
        .collect())
}

/// Sequential twin of [`verify_range`], kept unconditionally for benchmark
/// comparison.
pub fn verify_range_sequential(
    id: &str,
    n_max: usize,
    r_max: usize,
) -> Result<Vec<IdentityReport>, LabError> {
    let identity = find(id)?;
    Ok(grid(identity, n_max, r_max)
        .iter()
        .map(|&(n, r)| verify_instance(identity, n, r))
        .collect())
}

/// Outcome of the randomized rational-point screen.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScreenOutcome {
    Pass,
    Counterexample {
        lambda0: BigRat,
        x0: BigRat,
        lhs_value: BigRat,
        rhs_value: BigRat,
    },
}

fn sample_rat(rng: &mut ChaCha8Rng) -> BigRat {
    let num = rng.gen_range(-20i64..=20);
    let den = rng.gen_range(1i64..=10);
    rat(num, den)
}

/// Evaluate both sides of an identity instance at `trials` random rational
/// points. Deterministic for a fixed seed; points hitting poles or the
/// excluded values `λ0 ∈ {0, 1}` are resampled.
pub fn random_screen(
    id: &str,
    n: usize,
    r: Option<usize>,
    trials: usize,
    seed: u64,
) -> Result<ScreenOutcome, LabError> {
    let identity = find(id)?;
    let rr = check_params(identity, n, r)?;
    let lhs = (identity.lhs)(n, rr);
    let rhs = (identity.rhs)(n, rr);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        loop {
            let lambda0 = sample_rat(&mut rng);
            if lambda0.is_zero() || lambda0.is_one() {
                continue;
            }
            let x0 = sample_rat(&mut rng);
            let (lv, rv) = match (lhs.eval_rat(&lambda0, &x0), rhs.eval_rat(&lambda0, &x0)) {
                (Ok(l), Ok(rv)) => (l, rv),
                _ => continue, // pole, resample
            };
            if lv != rv {
                return Ok(ScreenOutcome::Counterexample {
                    lambda0,
                    x0,
                    lhs_value: lv,
                    rhs_value: rv,
                });
            }
            break;
        }
    }
    Ok(ScreenOutcome::Pass)
}

/// Expansion oracle used to mint corrected right-hand sides: the order-`r`
/// Frobenius-Euler coefficients of `p`.
pub fn oracle_expansion(p: &XPoly, r: usize) -> FEExpansion {
    to_fe_basis_higher(p, r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frobenius::fe_poly;
    use crate::lrat::LRat;

    #[test]
    fn registry_contents() {
        let ids: Vec<&str> = registry_list().iter().map(|i| i.id).collect();
        assert!(ids.len() >= 11, "only {} identities", ids.len());
        assert_eq!(ids.iter().filter(|i| **i == "thm2").count(), 1);
        assert!(ids.contains(&"thm3-as-printed"));
        assert!(ids.contains(&"thm3-corrected"));
        let mut sorted = ids.clone();
        sorted.sort_unstable();
        assert_eq!(ids, sorted, "registry must be id-sorted");
    }

    #[test]
    fn unknown_id_and_bad_params() {
        assert!(matches!(
            verify_identity("nope", 1, None),
            Err(LabError::UnknownIdentity(_))
        ));
        assert!(matches!(
            verify_identity("thm6", 1, None),
            Err(LabError::MissingOrder(_))
        ));
        assert!(matches!(
            verify_identity("eq32", 1, Some(0)),
            Err(LabError::OrderOutOfRange { .. })
        ));
    }

    #[test]
    fn theorem2_smallest_case() {
        let report = verify_identity("thm2", 1, None).unwrap();
        assert_eq!(report.status, Status::Verified);
        assert!(report.residual.is_zero());
        assert!(report.corrected_coefficients.is_none());
    }

    #[test]
    fn thm7_printed_counterexample_instance() {
        let report = verify_identity("thm7-as-printed", 0, Some(2)).unwrap();
        assert_eq!(report.status, Status::Refuted);
        // residual = 1 − 1/(1−λ)²
        let want = &XPoly::one()
            - &XPoly::constant(LRat::one_minus_lambda().pow(2).inv().unwrap());
        assert_eq!(report.residual, want);
        assert!(report.corrected_coefficients.is_some());
    }

    #[test]
    fn screen_agrees_with_verifier() {
        assert_eq!(
            random_screen("thm2", 3, None, 20, 7).unwrap(),
            ScreenOutcome::Pass
        );
        match random_screen("thm7-as-printed", 0, Some(2), 1, 1).unwrap() {
            ScreenOutcome::Counterexample {
                lambda0,
                lhs_value,
                rhs_value,
                ..
            } => {
                assert!(lhs_value.is_one());
                let one = BigRat::one();
                let d = (&one - &lambda0) * (&one - &lambda0);
                assert_eq!(rhs_value, one / d);
            }
            ScreenOutcome::Pass => panic!("screen missed a constant refutation"),
        }
    }

    #[test]
    fn screen_soundness_on_true_identity() {
        for seed in 0..8 {
            assert_eq!(
                random_screen("eq5", 4, None, 5, seed).unwrap(),
                ScreenOutcome::Pass
            );
        }
    }

    #[test]
    fn oracle_expansion_of_basis_element() {
        for n in 0..=5 {
            let e = oracle_expansion(&fe_poly(n), 1);
            assert_eq!(e.coeff(n), LRat::one());
            for k in 0..n {
                assert!(e.coeff(k).is_zero());
            }
        }
    }
}

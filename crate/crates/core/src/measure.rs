//! Exact-expectation oracle over explicit finite distributions.
//!
//! Reweighing functions and predictors are passed as evaluable closures of
//! the point id; nothing here is ever estimated.

use crate::domain::{FiniteDistribution, TargetFunction};
use crate::error::Error;

/// Exact error `Pr_{x~D}[pred(x) != f(x)]` by direct summation.
pub fn exact_error<P>(predict: P, dist: &FiniteDistribution, target: &TargetFunction) -> f64
where
    P: Fn(usize) -> i8,
{
    (0..dist.len())
        .filter(|&x| predict(x) != target.label(x))
        .map(|x| dist.prob(x))
        .sum()
}

/// Exact density `d(mu) = E_{x~D}[mu(x)]`.
pub fn density<M>(mu: M, dist: &FiniteDistribution) -> f64
where
    M: Fn(usize) -> f64,
{
    (0..dist.len()).map(|x| mu(x) * dist.prob(x)).sum()
}

/// The normalized reweighted distribution `D_mu(x) = mu(x) D(x) / d(mu)`.
pub fn reweighted_distribution<M>(
    mu: M,
    dist: &FiniteDistribution,
) -> Result<FiniteDistribution, Error>
where
    M: Fn(usize) -> f64,
{
    let weights: alloc::vec::Vec<f64> = (0..dist.len()).map(|x| mu(x) * dist.prob(x)).collect();
    FiniteDistribution::from_weights(&weights).map_err(|e| match e {
        Error::ZeroDensity => Error::ZeroDensity,
        other => other,
    })
}

/// Total-variation distance `1/2 * sum |p - q|`.
pub fn tv_distance(p: &FiniteDistribution, q: &FiniteDistribution) -> Result<f64, Error> {
    if p.len() != q.len() {
        return Err(Error::DomainMismatch {
            left: p.len(),
            right: q.len(),
        });
    }
    Ok(0.5
        * (0..p.len())
            .map(|x| crate::math::abs(p.prob(x) - q.prob(x)))
            .sum::<f64>())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn perfect_predictor_has_zero_error() {
        let d = FiniteDistribution::uniform(4).unwrap();
        let f = TargetFunction::new(vec![1, -1, 1, -1]).unwrap();
        assert_eq!(exact_error(|x| f.label(x), &d, &f), 0.0);
    }

    #[test]
    fn inverted_predictor_has_error_one() {
        let d = FiniteDistribution::uniform(4).unwrap();
        let f = TargetFunction::new(vec![1, -1, 1, -1]).unwrap();
        assert_eq!(exact_error(|x| -f.label(x), &d, &f), 1.0);
    }

    #[test]
    fn one_wrong_point_of_four_uniform_is_quarter() {
        let d = FiniteDistribution::uniform(4).unwrap();
        let f = TargetFunction::new(vec![1, 1, 1, 1]).unwrap();
        let pred = |x: usize| if x == 2 { -1 } else { 1 };
        assert_eq!(exact_error(pred, &d, &f), 0.25);
    }

    #[test]
    fn density_of_constant_measures() {
        let d = FiniteDistribution::uniform(8).unwrap();
        assert_eq!(density(|_| 1.0, &d), 1.0);
        assert_eq!(density(|_| 0.0, &d), 0.0);
    }

    #[test]
    fn density_of_half_mass_indicator_is_half() {
        let d = FiniteDistribution::uniform(8).unwrap();
        let got = density(|x| if x < 4 { 1.0 } else { 0.0 }, &d);
        assert!(crate::math::abs(got - 0.5) < 1e-15);
    }

    #[test]
    fn identity_and_constant_reweighing_leave_d_unchanged() {
        let d = FiniteDistribution::new(vec![0.1, 0.2, 0.3, 0.4]).unwrap();
        let same = reweighted_distribution(|_| 1.0, &d).unwrap();
        assert_eq!(tv_distance(&same, &d).unwrap(), 0.0);
        let half = reweighted_distribution(|_| 0.5, &d).unwrap();
        assert!(tv_distance(&half, &d).unwrap() < 1e-15);
    }

    #[test]
    fn hand_normalized_reweighing() {
        let d = FiniteDistribution::uniform(2).unwrap();
        let mu = |x: usize| if x == 0 { 1.0 } else { 0.5 };
        let dm = reweighted_distribution(mu, &d).unwrap();
        assert!(crate::math::abs(dm.prob(0) - 2.0 / 3.0) < 1e-15);
        assert!(crate::math::abs(dm.prob(1) - 1.0 / 3.0) < 1e-15);
    }

    #[test]
    fn zero_measure_is_zero_density_error() {
        let d = FiniteDistribution::uniform(2).unwrap();
        assert_eq!(reweighted_distribution(|_| 0.0, &d), Err(Error::ZeroDensity));
    }

    #[test]
    fn tv_examples() {
        let p = FiniteDistribution::new(vec![0.5, 0.5]).unwrap();
        assert_eq!(tv_distance(&p, &p).unwrap(), 0.0);
        let a = FiniteDistribution::new(vec![1.0, 0.0]).unwrap();
        let b = FiniteDistribution::new(vec![0.0, 1.0]).unwrap();
        assert_eq!(tv_distance(&a, &b).unwrap(), 1.0);
        let q = FiniteDistribution::new(vec![0.6, 0.4]).unwrap();
        assert!(crate::math::abs(tv_distance(&p, &q).unwrap() - 0.1) < 1e-15);
        let three = FiniteDistribution::uniform(3).unwrap();
        assert_eq!(
            tv_distance(&p, &three),
            Err(Error::DomainMismatch { left: 2, right: 3 })
        );
    }
}

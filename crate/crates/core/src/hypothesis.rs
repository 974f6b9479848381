//! Canonical hypotheses and majority votes.
//!
//! Equality is syntactic: two hypotheses are equal iff all fields are equal,
//! and votes compare elementwise in order. Thresholds only ever come from a
//! fixed data-independent grid, so bitwise float comparison is canonical and
//! survives serialization round-trips.

use alloc::vec::Vec;
use core::hash::{Hash, Hasher};

use crate::domain::Domain;

/// A single base classifier: an axis-aligned stump or a constant.
#[derive(Debug, Clone)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Hypothesis {
    Stump {
        feature: usize,
        threshold: f64,
        polarity: i8,
    },
    Constant {
        sign: i8,
    },
}

impl Hypothesis {
    pub fn predict(&self, domain: &Domain, x: usize) -> i8 {
        match *self {
            Hypothesis::Stump {
                feature,
                threshold,
                polarity,
            } => {
                if domain.feature(x, feature) >= threshold {
                    polarity
                } else {
                    -polarity
                }
            }
            Hypothesis::Constant { sign } => sign,
        }
    }
}

impl PartialEq for Hypothesis {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (
                Hypothesis::Stump {
                    feature: f1,
                    threshold: t1,
                    polarity: p1,
                },
                Hypothesis::Stump {
                    feature: f2,
                    threshold: t2,
                    polarity: p2,
                },
            ) => f1 == f2 && t1.to_bits() == t2.to_bits() && p1 == p2,
            (Hypothesis::Constant { sign: s1 }, Hypothesis::Constant { sign: s2 }) => s1 == s2,
            _ => false,
        }
    }
}

impl Eq for Hypothesis {}

impl Hash for Hypothesis {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match *self {
            Hypothesis::Stump {
                feature,
                threshold,
                polarity,
            } => {
                0u8.hash(state);
                feature.hash(state);
                threshold.to_bits().hash(state);
                polarity.hash(state);
            }
            Hypothesis::Constant { sign } => {
                1u8.hash(state);
                sign.hash(state);
            }
        }
    }
}

/// Sign with the fixed tie convention `sign(0) = +1`.
pub fn sign_or_plus(sum: i64) -> i8 {
    if sum >= 0 {
        1
    } else {
        -1
    }
}

/// An ordered sequence of hypotheses voting by sign of sum.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct MajorityVote {
    pub hypotheses: Vec<Hypothesis>,
}

impl MajorityVote {
    pub fn new(hypotheses: Vec<Hypothesis>) -> Self {
        MajorityVote { hypotheses }
    }

    pub fn len(&self) -> usize {
        self.hypotheses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hypotheses.is_empty()
    }

    pub fn predict(&self, domain: &Domain, x: usize) -> i8 {
        let sum: i64 = self
            .hypotheses
            .iter()
            .map(|h| h.predict(domain, x) as i64)
            .sum();
        sign_or_plus(sum)
    }
}

/// The two-layer output: a majority vote over majority votes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Committee {
    pub members: Vec<MajorityVote>,
}

impl Committee {
    pub fn new(members: Vec<MajorityVote>) -> Self {
        Committee { members }
    }

    pub fn predict(&self, domain: &Domain, x: usize) -> i8 {
        let sum: i64 = self
            .members
            .iter()
            .map(|m| m.predict(domain, x) as i64)
            .sum();
        sign_or_plus(sum)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn one_point_domain() -> Domain {
        Domain::new(vec![vec![0.0]]).unwrap()
    }

    #[test]
    fn majority_is_forced_by_two_of_three() {
        let d = one_point_domain();
        let h = |sign| Hypothesis::Constant { sign };
        let vote = MajorityVote::new(vec![h(1), h(1), h(-1)]);
        assert_eq!(vote.predict(&d, 0), 1);
    }

    #[test]
    fn tie_breaks_to_plus_one() {
        let d = one_point_domain();
        let h = |sign| Hypothesis::Constant { sign };
        let vote = MajorityVote::new(vec![h(1), h(-1)]);
        assert_eq!(vote.predict(&d, 0), 1);
    }

    #[test]
    fn empty_vote_is_plus_one() {
        let d = one_point_domain();
        assert_eq!(MajorityVote::default().predict(&d, 0), 1);
    }

    #[test]
    fn equality_is_fieldwise() {
        let a = Hypothesis::Stump {
            feature: 0,
            threshold: 0.5,
            polarity: 1,
        };
        let b = Hypothesis::Stump {
            feature: 0,
            threshold: 0.5,
            polarity: 1,
        };
        let c = Hypothesis::Stump {
            feature: 0,
            threshold: 0.5,
            polarity: -1,
        };
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert_ne!(a, Hypothesis::Constant { sign: 1 });
    }
}

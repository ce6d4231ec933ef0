//! Sharpness sweep: push the boundary polynomial inside (or outside) the
//! ratio condition and record what the certificate and the oracle say.

use rayon::prelude::*;
use serde::Serialize;

use crate::certify::{check_even_with_coeffs, AlgebraicThreshold, Verdict};
use crate::error::Result;
use crate::extremal::{
    perturb, perturb_exact, perturbation_factor, even_extremal, ExtremalMode,
};
use crate::poly_core::rational::{int, serde_string};
use crate::poly_core::Rational;
use crate::root_oracle::count_real_roots;
use crate::sampling::{instance_rng, random_rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub n: usize,
    #[serde(with = "serde_string")]
    pub epsilon: Rational,
    pub verdict: Verdict,
    pub distinct: usize,
    pub with_multiplicity: usize,
}

pub const SWEEP_CSV_HEADER: [&str; 5] =
    ["n", "epsilon", "verdict", "distinct", "with_multiplicity"];

impl SweepRow {
    pub fn csv_record(&self) -> [String; 5] {
        [
            self.n.to_string(),
            self.epsilon.to_string(),
            self.verdict.to_string(),
            self.distinct.to_string(),
            self.with_multiplicity.to_string(),
        ]
    }
}

/// `count` extra values of `eps` drawn uniformly from `(-1, 1)`, one
/// stream per draw.
pub fn sampled_epsilons(count: usize, seed: u64) -> Vec<Rational> {
    (0..count as u64)
        .map(|i| random_rational(&mut instance_rng(seed, i), &int(-1), &int(1)))
        .collect()
}

/// One row per `eps`, in input order.
pub fn sweep(n: usize, epsilons: &[Rational]) -> Result<Vec<SweepRow>> {
    for eps in epsilons {
        perturbation_factor(eps)?;
    }
    let e = even_extremal(n, ExtremalMode::Exact)?;
    let t = AlgebraicThreshold::new(n)?;
    epsilons
        .par_iter()
        .map(|eps| {
            let coeffs = perturb_exact(&e, eps)?;
            let verdict = check_even_with_coeffs(&coeffs, Some(&t))?.verdict;
            let roots = count_real_roots(&perturb(&e, eps)?)?;
            Ok(SweepRow {
                n,
                epsilon: eps.clone(),
                verdict,
                distinct: roots.distinct,
                with_multiplicity: roots.with_multiplicity,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly_core::rational::rat;

    #[test]
    fn n2_examples() {
        let rows = sweep(2, &[rat(1, 10), int(0), rat(-1, 10)]).unwrap();
        assert_eq!(rows[0].verdict, Verdict::CertifiedPositive);
        assert_eq!(rows[0].distinct, 0);
        assert_eq!(rows[1].verdict, Verdict::BoundaryCase);
        assert!(rows[1].distinct >= 1);
        assert_eq!(rows[2].verdict, Verdict::ConditionFails);
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(sweep(2, &[int(1)]).is_err());
        assert!(sweep(2, &[rat(-3, 2)]).is_err());
    }

    #[test]
    fn sampled_values_are_deterministic() {
        let a = sampled_epsilons(5, 42);
        assert_eq!(a, sampled_epsilons(5, 42));
        assert!(a.iter().all(|e| e > &int(-1) && e < &int(1)));
    }
}

//! Deterministic invariant batteries for `n <= 6`, runnable from the CLI.

use std::fmt::Write as _;
use std::sync::Arc;

use num_traits::Zero;

use crate::certify::{
    build_form, check_even_with, check_even_with_coeffs, check_odd_with, determinant,
    AlgebraicThreshold, Relation, Verdict,
};
use crate::error::Result;
use crate::extremal::{perturb_toward_interior, even_extremal, Extremal, ExtremalMode};
use crate::poly_core::rational::{int, rat};
use crate::poly_core::Rational;
use crate::root_oracle::{count_real_roots, verify_positive};
use crate::sampling::{
    odd_instance, instance_rng, positive_polynomial, random_point, ratio_ceiling,
    even_instance,
};

pub const MAX_N: usize = 6;

/// Deliberate breakage, used to check that the batteries notice.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fault {
    /// Threshold table shifted by one: entry `n` holds the value for `n + 1`.
    CorruptThresholdTable,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BatteryResult {
    pub name: &'static str,
    pub cases: usize,
    /// First failing case, if any.
    pub failure: Option<String>,
}

impl BatteryResult {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelftestReport {
    pub seed: u64,
    pub batteries: Vec<BatteryResult>,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.batteries.iter().all(BatteryResult::passed)
    }

    /// One `PASS`/`FAIL` line per battery and a summary line.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for b in &self.batteries {
            match &b.failure {
                None => writeln!(out, "PASS {} ({} cases)", b.name, b.cases),
                Some(why) => writeln!(out, "FAIL {} ({} cases): {}", b.name, b.cases, why),
            }
            .unwrap();
        }
        let failed = self.batteries.iter().filter(|b| !b.passed()).count();
        writeln!(
            out,
            "selftest seed {}: {} passed, {} failed",
            self.seed,
            self.batteries.len() - failed,
            failed
        )
        .unwrap();
        out
    }
}

struct Battery {
    name: &'static str,
    cases: usize,
    failure: Option<String>,
}

impl Battery {
    fn new(name: &'static str) -> Self {
        Battery {
            name,
            cases: 0,
            failure: None,
        }
    }

    /// Records one case; only the first failure is kept.
    fn case(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(describe());
        }
    }

    fn finish(self) -> BatteryResult {
        BatteryResult {
            name: self.name,
            cases: self.cases,
            failure: self.failure,
        }
    }
}

fn table(fault: Option<Fault>) -> Result<Vec<Arc<AlgebraicThreshold>>> {
    let shift = usize::from(fault == Some(Fault::CorruptThresholdTable));
    (1..=MAX_N)
        .map(|n| AlgebraicThreshold::new(n + shift).map(Arc::new))
        .collect()
}

fn powers(x: &Rational, n: usize) -> Vec<Rational> {
    let mut v = vec![int(1)];
    for _ in 0..n {
        let next = v.last().unwrap() * x;
        v.push(next);
    }
    v
}

fn form_identity(seed: u64) -> BatteryResult {
    let mut b = Battery::new("form-identity");
    for i in 0..120u64 {
        let mut rng = instance_rng(seed, i);
        let n = 1 + (i as usize % MAX_N);
        let p = positive_polynomial(&mut rng, 2 * n);
        let x = random_point(&mut rng);
        let form = build_form(&p).expect("positive even polynomial");
        let q = form
            .quadratic_form_value(&powers(&x, n))
            .expect("matching size");
        b.case(q == p.evaluate(&x), || format!("P({x}) != Q_P at [{p}]"));
    }
    b.finish()
}

fn boundary_detection(thresholds: &[Arc<AlgebraicThreshold>]) -> BatteryResult {
    let mut b = Battery::new("boundary-detection");
    for n in 1..=MAX_N {
        let t = &thresholds[n - 1];
        let e = even_extremal(n, ExtremalMode::Exact).expect("valid n");
        let relations = check_even_with_coeffs(&e.algebraic_coefficients(), Some(t))
            .map(|r| r.relations())
            .unwrap_or_default();
        b.case(
            relations.len() == n && relations.iter().all(|r| *r == Relation::Equal),
            || format!("n = {n}: relations {relations:?}"),
        );
        if let Some(p) = e.exact_rational() {
            let verdict = check_even_with(&p, t).map(|r| r.verdict);
            b.case(verdict == Ok(Verdict::BoundaryCase), || {
                format!("n = {n}: rational instance gave {verdict:?}")
            });
        }
    }
    b.finish()
}

fn soundness(seed: u64, thresholds: &[Arc<AlgebraicThreshold>]) -> BatteryResult {
    let mut b = Battery::new("certificate-soundness");
    for i in 0..120u64 {
        let n = 1 + (i as usize % MAX_N);
        let t = &thresholds[n - 1];
        let p = even_instance(&mut instance_rng(seed ^ 0x5eed, i), n, &ratio_ceiling(t));
        let verdict = check_even_with(&p, t).map(|r| r.verdict);
        let positive = verify_positive(&p);
        b.case(
            verdict == Ok(Verdict::CertifiedPositive) && positive == Ok(true),
            || format!("[{p}]: verdict {verdict:?}, oracle positive {positive:?}"),
        );
    }
    b.finish()
}

fn minor_recurrence(seed: u64) -> BatteryResult {
    let mut b = Battery::new("minor-recurrence");
    for i in 0..60u64 {
        let n = 1 + (i as usize % 5);
        let p = positive_polynomial(&mut instance_rng(seed ^ 0x313, i), 2 * n);
        let form = build_form(&p).expect("positive even polynomial");
        let dense = form.dense();
        let recurrence = form.leading_minors();
        let direct: Vec<Rational> = (1..=form.size())
            .map(|j| {
                let sub: Vec<Vec<Rational>> = dense[..j].iter().map(|r| r[..j].to_vec()).collect();
                determinant(&sub)
            })
            .collect();
        b.case(recurrence == direct, || {
            format!("[{p}]: {recurrence:?} vs {direct:?}")
        });
    }
    b.finish()
}

fn odd_one_real_zero(seed: u64, thresholds: &[Arc<AlgebraicThreshold>]) -> BatteryResult {
    let mut b = Battery::new("odd-one-real-zero");
    for i in 0..60u64 {
        let n = 1 + (i as usize % (MAX_N - 1));
        let t = &thresholds[n - 1];
        let p = odd_instance(&mut instance_rng(seed ^ 0x0dd, i), n, &ratio_ceiling(t));
        let verdict = check_odd_with(&p, t).map(|r| r.verdict);
        let count = count_real_roots(&p).map(|c| c.with_multiplicity);
        b.case(
            verdict == Ok(Verdict::CertifiedOneRealZero) && count == Ok(1),
            || format!("[{p}]: verdict {verdict:?}, real roots {count:?}"),
        );
    }
    b.finish()
}

fn perturbation(thresholds: &[Arc<AlgebraicThreshold>]) -> BatteryResult {
    let mut b = Battery::new("interior-perturbation");
    for n in 1..=MAX_N {
        let e = even_extremal(n, ExtremalMode::Exact).expect("valid n");
        for eps in [rat(1, 2), rat(1, 10), rat(1, 100)] {
            let p = perturb_toward_interior(&e, &eps).expect("eps in range");
            let verdict = check_even_with(&p, &thresholds[n - 1]).map(|r| r.verdict);
            let roots = count_real_roots(&p).map(|c| c.distinct);
            b.case(
                verdict == Ok(Verdict::CertifiedPositive) && roots == Ok(0),
                || format!("n = {n}, eps = {eps}: verdict {verdict:?}, roots {roots:?}"),
            );
        }
    }
    b.finish()
}

fn boundary_root() -> BatteryResult {
    let mut b = Battery::new("boundary-root-at-minus-one");
    for n in 1..=MAX_N {
        let e = even_extremal(n, ExtremalMode::Exact).expect("valid n");
        let p = e.rational_companion();
        let at = p.evaluate(&int(-1));
        let count = count_real_roots(&p).map(|c| c.with_multiplicity);
        b.case(at.is_zero() && matches!(count, Ok(m) if m >= 2), || {
            format!("n = {n}: Q(-1) = {at}, multiplicity {count:?}")
        });
    }
    b.finish()
}

pub fn run(seed: u64, fault: Option<Fault>) -> Result<SelftestReport> {
    let thresholds = table(fault)?;
    Ok(SelftestReport {
        seed,
        batteries: vec![
            form_identity(seed),
            boundary_detection(&thresholds),
            soundness(seed, &thresholds),
            minor_recurrence(seed),
            odd_one_real_zero(seed, &thresholds),
            perturbation(&thresholds),
            boundary_root(),
        ],
    })
}

//! Full verification of one q-character, and sweeps over many.

use serde::{Deserialize, Serialize};

use crate::cartan::CartanC;
use crate::exec;
use crate::paths::PathContext;
use crate::qchar::{q_character, verify_thin};
use crate::screening::{component_kernel_certificate, in_kernel, CertificateReport};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub n: u32,
    pub i: u32,
    pub k: i64,
    pub monomials: usize,
    pub checks: Vec<Check>,
    pub certificates: Vec<CertificateReport>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed) && self.certificates.iter().all(|c| c.passed())
    }
}

/// `C(n, k)`, zero outside `0..=n`.
pub fn binomial(n: u64, k: i64) -> u64 {
    if k < 0 || k as u64 > n {
        return 0;
    }
    let k = (k as u64).min(n - k as u64);
    (0..k).fold(1u64, |acc, t| acc * (n - t) / (t + 1))
}

/// Dimension of the i-th fundamental representation of sp(2n).
pub fn fundamental_dimension(n: u32, i: u32) -> u64 {
    let big_n = 2 * n as u64;
    binomial(big_n, i as i64) - binomial(big_n, i as i64 - 2)
}

/// One lattice-valid context per node, with level 0 or 1.
pub fn fundamental_jobs(n: u32) -> Vec<PathContext> {
    (1..=n).map(|i| PathContext::fundamental(n, i).expect("valid rank and node")).collect()
}

pub fn sweep_jobs(max_rank: u32) -> Vec<PathContext> {
    (1..=max_rank).flat_map(fundamental_jobs).collect()
}

fn check(name: &str, passed: bool, detail: impl Into<String>) -> Check {
    Check { name: name.to_string(), passed, detail: detail.into() }
}

pub fn verify_job(ctx: PathContext) -> VerifyReport {
    let c = CartanC::new(ctx.rank()).expect("context has a valid rank");
    let q = q_character(ctx);
    let poly = q.poly();
    let expected = fundamental_dimension(ctx.rank(), ctx.node());
    let mut checks = Vec::new();

    checks.push(check(
        "count",
        poly.len() as u64 == expected && q.path_index().len() as u64 == expected,
        format!("{} monomials, expected {expected}", poly.len()),
    ));
    checks.push(check("thin", verify_thin(ctx), "path -> monomial is injective"));
    checks.push(check(
        "coefficients",
        poly.is_multiplicity_free(),
        "every coefficient is 1",
    ));
    let dominant = poly.dominant_monomials();
    checks.push(check(
        "dominant",
        dominant.len() == 1 && *dominant[0] == q.highest_monomial(),
        format!("{} dominant: {}", dominant.len(), join(&dominant)),
    ));
    let anti = poly.antidominant_monomials();
    checks.push(check(
        "antidominant",
        anti.len() == 1 && *anti[0] == q.lowest_monomial(),
        format!("{} antidominant: {}", anti.len(), join(&anti)),
    ));
    let failing: Vec<u32> = c.nodes().filter(|&j| !in_kernel(&c, j, poly)).collect();
    checks.push(check(
        "kernel",
        failing.is_empty(),
        if failing.is_empty() {
            format!("in ker S_j for j = 1..={}", ctx.rank())
        } else {
            format!("not in ker S_j for j in {failing:?}")
        },
    ));

    let certificates: Vec<CertificateReport> = c
        .nodes()
        .map(|j| component_kernel_certificate(ctx, j).expect("node in range"))
        .collect();
    let partition_ok = certificates
        .iter()
        .all(|r| r.size_histogram.iter().map(|(s, c)| s * c).sum::<usize>() as u64 == expected);
    checks.push(check("partition", partition_ok, "j-components cover every admissible path once"));

    VerifyReport {
        n: ctx.rank(),
        i: ctx.node(),
        k: ctx.level(),
        monomials: poly.len(),
        checks,
        certificates,
    }
}

fn join(ms: &[&crate::laurent::LaurentMonomial]) -> String {
    ms.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(", ")
}

/// Runs every job; reports come back in job order.
pub fn verify_sweep(jobs: &[PathContext]) -> Vec<VerifyReport> {
    exec::map(jobs, |&ctx| verify_job(ctx))
}

pub fn verify_sweep_sequential(jobs: &[PathContext]) -> Vec<VerifyReport> {
    exec::map_sequential(jobs, |&ctx| verify_job(ctx))
}

#[cfg(feature = "parallel")]
pub fn verify_sweep_parallel(jobs: &[PathContext]) -> Vec<VerifyReport> {
    exec::map_parallel(jobs, |&ctx| verify_job(ctx))
}

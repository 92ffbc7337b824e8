//! Screening operators and their kernels.
//!
//! `S̃_i` is the derivation sending `Y_{i,k}` to `Y_{i,k} S_{i,k}` and killing
//! every other variable. Its values live in the free module on generators
//! `S_{i,k}`; the screening operator `S_i` is `S̃_i` followed by the quotient
//! by `S_{i,k+2d_i} = A_{i,k+d_i} S_{i,k}`. Elements of the quotient are put
//! in normal form by rewriting every generator down to the lowest level of
//! its residue class mod `2d_i`, which decides kernel membership.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::cartan::CartanC;
use crate::exec;
use crate::laurent::{LaurentMonomial, LaurentPoly};
use crate::paths::{j_components, PathContext};
use crate::qchar::monomial_of_path;

/// `Σ_k P_k · S_{i,k}`; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScreeningElement {
    node: u32,
    terms: BTreeMap<i64, LaurentPoly>,
}

impl ScreeningElement {
    pub fn zero(node: u32) -> Self {
        Self { node, terms: BTreeMap::new() }
    }

    pub fn node(&self) -> u32 {
        self.node
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, level: i64) -> LaurentPoly {
        self.terms.get(&level).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &LaurentPoly)> {
        self.terms.iter().map(|(&k, p)| (k, p))
    }

    pub fn add_term(&mut self, level: i64, p: &LaurentPoly) {
        if p.is_zero() {
            return;
        }
        let slot = self.terms.entry(level).or_default();
        *slot += p;
        if slot.is_zero() {
            self.terms.remove(&level);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.node, other.node, "screening elements of different nodes");
        let mut out = self.clone();
        for (k, p) in &other.terms {
            out.add_term(*k, p);
        }
        out
    }

    /// True when each residue class mod `2d_i` carries at most one level.
    pub fn is_reduced(&self, c: &CartanC) -> bool {
        let period = 2 * c.d(self.node);
        let mut classes = std::collections::HashSet::new();
        self.terms.keys().all(|k| classes.insert(k.rem_euclid(period)))
    }
}

impl std::fmt::Display for ScreeningElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (k, p)) in self.terms.iter().enumerate() {
            if idx > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({p})*S[{},{k}]", self.node)?;
        }
        Ok(())
    }
}

/// `S̃_i(p)`, before the quotient relation is applied.
pub fn screening_apply(i: u32, p: &LaurentPoly) -> ScreeningElement {
    let mut out = ScreeningElement::zero(i);
    for (m, coeff) in p.terms() {
        for (y, u) in m.factors().filter(|(y, _)| y.node == i) {
            let mut term = LaurentPoly::zero();
            term.add_term(m.clone(), coeff * u);
            out.add_term(y.level, &term);
        }
    }
    out
}

/// Normal form in the quotient module.
pub fn reduce(e: &ScreeningElement, c: &CartanC) -> ScreeningElement {
    let i = e.node;
    let d = c.d(i);
    let period = 2 * d;
    let mut floor: BTreeMap<i64, i64> = BTreeMap::new();
    for &k in e.terms.keys() {
        let slot = floor.entry(k.rem_euclid(period)).or_insert(k);
        *slot = (*slot).min(k);
    }
    let mut out = ScreeningElement::zero(i);
    for (&k, p) in &e.terms {
        let base = floor[&k.rem_euclid(period)];
        // S_{i,k} = A_{i,k-d} A_{i,k-3d} ... A_{i,base+d} S_{i,base}
        let mut factor = LaurentMonomial::one();
        let mut level = k;
        while level > base {
            factor = factor.mul(&c.a_variable(i, level - d).expect("node checked by caller"));
            level -= period;
        }
        out.add_term(base, &p.mul_monomial(&factor));
    }
    out
}

/// `S_i(p) = 0`. The zero polynomial lies in every kernel.
pub fn in_kernel(c: &CartanC, i: u32, p: &LaurentPoly) -> bool {
    c.check_node(i).expect("node in range");
    reduce(&screening_apply(i, p), c).is_zero()
}

/// The reduced image, for reporting nonzero residues.
pub fn kernel_residue(c: &CartanC, i: u32, p: &LaurentPoly) -> ScreeningElement {
    reduce(&screening_apply(i, p), c)
}

/// `Y_{i,k} + Y_{i,k} A_{i,k+d_i}^{-1}`.
pub fn kernel_generator(c: &CartanC, i: u32, k: i64) -> LaurentPoly {
    let y = LaurentMonomial::var(i, k);
    let a = c.a_variable(i, k + c.d(i)).expect("node in range");
    [y.clone(), y.div(&a)].into_iter().collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentFailure {
    pub paths: Vec<Vec<i64>>,
    pub residue: String,
}

/// Kernel check of every j-component of `P̄_{i,k}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub n: u32,
    pub i: u32,
    pub k: i64,
    pub j: u32,
    pub component_count: usize,
    pub size_histogram: BTreeMap<usize, usize>,
    pub max_size: usize,
    pub failures: Vec<ComponentFailure>,
}

impl CertificateReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.max_size <= 4
    }
}

pub fn component_kernel_certificate(ctx: PathContext, j: u32) -> crate::Result<CertificateReport> {
    let c = CartanC::new(ctx.rank())?;
    let components = j_components(ctx, j)?;
    let outcomes = exec::map(&components, |comp| {
        let sum: LaurentPoly = comp.paths.iter().map(monomial_of_path).collect();
        let residue = kernel_residue(&c, j, &sum);
        (comp.len(), residue)
    });
    let mut size_histogram = BTreeMap::new();
    let mut failures = Vec::new();
    for (comp, (size, residue)) in components.iter().zip(outcomes) {
        *size_histogram.entry(size).or_insert(0) += 1;
        if !residue.is_zero() {
            failures.push(ComponentFailure {
                paths: comp.paths.iter().map(|p| p.heights().to_vec()).collect(),
                residue: residue.to_string(),
            });
        }
    }
    Ok(CertificateReport {
        n: ctx.rank(),
        i: ctx.node(),
        k: ctx.level(),
        j,
        component_count: components.len(),
        max_size: size_histogram.keys().copied().max().unwrap_or(0),
        size_histogram,
        failures,
    })
}

/// Leibniz expansion of `S̃_i(m)` factor by factor: each power `Y^u` is
/// expanded as `u` copies of the single-variable rule. Used to cross-check
/// the exponent-weighted formula of [`screening_apply`].
pub fn screening_apply_leibniz(i: u32, m: &LaurentMonomial) -> ScreeningElement {
    let mut out = ScreeningElement::zero(i);
    let factors: Vec<_> = m.factors().collect();
    for (idx, &(y, u)) in factors.iter().enumerate() {
        if y.node != i {
            continue;
        }
        let rest = LaurentMonomial::from_factors(
            factors.iter().enumerate().filter(|(t, _)| *t != idx).map(|(_, &f)| f),
        );
        // S̃(Y^u) = u Y^{u-1} S̃(Y), accumulated one unit at a time
        let step = if u > 0 { 1 } else { -1 };
        let single = LaurentMonomial::var_pow(y.node, y.level, u);
        for _ in 0..u.abs() {
            let mut t = LaurentPoly::zero();
            t.add_term(rest.mul(&single), step);
            out.add_term(y.level, &t);
        }
    }
    debug_assert!(out.terms.values().all(|p| !p.is_zero()));
    out
}

//! The monomial of a path and the q-character of `L(Y_{i,k})` as the sum of
//! monomials over admissible paths.

use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::cartan::CartanC;
use crate::error::{Error, Result};
use crate::exec;
use crate::laurent::{LaurentMonomial, LaurentPoly, YIndex};
use crate::paths::{bar, enumerate_admissible, Path, PathContext, Polarity};

/// Upper corners `(j, l)` contribute `Y_{bar j, l + 2[j > n]}`, lower
/// corners `Y_{bar j, l + 2[j >= n]}^{-1}`.
pub fn monomial_of_path(p: &Path) -> LaurentMonomial {
    let n = p.ctx().rank() as usize;
    LaurentMonomial::from_factors(p.corners().into_iter().map(|c| {
        let node = bar(c.r, n as u32).expect("corners sit on interior columns");
        match c.polarity {
            Polarity::Upper => (YIndex::new(node, c.ell + if c.r > n { 2 } else { 0 }), 1),
            Polarity::Lower => (YIndex::new(node, c.ell + if c.r >= n { 2 } else { 0 }), -1),
        }
    }))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QCharacter {
    ctx: PathContext,
    poly: LaurentPoly,
    path_index: Vec<(Path, LaurentMonomial)>,
}

impl QCharacter {
    pub fn ctx(&self) -> &PathContext {
        &self.ctx
    }

    pub fn poly(&self) -> &LaurentPoly {
        &self.poly
    }

    /// `(path, monomial)` pairs in path enumeration order.
    pub fn path_index(&self) -> &[(Path, LaurentMonomial)] {
        &self.path_index
    }

    pub fn monomial_for(&self, p: &Path) -> Option<&LaurentMonomial> {
        self.path_index.iter().find(|(q, _)| q == p).map(|(_, m)| m)
    }

    /// The highest monomial `Y_{i,k}`.
    pub fn highest_monomial(&self) -> LaurentMonomial {
        LaurentMonomial::var(self.ctx.node(), self.ctx.level())
    }

    /// The lowest monomial `Y_{i,k+2n+2}^{-1}`, the image of the lowest path.
    pub fn lowest_monomial(&self) -> LaurentMonomial {
        let level = self.ctx.level() + 2 * self.ctx.rank() as i64 + 2;
        LaurentMonomial::var_pow(self.ctx.node(), level, -1)
    }

    pub fn to_json(&self) -> QCharacterJson {
        QCharacterJson {
            cartan_type: "C".to_string(),
            n: self.ctx.rank(),
            i: self.ctx.node(),
            k: self.ctx.level(),
            monomials: self
                .path_index
                .iter()
                .map(|(p, m)| MonomialEntry {
                    coeff: 1,
                    factors: m.factors().map(|(y, e)| (y.node, y.level, e)).collect(),
                    path: p.heights().to_vec(),
                })
                .collect(),
        }
    }
}

/// Sum of `monomial_of_path` over `P̄_{i,k}`.
pub fn q_character(ctx: PathContext) -> QCharacter {
    let paths = enumerate_admissible(ctx);
    let monomials = exec::map(&paths, monomial_of_path);
    let poly = monomials.iter().cloned().collect();
    QCharacter { ctx, poly, path_index: paths.into_iter().zip(monomials).collect() }
}

/// True when no two paths share a monomial.
pub fn is_injective(paths: &[Path]) -> bool {
    let mut seen = HashSet::new();
    paths.iter().all(|p| seen.insert(monomial_of_path(p)))
}

pub fn verify_thin(ctx: PathContext) -> bool {
    is_injective(&enumerate_admissible(ctx))
}

/// Level of the A-variable removed by lowering at `(j, ell)`.
pub fn move_ratio_level(j: usize, ell: i64, n: u32) -> i64 {
    let n = n as usize;
    ell + match j.cmp(&n) {
        std::cmp::Ordering::Less => 0,
        std::cmp::Ordering::Equal => 1,
        std::cmp::Ordering::Greater => 2,
    }
}

/// Checks `m(p A^{-1}) = m(p) A_{bar j, level}^{-1}` for an admissible move.
pub fn move_ratio_check(c: &CartanC, p: &Path, j: usize, ell: i64) -> Result<bool> {
    let q = p.apply_lower(j, ell)?;
    if !p.is_admissible() || !q.is_admissible() {
        return Err(Error::NotAdmissible { position: j, height: ell });
    }
    let n = p.ctx().rank();
    let a = c.a_variable(bar(j, n)?, move_ratio_level(j, ell, n))?;
    Ok(monomial_of_path(&q) == monomial_of_path(p).div(&a))
}

/// Writes `m / top` as a product of inverse A-variables, returning the
/// multiplicity of each `A_{j,l}^{-1}`, or `None` when no such product exists.
///
/// Every A-variable has a unique lowest-level factor `Y_{j, l - d_j}`, so the
/// variables can be peeled off level by level.
pub fn a_factorization(
    c: &CartanC,
    top: &LaurentMonomial,
    m: &LaurentMonomial,
) -> Option<BTreeMap<(u32, i64), i64>> {
    let mut rest = m.div(top);
    let ceiling = rest.max_level().unwrap_or(0) + 4;
    let mut out = BTreeMap::new();
    while let Some(low) = rest.min_level() {
        if low > ceiling {
            return None;
        }
        let (y, e) = rest.factors().find(|(y, _)| y.level == low)?;
        if e > 0 {
            return None;
        }
        let level = y.level + c.d(y.node);
        let a = c.a_variable(y.node, level).ok()?;
        rest = rest.mul(&a.pow(-e));
        *out.entry((y.node, level)).or_insert(0) += -e;
    }
    Some(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialEntry {
    pub coeff: i64,
    pub factors: Vec<(u32, i64, i64)>,
    pub path: Vec<i64>,
}

/// JSON export schema of a q-character.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QCharacterJson {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub n: u32,
    pub i: u32,
    pub k: i64,
    pub monomials: Vec<MonomialEntry>,
}

impl QCharacterJson {
    /// Validates the document against the path formula and rebuilds the
    /// q-character.
    pub fn into_qcharacter(self) -> Result<QCharacter> {
        if self.cartan_type != "C" {
            return Err(Error::Parse(format!("unsupported type `{}`", self.cartan_type)));
        }
        let ctx = PathContext::new(self.n, self.i, self.k)?;
        let mut path_index = Vec::with_capacity(self.monomials.len());
        let mut poly = LaurentPoly::zero();
        for entry in self.monomials {
            let path = Path::new(ctx, entry.path)?;
            let m = LaurentMonomial::from_factors(
                entry.factors.iter().map(|&(i, k, e)| (YIndex::new(i, k), e)),
            );
            if m != monomial_of_path(&path) {
                return Err(Error::Parse(format!("monomial {m} does not match its path")));
            }
            poly.add_term(m.clone(), entry.coeff);
            path_index.push((path, m));
        }
        Ok(QCharacter { ctx, poly, path_index })
    }
}

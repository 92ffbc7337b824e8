//! Cartan data of type C_n and the expansion of A-variables into Y-variables.
//!
//! Nodes are 1-based. Node `n` is the long root (`d_n = 2`); the double edge
//! joins `n - 1` and `n` with `a(n-1, n) = -2`, `a(n, n-1) = -1`.

use crate::error::{Error, Result};
use crate::laurent::{LaurentMonomial, YIndex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CartanC {
    n: u32,
}

impl CartanC {
    pub fn new(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidRank(n));
        }
        Ok(Self { n })
    }

    pub fn rank(&self) -> u32 {
        self.n
    }

    pub fn nodes(&self) -> impl Iterator<Item = u32> {
        1..=self.n
    }

    pub fn check_node(&self, i: u32) -> Result<()> {
        if i == 0 || i > self.n {
            return Err(Error::NodeOutOfRange { node: i, rank: self.n });
        }
        Ok(())
    }

    /// Cartan entry `a(i, j)`. Panics on nodes outside `1..=n`.
    pub fn a(&self, i: u32, j: u32) -> i32 {
        let n = self.n;
        assert!((1..=n).contains(&i) && (1..=n).contains(&j), "node out of range");
        if i == j {
            2
        } else if i == n - 1 && j == n {
            -2
        } else if i.abs_diff(j) == 1 {
            -1
        } else {
            0
        }
    }

    /// Symmetrizer: 1 on short roots, 2 on the long root `n`.
    pub fn d(&self, i: u32) -> i64 {
        assert!((1..=self.n).contains(&i), "node out of range");
        if i == self.n {
            2
        } else {
            1
        }
    }

    /// Expansion of `A_{i,q^k}` as a Laurent monomial in the `Y` variables.
    pub fn a_variable(&self, i: u32, k: i64) -> Result<LaurentMonomial> {
        self.check_node(i)?;
        let column = self.nodes().filter(|&j| j != i).map(|j| (j, self.a(j, i)));
        Ok(expand_a_variable(i, self.d(i), k, column))
    }
}

pub fn cartan_c(n: u32) -> Result<CartanC> {
    CartanC::new(n)
}

/// `Y_{i,k-d} Y_{i,k+d}` times the neighbour factors selected by the column
/// entries `a(j, i)`.
pub(crate) fn expand_a_variable(
    i: u32,
    d: i64,
    k: i64,
    column: impl Iterator<Item = (u32, i32)>,
) -> LaurentMonomial {
    let mut factors = vec![(YIndex::new(i, k - d), 1), (YIndex::new(i, k + d), 1)];
    for (j, a_ji) in column {
        match a_ji {
            0 => {}
            -1 => factors.push((YIndex::new(j, k), -1)),
            -2 => {
                factors.push((YIndex::new(j, k - 1), -1));
                factors.push((YIndex::new(j, k + 1), -1));
            }
            -3 => {
                // Triple edges only exist in G2.
                assert!(triple_edge_enabled(), "a(j, i) = -3 does not occur in type C");
                factors.extend(triple_edge_factor(j, k));
            }
            other => panic!("unexpected Cartan entry {other}"),
        }
    }
    LaurentMonomial::from_factors(factors)
}

/// Factor contributed by a neighbour with `a(j, i) = -3`, with exponents as
/// printed in the A-variable formula.
fn triple_edge_factor(j: u32, k: i64) -> [(YIndex, i64); 3] {
    [(YIndex::new(j, k - 2), 1), (YIndex::new(j, k), 1), (YIndex::new(j, k + 2), 1)]
}

#[cfg(test)]
thread_local! {
    static TRIPLE_EDGE_ENABLED: std::cell::Cell<bool> = const { std::cell::Cell::new(false) };
}

#[cfg(test)]
fn triple_edge_enabled() -> bool {
    TRIPLE_EDGE_ENABLED.with(std::cell::Cell::get)
}

#[cfg(not(test))]
fn triple_edge_enabled() -> bool {
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(s: &str) -> LaurentMonomial {
        s.parse().unwrap()
    }

    #[test]
    fn rejects_rank_zero() {
        assert_eq!(cartan_c(0), Err(Error::InvalidRank(0)));
    }

    #[test]
    fn rank_three_entries() {
        let c = cartan_c(3).unwrap();
        assert_eq!(c.a(2, 3), -2);
        assert_eq!(c.a(3, 2), -1);
        assert_eq!(c.a(1, 2), -1);
        assert_eq!(c.a(2, 1), -1);
        assert_eq!(c.a(1, 3), 0);
        assert_eq!((c.d(1), c.d(2), c.d(3)), (1, 1, 2));
    }

    #[test]
    fn rank_one_is_long() {
        let c = cartan_c(1).unwrap();
        assert_eq!(c.a(1, 1), 2);
        assert_eq!(c.d(1), 2);
    }

    #[test]
    fn rank_two_entries_and_symmetry() {
        let c = cartan_c(2).unwrap();
        assert_eq!(c.a(1, 2), -2);
        assert_eq!(c.a(2, 1), -1);
        assert_eq!(c.d(1) * c.a(1, 2) as i64, c.d(2) * c.a(2, 1) as i64);
    }

    #[test]
    fn cartan_invariants_up_to_rank_eight() {
        for n in 1..=8 {
            let c = cartan_c(n).unwrap();
            for i in c.nodes() {
                assert_eq!(c.a(i, i), 2);
                for j in c.nodes() {
                    if i != j {
                        assert!(c.a(i, j) <= 0);
                        assert_eq!(c.a(i, j) == 0, c.a(j, i) == 0);
                    }
                    assert_eq!(c.d(i) * c.a(i, j) as i64, c.d(j) * c.a(j, i) as i64);
                }
            }
            for i in 1..n.saturating_sub(1) {
                assert_eq!((c.a(i, i + 1), c.a(i + 1, i)), (-1, -1));
            }
            if n >= 2 {
                assert_eq!((c.a(n - 1, n), c.a(n, n - 1)), (-2, -1));
            }
        }
    }

    #[test]
    fn a_variable_examples() {
        let c3 = cartan_c(3).unwrap();
        assert_eq!(c3.a_variable(1, 1).unwrap(), mono("Y[1,0]*Y[1,2]*Y[2,1]^-1"));
        assert_eq!(
            c3.a_variable(3, 2).unwrap(),
            mono("Y[2,1]^-1*Y[2,3]^-1*Y[3,0]*Y[3,4]")
        );
        let c1 = cartan_c(1).unwrap();
        assert_eq!(c1.a_variable(1, 2).unwrap(), mono("Y[1,0]*Y[1,4]"));
        assert!(matches!(c3.a_variable(4, 0), Err(Error::NodeOutOfRange { .. })));
        assert!(matches!(c3.a_variable(0, 0), Err(Error::NodeOutOfRange { .. })));
    }

    #[test]
    fn a_variable_matches_table_ratios() {
        // Consecutive entries of the rank-3 tables differ by one A^{-1}.
        let c = cartan_c(3).unwrap();
        let first = mono("Y[1,0]");
        let second = mono("Y[1,2]^-1*Y[2,1]");
        assert_eq!(first.mul(&second.inverse()), c.a_variable(1, 1).unwrap());
        let first = mono("Y[3,0]");
        let second = mono("Y[2,1]*Y[2,3]*Y[3,4]^-1");
        assert_eq!(first.mul(&second.inverse()), c.a_variable(3, 2).unwrap());
    }

    #[test]
    fn own_node_exponents_and_signs() {
        for n in 1..=6 {
            let c = cartan_c(n).unwrap();
            for i in c.nodes() {
                for k in -5..=5 {
                    let a = c.a_variable(i, k).unwrap();
                    let d = c.d(i);
                    assert_eq!(a.exponent(YIndex::new(i, k - d)), 1);
                    assert_eq!(a.exponent(YIndex::new(i, k + d)), 1);
                    for (y, e) in a.factors() {
                        if y.node != i {
                            assert!(e < 0);
                            // neighbours sit at k (short) or k +- 1 (long-to-short)
                            assert!((y.level - k).abs() <= 1);
                            assert_eq!((y.level - k).rem_euclid(2), if d == 2 { 1 } else { 0 });
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn a_variable_is_injective() {
        let mut seen = std::collections::HashSet::new();
        for n in 1..=4 {
            let c = cartan_c(n).unwrap();
            for i in c.nodes() {
                for k in -100..=100 {
                    assert!(seen.insert((n, c.a_variable(i, k).unwrap())));
                }
            }
        }
    }

    #[test]
    fn triple_edge_branch_follows_printed_formula() {
        TRIPLE_EDGE_ENABLED.with(|f| f.set(true));
        let got = expand_a_variable(1, 1, 4, [(2, -3)].into_iter());
        TRIPLE_EDGE_ENABLED.with(|f| f.set(false));
        assert_eq!(got, mono("Y[1,3]*Y[1,5]*Y[2,2]*Y[2,4]*Y[2,6]"));
    }

    #[test]
    #[should_panic(expected = "does not occur in type C")]
    fn triple_edge_branch_is_gated() {
        expand_a_variable(1, 1, 4, [(2, -3)].into_iter());
    }
}

//! Integer numerology of a type `(n, d, 1)`: parameter decomposition, chamber
//! structure, critical values, extension-space dimensions, and the inductive
//! sub-parameter chain that drives the rank recursion.
//!
//! For rank `n >= 2` and degree `d` two Euclidean divisions fix everything:
//!
//! ```text
//! d = n*a - t          with 0 <= t <= n-1,
//! a = l*(n-1) + m + t  with 0 <= m <= n-2.
//! ```
//!
//! Stable objects exist exactly for stability parameters in `(t, l*n + t)`,
//! so there are `l` chambers indexed `e = 0 .. l-1`, separated by the
//! critical values `e*n + t` for `1 <= e <= l-1`. Emptiness is `l <= 0`, not
//! an error: the recursion must be total, and the empty moduli space simply
//! has the zero polynomial.

use std::fmt;

/// The derived numerology of a type `(n, d, 1)` with `n >= 2`.
///
/// Invariants (enforced by [`ChamberParams::decompose`] and checked in tests):
/// `d = n*a - t`, `a = l*(n-1) + m + t`, and the combined identity
/// `d = (n-1)*(l*n + t) + m*n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChamberParams {
    pub n: i64,
    pub d: i64,
    pub a: i64,
    pub t: i64,
    pub l: i64,
    pub m: i64,
}

/// Raised when a quantity only defined for a nonempty moduli space is asked
/// of an empty one (`l < 1`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EmptyModuli {
    pub n: i64,
    pub d: i64,
}

impl fmt::Display for EmptyModuli {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "moduli spaces of type ({}, {}, 1) are empty for every parameter value",
            self.n, self.d
        )
    }
}

impl std::error::Error for EmptyModuli {}

impl ChamberParams {
    /// The unique `(a, t, l, m)` for the given rank and degree. Total over
    /// all integers `d`; `l <= 0` signals emptiness downstream.
    pub fn decompose(n: i64, d: i64) -> Self {
        assert!(n >= 2, "decompose requires rank n >= 2 (got {n})");
        // d = n*a - t with 0 <= t <= n-1, i.e. a = ceil(d/n)
        let a = (d + n - 1).div_euclid(n);
        let t = n * a - d;
        let l = (a - t).div_euclid(n - 1);
        let m = (a - t).rem_euclid(n - 1);
        debug_assert!((0..n).contains(&t));
        debug_assert!((0..n - 1).contains(&m));
        debug_assert_eq!(d, (n - 1) * (l * n + t) + m * n);
        ChamberParams { n, d, a, t, l, m }
    }

    /// Number of chambers, `max(l, 0)`.
    pub fn chamber_count(&self) -> i64 {
        self.l.max(0)
    }

    /// True iff every moduli space of this type is empty.
    pub fn is_empty_type(&self) -> bool {
        self.l < 1
    }

    /// The critical values `e*n + t` for `e = 1 .. l-1`, in increasing order.
    /// Empty when `l <= 1`: with a single chamber there is nothing to cross.
    pub fn critical_values(&self) -> Vec<i64> {
        (1..self.l).map(|e| e * self.n + self.t).collect()
    }

    /// Dimension of the extension space whose Grassmannian is the fiber of a
    /// plus-side stratum: `a - t - (n-1)(e+1) + r`, equal to
    /// `(l-e-1)(n-1) + m + r`.
    pub fn ext_dim_plus(&self, e: i64, r: i64) -> i64 {
        debug_assert!((1..self.n).contains(&r));
        let dim = self.a - self.t - (self.n - 1) * (e + 1) + r;
        debug_assert_eq!(dim, (self.l - e - 1) * (self.n - 1) + self.m + r);
        dim
    }

    /// Dimension of the extension space whose Grassmannian is the fiber of a
    /// minus-side stratum: `r - n + e*n + t`.
    pub fn ext_dim_minus(&self, e: i64, r: i64) -> i64 {
        debug_assert!((1..self.n).contains(&r));
        r - self.n + e * self.n + self.t
    }

    /// Dimension of every nonempty moduli space of this type: `d + n - n^2`.
    pub fn expected_dimension(&self) -> Result<i64, EmptyModuli> {
        if self.is_empty_type() {
            return Err(EmptyModuli {
                n: self.n,
                d: self.d,
            });
        }
        Ok(self.d + self.n - self.n * self.n)
    }
}

/// One row of the inductive sub-parameter chain, for `1 <= r <= n-2`:
///
/// ```text
/// s_r*(n-r) + t_r = t_{r-1} + e_{r-1}   with 0 <= t_r <= n-r-1,
/// a_r = a_{r-1} - s_r,
/// a_r = l_r*(n-r-1) + m_r + t_r         with 0 <= m_r <= n-r-2,
/// e_r = e_{r-1} + s_r.
/// ```
///
/// Row `r` is the numerology of the rank-`(n-r)` sub-problem underlying the
/// `r`-th stratum of a flip locus: `(a_r, t_r, l_r, m_r)` decompose its
/// degree `d - r*a - r*e`, and `e_r` is the sub-chamber index.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubChainRow {
    pub r: i64,
    pub s: i64,
    pub t: i64,
    pub a: i64,
    pub l: i64,
    pub m: i64,
    pub e: i64,
}

/// The full chain for a type `(n, n*a - t, 1)` and chamber index `e`: rows
/// `r = 1 .. n-2`, plus the dimension of the projective space that is the
/// terminal rank-1 base at `r = n-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubChain {
    pub n: i64,
    pub a: i64,
    pub t: i64,
    pub e: i64,
    pub rows: Vec<SubChainRow>,
    /// `d - (n-1)*(a+e)`, possibly negative (empty terminal base).
    pub terminal_projective_dim: i64,
}

impl SubChain {
    /// Compute the chain eagerly and validate the four chain identities on
    /// every row. A violation is a bug in this crate, never user input, so
    /// it panics.
    pub fn new(n: i64, a: i64, t: i64, e: i64) -> Self {
        assert!(n >= 2);
        assert!((0..n).contains(&t), "need 0 <= t <= n-1");
        assert!(e >= 0);
        let d = n * a - t;
        let l0 = (a - t).div_euclid(n - 1);

        let mut rows = Vec::with_capacity((n - 2).max(0) as usize);
        let (mut a_prev, mut t_prev, mut e_prev) = (a, t, e);
        for r in 1..=n - 2 {
            let budget = t_prev + e_prev;
            let s = budget.div_euclid(n - r);
            let t_r = budget.rem_euclid(n - r);
            let a_r = a_prev - s;
            let e_r = e_prev + s;
            // r <= n-2 keeps the divisor n-r-1 >= 1
            let l_r = (a_r - t_r).div_euclid(n - r - 1);
            let m_r = (a_r - t_r).rem_euclid(n - r - 1);
            rows.push(SubChainRow {
                r,
                s,
                t: t_r,
                a: a_r,
                l: l_r,
                m: m_r,
                e: e_r,
            });
            a_prev = a_r;
            t_prev = t_r;
            e_prev = e_r;
        }

        let chain = SubChain {
            n,
            a,
            t,
            e,
            rows,
            terminal_projective_dim: d - (n - 1) * (a + e),
        };
        for row in &chain.rows {
            // (i) a_r + e_r constant
            assert_eq!(row.a + row.e, a + e, "chain identity (i) failed: {chain:?}");
            // (ii) (n-r) a_r - t_r = d - r a - r e
            assert_eq!(
                (n - row.r) * row.a - row.t,
                d - row.r * a - row.r * e,
                "chain identity (ii) failed: {chain:?}"
            );
            // (iii) (n-r) e_r + t_r = n e + t
            assert_eq!(
                (n - row.r) * row.e + row.t,
                n * e + t,
                "chain identity (iii) failed: {chain:?}"
            );
            // (iv) e <= e_r <= l_r - l_0 + e <= l_r, valid while e <= l_0
            if e <= l0 {
                assert!(
                    e <= row.e && row.e <= row.l - l0 + e && row.l - l0 + e <= row.l,
                    "chain identity (iv) failed: {chain:?}"
                );
            }
        }
        chain
    }

    /// Chain row for stratum index `r` (`1 <= r <= n-2`).
    pub fn row(&self, r: i64) -> &SubChainRow {
        &self.rows[(r - 1) as usize]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decompose_examples() {
        let p = ChamberParams::decompose(2, 5);
        assert_eq!((p.a, p.t, p.l, p.m), (3, 1, 2, 0));
        let p = ChamberParams::decompose(3, 16);
        assert_eq!((p.a, p.t, p.l, p.m), (6, 2, 2, 0));
        // l = 0: every moduli space of this type is empty
        let p = ChamberParams::decompose(3, 7);
        assert_eq!((p.a, p.t, p.l, p.m), (3, 2, 0, 1));
        assert!(p.is_empty_type());
    }

    #[test]
    fn decompose_total_over_negative_degrees() {
        for n in 2..=6 {
            for d in -30..=30 {
                let p = ChamberParams::decompose(n, d);
                assert_eq!(p.d, n * p.a - p.t);
                assert!((0..n).contains(&p.t));
                assert_eq!(p.a, p.l * (n - 1) + p.m + p.t);
                assert!((0..n - 1).contains(&p.m));
                assert_eq!(p.d, (n - 1) * (p.l * n + p.t) + p.m * n);
            }
        }
    }

    #[test]
    fn critical_values_examples() {
        assert_eq!(ChamberParams::decompose(2, 5).critical_values(), vec![3]);
        assert_eq!(ChamberParams::decompose(3, 16).critical_values(), vec![5]);
        // l = 1: no critical values
        let p = ChamberParams::decompose(3, 13);
        assert_eq!((p.a, p.t, p.l), (5, 2, 1));
        assert!(p.critical_values().is_empty());
    }

    #[test]
    fn critical_values_structure() {
        for n in 2..=5 {
            for d in -10..=60 {
                let p = ChamberParams::decompose(n, d);
                let cv = p.critical_values();
                assert_eq!(cv.len() as i64, (p.l - 1).max(0));
                for w in cv.windows(2) {
                    assert_eq!(w[1] - w[0], n);
                }
                if let Some(&first) = cv.first() {
                    assert_eq!(first, n + p.t);
                }
            }
        }
    }

    #[test]
    fn chamber_count_examples() {
        assert_eq!(ChamberParams::decompose(2, 5).chamber_count(), 2);
        assert_eq!(ChamberParams::decompose(2, 2).chamber_count(), 1);
        assert_eq!(ChamberParams::decompose(3, 7).chamber_count(), 0);
    }

    #[test]
    fn sub_chain_examples() {
        let c = SubChain::new(3, 6, 2, 0);
        assert_eq!(c.rows.len(), 1);
        let row = c.row(1);
        assert_eq!(
            (row.s, row.t, row.a, row.l, row.m, row.e),
            (1, 0, 5, 5, 0, 1)
        );

        let c = SubChain::new(3, 6, 2, 1);
        let row = c.row(1);
        assert_eq!(
            (row.s, row.t, row.a, row.l, row.m, row.e),
            (1, 1, 5, 4, 0, 2)
        );

        // n = 2: no rows, only the terminal projective dimension
        let c = SubChain::new(2, 3, 1, 1);
        assert!(c.rows.is_empty());
        assert_eq!(c.terminal_projective_dim, 1);
    }

    #[test]
    fn sub_chain_identities_hold_on_grid() {
        // identities are asserted inside SubChain::new; this exercises them
        for n in 2..=7 {
            for t in 0..n {
                for a in t..=t + 25 {
                    let l = (a - t).div_euclid(n - 1);
                    for e in 0..=l.max(0) {
                        let _ = SubChain::new(n, a, t, e);
                    }
                }
            }
        }
    }

    #[test]
    fn ext_dims_examples() {
        let p = ChamberParams::decompose(2, 5);
        assert_eq!(p.ext_dim_plus(1, 1), 1);
        assert_eq!(p.ext_dim_minus(1, 1), 2);
        let p = ChamberParams::decompose(3, 16);
        assert_eq!(p.ext_dim_plus(1, 2), 2);
        assert_eq!(p.ext_dim_minus(1, 1), 3);
        let p = ChamberParams::decompose(2, 4);
        assert_eq!(p.ext_dim_minus(1, 1), 1);
    }

    #[test]
    fn ext_dims_lower_bounds() {
        for n in 2..=6 {
            for d in 0..=60 {
                let p = ChamberParams::decompose(n, d);
                for e in 0..p.l.max(0) {
                    for r in 1..n {
                        assert!(p.ext_dim_plus(e, r) >= r, "{p:?} e={e} r={r}");
                        if e >= 1 {
                            assert!(p.ext_dim_minus(e, r) >= r, "{p:?} e={e} r={r}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn expected_dimension_examples() {
        assert_eq!(ChamberParams::decompose(2, 5).expected_dimension(), Ok(3));
        assert_eq!(ChamberParams::decompose(3, 16).expected_dimension(), Ok(10));
        assert_eq!(ChamberParams::decompose(2, 4).expected_dimension(), Ok(2));
        assert!(ChamberParams::decompose(3, 7).expected_dimension().is_err());
    }
}

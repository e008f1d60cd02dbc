//! Hodge polynomials of Grassmannians and projective spaces, plus a
//! brute-force finite-field subspace counter used as an independent oracle
//! for point-count claims.

use std::collections::BTreeSet;
use std::collections::HashSet;
use std::fmt;

use crate::qpoly::QPoly;

/// Hodge polynomial of the Grassmannian of `r`-dimensional subspaces of an
/// `ambient`-dimensional space: the Gaussian binomial
///
/// ```text
/// prod_{i=1}^{r} (1 - q^{ambient-r+i}) / prod_{i=1}^{r} (1 - q^i)
/// ```
///
/// computed by multiplying out the numerator and exact-dividing by the
/// denominator factors one at a time, so every intermediate stays in Z[q].
/// Out-of-range parameters (`r < 0` or `r > ambient`) give the zero
/// polynomial: an empty Grassmannian contributes nothing to a stratum sum.
pub fn grassmannian(r: i64, ambient: i64) -> QPoly {
    if r < 0 || r > ambient {
        return QPoly::zero();
    }
    if r == 0 || r == ambient {
        return QPoly::one();
    }
    // use the smaller side; Gr(r, N) = Gr(N-r, N)
    let r = r.min(ambient - r) as usize;
    let n = ambient as usize;
    let mut acc = QPoly::one();
    for i in 1..=r {
        acc = acc * QPoly::one_minus_q_pow(n - r + i);
    }
    for i in 1..=r {
        acc = acc
            .div_exact(&QPoly::one_minus_q_pow(i))
            .expect("Gaussian binomial numerator is divisible by every denominator factor");
    }
    acc
}

/// Inputs the brute-force counter refuses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OutOfRange {
    pub r: i64,
    pub ambient: i64,
    pub p: u64,
}

impl fmt::Display for OutOfRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "brute-force subspace count supports 0 <= r <= N <= 4 and p in {{2, 3}}, got r={}, N={}, p={}",
            self.r, self.ambient, self.p
        )
    }
}

impl std::error::Error for OutOfRange {}

/// Count the `r`-dimensional subspaces of the `ambient`-dimensional vector
/// space over the field with `p` elements by explicit enumeration, with no
/// Gaussian-binomial shortcut anywhere.
///
/// Subspaces are represented extensionally as the full set of their vectors:
/// starting from the zero subspace, each dimension step adjoins every vector
/// outside the current span and closes under addition and scalar multiples,
/// deduplicating the resulting vector sets. Deliberately small limits
/// (`N <= 4`, `p in {2, 3}`) keep the enumeration honest and instant.
pub fn count_subspaces_bruteforce(r: i64, ambient: i64, p: u64) -> Result<u64, OutOfRange> {
    if !(0..=ambient).contains(&r) || ambient > 4 || !(p == 2 || p == 3) {
        return Err(OutOfRange { r, ambient, p });
    }
    let n = ambient as usize;
    let p = p as usize;
    let total = p.pow(n as u32);

    // vectors are encoded as base-p digit strings in 0..p^n
    let add = |x: usize, y: usize| -> usize {
        let (mut x, mut y, mut out, mut mult) = (x, y, 0usize, 1usize);
        for _ in 0..n {
            out += ((x % p + y % p) % p) * mult;
            x /= p;
            y /= p;
            mult *= p;
        }
        out
    };
    let scale = |c: usize, x: usize| -> usize {
        let mut out = 0;
        for _ in 0..c {
            out = add(out, x);
        }
        out
    };

    let mut level: HashSet<BTreeSet<usize>> = HashSet::new();
    level.insert(BTreeSet::from([0]));
    for _dim in 0..r {
        let mut next = HashSet::new();
        for span in &level {
            for v in 1..total {
                if span.contains(&v) {
                    continue;
                }
                let mut bigger = BTreeSet::new();
                for &u in span {
                    for c in 0..p {
                        bigger.insert(add(u, scale(c, v)));
                    }
                }
                next.insert(bigger);
            }
        }
        level = next;
    }
    Ok(level.len() as u64)
}

//! Exact arithmetic for integer-coefficient polynomials in one variable `q`.
//!
//! Every invariant this crate computes is a polynomial in `q = uv` with
//! arbitrary-precision integer coefficients: coefficients of these polynomials
//! are Betti numbers, which grow without bound in the rank and degree, so
//! fixed-width integers are not an option. [`QPoly`] stores the coefficient of
//! `q^i` at index `i` and keeps itself in canonical form (no trailing zero
//! coefficient), so structural equality coincides with mathematical equality.
//!
//! Add, Sub, Mul and Neg are available through the standard operator traits
//! (by value and by reference). Exact division is [`QPoly::div_exact`]; a
//! nonzero remainder is an error, never silently truncated, because in this
//! crate a failed exact division means a claimed polynomial identity is false.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Errors from polynomial division.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DivError {
    /// The divisor was the zero polynomial.
    DivisionByZero,
    /// The division left a nonzero remainder.
    NotDivisible,
}

impl fmt::Display for DivError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DivError::DivisionByZero => write!(f, "division by the zero polynomial"),
            DivError::NotDivisible => write!(f, "polynomial division left a nonzero remainder"),
        }
    }
}

impl std::error::Error for DivError {}

/// How to print a polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RenderStyle {
    /// Powers of `q`: `1 + 2q + q^2`.
    Q,
    /// Powers of `uv` (Hodge polynomial): `1 + 2uv + (uv)^2`.
    Uv,
    /// Substitute `q = u^2` (Poincaré polynomial): `1 + 2u^2 + u^4`.
    UEqualsV,
}

/// An integer-coefficient polynomial in the single variable `q`.
///
/// `coeffs[i]` is the coefficient of `q^i`. The zero polynomial is the empty
/// coefficient vector, and no nonzero polynomial ends in a zero coefficient;
/// all constructors enforce this.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

impl QPoly {
    /// Build a polynomial from coefficients (index = power), trimming
    /// trailing zeros.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    /// Convenience constructor from machine integers.
    pub fn from_coeffs(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly {
            coeffs: vec![BigInt::one()],
        }
    }

    /// The monomial `q^k`.
    pub fn q_pow(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        QPoly { coeffs }
    }

    /// `1 - q^k` for `k >= 1`, the building block of all closed-form quotients.
    pub fn one_minus_q_pow(k: usize) -> Self {
        assert!(k >= 1, "1 - q^0 is zero; use QPoly::zero()");
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[0] = BigInt::one();
        coeffs[k] = -BigInt::one();
        QPoly { coeffs }
    }

    /// `1 + q + ... + q^b`, the Hodge polynomial of `b`-dimensional projective
    /// space. Returns the zero polynomial for `b < 0` (empty projective
    /// space), which is what the flip recursion needs when a stratum's base
    /// has negative dimension.
    pub fn geometric(b: i64) -> Self {
        if b < 0 {
            return QPoly::zero();
        }
        QPoly {
            coeffs: vec![BigInt::one(); b as usize + 1],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `q^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Exact quotient `self / divisor`.
    ///
    /// Signals [`DivError::NotDivisible`] if the remainder is nonzero and
    /// [`DivError::DivisionByZero`] if `divisor` is zero.
    pub fn div_exact(&self, divisor: &QPoly) -> Result<QPoly, DivError> {
        if divisor.is_zero() {
            return Err(DivError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(QPoly::zero());
        }
        let dn = divisor.coeffs.len();
        if self.coeffs.len() < dn {
            return Err(DivError::NotDivisible);
        }
        let lead = &divisor.coeffs[dn - 1];
        let mut rem = self.coeffs.clone();
        let qn = rem.len() - dn + 1;
        let mut quot = vec![BigInt::zero(); qn];
        for i in (0..qn).rev() {
            let top = std::mem::take(&mut rem[i + dn - 1]);
            if top.is_zero() {
                continue;
            }
            let (c, r) = num_integer::Integer::div_rem(&top, lead);
            if !r.is_zero() {
                return Err(DivError::NotDivisible);
            }
            for (j, d) in divisor.coeffs.iter().enumerate().take(dn - 1) {
                rem[i + j] -= &c * d;
            }
            quot[i] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(DivError::NotDivisible);
        }
        Ok(QPoly::new(quot))
    }

    /// Evaluate at an integer point, exactly (Horner). Evaluating at a prime
    /// power counts points over the corresponding finite field; evaluating at
    /// 1 gives the Euler characteristic.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Sum of coefficients, i.e. the value at `q = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// True iff `coeff(i) == coeff(deg - i)` for all `i` (Poincaré duality on
    /// computed outputs). The zero polynomial counts as palindromic.
    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    /// Deterministic textual form, ascending powers.
    pub fn render(&self, style: RenderStyle) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    out.push('-');
                }
                first = false;
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let var = match (style, i) {
                (_, 0) => String::new(),
                (RenderStyle::Q, 1) => "q".to_string(),
                (RenderStyle::Q, _) => format!("q^{i}"),
                (RenderStyle::Uv, 1) => "uv".to_string(),
                (RenderStyle::Uv, _) => format!("(uv)^{i}"),
                (RenderStyle::UEqualsV, _) => format!("u^{}", 2 * i),
            };
            if var.is_empty() {
                out.push_str(&mag.to_string());
            } else {
                if !mag.is_one() {
                    out.push_str(&mag.to_string());
                }
                out.push_str(&var);
            }
        }
        out
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(RenderStyle::Q))
    }
}

// Debug prints the same compact form as Display; the raw coefficient vector
// is never more readable.
impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add<&QPoly> for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(len);
        for i in 0..len {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        QPoly::new(coeffs)
    }
}

impl Sub<&QPoly> for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(len);
        for i in 0..len {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        QPoly::new(coeffs)
    }
}

impl Mul<&QPoly> for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPoly::new(coeffs)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_binop_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for QPoly {
            type Output = QPoly;
            fn $method(self, rhs: QPoly) -> QPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&QPoly> for QPoly {
            type Output = QPoly;
            fn $method(self, rhs: &QPoly) -> QPoly {
                (&self).$method(rhs)
            }
        }
        impl $trait<QPoly> for &QPoly {
            type Output = QPoly;
            fn $method(self, rhs: QPoly) -> QPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop_owned!(Add, add);
forward_binop_owned!(Sub, sub);
forward_binop_owned!(Mul, mul);

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        -&self
    }
}

// Serialized as a list of decimal coefficient strings, ascending powers;
// big integers do not fit in JSON numbers.
impl serde::Serialize for QPoly {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

impl<'de> serde::Deserialize<'de> for QPoly {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let strings = Vec::<String>::deserialize(deserializer)?;
        let mut coeffs = Vec::with_capacity(strings.len());
        for s in &strings {
            let c: BigInt = s
                .parse()
                .map_err(|_| serde::de::Error::custom(format!("bad integer coefficient {s:?}")))?;
            coeffs.push(c);
        }
        Ok(QPoly::new(coeffs))
    }
}

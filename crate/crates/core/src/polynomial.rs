//! Univariate polynomials with exact coefficient arithmetic.
//!
//! The coefficient type is generic; all counting code in this crate uses the
//! [`crate::RationalPolynomial`] alias, which carries arbitrary-precision
//! rationals so that evaluation at negative arguments stays exact.

use num_traits::{FromPrimitive, Num, Zero};

use crate::error::{Error, Result};
use crate::Rational;

/// A polynomial stored as coefficients in ascending degree order.
///
/// The representation is normalized: the leading coefficient is nonzero, and
/// the zero polynomial is the empty coefficient list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Clone + Num> Polynomial<T> {
    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn from_coefficients(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Self::from_coefficients(vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Ascending coefficients; empty for the zero polynomial.
    pub fn coefficients(&self) -> &[T] {
        &self.coeffs
    }

    pub fn leading_coefficient(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(T::zero);
            let b = other.coeffs.get(i).cloned().unwrap_or_else(T::zero);
            out.push(a + b);
        }
        Self::from_coefficients(out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::from_coefficients(out)
    }

    pub fn scale(&self, factor: &T) -> Self {
        Self::from_coefficients(
            self.coeffs
                .iter()
                .map(|c| c.clone() * factor.clone())
                .collect(),
        )
    }

    /// Exact weighted sum of polynomials.
    pub fn scale_add(terms: &[(T, Polynomial<T>)]) -> Self {
        let mut acc = Self::zero();
        for (w, p) in terms {
            acc = acc.add(&p.scale(w));
        }
        acc
    }

    /// Horner evaluation at an arbitrary point.
    pub fn evaluate_at(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }
}

impl<T: Clone + Num + FromPrimitive> Polynomial<T> {
    /// Horner evaluation at an integer, including negative ones.
    pub fn evaluate(&self, x: i64) -> T {
        let x = T::from_i64(x).expect("coefficient type must represent i64 sample points");
        self.evaluate_at(&x)
    }

    /// The unique polynomial of degree < `points.len()` through the given
    /// points, by Lagrange's formula in exact arithmetic.
    pub fn interpolate(points: &[(i64, T)]) -> Result<Self> {
        let mut seen = points.iter().map(|(x, _)| *x).collect::<Vec<_>>();
        seen.sort_unstable();
        for w in seen.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateAbscissa { x: w[0] });
            }
        }

        let mut acc = Self::zero();
        for (j, (xj, yj)) in points.iter().enumerate() {
            // basis_j(x) = prod_{m != j} (x - x_m) / (x_j - x_m)
            let mut basis = Self::constant(T::one());
            let mut denom = T::one();
            let xj_t = T::from_i64(*xj).expect("abscissa fits the coefficient type");
            for (m, (xm, _)) in points.iter().enumerate() {
                if m == j {
                    continue;
                }
                let xm_t = T::from_i64(*xm).expect("abscissa fits the coefficient type");
                basis = basis.mul(&Self::from_coefficients(vec![
                    T::zero() - xm_t.clone(),
                    T::one(),
                ]));
                denom = denom * (xj_t.clone() - xm_t);
            }
            acc = acc.add(&basis.scale(&(yj.clone() / denom)));
        }
        Ok(acc)
    }
}

impl Polynomial<Rational> {
    /// Coefficients rendered as `"num/den"` strings, ascending degree.
    pub fn coefficient_strings(&self) -> Vec<String> {
        self.coeffs
            .iter()
            .map(|c| format!("{}/{}", c.numer(), c.denom()))
            .collect()
    }
}

impl std::fmt::Display for Polynomial<Rational> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{}", c)?,
                1 => write!(f, "{}*n", c)?,
                _ => write!(f, "{}*n^{}", c, k)?,
            }
        }
        Ok(())
    }
}

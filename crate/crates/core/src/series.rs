//! Exact-to-truncation arithmetic on complex formal power series.
//!
//! A [`TruncatedSeries`] stores Taylor coefficients `c0..cN` together with an
//! explicit truncation order `N`. Every binary operation truncates its result
//! to the smaller operand order, so a result never pretends to carry more
//! accuracy than its inputs. All operations are pure; values are freely
//! shareable across threads.

use num_complex::Complex64;
use thiserror::Error;

/// Complex double-precision scalar used throughout the crate.
pub type C64 = Complex64;

/// Slack for the normalization checks (`c0 = 0`, `c1 = 1`).
const NORM_TOL: f64 = 1e-9;

/// Constant terms below this modulus are treated as an exact zero when
/// composing.
const INNER_CONST_TOL: f64 = 1e-12;

#[derive(Debug, Error)]
pub enum SeriesError {
    /// Composition `outer(inner)` needs `inner(0) = 0` for the truncated
    /// coefficients to be exact.
    #[error("inner series must vanish at the origin (constant term {0})")]
    InnerConstantNonzero(C64),
    /// Reversion and `log(f/z)` act on normalized series only.
    #[error("series must be normalized with c0 = 0 and c1 = 1 (got c0 = {c0}, c1 = {c1})")]
    NotNormalized { c0: C64, c1: C64 },
}

/// Formal power series truncated at a fixed order.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries {
    coeffs: Vec<C64>,
}

impl TruncatedSeries {
    /// Build a series from its coefficients `c0..cN`; the order is `len - 1`.
    pub fn new(coeffs: Vec<C64>) -> Self {
        assert!(!coeffs.is_empty(), "a series carries at least its constant term");
        Self { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&x| C64::new(x, 0.0)).collect())
    }

    pub fn zero(order: usize) -> Self {
        Self { coeffs: vec![C64::new(0.0, 0.0); order + 1] }
    }

    pub fn constant(c: C64, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(C64::new(1.0, 0.0), order)
    }

    /// The monomial `z^k` at the given truncation order (`k <= order`).
    pub fn monomial(k: usize, order: usize) -> Self {
        assert!(k <= order, "monomial degree exceeds truncation order");
        let mut s = Self::zero(order);
        s.coeffs[k] = C64::new(1.0, 0.0);
        s
    }

    /// The identity series `z`.
    pub fn identity(order: usize) -> Self {
        Self::monomial(1, order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `z^k`; zero beyond the truncation order.
    pub fn coeff(&self, k: usize) -> C64 {
        self.coeffs.get(k).copied().unwrap_or_else(|| C64::new(0.0, 0.0))
    }

    pub fn coeffs(&self) -> &[C64] {
        &self.coeffs
    }

    /// Re-truncate to `order`, zero-padding when extending. Extending does
    /// not recover tail information discarded by an earlier truncation.
    pub fn with_order(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, C64::new(0.0, 0.0));
        Self { coeffs }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        Self::new((0..=n).map(|k| self.coeffs[k] + rhs.coeffs[k]).collect())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        Self::new((0..=n).map(|k| self.coeffs[k] - rhs.coeffs[k]).collect())
    }

    pub fn scale(&self, s: C64) -> Self {
        Self::new(self.coeffs.iter().map(|&c| c * s).collect())
    }

    /// Multiply by `z`, keeping the truncation order (the previous top
    /// coefficient falls off).
    pub fn mul_z(&self) -> Self {
        let n = self.order();
        let mut coeffs = vec![C64::new(0.0, 0.0); n + 1];
        coeffs[1..=n].copy_from_slice(&self.coeffs[..n]);
        Self { coeffs }
    }

    /// Cauchy product truncated to `min(order(self), order(rhs))`.
    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        Self { coeffs: mul_trunc(&self.coeffs, &rhs.coeffs, n) }
    }

    /// Division `self / rhs`; `rhs` must have a nonzero constant term.
    pub fn div(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        let b0 = rhs.coeffs[0];
        assert!(b0.norm() > 0.0, "series division requires a nonzero constant term");
        let mut q = vec![C64::new(0.0, 0.0); n + 1];
        for k in 0..=n {
            let mut acc = self.coeff(k);
            for j in 0..k {
                acc -= q[j] * rhs.coeffs[k - j];
            }
            q[k] = acc / b0;
        }
        Self { coeffs: q }
    }

    /// Termwise derivative; the order drops by one.
    pub fn differentiate(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        Self::new((1..=self.order()).map(|k| self.coeffs[k] * k as f64).collect())
    }

    /// Taylor coefficients of `self(inner)` to the shared order.
    /// Requires `inner(0) = 0`.
    pub fn compose(&self, inner: &Self) -> Result<Self, SeriesError> {
        let c0 = inner.coeff(0);
        if c0.norm() > INNER_CONST_TOL {
            return Err(SeriesError::InnerConstantNonzero(c0));
        }
        let n = self.order().min(inner.order());
        let mut w = inner.with_order(n);
        w.coeffs[0] = C64::new(0.0, 0.0);
        Ok(Self { coeffs: compose_trunc(&self.coeffs, &w.coeffs, n) })
    }

    /// Compositional inverse `g` with `self(g(w)) = w` to the truncation
    /// order, found by solving for one coefficient per order. Requires the
    /// normalization `c0 = 0`, `c1 = 1`.
    pub fn revert(&self) -> Result<Self, SeriesError> {
        self.check_normalized()?;
        let n = self.order();
        let mut g = vec![C64::new(0.0, 0.0); n + 1];
        g[1] = C64::new(1.0, 0.0);
        for m in 2..=n {
            // With g known below order m and g[m] still zero, the z^m
            // coefficient of self∘g is residual + 1·g[m].
            let h = compose_trunc(&self.coeffs, &g[..=m], m);
            g[m] = -h[m];
        }
        Ok(Self { coeffs: g })
    }

    /// Series of `log(f(z)/z)` for normalized `f`; the order drops by one.
    pub fn log_div_z(&self) -> Result<Self, SeriesError> {
        self.check_normalized()?;
        let m = self.order() - 1;
        // u = f/z, so u0 = c1 ≈ 1. From u' = u·L' with L = log u:
        //   L_k = (u_k - (1/k) Σ_{j=1..k-1} j·L_j·u_{k-j}) / u0.
        let u: Vec<C64> = (0..=m).map(|k| self.coeffs[k + 1]).collect();
        let mut l = vec![C64::new(0.0, 0.0); m + 1];
        l[0] = u[0].ln();
        for k in 1..=m {
            let mut acc = C64::new(0.0, 0.0);
            for j in 1..k {
                acc += l[j] * u[k - j] * j as f64;
            }
            l[k] = (u[k] - acc / k as f64) / u[0];
        }
        Ok(Self { coeffs: l })
    }

    /// Evaluate at a point by Horner summation.
    pub fn eval(&self, z: C64) -> C64 {
        let mut acc = C64::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    /// Min and max of `|f(r e^{iθ})|` over a uniform θ grid.
    pub fn modulus_extrema_on_circle(&self, r: f64, grid: usize) -> (f64, f64) {
        assert!(r > 0.0 && r < 1.0, "radius must lie in (0, 1)");
        assert!(grid >= 8, "grid must have at least 8 points");
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for j in 0..grid {
            let theta = 2.0 * std::f64::consts::PI * j as f64 / grid as f64;
            let z = C64::from_polar(r, theta);
            let v = self.eval(z).norm();
            lo = lo.min(v);
            hi = hi.max(v);
        }
        (lo, hi)
    }

    /// Largest coefficient modulus, a crude series norm used by residual
    /// checks.
    pub fn max_coeff_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    fn check_normalized(&self) -> Result<(), SeriesError> {
        let c0 = self.coeff(0);
        let c1 = self.coeff(1);
        if self.order() < 1 || c0.norm() > NORM_TOL || (c1 - 1.0).norm() > NORM_TOL {
            return Err(SeriesError::NotNormalized { c0, c1 });
        }
        Ok(())
    }
}

/// Product of coefficient slices truncated at order `n`.
fn mul_trunc(a: &[C64], b: &[C64], n: usize) -> Vec<C64> {
    let mut out = vec![C64::new(0.0, 0.0); n + 1];
    let amax = a.len().min(n + 1);
    for i in 0..amax {
        let ai = a[i];
        if ai.re == 0.0 && ai.im == 0.0 {
            continue;
        }
        let bmax = b.len().min(n + 1 - i);
        for j in 0..bmax {
            out[i + j] += ai * b[j];
        }
    }
    out
}

/// Horner composition of coefficient slices truncated at order `n`;
/// assumes `inner[0] = 0`.
fn compose_trunc(outer: &[C64], inner: &[C64], n: usize) -> Vec<C64> {
    let mut acc = vec![C64::new(0.0, 0.0); n + 1];
    acc[0] = outer[outer.len() - 1];
    for k in (0..outer.len() - 1).rev() {
        acc = mul_trunc(&acc, inner, n);
        acc[0] += outer[k];
    }
    acc
}

//! q-number arithmetic at the two levels q and sqrt(q).
//!
//! The deformation parameter is held through its quarter power s = q^(1/4).
//! Every fractional power of q used anywhere in the crate is an integer
//! power of s, so fixing s fixes all branch choices at once. Evaluation
//! goes through t = ln(s): at level q the q-number of m is
//! sinh(2mt)/sinh(2t), at level sqrt(q) it is sinh(mt)/sinh(t), and both
//! extend continuously to the value m at q = 1.

use num_complex::Complex64;
use thiserror::Error;

/// Absolute tolerance for root-of-unity detection, |q^N - 1| <= this.
pub const ROOT_DETECT_TOL: f64 = 1e-10;

/// Default upper bound for the root-of-unity minimality scan.
pub const DEFAULT_ROOT_SCAN_MAX: u32 = 64;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum QnumError {
    #[error("denominator q^(1/4) + q^(-1/4) vanishes (s^2 = -1)")]
    DenominatorZero,
    #[error("deformation parameter must be a positive real, got {0}")]
    NonPositiveReal(f64),
}

/// Evaluation level of a q-number: [m] at level q uses the half power
/// q^(m/2) = s^(2m), at level sqrt(q) it uses q^(m/4) = s^m.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QLevel {
    Base,
    Sqrt,
}

/// Deformation parameter held via its quarter power s = q^(1/4), with
/// root-of-unity metadata.
#[derive(Debug, Clone, PartialEq)]
pub struct QParam {
    s: Complex64,
    unit_circle: bool,
    root_order: Option<u32>,
}

impl QParam {
    /// Parameter on the unit circle, q = exp(i theta), s = exp(i theta / 4).
    ///
    /// The root-of-unity scan looks for the minimal N <= `DEFAULT_ROOT_SCAN_MAX`
    /// with |q^N - 1| <= `ROOT_DETECT_TOL`.
    pub fn from_angle(theta: f64) -> Self {
        Self::from_angle_with_scan(theta, DEFAULT_ROOT_SCAN_MAX)
    }

    /// Same as [`QParam::from_angle`] with an explicit scan depth.
    pub fn from_angle_with_scan(theta: f64, scan_max: u32) -> Self {
        assert!(theta.is_finite(), "angle must be finite");
        let s = Complex64::from_polar(1.0, theta / 4.0);
        // |q^N - 1| = 2 |sin(N theta / 2)| on the unit circle.
        let mut root_order = None;
        for n in 1..=scan_max {
            let dist = 2.0 * (0.5 * n as f64 * theta).sin().abs();
            if dist <= ROOT_DETECT_TOL {
                root_order = Some(n);
                break;
            }
        }
        QParam {
            s,
            unit_circle: true,
            root_order,
        }
    }

    /// Parameter for real positive q, s = q^(1/4) real.
    pub fn from_positive_real(q: f64) -> Result<Self, QnumError> {
        if !(q > 0.0) || !q.is_finite() {
            return Err(QnumError::NonPositiveReal(q));
        }
        let s = Complex64::new(q.powf(0.25), 0.0);
        let unit_circle = (q - 1.0).abs() <= 1e-12;
        let mut root_order = None;
        for n in 1..=DEFAULT_ROOT_SCAN_MAX {
            if (q.powi(n as i32) - 1.0).abs() <= ROOT_DETECT_TOL {
                root_order = Some(n);
                break;
            }
        }
        Ok(QParam {
            s,
            unit_circle,
            root_order,
        })
    }

    /// The quarter power s = q^(1/4).
    pub fn s(&self) -> Complex64 {
        self.s
    }

    /// q = s^4.
    pub fn q(&self) -> Complex64 {
        self.s.powi(4)
    }

    /// q^(1/2) = s^2.
    pub fn sqrt_q(&self) -> Complex64 {
        self.s * self.s
    }

    /// t = ln(s), the principal logarithm; all q-powers are exp of
    /// integer multiples of t.
    pub fn log_s(&self) -> Complex64 {
        self.s.ln()
    }

    /// Whether |q| = 1 within tolerance.
    pub fn unit_circle(&self) -> bool {
        self.unit_circle
    }

    /// Minimal N with q^N = 1, when one was detected.
    pub fn root_order(&self) -> Option<u32> {
        self.root_order
    }

    /// Order of q^2 for a detected root of unity; this is the period
    /// governing the finite-dimensional modules.
    pub fn period(&self) -> Option<u32> {
        self.root_order.map(derived_period)
    }

    /// [2] at level sqrt(q), i.e. s + 1/s = 2 cosh(t).
    pub fn bracket_two_sqrt(&self) -> Complex64 {
        self.s + self.s.inv()
    }
}

/// Order of q^2 for q a primitive `root_order`-th root of unity:
/// `root_order` itself when odd, half of it when even.
pub fn derived_period(root_order: u32) -> u32 {
    if root_order % 2 == 1 {
        root_order
    } else {
        root_order / 2
    }
}

/// The q-number [m] = (q^(m/2) - q^(-m/2)) / (q^(1/2) - q^(-1/2)) at the
/// requested level, extended continuously to the value m where the
/// defining quotient degenerates.
pub fn qvalue(m: Complex64, level: QLevel, p: &QParam) -> Complex64 {
    let t = p.log_s();
    let u = match level {
        QLevel::Base => 2.0 * t,
        QLevel::Sqrt => t,
    };
    if u == Complex64::new(0.0, 0.0) {
        return m;
    }
    let num = (m * u).sinh();
    let den = u.sinh();
    if den == Complex64::new(0.0, 0.0) {
        if num == Complex64::new(0.0, 0.0) {
            // l'Hopital in t at a shared zero of numerator and denominator
            return m * (m * u).cosh() / u.cosh();
        }
        return num / den;
    }
    num / den
}

/// Convenience wrapper for real arguments.
pub fn qvalue_real(m: f64, level: QLevel, p: &QParam) -> Complex64 {
    qvalue(Complex64::new(m, 0.0), level, p)
}

/// The simplified ratio [2m]_q / [2m]_sqrt(q) = cosh(2mt)/cosh(t),
/// extended through the removable singularity at m = 0.
///
/// The argument is the eigenvalue of H divided by two: the operator
/// [H]_q / [H]_sqrt(q) acts on a weight vector with H-eigenvalue 2m by
/// this function of m.
pub fn ratio_q_over_sqrtq(m: Complex64, p: &QParam) -> Result<Complex64, QnumError> {
    let t = p.log_s();
    let den = t.cosh();
    if den.norm() < 1e-12 {
        return Err(QnumError::DenominatorZero);
    }
    Ok((2.0 * m * t).cosh() / den)
}

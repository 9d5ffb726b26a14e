//! Quantum integers and stable evaluation of q-power / q-ratio expressions
//! over the whole parameter range `q ∈ [0, ∞]`.
//!
//! The quantum integer is `[n] = q^{n-1} + q^{n-3} + … + q^{-(n-1)}`, the
//! summed form of `(q^n − q^{-n})/(q − q^{-1})`. The summed form is used
//! everywhere so that `q = 1` is exact (`[n] = n`) rather than a removable
//! singularity. Values are carried as sign + natural-log magnitude so that
//! long products of quantum integers never overflow.

use crate::error::{Error, Result};
use crate::Float;

/// The quantum parameter: a strictly positive real, or one of the symbolic
/// endpoints `zero` / `infinity`. The endpoints are tags, never stored as
/// `0.0` or an overflowed float; evaluation at them is routed to analytic
/// limit formulas.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum QParam<S> {
    Finite(S),
    Zero,
    Infinity,
}

impl<S: Float> QParam<S> {
    /// A finite parameter; rejects non-positive or non-finite values.
    pub fn finite(value: S) -> Result<Self> {
        if value.is_finite() && value > S::zero() {
            Ok(QParam::Finite(value))
        } else {
            Err(Error::InvalidArgument(format!(
                "q must be a strictly positive finite real, got {value}"
            )))
        }
    }

    pub fn is_symbolic(&self) -> bool {
        !matches!(self, QParam::Finite(_))
    }

    /// Parses `"zero"`, `"infinity"`, or a positive decimal.
    pub fn parse(text: &str) -> Result<Self> {
        match text.trim() {
            "zero" => Ok(QParam::Zero),
            "infinity" => Ok(QParam::Infinity),
            other => {
                let v: S = other
                    .parse::<f64>()
                    .ok()
                    .and_then(S::from_f64)
                    .ok_or_else(|| Error::Parse(format!("cannot parse q value {other:?}")))?;
                QParam::finite(v)
            }
        }
    }
}

impl<S: Float> std::fmt::Display for QParam<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            QParam::Finite(v) => write!(f, "{v}"),
            QParam::Zero => write!(f, "zero"),
            QParam::Infinity => write!(f, "infinity"),
        }
    }
}

/// Sign + natural-log-magnitude carrier. Multiplication adds logs, so
/// products of quantum integers with exponents up to ±10^4 stay
/// representable where plain binary64 would overflow.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogScalar<S> {
    sign: i8,
    log_magnitude: S,
}

impl<S: Float> LogScalar<S> {
    pub fn zero() -> Self {
        LogScalar { sign: 0, log_magnitude: S::zero() }
    }

    pub fn one() -> Self {
        LogScalar { sign: 1, log_magnitude: S::zero() }
    }

    /// From an ordinary value.
    pub fn from_value(v: S) -> Self {
        if v == S::zero() {
            Self::zero()
        } else {
            LogScalar { sign: if v > S::zero() { 1 } else { -1 }, log_magnitude: v.abs().ln() }
        }
    }

    /// From a sign and a log magnitude.
    pub fn from_parts(sign: i8, log_magnitude: S) -> Self {
        debug_assert!(matches!(sign, -1 | 0 | 1));
        if sign == 0 {
            Self::zero()
        } else {
            LogScalar { sign, log_magnitude }
        }
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    /// Collapses to an ordinary value (may under/overflow for extreme logs;
    /// callers keep arithmetic in log form until the final conversion).
    pub fn value(&self) -> S {
        match self.sign {
            0 => S::zero(),
            1 => self.log_magnitude.exp(),
            _ => -self.log_magnitude.exp(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.sign == 0 || other.sign == 0 {
            Self::zero()
        } else {
            LogScalar {
                sign: self.sign * other.sign,
                log_magnitude: self.log_magnitude + other.log_magnitude,
            }
        }
    }

    /// Division; dividing by zero is a caller bug.
    pub fn div(&self, other: &Self) -> Self {
        assert!(other.sign != 0, "LogScalar division by zero");
        if self.sign == 0 {
            Self::zero()
        } else {
            LogScalar {
                sign: self.sign * other.sign,
                log_magnitude: self.log_magnitude - other.log_magnitude,
            }
        }
    }

    /// Principal square root; errors on negative input.
    pub fn sqrt(&self) -> Result<Self> {
        match self.sign {
            0 => Ok(Self::zero()),
            1 => Ok(LogScalar { sign: 1, log_magnitude: self.log_magnitude / (S::one() + S::one()) }),
            _ => Err(Error::InvalidArgument("square root of a negative LogScalar".into())),
        }
    }

    pub fn neg(&self) -> Self {
        LogScalar { sign: -self.sign, log_magnitude: self.log_magnitude }
    }

    pub fn abs(&self) -> Self {
        LogScalar { sign: self.sign.abs(), log_magnitude: self.log_magnitude }
    }
}

/// log of `[n]` at finite q, evaluated at `p = max(q, 1/q)` via the
/// symmetry `[n]_q = [n]_{1/q}`: the geometric tail then has ≤ n terms all
/// in (0, 1], which is stable for any p and n.
fn log_qint_finite<S: Float>(n: u32, q: S) -> S {
    let p = if q >= S::one() { q } else { S::one() / q };
    let pm2 = (S::one() / p) * (S::one() / p);
    let mut sum = S::zero();
    let mut term = S::one();
    for _ in 0..n {
        sum = sum + term;
        term = term * pm2;
    }
    S::from_u32(n - 1).unwrap() * p.ln() + sum.ln()
}

/// The quantum integer `[n]` for n ≥ 0. At the symbolic endpoints only
/// `n ∈ {0, 1}` has a finite value (`0` and `1`); larger n diverges in
/// magnitude and is reported as an error — ratios of quantum integers at
/// the endpoints go through [`qint_ratio`].
pub fn qint<S: Float>(n: u32, q: &QParam<S>) -> Result<LogScalar<S>> {
    match (n, q) {
        (0, _) => Ok(LogScalar::zero()),
        (_, QParam::Finite(v)) => Ok(LogScalar::from_parts(1, log_qint_finite(n, *v))),
        (1, _) => Ok(LogScalar::one()),
        (_, _) => Err(Error::DivergentLimit(format!(
            "[{n}] has no finite value at q = {q}; use qint_ratio or the crystal-limit evaluators"
        ))),
    }
}

/// `[m]` for a signed integer via `[-m] = -[m]`.
pub fn qint_signed<S: Float>(m: i64, q: &QParam<S>) -> Result<LogScalar<S>> {
    let v = qint(m.unsigned_abs() as u32, q)?;
    Ok(if m < 0 { v.neg() } else { v })
}

/// The ratio `[a]/[b]` for a, b ≥ 1, defined on all of `[0, ∞]`: at the
/// symbolic endpoints it is the analytic limit — 1 for a = b, 0 for a < b,
/// and divergent (an error) for a > b.
pub fn qint_ratio<S: Float>(a: u32, b: u32, q: &QParam<S>) -> Result<LogScalar<S>> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidArgument(format!(
            "qint_ratio arguments must be positive, got [{a}]/[{b}]"
        )));
    }
    match q {
        QParam::Finite(_) => Ok(qint(a, q)?.div(&qint(b, q)?)),
        _ => match a.cmp(&b) {
            std::cmp::Ordering::Equal => Ok(LogScalar::one()),
            std::cmp::Ordering::Less => Ok(LogScalar::zero()),
            std::cmp::Ordering::Greater => Err(Error::DivergentLimit(format!(
                "[{a}]/[{b}] diverges at q = {q}; use the crystal-limit evaluators"
            ))),
        },
    }
}

/// `q^{e/2}` for an integer e. At q = 0 this is 0 for e > 0, 1 for e = 0,
/// divergent for e < 0; mirrored at q = ∞.
pub fn qpow_half<S: Float>(e: i64, q: &QParam<S>) -> Result<LogScalar<S>> {
    match q {
        QParam::Finite(v) => {
            let half_e = S::from_i64(e).unwrap() / (S::one() + S::one());
            Ok(LogScalar::from_parts(1, half_e * v.ln()))
        }
        QParam::Zero | QParam::Infinity => {
            // sign of the exponent that sends the power to zero
            let vanishing = if matches!(q, QParam::Zero) { e > 0 } else { e < 0 };
            if e == 0 {
                Ok(LogScalar::one())
            } else if vanishing {
                Ok(LogScalar::zero())
            } else {
                Err(Error::DivergentLimit(format!("q^({e}/2) diverges at q = {q}")))
            }
        }
    }
}

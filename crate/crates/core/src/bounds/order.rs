use super::{BoundsError, Rational};

/// `-n²/16`, a lower bound on `γ'_s` for every graph of order `n`.
pub fn order_lower_bound(n: usize) -> Rational {
    let n = n as i64;
    Rational::new(-n * n, 16)
}

/// Bounds on `g(k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsReport {
    pub k: usize,
    pub lower: Rational,
    pub lower_source: &'static str,
    /// `-(k-8)²/72`, present for `k >= 12`.
    pub upper: Option<Rational>,
    pub upper_source: Option<&'static str>,
    /// `-(m/6)(9m+3)` when `k = 9m + 3` with `m >= 1`, from `L_(m,2)`.
    pub sharper_upper: Option<Rational>,
}

impl BoundsReport {
    pub fn upper(&self) -> Result<Rational, BoundsError> {
        self.upper.ok_or(BoundsError::UpperBoundDomain(self.k))
    }

    /// Tightest upper bound available.
    pub fn best_upper(&self) -> Option<Rational> {
        match (self.upper, self.sharper_upper) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        }
    }
}

pub fn g_bounds(k: usize) -> BoundsReport {
    let (upper, upper_source) = if k >= 12 {
        let d = k as i64 - 8;
        (Some(Rational::new(-d * d, 72)), Some("-(k-8)^2/72"))
    } else {
        (None, None)
    };
    let sharper_upper = (k >= 12 && k % 9 == 3).then(|| {
        let m = (k as i64 - 3) / 9;
        Rational::new(-m, 6) * (9 * m + 3)
    });
    BoundsReport {
        k,
        lower: order_lower_bound(k),
        lower_source: "-k^2/16",
        upper,
        upper_source,
        sharper_upper,
    }
}

use crate::error::{Error, Result};
use crate::Real;

/// Piecewise-linear fuzzy set shape over a scalar universe.
///
/// Breakpoints are validated once at construction; evaluation never fails.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MembershipFunction<F: Real> {
    /// a <= b <= c <= d, degree 1 on the plateau [b, c].
    Trapezoid { a: F, b: F, c: F, d: F },
    /// a <= b <= c, degree 1 at the apex b.
    Triangle { a: F, b: F, c: F },
}

impl<F: Real> MembershipFunction<F> {
    pub fn trapezoid(a: F, b: F, c: F, d: F) -> Result<Self> {
        let pts = [a, b, c, d];
        if pts.iter().any(|p| !p.is_finite()) || !(a <= b && b <= c && c <= d) {
            return Err(Error::InvalidBreakpoints(to_f64_vec(&pts)));
        }
        Ok(Self::Trapezoid { a, b, c, d })
    }

    pub fn triangle(a: F, b: F, c: F) -> Result<Self> {
        let pts = [a, b, c];
        if pts.iter().any(|p| !p.is_finite()) || !(a <= b && b <= c) {
            return Err(Error::InvalidBreakpoints(to_f64_vec(&pts)));
        }
        Ok(Self::Triangle { a, b, c })
    }

    /// Interval outside which the degree is zero.
    pub fn support(&self) -> (F, F) {
        match *self {
            Self::Trapezoid { a, d, .. } => (a, d),
            Self::Triangle { a, c, .. } => (a, c),
        }
    }

    /// Membership degree at `x`, always in [0, 1] and exact at breakpoints.
    pub fn degree(&self, x: F) -> F {
        let (a, b, c, d) = match *self {
            Self::Trapezoid { a, b, c, d } => (a, b, c, d),
            Self::Triangle { a, b, c } => (a, b, b, c),
        };
        if x < a || x > d {
            F::zero()
        } else if x >= b && x <= c {
            F::one()
        } else if x < b {
            // a < x < b implies b > a
            (x - a) / (b - a)
        } else {
            (d - x) / (d - c)
        }
    }

    /// Point where the degree is 1: the triangle apex, or a plateau point
    /// chosen so that neighboring labels of a Ruspini partition are zero
    /// (the universe edge for shoulder trapezoids, else the plateau middle).
    pub fn prototype(&self) -> F {
        match *self {
            Self::Triangle { b, .. } => b,
            Self::Trapezoid { a, b, c, d } => {
                if a == b {
                    b
                } else if c == d {
                    c
                } else {
                    (b + c) / F::from_f64(2.0).unwrap()
                }
            }
        }
    }

    /// Centroid of the area under the membership function, computed from a
    /// uniform discretization of the support with `resolution` sample points.
    /// Endpoint samples carry half weight so piecewise-linear areas are exact.
    pub fn centroid(&self, resolution: usize) -> Result<F> {
        if resolution < 2 {
            return Err(Error::InvalidResolution(resolution));
        }
        let (lo, hi) = self.support();
        if lo == hi {
            return Err(Error::EmptyFuzzySet);
        }
        let n = F::from_usize(resolution - 1).unwrap();
        let step = (hi - lo) / n;
        let half = F::from_f64(0.5).unwrap();
        let mut num = F::zero();
        let mut den = F::zero();
        for i in 0..resolution {
            let x = if i == resolution - 1 {
                hi
            } else {
                lo + step * F::from_usize(i).unwrap()
            };
            let mu = self.degree(x);
            let w = if i == 0 || i == resolution - 1 { half } else { F::one() };
            num = num + w * x * mu;
            den = den + w * mu;
        }
        if den <= F::zero() {
            return Err(Error::EmptyFuzzySet);
        }
        Ok(num / den)
    }
}

fn to_f64_vec<F: Real>(pts: &[F]) -> Vec<f64> {
    pts.iter().map(|p| p.to_f64().unwrap_or(f64::NAN)).collect()
}

//! Minimal double-double arithmetic: an unevaluated sum hi + lo with
//! |lo| ≤ ulp(hi)/2, giving ~31 significant decimal digits. Used for the
//! optional extended-precision accumulation mode and for boundary-safe
//! comparisons in the Diophantine counting module.

/// Double-double value `hi + lo`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

/// Error-free sum: returns (s, e) with s = fl(a+b) and a + b = s + e exactly.
#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let e = (a - (s - bb)) + (b - bb);
    (s, e)
}

/// Error-free sum assuming |a| ≥ |b|.
#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let e = b - (s - a);
    (s, e)
}

/// Dekker split of a into high and low 26-bit halves.
#[inline]
fn split(a: f64) -> (f64, f64) {
    const SPLITTER: f64 = 134217729.0; // 2^27 + 1
    let t = SPLITTER * a;
    let hi = t - (t - a);
    (hi, a - hi)
}

/// Error-free product: returns (p, e) with p = fl(a*b) and a*b = p + e exactly.
#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let (ahi, alo) = split(a);
    let (bhi, blo) = split(b);
    let e = ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo;
    (p, e)
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };

    #[inline]
    pub fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    #[inline]
    pub fn new(hi: f64, lo: f64) -> Dd {
        let (s, e) = quick_two_sum(hi, lo);
        Dd { hi: s, lo: e }
    }

    #[inline]
    pub fn add(self, other: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, other.hi);
        let e = e + self.lo + other.lo;
        let (hi, lo) = quick_two_sum(s, e);
        Dd { hi, lo }
    }

    #[inline]
    pub fn add_f64(self, x: f64) -> Dd {
        let (s, e) = two_sum(self.hi, x);
        let e = e + self.lo;
        let (hi, lo) = quick_two_sum(s, e);
        Dd { hi, lo }
    }

    #[inline]
    pub fn sub(self, other: Dd) -> Dd {
        self.add(Dd { hi: -other.hi, lo: -other.lo })
    }

    #[inline]
    pub fn mul(self, other: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, other.hi);
        let e = e + self.hi * other.lo + self.lo * other.hi;
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }

    #[inline]
    pub fn mul_f64(self, x: f64) -> Dd {
        let (p, e) = two_prod(self.hi, x);
        let e = e + self.lo * x;
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }

    /// Square root of a nonnegative f64 with one Newton refinement in
    /// double-double, accurate to ~1e-31 relative.
    pub fn sqrt_f64(x: f64) -> Dd {
        if x == 0.0 {
            return Dd::ZERO;
        }
        let y = x.sqrt();
        let (p, e) = two_prod(y, y);
        // residual x - y² computed exactly, then one correction step
        let r = Dd::from_f64(x).sub(Dd { hi: p, lo: e });
        let corr = r.hi / (2.0 * y);
        Dd::new(y, corr)
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn abs(self) -> Dd {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            Dd { hi: -self.hi, lo: -self.lo }
        } else {
            self
        }
    }

    #[inline]
    pub fn lt(self, other: Dd) -> bool {
        self.hi < other.hi || (self.hi == other.hi && self.lo < other.lo)
    }

    #[inline]
    pub fn le(self, other: Dd) -> bool {
        self.hi < other.hi || (self.hi == other.hi && self.lo <= other.lo)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_is_consistent() {
        for n in [2u64, 3, 5, 7, 12345, 999983] {
            let s = Dd::sqrt_f64(n as f64);
            let sq = s.mul(s);
            let err = (sq.hi - n as f64).abs() + sq.lo.abs();
            assert!(err < 1e-25 * n as f64, "n = {n}, err = {err:e}");
        }
    }

    #[test]
    fn add_tracks_small_residuals() {
        let a = Dd::from_f64(1.0);
        let tiny = Dd::from_f64(1e-25);
        let s = a.add(tiny).sub(a);
        assert!((s.to_f64() - 1e-25).abs() < 1e-38);
    }

    #[test]
    fn exact_sqrt_identity_detected() {
        // √8 + √18 = √50 exactly; the dd residual must be far below 1e-25
        let lhs = Dd::sqrt_f64(8.0).add(Dd::sqrt_f64(18.0));
        let rhs = Dd::sqrt_f64(50.0);
        let resid = lhs.sub(rhs).abs();
        assert!(resid.to_f64() < 1e-27, "residual {:e}", resid.to_f64());
    }
}

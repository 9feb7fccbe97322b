//! Shared high-precision constants (≥ 20 significant digits in the literals;
//! rounded to the nearest f64 at compile time).

/// Euler's constant γ.
pub const EULER_GAMMA: f64 = 0.57721566490153286060651209008240243104;

/// 2γ − 1, the constant in the divisor-sum main term x(log x + 2γ − 1).
pub const TWO_GAMMA_MINUS_ONE: f64 = 0.15443132980306572121302418016480486208;

/// log(2π).
pub const LOG_TWO_PI: f64 = 1.83787706640934548356065947281123527972;

/// 2γ − 1 − log(2π), the constant coefficient of the linear main-term
/// polynomial for the second moment.
pub const P1_CONSTANT: f64 = -1.68344573660627976234763529264643041764;

/// 1/(2π²), the leading coefficient of the quartic main-term polynomial
/// for the fourth moment.
pub const INV_TWO_PI_SQUARED: f64 = 0.05066059182116888572193882224997121674;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constants_are_consistent() {
        let two_pi = 2.0 * std::f64::consts::PI;
        assert!((LOG_TWO_PI - two_pi.ln()).abs() < 1e-15);
        assert!((TWO_GAMMA_MINUS_ONE - (2.0 * EULER_GAMMA - 1.0)).abs() < 1e-15);
        assert!((P1_CONSTANT - (2.0 * EULER_GAMMA - 1.0 - LOG_TWO_PI)).abs() < 1e-15);
        assert!((INV_TWO_PI_SQUARED - 1.0 / (2.0 * std::f64::consts::PI.powi(2))).abs() < 1e-17);
    }
}

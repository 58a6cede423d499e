//! Adaptive Dormand–Prince 5(4) integration with dense output.
//!
//! One integrator serves both the scalar comparison ODEs and the
//! geodesic/Jacobi systems. Dense evaluation interpolates stored
//! (value, derivative) pairs with cubic Hermite polynomials, so the
//! interpolation error is governed by the maximum step size.

use crate::error::{Error, Result};
use nalgebra::DVector;

#[derive(Debug, Clone)]
pub struct OdeOptions {
    pub rtol: f64,
    pub atol: f64,
    pub h_max: f64,
    pub h_init: f64,
    pub max_steps: usize,
}

impl Default for OdeOptions {
    fn default() -> Self {
        OdeOptions {
            rtol: 1e-10,
            atol: 1e-12,
            h_max: 0.02,
            h_init: 1e-3,
            max_steps: 2_000_000,
        }
    }
}

impl OdeOptions {
    /// Options tuned so the accumulated global error stays near `tol`.
    pub fn for_tolerance(tol: f64) -> Self {
        let t = tol.clamp(1e-14, 1e-2);
        OdeOptions {
            rtol: (t * 1e-2).max(1e-14),
            atol: (t * 1e-3).max(1e-15),
            // keep cubic Hermite interpolation error below the integrator error
            h_max: (384.0 * t).powf(0.25).clamp(1e-3, 0.05),
            h_init: 1e-3,
            max_steps: 2_000_000,
        }
    }
}

/// One accepted step with endpoint values and derivatives.
#[derive(Debug, Clone)]
struct Step {
    t0: f64,
    t1: f64,
    y0: DVector<f64>,
    y1: DVector<f64>,
    f0: DVector<f64>,
    f1: DVector<f64>,
}

/// Dense solution of an initial value problem on [t_start, t_end].
#[derive(Debug, Clone)]
pub struct OdeSolution {
    steps: Vec<Step>,
    pub t_start: f64,
    pub t_end: f64,
}

impl OdeSolution {
    pub fn grid(&self) -> Vec<f64> {
        let mut g: Vec<f64> = self.steps.iter().map(|s| s.t0).collect();
        g.push(self.t_end);
        g
    }

    fn locate(&self, t: f64) -> &Step {
        let idx = self
            .steps
            .partition_point(|s| s.t1 < t - 1e-15)
            .min(self.steps.len() - 1);
        &self.steps[idx]
    }

    /// Cubic Hermite evaluation at `t` (clamped to the solution interval).
    pub fn eval(&self, t: f64) -> DVector<f64> {
        let t = t.clamp(self.t_start, self.t_end);
        let s = self.locate(t);
        let h = s.t1 - s.t0;
        let x = (t - s.t0) / h;
        let (x2, x3) = (x * x, x * x * x);
        let h00 = 2.0 * x3 - 3.0 * x2 + 1.0;
        let h10 = x3 - 2.0 * x2 + x;
        let h01 = -2.0 * x3 + 3.0 * x2;
        let h11 = x3 - x2;
        &s.y0 * h00 + &s.f0 * (h10 * h) + &s.y1 * h01 + &s.f1 * (h11 * h)
    }

    /// Derivative of the Hermite interpolant at `t`.
    pub fn eval_deriv(&self, t: f64) -> DVector<f64> {
        let t = t.clamp(self.t_start, self.t_end);
        let s = self.locate(t);
        let h = s.t1 - s.t0;
        let x = (t - s.t0) / h;
        let x2 = x * x;
        let d00 = (6.0 * x2 - 6.0 * x) / h;
        let d10 = 3.0 * x2 - 4.0 * x + 1.0;
        let d01 = (-6.0 * x2 + 6.0 * x) / h;
        let d11 = 3.0 * x2 - 2.0 * x;
        &s.y0 * d00 + &s.f0 * d10 + &s.y1 * d01 + &s.f1 * d11
    }

    pub fn final_value(&self) -> &DVector<f64> {
        &self.steps.last().expect("nonempty solution").y1
    }
}

const A21: f64 = 1.0 / 5.0;
const A31: f64 = 3.0 / 40.0;
const A32: f64 = 9.0 / 40.0;
const A41: f64 = 44.0 / 45.0;
const A42: f64 = -56.0 / 15.0;
const A43: f64 = 32.0 / 9.0;
const A51: f64 = 19372.0 / 6561.0;
const A52: f64 = -25360.0 / 2187.0;
const A53: f64 = 64448.0 / 6561.0;
const A54: f64 = -212.0 / 729.0;
const A61: f64 = 9017.0 / 3168.0;
const A62: f64 = -355.0 / 33.0;
const A63: f64 = 46732.0 / 5247.0;
const A64: f64 = 49.0 / 176.0;
const A65: f64 = -5103.0 / 18656.0;
const B1: f64 = 35.0 / 384.0;
const B3: f64 = 500.0 / 1113.0;
const B4: f64 = 125.0 / 192.0;
const B5: f64 = -2187.0 / 6784.0;
const B6: f64 = 11.0 / 84.0;
// embedded 4th-order weights
const E1: f64 = 5179.0 / 57600.0;
const E3: f64 = 7571.0 / 16695.0;
const E4: f64 = 393.0 / 640.0;
const E5: f64 = -92097.0 / 339200.0;
const E6: f64 = 187.0 / 2100.0;
const E7: f64 = 1.0 / 40.0;

/// Integrates y' = f(t, y) from `t_start` to `t_end` (t_end > t_start).
///
/// The right-hand side may fail (for instance when a geodesic leaves its
/// chart); the failure is propagated.
pub fn integrate<F>(mut f: F, t_start: f64, y0: DVector<f64>, t_end: f64, opts: &OdeOptions) -> Result<OdeSolution>
where
    F: FnMut(f64, &DVector<f64>) -> Result<DVector<f64>>,
{
    assert!(t_end > t_start, "integration interval must be nonempty");
    let mut t = t_start;
    let mut y = y0;
    let mut k1 = f(t, &y)?;
    let mut h = opts.h_init.min(opts.h_max).min(t_end - t_start);
    let mut steps: Vec<Step> = Vec::new();

    for _ in 0..opts.max_steps {
        if t >= t_end - 1e-14 * (1.0 + t_end.abs()) {
            return Ok(OdeSolution { steps, t_start, t_end: t });
        }
        if h < 1e-14 * (1.0 + t.abs()) {
            return Err(Error::StepUnderflow { t, h });
        }
        h = h.min(t_end - t);

        let k2 = f(t + h * 0.2, &(&y + &k1 * (A21 * h)))?;
        let k3 = f(t + h * 0.3, &(&y + &k1 * (A31 * h) + &k2 * (A32 * h)))?;
        let k4 = f(t + h * 0.8, &(&y + &k1 * (A41 * h) + &k2 * (A42 * h) + &k3 * (A43 * h)))?;
        let k5 = f(
            t + h * 8.0 / 9.0,
            &(&y + &k1 * (A51 * h) + &k2 * (A52 * h) + &k3 * (A53 * h) + &k4 * (A54 * h)),
        )?;
        let k6 = f(
            t + h,
            &(&y + &k1 * (A61 * h) + &k2 * (A62 * h) + &k3 * (A63 * h) + &k4 * (A64 * h) + &k5 * (A65 * h)),
        )?;
        let y_new = &y + (&k1 * B1 + &k3 * B3 + &k4 * B4 + &k5 * B5 + &k6 * B6) * h;
        let k7 = f(t + h, &y_new)?;
        let y_low = &y + (&k1 * E1 + &k3 * E3 + &k4 * E4 + &k5 * E5 + &k6 * E6 + &k7 * E7) * h;

        // weighted RMS error
        let mut err2 = 0.0;
        for i in 0..y.len() {
            let scale = opts.atol + opts.rtol * y[i].abs().max(y_new[i].abs());
            let e = (y_new[i] - y_low[i]) / scale;
            err2 += e * e;
        }
        let err = (err2 / y.len() as f64).sqrt();

        if err <= 1.0 {
            steps.push(Step {
                t0: t,
                t1: t + h,
                y0: y.clone(),
                y1: y_new.clone(),
                f0: k1.clone(),
                f1: k7.clone(),
            });
            t += h;
            y = y_new;
            k1 = k7; // FSAL
        }
        let factor = if err > 0.0 {
            (0.9 * err.powf(-0.2)).clamp(0.2, 5.0)
        } else {
            5.0
        };
        h = (h * factor).min(opts.h_max);
    }
    Err(Error::StepUnderflow { t, h })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integrates_harmonic_oscillator() {
        let opts = OdeOptions::for_tolerance(1e-11);
        let sol = integrate(
            |_t, y| Ok(DVector::from_vec(vec![y[1], -y[0]])),
            0.0,
            DVector::from_vec(vec![0.0, 1.0]),
            std::f64::consts::PI,
            &opts,
        )
        .unwrap();
        let y = sol.final_value();
        assert!((y[0] - 0.0).abs() < 1e-10, "sin(pi) = {}", y[0]);
        assert!((y[1] + 1.0).abs() < 1e-10, "cos(pi) = {}", y[1]);
        // dense output mid-interval
        let mid = sol.eval(std::f64::consts::FRAC_PI_2);
        assert!((mid[0] - 1.0).abs() < 1e-10);
        assert!((mid[1]).abs() < 1e-10);
        let d = sol.eval_deriv(1.0);
        assert!((d[0] - 1.0f64.cos()).abs() < 1e-8);
    }
}

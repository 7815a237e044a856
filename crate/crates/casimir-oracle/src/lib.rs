//! Slow, high-precision reference values for the fast `f64` library.
//!
//! Everything here is transcribed directly from the defining series and
//! finite sums for the modified Riccati-Bessel functions
//!
//! ```text
//! s_l(x) = sqrt(pi x / 2) I_{l+1/2}(x),    e_l(x) = sqrt(2 x / pi) K_{l+1/2}(x),
//! ```
//!
//! and from the eigenvalue ratios built out of them. No code is shared with
//! the production crate: this is the independent oracle the test suites
//! compare against.
//!
//! Precision bookkeeping: all series are truncated only once the next term
//! is below 2^-(p/2) of the running sum, with `p` the working precision in
//! bits, leaving results good to far more decimal digits than any `f64`
//! comparison needs.

use astro_float::{BigFloat, Consts, RoundingMode, Sign};

const RM: RoundingMode = RoundingMode::ToEven;

/// Arbitrary-precision evaluator. Construct once, reuse; the constants
/// cache makes repeated `exp`/`ln` calls cheap.
pub struct Oracle {
    p: usize,
    cc: Consts,
}

/// One Riccati-Bessel quadruple in sign / natural-log-magnitude form,
/// already rounded to `f64` for comparison against the fast path.
#[derive(Debug, Clone, Copy)]
pub struct LogQuad {
    pub s_ln: f64,
    pub e_ln: f64,
    pub s_prime_ln: f64,
    /// ln |e_l'|; the derivative itself is negative for all x > 0.
    pub e_prime_abs_ln: f64,
}

impl Oracle {
    pub fn new(precision_bits: usize) -> Self {
        Oracle {
            p: precision_bits,
            cc: Consts::new().expect("constants cache"),
        }
    }

    /// Default precision: 384 bits (~115 decimal digits).
    pub fn standard() -> Self {
        Self::new(384)
    }

    pub fn big(&self, x: f64) -> BigFloat {
        BigFloat::from_f64(x, self.p)
    }

    fn int(&self, n: i64) -> BigFloat {
        BigFloat::from_i64(n, self.p)
    }

    /// Round a BigFloat to the nearest f64 via its decimal rendering.
    pub fn to_f64(v: &BigFloat) -> f64 {
        format!("{}", v).parse::<f64>().expect("finite value")
    }

    pub fn ln_f64(&mut self, v: &BigFloat) -> f64 {
        Self::to_f64(&v.ln(self.p, RM, &mut self.cc))
    }

    /// s_l(x) from the ascending series
    /// s_l = x^{l+1}/(2l+1)!! * sum_j c_j, c_0 = 1,
    /// c_{j+1} = c_j * x^2 / (2 (j+1) (2l+3+2j)).
    pub fn s(&mut self, l: u32, x: f64) -> BigFloat {
        let (p, xb) = (self.p, self.big(x));
        let x2 = xb.mul(&xb, p, RM);
        let mut term = self.int(1);
        let mut sum = term.clone();
        let mut j: i64 = 0;
        loop {
            let denom = self.int(2 * (j + 1) * (2 * l as i64 + 3 + 2 * j));
            term = term.mul(&x2, p, RM).div(&denom, p, RM);
            sum = sum.add(&term, p, RM);
            j += 1;
            if term_is_negligible(&term, &sum, p) || j > 4_000_000 {
                break;
            }
        }
        // prefactor x^{l+1} / (2l+1)!!
        let mut pref = xb.powi(l as usize + 1, p, RM);
        for k in 1..=l as i64 {
            pref = pref.div(&self.int(2 * k + 1), p, RM);
        }
        pref.mul(&sum, p, RM)
    }

    /// e_l(x) = e^{-x} * sum_{k=0}^{l} (l+k)! / (k! (l-k)! (2x)^k), exact
    /// finite sum for half-integer order.
    pub fn e(&mut self, l: u32, x: f64) -> BigFloat {
        let p = self.p;
        let xb = self.big(x);
        let two_x = xb.mul(&self.int(2), p, RM);
        let mut term = self.int(1);
        let mut sum = term.clone();
        for k in 0..l as i64 {
            // ratio (l+k+1)(l-k) / ((k+1) 2x)
            let num = self.int((l as i64 + k + 1) * (l as i64 - k));
            let den = self.int(k + 1).mul(&two_x, p, RM);
            term = term.mul(&num, p, RM).div(&den, p, RM);
            sum = sum.add(&term, p, RM);
        }
        let neg_x = xb.neg();
        let exp = neg_x.exp(p, RM, &mut self.cc);
        exp.mul(&sum, p, RM)
    }

    /// s_l'(x) = s_{l-1}(x) - (l/x) s_l(x); s_0(x) = sinh x.
    pub fn s_prime(&mut self, l: u32, x: f64) -> BigFloat {
        let p = self.p;
        let lower = if l == 1 {
            self.big(x).sinh(p, RM, &mut self.cc)
        } else {
            self.s(l - 1, x)
        };
        let ratio = self.int(l as i64).div(&self.big(x), p, RM);
        lower.sub(&ratio.mul(&self.s(l, x), p, RM), p, RM)
    }

    /// e_l'(x) = -e_{l-1}(x) - (l/x) e_l(x); e_0(x) = e^{-x}.
    pub fn e_prime(&mut self, l: u32, x: f64) -> BigFloat {
        let p = self.p;
        let lower = if l == 1 {
            self.big(x).neg().exp(p, RM, &mut self.cc)
        } else {
            self.e(l - 1, x)
        };
        let ratio = self.int(l as i64).div(&self.big(x), p, RM);
        lower.add(&ratio.mul(&self.e(l, x), p, RM), p, RM).neg()
    }

    /// All four functions as f64 log-magnitudes.
    pub fn log_quad(&mut self, l: u32, x: f64) -> LogQuad {
        let s = self.s(l, x);
        let e = self.e(l, x);
        let sp = self.s_prime(l, x);
        let ep = self.e_prime(l, x).neg();
        LogQuad {
            s_ln: self.ln_f64(&s),
            e_ln: self.ln_f64(&e),
            s_prime_ln: self.ln_f64(&sp),
            e_prime_abs_ln: self.ln_f64(&ep),
        }
    }

    /// Wronskian s_l e_l' - s_l' e_l, which must equal -1 exactly.
    pub fn wronskian(&mut self, l: u32, x: f64) -> f64 {
        let p = self.p;
        let w = self
            .s(l, x)
            .mul(&self.e_prime(l, x), p, RM)
            .sub(&self.s_prime(l, x).mul(&self.e(l, x), p, RM), p, RM);
        Self::to_f64(&w)
    }

    /// TM eigenvalue f1 f2 / (f3 f4) with
    /// f1 = n s'(x) s(nx) - s(x) s'(nx)
    /// f2 = n e'(y) e(ny) - e(y) e'(ny)
    /// f3 = n e'(x) s(nx) - e(x) s'(nx)
    /// f4 = n e(ny) s'(y) - e'(ny) s(y)
    pub fn lambda_tm(&mut self, l: u32, x: f64, y: f64, n: f64) -> f64 {
        let p = self.p;
        let nb = self.big(n);
        let (s_x, sp_x) = (self.s(l, x), self.s_prime(l, x));
        let (s_nx, sp_nx) = (self.s(l, n * x), self.s_prime(l, n * x));
        let (e_x, ep_x) = (self.e(l, x), self.e_prime(l, x));
        let (e_y, ep_y) = (self.e(l, y), self.e_prime(l, y));
        let (s_y, sp_y) = (self.s(l, y), self.s_prime(l, y));
        let (e_ny, ep_ny) = (self.e(l, n * y), self.e_prime(l, n * y));

        let f1 = nb
            .mul(&sp_x, p, RM)
            .mul(&s_nx, p, RM)
            .sub(&s_x.mul(&sp_nx, p, RM), p, RM);
        let f2 = nb
            .mul(&ep_y, p, RM)
            .mul(&e_ny, p, RM)
            .sub(&e_y.mul(&ep_ny, p, RM), p, RM);
        let f3 = nb
            .mul(&ep_x, p, RM)
            .mul(&s_nx, p, RM)
            .sub(&e_x.mul(&sp_nx, p, RM), p, RM);
        let f4 = nb
            .mul(&e_ny, p, RM)
            .mul(&sp_y, p, RM)
            .sub(&ep_ny.mul(&s_y, p, RM), p, RM);

        let lam = f1.mul(&f2, p, RM).div(&f3.mul(&f4, p, RM), p, RM);
        Self::to_f64(&lam)
    }

    /// TE eigenvalue g1 g2 / (g3 g4); same structure with the n factors on
    /// the other functions.
    pub fn lambda_te(&mut self, l: u32, x: f64, y: f64, n: f64) -> f64 {
        let p = self.p;
        let nb = self.big(n);
        let (s_x, sp_x) = (self.s(l, x), self.s_prime(l, x));
        let (s_nx, sp_nx) = (self.s(l, n * x), self.s_prime(l, n * x));
        let (e_x, ep_x) = (self.e(l, x), self.e_prime(l, x));
        let (e_y, ep_y) = (self.e(l, y), self.e_prime(l, y));
        let (s_y, sp_y) = (self.s(l, y), self.s_prime(l, y));
        let (e_ny, ep_ny) = (self.e(l, n * y), self.e_prime(l, n * y));

        let g1 = sp_x
            .mul(&s_nx, p, RM)
            .sub(&nb.mul(&s_x, p, RM).mul(&sp_nx, p, RM), p, RM);
        let g2 = ep_y
            .mul(&e_ny, p, RM)
            .sub(&nb.mul(&e_y, p, RM).mul(&ep_ny, p, RM), p, RM);
        let g3 = ep_x
            .mul(&s_nx, p, RM)
            .sub(&nb.mul(&e_x, p, RM).mul(&sp_nx, p, RM), p, RM);
        let g4 = e_ny
            .mul(&sp_y, p, RM)
            .sub(&nb.mul(&ep_ny, p, RM).mul(&s_y, p, RM), p, RM);

        let lam = g1.mul(&g2, p, RM).div(&g3.mul(&g4, p, RM), p, RM);
        Self::to_f64(&lam)
    }

    /// Metal (n -> infinity) eigenvalues from the exact ratio forms:
    /// TM: s'(x) e'(y) / (e'(x) s'(y)),   TE: s(x) e(y) / (e(x) s(y)).
    pub fn lambda_metal(&mut self, l: u32, x: f64, y: f64, tm: bool) -> f64 {
        let p = self.p;
        let lam = if tm {
            self.s_prime(l, x)
                .mul(&self.e_prime(l, y), p, RM)
                .div(&self.e_prime(l, x).mul(&self.s_prime(l, y), p, RM), p, RM)
        } else {
            self.s(l, x)
                .mul(&self.e(l, y), p, RM)
                .div(&self.e(l, x).mul(&self.s(l, y), p, RM), p, RM)
        };
        Self::to_f64(&lam)
    }
}

/// True once `term` can no longer move `sum` at working precision.
fn term_is_negligible(term: &BigFloat, sum: &BigFloat, p: usize) -> bool {
    match (term.exponent(), sum.exponent()) {
        (Some(te), Some(se)) => (se as i64 - te as i64) > (p as i64) + 16,
        _ => term.sign() == Some(Sign::Pos) && term.is_zero(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_forms_order_one() {
        let mut o = Oracle::standard();
        // s_1(1) = cosh 1 - sinh 1 = e^{-1}, e_1(1) = 2 e^{-1}
        let s1 = Oracle::to_f64(&o.s(1, 1.0));
        let e1 = Oracle::to_f64(&o.e(1, 1.0));
        assert!((s1 - (-1.0f64).exp()).abs() < 1e-15);
        assert!((e1 - 2.0 * (-1.0f64).exp()).abs() < 1e-15);
    }

    #[test]
    fn wronskian_is_minus_one() {
        let mut o = Oracle::standard();
        for &(l, x) in &[(1u32, 0.3), (2, 1.0), (5, 7.5), (9, 20.0)] {
            let w = o.wronskian(l, x);
            assert!((w + 1.0).abs() < 1e-14, "W(l={l}, x={x}) = {w}");
        }
    }

    #[test]
    fn eigenvalues_vanish_for_vacuum() {
        let mut o = Oracle::standard();
        assert!(o.lambda_tm(1, 0.5, 1.0, 1.0).abs() < 1e-25);
        assert!(o.lambda_te(2, 1.0, 2.0, 1.0).abs() < 1e-25);
    }
}

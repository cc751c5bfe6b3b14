//! Scalar special functions: shifted factorials, Laguerre polynomials in both
//! notations, Gegenbauer and Jacobi polynomials, reduced Bessel functions, and
//! generating-function partial sums.
//!
//! Polynomial evaluation goes through the three-term recurrences, which stay
//! stable across the oscillatory region; the hypergeometric series forms live
//! in [`crate::hyp`] and serve as independent verification routes.

pub mod harmonics;

use statrs::function::gamma::ln_gamma;

use crate::{Error, Result};

/// Position or momentum vector (Bohr / inverse Bohr, Hartree atomic units).
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Vector3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Vector3 {
    pub fn new(x: f64, y: f64, z: f64) -> Self {
        Vector3 { x, y, z }
    }

    /// Vector of length `z` along the polar axis.
    pub fn zaxis(z: f64) -> Self {
        Vector3 { x: 0.0, y: 0.0, z }
    }

    pub fn norm(&self) -> f64 {
        (self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }
}

/// Principal, orbital, and magnetic quantum numbers.
///
/// `|m| <= l` always holds; `l <= n - 1` is a per-family constraint enforced
/// by the orbital models (B functions take any `l >= 0`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QuantumNumbers {
    pub n: u32,
    pub l: u32,
    pub m: i32,
}

impl QuantumNumbers {
    pub fn new(n: u32, l: u32, m: i32) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("principal quantum number n must be >= 1".into()));
        }
        if m.unsigned_abs() > l {
            return Err(Error::Domain(format!("|m| = {} exceeds l = {l}", m.abs())));
        }
        Ok(QuantumNumbers { n, l, m })
    }
}

/// n! as a double. Panics past the binary64 range.
pub fn factorial(k: u32) -> f64 {
    assert!(k <= 170, "factorial({k}) overflows binary64");
    let mut p = 1.0;
    for i in 2..=k {
        p *= i as f64;
    }
    p
}

pub(crate) fn ln_factorial(k: u32) -> f64 {
    ln_gamma(k as f64 + 1.0)
}

/// Shifted factorial (a)_k = a (a+1) ... (a+k-1); empty product for k = 0.
///
/// Falls back to log-space accumulation with sign tracking when the direct
/// product leaves the binary64 range.
pub fn pochhammer(a: f64, k: u32) -> f64 {
    let mut p = 1.0;
    for i in 0..k {
        p *= a + i as f64;
    }
    if p.is_finite() {
        return p;
    }
    let mut ln_mag = 0.0;
    let mut sign = 1.0;
    for i in 0..k {
        let f = a + i as f64;
        if f == 0.0 {
            return 0.0;
        }
        if f < 0.0 {
            sign = -sign;
        }
        ln_mag += f.abs().ln();
    }
    sign * ln_mag.exp()
}

/// k!! with the empty-product conventions (-1)!! = 0!! = 1.
pub fn double_factorial(k: i64) -> f64 {
    assert!(k >= -1, "double_factorial({k}) undefined below -1");
    let mut p = 1.0;
    let mut i = k;
    while i > 1 {
        p *= i as f64;
        i -= 2;
    }
    p
}

/// Gamma function for real arguments, including negative non-integers
/// (reflection formula). Used by the split Slater transform whose prefactors
/// carry gamma functions of negative half-integers.
pub(crate) fn gamma_signed(x: f64) -> f64 {
    if x > 0.0 {
        ln_gamma(x).exp()
    } else {
        // Gamma(x) = pi / (sin(pi x) Gamma(1 - x)); poles give +-inf, and
        // callers divide by the result, so a pole maps to a vanishing branch.
        std::f64::consts::PI / ((std::f64::consts::PI * x).sin() * ln_gamma(1.0 - x).exp())
    }
}

/// Generalized Laguerre polynomial L_n^(alpha)(z) by the three-term
/// recurrence.
pub fn laguerre(n: u32, alpha: f64, z: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = alpha + 1.0 - z;
    for k in 1..n {
        let kf = k as f64;
        let next = ((2.0 * kf + alpha + 1.0 - z) * cur - (kf + alpha) * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// Associated Laguerre function in the Bethe-Salpeter convention:
/// [L_q^p(z)]_BS = (-1)^p q! L_{q-p}^(p)(z).
pub fn laguerre_bs(subscript: u32, superscript: u32, z: f64) -> f64 {
    assert!(
        superscript <= subscript,
        "associated Laguerre function needs superscript <= subscript"
    );
    let sign = if superscript % 2 == 0 { 1.0 } else { -1.0 };
    sign * factorial(subscript) * laguerre(subscript - superscript, superscript as f64, z)
}

/// Coefficients of the Laguerre multiplication theorem: pairs
/// `(coefficient, degree)` with
/// `sum_m coeff_m L_degree^(alpha)(x) = L_n^(alpha)(scale * x)`.
pub fn laguerre_multiplication(n: u32, alpha: f64, scale: f64, _x: f64) -> Vec<(f64, u32)> {
    assert!(scale != 0.0, "laguerre multiplication theorem needs a nonzero scale");
    let mut out = Vec::with_capacity(n as usize + 1);
    let mut binom = 1.0; // binom(n + alpha, m), m = 0
    for m in 0..=n {
        if m > 0 {
            binom *= (n as f64 + alpha - m as f64 + 1.0) / m as f64;
        }
        let coeff = binom * (1.0 - scale).powi(m as i32) * scale.powi((n - m) as i32);
        out.push((coeff, n - m));
    }
    out
}

/// Gegenbauer polynomial C_n^lambda(x) by the three-term recurrence.
pub fn gegenbauer(n: u32, lambda: f64, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = 2.0 * lambda * x;
    for k in 2..=n {
        let kf = k as f64;
        let next = (2.0 * x * (kf + lambda - 1.0) * cur - (kf + 2.0 * lambda - 2.0) * prev) / kf;
        prev = cur;
        cur = next;
    }
    cur
}

/// Gegenbauer polynomial through its terminating 2F1 series; the independent
/// route against the recurrence. Negative x is reflected through
/// C_n(-x) = (-1)^n C_n(x), keeping the series argument at most 1/2 so the
/// alternating sum stays benign.
pub fn gegenbauer_via_2f1(n: u32, lambda: f64, x: f64) -> f64 {
    if x < 0.0 {
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        return sign * gegenbauer_via_2f1(n, lambda, -x);
    }
    let term = crate::hyp::Hyp2F1Term::bare(
        -(n as f64),
        n as f64 + 2.0 * lambda,
        lambda + 0.5,
        num_complex::Complex64::new((1.0 - x) / 2.0, 0.0),
    );
    pochhammer(2.0 * lambda, n) / factorial(n) * crate::hyp::hyp2f1(&term).expect("terminating").re
}

/// Jacobi polynomial P_n^(a,b)(x) by the three-term recurrence.
pub fn jacobi(n: u32, a: f64, b: f64, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = (a + 1.0) + (a + b + 2.0) * (x - 1.0) / 2.0;
    for k in 2..=n {
        let kf = k as f64;
        let c1 = 2.0 * kf * (kf + a + b) * (2.0 * kf + a + b - 2.0);
        let c2 = (2.0 * kf + a + b - 1.0)
            * ((2.0 * kf + a + b) * (2.0 * kf + a + b - 2.0) * x + a * a - b * b);
        let c3 = 2.0 * (kf + a - 1.0) * (kf + b - 1.0) * (2.0 * kf + a + b);
        let next = (c2 * cur - c3 * prev) / c1;
        prev = cur;
        cur = next;
    }
    cur
}

/// Jacobi polynomial through its terminating 2F1 series. Negative x is
/// reflected through P_n^(a,b)(-x) = (-1)^n P_n^(b,a)(x), like the Gegenbauer
/// route.
pub fn jacobi_via_2f1(n: u32, a: f64, b: f64, x: f64) -> f64 {
    if x < 0.0 {
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        return sign * jacobi_via_2f1(n, b, a, -x);
    }
    let term = crate::hyp::Hyp2F1Term::bare(
        -(n as f64),
        a + b + n as f64 + 1.0,
        a + 1.0,
        num_complex::Complex64::new((1.0 - x) / 2.0, 0.0),
    );
    // binom(n + a, n) = (a+1)_n / n!
    pochhammer(a + 1.0, n) / factorial(n) * crate::hyp::hyp2f1(&term).expect("terminating").re
}

/// Reduced Bessel function of half-integral order,
/// k_{n+1/2}(z) = e^{-z} sum_{v=0}^{n} c_v z^v with all-positive coefficients
/// c_v = 2^{v-n} (2n - v)! / ((n - v)! v!).
pub fn reduced_bessel(n: u32, z: f64) -> f64 {
    assert!(z >= 0.0 && z.is_finite(), "reduced_bessel needs z >= 0");
    let nf = n as f64;
    if z > 300.0 {
        // exp-shifted accumulation; the plain polynomial overflows first
        let mut ln_c = ln_factorial(2 * n) - ln_factorial(n) - nf * std::f64::consts::LN_2;
        let lnz = z.ln();
        let mut ln_terms = Vec::with_capacity(n as usize + 1);
        ln_terms.push(ln_c);
        for v in 0..n {
            let vf = v as f64;
            ln_c += (2.0 * (nf - vf) / ((2.0 * nf - vf) * (vf + 1.0))).ln() + lnz;
            ln_terms.push(ln_c);
        }
        let m = ln_terms.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let s: f64 = ln_terms.iter().map(|&t| (t - m).exp()).sum();
        return (m - z + s.ln()).exp();
    }
    // c_0 = (2n-1)!!, then c_{v+1}/c_v = 2 (n - v) / ((2n - v)(v + 1))
    let mut term = double_factorial(2 * n as i64 - 1);
    let mut sum = term;
    for v in 0..n {
        let vf = v as f64;
        term *= 2.0 * (nf - vf) * z / ((2.0 * nf - vf) * (vf + 1.0));
        sum += term;
    }
    sum * (-z).exp()
}

/// Which generating function a partial sum targets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneratingKind {
    Laguerre,
    Gegenbauer,
    GegenbauerModified,
}

/// N-term partial sum of a generating function next to its closed form.
///
/// `param` is alpha for the Laguerre kind and lambda for the Gegenbauer kinds.
pub fn generating_partial(
    kind: GeneratingKind,
    param: f64,
    x: f64,
    t: f64,
    terms: u32,
) -> (f64, f64) {
    assert!(t.abs() < 1.0, "generating function diverges for |t| >= 1");
    let closed = match kind {
        GeneratingKind::Laguerre => (x * t / (t - 1.0)).exp() / (1.0 - t).powf(param + 1.0),
        GeneratingKind::Gegenbauer => (1.0 - 2.0 * x * t + t * t).powf(-param),
        GeneratingKind::GegenbauerModified => {
            (1.0 - t * t) / (1.0 - 2.0 * x * t + t * t).powf(param + 1.0)
        }
    };
    let mut partial = 0.0;
    let mut tn = 1.0;
    // running three-term recurrence values
    let mut prev = 0.0;
    let mut cur = 1.0;
    for n in 0..terms {
        let coeff = match kind {
            GeneratingKind::Laguerre | GeneratingKind::Gegenbauer => cur,
            GeneratingKind::GegenbauerModified => (param + n as f64) / param * cur,
        };
        partial += coeff * tn;
        tn *= t;
        let next = match kind {
            GeneratingKind::Laguerre => {
                let kf = n as f64;
                if n == 0 {
                    param + 1.0 - x
                } else {
                    ((2.0 * kf + param + 1.0 - x) * cur - (kf + param) * prev) / (kf + 1.0)
                }
            }
            GeneratingKind::Gegenbauer | GeneratingKind::GegenbauerModified => {
                let kf = n as f64 + 1.0;
                if n == 0 {
                    2.0 * param * x
                } else {
                    (2.0 * x * (kf + param - 1.0) * cur - (kf + 2.0 * param - 2.0) * prev) / kf
                }
            }
        };
        prev = cur;
        cur = next;
    }
    (partial, closed)
}

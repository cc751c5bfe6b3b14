//! Closed-form momentum-space transforms under the forward kernel
//! (2 pi)^{-3/2} integral e^{-i p.r} f(r) d^3r: the B-function transform, the
//! Slater-type representations with domain-aware selection, the per-family
//! closed forms, and the linearity route through the finite expansions.

use num_complex::Complex64;

use crate::hyp::{eval_2f1_continued, hyp2f1, hyp3f2, Hyp2F1Term};
use crate::orbitals::{expand_in_bfunctions, expand_in_slater, BasisKind, Family, OrbitalModel};
use crate::specfun::harmonics::solid_harmonic;
use crate::specfun::{double_factorial, factorial, gamma_signed, gegenbauer, jacobi, pochhammer, Vector3};
use crate::{Error, Result};
use statrs::function::gamma::ln_gamma;

const SQRT_2PI: f64 = 2.5066282746310002;

/// Sign choice of the complex-argument representations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn as_f64(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }
}

/// One closed-form momentum-space route.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FtRepresentation {
    /// Non-terminating real-argument 2F1; converges only for p < alpha.
    Stf2F1Real,
    /// Non-terminating complex-argument 2F1; direct summation needs
    /// p < alpha/sqrt(3), failure is signalled otherwise.
    Stf2F1Complex(Sign),
    /// Euler transform of the real route; terminating, valid for all p.
    StfEulerReal,
    /// Euler transform of the complex route; terminating, valid for all p.
    StfEulerComplex(Sign),
    /// Two-branch split with explicit parity selection; terminating.
    StfSplit,
    /// Quadratic transformation, real argument; terminating.
    StfQt17,
    /// Quadratic transformation recovering the complex route (identical to
    /// `Stf2F1Complex`).
    StfQt18(Sign),
    /// Quadratic transformation, real argument in (-1, 0]; convergent
    /// non-terminating.
    StfQt19,
    /// Euler transform of the qt18 route (identical to `StfEulerComplex`).
    StfQt18Euler(Sign),
    /// Euler transform of the qt19 route; terminating.
    StfQt19Euler,
    /// Gegenbauer polynomial form; terminating, the production default.
    StfGegenbauer,
    /// B function: rational times solid harmonic.
    BFunClosed,
    /// Hydrogen eigenfunction, Gegenbauer form.
    HydGegenbauer,
    /// Normalized Sturmian, Gegenbauer form.
    SturmGegenbauer,
    /// Normalized Sturmian assembled from the unnormalized transform.
    SturmUnnormalized,
    /// Normalized Sturmian, terminating 2F1 form.
    Sturm2F1,
    /// Lambda function, terminating 2F1 form.
    Lambda2F1,
    /// Lambda function, Jacobi polynomial form.
    LambdaJacobi,
    /// Guseinov function, terminating 3F2 form.
    Guseinov3F2,
}

impl FtRepresentation {
    /// Every Slater-type route, in catalog order.
    pub fn all_slater() -> Vec<FtRepresentation> {
        use FtRepresentation::*;
        vec![
            Stf2F1Real,
            Stf2F1Complex(Sign::Plus),
            Stf2F1Complex(Sign::Minus),
            StfEulerReal,
            StfEulerComplex(Sign::Plus),
            StfEulerComplex(Sign::Minus),
            StfSplit,
            StfQt17,
            StfQt18(Sign::Plus),
            StfQt18(Sign::Minus),
            StfQt19,
            StfQt18Euler(Sign::Plus),
            StfQt18Euler(Sign::Minus),
            StfQt19Euler,
            StfGegenbauer,
        ]
    }

    /// The terminating Slater-type routes, valid for every p.
    pub fn terminating_slater() -> Vec<FtRepresentation> {
        use FtRepresentation::*;
        vec![
            StfEulerReal,
            StfEulerComplex(Sign::Plus),
            StfEulerComplex(Sign::Minus),
            StfSplit,
            StfQt17,
            StfQt18Euler(Sign::Plus),
            StfQt18Euler(Sign::Minus),
            StfQt19Euler,
            StfGegenbauer,
        ]
    }

    /// Default (terminating, globally valid) route per family.
    pub fn default_for(family: Family) -> FtRepresentation {
        match family {
            Family::Slater => FtRepresentation::StfGegenbauer,
            Family::Hydrogen => FtRepresentation::HydGegenbauer,
            Family::Sturmian => FtRepresentation::SturmGegenbauer,
            Family::Lambda => FtRepresentation::LambdaJacobi,
            Family::BFunction => FtRepresentation::BFunClosed,
            Family::Guseinov { .. } => FtRepresentation::Guseinov3F2,
            Family::GuseinovOriginal { .. } => FtRepresentation::Guseinov3F2,
        }
    }

    pub fn tag(&self) -> String {
        use FtRepresentation::*;
        let s = |sign: &Sign| match sign {
            Sign::Plus => "plus",
            Sign::Minus => "minus",
        };
        match self {
            Stf2F1Real => "stf-2f1-real".into(),
            Stf2F1Complex(sg) => format!("stf-2f1-complex-{}", s(sg)),
            StfEulerReal => "stf-euler-real".into(),
            StfEulerComplex(sg) => format!("stf-euler-complex-{}", s(sg)),
            StfSplit => "stf-split".into(),
            StfQt17 => "stf-qt17".into(),
            StfQt18(sg) => format!("stf-qt18-{}", s(sg)),
            StfQt19 => "stf-qt19".into(),
            StfQt18Euler(sg) => format!("stf-qt18-euler-{}", s(sg)),
            StfQt19Euler => "stf-qt19-euler".into(),
            StfGegenbauer => "stf-gegenbauer".into(),
            BFunClosed => "bfun-closed".into(),
            HydGegenbauer => "hyd-gegenbauer".into(),
            SturmGegenbauer => "sturm-gegenbauer".into(),
            SturmUnnormalized => "sturm-unnormalized".into(),
            Sturm2F1 => "sturm-2f1".into(),
            Lambda2F1 => "lambda-2f1".into(),
            LambdaJacobi => "lambda-jacobi".into(),
            Guseinov3F2 => "guseinov-3f2".into(),
        }
    }

    pub fn parse(tag: &str) -> Result<FtRepresentation> {
        use FtRepresentation::*;
        let rep = match tag {
            "stf-2f1-real" => Stf2F1Real,
            "stf-2f1-complex-plus" => Stf2F1Complex(Sign::Plus),
            "stf-2f1-complex-minus" => Stf2F1Complex(Sign::Minus),
            "stf-euler-real" => StfEulerReal,
            "stf-euler-complex-plus" => StfEulerComplex(Sign::Plus),
            "stf-euler-complex-minus" => StfEulerComplex(Sign::Minus),
            "stf-split" => StfSplit,
            "stf-qt17" => StfQt17,
            "stf-qt18-plus" => StfQt18(Sign::Plus),
            "stf-qt18-minus" => StfQt18(Sign::Minus),
            "stf-qt19" => StfQt19,
            "stf-qt18-euler-plus" => StfQt18Euler(Sign::Plus),
            "stf-qt18-euler-minus" => StfQt18Euler(Sign::Minus),
            "stf-qt19-euler" => StfQt19Euler,
            "stf-gegenbauer" => StfGegenbauer,
            "bfun-closed" => BFunClosed,
            "hyd-gegenbauer" => HydGegenbauer,
            "sturm-gegenbauer" => SturmGegenbauer,
            "sturm-unnormalized" => SturmUnnormalized,
            "sturm-2f1" => Sturm2F1,
            "lambda-2f1" => Lambda2F1,
            "lambda-jacobi" => LambdaJacobi,
            "guseinov-3f2" => Guseinov3F2,
            other => return Err(Error::Domain(format!("unknown representation tag '{other}'"))),
        };
        Ok(rep)
    }
}

impl std::fmt::Display for FtRepresentation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.tag())
    }
}

/// Transform of a B function: (2/pi)^{1/2} beta^{2n+l-1} / (beta^2+p^2)^{n+l+1}
/// times the solid harmonic of -i p.
pub fn ft_bfunction(n: u32, l: u32, m: i32, beta: f64, p: Vector3) -> Complex64 {
    assert!(n >= 1 && beta > 0.0);
    let pp = p.norm();
    let radial = (2.0 / std::f64::consts::PI).sqrt() * beta.powi(2 * n as i32 + l as i32 - 1)
        / (beta * beta + pp * pp).powi((n + l + 1) as i32);
    radial * solid_harmonic(l, m, p, true)
}

/// Shared Slater prefactor (n+l+1)! / ((2 pi)^{1/2} (1/2)_{l+1}) and the
/// angular factor of -i p / 2.
fn stf_common(n: u32, l: u32, m: i32, p: Vector3) -> (f64, Complex64) {
    let f = factorial(n + l + 1) / (SQRT_2PI * pochhammer(0.5, l + 1));
    let yhalf = solid_harmonic(l, m, p, true) / 2f64.powi(l as i32);
    (f, yhalf)
}

/// Transform of the Slater-type function chi_{n,l}^m(alpha, r) through the
/// chosen representation. Routes with a finite convergence domain refuse
/// outside it rather than summing a divergent series.
pub fn ft_slater(
    n: u32,
    l: u32,
    m: i32,
    alpha: f64,
    p: Vector3,
    rep: FtRepresentation,
) -> Result<Complex64> {
    if n < l + 1 {
        return Err(Error::Domain(format!("slater transform needs n >= l + 1, got n={n}, l={l}")));
    }
    if n + l + 1 > 170 {
        return Err(Error::Domain("quantum numbers too large for binary64 prefactors".into()));
    }
    if !(alpha > 0.0) {
        return Err(Error::Domain(format!("slater exponent must be positive, got {alpha}")));
    }
    let pp = p.norm();
    let (f, yhalf) = stf_common(n, l, m, p);
    let (nf, lf) = (n as f64, l as f64);
    let s1 = (alpha * alpha + pp * pp).sqrt();
    let one = Complex64::new(1.0, 0.0);

    let radial: Complex64 = match rep {
        FtRepresentation::Stf2F1Real => {
            if pp >= alpha {
                return Err(Error::Domain(format!(
                    "{} converges only for p < alpha (p = {pp}, alpha = {alpha})",
                    rep.tag()
                )));
            }
            let t = Hyp2F1Term::bare(
                (nf + lf + 2.0) / 2.0,
                (nf + lf + 3.0) / 2.0,
                lf + 1.5,
                Complex64::new(-(pp * pp) / (alpha * alpha), 0.0),
            );
            hyp2f1(&t)? / alpha.powi(l as i32 + 3)
        }
        FtRepresentation::Stf2F1Complex(sg) | FtRepresentation::StfQt18(sg) => {
            let denom = Complex64::new(alpha, sg.as_f64() * pp);
            let z = Complex64::new(0.0, sg.as_f64() * 2.0 * pp) / denom;
            let t = Hyp2F1Term::bare(nf + lf + 2.0, lf + 1.0, 2.0 * lf + 2.0, z);
            let series = hyp2f1(&t).map_err(|e| {
                Error::Domain(format!("{}: {e} (needs p < alpha/sqrt(3))", rep.tag()))
            })?;
            alpha.powi(n as i32 - 1) * series / denom.powu(n + l + 2)
        }
        FtRepresentation::StfEulerReal => {
            let t = Hyp2F1Term::bare(
                (lf - nf) / 2.0,
                (lf - nf + 1.0) / 2.0,
                lf + 1.5,
                Complex64::new(-(pp * pp) / (alpha * alpha), 0.0),
            );
            alpha.powi(2 * n as i32 - l as i32 - 1)
                / (alpha * alpha + pp * pp).powi(n as i32 + 1)
                * hyp2f1(&t)?
        }
        FtRepresentation::StfEulerComplex(sg) | FtRepresentation::StfQt18Euler(sg) => {
            let dplus = Complex64::new(alpha, sg.as_f64() * pp);
            let dminus = Complex64::new(alpha, -sg.as_f64() * pp);
            let z = Complex64::new(0.0, sg.as_f64() * 2.0 * pp) / dplus;
            let t = Hyp2F1Term::bare(lf - nf, lf + 1.0, 2.0 * lf + 2.0, z);
            alpha.powi(n as i32 - 1) * hyp2f1(&t)? / (dplus.powu(l + 1) * dminus.powu(n + 1))
        }
        FtRepresentation::StfSplit => {
            // parity of n - l picks the surviving branch; the other carries a
            // gamma pole in its prefactor
            let w = Complex64::new(alpha * alpha / (alpha * alpha + pp * pp), 0.0);
            // restores the (pi/2)^{1/2} (n+l+1)! prefactor relative to f
            let half = std::f64::consts::PI * pochhammer(0.5, l + 1);
            if (n - l) % 2 == 0 {
                let t = Hyp2F1Term::bare((nf + lf + 2.0) / 2.0, (lf - nf) / 2.0, 0.5, w);
                let pref = alpha.powi(n as i32 - 1)
                    * (alpha * alpha + pp * pp).powf(-(nf + lf + 2.0) / 2.0)
                    / (gamma_signed((nf + lf + 3.0) / 2.0) * gamma_signed((lf - nf + 1.0) / 2.0));
                half * pref * hyp2f1(&t)?
            } else {
                let t = Hyp2F1Term::bare((nf + lf + 3.0) / 2.0, (lf - nf + 1.0) / 2.0, 1.5, w);
                let pref = 2.0 * alpha.powi(n as i32)
                    * (alpha * alpha + pp * pp).powf(-(nf + lf + 3.0) / 2.0)
                    / (gamma_signed((nf + lf + 2.0) / 2.0) * gamma_signed((lf - nf) / 2.0));
                -half * pref * hyp2f1(&t)?
            }
        }
        FtRepresentation::StfQt17 => {
            let t = Hyp2F1Term::bare(
                nf + lf + 2.0,
                lf - nf,
                lf + 1.5,
                Complex64::new((s1 - alpha) / (2.0 * s1), 0.0),
            );
            alpha.powi(n as i32 - 1) / s1.powi((n + l + 2) as i32) * hyp2f1(&t)?
        }
        FtRepresentation::StfQt19 => {
            let t = Hyp2F1Term::bare(
                nf + lf + 2.0,
                nf + 1.5,
                lf + 1.5,
                Complex64::new((alpha - s1) / (alpha + s1), 0.0),
            );
            2f64.powi((n + l + 2) as i32) * alpha.powi(n as i32 - 1)
                / (alpha + s1).powi((n + l + 2) as i32)
                * hyp2f1(&t)?
        }
        FtRepresentation::StfQt19Euler => {
            let t = Hyp2F1Term::bare(
                lf - nf,
                -nf - 0.5,
                lf + 1.5,
                Complex64::new((alpha - s1) / (alpha + s1), 0.0),
            );
            alpha.powi(n as i32 - 1) * 2f64.powi(l as i32 - n as i32)
                * (alpha + s1).powi((n - l) as i32)
                / (alpha * alpha + pp * pp).powi(n as i32 + 1)
                * hyp2f1(&t)?
        }
        FtRepresentation::StfGegenbauer => {
            let c = gegenbauer(n - l, lf + 1.0, alpha / s1);
            let scale = factorial(n - l) / pochhammer(2.0 * lf + 2.0, n - l);
            one * scale * alpha.powi(n as i32 - 1)
                / (alpha * alpha + pp * pp).powf((nf + lf) / 2.0 + 1.0)
                * c
        }
        other => {
            return Err(Error::Domain(format!(
                "{} is not a slater-type representation",
                other.tag()
            )))
        }
    };
    Ok(f * radial * yhalf)
}

/// Hankel-type integral variants.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HankelVariant {
    /// int_0^inf e^{-a y} J_nu(b y) y^{mu - 1} dy via the real-argument 2F1.
    Real2F1,
    /// The same integral via the complex-argument 2F1, upper signs.
    Complex2F1Plus,
    /// Lower signs.
    Complex2F1Minus,
    /// int_0^inf K_mu(a t) J_nu(b t) t^{mu + nu + 1} dt, closed rational form.
    BesselK,
}

/// Closed form of the exponential/Bessel Hankel-type integrals. Out-of-disc
/// hypergeometric arguments are routed through the transformation calculus;
/// the integral itself is fine wherever the printed constraints hold.
pub fn hankel_exp_bessel(
    mu: f64,
    nu: f64,
    a: f64,
    b: f64,
    variant: HankelVariant,
) -> Result<Complex64> {
    if !(a > 0.0 && b >= 0.0 && a.is_finite() && b.is_finite()) {
        return Err(Error::Domain(format!("hankel integral needs a > 0, b >= 0 (a={a}, b={b})")));
    }
    match variant {
        HankelVariant::Real2F1 | HankelVariant::Complex2F1Plus | HankelVariant::Complex2F1Minus => {
            if mu + nu <= 0.0 {
                return Err(Error::Domain(format!(
                    "hankel integral needs mu + nu > 0, got {mu} + {nu}"
                )));
            }
            if b == 0.0 {
                // J_nu(0) kills the integrand for nu > 0 and blows up below 0
                if nu > 0.0 {
                    return Ok(Complex64::new(0.0, 0.0));
                }
                if nu < 0.0 {
                    return Err(Error::Domain(format!(
                        "hankel integral diverges at b = 0 for nu = {nu} < 0"
                    )));
                }
                return Ok(Complex64::new(
                    (ln_gamma(mu) - mu * a.ln()).exp(),
                    0.0,
                ));
            }
            // mu + nu > 0 keeps the numerator argument positive; the
            // denominator may sit at a negative non-integer
            let gamma_ratio = ln_gamma(mu + nu).exp() / gamma_signed(nu + 1.0);
            match variant {
                HankelVariant::Real2F1 => {
                    let pref = (b / 2.0).powf(nu) * gamma_ratio / a.powf(mu + nu);
                    let t = Hyp2F1Term::bare(
                        (mu + nu) / 2.0,
                        (mu + nu + 1.0) / 2.0,
                        nu + 1.0,
                        Complex64::new(-(b * b) / (a * a), 0.0),
                    );
                    Ok(pref * eval_2f1_continued(&t)?)
                }
                _ => {
                    let sg = if variant == HankelVariant::Complex2F1Plus { 1.0 } else { -1.0 };
                    let denom = Complex64::new(a, sg * b);
                    let z = Complex64::new(0.0, sg * 2.0 * b) / denom;
                    let pref = (b / 2.0).powf(nu) * gamma_ratio / denom.powf(mu + nu);
                    // ordered so that c = 2b for the quadratic transformation
                    let t = Hyp2F1Term::bare(mu + nu, nu + 0.5, 2.0 * nu + 1.0, z);
                    Ok(pref * eval_2f1_continued(&t)?)
                }
            }
        }
        HankelVariant::BesselK => {
            if mu + nu <= mu.abs() {
                return Err(Error::Domain(format!(
                    "K-integral needs mu + nu > |mu|, got mu={mu}, nu={nu}"
                )));
            }
            let v = (ln_gamma(mu + nu + 1.0) + (mu + nu) * std::f64::consts::LN_2).exp()
                * a.powf(mu)
                * b.powf(nu)
                / (a * a + b * b).powf(mu + nu + 1.0);
            Ok(Complex64::new(v, 0.0))
        }
    }
}

/// ln (2l+1)!! and friends appear in several prefactors; tiny helper.
fn dfact(k: i64) -> f64 {
    double_factorial(k)
}

/// Per-family closed-form transform.
pub fn ft_closed_form(model: &OrbitalModel, p: Vector3, rep: FtRepresentation) -> Result<Complex64> {
    let qn = model.qn();
    let (n, l, m) = (qn.n, qn.l, qn.m);
    let (nf, lf) = (n as f64, l as f64);
    let e = model.exponent();
    let pp = p.norm();
    let y = solid_harmonic(l, m, p, true); // solid harmonic of -i p
    let pi = std::f64::consts::PI;

    match (model.family(), rep) {
        (Family::Slater, r) => ft_slater(n, l, m, e, p, r),
        (Family::BFunction, FtRepresentation::BFunClosed) => Ok(ft_bfunction(n, l, m, e, p)),
        (Family::Hydrogen, FtRepresentation::HydGegenbauer) => {
            let z = e;
            let q = n - l - 1;
            let den = nf * nf * pp * pp + z * z;
            let pref = 2f64.powi(l as i32)
                * factorial(l)
                * (2.0 * z * factorial(q) / (pi * factorial(n + l))).sqrt()
                * (2.0 * z * nf / den).powi(l as i32 + 2);
            let c = gegenbauer(q, lf + 1.0, (nf * nf * pp * pp - z * z) / den);
            Ok(pref * c * y)
        }
        (Family::Sturmian, FtRepresentation::SturmGegenbauer) => {
            let q = n - l - 1;
            let den = pp * pp + e * e;
            let pref = 2f64.powi(l as i32)
                * factorial(l)
                * (2.0 * e * nf * factorial(q) / (pi * factorial(n + l))).sqrt()
                * (2.0 * e / den).powi(l as i32 + 2);
            let c = gegenbauer(q, lf + 1.0, (pp * pp - e * e) / den);
            Ok(pref * c * y)
        }
        (Family::Sturmian, FtRepresentation::SturmUnnormalized) => {
            // unnormalized transform times the printed normalization factor
            let q = n - l - 1;
            let den = pp * pp + e * e;
            let unnorm = (2.0 / pi).sqrt()
                * 2f64.powi(2 * l as i32 + 1)
                * factorial(l)
                * e.powi(l as i32 + 1)
                * nf
                / den.powi(l as i32 + 2)
                * gegenbauer(q, lf + 1.0, (pp * pp - e * e) / den);
            let norm = (2.0 * e).powf(1.5) * (factorial(q) / (2.0 * nf * factorial(n + l))).sqrt();
            Ok(norm * unnorm * y)
        }
        (Family::Sturmian, FtRepresentation::Sturm2F1) => {
            let q = n - l - 1;
            let den = pp * pp + e * e;
            let pref = 1.0 / dfact(2 * l as i64 + 1)
                * (e / pi * 2.0 * nf * factorial(n + l) / factorial(q)).sqrt()
                * (2.0 * e / den).powi(l as i32 + 2);
            let t = Hyp2F1Term::bare(
                -(q as f64),
                nf + lf + 1.0,
                lf + 1.5,
                Complex64::new(e * e / den, 0.0),
            );
            Ok(pref * hyp2f1(&t)? * y)
        }
        (Family::Lambda, FtRepresentation::Lambda2F1) => {
            let q = n - l - 1;
            let den = pp * pp + e * e;
            let pref = (2.0 * nf + 1.0) / dfact(2 * l as i64 + 3)
                * (e * factorial(n + l + 1) / (pi * factorial(q))).sqrt()
                * (2.0 * e / den).powi(l as i32 + 2);
            let t = Hyp2F1Term::bare(
                -(q as f64),
                nf + lf + 2.0,
                lf + 2.5,
                Complex64::new(e * e / den, 0.0),
            );
            Ok(pref * hyp2f1(&t)? * y)
        }
        (Family::Lambda, FtRepresentation::LambdaJacobi) => {
            let q = n - l - 1;
            let den = pp * pp + e * e;
            let pref = 2.0 / pochhammer(0.5, n)
                * (e * factorial(n + l + 1) * factorial(q) / pi).sqrt()
                * (e / den).powi(l as i32 + 2);
            let pj = jacobi(q, lf + 1.5, lf + 0.5, (pp * pp - e * e) / den);
            Ok(pref * pj * y)
        }
        (Family::Guseinov { k }, FtRepresentation::Guseinov3F2) => {
            let q = n - l - 1;
            let den = pp * pp + e * e;
            let ln_root = 0.5
                * ((k + 1.0) * e.ln() + ln_gamma(nf + lf + k + 2.0)
                    - pi.ln()
                    - k * std::f64::consts::LN_2
                    - crate::specfun::ln_factorial(q));
            let pref = ln_root.exp() * (2.0 * nf + k + 1.0) * pi.sqrt() * factorial(l + 1)
                / (2f64.powi(l as i32 + 2)
                    * gamma_signed(lf + 2.0 + k / 2.0)
                    * gamma_signed(lf + (k + 5.0) / 2.0))
                * (2.0 * e / den).powi(l as i32 + 2);
            // second upper parameter carries the weight power: it is
            // (n + l + k + 2), matching the B-expansion coefficients; only
            // then do k = -1 and k = 0 collapse onto the Sturmian and Lambda
            // hypergeometric forms
            let f32v = hyp3f2(
                -(q as f64),
                nf + lf + k + 2.0,
                lf + 2.0,
                lf + 2.0 + k / 2.0,
                lf + (k + 5.0) / 2.0,
                e * e / den,
            )?;
            Ok(pref * f32v * y)
        }
        (fam, r) => Err(Error::Domain(format!(
            "representation {} does not apply to family {}",
            r.tag(),
            fam.name()
        ))),
    }
}

/// The expansion terms of the linearity route: coefficient times the basis
/// transform, one entry per basis function.
pub fn ft_expansion_terms(
    model: &OrbitalModel,
    basis: BasisKind,
    p: Vector3,
    slater_rep: FtRepresentation,
) -> Result<Vec<Complex64>> {
    let expansion = match basis {
        BasisKind::SlaterBasis => expand_in_slater(model)?,
        BasisKind::BFunctionBasis => expand_in_bfunctions(model)?,
    };
    let mut out = Vec::with_capacity(expansion.terms.len());
    for (coeff, term) in &expansion.terms {
        let qn = term.qn();
        let v = match basis {
            BasisKind::SlaterBasis => {
                ft_slater(qn.n, qn.l, qn.m, term.exponent(), p, slater_rep)?
            }
            BasisKind::BFunctionBasis => ft_bfunction(qn.n, qn.l, qn.m, term.exponent(), p),
        };
        out.push(coeff * v);
    }
    Ok(out)
}

/// Transform through the finite expansion: sum of coefficient times basis
/// transform. The B-function basis reproduces the closed forms; the
/// Slater basis degrades with n, which is the stability experiment's subject.
pub fn ft_via_expansion(
    model: &OrbitalModel,
    basis: BasisKind,
    p: Vector3,
    slater_rep: FtRepresentation,
) -> Result<Complex64> {
    Ok(ft_expansion_terms(model, basis, p, slater_rep)?.into_iter().sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn zp(p: f64) -> Vector3 {
        Vector3::zaxis(p)
    }

    #[test]
    fn bfunction_transform_values() {
        let v0 = ft_bfunction(1, 0, 0, 1.0, zp(0.0));
        assert_relative_eq!(v0.re, 0.2250791, max_relative = 1e-6);
        let v1 = ft_bfunction(1, 0, 0, 1.0, zp(1.0));
        assert_relative_eq!(v1.re, 0.0562698, max_relative = 1e-6);
        let v2 = ft_bfunction(3, 2, 1, 1.7, zp(0.0));
        assert_eq!(v2, Complex64::new(0.0, 0.0));
    }

    #[test]
    fn slater_gegenbauer_anchor() {
        let v = ft_slater(1, 0, 0, 1.0, zp(0.0), FtRepresentation::StfGegenbauer).unwrap();
        assert_relative_eq!(v.re, 0.4501582, max_relative = 1e-6);
    }

    #[test]
    fn slater_representations_cross_agree() {
        let (n, l, m, alpha) = (2, 1, 0, 1.3);
        let p = zp(0.7);
        let reference = ft_slater(n, l, m, alpha, p, FtRepresentation::StfGegenbauer).unwrap();
        for rep in FtRepresentation::all_slater() {
            match ft_slater(n, l, m, alpha, p, rep) {
                Ok(v) => {
                    assert!(
                        (v - reference).norm() <= 1e-11 * reference.norm(),
                        "{rep} gave {v}, want {reference}"
                    );
                }
                Err(e) => panic!("{rep} failed inside its domain: {e}"),
            }
        }
    }

    #[test]
    fn complex_routes_refuse_past_their_radius() {
        // p > alpha/sqrt(3) makes |z| >= 1 for the complex non-terminating form
        let err = ft_slater(2, 0, 0, 1.0, zp(0.9), FtRepresentation::Stf2F1Complex(Sign::Plus));
        assert!(err.is_err());
        let err = ft_slater(2, 0, 0, 1.0, zp(1.5), FtRepresentation::Stf2F1Real);
        assert!(err.is_err());
        // terminating routes keep working there
        for rep in FtRepresentation::terminating_slater() {
            assert!(ft_slater(2, 0, 0, 1.0, zp(1.5), rep).is_ok());
        }
    }

    #[test]
    fn euler_real_terminates_in_two_terms_for_n3_l1() {
        // (l - n)/2 = -1: the series has exactly two terms; check the value
        // against the Gegenbauer route at several p
        for &p in &[0.3, 1.0, 4.2] {
            let a = ft_slater(3, 1, 0, 0.9, zp(p), FtRepresentation::StfEulerReal).unwrap();
            let b = ft_slater(3, 1, 0, 0.9, zp(p), FtRepresentation::StfGegenbauer).unwrap();
            assert!((a - b).norm() <= 1e-12 * b.norm());
        }
    }

    #[test]
    fn plus_minus_variants_conjugate() {
        let (n, l, m, alpha) = (3, 1, 0, 2.0);
        let p = zp(0.5); // inside the sqrt(3) radius
        let plus = ft_slater(n, l, m, alpha, p, FtRepresentation::Stf2F1Complex(Sign::Plus)).unwrap();
        let minus = ft_slater(n, l, m, alpha, p, FtRepresentation::Stf2F1Complex(Sign::Minus)).unwrap();
        assert!((plus - minus).norm() <= 1e-12 * plus.norm());
    }

    #[test]
    fn hydrogen_ground_state_momentum_profile() {
        let w = OrbitalModel::hydrogen(1, 0, 0, 1.0).unwrap();
        let v0 = ft_closed_form(&w, zp(0.0), FtRepresentation::HydGegenbauer).unwrap();
        assert_relative_eq!(v0.re, 0.9003163, max_relative = 1e-6);
        let v1 = ft_closed_form(&w, zp(1.0), FtRepresentation::HydGegenbauer).unwrap();
        assert_relative_eq!(v1.re, 0.2250791, max_relative = 1e-6);
    }

    #[test]
    fn sturmian_forms_agree() {
        for (n, l) in [(1u32, 0u32), (3, 1), (5, 2)] {
            let s = OrbitalModel::sturmian(n, l, 0, 1.1).unwrap();
            for &p in &[0.0, 0.4, 1.3, 3.0] {
                let a = ft_closed_form(&s, zp(p), FtRepresentation::SturmGegenbauer).unwrap();
                let b = ft_closed_form(&s, zp(p), FtRepresentation::Sturm2F1).unwrap();
                let c = ft_closed_form(&s, zp(p), FtRepresentation::SturmUnnormalized).unwrap();
                assert!((a - b).norm() <= 1e-12 * a.norm().max(1e-300));
                assert!((a - c).norm() <= 1e-12 * a.norm().max(1e-300));
            }
        }
        let s = OrbitalModel::sturmian(1, 0, 0, 1.0).unwrap();
        let v = ft_closed_form(&s, zp(1.0), FtRepresentation::SturmGegenbauer).unwrap();
        assert_relative_eq!(v.re, 0.2250791, max_relative = 1e-6);
    }

    #[test]
    fn lambda_forms_agree() {
        for (n, l) in [(1u32, 0u32), (4, 2), (6, 3)] {
            let lam = OrbitalModel::lambda(n, l, 0, 0.9).unwrap();
            for &p in &[0.0, 0.5, 2.1] {
                let a = ft_closed_form(&lam, zp(p), FtRepresentation::Lambda2F1).unwrap();
                let b = ft_closed_form(&lam, zp(p), FtRepresentation::LambdaJacobi).unwrap();
                assert!((a - b).norm() <= 1e-12 * a.norm().max(1e-300));
            }
        }
    }

    #[test]
    fn guseinov_specializes_to_lambda_and_sturmian() {
        for (n, l) in [(2u32, 0u32), (4, 1), (5, 3)] {
            let beta = 1.2;
            for &p in &[0.0, 0.8, 2.5] {
                let g0 = OrbitalModel::guseinov(0.0, n, l, 0, beta).unwrap();
                let lam = OrbitalModel::lambda(n, l, 0, beta).unwrap();
                let a = ft_closed_form(&g0, zp(p), FtRepresentation::Guseinov3F2).unwrap();
                let b = ft_closed_form(&lam, zp(p), FtRepresentation::Lambda2F1).unwrap();
                assert!((a - b).norm() <= 1e-12 * a.norm().max(1e-300), "k=0 n={n} l={l} p={p}");

                let gm = OrbitalModel::guseinov(-1.0, n, l, 0, beta).unwrap();
                let st = OrbitalModel::sturmian(n, l, 0, beta).unwrap();
                let a = ft_closed_form(&gm, zp(p), FtRepresentation::Guseinov3F2).unwrap();
                let b = ft_closed_form(&st, zp(p), FtRepresentation::Sturm2F1).unwrap();
                let scale = (n as f64 / beta).sqrt();
                assert!(
                    (a - scale * b).norm() <= 1e-12 * a.norm().max(1e-300),
                    "k=-1 n={n} l={l} p={p}"
                );
            }
        }
    }

    #[test]
    fn expansion_route_matches_closed_form() {
        let w = OrbitalModel::hydrogen(3, 1, 0, 1.0).unwrap();
        let p = zp(0.6); // clear of the 2s momentum node at p = Z/n
        let closed = ft_closed_form(&w, p, FtRepresentation::HydGegenbauer).unwrap();
        let via_b = ft_via_expansion(&w, BasisKind::BFunctionBasis, p, FtRepresentation::StfGegenbauer)
            .unwrap();
        assert!((via_b - closed).norm() <= 1e-11 * closed.norm());
        let w2 = OrbitalModel::hydrogen(2, 0, 0, 1.0).unwrap();
        let closed2 = ft_closed_form(&w2, p, FtRepresentation::HydGegenbauer).unwrap();
        let via_s =
            ft_via_expansion(&w2, BasisKind::SlaterBasis, p, FtRepresentation::StfGegenbauer).unwrap();
        assert!((via_s - closed2).norm() <= 1e-12 * closed2.norm());
    }

    #[test]
    fn single_term_expansion_exact() {
        let s = OrbitalModel::sturmian(1, 0, 0, 1.0).unwrap();
        let closed = ft_closed_form(&s, zp(0.0), FtRepresentation::SturmGegenbauer).unwrap();
        let via = ft_via_expansion(&s, BasisKind::BFunctionBasis, zp(0.0), FtRepresentation::StfGegenbauer)
            .unwrap();
        assert!((via - closed).norm() <= 1e-14 * closed.norm());
    }

    #[test]
    fn hankel_integral_examples() {
        // b = 0 with nu > 0
        let v = hankel_exp_bessel(2.5, 1.0, 1.3, 0.0, HankelVariant::Real2F1).unwrap();
        assert_eq!(v, Complex64::new(0.0, 0.0));
        // elementary sine integral: sqrt(2/pi)/2
        let v = hankel_exp_bessel(1.5, 0.5, 1.0, 1.0, HankelVariant::Real2F1).unwrap();
        assert_relative_eq!(v.re, 0.3989423, max_relative = 1e-6);
        // K-integral with mu = nu = 1/2, a = b = 1: Gamma(2) 2 / 4
        let v = hankel_exp_bessel(0.5, 0.5, 1.0, 1.0, HankelVariant::BesselK).unwrap();
        assert_relative_eq!(v.re, 0.5, max_relative = 1e-12);
        // order constraint mu + nu > |mu|
        assert!(hankel_exp_bessel(-3.0, 1.0, 1.0, 1.0, HankelVariant::BesselK).is_err());
    }

    #[test]
    fn hankel_integral_beyond_the_series_radius() {
        // b > a pushes the printed series outside its disc; the evaluation
        // continues through the transformation calculus. Reference values
        // from 30-digit quadrature of the integral itself.
        let cases = [
            (2.3, 0.8, 1.0, 2.5, 0.090217223954004973),
            (1.5, 0.5, 0.4, 3.0, 0.15087080762940414),
            (3.0, 2.0, 2.0, 2.0, 0.06629126073623883),
        ];
        for (mu, nu, a, b, want) in cases {
            for variant in [
                HankelVariant::Real2F1,
                HankelVariant::Complex2F1Plus,
                HankelVariant::Complex2F1Minus,
            ] {
                let v = hankel_exp_bessel(mu, nu, a, b, variant).unwrap();
                assert_relative_eq!(v.re, want, max_relative = 1e-11);
                assert!(v.im.abs() <= 1e-11 * want);
            }
        }
    }

    #[test]
    fn hankel_integral_negative_order() {
        // nu in (-1, 0) is integrable for b > 0; reference from 30-digit
        // quadrature. At b = 0 the same order diverges and is refused.
        let v = hankel_exp_bessel(2.8, -0.4, 1.2, 0.9, HankelVariant::Real2F1).unwrap();
        assert_relative_eq!(v.re, 0.10017029276221864, max_relative = 1e-12);
        assert!(hankel_exp_bessel(2.8, -0.4, 1.2, 0.0, HankelVariant::Real2F1).is_err());
    }

    #[test]
    fn hankel_complex_variants_real_and_conjugate() {
        for &(mu, nu, a, b) in &[(1.5, 0.5, 1.0, 1.0), (2.0, 1.0, 2.0, 0.6), (2.5, 1.5, 1.0, 1.9)] {
            let plus = hankel_exp_bessel(mu, nu, a, b, HankelVariant::Complex2F1Plus).unwrap();
            let minus = hankel_exp_bessel(mu, nu, a, b, HankelVariant::Complex2F1Minus).unwrap();
            let real = hankel_exp_bessel(mu, nu, a, b, HankelVariant::Real2F1).unwrap();
            assert!((plus - minus.conj()).norm() <= 1e-12 * plus.norm());
            assert!((plus + minus).im.abs() <= 1e-12 * (plus + minus).norm());
            assert!((plus - real).norm() <= 1e-11 * real.norm());
        }
    }

    #[test]
    fn phase_structure_on_axis() {
        // on the z-axis with m = 0 every transform is (-i)^l (real) Y_l^0:
        // multiplying by i^l lands it on the real axis, and the occupied
        // component cycles through the quadrants with l mod 4
        let check = |v: Complex64, l: u32| {
            let rotated = v * crate::specfun::harmonics::minus_i_pow((4 - (l % 4)) % 4);
            assert!(
                rotated.im.abs() <= 1e-12 * rotated.norm(),
                "l={l}: {v} not of the form (-i)^l real"
            );
            match l % 4 {
                0 | 2 => assert!(v.im.abs() <= 1e-12 * v.norm()),
                _ => assert!(v.re.abs() <= 1e-12 * v.norm()),
            }
        };
        for l in 0..=3u32 {
            let n = l + 2;
            check(ft_slater(n, l, 0, 1.1, zp(0.8), FtRepresentation::StfGegenbauer).unwrap(), l);
            check(ft_bfunction(2, l, 0, 1.1, zp(0.8)), l);
            let models = [
                OrbitalModel::hydrogen(n, l, 0, 1.0).unwrap(),
                OrbitalModel::sturmian(n, l, 0, 1.2).unwrap(),
                OrbitalModel::lambda(n, l, 0, 0.9).unwrap(),
                OrbitalModel::guseinov(0.5, n, l, 0, 1.1).unwrap(),
            ];
            for m in models {
                let rep = FtRepresentation::default_for(m.family());
                check(ft_closed_form(&m, zp(0.8), rep).unwrap(), l);
            }
        }
    }

    #[test]
    fn euler_real_series_length_two_for_n3_l1() {
        // (l - n)/2 = -1 terminates the series after exactly two terms
        let t = crate::hyp::Hyp2F1Term::bare(-1.0, -0.5, 2.5, Complex64::new(-0.9, 0.0));
        let (_, count) = crate::hyp::hyp2f1_with_count(&t).unwrap();
        assert_eq!(count, 2);
    }

    #[test]
    fn representation_tags_round_trip() {
        for rep in FtRepresentation::all_slater() {
            assert_eq!(FtRepresentation::parse(&rep.tag()).unwrap(), rep);
        }
        assert!(FtRepresentation::parse("nope").is_err());
    }
}

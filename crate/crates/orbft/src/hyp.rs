//! Terminating and convergent hypergeometric series (1F1, 2F1, 3F2) and the
//! transformation calculus of the Gaussian 2F1 (Euler, Pfaff, quadratic).
//!
//! Terminating series are summed with exactly `stop + 1` terms. Convergent
//! non-terminating series are summed until a geometric tail bound guarantees a
//! relative tail below `TAIL_REL`, capped at `MAX_TERMS`; outside the unit disc
//! the evaluation refuses instead of resumming — representation selection is
//! the caller's job.

use num_complex::Complex64;

use crate::dd::{CDd, Dd};
use crate::{Error, Result};

/// Relative tail target for truncated non-terminating series.
const TAIL_REL: f64 = 1e-14;
/// Hard cap on series length before signalling failure.
const MAX_TERMS: usize = 10_000;
/// A parameter counts as a nonpositive integer when within this distance.
const INT_TOL: f64 = 1e-9;

/// `Some(k)` when `x` is the nonpositive integer `-k` (within tolerance).
pub fn nonpositive_int(x: f64) -> Option<u32> {
    let r = x.round();
    if r <= 0.0 && (x - r).abs() <= INT_TOL {
        Some((-r) as u32)
    } else {
        None
    }
}

/// One Gaussian hypergeometric term: `prefactor * 2F1(a, b; c; argument)`.
#[derive(Clone, Copy, Debug)]
pub struct Hyp2F1Term {
    pub prefactor: Complex64,
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub argument: Complex64,
    terminating: bool,
}

impl Hyp2F1Term {
    pub fn new(prefactor: Complex64, a: f64, b: f64, c: f64, argument: Complex64) -> Self {
        let terminating = nonpositive_int(a).is_some() || nonpositive_int(b).is_some();
        Hyp2F1Term {
            prefactor,
            a,
            b,
            c,
            argument,
            terminating,
        }
    }

    pub fn bare(a: f64, b: f64, c: f64, argument: Complex64) -> Self {
        Self::new(Complex64::new(1.0, 0.0), a, b, c, argument)
    }

    pub fn is_terminating(&self) -> bool {
        self.terminating
    }

    /// Index of the last nonzero term for a terminating series.
    pub fn stop_index(&self) -> Option<u32> {
        match (nonpositive_int(self.a), nonpositive_int(self.b)) {
            (Some(ka), Some(kb)) => Some(ka.min(kb)),
            (Some(ka), None) => Some(ka),
            (None, Some(kb)) => Some(kb),
            (None, None) => None,
        }
    }
}

/// Linear and quadratic transformations of the 2F1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TransformKind {
    Euler,
    PfaffA,
    PfaffB,
    Qt17,
    Qt18Plus,
    Qt18Minus,
    Qt19,
    Qt32,
}

impl TransformKind {
    pub const ALL: [TransformKind; 8] = [
        TransformKind::Euler,
        TransformKind::PfaffA,
        TransformKind::PfaffB,
        TransformKind::Qt17,
        TransformKind::Qt18Plus,
        TransformKind::Qt18Minus,
        TransformKind::Qt19,
        TransformKind::Qt32,
    ];
}

fn domain<T>(msg: String) -> Result<T> {
    Err(Error::Domain(msg))
}

/// Core 2F1 series. Returns the series value (no prefactor) and the number of
/// terms summed.
fn series_2f1(a: f64, b: f64, c: f64, z: Complex64) -> Result<(Complex64, usize)> {
    let stop = match (nonpositive_int(a), nonpositive_int(b)) {
        (Some(ka), Some(kb)) => Some(ka.min(kb)),
        (Some(ka), None) => Some(ka),
        (None, Some(kb)) => Some(kb),
        (None, None) => None,
    };
    if let Some(kc) = nonpositive_int(c) {
        let ok = matches!(stop, Some(k) if k <= kc);
        if !ok {
            return domain(format!(
                "2F1({a}, {b}; {c}; {z}) hits the pole of the lower parameter"
            ));
        }
    }

    let zd = CDd::from_c64(z);
    let mut term = CDd::ONE;
    let mut sum = CDd::ONE;

    // parameter shifts are formed with error-free sums: a single rounded
    // (b + j) would cap the whole cancelling sum at f64 accuracy
    let ratio_at = |j: f64| {
        Dd::from_sum(a, j)
            .mul(Dd::from_sum(b, j))
            .div(Dd::from_sum(c, j).mul_f64(j + 1.0))
    };

    if let Some(k) = stop {
        for j in 0..k {
            term = term.mul_dd(ratio_at(j as f64)).mul(zd);
            sum = sum.add(term);
        }
        return Ok((sum.to_c64(), k as usize + 1));
    }

    let zmod = z.norm();
    if zmod >= 1.0 {
        return domain(format!(
            "non-terminating 2F1({a}, {b}; {c}; z) with |z| = {zmod:.6} >= 1"
        ));
    }
    // Sum until the geometric tail bound is below TAIL_REL. The term ratio
    // approaches |z| from one side once j clears the parameter magnitudes, so
    // the bound is only trusted past that point.
    let settle = a.abs().max(b.abs()).max(c.abs()).ceil() as usize + 2;
    for j in 0..MAX_TERMS {
        let jf = j as f64;
        term = term.mul_dd(ratio_at(jf)).mul(zd);
        sum = sum.add(term);
        if j + 1 >= settle {
            let next_ratio =
                ((a + jf + 1.0) * (b + jf + 1.0) / ((c + jf + 1.0) * (jf + 2.0))).abs() * zmod;
            if next_ratio < 1.0 {
                let tail = term.norm_est() * next_ratio / (1.0 - next_ratio);
                if tail < TAIL_REL * sum.norm_est().max(f64::MIN_POSITIVE) {
                    return Ok((sum.to_c64(), j + 2));
                }
            }
        }
    }
    domain(format!(
        "2F1({a}, {b}; {c}; z), |z| = {zmod:.6}: tail bound not reached within {MAX_TERMS} terms"
    ))
}

/// `prefactor * 2F1(a, b; c; argument)` of the given term.
pub fn hyp2f1(term: &Hyp2F1Term) -> Result<Complex64> {
    Ok(hyp2f1_with_count(term)?.0)
}

/// Like [`hyp2f1`] but also reports how many series terms were summed.
pub fn hyp2f1_with_count(term: &Hyp2F1Term) -> Result<(Complex64, usize)> {
    let (s, count) = series_2f1(term.a, term.b, term.c, term.argument)?;
    Ok((term.prefactor * s, count))
}

/// Confluent hypergeometric 1F1(a; b; z).
pub fn hyp1f1(a: f64, b: f64, z: f64) -> Result<f64> {
    let stop = nonpositive_int(a);
    if let Some(kb) = nonpositive_int(b) {
        let ok = matches!(stop, Some(k) if k <= kb);
        if !ok {
            return domain(format!(
                "1F1({a}; {b}; z) hits the pole of the lower parameter"
            ));
        }
    }
    let mut term = Dd::ONE;
    let mut sum = Dd::ONE;
    let ratio_at =
        |j: f64| Dd::from_sum(a, j).div(Dd::from_sum(b, j).mul_f64(j + 1.0));
    match stop {
        Some(k) => {
            for j in 0..k {
                term = term.mul(ratio_at(j as f64)).mul_f64(z);
                sum = sum.add(term);
            }
            Ok(sum.to_f64())
        }
        None => {
            let settle = a.abs().max(b.abs()).ceil() as usize + 2;
            for j in 0..MAX_TERMS {
                let jf = j as f64;
                term = term.mul(ratio_at(jf)).mul_f64(z);
                sum = sum.add(term);
                if j + 1 >= settle {
                    let next = ((a + jf + 1.0) / ((b + jf + 1.0) * (jf + 2.0)) * z).abs();
                    if next < 0.5 && term.abs() * next / (1.0 - next) < TAIL_REL * sum.abs() {
                        return Ok(sum.to_f64());
                    }
                }
            }
            domain(format!("1F1({a}; {b}; {z}) did not converge"))
        }
    }
}

/// Terminating 3F2(a1, a2, a3; b1, b2; z).
pub fn hyp3f2(a1: f64, a2: f64, a3: f64, b1: f64, b2: f64, z: f64) -> Result<f64> {
    let stops = [a1, a2, a3].map(nonpositive_int);
    let stop = match stops.iter().flatten().min() {
        Some(&k) => k,
        None => {
            return domain(format!(
                "3F2({a1}, {a2}, {a3}; {b1}, {b2}; z): no upper parameter terminates the series"
            ))
        }
    };
    for b in [b1, b2] {
        if let Some(kb) = nonpositive_int(b) {
            if kb < stop {
                return domain(format!("3F2 lower parameter {b} poles before termination"));
            }
        }
    }
    let mut term = Dd::ONE;
    let mut sum = Dd::ONE;
    for j in 0..stop {
        let jf = j as f64;
        let num = Dd::from_sum(a1, jf)
            .mul(Dd::from_sum(a2, jf))
            .mul(Dd::from_sum(a3, jf));
        let den = Dd::from_sum(b1, jf)
            .mul(Dd::from_sum(b2, jf))
            .mul_f64(jf + 1.0);
        term = term.mul(num.div(den)).mul_f64(z);
        sum = sum.add(term);
    }
    Ok(sum.to_f64())
}

fn require(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Domain(msg.to_string()))
    }
}

/// True when `z` lies on the branch cut of the principal root, i.e. on the
/// closed negative real axis.
fn on_cut(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0
}

/// Apply one transformation to a 2F1 term, absorbing the algebraic factor
/// into the prefactor. All fractional powers use the principal branch.
pub fn transform_2f1(term: &Hyp2F1Term, kind: TransformKind) -> Result<Hyp2F1Term> {
    let (a, b, c, z) = (term.a, term.b, term.c, term.argument);
    let one = Complex64::new(1.0, 0.0);
    let quadratic_ab = (b - a - 0.5).abs() <= INT_TOL;
    match kind {
        TransformKind::Euler => {
            require(!on_cut(one - z), "euler: 1 - z on the branch cut")?;
            let pref = term.prefactor * (one - z).powf(c - a - b);
            Ok(Hyp2F1Term::new(pref, c - a, c - b, c, z))
        }
        TransformKind::PfaffA => {
            require(!on_cut(one - z), "pfaff: 1 - z on the branch cut")?;
            let pref = term.prefactor * (one - z).powf(-a);
            Ok(Hyp2F1Term::new(pref, a, c - b, c, z / (z - one)))
        }
        TransformKind::PfaffB => {
            require(!on_cut(one - z), "pfaff: 1 - z on the branch cut")?;
            let pref = term.prefactor * (one - z).powf(-b);
            Ok(Hyp2F1Term::new(pref, c - a, b, c, z / (z - one)))
        }
        TransformKind::Qt17 => {
            require(quadratic_ab, "qt17 requires b = a + 1/2")?;
            require(!on_cut(one - z), "qt17: 1 - z on the branch cut")?;
            let s = (one - z).sqrt();
            let pref = term.prefactor * (one - z).powf(-a);
            let arg = (s - one) / (2.0 * s);
            Ok(Hyp2F1Term::new(pref, 2.0 * a, 2.0 * c - 2.0 * a - 1.0, c, arg))
        }
        TransformKind::Qt18Plus | TransformKind::Qt18Minus => {
            require(quadratic_ab, "qt18 requires b = a + 1/2")?;
            require(!on_cut(z) || z == Complex64::new(0.0, 0.0), "qt18: z on the branch cut")?;
            let s = if kind == TransformKind::Qt18Plus {
                z.sqrt()
            } else {
                -z.sqrt()
            };
            require(!on_cut(one + s), "qt18: 1 +- sqrt(z) on the branch cut")?;
            let pref = term.prefactor * (one + s).powf(-2.0 * a);
            let arg = 2.0 * s / (one + s);
            Ok(Hyp2F1Term::new(
                pref,
                2.0 * a,
                c - 0.5,
                2.0 * c - 1.0,
                arg,
            ))
        }
        TransformKind::Qt19 => {
            require(quadratic_ab, "qt19 requires b = a + 1/2")?;
            require(!on_cut(one - z), "qt19: 1 - z on the branch cut")?;
            let s = (one - z).sqrt();
            let pref = term.prefactor * ((one + s) / 2.0).powf(-2.0 * a);
            let arg = (one - s) / (one + s);
            Ok(Hyp2F1Term::new(pref, 2.0 * a, 2.0 * a - c + 1.0, c, arg))
        }
        TransformKind::Qt32 => {
            require((c - 2.0 * b).abs() <= INT_TOL, "qt32 requires c = 2b")?;
            let half = one - z / 2.0;
            require(!on_cut(half), "qt32: 1 - z/2 on the branch cut")?;
            let pref = term.prefactor * half.powf(-a);
            let arg = (z * z) / ((2.0 * one - z) * (2.0 * one - z));
            Ok(Hyp2F1Term::new(
                pref,
                a / 2.0,
                (a + 1.0) / 2.0,
                b + 0.5,
                arg,
            ))
        }
    }
}

/// Evaluate a 2F1 term, chaining through transformations when the direct
/// series does not converge. Used by the Hankel-type integral evaluations,
/// where the printed series has a finite convergence radius but the integral
/// itself is fine.
pub fn eval_2f1_continued(term: &Hyp2F1Term) -> Result<Complex64> {
    if let Ok(v) = hyp2f1(term) {
        return Ok(v);
    }
    for kind in [TransformKind::Euler, TransformKind::PfaffA, TransformKind::PfaffB] {
        if let Ok(t) = transform_2f1(term, kind) {
            if let Ok(v) = hyp2f1(&t) {
                return Ok(v);
            }
        }
    }
    if let Ok(t) = transform_2f1(term, TransformKind::Qt32) {
        if let Ok(v) = hyp2f1(&t) {
            return Ok(v);
        }
        for kind in [TransformKind::PfaffA, TransformKind::PfaffB] {
            if let Ok(t2) = transform_2f1(&t, kind) {
                if let Ok(v) = hyp2f1(&t2) {
                    return Ok(v);
                }
            }
        }
    }
    domain(format!(
        "2F1({}, {}; {}; {}) not evaluable directly or through transformations",
        term.a, term.b, term.c, term.argument
    ))
}

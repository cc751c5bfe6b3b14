//! Complex spherical and regular solid harmonics in the Condon-Shortley
//! convention.
//!
//! The associated Legendre part runs through the fully normalized recurrence,
//! so no bare factorials appear and the evaluation stays clean to high l.

use num_complex::Complex64;

use super::Vector3;

/// Y_0^0.
pub const Y00: f64 = 0.28209479177387814; // 1/sqrt(4 pi)

/// Fully normalized associated Legendre value
/// sqrt((2l+1)(l-m)! / (4 pi (l+m)!)) P_l^m(cos theta) for m >= 0,
/// with P_l^m free of the Condon-Shortley phase.
fn normalized_plm(l: u32, m: u32, cos_theta: f64, sin_theta: f64) -> f64 {
    // seed: P~_m^m
    let mut pmm = (1.0 / (4.0 * std::f64::consts::PI)).sqrt();
    for k in 1..=m {
        let kf = k as f64;
        pmm *= ((2.0 * kf + 1.0) / (2.0 * kf)).sqrt() * sin_theta;
    }
    if l == m {
        return pmm;
    }
    let mut prev = pmm;
    let mut cur = cos_theta * (2.0 * m as f64 + 3.0).sqrt() * pmm;
    if l == m + 1 {
        return cur;
    }
    let mf = m as f64;
    for k in (m + 2)..=l {
        let kf = k as f64;
        let a = ((4.0 * kf * kf - 1.0) / (kf * kf - mf * mf)).sqrt();
        let b = (((kf - 1.0) * (kf - 1.0) - mf * mf) / (4.0 * (kf - 1.0) * (kf - 1.0) - 1.0))
            .sqrt();
        let next = a * (cos_theta * cur - b * prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// Complex spherical harmonic Y_l^m along the direction of `v` (need not be
/// normalized; must be nonzero).
pub fn spherical_harmonic(l: u32, m: i32, v: Vector3) -> Complex64 {
    assert!(m.unsigned_abs() <= l, "spherical harmonic needs |m| <= l");
    let r = v.norm();
    assert!(r > 0.0, "spherical harmonic direction must be nonzero");
    let cos_theta = v.z / r;
    let rho = v.x.hypot(v.y);
    let sin_theta = rho / r;
    let ma = m.unsigned_abs();
    let plm = normalized_plm(l, ma, cos_theta, sin_theta);
    if m == 0 {
        return Complex64::new(plm, 0.0);
    }
    let phi = v.y.atan2(v.x);
    let mf = ma as f64;
    // Condon-Shortley phase on positive m; Y_l^{-m} = (-1)^m conj(Y_l^m)
    let cs = if ma % 2 == 0 { 1.0 } else { -1.0 };
    let y_pos = cs * plm * Complex64::new((mf * phi).cos(), (mf * phi).sin());
    if m > 0 {
        y_pos
    } else {
        cs * y_pos.conj()
    }
}

/// (-i)^l as a complex unit.
pub fn minus_i_pow(l: u32) -> Complex64 {
    match l % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, -1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, 1.0),
    }
}

/// Regular solid harmonic.
///
/// With `imaginary_scale` off this is Y_l^m(r) = r^l Y_l^m(theta, phi); with
/// it on, the argument is scaled by -i, giving (-i)^l r^l Y_l^m(theta, phi),
/// the angular factor of every momentum-space transform here. At the origin
/// the value is 0 for l >= 1 and Y_0^0 for l = 0.
pub fn solid_harmonic(l: u32, m: i32, arg: Vector3, imaginary_scale: bool) -> Complex64 {
    assert!(m.unsigned_abs() <= l, "solid harmonic needs |m| <= l");
    let r = arg.norm();
    if r == 0.0 {
        return if l == 0 {
            Complex64::new(Y00, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        };
    }
    let mut v = r.powi(l as i32) * spherical_harmonic(l, m, arg);
    if imaginary_scale {
        v *= minus_i_pow(l);
    }
    v
}

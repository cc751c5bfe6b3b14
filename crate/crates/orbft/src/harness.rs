//! Stability experiments (Slater route vs B-function route), the cancellation
//! metric, and report emission.
//!
//! Reports are flat CSV/JSON files with reals printed at 17 significant
//! digits, so a written row parses back bit-for-bit.

use num_complex::Complex64;
use serde::Deserialize;

use crate::momentum::{ft_closed_form, ft_expansion_terms, FtRepresentation};
use crate::oracle::{ft_numeric, QuadratureConfig};
use crate::orbitals::{BasisKind, Family, OrbitalModel};
use crate::specfun::Vector3;
use crate::{Error, Result};

/// Largest principal quantum number a scan may request.
pub const SCAN_N_MAX: u32 = 60;
/// Above this n the quadrature reference hands over to the closed form.
pub const ORACLE_N_MAX: u32 = 12;

/// Evaluation route of one scan row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Route {
    SlaterExpansion,
    BFunctionExpansion,
    ClosedForm,
}

impl Route {
    pub fn tag(&self) -> &'static str {
        match self {
            Route::SlaterExpansion => "slater_expansion",
            Route::BFunctionExpansion => "b_function_expansion",
            Route::ClosedForm => "closed_form",
        }
    }

    pub fn parse(s: &str) -> Result<Route> {
        match s {
            "slater_expansion" => Ok(Route::SlaterExpansion),
            "b_function_expansion" => Ok(Route::BFunctionExpansion),
            "closed_form" => Ok(Route::ClosedForm),
            other => Err(Error::Domain(format!("unknown route '{other}'"))),
        }
    }
}

impl<'de> Deserialize<'de> for Route {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Route::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// One stability measurement.
#[derive(Clone, Debug, PartialEq)]
pub struct StabilityRow {
    pub family: String,
    pub n: u32,
    pub l: u32,
    pub p: f64,
    pub route: Route,
    pub value: Complex64,
    pub rel_err_vs_oracle: f64,
    pub digits_lost: f64,
}

/// Report file format.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
}

/// Grid description of a stability scan.
#[derive(Clone, Debug, Deserialize)]
pub struct ScanConfig {
    pub family: String,
    /// Inclusive [min, max] range of n.
    pub n_range: (u32, u32),
    pub l_list: Vec<u32>,
    pub exponent: f64,
    #[serde(default)]
    pub k: Option<f64>,
    pub p_list: Vec<f64>,
    pub routes: Vec<Route>,
    pub output: OutputFormat,
}

impl ScanConfig {
    pub fn from_json(text: &str) -> Result<ScanConfig> {
        let cfg: ScanConfig =
            serde_json::from_str(text).map_err(|e| Error::Domain(format!("bad scan config: {e}")))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_range.0 == 0 || self.n_range.0 > self.n_range.1 {
            return Err(Error::Domain(format!("bad n_range {:?}", self.n_range)));
        }
        if self.n_range.1 > SCAN_N_MAX {
            return Err(Error::Domain(format!(
                "n_range max {} exceeds the scan cap {SCAN_N_MAX}",
                self.n_range.1
            )));
        }
        if self.l_list.is_empty() || self.p_list.is_empty() || self.routes.is_empty() {
            return Err(Error::Domain("empty l_list, p_list, or routes".into()));
        }
        if !(self.exponent > 0.0) {
            return Err(Error::Domain(format!("exponent must be positive, got {}", self.exponent)));
        }
        let family = self.parse_family()?;
        if matches!(family, Family::Slater | Family::BFunction)
            && self.routes.iter().any(|r| *r != Route::ClosedForm)
        {
            return Err(Error::Domain(format!(
                "family {} has no expansion routes",
                family.name()
            )));
        }
        Ok(())
    }

    pub fn parse_family(&self) -> Result<Family> {
        parse_family(&self.family, self.k, None)
    }
}

/// Family from its CLI/scan tag.
pub fn parse_family(name: &str, k: Option<f64>, alpha_fric: Option<i32>) -> Result<Family> {
    match name {
        "slater" => Ok(Family::Slater),
        "hydrogen" => Ok(Family::Hydrogen),
        "sturmian" => Ok(Family::Sturmian),
        "lambda" => Ok(Family::Lambda),
        "bfunction" => Ok(Family::BFunction),
        "guseinov" => {
            let k = k.ok_or_else(|| Error::Domain("family guseinov needs k".into()))?;
            Ok(Family::Guseinov { k })
        }
        "guseinov-original" => {
            let a = alpha_fric
                .ok_or_else(|| Error::Domain("family guseinov-original needs alpha-fric".into()))?;
            Ok(Family::GuseinovOriginal { alpha_fric: a })
        }
        other => Err(Error::Domain(format!("unknown family '{other}'"))),
    }
}

/// Cancellation severity of a summation: log10 of the ratio between the sum
/// of term magnitudes and the magnitude of the sum, clamped at zero.
pub fn digits_lost(terms: &[Complex64]) -> f64 {
    assert!(!terms.is_empty(), "digits_lost needs at least one term");
    let gross: f64 = terms.iter().map(|t| t.norm()).sum();
    let net = terms.iter().sum::<Complex64>().norm();
    (gross / net.max(1e-300)).log10().max(0.0)
}

/// Run the scan grid. Each grid point is measured against a two-tier
/// reference: the quadrature oracle up to n = 12, the family's stable closed
/// form beyond (quadrature of the highly oscillatory radial parts grows
/// expensive there). A non-converging quadrature also falls back to the
/// closed form, so every row carries finite numbers.
pub fn run_stability_scan(cfg: &ScanConfig) -> Result<Vec<StabilityRow>> {
    cfg.validate()?;
    let family = cfg.parse_family()?;
    let mut routes = cfg.routes.clone();
    routes.sort();
    routes.dedup();
    let quad = QuadratureConfig::default();
    let mut rows = Vec::new();
    for n in cfg.n_range.0..=cfg.n_range.1 {
        for &l in &cfg.l_list {
            if !matches!(family, Family::BFunction) && l + 1 > n {
                continue;
            }
            let model = OrbitalModel::new(family, crate::specfun::QuantumNumbers::new(n, l, 0)?, cfg.exponent)?;
            let closed_rep = FtRepresentation::default_for(family);
            for &p in &cfg.p_list {
                let pv = Vector3::zaxis(p);
                let closed = ft_closed_form(&model, pv, closed_rep)?;
                let reference = if n <= ORACLE_N_MAX {
                    ft_numeric(&model, pv, &quad).unwrap_or(closed)
                } else {
                    closed
                };
                let ref_norm = reference.norm().max(1e-300);
                for &route in &routes {
                    let (value, lost) = match route {
                        Route::ClosedForm => (closed, 0.0),
                        Route::SlaterExpansion => {
                            let terms = ft_expansion_terms(
                                &model,
                                BasisKind::SlaterBasis,
                                pv,
                                FtRepresentation::StfGegenbauer,
                            )?;
                            (terms.iter().sum(), digits_lost(&terms))
                        }
                        Route::BFunctionExpansion => {
                            let terms = ft_expansion_terms(
                                &model,
                                BasisKind::BFunctionBasis,
                                pv,
                                FtRepresentation::StfGegenbauer,
                            )?;
                            (terms.iter().sum(), digits_lost(&terms))
                        }
                    };
                    rows.push(StabilityRow {
                        family: family.name().to_string(),
                        n,
                        l,
                        p,
                        route,
                        value,
                        rel_err_vs_oracle: (value - reference).norm() / ref_norm,
                        digits_lost: lost,
                    });
                }
            }
        }
    }
    Ok(rows)
}

/// A double printed with 17 significant digits; parsing it back recovers the
/// exact bits.
pub fn fmt_g17(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn rows_to_csv(rows: &[StabilityRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "family",
        "n",
        "l",
        "p",
        "route",
        "value_re",
        "value_im",
        "rel_err_vs_oracle",
        "digits_lost",
    ])
    .expect("csv header");
    for r in rows {
        w.write_record([
            r.family.clone(),
            r.n.to_string(),
            r.l.to_string(),
            fmt_g17(r.p),
            r.route.tag().to_string(),
            fmt_g17(r.value.re),
            fmt_g17(r.value.im),
            fmt_g17(r.rel_err_vs_oracle),
            fmt_g17(r.digits_lost),
        ])
        .expect("csv row");
    }
    String::from_utf8(w.into_inner().expect("csv flush")).expect("csv utf8")
}

pub fn rows_from_csv(text: &str) -> Result<Vec<StabilityRow>> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let mut rows = Vec::new();
    for record in reader.records() {
        let rec = record.map_err(|e| Error::Domain(format!("bad csv: {e}")))?;
        let field = |i: usize| -> Result<&str> {
            rec.get(i).ok_or_else(|| Error::Domain("short csv row".into()))
        };
        let fparse = |s: &str| -> Result<f64> {
            s.parse::<f64>().map_err(|e| Error::Domain(format!("bad real '{s}': {e}")))
        };
        rows.push(StabilityRow {
            family: field(0)?.to_string(),
            n: field(1)?.parse().map_err(|e| Error::Domain(format!("bad n: {e}")))?,
            l: field(2)?.parse().map_err(|e| Error::Domain(format!("bad l: {e}")))?,
            p: fparse(field(3)?)?,
            route: Route::parse(field(4)?)?,
            value: Complex64::new(fparse(field(5)?)?, fparse(field(6)?)?),
            rel_err_vs_oracle: fparse(field(7)?)?,
            digits_lost: fparse(field(8)?)?,
        });
    }
    Ok(rows)
}

pub fn rows_to_json(rows: &[StabilityRow]) -> String {
    let mut out = String::from("[\n");
    for (i, r) in rows.iter().enumerate() {
        out.push_str(&format!(
            "  {{\"family\": \"{}\", \"n\": {}, \"l\": {}, \"p\": {}, \"route\": \"{}\", \
             \"value\": {{\"re\": {}, \"im\": {}}}, \"rel_err_vs_oracle\": {}, \"digits_lost\": {}}}{}\n",
            r.family,
            r.n,
            r.l,
            fmt_g17(r.p),
            r.route.tag(),
            fmt_g17(r.value.re),
            fmt_g17(r.value.im),
            fmt_g17(r.rel_err_vs_oracle),
            fmt_g17(r.digits_lost),
            if i + 1 == rows.len() { "" } else { "," }
        ));
    }
    out.push(']');
    out
}

pub fn rows_from_json(text: &str) -> Result<Vec<StabilityRow>> {
    let parsed: serde_json::Value =
        serde_json::from_str(text).map_err(|e| Error::Domain(format!("bad json: {e}")))?;
    let arr = parsed
        .as_array()
        .ok_or_else(|| Error::Domain("json report must be an array".into()))?;
    let mut rows = Vec::new();
    for item in arr {
        let get = |key: &str| -> Result<&serde_json::Value> {
            item.get(key).ok_or_else(|| Error::Domain(format!("missing key {key}")))
        };
        let fnum = |v: &serde_json::Value| -> Result<f64> {
            v.as_f64().ok_or_else(|| Error::Domain("expected a number".into()))
        };
        let value = get("value")?;
        rows.push(StabilityRow {
            family: get("family")?.as_str().unwrap_or_default().to_string(),
            n: fnum(get("n")?)? as u32,
            l: fnum(get("l")?)? as u32,
            p: fnum(get("p")?)?,
            route: Route::parse(get("route")?.as_str().unwrap_or_default())?,
            value: Complex64::new(
                fnum(value.get("re").ok_or_else(|| Error::Domain("missing value.re".into()))?)?,
                fnum(value.get("im").ok_or_else(|| Error::Domain("missing value.im".into()))?)?,
            ),
            rel_err_vs_oracle: fnum(get("rel_err_vs_oracle")?)?,
            digits_lost: fnum(get("digits_lost")?)?,
        });
    }
    Ok(rows)
}

/// Least-squares slope of y against x.
pub fn lsq_slope(points: &[(f64, f64)]) -> f64 {
    let n = points.len() as f64;
    let sx: f64 = points.iter().map(|p| p.0).sum();
    let sy: f64 = points.iter().map(|p| p.1).sum();
    let sxx: f64 = points.iter().map(|p| p.0 * p.0).sum();
    let sxy: f64 = points.iter().map(|p| p.0 * p.1).sum();
    (n * sxy - sx * sy) / (n * sxx - sx * sx)
}

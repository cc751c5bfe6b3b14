use std::process::ExitCode;

use clap::{Parser, Subcommand};
use orbft::harness::{
    fmt_g17, parse_family, rows_to_csv, rows_to_json, run_stability_scan, OutputFormat, ScanConfig,
};
use orbft::momentum::{ft_closed_form, ft_slater, FtRepresentation};
use orbft::oracle::{fock_limit_error, overlap_numeric, QuadratureConfig};
use orbft::orbitals::OrbitalModel;
use orbft::specfun::QuantumNumbers;
use orbft::{Error, Vector3};

#[derive(Parser)]
#[command(
    name = "orbft",
    about = "Exponential-type orbitals and their momentum-space transforms",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate an orbital in position space.
    Eval {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        l: u32,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        m: i32,
        #[arg(long)]
        exponent: f64,
        /// Guseinov weight power k (family guseinov only).
        #[arg(long, allow_negative_numbers = true)]
        k: Option<f64>,
        /// Frictional quantum number (family guseinov-original only).
        #[arg(long, allow_negative_numbers = true)]
        alpha_fric: Option<i32>,
        /// Position as "x,y,z" in Bohr.
        #[arg(long)]
        r: String,
    },
    /// Closed-form momentum-space transform.
    Ft {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        l: u32,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        m: i32,
        #[arg(long)]
        exponent: f64,
        #[arg(long, allow_negative_numbers = true)]
        k: Option<f64>,
        /// Momentum as "x,y,z" in inverse Bohr.
        #[arg(long)]
        p: String,
        /// Representation tag; defaults to the family's stable route.
        #[arg(long)]
        rep: Option<String>,
    },
    /// Evaluate every Slater-type representation at one point and report the
    /// maximum pairwise deviation.
    Compare {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        l: u32,
        #[arg(long)]
        exponent: f64,
        /// Momentum magnitude along the polar axis.
        #[arg(long)]
        p: f64,
    },
    /// Numerical overlap integrals for pairs "n1,l1,m1:n2,l2,m2[;...]".
    Ortho {
        #[arg(long)]
        family: String,
        #[arg(long)]
        pairs: String,
        #[arg(long)]
        exponent: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        weight_power: f64,
        #[arg(long, allow_negative_numbers = true)]
        k: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        alpha_fric: Option<i32>,
    },
    /// Run a stability scan from a JSON config and write the report.
    Scan {
        #[arg(long)]
        config: std::path::PathBuf,
        #[arg(long)]
        out: std::path::PathBuf,
    },
    /// Deviation of the bound-state series from its large-n Bessel limit.
    Limit {
        #[arg(long)]
        l: u32,
        #[arg(long = "Z")]
        z: f64,
        #[arg(long)]
        r: f64,
        /// Comma-separated list of n values.
        #[arg(long)]
        n_list: String,
    },
}

fn parse_vec3(text: &str) -> Result<Vector3, Error> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 3 {
        return Err(Error::Domain(format!("expected \"x,y,z\", got '{text}'")));
    }
    let mut v = [0.0; 3];
    for (i, part) in parts.iter().enumerate() {
        v[i] = part
            .trim()
            .parse::<f64>()
            .map_err(|e| Error::Domain(format!("bad coordinate '{part}': {e}")))?;
    }
    Ok(Vector3::new(v[0], v[1], v[2]))
}

fn build_model(
    family: &str,
    n: u32,
    l: u32,
    m: i32,
    exponent: f64,
    k: Option<f64>,
    alpha_fric: Option<i32>,
) -> Result<OrbitalModel, Error> {
    let fam = parse_family(family, k, alpha_fric)?;
    OrbitalModel::new(fam, QuantumNumbers::new(n, l, m)?, exponent)
}

fn run(cmd: Cmd) -> Result<(), Error> {
    match cmd {
        Cmd::Eval { family, n, l, m, exponent, k, alpha_fric, r } => {
            let model = build_model(&family, n, l, m, exponent, k, alpha_fric)?;
            let v = model.evaluate(parse_vec3(&r)?);
            println!("{{\"re\": {}, \"im\": {}}}", fmt_g17(v.re), fmt_g17(v.im));
        }
        Cmd::Ft { family, n, l, m, exponent, k, p, rep } => {
            let model = build_model(&family, n, l, m, exponent, k, None)?;
            let rep = match rep {
                Some(tag) => FtRepresentation::parse(&tag)?,
                None => FtRepresentation::default_for(model.family()),
            };
            let v = ft_closed_form(&model, parse_vec3(&p)?, rep)?;
            println!(
                "{{\"re\": {}, \"im\": {}, \"rep\": \"{}\"}}",
                fmt_g17(v.re),
                fmt_g17(v.im),
                rep.tag()
            );
        }
        Cmd::Compare { family, n, l, exponent, p } => {
            if family != "slater" {
                return Err(Error::Domain("compare works on --family slater".into()));
            }
            let pv = Vector3::zaxis(p);
            let mut values = Vec::new();
            println!("{:<26} {:>24} {:>24}", "representation", "re", "im");
            for rep in FtRepresentation::all_slater() {
                match ft_slater(n, l, 0, exponent, pv, rep) {
                    Ok(v) => {
                        println!("{:<26} {:>24} {:>24}", rep.tag(), fmt_g17(v.re), fmt_g17(v.im));
                        values.push(v);
                    }
                    Err(e) => println!("{:<26} {}", rep.tag(), e),
                }
            }
            let mut max_dev: f64 = 0.0;
            for (i, a) in values.iter().enumerate() {
                for b in &values[i + 1..] {
                    max_dev = max_dev.max((a - b).norm());
                }
            }
            println!("max pairwise deviation: {}", fmt_g17(max_dev));
        }
        Cmd::Ortho { family, pairs, exponent, weight_power, k, alpha_fric } => {
            let cfg = QuadratureConfig::default();
            let mut outputs = Vec::new();
            for pair in pairs.split(';') {
                let (bra_txt, ket_txt) = pair
                    .split_once(':')
                    .ok_or_else(|| Error::Domain(format!("pair '{pair}' needs a ':'")))?;
                let parse_qn = |txt: &str| -> Result<(u32, u32, i32), Error> {
                    let v: Vec<&str> = txt.split(',').collect();
                    if v.len() != 3 {
                        return Err(Error::Domain(format!("bad quantum numbers '{txt}'")));
                    }
                    let err = |e: std::num::ParseIntError| Error::Domain(e.to_string());
                    Ok((
                        v[0].trim().parse().map_err(err)?,
                        v[1].trim().parse().map_err(err)?,
                        v[2].trim().parse().map_err(err)?,
                    ))
                };
                let (n1, l1, m1) = parse_qn(bra_txt)?;
                let (n2, l2, m2) = parse_qn(ket_txt)?;
                let bra = build_model(&family, n1, l1, m1, exponent, k, alpha_fric)?;
                let ket = build_model(&family, n2, l2, m2, exponent, k, alpha_fric)?;
                let v = overlap_numeric(&bra, &ket, weight_power, &cfg)?;
                outputs.push(format!(
                    "{{\"bra\": [{n1}, {l1}, {m1}], \"ket\": [{n2}, {l2}, {m2}], \
                     \"re\": {}, \"im\": {}}}",
                    fmt_g17(v.re),
                    fmt_g17(v.im)
                ));
            }
            println!("[{}]", outputs.join(", "));
        }
        Cmd::Scan { config, out } => {
            let text = std::fs::read_to_string(&config)
                .map_err(|e| Error::Domain(format!("cannot read {}: {e}", config.display())))?;
            let cfg = ScanConfig::from_json(&text)?;
            let rows = run_stability_scan(&cfg)?;
            let report = match cfg.output {
                OutputFormat::Csv => rows_to_csv(&rows),
                OutputFormat::Json => rows_to_json(&rows),
            };
            std::fs::write(&out, report)
                .map_err(|e| Error::Domain(format!("cannot write {}: {e}", out.display())))?;
            println!("wrote {} rows to {}", rows.len(), out.display());
        }
        Cmd::Limit { l, z, r, n_list } => {
            let mut outputs = Vec::new();
            for part in n_list.split(',') {
                let n: u32 = part
                    .trim()
                    .parse()
                    .map_err(|e| Error::Domain(format!("bad n '{part}': {e}")))?;
                if n < l + 2 {
                    return Err(Error::Domain(format!("limit diagnostic needs n >= l + 2, got n={n}")));
                }
                let err = fock_limit_error(l, z, r, n);
                outputs.push(format!("{{\"n\": {n}, \"error\": {}}}", fmt_g17(err)));
            }
            println!("[{}]", outputs.join(", "));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Domain(_) => ExitCode::from(2),
                Error::Quadrature(_) => ExitCode::from(3),
            }
        }
    }
}

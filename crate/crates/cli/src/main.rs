use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::json;

use hankel_core::bernstein::{
    bound_above, certify_positive, to_bernstein, validate, BiPoly, CornerRule, Rect,
};
use hankel_core::gft::{janowski_check, JanowskiParams};
use hankel_core::pipelines::{
    verify_h3, A4Check, Check, CheckRegistry, H2Check, PhiScanCheck, Status, SubCheck,
    VerificationReport,
};
use hankel_core::radius::{solve_radius, RadiusProblem, DEFAULT_TOLERANCE};
use hankel_core::rational::{parse_rational, Rational};
use hankel_core::series::{member_from_schwarz, TruncSeries};

const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(
    name = "hankel",
    version,
    about = "Exact coefficient and Hankel determinant checks"
)]
struct Cli {
    #[command(flatten)]
    out: Output,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Output {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Also write the JSON report to this file.
    #[arg(long, global = true, value_name = "PATH")]
    report: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Coefficients a_2..a_N of the member generated by a Schwarz function.
    Expand {
        /// Monomial such as `z`, `z^3` or `1/2*z^2`, or a file of coefficients c_1 c_2 ...
        #[arg(long)]
        schwarz: String,
        #[arg(long, default_value_t = 4)]
        order: usize,
    },
    /// Second Hankel determinant bound.
    VerifyH2 {
        #[arg(long, default_value_t = 32)]
        grid: usize,
    },
    /// Third Hankel determinant bound with a Bernstein certificate.
    CertifyH3 {
        #[arg(long, default_value_t = 3)]
        max_depth: usize,
        #[arg(long, default_value_t = 8)]
        grid: usize,
        /// Where to write the certificate JSON.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Bernstein coefficients, upper bounds or positivity certificates.
    Bernstein {
        /// Polynomial in the text format.
        #[arg(long)]
        poly: PathBuf,
        #[arg(long = "box", num_args = 4, value_names = ["PLO", "PHI", "XLO", "XHI"], allow_hyphen_values = true)]
        rect: Vec<String>,
        #[arg(long, conflicts_with = "bound_above")]
        certify: bool,
        #[arg(long)]
        bound_above: bool,
        /// Corner where the polynomial has a double zero.
        #[arg(long, num_args = 2, value_names = ["P", "X"], allow_hyphen_values = true)]
        corner: Option<Vec<String>>,
        #[arg(long, default_value_t = 3)]
        max_depth: usize,
        /// Subdivision depth for --bound-above.
        #[arg(long, default_value_t = 0)]
        depth: usize,
        /// Where to write the certificate JSON.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Radius of convexity of the given order.
    Radius {
        #[arg(long, default_value = "0")]
        gamma: String,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tol: f64,
    },
    /// Numerical maximum of |a_4|.
    MaxA4 {
        #[arg(long, default_value_t = 64)]
        grid: usize,
        #[arg(long, default_value_t = 2000)]
        refine: usize,
    },
    /// Disk containment test for (1 + Az)/(1 + Bz).
    Janowski {
        #[arg(long = "A", allow_hyphen_values = true)]
        a: String,
        #[arg(long = "B", allow_hyphen_values = true)]
        b: String,
    },
    /// Grid scan of the Ma-Minda properties of (1 + z/2)^2.
    ScanPhi {
        #[arg(long, default_value_t = 32)]
        grid: usize,
    },
    /// Run a registered check by name.
    Verify {
        #[arg(long)]
        check: String,
    },
    /// List registered checks.
    Checks,
}

/// Error that maps to the usage exit code.
#[derive(Debug)]
struct Usage(anyhow::Error);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:#}", self.0)
    }
}

impl std::error::Error for Usage {}

fn usage<T>(r: Result<T>) -> Result<T> {
    r.map_err(|e| Usage(e).into())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<Usage>().is_some() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::FAILURE
            }
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    let out = &cli.out;
    match cli.cmd {
        Cmd::Expand { schwarz, order } => expand(out, &schwarz, order),
        Cmd::VerifyH2 { grid } => emit(out, usage(H2Check { grid }.run().map_err(Into::into))?),
        Cmd::CertifyH3 {
            max_depth,
            grid,
            out: path,
        } => {
            let mut report = usage(verify_h3(max_depth, grid).map_err(Into::into))?;
            if let (Some(path), Some(cert)) = (&path, &report.certificate) {
                write_file(path, &cert.to_json())?;
                report.artifacts.push(path.display().to_string());
            }
            emit(out, report)
        }
        Cmd::Bernstein {
            poly,
            rect,
            certify,
            bound_above: upper,
            corner,
            max_depth,
            depth,
            out: path,
        } => {
            let text = usage(
                fs::read_to_string(&poly).with_context(|| format!("reading {}", poly.display())),
            )?;
            let f = usage(BiPoly::parse(&text).map_err(Into::into))?;
            let rect = usage(parse_rect(&rect))?;
            if certify {
                let rule = match corner {
                    Some(c) => {
                        let (p, x) = usage(parse_pair(&c))?;
                        Some(usage(CornerRule::new(&f, p, x).map_err(Into::into))?)
                    }
                    None => None,
                };
                bernstein_certify(out, &f, &rect, max_depth, rule.as_ref(), path.as_deref())
            } else if upper {
                let b = bound_above(&f, &rect, depth);
                print_value(
                    out,
                    json!({ "box": rect, "depth": depth, "bound_above": b.to_string() }),
                    || format!("max on {rect} <= {b}"),
                )
            } else {
                let patch = to_bernstein(&f, &rect);
                let rows: Vec<Vec<String>> = (0..=patch.bidegree().0)
                    .map(|i| {
                        (0..=patch.bidegree().1)
                            .map(|j| patch.get(i, j).to_string())
                            .collect()
                    })
                    .collect();
                print_value(
                    out,
                    json!({ "box": rect, "coefficients": rows, "min": patch.min_coeff().to_string(), "max": patch.max_coeff().to_string() }),
                    || {
                        let mut s: String = rows.iter().map(|r| r.join(" ") + "\n").collect();
                        s.push_str(&format!(
                            "min {}\nmax {}",
                            patch.min_coeff(),
                            patch.max_coeff()
                        ));
                        s
                    },
                )
            }
        }
        Cmd::Radius { gamma, tol } => {
            let g = usage(parse_rational(&gamma).map_err(Into::into))?;
            let problem = usage(RadiusProblem::new(g.clone(), tol).map_err(Into::into))?;
            let sol = solve_radius(&problem)?;
            let checks = vec![SubCheck::new(
                "bracket",
                sol.width <= tol,
                format!("g(r) = {g} for r in [{}, {}]", sol.lo, sol.hi),
            )];
            let report = VerificationReport::assemble(
                format!("radius of convexity of order {g} is {:.15}", sol.root),
                Some(sol.hi.clone()),
                checks,
                None,
            );
            emit(out, report)
        }
        Cmd::MaxA4 { grid, refine } => emit(
            out,
            usage(A4Check { grid, refine }.run().map_err(Into::into))?,
        ),
        Cmd::Janowski { a, b } => {
            let (a, b) = usage(parse_pair(&[a, b]))?;
            let params = usage(JanowskiParams::new(a, b).map_err(Into::into))?;
            let r = janowski_check(&params);
            print_value(out, serde_json::to_value(&r)?, || {
                format!(
                    "image disk center {}, radius {}\nreal interval [{}, {}]\nsubordinate: {}",
                    r.center,
                    r.radius,
                    r.left_end,
                    r.right_end,
                    if r.subordinate() { "yes" } else { "no" }
                )
            })
        }
        Cmd::ScanPhi { grid } => emit(out, usage(PhiScanCheck { grid }.run().map_err(Into::into))?),
        Cmd::Verify { check } => {
            let registry = CheckRegistry::standard();
            let c = usage(registry.get(&check).map_err(Into::into))?;
            emit(out, c.run()?)
        }
        Cmd::Checks => {
            let registry = CheckRegistry::standard();
            let list: Vec<_> = registry
                .iter()
                .map(|c| json!({ "name": c.name(), "description": c.description() }))
                .collect();
            print_value(out, json!(list), || {
                registry
                    .iter()
                    .map(|c| format!("{:<10} {}", c.name(), c.description()))
                    .collect::<Vec<_>>()
                    .join("\n")
            })
        }
    }
}

fn expand(out: &Output, spec: &str, order: usize) -> Result<u8> {
    if order < 2 {
        return usage(Err(anyhow::anyhow!("--order must be at least 2")));
    }
    let coeffs = usage(schwarz_coefficients(spec))?;
    let w = TruncSeries::from_coeffs(
        std::iter::once(Rational::from_integer(0.into())).chain(coeffs),
        order,
    );
    let f = usage(member_from_schwarz(&w, order).map_err(Into::into))?;
    let pairs: Vec<(String, String)> = (2..=order)
        .map(|k| (format!("a{k}"), f.coeff(k).to_string()))
        .collect();
    let obj: serde_json::Map<_, _> = pairs.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
    print_value(out, serde_json::Value::Object(obj), || {
        pairs
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ")
    })
}

/// `c_1, c_2, ...` from a monomial or a coefficient file.
fn schwarz_coefficients(spec: &str) -> Result<Vec<Rational>> {
    if let Some(m) = parse_monomial(spec)? {
        return Ok(m);
    }
    let text = fs::read_to_string(spec)
        .with_context(|| format!("{spec:?} is neither a monomial nor a readable file"))?;
    text.lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .flat_map(|l| l.split(|c: char| c.is_whitespace() || c == ','))
        .filter(|t| !t.is_empty())
        .map(|t| parse_rational(t).map_err(Into::into))
        .collect()
}

/// Parses `[c*]z[^k]`; returns `None` when `spec` is not of that shape.
fn parse_monomial(spec: &str) -> Result<Option<Vec<Rational>>> {
    let s: String = spec.chars().filter(|c| !c.is_whitespace()).collect();
    let Some(zpos) = s.find('z') else {
        return Ok(None);
    };
    let (head, tail) = (&s[..zpos], &s[zpos + 1..]);
    let coef = match head {
        "" => Rational::from_integer(1.into()),
        "-" => Rational::from_integer((-1).into()),
        h => match h.strip_suffix('*') {
            Some(c) => parse_rational(c)?,
            None => return Ok(None),
        },
    };
    let k: usize = match tail {
        "" => 1,
        t => match t.strip_prefix('^') {
            Some(e) => e
                .parse()
                .with_context(|| format!("bad exponent in {spec:?}"))?,
            None => return Ok(None),
        },
    };
    if k == 0 {
        bail!("Schwarz functions vanish at the origin; exponent must be positive");
    }
    let mut v = vec![Rational::from_integer(0.into()); k];
    v[k - 1] = coef;
    Ok(Some(v))
}

fn parse_pair(v: &[String]) -> Result<(Rational, Rational)> {
    match v {
        [a, b] => Ok((parse_rational(a)?, parse_rational(b)?)),
        _ => bail!("expected two rationals"),
    }
}

fn parse_rect(v: &[String]) -> Result<Rect> {
    if v.len() != 4 {
        bail!("--box takes four rationals: p_lo p_hi x_lo x_hi");
    }
    let q: Vec<Rational> = v
        .iter()
        .map(|s| parse_rational(s))
        .collect::<std::result::Result<_, _>>()?;
    Ok(Rect::new(
        q[0].clone(),
        q[1].clone(),
        q[2].clone(),
        q[3].clone(),
    )?)
}

fn bernstein_certify(
    out: &Output,
    f: &BiPoly,
    rect: &Rect,
    max_depth: usize,
    rule: Option<&CornerRule>,
    path: Option<&Path>,
) -> Result<u8> {
    let cert = certify_positive(f, rect, max_depth, rule);
    let summary = validate(&cert, f)?;
    let mut report = VerificationReport::assemble(
        format!("polynomial is positive on {rect}"),
        None,
        vec![SubCheck::new(
            "certificate",
            summary.success(),
            format!("{} leaves, {} failed", summary.leaves, summary.failed),
        )],
        None,
    );
    report.certificate_summary = Some(summary);
    if let Some(path) = path {
        write_file(path, &cert.to_json())?;
        report.artifacts.push(path.display().to_string());
    }
    emit(out, report)
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).with_context(|| format!("writing {}", path.display()))
}

/// Prints a report, writes it if asked, and returns its exit code.
fn emit(out: &Output, mut report: VerificationReport) -> Result<u8> {
    if let Some(path) = &out.report {
        report.artifacts.push(path.display().to_string());
        write_file(path, &report.to_json())?;
    }
    if out.json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.render());
    }
    Ok(match report.status {
        Status::Verified => 0,
        s => s.exit_code() as u8,
    })
}

fn print_value(
    out: &Output,
    value: serde_json::Value,
    text: impl FnOnce() -> String,
) -> Result<u8> {
    if let Some(path) = &out.report {
        write_file(path, &serde_json::to_string_pretty(&value)?)?;
    }
    if out.json {
        println!("{}", serde_json::to_string_pretty(&value)?);
    } else {
        println!("{}", text());
    }
    Ok(0)
}

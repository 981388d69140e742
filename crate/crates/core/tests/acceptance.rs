#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::type_complexity)]

//! Acceptance suite. Runs every criterion in order and prints one PASS/FAIL
//! line for each; exits nonzero if any criterion fails.

use std::collections::{BTreeSet, HashMap};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use num_complex::{Complex, Complex64};
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hankel_core::bernstein::{
    bound_above, corner_estimate, to_bernstein, validate, BiPoly, CornerSplit, NodeStatus,
    PositivityCertificate, Rect,
};
use hankel_core::gft::{
    caratheodory_from_schwarz, h2_envelope, h2_from_lz, h3_schwarz_poly, hankel2, hankel3,
    janowski_check, lz_parametrize, ma_minda_scan_with, schwarz_parametrize, schwarz_to_coeffs,
    y_max, H2Reduction, JanowskiParams, ParamTriple, PhiScanConfig, SchwarzCoeffs, YArgs,
};
use hankel_core::oracle::{disk_max, PolarGrid};
use hankel_core::pipelines::{
    a4_family, build_h3_reduction, h2_oracle, max_a4, verify_h2, verify_h3,
};
use hankel_core::radius::{
    h_prime_numerator, radius_g, solve_radius, RadiusProblem, DEFAULT_TOLERANCE,
};
use hankel_core::rational::{int, parse_rational, rat, ComplexQ, Rational};
use hankel_core::series::{member_from_schwarz, TruncSeries};

// Tolerances, pinned.
const Y_ORACLE_TOL: f64 = 1e-6;
const H2_ORACLE_SLACK: f64 = 1e-9;
const H2_ORACLE_MIN_SAMPLES: usize = 100_000;
const H3_ORACLE_REL: f64 = 1e-9;
const A4_VALUE: f64 = 0.338667;
const A4_VALUE_TOL: f64 = 1e-5;
const A4_WITNESS: f64 = 0.508001;
const A4_WITNESS_TOL: f64 = 1e-3;
const A4_FAMILY_TOL: f64 = 1e-6;
const RADIUS_GRID: i64 = 1000;
const RADIUS_WIDTH: f64 = 1e-12;
const RADIUS_BASELINE_GAMMA0: f64 = 0.335_278_400_446_203;
const RADIUS_BASELINE_GAMMA_HALF: f64 = 0.202_294_661_843_960_65;
const PHI_BOUNDARY_TOL: f64 = 1e-10;
const PHI_MAX_RADIUS: f64 = 1.0 - 1e-6;
const PROPERTY_CASES: usize = 200;

type Outcome = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 13] = [
        ("series coefficients of w = z, z^2, z^3", c01_series),
        ("Bernstein first round Q1..Q4", c02_first_round),
        ("Bernstein second round Q11..Q14", c03_second_round),
        ("Bernstein third round Q111..Q114", c04_third_round),
        ("corner estimate on [0,1/8]^2", c05_corner),
        ("certify-h3 end to end", c06_certify_h3),
        ("G2 bound 910", c07_g2),
        ("H2 chain", c08_h2),
        ("H3 identity and sharpness", c09_h3_identity),
        ("|a4| maximization", c10_a4),
        ("radius of convexity", c11_radius),
        ("Janowski and Ma-Minda scans", c12_scans),
        ("property suites", c13_properties),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("criterion {:>2} PASS  {name} ({secs:.2}s)", k + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name} ({secs:.2}s): {msg}", k + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

// ---------------------------------------------------------------------------
// helpers

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random rational in `[lo, hi]` with denominator at most `max_den`.
fn rand_q(r: &mut ChaCha8Rng, lo: &Rational, hi: &Rational, max_den: i64) -> Rational {
    let d = r.gen_range(1..=max_den);
    let k = r.gen_range(0..=d);
    lo + (hi - lo) * rat(k, d)
}

/// Random complex rational in the closed unit disk.
fn rand_disk(r: &mut ChaCha8Rng) -> ComplexQ {
    loop {
        let re = rand_q(r, &int(-1), &int(1), 64);
        let im = rand_q(r, &int(-1), &int(1), 64);
        if &re * &re + &im * &im <= int(1) {
            return Complex::new(re, im);
        }
    }
}

/// Exact rational point on the unit circle.
fn rand_circle(r: &mut ChaCha8Rng) -> ComplexQ {
    let t = rand_q(r, &int(-4), &int(4), 50);
    let den = int(1) + &t * &t;
    Complex::new((int(1) - &t * &t) / &den, int(2) * &t / &den)
}

fn rand_triple(r: &mut ChaCha8Rng) -> ParamTriple<Rational> {
    ParamTriple::new(rand_disk(r), rand_disk(r), rand_disk(r))
}

/// Box named by quadrant digits, e.g. "11" for the lower-left quarter of the
/// lower-left quarter of the unit square.
fn named(digits: &str) -> Rect {
    digits.chars().fold(Rect::unit(), |r, d| {
        r.quadrants()[d.to_digit(10).unwrap() as usize - 1].clone()
    })
}

struct PrintedMatrix {
    rect: Rect,
    rows: Vec<Vec<Rational>>,
}

fn printed_matrices() -> HashMap<String, PrintedMatrix> {
    let text = include_str!("data/bernstein_reference.txt");
    let mut out = HashMap::new();
    let mut lines = text
        .lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'));
    while let Some(header) = lines.next() {
        let h: Vec<&str> = header.split_whitespace().collect();
        let q = |s: &str| parse_rational(s).unwrap();
        let rect = Rect::new(q(h[1]), q(h[2]), q(h[3]), q(h[4])).unwrap();
        let rows = (0..7)
            .map(|_| lines.next().unwrap().split_whitespace().map(q).collect())
            .collect();
        out.insert(h[0].to_string(), PrintedMatrix { rect, rows });
    }
    out
}

/// Compares every entry of `B(poly, rect)` with the printed matrix and the
/// printed minimum.
fn check_patch(poly: &BiPoly, name: &str, key: &str, min: Rational) -> Outcome {
    let printed = printed_matrices();
    let m = printed.get(key).ok_or(format!("fixture {key} missing"))?;
    let rect = named(name);
    ensure!(m.rect == rect, "{key}: fixture box {} vs {}", m.rect, rect);
    let b = to_bernstein(poly, &rect);
    let mut compared = 0;
    for i in 0..=6 {
        for j in 0..=4 {
            ensure!(
                b.get(i, j) == &m.rows[i][j],
                "{key}[{i}][{j}] = {} but printed {}",
                b.get(i, j),
                m.rows[i][j]
            );
            compared += 1;
        }
    }
    ensure!(compared >= 10, "too few entries compared");
    ensure!(
        b.min_coeff() == min,
        "min B(F,{key}) = {} expected {min}",
        b.min_coeff()
    );
    Ok(())
}

fn f_poly() -> BiPoly {
    build_h3_reduction().expect("reduction builds").f
}

// ---------------------------------------------------------------------------
// criteria

fn c01_series() -> Outcome {
    let order = 6;
    let coeffs = |k: usize| {
        let w = TruncSeries::monomial(int(1), k, order);
        member_from_schwarz(&w, order).unwrap()
    };
    let f = coeffs(1);
    ensure!(
        [f.coeff(2), f.coeff(3), f.coeff(4)] == [int(1), rat(5, 8), rat(7, 24)],
        "w = z gives {f}"
    );
    let f = coeffs(2);
    ensure!(
        f.coeff(2).is_zero() && f.coeff(3) == rat(1, 2) && f.coeff(4).is_zero(),
        "w = z^2 gives {f}"
    );
    let f = coeffs(3);
    ensure!(
        f.coeff(2).is_zero()
            && f.coeff(3).is_zero()
            && f.coeff(4) == rat(1, 3)
            && f.coeff(5).is_zero(),
        "w = z^3 gives {f}"
    );
    Ok(())
}

fn c02_first_round() -> Outcome {
    let f = f_poly();
    check_patch(&f, "1", "F_Q1", rat(-34, 3))?;
    check_patch(&f, "2", "F_Q2", rat(5351, 40))?;
    check_patch(&f, "3", "F_Q3", rat(27783, 128))?;
    check_patch(&f, "4", "F_Q4", rat(13983, 64))?;
    let q1 = to_bernstein(&f, &named("1"));
    ensure!(
        q1.get(2, 0) == &rat(512, 15),
        "B(F,Q1)[2][0] = {}",
        q1.get(2, 0)
    );
    ensure!(
        q1.get(1, 1) == &rat(-34, 3),
        "B(F,Q1)[1][1] = {}",
        q1.get(1, 1)
    );
    ensure!(
        q1.max_coeff() == rat(25827, 64),
        "max B(F,Q1) = {}",
        q1.max_coeff()
    );
    let q3 = to_bernstein(&f, &named("3"));
    ensure!(
        q3.get(6, 0) == &int(963),
        "B(F,Q3)[6][0] = {}",
        q3.get(6, 0)
    );
    Ok(())
}

fn c03_second_round() -> Outcome {
    let f = f_poly();
    check_patch(&f, "11", "F_Q11", rat(-17, 6))?;
    check_patch(&f, "12", "F_Q12", rat(2191, 60))?;
    check_patch(&f, "13", "F_Q13", rat(1307517, 16384))?;
    check_patch(&f, "14", "F_Q14", rat(338553, 4096))?;
    // de Casteljau children agree with direct conversion
    let kids = to_bernstein(&f, &named("1")).subdivide();
    ensure!(
        kids[0].min_coeff() == rat(-17, 6),
        "subdivided Q11 min {}",
        kids[0].min_coeff()
    );
    Ok(())
}

fn c04_third_round() -> Outcome {
    let f = f_poly();
    check_patch(&f, "111", "F_Q111", rat(-17, 24))?;
    check_patch(&f, "112", "F_Q112", rat(59645, 6144))?;
    check_patch(&f, "113", "F_Q113", rat(195731055, 8388608))?;
    check_patch(&f, "114", "F_Q114", rat(209583495, 8388608))?;
    Ok(())
}

fn c05_corner() -> Outcome {
    let f = f_poly();
    let q111 = named("111");
    ensure!(
        q111 == Rect::new(int(0), rat(1, 8), int(0), rat(1, 8)).unwrap(),
        "Q111 = {q111}"
    );
    let split = CornerSplit::at_corner(&f, &q111, (&int(0), &int(0))).map_err(|e| e.to_string())?;
    ensure!(
        (
            split.quad_pp.clone(),
            split.quad_px.clone(),
            split.quad_xx.clone()
        ) == (int(2048), int(-1088), int(896)),
        "Q = {} p^2 + {} px + {} x^2",
        split.quad_pp,
        split.quad_px,
        split.quad_xx
    );
    ensure!(split.half_width == rat(1, 8), "h = {}", split.half_width);
    let est = corner_estimate(&split);
    ensure!(est.lambda == int(352), "lambda = {}", est.lambda);
    ensure!(
        est.tail_sum == rat(42177473, 131072),
        "tail = {}",
        est.tail_sum
    );
    ensure!(
        est.margin == rat(3959871, 131072),
        "margin = {}",
        est.margin
    );
    ensure!(est.success, "corner estimate did not succeed");
    Ok(())
}

fn c06_certify_h3() -> Outcome {
    let report = verify_h3(3, 8).map_err(|e| e.to_string())?;
    ensure!(
        report.verified(),
        "status {:?}\n{}",
        report.status,
        report.render()
    );
    ensure!(report.bound == Some(rat(1, 9)), "bound {:?}", report.bound);
    ensure!(
        report.bound.clone().unwrap() * int(9216) == int(1024),
        "scaled bound is not 1024"
    );
    let cert = report.certificate.as_ref().ok_or("no certificate")?;

    let leaves: BTreeSet<(String, String)> = cert
        .leaves()
        .iter()
        .map(|(_, n)| (n.rect.to_string(), format!("{:?}", n.status)))
        .collect();
    let mut expected = BTreeSet::new();
    for q in ["2", "3", "4", "12", "13", "14", "112", "113", "114"] {
        expected.insert((
            named(q).to_string(),
            format!("{:?}", NodeStatus::CoeffPositive),
        ));
    }
    expected.insert((
        named("111").to_string(),
        format!("{:?}", NodeStatus::CornerCertified),
    ));
    ensure!(cert.leaves().len() == 10, "{} leaves", cert.leaves().len());
    ensure!(leaves == expected, "leaf set differs: {leaves:?}");

    let f = f_poly();
    let summary = validate(cert, &f).map_err(|e| e.to_string())?;
    ensure!(summary.success(), "re-validation reports failures");
    let back = PositivityCertificate::from_json(&cert.to_json()).map_err(|e| e.to_string())?;
    validate(&back, &f).map_err(|e| e.to_string())?;
    ensure!(&back == cert, "JSON round trip changed the certificate");
    let oracle = report.oracle.as_ref().ok_or("no oracle stats")?;
    ensure!(
        oracle.observed_max <= 1024.0 * (1.0 + H3_ORACLE_REL),
        "oracle max {}",
        oracle.observed_max
    );
    Ok(())
}

fn c07_g2() -> Outcome {
    let red = build_h3_reduction().map_err(|e| e.to_string())?;
    let b = to_bernstein(&red.g2, &Rect::unit());
    ensure!(b.max_coeff() == int(910), "max {}", b.max_coeff());
    ensure!(b.get(0, 0).is_zero(), "b00 = {}", b.get(0, 0));
    ensure!(b.get(3, 3) == &int(910), "b33 = {}", b.get(3, 3));
    ensure!(
        (0..=4).all(|j| b.get(6, j) == &int(61)),
        "row 6 is not all 61"
    );
    ensure!(
        bound_above(&red.g2, &Rect::unit(), 0) == int(910),
        "bound_above differs"
    );
    let printed = printed_matrices();
    let m = &printed["G2_unit"];
    for i in 0..=6 {
        for j in 0..=4 {
            ensure!(
                b.get(i, j) == &m.rows[i][j],
                "G2[{i}][{j}] = {} printed {}",
                b.get(i, j),
                m.rows[i][j]
            );
        }
    }
    Ok(())
}

fn c08_h2() -> Outcome {
    let mut r = rng(8);
    for _ in 0..50 {
        let p = loop {
            let p = rand_q(&mut r, &int(0), &int(2), 997);
            if p.is_positive() && p < int(2) {
                break p;
            }
        };
        let red = H2Reduction::new(p.clone()).map_err(|e| e.to_string())?;
        let g1 = (int(768) - int(96) * &p * &p - int(5) * &p * &p * &p * &p) / int(3072);
        ensure!(red.product() == g1, "identity fails at p1 = {p}");
        ensure!(
            h2_envelope(&p).unwrap() == g1,
            "envelope differs at p1 = {p}"
        );
    }
    ensure!(h2_envelope(&int(0)).unwrap() == rat(1, 4), "p1 = 0");
    ensure!(h2_envelope(&int(2)).unwrap() == rat(19, 192), "p1 = 2");
    let w = SchwarzCoeffs::real(int(0), int(1), int(0), int(0));
    let h = hankel2(&schwarz_to_coeffs(&w));
    ensure!(h == Complex::new(rat(-1, 4), int(0)), "w = z^2 gives {h:?}");

    let stats = h2_oracle(32);
    ensure!(
        stats.samples >= H2_ORACLE_MIN_SAMPLES,
        "only {} samples",
        stats.samples
    );
    ensure!(
        stats.observed_max <= 0.25 + H2_ORACLE_SLACK,
        "oracle max {}",
        stats.observed_max
    );

    let report = verify_h2(32).map_err(|e| e.to_string())?;
    ensure!(
        report.verified() && report.bound == Some(rat(1, 4)),
        "{}",
        report.render()
    );
    Ok(())
}

fn c09_h3_identity() -> Outcome {
    let mut r = rng(9);
    let q = |r: &mut ChaCha8Rng| {
        Complex::new(
            rand_q(r, &int(-2), &int(2), 40),
            rand_q(r, &int(-2), &int(2), 40),
        )
    };
    for _ in 0..100 {
        let c = SchwarzCoeffs::new(q(&mut r), q(&mut r), q(&mut r), q(&mut r));
        let lhs = hankel3(&schwarz_to_coeffs(&c)) * Complex::new(int(9216), int(0));
        ensure!(lhs == h3_schwarz_poly(&c), "identity fails at {c:?}");
    }
    let w = SchwarzCoeffs::real(int(0), int(0), int(1), int(0));
    ensure!(
        h3_schwarz_poly(&w) == Complex::new(int(-1024), int(0)),
        "witness"
    );
    ensure!(
        hankel3(&schwarz_to_coeffs(&w)).re == rat(-1, 9),
        "witness H3"
    );
    Ok(())
}

fn c10_a4() -> Outcome {
    let m = max_a4(64, 2000).map_err(|e| e.to_string())?;
    ensure!(
        (m.value - A4_VALUE).abs() <= A4_VALUE_TOL,
        "max |a4| = {}",
        m.value
    );
    ensure!(
        (m.c1 - A4_WITNESS).abs() <= A4_WITNESS_TOL,
        "witness c1 = {}",
        m.c1
    );
    let v = a4_family(A4_WITNESS);
    ensure!(
        (v - A4_VALUE).abs() <= A4_FAMILY_TOL,
        "family at 0.508001 = {v}"
    );
    ensure!(
        (m.family_t - A4_WITNESS).abs() <= A4_WITNESS_TOL,
        "family maximizer {}",
        m.family_t
    );
    Ok(())
}

fn c11_radius() -> Outcome {
    let mut prev = radius_g(&int(0)).unwrap();
    ensure!(prev == int(1), "g(0) = {prev}");
    for k in 1..RADIUS_GRID {
        let x = rat(k, RADIUS_GRID);
        let g = radius_g(&x).unwrap();
        ensure!(g < prev, "g not decreasing at {x}");
        ensure!(
            h_prime_numerator(&x).is_positive(),
            "h' numerator not positive at {x}"
        );
        prev = g;
    }
    let s = solve_radius(&RadiusProblem::new(int(0), DEFAULT_TOLERANCE).unwrap())
        .map_err(|e| e.to_string())?;
    ensure!(s.root > 0.33 && s.root < 0.35, "root {}", s.root);
    ensure!(
        &s.hi - &s.lo <= Rational::from_float(RADIUS_WIDTH).unwrap(),
        "width {}",
        s.width
    );
    ensure!(
        radius_g(&s.lo).unwrap().is_positive() && radius_g(&s.hi).unwrap().is_negative(),
        "bracket"
    );
    ensure!(
        (s.root - RADIUS_BASELINE_GAMMA0).abs() <= RADIUS_WIDTH,
        "baseline drift: {}",
        s.root
    );
    let s = solve_radius(&RadiusProblem::new(rat(1, 2), DEFAULT_TOLERANCE).unwrap())
        .map_err(|e| e.to_string())?;
    ensure!(
        (s.root - RADIUS_BASELINE_GAMMA_HALF).abs() <= RADIUS_WIDTH,
        "gamma = 1/2 root {}",
        s.root
    );
    Ok(())
}

fn c12_scans() -> Outcome {
    let mut r = rng(12);
    let mut yes = 0;
    for _ in 0..10_000 {
        let d = r.gen_range(2..=200i64);
        let b = r.gen_range(-d + 1..d);
        let a = r.gen_range(b + 1..=d);
        let rep = janowski_check(&JanowskiParams::new(rat(a, d), rat(b, d)).unwrap());
        ensure!(
            rep.endpoint_test == rep.disk_test,
            "tests disagree at A={a}/{d}, B={b}/{d}"
        );
        yes += rep.subordinate() as usize;
    }
    ensure!(
        yes > 0 && yes < 10_000,
        "degenerate sample: {yes} subordinate"
    );

    let cfg = PhiScanConfig {
        radii: 64,
        phases: 128,
        boundary_points: 10_000,
    };
    let s = ma_minda_scan_with(cfg).map_err(|e| e.to_string())?;
    ensure!(
        s.boundary_points >= 10_000,
        "boundary grid {}",
        s.boundary_points
    );
    ensure!(
        (s.boundary_at_zero - 1.0).abs() <= PHI_BOUNDARY_TOL,
        "t = 0: {}",
        s.boundary_at_zero
    );
    ensure!(
        (s.boundary_at_pi - 1.0).abs() <= PHI_BOUNDARY_TOL,
        "t = pi: {}",
        s.boundary_at_pi
    );
    ensure!(
        s.boundary_min >= 1.0 - PHI_BOUNDARY_TOL,
        "boundary min {}",
        s.boundary_min
    );
    ensure!(
        s.min_modulus > 0.25 && s.max_modulus < 2.25,
        "|phi| range {} {}",
        s.min_modulus,
        s.max_modulus
    );
    ensure!(s.min_real_part > 0.0, "Re phi min {}", s.min_real_part);
    ensure!(
        s.max_starlike_ratio < 0.2,
        "|z/(8+3z)| max {}",
        s.max_starlike_ratio
    );
    ensure!(
        PHI_MAX_RADIUS == hankel_core::gft::MAX_SCAN_RADIUS,
        "scan radius"
    );
    Ok(())
}

fn rand_poly(r: &mut ChaCha8Rng) -> BiPoly {
    let (m, n) = (r.gen_range(0..=4), r.gen_range(0..=4));
    let terms: Vec<_> = (0..=m)
        .flat_map(|i| (0..=n).map(move |j| (i, j)))
        .map(|(i, j)| (i, j, rat(r.gen_range(-50..=50), r.gen_range(1..=9))))
        .collect();
    BiPoly::from_terms(m, n, terms).unwrap()
}

fn rand_rect(r: &mut ChaCha8Rng) -> Rect {
    let a = rand_q(r, &int(-2), &int(2), 16);
    let c = rand_q(r, &int(-2), &int(2), 16);
    let w = rand_q(r, &rat(1, 16), &int(2), 16);
    let z = rand_q(r, &rat(1, 16), &int(2), 16);
    Rect::new(a.clone(), a + w, c.clone(), c + z).unwrap()
}

fn rand_point(r: &mut ChaCha8Rng, b: &Rect) -> (Rational, Rational) {
    (
        rand_q(r, &b.p_lo, &b.p_hi, 97),
        rand_q(r, &b.x_lo, &b.x_hi, 97),
    )
}

fn c13_properties() -> Outcome {
    let mut r = rng(13);

    // enclosure soundness
    for _ in 0..PROPERTY_CASES {
        let (f, b) = (rand_poly(&mut r), rand_rect(&mut r));
        let (lo, hi) = to_bernstein(&f, &b).enclosure();
        let (p, x) = rand_point(&mut r, &b);
        let v = f.eval(&p, &x);
        ensure!(lo <= v && v <= hi, "enclosure [{lo}, {hi}] misses {v}");
    }

    // subdivision exactness and min monotonicity
    for _ in 0..PROPERTY_CASES {
        let (f, b) = (rand_poly(&mut r), rand_rect(&mut r));
        let parent = to_bernstein(&f, &b);
        for child in parent.subdivide() {
            let (p, x) = rand_point(&mut r, &child.rect);
            ensure!(
                child.eval(&p, &x) == f.eval(&p, &x),
                "child disagrees at ({p}, {x})"
            );
            ensure!(
                child.min_coeff() >= parent.min_coeff(),
                "child min below parent min"
            );
            ensure!(
                child.max_coeff() <= parent.max_coeff(),
                "child max above parent max"
            );
        }
        ensure!(
            bound_above(&f, &b, 1) <= bound_above(&f, &b, 0),
            "bound_above increased"
        );
    }

    // rotation invariance of |H2| and |H3|
    for _ in 0..PROPERTY_CASES {
        let c1 = rand_q(&mut r, &int(0), &int(1), 30);
        let c = schwarz_parametrize(c1, &rand_triple(&mut r)).unwrap();
        let lam = rand_circle(&mut r);
        let (a, b) = (schwarz_to_coeffs(&c), schwarz_to_coeffs(&c.rotate(&lam)));
        ensure!(
            hankel2(&a).norm_sqr() == hankel2(&b).norm_sqr(),
            "|H2| not rotation invariant"
        );
        ensure!(
            hankel3(&a).norm_sqr() == hankel3(&b).norm_sqr(),
            "|H3| not rotation invariant"
        );
    }

    // Y(A, B, C) against a disk search
    for _ in 0..PROPERTY_CASES {
        let y = YArgs::new(
            r.gen_range(-3.0..3.0),
            r.gen_range(-3.0..3.0),
            r.gen_range(-2.0..2.0),
        );
        let closed = y_max(y);
        let (oracle, _) = disk_max(
            |z: Complex64| y.objective(z),
            PolarGrid::closed(41, 96),
            6,
            2000,
        );
        ensure!(
            (closed.value - oracle).abs() <= Y_ORACLE_TOL,
            "Y{y:?} = {} ({}) but search finds {oracle}",
            closed.value,
            closed.branch
        );
    }

    // LZ coefficients stay in the Caratheodory class
    for _ in 0..PROPERTY_CASES {
        let p1 = rand_q(&mut r, &int(0), &int(2), 30);
        let p = lz_parametrize(p1, &rand_triple(&mut r)).unwrap();
        let ps = p.as_array();
        let four = int(4);
        for (n, pn) in ps.iter().enumerate() {
            ensure!(pn.norm_sqr() <= four, "|p_{}| > 2", n + 1);
            for s in 1..=n {
                let d = *pn - &(ps[n - s] * ps[s - 1]);
                ensure!(
                    d.norm_sqr() <= four,
                    "|p_{} - p_{} p_{}| > 2",
                    n + 1,
                    n - s + 1,
                    s
                );
            }
        }
    }

    // Schwarz and Caratheodory routes give the same a_2..a_4
    for _ in 0..PROPERTY_CASES {
        let c1 = rand_q(&mut r, &int(0), &int(1), 30);
        let c = schwarz_parametrize(c1, &rand_triple(&mut r)).unwrap();
        let a = schwarz_to_coeffs(&c);
        let via_p = hankel_core::gft::class_from_caratheodory(&caratheodory_from_schwarz(&c));
        ensure!(
            via_p == [a.a2.clone(), a.a3.clone(), a.a4.clone()],
            "routes disagree"
        );
    }

    // H2 from the LZ form matches the envelope bound
    for _ in 0..PROPERTY_CASES {
        let p1 = rand_q(&mut r, &int(0), &int(2), 30);
        let h = h2_from_lz(p1.clone(), &rand_triple(&mut r)).unwrap();
        let env = h2_envelope(&p1).unwrap();
        ensure!(
            h.norm_sqr() <= &env * &env,
            "|H2| above envelope at p1 = {p1}"
        );
    }
    Ok(())
}

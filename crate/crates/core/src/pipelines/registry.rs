//! Named end-to-end checks behind a common interface, so the CLI and tests can
//! run any of them by name.

use num_traits::Signed;

use super::a4::max_a4;
use super::h2::verify_h2;
use super::h3::verify_h3;
use super::report::{OracleStats, SubCheck, VerificationReport};
use crate::error::{Error, Result};
use crate::gft::{janowski_check, ma_minda_scan, JanowskiParams};
use crate::radius::{h_prime_positive, radius_g, solve_radius, RadiusProblem, DEFAULT_TOLERANCE};
use crate::rational::{int, rat};

pub trait Check: Send + Sync {
    fn name(&self) -> &'static str;
    fn description(&self) -> &'static str;
    fn run(&self) -> Result<VerificationReport>;
}

pub struct H2Check {
    pub grid: usize,
}

impl Check for H2Check {
    fn name(&self) -> &'static str {
        "h2"
    }
    fn description(&self) -> &'static str {
        "|H2(2)| <= 1/4 via the envelope reduction and a grid scan"
    }
    fn run(&self) -> Result<VerificationReport> {
        verify_h2(self.grid)
    }
}

pub struct H3Check {
    pub max_depth: usize,
    pub grid: usize,
}

impl Check for H3Check {
    fn name(&self) -> &'static str {
        "h3"
    }
    fn description(&self) -> &'static str {
        "|H3(1)| <= 1/9 via a Bernstein certificate and a grid scan"
    }
    fn run(&self) -> Result<VerificationReport> {
        verify_h3(self.max_depth, self.grid)
    }
}

pub struct A4Check {
    pub grid: usize,
    pub refine: usize,
}

/// Published value of `max |a_4|`, six decimals.
pub const A4_MAX: f64 = 0.338667;
pub const A4_WITNESS: f64 = 0.508001;

impl Check for A4Check {
    fn name(&self) -> &'static str {
        "a4"
    }
    fn description(&self) -> &'static str {
        "max |a4| = 0.338667 by grid search and refinement"
    }
    fn run(&self) -> Result<VerificationReport> {
        let r = max_a4(self.grid, self.refine)?;
        let checks = vec![
            SubCheck::new(
                "search value",
                (r.value - A4_MAX).abs() <= 1e-5,
                format!("{:.12} at c1 = {:.12}", r.value, r.c1),
            ),
            SubCheck::new(
                "witness",
                (r.c1 - A4_WITNESS).abs() <= 1e-3,
                format!(
                    "c1 = {:.12}, gamma = {:.6} + {:.6}i",
                    r.c1, r.gamma[0], r.gamma[1]
                ),
            ),
            SubCheck::new(
                "family",
                (r.family_value - A4_MAX).abs() <= 1e-6,
                format!("max {:.12} at t = {:.12}", r.family_value, r.family_t),
            ),
        ];
        let stats = OracleStats::new(r.samples, r.value, A4_MAX + 1e-5);
        Ok(VerificationReport::assemble(
            "max |a4| = 0.338667",
            None,
            checks,
            Some(stats),
        ))
    }
}

pub struct RadiusCheck {
    pub grid: i64,
}

impl Check for RadiusCheck {
    fn name(&self) -> &'static str {
        "radius"
    }
    fn description(&self) -> &'static str {
        "g is decreasing on (0,1) and g(r) = 0 has a bracketed root in (0.33, 0.35)"
    }
    fn run(&self) -> Result<VerificationReport> {
        let n = self.grid;
        let mut decreasing = true;
        let mut h_pos = true;
        let mut prev = radius_g(&int(0))?;
        for k in 1..n {
            let r = rat(k, n);
            let g = radius_g(&r)?;
            decreasing &= g < prev;
            h_pos &= h_prime_positive(&r)?;
            prev = g;
        }
        let sol = solve_radius(&RadiusProblem::new(int(0), DEFAULT_TOLERANCE)?)?;
        let checks = vec![
            SubCheck::new("g decreasing", decreasing, format!("{} rational points", n)),
            SubCheck::new("h' > 0", h_pos, format!("{} rational points", n - 1)),
            SubCheck::new(
                "root bracket",
                sol.root > 0.33
                    && sol.root < 0.35
                    && sol.width <= DEFAULT_TOLERANCE
                    && radius_g(&sol.lo)?.is_positive()
                    && radius_g(&sol.hi)?.is_negative(),
                format!("r0 = {:.15} in [{}, {}]", sol.root, sol.lo, sol.hi),
            ),
        ];
        Ok(VerificationReport::assemble(
            format!("radius of convexity r0 = {:.12}", sol.root),
            Some(sol.hi),
            checks,
            None,
        ))
    }
}

pub struct JanowskiCheck;

impl Check for JanowskiCheck {
    fn name(&self) -> &'static str {
        "janowski"
    }
    fn description(&self) -> &'static str {
        "disk containment for sample Janowski parameters"
    }
    fn run(&self) -> Result<VerificationReport> {
        let cases = [
            (int(1), int(0), false),
            (rat(1, 2), rat(-1, 4), true),
            (int(0), rat(-1, 2), true),
        ];
        let mut checks = Vec::new();
        for (a, b, expect) in cases {
            let r = janowski_check(&JanowskiParams::new(a.clone(), b.clone())?);
            checks.push(SubCheck::new(
                format!("A={a}, B={b}"),
                r.subordinate() == expect && r.disk_test == r.endpoint_test,
                format!(
                    "image [{}, {}], subordinate: {}",
                    r.left_end,
                    r.right_end,
                    r.subordinate()
                ),
            ));
        }
        Ok(VerificationReport::assemble(
            "Janowski subordination test",
            None,
            checks,
            None,
        ))
    }
}

pub struct PhiScanCheck {
    pub grid: usize,
}

impl Check for PhiScanCheck {
    fn name(&self) -> &'static str {
        "phi-scan"
    }
    fn description(&self) -> &'static str {
        "Ma-Minda properties of (1 + z/2)^2 on a polar grid"
    }
    fn run(&self) -> Result<VerificationReport> {
        let r = ma_minda_scan(self.grid)?;
        let checks = vec![
            SubCheck::new(
                "modulus",
                r.modulus_ok,
                format!("|phi| in [{:.12}, {:.12}]", r.min_modulus, r.max_modulus),
            ),
            SubCheck::new(
                "real part",
                r.real_part_ok,
                format!("min Re phi = {:.12}", r.min_real_part),
            ),
            SubCheck::new(
                "starlike",
                r.starlike_ok,
                format!("max |z/(8+3z)| = {:.12}", r.max_starlike_ratio),
            ),
            SubCheck::new(
                "boundary",
                r.boundary_ok,
                format!("min |phi(e^it) - 5/4|^2 = {:.12}", r.boundary_min),
            ),
        ];
        Ok(VerificationReport::assemble(
            "phi is a Ma-Minda function",
            None,
            checks,
            None,
        ))
    }
}

pub struct CheckRegistry {
    checks: Vec<Box<dyn Check>>,
}

impl Default for CheckRegistry {
    fn default() -> Self {
        Self::standard()
    }
}

impl CheckRegistry {
    pub fn empty() -> Self {
        Self { checks: Vec::new() }
    }

    /// Every built-in check with its default settings.
    pub fn standard() -> Self {
        let mut r = Self::empty();
        r.register(Box::new(H2Check { grid: 32 }));
        r.register(Box::new(H3Check {
            max_depth: 3,
            grid: 8,
        }));
        r.register(Box::new(A4Check {
            grid: 64,
            refine: 2000,
        }));
        r.register(Box::new(RadiusCheck { grid: 1000 }));
        r.register(Box::new(JanowskiCheck));
        r.register(Box::new(PhiScanCheck { grid: 32 }));
        r
    }

    /// Adds a check, replacing any existing one with the same name.
    pub fn register(&mut self, check: Box<dyn Check>) {
        self.checks.retain(|c| c.name() != check.name());
        self.checks.push(check);
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.checks.iter().map(|c| c.name()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn Check> {
        self.checks.iter().map(|c| c.as_ref())
    }

    pub fn get(&self, name: &str) -> Result<&dyn Check> {
        self.iter()
            .find(|c| c.name() == name)
            .ok_or_else(|| Error::UnknownCheck(name.to_string()))
    }

    pub fn run(&self, name: &str) -> Result<VerificationReport> {
        self.get(name)?.run()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lookup() {
        let r = CheckRegistry::standard();
        assert_eq!(
            r.names(),
            ["h2", "h3", "a4", "radius", "janowski", "phi-scan"]
        );
        assert!(matches!(r.get("nope"), Err(Error::UnknownCheck(_))));
    }

    #[test]
    fn register_replaces() {
        let mut r = CheckRegistry::standard();
        r.register(Box::new(H2Check { grid: 40 }));
        assert_eq!(r.names().len(), 6);
        assert_eq!(r.names().last(), Some(&"h2"));
    }

    #[test]
    fn cheap_checks_pass() {
        let r = CheckRegistry::standard();
        for name in ["janowski", "radius"] {
            assert!(r.run(name).unwrap().verified(), "{name}");
        }
    }
}

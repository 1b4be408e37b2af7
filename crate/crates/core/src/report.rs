//! Verification reports and the named suites run by `e8g3 verify`.
//!
//! Reports carry no thread counts or timings other than `wall_time_ms`, so
//! two runs with the same fixtures and seed serialize identically once that
//! field is dropped.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::time::Instant;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::genus2::{self, jacobian, sections, sp4};
use crate::gradedlie::GradedLie;
use crate::heis::Heis;
use crate::rootsys::{self, build_root_system, elliptic_order3, pairing, rank_f3, LatticeVector};
use crate::vinberg::{self, cusp, kostant, reducible, wedge::WedgeModel, Q};

pub const REPORT_FORMAT: &str = "e8g3-report";
pub const REPORT_VERSION: u32 = 1;

pub const CUSP_FIXTURE_FILE: &str = "cusp_cases.json";
pub const SECTIONS_FIXTURE_FILE: &str = "sections.json";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    fn of(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    /// For skipped checks, the reason.
    pub detail: String,
    /// Exact slack as "num/den".
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub slack: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub format: String,
    pub version: u32,
    pub suite: String,
    pub seed: u64,
    pub pass: bool,
    pub fixture_digest: String,
    pub checks: Vec<Check>,
    pub wall_time_ms: u64,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// One line per check, then a summary line.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skipped => "SKIP",
            };
            s.push_str(&format!("{tag} {}", c.name));
            if !c.detail.is_empty() {
                s.push_str(&format!("  {}", c.detail));
            }
            if let Some(sl) = &c.slack {
                s.push_str(&format!("  slack {sl}"));
            }
            s.push('\n');
        }
        let failed = self.checks.iter().filter(|c| c.status == Status::Fail).count();
        let skipped = self.checks.iter().filter(|c| c.status == Status::Skipped).count();
        s.push_str(&format!(
            "{}: {} checks, {failed} failed, {skipped} skipped, {} ms\n",
            self.suite,
            self.checks.len(),
            self.wall_time_ms
        ));
        s
    }

    pub fn failed(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Rootsys,
    Heis,
    Gradedlie,
    Cusp,
    Sections,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 6] = ["rootsys", "heis", "gradedlie", "cusp", "sections", "all"];

    pub fn name(&self) -> &'static str {
        Self::NAMES[*self as usize]
    }

    fn parts(&self) -> Vec<Suite> {
        match self {
            Suite::All => vec![Suite::Rootsys, Suite::Heis, Suite::Gradedlie, Suite::Cusp, Suite::Sections],
            s => vec![*s],
        }
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        use Suite::*;
        [Rootsys, Heis, Gradedlie, Cusp, Sections, All]
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}; expected one of {}", Suite::NAMES.join(", ")))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Fixture text together with where it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixtureText {
    pub text: String,
    pub source: String,
}

impl FixtureText {
    fn embedded(text: &str) -> Self {
        FixtureText { text: text.to_string(), source: "embedded".into() }
    }

    fn read(path: &Path) -> std::io::Result<Self> {
        Ok(FixtureText { text: std::fs::read_to_string(path)?, source: path.display().to_string() })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixtures {
    pub cusp: FixtureText,
    pub sections: FixtureText,
}

impl Default for Fixtures {
    fn default() -> Self {
        Fixtures {
            cusp: FixtureText::embedded(cusp::DEFAULT_FIXTURE),
            sections: FixtureText::embedded(sections::DEFAULT_FIXTURE),
        }
    }
}

impl Fixtures {
    /// Files present in `dir` replace the embedded defaults one by one.
    pub fn from_dir(dir: &Path) -> std::io::Result<Self> {
        let mut fx = Fixtures::default();
        let c = dir.join(CUSP_FIXTURE_FILE);
        if c.exists() {
            fx.cusp = FixtureText::read(&c)?;
        }
        let s = dir.join(SECTIONS_FIXTURE_FILE);
        if s.exists() {
            fx.sections = FixtureText::read(&s)?;
        }
        Ok(fx)
    }

    /// Precedence: `flag` > `env_dir` > embedded. For `all` the flag names a
    /// directory, for `cusp` and `sections` a single file; other suites take
    /// no fixture.
    pub fn resolve(suite: Suite, flag: Option<&Path>, env_dir: Option<&Path>) -> Result<Self, String> {
        let mut fx = match env_dir {
            Some(d) => Fixtures::from_dir(d).map_err(|e| format!("{}: {e}", d.display()))?,
            None => Fixtures::default(),
        };
        let Some(p) = flag else {
            return Ok(fx);
        };
        let read = |p: &Path| FixtureText::read(p).map_err(|e| format!("{}: {e}", p.display()));
        match suite {
            Suite::Cusp => fx.cusp = read(p)?,
            Suite::Sections => fx.sections = read(p)?,
            Suite::All => {
                if !p.is_dir() {
                    return Err(format!("--fixture for `all` must be a directory: {}", p.display()));
                }
                fx = Fixtures::from_dir(p).map_err(|e| format!("{}: {e}", p.display()))?;
            }
            s => return Err(format!("suite {s} takes no fixture")),
        }
        Ok(fx)
    }
}

/// Rationals in reports are always written "num/den".
pub fn ratio_string(x: &Q) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

fn fixture_digest(suite: Suite, fx: &Fixtures) -> String {
    let mut used: Vec<(&str, &str)> = Vec::new();
    let parts = suite.parts();
    if parts.contains(&Suite::Cusp) {
        used.push((CUSP_FIXTURE_FILE, &fx.cusp.text));
    }
    if parts.contains(&Suite::Sections) {
        used.push((SECTIONS_FIXTURE_FILE, &fx.sections.text));
    }
    if used.is_empty() {
        return "none".into();
    }
    let mut h = Sha256::new();
    for (name, text) in used {
        h.update(name.as_bytes());
        h.update(b"\n");
        h.update(text.as_bytes());
    }
    hex::encode(h.finalize())
}

struct Checks {
    prefix: &'static str,
    out: Vec<Check>,
}

impl Checks {
    fn new(prefix: &'static str) -> Self {
        Checks { prefix, out: Vec::new() }
    }

    fn push(&mut self, name: impl fmt::Display, ok: bool, detail: impl Into<String>) {
        self.push_status(name, Status::of(ok), detail, None);
    }

    fn push_status(&mut self, name: impl fmt::Display, status: Status, detail: impl Into<String>, slack: Option<String>) {
        self.out.push(Check { name: format!("{}.{name}", self.prefix), status, detail: detail.into(), slack });
    }
}

/// Run a suite with the given fixtures and sampling seed.
pub fn run(suite: Suite, fixtures: &Fixtures, seed: u64) -> VerificationReport {
    let t = Instant::now();
    let mut checks = Vec::new();
    for s in suite.parts() {
        checks.extend(match s {
            Suite::Rootsys => rootsys_checks(),
            Suite::Heis => heis_checks(),
            Suite::Gradedlie => gradedlie_checks(seed),
            Suite::Cusp => cusp_checks(&fixtures.cusp.text, seed),
            Suite::Sections => sections_checks(&fixtures.sections.text, seed),
            Suite::All => unreachable!(),
        });
    }
    let pass = checks.iter().all(|c| c.status != Status::Fail);
    VerificationReport {
        format: REPORT_FORMAT.into(),
        version: REPORT_VERSION,
        suite: suite.name().into(),
        seed,
        pass,
        fixture_digest: fixture_digest(suite, fixtures),
        checks,
        wall_time_ms: t.elapsed().as_millis() as u64,
    }
}

fn rootsys_checks() -> Vec<Check> {
    let mut c = Checks::new("rootsys");
    let rs = build_root_system();
    let by_sum = |s: i64| rs.roots.iter().filter(|r| r.coord_sum() == s).count();
    let split = (by_sum(0), by_sum(3), by_sum(6));
    c.push("root_count", rs.len() == 240 && split == (72, 84, 84), format!("{} roots, split {split:?}", rs.len()));

    // second route: norm-2 vectors with a {-1,0,1} representative
    let mut boxed = std::collections::HashSet::new();
    for n in 0..3i64.pow(9) {
        let mut v = [0i64; 9];
        let mut m = n;
        for x in v.iter_mut() {
            *x = m % 3 - 1;
            m /= 3;
        }
        if v.iter().sum::<i64>() % 3 == 0 {
            let lv = LatticeVector::new(v).expect("sum divisible by 3");
            if lv.norm() == 2 {
                boxed.insert(lv);
            }
        }
    }
    c.push(
        "root_count_box",
        boxed.len() == 240 && boxed.iter().all(|v| rs.is_root(v)),
        format!("{} norm-2 classes in the box", boxed.len()),
    );

    let weights = vinberg::all_weights();
    let mismatches = weights
        .iter()
        .flat_map(|a| weights.iter().map(move |b| (a, b)))
        .filter(|(a, b)| pairing(&a.lattice(), &b.lattice()) != vinberg::intersection_pairing(a, b))
        .count();
    c.push(
        "intersection_table",
        weights.len() == 84 && mismatches == 0,
        format!("{} pairs, {mismatches} mismatches", weights.len() * weights.len()),
    );

    let s0 = vinberg::verify_s0_basis(&rs);
    c.push(
        "s0_basis",
        s0.matches_s0 && s0.is_e8_cartan && s0.unit_roots.len() == 8,
        format!("{} roots with x-value 1, E8 Cartan {}", s0.unit_roots.len(), s0.is_e8_cartan),
    );
    c.push("x_values_nonzero", s0.all_nonzero, "alpha(x) in Z \\ {0} on all roots");

    let sums = rootsys::sum_rule_failures(&rs);
    c.push("sum_rule", sums.is_empty(), format!("{} pairs, {} failures", rs.len() * rs.len(), sums.len()));

    let want: BTreeMap<i64, usize> = [(-2, 1), (-1, 56), (0, 126), (1, 56), (2, 1)].into();
    let bad_rows = (0..rs.len())
        .filter(|&i| {
            let mut h = BTreeMap::new();
            for j in 0..rs.len() {
                *h.entry(rs.pair(i, j)).or_insert(0usize) += 1;
            }
            h != want
        })
        .count();
    c.push("pairing_histogram", bad_rows == 0, format!("{bad_rows} roots off (2:1, 1:56, 0:126, -1:56, -2:1)"));

    let ell = match elliptic_order3(&rs) {
        Ok(e) => e,
        Err(e) => {
            c.push("elliptic", false, e.to_string());
            return c.out;
        }
    };
    let diag = ell.snf.diagonal();
    c.push(
        "elliptic",
        diag == vec![1, 1, 1, 1, 3, 3, 3, 3],
        format!("w^3 = 1, no fixed vectors, elementary divisors {diag:?}"),
    );

    let reps = &ell.orbit_reps;
    let rep_classes: std::collections::BTreeSet<_> = reps.iter().map(|&r| ell.root_class[r]).collect();
    let constant_on_orbits = (0..rs.len()).all(|i| {
        let o = ell.orbit_of(i);
        o.iter().all(|&j| ell.root_class[j] == ell.root_class[i])
    });
    let ok = reps.len() == 80
        && rep_classes.len() == 80
        && rep_classes.iter().all(|k| !k.is_zero())
        && constant_on_orbits;
    c.push("orbit_classes", ok, format!("{} orbits onto {} nonzero classes", reps.len(), rep_classes.len()));

    let g = ell.gram;
    let alternating = (0..4).all(|i| g[i][i] == 0 && (0..4).all(|j| (g[i][j] + g[j][i]) % 3 == 0));
    let rank = rank_f3(&g);
    c.push("coinvariant_pairing", alternating && rank == 4, format!("alternating {alternating}, rank {rank} over F3"));

    let (checked, bad) = rootsys::weyl_negative_exceptions(&rs, &ell);
    c.push("weyl_negative", checked > 0 && bad.is_empty(), format!("{checked} pairs with a root sum, {} exceptions", bad.len()));
    c.out
}

fn heis_checks() -> Vec<Check> {
    let mut c = Checks::new("heis");
    let rs = build_root_system();
    let ell = match elliptic_order3(&rs) {
        Ok(e) => e,
        Err(e) => {
            c.push("setup", false, e.to_string());
            return c.out;
        }
    };
    let h = match Heis::new(&ell) {
        Ok(h) => h,
        Err(e) => {
            c.push("symplectic_basis", false, e.to_string());
            return c.out;
        }
    };
    let b = &h.basis;
    let ok = (0..2).all(|i| {
        (0..2).all(|j| {
            h.pairing(&b.e[i], &b.f[j]) == (i == j) as u8
                && h.pairing(&b.e[i], &b.e[j]) == 0
                && h.pairing(&b.f[i], &b.f[j]) == 0
        })
    });
    c.push("symplectic_basis", ok, "<e_i, f_j> = delta_ij, e and f isotropic");
    let n = h.group_law_failures();
    c.push("group_law", n == 0, format!("{n} failures over 243 elements"));
    let n = h.homomorphism_failures();
    c.push("rho_homomorphism", n == 0, format!("{} pairs, {n} failures", 243 * 243));
    let d = h.commutant_dimension();
    c.push("irreducible", d == 1, format!("commutant dimension {d}"));
    c.out
}

fn gradedlie_checks(seed: u64) -> Vec<Check> {
    let mut c = Checks::new("gradedlie");
    let lie = GradedLie::build();
    let j = lie.verify_jacobi();
    c.push(
        "jacobi",
        j.violations.is_empty(),
        format!("{} triples, {} pairs, {} violations", j.triples_checked, j.pairs_checked, j.violations.len()),
    );
    let d = lie.graded_decomposition();
    let dims = d.dims();
    c.push("grading_dims", dims == [80, 84, 84], format!("{dims:?}"));
    let gf: usize = (0..3).flat_map(|i| (0..3).map(move |k| (i, k))).map(|(i, k)| lie.grading_failures(&d, i, k)).sum();
    c.push("grading_bracket", gf == 0, format!("{gf} brackets outside g_(i+j)"));
    let ord = lie.theta_order();
    c.push("theta_order", ord == 3, format!("order {ord}"));
    let tf = lie.theta_automorphism_failures();
    c.push("theta_automorphism", tf == 0, format!("{tf} failures"));
    let rf = lie.rho_prime_failures();
    c.push("rho_prime_bracket", rf.is_empty(), format!("{} pairs, {} failures", 240 * 240, rf.len()));
    let (rank, traceless) = lie.rho_prime_image();
    c.push("rho_prime_image", rank == 80 && traceless, format!("dimension {rank}, traceless {traceless}"));
    let hm = lie.heis_action_mismatches();
    c.push("heis_actions", hm.is_empty(), format!("{} pairs, {} mismatches", 240 * 240, hm.len()));

    let model = WedgeModel::new();
    match kostant::compare_realizations(&lie, &model, 4, seed) {
        Ok(k) => {
            let h = &k.heisenberg;
            c.push(
                "kostant_relations",
                h.relations_exact && k.wedge.relations_exact,
                "[X,E] = 2E, [X,F] = -2F, [E,F] = X in both realizations",
            );
            c.push(
                "kostant_centralizers",
                h.ker_ad_e == 8 && h.zf_in_degree1 == 4 && k.agree,
                format!("dim ker ad E = {}, dim z(F) in degree 1 = {}", h.ker_ad_e, h.zf_in_degree1),
            );
            c.push("kostant", k.pass, format!("degrees {:?}, sum {}", h.degrees, k.degrees_sum));
        }
        Err(e) => c.push("kostant", false, e.to_string()),
    }
    c.out
}

fn min_slack(values: impl Iterator<Item = Q>) -> Option<Q> {
    values.min()
}

fn parse_q(s: &str) -> Option<Q> {
    let t = s.rsplit(": ").next().unwrap_or(s);
    Q::from_str(t).ok()
}

fn cusp_checks(text: &str, seed: u64) -> Vec<Check> {
    let mut c = Checks::new("cusp");
    let report = match cusp::verify_cusp_theorem_with(text, 100, seed) {
        Ok(r) => r,
        Err(e) => {
            c.push("fixture", false, e.to_string());
            return c.out;
        }
    };
    c.push("fixture", report.fixture_roundtrip, format!("version {}, byte-exact round trip", report.fixture_version));
    c.push("case_count", report.cases.len() == 14, format!("{} cases", report.cases.len()));
    for case in &report.cases {
        let slacks: Vec<Q> = [0usize, 1, 3]
            .iter()
            .filter_map(|&k| case.conditions.get(k))
            .flat_map(|cond| cond.slack.iter().filter_map(|s| parse_q(s)))
            .collect();
        let conds: Vec<String> = case
            .conditions
            .iter()
            .zip(["i", "ii", "iii", "iv"])
            .map(|(r, k)| format!("({k}) {}", if r.pass { "ok" } else { "FAIL" }))
            .collect();
        let mut detail = format!("|M0'| = {}, |M0''| = {}, {}", case.m0_prime_size, case.m0_dblprime_size, conds.join(" "));
        if let Some(s) = &case.sampled {
            detail.push_str(&format!(", {} sampled sets, {} failures", s.samples, s.failures.len()));
        }
        if !case.structure_failures.is_empty() {
            detail.push_str(&format!(", structure: {}", case.structure_failures.join("; ")));
        }
        c.push_status(
            format!("case {}", case.label),
            Status::of(case.pass),
            detail,
            min_slack(slacks.into_iter()).map(|q| ratio_string(&q)),
        );
    }
    let sm = &report.small_m0;
    c.push_status(
        "small_m0",
        Status::of(sm.pass),
        format!("{} closed sets of size <= {} by size {:?}, {} failures", sm.total, sm.max_size, sm.counts, sm.failures.len()),
        parse_q(&sm.min_slack).map(|q| ratio_string(&q)),
    );
    c.push("negative_control", report.negative_control_detected, "zeroing f'((456)) in case f1 breaks (iv)");

    let model = WedgeModel::new();
    for o in reducible::run_all(&model, seed) {
        let status = match o.status {
            reducible::Status::Pass => Status::Pass,
            reducible::Status::Fail => Status::Fail,
            reducible::Status::Skipped => Status::Skipped,
        };
        let mut detail = format!("closure size {}, {}", o.closure_size, o.criterion);
        if !o.detail.is_empty() {
            detail.push_str(&format!(", {}", o.detail));
        }
        c.push_status(format!("reducible {}", o.label), status, detail, None);
    }
    c.out
}

fn sections_checks(text: &str, seed: u64) -> Vec<Check> {
    let mut c = Checks::new("sections");
    for a in [1u32, 2, 3, 5, 10] {
        let fast = genus2::enumerate_min(&a.into());
        let brute = genus2::enumerate_min_bruteforce(a);
        c.push(format!("enumerate_min a={a}"), fast == brute, format!("{} quintics, brute force {}", fast.len(), brute.len()));
    }
    for (i, curve) in jacobian::f7_fixture_curves().iter().enumerate() {
        let g = jacobian::check_group_order(curve, 2000, seed.wrapping_add(i as u64));
        c.push(
            format!("group_order_f7 {}", g.f),
            g.pass,
            format!("enumerated {}, zeta {}", g.enumerated, g.zeta.order),
        );
    }

    let fx = sections::SectionFixture::parse(text);
    match fx.and_then(|fx| sections::verify_fixture(&fx)) {
        Ok(r) => {
            let hist = |h: &BTreeMap<i64, usize>| {
                h.iter().rev().map(|(k, v)| format!("{k}:{v}")).collect::<Vec<_>>().join(" ")
            };
            c.push(
                "fixture_sections",
                r.count == 240 && r.matches_recorded && r.all_satisfy_equation,
                format!("q = {}, f = {}, {} sections", r.q, r.f, r.count),
            );
            c.push(
                "fixture_symmetries",
                r.closed_under_negation && r.twist_free_and_closed && r.separable_pairs && r.symmetric,
                "closed under negation and the mu3 twist, separable pair loci",
            );
            c.push(
                "fixture_histogram",
                r.histogram_uniform && r.histogram == r.expected_histogram,
                format!("every section: {}", hist(&r.histogram)),
            );
            c.push("fixture_gram", r.gram_rank == 8, format!("rank {}", r.gram_rank));
            c.push(
                "fixture_weil",
                r.weil_alternating && r.weil_twist_invariant,
                "Weil exponent alternating and twist invariant",
            );
            c.push("fixture_3torsion", r.all_3torsion, format!("#J = {}", r.jacobian_order));
            let fibers: Vec<String> = r.fiber_sizes.iter().map(|(k, v)| format!("{v} of size {k}")).collect();
            c.push(
                "fixture_classes",
                r.classes == 80 && r.fiber_sizes.get(&3) == Some(&80) && r.fiber_sizes.len() == 1 && r.fibers_are_twist_orbits,
                format!("{} nonzero classes, fibers {}", r.classes, fibers.join(", ")),
            );
            c.push("fixture", r.pass, "all fixture checks");
        }
        Err(e) => c.push("fixture", false, e.to_string()),
    }

    let s = sp4::verify_sp4();
    let interior = {
        let d: Q = parse_q(&s.density).unwrap_or_default();
        d.is_positive() && d < Q::from_integer(1.into()) && !d.is_zero()
    };
    let density = parse_q(&s.density).map_or_else(|| s.density.clone(), |q| ratio_string(&q));
    c.push(
        "sp4_density",
        s.pass && interior,
        format!(
            "order {} direct, {} generated, {} classes, |C| = {} both ways, density {density}",
            s.order_direct, s.order_generated, s.classes, s.eigen_one_direct
        ),
    );
    c.out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_roundtrip() {
        for n in Suite::NAMES {
            assert_eq!(n.parse::<Suite>().unwrap().name(), n);
        }
        assert!("everything".parse::<Suite>().is_err());
    }

    #[test]
    fn ratio_strings() {
        assert_eq!(ratio_string(&vinberg::q(3, 1)), "3/1");
        assert_eq!(ratio_string(&vinberg::q(-4, 6)), "-2/3");
        assert_eq!(parse_q("(123): 4/3"), Some(vinberg::q(4, 3)));
        assert_eq!(parse_q("7"), Some(vinberg::q(7, 1)));
    }

    #[test]
    fn digest_depends_on_used_fixtures() {
        let fx = Fixtures::default();
        assert_eq!(fixture_digest(Suite::Rootsys, &fx), "none");
        let mut other = fx.clone();
        other.cusp.text.push(' ');
        assert_ne!(fixture_digest(Suite::Cusp, &fx), fixture_digest(Suite::Cusp, &other));
        assert_eq!(fixture_digest(Suite::Sections, &fx), fixture_digest(Suite::Sections, &other));
    }

    #[test]
    fn pass_ignores_skipped() {
        let r = run(Suite::Heis, &Fixtures::default(), 0);
        assert!(r.pass, "{}", r.to_text());
        let mut r2 = r.clone();
        r2.checks.push(Check { name: "x".into(), status: Status::Skipped, detail: "reason".into(), slack: None });
        assert!(r2.checks.iter().all(|c| c.status != Status::Fail));
    }

    #[test]
    fn rootsys_suite_passes() {
        let r = run(Suite::Rootsys, &Fixtures::default(), 0);
        assert!(r.pass, "{}", r.to_text());
        assert_eq!(r.fixture_digest, "none");
    }

    #[test]
    fn broken_section_fixture_fails_cleanly() {
        let checks = sections_checks("{\"format\": \"nope\"}", 0);
        let fx = checks.iter().find(|c| c.name == "sections.fixture").unwrap();
        assert_eq!(fx.status, Status::Fail);
    }

    #[test]
    fn resolve_precedence() {
        let dir = tempfile::tempdir().unwrap();
        std::fs::write(dir.path().join(SECTIONS_FIXTURE_FILE), "env").unwrap();
        let file = dir.path().join("flag.json");
        std::fs::write(&file, "flag").unwrap();
        let fx = Fixtures::resolve(Suite::Sections, None, Some(dir.path())).unwrap();
        assert_eq!(fx.sections.text, "env");
        assert_eq!(fx.cusp.source, "embedded");
        let fx = Fixtures::resolve(Suite::Sections, Some(&file), Some(dir.path())).unwrap();
        assert_eq!(fx.sections.text, "flag");
        assert!(Fixtures::resolve(Suite::Heis, Some(&file), None).is_err());
        assert!(Fixtures::resolve(Suite::All, Some(&file), None).is_err());
    }
}

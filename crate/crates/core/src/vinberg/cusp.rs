//! Cusp certificates: the (M₀′, M₀″, M₁′, f′, g) data, their verification,
//! sampled intermediate sets and the exhaustive small-M₀ sweep.

use std::collections::{BTreeMap, HashSet};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{
    all_weights, closed_closure, fmt_q, is_phi_g_plus, leq_g, n_coeff, phi_v_plus, s_h, sum_phi_g_plus, Q,
    VinbergError, Weight, WeightSet,
};

pub const FIXTURE_FORMAT: &str = "e8g3-cusp-fixtures";
pub const FIXTURE_VERSION: u32 = 1;

/// The embedded fixture file.
pub const DEFAULT_FIXTURE: &str = include_str!("../../fixtures/cusp_cases.json");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rational {
    pub num: String,
    pub den: String,
}

impl Rational {
    pub fn to_q(&self) -> Result<Q, VinbergError> {
        let n: BigInt = self.num.parse().map_err(|_| VinbergError::Fixture(format!("bad numerator {}", self.num)))?;
        let d: BigInt = self.den.parse().map_err(|_| VinbergError::Fixture(format!("bad denominator {}", self.den)))?;
        if d.is_zero() {
            return Err(VinbergError::Fixture("zero denominator".into()));
        }
        Ok(Q::new(n, d))
    }

    pub fn from_q(x: &Q) -> Self {
        Rational { num: x.numer().to_string(), den: x.denom().to_string() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapRow {
    pub alpha: Weight,
    pub values: Vec<Option<Weight>>,
}

/// Table of the maps g₀, g₁, …, g₄,₂.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapTable {
    pub columns: Vec<String>,
    pub rows: Vec<MapRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropRow {
    pub alpha: Weight,
    pub g0_preimage: u32,
    pub values: Vec<Rational>,
}

/// The f₁…f₇ table on S_H.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropTable {
    pub m0_dblprime: Vec<Weight>,
    pub gammas: Vec<Weight>,
    pub columns: Vec<String>,
    pub rows: Vec<PropRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropCase {
    pub label: String,
    pub column: String,
    pub excluded: Weight,
    pub overrides: Vec<(Weight, Weight)>,
}

/// M₀′ = [Φ_V⁺ − (S_H ∪ exclude)] ∪ include.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct M0Prime {
    pub exclude: Vec<Weight>,
    pub include: Vec<Weight>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct M1Entry {
    pub alpha: Weight,
    pub f: Rational,
    pub preimage: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremCase {
    pub label: String,
    pub m0_prime: M0Prime,
    pub m0_dblprime: Vec<Weight>,
    pub map: String,
    pub m1_prime: Vec<M1Entry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureFile {
    pub format: String,
    pub version: u32,
    pub table1: MapTable,
    pub prop_table: PropTable,
    pub prop_cases: Vec<PropCase>,
    pub theorem_cases: Vec<TheoremCase>,
}

impl FixtureFile {
    pub fn parse(text: &str) -> Result<Self, VinbergError> {
        let f: FixtureFile = serde_json::from_str(text).map_err(|e| VinbergError::Fixture(e.to_string()))?;
        if f.format != FIXTURE_FORMAT {
            return Err(VinbergError::Fixture(format!("unknown format {:?}", f.format)));
        }
        if f.version != FIXTURE_VERSION {
            return Err(VinbergError::Fixture(format!("unsupported version {}", f.version)));
        }
        let ncol = f.table1.columns.len();
        if f.table1.rows.iter().any(|r| r.values.len() != ncol) {
            return Err(VinbergError::Fixture("ragged map table".into()));
        }
        let pcol = f.prop_table.columns.len();
        if f.prop_table.rows.iter().any(|r| r.values.len() != pcol) {
            return Err(VinbergError::Fixture("ragged f table".into()));
        }
        Ok(f)
    }

    pub fn embedded() -> Self {
        Self::parse(DEFAULT_FIXTURE).expect("embedded fixture is valid")
    }

    pub fn to_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("fixture serializes")
    }

    /// Raw column of the map table.
    pub fn map_column(&self, name: &str) -> Result<BTreeMap<Weight, Weight>, VinbergError> {
        let c = self
            .table1
            .columns
            .iter()
            .position(|x| x == name)
            .ok_or_else(|| VinbergError::Fixture(format!("no map column {name}")))?;
        Ok(self.table1.rows.iter().filter_map(|r| r.values[c].map(|v| (r.alpha, v))).collect())
    }

    /// Flatten every tabulated case into a `CuspCase`.
    pub fn cases(&self) -> Result<Vec<CuspCase>, VinbergError> {
        let sh = WeightSet::from_iter(s_h());
        let base = phi_v_plus().minus(&sh);
        let mut out = Vec::new();

        let g0 = self.map_column("g0")?;
        let dbl = self.prop_table.m0_dblprime.clone();
        let dbl_set = closed_closure(&dbl).set();
        for pc in &self.prop_cases {
            let col = self
                .prop_table
                .columns
                .iter()
                .position(|x| *x == pc.column)
                .ok_or_else(|| VinbergError::Fixture(format!("no f column {}", pc.column)))?;
            let mut m0p = base;
            m0p.remove(&pc.excluded);
            let mut g = BTreeMap::new();
            for a in m0p.minus(&dbl_set).members() {
                let target = pc.overrides.iter().find(|(k, _)| *k == a).map(|(_, v)| *v).or(g0.get(&a).copied());
                match target {
                    Some(t) => {
                        g.insert(a, t);
                    }
                    None => return Err(VinbergError::Fixture(format!("{}: g0 undefined on {a}", pc.label))),
                }
            }
            let mut m1 = Vec::new();
            let mut printed = Vec::new();
            for r in &self.prop_table.rows {
                m1.push((r.alpha, r.values[col].to_q()?));
                printed.push((r.alpha, r.g0_preimage));
            }
            out.push(CuspCase {
                label: format!("prop {}", pc.label),
                m0_prime: m0p,
                m0_dblprime: dbl.clone(),
                m1_prime: m1,
                g,
                printed_table: g0.clone(),
                printed_preimage: printed,
                strict_domain: false,
            });
        }

        for tc in &self.theorem_cases {
            let mut m0p = base;
            for a in &tc.m0_prime.exclude {
                m0p.remove(a);
            }
            for a in &tc.m0_prime.include {
                m0p.insert(a);
            }
            let g = self.map_column(&tc.map)?;
            let mut m1 = Vec::new();
            let mut printed = Vec::new();
            for e in &tc.m1_prime {
                m1.push((e.alpha, e.f.to_q()?));
                printed.push((e.alpha, e.preimage));
            }
            out.push(CuspCase {
                label: format!("case {}", tc.label),
                m0_prime: m0p,
                m0_dblprime: tc.m0_dblprime.clone(),
                m1_prime: m1,
                printed_table: g.clone(),
                g,
                printed_preimage: printed,
                strict_domain: true,
            });
        }
        Ok(out)
    }
}

/// One certificate: M₀″ ⊆ M₀ ⊆ M₀′, weights f′ on M₁′ and g: M₀′ − M₀″ → M₁′.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CuspCase {
    pub label: String,
    pub m0_prime: WeightSet,
    /// Generators of M₀″ (which is their closure).
    pub m0_dblprime: Vec<Weight>,
    pub m1_prime: Vec<(Weight, Q)>,
    pub g: BTreeMap<Weight, Weight>,
    /// The table column the printed |g⁻¹| refer to.
    pub printed_table: BTreeMap<Weight, Weight>,
    pub printed_preimage: Vec<(Weight, u32)>,
    /// Whether the table column must be defined exactly on M₀′ − M₀″.
    pub strict_domain: bool,
}

impl CuspCase {
    pub fn m0_dblprime_set(&self) -> WeightSet {
        closed_closure(&self.m0_dblprime).set()
    }

    pub fn preimage(&self, a: &Weight) -> usize {
        self.g.values().filter(|v| *v == a).count()
    }

    pub fn f_prime(&self, a: &Weight) -> Option<&Q> {
        self.m1_prime.iter().find(|(b, _)| b == a).map(|(_, f)| f)
    }
}

fn weight_n(a: &Weight) -> [Q; 8] {
    n_coeff(&a.lattice())
}

/// ⟨ΣΦ_G⁺ − ΣM₀ + Σ f(α)α, ω̌_β⟩ for the eight β ∈ S_G.
pub fn positivity_vector(m0: &WeightSet, f: &[(Weight, Q)]) -> [Q; 8] {
    let mut acc = sum_phi_g_plus();
    for a in m0.members() {
        for (x, y) in acc.iter_mut().zip(weight_n(&a)) {
            *x -= y;
        }
    }
    for (a, c) in f {
        for (x, y) in acc.iter_mut().zip(weight_n(a)) {
            *x += y * c;
        }
    }
    acc
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionResult {
    pub name: &'static str,
    pub pass: bool,
    /// Exact slack values, "num/den".
    pub slack: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SampleReport {
    pub samples: usize,
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseReport {
    pub label: String,
    pub m0_prime_size: usize,
    pub m0_dblprime_size: usize,
    pub structure_failures: Vec<String>,
    pub conditions: Vec<ConditionResult>,
    /// Pairs with α − g(α) a sum of several positive roots rather than one.
    pub single_root_exceptions: Vec<String>,
    /// Tabulated |g⁻¹| that disagree with the map table (informational).
    pub printed_count_mismatches: Vec<String>,
    pub sampled: Option<SampleReport>,
    pub pass: bool,
}

/// Conditions (i)–(iv) plus the structural side conditions.
pub fn verify_cusp_case(c: &CuspCase) -> CaseReport {
    let mut structure = Vec::new();
    let m0p = c.m0_prime;
    let m0pp = c.m0_dblprime_set();
    if !m0p.is_up_closed() {
        structure.push("M0' is not closed".to_string());
    }
    if !m0pp.is_subset(&m0p) {
        structure.push("M0'' is not contained in M0'".to_string());
    }
    let m1 = WeightSet::from_iter(c.m1_prime.iter().map(|(a, _)| *a));
    if m1.len() != c.m1_prime.len() {
        structure.push("M1' has repeated entries".to_string());
    }
    if !m1.intersect(&m0p).is_empty() {
        structure.push(format!("M1' meets M0' in {}", m1.intersect(&m0p)));
    }
    if c.m1_prime.iter().any(|(_, f)| f.is_negative()) {
        structure.push("negative f'".to_string());
    }
    let domain = m0p.minus(&m0pp);
    let gdom = WeightSet::from_iter(c.g.keys().copied());
    if gdom != domain {
        structure.push(format!("g is defined on {gdom}, expected {domain}"));
    }
    if c.strict_domain {
        let tdom = WeightSet::from_iter(c.printed_table.keys().copied());
        if tdom != domain {
            structure.push(format!("table column is defined on {tdom}, expected {domain}"));
        }
    }
    for (a, b) in &c.g {
        if !m1.contains(b) {
            structure.push(format!("g({a}) = {b} lies outside M1'"));
        }
    }
    let mut printed_count_mismatches = Vec::new();
    for (a, n) in &c.printed_preimage {
        let got = c.printed_table.values().filter(|v| *v == a).count();
        if got != *n as usize {
            printed_count_mismatches.push(format!("printed |g^-1({a})| = {n}, table gives {got}"));
        }
    }

    // (i)
    let sum_f: Q = c.m1_prime.iter().map(|(_, f)| f.clone()).sum();
    let slack_i = Q::from_integer(m0p.len().into()) - sum_f;
    let cond_i = ConditionResult { name: "sum f' < |M0'|", pass: slack_i.is_positive(), slack: vec![fmt_q(&slack_i)] };

    // (ii)
    let v = positivity_vector(&m0p, &c.m1_prime);
    let cond_ii = ConditionResult {
        name: "positivity on all eight coweights",
        pass: v.iter().all(|x| x.is_positive()),
        slack: v.iter().map(fmt_q).collect(),
    };

    // (iii): only ⟨α − g(α), ω̌_β⟩ ≥ 0 enters the induction, so the check is
    // g(α) <_G α; entries where α − g(α) is not a single root are listed.
    let bad: Vec<String> = c
        .g
        .iter()
        .filter(|(a, b)| a == b || !leq_g(b, a))
        .map(|(a, b)| format!("{a} - {b}"))
        .collect();
    let single_root_exceptions: Vec<String> = c
        .g
        .iter()
        .filter(|(a, b)| !is_phi_g_plus(&(a.lattice() - b.lattice())))
        .map(|(a, b)| format!("{a} - {b}"))
        .collect();
    let cond_iii = ConditionResult {
        name: "alpha - g(alpha) is a nonzero sum of positive roots of G",
        pass: bad.is_empty(),
        slack: bad,
    };

    // (iv)
    let mut slack_iv = Vec::new();
    let mut pass_iv = true;
    for (a, f) in &c.m1_prime {
        let s = f - Q::from_integer(c.preimage(a).into());
        pass_iv &= !s.is_negative();
        slack_iv.push(format!("{a}: {}", fmt_q(&s)));
    }
    let cond_iv = ConditionResult { name: "f' >= |g^-1|", pass: pass_iv, slack: slack_iv };

    let conditions = vec![cond_i, cond_ii, cond_iii, cond_iv];
    let pass = structure.is_empty() && conditions.iter().all(|x| x.pass);
    CaseReport {
        label: c.label.clone(),
        m0_prime_size: m0p.len(),
        m0_dblprime_size: m0pp.len(),
        structure_failures: structure,
        conditions,
        single_root_exceptions,
        printed_count_mismatches,
        sampled: None,
        pass,
    }
}

/// Up-closed M₀ with M₀″ ⊆ M₀ ⊆ M₀′, grown from M₀″ by random addable elements.
pub fn random_intermediate(c: &CuspCase, rng: &mut ChaCha8Rng) -> WeightSet {
    let m0p = c.m0_prime;
    let mut m = c.m0_dblprime_set();
    let target = rng.gen_range(m.len()..=m0p.len());
    while m.len() < target {
        let addable: Vec<Weight> = m0p.minus(&m).members().into_iter().filter(|a| addable_to(&m, a)).collect();
        match addable.choose(rng) {
            Some(a) => m.insert(a),
            None => break,
        }
    }
    m
}

fn strict_up(a: &Weight) -> WeightSet {
    WeightSet::from_iter(all_weights().into_iter().filter(|b| b != a && leq_g(a, b)))
}

fn addable_to(m: &WeightSet, a: &Weight) -> bool {
    !m.contains(a) && strict_up(a).is_subset(m)
}

/// f(α) = f′(α) − |g⁻¹(α) ∩ (M₀′ − M₀)|, then both conditions checked directly for M₀.
pub fn check_intermediate(c: &CuspCase, m0: &WeightSet) -> Result<(), String> {
    let gone = c.m0_prime.minus(m0);
    let mut f = Vec::new();
    for (a, fp) in &c.m1_prime {
        let k = c.g.iter().filter(|(x, y)| *y == a && gone.contains(x)).count();
        let v = fp - Q::from_integer(k.into());
        if v.is_negative() {
            return Err(format!("f({a}) = {} < 0", fmt_q(&v)));
        }
        f.push((*a, v));
    }
    let sum: Q = f.iter().map(|(_, v)| v.clone()).sum();
    if sum >= Q::from_integer(m0.len().into()) {
        return Err(format!("sum f = {} >= |M0| = {}", fmt_q(&sum), m0.len()));
    }
    let v = positivity_vector(m0, &f);
    if let Some(i) = v.iter().position(|x| !x.is_positive()) {
        return Err(format!("coweight {} gives {}", i + 1, fmt_q(&v[i])));
    }
    Ok(())
}

fn label_seed(seed: u64, label: &str) -> u64 {
    label.bytes().fold(seed ^ 0x9e37_79b9_7f4a_7c15, |h, b| h.rotate_left(7) ^ u64::from(b))
}

pub fn sample_intermediates(c: &CuspCase, n: usize, seed: u64) -> SampleReport {
    let mut rng = ChaCha8Rng::seed_from_u64(label_seed(seed, &c.label));
    let mut failures = Vec::new();
    for _ in 0..n {
        let m = random_intermediate(c, &mut rng);
        if !m.is_up_closed() {
            failures.push(format!("sampled set {m} is not closed"));
        } else if let Err(e) = check_intermediate(c, &m) {
            failures.push(format!("{m}: {e}"));
        }
    }
    SampleReport { samples: n, failures }
}

/// Up-closed sets of size ≤ `max`, grouped by size; each checked for positivity with f = 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SmallM0Report {
    pub max_size: usize,
    pub counts: Vec<usize>,
    pub total: usize,
    pub failures: Vec<String>,
    /// Smallest coweight pairing seen over all enumerated sets.
    pub min_slack: String,
    pub pass: bool,
}

pub fn enumerate_small_m0(max: usize) -> SmallM0Report {
    let weights = all_weights();
    let ups: Vec<u128> = weights.iter().map(|a| strict_up(a).0).collect();
    let top = weights.iter().position(|a| *a == super::w(7, 8, 9)).expect("(789) present");
    let mut level: HashSet<u128> = HashSet::from([1u128 << top]);
    let mut counts = Vec::new();
    let mut all: Vec<u128> = Vec::new();
    for size in 1..=max {
        let mut v: Vec<u128> = level.iter().copied().collect();
        v.sort_unstable();
        counts.push(v.len());
        all.extend(&v);
        if size == max {
            break;
        }
        let mut next = HashSet::new();
        for m in &v {
            for (i, up) in ups.iter().enumerate() {
                if m >> i & 1 == 0 && up & !m == 0 {
                    next.insert(m | 1u128 << i);
                }
            }
        }
        level = next;
    }
    let base = sum_phi_g_plus();
    let ns: Vec<[Q; 8]> = weights.iter().map(weight_n).collect();
    let results: Vec<(Option<String>, Q)> = all
        .par_iter()
        .map(|&m| {
            let mut acc = base.clone();
            for (i, n) in ns.iter().enumerate() {
                if m >> i & 1 == 1 {
                    for (x, y) in acc.iter_mut().zip(n) {
                        *x -= y;
                    }
                }
            }
            let min = acc.iter().min().cloned().expect("eight entries");
            let fail = (!min.is_positive()).then(|| format!("{}", WeightSet(m)));
            (fail, min)
        })
        .collect();
    let failures: Vec<String> = results.iter().filter_map(|(f, _)| f.clone()).collect();
    let min_slack = results.iter().map(|(_, m)| m.clone()).min().unwrap_or_default();
    SmallM0Report {
        max_size: max,
        total: counts.iter().sum(),
        counts,
        pass: failures.is_empty(),
        failures,
        min_slack: fmt_q(&min_slack),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CuspTheoremReport {
    pub fixture_version: u32,
    pub fixture_roundtrip: bool,
    pub cases: Vec<CaseReport>,
    pub small_m0: SmallM0Report,
    /// The f₁ case with f′((456)) set to 0 must fail (iv).
    pub negative_control_detected: bool,
    pub samples_per_case: usize,
    pub seed: u64,
    pub pass: bool,
}

/// Every fixture case, sampled intermediates, the |M₀| ≤ 10 sweep and a
/// negative control.
pub fn verify_cusp_theorem_with(text: &str, samples: usize, seed: u64) -> Result<CuspTheoremReport, VinbergError> {
    let file = FixtureFile::parse(text)?;
    let fixture_roundtrip = file.to_pretty() == text.trim_end();
    let cases = file.cases()?;
    let mut reports: Vec<CaseReport> = cases
        .par_iter()
        .map(|c| {
            let mut r = verify_cusp_case(c);
            let s = sample_intermediates(c, samples, seed);
            r.pass &= s.failures.is_empty();
            r.sampled = Some(s);
            r
        })
        .collect();
    reports.sort_by(|a, b| a.label.cmp(&b.label));

    let negative_control_detected = match cases.iter().find(|c| c.label == "prop f1") {
        Some(c) => {
            let mut bad = c.clone();
            for (a, f) in bad.m1_prime.iter_mut() {
                if *a == super::w(4, 5, 6) {
                    *f = Q::zero();
                }
            }
            !verify_cusp_case(&bad).conditions[3].pass
        }
        None => false,
    };
    let small_m0 = enumerate_small_m0(10);
    let pass = fixture_roundtrip
        && reports.iter().all(|r| r.pass)
        && small_m0.pass
        && negative_control_detected
        && reports.len() == 14;
    Ok(CuspTheoremReport {
        fixture_version: file.version,
        fixture_roundtrip,
        cases: reports,
        small_m0,
        negative_control_detected,
        samples_per_case: samples,
        seed,
        pass,
    })
}

pub fn verify_cusp_theorem(seed: u64) -> CuspTheoremReport {
    verify_cusp_theorem_with(DEFAULT_FIXTURE, 100, seed).expect("embedded fixture is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vinberg::{q, w};

    #[test]
    fn fixture_roundtrip_is_byte_exact() {
        let f = FixtureFile::embedded();
        assert_eq!(f.to_pretty(), DEFAULT_FIXTURE.trim_end());
        assert_eq!(f.table1.rows.len(), 31);
        assert_eq!(f.prop_table.rows.len(), 8);
    }

    #[test]
    fn rational_parsing() {
        let r = Rational { num: "1041".into(), den: "512".into() };
        assert_eq!(r.to_q().unwrap(), q(1041, 512));
        assert_eq!(Rational::from_q(&q(6, 4)), Rational { num: "3".into(), den: "2".into() });
        assert!(Rational { num: "1".into(), den: "0".into() }.to_q().is_err());
    }

    #[test]
    fn version_is_checked() {
        let text = DEFAULT_FIXTURE.replacen("\"version\": 1", "\"version\": 2", 1);
        assert!(FixtureFile::parse(&text).is_err());
    }

    #[test]
    fn paper_values_present() {
        let cases = FixtureFile::embedded().cases().unwrap();
        let f1 = cases.iter().find(|c| c.label == "prop f1").unwrap();
        assert_eq!(f1.f_prime(&w(2, 6, 7)), Some(&q(1041, 512)));
        let c1 = cases.iter().find(|c| c.label == "case 1").unwrap();
        assert_eq!(c1.f_prime(&w(3, 4, 8)), Some(&q(53, 16)));
        assert_eq!(c1.preimage(&w(2, 6, 8)), 5);
    }

    #[test]
    fn every_case_passes() {
        for c in FixtureFile::embedded().cases().unwrap() {
            let r = verify_cusp_case(&c);
            assert!(r.pass, "{r:#?}");
        }
    }

    #[test]
    fn negative_control() {
        let cases = FixtureFile::embedded().cases().unwrap();
        let mut c = cases.into_iter().find(|c| c.label == "prop f1").unwrap();
        for (a, f) in c.m1_prime.iter_mut() {
            if *a == w(4, 5, 6) {
                *f = Q::zero();
            }
        }
        let r = verify_cusp_case(&c);
        assert!(!r.conditions[3].pass);
        assert!(r.conditions[0].pass);
    }

    #[test]
    fn single_top_weight() {
        let mut m = WeightSet::empty();
        m.insert(&w(7, 8, 9));
        let v = positivity_vector(&m, &[]);
        // ΣΦ_G⁺ − (789) = (8,14,18,20,20,18,14,8) − (1,2,3,4,5,6,4,2)/3
        let expect = [8, 14, 18, 20, 20, 18, 14, 8];
        let top = [1, 2, 3, 4, 5, 6, 4, 2];
        for i in 0..8 {
            assert_eq!(v[i], q(3 * expect[i] - top[i], 3));
            assert!(v[i].is_positive());
        }
    }

    #[test]
    fn small_enumeration_matches_brute_force() {
        // oracle: grow every up-set of size ≤ 4 by brute-force filtering of subsets of the top 12 weights
        let r = enumerate_small_m0(4);
        let weights = all_weights();
        let mut top: Vec<Weight> = weights.clone();
        top.sort_by_key(|a| std::cmp::Reverse(a.x_value()));
        let mut counts = [0usize; 5];
        let cand: Vec<Weight> = top.into_iter().take(14).collect();
        for mask in 1u32..(1 << cand.len()) {
            if mask.count_ones() > 4 {
                continue;
            }
            let s = WeightSet::from_iter((0..cand.len()).filter(|i| mask >> i & 1 == 1).map(|i| cand[i]));
            let closed = weights
                .iter()
                .all(|b| !s.members().iter().any(|a| leq_g(a, b)) || s.contains(b));
            if closed {
                counts[s.len()] += 1;
            }
        }
        assert_eq!(r.counts, counts[1..].to_vec());
        assert!(r.pass);
    }

    #[test]
    fn intermediates_are_closed() {
        let c = FixtureFile::embedded().cases().unwrap().remove(0);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..20 {
            let m = random_intermediate(&c, &mut rng);
            assert!(m.is_up_closed());
            assert!(c.m0_dblprime_set().is_subset(&m));
            assert!(m.is_subset(&c.m0_prime));
        }
    }
}

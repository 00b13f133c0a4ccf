//! Cross-check suites: closed forms against the exact solvers, the cycle
//! perfection classifier against brute force, the 3,d table against golden
//! data, and the bound inequalities on the seeded corpus.

use std::fmt::Write as _;

use kdinv::bounds::{bound_report, power_inequality_report};
use kdinv::catalogue::{default_corpus, fixture8};
use kdinv::closed_forms::{
    alpha_cycle, alpha_path, alpha_path_power, chi_cycle, chi_path, chi_path_power, omega_cycle,
    omega_path,
};
use kdinv::perfection::{is_cycle_perfect, is_kd_perfect_bruteforce, table_3d_perfect};
use kdinv::solvers::{chromatic_number, max_clique, max_independent_set};
use kdinv::{
    build_geodesic_hypergraph, cycle_graph, path_graph, Graph, Hypergraph, HypergraphBudget,
    Params, SolverBudget,
};

use crate::compute::{closed_form, Certificate, Invariant};
use crate::golden::GoldenTable;
use crate::{CliError, CliResult, Family};

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub paths: bool,
    pub cycles: bool,
    pub powers: bool,
    pub table: bool,
    pub corpus: bool,
    pub n_max: usize,
    pub d_max: usize,
    pub ell_max: usize,
    /// Largest cycle checked against brute-force perfection.
    pub perfection_n_max: usize,
    pub golden: GoldenTable,
    pub solver_budget: SolverBudget,
    pub hypergraph_budget: HypergraphBudget,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            paths: false,
            cycles: false,
            powers: false,
            table: false,
            corpus: false,
            n_max: 12,
            d_max: 10,
            ell_max: 2,
            perfection_n_max: 10,
            golden: GoldenTable::embedded(),
            solver_budget: SolverBudget::default(),
            hypergraph_budget: HypergraphBudget::default(),
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct SectionResult {
    pub name: String,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl SectionResult {
    fn new(name: &str) -> Self {
        SectionResult {
            name: name.into(),
            ..Default::default()
        }
    }

    fn expect<T: PartialEq + std::fmt::Display>(
        &mut self,
        instance: impl FnOnce() -> String,
        expected: T,
        got: T,
    ) {
        self.checks += 1;
        if expected != got {
            self.failures
                .push(format!("{}: expected {expected}, got {got}", instance()));
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct VerifySummary {
    pub sections: Vec<SectionResult>,
}

impl VerifySummary {
    pub fn failures(&self) -> usize {
        self.sections.iter().map(|s| s.failures.len()).sum()
    }

    pub fn checks(&self) -> usize {
        self.sections.iter().map(|s| s.checks).sum()
    }

    pub fn passed(&self) -> bool {
        self.failures() == 0
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for s in &self.sections {
            for f in &s.failures {
                let _ = writeln!(out, "FAIL {} {f}", s.name);
            }
            let verdict = if s.failures.is_empty() {
                "PASS"
            } else {
                "FAIL"
            };
            let _ = writeln!(
                out,
                "{verdict} {}: {} checks, {} failed",
                s.name,
                s.checks,
                s.failures.len()
            );
        }
        let verdict = if self.passed() { "pass" } else { "fail" };
        let _ = writeln!(
            out,
            "verify: {verdict} ({} checks, {} failed)",
            self.checks(),
            self.failures()
        );
        out
    }
}

struct Exact {
    alpha: usize,
    chi: Option<usize>,
    omega: usize,
}

fn exact(g: &Graph, k: usize, d: usize, cfg: &VerifyConfig) -> CliResult<(Hypergraph, Exact)> {
    let h = build_geodesic_hypergraph(g, Params::new(k, d)?, &cfg.hypergraph_budget)?;
    let (alpha, _) = max_independent_set(&h, &cfg.solver_budget)?;
    let (omega, _) = max_clique(&h, &cfg.solver_budget)?;
    let chi = if k <= d + 1 {
        Some(chromatic_number(&h, &cfg.solver_budget)?.0)
    } else {
        None
    };
    Ok((h, Exact { alpha, chi, omega }))
}

fn certificate_ok(h: &Hypergraph, inv: Invariant, value: usize, cert: &Certificate) -> bool {
    use kdinv::solvers::{is_clique, is_independent, is_proper_coloring};
    match cert {
        Certificate::Set(s) if inv == Invariant::Alpha => s.len() == value && is_independent(h, s),
        Certificate::Set(s) => s.len() == value && is_clique(h, s),
        Certificate::Coloring(c) => c.num_colors() == value && is_proper_coloring(h, c),
    }
}

fn check_certificates(
    sec: &mut SectionResult,
    tag: &str,
    family: Family,
    n: usize,
    k: usize,
    d: usize,
    h: &Hypergraph,
) {
    for inv in [Invariant::Alpha, Invariant::Chi, Invariant::Omega] {
        if let Ok((v, Some(cert))) = closed_form(family, n, 1, k, d, inv) {
            sec.expect(
                || format!("{tag} n={n} k={k} d={d} {} certificate", inv.name()),
                "valid",
                if certificate_ok(h, inv, v, &cert) {
                    "valid"
                } else {
                    "invalid"
                },
            );
        }
    }
}

fn verify_paths(cfg: &VerifyConfig) -> CliResult<SectionResult> {
    let mut sec = SectionResult::new("paths");
    for n in 1..=cfg.n_max {
        let g = path_graph(n)?;
        for d in 1..=n {
            for k in 2..=d + 2 {
                let (h, ex) = exact(&g, k, d, cfg)?;
                let id = |inv: &str| format!("P_{n} k={k} d={d} {inv}");
                sec.expect(|| id("alpha"), ex.alpha, alpha_path(n, k, d)?);
                sec.expect(|| id("omega"), ex.omega, omega_path(n, k, d)?);
                if let Some(chi) = ex.chi {
                    sec.expect(|| id("chi"), chi, chi_path(n, k, d)?);
                }
                check_certificates(&mut sec, "P", Family::Path, n, k, d, &h);
            }
        }
    }
    Ok(sec)
}

fn verify_cycles(cfg: &VerifyConfig) -> CliResult<SectionResult> {
    let mut sec = SectionResult::new("cycles");
    for n in 3..=cfg.n_max {
        let g = cycle_graph(n)?;
        for d in 1..=n / 2 {
            for k in 2..=d + 1 {
                let (h, ex) = exact(&g, k, d, cfg)?;
                let id = |inv: &str| format!("C_{n} k={k} d={d} {inv}");
                sec.expect(|| id("alpha"), ex.alpha, alpha_cycle(n, k, d)?);
                sec.expect(|| id("omega"), ex.omega, omega_cycle(n, k, d)?);
                if let Some(chi) = ex.chi {
                    sec.expect(|| id("chi"), chi, chi_cycle(n, k, d)?);
                }
                check_certificates(&mut sec, "C", Family::Cycle, n, k, d, &h);
                if n <= cfg.perfection_n_max {
                    let brute = is_kd_perfect_bruteforce(&g, k, d, cfg.perfection_n_max)?.perfect;
                    sec.expect(|| id("perfect"), brute, is_cycle_perfect(n, k, d)?);
                }
            }
        }
    }
    Ok(sec)
}

fn verify_powers(cfg: &VerifyConfig) -> CliResult<SectionResult> {
    let mut sec = SectionResult::new("powers");
    for ell in 2..=cfg.ell_max {
        for n in 1..=cfg.n_max {
            let g = path_graph(n)?.power(ell)?;
            for d in 1..=n {
                for k in 2..=d + 1 {
                    let (_, ex) = exact(&g, k, d, cfg)?;
                    let id = |inv: &str| format!("P_{n}^{ell} k={k} d={d} {inv}");
                    sec.expect(|| id("alpha"), ex.alpha, alpha_path_power(n, k, d, ell)?);
                    if let Some(chi) = ex.chi {
                        sec.expect(|| id("chi"), chi, chi_path_power(n, k, d, ell)?);
                    }
                }
            }
        }
    }
    let mut bases: Vec<(String, Graph)> = (2..=cfg.n_max.min(10))
        .map(|n| (format!("P_{n}"), path_graph(n).expect("n >= 1")))
        .collect();
    bases.push(("fixture8".into(), fixture8()));
    for (name, g) in &bases {
        for ell in 2..=cfg.ell_max {
            for d in 1..=3 {
                for k in 2..=d + 1 {
                    let r = power_inequality_report(
                        g,
                        k,
                        d,
                        ell,
                        &cfg.hypergraph_budget,
                        &cfg.solver_budget,
                    )?;
                    let id = format!("{name} ell={ell} k={k} d={d}");
                    sec.expect(
                        || {
                            format!(
                                "{id} alpha(G^ell) <= lifted alpha ({} vs {})",
                                r.lhs_alpha, r.rhs_alpha
                            )
                        },
                        true,
                        r.alpha_holds,
                    );
                    sec.expect(
                        || {
                            format!(
                                "{id} chi(G^ell) >= lifted chi ({} vs {})",
                                r.lhs_chi, r.rhs_chi
                            )
                        },
                        true,
                        r.chi_holds,
                    );
                }
            }
        }
    }
    Ok(sec)
}

fn verify_corpus(cfg: &VerifyConfig) -> CliResult<SectionResult> {
    let mut sec = SectionResult::new("corpus");
    for (i, g) in default_corpus().iter().enumerate() {
        for ell in 1..=2 {
            for (k, d) in [(2, 1), (3, 2), (3, 3), (4, 3)] {
                let r = bound_report(
                    g,
                    Params::with_power(k, d, ell)?,
                    &cfg.hypergraph_budget,
                    &cfg.solver_budget,
                )?;
                for c in &r.checks {
                    sec.expect(
                        || {
                            format!(
                                "graph #{i} ell={ell} k={k} d={d} {} (bound {}, exact {})",
                                c.name, c.bound, c.exact
                            )
                        },
                        true,
                        c.holds,
                    );
                }
            }
        }
    }
    Ok(sec)
}

fn verify_table(cfg: &VerifyConfig) -> CliResult<SectionResult> {
    let mut sec = SectionResult::new("table three-d");
    if let Some(d) = (2..=cfg.d_max).find(|d| !cfg.golden.rows.contains_key(d)) {
        return Err(CliError::Usage(format!(
            "golden table has no row for d={d}"
        )));
    }
    let table = table_3d_perfect(2, cfg.d_max, cfg.n_max)?;
    let word = |p: bool| if p { "perfect" } else { "not perfect" };
    for row in &table.rows {
        let rule = &cfg.golden.rows[&row.d];
        for n in 3..=cfg.n_max {
            sec.expect(
                || format!("d={} C_{n}", row.d),
                word(rule.perfect(n)),
                word(!row.non_perfect.contains(&n)),
            );
        }
    }
    Ok(sec)
}

pub fn run_verify(cfg: &VerifyConfig) -> CliResult<VerifySummary> {
    if cfg.d_max < 2 {
        return Err(CliError::Usage("--d-max must be at least 2".into()));
    }
    let mut summary = VerifySummary::default();
    type Suite = fn(&VerifyConfig) -> CliResult<SectionResult>;
    let suites: [(bool, Suite); 5] = [
        (cfg.paths, verify_paths),
        (cfg.cycles, verify_cycles),
        (cfg.powers, verify_powers),
        (cfg.corpus, verify_corpus),
        (cfg.table, verify_table),
    ];
    for (enabled, suite) in suites {
        if enabled {
            summary.sections.push(suite(cfg)?);
        }
    }
    if summary.sections.is_empty() {
        return Err(CliError::Usage("nothing selected to verify".into()));
    }
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        let cfg = VerifyConfig {
            paths: true,
            cycles: true,
            powers: true,
            n_max: 8,
            ..Default::default()
        };
        let s = run_verify(&cfg).unwrap();
        assert!(s.passed(), "{}", s.render());
        assert!(s.checks() > 500);
    }

    #[test]
    fn corrupted_golden_value_is_reported() {
        let base = VerifyConfig {
            table: true,
            d_max: 4,
            n_max: 12,
            golden: GoldenTable::parse("2 all\n3 n<=7 or 2|n\n4 all\n").unwrap(),
            ..Default::default()
        };
        let honest = run_verify(&base).unwrap();
        let corrupted = VerifyConfig {
            golden: GoldenTable::parse("2 except 11\n3 n<=7 or 2|n\n4 all\n").unwrap(),
            ..base
        };
        let s = run_verify(&corrupted).unwrap();
        assert!(!s.passed());
        assert_eq!(s.failures(), honest.failures() + 1);
        assert!(s
            .render()
            .contains("FAIL table three-d d=2 C_11: expected not perfect, got perfect"));
    }
}

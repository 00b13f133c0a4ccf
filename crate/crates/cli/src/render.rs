//! Text renderings of command reports.

use std::fmt::Write as _;

use kdinv::BoundReport;

use crate::compute::{ComputeReport, PerfectReport};
use crate::Format;

fn json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize") + "\n"
}

fn bound_rows(b: &BoundReport) -> Vec<(&'static str, String)> {
    vec![
        ("chi_lower_counting", b.chi_lower_counting.to_string()),
        ("chi_upper_partition", b.chi_upper_partition.to_string()),
        ("chi_lower_clique", b.chi_lower_clique.to_string()),
        (
            "chi_upper_hypergraph_greedy",
            b.chi_upper_hypergraph_greedy.to_string(),
        ),
        (
            "chi_upper_metric_greedy",
            b.chi_upper_metric_greedy
                .map_or("n/a".into(), |v| v.to_string()),
        ),
        (
            "omega_upper_domination",
            b.omega_upper_domination.to_string(),
        ),
    ]
}

pub fn compute(r: &ComputeReport, format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Json => return json(r),
        Format::Plain => {
            let _ = writeln!(
                out,
                "graph {} (n={}, m={}), k={}, d={}",
                r.graph, r.n, r.m, r.k, r.d
            );
            for v in &r.invariants {
                let _ = writeln!(out, "{}={} ({})", v.name, v.value, v.source.as_str());
                if let Some(w) = &v.witness {
                    let _ = writeln!(out, "  {}: {}", w.kind(), w.compact());
                }
            }
            if let Some(b) = &r.bounds {
                for (name, value) in bound_rows(b) {
                    let _ = writeln!(out, "{name}={value}");
                }
                for c in &b.checks {
                    let verdict = if c.holds { "holds" } else { "VIOLATED" };
                    let _ = writeln!(
                        out,
                        "  {}: bound {} vs exact {} {verdict}",
                        c.name, c.bound, c.exact
                    );
                }
            }
        }
        Format::Csv => {
            out.push_str("invariant,value,source,witness\n");
            for v in &r.invariants {
                let w = v.witness.as_ref().map(|w| w.compact()).unwrap_or_default();
                let _ = writeln!(out, "{},{},{},{w}", v.name, v.value, v.source.as_str());
            }
            if let Some(b) = &r.bounds {
                for (name, value) in bound_rows(b) {
                    let _ = writeln!(out, "{name},{value},bound,");
                }
            }
        }
        Format::Markdown => {
            let _ = writeln!(
                out,
                "**{}** (n={}, m={}), k={}, d={}\n",
                r.graph, r.n, r.m, r.k, r.d
            );
            out.push_str("| invariant | value | source | witness |\n|---|---|---|---|\n");
            for v in &r.invariants {
                let w = v.witness.as_ref().map(|w| w.compact()).unwrap_or_default();
                let _ = writeln!(
                    out,
                    "| {} | {} | {} | {w} |",
                    v.name,
                    v.value,
                    v.source.as_str()
                );
            }
            if let Some(b) = &r.bounds {
                for (name, value) in bound_rows(b) {
                    let _ = writeln!(out, "| {name} | {value} | bound | |");
                }
            }
        }
    }
    out
}

pub fn perfect(r: &PerfectReport, format: Format) -> String {
    let ce = r.counterexample.as_ref();
    let members = ce.map(|c| {
        c.vertices
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    });
    match format {
        Format::Json => json(r),
        Format::Plain => {
            let mut out = format!(
                "graph {} (n={}), k={}, d={}\nperfect={} ({})\n",
                r.graph,
                r.n,
                r.k,
                r.d,
                r.perfect,
                r.source.as_str()
            );
            if let (Some(c), Some(m)) = (ce, &members) {
                let _ = writeln!(
                    out,
                    "  counterexample: {{{m}}} chi={} omega={} clique_bound={}",
                    c.chi, c.omega, c.clique_bound
                );
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("graph,k,d,perfect,source,counterexample,chi,omega\n");
            let (cv, cc, co) = ce.map_or((String::new(), String::new(), String::new()), |c| {
                (
                    members.clone().unwrap(),
                    c.chi.to_string(),
                    c.omega.to_string(),
                )
            });
            let _ = writeln!(
                out,
                "{},{},{},{},{},{cv},{cc},{co}",
                r.graph,
                r.k,
                r.d,
                r.perfect,
                r.source.as_str()
            );
            out
        }
        Format::Markdown => {
            let mut out = String::from("| graph | k | d | perfect | source | counterexample |\n|---|---|---|---|---|---|\n");
            let cell = ce.map_or(String::new(), |c| {
                format!(
                    "{{{}}} chi={} omega={}",
                    members.clone().unwrap(),
                    c.chi,
                    c.omega
                )
            });
            let _ = writeln!(
                out,
                "| {} | {} | {} | {} | {} | {cell} |",
                r.graph,
                r.k,
                r.d,
                r.perfect,
                r.source.as_str()
            );
            out
        }
    }
}

//! Human-readable rendering of reports and tables.

use std::fmt::Write;

use subshift_core::bratteli::{BratteliDiagram, K0Presentation};
use subshift_core::conjugacy::InvariantComparison;
use subshift_core::verify::Report;

pub fn report(r: &Report) -> String {
    let mut out = format!("{} (depth {})\n", r.title, r.depth);
    for s in &r.sections {
        let status = if s.passed() { "PASS" } else { "FAIL" };
        let _ = writeln!(
            out,
            "  {status}  {} [{} checked, {} failed]",
            s.name,
            s.checked,
            s.failures.len()
        );
        for f in s.failures.iter().take(5) {
            let _ = writeln!(
                out,
                "        {}:\n          {}\n          != {}",
                f.identity, f.left, f.right
            );
        }
        if s.failures.len() > 5 {
            let _ = writeln!(out, "        ... {} more", s.failures.len() - 5);
        }
    }
    let status = if r.passed() { "PASS" } else { "FAIL" };
    let _ = writeln!(out, "result: {status} ({} identities checked)", r.checked());
    out
}

fn matrix(out: &mut String, m: &[Vec<u64>]) {
    for row in m {
        let cells: Vec<String> = row.iter().map(u64::to_string).collect();
        let _ = writeln!(out, "    [{}]", cells.join(" "));
    }
}

pub fn bratteli(tower: &str, d: &BratteliDiagram) -> String {
    let mut out = format!("{tower} tower, depth {}\n", d.sizes.len() - 1);
    let sizes: Vec<String> = d.sizes.iter().map(usize::to_string).collect();
    let _ = writeln!(out, "sizes: {}", sizes.join(" "));
    for (l, m) in d.incidence.iter().enumerate() {
        let _ = writeln!(out, "  step {l} -> {}:", l + 1);
        matrix(&mut out, m);
    }
    let _ = writeln!(out, "stable: {}", if d.stable { "yes" } else { "no" });
    out
}

pub fn k0(tower: &str, k: &K0Presentation) -> String {
    let mut out = format!("{tower} tower\n");
    let sizes: Vec<String> = k.sizes.iter().map(usize::to_string).collect();
    let _ = writeln!(out, "sizes: {}", sizes.join(" "));
    if let Some(m) = &k.stationary {
        let _ = writeln!(out, "stationary matrix:");
        matrix(&mut out, m);
    }
    if let Some(d) = &k.smith_diagonal {
        let _ = writeln!(out, "smith diagonal: {d:?}");
    }
    if let Some(u) = &k.order_unit {
        let _ = writeln!(out, "order unit: {u:?}");
    }
    if k.truncated {
        let _ = writeln!(out, "truncated: no stationary matrix within the depth");
    }
    let _ = writeln!(out, "K0: {}", k.describe());
    out
}

pub fn comparison(c: &InvariantComparison) -> String {
    let mut out = format!("invariants up to depth {} (lag {})\n", c.depth, c.lag);
    let _ = writeln!(
        out,
        "  {:>3}  {:>6} {:>6}  {:>6} {:>6}",
        "l", "m_X", "m_Y", "D_X", "D_Y"
    );
    for l in 0..=c.depth {
        let _ = writeln!(
            out,
            "  {l:>3}  {:>6} {:>6}  {:>6} {:>6}",
            c.class_counts.0[l], c.class_counts.1[l], c.diagonal_sizes.0[l], c.diagonal_sizes.1[l]
        );
    }
    let yn = |b: bool| if b { "yes" } else { "no" };
    let _ = writeln!(
        out,
        "A tower stable: {} / {}",
        yn(c.a_tower_stable.0),
        yn(c.a_tower_stable.1)
    );
    let _ = writeln!(
        out,
        "class counts agree from l = {}: {}",
        c.lag.min(c.depth),
        yn(c.class_counts_agree)
    );
    match &c.isomorphism {
        Some(r) => out.push_str(&report(r)),
        None => {
            out.push_str("no certificate supplied; equal invariants would not prove conjugacy\n")
        }
    }
    out
}

use std::fmt::Write;

use crate::surface::{MappingClassDescription, StretchFactor};

use super::{Avail, GrowthReport, IntList, Report};

fn describe(desc: &MappingClassDescription) -> String {
    use MappingClassDescription as D;
    match desc {
        D::Periodic(p) => {
            let counts: Vec<String> = p
                .least_period_counts
                .iter()
                .map(|(d, c)| format!("c_{d} = {c}"))
                .collect();
            format!(
                "periodic map of period {} on the closed surface of genus {} ({})",
                p.period,
                p.genus,
                counts.join(", ")
            )
        }
        D::Torus(t) => format!("linear torus map A = {}", t.matrix),
        D::FiniteType(f) => format!(
            "finite type map; fixed components: {}, isolated fixed points: {}, twist annuli: {}",
            f.fixed_components.len(),
            f.periodic_part_fixed_points,
            f.annuli.len()
        ),
        D::PseudoAnosov(p) => {
            let lambda = match &p.stretch_factor {
                Some(StretchFactor::Exact(s)) => format!(", stretch factor {s}"),
                Some(StretchFactor::Approx(x)) => format!(", stretch factor {x}"),
                None => String::new(),
            };
            format!(
                "pseudo-Anosov map on genus {}{lambda}; fixed points: {}",
                p.genus,
                p.fixed_points.len()
            )
        }
        D::Reducible(r) => format!(
            "reducible map; fixed components: {}, periodic pieces: {}, pseudo-Anosov pieces: {}",
            r.fixed_components.len(),
            r.periodic_components.len(),
            r.pa_components.len()
        ),
    }
}

fn ints(v: &IntList) -> String {
    v.0.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

fn line<T>(out: &mut String, label: &str, a: &Avail<T>, show: impl Fn(&T) -> String) {
    match a {
        Avail::Value(v) => writeln!(out, "{label} = {}", show(v)),
        Avail::Unavailable(why) => writeln!(out, "{label}: not available ({why})"),
    }
    .expect("writing to a string");
}

fn growth(g: &GrowthReport) -> String {
    match &g.exact {
        Some(s) if !s.is_rational() => format!("{} ~ {:.6}", g.text, g.value),
        _ => g.text.clone(),
    }
}

pub(super) fn render(r: &Report) -> String {
    let mut out = String::new();
    let w = &mut out;
    writeln!(w, "{}", describe(&r.input.description)).unwrap();
    if let Some(s) = &r.invariants {
        let range = if s.iterated {
            format!("n = 1..{}", s.n_max)
        } else {
            "n = 1".to_string()
        };
        line(w, &format!("N(φ^n), {range}"), &s.nielsen, ints);
        line(w, &format!("L(φ^n), {range}"), &s.lefschetz, ints);
        line(w, &format!("dim HF_*(φ^n), {range}"), &s.dim_hf, ints);
        line(
            w,
            "HF_*(φ) (even, odd)",
            &s.floer_homology,
            ToString::to_string,
        );
        if let Some(idx) = &s.index_list {
            let v: Vec<String> = idx.iter().map(ToString::to_string).collect();
            writeln!(w, "fixed point indices: {}", v.join(", ")).unwrap();
        }
        for n in &s.notes {
            writeln!(w, "note: {n}").unwrap();
        }
    }
    if let Some(s) = &r.zeta {
        line(w, "χ_φ(z) = L_φ(z)", &s.chi_zeta, |f| {
            format!("{}\n    = {}", f.text, f.series.coefficients)
        });
        line(w, "F_φ(z)", &s.floer_zeta, |f| {
            format!("{}\n    = {}", f.text, f.series.coefficients)
        });
        if s.floer_zeta.value().is_none() {
            line(
                w,
                "F_φ(z) from dim HF_*(φ^n)",
                &s.floer_zeta_series,
                |f| f.coefficients.to_string(),
            );
        }
    }
    if let Some(s) = &r.growth {
        line(w, "F^∞(g)", &s.asymptotic_invariant, growth);
        line(
            w,
            &format!("grow(dim HF_*(φ^n)) on n = {}..{}", s.window.0, s.window.1),
            &s.dim_hf_growth,
            growth,
        );
        line(w, "entropy lower bound h", &s.entropy_lower_bound, |e| {
            format!("{:.6} (rate {})", e.entropy, growth(&e.rate))
        });
    }
    if let Some(v) = &r.verification {
        let passed = v.checks.iter().filter(|c| c.passed).count();
        writeln!(
            w,
            "verification at order {}: {passed}/{} checks passed",
            v.order,
            v.checks.len()
        )
        .unwrap();
        for c in &v.checks {
            let mark = if c.passed { "pass" } else { "FAIL" };
            write!(w, "  [{mark}] {}: {} ({})", c.name, c.statement, c.detail).unwrap();
            if let Some(k) = c.first_divergence {
                write!(w, ", first divergence at {k}").unwrap();
            }
            writeln!(w).unwrap();
        }
    }
    out
}

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::Serialize;

use super::*;

/// One broken rule, located by a JSON-style field path.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub field: String,
    pub rule: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.field, self.rule)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    fn push(&mut self, field: impl Into<String>, rule: impl Into<String>) {
        self.violations.push(Violation {
            field: field.into(),
            rule: rule.into(),
        });
    }

    /// `Ok(())` or an [`Error::Validation`] listing every violation.
    pub fn into_result(self) -> Result<()> {
        if self.is_ok() {
            Ok(())
        } else {
            Err(Error::Validation(self))
        }
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Check every structural rule of a description.
pub fn validate(desc: &MappingClassDescription) -> ValidationReport {
    let mut r = ValidationReport::default();
    match desc {
        MappingClassDescription::Periodic(p) => periodic(p, &mut r),
        MappingClassDescription::Torus(t) => torus(t, &mut r),
        MappingClassDescription::FiniteType(f) => finite_type(f, &mut r),
        MappingClassDescription::PseudoAnosov(p) => {
            if p.genus < 2 {
                r.push(
                    "genus",
                    "pseudo-Anosov ambient surface must have genus >= 2",
                );
            }
            stretch(p.stretch_factor.as_ref(), "stretch_factor", &mut r);
            fixed_points(&p.fixed_points, "fixed_points", &mut r);
        }
        MappingClassDescription::Reducible(d) => reducible(d, &mut r),
    }
    r
}

fn periodic(p: &PeriodicClassDesc, r: &mut ValidationReport) {
    if p.genus < 1 {
        r.push("genus", "periodic maps need genus >= 1");
    }
    if p.period < 2 {
        r.push("period", "period must be at least 2");
    }
    for (&d, &c) in &p.least_period_counts {
        let field = format!("least_period_counts.{d}");
        if d == 0 || d >= p.period || !p.period.is_multiple_of(d) {
            r.push(
                field,
                format!("{d} is not a proper divisor of the period {}", p.period),
            );
        } else if c % d != 0 {
            r.push(field, format!("c_{d} not divisible by {d}"));
        }
    }
    if p.least_period_counts.values().all(|&c| c == 0) {
        r.push(
            "least_period_counts",
            "at least one c_d must be positive (non-trivial periodic map with periodic points)",
        );
    }
}

fn torus(t: &TorusAutoDesc, r: &mut ValidationReport) {
    let m = &t.matrix;
    if m.dim() != 2 {
        r.push("matrix", format!("must be 2x2, got {0}x{0}", m.dim()));
        return;
    }
    if !m.det().is_one() {
        r.push(
            "matrix",
            format!(
                "determinant must be 1 (orientation-preserving), got {}",
                m.det()
            ),
        );
    }
    if t.anosov && m.trace().abs() <= BigInt::from(2) {
        r.push(
            "matrix",
            format!(
                "eigenvalue of modulus one (|trace| = {} <= 2)",
                m.trace().abs()
            ),
        );
    }
}

fn ambient_genus(genus: Option<u32>, r: &mut ValidationReport) {
    if genus.is_some_and(|g| g < 2) {
        r.push("genus", "ambient surface must have genus >= 2");
    }
}

fn annuli(list: &[Annulus], pairs: &[(usize, usize)], r: &mut ValidationReport) {
    for (k, &(a, b)) in pairs.iter().enumerate() {
        let field = format!("homotopic_annuli[{k}]");
        if a >= list.len() || b >= list.len() {
            r.push(
                field,
                format!("annulus index out of range (have {})", list.len()),
            );
        } else if a == b {
            r.push(field, "an annulus cannot be paired with itself");
        } else if list[a].sign != list[b].sign {
            r.push(
                field,
                "homotopic annuli must both be positive or both negative twists",
            );
        }
    }
}

fn fixed_components(
    comps: &[FixedComponent],
    pa_count: Option<usize>,
    whole_surface_ok: bool,
    r: &mut ValidationReport,
) {
    for (i, c) in comps.iter().enumerate() {
        if c.boundary.is_empty() && !whole_surface_ok {
            r.push(
                format!("fixed_components[{i}].boundary"),
                "empty boundary is only allowed when the component is the whole closed surface",
            );
        }
        for (j, label) in c.boundary.iter().enumerate() {
            let BoundaryLabel::PaAdjacent { prongs, component } = *label else {
                continue;
            };
            let field = format!("fixed_components[{i}].boundary[{j}]");
            match pa_count {
                None => r.push(field, "finite-type maps have no pseudo-Anosov pieces"),
                Some(n) if component >= n => r.push(
                    field,
                    format!("pseudo-Anosov component {component} is not declared"),
                ),
                Some(_) => {}
            }
            if prongs < 1 {
                r.push(
                    format!("fixed_components[{i}].boundary[{j}].prongs"),
                    "prongs must be >= 1",
                );
            }
        }
    }
}

fn finite_type(f: &FiniteTypeClassDesc, r: &mut ValidationReport) {
    ambient_genus(f.genus, r);
    let whole =
        f.fixed_components.len() == 1 && f.annuli.is_empty() && f.periodic_part_fixed_points == 0;
    fixed_components(&f.fixed_components, None, whole, r);
    if let (Some(g), true, Some(c)) = (f.genus, whole, f.fixed_components.first()) {
        if c.boundary.is_empty() && c.genus != g {
            r.push(
                "fixed_components[0].genus",
                "a closed fixed component must be the whole surface",
            );
        }
    }
    annuli(&f.annuli, &f.homotopic_annuli, r);
    if let Some(l) = f.lefschetz_outside_fixed {
        if l != f.periodic_part_fixed_points as i64 {
            r.push(
                "lefschetz_outside_fixed",
                format!(
                    "isolated fixed points all have index +1, so L must equal periodic_part_fixed_points ({})",
                    f.periodic_part_fixed_points
                ),
            );
        }
    }
}

fn reducible(d: &ReducibleClassDesc, r: &mut ValidationReport) {
    ambient_genus(d.genus, r);
    let whole = d.fixed_components.len() == 1
        && d.periodic_components.is_empty()
        && d.pa_components.is_empty()
        && d.annuli.is_empty();
    fixed_components(&d.fixed_components, Some(d.pa_components.len()), whole, r);
    for (i, p) in d.periodic_components.iter().enumerate() {
        if p.lefschetz_number < 0 {
            r.push(
                format!("periodic_components[{i}].lefschetz_number"),
                "fixed points of periodic pieces have index +1, so L must be >= 0",
            );
        }
    }
    for (i, p) in d.pa_components.iter().enumerate() {
        stretch(
            p.stretch_factor.as_ref(),
            &format!("pa_components[{i}].stretch_factor"),
            r,
        );
        fixed_points(
            &p.fixed_points,
            &format!("pa_components[{i}].fixed_points"),
            r,
        );
    }
    annuli(&d.annuli, &d.homotopic_annuli, r);
}

fn stretch(s: Option<&StretchFactor>, field: &str, r: &mut ValidationReport) {
    if let Some(s) = s {
        let v = s.to_f64();
        if !v.is_finite() || v <= 1.0 {
            r.push(field, format!("stretch factor must be > 1, got {v}"));
        }
    }
}

fn fixed_points(points: &[FixedPointDatum], field: &str, r: &mut ValidationReport) {
    for (i, p) in points.iter().enumerate() {
        match *p {
            FixedPointDatum::Regular(idx) if idx != 1 && idx != -1 => r.push(
                format!("{field}[{i}].regular"),
                format!("regular index must be +1 or -1, got {idx}"),
            ),
            FixedPointDatum::Singular { prongs, .. } if prongs < 3 => r.push(
                format!("{field}[{i}].singular.prongs"),
                format!("singularities need >= 3 prongs, got {prongs}"),
            ),
            _ => {}
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn torus_desc(m: [[i64; 2]; 2]) -> MappingClassDescription {
        MappingClassDescription::Torus(TorusAutoDesc::new(IntMatrix::from_i64(m)))
    }

    #[test]
    fn torus_rules() {
        assert!(validate(&torus_desc([[2, 1], [1, 1]])).is_ok());
        let r = validate(&torus_desc([[1, 1], [0, 1]]));
        assert_eq!(r.violations.len(), 1);
        assert!(r.violations[0].rule.contains("eigenvalue of modulus one"));
        let r = validate(&torus_desc([[2, 1], [1, 2]]));
        assert!(r.violations[0].rule.contains("determinant"));
        let parabolic = MappingClassDescription::Torus(TorusAutoDesc {
            matrix: IntMatrix::from_i64([[1, 1], [0, 1]]),
            anosov: false,
        });
        assert!(validate(&parabolic).is_ok());
    }

    #[test]
    fn periodic_rules() {
        let ok = MappingClassDescription::Periodic(PeriodicClassDesc::new(2, 2, &[(1, 5)]));
        assert!(validate(&ok).is_ok());
        let bad = MappingClassDescription::Periodic(PeriodicClassDesc::new(2, 4, &[(2, 3)]));
        let r = validate(&bad);
        assert_eq!(r.violations.len(), 1);
        assert_eq!(r.violations[0].rule, "c_2 not divisible by 2");
        assert_eq!(r.violations[0].field, "least_period_counts.2");
        let not_divisor =
            MappingClassDescription::Periodic(PeriodicClassDesc::new(2, 4, &[(3, 3)]));
        assert!(!validate(&not_divisor).is_ok());
        let trivial = MappingClassDescription::Periodic(PeriodicClassDesc::new(1, 2, &[(1, 0)]));
        assert!(!validate(&trivial).is_ok());
    }

    #[test]
    fn finite_type_rules() {
        let mut f = FiniteTypeClassDesc {
            genus: Some(2),
            fixed_components: vec![FixedComponent {
                genus: 1,
                boundary: vec![BoundaryLabel::PlusTwist],
            }],
            periodic_part_fixed_points: 0,
            annuli: vec![
                Annulus {
                    sign: TwistSign::Plus,
                    flipped: false,
                },
                Annulus {
                    sign: TwistSign::Minus,
                    flipped: false,
                },
            ],
            homotopic_annuli: vec![],
            lefschetz_outside_fixed: Some(0),
        };
        assert!(validate(&MappingClassDescription::FiniteType(f.clone())).is_ok());
        f.homotopic_annuli = vec![(0, 1)];
        f.lefschetz_outside_fixed = Some(3);
        let r = validate(&MappingClassDescription::FiniteType(f.clone()));
        assert_eq!(r.violations.len(), 2);
        f.homotopic_annuli.clear();
        f.lefschetz_outside_fixed = None;
        f.fixed_components[0]
            .boundary
            .push(BoundaryLabel::PaAdjacent {
                prongs: 3,
                component: 0,
            });
        assert!(!validate(&MappingClassDescription::FiniteType(f)).is_ok());
    }

    #[test]
    fn reducible_rules() {
        let mut d = ReducibleClassDesc {
            fixed_components: vec![FixedComponent {
                genus: 1,
                boundary: vec![BoundaryLabel::PaAdjacent {
                    prongs: 3,
                    component: 0,
                }],
            }],
            ..Default::default()
        };
        let r = validate(&MappingClassDescription::Reducible(d.clone()));
        assert!(r.violations[0].rule.contains("not declared"));
        d.pa_components.push(PseudoAnosovPiece {
            stretch_factor: Some(StretchFactor::Approx(0.5)),
            fixed_points: vec![FixedPointDatum::Regular(2)],
        });
        d.periodic_components.push(PeriodicPiece {
            lefschetz_number: -1,
        });
        let r = validate(&MappingClassDescription::Reducible(d));
        assert_eq!(r.violations.len(), 3);
    }

    #[test]
    fn idempotent() {
        let bad = MappingClassDescription::Periodic(PeriodicClassDesc::new(0, 1, &[(2, 3)]));
        assert_eq!(validate(&bad), validate(&bad));
        assert!(validate(&bad).into_result().is_err());
    }
}

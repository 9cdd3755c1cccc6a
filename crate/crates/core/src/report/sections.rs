use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Serialize, Serializer};

use crate::algebra::{
    BigRational, IntMatrix, ProductForm, QuadraticSurd, RationalFunction, TruncatedSeries,
};
use crate::asymptotics::{
    asymptotic_invariant, entropy_from_stretch_factor, entropy_lower_bound, growth_rate,
    GrowthEstimate, GrowthMode, GrowthValue,
};
use crate::error::{Error, Result};
use crate::fixed_points::{
    lefschetz_iterates, lefschetz_number, nielsen_iterates, nielsen_number, pa_index_list,
    torus_nielsen, HomologyAction, Invariant, IterateSequence,
};
use crate::floer::{floer_homology, hf_iterates, hf_periodic, hf_torus_anosov, GradedDimension};
use crate::serde_int::JsonInt;
use crate::surface::MappingClassDescription;
use crate::zeta::{
    floer_zeta_periodic, floer_zeta_series_oracle, gromov_series_from_alexander,
    lefschetz_series_oracle, lefschetz_zeta, log_derivative_coefficients,
};

use super::InputDocument;

/// Smallest series order `verify` accepts.
pub const MIN_VERIFY_ORDER: usize = 5;

/// A computed value, or why it is not available for this input.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Avail<T> {
    Value(T),
    Unavailable(String),
}

impl<T> Avail<T> {
    pub fn value(&self) -> Option<&T> {
        match self {
            Self::Value(v) => Some(v),
            Self::Unavailable(_) => None,
        }
    }
}

impl<T> From<Result<T>> for Avail<T> {
    fn from(r: Result<T>) -> Self {
        match r {
            Ok(v) => Self::Value(v),
            Err(e) => Self::Unavailable(e.to_string()),
        }
    }
}

/// Integers serialized as JSON numbers, or decimal strings beyond 64 bits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntList(pub Vec<BigInt>);

impl Serialize for IntList {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter().cloned().map(JsonInt))
    }
}

fn serialize_rational<S: Serializer>(
    q: &BigRational,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    if q.is_integer() {
        JsonInt(q.to_integer()).serialize(s)
    } else {
        s.serialize_str(&q.to_string())
    }
}

fn serialize_series<S: Serializer>(
    t: &TruncatedSeries,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct C<'a>(#[serde(serialize_with = "serialize_rational")] &'a BigRational);
    s.collect_seq(t.coeffs().iter().map(C))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SeriesReport {
    pub order: usize,
    #[serde(serialize_with = "serialize_series")]
    pub coefficients: TruncatedSeries,
}

impl SeriesReport {
    fn new(coefficients: TruncatedSeries) -> Self {
        Self {
            order: coefficients.order(),
            coefficients,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RationalReport {
    pub text: String,
    pub numerator: IntList,
    pub denominator: IntList,
    pub series: SeriesReport,
}

impl RationalReport {
    fn new(f: &RationalFunction, order: usize) -> Self {
        Self {
            text: f.to_string(),
            numerator: IntList(f.numerator().coeffs().to_vec()),
            denominator: IntList(f.denominator().coeffs().to_vec()),
            series: SeriesReport::new(f.to_series(order)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Factor {
    pub degree: u64,
    #[serde(serialize_with = "serialize_rational")]
    pub exponent: BigRational,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProductReport {
    pub text: String,
    pub factors: Vec<Factor>,
    pub series: SeriesReport,
}

impl ProductReport {
    fn new(p: &ProductForm, order: usize) -> Self {
        Self {
            text: p.to_string(),
            factors: p
                .factors()
                .iter()
                .map(|(d, e)| Factor {
                    degree: *d,
                    exponent: e.clone(),
                })
                .collect(),
            series: SeriesReport::new(p.to_series(order)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GrowthReport {
    pub text: String,
    pub value: f64,
    pub mode: GrowthMode,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<QuadraticSurd>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub defining_polynomial: Option<IntList>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub window: Option<(u64, u64)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub root_sup: Option<f64>,
}

impl From<GrowthEstimate> for GrowthReport {
    fn from(g: GrowthEstimate) -> Self {
        Self {
            text: g.to_string(),
            value: g.to_f64(),
            mode: g.mode,
            exact: match &g.value {
                GrowthValue::Exact(s) => Some(s.clone()),
                GrowthValue::Approx(_) => None,
            },
            defining_polynomial: g
                .defining_polynomial()
                .map(|p| IntList(p.coeffs().to_vec())),
            window: g.window,
            root_sup: g.root_sup,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EntropyReport {
    /// `log` of the rate.
    pub entropy: f64,
    pub rate: GrowthReport,
}

/// `N`, `L` and `dim HF` of the iterates, and `HF_*(φ)` by degree.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InvariantsSection {
    pub n_max: u64,
    /// Whether the sequences run over `n = 1..=n_max` or hold `n = 1` only.
    pub iterated: bool,
    pub nielsen: Avail<IntList>,
    pub lefschetz: Avail<IntList>,
    pub dim_hf: Avail<IntList>,
    pub floer_homology: Avail<GradedDimension>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub index_list: Option<Vec<i64>>,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ZetaSection {
    pub order: usize,
    /// `χ_φ(z) = L_φ(z)`.
    pub chi_zeta: Avail<RationalReport>,
    pub floer_zeta: Avail<ProductReport>,
    pub floer_zeta_series: Avail<SeriesReport>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GrowthSection {
    pub window: (u64, u64),
    pub asymptotic_invariant: Avail<GrowthReport>,
    pub dim_hf_growth: Avail<GrowthReport>,
    pub entropy_lower_bound: Avail<EntropyReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub statement: String,
    /// Series order, or largest iterate compared.
    pub order: usize,
    pub passed: bool,
    /// First coefficient index (or iterate) where the two sides differ.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_divergence: Option<usize>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifySection {
    pub order: usize,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl VerifySection {
    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }
}

fn iterable(desc: &MappingClassDescription) -> bool {
    matches!(
        desc,
        MappingClassDescription::Periodic(_) | MappingClassDescription::Torus(_)
    )
}

const NOT_ITERATED: &str =
    "iterates n >= 2 are not derived for this type; supply them under \"sequences\" where growth data is needed";

pub fn run_invariants(doc: &InputDocument, n_max: u64) -> Result<InvariantsSection> {
    if n_max == 0 {
        return Err(Error::ZeroArgument);
    }
    let desc = &doc.description;
    let mut notes = Vec::new();
    let seq = |r: Result<IterateSequence>| Avail::from(r.map(|s| IntList(s.values().to_vec())));
    let single = |r: Result<BigInt>| Avail::from(r.map(|v| IntList(vec![v])));
    let floer = floer_homology(desc);
    let section = if iterable(desc) {
        InvariantsSection {
            n_max,
            iterated: true,
            nielsen: seq(nielsen_iterates(desc, n_max)),
            lefschetz: seq(lefschetz_iterates(desc, n_max)),
            dim_hf: seq(hf_iterates(desc, n_max)),
            floer_homology: floer.into(),
            index_list: None,
            notes,
        }
    } else {
        notes.push(NOT_ITERATED.to_string());
        InvariantsSection {
            n_max,
            iterated: false,
            nielsen: single(nielsen_number(desc)),
            lefschetz: single(lefschetz_number(desc)),
            dim_hf: single(floer.clone().map(|g| g.total().into())),
            floer_homology: floer.into(),
            index_list: match desc {
                MappingClassDescription::PseudoAnosov(p) => Some(pa_index_list(&p.fixed_points).0),
                _ => None,
            },
            notes,
        }
    };
    Ok(section)
}

fn dim_hf_sequence(doc: &InputDocument, n: u64) -> Result<IterateSequence> {
    if iterable(&doc.description) {
        return hf_iterates(&doc.description, n);
    }
    doc.sequences
        .get(Invariant::DimHf)
        .ok_or(Error::NotIterable {
            variant: doc.description.variant_name(),
        })
}

fn no_action() -> Error {
    Error::InvalidAction(
        "not supplied; add \"homology_action\" with h1 (and optionally h0, h2)".into(),
    )
}

pub fn run_zeta(doc: &InputDocument, order: usize) -> Result<ZetaSection> {
    if order == 0 {
        return Err(Error::ZeroArgument);
    }
    let chi = doc
        .action()
        .ok_or_else(no_action)
        .and_then(|a| lefschetz_zeta(&a))
        .map(|f| RationalReport::new(&f, order));
    let floer = match &doc.description {
        MappingClassDescription::Periodic(p) => {
            floer_zeta_periodic(p).map(|f| ProductReport::new(&f, order))
        }
        other => Err(Error::UnsupportedVariant(format!(
            "F_phi(z) has a closed form for periodic classes only, not {}",
            other.variant_name()
        ))),
    };
    let series = dim_hf_sequence(doc, order as u64)
        .and_then(|s| floer_zeta_series_oracle(&s, order))
        .map(SeriesReport::new);
    Ok(ZetaSection {
        order,
        chi_zeta: chi.into(),
        floer_zeta: floer.into(),
        floer_zeta_series: series.into(),
    })
}

pub fn run_growth(doc: &InputDocument, n_max: u64) -> Result<GrowthSection> {
    if n_max == 0 {
        return Err(Error::ZeroArgument);
    }
    let window = (1, n_max);
    let desc = &doc.description;
    let dims = dim_hf_sequence(doc, n_max);
    let invariant = match &dims {
        Ok(s) if !iterable(desc) => asymptotic_invariant(desc, Some((s, window))),
        _ => asymptotic_invariant(desc, None),
    };
    let dim_growth = dims.and_then(|s| growth_rate(&s, window));
    let entropy = match desc {
        MappingClassDescription::PseudoAnosov(p) if p.stretch_factor.is_some() => Ok(
            entropy_from_stretch_factor(p.stretch_factor.as_ref().expect("checked")),
        ),
        _ if iterable(desc) => {
            nielsen_iterates(desc, n_max).and_then(|s| entropy_lower_bound(&s, window))
        }
        _ => doc
            .sequences
            .get(Invariant::Nielsen)
            .ok_or(Error::NotIterable {
                variant: desc.variant_name(),
            })
            .and_then(|s| entropy_lower_bound(&s, window)),
    };
    Ok(GrowthSection {
        window,
        asymptotic_invariant: invariant.map(GrowthReport::from).into(),
        dim_hf_growth: dim_growth.map(GrowthReport::from).into(),
        entropy_lower_bound: entropy
            .map(|g| EntropyReport {
                entropy: g.ln(),
                rate: g.into(),
            })
            .into(),
    })
}

fn series_check(
    name: &'static str,
    statement: &str,
    lhs: &TruncatedSeries,
    rhs: &TruncatedSeries,
) -> Check {
    let diff = lhs.first_difference(rhs);
    Check {
        name,
        statement: statement.into(),
        order: lhs.order().min(rhs.order()),
        passed: diff.is_none(),
        first_divergence: diff,
        detail: match diff {
            None => format!("coefficients 0..={} agree", lhs.order().min(rhs.order())),
            Some(k) => format!("coefficient {k}: {} vs {}", lhs.coeff(k), rhs.coeff(k)),
        },
    }
}

/// Compare `lhs(n)` with `rhs(n)` for `n = 1..=n_max` under `ok`.
fn termwise<F>(name: &'static str, statement: &str, n_max: usize, mut pair: F) -> Check
where
    F: FnMut(u64) -> Result<(BigInt, BigInt, bool)>,
{
    for n in 1..=n_max {
        match pair(n as u64) {
            Ok((_, _, true)) => {}
            Ok((l, r, false)) => {
                return Check {
                    name,
                    statement: statement.into(),
                    order: n_max,
                    passed: false,
                    first_divergence: Some(n),
                    detail: format!("n = {n}: {l} vs {r}"),
                }
            }
            Err(e) => {
                return Check {
                    name,
                    statement: statement.into(),
                    order: n_max,
                    passed: false,
                    first_divergence: Some(n),
                    detail: format!("n = {n}: {e}"),
                }
            }
        }
    }
    Check {
        name,
        statement: statement.into(),
        order: n_max,
        passed: true,
        first_divergence: None,
        detail: format!("n = 1..={n_max} agree"),
    }
}

fn failed(name: &'static str, statement: &str, order: usize, e: Error) -> Check {
    Check {
        name,
        statement: statement.into(),
        order,
        passed: false,
        first_divergence: None,
        detail: e.to_string(),
    }
}

fn action_checks(doc: &InputDocument, action: &HomologyAction, order: usize, out: &mut Vec<Check>) {
    let desc = &doc.description;
    let l_seq = action.lefschetz_sequence(order as u64);
    const RATIONAL: &str =
        "L_phi(z) = exp(sum L(phi^n) z^n / n), L(phi^n) = sum_k (-1)^k tr(phi_*k^n)";
    match lefschetz_zeta(action).and_then(|f| Ok((lefschetz_series_oracle(&l_seq, order)?, f))) {
        Ok((oracle, f)) => {
            out.push(series_check(
                "lefschetz_zeta_rational",
                RATIONAL,
                &f.to_series(order),
                &oracle,
            ));
            const LOGDER: &str = "z d/dz log L_phi(z) has coefficients L(phi^n)";
            out.push(match log_derivative_coefficients(&f, order) {
                Ok(c) => termwise("log_derivative", LOGDER, order, |n| {
                    let (a, b) = (
                        c[n as usize - 1].clone(),
                        l_seq.get(n).expect("length").clone(),
                    );
                    let ok = a == b;
                    Ok((a, b, ok))
                }),
                Err(e) => failed("log_derivative", LOGDER, order, e),
            });
        }
        Err(e) => out.push(failed("lefschetz_zeta_rational", RATIONAL, order, e)),
    }
    const MATCH: &str = "trace formula L(phi^n) equals the index sum of the fixed point data";
    let reach = if iterable(desc) { order } else { 1 };
    let from_data = if iterable(desc) {
        lefschetz_iterates(desc, reach as u64).map(|s| s.values().to_vec())
    } else {
        lefschetz_number(desc).map(|l| vec![l])
    };
    out.push(match from_data {
        Ok(v) => termwise("action_matches_description", MATCH, reach, |n| {
            let (a, b) = (action.lefschetz(n), v[n as usize - 1].clone());
            let ok = a == b;
            Ok((a, b, ok))
        }),
        Err(e) => failed("action_matches_description", MATCH, reach, e),
    });
}

fn hf_iterate(desc: &MappingClassDescription, n: u64) -> Result<GradedDimension> {
    match desc {
        MappingClassDescription::Periodic(p) => hf_periodic(p, n),
        MappingClassDescription::Torus(t) => hf_torus_anosov(&t.matrix.pow(n)),
        _ if n == 1 => floer_homology(desc),
        other => Err(Error::NotIterable {
            variant: other.variant_name(),
        }),
    }
}

fn numbers_at(desc: &MappingClassDescription, reach: usize) -> Result<(Vec<BigInt>, Vec<BigInt>)> {
    if iterable(desc) {
        Ok((
            lefschetz_iterates(desc, reach as u64)?.values().to_vec(),
            nielsen_iterates(desc, reach as u64)?.values().to_vec(),
        ))
    } else {
        Ok((vec![lefschetz_number(desc)?], vec![nielsen_number(desc)?]))
    }
}

/// Run every applicable identity at series order `order` (at least
/// [`MIN_VERIFY_ORDER`]).
pub fn run_verify(doc: &InputDocument, order: usize) -> Result<VerifySection> {
    if order < MIN_VERIFY_ORDER {
        return Err(Error::OrderTooSmall {
            order,
            min: MIN_VERIFY_ORDER,
        });
    }
    let desc = &doc.description;
    let mut checks = Vec::new();
    if let Some(action) = doc.action() {
        action_checks(doc, &action, order, &mut checks);
    }
    if let MappingClassDescription::Periodic(p) = desc {
        const PRODUCT: &str =
            "F_phi(z) = prod_{d|m} (1-z^d)^(-P(d)/d) = exp(sum dim HF(phi^n) z^n / n)";
        let r = floer_zeta_periodic(p).and_then(|f| {
            let oracle = floer_zeta_series_oracle(&hf_iterates(desc, order as u64)?, order)?;
            Ok((f.to_series(order), oracle))
        });
        checks.push(match r {
            Ok((lhs, rhs)) => series_check("floer_zeta_product", PRODUCT, &lhs, &rhs),
            Err(e) => failed("floer_zeta_product", PRODUCT, order, e),
        });
    }
    let anosov_or_other = !matches!(desc, MappingClassDescription::Torus(t) if t.matrix.trace().abs() <= BigInt::from(2));
    if anosov_or_other {
        let reach = if iterable(desc) { order } else { 1 };
        const EULER: &str = "chi(HF_*(phi^n)) = L(phi^n)";
        const BOUND: &str = "dim HF_*(phi^n) >= N(phi^n)";
        match numbers_at(desc, reach) {
            Ok((l, nn)) => {
                checks.push(termwise("euler_equals_lefschetz", EULER, reach, |n| {
                    let e = hf_iterate(desc, n)?.euler();
                    let l = l[n as usize - 1].clone();
                    let ok = e == l;
                    Ok((e, l, ok))
                }));
                checks.push(termwise("dim_at_least_nielsen", BOUND, reach, |n| {
                    let d = BigInt::from(hf_iterate(desc, n)?.total());
                    let nn = nn[n as usize - 1].clone();
                    let ok = d >= nn;
                    Ok((d, nn, ok))
                }));
            }
            Err(e) => {
                checks.push(failed("euler_equals_lefschetz", EULER, reach, e.clone()));
                checks.push(failed("dim_at_least_nielsen", BOUND, reach, e));
            }
        }
    }
    if let MappingClassDescription::Torus(t) = desc {
        torus_checks(&t.matrix, order, anosov_or_other, &mut checks);
    }
    supplied_checks(doc, &mut checks);
    Ok(VerifySection {
        order,
        passed: checks.iter().all(|c| c.passed),
        checks,
    })
}

fn torus_checks(a: &IntMatrix, order: usize, anosov: bool, out: &mut Vec<Check>) {
    const ALEX: &str = "A_K(t) / (1-t)^2 = L_phi(t) with A_K(t) = det(I - A t)";
    let r = gromov_series_from_alexander(&a.charpoly_reversed(), order).and_then(|g| {
        Ok((
            g,
            lefschetz_zeta(&HomologyAction::torus(a))?.to_series(order),
        ))
    });
    out.push(match r {
        Ok((g, l)) => series_check("alexander_identity", ALEX, &g, &l),
        Err(e) => failed("alexander_identity", ALEX, order, e),
    });
    if anosov {
        const TRACE: &str = "|det(I - A^n)| = |2 - tr(A^n)|";
        out.push(termwise("nielsen_trace_identity", TRACE, order, |n| {
            let lhs = torus_nielsen(a, n)?;
            let rhs = (BigInt::from(2) - a.pow(n).trace()).abs();
            let ok = lhs == rhs;
            Ok((lhs, rhs, ok))
        }));
    }
}

/// Supplied sequences must agree with what is computed at `n = 1` and
/// satisfy `dim HF ≥ N` termwise.
fn supplied_checks(doc: &InputDocument, out: &mut Vec<Check>) {
    let desc = &doc.description;
    let dims = doc.sequences.get(Invariant::DimHf);
    let niel = doc.sequences.get(Invariant::Nielsen);
    const FIRST: &str = "supplied sequences start with the computed n = 1 values";
    if dims.is_some() || niel.is_some() {
        let first = |s: &Option<IterateSequence>| s.as_ref().and_then(|s| s.get(1).cloned());
        let computed_dim = floer_homology(desc).map(|g| BigInt::from(g.total()));
        let computed_n = nielsen_number(desc);
        let mut pairs = Vec::new();
        if let Some(d) = first(&dims) {
            pairs.push((d, computed_dim));
        }
        if let Some(n) = first(&niel) {
            pairs.push((n, computed_n));
        }
        let bad = pairs
            .into_iter()
            .find_map(|(given, computed)| match computed {
                Ok(c) if c == given => None,
                Ok(c) => Some(format!("supplied {given}, computed {c}")),
                Err(e) => Some(e.to_string()),
            });
        out.push(Check {
            name: "supplied_sequences_start",
            statement: FIRST.into(),
            order: 1,
            passed: bad.is_none(),
            first_divergence: bad.as_ref().map(|_| 1),
            detail: bad.unwrap_or_else(|| "agree".into()),
        });
    }
    if let (Some(d), Some(n)) = (dims, niel) {
        let reach = d.n_max().min(n.n_max()) as usize;
        out.push(termwise(
            "supplied_dim_at_least_nielsen",
            "supplied dim HF(phi^n) >= supplied N(phi^n)",
            reach,
            |k| {
                let (a, b) = (
                    d.get(k).expect("length").clone(),
                    n.get(k).expect("length").clone(),
                );
                let ok = a >= b && !b.is_negative();
                Ok((a, b, ok))
            },
        ));
    }
}

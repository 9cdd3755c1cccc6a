use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::fixed_points::{HomologyAction, Invariant, IterateSequence};
use crate::serde_int;
use crate::surface::{validate, MappingClassDescription};
use crate::zeta::check_action_matches;

/// Per-iterate data the library cannot derive for a class, e.g.
/// `dim HF_*(ψⁿ)` of a pseudo-Anosov map.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuppliedSequences {
    #[serde(
        default,
        skip_serializing_if = "Option::is_none",
        with = "opt_bigint_vec"
    )]
    pub dim_hf: Option<Vec<BigInt>>,
    #[serde(
        default,
        skip_serializing_if = "Option::is_none",
        with = "opt_bigint_vec"
    )]
    pub nielsen: Option<Vec<BigInt>>,
}

mod opt_bigint_vec {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(
        v: &Option<Vec<BigInt>>,
        s: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct W<'a>(#[serde(with = "serde_int::bigint_vec")] &'a Vec<BigInt>);
        v.as_ref().map(W).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<Option<Vec<BigInt>>, D::Error> {
        #[derive(Deserialize)]
        struct W(#[serde(with = "serde_int::bigint_vec")] Vec<BigInt>);
        Ok(Option::<W>::deserialize(d)?.map(|w| w.0))
    }
}

impl SuppliedSequences {
    pub fn is_empty(&self) -> bool {
        self.dim_hf.is_none() && self.nielsen.is_none()
    }

    pub fn get(&self, label: Invariant) -> Option<IterateSequence> {
        let values = match label {
            Invariant::DimHf => self.dim_hf.as_ref(),
            Invariant::Nielsen => self.nielsen.as_ref(),
            Invariant::Lefschetz => None,
        }?;
        Some(IterateSequence::new(label, values.clone()))
    }
}

/// One input document: a description, optionally its homology action and
/// per-iterate sequences.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InputDocument {
    #[serde(flatten)]
    pub description: MappingClassDescription,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub homology_action: Option<HomologyAction>,
    #[serde(skip_serializing_if = "SuppliedSequences::is_empty")]
    pub sequences: SuppliedSequences,
}

impl InputDocument {
    pub fn new(description: MappingClassDescription) -> Self {
        Self {
            description,
            homology_action: None,
            sequences: SuppliedSequences::default(),
        }
    }

    pub fn with_action(mut self, action: HomologyAction) -> Self {
        self.homology_action = Some(action);
        self
    }

    /// The supplied action, or the one a torus matrix determines.
    pub fn action(&self) -> Option<HomologyAction> {
        match (&self.homology_action, &self.description) {
            (Some(a), _) => Some(a.clone()),
            (None, MappingClassDescription::Torus(t)) => Some(HomologyAction::torus(&t.matrix)),
            _ => None,
        }
    }

    /// Validate the description and the action against it.
    pub fn validate(&self) -> Result<()> {
        validate(&self.description).into_result()?;
        if let Some(a) = &self.homology_action {
            check_action_matches(&self.description, a)?;
        }
        Ok(())
    }

    /// JSON form accepted by [`parse_input`].
    pub fn render(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }
}

fn typed<T: for<'de> Deserialize<'de>>(v: Value, prefix: &str) -> Result<T> {
    serde_path_to_error::deserialize(v).map_err(|e| {
        let path = e.path().to_string();
        let field = match (prefix, path.as_str()) {
            ("", p) => p.to_string(),
            (pre, ".") => pre.to_string(),
            (pre, p) => format!("{pre}.{p}"),
        };
        Error::Parse {
            field,
            message: e.into_inner().to_string(),
        }
    })
}

fn typed_description(mut map: serde_json::Map<String, Value>) -> Result<MappingClassDescription> {
    use MappingClassDescription as D;
    let missing = || Error::Parse {
        field: "type".into(),
        message: "missing string field `type`".into(),
    };
    let tag = match map.remove("type") {
        Some(Value::String(t)) => t,
        _ => return Err(missing()),
    };
    let v = Value::Object(map);
    Ok(match tag.as_str() {
        "periodic" => D::Periodic(typed(v, "")?),
        "finite_type" => D::FiniteType(typed(v, "")?),
        "torus" => D::Torus(typed(v, "")?),
        "pseudo_anosov" => D::PseudoAnosov(typed(v, "")?),
        "reducible" => D::Reducible(typed(v, "")?),
        other => {
            return Err(Error::Parse {
                field: "type".into(),
                message: format!(
                    "unknown type `{other}`, expected periodic, finite_type, torus, pseudo_anosov or reducible"
                ),
            })
        }
    })
}

/// Parse and validate one JSON input document.
pub fn parse_input(text: &str) -> Result<InputDocument> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::Parse {
        field: format!("line {} column {}", e.line(), e.column()),
        message: e.to_string(),
    })?;
    let Value::Object(mut map) = value else {
        return Err(Error::Parse {
            field: ".".into(),
            message: "expected a JSON object".into(),
        });
    };
    let action = map.remove("homology_action");
    let sequences = map.remove("sequences");
    let description = typed_description(map)?;
    let homology_action = action.map(|a| typed(a, "homology_action")).transpose()?;
    let sequences = sequences
        .map(|s| typed(s, "sequences"))
        .transpose()?
        .unwrap_or_default();
    let doc = InputDocument {
        description,
        homology_action,
        sequences,
    };
    doc.validate()?;
    Ok(doc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::IntMatrix;
    use crate::surface::{PeriodicClassDesc, TorusAutoDesc};

    #[test]
    fn parses_spec_examples() {
        let cat = parse_input(r#"{"type":"torus","matrix":[[2,1],[1,1]]}"#).unwrap();
        assert_eq!(
            cat.description,
            MappingClassDescription::Torus(TorusAutoDesc::new(IntMatrix::from_i64([
                [2, 1],
                [1, 1]
            ])))
        );
        let hyper = parse_input(
            r#"{"type":"periodic","genus":2,"period":2,"least_period_counts":{"1":6}}"#,
        )
        .unwrap();
        assert_eq!(
            hyper.description,
            MappingClassDescription::Periodic(PeriodicClassDesc::new(2, 2, &[(1, 6)]))
        );
        let bad = parse_input(
            r#"{"type":"periodic","genus":2,"period":4,"least_period_counts":{"2":3}}"#,
        );
        let Err(Error::Validation(report)) = bad else {
            panic!("expected a validation error, got {bad:?}")
        };
        assert!(
            report.to_string().contains("c_2 not divisible by 2"),
            "{report}"
        );
    }

    #[test]
    fn reports_field_paths() {
        let err = parse_input(r#"{"type":"torus","matrix":[[2,1],[1,"x"]]}"#).unwrap_err();
        let Error::Parse { field, .. } = err else {
            panic!("{err:?}")
        };
        assert_eq!(field, "matrix[1][1]");
        let err = parse_input(
            r#"{"type":"torus","matrix":[[2,1],[1,1]],"homology_action":{"h1":[[2,1],[1,true]]}}"#,
        )
        .unwrap_err();
        let Error::Parse { field, .. } = err else {
            panic!("{err:?}")
        };
        assert_eq!(field, "homology_action.h1[1][1]");
        assert!(matches!(parse_input("[1]"), Err(Error::Parse { .. })));
        assert!(matches!(parse_input("{"), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_input(r#"{"type":"klein"}"#),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn rejects_corrupted_actions() {
        let err = parse_input(
            r#"{"type":"torus","matrix":[[2,1],[1,1]],"homology_action":{"h0":[[2]],"h1":[[2,1],[1,1]]}}"#,
        )
        .unwrap_err();
        assert!(matches!(err, Error::InvalidAction(_)), "{err:?}");
    }

    #[test]
    fn big_integers_as_strings() {
        let doc = parse_input(
            r#"{"type":"torus","matrix":[["2",1],[1,1]],"sequences":{"dim_hf":["123456789012345678901234567890"]}}"#,
        )
        .unwrap();
        assert_eq!(
            doc.sequences.dim_hf.as_ref().unwrap()[0],
            "123456789012345678901234567890".parse::<BigInt>().unwrap()
        );
        assert_eq!(parse_input(&doc.render()).unwrap(), doc);
    }
}

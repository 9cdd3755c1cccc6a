//! Input documents, report assembly and rendering.

mod input;
mod sections;
mod text;

use serde::Serialize;

pub use input::{parse_input, InputDocument, SuppliedSequences};
pub use sections::{
    run_growth, run_invariants, run_verify, run_zeta, Avail, Check, EntropyReport, Factor,
    GrowthReport, GrowthSection, IntList, InvariantsSection, ProductReport, RationalReport,
    SeriesReport, VerifySection, ZetaSection, MIN_VERIFY_ORDER,
};

use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Command {
    Invariants,
    Zeta,
    Growth,
    Verify,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    pub n_max: u64,
    pub order: usize,
}

impl Default for Options {
    fn default() -> Self {
        Self {
            n_max: 10,
            order: 20,
        }
    }
}

/// The validated input echoed back with one computed section.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub command: Command,
    pub input: InputDocument,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub invariants: Option<InvariantsSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub zeta: Option<ZetaSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub growth: Option<GrowthSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verification: Option<VerifySection>,
}

impl Report {
    pub fn build(command: Command, input: &InputDocument, opts: Options) -> Result<Self> {
        let mut r = Self {
            command,
            input: input.clone(),
            invariants: None,
            zeta: None,
            growth: None,
            verification: None,
        };
        match command {
            Command::Invariants => r.invariants = Some(run_invariants(input, opts.n_max)?),
            Command::Zeta => r.zeta = Some(run_zeta(input, opts.order)?),
            Command::Growth => r.growth = Some(run_growth(input, opts.n_max)?),
            Command::Verify => r.verification = Some(run_verify(input, opts.order)?),
        }
        Ok(r)
    }

    /// A single JSON object; keys in declaration order, nothing time dependent.
    pub fn to_machine(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    pub fn to_text(&self) -> String {
        text::render(self)
    }

    pub fn failed_check(&self) -> Option<&Check> {
        self.verification
            .as_ref()
            .and_then(VerifySection::first_failure)
    }
}

//! Machine-readable outcome of a claim check.

use serde::Serialize;
use std::collections::BTreeMap;
use std::time::Instant;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VerifyStatus {
    Verified,
    Refuted,
    /// The searched region was limited and the claim is not settled.
    Bounded,
}

/// Result of one claim check, with enough data to replay it: stable claim
/// id, the parameters actually used, seeds, and a witness or counterwitness.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct VerificationReport {
    pub claim_id: String,
    pub parameters: BTreeMap<String, String>,
    pub status: VerifyStatus,
    /// Qualifier on the status, e.g. `vacuous` when no instance of the
    /// hypothesis exists, or `probe` for runs outside the stated range.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "serde_json::Value::is_null")]
    pub witness: serde_json::Value,
    #[serde(skip_serializing_if = "serde_json::Value::is_null")]
    pub counterwitness: serde_json::Value,
    pub elapsed_millis: u64,
    pub seeds: Vec<u64>,
}

/// Accumulates a report while a verifier runs.
pub struct ReportBuilder {
    claim_id: String,
    parameters: BTreeMap<String, String>,
    seeds: Vec<u64>,
    started: Instant,
}

impl ReportBuilder {
    pub fn new(claim_id: &str) -> Self {
        ReportBuilder {
            claim_id: claim_id.to_string(),
            parameters: BTreeMap::new(),
            seeds: Vec::new(),
            started: Instant::now(),
        }
    }

    pub fn param(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }

    pub fn seed(&mut self, seed: u64) -> &mut Self {
        self.seeds.push(seed);
        self
    }

    pub fn verified(self, witness: serde_json::Value) -> VerificationReport {
        self.finish(
            VerifyStatus::Verified,
            None,
            witness,
            serde_json::Value::Null,
        )
    }

    pub fn verified_with_detail(
        self,
        detail: &str,
        witness: serde_json::Value,
    ) -> VerificationReport {
        self.finish(
            VerifyStatus::Verified,
            Some(detail.to_string()),
            witness,
            serde_json::Value::Null,
        )
    }

    pub fn refuted(self, counterwitness: serde_json::Value) -> VerificationReport {
        self.finish(
            VerifyStatus::Refuted,
            None,
            serde_json::Value::Null,
            counterwitness,
        )
    }

    pub fn bounded(self, detail: &str, witness: serde_json::Value) -> VerificationReport {
        self.finish(
            VerifyStatus::Bounded,
            Some(detail.to_string()),
            witness,
            serde_json::Value::Null,
        )
    }

    fn finish(
        self,
        status: VerifyStatus,
        detail: Option<String>,
        witness: serde_json::Value,
        counterwitness: serde_json::Value,
    ) -> VerificationReport {
        VerificationReport {
            claim_id: self.claim_id,
            parameters: self.parameters,
            status,
            detail,
            witness,
            counterwitness,
            elapsed_millis: self.started.elapsed().as_millis() as u64,
            seeds: self.seeds,
        }
    }
}

impl VerificationReport {
    pub fn is_verified(&self) -> bool {
        self.status == VerifyStatus::Verified
    }
}

//! Certificates produced by the connectivity searches.

use serde::Serialize;

/// How the reported value is justified.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateKind {
    /// Minimum over an exhaustive subset enumeration.
    Exact,
    /// A concrete witness shows the value is attainable.
    UpperBound,
    /// The value is a known analytic lower bound, not searched here.
    LowerBoundCited,
}

/// Enumeration caps actually used by a search.
#[derive(Clone, Debug, Default, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SearchBudget {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_cardinality: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub size_cap: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub leaf_subsets: Option<u64>,
}

/// Outcome of a cutset search: the value, the witness behind it, and the
/// component structure left after deleting the witness set.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CutsetCertificate {
    pub kind: CertificateKind,
    pub value: usize,
    /// The cutset itself for exact searches; for witness-based bounds this
    /// is the small side `A` whose neighborhood is the cutset.
    pub witness_set: Vec<usize>,
    pub component_sizes: Vec<usize>,
    pub search_budget: SearchBudget,
}

//! Analysis reports: a serializable rendering of verdicts and certificates.
//!
//! The JSON form round-trips losslessly and embeds the full certificate, so
//! external scripts can re-verify a verdict without this crate: vertex
//! labels are `x<k>` / `u<k>` (1-based) and colors are 1-based subsystem
//! indices.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::criteria::{Certificate, Verdict};
use crate::graph::Vertex;

/// One S-disjoint edge in serialized form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeReport {
    pub begin: String,
    pub color: usize,
    pub end: String,
}

/// Serialized certificate, tagged by kind.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CertificateReport {
    /// States unreachable from every input.
    Nonaccessible { states: Vec<String> },
    /// A state set S with fewer color-counted in-neighbors than members.
    SDilation {
        s_set: Vec<String>,
        t_size: usize,
        per_color_t: BTreeMap<usize, Vec<String>>,
    },
    /// n S-disjoint edges plus one witness stem parent per state.
    SDisjointEdges {
        edges: Vec<EdgeReport>,
        stems: BTreeMap<String, String>,
    },
}

/// Outcome of the randomized numeric cross-check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub trials: usize,
    pub seed: u64,
    /// Controllable-subspace dimension reached by each trial.
    pub dims: Vec<usize>,
    /// The oracle's own verdict: some trial reached full dimension.
    pub controllable: bool,
    /// Whether the oracle agrees with the graph verdict.
    pub agrees: bool,
}

/// Machine-readable analysis outcome.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub n: usize,
    pub controllable: bool,
    pub accessibility_ok: bool,
    pub rank_ok: bool,
    /// The color-blind union-graph test (sufficient only) also passed.
    pub union_sufficient: bool,
    pub certificate: CertificateReport,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub oracle: Option<OracleReport>,
    pub elapsed_us: u64,
}

fn state_label(i: usize) -> String {
    Vertex::State(i).to_string()
}

impl AnalysisReport {
    pub fn new(n: usize, verdict: &Verdict, oracle: Option<OracleReport>, elapsed_us: u64) -> AnalysisReport {
        let certificate = match &verdict.certificate {
            Certificate::Nonaccessible { states } => CertificateReport::Nonaccessible {
                states: states.iter().map(|&s| state_label(s)).collect(),
            },
            Certificate::SDilation(w) => CertificateReport::SDilation {
                s_set: w.s_set.iter().map(|&s| state_label(s)).collect(),
                t_size: w.t_size,
                per_color_t: w
                    .per_color_t
                    .iter()
                    .map(|(&color, set)| {
                        (color, set.iter().map(|v| v.to_string()).collect())
                    })
                    .collect(),
            },
            Certificate::SDisjoint { edges, access } => CertificateReport::SDisjointEdges {
                edges: edges
                    .edges
                    .iter()
                    .map(|e| EdgeReport {
                        begin: e.begin.to_string(),
                        color: e.color,
                        end: state_label(e.end),
                    })
                    .collect(),
                stems: access
                    .forest()
                    .iter()
                    .map(|(&state, parent)| (state_label(state), parent.to_string()))
                    .collect(),
            },
        };
        AnalysisReport {
            n,
            controllable: verdict.controllable,
            accessibility_ok: verdict.accessibility_ok,
            rank_ok: verdict.rank_ok,
            union_sufficient: verdict.union_sufficient,
            certificate,
            oracle,
            elapsed_us,
        }
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("report serializes");
        text.push('\n');
        text
    }

    pub fn from_json(text: &str) -> Result<AnalysisReport, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// Process exit code for this report: 3 when the numeric oracle
    /// disagrees with the graph verdict, else 0/1 for controllable or not.
    /// Formatting options never influence the code.
    pub fn exit_code(&self) -> u8 {
        if let Some(oracle) = &self.oracle {
            if !oracle.agrees {
                return 3;
            }
        }
        if self.controllable {
            0
        } else {
            1
        }
    }
}

impl fmt::Display for AnalysisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "controllable: {}",
            if self.controllable { "yes" } else { "no" }
        )?;
        writeln!(
            f,
            "  accessibility: {}",
            if self.accessibility_ok { "ok" } else { "FAILED" }
        )?;
        writeln!(
            f,
            "  generic rank:  {}",
            if self.rank_ok { "full" } else { "DEFICIENT" }
        )?;
        writeln!(
            f,
            "  union-graph sufficient test: {}",
            if self.union_sufficient {
                "passed"
            } else {
                "not conclusive"
            }
        )?;
        match &self.certificate {
            CertificateReport::Nonaccessible { states } => {
                writeln!(f, "certificate: nonaccessible states {}", states.join(", "))?;
            }
            CertificateReport::SDilation {
                s_set,
                t_size,
                per_color_t,
            } => {
                writeln!(
                    f,
                    "certificate: S-dilation with S = {{{}}}, |T(S)| = {t_size} < {}",
                    s_set.join(", "),
                    s_set.len()
                )?;
                for (color, t) in per_color_t {
                    writeln!(f, "  T_{color}(S) = {{{}}}", t.join(", "))?;
                }
            }
            CertificateReport::SDisjointEdges { edges, stems } => {
                writeln!(f, "certificate: {} S-disjoint edges", edges.len())?;
                for e in edges {
                    writeln!(f, "  {} -[{}]-> {}", e.begin, e.color, e.end)?;
                }
                writeln!(f, "stems (state <- parent):")?;
                for (state, parent) in stems {
                    writeln!(f, "  {state} <- {parent}")?;
                }
            }
        }
        if let Some(oracle) = &self.oracle {
            let full = oracle.dims.iter().filter(|&&d| d == self.n).count();
            writeln!(
                f,
                "oracle: {full}/{} trials reached dimension {} (seed {}) -> {}{}",
                oracle.trials,
                self.n,
                oracle.seed,
                if oracle.controllable {
                    "controllable"
                } else {
                    "not controllable"
                },
                if oracle.agrees {
                    ", agrees"
                } else {
                    ", DISAGREES"
                }
            )?;
        }
        write!(f, "time: {} us", self.elapsed_us)
    }
}

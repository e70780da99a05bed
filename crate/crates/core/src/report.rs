//! Machine-readable run reports: a structural signature of the input
//! graph, hypothesis flags for the known b-chromatic results, and the
//! command-specific payload. Serialization is stable key-ordered JSON so
//! equal runs produce byte-identical reports.

use serde::{Deserialize, Serialize};

use crate::coloring::Coloring;
use crate::constructive::ProcedureReport;
use crate::exact::{ExactResult, SolveStatus};
use crate::graph::Graph;

/// Structural summary every report carries.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSignature {
    pub n: usize,
    pub m: usize,
    pub regular_degree: Option<usize>,
    pub girth: Option<usize>,
    pub diameter: Option<usize>,
    pub has_c4: bool,
    pub has_c6: bool,
}

impl GraphSignature {
    pub fn of(g: &Graph) -> Self {
        GraphSignature {
            n: g.n(),
            m: g.m(),
            regular_degree: g.is_regular(),
            girth: g.girth(),
            diameter: g.diameter(),
            has_c4: g.has_cycle_of_length(4).unwrap_or(false),
            has_c6: g.has_cycle_of_length(6).unwrap_or(false),
        }
    }
}

/// Hypothesis flags for the published sufficient conditions on b(G) and
/// f(G) of d-regular graphs. Each flag states only that the hypothesis
/// holds; conclusions are never asserted.
pub fn theorem_flags(sig: &GraphSignature) -> Vec<(String, bool)> {
    let d = sig.regular_degree;
    let reg = d.is_some();
    let d = d.unwrap_or(0);
    let girth = sig.girth;
    let flag = |name: &str, ok: bool| (name.to_string(), ok);
    vec![
        flag(
            "b_d_plus_1_when_no_c4_no_c6_d_ge_7",
            reg && d >= 7 && !sig.has_c4 && !sig.has_c6,
        ),
        flag("f_bound_when_no_c4_d_ge_7", reg && d >= 7 && !sig.has_c4),
        flag(
            "f_bound_when_girth_5_diam_5_d_ge_7",
            reg && d >= 7 && girth == Some(5) && sig.diameter == Some(5),
        ),
        flag(
            "b_d_plus_1_when_girth_ge_6",
            reg && girth.map_or(true, |g| g >= 6),
        ),
        flag(
            "b_d_plus_1_when_girth_5_no_c6",
            reg && girth == Some(5) && !sig.has_c6,
        ),
        flag("b_d_plus_1_when_n_ge_d4", reg && sig.n >= d.pow(4)),
        flag(
            "b_d_plus_1_when_n_ge_2d3_minus_d2_plus_d",
            reg && sig.n >= 2 * d.pow(3) - d * d + d,
        ),
        flag(
            "b_d_plus_1_when_n_ge_2d3_plus_2d_minus_2d2",
            reg && sig.n + 2 * d * d >= 2 * d.pow(3) + 2 * d,
        ),
        flag(
            "b_d_plus_1_when_no_c4_n_ge_d3_plus_d",
            reg && !sig.has_c4 && sig.n >= d.pow(3) + d,
        ),
        flag(
            "b_d_plus_1_when_no_c4_diam_ge_6",
            reg && !sig.has_c4 && sig.diameter.is_some_and(|x| x >= 6),
        ),
        flag(
            "d_le_6_girth_ge_5_classification",
            reg && d <= 6 && girth.map_or(true, |g| g >= 5),
        ),
    ]
}

/// Command-specific payload of a report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum ReportResult {
    Info,
    Generated {
        path: String,
    },
    Exact {
        value: Option<usize>,
        status: SolveStatus,
        nodes_explored: u64,
        certificate: Option<Coloring>,
    },
    Oracle {
        value: usize,
    },
    Procedure(ProcedureReport),
    Verify {
        proper: bool,
        total: bool,
        dominant_colors: usize,
        b_coloring: Option<bool>,
    },
}

impl From<ExactResult> for ReportResult {
    fn from(r: ExactResult) -> Self {
        ReportResult::Exact {
            value: r.value,
            status: r.status,
            nodes_explored: r.nodes_explored,
            certificate: r.certificate,
        }
    }
}

/// One toolkit run: what was asked, on which graph, and what came out.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub graph_signature: GraphSignature,
    pub known_theorem_flags: Vec<(String, bool)>,
    pub result: ReportResult,
    pub wall_time_ms: u64,
}

impl Report {
    pub fn new(command: String, g: &Graph, result: ReportResult, wall_time_ms: u64) -> Self {
        let graph_signature = GraphSignature::of(g);
        let known_theorem_flags = theorem_flags(&graph_signature);
        Report {
            command,
            graph_signature,
            known_theorem_flags,
            result,
            wall_time_ms,
        }
    }

    /// Stable key-ordered JSON rendering (struct order is fixed).
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> serde_json::Result<Report> {
        serde_json::from_str(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{self, SearchBudget};
    use crate::generators;

    #[test]
    fn report_round_trips_and_is_deterministic() {
        let g = generators::named_graph("petersen").unwrap();
        let result: ReportResult = exact::b_number_exact(&g, SearchBudget::default()).into();
        let report = Report::new("b petersen".into(), &g, result, 0);
        let json = report.to_json();
        let back = Report::from_json(&json).unwrap();
        assert_eq!(back, report);
        assert_eq!(back.to_json(), json);
        assert!(json.contains("\"value\": 3"));
    }

    #[test]
    fn signature_matches_known_instances() {
        let heawood = generators::named_graph("heawood").unwrap();
        let sig = GraphSignature::of(&heawood);
        assert_eq!(sig.n, 14);
        assert_eq!(sig.m, 21);
        assert_eq!(sig.regular_degree, Some(3));
        assert_eq!(sig.girth, Some(6));
        assert!(!sig.has_c4);
        assert!(sig.has_c6);
        let flags = theorem_flags(&sig);
        let get = |name: &str| {
            flags
                .iter()
                .find(|(f, _)| f == name)
                .map(|(_, ok)| *ok)
                .unwrap()
        };
        assert!(get("b_d_plus_1_when_girth_ge_6"));
        assert!(!get("b_d_plus_1_when_no_c4_no_c6_d_ge_7"));
        assert!(!get("f_bound_when_girth_5_diam_5_d_ge_7"));
    }

    #[test]
    fn mcgee_and_hoffman_singleton_flags() {
        let mcgee = generators::named_graph("mcgee").unwrap();
        let sig = GraphSignature::of(&mcgee);
        assert!(!sig.has_c4);
        assert!(!sig.has_c6);
        assert_eq!(sig.regular_degree, Some(3));

        let hs = generators::named_graph("hoffman_singleton").unwrap();
        let sig = GraphSignature::of(&hs);
        assert_eq!(sig.girth, Some(5));
        assert_eq!(sig.diameter, Some(2));
        let flags = theorem_flags(&sig);
        let thm31 = flags
            .iter()
            .find(|(f, _)| f == "f_bound_when_girth_5_diam_5_d_ge_7")
            .unwrap();
        assert!(
            !thm31.1,
            "diameter 2 rules the girth-5/diameter-5 bound out"
        );
        let thm23 = flags
            .iter()
            .find(|(f, _)| f == "f_bound_when_no_c4_d_ge_7")
            .unwrap();
        assert!(thm23.1);
    }
}

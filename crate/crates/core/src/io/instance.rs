//! JSON instance documents and verdict reports.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::ParseError;
use crate::channels::{ChannelSet, MAX_CHANNELS};
use crate::model::{validate, CognitiveRadioNetwork, SecondaryUser};
use crate::verdict::Verdict;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UserDoc {
    pub name: String,
    pub spectrum_map: Vec<String>,
    pub budget: usize,
}

/// Either the string `"complete"` or `{"edges": [[a, b], ...]}` over user names.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PotentialGraphDoc {
    Named(String),
    Edges { edges: Vec<(String, String)> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceDocument {
    pub channels: Vec<String>,
    pub users: Vec<UserDoc>,
    pub potential_graph: PotentialGraphDoc,
}

impl InstanceDocument {
    pub fn from_network(network: &CognitiveRadioNetwork) -> Self {
        let channel = |c: usize| network.channel_names[c].clone();
        let user = |u: usize| network.users[u].name.clone();
        InstanceDocument {
            channels: network.channel_names.clone(),
            users: network
                .users
                .iter()
                .map(|u| UserDoc {
                    name: u.name.clone(),
                    spectrum_map: u.spectrum_map.iter().map(channel).collect(),
                    budget: u.budget,
                })
                .collect(),
            potential_graph: if network.complete {
                PotentialGraphDoc::Named("complete".into())
            } else {
                PotentialGraphDoc::Edges {
                    edges: network.edges.iter().map(|&(a, b)| (user(a), user(b))).collect(),
                }
            },
        }
    }

    /// Resolves names to ids and validates the result.
    pub fn to_network(&self) -> Result<CognitiveRadioNetwork, ParseError> {
        let k = self.channels.len();
        if k > MAX_CHANNELS {
            return Err(ParseError::TooManyChannels(k));
        }
        let mut channel_ids = HashMap::new();
        for (c, name) in self.channels.iter().enumerate() {
            if channel_ids.insert(name.as_str(), c).is_some() {
                return Err(ParseError::DuplicateChannel(name.clone()));
            }
        }
        let mut user_ids = HashMap::new();
        let mut users = Vec::with_capacity(self.users.len());
        for (i, u) in self.users.iter().enumerate() {
            if user_ids.insert(u.name.as_str(), i).is_some() {
                return Err(ParseError::DuplicateUser(u.name.clone()));
            }
            let mut map = ChannelSet::EMPTY;
            for ch in &u.spectrum_map {
                let c = channel_ids.get(ch.as_str()).ok_or_else(|| ParseError::UnknownChannel {
                    user: u.name.clone(),
                    channel: ch.clone(),
                })?;
                map.insert(*c);
            }
            users.push(SecondaryUser::new(u.name.clone(), map, u.budget));
        }
        let (edges, complete) = match &self.potential_graph {
            PotentialGraphDoc::Named(s) if s == "complete" => (Vec::new(), true),
            PotentialGraphDoc::Named(s) => return Err(ParseError::PotentialGraph(s.clone())),
            PotentialGraphDoc::Edges { edges } => {
                let resolve = |name: &String| {
                    user_ids
                        .get(name.as_str())
                        .copied()
                        .ok_or_else(|| ParseError::UnknownUser(name.clone()))
                };
                let edges = edges
                    .iter()
                    .map(|(a, b)| Ok((resolve(a)?, resolve(b)?)))
                    .collect::<Result<Vec<_>, ParseError>>()?;
                (edges, false)
            }
        };
        let network = CognitiveRadioNetwork {
            users,
            channel_count: k,
            channel_names: self.channels.clone(),
            edges,
            complete,
        };
        let report = validate(&network);
        if !report.is_valid() {
            return Err(ParseError::Invalid(report.messages().join("; ")));
        }
        Ok(network)
    }
}

fn syntax(e: serde_json::Error) -> ParseError {
    ParseError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

/// Parses an instance document. A reduction document (an object whose `instance` field holds
/// the instance) is accepted too.
pub fn parse_instance(text: &str) -> Result<CognitiveRadioNetwork, ParseError> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(syntax)?;
    let doc: InstanceDocument = match value.get("instance") {
        Some(inner) => serde_json::from_value(inner.clone()).map_err(|e| ParseError::Syntax {
            line: 0,
            column: 0,
            message: format!("instance: {e}"),
        })?,
        None => serde_json::from_str(text).map_err(syntax)?,
    };
    doc.to_network()
}

/// Pretty-printed instance document with fields in fixed order.
pub fn serialize_instance(network: &CognitiveRadioNetwork) -> String {
    serde_json::to_string_pretty(&InstanceDocument::from_network(network))
        .expect("instance documents always serialize")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessEntry {
    pub user: String,
    pub opened: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StatsDoc {
    pub nodes_explored: u64,
    pub trees_enumerated: u64,
    pub dp_entries: u64,
    pub families_examined: u64,
    pub millis: f64,
}

/// Solver output: verdict, optional witness by name (users in declaration order), counters.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerdictDocument {
    pub connectable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<WitnessEntry>>,
    pub solver: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stats: Option<StatsDoc>,
}

impl VerdictDocument {
    pub fn new(
        network: &CognitiveRadioNetwork,
        verdict: &Verdict,
        with_witness: bool,
        with_stats: bool,
    ) -> Self {
        let witness = verdict.witness.as_ref().filter(|_| with_witness).map(|w| {
            network
                .users
                .iter()
                .zip(&w.opened)
                .map(|(u, set)| WitnessEntry {
                    user: u.name.clone(),
                    opened: set.iter().map(|c| network.channel_names[c].clone()).collect(),
                })
                .collect()
        });
        let s = &verdict.stats;
        VerdictDocument {
            connectable: verdict.connectable,
            witness,
            solver: verdict.solver.name().to_string(),
            stats: with_stats.then_some(StatsDoc {
                nodes_explored: s.nodes_explored,
                trees_enumerated: s.trees_enumerated,
                dp_entries: s.dp_entries,
                families_examined: s.families_examined,
                millis: s.elapsed.as_secs_f64() * 1000.0,
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const PAIR: &str = r#"{
        "channels": ["a"],
        "users": [
            {"name": "s1", "spectrum_map": ["a"], "budget": 1},
            {"name": "s2", "spectrum_map": ["a"], "budget": 1}
        ],
        "potential_graph": {"edges": [["s1", "s2"]]}
    }"#;

    #[test]
    fn parses_pair() {
        let net = parse_instance(PAIR).unwrap();
        assert_eq!(net.user_count(), 2);
        assert_eq!(net.channel_count, 1);
        assert_eq!(net.edges, vec![(0, 1)]);
    }

    #[test]
    fn complete_graph_keyword() {
        let text = r#"{"channels": ["a"], "users": [
            {"name": "x", "spectrum_map": ["a"], "budget": 1},
            {"name": "y", "spectrum_map": [], "budget": 1},
            {"name": "z", "spectrum_map": ["a"], "budget": 1}],
            "potential_graph": "complete"}"#;
        let net = parse_instance(text).unwrap();
        assert!(net.complete);
        assert_eq!(net.potential_graph().edge_count(), 3);
    }

    #[test]
    fn undeclared_channel_named() {
        let text = PAIR.replace(r#""spectrum_map": ["a"], "budget": 1},
            {"name": "s2""#, r#""spectrum_map": ["z"], "budget": 1},
            {"name": "s2""#);
        let err = parse_instance(&text).unwrap_err();
        assert_eq!(
            err,
            ParseError::UnknownChannel {
                user: "s1".into(),
                channel: "z".into()
            }
        );
    }

    #[test]
    fn errors_carry_context() {
        let dup = PAIR.replace("\"s2\", \"spectrum", "\"s1\", \"spectrum");
        assert_eq!(parse_instance(&dup).unwrap_err(), ParseError::DuplicateUser("s1".into()));
        let bad = parse_instance("{\"channels\": [}").unwrap_err();
        assert!(matches!(bad, ParseError::Syntax { line: 1, .. }));
        let many: Vec<String> = (0..63).map(|c| format!("\"c{c}\"")).collect();
        let text = format!(
            "{{\"channels\": [{}], \"users\": [], \"potential_graph\": \"complete\"}}",
            many.join(",")
        );
        assert_eq!(parse_instance(&text).unwrap_err(), ParseError::TooManyChannels(63));
        let zero = PAIR.replace("\"budget\": 1}", "\"budget\": 0}");
        assert!(parse_instance(&zero).unwrap_err().to_string().contains("budget"));
    }

    #[test]
    fn serialize_round_trip() {
        let net = parse_instance(PAIR).unwrap();
        let text = serialize_instance(&net);
        assert_eq!(parse_instance(&text).unwrap(), net);
        assert_eq!(serialize_instance(&parse_instance(&text).unwrap()), text);
    }

    #[test]
    fn wrapped_instance_accepted() {
        let wrapped = format!("{{\"instance\": {PAIR}, \"forward_map\": {{}}}}");
        assert_eq!(parse_instance(&wrapped).unwrap(), parse_instance(PAIR).unwrap());
    }
}

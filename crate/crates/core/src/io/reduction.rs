//! Output document for generated instances.

use std::collections::BTreeMap;

use serde::Serialize;

use super::InstanceDocument;
use crate::reductions::{MapTarget, ReductionArtifact, ReductionKind};

/// Where a source object went, by name.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NamedTarget {
    User(String),
    Channel(String),
}

/// A generated instance together with its construction and forward map. [`super::parse_instance`]
/// reads it back through the `instance` field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionDocument {
    pub kind: ReductionKind,
    pub instance: InstanceDocument,
    pub forward_map: BTreeMap<String, NamedTarget>,
}

impl ReductionDocument {
    pub fn from_artifact(art: &ReductionArtifact) -> Self {
        let net = &art.network;
        let forward_map = art
            .forward_map
            .iter()
            .map(|(label, target)| {
                let named = match *target {
                    MapTarget::User(u) => NamedTarget::User(net.users[u].name.clone()),
                    MapTarget::Channel(c) => NamedTarget::Channel(net.channel_names[c].clone()),
                };
                (label.clone(), named)
            })
            .collect();
        ReductionDocument {
            kind: art.kind,
            instance: InstanceDocument::from_network(net),
            forward_map,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reduction documents always serialize")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::io::parse_instance;
    use crate::reductions::vertex_cover_to_crn;

    #[test]
    fn reads_back_as_instance() {
        let art = vertex_cover_to_crn(&Graph::complete(3), 2).unwrap();
        let doc = ReductionDocument::from_artifact(&art);
        assert_eq!(doc.forward_map["v1"], NamedTarget::Channel("c1".into()));
        assert_eq!(doc.forward_map["e0-2"], NamedTarget::User("U0-2".into()));
        let text = doc.to_json();
        assert!(text.contains("\"construction\": \"vertex-cover\""));
        assert_eq!(parse_instance(&text).unwrap(), art.network);
    }
}

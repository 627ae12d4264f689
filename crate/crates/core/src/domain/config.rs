//! Vocabulary/layer configuration file.
//!
//! A TOML document with optional top-level keys `attacker`, `victim`,
//! `target`, `attack_path`, `hazardous_behavior`, `attack_method` (arrays of
//! labels merged over the built-in defaults), `layers` (array of
//! `{ name, nodes }` tables replacing the default hierarchy), and
//! `transmit_layer` / `receive_layer` (1-based indices). See
//! `docs/config-formats.md` for the full syntax.

use std::path::Path;

use serde::Deserialize;

use super::layers::{Layer, LayerError, LayerHierarchy};
use super::vocab::{AttributeVocabulary, LabelSet};

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("cannot read config {path}: {source}")]
    Unreadable {
        path: String,
        source: std::io::Error,
    },
    #[error("cannot parse config: {0}")]
    Parse(#[from] toml::de::Error),
    #[error("empty label in key {0:?}")]
    EmptyLabel(&'static str),
    #[error(transparent)]
    Layers(#[from] LayerError),
}

/// Parsed configuration: vocabulary extensions merged over defaults, plus
/// the layer hierarchy (default when the file does not redefine it).
#[derive(Debug, Clone, PartialEq)]
pub struct DomainConfig {
    pub vocabulary: AttributeVocabulary,
    pub layers: LayerHierarchy,
}

impl Default for DomainConfig {
    fn default() -> Self {
        Self {
            vocabulary: AttributeVocabulary::default(),
            layers: LayerHierarchy::default(),
        }
    }
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    #[serde(default)]
    attacker: Vec<String>,
    #[serde(default)]
    victim: Vec<String>,
    #[serde(default)]
    target: Vec<String>,
    #[serde(default)]
    attack_path: Vec<String>,
    #[serde(default)]
    hazardous_behavior: Vec<String>,
    #[serde(default)]
    attack_method: Vec<String>,
    layers: Option<Vec<LayerEntry>>,
    transmit_layer: Option<usize>,
    receive_layer: Option<usize>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct LayerEntry {
    name: String,
    #[serde(default)]
    nodes: Vec<String>,
}

impl DomainConfig {
    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Unreadable {
            path: path.display().to_string(),
            source,
        })?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let file: ConfigFile = toml::from_str(text)?;

        let sets: [(&'static str, &Vec<String>); 6] = [
            ("attacker", &file.attacker),
            ("victim", &file.victim),
            ("target", &file.target),
            ("attack_path", &file.attack_path),
            ("hazardous_behavior", &file.hazardous_behavior),
            ("attack_method", &file.attack_method),
        ];
        for (key, labels) in sets {
            if labels.iter().any(|l| l.trim().is_empty()) {
                return Err(ConfigError::EmptyLabel(key));
            }
        }

        let mut extension = AttributeVocabulary::empty();
        extension.attacker = LabelSet::from_labels(file.attacker);
        extension.victim = LabelSet::from_labels(file.victim);
        extension.target = LabelSet::from_labels(file.target);
        extension.attack_path = LabelSet::from_labels(file.attack_path);
        extension.hazardous_behavior = LabelSet::from_labels(file.hazardous_behavior);
        extension.attack_method = LabelSet::from_labels(file.attack_method);
        let vocabulary = AttributeVocabulary::default().merged(&extension);

        let layers = match file.layers {
            Some(entries) => {
                let default = LayerHierarchy::default();
                let tx = file.transmit_layer.unwrap_or(default.transmit_layer_index());
                let rx = file.receive_layer.unwrap_or(default.receive_layer_index());
                LayerHierarchy::new(
                    entries
                        .into_iter()
                        .map(|e| Layer {
                            name: e.name,
                            nodes: e.nodes,
                        })
                        .collect(),
                    tx,
                    rx,
                )?
            }
            None => {
                let default = LayerHierarchy::default();
                match (file.transmit_layer, file.receive_layer) {
                    (None, None) => default,
                    (tx, rx) => LayerHierarchy::new(
                        default.layers().to_vec(),
                        tx.unwrap_or(default.transmit_layer_index()),
                        rx.unwrap_or(default.receive_layer_index()),
                    )?,
                }
            }
        };

        Ok(Self { vocabulary, layers })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::vocab::{validate_label, AttributeCategory, Membership};

    #[test]
    fn empty_config_yields_defaults() {
        let config = DomainConfig::parse("").unwrap();
        assert_eq!(config, DomainConfig::default());
    }

    #[test]
    fn extensions_merge_over_defaults() {
        let config = DomainConfig::parse(
            r#"
victim = ["EVCS"]
target = ["CBs"]
"#,
        )
        .unwrap();
        assert_eq!(
            validate_label(AttributeCategory::Victim, "EVCS", &config.vocabulary),
            Membership::Known
        );
        assert_eq!(
            validate_label(AttributeCategory::Target, "BMS", &config.vocabulary),
            Membership::Known
        );
    }

    #[test]
    fn custom_layers_replace_defaults() {
        let config = DomainConfig::parse(
            r#"
layers = [
  { name = "one", nodes = ["a"] },
  { name = "two", nodes = ["b"] },
  { name = "three", nodes = ["c"] },
  { name = "four", nodes = ["d"] },
]
transmit_layer = 2
receive_layer = 3
"#,
        )
        .unwrap();
        assert_eq!(config.layers.depth(), 4);
        assert_eq!(config.layers.transmit_layer().name, "two");
    }

    #[test]
    fn rejects_empty_labels_and_bad_layers() {
        assert!(DomainConfig::parse("attacker = [\"\"]").is_err());
        assert!(DomainConfig::parse(
            r#"
layers = [
  { name = "one", nodes = ["a"] },
  { name = "two", nodes = ["b"] },
]
"#
        )
        .is_err());
        assert!(DomainConfig::parse("unknown_key = 1").is_err());
    }
}

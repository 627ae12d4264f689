//! The layered station model backing the transmission channel.
//!
//! The hierarchy is data, not code: layers load from configuration, with a
//! six-layer default. The probabilistic channel reads symbols transmitted by
//! one layer (default: layer 3, core entities) and received by another
//! (default: layer 4, components), so at least four layers must exist.

use serde::{Deserialize, Serialize};

/// Layer hierarchy construction failure.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LayerError {
    #[error("hierarchy needs at least 4 layers, got {0}")]
    TooFewLayers(usize),
    #[error("layer {layer:?} repeats node label {node:?}")]
    DuplicateNode { layer: String, node: String },
    #[error("{role} layer index {index} is out of range 1-{count}")]
    LayerIndexOutOfRange {
        role: &'static str,
        index: usize,
        count: usize,
    },
    #[error("transmit and receive layers must differ (both {0})")]
    SameTransmitReceive(usize),
}

/// One named layer and its node labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Layer {
    pub name: String,
    pub nodes: Vec<String>,
}

impl Layer {
    pub fn new(name: impl Into<String>, nodes: impl IntoIterator<Item = impl Into<String>>) -> Self {
        Self {
            name: name.into(),
            nodes: nodes.into_iter().map(Into::into).collect(),
        }
    }
}

/// Ordered stack of station layers plus the transmit/receive designation
/// used by the channel model. Layer indices are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LayerHierarchy {
    layers: Vec<Layer>,
    transmit_layer: usize,
    receive_layer: usize,
}

impl LayerHierarchy {
    pub fn new(
        layers: Vec<Layer>,
        transmit_layer: usize,
        receive_layer: usize,
    ) -> Result<Self, LayerError> {
        if layers.len() < 4 {
            return Err(LayerError::TooFewLayers(layers.len()));
        }
        for layer in &layers {
            let mut seen = std::collections::BTreeSet::new();
            for node in &layer.nodes {
                if !seen.insert(node) {
                    return Err(LayerError::DuplicateNode {
                        layer: layer.name.clone(),
                        node: node.clone(),
                    });
                }
            }
        }
        let count = layers.len();
        for (role, index) in [("transmit", transmit_layer), ("receive", receive_layer)] {
            if index == 0 || index > count {
                return Err(LayerError::LayerIndexOutOfRange { role, index, count });
            }
        }
        if transmit_layer == receive_layer {
            return Err(LayerError::SameTransmitReceive(transmit_layer));
        }
        Ok(Self {
            layers,
            transmit_layer,
            receive_layer,
        })
    }

    pub fn layers(&self) -> &[Layer] {
        &self.layers
    }

    pub fn depth(&self) -> usize {
        self.layers.len()
    }

    /// 1-based index of the transmitting layer.
    pub fn transmit_layer_index(&self) -> usize {
        self.transmit_layer
    }

    /// 1-based index of the receiving layer.
    pub fn receive_layer_index(&self) -> usize {
        self.receive_layer
    }

    pub fn transmit_layer(&self) -> &Layer {
        &self.layers[self.transmit_layer - 1]
    }

    pub fn receive_layer(&self) -> &Layer {
        &self.layers[self.receive_layer - 1]
    }
}

impl Default for LayerHierarchy {
    fn default() -> Self {
        Self::new(
            vec![
                Layer::new("EVCS system", ["EVCS"]),
                Layer::new("communication channel", ["OCPP", "IEC 61850", "ISO 15118"]),
                Layer::new("core entities", ["EV", "power grid", "cloud server"]),
                Layer::new(
                    "components",
                    [
                        "BMS",
                        "CB",
                        "charging adapter",
                        "cooling system",
                        "smart meter",
                        "HMI",
                    ],
                ),
                Layer::new(
                    "operations",
                    ["charging", "discharging", "open", "closed", "scheduling"],
                ),
                Layer::new("operation outcomes", ["completed", "faulted", "aborted"]),
            ],
            3,
            4,
        )
        .expect("default hierarchy is valid")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_has_six_layers_and_channel_roles() {
        let h = LayerHierarchy::default();
        assert_eq!(h.depth(), 6);
        assert_eq!(h.transmit_layer().name, "core entities");
        assert_eq!(h.receive_layer().name, "components");
    }

    #[test]
    fn rejects_fewer_than_four_layers() {
        let layers = vec![
            Layer::new("a", ["x"]),
            Layer::new("b", ["y"]),
            Layer::new("c", ["z"]),
        ];
        assert_eq!(
            LayerHierarchy::new(layers, 1, 2),
            Err(LayerError::TooFewLayers(3))
        );
    }

    #[test]
    fn rejects_duplicate_nodes_within_a_layer() {
        let layers = vec![
            Layer::new("a", ["x", "x"]),
            Layer::new("b", ["y"]),
            Layer::new("c", ["z"]),
            Layer::new("d", ["w"]),
        ];
        assert!(matches!(
            LayerHierarchy::new(layers, 1, 2),
            Err(LayerError::DuplicateNode { .. })
        ));
    }

    #[test]
    fn rejects_bad_channel_roles() {
        let layers = || {
            vec![
                Layer::new("a", ["x"]),
                Layer::new("b", ["y"]),
                Layer::new("c", ["z"]),
                Layer::new("d", ["w"]),
            ]
        };
        assert!(matches!(
            LayerHierarchy::new(layers(), 3, 3),
            Err(LayerError::SameTransmitReceive(3))
        ));
        assert!(matches!(
            LayerHierarchy::new(layers(), 0, 2),
            Err(LayerError::LayerIndexOutOfRange { .. })
        ));
        assert!(matches!(
            LayerHierarchy::new(layers(), 1, 5),
            Err(LayerError::LayerIndexOutOfRange { .. })
        ));
    }
}

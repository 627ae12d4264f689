//! The 5Ws & 1H attribute vocabularies.
//!
//! Six of the eight report attributes carry label sets (attacker, victim,
//! target, attack path, hazardous behavior, attack method); date and time are
//! format-validated instead. Labels match case-insensitively, so `Tampering`
//! and `tampering` are the same entry. Unknown labels are never rejected:
//! membership checks return [`Membership::Extended`] and downstream reports
//! carry the flag.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::timestamp::IncidentTimestamp;

/// The eight report attributes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AttributeCategory {
    Attacker,
    Victim,
    Target,
    Date,
    Time,
    AttackPath,
    HazardousBehavior,
    AttackMethod,
}

impl AttributeCategory {
    /// Conventional symbol name for renderings (alpha, nu, tau, ...).
    pub fn symbol(self) -> &'static str {
        match self {
            AttributeCategory::Attacker => "alpha",
            AttributeCategory::Victim => "nu",
            AttributeCategory::Target => "tau",
            AttributeCategory::Date => "delta",
            AttributeCategory::Time => "iota",
            AttributeCategory::AttackPath => "rho",
            AttributeCategory::HazardousBehavior => "beta",
            AttributeCategory::AttackMethod => "omega",
        }
    }
}

/// Result of a vocabulary membership query.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Membership {
    /// Label belongs to the loaded vocabulary.
    Known,
    /// Label is outside the vocabulary; accepted but flagged in reports.
    Extended,
}

/// One label set; keys are the lowercase form, values the display form first
/// seen, so merging is idempotent and order-independent for disjoint inputs.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LabelSet {
    entries: BTreeMap<String, String>,
}

impl LabelSet {
    pub fn from_labels<I, S>(labels: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut set = Self::default();
        for label in labels {
            set.insert(label.into());
        }
        set
    }

    fn insert(&mut self, label: String) {
        self.entries.entry(label.to_lowercase()).or_insert(label);
    }

    pub fn contains(&self, label: &str) -> bool {
        self.entries.contains_key(&label.to_lowercase())
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Display labels in deterministic (lowercase-sorted) order.
    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.entries.values().map(String::as_str)
    }

    fn merged(&self, other: &LabelSet) -> LabelSet {
        let mut entries = self.entries.clone();
        for (key, display) in &other.entries {
            entries.entry(key.clone()).or_insert_with(|| display.clone());
        }
        LabelSet { entries }
    }
}

/// The six label sets of Table-style incident attributes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AttributeVocabulary {
    pub attacker: LabelSet,
    pub victim: LabelSet,
    pub target: LabelSet,
    pub attack_path: LabelSet,
    pub hazardous_behavior: LabelSet,
    pub attack_method: LabelSet,
}

impl Default for AttributeVocabulary {
    fn default() -> Self {
        Self {
            attacker: LabelSet::from_labels(["hacker", "spy", "terrorist", "vandal", "raider"]),
            victim: LabelSet::from_labels([
                "EV",
                "power grid",
                "cloud system",
                "communication protocols",
            ]),
            target: LabelSet::from_labels([
                "OCPP",
                "BMS",
                "charging adapter",
                "cooling system",
                "smart meter",
                "HMI",
            ]),
            attack_path: LabelSet::from_labels(["OTA", "software kickout", "incorrect coding"]),
            hazardous_behavior: LabelSet::from_labels([
                "faulty SOC",
                "unintended overcharging",
                "incorrect scheduling",
                "system malfunction",
            ]),
            attack_method: LabelSet::from_labels([
                "spoofing",
                "tampering",
                "repudiation",
                "information disclosure",
                "denial of service",
            ]),
        }
    }
}

impl AttributeVocabulary {
    /// Union with `extension`; existing display forms win on collision.
    /// Idempotent, and order-independent for disjoint extensions.
    pub fn merged(&self, extension: &AttributeVocabulary) -> AttributeVocabulary {
        AttributeVocabulary {
            attacker: self.attacker.merged(&extension.attacker),
            victim: self.victim.merged(&extension.victim),
            target: self.target.merged(&extension.target),
            attack_path: self.attack_path.merged(&extension.attack_path),
            hazardous_behavior: self
                .hazardous_behavior
                .merged(&extension.hazardous_behavior),
            attack_method: self.attack_method.merged(&extension.attack_method),
        }
    }

    /// An empty vocabulary, useful as a merge base for user extensions.
    pub fn empty() -> Self {
        Self {
            attacker: LabelSet::default(),
            victim: LabelSet::default(),
            target: LabelSet::default(),
            attack_path: LabelSet::default(),
            hazardous_behavior: LabelSet::default(),
            attack_method: LabelSet::default(),
        }
    }

    fn set_for(&self, category: AttributeCategory) -> Option<&LabelSet> {
        match category {
            AttributeCategory::Attacker => Some(&self.attacker),
            AttributeCategory::Victim => Some(&self.victim),
            AttributeCategory::Target => Some(&self.target),
            AttributeCategory::AttackPath => Some(&self.attack_path),
            AttributeCategory::HazardousBehavior => Some(&self.hazardous_behavior),
            AttributeCategory::AttackMethod => Some(&self.attack_method),
            AttributeCategory::Date | AttributeCategory::Time => None,
        }
    }
}

/// Membership query for one attribute label.
///
/// Set-backed categories check the vocabulary case-insensitively. Date and
/// time carry no sets: their labels are known when they parse in the
/// canonical text formats.
pub fn validate_label(
    category: AttributeCategory,
    label: &str,
    vocab: &AttributeVocabulary,
) -> Membership {
    let known = match category {
        AttributeCategory::Date => {
            IncidentTimestamp::parse(label, "UTC", "00:00:00:00").is_ok()
        }
        AttributeCategory::Time => {
            IncidentTimestamp::parse("01-01-00", "UTC", label).is_ok()
        }
        _ => vocab
            .set_for(category)
            .map(|set| set.contains(label))
            .unwrap_or(false),
    };
    if known {
        Membership::Known
    } else {
        Membership::Extended
    }
}

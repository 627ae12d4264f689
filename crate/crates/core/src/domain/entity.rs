//! Station entity and mitigator references.
//!
//! An entity reference names the i-th component of one of the five station
//! subsystems; a mitigator reference names the j-th component of one of the
//! two mitigation families. Both are closed vocabularies with structural
//! equality.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Construction failure for a reference type.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RefError {
    #[error("component index must be at least 1")]
    ZeroIndex,
}

/// The five station subsystems an entity can belong to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Subsystem {
    PowerGrid,
    Ev,
    CloudServer,
    CommunicationProtocols,
    StationInfrastructure,
}

impl Subsystem {
    /// Single-letter code used in compact renderings.
    pub fn code(self) -> char {
        match self {
            Subsystem::PowerGrid => 'G',
            Subsystem::Ev => 'V',
            Subsystem::CloudServer => 'O',
            Subsystem::CommunicationProtocols => 'P',
            Subsystem::StationInfrastructure => 'S',
        }
    }

    pub fn from_code(code: char) -> Option<Self> {
        match code {
            'G' => Some(Subsystem::PowerGrid),
            'V' => Some(Subsystem::Ev),
            'O' => Some(Subsystem::CloudServer),
            'P' => Some(Subsystem::CommunicationProtocols),
            'S' => Some(Subsystem::StationInfrastructure),
            _ => None,
        }
    }
}

/// The two mitigation families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MitigatorKind {
    /// Physical and technical controls (guards, cameras, firewalls, MFA).
    Controls,
    /// Intrusion detection and prevention.
    IntrusionDetection,
}

impl MitigatorKind {
    pub fn code(self) -> char {
        match self {
            MitigatorKind::Controls => 'C',
            MitigatorKind::IntrusionDetection => 'I',
        }
    }

    pub fn from_code(code: char) -> Option<Self> {
        match code {
            'C' => Some(MitigatorKind::Controls),
            'I' => Some(MitigatorKind::IntrusionDetection),
            _ => None,
        }
    }
}

/// Reference to one component of a station subsystem (index starts at 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EntityRef {
    subsystem: Subsystem,
    index: u32,
}

impl EntityRef {
    pub fn new(subsystem: Subsystem, index: u32) -> Result<Self, RefError> {
        if index == 0 {
            return Err(RefError::ZeroIndex);
        }
        Ok(Self { subsystem, index })
    }

    pub fn subsystem(&self) -> Subsystem {
        self.subsystem
    }

    pub fn index(&self) -> u32 {
        self.index
    }
}

impl fmt::Display for EntityRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.subsystem.code(), self.index)
    }
}

/// Reference to one component of a mitigation family (index starts at 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct MitigatorRef {
    kind: MitigatorKind,
    index: u32,
}

impl MitigatorRef {
    pub fn new(kind: MitigatorKind, index: u32) -> Result<Self, RefError> {
        if index == 0 {
            return Err(RefError::ZeroIndex);
        }
        Ok(Self { kind, index })
    }

    pub fn kind(&self) -> MitigatorKind {
        self.kind
    }

    pub fn index(&self) -> u32 {
        self.index
    }
}

impl fmt::Display for MitigatorRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind.code(), self.index)
    }
}

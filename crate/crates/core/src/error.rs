//! Error type shared by the model layers.

use std::fmt;

/// Errors produced by the geometry, channel, detection, localization and
/// Monte Carlo layers.
#[derive(Debug, Clone, PartialEq)]
pub enum ModelError {
    /// A parameter that must be strictly positive (or non-negative) was not.
    NonPositive { name: &'static str, value: f64 },
    /// The receiver is not strictly above the ground node, so the elevation
    /// angle is undefined for this model.
    ReceiverNotAbove { receiver_z: f64, ground_z: f64 },
    /// Elevation angle outside the model's [0, 90] degree domain.
    ThetaOutOfRange { theta_deg: f64 },
    /// Link length inside the 1 m reference distance of the path-loss model.
    DistanceBelowReference { distance_m: f64 },
    /// Environment parameters violate a model constraint.
    InvalidEnvironment { reason: String },
    /// Link budget parameters violate a model constraint.
    InvalidBudget { reason: String },
    /// Transmit power interval with p_min > p_max or C outside the interval.
    InvalidPowerRange { reason: String },
    /// Anchor layout unusable for trilateration (collinear or coincident).
    DegenerateDeployment { reason: String },
    /// A grid argument was empty or not sorted ascending.
    InvalidGrid { reason: String },
    /// Scenario-level invariant violation.
    InvalidScenario { reason: String },
}

impl fmt::Display for ModelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelError::NonPositive { name, value } => {
                write!(f, "{name} must be positive, got {value}")
            }
            ModelError::ReceiverNotAbove { receiver_z, ground_z } => write!(
                f,
                "receiver altitude {receiver_z} m is not above ground node altitude {ground_z} m"
            ),
            ModelError::ThetaOutOfRange { theta_deg } => {
                write!(f, "elevation angle {theta_deg} deg outside [0, 90]")
            }
            ModelError::DistanceBelowReference { distance_m } => {
                write!(f, "link distance {distance_m} m is inside the 1 m reference distance")
            }
            ModelError::InvalidEnvironment { reason } => {
                write!(f, "invalid environment parameters: {reason}")
            }
            ModelError::InvalidBudget { reason } => write!(f, "invalid link budget: {reason}"),
            ModelError::InvalidPowerRange { reason } => {
                write!(f, "invalid transmit power range: {reason}")
            }
            ModelError::DegenerateDeployment { reason } => {
                write!(f, "degenerate deployment: {reason}")
            }
            ModelError::InvalidGrid { reason } => write!(f, "invalid grid: {reason}"),
            ModelError::InvalidScenario { reason } => write!(f, "invalid scenario: {reason}"),
        }
    }
}

impl std::error::Error for ModelError {}

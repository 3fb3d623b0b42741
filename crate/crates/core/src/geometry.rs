//! Positions, link geometry and the equilateral three-receiver deployment.
//!
//! All angles are expressed in degrees because the channel model constants
//! are fitted on degree-valued elevation angles.

use serde::Serialize;

use crate::error::ModelError;

/// A point in a local East-North-Up frame, in meters. `z` is the altitude
/// above ground and must be non-negative.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Position3D {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Position3D {
    /// Builds a position, rejecting negative altitude.
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self, ModelError> {
        if !(z >= 0.0) {
            return Err(ModelError::NonPositive { name: "altitude z", value: z });
        }
        Ok(Self { x, y, z })
    }

    /// Horizontal (ground-plane) distance to another position.
    pub fn ground_distance(&self, other: &Position3D) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }
}

/// Euclidean link length between two positions.
pub fn link_distance(a: &Position3D, b: &Position3D) -> f64 {
    let dx = a.x - b.x;
    let dy = a.y - b.y;
    let dz = a.z - b.z;
    (dx * dx + dy * dy + dz * dz).sqrt()
}

/// Elevation angle in degrees at which the ground node `gnd` sees the
/// receiver `rx`, measured from the ground node's horizontal plane.
///
/// The receiver must be strictly above the ground node. The result is
/// clamped to [0, 90]; a zero horizontal offset maps to 90 degrees.
pub fn elevation_angle_deg(rx: &Position3D, gnd: &Position3D) -> Result<f64, ModelError> {
    if rx.z <= gnd.z {
        return Err(ModelError::ReceiverNotAbove { receiver_z: rx.z, ground_z: gnd.z });
    }
    let dz = rx.z - gnd.z;
    let rho = rx.ground_distance(gnd);
    if rho == 0.0 {
        return Ok(90.0);
    }
    Ok((dz / rho).atan().to_degrees().clamp(0.0, 90.0))
}

/// Three elevated receivers on the vertices of an equilateral triangle with
/// a common altitude.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Deployment {
    pub center: [f64; 2],
    pub side_l: f64,
    pub altitude_h: f64,
    pub vertices: [Position3D; 3],
}

/// Places three receivers on an equilateral triangle of side `side_l`
/// centered at `center`, all at altitude `altitude_h`.
///
/// The first vertex is due east of the center (circumradius `side_l`/sqrt(3));
/// the orientation is arbitrary but fixed for reproducibility.
pub fn equilateral_deployment(
    center: [f64; 2],
    side_l: f64,
    altitude_h: f64,
) -> Result<Deployment, ModelError> {
    if !(side_l > 0.0) {
        return Err(ModelError::NonPositive { name: "side_l", value: side_l });
    }
    if !(altitude_h > 0.0) {
        return Err(ModelError::NonPositive { name: "altitude_h", value: altitude_h });
    }
    let r = side_l / 3.0_f64.sqrt();
    let [cx, cy] = center;
    let vertices = [
        Position3D { x: cx + r, y: cy, z: altitude_h },
        Position3D { x: cx - r / 2.0, y: cy + side_l / 2.0, z: altitude_h },
        Position3D { x: cx - r / 2.0, y: cy - side_l / 2.0, z: altitude_h },
    ];
    Ok(Deployment { center, side_l, altitude_h, vertices })
}

impl Deployment {
    /// Ground-plane projections of the three vertices.
    pub fn ground_vertices(&self) -> [[f64; 2]; 3] {
        [
            [self.vertices[0].x, self.vertices[0].y],
            [self.vertices[1].x, self.vertices[1].y],
            [self.vertices[2].x, self.vertices[2].y],
        ]
    }

    /// Twice the signed area of the ground triangle; zero means collinear.
    pub fn ground_area_x2(&self) -> f64 {
        let [a, b, c] = self.ground_vertices();
        (b[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (b[1] - a[1])
    }
}

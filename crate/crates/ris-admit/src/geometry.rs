//! Points, directions, and the angular deviation that decides which users the
//! reflecting panel can serve.
//!
//! The panel is useful to a user only when the user lies near the axis it is
//! aligned with, taken here as the direction from the panel to the base
//! station. The deviation of a user is the angle between that reference
//! direction and the panel-to-user direction, in degrees.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Position in meters, right-handed, z up.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Point3 {
    pub fn new(x: f64, y: f64, z: f64) -> Self {
        Point3 { x, y, z }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    /// Euclidean distance to another point.
    pub fn distance(&self, other: &Point3) -> f64 {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        let dz = self.z - other.z;
        (dx * dx + dy * dy + dz * dz).sqrt()
    }
}

/// Direction vector; never zero-length when produced by this module.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Direction3 {
    pub dx: f64,
    pub dy: f64,
    pub dz: f64,
}

impl Direction3 {
    pub fn norm(&self) -> f64 {
        (self.dx * self.dx + self.dy * self.dy + self.dz * self.dz).sqrt()
    }

    fn dot(&self, other: &Direction3) -> f64 {
        self.dx * other.dx + self.dy * other.dy + self.dz * other.dz
    }
}

/// Angle in degrees, restricted to `[0, 180]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
pub struct AngleDeg(f64);

impl AngleDeg {
    /// Wraps a value already known to lie in `[0, 180]`.
    pub fn new(value: f64) -> Result<Self> {
        if !(0.0..=180.0).contains(&value) {
            return Err(Error::InvalidConfig(format!(
                "angle {value} outside [0, 180] degrees"
            )));
        }
        Ok(AngleDeg(value))
    }

    pub fn value(&self) -> f64 {
        self.0
    }
}

/// Vector from `from` toward `to`.
fn direction_between(from: &Point3, to: &Point3, what: &'static str) -> Result<Direction3> {
    let d = Direction3 {
        dx: to.x - from.x,
        dy: to.y - from.y,
        dz: to.z - from.z,
    };
    if d.norm() == 0.0 {
        return Err(Error::DegenerateGeometry(what));
    }
    Ok(d)
}

/// Reference direction of the panel: from the panel toward the base station.
pub fn reference_direction(ris: &Point3, bs: &Point3) -> Result<Direction3> {
    direction_between(ris, bs, "panel and base station coincide")
}

/// Angle between the panel's reference direction and the panel-to-user
/// direction, in degrees. The cosine is clamped to `[-1, 1]` before the
/// arccosine so collinear vectors cannot produce NaN from rounding.
pub fn angular_deviation(ris: &Point3, bs: &Point3, user: &Point3) -> Result<AngleDeg> {
    let v_rb = reference_direction(ris, bs)?;
    let v_ru = direction_between(ris, user, "user coincides with panel")?;
    let cos = (v_rb.dot(&v_ru) / (v_rb.norm() * v_ru.norm())).clamp(-1.0, 1.0);
    AngleDeg::new(cos.acos().to_degrees())
}

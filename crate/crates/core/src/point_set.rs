//! Point sets with associated radii.
//!
//! Coordinates and radii are held twice: as exact integers in micro-units of
//! the input (one millionth of an input unit) and as normalized `f64` values
//! scaled so that the smallest radius is 1. Every edge predicate runs on the
//! integer copy; the float copy feeds measurements and reports.

use crate::error::{Error, Result};
use crate::VertexId;

/// Number of micro-units per input unit.
pub const MICROS_PER_UNIT: i64 = 1_000_000;

/// Exclusive bound on the magnitude of any coordinate or radius, in micro-units.
pub const MAX_MICROS: i64 = (1 << 20) * MICROS_PER_UNIT;

/// A point in micro-units. In 1D the second coordinate is always 0.
pub type RawPoint = [i64; 2];

/// Converts an input-unit value to micro-units, rounding to the nearest micro-unit.
pub fn to_micros(v: f64) -> Option<i64> {
    if !v.is_finite() {
        return None;
    }
    let scaled = (v * MICROS_PER_UNIT as f64).round();
    if scaled.abs() >= MAX_MICROS as f64 {
        return None;
    }
    Some(scaled as i64)
}

pub fn from_micros(v: i64) -> f64 {
    v as f64 / MICROS_PER_UNIT as f64
}

#[derive(Debug, Clone)]
pub struct PointSet {
    dim: usize,
    pos: Vec<RawPoint>,
    rad: Vec<i64>,
    min_rad: i64,
    max_rad: i64,
    coords: Vec<[f64; 2]>,
    radii: Vec<f64>,
    psi: f64,
}

impl PointSet {
    /// Builds a point set from input-unit coordinates and radii.
    ///
    /// Values are rounded to the nearest micro-unit; the instance format never
    /// carries more than six fractional digits, so file input is exact.
    pub fn from_points<I, C>(dim: usize, points: I) -> Result<Self>
    where
        I: IntoIterator<Item = (C, f64)>,
        C: AsRef<[f64]>,
    {
        check_dim(dim)?;
        let mut raw = Vec::new();
        for (index, (coords, radius)) in points.into_iter().enumerate() {
            let coords = coords.as_ref();
            if coords.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: coords.len(),
                });
            }
            if coords.iter().any(|c| !c.is_finite()) || !radius.is_finite() {
                return Err(Error::NonFiniteCoordinate { index });
            }
            if radius <= 0.0 {
                return Err(Error::NonPositiveRadius { index });
            }
            let mut p = [0i64; 2];
            for (slot, &c) in p.iter_mut().zip(coords) {
                *slot = to_micros(c).ok_or(Error::CoordinateOutOfRange { index })?;
            }
            let r = to_micros(radius).ok_or(Error::CoordinateOutOfRange { index })?;
            raw.push((p, r));
        }
        Self::from_micros(dim, raw)
    }

    /// Builds a point set from exact micro-unit values.
    pub fn from_micros(dim: usize, raw: Vec<(RawPoint, i64)>) -> Result<Self> {
        check_dim(dim)?;
        if raw.is_empty() {
            return Err(Error::EmptyInput);
        }
        for (index, (p, r)) in raw.iter().enumerate() {
            if *r <= 0 {
                return Err(Error::NonPositiveRadius { index });
            }
            if *r >= MAX_MICROS || p.iter().any(|c| c.abs() >= MAX_MICROS) {
                return Err(Error::CoordinateOutOfRange { index });
            }
            if dim == 1 && p[1] != 0 {
                return Err(Error::DimensionMismatch {
                    expected: 1,
                    found: 2,
                });
            }
        }
        let min_rad = raw.iter().map(|&(_, r)| r).min().unwrap();
        let max_rad = raw.iter().map(|&(_, r)| r).max().unwrap();
        let unit = min_rad as f64;
        let coords = raw
            .iter()
            .map(|(p, _)| [p[0] as f64 / unit, p[1] as f64 / unit])
            .collect();
        let radii = raw.iter().map(|&(_, r)| r as f64 / unit).collect();
        let (pos, rad) = raw.into_iter().unzip();
        Ok(Self {
            dim,
            pos,
            rad,
            min_rad,
            max_rad,
            coords,
            radii,
            psi: max_rad as f64 / min_rad as f64,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.pos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pos.is_empty()
    }

    /// Radius ratio: largest radius over smallest radius.
    pub fn psi(&self) -> f64 {
        self.psi
    }

    /// Normalized coordinates of `v` (length `dim`).
    pub fn coords(&self, v: VertexId) -> &[f64] {
        &self.coords[v as usize][..self.dim]
    }

    /// Normalized radius of `v`; the smallest radius is exactly 1.
    pub fn radius(&self, v: VertexId) -> f64 {
        self.radii[v as usize]
    }

    pub fn radii(&self) -> &[f64] {
        &self.radii
    }

    pub fn raw_pos(&self, v: VertexId) -> RawPoint {
        self.pos[v as usize]
    }

    pub fn raw_radius(&self, v: VertexId) -> i64 {
        self.rad[v as usize]
    }

    /// Smallest radius in micro-units; the length of one normalized unit.
    pub fn unit(&self) -> i64 {
        self.min_rad
    }

    pub fn max_raw_radius(&self) -> i64 {
        self.max_rad
    }

    pub fn ids(&self) -> impl Iterator<Item = VertexId> + Clone {
        0..self.len() as VertexId
    }

    pub fn check_id(&self, v: VertexId) -> Result<()> {
        if (v as usize) < self.len() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: v as usize,
                n: self.len(),
            })
        }
    }

    /// Squared distance between two vertices, in squared micro-units.
    pub fn dist2(&self, p: VertexId, q: VertexId) -> i128 {
        dist2(self.pos[p as usize], self.pos[q as usize])
    }

    /// Exact closed-disk predicate `|pq| <= r_p`.
    pub fn covers(&self, p: VertexId, q: VertexId) -> bool {
        self.covers_point(p, self.pos[q as usize])
    }

    pub fn covers_point(&self, p: VertexId, q: RawPoint) -> bool {
        let r = self.rad[p as usize] as i128;
        dist2(self.pos[p as usize], q) <= r * r
    }

    /// Exact test for `psi < sqrt(3)`.
    pub fn psi_below_sqrt3(&self) -> bool {
        let (lo, hi) = (self.min_rad as i128, self.max_rad as i128);
        hi * hi < 3 * lo * lo
    }

    /// Exact test for `psi <= 2`.
    pub fn psi_at_most_two(&self) -> bool {
        self.max_rad <= 2 * self.min_rad
    }

    /// Largest `i` with `2^i <= r_v` in normalized units.
    pub fn radius_class(&self, v: VertexId) -> u32 {
        let r = self.rad[v as usize] as i128;
        let unit = self.min_rad as i128;
        let mut i = 0;
        while unit << (i + 1) <= r {
            i += 1;
        }
        i
    }

    /// Smallest `i` with `2^i >= r_v` in normalized units, i.e. `ceil(log2 r_v)`.
    pub fn radius_level(&self, v: VertexId) -> u32 {
        let r = self.rad[v as usize] as i128;
        let unit = self.min_rad as i128;
        let mut i = 0;
        while unit << i < r {
            i += 1;
        }
        i
    }

    /// Quantizes a query point given in input units.
    pub fn quantize(&self, q: &[f64]) -> Result<RawPoint> {
        if q.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: q.len(),
            });
        }
        let mut p = [0i64; 2];
        for (slot, &c) in p.iter_mut().zip(q) {
            if !c.is_finite() {
                return Err(Error::NonFiniteCoordinate { index: 0 });
            }
            *slot = to_micros(c).ok_or(Error::CoordinateOutOfRange { index: 0 })?;
        }
        Ok(p)
    }

    /// Exact (micro-unit) points and radii in vertex order.
    pub fn raw_points(&self) -> impl Iterator<Item = (RawPoint, i64)> + '_ {
        self.pos.iter().copied().zip(self.rad.iter().copied())
    }

    /// Restriction to a subset of vertices, renumbered in the order given.
    pub fn subset(&self, ids: &[VertexId]) -> Result<Self> {
        let raw = ids
            .iter()
            .map(|&v| (self.pos[v as usize], self.rad[v as usize]))
            .collect();
        Self::from_micros(self.dim, raw)
    }
}

pub fn dist2(a: RawPoint, b: RawPoint) -> i128 {
    let dx = (a[0] - b[0]) as i128;
    let dy = (a[1] - b[1]) as i128;
    dx * dx + dy * dy
}

fn check_dim(dim: usize) -> Result<()> {
    if dim == 1 || dim == 2 {
        Ok(())
    } else {
        Err(Error::UnsupportedDimension(dim))
    }
}

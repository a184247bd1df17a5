//! Exact segment predicates.
//!
//! Input segments have integer (micro-unit) endpoints, so orientations fit in
//! `i128`. Crossing points are rationals with `i128` numerator and
//! denominator. The verifier in [`crate::planar::verify_plane`] works on
//! arbitrary rational endpoints and uses big rationals instead.

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::point_set::RawPoint;

pub type Rat = Ratio<i128>;

/// A point with exact rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatPoint {
    pub x: Rat,
    pub y: Rat,
}

impl RatPoint {
    pub fn from_raw(p: RawPoint) -> Self {
        Self {
            x: Rat::from_integer(p[0] as i128),
            y: Rat::from_integer(p[1] as i128),
        }
    }

    pub fn to_f64(&self) -> [f64; 2] {
        let f = |r: &Rat| *r.numer() as f64 / *r.denom() as f64;
        [f(&self.x), f(&self.y)]
    }

    pub fn is_integral(&self) -> bool {
        self.x.is_integer() && self.y.is_integer()
    }
}

fn cross(ax: i128, ay: i128, bx: i128, by: i128) -> i128 {
    ax * by - ay * bx
}

/// Sign of the orientation of `c` relative to the directed line `a -> b`.
pub fn orient(a: RawPoint, b: RawPoint, c: RawPoint) -> i32 {
    let v = cross(
        (b[0] - a[0]) as i128,
        (b[1] - a[1]) as i128,
        (c[0] - a[0]) as i128,
        (c[1] - a[1]) as i128,
    );
    v.signum() as i32
}

/// Segments `ab` and `cd` meet in a single point interior to both.
pub fn properly_cross(a: RawPoint, b: RawPoint, c: RawPoint, d: RawPoint) -> bool {
    let o1 = orient(a, b, c);
    let o2 = orient(a, b, d);
    let o3 = orient(c, d, a);
    let o4 = orient(c, d, b);
    o1 * o2 < 0 && o3 * o4 < 0
}

/// Parameter `t` in (0, 1) of the crossing of `ab` with the line `cd`, as `num / den`, `den > 0`.
pub fn crossing_param(a: RawPoint, b: RawPoint, c: RawPoint, d: RawPoint) -> (i128, i128) {
    let (dcx, dcy) = ((d[0] - c[0]) as i128, (d[1] - c[1]) as i128);
    let num = cross((c[0] - a[0]) as i128, (c[1] - a[1]) as i128, dcx, dcy);
    let den = cross((b[0] - a[0]) as i128, (b[1] - a[1]) as i128, dcx, dcy);
    if den < 0 {
        (-num, -den)
    } else {
        (num, den)
    }
}

/// The point `a + (num / den) (b - a)`, exactly.
pub fn point_at(a: RawPoint, b: RawPoint, num: i128, den: i128) -> Result<RatPoint> {
    let coord = |p: i64, q: i64| -> Result<Rat> {
        let n = (p as i128)
            .checked_mul(den)
            .and_then(|x| {
                num.checked_mul((q - p) as i128)
                    .and_then(|y| x.checked_add(y))
            })
            .ok_or(Error::PrecisionOverflow)?;
        Ok(Rat::new(n, den))
    };
    Ok(RatPoint {
        x: coord(a[0], b[0])?,
        y: coord(a[1], b[1])?,
    })
}

pub fn to_big(r: &Rat) -> BigRational {
    BigRational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom()))
}

/// A point with big-rational coordinates, for the independent planarity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BigPoint {
    pub x: BigRational,
    pub y: BigRational,
}

impl From<&RatPoint> for BigPoint {
    fn from(p: &RatPoint) -> Self {
        Self {
            x: to_big(&p.x),
            y: to_big(&p.y),
        }
    }
}

pub fn big_orient(a: &BigPoint, b: &BigPoint, c: &BigPoint) -> i32 {
    let v = (&b.x - &a.x) * (&c.y - &a.y) - (&b.y - &a.y) * (&c.x - &a.x);
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

/// `c` lies on the closed segment `ab`, given that the three points are collinear.
fn big_on_segment(a: &BigPoint, b: &BigPoint, c: &BigPoint) -> bool {
    let within = |p: &BigRational, q: &BigRational, r: &BigRational| {
        (p <= r && r <= q) || (q <= r && r <= p)
    };
    within(&a.x, &b.x, &c.x) && within(&a.y, &b.y, &c.y)
}

/// How two closed segments meet.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Contact {
    Disjoint,
    /// A single point interior to both.
    Proper,
    /// Touching or overlapping in any other way.
    Degenerate,
}

pub fn big_contact(a: &BigPoint, b: &BigPoint, c: &BigPoint, d: &BigPoint) -> Contact {
    let o1 = big_orient(a, b, c);
    let o2 = big_orient(a, b, d);
    let o3 = big_orient(c, d, a);
    let o4 = big_orient(c, d, b);
    if o1 * o2 < 0 && o3 * o4 < 0 {
        return Contact::Proper;
    }
    let touches = (o1 == 0 && big_on_segment(a, b, c))
        || (o2 == 0 && big_on_segment(a, b, d))
        || (o3 == 0 && big_on_segment(c, d, a))
        || (o4 == 0 && big_on_segment(c, d, b));
    if touches {
        Contact::Degenerate
    } else {
        Contact::Disjoint
    }
}

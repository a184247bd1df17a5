//! Seeded random instance generation.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::point_set::{to_micros, PointSet, RawPoint, MAX_MICROS};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RadiusLaw {
    Uniform {
        lo: f64,
        hi: f64,
    },
    /// `r2` with probability `fraction`, otherwise `r1`.
    TwoScale {
        r1: f64,
        r2: f64,
        fraction: f64,
    },
    Constant(f64),
}

impl RadiusLaw {
    /// Largest possible radius ratio under this law.
    pub fn max_psi(&self) -> f64 {
        match *self {
            RadiusLaw::Uniform { lo, hi } => hi / lo,
            RadiusLaw::TwoScale { r1, r2, .. } => r1.max(r2) / r1.min(r2),
            RadiusLaw::Constant(_) => 1.0,
        }
    }
}

impl FromStr for RadiusLaw {
    type Err = Error;

    /// `uniform:LO:HI`, `two-scale:R1:R2:FRACTION`, or `constant:R`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let num = |i: usize| -> Result<f64> {
            parts
                .get(i)
                .and_then(|p| p.parse::<f64>().ok())
                .ok_or_else(|| Error::InvalidSpec(format!("bad radius law `{s}`")))
        };
        let law = match (parts[0], parts.len()) {
            ("uniform", 3) => RadiusLaw::Uniform {
                lo: num(1)?,
                hi: num(2)?,
            },
            ("two-scale", 4) => RadiusLaw::TwoScale {
                r1: num(1)?,
                r2: num(2)?,
                fraction: num(3)?,
            },
            ("constant", 2) => RadiusLaw::Constant(num(1)?),
            _ => return Err(Error::InvalidSpec(format!("bad radius law `{s}`"))),
        };
        Ok(law)
    }
}

impl fmt::Display for RadiusLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RadiusLaw::Uniform { lo, hi } => write!(f, "uniform:{lo}:{hi}"),
            RadiusLaw::TwoScale { r1, r2, fraction } => write!(f, "two-scale:{r1}:{r2}:{fraction}"),
            RadiusLaw::Constant(r) => write!(f, "constant:{r}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GenSpec {
    pub dim: usize,
    pub n: usize,
    pub box_side: f64,
    pub law: RadiusLaw,
    pub seed: u64,
    /// `(k, spread)`: points scatter uniformly within `spread` of one of `k` random centers.
    pub clusters: Option<(usize, f64)>,
}

impl GenSpec {
    pub fn new(dim: usize, n: usize, box_side: f64, law: RadiusLaw, seed: u64) -> Self {
        Self {
            dim,
            n,
            box_side,
            law,
            seed,
            clusters: None,
        }
    }

    fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::InvalidSpec(m.to_string()));
        if self.dim != 1 && self.dim != 2 {
            return bad("dim must be 1 or 2");
        }
        if self.n == 0 {
            return bad("n must be positive");
        }
        if self.box_side.is_nan() || self.box_side <= 0.0 || to_micros(self.box_side).is_none() {
            return bad("box side must be positive and below 2^20");
        }
        let radius_ok = |r: f64| r > 0.0 && to_micros(r).is_some_and(|m| m > 0);
        let ok = match self.law {
            RadiusLaw::Uniform { lo, hi } => radius_ok(lo) && radius_ok(hi) && lo <= hi,
            RadiusLaw::TwoScale { r1, r2, fraction } => {
                radius_ok(r1) && radius_ok(r2) && (0.0..=1.0).contains(&fraction)
            }
            RadiusLaw::Constant(r) => radius_ok(r),
        };
        if !ok {
            return bad("radius law parameters out of range");
        }
        if let Some((k, spread)) = self.clusters {
            if k == 0 || spread.is_nan() || spread < 0.0 || to_micros(spread).is_none() {
                return bad("clusters need k > 0 and a non-negative spread");
            }
        }
        Ok(())
    }
}

/// Deterministic instance for a spec: same spec, same points.
pub fn generate(spec: &GenSpec) -> Result<PointSet> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let side = to_micros(spec.box_side).unwrap();
    let coord = |rng: &mut ChaCha8Rng| rng.gen_range(0..=side);
    let centers: Vec<RawPoint> = match spec.clusters {
        Some((k, _)) => (0..k).map(|_| [coord(&mut rng), coord(&mut rng)]).collect(),
        None => Vec::new(),
    };
    let spread = spec.clusters.map_or(0, |(_, s)| to_micros(s).unwrap());
    let clamp = |v: i64| v.clamp(-(MAX_MICROS - 1), MAX_MICROS - 1);
    let mut raw = Vec::with_capacity(spec.n);
    for _ in 0..spec.n {
        let mut p = if centers.is_empty() {
            [coord(&mut rng), coord(&mut rng)]
        } else {
            let c = centers[rng.gen_range(0..centers.len())];
            [
                clamp(c[0] + rng.gen_range(-spread..=spread)),
                clamp(c[1] + rng.gen_range(-spread..=spread)),
            ]
        };
        if spec.dim == 1 {
            p[1] = 0;
        }
        let r = match spec.law {
            RadiusLaw::Uniform { lo, hi } => {
                rng.gen_range(to_micros(lo).unwrap()..=to_micros(hi).unwrap())
            }
            RadiusLaw::TwoScale { r1, r2, fraction } => {
                if rng.gen_bool(fraction) {
                    to_micros(r2).unwrap()
                } else {
                    to_micros(r1).unwrap()
                }
            }
            RadiusLaw::Constant(r) => to_micros(r).unwrap(),
        };
        raw.push((p, r));
    }
    PointSet::from_micros(spec.dim, raw)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::emit_instance;

    #[test]
    fn constant_law_gives_unit_psi() {
        let ps = generate(&GenSpec::new(2, 50, 10.0, RadiusLaw::Constant(1.0), 3)).unwrap();
        assert_eq!(ps.psi(), 1.0);
    }

    #[test]
    fn uniform_law_below_sqrt3() {
        let ps = generate(&GenSpec::new(
            2,
            200,
            10.0,
            "uniform:1:1.7".parse().unwrap(),
            9,
        ))
        .unwrap();
        assert!(ps.psi() <= 1.7);
        assert!(ps.psi_below_sqrt3());
    }

    #[test]
    fn same_seed_same_bytes() {
        let mut spec = GenSpec::new(2, 100, 30.0, "two-scale:1:8:0.2".parse().unwrap(), 77);
        spec.clusters = Some((3, 4.0));
        let a = emit_instance(&generate(&spec).unwrap());
        let b = emit_instance(&generate(&spec).unwrap());
        assert_eq!(a, b);
        spec.seed = 78;
        assert_ne!(a, emit_instance(&generate(&spec).unwrap()));
    }

    #[test]
    fn one_dimensional_points_stay_on_the_line() {
        let ps = generate(&GenSpec::new(1, 20, 10.0, RadiusLaw::Constant(1.0), 1)).unwrap();
        assert!(ps.ids().all(|v| ps.raw_pos(v)[1] == 0));
    }

    #[test]
    fn invalid_specs() {
        assert!(generate(&GenSpec::new(3, 5, 1.0, RadiusLaw::Constant(1.0), 0)).is_err());
        assert!(generate(&GenSpec::new(2, 0, 1.0, RadiusLaw::Constant(1.0), 0)).is_err());
        assert!(generate(&GenSpec::new(
            2,
            5,
            1.0,
            RadiusLaw::Uniform { lo: 2.0, hi: 1.0 },
            0
        ))
        .is_err());
        assert!("gauss:1".parse::<RadiusLaw>().is_err());
        assert_eq!(
            "two-scale:1:4:0.5"
                .parse::<RadiusLaw>()
                .unwrap()
                .to_string(),
            "two-scale:1:4:0.5"
        );
    }
}

use serde::{Deserialize, Serialize};

use super::ic::cone_layer;
use super::{InitialConditions, LatticeError, Point3};

/// Named families of initial conditions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Preset {
    Named(NamedPreset),
    Explicit { explicit: ExplicitUpperSet },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "preset", rename_all = "snake_case")]
pub enum NamedPreset {
    /// `L = {i+j+k <= 1-n}` inside the cone.
    Standard { n: u32 },
    /// `L = C(0,0,0) - {i' > -i, j' > -j, k' > -k}`.
    Kleber { i: u32, j: u32, k: u32 },
    /// `L = {p i + q j + r k < n - l}` inside the cone, `n = p+q+r`.
    GaleRobinson { p: u32, q: u32, r: u32, l: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExplicitUpperSet {
    pub u_fin: Vec<[i32; 3]>,
}

impl Preset {
    pub fn standard(n: u32) -> Self {
        Preset::Named(NamedPreset::Standard { n })
    }

    pub fn kleber(i: u32, j: u32, k: u32) -> Self {
        Preset::Named(NamedPreset::Kleber { i, j, k })
    }

    pub fn gale_robinson(p: u32, q: u32, r: u32, l: u32) -> Self {
        Preset::Named(NamedPreset::GaleRobinson { p, q, r, l })
    }

    pub fn explicit(u_fin: impl IntoIterator<Item = Point3>) -> Self {
        Preset::Explicit {
            explicit: ExplicitUpperSet {
                u_fin: u_fin.into_iter().map(|p| [p.i, p.j, p.k]).collect(),
            },
        }
    }

    /// Builds and validates the initial conditions.
    pub fn build(&self) -> Result<InitialConditions, LatticeError> {
        let u_fin: Vec<Point3> = match self {
            Preset::Named(NamedPreset::Standard { n }) => {
                if *n < 1 {
                    return Err(LatticeError::InvalidPreset("standard needs n >= 1".into()));
                }
                let n = *n as i32;
                (2 - n..=0).flat_map(cone_layer).collect()
            }
            Preset::Named(NamedPreset::Kleber { i, j, k }) => {
                if *i < 1 || *j < 1 || *k < 1 {
                    return Err(LatticeError::InvalidPreset("kleber needs i, j, k >= 1".into()));
                }
                let (i, j, k) = (*i as i32, *j as i32, *k as i32);
                let mut out = Vec::new();
                for a in 1 - i..=0 {
                    for b in 1 - j..=0 {
                        for c in 1 - k..=0 {
                            out.push(Point3::new(a, b, c));
                        }
                    }
                }
                out
            }
            Preset::Named(NamedPreset::GaleRobinson { p, q, r, l }) => {
                if *p < 1 || *q < 1 || *r < 1 {
                    return Err(LatticeError::InvalidPreset("gale_robinson needs p, q, r >= 1".into()));
                }
                let (p, q, r, l) = (*p as i64, *q as i64, *r as i64, *l as i64);
                let bound = p + q + r - l;
                let weight = |x: &Point3| p * x.i as i64 + q * x.j as i64 + r * x.k as i64;
                // weight >= bound forces i+j+k >= bound / min(p,q,r) on the cone
                let deepest = if bound >= 0 {
                    0
                } else {
                    (bound / p.min(q).min(r)) as i32 - 1
                };
                (deepest..=0)
                    .flat_map(cone_layer)
                    .filter(|x| weight(x) >= bound)
                    .collect()
            }
            Preset::Explicit { explicit } => explicit.u_fin.iter().map(|&a| Point3::from(a)).collect(),
        };
        InitialConditions::new(u_fin)
    }

    /// Parses `standard:5`, `kleber:2,3,2`, `gale-robinson:4,1,2,11` or
    /// `full`.
    pub fn parse_short(s: &str) -> Result<Self, LatticeError> {
        let bad = || LatticeError::InvalidPreset(s.to_string());
        let (name, args) = s.split_once(':').unwrap_or((s, ""));
        let nums: Vec<u32> = if args.is_empty() {
            Vec::new()
        } else {
            args.split(',')
                .map(|t| t.trim().parse::<u32>())
                .collect::<Result<_, _>>()
                .map_err(|_| bad())?
        };
        match (name, nums.as_slice()) {
            ("standard", &[n]) => Ok(Preset::standard(n)),
            ("kleber", &[i, j, k]) => Ok(Preset::kleber(i, j, k)),
            ("gale-robinson" | "gale_robinson" | "gr", &[p, q, r, l]) => Ok(Preset::gale_robinson(p, q, r, l)),
            ("full" | "empty", &[]) => Ok(Preset::explicit([])),
            _ => Err(bad()),
        }
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}

impl InitialConditions {
    pub fn preset(p: &Preset) -> Result<Self, LatticeError> {
        p.build()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_small() {
        assert!(Preset::standard(1).build().unwrap().u_fin().is_empty());
        let s2 = Preset::standard(2).build().unwrap();
        assert_eq!(s2.u_fin().iter().copied().collect::<Vec<_>>(), vec![Point3::ORIGIN]);
        assert_eq!(Preset::standard(5).build().unwrap().u_fin().len(), 20);
        for n in 1..8 {
            assert_eq!(Preset::standard(n).build().unwrap().min_cutoff(), n as i32 - 1);
        }
        assert!(Preset::standard(0).build().is_err());
    }

    #[test]
    fn kleber_sizes() {
        assert_eq!(Preset::kleber(2, 2, 2).build().unwrap().u_fin().len(), 8);
        assert_eq!(Preset::kleber(2, 3, 2).build().unwrap().u_fin().len(), 12);
    }

    #[test]
    fn gale_robinson_initial_terms_are_trivial() {
        for l in 0..7 {
            assert!(Preset::gale_robinson(4, 1, 2, l).build().unwrap().u_fin().is_empty());
        }
        let ic = Preset::gale_robinson(4, 1, 2, 7).build().unwrap();
        assert_eq!(ic.u_fin().len(), 1);
        let ic = Preset::gale_robinson(4, 1, 2, 11).build().unwrap();
        for u in ic.u_fin() {
            assert!(4 * u.i + u.j + 2 * u.k >= 7 - 11);
        }
    }

    #[test]
    fn json_forms() {
        for (s, want) in [
            (r#"{"preset":"standard","n":5}"#, Preset::standard(5)),
            (r#"{"preset":"kleber","i":2,"j":3,"k":2}"#, Preset::kleber(2, 3, 2)),
            (
                r#"{"preset":"gale_robinson","p":4,"q":1,"r":2,"l":11}"#,
                Preset::gale_robinson(4, 1, 2, 11),
            ),
            (
                r#"{"explicit":{"u_fin":[[0,0,0],[-1,0,0]]}}"#,
                Preset::explicit([Point3::ORIGIN, Point3::new(-1, 0, 0)]),
            ),
        ] {
            let parsed = Preset::from_json(s).unwrap();
            assert_eq!(parsed, want);
            assert_eq!(serde_json::to_string(&parsed).unwrap(), s);
        }
    }

    #[test]
    fn short_forms() {
        assert_eq!(Preset::parse_short("standard:5").unwrap(), Preset::standard(5));
        assert_eq!(Preset::parse_short("kleber:2,3,2").unwrap(), Preset::kleber(2, 3, 2));
        assert_eq!(
            Preset::parse_short("gale-robinson:4,1,2,11").unwrap(),
            Preset::gale_robinson(4, 1, 2, 11)
        );
        assert!(Preset::parse_short("standard").is_err());
        assert!(Preset::parse_short("cube:1").is_err());
    }
}

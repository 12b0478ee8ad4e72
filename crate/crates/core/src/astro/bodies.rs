use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use super::ephemeris::{ElementSeries, EphemerisModel, OrbitalElements};
use super::{AstroError, AstroResult};

/// The bundled constants table, `data/bodies.txt`.
pub const BODY_TABLE_SOURCE: &str = include_str!("../../data/bodies.txt");

/// SHA-256 of [`BODY_TABLE_SOURCE`]. Checked by the test suite.
pub const BODY_TABLE_SHA256: &str = "999293f4ae6d4efb83fca9062f3a5791474bdaf991509f3f7699f74de4480328";

/// Body identifier. 0 is the Sun, 1-9 the planets Mercury..Pluto,
/// 10 asteroid 2001 TW229, 11 comet 67P.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BodyId(pub u32);

impl BodyId {
    pub const SUN: BodyId = BodyId(0);
    pub const MERCURY: BodyId = BodyId(1);
    pub const VENUS: BodyId = BodyId(2);
    pub const EARTH: BodyId = BodyId(3);
    pub const MARS: BodyId = BodyId(4);
    pub const JUPITER: BodyId = BodyId(5);
    pub const SATURN: BodyId = BodyId(6);
    pub const URANUS: BodyId = BodyId(7);
    pub const NEPTUNE: BodyId = BodyId(8);
    pub const PLUTO: BodyId = BodyId(9);
    pub const TW229: BodyId = BodyId(10);
    pub const COMET_67P: BodyId = BodyId(11);

    /// Fly-by planets selectable by integer variables.
    pub fn is_flyby_planet(self) -> bool {
        (1..=9).contains(&self.0)
    }
}

impl fmt::Display for BodyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match body(*self) {
            Ok(b) => f.write_str(&b.name),
            Err(_) => write!(f, "body#{}", self.0),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Body {
    pub id: BodyId,
    pub name: String,
    /// Gravitational parameter, km^3/s^2.
    pub mu: f64,
    /// Mean radius, km.
    pub radius: f64,
    /// Minimum safe fly-by pericenter radius, km.
    pub rp_min: f64,
}

#[derive(Debug, Clone)]
pub struct BodyTable {
    bodies: BTreeMap<u32, Body>,
    models: BTreeMap<u32, EphemerisModel>,
}

impl BodyTable {
    pub fn parse(text: &str) -> Result<Self, String> {
        let mut bodies = BTreeMap::new();
        // id -> (epoch offset, coefficient rows a e i raan argp M)
        type Rows = (f64, [Option<Vec<f64>>; 6]);
        let mut series: BTreeMap<u32, Rows> = BTreeMap::new();
        let mut models = BTreeMap::new();

        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: &str| format!("line {}: {msg}: {raw}", lineno + 1);
            let fields: Vec<&str> = line.split_whitespace().collect();
            let num = |s: &str| s.parse::<f64>().map_err(|_| err("bad number"));
            let id = fields.get(1).ok_or_else(|| err("missing id"))?.parse::<u32>().map_err(|_| err("bad id"))?;
            match fields[0] {
                "body" => {
                    if fields.len() != 6 {
                        return Err(err("body record needs 6 fields"));
                    }
                    let body = Body {
                        id: BodyId(id),
                        name: fields[2].to_string(),
                        mu: num(fields[3])?,
                        radius: num(fields[4])?,
                        rp_min: num(fields[5])?,
                    };
                    if !(body.mu > 0.0 && body.radius > 0.0 && body.rp_min >= body.radius) {
                        return Err(err("body constants violate mu > 0, radius > 0, rp_min >= radius"));
                    }
                    if bodies.insert(id, body).is_some() {
                        return Err(err("duplicate body"));
                    }
                }
                "series" => {
                    if fields.len() < 5 {
                        return Err(err("series record needs at least 5 fields"));
                    }
                    let offset = num(fields[2])?;
                    let slot = match fields[3] {
                        "a" => 0,
                        "e" => 1,
                        "i" => 2,
                        "raan" => 3,
                        "argp" => 4,
                        "M" => 5,
                        _ => return Err(err("unknown element")),
                    };
                    let coeffs = fields[4..].iter().map(|s| num(s)).collect::<Result<Vec<_>, _>>()?;
                    let entry = series.entry(id).or_insert((offset, Default::default()));
                    if entry.0 != offset {
                        return Err(err("inconsistent epoch offset"));
                    }
                    if entry.1[slot].replace(coeffs).is_some() {
                        return Err(err("duplicate element"));
                    }
                }
                "osculating" => {
                    if fields.len() != 9 {
                        return Err(err("osculating record needs 9 fields"));
                    }
                    let v = fields[2..].iter().map(|s| num(s)).collect::<Result<Vec<_>, _>>()?;
                    let model = EphemerisModel::Osculating {
                        epoch_mjd: v[0],
                        elements: OrbitalElements {
                            a: v[1],
                            e: v[2],
                            i: v[3].to_radians(),
                            raan: v[4].to_radians(),
                            argp: v[5].to_radians(),
                            mean_anomaly: v[6].to_radians(),
                        },
                    };
                    if models.insert(id, model).is_some() {
                        return Err(err("duplicate ephemeris"));
                    }
                }
                other => return Err(err(&format!("unknown record type '{other}'"))),
            }
        }

        for (id, (offset, elems)) in series {
            let [a, e, i, raan, argp, m] = elems;
            let take = |s: Option<Vec<f64>>, name: &str| {
                s.ok_or_else(|| format!("body {id}: missing series for element {name}"))
            };
            let model = EphemerisModel::Series(ElementSeries {
                epoch_offset_days: offset,
                a: take(a, "a")?,
                e: take(e, "e")?,
                i: take(i, "i")?,
                raan: take(raan, "raan")?,
                argp: take(argp, "argp")?,
                mean_anomaly: take(m, "M")?,
            });
            if models.insert(id, model).is_some() {
                return Err(format!("body {id}: both series and osculating elements given"));
            }
        }
        for id in models.keys() {
            if !bodies.contains_key(id) {
                return Err(format!("ephemeris for body {id} without a body record"));
            }
        }
        Ok(Self { bodies, models })
    }

    pub fn body(&self, id: BodyId) -> AstroResult<&Body> {
        self.bodies.get(&id.0).ok_or(AstroError::UnknownBody(id.0))
    }

    pub fn model(&self, id: BodyId) -> AstroResult<&EphemerisModel> {
        self.models.get(&id.0).ok_or(AstroError::UnknownBody(id.0))
    }

    pub fn bodies(&self) -> impl Iterator<Item = &Body> {
        self.bodies.values()
    }
}

/// The bundled table, parsed once.
pub fn body_table() -> &'static BodyTable {
    static TABLE: OnceLock<BodyTable> = OnceLock::new();
    TABLE.get_or_init(|| BodyTable::parse(BODY_TABLE_SOURCE).expect("bundled body table is valid"))
}

pub fn body(id: BodyId) -> AstroResult<&'static Body> {
    body_table().body(id)
}

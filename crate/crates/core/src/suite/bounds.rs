use std::collections::BTreeMap;

/// The bundled bounds table, `data/bounds.txt`.
pub const BOUNDS_SOURCE: &str = include_str!("../../data/bounds.txt");

/// SHA-256 of [`BOUNDS_SOURCE`]. Checked by the test suite.
pub const BOUNDS_SHA256: &str = "2afdc515d76b52ec4b74b88a70596868043eee585e84a43106cddacfd9578079";

/// Lower and upper bound vectors per instance id.
pub type BoundsTable = BTreeMap<u32, (Vec<f64>, Vec<f64>)>;

/// Parses `<instance> <index> <lb> <ub>` rows into per-instance vectors.
/// Indices must run 1..=n without gaps and satisfy lb < ub.
pub fn parse_bounds(text: &str) -> Result<BoundsTable, String> {
    let mut out = BoundsTable::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: &str| format!("line {}: {msg}: {raw}", lineno + 1);
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 4 {
            return Err(err("expected 4 fields"));
        }
        let id: u32 = fields[0].parse().map_err(|_| err("bad instance id"))?;
        let index: usize = fields[1].parse().map_err(|_| err("bad variable index"))?;
        let lb: f64 = fields[2].parse().map_err(|_| err("bad lower bound"))?;
        let ub: f64 = fields[3].parse().map_err(|_| err("bad upper bound"))?;
        if !(lb < ub) {
            return Err(err("lower bound must be below upper bound"));
        }
        let entry = out.entry(id).or_default();
        if index != entry.0.len() + 1 {
            return Err(err("variable indices must be consecutive from 1"));
        }
        entry.0.push(lb);
        entry.1.push(ub);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use sha2::{Digest, Sha256};

    #[test]
    fn bundled_checksum() {
        let hex: String = Sha256::digest(BOUNDS_SOURCE.as_bytes()).iter().map(|b| format!("{b:02x}")).collect();
        assert_eq!(hex, BOUNDS_SHA256);
    }

    #[test]
    fn rejects_malformed_rows() {
        assert!(parse_bounds("1 1 0 1\n1 3 0 1").is_err());
        assert!(parse_bounds("1 1 2 1").is_err());
        assert!(parse_bounds("1 1 0").is_err());
        assert!(parse_bounds("x 1 0 1").is_err());
        assert_eq!(parse_bounds("# only a comment\n").unwrap().len(), 0);
    }
}

//! CSV files for plotting.
//!
//! Sample files have the header
//! `sample,instance,x1..xn,f1..fo,g1..gm,feasible,mutated` where `mutated`
//! is a string of `0`/`1` flags, one per variable. Grid files are long
//! format: `x<i>,x<j>,f1,feasible`, one row per cell in row-major order.
//! Reals are written with 17 significant digits and read back bit-exactly.

use std::fs::File;
use std::path::{Path, PathBuf};

use super::{GridSlice, LandscapeError, SampleRecord};
use crate::suite::info;

fn real(v: f64) -> String {
    format!("{v:.16e}")
}

fn csv_err(path: &Path) -> impl FnOnce(csv::Error) -> LandscapeError + '_ {
    move |source| LandscapeError::Csv { path: path.to_path_buf(), source }
}

fn create(path: &Path) -> Result<csv::Writer<File>, LandscapeError> {
    let file = File::create(path).map_err(|source| LandscapeError::Io { path: path.to_path_buf(), source })?;
    Ok(csv::Writer::from_writer(file))
}

/// Streaming writer for sample records of one instance.
pub struct RecordWriter {
    inner: csv::Writer<File>,
    path: PathBuf,
    id: u32,
}

impl RecordWriter {
    pub fn create(path: impl AsRef<Path>, id: u32) -> Result<Self, LandscapeError> {
        let path = path.as_ref();
        let spec = info(id)?;
        let mut inner = create(path)?;
        let mut header = vec!["sample".to_string(), "instance".to_string()];
        header.extend((1..=spec.n).map(|k| format!("x{k}")));
        header.extend((1..=spec.n_obj).map(|k| format!("f{k}")));
        header.extend((1..=spec.m).map(|k| format!("g{k}")));
        header.extend(["feasible".to_string(), "mutated".to_string()]);
        inner.write_record(&header).map_err(csv_err(path))?;
        Ok(Self { inner, path: path.to_path_buf(), id })
    }

    pub fn write(&mut self, r: &SampleRecord) -> Result<(), LandscapeError> {
        let mut row = vec![r.index.to_string(), self.id.to_string()];
        row.extend(r.x.iter().chain(&r.f).chain(&r.g).map(|v| real(*v)));
        row.push(u8::from(r.feasible).to_string());
        row.push(r.mutated.iter().map(|m| if *m { '1' } else { '0' }).collect());
        self.inner.write_record(&row).map_err(csv_err(&self.path))
    }

    pub fn finish(mut self) -> Result<(), LandscapeError> {
        self.inner.flush().map_err(|source| LandscapeError::Io { path: self.path.clone(), source })
    }
}

pub fn write_records<'a>(
    path: impl AsRef<Path>,
    id: u32,
    records: impl IntoIterator<Item = &'a SampleRecord>,
) -> Result<(), LandscapeError> {
    let mut w = RecordWriter::create(path, id)?;
    for r in records {
        w.write(r)?;
    }
    w.finish()
}

/// Reads a file produced by [`write_records`]. Evaluation errors are not
/// stored, so `error` is always `None` on the way back. The instance id is
/// 0 for a header-only file.
pub fn read_records(path: impl AsRef<Path>) -> Result<(u32, Vec<SampleRecord>), LandscapeError> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|source| LandscapeError::Io { path: path.to_path_buf(), source })?;
    let mut rd = csv::Reader::from_reader(file);
    let header = rd.headers().map_err(csv_err(path))?.clone();
    let count =
        |prefix: char| header.iter().filter(|h| h.starts_with(prefix) && h[1..].parse::<usize>().is_ok()).count();
    let (n, o, m) = (count('x'), count('f'), count('g'));
    let bad = |line: u64, message: String| LandscapeError::Format { path: path.to_path_buf(), line, message };
    if header.len() != n + o + m + 4 {
        return Err(bad(1, "unexpected header".into()));
    }

    let mut id = None;
    let mut out = Vec::new();
    for row in rd.records() {
        let row = row.map_err(csv_err(path))?;
        let line = row.position().map_or(0, |p| p.line());
        let num = |k: usize| -> Result<f64, LandscapeError> {
            row[k].parse().map_err(|_| bad(line, format!("column {}: bad number {:?}", k + 1, &row[k])))
        };
        let index = row[0].parse().map_err(|_| bad(line, "bad sample index".into()))?;
        let rid: u32 = row[1].parse().map_err(|_| bad(line, "bad instance id".into()))?;
        if *id.get_or_insert(rid) != rid {
            return Err(bad(line, "mixed instance ids".into()));
        }
        let reals = (2..2 + n + o + m).map(num).collect::<Result<Vec<_>, _>>()?;
        let feasible = match &row[2 + n + o + m] {
            "1" => true,
            "0" => false,
            other => return Err(bad(line, format!("bad feasible flag {other:?}"))),
        };
        let mutated = row[3 + n + o + m]
            .chars()
            .map(|c| match c {
                '1' => Ok(true),
                '0' => Ok(false),
                _ => Err(bad(line, "bad mutation mask".into())),
            })
            .collect::<Result<Vec<_>, _>>()?;
        out.push(SampleRecord {
            index,
            x: reals[..n].to_vec(),
            f: reals[n..n + o].to_vec(),
            g: reals[n + o..].to_vec(),
            feasible,
            mutated,
            error: None,
        });
    }
    Ok((id.unwrap_or(0), out))
}

/// Long-format grid export, one row per cell.
pub fn write_grid(path: impl AsRef<Path>, slice: &GridSlice) -> Result<(), LandscapeError> {
    let path = path.as_ref();
    let mut w = create(path)?;
    w.write_record([
        format!("x{}", slice.var_i + 1),
        format!("x{}", slice.var_j + 1),
        "f1".to_string(),
        "feasible".to_string(),
    ])
    .map_err(csv_err(path))?;
    for (a, vi) in slice.axis_i.iter().enumerate() {
        for (b, vj) in slice.axis_j.iter().enumerate() {
            let ok = if slice.feasible(a, b) { "1" } else { "0" };
            w.write_record([real(*vi), real(*vj), real(slice.f(a, b)), ok.to_string()]).map_err(csv_err(path))?;
        }
    }
    w.flush().map_err(|source| LandscapeError::Io { path: path.to_path_buf(), source })
}

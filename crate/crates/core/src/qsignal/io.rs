//! Signal and spectrum file formats.
//!
//! * CSV: header `x1,x2,q0,q1,q2,q3`, one row per grid point, `x1` outer.
//! * Raw binary: `QSIG1`, `n1`, `n2` (u32 LE), `d1`, `d2` (f64 LE), then
//!   `n1·n2·4` f64 LE components, row-major.
//! * PPM P6 (8-bit) colour images, read as pure quaternions.
//! * Magnitude CSV for plotting spectra: `xi1,xi2,magnitude[,module_norm]`.

use std::fs;
use std::io::{self, BufRead, BufWriter, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::quaternion::Quaternion;

use super::grid::GridSpec;
use super::signal::QSignal;
use super::spectrum::QSpectrum;

pub const CSV_HEADER: &str = "x1,x2,q0,q1,q2,q3";
pub const BINARY_MAGIC: &[u8; 5] = b"QSIG1";
const BINARY_HEADER_LEN: usize = 5 + 4 + 4 + 8 + 8;

pub fn write_csv<W: Write>(mut w: W, grid: &GridSpec, samples: &[Quaternion]) -> io::Result<()> {
    writeln!(w, "{CSV_HEADER}")?;
    for i1 in 0..grid.n1 {
        let x1 = grid.coord1(i1);
        for i2 in 0..grid.n2 {
            let q = samples[grid.index(i1, i2)];
            writeln!(
                w,
                "{},{},{},{},{},{}",
                x1,
                grid.coord2(i2),
                q.q0,
                q.q1,
                q.q2,
                q.q3
            )?;
        }
    }
    Ok(())
}

/// Reads the CSV layout back, recovering the grid from the coordinates.
pub fn read_csv<R: BufRead>(r: R) -> Result<(GridSpec, Vec<Quaternion>)> {
    let mut offset = 0usize;
    let mut lines = r.lines();
    let header = lines.next().transpose()?.unwrap_or_default();
    if header.trim() != CSV_HEADER {
        return Err(Error::Parse {
            offset: 0,
            message: format!("expected header {CSV_HEADER:?}, found {:?}", header.trim()),
        });
    }
    offset += header.len() + 1;

    let mut coords = Vec::new();
    let mut samples = Vec::new();
    for line in lines {
        let line = line?;
        let line_offset = offset;
        offset += line.len() + 1;
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        if fields.len() != 6 {
            return Err(Error::Parse {
                offset: line_offset,
                message: format!("expected 6 fields, found {}", fields.len()),
            });
        }
        let mut v = [0.0; 6];
        for (slot, field) in v.iter_mut().zip(&fields) {
            *slot = field.parse().map_err(|e| Error::Parse {
                offset: line_offset,
                message: format!("bad number {field:?}: {e}"),
            })?;
        }
        coords.push((v[0], v[1], line_offset));
        samples.push(Quaternion::new(v[2], v[3], v[4], v[5]));
    }
    if coords.is_empty() {
        return Err(Error::Parse {
            offset,
            message: "no samples".into(),
        });
    }

    let same = |a: f64, b: f64| (a - b).abs() <= 1e-9 * a.abs().max(b.abs()).max(1e-300);
    let n2 = coords.iter().take_while(|c| same(c.0, coords[0].0)).count();
    if coords.len() % n2 != 0 {
        return Err(Error::Parse {
            offset: coords[n2.min(coords.len() - 1)].2,
            message: format!("{} rows do not form a grid with {n2} columns", coords.len()),
        });
    }
    let n1 = coords.len() / n2;
    let spacing = |first: f64, last: f64, n: usize| {
        if n > 1 {
            (last - first) / (n - 1) as f64
        } else {
            1.0
        }
    };
    let d1 = spacing(coords[0].0, coords[(n1 - 1) * n2].0, n1);
    let d2 = spacing(coords[0].1, coords[n2 - 1].1, n2);
    let grid = GridSpec::new(n1, n2, d1, d2).map_err(|e| Error::Parse {
        offset: 0,
        message: e.to_string(),
    })?;
    for (n, &(x1, x2, at)) in coords.iter().enumerate() {
        let (e1, e2) = grid.point(n / n2, n % n2);
        if (x1 - e1).abs() > 1e-6 * d1 || (x2 - e2).abs() > 1e-6 * d2 {
            return Err(Error::Parse {
                offset: at,
                message: format!(
                    "point ({x1}, {x2}) is off the centered grid, expected ({e1}, {e2})"
                ),
            });
        }
    }
    Ok((grid, samples))
}

pub fn write_binary<W: Write>(mut w: W, grid: &GridSpec, samples: &[Quaternion]) -> io::Result<()> {
    let to_u32 = |n: usize| {
        u32::try_from(n).map_err(|_| io::Error::new(io::ErrorKind::InvalidInput, "grid too large"))
    };
    w.write_all(BINARY_MAGIC)?;
    w.write_all(&to_u32(grid.n1)?.to_le_bytes())?;
    w.write_all(&to_u32(grid.n2)?.to_le_bytes())?;
    w.write_all(&grid.d1.to_le_bytes())?;
    w.write_all(&grid.d2.to_le_bytes())?;
    for q in samples {
        for c in q.to_array() {
            w.write_all(&c.to_le_bytes())?;
        }
    }
    Ok(())
}

pub fn read_binary(bytes: &[u8]) -> Result<(GridSpec, Vec<Quaternion>)> {
    if bytes.len() < BINARY_MAGIC.len() || &bytes[..5] != BINARY_MAGIC {
        return Err(Error::Parse {
            offset: 0,
            message: "missing QSIG1 magic".into(),
        });
    }
    if bytes.len() < BINARY_HEADER_LEN {
        return Err(Error::Parse {
            offset: bytes.len(),
            message: format!(
                "truncated header: {} of {BINARY_HEADER_LEN} bytes",
                bytes.len()
            ),
        });
    }
    let u32_at = |o: usize| u32::from_le_bytes(bytes[o..o + 4].try_into().unwrap()) as usize;
    let f64_at = |o: usize| f64::from_le_bytes(bytes[o..o + 8].try_into().unwrap());
    let (n1, n2) = (u32_at(5), u32_at(9));
    let (d1, d2) = (f64_at(13), f64_at(21));
    let grid = GridSpec::new(n1, n2, d1, d2).map_err(|e| Error::Parse {
        offset: 5,
        message: e.to_string(),
    })?;
    let need = grid
        .len()
        .checked_mul(32)
        .and_then(|n| n.checked_add(BINARY_HEADER_LEN))
        .ok_or_else(|| Error::Parse {
            offset: 5,
            message: "grid size overflows".into(),
        })?;
    if bytes.len() < need {
        return Err(Error::Parse {
            offset: bytes.len(),
            message: format!(
                "truncated payload: expected {need} bytes, found {}",
                bytes.len()
            ),
        });
    }
    if bytes.len() > need {
        return Err(Error::Parse {
            offset: need,
            message: format!("{} trailing bytes", bytes.len() - need),
        });
    }
    let samples = bytes[BINARY_HEADER_LEN..]
        .chunks_exact(32)
        .map(|c| {
            let f = |k: usize| f64::from_le_bytes(c[8 * k..8 * k + 8].try_into().unwrap());
            Quaternion::new(f(0), f(1), f(2), f(3))
        })
        .collect();
    Ok((grid, samples))
}

/// Decodes an 8-bit binary PPM (P6). Pixel `(r, g, b)` becomes
/// `i r/max + j g/max + k b/max`; image row `y` maps to `x1` index `y`,
/// column `x` to `x2` index `x`, spacing 1.
pub fn parse_ppm(bytes: &[u8]) -> Result<QSignal> {
    let err = |offset: usize, message: String| Error::Parse { offset, message };
    if bytes.len() < 2 || &bytes[..2] != b"P6" {
        return Err(err(0, "not a binary PPM (expected magic P6)".into()));
    }
    let mut pos = 2;
    let mut fields = [0usize; 3];
    for (slot, name) in fields.iter_mut().zip(["width", "height", "maxval"]) {
        // whitespace and comments between header fields
        loop {
            match bytes.get(pos) {
                Some(b) if b.is_ascii_whitespace() => pos += 1,
                Some(b'#') => {
                    while bytes.get(pos).is_some_and(|&b| b != b'\n') {
                        pos += 1;
                    }
                }
                _ => break,
            }
        }
        let start = pos;
        while bytes.get(pos).is_some_and(u8::is_ascii_digit) {
            pos += 1;
        }
        if start == pos {
            return Err(match bytes.get(pos) {
                None => err(pos, format!("truncated header before {name}")),
                Some(&b) => err(pos, format!("expected {name}, found byte 0x{b:02x}")),
            });
        }
        *slot = std::str::from_utf8(&bytes[start..pos])
            .unwrap()
            .parse()
            .map_err(|_| err(start, format!("{name} out of range")))?;
        if *slot == 0 {
            return Err(err(start, format!("{name} must be positive")));
        }
        if name == "maxval" && *slot > 255 {
            return Err(err(start, format!("maxval {} is not 8-bit", *slot)));
        }
    }
    match bytes.get(pos) {
        Some(b) if b.is_ascii_whitespace() => pos += 1,
        Some(&b) => {
            return Err(err(
                pos,
                format!("expected whitespace after maxval, found 0x{b:02x}"),
            ))
        }
        None => return Err(err(pos, "truncated header after maxval".into())),
    }
    let [width, height, maxval] = fields;
    let need = width
        .checked_mul(height)
        .and_then(|n| n.checked_mul(3))
        .ok_or_else(|| err(3, "image dimensions overflow".into()))?;
    let payload = &bytes[pos..];
    if payload.len() < need {
        return Err(err(
            bytes.len(),
            format!(
                "truncated payload: expected {need} bytes, found {}",
                payload.len()
            ),
        ));
    }
    let scale = 1.0 / maxval as f64;
    let samples = payload[..need]
        .chunks_exact(3)
        .map(|p| {
            Quaternion::new(
                0.0,
                p[0] as f64 * scale,
                p[1] as f64 * scale,
                p[2] as f64 * scale,
            )
        })
        .collect();
    QSignal::new(GridSpec::new(height, width, 1.0, 1.0)?, samples)
}

/// Writes `xi1,xi2,magnitude` rows, plus `module_norm` when the spectrum
/// keeps its component transforms.
pub fn write_magnitude_csv<W: Write>(mut w: W, spectrum: &QSpectrum) -> io::Result<()> {
    let grid = spectrum.grid();
    let module = spectrum.module_norm().ok();
    if module.is_some() {
        writeln!(w, "xi1,xi2,magnitude,module_norm")?;
    } else {
        writeln!(w, "xi1,xi2,magnitude")?;
    }
    for i1 in 0..grid.n1 {
        for i2 in 0..grid.n2 {
            let n = grid.index(i1, i2);
            let (x1, x2) = grid.point(i1, i2);
            write!(w, "{x1},{x2},{}", spectrum.samples()[n].modulus())?;
            match &module {
                Some(m) => writeln!(w, ",{}", m[n])?,
                None => writeln!(w)?,
            }
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Binary,
    Ppm,
}

impl Format {
    pub fn from_path(path: &Path) -> Self {
        match path
            .extension()
            .and_then(|e| e.to_str())
            .map(str::to_ascii_lowercase)
            .as_deref()
        {
            Some("csv") => Self::Csv,
            Some("ppm") => Self::Ppm,
            _ => Self::Binary,
        }
    }
}

/// Loads grid and samples from a CSV, raw binary, or PPM file.
pub fn load(path: &Path) -> Result<(GridSpec, Vec<Quaternion>)> {
    let bytes = fs::read(path)?;
    if bytes.starts_with(BINARY_MAGIC) {
        return read_binary(&bytes);
    }
    match Format::from_path(path) {
        Format::Csv => read_csv(io::Cursor::new(bytes)),
        Format::Ppm => parse_ppm(&bytes).map(|s| (*s.grid(), s.into_samples())),
        Format::Binary => read_binary(&bytes),
    }
}

/// Saves as CSV when the extension is `.csv`, raw binary otherwise.
pub fn save(path: &Path, grid: &GridSpec, samples: &[Quaternion]) -> Result<()> {
    let mut w = BufWriter::new(fs::File::create(path)?);
    match Format::from_path(path) {
        Format::Csv => write_csv(&mut w, grid, samples)?,
        Format::Binary => write_binary(&mut w, grid, samples)?,
        Format::Ppm => {
            return Err(Error::Argument("writing PPM is not supported".into()));
        }
    }
    w.flush()?;
    Ok(())
}

impl QSignal {
    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let (grid, samples) = load(path.as_ref())?;
        Self::new(grid, samples)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        save(path.as_ref(), self.grid(), self.samples())
    }

    pub fn load_ppm(path: impl AsRef<Path>) -> Result<Self> {
        parse_ppm(&fs::read(path)?)
    }
}

impl QSpectrum {
    /// Reads spectrum samples; component transforms are not stored in files.
    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let (grid, samples) = load(path.as_ref())?;
        Self::new(grid, samples)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        save(path.as_ref(), self.grid(), self.samples())
    }
}

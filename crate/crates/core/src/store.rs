//! Plain-text archives of computed bimodules.
//!
//! ```text
//! hopflab-archive 1
//! engine 0.1.0
//! presentation hc
//! side bi
//! dim 16
//! [basis]
//! E K^-1
//! ...
//! [left E]
//! 0; 0; 1; ...
//! ...
//! checksum 3f1a...
//! ```
//!
//! Matrix rows are dense and `; `-separated. The checksum is the SHA-256 of every byte before the
//! `checksum` line.

use std::fmt::Write as _;
use std::path::Path;

use sha2::{Digest, Sha256};

use crate::bimodlab::{ActionSide, BimodError, FDBimodule};
use crate::expr::{format_poly, parse_expr, parse_scalar};
use crate::linalg::Matrix;
use crate::ncpoly::{hc, Letter};
use crate::scalars::QRat;

pub const FORMAT_VERSION: u32 = 1;
pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");
const MAGIC: &str = "hopflab-archive";

#[derive(Debug, thiserror::Error)]
pub enum StoreError {
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("corrupt archive: {0}")]
    CorruptArchive(String),
    #[error("archive format {0} is not supported")]
    UnsupportedFormat(u32),
    #[error("stored {0} disagrees with the recomputed action")]
    Revalidation(String),
    #[error("stored basis does not span a module: {0}")]
    NotAModule(#[from] BimodError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StoreWarning {
    StaleEngineVersion { archive: String, engine: String },
}

impl std::fmt::Display for StoreWarning {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            StoreWarning::StaleEngineVersion { archive, engine } => {
                write!(f, "archive written by engine {archive}, running {engine}")
            }
        }
    }
}

pub fn checksum(body: &str) -> String {
    let digest = Sha256::digest(body.as_bytes());
    digest.iter().fold(String::with_capacity(64), |mut s, b| {
        let _ = write!(s, "{b:02x}");
        s
    })
}

/// Appends the checksum line to an unsigned archive body.
pub fn sign(body: &str) -> String {
    format!("{body}checksum {}\n", checksum(body))
}

fn section(side: &str, g: Letter) -> String {
    format!("[{side} {}]", g.name())
}

fn write_matrix(out: &mut String, m: &Matrix) {
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(QRat::to_string).collect();
        out.push_str(&row.join("; "));
        out.push('\n');
    }
}

/// Canonical archive text of a module.
pub fn archive_text(m: &FDBimodule) -> String {
    let mut body = String::new();
    let _ = writeln!(body, "{MAGIC} {FORMAT_VERSION}");
    let _ = writeln!(body, "engine {ENGINE_VERSION}");
    let _ = writeln!(body, "presentation {}", hc().name());
    let _ = writeln!(body, "side {}", m.side.name());
    let _ = writeln!(body, "dim {}", m.dim());
    body.push_str("[basis]\n");
    for b in &m.basis {
        body.push_str(&format_poly(b));
        body.push('\n');
    }
    for (name, mats) in [("left", &m.left), ("right", &m.right)] {
        for (g, mat) in mats {
            body.push_str(&section(name, *g));
            body.push('\n');
            write_matrix(&mut body, mat);
        }
    }
    sign(&body)
}

pub fn save_module(m: &FDBimodule, path: impl AsRef<Path>) -> Result<(), StoreError> {
    std::fs::write(path, archive_text(m))?;
    Ok(())
}

struct Lines<'a> {
    inner: std::iter::Peekable<std::str::Lines<'a>>,
}

impl<'a> Lines<'a> {
    fn next(&mut self, what: &str) -> Result<&'a str, StoreError> {
        self.inner.next().ok_or_else(|| StoreError::CorruptArchive(format!("missing {what}")))
    }

    fn field(&mut self, key: &str) -> Result<&'a str, StoreError> {
        let line = self.next(key)?;
        line.strip_prefix(key)
            .and_then(|r| r.strip_prefix(' '))
            .ok_or_else(|| StoreError::CorruptArchive(format!("expected `{key}`, found `{line}`")))
    }
}

fn scalar(text: &str) -> Result<QRat, StoreError> {
    if text == "0" {
        return Ok(QRat::zero());
    }
    parse_scalar(text).map_err(|e| StoreError::CorruptArchive(format!("bad entry `{text}`: {e}")))
}

fn read_matrix(lines: &mut Lines, dim: usize) -> Result<Matrix, StoreError> {
    let mut rows = Vec::with_capacity(dim);
    for _ in 0..dim {
        let line = lines.next("matrix row")?;
        let row = if dim == 0 { Vec::new() } else { line.split("; ").map(scalar).collect::<Result<Vec<_>, _>>()? };
        if row.len() != dim {
            return Err(StoreError::CorruptArchive(format!("row of length {} in a {dim}-dim archive", row.len())));
        }
        rows.push(row);
    }
    Ok(if dim == 0 { Matrix::zeros(0, 0) } else { Matrix::from_rows(rows) })
}

/// Parses and revalidates archive text. The stored matrices must equal the ones recomputed
/// from the stored basis.
pub fn parse_archive(text: &str) -> Result<(FDBimodule, Vec<StoreWarning>), StoreError> {
    let body_end = text
        .rfind("checksum ")
        .filter(|&i| i == 0 || text.as_bytes()[i - 1] == b'\n')
        .ok_or_else(|| StoreError::CorruptArchive("no checksum line".into()))?;
    let (body, tail) = text.split_at(body_end);
    let stored = tail.strip_prefix("checksum ").unwrap().trim_end_matches('\n');
    if stored != checksum(body) {
        return Err(StoreError::CorruptArchive("checksum mismatch".into()));
    }

    let mut lines = Lines { inner: body.lines().peekable() };
    let version: u32 = lines
        .field(MAGIC)?
        .parse()
        .map_err(|_| StoreError::CorruptArchive("bad format version".into()))?;
    if version != FORMAT_VERSION {
        return Err(StoreError::UnsupportedFormat(version));
    }
    let mut warnings = Vec::new();
    let engine = lines.field("engine")?;
    if engine != ENGINE_VERSION {
        warnings.push(StoreWarning::StaleEngineVersion { archive: engine.into(), engine: ENGINE_VERSION.into() });
    }
    let pres = lines.field("presentation")?;
    if pres != hc().name() {
        return Err(StoreError::CorruptArchive(format!("unknown presentation `{pres}`")));
    }
    let side_text = lines.field("side")?;
    let side = ActionSide::parse(side_text)
        .ok_or_else(|| StoreError::CorruptArchive(format!("unknown side `{side_text}`")))?;
    let dim: usize = lines.field("dim")?.parse().map_err(|_| StoreError::CorruptArchive("bad dim".into()))?;
    if lines.next("basis section")? != "[basis]" {
        return Err(StoreError::CorruptArchive("expected [basis]".into()));
    }
    let mut basis = Vec::with_capacity(dim);
    for _ in 0..dim {
        let line = lines.next("basis vector")?;
        let v = parse_expr(line, hc()).map_err(|e| StoreError::CorruptArchive(format!("bad basis vector: {e}")))?;
        basis.push(v);
    }

    let mut stored_left = std::collections::BTreeMap::new();
    let mut stored_right = std::collections::BTreeMap::new();
    for (name, has, target) in
        [("left", side.has_left(), &mut stored_left), ("right", side.has_right(), &mut stored_right)]
    {
        if !has {
            continue;
        }
        let mut letters = Letter::ALL.to_vec();
        letters.sort();
        for g in letters {
            let header = lines.next("matrix section")?;
            if header != section(name, g) {
                return Err(StoreError::CorruptArchive(format!("expected {}, found `{header}`", section(name, g))));
            }
            target.insert(g, read_matrix(&mut lines, dim)?);
        }
    }
    if let Some(extra) = lines.inner.next() {
        return Err(StoreError::CorruptArchive(format!("trailing line `{extra}`")));
    }

    let module = FDBimodule::from_basis(basis, side)?;
    for (name, stored, fresh) in [("left", &stored_left, &module.left), ("right", &stored_right, &module.right)] {
        for (g, mat) in fresh {
            if stored.get(g) != Some(mat) {
                return Err(StoreError::Revalidation(format!("{name} {} matrix", g.name())));
            }
        }
    }
    Ok((module, warnings))
}

pub fn load_module(path: impl AsRef<Path>) -> Result<(FDBimodule, Vec<StoreWarning>), StoreError> {
    parse_archive(&std::fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncpoly::NCPoly;

    fn trivial() -> FDBimodule {
        FDBimodule::from_basis(vec![NCPoly::one()], ActionSide::Bi).unwrap()
    }

    #[test]
    fn trivial_round_trip() {
        let m = trivial();
        let text = archive_text(&m);
        assert!(text.contains("dim 1\n[basis]\n1\n"));
        let (back, warnings) = parse_archive(&text).unwrap();
        assert!(warnings.is_empty());
        assert_eq!(back.basis, m.basis);
        assert_eq!(back.left, m.left);
        assert_eq!(archive_text(&back), text);
    }

    #[test]
    fn truncated_is_corrupt() {
        let text = archive_text(&trivial());
        let cut = &text[..text.len() / 2];
        assert!(matches!(parse_archive(cut), Err(StoreError::CorruptArchive(_))));
    }

    #[test]
    fn stale_engine_is_a_warning() {
        let text = archive_text(&trivial());
        let body = text[..text.rfind("checksum ").unwrap()].replace(&format!("engine {ENGINE_VERSION}"), "engine 0.0.0");
        let (_, warnings) = parse_archive(&sign(&body)).unwrap();
        assert_eq!(warnings.len(), 1);
    }
}

//! Matrix generator files.
//!
//! ```text
//! matrix-group p=3 f=1 d=2
//! # Q8 in GL2(3)
//! 0 1 2 0
//! 1 1 1 2
//! checksum sha256=<hex>
//! ```
//!
//! Each matrix line holds the `d²` entries row by row as field element
//! codes. The checksum covers every byte before the trailer line.

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::field::{Field, Matrix};

#[derive(Clone, Debug)]
pub struct MatrixGroupFile {
    pub field: Field,
    pub d: usize,
    pub matrices: Vec<Matrix>,
}

const SHIPPED: &[(&str, &str)] = &[
    ("q3_d2_q8", include_str!("../data/q3_d2_q8.txt")),
    ("q5_d2_sl2_3", include_str!("../data/q5_d2_sl2_3.txt")),
    ("q5_d2_n_gl", include_str!("../data/q5_d2_n_gl.txt")),
    ("q3_d4_e5", include_str!("../data/q3_d4_e5.txt")),
    ("q3_d4_e5_2", include_str!("../data/q3_d4_e5_2.txt")),
    ("q3_d4_e5_4", include_str!("../data/q3_d4_e5_4.txt")),
];

pub fn shipped_names() -> impl Iterator<Item = &'static str> {
    SHIPPED.iter().map(|(n, _)| *n)
}

pub fn shipped_text(name: &str) -> Result<&'static str> {
    SHIPPED
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, t)| *t)
        .ok_or_else(|| Error::DataFile(format!("no shipped data file named {name}")))
}

pub fn load_shipped(name: &str) -> Result<MatrixGroupFile> {
    parse(shipped_text(name)?)
}

fn digest(body: &str) -> String {
    hex::encode(Sha256::digest(body.as_bytes()))
}

/// Renders a file, checksum included.
pub fn render(k: &Field, d: usize, comment: &str, mats: &[Matrix]) -> String {
    let mut body = format!("matrix-group p={} f={} d={}\n", k.p(), k.f(), d);
    for line in comment.lines() {
        body.push_str(&format!("# {line}\n"));
    }
    for m in mats {
        let entries: Vec<String> = m.entries.iter().map(u8::to_string).collect();
        body.push_str(&entries.join(" "));
        body.push('\n');
    }
    let sum = digest(&body);
    body.push_str(&format!("checksum sha256={sum}\n"));
    body
}

pub fn parse(text: &str) -> Result<MatrixGroupFile> {
    let trailer_at = text
        .rfind("checksum sha256=")
        .ok_or_else(|| Error::DataFile("missing checksum trailer".into()))?;
    let (body, trailer) = text.split_at(trailer_at);
    let expected = trailer.trim_start_matches("checksum sha256=").trim();
    if digest(body) != expected {
        return Err(Error::DataFile("checksum mismatch".into()));
    }
    let mut lines = body.lines().filter(|l| !l.trim().is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or_else(|| Error::DataFile("empty file".into()))?;
    let mut words = header.split_whitespace();
    if words.next() != Some("matrix-group") {
        return Err(Error::DataFile("header must start with matrix-group".into()));
    }
    let (mut p, mut f, mut d) = (None, None, None);
    for w in words {
        let (key, value) = w.split_once('=').ok_or_else(|| Error::DataFile(format!("bad header field {w}")))?;
        let value: u32 = value.parse().map_err(|_| Error::DataFile(format!("bad number in {w}")))?;
        match key {
            "p" => p = Some(value),
            "f" => f = Some(value),
            "d" => d = Some(value as usize),
            _ => return Err(Error::DataFile(format!("unknown header field {key}"))),
        }
    }
    let (Some(p), Some(f), Some(d)) = (p, f, d) else {
        return Err(Error::DataFile("header needs p, f and d".into()));
    };
    let field = Field::new(p, f)?;
    let mut matrices = Vec::new();
    for line in lines {
        let entries = line
            .split_whitespace()
            .map(|w| w.parse::<u8>().ok().filter(|&c| (c as usize) < field.q()))
            .collect::<Option<Vec<u8>>>()
            .ok_or_else(|| Error::DataFile(format!("bad matrix line {line}")))?;
        if entries.len() != d * d {
            return Err(Error::DataFile(format!("expected {} entries, found {}", d * d, entries.len())));
        }
        let m = Matrix { d, entries };
        if m.det(&field) == 0 {
            return Err(Error::DataFile("singular matrix".into()));
        }
        matrices.push(m);
    }
    Ok(MatrixGroupFile { field, d, matrices })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_corruption() {
        let k = Field::new(3, 1).unwrap();
        let m = Matrix::from_rows(&[&[0, 1], &[2, 0]]);
        let text = render(&k, 2, "test", &[m.clone()]);
        let back = parse(&text).unwrap();
        assert_eq!(back.matrices, vec![m]);
        assert_eq!(back.d, 2);
        let bad = text.replacen("0 1 2 0", "0 1 1 0", 1);
        assert!(matches!(parse(&bad), Err(Error::DataFile(_))));
        assert!(parse("matrix-group p=3 f=1 d=2\n").is_err());
    }

    #[test]
    fn shipped_files_load() {
        for name in shipped_names() {
            let file = load_shipped(name).unwrap();
            assert!(!file.matrices.is_empty(), "{name}");
        }
        assert!(load_shipped("nope").is_err());
    }
}

//! Instance files: one JSON header line, then one payload row per item.
//!
//! ```text
//! {"kind":"points","metric":"l1","coords":"int","n":2,"dim":3}
//! 0 0 0
//! 1 -2 3
//! ```
//!
//! Permutation rows are space-separated symbols, string rows are the raw
//! bytes, and hitting-set rows are `a <bits>` or `b <bits>` with one
//! character per universe element.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::metrics::{Metric, Permutation};
use crate::reductions::HittingSetInstance;
use crate::solvers::{Coords, PermutationSet, PointSet, StringSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    Points,
    Permutations,
    Strings,
    HittingSet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CoordKind {
    Int,
    Real,
}

/// Provenance of a generated instance.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Meta {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub params: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub planted_answer: Option<bool>,
    /// `[yes, no]` decision thresholds of a gadget.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub thresholds: Option<[u64; 2]>,
}

impl Meta {
    pub fn is_empty(&self) -> bool {
        *self == Meta::default()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Header {
    pub kind: Kind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metric: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coords: Option<CoordKind>,
    pub n: usize,
    /// Coordinates per point, permutation length, common string length or
    /// universe size.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_a: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_b: Option<usize>,
    #[serde(default, skip_serializing_if = "Meta::is_empty")]
    pub meta: Meta,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Payload {
    Points(PointSet),
    Permutations(PermutationSet),
    Strings(StringSet),
    HittingSet(HittingSetInstance),
}

#[derive(Debug, Clone, PartialEq)]
pub struct InstanceFile {
    pub header: Header,
    pub payload: Payload,
}

fn parse_err(line: usize, msg: impl std::fmt::Display) -> Error {
    Error::Parse(format!("line {line}: {msg}"))
}

impl InstanceFile {
    /// Wraps a payload with a header derived from it.
    pub fn new(payload: Payload, meta: Meta) -> InstanceFile {
        let blank = |kind, n| Header { kind, metric: None, coords: None, n, dim: None, n_a: None, n_b: None, meta: Meta::default() };
        let mut header = match &payload {
            Payload::Points(p) => Header {
                metric: Some(p.metric().to_string()),
                coords: Some(if p.is_integer() { CoordKind::Int } else { CoordKind::Real }),
                dim: Some(p.dim()),
                ..blank(Kind::Points, p.len())
            },
            Payload::Permutations(p) => Header { dim: Some(p.dim()), ..blank(Kind::Permutations, p.len()) },
            Payload::Strings(s) => Header { dim: s.uniform_len(), ..blank(Kind::Strings, s.len()) },
            Payload::HittingSet(h) => Header {
                dim: Some(h.m),
                n_a: Some(h.a.len()),
                n_b: Some(h.b.len()),
                ..blank(Kind::HittingSet, h.a.len() + h.b.len())
            },
        };
        header.meta = meta;
        InstanceFile { header, payload }
    }

    pub fn to_bytes(&self) -> Result<Vec<u8>> {
        let mut out = serde_json::to_vec(&self.header).map_err(|e| Error::Parse(e.to_string()))?;
        out.push(b'\n');
        let join = |out: &mut Vec<u8>, items: &mut dyn Iterator<Item = String>| {
            let row: Vec<String> = items.collect();
            out.extend_from_slice(row.join(" ").as_bytes());
            out.push(b'\n');
        };
        match &self.payload {
            Payload::Points(p) => {
                for i in 0..p.len() {
                    let r = i * p.dim()..(i + 1) * p.dim();
                    match p.coords() {
                        Coords::Int(c) => join(&mut out, &mut c[r].iter().map(i64::to_string)),
                        Coords::Real(c) => join(&mut out, &mut c[r].iter().map(f64::to_string)),
                    }
                }
            }
            Payload::Permutations(p) => {
                for perm in p.perms() {
                    join(&mut out, &mut perm.as_slice().iter().map(u32::to_string));
                }
            }
            Payload::Strings(s) => {
                for (i, row) in s.strings().iter().enumerate() {
                    if row.iter().any(|&c| c == b'\n' || c == b'\r') {
                        return Err(Error::Parse(format!("string {i} contains a line break")));
                    }
                    out.extend_from_slice(row);
                    out.push(b'\n');
                }
            }
            Payload::HittingSet(h) => {
                for (tag, sets) in [("a", &h.a), ("b", &h.b)] {
                    for &s in sets {
                        let bits: String =
                            (0..h.m).map(|e| if HittingSetInstance::contains(s, e) { '1' } else { '0' }).collect();
                        out.extend_from_slice(format!("{tag} {bits}\n").as_bytes());
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<InstanceFile> {
        let split = bytes.iter().position(|&c| c == b'\n').ok_or_else(|| parse_err(1, "missing header line"))?;
        let header: Header = serde_json::from_slice(&bytes[..split]).map_err(|e| parse_err(1, e))?;
        let body = &bytes[split + 1..];
        let rows: Vec<&[u8]> = if body.is_empty() {
            Vec::new()
        } else {
            let body = body.strip_suffix(b"\n").ok_or_else(|| Error::Parse("missing final newline".into()))?;
            body.split(|&c| c == b'\n').collect()
        };
        if rows.len() != header.n {
            return Err(Error::Parse(format!("header announces {} rows, found {}", header.n, rows.len())));
        }
        let text = |i: usize| std::str::from_utf8(rows[i]).map_err(|e| parse_err(i + 2, e));
        let need_dim = || header.dim.ok_or_else(|| parse_err(1, "missing dim"));
        let payload = match header.kind {
            Kind::Points => {
                let metric: Metric = header
                    .metric
                    .as_deref()
                    .ok_or_else(|| parse_err(1, "missing metric"))?
                    .parse()
                    .map_err(|e| parse_err(1, e))?;
                let dim = need_dim()?;
                let coords = match header.coords.ok_or_else(|| parse_err(1, "missing coords"))? {
                    CoordKind::Int => Coords::Int(parse_rows(&rows, dim, text)?),
                    CoordKind::Real => Coords::Real(parse_rows(&rows, dim, text)?),
                };
                Payload::Points(PointSet::new(dim, coords, metric).map_err(|e| parse_err(2, e))?)
            }
            Kind::Permutations => {
                let dim = need_dim()?;
                let flat: Vec<u32> = parse_rows(&rows, dim, text)?;
                let perms = flat
                    .chunks(dim.max(1))
                    .enumerate()
                    .map(|(i, c)| Permutation::new(c.to_vec()).map_err(|e| parse_err(i + 2, e)))
                    .collect::<Result<Vec<_>>>()?;
                Payload::Permutations(PermutationSet::new(perms).map_err(|e| parse_err(2, e))?)
            }
            Kind::Strings => {
                let strings: Vec<Vec<u8>> = rows.iter().map(|r| r.to_vec()).collect();
                if let Some(dim) = header.dim {
                    if let Some(i) = strings.iter().position(|s| s.len() != dim) {
                        return Err(parse_err(i + 2, format!("expected length {dim}")));
                    }
                }
                let set = StringSet::new(strings).map_err(|e| parse_err(2, e))?;
                if header.dim.is_none() && set.uniform_len().is_some() {
                    return Err(parse_err(1, "uniform-length strings must declare dim"));
                }
                Payload::Strings(set)
            }
            Kind::HittingSet => {
                let m = need_dim()?;
                let (n_a, n_b) = match (header.n_a, header.n_b) {
                    (Some(a), Some(b)) if a + b == header.n => (a, b),
                    _ => return Err(parse_err(1, "n_a + n_b must equal n")),
                };
                let mut sets = Vec::with_capacity(header.n);
                for i in 0..header.n {
                    let line = text(i)?;
                    let tag = if i < n_a { "a " } else { "b " };
                    let bits = line.strip_prefix(tag).ok_or_else(|| parse_err(i + 2, format!("expected '{tag}' row")))?;
                    if bits.len() != m {
                        return Err(parse_err(i + 2, format!("expected {m} bits")));
                    }
                    let mut set = 0u64;
                    for (e, c) in bits.chars().enumerate() {
                        match c {
                            '0' => {}
                            '1' if e < 64 => set |= 1 << e,
                            _ => return Err(parse_err(i + 2, format!("bad bit '{c}'"))),
                        }
                    }
                    sets.push(set);
                }
                let b = sets.split_off(n_a);
                debug_assert_eq!(b.len(), n_b);
                let mut inst = HittingSetInstance::new(m, sets, b).map_err(|e| parse_err(1, e))?;
                inst.planted_answer = header.meta.planted_answer;
                Payload::HittingSet(inst)
            }
        };
        let file = InstanceFile { header, payload };
        // Derived header fields must agree with the payload.
        let canonical = InstanceFile::new(file.payload.clone(), file.header.meta.clone());
        if canonical.header != file.header {
            return Err(parse_err(1, "header does not match payload"));
        }
        Ok(file)
    }

    pub fn read_path(path: &Path) -> Result<InstanceFile> {
        let bytes = std::fs::read(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        InstanceFile::from_bytes(&bytes).map_err(|e| match e {
            Error::Parse(msg) => Error::Parse(format!("{}: {msg}", path.display())),
            other => other,
        })
    }

    pub fn write_path(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_bytes()?)?;
        Ok(())
    }
}

fn parse_rows<'a, T: std::str::FromStr>(
    rows: &[&[u8]],
    dim: usize,
    text: impl Fn(usize) -> Result<&'a str>,
) -> Result<Vec<T>>
where
    T::Err: std::fmt::Display,
{
    let mut flat = Vec::with_capacity(rows.len() * dim);
    for i in 0..rows.len() {
        let before = flat.len();
        for tok in text(i)?.split_ascii_whitespace() {
            flat.push(tok.parse::<T>().map_err(|e| parse_err(i + 2, format!("'{tok}': {e}")))?);
        }
        if flat.len() - before != dim {
            return Err(parse_err(i + 2, format!("expected {dim} values, found {}", flat.len() - before)));
        }
    }
    Ok(flat)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn roundtrip(file: &InstanceFile) {
        let bytes = file.to_bytes().unwrap();
        let back = InstanceFile::from_bytes(&bytes).unwrap();
        assert_eq!(&back, file);
        assert_eq!(back.to_bytes().unwrap(), bytes);
    }

    #[test]
    fn points_layout() {
        let p = PointSet::from_int_rows(&[vec![0, 0, 0], vec![1, -2, 3]], Metric::L1).unwrap();
        let f = InstanceFile::new(Payload::Points(p), Meta::default());
        assert_eq!(
            String::from_utf8(f.to_bytes().unwrap()).unwrap(),
            "{\"kind\":\"points\",\"metric\":\"l1\",\"coords\":\"int\",\"n\":2,\"dim\":3}\n0 0 0\n1 -2 3\n"
        );
        roundtrip(&f);
    }

    #[test]
    fn every_kind_roundtrips() {
        let real = PointSet::from_real_rows(&[vec![0.1, -2.5], vec![1e300, 3.0]], Metric::Lp(2.0)).unwrap();
        roundtrip(&InstanceFile::new(Payload::Points(real), Meta::default()));
        let perms = PermutationSet::from_rows(vec![vec![2, 1, 3], vec![3, 1, 2]]).unwrap();
        let meta = Meta { generator: Some("random-perms".into()), seed: Some(5), ..Meta::default() };
        roundtrip(&InstanceFile::new(Payload::Permutations(perms), meta));
        let strings = StringSet::new(vec![b"abc".to_vec(), Vec::new(), b"a b".to_vec()]).unwrap();
        roundtrip(&InstanceFile::new(Payload::Strings(strings), Meta::default()));
        let mut hs = HittingSetInstance::new(4, vec![0b1010], vec![0b0001, 0]).unwrap();
        hs.planted_answer = Some(false);
        let meta = Meta { planted_answer: Some(false), thresholds: Some([12, 13]), ..Meta::default() };
        roundtrip(&InstanceFile::new(Payload::HittingSet(hs), meta));
    }

    #[test]
    fn malformed_inputs() {
        for bad in [
            &b""[..],
            b"{\"kind\":\"points\"}\n",
            b"{\"kind\":\"permutations\",\"n\":1,\"dim\":3}\n1 2 2\n",
            b"{\"kind\":\"permutations\",\"n\":2,\"dim\":2}\n1 2\n",
            b"{\"kind\":\"points\",\"metric\":\"l1\",\"coords\":\"int\",\"n\":1,\"dim\":2}\n1 x\n",
            b"{\"kind\":\"points\",\"metric\":\"l1\",\"coords\":\"int\",\"n\":1,\"dim\":2}\n1 2",
            b"{\"kind\":\"strings\",\"n\":1,\"dim\":4}\nabc\n",
            b"{\"kind\":\"hitting-set\",\"n\":1,\"dim\":2,\"n_a\":1,\"n_b\":0}\nb 01\n",
        ] {
            assert!(matches!(InstanceFile::from_bytes(bad), Err(Error::Parse(_))), "{:?}", String::from_utf8_lossy(bad));
        }
    }
}

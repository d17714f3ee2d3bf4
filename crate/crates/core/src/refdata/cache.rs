//! On-disk cache of the solved `s`/`t` operators.
//!
//! ```text
//! qschubert-operators/1
//! sha256 <hex digest of everything below this line>
//! space E6/P2
//! gen s (0,1,1,1,0,0)
//! gen t (1,1,1,1,0,0)
//! e s <source> <q-power> <target> <num>/<den>
//! ...
//! ```
//!
//! Sources and targets are class ordinals of the enumeration, which is
//! deterministic. Rationals are exact decimal `num/den`. Writes go to a
//! temporary file in the target directory, then are renamed into place.

use std::fs;
use std::io::Write;
use std::path::Path;

use sha2::{Digest, Sha256};

use crate::coset::{ParabolicQuotient, SpaceId};
use crate::error::{Error, Result};
use crate::graded::GradedOperator;
use crate::rational::{format_q, parse_q};
use crate::ringrecon::{GeneratorSet, QuantumRing};

pub const CACHE_VERSION: &str = "qschubert-operators/1";

fn digest(body: &str) -> String {
    hex::encode(Sha256::digest(body.as_bytes()))
}

pub fn cache_to_string(ring: &QuantumRing) -> String {
    let quot = &ring.quotient;
    let mut body = format!("space {}\n", quot.space);
    for def in [ring.generators.s, ring.generators.t].into_iter().flatten() {
        body += &format!("gen {} {}\n", def.name, quot.table_label(def.ordinal));
    }
    for op in [&ring.s, &ring.t].into_iter().flatten() {
        for (w, col) in op.columns.iter().enumerate() {
            for (k, y, c) in col {
                body += &format!("e {} {w} {k} {y} {}\n", op.name, format_q(c));
            }
        }
    }
    format!("{CACHE_VERSION}\nsha256 {}\n{body}", digest(&body))
}

pub fn cache_from_str(text: &str) -> Result<QuantumRing> {
    let (version, rest) = text.split_once('\n').unwrap_or((text, ""));
    if version != CACHE_VERSION {
        return Err(Error::CacheVersion {
            expected: CACHE_VERSION.to_string(),
            found: version.to_string(),
        });
    }
    let (sum_line, body) = rest.split_once('\n').ok_or(Error::CacheChecksum)?;
    let sum = sum_line.strip_prefix("sha256 ").ok_or(Error::CacheChecksum)?;
    if sum != digest(body) {
        return Err(Error::CacheChecksum);
    }

    let mut lines = body.lines().enumerate().map(|(i, l)| (i + 3, l));
    let perr = |line: usize, message: &str| Error::Parse {
        line,
        column: 1,
        message: message.to_string(),
    };
    let (ln, first) = lines.next().ok_or_else(|| perr(3, "missing space line"))?;
    let space: SpaceId = first
        .strip_prefix("space ")
        .ok_or_else(|| perr(ln, "expected `space`"))?
        .parse()?;
    let quot = ParabolicQuotient::enumerate(space);
    let n = quot.len();
    let mut gen_ords = [None, None];
    let mut ops: [Option<GradedOperator>; 2] = [None, None];
    let slot = |name: &str| match name {
        "s" => Some(0),
        "t" => Some(1),
        _ => None,
    };
    for (ln, line) in lines {
        let f: Vec<&str> = line.split(' ').collect();
        match f.as_slice() {
            ["gen", name, label] => {
                let i = slot(name).ok_or_else(|| perr(ln, "unknown generator"))?;
                gen_ords[i] = Some(quot.parse_label(label)?);
            }
            ["e", name, w, k, y, c] => {
                let i = slot(name).ok_or_else(|| perr(ln, "unknown generator"))?;
                let w: usize = w.parse().map_err(|_| perr(ln, "bad source"))?;
                let k: u32 = k.parse().map_err(|_| perr(ln, "bad q-power"))?;
                let y: usize = y.parse().map_err(|_| perr(ln, "bad target"))?;
                let c = parse_q(c).ok_or_else(|| perr(ln, "bad coefficient"))?;
                if w >= n || y >= n {
                    return Err(perr(ln, "ordinal out of range"));
                }
                let ord = gen_ords[i].ok_or_else(|| perr(ln, "entry before its `gen` line"))?;
                let op = ops[i].get_or_insert_with(|| {
                    GradedOperator::new(if i == 0 { 's' } else { 't' }, quot.length(ord), quot.fano_index, n)
                });
                op.columns[w].push((k, y, c));
            }
            _ => return Err(perr(ln, "unrecognized line")),
        }
    }
    let gens = GeneratorSet::from_ordinals(&quot, gen_ords[0], gen_ords[1])?;
    let [mut s, mut t] = ops;
    for op in [&mut s, &mut t].into_iter().flatten() {
        op.normalize();
    }
    Ok(QuantumRing::from_parts(quot, gens, s, t))
}

pub fn cache_store(ring: &QuantumRing, path: &Path) -> Result<()> {
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty()).unwrap_or(Path::new("."));
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(cache_to_string(ring).as_bytes())?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| Error::Io(e.error))?;
    Ok(())
}

pub fn cache_load(path: &Path) -> Result<QuantumRing> {
    cache_from_str(&fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_in_memory() {
        let ring = QuantumRing::build("E7/P7".parse().unwrap()).unwrap();
        let text = cache_to_string(&ring);
        let back = cache_from_str(&text).unwrap();
        assert_eq!(back.s, ring.s);
        assert_eq!(back.t, ring.t);
        assert_eq!(back.generators, ring.generators);
        assert_eq!(cache_to_string(&back), text);
    }

    #[test]
    fn version_and_checksum_errors() {
        let ring = QuantumRing::build("F4/P1".parse().unwrap()).unwrap();
        let text = cache_to_string(&ring);
        let wrong = text.replacen(CACHE_VERSION, "qschubert-operators/0", 1);
        assert!(matches!(cache_from_str(&wrong), Err(Error::CacheVersion { .. })));
        let truncated = &text[..text.len() - 10];
        assert!(matches!(cache_from_str(truncated), Err(Error::CacheChecksum)));
        assert!(matches!(cache_from_str(CACHE_VERSION), Err(Error::CacheChecksum)));
    }

    #[test]
    fn store_and_load_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("e6p1.ops");
        let ring = QuantumRing::build("E6/P1".parse().unwrap()).unwrap();
        cache_store(&ring, &path).unwrap();
        cache_store(&ring, &path).unwrap();
        let back = cache_load(&path).unwrap();
        assert_eq!(back.s, ring.s);
        assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
    }
}

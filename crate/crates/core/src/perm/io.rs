//! Generator file format: a header `degree k`, then `k` lines of `degree`
//! space-separated 0-indexed images.

use std::fmt::Write as _;

use super::Permutation;
use crate::error::{Error, Result};

pub fn write_generators(degree: usize, gens: &[Permutation]) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", degree, gens.len()).unwrap();
    for g in gens {
        let line: Vec<String> = g.to_vec().iter().map(|x| x.to_string()).collect();
        writeln!(out, "{}", line.join(" ")).unwrap();
    }
    out
}

pub fn read_generators(text: &str) -> Result<(usize, Vec<Permutation>)> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or_else(|| Error::Parse("empty generator file".into()))?;
    let nums = parse_line(header)?;
    let [degree, k] = nums[..] else {
        return Err(Error::Parse(format!("bad header '{header}'")));
    };
    let mut gens = Vec::with_capacity(k);
    for line in lines.by_ref().take(k) {
        let images = parse_line(line)?;
        if images.len() != degree {
            return Err(Error::DegreeMismatch { expected: degree, got: images.len() });
        }
        gens.push(Permutation::from_images(images)?);
    }
    if gens.len() != k || lines.next().is_some() {
        return Err(Error::Parse(format!("expected exactly {k} generator lines")));
    }
    Ok((degree, gens))
}

fn parse_line(line: &str) -> Result<Vec<usize>> {
    line.split_ascii_whitespace()
        .map(|s| s.parse().map_err(|e| Error::Parse(format!("'{s}': {e}"))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let g = Permutation::from_cycles(4, &[&[0, 3]]).unwrap();
        let text = write_generators(4, std::slice::from_ref(&g));
        assert_eq!(text, "4 1\n3 1 2 0\n");
        assert_eq!(read_generators(&text).unwrap(), (4, vec![g]));
    }

    #[test]
    fn rejects_malformed() {
        assert!(read_generators("3 1\n0 1\n").is_err());
        assert!(read_generators("3 2\n0 1 2\n").is_err());
        assert!(read_generators("3 1\n0 0 2\n").is_err());
    }
}

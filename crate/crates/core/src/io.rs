//! The `.mono` text format.
//!
//! ```text
//! MONO 1
//! r=<r> n=<n>
//! <C(n,r) characters over '-', '+', '0' in colex order>
//! ```
//!
//! Lines end with LF. A file containing `0` is read as a ternary coloring.

use std::fs;
use std::path::Path;

use crate::coloring::{edge_count, Sign, SignFunction};
use crate::error::{Error, Result};

pub const MAGIC: &str = "MONO 1";

pub fn to_mono_string(c: &SignFunction) -> String {
    format!("{MAGIC}\nr={} n={}\n{}\n", c.r(), c.n(), c.color_string())
}

pub fn parse_mono(text: &str) -> Result<SignFunction> {
    parse_mono_with_cap(text, crate::coloring::DEFAULT_MAX_VERTICES)
}

pub fn parse_mono_with_cap(text: &str, max_vertices: usize) -> Result<SignFunction> {
    let mut lines = text.split('\n');
    let header = lines.next().unwrap_or("");
    if header != MAGIC {
        return Err(perr(1, 1, format!("expected header {MAGIC:?}, found {header:?}")));
    }
    let dims = lines.next().ok_or_else(|| perr(2, 1, "missing dimension line"))?;
    let (r, n) = parse_dims(dims)?;
    let expected = edge_count(r, n).map_err(|e| perr(2, 1, e.to_string()))?;

    let body = lines.next().ok_or_else(|| perr(3, 1, "missing color line"))?;
    let mut colors = Vec::with_capacity(expected);
    for (i, ch) in body.chars().enumerate() {
        let s = Sign::from_char(ch).ok_or_else(|| perr(3, i + 1, format!("illegal character {ch:?}")))?;
        colors.push(s);
    }
    if colors.len() != expected {
        return Err(perr(
            3,
            colors.len().min(expected) + 1,
            format!("expected {expected} colors for r={r} n={n}, found {}", colors.len()),
        ));
    }
    for (offset, rest) in lines.enumerate() {
        if !rest.is_empty() {
            return Err(perr(4 + offset, 1, "unexpected trailing content"));
        }
    }
    let ternary = colors.contains(&Sign::Zero);
    SignFunction::with_vertex_cap(r, n, &colors, ternary, max_vertices).map_err(|e| match e {
        Error::TooLarge { .. } => e,
        other => perr(2, 1, other.to_string()),
    })
}

fn parse_dims(line: &str) -> Result<(usize, usize)> {
    let mut fields = line.split(' ');
    let mut col = 1;
    let mut take = |key: &str| -> Result<usize> {
        let field = fields.next().ok_or_else(|| perr(2, col, format!("missing field {key}=")))?;
        let value = field
            .strip_prefix(key)
            .and_then(|v| v.strip_prefix('='))
            .ok_or_else(|| perr(2, col, format!("expected {key}=<int>, found {field:?}")))?;
        let parsed = value
            .parse::<usize>()
            .map_err(|_| perr(2, col + key.len() + 1, format!("invalid integer {value:?}")))?;
        col += field.len() + 1;
        Ok(parsed)
    };
    let r = take("r")?;
    let n = take("n")?;
    if fields.next().is_some() {
        return Err(perr(2, line.len(), "unexpected trailing field"));
    }
    Ok((r, n))
}

fn perr(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

pub fn read_mono(path: impl AsRef<Path>) -> Result<SignFunction> {
    parse_mono(&fs::read_to_string(path)?)
}

pub fn write_mono(path: impl AsRef<Path>, c: &SignFunction) -> Result<()> {
    fs::write(path, to_mono_string(c))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use Sign::{Minus as M, Plus as P, Zero as Z};

    #[test]
    fn example_serializes_in_colex_order() {
        let c = SignFunction::new(3, 4, &[M, P, M, P]).unwrap();
        assert_eq!(to_mono_string(&c), "MONO 1\nr=3 n=4\n-+-+\n");
        assert_eq!(parse_mono("MONO 1\nr=3 n=4\n-+-+\n").unwrap(), c);
    }

    #[test]
    fn ternary_single_edge() {
        let c = SignFunction::new_ternary(3, 3, &[Z]).unwrap();
        assert_eq!(to_mono_string(&c), "MONO 1\nr=3 n=3\n0\n");
        let back = parse_mono(&to_mono_string(&c)).unwrap();
        assert!(back.ternary_allowed());
        assert_eq!(back, c);
    }

    #[test]
    fn missing_final_newline_is_accepted() {
        assert!(parse_mono("MONO 1\nr=2 n=3\n++-").is_ok());
    }

    #[test]
    fn errors_carry_positions() {
        let cases = [
            ("MONO 2\nr=3 n=4\n-+-+\n", 1, 1),
            ("MONO 1\nr=3\n-+-+\n", 2, 5),
            ("MONO 1\nq=3 n=4\n-+-+\n", 2, 1),
            ("MONO 1\nr=x n=4\n-+-+\n", 2, 3),
            ("MONO 1\nr=3 n=4\n-+x+\n", 3, 3),
            ("MONO 1\nr=3 n=4\n-+-\n", 3, 4),
            ("MONO 1\nr=3 n=4\n-+-+-\n", 3, 5),
            ("MONO 1\nr=3 n=4\n-+-+\nextra\n", 4, 1),
            ("MONO 1\nr=3 n=2\n\n", 2, 1),
        ];
        for (text, line, column) in cases {
            match parse_mono(text) {
                Err(Error::Parse { line: l, column: c, .. }) => {
                    assert_eq!((l, c), (line, column), "{text:?}");
                }
                other => panic!("{text:?} -> {other:?}"),
            }
        }
    }
}

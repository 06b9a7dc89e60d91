//! Line-oriented reader shared by the group, quandle and tangle file formats.
//!
//! All formats treat a line whose first non-blank character is `#` as a
//! comment and ignore blank lines. Line numbers in errors are 1-based and
//! refer to the original input.

use std::fmt;

/// Error raised while reading one of the text formats.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct SyntaxError {
    pub line: usize,
    pub message: String,
}

impl SyntaxError {
    pub fn new(line: usize, message: impl fmt::Display) -> Self {
        SyntaxError {
            line,
            message: message.to_string(),
        }
    }
}

/// Iterator over the meaningful lines of a text file as `(line_number, line)`.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// Parses a `<keyword> <n>` header line.
pub(crate) fn header(
    lines: &mut impl Iterator<Item = (usize, impl AsRef<str>)>,
    keyword: &str,
) -> Result<usize, SyntaxError> {
    let (line, text) = lines
        .next()
        .ok_or_else(|| SyntaxError::new(1, format!("missing `{keyword} <n>` header")))?;
    let mut words = text.as_ref().split_whitespace();
    match (words.next(), words.next(), words.next()) {
        (Some(k), Some(n), None) if k == keyword => {
            let n: usize = n
                .parse()
                .map_err(|_| SyntaxError::new(line, format!("invalid order {n:?}")))?;
            if n == 0 {
                return Err(SyntaxError::new(line, "order must be positive"));
            }
            Ok(n)
        }
        _ => Err(SyntaxError::new(
            line,
            format!("expected `{keyword} <n>`, found {:?}", text.as_ref()),
        )),
    }
}

/// Reads a `<keyword> <n>` header followed by `n` rows of `n` integers.
pub(crate) fn parse_square_table(
    text: &str,
    keyword: &str,
) -> Result<Vec<Vec<usize>>, SyntaxError> {
    let mut lines = content_lines(text);
    let n = header(&mut lines, keyword)?;
    let mut rows = Vec::with_capacity(n);
    let mut last_line = 1;
    for (line, row) in lines {
        last_line = line;
        if rows.len() == n {
            return Err(SyntaxError::new(line, format!("more than {n} rows")));
        }
        let entries = row
            .split_whitespace()
            .map(|w| {
                w.parse::<usize>()
                    .map_err(|_| SyntaxError::new(line, format!("invalid entry {w:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if entries.len() != n {
            return Err(SyntaxError::new(
                line,
                format!("expected {n} entries, found {}", entries.len()),
            ));
        }
        rows.push(entries);
    }
    if rows.len() != n {
        return Err(SyntaxError::new(
            last_line,
            format!("expected {n} rows, found {}", rows.len()),
        ));
    }
    Ok(rows)
}

/// Writes a square table in the `<keyword> <n>` format.
pub(crate) fn write_square_table(
    f: &mut fmt::Formatter<'_>,
    keyword: &str,
    order: usize,
    entry: impl Fn(usize, usize) -> usize,
) -> fmt::Result {
    writeln!(f, "{keyword} {order}")?;
    for i in 0..order {
        for j in 0..order {
            if j > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", entry(i, j))?;
        }
        writeln!(f)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn skips_comments_and_blanks() {
        let text = "# hello\nquandle 2\n\n0 0\n  # inner\n1 1\n";
        let rows = parse_square_table(text, "quandle").unwrap();
        assert_eq!(rows, vec![vec![0, 0], vec![1, 1]]);
    }

    #[test]
    fn reports_line_of_short_row() {
        let err = parse_square_table("group 2\n0 1\n1\n", "group").unwrap_err();
        assert_eq!(err.line, 3);
    }

    #[test]
    fn rejects_wrong_keyword_and_zero_order() {
        assert!(parse_square_table("quandle 1\n0\n", "group").is_err());
        assert!(parse_square_table("group 0\n", "group").is_err());
        assert!(parse_square_table("", "group").is_err());
    }

    #[test]
    fn rejects_extra_rows() {
        let err = parse_square_table("group 1\n0\n0\n", "group").unwrap_err();
        assert_eq!(err.line, 3);
    }
}

//! Versioned structured-text files: a `<key>: <version>` header line
//! followed by a TOML body.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HeaderError {
    #[error("missing `{key}: <version>` header line")]
    Missing { key: &'static str },
    #[error("unsupported {key} {found} (expected {expected})")]
    Version {
        key: &'static str,
        found: String,
        expected: u32,
    },
}

/// Splits off the header line and checks its version. Blank lines and `#`
/// comments before the header are allowed.
pub fn split_header<'a>(
    text: &'a str,
    key: &'static str,
    expected: u32,
) -> Result<&'a str, HeaderError> {
    let mut rest = text;
    loop {
        let (line, tail) = match rest.find('\n') {
            Some(i) => (&rest[..i], &rest[i + 1..]),
            None => (rest, ""),
        };
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            if tail.is_empty() {
                return Err(HeaderError::Missing { key });
            }
            rest = tail;
            continue;
        }
        let Some(value) = trimmed
            .strip_prefix(key)
            .and_then(|s| s.trim_start().strip_prefix(':'))
        else {
            return Err(HeaderError::Missing { key });
        };
        let value = value.trim();
        return match value.parse::<u32>() {
            Ok(v) if v == expected => Ok(tail),
            _ => Err(HeaderError::Version {
                key,
                found: value.to_string(),
                expected,
            }),
        };
    }
}

pub fn with_header(key: &str, version: u32, body: &str) -> String {
    format!("{key}: {version}\n{body}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_header_after_comments() {
        let body = split_header("# hi\n\nkb-version: 1\n[a]\n", "kb-version", 1).unwrap();
        assert_eq!(body, "[a]\n");
    }

    #[test]
    fn rejects_wrong_version() {
        let err = split_header("kb-version: 2\n", "kb-version", 1).unwrap_err();
        assert!(matches!(err, HeaderError::Version { .. }));
    }

    #[test]
    fn rejects_missing_header() {
        assert_eq!(
            split_header("[a]\nx = 1\n", "kb-version", 1),
            Err(HeaderError::Missing { key: "kb-version" })
        );
        assert!(split_header("", "kb-version", 1).is_err());
    }
}

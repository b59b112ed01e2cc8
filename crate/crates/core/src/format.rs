//! The `.alg` interchange format and the named algebra corpus.
//!
//! Format: a header of three lines `n <size>`, `one <idx>`, `zero <idx>`
//! followed by `n` rows of `n` whitespace-separated indices giving the
//! implication table row-major. Lines starting with `#` and blank lines are
//! ignored. The writer emits the canonical form; `parse(write(t)) = t`.

use thiserror::Error;

use crate::algebra::{FiniteAlgebra, RawAlgebra};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("line {line}: duplicate header `{key}`")]
    DuplicateHeader { line: usize, key: String },
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
}

fn syntax(line: usize, col: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        col,
        msg: msg.into(),
    }
}

/// Parses `.alg` text into a raw (unvalidated) algebra.
pub fn parse_alg(text: &str) -> Result<RawAlgebra, ParseError> {
    let mut n: Option<usize> = None;
    let mut one: Option<usize> = None;
    let mut zero: Option<usize> = None;
    let mut rows: Vec<Vec<usize>> = Vec::new();

    for (idx, raw_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw_line.trim_end();
        let trimmed = line.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let header_pending = n.is_none() || one.is_none() || zero.is_none();
        let mut tokens = trimmed.split_whitespace();
        let first = tokens.next().expect("nonempty line has a token");
        if header_pending && matches!(first, "n" | "one" | "zero") {
            let value_tok = tokens.next().ok_or_else(|| {
                syntax(line_no, line.len() + 1, format!("header `{first}` needs a value"))
            })?;
            if let Some(extra) = tokens.next() {
                let col = line.find(extra).unwrap_or(0) + 1;
                return Err(syntax(line_no, col, "trailing tokens after header value"));
            }
            let value: usize = value_tok.parse().map_err(|_| {
                let col = line.find(value_tok).unwrap_or(0) + 1;
                syntax(line_no, col, format!("invalid integer `{value_tok}`"))
            })?;
            let slot = match first {
                "n" => &mut n,
                "one" => &mut one,
                _ => &mut zero,
            };
            if slot.is_some() {
                return Err(ParseError::DuplicateHeader {
                    line: line_no,
                    key: first.to_string(),
                });
            }
            *slot = Some(value);
            continue;
        }
        if header_pending {
            return Err(syntax(
                line_no,
                1,
                "expected headers `n`, `one`, `zero` before the table",
            ));
        }
        let size = n.unwrap();
        if rows.len() == size {
            return Err(ParseError::SizeMismatch(format!(
                "more than {size} table rows (line {line_no})"
            )));
        }
        let mut row = Vec::with_capacity(size);
        for tok in trimmed.split_whitespace() {
            let value: usize = tok.parse().map_err(|_| {
                let col = line.find(tok).unwrap_or(0) + 1;
                syntax(line_no, col, format!("invalid table entry `{tok}`"))
            })?;
            row.push(value);
        }
        if row.len() != size {
            return Err(ParseError::SizeMismatch(format!(
                "row {} has {} entries, expected {size}",
                rows.len(),
                row.len()
            )));
        }
        rows.push(row);
    }

    let size = n.ok_or_else(|| syntax(0, 0, "missing header `n`"))?;
    let one = one.ok_or_else(|| syntax(0, 0, "missing header `one`"))?;
    let zero = zero.ok_or_else(|| syntax(0, 0, "missing header `zero`"))?;
    if rows.len() != size {
        return Err(ParseError::SizeMismatch(format!(
            "found {} table rows, expected {size}",
            rows.len()
        )));
    }
    Ok(RawAlgebra {
        size,
        imp: rows,
        one,
        zero,
    })
}

/// Writes the canonical `.alg` form.
pub fn write_alg(raw: &RawAlgebra) -> String {
    let mut out = String::new();
    out.push_str(&format!("n {}\n", raw.size));
    out.push_str(&format!("one {}\n", raw.one));
    out.push_str(&format!("zero {}\n", raw.zero));
    for row in &raw.imp {
        let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

pub fn write_algebra(alg: &FiniteAlgebra) -> String {
    write_alg(&RawAlgebra {
        size: alg.size(),
        imp: alg.rows(),
        one: alg.one(),
        zero: alg.zero(),
    })
}

/// The named algebras every suite runs over.
pub mod corpus {
    use crate::algebra::{from_oml, FiniteAlgebra, RawOrtholattice};

    /// Two-element Boolean algebra.
    pub fn b2() -> FiniteAlgebra {
        FiniteAlgebra::from_rows(vec![vec![1, 1], vec![0, 1]], 1, 0).expect("B2 is valid")
    }

    /// The Boolean lattice of subsets of a k-set, elements as bitmasks.
    pub fn boolean_lattice(k: u32) -> RawOrtholattice {
        let n = 1usize << k;
        let meet = (0..n).map(|x| (0..n).map(|y| x & y).collect()).collect();
        RawOrtholattice {
            size: n,
            meet,
            complement: (0..n).map(|x| x ^ (n - 1)).collect(),
            zero: 0,
            one: n - 1,
        }
    }

    /// Four-element Boolean algebra, built from the 2^2 lattice.
    pub fn b4() -> FiniteAlgebra {
        from_oml(&boolean_lattice(2)).expect("B4 is valid")
    }

    /// Eight-element Boolean algebra, built from the 2^3 lattice.
    pub fn b8() -> FiniteAlgebra {
        from_oml(&boolean_lattice(3)).expect("B8 is valid")
    }

    /// The hexagon lattice: two incomparable complemented atom pairs.
    /// Elements are 0, a, a', b, b', 1 at indices 0..=5.
    pub fn mo2_lattice() -> RawOrtholattice {
        let n = 6;
        let meet = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| {
                        if x == y {
                            x
                        } else if x == 5 {
                            y
                        } else if y == 5 {
                            x
                        } else {
                            0
                        }
                    })
                    .collect()
            })
            .collect();
        RawOrtholattice {
            size: n,
            meet,
            complement: vec![5, 2, 1, 4, 3, 0],
            zero: 0,
            one: 5,
        }
    }

    /// The six-element orthomodular (non-Boolean) algebra.
    pub fn mo2() -> FiniteAlgebra {
        from_oml(&mo2_lattice()).expect("MO2 is valid")
    }

    /// The benzene-ring ortholattice: two chains 0 < a < b' < 1 and
    /// 0 < b < a' < 1 with complement pairs (a,a') and (b,b').
    /// Elements are 0, a, a', b, b', 1 at indices 0..=5.
    pub fn o6_lattice() -> RawOrtholattice {
        let n = 6;
        // comparable pairs beyond the bounds: a < b' and b < a'
        let below = |x: usize, y: usize| {
            x == y || x == 0 || y == 5 || (x == 1 && y == 4) || (x == 3 && y == 2)
        };
        let meet = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| {
                        if below(x, y) {
                            x
                        } else if below(y, x) {
                            y
                        } else {
                            0
                        }
                    })
                    .collect()
            })
            .collect();
        RawOrtholattice {
            size: n,
            meet,
            complement: vec![5, 2, 1, 4, 3, 0],
            zero: 0,
            one: 5,
        }
    }

    /// The algebra induced by the benzene ring: implicative and involutive
    /// but not orthomodular. Not part of [`all`]; it exists to exercise the
    /// non-orthomodular code paths.
    pub fn o6() -> FiniteAlgebra {
        from_oml(&o6_lattice()).expect("O6 induces a valid algebra")
    }

    /// All shipped algebras with their ids.
    pub fn all() -> Vec<(&'static str, FiniteAlgebra)> {
        vec![("b2", b2()), ("b4", b4()), ("b8", b8()), ("mo2", mo2())]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_canonical_b2() {
        let raw = parse_alg("n 2\none 1\nzero 0\n1 1\n0 1\n").unwrap();
        assert_eq!(raw.size, 2);
        assert_eq!(raw.imp, vec![vec![1, 1], vec![0, 1]]);
    }

    #[test]
    fn comments_and_blank_lines_ignored() {
        let text = "# a comment\n\nn 2\n# another\none 1\nzero 0\n1 1\n0 1\n";
        let raw = parse_alg(text).unwrap();
        assert_eq!(raw, parse_alg(&write_alg(&raw)).unwrap());
    }

    #[test]
    fn missing_row_is_size_mismatch() {
        let err = parse_alg("n 4\none 3\nzero 0\n3 3 3 3\n2 3 2 3\n1 1 3 3\n").unwrap_err();
        assert!(matches!(err, ParseError::SizeMismatch(_)));
    }

    #[test]
    fn duplicate_header_detected() {
        let err = parse_alg("n 2\nn 2\none 1\nzero 0\n1 1\n0 1\n").unwrap_err();
        assert!(matches!(err, ParseError::DuplicateHeader { key, .. } if key == "n"));
    }

    #[test]
    fn bad_entry_reports_position() {
        let err = parse_alg("n 2\none 1\nzero 0\n1 x\n0 1\n").unwrap_err();
        match err {
            ParseError::Syntax { line, col, .. } => {
                assert_eq!(line, 4);
                assert_eq!(col, 3);
            }
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn corpus_round_trips_through_text() {
        for (_, alg) in corpus::all() {
            let text = write_algebra(&alg);
            let raw = parse_alg(&text).unwrap();
            let back = FiniteAlgebra::validate(&raw).unwrap();
            assert_eq!(alg, back);
        }
    }

    #[test]
    fn mo2_table_matches_hand_computation() {
        let alg = corpus::mo2();
        let expected = vec![
            vec![5, 5, 5, 5, 5, 5],
            vec![2, 5, 2, 5, 5, 5],
            vec![1, 1, 5, 5, 5, 5],
            vec![4, 5, 5, 5, 4, 5],
            vec![3, 5, 5, 3, 5, 5],
            vec![0, 1, 2, 3, 4, 5],
        ];
        assert_eq!(alg.rows(), expected);
    }
}

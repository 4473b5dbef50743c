//! Line-oriented text formats.
//!
//! LP files (`#` starts a comment):
//!
//! ```text
//! name <string>            # optional
//! maximize
//! <q> <q> ... <q>          # n utility coefficients
//! subject-to
//! <q> ... <q> <= <q>       # n coefficients, then the right-hand side
//! nonneg true|false        # optional, default true
//! ```
//!
//! where `<q>` is an integer, a fraction `p/q` or a finite decimal.
//! Generator files hold one permutation in cycle notation per line. Matrix
//! files hold one row of rationals per line.

use crate::error::{Error, Result};
use crate::group::Permutation;
use crate::lp::LpProblem;
use crate::numeric::{format_rational, parse_rational, Matrix, Rational, Vector};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    LessEq,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpRow {
    pub coefficients: Vector,
    pub relation: Relation,
    pub rhs: Rational,
}

/// Parsed contents of an LP file before conversion to [`LpProblem`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpFileDocument {
    pub name: Option<String>,
    pub objective: Vector,
    pub rows: Vec<LpRow>,
    pub nonneg: bool,
}

impl LpFileDocument {
    pub fn to_problem(&self) -> Result<LpProblem> {
        let n = self.objective.len();
        let a = Matrix::from_rows(
            n,
            self.rows.iter().map(|r| r.coefficients.clone()).collect(),
        )?;
        let b = self.rows.iter().map(|r| r.rhs.clone()).collect();
        LpProblem::new(a, b, self.objective.clone(), self.nonneg)
    }
}

struct Token<'a> {
    text: &'a str,
    column: usize,
}

/// Content lines as `(line number, tokens)`, comments and blanks removed.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<Token<'_>>)> {
    text.lines().enumerate().filter_map(|(idx, raw)| {
        let line = raw.split('#').next().unwrap_or("");
        let mut tokens = Vec::new();
        let mut start = None;
        for (pos, ch) in line
            .char_indices()
            .chain(std::iter::once((line.len(), ' ')))
        {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(pos),
                (true, Some(s)) => {
                    tokens.push(Token {
                        text: &line[s..pos],
                        column: line[..s].chars().count() + 1,
                    });
                    start = None;
                }
                _ => {}
            }
        }
        (!tokens.is_empty()).then_some((idx + 1, tokens))
    })
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

fn rational_at(line: usize, token: &Token<'_>) -> Result<Rational> {
    parse_rational(token.text).map_err(|e| syntax(line, token.column, e.to_string()))
}

fn is_relation(token: &str) -> bool {
    token.contains(['<', '>', '='])
}

#[derive(PartialEq)]
enum Section {
    Preamble,
    Objective,
    AfterObjective,
    Rows,
}

/// Parses an LP file into its document form.
pub fn parse_lp_document(text: &str) -> Result<LpFileDocument> {
    let mut name = None;
    let mut nonneg = None;
    let mut objective: Option<(usize, Vector)> = None;
    let mut rows = Vec::new();
    let mut section = Section::Preamble;
    let mut last_line = 0;

    for (line, tokens) in content_lines(text) {
        last_line = line;
        let head = &tokens[0];
        match head.text {
            "name" => {
                if name.is_some() {
                    return Err(syntax(line, head.column, "duplicate name"));
                }
                let Some(first) = tokens.get(1) else {
                    return Err(syntax(line, head.column, "name needs a value"));
                };
                let raw = text.lines().nth(line - 1).unwrap_or("");
                let body = raw.split('#').next().unwrap_or("");
                let start = body
                    .char_indices()
                    .nth(first.column - 1)
                    .map_or(0, |(b, _)| b);
                name = Some(body[start..].trim().to_string());
            }
            "nonneg" => {
                if nonneg.is_some() {
                    return Err(syntax(line, head.column, "duplicate nonneg"));
                }
                let value = match tokens.get(1).map(|t| t.text) {
                    Some("true") => true,
                    Some("false") => false,
                    _ => return Err(syntax(line, head.column, "nonneg expects true or false")),
                };
                if let Some(extra) = tokens.get(2) {
                    return Err(syntax(line, extra.column, "unexpected token after nonneg"));
                }
                nonneg = Some(value);
            }
            "maximize" => {
                if section != Section::Preamble {
                    return Err(syntax(line, head.column, "unexpected maximize"));
                }
                if let Some(extra) = tokens.get(1) {
                    return Err(syntax(
                        line,
                        extra.column,
                        "coefficients belong on the next line",
                    ));
                }
                section = Section::Objective;
            }
            "subject-to" => {
                if section != Section::AfterObjective {
                    return Err(syntax(
                        line,
                        head.column,
                        "subject-to must follow the objective",
                    ));
                }
                if let Some(extra) = tokens.get(1) {
                    return Err(syntax(
                        line,
                        extra.column,
                        "rows belong on the following lines",
                    ));
                }
                section = Section::Rows;
            }
            _ => match section {
                Section::Preamble => {
                    return Err(syntax(
                        line,
                        head.column,
                        "expected name, nonneg or maximize",
                    ));
                }
                Section::AfterObjective => {
                    return Err(syntax(line, head.column, "expected subject-to"));
                }
                Section::Objective => {
                    if let Some(rel) = tokens.iter().find(|t| is_relation(t.text)) {
                        return Err(syntax(line, rel.column, "relation in objective line"));
                    }
                    let coeffs = tokens
                        .iter()
                        .map(|t| rational_at(line, t))
                        .collect::<Result<Vector>>()?;
                    objective = Some((line, coeffs));
                    section = Section::AfterObjective;
                }
                Section::Rows => {
                    let n = objective.as_ref().map_or(0, |(_, c)| c.len());
                    rows.push(parse_row(line, &tokens, n)?);
                }
            },
        }
    }

    let Some((objective_line, objective)) = objective else {
        return Err(syntax(last_line.max(1), 1, "missing maximize section"));
    };
    let document = LpFileDocument {
        name,
        objective,
        rows,
        nonneg: nonneg.unwrap_or(true),
    };
    document.to_problem().map_err(|e| match e {
        Error::ZeroUtility => syntax(objective_line, 1, e.to_string()),
        other => other,
    })?;
    Ok(document)
}

fn parse_row(line: usize, tokens: &[Token<'_>], n: usize) -> Result<LpRow> {
    let relations: Vec<usize> = (0..tokens.len())
        .filter(|&i| is_relation(tokens[i].text))
        .collect();
    let Some(&pos) = relations.first() else {
        return Err(syntax(line, tokens[0].column, "row has no relation"));
    };
    let rel = &tokens[pos];
    if rel.text != "<=" {
        return Err(syntax(
            line,
            rel.column,
            format!("unsupported relation {:?}; only <= is accepted", rel.text),
        ));
    }
    if relations.len() > 1 {
        return Err(syntax(
            line,
            tokens[relations[1]].column,
            "more than one relation",
        ));
    }
    if pos + 2 != tokens.len() {
        let column = tokens.get(pos + 2).map_or(rel.column, |t| t.column);
        return Err(syntax(
            line,
            column,
            "expected exactly one right-hand side after <=",
        ));
    }
    if pos != n {
        return Err(syntax(
            line,
            tokens[0].column,
            format!("expected {n} coefficients, found {pos}"),
        ));
    }
    let coefficients = tokens[..pos]
        .iter()
        .map(|t| rational_at(line, t))
        .collect::<Result<Vector>>()?;
    Ok(LpRow {
        coefficients,
        relation: Relation::LessEq,
        rhs: rational_at(line, &tokens[pos + 1])?,
    })
}

pub fn parse_lp_file(text: &str) -> Result<LpProblem> {
    parse_lp_document(text)?.to_problem()
}

fn join(values: &[Rational]) -> String {
    values
        .iter()
        .map(format_rational)
        .collect::<Vec<_>>()
        .join(" ")
}

/// Writes `lp` in the LP file format; `parse_lp_file` reads it back exactly.
pub fn emit_lp_file(lp: &LpProblem, name: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(name) = name {
        out.push_str(&format!("name {name}\n"));
    }
    out.push_str("maximize\n");
    out.push_str(&join(lp.c()));
    out.push_str("\nsubject-to\n");
    for i in 0..lp.m() {
        out.push_str(&format!(
            "{} <= {}\n",
            join(lp.a().row(i)),
            format_rational(&lp.b()[i])
        ));
    }
    out.push_str(&format!("nonneg {}\n", lp.nonneg()));
    out
}

/// One permutation of `{1..n}` per content line.
pub fn parse_generators_file(text: &str, n: usize) -> Result<Vec<Permutation>> {
    text.lines()
        .enumerate()
        .filter_map(|(idx, raw)| {
            let body = raw.split('#').next().unwrap_or("").trim();
            (!body.is_empty()).then_some((idx + 1, body))
        })
        .map(|(line, body)| {
            Permutation::parse_cycles(body, n).map_err(|e| Error::AtLine {
                line,
                source: Box::new(e),
            })
        })
        .collect()
}

/// A dense matrix, one whitespace-separated row per content line.
pub fn parse_matrix_file(text: &str) -> Result<Matrix> {
    let mut rows: Vec<Vector> = Vec::new();
    let mut cols = None;
    let mut last_line = 0;
    for (line, tokens) in content_lines(text) {
        last_line = line;
        let row = tokens
            .iter()
            .map(|t| rational_at(line, t))
            .collect::<Result<Vector>>()?;
        match cols {
            None => cols = Some(row.len()),
            Some(c) if c != row.len() => {
                return Err(syntax(
                    line,
                    1,
                    format!("expected {c} entries, found {}", row.len()),
                ));
            }
            _ => {}
        }
        rows.push(row);
    }
    let Some(cols) = cols else {
        return Err(syntax(last_line.max(1), 1, "empty matrix"));
    };
    Matrix::from_rows(cols, rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{lambda0, two_variable_example};
    use crate::numeric::{int, ratio};

    const LAMBDA0: &str = "\
# four variables, one double swap
name lambda0
maximize
1 1 2 2
subject-to
1 1 0 0 <= 1
0 0 1 1 <= 2
1 0 1 0 <= 3
0 1 0 1 <= 3
";

    #[test]
    fn parses_lambda0() {
        let doc = parse_lp_document(LAMBDA0).unwrap();
        assert_eq!(doc.name.as_deref(), Some("lambda0"));
        assert!(doc.nonneg);
        let lp = doc.to_problem().unwrap();
        assert_eq!((lp.m(), lp.n()), (4, 4));
        assert_eq!(lp, lambda0());
    }

    #[test]
    fn decimals_are_exact() {
        let text = "maximize\n1 1\nsubject-to\n1 0 <= 2.5\n0 1 <= 2.5\n1 1 <= 3.7\n";
        let lp = parse_lp_file(text).unwrap();
        assert_eq!(lp, two_variable_example());
        let text = "maximize\n1 1\nsubject-to\n1 1 <= 2.5\n";
        assert_eq!(parse_lp_file(text).unwrap().b()[0], ratio(5, 2));
    }

    #[test]
    fn equality_relation_is_rejected_with_line() {
        let text = "maximize\n1 1\nsubject-to\n1 0 <= 1\n1 1 = 2\n";
        match parse_lp_file(text) {
            Err(Error::Syntax {
                line,
                column,
                message,
            }) => {
                assert_eq!(line, 5);
                assert_eq!(column, 5);
                assert!(message.contains("\"=\""), "{message}");
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_lp_file("maximize\n1\nsubject-to\n1 >= 2\n"),
            Err(Error::Syntax { line: 4, .. })
        ));
    }

    #[test]
    fn ragged_rows_and_bad_numbers() {
        let err = parse_lp_file("maximize\n1 1\nsubject-to\n1 <= 2\n").unwrap_err();
        assert!(matches!(err, Error::Syntax { line: 4, .. }), "{err}");
        let err = parse_lp_file("maximize\n1 x\n").unwrap_err();
        assert!(
            matches!(
                err,
                Error::Syntax {
                    line: 2,
                    column: 3,
                    ..
                }
            ),
            "{err}"
        );
        let err = parse_lp_file("maximize\n1 1\nsubject-to\n1 1 <= 2 3\n").unwrap_err();
        assert!(
            matches!(
                err,
                Error::Syntax {
                    line: 4,
                    column: 10,
                    ..
                }
            ),
            "{err}"
        );
        let err = parse_lp_file("maximize\n1 1\nsubject-to\n1 1 <=\n").unwrap_err();
        assert!(matches!(err, Error::Syntax { line: 4, .. }), "{err}");
    }

    #[test]
    fn structure_errors() {
        assert!(parse_lp_file("").is_err());
        assert!(parse_lp_file("subject-to\n").is_err());
        assert!(parse_lp_file("maximize\n").is_err());
        assert!(parse_lp_file("maximize\n1\n1 <= 2\n").is_err());
        assert!(parse_lp_file("maximize\n1\nmaximize\n").is_err());
        assert!(parse_lp_file("maximize\n0 0\n").is_err());
        assert!(parse_lp_file("nonneg maybe\nmaximize\n1\n").is_err());
        assert!(parse_lp_file("1 2\nmaximize\n1\n").is_err());
    }

    #[test]
    fn optional_pieces() {
        let lp = parse_lp_file("maximize\n1\n").unwrap();
        assert_eq!(lp.m(), 0);
        let lp = parse_lp_file("nonneg false\nmaximize # objective next\n-1/2 3\n").unwrap();
        assert!(!lp.nonneg());
        assert_eq!(lp.c(), &[ratio(-1, 2), int(3)]);
        let doc = parse_lp_document("name  my  model # trailing\nmaximize\n1\n").unwrap();
        assert_eq!(doc.name.as_deref(), Some("my  model"));
    }

    #[test]
    fn emit_then_parse_is_identity() {
        for lp in [lambda0(), two_variable_example()] {
            let text = emit_lp_file(&lp, Some("x"));
            assert_eq!(parse_lp_file(&text).unwrap(), lp);
        }
    }

    #[test]
    fn generator_files() {
        let gens = parse_generators_file("(1 2)(3 4)\n", 4).unwrap();
        assert_eq!(
            gens,
            vec![Permutation::parse_cycles("(1 2)(3 4)", 4).unwrap()]
        );
        assert!(parse_generators_file("", 4).unwrap().is_empty());
        assert!(parse_generators_file("# only a comment\n\n", 4)
            .unwrap()
            .is_empty());
        assert_eq!(
            parse_generators_file("(1 5)", 4),
            Err(Error::AtLine {
                line: 1,
                source: Box::new(Error::IndexOutOfRange { index: 5, n: 4 })
            })
        );
        let err = parse_generators_file("(1 2)\n\n(3 3)\n", 4).unwrap_err();
        assert!(matches!(err, Error::AtLine { line: 3, .. }));
    }

    #[test]
    fn matrix_files() {
        let m = parse_matrix_file("0 -1\n1 0 # rotation\n").unwrap();
        assert_eq!(m, Matrix::from_i64(&[&[0, -1], &[1, 0]]));
        assert!(parse_matrix_file("1 0\n0\n").is_err());
        assert!(parse_matrix_file("# nothing\n").is_err());
        assert!(parse_matrix_file("1 a\n").is_err());
    }
}

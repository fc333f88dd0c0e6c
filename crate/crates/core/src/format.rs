//! Line-oriented text formats for algebras and central extensions.
//!
//! ```text
//! dialg 1
//! field Q                # or p=<prime>
//! dim 2
//! left 1 1 2 1           # e1 ⊣ e1 = 1·e2, indices 1-based
//! right 1 2 2 -3/4
//! kernel 1               # extension files only
//! cocycle left 1 1 1 1   # f⊣(e1, e1) = 1·a1
//! ```
//!
//! Blank lines and `#` comments are ignored. The writer emits only nonzero entries, sorted
//! by (product, i, j, k), with rationals in lowest terms.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::algebra::{Algebra, Product};
use crate::cohomology::CochainPair;
use crate::error::Error;
use crate::extensions::CentralExtension;
use crate::scalar::{parse_ratio, FieldSpec, Scalar};

pub const FORMAT_VERSION: u32 = 1;

/// The contents of an extension file before cocycle validation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionFile {
    pub base: Algebra,
    pub cocycle: CochainPair,
}

impl ExtensionFile {
    pub fn to_extension(&self) -> Result<CentralExtension, Error> {
        CentralExtension::from_cocycle(&self.base, &self.cocycle)
    }
}

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

struct Lines<'a> {
    items: Vec<(usize, Vec<&'a str>)>,
    pos: usize,
    last_line: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let mut items = Vec::new();
        let mut last_line = 0;
        for (idx, raw) in text.lines().enumerate() {
            last_line = idx + 1;
            let content = raw.split('#').next().unwrap_or("");
            let tokens: Vec<&str> = content.split_whitespace().collect();
            if !tokens.is_empty() {
                items.push((idx + 1, tokens));
            }
        }
        Lines {
            items,
            pos: 0,
            last_line,
        }
    }

    fn peek(&self) -> Option<&(usize, Vec<&'a str>)> {
        self.items.get(self.pos)
    }

    fn next_keyword(&mut self, keyword: &str) -> Result<(usize, Vec<&'a str>), Error> {
        match self.items.get(self.pos) {
            Some((line, tokens)) if tokens[0] == keyword => {
                self.pos += 1;
                Ok((*line, tokens.clone()))
            }
            Some((line, tokens)) => Err(err(
                *line,
                format!("expected `{keyword}`, found `{}`", tokens[0]),
            )),
            None => Err(err(self.last_line + 1, format!("missing `{keyword}` line"))),
        }
    }
}

fn parse_index(line: usize, token: &str, bound: usize, what: &str) -> Result<usize, Error> {
    let v: usize = token
        .parse()
        .map_err(|_| err(line, format!("{what} `{token}` is not a positive integer")))?;
    if v == 0 || v > bound {
        return Err(err(line, format!("{what} {v} out of range 1..={bound}")));
    }
    Ok(v - 1)
}

fn parse_value(line: usize, token: &str, field: FieldSpec) -> Result<Scalar, Error> {
    let (num, den) =
        parse_ratio(token).ok_or_else(|| err(line, format!("bad number `{token}`")))?;
    field
        .from_ratio(&num, &den)
        .map_err(|e| err(line, format!("value `{token}`: {e}")))
}

fn parse_product(line: usize, token: &str) -> Result<Product, Error> {
    match token {
        "left" => Ok(Product::Left),
        "right" => Ok(Product::Right),
        other => Err(err(
            line,
            format!("expected `left` or `right`, found `{other}`"),
        )),
    }
}

fn expect_arity(line: usize, tokens: &[&str], n: usize) -> Result<(), Error> {
    if tokens.len() != n {
        return Err(err(
            line,
            format!(
                "`{}` takes {} arguments, found {}",
                tokens[0],
                n - 1,
                tokens.len() - 1
            ),
        ));
    }
    Ok(())
}

fn parse_header(
    lines: &mut Lines,
    field_override: Option<FieldSpec>,
) -> Result<(FieldSpec, usize), Error> {
    let (line, tokens) = lines.next_keyword("dialg")?;
    expect_arity(line, &tokens, 2)?;
    if tokens[1] != FORMAT_VERSION.to_string() {
        return Err(err(
            line,
            format!("unsupported format version `{}`", tokens[1]),
        ));
    }
    let (line, tokens) = lines.next_keyword("field")?;
    expect_arity(line, &tokens, 2)?;
    let declared: FieldSpec = tokens[1]
        .parse()
        .map_err(|e: Error| err(line, e.to_string()))?;
    let (line, tokens) = lines.next_keyword("dim")?;
    expect_arity(line, &tokens, 2)?;
    let dim: usize = tokens[1]
        .parse()
        .map_err(|_| err(line, format!("bad dimension `{}`", tokens[1])))?;
    Ok((field_override.unwrap_or(declared), dim))
}

fn parse_constants(lines: &mut Lines, field: FieldSpec, dim: usize) -> Result<Algebra, Error> {
    let mut algebra = Algebra::zero(field, dim);
    let mut seen = BTreeSet::new();
    while let Some((line, tokens)) = lines.peek().cloned() {
        if tokens[0] != "left" && tokens[0] != "right" {
            break;
        }
        lines.pos += 1;
        expect_arity(line, &tokens, 5)?;
        let p = parse_product(line, tokens[0])?;
        let i = parse_index(line, tokens[1], dim, "index")?;
        let j = parse_index(line, tokens[2], dim, "index")?;
        let k = parse_index(line, tokens[3], dim, "index")?;
        if !seen.insert((p, i, j, k)) {
            return Err(err(
                line,
                format!(
                    "duplicate entry {} {} {} {}",
                    tokens[0],
                    i + 1,
                    j + 1,
                    k + 1
                ),
            ));
        }
        algebra.set_constant(p, i, j, k, parse_value(line, tokens[4], field)?);
    }
    Ok(algebra)
}

fn expect_end(lines: &Lines) -> Result<(), Error> {
    match lines.peek() {
        None => Ok(()),
        Some((line, tokens)) => Err(err(*line, format!("unexpected `{}`", tokens[0]))),
    }
}

/// Parses an algebra file. With `field_override`, the literals are interpreted in that
/// field instead of the declared one. Axioms are not checked here.
pub fn parse_algebra_in(text: &str, field_override: Option<FieldSpec>) -> Result<Algebra, Error> {
    let mut lines = Lines::new(text);
    let (field, dim) = parse_header(&mut lines, field_override)?;
    let algebra = parse_constants(&mut lines, field, dim)?;
    expect_end(&lines)?;
    Ok(algebra)
}

pub fn parse_algebra(text: &str) -> Result<Algebra, Error> {
    parse_algebra_in(text, None)
}

pub fn parse_extension_in(
    text: &str,
    field_override: Option<FieldSpec>,
) -> Result<ExtensionFile, Error> {
    let mut lines = Lines::new(text);
    let (field, dim) = parse_header(&mut lines, field_override)?;
    let base = parse_constants(&mut lines, field, dim)?;
    let (line, tokens) = lines.next_keyword("kernel")?;
    expect_arity(line, &tokens, 2)?;
    let k: usize = tokens[1]
        .parse()
        .map_err(|_| err(line, format!("bad kernel dimension `{}`", tokens[1])))?;
    let mut cocycle = CochainPair::zero(field, dim, k);
    let mut seen = BTreeSet::new();
    while let Some((line, tokens)) = lines.peek().cloned() {
        if tokens[0] != "cocycle" {
            break;
        }
        lines.pos += 1;
        expect_arity(line, &tokens, 6)?;
        let p = parse_product(line, tokens[1])?;
        let i = parse_index(line, tokens[2], dim, "index")?;
        let j = parse_index(line, tokens[3], dim, "index")?;
        let c = parse_index(line, tokens[4], k, "kernel index")?;
        if !seen.insert((p, i, j, c)) {
            return Err(err(line, "duplicate cocycle entry"));
        }
        cocycle.set(p, i, j, c, parse_value(line, tokens[5], field)?);
    }
    expect_end(&lines)?;
    Ok(ExtensionFile { base, cocycle })
}

pub fn parse_extension(text: &str) -> Result<ExtensionFile, Error> {
    parse_extension_in(text, None)
}

fn write_header(out: &mut String, a: &Algebra) {
    writeln!(out, "dialg {FORMAT_VERSION}").unwrap();
    writeln!(out, "field {}", a.field()).unwrap();
    writeln!(out, "dim {}", a.dim()).unwrap();
    for (p, i, j, k, v) in a.nonzero_constants() {
        writeln!(out, "{} {} {} {} {}", p.keyword(), i + 1, j + 1, k + 1, v).unwrap();
    }
}

pub fn write_algebra(a: &Algebra) -> String {
    let mut out = String::new();
    write_header(&mut out, a);
    out
}

pub fn write_cochain_extension(base: &Algebra, cocycle: &CochainPair) -> String {
    let mut out = String::new();
    write_header(&mut out, base);
    writeln!(out, "kernel {}", cocycle.coeff_dim()).unwrap();
    for (p, i, j, c, v) in cocycle.nonzero_entries() {
        writeln!(
            out,
            "cocycle {} {} {} {} {}",
            p.keyword(),
            i + 1,
            j + 1,
            c + 1,
            v
        )
        .unwrap();
    }
    out
}

pub fn write_extension(e: &CentralExtension) -> String {
    write_cochain_extension(e.base(), e.cocycle())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::gen_matrix_double;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn minimal_file_is_d1() {
        assert_eq!(
            parse_algebra("dialg 1\nfield Q\ndim 1\n").unwrap(),
            Algebra::zero(Q, 1)
        );
    }

    #[test]
    fn k1_file() {
        let text = "dialg 1\nfield Q\ndim 1\nleft 1 1 1 1\nright 1 1 1 1\n";
        let k1 = gen_matrix_double(Q, 1).unwrap();
        assert_eq!(parse_algebra(text).unwrap(), k1);
        assert_eq!(write_algebra(&k1), text);
    }

    #[test]
    fn rejects_malformed_input() {
        let dup = "dialg 1\nfield Q\ndim 1\nleft 1 1 1 1\nleft 1 1 1 2\n";
        assert!(matches!(
            parse_algebra(dup),
            Err(Error::Parse { line: 5, .. })
        ));
        let range = "dialg 1\nfield Q\ndim 2\nright 1 3 1 1\n";
        assert!(matches!(
            parse_algebra(range),
            Err(Error::Parse { line: 4, .. })
        ));
        let modulus = "dialg 1\nfield p=6\ndim 1\n";
        assert!(matches!(
            parse_algebra(modulus),
            Err(Error::Parse { line: 2, .. })
        ));
        let missing = "dialg 1\nfield Q\n";
        assert!(matches!(
            parse_algebra(missing),
            Err(Error::Parse { line: 3, .. })
        ));
        let junk = "dialg 1\nfield Q\ndim 1\nmiddle 1 1 1 1\n";
        assert!(matches!(
            parse_algebra(junk),
            Err(Error::Parse { line: 4, .. })
        ));
        let zero_den = "dialg 1\nfield Q\ndim 1\nleft 1 1 1 1/0\n";
        assert!(parse_algebra(zero_den).is_err());
    }

    #[test]
    fn comments_and_fractions() {
        let text = "# header\ndialg 1\nfield Q\n\ndim 2 # two\nright 2 1 1 -6/8\n";
        let a = parse_algebra(text).unwrap();
        assert_eq!(
            a.constant(Product::Right, 1, 0, 0),
            &Q.from_ratio(&(-3).into(), &4.into()).unwrap()
        );
        assert_eq!(
            write_algebra(&a),
            "dialg 1\nfield Q\ndim 2\nright 2 1 1 -3/4\n"
        );
    }

    #[test]
    fn field_override_reinterprets_literals() {
        let text = "dialg 1\nfield Q\ndim 1\nleft 1 1 1 7\n";
        let f5 = FieldSpec::prime(5).unwrap();
        let a = parse_algebra_in(text, Some(f5)).unwrap();
        assert_eq!(a.constant(Product::Left, 0, 0, 0), &f5.from_i64(2));
        let halves = "dialg 1\nfield Q\ndim 1\nleft 1 1 1 1/2\n";
        assert!(parse_algebra_in(halves, Some(FieldSpec::prime(2).unwrap())).is_err());
    }

    #[test]
    fn extension_round_trip() {
        let k1 = gen_matrix_double(Q, 1).unwrap();
        let mut f = CochainPair::zero(Q, 1, 2);
        f.set(Product::Left, 0, 0, 1, Q.from_i64(4));
        f.set(Product::Right, 0, 0, 1, Q.from_i64(4));
        let e = CentralExtension::from_cocycle(&k1, &f).unwrap();
        let text = write_extension(&e);
        assert!(text.ends_with("kernel 2\ncocycle left 1 1 2 4\ncocycle right 1 1 2 4\n"));
        assert_eq!(parse_extension(&text).unwrap().to_extension().unwrap(), e);
        let bad = text.replace("cocycle right 1 1 2 4\n", "");
        assert_eq!(
            parse_extension(&bad).unwrap().to_extension(),
            Err(Error::NotACocycle)
        );
        let out_of_range = text.replace("cocycle left 1 1 2", "cocycle left 1 1 3");
        assert!(parse_extension(&out_of_range).is_err());
    }
}

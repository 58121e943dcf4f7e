//! Reader for the algebra file format.
//!
//! ```text
//! algebra osp12_lambda
//! param lambda
//! basis H : even
//! basis F : odd
//! bracket H F = -1/lambda * F
//! alpha F = 1/lambda * F
//! ```
//!
//! Right-hand sides are linear expressions: sums, differences, products and
//! quotients of scalar literals, the declared parameter and basis names,
//! with at most one basis name per product. Anything [`crate::export`]
//! writes reads back to the same table.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use homsuper::graded::check_even_structure;
use homsuper::{
    AlgebraKind, Element, EvenMap, HomSuperAlgebra, Parity, Rational, Scalar, SuperAlgebra,
    SuperBasis,
};

use crate::error::{CliError, Pos};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Sym(char),
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    pos: Pos,
}

fn lex_line(text: &str, line: usize) -> Result<Vec<Token>, CliError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = Pos { line, col: i + 1 };
        if c == '#' {
            break;
        }
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token {
                tok: Tok::Ident(chars[start..i].iter().collect()),
                pos,
            });
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push(Token {
                tok: Tok::Int(digits.parse().expect("ascii digits")),
                pos,
            });
        } else if "+-*/^()=:".contains(c) {
            out.push(Token {
                tok: Tok::Sym(c),
                pos,
            });
            i += 1;
        } else {
            return Err(CliError::syntax(pos, format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

/// Names an expression may refer to.
pub struct Scope<'a> {
    pub basis: &'a SuperBasis,
    pub param: Option<&'a str>,
}

/// Intermediate value of a linear expression.
#[derive(Debug, Clone)]
enum Value {
    Scalar(Scalar),
    Vector(Element),
}

struct Cursor<'a> {
    toks: &'a [Token],
    i: usize,
    end: Pos,
}

impl<'a> Cursor<'a> {
    fn new(toks: &'a [Token], end: Pos) -> Self {
        Self { toks, i: 0, end }
    }

    fn peek(&self) -> Option<&'a Token> {
        self.toks.get(self.i)
    }

    fn pos(&self) -> Pos {
        self.peek().map_or(self.end, |t| t.pos)
    }

    fn next(&mut self) -> Option<&'a Token> {
        let t = self.toks.get(self.i);
        self.i += 1;
        t
    }

    fn eat(&mut self, c: char) -> bool {
        if matches!(self.peek(), Some(Token { tok: Tok::Sym(s), .. }) if *s == c) {
            self.i += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), CliError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(CliError::syntax(self.pos(), format!("expected `{c}`")))
        }
    }

    fn ident(&mut self, what: &str) -> Result<(String, Pos), CliError> {
        let pos = self.pos();
        match self.next() {
            Some(Token {
                tok: Tok::Ident(s), ..
            }) => Ok((s.clone(), pos)),
            _ => Err(CliError::syntax(pos, format!("expected {what}"))),
        }
    }

    fn done(&self) -> Result<(), CliError> {
        match self.peek() {
            None => Ok(()),
            Some(t) => Err(CliError::syntax(t.pos, "unexpected trailing input")),
        }
    }
}

fn add_values(a: Value, b: Value, negate: bool, pos: Pos) -> Result<Value, CliError> {
    let sign = Scalar::from_int(if negate { -1 } else { 1 });
    match (a, b) {
        (Value::Scalar(x), Value::Scalar(y)) => Ok(Value::Scalar(&x + &(&sign * &y))),
        (Value::Vector(x), Value::Vector(y)) => Ok(Value::Vector(x.add(&y.scale(&sign)))),
        // a literal zero is the empty combination
        (Value::Scalar(z), Value::Vector(y)) if z.is_zero() => Ok(Value::Vector(y.scale(&sign))),
        (Value::Vector(x), Value::Scalar(z)) if z.is_zero() => Ok(Value::Vector(x)),
        _ => Err(CliError::syntax(
            pos,
            "cannot add a scalar to a basis combination",
        )),
    }
}

fn mul_values(a: Value, b: Value, pos: Pos) -> Result<Value, CliError> {
    match (a, b) {
        (Value::Scalar(x), Value::Scalar(y)) => Ok(Value::Scalar(&x * &y)),
        (Value::Scalar(c), Value::Vector(v)) | (Value::Vector(v), Value::Scalar(c)) => {
            Ok(Value::Vector(v.scale(&c)))
        }
        (Value::Vector(_), Value::Vector(_)) => {
            Err(CliError::syntax(pos, "product of two basis vectors"))
        }
    }
}

fn div_values(a: Value, b: Value, pos: Pos) -> Result<Value, CliError> {
    let Value::Scalar(d) = b else {
        return Err(CliError::syntax(pos, "cannot divide by a basis vector"));
    };
    let inv = d
        .inverse()
        .map_err(|_| CliError::syntax(pos, "division by zero"))?;
    mul_values(a, Value::Scalar(inv), pos)
}

fn expr(cur: &mut Cursor, scope: &Scope) -> Result<Value, CliError> {
    let pos = cur.pos();
    let negate_first = if cur.eat('-') {
        true
    } else {
        cur.eat('+');
        false
    };
    let first = term(cur, scope)?;
    let mut acc = add_values(Value::Scalar(Scalar::zero()), first, negate_first, pos)?;
    loop {
        let pos = cur.pos();
        let negate = if cur.eat('+') {
            false
        } else if cur.eat('-') {
            true
        } else {
            return Ok(acc);
        };
        let rhs = term(cur, scope)?;
        acc = add_values(acc, rhs, negate, pos)?;
    }
}

fn term(cur: &mut Cursor, scope: &Scope) -> Result<Value, CliError> {
    let mut acc = factor(cur, scope)?;
    loop {
        let pos = cur.pos();
        if cur.eat('*') {
            let rhs = factor(cur, scope)?;
            acc = mul_values(acc, rhs, pos)?;
        } else if cur.eat('/') {
            let rhs = factor(cur, scope)?;
            acc = div_values(acc, rhs, pos)?;
        } else {
            return Ok(acc);
        }
    }
}

fn factor(cur: &mut Cursor, scope: &Scope) -> Result<Value, CliError> {
    let base = atom(cur, scope)?;
    let pos = cur.pos();
    if !cur.eat('^') {
        return Ok(base);
    }
    let negative = cur.eat('-');
    let exp_pos = cur.pos();
    let k: i64 = match cur.next() {
        Some(Token {
            tok: Tok::Int(n), ..
        }) => n
            .try_into()
            .map_err(|_| CliError::syntax(exp_pos, "exponent too large"))?,
        _ => return Err(CliError::syntax(exp_pos, "expected an integer exponent")),
    };
    let k = if negative { -k } else { k };
    match base {
        Value::Scalar(s) => s
            .pow(k)
            .map(Value::Scalar)
            .map_err(|_| CliError::syntax(pos, "zero raised to a negative power")),
        Value::Vector(_) => Err(CliError::syntax(
            pos,
            "cannot raise a basis vector to a power",
        )),
    }
}

fn atom(cur: &mut Cursor, scope: &Scope) -> Result<Value, CliError> {
    let pos = cur.pos();
    match cur.next() {
        Some(Token {
            tok: Tok::Int(n), ..
        }) => Ok(Value::Scalar(Scalar::from_rational(
            Rational::from_integer(n.clone()),
        ))),
        Some(Token {
            tok: Tok::Ident(name),
            ..
        }) => {
            if scope.param == Some(name.as_str()) {
                Ok(Value::Scalar(Scalar::param()))
            } else if let Some(i) = scope.basis.index_of(name) {
                Ok(Value::Vector(Element::basis(i)))
            } else {
                Err(CliError::Undeclared {
                    name: name.clone(),
                    pos,
                })
            }
        }
        Some(Token {
            tok: Tok::Sym('('), ..
        }) => {
            let v = expr(cur, scope)?;
            cur.expect(')')?;
            Ok(v)
        }
        _ => Err(CliError::syntax(pos, "expected a number, name or `(`")),
    }
}

fn combination(cur: &mut Cursor, scope: &Scope) -> Result<Element, CliError> {
    let pos = cur.pos();
    let v = expr(cur, scope)?;
    cur.done()?;
    match v {
        Value::Vector(e) => Ok(e),
        Value::Scalar(s) if s.is_zero() => Ok(Element::zero()),
        Value::Scalar(_) => Err(CliError::syntax(
            pos,
            "expected a combination of basis vectors",
        )),
    }
}

/// Parse a scalar literal such as `(1+lambda)/lambda^2` or `-3/4`.
pub fn parse_scalar(text: &str, param: Option<&str>) -> Result<Scalar, CliError> {
    let toks = lex_line(text, 1)?;
    let end = Pos {
        line: 1,
        col: text.chars().count() + 1,
    };
    let basis = SuperBasis::new(Vec::<(String, Parity)>::new()).expect("empty basis");
    let scope = Scope {
        basis: &basis,
        param,
    };
    let mut cur = Cursor::new(&toks, end);
    let v = expr(&mut cur, &scope)?;
    cur.done()?;
    match v {
        Value::Scalar(s) => Ok(s),
        Value::Vector(_) => unreachable!("no basis names in scope"),
    }
}

/// Parse a right-hand side over the given basis.
pub fn parse_combination(text: &str, scope: &Scope) -> Result<Element, CliError> {
    let toks = lex_line(text, 1)?;
    let end = Pos {
        line: 1,
        col: text.chars().count() + 1,
    };
    combination(&mut Cursor::new(&toks, end), scope)
}

struct Line {
    toks: Vec<Token>,
    end: Pos,
}

impl Line {
    fn keyword(&self) -> &str {
        match &self.toks[0].tok {
            Tok::Ident(s) => s,
            _ => "",
        }
    }

    fn cursor(&self) -> Cursor<'_> {
        let mut c = Cursor::new(&self.toks, self.end);
        c.i = 1;
        c
    }

    fn pos(&self) -> Pos {
        self.toks[0].pos
    }
}

fn lines(text: &str) -> Result<Vec<Line>, CliError> {
    let mut out = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let toks = lex_line(raw, n + 1)?;
        if toks.is_empty() {
            continue;
        }
        let end = Pos {
            line: n + 1,
            col: raw.chars().count() + 1,
        };
        out.push(Line { toks, end });
    }
    Ok(out)
}

fn parse_param(line: &Line, current: &mut Option<String>) -> Result<(), CliError> {
    let mut cur = line.cursor();
    let (name, _) = cur.ident("a parameter name")?;
    cur.done()?;
    if current.is_some() {
        return Err(CliError::TwoParameters { pos: line.pos() });
    }
    *current = Some(name);
    Ok(())
}

/// Read `alpha NAME = combo` lines into a square map, identity where absent.
fn collect_map(
    lines: &[&Line],
    keyword: &str,
    domain: &SuperBasis,
    scope: &Scope,
) -> Result<BTreeMap<usize, Element>, CliError> {
    let mut images = BTreeMap::new();
    for line in lines {
        let mut cur = line.cursor();
        let (name, pos) = cur.ident("a basis name")?;
        let i = domain.index_of(&name).ok_or_else(|| CliError::Undeclared {
            name: name.clone(),
            pos,
        })?;
        cur.expect('=')?;
        let image = combination(&mut cur, scope)?;
        if images.insert(i, image).is_some() {
            return Err(CliError::Duplicate {
                what: format!("{keyword} line for {name}"),
                pos: line.pos(),
            });
        }
    }
    Ok(images)
}

fn map_from_images(
    images: &BTreeMap<usize, Element>,
    domain: &SuperBasis,
    codomain: &SuperBasis,
    default_identity: bool,
) -> Result<EvenMap, CliError> {
    let list: Vec<Element> = (0..domain.dim())
        .map(|i| match images.get(&i) {
            Some(e) => e.clone(),
            None if default_identity => Element::basis(i),
            None => Element::zero(),
        })
        .collect();
    EvenMap::from_images(domain, codomain, &list).map_err(CliError::Core)
}

/// Parse a complete algebra file.
pub fn parse_algebra_file(text: &str) -> Result<HomSuperAlgebra, CliError> {
    let lines = lines(text)?;
    let Some((header, rest)) = lines.split_first() else {
        return Err(CliError::syntax(
            Pos { line: 1, col: 1 },
            "empty file, expected `algebra NAME`",
        ));
    };
    if header.keyword() != "algebra" {
        return Err(CliError::syntax(
            header.pos(),
            "file must start with `algebra NAME`",
        ));
    }
    let mut cur = header.cursor();
    let (name, _) = cur.ident("an algebra name")?;
    cur.done()?;

    let mut param = None;
    let mut decls: Vec<(String, Parity)> = Vec::new();
    let mut entries = Vec::new();
    let mut alphas = Vec::new();
    let mut kind: Option<(AlgebraKind, Pos)> = None;
    for line in rest {
        match line.keyword() {
            "param" => parse_param(line, &mut param)?,
            "basis" => {
                let mut cur = line.cursor();
                let (b, pos) = cur.ident("a basis name")?;
                cur.expect(':')?;
                let (p, ppos) = cur.ident("`even` or `odd`")?;
                cur.done()?;
                let parity = match p.as_str() {
                    "even" => Parity::EVEN,
                    "odd" => Parity::ODD,
                    _ => return Err(CliError::syntax(ppos, "expected `even` or `odd`")),
                };
                if decls.iter().any(|(n, _)| *n == b) {
                    return Err(CliError::Duplicate {
                        what: format!("basis name {b}"),
                        pos,
                    });
                }
                decls.push((b, parity));
            }
            k @ ("mul" | "bracket" | "kind") => {
                let word = if k == "kind" {
                    let mut cur = line.cursor();
                    let (w, wpos) = cur.ident("`mul` or `bracket`")?;
                    cur.done()?;
                    if w != "mul" && w != "bracket" {
                        return Err(CliError::syntax(wpos, "expected `mul` or `bracket`"));
                    }
                    w
                } else {
                    k.to_owned()
                };
                let this = if word == "mul" {
                    AlgebraKind::Product
                } else {
                    AlgebraKind::Bracket
                };
                match kind {
                    Some((other, first)) if other != this => {
                        return Err(CliError::MixedVocabulary {
                            pos: line.pos(),
                            first: first.line,
                        })
                    }
                    None => kind = Some((this, line.pos())),
                    _ => {}
                }
                if k != "kind" {
                    entries.push(line);
                }
            }
            "alpha" => alphas.push(line),
            "algebra" => return Err(CliError::syntax(line.pos(), "only one algebra per file")),
            other => {
                return Err(CliError::syntax(
                    line.pos(),
                    format!("unknown directive `{other}`"),
                ));
            }
        }
    }

    if let Some(p) = &param {
        if let Some(pos) = rest
            .iter()
            .filter(|l| l.keyword() == "basis")
            .find(|l| matches!(&l.toks.get(1), Some(Token { tok: Tok::Ident(n), .. }) if n == p))
            .map(|l| l.toks[1].pos)
        {
            return Err(CliError::syntax(
                pos,
                format!("`{p}` is already the parameter name"),
            ));
        }
    }

    let basis = SuperBasis::new(decls).map_err(CliError::Core)?;
    let scope = Scope {
        basis: &basis,
        param: param.as_deref(),
    };
    let kind = kind.map_or(AlgebraKind::Bracket, |(k, _)| k);
    let mut algebra = SuperAlgebra::new(name, basis.clone(), kind);
    algebra.parameter = param.clone();
    let mut seen = BTreeMap::new();
    for line in entries {
        let mut cur = line.cursor();
        let (a, apos) = cur.ident("a basis name")?;
        let (b, bpos) = cur.ident("a basis name")?;
        let i = basis.index_of(&a).ok_or(CliError::Undeclared {
            name: a.clone(),
            pos: apos,
        })?;
        let j = basis.index_of(&b).ok_or(CliError::Undeclared {
            name: b.clone(),
            pos: bpos,
        })?;
        cur.expect('=')?;
        let value = combination(&mut cur, &scope)?;
        if seen.insert((i, j), ()).is_some() {
            return Err(CliError::Duplicate {
                what: format!("entry for {a} {b}"),
                pos: line.pos(),
            });
        }
        algebra.set_entry(i, j, value).map_err(CliError::Core)?;
    }
    let even = check_even_structure(&algebra);
    if !even.passed() {
        return Err(CliError::Evenness(Box::new(even)));
    }
    let images = collect_map(&alphas, "alpha", &basis, &scope)?;
    let alpha = map_from_images(&images, &basis, &basis, true)?;
    HomSuperAlgebra::new(algebra, alpha).map_err(CliError::Core)
}

/// Contents of a twisting-map file.
#[derive(Debug, Clone)]
pub struct AlphaFile {
    pub map: EvenMap,
    /// Parameter declared in the file, if any.
    pub param: Option<String>,
}

/// Parse a file of `alpha` lines for the given algebra; missing lines
/// default to the identity.
pub fn parse_alpha_file(text: &str, target: &SuperAlgebra) -> Result<AlphaFile, CliError> {
    let lines = lines(text)?;
    let mut param = None;
    let mut alphas = Vec::new();
    for line in &lines {
        match line.keyword() {
            "param" => parse_param(line, &mut param)?,
            "alpha" => alphas.push(line),
            other => {
                return Err(CliError::syntax(
                    line.pos(),
                    format!("unexpected `{other}` in a map file"),
                ));
            }
        }
    }
    check_param_agrees(param.as_deref(), target.parameter.as_deref(), &lines)?;
    let declared = param.clone();
    let param = param.or_else(|| target.parameter.clone());
    let scope = Scope {
        basis: &target.basis,
        param: param.as_deref(),
    };
    let images = collect_map(&alphas, "alpha", &target.basis, &scope)?;
    Ok(AlphaFile {
        map: map_from_images(&images, &target.basis, &target.basis, true)?,
        param: declared,
    })
}

/// Parse `map NAME = combo` lines describing a map from `domain` to
/// `codomain`; missing lines send the basis vector to zero.
pub fn parse_map_file(
    text: &str,
    domain: &SuperAlgebra,
    codomain: &SuperAlgebra,
) -> Result<EvenMap, CliError> {
    let lines = lines(text)?;
    let mut param = None;
    let mut maps = Vec::new();
    for line in &lines {
        match line.keyword() {
            "param" => parse_param(line, &mut param)?,
            "map" => maps.push(line),
            other => {
                return Err(CliError::syntax(
                    line.pos(),
                    format!("unexpected `{other}` in a map file"),
                ));
            }
        }
    }
    let param = param
        .or_else(|| codomain.parameter.clone())
        .or_else(|| domain.parameter.clone());
    let scope = Scope {
        basis: &codomain.basis,
        param: param.as_deref(),
    };
    let images = collect_map(&maps, "map", &domain.basis, &scope)?;
    map_from_images(&images, &domain.basis, &codomain.basis, false)
}

fn check_param_agrees(
    found: Option<&str>,
    expected: Option<&str>,
    lines: &[Line],
) -> Result<(), CliError> {
    if let (Some(f), Some(e)) = (found, expected) {
        if f != e {
            let pos = lines
                .iter()
                .find(|l| l.keyword() == "param")
                .map_or(Pos { line: 1, col: 1 }, Line::pos);
            return Err(CliError::syntax(
                pos,
                format!("parameter `{f}` does not match the algebra's parameter `{e}`"),
            ));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_literals() {
        let lam = Scalar::param();
        assert_eq!(
            parse_scalar("(1+lambda)", Some("lambda")).unwrap(),
            &Scalar::one() + &lam
        );
        assert_eq!(
            parse_scalar("-3/4", None).unwrap(),
            Scalar::from_rational(homsuper::rational(-3, 4))
        );
        assert_eq!(
            parse_scalar("q^-2", Some("q")).unwrap(),
            Scalar::param_pow(-2)
        );
        assert_eq!(
            parse_scalar("4*(lambda-1)/lambda^4", Some("lambda"))
                .unwrap()
                .render("lambda"),
            "4*(lambda-1)/lambda^4"
        );
        assert!(parse_scalar("1/0", None).is_err());
        assert!(parse_scalar("1/(q-q)", Some("q")).is_err());
    }

    #[test]
    fn undeclared_parameter_is_reported() {
        match parse_scalar("2*mu", Some("lambda")) {
            Err(CliError::Undeclared { name, pos }) => {
                assert_eq!(name, "mu");
                assert_eq!(pos, Pos { line: 1, col: 3 });
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn combination_grammar() {
        let basis = SuperBasis::new([("X", Parity::EVEN), ("Y", Parity::EVEN)]).unwrap();
        let scope = Scope {
            basis: &basis,
            param: Some("q"),
        };
        let e = parse_combination("2*X - (q+1) * Y", &scope).unwrap();
        assert_eq!(e.coeff(0), Scalar::from_int(2));
        assert_eq!(e.coeff(1), -(&Scalar::param() + &Scalar::one()));
        assert!(parse_combination("0", &scope).unwrap().is_zero());
        assert!(parse_combination("X*Y", &scope).is_err());
        assert!(parse_combination("X + 1", &scope).is_err());
        assert!(parse_combination("2", &scope).is_err());
        assert!(parse_combination("X/Y", &scope).is_err());
        assert!(parse_combination("X^2", &scope).is_err());
        assert_eq!(
            parse_combination("X/2 + X/2", &scope).unwrap(),
            Element::basis(0)
        );
    }

    #[test]
    fn syntax_error_positions() {
        let text = "algebra a\nbasis e : even\nmul e e = 2 ** e\n";
        match parse_algebra_file(text) {
            Err(CliError::Syntax { pos, .. }) => assert_eq!(pos, Pos { line: 3, col: 14 }),
            other => panic!("unexpected {other:?}"),
        }
        match parse_algebra_file("algebra a\nbasis e : even\nmul e e = 2 $ e\n") {
            Err(CliError::Syntax { pos, .. }) => assert_eq!(pos, Pos { line: 3, col: 13 }),
            other => panic!("unexpected {other:?}"),
        }
    }
}

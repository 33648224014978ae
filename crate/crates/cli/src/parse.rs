//! Strict parser for the diagram file grammar.
//!
//! The grammar is a line-friendly JSON subset: objects with string keys,
//! arrays, double-quoted strings and 64-bit integers. No floats, booleans,
//! nulls or comments. Parsing is strict — unknown keys, duplicate keys,
//! trailing input and shape mismatches are all errors — and every error
//! carries a line and column.

use std::fmt;

use abchase::diagram::{Mode, NineDirection};

use crate::model::{
    Assertion, CategoryTag, DiagramFile, GridRefs, LadderRefs, MorphismSpec, ObjectSpec,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.col, self.message)
    }
}

impl std::error::Error for ParseError {}

type PResult<T> = Result<T, ParseError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Pos {
    line: usize,
    col: usize,
}

impl Pos {
    fn err(self, message: impl Into<String>) -> ParseError {
        ParseError {
            line: self.line,
            col: self.col,
            message: message.into(),
        }
    }
}

#[derive(Clone, Debug)]
enum Value {
    Int(Pos, i64),
    Str(Pos, String),
    Array(Pos, Vec<Value>),
    Object(Pos, Vec<(Pos, String, Value)>),
}

impl Value {
    fn pos(&self) -> Pos {
        match self {
            Value::Int(p, _) | Value::Str(p, _) | Value::Array(p, _) | Value::Object(p, _) => *p,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            Value::Int(..) => "integer",
            Value::Str(..) => "string",
            Value::Array(..) => "array",
            Value::Object(..) => "object",
        }
    }
}

struct Lexer<'a> {
    input: &'a [u8],
    at: usize,
    line: usize,
    col: usize,
}

impl<'a> Lexer<'a> {
    fn new(input: &'a str) -> Self {
        Lexer {
            input: input.as_bytes(),
            at: 0,
            line: 1,
            col: 1,
        }
    }

    fn pos(&self) -> Pos {
        Pos {
            line: self.line,
            col: self.col,
        }
    }

    fn peek(&self) -> Option<u8> {
        self.input.get(self.at).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.at += 1;
        if b == b'\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(b)
    }

    fn skip_whitespace(&mut self) {
        while matches!(self.peek(), Some(b' ' | b'\t' | b'\r' | b'\n')) {
            self.bump();
        }
    }

    fn expect(&mut self, byte: u8) -> PResult<()> {
        self.skip_whitespace();
        let pos = self.pos();
        match self.bump() {
            Some(b) if b == byte => Ok(()),
            Some(b) => Err(pos.err(format!(
                "expected '{}', found '{}'",
                byte as char, b as char
            ))),
            None => Err(pos.err(format!("expected '{}', found end of input", byte as char))),
        }
    }

    fn parse_string(&mut self) -> PResult<(Pos, String)> {
        self.skip_whitespace();
        let pos = self.pos();
        match self.bump() {
            Some(b'"') => {}
            Some(b) => return Err(pos.err(format!("expected string, found '{}'", b as char))),
            None => return Err(pos.err("expected string, found end of input")),
        }
        let mut out = String::new();
        loop {
            let cpos = self.pos();
            match self.bump() {
                Some(b'"') => return Ok((pos, out)),
                Some(b'\\') => match self.bump() {
                    Some(b'"') => out.push('"'),
                    Some(b'\\') => out.push('\\'),
                    Some(b'n') => out.push('\n'),
                    Some(b't') => out.push('\t'),
                    Some(other) => {
                        return Err(cpos.err(format!("unsupported escape '\\{}'", other as char)))
                    }
                    None => return Err(cpos.err("unterminated escape")),
                },
                Some(b'\n') | None => return Err(cpos.err("unterminated string")),
                Some(b) => out.push(b as char),
            }
        }
    }

    fn parse_value(&mut self) -> PResult<Value> {
        self.skip_whitespace();
        let pos = self.pos();
        match self.peek() {
            Some(b'{') => {
                self.bump();
                let mut entries: Vec<(Pos, String, Value)> = Vec::new();
                self.skip_whitespace();
                if self.peek() == Some(b'}') {
                    self.bump();
                    return Ok(Value::Object(pos, entries));
                }
                loop {
                    let (kpos, key) = self.parse_string()?;
                    if entries.iter().any(|(_, k, _)| *k == key) {
                        return Err(kpos.err(format!("duplicate key \"{key}\"")));
                    }
                    self.expect(b':')?;
                    let value = self.parse_value()?;
                    entries.push((kpos, key, value));
                    self.skip_whitespace();
                    match self.peek() {
                        Some(b',') => {
                            self.bump();
                        }
                        Some(b'}') => {
                            self.bump();
                            return Ok(Value::Object(pos, entries));
                        }
                        _ => {
                            let p = self.pos();
                            return Err(p.err("expected ',' or '}' in object"));
                        }
                    }
                }
            }
            Some(b'[') => {
                self.bump();
                let mut items = Vec::new();
                self.skip_whitespace();
                if self.peek() == Some(b']') {
                    self.bump();
                    return Ok(Value::Array(pos, items));
                }
                loop {
                    items.push(self.parse_value()?);
                    self.skip_whitespace();
                    match self.peek() {
                        Some(b',') => {
                            self.bump();
                        }
                        Some(b']') => {
                            self.bump();
                            return Ok(Value::Array(pos, items));
                        }
                        _ => {
                            let p = self.pos();
                            return Err(p.err("expected ',' or ']' in array"));
                        }
                    }
                }
            }
            Some(b'"') => {
                let (p, s) = self.parse_string()?;
                Ok(Value::Str(p, s))
            }
            Some(b'-' | b'0'..=b'9') => {
                let mut text = String::new();
                if self.peek() == Some(b'-') {
                    text.push('-');
                    self.bump();
                }
                while matches!(self.peek(), Some(b'0'..=b'9')) {
                    text.push(self.bump().unwrap() as char);
                }
                if matches!(self.peek(), Some(b'.' | b'e' | b'E')) {
                    return Err(self.pos().err("floating point numbers are not allowed"));
                }
                let n: i64 = text
                    .parse()
                    .map_err(|_| pos.err(format!("integer '{text}' out of range")))?;
                Ok(Value::Int(pos, n))
            }
            Some(b) => Err(pos.err(format!("unexpected character '{}'", b as char))),
            None => Err(pos.err("unexpected end of input")),
        }
    }
}

/// Typed view over a parsed object with strict key accounting.
struct Fields<'a> {
    pos: Pos,
    entries: &'a [(Pos, String, Value)],
    taken: Vec<bool>,
}

impl<'a> Fields<'a> {
    fn of(value: &'a Value, what: &str) -> PResult<Self> {
        match value {
            Value::Object(pos, entries) => Ok(Fields {
                pos: *pos,
                entries,
                taken: vec![false; entries.len()],
            }),
            other => Err(other.pos().err(format!("{what} must be an object"))),
        }
    }

    fn take(&mut self, key: &str) -> Option<&'a Value> {
        for (i, (_, k, v)) in self.entries.iter().enumerate() {
            if k == key {
                self.taken[i] = true;
                return Some(v);
            }
        }
        None
    }

    fn require(&mut self, key: &str) -> PResult<&'a Value> {
        self.take(key)
            .ok_or_else(|| self.pos.err(format!("missing required key \"{key}\"")))
    }

    /// Strict mode: every key must have been consumed.
    fn finish(self) -> PResult<()> {
        for (i, (pos, key, _)) in self.entries.iter().enumerate() {
            if !self.taken[i] {
                return Err(pos.err(format!("unknown key \"{key}\"")));
            }
        }
        Ok(())
    }
}

fn as_str(value: &Value, what: &str) -> PResult<String> {
    match value {
        Value::Str(_, s) => Ok(s.clone()),
        other => Err(other
            .pos()
            .err(format!("{what} must be a string, found {}", other.kind()))),
    }
}

fn as_int(value: &Value, what: &str) -> PResult<i64> {
    match value {
        Value::Int(_, n) => Ok(*n),
        other => Err(other
            .pos()
            .err(format!("{what} must be an integer, found {}", other.kind()))),
    }
}

fn as_int_array(value: &Value, what: &str) -> PResult<Vec<i64>> {
    match value {
        Value::Array(_, items) => items.iter().map(|v| as_int(v, what)).collect(),
        other => Err(other
            .pos()
            .err(format!("{what} must be an array, found {}", other.kind()))),
    }
}

fn as_matrix(value: &Value) -> PResult<Vec<Vec<i64>>> {
    match value {
        Value::Array(_, rows) => rows
            .iter()
            .map(|row| as_int_array(row, "matrix row entry"))
            .collect(),
        other => Err(other
            .pos()
            .err(format!("matrix must be an array of rows, found {}", other.kind()))),
    }
}

fn ladder_refs(fields: &mut Fields<'_>) -> PResult<LadderRefs> {
    Ok(LadderRefs {
        f: as_str(fields.require("f")?, "f")?,
        g: as_str(fields.require("g")?, "g")?,
        fp: as_str(fields.require("fp")?, "fp")?,
        gp: as_str(fields.require("gp")?, "gp")?,
        alpha: as_str(fields.require("alpha")?, "alpha")?,
        beta: as_str(fields.require("beta")?, "beta")?,
        gamma: as_str(fields.require("gamma")?, "gamma")?,
    })
}

fn grid_refs(fields: &mut Fields<'_>) -> PResult<GridRefs> {
    Ok(GridRefs {
        f1: as_str(fields.require("f1")?, "f1")?,
        g1: as_str(fields.require("g1")?, "g1")?,
        f2: as_str(fields.require("f2")?, "f2")?,
        g2: as_str(fields.require("g2")?, "g2")?,
        f3: as_str(fields.require("f3")?, "f3")?,
        g3: as_str(fields.require("g3")?, "g3")?,
        alpha1: as_str(fields.require("alpha1")?, "alpha1")?,
        alpha2: as_str(fields.require("alpha2")?, "alpha2")?,
        beta1: as_str(fields.require("beta1")?, "beta1")?,
        beta2: as_str(fields.require("beta2")?, "beta2")?,
        gamma1: as_str(fields.require("gamma1")?, "gamma1")?,
        gamma2: as_str(fields.require("gamma2")?, "gamma2")?,
    })
}

fn parse_assertion(value: &Value) -> PResult<Assertion> {
    let mut fields = Fields::of(value, "assertion")?;
    let kind_value = fields.require("kind")?;
    let kind = as_str(kind_value, "kind")?;
    let assertion = match kind.as_str() {
        "commutes" => Assertion::Commutes,
        "exact_at" => Assertion::ExactAt {
            f: as_str(fields.require("f")?, "f")?,
            g: as_str(fields.require("g")?, "g")?,
        },
        "short_exact" => Assertion::ShortExact {
            f: as_str(fields.require("f")?, "f")?,
            g: as_str(fields.require("g")?, "g")?,
        },
        "short_five" => {
            let mode_value = fields.require("mode")?;
            let mode: Mode = as_str(mode_value, "mode")?
                .parse()
                .map_err(|e| mode_value.pos().err(format!("{e}")))?;
            Assertion::ShortFive {
                mode,
                ladder: ladder_refs(&mut fields)?,
            }
        }
        "short_five_trace" => Assertion::ShortFiveTrace {
            ladder: ladder_refs(&mut fields)?,
        },
        "nine_lemma" => {
            let dir_value = fields.require("direction")?;
            let direction: NineDirection = as_str(dir_value, "direction")?
                .parse()
                .map_err(|e| dir_value.pos().err(format!("{e}")))?;
            Assertion::NineLemma {
                direction,
                grid: grid_refs(&mut fields)?,
            }
        }
        other => {
            return Err(kind_value
                .pos()
                .err(format!("unknown assertion kind \"{other}\"")))
        }
    };
    fields.finish()?;
    Ok(assertion)
}

/// Parses the full diagram file grammar.
pub fn parse_diagram_file(text: &str) -> PResult<DiagramFile> {
    let mut lexer = Lexer::new(text);
    let root = lexer.parse_value()?;
    lexer.skip_whitespace();
    if lexer.peek().is_some() {
        return Err(lexer.pos().err("trailing input after document"));
    }

    let mut fields = Fields::of(&root, "document")?;

    let category_value = fields.require("category")?;
    let category = match as_str(category_value, "category")?.as_str() {
        "fgab" => {
            if let Some(p) = fields.take("prime") {
                return Err(p.pos().err("\"prime\" is only valid for category \"vecfp\""));
            }
            CategoryTag::Fgab
        }
        "vecfp" => {
            let prime_value = fields.require("prime")?;
            let prime = as_int(prime_value, "prime")?;
            if prime < 2 {
                return Err(prime_value.pos().err("prime must be at least 2"));
            }
            CategoryTag::VecFp {
                prime: prime as u64,
            }
        }
        other => {
            return Err(category_value
                .pos()
                .err(format!("unknown category \"{other}\" (expected fgab|vecfp)")))
        }
    };

    let mut objects = Vec::new();
    if let Some(objects_value) = fields.take("objects") {
        let Value::Object(_, entries) = objects_value else {
            return Err(objects_value.pos().err("\"objects\" must be an object"));
        };
        for (pos, name, spec) in entries {
            let parsed = match category {
                CategoryTag::Fgab => {
                    ObjectSpec::Factors(as_int_array(spec, "invariant factor")?)
                }
                CategoryTag::VecFp { .. } => {
                    let dim = as_int(spec, "dimension")?;
                    if dim < 0 {
                        return Err(spec.pos().err("dimension must be nonnegative"));
                    }
                    ObjectSpec::Dimension(dim as usize)
                }
            };
            if objects.iter().any(|(n, _)| n == name) {
                return Err(pos.err(format!("duplicate object \"{name}\"")));
            }
            objects.push((name.clone(), parsed));
        }
    }

    let mut morphisms = Vec::new();
    if let Some(morphisms_value) = fields.take("morphisms") {
        let Value::Object(_, entries) = morphisms_value else {
            return Err(morphisms_value.pos().err("\"morphisms\" must be an object"));
        };
        for (pos, name, spec) in entries {
            let mut mf = Fields::of(spec, "morphism")?;
            let src_value = mf.require("src")?;
            let src = as_str(src_value, "src")?;
            let dst_value = mf.require("dst")?;
            let dst = as_str(dst_value, "dst")?;
            let matrix = as_matrix(mf.require("matrix")?)?;
            mf.finish()?;
            if !objects.iter().any(|(n, _)| *n == src) {
                return Err(src_value
                    .pos()
                    .err(format!("morphism \"{name}\" references undeclared object \"{src}\"")));
            }
            if !objects.iter().any(|(n, _)| *n == dst) {
                return Err(dst_value
                    .pos()
                    .err(format!("morphism \"{name}\" references undeclared object \"{dst}\"")));
            }
            if matrix.iter().skip(1).any(|row| row.len() != matrix[0].len()) {
                return Err(spec.pos().err(format!("morphism \"{name}\" has ragged matrix rows")));
            }
            if morphisms.iter().any(|m: &MorphismSpec| m.name == *name) {
                return Err(pos.err(format!("duplicate morphism \"{name}\"")));
            }
            morphisms.push(MorphismSpec {
                name: name.clone(),
                src,
                dst,
                matrix,
            });
        }
    }

    let mut assertions = Vec::new();
    if let Some(assertions_value) = fields.take("assertions") {
        let Value::Array(_, items) = assertions_value else {
            return Err(assertions_value.pos().err("\"assertions\" must be an array"));
        };
        for item in items {
            assertions.push(parse_assertion(item)?);
        }
    }

    fields.finish()?;
    Ok(DiagramFile {
        category,
        objects,
        morphisms,
        assertions,
    })
}

//! Text forms of functions.
//!
//! Set syntax lists clauses as index sets, `{1},{2,3}`, optionally wrapped in
//! one more pair of braces. An index written `-k` marks variable `k` as a
//! negative regulator; the mark must then be used for every occurrence.
//!
//! Expression syntax is a disjunction of conjunctions of literals,
//! `x1 | x2 & !x3`, with precedence `!` > `&` > `|`, parentheses and free
//! whitespace. Anything that does not flatten to such a form is rejected.

use std::fmt::Write as _;

use crate::clause::Clause;
use crate::error::{Error, Result};
use crate::function::{FunctionRep, Sign, SignStructure};
use crate::word::Word;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Style {
    /// `{1},{2,-3}`
    Sets,
    /// `x1 | x2 & !x3`
    Expr,
    /// `x_1 \vee (x_2 \wedge \neg x_3)`, output only.
    Latex,
}

impl std::str::FromStr for Style {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sets" => Ok(Style::Sets),
            "expr" => Ok(Style::Expr),
            "latex" => Ok(Style::Latex),
            _ => Err(Error::Syntax {
                pos: 0,
                msg: format!("unknown style {s:?}"),
            }),
        }
    }
}

/// One signed occurrence of a variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Literal {
    var: u32,
    negative: bool,
    pos: usize,
}

fn syntax(pos: usize, msg: impl Into<String>) -> Error {
    Error::Syntax {
        pos,
        msg: msg.into(),
    }
}

/// Parses set or expression syntax into a function and its sign structure.
pub fn parse_function<W: Word>(text: &str, p: u32) -> Result<(FunctionRep<W>, SignStructure)> {
    crate::clause::check_dimension::<W>(p)?;
    let clauses = if text.trim_start().starts_with('{') {
        SetParser::new(text).parse()?
    } else {
        ExprParser::new(text).parse()?
    };
    assemble(clauses, p)
}

fn assemble<W: Word>(clauses: Vec<Vec<Literal>>, p: u32) -> Result<(FunctionRep<W>, SignStructure)> {
    let mut signs: Vec<Option<Sign>> = vec![None; p as usize];
    let mut built = Vec::with_capacity(clauses.len());
    for lits in clauses {
        let mut bits = W::zero();
        for lit in lits {
            if lit.var == 0 || lit.var > p {
                return Err(Error::VariableOutOfRange { var: lit.var, p });
            }
            if bits.has_var(lit.var) {
                return Err(syntax(lit.pos, format!("duplicate literal x{}", lit.var)));
            }
            bits = bits | W::var(lit.var);
            let sign = if lit.negative {
                Sign::Negative
            } else {
                Sign::Positive
            };
            match &mut signs[lit.var as usize - 1] {
                slot @ None => *slot = Some(sign),
                Some(s) if *s != sign => return Err(Error::MixedSign { var: lit.var }),
                Some(_) => {}
            }
        }
        built.push(Clause::from_bits(bits, p)?);
    }
    let f = FunctionRep::new(built, p)?;
    let signs = SignStructure::new(
        signs
            .into_iter()
            .map(|s| s.unwrap_or(Sign::Positive))
            .collect(),
    );
    Ok((f, signs))
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        if self.eat(b) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("'{}'", b as char)))
        }
    }

    fn unexpected(&mut self, wanted: &str) -> Error {
        match self.peek() {
            Some(c) => syntax(self.pos, format!("expected {wanted}, found '{}'", c as char)),
            None => syntax(self.pos, format!("expected {wanted}, found end of input")),
        }
    }

    fn number(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.unexpected("a variable index"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| syntax(start, "variable index too large"))
    }

    fn finish(&mut self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(_) => Err(self.unexpected("end of input")),
        }
    }
}

struct SetParser<'a> {
    cur: Cursor<'a>,
}

impl<'a> SetParser<'a> {
    fn new(text: &'a str) -> Self {
        SetParser {
            cur: Cursor::new(text),
        }
    }

    fn parse(mut self) -> Result<Vec<Vec<Literal>>> {
        let save = self.cur.pos;
        self.cur.expect(b'{')?;
        let wrapped = self.cur.peek() == Some(b'{');
        if !wrapped {
            self.cur.pos = save;
        }
        let mut clauses = vec![self.clause()?];
        while self.cur.eat(b',') {
            clauses.push(self.clause()?);
        }
        if wrapped {
            self.cur.expect(b'}')?;
        }
        self.cur.finish()?;
        Ok(clauses)
    }

    fn clause(&mut self) -> Result<Vec<Literal>> {
        self.cur.expect(b'{')?;
        let mut lits = Vec::new();
        if self.cur.eat(b'}') {
            return Err(Error::EmptyClause);
        }
        loop {
            let pos = self.cur.pos;
            let negative = self.cur.eat(b'-');
            if !negative {
                self.cur.eat(b'+');
            }
            let var = self.cur.number()?;
            lits.push(Literal { var, negative, pos });
            if self.cur.eat(b'}') {
                return Ok(lits);
            }
            self.cur.expect(b',')?;
        }
    }
}

/// Expression tree before flattening.
enum Node {
    Lit(Literal),
    And(Vec<Node>, usize),
    Or(Vec<Node>),
}

struct ExprParser<'a> {
    cur: Cursor<'a>,
}

impl<'a> ExprParser<'a> {
    fn new(text: &'a str) -> Self {
        ExprParser {
            cur: Cursor::new(text),
        }
    }

    fn parse(mut self) -> Result<Vec<Vec<Literal>>> {
        let tree = self.disjunction()?;
        self.cur.finish()?;
        let mut clauses = Vec::new();
        flatten_or(tree, &mut clauses)?;
        Ok(clauses)
    }

    fn disjunction(&mut self) -> Result<Node> {
        let mut terms = vec![self.conjunction()?];
        while self.cur.eat(b'|') {
            terms.push(self.conjunction()?);
        }
        Ok(if terms.len() == 1 {
            terms.pop().expect("one term")
        } else {
            Node::Or(terms)
        })
    }

    fn conjunction(&mut self) -> Result<Node> {
        self.cur.skip_ws();
        let pos = self.cur.pos;
        let mut factors = vec![self.factor()?];
        while self.cur.eat(b'&') {
            factors.push(self.factor()?);
        }
        Ok(if factors.len() == 1 {
            factors.pop().expect("one factor")
        } else {
            Node::And(factors, pos)
        })
    }

    fn factor(&mut self) -> Result<Node> {
        self.cur.skip_ws();
        let pos = self.cur.pos;
        if self.cur.eat(b'!') {
            if self.cur.peek() != Some(b'x') {
                return Err(syntax(pos, "negation applies only to a variable"));
            }
            let var = self.variable()?;
            return Ok(Node::Lit(Literal {
                var,
                negative: true,
                pos,
            }));
        }
        if self.cur.eat(b'(') {
            let inner = self.disjunction()?;
            self.cur.expect(b')')?;
            return Ok(inner);
        }
        let var = self.variable()?;
        Ok(Node::Lit(Literal {
            var,
            negative: false,
            pos,
        }))
    }

    fn variable(&mut self) -> Result<u32> {
        if !self.cur.eat(b'x') {
            return Err(self.cur.unexpected("a variable such as 'x1'"));
        }
        // no space allowed inside a variable name
        match self.cur.bytes.get(self.cur.pos) {
            Some(b) if b.is_ascii_digit() => self.cur.number(),
            _ => Err(syntax(self.cur.pos, "expected digits after 'x'")),
        }
    }
}

fn flatten_or(node: Node, out: &mut Vec<Vec<Literal>>) -> Result<()> {
    match node {
        Node::Or(terms) => terms.into_iter().try_for_each(|t| flatten_or(t, out)),
        other => {
            let mut lits = Vec::new();
            flatten_and(other, 0, &mut lits)?;
            out.push(lits);
            Ok(())
        }
    }
}

fn flatten_and(node: Node, at: usize, out: &mut Vec<Literal>) -> Result<()> {
    match node {
        Node::Lit(l) => {
            out.push(l);
            Ok(())
        }
        Node::And(factors, pos) => factors
            .into_iter()
            .try_for_each(|f| flatten_and(f, pos, out)),
        Node::Or(_) => Err(syntax(
            at,
            "not a disjunction of conjunctions: '|' nested under '&'",
        )),
    }
}

/// Canonical text of `f` under the given sign structure.
pub fn render_function<W: Word>(f: &FunctionRep<W>, signs: &SignStructure, style: Style) -> Result<String> {
    signs.check_dimension(f.p())?;
    let mut out = String::new();
    let multi = f.len() > 1;
    for (i, c) in f.clauses().iter().enumerate() {
        match style {
            Style::Sets => {
                if i > 0 {
                    out.push(',');
                }
                out.push('{');
                for (j, v) in c.vars().enumerate() {
                    if j > 0 {
                        out.push(',');
                    }
                    if signs.is_negative(v) {
                        out.push('-');
                    }
                    let _ = write!(out, "{v}");
                }
                out.push('}');
            }
            Style::Expr => {
                if i > 0 {
                    out.push_str(" | ");
                }
                for (j, v) in c.vars().enumerate() {
                    if j > 0 {
                        out.push_str(" & ");
                    }
                    if signs.is_negative(v) {
                        out.push('!');
                    }
                    let _ = write!(out, "x{v}");
                }
            }
            Style::Latex => {
                if i > 0 {
                    out.push_str(" \\vee ");
                }
                let paren = multi && c.len() > 1;
                if paren {
                    out.push('(');
                }
                for (j, v) in c.vars().enumerate() {
                    if j > 0 {
                        out.push_str(" \\wedge ");
                    }
                    if signs.is_negative(v) {
                        out.push_str("\\neg ");
                    }
                    let _ = write!(out, "x_{{{v}}}");
                }
                if paren {
                    out.push(')');
                }
            }
        }
    }
    Ok(out)
}

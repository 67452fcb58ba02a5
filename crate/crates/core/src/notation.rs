//! Text syntax for games.
//!
//! ```text
//! expr   := term ('+' term)*
//! term   := factor (':' factor)*        right associative
//! factor := number | star | brace | '~' factor | '(' expr ')'
//! number := ['-'] digits ['/' digits]   denominator a power of two
//! star   := '*' [digits]
//! brace  := '{' list '|' list '}' | '{' list '}'
//! list   := [expr (',' expr)*]
//! ```
//!
//! A brace without a bar is impartial: `{0,*}` means `{0,* | 0,*}`.
//!
//! A sum lowers to one component per summand. Wherever a single form is
//! needed (options, ordinal sum operands) a multi-component sum is folded
//! into its literal sum form.

use crate::arena::FormId;
use crate::dyadic::Dyadic;
use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::position::Position;

const MAX_NIMBER: u32 = 4096;
const MAX_INTEGER: i64 = 1024;
const MAX_EXPONENT: u32 = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GameExpr {
    Number(Dyadic),
    Nimber(u32),
    Brace(Vec<GameExpr>, Vec<GameExpr>),
    Conjugate(Box<GameExpr>),
    Ordinal(Box<GameExpr>, Box<GameExpr>),
    Sum(Vec<GameExpr>),
}

pub fn parse_game_expr(text: &str) -> Result<GameExpr> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error(format!("unexpected `{}`", p.src[p.pos] as char)));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse { offset: self.pos, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{}`", c as char)))
        }
    }

    fn expr(&mut self) -> Result<GameExpr> {
        let mut terms = vec![self.term()?];
        while self.eat(b'+') {
            terms.push(self.term()?);
        }
        Ok(if terms.len() == 1 { terms.pop().unwrap() } else { GameExpr::Sum(terms) })
    }

    fn term(&mut self) -> Result<GameExpr> {
        let base = self.factor()?;
        if self.eat(b':') {
            let top = self.term()?;
            return Ok(GameExpr::Ordinal(Box::new(base), Box::new(top)));
        }
        Ok(base)
    }

    fn factor(&mut self) -> Result<GameExpr> {
        match self.peek() {
            Some(b'~') => {
                self.pos += 1;
                Ok(GameExpr::Conjugate(Box::new(self.factor()?)))
            }
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(b'*') => {
                self.pos += 1;
                let start = self.pos;
                match self.digits() {
                    None => Ok(GameExpr::Nimber(1)),
                    Some(d) => {
                        let n: u32 = d.parse().ok().filter(|&n| n <= MAX_NIMBER).ok_or(Error::Parse {
                            offset: start,
                            message: format!("nimber index {d} exceeds {MAX_NIMBER}"),
                        })?;
                        Ok(GameExpr::Nimber(n))
                    }
                }
            }
            Some(b'{') => {
                self.pos += 1;
                let left = self.list()?;
                if self.eat(b'}') {
                    return Ok(GameExpr::Brace(left.clone(), left));
                }
                self.expect(b'|')?;
                let right = self.list()?;
                self.expect(b'}')?;
                Ok(GameExpr::Brace(left, right))
            }
            Some(c) if c == b'-' || c.is_ascii_digit() => self.number(),
            Some(c) => Err(self.error(format!("unexpected `{}`", c as char))),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn list(&mut self) -> Result<Vec<GameExpr>> {
        let mut out = Vec::new();
        if matches!(self.peek(), Some(b'|' | b'}')) {
            return Ok(out);
        }
        out.push(self.expr()?);
        while self.eat(b',') {
            out.push(self.expr()?);
        }
        Ok(out)
    }

    fn digits(&mut self) -> Option<&str> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn number(&mut self) -> Result<GameExpr> {
        let start = self.pos;
        let negative = self.eat(b'-');
        self.skip_ws();
        let too_big = || Error::Parse { offset: start, message: "number too large".into() };
        let num: i64 = match self.digits() {
            Some(d) => d.parse().map_err(|_| too_big())?,
            None => return Err(self.error("expected digits")),
        };
        let den: i64 = if self.src.get(self.pos) == Some(&b'/') {
            self.pos += 1;
            match self.digits() {
                Some(d) => d.parse().map_err(|_| too_big())?,
                None => return Err(self.error("expected denominator digits")),
            }
        } else {
            1
        };
        let value = Dyadic::from_fraction(if negative { -num } else { num }, den)?;
        if value.exponent() > MAX_EXPONENT || value.numerator().abs() >> value.exponent() > MAX_INTEGER {
            return Err(too_big());
        }
        Ok(GameExpr::Number(value))
    }
}

impl Engine {
    pub fn lower(&self, e: &GameExpr) -> Position {
        match e {
            GameExpr::Number(d) => Position::single(self.number(*d)),
            GameExpr::Nimber(n) => Position::single(self.nimber(*n)),
            GameExpr::Brace(l, r) => {
                let left: Vec<FormId> = l.iter().map(|x| self.lower_form(x)).collect();
                let right: Vec<FormId> = r.iter().map(|x| self.lower_form(x)).collect();
                Position::single(self.intern(left, right).expect("lowered options are valid handles"))
            }
            GameExpr::Conjugate(x) => self.conjugate_position(&self.lower(x)),
            GameExpr::Ordinal(g, h) => Position::single(self.ordinal_sum(self.lower_form(g), self.lower_form(h))),
            GameExpr::Sum(terms) => terms.iter().fold(Position::zero(), |acc, t| acc.sum(&self.lower(t))),
        }
    }

    /// Lowers to a single form, folding sums into their literal sum form.
    pub fn lower_form(&self, e: &GameExpr) -> FormId {
        self.sum_form(&self.lower(e))
    }

    pub fn parse_expr(&self, text: &str) -> Result<Position> {
        Ok(self.lower(&parse_game_expr(text)?))
    }

    pub fn parse_form(&self, text: &str) -> Result<FormId> {
        Ok(self.lower_form(&parse_game_expr(text)?))
    }

    /// Prints a form so that parsing the text gives back the same handle:
    /// numbers and nimbers by value, wildflowers as `base:top`, anything
    /// else as a brace of its options.
    pub fn format_form(&self, g: FormId) -> String {
        if let Some(d) = self.as_number(g) {
            return d.to_string();
        }
        let form = self.form(g);
        if let Some(n) = form.nimber() {
            return if n == 1 { "*".into() } else { format!("*{n}") };
        }
        if !form.is_impartial() {
            let w = self.wildflower(g);
            if w.base != FormId::ZERO {
                return format!("{}:{}", self.format_form(w.base), self.format_form(w.top));
            }
        }
        let side = |opts: &[FormId]| opts.iter().map(|&o| self.format_form(o)).collect::<Vec<_>>().join(",");
        if form.is_impartial() {
            return format!("{{{}}}", side(form.left()));
        }
        format!("{{{}|{}}}", side(form.left()), side(form.right()))
    }

    pub fn format_position(&self, p: &Position) -> String {
        if p.is_empty() {
            return "0".into();
        }
        p.components().iter().map(|&g| self.format_form(g)).collect::<Vec<_>>().join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence_and_associativity() {
        let e = Engine::new();
        assert_eq!(e.parse_expr("*:1 + *2:-1").unwrap(), e.parse_expr("(*:1) + (*2:(-1))").unwrap());
        assert_eq!(e.parse_expr("* + *2 : 1").unwrap(), e.parse_expr("* + (*2:1)").unwrap());
        assert_eq!(e.parse_form("*:*:1").unwrap(), e.parse_form("*:(*:1)").unwrap());
        assert_eq!(e.parse_expr("~*:1").unwrap(), e.parse_expr("(~*):1").unwrap());
        assert_eq!(e.parse_expr("~(*:1)").unwrap(), e.parse_expr("*:-1").unwrap());
        assert_eq!(e.parse_expr("0").unwrap(), Position::zero());
        assert_eq!(e.parse_expr("*0 + *").unwrap(), Position::single(e.star()));
    }

    #[test]
    fn braces_and_sums_in_forms() {
        let e = Engine::new();
        assert_eq!(e.parse_form("{0|}").unwrap(), e.integer(1));
        assert_eq!(e.parse_form("{|}").unwrap(), e.zero());
        assert_eq!(e.parse_form("{0,*|0,*}").unwrap(), e.nimber(2));
        assert_eq!(e.parse_form("{0,*}").unwrap(), e.nimber(2));
        assert_eq!(e.parse_form("{}").unwrap(), e.zero());
        assert_eq!(e.parse_form("{0|*}").unwrap(), e.up());
        let star_plus_star = e.parse_form("(* + *)").unwrap();
        assert_eq!(star_plus_star, e.intern([e.star()], [e.star()]).unwrap());
        let x1 = e.parse_form("{0,*,*2,*24,*8,*16,*32}:-1").unwrap();
        assert_eq!(e.recognize_mutant(x1).unwrap().xs.into_iter().collect::<Vec<_>>(), vec![0, 1, 2, 8, 16, 24, 32]);
    }

    #[test]
    fn errors_carry_offsets() {
        let e = Engine::new();
        assert_eq!(e.parse_expr("3/5").unwrap_err(), Error::NonDyadic { numerator: 3, denominator: 5 });
        assert!(matches!(e.parse_expr("*:1 +"), Err(Error::Parse { offset: 5, .. })));
        assert!(matches!(e.parse_expr("{0|"), Err(Error::Parse { offset: 3, .. })));
        assert!(matches!(e.parse_expr("{0"), Err(Error::Parse { offset: 2, .. })));
        assert!(matches!(e.parse_expr("*1)"), Err(Error::Parse { offset: 2, .. })));
        assert!(matches!(e.parse_expr("*99999"), Err(Error::Parse { offset: 1, .. })));
        assert!(matches!(e.parse_expr("100000"), Err(Error::Parse { offset: 0, .. })));
        assert!(matches!(e.parse_expr("x"), Err(Error::Parse { offset: 0, .. })));
    }

    #[test]
    fn printing() {
        let e = Engine::new();
        for text in ["*:1 + *:-1", "*2:1", "{0,*2}:-1/2", "3/4", "*5", "{1|-1}", "{0|*}", "*:{*2,*3|*2,*3}"] {
            let p = e.parse_expr(text).unwrap();
            let printed = e.format_position(&p);
            assert_eq!(e.parse_expr(&printed).unwrap(), p, "{text} printed as {printed}");
        }
        assert_eq!(e.format_position(&e.parse_expr("*2:1 + *").unwrap()), "* + *2:1");
        assert_eq!(e.format_position(&Position::zero()), "0");
        assert_eq!(e.format_form(e.parse_form("*:*").unwrap()), "*2");
        assert_eq!(e.format_form(e.superstar([2, 3])), "{*2,*3}");
    }
}

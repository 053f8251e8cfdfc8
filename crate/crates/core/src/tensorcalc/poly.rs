use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{AlgElem, Algebra};
use crate::error::{Error, Result};
use crate::exact::Rational;

/// A monomial as a sequence of variable indices, ordered by length and then
/// lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word(self.0.iter().chain(&other.0).copied().collect())
    }

    /// Runs of equal letters as `x^2*y^3`; the empty word is `1`.
    pub fn render(&self, vars: &[String]) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        let mut parts = Vec::new();
        let mut idx = 0;
        while idx < self.0.len() {
            let letter = self.0[idx];
            let run = self.0[idx..].iter().take_while(|&&l| l == letter).count();
            let name = &vars[letter];
            parts.push(if run == 1 {
                name.clone()
            } else {
                format!("{name}^{run}")
            });
            idx += run;
        }
        parts.join("*")
    }

    /// Product of the letters' values, bracketed from the left.
    pub fn eval(&self, alg: &Algebra, point: &[AlgElem]) -> Result<AlgElem> {
        let mut acc = alg
            .one()
            .ok_or_else(|| Error::NonUnital(format!("{} has no unit for the empty word", alg.name())))?;
        for &l in &self.0 {
            acc = acc.try_mul(&point[l])?;
        }
        Ok(acc)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Noncommutative polynomial over ℚ in a fixed, ordered alphabet.
#[derive(Clone, PartialEq, Eq)]
pub struct NCPoly {
    vars: Vec<String>,
    terms: BTreeMap<Word, Rational>,
}

impl NCPoly {
    pub fn zero(vars: &[String]) -> NCPoly {
        NCPoly {
            vars: vars.to_vec(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &[String], c: Rational) -> NCPoly {
        NCPoly::monomial(vars, c, Word::empty())
    }

    pub fn monomial(vars: &[String], c: Rational, w: Word) -> NCPoly {
        let mut p = NCPoly::zero(vars);
        p.add_term(w, c);
        p
    }

    pub fn var(vars: &[String], name: &str) -> Result<NCPoly> {
        let idx = var_index(vars, name)?;
        Ok(NCPoly::monomial(vars, Rational::one(), Word(vec![idx])))
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    /// Terms in canonical word order.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &Word) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, w: Word, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += &c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> NCPoly {
        let mut out = NCPoly::zero(&self.vars);
        for (w, x) in &self.terms {
            out.add_term(w.clone(), x * c);
        }
        out
    }

    pub fn neg(&self) -> NCPoly {
        self.scale(&-Rational::one())
    }

    pub fn sub(&self, other: &NCPoly) -> NCPoly {
        self.add(&other.neg())
    }

    /// Order-preserving product: words of `self` come first.
    pub fn mul(&self, other: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero(&self.vars);
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.add_term(w1.concat(w2), c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, e: usize) -> NCPoly {
        let mut out = NCPoly::constant(&self.vars, Rational::one());
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    pub fn eval(&self, alg: &Algebra, point: &[AlgElem]) -> Result<AlgElem> {
        self.check_point(alg, point)?;
        let mut acc = alg.zero();
        for (w, c) in &self.terms {
            acc = acc.try_add(&w.eval(alg, point)?.scale(c))?;
        }
        Ok(acc)
    }

    pub(crate) fn check_point(&self, alg: &Algebra, point: &[AlgElem]) -> Result<()> {
        if point.len() != self.vars.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} variables but a point with {} coordinates",
                self.vars.len(),
                point.len()
            )));
        }
        point.iter().try_for_each(|x| alg.check_owns(x))
    }
}

pub(crate) fn var_index(vars: &[String], name: &str) -> Result<usize> {
    vars.iter()
        .position(|v| v == name)
        .ok_or_else(|| Error::UnknownVariable(name.to_string()))
}

impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (w, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (idx, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if w.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&w.render(&self.vars))?;
            } else {
                write!(f, "{abs}*{}", w.render(&self.vars))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NCPoly({self})")
    }
}

/// Parses a polynomial over the alphabet `vars`.
///
/// ```text
/// expr   := ['+'|'-'] term (('+'|'-') term)*
/// term   := [coef '*'?] factor ('*'? factor)* | coef
/// factor := (var | '(' expr ')') ('^' nat)?
/// coef   := int | int '/' posint
/// var    := [A-Za-z][A-Za-z0-9_]*
/// ```
///
/// Error positions are character offsets into `src`.
pub fn parse_ncpoly(src: &str, vars: &[String]) -> Result<NCPoly> {
    let mut p = Parser {
        chars: src.chars().collect(),
        pos: 0,
        vars,
    };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.error(format!("unexpected '{}'", p.chars[p.pos])));
    }
    Ok(out)
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    vars: &'a [String],
}

impl Parser<'_> {
    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<NCPoly> {
        let mut sign = Rational::one();
        if self.eat('-') {
            sign = -sign;
        } else {
            self.eat('+');
        }
        let mut acc = self.term()?.scale(&sign);
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_factor(&mut self) -> bool {
        matches!(self.peek(), Some(c) if c == '(' || c.is_ascii_alphabetic())
    }

    fn term(&mut self) -> Result<NCPoly> {
        let mut acc = NCPoly::constant(self.vars, Rational::one());
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            acc = acc.scale(&self.coef()?);
            let star = self.eat('*');
            if !self.starts_factor() {
                if star {
                    return Err(self.error("expected a factor after '*'"));
                }
                return Ok(acc);
            }
        } else if !self.starts_factor() {
            return Err(match self.peek() {
                Some(c) => self.error(format!("expected a term, found '{c}'")),
                None => self.error("expected a term, found end of input"),
            });
        }
        acc = acc.mul(&self.factor()?);
        loop {
            if self.eat('*') {
                if !self.starts_factor() {
                    return Err(self.error("expected a factor after '*'"));
                }
            } else if !self.starts_factor() {
                return Ok(acc);
            }
            acc = acc.mul(&self.factor()?);
        }
    }

    fn int(&mut self) -> Result<(usize, String)> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        Ok((start, self.chars[start..self.pos].iter().collect()))
    }

    fn coef(&mut self) -> Result<Rational> {
        let (_, num) = self.int()?;
        let text = if self.eat('/') {
            let (start, den) = self.int()?;
            if den.bytes().all(|b| b == b'0') {
                return Err(Error::Syntax {
                    pos: start,
                    msg: "zero denominator".into(),
                });
            }
            format!("{num}/{den}")
        } else {
            num
        };
        text.parse().map_err(|_| self.error("malformed coefficient"))
    }

    fn factor(&mut self) -> Result<NCPoly> {
        let base = if self.eat('(') {
            let inner = self.expr()?;
            if !self.eat(')') {
                return Err(self.error("expected ')'"));
            }
            inner
        } else {
            self.skip_ws();
            let start = self.pos;
            while self
                .chars
                .get(self.pos)
                .is_some_and(|c| c.is_ascii_alphanumeric() || *c == '_')
            {
                self.pos += 1;
            }
            let name: String = self.chars[start..self.pos].iter().collect();
            NCPoly::var(self.vars, &name)?
        };
        if self.eat('^') {
            if self.peek() == Some('-') {
                return Err(Error::NegativeExponent { pos: self.pos });
            }
            let (start, digits) = self.int()?;
            let e: usize = digits.parse().map_err(|_| Error::Syntax {
                pos: start,
                msg: "exponent too large".into(),
            })?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }
}

/// Parses `name = expr; name = expr; ...`. Empty bindings are skipped.
pub fn parse_map(src: &str, vars: &[String]) -> Result<Vec<(String, NCPoly)>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for piece in src.split(';') {
        let here = offset;
        offset += piece.chars().count() + 1;
        if piece.trim().is_empty() {
            continue;
        }
        let (name, expr) = piece.split_once('=').ok_or_else(|| Error::Syntax {
            pos: here,
            msg: "expected 'name = expr'".into(),
        })?;
        let name = name.trim();
        let valid = name.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
            && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !valid {
            return Err(Error::Syntax {
                pos: here,
                msg: format!("invalid binding name '{name}'"),
            });
        }
        let expr_start = here + piece.chars().take_while(|&c| c != '=').count() + 1;
        let poly = parse_ncpoly(expr, vars).map_err(|e| match e {
            Error::Syntax { pos, msg } => Error::Syntax {
                pos: pos + expr_start,
                msg,
            },
            Error::NegativeExponent { pos } => Error::NegativeExponent { pos: pos + expr_start },
            other => other,
        })?;
        out.push((name.to_string(), poly));
    }
    Ok(out)
}

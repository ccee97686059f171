//! Terms and polynomials: nonempty words over variables and nonzero
//! constants.
//!
//! Concrete syntax: symbols separated by optional whitespace. A symbol is an
//! identifier (`[A-Za-z_][A-Za-z0-9_#]*`) or a constant `[i,λ]` / `[i,g,λ]`
//! with 1-based indices. A postfix `^k` repeats the preceding symbol `k`
//! times.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::semigroup::{Element, ReesSemigroup};

/// A variable name.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Variable(String);

impl Variable {
    pub fn new(name: impl Into<String>) -> Self {
        Variable(name.into())
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for Variable {
    fn from(s: &str) -> Self {
        Variable::new(s)
    }
}

impl core::borrow::Borrow<str> for Variable {
    fn borrow(&self) -> &str {
        &self.0
    }
}

/// A letter of a polynomial. Constants are never `0` or `1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    Var(Variable),
    Const(Element),
}

impl Symbol {
    pub fn var(name: &str) -> Self {
        Symbol::Var(Variable::new(name))
    }

    pub fn as_var(&self) -> Option<&Variable> {
        match self {
            Symbol::Var(v) => Some(v),
            Symbol::Const(_) => None,
        }
    }

    pub fn as_const(&self) -> Option<&Element> {
        match self {
            Symbol::Const(c) => Some(c),
            Symbol::Var(_) => None,
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::Var(v) => v.fmt(f),
            Symbol::Const(c) => c.fmt(f),
        }
    }
}

/// An assignment of semigroup elements to variables.
pub type Evaluation = BTreeMap<Variable, Element>;

/// A nonempty word. A term is a polynomial with no constants.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Polynomial {
    word: Vec<Symbol>,
}

impl Polynomial {
    pub fn new(word: Vec<Symbol>) -> Result<Self> {
        if word.is_empty() {
            return Err(Error::EmptyWord);
        }
        if let Some(c) = word
            .iter()
            .filter_map(Symbol::as_const)
            .find(|c| !matches!(c, Element::Triple { .. }))
        {
            return Err(Error::InvalidElement(format!(
                "{} cannot be used as a constant",
                c
            )));
        }
        Ok(Polynomial { word })
    }

    /// Parses `text`, validating constants against `s`. `[i,λ]` denotes the
    /// triple with the identity as group part.
    pub fn parse(text: &str, s: &ReesSemigroup) -> Result<Self> {
        let p = Self::parse_unchecked(text)?;
        p.validate(s)?;
        Ok(p)
    }

    /// Parses a word containing only variables.
    pub fn parse_term(text: &str) -> Result<Self> {
        let p = Self::parse_unchecked(text)?;
        if let Some(c) = p.constants().next() {
            return Err(Error::NotATerm(c.to_string()));
        }
        Ok(p)
    }

    fn parse_unchecked(text: &str) -> Result<Self> {
        Parser { text, pos: 0 }.word()
    }

    /// Checks that every constant is a nonzero element of `s`.
    pub fn validate(&self, s: &ReesSemigroup) -> Result<()> {
        match self.constants().find(|c| !s.contains(c)) {
            Some(c) => Err(Error::ConstantOutOfRange(c.to_string())),
            None => Ok(()),
        }
    }

    pub fn var(name: &str) -> Self {
        Polynomial {
            word: alloc::vec![Symbol::var(name)],
        }
    }

    pub fn constant(c: Element) -> Result<Self> {
        Self::new(alloc::vec![Symbol::Const(c)])
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.word
    }

    pub fn into_symbols(self) -> Vec<Symbol> {
        self.word
    }

    /// Symbol count.
    pub fn len(&self) -> usize {
        self.word.len()
    }

    /// Always false; polynomials are nonempty.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_term(&self) -> bool {
        self.word.iter().all(|s| s.as_var().is_some())
    }

    pub fn constants(&self) -> impl Iterator<Item = &Element> + '_ {
        self.word.iter().filter_map(Symbol::as_const)
    }

    /// Errors with [`Error::NotATerm`] when a constant occurs.
    pub fn require_term(&self) -> Result<()> {
        match self.constants().next() {
            Some(c) => Err(Error::NotATerm(c.to_string())),
            None => Ok(()),
        }
    }

    /// Distinct variables in order of first occurrence.
    pub fn variables(&self) -> Vec<Variable> {
        self.left_sequencing()
    }

    pub fn variable_set(&self) -> BTreeSet<Variable> {
        self.word.iter().filter_map(Symbol::as_var).cloned().collect()
    }

    pub fn contains_var(&self, v: &Variable) -> bool {
        self.word.iter().any(|s| s.as_var() == Some(v))
    }

    /// `p_l`.
    pub fn leftmost(&self) -> &Symbol {
        &self.word[0]
    }

    /// `p_r`.
    pub fn rightmost(&self) -> &Symbol {
        &self.word[self.word.len() - 1]
    }

    /// Distinct variables in order of first appearance from the left.
    pub fn left_sequencing(&self) -> Vec<Variable> {
        first_appearances(self.word.iter())
    }

    /// Distinct variables in order of first appearance from the right.
    pub fn right_sequencing(&self) -> Vec<Variable> {
        first_appearances(self.word.iter().rev())
    }

    /// Replaces each mapped variable by its word.
    pub fn substitute(&self, map: &BTreeMap<Variable, Polynomial>) -> Polynomial {
        let mut word = Vec::with_capacity(self.word.len());
        for s in &self.word {
            match s.as_var().and_then(|v| map.get(v)) {
                Some(r) => word.extend(r.word.iter().cloned()),
                None => word.push(s.clone()),
            }
        }
        Polynomial { word }
    }

    /// `p/v`: deletes every occurrence of `v`.
    pub fn eliminate(&self, v: &Variable) -> Result<Polynomial> {
        self.eliminate_all(core::iter::once(v))
    }

    /// Deletes every occurrence of every listed variable.
    pub fn eliminate_all<'a>(&self, vars: impl IntoIterator<Item = &'a Variable>) -> Result<Polynomial> {
        let drop: BTreeSet<&Variable> = vars.into_iter().collect();
        let word: Vec<Symbol> = self
            .word
            .iter()
            .filter(|s| s.as_var().is_none_or(|v| !drop.contains(v)))
            .cloned()
            .collect();
        Polynomial::new(word)
    }

    pub fn reversed(&self) -> Polynomial {
        Polynomial {
            word: self.word.iter().rev().cloned().collect(),
        }
    }

    /// Applies `f` to every constant.
    pub fn map_constants(&self, mut f: impl FnMut(&Element) -> Element) -> Result<Polynomial> {
        Polynomial::new(
            self.word
                .iter()
                .map(|s| match s {
                    Symbol::Const(c) => Symbol::Const(f(c)),
                    v => v.clone(),
                })
                .collect(),
        )
    }

    /// Renames variables; unmapped names are kept.
    pub fn rename(&self, map: &BTreeMap<Variable, Variable>) -> Polynomial {
        Polynomial {
            word: self
                .word
                .iter()
                .map(|s| match s.as_var().and_then(|v| map.get(v)) {
                    Some(w) => Symbol::Var(w.clone()),
                    None => s.clone(),
                })
                .collect(),
        }
    }

    /// The word `pq`.
    pub fn concat(&self, other: &Polynomial) -> Polynomial {
        let mut word = self.word.clone();
        word.extend(other.word.iter().cloned());
        Polynomial { word }
    }

    /// Appends one symbol.
    pub fn push(&mut self, s: Symbol) {
        self.word.push(s);
    }
}

impl fmt::Display for Polynomial {
    /// Space-separated symbols, without `^` abbreviations.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, s) in self.word.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            s.fmt(f)?;
        }
        Ok(())
    }
}

fn first_appearances<'a>(it: impl Iterator<Item = &'a Symbol>) -> Vec<Variable> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for v in it.filter_map(Symbol::as_var) {
        if seen.insert(v) {
            out.push(v.clone());
        }
    }
    out
}

/// Formats an evaluation as `x=[1,2], y=0`.
pub fn format_evaluation(e: &Evaluation) -> String {
    let mut s = String::new();
    for (k, (v, x)) in e.iter().enumerate() {
        if k > 0 {
            s.push_str(", ");
        }
        s.push_str(&format!("{}={}", v, x));
    }
    s
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            offset: self.pos,
            message: message.into(),
        })
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    fn int(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.bump();
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        match self.text[start..self.pos].parse() {
            Ok(v) => Ok(v),
            Err(_) => {
                self.pos = start;
                self.err("integer out of range")
            }
        }
    }

    fn word(&mut self) -> Result<Polynomial> {
        let mut word = Vec::new();
        loop {
            self.skip_ws();
            let Some(c) = self.peek() else { break };
            let sym = if c == '[' {
                self.constant()?
            } else if c.is_ascii_alphabetic() || c == '_' {
                let start = self.pos;
                while self
                    .peek()
                    .is_some_and(|c| c.is_ascii_alphanumeric() || c == '_' || c == '#')
                {
                    self.bump();
                }
                Symbol::Var(Variable::new(&self.text[start..self.pos]))
            } else if c == '0' || c == '1' {
                return self.err("0 and 1 are not allowed as constants");
            } else {
                return self.err(format!("unexpected character `{}`", c));
            };
            self.skip_ws();
            let mut count = 1;
            if self.peek() == Some('^') {
                self.bump();
                count = self.int()?;
                if count == 0 {
                    return self.err("exponent must be positive");
                }
            }
            for _ in 0..count {
                word.push(sym.clone());
            }
        }
        if word.is_empty() {
            return Err(Error::EmptyWord);
        }
        Ok(Polynomial { word })
    }

    fn constant(&mut self) -> Result<Symbol> {
        let open = self.pos;
        self.bump();
        let mut parts = Vec::new();
        loop {
            parts.push(self.int()?);
            self.skip_ws();
            match self.bump() {
                Some(',') => continue,
                Some(']') => break,
                _ => {
                    self.pos = self.pos.saturating_sub(1);
                    return self.err("expected `,` or `]`");
                }
            }
        }
        if parts.contains(&0) {
            self.pos = open;
            return self.err("constant indices are 1-based");
        }
        let e = match parts[..] {
            [i, l] => Element::pair(i - 1, l - 1),
            [i, g, l] => Element::triple(i - 1, g - 1, l - 1),
            _ => {
                self.pos = open;
                return self.err("a constant has two or three coordinates");
            }
        };
        Ok(Symbol::Const(e))
    }
}

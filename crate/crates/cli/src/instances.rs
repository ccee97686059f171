//! Instance files: one question per line.
//!
//! ```text
//! # comment
//! x [1,2] y            identically zero?
//! ZERO x y
//! EQ p | q             equal?
//! ZSET p | q           same zero sets?
//! SAT p | b            does p = b have a solution?
//! ```

use anyhow::{anyhow, bail, Context, Result};
use rees_core::decide::{brute_eq, brute_sat, brute_zero, brute_zset_eq, Decider, Verdict};
use rees_core::{Element, Polynomial, ReesSemigroup};

#[derive(Clone, Debug)]
pub enum Instance {
    Zero(Polynomial),
    Eq(Polynomial, Polynomial),
    ZSet(Polynomial, Polynomial),
    Sat(Polynomial, Element),
}

impl Instance {
    pub fn name(&self) -> &'static str {
        match self {
            Instance::Zero(_) => "pol-zero",
            Instance::Eq(..) => "pol-eq",
            Instance::ZSet(..) => "zset-eq",
            Instance::Sat(..) => "pol-sat",
        }
    }

    pub fn polynomials(&self) -> Vec<&Polynomial> {
        match self {
            Instance::Zero(p) | Instance::Sat(p, _) => vec![p],
            Instance::Eq(p, q) | Instance::ZSet(p, q) => vec![p, q],
        }
    }

    pub fn inputs(&self) -> Vec<String> {
        let mut out: Vec<String> = self.polynomials().iter().map(|p| p.to_string()).collect();
        if let Instance::Sat(_, b) = self {
            out.push(b.to_string());
        }
        out
    }

    pub fn decide(&self, d: &Decider) -> rees_core::Result<Verdict> {
        match self {
            Instance::Zero(p) => d.pol_zero(p),
            Instance::Eq(p, q) => d.pol_eq(p, q),
            Instance::ZSet(p, q) => d.pol_zset_eq(p, q),
            Instance::Sat(p, b) => d.pol_sat(p, b),
        }
    }

    pub fn brute(&self, s: &ReesSemigroup, budget: u64) -> rees_core::Result<Verdict> {
        match self {
            Instance::Zero(p) => brute_zero(s, p, budget),
            Instance::Eq(p, q) => brute_eq(s, p, q, budget),
            Instance::ZSet(p, q) => brute_zset_eq(s, p, q, budget),
            Instance::Sat(p, b) => brute_sat(s, p, b, budget),
        }
    }
}

/// `0`, `1`, or a single constant such as `[1,2]` or `[1,2,3]`.
pub fn parse_element(text: &str, s: &ReesSemigroup) -> Result<Element> {
    match text.trim() {
        "0" => Ok(Element::Zero),
        "1" if s.has_identity() => Ok(Element::One),
        "1" => bail!("1 is not an element; pass --adjoin-identity"),
        t => {
            let p = Polynomial::parse(t, s).with_context(|| format!("bad element `{}`", t))?;
            match p.symbols() {
                [rees_core::Symbol::Const(c)] => Ok(*c),
                _ => bail!("expected a single element, got `{}`", t),
            }
        }
    }
}

fn pair(rest: &str, line: usize) -> Result<(&str, &str)> {
    rest.split_once('|').ok_or_else(|| anyhow!("line {}: expected `p | q`", line))
}

pub fn parse_line(line: &str, number: usize, s: &ReesSemigroup) -> Result<Option<Instance>> {
    let line = line.split('#').next().unwrap_or("").trim();
    if line.is_empty() {
        return Ok(None);
    }
    let poly = |t: &str| Polynomial::parse(t.trim(), s).with_context(|| format!("line {}", number));
    let (head, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
    let instance = match head {
        "EQ" => {
            let (p, q) = pair(rest, number)?;
            Instance::Eq(poly(p)?, poly(q)?)
        }
        "ZSET" => {
            let (p, q) = pair(rest, number)?;
            Instance::ZSet(poly(p)?, poly(q)?)
        }
        "SAT" => {
            let (p, b) = pair(rest, number)?;
            Instance::Sat(poly(p)?, parse_element(b, s).with_context(|| format!("line {}", number))?)
        }
        "ZERO" => Instance::Zero(poly(rest)?),
        _ => Instance::Zero(poly(line)?),
    };
    Ok(Some(instance))
}

pub fn parse_file(text: &str, s: &ReesSemigroup) -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for (k, line) in text.lines().enumerate() {
        if let Some(i) = parse_line(line, k + 1, s)? {
            out.push(i);
        }
    }
    Ok(out)
}

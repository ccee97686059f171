//! Substitutions that move an identically-zero question between semigroups.

use alloc::collections::BTreeMap;
use alloc::format;

use crate::error::{Error, Result};
use crate::poly::{Polynomial, Symbol, Variable};
use crate::semigroup::Element;

/// `x ↦ x [4,4] … [n,n] x`, carrying a polynomial over `S_{H₃}` to `S_{H_n}`.
/// Constants keep their indices.
pub fn alpha(p: &Polynomial, n: usize) -> Result<Polynomial> {
    if n < 4 {
        return Err(Error::Precondition(format!("alpha needs n >= 4, got {}", n)));
    }
    if let Some(c) = p.constants().find(|c| c.first().is_none_or(|i| i >= 3) || c.second().is_none_or(|l| l >= 3)) {
        return Err(Error::ConstantOutOfRange(alloc::string::ToString::to_string(c)));
    }
    let map: BTreeMap<Variable, Polynomial> = p
        .variables()
        .into_iter()
        .map(|v| {
            let mut word = alloc::vec![Symbol::Var(v.clone())];
            word.extend((3..n).map(|u| Symbol::Const(Element::pair(u, u))));
            word.push(Symbol::Var(v.clone()));
            (v, Polynomial::new(word).expect("nonempty"))
        })
        .collect();
    Ok(p.substitute(&map))
}

/// The fresh companion `rho#x` of `x`.
pub fn rho_var(v: &Variable) -> Variable {
    Variable::new(format!("rho#{}", v.name()))
}

/// `x ↦ x s rho#x` for every variable.
pub fn rho(p: &Polynomial, s: &Element) -> Result<Polynomial> {
    if !matches!(s, Element::Triple { .. }) {
        return Err(Error::Precondition("rho needs a nonzero element of S".into()));
    }
    let map: BTreeMap<Variable, Polynomial> = p
        .variables()
        .into_iter()
        .map(|v| {
            let w = alloc::vec![Symbol::Var(v.clone()), Symbol::Const(*s), Symbol::Var(rho_var(&v))];
            (v, Polynomial::new(w).expect("nonempty"))
        })
        .collect();
    Ok(p.substitute(&map))
}

/// `lift#1 p lift#2`.
pub fn sat_lift(p: &Polynomial) -> Polynomial {
    let mut word = alloc::vec![Symbol::var("lift#1")];
    word.extend(p.symbols().iter().cloned());
    word.push(Symbol::var("lift#2"));
    Polynomial::new(word).expect("nonempty")
}

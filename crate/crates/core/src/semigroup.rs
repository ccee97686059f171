//! Rees matrix semigroups `𝓜(G, M)` and their extensions by an identity.

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::matrix::StructureMatrix;
use crate::poly::{Evaluation, Polynomial, Symbol};

/// An element of a Rees matrix semigroup, or the adjoined identity.
///
/// `i` is a column index (in `I`), `lambda` a row index (in `Λ`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Element {
    Zero,
    Triple { i: usize, g: usize, lambda: usize },
    One,
}

impl Element {
    /// The combinatorial element `[i, λ]`.
    pub const fn pair(i: usize, lambda: usize) -> Self {
        Element::Triple { i, g: 0, lambda }
    }

    pub const fn triple(i: usize, g: usize, lambda: usize) -> Self {
        Element::Triple { i, g, lambda }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Element::Zero)
    }

    /// First coordinate `s₁ = i` of a triple.
    pub fn first(&self) -> Option<usize> {
        match *self {
            Element::Triple { i, .. } => Some(i),
            _ => None,
        }
    }

    /// Second coordinate `s₂ = λ` of a triple.
    pub fn second(&self) -> Option<usize> {
        match *self {
            Element::Triple { lambda, .. } => Some(lambda),
            _ => None,
        }
    }

    pub fn group_part(&self) -> Option<usize> {
        match *self {
            Element::Triple { g, .. } => Some(g),
            _ => None,
        }
    }

    /// `[i, g, λ]ᵀ = [λ, g, i]`.
    pub fn transpose(&self) -> Self {
        match *self {
            Element::Triple { i, g, lambda } => Element::Triple {
                i: lambda,
                g,
                lambda: i,
            },
            other => other,
        }
    }

    /// Drops the group coordinate.
    pub fn shadow(&self) -> Self {
        match *self {
            Element::Triple { i, lambda, .. } => Element::pair(i, lambda),
            other => other,
        }
    }
}

impl fmt::Display for Element {
    /// `0`, `1`, `[i,λ]` when `g` is the identity, `[i,g,λ]` otherwise; all
    /// indices 1-based.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Element::Zero => f.write_str("0"),
            Element::One => f.write_str("1"),
            Element::Triple { i, g: 0, lambda } => write!(f, "[{},{}]", i + 1, lambda + 1),
            Element::Triple { i, g, lambda } => {
                write!(f, "[{},{},{}]", i + 1, g + 1, lambda + 1)
            }
        }
    }
}

/// The semigroup `𝓜(G, M)`, optionally with an identity adjoined (`S¹`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReesSemigroup {
    matrix: StructureMatrix,
    group: FiniteGroup,
    has_identity: bool,
}

impl ReesSemigroup {
    /// Semigroups up to this order are checked for associativity by
    /// [`Self::check_associative`] in tests and by the CLI.
    pub const ASSOCIATIVITY_CHECK_BOUND: usize = 200;

    /// Builds `𝓜(G, M)`. `M` must be regular with entries in `G`.
    pub fn new(group: FiniteGroup, matrix: StructureMatrix) -> Result<Self> {
        for r in 0..matrix.rows() {
            for c in 0..matrix.cols() {
                if let Some(g) = matrix.get(r, c) {
                    if g >= group.order() {
                        return Err(Error::EntryOutOfRange {
                            row: r + 1,
                            col: c + 1,
                            entry: g + 1,
                            order: group.order(),
                        });
                    }
                }
            }
        }
        matrix.check_regular()?;
        Ok(ReesSemigroup {
            matrix,
            group,
            has_identity: false,
        })
    }

    /// The combinatorial semigroup `S_M` over the trivial group.
    pub fn combinatorial(matrix: StructureMatrix) -> Result<Self> {
        if !matrix.is_zero_one(0) {
            return Err(Error::NotZeroOne);
        }
        Self::new(FiniteGroup::trivial(), matrix)
    }

    /// `S¹`. Idempotent.
    pub fn with_identity(mut self) -> Self {
        self.has_identity = true;
        self
    }

    /// `S` with any adjoined identity removed.
    pub fn without_identity(mut self) -> Self {
        self.has_identity = false;
        self
    }

    pub fn matrix(&self) -> &StructureMatrix {
        &self.matrix
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn has_identity(&self) -> bool {
        self.has_identity
    }

    pub fn is_combinatorial(&self) -> bool {
        self.group.is_trivial()
    }

    /// `n = |I|`.
    pub fn cols(&self) -> usize {
        self.matrix.cols()
    }

    /// `m = |Λ|`.
    pub fn rows(&self) -> usize {
        self.matrix.rows()
    }

    /// `|S| = m·n·|G| + 1`, plus one with an identity.
    pub fn order(&self) -> usize {
        self.nonzero_count() + 1 + usize::from(self.has_identity)
    }

    /// Number of triples, `m·n·|G|`.
    pub fn nonzero_count(&self) -> usize {
        self.rows() * self.cols() * self.group.order()
    }

    pub fn contains(&self, e: &Element) -> bool {
        match *e {
            Element::Zero => true,
            Element::One => self.has_identity,
            Element::Triple { i, g, lambda } => {
                i < self.cols() && lambda < self.rows() && g < self.group.order()
            }
        }
    }

    fn check(&self, e: &Element) -> Result<()> {
        if self.contains(e) {
            Ok(())
        } else {
            Err(Error::InvalidElement(e.to_string()))
        }
    }

    /// The product `ab`, after validating both operands.
    pub fn multiply(&self, a: &Element, b: &Element) -> Result<Element> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul(a, b))
    }

    /// The product `ab`; operands are assumed to belong to `self`.
    #[inline]
    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        match (*a, *b) {
            (Element::Zero, _) | (_, Element::Zero) => Element::Zero,
            (Element::One, x) | (x, Element::One) => x,
            (
                Element::Triple { i, g, lambda },
                Element::Triple {
                    i: j,
                    g: h,
                    lambda: gamma,
                },
            ) => match self.matrix.get(lambda, j) {
                None => Element::Zero,
                Some(m) => Element::Triple {
                    i,
                    g: self.group.mul(self.group.mul(g, m), h),
                    lambda: gamma,
                },
            },
        }
    }

    /// Left-to-right product of a nonempty sequence.
    pub fn product<'a>(&self, elements: impl IntoIterator<Item = &'a Element>) -> Option<Element> {
        let mut it = elements.into_iter();
        let first = *it.next()?;
        Some(it.fold(first, |acc, x| self.mul(&acc, x)))
    }

    /// `e(p)`: substitutes `e` into `p` and multiplies out.
    pub fn evaluate(&self, p: &Polynomial, e: &Evaluation) -> Result<Element> {
        let mut acc: Option<Element> = None;
        for sym in p.symbols() {
            let value = match sym {
                Symbol::Const(c) => *c,
                Symbol::Var(v) => {
                    let x = *e
                        .get(v)
                        .ok_or_else(|| Error::MissingAssignment(v.to_string()))?;
                    self.check(&x)?;
                    x
                }
            };
            acc = Some(match acc {
                None => value,
                Some(a) => self.mul(&a, &value),
            });
        }
        acc.ok_or(Error::EmptyWord)
    }

    /// All triples, in the order `(i, g, λ)` lexicographic.
    pub fn nonzero_elements(&self) -> impl Iterator<Item = Element> + '_ {
        let (n, k, m) = (self.cols(), self.group.order(), self.rows());
        (0..n).flat_map(move |i| {
            (0..k).flat_map(move |g| (0..m).map(move |lambda| Element::Triple { i, g, lambda }))
        })
    }

    /// Every element: `0`, the triples, then `1` if adjoined. The position of
    /// an element in this list is its [`Self::index_of`].
    pub fn elements(&self) -> Vec<Element> {
        let mut out = Vec::with_capacity(self.order());
        out.push(Element::Zero);
        out.extend(self.nonzero_elements());
        if self.has_identity {
            out.push(Element::One);
        }
        out
    }

    /// Position of `e` in [`Self::elements`].
    pub fn index_of(&self, e: &Element) -> Option<usize> {
        if !self.contains(e) {
            return None;
        }
        Some(match *e {
            Element::Zero => 0,
            Element::One => self.nonzero_count() + 1,
            Element::Triple { i, g, lambda } => {
                1 + (i * self.group.order() + g) * self.rows() + lambda
            }
        })
    }

    /// The combinatorial quotient `S/H` over the shadow of `M`.
    pub fn h_quotient(&self) -> ReesSemigroup {
        ReesSemigroup {
            matrix: self.matrix.shadow(),
            group: FiniteGroup::trivial(),
            has_identity: self.has_identity,
        }
    }

    /// The semigroup over `Mᵀ`; [`Element::transpose`] is an
    /// anti-isomorphism onto it when `G` is abelian.
    pub fn transpose(&self) -> ReesSemigroup {
        ReesSemigroup {
            matrix: self.matrix.transpose(),
            group: self.group.clone(),
            has_identity: self.has_identity,
        }
    }

    /// The full multiplication table.
    pub fn cayley(&self) -> CayleyTable {
        let elements = self.elements();
        let order = elements.len();
        let mut table = Vec::with_capacity(order * order);
        for a in &elements {
            for b in &elements {
                let c = self.mul(a, b);
                table.push(self.index_of(&c).expect("closed under products"));
            }
        }
        CayleyTable { order, table }
    }

    /// Exhaustive `(ab)c = a(bc)` check; refuses above
    /// [`Self::ASSOCIATIVITY_CHECK_BOUND`].
    pub fn check_associative(&self) -> Result<()> {
        let t = self.cayley();
        if t.order() > Self::ASSOCIATIVITY_CHECK_BOUND {
            return Err(Error::BudgetExceeded {
                needed: (t.order() as u128).pow(3),
                budget: (Self::ASSOCIATIVITY_CHECK_BOUND as u64).pow(3),
            });
        }
        if t.is_associative() {
            Ok(())
        } else {
            Err(Error::Precondition(format!(
                "multiplication over {} is not associative",
                self.group.name()
            )))
        }
    }
}

/// A finite magma on `0..order` given by its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleyTable {
    order: usize,
    table: Vec<usize>,
}

impl CayleyTable {
    pub fn new(order: usize, table: Vec<usize>) -> Result<Self> {
        if table.len() != order * order {
            return Err(Error::ShapeMismatch {
                expected: order * order,
                found: table.len(),
            });
        }
        if table.iter().any(|&c| c >= order) {
            return Err(Error::Precondition("table entry out of range".into()));
        }
        Ok(CayleyTable { order, table })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn is_associative(&self) -> bool {
        let n = self.order;
        (0..n).all(|a| {
            (0..n).all(|b| {
                let ab = self.mul(a, b);
                (0..n).all(|c| self.mul(ab, c) == self.mul(a, self.mul(b, c)))
            })
        })
    }

    /// An element `z` with `zx = xz = z` for all `x`.
    pub fn zero(&self) -> Option<usize> {
        (0..self.order).find(|&z| (0..self.order).all(|x| self.mul(z, x) == z && self.mul(x, z) == z))
    }

    /// An element `e` with `ex = xe = x` for all `x`.
    pub fn identity(&self) -> Option<usize> {
        (0..self.order).find(|&e| (0..self.order).all(|x| self.mul(e, x) == x && self.mul(x, e) == x))
    }

    /// `T¹`: a new neutral element with index `order`.
    pub fn adjoin_identity(&self) -> CayleyTable {
        self.adjoin(|x, _| x, |_, y| y)
    }

    /// `T⁰`: a new absorbing element with index `order`.
    pub fn adjoin_zero(&self) -> CayleyTable {
        let z = self.order;
        self.adjoin(move |_, _| z, move |_, _| z)
    }

    fn adjoin(
        &self,
        left: impl Fn(usize, usize) -> usize,
        right: impl Fn(usize, usize) -> usize,
    ) -> CayleyTable {
        let n = self.order + 1;
        let new = self.order;
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                table.push(if a == new && b == new {
                    new
                } else if a == new {
                    right(a, b)
                } else if b == new {
                    left(a, b)
                } else {
                    self.mul(a, b)
                });
            }
        }
        CayleyTable { order: n, table }
    }
}

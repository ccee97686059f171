//! Finite groups given by explicit Cayley tables.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// A finite group on the indices `0..order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
    associativity_checked: bool,
}

impl FiniteGroup {
    /// Tables up to this order are checked for associativity at construction.
    pub const ASSOCIATIVITY_CHECK_BOUND: usize = 64;

    /// Builds a group from a Cayley table, `table[a][b] = a·b`.
    ///
    /// The table must be a Latin square whose first row and column are the
    /// identity, so index `0` is always the neutral element. Associativity
    /// is verified exhaustively when the order is at most
    /// [`Self::ASSOCIATIVITY_CHECK_BOUND`] and trusted otherwise; see
    /// [`Self::associativity_checked`].
    pub fn from_table(name: impl Into<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let order = table.len();
        if order == 0 {
            return Err(Error::InvalidGroup("empty table".to_string()));
        }
        let mut flat = Vec::with_capacity(order * order);
        for (a, row) in table.iter().enumerate() {
            if row.len() != order {
                return Err(Error::InvalidGroup(format!(
                    "row {} has {} entries, expected {}",
                    a + 1,
                    row.len(),
                    order
                )));
            }
            let mut seen = alloc::vec![false; order];
            for &c in row {
                if c >= order || seen[c] {
                    return Err(Error::InvalidGroup(format!(
                        "row {} is not a permutation",
                        a + 1
                    )));
                }
                seen[c] = true;
            }
            flat.extend_from_slice(row);
        }
        for b in 0..order {
            let mut seen = alloc::vec![false; order];
            for a in 0..order {
                let c = flat[a * order + b];
                if seen[c] {
                    return Err(Error::InvalidGroup(format!(
                        "column {} is not a permutation",
                        b + 1
                    )));
                }
                seen[c] = true;
            }
        }
        let identity = 0;
        if !(0..order).all(|a| flat[a] == a && flat[a * order] == a) {
            return Err(Error::InvalidGroup(
                "element 1 is not the identity".to_string(),
            ));
        }
        let mut inverse = Vec::with_capacity(order);
        for a in 0..order {
            // Latin square rows guarantee a unique right inverse.
            let b = (0..order)
                .find(|&b| flat[a * order + b] == identity)
                .ok_or_else(|| Error::InvalidGroup(format!("element {} has no inverse", a + 1)))?;
            if flat[b * order + a] != identity {
                return Err(Error::InvalidGroup(format!(
                    "element {} has no two-sided inverse",
                    a + 1
                )));
            }
            inverse.push(b);
        }
        let associativity_checked = order <= Self::ASSOCIATIVITY_CHECK_BOUND;
        if associativity_checked {
            for a in 0..order {
                for b in 0..order {
                    let ab = flat[a * order + b];
                    for c in 0..order {
                        let bc = flat[b * order + c];
                        if flat[ab * order + c] != flat[a * order + bc] {
                            return Err(Error::InvalidGroup(format!(
                                "not associative at ({}, {}, {})",
                                a + 1,
                                b + 1,
                                c + 1
                            )));
                        }
                    }
                }
            }
        }
        Ok(FiniteGroup {
            name: name.into(),
            order,
            table: flat,
            identity,
            inverse,
            associativity_checked,
        })
    }

    pub fn trivial() -> Self {
        Self::cyclic(1).expect("order 1 is valid")
    }

    /// The additive group of integers mod `n`; index `k` is the residue `k`.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGroup("cyclic group of order 0".to_string()));
        }
        let table = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        let name = if n == 1 {
            "trivial".to_string()
        } else {
            format!("Z{}", n)
        };
        Self::from_table(name, table)
    }

    /// The multiplicative group of GF(p); index `k` is the residue `k + 1`.
    pub fn units_mod(p: u64) -> Result<Self> {
        if !crate::field::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let n = (p - 1) as usize;
        let table = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| ((((a as u64) + 1) * ((b as u64) + 1)) % p - 1) as usize)
                    .collect()
            })
            .collect();
        Self::from_table(format!("GF{}*", p), table)
    }

    /// Looks up a group by the names used in matrix files: `trivial`, `Z<n>`
    /// and `GF<p>*` (also written `F<p>*`).
    pub fn by_name(name: &str) -> Result<Self> {
        let bad = || Error::InvalidGroup(format!("unknown group name `{}`", name));
        if name == "trivial" || name == "1" {
            return Ok(Self::trivial());
        }
        if let Some(rest) = name.strip_prefix('Z') {
            let n: usize = rest.parse().map_err(|_| bad())?;
            return Self::cyclic(n);
        }
        let rest = name
            .strip_prefix("GF")
            .or_else(|| name.strip_prefix('F'))
            .ok_or_else(bad)?;
        let rest = rest.strip_suffix('*').ok_or_else(bad)?;
        let p: u64 = rest.parse().map_err(|_| bad())?;
        Self::units_mod(p)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Always `0`.
    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// False when the table was too large to check and associativity is assumed.
    pub fn associativity_checked(&self) -> bool {
        self.associativity_checked
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Left-to-right product of a sequence of elements.
    pub fn product(&self, elements: impl IntoIterator<Item = usize>) -> usize {
        elements
            .into_iter()
            .fold(self.identity, |acc, g| self.mul(acc, g))
    }

    /// Smallest `t ≥ 1` with `g^t = 1` for every element.
    pub fn exponent(&self) -> usize {
        (1..=self.order)
            .find(|&t| {
                (0..self.order).all(|g| {
                    let mut acc = self.identity;
                    for _ in 0..t {
                        acc = self.mul(acc, g);
                    }
                    acc == self.identity
                })
            })
            .unwrap_or(self.order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn cyclic_groups_satisfy_the_laws() {
        let z4 = FiniteGroup::cyclic(4).unwrap();
        assert_eq!(z4.identity(), 0);
        assert_eq!(z4.mul(3, 2), 1);
        assert_eq!(z4.inverse(1), 3);
        assert_eq!(z4.exponent(), 4);
        assert!(z4.is_abelian());
        assert!(z4.associativity_checked());
    }

    #[test]
    fn units_of_gf5() {
        let g = FiniteGroup::units_mod(5).unwrap();
        assert_eq!(g.order(), 4);
        // residues 2·3 = 6 = 1
        assert_eq!(g.mul(1, 2), 0);
        assert_eq!(g.identity(), 0);
        assert_eq!(g.name(), "GF5*");
        assert!(FiniteGroup::units_mod(6).is_err());
    }

    #[test]
    fn rejects_bad_tables() {
        assert!(FiniteGroup::from_table("x", vec![vec![0, 1], vec![0, 1]]).is_err());
        assert!(FiniteGroup::from_table("x", vec![vec![1, 0], vec![0, 1]]).is_err());
        assert!(FiniteGroup::from_table("x", vec![]).is_err());
        // a Latin square with identity 0 that is not associative
        let loop5 = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(
            FiniteGroup::from_table("loop", loop5),
            Err(Error::InvalidGroup(_))
        ));
    }

    #[test]
    fn names_round_trip() {
        for name in ["trivial", "Z2", "Z3", "GF3*", "GF7*"] {
            assert_eq!(FiniteGroup::by_name(name).unwrap().name(), name);
        }
        assert_eq!(FiniteGroup::by_name("F5*").unwrap().name(), "GF5*");
        assert!(FiniteGroup::by_name("S3").is_err());
    }

    #[test]
    fn symmetric_group_is_not_abelian() {
        // S3 with elements e, r, r², s, sr, sr²
        let compose = |a: [usize; 3], b: [usize; 3]| [a[b[0]], a[b[1]], a[b[2]]];
        let perms = [
            [0, 1, 2],
            [1, 2, 0],
            [2, 0, 1],
            [1, 0, 2],
            [0, 2, 1],
            [2, 1, 0],
        ];
        let idx = |p: [usize; 3]| perms.iter().position(|&q| q == p).unwrap();
        let table = perms
            .iter()
            .map(|&a| perms.iter().map(|&b| idx(compose(a, b))).collect())
            .collect();
        let s3 = FiniteGroup::from_table("S3", table).unwrap();
        assert!(!s3.is_abelian());
        assert_eq!(s3.exponent(), 6);
    }
}

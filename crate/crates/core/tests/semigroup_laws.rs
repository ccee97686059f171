//! Rees products: associativity, 0-simplicity, zero words, endpoint
//! coordinates, and the isomorphisms given by permuting and rescaling lines.

use proptest::prelude::*;
use rees_core::{Element, FiniteGroup, Polynomial, ReesSemigroup, StructureMatrix, Symbol};

fn regular_01(rows: usize, cols: usize, bits: u32) -> Option<StructureMatrix> {
    let m = StructureMatrix::from_fn(rows, cols, |r, c| bits >> (r * cols + c) & 1 == 1).ok()?;
    m.check_regular().is_ok().then_some(m)
}

/// A regular matrix over `Z_k` with entries drawn from `seed`.
fn regular_group_matrix(rows: usize, cols: usize, k: usize, seed: u64) -> Option<StructureMatrix> {
    let mut x = seed;
    let mut entries = Vec::new();
    for _ in 0..rows * cols {
        x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        let r = (x >> 33) as usize % (k + 1);
        entries.push(r.checked_sub(1));
    }
    let m = StructureMatrix::new(rows, cols, entries).ok()?;
    m.check_regular().is_ok().then_some(m)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn products_are_associative(rows in 1usize..4, cols in 1usize..4, k in 1usize..4, seed in any::<u64>(), identity in any::<bool>()) {
        if let Some(m) = regular_group_matrix(rows, cols, k, seed) {
            let mut s = ReesSemigroup::new(FiniteGroup::cyclic(k).unwrap(), m).unwrap();
            if identity {
                s = s.with_identity();
            }
            prop_assert!(s.order() <= ReesSemigroup::ASSOCIATIVITY_CHECK_BOUND);
            prop_assert!(s.check_associative().is_ok());
            prop_assert!(s.cayley().is_associative());
        }
    }

    #[test]
    fn zero_words_have_a_zero_adjacent_pair(bits in any::<u32>(), word in prop::collection::vec(0usize..10, 1..7)) {
        if let Some(m) = regular_01(3, 3, bits & 0x1ff) {
            let s = ReesSemigroup::combinatorial(m).unwrap();
            let els: Vec<Element> = s.nonzero_elements().collect();
            let seq: Vec<Element> = word.iter().map(|&k| els[k % els.len()]).collect();
            let product = s.product(seq.iter()).unwrap();
            let adjacent_zero = seq.windows(2).any(|w| s.mul(&w[0], &w[1]).is_zero());
            prop_assert_eq!(product.is_zero(), adjacent_zero);
            if !product.is_zero() {
                prop_assert_eq!(product.first(), seq[0].first());
                prop_assert_eq!(product.second(), seq[seq.len() - 1].second());
            }
        }
    }
}

fn small_semigroups() -> Vec<ReesSemigroup> {
    let mut out = Vec::new();
    for (rows, cols) in [(1, 1), (2, 2), (2, 3), (3, 3)] {
        for bits in 0..(1u32 << (rows * cols)) {
            if let Some(m) = regular_01(rows, cols, bits) {
                out.push(ReesSemigroup::combinatorial(m).unwrap());
            }
        }
    }
    let z2 = FiniteGroup::cyclic(2).unwrap();
    out.push(ReesSemigroup::new(z2.clone(), StructureMatrix::hollow(3).unwrap()).unwrap());
    out.push(ReesSemigroup::new(z2, StructureMatrix::new(2, 2, vec![Some(0), Some(1), Some(0), None]).unwrap()).unwrap());
    out
}

#[test]
fn nonzero_elements_generate_each_other() {
    for s in small_semigroups() {
        let els: Vec<Element> = s.nonzero_elements().collect();
        for a in &els {
            for t in &els {
                let found = els.iter().any(|u| els.iter().any(|v| s.mul(&s.mul(u, a), v) == *t));
                assert!(found, "{} to {} in {}", a, t, s.matrix().pattern());
            }
        }
    }
}

#[test]
fn identity_and_zero_laws() {
    for s in small_semigroups() {
        let s1 = s.clone().with_identity();
        assert_eq!(s1.order(), s.order() + 1);
        for a in s1.elements() {
            assert_eq!(s1.mul(&Element::One, &a), a);
            assert_eq!(s1.mul(&a, &Element::One), a);
            assert!(s1.mul(&Element::Zero, &a).is_zero());
            assert!(s1.mul(&a, &Element::Zero).is_zero());
        }
    }
}

#[test]
fn transpose_reverses_products() {
    for s in small_semigroups().into_iter().filter(|s| s.group().is_abelian()) {
        let t = s.transpose();
        for a in s.elements() {
            for b in s.elements() {
                assert_eq!(s.mul(&a, &b).transpose(), t.mul(&b.transpose(), &a.transpose()));
            }
        }
    }
}

#[test]
fn line_permutations_are_isomorphisms() {
    let m = StructureMatrix::new(2, 3, vec![Some(0), None, Some(1), Some(1), Some(0), None]).unwrap();
    let z2 = FiniteGroup::cyclic(2).unwrap();
    let s = ReesSemigroup::new(z2.clone(), m.clone()).unwrap();
    let (rp, cp) = ([1, 0], [2, 0, 1]);
    let l = ReesSemigroup::new(z2, m.permuted(&rp, &cp).unwrap()).unwrap();
    let phi = |e: &Element| match *e {
        Element::Triple { i, g, lambda } => Element::triple(cp[i], g, rp[lambda]),
        other => other,
    };
    for a in s.elements() {
        for b in s.elements() {
            assert_eq!(phi(&s.mul(&a, &b)), l.mul(&phi(&a), &phi(&b)));
        }
    }
}

/// Multiplying row `α` of `M` on the left by `g` gives an isomorphic
/// semigroup via `[i, h, α] ↦ [i, h g⁻¹, α]`; columns are symmetric with
/// `[r, h, λ] ↦ [r, g⁻¹ h, λ]`.
#[test]
fn line_rescalings_are_isomorphisms() {
    let z3 = FiniteGroup::cyclic(3).unwrap();
    let m = StructureMatrix::new(2, 2, vec![Some(0), Some(1), Some(2), Some(0)]).unwrap();
    let s = ReesSemigroup::new(z3.clone(), m.clone()).unwrap();
    let g = 1;
    let gi = z3.inverse(g);
    let scaled = |row: Option<usize>, col: Option<usize>| {
        let mut entries = m.entries().to_vec();
        for r in 0..2 {
            for c in 0..2 {
                if let Some(x) = entries[r * 2 + c] {
                    if row == Some(r) {
                        entries[r * 2 + c] = Some(z3.mul(g, x));
                    }
                    if col == Some(c) {
                        entries[r * 2 + c] = Some(z3.mul(x, g));
                    }
                }
            }
        }
        ReesSemigroup::new(z3.clone(), StructureMatrix::new(2, 2, entries).unwrap()).unwrap()
    };
    let is_iso = |l: &ReesSemigroup, phi: &dyn Fn(&Element) -> Element| {
        s.elements()
            .iter()
            .all(|a| s.elements().iter().all(|b| phi(&s.mul(a, b)) == l.mul(&phi(a), &phi(b))))
    };
    let by_row = scaled(Some(0), None);
    let row_map = |e: &Element| match *e {
        Element::Triple { i, g: h, lambda: 0 } => Element::triple(i, z3.mul(h, gi), 0),
        other => other,
    };
    assert!(is_iso(&by_row, &row_map));
    // with `h g` in place of `h g⁻¹` the map is not a homomorphism once g² ≠ 1
    let naive = |e: &Element| match *e {
        Element::Triple { i, g: h, lambda: 0 } => Element::triple(i, z3.mul(h, g), 0),
        other => other,
    };
    assert!(!is_iso(&by_row, &naive));
    let by_col = scaled(None, Some(1));
    let col_map = |e: &Element| match *e {
        Element::Triple { i: 1, g: h, lambda } => Element::triple(1, z3.mul(gi, h), lambda),
        other => other,
    };
    assert!(is_iso(&by_col, &col_map));
}

#[test]
fn h_quotient_is_a_homomorphic_image() {
    for s in small_semigroups().into_iter().filter(|s| !s.is_combinatorial()) {
        let q = s.h_quotient();
        assert!(q.is_combinatorial());
        for a in s.elements() {
            for b in s.elements() {
                assert_eq!(s.mul(&a, &b).shadow(), q.mul(&a.shadow(), &b.shadow()));
            }
        }
    }
}

#[test]
fn evaluation_examples() {
    let h3 = ReesSemigroup::combinatorial(StructureMatrix::hollow(3).unwrap()).unwrap();
    assert_eq!(h3.multiply(&Element::pair(0, 1), &Element::pair(0, 2)).unwrap(), Element::pair(0, 2));
    assert!(h3.multiply(&Element::pair(0, 0), &Element::pair(0, 1)).unwrap().is_zero());
    assert!(h3.multiply(&Element::pair(3, 0), &Element::pair(0, 1)).is_err());
    let p = Polynomial::new(vec![Symbol::var("x"), Symbol::var("y")]).unwrap();
    let e = [("x".into(), Element::pair(0, 1)), ("y".into(), Element::pair(2, 0))].into_iter().collect();
    assert_eq!(h3.evaluate(&p, &e).unwrap(), Element::pair(0, 0));
    let i2 = ReesSemigroup::combinatorial(StructureMatrix::identity(2).unwrap()).unwrap().with_identity();
    let e1 = [("x".into(), Element::One)].into_iter().collect();
    assert_eq!(i2.evaluate(&Polynomial::var("x"), &e1).unwrap(), Element::One);
    assert!(i2.evaluate(&p, &e1).is_err());
}

#[test]
fn non_associative_tables_are_rejected() {
    // a loop of order 5 with identity 0 that is not a group
    let table = vec![
        vec![0, 1, 2, 3, 4],
        vec![1, 0, 3, 4, 2],
        vec![2, 4, 0, 1, 3],
        vec![3, 2, 4, 0, 1],
        vec![4, 3, 1, 2, 0],
    ];
    assert!(FiniteGroup::from_table("loop", table).is_err());
}

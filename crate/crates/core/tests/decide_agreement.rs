//! Fast decision procedures against the brute-force oracle, plus worked
//! examples and witness checks.

mod common;

use std::sync::OnceLock;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rees_core::analysis::{classify, is_totally_balanced, MatrixClass};
use rees_core::decide::{brute_eq, brute_sat, brute_zero, brute_zset_eq, Decider, Method, Outcome, Verdict};
use rees_core::graphs::{Side, Vertex};
use rees_core::{Element, Error, Polynomial, ReesSemigroup, StructureMatrix, Variable};

const BUDGET: u64 = 10_000_000;

fn s_of(m: &StructureMatrix, identity: bool) -> ReesSemigroup {
    let s = ReesSemigroup::combinatorial(m.clone()).unwrap();
    if identity {
        s.with_identity()
    } else {
        s
    }
}

fn consts(s: &ReesSemigroup) -> Vec<Element> {
    s.nonzero_elements().filter(|e| *e != Element::One).collect()
}

/// Checks that a verdict's witness shows what the verdict claims.
fn certify(s: &ReesSemigroup, v: &Verdict, p: &Polynomial, q: Option<&Polynomial>, target: Option<&Element>) {
    let eval = |w: &Polynomial, e| s.evaluate(w, e).unwrap();
    match (&v.outcome, q, target) {
        (Outcome::NotEqual(e), Some(q), _) if v.explanation.iter().any(|l| l.contains("zero on")) => {
            assert_ne!(eval(p, e).is_zero(), eval(q, e).is_zero());
        }
        (Outcome::NotEqual(e), Some(q), _) => assert_ne!(eval(p, e), eval(q, e), "{} vs {}", p, q),
        (Outcome::NotZero(e), _, _) => assert!(!eval(p, e).is_zero()),
        (Outcome::Sat(e), _, Some(b)) => assert_eq!(&eval(p, e), b),
        _ => {}
    }
}

/// Runs every polynomial procedure on `(p, q)` and compares with the oracle.
fn agree(s: &ReesSemigroup, p: &Polynomial, q: &Polynomial, target: &Element) -> Result<(), TestCaseError> {
    let d = Decider::new(s);
    let zero = d.pol_zero(p).unwrap();
    prop_assert_eq!(zero.outcome.kind(), brute_zero(s, p, BUDGET).unwrap().outcome.kind(), "pol_zero {}", p);
    certify(s, &zero, p, None, None);
    let zset = d.pol_zset_eq(p, q).unwrap();
    prop_assert_eq!(zset.outcome.kind(), brute_zset_eq(s, p, q, BUDGET).unwrap().outcome.kind(), "zset {} | {}", p, q);
    if let Outcome::NotEqual(e) = &zset.outcome {
        prop_assert_ne!(s.evaluate(p, e).unwrap().is_zero(), s.evaluate(q, e).unwrap().is_zero());
    }
    let eq = d.pol_eq(p, q).unwrap();
    prop_assert_eq!(eq.outcome.kind(), brute_eq(s, p, q, BUDGET).unwrap().outcome.kind(), "pol_eq {} | {}", p, q);
    certify(s, &eq, p, Some(q), None);
    let sat = d.pol_sat(p, target).unwrap();
    prop_assert_eq!(sat.outcome.kind(), brute_sat(s, p, target, BUDGET).unwrap().outcome.kind(), "sat {} = {}", p, target);
    certify(s, &sat, p, None, Some(target));
    for v in [&zero, &zset, &eq, &sat] {
        prop_assert!(v.method.is_fast(), "{:?}", v);
    }
    Ok(())
}

/// Totally balanced matrices up to 3 × 3 (one per permutation class), plus
/// some 3 × 4 and 4 × 4 shapes with duplicate lines.
fn tb_pool() -> &'static [StructureMatrix] {
    static POOL: OnceLock<Vec<StructureMatrix>> = OnceLock::new();
    POOL.get_or_init(|| {
        let mut pool: Vec<StructureMatrix> =
            common::regular_matrices(3, 3).into_iter().filter(is_totally_balanced).collect();
        pool.push(StructureMatrix::from_01(&[[1, 1, 0, 0], [1, 1, 0, 0], [0, 0, 1, 1]]).unwrap());
        pool.push(StructureMatrix::from_01(&[[1, 0, 0, 1], [0, 1, 0, 0], [1, 0, 0, 1], [0, 0, 1, 0]]).unwrap());
        pool.push(StructureMatrix::identity(4).unwrap());
        pool
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(160))]

    #[test]
    fn totally_balanced_procedures_match_brute_force(k in any::<prop::sample::Index>(), identity in any::<bool>(), seed in any::<u64>()) {
        let pool = tb_pool();
        {
            let m = k.get(pool);
            prop_assert!(is_totally_balanced(m), "pool");
            let s = s_of(m, identity);
            let cs = consts(&s);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let p = common::random_polynomial(&mut rng, &["x", "y"], &cs, 6);
            let q = common::random_polynomial(&mut rng, &["x", "y"], &cs, 6);
            let elements = s.elements();
            let target = &elements[seed as usize % elements.len()];
            agree(&s, &p, &q, target)?;
        }
    }

    #[test]
    fn bordered_procedures_match_brute_force(identity in any::<bool>(), seed in any::<u64>()) {
        let m = StructureMatrix::identity(2).unwrap().border();
        prop_assert!(matches!(classify(&m), MatrixClass::Bordered { .. }), "class");
        let s = s_of(&m, identity);
        let cs = consts(&s);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = common::random_polynomial(&mut rng, &["x", "y"], &cs, 5);
        let q = common::random_polynomial(&mut rng, &["x", "y"], &cs, 5);
        let elements = s.elements();
        agree(&s, &p, &q, &elements[seed as usize % elements.len()])?;
    }
}

#[test]
fn term_examples() {
    let i2 = s_of(&StructureMatrix::identity(2).unwrap(), false);
    let t = |w: &str| Polynomial::parse_term(w).unwrap();
    assert_eq!(Decider::new(&i2).term_eq(&t("x^2 y^2"), &t("y^2 x^2")).unwrap().outcome, Outcome::Equal);

    let h3 = s_of(&StructureMatrix::hollow(3).unwrap(), false);
    let v = Decider::new(&h3).term_eq(&t("x y"), &t("y x")).unwrap();
    assert!(matches!(v.outcome, Outcome::NotEqual(_)));
    certify(&h3, &v, &t("x y"), Some(&t("y x")), None);
    let e = [(Variable::new("x"), Element::pair(0, 0)), (Variable::new("y"), Element::pair(1, 0))].into_iter().collect();
    assert_eq!(h3.evaluate(&t("x y"), &e).unwrap(), Element::pair(0, 0));
    assert!(h3.evaluate(&t("y x"), &e).unwrap().is_zero());

    let j11 = s_of(&StructureMatrix::all_ones(1, 1).unwrap(), false);
    let v = Decider::new(&j11).term_eq(&t("x y"), &t("y x")).unwrap();
    assert_eq!((v.outcome, v.method), (Outcome::Equal, Method::AllOnes));

    let i2_1 = s_of(&StructureMatrix::identity(2).unwrap(), true);
    let v = Decider::new(&i2_1).term_eq_s1(&t("x y x"), &t("x^2 y")).unwrap();
    certify(&i2_1, &v, &t("x y x"), Some(&t("x^2 y")), None);
    assert!(!v.is_positive());
    assert!(Decider::new(&i2_1).term_eq_s1(&t("x y x"), &t("x y x")).unwrap().is_positive());

    let h3_1 = s_of(&StructureMatrix::hollow(3).unwrap(), true);
    let p = t("x y z x");
    assert!(Decider::new(&h3_1).term_eq_s1(&p, &p).unwrap().is_positive());

    let j22_1 = s_of(&StructureMatrix::all_ones(2, 2).unwrap(), true);
    let v = Decider::new(&j22_1).term_eq_s1(&t("x y"), &t("x z y")).unwrap();
    let Outcome::NotEqual(w) = &v.outcome else { panic!("{:?}", v) };
    assert!(w[&Variable::new("z")].is_zero());
    assert!(matches!(v.method, Method::AllOnes | Method::Syntactic));
}

#[test]
fn polynomial_examples() {
    let i2 = s_of(&StructureMatrix::identity(2).unwrap(), false);
    let d = Decider::new(&i2);
    let p = |w: &str| Polynomial::parse(w, &i2).unwrap();

    assert_eq!(d.pol_zero(&p("[1,1] x [2,2] x [1,1]")).unwrap().outcome, Outcome::Zero);
    assert!(matches!(d.pol_zero(&p("[1,1] x [1,1]")).unwrap().outcome, Outcome::NotZero(_)));

    let (a, b) = (p("[1,1] u^2 [1,1]"), p("[1,1] u [1,1]"));
    assert_eq!(d.pol_zset_eq(&a, &b).unwrap().outcome, Outcome::Equal);
    assert_eq!(d.pol_eq(&a, &b).unwrap().outcome, Outcome::Equal);
    assert_eq!(brute_eq(&i2, &a, &b, BUDGET).unwrap().outcome, Outcome::Equal);
    assert!(matches!(d.pol_zset_eq(&p("x"), &p("y")).unwrap().outcome, Outcome::NotEqual(_)));
    let (x, x2) = (p("x"), p("x^2"));
    assert_eq!(d.pol_eq(&x, &x2).unwrap().outcome.kind(), brute_eq(&i2, &x, &x2, BUDGET).unwrap().outcome.kind());

    let one_two = Element::pair(0, 1);
    let v = d.pol_sat(&p("x"), &one_two).unwrap();
    assert_eq!(v.outcome.witness().unwrap()[&Variable::new("x")], one_two);
    let q = p("x [2,2] y");
    for e in i2.elements() {
        assert_eq!(d.pol_sat(&q, &e).unwrap().outcome.kind(), brute_sat(&i2, &q, &e, BUDGET).unwrap().outcome.kind());
    }
    let v = d.pol_sat(&p("x"), &Element::Zero).unwrap();
    assert!(v.outcome.witness().unwrap()[&Variable::new("x")].is_zero());
}

#[test]
fn bordered_examples() {
    let n = StructureMatrix::hollow(3).unwrap().border();
    let s = s_of(&n, false);
    let d = Decider::new(&s);
    let p = |w: &str| Polynomial::parse(w, &s).unwrap();
    let v = d.pol_zero(&p("[1,1] [1,1]")).unwrap();
    assert_eq!((v.outcome, v.method), (Outcome::Zero, Method::Bordered));
    let v = d.pol_zero(&p("[1,1] x [2,2]")).unwrap();
    let Outcome::NotZero(e) = &v.outcome else { panic!("{:?}", v) };
    assert_eq!(e[&Variable::new("x")], Element::pair(3, 3));

    let (a, b) = (p("x [1,2] y"), p("x [1,3] y"));
    let v = d.pol_zset_eq(&a, &b).unwrap();
    assert_eq!(v.method, Method::Bordered);
    assert_eq!(v.outcome.kind(), brute_zset_eq(&s, &a, &b, BUDGET).unwrap().outcome.kind());
}

#[test]
fn matchability() {
    let n = StructureMatrix::hollow(3).unwrap().border();
    let s = s_of(&n, false);
    let d = Decider::new(&s);
    let xy = Polynomial::parse_term("x y").unwrap();
    let var = |v: &str, side| Vertex::Var(Variable::new(v), side);
    let e = d.p_matchable(&xy, &var("x", Side::X), &var("y", Side::Y)).unwrap().expect("matchable");
    let (ex, ey) = (e[&Variable::new("x")], e[&Variable::new("y")]);
    assert!(!n.is_nonzero(ey.second().unwrap(), ex.first().unwrap()));
    assert!(!s.evaluate(&xy, &e).unwrap().is_zero());

    // x₁ meets every non-border row and y₂ every non-border column, so both
    // are forced onto the border
    let pinned = Polynomial::parse("[1,1] x [2,2] x [3,3] x y [1,1] y [2,2] y [3,3]", &s).unwrap();
    assert!(d.p_matchable(&pinned, &var("x", Side::X), &var("y", Side::Y)).unwrap().is_none());

    let edge = d.p_matchable(&xy, &var("y", Side::X), &var("x", Side::Y));
    assert!(matches!(edge, Err(Error::Precondition(_))));
    let i2 = s_of(&StructureMatrix::identity(2).unwrap(), false);
    let unsupported = Decider::new(&i2).p_matchable(&xy, &var("x", Side::X), &var("y", Side::Y));
    assert!(matches!(unsupported, Err(Error::Unsupported(_))));
}

#[test]
fn group_lift_example() {
    let z2 = rees_core::FiniteGroup::cyclic(2).unwrap();
    let s = ReesSemigroup::new(z2, StructureMatrix::identity(2).unwrap()).unwrap();
    assert_eq!(s.order(), 9);
    let (p, q) = (Polynomial::parse_term("x y x y").unwrap(), Polynomial::parse_term("y x y x").unwrap());
    let v = Decider::new(&s).term_eq(&p, &q).unwrap();
    assert_eq!(v.method, Method::GroupLift);
    assert_eq!(v.outcome.kind(), brute_eq(&s, &p, &q, BUDGET).unwrap().outcome.kind());
    certify(&s, &v, &p, Some(&q), None);
    assert_eq!(Decider::new(&s).term_eq(&p, &p).unwrap().outcome, Outcome::Equal);
}

#[test]
fn oracle_refuses_over_budget() {
    let s = s_of(&StructureMatrix::hollow(3).unwrap(), false);
    let p = Polynomial::parse_term("a b c d e f g h").unwrap();
    assert!(matches!(brute_zero(&s, &p, 1000), Err(Error::BudgetExceeded { .. })));
    for e in s.elements() {
        assert!(brute_sat(&s, &Polynomial::var("x"), &e, 1000).unwrap().is_positive());
    }
}

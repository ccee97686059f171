//! Parsing, printing, and substitution of polynomials.

mod common;

use std::collections::BTreeMap;

use proptest::prelude::*;
use rees_core::decide::Oracle;
use rees_core::{Element, FiniteGroup, Polynomial, ReesSemigroup, StructureMatrix, Symbol, Variable};

fn z2_hollow() -> ReesSemigroup {
    ReesSemigroup::new(FiniteGroup::cyclic(2).unwrap(), StructureMatrix::hollow(3).unwrap()).unwrap()
}

fn symbol() -> impl Strategy<Value = Symbol> {
    prop_oneof![
        prop::sample::select(vec!["x", "y", "z", "x#1", "y#2#1#3", "long_name"]).prop_map(Symbol::var),
        (0usize..3, 0usize..2, 0usize..3).prop_map(|(i, g, l)| Symbol::Const(Element::triple(i, g, l))),
    ]
}

proptest! {
    #[test]
    fn print_then_parse_is_identity(word in prop::collection::vec(symbol(), 1..12)) {
        let s = z2_hollow();
        let p = Polynomial::new(word).unwrap();
        let text = p.to_string();
        prop_assert_eq!(Polynomial::parse(&text, &s).unwrap(), p);
    }

    #[test]
    fn substitution_length_is_linear(
        word in prop::collection::vec(symbol(), 1..10),
        images in prop::collection::vec(prop::collection::vec(symbol(), 1..5), 3),
    ) {
        let p = Polynomial::new(word).unwrap();
        let map: BTreeMap<Variable, Polynomial> = ["x", "y", "z"]
            .iter()
            .zip(images)
            .map(|(v, w)| (Variable::new(*v), Polynomial::new(w).unwrap()))
            .collect();
        let longest = map.values().map(Polynomial::len).max().unwrap();
        prop_assert!(p.substitute(&map).len() <= p.len() * longest);
    }
}

#[test]
fn substitution_composes_with_evaluation() {
    let s = ReesSemigroup::combinatorial(StructureMatrix::from_01(&[[1, 1], [1, 0]]).unwrap()).unwrap().with_identity();
    let oracle = Oracle::new(&s, u64::MAX);
    let c = Element::pair(1, 0);
    let outer = common::polynomials(&["x", "y"], &[c], 3);
    let inner = common::polynomials(&["u", "v"], &[], 2);
    let uv = [Variable::new("u"), Variable::new("v")];
    for p in &outer {
        for mx in &inner {
            for my in inner.iter().step_by(3) {
                let map: BTreeMap<Variable, Polynomial> =
                    [(Variable::new("x"), mx.clone()), (Variable::new("y"), my.clone())].into_iter().collect();
                let composed = p.substitute(&map);
                oracle
                    .for_each_assignment(2, |a| {
                        let e = oracle.evaluation(&uv, a);
                        let inner_e = [
                            (Variable::new("x"), s.evaluate(mx, &e).unwrap()),
                            (Variable::new("y"), s.evaluate(my, &e).unwrap()),
                        ]
                        .into_iter()
                        .collect();
                        assert_eq!(s.evaluate(&composed, &e).unwrap(), s.evaluate(p, &inner_e).unwrap(), "{} under {}", p, composed);
                        true
                    })
                    .unwrap();
            }
        }
    }
}

#[test]
fn grammar_examples() {
    let s = z2_hollow();
    let p = Polynomial::parse("x^3 [1,2]y", &s).unwrap();
    assert_eq!(p.to_string(), "x x x [1,2] y");
    assert_eq!(p.len(), 5);
    assert!(!p.is_term());
    assert_eq!(Polynomial::parse("[2,2,3]", &s).unwrap().symbols()[0], Symbol::Const(Element::triple(1, 1, 2)));
    for bad in ["", "x^0", "[4,1]", "[1,3,1]", "[0,1]", "x [1,", "0", "1"] {
        assert!(Polynomial::parse(bad, &s).is_err(), "{:?} parsed", bad);
    }
    assert!(Polynomial::parse_term("x [1,2]").is_err());
}

#[test]
fn accessors() {
    let p = Polynomial::parse_term("y x y z").unwrap();
    let names = |v: Vec<Variable>| v.iter().map(|x| x.name().to_string()).collect::<Vec<_>>();
    assert_eq!(names(p.left_sequencing()), ["y", "x", "z"]);
    assert_eq!(names(p.right_sequencing()), ["z", "y", "x"]);
    let x = Variable::new("x");
    assert_eq!(Polynomial::parse_term("x y x").unwrap().eliminate(&x).unwrap().to_string(), "y");
    assert_eq!(
        Polynomial::parse_term("x y").unwrap().eliminate(&Variable::new("z")).unwrap().to_string(),
        "x y"
    );
    assert!(Polynomial::parse_term("x x").unwrap().eliminate(&x).is_err());
    assert_eq!(p.reversed().to_string(), "z y x y");
}

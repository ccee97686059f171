//! Substitution reductions: zero-preservation on small instances, output
//! sizes, buffer hygiene, and 3-colouring round trips.

mod common;

use rees_core::decide::{brute_sat, brute_zero};
use rees_core::reductions::coloring::{extend_assignment, h3, has_adjacent_repeat, vertex_var, BLOCK_LEN};
use rees_core::reductions::graph::colorings;
use rees_core::reductions::{alpha, decode_coloring, encode_coloring, rho, sat_lift, sigma, walk_term, SimpleGraph, Tau, Zeta};
use rees_core::{Element, Polynomial, ReesSemigroup, StructureMatrix};

const BUDGET: u64 = 10_000_000;

fn h3_polys(max_len: usize) -> Vec<Polynomial> {
    common::polynomials(&["x", "y"], &[Element::pair(0, 1), Element::pair(2, 0)], max_len)
}

#[test]
fn alpha_preserves_identically_zero() {
    let (s3, s4) = (h3(), ReesSemigroup::combinatorial(StructureMatrix::hollow(4).unwrap()).unwrap());
    for p in h3_polys(3) {
        let a = alpha(&p, 4).unwrap();
        let var_occurrences = p.len() - p.constants().count();
        assert_eq!(a.len(), p.len() + 2 * var_occurrences);
        assert_eq!(
            brute_zero(&s3, &p, BUDGET).unwrap().is_positive(),
            brute_zero(&s4, &a, BUDGET).unwrap().is_positive(),
            "{}",
            p
        );
    }
}

#[test]
fn rho_carries_zero_questions_into_the_monoid() {
    let s = h3();
    let s1 = s.clone().with_identity();
    let mark = Element::pair(1, 2);
    for p in h3_polys(3) {
        let r = rho(&p, &mark).unwrap();
        let var_occurrences = p.len() - p.constants().count();
        assert_eq!(r.len(), p.len() + 2 * var_occurrences);
        assert_eq!(
            brute_zero(&s, &p, BUDGET).unwrap().is_positive(),
            brute_zero(&s1, &r, BUDGET).unwrap().is_positive(),
            "{}",
            p
        );
    }
}

#[test]
fn sat_lift_hits_every_nonzero_value_unless_zero() {
    let s = h3();
    for p in h3_polys(2) {
        let lifted = sat_lift(&p);
        assert_eq!(lifted.len(), p.len() + 2);
        let zero = brute_zero(&s, &p, BUDGET).unwrap().is_positive();
        for b in s.nonzero_elements() {
            assert_eq!(brute_sat(&s, &lifted, &b, BUDGET).unwrap().is_positive(), !zero, "{} = {}", lifted, b);
            // composing with rho keeps satisfiability over the monoid
            let r = rho(&lifted, &Element::pair(0, 1)).unwrap();
            if r.variables().len() <= 4 {
                let s1 = s.clone().with_identity();
                assert_eq!(brute_sat(&s1, &r, &b, BUDGET).unwrap().is_positive(), !zero);
            }
        }
    }
}

fn small_graphs() -> Vec<SimpleGraph> {
    let mut out = Vec::new();
    for n in 2..=4usize {
        let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|a| (a + 1..=n).map(move |b| (a, b))).collect();
        for mask in 1u32..1 << pairs.len() {
            let edges: Vec<(usize, usize)> =
                pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, e)| *e).collect();
            if let Ok(g) = SimpleGraph::new(n, &edges) {
                if g.is_connected() {
                    out.push(g);
                }
            }
        }
    }
    out
}

#[test]
fn sigma_sizes_and_buffers() {
    for g in small_graphs() {
        let t = walk_term(&g).unwrap();
        let p = sigma(&g).unwrap();
        assert_eq!(t.len(), 2 * g.edge_count() + 1);
        assert_eq!(p.len(), t.len() * BLOCK_LEN);
        for v in 0..g.vertex_count() {
            assert!(!has_adjacent_repeat(&p, &vertex_var(v)));
        }
    }
}

#[test]
fn colourings_round_trip_through_witnesses() {
    for g in small_graphs().into_iter().filter(|g| g.vertex_count() <= 3) {
        for c in colorings(g.vertex_count()) {
            if !g.is_proper_coloring(&c) {
                assert!(encode_coloring(&g, &c).is_err());
                continue;
            }
            let f = encode_coloring(&g, &c).unwrap();
            let e = extend_assignment(&g, &f).unwrap().expect("a proper colouring extends");
            assert_eq!(decode_coloring(&g, &e).unwrap(), c);
        }
    }
}

#[test]
fn tau_sizes_buffers_and_homomorphism() {
    let tau = Tau::new(3).unwrap();
    let src = &tau.source.semigroup;
    let p = Polynomial::parse("x [1,2] y x", src).unwrap();
    let out = tau.apply(&p).unwrap();
    let block = tau.block(&"x".into()).len();
    assert_eq!(block, 2 + 9 * tau.pairs.len());
    assert_eq!(out.len(), 1 + 3 * block);
    for v in p.variables() {
        assert!(!has_adjacent_repeat(&out, &v));
    }
    let tgt = &tau.target.semigroup;
    for a in src.nonzero_elements() {
        for b in src.nonzero_elements() {
            let ab = src.mul(&a, &b);
            let image = tgt.mul(&tau.embed(&a).unwrap(), &tau.embed(&b).unwrap());
            match ab {
                Element::Zero => assert!(image.is_zero()),
                _ => assert_eq!(image, tau.embed(&ab).unwrap()),
            }
        }
    }
}

#[test]
fn zeta_sizes_and_buffers() {
    let zeta = Zeta::new(3, 3).unwrap();
    assert!(zeta.single_orthogonality());
    assert!(zeta.double_complement_is_t());
    let block = zeta.block(&"x".into()).len();
    let r = zeta.r_index.len();
    assert_eq!(block, 2 + 5 * r * r);
    let heads: Vec<Element> = [(0, 1), (2, 0)].iter().map(|&(i, l)| Element::pair(i, l)).collect();
    let q = Polynomial::new(vec![
        rees_core::Symbol::var("x"),
        rees_core::Symbol::Const(heads[0]),
        rees_core::Symbol::var("x"),
    ])
    .unwrap();
    let out = zeta.apply(&q).unwrap();
    assert_eq!(out.len(), 1 + 2 * block);
    assert!(!has_adjacent_repeat(&out, &"x".into()));
}

//! Property suites: ring axioms for the polynomial algebra, parser/printer
//! round trips, transform soundness against the oracle, and the exhaustive
//! vector-transform bijections.

use proptest::prelude::*;

use pbnf_core::families::{transform, Family, Reading};
use pbnf_core::formula::{BinaryOp, Formula, TernaryOp};
use pbnf_core::gf2poly::{Assignment, Monomial, Polynomial};
use pbnf_core::opspace::{
    anf_from_vector, anf_from_vector_minterms, vector_from_anf, BitString, TruthVector,
};
use pbnf_core::oracle;

const LETTERS: [&str; 4] = ["p", "q", "r", "s"];

fn arb_polynomial() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(prop::collection::btree_set(0..4usize, 0..=4), 0..=8).prop_map(
        |monomials| {
            Polynomial::from_monomials(
                monomials
                    .into_iter()
                    .map(|m| Monomial::from_letters(m.into_iter().map(|i| LETTERS[i]))),
            )
        },
    )
}

fn arb_assignment() -> impl Strategy<Value = Assignment> {
    prop::collection::vec(any::<bool>(), 4).prop_map(|bits| {
        Assignment::from_pairs(LETTERS.iter().copied().zip(bits))
    })
}

proptest! {
    #[test]
    fn add_commutes(p in arb_polynomial(), q in arb_polynomial()) {
        prop_assert_eq!(p.add(&q), q.add(&p));
    }

    #[test]
    fn add_associates(p in arb_polynomial(), q in arb_polynomial(), r in arb_polynomial()) {
        prop_assert_eq!(p.add(&q).add(&r), p.add(&q.add(&r)));
    }

    #[test]
    fn mul_commutes(p in arb_polynomial(), q in arb_polynomial()) {
        prop_assert_eq!(p.mul(&q), q.mul(&p));
    }

    #[test]
    fn mul_associates(p in arb_polynomial(), q in arb_polynomial(), r in arb_polynomial()) {
        prop_assert_eq!(p.mul(&q).mul(&r), p.mul(&q.mul(&r)));
    }

    #[test]
    fn mul_distributes(p in arb_polynomial(), q in arb_polynomial(), r in arb_polynomial()) {
        prop_assert_eq!(p.mul(&q.add(&r)), p.mul(&q).add(&p.mul(&r)));
    }

    #[test]
    fn characteristic_two(p in arb_polynomial()) {
        prop_assert!(p.add(&p).is_zero());
    }

    #[test]
    fn multiplicative_idempotence(p in arb_polynomial()) {
        prop_assert_eq!(p.mul(&p), p);
    }

    #[test]
    fn complement_involutes(p in arb_polynomial()) {
        prop_assert_eq!(p.complement().complement(), p);
    }

    #[test]
    fn no_monomial_repeats_letters(p in arb_polynomial(), q in arb_polynomial()) {
        for m in p.mul(&q).monomials() {
            let letters: Vec<&str> = m.letters().collect();
            let mut deduped = letters.clone();
            deduped.dedup();
            prop_assert_eq!(&letters, &deduped);
        }
    }

    #[test]
    fn evaluate_is_a_ring_homomorphism(
        p in arb_polynomial(),
        q in arb_polynomial(),
        a in arb_assignment(),
    ) {
        let ep = p.evaluate(&a).unwrap();
        let eq = q.evaluate(&a).unwrap();
        prop_assert_eq!(p.add(&q).evaluate(&a).unwrap(), ep ^ eq);
        prop_assert_eq!(p.mul(&q).evaluate(&a).unwrap(), ep & eq);
    }

    #[test]
    fn substitution_is_compatible_with_evaluation(
        p in arb_polynomial(),
        q in arb_polynomial(),
        a in arb_assignment(),
        letter in 0..4usize,
    ) {
        let v = LETTERS[letter];
        let substituted = p.substitute(v, &q).evaluate(&a).unwrap();
        let mut shifted = a.clone();
        shifted.set(v, q.evaluate(&a).unwrap());
        prop_assert_eq!(substituted, p.evaluate(&shifted).unwrap());
    }

    #[test]
    fn identity_substitution(p in arb_polynomial(), letter in 0..4usize) {
        let v = LETTERS[letter];
        prop_assert_eq!(p.substitute(v, &Polynomial::letter(v)), p);
    }

    #[test]
    fn canonical_text_round_trips(p in arb_polynomial()) {
        prop_assert_eq!(Polynomial::parse(&p.canonical_text()).unwrap(), p);
    }
}

fn arb_formula() -> impl Strategy<Value = Formula> {
    static FORMULA_LETTERS: [&str; 3] = ["p", "q", "r"];
    let leaf = prop_oneof![
        4 => prop::sample::select(&FORMULA_LETTERS[..]).prop_map(Formula::letter),
        1 => any::<bool>().prop_map(Formula::Const),
    ];
    leaf.prop_recursive(4, 64, 8, move |inner| {
        prop_oneof![
            2 => inner.clone().prop_map(Formula::not),
            6 => (
                prop::sample::select(&pbnf_core::enumerate::STANDARD_BINARY[..]),
                inner.clone(),
                inner.clone(),
            )
                .prop_map(|(op, a, b)| Formula::binary(op, a, b)),
            1 => (
                prop::sample::select(&TernaryOp::ALL[..]),
                inner.clone(),
                inner.clone(),
                inner,
            )
                .prop_map(|(op, a, b, c)| Formula::ternary(op, a, b, c)),
        ]
    })
}

fn arb_family() -> impl Strategy<Value = Family> {
    (
        prop::collection::btree_set(prop::sample::select(&["p", "q", "r"][..]), 0..=3),
        any::<bool>(),
    )
        .prop_map(|(complemented, one_is_true)| {
            let reading = if one_is_true {
                Reading::OneIsTrue
            } else {
                Reading::ZeroIsTrue
            };
            Family::new(complemented, reading)
        })
}

proptest! {
    #[test]
    fn parse_print_round_trips(f in arb_formula()) {
        let printed = f.to_string();
        let reparsed = Formula::parse(&printed).unwrap();
        prop_assert_eq!(reparsed, f, "printed as {}", printed);
    }

    #[test]
    fn transform_is_sound_in_every_family(f in arb_formula(), family in arb_family()) {
        let polynomial = transform(&f, &family);
        let letters = f.letters();
        for truth in Assignment::descending(&letters) {
            let expected = family.encode_output(oracle::eval_formula(&f, &truth).unwrap());
            let encoded = family.encode_assignment(&truth);
            prop_assert_eq!(polynomial.evaluate(&encoded).unwrap(), expected);
        }
    }

    #[test]
    fn anf_routes_agree_on_random_vectors(bits in prop::collection::vec(any::<bool>(), 16)) {
        let order: Vec<String> = ["p", "q", "r", "s"].iter().map(|s| s.to_string()).collect();
        let tv = TruthVector::new(order, BitString::new(bits));
        prop_assert_eq!(anf_from_vector(&tv), anf_from_vector_minterms(&tv));
    }
}

/// The vector ↔ polynomial maps are mutually inverse bijections on all
/// 2^(2^n) vectors for n ≤ 3, and the two ANF routes agree on all vectors up
/// to n = 4.
#[test]
fn anf_vector_bijection_exhaustive() {
    for n in 0..=3usize {
        let order: Vec<String> = ["p", "q", "r"][..n].iter().map(|s| s.to_string()).collect();
        let size = 1usize << n;
        let mut seen = std::collections::BTreeSet::new();
        for value in 0..1u32 << size {
            let bits = BitString::new((0..size).map(|i| (value >> i) & 1 == 1).collect());
            let tv = TruthVector::new(order.clone(), bits);
            let anf = anf_from_vector(&tv);
            assert_eq!(anf, anf_from_vector_minterms(&tv));
            assert_eq!(vector_from_anf(&anf, &order).unwrap(), tv);
            assert!(seen.insert(anf), "two vectors mapped to one polynomial");
        }
    }
}

#[test]
fn anf_routes_agree_exhaustively_at_n4() {
    let order: Vec<String> = ["p", "q", "r", "s"].iter().map(|s| s.to_string()).collect();
    for value in 0..=u16::MAX {
        let bits = BitString::new((0..16).map(|i| (value >> i) & 1 == 1).collect());
        let tv = TruthVector::new(order.clone(), bits);
        assert_eq!(anf_from_vector(&tv), anf_from_vector_minterms(&tv), "vector {value:#06x}");
    }
}

/// Exhaustive round trip over the two-letter, connective-depth ≤ 2
/// enumeration (the proptest generator above covers deeper trees and the
/// ternary functions).
#[test]
fn parse_print_round_trips_exhaustively() {
    let all = pbnf_core::enumerate::formulas(&["p", "q"], 2, &pbnf_core::enumerate::STANDARD_BINARY);
    assert_eq!(all.len(), 19_406);
    for f in &all {
        let printed = f.to_string();
        assert_eq!(&Formula::parse(&printed).unwrap(), f, "printed as {printed}");
    }
}

/// Every binary operator applied to the bare letters transforms, in the
/// normal family, to the polynomial whose vector is the operator's catalog
/// string.
#[test]
fn transform_agrees_with_catalog_vectors() {
    let order: Vec<String> = vec!["p".into(), "q".into()];
    for op in BinaryOp::ALL {
        let f = Formula::binary(op, Formula::letter("p"), Formula::letter("q"));
        let polynomial = transform(&f, &Family::normal());
        let vector = vector_from_anf(&polynomial, &order).unwrap();
        assert_eq!(vector.bits, pbnf_core::opspace::binary_bits(op), "{op:?}");
    }
}

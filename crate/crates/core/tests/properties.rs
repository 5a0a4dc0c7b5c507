use proptest::prelude::*;

use vkr::braid::{BraidWord, Letter, LetterKind, SingularBraidWord, SingularLetter};
use vkr::complexes::{eliminate_left, euler_characteristic, gaussian_eliminate, rouquier};
use vkr::conventions::homfly_to_oracle;
use vkr::homology::{homfly_homology, DegreeWindow};
use vkr::laurent::Laurent2;
use vkr::oracle::{homfly_scaled, homfly_try, vassiliev_try};

fn laurent() -> impl Strategy<Value = Laurent2> {
    prop::collection::vec((-3i32..=3, -3i32..=3, -4i64..=4), 0..5).prop_map(|ts| {
        let mut p = Laurent2::zero();
        for (a, q, c) in ts {
            p.add_term(a, q, c);
        }
        p
    })
}

fn word(max_strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_strands).prop_flat_map(move |n| {
        prop::collection::vec((1..n, any::<bool>()), 0..=max_len)
            .prop_map(move |ls| BraidWord::new(n, ls.into_iter().map(|(index, positive)| Letter { index, positive }).collect()).unwrap())
    })
}

fn singular_word() -> impl Strategy<Value = SingularBraidWord> {
    (2..=4usize).prop_flat_map(|n| {
        prop::collection::vec((1..n, 0..3u8), 0..6).prop_map(move |ls| {
            let kinds = [LetterKind::Positive, LetterKind::Negative, LetterKind::Singular];
            SingularBraidWord::new(n, ls.into_iter().map(|(index, k)| SingularLetter { index, kind: kinds[k as usize] }).collect())
                .unwrap()
        })
    })
}

proptest! {
    #[test]
    fn braid_text_round_trip(w in word(5, 8)) {
        prop_assert_eq!(BraidWord::parse(&w.to_string()).unwrap(), w);
    }

    #[test]
    fn singular_text_round_trip(w in singular_word()) {
        prop_assert_eq!(SingularBraidWord::parse(&w.to_string()).unwrap(), w);
    }

    #[test]
    fn laurent_ring_axioms(p in laurent(), q in laurent(), r in laurent()) {
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&(&p + &q) * &r, &(&p * &r) + &(&q * &r));
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn laurent_json_round_trip(p in laurent()) {
        let s = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<Laurent2>(&s).unwrap(), p);
    }

    #[test]
    fn oracle_skein(w in word(4, 6), pos in 0usize..6) {
        prop_assume!(!w.letters().is_empty());
        let pos = pos % w.letters().len();
        let n = w.strands();
        let mut plus = w.letters().to_vec();
        plus[pos].positive = true;
        let mut minus = plus.clone();
        minus[pos].positive = false;
        let mut rest = plus.clone();
        rest.remove(pos);
        let lhs = homfly_scaled(&BraidWord::new(n, plus).unwrap()).shift(1, 0)
            - homfly_scaled(&BraidWord::new(n, minus).unwrap()).shift(-1, 0);
        let rhs = &Laurent2::z() * &homfly_scaled(&BraidWord::new(n, rest).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn oracle_conjugation_invariant(w in word(4, 6), rot in 0usize..6, g in 1usize..4) {
        let n = w.strands();
        let mut ls = w.letters().to_vec();
        if !ls.is_empty() {
            let r = rot % ls.len();
            ls.rotate_left(r);
        }
        let g = 1 + (g - 1) % (n - 1);
        let mut conj = vec![Letter::pos(g)];
        conj.extend(ls);
        conj.push(Letter::neg(g));
        prop_assert_eq!(homfly_scaled(&BraidWord::new(n, conj).unwrap()), homfly_scaled(&w));
    }

    #[test]
    fn vassiliev_without_singular_letters_is_homfly(w in word(4, 6)) {
        let sw = SingularBraidWord::parse(&w.to_string()).unwrap();
        match homfly_try(&w) {
            Ok(p) => prop_assert_eq!(vassiliev_try(&sw).unwrap(), p),
            Err(_) => prop_assert!(vassiliev_try(&sw).is_err()),
        }
    }

    #[test]
    fn vassiliev_is_a_difference(w in singular_word()) {
        // resolving the first singular letter: V(w) = V(w+) - V(w-)
        let pos = w.singular_positions();
        prop_assume!(!pos.is_empty());
        let with = |kind| {
            let mut ls = w.letters().to_vec();
            ls[pos[0]].kind = kind;
            SingularBraidWord::new(w.strands(), ls).unwrap()
        };
        if let (Ok(v), Ok(p), Ok(m)) = (vassiliev_try(&w), vassiliev_try(&with(LetterKind::Positive)), vassiliev_try(&with(LetterKind::Negative))) {
            prop_assert_eq!(v, p - m);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn rouquier_differentials_square_to_zero(w in word(3, 4)) {
        let c = rouquier(&w).unwrap();
        c.check_d_squared().unwrap();
        let g = gaussian_eliminate(&c);
        g.check_d_squared().unwrap();
        prop_assert_eq!(euler_characteristic(&g, 12), euler_characteristic(&c, 12));
        let f = eliminate_left(&c);
        prop_assert!(f.is_d_squared_zero());
        prop_assert_eq!(f.euler_characteristic(12), euler_characteristic(&c, 12));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10))]

    #[test]
    fn homology_euler_is_the_oracle(w in word(3, 4)) {
        prop_assume!(w.is_knot());
        let t = homfly_homology(&w, DegreeWindow::default(), true).unwrap();
        prop_assert!(!t.truncated);
        prop_assert_eq!(homfly_to_oracle(&t.euler()), homfly_try(&w).unwrap());
    }
}

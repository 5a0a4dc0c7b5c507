use num::{One, Zero};
use vkr::algebra::{q_int, Q};
use vkr::braid::SingularBraidWord;
use vkr::conventions::{homfly_to_oracle, sl_vassiliev_expected};
use vkr::homology::{homfly_homology, DegreeWindow, Functor};
use vkr::oracle::vassiliev_oracle;
use vkr::wallcross::{vassiliev_homology, wall_crossing_map, CubeOptions, ExtensionRealization};

fn sw(s: &str) -> SingularBraidWord {
    SingularBraidWord::parse(s).unwrap()
}

#[test]
fn extension_is_exact() {
    for (n, i) in [(2, 1), (3, 1), (3, 2)] {
        let e = ExtensionRealization::new(n, i).unwrap();
        e.check(12).unwrap();
        e.scaled(&q_int(7)).unwrap().check(12).unwrap();
        assert!(e.scaled(&Q::zero()).is_err());
    }
}

#[test]
fn rescaling_the_extension_rescales_the_map() {
    let w = sw("2: 1! 1 1");
    let win = DegreeWindow::default();
    let a = wall_crossing_map(&w, Functor::Homfly, win, &Q::one()).unwrap();
    let b = wall_crossing_map(&w, Functor::Homfly, win, &q_int(7)).unwrap();
    assert!(!a.maps.is_empty());
    let mut nonzero = 0;
    for (key, m) in &a.maps {
        for (k, x) in m {
            let y = &b.maps[key][k];
            assert_eq!(x.scale(&q_int(7)), *y, "key {key:?} degree {k}");
            nonzero += usize::from(!x.is_zero());
        }
    }
    assert!(nonzero > 0);
}

#[test]
fn crossing_change_on_the_unknot_is_an_isomorphism() {
    let r = vassiliev_homology(&sw("2: 1!"), Functor::Homfly, &CubeOptions::default()).unwrap();
    assert!(r.table.is_zero(), "{:?}", r.table);
    assert!(!r.table.truncated);
}

#[test]
fn euler_matches_vassiliev_oracle() {
    for s in ["2: 1!", "2: 1! 1 1", "2: 1 1! 1", "2: -1 1! 1", "3: 1! 2 1 2", "2: 1! 1! 1"] {
        let w = sw(s);
        let r = vassiliev_homology(&w, Functor::Homfly, &CubeOptions::default()).unwrap();
        assert_eq!(homfly_to_oracle(&r.table.euler()), vassiliev_oracle(&w), "{s}");
    }
}

#[test]
fn no_singular_letters_is_plain_homology() {
    let w = sw("2: 1 1 1");
    let r = vassiliev_homology(&w, Functor::Homfly, &CubeOptions::default()).unwrap();
    let h = homfly_homology(&w.resolve(&[]), DegreeWindow::default(), false).unwrap();
    assert_eq!(r.table.table(), h.table());
    assert_eq!(r.vertices, 1);
}

#[test]
fn cube_orders_and_scales_agree() {
    let w = sw("2: 1! 1! 1");
    let base = vassiliev_homology(&w, Functor::Homfly, &CubeOptions::default()).unwrap();
    assert_eq!(base.vertices, 4);
    assert_eq!(base.edges, 4);
    assert!(base.faces_checked > 0);
    let swapped = CubeOptions { order: Some(vec![1, 0]), ..Default::default() };
    let r = vassiliev_homology(&w, Functor::Homfly, &swapped).unwrap();
    assert_eq!(r.table, base.table);
    let mut scaled = CubeOptions::default();
    scaled.scales.insert(0, q_int(7));
    let r = vassiliev_homology(&w, Functor::Homfly, &scaled).unwrap();
    assert_eq!(r.table, base.table);
    let bad = CubeOptions { order: Some(vec![0, 0]), ..Default::default() };
    assert!(vassiliev_homology(&w, Functor::Homfly, &bad).is_err());
}

#[test]
fn sl2_cube_euler() {
    let w = sw("2: 1!");
    let r = vassiliev_homology(&w, Functor::Sl(2), &CubeOptions::default()).unwrap();
    assert_eq!(r.word, "3: 1! 2");
    assert_eq!(r.table.euler(), sl_vassiliev_expected(&w, 2).unwrap());
}

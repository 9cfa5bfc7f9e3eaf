use lattice_bijections_core::hockey;
use lattice_bijections_core::path::{Extreme, NEPath, StepNE, StepUD, UDPath};
use lattice_bijections_core::trace::replay;
use lattice_bijections_core::warmup::{self, TiePath};
use lattice_bijections_core::{Bijection, MarkedPath, PathTriple, Value};
use proptest::prelude::*;

fn ud_word(max: usize) -> impl Strategy<Value = UDPath> {
    prop::collection::vec(prop_oneof![Just(StepUD::Up), Just(StepUD::Down)], 0..max)
        .prop_map(UDPath::new)
}

fn balanced(m: usize) -> impl Strategy<Value = UDPath> {
    let mut steps = vec![StepUD::Up; m];
    steps.extend(vec![StepUD::Down; m]);
    Just(steps).prop_shuffle().prop_map(UDPath::new)
}

fn triple(n_max: usize) -> impl Strategy<Value = PathTriple> {
    (0..=n_max)
        .prop_flat_map(|n| (Just(n), 0..=n))
        .prop_flat_map(|(n, i)| (Just(n), Just(i), 0..=n - i))
        .prop_flat_map(|(n, i, j)| (balanced(i), balanced(j), balanced(n - i - j)))
        .prop_map(|(a, b, c)| PathTriple::new(a, b, c).unwrap())
}

fn marked(n_max: usize) -> impl Strategy<Value = MarkedPath> {
    (0..=n_max)
        .prop_flat_map(|n| (balanced(n), 0..=2 * n))
        .prop_map(|(h, x)| MarkedPath::new(h, x).unwrap())
}

fn ne_word(len: usize) -> impl Strategy<Value = NEPath> {
    prop::collection::vec(prop_oneof![Just(StepNE::East), Just(StepNE::North)], len)
        .prop_map(NEPath::from_origin)
}

fn tie(n_max: usize) -> impl Strategy<Value = TiePath> {
    (0..=n_max)
        .prop_flat_map(|n| {
            let mut steps = vec![StepNE::East; n];
            steps.extend(vec![StepNE::North; n]);
            Just(steps).prop_shuffle()
        })
        .prop_map(|s| TiePath::new(NEPath::from_origin(s)).unwrap())
}

proptest! {
    #[test]
    fn ud_text_round_trip(p in ud_word(40)) {
        prop_assert_eq!(UDPath::parse(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn triple_and_marked_text_round_trip(t in triple(12), m in marked(12)) {
        prop_assert_eq!(t.to_string().parse::<PathTriple>().unwrap(), t);
        prop_assert_eq!(m.to_string().parse::<MarkedPath>().unwrap(), m);
    }

    #[test]
    fn ne_text_round_trip(p in ne_word(30)) {
        prop_assert_eq!(NEPath::parse(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn reflections_are_involutions(p in ud_word(40), q in ne_word(30), t in triple(10)) {
        prop_assert_eq!(p.reflect_horizontal().reflect_horizontal(), p.clone());
        prop_assert_eq!(q.reflect_diagonal().reflect_diagonal(), q);
        prop_assert_eq!(t.reflect_horizontal().reflect_horizontal(), t);
    }

    #[test]
    fn reflection_negates_heights(p in ud_word(40)) {
        let neg: Vec<i64> = p.height_profile().iter().map(|h| -h).collect();
        prop_assert_eq!(p.reflect_horizontal().height_profile(), neg);
        prop_assert_eq!(p.reflect_horizontal().max_height(), -p.min_height());
        let (imax, hmax) = p.leftmost_extreme(Extreme::Max);
        prop_assert_eq!(p.reflect_horizontal().leftmost_extreme(Extreme::Min), (imax, -hmax));
    }

    #[test]
    fn split_then_concat_is_identity(p in ud_word(40), cut in 0usize..40) {
        let cut = cut.min(p.len());
        let (l, r) = p.split_at(cut);
        prop_assert_eq!(l.len(), cut);
        prop_assert_eq!(UDPath::concat(&[&l, &r]), p.clone());
        prop_assert_eq!(p.slice(cut..p.len()), r);
    }

    #[test]
    fn ne_split_then_concat_is_identity(p in ne_word(30), cut in 0usize..=30) {
        let (l, r) = p.split_at(cut);
        prop_assert_eq!(r.start(), p.point_at(cut));
        prop_assert_eq!(l.concat(&r), p);
    }

    #[test]
    fn triple_map_round_trips(t in triple(60)) {
        let m = hockey::triple_to_marked(&t);
        prop_assert_eq!(m.n(), t.n());
        prop_assert_eq!(hockey::marked_to_triple(&m), t);
    }

    #[test]
    fn marked_map_round_trips(m in marked(60)) {
        let t = hockey::marked_to_triple(&m);
        prop_assert_eq!(hockey::triple_to_marked(&t), m);
    }

    #[test]
    fn mark_side_follows_class(t in triple(30)) {
        use hockey::TripleClass::*;
        let m = hockey::triple_to_marked(&t);
        let h = m.mark_height();
        match hockey::classify(&t) {
            R => prop_assert_eq!(h, 0),
            U => prop_assert!(h > 0),
            VMinusU | J(_) => prop_assert!(h < 0),
        }
    }

    #[test]
    fn soccer_round_trips(p in (0usize..=40).prop_flat_map(|n| ne_word(2 * n))) {
        let m = warmup::free_to_marked_tie(&p).unwrap();
        prop_assert_eq!(warmup::marked_tie_to_free(&m), p);
    }

    #[test]
    fn tie_map_round_trips_within_bound(x in tie(40)) {
        let (y, advances) = warmup::tie_to_avoiding_counted(&x);
        prop_assert!(advances <= x.n());
        prop_assert!(y.path().avoids_diagonal_after_start());
        prop_assert_eq!(warmup::avoiding_to_tie(&y), x);
    }

    #[test]
    fn traces_replay(t in triple(8), x in tie(8)) {
        let inputs = [Value::Triple(t), Value::Path(x.into_path())];
        for (b, v) in [Bijection::G, Bijection::F].into_iter().zip(inputs) {
            let (_, events) = b.trace(&v).unwrap();
            for e in events {
                prop_assert_eq!(replay(e.stage, &e.before).unwrap(), e.after);
            }
        }
    }
}

mod common;

use std::collections::HashSet;

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use proptest::prelude::*;

use psreg::cutting::{vertical_cutting, MonotoneChain};
use psreg::format::{parse, serialize, Instance, InstanceFile};
use psreg::geom::{curve_crossings, Color, CrossingKind};
use psreg::graph::{half_graph, intersection_graph, Certificate, RegPartition};
use psreg::homog::{mighty_pair, unbalanced_mighty, Mode, OracleConfig};
use psreg::instances::{self, random_drawing, BBox, SegmentParams};
use psreg::regularity::regularity_partition;
use psreg::separator::curve_separator;
use psreg::sweep::sweep_select;
use psreg::topo::{bisection_width, edge_bound, part_admissible, validate_simple, EdgeRelation};
use psreg::{CurveFamily, Error, PolylineCurve, RPoint, SimpleGraph, VSet};

use common::{segment_meet, Meet};

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn point() -> impl Strategy<Value = RPoint> {
    (-4i64..=4, -4i64..=4).prop_map(|(x, y)| RPoint::ints(x, y))
}

fn segment(id: usize) -> impl Strategy<Value = PolylineCurve> {
    (point(), point()).prop_filter_map("degenerate", move |(a, b)| PolylineCurve::segment(id, a, b).ok())
}

fn polyline(id: usize) -> impl Strategy<Value = PolylineCurve> {
    prop::collection::vec(point(), 2..5).prop_filter_map("invalid polyline", move |v| PolylineCurve::new(id, v).ok())
}

fn graph(max_n: usize) -> impl Strategy<Value = SimpleGraph> {
    (2..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = SimpleGraph::new(n);
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        g.add_edge(u, v).unwrap();
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

fn record_set(a: &PolylineCurve, b: &PolylineCurve) -> HashSet<(RPoint, CrossingKind)> {
    curve_crossings(a, b).into_iter().map(|r| (r.point, r.kind)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn segment_crossings_match_brute_force(a in segment(0), b in segment(1)) {
        let recs = curve_crossings(&a, &b);
        let (p, q) = (a.vertices(), b.vertices());
        match segment_meet(&p[0], &p[1], &q[0], &q[1]) {
            Meet::None => prop_assert!(recs.is_empty()),
            Meet::Overlap => prop_assert!(recs.iter().any(|r| r.kind == CrossingKind::Overlap)),
            Meet::Point(x) => {
                prop_assert_eq!(recs.len(), 1);
                let want = match (a.is_endpoint(&x), b.is_endpoint(&x)) {
                    (false, false) => CrossingKind::ProperCrossing,
                    (true, true) => CrossingKind::SharedEndpoint,
                    _ => CrossingKind::Tangency,
                };
                prop_assert_eq!(&recs[0].point, &x);
                prop_assert_eq!(recs[0].kind, want);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn crossings_are_symmetric(a in polyline(0), b in polyline(1)) {
        let ab: HashSet<_> = curve_crossings(&a, &b).into_iter().collect();
        let ba: HashSet<_> = curve_crossings(&b, &a).into_iter().map(|r| r.swapped()).collect();
        prop_assert_eq!(ab, ba);
    }

    #[test]
    fn translation_moves_crossings(a in polyline(0), b in polyline(1), dx in -50i64..50, dy in -50i64..50, den in 1i64..7) {
        let (dx, dy) = (q(dx, den), q(dy, den));
        let moved = record_set(&a.translate(&dx, &dy), &b.translate(&dx, &dy));
        let expected: HashSet<_> = record_set(&a, &b).into_iter().map(|(p, k)| (p.translate(&dx, &dy), k)).collect();
        prop_assert_eq!(moved, expected);
    }

    #[test]
    fn horizontal_disjoint_family_is_valid(ys in prop::collection::btree_set(-20i64..20, 1..12), len in 1i64..9) {
        let curves = ys.iter().enumerate()
            .map(|(i, &y)| PolylineCurve::segment(i, RPoint::ints(-len, y), RPoint::ints(len, y)).unwrap())
            .collect();
        let mut f = CurveFamily::new(curves);
        let rep = f.validate();
        prop_assert!(rep.valid);
        prop_assert!(rep.violations.is_empty());
        prop_assert!(rep.contacts.is_empty());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn intersection_graph_ignores_order(n in 2usize..25, seed in 0u64..1000, rot in 0usize..25) {
        let f = instances::gen_random_segments(n, seed, BBox::default()).unwrap();
        let g = intersection_graph(&f).unwrap();
        // Curve i moves to position pos(i).
        let pos = |i: usize| (i + rot) % n;
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| pos(i));
        let h = CurveFamily::new(order.iter().map(|&i| f.curves[i].clone()).collect()).validated().unwrap();
        let hg = intersection_graph(&h).unwrap();
        for i in 0..n {
            for j in 0..n {
                prop_assert_eq!(g.has_edge(i, j), hg.has_edge(pos(i), pos(j)));
            }
        }
    }

    #[test]
    fn generators_are_deterministic_and_valid(n in 2usize..20, seed in 0u64..1000) {
        let a = instances::gen_random_segments(n, seed, BBox::default()).unwrap();
        prop_assert_eq!(&a, &instances::gen_random_segments(n, seed, BBox::default()).unwrap());
        prop_assert!(a.report().is_some_and(|r| r.valid));
        let w = instances::gen_wiring_diagram(n, seed).unwrap();
        prop_assert_eq!(&w, &instances::gen_wiring_diagram(n, seed).unwrap());
        prop_assert_eq!(w.valid_report().unwrap().proper_crossings, n * (n - 1) / 2);
        let gr = instances::gen_grounded(n, seed, seed % 2 == 0).unwrap();
        prop_assert_eq!(&gr, &instances::gen_grounded(n, seed, seed % 2 == 0).unwrap());
        prop_assert!(gr.grounding_errors().is_empty());
        let d = random_drawing(n.min(9), (1, 2), seed).unwrap();
        prop_assert!(validate_simple(&d).valid);
    }

    #[test]
    fn files_round_trip(n in 1usize..15, seed in 0u64..1000, g in graph(12)) {
        let bodies = vec![
            Instance::Curves(instances::random_segments(&SegmentParams { max_len: Some(20), ..SegmentParams::new(n, seed) }).unwrap()),
            Instance::Curves(instances::gen_grounded(n, seed, false).unwrap()),
            Instance::Graph(g),
            Instance::Drawing(random_drawing(n.clamp(3, 8), (1, 2), seed).unwrap()),
        ];
        for body in bodies {
            let file = InstanceFile::new(body).with_seed(seed);
            let text = serialize(&file);
            let back = parse(&text).unwrap();
            prop_assert_eq!(&back, &file);
            prop_assert_eq!(serialize(&back), text);
        }
    }

    #[test]
    fn separator_certifies(n in 2usize..30, seed in 0u64..1000, short in any::<bool>()) {
        let p = SegmentParams { max_len: short.then_some(25), ..SegmentParams::new(n, seed) };
        let f = instances::random_segments(&p).unwrap();
        let g = intersection_graph(&f).unwrap();
        let res = curve_separator(&f).unwrap();
        prop_assert!(res.verify(&g).is_ok());
        prop_assert_eq!(g.edges_between(&res.v1, &res.v2), 0);
        prop_assert!(3 * res.v1.len() <= 2 * n && 3 * res.v2.len() <= 2 * n);
    }

    #[test]
    fn cutting_cells_tile_the_slab(seed in 0u64..500, r in 2usize..5, px in 1i64..1000, py in 0i64..1000) {
        let n = 12;
        let f = instances::gen_grounded(n, seed, true).unwrap();
        let res = vertical_cutting(&f, r, seed).unwrap();
        let chains: Vec<MonotoneChain> = f.curves.iter().map(|c| MonotoneChain::new(c).unwrap()).collect();
        let (x0, x1) = chains[0].x_range();
        let (lo, hi) = f.grounds.as_ref().map(|(g, _)| (g.bbox().0.y, g.bbox().1.y)).unwrap();
        let x = x0 + (x1 - x0) * q(px, 1000);
        let y = &lo + (&hi - &lo) * q(py, 1000);
        let on_curve = chains.iter().any(|c| c.y_at(&x) == y);
        let on_wall = res.cells.iter().any(|c| c.x0 == x || c.x1 == x);
        prop_assume!(!on_curve && !on_wall);
        let inside = res.cells.iter().filter(|c| {
            c.x0 < x && x < c.x1
                && c.lower.is_none_or(|l| chains[l].y_at(&x) < y)
                && c.upper.is_none_or(|u| y < chains[u].y_at(&x))
        }).count();
        prop_assert_eq!(inside, 1);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn half_graph_edge_count(n in 1usize..40) {
        prop_assert_eq!(half_graph(n).edge_count(), n * (n - 1) / 2);
    }

    #[test]
    fn blowups_compose(g in graph(6), m1 in prop::collection::vec(1usize..4, 6), m2 in prop::collection::vec(1usize..4, 6)) {
        let n = g.n();
        let first = g.clone_blowup(&m1[..n]).unwrap();
        let second_mult: Vec<usize> = first.origin.iter().map(|&v| m2[v]).collect();
        let second = first.graph.clone_blowup(&second_mult).unwrap();
        let product: Vec<usize> = (0..n).map(|v| m1[v] * m2[v]).collect();
        let direct = g.clone_blowup(&product).unwrap();
        let total = direct.origin.len();
        prop_assert_eq!(second.origin.len(), total);
        // Clones stay contiguous, so the identity map respects both tracking maps.
        for x in 0..total {
            prop_assert_eq!(first.origin[second.origin[x]], direct.origin[x]);
            for y in 0..total {
                prop_assert_eq!(second.graph.has_edge(x, y), direct.graph.has_edge(x, y));
            }
        }
    }

    #[test]
    fn sweep_orders_and_halves(bits in prop::collection::vec(any::<bool>(), 2..64)) {
        prop_assume!(bits.iter().any(|&b| b) && bits.iter().any(|&b| !b));
        let seq: Vec<Color> = bits.iter().map(|&b| if b { Color::Red } else { Color::Blue }).collect();
        let sel = sweep_select(&seq).unwrap();
        prop_assert!(sel.holds_for(&seq));
    }

    #[test]
    fn edge_bound_is_monotone(n in 2usize..5000, k in 2usize..30, c2 in 0.5f64..4.0) {
        let b = edge_bound(n, k, c2).log2();
        prop_assert!(b <= edge_bound(n + 1, k, c2).log2());
        prop_assert!(b <= edge_bound(n, k + 1, c2).log2());
    }

    #[test]
    fn edge_relations_partition_pairs(n in 3usize..9, seed in 0u64..1000) {
        let d = random_drawing(n, (1, 2), seed).unwrap();
        for i in 0..d.edge_count() {
            for j in i + 1..d.edge_count() {
                let (a, b) = (&d.edges[i], &d.edges[j]);
                let ends: HashSet<usize> = [a.u, a.v, b.u, b.v].into_iter().collect();
                match d.relation(i, j) {
                    EdgeRelation::Disjoint => {
                        prop_assert!(d.records(i, j).is_empty());
                        prop_assert_eq!(ends.len(), 4);
                    }
                    EdgeRelation::Crossing => {
                        prop_assert!(!d.records(i, j).is_empty());
                        prop_assert_eq!(ends.len(), 4);
                    }
                    EdgeRelation::SharedVertex => prop_assert!(ends.len() < 4),
                }
            }
        }
    }

    #[test]
    fn exact_bisection_recomputes(g in graph(12), seed in any::<u64>()) {
        let b = bisection_width(&g, Mode::Exact, seed).unwrap();
        let n = g.n();
        prop_assert!(b.exact);
        prop_assert_eq!(b.v1.len() + b.v2.len(), n);
        prop_assert!(b.v1.is_disjoint(&b.v2));
        prop_assert!(part_admissible(b.v1.len(), n) && part_admissible(b.v2.len(), n));
        prop_assert_eq!(g.edges_between(&b.v1, &b.v2), b.cut);
    }
}

/// Graph on `2k` vertices with sides `0..k` and `k..2k`.
fn bipartite_instance() -> impl Strategy<Value = (SimpleGraph, VSet, VSet)> {
    (1usize..=7).prop_flat_map(|k| {
        graph(2 * k).prop_filter("needs 2k vertices", move |g| g.n() == 2 * k).prop_map(move |g| {
            let a = VSet::range(2 * k, 0..k);
            let b = VSet::range(2 * k, k..2 * k);
            (g, a, b)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn heuristic_never_beats_exact((g, a, b) in bipartite_instance(), seed in any::<u64>()) {
        let exact = mighty_pair(&g, &a, &b, &OracleConfig { seed, ..OracleConfig::exact() }, None).unwrap();
        let heur = mighty_pair(&g, &a, &b, &OracleConfig { seed, ..OracleConfig::heuristic() }, None).unwrap();
        prop_assert!(exact.pair.verify(&g).is_ok());
        prop_assert!(heur.pair.verify(&g).is_ok());
        prop_assert!(exact.pair.min_side() >= 1);
        prop_assert!(heur.pair.min_side() <= exact.pair.min_side());
    }

    #[test]
    fn unbalanced_projection_reverifies(g in graph(10), split in 1usize..9) {
        let n = g.n();
        prop_assume!(split < n);
        let a = VSet::range(n, 0..split);
        let b = VSet::range(n, split..n);
        let out = unbalanced_mighty(&g, &a, &b, &OracleConfig::default()).unwrap();
        prop_assert!(out.pair.verify(&g).is_ok());
        prop_assert!(out.pair.a.is_subset(&a) && out.pair.b.is_subset(&b));
    }

    #[test]
    fn segment_partitions_reverify(n in 31usize..61, seed in 0u64..1000) {
        let g = intersection_graph(&instances::gen_random_segments(n, seed, BBox::default()).unwrap()).unwrap();
        let p = regularity_partition(&g, Rational64::new(1, 5), &OracleConfig::exact(), 30).unwrap().partition;
        check_partition(&g, &p)?;
    }

    #[test]
    fn any_returned_partition_reverifies(g in graph(40), k in 20usize..24) {
        // Arbitrary graphs need not admit a homogeneous partition; the only
        // acceptable failure is the exceptional budget.
        match regularity_partition(&g, Rational64::new(1, 5), &OracleConfig::exact(), k) {
            Ok(out) => check_partition(&g, &out.partition)?,
            Err(e) => prop_assert!(matches!(e, Error::Certificate(ref m) if m.contains("exceptional")), "{e}"),
        }
    }
}

fn check_partition(g: &SimpleGraph, p: &RegPartition) -> Result<(), TestCaseError> {
    prop_assert!(p.is_equipartition());
    prop_assert!(p.exceptional_fraction() <= p.epsilon);
    for i in 0..p.k() {
        for j in i + 1..p.k() {
            prop_assert_eq!(p.certificate(i, j), Certificate::of(g, &p.blocks[i], &p.blocks[j]));
        }
    }
    Ok(())
}

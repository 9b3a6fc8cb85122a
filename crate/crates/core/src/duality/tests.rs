use std::collections::BTreeSet;

use proptest::prelude::*;

use super::*;
use crate::bits;
use crate::error::Error;
use crate::fixtures;
use crate::linalg::Field;
use crate::monomial::{lattice_ideal, subfamily_ideal, MonomialIdeal, SquarefreeMonomial, Variables};
use crate::semilattice::MeetSemilattice;

fn plain(n: usize) -> Variables {
    Variables::Plain((1..=n).map(|i| format!("x{i}")).collect())
}

fn ideal_of(n: usize, sets: &[u64]) -> MonomialIdeal {
    let vars = plain(n);
    let gens = sets.iter().map(|s| vars.from_flat(*s)).collect();
    MonomialIdeal::new(vars, gens)
}

fn names(complex: &SimplicialComplex) -> Vec<Vec<String>> {
    complex.facets().iter().map(|f| complex.labels_of(*f)).collect()
}

fn rendered(ideal: &MonomialIdeal) -> BTreeSet<String> {
    ideal.render().into_iter().collect()
}

fn set(items: &[&str]) -> BTreeSet<String> {
    items.iter().map(|s| s.to_string()).collect()
}

/// Every minimal transversal by scanning all subsets.
fn transversals_by_scan(n: usize, family: &[u64]) -> Vec<u64> {
    let hits: Vec<u64> = (0..=bits::full(n)).filter(|s| family.iter().all(|f| f & s != 0)).collect();
    let mut out: Vec<u64> =
        hits.iter().copied().filter(|s| !hits.iter().any(|t| t != s && bits::is_subset(*t, *s))).collect();
    sort_sets(&mut out);
    out
}

/// `Δ∨` from its definition: complements of nonfaces, then the maximal ones.
fn dual_by_definition(complex: &SimplicialComplex) -> Vec<u64> {
    let all = complex.all_vertices();
    let faces: Vec<u64> = (0..=all).filter(|s| !complex.contains(*s)).map(|s| all & !s).collect();
    let mut out: Vec<u64> =
        faces.iter().copied().filter(|f| !faces.iter().any(|g| g != f && bits::is_subset(*f, *g))).collect();
    sort_sets(&mut out);
    out
}

fn element_set(lattice: &MeetSemilattice, labels: &[&str]) -> u64 {
    lattice.poset().set_of(labels).unwrap()
}

#[test]
fn stanley_reisner_examples() {
    let one = stanley_reisner_complex(&ideal_of(2, &[0b11])).unwrap();
    assert_eq!(names(&one), vec![vec!["x1"], vec!["x2"]]);
    let zero = stanley_reisner_complex(&MonomialIdeal::zero(plain(3))).unwrap();
    assert_eq!(names(&zero), vec![vec!["x1", "x2", "x3"]]);
    let path = stanley_reisner_complex(&ideal_of(3, &[0b011, 0b110])).unwrap();
    assert_eq!(names(&path), vec![vec!["x2"], vec!["x1", "x3"]]);
    assert_eq!(stanley_reisner_complex(&MonomialIdeal::unit(plain(2))), Err(Error::UnitIdeal));
    assert!(path.stanley_reisner_ideal().same_ideal(&ideal_of(3, &[0b011, 0b110])));
}

#[test]
fn facet_complex_examples() {
    let edge = facet_complex(&ideal_of(2, &[0b11])).unwrap();
    assert_eq!(names(&edge), vec![vec!["x1", "x2"]]);
    let b2 = facet_complex(&lattice_ideal(&fixtures::boolean(2))).unwrap();
    assert_eq!(b2.vertices().len(), 4);
    assert_eq!(b2.facets().len(), 4);
    assert!(b2.facets().iter().all(|f| f.count_ones() == 2));
    assert!(facet_complex(&MonomialIdeal::zero(plain(3))).unwrap().is_void());
}

#[test]
fn vertex_cover_examples() {
    let edge = SimplicialComplex::new(vec!["1".into(), "2".into()], vec![0b11]).unwrap();
    assert_eq!(edge.minimal_vertex_covers().unwrap(), vec![0b01, 0b10]);
    let disjoint = SimplicialComplex::new((1..=4).map(|i| i.to_string()).collect(), vec![0b0011, 0b1100]).unwrap();
    assert_eq!(disjoint.minimal_vertex_covers().unwrap().len(), 4);
    assert!(disjoint.minimal_vertex_covers().unwrap().iter().all(|c| c.count_ones() == 2));
    assert_eq!(SimplicialComplex::void(vec!["1".into()]).minimal_vertex_covers(), Err(Error::NoFacets));

    let b2 = fixtures::boolean(2);
    let gamma = facet_complex(&lattice_ideal(&b2)).unwrap();
    let covers: Vec<Vec<String>> = gamma.minimal_vertex_covers().unwrap().iter().map(|c| gamma.labels_of(*c)).collect();
    let p = &b2.irreducible_labels();
    let expected: BTreeSet<Vec<String>> = p.iter().map(|l| vec![format!("x_{l}"), format!("y_{l}")]).collect();
    assert_eq!(covers.into_iter().collect::<BTreeSet<_>>(), expected);
}

#[test]
fn alexander_dual_examples() {
    let vertex = SimplicialComplex::new(vec!["1".into(), "2".into()], vec![0b01]).unwrap();
    assert_eq!(vertex.alexander_dual().facets(), dual_by_definition(&vertex).as_slice());
    let boundary = SimplicialComplex::new((1..=3).map(|i| i.to_string()).collect(), vec![0b011, 0b101, 0b110]).unwrap();
    assert_eq!(boundary.alexander_dual().facets(), dual_by_definition(&boundary).as_slice());
    assert_eq!(boundary.alexander_dual().facets(), &[0]);
    let simplex = SimplicialComplex::simplex(vec!["1".into(), "2".into()]);
    assert!(simplex.alexander_dual().is_void());
    assert_eq!(simplex.alexander_dual().alexander_dual(), simplex);
}

#[test]
fn dual_ideal_examples() {
    let b2 = fixtures::boolean(2);
    let dual = dual_ideal(&lattice_ideal(&b2)).unwrap();
    let p = b2.irreducible_labels();
    assert_eq!(rendered(&dual), p.iter().map(|l| format!("x_{l}y_{l}")).collect());

    let principal = ideal_of(4, &[0b1111]);
    assert_eq!(dual_ideal(&principal).unwrap(), ideal_of(4, &[1, 2, 4, 8]));
    assert_eq!(dual_ideal(&MonomialIdeal::zero(plain(2))), Err(Error::ZeroIdeal));
    assert_eq!(dual_ideal(&MonomialIdeal::unit(plain(2))), Err(Error::UnitIdeal));
}

/// The final example's lattice: the dual is `(x_p y_q : p <= q)`, seven
/// generators for `a < c, a < d, b < d`.
#[test]
fn dual_of_final_example_lattice() {
    let l = fixtures::l8();
    let dual = dual_ideal(&lattice_ideal(&l)).unwrap();
    let p = l.irreducible_poset();
    let mut expected = BTreeSet::new();
    for i in 0..p.len() {
        for j in 0..p.len() {
            if p.leq(i, j) {
                expected.insert(format!("x_{}y_{}", p.label(i), p.label(j)));
            }
        }
    }
    assert_eq!(expected.len(), 7);
    assert_eq!(rendered(&dual), expected);
}

#[test]
fn fixture_duals_agree_across_routes() {
    for l in fixtures::all() {
        let h = lattice_ideal(&l);
        if h.is_unit() {
            continue;
        }
        let cover = dual_ideal(&h).unwrap();
        assert_eq!(cover, dual_ideal_by_complement(&h).unwrap());
        if h.vars().count() <= BRUTE_FORCE_VERTEX_LIMIT {
            assert_eq!(cover, dual_ideal_by_nonfaces(&h).unwrap());
        }
        assert_eq!(dual_ideal(&cover).unwrap(), h.minimal_generators());
    }
}

#[test]
fn height_two_primes() {
    let b2 = height2_classification(&fixtures::boolean(2)).unwrap();
    assert!(b2.matches_order && !b2.has_higher_prime && b2.consistent);
    let l11 = height2_classification(&fixtures::l11()).unwrap();
    assert!(l11.has_higher_prime && !l11.is_distributive && l11.consistent && l11.matches_order);
    let single = height2_classification(&fixtures::chain(1)).unwrap();
    assert!(single.height_two.is_empty() && single.consistent);
    for l in fixtures::all().into_iter().filter(|l| l.is_lattice()) {
        let report = height2_classification(&l).unwrap();
        assert!(report.consistent && report.matches_order, "{report:?}");
    }
}

#[test]
fn flag_dual_iff_distributive() {
    assert!(is_flag_dual(&fixtures::boolean(3)).unwrap());
    assert!(!is_flag_dual(&fixtures::l11()).unwrap());
    assert!(is_flag_dual(&fixtures::l8()).unwrap());
    for l in fixtures::all() {
        match is_flag_dual(&l) {
            Ok(flag) => assert_eq!(Some(flag), l.classify().is_distributive),
            Err(e) => assert_eq!((e, l.is_lattice()), (Error::NotLattice, false)),
        }
    }
}

#[test]
fn poset_ideal_dual_example() {
    let l = fixtures::l9();
    let ideal = element_set(&l, &["0", "a", "b", "ab", "c", "d", "abc"]);
    let formula = poset_ideal_dual(&l, ideal).unwrap();
    let brute = dual_ideal(&subfamily_ideal(&l, ideal)).unwrap();
    assert_eq!(formula, brute);
    assert_eq!(
        rendered(&formula),
        set(&["x_ay_a", "x_ay_c", "x_by_b", "x_by_d", "x_cy_c", "x_dy_d", "y_ay_d", "y_cy_d"])
    );

    let all = l.poset().all();
    assert_eq!(poset_ideal_dual(&l, all).unwrap(), dual_ideal(&lattice_ideal(&l)).unwrap());
    for p in 0..l.len() {
        let ip = l.one_cogenerated(p).0;
        if ip == 0 {
            continue;
        }
        assert_eq!(poset_ideal_dual(&l, ip).unwrap(), dual_ideal(&subfamily_ideal(&l, ip)).unwrap());
    }
}

#[test]
fn poset_ideal_dual_errors() {
    let l = fixtures::l9();
    assert_eq!(poset_ideal_dual(&fixtures::l11(), 1), Err(Error::NotDistributive));
    assert_eq!(poset_ideal_dual(&l, 0), Err(Error::EmptyIdeal));
    assert!(matches!(poset_ideal_dual(&l, element_set(&l, &["a"])), Err(Error::NotPosetIdeal(_))));
}

#[test]
fn one_cogenerated_decomposition() {
    for l in [fixtures::l8(), fixtures::l9(), fixtures::boolean(3), fixtures::chain(3)] {
        for ideal in l.poset().enumerate_ideals(64).unwrap().into_iter().filter(|i| i.0 != 0) {
            let h = subfamily_ideal(&l, ideal.0);
            assert!(ideal_by_one_cogenerated(&l, ideal.0).same_ideal(&h));
            assert!(dual_by_one_cogenerated(&l, ideal.0).unwrap().same_ideal(&dual_ideal(&h).unwrap()));
            assert_eq!(poset_ideal_dual(&l, ideal.0).unwrap(), dual_ideal(&h).unwrap());
        }
    }
}

fn letters(lattice: &MeetSemilattice, mono: &SquarefreeMonomial) -> String {
    let labels = lattice.irreducible_labels();
    let mut xs: Vec<char> = bits::members(mono.x).map(|i| labels[i].chars().next().unwrap()).collect();
    let mut ys: Vec<char> = bits::members(mono.y).map(|i| (b'u' + (labels[i].as_bytes()[0] - b'a')) as char).collect();
    xs.sort();
    ys.sort();
    xs.into_iter().chain(ys).collect()
}

#[test]
fn final_example_intersection() {
    let l = fixtures::l8();
    let all = l.poset().all();
    let top = l.top().unwrap();
    let ideal = all & !(1 << top);
    let coideal = all & !(1 << l.bottom());
    let report = intersect_ideal_coideal(&l, ideal, coideal, Field::Rationals).unwrap();
    let gens: BTreeSet<String> = report.intersection.generators().iter().map(|g| letters(&l, g)).collect();
    assert_eq!(gens, set(&["avwx", "buwx", "acvx", "abwx", "abcx", "abdw"]));
    assert_eq!(report.betti.ranks(), vec![6, 6, 1]);
    assert_eq!(report.betti.get(0, 4), 6);
    assert_eq!(report.betti.get(1, 5), 6);
    assert_eq!(report.betti.get(2, 6), 1);
    assert!(report.linear);
    assert!(report.formula_matches());
    assert_eq!(report.regularity_in_range, Some(true));
}

#[test]
fn boolean_intersection_is_not_linear() {
    let l = fixtures::boolean(3);
    let all = l.poset().all();
    let ideal = all & !(1 << l.top().unwrap());
    let coideal = all & !(1 << l.bottom());
    let report = intersect_ideal_coideal(&l, ideal, coideal, Field::Rationals).unwrap();
    assert!(!report.linear);
    assert!(report.formula_matches());
    assert_eq!(report.regularity_in_range, Some(true));
}

#[test]
fn full_intersection_is_the_lattice_ideal() {
    let l = fixtures::l9();
    let all = l.poset().all();
    let report = intersect_ideal_coideal(&l, all, all, Field::Rationals).unwrap();
    assert!(report.intersection.same_ideal(&lattice_ideal(&l)));
    assert!(report.equals_meet_ideal);
    assert_eq!(report.dual_formula, dual_ideal(&lattice_ideal(&l)).unwrap());
    assert!(matches!(intersect_ideal_coideal(&l, all, 1, Field::Rationals), Err(Error::NotPosetCoideal(_))));
}

#[test]
fn eagon_reiner_examples() {
    assert!(eagon_reiner_cm(&ideal_of(4, &[0b1111]), Field::Rationals).unwrap());
    for (l, expected) in [(fixtures::boolean(3), true), (fixtures::l11(), false)] {
        let dual = dual_ideal(&lattice_ideal(&l)).unwrap();
        assert_eq!(eagon_reiner_cm(&dual, Field::Rationals).unwrap(), expected);
        let complex = stanley_reisner_complex(&dual).unwrap();
        assert_eq!(is_shellable(&complex, 1_000_000).unwrap(), expected);
    }
}

fn vertices(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("v{i}")).collect()
}

#[test]
fn graft_examples() {
    let edge = SimplicialComplex::new(vertices(2), vec![0b11]).unwrap();
    let report = graft_report(&edge, Field::Rationals).unwrap();
    assert_eq!(report.grafted.facets().len(), 3);
    assert!(report.cohen_macaulay && report.sigma_pure && report.sigma_facet_size);

    let triangle = SimplicialComplex::from_file(
        &serde_json::from_str(include_str!("../../fixtures/complex_triangle.json")).unwrap(),
    )
    .unwrap();
    let report = graft_report(&triangle, Field::Rationals).unwrap();
    assert!(report.cohen_macaulay && report.sigma_pure);

    let point = SimplicialComplex::new(vertices(1), vec![0b1]).unwrap();
    let grafted = graft(&point).unwrap();
    assert_eq!(names(&grafted), vec![vec!["v1", "v1'"]]);
    assert!(graft_report(&point, Field::Rationals).unwrap().cohen_macaulay);
}

fn graph(n: usize, edges: &[(usize, usize)]) -> BipartiteGraph {
    BipartiteGraph::new(
        (1..=n).map(|i| format!("x{i}")).collect(),
        (1..=n).map(|i| format!("y{i}")).collect(),
        edges.to_vec(),
    )
    .unwrap()
}

#[test]
fn matching_graph_gives_boolean_lattice() {
    let g = graph(3, &[(0, 0), (1, 1), (2, 2)]);
    let lg = bipartite_lattice(&g).unwrap();
    assert_eq!(lg.poset.relation_size(), 3);
    assert_eq!(lg.lattice.len(), 8);
    assert!(lg.reproduces_edges && lg.dual_matches);
}

#[test]
fn chain_graph_gives_chain() {
    let file: GraphFile = serde_json::from_str(include_str!("../../fixtures/graph_chain2.json")).unwrap();
    let g = BipartiteGraph::from_file(&file).unwrap();
    let lg = bipartite_lattice(&g).unwrap();
    assert_eq!(lg.lattice.len(), 3);
    assert!(lg.poset.leq(0, 1));
    assert!(lg.reproduces_edges && lg.dual_matches);
    assert_eq!(BipartiteGraph::from_file(&g.to_file()).unwrap(), g);
}

#[test]
fn bipartite_errors() {
    assert_eq!(bipartite_lattice(&graph(2, &[(0, 0), (1, 0)])).unwrap_err(), Error::NoPerfectMatching);
    let cycle = graph(2, &[(0, 0), (1, 1), (0, 1), (1, 0)]);
    assert!(matches!(bipartite_lattice(&cycle), Err(Error::NotAPartialOrder(_))));
    let intransitive = graph(3, &[(0, 0), (1, 1), (2, 2), (0, 1), (1, 2)]);
    assert!(matches!(bipartite_lattice(&intransitive), Err(Error::NotAPartialOrder(_))));
}

fn example_complex() -> (SimplicialComplex, Vec<String>) {
    let l = fixtures::l9();
    let ideal = element_set(&l, &["0", "a", "b", "ab", "c", "d", "abc"]);
    let complex = facet_complex(&poset_ideal_dual(&l, ideal).unwrap()).unwrap();
    let left = complex.vertices().iter().filter(|v| v.starts_with("x_")).cloned().collect();
    (complex, left)
}

#[test]
fn poset_ideal_complex_satisfies_all_three_conditions() {
    let (complex, left) = example_complex();
    let report = poset_ideal_complex_check(&complex, &left, Field::Rationals, 20).unwrap();
    assert!(report.cohen_macaulay && report.pure);
    assert_eq!(report.poset_ideal, Some(true));
    assert!(report.equivalent());
    assert_eq!(report.witness.unwrap().len(), 7);
}

#[test]
fn non_pure_complex_fails_all_three_conditions() {
    // Same graph as the example, plus the facet {y_a, y_b, y_d}, which is
    // not the dual of any poset ideal.
    let (complex, left) = example_complex();
    let extra = ["y_a", "y_b", "y_d"].iter().map(|v| complex.vertices().iter().position(|u| u == v).unwrap());
    let mut facets: Vec<u64> = complex.facets().iter().copied().filter(|f| f & 0x0f != 0).collect();
    facets.push(bits::from_indices(extra));
    let other = SimplicialComplex::new(complex.vertices().to_vec(), facets).unwrap();
    let report = poset_ideal_complex_check(&other, &left, Field::Rationals, 20).unwrap();
    assert!(report.equivalent(), "{report:?}");
    assert_eq!(report.poset_ideal, Some(report.pure));
}

#[test]
fn hypothesis_violations() {
    let (complex, left) = example_complex();
    let mut facets = complex.facets().to_vec();
    facets.push(0b0011);
    let inside = SimplicialComplex::new(complex.vertices().to_vec(), facets).unwrap();
    assert!(matches!(
        poset_ideal_complex_check(&inside, &left, Field::Rationals, 20),
        Err(Error::HypothesisViolated(1, _))
    ));
    let right: Vec<String> = complex.vertices().iter().filter(|v| v.starts_with("y_")).cloned().collect();
    let swapped = poset_ideal_complex_check(&complex, &right, Field::Rationals, 20);
    assert!(matches!(swapped, Err(Error::HypothesisViolated(1, _))));
}

fn family(n: usize) -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(1..=bits::full(n), 1..6)
}

proptest! {
    #[test]
    fn transversals_match_scan(n in 1usize..9, fam in family(8)) {
        let fam: Vec<u64> = fam.into_iter().map(|f| f & bits::full(n)).filter(|f| *f != 0).collect();
        prop_assume!(!fam.is_empty());
        prop_assert_eq!(minimal_transversals(&fam), transversals_by_scan(n, &fam));
    }

    #[test]
    fn complex_dual_is_an_involution(n in 1usize..7, fam in family(6)) {
        let fam: Vec<u64> = fam.into_iter().map(|f| f & bits::full(n)).collect();
        let complex = SimplicialComplex::new(vertices(n), fam).unwrap();
        let dual = complex.alexander_dual();
        prop_assert_eq!(dual.facets().to_vec(), dual_by_definition(&complex));
        prop_assert_eq!(dual.alexander_dual(), complex);
    }

    #[test]
    fn dual_ideal_routes_agree(n in 1usize..9, fam in family(8)) {
        let fam: Vec<u64> = fam.into_iter().map(|f| f & bits::full(n)).filter(|f| *f != 0).collect();
        prop_assume!(!fam.is_empty());
        let ideal = ideal_of(n, &fam);
        let cover = dual_ideal(&ideal).unwrap();
        prop_assert_eq!(&cover, &dual_ideal_by_complement(&ideal).unwrap());
        prop_assert_eq!(&cover, &dual_ideal_by_nonfaces(&ideal).unwrap());
        prop_assert_eq!(dual_ideal(&cover).unwrap(), ideal.minimal_generators());
        let primes = minimal_primes(&ideal).unwrap();
        let sr = stanley_reisner_complex(&ideal).unwrap();
        prop_assert!(sr.stanley_reisner_ideal().same_ideal(&ideal));
        prop_assert_eq!(primes.len(), sr.facets().len());
    }

    #[test]
    fn grafting_gives_cohen_macaulay(n in 1usize..5, fam in family(4)) {
        let fam: Vec<u64> = fam.into_iter().map(|f| f & bits::full(n)).filter(|f| *f != 0).collect();
        let complex = SimplicialComplex::new(vertices(n), fam).unwrap();
        let report = graft_report(&complex, Field::Rationals).unwrap();
        prop_assert!(report.cohen_macaulay && report.sigma_pure && report.sigma_facet_size);
    }
}

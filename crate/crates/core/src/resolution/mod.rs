//! Free resolutions of `H_L` and of general squarefree monomial ideals,
//! their verification and minimization, Betti tables and regularity.

mod betti;
mod complex;
mod mapping_cone;
mod taylor;

pub use betti::{
    betti_oracle, betti_table, has_linear_resolution, hochster_betti, regularity, BettiTable, HOCHSTER_VARIABLE_LIMIT,
    ORACLE_LIMIT,
};
pub use complex::{BasisElement, FreeComplex};
pub use mapping_cone::{
    basis_size, cone_multidegree, mapping_cone_resolution, meet_distributive_differential, ordered_neighbors,
    regularity_bounds, DEFAULT_BASIS_CAP,
};
pub use taylor::{taylor_complex, TAYLOR_LIMIT};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits;
    use crate::error::Error;
    use crate::fixtures;
    use crate::linalg::{q, Field};
    use crate::monomial::{lattice_ideal, MonomialIdeal, SquarefreeMonomial, Variables};
    use crate::semilattice::MeetSemilattice;
    use proptest::prelude::*;

    const Q: Field = Field::Rationals;

    fn shifts(c: &FreeComplex, i: usize) -> Vec<(usize, usize)> {
        let mut count = std::collections::BTreeMap::new();
        for b in c.module(i) {
            *count.entry(b.multidegree.degree()).or_insert(0) += 1;
        }
        count.into_iter().collect()
    }

    fn plain(n: usize) -> Variables {
        Variables::Plain((0..n).map(|i| format!("v{i}")).collect())
    }

    #[test]
    fn taylor_examples() {
        let vars = Variables::Paired(["a", "b", "c", "d"].map(String::from).to_vec());
        let m = SquarefreeMonomial::new(0b11, 0);
        let t = taylor_complex(&vars, &[m]).unwrap();
        assert_eq!(t.ranks(), vec![1]);

        let t = taylor_complex(&vars, &[SquarefreeMonomial::new(1, 0), SquarefreeMonomial::new(0, 1)]).unwrap();
        assert_eq!(t.ranks(), vec![2, 1]);
        assert_eq!(t.module(1)[0].multidegree, SquarefreeMonomial::new(1, 1));

        let gens =
            [SquarefreeMonomial::new(0, 0b1100), SquarefreeMonomial::new(0, 0b10), SquarefreeMonomial::new(0, 1)];
        let t = taylor_complex(&vars, &gens).unwrap();
        assert_eq!(t.ranks(), vec![3, 3, 1]);
        assert_eq!(t.module(2)[0].multidegree, SquarefreeMonomial::new(0, 0b1111));
        let ideal = MonomialIdeal::new(vars.clone(), gens.to_vec());
        t.verify_resolution(&ideal, Q).unwrap();

        assert!(matches!(taylor_complex(&vars, &[]), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn taylor_of_lattice_ideals_resolves() {
        for l in [fixtures::boolean(2), fixtures::l7(), fixtures::l8()] {
            let h = lattice_ideal(&l);
            let t = taylor_complex(h.vars(), h.generators()).unwrap();
            t.verify_resolution(&h, Q).unwrap();
        }
    }

    #[test]
    fn flipped_sign_is_not_a_complex() {
        let h = lattice_ideal(&fixtures::boolean(2));
        let mut t = taylor_complex(h.vars(), h.generators()).unwrap();
        let v = t.entry(2, 0, 0);
        t.set_entry(2, 0, 0, -v);
        assert!(matches!(t.verify_complex(), Err(Error::NotAComplex { degree: 1, .. })));

        let mut t = taylor_complex(h.vars(), h.generators()).unwrap();
        t.set_entry(1, 0, 0, q(2));
        assert!(matches!(t.verify_complex(), Err(Error::NotAComplex { degree: 0, .. })));
    }

    #[test]
    fn wrong_ideal_is_rejected() {
        let h = lattice_ideal(&fixtures::boolean(2));
        let t = taylor_complex(h.vars(), h.generators()).unwrap();
        let smaller = MonomialIdeal::new(h.vars().clone(), h.generators()[..3].to_vec());
        assert_eq!(t.verify_resolution(&smaller, Q), Err(Error::WrongAugmentation));
        let partial = taylor_complex(h.vars(), h.generators()).unwrap();
        let truncated = FreeComplex::new(
            partial.vars().clone(),
            partial.modules()[..2].to_vec(),
            vec![partial.differential(1).to_vec()],
            partial.augmentation().to_vec(),
        );
        assert!(matches!(truncated.verify_resolution(&h, Q), Err(Error::NotExact { degree: 1, .. })));
    }

    #[test]
    fn taylor_minimizes_to_oracle() {
        let h = lattice_ideal(&fixtures::boolean(2));
        let t = taylor_complex(h.vars(), h.generators()).unwrap();
        assert_eq!(t.ranks(), vec![4, 6, 4, 1]);
        assert!(!t.is_minimal());
        let m = t.minimize();
        assert!(m.is_minimal());
        assert_eq!(m.ranks(), vec![4, 4, 1]);
        m.verify_resolution(&h, Q).unwrap();
        assert_eq!(BettiTable::from_minimal_complex(&m, Q).unwrap(), betti_oracle(&h, Q).unwrap());
    }

    #[test]
    fn singleton_lattice() {
        let l = fixtures::chain(1);
        let c = mapping_cone_resolution(&l, DEFAULT_BASIS_CAP).unwrap();
        assert_eq!(c.ranks(), vec![1]);
        assert!(c.augmentation_image().is_unit());
        c.verify_resolution(&lattice_ideal(&l), Q).unwrap();
    }

    #[test]
    fn l11_resolution() {
        let l = fixtures::l11();
        let c = mapping_cone_resolution(&l, DEFAULT_BASIS_CAP).unwrap();
        assert_eq!(c.ranks(), vec![11, 15, 6, 1]);
        assert_eq!(shifts(&c, 0), vec![(6, 11)]);
        assert_eq!(shifts(&c, 1), vec![(7, 6), (8, 9)]);
        assert_eq!(shifts(&c, 2), vec![(10, 6)]);
        assert_eq!(shifts(&c, 3), vec![(12, 1)]);
        let h = lattice_ideal(&l);
        c.verify_resolution(&h, Q).unwrap();
        assert!(c.is_minimal());
        assert!(l.is_meet_irredundant());
        let table = betti_oracle(&h, Q).unwrap();
        assert_eq!(BettiTable::from_minimal_complex(&c, Q).unwrap(), table);
        assert_eq!(table.regularity(), Some(9));
        assert_eq!(regularity_bounds(&l), (9, 9));
        assert!(!has_linear_resolution(&h, Q).unwrap());
    }

    #[test]
    fn cone_multidegree_is_lcm() {
        for l in fixtures::all() {
            for p in 0..l.len() {
                for s in bits::subsets(l.lower_neighbors(p)) {
                    let u = crate::monomial::generator_monomial;
                    let lcm = bits::members(s).fold(u(&l, p), |acc, t| acc.lcm(&u(&l, t)));
                    assert_eq!(cone_multidegree(&l, p, s), lcm);
                }
            }
        }
    }

    #[test]
    fn l7_resolution_and_lift() {
        let l = fixtures::l7();
        let c = mapping_cone_resolution(&l, DEFAULT_BASIS_CAP).unwrap();
        // Σ_p C(|N(p)|, i) from the cover lists.
        let by_count: Vec<usize> = (0..=2)
            .map(|i| {
                (0..l.len())
                    .map(|p| bits::subsets(l.lower_neighbors(p)).filter(|s| s.count_ones() as usize == i).count())
                    .sum()
            })
            .collect();
        assert_eq!(c.ranks(), by_count);
        assert_eq!(c.ranks(), vec![7, 8, 2]);
        c.verify_resolution(&lattice_ideal(&l), Q).unwrap();
        assert!(c.is_minimal());

        let col = c.module(2).iter().position(|b| b.label == "b(p;{q1,q2})").unwrap();
        let mut terms = c.boundary_terms(2, col);
        terms.sort();
        let common =
            ["-x_q4x_q5y_q3*b(q1;{q3})", "-x_q4x_q5x_q1*b(q3;{r})", "-y_q3y_q1*b(p;{q1})", "+y_q4y_q5*b(p;{q2})"];
        let first = ["+x_q3x_q1y_q4*b(q2;{q4})", "+x_q3x_q5x_q1*b(q4;{r})"];
        let second = ["+x_q3x_q1y_q5*b(q2;{q5})", "+x_q3x_q4x_q1*b(q5;{r})"];
        let option = |extra: &[&str]| {
            let mut v: Vec<String> = common.iter().chain(extra).map(|s| s.to_string()).collect();
            v.sort();
            v
        };
        assert!(terms == option(&first) || terms == option(&second), "{terms:?}");
    }

    #[test]
    fn redundant_lattice_is_not_minimal() {
        let l = fixtures::redundant();
        assert!(!l.is_meet_irredundant());
        let h = lattice_ideal(&l);
        let c = mapping_cone_resolution(&l, DEFAULT_BASIS_CAP).unwrap();
        c.verify_resolution(&h, Q).unwrap();
        assert!(!c.is_minimal());
        let m = c.minimize();
        assert!(m.is_minimal());
        m.verify_resolution(&h, Q).unwrap();
        assert!(m.ranks().iter().sum::<usize>() < c.ranks().iter().sum::<usize>());
        assert_eq!(BettiTable::from_minimal_complex(&m, Q).unwrap(), betti_oracle(&h, Q).unwrap());
        let (upper, _) = regularity_bounds(&l);
        assert!(regularity(&h, Q).unwrap() <= upper);
    }

    fn meet_distributive_fixtures() -> Vec<MeetSemilattice> {
        vec![
            fixtures::boolean(2),
            fixtures::boolean(3),
            fixtures::l8(),
            fixtures::l9(),
            fixtures::chain(1),
            fixtures::chain(3),
            fixtures::chain(5),
        ]
    }

    #[test]
    fn closed_form_matches_mapping_cone() {
        for l in meet_distributive_fixtures() {
            let closed = meet_distributive_differential(&l).unwrap();
            let cone = mapping_cone_resolution(&l, DEFAULT_BASIS_CAP).unwrap();
            let h = lattice_ideal(&l);
            closed.verify_resolution(&h, Q).unwrap();
            assert!(closed.is_minimal());
            assert_eq!(closed.ranks(), cone.ranks());
            for i in 1..=closed.length() {
                assert_eq!(closed.differential(i), cone.differential(i), "degree {i}");
            }
            assert_eq!(BettiTable::from_minimal_complex(&closed, Q).unwrap(), betti_oracle(&h, Q).unwrap());
            assert!(has_linear_resolution(&h, Q).unwrap());
        }
        assert_eq!(meet_distributive_differential(&fixtures::l11()).err(), Some(Error::NotMeetDistributive));
    }

    #[test]
    fn closed_form_on_b2_and_chain() {
        let l = fixtures::boolean(2);
        let c = meet_distributive_differential(&l).unwrap();
        let col = c.module(2).iter().position(|b| b.label.starts_with("b(pq;")).unwrap();
        assert_eq!(c.differential(2)[col].len(), 4);

        let l = fixtures::chain(3);
        let c = meet_distributive_differential(&l).unwrap();
        let labels: Vec<&str> = c.module(1).iter().map(|b| b.label.as_str()).collect();
        assert_eq!(labels, vec!["b(1;{0})", "b(2;{1})"]);
        assert!(c.differential(1).iter().all(|col| col.len() == 2));
    }

    #[test]
    fn closed_form_is_multihomogeneous() {
        for l in meet_distributive_fixtures() {
            let c = meet_distributive_differential(&l).unwrap();
            for i in 1..=c.length() {
                for (col, column) in c.differential(i).iter().enumerate() {
                    for (row, _) in column {
                        assert!(c.entry_monomial(i, *row, col).is_some_and(|m| m.degree() == 1));
                    }
                }
            }
        }
    }

    #[test]
    fn oracle_examples() {
        let vars = plain(3);
        let principal = MonomialIdeal::new(vars.clone(), vec![SquarefreeMonomial::new(0b111, 0)]);
        let t = betti_oracle(&principal, Q).unwrap();
        assert_eq!(t.graded().into_iter().collect::<Vec<_>>(), vec![((0, 3), 1)]);
        assert_eq!(regularity(&principal, Q).unwrap(), 3);
        assert!(has_linear_resolution(&principal, Q).unwrap());

        let h = lattice_ideal(&fixtures::boolean(2));
        let t = betti_oracle(&h, Q).unwrap();
        let graded: Vec<_> = t.graded().into_iter().collect();
        assert_eq!(graded, vec![((0, 2), 4), ((1, 3), 4), ((2, 4), 1)]);
        assert_eq!(t.regularity(), Some(2));
        assert!(has_linear_resolution(&h, Q).unwrap());

        let mixed =
            MonomialIdeal::new(vars.clone(), vec![SquarefreeMonomial::new(1, 0), SquarefreeMonomial::new(0b110, 0)]);
        assert_eq!(has_linear_resolution(&mixed, Q), Err(Error::MixedDegrees));
        assert_eq!(regularity(&MonomialIdeal::zero(vars), Q), Err(Error::ZeroIdeal));
    }

    #[test]
    fn oracle_on_l11_matches_displayed_shifts() {
        let t = betti_oracle(&lattice_ideal(&fixtures::l11()), Q).unwrap();
        let graded: Vec<_> = t.graded().into_iter().collect();
        assert_eq!(graded, vec![((0, 6), 11), ((1, 7), 6), ((1, 8), 9), ((2, 10), 6), ((3, 12), 1)]);
        assert!(t.render().contains("total"));
    }

    #[test]
    fn prime_field_agrees_on_fixtures() {
        for l in fixtures::all() {
            let h = lattice_ideal(&l);
            let a = betti_oracle(&h, Q).unwrap();
            let b = betti_oracle(&h, Field::Prime(32003)).unwrap();
            assert_eq!(a.multigraded, b.multigraded);
        }
    }

    #[test]
    fn real_projective_plane_depends_on_characteristic() {
        // Stanley–Reisner ideal of the six-vertex triangulation of RP^2.
        let facets: [[usize; 3]; 10] = [
            [0, 1, 2],
            [0, 2, 3],
            [0, 3, 4],
            [0, 4, 5],
            [0, 5, 1],
            [1, 2, 4],
            [2, 3, 5],
            [3, 4, 1],
            [4, 5, 2],
            [5, 1, 3],
        ];
        let faces: Vec<u64> = facets.iter().map(|f| bits::from_indices(f.iter().copied())).collect();
        let is_face = |s: u64| faces.iter().any(|f| bits::is_subset(s, *f));
        let mut nonfaces: Vec<SquarefreeMonomial> =
            (0..64u64).filter(|&s| !is_face(s)).map(|s| SquarefreeMonomial::new(s, 0)).collect();
        nonfaces.sort();
        let ideal = MonomialIdeal::new(plain(6), nonfaces);
        let over_q = hochster_betti(&ideal, Q).unwrap();
        let over_2 = hochster_betti(&ideal, Field::Prime(2)).unwrap();
        assert_ne!(over_q.multigraded, over_2.multigraded);
        assert!(over_2.get(3, 6) == 1 && over_q.get(3, 6) == 0);
    }

    fn random_ideal() -> impl Strategy<Value = MonomialIdeal> {
        prop::collection::vec(1u64..64, 1..8).prop_map(|gens| {
            MonomialIdeal::new(plain(6), gens.into_iter().map(|g| SquarefreeMonomial::new(g, 0)).collect())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn hochster_agrees_with_oracle(ideal in random_ideal()) {
            prop_assert_eq!(hochster_betti(&ideal, Q).unwrap().multigraded, betti_oracle(&ideal, Q).unwrap().multigraded);
        }

        #[test]
        fn minimized_taylor_matches_oracle(ideal in random_ideal()) {
            let t = taylor_complex(ideal.vars(), ideal.generators()).unwrap();
            t.verify_resolution(&ideal, Q).unwrap();
            let m = t.minimize();
            m.verify_resolution(&ideal, Q).unwrap();
            prop_assert_eq!(BettiTable::from_minimal_complex(&m, Q).unwrap(), betti_oracle(&ideal, Q).unwrap());
        }

        #[test]
        fn graded_is_support_sum(ideal in random_ideal()) {
            let t = betti_oracle(&ideal, Q).unwrap();
            let total: usize = t.multigraded.values().sum();
            prop_assert_eq!(total, t.graded().values().sum::<usize>());
            prop_assert_eq!(total, t.ranks().iter().sum::<usize>());
        }
    }
}

//! Property-based checks of the library invariants on randomized inputs:
//! validator soundness on arbitrary connection tables, and algebraic laws on
//! random members of the built-in families under dualizing and rebasing.

use proptest::prelude::*;

use maniplex::catalog::{cube, ditope, medial, point, polygon, prism, simplex, torus_44, two_orbit_stg};
use maniplex::document::{parse, serialize, Document};
use maniplex::dot::export_dot;
use maniplex::mixing::{find_covering, mix};
use maniplex::polytopality::{lower_variance_group, pip_check, pip_check_recursive, PipMode};
use maniplex::symmetry::{automorphisms, flag_orbits, rooted_isomorphic};
use maniplex::{ColorSet, Error, Premaniplex, Rooted};

// --- generators -------------------------------------------------------------

fn bits_to_colors(bits: u8, rank: usize) -> ColorSet {
    (0..rank).filter(|i| bits >> i & 1 == 1).fold(ColorSet::empty(), ColorSet::with)
}

fn leaf3() -> BoxedStrategy<Rooted> {
    prop_oneof![
        (1i64..=3, 0i64..=2).prop_map(|(b, c)| torus_44(b, c).unwrap()),
        Just(cube(3).unwrap()),
        Just(simplex(3).unwrap()),
        (3usize..=6).prop_map(|p| prism(p).unwrap()),
        (2usize..=6).prop_map(|p| ditope(&polygon(p).unwrap())),
        Just(medial(&cube(3).unwrap()).unwrap()),
        (0u8..7).prop_map(|bits| two_orbit_stg(3, bits_to_colors(bits, 3)).unwrap()),
        Just(point(3).unwrap()),
    ]
    .boxed()
}

/// A rank-3 premaniplex: a family member, optionally dualized, at a random
/// base flag.
fn premaniplex3() -> BoxedStrategy<Rooted> {
    (leaf3(), any::<bool>(), any::<u16>())
        .prop_map(|(p, dualize, seed)| {
            let p = if dualize { p.dual() } else { p };
            let base = seed as usize % p.flag_count();
            p.rebase(base).unwrap()
        })
        .boxed()
}

/// An involution on 0..m with a random set of transposed pairs.
fn involution_row(m: usize) -> BoxedStrategy<Vec<usize>> {
    (proptest::collection::vec(any::<u32>(), m), 0..=m)
        .prop_map(move |(priorities, pair_budget)| {
            let mut order: Vec<usize> = (0..m).collect();
            order.sort_by_key(|&i| priorities[i]);
            let mut row: Vec<usize> = (0..m).collect();
            for t in 0..(pair_budget / 2).min(m / 2) {
                let (a, b) = (order[2 * t], order[2 * t + 1]);
                row[a] = b;
                row[b] = a;
            }
            row
        })
        .boxed()
}

/// Connection tables that are sometimes valid (involution rows with random
/// commutation/connectivity) and sometimes arbitrary garbage.
fn tables() -> BoxedStrategy<Vec<Vec<usize>>> {
    (1usize..=4, 2usize..=6)
        .prop_flat_map(|(rank, flags)| {
            prop_oneof![
                proptest::collection::vec(involution_row(flags), rank),
                proptest::collection::vec(proptest::collection::vec(0..flags, flags), rank),
            ]
        })
        .boxed()
}

/// Checks the premaniplex definition directly, without the library.
fn verify_table(rows: &[Vec<usize>]) -> bool {
    let Some(first) = rows.first() else { return false };
    let m = first.len();
    if m == 0 || rows.iter().any(|row| row.len() != m) {
        return false;
    }
    for row in rows {
        if row.iter().any(|&image| image >= m) {
            return false;
        }
        if (0..m).any(|f| row[row[f]] != f) {
            return false;
        }
    }
    for i in 0..rows.len() {
        for j in i + 2..rows.len() {
            if (0..m).any(|f| rows[i][rows[j][f]] != rows[j][rows[i][f]]) {
                return false;
            }
        }
    }
    let mut seen = vec![false; m];
    let mut stack = vec![0usize];
    seen[0] = true;
    while let Some(f) = stack.pop() {
        for row in rows {
            if !seen[row[f]] {
                seen[row[f]] = true;
                stack.push(row[f]);
            }
        }
    }
    seen.into_iter().all(|v| v)
}

// --- properties -------------------------------------------------------------

proptest! {
    #[test]
    fn validator_accepts_exactly_the_valid_tables(rows in tables()) {
        let valid = verify_table(&rows);
        match Premaniplex::new(rows.clone()) {
            Ok(p) => {
                prop_assert!(valid, "accepted an invalid table");
                prop_assert_eq!(p.flag_count(), rows[0].len());
                prop_assert_eq!(p.rank(), rows.len());
            }
            Err(Error::NotInvolution { color, flag }) => {
                prop_assert!(rows[color].get(rows[color][flag]) != Some(&flag));
            }
            Err(_) => prop_assert!(!valid, "rejected a valid table"),
        }
    }

    #[test]
    fn dual_is_an_involution(p in premaniplex3()) {
        let twice = p.dual().dual();
        prop_assert_eq!(twice.graph().connections(), p.graph().connections());
        prop_assert_eq!(twice.base(), p.base());
        prop_assert_eq!(p.dual().adjacent(p.base(), 0), p.adjacent(p.base(), p.rank() - 1));
    }

    #[test]
    fn documents_round_trip(p in premaniplex3()) {
        let doc = Document::from_rooted(&p);
        let reparsed = parse(&serialize(&doc)).unwrap();
        prop_assert_eq!(&reparsed, &doc);
        let rebuilt = reparsed.to_rooted().unwrap();
        prop_assert_eq!(rebuilt.graph().connections(), p.graph().connections());
        prop_assert_eq!(rebuilt.base(), p.base());
    }

    #[test]
    fn dot_export_is_deterministic_with_exact_counts(p in premaniplex3()) {
        let dot = export_dot(&p);
        prop_assert_eq!(&dot, &export_dot(&p));
        let nodes = dot.lines().filter(|l| l.ends_with(';') && !l.contains("--")).count();
        prop_assert_eq!(nodes, p.flag_count());
        let expected_edges: usize = (0..p.rank())
            .map(|i| {
                let fixed = (0..p.flag_count()).filter(|&f| p.adjacent(f, i) == f).count();
                fixed + (p.flag_count() - fixed) / 2
            })
            .sum();
        prop_assert_eq!(dot.lines().filter(|l| l.contains("--")).count(), expected_edges);
    }

    #[test]
    fn canonical_forms_classify_rooted_isomorphism(a in premaniplex3(), b in premaniplex3()) {
        prop_assert_eq!(rooted_isomorphic(&a, &b), a.canonical_form() == b.canonical_form());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn automorphism_groups_are_semiregular(p in premaniplex3()) {
        let group = automorphisms(&p);
        for element in group.elements() {
            if !element.is_identity() {
                prop_assert!((0..p.flag_count()).all(|f| element.apply(f) != f));
            }
        }
        prop_assert_eq!(group.order() * group.orbit_count(), p.flag_count());
        prop_assert_eq!(group.orbit_count(), flag_orbits(&p).block_count());
    }

    #[test]
    fn mix_projections_are_coverings(a in premaniplex3(), b in premaniplex3()) {
        let result = mix(&a, &b).unwrap();
        prop_assert!(result.left().is_valid());
        prop_assert!(result.right().is_valid());
        prop_assert_eq!(result.left().apply(result.mix.base()), a.base());
        prop_assert_eq!(result.right().apply(result.mix.base()), b.base());
        let swapped = mix(&b, &a).unwrap().mix;
        prop_assert!(rooted_isomorphic(&result.mix, &swapped));
        if a.is_maniplex() && b.is_maniplex() {
            prop_assert!(result.mix.is_maniplex());
        }
    }

    #[test]
    fn variance_order_is_the_fiber_size(a in premaniplex3(), b in premaniplex3()) {
        let group = lower_variance_group(&a, &b).unwrap();
        if group.well_defined {
            let mixed = mix(&a, &b).unwrap().mix;
            prop_assert_eq!(group.order() * b.flag_count(), mixed.flag_count());
            let covered = find_covering(&b, &a).unwrap().is_some();
            prop_assert_eq!(group.is_trivial(), covered);
        }
    }

    #[test]
    fn recursive_pip_modes_agree(a in premaniplex3(), b in premaniplex3()) {
        let mixed = mix(&a, &b).unwrap().mix;
        if mixed.is_maniplex() {
            let direct = pip_check(&mixed).unwrap();
            prop_assert_eq!(pip_check_recursive(&mixed, PipMode::FacetOnly).unwrap(), direct);
            prop_assert_eq!(pip_check_recursive(&mixed, PipMode::FacetAndVertex).unwrap(), direct);
            match pip_check_recursive(&mixed, PipMode::MedialTransitive) {
                Ok(verdict) => prop_assert_eq!(verdict, direct),
                Err(Error::ModePrecondition(_)) => {}
                Err(e) => return Err(TestCaseError::fail(e.to_string())),
            }
        }
    }

    #[test]
    fn sections_of_polytopes_are_polytopes(p in premaniplex3()) {
        if p.is_maniplex() && pip_check(&p).unwrap() {
            let lifted = ditope(&p);
            prop_assert!(pip_check(&lifted).unwrap());
            prop_assert!(pip_check(&lifted.facet().unwrap()).unwrap());
            prop_assert!(pip_check(&lifted.vertex_figure().unwrap()).unwrap());
            prop_assert!(rooted_isomorphic(&lifted.facet().unwrap(), &p));
        }
    }
}

//! 3-SAT gadgets: strong cliques against satisfiability by exhaustive
//! assignment.

use proptest::prelude::*;
use strong_cliques::generators::{
    parse_dimacs_cnf, random_3sat, sat_bruteforce, sat_gadget, sat_gadget_prime, Assumptions,
    Literal, SatError, SatInstance,
};
use strong_cliques::graph::is_weakly_chordal;
use strong_cliques::oracle;
use testkit::{mask_of, satisfiable, Brute};

/// Every clause on variables 1, 2, 3 with distinct variables.
fn clauses_over_three() -> Vec<[Literal; 3]> {
    (0..8)
        .map(|s: i32| [1, 2, 3].map(|v| if s >> (v - 1) & 1 == 1 { -v } else { v }))
        .collect()
}

fn check_plain_gadget(phi: &SatInstance) -> bool {
    let unsat = !satisfiable(phi.num_vars(), phi.clauses());
    let gadget = sat_gadget(phi).unwrap();
    let g = &gadget.graph;
    let b = Brute::new(g);
    let clause = mask_of(&gadget.clause_clique);
    assert!(b.is_clique(clause));
    assert_eq!(b.is_strong(clause), unsat, "{phi}");
    for &(x, nx) in &gadget.literal_pairs {
        assert!(b.is_strong(1 << x | 1 << nx), "{phi}");
    }
    // the canonical cliques partition the vertices, so the gadget is
    // localizable exactly when the clause clique is strong
    assert_eq!(b.localizable(), unsat, "{phi}");
    assert!(is_weakly_chordal(g).is_weakly_chordal(), "{phi}");
    unsat
}

#[test]
fn clause_clique_strong_iff_unsatisfiable_on_three_variables() {
    let all = clauses_over_three();
    let mut unsat = 0;
    for subset in 1u32..1 << all.len() {
        let clauses: Vec<_> = (0..all.len())
            .filter(|&i| subset >> i & 1 == 1)
            .map(|i| all[i])
            .collect();
        let phi = SatInstance::new(3, clauses).unwrap();
        unsat += usize::from(check_plain_gadget(&phi));
    }
    assert_eq!(unsat, 1);
}

#[test]
fn clause_clique_on_random_four_variable_instances() {
    let mut unsat = 0;
    for seed in 0..300 {
        let m = 4 + (seed as usize % 5);
        let phi = random_3sat(4, m, seed, Assumptions::BASIC).unwrap();
        unsat += usize::from(check_plain_gadget(&phi));
    }
    // unsatisfiable instances are rare at this density, so sample some
    let mut seed = 10_000;
    while unsat < 5 {
        let phi = random_3sat(4, 12, seed, Assumptions::BASIC).unwrap();
        if !satisfiable(4, phi.clauses()) {
            assert!(check_plain_gadget(&phi));
            unsat += 1;
        }
        seed += 1;
    }
}

fn unsat_with_all_assumptions(n: usize, m: usize, count: usize) -> Vec<SatInstance> {
    (0u64..)
        .map(|seed| random_3sat(n, m, seed, Assumptions::ALL).unwrap())
        .filter(|phi| !satisfiable(n, phi.clauses()))
        .take(count)
        .collect()
}

fn prime_has_strong_clique(phi: &SatInstance) -> bool {
    let g = sat_gadget_prime(phi).unwrap();
    assert!(is_weakly_chordal(&g.graph).is_weakly_chordal());
    !oracle::strong_cliques_all(&g.graph).is_empty()
}

#[test]
fn extended_gadget_has_strong_clique_iff_unsatisfiable() {
    for seed in 0..40 {
        let phi = random_3sat(4 + (seed as usize % 2), 8, seed, Assumptions::ALL).unwrap();
        assert_eq!(
            prime_has_strong_clique(&phi),
            !satisfiable(phi.num_vars(), phi.clauses()),
            "{phi}"
        );
    }
    for phi in unsat_with_all_assumptions(4, 14, 6) {
        assert!(prime_has_strong_clique(&phi), "{phi}");
    }
}

#[test]
fn extended_gadget_rejects_instances_outside_the_assumptions() {
    let phi = SatInstance::new(4, vec![[1, 2, 3], [-1, -2, -3], [1, -2, 4]]).unwrap();
    assert_eq!(
        sat_gadget_prime(&phi).unwrap_err(),
        SatError::MissingLiteral(-4)
    );
    let phi = SatInstance::new(4, vec![[1, 2, 3], [-1, -2, -4], [1, 3, 4], [-1, -3, 4]]).unwrap();
    assert_eq!(
        sat_gadget_prime(&phi).unwrap_err(),
        SatError::CoveringVariable(1)
    );
    assert_eq!(
        sat_gadget(&SatInstance::new(3, vec![]).unwrap()).unwrap_err(),
        SatError::NoClauses
    );
}

proptest! {
    #[test]
    fn dimacs_round_trip(n in 3usize..=8, m in 1usize..=20, seed in any::<u64>()) {
        let phi = random_3sat(n, m, seed, Assumptions::BASIC).unwrap();
        prop_assert_eq!(parse_dimacs_cnf(&phi.to_dimacs()).unwrap(), phi);
    }

    #[test]
    fn bruteforce_agrees_with_reference(n in 3usize..=8, m in 1usize..=40, seed in any::<u64>()) {
        let phi = random_3sat(n, m, seed, Assumptions::BASIC).unwrap();
        let found = sat_bruteforce(&phi).unwrap();
        prop_assert_eq!(found.is_some(), satisfiable(n, phi.clauses()));
        if let Some(a) = found {
            prop_assert!(phi.evaluate(&a));
        }
    }

    #[test]
    fn gadget_layout(n in 3usize..=6, m in 1usize..=10, seed in any::<u64>()) {
        let phi = random_3sat(n, m, seed, Assumptions::BASIC).unwrap();
        let gadget = sat_gadget(&phi).unwrap();
        let g = &gadget.graph;
        prop_assert_eq!(g.n(), m + 2 * n);
        prop_assert!(g.is_clique(&gadget.clause_clique));
        for (j, clause) in phi.clauses().iter().enumerate() {
            for &l in clause {
                prop_assert!(g.has_edge(j, gadget.literal_vertex(l)));
            }
        }
        let expected = m * (m - 1) / 2 + n + 3 * m;
        prop_assert_eq!(g.edge_count(), expected);
    }
}

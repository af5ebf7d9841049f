//! Build a finite ring from structure constants, see validation reject bad
//! tables, and inspect what the laboratory computes from a fresh ring.
//!
//! The ring constructed here by hand is GF(2)[x]/(x^2): basis {1, x} with
//! x^2 = 0. Validation checks associativity on every basis triple and the
//! two-sided unit law, so a silently wrong table cannot get through.

use okalab::error::Error;
use okalab::field::FiniteField;
use okalab::lab::{Budget, Lab};
use okalab::ring::Ring;

fn main() -> Result<(), Error> {
    let f = FiniteField::new(2, 1, None)?;

    // structure[i][j] holds the coefficients of e_i * e_j in the basis.
    // Basis: e_0 = 1, e_1 = x, with x * x = 0.
    let structure = vec![
        vec![vec![1, 0], vec![0, 1]],
        vec![vec![0, 1], vec![0, 0]],
    ];
    let ring = Ring::new(f.clone(), structure, vec![1, 0], "dual_numbers_gf2")?
        .with_basis_names(vec!["1".into(), "x".into()]);
    println!("built {} with {} elements", ring.name(), ring.element_count());

    // A broken table is rejected with the offending basis triple. Making
    // x * x = x while keeping everything else breaks no associativity
    // (1 is still the unit and x is idempotent), so break the unit instead:
    // claim the unit is x.
    let structure = vec![
        vec![vec![1, 0], vec![0, 1]],
        vec![vec![0, 1], vec![0, 0]],
    ];
    match Ring::new(f.clone(), structure, vec![0, 1], "broken") {
        Err(Error::BadUnit(j)) => println!("bad unit rejected at basis index {j}"),
        other => panic!("expected a unit-law rejection, got {:?}", other.map(|r| r.name().to_string())),
    }

    // And a genuinely non-associative table: e1 * e1 = 1 but e1 * (e1 * e1)
    // differs from (e1 * e1) * e1 once the table is asymmetric.
    let structure = vec![
        vec![vec![1, 0], vec![0, 1]],
        vec![vec![1, 1], vec![1, 0]],
    ];
    match Ring::new(f, structure, vec![1, 0], "broken") {
        Err(Error::NotAssociative { i, j, k }) => {
            println!("non-associative table rejected at triple ({i}, {j}, {k})")
        }
        other => panic!("expected an associativity rejection, got {:?}", other.map(|r| r.name().to_string())),
    }

    // The laboratory wraps a ring with its right ideal lattice and caches.
    let lab = Lab::new(&ring, Budget::default())?;
    let lat = lab.lattice();
    println!(
        "{}: {} right ideals, {} maximal, radical dim {}",
        ring.name(),
        lat.len(),
        lat.maximals().len(),
        lab.radical_ideal().dim()
    );
    let class = lab.classification();
    println!(
        "commutative {}, local {}, self-injective {}",
        class.commutative, class.local, class.self_injective
    );
    assert!(class.commutative && class.local && class.self_injective);
    assert_eq!(lat.len(), 3);
    Ok(())
}

//! Right Oka families and the prime ideal principle.
//!
//! A family F of right ideals with R in F is right Oka when I + aR in F and
//! a^-1 I in F force I in F. The principle: the maximal ideals outside a
//! right Oka family are completely prime. This example verifies the built-in
//! families on the upper triangular 2x2 ring, then constructs a family that
//! fails the Oka property and shows the exact (ideal, element) witness.

use okalab::bits::BitSet;
use okalab::catalog;
use okalab::error::Error;
use okalab::family::{self, IdealFamily};
use okalab::lab::{Budget, Lab};
use okalab::prime;

fn main() -> Result<(), Error> {
    let entry = catalog::find("ut2_gf2").expect("ut2_gf2 is a catalog ring");
    let lab = Lab::new(&entry.ring, Budget::default())?;
    let lat = lab.lattice();

    for fam in family::standard_families(&lab)? {
        let verdict = family::verify_oka(&lab, &fam);
        print!("{}: {} members, oka {}", fam.provenance, fam.member_count(), verdict.holds());
        if verdict.holds() {
            let report = family::cpip(&lab, &fam)?;
            println!(", Max(F') = {:?} (all completely prime)", report.max_complement);
        } else {
            println!();
        }
    }

    // A hand-built counterexample: {R, M1, M2} for the two maximal right
    // ideals. Both I + aR and a^-1 I can land in the family while I = 0
    // does not.
    let maximals = lat.maximals();
    let mut members = BitSet::new(lat.len());
    members.set(lat.top() as usize);
    for &m in maximals {
        members.set(m as usize);
    }
    let control = IdealFamily {
        name: "control".into(),
        provenance: "control({R, M1, M2})".into(),
        members,
    };
    let verdict = family::verify_oka(&lab, &control);
    assert!(!verdict.holds(), "the maximal-pair family is not Oka here");
    let w = verdict.witness.expect("failures carry a witness");
    println!(
        "\n{} fails Oka at ideal {} with element {:?}:",
        control.provenance, w.ideal, w.element
    );
    let x = lab.ring().index_of(&w.element) as usize;
    let tables = lab.tables();
    println!(
        "  I + aR = ideal {} (member), a^-1 I = ideal {} (member), I = ideal {} (not a member)",
        tables.ext(w.ideal, x),
        tables.quot(w.ideal, x),
        w.ideal
    );

    // The weak biconditional still holds for it: restricted closure over
    // Max(F') is exactly complete primeness of every maximal non-member.
    let weak = family::weak_oka_check(&lab, &control);
    println!(
        "weak check: all Max(F') completely prime = {}, restricted Oka = {}",
        weak.all_max_completely_prime, weak.restricted_oka_holds
    );
    assert_eq!(weak.all_max_completely_prime, weak.restricted_oka_holds);

    // On this ring every maximal right ideal happens to be completely
    // prime, which the spectra confirm independently.
    let spectra = prime::spectra(&lab);
    assert!(spectra.maximal.iter().all(|m| spectra.completely_prime.contains(m)));
    println!("\nmaximal ideals {:?} are all completely prime", spectra.maximal);
    Ok(())
}

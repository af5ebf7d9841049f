//! Walk the one-sided prime landscape of the triangular ring where the
//! notions genuinely separate.
//!
//! The ring is the subring of 3x3 matrices over GF(2) with second and third
//! rows supported only on the diagonal (basis E11, E12, E13, E22, E33).
//! Its first-row-zero ideal P is completely prime, yet R/P decomposes into
//! two incomparable chains, so P is not comonoform: division by a single
//! element can leave the completely prime class.

use okalab::catalog;
use okalab::error::Error;
use okalab::ideal::RightIdeal;
use okalab::lab::{Budget, Lab};
use okalab::module::FiniteModule;
use okalab::prime;

fn main() -> Result<(), Error> {
    let entry = catalog::find("tri3_gf2").expect("tri3_gf2 is a catalog ring");
    let ring = &entry.ring;
    let lab = Lab::new(ring, Budget::default())?;
    let lat = lab.lattice();

    println!("{}: {} right ideals, {} maximal", entry.name, lat.len(), lat.maximals().len());

    // The spectrum splits: completely prime, comonoform, extremely prime,
    // and the Koh condition each carve out a different set.
    let spectra = prime::spectra(&lab);
    println!("completely prime: {:?}", spectra.completely_prime);
    println!("comonoform:       {:?}", spectra.comonoform);
    println!("extremely prime:  {:?}", spectra.extremely_prime);
    println!("maximal:          {:?}", spectra.maximal);

    // P = {first row zero} = span{E22, E33}, in basis order E11..E33.
    let p_ideal = RightIdeal::from_generators(
        ring,
        &[vec![0, 0, 0, 1, 0], vec![0, 0, 0, 0, 1]],
    );
    let p = lat.index_of(&p_ideal).expect("P is a right ideal");
    let report = prime::prime_report(&lab, p);
    println!(
        "P (ideal {p}): completely prime {}, comonoform {}, two-sided {}",
        report.completely_prime, report.comonoform, report.two_sided
    );
    assert!(report.completely_prime && !report.comonoform);

    // R/P has exactly five submodules in two incomparable chains, so it is
    // not uniform; that is precisely the failure of comonoformity.
    let m = FiniteModule::cyclic(ring, lat.ideal(p));
    let subs = m.submodules(4096)?;
    let atoms = m.atoms_of(&subs);
    println!(
        "R/P: {} submodules, {} minimal, uniform {}",
        subs.len(),
        atoms.len(),
        m.is_uniform(4096)?
    );
    assert_eq!(subs.len(), 5);
    assert_eq!(atoms.len(), 2);

    // Divide P by x = E12 + E13: the result is no longer completely prime.
    let x = ring.index_of(&[0, 1, 1, 0, 0]) as usize;
    let q = lab.tables().quot(p, x);
    let (cp, witness) = prime::completely_prime(&lab, q);
    println!("x^-1 P (ideal {q}): completely prime {cp}");
    if let Some(w) = witness {
        println!("  witnessed by a = {:?}, b = {:?}", w.a, w.b);
    }
    assert!(!cp);

    // The endomorphism route agrees with the table route on every ideal:
    // P is completely prime exactly when every nonzero endomorphism of R/P
    // is injective.
    for i in lat.proper_indices() {
        assert_eq!(
            prime::completely_prime(&lab, i).0,
            prime::completely_prime_endo(&lab, i),
            "routes must agree on ideal {i}"
        );
    }
    println!("table and endomorphism routes agree on all {} proper ideals", lat.len() - 1);
    Ok(())
}

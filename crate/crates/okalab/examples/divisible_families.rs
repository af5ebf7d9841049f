//! Divisible right Oka families and their construction kit.
//!
//! A family is divisible when I in F forces a^-1 I in F for every element a.
//! Divisible right Oka families sharpen the prime ideal principle: maximal
//! non-members are comonoform, not merely completely prime. Three standard
//! constructions are exercised here on the truncated polynomial ring
//! GF(2)[x]/(x^3) and the upper triangular ring:
//!
//!   1. the ideal-quotient lemma behind every divisible verification,
//!   2. semifilters generated by two-sided ideals,
//!   3. core families from product-closed sets and m-systems.

use okalab::bits::BitSet;
use okalab::catalog;
use okalab::error::Error;
use okalab::family::{self, IdealSemifilter};
use okalab::lab::{Budget, Lab};

fn main() -> Result<(), Error> {
    let entry = catalog::find("ut2_gf2").expect("ut2_gf2 is a catalog ring");
    let lab = Lab::new(&entry.ring, Budget::default())?;
    let lat = lab.lattice();
    let tables = lab.tables();

    // The ideal-quotient lemma: if K contains a^-1 I, then J = I + aK
    // satisfies a^-1 J = K. Instance with I = 0 and K = R: J = aR, and
    // dividing J by a recovers all of R.
    let a = entry.ring.index_of(&[1, 0, 0]) as usize;
    let j = tables.principal(a);
    println!(
        "lemma instance: I = 0, a = e11, K = R: J = aR = ideal {j}, a^-1 J = ideal {}",
        tables.quot(j, a)
    );
    assert_eq!(tables.quot(j, a), lat.top());

    // Semifilters generated by two-sided ideals are divisible: membership
    // means containing some aJ with J two-sided, and aJ <= J <= I gives
    // J <= a^-1 I.
    for &g in lat.two_sided_indices().iter().take(3) {
        let fam = family::family_above_ideal_set(&lab, &[g], &format!("{g}"))?;
        let div = family::verify_divisible(&lab, &fam);
        println!(
            "semifilter above two-sided ideal {g}: {} members, divisible {}",
            fam.member_count(),
            div.holds
        );
        assert!(div.holds);
    }

    // Product-closed semifilters of two-sided ideals: the up-set of an
    // idempotent two-sided ideal J (J^2 = J) qualifies, and the induced
    // core family {I : core(I) in G} is divisible right Oka with
    // comonoform maximal complement.
    for &j in &lat.two_sided_indices() {
        if family::product_index(&lab, j, j) != j {
            continue;
        }
        let mut members = BitSet::new(lat.len());
        for &i in &lat.two_sided_indices() {
            if lat.le(j, i) {
                members.set(i as usize);
            }
        }
        let sf = IdealSemifilter::new(&lab, members)?;
        let fam = family::family_core_in_semifilter(&lab, &sf, &format!("up({j})"));
        let report = family::dpip(&lab, &fam)?;
        println!(
            "core-in-up({j}): {} members, comonoform Max(F') = {:?}",
            fam.member_count(),
            report.max_complement
        );
    }

    // m-systems: for s, t in S some srt lies back in S. The unit group is
    // one; the family of ideals whose core meets it is divisible Oka.
    let units = lab.units().clone();
    assert!(family::is_m_system_set(&lab, &units));
    let fam = family::family_core_meets_mset(&lab, &units, "units")?;
    let report = family::dpip(&lab, &fam)?;
    println!(
        "core-meets-units: {} members, comonoform Max(F') = {:?}",
        fam.member_count(),
        report.max_complement
    );

    // The sharpened bound is strict content: on the truncated polynomial
    // ring GF(2)[x]/(x^3), the dense family's maximal non-member is the
    // ideal (x^2), comonoform because R/(x^2) has one minimal submodule.
    let trunc = catalog::find("trunc_gf2_3").expect("trunc_gf2_3 is a catalog ring");
    let tlab = Lab::new(&trunc.ring, Budget::default())?;
    let dense = family::family_dense(&tlab);
    let report = family::dpip(&tlab, &dense)?;
    println!(
        "{} dense family: members {:?}, comonoform Max(F') = {:?}",
        trunc.name,
        dense.member_indices(),
        report.max_complement
    );
    Ok(())
}

//! A gallery of separations: statements that sound plausible and the exact
//! finite witnesses that refute them.
//!
//! Every item here is machine-checked, most via the search DSL over the
//! catalog. The last two items are refutations this laboratory surfaced
//! while verifying weaker claims: essential ideals do not form an Oka
//! family, and right invertibility is not monotone under inclusion.

use okalab::bits::BitSet;
use okalab::catalog;
use okalab::error::Error;
use okalab::family::{self, IdealFamily};
use okalab::lab::{Budget, Lab};
use okalab::search;
use okalab::subring::SubringPair;
use okalab::linalg::Mat;

fn main() -> Result<(), Error> {
    // 1. Completely prime does not imply comonoform.
    let expr = search::parse("completely_prime and not comonoform")?;
    let entry = catalog::find("tri3_gf2").expect("catalog ring");
    let lab = Lab::new(&entry.ring, Budget::default())?;
    let hits = search::hits(&lab, &expr);
    println!("completely prime, not comonoform on {}: {} ideals", entry.name, hits.len());
    for h in &hits {
        println!("  ideal {} dim {} basis {:?}", h.ideal, h.dim, h.basis);
    }
    assert!(!hits.is_empty());

    // 2. Completely prime does not imply maximal.
    let expr = search::parse("completely_prime and not maximal")?;
    let entry = catalog::find("ut2_gf2").expect("catalog ring");
    let ut2 = Lab::new(&entry.ring, Budget::default())?;
    let hits = search::hits(&ut2, &expr);
    println!("completely prime, not maximal on {}: ideals {:?}", entry.name, hits.iter().map(|h| h.ideal).collect::<Vec<_>>());
    assert_eq!(hits.len(), 2);

    // 3. Simple rings have no extremely prime right ideals at all.
    let expr = search::parse("extremely_prime")?;
    let entry = catalog::find("mat2_gf2").expect("catalog ring");
    let mat2 = Lab::new(&entry.ring, Budget::default())?;
    assert!(search::hits(&mat2, &expr).is_empty());
    println!("extremely prime on {}: none", entry.name);

    // 4. Essential right ideals need not form an Oka family. On the dual
    // numbers GF(2)[x]/(x^2), I = 0 is not essential, yet both I + xR and
    // x^-1 I are.
    let entry = catalog::find("trunc_gf2_2").expect("catalog ring");
    let dual = Lab::new(&entry.ring, Budget::default())?;
    let lat = dual.lattice();
    let mut members = BitSet::new(lat.len());
    for i in 0..lat.len() as u32 {
        if lat.is_essential(i) {
            members.set(i as usize);
        }
    }
    let essential = IdealFamily {
        name: "essential".into(),
        provenance: "essential".into(),
        members,
    };
    let verdict = family::verify_oka(&dual, &essential);
    assert!(!verdict.holds());
    let w = verdict.witness.expect("failures carry a witness");
    println!(
        "essential ideals on {} are not Oka: fails at ideal {} with element {:?}",
        entry.name, w.ideal, w.element
    );

    // 5. Right invertibility over an overring is not monotone. Inside the
    // 3x3 matrix ring over GF(2), the triangular subring has the invertible
    // right ideal I = span{E13, E22, E33} (certificate: E13*E31 + E22*E22 +
    // E33*E33 = 1 with each left factor in I and each right factor in I*),
    // sitting under the maximal ideal J = span{E12, E13, E22, E33} whose
    // dual star is R itself, so span(J J*) = J misses 1.
    let small = catalog::find("tri3_gf2").expect("catalog ring");
    let big = catalog::find("mat3_gf2").expect("catalog ring");
    let mut embed = Mat::zeros(5, 9);
    for (r, c) in [(0usize, 0usize), (1, 1), (2, 2), (3, 4), (4, 8)] {
        embed.set(r, c, 1);
    }
    let pair = SubringPair::new(&small.ring, &big.ring, embed)?;
    let tri3 = Lab::new(&small.ring, Budget::default())?;
    let lat = tri3.lattice();
    let fam = family::family_invertible(&tri3, &pair)?;
    let mut monotone_fails = Vec::new();
    for i in fam.member_indices() {
        if i == lat.top() {
            continue;
        }
        for j in lat.above(i).iter_ones().map(|j| j as u32) {
            if !fam.contains(j) {
                monotone_fails.push((i, j));
            }
        }
    }
    assert!(!monotone_fails.is_empty());
    let (i, j) = monotone_fails[0];
    println!(
        "right invertibility is not monotone on tri3 in mat3: ideal {i} (dim {}) is invertible, \
         ideal {j} (dim {}) above it is not; {} such pairs",
        lat.ideal(i).dim(),
        lat.ideal(j).dim(),
        monotone_fails.len()
    );
    let witness = pair.invertibility_witness(lat.ideal(i)).expect("members carry certificates");
    println!("  certificate: sum of {} products x_k * q_k equals 1", witness.len());
    assert!(pair.invertibility_witness(lat.ideal(j)).is_none());

    // The family is still right Oka, exactly as the theory claims.
    assert!(family::verify_oka(&tri3, &fam).holds());
    println!("  and the invertible family is right Oka regardless");
    Ok(())
}

//! Cyclic modules, submodule lattices, injectivity, and point annihilators:
//! the module machinery the prime-side theorems stand on.

use okalab::catalog;
use okalab::error::Error;
use okalab::family;
use okalab::lab::{Budget, Lab};
use okalab::module::{self, FiniteModule};

fn main() -> Result<(), Error> {
    let entry = catalog::find("ut2_gf2").expect("ut2_gf2 is a catalog ring");
    let ring = &entry.ring;
    let lab = Lab::new(ring, Budget::default())?;
    let lat = lab.lattice();

    // Every cyclic right module is R/I for a right ideal I; the regular
    // module is R/0. Submodules of R/I correspond to ideals above I.
    let regular = lab.regular();
    let subs = regular.submodules(4096)?;
    println!(
        "{}: regular module has {} submodules ({} simple quotient types)",
        entry.name,
        subs.len(),
        lab.simples().reps().len()
    );
    assert_eq!(subs.len(), lat.len());

    // Pick a maximal ideal M: R/M is simple, and every simple is uniform.
    let m = lat.maximals()[0];
    let simple = FiniteModule::cyclic(ring, lat.ideal(m));
    println!(
        "R/M for M = ideal {m}: {} elements, uniform {}",
        simple.element_count(),
        simple.is_uniform(4096)?
    );
    assert!(simple.is_uniform(4096)?);

    // Hom spaces are computed as exact linear solution spaces. For simple
    // modules, Hom(S, T) is zero unless S and T are isomorphic.
    let reps = lab.simples().reps();
    for (i, s) in reps.iter().enumerate() {
        for (j, t) in reps.iter().enumerate() {
            let dim = module::hom_space(s, t).len();
            println!("dim Hom(simple{i}, simple{j}) = {dim}");
            assert_eq!(dim == 0, i != j);
        }
    }

    // Injectivity via the Baer criterion against the full ideal lattice.
    for (i, s) in reps.iter().enumerate() {
        println!("simple{i} injective: {}", module::is_injective(s, lat));
    }

    // Point annihilators: ann(x) over nonzero x in the module. The maximal
    // ones are completely prime; the zero divisors on the module are
    // exactly the union of the maximal point annihilators.
    let p = lat.maximals()[1];
    let module = FiniteModule::cyclic(ring, lat.ideal(p));
    let anns = module::maximal_point_annihilators(&module, 4096)?;
    println!(
        "R/{p}: {} maximal point annihilators, dims {:?}",
        anns.len(),
        anns.iter().map(|a| a.dim()).collect::<Vec<_>>()
    );
    assert!(family::zero_divisor_union_check(&lab, &module)?);

    // Torsionfree characterization: for a nonzero module, "no zero
    // divisors" can be tested three ways; they agree.
    let eq = family::torsionfree_characterization_check(&lab, &module)?;
    println!(
        "torsionfree routes agree: direct {}, per-prime non-zero-divisor {}, joint annihilator {}",
        eq.no_zero_divisors, eq.every_cp_has_non_zero_divisor, eq.every_cp_joint_ann_zero
    );
    assert!(eq.all_agree());

    // Monoform modules are the module-side face of comonoform ideals: R/P
    // is monoform exactly when every nonzero submodule is dense.
    for p in lat.proper_indices() {
        let m = FiniteModule::cyclic(ring, lat.ideal(p));
        let verdict = module::is_monoform(&m, 4096, 4096)?;
        let comonoform = okalab::prime::is_comonoform(&lab, p);
        assert_eq!(verdict.monoform, comonoform, "ideal {p}");
    }
    println!("monoform(R/P) matches comonoform(P) on all proper ideals");
    Ok(())
}

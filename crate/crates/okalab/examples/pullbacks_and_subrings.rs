//! Complete primeness does not pull back along ring embeddings, except when
//! the idealizer condition holds.
//!
//! The embedding is the triangular ring tri3 inside the full 3x3 matrix
//! ring over GF(2). The matrix ring has a maximal (hence completely prime)
//! right ideal Q killing the row vector (0,1,1); its pullback Q intersect R
//! is the first-row ideal of the triangular ring, which is not completely
//! prime. The positive direction: whenever a completely prime Q satisfies
//! the idealizer condition, the pullback is completely prime.

use okalab::catalog;
use okalab::error::Error;
use okalab::ideal::RightIdeal;
use okalab::lab::{Budget, Lab};
use okalab::linalg::Mat;
use okalab::prime;
use okalab::subring::{subring_generated, SubringPair};

fn main() -> Result<(), Error> {
    let small = catalog::find("tri3_gf2").expect("catalog ring");
    let big = catalog::find("mat3_gf2").expect("catalog ring");

    // Basis of the small ring: E11, E12, E13, E22, E33; the big ring uses
    // the row-major matrix unit basis E11..E33.
    let mut embed = Mat::zeros(5, 9);
    for (r, c) in [(0usize, 0usize), (1, 1), (2, 2), (3, 4), (4, 8)] {
        embed.set(r, c, 1);
    }
    let pair = SubringPair::new(&small.ring, &big.ring, embed)?;
    let small_lab = Lab::new(&small.ring, Budget::default())?;
    let big_lab = Lab::new(&big.ring, Budget::default())?;

    // Q = {A : second and third rows sum to zero}, a maximal right ideal.
    let q_ideal = RightIdeal::from_generators(
        &big.ring,
        &[
            vec![1, 0, 0, 0, 0, 0, 0, 0, 0],
            vec![0, 1, 0, 0, 0, 0, 0, 0, 0],
            vec![0, 0, 1, 0, 0, 0, 0, 0, 0],
            vec![0, 0, 0, 1, 0, 0, 1, 0, 0],
            vec![0, 0, 0, 0, 1, 0, 0, 1, 0],
            vec![0, 0, 0, 0, 0, 1, 0, 0, 1],
        ],
    );
    let q = big_lab.lattice().index_of(&q_ideal).expect("Q is a right ideal");
    assert!(big_lab.lattice().maximals().contains(&q));

    let out = prime::pullback_check(&pair, &small_lab, &big_lab, q)?;
    println!(
        "Q (ideal {q}, dim {}): completely prime upstairs {}, idealizer condition {}",
        q_ideal.dim(),
        out.big_completely_prime,
        out.idealizer_condition
    );
    println!(
        "pullback Q \u{2229} R = ideal {} (dim {}): completely prime downstairs {}",
        out.pullback_index,
        small_lab.lattice().ideal(out.pullback_index).dim(),
        out.small_completely_prime
    );
    assert!(out.big_completely_prime && !out.small_completely_prime);

    // Pair-wide: the criterion never fires falsely. Whenever it applies,
    // the pullback really is completely prime.
    let mut applied = 0;
    for qq in big_lab.lattice().proper_indices() {
        let o = prime::pullback_check(&pair, &small_lab, &big_lab, qq)?;
        if o.criterion_applies {
            assert!(o.small_completely_prime);
            applied += 1;
        }
    }
    println!("idealizer criterion applied to {applied} ideals, no violations");

    // Subrings can also be generated from elements: the scalar matrices
    // plus E11 generate a commutative 2-dimensional subring of mat3.
    let e11 = vec![1, 0, 0, 0, 0, 0, 0, 0, 0];
    let gen_pair = subring_generated(&big.ring, &[e11], "corner_plus_scalars")?;
    println!(
        "generated subring has dimension {} inside dimension {}",
        gen_pair.small().dim(),
        gen_pair.big().dim()
    );
    assert_eq!(gen_pair.small().dim(), 2);

    // Dual stars: for the pullback ideal P, I* = {q : qP inside R}. Its
    // dimension over GF(2) bounds how much room invertibility has.
    let p_ideal = small_lab.lattice().ideal(out.pullback_index);
    let dual = pair.dual_star(p_ideal);
    println!("dual star of the pullback has dimension {}", dual.rows());
    assert!(!pair.is_right_invertible(p_ideal));
    Ok(())
}

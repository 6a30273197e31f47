//! Spectrum of the Born–Green operator on the interior of the truncated
//! space.

use quaplectic::fock::{FockSpace, GeneratorTable};
use quaplectic::invariants::born_green_spectrum;
use quaplectic::units::Frame;

fn main() -> quaplectic::Result<()> {
    let space = FockSpace::new(5)?;
    let s = born_green_spectrum(&space, &GeneratorTable::new(Frame::with_alpha(0.5)?), 2)?;
    println!("alpha_hbar {}, off-diagonal {:.1e}, spacing deviation {:.1e}", s.alpha_hbar, s.offdiagonal_max, s.spacing_deviation);
    println!("{:>10} {:>8} {:>6} {:>6}", "eigenvalue", "n0-sum", "mult", "count");
    for l in &s.levels {
        println!("{:>10.4} {:>8} {:>6} {:>6}", l.eigenvalue, l.occupation_difference, l.multiplicity, l.expected_multiplicity);
    }
    println!("degeneracies match: {}", s.degeneracies_match);
    Ok(())
}

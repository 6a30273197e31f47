//! Gel'fand-type Casimirs of the spin part and the quadratic relation with
//! the Born–Green operator.

use quaplectic::fock::{casimir_report, FockSpace, GeneratorTable};
use quaplectic::units::Frame;

fn main() -> quaplectic::Result<()> {
    for alpha in [1.0, 0.5, 2.0] {
        let table = GeneratorTable::new(Frame::with_alpha(alpha)?);
        let r = casimir_report(&FockSpace::new(5)?, &table, 2)?;
        println!("alpha_hbar = {alpha}");
        println!("  |C1|, |C2|, |C3| = {:?}", r.casimir_norms);
        println!("  [C, E] = {:.2e}", r.commutator_with_e);
        println!("  fitted kappa {:.3e}, residual {:.2e}", r.kappa, r.residual);
        println!(
            "  printed sign: kappa {:.3}, residual {:.3} (reference {})",
            r.kappa_printed_sign, r.residual_printed_sign, r.kappa_reference
        );
    }
    Ok(())
}

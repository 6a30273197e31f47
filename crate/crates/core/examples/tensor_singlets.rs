//! The nine tensor singlets: which commute with which generators, and their
//! values on a state.

use quaplectic::algebra::Generator;
use quaplectic::fock::FockSpace;
use quaplectic::invariants::{general_invariants, Singlets, SINGLET_NAMES};
use quaplectic::states::{Observables, StateVector};
use quaplectic::units::Frame;

fn main() -> quaplectic::Result<()> {
    let obs = Observables::new(FockSpace::new(6)?, Frame::natural())?;
    let singlets = Singlets::new(obs.table(), obs.space());

    let u31: Vec<Generator> = (0..16).map(|k| Generator::e(k / 4, k % 4)).collect();
    let wh: Vec<Generator> = (0..4).flat_map(|m| [Generator::z(m), Generator::zbar(m)]).collect();
    let du = singlets.commutator_defects(obs.table(), &u31);
    let dw = singlets.commutator_defects(obs.table(), &wh);
    println!("{:<10} {:>12} {:>12}", "singlet", "[., E]", "[., Z]");
    for k in 0..9 {
        println!("{:<10} {:>12.2e} {:>12.2e}", SINGLET_NAMES[k], du[k], dw[k]);
    }

    for n in [[0, 0, 0, 0], [1, 0, 1, 0], [2, 1, 0, 0]] {
        let g = general_invariants(&singlets, &StateVector::number_state(obs.space(), n)?)?;
        println!("{n:?}:");
        for (name, v) in g.names.iter().zip(g.values) {
            println!("  {name:<10} {v:+.6}");
        }
    }
    Ok(())
}

//! det Σ under random U(3,1), Weyl–Heisenberg, Sp(8,R) and reciprocity
//! transformations.

use quaplectic::fock::FockSpace;
use quaplectic::invariants::{invariance_sweep, SweepConfig, SweepGroup};
use quaplectic::states::Observables;
use quaplectic::suites::sweep_reference_state;
use quaplectic::units::Frame;

fn main() -> quaplectic::Result<()> {
    let obs = Observables::new(FockSpace::new(8)?, Frame::natural())?;
    let state = sweep_reference_state(&obs)?;
    for group in SweepGroup::ALL {
        let cfg = SweepConfig {
            samples: 10,
            ..SweepConfig::new(group)
        };
        let r = invariance_sweep(&obs, &state, &cfg)?;
        println!(
            "{:<12} det {:.6e}: max rel. deviation {:.2e}, max |dSigma| {:.2e}, max leakage {:.2e}, excluded {}, passed {}",
            group.name(),
            r.reference_det,
            r.max_relative_deviation,
            r.max_sigma_deviation,
            r.max_leakage,
            r.excluded,
            r.passed
        );
    }
    Ok(())
}

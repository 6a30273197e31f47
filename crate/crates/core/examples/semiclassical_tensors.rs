//! Second-moment tensors Q, T, R and M of a displaced squeezed state.

use num_complex::Complex64;
use quaplectic::fock::FockSpace;
use quaplectic::gaussian::SqueezeParameters;
use quaplectic::states::Observables;
use quaplectic::units::Frame;

fn main() -> quaplectic::Result<()> {
    let obs = Observables::new(FockSpace::new(8)?, Frame::natural())?;
    for zeta in [0.0, 0.2] {
        let mut p = SqueezeParameters::single_mode_squeeze(2, 0.1);
        p.zeta[1] = Complex64::new(zeta, 0.0);
        let t = obs.semiclassical_tensors(&obs.squeezed_state(&p)?)?;
        println!("zeta_1 = {zeta}");
        println!("  Q diag {:?}", t.q.diagonal().as_slice());
        println!("  T diag {:?}", t.t.diagonal().as_slice());
        println!("  R = {:.2e} (max entry)", t.r.abs().max());
        println!("  M diag {:?}", t.m.diagonal().as_slice());
    }
    Ok(())
}

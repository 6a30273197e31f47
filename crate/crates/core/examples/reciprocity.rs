//! The reciprocity map X/λx → P/λp, P/λp → -X/λx on states and covariances.

use num_complex::Complex64;
use quaplectic::fock::FockSpace;
use quaplectic::gaussian::{reciprocity_matrix, SqueezeParameters};
use quaplectic::invariants::reciprocity_map;
use quaplectic::states::Observables;
use quaplectic::units::{Frame, UnitScales};

fn main() -> quaplectic::Result<()> {
    let scales = UnitScales {
        lambda_x: 2.0,
        lambda_p: 0.25,
        ..UnitScales::natural()
    };
    let frame = Frame::new(1.0, 0.5, &scales)?;
    let obs = Observables::new(FockSpace::new(8)?, frame)?;
    let mut p = SqueezeParameters::single_mode_squeeze(1, 0.15);
    p.zeta[1] = Complex64::new(0.2, 0.0);
    let cov = obs.covariance_matrix(&obs.squeezed_state(&p)?)?;

    let r = reciprocity_matrix(&frame);
    println!("R^4 = I: {:.1e}", (r.pow(4) - quaplectic::gaussian::Mat8::identity()).abs().max());

    let mut m = cov.clone();
    for k in 1..=4 {
        m = reciprocity_map(&m, &frame);
        println!(
            "R^{k}: <X^1> = {:+.6}, <P^1> = {:+.6}, Sigma_11 = {:.6}, Sigma_55 = {:.6}, det Sigma = {:.9e}",
            m.mean_x[1],
            m.mean_p[1],
            m.sigma[(1, 1)],
            m.sigma[(5, 5)],
            m.sigma.determinant()
        );
    }
    Ok(())
}

//! Multimode squeezed coherent states in the Fock space, compared with the
//! analytic Gaussian covariance.

use num_complex::Complex64;
use quaplectic::fock::FockSpace;
use quaplectic::gaussian::{gaussian_covariance, symplectic_eigenvalues, SqueezeParameters};
use quaplectic::states::{sr_check, Observables};
use quaplectic::units::Frame;

fn main() -> quaplectic::Result<()> {
    let frame = Frame::natural();
    let obs = Observables::new(FockSpace::new(8)?, frame)?;

    // Two-mode coupling between x^1 and x^2 plus a squeeze of the time mode.
    let mut p = SqueezeParameters::single_mode_squeeze(0, 0.1);
    p.a[(1, 2)] = 0.08;
    p.a[(2, 1)] = 0.08;
    p.zeta[3] = Complex64::new(0.1, -0.05);

    let state = obs.squeezed_state(&p)?;
    println!("leakage {:.2e}, renormalization {:.12}", state.leakage(), state.renormalization());

    let cov = obs.covariance_matrix(&state)?;
    let (means, sigma) = gaussian_covariance(&p, &frame)?;
    println!("max |Sigma_fock - Sigma_gauss| = {:.2e}", (cov.sigma - sigma).abs().max());
    println!("means (fock)  {:?}", cov.means().map(|m| (m * 1e6).round() / 1e6));
    println!("means (gauss) {:?}", means.iter().map(|m| (m * 1e6).round() / 1e6).collect::<Vec<_>>());
    println!("symplectic eigenvalues {:?}", symplectic_eigenvalues(&cov.sigma)?);

    let sr = sr_check(&cov);
    println!(
        "det Sigma = {:.12e}, det C = {:.12e}, saturated {}",
        sr.det_sigma, sr.det_c, sr.saturated
    );

    // Too large a generator for the cutoff is refused.
    let big = SqueezeParameters::single_mode_squeeze(1, 0.9);
    match obs.squeezed_state(&big) {
        Ok(s) => println!("r = 0.9: leakage {:.2e}", s.leakage()),
        Err(e) => println!("r = 0.9: {e}"),
    }
    Ok(())
}

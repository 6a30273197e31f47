//! Williamson normal form of a mixed covariance matrix.

use quaplectic::gaussian::{symplectic_defect, symplectic_eigenvalues, williamson, Mat8, SqueezeParameters, Vec8};

fn main() -> quaplectic::Result<()> {
    let mut p = SqueezeParameters::single_mode_squeeze(2, 0.4);
    p.a[(0, 1)] = 0.3;
    p.a[(1, 0)] = 0.3;
    p.a[(3, 7)] = -0.2;
    p.a[(7, 3)] = -0.2;
    let s0 = p.flow();
    let nus = [1.3, 1.1, 0.9, 0.7];
    let d = Mat8::from_diagonal(&Vec8::from_fn(|k, _| nus[k % 4]));
    let sigma = s0 * d * s0.transpose();

    let w = williamson(&sigma)?;
    println!("symplectic eigenvalues {:?}", w.nus);
    println!("from J Sigma          {:?}", symplectic_eigenvalues(&sigma)?);
    println!("|S J S^T - J| = {:.2e}", symplectic_defect(&w.s));
    let diag = w.s * sigma * w.s.transpose();
    println!("off-diagonal of S Sigma S^T: {:.2e}", (diag - Mat8::from_diagonal(&diag.diagonal())).abs().max());
    let prod: f64 = w.nus.iter().map(|n| n * n).product();
    println!("det Sigma = {:.12}, prod nu^2 = {:.12}", sigma.determinant(), prod);

    let indefinite = -sigma;
    println!("negative definite input: {}", williamson(&indefinite).unwrap_err());
    Ok(())
}

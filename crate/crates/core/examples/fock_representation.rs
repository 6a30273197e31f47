//! The truncated four-mode Fock representation and its bracket check.

use num_complex::Complex64;
use quaplectic::algebra::Generator;
use quaplectic::fock::{verify_rep, FockSpace, GeneratorTable, ModePoly};
use quaplectic::units::Frame;

fn main() -> quaplectic::Result<()> {
    let space = FockSpace::new(6)?;
    let table = GeneratorTable::new(Frame::natural());
    println!("cutoff {} -> dimension {}", space.cutoff(), space.dim());

    let e01 = table.image(&Generator::e(0, 1)).to_operator(&space);
    let e10 = table.image(&Generator::e(1, 0)).to_operator(&space);
    println!("E^0_1: {} nonzeros; |(E^0_1)^† + E^1_0| = {:.1e}", e01.nnz(), e01.adjoint().add(&e10).max_abs());

    // The time mode swaps creation and annihilation: Z_0 raises n0.
    let z0 = table.z(0).to_operator(&space);
    let v = z0.apply(&quaplectic::fock::vacuum(&space));
    let n1 = quaplectic::fock::basis_state(&space, &[1, 0, 0, 0]);
    let amp: Complex64 = n1.iter().zip(&v).map(|(a, b)| a.conj() * b).sum();
    println!("<1,0,0,0| Z_0 |0> = {amp}");

    let x1 = table.quadrature(1);
    let p1 = table.quadrature(5);
    println!("[x^1, p^1] = {:?}", x1.commutator(&p1).constant_term());
    println!("[x^0, p^0] = {:?}", table.quadrature(0).commutator(&table.quadrature(4)).constant_term());

    let b = table.born_green();
    let n = ModePoly::number(0);
    println!("[B, n0] vanishes: {}", b.commutator(&n).pruned(1e-14).is_empty());

    let r = verify_rep(&space, &table, 2)?;
    println!(
        "{} brackets on {} interior states: max residual {:.2e} (worst {}), whole space {:.2e}",
        r.brackets_checked, r.interior_states, r.max_residual, r.worst_bracket, r.max_residual_unprojected
    );
    Ok(())
}

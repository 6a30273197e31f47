//! Reciprocal-relativity scales for SI constants and for natural units.

use quaplectic::units::{derive_scales, newton_constant, scale_consistency, ConstantSet, Frame};

fn main() -> quaplectic::Result<()> {
    for (name, consts) in [("SI / Planck", ConstantSet::si_planck()), ("natural", ConstantSet::natural())] {
        let s = derive_scales(&consts)?;
        println!("{name}");
        println!("  lambda_t = {:.6e}", s.lambda_t);
        println!("  lambda_x = {:.6e}", s.lambda_x);
        println!("  lambda_p = {:.6e}", s.lambda_p);
        println!("  lambda_e = {:.6e}", s.lambda_e);
        println!("  lambda_a = {:.6e}", s.lambda_a);
        println!("  G        = {:.6e}", newton_constant(&consts)?);
        println!("  relation defects {:?}", scale_consistency(&consts, &s));
    }

    // With α_ħ = 2 the frame keeps ħ = α_ħ λx λp.
    let consts = ConstantSet {
        alpha_hbar: 2.0,
        ..ConstantSet::natural()
    };
    let f = Frame::from_constants(&consts)?;
    println!("alpha_hbar = 2: lambda_x = {:.6}, lambda_p = {:.6}, hbar/2 = {}", f.lambda_x, f.lambda_p, f.half_hbar());
    Ok(())
}

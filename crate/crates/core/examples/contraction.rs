//! b → ∞ contractions of sp(8,R): surviving brackets and the power law of
//! the vanishing ones.

use quaplectic::algebra::{contract, contraction_slopes, format_exact, ContractionCase, LorentzGenerator};

fn main() -> quaplectic::Result<()> {
    let bs = [10.0, 100.0, 1000.0];
    for case in [ContractionCase::I, ContractionCase::II] {
        let r = contract(100.0, case)?;
        println!(
            "case {case:?}: {} brackets, {} limit terms, {} vanishing, {} divergent, deviation at b=100 {:.3e}",
            r.brackets_checked,
            r.limit.len(),
            r.vanishing.len(),
            r.divergent.len(),
            r.deviation
        );
        println!("  log-log slopes over {bs:?}: {:?}", contraction_slopes(case, &bs)?);
        for t in r.limit.iter().take(4) {
            println!("  [{:?}, {:?}] -> {} {:?}", t.lhs.0, t.lhs.1, t.coefficient, t.rhs);
        }
    }
    let r = contract(100.0, ContractionCase::II)?;
    let c = r.limit_coefficient(LorentzGenerator::Z(0, 0), LorentzGenerator::Zbar(0, 0), LorentzGenerator::Number);
    println!("case II centre: [Z_00, Zbar_00] = {} N", format_exact(&c));
    Ok(())
}

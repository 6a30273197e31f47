use std::process::ExitCode;
use std::time::Instant;

use num_rational::Ratio;
use quaplectic::fock::FockSpace;
use quaplectic::states::Observables;
use quaplectic::suites::{
    algebra_suite, casimir_suite, contraction_suite, invariance_suite, oracle_suite, representation_suite,
    spectrum_suite, sr_suite, uncorrelated_suite, williamson_suite, Tolerances,
};
use quaplectic::units::Frame;

const SEED: u64 = 42;

fn pinned() -> Tolerances {
    Tolerances {
        scales: 1e-12,
        representation: 1e-12,
        casimir: 1e-10,
        sr_floor: 1e-9,
        sr_vacuum: 1e-10,
        sr_excited: 1e-8,
        physicality: 1e-9,
        commutator: 1e-10,
        invariance: 1e-7,
        wh_sigma: 1e-9,
        symplectic: 1e-10,
        diagonal: 1e-9,
        determinant: 1e-8,
        pure_nu: 1e-8,
        oracle: 1e-6,
        spectrum: 1e-10,
        contraction: 1e-9,
        uncorrelated: 1e-10,
    }
}

struct Outcome {
    passed: bool,
    detail: String,
}

fn criterion(n: usize, name: &str, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let o = f();
    let tag = if o.passed { "PASS" } else { "FAIL" };
    println!("{tag} {n:>2} {name}: {} [{:.1}s]", o.detail, start.elapsed().as_secs_f64());
    o.passed
}

fn failed(e: impl std::fmt::Display) -> Outcome {
    Outcome {
        passed: false,
        detail: format!("error: {e}"),
    }
}

fn main() -> ExitCode {
    let tol = pinned();
    let frame = Frame::natural();
    let obs6 = Observables::new(FockSpace::new(6).unwrap(), frame).unwrap();
    let obs8 = Observables::new(FockSpace::new(8).unwrap(), frame).unwrap();
    let mut results = Vec::new();

    results.push(criterion(1, "algebra exactness", || {
        let m = algebra_suite(Ratio::from_integer(1));
        Outcome {
            passed: m.passed,
            detail: format!(
                "jacobi {} + {} triples, {} + {} violations; conjugation failures {}; embedding failures {}",
                m.quaplectic_triples,
                m.canonical_triples,
                m.quaplectic_violations,
                m.canonical_violations,
                m.conjugation_failures,
                m.embedding_failures
            ),
        }
    }));

    results.push(criterion(2, "representation fidelity", || match representation_suite(6, frame, &tol) {
        Ok((r, ok)) => Outcome {
            passed: ok,
            detail: format!(
                "cutoff 6, {} brackets, max residual {:.2e} (< {:.0e})",
                r.brackets_checked, r.max_residual, tol.representation
            ),
        },
        Err(e) => failed(e),
    }));

    results.push(criterion(3, "casimir claim", || match casimir_suite(6, frame, &tol) {
        Ok((r, ok)) => Outcome {
            passed: ok,
            detail: format!(
                "norms {:.2e} {:.2e} {:.2e}, residual {:.2e}, kappa {:.3e} vs printed {:.1} (printed-sign residual {:.2e})",
                r.casimir_norms[0],
                r.casimir_norms[1],
                r.casimir_norms[2],
                r.residual,
                r.kappa,
                r.kappa_reference,
                r.residual_printed_sign
            ),
        },
        Err(e) => failed(e),
    }));

    results.push(criterion(4, "schrodinger-robertson bound", || match sr_suite(&obs6, SEED, 1000, &tol) {
        Ok(m) => Outcome {
            passed: m.passed,
            detail: format!(
                "{} states, min relative margin {:.3e}, vacuum {:.2e}, n0=1 ratio {:.12}",
                m.random_states, m.min_relative_margin, m.vacuum_relative_margin, m.excited_ratio
            ),
        },
        Err(e) => failed(e),
    }));

    results.push(criterion(5, "invariance of det sigma", || match invariance_suite(&obs8, SEED, 100, &tol) {
        Ok(m) => Outcome {
            passed: m.passed,
            detail: format!(
                "u31 {:.2e}/{:.2e}, wh {:.2e} (sigma {:.2e}), sp8 {:.2e}, reciprocity {:.2e}, excluded {}",
                m.u31_vacuum.max_relative_deviation,
                m.u31_squeezed.max_relative_deviation,
                m.wh_squeezed.max_relative_deviation,
                m.wh_squeezed.max_sigma_deviation,
                m.sp8_random.max_relative_deviation,
                m.reciprocity.max_relative_deviation,
                m.u31_vacuum.excluded
                    + m.u31_squeezed.excluded
                    + m.wh_squeezed.excluded
                    + m.sp8_random.excluded
                    + m.reciprocity.excluded
            ),
        },
        Err(e) => failed(e),
    }));

    results.push(criterion(6, "williamson", || match williamson_suite(SEED, 100, frame, &tol) {
        Ok(m) => Outcome {
            passed: m.passed,
            detail: format!(
                "SJS^T {:.2e}, off-diagonal {:.2e}, det {:.2e}, pure nu {:.2e}",
                m.max_symplectic_defect, m.max_offdiagonal, m.max_determinant_error, m.max_pure_nu_error
            ),
        },
        Err(e) => failed(e),
    }));

    results.push(criterion(7, "oracle equivalence", || match oracle_suite(&obs8, SEED, 50, &tol) {
        Ok(m) => Outcome {
            passed: m.passed,
            detail: format!(
                "{} sets, max entry error {:.2e}, mean error {:.2e}, max leakage {:.2e}, fock pure nu {:.2e}",
                m.constructed, m.max_sigma_error, m.max_mean_error, m.max_leakage, m.max_pure_nu_error
            ),
        },
        Err(e) => failed(e),
    }));

    results.push(criterion(8, "born-green spectrum", || match spectrum_suite(6, frame, &tol) {
        Ok((s, ok)) => Outcome {
            passed: ok,
            detail: format!(
                "{} levels, off-diagonal {:.2e}, spacing deviation {:.2e}, degeneracies {}",
                s.levels.len(),
                s.offdiagonal_max,
                s.spacing_deviation,
                if s.degeneracies_match { "match" } else { "differ" }
            ),
        },
        Err(e) => failed(e),
    }));

    results.push(criterion(9, "contraction", || match contraction_suite(&tol) {
        Ok(m) => Outcome {
            passed: m.passed,
            detail: format!(
                "slopes I {:?}, II {:?}, case II centre {}",
                m.slopes_case_i, m.slopes_case_ii, m.case_ii_centre
            ),
        },
        Err(e) => failed(e),
    }));

    results.push(criterion(10, "uncorrelated bound", || match uncorrelated_suite(&obs6, &obs8, &tol) {
        Ok(m) => Outcome {
            passed: m.passed,
            detail: format!(
                "{} states, min ratio {:.12}, vacuum {:.12}, correlated state rejected {}",
                m.number_states + m.squeezed_states,
                m.min_ratio,
                m.vacuum_ratio,
                m.correlated_rejected
            ),
        },
        Err(e) => failed(e),
    }));

    let passed = results.iter().filter(|&&p| p).count();
    println!("{passed}/{} criteria passed", results.len());
    if passed == results.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

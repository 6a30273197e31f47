//! Exact brackets of the quaplectic algebra, the Jacobi scan and the
//! embedding into sp(8,R) ⋉ h(4).

use quaplectic::algebra::{
    commutator, conjugation_report, embed_quaplectic, format_exact, jacobi_report, spin_orbit_split, Canonical, Element,
    Generator, LieAlgebra, Quaplectic, Rational,
};

fn show(label: &str, el: &Element<Generator>) {
    let terms: Vec<String> = el.iter().map(|(g, c)| format!("({}) {g:?}", format_exact(c))).collect();
    println!("{label} = {}", if terms.is_empty() { "0".into() } else { terms.join(" + ") });
}

fn main() {
    let alpha = Rational::from_integer(1);
    let q = Quaplectic::new(alpha);
    let b = |g| Element::basis(g);

    show("[E^0_1, Z_1]", &commutator(&q, &b(Generator::e(0, 1)), &b(Generator::z(1))));
    show("[Z_0, Zbar_0]", &commutator(&q, &b(Generator::z(0)), &b(Generator::zbar(0))));
    show("[Z_2, Zbar_2]", &commutator(&q, &b(Generator::z(2)), &b(Generator::zbar(2))));
    show("[E^1_2, E^2_1]", &commutator(&q, &b(Generator::e(1, 2)), &b(Generator::e(2, 1))));

    let ext = Quaplectic::extended(alpha);
    let basis = Quaplectic::extended_basis();
    let j = jacobi_report(&ext, &basis);
    println!("quaplectic (extended): {} labels, {} triples, {} violations", j.basis_size, j.triples_checked, j.violations.len());

    let c = Canonical::new(alpha);
    let jc = jacobi_report(&c, &c.basis());
    println!("sp(8,R) + h(4): {} labels, {} triples, {} violations", jc.basis_size, jc.triples_checked, jc.violations.len());

    let conj = conjugation_report(&ext, &basis);
    println!(
        "conjugation: {} pairs, {} involution and {} anti-homomorphism failures",
        conj.pairs_checked,
        conj.involution_failures.len(),
        conj.antihomomorphism_failures.len()
    );

    for g in [Generator::z(1), Generator::e(0, 2)] {
        let img = embed_quaplectic(&g).unwrap_or_else(Element::zero);
        let terms: Vec<String> = img.iter().map(|(l, c)| format!("({}) {l:?}", format_exact(c))).collect();
        println!("{g:?} embeds as {}", terms.join(" + "));
    }

    let split = spin_orbit_split(&b(Generator::e(1, 2)));
    println!("E^1_2 splits into {} spin and {} orbital terms", split.spin.len(), split.orbital.len());
}

//! Resultants and discriminants through Sylvester matrices, including the
//! two golden discriminants behind the lemma certificates.

use std::time::Instant;

use pinchcert::elimination::{discriminant, resultant, sylvester_matrix};
use pinchcert::lemmas::{alineq1_numerators, ineqef_disc_display, ineqef_p, ineqks_disc_display, ineqks_p};
use pinchcert::multipoly::poly;

fn main() {
    let p = poly("x^2 - 3*x + 2", &["x"]);
    let q = poly("x^2 - 4", &["x"]);
    let syl = sylvester_matrix(&p, &q, "x").unwrap();
    println!("Sylvester matrix of ({p}, {q}) is {0}x{0}", syl.dim());
    println!("res_x = {} (shared root x = 2)", resultant(&p, &q, "x").unwrap().value);

    let quad = poly("a*x^2 + b*x + c", &["a", "b", "c", "x"]);
    println!("disc_x({quad}) = {}", discriminant(&quad, "x").unwrap().value);

    let (g, h) = alineq1_numerators();
    println!("res_x of the critical-point numerators = {}", resultant(&g, &h, "x").unwrap().value);

    for (name, p, var, display) in [
        ("ineqef", ineqef_p(), "tau", ineqef_disc_display()),
        ("ineqks", ineqks_p(), "k", ineqks_disc_display()),
    ] {
        let start = Instant::now();
        let d = discriminant(&p, var).unwrap();
        let matches = d.value == display.retable(d.value.vars()).unwrap();
        println!(
            "{name}: disc_{var} has {} terms, equals the factored display: {matches} ({:.2?})",
            d.value.num_terms(),
            start.elapsed()
        );
    }
}

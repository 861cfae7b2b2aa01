//! Closed-form pinching coefficients as rational functions of n, and their
//! negativity certificates on n >= 6.

use pinchcert::exactnum::{frac, int};
use pinchcert::pinching::{bracket_at, certify_negative, derived_constants, PinchingParams};

fn main() {
    let p = PinchingParams::reference();
    let d = derived_constants(&p);
    println!("b      = {}", d.b.split_form());
    println!("c      = {}", d.c);
    println!("tau    = {}", d.tau_coefficient.split_form());

    let cert = certify_negative(&p).unwrap();
    println!("theta      = {}", cert.theta.split_form());
    println!("coef_sn    = {}", cert.coef_sn.split_form());
    println!("coef_const = {}", cert.coef_const);
    print!("{}", cert.certificate.summary());

    // The bracket at S = n + n/eta, recomputed from its ingredients.
    let n = int(6);
    let s = &n + &n / &p.eta;
    println!("bracket at n = 6, S = {s}: {}", bracket_at(&p, &n, &s));

    let tighter = p.with_eta(frac(1793, 100)).unwrap();
    println!("eta = 17.93 certified: {}", certify_negative(&tighter).unwrap().passed());
    let broken = PinchingParams::new(p.eps.clone(), int(10), p.kap.clone(), p.eta.clone()).unwrap();
    let bad = certify_negative(&broken).unwrap();
    println!("sigma = 10 certified: {}", bad.passed());
    for o in bad.certificate.obligations.iter().filter(|o| !o.passed()) {
        println!("  failing: {}", o.desc);
    }
}

//! Rewrites symmetric polynomials in elementary symmetric form, moves to
//! the tau variable, and checks Newton's identities.

use pinchcert::lemmas::{alineq2_elementary_display, alineq2_p};
use pinchcert::symmetric::{
    cubic_discriminant, cubic_discriminant_tau_closed_form, power_sum_in_elementary, same_polynomial,
    tau_substitute, to_elementary, ElemSymExpr,
};

fn main() {
    let xyz = ["x", "y", "z"];
    let p = alineq2_p();
    let e = to_elementary(&p, &xyz).unwrap();
    println!("P in sigmas ({} terms):\n  {}", e.poly.num_terms(), e.poly);
    println!("matches the display: {}", same_polynomial(&e.poly, &alineq2_elementary_display()).unwrap());

    let tau = tau_substitute(&e).unwrap();
    println!("P with sigma2 = (sigma1^2 - tau^2)/3:\n  {}", tau.poly);

    for m in [2, 3, 4] {
        println!("p{m} = {}", power_sum_in_elementary(m, 3).unwrap().poly);
    }

    let d = cubic_discriminant().unwrap();
    println!("disc of the cubic with roots x, y, z: {d}");
    let dt = tau_substitute(&ElemSymExpr { poly: d, arity: 3, source_vars: vec![] }).unwrap();
    println!(
        "in tau: {}\nequals the closed form: {}",
        dt.poly,
        same_polynomial(&dt.poly, &cubic_discriminant_tau_closed_form()).unwrap()
    );
}

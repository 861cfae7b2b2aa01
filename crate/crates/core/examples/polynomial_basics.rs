//! Parsing, canonical printing, arithmetic, substitution and derivatives on
//! sparse polynomials with exact rational coefficients.

use pinchcert::exactnum::frac;
use pinchcert::multipoly::{parse_poly, VarTable};

fn main() {
    let vars = VarTable::new(["x", "y"]).unwrap();
    let p = parse_poly("(x + 2*y)^3 - 1/2*x*y", &vars).unwrap();
    let q = parse_poly("x - y^2", &vars).unwrap();

    println!("p           = {p}");
    println!("q           = {q}");
    println!("p * q       = {}", &p * &q);
    println!("dp/dy       = {}", p.partial_derivative("y").unwrap());
    println!("p(x := q)   = {}", p.substitute("x", &q).unwrap());
    println!("p(y := 3/4) = {}", p.specialize("y", &frac(3, 4)).unwrap());
    println!("p(1, -1)    = {}", p.evaluate(&[("x", frac(1, 1)), ("y", frac(-1, 1))]).unwrap());

    // Printing is canonical: reparsing the text reproduces it byte for byte.
    let text = p.to_string();
    assert_eq!(parse_poly(&text, &vars).unwrap().to_string(), text);

    // Mixing tables only works when one embeds into the other.
    let z = VarTable::new(["z"]).unwrap();
    let r = parse_poly("z + 1", &z).unwrap();
    match p.try_add(&r) {
        Ok(s) => println!("p + r       = {s}"),
        Err(e) => println!("p + r       fails: {e}"),
    }
}

//! Sturm chains, exact root counts on closed domains, and positivity
//! certificates. Prints one certificate as JSON at the end.

use pinchcert::exactnum::frac;
use pinchcert::multipoly::poly;
use pinchcert::realroots::{certify_positive, count_real_roots, sturm_sequence, DomainSpec};

fn main() {
    let p = poly("x^4 - 5*x^2 + 4", &["x"]);
    let seq = sturm_sequence(&p, "x").unwrap();
    println!("Sturm chain of {p}:");
    for (i, s) in seq.polys.iter().enumerate() {
        println!("  p{i} = {s}");
    }
    for dom in [
        DomainSpec::WholeLine,
        DomainSpec::segment(frac(-1, 1), frac(2, 1)).unwrap(),
        DomainSpec::RayGeq(frac(3, 2)),
    ] {
        println!("  roots in {dom}: {}", count_real_roots(&p, "x", &dom).unwrap());
    }

    // A repeated root is counted once.
    let sq = poly("(x - 1)^3*(x + 2)", &["x"]);
    println!("{sq} has {} distinct real roots", count_real_roots(&sq, "x", &DomainSpec::WholeLine).unwrap());

    for (text, dom) in [
        ("x^3 + 2*x + 5", DomainSpec::RayGeq(frac(0, 1))),
        ("x^4 - 2*x^2 + 2", DomainSpec::WholeLine),
        ("x^2 - 2", DomainSpec::segment(frac(0, 1), frac(2, 1)).unwrap()),
    ] {
        let cert = certify_positive(&poly(text, &["x"]), "x", &dom).unwrap();
        let how = cert.method.map_or("none", |m| m.as_str());
        println!("positive on {dom}: {text} -> {:?} via {how}", cert.status);
        if !cert.passed() {
            println!("{}", serde_json::to_string_pretty(&cert.to_json()).unwrap());
        }
    }
}

//! Runs all four lemma certificates in dependency order and prints a
//! summary of each. Pass `--json` for the full certificates.

use std::time::Instant;

use pinchcert::lemmas::{certify_lemmas, LemmaId};

fn main() {
    let json = std::env::args().any(|a| a == "--json");
    let start = Instant::now();
    let certs = certify_lemmas(&LemmaId::ALL).expect("certificates build");
    for c in &certs {
        if json {
            println!("{}", serde_json::to_string_pretty(&c.to_json()).unwrap());
        } else {
            print!("{}", c.summary());
        }
    }
    let all = certs.iter().all(|c| c.passed());
    eprintln!("all passed: {all} ({:.2?})", start.elapsed());
    std::process::exit(if all { 0 } else { 1 });
}

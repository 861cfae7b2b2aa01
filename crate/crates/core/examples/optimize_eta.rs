//! Searches for the smallest `eta` whose pinching bracket can be certified
//! negative on `n >= 6`.
//!
//! ```text
//! cargo run --example optimize_eta -- crates/core/examples/data/optimize_tight.json
//! ```

use pinchcert::exactnum::to_f64;
use pinchcert::pinching::{optimize_eta, SearchConfig};

fn main() {
    let cfg = match std::env::args().nth(1) {
        Some(path) => {
            let text = std::fs::read_to_string(&path).expect("readable config");
            SearchConfig::from_json(&text).expect("valid config")
        }
        None => SearchConfig::default(),
    };
    match optimize_eta(&cfg) {
        Ok(res) => {
            for step in &res.trace {
                let tag = if step.feasible { "feasible" } else { "rejected" };
                println!("eta = {:<12} ({:.5})  {tag}", step.eta.to_string(), to_f64(&step.eta));
            }
            let p = &res.params;
            println!("best eta = {} ({:.5})", res.best_eta, to_f64(&res.best_eta));
            println!("eps = {}, sigma = {}, kappa = {}", p.eps, p.sig, p.kap);
            println!("coef_sn    = {}", res.cert.coef_sn.split_form());
            println!("coef_const = {}", res.cert.coef_const);
        }
        Err(e) => {
            println!("{e}");
            std::process::exit(1);
        }
    }
}

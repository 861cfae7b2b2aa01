//! Exact random testing of the eigenvalue inequalities.
//!
//! Usage: `spectral_oracle [n] [eta] [trials] [seed]`, defaults 6 18 2000 0.

use pinchcert::exactnum::{int, parse_rational};
use pinchcert::lemmas::{check_spectrum, oracle_c, sample_spectra, SpectralSample};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let arg = |i: usize, default: &str| args.get(i).cloned().unwrap_or_else(|| default.to_string());
    let n: usize = arg(0, "6").parse().expect("n");
    let eta = parse_rational(&arg(1, "18")).expect("eta");
    let trials: usize = arg(2, "2000").parse().expect("trials");
    let seed: u64 = arg(3, "0").parse().expect("seed");

    // The Clifford-type spectrum sits exactly on F = 0.
    let clifford = SpectralSample::new([1, 1, 1, -1, -1, -1].map(int).to_vec()).unwrap();
    let chk = check_spectrum(&clifford, &oracle_c(6, &eta));
    println!("Clifford spectrum: F = {}, ok = {}", chk.f, chk.ok());

    let report = sample_spectra(n, &eta, trials, seed).expect("valid parameters");
    println!("{}", serde_json::to_string_pretty(&report.to_json()).unwrap());
    std::process::exit(if report.passed() { 0 } else { 1 });
}

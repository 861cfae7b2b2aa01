fn main() {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let (code, out) = pinchcert::cli::run(&argv);
    print!("{out}");
    std::process::exit(code);
}

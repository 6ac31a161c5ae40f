fn main() {
    let (report, text) = homquiver::cli::execute(std::env::args());
    if report.exit_code == homquiver::cli::EXIT_OK {
        println!("{text}");
    } else {
        eprintln!("{text}");
    }
    std::process::exit(report.exit_code);
}

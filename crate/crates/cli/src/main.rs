fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (code, text) = hopflab_cli::run(&args);
    if code != hopflab_cli::EXIT_USAGE {
        print!("{text}");
    } else {
        eprint!("{text}");
    }
    std::process::exit(code);
}

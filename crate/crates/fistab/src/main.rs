fn main() {
    std::process::exit(fistab::run(std::env::args_os()));
}

fn main() { std::process::exit(garsia::cli::run_from_args()) }

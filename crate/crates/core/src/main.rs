fn main() { std::process::exit(cohomo::cli::main()); }

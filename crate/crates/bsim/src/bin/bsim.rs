//! Thin launcher for the library's command-line front end.

fn main() {
    std::process::exit(bsim::cli::run());
}

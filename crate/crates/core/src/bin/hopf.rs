fn main() -> std::process::ExitCode {
    hopf_bicross::cli::main()
}

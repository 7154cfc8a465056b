fn main() -> std::process::ExitCode {
    selfdual::cli::main()
}

use std::io::Write;

fn main() {
    halphen::cli::init_threads();
    let out = halphen::cli::run(std::env::args_os());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    let _ = std::io::stdout().flush();
    std::process::exit(out.code);
}

use std::io::Write;

fn main() {
    let (code, out) = bitile::cli::run(std::env::args_os());
    let mut stdout = std::io::stdout().lock();
    if stdout.write_all(out.as_bytes()).is_err() {
        std::process::exit(2);
    }
    drop(stdout);
    std::process::exit(code);
}

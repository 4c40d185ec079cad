use std::io::Write;

fn main() {
    let out = kottwitz_cli::run(std::env::args_os());
    print!("{}", out.stdout);
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    std::process::exit(out.code);
}

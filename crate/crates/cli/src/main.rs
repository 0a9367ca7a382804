use std::io::Write;

fn main() {
    let (code, stdout, stderr) = cyclic_covers_cli::run(std::env::args_os());
    print!("{stdout}");
    eprint!("{stderr}");
    std::io::stdout().flush().ok();
    std::process::exit(code);
}

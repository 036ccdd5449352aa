use std::io::Write;

fn main() {
    let run = signed_graphs_cli::execute(std::env::args_os());
    // a closed pipe downstream is not an error of ours
    let _ = std::io::stdout()
        .write_all(run.stdout.as_bytes())
        .and_then(|()| std::io::stdout().flush());
    let _ = std::io::stderr().write_all(run.stderr.as_bytes());
    std::process::exit(run.code);
}

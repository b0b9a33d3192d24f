//! Driving the command line front end without spawning a process.

fn main() {
    let runs: [&[&str]; 4] = [
        &["integrate", "1/(x^2+1)", "--from", "0", "--to", "1"],
        &["integrate", "(x^2+2*x+4)/(x^4-7*x^2+2*x+17)", "--from", "0", "--to", "4", "--json"],
        &["check-equal", "atan(8)+atan(5)", "5/4*pi-atan(2)"],
        &["oracle", "x*sin(x)/(1+cos(x)^2)", "--from", "0", "--to", "pi", "--digits", "15"],
    ];
    for args in runs {
        let out = symint::cli::run(std::iter::once("symint").chain(args.iter().copied()));
        println!("$ symint {}", args.join(" "));
        print!("{}{}", out.stdout, out.stderr);
        println!("exit {}\n", out.code);
    }
}

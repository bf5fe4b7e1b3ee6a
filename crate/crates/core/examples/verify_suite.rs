//! Runs the built-in verification suite with a chosen seed and sample count.

fn main() {
    let mut args = std::env::args().skip(1);
    let seed = args.next().and_then(|s| s.parse().ok()).unwrap_or(42);
    let samples = args.next().and_then(|s| s.parse().ok()).unwrap_or(200);
    let report = chowkit::verify::run_suite(seed, samples);
    println!("{report}");
    std::process::exit(if report.all_passed() { 0 } else { 1 });
}

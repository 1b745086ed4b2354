//! Runs the acceptance suite and prints one line per criterion.

fn main() {
    let reports = hwv::acceptance::run(&[]);
    for r in &reports {
        println!("{r}");
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    println!("acceptance: {} passed, {failed} failed", reports.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}

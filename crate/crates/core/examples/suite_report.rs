//! Run the full check suite for one algebra and print the JSON report.

use bcd_yangian::report::{run_suite, RunConfig, Suite};
use bcd_yangian::Kind;

fn main() -> bcd_yangian::Result<()> {
    let cfg = RunConfig::new(Kind::Symplectic, 4, Suite::All);
    let (report, times) = run_suite(&cfg)?;
    for t in times {
        eprintln!("{:<16} {:>8.3} s", t.group, t.elapsed.as_secs_f64());
    }
    eprintln!("{:?}", report.summary);
    print!("{}", report.to_json());
    std::process::exit(report.exit_code());
}

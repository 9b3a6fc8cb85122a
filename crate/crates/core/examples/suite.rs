//! Run the property suite over every meet-semilattice with at most six
//! elements.

use meet_ideal::suite::{run_suite, SuiteConfig};

fn main() {
    let config = SuiteConfig { max_elements: 6, graft_samples: 50, ..SuiteConfig::default() };
    let report = run_suite(&config);
    print!("{}", report.render());
    std::process::exit(if report.passed { 0 } else { 1 });
}

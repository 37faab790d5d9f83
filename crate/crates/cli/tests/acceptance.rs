//! One line per criterion; exits nonzero if any fails.

use charp_lab::check::{run_criterion, CRITERIA};

fn main() {
    let mut failed = Vec::new();
    for id in 1..=CRITERIA {
        let r = run_criterion(id);
        println!("{}", r.line());
        if !r.pass {
            failed.push(id);
        }
    }
    if failed.is_empty() {
        println!("acceptance: {CRITERIA} of {CRITERIA} criteria passed");
    } else {
        println!("acceptance: failed criteria {failed:?}");
        std::process::exit(1);
    }
}

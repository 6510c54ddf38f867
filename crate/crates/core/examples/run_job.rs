//! Running JSON jobs in-process, the way the command-line tool does.
//!
//! `cargo run --example run_job -- examples/jobs/norm.json` runs a file;
//! without arguments a small resultant job and a partial selftest run.

use elimination::job::{run_text, RunOptions};

fn main() {
    let jobs: Vec<String> = match std::env::args().nth(1) {
        Some(path) => vec![std::fs::read_to_string(path).expect("readable job file")],
        None => vec![
            r#"{"command": "resultant", "payload": {"n_vars": 2, "forms": ["x0 + x1", "x0 - x1"]}}"#.into(),
            r#"{"command": "selftest", "seed": 11, "payload": {"properties": ["bezout", "cube_calculus"]}}"#.into(),
        ],
    };
    for text in jobs {
        let report = run_text(&text, RunOptions::default());
        print!("{}", report.to_json());
        println!("exit code {}", report.exit_code);
    }
}

//! The command-line pipeline driven from code: run `theorem check` twice
//! into fresh directories and confirm the artifacts are byte-identical.

use std::fs;
use std::path::Path;

use clap::Parser;
use hopf_bicross::cli::{run, Cli, Outcome};

fn files(dir: &Path) -> Vec<(String, Vec<u8>)> {
    let mut out = Vec::new();
    let mut stack = vec![dir.to_path_buf()];
    while let Some(d) = stack.pop() {
        for entry in fs::read_dir(&d).expect("readable") {
            let path = entry.expect("entry").path();
            if path.is_dir() {
                stack.push(path);
            } else {
                let rel = path.strip_prefix(dir).expect("below dir").display().to_string();
                out.push((rel, fs::read(&path).expect("readable")));
            }
        }
    }
    out.sort();
    out
}

fn main() {
    let (a, b) = (
        tempfile::tempdir().expect("tempdir"),
        tempfile::tempdir().expect("tempdir"),
    );
    for dir in [&a, &b] {
        let cli = Cli::parse_from(["hopf", "--out", dir.path().to_str().expect("utf-8"), "theorem", "check"]);
        assert_eq!(run(&cli, None), Outcome::Verified);
    }
    let (fa, fb) = (files(a.path()), files(b.path()));
    for (name, bytes) in &fa {
        println!("{name:<40} {:>8} bytes", bytes.len());
    }
    println!("byte-identical: {}", fa == fb);
}

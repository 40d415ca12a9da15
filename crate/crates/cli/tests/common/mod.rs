#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

pub fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

pub fn fixture_set(kind: &str) -> Vec<PathBuf> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(fixtures().join(kind))
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "ring"))
        .collect();
    files.sort();
    files
}

pub fn fusring<I, S>(args: I) -> Output
where
    I: IntoIterator<Item = S>,
    S: AsRef<std::ffi::OsStr>,
{
    fusring_with_env(args, &[])
}

pub fn fusring_with_env<I, S>(args: I, env: &[(&str, &str)]) -> Output
where
    I: IntoIterator<Item = S>,
    S: AsRef<std::ffi::OsStr>,
{
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_fusring"));
    cmd.args(args).env_remove("FUSRING_JOBS").env_remove("FUSRING_MAX_CANDIDATES");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

pub fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

pub fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

/// Valid fixtures and the `family` invocation that regenerates each one.
pub const GOLDEN: &[(&str, &str, &[&str])] = &[
    ("fib", "fib", &[]),
    ("z2", "cyclic", &["n=2"]),
    ("klein4", "klein4", &[]),
    ("prop31-m1n1", "prop31", &["m=1", "n=1"]),
    ("prop31-m2n2", "prop31", &["m=2", "n=2"]),
    ("prop31-m1n0", "prop31", &["m=1", "n=0"]),
    ("eq6-m0n1s1t0", "eq6", &["m=0", "n=1", "s=1", "t=0"]),
    ("eq7-a0b0", "eq7", &["a=0", "b=0"]),
    ("eq7-a1b0", "eq7", &["a=1", "b=0"]),
    ("neargroup-z3-k0", "neargroup-z3", &["k=0"]),
];

pub fn family_args(name: &str, params: &[&str], out: &Path) -> Vec<String> {
    let mut args = vec!["family".to_string(), name.to_string()];
    for p in params {
        args.push("--param".into());
        args.push(p.to_string());
    }
    args.push("-o".into());
    args.push(out.display().to_string());
    args
}

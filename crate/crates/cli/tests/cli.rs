use std::io::Write;
use std::process::{Command, Output};

fn lunefree(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lunefree")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

const TREFOIL: &str = "a+ b- c+ a+ b- c+";

#[test]
fn equivalence_exit_codes() {
    assert_eq!(lunefree(&["equiv", "--mode", "12", TREFOIL, ""]).status.code(), Some(0));
    assert_eq!(lunefree(&["equiv", "--mode", "1", TREFOIL, ""]).status.code(), Some(1));
    assert_eq!(lunefree(&["equiv", "--mode", "2", TREFOIL, "a+ a+"]).status.code(), Some(0));
}

#[test]
fn triviality() {
    let o = lunefree(&["trivial", TREFOIL]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "false\n");
    assert_eq!(stdout(&lunefree(&["trivial", ""])), "true\n");
}

#[test]
fn reduce_trace() {
    let o = lunefree(&["reduce", "--mode", "12", TREFOIL]);
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| l.starts_with("step\t")).count(), 2);
    assert_eq!(out.lines().last(), Some("result\t"));
    let o = lunefree(&["reduce", "--mode", "1", TREFOIL]);
    assert_eq!(stdout(&o).trim_end(), "result\ta+ b- c+ a+ b- c+");
}

#[test]
fn canon_and_resolve() {
    assert_eq!(stdout(&lunefree(&["canon", "z- z-"])), "a+ a+\n");
    assert_eq!(stdout(&lunefree(&["resolve", TREFOIL])), "a+o b-u c+o a+u b-o c+u\n");
}

#[test]
fn invariants_report() {
    let o = lunefree(&["invariants", TREFOIL, "--inv", "tricolor,fox5"]);
    assert_eq!(stdout(&o), "input\ttricolor\ttrue\ninput\tfox5\t5\n");
}

#[test]
fn neighbors_listing() {
    let o = lunefree(&["neighbors", "", "--kinds", "1a", "--max-crossings", "1"]);
    assert_eq!(stdout(&o), "a+ a+\n");
    let o = lunefree(&["neighbors", TREFOIL, "--kinds", "2b"]);
    assert_eq!(stdout(&o).lines().count(), 1);
}

#[test]
fn input_errors_exit_2() {
    for args in [
        vec!["validate", "a+ b+ a+ b+"],
        vec!["validate", "a+ a-"],
        vec!["validate", "a+ a"],
        vec!["trivial", "a+ b+"],
        vec!["invariants", "", "--inv", "fox4"],
        vec!["reduce", "--mode", "3", ""],
        vec!["corpus", "run", "/nonexistent/corpus.txt"],
        vec!["frobnicate"],
    ] {
        let o = lunefree(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn corpus_run_reports_mismatches() {
    let dir = std::env::temp_dir().join(format!("lunefree-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let good = dir.join("good.txt");
    let bad = dir.join("bad.txt");
    std::fs::File::create(&good).unwrap().write_all(b"t: | tricolor=false\ntre: a+ b- c+ a+ b- c+ | tricolor=true\n").unwrap();
    std::fs::File::create(&bad).unwrap().write_all(b"t: | tricolor=true\n").unwrap();
    let o = lunefree(&["corpus", "run", good.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "t\ttricolor\tfalse\ntre\ttricolor\ttrue\n");
    let o = lunefree(&["corpus", "run", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    // single-curve verbs read a corpus file with one entry
    let one = dir.join("one.txt");
    std::fs::write(&one, "k: z+ z+\n").unwrap();
    assert_eq!(stdout(&lunefree(&["canon", one.to_str().unwrap()])), "a+ a+\n");
    assert_eq!(lunefree(&["canon", good.to_str().unwrap()]).status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn shipped_corpus_passes() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../corpus/shipped.txt");
    assert_eq!(lunefree(&["corpus", "run", path]).status.code(), Some(0));
    let fmt = lunefree(&["corpus", "fmt", path]);
    assert_eq!(fmt.status.code(), Some(0));
    assert!(stdout(&fmt).contains("trefoil: a+ b- c+ a+ b- c+ |"));
}

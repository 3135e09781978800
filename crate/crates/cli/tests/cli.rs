use c4energy_core::enumerate::count_trees;
use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_c4energy"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["sweep", "bogus"][..],
        &["sweep", "thm2", "--max-order", "11"],
        &["sweep", "fact1", "--jobs", "0"],
        &["alpha"],
        &["alpha", "--d", "2"],
    ] {
        assert_eq!(run(args, "").status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn energy_reads_graph6_from_stdin() {
    let o = run(&["energy", "--in", "-"], "A_\nBw\n\nDQc\n");
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "label,order,edges,energy,mu1,deficit");
    assert_eq!(lines.len(), 4);
    assert!(lines[2].starts_with("Bw,3,3,4.0,2.0"), "{}", lines[2]);

    let o = run(&["energy", "--in", "-", "--format", "json"], "Bw\n");
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["order"], 3);
    assert!((v["energy"].as_f64().unwrap() - 4.0).abs() < 1e-12);
}

#[test]
fn energy_reports_bad_input() {
    let o = run(&["energy", "--in", "-"], "A_\n~~\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    let o = run(&["energy", "--in", "/nonexistent/graphs.g6"], "");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn alpha_prints_value_and_bracket() {
    let o = run(&["alpha", "--d", "4"], "");
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("alpha = 1.18614066163"), "{text}");
    assert!(text.contains("bracket = ["));
    assert!(text.contains("residual = "));
}

#[test]
fn gen_trees_streams_one_line_per_tree() {
    for (n, dmax) in [(9, 3), (8, 8), (10, 2)] {
        let o = run(&["gen", "trees", "--n", &n.to_string(), "--dmax", &dmax.to_string()], "");
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o).lines().count() as u64, count_trees(n, dmax).unwrap());
    }
    let o = run(&["gen", "trees", "--n", "5", "--dmax", "3", "--graph6"], "");
    let text = stdout(&o);
    assert!(text.lines().all(|l| l.starts_with('D')), "{text}");
}

#[test]
fn sweep_writes_to_stdout_without_out() {
    let o = run(&["sweep", "fact1", "--max-order", "7"], "");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 5);
    let o = run(&["sweep", "thm1", "--d", "4", "--max-order", "7", "--format", "json"], "");
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["sweep"], "thm1-d4");
    assert_eq!(v["exceptions"], 0);
}

#[test]
fn margin_override_keeps_classification() {
    let o = run(&["sweep", "fact1", "--max-order", "9", "--margin", "0.5"], "");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 5);
    assert_eq!(run(&["sweep", "fact1", "--margin", "-1"], "").status.code(), Some(2));
}

#[test]
fn conjecture_table_prints_six_decimals() {
    let o = run(&["conjecture", "bn", "--max-k", "3"], "");
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "k,order,energy,ratio");
    assert_eq!(lines[1], "0,4,3.464102,0.866025");
    assert_eq!(lines.len(), 5);
    assert_eq!(run(&["conjecture", "bn", "--max-k", "10"], "").status.code(), Some(2));
}

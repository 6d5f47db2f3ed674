use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hecke-spheres"))
        .args(args)
        .env_remove("HECKE_SPHERES_MAX_N")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

#[test]
fn krawtchouk_examples() {
    let k = |f: &str, d: &str, n: &str| stdout(&run(&["krawtchouk", "--f", f, "--d", d, "--n", n]));
    assert_eq!(k("1", "1", "1").trim(), "(-1)/(p)");
    assert_eq!(k("0", "5", "7").trim(), "1");
    assert_eq!(k("2", "0", "4").trim(), "1");
}

#[test]
fn krawtchouk_specialized() {
    let o = run(&[
        "krawtchouk",
        "--f",
        "1",
        "--d",
        "1",
        "--n",
        "1",
        "--p-half",
        "2",
        "--q-half",
        "3",
    ]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "-1/4");
    let o = run(&[
        "krawtchouk",
        "--f",
        "1",
        "--d",
        "1",
        "--n",
        "1",
        "--p-half",
        "-1/2",
        "--q-half",
        "3",
    ]);
    assert_eq!(stdout(&o).trim(), "-4");
}

#[test]
fn spherical_table_json() {
    let o = run(&["table", "--kind", "spherical", "--n", "1"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["n"], 1);
    assert_eq!(v["rows"][0]["f"], 0);
    assert_eq!(v["rows"][1]["values"], serde_json::json!(["1", "(-1)/(p)"]));
}

#[test]
fn character_table_csv() {
    let o = run(&["table", "--kind", "characters", "--n", "1", "--format", "csv"]);
    assert_eq!(stdout(&o), "y,+,-\n+,1,p\n-,1,-1\n");
}

#[test]
fn preset_table_is_rational() {
    let o = run(&[
        "table",
        "--kind",
        "spherical",
        "--n",
        "2",
        "--preset",
        "B",
        "--q0",
        "3",
        "--format",
        "csv",
    ]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.lines().skip(1).all(|l| !l.contains(['p', 'q'])));
    assert!(out.lines().nth(2).unwrap().starts_with("1,1,1/6"));
}

#[test]
fn verify_small_rank() {
    let o = run(&["verify", "--n", "2"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(v["n"], 2);
    assert!(v["checks"].as_array().unwrap().len() > 30);
    let o = run(&["verify", "--n", "3", "--suite", "krawtchouk"]);
    assert!(o.status.success());
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&["krawtchouk", "--f", "4", "--d", "0", "--n", "3"]), 2);
    assert_eq!(code(&["verify", "--n", "0"]), 2);
    assert_eq!(code(&["verify", "--n", "9"]), 2);
    assert_eq!(code(&["verify", "--n", "2", "--suite", "nonsense"]), 2);
    assert_eq!(
        code(&[
            "table",
            "--kind",
            "spherical",
            "--n",
            "2",
            "--preset",
            "E8",
            "--q0",
            "2"
        ]),
        2
    );
    assert_eq!(
        code(&[
            "table",
            "--kind",
            "spherical",
            "--n",
            "2",
            "--preset",
            "B",
            "--q0",
            "-2"
        ]),
        2
    );
    assert_eq!(code(&["table", "--kind", "spherical", "--n", "2", "--p-half", "2"]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
}

#[test]
fn vanishing_denominator_exits_one() {
    let args = [
        "krawtchouk",
        "--f",
        "1",
        "--d",
        "1",
        "--n",
        "1",
        "--a",
        "p-1",
        "--p-half",
        "1",
        "--q-half",
        "2",
    ];
    let o = run(&args);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("denominator"));
}

#[test]
fn env_cap_is_respected() {
    let bin = env!("CARGO_BIN_EXE_hecke-spheres");
    let o = Command::new(bin)
        .args(["table", "--kind", "spherical", "--n", "3"])
        .env("HECKE_SPHERES_MAX_N", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    let o = Command::new(bin)
        .args(["table", "--kind", "spherical", "--n", "1"])
        .env("HECKE_SPHERES_MAX_N", "50")
        .output()
        .unwrap();
    assert!(o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["table", "--kind", "spherical", "--n", "3"][..],
        &["table", "--kind", "characters", "--n", "2", "--format", "csv"][..],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout);
    }
}

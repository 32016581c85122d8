use std::process::Command;

fn affschur(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_affschur")).args(args).output().expect("binary runs")
}

#[test]
fn list_prints_every_check() {
    let out = affschur(&["list"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().collect::<Vec<_>>(), affschur::verify::CHECK_NAMES);
}

#[test]
fn check_emits_json_report() {
    let out = affschur(&["check", "trho", "--r", "2"]);
    assert!(out.status.success());
    let reports: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(reports[0]["check"], "trho");
    assert_eq!(reports[0]["status"], "pass");
}

#[test]
fn check_csv_and_unknown_name() {
    let out = affschur(&["check", "hecke-relations", "--r", "2", "--format", "csv"]);
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("check,status,millis,params\n"));
    assert_eq!(affschur(&["check", "bogus"]).status.code(), Some(2));
}

#[test]
fn table_to_file() {
    let dir = std::env::temp_dir().join(format!("affschur-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("f.csv");
    let out = affschur(&["table", "f", "--n", "2", "--r", "2", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("kind,n,N,r',r'',A,B,C,value\n"));
    assert!(text.lines().skip(1).all(|l| l.starts_with("f,2,")));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn negative_k_window_is_accepted() {
    let out = affschur(&["check", "ke-shift", "--n", "2", "--r", "1", "--kmin", "-1", "--kmax", "0"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}

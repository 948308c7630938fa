//! End-to-end checks of the installed binary.

use std::process::{Command, Output};

fn sublat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sublat"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn exit_code_contract() {
    assert_eq!(
        sublat(&["build", "--q", "3", "--m", "2"]).status.code(),
        Some(0)
    );
    assert_eq!(
        sublat(&["build", "--q", "10", "--m", "2"]).status.code(),
        Some(1)
    );
    assert_eq!(sublat(&["build", "--q", "3"]).status.code(), Some(1));
    assert_eq!(
        sublat(&["build", "--q", "3", "--m", "2", "--cap", "5"])
            .status
            .code(),
        Some(2)
    );
    // 2^8 has far more than 10^5 subspaces
    assert_eq!(
        sublat(&["build", "--q", "2", "--m", "8"]).status.code(),
        Some(2)
    );
    // a failing law is a result, not an error
    assert_eq!(
        sublat(&["check", "--q", "2", "--m", "3"]).status.code(),
        Some(0)
    );
    assert_eq!(
        sublat(&["paper-tables", "--only", "plane_gf3"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        sublat(&["paper-tables", "--only", "plane_gf9"])
            .status
            .code(),
        Some(1)
    );
    let bad = sublat(&[
        "build",
        "--p",
        "3",
        "--n",
        "2",
        "--modulus",
        "1,1,1",
        "--m",
        "2",
    ]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("reducible"));
}

fn round_trip<T: serde::Serialize + serde::de::DeserializeOwned>(args: &[&str]) {
    let text = stdout(&sublat(args));
    let doc: T = serde_json::from_str(&text).unwrap();
    assert_eq!(text, sublat::report::to_json(&doc), "{args:?}");
    let raw: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(raw["version"], 1);
}

#[test]
fn json_round_trips_byte_for_byte() {
    use sublat::report::{BuildDoc, CheckDoc, MqDoc};
    round_trip::<BuildDoc>(&["build", "--q", "4", "--m", "3", "--format", "json"]);
    round_trip::<CheckDoc>(&["check", "--q", "5", "--m", "2", "--format", "json"]);
    round_trip::<MqDoc>(&["mq", "--range", "2..17", "--format", "json"]);
    round_trip::<sublat::reference::Suite>(&["paper-tables", "--only", "m2", "--format", "json"]);
}

#[test]
fn check_witness_is_a_basis_matrix() {
    let text = stdout(&sublat(&[
        "check", "--q", "5", "--m", "2", "--format", "json",
    ]));
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let om = &v["laws"]["orthomodular"];
    assert_eq!(om["holds"], false);
    // a self-orthogonal line (1, a) with 1 + a^2 = 0 mod 5
    let row = &om["witness"][0][0];
    let a = row[1].as_u64().unwrap();
    assert_eq!(row[0], 1);
    assert_eq!((1 + a * a) % 5, 0);
}

#[test]
fn dot_and_out_file() {
    let dir = std::env::temp_dir().join(format!("sublat-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("space.dot");
    let o = sublat(&[
        "build",
        "--q",
        "2",
        "--m",
        "3",
        "--format",
        "dot",
        "--show-perp",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let dot = std::fs::read_to_string(&path).unwrap();
    assert_eq!(dot.lines().filter(|l| l.contains("[label=")).count(), 16);
    assert_eq!(
        dot.lines()
            .filter(|l| l.contains(" -> ") && !l.contains("dashed"))
            .count(),
        35
    );
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn modulus_override_keeps_the_suite_green() {
    let o = sublat(&["paper-tables", "--modulus", "2,1,1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("PASS [mq] m(9): 2"));
    assert!(text.contains("INFO [mq] tabulated witness (1,x) for q=9"));
    assert!(text.contains(" 0 failed,"));
}

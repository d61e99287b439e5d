use std::process::{Command, Output};

use serde_json::Value;

fn qcodes(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qcodes"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn params_reports() {
    let out = qcodes(&["params", "1", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(
        (r["results"]["n"].as_u64(), r["results"]["k"].as_u64()),
        (Some(15), Some(7))
    );
    assert_eq!(r["results"]["d"]["exact"], 5);
    assert_eq!(r["provenance"]["seed"], 0xC0DE);
    assert_eq!(r["provenance"]["budget"], 1 << 22);
    assert_eq!(r["provenance"]["modulus"]["2"], "0x13");

    let r = json(&qcodes(&["params", "--i", "0", "--m", "2"]));
    assert_eq!(r["results"]["k"], 9);
    assert_eq!(r["results"]["d"]["exact"], 3);
}

#[test]
fn trace_via_dual() {
    let r = json(&qcodes(&["trace", "0", "3"]));
    assert_eq!(r["results"]["k"], 48);
    assert_eq!(r["results"]["d"]["exact"], 5);
    assert_eq!(r["results"]["d"]["method"], "via_dual");
    assert_eq!(r["results"]["extended"]["d"]["exact"], 6);
}

#[test]
fn reports_are_deterministic() {
    for args in [&["params", "0", "3"][..], &["table", "1..3"], &["extend", "1", "3"]] {
        let a = qcodes(args);
        let b = qcodes(args);
        assert!(a.status.success(), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn table_rows() {
    let out = qcodes(&["table", "1..3"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 7);
    assert!(lines[0].starts_with("i,m,n,k,claimed_lower,certified_lower"));
    let ks: Vec<&str> = lines[1..].iter().map(|l| l.split(',').nth(3).unwrap()).collect();
    assert_eq!(ks, ["2", "2", "9", "7", "32", "32"]);
    // C(1,2): exact 5
    assert!(lines[4].starts_with("1,2,15,7,"));
    assert!(lines[4].contains(",5,5,exhaustive"));
}

#[test]
fn exit_codes() {
    assert_eq!(
        qcodes(&["verify", "lemma521", "--max-a", "1000"]).status.code(),
        Some(0)
    );
    assert_eq!(qcodes(&["verify", "duadic", "--m", "1,3,5"]).status.code(), Some(0));
    assert_eq!(qcodes(&["verify", "lcd", "--m", "2,4"]).status.code(), Some(0));
    assert_eq!(qcodes(&["verify", "thm522_partial"]).status.code(), Some(1));
    assert_eq!(qcodes(&["params", "2", "2"]).status.code(), Some(2));
    assert_eq!(qcodes(&["params", "0", "9"]).status.code(), Some(2));
    assert_eq!(qcodes(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(qcodes(&["verify", "lcd", "--m", "3"]).status.code(), Some(2));
    assert_eq!(qcodes(&["params"]).status.code(), Some(2));
}

#[test]
fn descriptor_round_trip() {
    let dir = std::env::temp_dir().join(format!("qcodes-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let built = json(&qcodes(&["build", "1", "2"]));
    let path = dir.join("c12.json");
    std::fs::write(&path, serde_json::to_string(&built["results"]["descriptor"]).unwrap()).unwrap();
    let p = path.to_str().unwrap();

    let r = json(&qcodes(&["params", "--descriptor", p]));
    assert_eq!(r["results"]["d"]["exact"], 5);
    let r = json(&qcodes(&["dual", "--descriptor", p]));
    assert_eq!(
        (r["results"]["k"].as_u64(), r["results"]["d"]["exact"].as_u64()),
        (Some(8), Some(4))
    );
    let r = json(&qcodes(&["subfield", "--descriptor", p]));
    assert_eq!(
        (r["results"]["q"].as_u64(), r["results"]["k"].as_u64()),
        (Some(2), Some(3))
    );
    let r = json(&qcodes(&["gray", "--descriptor", p]));
    assert_eq!(
        (r["results"]["n"].as_u64(), r["results"]["k"].as_u64()),
        (Some(30), Some(14))
    );
    assert_eq!(r["results"]["d"]["exact"], 5);

    std::fs::write(&path, "{\"q\": 4}").unwrap();
    assert_eq!(qcodes(&["params", "--descriptor", p]).status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn modulus_file_override() {
    let dir = std::env::temp_dir().join(format!("qcodes-mod-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("moduli.txt");
    // z^4 + z^3 + 1, also primitive over GF(2)
    std::fs::write(&path, "2:10011\n").unwrap();
    let out = qcodes(&["--modulus-file", path.to_str().unwrap(), "params", "1", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["provenance"]["modulus"]["2"], "0x19");
    assert_eq!(r["results"]["k"], 7);

    // z^4 + z^3 + z^2 + z + 1 is not primitive
    std::fs::write(&path, "2:11111\n").unwrap();
    assert_eq!(
        qcodes(&["--modulus-file", path.to_str().unwrap(), "params", "1", "2"])
            .status
            .code(),
        Some(2)
    );
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn csv_verify() {
    let out = qcodes(&["verify", "dims", "--m", "1..2", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("name,pass,detail\n"));
    assert_eq!(text.lines().count(), 5);
}

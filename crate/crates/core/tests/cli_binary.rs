use std::process::Command;

fn qverify(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_qverify")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn exit_codes() {
    let (code, out, _) = qverify(&["verify", "--ids", "c1,cm1", "--m-max", "2", "--order", "30"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().filter(|l| l.starts_with("PASS")).count(), 5);

    assert_eq!(qverify(&["verify", "--ids", "unknown"]).0, 2);
    assert_eq!(qverify(&["frobnicate"]).0, 2);
    assert_eq!(qverify(&["expand", "lhs", "cm1", "--m", "0"]).0, 2);

    let (code, out, _) = qverify(&["verify", "--ids", "c4", "--m-min", "2", "--m-max", "2", "--inject-fault", "4", "--format", "json"]);
    assert_eq!(code, 1);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["identity"], "c4");
    assert_eq!(v["pass"], false);
}

#[test]
fn expand_matches_partition_counts() {
    let (code, out, _) = qverify(&["expand", "rhs", "c1", "--m", "0", "--order", "7"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "0:1 1:1 2:1 3:1 4:2 5:2 6:3");
    let (_, half, _) = qverify(&["expand", "lhs", "A.16", "--order", "5"]);
    assert_eq!(half.trim(), "0:1/2 1:1/2 4:1/2");
}

#[test]
fn list_prefix() {
    let (code, out, _) = qverify(&["list", "--prefix", "cc"]);
    assert_eq!(code, 0);
    let ids: Vec<&str> = out.lines().map(|l| l.split_whitespace().next().unwrap()).collect();
    assert_eq!(ids, ["cc1", "cc2", "cc3", "cc1w", "cc3w", "cc3h", "cc3r", "cc1m"]);
}

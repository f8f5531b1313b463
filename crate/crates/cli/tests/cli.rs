use std::process::{Command, Output};

fn fibtree(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fibtree"))
        .args(args)
        .env_remove("FIBTREE_MAX_DEPTH")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = fibtree(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn field<'a>(record: &'a str, key: &str) -> Option<&'a str> {
    record
        .lines()
        .find_map(|l| l.strip_prefix(key).filter(|rest| rest.starts_with(' ')))
        .map(str::trim)
}

#[test]
fn encode_examples() {
    assert_eq!(stdout(&["encode", "--fib", "12"]), "10101\n");
    assert_eq!(stdout(&["encode", "--golden", "14"]), "120\n");
    assert_eq!(stdout(&["encode", "--fib", "1"]), "1\n");
    assert_eq!(
        stdout(&["encode", "--fib", "354224848179261915075"]),
        format!("1{}\n", "0".repeat(98))
    );
}

#[test]
fn decode_examples() {
    assert_eq!(stdout(&["decode", "--fib", "10101"]), "12\n");
    assert_eq!(stdout(&["decode", "--golden", "1022"]), "29\n");
    let strict = fibtree(&["decode", "--golden", "--strict", "1022"]);
    assert_eq!(strict.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&strict.stderr).contains("1100"));
    assert_eq!(fibtree(&["decode", "--fib", "0110"]).status.code(), Some(3));
}

#[test]
fn exit_codes() {
    assert_eq!(fibtree(&["encode", "--fib", "0"]).status.code(), Some(3));
    assert_eq!(
        fibtree(&["encode", "--fib", "twelve"]).status.code(),
        Some(3)
    );
    assert_eq!(fibtree(&["encode", "12"]).status.code(), Some(2));
    assert_eq!(
        fibtree(&["encode", "--fib", "--golden", "12"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(fibtree(&["frobnicate"]).status.code(), Some(2));
    let deep = fibtree(&["node", "--white", "900000"]);
    assert_eq!(deep.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&deep.stderr).contains("needs depth 15"));
    assert_eq!(
        fibtree(&["dump", "--white", "--depth", "15"]).status.code(),
        Some(4)
    );
    assert_eq!(fibtree(&["verify", "--depth", "15"]).status.code(), Some(4));
}

#[test]
fn depth_limit_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_fibtree"))
        .args(["dump", "--black", "--depth", "3", "--format", "csv"])
        .env("FIBTREE_MAX_DEPTH", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(4));
    assert!(stdout(&["--max-depth", "3", "dump", "--black", "--depth", "3"]).contains("level 3"));
}

#[test]
fn node_records() {
    let black6 = stdout(&["node", "--black", "6"]);
    assert_eq!(field(&black6, "fib_type"), Some("b01"));
    assert_eq!(
        field(&black6, "successor"),
        Some("16 (rightmost_son_plus_one)")
    );
    assert_eq!(field(&black6, "sons"), Some("14 15"));

    let white4 = stdout(&["node", "--white", "4"]);
    assert_eq!(field(&white4, "preferred_son"), Some("11"));
    assert_eq!(field(&white4, "fib_type"), None);

    let root = stdout(&["node", "--white", "1"]);
    assert_eq!(field(&root, "father"), None);
    assert_eq!(field(&root, "level"), Some("0"));
    assert_eq!(field(&root, "golden_type"), None);

    let base = stdout(&["node", "--black", "2"]);
    assert_eq!(field(&base, "successor"), Some("5 (base_case)"));
    assert_eq!(field(&base, "fib_type"), Some("exceptional"));
}

#[test]
fn dump_examples() {
    let csv = stdout(&["dump", "--white", "--depth", "3", "--format", "csv"]);
    let mut lines = csv.lines();
    assert_eq!(
        lines.next(),
        Some("number,status,level,father,fib_code,golden_code,fib_type,golden_type")
    );
    assert_eq!(lines.count(), 33);

    let root = stdout(&["dump", "--white", "--depth", "0", "--format", "csv"]);
    assert_eq!(root.lines().count(), 2);
    assert_eq!(root.lines().nth(1), Some("1,white,0,,1,1,,"));

    let black = stdout(&["dump", "--black", "--depth", "2", "--format", "csv"]);
    assert_eq!(black.lines().nth(6), Some("6,black,2,3,1001,20,b01,b0"));

    let dot = stdout(&["dump", "--black", "--depth", "2", "--format", "dot"]);
    let nodes = dot.lines().filter(|l| l.contains("[label=")).count();
    let edges = dot.lines().filter(|l| l.contains("->")).count();
    assert_eq!((nodes, edges), (8, 7));
    assert!(dot.contains("n3 -> n8 [style=bold]"));

    let records = stdout(&["dump", "--black", "--depth", "1", "--format", "records"]);
    let v: Vec<serde_json::Value> = records
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(v.len(), 3);
    assert_eq!(v[2]["fib_type"], "w00*");
    assert_eq!(v[0]["sons"], serde_json::json!([2, 3]));
}

#[test]
fn tile_conversion() {
    assert_eq!(stdout(&["tile", "--grid", "pentagrid", "7"]), "s2:n2\n");
    assert_eq!(stdout(&["tile", "--grid", "heptagrid", "8"]), "s1:n2\n");
    assert_eq!(stdout(&["tile", "--grid", "pentagrid", "0"]), "g0\n");
    assert_eq!(stdout(&["tile", "--grid", "heptagrid", "s1:n2"]), "8\n");
    assert_eq!(
        fibtree(&["tile", "--grid", "pentagrid", "s6:n1"])
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn verify_scopes() {
    let strips = stdout(&["verify", "--scope", "strips", "--depth", "8"]);
    assert!(strips.contains("strips_partition_nodes"));
    assert!(strips.contains("failed 0, warnings 1"));
    let codecs = stdout(&[
        "verify", "--scope", "codecs", "--depth", "0", "--max-n", "100000",
    ]);
    assert!(codecs.contains("passed    100000"));
}

#[test]
fn output_is_byte_stable() {
    for args in [
        &[
            "verify", "--depth", "6", "--max-n", "2000", "--format", "records",
        ][..],
        &["dump", "--white", "--depth", "5", "--format", "dot"],
        &["node", "--black", "1000"],
    ] {
        assert_eq!(fibtree(args).stdout, fibtree(args).stdout, "{args:?}");
    }
}

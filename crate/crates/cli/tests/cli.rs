use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn hyperlab(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperlab"))
        .current_dir(dir)
        .env_remove("HYPERLAB_GUARD")
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn construct_then_analyse() {
    let dir = tempfile::tempdir().unwrap();
    let o = hyperlab(
        dir.path(),
        &[
            "construct",
            "sigma",
            "--n",
            "3",
            "--r",
            "4",
            "--q",
            "5",
            "--sigma",
            "3,1",
            "-o",
            "s.json",
        ],
    );
    assert!(o.status.success(), "{o:?}");
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("s.json")).unwrap()).unwrap();
    assert_eq!(doc["edges"].as_array().unwrap().len(), 300);
    assert_eq!(doc["vertex_count"], 15);

    let o = hyperlab(dir.path(), &["chi", "--in", "s.json", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["chromatic_number"], 3);

    let o = hyperlab(dir.path(), &["clique", "--in", "s.json", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["clique_number"], 4);
    assert_eq!(v["witness"].as_array().unwrap().len(), 4);

    let o = hyperlab(
        dir.path(),
        &["spectrum", "--in", "s.json", "--format", "json", "--emit-witnesses"],
    );
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["feasible"], serde_json::json!([3]));
    assert!(v["witnesses"]["3"].is_array());
}

#[test]
fn saved_files_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["a.json", "b.json"] {
        let o = hyperlab(
            dir.path(),
            &[
                "construct",
                "sigma",
                "--n",
                "2",
                "--r",
                "3",
                "--q",
                "2",
                "--sigma",
                "2,1",
                "-o",
                name,
            ],
        );
        assert!(o.status.success());
    }
    let a = std::fs::read(dir.path().join("a.json")).unwrap();
    assert_eq!(a, std::fs::read(dir.path().join("b.json")).unwrap());

    for name in ["x.json", "y.json"] {
        let o = hyperlab(
            dir.path(),
            &[
                "star", "--in", "a.json", "--t", "1", "--steps", "3", "--rule", "random", "--seed", "11", "-o", name,
            ],
        );
        assert!(o.status.success(), "{o:?}");
    }
    let x = std::fs::read(dir.path().join("x.json")).unwrap();
    assert_eq!(x, std::fs::read(dir.path().join("y.json")).unwrap());
    let doc: Value = serde_json::from_slice(&x).unwrap();
    assert_eq!(doc["vertex_count"], 7);
}

#[test]
fn extend_grows_the_vertex_set() {
    let dir = tempfile::tempdir().unwrap();
    hyperlab(
        dir.path(),
        &[
            "construct",
            "sigma",
            "--n",
            "2",
            "--r",
            "4",
            "--q",
            "3",
            "--sigma",
            "3,1",
            "-o",
            "s.json",
        ],
    );
    let o = hyperlab(
        dir.path(),
        &[
            "extend", "--in", "s.json", "--edge", "0", "--p", "1", "--qext", "1", "--T", "1", "--P", "1", "--Q", "1",
        ],
    );
    assert!(o.status.success(), "{o:?}");
    let doc: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["vertex_count"], 8);

    let bad = hyperlab(
        dir.path(),
        &["extend", "--in", "s.json", "--edge", "99", "--p", "1", "--T", "1"],
    );
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn size_guard_exit_code_and_override() {
    let dir = tempfile::tempdir().unwrap();
    let args = [
        "construct",
        "sigma",
        "--n",
        "9",
        "--r",
        "3",
        "--q",
        "8",
        "--sigma",
        "2,1",
        "-o",
        "big.json",
    ];
    let o = hyperlab(dir.path(), &args);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("guard"));

    let o = Command::new(env!("CARGO_BIN_EXE_hyperlab"))
        .current_dir(dir.path())
        .env("HYPERLAB_GUARD", "80")
        .args(args)
        .output()
        .unwrap();
    assert!(o.status.success(), "{o:?}");
    assert!(String::from_utf8_lossy(&o.stderr).contains("overridden"));

    // the mask index caps any override at 128 vertices
    let o = hyperlab(dir.path(), &["--guard-vertices", "129", "chi", "--in", "big.json"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn usage_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(hyperlab(dir.path(), &["verify", "bogus"]).status.code(), Some(2));
    assert_eq!(
        hyperlab(dir.path(), &["chi", "--in", "missing.json"]).status.code(),
        Some(2)
    );
    std::fs::write(
        dir.path().join("bad.json"),
        "{\"r\":3,\"vertex_count\":2,\"edges\":[[0,1,2]]}",
    )
    .unwrap();
    let o = hyperlab(dir.path(), &["chi", "--in", "bad.json"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("edges[0]"), "{o:?}");
    let o = hyperlab(
        dir.path(),
        &[
            "construct",
            "sigma",
            "--n",
            "2",
            "--r",
            "5",
            "--q",
            "3",
            "--sigma",
            "3,1",
        ],
    );
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_formats() {
    let dir = tempfile::tempdir().unwrap();
    let o = hyperlab(dir.path(), &["verify", "symmetric-partition", "--format", "csv"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("theorem,instances,failures,pass,elapsed_seconds"));
    assert!(lines.next().unwrap().starts_with("symmetric-partition,271,0,true,"));

    let o = hyperlab(dir.path(), &["verify", "thm-2.2", "--trials", "5", "--format", "json"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["theorem"], "extension-spectrum");
    assert_eq!(v[0]["instances"], 5);
    assert_eq!(v[0]["pass"], true);

    let o = hyperlab(dir.path(), &["verify", "all", "--trials", "10"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

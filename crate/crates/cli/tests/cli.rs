use std::io::Write;
use std::process::{Command, Output, Stdio};

fn isocoh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_isocoh"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn isocoh_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_isocoh"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = isocoh(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn golden(name: &str) -> String {
    let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(path).unwrap()
}

#[test]
fn betti_of_projective_space() {
    let out = stdout(&[
        "betti", "--family", "C", "--n", "2", "--k", "1", "--format", "csv",
    ]);
    let rows: Vec<&str> = out.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(rows, ["degree,rank", "0,1", "2,1", "4,1", "6,1"]);
    assert!(out.starts_with("# FiniteC(n=2, k=1), degree cap 6\n"));
    assert_eq!(out, golden("betti_c_2_1.csv"));
}

#[test]
fn relations_in_canonical_order() {
    let out = stdout(&["relations", "--family", "C", "--n", "2", "--k", "1"]);
    let labels: Vec<&str> = out
        .lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| l.split(':').next().unwrap())
        .collect();
    assert_eq!(labels, ["R^2", "R^3", "S^2"]);
    assert_eq!(out, golden("relations_c_2_1.txt"));
    assert_eq!(
        stdout(&[
            "relations",
            "--family",
            "B",
            "--n",
            "3",
            "--k",
            "1",
            "--format",
            "json"
        ]),
        golden("relations_b_3_1.json")
    );
}

#[test]
fn relations_json_uses_polynomial_schema() {
    let out = stdout(&[
        "relations",
        "--family",
        "C",
        "--n",
        "2",
        "--k",
        "1",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["degree_cap"], 6);
    let first = &v["relations"][0]["poly"];
    assert_eq!(first["vars"], serde_json::json!(["c1", "c2", "c3"]));
    assert_eq!(first["degrees"], serde_json::json!([2, 4, 6]));
    let poly = isocoh::polycore::Polynomial::<num_bigint::BigInt>::from_json(first).unwrap();
    assert_eq!(poly.to_string(), "c1^2 - c2");
}

#[test]
fn springer_torus_example() {
    assert_eq!(
        stdout(&["springer", "--family", "sp", "--n", "2", "--t", "3,2"]),
        "4/3, 3/4\n"
    );
    assert_eq!(golden("springer_sp_2.txt"), "4/3, 3/4\n");
    assert_eq!(
        stdout(&["springer", "--family", "so", "--n", "1", "--t", "2"]),
        "3/4\n"
    );
}

#[test]
fn inject_report_is_stable() {
    let out = stdout(&["inject", "--family", "C", "--k", "2", "--degree-cap", "12"]);
    assert_eq!(out, golden("inject_c_2_12.json"));
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["injective_up_to_cap"], true);
    for d in v["degrees"].as_array().unwrap() {
        for key in [
            "degree",
            "domain_dim",
            "image_rank_Q",
            "image_rank_mod2",
            "kernel_basis",
        ] {
            assert!(d.get(key).is_some(), "missing {key}");
        }
    }
}

#[test]
fn partitions_listing() {
    assert_eq!(
        stdout(&["partitions", "--n", "3", "--k", "1"]),
        golden("partitions_3_1.txt")
    );
    assert_eq!(
        stdout(&["partitions", "--n", "3", "--k", "1", "--size", "2"]),
        "(2)\n(1,1)\n"
    );
}

#[test]
fn char_test_outcomes() {
    let run = |text: &str, n: &str| {
        let out = isocoh_with_stdin(&["char-test", "--n", n], text);
        assert_eq!(out.status.code(), Some(0));
        String::from_utf8(out.stdout).unwrap()
    };
    assert_eq!(
        run(
            "1/4*t1^2 - 1/2 + 1/4*t1^-2 + 1/4*t2^2 - 1/2 + 1/4*t2^-2",
            "2"
        ),
        "x1 + x2\n"
    );
    assert_eq!(run("t1 + t1^-1", "1"), "NOT-POLYNOMIAL\n");
    assert_eq!(run("t1", "1"), "NOT-INVARIANT\n");

    let dir = std::env::temp_dir().join(format!("isocoh-char-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("f.txt");
    std::fs::write(&file, "1\n").unwrap();
    assert_eq!(
        stdout(&["char-test", "--n", "3", "--input", file.to_str().unwrap()]),
        "1\n"
    );
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn other_subcommands() {
    let out = stdout(&[
        "xi-image",
        "--family",
        "C",
        "--k",
        "1",
        "--i",
        "1",
        "--stable",
        "--degree-cap",
        "8",
    ]);
    assert!(out.ends_with("e1 -> c1^2 - 2*c2\n"), "{out}");
    assert!(
        stdout(&["diagram-check", "--family", "C", "--n", "2", "--k", "1"])
            .ends_with("diagram commutes: true\n")
    );
    let w = stdout(&["witness", "--family", "B", "--k", "1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&w).unwrap();
    assert_eq!(v["degree"], 2);
    assert_eq!(v["missed_classes"], serde_json::json!(["tau1"]));
    let t = stdout(&[
        "torsion",
        "--family",
        "C",
        "--stable",
        "--k",
        "1",
        "--degree-cap",
        "8",
    ]);
    assert!(t.lines().skip(2).all(|l| l.ends_with(',')), "{t}");
}

#[test]
fn exit_codes() {
    // Usage errors.
    assert_eq!(
        isocoh(&["betti", "--family", "C", "--k", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        isocoh(&["betti", "--family", "C", "--n", "2", "--k", "1", "--stable"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        isocoh(&["betti", "--family", "X", "--n", "2", "--k", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(isocoh(&["relations", "--bogus"]).status.code(), Some(2));
    assert_eq!(
        isocoh(&[
            "relations",
            "--family",
            "C",
            "--stable",
            "--k",
            "1",
            "--subring"
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(
        isocoh(&[
            "relations",
            "--family",
            "C",
            "--n",
            "2",
            "--k",
            "1",
            "--format",
            "csv"
        ])
        .status
        .code(),
        Some(2)
    );
    // Domain errors.
    assert_eq!(
        isocoh(&["betti", "--family", "C", "--n", "1", "--k", "2"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        isocoh(&[
            "betti",
            "--family",
            "C",
            "--stable",
            "--k",
            "1",
            "--degree-cap",
            "7"
        ])
        .status
        .code(),
        Some(1)
    );
    assert_eq!(
        isocoh(&["springer", "--family", "sp", "--n", "2", "--t", "3,0"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        isocoh(&["springer", "--family", "sp", "--n", "2", "--t", "3"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        isocoh(&["xi-image", "--family", "C", "--k", "1", "--i", "2", "--n", "2"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn output_is_deterministic() {
    let cases: [&[&str]; 4] = [
        &[
            "torsion", "--family", "B", "--n", "3", "--k", "1", "--format", "json",
        ],
        &["inject", "--family", "B", "--k", "2", "--degree-cap", "12"],
        &[
            "betti",
            "--family",
            "B",
            "--stable",
            "--subring",
            "--k",
            "1",
        ],
        &[
            "relations",
            "--family",
            "C",
            "--stable",
            "--k",
            "2",
            "--degree-cap",
            "16",
            "--format",
            "json",
        ],
    ];
    for args in cases {
        let a = isocoh(args);
        let b = isocoh(args);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

use std::process::Command;

use dkp_cli::{parse_spec, render_report, run, Format, ReportJson};
use dkp_core::{stratification_report, WeylElement};

fn run_capture(args: &[&str]) -> (String, String, i32) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(args, &mut out, &mut err);
    (
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
        code,
    )
}

const A2_TABLE: &str = "\
y_word | len | stratum_dim | richardson_dim | leaf_dim
-------+-----+-------------+----------------+---------
e      | 0   | 1           | 3              | 2
1      | 1   | 0           | 2              | 2
2      | 1   | 0           | 2              | 2
12     | 2   | 1           | 1              | 0
21     | 2   | 1           | 1              | 0
121    | 3   | 0           | 0              | 0
";

#[test]
fn golden_a2_table() {
    let (out, _, code) = run_capture(&["report", "--type", "A2", "--w", "121"]);
    assert_eq!(code, 0);
    assert_eq!(out, A2_TABLE);
    let (implicit, _, _) = run_capture(&["--type", "A2", "--w", "1,2,1"]);
    assert_eq!(implicit, A2_TABLE);
}

#[test]
fn golden_a2_csv_with_basis() {
    let (out, _, code) = run_capture(&[
        "--type", "A2", "--w", "121", "--format", "csv", "--basis", "--double",
    ]);
    assert_eq!(code, 0);
    let expected = "\
y_word,len,stratum_dim,richardson_dim,leaf_dim,e1_dim,basis
e,0,1,3,2,1,\"[[1,1]]\"
1,1,0,2,2,0,[]
2,1,0,2,2,0,[]
12,2,1,1,0,1,\"[[2,-1]]\"
21,2,1,1,0,1,\"[[1,-2]]\"
121,3,0,0,0,2,[]
";
    assert_eq!(out, expected);
}

#[test]
fn identity_is_single_row() {
    let (out, _, code) = run_capture(&["--type", "B3", "--w", "e"]);
    assert_eq!(code, 0);
    let rows: Vec<&str> = out.lines().skip(2).collect();
    assert_eq!(rows.len(), 1);
    assert!(rows[0].starts_with("e "));
    let dims: Vec<&str> = rows[0].split('|').skip(1).map(str::trim).collect();
    assert_eq!(dims, ["0", "0", "0", "0"]);
}

#[test]
fn json_round_trip() {
    let args = [
        "--type", "B2", "--w", "1212", "--format", "json", "--basis", "--double",
    ];
    let (out, _, code) = run_capture(&args);
    assert_eq!(code, 0);
    let parsed: ReportJson = serde_json::from_str(&out).unwrap();
    assert_eq!(parsed.type_name, "B2");
    assert_eq!(parsed.w_word, vec![1, 2, 1, 2]);

    let spec = parse_spec(&args).unwrap();
    let w = WeylElement::from_word(spec.rs(), &spec.w).unwrap();
    let records = stratification_report(&w, spec.cap).unwrap();
    assert_eq!(parsed.rows.len(), records.len());
    for (row, rec) in parsed.rows.iter().zip(&records) {
        let y = WeylElement::from_word(spec.rs(), &row.y_word).unwrap();
        assert_eq!(y, rec.y);
        assert_eq!(row.y_word, rec.y.word());
        assert_eq!(row.len, rec.length_y);
        assert_eq!(row.stratum_dim, rec.stratum_dim);
        assert_eq!(row.richardson_dim, rec.richardson_dim);
        assert_eq!(row.leaf_dim, rec.leaf_dim);
        assert_eq!(row.e1_dim, Some(rec.double_dim));
        let basis: Vec<Vec<i64>> = rec.lattice_basis.iter().map(|v| v.0.clone()).collect();
        assert_eq!(row.basis.as_ref(), Some(&basis));
    }
    // re-serializing reproduces the bytes
    let again = String::from_utf8(render_report(&records, &spec)).unwrap();
    assert_eq!(again, out);
}

#[test]
fn json_a2_identity_row() {
    let (out, _, _) = run_capture(&["--type", "A2", "--w", "121", "--format", "json"]);
    let parsed: ReportJson = serde_json::from_str(&out).unwrap();
    assert_eq!(parsed.rows.len(), 6);
    let e = &parsed.rows[0];
    assert!(e.y_word.is_empty());
    assert_eq!((e.stratum_dim, e.richardson_dim, e.leaf_dim), (1, 3, 2));
    assert!(e.basis.is_none() && e.e1_dim.is_none());
    assert!(!out.contains("basis"));
}

#[test]
fn dot_hexagon() {
    let (out, _, code) = run_capture(&["--type", "A2", "--w", "121", "--hasse", "-"]);
    assert_eq!(code, 0);
    let nodes = out
        .lines()
        .filter(|l| l.trim_end().ends_with("\";") && !l.contains("->"))
        .count();
    let edges: Vec<&str> = out
        .lines()
        .filter(|l| l.contains("->"))
        .map(str::trim)
        .collect();
    assert_eq!(nodes, 6);
    assert_eq!(
        edges,
        [
            "\"e\" -> \"1\";",
            "\"e\" -> \"2\";",
            "\"1\" -> \"12\";",
            "\"1\" -> \"21\";",
            "\"2\" -> \"12\";",
            "\"2\" -> \"21\";",
            "\"12\" -> \"121\";",
            "\"21\" -> \"121\";",
        ]
    );
}

#[test]
fn dot_to_file_keeps_table_on_stdout() {
    let dir = std::env::temp_dir().join(format!("dkp-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("a2.dot");
    let p = path.to_str().unwrap();
    let (out, _, code) = run_capture(&["--type", "A2", "--w", "121", "--hasse", p]);
    assert_eq!(code, 0);
    assert_eq!(out, A2_TABLE);
    let dot = std::fs::read_to_string(&path).unwrap();
    assert_eq!(dot.lines().filter(|l| l.contains("->")).count(), 8);
    std::fs::remove_dir_all(&dir).unwrap();

    let (_, err, code) = run_capture(&[
        "--type",
        "A2",
        "--w",
        "1",
        "--hasse",
        "/nonexistent-dir/x.dot",
    ]);
    assert_eq!(code, 1);
    assert!(err.contains("cannot write"));
}

#[test]
fn exit_codes() {
    assert_eq!(run_capture(&["--type", "A2", "--w", "131"]).2, 1);
    assert_eq!(run_capture(&["--type", "Q2", "--w", "1"]).2, 1);
    assert_eq!(
        run_capture(&["--type", "A2", "--w", "121", "--hasse", "-", "--double"]).2,
        1
    );
    assert_eq!(
        run_capture(&["--type", "A3", "--w", "121321", "--cap", "5"]).2,
        2
    );
    assert_eq!(
        run_capture(&["--type", "A3", "--w", "121321", "--cap", "6"]).2,
        0
    );
    assert_eq!(run_capture(&["qcheck", "--n", "9"]).2, 1);
    assert_eq!(
        run_capture(&["lattice", "--type", "A2", "--y", "121", "--w", "1"]).2,
        1
    );
    assert_eq!(run_capture(&["betas", "--type", "A2", "--w", "11"]).2, 1);
    let (help, _, code) = run_capture(&["--help"]);
    assert_eq!(code, 0);
    assert!(help.contains("report"));
    let (_, err, code) = run_capture(&["--type", "A2", "--w", "131"]);
    assert_eq!(code, 1);
    assert!(err.contains("index 3 exceeds rank 2"));
}

#[test]
fn parse_spec_examples() {
    let s = parse_spec(&["--type", "A2", "--w", "121"]).unwrap();
    assert_eq!(
        (s.type_name().as_str(), s.w.as_slice(), s.format),
        ("A2", &[1, 2, 1][..], Format::Table)
    );
    let e = parse_spec(&["--type", "A2", "--w", "131"]).unwrap_err();
    assert_eq!(e.message, "index 3 exceeds rank 2");
    let s = parse_spec(&["--type", "E6", "--w", "1,2,3,4,5,6"]).unwrap();
    assert_eq!(s.w, vec![1, 2, 3, 4, 5, 6]);
}

#[test]
fn subcommand_outputs() {
    let (out, _, code) = run_capture(&["betas", "--type", "A2", "--w", "121", "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(out, "[[1,0],[1,1],[0,1]]\n");
    let (out, _, _) = run_capture(&[
        "lattice", "--type", "A2", "--y", "e", "--w", "121", "--format", "json",
    ]);
    assert_eq!(out, "[[1,1]]\n");
    let (out, _, code) = run_capture(&[
        "pairing", "--type", "A2", "--y", "1", "--w", "121", "--lambda", "1,0", "--mu", "-1,0",
        "--nu", "1,0",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out, "1\n");
    let (out, _, code) = run_capture(&["qcheck", "--n", "1", "--m", "2"]);
    assert_eq!(code, 0);
    assert!(out.lines().all(|l| l.ends_with("PASS")));
    assert!(out.contains("sl3 vector serre"));
}

#[test]
fn binary_matches_library() {
    let out = Command::new(env!("CARGO_BIN_EXE_dkp"))
        .args(["--type", "A2", "--w", "121"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), A2_TABLE);
    let out = Command::new(env!("CARGO_BIN_EXE_dkp"))
        .args(["--type", "A3", "--w", "121321", "--cap", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

use std::process::{Command, Output};

fn ferrers(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ferrers"))
        .args(args)
        .output()
        .expect("failed to run the ferrers binary")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn diagram_formats() {
    let out = ferrers(&["diagram", "9", "--format", "ascii"]);
    assert_eq!(
        (out.status.code(), stdout(&out).as_str()),
        (Some(0), "##\n##\n")
    );
    assert_eq!(stdout(&ferrers(&["diagram", "10"])), "#\n###\n");
    assert_eq!(
        stdout(&ferrers(&["diagram", "1", "--format", "json"])),
        "{\"n\":1,\"rows\":[]}\n"
    );
    assert_eq!(stdout(&ferrers(&["diagram", "1"])), "");

    let svg = stdout(&ferrers(&[
        "diagram",
        "10",
        "--format",
        "svg",
        "--cell-size",
        "4",
    ]));
    assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
    assert_eq!(svg.matches("<rect").count(), 4);
    let tikz = stdout(&ferrers(&["diagram", "12", "--format", "tikz"]));
    assert_eq!(tikz.matches("rectangle").count(), 4);
}

#[test]
fn diagram_rejects_bad_input() {
    for args in [
        &["diagram", "0"][..],
        &["diagram", "ten"],
        &["diagram", "-3"],
        &["diagram", "5", "--format", "png"],
        &["diagram", "5", "--cell-size", "0"],
    ] {
        let out = ferrers(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn number_command() {
    assert_eq!(stdout(&ferrers(&["number", "3,1"])), "10\n");
    assert_eq!(stdout(&ferrers(&["number", "1,3"])), "10\n");
    assert_eq!(stdout(&ferrers(&["number"])), "1\n");
    assert_eq!(stdout(&ferrers(&["number", "2,2"])), "9\n");
    assert_eq!(ferrers(&["number", "3,0"]).status.code(), Some(2));
    let many_ones = vec!["1"; 128].join(",");
    let out = ferrers(&["number", &many_ones]);
    assert_eq!(out.status.code(), Some(3));
    assert!(out.stdout.is_empty());
}

#[test]
fn factor_pi_and_count() {
    assert_eq!(stdout(&ferrers(&["factor", "10"])), "p1 p3\n");
    assert_eq!(stdout(&ferrers(&["factor", "1"])), "-\n");
    assert_eq!(stdout(&ferrers(&["factor", "16"])), "p1^4\n");
    assert_eq!(ferrers(&["factor", "0"]).status.code(), Some(2));
    assert_eq!(stdout(&ferrers(&["pi", "10"])), "4\n");
    assert_eq!(stdout(&ferrers(&["pi", "10.7"])), "4\n");
    assert_eq!(stdout(&ferrers(&["pi", "1"])), "0\n");
    assert_eq!(ferrers(&["pi", "-1"]).status.code(), Some(2));
    assert_eq!(stdout(&ferrers(&["count-subfigures", "3", "2"])), "10\n");
    assert_eq!(stdout(&ferrers(&["count-subfigures", "0", "5"])), "1\n");
    assert_eq!(
        ferrers(&["count-subfigures", "200", "200"]).status.code(),
        Some(3)
    );
}

#[test]
fn bound_command() {
    let out = ferrers(&["bound", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["bound_value"], 1.0);
    assert_eq!(v["w"], 1);
    assert_eq!(v["chain_ok"], true);

    let out = ferrers(&["bound", "1.5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}

#[test]
fn table_command() {
    let text = stdout(&ferrers(&["table", "16"]));
    let row16: Vec<&str> = text
        .lines()
        .skip_while(|l| !l.trim_start().starts_with("16 |"))
        .collect();
    assert_eq!(row16.len(), 4);
    assert!(row16[0].contains("| p1^4"));
    assert!(row16.iter().all(|l| l.ends_with("| #")));

    let single = stdout(&ferrers(&["table", "1"]));
    assert_eq!(single.lines().count(), 3);
    assert_eq!(ferrers(&["table", "0"]).status.code(), Some(2));
}

#[test]
fn verify_commands() {
    let out = ferrers(&["verify", "lemma1", "--max", "100"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["cases_checked"], 10_000);
    assert_eq!(v["counterexamples"], serde_json::json!([]));

    assert_eq!(
        ferrers(&["verify", "lemma2", "--imax", "4", "--jmax", "4"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        ferrers(&["verify", "theorem", "--xmax", "1000"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        ferrers(&["verify", "theorem", "--xmax", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        ferrers(&["verify", "lemma1", "--max", "0"]).status.code(),
        Some(2)
    );
    assert_eq!(ferrers(&["verify", "lemma1"]).status.code(), Some(2));
}

#[test]
fn theorem_csv_and_output_file() {
    let dir = std::env::temp_dir().join(format!("ferrers-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let csv = dir.join("sweep.csv");
    let json = dir.join("report.json");

    let out = ferrers(&[
        "verify",
        "theorem",
        "--xmax",
        "100",
        "--jobs",
        "2",
        "--csv",
        csv.to_str().unwrap(),
        "-o",
        json.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());

    let text = std::fs::read_to_string(&csv).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines[0],
        "x,h,w,m_size,binom,power,bound_value,bound_ok,chain_ok"
    );
    assert_eq!(lines.len(), 100);
    assert_eq!(lines[9], "10,3,4,10,35,256,1.5,true,true");

    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(report["cases_checked"], 99);
    std::fs::remove_dir_all(dir).ok();
}

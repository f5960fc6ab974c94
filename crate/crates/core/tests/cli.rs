//! Command-line behaviour: exit codes, output files and their schema.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use eur_hawking::sweep::{FigureManifest, PRESETS, QUANTITY_COLUMNS};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_eur-hawking"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn field(text: &str, key: &str) -> f64 {
    text.lines()
        .find_map(|l| l.strip_prefix(&format!("{key} = ")))
        .unwrap_or_else(|| panic!("no {key} in output:\n{text}"))
        .parse()
        .unwrap()
}

fn run_preset(name: &str, out: &Path, jobs: usize) -> Output {
    run(&["run", "--preset", name, "--out", out.to_str().unwrap(), "--jobs", &jobs.to_string()])
}

#[test]
fn eval_prints_both_paths() {
    let o = run(&[
        "eval", "--c1", "1", "--c2", "-1", "--c3", "1", "--noise", "dp", "--strength", "0",
        "--temperature", "1e12",
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    let (a, n) = (field(&text, "U_analytic"), field(&text, "U_numeric"));
    assert!((a - 1.232022653747).abs() < 1e-11);
    assert!((a - n).abs() < 1e-9);
    assert!(text.contains("status = ok"));
}

#[test]
fn eval_with_weak_measurement_reports_success_probability() {
    let o = run(&[
        "eval", "--c1", "0.7", "--c2", "0.6", "--c3", "-0.8", "--noise", "pd", "--strength", "0.6",
        "--temperature", "1", "--gamma", "0.4", "--csv",
    ]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!((field(&text, "Psucc") - 0.8).abs() < 1e-12);
    assert!(text.contains("U_analytic,U_numeric,Ub_analytic,Ub_numeric,QD,mixedness,Psucc,status"));
}

#[test]
fn config_errors_exit_with_two() {
    // Unphysical Bell parameters.
    let o = run(&[
        "eval", "--c1", "0.5", "--c2", "0.5", "--c3", "0.5", "--noise", "dp", "--strength", "0",
        "--temperature", "1",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("(1-c1-c2-c3)/4"));

    let o = run(&[
        "eval", "--c1", "1", "--c2", "-1", "--c3", "1", "--noise", "pd", "--strength", "1.5",
        "--temperature", "1",
    ]);
    assert_eq!(o.status.code(), Some(2));

    let dir = tempfile::tempdir().unwrap();
    assert_eq!(run_preset("fig99", dir.path(), 1).status.code(), Some(2));

    let bad = dir.path().join("bad.toml");
    fs::write(&bad, "scenario = \"dp_vs_T\"\nbell = { c1 = 1.0, c2 = -1.0, c3 = 1.0 }\nfrobnicate = 1\n").unwrap();
    let o = run(&["run", "--config", bad.to_str().unwrap(), "--out", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn list_presets_names_every_preset() {
    let o = run(&["list-presets"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let names: Vec<&str> = text.lines().map(|l| l.split('\t').next().unwrap()).collect();
    assert_eq!(names, PRESETS);
}

#[test]
fn preset_writes_csv_and_manifest() {
    let dir = tempfile::tempdir().unwrap();
    let o = run_preset("fig9a", dir.path(), 2);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));

    let manifest: FigureManifest =
        serde_json::from_str(&fs::read_to_string(dir.path().join("fig9a.manifest.json")).unwrap()).unwrap();
    assert_eq!(manifest.figure_id, "fig9a");
    assert_eq!(manifest.rows, 121 * 4);
    assert_eq!(manifest.x_axis.values, 121);
    assert_eq!(manifest.y_axis.as_ref().unwrap().values, 4);
    assert_eq!(manifest.status_counts.values().sum::<usize>(), manifest.rows);

    let mut reader = csv::Reader::from_path(dir.path().join(&manifest.csv_path)).unwrap();
    let header: Vec<String> = reader.headers().unwrap().iter().map(String::from).collect();
    let schema: Vec<String> = manifest.columns.iter().map(|c| c.name.clone()).collect();
    assert_eq!(header, schema);
    assert_eq!(&header[..2], ["x", "y"]);
    assert_eq!(header.last().unwrap(), "status");
    assert!(header[2..header.len() - 1].iter().all(|h| QUANTITY_COLUMNS.contains(&h.as_str())));

    let rows: Vec<csv::StringRecord> = reader.records().map(|r| r.unwrap()).collect();
    assert_eq!(rows.len(), manifest.rows);
    // Series is the outer loop: the first 121 rows share one gamma.
    assert!(rows[..121].iter().all(|r| r[1] == rows[0][1]));
    assert_ne!(&rows[121][1], &rows[0][1]);
    for r in &rows {
        for (h, v) in header.iter().zip(r.iter()) {
            if h != "status" && !v.is_empty() {
                assert!(v.parse::<f64>().unwrap().is_finite());
                assert!(!v.starts_with("-0.00000000000e0"));
            }
        }
    }
}

#[test]
fn parallel_and_repeated_runs_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let read = |sub: &str| fs::read(dir.path().join(sub).join("fig3a.csv")).unwrap();
    for (sub, jobs) in [("serial", 1), ("again", 1), ("parallel", 4)] {
        assert!(run_preset("fig3a", &dir.path().join(sub), jobs).status.success());
    }
    let serial = read("serial");
    assert_eq!(serial, read("again"));
    assert_eq!(serial, read("parallel"));
}

#[test]
fn toml_config_runs() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("sweep.toml");
    fs::write(
        &cfg,
        r#"
figure_id = "custom"
scenario = "pd_vs_T"
bell = { c1 = 0.9, c2 = -0.63, c3 = 0.7 }
fixed = { q = 0.1 }
outputs = ["U_numeric", "Ub_numeric"]

[sweep_axis]
name = "T_over_omega"
values = [0.0, 0.5, 1.0, 2.0]
"#,
    )
    .unwrap();
    let o = run(&["run", "--config", cfg.to_str().unwrap(), "--out", dir.path().to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = fs::read_to_string(dir.path().join("custom.csv")).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("x,U_numeric,Ub_numeric,status"));
    assert_eq!(lines.count(), 4);
}

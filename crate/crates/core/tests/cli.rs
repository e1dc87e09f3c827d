use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn rpca(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rpca"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn csv_rows(path: &Path) -> Vec<Vec<String>> {
    fs::read_to_string(path)
        .unwrap()
        .lines()
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect()
}

fn plane_pct(line: &str) -> f64 {
    line.rsplit("plane_inertia_pct=")
        .next()
        .unwrap()
        .trim()
        .parse()
        .unwrap()
}

#[test]
fn generate_writes_benchmark() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("data.csv");
    let out = rpca(&["generate", "--seed", "7", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let rows = csv_rows(&path);
    assert_eq!(rows.len(), 2901);
    assert_eq!(rows[0].len(), 11);
    assert_eq!(rows[0][10], "cluster");

    let small = dir.path().join("small.csv");
    assert!(rpca(&[
        "generate",
        "--seed",
        "7",
        "--n",
        "50",
        "--out",
        small.to_str().unwrap()
    ])
    .status
    .success());
    let rows = csv_rows(&small);
    assert_eq!(rows.len(), 51);
    for c in 1..=5 {
        assert_eq!(
            rows[1..].iter().filter(|r| r[10] == c.to_string()).count(),
            10
        );
    }
}

#[test]
fn generate_requires_seed() {
    let dir = tempfile::tempdir().unwrap();
    let out = rpca(&[
        "generate",
        "--out",
        dir.path().join("x.csv").to_str().unwrap(),
    ]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("--seed"));
}

#[test]
fn fit_rejects_k_at_least_n() {
    let dir = tempfile::tempdir().unwrap();
    let data = dir.path().join("data.csv");
    rpca(&[
        "generate",
        "--seed",
        "3",
        "--n",
        "100",
        "--out",
        data.to_str().unwrap(),
    ]);
    let out = rpca(&[
        "fit",
        "--input",
        data.to_str().unwrap(),
        "--k",
        "100",
        "--out",
        dir.path().join("o").to_str().unwrap(),
    ]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("k = 100"));
}

#[test]
fn fit_on_tiny_table() {
    let dir = tempfile::tempdir().unwrap();
    let data = dir.path().join("tiny.csv");
    fs::write(
        &data,
        "a,b,c\n0.1,2.0,3.5\n1.2,0.4,2.2\n2.3,1.9,0.3\n0.7,3.1,1.4\n1.9,2.6,2.8\n3.0,0.2,1.1\n",
    )
    .unwrap();
    let out_dir = dir.path().join("out");
    let out = rpca(&[
        "fit",
        "--input",
        data.to_str().unwrap(),
        "--k",
        "2",
        "--components",
        "2",
        "--out",
        out_dir.to_str().unwrap(),
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let line = stdout(&out);
    assert!(line.starts_with("method=rpca k=2 plane_inertia_pct="));

    let comps = csv_rows(&out_dir.join("components.csv"));
    assert_eq!(comps.len(), 7);
    assert_eq!(comps[0], vec!["row_id", "PC1", "PC2"]);
    let eigen = csv_rows(&out_dir.join("eigen.csv"));
    assert_eq!(eigen.len(), 4);
    let cumulative: Vec<f64> = eigen[1..].iter().map(|r| r[3].parse().unwrap()).collect();
    assert!(cumulative.windows(2).all(|w| w[0] <= w[1]));
    assert!((cumulative[2] - 1.0).abs() < 1e-9);
    // The printed percentage is the second cumulative fraction, rounded.
    assert_eq!(
        format!("{:.2}", cumulative[1] * 100.0),
        format!("{:.2}", plane_pct(&line))
    );

    let summary: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(out_dir.join("summary.json")).unwrap()).unwrap();
    let keys: Vec<&str> = summary
        .as_object()
        .unwrap()
        .keys()
        .map(String::as_str)
        .collect();
    for key in ["n", "p", "k", "mean_index", "inertia_plane_pct"] {
        assert!(keys.contains(&key));
    }
    assert_eq!(summary["n"], 6);
    assert_eq!(summary["k"], 2);
    for f in ["circle.csv", "scores.svg", "circle.svg"] {
        assert!(out_dir.join(f).exists());
    }

    // Same inputs give byte-identical files.
    let again = dir.path().join("again");
    rpca(&[
        "fit",
        "--input",
        data.to_str().unwrap(),
        "--k",
        "2",
        "--out",
        again.to_str().unwrap(),
    ]);
    for f in ["components.csv", "circle.csv", "eigen.csv", "summary.json"] {
        assert_eq!(
            fs::read(out_dir.join(f)).unwrap(),
            fs::read(again.join(f)).unwrap()
        );
    }
}

#[test]
fn compare_with_unit_rho_and_medoid_centering_agrees() {
    let dir = tempfile::tempdir().unwrap();
    let data = dir.path().join("data.csv");
    rpca(&[
        "generate",
        "--seed",
        "5",
        "--n",
        "300",
        "--out",
        data.to_str().unwrap(),
    ]);
    let out_dir = dir.path().join("cmp");
    let out = rpca(&[
        "compare",
        "--input",
        data.to_str().unwrap(),
        "--clusters",
        "5",
        "--rho-one",
        "--center-medoid",
        "--out",
        out_dir.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines[0].starts_with("method=rpca k=60 "));
    assert!(lines[1].starts_with("method=pca "));

    let read_eigen = |sub: &str| -> Vec<f64> {
        csv_rows(&out_dir.join(sub).join("eigen.csv"))[1..]
            .iter()
            .map(|r| r[2].parse().unwrap())
            .collect()
    };
    let (a, b) = (read_eigen("rpca"), read_eigen("pca"));
    let plane = |v: &[f64]| v[0] + v[1];
    assert!((plane(&a) - plane(&b)).abs() < 1e-8);
}

#[test]
fn compare_on_benchmark_prints_table() {
    let dir = tempfile::tempdir().unwrap();
    let data = dir.path().join("data.csv");
    rpca(&["generate", "--seed", "7", "--out", data.to_str().unwrap()]);
    let out = rpca(&[
        "compare",
        "--input",
        data.to_str().unwrap(),
        "--clusters",
        "5",
        "--out",
        dir.path().join("cmp").to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines[0].starts_with("method=rpca k=580 "));
    assert!(plane_pct(lines[0]) > plane_pct(lines[1]));
    assert!(lines[2].starts_with("method"));
    assert!(dir.path().join("cmp/rpca/components.csv").exists());
    assert!(dir.path().join("cmp/pca/components.csv").exists());
}

#[test]
fn missing_input_fails() {
    let out = rpca(&["fit", "--input", "/nonexistent.csv"]);
    assert!(!out.status.success());
}

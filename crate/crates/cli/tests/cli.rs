use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use tempfile::TempDir;
use twoline::geom::width_exact;
use twoline::Point;

fn twoline(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twoline")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn generate(dir: &TempDir, kind: &str, n: usize, seed: u64) -> PathBuf {
    let path = dir.path().join(format!("{kind}-{n}-{seed}.txt"));
    let out = twoline(&[
        "gen",
        "--kind",
        kind,
        "--n",
        &n.to_string(),
        "--seed",
        &seed.to_string(),
        "--output",
        path_str(&path),
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    path
}

fn solve(input: &Path, flags: &[&str]) -> (Output, serde_json::Value) {
    let mut args = vec!["solve", "--input", path_str(input)];
    args.extend_from_slice(flags);
    let out = twoline(&args);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let doc = serde_json::from_slice(&out.stdout).expect("json result");
    (out, doc)
}

fn read_points(path: &Path) -> Vec<Point> {
    std::fs::read_to_string(path)
        .unwrap()
        .lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| {
            let v: Vec<f64> = l.split_whitespace().map(|t| t.parse().unwrap()).collect();
            Point::new(v[0], v[1])
        })
        .collect()
}

#[test]
fn generation_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let a = std::fs::read(generate(&dir, "two-cluster", 300, 4)).unwrap();
    let out = twoline(&["gen", "--kind", "two-cluster", "--n", "300", "--seed", "4"]);
    assert_eq!(out.stdout, a);
    assert_ne!(twoline(&["gen", "--kind", "two-cluster", "--n", "300", "--seed", "5"]).stdout, a);
}

#[test]
fn gadget_width_is_the_width_of_its_base() {
    let dir = TempDir::new().unwrap();
    for seed in 0..5 {
        let path = generate(&dir, "gadget", 30, seed);
        let pts = read_points(&path);
        let base = width_exact(&pts[..pts.len() - 2]).0;
        let (_, doc) = solve(&path, &["--variant", "one-fixed", "--theta", "0", "--exact"]);
        let w = doc["max_width"].as_f64().unwrap();
        assert!((w - base).abs() <= 1e-12 * base, "{w} vs {base}");
        assert_eq!(doc["mode"], "exact");
        assert_eq!(doc["epsilon"], serde_json::Value::Null);
    }
}

#[test]
fn every_variant_passes_check() {
    let dir = TempDir::new().unwrap();
    let variants: [&[&str]; 5] = [
        &["--variant", "general", "--epsilon", "0.1"],
        &["--variant", "one-fixed", "--theta", "0.4", "--exact"],
        &["--variant", "one-fixed", "--theta", "-2.5", "--epsilon", "0.2"],
        &["--variant", "two-fixed", "--theta1", "0", "--theta2", "1.2", "--epsilon", "0.1"],
        &["--variant", "parallel", "--epsilon", "0.1"],
    ];
    for (kind, n) in [("uniform", 10), ("two-cluster", 12), ("two-cluster", 200), ("grid", 12)] {
        let input = generate(&dir, kind, n, 7);
        for flags in variants {
            let (out, doc) = solve(&input, flags);
            let result = dir.path().join("result.json");
            std::fs::write(&result, &out.stdout).unwrap();
            let check = twoline(&["check", "--input", path_str(&input), "--result", path_str(&result)]);
            assert_eq!(code(&check), 0, "{kind} {flags:?}: {}", String::from_utf8_lossy(&check.stdout));
            let report: serde_json::Value = serde_json::from_slice(&check.stdout).unwrap();
            assert_eq!(report["covered"], true);
            if let Some(ratio) = report["ratio"].as_f64() {
                let eps = doc["epsilon"].as_f64().unwrap_or(0.0);
                assert!(ratio <= 1.0 + eps + 1e-6, "{kind} {flags:?}: ratio {ratio}");
            }
        }
    }
}

#[test]
fn collinear_input_has_zero_width() {
    let dir = TempDir::new().unwrap();
    let input = generate(&dir, "collinear", 50, 2);
    let (_, doc) = solve(&input, &["--variant", "general", "--epsilon", "0.1"]);
    assert_eq!(doc["max_width"], 0.0);
    assert_eq!(doc["mode"], "zero-width");
}

#[test]
fn angles_have_twelve_significant_digits() {
    let dir = TempDir::new().unwrap();
    let input = generate(&dir, "uniform", 12, 3);
    let (_, doc) = solve(&input, &["--variant", "parallel", "--epsilon", "0.1"]);
    for s in doc["slabs"].as_array().unwrap() {
        let t = s["theta"].as_f64().unwrap();
        assert_eq!(t, format!("{t:.11e}").parse::<f64>().unwrap());
    }
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let input = generate(&dir, "uniform", 10, 1);
    let i = path_str(&input);
    let empty = dir.path().join("empty.txt");
    std::fs::write(&empty, "# nothing here\n\n").unwrap();
    let garbage = dir.path().join("garbage.txt");
    std::fs::write(&garbage, "1 2\n3 four\n").unwrap();
    let cases: [(&[&str], i32); 11] = [
        (&["solve", "--input", path_str(&empty), "--variant", "general", "--epsilon", "0.1"], 5),
        (&["solve", "--input", path_str(&garbage), "--variant", "general", "--epsilon", "0.1"], 2),
        (&["solve", "--input", "/no/such/file", "--variant", "general", "--epsilon", "0.1"], 2),
        (&["solve", "--input", i, "--variant", "one-fixed", "--epsilon", "0.1"], 3),
        (&["solve", "--input", i, "--variant", "general", "--exact"], 3),
        (&["solve", "--input", i, "--variant", "general"], 3),
        (&["solve", "--input", i, "--variant", "general", "--epsilon", "-1"], 3),
        (&["solve", "--input", i, "--variant", "two-fixed", "--theta1", "1", "--theta2", "1", "--epsilon", "0.1"], 3),
        (&["solve", "--input", i, "--variant", "sideways", "--epsilon", "0.1"], 3),
        (&["gen", "--kind", "uniform", "--n", "0"], 3),
        (&["solve", "--input", i, "--variant", "one-fixed", "--theta", "1", "--exact"], 0),
    ];
    for (args, want) in cases {
        let out = twoline(args);
        assert_eq!(code(&out), want, "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    }
}

#[test]
fn check_reports_a_missed_point() {
    let dir = TempDir::new().unwrap();
    let input = generate(&dir, "uniform", 10, 8);
    let (mut out, _) = solve(&input, &["--variant", "general", "--epsilon", "0.1"]);
    let mut doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    for s in doc["slabs"].as_array_mut().unwrap() {
        let lo = s["lo"].as_f64().unwrap();
        s["hi"] = serde_json::json!(lo);
    }
    out.stdout = serde_json::to_vec(&doc).unwrap();
    let result = dir.path().join("broken.json");
    std::fs::write(&result, &out.stdout).unwrap();
    let check = twoline(&["check", "--input", path_str(&input), "--result", path_str(&result)]);
    assert_eq!(code(&check), 1);
    let report: serde_json::Value = serde_json::from_slice(&check.stdout).unwrap();
    assert_eq!(report["covered"], false);
    assert!(report["uncovered"].as_u64().unwrap() > 0);
}

#[test]
fn bench_writes_one_row_per_size() {
    let rows = |jobs: &str| {
        let out = twoline(&[
            "bench",
            "--variant",
            "one-fixed",
            "--theta",
            "0.3",
            "--exact",
            "--sizes",
            "1000,10000,100000",
            "--jobs",
            jobs,
        ]);
        assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
        let text = String::from_utf8(out.stdout).unwrap();
        let lines: Vec<String> = text.lines().map(String::from).collect();
        assert_eq!(lines[0], "n,variant,seconds");
        assert_eq!(lines.len(), 4);
        lines[1..].iter().map(|l| l.rsplit_once(',').unwrap().0.to_string()).collect::<Vec<_>>()
    };
    let serial = rows("1");
    assert_eq!(serial, ["1000,one-fixed", "10000,one-fixed", "100000,one-fixed"]);
    assert_eq!(rows("3"), serial);
}

#[test]
fn render_produces_well_formed_svg() {
    let dir = TempDir::new().unwrap();
    let input = generate(&dir, "two-cluster", 40, 6);
    let (out, _) = solve(&input, &["--variant", "parallel", "--epsilon", "0.1"]);
    let result = dir.path().join("r.json");
    std::fs::write(&result, &out.stdout).unwrap();
    let svg_path = dir.path().join("pic.svg");
    let r = twoline(&[
        "render",
        "--input",
        path_str(&input),
        "--result",
        path_str(&result),
        "--output",
        path_str(&svg_path),
    ]);
    assert_eq!(code(&r), 0, "{}", String::from_utf8_lossy(&r.stderr));
    let text = std::fs::read_to_string(&svg_path).unwrap();
    let doc = roxmltree::Document::parse(&text).expect("well-formed XML");
    let root = doc.root_element();
    assert_eq!(root.tag_name().name(), "svg");
    assert_eq!(root.attribute("version"), Some("1.1"));
    assert_eq!(root.descendants().filter(|n| n.has_tag_name("circle")).count(), 40);
    assert_eq!(root.descendants().filter(|n| n.has_tag_name("polygon")).count(), 2);
}

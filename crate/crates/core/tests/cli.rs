use std::path::Path;
use std::process::{Command, Output};

fn ministokes(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ministokes"))
        .args(args)
        .current_dir(dir)
        .env("MINISTOKES_THREADS", "1")
        .output()
        .unwrap()
}

fn json(path: &Path) -> serde_json::Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn mesh_gen_writes_counts_header() {
    let dir = tempfile::tempdir().unwrap();
    let out = ministokes(&["mesh", "gen", "--n", "2", "--out", "m.txt"], dir.path());
    assert!(out.status.success());
    let text = std::fs::read_to_string(dir.path().join("m.txt")).unwrap();
    let header = text.lines().find(|l| !l.starts_with('#')).unwrap();
    assert_eq!(header.split_whitespace().collect::<Vec<_>>(), ["27", "48"]);
}

#[test]
fn mesh_gen_rejects_zero() {
    let dir = tempfile::tempdir().unwrap();
    let out = ministokes(&["mesh", "gen", "--n", "0", "--out", "m.txt"], dir.path());
    assert!(!out.status.success());
    assert!(!dir.path().join("m.txt").exists());
}

#[test]
fn mesh_quality_and_convert() {
    let dir = tempfile::tempdir().unwrap();
    assert!(ministokes(&["mesh", "gen", "--n", "3", "--out", "m.txt"], dir.path()).status.success());
    assert!(ministokes(&["mesh", "quality", "--in", "m.txt", "--out", "q.json"], dir.path()).status.success());
    let q = json(&dir.path().join("q.json"));
    for key in ["shape_ratio", "dihedral_deg"] {
        let (min, mean, max) = (
            q[key]["min"].as_f64().unwrap(),
            q[key]["mean"].as_f64().unwrap(),
            q[key]["max"].as_f64().unwrap(),
        );
        assert!(min <= mean && mean <= max, "{key}");
    }
    assert_eq!(q["num_tets"], 162);

    assert!(ministokes(&["mesh", "convert", "--in", "m.txt", "--out", "m.json"], dir.path()).status.success());
    assert!(ministokes(&["mesh", "convert", "--in", "m.json", "--out", "back.txt"], dir.path()).status.success());
    let a = std::fs::read(dir.path().join("m.txt")).unwrap();
    let b = std::fs::read(dir.path().join("back.txt")).unwrap();
    assert_eq!(a, b);
}

#[test]
fn solve_writes_solution_and_metrics() {
    let dir = tempfile::tempdir().unwrap();
    let out = ministokes(
        &["solve", "--problem", "1", "--n", "4", "--out-dir", "run", "--export-system"],
        dir.path(),
    );
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let run = dir.path().join("run");
    let m = json(&run.join("metrics.json"));
    assert_eq!(m["config"]["solver"]["rtol"], 1e-9);
    assert_eq!(m["result"]["solver"]["converged"], true);
    assert!(m["result"]["solver"]["relative_residual"].as_f64().unwrap() <= 1e-9);
    assert!(m["result"]["diagnostics"]["pressure_mean"].as_f64().unwrap() <= 1e-9);
    for key in [
        "u_minus_uh_l2",
        "u_minus_uh_h1",
        "p_minus_ph_l2",
        "ihu_minus_uhl_l2",
        "ihu_minus_uhl_h1",
        "u_minus_uhl_l2",
        "u_minus_uhl_h1",
        "div_uh_l2",
        "div_uhl_l2",
    ] {
        assert!(m["result"]["norms"][key].as_f64().unwrap() > 0.0, "{key}");
    }
    // 4*125 + 3*384 + 1 unknowns
    let text = std::fs::read_to_string(run.join("solution.txt")).unwrap();
    assert!(text.starts_with("# config: "));
    assert_eq!(text.lines().filter(|l| !l.starts_with('#')).count(), 4 * 125 + 3 * 384 + 1);
    assert!(run.join("system.coo").exists() && run.join("rhs.txt").exists());
}

#[test]
fn solve_reports_non_convergence() {
    let dir = tempfile::tempdir().unwrap();
    let out = ministokes(
        &["solve", "--problem", "2", "--n", "3", "--max-iter", "1", "--drop-tol", "0.5", "--out-dir", "."],
        dir.path(),
    );
    assert!(!out.status.success());
    let m = json(&dir.path().join("metrics.json"));
    assert_eq!(m["result"]["solver"]["converged"], false);
}

#[test]
fn solve_rejects_unknown_problem() {
    let dir = tempfile::tempdir().unwrap();
    let out = ministokes(&["solve", "--problem", "7", "--n", "2"], dir.path());
    assert!(!out.status.success());
    assert!(!dir.path().join("metrics.json").exists());
}

#[test]
fn study_csv_layout_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["study", "--problems", "1,5", "--n", "2,3,4", "--out", "a.csv"];
    assert!(ministokes(&args, dir.path()).status.success());
    let mut again = args;
    again[6] = "b.csv";
    assert!(ministokes(&again, dir.path()).status.success());
    let a = std::fs::read_to_string(dir.path().join("a.csv")).unwrap();
    let b = std::fs::read_to_string(dir.path().join("b.csv")).unwrap();
    assert_eq!(a, b);

    let rows: Vec<&str> = a.lines().filter(|l| !l.is_empty() && !l.starts_with('#')).collect();
    let cells = rows.iter().filter(|l| l.contains(",structured-n")).count();
    assert_eq!(cells, 6);
    let rate_rows = rows.iter().filter(|l| l.split(',').nth(1).is_some_and(|q| q.contains("minus"))).count();
    assert_eq!(rate_rows, 2 * 7);
    assert!(a.starts_with("# config: "));
    // 17 significant digits
    let h = rows[1].split(',').nth(2).unwrap();
    assert_eq!(h, "8.6602540378443860e-1");
}

#[test]
fn study_json_and_mesh_files() {
    let dir = tempfile::tempdir().unwrap();
    assert!(ministokes(&["mesh", "gen", "--n", "2", "--out", "c.txt"], dir.path()).status.success());
    assert!(ministokes(&["mesh", "gen", "--n", "3", "--out", "f.json"], dir.path()).status.success());
    let out = ministokes(
        &["study", "--problems", "4", "--mesh", "c.txt", "f.json", "--format", "json", "--out", "r.json"],
        dir.path(),
    );
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let r = json(&dir.path().join("r.json"));
    assert_eq!(r["config"]["meshes"].as_array().unwrap().len(), 2);
    assert_eq!(r["report"]["cells"].as_array().unwrap().len(), 2);
    assert_eq!(r["report"]["rates"][0]["rates"].as_array().unwrap().len(), 7);
}

#[test]
fn study_needs_two_meshes() {
    let dir = tempfile::tempdir().unwrap();
    let out = ministokes(&["study", "--n", "2", "--out", "x.csv"], dir.path());
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("at least two meshes"));
    assert!(!dir.path().join("x.csv").exists());
}

#[test]
fn boundary_samples_lid() {
    let dir = tempfile::tempdir().unwrap();
    let out = ministokes(
        &["boundary", "--problem", "4", "--face", "z-max", "--resolution", "3", "--out", "lid.csv"],
        dir.path(),
    );
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = std::fs::read_to_string(dir.path().join("lid.csv")).unwrap();
    assert_eq!(text.lines().count(), 1 + 9);
}

#[test]
fn rejects_bad_thread_count() {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_ministokes"))
        .args(["mesh", "gen", "--n", "1", "--out", "m.txt"])
        .current_dir(dir.path())
        .env("MINISTOKES_THREADS", "many")
        .output()
        .unwrap();
    assert!(!out.status.success());
}

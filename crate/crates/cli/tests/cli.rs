//! End-to-end checks of the command-line contract: exit codes, artifact
//! files, determinism.

use std::path::PathBuf;
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_surfd10"))
}

fn tmpdir(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("surfd10-cli-{}-{}", name, std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn usage_errors_exit_64() {
    let out = bin().arg("construct").arg("Q").output().unwrap();
    assert_eq!(out.status.code(), Some(64));
    let out = bin().output().unwrap();
    assert_eq!(out.status.code(), Some(64));
    let out = bin().args(["frobnicate"]).output().unwrap();
    assert_eq!(out.status.code(), Some(64));
}

#[test]
fn numerology_exit_codes_and_output() {
    let out = bin()
        .args(["numerology", "--pi", "9", "--chi", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("= 12"), "{}", text);
    assert!(text.contains("= 3"), "{}", text);
    let out = bin().args(["numerology", "--table"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout).lines().count(), 9);
    let out = bin().args(["numerology", "--pi", "7"]).output().unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn parse_errors_exit_65() {
    let dir = tmpdir("parse");
    let bad = dir.join("garbage.txt");
    std::fs::write(&bad, "this is not an ideal\n").unwrap();
    let out = bin()
        .args(["certify", bad.to_str().unwrap(), "--family", "A"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(65));
    let out = bin()
        .args([
            "certify",
            dir.join("missing.ideal").to_str().unwrap(),
            "--family",
            "A",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(65));
}

#[test]
fn construct_certify_link_roundtrip() {
    // family G is the fastest; exercise the whole artifact contract on it
    let dir = tmpdir("roundtrip");
    let out = bin()
        .args([
            "construct",
            "G",
            "--seed",
            "5",
            "--out",
            dir.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    for suffix in ["G.ideal", "G.report.json", "G.betti.txt", "G.Z.ideal"] {
        assert!(dir.join(suffix).exists(), "missing {}", suffix);
    }
    let report = std::fs::read_to_string(dir.join("G.report.json")).unwrap();
    assert!(report.contains("\"pass\": true"));
    assert!(report.contains("\"betti_block\": \"betti { 0 4 3; 0 5 3; 1 6 9; 2 7 5; 3 8 1; }\""));

    // certifying the artifact against G passes (exit 0)
    let ideal_path = dir.join("G.ideal");
    let out = bin()
        .args([
            "certify",
            ideal_path.to_str().unwrap(),
            "--family",
            "G",
            "--out",
            dir.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );

    // negative control: certifying against H fails with a Betti diff
    let out = bin()
        .args([
            "certify",
            ideal_path.to_str().unwrap(),
            "--family",
            "H",
            "--out",
            dir.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("[FAIL] betti table"), "{}", text);

    // link the surface (4,4): residual of degree 6, genus 2
    let out = bin()
        .args([
            "link",
            ideal_path.to_str().unwrap(),
            "4",
            "4",
            "--seed",
            "9",
            "--out",
            dir.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("degree 6, sectional genus 2"), "{}", text);
    assert!(dir.join("G.residual_4_4.ideal").exists());

    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn link_boundary_and_failure_exit_codes() {
    let dir = tmpdir("link");
    // a plane linked (1,1) is the boundary sentinel: exit 0, empty residual
    let plane = dir.join("plane.ideal");
    std::fs::write(&plane, "ring p=31991 vars=x0..x4 order=grevlex\nx0\nx1\n").unwrap();
    let out = bin()
        .args([
            "link",
            plane.to_str().unwrap(),
            "1",
            "1",
            "--out",
            dir.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("empty residual"));

    // no regular sequence of quartics through a hyperplane's square:
    // (x0^2) has a one-dimensional quartic system... it does not: x0^2*R_2.
    // Use a scheme whose quartics are all multiples of one quadric so that
    // every pair has a common factor: the double hyperplane V(x0^2).
    let dbl = dir.join("double.ideal");
    std::fs::write(&dbl, "ring p=31991 vars=x0..x4 order=grevlex\nx0^2\n").unwrap();
    let out = bin()
        .args([
            "link",
            dbl.to_str().unwrap(),
            "4",
            "4",
            "--out",
            dir.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(4));
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn construct_is_byte_deterministic() {
    let d1 = tmpdir("det1");
    let d2 = tmpdir("det2");
    for d in [&d1, &d2] {
        let out = bin()
            .args([
                "construct",
                "G",
                "--prime",
                "101",
                "--seed",
                "7",
                "--out",
                d.to_str().unwrap(),
            ])
            .output()
            .unwrap();
        assert_eq!(
            out.status.code(),
            Some(0),
            "{}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
    for name in ["G.ideal", "G.report.json", "G.betti.txt"] {
        let a = std::fs::read(d1.join(name)).unwrap();
        let b = std::fs::read(d2.join(name)).unwrap();
        assert_eq!(a, b, "{} differs between identical runs", name);
    }
    let _ = std::fs::remove_dir_all(&d1);
    let _ = std::fs::remove_dir_all(&d2);
}

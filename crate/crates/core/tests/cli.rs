use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;
use weyl_clifford::matrep::{conjugate_generators, weyl_pair, ComplexMatrix, GeneratorSet};
use weyl_clifford::random::{seeded, unitary};

fn cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_weylclifford"))
        .args(args)
        .env_remove("WEYLCLIFFORD_TOL")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let out = cli(args);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{args:?}: {e}\n{}", String::from_utf8_lossy(&out.stderr))
    });
    (out.status.code().unwrap(), v)
}

fn matrix(v: &Value) -> ComplexMatrix {
    serde_json::from_value(v.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("weylclifford-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn gen_two_generators_is_the_weyl_pair() {
    let (code, v) = json(&["gen", "--n", "2", "--l", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["report"]["passed"], true);
    let (u, _) = weyl_pair(3).unwrap();
    let mats = v["generators"]["matrices"].as_array().unwrap();
    assert_eq!(mats.len(), 2);
    assert!(matrix(&mats[0]).distance(&u) < 1e-15);
    assert_eq!(v["dim"], 3);
}

#[test]
fn gen_single_clifford_generator_is_sigma_x() {
    let (code, v) = json(&["gen", "--n", "1", "--l", "2"]);
    assert_eq!(code, 0);
    let m = matrix(&v["generators"]["matrices"][0]);
    let sigma_x = ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]]);
    assert_eq!(m, sigma_x);
    let (_, diag) = json(&["gen", "--n", "1", "--l", "2", "--odd", "diagonal"]);
    assert!(matrix(&diag["generators"]["matrices"][0]).is_diagonal(0.0));
}

#[test]
fn gen_taw_nine_dimensional() {
    let (code, v) = json(&["gen", "--n", "4", "--l", "3", "--variant", "taw"]);
    assert_eq!(code, 0);
    assert_eq!(v["dim"], 9);
    assert_eq!(v["generators"]["labeling"], "taw");
    assert_eq!(v["generators"]["matrices"].as_array().unwrap().len(), 4);
}

#[test]
fn gen_pauli_and_usage_errors() {
    let (code, v) = json(&["gen", "--n", "3", "--l", "2", "--variant", "pauli"]);
    assert_eq!(code, 0);
    assert_eq!(v["generators"]["labeling"], "pauli-clifford");
    assert_eq!(cli(&["gen", "--n", "3", "--l", "3", "--variant", "pauli"]).status.code(), Some(2));
    assert_eq!(cli(&["gen", "--n", "2", "--l", "1"]).status.code(), Some(2));
    assert_eq!(cli(&["gen", "--l", "3"]).status.code(), Some(2));
}

#[test]
fn tiny_tolerance_fails_verification() {
    let out = cli(&["gen", "--n", "4", "--l", "5", "--tol", "1e-30"]);
    assert_eq!(out.status.code(), Some(1));
    let out = Command::new(env!("CARGO_BIN_EXE_weylclifford"))
        .args(["gen", "--n", "4", "--l", "5"])
        .env("WEYLCLIFFORD_TOL", "1e-30")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let out = Command::new(env!("CARGO_BIN_EXE_weylclifford"))
        .args(["gen", "--n", "4", "--l", "5", "--tol", "1e-8"])
        .env("WEYLCLIFFORD_TOL", "1e-30")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn verify_lame_examples() {
    let (code, v) = json(&["verify-lame", "--n", "3", "--l", "2", "--trials", "10"]);
    assert_eq!(code, 0);
    assert_eq!(v["symbolic"]["passed"], 10);
    assert_eq!(v["passed"], true);
    let (code, _) = json(&["verify-lame", "--n", "1", "--l", "7"]);
    assert_eq!(code, 0);
    let (code, v) = json(&["verify-lame", "--n", "2", "--l", "5", "--mode", "weak"]);
    assert_eq!(code, 0);
    assert_eq!(v["mode"], "weak");
    assert_eq!(v["symbolic"]["max_residual_terms"], 0);
    assert_eq!(cli(&["verify-lame", "--n", "2", "--l", "3", "--trials", "0"]).status.code(), Some(2));
}

#[test]
fn qbinom_examples() {
    let (code, v) = json(&["qbinom", "4", "2", "--unit"]);
    assert_eq!(code, 0);
    assert_eq!(v["display"], "6");
    let (_, v) = json(&["qbinom", "5", "2", "--root", "5"]);
    assert_eq!(v["display"], "0");
    let (_, v) = json(&["qbinom", "2", "1", "--root", "4"]);
    let approx = v["approx"].as_array().unwrap();
    assert!((approx[0].as_f64().unwrap() - 1.0).abs() < 1e-12);
    assert!((approx[1].as_f64().unwrap() - 1.0).abs() < 1e-12);
    let text = String::from_utf8(cli(&["qbinom", "2", "1", "--root", "4", "--format", "text"]).stdout).unwrap();
    assert!(text.contains("1+1i"), "{text}");
    assert_eq!(cli(&["qbinom", "3", "4", "--unit"]).status.code(), Some(2));
    assert_eq!(cli(&["qbinom", "3", "1", "--unit", "--root", "3"]).status.code(), Some(2));
}

#[test]
fn forms_and_fourier() {
    let (code, v) = json(&["forms", "--n", "6"]);
    assert_eq!(code, 0);
    assert_eq!(v["passed"], true);
    assert_eq!(v["l"]["entries"][4], serde_json::json!(["0", "1", "0", "1", "1", "0"]));
    assert_eq!(v["l_prime"]["entries"][4], serde_json::json!(["-1", "1", "-1", "1", "1", "0"]));
    assert_eq!(cli(&["forms", "--n", "3"]).status.code(), Some(2));

    let (code, v) = json(&["fourier", "--l", "2"]);
    assert_eq!(code, 0);
    let f = matrix(&v["matrix"]);
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let hadamard = ComplexMatrix::from_real_rows(&[&[h, h], &[h, -h]]);
    assert!(f.distance(&hadamard) < 1e-15);
}

#[test]
fn equiv_recovers_a_conjugating_matrix() {
    let (u, v) = weyl_pair(4).unwrap();
    let q = unitary(&mut seeded(12), 4);
    let pair = GeneratorSet::custom(4, vec![u, v]).unwrap();
    let conj = conjugate_generators(&pair, &q).unwrap();
    let path = scratch("conjugated.json");
    std::fs::write(&path, serde_json::to_string(&conj).unwrap()).unwrap();
    let (code, out) = json(&["equiv", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let m = matrix(&out["m"]);
    // m undoes q up to an overall scalar.
    let prod = &m * &q;
    let c = prod.get(0, 0);
    assert!(prod.distance(&ComplexMatrix::identity(4).scale(c)) < 1e-8);
}

#[test]
fn equiv_input_errors() {
    let missing = scratch("missing.json");
    assert_eq!(cli(&["equiv", missing.to_str().unwrap()]).status.code(), Some(1));
    let garbage = scratch("garbage.json");
    std::fs::write(&garbage, "{not json").unwrap();
    assert_eq!(cli(&["equiv", garbage.to_str().unwrap()]).status.code(), Some(1));
    let single = scratch("single.json");
    let set = GeneratorSet::custom(3, vec![ComplexMatrix::identity(3)]).unwrap();
    std::fs::write(&single, serde_json::to_string(&set).unwrap()).unwrap();
    assert_eq!(cli(&["equiv", single.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn out_flag_writes_the_same_bytes() {
    let path = scratch("forms.json");
    let out = cli(&["forms", "--n", "4", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let direct = cli(&["forms", "--n", "4"]).stdout;
    assert_eq!(std::fs::read(&path).unwrap(), direct);
}

#[test]
fn seeds_determine_output() {
    let a = cli(&["verify-lame", "--n", "3", "--l", "3", "--seed", "9"]).stdout;
    let b = cli(&["verify-lame", "--n", "3", "--l", "3", "--seed", "9"]).stdout;
    assert_eq!(a, b);
    let text1 = cli(&["verify-lame", "--n", "2", "--l", "4", "--seed", "9", "--format", "text"]).stdout;
    let text2 = cli(&["verify-lame", "--n", "2", "--l", "4", "--seed", "9", "--format", "text"]).stdout;
    assert_eq!(text1, text2);
}

use std::process::Command;

fn resonance() -> Command {
    Command::new(env!("CARGO_BIN_EXE_resonance"))
}

fn code(cmd: &mut Command) -> i32 {
    cmd.output().unwrap().status.code().unwrap()
}

#[test]
fn writes_outputs_and_verifies_them() {
    let dir = tempfile::tempdir().unwrap();
    let sols = dir.path().join("out/sols.jsonl");
    let stats = dir.path().join("stats.csv");
    let growth = dir.path().join("growth.csv");
    let dec = dir.path().join("dec.csv");
    let status = resonance()
        .args(["--wave", "gravity4", "--domain", "60", "--verify-oracle"])
        .arg("--solutions").arg(&sols)
        .arg("--stats").arg(&stats)
        .arg("--growth").arg(&growth)
        .arg("--dec-distribution").arg(&dec)
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(2), "D = 60 is above the oracle ceiling");

    let out = resonance()
        .args(["--wave", "gravity4", "--domain", "40", "--verify-oracle", "--threads", "2"])
        .arg("--solutions").arg(&sols)
        .arg("--stats").arg(&stats)
        .arg("--growth").arg(&growth)
        .arg("--dec-distribution").arg(&dec)
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(String::from_utf8_lossy(&out.stderr).contains("oracle agrees"));
    let stats_text = std::fs::read_to_string(&stats).unwrap();
    assert!(stats_text.starts_with("metric,value\n"));
    assert!(std::fs::read_to_string(&growth).unwrap().starts_with("domain,total,asymmetric"));
    assert!(std::fs::read_to_string(&dec).unwrap().starts_with("dec,classes\n"));

    assert_eq!(code(resonance().arg("verify").arg(&sols).args(["--domain", "40"])), 0);
    assert_eq!(code(resonance().arg("verify").arg(&sols).args(["--domain", "30"])), 3);

    let text = std::fs::read_to_string(&sols).unwrap();
    let tampered = text.replacen("\"q\":1,", "\"q\":3,", 1);
    assert_ne!(tampered, text);
    std::fs::write(&sols, tampered).unwrap();
    assert_eq!(code(resonance().arg("verify").arg(&sols).args(["--domain", "40"])), 3);
}

#[test]
fn parallel_output_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let mut files = Vec::new();
    for threads in ["1", "3"] {
        let path = dir.path().join(format!("t{threads}.jsonl"));
        let status = resonance()
            .args(["--wave", "planetary3", "--domain", "150", "--threads", threads])
            .arg("--solutions").arg(&path)
            .status()
            .unwrap();
        assert!(status.success());
        files.push(std::fs::read(path).unwrap());
    }
    assert!(!files[0].is_empty());
    assert_eq!(files[0], files[1]);
}

#[test]
fn class_cache_roundtrip_and_mismatch() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("classes.txt");
    let run = |d: &str| code(resonance().args(["--wave", "gravity4", "--domain", d]).arg("--classes-cache").arg(&cache));
    assert_eq!(run("30"), 0);
    assert!(std::fs::read_to_string(&cache).unwrap().starts_with("# resonance classes kind=gravity4 domain=30"));
    assert_eq!(run("30"), 0);
    assert_eq!(run("31"), 2);
}

#[test]
fn configuration_errors() {
    assert_eq!(code(resonance().args(["--domain", "10"])), 2);
    assert_eq!(code(resonance().args(["--wave", "gravity4", "--domain", "0"])), 2);
    assert_eq!(code(resonance().args(["--wave", "gravity4", "--domain", "10", "--threads", "0"])), 2);
    assert_eq!(code(resonance().args(["--wave", "planetary3", "--domain", "10", "--emit-case2"])), 2);
    assert_eq!(code(resonance().args(["--wave", "gravity4", "--domain", "100000"])), 2);
    // clap rejects unknown values with its own usage error code
    assert_eq!(code(resonance().args(["--wave", "capillary", "--domain", "10"])), 2);
}

#[test]
fn case2_pairings_written() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pairs.jsonl");
    let out = resonance()
        .args(["--wave", "gravity4", "--domain", "12", "--emit-case2", "--verify-oracle"])
        .arg("--pairings").arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = std::fs::read_to_string(path).unwrap();
    assert!(text.lines().count() > 0);
    assert!(text.lines().all(|l| l.starts_with("{\"classes\":[")));
}

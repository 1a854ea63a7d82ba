use std::path::Path;
use std::process::{Command, Output};

use czcss::cli::{verify_file, CheckAs};
use czcss::constructions::{czcss as build_family, Permutation};
use czcss::io::SequenceFile;
use czcss::verify::check_czcss;

fn czcss_bin(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_czcss"))
        .args(args)
        .current_dir(dir)
        .env_remove("CZCSS_OUTPUT_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn generate_export_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let o = czcss_bin(
        &["generate", "--kind", "czcss", "--q", "4", "--m", "5", "--n", "2", "--pi", "1,0,2", "--c", "3", "--out", "fam.json"],
        dir.path(),
    );
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));

    let o = czcss_bin(&["export", "fam.json", "--format", "json"], dir.path());
    assert!(o.status.success());
    let exported = SequenceFile::from_json(&stdout(&o)).unwrap();
    let on_disk = SequenceFile::from_json(&std::fs::read_to_string(dir.path().join("fam.json")).unwrap()).unwrap();
    assert_eq!(exported, on_disk);

    let family = exported.to_family().unwrap();
    let direct = build_family(4, 5, 2, &"1,0,2".parse::<Permutation>().unwrap(), 3).unwrap();
    assert_eq!(family, direct);

    let in_memory = check_czcss(&direct, 5).unwrap();
    let from_file = verify_file(&exported, None, CheckAs::Auto).unwrap();
    assert_eq!(from_file.len(), 1);
    assert_eq!(from_file[0].1, in_memory);

    let o = czcss_bin(&["verify", "fam.json", "--format", "json"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(parsed[0]["report"], serde_json::to_value(&in_memory).unwrap());
}

#[test]
fn verify_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let o = czcss_bin(&["generate", "--kind", "czcss", "--q", "4", "--m", "5", "--pi", "1,0,2", "--out", "f.json"], dir.path());
    assert!(o.status.success());
    assert_eq!(czcss_bin(&["verify", "f.json"], dir.path()).status.code(), Some(0));
    // the claimed width is 5; 6 reaches a nonzero sum
    let o = czcss_bin(&["verify", "f.json", "--z", "6"], dir.path());
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("overall: FAIL"));
    assert_eq!(czcss_bin(&["verify", "f.json", "--z", "0"], dir.path()).status.code(), Some(2));
    assert_eq!(czcss_bin(&["verify", "missing.json"], dir.path()).status.code(), Some(2));
    assert_eq!(czcss_bin(&["verify", "f.json", "--z", "19"], dir.path()).status.code(), Some(2));

    std::fs::write(dir.path().join("bad.json"), "{\"format\": \"nope\"}").unwrap();
    assert_eq!(czcss_bin(&["verify", "bad.json"], dir.path()).status.code(), Some(2));
}

#[test]
fn corrupted_file_fails_verification() {
    let dir = tempfile::tempdir().unwrap();
    let o = czcss_bin(&["generate", "--kind", "czcss", "--q", "4", "--m", "5", "--pi", "1,0,2"], dir.path());
    let mut file = SequenceFile::from_json(&stdout(&o)).unwrap();
    let p = &mut file.sets[1].sequences[0][4];
    *p = (*p + 2) % 4;
    std::fs::write(dir.path().join("x.json"), file.to_json()).unwrap();
    let o = czcss_bin(&["verify", "x.json"], dir.path());
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("violation at tau="));
}

#[test]
fn golay_and_czcp_files() {
    let dir = tempfile::tempdir().unwrap();
    let o = czcss_bin(
        &["generate", "--kind", "gcp", "--q", "4", "--m", "4", "--pi", "2,0,3,1", "--coeffs", "1,2,3,0", "--c-prime", "2", "--out", "g.json"],
        dir.path(),
    );
    assert!(o.status.success());
    let o = czcss_bin(&["verify", "g.json"], dir.path());
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = stdout(&o);
    assert_eq!(text.matches("gcp: true").count(), 2);
    assert!(text.contains("MATE_ALL"));

    for kind in ["czcp", "czcp-mate"] {
        let o = czcss_bin(&["generate", "--kind", kind, "--q", "2", "--m", "6", "--pi", "3,1,0,2", "--out", "p.json"], dir.path());
        assert!(o.status.success());
        let o = czcss_bin(&["verify", "p.json"], dir.path());
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
        assert!(stdout(&o).contains("czcz_ratio"));
    }
}

#[test]
fn correlation_table_export() {
    let dir = tempfile::tempdir().unwrap();
    czcss_bin(&["generate", "--kind", "czcp", "--q", "4", "--m", "5", "--pi", "1,0,2", "--out", "p.json"], dir.path());
    let o = czcss_bin(&["export", "p.json", "--format", "csv", "--a", "0:0", "--b", "0:0"], dir.path());
    assert!(o.status.success());
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("tau,w0,w1,w2,w3,magnitude,is_zero"));
    let zero_shift = text.lines().find(|l| l.starts_with("0,")).unwrap();
    assert!(zero_shift.starts_with("0,18,0,0,0,18.0"), "{zero_shift}");
    assert_eq!(text.lines().count(), 1 + 35);
    let o = czcss_bin(&["export", "p.json", "--a", "0:0", "--b", "4:0"], dir.path());
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn output_dir_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let out = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_czcss"))
        .args(["generate", "--kind", "czcp", "--q", "2", "--m", "4", "--out", "p.json"])
        .current_dir(dir.path())
        .env("CZCSS_OUTPUT_DIR", out.path())
        .output()
        .unwrap();
    assert!(o.status.success());
    assert!(out.path().join("p.json").exists());
    assert!(!dir.path().join("p.json").exists());
}

#[test]
fn sweep_output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["sweep", "--q", "2,4", "--m", "4,5", "--n", "1,2", "--draws", "2", "--seed", "11"];
    let a = czcss_bin(&args, dir.path());
    let mut serial = args.to_vec();
    serial.extend(["--jobs", "1"]);
    let b = czcss_bin(&serial, dir.path());
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert_eq!(text.lines().count(), 1 + 2 * (2 + 6) * 2 * 2);
    assert!(text.lines().skip(1).all(|l| l.ends_with(",true")));
    let other = czcss_bin(&["sweep", "--q", "2,4", "--m", "4,5", "--n", "1,2", "--draws", "2", "--seed", "12"], dir.path());
    assert_ne!(a.stdout, other.stdout);

    let t = czcss_bin(&["sweep", "--q", "2", "--m", "4", "--n", "1", "--timing"], dir.path());
    assert!(stdout(&t).lines().next().unwrap().ends_with(",pass,wall_ms"));
    assert_eq!(czcss_bin(&["sweep", "--m", "11"], dir.path()).status.code(), Some(2));
}

#[test]
fn reproduce_commands() {
    let dir = tempfile::tempdir().unwrap();
    let o = czcss_bin(&["reproduce", "2"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("shape (K,M,N,Z) = (8, 8, 18, 5): match"));
    let o = czcss_bin(&["reproduce", "1"], dir.path());
    let text = stdout(&o);
    assert!(text.contains("(a,b) CZCP at Z=5: pass  max_z=5"));
    // the listed magnitudes are the lag-reversed table
    assert!(text.contains("MISMATCHES"));
    assert_eq!(o.status.code(), Some(1));
}

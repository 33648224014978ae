//! Golden-file and behavioral tests for the command-line interface.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_abchase"))
}

fn corpus(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/corpus")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn check_output(file: &str) -> Output {
    run(&["check", corpus(file).to_str().unwrap()])
}

#[test]
fn reports_are_deterministic_across_runs() {
    let a = check_output("02_ses_z2_z4_z2.json");
    let b = check_output("02_ses_z2_z4_z2.json");
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout, "text report must be byte-identical");

    let path = corpus("02_ses_z2_z4_z2.json");
    let s1 = run(&["check", path.to_str().unwrap(), "--format", "structured"]);
    let s2 = run(&["check", path.to_str().unwrap(), "--format", "structured"]);
    assert_eq!(s1.stdout, s2.stdout, "structured report must be byte-identical");
}

#[test]
fn structured_format_matches_golden_and_is_json() {
    let path = corpus("02_ses_z2_z4_z2.json");
    let out = run(&["check", path.to_str().unwrap(), "--format", "structured"]);
    assert_eq!(out.status.code(), Some(0));
    let expected = std::fs::read(corpus("02_ses_z2_z4_z2.structured.expected.json")).unwrap();
    assert_eq!(out.stdout, expected);
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["overall"], "pass");
    assert_eq!(value["assertions"][0]["kind"], "short_exact(f, g)");
}

#[test]
fn lemma_short_five_runs_trace_and_mode_overrides() {
    let path = corpus("08_short_five_worked.json");
    let trace = run(&["lemma", "short-five", path.to_str().unwrap(), "--trace"]);
    assert_eq!(trace.status.code(), Some(0));
    let expected = std::fs::read(corpus("08_short_five_worked.lemma_trace.expected.txt")).unwrap();
    assert_eq!(trace.stdout, expected);

    // alpha is monic but not iso, so the iso override fails the hypotheses.
    let iso = run(&["lemma", "short-five", path.to_str().unwrap(), "--mode", "iso"]);
    assert_eq!(iso.status.code(), Some(1));
    let expected = std::fs::read(corpus("08_short_five_worked.lemma_iso.expected.txt")).unwrap();
    assert_eq!(iso.stdout, expected);
}

#[test]
fn lemma_nine_direction_override() {
    let path = corpus("11_nine_grid.json");
    let out = run(&["lemma", "nine", path.to_str().unwrap(), "--direction", "top_from_bottom"]);
    assert_eq!(out.status.code(), Some(0));
    let expected = std::fs::read(corpus("11_nine_grid.lemma_top.expected.txt")).unwrap();
    assert_eq!(out.stdout, expected);
}

#[test]
fn lemma_subcommands_require_matching_assertions() {
    let path = corpus("02_ses_z2_z4_z2.json");
    let out = run(&["lemma", "short-five", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("no short_five assertion"), "{stderr}");
}

#[test]
fn parallel_jobs_match_sequential_output() {
    let path = corpus("15_exact_at.json");
    let seq = run(&["check", path.to_str().unwrap()]);
    let par = run(&["check", path.to_str().unwrap(), "--jobs", "4"]);
    assert_eq!(seq.status.code(), par.status.code());
    assert_eq!(seq.stdout, par.stdout);
}

#[test]
fn input_errors_name_their_cause() {
    let cases = [
        ("03_bad_hom.json", "1 * 2 = 2 is not 0 mod 4"),
        ("04_undeclared_ref.json", "line 5"),
        ("18_cyclic.json", "cyclic"),
        ("19_vecfp_bad_prime.json", "not prime"),
        ("20_noncanonical_object.json", "canonical form"),
    ];
    for (file, needle) in cases {
        let out = check_output(file);
        assert_eq!(out.status.code(), Some(2), "{file}");
        let stderr = String::from_utf8_lossy(&out.stderr);
        assert!(stderr.contains(needle), "{file}: stderr was {stderr}");
    }
}

#[test]
fn gen_is_deterministic_and_roundtrips_through_check() {
    for scheme in ["split_split", "epi_kernel_top_split_bottom", "conjugated"] {
        for mode in ["monic", "epic", "iso"] {
            let a = run(&["gen", "--scheme", scheme, "--seed", "11", "--mode", mode]);
            let b = run(&["gen", "--scheme", scheme, "--seed", "11", "--mode", mode]);
            assert_eq!(a.status.code(), Some(0), "{scheme}/{mode}");
            assert_eq!(a.stdout, b.stdout, "gen must be deterministic");

            let dir = tempfile::tempdir().unwrap();
            let file = dir.path().join("instance.json");
            std::fs::write(&file, &a.stdout).unwrap();
            let checked = run(&["check", file.to_str().unwrap()]);
            assert_eq!(
                checked.status.code(),
                Some(0),
                "{scheme}/{mode}: generated instance must verify: {}",
                String::from_utf8_lossy(&checked.stdout)
            );
        }
    }
}

#[test]
fn gen_count_writes_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&[
        "gen",
        "--scheme",
        "split_split",
        "--seed",
        "3",
        "--count",
        "3",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let mut names: Vec<String> = std::fs::read_dir(dir.path())
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    names.sort();
    assert_eq!(names.len(), 3);
    assert!(names[0].starts_with("ladder_split_split_3_000"));

    // count > 1 without --out is an input error.
    let bad = run(&["gen", "--scheme", "split_split", "--seed", "3", "--count", "2"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn snf_command_prints_decomposition() {
    let out = run(&["snf", "--matrix", "2,4;6,8"]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("diagonal: [2, 4]"), "{stdout}");

    let structured = run(&["snf", "--matrix", "2,4;6,8", "--format", "structured"]);
    let value: serde_json::Value = serde_json::from_slice(&structured.stdout).unwrap();
    assert_eq!(value["diagonal"][0], "2");
    assert_eq!(value["diagonal"][1], "4");

    let bad = run(&["snf", "--matrix", "2,x"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn api_and_cli_agree_on_the_worked_ladder() {
    use abchase::abcat::AbelianCategory;
    use abchase::diagram::{verify_short_five, Mode, SesLadder};
    use abchase::fgab::{FgAb, FgGroup, GroupHom};

    let fg = |v: &[i64]| FgGroup::from_invariant_factors(v).unwrap();
    let ladder = SesLadder {
        f: GroupHom::from_rows(fg(&[2]), fg(&[4]), &[vec![2]]).unwrap(),
        g: GroupHom::from_rows(fg(&[4]), fg(&[2]), &[vec![1]]).unwrap(),
        f_prime: GroupHom::from_rows(fg(&[4]), fg(&[2, 4]), &[vec![0], vec![1]]).unwrap(),
        g_prime: GroupHom::from_rows(fg(&[2, 4]), fg(&[2]), &[vec![1, 0]]).unwrap(),
        alpha: GroupHom::from_rows(fg(&[2]), fg(&[4]), &[vec![2]]).unwrap(),
        beta: GroupHom::from_rows(fg(&[4]), fg(&[2, 4]), &[vec![1], vec![1]]).unwrap(),
        gamma: FgAb.identity(&fg(&[2])),
    };
    let api = verify_short_five(&FgAb, &ladder, Mode::Monic).unwrap();
    let cli = check_output("08_short_five_worked.json");
    assert_eq!(api.passed(), cli.status.code() == Some(0));
}

#[test]
fn library_and_binary_agree_on_the_full_corpus() {
    // The programmatic path (parse + run) must reach the same verdict and
    // canonical text as the binary for every corpus file.
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/corpus");
    let mut names: Vec<PathBuf> = std::fs::read_dir(&dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "json") && !p.to_string_lossy().contains("expected"))
        .collect();
    names.sort();
    assert!(names.len() >= 15);
    for path in names {
        let text = std::fs::read_to_string(&path).unwrap();
        let api_outcome = match abchase_cli::parse::parse_diagram_file(&text) {
            Err(_) => 2,
            Ok(df) => match abchase_cli::run::run_file(&df, &text, 1) {
                Err(_) => 2,
                Ok(doc) => {
                    if doc.overall == "pass" {
                        0
                    } else {
                        1
                    }
                }
            },
        };
        let out = run(&["check", path.to_str().unwrap()]);
        assert_eq!(
            out.status.code(),
            Some(api_outcome),
            "{}: library verdict and binary exit disagree",
            path.display()
        );
        if api_outcome != 2 {
            let df = abchase_cli::parse::parse_diagram_file(&text).unwrap();
            let doc = abchase_cli::run::run_file(&df, &text, 1).unwrap();
            let rendered = abchase_cli::render::render_text(&doc);
            assert_eq!(
                rendered.into_bytes(),
                out.stdout,
                "{}: rendered report differs",
                path.display()
            );
        }
    }
}

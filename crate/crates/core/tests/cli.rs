use rowmotion::cli::run;
use serde_json::Value;

fn call(args: &str) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("rowmotion").chain(args.split_whitespace());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &str) -> Value {
    let (code, out, err) = call(args);
    assert_eq!(code, 0, "{args}: {err}");
    serde_json::from_str(&out).unwrap()
}

fn size_counts(v: &Value) -> Vec<(u64, u64)> {
    let mut c: Vec<(u64, u64)> =
        v["size_counts"].as_array().unwrap().iter().map(|p| (p[0].as_u64().unwrap(), p[1].as_u64().unwrap())).collect();
    c.sort_unstable();
    c
}

#[test]
fn orbit_tables() {
    let v = json("orbits --family asm:4 --action spro");
    assert_eq!(v["schema"], 1);
    assert_eq!(v["order"], 10);
    assert_eq!(size_counts(&v), vec![(2, 1), (5, 2), (10, 3)]);
    let v = json("orbits --family tsscpp:5 --action row");
    assert_eq!(v["order"], 78);
    assert_eq!(size_counts(&v), vec![(13, 28), (26, 1), (39, 1)]);
    let v = json("orbits --family product:1,1 --action row");
    assert_eq!(v["orbits"].as_array().unwrap().len(), 1);
    assert_eq!(v["orbits"][0]["size"], 2);
}

#[test]
fn orders() {
    assert_eq!(json("order --family product:2,3,4 --action row")["order"], 8);
    assert_eq!(json("order --family root:A,3 --action row")["order"], 8);
    assert_eq!(json("order --family asm:6 --action gyration")["order"], 2520);
    assert_eq!(json("order --family product:2,3,4 --action psi")["order"], 8);
    assert_eq!(json("order --family product:3,4 --action rotate")["order"], 7);
    assert_eq!(json("order --family interior:3,3,0 --action syt-pro")["order"], 6);
}

#[test]
fn csp_reports() {
    let v = json("csp --family product:2,3,4 --action row --poly macmahon");
    assert_eq!(v["holds"], true);
    assert_eq!(v["group_order"], 8);
    let v = json("csp --family product:3,3,3 --action row --poly macmahon");
    assert_eq!(v["holds"], false);
    assert_eq!(v["report"]["first_mismatch"], 0);
    assert_eq!(json("csp --family halfsquare:4 --action row --poly halfsquare")["holds"], true);
    assert_eq!(json("csp --family root:D,4 --action row --poly catalan")["holds"], true);
    assert_eq!(json("csp --family interior:4,4,0 --action syt-pro --poly hook")["holds"], true);
    assert_eq!(json("csp --family asm:5 --action spro --poly asm")["holds"], true);
    assert_eq!(call("csp --family product:2,3 --action row --poly catalan").0, 2);
}

#[test]
fn witnesses() {
    let (code, out, _) = call("witness --family product:2,2 --action row --kind word --format tsv");
    assert_eq!(code, 0);
    let words: Vec<&str> = out.lines().skip(1).map(|l| l.split('\t').nth(1).unwrap()).collect();
    assert_eq!(words.len(), 6);
    let classes = |w: &str| (0..w.len()).map(|k| format!("{}{}", &w[k..], &w[..k])).min().unwrap();
    let mut reps: Vec<String> = words.iter().map(|w| classes(w)).collect();
    reps.sort();
    reps.dedup();
    assert_eq!(reps, vec!["0011", "0101"]);

    let (code, out, _) = call("witness --family asm:3 --kind height --format tsv");
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 8);

    let v = json("witness --family product:2,3,4 --kind ncp");
    assert_eq!(v["equivariant"], true);
    for p in v["pairs"].as_array().unwrap() {
        assert_eq!(p["witness"].as_str().unwrap().split('|').count(), 4);
    }
    for args in [
        "--family root:A,4 --kind matching",
        "--family root:C,3 --kind bmatching",
        "--family product:2,3,3 --kind bracket",
        "--family product:3,2,2 --kind bpm",
        "--family asm:4 --kind asm",
        "--family interior:4,3,1 --kind syt",
        "--family halfsquare:5 --kind word --action pro",
    ] {
        let v = json(&format!("witness {args}"));
        assert_eq!(v["round_trip"], true, "{args}");
        assert_ne!(v["equivariant"], false, "{args}");
    }
}

#[test]
fn trajectories() {
    let v = json("trajectory --family product:2,3,4 --action pro");
    assert_eq!((v["period"].as_u64(), v["full_at"].as_u64()), (Some(8), Some(3)));
    let v = json("trajectory --family asm:3 --action spro");
    assert_eq!(v["period"], 7);
    let v = json("trajectory --family tsscpp:4 --action row");
    assert_eq!(v["period"], 10);
    let v = json("trajectory --family tsscpp:4 --action row-inverse");
    assert_eq!(v["full_at"], 1);
}

#[test]
fn exit_codes() {
    assert_eq!(call("orbits --family bogus:1 --action row").0, 2);
    assert_eq!(call("orbits --family product:2,2 --action spro").0, 2);
    assert_eq!(call("orbits --family product:2,2 --action psi").0, 2);
    assert_eq!(call("witness --family product:2,2 --kind height").0, 2);
    assert_eq!(call("orbits --family product:2,2").0, 2);
    assert_eq!(call("orbits --family asm:7 --action spro").0, 3);
    assert_eq!(call("orbits --family product:4,4,4 --action row --cap 1000").0, 3);
    let (code, out, _) = call("--help");
    assert_eq!(code, 0);
    assert!(out.contains("orbits"));
}

#[test]
fn output_is_deterministic() {
    for args in ["orbits --family tsscpp:5 --action row", "orbits --family product:3,3,3 --action pro --format tsv"] {
        let (_, one, _) = call(&format!("{args} --threads 1"));
        let (_, four, _) = call(&format!("{args} --threads 4"));
        let (_, again, _) = call(&format!("{args} --threads 4"));
        assert_eq!(one, four);
        assert_eq!(four, again);
    }
}

#[test]
fn binary_runs() {
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_rowmotion"))
        .args(["order", "--family", "product:2,2", "--action", "row"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("\"order\":4"));
    let out =
        std::process::Command::new(env!("CARGO_BIN_EXE_rowmotion")).args(["orbits", "--family", "x"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

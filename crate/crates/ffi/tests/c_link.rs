//! Compiles a C program against the generated header and the static library.
//! Skipped when no C compiler is on PATH.

use std::path::{Path, PathBuf};
use std::process::Command;

fn staticlib() -> Option<PathBuf> {
    // target/<profile>/deps/c_link-xxxx -> target/<profile>
    let exe = std::env::current_exe().ok()?;
    let profile = exe.parent()?.parent()?;
    let lib = profile.join("librowmotion_ffi.a");
    lib.exists().then_some(lib)
}

#[test]
fn c_program_links_and_runs() {
    if Command::new("cc").arg("--version").output().is_err() {
        eprintln!("no cc; skipping");
        return;
    }
    let Some(lib) = staticlib() else {
        eprintln!("static library not built; skipping");
        return;
    };
    let root = Path::new(env!("CARGO_MANIFEST_DIR"));
    let dir = tempfile::tempdir().unwrap();
    let exe = dir.path().join("smoke");
    let status = Command::new("cc")
        .arg(root.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(root.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "exit {:?}", out.status.code());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.trim(), format!("{} {}", env!("CARGO_PKG_VERSION"), 64));
}

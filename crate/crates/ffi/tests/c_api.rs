//! Compiles `smoke.c` against the generated header and the static library.

use std::path::{Path, PathBuf};
use std::process::Command;

fn target_dir() -> PathBuf {
    // target/<profile>/deps/c_api-<hash>
    let exe = std::env::current_exe().unwrap();
    exe.parent().and_then(Path::parent).unwrap().to_path_buf()
}

fn cc() -> String {
    std::env::var("CC").unwrap_or_else(|_| "cc".into())
}

#[test]
fn header_compiles_as_c_and_cpp() {
    let include = Path::new(env!("CARGO_MANIFEST_DIR")).join("include");
    let header = include.join("diophant.h");
    for (lang, std) in [("c", "-std=c99"), ("c++", "-std=c++11")] {
        let status = Command::new(cc())
            .args(["-x", lang, std, "-Wall", "-Werror", "-fsyntax-only"])
            .arg(&header)
            .status()
            .expect("C compiler");
        assert!(status.success(), "{lang}");
    }
}

#[test]
fn c_program_links_and_runs() {
    let manifest = Path::new(env!("CARGO_MANIFEST_DIR"));
    let lib = target_dir().join("libdiophant_ffi.a");
    assert!(lib.exists(), "{} missing", lib.display());
    let tmp = std::env::temp_dir().join(format!("diophant_smoke_{}", std::process::id()));
    let status = Command::new(cc())
        .args(["-std=c99", "-Wall", "-Werror", "-o"])
        .arg(&tmp)
        .arg(manifest.join("tests/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm"])
        .status()
        .expect("C compiler");
    assert!(status.success());
    let out = Command::new(&tmp).output().unwrap();
    let _ = std::fs::remove_file(&tmp);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "ok\n");
}

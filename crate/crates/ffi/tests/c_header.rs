use std::path::{Path, PathBuf};
use std::process::Command;

fn header() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("include/lorentz.h")
}

#[test]
fn header_declares_every_export() {
    let h = std::fs::read_to_string(header()).expect("build.rs writes the header");
    for name in [
        "lv_algebra_new_so",
        "lv_algebra_free",
        "lv_algebra_dim",
        "lv_killing_form",
        "lv_matrix_from_text",
        "lv_matrix_to_text",
        "lv_matrix_shape",
        "lv_matrix_free",
        "lv_string_free",
        "lv_matrix_signature",
        "lv_quotient_verdict",
        "lv_run_all_json",
        "lv_last_error_message",
        "typedef struct LvAlgebra LvAlgebra",
        "LV_STATUS_NOT_SYMMETRIC = 4",
    ] {
        assert!(h.contains(name), "header lacks {name}");
    }
}

/// Compiles a C client against the header and the static library.
#[test]
fn c_client_links_and_runs() {
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().and_then(Path::parent).unwrap();
    let lib = profile_dir.join("liblorentz_ffi.a");
    assert!(lib.exists(), "static library missing at {}", lib.display());
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("client.c");
    std::fs::write(
        &src,
        r#"
#include <stdio.h>
#include <string.h>
#include "lorentz.h"
int main(void) {
    LvAlgebra *g = NULL;
    if (lv_algebra_new_so(1, 2, &g) != LV_STATUS_OK) return 10;
    LvMatrix *k = NULL;
    if (lv_killing_form(g, &k) != LV_STATUS_OK) return 11;
    LvSignature s;
    if (lv_matrix_signature(k, &s) != LV_STATUS_OK) return 12;
    printf("(%zu,%zu,%zu)\n", s.positive, s.negative, s.zero);
    LvMatrix *bad = NULL;
    if (lv_matrix_from_text("1 1\nq", &bad) != LV_STATUS_PARSE) return 13;
    if (strlen(lv_last_error_message()) == 0) return 14;
    lv_matrix_free(k);
    lv_algebra_free(g);
    return 0;
}
"#,
    )
    .unwrap();
    let bin = dir.path().join("client");
    let status = Command::new("cc")
        .arg(&src)
        .arg("-I")
        .arg(header().parent().unwrap())
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .expect("a C compiler on PATH");
    assert!(status.success());
    let out = Command::new(&bin).output().unwrap();
    assert!(out.status.success(), "client exited with {:?}", out.status);
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "(2,1,0)");
}

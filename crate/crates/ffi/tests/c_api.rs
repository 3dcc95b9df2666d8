use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use palette_ffi::*;

fn take_string(p: *mut std::ffi::c_char) -> String {
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned();
    unsafe { palette_string_free(p) };
    s
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(palette_last_error()) }
        .to_str()
        .unwrap()
        .to_owned()
}

fn generate(spec: &str) -> *mut PaletteGraph {
    let spec = CString::new(spec).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(
        unsafe { palette_graph_generate(spec.as_ptr(), &mut g) },
        PaletteStatus::Ok
    );
    g
}

#[test]
fn product_sizes_and_json_round_trip() {
    let c13 = generate("cycle:13");
    let c5 = generate("cycle:5");
    let mut prod = ptr::null_mut();
    unsafe {
        assert_eq!(palette_graph_product(c13, c5, &mut prod), PaletteStatus::Ok);
        let (mut n, mut m) = (0, 0);
        assert_eq!(palette_graph_size(prod, &mut n, &mut m), PaletteStatus::Ok);
        assert_eq!((n, m), (65, 130));

        let mut json = ptr::null_mut();
        assert_eq!(palette_graph_to_json(prod, &mut json), PaletteStatus::Ok);
        let text = CString::new(take_string(json)).unwrap();
        let mut back = ptr::null_mut();
        assert_eq!(palette_graph_from_json(text.as_ptr(), &mut back), PaletteStatus::Ok);
        let (mut n2, mut m2) = (0, 0);
        palette_graph_size(back, &mut n2, &mut m2);
        assert_eq!((n2, m2), (65, 130));
        for g in [c13, c5, prod, back] {
            palette_graph_free(g);
        }
    }
}

#[test]
fn torus_and_cubic_colorings() {
    unsafe {
        let mut f = ptr::null_mut();
        assert_eq!(palette_torus_coloring(13, 5, &mut f), PaletteStatus::Ok);
        let (mut count, mut proper) = (0, 0);
        palette_coloring_palette_count(f, &mut count);
        palette_coloring_is_proper(f, &mut proper);
        assert_eq!((count, proper), (3, 1));
        let mut json = ptr::null_mut();
        assert_eq!(palette_coloring_palettes_json(f, &mut json), PaletteStatus::Ok);
        assert!(take_string(json).contains("\"count\": 3"));
        palette_coloring_free(f);

        let petersen = generate("petersen");
        let mut f = ptr::null_mut();
        assert_eq!(palette_cubic_reduction(petersen, 3, 0, 0, &mut f), PaletteStatus::Ok);
        palette_coloring_palette_count(f, &mut count);
        assert_eq!(count, 3);
        palette_coloring_free(f);

        let k4 = generate("complete:4");
        let mut f = ptr::null_mut();
        assert_eq!(
            palette_cubic_reduction(k4, 3, 0, 0, &mut f),
            PaletteStatus::PreconditionFailed
        );
        assert!(f.is_null());
        assert!(last_error().contains("class 2"));
        palette_graph_free(petersen);
        palette_graph_free(k4);
    }
}

#[test]
fn oracle_certificate() {
    let p3 = generate("path:3");
    let mut grid = ptr::null_mut();
    unsafe {
        palette_graph_product(p3, p3, &mut grid);
        let (mut lo, mut hi, mut ex) = (0, 0, 0);
        assert_eq!(
            palette_oracle_exact(grid, 0, 0, &mut lo, &mut hi, &mut ex),
            PaletteStatus::Ok
        );
        assert_eq!((lo, hi, ex), (5, 5, 5));
        let mut json = ptr::null_mut();
        assert_eq!(palette_oracle_json(p3, 0, 0, &mut json), PaletteStatus::Ok);
        assert!(take_string(json).contains("\"exact\": 3"));
        palette_graph_free(grid);
        palette_graph_free(p3);
    }
}

#[test]
fn errors_and_nulls() {
    unsafe {
        let bad = CString::new("cycle:2").unwrap();
        let mut g = ptr::null_mut();
        assert_eq!(
            palette_graph_generate(bad.as_ptr(), &mut g),
            PaletteStatus::InvalidArgument
        );
        assert!(!last_error().is_empty());
        let ok = CString::new("path:2").unwrap();
        assert_eq!(
            palette_graph_generate(ok.as_ptr(), ptr::null_mut()),
            PaletteStatus::NullPointer
        );
        let mut n = 0;
        assert_eq!(
            palette_graph_size(ptr::null(), &mut n, &mut n),
            PaletteStatus::NullPointer
        );
        let mut f = ptr::null_mut();
        assert_eq!(palette_torus_coloring(3, 5, &mut f), PaletteStatus::PreconditionFailed);
        palette_graph_free(ptr::null_mut());
        palette_coloring_free(ptr::null_mut());
        palette_string_free(ptr::null_mut());
    }
}

#[test]
fn verify_suite_by_name() {
    unsafe {
        let name = CString::new("torus").unwrap();
        let mut json = ptr::null_mut();
        assert_eq!(palette_verify_suite(name.as_ptr(), &mut json), PaletteStatus::Ok);
        assert!(take_string(json).contains("\"failed\": 0"));
        let name = CString::new("nope").unwrap();
        assert_ne!(palette_verify_suite(name.as_ptr(), &mut json), PaletteStatus::Ok);
    }
}

#[test]
fn header_declares_the_api() {
    let header = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include/palette_index.h");
    let text = std::fs::read_to_string(header).unwrap();
    for name in [
        "palette_graph_generate",
        "palette_graph_product",
        "palette_torus_coloring",
        "palette_oracle_exact",
        "palette_last_error",
        "typedef struct PaletteGraph PaletteGraph",
        "PALETTE_STATUS_BUDGET_EXCEEDED",
    ] {
        assert!(text.contains(name), "{name} missing from header");
    }
}

#[test]
fn c_program_links_against_the_static_library() {
    let deps = std::env::current_exe().unwrap().parent().unwrap().to_path_buf();
    let lib = deps.join("libpalette_ffi.a");
    if !lib.exists() || Command::new("cc").arg("--version").output().is_err() {
        eprintln!("skipping: static library or C compiler unavailable");
        return;
    }
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let dir = tempfile::tempdir().unwrap();
    let exe = dir.path().join("smoke");
    let status = Command::new("cc")
        .arg(manifest.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success(), "C compile failed");
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "torus=3 grid=9/12 exact=5");
}

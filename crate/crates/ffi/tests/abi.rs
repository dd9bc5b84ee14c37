use std::ffi::{CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use cellhecke_ffi::*;

#[test]
fn header_is_valid_c_and_cpp() {
    let include = Path::new(env!("CARGO_MANIFEST_DIR")).join("include");
    let header = include.join("cellhecke.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for sym in ["ch_ring_new", "ch_algebra_product", "ch_last_error", "ch_string_free", "CH_STATUS_SIZE_LIMIT"] {
        assert!(text.contains(sym), "{sym} missing from header");
    }
    let probe = std::env::temp_dir().join(format!("cellhecke_probe_{}.c", std::process::id()));
    std::fs::write(&probe, "#include \"cellhecke.h\"\nint main(void) { return ch_version() == 0; }\n").unwrap();
    for (cc, lang) in [("cc", "c"), ("c++", "c++")] {
        let status = Command::new(cc).args(["-fsyntax-only", "-Wall", "-Werror", "-x", lang, "-I"]).arg(&include).arg(&probe).status();
        match status {
            Ok(s) => assert!(s.success(), "{cc} rejected the header"),
            Err(_) => eprintln!("{cc} not available; skipped"),
        }
    }
    let _ = std::fs::remove_file(probe);
}

#[test]
fn handles_survive_a_session() {
    let desc = CString::new("gf:101,q=3,a=2").unwrap();
    unsafe {
        let mut ring = ptr::null_mut();
        assert_eq!(ch_ring_new(desc.as_ptr(), &mut ring), ChStatus::Ok);
        let mut alg = ptr::null_mut();
        assert_eq!(ch_algebra_new(ring, ChAlgebraKind::Hecke, 3, &mut alg), ChStatus::Ok);
        let mut dim = 0;
        assert_eq!(ch_algebra_dim(alg, &mut dim), ChStatus::Ok);
        assert_eq!(dim, 6);
        // T_1 T_1 = (q−1) T_1 + q with q = 3
        let (l, r) = (CString::new("T1").unwrap(), CString::new("T1").unwrap());
        let mut json = ptr::null_mut();
        assert_eq!(ch_algebra_product(alg, l.as_ptr(), r.as_ptr(), &mut json), ChStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(CStr::from_ptr(json).to_str().unwrap()).unwrap();
        ch_string_free(json);
        let coeffs: Vec<i64> = v.as_array().unwrap().iter().map(|t| t["coeff"].as_i64().unwrap()).collect();
        assert_eq!(coeffs, vec![3, 2]);

        // 3 has order 100 mod 101, so H^c_3 is semisimple: (3) and (2,1)
        let mut count = 0;
        assert_eq!(ch_count_simples(ring, ChAlgebraKind::HeckeClifford, 3, &mut count), ChStatus::Ok);
        assert_eq!(count, 2);
        assert_eq!(ch_count_simples(ptr::null(), ChAlgebraKind::Hecke, 3, &mut count), ChStatus::NullPointer);
        let msg = CStr::from_ptr(ch_last_error()).to_str().unwrap();
        assert!(msg.contains("ring"), "{msg}");
        ch_algebra_free(alg);
        ch_ring_free(ring);
        ch_ring_free(ptr::null_mut());
    }
}

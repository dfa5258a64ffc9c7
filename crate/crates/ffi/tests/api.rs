use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::ptr;

use abmod_ffi::*;

fn last_error() -> String {
    let p = abmod_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

fn c5() -> *mut AbmodGraph {
    let edges: [u32; 10] = [0, 1, 1, 2, 2, 3, 3, 4, 4, 0];
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { abmod_graph_new(5, edges.as_ptr(), 5, &mut g) }, AbmodStatus::Ok);
    g
}

#[test]
fn module_and_primality() {
    let g = c5();
    unsafe {
        assert_eq!(abmod_graph_vertex_count(g), 5);
        let mut prime = false;
        assert_eq!(abmod_is_prime(g, 1, 1, &mut prime), AbmodStatus::Ok);
        assert!(prime);
        let ids = [0u32, 1];
        let mut module = false;
        assert_eq!(abmod_is_module(g, ids.as_ptr(), 2, 0, 0, &mut module), AbmodStatus::Ok);
        assert!(!module);
        abmod_graph_free(g);
    }
}

#[test]
fn closure_into_caller_buffer() {
    let g = c5();
    unsafe {
        let ids = [0u32, 1];
        let mut len = 0;
        let mut small = [0u32; 2];
        let status = abmod_closure(g, ids.as_ptr(), 2, 0, 0, small.as_mut_ptr(), small.len(), &mut len);
        assert_eq!(status, AbmodStatus::BufferTooSmall);
        assert_eq!(len, 5);
        let mut buf = [0u32; 5];
        assert_eq!(abmod_closure(g, ids.as_ptr(), 2, 0, 0, buf.as_mut_ptr(), 5, &mut len), AbmodStatus::Ok);
        assert_eq!(buf, [0, 1, 2, 3, 4]);
        abmod_graph_free(g);
    }
}

#[test]
fn families_and_trees_from_parsed_documents() {
    let text = CString::new("p 4 3\n0 1\n1 2\n2 3\n").unwrap();
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(abmod_graph_parse(text.as_ptr(), &mut g), AbmodStatus::Ok);
        // P4 has no nontrivial classical module
        let mut fam = ptr::null_mut();
        assert_eq!(abmod_minimal_modules(g, 0, 0, &mut fam), AbmodStatus::Ok);
        assert_eq!(abmod_family_len(fam), 0);
        abmod_family_free(fam);

        let mut json = ptr::null_mut();
        assert_eq!(abmod_tree_json(g, 0, 0, &mut json), AbmodStatus::Ok);
        let tree = CStr::from_ptr(json).to_str().unwrap().to_owned();
        assert!(tree.contains("\"kind\":\"ab_prime\""), "{tree}");
        abmod_string_free(json);
        abmod_graph_free(g);
    }
}

#[test]
fn family_members_are_copied_out() {
    let text = CString::new("p 3 0\n").unwrap();
    let mut g = ptr::null_mut();
    unsafe {
        abmod_graph_parse(text.as_ptr(), &mut g);
        let mut fam = ptr::null_mut();
        assert_eq!(abmod_minimal_modules(g, 0, 0, &mut fam), AbmodStatus::Ok);
        assert_eq!(abmod_family_len(fam), 3);
        let mut buf = [0u32; 3];
        let mut len = 0;
        assert_eq!(abmod_family_get(fam, 2, buf.as_mut_ptr(), 3, &mut len), AbmodStatus::Ok);
        assert_eq!(&buf[..len], &[1, 2]);
        assert_eq!(abmod_family_get(fam, 3, buf.as_mut_ptr(), 3, &mut len), AbmodStatus::InvalidArgument);
        abmod_family_free(fam);
        abmod_graph_free(g);
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut g = ptr::null_mut();
        let bad = CString::new("p 3 1\n2 2\n").unwrap();
        assert_eq!(abmod_graph_parse(bad.as_ptr(), &mut g), AbmodStatus::ParseError);
        assert!(last_error().contains("line 2"));

        let loops: [u32; 2] = [1, 1];
        assert_eq!(abmod_graph_new(3, loops.as_ptr(), 1, &mut g), AbmodStatus::InvalidArgument);
        assert!(last_error().contains("self-loop"));

        let mut flag = false;
        assert_eq!(abmod_is_prime(ptr::null(), 0, 0, &mut flag), AbmodStatus::NullPointer);

        let g = c5();
        let ids = [7u32];
        assert_eq!(abmod_is_module(g, ids.as_ptr(), 1, 0, 0, &mut flag), AbmodStatus::InvalidArgument);
        assert_eq!(abmod_is_prime(g, 9, 0, &mut flag), AbmodStatus::InvalidArgument);
        abmod_graph_free(g);

        abmod_graph_free(ptr::null_mut());
        abmod_family_free(ptr::null_mut());
        abmod_string_free(ptr::null_mut());
    }
}

#[test]
fn header_is_valid_c() {
    let header = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include").join("abmod.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for name in ["abmod_graph_new", "abmod_closure", "abmod_last_error", "ABMOD_STATUS_BUFFER_TOO_SMALL"] {
        assert!(text.contains(name), "{name} missing from the header");
    }
    let dir = std::env::temp_dir().join(format!("abmod-header-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let src = dir.join("use.c");
    std::fs::write(&src, "#include \"abmod.h\"\nint main(void) { return abmod_last_error() != 0; }\n").unwrap();
    let compiled = std::process::Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(header.parent().unwrap())
        .arg(&src)
        .status();
    std::fs::remove_dir_all(&dir).unwrap();
    match compiled {
        Ok(status) => assert!(status.success(), "header does not compile"),
        Err(_) => eprintln!("no C compiler found; syntax check skipped"),
    }
}

use std::ffi::{CStr, CString};
use std::ptr;

use linecons_ffi::*;

const STAR: &str = r#"{"vertices":["c","a","b","d"],"edges":[
  {"id":"e1","u":"c","v":"a","sign":"-"},
  {"id":"e2","u":"c","v":"b","sign":"-"},
  {"id":"e3","u":"c","v":"d","sign":"-"}]}"#;

const PARALLEL: &str = r#"{"vertices":["a","b"],"edges":[
  {"id":"e1","u":"a","v":"b","sign":"+"},
  {"id":"e2","u":"a","v":"b","sign":"-"}]}"#;

struct Graph(*mut LcGraph);

impl Graph {
    fn parse(json: &str) -> Result<Graph, (LcStatus, String)> {
        let text = CString::new(json).unwrap();
        let mut g = ptr::null_mut();
        match unsafe { lc_graph_from_json(text.as_ptr(), &mut g) } {
            LcStatus::Ok => Ok(Graph(g)),
            status => Err((status, last_error())),
        }
    }
}

impl Drop for Graph {
    fn drop(&mut self) {
        unsafe { lc_graph_free(self.0) }
    }
}

fn last_error() -> String {
    let p = lc_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned()
}

fn take_string(p: *mut std::ffi::c_char) -> String {
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned();
    unsafe { lc_string_free(p) };
    s
}

#[test]
fn counts_and_verdicts() {
    let g = Graph::parse(STAR).unwrap();
    let mut n = 0;
    assert_eq!(unsafe { lc_graph_vertex_count(g.0, &mut n) }, LcStatus::Ok);
    assert_eq!(n, 4);
    assert_eq!(unsafe { lc_graph_edge_count(g.0, &mut n) }, LcStatus::Ok);
    assert_eq!(n, 3);
    for method in [
        LcMethod::ConditionI,
        LcMethod::ConditionIi,
        LcMethod::ConditionIii,
        LcMethod::SimpleCriterion,
        LcMethod::Structure,
        LcMethod::Oracle,
    ] {
        let mut consistent = true;
        assert_eq!(unsafe { lc_check(g.0, method, &mut consistent) }, LcStatus::Ok);
        assert!(!consistent, "{method:?}");
    }
}

#[test]
fn verdict_json_has_witness() {
    let g = Graph::parse(STAR).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { lc_check_json(g.0, LcMethod::ConditionIi, &mut out) }, LcStatus::Ok);
    let text = take_string(out);
    assert!(text.contains(r#""method":"ii""#), "{text}");
    assert!(text.contains(r#""vertices":["e1","e3","e2"]"#), "{text}");
}

#[test]
fn check_all_reports_agreement() {
    let g = Graph::parse(PARALLEL).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { lc_check_all(g.0, &mut out) }, LcStatus::Ok);
    let text = take_string(out);
    assert!(text.contains(r#""disagreements":[]"#), "{text}");
}

#[test]
fn simple_criterion_rejects_parallel_edges() {
    let g = Graph::parse(PARALLEL).unwrap();
    let mut consistent = false;
    assert_eq!(unsafe { lc_check(g.0, LcMethod::SimpleCriterion, &mut consistent) }, LcStatus::NotSimple);
    assert!(last_error().contains("simple graph"));
}

#[test]
fn exports() {
    let g = Graph::parse(PARALLEL).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { lc_line_graph_json(g.0, &mut out) }, LcStatus::Ok);
    assert_eq!(
        take_string(out),
        r#"{"edges":[{"id":"e1~e2@a","u":"e1","v":"e2"},{"id":"e1~e2@b","u":"e1","v":"e2"}],"vertices":[{"id":"e1","sign":"+"},{"id":"e2","sign":"-"}]}"#
    );
    assert_eq!(unsafe { lc_graph_to_json(g.0, &mut out) }, LcStatus::Ok);
    let json = take_string(out);
    assert!(Graph::parse(&json).is_ok());
    assert_eq!(unsafe { lc_graph_to_dot(g.0, true, &mut out) }, LcStatus::Ok);
    assert!(take_string(out).contains("style=dashed"));
    assert_eq!(unsafe { lc_decompose_json(g.0, &mut out) }, LcStatus::Ok);
    assert!(take_string(out).contains(r#""balanced":false"#));
}

#[test]
fn errors_are_reported() {
    let (status, msg) =
        Graph::parse(r#"{"vertices":["a"],"edges":[{"id":"e","u":"a","v":"a","sign":"+"}]}"#).err().unwrap();
    assert_eq!(status, LcStatus::InvalidGraph);
    assert!(msg.contains("edges[0]"), "{msg}");

    let mut out = ptr::null_mut();
    assert_eq!(unsafe { lc_graph_from_json(ptr::null(), &mut out) }, LcStatus::NullPointer);
    let mut n = 0;
    assert_eq!(unsafe { lc_graph_vertex_count(ptr::null(), &mut n) }, LcStatus::NullPointer);
    let g = Graph::parse(STAR).unwrap();
    assert_eq!(unsafe { lc_graph_vertex_count(g.0, ptr::null_mut()) }, LcStatus::NullPointer);

    let bad = [b'{', 0xff, b'}', 0];
    assert_eq!(unsafe { lc_graph_from_json(bad.as_ptr().cast(), &mut out) }, LcStatus::InvalidUtf8);
}

#[test]
fn free_accepts_null() {
    unsafe {
        lc_graph_free(ptr::null_mut());
        lc_string_free(ptr::null_mut());
    }
    let v = unsafe { CStr::from_ptr(lc_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

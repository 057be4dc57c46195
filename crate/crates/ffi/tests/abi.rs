use std::ffi::{c_char, CStr, CString};
use std::ptr;

use pathhom_ffi::*;

fn take_string(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let text = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { pathhom_string_free(s) };
    text
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(pathhom_last_error()) }
        .to_str()
        .unwrap()
        .to_owned()
}

fn count_text(status: PathhomStatus, c: *mut PathhomCount) -> String {
    assert_eq!(status, PathhomStatus::Ok, "{}", last_error());
    let mut s = ptr::null_mut();
    assert_eq!(
        unsafe { pathhom_count_to_string(c, &mut s) },
        PathhomStatus::Ok
    );
    unsafe { pathhom_count_free(c) };
    take_string(s)
}

macro_rules! count {
    ($f:ident($($arg:expr),*)) => {{
        let mut c = ptr::null_mut();
        #[allow(unused_unsafe)]
        let st = unsafe { $f($($arg,)* &mut c) };
        count_text(st, c)
    }};
}

#[test]
fn counts() {
    assert_eq!(count!(pathhom_hom(3, 3)), "6");
    assert_eq!(count!(pathhom_homj(5, 3, 2)), "4");
    assert_eq!(count!(pathhom_hom1(5, 3)), "4");
    assert_eq!(count!(pathhom_end(4)), "16");
    assert_eq!(count!(pathhom_epi(4, 3)), "4");
    assert_eq!(count!(pathhom_lk(10, 4)), "18");
    assert_eq!(count!(pathhom_lk(3, 2)), "1");
    assert_eq!(count!(pathhom_lattice(3, 3, 1, 1)), "8");
    let big = count!(pathhom_hom(300, 300));
    assert_eq!(big, pathhom::hom_count_dp(300, 300).to_string());
}

#[test]
fn u64_conversion() {
    let mut c = ptr::null_mut();
    assert_eq!(pathhom_end(14, &mut c), PathhomStatus::Ok);
    let mut v = 0u64;
    assert_eq!(
        unsafe { pathhom_count_to_u64(c, &mut v) },
        PathhomStatus::Ok
    );
    assert_eq!(v, 74832);
    unsafe { pathhom_count_free(c) };

    assert_eq!(pathhom_hom(200, 5, &mut c), PathhomStatus::Ok);
    assert_eq!(
        unsafe { pathhom_count_to_u64(c, &mut v) },
        PathhomStatus::SizeLimit
    );
    unsafe { pathhom_count_free(c) };
}

#[test]
fn argument_errors() {
    let mut c = ptr::null_mut();
    assert_eq!(pathhom_hom(0, 3, &mut c), PathhomStatus::InvalidArgument);
    assert!(c.is_null());
    assert!(last_error().contains('n'));
    assert_eq!(
        pathhom_homj(4, 3, 4, &mut c),
        PathhomStatus::InvalidArgument
    );
    assert_eq!(pathhom_lk(4, 4, &mut c), PathhomStatus::Domain);
    assert_eq!(
        pathhom_hom(3, 3, ptr::null_mut()),
        PathhomStatus::NullPointer
    );
    assert_eq!(pathhom_hom(3, 3, &mut c), PathhomStatus::Ok);
    assert_eq!(last_error(), "");
    unsafe { pathhom_count_free(c) };
    unsafe { pathhom_count_free(ptr::null_mut()) };
}

#[test]
fn epispectrum() {
    let mut s = ptr::null_mut();
    assert_eq!(pathhom_epispectrum(12, &mut s), PathhomStatus::Ok);
    assert_eq!(unsafe { pathhom_spectrum_len(s) }, 11);
    assert_eq!(count!(pathhom_spectrum_get(s, 5)), "66");
    let mut c = ptr::null_mut();
    assert_eq!(
        unsafe { pathhom_spectrum_get(s, 0, &mut c) },
        PathhomStatus::InvalidArgument
    );
    assert_eq!(
        unsafe { pathhom_spectrum_get(s, 12, &mut c) },
        PathhomStatus::InvalidArgument
    );
    unsafe { pathhom_spectrum_free(s) };
    assert_eq!(pathhom_epispectrum(1, &mut s), PathhomStatus::Domain);
    assert!(s.is_null());
}

#[test]
fn encode_decode() {
    let images = [1u32, 2, 3, 2, 3, 4, 5, 4, 3, 4, 5, 6, 5, 6, 5];
    let mut w = ptr::null_mut();
    assert_eq!(
        unsafe { pathhom_encode(images.as_ptr(), images.len(), 6, &mut w) },
        PathhomStatus::Ok
    );
    let word = take_string(w);
    assert_eq!(word, "EENEEENNEEENEN");

    let cword = CString::new(word).unwrap();
    let mut len = 0usize;
    assert_eq!(
        unsafe { pathhom_decode(cword.as_ptr(), 6, ptr::null_mut(), 0, &mut len) },
        PathhomStatus::BufferTooSmall
    );
    assert_eq!(len, images.len());
    let mut buf = vec![0u32; len];
    assert_eq!(
        unsafe { pathhom_decode(cword.as_ptr(), 6, buf.as_mut_ptr(), buf.len(), &mut len) },
        PathhomStatus::Ok
    );
    assert_eq!(buf, images);

    let bad = [2u32, 1];
    assert_eq!(
        unsafe { pathhom_encode(bad.as_ptr(), 2, 3, &mut w) },
        PathhomStatus::Domain
    );
    let jump = [1u32, 3];
    assert_eq!(
        unsafe { pathhom_encode(jump.as_ptr(), 2, 3, &mut w) },
        PathhomStatus::Invalid
    );
    let garbage = CString::new("EXN").unwrap();
    assert_eq!(
        unsafe { pathhom_decode(garbage.as_ptr(), 3, buf.as_mut_ptr(), buf.len(), &mut len) },
        PathhomStatus::Parse
    );
    let outside = CString::new("EEE").unwrap();
    assert_eq!(
        unsafe { pathhom_decode(outside.as_ptr(), 3, buf.as_mut_ptr(), buf.len(), &mut len) },
        PathhomStatus::Invalid
    );
}

#[test]
fn arrange() {
    let p = CString::new("{1,3,5,9}{2,4,10}{6,8}{7}{11}").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { pathhom_arrange(p.as_ptr(), &mut out) },
        PathhomStatus::Ok
    );
    assert_eq!(
        take_string(out),
        "{7}{6,8}{1,3,5,9}{2,4,10}{11} {11}{2,4,10}{1,3,5,9}{6,8}{7}"
    );

    let p = CString::new("{1,2}{3}").unwrap();
    assert_eq!(
        unsafe { pathhom_arrange(p.as_ptr(), &mut out) },
        PathhomStatus::Invalid
    );
    assert!(!last_error().is_empty());
    let p = CString::new("{1,3").unwrap();
    assert_eq!(
        unsafe { pathhom_arrange(p.as_ptr(), &mut out) },
        PathhomStatus::Parse
    );
}

#[test]
fn header_is_current() {
    let header =
        std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/pathhom.h")).unwrap();
    for name in [
        "pathhom_hom",
        "pathhom_homj",
        "pathhom_hom1",
        "pathhom_end",
        "pathhom_epi",
        "pathhom_lk",
        "pathhom_lattice",
        "pathhom_epispectrum",
        "pathhom_spectrum_get",
        "pathhom_encode",
        "pathhom_decode",
        "pathhom_arrange",
        "pathhom_count_free",
        "pathhom_string_free",
        "pathhom_last_error",
    ] {
        assert!(
            header.contains(&format!("{name}(")),
            "{name} missing from header"
        );
    }
    assert!(header.contains("typedef struct PathhomCount PathhomCount;"));
    assert!(header.contains("PATHHOM_STATUS_OK = 0"));
}

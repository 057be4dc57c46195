//! C ABI for `pathhom`.
//!
//! Every entry point returns a [`PathhomStatus`]. Results come back through
//! out-pointers: counts as opaque [`PathhomCount`] handles, epispectra as
//! [`PathhomSpectrum`] handles, and text as NUL-terminated strings owned by
//! the library. Release them with the matching `*_free` function.
//!
//! On failure, `pathhom_last_error` returns a message describing the most
//! recent error on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, UnwindSafe};
use std::ptr;

use pathhom::closedform::{lk_closed, lk_via_hom, HomBackend};
use pathhom::congruence::format_ordering;
use pathhom::{
    arrangements, decode_word, encode_hom, end_count_closed, epi_count_ie, epispectrum_formula,
    hom1_count_closed, hom_count_closed, hom_j_count_aw, lattice_count_banded, BandSpec, Count,
    Epispectrum, Error, LatticeWord, PathHom, SetPartition,
};

/// Result code of every `pathhom_*` call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PathhomStatus {
    Ok = 0,
    NullPointer = 1,
    /// An argument is out of range (for example `k == 0`).
    InvalidArgument = 2,
    /// The quantity is not defined for these arguments.
    Domain = 3,
    /// The input exceeds a size limit, or a value does not fit the output type.
    SizeLimit = 4,
    /// Text input could not be parsed.
    Parse = 5,
    /// Input parsed but is not a valid homomorphism, word or partition.
    Invalid = 6,
    /// Caller-provided buffer is too small; the required length was written.
    BufferTooSmall = 7,
    Internal = 8,
}

/// Opaque exact nonnegative integer.
pub struct PathhomCount(Count);

/// Opaque epispectrum `(l_1(n), ..., l_(n-1)(n))`.
pub struct PathhomSpectrum(Epispectrum);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(msg: &str) {
    let msg = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn fail(status: PathhomStatus, msg: impl AsRef<str>) -> PathhomStatus {
    set_last_error(msg.as_ref());
    status
}

fn status_of(e: &Error) -> PathhomStatus {
    match e {
        Error::SizeLimit { .. } => PathhomStatus::SizeLimit,
        Error::Domain(_) => PathhomStatus::Domain,
        Error::InvalidHom(_) | Error::BandViolation { .. } | Error::InvalidPartition(_) => {
            PathhomStatus::Invalid
        }
        Error::Parse(_) => PathhomStatus::Parse,
        Error::Internal(_) => PathhomStatus::Internal,
    }
}

/// Runs `f`, translating errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), (PathhomStatus, String)> + UnwindSafe) -> PathhomStatus {
    match catch_unwind(f) {
        Ok(Ok(())) => {
            set_last_error("");
            PathhomStatus::Ok
        }
        Ok(Err((status, msg))) => fail(status, msg),
        Err(_) => fail(PathhomStatus::Internal, "internal panic"),
    }
}

fn lib_err(e: Error) -> (PathhomStatus, String) {
    (status_of(&e), e.to_string())
}

fn positive(name: &str, v: u32) -> Result<(), (PathhomStatus, String)> {
    if v == 0 {
        Err((
            PathhomStatus::InvalidArgument,
            format!("{name} must be at least 1"),
        ))
    } else {
        Ok(())
    }
}

fn emit<T>(
    out: *mut *mut T,
    f: impl FnOnce() -> Result<T, (PathhomStatus, String)> + UnwindSafe,
) -> PathhomStatus {
    if out.is_null() {
        return fail(PathhomStatus::NullPointer, "output pointer is null");
    }
    // SAFETY: checked non-null; the caller provides a writable slot.
    unsafe { *out = ptr::null_mut() };
    let out = out as usize;
    guard(move || {
        let handle = Box::into_raw(Box::new(f()?));
        // SAFETY: same pointer as above.
        unsafe { *(out as *mut *mut T) = handle };
        Ok(())
    })
}

fn emit_count(
    out: *mut *mut PathhomCount,
    f: impl FnOnce() -> Result<Count, (PathhomStatus, String)> + UnwindSafe,
) -> PathhomStatus {
    emit(out, move || f().map(PathhomCount))
}

fn emit_string(out: *mut *mut c_char, s: String) -> Result<(), (PathhomStatus, String)> {
    let s = CString::new(s).map_err(|e| (PathhomStatus::Internal, e.to_string()))?;
    // SAFETY: callers check `out` before computing `s`.
    unsafe { *out = s.into_raw() };
    Ok(())
}

fn read_str<'a>(p: *const c_char) -> Result<&'a str, (PathhomStatus, String)> {
    // SAFETY: callers check for null; the string must be NUL-terminated.
    unsafe { CStr::from_ptr(p) }
        .to_str()
        .map_err(|_| (PathhomStatus::Parse, "input is not valid UTF-8".to_string()))
}

/// Message for the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next `pathhom_*` call on the thread.
#[no_mangle]
pub extern "C" fn pathhom_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// `|Hom(P_n, P_k)|`.
#[no_mangle]
pub extern "C" fn pathhom_hom(n: u32, k: u32, out: *mut *mut PathhomCount) -> PathhomStatus {
    emit_count(out, move || {
        positive("n", n)?;
        positive("k", k)?;
        Ok(hom_count_closed(n, k))
    })
}

/// Homomorphisms `P_n -> P_k` with `f(1) = j`, `1 <= j <= k`.
#[no_mangle]
pub extern "C" fn pathhom_homj(
    n: u32,
    k: u32,
    j: u32,
    out: *mut *mut PathhomCount,
) -> PathhomStatus {
    emit_count(out, move || {
        positive("n", n)?;
        positive("k", k)?;
        if !(1..=k).contains(&j) {
            return Err((
                PathhomStatus::InvalidArgument,
                format!("j = {j} is not in 1..={k}"),
            ));
        }
        Ok(hom_j_count_aw(n, k, j))
    })
}

/// Homomorphisms `P_n -> P_k` with `f(1) = 1`.
#[no_mangle]
pub extern "C" fn pathhom_hom1(n: u32, k: u32, out: *mut *mut PathhomCount) -> PathhomStatus {
    emit_count(out, move || {
        positive("n", n)?;
        positive("k", k)?;
        Ok(hom1_count_closed(n, k))
    })
}

/// `|End(P_n)|`.
#[no_mangle]
pub extern "C" fn pathhom_end(n: u32, out: *mut *mut PathhomCount) -> PathhomStatus {
    emit_count(out, move || {
        positive("n", n)?;
        Ok(end_count_closed(n))
    })
}

/// Surjective homomorphisms `P_n -> P_k`.
#[no_mangle]
pub extern "C" fn pathhom_epi(n: u32, k: u32, out: *mut *mut PathhomCount) -> PathhomStatus {
    emit_count(out, move || {
        positive("n", n)?;
        positive("k", k)?;
        Ok(epi_count_ie(n, k, HomBackend::ClosedForm))
    })
}

/// `l_k(n)`, defined for `1 <= k <= n - 1`.
#[no_mangle]
pub extern "C" fn pathhom_lk(n: u32, k: u32, out: *mut *mut PathhomCount) -> PathhomStatus {
    emit_count(out, move || {
        let r = if k >= 1 && n as u64 >= 2 * k as u64 {
            lk_closed(n, k)
        } else {
            lk_via_hom(n, k, HomBackend::ClosedForm)
        };
        r.map_err(lib_err)
    })
}

/// Lattice paths from `(0, 0)` to `(e, nn)` staying within `x - s <= y <= x + t`.
#[no_mangle]
pub extern "C" fn pathhom_lattice(
    e: u64,
    nn: u64,
    t: u64,
    s: u64,
    out: *mut *mut PathhomCount,
) -> PathhomStatus {
    emit_count(out, move || {
        Ok(lattice_count_banded(e, nn, BandSpec::new(t, s)))
    })
}

/// Decimal representation of `count`. Free with `pathhom_string_free`.
///
/// # Safety
/// `count` must be a live handle from this library and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn pathhom_count_to_string(
    count: *const PathhomCount,
    out: *mut *mut c_char,
) -> PathhomStatus {
    if count.is_null() || out.is_null() {
        return fail(PathhomStatus::NullPointer, "null argument");
    }
    // SAFETY: non-null handle produced by this library.
    let text = unsafe { &*count }.0.to_string();
    let out = out as usize;
    guard(move || emit_string(out as *mut *mut c_char, text))
}

/// Writes `count` to `out` if it fits in 64 bits; `SIZE_LIMIT` otherwise.
///
/// # Safety
/// `count` must be a live handle from this library and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn pathhom_count_to_u64(
    count: *const PathhomCount,
    out: *mut u64,
) -> PathhomStatus {
    if count.is_null() || out.is_null() {
        return fail(PathhomStatus::NullPointer, "null argument");
    }
    // SAFETY: non-null handle produced by this library.
    match unsafe { &*count }.0.to_u64() {
        Some(v) => {
            // SAFETY: checked non-null.
            unsafe { *out = v };
            set_last_error("");
            PathhomStatus::Ok
        }
        None => fail(PathhomStatus::SizeLimit, "value does not fit in 64 bits"),
    }
}

/// Releases a count handle. Null is ignored.
///
/// # Safety
/// `count` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn pathhom_count_free(count: *mut PathhomCount) {
    if !count.is_null() {
        // SAFETY: handle came from Box::into_raw in this library.
        drop(unsafe { Box::from_raw(count) });
    }
}

/// Epispectrum of `P_n`, `n >= 2`.
#[no_mangle]
pub extern "C" fn pathhom_epispectrum(n: u32, out: *mut *mut PathhomSpectrum) -> PathhomStatus {
    emit(out, move || {
        epispectrum_formula(n).map(PathhomSpectrum).map_err(lib_err)
    })
}

/// Number of entries, `n - 1`. Zero for a null handle.
///
/// # Safety
/// `spectrum` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn pathhom_spectrum_len(spectrum: *const PathhomSpectrum) -> usize {
    if spectrum.is_null() {
        return 0;
    }
    // SAFETY: non-null handle produced by this library.
    unsafe { &*spectrum }.0.values().len()
}

/// Entry `l_k(n)` for `1 <= k <= n - 1`, as a new count handle.
///
/// # Safety
/// `spectrum` must be a live handle from this library and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn pathhom_spectrum_get(
    spectrum: *const PathhomSpectrum,
    k: usize,
    out: *mut *mut PathhomCount,
) -> PathhomStatus {
    if spectrum.is_null() {
        return fail(PathhomStatus::NullPointer, "spectrum is null");
    }
    // SAFETY: non-null handle produced by this library.
    let s = &unsafe { &*spectrum }.0;
    let value = s.get(k).cloned();
    let len = s.values().len();
    emit_count(out, move || {
        value.ok_or((
            PathhomStatus::InvalidArgument,
            format!("k = {k} is not in 1..={len}"),
        ))
    })
}

/// Releases an epispectrum handle. Null is ignored.
///
/// # Safety
/// `spectrum` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn pathhom_spectrum_free(spectrum: *mut PathhomSpectrum) {
    if !spectrum.is_null() {
        // SAFETY: handle came from Box::into_raw in this library.
        drop(unsafe { Box::from_raw(spectrum) });
    }
}

/// E/N word of the homomorphism `images[0..len]` into `P_k` (`images[0]` must be 1).
/// Free the word with `pathhom_string_free`.
///
/// # Safety
/// `images` must point to `len` readable values and `out_word` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pathhom_encode(
    images: *const u32,
    len: usize,
    k: u32,
    out_word: *mut *mut c_char,
) -> PathhomStatus {
    if images.is_null() || out_word.is_null() {
        return fail(PathhomStatus::NullPointer, "null argument");
    }
    // SAFETY: caller guarantees `len` readable elements.
    let images = unsafe { std::slice::from_raw_parts(images, len) }.to_vec();
    let out = out_word as usize;
    guard(move || {
        let f = PathHom::new(images, k).map_err(lib_err)?;
        let w = encode_hom(&f).map_err(lib_err)?;
        emit_string(out as *mut *mut c_char, w.to_string())
    })
}

/// Decodes an E/N word into images `f(1), ..., f(n)` in `P_k`.
///
/// Writes `n` to `out_len`. If `cap < n` nothing is copied and
/// `BUFFER_TOO_SMALL` is returned, so the call can be repeated with a larger buffer.
///
/// # Safety
/// `word` must be a NUL-terminated string, `out_images` must have `cap` writable slots and `out_len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pathhom_decode(
    word: *const c_char,
    k: u32,
    out_images: *mut u32,
    cap: usize,
    out_len: *mut usize,
) -> PathhomStatus {
    if word.is_null() || out_len.is_null() || (out_images.is_null() && cap > 0) {
        return fail(PathhomStatus::NullPointer, "null argument");
    }
    let (images_addr, len_addr) = (out_images as usize, out_len as usize);
    guard(move || {
        positive("k", k)?;
        let w: LatticeWord = read_str(word)?.parse().map_err(lib_err)?;
        let f = decode_word(&w, k).map_err(lib_err)?;
        let images = f.images();
        // SAFETY: checked non-null above.
        unsafe { *(len_addr as *mut usize) = images.len() };
        if images.len() > cap {
            return Err((
                PathhomStatus::BufferTooSmall,
                format!("need {} slots, got {cap}", images.len()),
            ));
        }
        // SAFETY: caller guarantees `cap` writable slots.
        unsafe { ptr::copy_nonoverlapping(images.as_ptr(), images_addr as *mut u32, images.len()) };
        Ok(())
    })
}

/// The two block arrangements of a partition such as `"{1,3}{2}"`, written as
/// `"<first> <second>"`. Returns `INVALID` (with the reason in
/// `pathhom_last_error`) if the partition is not induced by an epimorphism.
///
/// # Safety
/// `partition` must be a NUL-terminated string and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pathhom_arrange(
    partition: *const c_char,
    out: *mut *mut c_char,
) -> PathhomStatus {
    if partition.is_null() || out.is_null() {
        return fail(PathhomStatus::NullPointer, "null argument");
    }
    let out = out as usize;
    guard(move || {
        let p: SetPartition = read_str(partition)?.parse().map_err(lib_err)?;
        let r = arrangements(&p);
        if let Some(why) = r.failure {
            return Err((PathhomStatus::Invalid, why.to_string()));
        }
        let text: Vec<String> = r.orderings.iter().map(|o| format_ordering(&p, o)).collect();
        emit_string(out as *mut *mut c_char, text.join(" "))
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn pathhom_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: string came from CString::into_raw in this library.
        drop(unsafe { CString::from_raw(s) });
    }
}

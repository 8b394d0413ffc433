//! C ABI over `om-core`.
//!
//! Objects are opaque handles released with the matching `_free` function.
//! Every fallible call returns an [`OmStatus`]; on failure the message is
//! available from [`om_last_error_message`] on the same thread. Strings
//! returned through out-parameters are owned by the caller and released
//! with [`om_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use om_core::chirotope::{check_chirotope_with, VectorConfig};
use om_core::covector::face_census_with;
use om_core::hyperline::{check_hyperline_with, from_chirotope, to_chirotope_with};
use om_core::io::{chi, hls_json, vecfile};
use om_core::{Chirotope, Hls, Limits, OmError};

/// Opaque chirotope handle.
pub struct OmChirotope(Chirotope);

/// Opaque hyperline sequence handle.
pub struct OmHls(Hls);

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OmStatus {
    Ok = 0,
    Usage = 1,
    Parse = 2,
    Realization = 3,
    Deletion = 4,
    NoDeletableElement = 5,
    Contraction = 6,
    SizeGuard = 7,
    Invalid = 8,
    Construction = 9,
    Internal = 10,
    Io = 11,
    NullPointer = 12,
    Utf8 = 13,
    Panic = 14,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OmFaceCensus {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub euler: i64,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &OmError) -> OmStatus {
    match e {
        OmError::Usage(_) => OmStatus::Usage,
        OmError::Parse { .. } => OmStatus::Parse,
        OmError::Realization(_) => OmStatus::Realization,
        OmError::Deletion { .. } => OmStatus::Deletion,
        OmError::NoDeletableElement => OmStatus::NoDeletableElement,
        OmError::Contraction(_) => OmStatus::Contraction,
        OmError::SizeGuard(_) => OmStatus::SizeGuard,
        OmError::Invalid(_) => OmStatus::Invalid,
        OmError::Construction(_) => OmStatus::Construction,
        OmError::Internal(_) => OmStatus::Internal,
        OmError::Io(_) => OmStatus::Io,
    }
}

struct Fail(OmStatus, String);

impl From<OmError> for Fail {
    fn from(e: OmError) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> OmStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            OmStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("panic inside om-ffi");
            OmStatus::Panic
        }
    }
}

fn null() -> Fail {
    Fail(OmStatus::NullPointer, "null pointer argument".into())
}

unsafe fn as_str<'a>(s: *const c_char) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(null());
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Fail(OmStatus::Utf8, "input is not valid UTF-8".into()))
}

unsafe fn handle<'a, T>(h: *const T) -> Result<&'a T, Fail> {
    h.as_ref().ok_or_else(null)
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null());
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null());
    }
    let c = CString::new(s).map_err(|_| Fail(OmStatus::Internal, "interior NUL".into()))?;
    *out = c.into_raw();
    Ok(())
}

unsafe fn ids<'a>(ptr: *const u32, len: usize) -> Result<&'a [u32], Fail> {
    if len == 0 {
        return Ok(&[]);
    }
    if ptr.is_null() {
        return Err(null());
    }
    Ok(std::slice::from_raw_parts(ptr, len))
}

/// Message of the last failed call on this thread; empty after a success.
/// Valid until the next `om_` call on the same thread.
#[no_mangle]
pub extern "C" fn om_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn om_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a chirotope file (`"r n\n<body>\n"`) and checks the axioms.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn om_chirotope_parse(
    text: *const c_char,
    out: *mut *mut OmChirotope,
) -> OmStatus {
    guard(|| {
        let m = chi::parse(as_str(text)?)?;
        put(
            out,
            OmChirotope(Chirotope::new_with(m, &Limits::from_env())?),
        )
    })
}

/// Chirotope of a CSV vector configuration (integers or `p/q`).
///
/// # Safety
/// `csv` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn om_chirotope_from_vectors(
    csv: *const c_char,
    out: *mut *mut OmChirotope,
) -> OmStatus {
    guard(|| {
        let v: VectorConfig = vecfile::parse(as_str(csv)?)?;
        put(out, OmChirotope(v.chirotope()?))
    })
}

/// Checks the chirotope axioms on a chirotope file without requiring them
/// to hold. `*valid` is set and `*report` receives the report text.
///
/// # Safety
/// `text` must be a NUL-terminated string; `valid` and `report` writable.
#[no_mangle]
pub unsafe extern "C" fn om_sign_map_check(
    text: *const c_char,
    valid: *mut bool,
    report: *mut *mut c_char,
) -> OmStatus {
    guard(|| {
        let m = chi::parse(as_str(text)?)?;
        let r = check_chirotope_with(&m, &Limits::from_env())?;
        if valid.is_null() {
            return Err(null());
        }
        *valid = r.is_valid();
        put_string(report, r.to_string())
    })
}

/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn om_chirotope_serialize(
    h: *const OmChirotope,
    out: *mut *mut c_char,
) -> OmStatus {
    guard(|| put_string(out, chi::serialize(handle(h)?.0.as_map())))
}

/// Rank, or 0 for a null handle.
///
/// # Safety
/// `h` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn om_chirotope_rank(h: *const OmChirotope) -> usize {
    h.as_ref().map_or(0, |h| h.0.rank())
}

/// Ground set size, or 0 for a null handle.
///
/// # Safety
/// `h` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn om_chirotope_size(h: *const OmChirotope) -> usize {
    h.as_ref().map_or(0, |h| h.0.n())
}

/// Writes the original element id of each position into `labels`, which
/// must have room for `om_chirotope_size(h)` entries.
///
/// # Safety
/// `h` must be a live handle; `labels` must be writable for that many ids.
#[no_mangle]
pub unsafe extern "C" fn om_chirotope_labels(h: *const OmChirotope, labels: *mut u32) -> OmStatus {
    guard(|| {
        let h = handle(h)?;
        if labels.is_null() {
            return Err(null());
        }
        let src = h.0.labels();
        ptr::copy_nonoverlapping(src.as_ptr(), labels, src.len());
        Ok(())
    })
}

/// # Safety
/// `h` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn om_chirotope_free(h: *mut OmChirotope) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Deletes the listed element ids. Fails with `Invalid` if the result is
/// not a chirotope.
///
/// # Safety
/// `h` must be a live handle; `ids_` must point to `len` ids.
#[no_mangle]
pub unsafe extern "C" fn om_chirotope_delete(
    h: *const OmChirotope,
    ids_: *const u32,
    len: usize,
    out: *mut *mut OmChirotope,
) -> OmStatus {
    guard(|| {
        let d = handle(h)?
            .0
            .delete_with(ids(ids_, len)?, &Limits::from_env())?;
        put(out, OmChirotope(d.into_chirotope()?))
    })
}

/// Smallest element whose deletion keeps a chirotope of the same rank.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn om_chirotope_find_deletable(
    h: *const OmChirotope,
    out: *mut u32,
) -> OmStatus {
    guard(|| {
        let e = handle(h)?.0.find_deletable_with(&Limits::from_env())?;
        if out.is_null() {
            return Err(null());
        }
        *out = e;
        Ok(())
    })
}

/// # Safety
/// `h` must be a live handle; `ids_` must point to `len` ids.
#[no_mangle]
pub unsafe extern "C" fn om_chirotope_contract(
    h: *const OmChirotope,
    ids_: *const u32,
    len: usize,
    out: *mut *mut OmChirotope,
) -> OmStatus {
    guard(|| {
        let c = handle(h)?.0.contract(ids(ids_, len)?)?;
        put(out, OmChirotope(c))
    })
}

/// Vertex, edge and face counts of a rank-3 chirotope.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn om_chirotope_face_census(
    h: *const OmChirotope,
    out: *mut OmFaceCensus,
) -> OmStatus {
    guard(|| {
        let c = face_census_with(&handle(h)?.0, &Limits::from_env())?;
        if out.is_null() {
            return Err(null());
        }
        *out = OmFaceCensus {
            vertices: c.vertices,
            edges: c.edges,
            faces: c.faces,
            euler: c.euler,
        };
        Ok(())
    })
}

/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn om_chirotope_to_hls(
    h: *const OmChirotope,
    out: *mut *mut OmHls,
) -> OmStatus {
    guard(|| put(out, OmHls(from_chirotope(&handle(h)?.0)?)))
}

/// Parses hyperline JSON. The axioms are not checked; see `om_hls_check`.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn om_hls_parse(json: *const c_char, out: *mut *mut OmHls) -> OmStatus {
    guard(|| put(out, OmHls(hls_json::parse(as_str(json)?)?)))
}

/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn om_hls_serialize(h: *const OmHls, out: *mut *mut c_char) -> OmStatus {
    guard(|| put_string(out, hls_json::serialize(&handle(h)?.0)))
}

/// # Safety
/// `h` must be a live handle; `valid` and `report` must be writable.
#[no_mangle]
pub unsafe extern "C" fn om_hls_check(
    h: *const OmHls,
    valid: *mut bool,
    report: *mut *mut c_char,
) -> OmStatus {
    guard(|| {
        let r = check_hyperline_with(&handle(h)?.0, &Limits::from_env())?;
        if valid.is_null() {
            return Err(null());
        }
        *valid = r.is_valid();
        put_string(report, r.to_string())
    })
}

/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn om_hls_to_chirotope(
    h: *const OmHls,
    out: *mut *mut OmChirotope,
) -> OmStatus {
    guard(|| {
        put(
            out,
            OmChirotope(to_chirotope_with(&handle(h)?.0, &Limits::from_env())?),
        )
    })
}

/// # Safety
/// `h` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn om_hls_free(h: *mut OmHls) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

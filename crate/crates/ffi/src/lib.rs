//! C ABI over the cluster-category library: opaque quiver handles, status
//! codes, and a thread-local last-error message. The header is generated
//! into `include/clustercat.h` at build time.
//!
//! Every entry point catches panics; internal invariant violations surface
//! as `CC_STATUS_INTERNAL` together with a message.

use clustercat::cluster::{enumerate_tilting_sets, ind_cluster, k0_quotient, K0Auto};
use clustercat::quiver::ValuedQuiver;
use clustercat::quiverfile::parse_quiver;
use clustercat::rep::Catalog;
use clustercat::verify::full_verification;
use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: impl Into<String>) {
    let message = message.into().replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(message).unwrap_or_default();
    });
}

/// Status codes returned by every fallible call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CcStatus {
    CcStatusOk = 0,
    CcStatusInvalidArgument = 1,
    CcStatusParseError = 2,
    CcStatusNotFiniteType = 3,
    CcStatusNotSimplyLaced = 4,
    CcStatusVerifyFailed = 5,
    CcStatusBufferTooSmall = 6,
    CcStatusInternal = 7,
}

/// Automorphism selector for Grothendieck-group quotients.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CcAuto {
    CcAutoOrbit = 0,
    CcAutoShiftTwo = 1,
    CcAutoIdentity = 2,
}

/// Opaque handle: a parsed quiver with a lazily built catalog.
pub struct CcQuiver {
    quiver: Arc<ValuedQuiver>,
    catalog: RefCell<Option<Arc<Catalog>>>,
}

impl CcQuiver {
    fn catalog(&self) -> Result<Arc<Catalog>, CcStatus> {
        if let Some(cat) = self.catalog.borrow().as_ref() {
            return Ok(cat.clone());
        }
        if !self.quiver.is_simply_laced() {
            set_error("operation needs a simply-laced quiver");
            return Err(CcStatus::CcStatusNotSimplyLaced);
        }
        if !self.quiver.cartan().is_finite_type() {
            set_error("operation needs a finite-type quiver");
            return Err(CcStatus::CcStatusNotFiniteType);
        }
        match Catalog::build(self.quiver.clone()) {
            Ok(cat) => {
                let cat = Arc::new(cat);
                *self.catalog.borrow_mut() = Some(cat.clone());
                Ok(cat)
            }
            Err(e) => {
                set_error(e.to_string());
                Err(CcStatus::CcStatusInternal)
            }
        }
    }
}

fn guard<F: FnOnce() -> CcStatus>(f: F) -> CcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(payload) => {
            let message = payload
                .downcast_ref::<String>()
                .map(String::as_str)
                .or_else(|| payload.downcast_ref::<&str>().copied())
                .unwrap_or("internal panic");
            set_error(message);
            CcStatus::CcStatusInternal
        }
    }
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn cc_version() -> *const c_char {
    concat!("clustercat ", env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Copy the last error message for this thread into `buf`; returns the
/// message length (excluding the terminator). A zero `cap` queries the
/// required size.
///
/// # Safety
/// `buf` must point to `cap` writable bytes, or be null when `cap` is zero.
#[no_mangle]
pub unsafe extern "C" fn cc_last_error_message(buf: *mut c_char, cap: usize) -> usize {
    LAST_ERROR.with(|slot| {
        let msg = slot.borrow();
        let bytes = msg.as_bytes_with_nul();
        if cap >= bytes.len() && !buf.is_null() {
            std::ptr::copy_nonoverlapping(bytes.as_ptr() as *const c_char, buf, bytes.len());
        }
        bytes.len() - 1
    })
}

/// Parse quiver text into a new handle. On success `*out` owns the handle
/// and must be released with `cc_quiver_free`.
///
/// # Safety
/// `text` must be a valid NUL-terminated string; `out` must be a valid
/// pointer to a handle slot.
#[no_mangle]
pub unsafe extern "C" fn cc_quiver_parse(text: *const c_char, out: *mut *mut CcQuiver) -> CcStatus {
    guard(|| {
        if text.is_null() || out.is_null() {
            set_error("null argument");
            return CcStatus::CcStatusInvalidArgument;
        }
        let Ok(text) = CStr::from_ptr(text).to_str() else {
            set_error("quiver text is not valid UTF-8");
            return CcStatus::CcStatusInvalidArgument;
        };
        match parse_quiver(text) {
            Ok(q) => {
                let handle = Box::new(CcQuiver {
                    quiver: Arc::new(q),
                    catalog: RefCell::new(None),
                });
                *out = Box::into_raw(handle);
                CcStatus::CcStatusOk
            }
            Err(e) => {
                set_error(e.to_string());
                CcStatus::CcStatusParseError
            }
        }
    })
}

/// Release a handle returned by `cc_quiver_parse`. Null is ignored.
///
/// # Safety
/// `q` must be a handle from `cc_quiver_parse`, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cc_quiver_free(q: *mut CcQuiver) {
    if !q.is_null() {
        drop(Box::from_raw(q));
    }
}

/// Number of vertices.
///
/// # Safety
/// `q` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn cc_quiver_rank(q: *const CcQuiver) -> usize {
    if q.is_null() {
        return 0;
    }
    (*q).quiver.rank()
}

/// Number of positive roots; requires finite type.
///
/// # Safety
/// `q` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cc_positive_root_count(q: *const CcQuiver, out: *mut usize) -> CcStatus {
    guard(|| {
        if q.is_null() || out.is_null() {
            set_error("null argument");
            return CcStatus::CcStatusInvalidArgument;
        }
        match (*q).quiver.cartan().positive_roots() {
            Ok(roots) => {
                *out = roots.len();
                CcStatus::CcStatusOk
            }
            Err(e) => {
                set_error(e.to_string());
                CcStatus::CcStatusNotFiniteType
            }
        }
    })
}

/// Number of cluster-category indecomposables; requires a simply-laced
/// finite-type quiver.
///
/// # Safety
/// `q` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cc_cluster_indecomposable_count(
    q: *const CcQuiver,
    out: *mut usize,
) -> CcStatus {
    guard(|| {
        if q.is_null() || out.is_null() {
            set_error("null argument");
            return CcStatus::CcStatusInvalidArgument;
        }
        match (*q).catalog() {
            Ok(cat) => {
                *out = ind_cluster(&cat).len();
                CcStatus::CcStatusOk
            }
            Err(status) => status,
        }
    })
}

/// Number of tilting sets; requires a simply-laced finite-type quiver.
///
/// # Safety
/// `q` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cc_tilting_set_count(q: *const CcQuiver, out: *mut usize) -> CcStatus {
    guard(|| {
        if q.is_null() || out.is_null() {
            set_error("null argument");
            return CcStatus::CcStatusInvalidArgument;
        }
        match (*q).catalog() {
            Ok(cat) => {
                *out = enumerate_tilting_sets(&cat).len();
                CcStatus::CcStatusOk
            }
            Err(status) => status,
        }
    })
}

/// Invariant factors of the orbit-category Grothendieck group, written into
/// `buf`. `*written` receives the count; the required capacity is the rank.
///
/// # Safety
/// `q` must be a live handle; `buf` must hold `cap` entries; `written` must
/// be writable.
#[no_mangle]
pub unsafe extern "C" fn cc_k0_invariant_factors(
    q: *const CcQuiver,
    auto: CcAuto,
    buf: *mut i64,
    cap: usize,
    written: *mut usize,
) -> CcStatus {
    guard(|| {
        if q.is_null() || written.is_null() {
            set_error("null argument");
            return CcStatus::CcStatusInvalidArgument;
        }
        let choice = match auto {
            CcAuto::CcAutoOrbit => K0Auto::F,
            CcAuto::CcAutoShiftTwo => K0Auto::ShiftTwo,
            CcAuto::CcAutoIdentity => K0Auto::Identity,
        };
        let quotient = k0_quotient(&(*q).quiver, choice);
        *written = quotient.factors.len();
        if quotient.factors.len() > cap {
            set_error(format!("buffer holds {cap}, need {}", quotient.factors.len()));
            return CcStatus::CcStatusBufferTooSmall;
        }
        if !buf.is_null() {
            for (i, f) in quotient.factors.iter().enumerate() {
                *buf.add(i) = *f;
            }
        }
        CcStatus::CcStatusOk
    })
}

/// Run the full invariant suite.
///
/// # Safety
/// `q` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn cc_verify(q: *const CcQuiver) -> CcStatus {
    guard(|| {
        if q.is_null() {
            set_error("null argument");
            return CcStatus::CcStatusInvalidArgument;
        }
        let suites = full_verification(&(*q).quiver);
        let failed: Vec<String> = suites
            .iter()
            .filter(|s| !s.passed())
            .map(|s| format!("{}: {} failures", s.name, s.failures.len()))
            .collect();
        if failed.is_empty() {
            CcStatus::CcStatusOk
        } else {
            set_error(failed.join("; "));
            CcStatus::CcStatusVerifyFailed
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(text: &str) -> *mut CcQuiver {
        let c = CString::new(text).unwrap();
        let mut handle: *mut CcQuiver = std::ptr::null_mut();
        let status = unsafe { cc_quiver_parse(c.as_ptr(), &mut handle) };
        assert_eq!(status, CcStatus::CcStatusOk);
        handle
    }

    #[test]
    fn parse_counts_and_free() {
        let q = parse("1 -> 2\n2 -> 3");
        unsafe {
            assert_eq!(cc_quiver_rank(q), 3);
            let mut roots = 0usize;
            assert_eq!(cc_positive_root_count(q, &mut roots), CcStatus::CcStatusOk);
            assert_eq!(roots, 6);
            let mut ind = 0usize;
            assert_eq!(cc_cluster_indecomposable_count(q, &mut ind), CcStatus::CcStatusOk);
            assert_eq!(ind, 9);
            let mut tilting = 0usize;
            assert_eq!(cc_tilting_set_count(q, &mut tilting), CcStatus::CcStatusOk);
            assert_eq!(tilting, 14);
            assert_eq!(cc_verify(q), CcStatus::CcStatusOk);
            cc_quiver_free(q);
        }
    }

    #[test]
    fn parse_errors_set_message() {
        let c = CString::new("1 -> 2\n2 -> 1").unwrap();
        let mut handle: *mut CcQuiver = std::ptr::null_mut();
        let status = unsafe { cc_quiver_parse(c.as_ptr(), &mut handle) };
        assert_eq!(status, CcStatus::CcStatusParseError);
        let mut buf = vec![0u8; 256];
        let len = unsafe { cc_last_error_message(buf.as_mut_ptr() as *mut c_char, buf.len()) };
        assert!(len > 0);
    }

    #[test]
    fn k0_factors_roundtrip() {
        let q = parse("1 -> 2 [1 3]");
        unsafe {
            let mut buf = [0i64; 8];
            let mut written = 0usize;
            let status =
                cc_k0_invariant_factors(q, CcAuto::CcAutoOrbit, buf.as_mut_ptr(), 8, &mut written);
            assert_eq!(status, CcStatus::CcStatusOk);
            assert_eq!(&buf[..written], &[1, 3]);
            let shift = cc_k0_invariant_factors(
                q,
                CcAuto::CcAutoShiftTwo,
                buf.as_mut_ptr(),
                8,
                &mut written,
            );
            assert_eq!(shift, CcStatus::CcStatusOk);
            assert_eq!(&buf[..written], &[0, 0]);
            // Buffer probing.
            let mut needed = 0usize;
            let small = cc_k0_invariant_factors(
                q,
                CcAuto::CcAutoOrbit,
                std::ptr::null_mut(),
                0,
                &mut needed,
            );
            assert_eq!(small, CcStatus::CcStatusBufferTooSmall);
            assert_eq!(needed, 2);
            cc_quiver_free(q);
        }
    }

    #[test]
    fn non_simply_laced_catalog_refused() {
        let q = parse("1 -> 2 [1 2]");
        unsafe {
            let mut out = 0usize;
            assert_eq!(
                cc_cluster_indecomposable_count(q, &mut out),
                CcStatus::CcStatusNotSimplyLaced
            );
            // Root counts still work at the combinatorial level.
            assert_eq!(cc_positive_root_count(q, &mut out), CcStatus::CcStatusOk);
            assert_eq!(out, 4);
            cc_quiver_free(q);
        }
    }

    #[test]
    fn version_is_terminated() {
        let v = unsafe { CStr::from_ptr(cc_version()) };
        assert!(v.to_str().unwrap().starts_with("clustercat"));
    }
}

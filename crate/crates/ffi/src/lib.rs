//! C ABI over `lorentz-core`.
//!
//! Objects are opaque heap handles released by their `*_free` function.
//! Every fallible call returns an [`LvStatus`]; on failure a description is
//! available from [`lv_last_error_message`] on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use lorentz_core::catalog::standard_subalgebra;
use lorentz_core::forms::{invariant_sym_forms, lorentz_certificate, quotient_rep, VerdictTag};
use lorentz_core::lie::{make_so, LieAlgebra};
use lorentz_core::verify::run_all;
use lorentz_core::{signature, Error, Mat};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LvStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    NotSymmetric = 4,
    Unsupported = 5,
    Internal = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LvVerdictTag {
    Found = 0,
    None = 1,
    Undetermined = 2,
}

#[repr(C)]
#[derive(Clone, Copy, Debug)]
pub struct LvVerdict {
    pub tag: LvVerdictTag,
    /// Dimension of the space of invariant symmetric forms.
    pub form_space_dim: usize,
    pub quotient_dim: usize,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LvSignature {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

/// An algebra so(p,q).
pub struct LvAlgebra {
    inner: LieAlgebra,
}

/// A dense matrix of exact rationals.
pub struct LvMatrix {
    inner: Mat,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior nul removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> LvStatus {
    match e {
        Error::Format(_) => LvStatus::Parse,
        Error::NotSymmetric => LvStatus::NotSymmetric,
        Error::Unsupported { .. } => LvStatus::Unsupported,
        Error::Invariant(_) => LvStatus::Internal,
        _ => LvStatus::InvalidArgument,
    }
}

fn fail(status: LvStatus, msg: &str) -> LvStatus {
    set_error(msg);
    status
}

fn guard(f: impl FnOnce() -> Result<(), (LvStatus, String)>) -> LvStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            LvStatus::Ok
        }
        Ok(Err((s, msg))) => fail(s, &msg),
        Err(_) => fail(LvStatus::Panic, "panic inside lorentz-core"),
    }
}

fn core_err(e: Error) -> (LvStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (LvStatus, String) {
    (LvStatus::NullPointer, format!("{what} is null"))
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, (LvStatus, String)> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| (LvStatus::InvalidArgument, format!("{what} is not UTF-8")))
}

fn into_c_string(s: String) -> Result<*mut c_char, (LvStatus, String)> {
    CString::new(s).map(CString::into_raw).map_err(|_| (LvStatus::Internal, "string contains nul".into()))
}

/// Message for the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next call into this library on the thread.
#[no_mangle]
pub extern "C" fn lv_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Creates so(p,q) with `p + q >= 2`.
///
/// # Safety
/// `out` must be a valid pointer to writable storage.
#[no_mangle]
pub unsafe extern "C" fn lv_algebra_new_so(p: u32, q: u32, out: *mut *mut LvAlgebra) -> LvStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let g = make_so(p as usize, q as usize).map_err(core_err)?;
        *out = Box::into_raw(Box::new(LvAlgebra { inner: g }));
        Ok(())
    })
}

/// # Safety
/// `alg` must come from [`lv_algebra_new_so`] and not be freed twice; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn lv_algebra_free(alg: *mut LvAlgebra) {
    if !alg.is_null() {
        drop(Box::from_raw(alg));
    }
}

/// # Safety
/// `alg` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lv_algebra_dim(alg: *const LvAlgebra, out: *mut usize) -> LvStatus {
    guard(|| {
        let alg = alg.as_ref().ok_or_else(|| null("alg"))?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        *out = alg.inner.dim();
        Ok(())
    })
}

/// Killing form in the standard basis, as a new matrix handle.
///
/// # Safety
/// `alg` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lv_killing_form(alg: *const LvAlgebra, out: *mut *mut LvMatrix) -> LvStatus {
    guard(|| {
        let alg = alg.as_ref().ok_or_else(|| null("alg"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let k = alg.inner.killing_form().map_err(core_err)?;
        *out = Box::into_raw(Box::new(LvMatrix { inner: k }));
        Ok(())
    })
}

/// Parses `"rows cols"` followed by the entries, e.g. `"2 2\n1 0\n0 -1/2"`.
///
/// # Safety
/// `text` must be a nul-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lv_matrix_from_text(text: *const c_char, out: *mut *mut LvMatrix) -> LvStatus {
    guard(|| {
        let s = read_str(text, "text")?;
        if out.is_null() {
            return Err(null("out"));
        }
        let m = Mat::from_text(s).map_err(|e| core_err(e.into()))?;
        *out = Box::into_raw(Box::new(LvMatrix { inner: m }));
        Ok(())
    })
}

/// Text form of a matrix; release with [`lv_string_free`].
///
/// # Safety
/// `m` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lv_matrix_to_text(m: *const LvMatrix, out: *mut *mut c_char) -> LvStatus {
    guard(|| {
        let m = m.as_ref().ok_or_else(|| null("m"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = into_c_string(m.inner.to_text())?;
        Ok(())
    })
}

/// # Safety
/// `m` and the out pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn lv_matrix_shape(m: *const LvMatrix, rows: *mut usize, cols: *mut usize) -> LvStatus {
    guard(|| {
        let m = m.as_ref().ok_or_else(|| null("m"))?;
        let rows = rows.as_mut().ok_or_else(|| null("rows"))?;
        let cols = cols.as_mut().ok_or_else(|| null("cols"))?;
        *rows = m.inner.rows();
        *cols = m.inner.cols();
        Ok(())
    })
}

/// # Safety
/// `m` must come from this library and not be freed twice; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn lv_matrix_free(m: *mut LvMatrix) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// # Safety
/// `s` must be a string returned by this library and not freed twice; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn lv_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Inertia of a symmetric matrix.
///
/// # Safety
/// `m` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lv_matrix_signature(m: *const LvMatrix, out: *mut LvSignature) -> LvStatus {
    guard(|| {
        let m = m.as_ref().ok_or_else(|| null("m"))?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        let s = signature(&m.inner).map_err(core_err)?;
        *out = LvSignature { positive: s.n_pos, negative: s.n_neg, zero: s.n_zero };
        Ok(())
    })
}

/// Decides whether `alg / h` carries an invariant Minkowski form, for a
/// catalog subalgebra named `h_name` (for instance `"so(1,4)"`).
///
/// # Safety
/// `alg` must be a live handle, `h_name` nul-terminated and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lv_quotient_verdict(
    alg: *const LvAlgebra,
    h_name: *const c_char,
    out: *mut LvVerdict,
) -> LvStatus {
    guard(|| {
        let alg = alg.as_ref().ok_or_else(|| null("alg"))?;
        let name = read_str(h_name, "h_name")?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        let g = &alg.inner;
        let h = standard_subalgebra(g, name).map_err(core_err)?;
        let qr = quotient_rep(g, &h).map_err(core_err)?;
        let space = invariant_sym_forms(&qr);
        let v = lorentz_certificate(&space);
        let tag = match v.tag {
            VerdictTag::Found => LvVerdictTag::Found,
            VerdictTag::None => LvVerdictTag::None,
            VerdictTag::Undetermined => LvVerdictTag::Undetermined,
        };
        *out = LvVerdict { tag, form_space_dim: space.dim(), quotient_dim: qr.dim_quotient() };
        Ok(())
    })
}

/// Full check report as JSON; release with [`lv_string_free`].
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lv_run_all_json(max_n: u32, seed: u64, out: *mut *mut c_char) -> LvStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let report = run_all(max_n as usize, seed).map_err(core_err)?;
        *out = into_c_string(report.to_json())?;
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ptr;

    fn last_error() -> String {
        unsafe { CStr::from_ptr(lv_last_error_message()) }.to_string_lossy().into_owned()
    }

    #[test]
    fn error_message_tracks_last_call() {
        let mut alg = ptr::null_mut();
        assert_eq!(unsafe { lv_algebra_new_so(0, 1, &mut alg) }, LvStatus::InvalidArgument);
        assert!(!last_error().is_empty());
        assert_eq!(unsafe { lv_algebra_new_so(1, 2, &mut alg) }, LvStatus::Ok);
        assert!(last_error().is_empty());
        unsafe { lv_algebra_free(alg) };
    }

    #[test]
    fn status_mapping() {
        assert_eq!(status_of(&Error::NotSymmetric), LvStatus::NotSymmetric);
        assert_eq!(status_of(&Error::Invariant("x".into())), LvStatus::Internal);
    }
}

//! C ABI for periplectiq.
//!
//! Objects cross the boundary as opaque handles that the caller frees with
//! the matching `*_free` function. Every fallible call returns a
//! [`PqStatus`] and writes its result through an out-pointer; on failure
//! [`pq_last_error`] describes what went wrong. Strings returned by the
//! library are NUL-terminated UTF-8 and must be released with
//! [`pq_string_free`].

use periplectiq::cli::{self, Command, Common, Format, Report};
use periplectiq::qbrauer::Convention;
use periplectiq::qrat::RatFunc;
use periplectiq::tensorrep::TensorModule;
use periplectiq::Error;
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PqStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    ShapeError = 3,
    SymmetrizerDegenerate = 4,
    PatternError = 5,
    CertificateFailure = 6,
    ParseError = 7,
    DivisionByZero = 8,
    PoleAtOne = 9,
    Panic = 10,
}

impl From<&Error> for PqStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::DivisionByZero => PqStatus::DivisionByZero,
            Error::PoleAtOne => PqStatus::PoleAtOne,
            Error::ShapeError(_) => PqStatus::ShapeError,
            Error::SymmetrizerDegenerate(_) => PqStatus::SymmetrizerDegenerate,
            Error::PatternError(_) => PqStatus::PatternError,
            Error::CertificateFailure(_) => PqStatus::CertificateFailure,
            Error::Parse(_) => PqStatus::ParseError,
        }
    }
}

/// Which report [`pq_report_new`] builds.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PqCommand {
    Relations = 0,
    Maximal = 1,
    Decompose = 2,
    Character = 3,
}

/// Parameters for [`pq_report_new`]. `tableau` and `pattern` may be NULL.
#[repr(C)]
#[derive(Clone, Copy, Debug)]
pub struct PqOptions {
    pub n: u32,
    pub k: u32,
    pub mutate: bool,
    pub tableau: *const c_char,
    pub pattern: *const c_char,
    /// Read `σ_{r,s}` left to right instead of the default right to left.
    pub left_to_right: bool,
}

/// `V⊗k` with its generator actions.
pub struct PqModule(TensorModule);

/// A command report: JSON, text and a pass flag.
pub struct PqReport(Report);

/// An element of `Q(q)`.
pub struct PqRatFunc(RatFunc);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let s = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(s));
}

struct Fail(PqStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(PqStatus::from(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> PqStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => PqStatus::Ok,
        Ok(Err(Fail(code, msg))) => {
            set_error(msg);
            code
        }
        Err(p) => {
            let msg = p.downcast_ref::<&str>().map(|s| s.to_string()).or_else(|| p.downcast_ref::<String>().cloned()).unwrap_or_else(|| "panic".into());
            set_error(format!("internal panic: {msg}"));
            PqStatus::Panic
        }
    }
}

fn null(what: &str) -> Fail {
    Fail(PqStatus::NullPointer, format!("{what} is NULL"))
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn write<T>(out: *mut T, v: T, what: &str) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(v);
    Ok(())
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<Option<&'a str>, Fail> {
    if s.is_null() {
        return Ok(None);
    }
    CStr::from_ptr(s).to_str().map(Some).map_err(|_| Fail(PqStatus::InvalidArgument, format!("{what} is not UTF-8")))
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("NUL bytes replaced").into_raw()
}

fn boxed<T>(v: T) -> *mut T {
    Box::into_raw(Box::new(v))
}

/// Library version as a static string; never NULL, never freed.
#[no_mangle]
pub extern "C" fn pq_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message for the last failed call on this thread, or NULL. Valid until the
/// next call into the library from this thread.
#[no_mangle]
pub extern "C" fn pq_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Frees a string returned by the library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn pq_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

// rational functions

/// Parses `q^2 + 1 + q^-2`, `(q - 1)/(q + 1)` and similar.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pq_ratfunc_parse(text: *const c_char, out: *mut *mut PqRatFunc) -> PqStatus {
    guard(|| {
        let s = read_str(text, "text")?.ok_or_else(|| null("text"))?;
        let r: RatFunc = s.parse()?;
        write(out, boxed(PqRatFunc(r)), "out")
    })
}

/// # Safety
/// `r` must come from this library and not have been freed. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn pq_ratfunc_free(r: *mut PqRatFunc) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// Canonical text form; free with [`pq_string_free`].
///
/// # Safety
/// `r` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pq_ratfunc_to_string(r: *const PqRatFunc, out: *mut *mut c_char) -> PqStatus {
    guard(|| {
        let r = deref(r, "r")?;
        write(out, c_string(r.0.to_string()), "out")
    })
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PqOp {
    Add = 0,
    Sub = 1,
    Mul = 2,
    Div = 3,
}

/// `*out = a op b`.
///
/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pq_ratfunc_binop(op: PqOp, a: *const PqRatFunc, b: *const PqRatFunc, out: *mut *mut PqRatFunc) -> PqStatus {
    guard(|| {
        let (a, b) = (&deref(a, "a")?.0, &deref(b, "b")?.0);
        let r = match op {
            PqOp::Add => a + b,
            PqOp::Sub => a - b,
            PqOp::Mul => a * b,
            PqOp::Div => a.div(b)?,
        };
        write(out, boxed(PqRatFunc(r)), "out")
    })
}

/// Value at `q = 1` as a rational `num/den` string.
///
/// # Safety
/// `r` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pq_ratfunc_eval_at_one(r: *const PqRatFunc, out: *mut *mut c_char) -> PqStatus {
    guard(|| {
        let v = deref(r, "r")?.0.eval_at_one()?;
        write(out, c_string(v.to_string()), "out")
    })
}

/// # Safety
/// `r` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pq_ratfunc_is_zero(r: *const PqRatFunc, out: *mut bool) -> PqStatus {
    guard(|| write(out, deref(r, "r")?.0.is_zero(), "out"))
}

// modules

fn check_nk(n: u32, k: u32) -> Result<(usize, usize), Fail> {
    if !(2..=4).contains(&n) || !(1..=4).contains(&k) {
        return Err(Fail(PqStatus::InvalidArgument, format!("need 2 ≤ n ≤ 4 and 1 ≤ k ≤ 4, got n = {n}, k = {k}")));
    }
    Ok((n as usize, k as usize))
}

/// Builds `V⊗k` for `U_q(p_n)`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pq_module_new(n: u32, k: u32, out: *mut *mut PqModule) -> PqStatus {
    guard(|| {
        let (n, k) = check_nk(n, k)?;
        write(out, boxed(PqModule(TensorModule::new(n, k)?)), "out")
    })
}

/// # Safety
/// `m` must come from this library and not have been freed. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn pq_module_free(m: *mut PqModule) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pq_module_dim(m: *const PqModule, out: *mut usize) -> PqStatus {
    guard(|| write(out, deref(m, "m")?.0.dim(), "out"))
}

/// Weight multiplicities as JSON `[{"weight": [...], "multiplicity": m}, ...]`.
///
/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pq_module_character_json(m: *const PqModule, out: *mut *mut c_char) -> PqStatus {
    guard(|| {
        let ch = deref(m, "m")?.0.character();
        write(out, c_string(serde_json::to_string(&ch).expect("character serializes")), "out")
    })
}

// reports

/// Runs one command, as the CLI would, and keeps its report.
///
/// A report whose checks fail is still returned with status `Ok`; query
/// [`pq_report_ok`].
///
/// # Safety
/// `opts` must point to a valid [`PqOptions`] whose string fields are NULL or
/// NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pq_report_new(command: PqCommand, opts: *const PqOptions, out: *mut *mut PqReport) -> PqStatus {
    guard(|| {
        let o = deref(opts, "opts")?;
        let (n, k) = check_nk(o.n, o.k)?;
        let common = Common {
            n: n as u8,
            k: k as u8,
            format: Format::Json,
            out: None,
            mutate: o.mutate,
            tableau: read_str(o.tableau, "tableau")?.map(str::to_owned),
            pattern: read_str(o.pattern, "pattern")?.map(str::to_owned),
            convention: if o.left_to_right { Convention::LeftToRight } else { Convention::RightToLeft },
        };
        let cmd = match command {
            PqCommand::Relations => Command::Relations { common, suites: Vec::new() },
            PqCommand::Maximal => Command::Maximal { common },
            PqCommand::Decompose => Command::Decompose { common },
            PqCommand::Character => Command::Character { common },
        };
        write(out, boxed(PqReport(cli::execute(&cmd)?)), "out")
    })
}

/// # Safety
/// `r` must come from this library and not have been freed. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn pq_report_free(r: *mut PqReport) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// Whether every check in the report passed.
///
/// # Safety
/// `r` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pq_report_ok(r: *const PqReport, out: *mut bool) -> PqStatus {
    guard(|| write(out, deref(r, "r")?.0.ok, "out"))
}

/// Pretty-printed JSON, identical to `--format json` output.
///
/// # Safety
/// `r` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pq_report_json(r: *const PqReport, out: *mut *mut c_char) -> PqStatus {
    guard(|| write(out, c_string(deref(r, "r")?.0.render(Format::Json)), "out"))
}

/// # Safety
/// `r` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pq_report_text(r: *const PqReport, out: *mut *mut c_char) -> PqStatus {
    guard(|| write(out, c_string(deref(r, "r")?.0.render(Format::Text)), "out"))
}

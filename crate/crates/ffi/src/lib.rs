//! C ABI over `cellhecke`.
//!
//! Objects are opaque handles created by `ch_*_new` and released by the
//! matching `ch_*_free`. Every fallible call returns a [`ChStatus`]; on
//! failure the message is available from [`ch_last_error`] on the same
//! thread. Strings handed out by the library are freed with
//! [`ch_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use cellhecke::coeff::{AnyRing, RingDescriptor};
use cellhecke::hecke::{classify, Hecke, SpechtQuotient};
use cellhecke::heckeclifford::{count_super_simples, HeckeClifford, SuperSpecht};
use cellhecke::symgroup::Composition;
use cellhecke::{cli, with_ring, Error};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChStatus {
    Ok = 0,
    InvalidRing = 1,
    InvalidInput = 2,
    NonField = 3,
    SizeLimit = 4,
    Invariant = 5,
    NullPointer = 6,
    Utf8 = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChAlgebraKind {
    Hecke = 0,
    HeckeClifford = 1,
}

/// A coefficient ring.
pub struct ChRing(AnyRing);

/// `H_n` or `H^c_n` over a ring.
pub struct ChAlgebra {
    ring: AnyRing,
    kind: ChAlgebraKind,
    n: usize,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> ChStatus {
    match e {
        Error::InvalidRing(_) => ChStatus::InvalidRing,
        Error::InvalidInput(_) => ChStatus::InvalidInput,
        Error::NonField(_) => ChStatus::NonField,
        Error::SizeLimit(_) => ChStatus::SizeLimit,
        Error::Invariant(_) => ChStatus::Invariant,
    }
}

enum Fail {
    Core(Error),
    Null(&'static str),
    Utf8(&'static str),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Core(e)
    }
}

/// Runs `f`, recording any error or panic.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> ChStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => ChStatus::Ok,
        Ok(Err(Fail::Core(e))) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Ok(Err(Fail::Null(what))) => {
            set_error(format!("null pointer: {what}"));
            ChStatus::NullPointer
        }
        Ok(Err(Fail::Utf8(what))) => {
            set_error(format!("{what} is not valid UTF-8"));
            ChStatus::Utf8
        }
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_error(format!("panic: {msg}"));
            ChStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &'static str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail::Null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Fail::Utf8(what))
}

unsafe fn out_arg<'a, T>(p: *mut T, what: &'static str) -> Result<&'a mut T, Fail> {
    p.as_mut().ok_or(Fail::Null(what))
}

unsafe fn ref_arg<'a, T>(p: *const T, what: &'static str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or(Fail::Null(what))
}

fn give_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("no interior nul").into_raw()
}

fn cap(kind: ChAlgebraKind, n: usize) -> Result<(), Error> {
    let limit = match kind {
        ChAlgebraKind::Hecke => cli::HECKE_CAP,
        ChAlgebraKind::HeckeClifford => cli::HC_CAP,
    };
    if n > limit {
        return Err(Error::SizeLimit(format!("n = {n} exceeds the cap of {limit}")));
    }
    Ok(())
}

/// The message of the last failed call on this thread, or null. Owned by
/// the library; valid until the next failing call.
#[no_mangle]
pub extern "C" fn ch_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ch_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Library version, static storage.
#[no_mangle]
pub extern "C" fn ch_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Parses a ring descriptor (`ZaQ`, `Qaq`, `cyclo:e[,a=r]`, `gf:p,q=v,a=v`,
/// `Q:q=r,a=r`).
///
/// # Safety
/// `descriptor` must be a nul-terminated string; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ch_ring_new(descriptor: *const c_char, out: *mut *mut ChRing) -> ChStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let d = RingDescriptor::parse(str_arg(descriptor, "descriptor")?)?;
        *out = Box::into_raw(Box::new(ChRing(d.build()?)));
        Ok(())
    })
}

/// # Safety
/// `ring` must be null or a handle from [`ch_ring_new`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ch_ring_free(ring: *mut ChRing) {
    if !ring.is_null() {
        drop(Box::from_raw(ring));
    }
}

/// Canonical descriptor of `ring`; free with [`ch_string_free`].
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn ch_ring_describe(ring: *const ChRing, out: *mut *mut c_char) -> ChStatus {
    guard(|| {
        let ring = ref_arg(ring, "ring")?;
        *out_arg(out, "out")? = give_string(ring.0.descriptor().to_string());
        Ok(())
    })
}

/// `H_n` (or `H^c_n`) over a copy of `ring`, `n` within the size caps.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn ch_algebra_new(ring: *const ChRing, kind: ChAlgebraKind, n: usize, out: *mut *mut ChAlgebra) -> ChStatus {
    guard(|| {
        let ring = ref_arg(ring, "ring")?;
        let out = out_arg(out, "out")?;
        cap(kind, n)?;
        *out = Box::into_raw(Box::new(ChAlgebra { ring: ring.0.clone(), kind, n }));
        Ok(())
    })
}

/// # Safety
/// `algebra` must be null or a handle from [`ch_algebra_new`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ch_algebra_free(algebra: *mut ChAlgebra) {
    if !algebra.is_null() {
        drop(Box::from_raw(algebra));
    }
}

/// `n!` or `2ⁿn!`.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn ch_algebra_dim(algebra: *const ChAlgebra, out: *mut usize) -> ChStatus {
    guard(|| {
        let a = ref_arg(algebra, "algebra")?;
        let order: usize = (1..=a.n).product();
        *out_arg(out, "out")? = match a.kind {
            ChAlgebraKind::Hecke => order,
            ChAlgebraKind::HeckeClifford => order << a.n,
        };
        Ok(())
    })
}

/// The product of two words (`T1*c2*T[2,1,3]*m(2,1)`, `1`) as a JSON array
/// of terms; free with [`ch_string_free`].
///
/// # Safety
/// Pointers must be valid; strings nul-terminated.
#[no_mangle]
pub unsafe extern "C" fn ch_algebra_product(
    algebra: *const ChAlgebra,
    left: *const c_char,
    right: *const c_char,
    out_json: *mut *mut c_char,
) -> ChStatus {
    guard(|| {
        let a = ref_arg(algebra, "algebra")?;
        let (left, right) = (str_arg(left, "left")?, str_arg(right, "right")?);
        let out = out_arg(out_json, "out_json")?;
        let json = with_ring!(&a.ring, r => match a.kind {
            ChAlgebraKind::Hecke => {
                let h = Hecke::new(r.clone(), a.n);
                let x = h.mul(&cli::hecke_word(&h, left)?, &cli::hecke_word(&h, right)?)?;
                h.to_json(&x)
            }
            ChAlgebraKind::HeckeClifford => {
                let hc = HeckeClifford::new(r.clone(), a.n);
                let x = hc.mul(&cli::hc_word(&hc, left)?, &cli::hc_word(&hc, right)?)?;
                hc.to_json(&x)
            }
        });
        *out = give_string(json.to_string());
        Ok(())
    })
}

/// `dim S_{λ;μ}` (or `dim S^c_{λ;μ}`) over a field; compositions as `"2,1"`.
///
/// # Safety
/// Pointers must be valid; strings nul-terminated.
#[no_mangle]
pub unsafe extern "C" fn ch_specht_dim(
    ring: *const ChRing,
    kind: ChAlgebraKind,
    lambda: *const c_char,
    mu: *const c_char,
    out: *mut usize,
) -> ChStatus {
    guard(|| {
        let ring = ref_arg(ring, "ring")?;
        let lambda = Composition::parse(str_arg(lambda, "lambda")?)?;
        let mu = Composition::parse(str_arg(mu, "mu")?)?;
        let out = out_arg(out, "out")?;
        if lambda.size() != mu.size() {
            return Err(Error::InvalidInput(format!("{lambda} and {mu} have different sizes")).into());
        }
        cap(kind, lambda.size())?;
        *out = with_ring!(&ring.0, r => match kind {
            ChAlgebraKind::Hecke => SpechtQuotient::new(r.clone(), &lambda, &mu)?.dim(),
            ChAlgebraKind::HeckeClifford => SuperSpecht::new(r.clone(), &lambda, &mu)?.dim(),
        });
        Ok(())
    })
}

/// Number of simple modules (Hecke, via Gram ranks) or simple supermodules
/// up to parity change (Hecke–Clifford) over a field.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn ch_count_simples(ring: *const ChRing, kind: ChAlgebraKind, n: usize, out: *mut usize) -> ChStatus {
    guard(|| {
        let ring = ref_arg(ring, "ring")?;
        let out = out_arg(out, "out")?;
        cap(kind, n)?;
        *out = with_ring!(&ring.0, r => match kind {
            ChAlgebraKind::Hecke => classify::count_simples(r, n)?.count,
            ChAlgebraKind::HeckeClifford => count_super_simples(r, n)?.count,
        });
        Ok(())
    })
}

/// Runs one CLI command line (arguments separated by whitespace, without
/// the program name), returning its exit code and captured stdout (stderr
/// on failure); free `out_text` with [`ch_string_free`].
///
/// # Safety
/// Pointers must be valid; `args` nul-terminated.
#[no_mangle]
pub unsafe extern "C" fn ch_cli_run(args: *const c_char, exit_code: *mut i32, out_text: *mut *mut c_char) -> ChStatus {
    guard(|| {
        let args = str_arg(args, "args")?;
        let code = out_arg(exit_code, "exit_code")?;
        let text = out_arg(out_text, "out_text")?;
        let (mut o, mut e) = (Vec::new(), Vec::new());
        *code = cli::run(std::iter::once("cellhecke").chain(args.split_whitespace()), &mut o, &mut e);
        let captured = if *code == 0 { o } else { [o, e].concat() };
        *text = give_string(String::from_utf8_lossy(&captured).into_owned());
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> CString {
        CString::new(s).unwrap()
    }

    unsafe fn take(s: *mut c_char) -> String {
        let r = CStr::from_ptr(s).to_str().unwrap().to_owned();
        ch_string_free(s);
        r
    }

    #[test]
    fn ring_round_trip_and_errors() {
        unsafe {
            let mut ring = ptr::null_mut();
            assert_eq!(ch_ring_new(c("gf:7,q=3,a=1").as_ptr(), &mut ring), ChStatus::Ok);
            let mut s = ptr::null_mut();
            assert_eq!(ch_ring_describe(ring, &mut s), ChStatus::Ok);
            assert_eq!(take(s), "gf:7,q=3,a=1");
            ch_ring_free(ring);

            let mut bad = ptr::null_mut();
            assert_eq!(ch_ring_new(c("gf:8,q=1,a=1").as_ptr(), &mut bad), ChStatus::InvalidRing);
            assert!(bad.is_null());
            assert!(!ch_last_error().is_null());
            assert_eq!(ch_ring_new(ptr::null(), &mut bad), ChStatus::NullPointer);
        }
    }

    #[test]
    fn algebra_calls() {
        unsafe {
            let mut ring = ptr::null_mut();
            assert_eq!(ch_ring_new(c("Qaq").as_ptr(), &mut ring), ChStatus::Ok);
            let mut alg = ptr::null_mut();
            assert_eq!(ch_algebra_new(ring, ChAlgebraKind::HeckeClifford, 2, &mut alg), ChStatus::Ok);
            let mut dim = 0;
            assert_eq!(ch_algebra_dim(alg, &mut dim), ChStatus::Ok);
            assert_eq!(dim, 8);
            let mut json = ptr::null_mut();
            assert_eq!(ch_algebra_product(alg, c("c1").as_ptr(), c("c1").as_ptr(), &mut json), ChStatus::Ok);
            let v: serde_json::Value = serde_json::from_str(&take(json)).unwrap();
            assert_eq!(v.as_array().unwrap().len(), 1);
            assert_eq!(ch_algebra_product(alg, c("x9").as_ptr(), c("1").as_ptr(), &mut json), ChStatus::InvalidInput);
            ch_algebra_free(alg);

            assert_eq!(ch_algebra_new(ring, ChAlgebraKind::HeckeClifford, 5, &mut alg), ChStatus::SizeLimit);
            let mut d = 0;
            assert_eq!(ch_specht_dim(ring, ChAlgebraKind::Hecke, c("2,1").as_ptr(), c("1,1,1").as_ptr(), &mut d), ChStatus::Ok);
            assert_eq!(d, 2);
            ch_ring_free(ring);

            let mut cyc = ptr::null_mut();
            assert_eq!(ch_ring_new(c("cyclo:2").as_ptr(), &mut cyc), ChStatus::Ok);
            assert_eq!(ch_count_simples(cyc, ChAlgebraKind::Hecke, 4, &mut d), ChStatus::Ok);
            assert_eq!(d, 2);
            ch_ring_free(cyc);
        }
    }

    #[test]
    fn cli_passthrough() {
        unsafe {
            let (mut code, mut text) = (0, ptr::null_mut());
            assert_eq!(ch_cli_run(c("basis --algebra hc --n 2").as_ptr(), &mut code, &mut text), ChStatus::Ok);
            assert_eq!(code, 0);
            let v: serde_json::Value = serde_json::from_str(&take(text)).unwrap();
            assert_eq!(v["dim"], 8);
            assert_eq!(ch_cli_run(c("basis --n 9").as_ptr(), &mut code, &mut text), ChStatus::Ok);
            assert_eq!(code, 3);
            ch_string_free(text);
        }
    }
}

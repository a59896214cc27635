//! C ABI for the canonical-form library.
//!
//! Permutations are exposed as opaque handles allocated by this library and
//! released with [`ogs_perm_free`]; strings returned through `char**` out
//! parameters are released with [`ogs_string_free`]. Every fallible call
//! returns an [`OgsStatus`]; out parameters are written only on
//! `OGS_STATUS_OK`.
//!
//! The generated header lives at `include/ogs.h`.

use std::ffi::{c_char, CStr, CString};

use ogs_core::cli::{self, Command, Verb};
use ogs_core::gens::GeneratorWord;
use ogs_core::perm::{Parity, Permutation};
use ogs_core::sn::{decode_sn, encode_sn, normalize_sn, SnCanonicalForm};
use ogs_core::{decode_alt, encode_alt, AltCanonicalForm, Error};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OgsStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// An argument was structurally invalid (unknown suite, zero degree).
    InvalidArgument = 2,
    /// Text failed to parse in the expected grammar.
    ParseError = 3,
    /// An index, exponent, or degree was out of range.
    BoundsError = 4,
    /// The permutation was odd where an even one is required.
    ParityError = 5,
}

/// Which canonical form a call refers to.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OgsGroup {
    Symmetric = 0,
    Alternating = 1,
}

/// Which text notation to print.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OgsNotation {
    OneLine = 0,
    Cycles = 1,
}

/// The permutation statistics bundle filled by [`ogs_perm_stats`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OgsStats {
    pub major_index: u64,
    pub inversions: u64,
    pub order: u64,
    pub is_even: bool,
}

/// Opaque permutation handle.
pub struct OgsPerm {
    inner: Permutation,
}

fn status_for(err: &Error) -> OgsStatus {
    match err {
        Error::Parse(_) => OgsStatus::ParseError,
        Error::OddPermutation => OgsStatus::ParityError,
        _ => OgsStatus::BoundsError,
    }
}

unsafe fn read_str<'a>(text: *const c_char) -> Result<&'a str, OgsStatus> {
    if text.is_null() {
        return Err(OgsStatus::NullPointer);
    }
    CStr::from_ptr(text)
        .to_str()
        .map_err(|_| OgsStatus::ParseError)
}

fn write_perm(out: *mut *mut OgsPerm, value: Permutation) -> OgsStatus {
    if out.is_null() {
        return OgsStatus::NullPointer;
    }
    let handle = Box::new(OgsPerm { inner: value });
    unsafe { *out = Box::into_raw(handle) };
    OgsStatus::Ok
}

fn write_string(out: *mut *mut c_char, value: &str) -> OgsStatus {
    if out.is_null() {
        return OgsStatus::NullPointer;
    }
    match CString::new(value) {
        Ok(text) => {
            unsafe { *out = text.into_raw() };
            OgsStatus::Ok
        }
        Err(_) => OgsStatus::InvalidArgument,
    }
}

unsafe fn borrow<'a>(perm: *const OgsPerm) -> Result<&'a Permutation, OgsStatus> {
    if perm.is_null() {
        return Err(OgsStatus::NullPointer);
    }
    Ok(&(*perm).inner)
}

/// A human-readable description of a status code. The returned pointer is
/// static and must not be freed.
#[no_mangle]
pub extern "C" fn ogs_status_describe(status: OgsStatus) -> *const c_char {
    let text: &'static [u8] = match status {
        OgsStatus::Ok => b"ok\0",
        OgsStatus::NullPointer => b"null pointer argument\0",
        OgsStatus::InvalidArgument => b"invalid argument\0",
        OgsStatus::ParseError => b"parse error\0",
        OgsStatus::BoundsError => b"index or exponent out of bounds\0",
        OgsStatus::ParityError => b"not an even permutation\0",
    };
    text.as_ptr() as *const c_char
}

/// Frees a string returned by this library. Null is a no-op.
///
/// # Safety
/// `text` must have been returned by a function of this library through a
/// `char**` out parameter, and must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn ogs_string_free(text: *mut c_char) {
    if !text.is_null() {
        drop(CString::from_raw(text));
    }
}

/// Frees a permutation handle. Null is a no-op.
///
/// # Safety
/// `perm` must have been returned by a function of this library and must not
/// be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn ogs_perm_free(perm: *mut OgsPerm) {
    if !perm.is_null() {
        drop(Box::from_raw(perm));
    }
}

/// Creates the identity permutation on `{1..degree}`.
///
/// # Safety
/// `out` must point to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn ogs_perm_identity(degree: usize, out: *mut *mut OgsPerm) -> OgsStatus {
    if degree == 0 {
        return OgsStatus::InvalidArgument;
    }
    write_perm(out, Permutation::identity(degree))
}

/// Parses a permutation in one-line (`[2;4;1;3]`) or cycle (`(1,2)(3,4)`)
/// notation at the given degree.
///
/// # Safety
/// `text` must be a valid NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ogs_perm_parse(
    text: *const c_char,
    degree: usize,
    out: *mut *mut OgsPerm,
) -> OgsStatus {
    let text = match read_str(text) {
        Ok(text) => text,
        Err(status) => return status,
    };
    match cli::parse_permutation(text, degree) {
        Ok(p) => write_perm(out, p),
        Err(err) => status_for(&err),
    }
}

/// Degree of a permutation; 0 when the handle is null.
///
/// # Safety
/// `perm` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn ogs_perm_degree(perm: *const OgsPerm) -> usize {
    borrow(perm).map(Permutation::degree).unwrap_or(0)
}

/// Image of the 1-based `point` under the permutation.
///
/// # Safety
/// `perm` must be a live handle or null; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ogs_perm_image(
    perm: *const OgsPerm,
    point: usize,
    out: *mut usize,
) -> OgsStatus {
    let p = match borrow(perm) {
        Ok(p) => p,
        Err(status) => return status,
    };
    if out.is_null() {
        return OgsStatus::NullPointer;
    }
    if point < 1 || point > p.degree() {
        return OgsStatus::BoundsError;
    }
    *out = p.apply(point);
    OgsStatus::Ok
}

/// Left-to-right product: the result applies `a` first, then `b`.
///
/// # Safety
/// `a` and `b` must be live handles or null; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ogs_perm_compose(
    a: *const OgsPerm,
    b: *const OgsPerm,
    out: *mut *mut OgsPerm,
) -> OgsStatus {
    let (a, b) = match (borrow(a), borrow(b)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(status), _) | (_, Err(status)) => return status,
    };
    match a.compose(b) {
        Ok(product) => write_perm(out, product),
        Err(err) => status_for(&err),
    }
}

/// Group inverse.
///
/// # Safety
/// `perm` must be a live handle or null; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ogs_perm_inverse(
    perm: *const OgsPerm,
    out: *mut *mut OgsPerm,
) -> OgsStatus {
    match borrow(perm) {
        Ok(p) => write_perm(out, p.inverse()),
        Err(status) => status,
    }
}

/// Prints a permutation in the requested notation into a new string.
///
/// # Safety
/// `perm` must be a live handle or null; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ogs_perm_print(
    perm: *const OgsPerm,
    notation: OgsNotation,
    out: *mut *mut c_char,
) -> OgsStatus {
    let p = match borrow(perm) {
        Ok(p) => p,
        Err(status) => return status,
    };
    let rendered = match notation {
        OgsNotation::OneLine => p.print_one_line(),
        OgsNotation::Cycles => p.print_cycles(),
    };
    write_string(out, &rendered)
}

/// Fills the statistics bundle: major index, inversion count, order, parity.
///
/// # Safety
/// `perm` must be a live handle or null; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ogs_perm_stats(perm: *const OgsPerm, out: *mut OgsStats) -> OgsStatus {
    let p = match borrow(perm) {
        Ok(p) => p,
        Err(status) => return status,
    };
    if out.is_null() {
        return OgsStatus::NullPointer;
    }
    *out = OgsStats {
        major_index: p.major_index() as u64,
        inversions: p.inversion_length() as u64,
        order: p.order() as u64,
        is_even: p.parity() == Parity::Even,
    };
    OgsStatus::Ok
}

/// Encodes a permutation into the canonical-form text of the chosen group
/// (`t2^a * t3^b * ...` or `t3^a * u4^b * v4^c * ...`; the identity is `e`).
///
/// # Safety
/// `perm` must be a live handle or null; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ogs_encode(
    group: OgsGroup,
    perm: *const OgsPerm,
    out: *mut *mut c_char,
) -> OgsStatus {
    let p = match borrow(perm) {
        Ok(p) => p,
        Err(status) => return status,
    };
    let rendered = match group {
        OgsGroup::Symmetric => encode_sn(p).print(),
        OgsGroup::Alternating => match encode_alt(p) {
            Ok(form) => form.print(),
            Err(err) => return status_for(&err),
        },
    };
    write_string(out, &rendered)
}

/// Decodes canonical-form text at the given degree back to a permutation.
///
/// # Safety
/// `form` must be a valid NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ogs_decode(
    group: OgsGroup,
    degree: usize,
    form: *const c_char,
    out: *mut *mut OgsPerm,
) -> OgsStatus {
    let text = match read_str(form) {
        Ok(text) => text,
        Err(status) => return status,
    };
    let decoded = match group {
        OgsGroup::Symmetric => SnCanonicalForm::parse(text, degree).map(|c| decode_sn(&c)),
        OgsGroup::Alternating => AltCanonicalForm::parse(text, degree).map(|c| decode_alt(&c)),
    };
    match decoded {
        Ok(p) => write_perm(out, p),
        Err(err) => status_for(&err),
    }
}

/// Normalizes a word of `t` powers (e.g. `t4^2 * t3^-1`) into symmetric
/// canonical-form text via the exchange-law rewriter.
///
/// # Safety
/// `word` must be a valid NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ogs_normalize(
    degree: usize,
    word: *const c_char,
    out: *mut *mut c_char,
) -> OgsStatus {
    let text = match read_str(word) {
        Ok(text) => text,
        Err(status) => return status,
    };
    let normalized = GeneratorWord::parse(text, degree).and_then(|w| normalize_sn(&w));
    match normalized {
        Ok(result) => write_string(out, &result.form.print()),
        Err(err) => status_for(&err),
    }
}

/// Runs a verification suite (`"all"`, `"uniqueness"`, `"exchange"`,
/// `"alt4"`, ...) up to the degree ceiling `nmax` and returns the TSV
/// report. `all_passed` receives whether every check succeeded; failing
/// checks are data in the report, not an error status.
///
/// # Safety
/// `suite` must be a valid NUL-terminated string; `out_tsv` and
/// `all_passed` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ogs_verify(
    suite: *const c_char,
    nmax: usize,
    seed: u64,
    out_tsv: *mut *mut c_char,
    all_passed: *mut bool,
) -> OgsStatus {
    let suite = match read_str(suite) {
        Ok(text) => text,
        Err(status) => return status,
    };
    if out_tsv.is_null() || all_passed.is_null() {
        return OgsStatus::NullPointer;
    }
    let mut cmd = Command::new(Verb::Verify);
    cmd.suite = Some(suite.to_string());
    cmd.nmax = nmax;
    cmd.seed = seed;
    let outcome = cli::run(&cmd);
    if outcome.exit_code == 2 {
        return OgsStatus::InvalidArgument;
    }
    *all_passed = outcome.exit_code == 0;
    write_string(out_tsv, &outcome.stdout)
}

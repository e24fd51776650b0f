//! C ABI for the platsq library.
//!
//! The surface follows the usual opaque-handle pattern: constructors return
//! a status code and write a handle through an out-pointer, every handle has
//! a matching `_free`, and strings returned by the library must be released
//! with [`platsq_string_free`]. The header `include/platsq.h` is generated
//! by cbindgen at build time.
//!
//! All functions are null-safe: passing a null pointer yields
//! `PLATSQ_STATUS_NULL_POINTER` rather than undefined behavior. Handles are
//! immutable once created, so one handle may be shared across threads as
//! long as `_free` is called exactly once after all use ends.

use std::ffi::{c_char, CStr, CString};

use platsq::coloring::{self, ColoringOptions, DEFAULT_CEILING};
use platsq::{BraidSystem, Error, FiniteSymQuandle, SlideDirection, SymQuandlePresentation};

/// Status code returned by every fallible function.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PlatsqStatus {
    /// Success.
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// JSON input could not be parsed.
    ParseError = 3,
    /// Arguments were structurally valid but out of range or inconsistent.
    InvalidInput = 4,
    /// Quandle tables violate the quandle or good-involution axioms.
    ValidationFailed = 5,
    /// The requested search exceeds the assignment ceiling.
    CeilingExceeded = 6,
    /// The operation is only defined for genuine systems.
    NotGenuine = 7,
}

fn status_of(err: &Error) -> PlatsqStatus {
    match err {
        Error::Json(_) => PlatsqStatus::ParseError,
        Error::InvalidQuandle(_) => PlatsqStatus::ValidationFailed,
        Error::CeilingExceeded { .. } => PlatsqStatus::CeilingExceeded,
        Error::NotGenuine => PlatsqStatus::NotGenuine,
        _ => PlatsqStatus::InvalidInput,
    }
}

/// Opaque handle to a braid system.
pub struct PlatsqBraidSystem {
    inner: BraidSystem,
}

/// Opaque handle to a validated finite symmetric quandle.
pub struct PlatsqQuandle {
    inner: FiniteSymQuandle,
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, PlatsqStatus> {
    if s.is_null() {
        return Err(PlatsqStatus::NullPointer);
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| PlatsqStatus::InvalidUtf8)
}

fn write_handle<T>(out: *mut *mut T, value: T) -> PlatsqStatus {
    if out.is_null() {
        return PlatsqStatus::NullPointer;
    }
    unsafe { *out = Box::into_raw(Box::new(value)) };
    PlatsqStatus::Ok
}

fn write_string(out: *mut *mut c_char, text: String) -> PlatsqStatus {
    if out.is_null() {
        return PlatsqStatus::NullPointer;
    }
    match CString::new(text) {
        Ok(s) => {
            unsafe { *out = s.into_raw() };
            PlatsqStatus::Ok
        }
        Err(_) => PlatsqStatus::InvalidInput,
    }
}

macro_rules! try_ffi {
    ($expr:expr) => {
        match $expr {
            Ok(value) => value,
            Err(err) => return status_of(&err),
        }
    };
}

/// Parses a braid system from its JSON encoding
/// `{ "degree": n, "entries": [ { "conjugator": [..], "band": k, "sign": ±1 } ] }`.
///
/// # Safety
/// `json` must point to a NUL-terminated string. On success `*out` receives
/// a handle that must be released with [`platsq_system_free`].
#[no_mangle]
pub unsafe extern "C" fn platsq_system_from_json(
    json: *const c_char,
    out: *mut *mut PlatsqBraidSystem,
) -> PlatsqStatus {
    let json = match read_str(json) {
        Ok(s) => s,
        Err(status) => return status,
    };
    let inner = try_ffi!(BraidSystem::from_json(json));
    write_handle(out, PlatsqBraidSystem { inner })
}

/// Builds the twisted family system b(m,p) with `g` extra handle pairs
/// (degree `2m`; requires `m >= 2`, `p >= 1`).
///
/// # Safety
/// On success `*out` receives a handle that must be released with
/// [`platsq_system_free`].
#[no_mangle]
pub unsafe extern "C" fn platsq_system_family(
    m: usize,
    p: usize,
    g: usize,
    out: *mut *mut PlatsqBraidSystem,
) -> PlatsqStatus {
    let inner = try_ffi!(BraidSystem::family_bmpg(m, p, g));
    write_handle(out, PlatsqBraidSystem { inner })
}

/// Releases a braid system handle. Passing null is a no-op.
///
/// # Safety
/// `system` must be a handle returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn platsq_system_free(system: *mut PlatsqBraidSystem) {
    if !system.is_null() {
        drop(Box::from_raw(system));
    }
}

/// Serializes a braid system back to JSON.
///
/// # Safety
/// `system` must be a live handle. On success `*out` receives a string that
/// must be released with [`platsq_string_free`].
#[no_mangle]
pub unsafe extern "C" fn platsq_system_to_json(
    system: *const PlatsqBraidSystem,
    out: *mut *mut c_char,
) -> PlatsqStatus {
    if system.is_null() {
        return PlatsqStatus::NullPointer;
    }
    write_string(out, (*system).inner.to_json())
}

/// Writes the braid degree of the system.
///
/// # Safety
/// `system` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn platsq_system_degree(
    system: *const PlatsqBraidSystem,
    out: *mut usize,
) -> PlatsqStatus {
    if system.is_null() || out.is_null() {
        return PlatsqStatus::NullPointer;
    }
    *out = (*system).inner.degree();
    PlatsqStatus::Ok
}

/// Writes the number of branch-point entries.
///
/// # Safety
/// `system` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn platsq_system_entry_count(
    system: *const PlatsqBraidSystem,
    out: *mut usize,
) -> PlatsqStatus {
    if system.is_null() || out.is_null() {
        return PlatsqStatus::NullPointer;
    }
    *out = (*system).inner.entries().len();
    PlatsqStatus::Ok
}

/// Writes `true` iff the boundary braid is trivial (the system presents a
/// 2-dimensional braid).
///
/// # Safety
/// `system` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn platsq_system_is_genuine(
    system: *const PlatsqBraidSystem,
    out: *mut bool,
) -> PlatsqStatus {
    if system.is_null() || out.is_null() {
        return PlatsqStatus::NullPointer;
    }
    *out = (*system).inner.is_genuine();
    PlatsqStatus::Ok
}

/// Writes the Euler characteristic of the plat closure (`degree - entries`;
/// requires an even degree).
///
/// # Safety
/// `system` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn platsq_system_euler_characteristic(
    system: *const PlatsqBraidSystem,
    out: *mut i64,
) -> PlatsqStatus {
    if system.is_null() || out.is_null() {
        return PlatsqStatus::NullPointer;
    }
    *out = try_ffi!((*system).inner.euler_characteristic());
    PlatsqStatus::Ok
}

/// Writes the number of connected components of the plat closure. Only
/// defined for genuine systems of even degree.
///
/// # Safety
/// `system` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn platsq_system_component_count(
    system: *const PlatsqBraidSystem,
    out: *mut usize,
) -> PlatsqStatus {
    if system.is_null() || out.is_null() {
        return PlatsqStatus::NullPointer;
    }
    *out = try_ffi!((*system).inner.component_count());
    PlatsqStatus::Ok
}

/// Applies one slide move at position `j` (`1 <= j <= entries - 1`),
/// forward if `forward` is true, and returns the transformed system as a
/// new handle.
///
/// # Safety
/// `system` must be a live handle. On success `*out` receives a handle that
/// must be released with [`platsq_system_free`].
#[no_mangle]
pub unsafe extern "C" fn platsq_system_slide(
    system: *const PlatsqBraidSystem,
    j: usize,
    forward: bool,
    out: *mut *mut PlatsqBraidSystem,
) -> PlatsqStatus {
    if system.is_null() {
        return PlatsqStatus::NullPointer;
    }
    let direction = if forward {
        SlideDirection::Forward
    } else {
        SlideDirection::Backward
    };
    let inner = try_ffi!((*system).inner.slide(j, direction));
    write_handle(out, PlatsqBraidSystem { inner })
}

/// Parses and validates a quandle from its JSON encoding
/// `{ "size": n, "op": [[..]], "rho": [..] }` (0-based tables). Axiom
/// violations yield `PLATSQ_STATUS_VALIDATION_FAILED`.
///
/// # Safety
/// `json` must point to a NUL-terminated string. On success `*out` receives
/// a handle that must be released with [`platsq_quandle_free`].
#[no_mangle]
pub unsafe extern "C" fn platsq_quandle_from_json(
    json: *const c_char,
    out: *mut *mut PlatsqQuandle,
) -> PlatsqStatus {
    let json = match read_str(json) {
        Ok(s) => s,
        Err(status) => return status,
    };
    let inner = try_ffi!(FiniteSymQuandle::from_json(json));
    write_handle(out, PlatsqQuandle { inner })
}

/// Builds the dihedral quandle R_p with the identity involution
/// (requires `p >= 1`).
///
/// # Safety
/// On success `*out` receives a handle that must be released with
/// [`platsq_quandle_free`].
#[no_mangle]
pub unsafe extern "C" fn platsq_quandle_dihedral(
    p: usize,
    out: *mut *mut PlatsqQuandle,
) -> PlatsqStatus {
    let inner = try_ffi!(FiniteSymQuandle::dihedral(p));
    write_handle(out, PlatsqQuandle { inner })
}

/// Releases a quandle handle. Passing null is a no-op.
///
/// # Safety
/// `quandle` must be a handle returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn platsq_quandle_free(quandle: *mut PlatsqQuandle) {
    if !quandle.is_null() {
        drop(Box::from_raw(quandle));
    }
}

/// Writes the order of the quandle.
///
/// # Safety
/// `quandle` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn platsq_quandle_size(
    quandle: *const PlatsqQuandle,
    out: *mut usize,
) -> PlatsqStatus {
    if quandle.is_null() || out.is_null() {
        return PlatsqStatus::NullPointer;
    }
    *out = (*quandle).inner.size();
    PlatsqStatus::Ok
}

/// Counts the colorings of the system's plat closure by the quandle.
/// `ceiling` bounds the number of candidate assignments; pass 0 for the
/// default of 10^9. Searches above the ceiling are refused with
/// `PLATSQ_STATUS_CEILING_EXCEEDED`, never truncated.
///
/// # Safety
/// `system` and `quandle` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn platsq_coloring_count(
    system: *const PlatsqBraidSystem,
    quandle: *const PlatsqQuandle,
    ceiling: u64,
    out: *mut u64,
) -> PlatsqStatus {
    if system.is_null() || quandle.is_null() || out.is_null() {
        return PlatsqStatus::NullPointer;
    }
    let options = ColoringOptions {
        ceiling: if ceiling == 0 { DEFAULT_CEILING } else { ceiling },
        eliminate: true,
    };
    *out = try_ffi!(coloring::coloring_count_for_system_with(
        &(*system).inner,
        &(*quandle).inner,
        &options,
    ));
    PlatsqStatus::Ok
}

/// Writes `ceil(log_order(count))`, the plat-index lower bound certified by
/// a coloring count. Requires `count >= 1` and `order >= 2`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn platsq_plat_lower_bound(
    count: u64,
    order: u64,
    out: *mut u32,
) -> PlatsqStatus {
    if out.is_null() {
        return PlatsqStatus::NullPointer;
    }
    *out = try_ffi!(platsq::plat_lower_bound(count, order));
    PlatsqStatus::Ok
}

/// Emits the plat-form symmetric quandle presentation of the system as
/// text, or the associated group presentation if `as_group` is true.
/// Requires an even degree.
///
/// # Safety
/// `system` must be a live handle. On success `*out` receives a string that
/// must be released with [`platsq_string_free`].
#[no_mangle]
pub unsafe extern "C" fn platsq_presentation_text(
    system: *const PlatsqBraidSystem,
    as_group: bool,
    out: *mut *mut c_char,
) -> PlatsqStatus {
    if system.is_null() {
        return PlatsqStatus::NullPointer;
    }
    let presentation = try_ffi!(SymQuandlePresentation::plat(&(*system).inner));
    let text = if as_group {
        presentation.to_group_presentation()
    } else {
        presentation.to_string()
    };
    write_string(out, text)
}

/// Releases a string returned by this library. Passing null is a no-op.
///
/// # Safety
/// `s` must be a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn platsq_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ptr;

    unsafe fn family(m: usize, p: usize, g: usize) -> *mut PlatsqBraidSystem {
        let mut system = ptr::null_mut();
        assert_eq!(
            platsq_system_family(m, p, g, &mut system),
            PlatsqStatus::Ok
        );
        assert!(!system.is_null());
        system
    }

    #[test]
    fn family_coloring_count_round_trip() {
        unsafe {
            let system = family(2, 3, 0);
            let mut quandle = ptr::null_mut();
            assert_eq!(platsq_quandle_dihedral(3, &mut quandle), PlatsqStatus::Ok);

            let mut count = 0u64;
            assert_eq!(
                platsq_coloring_count(system, quandle, 0, &mut count),
                PlatsqStatus::Ok
            );
            assert_eq!(count, 9);

            let mut bound = 0u32;
            assert_eq!(
                platsq_plat_lower_bound(count, 3, &mut bound),
                PlatsqStatus::Ok
            );
            assert_eq!(bound, 2);

            platsq_quandle_free(quandle);
            platsq_system_free(system);
        }
    }

    #[test]
    fn json_and_invariants() {
        unsafe {
            let system = family(2, 3, 1);

            let mut chi = 99i64;
            assert_eq!(
                platsq_system_euler_characteristic(system, &mut chi),
                PlatsqStatus::Ok
            );
            assert_eq!(chi, 0);

            let mut genuine = false;
            assert_eq!(
                platsq_system_is_genuine(system, &mut genuine),
                PlatsqStatus::Ok
            );
            assert!(genuine);

            let mut components = 0usize;
            assert_eq!(
                platsq_system_component_count(system, &mut components),
                PlatsqStatus::Ok
            );
            assert_eq!(components, 1);

            let mut entries = 0usize;
            assert_eq!(
                platsq_system_entry_count(system, &mut entries),
                PlatsqStatus::Ok
            );
            assert_eq!(entries, 4);

            let mut json = ptr::null_mut();
            assert_eq!(platsq_system_to_json(system, &mut json), PlatsqStatus::Ok);
            let text = CStr::from_ptr(json).to_str().unwrap().to_owned();

            let mut reloaded = ptr::null_mut();
            let cjson = CString::new(text).unwrap();
            assert_eq!(
                platsq_system_from_json(cjson.as_ptr(), &mut reloaded),
                PlatsqStatus::Ok
            );
            let mut degree = 0usize;
            assert_eq!(
                platsq_system_degree(reloaded, &mut degree),
                PlatsqStatus::Ok
            );
            assert_eq!(degree, 4);

            platsq_string_free(json);
            platsq_system_free(reloaded);
            platsq_system_free(system);
        }
    }

    #[test]
    fn slide_preserves_counts_through_the_abi() {
        unsafe {
            let system = family(2, 3, 0);
            let mut slid = ptr::null_mut();
            assert_eq!(
                platsq_system_slide(system, 1, true, &mut slid),
                PlatsqStatus::Ok
            );
            let mut quandle = ptr::null_mut();
            assert_eq!(platsq_quandle_dihedral(3, &mut quandle), PlatsqStatus::Ok);
            let (mut before, mut after) = (0u64, 0u64);
            assert_eq!(
                platsq_coloring_count(system, quandle, 0, &mut before),
                PlatsqStatus::Ok
            );
            assert_eq!(
                platsq_coloring_count(slid, quandle, 0, &mut after),
                PlatsqStatus::Ok
            );
            assert_eq!(before, after);

            let mut bad = ptr::null_mut();
            assert_eq!(
                platsq_system_slide(system, 7, true, &mut bad),
                PlatsqStatus::InvalidInput
            );

            platsq_quandle_free(quandle);
            platsq_system_free(slid);
            platsq_system_free(system);
        }
    }

    #[test]
    fn presentation_text_through_the_abi() {
        unsafe {
            let system = family(2, 3, 0);
            let mut text = ptr::null_mut();
            assert_eq!(
                platsq_presentation_text(system, false, &mut text),
                PlatsqStatus::Ok
            );
            let s = CStr::from_ptr(text).to_str().unwrap();
            assert!(s.contains("generators: x1 x2 x3 x4"));
            platsq_string_free(text);

            let mut group = ptr::null_mut();
            assert_eq!(
                platsq_presentation_text(system, true, &mut group),
                PlatsqStatus::Ok
            );
            let s = CStr::from_ptr(group).to_str().unwrap();
            assert!(s.starts_with("< g1, g2, g3, g4 |"));
            platsq_string_free(group);
            platsq_system_free(system);
        }
    }

    #[test]
    fn status_codes_for_bad_inputs() {
        unsafe {
            let mut out = ptr::null_mut();
            assert_eq!(
                platsq_system_from_json(ptr::null(), &mut out),
                PlatsqStatus::NullPointer
            );
            let garbage = CString::new("not json").unwrap();
            assert_eq!(
                platsq_system_from_json(garbage.as_ptr(), &mut out),
                PlatsqStatus::ParseError
            );

            let mut qout = ptr::null_mut();
            let invalid =
                CString::new(r#"{ "size": 2, "op": [[0,1],[1,1]], "rho": [0,1] }"#).unwrap();
            assert_eq!(
                platsq_quandle_from_json(invalid.as_ptr(), &mut qout),
                PlatsqStatus::ValidationFailed
            );

            assert_eq!(
                platsq_system_family(1, 3, 0, &mut out),
                PlatsqStatus::InvalidInput
            );

            let system = family(3, 3, 0);
            let mut quandle = ptr::null_mut();
            assert_eq!(platsq_quandle_dihedral(7, &mut quandle), PlatsqStatus::Ok);
            let mut count = 0u64;
            assert_eq!(
                platsq_coloring_count(system, quandle, 10, &mut count),
                PlatsqStatus::CeilingExceeded
            );

            // non-genuine system: component count refused
            let single = CString::new(
                r#"{ "degree": 4, "entries": [ { "conjugator": [], "band": 1, "sign": 1 } ] }"#,
            )
            .unwrap();
            let mut ng = ptr::null_mut();
            assert_eq!(
                platsq_system_from_json(single.as_ptr(), &mut ng),
                PlatsqStatus::Ok
            );
            let mut components = 0usize;
            assert_eq!(
                platsq_system_component_count(ng, &mut components),
                PlatsqStatus::NotGenuine
            );

            platsq_quandle_free(quandle);
            platsq_system_free(system);
            platsq_system_free(ng);
        }
    }
}

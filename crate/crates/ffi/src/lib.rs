//! C interface to the `rowmotion` library.
//!
//! Families and orbit tables live behind opaque handles. Every fallible call
//! returns an [`RmStatus`]; on failure [`rm_last_error`] describes the cause
//! until the next call on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use rowmotion::error::Error;
use rowmotion::families::FamilySpec;
use rowmotion::poset::OrderIdeal;
use rowmotion::toggles::{
    gyration_word, orbits, promotion_word, rowmotion_word, superpromotion_word, OrbitOptions, OrbitPartition, RcPoset,
    ToggleWord, WordAction,
};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RmStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidArgument = 2,
    /// The request is well formed but the family does not support it.
    Unsupported = 3,
    /// State space over the cap, or a value too wide for the output type.
    ResourceLimit = 4,
    BufferTooSmall = 5,
    IndexOutOfRange = 6,
    Internal = 7,
}

/// Actions on order ideals.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RmAction {
    Row = 0,
    RowInverse = 1,
    Pro = 2,
    Gyration = 3,
    /// Superpromotion; ASM posets only.
    Spro = 4,
}

/// A parsed family together with its poset.
pub struct RmFamily {
    spec: FamilySpec,
    rc: RcPoset,
}

/// Orbit decomposition of the ideals of a family.
pub struct RmOrbits {
    partition: OrbitPartition<OrderIdeal>,
    elements: usize,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let text = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(text));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(e: &Error) -> RmStatus {
    match e {
        Error::StateSpaceTooLarge { .. } | Error::TooManyElements(_) | Error::Overflow(_) => RmStatus::ResourceLimit,
        Error::InvalidFamilySpec(_) | Error::UnsupportedArity(_) => RmStatus::InvalidArgument,
        _ => RmStatus::Unsupported,
    }
}

/// Runs `f`, recording the error text and converting panics.
fn guard(f: impl FnOnce() -> Result<(), (RmStatus, String)>) -> RmStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => RmStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("panic inside rowmotion");
            RmStatus::Internal
        }
    }
}

fn lib(e: Error) -> (RmStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (RmStatus, String) {
    (RmStatus::NullArgument, format!("`{what}` is null"))
}

unsafe fn as_ref<'a, T>(p: *const T, what: &str) -> Result<&'a T, (RmStatus, String)> {
    // SAFETY: caller passes either null or a live handle from this library.
    unsafe { p.as_ref() }.ok_or_else(|| null(what))
}

unsafe fn write_out<T>(out: *mut T, value: T, what: &str) -> Result<(), (RmStatus, String)> {
    if out.is_null() {
        return Err(null(what));
    }
    // SAFETY: non-null and, per the caller contract, writable.
    unsafe { out.write(value) };
    Ok(())
}

fn action_word(family: &RmFamily, action: RmAction) -> Result<ToggleWord, (RmStatus, String)> {
    let rc = &family.rc;
    Ok(match action {
        RmAction::Row => rowmotion_word(rc, None).map_err(lib)?,
        RmAction::RowInverse => rowmotion_word(rc, None).map_err(lib)?.inverse(),
        RmAction::Pro => promotion_word(rc, None).map_err(lib)?,
        RmAction::Gyration => gyration_word(rc),
        RmAction::Spro => {
            if !matches!(family.spec, FamilySpec::Asm(_)) {
                return Err((RmStatus::Unsupported, "superpromotion needs an asm:n family".into()));
            }
            superpromotion_word(rc).map_err(lib)?
        }
    })
}

/// Message for the last failed call on this thread, or null.
///
/// The pointer stays valid until the next call into this library on the
/// same thread.
#[no_mangle]
pub extern "C" fn rm_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn rm_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Parses a family such as `product:2,3,4` or `asm:5` and builds its poset.
///
/// # Safety
/// `spec` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rm_family_parse(spec: *const c_char, out: *mut *mut RmFamily) -> RmStatus {
    guard(|| {
        if spec.is_null() {
            return Err(null("spec"));
        }
        // SAFETY: caller guarantees a NUL-terminated string.
        let text = unsafe { CStr::from_ptr(spec) }
            .to_str()
            .map_err(|_| (RmStatus::InvalidArgument, "spec is not UTF-8".to_string()))?;
        let spec: FamilySpec = text.parse().map_err(lib)?;
        let rc = spec.build().map_err(lib)?;
        let handle = Box::into_raw(Box::new(RmFamily { spec, rc }));
        // SAFETY: see contract above.
        unsafe { write_out(out, handle, "out") }.inspect_err(|_| {
            // SAFETY: `handle` was just created and never shared.
            drop(unsafe { Box::from_raw(handle) });
        })
    })
}

/// Releases a family. Null is ignored.
///
/// # Safety
/// `family` must come from [`rm_family_parse`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn rm_family_free(family: *mut RmFamily) {
    if !family.is_null() {
        // SAFETY: per contract the pointer owns a boxed family.
        drop(unsafe { Box::from_raw(family) });
    }
}

/// Number of poset elements.
///
/// # Safety
/// `family` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rm_family_element_count(family: *const RmFamily, out: *mut usize) -> RmStatus {
    guard(|| {
        let f = unsafe { as_ref(family, "family") }?;
        unsafe { write_out(out, f.rc.len(), "out") }
    })
}

/// Number of order ideals; fails with `ResourceLimit` above `cap`.
///
/// # Safety
/// `family` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rm_family_ideal_count(family: *const RmFamily, cap: usize, out: *mut usize) -> RmStatus {
    guard(|| {
        let f = unsafe { as_ref(family, "family") }?;
        let n = f.rc.enumerate_ideals(cap).map_err(lib)?.len();
        unsafe { write_out(out, n, "out") }
    })
}

/// Decomposes the ideals of `family` into orbits of `action`.
///
/// `threads` of 0 is treated as 1. The result does not depend on it.
///
/// # Safety
/// `family` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rm_orbits_compute(
    family: *const RmFamily,
    action: RmAction,
    cap: usize,
    threads: usize,
    out: *mut *mut RmOrbits,
) -> RmStatus {
    guard(|| {
        let f = unsafe { as_ref(family, "family") }?;
        if out.is_null() {
            return Err(null("out"));
        }
        let word = action_word(f, action)?;
        let states = f.rc.enumerate_ideals(cap).map_err(lib)?;
        let act = WordAction::new(f.rc.poset(), &word);
        let partition =
            orbits(states, &act, OrbitOptions { threads: threads.max(1), keep_cycles: false }).map_err(lib)?;
        let handle = Box::into_raw(Box::new(RmOrbits { partition, elements: f.rc.len() }));
        unsafe { write_out(out, handle, "out") }
    })
}

/// Releases an orbit table. Null is ignored.
///
/// # Safety
/// `orbits` must come from [`rm_orbits_compute`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn rm_orbits_free(orbits: *mut RmOrbits) {
    if !orbits.is_null() {
        // SAFETY: per contract the pointer owns a boxed table.
        drop(unsafe { Box::from_raw(orbits) });
    }
}

/// Number of orbits.
///
/// # Safety
/// `orbits` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rm_orbits_count(orbits: *const RmOrbits, out: *mut usize) -> RmStatus {
    guard(|| {
        let o = unsafe { as_ref(orbits, "orbits") }?;
        unsafe { write_out(out, o.partition.orbits.len(), "out") }
    })
}

/// Copies the orbit sizes into `buf`, in canonical orbit order.
///
/// `needed` always receives the orbit count, so a first call with `len == 0`
/// sizes the buffer. Returns `BufferTooSmall` when `len` is short.
///
/// # Safety
/// `buf` must hold `len` writable values (or be null when `len == 0`);
/// `needed` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rm_orbits_sizes(
    orbits: *const RmOrbits,
    buf: *mut usize,
    len: usize,
    needed: *mut usize,
) -> RmStatus {
    guard(|| {
        let o = unsafe { as_ref(orbits, "orbits") }?;
        let sizes = o.partition.sizes();
        unsafe { write_out(needed, sizes.len(), "needed") }?;
        if len < sizes.len() {
            return Err((RmStatus::BufferTooSmall, format!("{} orbits, buffer holds {len}", sizes.len())));
        }
        if buf.is_null() {
            return Err(null("buf"));
        }
        // SAFETY: `buf` has room for `len >= sizes.len()` values.
        unsafe { ptr::copy_nonoverlapping(sizes.as_ptr(), buf, sizes.len()) };
        Ok(())
    })
}

/// Order of the action, the lcm of the orbit sizes.
///
/// # Safety
/// `orbits` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rm_orbits_order(orbits: *const RmOrbits, out: *mut u64) -> RmStatus {
    guard(|| {
        let o = unsafe { as_ref(orbits, "orbits") }?;
        let order = u64::try_from(o.partition.order)
            .map_err(|_| (RmStatus::ResourceLimit, format!("order {} exceeds 64 bits", o.partition.order)))?;
        unsafe { write_out(out, order, "out") }
    })
}

/// Representative of orbit `index` as a string of `0`/`1`, one per element.
/// Free the result with [`rm_string_free`].
///
/// # Safety
/// `orbits` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rm_orbits_representative(
    orbits: *const RmOrbits,
    index: usize,
    out: *mut *mut c_char,
) -> RmStatus {
    guard(|| {
        let o = unsafe { as_ref(orbits, "orbits") }?;
        let orbit = o
            .partition
            .orbits
            .get(index)
            .ok_or_else(|| (RmStatus::IndexOutOfRange, format!("orbit {index} of {}", o.partition.orbits.len())))?;
        let text = CString::new(orbit.representative.to_bitstring(o.elements)).expect("bitstring has no NUL");
        unsafe { write_out(out, text.into_raw(), "out") }
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn rm_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: allocated by `CString::into_raw` above.
        drop(unsafe { CString::from_raw(s) });
    }
}

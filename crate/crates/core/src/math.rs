//! Float helpers routed through `libm` so results are bit-identical on every
//! platform, with or without `std`.

pub fn ln(x: f64) -> f64 {
    libm::log(x)
}

pub fn exp(x: f64) -> f64 {
    libm::exp(x)
}

pub fn powf(base: f64, exp: f64) -> f64 {
    libm::pow(base, exp)
}

pub fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

pub fn abs(x: f64) -> f64 {
    libm::fabs(x)
}

pub fn floor(x: f64) -> f64 {
    libm::floor(x)
}

pub fn ceil(x: f64) -> f64 {
    libm::ceil(x)
}

/// Ceiling of a nonnegative float as a sample count.
///
/// A tiny downward nudge keeps expressions that are mathematically integral
/// (e.g. `8 * ln(2/eps)` at `eps = 2/e^8`) from rounding up one past the
/// intended value when the float computation lands a hair above the integer.
pub fn ceil_count(x: f64) -> usize {
    let v = ceil(x - 1e-9);
    if v <= 0.0 {
        0
    } else {
        v as usize
    }
}

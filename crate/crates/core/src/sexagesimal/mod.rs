//! Arc quantities in the minute / second / third system.

mod arc;
mod roots;
mod text;

pub(crate) use arc::round_rational;
pub use arc::{
    round_to_thirds, ArcThirds, Components, RadiusConstant, RationalArc, Rounding, Sign,
    THIRDS_PER_MINUTE, THIRDS_PER_SECOND,
};
pub use roots::{
    cbrt_floor, exact_sqrt, icbrt_rational, isqrt_rational, sqrt_floor, DEFAULT_ROOT_PRECISION,
};
pub use text::{format_sexagesimal, format_with, parse_sexagesimal, Primes};

//! Critical-line zeros, η_t, and location and counting of a-points.

mod apoints;
mod contour;
mod zeros;

pub use apoints::{
    apoint_main_term, count_apoints, find_apoints, online_apoint_test, APoint, APointCount, APointScan,
    SeedKind, WindowCheck, APOINT_TOL, CHECK_WINDOW, DEDUP_RADIUS,
};
pub use contour::{counting_rect, right_edge, winding_number, Rect, PROXIMITY};
pub use zeros::{
    eta, find_zeros, riemann_von_mangoldt, OffLineZero, ZeroOrdinate, ZeroSet, MAX_SUBDIVISION, ZERO_TOL,
};

//! Scalar bound for the matrix kernels.
//!
//! The kernels only need ring arithmetic plus sign queries, so they are
//! generic over any signed scalar: arbitrary-precision integers and rationals
//! for the exact paths, `f64` for the one numeric path, and machine integers
//! for small internal constructions.

use std::fmt::{Debug, Display};

use num_traits::Signed;

/// Any signed, cloneable, printable number type.
///
/// `Div` (inherited through `Signed: Num`) is used only where division is
/// exact by construction, e.g. inside fraction-free elimination.
pub trait Scalar: Signed + Clone + PartialEq + Debug + Display + 'static {}

impl<T> Scalar for T where T: Signed + Clone + PartialEq + Debug + Display + 'static {}

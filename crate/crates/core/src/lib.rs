//! Exact computations with (3,3)-split Jacobians of genus-2 curves.

pub mod algebra;
pub mod coverings;
pub mod gluing;
pub mod hesse;
pub mod invariants;
pub mod worked;

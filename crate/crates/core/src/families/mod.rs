//! Families of independent r-sets and the family-level machinery: stars,
//! shadows, rotations, the Talbot map and `δ`/`Δ` compressions.

mod family;
mod io;
mod ops;
mod vertex_set;

pub use family::Family;
pub use io::{parse_family, write_family};
pub use ops::{
    compress_family, compress_set, count_independent, independent_rsets, is_intersecting,
    rotate, rotate_family, shadow, star, talbot_family, talbot_map,
};
pub use vertex_set::{VertexSet, MAX_VERTICES};

//! Color vectors, regions and the validity rules for buffers.

mod params;
mod region;
mod tuple;
mod vector;

pub use params::{choose2, BufferParams, ParamError};
pub use region::{classify_region, RegionKind};
pub use tuple::{check_validity, clique_vector, construct_valid_tuple, Property, Tuple, Validity};
pub use vector::{border_distance, is_vectorially_proper, swap_coordinates, ColorVector};

//! The general engine: fractional ideals given by arbitrary (non-monomial)
//! generators, handled as finite-dimensional coefficient subspaces.

mod ideal;
mod parse;
mod series;

pub use ideal::FractionalIdeal;
pub use parse::{parse_generator_list, parse_series};
pub use series::TruncatedSeries;

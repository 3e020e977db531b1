//! Lines and quadrics in `P^3`: Plücker coordinates, incidence, transversals, rulings,
//! 5-secants and seeded random configurations.

pub mod config;
pub mod line;
pub mod quadric;

pub use config::{
    has_five_secant, random_line, random_point_on, random_skew_config, subsets, tangent_line, transversals_of_four,
    ConfigFile, FiveSecant, LineConfiguration, Transversals, RETRIES_PER_LINE,
};
pub use line::{LineP3, Point, PLUCKER_PAIRS};
pub use quadric::{quadric_through, quadric_through_sampled, ruling_line, QuadricSurface, RulingFamily, RulingParam};

#[cfg(test)]
mod tests;

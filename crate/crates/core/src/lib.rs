pub mod diagram;
pub mod error;
pub mod fiber;
pub mod groups;
pub mod kirby;
pub mod random;
pub mod satellite;
pub mod word;

pub use diagram::{Band, BandedUnlink, Component, Endpoint, MarkedCurve, PairCancel};
pub use error::{Error, Result};
pub use word::{Letter, Word};

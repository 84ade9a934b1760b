pub mod constructions;
pub mod enumerate;
pub mod error;
pub mod extension;
pub mod format;
pub mod limits;
pub mod names;
pub mod permgroup;
pub mod innermaps;
pub mod report;
pub mod rightloop;
pub mod samples;
pub mod twistedaut;
pub mod twistedsub;

pub use error::{Error, Result};
pub use limits::Limits;
pub use permgroup::{GroupTable, Perm, PermGroup};
pub use rightloop::RightLoop;

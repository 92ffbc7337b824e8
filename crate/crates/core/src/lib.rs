//! q-characters of fundamental modules of type C_n quantum affine algebras,
//! computed as sums over admissible lattice paths and checked against the
//! kernels of the screening operators.

pub mod cartan;
pub mod error;
pub mod exec;
pub mod laurent;
pub mod paths;
pub mod qchar;
pub mod render;
pub mod screening;
pub mod verify;

pub use cartan::{cartan_c, CartanC};
pub use error::{Error, Result};
pub use laurent::{LaurentMonomial, LaurentPoly, YIndex};
pub use paths::{Corner, Path, PathContext, Polarity};
pub use qchar::{q_character, QCharacter};
pub use screening::{in_kernel, CertificateReport};

//! Mapping class groups of a surface with one boundary component, computed
//! through their faithful action on the free fundamental group.

pub mod aut;
pub mod curves;
pub mod error;
pub mod expr;
pub mod harness;
pub mod homology;
pub mod mcg;
pub mod names;
pub mod presentation;
pub mod ribbon;
pub mod surface;
pub mod word;

pub use aut::Automorphism;
pub use curves::CurveRef;
pub use error::{Error, Result};
pub use expr::Expr;
pub use homology::SympMatrix;
pub use mcg::{Calibration, Engine, MappingClass};
pub use names::{CatalogName, CurveName};
pub use surface::{BaseCurve, SurfaceModel};
pub use word::{CyclicKey, Word};

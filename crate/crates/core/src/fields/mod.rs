//! Smooth fields on a chart and the differential calculus over them.

pub mod connection;
pub mod curvature;
pub mod expr;
pub mod extensor_field;
pub mod frames;
pub mod multivector;
pub mod operator;
pub mod presets;

pub use connection::Connection;
pub use curvature::{cartan_theta, curvature, curvature_R, curvature_extensor, torsion, torsion_T, torsion_tensor};
pub use expr::{Chart, Expr, ScalarField};
pub use extensor_field::{ce_on_field, epe_on_field, ExtensorField};
pub use frames::{gamma_split, jacobian, partial_a, relative_connection, split_operator, FrameField};
pub use multivector::{lie_bracket, FormField, MultiformField, MultivectorField, VectorField};
pub use operator::OperatorField;
pub use presets::Preset;

//! Exact exterior algebra on flat Lorentzian, Galilean and Carrollian
//! spacetimes, with the associated Hodge star operators, frame changes and
//! the electrodynamics built on top of them.
//!
//! Everything is generic over a [`Scalar`]; the aliases below fix it to
//! arbitrary-precision rationals, which is what the checks and the CLI use.

pub mod error;
pub mod fields;
pub mod form;
pub mod hodge;
pub mod literal;
pub mod matrix;
pub mod multi_index;
pub mod poly;
pub mod scalar;
pub mod structure;
pub mod table;
pub mod transform;
pub mod verify;

pub use error::{Error, Result};
pub use fields::{
    build_f, check_boost_covariance, extract_equations, star_field, vector_calculus, EquationSet,
    FieldFile, PolyForm, Residual, Tag, VectorField3,
};
pub use form::{Form, SpatialForm};
pub use hodge::{
    hat_star, mixed_epsilon, star_closed, star_oracle, star_table_4d, MixedEpsilon, StarVariant,
};
pub use literal::{format_form, parse_form};
pub use matrix::Matrix;
pub use multi_index::{levi_civita, MultiIndex, MAX_DIM};
pub use poly::{parse_polynomial, Polynomial};
pub use scalar::Scalar;
pub use structure::{
    validate_adapted, Normalization, SpacetimeKind, SpacetimeStructure, StructureDoc, Violation,
};

pub use table::{format_star_table, star_table, TableLine};
pub use transform::{
    check_invariance, check_naturality, pullback_form, pullback_structure, AffineMap, FrameChange,
};

pub type Rational = num_rational::BigRational;
pub type RForm = Form<Rational>;
pub type RMatrix = Matrix<Rational>;
pub type RStructure = SpacetimeStructure<Rational>;
pub type F64Form = Form<f64>;

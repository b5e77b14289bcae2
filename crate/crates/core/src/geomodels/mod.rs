//! Invariant-form models of compact complex manifolds: tori, nilmanifolds
//! and their products, with wedge, integration and the dimension predictors.

mod form;
mod lie;
mod model;
mod predict;

pub use form::{bidegree, conjugate, monomial, wedge_sign, Form, Generator, Mask};
pub use lie::{LieModelSpec, StructureTerm};
pub use model::{
    bott_chern_dim, lie_model, point_model, product_model, torus_model, BasisElement,
    ModelDoubleComplex, MAX_MODEL_DIM,
};
pub use predict::{
    blowup_predict, degeneration_equivalence, hodge_filtration_projective_predict, kunneth_predict,
    leray_hirsch_predict, projective_bundle_predict, DegenerationReport, HyperTable,
};

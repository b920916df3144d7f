//! Exact symbolic construction of κ-deformed inhomogeneous orthogonal Hopf
//! algebras `U(iso(g))[[h]]`, `h = 1/κ`, and machine verification of their
//! identities modulo `h^{N+1}`.

pub mod algebra;
pub mod basis;
pub mod cli;
pub mod config;
pub mod error;
pub mod hopf;
pub mod json;
pub mod lie;
pub mod majid_ruegg;
pub mod metric;
pub mod minkowski;
pub mod orbit;
pub mod pbw;
pub mod render;
pub mod report;
pub mod scalar;
pub mod series;
pub mod tensor;
pub mod twist;
pub mod wedge;

pub use algebra::{casimir, contract_tau, Algebra, AlgebraElement, VectorTau};
pub use error::{Error, Result};
pub use lie::Generator;
pub use metric::Metric;
pub use scalar::{GaussRational, Rational};
pub use series::HSeries;
pub use tensor::{Placement, TensorElement};
pub use wedge::{omega, r_matrix, schouten_square, WedgeElement};
pub use hopf::DeformationContext;
pub use minkowski::{MinkowskiElement, ModuleAction};
pub use orbit::{classify_orbit, OrbitClassification};
pub use report::{CheckResult, VerificationReport};
pub use basis::{lightcone_decompose, orthogonal_decompose, BasisChange};

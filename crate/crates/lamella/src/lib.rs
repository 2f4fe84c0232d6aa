//! Lamella builds valid curvilinear high-order meshes with highly stretched
//! boundary-layer elements out of coarse hybrid linear meshes.
//!
//! The pipeline mirrors the stages of a semi-structured mesh generator:
//!
//! 1. [`geom`] provides an analytic parametric geometry kernel (curves,
//!    surfaces, projection) together with built-in benchmark geometries that
//!    come with a coarse macro mesh: a single near-field layer of prisms and
//!    junction hexahedra wrapped around the walls, and far-field tetrahedra.
//! 2. [`condition`] balances line divisions (integer programming), smooths
//!    division nodes and checks/enforces rotational periodicity.
//! 3. [`hogen`] upgrades the linear mesh to polynomial order `P` bottom-up
//!    (curve edges, surface edges, surface face interiors, volume interiors)
//!    using spring-energy minimisation in the parametric space of the CAD
//!    entities.
//! 4. [`blsplit`] splits the near-field macro elements into layers of thin
//!    elements through the element mapping, in one direction for prisms and
//!    in two directions for junction hexahedra, preserving validity.
//! 5. [`io`] serializes meshes to a canonical JSON format, exports legacy
//!    VTK for visualisation and computes quality statistics.
//!
//! [`mesh`] holds the mesh data model and [`refelem`] the reference elements,
//! nodal bases and Jacobian machinery everything else is built on.
//!
//! With the default `parallel` feature the per-element and per-entity loops
//! run on rayon; disabling it yields a dependency-free sequential build with
//! identical (bit-for-bit) results.

pub mod blsplit;
pub mod condition;
pub mod error;
pub mod geom;
pub mod hogen;
pub mod io;
pub mod mesh;
pub mod parallel;
pub mod refelem;

pub use error::Error;

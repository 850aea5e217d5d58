//! Cluster categories of valued Dynkin quivers, computed exactly.
//!
//! The crate models the bounded derived category of a representation-finite
//! hereditary algebra combinatorially and forms its orbit categories: the
//! cluster category (orbit by the inverse translate composed with shift) and
//! the root category (orbit by the double shift). On top of that it carries
//! out tilting theory over exact rational arithmetic: hom and extension
//! spaces, BGP reflection functors on objects and morphisms, tilting-set
//! enumeration, cluster-tilted algebras as trivial extensions, quotient
//! category dimensions, and Grothendieck-group quotients in Smith normal
//! form.

pub mod algebra;
pub mod cache;
pub mod cluster;
pub mod derived;
pub mod dot;
pub mod linalg;
pub mod orbit;
pub mod quiver;
pub mod quiverfile;
pub mod rep;
pub mod report;
pub mod roots;
pub mod verify;

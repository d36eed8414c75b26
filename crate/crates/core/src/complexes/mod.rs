//! Facet-listed simplicial complexes, subword complexes, isomorphism and
//! edge-subdivision search.

mod iso;
mod simplicial;
mod subdivision;
mod subword;

pub use iso::are_isomorphic;
pub(crate) use simplicial::maximal_cliques;
pub use simplicial::{
    cross_polytope_boundary, edge_subdivide, euler_characteristic, f_vector, is_flag, ComplexJson, SimplicialComplex,
    Vertex,
};
pub use subdivision::{
    find_subdivision_sequence, SearchBudget, SearchOutcome, SubdivisionCertificate, SubdivisionStep,
};
pub use subword::{is_spherical, subword_complex, SubwordComplex};


//! Exact (co)homology, products and manifold checks for real moment-angle
//! complexes `(D¹,S⁰)^K` and polyhedral products `(D^{j_i},S^{j_i-1})^K`.

pub mod cells;
pub mod dga;
pub mod error;
pub mod homology;
pub mod manifold;
pub mod products;
pub mod simplicial;
pub mod vertex_set;

pub use cells::{cellular_homology, CellChain, CellWord, Flavor, HomologyRoute, WordComplex};
pub use dga::{Dga, DgaElement, DgaMonomial};
pub use error::{MacError, Result};
pub use homology::{GradedHomology, HomologyGroup};
pub use manifold::{manifold_verdict, ManifoldVerdict, TopologicalStatus};
pub use simplicial::{catalog, JTuple, SimplicialComplex};
pub use vertex_set::VertexSet;

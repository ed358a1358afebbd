//! so(p,q), its decompositions and element classification.

pub mod algebra;
pub mod element;
pub mod roots;
pub mod subalgebra;
pub mod subspace;

pub use algebra::{make_so, Coords, LieAlgebra};
pub use element::{classify_element, jacobson_morozov, ElementClass, Sl2Triple};
pub use roots::{iwasawa, root_decomposition, weyl_reflection, Iwasawa, Reflection, Root, RootDecomposition};
pub use subalgebra::{is_subalgebra, Closure, ClosureCertificate, Subalgebra};
pub use subspace::Subspace;
